//! Grothendieck-group bookkeeping for GSp4 in characteristic p: Weyl modules
//! W(λ), simple modules F(λ), how the former break into the latter for
//! restricted λ, and Serre weights of the finite group GSp4(F_p).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::alcove::{self, AlcovePosition, Reflection};
use crate::error::{Error, Result};
use crate::lattice::{is_dominant, is_regular, is_restricted, Prime, Weight, WeylElement, RHO};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// The Weyl module W(λ).
    Weyl(Weight),
    /// The simple module F(λ).
    Simple(Weight),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Weyl(l) => write!(f, "W{l}"),
            Symbol::Simple(l) => write!(f, "F{l}"),
        }
    }
}

/// A finite Z-linear combination of symbols. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VirtualSum {
    terms: BTreeMap<Symbol, i64>,
}

impl VirtualSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(s: Symbol) -> Self {
        let mut v = Self::new();
        v.add(s, 1);
        v
    }

    pub fn add(&mut self, s: Symbol, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.terms.entry(s).or_insert(0);
        *e += m;
        if *e == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn add_sum(&mut self, other: &VirtualSum, scale: i64) {
        for (s, m) in other.iter() {
            self.add(s, scale * m);
        }
    }

    pub fn get(&self, s: &Symbol) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, i64)> + '_ {
        self.terms.iter().map(|(s, m)| (*s, *m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<(Symbol, i64)> for VirtualSum {
    fn from_iter<I: IntoIterator<Item = (Symbol, i64)>>(iter: I) -> Self {
        let mut v = VirtualSum::new();
        for (s, m) in iter {
            v.add(s, m);
        }
        v
    }
}

impl fmt::Display for VirtualSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, m)) in self.iter().enumerate() {
            match (i, m < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.abs() != 1 {
                write!(f, "{}", m.abs())?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Moves W(λ) to a dominant highest weight via W(w•λ) = sgn(w) W(λ).
///
/// Returns sign 0 when λ + ρ̃ lies on a reflecting hyperplane, in which case
/// W(λ) vanishes.
pub fn normalize_weyl(l: Weight) -> (i64, Option<Weight>) {
    let s = l + RHO;
    if s.a == 0 || s.b == 0 || s.a.abs() == s.b.abs() {
        return (0, None);
    }
    for w in WeylElement::ALL {
        let t = w.act(s);
        if t.a > t.b && t.b > 0 {
            return (w.sign(), Some(t - RHO));
        }
    }
    unreachable!("every regular orbit meets the dominant chamber")
}

/// Simple constituents of W(λ) for dominant p-restricted λ.
pub fn decompose_weyl(l: Weight, p: Prime) -> Result<VirtualSum> {
    if !is_restricted(l, p) {
        return Err(Error::UnsupportedWeight(l));
    }
    let mut v = VirtualSum::single(Symbol::Simple(l));
    let second = match alcove::classify(l, p) {
        AlcovePosition::Interior(0) => None,
        AlcovePosition::Interior(i) => {
            Some(alcove::wall_reflect(Reflection::from_index(i - 1).unwrap(), l, p))
        }
        AlcovePosition::Wall(_) => {
            let (x, y) = l.shifted();
            let q = p.get();
            let exceptional = (x - y == q && q < 2 * y && y < q) || (q == 2 && l.a == 1 && l.b == 1);
            exceptional.then(|| alcove::wall_reflect(Reflection::R2, l, p))
        }
        AlcovePosition::Outside => unreachable!("restricted weights lie in the alcove region"),
    };
    if let Some(m) = second {
        v.add(Symbol::Simple(m), 1);
    }
    Ok(v)
}

/// The Weyl dimension polynomial, extended antisymmetrically to all of X(T).
pub fn virtual_dim(l: Weight) -> i64 {
    let (x, y) = l.shifted();
    x * y * (x - y) * (x + y) / 6
}

/// Replaces every W-symbol by its simple constituents. F-symbols pass through.
pub fn jh_semisimplify(v: &VirtualSum, p: Prime) -> Result<VirtualSum> {
    let mut out = VirtualSum::new();
    for (s, m) in v.iter() {
        match s {
            Symbol::Simple(_) => out.add(s, m),
            Symbol::Weyl(l) => {
                if let (sign, Some(d)) = normalize_weyl(l) {
                    out.add_sum(&decompose_weyl(d, p)?, sign * m);
                }
            }
        }
    }
    Ok(out)
}

/// Fails on the first negative coefficient.
pub fn ensure_effective(v: &VirtualSum) -> Result<()> {
    match v.iter().find(|(_, m)| *m < 0) {
        Some((s, m)) => {
            let (Symbol::Simple(weight) | Symbol::Weyl(weight)) = s;
            Err(Error::NegativeMultiplicity { weight, multiplicity: m })
        }
        None => Ok(()),
    }
}

/// An irreducible representation of GSp4(F_p), in canonical form:
/// λ p-restricted with `0 ≤ c < 2(p−1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SerreWeight {
    lam: Weight,
    p: Prime,
}

impl SerreWeight {
    pub fn lambda(&self) -> Weight {
        self.lam
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn is_regular(&self) -> bool {
        is_regular(self.lam, self.p)
    }
}

impl fmt::Display for SerreWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.lam)
    }
}

impl Serialize for SerreWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SerreWeight", 2)?;
        st.serialize_field("lambda", &self.lam)?;
        st.serialize_field("regular", &self.is_regular())?;
        st.end()
    }
}

fn c_window(c: i64, p: Prime) -> i64 {
    c.rem_euclid(2 * p.q())
}

pub fn canonical_serre(l: Weight, p: Prime) -> Result<SerreWeight> {
    if !is_restricted(l, p) {
        return Err(Error::UnsupportedWeight(l));
    }
    Ok(SerreWeight { lam: Weight::raw(l.a, l.b, c_window(l.c, p)), p })
}

/// F(μ′) for the unique-up-to-(p−1)X⁰(T) p-regular μ′ with μ − μ′ ∈ (p−1)X(T).
pub fn regular_representative(m: Weight, p: Prime) -> SerreWeight {
    let q = p.q();
    let v = m.b.div_euclid(q);
    let u = v + (m.a - m.b).div_euclid(q);
    // subtract (p−1)(u, v; u+v), which lies in (p−1)X(T)
    let r = Weight::raw(m.a - q * u, m.b - q * v, m.c - q * (u + v));
    debug_assert!(is_regular(r, p));
    SerreWeight { lam: Weight::raw(r.a, r.b, c_window(r.c, p)), p }
}

/// ℛ(F(λ)) = F(w0 • (λ − pρ̃))_reg.
pub fn operator_r(l: Weight, p: Prime) -> Result<SerreWeight> {
    if !is_dominant(l) || !is_restricted(l, p) {
        return Err(Error::UnsupportedWeight(l));
    }
    Ok(regular_representative(WeylElement::W0.dot(l - p.get() * RHO), p))
}

/// Tensoring with the c-th power of the similitude character.
pub fn twist_weight(f: SerreWeight, c: i64) -> SerreWeight {
    let l = f.lam;
    SerreWeight { lam: Weight::raw(l.a, l.b, c_window(l.c + 2 * c, f.p)), p: f.p }
}

pub fn enumerate_serre_weights(p: Prime, regular_only: bool) -> Vec<SerreWeight> {
    let n = p.get();
    let bound = if regular_only { n - 1 } else { n };
    let mut out = Vec::new();
    for s in 0..bound {
        for b in 0..bound {
            let a = s + b;
            for c in 0..2 * p.q() {
                if (c - a - b).rem_euclid(2) == 0 {
                    out.push(SerreWeight { lam: Weight::raw(a, b, c), p });
                }
            }
        }
    }
    out.sort();
    out
}
