//! Tame inertial types τ(1, μ) = μ̄ ∘ ω and the p-ordinary bookkeeping that
//! produces them from Hecke data.
//!
//! Two weights give the same type when `μ′ ∈ W_G μ + (p−1)X(T)`. Each class
//! has a representative `(x, y; z)` with `0 ≤ y ≤ x`, `2x ≤ p − 1` and
//! `0 ≤ z < 2(p−1)`; ties are broken lexicographically.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{spin_cochar, Prime, Weight, WeylElement, SIMILITUDE};

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TameType {
    #[serde(serialize_with = "ser_prime")]
    pub p: Prime,
    pub mu: Weight,
    pub raw_mu: Weight,
}

fn ser_prime<S: serde::Serializer>(p: &Prime, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_i64(p.get())
}

impl PartialEq for TameType {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.mu == other.mu
    }
}

impl Eq for TameType {}

impl fmt::Display for TameType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "τ(1,{}) at p={}", self.mu, self.p)
    }
}

impl TameType {
    /// `(x, y)` of the canonical representative.
    pub fn xy(&self) -> (i64, i64) {
        (self.mu.a, self.mu.b)
    }

    /// 0 < y < x < (p−1)/2: the twelve Jantzen terms are pairwise distinct
    /// dominant Weyl modules.
    pub fn is_generic(&self) -> bool {
        let (x, y) = self.xy();
        0 < y && y < x && 2 * x < self.p.q()
    }

    /// Generic with `y ≥ 2` and `x − y ≥ 2`: the twenty predicted weights are
    /// then pairwise distinct. At `y = 1` or `x − y = 1` some of them land on
    /// walls and coincide.
    pub fn has_twenty_weights(&self) -> bool {
        let (x, y) = self.xy();
        self.is_generic() && y >= 2 && x - y >= 2
    }

    /// Exponents of ω on the diagonal of the type.
    pub fn exponents(&self) -> [i64; 4] {
        spin_cochar(self.mu)
    }
}

/// `μ′ − μ ∈ (p−1)X(T)`, i.e. divisible by p−1 with quotient in X(T).
pub fn in_q_lattice(d: Weight, p: Prime) -> bool {
    let q = p.q();
    if d.a % q != 0 || d.b % q != 0 || d.c % q != 0 {
        return false;
    }
    (d.c / q - d.a / q - d.b / q).rem_euclid(2) == 0
}

pub fn types_equivalent(m: Weight, m2: Weight, p: Prime) -> bool {
    WeylElement::ALL.into_iter().any(|w| in_q_lattice(m2 - w.act(m), p))
}

fn canonical_mu(m: Weight, p: Prime) -> Weight {
    let q = p.q();
    let mut best: Option<Weight> = None;
    for w in WeylElement::ALL {
        let t = w.act(m);
        let (x, y) = (t.a.rem_euclid(q), t.b.rem_euclid(q));
        if y > x || 2 * x > q {
            continue;
        }
        let (u, v) = ((t.a - x) / q, (t.b - y) / q);
        let z = (t.c - q * (u + v)).rem_euclid(2 * q);
        let cand = Weight::raw(x, y, z);
        if best.is_none_or(|b| cand < b) {
            best = Some(cand);
        }
    }
    best.expect("every class meets the fundamental region")
}

pub fn type_from_weight(m: Weight, p: Prime) -> TameType {
    TameType { p, mu: canonical_mu(m, p), raw_mu: m }
}

/// Builds the type with diagonal ω-exponents `e`, read modulo p−1.
///
/// The symplectic pairing is `{e1, e4} | {e2, e3}` as given. When that pairing
/// is unbalanced the exponents are sorted and the outer/inner pairing, then the
/// remaining two, are tried. Several balanced pairings can give inequivalent
/// types, which is why the caller's order wins.
pub fn type_from_exponents(e: [i64; 4], p: Prime) -> Result<TameType> {
    let q = p.q();
    let given = e.map(|x| x.rem_euclid(q));
    let mut sorted = given;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let candidates = std::iter::once(given).chain(
        [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 3, 1]].map(|[i, j, k, l]| [sorted[i], sorted[j], sorted[k], sorted[l]]),
    );
    for [e1, e2, e3, e4] in candidates {
        if (e1 + e4 - e2 - e3).rem_euclid(q) == 0 {
            let e4 = e2 + e3 - e1;
            let m = Weight::raw(e1 - e3, e1 - e2, e1 + e4);
            return Ok(type_from_weight(m, p));
        }
    }
    Err(Error::NotSymplecticallyBalanced(e))
}

pub(crate) fn check_modular_weight(k: i64, ell: i64) -> Result<()> {
    if k >= ell && ell >= 3 {
        Ok(())
    } else {
        Err(Error::InvalidModularWeight { k, ell })
    }
}

/// The type of a p-ordinary form of weight (k, ℓ): μ = (k−1, ℓ−2; k+ℓ−3).
pub fn type_from_modular_weight(k: i64, ell: i64, p: Prime) -> Result<TameType> {
    check_modular_weight(k, ell)?;
    Ok(type_from_weight(Weight::raw(k - 1, ell - 2, k + ell - 3), p))
}

/// Every type at p, once each, by its canonical representative.
pub fn canonical_types(p: Prime) -> Vec<TameType> {
    let q = p.q();
    let mut out = Vec::new();
    for x in 0..=q / 2 {
        for y in 0..=x {
            for z in ((x + y) % 2..2 * q).step_by(2) {
                let t = type_from_weight(Weight::raw(x, y, z), p);
                if t.mu == t.raw_mu {
                    out.push(t);
                }
            }
        }
    }
    out
}

pub fn twist_type(t: &TameType, c: i64) -> TameType {
    type_from_weight(t.mu + c * SIMILITUDE, t.p)
}

/// Every ordered exponent sequence `0 = i0 ≤ i1 ≤ i2 ≤ i3` with `i_j ≤ j(p−2)`
/// obtainable from the characters `ω^{e_j}` by reordering and twisting.
/// With `symplectic`, only sequences with `i0 + i3 = i1 + i2` are kept.
pub fn exponent_orderings(e: [i64; 4], p: Prime, symplectic: bool) -> Vec<[i64; 4]> {
    let q = p.q();
    let n = p.get();
    let mut out = Vec::new();
    for perm in permutations4() {
        let base = e[perm[0]];
        let res: [i64; 3] = std::array::from_fn(|j| (e[perm[j + 1]] - base).rem_euclid(q));
        let lifts = move |j: usize| {
            let cap = j as i64 * (n - 2);
            (0..).map(move |m| res[j - 1] + m * q).take_while(move |v| *v <= cap)
        };
        for i1 in lifts(1) {
            for i2 in lifts(2).filter(|v| *v >= i1) {
                for i3 in lifts(3).filter(|v| *v >= i2) {
                    if !symplectic || i3 == i1 + i2 {
                        out.push([0, i1, i2, i3]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|b| *b != a) {
            for c in (0..4).filter(|c| *c != a && *c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrdinarityProfile {
    pub k: i64,
    pub ell: i64,
    pub root_valuations: [i64; 4],
    pub exponents: [i64; 4],
    /// Unramified twists `nr(u_j)` on the diagonal, bottom to top.
    pub unit_labels: [&'static str; 4],
    pub unit_relation: &'static str,
}

pub fn root_valuations(k: i64, ell: i64) -> Result<[i64; 4]> {
    check_modular_weight(k, ell)?;
    Ok([0, ell - 2, k - 1, k + ell - 3])
}

pub fn ordinarity_profile(k: i64, ell: i64) -> Result<OrdinarityProfile> {
    let v = root_valuations(k, ell)?;
    Ok(OrdinarityProfile {
        k,
        ell,
        root_valuations: v,
        exponents: v,
        unit_labels: ["u0", "u1", "u2", "u3"],
        unit_relation: "u0*u3 = u1*u2",
    })
}

/// Valuations of the first two Hecke eigenvalues at p.
pub fn ordinarity_check(k: i64, ell: i64, a1_val: i64, a2_val: i64) -> Result<bool> {
    check_modular_weight(k, ell)?;
    Ok(a1_val == 0 && a2_val == ell - 3)
}

/// `(k, ℓ, p_small)` from ordered exponents `(0, i1, i2, i3)` with `i1 < i2`.
pub fn exponents_to_modular_weight(i: [i64; 4], p: Prime) -> Result<(i64, i64, bool)> {
    let [i0, i1, i2, i3] = i;
    if !(i0 == 0 && i0 <= i1 && i1 < i2 && i2 <= i3) {
        return Err(Error::ExponentsNotOrdered(i));
    }
    Ok((i2 + 1, i1 + 2, i3 < p.q()))
}

/// `similitude_of_c` is ν(ρ̄(c)) for complex conjugation c.
pub fn is_motivically_odd(similitude_of_c: i64, p: Prime) -> bool {
    p.get() == 2 || similitude_of_c == -1
}
