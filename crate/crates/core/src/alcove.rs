//! The four restricted alcoves C0..C3, their walls, and the order ↑ generated
//! by the upward reflections between consecutive alcoves.
//!
//! Everything is computed in `(x, y) = λ + ρ̃`. The alcoves are
//!
//! ```text
//! C0: x > y > 0,     x + y < p
//! C1: x + y > p,     y < x < p
//! C2: x − y < p < x, x + y < 2p
//! C3: y < p,         x + y > 2p,  x − y < p
//! ```
//!
//! and their closures cover `{0 ≤ y ≤ x, x − y ≤ p, y ≤ p}`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Prime, Weight};

/// An affine line bounding one of the alcoves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WallLine {
    XEqY,
    YZero,
    SumP,
    XEqP,
    Sum2P,
    DiffP,
    YEqP,
}

impl WallLine {
    pub const ALL: [WallLine; 7] = [
        WallLine::XEqY,
        WallLine::YZero,
        WallLine::SumP,
        WallLine::XEqP,
        WallLine::Sum2P,
        WallLine::DiffP,
        WallLine::YEqP,
    ];

    pub fn label(self) -> &'static str {
        match self {
            WallLine::XEqY => "x=y",
            WallLine::YZero => "y=0",
            WallLine::SumP => "x+y=p",
            WallLine::XEqP => "x=p",
            WallLine::Sum2P => "x+y=2p",
            WallLine::DiffP => "x-y=p",
            WallLine::YEqP => "y=p",
        }
    }

    fn tight(self, x: i64, y: i64, p: i64) -> bool {
        match self {
            WallLine::XEqY => x == y,
            WallLine::YZero => y == 0,
            WallLine::SumP => x + y == p,
            WallLine::XEqP => x == p,
            WallLine::Sum2P => x + y == 2 * p,
            WallLine::DiffP => x - y == p,
            WallLine::YEqP => y == p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlcovePosition {
    Interior(usize),
    Wall(Vec<WallLine>),
    Outside,
}

impl AlcovePosition {
    pub fn label(&self) -> String {
        match self {
            AlcovePosition::Interior(i) => format!("C{i}"),
            AlcovePosition::Wall(lines) => {
                let names: Vec<_> = lines.iter().map(|l| l.label()).collect();
                format!("wall:{}", names.join(","))
            }
            AlcovePosition::Outside => "outside".to_string(),
        }
    }
}

impl fmt::Display for AlcovePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for AlcovePosition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

fn in_open(i: usize, x: i64, y: i64, p: i64) -> bool {
    match i {
        0 => x > y && y > 0 && x + y < p,
        1 => x + y > p && y < x && x < p,
        2 => x - y < p && p < x && x + y < 2 * p,
        3 => y < p && x + y > 2 * p && x - y < p,
        _ => false,
    }
}

fn in_closed(i: usize, x: i64, y: i64, p: i64) -> bool {
    match i {
        0 => x >= y && y >= 0 && x + y <= p,
        1 => x + y >= p && y <= x && x <= p,
        2 => x - y <= p && p <= x && x + y <= 2 * p,
        3 => y <= p && x + y >= 2 * p && x - y <= p,
        _ => false,
    }
}

pub fn classify(l: Weight, p: Prime) -> AlcovePosition {
    let (x, y) = l.shifted();
    let p = p.get();
    if let Some(i) = (0..4).find(|&i| in_open(i, x, y, p)) {
        return AlcovePosition::Interior(i);
    }
    if (0..4).any(|i| in_closed(i, x, y, p)) {
        let lines = WallLine::ALL.into_iter().filter(|w| w.tight(x, y, p)).collect();
        return AlcovePosition::Wall(lines);
    }
    AlcovePosition::Outside
}

/// Indices of the alcove closures containing `l`, ascending.
pub fn closures(l: Weight, p: Prime) -> Vec<usize> {
    let (x, y) = l.shifted();
    (0..4).filter(|&i| in_closed(i, x, y, p.get())).collect()
}

pub fn in_region(l: Weight, p: Prime) -> bool {
    !closures(l, p).is_empty()
}

/// The lowest alcove whose closure holds `l`; used for ordering output.
pub fn lowest_closure(l: Weight, p: Prime) -> Option<usize> {
    closures(l, p).first().copied()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reflection {
    R0,
    R1,
    R2,
}

impl Reflection {
    pub const ALL: [Reflection; 3] = [Reflection::R0, Reflection::R1, Reflection::R2];

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Reflection in the wall between C_i and C_{i+1}; fixes the third coordinate.
pub fn wall_reflect(r: Reflection, l: Weight, p: Prime) -> Weight {
    let (x, y) = l.shifted();
    let p = p.get();
    let (x2, y2) = match r {
        Reflection::R0 => (p - y, p - x),
        Reflection::R1 => (2 * p - x, y),
        Reflection::R2 => (2 * p - y, 2 * p - x),
    };
    Weight::raw(x2 - 2, y2 - 1, l.c)
}

fn require_region(l: Weight, p: Prime) -> Result<()> {
    if in_region(l, p) {
        Ok(())
    } else {
        Err(Error::OutsideAlcoveRegion(l))
    }
}

/// Every weight reachable from `l` by upward steps `λ ↦ r_i(λ)` with `λ ∈ C̄_i`.
pub fn up_set(l: Weight, p: Prime) -> Result<BTreeSet<Weight>> {
    require_region(l, p)?;
    let mut seen = BTreeSet::from([l]);
    let mut queue = VecDeque::from([l]);
    while let Some(m) = queue.pop_front() {
        for i in closures(m, p) {
            if let Some(r) = Reflection::from_index(i) {
                let n = wall_reflect(r, m, p);
                if seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
    }
    Ok(seen)
}

pub fn up_leq(l: Weight, m: Weight, p: Prime) -> Result<bool> {
    require_region(m, p)?;
    Ok(up_set(l, p)?.contains(&m))
}

/// The unique λ′ ∈ C̄_j with λ ↑ λ′.
pub fn up_transport(l: Weight, j: usize, p: Prime) -> Result<Weight> {
    let ups = up_set(l, p)?;
    let mut hits = ups.into_iter().filter(|m| closures(*m, p).contains(&j));
    match (hits.next(), hits.next()) {
        (Some(m), None) => Ok(m),
        (Some(_), Some(_)) => unreachable!("transport to C{j} is unique"),
        (None, _) => Err(Error::TargetBelowSource { weight: l, target: j }),
    }
}

/// All integral weights of the closed alcove region, with third coordinate
/// chosen as the smallest non-negative value of the right parity.
pub fn region_points(p: Prime) -> Vec<Weight> {
    let p = p.get();
    let mut out = Vec::new();
    for y in 0..=p {
        for x in y..=y + p {
            let (a, b) = (x - 2, y - 1);
            let l = Weight::raw(a, b, (a + b).rem_euclid(2));
            if (0..4).any(|i| in_closed(i, x, y, p)) {
                out.push(l);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64, c: i64) -> Weight {
        Weight::new(a, b, c).unwrap()
    }

    fn p(n: i64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(w(4, 1, 5), p(17)), AlcovePosition::Interior(0));
        assert_eq!(classify(w(20, 13, 5), p(17)), AlcovePosition::Interior(3));
        // (x,y) = (p−1, p−1) sits on the diagonal wall of C̄1
        assert_eq!(
            classify(w(14, 15, 1), p(17)),
            AlcovePosition::Wall(vec![WallLine::XEqY])
        );
        assert_eq!(classify(w(1, 3, 0), p(17)), AlcovePosition::Outside);
        assert_eq!(classify(w(-3, -1, 0), p(17)), AlcovePosition::Outside);
        assert_eq!(classify(w(40, 0, 0), p(17)), AlcovePosition::Outside);
        assert_eq!(classify(w(2, 2, 0), p(7)).label(), "wall:x+y=p");
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(wall_reflect(Reflection::R0, w(4, 1, 5), p(17)), w(13, 10, 5));
        assert_eq!(wall_reflect(Reflection::R2, w(20, 13, 5), p(17)), w(18, 11, 5));
        let on_wall = Weight::from_shifted(17, 5, 1).unwrap();
        assert_eq!(wall_reflect(Reflection::R1, on_wall, p(17)), on_wall);
    }

    #[test]
    fn transport_examples() {
        let l = w(4, 1, 5);
        let q = p(17);
        assert_eq!(up_transport(l, 1, q).unwrap(), w(13, 10, 5));
        assert_eq!(up_transport(l, 3, q).unwrap(), w(21, 14, 5));
        assert_eq!(up_transport(l, 0, q).unwrap(), l);
        assert_eq!(
            up_set(l, q).unwrap(),
            BTreeSet::from([w(4, 1, 5), w(13, 10, 5), w(17, 10, 5), w(21, 14, 5)])
        );
        assert!(up_leq(l, w(13, 10, 5), q).unwrap());
        assert!(!up_leq(w(13, 10, 5), l, q).unwrap());
        assert!(up_leq(l, l, q).unwrap());
        let top = w(20, 13, 5);
        assert_eq!(up_set(top, q).unwrap(), BTreeSet::from([top]));
        assert_eq!(
            up_transport(top, 1, q),
            Err(Error::TargetBelowSource { weight: top, target: 1 })
        );
        assert!(matches!(
            up_set(w(1, 3, 0), q),
            Err(Error::OutsideAlcoveRegion(_))
        ));
    }

    #[test]
    fn wall_point_has_short_up_set() {
        let q = p(17);
        let l = Weight::from_shifted(10, 7, 0).unwrap();
        assert_eq!(classify(l, q).label(), "wall:x+y=p");
        assert_eq!(up_set(l, q).unwrap().len(), 3);
    }

    #[test]
    fn region_covers_closures() {
        for n in [2, 3, 5, 7, 11] {
            let q = p(n);
            let pts = region_points(q);
            for l in &pts {
                let (x, y) = l.shifted();
                assert!(0 <= y && y <= x && x - y <= n && y <= n);
                assert_ne!(classify(*l, q), AlcovePosition::Outside);
            }
            // the region is the full polygon {0 ≤ y ≤ x, x − y ≤ p, y ≤ p}
            assert_eq!(pts.len() as i64, (n + 1) * (n + 1));
        }
    }
}
