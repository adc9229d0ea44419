//! The predicted set 𝒲?(τ) of regular Serre weights for a tame type τ, computed
//! three independent ways:
//!
//! * **direct** – transport the eight weights ν′ with `τ ≅ τ(1, ν′+ρ̃)` upward
//!   through the alcoves and keep the p-regular results (production path);
//! * **jantzen** – semisimplify the twelve-term Weyl-module expansion of the
//!   reduction of the Deligne–Lusztig representation and apply ℛ;
//! * **table** – the closed-form list of twenty weights for weights (k, ℓ) with
//!   `k > ℓ > 3`, `k + ℓ < p + 1`.
//!
//! Third coordinates: the type `τ(1, (x, y; z))` is also `τ(1, (p−1−x, y; z+p−1))`,
//! not `τ(1, (p−1−x, y; z))`; the quotient `(1, 0; 0)` is not a character. Every
//! "B-column" weight therefore carries `z + p − 1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::alcove::{self, AlcovePosition};
use crate::error::{Error, Result};
use crate::lattice::{is_dominant, is_regular, spin_cochar, Prime, Weight, RHO};
use crate::modular::{self, SerreWeight, Symbol, VirtualSum};
use crate::tame::{self, TameType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Column {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "B")]
    B,
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Column::A => "A",
            Column::B => "B",
        })
    }
}

/// One of the eight starting weights ν′_{i,X}, with `ν′ ∈ C̄_i` generically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NuPrime {
    pub index: usize,
    pub column: Column,
    pub weight: Weight,
}

/// `(x, y)`-coordinates of ν′_{i,X} + ρ̃ for `μ = (x, y; _)`.
fn nu_prime_shapes(x: i64, y: i64, p: Prime) -> [(usize, Column, i64, i64); 8] {
    let q = p.q();
    [
        (0, Column::A, x, y),
        (0, Column::B, q - x, y),
        (1, Column::A, q - y, q - x),
        (1, Column::B, q - y, x),
        (2, Column::A, y + q, q - x),
        (2, Column::B, y + q, x),
        (3, Column::A, x + q, q - y),
        (3, Column::B, 2 * q - x, q - y),
    ]
}

/// The weights ν′ with ν′ + ρ̃ dominant and `τ ≅ τ(1, ν′ + ρ̃)`, up to (p−1)X⁰(T).
///
/// Each shape is tried with both admissible third coordinates `z` and `z + p − 1`
/// and kept only when it really defines the same type; generically exactly one
/// survives, but on degenerate types both can.
pub fn nu_primes(t: &TameType) -> Vec<NuPrime> {
    let (x, y) = t.xy();
    let z = t.mu.c;
    let q = t.p.q();
    let mut out = Vec::new();
    for (index, column, sx, sy) in nu_prime_shapes(x, y, t.p) {
        for c in [z, z + q] {
            let Ok(shifted) = Weight::new(sx, sy, c) else { continue };
            if !is_dominant(shifted) || !tame::types_equivalent(shifted, t.mu, t.p) {
                continue;
            }
            let weight = shifted - RHO;
            if !out.iter().any(|n: &NuPrime| n.weight == weight) {
                out.push(NuPrime { index, column, weight });
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    /// ν = ν′.
    Direct,
    /// Reached from a ν′ in the closure of the given alcove.
    Transported { from: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedWeight {
    pub weight: SerreWeight,
    pub alcove: AlcovePosition,
    pub provenance: Provenance,
    pub source_nu_prime: Weight,
    pub source_column: Column,
    pub source_index: usize,
}

impl PredictedWeight {
    pub fn lambda(&self) -> Weight {
        self.weight.lambda()
    }

    /// The lowest alcove closure containing the weight; the output sort key.
    pub fn alcove_index(&self) -> usize {
        alcove::lowest_closure(self.lambda(), self.weight.prime()).unwrap_or(usize::MAX)
    }

    pub fn is_direct(&self) -> bool {
        self.provenance == Provenance::Direct
    }
}

fn sort_predictions(v: &mut [PredictedWeight]) {
    v.sort_by_key(|w| (w.alcove_index(), w.lambda()));
}

/// 𝒲?(τ) from the eight ν′ and the order ↑.
pub fn predict_direct(t: &TameType) -> Vec<PredictedWeight> {
    let p = t.p;
    let mut found: BTreeMap<SerreWeight, PredictedWeight> = BTreeMap::new();
    for np in nu_primes(t) {
        let Ok(ups) = alcove::up_set(np.weight, p) else {
            debug_assert!(false, "ν′ = {} outside the alcove region", np.weight);
            continue;
        };
        for nu in ups.into_iter().filter(|n| is_regular(*n, p)) {
            let weight = modular::canonical_serre(nu, p).expect("regular weights are restricted");
            let provenance = if nu == np.weight {
                Provenance::Direct
            } else {
                Provenance::Transported { from: np.index }
            };
            let cand = PredictedWeight {
                weight,
                alcove: alcove::classify(nu, p),
                provenance,
                source_nu_prime: np.weight,
                source_column: np.column,
                source_index: np.index,
            };
            match found.get(&weight) {
                Some(old) if old.is_direct() || !cand.is_direct() => {}
                _ => {
                    found.insert(weight, cand);
                }
            }
        }
    }
    let mut out: Vec<_> = found.into_values().collect();
    sort_predictions(&mut out);
    out
}

/// The reduction of the Deligne–Lusztig representation V(τ) as twelve Weyl modules.
///
/// Terms from the A-family carry third coordinate `z + p − 1`, those of the
/// B-family carry `z`; see the module docs.
pub fn jantzen_profile(t: &TameType) -> VirtualSum {
    let (x, y) = t.xy();
    let q = t.p.q();
    let (za, zb) = (t.mu.c + q, t.mu.c);
    let terms = [
        (2 * q - x, q - y, za), // W_{3,A}
        (x + q, q - y, zb),     // W_{3,B}
        (y + q, x, za),         // W_{2,A}
        (y + q, q - x, zb),     // W_{2,B}
        (q - y, x, za),         // W_{1,A}
        (q - y, q - x, zb),     // W_{1,B}
        (q - x, y, za),         // W_{0,A}
        (x, y, zb),             // W_{0,B}
        (q - 1 - y, x - 1, za), // W_{1,A'}
        (q - 1 - y, q - 1 - x, zb), // W_{1,B'}
        (q - 2 - x, y, za),     // W_{0,A'}
        (x - 2, y, zb),         // W_{0,B'}
    ];
    terms
        .into_iter()
        .map(|(a, b, c)| (Symbol::Weyl(Weight::raw(a, b, c)), 1))
        .collect()
}

/// 𝒲?(τ) = ℛ(JH(V(τ)‾)) for generic τ.
pub fn predict_jantzen(t: &TameType) -> Result<BTreeSet<SerreWeight>> {
    if !t.is_generic() {
        return Err(Error::DegenerateType(t.mu));
    }
    let jh = modular::jh_semisimplify(&jantzen_profile(t), t.p)?;
    modular::ensure_effective(&jh)?;
    jh.iter()
        .map(|(s, _)| match s {
            Symbol::Simple(l) => modular::operator_r(l, t.p),
            Symbol::Weyl(_) => unreachable!("semisimplification leaves only simples"),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    #[serde(rename = "left")]
    Left,
    #[serde(rename = "right")]
    Right,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    /// `"C2"` for ν = ν′, `"C0->C2"` for a transported weight.
    pub row: &'static str,
    pub side: Side,
    /// ν + ρ̃.
    pub mu: Weight,
    pub weight: SerreWeight,
    pub alcove: AlcovePosition,
}

impl TableRow {
    pub fn is_direct(&self) -> bool {
        !self.row.contains("->")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GenericTable {
    pub k: i64,
    pub ell: i64,
    #[serde(serialize_with = "ser_prime")]
    pub p: Prime,
    pub rows: Vec<TableRow>,
    /// `k − ℓ = 1` or `k + ℓ = p`: one "C3" weight sits on the wall x + y = 2p.
    pub boundary_exception: bool,
}

fn ser_prime<S: serde::Serializer>(p: &Prime, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_i64(p.get())
}

impl GenericTable {
    pub fn weights(&self) -> BTreeSet<SerreWeight> {
        self.rows.iter().map(|r| r.weight).collect()
    }
}

pub(crate) fn check_table_range(k: i64, ell: i64, p: Prime) -> Result<()> {
    if k > ell && ell > 3 && k + ell < p.get() + 1 {
        Ok(())
    } else {
        Err(Error::GenericityViolated { k, ell, p: p.get() })
    }
}

/// `(row, left (x, y), right (x, y))` in ν + ρ̃ coordinates.
fn table_shapes(x: i64, y: i64, p: i64) -> [(&'static str, (i64, i64), (i64, i64)); 10] {
    [
        ("C0", (x, y), (p - 1 - x, y)),
        ("C1", (p - 1 - y, p - 1 - x), (p - 1 - y, x)),
        ("C0->C1", (p - y, p - x), (p - y, x + 1)),
        ("C2", (y + p - 1, p - 1 - x), (y + p - 1, x)),
        ("C1->C2", (y + p + 1, p - 1 - x), (y + p + 1, x)),
        ("C0->C2", (y + p, p - x), (y + p, x + 1)),
        ("C3", (x + p - 1, p - 1 - y), (2 * p - 2 - x, p - 1 - y)),
        ("C2->C3", (x + p + 1, p + 1 - y), (2 * p - x, p + 1 - y)),
        ("C1->C3", (x + p + 1, p - 1 - y), (2 * p - x, p - 1 - y)),
        ("C0->C3", (x + p, p - y), (2 * p - 1 - x, p - y)),
    ]
}

/// The twenty weights for τ ∼ diag(ω^{k+ℓ−3}, ω^{k−1}, ω^{ℓ−2}, 1).
pub fn generic_table(k: i64, ell: i64, p: Prime) -> Result<GenericTable> {
    check_table_range(k, ell, p)?;
    let (x, y) = (k - 1, ell - 2);
    let z = x + y;
    let mut rows = Vec::with_capacity(20);
    for (row, left, right) in table_shapes(x, y, p.get()) {
        for (side, (sx, sy), c) in [(Side::Left, left, z), (Side::Right, right, z + p.q())] {
            let mu = Weight::raw(sx, sy, c);
            let nu = mu - RHO;
            let weight = modular::canonical_serre(nu, p)?;
            rows.push(TableRow { row, side, mu, weight, alcove: alcove::classify(nu, p) });
        }
    }
    Ok(GenericTable { k, ell, p, rows, boundary_exception: k - ell == 1 || k + ell == p.get() })
}

/// `(k, ℓ)` when the type was supplied as `(k−1, ℓ−2; k+ℓ−3)` inside the table's range.
fn table_weight(t: &TameType) -> Option<(i64, i64)> {
    let m = t.raw_mu;
    let (k, ell) = (m.a + 1, m.b + 2);
    (m.c == m.a + m.b && check_table_range(k, ell, t.p).is_ok()).then_some((k, ell))
}

fn describe(s: &BTreeSet<SerreWeight>) -> String {
    let v: Vec<String> = s.iter().map(|w| w.lambda().to_string()).collect();
    v.join(" ")
}

fn compare(name: &str, direct: &BTreeSet<SerreWeight>, other: &BTreeSet<SerreWeight>) -> Result<()> {
    if direct == other {
        return Ok(());
    }
    let only_d: BTreeSet<_> = direct.difference(other).copied().collect();
    let only_o: BTreeSet<_> = other.difference(direct).copied().collect();
    Err(Error::RouteDisagreement(format!(
        "direct vs {name}: only direct [{}], only {name} [{}]",
        describe(&only_d),
        describe(&only_o)
    )))
}

/// 𝒲?(τ) by the direct route, cross-checked against the Jantzen route when τ is
/// generic and against the closed-form table when τ was given by a weight (k, ℓ)
/// in its range.
pub fn predict(t: &TameType) -> Result<Vec<PredictedWeight>> {
    let direct = predict_direct(t);
    let set: BTreeSet<SerreWeight> = direct.iter().map(|w| w.weight).collect();
    if t.is_generic() {
        compare("jantzen", &set, &predict_jantzen(t)?)?;
    }
    if let Some((k, ell)) = table_weight(t) {
        compare("table", &set, &generic_table(k, ell, t.p)?.weights())?;
    }
    Ok(direct)
}

pub fn twist_equivariance_check(t: &TameType, c: i64) -> Result<bool> {
    let lhs: BTreeSet<SerreWeight> =
        predict(&tame::twist_type(t, c))?.into_iter().map(|w| w.weight).collect();
    let rhs: BTreeSet<SerreWeight> =
        predict(t)?.into_iter().map(|w| modular::twist_weight(w.weight, c)).collect();
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LiftShape {
    /// A sum of four characters.
    Diagonal,
    /// Image in the Levi M1 of the Klingen parabolic.
    Klingen,
    /// Image in the Levi M of the Siegel parabolic.
    Siegel,
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftRecipe {
    pub row: &'static str,
    pub side: Side,
    pub shape: LiftShape,
    /// ν + ρ̃ of the table row this lift accounts for.
    pub mu: Weight,
    /// ω-exponents of the four summands of the reduction, in the order used.
    pub reduction_exponents: [i64; 4],
    /// Hodge–Tate weight of the lift of each summand, same order.
    pub ht_by_position: [i64; 4],
    /// Unramified twist of each summand, same order.
    pub units: [&'static str; 4],
    /// The Hodge–Tate multiset, descending.
    pub ht_weights: [i64; 4],
}

impl LiftRecipe {
    pub fn is_coherent(&self) -> bool {
        let [e1, e2, e3, e4] = self.ht_by_position;
        let [r1, r2, r3, r4] = self.reduction_exponents;
        let mut spin = spin_cochar(self.mu);
        spin.sort_unstable_by(|a, b| b.cmp(a));
        spin == self.ht_weights && e1 + e4 == e2 + e3 && r1 + r4 == r2 + r3
    }
}

struct Template {
    row: &'static str,
    shape: LiftShape,
    exps: [i64; 4],
    ht: [i64; 4],
    units: [&'static str; 4],
}

fn lift_templates(x: i64, y: i64, p: i64) -> [Template; 10] {
    use LiftShape::*;
    let q = p - 1;
    let e12 = [x + y, x, y, 0];
    let e13 = [q, x, y, x + y - q];
    let e14 = [y + q, x + y, 0, x - q];
    let e15 = [x + q, x + y, 0, y - q];
    let u12 = ["alpha", "beta", "gamma", "delta"];
    let u13 = ["delta", "beta", "gamma", "alpha"];
    let u14 = ["gamma", "alpha", "delta", "beta"];
    let u15 = ["beta", "alpha", "delta", "gamma"];
    [
        Template { row: "C0", shape: Diagonal, exps: e12, ht: e12, units: u12 },
        Template { row: "C1", shape: Diagonal, exps: e13, ht: e13, units: u13 },
        Template { row: "C2", shape: Diagonal, exps: e14, ht: e14, units: u14 },
        Template { row: "C3", shape: Diagonal, exps: e15, ht: e15, units: u15 },
        Template { row: "C0->C1", shape: Klingen, exps: e13, ht: [p, x, y, x + y - p], units: u13 },
        Template { row: "C0->C2", shape: Klingen, exps: e14, ht: [y + p, x + y, 0, x - p], units: u14 },
        Template { row: "C0->C3", shape: Klingen, exps: e15, ht: [x + p, x + y, 0, y - p], units: u15 },
        Template { row: "C1->C2", shape: Siegel, exps: e14, ht: [y + p, x + y + 1, -1, x - p], units: u14 },
        Template { row: "C1->C3", shape: Siegel, exps: e15, ht: [x + p, x + y + 1, -1, y - p], units: u15 },
        Template { row: "C2->C3", shape: Klingen, exps: e15, ht: [x + p + 1, x + y, 0, y - p - 1], units: u15 },
    ]
}

/// Swaps the unit labels for the rewriting with (x′, y′) = (p−1−x, y).
fn swap_units(u: [&'static str; 4]) -> [&'static str; 4] {
    u.map(|l| match l {
        "alpha" => "gamma",
        "beta" => "delta",
        "gamma" => "alpha",
        _ => "beta",
    })
}

/// Crystalline lifts of the split reduction `ω^{x+y}α ⊕ ω^x β ⊕ ω^y γ ⊕ δ`
/// accounting for each of the twenty table weights. Needs `0 ≤ y ≤ x`, `x + y ≤ p − 1`.
pub fn lift_recipes_xy(x: i64, y: i64, p: Prime) -> Result<Vec<LiftRecipe>> {
    if !(0 <= y && y <= x && x + y <= p.q()) {
        return Err(Error::GenericityViolated { k: x + 1, ell: y + 2, p: p.get() });
    }
    let n = p.get();
    let (xr, yr) = (p.q() - x, y);
    let left_rows = table_shapes(x, y, n);
    let right_rows = table_shapes(xr, yr, n);
    let mut out = Vec::with_capacity(20);
    for side in [Side::Left, Side::Right] {
        let (tx, ty, shift, rows) = match side {
            Side::Left => (x, y, 0, &left_rows),
            Side::Right => (xr, yr, x, &right_rows),
        };
        for tpl in lift_templates(tx, ty, n) {
            // the right-hand rows are the left-hand rows of (x′, y′) twisted by ω^x
            let (sx, sy) = rows.iter().find(|r| r.0 == tpl.row).expect("row").1;
            let mu = Weight::raw(sx, sy, tx + ty + 2 * shift);
            let ht_by_position = tpl.ht.map(|h| h + shift);
            let mut ht_weights = ht_by_position;
            ht_weights.sort_unstable_by(|a, b| b.cmp(a));
            out.push(LiftRecipe {
                row: tpl.row,
                side,
                shape: tpl.shape,
                mu,
                reduction_exponents: tpl.exps.map(|e| e + shift),
                ht_by_position,
                units: if side == Side::Left { tpl.units } else { swap_units(tpl.units) },
                ht_weights,
            });
        }
    }
    Ok(out)
}

/// Lift recipes for a generic type, twisted to its third coordinate.
pub fn lift_recipes(t: &TameType) -> Result<Vec<LiftRecipe>> {
    let (x, y) = t.xy();
    if !t.is_generic() {
        return Err(Error::GenericityViolated { k: x + 1, ell: y + 2, p: t.p.get() });
    }
    let twist = (t.mu.c - x - y) / 2;
    let mut v = lift_recipes_xy(x, y, t.p)?;
    for r in &mut v {
        r.mu = r.mu + Weight::raw(0, 0, 2 * twist);
        r.reduction_exponents = r.reduction_exponents.map(|e| e + twist);
        r.ht_by_position = r.ht_by_position.map(|e| e + twist);
        r.ht_weights = r.ht_weights.map(|e| e + twist);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tame::{type_from_modular_weight, type_from_weight};

    fn w(a: i64, b: i64, c: i64) -> Weight {
        Weight::new(a, b, c).unwrap()
    }

    fn p(n: i64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn twenty_weights_for_7_4_17() {
        let t = type_from_modular_weight(7, 4, p(17)).unwrap();
        let v = predict(&t).unwrap();
        assert_eq!(v.len(), 20);
        assert_eq!(v.iter().filter(|w| w.is_direct()).count(), 8);
        let shifted: BTreeSet<(i64, i64)> = v.iter().map(|w| w.lambda().shifted()).collect();
        let expected: BTreeSet<(i64, i64)> = [
            (6, 2), (10, 2), (14, 10), (14, 6), (15, 11), (15, 7), (18, 10), (18, 6), (20, 10), (20, 6),
            (19, 11), (19, 7), (22, 14), (26, 14), (24, 16), (28, 16), (24, 14), (28, 14), (23, 15), (27, 15),
        ]
        .into_iter()
        .collect();
        assert_eq!(shifted, expected);
    }

    #[test]
    fn profile_head() {
        let t = type_from_weight(w(6, 2, 8), p(17));
        let prof = jantzen_profile(&t);
        assert_eq!(prof.len(), 12);
        assert_eq!(prof.get(&Symbol::Weyl(w(26, 14, 24))), 1);
        let deg = jantzen_profile(&type_from_weight(w(0, 0, 0), p(17)));
        assert!(deg.len() < 12);
    }

    #[test]
    fn jantzen_requires_generic() {
        let t = type_from_weight(w(0, 0, 0), p(5));
        assert_eq!(predict_jantzen(&t), Err(Error::DegenerateType(w(0, 0, 0))));
        assert!(!predict_direct(&t).is_empty());
    }

    #[test]
    fn table_errors_and_boundary() {
        assert!(matches!(generic_table(7, 5, p(11)), Err(Error::GenericityViolated { .. })));
        assert_eq!(generic_table(7, 4, p(11)).unwrap().rows.len(), 20);
        let t = generic_table(5, 4, p(17)).unwrap();
        assert!(t.boundary_exception);
        let c3_on_wall = t
            .rows
            .iter()
            .filter(|r| r.row == "C3")
            .any(|r| matches!(&r.alcove, AlcovePosition::Wall(l) if l == &[alcove::WallLine::Sum2P]));
        assert!(c3_on_wall);
        assert!(!generic_table(7, 4, p(17)).unwrap().boundary_exception);
    }

    #[test]
    fn lift_examples() {
        let r = lift_recipes_xy(6, 2, p(17)).unwrap();
        assert_eq!(r.len(), 20);
        let get = |row: &str, side| r.iter().find(|x| x.row == row && x.side == side).unwrap();
        let k = get("C0->C1", Side::Left);
        assert_eq!(k.shape, LiftShape::Klingen);
        assert_eq!(k.ht_weights, [17, 6, 2, -9]);
        let s = get("C1->C2", Side::Left);
        assert_eq!(s.shape, LiftShape::Siegel);
        assert_eq!(s.ht_weights, [19, 9, -1, -11]);
        let k2 = get("C2->C3", Side::Left);
        assert_eq!(k2.shape, LiftShape::Klingen);
        assert_eq!(k2.ht_weights, [24, 8, 0, -16]);
        assert!(r.iter().all(|x| x.is_coherent()));
        let shapes = |s| r.iter().filter(|x| x.shape == s).count();
        assert_eq!((shapes(LiftShape::Diagonal), shapes(LiftShape::Klingen), shapes(LiftShape::Siegel)), (8, 8, 4));
    }

    #[test]
    fn lift_rows_match_table() {
        let t = generic_table(7, 4, p(17)).unwrap();
        let r = lift_recipes_xy(6, 2, p(17)).unwrap();
        for row in &t.rows {
            assert!(r.iter().any(|l| l.row == row.row && l.side == row.side && l.mu == row.mu), "{}", row.row);
        }
    }
}
