//! Companion weights of a p-ordinary form of weight (k, ℓ) and the outline of
//! its dual BGG complex.
//!
//! Each companion is obtained by twisting ρ̄ by a power of ω and conjugating by
//! a Weyl element; it exists only when ρ̄|_{I_p} has the right zero pattern
//! above the diagonal.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::alcove::{self, AlcovePosition};
use crate::error::{Error, Result};
use crate::lattice::{self, Prime, Weight, WeylElement};
use crate::modular;
use crate::predictor::{self, Side};
use crate::tame;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseId {
    Fund,
    C1,
    C2,
    C3,
    C0Prime,
    C1Prime,
    C2Prime,
    C3Prime,
}

impl CaseId {
    pub const ALL: [CaseId; 8] = [
        CaseId::Fund,
        CaseId::C1,
        CaseId::C2,
        CaseId::C3,
        CaseId::C0Prime,
        CaseId::C1Prime,
        CaseId::C2Prime,
        CaseId::C3Prime,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CaseId::Fund => "Fund",
            CaseId::C1 => "C1",
            CaseId::C2 => "C2",
            CaseId::C3 => "C3",
            CaseId::C0Prime => "C0'",
            CaseId::C1Prime => "C1'",
            CaseId::C2Prime => "C2'",
            CaseId::C3Prime => "C3'",
        }
    }

    pub fn is_primed(self) -> bool {
        self >= CaseId::C0Prime
    }

    /// The row of the twenty-weight table that λ′ + ρ̃ lands on.
    pub fn table_row(self) -> (&'static str, Side) {
        match self {
            CaseId::Fund => ("C0", Side::Left),
            CaseId::C1 => ("C3", Side::Left),
            CaseId::C2 => ("C2", Side::Left),
            CaseId::C3 => ("C1", Side::Left),
            CaseId::C0Prime => ("C2", Side::Right),
            CaseId::C1Prime => ("C1", Side::Right),
            CaseId::C2Prime => ("C0", Side::Right),
            CaseId::C3Prime => ("C3", Side::Right),
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for CaseId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AutomorphicType {
    Holomorphic,
    Whittaker,
    /// Only a p-adic companion is expected; no algebraic lift is predicted.
    PAdicOnly,
}

impl AutomorphicType {
    pub fn label(self) -> &'static str {
        match self {
            AutomorphicType::Holomorphic => "holomorphic",
            AutomorphicType::Whittaker => "whittaker",
            AutomorphicType::PAdicOnly => "p_adic_only",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompanionRecord {
    pub case_id: CaseId,
    /// Power of ω twisting ρ̄.
    pub twist_exp: i64,
    pub conjugator: WeylElement,
    /// Entries (i, j), i < j, of ρ̄|_{I_p} that must vanish.
    pub required_zero_mask: Vec<(u8, u8)>,
    pub k_prime: i64,
    pub ell_prime: i64,
    pub lambda_prime: Weight,
    pub alcove_condition: &'static str,
    pub expected_alcove: usize,
    pub condition_holds: bool,
    pub alcove: AlcovePosition,
    pub automorphic_type: AutomorphicType,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source_note: Option<&'static str>,
}

fn check_companion_range(k: i64, ell: i64, p: Prime) -> Result<()> {
    if k >= ell && ell >= 3 && k + ell - 3 < p.q() {
        Ok(())
    } else {
        Err(Error::WeightOutOfRange { k, ell, p: p.get() })
    }
}

struct CaseData {
    twist: i64,
    conj: WeylElement,
    mask: &'static [(u8, u8)],
    kl: (i64, i64),
    ab: (i64, i64),
    condition: &'static str,
    expected: usize,
    holds: bool,
    kind: AutomorphicType,
}

fn case_data(case: CaseId, k: i64, ell: i64, p: i64) -> CaseData {
    use AutomorphicType::*;
    use WeylElement as W;
    let (a, b) = (k - 3, ell - 3);
    let d = |twist, conj, mask, kl, ab, condition, expected, holds, kind| CaseData {
        twist,
        conj,
        mask,
        kl,
        ab,
        condition,
        expected,
        holds,
        kind,
    };
    match case {
        CaseId::Fund => d(0, W::E, &[], (k, ell), (a, b), "C0", 0, true, Holomorphic),
        CaseId::C1 => d(
            2 - ell,
            W::S0,
            &[(1, 2), (3, 4)],
            (k + p - 1, p + 3 - ell),
            (a + p - 1, p - 3 - b),
            "C3 if a-b>1",
            3,
            a - b > 1,
            Holomorphic,
        ),
        CaseId::C2 => d(
            1 - k,
            W::S0S1,
            &[(1, 3), (2, 3), (2, 4)],
            (ell + p - 2, p + 2 - k),
            (b + p - 2, p - 4 - a),
            "C2 if b>0",
            2,
            b > 0,
            Whittaker,
        ),
        CaseId::C3 => d(
            3 - k - ell,
            W::S0S1S0,
            &[(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)],
            (p + 2 - ell, p + 2 - k),
            (p - 4 - b, p - 4 - a),
            "C1 if a+b<p-5",
            1,
            a + b < p - 5,
            Whittaker,
        ),
        CaseId::C0Prime => d(
            0,
            W::S1,
            &[(2, 3)],
            (ell + p - 2, k + 1),
            (b + p - 2, a + 1),
            "C2 if b>0",
            2,
            b > 0,
            PAdicOnly,
        ),
        CaseId::C1Prime => d(
            2 - ell,
            W::S1S0,
            &[(1, 2), (1, 4), (3, 4)],
            (p + 2 - ell, k + 1),
            (p - 4 - b, a + 1),
            "C1 if a>b",
            1,
            a > b,
            PAdicOnly,
        ),
        CaseId::C2Prime => d(
            1 - k,
            W::S1S0S1,
            &[(1, 3), (1, 4), (2, 3), (2, 4)],
            (p + 1 - k, ell),
            (p - 5 - a, b),
            "C0",
            0,
            true,
            PAdicOnly,
        ),
        CaseId::C3Prime => d(
            3 - k - ell,
            W::W0,
            &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
            (2 * p - k, p + 3 - ell),
            (2 * p - 6 - a, p - 3 - b),
            "C3 if a+b<p-6",
            3,
            a + b < p - 6,
            PAdicOnly,
        ),
    }
}

const LOWERCASE_L_NOTE: &str =
    "the printed formula for ell' reads 4-l+p-1 with a lowercase l; interpreted as ell";

/// The fundamental weight and its seven companions, for k ≥ ℓ ≥ 3 and k + ℓ − 3 < p − 1.
pub fn companion_table(k: i64, ell: i64, p: Prime) -> Result<Vec<CompanionRecord>> {
    check_companion_range(k, ell, p)?;
    let z = k + ell - 6;
    Ok(CaseId::ALL
        .into_iter()
        .map(|case| {
            let cd = case_data(case, k, ell, p.get());
            let lambda_prime = Weight::raw(cd.ab.0, cd.ab.1, z);
            CompanionRecord {
                case_id: case,
                twist_exp: cd.twist,
                conjugator: cd.conj,
                required_zero_mask: cd.mask.to_vec(),
                k_prime: cd.kl.0,
                ell_prime: cd.kl.1,
                lambda_prime,
                alcove_condition: cd.condition,
                expected_alcove: cd.expected,
                condition_holds: cd.holds,
                alcove: alcove::classify(lambda_prime, p),
                automorphic_type: cd.kind,
                source_note: (case == CaseId::C3Prime).then_some(LOWERCASE_L_NOTE),
            }
        })
        .collect())
}

/// Agreement of two Serre weights up to (p−1)X⁰(T) once both are regularized.
fn same_regularized(l: Weight, m: Weight, p: Prime) -> bool {
    let (r, s) = (
        modular::regular_representative(l, p).lambda(),
        modular::regular_representative(m, p).lambda(),
    );
    (r.a, r.b) == (s.a, s.b) && (r.c - s.c).rem_euclid(p.q()) == 0
}

/// Whether the eight companion weights are the eight undisplaced rows of the
/// twenty-weight table.
pub fn companion_matches_table(k: i64, ell: i64, p: Prime) -> Result<bool> {
    let table = predictor::generic_table(k, ell, p)?;
    let records = companion_table(k, ell, p)?;
    Ok(records.iter().all(|r| {
        let (row, side) = r.case_id.table_row();
        table
            .rows
            .iter()
            .find(|t| t.row == row && t.side == side)
            .is_some_and(|t| same_regularized(r.lambda_prime, t.weight.lambda(), p))
    }))
}

/// The automorphic vector bundle ω^{r,s}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sheaf {
    pub r: i64,
    pub s: i64,
}

impl fmt::Display for Sheaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω^{{{},{}}}", self.r, self.s)
    }
}

impl Serialize for Sheaf {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.r, self.s].serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GradedPiece {
    pub jump: i64,
    /// i in gr^jump H³ = H^i(X̄, sheaf).
    pub cohomological_degree: u8,
    pub sheaf: Sheaf,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BggOutline {
    pub k: i64,
    pub ell: i64,
    pub terms: [Sheaf; 4],
    /// Placement of the terms; the first is the motivic weight a + b + 3.
    pub degrees: [i64; 4],
    pub fil_jumps: [i64; 4],
    pub graded: [GradedPiece; 4],
    /// Homogeneity degree of each differential, where known.
    pub differential_degrees: [Option<i64>; 3],
}

pub fn bgg_outline(k: i64, ell: i64) -> Result<BggOutline> {
    tame::check_modular_weight(k, ell)?;
    let sh = |r, s| Sheaf { r, s };
    let terms = [sh(3 - ell, 3 - k), sh(ell - 1, 3 - k), sh(k, 4 - ell), sh(k, ell)];
    let w = k + ell - 3;
    let fil_jumps = [0, ell - 2, k - 1, k + ell - 3];
    let graded = std::array::from_fn(|i| GradedPiece {
        jump: fil_jumps[i],
        cohomological_degree: 3 - i as u8,
        sheaf: terms[i],
    });
    Ok(BggOutline {
        k,
        ell,
        terms,
        degrees: [w, w + 1, w + 2, w + 3],
        fil_jumps,
        graded,
        differential_degrees: [None, None, Some(ell - 1)],
    })
}

/// Whether λ′ is p-restricted; used to check the alcove conditions.
pub fn lambda_prime_restricted(r: &CompanionRecord, p: Prime) -> bool {
    lattice::is_restricted(r.lambda_prime, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: i64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn w(a: i64, b: i64, c: i64) -> Weight {
        Weight::new(a, b, c).unwrap()
    }

    fn record(k: i64, ell: i64, n: i64, case: CaseId) -> CompanionRecord {
        companion_table(k, ell, p(n))
            .unwrap()
            .into_iter()
            .find(|r| r.case_id == case)
            .unwrap()
    }

    #[test]
    fn first_case_at_seven_four() {
        let r = record(7, 4, 17, CaseId::C1);
        assert_eq!(r.twist_exp, -2);
        assert_eq!((r.k_prime, r.ell_prime), (23, 16));
        assert_eq!(r.lambda_prime, w(20, 13, 5));
        assert_eq!(r.alcove, AlcovePosition::Interior(3));
        assert_eq!(r.automorphic_type, AutomorphicType::Holomorphic);
        assert_eq!(r.required_zero_mask, vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn other_cases_at_seven_four() {
        let r = record(7, 4, 17, CaseId::C2Prime);
        assert_eq!((r.k_prime, r.ell_prime), (11, 4));
        assert_eq!(r.lambda_prime, w(8, 1, 5));
        assert_eq!(r.alcove, AlcovePosition::Interior(0));
        assert_eq!(record(7, 4, 17, CaseId::C3).lambda_prime, w(12, 9, 5));
        let r = record(7, 4, 17, CaseId::C3Prime);
        assert!(r.source_note.is_some());
        assert_eq!(r.required_zero_mask.len(), 6);
        assert_eq!(r.twist_exp, -8);
    }

    #[test]
    fn range_is_enforced() {
        assert!(matches!(
            companion_table(10, 9, p(17)),
            Err(Error::WeightOutOfRange { .. })
        ));
        assert!(companion_table(10, 8, p(17)).is_ok());
        assert!(companion_table(3, 4, p(17)).is_err());
        assert!(companion_table(3, 3, p(5)).is_ok());
    }

    #[test]
    fn unprimed_conjugators_are_iota_of_kostant() {
        let recs = companion_table(7, 4, p(17)).unwrap();
        let unprimed: Vec<_> = recs.iter().filter(|r| !r.case_id.is_primed()).collect();
        for (r, kost) in unprimed.iter().zip(WeylElement::KOSTANT) {
            assert_eq!(r.conjugator, kost.iota());
        }
        assert_eq!(WeylElement::S0S1S0, WeylElement::S1S0S1.iota());
        for r in &recs {
            let expect = match r.case_id {
                CaseId::Fund | CaseId::C1 => AutomorphicType::Holomorphic,
                CaseId::C2 | CaseId::C3 => AutomorphicType::Whittaker,
                _ => AutomorphicType::PAdicOnly,
            };
            assert_eq!(r.automorphic_type, expect);
        }
    }

    #[test]
    fn matches_table_examples() {
        assert!(companion_matches_table(7, 4, p(17)).unwrap());
        assert!(companion_matches_table(9, 5, p(23)).unwrap());
        assert!(companion_matches_table(5, 4, p(13)).unwrap());
        assert!(predictor::generic_table(5, 4, p(13)).unwrap().boundary_exception);
    }

    #[test]
    fn alcove_conditions_are_sufficient() {
        for n in [5, 7, 11, 13, 17, 19] {
            let q = p(n);
            for k in 3..n {
                for ell in 3..=k {
                    let Ok(recs) = companion_table(k, ell, q) else { continue };
                    for r in recs {
                        assert!(r.k_prime >= r.ell_prime && r.ell_prime >= 3, "{k} {ell} {n} {}", r.case_id);
                        if r.condition_holds {
                            assert_eq!(r.alcove, AlcovePosition::Interior(r.expected_alcove));
                            assert!(lambda_prime_restricted(&r, q));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bgg_at_seven_four() {
        let o = bgg_outline(7, 4).unwrap();
        let labels: Vec<String> = o.terms.iter().map(|s| s.to_string()).collect();
        assert_eq!(labels, ["ω^{-1,-4}", "ω^{3,-4}", "ω^{7,0}", "ω^{7,4}"]);
        assert_eq!(o.fil_jumps, [0, 2, 6, 8]);
        assert_eq!(o.degrees, [8, 9, 10, 11]);
        assert_eq!(o.graded[2].cohomological_degree, 1);
        assert_eq!(o.graded[2].sheaf, Sheaf { r: 7, s: 0 });
        assert_eq!(o.differential_degrees[2], Some(3));
        assert_eq!(bgg_outline(3, 3).unwrap().fil_jumps, [0, 1, 2, 3]);
        assert!(matches!(bgg_outline(3, 4), Err(Error::InvalidModularWeight { .. })));
    }

    proptest! {
        #[test]
        fn jumps_are_root_valuations(ell in 3i64..60, dk in 0i64..60) {
            let k = ell + dk;
            prop_assert_eq!(bgg_outline(k, ell).unwrap().fil_jumps, tame::root_valuations(k, ell).unwrap());
        }
    }
}
