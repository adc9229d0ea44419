//! Test-side oracles. Nothing here calls into the library's own geometry or
//! type logic; each is a direct brute-force reading of the definitions.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

/// The eight Weyl group elements as signed permutations of (a, b).
pub fn weyl_orbit(a: i64, b: i64) -> [(i64, i64); 8] {
    [(a, b), (b, a), (a, -b), (-b, a), (b, -a), (-a, b), (-b, -a), (-a, -b)]
}

/// μ′ ∈ W μ + (p−1)X(T), where X(T) = {(a, b; c) : c ≡ a + b mod 2}.
pub fn same_type(m: (i64, i64, i64), m2: (i64, i64, i64), p: i64) -> bool {
    let q = p - 1;
    weyl_orbit(m.0, m.1).into_iter().any(|(a, b)| {
        let d = (m2.0 - a, m2.1 - b, m2.2 - m.2);
        d.0 % q == 0 && d.1 % q == 0 && d.2 % q == 0 && (d.2 / q - d.0 / q - d.1 / q) % 2 == 0
    })
}

/// Positive roots with the coroot pairing ⟨(a, b), β∨⟩.
const ROOTS: [((i64, i64), fn(i64, i64) -> i64); 4] = [
    ((1, -1), |a, b| a - b),
    ((0, 2), |_, b| b),
    ((1, 1), |a, b| a + b),
    ((2, 0), |a, _| a),
];

/// λ ≤ μ in the dominance order: μ − λ is an N-combination of positive roots.
fn below(l: (i64, i64), m: (i64, i64)) -> bool {
    let (d1, d2) = (m.0 - l.0, m.1 - l.1);
    d1 >= 0 && d1 + d2 >= 0 && (d1 + d2) % 2 == 0
}

/// Every λ′ with λ′ ↑ λ (strong linkage), λ′ + ρ̃ inside a box of side 4p.
/// Coordinates are λ + ρ̃; the third coordinate is untouched by the dot action.
pub fn strongly_linked_below(x: i64, y: i64, p: i64) -> BTreeSet<(i64, i64)> {
    let bound = 4 * p;
    let mut seen = BTreeSet::from([(x, y)]);
    let mut queue = VecDeque::from([(x, y)]);
    while let Some((u, v)) = queue.pop_front() {
        for ((b1, b2), pair) in ROOTS {
            let h = pair(u, v);
            for n in -8..=8 {
                let k = h - n * p;
                let w = (u - k * b1, v - k * b2);
                if w == (u, v) || !below(w, (u, v)) {
                    continue;
                }
                if w.0.abs() > bound || w.1.abs() > bound {
                    continue;
                }
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    seen
}

/// The predicted weight set read off its defining property: ν p-regular with
/// some ν′ ↑ ν, ν′ + ρ̃ dominant, of the same type as μ. Returns ν as
/// (a, b; c) with c in [0, 2(p−1)).
pub fn predicted_by_definition(mu: (i64, i64, i64), p: i64) -> BTreeSet<(i64, i64, i64)> {
    let q = p - 1;
    let mut out = BTreeSet::new();
    for b in 0..q {
        for d in 0..q {
            let a = b + d;
            let (x, y) = (a + 2, b + 1);
            let below = strongly_linked_below(x, y, p);
            for c in (0..2 * q).filter(|c| (c - a - b).rem_euclid(2) == 0) {
                // ν′ + ρ̃ = (u, v; c + 3) since ρ̃ = (2, 1; 3)
                let hit = below.iter().any(|&(u, v)| u >= v && v >= 0 && same_type((u, v, c + 3), mu, p));
                if hit {
                    out.insert((a, b, c));
                }
            }
        }
    }
    out
}

/// Number of pairs (line ⊂ Lagrangian plane) in F_p^4 with the standard
/// symplectic form ⟨e1, e4⟩ = ⟨e2, e3⟩ = 1.
pub fn isotropic_flag_count(p: i64) -> i64 {
    let form = |u: [i64; 4], v: [i64; 4]| (u[0] * v[3] - u[3] * v[0] + u[1] * v[2] - u[2] * v[1]).rem_euclid(p);
    let vectors: Vec<[i64; 4]> = (1..p.pow(4))
        .map(|n| [n % p, n / p % p, n / (p * p) % p, n / (p * p * p)])
        .collect();
    // lines by normalized representative: first nonzero coordinate is 1
    let lines: Vec<[i64; 4]> = vectors
        .iter()
        .copied()
        .filter(|v| v.iter().find(|c| **c != 0) == Some(&1))
        .collect();
    let mut total = 0;
    for l in &lines {
        // vectors of l⊥ outside the line; each Lagrangian through l holds p² − p of them
        let outside = vectors
            .iter()
            .filter(|v| form(*l, **v) == 0)
            .filter(|v| !(1..p).any(|t| l.map(|c| c * t % p) == **v))
            .count() as i64;
        total += outside / (p * p - p);
    }
    total
}

/// The twenty rows of the explicit table as printed, in ν + ρ̃ coordinates,
/// as (row, X, Y, c). Right-column third coordinates are as printed
/// (x + y), which is only meaningful modulo p − 1.
pub fn printed_table(x: i64, y: i64, p: i64) -> Vec<(&'static str, i64, i64, i64)> {
    let z = x + y;
    let pairs: [(&str, (i64, i64), (i64, i64)); 10] = [
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
    ];
    pairs
        .into_iter()
        .flat_map(|(r, l, rt)| [(r, l.0, l.1, z), (r, rt.0, rt.1, z)])
        .collect()
}

/// The (ν + ρ̃) shape of a weight (a, b; c): (a + 2, b + 1).
pub fn shift(a: i64, b: i64) -> (i64, i64) {
    (a + 2, b + 1)
}

/// Alcove index of an interior point in ν + ρ̃ coordinates, by the defining
/// inequalities; `None` on walls or outside.
pub fn interior_alcove(x: i64, y: i64, p: i64) -> Option<usize> {
    if x > y && y > 0 && x + y < p {
        Some(0)
    } else if x + y > p && y < x && x < p {
        Some(1)
    } else if x - y < p && p < x && x + y < 2 * p {
        Some(2)
    } else if y < p && x + y > 2 * p && x - y < p {
        Some(3)
    } else {
        None
    }
}
