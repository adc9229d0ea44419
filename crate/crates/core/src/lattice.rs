//! The character lattice X(T) of the diagonal torus of GSp4, its Weyl group,
//! and the handful of constants the rest of the engine is built on.
//!
//! A character is written `(a, b; c)` and is only valid when `c ≡ a + b (mod 2)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(i64);

impl Prime {
    pub fn new(p: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidPrime(p));
        }
        let mut d = 2;
        while d * d <= p {
            if p % d == 0 {
                return Err(Error::InvalidPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> i64 {
        self.0
    }

    /// p − 1, the modulus that governs tame types.
    #[inline]
    pub fn q(self) -> i64 {
        self.0 - 1
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

/// ρ̃, half the sum of the positive roots (up to X⁰(T)).
pub const RHO: Weight = Weight { a: 2, b: 1, c: 3 };
/// The similitude character restricted to T.
pub const SIMILITUDE: Weight = Weight { a: 0, b: 0, c: 2 };
pub const ALPHA0: Weight = Weight { a: 1, b: -1, c: 0 };
pub const ALPHA1: Weight = Weight { a: 0, b: 2, c: 0 };
pub const ZERO: Weight = Weight { a: 0, b: 0, c: 0 };

impl Weight {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if (c - a - b).rem_euclid(2) != 0 {
            return Err(Error::ParityViolation { a, b, c });
        }
        Ok(Weight { a, b, c })
    }

    /// Builds a weight whose parity is guaranteed by the caller's arithmetic.
    /// Panics in debug builds if the guarantee is broken.
    #[inline]
    pub(crate) fn raw(a: i64, b: i64, c: i64) -> Self {
        debug_assert!((c - a - b).rem_euclid(2) == 0, "parity broken: ({a},{b};{c})");
        Weight { a, b, c }
    }

    /// `(x, y)` with `(x, y; _) = self + ρ̃`, the coordinates alcoves are drawn in.
    #[inline]
    pub fn shifted(self) -> (i64, i64) {
        (self.a + 2, self.b + 1)
    }

    /// Inverse of [`Weight::shifted`]: the weight `λ` with `λ + ρ̃ = (x, y; c + 3)`.
    /// `c` is the third coordinate of `λ` itself.
    pub fn from_shifted(x: i64, y: i64, c: i64) -> Result<Self> {
        Weight::new(x - 2, y - 1, c)
    }

    pub fn as_array(self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.a, self.b, self.c)
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_array().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b, c] = <[i64; 3]>::deserialize(d)?;
        Weight::new(a, b, c).map_err(serde::de::Error::custom)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::raw(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::raw(self.a - o.a, self.b - o.b, self.c - o.c)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::raw(-self.a, -self.b, -self.c)
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        Weight::raw(self * w.a, self * w.b, self * w.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleRoot {
    /// α₀ = (1,−1;0), the short root.
    Short,
    /// α₁ = (0,2;0), the long root.
    Long,
}

impl SimpleRoot {
    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            0 => Some(SimpleRoot::Short),
            1 => Some(SimpleRoot::Long),
            _ => None,
        }
    }
}

pub fn coroot_pairing(l: Weight, i: SimpleRoot) -> i64 {
    match i {
        SimpleRoot::Short => l.a - l.b,
        SimpleRoot::Long => l.b,
    }
}

/// Elements of W_G = ⟨s0, s1⟩, dihedral of order 8, by their reduced words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeylElement {
    E,
    S0,
    S1,
    S0S1,
    S1S0,
    S0S1S0,
    S1S0S1,
    W0,
}

// Each element as a signed permutation of (a, b): image = (sa * [a,b][ia], sb * [a,b][ib]).
const MATRICES: [[i64; 4]; 8] = [
    [1, 0, 0, 1],   // e
    [0, 1, 1, 0],   // s0
    [1, 0, 0, -1],  // s1
    [0, -1, 1, 0],  // s0s1
    [0, 1, -1, 0],  // s1s0
    [-1, 0, 0, 1],  // s0s1s0
    [0, -1, -1, 0], // s1s0s1
    [-1, 0, 0, -1], // w0
];

impl WeylElement {
    pub const ALL: [WeylElement; 8] = [
        WeylElement::E,
        WeylElement::S0,
        WeylElement::S1,
        WeylElement::S0S1,
        WeylElement::S1S0,
        WeylElement::S0S1S0,
        WeylElement::S1S0S1,
        WeylElement::W0,
    ];

    /// Kostant representatives of W_M \ W_G.
    pub const KOSTANT: [WeylElement; 4] = [
        WeylElement::E,
        WeylElement::S1,
        WeylElement::S1S0,
        WeylElement::S1S0S1,
    ];

    fn index(self) -> usize {
        self as usize
    }

    fn matrix(self) -> [i64; 4] {
        MATRICES[self.index()]
    }

    pub fn word(self) -> &'static str {
        match self {
            WeylElement::E => "e",
            WeylElement::S0 => "s0",
            WeylElement::S1 => "s1",
            WeylElement::S0S1 => "s0s1",
            WeylElement::S1S0 => "s1s0",
            WeylElement::S0S1S0 => "s0s1s0",
            WeylElement::S1S0S1 => "s1s0s1",
            WeylElement::W0 => "s0s1s0s1",
        }
    }

    pub fn from_word(word: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|w| w.word() == word)
    }

    pub fn length(self) -> u32 {
        match self {
            WeylElement::E => 0,
            WeylElement::S0 | WeylElement::S1 => 1,
            WeylElement::S0S1 | WeylElement::S1S0 => 2,
            WeylElement::S0S1S0 | WeylElement::S1S0S1 => 3,
            WeylElement::W0 => 4,
        }
    }

    pub fn sign(self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The automorphism exchanging s0 and s1.
    pub fn iota(self) -> Self {
        match self {
            WeylElement::E => WeylElement::E,
            WeylElement::S0 => WeylElement::S1,
            WeylElement::S1 => WeylElement::S0,
            WeylElement::S0S1 => WeylElement::S1S0,
            WeylElement::S1S0 => WeylElement::S0S1,
            WeylElement::S0S1S0 => WeylElement::S1S0S1,
            WeylElement::S1S0S1 => WeylElement::S0S1S0,
            WeylElement::W0 => WeylElement::W0,
        }
    }

    fn from_matrix(m: [i64; 4]) -> Self {
        let i = MATRICES
            .iter()
            .position(|x| *x == m)
            .expect("W_G is closed under composition");
        Self::ALL[i]
    }

    /// `self · other`, acting as `self ∘ other`.
    pub fn compose(self, other: Self) -> Self {
        let [a, b, c, d] = self.matrix();
        let [e, f, g, h] = other.matrix();
        Self::from_matrix([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    pub fn inverse(self) -> Self {
        Self::ALL
            .into_iter()
            .find(|w| w.compose(self) == WeylElement::E)
            .expect("group")
    }

    /// Product of a word over {0, 1}.
    pub fn from_generators(gens: &[u8]) -> Self {
        gens.iter().fold(WeylElement::E, |acc, g| {
            acc.compose(if *g == 0 { WeylElement::S0 } else { WeylElement::S1 })
        })
    }

    pub fn act(self, l: Weight) -> Weight {
        let [m00, m01, m10, m11] = self.matrix();
        Weight::raw(m00 * l.a + m01 * l.b, m10 * l.a + m11 * l.b, l.c)
    }

    /// w • λ = w(λ + ρ̃) − ρ̃.
    pub fn dot(self, l: Weight) -> Weight {
        self.act(l + RHO) - RHO
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.word())
    }
}

pub fn weyl_act(w: WeylElement, l: Weight) -> Weight {
    w.act(l)
}

pub fn dot_act(w: WeylElement, l: Weight) -> Weight {
    w.dot(l)
}

/// Hodge–Tate style 4-tuple attached to μ through the spin identification.
/// First + fourth = second + third = c.
pub fn spin_cochar(m: Weight) -> [i64; 4] {
    [
        (m.a + m.b + m.c) / 2,
        (m.a - m.b + m.c) / 2,
        (-m.a + m.b + m.c) / 2,
        (-m.a - m.b + m.c) / 2,
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DominanceFlags {
    pub dominant: bool,
    pub p_restricted: bool,
    pub p_regular: bool,
    pub in_x0: bool,
}

pub fn flags(l: Weight, p: Prime) -> DominanceFlags {
    let (s, t) = (l.a - l.b, l.b);
    let p = p.get();
    DominanceFlags {
        dominant: s >= 0 && t >= 0,
        p_restricted: (0..p).contains(&s) && (0..p).contains(&t),
        p_regular: (0..p - 1).contains(&s) && (0..p - 1).contains(&t),
        in_x0: s == 0 && t == 0,
    }
}

pub fn is_dominant(l: Weight) -> bool {
    l.a >= l.b && l.b >= 0
}

pub fn is_restricted(l: Weight, p: Prime) -> bool {
    flags(l, p).p_restricted
}

pub fn is_regular(l: Weight, p: Prime) -> bool {
    flags(l, p).p_regular
}
