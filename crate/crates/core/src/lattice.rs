//! The Minkowski lattice `Z^{1,9}` with basis `h, e_1, .., e_9`, where
//! `h·h = 1`, `e_i·e_i = -1` and distinct basis vectors are orthogonal.
//!
//! Vectors always store raw coefficients over `(h, e_1, .., e_9)`. The
//! anticanonical class `3h - e_1 - .. - e_9` is stored as `[3, -1, .., -1]`.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use crate::error::Error;

/// Number of ambient coordinates.
pub const DIM: usize = 10;

/// An element of `Z^{1,9}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticeVector(pub [i64; DIM]);

impl LatticeVector {
    pub const ZERO: LatticeVector = LatticeVector([0; DIM]);

    pub const fn new(coeffs: [i64; DIM]) -> Self {
        LatticeVector(coeffs)
    }

    /// The hyperplane class `h`.
    pub const fn h() -> Self {
        let mut c = [0; DIM];
        c[0] = 1;
        LatticeVector(c)
    }

    /// The exceptional class `e_i`, `1 <= i <= 9`.
    ///
    /// Panics if `i` is out of range.
    pub const fn e(i: usize) -> Self {
        assert!(i >= 1 && i < DIM, "e_i index out of range");
        let mut c = [0; DIM];
        c[i] = 1;
        LatticeVector(c)
    }

    /// `e_I = sum of e_i for i in I`.
    pub fn e_sum<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(Self::ZERO, |acc, i| acc + Self::e(i))
    }

    /// `ω_0 = 3h - (e_1 + .. + e_9)`, the null vector whose orthogonal
    /// complement carries the affine root lattice.
    pub const fn omega0() -> Self {
        LatticeVector([3, -1, -1, -1, -1, -1, -1, -1, -1, -1])
    }

    pub fn coeffs(&self) -> &[i64; DIM] {
        &self.0
    }

    /// Coefficient of `h`.
    pub fn h_coeff(&self) -> i64 {
        self.0[0]
    }

    /// Coefficient of `e_i`.
    pub fn e_coeff(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn dot(&self, other: &Self) -> i64 {
        inner_product(self, other)
    }

    pub fn norm(&self) -> i64 {
        inner_product(self, self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Reflection in a norm `-2` vector.
    pub fn reflect(&self, alpha: &Self) -> Result<Self, Error> {
        reflect(self, alpha)
    }
}

/// `u·v = c_h(u) c_h(v) - sum_i c_i(u) c_i(v)`.
pub fn inner_product(u: &LatticeVector, v: &LatticeVector) -> i64 {
    let (a, b) = (&u.0, &v.0);
    let mut acc = a[0] * b[0];
    for i in 1..DIM {
        acc -= a[i] * b[i];
    }
    acc
}

/// `v + (v·α) α`, the reflection fixing `α^⊥` and negating `α`.
pub fn reflect(v: &LatticeVector, alpha: &LatticeVector) -> Result<LatticeVector, Error> {
    let norm = alpha.norm();
    if norm != -2 {
        return Err(Error::NotARoot { norm });
    }
    Ok(*v + *alpha * v.dot(alpha))
}

impl Add for LatticeVector {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for LatticeVector {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl Sub for LatticeVector {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl SubAssign for LatticeVector {
    fn sub_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for LatticeVector {
    type Output = Self;
    fn neg(self) -> Self {
        LatticeVector(self.0.map(|c| -c))
    }
}

impl Mul<i64> for LatticeVector {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        LatticeVector(self.0.map(|c| c * k))
    }
}

impl Mul<LatticeVector> for i64 {
    type Output = LatticeVector;
    fn mul(self, v: LatticeVector) -> LatticeVector {
        v * self
    }
}

impl core::iter::Sum for LatticeVector {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |a, b| a + b)
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Writes the vector as a signed sum, e.g. `2h-e1-e3` or `0`.
impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            f.write_str(sign)?;
            if mag != 1 {
                write!(f, "{}", mag)?;
            }
            if i == 0 {
                f.write_str("h")?;
            } else {
                write!(f, "e{}", i)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// One of the ten co-weights `ω_d` grading `E8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GradingLabel {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    D7,
    D8a,
    D8b,
    D9,
}

impl GradingLabel {
    pub const ALL: [GradingLabel; 10] = [
        GradingLabel::D1,
        GradingLabel::D2,
        GradingLabel::D3,
        GradingLabel::D4,
        GradingLabel::D5,
        GradingLabel::D6,
        GradingLabel::D7,
        GradingLabel::D8a,
        GradingLabel::D8b,
        GradingLabel::D9,
    ];

    /// Label for a numeric degree; `8` maps to `8a`.
    pub fn from_degree(d: i64) -> Option<Self> {
        Some(match d {
            1 => Self::D1,
            2 => Self::D2,
            3 => Self::D3,
            4 => Self::D4,
            5 => Self::D5,
            6 => Self::D6,
            7 => Self::D7,
            8 => Self::D8a,
            9 => Self::D9,
            _ => return None,
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::D1 => "1",
            Self::D2 => "2",
            Self::D3 => "3",
            Self::D4 => "4",
            Self::D5 => "5",
            Self::D6 => "6",
            Self::D7 => "7",
            Self::D8a => "8a",
            Self::D8b => "8b",
            Self::D9 => "9",
        }
    }

    /// The modulus of the grading, `ω·ω_0`. Both `8a` and `8b` give 8.
    pub fn d(&self) -> i64 {
        match self {
            Self::D1 => 1,
            Self::D2 => 2,
            Self::D3 => 3,
            Self::D4 => 4,
            Self::D5 => 5,
            Self::D6 => 6,
            Self::D7 => 7,
            Self::D8a | Self::D8b => 8,
            Self::D9 => 9,
        }
    }

    pub fn is_hyperbolic(&self) -> bool {
        matches!(self, Self::D8b)
    }

    /// Number of blown-up points `n = 9 - d`; `None` for `8b`.
    pub fn n(&self) -> Option<usize> {
        if self.is_hyperbolic() {
            None
        } else {
            Some((9 - self.d()) as usize)
        }
    }

    /// `ω_d = 3h - (e_1 + .. + e_n)`, or `ω_8b = 4h - 2(e_1 + e_2)`.
    pub fn omega(&self) -> LatticeVector {
        match self.n() {
            Some(n) => LatticeVector::h() * 3 - LatticeVector::e_sum(1..=n),
            None => LatticeVector::h() * 4 - LatticeVector::e_sum(1..=2) * 2,
        }
    }

    /// `Δ_d = ω_d - ω_0`.
    pub fn delta(&self) -> LatticeVector {
        match self.n() {
            Some(n) => LatticeVector::e_sum(n + 1..=9),
            None => LatticeVector::e_sum(3..=9) + e0(),
        }
    }

    /// Ordered basis of the second (negative definite) block.
    pub fn second_block(&self) -> alloc::vec::Vec<LatticeVector> {
        match self.n() {
            Some(n) => (n + 1..=9).map(LatticeVector::e).collect(),
            None => (3..=9).map(LatticeVector::e).chain([e0()]).collect(),
        }
    }

    /// Number of ambient coordinates `(h, e_1, ..)` that carry the first
    /// block: `n + 1` for standard labels, 3 for `8b` (`H ⊂ <h, e_1, e_2>`).
    pub fn picard_coords(&self) -> usize {
        match self.n() {
            Some(n) => n + 1,
            None => 3,
        }
    }

    /// Orthogonal decomposition `α = β + γ` into the first block
    /// (`Z^{1,n}`, or `H` for `8b`) and the second.
    pub fn split(&self, alpha: &LatticeVector) -> (LatticeVector, LatticeVector) {
        split(*self, alpha)
    }

    /// Whether `v` lies in the first block.
    pub fn in_first_block(&self, v: &LatticeVector) -> bool {
        let (_, gamma) = self.split(v);
        gamma.is_zero()
    }
}

impl fmt::Display for GradingLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GradingLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or(Error::UnknownLabel)
    }
}

/// `f_1 = h - e_1`.
pub fn f1() -> LatticeVector {
    LatticeVector::h() - LatticeVector::e(1)
}

/// `f_2 = h - e_2`.
pub fn f2() -> LatticeVector {
    LatticeVector::h() - LatticeVector::e(2)
}

/// `e_0 = h - e_1 - e_2`.
pub fn e0() -> LatticeVector {
    LatticeVector::h() - LatticeVector::e(1) - LatticeVector::e(2)
}

/// `ω_{2'} = h - e_1`.
pub fn omega_2p() -> LatticeVector {
    f1()
}

/// `ω_{3'} = h`.
pub fn omega_3p() -> LatticeVector {
    LatticeVector::h()
}

/// `ω_{4'} = 2h - e_1 - e_2`.
pub fn omega_4p() -> LatticeVector {
    LatticeVector::h() * 2 - LatticeVector::e(1) - LatticeVector::e(2)
}

/// Coordinates over the hyperbolic basis `(f_1, f_2, e_3, .., e_9, e_0)`.
///
/// Since `f_1·f_2 = 1` and the other basis vectors are orthonormal with
/// norm `-1`, the coefficients are read off by pairing.
pub fn to_hyperbolic(v: &LatticeVector) -> [i64; DIM] {
    let mut out = [0; DIM];
    out[0] = v.dot(&f2());
    out[1] = v.dot(&f1());
    for k in 3..=9 {
        out[k - 1] = -v.dot(&LatticeVector::e(k));
    }
    out[9] = -v.dot(&e0());
    out
}

/// Inverse of [`to_hyperbolic`].
pub fn from_hyperbolic(c: &[i64; DIM]) -> LatticeVector {
    let mut v = f1() * c[0] + f2() * c[1] + e0() * c[9];
    for k in 3..=9 {
        v += LatticeVector::e(k) * c[k - 1];
    }
    v
}

/// `x f_1 + y f_2` in standard coordinates.
pub fn hyperbolic_pair(x: i64, y: i64) -> LatticeVector {
    f1() * x + f2() * y
}

pub fn split(label: GradingLabel, alpha: &LatticeVector) -> (LatticeVector, LatticeVector) {
    match label.n() {
        Some(n) => {
            let mut beta = LatticeVector::ZERO;
            let mut gamma = LatticeVector::ZERO;
            beta.0[..=n].copy_from_slice(&alpha.0[..=n]);
            gamma.0[n + 1..].copy_from_slice(&alpha.0[n + 1..]);
            (beta, gamma)
        }
        None => {
            let beta = f1() * alpha.dot(&f2()) + f2() * alpha.dot(&f1());
            (beta, *alpha - beta)
        }
    }
}
