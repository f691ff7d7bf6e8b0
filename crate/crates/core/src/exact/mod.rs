//! Exact scalar arithmetic and exact linear algebra.
//!
//! Everything algebraic in this crate is written against the [`Scalar`]
//! trait, so the same Jordan-algebra code runs over Gaussian rationals
//! (exact checks), first-order dual numbers (infinitesimal checks),
//! symbolic polynomials (coefficient extraction) and machine complex
//! numbers (constructive realizations).

mod dual;
mod gauss;
mod matrix;
mod random;

pub use dual::Dual;
pub use gauss::{parse_rational, rational_to_string, GaussRational, Rational};
pub use matrix::{Echelon, ExactMatrix, SparseRow};
pub use random::{random_int_scalar, random_real_scalar, random_scalar, seeded_rng, SeedRng};

use num_complex::Complex64;

/// Commutative ring operations shared by every coefficient type.
///
/// Arithmetic takes references so big-rational values are not cloned on
/// every operation.
pub trait Scalar: Clone + std::fmt::Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    /// The embedding of `num/den` (den != 0).
    fn from_frac(num: i64, den: i64) -> Self;
    fn from_gauss(g: &GaussRational) -> Self;
    /// A square root of -1 in the coefficient ring.
    fn imag_unit() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn try_inv(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_frac(n, 1)
    }

    fn half(&self) -> Self {
        self.times(&Self::from_frac(1, 2))
    }
}

impl Scalar for GaussRational {
    fn zero() -> Self {
        GaussRational::zero()
    }
    fn one() -> Self {
        GaussRational::one()
    }
    fn from_frac(num: i64, den: i64) -> Self {
        GaussRational::from_frac(num, den)
    }
    fn from_gauss(g: &GaussRational) -> Self {
        g.clone()
    }
    fn imag_unit() -> Self {
        GaussRational::i()
    }
    fn is_zero(&self) -> bool {
        GaussRational::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_frac(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn from_gauss(g: &GaussRational) -> Self {
        g.to_complex()
    }
    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            None
        } else {
            Some(self.inv())
        }
    }
}
