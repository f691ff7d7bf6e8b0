use super::{GaussRational, Scalar};

/// First-order dual number `value + ε·deriv` with `ε² = 0`.
///
/// Lifting a polynomial map to duals and reading the ε-part gives its
/// exact directional derivative.
#[derive(Clone, Debug, PartialEq)]
pub struct Dual<S> {
    pub value: S,
    pub deriv: S,
}

impl<S: Scalar> Dual<S> {
    pub fn new(value: S, deriv: S) -> Self {
        Dual { value, deriv }
    }

    pub fn constant(value: S) -> Self {
        Dual {
            value,
            deriv: S::zero(),
        }
    }
}

impl<S: Scalar> Scalar for Dual<S> {
    fn zero() -> Self {
        Dual::constant(S::zero())
    }
    fn one() -> Self {
        Dual::constant(S::one())
    }
    fn from_frac(num: i64, den: i64) -> Self {
        Dual::constant(S::from_frac(num, den))
    }
    fn from_gauss(g: &GaussRational) -> Self {
        Dual::constant(S::from_gauss(g))
    }
    fn imag_unit() -> Self {
        Dual::constant(S::imag_unit())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.deriv.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        Dual {
            value: self.value.plus(&rhs.value),
            deriv: self.deriv.plus(&rhs.deriv),
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        Dual {
            value: self.value.minus(&rhs.value),
            deriv: self.deriv.minus(&rhs.deriv),
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        // (a + εb)(c + εd) = ac + ε(ad + bc)
        let deriv = match (self.deriv.is_zero(), rhs.deriv.is_zero()) {
            (true, true) => S::zero(),
            (true, false) => self.value.times(&rhs.deriv),
            (false, true) => self.deriv.times(&rhs.value),
            (false, false) => self.value.times(&rhs.deriv).plus(&self.deriv.times(&rhs.value)),
        };
        Dual {
            value: self.value.times(&rhs.value),
            deriv,
        }
    }
    fn negated(&self) -> Self {
        Dual {
            value: self.value.negated(),
            deriv: self.deriv.negated(),
        }
    }
    fn try_inv(&self) -> Option<Self> {
        // 1/(a + εb) = 1/a − ε b/a²
        let inv = self.value.try_inv()?;
        let deriv = self.deriv.times(&inv).times(&inv).negated();
        Some(Dual { value: inv, deriv })
    }
}
