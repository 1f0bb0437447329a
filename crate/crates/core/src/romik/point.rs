//! Points of the arc `x² + xy + y² = 1`, `x, y ≥ 0`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::lattice::{quadratic_form, IntVec3};
use crate::arith::rational::BigRat;
use crate::arith::surd::Surd;
use crate::error::{Error, Result};

/// Rational point `(a/c, b/c)` stored as its primitive Eisenstein triple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirclePointQ {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl CirclePointQ {
    /// Validates a primitive triple with `a, b ≥ 0`, `c > 0` and `a² + ab + b² = c²`.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        let on_curve = quadratic_form(&IntVec3::new(a.clone(), b.clone(), c.clone())).is_zero();
        let primitive = a.gcd(&b).gcd(&c) == BigInt::from(1);
        if a.is_negative() || b.is_negative() || !c.is_positive() || !on_curve || !primitive {
            return Err(Error::NotOnCurve {
                a: a.to_string(),
                b: b.to_string(),
                c: c.to_string(),
            });
        }
        Ok(CirclePointQ { a, b, c })
    }

    /// Panicking constructor for small literal triples.
    pub fn triple(a: i64, b: i64, c: i64) -> Self {
        CirclePointQ::new(a, b, c).expect("not an Eisenstein triple")
    }

    /// The point represented by a nonzero isotropic vector, scaled to be primitive with `x3 > 0`.
    pub fn from_vector(v: &IntVec3) -> Result<Self> {
        let g = v.x1.gcd(&v.x2).gcd(&v.x3);
        if g.is_zero() {
            return Err(Error::InvalidInput("zero vector".into()));
        }
        let g = if v.x3.is_negative() { -g } else { g };
        CirclePointQ::new(&v.x1 / &g, &v.x2 / &g, &v.x3 / &g)
    }

    /// The point `(x, y)` given by rational coordinates.
    pub fn from_coords(x: &BigRat, y: &BigRat) -> Result<Self> {
        let den = x.denom().lcm(y.denom());
        let a = x.numer() * (&den / x.denom());
        let b = y.numer() * (&den / y.denom());
        CirclePointQ::from_vector(&IntVec3::new(a, b, den))
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn x(&self) -> BigRat {
        BigRat::new(self.a.clone(), self.c.clone())
    }

    pub fn y(&self) -> BigRat {
        BigRat::new(self.b.clone(), self.c.clone())
    }

    pub fn vector(&self) -> IntVec3 {
        IntVec3::new(self.a.clone(), self.b.clone(), self.c.clone())
    }

    /// Mirror image `(b, a, c)`.
    pub fn swap(&self) -> CirclePointQ {
        CirclePointQ {
            a: self.b.clone(),
            b: self.a.clone(),
            c: self.c.clone(),
        }
    }

    pub fn to_exact(&self) -> SurdPoint {
        SurdPoint {
            alpha: Surd::from_rat(self.x()),
            beta: Surd::from_rat(self.y()),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            crate::arith::rational::to_f64(&self.x()),
            crate::arith::rational::to_f64(&self.y()),
        )
    }

    /// Sort key `(c, a)`.
    pub fn key(&self) -> (&BigInt, &BigInt) {
        (&self.c, &self.a)
    }
}

impl fmt::Display for CirclePointQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// An exact point `(α, β)` of the arc with quadratic-surd coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdPoint {
    pub alpha: Surd,
    pub beta: Surd,
}

impl SurdPoint {
    /// Checks `α² + αβ + β² = 1` and `α, β ≥ 0`.
    pub fn is_on_arc(&self) -> bool {
        let q = &(&self.alpha.square() + &(&self.alpha * &self.beta)) + &self.beta.square();
        q == Surd::one() && !self.alpha.is_negative() && !self.beta.is_negative()
    }

    pub fn swap(&self) -> SurdPoint {
        SurdPoint {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.alpha.to_f64(), self.beta.to_f64())
    }

    /// The rational point, if both coordinates are rational.
    pub fn to_rational(&self) -> Option<CirclePointQ> {
        let x = self.alpha.as_rat()?;
        let y = self.beta.as_rat()?;
        CirclePointQ::from_coords(x, y).ok()
    }
}

impl fmt::Display for SurdPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn validation() {
        assert!(CirclePointQ::new(8, 7, 13).is_ok());
        assert!(CirclePointQ::new(16, 14, 26).is_err());
        assert!(CirclePointQ::new(1, 1, 1).is_err());
        assert!(CirclePointQ::new(-1, 0, 1).is_err());
        let p = CirclePointQ::from_vector(&IntVec3::new(-16, -14, -26)).unwrap();
        assert_eq!(p, CirclePointQ::triple(8, 7, 13));
        let q = CirclePointQ::from_coords(&rat(5, 7), &rat(3, 7)).unwrap();
        assert_eq!(q, CirclePointQ::triple(5, 3, 7));
        assert!(q.to_exact().is_on_arc());
    }
}
