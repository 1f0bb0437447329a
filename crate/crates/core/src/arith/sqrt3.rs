//! The real quadratic field Q(√3).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{int, sign_of_rat, BigRat};

/// The number `r + s·√3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtThree {
    pub r: BigRat,
    pub s: BigRat,
}

impl SqrtThree {
    pub fn new(r: BigRat, s: BigRat) -> Self {
        SqrtThree { r, s }
    }

    pub fn rational(r: BigRat) -> Self {
        SqrtThree { r, s: BigRat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(int(n))
    }

    /// `n·√3` for an integer `n`.
    pub fn root3_times(n: BigInt) -> Self {
        SqrtThree {
            r: BigRat::zero(),
            s: BigRat::from_integer(n),
        }
    }

    pub fn sqrt3() -> Self {
        SqrtThree {
            r: BigRat::zero(),
            s: BigRat::one(),
        }
    }

    pub fn zero() -> Self {
        Self::rational(BigRat::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    /// Galois conjugate `r - s·√3`.
    pub fn conj(&self) -> Self {
        SqrtThree {
            r: self.r.clone(),
            s: -self.s.clone(),
        }
    }

    /// Field norm `r² - 3s²`.
    pub fn norm(&self) -> BigRat {
        &self.r * &self.r - int(3) * &self.s * &self.s
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Exact sign of `r + s·√3`.
    pub fn signum(&self) -> i8 {
        let sr = sign_of_rat(&self.r);
        let ss = sign_of_rat(&self.s);
        if ss == 0 {
            return sr;
        }
        if sr == 0 || sr == ss {
            return ss;
        }
        // Opposite signs: the larger of r² and 3s² wins. They cannot be equal.
        match (&self.r * &self.r).cmp(&(int(3) * &self.s * &self.s)) {
            Ordering::Greater => sr,
            _ => ss,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, q: &BigRat) -> Self {
        SqrtThree {
            r: &self.r * q,
            s: &self.s * q,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero in Q(sqrt 3)");
        SqrtThree {
            r: &self.r / &n,
            s: -(&self.s / &n),
        }
    }

    pub fn to_f64(&self) -> f64 {
        super::rational::to_f64(&self.r) + super::rational::to_f64(&self.s) * 3f64.sqrt()
    }
}

impl PartialOrd for SqrtThree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SqrtThree {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl From<BigRat> for SqrtThree {
    fn from(r: BigRat) -> Self {
        SqrtThree::rational(r)
    }
}

impl From<i64> for SqrtThree {
    fn from(n: i64) -> Self {
        SqrtThree::from_int(n)
    }
}

/// A rational multiplier of a radical: `√3`, `2√3`, `(4/3)√3`.
pub(crate) fn radical_term(q: &BigRat, radical: &str) -> String {
    if q.is_one() {
        radical.to_string()
    } else if q.is_integer() {
        format!("{q}{radical}")
    } else {
        format!("({q}){radical}")
    }
}

impl fmt::Display for SqrtThree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r.is_zero(), self.s.is_zero()) {
            (_, true) => write!(f, "{}", self.r),
            (true, false) if self.s.is_negative() => write!(f, "-{}", radical_term(&-self.s.clone(), "√3")),
            (true, false) => write!(f, "{}", radical_term(&self.s, "√3")),
            (false, false) => {
                if self.s.is_negative() {
                    write!(f, "{} - {}", self.r, radical_term(&-self.s.clone(), "√3"))
                } else {
                    write!(f, "{} + {}", self.r, radical_term(&self.s, "√3"))
                }
            }
        }
    }
}

impl<'a> Add<&'a SqrtThree> for &'a SqrtThree {
    type Output = SqrtThree;
    fn add(self, o: &SqrtThree) -> SqrtThree {
        SqrtThree {
            r: &self.r + &o.r,
            s: &self.s + &o.s,
        }
    }
}

impl<'a> Sub<&'a SqrtThree> for &'a SqrtThree {
    type Output = SqrtThree;
    fn sub(self, o: &SqrtThree) -> SqrtThree {
        SqrtThree {
            r: &self.r - &o.r,
            s: &self.s - &o.s,
        }
    }
}

impl<'a> Mul<&'a SqrtThree> for &'a SqrtThree {
    type Output = SqrtThree;
    fn mul(self, o: &SqrtThree) -> SqrtThree {
        SqrtThree {
            r: &self.r * &o.r + int(3) * &self.s * &o.s,
            s: &self.r * &o.s + &self.s * &o.r,
        }
    }
}

impl<'a> Div<&'a SqrtThree> for &'a SqrtThree {
    type Output = SqrtThree;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &SqrtThree) -> SqrtThree {
        self * &o.inv()
    }
}

impl Neg for &SqrtThree {
    type Output = SqrtThree;
    fn neg(self) -> SqrtThree {
        SqrtThree {
            r: -self.r.clone(),
            s: -self.s.clone(),
        }
    }
}

impl Neg for SqrtThree {
    type Output = SqrtThree;
    fn neg(self) -> SqrtThree {
        SqrtThree {
            r: -self.r,
            s: -self.s,
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, o: $ty) -> $ty { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, o: &$ty) -> $ty { (&self).$m(o) }
        }
        impl<'a> $tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $m(self, o: $ty) -> $ty { self.$m(&o) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(SqrtThree, Add add, Sub sub, Mul mul, Div div);
