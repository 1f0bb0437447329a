//! Elements of Q(√3)(√Δ) with exact sign determination.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::interval::{decimal_digits, format_scaled, render_rat, DecimalMode, Interval};
use super::rational::{exact_isqrt, from_bigint, int, BigRat};
use super::sqrt3::{forward_owned, radical_term, SqrtThree};
use crate::error::{Error, Result};

/// Starting precision for cross-field comparisons.
pub const START_BITS: u32 = 128;
/// Precision beyond which two values are declared indistinguishable.
pub const MAX_BITS: u32 = 1024;

/// The real number `x + y·√Δ` with `x, y ∈ Q(√3)` and `Δ ≥ 0`.
///
/// Values are kept normalized: `Δ` is a positive integer that is not a
/// multiple of 3 and has no small square factor, or `Δ = 0` together with
/// `y = 0` when the value already lies in Q(√3).
#[derive(Clone, Debug)]
pub struct Surd {
    x: SqrtThree,
    y: SqrtThree,
    delta: BigInt,
}

const SMALL_PRIMES: [u32; 24] = [
    2, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

impl Surd {
    /// Builds `x + y·√Δ`. Panics if `Δ < 0`.
    pub fn new(x: SqrtThree, y: SqrtThree, delta: BigRat) -> Self {
        assert!(!delta.is_negative(), "negative radicand");
        if y.is_zero() || delta.is_zero() {
            return Surd::from_sqrt3(x);
        }
        // √(n/d) = √(n·d) / d.
        let mut y = y.scale(&BigRat::new(BigInt::one(), delta.denom().clone()));
        let mut d: BigInt = delta.numer() * delta.denom();
        let nine = BigInt::from(9);
        while (&d % &nine).is_zero() {
            d /= &nine;
            y = y.scale(&int(3));
        }
        if (&d % 3u32).is_zero() {
            d /= 3u32;
            y = &y * &SqrtThree::sqrt3();
        }
        for p in SMALL_PRIMES {
            let sq = BigInt::from(p * p);
            while d > sq && (&d % &sq).is_zero() {
                d /= &sq;
                y = y.scale(&int(p as i64));
            }
        }
        if let Some(root) = exact_isqrt(&d) {
            return Surd::from_sqrt3(&x + &y.scale(&from_bigint(root)));
        }
        Surd { x, y, delta: d }
    }

    pub fn from_sqrt3(x: SqrtThree) -> Self {
        Surd {
            x,
            y: SqrtThree::zero(),
            delta: BigInt::zero(),
        }
    }

    pub fn from_rat(q: BigRat) -> Self {
        Surd::from_sqrt3(SqrtThree::rational(q))
    }

    pub fn from_int(n: i64) -> Self {
        Surd::from_rat(int(n))
    }

    pub fn zero() -> Self {
        Surd::from_int(0)
    }

    pub fn one() -> Self {
        Surd::from_int(1)
    }

    pub fn sqrt3() -> Self {
        Surd::from_sqrt3(SqrtThree::sqrt3())
    }

    /// `√q` for a nonnegative rational.
    pub fn sqrt_rat(q: &BigRat) -> Self {
        Surd::new(SqrtThree::zero(), SqrtThree::one(), q.clone())
    }

    pub fn x(&self) -> &SqrtThree {
        &self.x
    }

    pub fn y(&self) -> &SqrtThree {
        &self.y
    }

    /// Normalized radicand; zero when the value lies in Q(√3).
    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn in_sqrt3(&self) -> bool {
        self.y.is_zero()
    }

    pub fn as_sqrt3(&self) -> Option<&SqrtThree> {
        self.in_sqrt3().then_some(&self.x)
    }

    /// The value as a rational, if it is one.
    pub fn as_rat(&self) -> Option<&BigRat> {
        (self.in_sqrt3() && self.x.s.is_zero()).then_some(&self.x.r)
    }

    /// Conjugate `x - y·√Δ`.
    pub fn conj(&self) -> Self {
        Surd {
            x: self.x.clone(),
            y: -&self.y,
            delta: self.delta.clone(),
        }
    }

    /// Rewrites `other` over this value's radicand, if both share a field.
    fn align(&self, other: &Surd) -> Option<(BigInt, SqrtThree, SqrtThree)> {
        if other.y.is_zero() {
            return Some((self.delta.clone(), self.y.clone(), SqrtThree::zero()));
        }
        if self.y.is_zero() {
            return Some((other.delta.clone(), SqrtThree::zero(), other.y.clone()));
        }
        if self.delta == other.delta {
            return Some((self.delta.clone(), self.y.clone(), other.y.clone()));
        }
        // √Δ₂ = (√(Δ₁Δ₂) / Δ₁) · √Δ₁ when Δ₁Δ₂ is a square.
        let prod = &self.delta * &other.delta;
        let root = exact_isqrt(&prod)?;
        let ratio = BigRat::new(root, self.delta.clone());
        Some((self.delta.clone(), self.y.clone(), other.y.scale(&ratio)))
    }

    /// Coefficients `(x, y)` with `self = x + y·√delta`, if `delta` spans this value's field.
    pub fn coefficients_over(&self, delta: &BigInt) -> Option<(SqrtThree, SqrtThree)> {
        if self.y.is_zero() {
            return Some((self.x.clone(), SqrtThree::zero()));
        }
        let probe = Surd {
            x: SqrtThree::zero(),
            y: SqrtThree::one(),
            delta: delta.clone(),
        };
        if delta.is_zero() {
            return None;
        }
        let (_, _, y) = probe.align(self)?;
        Some((self.x.clone(), y))
    }

    /// True when both values live in a common field Q(√3)(√Δ).
    pub fn same_field(&self, other: &Surd) -> bool {
        self.align(other).is_some()
    }

    fn mixed(&self, other: &Surd) -> Error {
        Error::MixedField(self.delta.to_string(), other.delta.to_string())
    }

    pub fn checked_add(&self, other: &Surd) -> Result<Surd> {
        let (d, y1, y2) = self.align(other).ok_or_else(|| self.mixed(other))?;
        Ok(Surd::new(&self.x + &other.x, &y1 + &y2, from_bigint(d)))
    }

    pub fn checked_sub(&self, other: &Surd) -> Result<Surd> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Surd) -> Result<Surd> {
        let (d, y1, y2) = self.align(other).ok_or_else(|| self.mixed(other))?;
        let dq = SqrtThree::rational(from_bigint(d.clone()));
        let x = &(&self.x * &other.x) + &(&(&y1 * &y2) * &dq);
        let y = &(&self.x * &y2) + &(&y1 * &other.x);
        Ok(Surd::new(x, y, from_bigint(d)))
    }

    /// `x² - y²Δ`, the relative norm down to Q(√3).
    pub fn rel_norm(&self) -> SqrtThree {
        let dq = SqrtThree::rational(from_bigint(self.delta.clone()));
        &self.x.square() - &(&self.y.square() * &dq)
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Surd {
        let n = self.rel_norm();
        assert!(!n.is_zero(), "inverse of zero surd");
        let ninv = n.inv();
        Surd {
            x: &self.x * &ninv,
            y: -(&self.y * &ninv),
            delta: self.delta.clone(),
        }
    }

    pub fn checked_div(&self, other: &Surd) -> Result<Surd> {
        if other.is_zero() {
            return Err(Error::InvalidInput("division by zero".into()));
        }
        self.checked_mul(&other.inv())
    }

    pub fn square(&self) -> Surd {
        self * self
    }

    pub fn scale(&self, q: &BigRat) -> Surd {
        Surd::tidy(self.x.scale(q), self.y.scale(q), self.delta.clone())
    }

    pub fn scale_sqrt3(&self, q: &SqrtThree) -> Surd {
        Surd::tidy(&self.x * q, &self.y * q, self.delta.clone())
    }

    fn tidy(x: SqrtThree, y: SqrtThree, delta: BigInt) -> Surd {
        if y.is_zero() {
            Surd::from_sqrt3(x)
        } else {
            Surd { x, y, delta }
        }
    }

    /// Exact sign of `x + y·√Δ`.
    pub fn signum(&self) -> i8 {
        let sx = self.x.signum();
        let sy = self.y.signum();
        if sy == 0 {
            return sx;
        }
        if sx == 0 || sx == sy {
            return sy;
        }
        // Opposite signs: compare x² with y²Δ inside Q(√3).
        match self.rel_norm().signum() {
            1 => sx,
            -1 => sy,
            _ => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Surd {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Dyadic enclosure with `bits` fractional bits.
    pub fn enclosure(&self, bits: u32) -> Interval {
        let s3 = Interval::sqrt_of(&int(3), bits);
        let part = |v: &SqrtThree| {
            let r = Interval::from_rat(&v.r, bits);
            if v.s.is_zero() {
                r
            } else {
                r.add(&Interval::from_rat(&v.s, bits).mul(&s3))
            }
        };
        let mut out = part(&self.x);
        if !self.y.is_zero() {
            let sd = Interval::sqrt_of(&from_bigint(self.delta.clone()), bits);
            out = out.add(&part(&self.y).mul(&sd));
        }
        out
    }

    /// Sign decided by refining enclosures; used when exact logic is unavailable.
    fn interval_sign(parts: &[(&Surd, i8)]) -> Result<i8> {
        let mut bits = START_BITS;
        loop {
            let mut acc = Interval::zero(bits);
            for (v, sgn) in parts {
                let e = v.enclosure(bits);
                acc = if *sgn >= 0 { acc.add(&e) } else { acc.sub(&e) };
            }
            if let Some(s) = acc.sign() {
                return Ok(s);
            }
            if bits >= MAX_BITS {
                return Err(Error::Indistinguishable(bits));
            }
            bits *= 2;
        }
    }

    /// Exact comparison when both values share a field, interval-certified otherwise.
    pub fn try_cmp(&self, other: &Surd) -> Result<Ordering> {
        if let Ok(diff) = self.checked_sub(other) {
            return Ok(diff.signum().cmp(&0));
        }
        Ok(Surd::interval_sign(&[(self, 1), (other, -1)])?.cmp(&0))
    }

    /// Rigorous sign of `a + b` for values from possibly different fields.
    pub fn sum_sign(a: &Surd, b: &Surd) -> Result<i8> {
        match a.checked_add(b) {
            Ok(s) => Ok(s.signum()),
            Err(_) => Surd::interval_sign(&[(a, 1), (b, 1)]),
        }
    }

    pub fn max(self, other: Surd) -> Result<Surd> {
        Ok(match self.try_cmp(&other)? {
            Ordering::Less => other,
            _ => self,
        })
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(q) = self.as_rat() {
            return super::rational::to_f64(q);
        }
        let mut bits = 96;
        loop {
            let e = self.enclosure(bits);
            let mid = e.mid_f64();
            let width = super::rational::to_f64(&e.width_rat());
            if width <= mid.abs() * 1e-17 || bits >= MAX_BITS {
                return mid;
            }
            bits *= 2;
        }
    }

    /// Decimal rendering to `places` digits, certified against the exact value.
    pub fn render(&self, places: usize, mode: DecimalMode) -> Result<String> {
        if let Some(q) = self.as_rat() {
            return Ok(render_rat(q, places, mode));
        }
        let negative = self.is_negative();
        let magnitude = self.abs();
        let mut bits = 64 + 4 * places as u32;
        loop {
            let e = magnitude.enclosure(bits);
            if let Some(n) = decimal_digits(&e, places, mode) {
                return Ok(format_scaled(&n, places, negative));
            }
            if bits >= 4 * MAX_BITS {
                return Err(Error::Indistinguishable(bits));
            }
            bits *= 2;
        }
    }

    /// Decimal rendering of `√self` for a nonnegative value.
    pub fn render_sqrt(&self, places: usize, mode: DecimalMode) -> Result<String> {
        if self.is_negative() {
            return Err(Error::InvalidInput(format!("square root of negative {self}")));
        }
        if let Some(q) = self.as_rat() {
            return Surd::sqrt_rat(q).render(places, mode);
        }
        let mut bits = 64 + 8 * places as u32;
        loop {
            if let Some(n) = decimal_digits(&self.enclosure(bits).sqrt(), places, mode) {
                return Ok(format_scaled(&n, places, false));
            }
            if bits >= 4 * MAX_BITS {
                return Err(Error::Indistinguishable(bits));
            }
            bits *= 2;
        }
    }

    /// Square of the value as a rational, if `x = 0` or `y = 0` make it one.
    pub fn square_as_rat(&self) -> Option<BigRat> {
        self.square().as_rat().cloned()
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        match self.checked_sub(other) {
            Ok(d) => d.is_zero(),
            Err(_) => false,
        }
    }
}

impl Eq for Surd {}

impl PartialOrd for Surd {
    /// `None` only when two values from different fields cannot be separated.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl From<SqrtThree> for Surd {
    fn from(x: SqrtThree) -> Self {
        Surd::from_sqrt3(x)
    }
}

impl From<BigRat> for Surd {
    fn from(q: BigRat) -> Self {
        Surd::from_rat(q)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "{}", self.x);
        }
        let root = format!("√{}", self.delta);
        let q = &self.y.r;
        let (negative, y) = match self.y.is_rational() {
            true if q.is_negative() => (true, radical_term(&-q.clone(), &root)),
            true => (false, radical_term(q, &root)),
            false => (false, format!("({}){root}", self.y)),
        };
        match (self.x.is_zero(), negative) {
            (true, true) => write!(f, "-{y}"),
            (true, false) => write!(f, "{y}"),
            (false, neg) => {
                let x = if self.x.is_rational() { self.x.to_string() } else { format!("({})", self.x) };
                write!(f, "{x} {} {y}", if neg { "-" } else { "+" })
            }
        }
    }
}

impl<'a> Add<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn add(self, o: &Surd) -> Surd {
        self.checked_add(o).expect("surds from different fields")
    }
}

impl<'a> Sub<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn sub(self, o: &Surd) -> Surd {
        self.checked_sub(o).expect("surds from different fields")
    }
}

impl<'a> Mul<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn mul(self, o: &Surd) -> Surd {
        self.checked_mul(o).expect("surds from different fields")
    }
}

impl<'a> Div<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn div(self, o: &Surd) -> Surd {
        self.checked_div(o).expect("surd division failed")
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            x: -&self.x,
            y: -&self.y,
            delta: self.delta.clone(),
        }
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

forward_owned!(Surd, Add add, Sub sub, Mul mul, Div div);

/// Exact sign of a [`Surd`].
pub fn surd_sign(v: &Surd) -> i8 {
    v.signum()
}
