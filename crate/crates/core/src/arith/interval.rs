//! Dyadic interval enclosures and certified decimal rendering.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{from_bigint, BigRat};

/// Closed interval `[lo, hi] / 2^bits` with integer endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub bits: u32,
}

fn shift_floor(n: &BigInt, bits: u32) -> BigInt {
    n.div_floor(&(BigInt::one() << bits as usize))
}

fn shift_ceil(n: &BigInt, bits: u32) -> BigInt {
    -((-n).div_floor(&(BigInt::one() << bits as usize)))
}

impl Interval {
    pub fn point(n: BigInt, bits: u32) -> Self {
        Interval {
            lo: n.clone(),
            hi: n,
            bits,
        }
    }

    pub fn zero(bits: u32) -> Self {
        Self::point(BigInt::zero(), bits)
    }

    /// Tightest dyadic enclosure of a rational.
    pub fn from_rat(q: &BigRat, bits: u32) -> Self {
        let scaled = q.numer() << bits as usize;
        let (lo, rem) = scaled.div_mod_floor(q.denom());
        let hi = if rem.is_zero() { lo.clone() } else { &lo + 1 };
        Interval { lo, hi, bits }
    }

    /// Enclosure of `sqrt(q)` for a nonnegative rational `q`.
    pub fn sqrt_of(q: &BigRat, bits: u32) -> Self {
        assert!(!q.is_negative(), "square root of a negative rational");
        let scaled = q.numer() << (2 * bits as usize);
        let (fl, rem) = scaled.div_mod_floor(q.denom());
        let lo = fl.sqrt();
        let hi = if rem.is_zero() && &lo * &lo == fl {
            lo.clone()
        } else {
            &lo + 1
        };
        Interval { lo, hi, bits }
    }

    /// Enclosure of the square root of a nonnegative interval.
    pub fn sqrt(&self) -> Interval {
        assert!(!self.lo.is_negative(), "square root of a negative interval");
        let lo = (&self.lo << self.bits as usize).sqrt();
        let hi_sq = &self.hi << self.bits as usize;
        let r = hi_sq.sqrt();
        let hi = if &r * &r == hi_sq { r } else { r + 1 };
        Interval { lo, hi, bits: self.bits }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        debug_assert_eq!(self.bits, o.bits);
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
            bits: self.bits,
        }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
            bits: self.bits,
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        debug_assert_eq!(self.bits, o.bits);
        let products = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let min = products.iter().min().unwrap();
        let max = products.iter().max().unwrap();
        Interval {
            lo: shift_floor(min, self.bits),
            hi: shift_ceil(max, self.bits),
            bits: self.bits,
        }
    }

    /// Sign if the interval excludes zero (or is exactly the point zero).
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn lo_rat(&self) -> BigRat {
        BigRat::new(self.lo.clone(), BigInt::one() << self.bits as usize)
    }

    pub fn hi_rat(&self) -> BigRat {
        BigRat::new(self.hi.clone(), BigInt::one() << self.bits as usize)
    }

    pub fn width_rat(&self) -> BigRat {
        self.hi_rat() - self.lo_rat()
    }

    pub fn mid_f64(&self) -> f64 {
        let mid = BigRat::new(&self.lo + &self.hi, BigInt::one() << (self.bits as usize + 1));
        super::rational::to_f64(&mid)
    }

    /// Compares two enclosures; `None` when they overlap.
    pub fn cmp_disjoint(&self, o: &Interval) -> Option<Ordering> {
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if o.hi < self.lo {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

/// How a decimal rendering treats digits beyond the last printed place.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecimalMode {
    /// Drop the remaining digits (round towards zero).
    Truncate,
    /// Round to the nearest printed value.
    Nearest,
}

/// Formats `±n / 10^places` as a decimal string.
pub fn format_scaled(n: &BigInt, places: usize, negative: bool) -> String {
    let digits = n.to_string();
    let body = if places == 0 {
        digits
    } else if digits.len() > places {
        let (int_part, frac) = digits.split_at(digits.len() - places);
        format!("{int_part}.{frac}")
    } else {
        format!("0.{}{}", "0".repeat(places - digits.len()), digits)
    };
    if negative && !n.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

/// Renders a nonnegative rational exactly to `places` digits.
pub fn render_rat(q: &BigRat, places: usize, mode: DecimalMode) -> String {
    let negative = q.is_negative();
    let scaled = q.abs() * from_bigint(BigInt::from(10).pow(places as u32));
    let n = match mode {
        DecimalMode::Truncate => scaled.floor().to_integer(),
        DecimalMode::Nearest => (scaled + BigRat::new(BigInt::one(), BigInt::from(2)))
            .floor()
            .to_integer(),
    };
    format_scaled(&n, places, negative)
}

/// Scaled integer digit for an enclosure endpoint, or `None` if the endpoints disagree.
pub fn decimal_digits(enclosure: &Interval, places: usize, mode: DecimalMode) -> Option<BigInt> {
    let ten = BigInt::from(10).pow(places as u32);
    let denom = BigInt::one() << enclosure.bits as usize;
    let pick = |end: &BigInt| -> BigInt {
        let scaled = end * &ten;
        match mode {
            DecimalMode::Truncate => scaled.div_floor(&denom),
            DecimalMode::Nearest => {
                let twice: BigInt = scaled * 2 + &denom;
                twice.div_floor(&(&denom * 2))
            }
        }
    };
    let lo = pick(&enclosure.lo);
    let hi = pick(&enclosure.hi);
    (lo == hi).then_some(lo)
}
