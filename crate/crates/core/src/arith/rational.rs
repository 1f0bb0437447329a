//! Big rational helpers shared by the exact number types.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type BigRat = BigRational;

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> BigRat {
    BigRat::from_integer(n)
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn exact_sqrt(q: &BigRat) -> Option<BigRat> {
    let n = exact_isqrt(q.numer())?;
    let d = exact_isqrt(q.denom())?;
    Some(BigRat::new(n, d))
}

/// Rational `r` with `r^2 = q / 3`, if one exists (so that `sqrt(q) = r * sqrt(3)`).
pub fn exact_sqrt_over_three(q: &BigRat) -> Option<BigRat> {
    exact_sqrt(&(q / int(3)))
}

/// Rigorous enclosure `lo <= sqrt(q) <= hi` with dyadic endpoints of `bits` fractional bits.
pub fn sqrt_bounds(q: &BigRat, bits: u32) -> (BigRat, BigRat) {
    assert!(!q.is_negative(), "square root of a negative rational");
    if q.is_zero() {
        return (BigRat::zero(), BigRat::zero());
    }
    // sqrt(n/d) = sqrt(n*d) / d, then scale by 2^bits.
    let nd = q.numer() * q.denom();
    let scaled: BigInt = nd << (2 * bits as usize);
    let root = scaled.sqrt();
    let exact = &root * &root == scaled;
    let scale = BigInt::one() << bits as usize;
    let denom = q.denom() * &scale;
    let lo = BigRat::new(root.clone(), denom.clone());
    let hi = if exact {
        lo.clone()
    } else {
        BigRat::new(root + BigInt::one(), denom)
    };
    (lo, hi)
}

/// Rounds `q` down (towards -inf) to a dyadic rational with `bits` fractional bits.
pub fn floor_dyadic(q: &BigRat, bits: u32) -> BigRat {
    let scaled = q * from_bigint(BigInt::one() << bits as usize);
    BigRat::new(scaled.floor().to_integer(), BigInt::one() << bits as usize)
}

/// Rounds `q` up (towards +inf) to a dyadic rational with `bits` fractional bits.
pub fn ceil_dyadic(q: &BigRat, bits: u32) -> BigRat {
    let scaled = q * from_bigint(BigInt::one() << bits as usize);
    BigRat::new(scaled.ceil().to_integer(), BigInt::one() << bits as usize)
}

/// Converts a rational to the nearest `f64` (ties are irrelevant at this precision).
pub fn to_f64(q: &BigRat) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let negative = q.is_negative();
    let n = q.numer().magnitude().clone();
    let d = q.denom().magnitude().clone();
    // Normalise so the quotient carries 64 significant bits.
    let shift = n.bits() as i64 - d.bits() as i64 - 64;
    let (num, den) = if shift >= 0 {
        (n, d << shift as usize)
    } else {
        (n << (-shift) as usize, d)
    };
    let quotient: BigUint = num / den;
    let mantissa = biguint_to_f64(&quotient);
    let value = mantissa * 2f64.powi(shift as i32);
    if negative {
        -value
    } else {
        value
    }
}

fn biguint_to_f64(n: &BigUint) -> f64 {
    n.iter_u64_digits()
        .rev()
        .fold(0.0, |acc, digit| acc * 18446744073709551616.0 + digit as f64)
}

/// Sign of a big integer as -1, 0 or +1.
pub fn sign_of(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn sign_of_rat(q: &BigRat) -> i8 {
    sign_of(q.numer())
}

/// gcd of three integers (nonnegative).
pub fn gcd3(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    a.gcd(b).gcd(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_roots() {
        assert_eq!(exact_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(exact_sqrt(&rat(2, 1)), None);
        assert_eq!(exact_sqrt_over_three(&int(12)), Some(int(2)));
        assert_eq!(exact_sqrt_over_three(&int(13)), None);
    }

    #[test]
    fn sqrt_bounds_enclose() {
        let (lo, hi) = sqrt_bounds(&int(13), 100);
        assert!(&lo * &lo <= int(13));
        assert!(&hi * &hi >= int(13));
        assert!(&hi - &lo <= BigRat::new(BigInt::one(), BigInt::one() << 100));
        let (lo, hi) = sqrt_bounds(&rat(9, 16), 10);
        assert_eq!(lo, rat(3, 4));
        assert_eq!(hi, rat(3, 4));
    }

    #[test]
    fn float_conversion() {
        assert_eq!(to_f64(&rat(1, 4)), 0.25);
        assert_eq!(to_f64(&rat(-3, 2)), -1.5);
        assert!((to_f64(&rat(1, 3)) - 1.0 / 3.0).abs() < 1e-16);
        let big = BigRat::new(BigInt::from(10).pow(40), BigInt::from(3));
        assert!((to_f64(&big) / 3.333333333333333e39 - 1.0).abs() < 1e-15);
    }
}
