//! Slow, independent reference computations used to cross-check the fast paths.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, Zero};

use crate::arith::rational::{from_bigint, BigRat};

/// All primitive `(a, b, c)` with `a, b ≥ 0`, `a² + ab + b² = c²` and `c ≤ max_c`,
/// by brute force over `(a, b)`, sorted by `(c, a)`.
pub fn sieve_triples(max_c: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    let limit = (max_c as u128) * (max_c as u128);
    for a in 0..=max_c {
        for b in 0..=max_c {
            let n = (a as u128) * (a as u128) + (a as u128) * (b as u128) + (b as u128) * (b as u128);
            if n > limit {
                break;
            }
            if n == 0 {
                continue;
            }
            let c = n.sqrt();
            if c * c == n && a.gcd(&b) == 1 {
                out.push([a, b, c as u64]);
            }
        }
    }
    out.sort_unstable_by_key(|t| (t[2], t[0]));
    out
}

/// `δ(P; Z) = Ht(Z)·‖P − Z‖` in the metric `x² + xy + y²`, in floating point.
pub fn delta_geometric(p: (f64, f64), z: [u64; 3]) -> f64 {
    let c = z[2] as f64;
    let dx = p.0 - z[0] as f64 / c;
    let dy = p.1 - z[1] as f64 / c;
    c * (dx * dx + dx * dy + dy * dy).sqrt()
}

/// Sign of `r + s√3 + (u + v√3)√Δ` for integers, by fixed-point evaluation at `bits` bits.
///
/// Returns `None` when the value is within the evaluation error of zero.
pub fn sign_fixed_point(coeffs: [&BigInt; 4], delta: &BigInt, bits: u32) -> Option<i8> {
    let scale = BigInt::from(1) << (2 * bits as usize);
    let root = |n: &BigInt| -> BigInt { (n * &scale).sqrt() };
    let s3 = root(&BigInt::from(3));
    let sd = root(delta);
    let s3d = root(&(delta * 3));
    let [r, s, u, v] = coeffs;
    let approx = (r << bits as usize) + s * &s3 + u * &sd + v * &s3d;
    // Each truncated root is low by less than one unit.
    let err = s.abs() + u.abs() + v.abs() + 1;
    if approx.abs() <= err {
        return None;
    }
    Some(if approx.is_positive() { 1 } else { -1 })
}

/// Same as [`sign_fixed_point`] for rational coefficients.
pub fn sign_fixed_point_rat(coeffs: [&BigRat; 4], delta: &BigInt, bits: u32) -> Option<i8> {
    let den = coeffs
        .iter()
        .fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|q| (*q * from_bigint(den.clone())).to_integer())
        .collect();
    if ints.iter().all(|x| x.is_zero()) {
        return Some(0);
    }
    sign_fixed_point([&ints[0], &ints[1], &ints[2], &ints[3]], delta, bits)
}
