//! Heights, approximation constants and the Perron formula.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::lattice::{pairing, IntVec3};
use crate::arith::rational::{from_bigint, rat, BigRat};
use crate::arith::surd::Surd;
use crate::error::{Error, Result};
use crate::romik::line::{norm_of_stream, point_of_stream, ExtNorm};
use crate::romik::{cylinder_boundaries, CirclePointQ, DigitStream, RomikWord, SurdPoint};

/// `Ht(Z) = c = −⟨z, (0, 0, 1)⟩`.
pub fn height(z: &CirclePointQ) -> BigInt {
    let via_pairing = -pairing(&z.vector(), &IntVec3::new(0, 0, 1));
    debug_assert_eq!(via_pairing, from_bigint(z.c().clone()));
    z.c().clone()
}

/// `⟨p, z⟩` for `p = (α, β, 1)` and an integral `z`.
pub fn pairing_exact(p: &SurdPoint, z: &IntVec3) -> Surd {
    let half = rat(1, 2);
    let ca = from_bigint(z.x1.clone()) + from_bigint(z.x2.clone()) * &half;
    let cb = from_bigint(z.x2.clone()) + from_bigint(z.x1.clone()) * &half;
    let lin = &p.alpha.scale(&ca) + &p.beta.scale(&cb);
    &lin - &Surd::from_rat(from_bigint(z.x3.clone()))
}

/// `δ²(P; Z) = −2c⟨p, z⟩` for an exact target point.
pub fn delta_sq(p: &SurdPoint, z: &CirclePointQ) -> Result<Surd> {
    let v = pairing_exact(p, &z.vector()).scale(&from_bigint(BigInt::from(-2) * z.c()));
    if v.is_zero() {
        return Err(Error::SamePoint);
    }
    Ok(v)
}

/// `δ²(P; Z)` between two rational points.
pub fn delta_sq_rational(p: &CirclePointQ, z: &CirclePointQ) -> Result<BigRat> {
    let pv = IntVec3::new(p.a().clone(), p.b().clone(), p.c().clone());
    let inner = pairing(&pv, &z.vector()) / from_bigint(p.c().clone());
    let v = inner * from_bigint(BigInt::from(-2) * z.c());
    if v.is_zero() {
        return Err(Error::SamePoint);
    }
    Ok(v)
}

/// `δ²(P; Z)` for a target given by its digit stream.
pub fn delta_sq_stream(s: &DigitStream, z: &CirclePointQ) -> Result<Surd> {
    delta_sq(&point_of_stream(s)?, z)
}

/// The pieces of the Perron formula at depth `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerronTerms {
    pub k: usize,
    /// `Z_k^(1,0)(P)`, the approximant the formula describes.
    pub approximant: CirclePointQ,
    /// `ε_k²`.
    pub eps_sq: Surd,
    /// `‖(P̂″_k)^∨‖ + ‖P′_k‖`.
    pub denominator: Surd,
    /// `ε_k² / denominator²`.
    pub delta_sq: Surd,
}

impl PerronTerms {
    pub fn delta_f64(&self) -> f64 {
        self.delta_sq.to_f64().sqrt()
    }
}

/// Digit map `d ↦ (d̂)^∨`: swaps 2 and 4 and fixes 1, 3, 5.
pub fn hat_vee(d: u8) -> u8 {
    match d {
        2 => 4,
        4 => 2,
        other => other,
    }
}

/// Perron's formula `δ(P; Z_k) = ε_k / (‖(P̂″_k)^∨‖ + ‖P′_k‖)`, squared and exact.
///
/// `P′_k = 𝒯^k(P)`, `P″_k = [d_k, …, d_1, 1^∞]`, and `ε_k² = Ht(Z_k)·⟨p, u⟩/⟨z_k, u⟩`
/// with `u = (1, 0, 1)`.
pub fn perron_delta(s: &DigitStream, k: usize) -> Result<PerronTerms> {
    if k < 1 {
        return Err(Error::IndexOutOfRange(k));
    }
    if s.is_terminal() {
        return Err(Error::InvalidInput(format!("{s} is a rational point")));
    }
    let w = s.prefix(k);
    let (z, _) = cylinder_boundaries(&w);
    let u = IntVec3::new(1, 0, 1);
    let zu = pairing(&z.vector(), &u);
    if zu.is_zero() {
        return Err(Error::DegenerateWord(w.to_string()));
    }
    let p = point_of_stream(s)?;
    let pu = pairing_exact(&p, &u);
    let eps_sq = pu.scale(&(from_bigint(z.c().clone()) / zu));

    let past = w.reversed().map(hat_vee);
    let past_stream = DigitStream::new(past, RomikWord::from_digits(&[1]))?;
    let past_norm = match norm_of_stream(&past_stream)? {
        ExtNorm::Finite(v) => v,
        ExtNorm::Infinity => return Err(Error::DegenerateWord(w.to_string())),
    };
    let future_norm = match norm_of_stream(&s.shift(k))? {
        ExtNorm::Finite(v) => v,
        ExtNorm::Infinity => return Err(Error::DegenerateWord(s.to_string())),
    };
    let denominator = &past_norm + &future_norm;
    let delta_sq = &eps_sq / &denominator.square();
    Ok(PerronTerms {
        k,
        approximant: z,
        eps_sq,
        denominator,
        delta_sq,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::arith::sqrt3::SqrtThree;

    fn t(a: i64, b: i64, c: i64) -> CirclePointQ {
        CirclePointQ::triple(a, b, c)
    }

    #[test]
    fn heights() {
        assert_eq!(height(&t(1, 0, 1)), BigInt::from(1));
        assert_eq!(height(&t(8, 7, 13)), BigInt::from(13));
        assert_eq!(height(&t(35, 13, 43)), BigInt::from(43));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_sq_rational(&t(8, 7, 13), &t(1, 0, 1)).unwrap(), rat(3, 13));
        let three = DigitStream::from_digits(&[], &[3]);
        let two_minus = Surd::from_sqrt3(SqrtThree::new(int(2), int(-1)));
        assert_eq!(delta_sq_stream(&three, &t(1, 0, 1)).unwrap(), two_minus);
        let want = Surd::from_sqrt3(SqrtThree::new(int(338), int(-195)));
        assert_eq!(delta_sq_stream(&three, &t(8, 7, 13)).unwrap(), want);
        assert_eq!(delta_sq_rational(&t(8, 7, 13), &t(8, 7, 13)), Err(Error::SamePoint));
        let exact = t(5, 3, 7).to_exact();
        assert_eq!(delta_sq(&exact, &t(5, 3, 7)), Err(Error::SamePoint));
    }

    #[test]
    fn perron_examples() {
        let three = DigitStream::from_digits(&[], &[3]);
        let terms = perron_delta(&three, 1).unwrap();
        assert_eq!(terms.approximant, t(8, 7, 13));
        assert_eq!(terms.delta_sq, Surd::from_sqrt3(SqrtThree::new(int(338), int(-195))));
        assert!((terms.delta_f64() - 0.50009).abs() < 1e-4);
        assert_eq!(perron_delta(&three, 0), Err(Error::IndexOutOfRange(0)));
        let ones = DigitStream::from_digits(&[1, 1], &[2]);
        assert!(matches!(perron_delta(&ones, 2), Err(Error::DegenerateWord(_))));
    }
}
