//! The stereographic coordinate `‖·‖` and the conjugate piecewise Möbius system on `[0, ∞]`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::point::{CirclePointQ, SurdPoint};
use super::word::{DigitStream, RomikWord};
use crate::arith::mobius::{n_graded, Graded, Mat2S};
use crate::arith::rational::{from_bigint, int, rat, BigRat};
use crate::arith::sqrt3::SqrtThree;
use crate::arith::surd::Surd;
use crate::error::{Error, Result};

/// A point of `[0, ∞]`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum ExtNorm {
    Finite(Surd),
    Infinity,
}

impl ExtNorm {
    pub fn zero() -> Self {
        ExtNorm::Finite(Surd::zero())
    }

    pub fn finite(&self) -> Option<&Surd> {
        match self {
            ExtNorm::Finite(v) => Some(v),
            ExtNorm::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtNorm::Infinity)
    }

    /// Order on `[0, ∞]`; cross-field finite values are separated by intervals.
    pub fn try_cmp(&self, other: &ExtNorm) -> Result<Ordering> {
        match (self, other) {
            (ExtNorm::Infinity, ExtNorm::Infinity) => Ok(Ordering::Equal),
            (ExtNorm::Infinity, _) => Ok(Ordering::Greater),
            (_, ExtNorm::Infinity) => Ok(Ordering::Less),
            (ExtNorm::Finite(a), ExtNorm::Finite(b)) => a.try_cmp(b),
        }
    }

    /// `1/t` with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> ExtNorm {
        match self {
            ExtNorm::Infinity => ExtNorm::zero(),
            ExtNorm::Finite(v) if v.is_zero() => ExtNorm::Infinity,
            ExtNorm::Finite(v) => ExtNorm::Finite(v.inv()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtNorm::Finite(v) => v.to_f64(),
            ExtNorm::Infinity => f64::INFINITY,
        }
    }
}

impl fmt::Display for ExtNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNorm::Finite(v) => write!(f, "{v}"),
            ExtNorm::Infinity => write!(f, "∞"),
        }
    }
}

fn sqrt3() -> Surd {
    Surd::sqrt3()
}

/// `‖(a/c, b/c)‖ = √3·(a + b − c)/(2c − 2a − b)`, infinite exactly at `(1, 0)`.
pub fn stereo_norm(p: &CirclePointQ) -> ExtNorm {
    let num = p.a() + p.b() - p.c();
    let den: BigInt = BigInt::from(2) * p.c() - BigInt::from(2) * p.a() - p.b();
    if den.is_zero() {
        return ExtNorm::Infinity;
    }
    let s = BigRat::new(num, den);
    ExtNorm::Finite(Surd::from_sqrt3(SqrtThree::new(BigRat::zero(), s)))
}

/// `‖(α, β)‖ = √3(α + β − 1)/(2 − 2α − β)` for an exact point of the arc.
pub fn stereo_norm_exact(p: &SurdPoint) -> ExtNorm {
    let one = Surd::one();
    let den = &(&Surd::from_int(2) - &p.alpha.scale(&int(2))) - &p.beta;
    if den.is_zero() {
        return ExtNorm::Infinity;
    }
    let num = &(&(&p.alpha + &p.beta) - &one) * &sqrt3();
    ExtNorm::Finite(&num / &den)
}

/// Inverse of the stereographic coordinate.
///
/// With `u = 2t + √3`: `β = 4u/(√3(u² + 1))` and `α = (u² − 1 − 2u/√3)/(u² + 1)`.
pub fn point_from_norm(t: &ExtNorm) -> SurdPoint {
    let t = match t {
        ExtNorm::Infinity => {
            return SurdPoint {
                alpha: Surd::one(),
                beta: Surd::zero(),
            }
        }
        ExtNorm::Finite(t) => t,
    };
    let s3 = sqrt3();
    let u = &t.scale(&int(2)) + &s3;
    let u2 = u.square();
    let den = &u2 + &Surd::one();
    let beta = &u.scale(&int(4)) / &(&den * &s3);
    let alpha = &(&(&u2 - &Surd::one()) - &(&u.scale(&int(2)) / &s3)) / &den;
    SurdPoint { alpha, beta }
}

/// Thresholds √3, 2/√3, √3/2, 1/√3 separating the five branches.
fn thresholds() -> [Surd; 4] {
    let r = |n: i64, d: i64| Surd::from_sqrt3(SqrtThree::new(BigRat::zero(), rat(n, d)));
    [r(1, 1), r(2, 3), r(1, 2), r(1, 3)]
}

/// Digits whose branch contains `t`; two digits exactly at the four thresholds.
pub fn line_digits(t: &ExtNorm) -> Vec<u8> {
    let t = match t {
        ExtNorm::Infinity => return vec![1],
        ExtNorm::Finite(t) => t,
    };
    let th = thresholds();
    let cmp: Vec<i8> = th.iter().map(|c| (t - c).signum()).collect();
    let mut out = Vec::with_capacity(2);
    if cmp[0] >= 0 {
        out.push(1);
    }
    if cmp[1] >= 0 && cmp[0] <= 0 {
        out.push(2);
    }
    if cmp[2] >= 0 && cmp[1] <= 0 {
        out.push(3);
    }
    if cmp[3] >= 0 && cmp[2] <= 0 {
        out.push(4);
    }
    if cmp[3] <= 0 {
        out.push(5);
    }
    out
}

/// Möbius action `t ↦ (at + b)/(ct + d)` of a graded matrix on `[0, ∞]`.
pub fn mobius(g: &Graded, t: &ExtNorm) -> ExtNorm {
    let m = g.to_mat2s();
    mobius_s(&m, t)
}

fn mobius_s(m: &Mat2S, t: &ExtNorm) -> ExtNorm {
    let lift = |v: &SqrtThree| Surd::from_sqrt3(v.clone());
    match t {
        ExtNorm::Infinity => {
            if m.c.is_zero() {
                ExtNorm::Infinity
            } else {
                ExtNorm::Finite(lift(&(&m.a / &m.c)))
            }
        }
        ExtNorm::Finite(t) => {
            let den = &t.scale_sqrt3(&m.c) + &lift(&m.d);
            if den.is_zero() {
                return ExtNorm::Infinity;
            }
            let num = &t.scale_sqrt3(&m.a) + &lift(&m.b);
            ExtNorm::Finite(&num / &den)
        }
    }
}

/// Applies the branch of digit `d`, i.e. `N_d⁻¹`.
pub fn line_step_digit(t: &ExtNorm, d: u8) -> ExtNorm {
    let g = n_graded(d);
    let inv = Graded {
        a: g.d.clone(),
        beta: -g.beta.clone(),
        gamma: -g.gamma.clone(),
        d: g.a.clone(),
    };
    mobius(&inv, t)
}

/// The conjugate map on `[0, ∞]`; `∞` is fixed.
pub fn line_step(t: &ExtNorm) -> ExtNorm {
    let d = line_digits(t)[0];
    line_step_digit(t, d)
}

/// Graded product `N_{d1}···N_{dk}`.
pub fn word_graded(w: &RomikWord) -> Graded {
    w.digits()
        .iter()
        .fold(Graded::identity(), |acc, &d| acc.mul(&n_graded(d)))
}

/// `N_w = N_{d1}···N_{dk}` over Q(√3).
pub fn word_matrix(w: &RomikWord) -> Mat2S {
    word_graded(w).to_mat2s()
}

/// Attracting fixed point `(a − d + √Δ)/(2c)` of `N_w` on `[0, ∞]`.
pub fn periodic_norm(period: &RomikWord) -> Result<ExtNorm> {
    if period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let g = word_graded(period);
    if g.gamma.is_zero() {
        return Ok(ExtNorm::Infinity);
    }
    let x = SqrtThree::rational(from_bigint(&g.a - &g.d));
    let num = Surd::new(x, SqrtThree::one(), from_bigint(g.discriminant()));
    let den = SqrtThree::root3_times(BigInt::from(2) * &g.gamma);
    Ok(ExtNorm::Finite(num.scale_sqrt3(&den.inv())))
}

/// `‖P‖` for an eventually periodic stream: the periodic fixed point pushed through the preperiod.
pub fn norm_of_stream(s: &DigitStream) -> Result<ExtNorm> {
    let tail = periodic_norm(s.period())?;
    Ok(mobius(&word_graded(s.preperiod()), &tail))
}

/// Exact point of the arc with digit expansion `s`.
pub fn point_of_stream(s: &DigitStream) -> Result<SurdPoint> {
    Ok(point_from_norm(&norm_of_stream(s)?))
}

/// Recovers the digit stream of `t` by iterating [`line_step`] until the orbit repeats.
///
/// Shared endpoints take the smaller digit.
pub fn stream_from_norm(t: &ExtNorm, max_steps: usize) -> Result<DigitStream> {
    let mut orbit: Vec<ExtNorm> = vec![t.clone()];
    let mut digits: Vec<u8> = Vec::new();
    for _ in 0..max_steps {
        let cur = orbit.last().unwrap().clone();
        let d = line_digits(&cur)[0];
        digits.push(d);
        let next = line_step_digit(&cur, d);
        if let Some(j) = orbit.iter().position(|o| o == &next) {
            let pre = RomikWord::new(digits[..j].to_vec())?;
            let per = RomikWord::new(digits[j..].to_vec())?;
            return DigitStream::new(pre, per);
        }
        orbit.push(next);
    }
    Err(Error::NonTermination(max_steps))
}

/// `P1 ⪯ P2` on the first sextant, decided as `‖P1‖ ≥ ‖P2‖`.
pub fn order_points(p1: &CirclePointQ, p2: &CirclePointQ) -> Ordering {
    stereo_norm(p2)
        .try_cmp(&stereo_norm(p1))
        .expect("rational norms share the field Q(sqrt 3)")
}

/// [`order_points`] for exact points; may fail only for indistinguishable cross-field values.
pub fn order_exact_points(p1: &SurdPoint, p2: &SurdPoint) -> Result<Ordering> {
    stereo_norm_exact(p2).try_cmp(&stereo_norm_exact(p1))
}
