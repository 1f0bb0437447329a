//! Exhaustive best-approximant scans and the windowed liminf estimator.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::interval::Interval;
use crate::arith::lattice::{m_matrix, IntVec3, Mat3Z};
use crate::arith::rational::{from_bigint, int, BigRat};
use crate::arith::sqrt3::SqrtThree;
use crate::arith::surd::Surd;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::romik::line::point_of_stream;
use crate::romik::tree::triples_u64;
use crate::romik::{CirclePointQ, DigitStream, SurdPoint};

/// Which endpoint of the depth-`k` cylinder an approximant is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    /// `Z_k^(1,0)`.
    OneZero,
    /// `Z_k^(0,1)`.
    ZeroOne,
}

/// Cylinder-boundary label `Z_k^(*)`, with the smallest `k` at which the point occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryTag {
    pub k: usize,
    pub endpoint: Endpoint,
}

/// One approximant of a target together with `δ²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxRecord {
    pub target: DigitStream,
    pub approximant: CirclePointQ,
    pub height: BigInt,
    pub delta_sq: Surd,
    pub boundary: Option<BoundaryTag>,
}

impl ApproxRecord {
    pub fn delta_f64(&self) -> f64 {
        self.delta_sq.to_f64().sqrt()
    }
}

/// Cylinder endpoints `Z_k^(1,0)(P)`, `Z_k^(0,1)(P)` for `k ≥ 0`, up to height `max_c`.
///
/// Each point is listed once, at its first occurrence.
pub fn boundary_points(s: &DigitStream, max_c: u64) -> Vec<(BoundaryTag, CirclePointQ)> {
    let limit = BigInt::from(max_c);
    let mut out: Vec<(BoundaryTag, CirclePointQ)> = Vec::new();
    let mut m = Mat3Z::identity();
    let u10 = IntVec3::new(1, 0, 1);
    let u01 = IntVec3::new(0, 1, 1);
    // Heights never decrease along k; a long run of 1s or 5s keeps one endpoint fixed.
    let max_depth = 64 + 4 * (max_c as f64).sqrt() as usize;
    for k in 0..=max_depth {
        let mut alive = false;
        for (endpoint, u) in [(Endpoint::OneZero, &u10), (Endpoint::ZeroOne, &u01)] {
            let z = CirclePointQ::from_vector(&m.apply(u)).expect("M_w preserves the arc");
            if z.c() > &limit {
                continue;
            }
            alive = true;
            if !out.iter().any(|(_, p)| p == &z) {
                out.push((BoundaryTag { k, endpoint }, z));
            }
        }
        if !alive {
            break;
        }
        m = m.mul(m_matrix(s.digit(k)));
    }
    out
}

/// Integer normal form of a target for fast `δ²` evaluation.
///
/// `α = (a0 + a1√3 + (a2 + a3√3)√Δ)/den` and likewise for `β`.
struct TargetForm {
    den: BigInt,
    alpha: [BigInt; 4],
    beta: [BigInt; 4],
    delta: BigInt,
    s3: Interval,
    sd: Interval,
}

const FORM_BITS: u32 = 160;

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b)
}

impl TargetForm {
    fn new(p: &SurdPoint) -> TargetForm {
        let delta = if p.alpha.in_sqrt3() {
            p.beta.delta().clone()
        } else {
            p.alpha.delta().clone()
        };
        let split = |v: &Surd| -> [BigRat; 4] {
            let (x, y) = v.coefficients_over(&delta).expect("coordinates share a field");
            [x.r, x.s, y.r, y.s]
        };
        let a = split(&p.alpha);
        let b = split(&p.beta);
        let den = a
            .iter()
            .chain(b.iter())
            .fold(BigInt::one(), |acc, q| lcm(&acc, q.denom()));
        let scale = |q: &BigRat| q.numer() * (&den / q.denom());
        TargetForm {
            alpha: [scale(&a[0]), scale(&a[1]), scale(&a[2]), scale(&a[3])],
            beta: [scale(&b[0]), scale(&b[1]), scale(&b[2]), scale(&b[3])],
            s3: Interval::sqrt_of(&int(3), FORM_BITS),
            sd: Interval::sqrt_of(&from_bigint(delta.clone()), FORM_BITS),
            den,
            delta,
        }
    }

    /// `den · δ²(P; Z)` as four integer coefficients.
    fn numerator(&self, a: u64, b: u64, c: u64) -> [BigInt; 4] {
        let (a, b, c) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
        let ka = -(&c * (BigInt::from(2) * &a + &b));
        let kb = -(&c * (&a + BigInt::from(2) * &b));
        let mut v: [BigInt; 4] = Default::default();
        for (i, vi) in v.iter_mut().enumerate() {
            *vi = &ka * &self.alpha[i] + &kb * &self.beta[i];
        }
        v[0] += BigInt::from(2) * &c * &c * &self.den;
        v
    }

    fn enclose(&self, v: &[BigInt; 4]) -> Interval {
        let pt = |n: &BigInt| Interval::point(n << FORM_BITS as usize, FORM_BITS);
        let x = pt(&v[0]).add(&pt(&v[1]).mul(&self.s3));
        if v[2].is_zero() && v[3].is_zero() {
            return x;
        }
        let y = pt(&v[2]).add(&pt(&v[3]).mul(&self.s3));
        x.add(&y.mul(&self.sd))
    }

    fn to_surd(&self, v: &[BigInt; 4]) -> Surd {
        let q = |n: &BigInt| BigRat::new(n.clone(), self.den.clone());
        Surd::new(
            SqrtThree::new(q(&v[0]), q(&v[1])),
            SqrtThree::new(q(&v[2]), q(&v[3])),
            from_bigint(self.delta.clone()),
        )
    }
}

struct Scored {
    triple: [u64; 3],
    numerator: [BigInt; 4],
    enclosure: Interval,
}

fn compare_value(form: &TargetForm, x: &Scored, y: &Scored) -> Ordering {
    x.enclosure.cmp_disjoint(&y.enclosure).unwrap_or_else(|| {
        let diff: [BigInt; 4] = std::array::from_fn(|i| &x.numerator[i] - &y.numerator[i]);
        form.to_surd(&diff).signum().cmp(&0)
    })
}

fn compare_scored(form: &TargetForm, x: &Scored, y: &Scored) -> Ordering {
    compare_value(form, x, y).then_with(|| (x.triple[2], x.triple[0]).cmp(&(y.triple[2], y.triple[0])))
}

fn score_all(form: &TargetForm, triples: &[[u64; 3]], exec: Exec) -> Vec<Scored> {
    let scored: Vec<Option<Scored>> = exec.map(triples, |&[a, b, c]| {
        let v = form.numerator(a, b, c);
        if v.iter().all(|x| x.is_zero()) {
            return None;
        }
        Some(Scored {
            triple: [a, b, c],
            enclosure: form.enclose(&v),
            numerator: v,
        })
    });
    scored.into_iter().flatten().collect()
}

fn to_record(
    s: &DigitStream,
    form: &TargetForm,
    sc: Scored,
    boundaries: &[(BoundaryTag, CirclePointQ)],
) -> ApproxRecord {
    let [a, b, c] = sc.triple;
    let approximant = CirclePointQ::new(a, b, c).expect("tree triple");
    let boundary = boundaries
        .iter()
        .find(|(_, z)| z == &approximant)
        .map(|(tag, _)| *tag);
    ApproxRecord {
        target: s.clone(),
        height: approximant.c().clone(),
        approximant,
        delta_sq: form.to_surd(&sc.numerator),
        boundary,
    }
}

/// `δ²(P; Z)` for every triple of height at most `max_c`, sorted ascending by exact value.
///
/// The target itself is skipped when it is rational.
pub fn best_approx_scan(s: &DigitStream, max_c: u64) -> Result<Vec<ApproxRecord>> {
    best_approx_scan_with(s, max_c, Exec::Sequential)
}

pub fn best_approx_scan_with(s: &DigitStream, max_c: u64, exec: Exec) -> Result<Vec<ApproxRecord>> {
    let triples = triples_u64(max_c, exec);
    best_approx_scan_on(s, &triples, exec)
}

/// [`best_approx_scan`] over a caller-provided triple list, so it can be shared across targets.
pub fn best_approx_scan_on(
    s: &DigitStream,
    triples: &[[u64; 3]],
    exec: Exec,
) -> Result<Vec<ApproxRecord>> {
    let form = TargetForm::new(&point_of_stream(s)?);
    let mut scored = score_all(&form, triples, exec);
    scored.sort_by(|x, y| compare_scored(&form, x, y));
    let max_c = triples.iter().map(|t| t[2]).max().unwrap_or(0);
    let boundaries = boundary_points(s, max_c);
    Ok(scored
        .into_iter()
        .map(|sc| to_record(s, &form, sc, &boundaries))
        .collect())
}

/// All records attaining the minimal `δ²` over the given triples, in `(c, a)` order.
pub fn minimizers_on(s: &DigitStream, triples: &[[u64; 3]], exec: Exec) -> Result<Vec<ApproxRecord>> {
    let form = TargetForm::new(&point_of_stream(s)?);
    let scored = score_all(&form, triples, exec);
    let mut best: Vec<Scored> = Vec::new();
    for sc in scored {
        match best.first().map(|b| compare_value(&form, &sc, b)) {
            None | Some(Ordering::Equal) => best.push(sc),
            Some(Ordering::Less) => best = vec![sc],
            Some(Ordering::Greater) => {}
        }
    }
    let max_c = triples.iter().map(|t| t[2]).max().unwrap_or(0);
    let boundaries = boundary_points(s, max_c);
    Ok(best
        .into_iter()
        .map(|sc| to_record(s, &form, sc, &boundaries))
        .collect())
}

/// Windowed estimate of `δ(P) = liminf δ(P; Z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiminfEstimate {
    /// `δ` of the best boundary approximant in the window.
    pub estimate: f64,
    pub witness: ApproxRecord,
    /// Boundary approximants with heights in `[√max_c, max_c]`, in order of `k`.
    pub window: Vec<ApproxRecord>,
}

/// Minimum of `δ(P; Z_k^(*))` over cylinder endpoints with heights in `[√max_c, max_c]`.
pub fn delta_liminf_estimate(s: &DigitStream, max_c: u64) -> Result<LiminfEstimate> {
    let boundaries = boundary_points(s, max_c);
    if boundaries.len() < 3 {
        return Err(Error::InsufficientDepth {
            max_c,
            found: boundaries.len(),
        });
    }
    let p = point_of_stream(s)?;
    let mut window: Vec<ApproxRecord> = Vec::new();
    for (tag, z) in &boundaries {
        let c = z.c();
        if c * c < BigInt::from(max_c) {
            continue;
        }
        let d = match super::delta::delta_sq(&p, z) {
            Ok(d) => d,
            Err(Error::SamePoint) => continue,
            Err(e) => return Err(e),
        };
        window.push(ApproxRecord {
            target: s.clone(),
            approximant: z.clone(),
            height: c.clone(),
            delta_sq: d,
            boundary: Some(*tag),
        });
    }
    let witness = window
        .iter()
        .try_fold(None::<&ApproxRecord>, |best, r| -> Result<_> {
            Ok(match best {
                Some(b) if b.delta_sq.try_cmp(&r.delta_sq)? != Ordering::Greater => Some(b),
                _ => Some(r),
            })
        })?
        .cloned()
        .ok_or(Error::InsufficientDepth {
            max_c,
            found: boundaries.len(),
        })?;
    debug_assert!(!witness.delta_sq.is_negative());
    Ok(LiminfEstimate {
        estimate: witness.delta_f64(),
        witness,
        window,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    #[test]
    fn scan_three() {
        let three = DigitStream::from_digits(&[], &[3]);
        let recs = best_approx_scan(&three, 13).unwrap();
        assert_eq!(recs.len(), 6);
        let want = Surd::from_sqrt3(SqrtThree::new(int(338), int(-195)));
        assert_eq!(recs[0].delta_sq, want);
        assert_eq!(recs[1].delta_sq, want);
        assert!(recs[0].boundary.is_some() && recs[1].boundary.is_some());
        for w in recs.windows(2) {
            assert_ne!(w[0].delta_sq.try_cmp(&w[1].delta_sq).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn scan_two_small() {
        let two = DigitStream::from_digits(&[], &[2]);
        let recs = best_approx_scan(&two, 1).unwrap();
        assert_eq!(recs[0].approximant, CirclePointQ::triple(1, 0, 1));
    }

    #[test]
    fn boundaries_of_three() {
        let three = DigitStream::from_digits(&[], &[3]);
        let b = boundary_points(&three, 13);
        let pts: Vec<_> = b.iter().map(|(_, z)| z.clone()).collect();
        assert_eq!(
            pts,
            vec![
                CirclePointQ::triple(1, 0, 1),
                CirclePointQ::triple(0, 1, 1),
                CirclePointQ::triple(8, 7, 13),
                CirclePointQ::triple(7, 8, 13)
            ]
        );
    }

    #[test]
    fn estimator_three() {
        let three = DigitStream::from_digits(&[], &[3]);
        let est = delta_liminf_estimate(&three, 1_000_000).unwrap();
        assert!((est.estimate - 0.5).abs() < 1e-2);
        assert!(matches!(
            delta_liminf_estimate(&three, 1),
            Err(Error::InsufficientDepth { .. })
        ));
    }
}
