//! Distances from Eisenstein pairs `a + bω` to a half-line through the origin.

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::arith::rational::from_bigint;
use crate::arith::surd::Surd;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::romik::tree::triples_u64;
use crate::romik::SurdPoint;

const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

/// Direction `z = α + βω` of the half-line `ℓ(z)`, with `α² + αβ + β² = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RayTarget {
    pub alpha: f64,
    pub beta: f64,
    exact: Option<SurdPoint>,
}

impl RayTarget {
    /// Normalizes `(α, β)` onto the unit ellipse.
    pub fn new(alpha: f64, beta: f64) -> Result<RayTarget> {
        if !(alpha >= 0.0 && beta >= 0.0) || alpha + beta == 0.0 || !(alpha + beta).is_finite() {
            return Err(Error::InvalidInput(format!("direction ({alpha}, {beta})")));
        }
        let r = (alpha * alpha + alpha * beta + beta * beta).sqrt();
        Ok(RayTarget {
            alpha: alpha / r,
            beta: beta / r,
            exact: None,
        })
    }

    /// Target with exact coordinates, used to break near-ties in scans.
    pub fn from_point(p: &SurdPoint) -> RayTarget {
        let (alpha, beta) = p.to_f64();
        RayTarget {
            alpha,
            beta,
            exact: Some(p.clone()),
        }
    }

    pub fn exact(&self) -> Option<&SurdPoint> {
        self.exact.as_ref()
    }

    /// Complex coordinates of `z`.
    pub fn complex(&self) -> (f64, f64) {
        (self.alpha + 0.5 * self.beta, HALF_SQRT3 * self.beta)
    }
}

/// Euclidean distance from the complex number `x + iy` to `ℓ(z)`.
pub fn point_ray_distance(z: &RayTarget, x: f64, y: f64) -> f64 {
    let (ux, uy) = z.complex();
    let along = x * ux + y * uy;
    if along <= 0.0 {
        return x.hypot(y);
    }
    (x * uy - y * ux).abs()
}

/// Distance from `a + bω` to `ℓ(z)` for an Eisenstein pair `(a, b)`.
pub fn ray_distance(z: &RayTarget, pair: (u64, u64)) -> Result<f64> {
    let (a, b) = pair;
    if !is_eisenstein_pair(a, b) {
        return Err(Error::NotEisensteinPair(a, b));
    }
    Ok(pair_distance(z, a, b))
}

fn pair_distance(z: &RayTarget, a: u64, b: u64) -> f64 {
    // For a first-sextant point the projection onto ℓ(z) is positive and the
    // cross product reduces to (√3/2)|aβ − bα|.
    let (a, b) = (a as f64, b as f64);
    HALF_SQRT3 * (a * z.beta - b * z.alpha).abs()
}

/// True when `a² + ab + b²` is a nonzero perfect square.
pub fn is_eisenstein_pair(a: u64, b: u64) -> bool {
    let n = BigInt::from(a) * a + BigInt::from(a) * b + BigInt::from(b) * b;
    if n == BigInt::from(0) {
        return false;
    }
    let r = n.sqrt();
    &r * &r == n
}

/// All Eisenstein pairs with `|a + bω| ≤ max_norm`, including non-primitive multiples,
/// as `(a, b, |a + bω|)` sorted by norm then `a`.
pub fn eisenstein_pairs(max_norm: u64, exec: Exec) -> Vec<[u64; 3]> {
    let primitive = triples_u64(max_norm, exec);
    let mut out: Vec<[u64; 3]> = exec.flat_map(&primitive, |&[a, b, c]| {
        (1..=max_norm / c).map(|g| [g * a, g * b, g * c]).collect()
    });
    out.sort_unstable_by_key(|t| (t[2], t[0]));
    out
}

/// Outcome of a windowed ray-distance scan.
#[derive(Clone, Debug, PartialEq)]
pub struct PairScan {
    /// `min δ′(z, (a, b))` over pairs with norm in `[√max_norm, max_norm]`, away from the ray.
    pub estimate: f64,
    pub witness: [u64; 3],
    /// Some pair lies exactly on `ℓ(z)`.
    pub rational_target: bool,
    pub pairs_scanned: usize,
}

/// Windowed estimate of `δ(z) = liminf δ′(z, (a, b))`.
pub fn pair_scan(z: &RayTarget, max_norm: u64) -> Result<PairScan> {
    let pairs = eisenstein_pairs(max_norm, Exec::best());
    pair_scan_on(z, &pairs, max_norm, Exec::best())
}

/// [`pair_scan`] over a precomputed list from [`eisenstein_pairs`].
pub fn pair_scan_on(z: &RayTarget, pairs: &[[u64; 3]], max_norm: u64, exec: Exec) -> Result<PairScan> {
    let on_ray = |a: u64, b: u64| -> bool {
        match &z.exact {
            Some(p) => cross_exact(p, a, b).is_zero(),
            None => pair_distance(z, a, b) == 0.0,
        }
    };
    let window: Vec<[u64; 3]> = pairs
        .iter()
        .copied()
        .filter(|t| t[2].saturating_mul(t[2]) >= max_norm)
        .collect();
    let dists: Vec<f64> = exec.map(&window, |&[a, b, _]| pair_distance(z, a, b));
    let mut rational_target = false;
    let mut best: Option<(f64, usize)> = None;
    for (i, &d) in dists.iter().enumerate() {
        // Screening threshold far above rounding error; exact arithmetic decides below it.
        if d < 1e-9 && on_ray(window[i][0], window[i][1]) {
            rational_target = true;
            continue;
        }
        if best.is_none_or(|(b, _)| d < b) {
            best = Some((d, i));
        }
    }
    let rational_target = rational_target
        || pairs
            .iter()
            .filter(|t| t[2].saturating_mul(t[2]) < max_norm)
            .any(|t| pair_distance(z, t[0], t[1]) < 1e-9 && on_ray(t[0], t[1]));
    let (mut best_d, mut best_i) = best.ok_or(Error::InsufficientDepth {
        max_c: max_norm,
        found: window.len(),
    })?;
    if let Some(p) = &z.exact {
        // Resolve near-ties exactly; ties go to the smaller norm.
        let slack = best_d * 1e-9 + 1e-12;
        for (i, &d) in dists.iter().enumerate() {
            if i == best_i || d > best_d + slack {
                continue;
            }
            let [a, b, _] = window[i];
            let [ba, bb, _] = window[best_i];
            let cur = cross_exact(p, a, b).abs();
            if cur.is_zero() {
                continue;
            }
            let inc = cross_exact(p, ba, bb).abs();
            let ord = cur.try_cmp(&inc)?;
            if ord == Ordering::Less || (ord == Ordering::Equal && i < best_i) {
                best_d = d;
                best_i = i;
            }
        }
    }
    Ok(PairScan {
        estimate: best_d,
        witness: window[best_i],
        rational_target,
        pairs_scanned: pairs.len(),
    })
}

fn cross_exact(p: &SurdPoint, a: u64, b: u64) -> Surd {
    let a = from_bigint(BigInt::from(a));
    let b = from_bigint(BigInt::from(b));
    &p.beta.scale(&a) - &p.alpha.scale(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometry() {
        let omega = RayTarget::new(0.0, 1.0).unwrap();
        assert!((point_ray_distance(&omega, 1.5, HALF_SQRT3) - HALF_SQRT3).abs() < 1e-15);
        assert_eq!(ray_distance(&omega, (1, 1)), Err(Error::NotEisensteinPair(1, 1)));
        let one = RayTarget::new(1.0, 0.0).unwrap();
        assert_eq!(ray_distance(&one, (1, 0)).unwrap(), 0.0);
        assert!((ray_distance(&one, (0, 1)).unwrap() - HALF_SQRT3).abs() < 1e-15);
    }

    #[test]
    fn pairs_include_multiples() {
        let p = eisenstein_pairs(14, Exec::Sequential);
        assert!(p.contains(&[2, 0, 2]) && p.contains(&[0, 14, 14]) && p.contains(&[10, 6, 14]));
        assert!(p.iter().all(|t| is_eisenstein_pair(t[0], t[1])));
    }

    #[test]
    fn rational_target_flag() {
        let one = RayTarget::new(1.0, 0.0).unwrap();
        let scan = pair_scan(&one, 100).unwrap();
        assert!(scan.rational_target);
        assert!(scan.estimate > 0.0);
    }
}
