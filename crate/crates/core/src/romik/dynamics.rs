//! The Romik map on rational points, digit expansions and cylinder sets.

use num_bigint::BigInt;

use super::point::CirclePointQ;
use super::word::{DigitStream, RomikWord};
use crate::arith::lattice::{m_inverse, m_matrix, IntVec3, Mat3Z};
use crate::error::{Error, Result};

/// Romik digits of a rational point: one digit, or two at the four shared endpoints.
///
/// Uses integer comparisons of `a/c` against 5/7, 8/13, 7/13 and 3/7 only.
pub fn digit_of(p: &CirclePointQ) -> Vec<u8> {
    let a = p.a();
    let c = p.c();
    let n = |k: i64| BigInt::from(k);
    let a7 = n(7) * a;
    let a13 = n(13) * a;
    let mut out = Vec::with_capacity(2);
    if a7 >= n(5) * c {
        out.push(1);
    }
    if n(8) * c <= a13 && a7 <= n(5) * c {
        out.push(2);
    }
    if n(7) * c <= a13 && a13 <= n(8) * c {
        out.push(3);
    }
    if n(3) * c <= a7 && a13 <= n(7) * c {
        out.push(4);
    }
    if a7 <= n(3) * c {
        out.push(5);
    }
    out
}

/// One step of the Romik map along digit `d`: `M_d⁻¹·(a, b, c)`, renormalized.
pub fn romik_step(p: &CirclePointQ, d: u8) -> Result<CirclePointQ> {
    if !(1..=5).contains(&d) {
        return Err(Error::InvalidDigit(d));
    }
    if !digit_of(p).contains(&d) {
        return Err(Error::DigitMismatch {
            digit: d,
            a: p.a().to_string(),
            b: p.b().to_string(),
            c: p.c().to_string(),
        });
    }
    CirclePointQ::from_vector(&m_inverse(d).apply(&p.vector()))
}

/// The Romik map with the canonical (smaller) digit at shared endpoints.
pub fn romik_map(p: &CirclePointQ) -> (u8, CirclePointQ) {
    let d = digit_of(p)[0];
    let next = romik_step(p, d).expect("canonical digit is valid");
    (d, next)
}

fn is_point(p: &CirclePointQ, a: i64, b: i64, c: i64) -> bool {
    p.a() == &BigInt::from(a) && p.b() == &BigInt::from(b) && p.c() == &BigInt::from(c)
}

/// Both digit expansions of a rational point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub primary: DigitStream,
    /// The second expansion; absent only for `(1, 0)` and `(0, 1)`.
    pub alternative: Option<DigitStream>,
}

impl Expansion {
    /// Finite digit word preceding the terminal tail of the primary expansion.
    pub fn head(&self) -> &RomikWord {
        self.primary.preperiod()
    }
}

/// Follows the Romik map until the orbit reaches `(1,0)`, `(0,1)` or a shared endpoint.
pub fn expand_rational(p: &CirclePointQ, max_steps: usize) -> Result<Expansion> {
    let mut head = RomikWord::empty();
    let mut cur = p.clone();
    for _ in 0..=max_steps {
        if is_point(&cur, 1, 0, 1) {
            let primary = DigitStream::new(head, RomikWord::from_digits(&[1]))?;
            return Ok(Expansion {
                primary,
                alternative: None,
            });
        }
        if is_point(&cur, 0, 1, 1) {
            let primary = DigitStream::new(head, RomikWord::from_digits(&[5]))?;
            return Ok(Expansion {
                primary,
                alternative: None,
            });
        }
        let digits = digit_of(&cur);
        if digits.len() == 2 {
            let build = |d: u8| -> Result<DigitStream> {
                let next = romik_step(&cur, d)?;
                let tail = if is_point(&next, 1, 0, 1) { 1 } else { 5 };
                let mut w = head.clone();
                w.push(d);
                DigitStream::new(w, RomikWord::from_digits(&[tail]))
            };
            return Ok(Expansion {
                primary: build(digits[0])?,
                alternative: Some(build(digits[1])?),
            });
        }
        head.push(digits[0]);
        cur = romik_step(&cur, digits[0])?;
    }
    Err(Error::NonTermination(max_steps))
}

/// `M_{d1}···M_{dk}`.
pub fn word_product_m(w: &RomikWord) -> Mat3Z {
    w.digits()
        .iter()
        .fold(Mat3Z::identity(), |acc, &d| acc.mul(m_matrix(d)))
}

/// Endpoints `(Z^(1,0), Z^(0,1))` of the cylinder set `C(w)`.
pub fn cylinder_boundaries(w: &RomikWord) -> (CirclePointQ, CirclePointQ) {
    let m = word_product_m(w);
    let z10 = CirclePointQ::from_vector(&m.apply(&IntVec3::new(1, 0, 1)))
        .expect("M_w maps the arc to itself");
    let z01 = CirclePointQ::from_vector(&m.apply(&IntVec3::new(0, 1, 1)))
        .expect("M_w maps the arc to itself");
    (z10, z01)
}

/// `sign(w) = det(M_w)`, `+1` or `−1`.
pub fn word_sign(w: &RomikWord) -> i8 {
    let odd = w.digits().iter().filter(|&&d| d == 2 || d == 4).count() % 2 == 1;
    if odd {
        -1
    } else {
        1
    }
}

/// The point `[w, P]`, i.e. `M_w` applied to `P`.
pub fn prepend_word(w: &RomikWord, p: &CirclePointQ) -> CirclePointQ {
    CirclePointQ::from_vector(&word_product_m(w).apply(&p.vector()))
        .expect("M_w maps the arc to itself")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64, c: i64) -> CirclePointQ {
        CirclePointQ::triple(a, b, c)
    }

    #[test]
    fn digit_examples() {
        assert_eq!(digit_of(&t(1, 0, 1)), vec![1]);
        assert_eq!(digit_of(&t(5, 3, 7)), vec![1, 2]);
        assert_eq!(digit_of(&t(8, 7, 13)), vec![2, 3]);
        assert_eq!(digit_of(&t(7, 8, 13)), vec![3, 4]);
        assert_eq!(digit_of(&t(3, 5, 7)), vec![4, 5]);
        assert_eq!(digit_of(&t(0, 1, 1)), vec![5]);
    }

    #[test]
    fn step_examples() {
        assert_eq!(romik_step(&t(8, 7, 13), 2).unwrap(), t(1, 0, 1));
        assert_eq!(romik_step(&t(1, 0, 1), 1).unwrap(), t(1, 0, 1));
        assert_eq!(romik_step(&t(35, 13, 43), 1).unwrap(), t(8, 7, 13));
        assert!(matches!(
            romik_step(&t(1, 0, 1), 3),
            Err(Error::DigitMismatch { digit: 3, .. })
        ));
    }

    #[test]
    fn expansion_examples() {
        let e = expand_rational(&t(5, 3, 7), 100).unwrap();
        assert_eq!(e.primary, DigitStream::from_digits(&[1], &[5]));
        assert_eq!(e.alternative, Some(DigitStream::from_digits(&[2], &[5])));
        let e = expand_rational(&t(35, 13, 43), 100).unwrap();
        assert_eq!(e.primary, DigitStream::from_digits(&[1, 2], &[1]));
        assert_eq!(e.alternative, Some(DigitStream::from_digits(&[1, 3], &[1])));
        let e = expand_rational(&t(0, 1, 1), 100).unwrap();
        assert_eq!(e.primary, DigitStream::from_digits(&[], &[5]));
        assert_eq!(e.alternative, None);
        assert_eq!(expand_rational(&t(35, 13, 43), 0), Err(Error::NonTermination(0)));
    }

    #[test]
    fn cylinder_examples() {
        assert_eq!(cylinder_boundaries(&RomikWord::empty()), (t(1, 0, 1), t(0, 1, 1)));
        assert_eq!(cylinder_boundaries(&RomikWord::from_digits(&[2])), (t(8, 7, 13), t(5, 3, 7)));
        assert_eq!(cylinder_boundaries(&RomikWord::from_digits(&[3])), (t(8, 7, 13), t(7, 8, 13)));
        for w in [[2u8, 4], [3, 3], [1, 5]] {
            let w = RomikWord::from_digits(&w);
            assert_eq!(BigInt::from(word_sign(&w)), word_product_m(&w).det());
        }
    }
}
