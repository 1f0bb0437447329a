//! 2×2 matrices over Q(√3) and the graded integer form of N-word products.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::from_bigint;
use super::sqrt3::SqrtThree;

/// 2×2 matrix `[[a, b], [c, d]]` with entries in Q(√3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2S {
    pub a: SqrtThree,
    pub b: SqrtThree,
    pub c: SqrtThree,
    pub d: SqrtThree,
}

impl Mat2S {
    pub fn identity() -> Self {
        Mat2S {
            a: SqrtThree::one(),
            b: SqrtThree::zero(),
            c: SqrtThree::zero(),
            d: SqrtThree::one(),
        }
    }

    pub fn mul(&self, o: &Mat2S) -> Mat2S {
        Mat2S {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    pub fn det(&self) -> SqrtThree {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> SqrtThree {
        &self.a + &self.d
    }

    pub fn transpose(&self) -> Mat2S {
        Mat2S {
            a: self.a.clone(),
            b: self.c.clone(),
            c: self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// The graded form, if diagonal entries are integers and off-diagonal ones integer multiples of √3.
    pub fn graded(&self) -> Option<Graded> {
        let integer = |q: &num_rational::BigRational| q.is_integer().then(|| q.to_integer());
        if !self.a.is_rational() || !self.d.is_rational() {
            return None;
        }
        if !self.b.r.is_zero() || !self.c.r.is_zero() {
            return None;
        }
        Some(Graded {
            a: integer(&self.a.r)?,
            beta: integer(&self.b.s)?,
            gamma: integer(&self.c.s)?,
            d: integer(&self.d.r)?,
        })
    }
}

impl fmt::Display for Mat2S {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// `[[a, β√3], [γ√3, d]]` with integer `a, β, γ, d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graded {
    pub a: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
    pub d: BigInt,
}

impl Graded {
    pub fn identity() -> Self {
        Graded {
            a: BigInt::one(),
            beta: BigInt::zero(),
            gamma: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn new(a: i64, beta: i64, gamma: i64, d: i64) -> Self {
        Graded {
            a: a.into(),
            beta: beta.into(),
            gamma: gamma.into(),
            d: d.into(),
        }
    }

    pub fn mul(&self, o: &Graded) -> Graded {
        let three = BigInt::from(3);
        Graded {
            a: &self.a * &o.a + &three * &self.beta * &o.gamma,
            beta: &self.a * &o.beta + &self.beta * &o.d,
            gamma: &self.gamma * &o.a + &self.d * &o.gamma,
            d: &three * &self.gamma * &o.beta + &self.d * &o.d,
        }
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - BigInt::from(3) * &self.beta * &self.gamma
    }

    /// `Tr² - 4·det`.
    pub fn discriminant(&self) -> BigInt {
        let t = self.trace();
        &t * &t - BigInt::from(4) * self.det()
    }

    pub fn transpose(&self) -> Graded {
        Graded {
            a: self.a.clone(),
            beta: self.gamma.clone(),
            gamma: self.beta.clone(),
            d: self.d.clone(),
        }
    }

    pub fn to_mat2s(&self) -> Mat2S {
        Mat2S {
            a: SqrtThree::rational(from_bigint(self.a.clone())),
            b: SqrtThree::root3_times(self.beta.clone()),
            c: SqrtThree::root3_times(self.gamma.clone()),
            d: SqrtThree::rational(from_bigint(self.d.clone())),
        }
    }
}

/// `(a, β, γ, d)` of the five constant matrices `N_1..N_5`.
pub const N_GRADED: [[i64; 4]; 5] = [
    [1, 1, 0, 1],
    [2, 1, 1, 1],
    [2, 1, 1, 2],
    [1, 1, 1, 2],
    [1, 0, 1, 1],
];

pub fn n_graded(d: u8) -> Graded {
    assert!((1..=5).contains(&d), "digit {d} out of range");
    let [a, beta, gamma, dd] = N_GRADED[d as usize - 1];
    Graded::new(a, beta, gamma, dd)
}

/// The constant matrix `N_d`.
pub fn n_matrix(d: u8) -> Mat2S {
    n_graded(d).to_mat2s()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_matches_full_product() {
        for x in 1..=5u8 {
            for y in 1..=5u8 {
                let full = n_matrix(x).mul(&n_matrix(y));
                assert_eq!(full.graded(), Some(n_graded(x).mul(&n_graded(y))));
            }
        }
    }

    #[test]
    fn known_products() {
        assert_eq!(n_graded(2).mul(&n_graded(3)), Graded::new(7, 4, 3, 5));
        assert_eq!(n_graded(2).mul(&n_graded(4)), Graded::new(5, 4, 2, 5));
        assert_eq!(n_graded(2).mul(&n_graded(2)), Graded::new(7, 3, 3, 4));
        let m = n_graded(2).mul(&n_graded(2)).mul(&n_graded(4));
        assert_eq!(m, Graded::new(16, 13, 7, 17));
    }

    #[test]
    fn determinants() {
        let dets: Vec<i64> = (1..=5u8)
            .map(|d| i64::try_from(n_graded(d).det()).unwrap())
            .collect();
        assert_eq!(dets, vec![1, -1, 1, -1, 1]);
        assert_eq!(n_matrix(3).det(), SqrtThree::one());
    }
}
