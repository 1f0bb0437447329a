//! Integral vectors and matrices of the quadratic space, the form and its pairing.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::BigRat;

/// Integral vector `(x1, x2, x3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec3 {
    pub x1: BigInt,
    pub x2: BigInt,
    pub x3: BigInt,
}

impl IntVec3 {
    pub fn new(x1: impl Into<BigInt>, x2: impl Into<BigInt>, x3: impl Into<BigInt>) -> Self {
        IntVec3 {
            x1: x1.into(),
            x2: x2.into(),
            x3: x3.into(),
        }
    }

    pub fn as_array(&self) -> [&BigInt; 3] {
        [&self.x1, &self.x2, &self.x3]
    }

    pub fn neg(&self) -> IntVec3 {
        IntVec3 {
            x1: -&self.x1,
            x2: -&self.x2,
            x3: -&self.x3,
        }
    }
}

impl fmt::Display for IntVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x1, self.x2, self.x3)
    }
}

/// `x1² + x1x2 + x2² - x3²`.
pub fn quadratic_form(v: &IntVec3) -> BigInt {
    &v.x1 * &v.x1 + &v.x1 * &v.x2 + &v.x2 * &v.x2 - &v.x3 * &v.x3
}

/// Symmetric bilinear pairing attached to [`quadratic_form`].
pub fn pairing(x: &IntVec3, y: &IntVec3) -> BigRat {
    let twice: BigInt = BigInt::from(2) * &x.x1 * &y.x1
        + &x.x1 * &y.x2
        + &x.x2 * &y.x1
        + BigInt::from(2) * &x.x2 * &y.x2
        - BigInt::from(2) * &x.x3 * &y.x3;
    BigRat::new(twice, BigInt::from(2))
}

/// 3×3 integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat3Z {
    pub m: [[BigInt; 3]; 3],
}

impl Mat3Z {
    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Mat3Z {
            m: rows.map(|r| r.map(BigInt::from)),
        }
    }

    pub fn identity() -> Self {
        Mat3Z::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn mul(&self, o: &Mat3Z) -> Mat3Z {
        let mut m: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| &self.m[i][k] * &o.m[k][j]).sum();
            }
        }
        Mat3Z { m }
    }

    pub fn apply(&self, v: &IntVec3) -> IntVec3 {
        let x = v.as_array();
        let row = |i: usize| -> BigInt { (0..3).map(|k| &self.m[i][k] * x[k]).sum() };
        IntVec3 {
            x1: row(0),
            x2: row(1),
            x3: row(2),
        }
    }

    pub fn det(&self) -> BigInt {
        let m = &self.m;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn transpose(&self) -> Mat3Z {
        let mut m: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.m[j][i].clone();
            }
        }
        Mat3Z { m }
    }

    pub fn is_identity(&self) -> bool {
        (0..3).all(|i| {
            (0..3).all(|j| {
                if i == j {
                    self.m[i][j].is_one()
                } else {
                    self.m[i][j].is_zero()
                }
            })
        })
    }
}

impl fmt::Display for Mat3Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

pub const H_I64: [[i64; 3]; 3] = [[-4, -3, 4], [-3, -4, 4], [-6, -6, 7]];

pub const U_I64: [[[i64; 3]; 3]; 5] = [
    [[0, -1, 0], [1, 1, 0], [0, 0, 1]],
    [[-1, -1, 0], [0, 1, 0], [0, 0, 1]],
    [[-1, 0, 0], [0, -1, 0], [0, 0, 1]],
    [[1, 0, 0], [-1, -1, 0], [0, 0, 1]],
    [[1, 1, 0], [-1, 0, 0], [0, 0, 1]],
];

pub const M_I64: [[[i64; 3]; 3]; 5] = [
    [[-3, 1, 4], [-4, -1, 4], [-6, 0, 7]],
    [[4, 1, 4], [3, -1, 4], [6, 0, 7]],
    [[4, 3, 4], [3, 4, 4], [6, 6, 7]],
    [[-1, 3, 4], [1, 4, 4], [0, 6, 7]],
    [[-1, -4, 4], [1, -3, 4], [0, -6, 7]],
];

pub const M_INV_I64: [[[i64; 3]; 3]; 5] = [
    [[-7, -7, 8], [4, 3, -4], [-6, -6, 7]],
    [[7, 7, -8], [-3, -4, 4], [-6, -6, 7]],
    [[4, 3, -4], [3, 4, -4], [-6, -6, 7]],
    [[-4, -3, 4], [7, 7, -8], [-6, -6, 7]],
    [[3, 4, -4], [-7, -7, 8], [-6, -6, 7]],
];

struct Constants {
    h: Mat3Z,
    u: Vec<Mat3Z>,
    m: Vec<Mat3Z>,
    m_inv: Vec<Mat3Z>,
}

fn constants() -> &'static Constants {
    static TABLE: OnceLock<Constants> = OnceLock::new();
    TABLE.get_or_init(|| {
        let c = Constants {
            h: Mat3Z::from_i64(H_I64),
            u: U_I64.iter().map(|&a| Mat3Z::from_i64(a)).collect(),
            m: M_I64.iter().map(|&a| Mat3Z::from_i64(a)).collect(),
            m_inv: M_INV_I64.iter().map(|&a| Mat3Z::from_i64(a)).collect(),
        };
        for d in 0..5 {
            assert_eq!(c.h.mul(&c.u[d]), c.m[d], "M_{} != H U_{}", d + 1, d + 1);
            assert!(c.m[d].mul(&c.m_inv[d]).is_identity(), "bad inverse of M_{}", d + 1);
        }
        c
    })
}

fn index(d: u8) -> usize {
    assert!((1..=5).contains(&d), "digit {d} out of range");
    d as usize - 1
}

/// The involution `H`.
pub fn h_matrix() -> &'static Mat3Z {
    &constants().h
}

pub fn u_matrix(d: u8) -> &'static Mat3Z {
    &constants().u[index(d)]
}

/// `M_d = H·U_d`.
pub fn m_matrix(d: u8) -> &'static Mat3Z {
    &constants().m[index(d)]
}

pub fn m_inverse(d: u8) -> &'static Mat3Z {
    &constants().m_inv[index(d)]
}

/// Digit involution swapping 1 and 5 and fixing 2, 3, 4.
pub fn hat(d: u8) -> u8 {
    match d {
        1 => 5,
        5 => 1,
        other => other,
    }
}

/// Runs the table self-check eagerly.
pub fn self_check() {
    let _ = constants();
}
