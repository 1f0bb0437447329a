//! Integer recurrences governed by λ = (3 + √13)/2.

use num_bigint::BigInt;

/// `(c_k, d_k)` with `c_0 = 1`, `d_0 = 2` and `(c, d) ↦ (5c − d, 9c − 2d)`.
///
/// Every pair satisfies `9c² − 7cd + d² = (−1)^(k+1)`.
pub fn lucas_cd(k: usize) -> (BigInt, BigInt) {
    let mut c = BigInt::from(1);
    let mut d = BigInt::from(2);
    for _ in 0..k {
        let nc = BigInt::from(5) * &c - &d;
        let nd = BigInt::from(9) * &c - BigInt::from(2) * &d;
        c = nc;
        d = nd;
    }
    let lhs = BigInt::from(9) * &c * &c - BigInt::from(7) * &c * &d + &d * &d;
    let rhs = if k.is_multiple_of(2) { -1 } else { 1 };
    assert_eq!(lhs, BigInt::from(rhs), "lucas identity failed at k = {k}");
    (c, d)
}

/// `U_n` with `U_0 = 0`, `U_1 = 1`, `U_{n+1} = 3U_n + U_{n−1}`, so that `λⁿ − λ̄ⁿ = U_n·√13`.
pub fn lucas_u(n: usize) -> BigInt {
    let mut prev = BigInt::from(0);
    let mut cur = BigInt::from(1);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = BigInt::from(3) * &cur + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cd_examples() {
        assert_eq!(lucas_cd(0), (BigInt::from(1), BigInt::from(2)));
        assert_eq!(lucas_cd(1), (BigInt::from(3), BigInt::from(5)));
        assert_eq!(lucas_cd(2), (BigInt::from(10), BigInt::from(17)));
    }

    #[test]
    fn u_values() {
        let u: Vec<i64> = (0..8).map(|n| i64::try_from(lucas_u(n)).unwrap()).collect();
        assert_eq!(u, vec![0, 1, 3, 10, 33, 109, 360, 1189]);
        for k in 0..20 {
            assert_eq!(lucas_cd(k).0, lucas_u(k + 1));
        }
    }
}
