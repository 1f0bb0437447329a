//! The discrete part of the spectrum below `4/√3` in closed form.

use num_bigint::BigInt;

use super::biword::BiWord;
use super::lagrange::lagrange_periodic_sq_any;
use crate::arith::lucas::lucas_u;
use crate::arith::rational::{rat, BigRat};
use crate::error::{Error, Result};
use crate::romik::RomikWord;

/// `δ_k²`: `1/4`, `3/13`, then `3U²/(4(4U² − 1))` with `U = U_{2k−3}`.
pub fn delta_k_sq(k: usize) -> Result<BigRat> {
    match k {
        0 => Err(Error::IndexOutOfRange(0)),
        1 => Ok(rat(1, 4)),
        2 => Ok(rat(3, 13)),
        _ => {
            let u = lucas_u(2 * k - 3);
            let u2 = &u * &u;
            Ok(BigRat::new(
                BigInt::from(3) * &u2,
                BigInt::from(4) * (BigInt::from(4) * &u2 - 1),
            ))
        }
    }
}

/// The word realizing the `k`-th value: `3`, `2`, then `3 2^{2(k−2)}` up to rotation.
pub fn spectrum_witness(k: usize) -> Result<BiWord> {
    let digits = match k {
        0 => return Err(Error::IndexOutOfRange(0)),
        1 => vec![3],
        2 => vec![2],
        _ => {
            let mut d = vec![3];
            d.extend(std::iter::repeat_n(2, 2 * (k - 2)));
            d
        }
    };
    BiWord::periodic(RomikWord::new(digits)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub k: usize,
    /// `L²` of the witness, computed from its word.
    pub l_sq: BigRat,
    pub delta_sq: BigRat,
    pub witness: BiWord,
}

/// The first `count` entries `L_1 < L_2 < …` with their witnesses.
pub fn spectrum_below(count: usize) -> Result<Vec<SpectrumEntry>> {
    (1..=count)
        .map(|k| {
            let witness = spectrum_witness(k)?;
            let BiWord::Periodic(w) = &witness else {
                unreachable!("witnesses are periodic")
            };
            let l_sq = lagrange_periodic_sq_any(w)?.expect("reduced words have finite L");
            Ok(SpectrumEntry {
                k,
                l_sq,
                delta_sq: delta_k_sq(k)?,
                witness,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn table_values() {
        let want = [rat(1, 4), rat(3, 13), rat(25, 133), rat(11881, 63364), rat(1413721, 7539844)];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(&delta_k_sq(k + 1).unwrap(), w);
        }
        assert_eq!(delta_k_sq(0), Err(Error::IndexOutOfRange(0)));
    }

    #[test]
    fn entries_are_reciprocal() {
        let entries = spectrum_below(8).unwrap();
        assert_eq!(entries[2].witness.to_string(), "^∞(223)^∞");
        assert_eq!(entries[2].l_sq, rat(133, 25));
        for e in &entries {
            assert!((&e.l_sq * &e.delta_sq).is_one(), "k = {}", e.k);
        }
        for w in entries.windows(2) {
            assert!(w[0].l_sq < w[1].l_sq);
        }
    }
}
