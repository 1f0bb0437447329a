//! Exhaustive Lagrange values of periodic words, one per primitive necklace.

use std::cmp::Ordering;

use num_bigint::BigInt;

use super::lagrange::sixteen_thirds;
use crate::arith::rational::BigRat;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::romik::RomikWord;

/// Largest period accepted by the enumeration.
pub const MAX_PERIOD: usize = 12;

const BATCH: usize = 1 << 16;

/// Lyndon words of length `1..=n` over `1..=k`, in lexicographic order (Fredricksen–Kessler–Maiorana).
pub fn lyndon_words(n: usize, k: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for_each_lyndon(n, k, |w| out.push(w.to_vec()));
    out
}

fn for_each_lyndon(n: usize, k: u8, mut f: impl FnMut(&[u8])) {
    if n == 0 || k == 0 {
        return;
    }
    let mut w: Vec<u8> = vec![1];
    loop {
        f(&w);
        let m = w.len();
        while w.len() < n {
            let next = w[w.len() - m];
            w.push(next);
        }
        while w.last() == Some(&k) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => return,
        }
    }
}

/// Graded `[[a, β√3], [γ√3, d]]` in machine integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct G {
    a: i128,
    b: i128,
    c: i128,
    d: i128,
}

const fn g(a: i128, b: i128, c: i128, d: i128) -> G {
    G { a, b, c, d }
}

const ID: G = g(1, 0, 0, 1);
const N: [G; 5] = [g(1, 1, 0, 1), g(2, 1, 1, 1), g(2, 1, 1, 2), g(1, 1, 1, 2), g(1, 0, 1, 1)];

impl G {
    fn mul(self, o: G) -> G {
        g(
            self.a * o.a + 3 * self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            3 * self.c * o.b + self.d * o.d,
        )
    }
}

/// `(Δ, m)` with `L² = Δ/(3m²)`; `m = 0` means `L = ∞`.
fn discriminant_and_min(word: &[u8]) -> (i128, i128) {
    let n = word.len();
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(ID);
    for &d in word {
        prefix.push(prefix.last().unwrap().mul(N[d as usize - 1]));
    }
    let mut suffix = vec![ID; n + 1];
    for i in (0..n).rev() {
        suffix[i] = N[word[i] as usize - 1].mul(suffix[i + 1]);
    }
    let full = prefix[n];
    let tr = full.a + full.d;
    let det = full.a * full.d - 3 * full.b * full.c;
    let mut m = i128::MAX;
    for r in 0..n {
        let rot = suffix[r].mul(prefix[r]);
        m = m.min(rot.b).min(rot.c);
    }
    (tr * tr - 4 * det, m)
}

/// Lagrange value of one periodic word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecklaceValue {
    /// Lyndon representative.
    pub word: RomikWord,
    /// `L²`, or `None` when `L = ∞`.
    pub l_sq: Option<BigRat>,
    /// `L ≤ 4/√3`, decided exactly as `Δ ≤ 16m²`.
    pub below_threshold: bool,
}

impl NecklaceValue {
    pub fn l_f64(&self) -> f64 {
        match &self.l_sq {
            Some(q) => crate::arith::rational::to_f64(q).sqrt(),
            None => f64::INFINITY,
        }
    }
}

fn evaluate(word: &[u8]) -> NecklaceValue {
    let (delta, m) = discriminant_and_min(word);
    let l_sq = (m > 0).then(|| BigRat::new(BigInt::from(delta), BigInt::from(3 * m * m)));
    NecklaceValue {
        word: RomikWord::from_digits(word),
        below_threshold: m > 0 && delta <= 16 * m * m,
        l_sq,
    }
}

fn check_period(max_period: usize) -> Result<()> {
    if max_period > MAX_PERIOD {
        return Err(Error::InvalidInput(format!(
            "period bound {max_period} exceeds {MAX_PERIOD}"
        )));
    }
    Ok(())
}

fn scan(max_period: usize, exec: Exec, keep: impl Fn(&NecklaceValue) -> bool + Sync) -> Vec<NecklaceValue> {
    let mut out = Vec::new();
    let mut batch: Vec<Vec<u8>> = Vec::with_capacity(BATCH);
    let flush = |batch: &mut Vec<Vec<u8>>, out: &mut Vec<NecklaceValue>| {
        let vals = exec.map(batch, |w| {
            let v = evaluate(w);
            keep(&v).then_some(v)
        });
        out.extend(vals.into_iter().flatten());
        batch.clear();
    };
    for_each_lyndon(max_period, 5, |w| {
        batch.push(w.to_vec());
        if batch.len() == BATCH {
            flush(&mut batch, &mut out);
        }
    });
    flush(&mut batch, &mut out);
    out
}

/// Every primitive necklace over `1..=5` of period at most `max_period`, in Lyndon order.
pub fn periodic_table(max_period: usize, exec: Exec) -> Result<Vec<NecklaceValue>> {
    check_period(max_period)?;
    Ok(scan(max_period, exec, |_| true))
}

/// The necklaces with `L ≤ 4/√3`, sorted by `L²` then word.
pub fn enumerate_periodic_spectrum(max_period: usize) -> Result<Vec<NecklaceValue>> {
    enumerate_periodic_spectrum_with(max_period, Exec::best())
}

pub fn enumerate_periodic_spectrum_with(max_period: usize, exec: Exec) -> Result<Vec<NecklaceValue>> {
    check_period(max_period)?;
    let mut out = scan(max_period, exec, |v| v.below_threshold);
    debug_assert!(out.iter().all(|v| v.l_sq.as_ref().is_some_and(|q| q <= &sixteen_thirds())));
    out.sort_by(|x, y| match x.l_sq.cmp(&y.l_sq) {
        Ordering::Equal => x.word.cmp(&y.word),
        o => o,
    });
    Ok(out)
}

/// The words the characterization predicts for periods up to `max_period`:
/// `2`, `3`, `4`, and `3 2^{2k}` with its `∨`-image `3 4^{2k}`, as Lyndon words.
pub fn predicted_spectrum_words(max_period: usize) -> Vec<RomikWord> {
    let mut out: Vec<RomikWord> = Vec::new();
    if max_period >= 1 {
        out.extend([2u8, 3, 4].map(|d| RomikWord::from_digits(&[d])));
    }
    let mut k = 1;
    while 2 * k < max_period {
        for x in [2u8, 4] {
            let mut d = vec![3];
            d.extend(std::iter::repeat_n(x, 2 * k));
            out.push(RomikWord::from_digits(&d).min_rotation());
        }
        k += 1;
    }
    out.sort();
    out
}
