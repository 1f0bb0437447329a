//! Lagrange numbers of sections and of doubly infinite sequences.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;

use super::biword::BiWord;
use crate::approx::hat_vee;
use crate::arith::mobius::Graded;
use crate::arith::rational::BigRat;
use crate::arith::surd::Surd;
use crate::error::{Error, Result};
use crate::romik::line::{mobius, norm_of_stream, word_graded, ExtNorm};
use crate::romik::word::{hat, vee};
use crate::romik::{DigitStream, RomikWord};

/// Default number of section offsets examined exactly before the tail certificate.
pub const DEFAULT_WINDOW: usize = 16;

/// `Δ_w / (3c²)` for `N_w = [[a, b√3], [c√3, d]]`: the squared value of the section `…w|w…`.
pub fn lagrange_periodic_sq(w: &RomikWord) -> Result<BigRat> {
    if w.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    if !w.is_reduced() {
        return Err(Error::NotReduced(w.to_string()));
    }
    let g = word_graded(w);
    Ok(ratio(&g.discriminant(), &g.gamma))
}

fn ratio(delta: &BigInt, m: &BigInt) -> BigRat {
    BigRat::new(delta.clone(), BigInt::from(3) * m * m)
}

/// `L(^∞w^∞)²` for any nonempty word, or `None` when it is infinite.
///
/// Every section `…w_r|w_r…` contributes `√Δ/c` and its dual `√Δ/b`, so the supremum is
/// `Δ / (3 m²)` with `m` the least off-diagonal coefficient over all rotations.
pub fn lagrange_periodic_sq_any(w: &RomikWord) -> Result<Option<BigRat>> {
    if w.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let mut delta = None;
    let mut m: Option<BigInt> = None;
    for r in w.rotations() {
        let g = word_graded(&r);
        delta.get_or_insert_with(|| g.discriminant());
        for c in [&g.beta, &g.gamma] {
            if m.as_ref().is_none_or(|x| c < x) {
                m = Some(c.clone());
            }
        }
    }
    let (delta, m) = (delta.unwrap(), m.unwrap());
    Ok((!m.is_zero()).then(|| ratio(&delta, &m)))
}

fn add_ext(a: ExtNorm, b: ExtNorm) -> Result<ExtNorm> {
    match (a, b) {
        (ExtNorm::Finite(x), ExtNorm::Finite(y)) => Ok(ExtNorm::Finite(x.checked_add(&y)?)),
        _ => Ok(ExtNorm::Infinity),
    }
}

/// `L(P*|Q) = ‖P̂^∨‖ + ‖Q‖`.
pub fn lagrange_section(p: &DigitStream, q: &DigitStream) -> Result<ExtNorm> {
    add_ext(norm_of_stream(&p.map(hat_vee))?, norm_of_stream(q)?)
}

/// `max(L(P*|Q), L((P^∨)*|Q^∨))`, the contribution of one section to `L(T)`.
pub fn section_value(p: &DigitStream, q: &DigitStream) -> Result<ExtNorm> {
    let direct = lagrange_section(p, q)?;
    let dual = add_ext(norm_of_stream(&p.map(hat))?, norm_of_stream(&q.map(vee))?)?;
    Ok(match direct.try_cmp(&dual)? {
        Ordering::Less => dual,
        _ => direct,
    })
}

/// One section `P*|Q` of a doubly infinite word together with its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionValue {
    pub past: DigitStream,
    pub future: DigitStream,
    pub value: ExtNorm,
}

/// `L(T)` with the evidence used to obtain it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangeReport {
    pub word: BiWord,
    pub value: ExtNorm,
    /// All sections for periodic words; the offsets up to the window for spliced ones.
    pub sections: Vec<SectionValue>,
    /// For spliced words, an upper bound on every section beyond the window.
    pub tail_bound: Option<Surd>,
    /// Sections attaining `value`; every other one is strictly smaller.
    pub attained: usize,
}

impl LagrangeReport {
    /// The tail bound, if any, lies strictly below the value.
    pub fn is_certified(&self) -> bool {
        match (&self.tail_bound, &self.value) {
            (None, _) => true,
            (Some(b), ExtNorm::Finite(v)) => b.try_cmp(v) == Ok(Ordering::Less),
            (Some(_), ExtNorm::Infinity) => true,
        }
    }
}

/// `L(T)` with the default window.
pub fn lagrange_biinfinite(t: &BiWord) -> Result<LagrangeReport> {
    lagrange_biinfinite_with(t, DEFAULT_WINDOW)
}

pub fn lagrange_biinfinite_with(t: &BiWord, window: usize) -> Result<LagrangeReport> {
    match t {
        BiWord::Periodic(w) => {
            let mut sections = Vec::with_capacity(w.len());
            for r in 0..w.len() {
                let rot = w.rotate(r);
                let past = DigitStream::periodic(rot.reversed())?;
                let future = DigitStream::periodic(rot)?;
                let value = section_value(&past, &future)?;
                sections.push(SectionValue { past, future, value });
            }
            summarize(t, sections, None)
        }
        BiWord::Spliced { left, core, right } => {
            let x = spliced_family(left, core, right)?;
            spliced_report(t, x, window)
        }
    }
}

/// The period digit of `^∞x 3 x^∞` for `x ∈ {2, 4}`.
fn spliced_family(left: &RomikWord, core: &RomikWord, right: &RomikWord) -> Result<u8> {
    let shape = (left.digits(), core.digits(), right.digits());
    match shape {
        ([2], [3], [2]) => Ok(2),
        ([4], [3], [4]) => Ok(4),
        _ => Err(Error::UnsupportedShape(format!("^∞({left}) {core} ({right})^∞"))),
    }
}

fn spliced_report(t: &BiWord, x: u8, window: usize) -> Result<LagrangeReport> {
    let flat = DigitStream::from_digits(&[], &[x]);
    let bent = |j: usize| -> DigitStream {
        let mut pre = vec![x; j];
        pre.push(3);
        DigitStream::from_digits(&pre, &[x])
    };
    let mut sections = Vec::with_capacity(2 * window + 2);
    for j in 0..=window {
        // Base point j digits before the 3, then j digits after it.
        for (past, future) in [(flat.clone(), bent(j)), (bent(j), flat.clone())] {
            let value = section_value(&past, &future)?;
            sections.push(SectionValue { past, future, value });
        }
    }
    let flat_norms = [x, hat_vee(x), hat(x), vee(x)].map(|d| ExtNorm::Finite(periodic_norm_of_digit(d)));
    // Beyond the window the bent side starts with y^(window+1) for one of these digits y.
    let mut bound: Option<Surd> = None;
    for (bent_digit, flat_norm) in [
        (hat_vee(x), &flat_norms[0]),
        (x, &flat_norms[1]),
        (hat(x), &flat_norms[3]),
        (vee(x), &flat_norms[2]),
    ] {
        let cyl = cylinder_sup(&RomikWord::from_digits(&vec![bent_digit; window + 1]));
        let total = add_ext(cyl, flat_norm.clone())?;
        let ExtNorm::Finite(total) = total else {
            return Err(Error::DegenerateWord(t.to_string()));
        };
        bound = Some(match bound {
            None => total,
            Some(b) => b.max(total)?,
        });
    }
    summarize(t, sections, bound)
}

fn periodic_norm_of_digit(d: u8) -> Surd {
    match norm_of_stream(&DigitStream::from_digits(&[], &[d])).expect("nonempty period") {
        ExtNorm::Finite(v) => v,
        ExtNorm::Infinity => unreachable!("only 1^∞ is infinite and 1 never occurs here"),
    }
}

/// Largest norm of a stream beginning with `w`: the larger endpoint of `N_w·[0, ∞]`.
fn cylinder_sup(w: &RomikWord) -> ExtNorm {
    let g: Graded = word_graded(w);
    let at_zero = mobius(&g, &ExtNorm::zero());
    let at_inf = mobius(&g, &ExtNorm::Infinity);
    match at_zero.try_cmp(&at_inf).expect("endpoints lie in Q(√3)") {
        Ordering::Less => at_inf,
        _ => at_zero,
    }
}

fn summarize(t: &BiWord, sections: Vec<SectionValue>, tail_bound: Option<Surd>) -> Result<LagrangeReport> {
    let mut value = sections[0].value.clone();
    for s in &sections[1..] {
        if s.value.try_cmp(&value)? == Ordering::Greater {
            value = s.value.clone();
        }
    }
    let mut attained = 0;
    for s in &sections {
        if s.value.try_cmp(&value)? == Ordering::Equal {
            attained += 1;
        }
    }
    Ok(LagrangeReport {
        word: t.clone(),
        value,
        sections,
        tail_bound,
        attained,
    })
}

/// `L²` as an exact rational when the value is rational after squaring.
pub fn square_rat(v: &ExtNorm) -> Option<BigRat> {
    v.finite().and_then(|s| s.square_as_rat())
}

/// `(4/√3)² = 16/3`, the accumulation point of the discrete spectrum.
pub fn sixteen_thirds() -> BigRat {
    BigRat::new(BigInt::from(16), BigInt::from(3))
}
