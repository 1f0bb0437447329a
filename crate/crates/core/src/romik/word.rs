//! Finite Romik words and eventually periodic digit streams.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Digit involution `d ↦ 6 − d` (swapping the two coordinates).
pub fn vee(d: u8) -> u8 {
    6 - d
}

pub use crate::arith::lattice::hat;

/// A finite word over the digits `1..=5`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RomikWord {
    digits: Vec<u8>,
}

impl RomikWord {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = digits.iter().find(|d| !(1..=5).contains(*d)) {
            return Err(Error::InvalidDigit(bad));
        }
        Ok(RomikWord { digits })
    }

    pub fn empty() -> Self {
        RomikWord::default()
    }

    /// Panicking constructor for literals in tests and examples.
    pub fn from_digits(digits: &[u8]) -> Self {
        RomikWord::new(digits.to_vec()).expect("invalid Romik digit")
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// No digit equals 1 or 5.
    pub fn is_reduced(&self) -> bool {
        self.digits.iter().all(|&d| (2..=4).contains(&d))
    }

    pub fn map(&self, f: impl Fn(u8) -> u8) -> RomikWord {
        RomikWord {
            digits: self.digits.iter().map(|&d| f(d)).collect(),
        }
    }

    pub fn vee(&self) -> RomikWord {
        self.map(vee)
    }

    pub fn hat(&self) -> RomikWord {
        self.map(hat)
    }

    pub fn reversed(&self) -> RomikWord {
        let mut digits = self.digits.clone();
        digits.reverse();
        RomikWord { digits }
    }

    pub fn concat(&self, other: &RomikWord) -> RomikWord {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(&other.digits);
        RomikWord { digits }
    }

    pub fn push(&mut self, d: u8) {
        assert!((1..=5).contains(&d), "digit {d} out of range");
        self.digits.push(d);
    }

    /// Rotation starting at position `k`.
    pub fn rotate(&self, k: usize) -> RomikWord {
        let n = self.digits.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let mut digits = self.digits[k..].to_vec();
        digits.extend_from_slice(&self.digits[..k]);
        RomikWord { digits }
    }

    pub fn rotations(&self) -> impl Iterator<Item = RomikWord> + '_ {
        (0..self.digits.len().max(1)).map(|k| self.rotate(k))
    }

    /// Shortest `r` with `self = r^m`.
    pub fn primitive_root(&self) -> RomikWord {
        let n = self.digits.len();
        for p in 1..=n {
            if n.is_multiple_of(p) && (p..n).all(|i| self.digits[i] == self.digits[i - p]) {
                return RomikWord {
                    digits: self.digits[..p].to_vec(),
                };
            }
        }
        self.clone()
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive_root().len() == self.len()
    }

    /// Lexicographically smallest rotation.
    pub fn min_rotation(&self) -> RomikWord {
        self.rotations().min().unwrap_or_default()
    }

    /// True if `factor` occurs in the word read cyclically.
    pub fn contains_cyclic(&self, factor: &[u8]) -> bool {
        let n = self.digits.len();
        n > 0 && (0..n).any(|i| (0..factor.len()).all(|j| self.digits[(i + j) % n] == factor[j]))
    }

    pub fn contains(&self, factor: &[u8]) -> bool {
        factor.is_empty() || self.digits.windows(factor.len()).any(|w| w == factor)
    }
}

impl fmt::Display for RomikWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for RomikWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' '))
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::InvalidInput(format!("bad digit {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        RomikWord::new(digits)
    }
}

/// The eventually periodic digit sequence `preperiod · period^∞`.
///
/// Construction canonicalizes: the period is made primitive and the preperiod is
/// shortened by rolling matching digits into the period.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitStream {
    preperiod: RomikWord,
    period: RomikWord,
}

impl DigitStream {
    pub fn new(preperiod: RomikWord, period: RomikWord) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let mut pre = preperiod.digits;
        let mut per = period.primitive_root().digits;
        while let (Some(&p), Some(&q)) = (pre.last(), per.last()) {
            if p != q {
                break;
            }
            pre.pop();
            per.rotate_right(1);
        }
        Ok(DigitStream {
            preperiod: RomikWord { digits: pre },
            period: RomikWord { digits: per },
        })
    }

    pub fn periodic(period: RomikWord) -> Result<Self> {
        DigitStream::new(RomikWord::empty(), period)
    }

    /// Panicking constructor for literals.
    pub fn from_digits(preperiod: &[u8], period: &[u8]) -> Self {
        DigitStream::new(RomikWord::from_digits(preperiod), RomikWord::from_digits(period))
            .expect("invalid digit stream")
    }

    pub fn preperiod(&self) -> &RomikWord {
        &self.preperiod
    }

    pub fn period(&self) -> &RomikWord {
        &self.period
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    /// Digit at position `i` (0-based).
    pub fn digit(&self, i: usize) -> u8 {
        let pre = self.preperiod.len();
        if i < pre {
            self.preperiod.digits[i]
        } else {
            self.period.digits[(i - pre) % self.period.len()]
        }
    }

    pub fn prefix(&self, k: usize) -> RomikWord {
        RomikWord {
            digits: (0..k).map(|i| self.digit(i)).collect(),
        }
    }

    /// The stream with its first `k` digits removed.
    pub fn shift(&self, k: usize) -> DigitStream {
        let pre = self.preperiod.len();
        if k <= pre {
            DigitStream {
                preperiod: RomikWord {
                    digits: self.preperiod.digits[k..].to_vec(),
                },
                period: self.period.clone(),
            }
        } else {
            DigitStream {
                preperiod: RomikWord::empty(),
                period: self.period.rotate(k - pre),
            }
        }
    }

    /// `w · self`.
    pub fn prepend(&self, w: &RomikWord) -> DigitStream {
        DigitStream::new(w.concat(&self.preperiod), self.period.clone())
            .expect("nonempty period")
    }

    pub fn map(&self, f: impl Fn(u8) -> u8 + Copy) -> DigitStream {
        DigitStream::new(self.preperiod.map(f), self.period.map(f)).expect("nonempty period")
    }

    pub fn vee(&self) -> DigitStream {
        self.map(vee)
    }

    pub fn hat(&self) -> DigitStream {
        self.map(hat)
    }

    pub fn is_reduced(&self) -> bool {
        self.preperiod.is_reduced() && self.period.is_reduced()
    }

    /// Ends in `1^∞` or `5^∞`, i.e. represents a rational point.
    pub fn is_terminal(&self) -> bool {
        self.period.digits == [1] || self.period.digits == [5]
    }

    /// Parses `34inf`, `(223)inf`, `1(23)inf`, `3^∞` or a bare period such as `223`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != ',').collect();
        let bad = || Error::InvalidInput(format!("cannot parse digit stream {s:?}"));
        let body = t
            .strip_suffix("inf")
            .or_else(|| t.strip_suffix("^∞"))
            .or_else(|| t.strip_suffix('∞'))
            .map(|b| b.strip_suffix('^').unwrap_or(b));
        let Some(body) = body else {
            return DigitStream::periodic(t.parse()?);
        };
        if let Some(rest) = body.strip_suffix(')') {
            let open = rest.rfind('(').ok_or_else(bad)?;
            let pre: RomikWord = rest[..open].parse()?;
            let per: RomikWord = rest[open + 1..].parse()?;
            return DigitStream::new(pre, per);
        }
        if body.is_empty() {
            return Err(bad());
        }
        let (pre, per) = body.split_at(body.len() - 1);
        DigitStream::new(pre.parse()?, per.parse()?)
    }

    /// Compact ASCII spelling accepted by [`DigitStream::parse`].
    pub fn to_ascii(&self) -> String {
        if self.period.len() == 1 {
            format!("{}{}inf", self.preperiod, self.period)
        } else {
            format!("{}({})inf", self.preperiod, self.period)
        }
    }
}

impl fmt::Display for DigitStream {
    /// Bracketed form such as `[1,2,1^∞]` or `[(2,2,3)^∞]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.preperiod.digits.iter().map(|d| d.to_string()).collect();
        let per: Vec<String> = self.period.digits.iter().map(|d| d.to_string()).collect();
        if per.len() == 1 {
            parts.push(format!("{}^∞", per[0]));
        } else {
            parts.push(format!("({})^∞", per.join(",")));
        }
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for DigitStream {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DigitStream::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_streams() {
        let s = DigitStream::from_digits(&[1, 2, 3], &[2, 3, 2, 3]);
        assert_eq!(s.preperiod().digits(), &[1]);
        assert_eq!(s.period().digits(), &[2, 3]);
        assert_eq!(s.digit(0), 1);
        assert_eq!(s.digit(1), 2);
        assert_eq!(s.digit(4), 3);
        let t = DigitStream::from_digits(&[3, 3], &[3]);
        assert!(t.is_purely_periodic());
    }

    #[test]
    fn shifts_and_prefixes() {
        let s = DigitStream::from_digits(&[1, 4], &[2, 2, 3]);
        assert_eq!(s.prefix(5).digits(), &[1, 4, 2, 2, 3]);
        assert_eq!(s.shift(3), DigitStream::from_digits(&[], &[2, 3, 2]));
        assert_eq!(s.shift(1).prepend(&RomikWord::from_digits(&[1])), s);
    }

    #[test]
    fn parsing() {
        assert_eq!(DigitStream::parse("34inf").unwrap(), DigitStream::from_digits(&[3], &[4]));
        assert_eq!(DigitStream::parse("(223)inf").unwrap(), DigitStream::from_digits(&[], &[2, 2, 3]));
        assert_eq!(DigitStream::parse("1(23)inf").unwrap(), DigitStream::from_digits(&[1], &[2, 3]));
        assert_eq!(DigitStream::parse("3^∞").unwrap(), DigitStream::from_digits(&[], &[3]));
        assert_eq!(DigitStream::parse("24").unwrap(), DigitStream::from_digits(&[], &[2, 4]));
        assert!(DigitStream::parse("7inf").is_err());
        assert!(DigitStream::parse("inf").is_err());
        let s = DigitStream::from_digits(&[1, 2], &[1]);
        assert_eq!(s.to_string(), "[1,2,1^∞]");
        assert_eq!(DigitStream::parse(&s.to_ascii()).unwrap(), s);
        assert_eq!(DigitStream::from_digits(&[], &[2, 2, 3]).to_string(), "[(2,2,3)^∞]");
    }

    #[test]
    fn word_ops() {
        let w = RomikWord::from_digits(&[3, 2, 2]);
        assert_eq!(w.min_rotation().digits(), &[2, 2, 3]);
        assert_eq!(w.vee().digits(), &[3, 4, 4]);
        assert!(RomikWord::from_digits(&[2, 3, 2, 3]).primitive_root().len() == 2);
        assert!(w.contains_cyclic(&[2, 3]));
        assert!(w.contains_cyclic(&[2, 3, 2]));
        assert!(!w.contains(&[2, 3, 2]));
        assert!(!RomikWord::from_digits(&[1, 2]).is_reduced());
    }
}
