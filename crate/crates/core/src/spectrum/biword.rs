//! Doubly infinite Romik sequences up to shift.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::romik::word::{hat, vee};
use crate::romik::RomikWord;

/// A doubly infinite sequence modulo shifts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BiWord {
    /// `^∞w^∞` with `w` primitive and lexicographically minimal among its rotations.
    Periodic(RomikWord),
    /// `^∞(left) core (right)^∞`.
    Spliced {
        left: RomikWord,
        core: RomikWord,
        right: RomikWord,
    },
}

impl BiWord {
    pub fn periodic(w: RomikWord) -> Result<BiWord> {
        if w.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(BiWord::Periodic(w.primitive_root().min_rotation()))
    }

    /// Builds `^∞(left) core (right)^∞`, absorbing core digits into the periods.
    ///
    /// Collapses to [`BiWord::Periodic`] when nothing separates two equal periods.
    pub fn spliced(left: RomikWord, core: RomikWord, right: RomikWord) -> Result<BiWord> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let mut left = left.primitive_root();
        let mut right = right.primitive_root();
        let mut core = core.digits().to_vec();
        while !core.is_empty() && core[0] == left.digits()[0] {
            core.remove(0);
            left = left.rotate(1);
        }
        while let Some(&last) = core.last() {
            if last != *right.digits().last().unwrap() {
                break;
            }
            core.pop();
            right = right.rotate(right.len() - 1);
        }
        if core.is_empty() && left == right {
            return BiWord::periodic(left);
        }
        Ok(BiWord::Spliced {
            left,
            core: RomikWord::new(core)?,
            right,
        })
    }

    pub fn map(&self, f: impl Fn(u8) -> u8 + Copy) -> BiWord {
        match self {
            BiWord::Periodic(w) => BiWord::periodic(w.map(f)).expect("nonempty"),
            BiWord::Spliced { left, core, right } => {
                BiWord::spliced(left.map(f), core.map(f), right.map(f)).expect("nonempty")
            }
        }
    }

    pub fn vee(&self) -> BiWord {
        self.map(vee)
    }

    pub fn hat(&self) -> BiWord {
        self.map(hat)
    }

    /// `T*`, read backwards.
    pub fn reversed(&self) -> BiWord {
        match self {
            BiWord::Periodic(w) => BiWord::periodic(w.reversed()).expect("nonempty"),
            BiWord::Spliced { left, core, right } => {
                BiWord::spliced(right.reversed(), core.reversed(), left.reversed()).expect("nonempty")
            }
        }
    }

    pub fn is_reduced(&self) -> bool {
        match self {
            BiWord::Periodic(w) => w.is_reduced(),
            BiWord::Spliced { left, core, right } => {
                left.is_reduced() && core.is_reduced() && right.is_reduced()
            }
        }
    }

    /// A finite window containing every factor of length at most `n`.
    pub(crate) fn factor_window(&self, n: usize) -> Vec<u8> {
        let repeat = |w: &RomikWord| -> Vec<u8> {
            let copies = n.div_ceil(w.len()) + 1;
            w.digits().iter().copied().cycle().take(copies * w.len()).collect()
        };
        match self {
            BiWord::Periodic(w) => repeat(w),
            BiWord::Spliced { left, core, right } => {
                let mut out = repeat(left);
                out.extend_from_slice(core.digits());
                out.extend(repeat(right));
                out
            }
        }
    }

    /// Compact ASCII form, `(223)` for periodic words and `2inf.3.2inf` for spliced ones.
    pub fn to_ascii(&self) -> String {
        match self {
            BiWord::Periodic(w) => format!("({w})inf"),
            BiWord::Spliced { left, core, right } => format!("{left}inf.{core}.{right}inf"),
        }
    }
}

fn period_text(w: &RomikWord) -> String {
    if w.len() == 1 {
        w.to_string()
    } else {
        format!("({w})")
    }
}

impl fmt::Display for BiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BiWord::Periodic(w) => write!(f, "^∞{}^∞", period_text(w)),
            BiWord::Spliced { left, core, right } => {
                write!(f, "^∞{} {} {}^∞", period_text(left), core, period_text(right))
            }
        }
    }
}

fn strip_marks(s: &str) -> String {
    s.replace("inf", "")
        .chars()
        .filter(|c| !matches!(c, '^' | '∞' | '(' | ')' | ' ' | ','))
        .collect()
}

impl FromStr for BiWord {
    type Err = Error;

    /// Accepts `2inf.3.2inf`, `^∞2.3.2^∞`, `(223)`, `^∞(223)^∞` or a bare period.
    fn from_str(s: &str) -> Result<BiWord> {
        let parts: Vec<&str> = s.trim().split('.').collect();
        match parts.as_slice() {
            [w] => BiWord::periodic(strip_marks(w).parse()?),
            [l, c, r] => BiWord::spliced(
                strip_marks(l).parse()?,
                strip_marks(c).parse()?,
                strip_marks(r).parse()?,
            ),
            _ => Err(Error::InvalidInput(format!("cannot parse bi-infinite word {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(d: &[u8]) -> RomikWord {
        RomikWord::from_digits(d)
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(BiWord::periodic(w(&[2, 3, 2])).unwrap(), BiWord::Periodic(w(&[2, 2, 3])));
        assert_eq!(BiWord::periodic(w(&[3, 3])).unwrap(), BiWord::Periodic(w(&[3])));
        let t = BiWord::spliced(w(&[2]), w(&[2, 3, 2, 2]), w(&[2])).unwrap();
        assert_eq!(t, BiWord::Spliced { left: w(&[2]), core: w(&[3]), right: w(&[2]) });
        assert_eq!(BiWord::spliced(w(&[2]), w(&[2]), w(&[2])).unwrap(), BiWord::Periodic(w(&[2])));
        assert_eq!(t.reversed(), t);
        assert_eq!(t.vee().to_string(), "^∞4 3 4^∞");
    }

    #[test]
    fn parsing() {
        let t: BiWord = "2inf.3.2inf".parse().unwrap();
        assert_eq!(t.to_ascii(), "2inf.3.2inf");
        assert_eq!("^∞2.3.2^∞".parse::<BiWord>().unwrap(), t);
        assert_eq!("(322)".parse::<BiWord>().unwrap(), BiWord::Periodic(w(&[2, 2, 3])));
        assert_eq!("^∞3^∞".parse::<BiWord>().unwrap().to_string(), "^∞3^∞");
        assert!("1.2".parse::<BiWord>().is_err());
        assert!("".parse::<BiWord>().is_err());
    }
}
