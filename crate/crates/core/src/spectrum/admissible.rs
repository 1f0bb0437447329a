//! Necessary forbidden-pattern filter for sequences with `L < 4/√3`.

use super::biword::BiWord;
use crate::romik::RomikWord;

/// Factors that never occur in a sequence with Lagrange number below `4/√3`.
pub const FORBIDDEN_FACTORS: [&[u8]; 4] = [&[2, 4], &[4, 2], &[2, 3, 4], &[4, 3, 2]];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Violation {
    Digit(u8),
    Factor(Vec<u8>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub word: BiWord,
    pub violations: Vec<Violation>,
}

impl AdmissibilityReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks digits 1 and 5, the factors 24, 42, 234, 432, and 33 outside `^∞3^∞`.
pub fn is_admissible_candidate(t: &BiWord) -> AdmissibilityReport {
    let window = t.factor_window(3);
    let mut violations: Vec<Violation> = Vec::new();
    for d in [1u8, 5] {
        if window.contains(&d) {
            violations.push(Violation::Digit(d));
        }
    }
    let has = |f: &[u8]| window.windows(f.len()).any(|x| x == f);
    for f in FORBIDDEN_FACTORS {
        if has(f) {
            violations.push(Violation::Factor(f.to_vec()));
        }
    }
    let all_threes = matches!(t, BiWord::Periodic(w) if w == &RomikWord::from_digits(&[3]));
    if !all_threes && has(&[3, 3]) {
        violations.push(Violation::Factor(vec![3, 3]));
    }
    AdmissibilityReport {
        word: t.clone(),
        violations,
    }
}
