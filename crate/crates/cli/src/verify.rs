use std::cmp::Ordering;
use std::fmt::Write as _;
use std::time::Instant;

use anyhow::Result;
use serde::{Deserialize, Serialize};

use eislag::approx::{
    delta_liminf_estimate, delta_sq_stream, eisenstein_pairs, minimizers_on, pair_scan_on, perron_delta, RayTarget,
};
use eislag::arith::rational::{int, rat};
use eislag::arith::{DecimalMode, SqrtThree, Surd};
use eislag::oracle::sieve_triples;
use eislag::par::Exec;
use eislag::romik::{cylinder_boundaries, point_of_stream, triples_u64, DigitStream, ExtNorm, RomikWord};
use eislag::spectrum::{
    delta_k_sq, enumerate_periodic_spectrum_with, lagrange_biinfinite, lagrange_periodic_sq, lagrange_section,
    predicted_spectrum_words, spectrum_witness, BiWord,
};

use crate::output::Report;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub k: usize,
    pub delta_sq: String,
    /// Truncated to the printed places of the reference table.
    pub delta: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub table: Vec<TableRow>,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl Report for VerifyReport {
    fn text(&self) -> String {
        let mut s = String::from("  k  δ_k²                   δ_k            witness\n");
        for r in &self.table {
            let _ = writeln!(s, "{:>3}  {:<21}  {:<13}  {}", r.k, r.delta_sq, r.delta, r.witness);
        }
        s.push('\n');
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{mark}  {:<24} {:>6} ms  {}", c.name, c.millis, c.detail);
        }
        let n = self.checks.iter().filter(|c| c.passed).count();
        let _ = write!(s, "{n}/{} checks passed", self.checks.len());
        s
    }
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["check", "passed", "millis", "detail"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.checks
            .iter()
            .map(|c| vec![c.name.clone(), c.passed.to_string(), c.millis.to_string(), c.detail.clone()])
            .collect()
    }
}

const TABLE: [(i64, i64, &str); 5] = [
    (1, 4, "0.5"),
    (3, 13, "0.4803844614"),
    (25, 133, "0.4335549847"),
    (11881, 63364, "0.4330172576"),
    (1413721, 7539844, "0.4330127401"),
];

type Outcome = std::result::Result<String, String>;

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn check(name: &str, f: impl FnOnce() -> Outcome) -> Check {
    let start = Instant::now();
    let res = f();
    let millis = start.elapsed().as_millis() as u64;
    let (passed, detail) = match res {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check {
        name: name.into(),
        passed,
        detail,
        millis,
    }
}

fn table() -> Result<Vec<TableRow>> {
    (1..=5)
        .map(|k| {
            let q = delta_k_sq(k)?;
            let places = TABLE[k - 1].2.len() - 2;
            Ok(TableRow {
                k,
                delta: Surd::sqrt_rat(&q).render(places, DecimalMode::Truncate)?,
                delta_sq: q.to_string(),
                witness: spectrum_witness(k)?.to_ascii(),
            })
        })
        .collect()
}

fn closed_form() -> Outcome {
    for (k, &(n, d, digits)) in TABLE.iter().enumerate() {
        let q = delta_k_sq(k + 1).map_err(fail)?;
        if q != rat(n, d) {
            return Err(format!("δ_{}² = {q}", k + 1));
        }
        let places = digits.len() - 2;
        let got = Surd::sqrt_rat(&q).render(places, DecimalMode::Truncate).map_err(fail)?;
        if got != digits {
            return Err(format!("δ_{} renders as {got}", k + 1));
        }
    }
    Ok("δ_1..δ_5 exact, digits match".into())
}

fn accumulation() -> Outcome {
    let quarter = Surd::from_sqrt3(SqrtThree::new(int(0), rat(1, 4)));
    let eps = Surd::from_rat(rat(1, 1_000_000_000));
    let mut prev = delta_k_sq(1).map_err(fail)?;
    for k in 2..=60 {
        let q = delta_k_sq(k).map_err(fail)?;
        if q >= prev {
            return Err(format!("δ_{k} ≥ δ_{}", k - 1));
        }
        let gap = &Surd::sqrt_rat(&q) - &quarter;
        if !gap.is_positive() {
            return Err(format!("δ_{k} ≤ √3/4"));
        }
        if k >= 10 && gap.try_cmp(&eps).map_err(fail)? != Ordering::Less {
            return Err(format!("δ_{k} − √3/4 ≥ 1e-9"));
        }
        prev = q;
    }
    Ok("decreasing to √3/4, within 1e-9 from k = 10".into())
}

fn tree_vs_sieve() -> Outcome {
    let tree = triples_u64(2000, Exec::Sequential);
    let sieve = sieve_triples(2000);
    if tree != sieve {
        return Err(format!("{} tree vs {} sieve triples", tree.len(), sieve.len()));
    }
    Ok(format!("{} triples up to c = 2000", tree.len()))
}

/// Every reduced word of length `1..=max_len`, in lexicographic order per length.
fn reduced_words(max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| (2..=4).map(move |d| [w.as_slice(), &[d]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn perron() -> Outcome {
    let mut n = 0;
    for per in reduced_words(4).into_iter().take(50) {
        let s = DigitStream::from_digits(&[], &per);
        for k in 1..=12 {
            let t = perron_delta(&s, k).map_err(fail)?;
            let z10 = cylinder_boundaries(&s.prefix(k)).0;
            if t.approximant != z10 || t.delta_sq != delta_sq_stream(&s, &z10).map_err(fail)? {
                return Err(format!("{s}, k = {k}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} exact identities"))
}

fn necklaces(exec: Exec) -> Outcome {
    let got: Vec<String> = enumerate_periodic_spectrum_with(6, exec)
        .map_err(fail)?
        .into_iter()
        .map(|v| v.word.to_string())
        .collect();
    let mut want: Vec<String> = predicted_spectrum_words(6).iter().map(|w| w.to_string()).collect();
    let mut have = got.clone();
    want.sort();
    have.sort();
    if have != want {
        return Err(format!("found {}", got.join(" ")));
    }
    Ok(format!("{} words at or below 4/√3 up to period 6", got.len()))
}

fn sections() -> Outcome {
    let v = lagrange_periodic_sq(&RomikWord::from_digits(&[2, 4])).map_err(fail)?;
    if v != int(8) {
        return Err(format!("L² of (24) = {v}"));
    }
    let s = lagrange_section(&DigitStream::from_digits(&[], &[5, 1]), &DigitStream::from_digits(&[], &[1, 5]))
        .map_err(fail)?;
    if s != ExtNorm::Finite(Surd::sqrt_rat(&int(7))) {
        return Err(format!("(15) section = {s}"));
    }
    let t: BiWord = "2inf.3.2inf".parse().map_err(fail)?;
    let r = lagrange_biinfinite(&t).map_err(fail)?;
    let four_over = ExtNorm::Finite(Surd::from_sqrt3(SqrtThree::new(int(0), rat(4, 3))));
    if r.value != four_over || !r.is_certified() {
        return Err(format!("spliced value {} (certified: {})", r.value, r.is_certified()));
    }
    Ok("(24) → 8, (15) → √7, ^∞2 3 2^∞ → 4/√3 certified".into())
}

fn isometry(exec: Exec) -> Outcome {
    const N: u64 = 1_000_000;
    let pairs = eisenstein_pairs(N, exec);
    let mut worst = 0f64;
    for k in 1..=4 {
        let BiWord::Periodic(w) = spectrum_witness(k).map_err(fail)? else {
            return Err("witness is not periodic".into());
        };
        let s = DigitStream::periodic(w).map_err(fail)?;
        let est = delta_liminf_estimate(&s, N).map_err(fail)?;
        let z = RayTarget::from_point(&point_of_stream(&s).map_err(fail)?);
        let ray = pair_scan_on(&z, &pairs, N, exec).map_err(fail)?;
        let gap = (est.estimate - ray.estimate).abs();
        if gap >= 1e-6 {
            return Err(format!("{s}: {} vs {}", est.estimate, ray.estimate));
        }
        worst = worst.max(gap);
    }
    Ok(format!("estimator and pair scan agree to {worst:.1e} at N = 10^6"))
}

fn boundary_optimality(exec: Exec) -> Outcome {
    let triples = triples_u64(5000, exec);
    let mut streams = 0;
    for pre in std::iter::once(vec![]).chain(reduced_words(2)) {
        for per in reduced_words(2) {
            let s = DigitStream::from_digits(&pre, &per);
            for m in minimizers_on(&s, &triples, exec).map_err(fail)? {
                if m.boundary.is_none() {
                    return Err(format!("{s}: minimizer {} is interior", m.approximant));
                }
                if m.delta_f64() > 0.55 {
                    return Err(format!("{s}: min δ = {}", m.delta_f64()));
                }
            }
            streams += 1;
        }
    }
    Ok(format!("{streams} streams, every minimizer up to c = 5000 is a boundary point"))
}

pub fn verify(deep: bool, exec: Exec) -> Result<VerifyReport> {
    let mut checks = vec![
        check("closed form", closed_form),
        check("accumulation", accumulation),
        check("tree vs sieve", tree_vs_sieve),
        check("perron formula", perron),
        check("necklaces", || necklaces(exec)),
        check("section values", sections),
        check("isometry", || isometry(exec)),
    ];
    if deep {
        checks.push(check("boundary optimality", || boundary_optimality(exec)));
    }
    Ok(VerifyReport { table: table()?, checks })
}
