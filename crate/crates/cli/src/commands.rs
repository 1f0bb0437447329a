use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use eislag::approx::{best_approx_scan_on, boundary_points, delta_sq, BoundaryTag, Endpoint};
use eislag::arith::rational::BigRat;
use eislag::arith::{DecimalMode, Surd};
use eislag::par::Exec;
use eislag::romik::{expand_rational, point_of_stream, triples_u64, CirclePointQ, DigitStream, ExtNorm};
use eislag::spectrum::{
    enumerate_periodic_spectrum_with, lagrange_biinfinite, periodic_table, spectrum_below, BiWord, NecklaceValue,
};

use crate::output::Report;

pub fn decimal(v: &Surd, places: usize) -> Result<String> {
    Ok(v.render(places, DecimalMode::Nearest)?)
}

pub fn ext_decimal(v: &ExtNorm, places: usize) -> Result<String> {
    match v {
        ExtNorm::Finite(s) => decimal(s, places),
        ExtNorm::Infinity => Ok("inf".into()),
    }
}

fn rat_decimal(q: &BigRat, places: usize) -> Result<String> {
    decimal(&Surd::sqrt_rat(q), places)
}

fn tag_text(t: &BoundaryTag) -> String {
    let e = match t.endpoint {
        Endpoint::OneZero => "(1,0)",
        Endpoint::ZeroOne => "(0,1)",
    };
    format!("Z_{}^{e}", t.k)
}

pub fn parse_stream(s: &str) -> Result<DigitStream> {
    s.parse::<DigitStream>().with_context(|| format!("target {s:?}"))
}

fn parse_rat(s: &str) -> Result<BigRat> {
    let t = s.trim();
    let q = match t.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse().map_err(|_| anyhow!("bad numerator in {s:?}"))?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| anyhow!("bad denominator in {s:?}"))?;
            if d == 0.into() {
                bail!("zero denominator in {s:?}");
            }
            BigRat::new(n, d)
        }
        None => BigRat::from_integer(t.parse().map_err(|_| anyhow!("bad rational {s:?}"))?),
    };
    Ok(q)
}

/// Accepts `a,b,c`, optionally parenthesised.
pub fn parse_triple(s: &str) -> Result<CirclePointQ> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = t.split(',').map(str::trim).collect();
    let [a, b, c] = parts[..] else {
        bail!("expected a triple a,b,c, got {s:?}");
    };
    let n = |x: &str| -> Result<num_bigint::BigInt> { x.parse().map_err(|_| anyhow!("bad integer {x:?} in {s:?}")) };
    Ok(CirclePointQ::new(n(a)?, n(b)?, n(c)?)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TriplesReport(pub Vec<Triple>);

pub fn triples(max_c: u64, exec: Exec) -> TriplesReport {
    TriplesReport(
        triples_u64(max_c, exec)
            .into_iter()
            .map(|[a, b, c]| Triple { a, b, c })
            .collect(),
    )
}

impl Report for TriplesReport {
    fn text(&self) -> String {
        self.0.iter().map(|t| format!("({}, {}, {})\n", t.a, t.b, t.c)).collect()
    }
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["a", "b", "c"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.0
            .iter()
            .map(|t| vec![t.a.to_string(), t.b.to_string(), t.c.to_string()])
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandReport {
    pub point: String,
    pub expansions: Vec<String>,
}

pub fn expand(x: &str, y: &str) -> Result<ExpandReport> {
    let p = CirclePointQ::from_coords(&parse_rat(x)?, &parse_rat(y)?)?;
    let e = expand_rational(&p, 1 << 20)?;
    let mut expansions = vec![e.primary.to_string()];
    expansions.extend(e.alternative.iter().map(|s| s.to_string()));
    Ok(ExpandReport {
        point: p.to_string(),
        expansions,
    })
}

impl Report for ExpandReport {
    fn text(&self) -> String {
        self.expansions.join(" | ")
    }
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["point", "expansion"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.expansions.iter().map(|e| vec![self.point.clone(), e.clone()]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxRow {
    pub a: String,
    pub b: String,
    pub c: String,
    pub delta_sq: String,
    pub delta: String,
    pub boundary: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub target: String,
    pub approximant: ApproxRow,
}

pub fn delta(target: &str, z: &str, places: usize) -> Result<DeltaReport> {
    let s = parse_stream(target)?;
    let z = parse_triple(z)?;
    let d = delta_sq(&point_of_stream(&s)?, &z)?;
    let c: u64 = z.c().try_into().context("height too large")?;
    let boundary = boundary_points(&s, c)
        .into_iter()
        .find(|(_, b)| b == &z)
        .map(|(t, _)| tag_text(&t));
    Ok(DeltaReport {
        target: s.to_string(),
        approximant: ApproxRow {
            a: z.a().to_string(),
            b: z.b().to_string(),
            c: z.c().to_string(),
            delta: delta_text(&d, places)?,
            delta_sq: d.to_string(),
            boundary,
        },
    })
}

fn delta_text(d: &Surd, places: usize) -> Result<String> {
    Ok(d.render_sqrt(places, DecimalMode::Nearest)?)
}

impl Report for DeltaReport {
    fn text(&self) -> String {
        let r = &self.approximant;
        let mut s = format!("target {}\nZ = ({}, {}, {})\n", self.target, r.a, r.b, r.c);
        let _ = writeln!(s, "δ² = {}\nδ  = {}", r.delta_sq, r.delta);
        if let Some(b) = &r.boundary {
            let _ = writeln!(s, "boundary {b}");
        }
        s
    }
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["target", "a", "b", "c", "delta_sq", "delta", "boundary"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        let r = &self.approximant;
        vec![vec![
            self.target.clone(),
            r.a.clone(),
            r.b.clone(),
            r.c.clone(),
            r.delta_sq.clone(),
            r.delta.clone(),
            r.boundary.clone().unwrap_or_default(),
        ]]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub target: String,
    pub max_c: u64,
    pub scanned: usize,
    pub records: Vec<ApproxRow>,
}

pub fn scan(target: &str, max_c: u64, top: usize, places: usize, exec: Exec) -> Result<ScanReport> {
    let s = parse_stream(target)?;
    let triples = triples_u64(max_c, exec);
    let all = best_approx_scan_on(&s, &triples, exec)?;
    let records = all
        .iter()
        .take(top)
        .map(|r| {
            Ok(ApproxRow {
                a: r.approximant.a().to_string(),
                b: r.approximant.b().to_string(),
                c: r.approximant.c().to_string(),
                delta: delta_text(&r.delta_sq, places)?,
                delta_sq: r.delta_sq.to_string(),
                boundary: r.boundary.as_ref().map(tag_text),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport {
        target: s.to_string(),
        max_c,
        scanned: all.len(),
        records,
    })
}

impl Report for ScanReport {
    fn text(&self) -> String {
        let mut s = format!("target {}, {} triples with c ≤ {}\n", self.target, self.scanned, self.max_c);
        for (i, r) in self.records.iter().enumerate() {
            let tag = r.boundary.as_deref().unwrap_or("interior");
            let _ = writeln!(s, "{:>3}  ({}, {}, {})  δ = {}  {tag}", i + 1, r.a, r.b, r.c, r.delta);
        }
        s
    }
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["rank", "a", "b", "c", "delta_sq", "delta", "boundary"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.records
            .iter()
            .enumerate()
            .map(|(i, r)| {
                vec![
                    (i + 1).to_string(),
                    r.a.clone(),
                    r.b.clone(),
                    r.c.clone(),
                    r.delta_sq.clone(),
                    r.delta.clone(),
                    r.boundary.clone().unwrap_or_default(),
                ]
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LagrangeReport {
    pub word: String,
    pub value: String,
    pub decimal: String,
    pub l_sq: Option<String>,
    pub sections: usize,
    pub attained: usize,
    pub tail_bound: Option<String>,
    pub certified: bool,
}

pub fn lagrange(word: &str, places: usize) -> Result<LagrangeReport> {
    let t: BiWord = word.parse().with_context(|| format!("word {word:?}"))?;
    let r = lagrange_biinfinite(&t)?;
    Ok(LagrangeReport {
        word: t.to_string(),
        value: r.value.to_string(),
        decimal: ext_decimal(&r.value, places)?,
        l_sq: r.value.finite().and_then(|v| v.square_as_rat()).map(|q| q.to_string()),
        sections: r.sections.len(),
        attained: r.attained,
        tail_bound: r.tail_bound.as_ref().map(|b| decimal(b, places)).transpose()?,
        certified: r.is_certified(),
    })
}

impl Report for LagrangeReport {
    fn text(&self) -> String {
        let mut s = format!("L({}) = {} = {}\n", self.word, self.value, self.decimal);
        if let Some(q) = &self.l_sq {
            let _ = writeln!(s, "L² = {q}");
        }
        let _ = write!(s, "{} sections, attained by {}", self.sections, self.attained);
        if let Some(b) = &self.tail_bound {
            let _ = write!(s, ", tail bound {b} ({})", if self.certified { "certified" } else { "not certified" });
        }
        s
    }
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["word", "value", "decimal", "l_sq", "sections", "attained", "tail_bound", "certified"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.word.clone(),
            self.value.clone(),
            self.decimal.clone(),
            self.l_sq.clone().unwrap_or_default(),
            self.sections.to_string(),
            self.attained.to_string(),
            self.tail_bound.clone().unwrap_or_default(),
            self.certified.to_string(),
        ]]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub k: usize,
    pub witness: String,
    pub delta_sq: String,
    pub delta: String,
    pub l_sq: String,
    pub l: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpectrumReport(pub Vec<SpectrumRow>);

pub fn spectrum(k: usize, places: usize) -> Result<SpectrumReport> {
    let rows = spectrum_below(k)?
        .into_iter()
        .map(|e| {
            Ok(SpectrumRow {
                k: e.k,
                witness: e.witness.to_ascii(),
                delta: rat_decimal(&e.delta_sq, places)?,
                delta_sq: e.delta_sq.to_string(),
                l: rat_decimal(&e.l_sq, places)?,
                l_sq: e.l_sq.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumReport(rows))
}

impl Report for SpectrumReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.0 {
            let _ = writeln!(s, "{:>3}  δ = {}  L = {}  δ² = {}  {}", r.k, r.delta, r.l, r.delta_sq, r.witness);
        }
        s
    }
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["k", "witness", "delta_sq", "delta", "l_sq", "l"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.0
            .iter()
            .map(|r| {
                vec![
                    r.k.to_string(),
                    r.witness.clone(),
                    r.delta_sq.clone(),
                    r.delta.clone(),
                    r.l_sq.clone(),
                    r.l.clone(),
                ]
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecklaceRow {
    pub word: String,
    pub l_sq: Option<String>,
    pub l: String,
    pub below_threshold: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecklacesReport {
    pub max_period: usize,
    pub rows: Vec<NecklaceRow>,
}

fn necklace_row(v: &NecklaceValue, places: usize) -> Result<NecklaceRow> {
    Ok(NecklaceRow {
        word: v.word.to_string(),
        l: match &v.l_sq {
            Some(q) => rat_decimal(q, places)?,
            None => "inf".into(),
        },
        l_sq: v.l_sq.as_ref().map(|q| q.to_string()),
        below_threshold: v.below_threshold,
    })
}

pub fn necklaces(max_period: usize, all: bool, places: usize, exec: Exec) -> Result<NecklacesReport> {
    let vals = if all {
        periodic_table(max_period, exec)?
    } else {
        enumerate_periodic_spectrum_with(max_period, exec)?
    };
    Ok(NecklacesReport {
        max_period,
        rows: vals.iter().map(|v| necklace_row(v, places)).collect::<Result<_>>()?,
    })
}

impl Report for NecklacesReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let mark = if r.below_threshold { "≤ 4/√3" } else { "" };
            let _ = writeln!(
                s,
                "({})  L² = {}  L = {}  {mark}",
                r.word,
                r.l_sq.as_deref().unwrap_or("inf"),
                r.l
            );
        }
        s
    }
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["word", "l_sq", "l", "below_threshold"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                vec![
                    r.word.clone(),
                    r.l_sq.clone().unwrap_or_else(|| "inf".into()),
                    r.l.clone(),
                    r.below_threshold.to_string(),
                ]
            })
            .collect()
    }
}
