//! Sweeps over lens spaces and flat-file persistence of the results.
//!
//! Records come out in a fixed order (α ascending, then β ascending) and
//! serialize with a fixed key order, so two sweeps with the same arguments
//! give byte-identical files.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::baker::{classify, GofKnot, KnotParams, LoFamily};
use crate::lens::{normalize, LensSpace};
use crate::verdict::{all_integral_lo, class_of_trace, lo_family_matches, verdicts, AllIntegral, MonodromyClass, SurgeryVerdict};
use crate::{Error, Result};

pub const CSV_HEADER: [&str; 9] = ["alpha", "beta", "label", "p", "q", "braid", "trace", "class", "all_integral_lo"];

/// Inclusive range of surgery slopes; empty when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlopeWindow {
    pub lo: i64,
    pub hi: i64,
}

impl SlopeWindow {
    pub const fn new(lo: i64, hi: i64) -> Self {
        SlopeWindow { lo, hi }
    }

    pub const fn empty() -> Self {
        SlopeWindow { lo: 1, hi: 0 }
    }

    pub fn slopes(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl Default for SlopeWindow {
    fn default() -> Self {
        SlopeWindow::new(-5, 5)
    }
}

impl fmt::Display for SlopeWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for SlopeWindow {
    type Err = Error;

    /// `a..b`, both ends included.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |offset: usize| Error::Parse { offset, message: format!("expected a slope range `a..b`, got `{s}`") };
        let (lo, hi) = s.split_once("..").ok_or_else(|| bad(0))?;
        let lo = lo.trim().parse().map_err(|_| bad(0))?;
        let hi = hi.trim().parse().map_err(|_| bad(s.find("..").unwrap() + 2))?;
        Ok(SlopeWindow { lo, hi })
    }
}

/// A knot together with everything the atlas derives from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasKnot {
    #[serde(flatten)]
    pub knot: GofKnot,
    pub monodromy_class: MonodromyClass,
    pub all_integral_lo: AllIntegral,
    /// Every left-orderable family normal form the monodromy is conjugate to.
    pub lo_families: Vec<LoFamily>,
    pub verdicts: Vec<SurgeryVerdict>,
}

impl AtlasKnot {
    pub fn new(knot: GofKnot, window: SlopeWindow) -> Result<Self> {
        Ok(AtlasKnot {
            monodromy_class: class_of_trace(knot.trace),
            all_integral_lo: all_integral_lo(&knot),
            lo_families: lo_family_matches(&knot.matrix)?,
            verdicts: verdicts(&knot, window.slopes()),
            knot,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRecord {
    pub space: LensSpace,
    pub knots: Vec<AtlasKnot>,
}

impl AtlasRecord {
    pub fn new(space: LensSpace, window: SlopeWindow) -> Result<Self> {
        let knots = classify(&space)?
            .into_iter()
            .map(|k| AtlasKnot::new(k, window))
            .collect::<Result<_>>()?;
        Ok(AtlasRecord { space, knots })
    }
}

/// Canonical lens spaces with the given `alpha`, by ascending `beta`.
pub fn canonical_spaces(alpha: i64) -> Vec<LensSpace> {
    match alpha {
        a if a < 0 => Vec::new(),
        0 => vec![LensSpace::s2_x_s1()],
        1 => vec![LensSpace::s3()],
        _ => (1..alpha)
            .filter(|b| b.gcd(&alpha) == 1)
            .filter_map(|b| normalize(alpha, b).ok().filter(|l| l.beta() == b))
            .collect(),
    }
}

fn records_for_alpha(alpha: i64, window: SlopeWindow) -> Result<Vec<AtlasRecord>> {
    canonical_spaces(alpha).into_iter().map(|s| AtlasRecord::new(s, window)).collect()
}

/// One record per canonical lens space with `0 ≤ α ≤ max_alpha`.
pub fn enumerate(max_alpha: i64, window: SlopeWindow) -> Result<Vec<AtlasRecord>> {
    #[cfg(feature = "parallel")]
    let per_alpha: Vec<Result<Vec<AtlasRecord>>> = {
        use rayon::prelude::*;
        (0..=max_alpha).into_par_iter().map(|a| records_for_alpha(a, window)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let per_alpha: Vec<Result<Vec<AtlasRecord>>> = (0..=max_alpha).map(|a| records_for_alpha(a, window)).collect();

    let mut out = Vec::new();
    for chunk in per_alpha {
        out.extend(chunk?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AtlasStats {
    /// Number of spaces carrying 0, 1, 2 and 3 knots.
    pub counts: BTreeMap<usize, usize>,
    /// Knots all of whose integral surgeries are left-orderable.
    pub lo_knot_count: usize,
    pub spaces: usize,
}

pub fn stats(records: &[AtlasRecord]) -> AtlasStats {
    let mut counts: BTreeMap<usize, usize> = (0..=3).map(|k| (k, 0)).collect();
    let mut lo_knot_count = 0;
    for r in records {
        *counts.entry(r.knots.len()).or_default() += 1;
        lo_knot_count += r.knots.iter().filter(|k| k.all_integral_lo == AllIntegral::AllLo).count();
    }
    AtlasStats { counts, lo_knot_count, spaces: records.len() }
}

/// Output file format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" | "jsonl" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Parse { offset: 0, message: format!("unknown format `{other}`") }),
        }
    }
}

/// JSON Lines: one record per line, `\n` terminated.
pub fn write_jsonl<W: Write>(records: &[AtlasRecord], mut out: W) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n").map_err(|e| Error::Io { path: "<writer>".into(), source: e })?;
    }
    Ok(())
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<AtlasRecord>> {
    let mut records = Vec::new();
    for line in input.lines() {
        let line = line.map_err(|e| Error::Io { path: "<reader>".into(), source: e })?;
        if line.trim().is_empty() {
            continue;
        }
        records.push(serde_json::from_str(&line)?);
    }
    Ok(records)
}

/// One row per knot; spaces without knots get a row with empty knot
/// columns.
pub fn write_csv<W: Write>(records: &[AtlasRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        let (alpha, beta) = (r.space.alpha().to_string(), r.space.beta().to_string());
        if r.knots.is_empty() {
            w.write_record([alpha.as_str(), beta.as_str(), "", "", "", "", "", "", ""])?;
        }
        for k in &r.knots {
            let (p, q) = match k.knot.params {
                KnotParams::PQ { p, q } => (p.to_string(), q.to_string()),
                _ => (String::new(), String::new()),
            };
            w.write_record([
                alpha.clone(),
                beta.clone(),
                k.knot.label.to_string(),
                p,
                q,
                k.knot.braid.to_string(),
                k.knot.trace.to_string(),
                k.monodromy_class.to_string(),
                k.all_integral_lo.to_string(),
            ])?;
        }
    }
    w.flush().map_err(|e| Error::Io { path: "<writer>".into(), source: e })?;
    Ok(())
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|e| Error::Io { path: path.into(), source: e })
}

fn with_path(path: &Path, err: Error) -> Error {
    match err {
        Error::Io { source, .. } => Error::Io { path: path.into(), source },
        Error::Csv(e) if e.is_io_error() => match e.into_kind() {
            csv::ErrorKind::Io(source) => Error::Io { path: path.into(), source },
            _ => unreachable!(),
        },
        other => other,
    }
}

pub fn export(records: &[AtlasRecord], format: Format, path: &Path) -> Result<()> {
    let mut out = create(path)?;
    match format {
        Format::Json => write_jsonl(records, &mut out),
        Format::Csv => write_csv(records, &mut out),
    }
    .map_err(|e| with_path(path, e))?;
    out.flush().map_err(|e| Error::Io { path: path.into(), source: e })
}

pub fn export_json(records: &[AtlasRecord], path: &Path) -> Result<()> {
    export(records, Format::Json, path)
}

pub fn export_csv(records: &[AtlasRecord], path: &Path) -> Result<()> {
    export(records, Format::Csv, path)
}

pub fn import_json(path: &Path) -> Result<Vec<AtlasRecord>> {
    let file = File::open(path).map_err(|e| Error::Io { path: path.into(), source: e })?;
    read_jsonl(BufReader::new(file)).map_err(|e| with_path(path, e))
}
