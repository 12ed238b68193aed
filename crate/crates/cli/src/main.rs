use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use gof_core::atlas::{self, AtlasKnot, Format, SlopeWindow};
use gof_core::baker::{self, GofKnot, Label};
use gof_core::braid3::BraidWord;
use gof_core::lens::normalize;
use gof_core::mat2::{conjugate, Group, Matrix2};
use gof_core::verdict::{self, monodromy_class};
use serde_json::json;

/// Genus one fibered knots in lens spaces: monodromies, classification and
/// left-orderability of integral surgeries.
#[derive(Parser)]
#[command(name = "gof", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monodromy of the closure of a 3-braid, e.g. "s1^4 s2^-1".
    Monodromy { braid: BraidWord },
    /// All GOF-knots in L(alpha, beta).
    #[command(allow_negative_numbers = true)]
    Classify { alpha: i64, beta: i64 },
    /// Left-orderability of integral surgeries on one knot of L(alpha, beta).
    #[command(allow_negative_numbers = true)]
    Verdict {
        alpha: i64,
        beta: i64,
        /// Knot label: A1, A2, A3, B1, B2, C, D1 or D2.
        #[arg(long)]
        knot: Label,
        /// A single surgery slope.
        #[arg(long, conflicts_with = "all")]
        slope: Option<i64>,
        /// Summary over all integral slopes plus a table for --slopes (the default).
        #[arg(long)]
        all: bool,
        /// Inclusive slope window for the table.
        #[arg(long, default_value = "-5..5", allow_hyphen_values = true)]
        slopes: SlopeWindow,
    },
    /// Decide whether two matrices of determinant 1 are conjugate.
    #[command(allow_negative_numbers = true)]
    Conjugate {
        a: Matrix2,
        b: Matrix2,
        /// sl2 or gl2.
        #[arg(long, default_value = "gl2")]
        group: Group,
    },
    /// The monodromy table for every knot type.
    Table1,
    /// Sweep every lens space with alpha <= N.
    Atlas {
        #[arg(long)]
        max_alpha: i64,
        #[arg(long, default_value = "-5..5", allow_hyphen_values = true)]
        slopes: SlopeWindow,
        /// Output path, `-` for standard output.
        #[arg(long)]
        out: PathBuf,
        /// json (JSON Lines) or csv.
        #[arg(long, default_value = "json")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn group_name(group: Group) -> &'static str {
    match group {
        Group::Sl2 => "sl2",
        Group::Gl2 => "gl2",
    }
}

fn knot_line(k: &GofKnot) -> String {
    format!("{} {} trace={} braid=\"{}\"", k.name(), k.matrix, k.trace, k.braid)
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Monodromy { braid } => {
            let m = braid.monodromy()?;
            let trace = m.trace()?;
            if cli.json {
                let class = monodromy_class(&m)?;
                let value = json!({ "braid": braid, "matrix": m, "trace": trace, "class": class });
                writeln!(out, "{value}")?;
            } else {
                writeln!(out, "{m} trace={trace}")?;
            }
        }
        Command::Classify { alpha, beta } => {
            let space = normalize(alpha, beta)?;
            let knots = baker::classify(&space)?;
            if cli.json {
                writeln!(out, "{}", json!({ "space": space, "knots": knots }))?;
            } else if knots.is_empty() {
                writeln!(out, "no GOF-knots in {space}")?;
            } else {
                for k in &knots {
                    writeln!(out, "{}", knot_line(k))?;
                }
            }
        }
        Command::Verdict { alpha, beta, knot, slope, all: _, slopes } => {
            let space = normalize(alpha, beta)?;
            let Some(k) = baker::classify(&space)?.into_iter().find(|k| k.label == knot) else {
                bail!("{space} has no GOF-knot of type {knot}");
            };
            if let Some(n) = slope {
                let v = verdict::surgery_verdict(&k, n);
                if cli.json {
                    writeln!(out, "{}", serde_json::to_string(&v)?)?;
                } else {
                    writeln!(out, "{v}")?;
                }
                return Ok(());
            }
            let record = AtlasKnot::new(k, slopes)?;
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
                return Ok(());
            }
            writeln!(out, "{} in {space}", knot_line(&record.knot))?;
            writeln!(out, "monodromy: {}", record.monodromy_class)?;
            writeln!(out, "all integral surgeries: {}", record.all_integral_lo)?;
            for family in &record.lo_families {
                writeln!(out, "conjugate to {family}")?;
            }
            for v in &record.verdicts {
                writeln!(out, "{:>4}  {v}", v.slope)?;
            }
        }
        Command::Conjugate { a, b, group } => {
            let answer = conjugate(group, &a, &b)?;
            if cli.json {
                writeln!(out, "{}", json!({ "a": a, "b": b, "group": group_name(group), "conjugate": answer }))?;
            } else {
                let name = match group {
                    Group::Sl2 => "SL(2,Z)",
                    Group::Gl2 => "GL(2,Z)",
                };
                let verb = if answer { "conjugate" } else { "not conjugate" };
                writeln!(out, "{verb} in {name}")?;
            }
        }
        Command::Table1 => {
            let rows = baker::table1()?;
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&rows)?)?;
            } else {
                let width = |f: fn(&baker::Table1Row) -> usize| rows.iter().map(f).max().unwrap_or(0);
                let wb = width(|r| r.braid_template.len()).max("braid".len());
                let wm = width(|r| r.matrix_formula.len()).max("matrix".len());
                let wt = width(|r| r.trace_formula.len()).max("trace".len());
                writeln!(out, "{:<5} {:<wb$} {:<wm$} {:<wt$} sample", "label", "braid", "matrix", "trace")?;
                for r in &rows {
                    writeln!(
                        out,
                        "{:<5} {:<wb$} {:<wm$} {:<wt$} {} {} trace={}",
                        r.label.to_string(),
                        r.braid_template,
                        r.matrix_formula,
                        r.trace_formula,
                        r.sample.name(),
                        r.sample.matrix,
                        r.sample.trace
                    )?;
                }
            }
        }
        Command::Atlas { max_alpha, slopes, out: path, format } => {
            let records = atlas::enumerate(max_alpha, slopes)?;
            if path.as_os_str() == "-" {
                match format {
                    Format::Json => atlas::write_jsonl(&records, &mut out)?,
                    Format::Csv => atlas::write_csv(&records, &mut out)?,
                }
                return Ok(());
            }
            atlas::export(&records, format, &path)?;
            let stats = atlas::stats(&records);
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&stats)?)?;
            } else {
                writeln!(out, "wrote {} spaces to {}", stats.spaces, path.display())?;
                for (count, spaces) in &stats.counts {
                    writeln!(out, "spaces with {count} knots: {spaces}")?;
                }
                writeln!(out, "knots with all integral surgeries left-orderable: {}", stats.lo_knot_count)?;
            }
        }
    }
    out.flush().context("writing to standard output")?;
    Ok(())
}
