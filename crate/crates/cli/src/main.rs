//! `csp-lab`: reproducible experiments on promotion orbits and cyclic
//! sieving. One subcommand per family, plus `repro` for the whole table
//! suite.
//!
//! Exit codes: 0 on success or a passing sieving verdict, 1 when a verdict
//! fails, 2 for usage errors (bad parameters, budgets, unreadable files).

use clap::{Parser, Subcommand, ValueEnum};
use csp_lab_core::crystal::{builtin, render_word, Builtin, CrystalGraph};
use csp_lab_core::csp::{verify_csp, Verdict};
use csp_lab_core::liechar::{frobenius_invariants, CartanType, InvariantsCharacter, RootSystem};
use csp_lab_core::qpoly::IntPolynomial;
use csp_lab_core::repro;
use csp_lab_core::symfunc::{fake_degree, partitions_of, Partition};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "csp-lab",
    version,
    about = "Promotion orbits, fake degrees and cyclic sieving",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Rotation of Temperley-Lieb diagrams against the two-column fake degree.
    Tl {
        #[arg(long)]
        r: usize,
    },
    /// Promotion on words of the (k+1)-dimensional rank-one crystal.
    Sl2 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Promotion on rectangular tableaux via the defining crystal of sl(n).
    #[command(name = "typeA")]
    TypeA {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Promotion on invariant words of the seven-dimensional crystal.
    G2 {
        #[arg(long)]
        r: usize,
    },
    /// Promotion on invariant words of the spin crystal of so(7).
    Spin {
        #[arg(long)]
        r: usize,
    },
    /// Rotation of perfect matchings against the doubled-shape fake degrees.
    Matchings {
        #[arg(long)]
        r: usize,
    },
    /// Conjugation of derangements against the adjoint fake degree.
    Derangements {
        #[arg(long)]
        r: usize,
    },
    /// Fake-degree polynomial of a partition, as a coefficient array.
    Fakedeg {
        /// Comma-separated partition, e.g. 2,2
        #[arg(long)]
        shape: String,
    },
    /// Load, validate and exercise a crystal file.
    Crystal {
        #[arg(long)]
        file: PathBuf,
        /// Enumerate invariant words of this length and report orbits.
        #[arg(long)]
        r: Option<usize>,
        /// Promote one invariant word, given comma-separated.
        #[arg(long)]
        word: Option<String>,
    },
    /// Run the reproduction suite; one PASS/FAIL line per table.
    Repro {
        /// Restrict to rows whose key matches.
        #[arg(long)]
        only: Option<String>,
    },
}

fn budget() -> u64 {
    std::env::var("CSP_LAB_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(csp_lab_core::DEFAULT_BUDGET)
}

/// Report assembled by every subcommand: ordered key-value lines plus the
/// full JSON document. Reports carry no timing, so identical runs produce
/// identical bytes.
struct Report {
    items: Vec<(String, String)>,
    json: serde_json::Value,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            items: vec![("command".into(), command.into())],
            json: serde_json::json!({ "command": command }),
        }
    }

    fn push(&mut self, key: &str, value: impl std::fmt::Display) {
        self.items.push((key.into(), value.to_string()));
    }

    fn attach(&mut self, key: &str, value: serde_json::Value) {
        self.json[key] = value;
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = String::new();
                for (k, v) in &self.items {
                    if k == "raw" {
                        let _ = writeln!(out, "{v}");
                    } else {
                        let _ = writeln!(out, "{k}: {v}");
                    }
                }
                out
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut out = String::new();
                for (k, v) in &self.items {
                    let _ = writeln!(out, "{},{}", csv_escape(k), csv_escape(v));
                }
                out
            }
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

enum CmdError {
    Usage(String),
}

impl CmdError {
    fn usage(msg: impl Into<String>) -> Self {
        CmdError::Usage(msg.into())
    }
}

fn poly_cells(p: &IntPolynomial) -> Result<serde_json::Value, CmdError> {
    p.to_json()
        .map_err(|e| CmdError::usage(format!("polynomial too large for a report: {e}")))
}

fn orbit_summary(counts: &BTreeMap<usize, usize>) -> String {
    if counts.is_empty() {
        return "none".to_string();
    }
    counts
        .iter()
        .rev()
        .map(|(size, count)| format!("{count} x size {size}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn verdict_report(report: &mut Report, verdict: &Verdict) -> Result<(), CmdError> {
    report.push("elements", verdict.set_size);
    report.push("cyclic order", verdict.order);
    report.push("orbits", orbit_summary(verdict.report.counts()));
    report.push("polynomial", &verdict.polynomial);
    report.push(
        &format!("reduced mod q^{}-1", verdict.order),
        &verdict.reduced,
    );
    report.push("csp", if verdict.pass { "PASS" } else { "FAIL" });
    if let Some((e, got, want)) = &verdict.mismatch {
        report.push(
            "mismatch",
            format!("coefficient of q^{e}: reduced {got}, orbits {want}"),
        );
    }
    report.attach("verdict", verdict.to_json());
    report.attach("polynomial", poly_cells(&verdict.polynomial)?);
    report.attach("reduced", poly_cells(&verdict.reduced)?);
    Ok(())
}

fn crystal_csp_report(
    command: &str,
    crystal: &CrystalGraph,
    inv: &InvariantsCharacter,
    r: usize,
) -> Result<(Report, bool), CmdError> {
    let mut report = Report::new(command);
    report.push("crystal", crystal.name());
    report.push("tensor power", r);
    let p = inv.fake_degree();
    let action = crystal
        .promotion_action(r, budget())
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let verdict = verify_csp(&action, &p).map_err(|e| CmdError::usage(e.to_string()))?;
    report.push(
        "schur multiplicities",
        inv.schur
            .iter()
            .map(|(part, m)| format!("{part}:{m}"))
            .collect::<Vec<_>>()
            .join(" "),
    );
    report.push(
        "twist",
        if inv.parity_even() {
            "none (even pairing)"
        } else {
            "conjugate shapes (odd pairing)"
        },
    );
    verdict_report(&mut report, &verdict)?;
    report.attach("invariants_character", inv.to_json());
    Ok((report, verdict.pass))
}

fn parse_partition(text: &str) -> Result<Partition, CmdError> {
    let parts: Result<Vec<usize>, _> = text
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>())
        .collect();
    let parts = parts.map_err(|_| CmdError::usage(format!("cannot parse partition '{text}'")))?;
    Partition::new(parts).map_err(|e| CmdError::usage(format!("invalid partition '{text}': {e}")))
}

fn parse_word(text: &str) -> Result<Vec<usize>, CmdError> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CmdError::usage(format!("cannot parse word '{text}'")))
        })
        .collect()
}

fn run_tl(r: usize) -> Result<(Report, bool), CmdError> {
    if r == 0 || r > 8 {
        return Err(CmdError::usage(format!(
            "tl supports 1 <= r <= 8, got {r}; the diagram basis grows as the Catalan numbers"
        )));
    }
    let mut report = Report::new("tl");
    report.push("boundary points", 2 * r);
    let shape = Partition::new(vec![2; r]).expect("column of twos");
    let p = fake_degree(&shape);
    let action = repro::tl_rotation_action(r).map_err(CmdError::usage)?;
    let verdict = verify_csp(&action, &p).map_err(|e| CmdError::usage(e.to_string()))?;
    verdict_report(&mut report, &verdict)?;
    Ok((report, verdict.pass))
}

fn run_sl2(k: usize, r: usize) -> Result<(Report, bool), CmdError> {
    let crystal = builtin(Builtin::Sl2(k)).map_err(|e| CmdError::usage(e.to_string()))?;
    if r == 0 || r > 12 {
        return Err(CmdError::usage(format!(
            "sl2 supports 1 <= r <= 12, got {r}"
        )));
    }
    let rs = RootSystem::new(CartanType::A(1)).map_err(|e| CmdError::usage(e.to_string()))?;
    let inv = frobenius_invariants(&rs, &vec![k as i64, 0], r)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    crystal_csp_report("sl2", &crystal, &inv, r)
}

fn run_type_a(n: usize, k: usize) -> Result<(Report, bool), CmdError> {
    let crystal = builtin(Builtin::TypeAVector(n)).map_err(|e| CmdError::usage(e.to_string()))?;
    if k == 0 || n * k > 12 {
        return Err(CmdError::usage(format!(
            "typeA supports k >= 1 with n*k <= 12, got n={n} k={k}"
        )));
    }
    let rs = RootSystem::new(CartanType::A(n - 1)).map_err(|e| CmdError::usage(e.to_string()))?;
    let w = rs
        .fundamental_weight(1)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let inv = frobenius_invariants(&rs, &w, n * k).map_err(|e| CmdError::usage(e.to_string()))?;
    crystal_csp_report("typeA", &crystal, &inv, n * k)
}

fn run_g2(r: usize) -> Result<(Report, bool), CmdError> {
    if r == 0 || r > 7 {
        return Err(CmdError::usage(format!("g2 supports 1 <= r <= 7, got {r}")));
    }
    let crystal = builtin(Builtin::G2Fund7).map_err(|e| CmdError::usage(e.to_string()))?;
    let rs = RootSystem::new(CartanType::G2).map_err(|e| CmdError::usage(e.to_string()))?;
    let w = rs
        .fundamental_weight(1)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let inv = frobenius_invariants(&rs, &w, r).map_err(|e| CmdError::usage(e.to_string()))?;
    crystal_csp_report("g2", &crystal, &inv, r)
}

fn run_spin(r: usize) -> Result<(Report, bool), CmdError> {
    if r == 0 || r > 6 {
        return Err(CmdError::usage(format!(
            "spin supports 1 <= r <= 6, got {r}"
        )));
    }
    let crystal = builtin(Builtin::B3Spin).map_err(|e| CmdError::usage(e.to_string()))?;
    let rs = RootSystem::new(CartanType::B3).map_err(|e| CmdError::usage(e.to_string()))?;
    let w = rs
        .fundamental_weight(3)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let inv = frobenius_invariants(&rs, &w, r).map_err(|e| CmdError::usage(e.to_string()))?;
    crystal_csp_report("spin", &crystal, &inv, r)
}

fn run_matchings(r: usize) -> Result<(Report, bool), CmdError> {
    if r == 0 || r > 6 {
        return Err(CmdError::usage(format!(
            "matchings supports 1 <= r <= 6, got {r}: the budget is (2r-1)!! elements"
        )));
    }
    let mut report = Report::new("matchings");
    report.push("points", 2 * r);
    let mut p = IntPolynomial::zero();
    for mu in partitions_of(r) {
        p = p.add(&fake_degree(&mu.doubled()));
    }
    let action = repro::matchings_rotation_action(r).map_err(CmdError::usage)?;
    let verdict = verify_csp(&action, &p).map_err(|e| CmdError::usage(e.to_string()))?;
    verdict_report(&mut report, &verdict)?;
    Ok((report, verdict.pass))
}

fn run_derangements(r: usize) -> Result<(Report, bool), CmdError> {
    if r < 2 || r > 6 {
        return Err(CmdError::usage(format!(
            "derangements supports 2 <= r <= 6, got {r}"
        )));
    }
    let mut report = Report::new("derangements");
    report.push("letters", r);
    let rs = RootSystem::new(CartanType::A(r - 1)).map_err(|e| CmdError::usage(e.to_string()))?;
    let inv = frobenius_invariants(&rs, &rs.adjoint_weight(), r)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let p = inv.fake_degree();
    let action = repro::derangements_conjugation_action(r).map_err(CmdError::usage)?;
    let verdict = verify_csp(&action, &p).map_err(|e| CmdError::usage(e.to_string()))?;
    report.push(
        "schur multiplicities",
        inv.schur
            .iter()
            .map(|(part, m)| format!("{part}:{m}"))
            .collect::<Vec<_>>()
            .join(" "),
    );
    verdict_report(&mut report, &verdict)?;
    report.attach("invariants_character", inv.to_json());
    Ok((report, verdict.pass))
}

fn run_fakedeg(shape: &str) -> Result<(Report, bool), CmdError> {
    let lambda = parse_partition(shape)?;
    let p = fake_degree(&lambda);
    let coeffs = p
        .to_i64_coeffs()
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let mut report = Report::new("fakedeg");
    let rendered = format!(
        "[{}]",
        coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    report.items.clear();
    report.items.push(("raw".into(), rendered));
    report.attach("shape", serde_json::json!(lambda.parts()));
    report.attach("fake_degree", serde_json::json!(coeffs));
    Ok((report, true))
}

fn run_crystal(
    file: &PathBuf,
    r: Option<usize>,
    word: Option<&str>,
) -> Result<(Report, bool), CmdError> {
    let text = std::fs::read_to_string(file).map_err(|e| {
        CmdError::usage(format!("cannot read crystal file {}: {e}", file.display()))
    })?;
    let crystal =
        CrystalGraph::load(&text).map_err(|e| CmdError::usage(format!("invalid crystal: {e}")))?;
    let mut report = Report::new("crystal");
    report.push("name", crystal.name());
    report.push("vertices", crystal.vertex_count());
    report.push("labels", crystal.rank());
    report.push("source", crystal.source());
    report.push("sink", crystal.sink());
    report.attach(
        "crystal",
        serde_json::json!({
            "name": crystal.name(),
            "vertices": crystal.vertex_count(),
            "labels": crystal.rank(),
            "source": crystal.source(),
            "sink": crystal.sink(),
        }),
    );
    if let Some(word) = word {
        let w = parse_word(word)?;
        let image = crystal
            .promote(&w)
            .map_err(|e| CmdError::usage(format!("promotion failed: {e}")))?;
        report.push("word", render_word(&w));
        report.push("promoted", render_word(&image));
        report.attach("word", serde_json::json!(w));
        report.attach("promoted", serde_json::json!(image));
    }
    if let Some(r) = r {
        if r == 0 {
            return Err(CmdError::usage("crystal --r must be at least 1"));
        }
        let words = crystal
            .enumerate_invariants(r, budget())
            .map_err(|e| CmdError::usage(e.to_string()))?;
        report.push("invariant words", words.len());
        let json_words: Vec<serde_json::Value> =
            words.iter().map(|w| serde_json::json!(w)).collect();
        report.attach("invariant_words", serde_json::Value::Array(json_words));
        if !words.is_empty() {
            let orbits = crystal
                .promotion_orbits(r, budget())
                .map_err(|e| CmdError::usage(e.to_string()))?;
            report.push("orbits", orbit_summary(orbits.counts()));
            report.attach("orbits", orbits.to_json());
        }
    }
    Ok((report, true))
}

fn run_repro(only: Option<&str>) -> Result<(Report, bool), CmdError> {
    let rows = repro::run_rows(only, budget());
    if rows.is_empty() {
        return Err(CmdError::usage(format!(
            "no reproduction rows match '{}'; available: {}",
            only.unwrap_or(""),
            repro::row_keys().join(", ")
        )));
    }
    let mut report = Report::new("repro");
    report.items.clear();
    let mut all_pass = true;
    let mut json_rows = Vec::new();
    for row in &rows {
        all_pass &= row.pass;
        report.items.push(("raw".into(), row.status_line_untimed()));
        for f in &row.failures {
            report.items.push(("raw".into(), format!("      {f}")));
        }
        json_rows.push(serde_json::json!({
            "key": row.key,
            "title": row.title,
            "pass": row.pass,
            "details": row.details,
            "failures": row.failures,
        }));
    }
    report.items.push((
        "raw".into(),
        format!(
            "{} of {} rows pass",
            rows.iter().filter(|r| r.pass).count(),
            rows.len()
        ),
    ));
    report.attach("rows", serde_json::Value::Array(json_rows));
    report.attach("pass", serde_json::json!(all_pass));
    Ok((report, all_pass))
}

fn dispatch(cmd: &Cmd) -> Result<(Report, bool), CmdError> {
    match cmd {
        Cmd::Tl { r } => run_tl(*r),
        Cmd::Sl2 { k, r } => run_sl2(*k, *r),
        Cmd::TypeA { n, k } => run_type_a(*n, *k),
        Cmd::G2 { r } => run_g2(*r),
        Cmd::Spin { r } => run_spin(*r),
        Cmd::Matchings { r } => run_matchings(*r),
        Cmd::Derangements { r } => run_derangements(*r),
        Cmd::Fakedeg { shape } => run_fakedeg(shape),
        Cmd::Crystal { file, r, word } => run_crystal(file, *r, word.as_deref()),
        Cmd::Repro { only } => run_repro(only.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.cmd) {
        Ok((report, pass)) => {
            let rendered = report.render(cli.format);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, rendered) {
                    eprintln!("csp-lab: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{rendered}");
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("csp-lab: {msg}");
            ExitCode::from(2)
        }
    }
}
