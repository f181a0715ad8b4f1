//! Command-line front end. [`run`] returns the rendered output and exit code
//! so the whole surface is testable without a process boundary.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::code::{classify, codeword_count, hull_dimension, minimum_distance, LinearCode, DEFAULT_MAX_ENUM};
use crate::congruence::canonize;
use crate::embedding::{append_manual, embed, shortest_length, verify_embedding, EmbeddingResult};
use crate::error::{Error, Result};
use crate::fixtures::{self, FixtureReport, FIXTURE_NAMES};
use crate::io::{format_matrix, read_code, read_matrix};
use crate::matrix::InnerKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Inner {
    Euclidean,
    Hermitian,
}

impl From<Inner> for InnerKind {
    fn from(i: Inner) -> InnerKind {
        match i {
            Inner::Euclidean => InnerKind::Euclidean,
            Inner::Hermitian => InnerKind::Hermitian,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hullkit", version, about = "Hull dimensions and shortest hull embeddings of linear codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameters, hull dimensions and type of a code
    Info {
        file: PathBuf,
        /// Largest number of codewords to enumerate for the distance
        #[arg(long, default_value_t = DEFAULT_MAX_ENUM)]
        max_enum: u64,
    },
    /// Congruence canonical form of a symmetric or Hermitian matrix
    Canon {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Inner::Euclidean)]
        kind: Inner,
    },
    /// Shortest embedding with a t-dimensional hull
    Embed {
        file: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Inner::Euclidean)]
        inner: Inner,
        /// Use the columns of this matrix file instead of the computed block
        #[arg(long)]
        append: Option<PathBuf>,
        /// Write the extended generator here
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_ENUM)]
        max_enum: u64,
    },
    /// Shortest embeddings for every t from 0 to k
    Sweep {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Inner::Euclidean)]
        inner: Inner,
        #[arg(long)]
        tsv: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ENUM)]
        max_enum: u64,
    },
    /// Embed and run every invariant check
    Verify {
        file: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Inner::Euclidean)]
        inner: Inner,
    },
    /// Re-run a bundled table (table1..table6, or `all`)
    Reproduce {
        name: String,
        #[arg(long)]
        tsv: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ENUM)]
        max_enum: u64,
    },
}

/// Rendered result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Plain-text table, aligned or tab-separated.
struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Table {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn render(&self, tsv: bool) -> String {
        let mut out = String::new();
        let all = std::iter::once(&self.header).chain(&self.rows);
        if tsv {
            for row in all {
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
            return out;
        }
        let mut widths = vec![0; self.header.len()];
        for row in std::iter::once(&self.header).chain(&self.rows) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        for row in all {
            let mut line = String::new();
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                line.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count()));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

fn distance_text(code: &LinearCode, max_enum: u64) -> Result<String> {
    match minimum_distance(code, max_enum) {
        Ok(d) => Ok(d.to_string()),
        Err(Error::TooLargeToEnumerate { .. }) => Ok("skipped".into()),
        Err(e) => Err(e),
    }
}

fn cmd_info(file: &Path, max_enum: u64) -> Result<Outcome> {
    let code = read_code(file)?;
    let f = code.field();
    let mut out = String::new();
    writeln!(out, "{}", f.header()).ok();
    writeln!(out, "n: {}", code.n()).ok();
    writeln!(out, "k: {}", code.k()).ok();
    match distance_text(&code, max_enum)?.as_str() {
        "skipped" => writeln!(out, "distance: skipped ({} nonzero codewords > {max_enum})", codeword_count(&code)),
        d => writeln!(out, "distance: {d}"),
    }
    .ok();
    writeln!(out, "hull euclidean: {}", hull_dimension(&code, InnerKind::Euclidean)?).ok();
    if f.is_hermitian() {
        writeln!(out, "hull hermitian: {}", hull_dimension(&code, InnerKind::Hermitian)?).ok();
    }
    writeln!(out, "type: {}", classify(&code)?.tag).ok();
    Ok(Outcome { stdout: out, ..Outcome::default() })
}

fn cmd_canon(file: &Path, kind: InnerKind) -> Result<Outcome> {
    let a = read_matrix(file)?;
    let w = canonize(&a, kind)?;
    let ok = w.verify(&a);
    let mut out = format!("kind: {kind}\nform: {}\nwitness P:\n", w.form);
    for r in 0..w.p.rows() {
        let row: Vec<String> = w.p.row(r).iter().map(|e| e.to_string()).collect();
        writeln!(out, "  {}", row.join(" ")).ok();
    }
    writeln!(out, "check P*Canon*P^* = A: {}", if ok { "pass" } else { "FAIL" }).ok();
    Ok(Outcome { stdout: out, code: if ok { 0 } else { 1 }, ..Outcome::default() })
}

fn verdict_lines(out: &mut String, original: &LinearCode, result: &EmbeddingResult) -> Result<bool> {
    let report = verify_embedding(original, result)?;
    for c in &report.checks {
        writeln!(out, "  {:<18} {}  {}", c.name, if c.passed { "pass" } else { "FAIL" }, c.detail).ok();
    }
    Ok(report.passed())
}

fn cmd_embed(
    file: &Path,
    t: usize,
    kind: InnerKind,
    append: Option<&Path>,
    out_path: Option<&Path>,
    max_enum: u64,
) -> Result<Outcome> {
    let code = read_code(file)?;
    let result = match append {
        Some(path) => append_manual(&code, &read_matrix(path)?, t, kind)?,
        None => embed(&code, t, kind)?,
    };
    let ext = &result.code;
    let mut out = String::new();
    writeln!(out, "inner: {kind}").ok();
    writeln!(out, "original: [{}, {}], hull {}", code.n(), code.k(), hull_dimension(&code, kind)?).ok();
    writeln!(
        out,
        "embedded: [{}, {}, {}], hull {}, s = {}",
        ext.n(),
        ext.k(),
        distance_text(ext, max_enum)?,
        hull_dimension(ext, kind)?,
        result.s
    )
    .ok();
    writeln!(out, "checks:").ok();
    let ok = verdict_lines(&mut out, &code, &result)?;
    let text = format_matrix(ext.generator());
    match out_path {
        Some(p) => std::fs::write(p, &text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
        None => {
            out.push_str("generator:\n");
            out.push_str(&text);
        }
    }
    Ok(Outcome { stdout: out, code: if ok { 0 } else { 1 }, ..Outcome::default() })
}

fn cmd_sweep(file: &Path, kind: InnerKind, tsv: bool, max_enum: u64) -> Result<Outcome> {
    let code = read_code(file)?;
    kind.check(code.field())?;
    let hull = hull_dimension(&code, kind)?;
    let (n, k) = (code.n(), code.k());
    let mut table = Table::new(&["t", "length", "s", "[n,k,d]", "note"]);
    let mut ok = true;
    for t in 0..=k {
        let result = embed(&code, t, kind)?;
        let report = verify_embedding(&code, &result)?;
        ok &= report.passed();
        let mut notes = Vec::new();
        if t == hull {
            notes.push("original".to_string());
        }
        if t == 0 {
            notes.push("LCD".into());
        }
        if t == k {
            notes.push(if kind == InnerKind::Hermitian { "HSO" } else { "ESO" }.into());
        }
        if !report.passed() {
            notes.push("FAIL".into());
        }
        let length = n + result.s;
        table.push(vec![
            t.to_string(),
            if t == hull { format!("({length})") } else { length.to_string() },
            result.s.to_string(),
            format!("[{},{},{}]", length, k, distance_text(&result.code, max_enum)?),
            notes.join(" "),
        ]);
    }
    let mut out = String::new();
    if !tsv {
        writeln!(out, "[{n}, {k}] code, {kind} hull dimension {hull}").ok();
    }
    out.push_str(&table.render(tsv));
    Ok(Outcome { stdout: out, code: if ok { 0 } else { 1 }, ..Outcome::default() })
}

fn cmd_verify(file: &Path, t: usize, kind: InnerKind) -> Result<Outcome> {
    let code = read_code(file)?;
    let result = embed(&code, t, kind)?;
    let verdict = shortest_length(&code, t, kind)?;
    let mut out = format!("inner: {kind}\nt: {t}\ns: {} ({})\nchecks:\n", verdict.s, verdict.rule);
    let ok = verdict_lines(&mut out, &code, &result)?;
    writeln!(out, "result: {}", if ok { "pass" } else { "FAIL" }).ok();
    Ok(Outcome { stdout: out, code: if ok { 0 } else { 1 }, ..Outcome::default() })
}

fn report_table(report: &FixtureReport, tsv: bool) -> String {
    let mut table = Table::new(&["t", "columns", "published", "computed", "hull", "result"]);
    for r in &report.rows {
        let [n, k, d] = r.expect;
        table.push(vec![
            r.t.to_string(),
            r.labels.join(","),
            format!("[{n},{k},{d}]"),
            match r.got {
                Some([n, k, d]) => format!("[{n},{k},{d}]"),
                None => "rejected".into(),
            },
            r.hull.map_or("-".into(), |h| h.to_string()),
            if r.passed() { "pass" } else { "FAIL" }.into(),
        ]);
    }
    table.render(tsv)
}

fn cmd_reproduce(name: &str, tsv: bool, max_enum: u64) -> Result<Outcome> {
    let names: Vec<&str> = if name == "all" { FIXTURE_NAMES.to_vec() } else { vec![name] };
    let mut outcome = Outcome::default();
    for name in names {
        let fixture = fixtures::load(name)?;
        let report = fixtures::run_fixture(&fixture, max_enum)?;
        let out = &mut outcome.stdout;
        if !tsv {
            writeln!(out, "{}: {}", report.name, report.title).ok();
            writeln!(out, "hull: published {}, computed {}", report.hull.0, report.hull.1).ok();
            if let Some((want, got)) = &report.code_type {
                writeln!(out, "type: published {want}, computed {got}").ok();
            }
            let cong = if report.congruence_holds { "pass" } else { "FAIL" };
            writeln!(out, "witness congruence: {cong}").ok();
        }
        out.push_str(&report_table(&report, tsv));
        match report.first_mismatch() {
            Some(m) => {
                writeln!(outcome.stderr, "error: {}", Error::FixtureMismatch(m)).ok();
                outcome.code = 1;
                if !tsv {
                    writeln!(outcome.stdout, "{name}: FAIL\n").ok();
                }
            }
            None if !tsv => {
                writeln!(outcome.stdout, "{name}: pass\n").ok();
            }
            None => {}
        }
    }
    Ok(outcome)
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Info { file, max_enum } => cmd_info(file, *max_enum),
        Command::Canon { file, kind } => cmd_canon(file, (*kind).into()),
        Command::Embed { file, t, inner, append, out, max_enum } => {
            cmd_embed(file, *t, (*inner).into(), append.as_deref(), out.as_deref(), *max_enum)
        }
        Command::Sweep { file, inner, tsv, max_enum } => cmd_sweep(file, (*inner).into(), *tsv, *max_enum),
        Command::Verify { file, t, inner } => cmd_verify(file, *t, (*inner).into()),
        Command::Reproduce { name, tsv, max_enum } => cmd_reproduce(name, *tsv, *max_enum),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stderr: text, code: 2, ..Outcome::default() }
            } else {
                Outcome { stdout: text, ..Outcome::default() }
            };
        }
    };
    execute(&cli).unwrap_or_else(|e| Outcome { stderr: format!("error: {e}\n"), code: 2, ..Outcome::default() })
}
