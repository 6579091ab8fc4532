//! Command-line front end.
//!
//! Exit codes: 0 when every executed verdict passes, 1 on a verification
//! discrepancy, 2 on a usage or input error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::classify::table1::{enumerate_table1, filter_table1, survivors, CaseRecord, Verdict};
use crate::classify::{run_verifier, VerdictReport, VERIFIER_IDS};
use crate::tripleplane::{branch_invariants, cusp_bounds, decomposable_invariants, CuspBounds, TriplePlaneData};

/// Version of the JSON report layout, bumped on any incompatible change.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Md,
}

#[derive(Debug, Parser)]
#[command(name = "triscroll", version, about = "Exact verification of the numerical classification of triple solids that are scrolls")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text", env = "TRISCROLL_FORMAT")]
    pub format: Format,

    /// Search window for the Reider obstruction search.
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(i64).range(1..))]
    pub window: i64,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The twelve (s, b, c) cases for scrolls over P2, with filter annotations.
    Table1,
    /// Run one verifier by id, or `all`.
    Verify { id: String },
    /// Triple-plane invariants from (b1, b2), (b, c) or a split Tschirnhaus bundle (m, n).
    Invariants {
        #[arg(long, allow_hyphen_values = true)]
        b1: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        b2: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Cusp-count bounds for branch degree b and s = c2(E).
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        /// Also apply the bound for rational surfaces whose minimal reduction is not P2.
        #[arg(long)]
        rational_non_p2: bool,
    },
    /// Table 1 and every verifier in one document.
    Report,
}

/// What a command produced: the rendered document and whether every verdict passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    match &cli.command {
        Command::Table1 => Ok(render_table1(cli.format)),
        Command::Verify { id } => {
            let reports = if id == "all" {
                VERIFIER_IDS.iter().map(|id| run_verifier(id, cli.window).expect("registered id")).collect()
            } else {
                match run_verifier(id, cli.window) {
                    Some(r) => vec![r],
                    None => {
                        return Err(UsageError(format!(
                            "unknown verifier id `{id}`; valid ids: all, {}",
                            VERIFIER_IDS.join(", ")
                        )))
                    }
                }
            };
            Ok(render_reports(&reports, cli.format))
        }
        Command::Invariants { b1, b2, b, c, m, n } => {
            let data = match (b1, b2, b, c, m, n) {
                (Some(b1), Some(b2), None, None, None, None) => TriplePlaneData::from_tschirnhaus(*b1, *b2),
                (None, None, Some(b), Some(c), None, None) => branch_invariants(*b, *c),
                (None, None, None, None, Some(m), Some(n)) => decomposable_invariants(*m, *n),
                _ => return Err(UsageError("give exactly one of --b1/--b2, --b/--c, --m/--n".into())),
            }
            .map_err(|e| UsageError(e.to_string()))?;
            Ok(Outcome { body: render_record("invariants", &data, cli.format), pass: true })
        }
        Command::Bounds { b, s, rational_non_p2 } => {
            let bounds = cusp_bounds(*b, *s, *rational_non_p2);
            Ok(Outcome { body: render_bounds(&bounds, cli.format), pass: true })
        }
        Command::Report => Ok(render_full(cli.window, cli.format)),
    }
}

/// Parses `args`, runs, writes the output, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{}", outcome.body);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    if outcome.pass {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    }
}

/// Pretty JSON with sorted keys and a trailing newline. Going through
/// `serde_json::Value` sorts every object, so parsing and re-emitting is byte-identical.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

fn verdict_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Exempt => "exempt",
        Verdict::Skipped => "skipped",
    }
}

/// `filter=verdict` pairs plus the witness of the deciding filter.
fn filter_summary(rec: &CaseRecord) -> String {
    let mut parts: Vec<String> = rec
        .filters
        .iter()
        .map(|(name, out)| format!("{name}={}", verdict_name(out.verdict)))
        .collect();
    if let Some(out) = rec.filters.values().find(|o| o.verdict == Verdict::Fail) {
        let w: Vec<String> = out.witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.push(format!("witness({})", w.join(" ")));
    }
    parts.join(" ")
}

fn render_table1(format: Format) -> Outcome {
    let rows = filter_table1(&enumerate_table1());
    let surv = survivors(&rows);
    let pass = surv == [1, 4];
    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "{:>4} {:>3} {:>3} {:>4}  filters", "case", "s", "b", "c").unwrap();
            for r in &rows {
                let mark = if r.survives { "survives" } else { "excluded" };
                writeln!(out, "{:>4} {:>3} {:>3} {:>4}  {mark}: {}", r.id, r.s, r.b, r.c, filter_summary(r)).unwrap();
            }
            let ids: Vec<String> = surv.iter().map(|i| i.to_string()).collect();
            writeln!(out, "survivors: {}", ids.join(", ")).unwrap();
        }
        Format::Json => {
            out = canonical_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "table1",
                "cases": rows,
                "survivors": surv,
            }));
        }
        Format::Csv => {
            out.push_str("case,s,b,c\n");
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.id, r.s, r.b, r.c).unwrap();
            }
        }
        Format::Md => {
            out.push_str("| case | s | b | c | survives | filters |\n|---:|---:|---:|---:|:---:|---|\n");
            for r in &rows {
                writeln!(out, "| {} | {} | {} | {} | {} | {} |", r.id, r.s, r.b, r.c, if r.survives { "yes" } else { "no" }, filter_summary(r)).unwrap();
            }
        }
    }
    Outcome { body: out, pass }
}

fn report_text(r: &VerdictReport, out: &mut String) {
    writeln!(out, "[{}] {}: {}", verdict_word(r.overall), r.theorem, r.title).unwrap();
    for s in &r.steps {
        writeln!(
            out,
            "  {} {}: computed {} expected {} ({}) {}",
            verdict_word(s.pass),
            s.id,
            s.computed,
            s.expected,
            s.source,
            s.claim
        )
        .unwrap();
    }
    for a in &r.assumptions {
        writeln!(out, "  assumes {}: {}", a.id, a.statement).unwrap();
    }
}

fn report_md(r: &VerdictReport, out: &mut String) {
    writeln!(out, "## {} ({})\n\n{}\n", r.theorem, verdict_word(r.overall), r.title).unwrap();
    out.push_str("| step | claim | computed | expected | source | result |\n|---|---|---|---|---|---|\n");
    for s in &r.steps {
        writeln!(out, "| {} | {} | {} | {} | {} | {} |", s.id, s.claim, s.computed, s.expected, s.source, verdict_word(s.pass)).unwrap();
    }
    if !r.assumptions.is_empty() {
        out.push_str("\nAssumed:\n\n");
        for a in &r.assumptions {
            writeln!(out, "- `{}`: {}", a.id, a.statement).unwrap();
        }
    }
    out.push('\n');
}

fn render_reports(reports: &[VerdictReport], format: Format) -> Outcome {
    let pass = reports.iter().all(|r| r.overall);
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in reports {
                report_text(r, &mut out);
            }
            let n = reports.iter().filter(|r| r.overall).count();
            writeln!(out, "{n}/{} verifiers passed", reports.len()).unwrap();
        }
        Format::Json => {
            out = canonical_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "verify",
                "reports": reports,
                "overall": pass,
            }));
        }
        Format::Csv => {
            out.push_str("theorem,step,computed,expected,pass\n");
            for r in reports {
                for s in &r.steps {
                    writeln!(out, "{},{},{},{},{}", r.theorem, s.id, s.computed.csv_cell(), s.expected.csv_cell(), s.pass).unwrap();
                }
            }
        }
        Format::Md => {
            for r in reports {
                report_md(r, &mut out);
            }
        }
    }
    Outcome { body: out, pass }
}

/// Flat records (all fields scalar) rendered in any format.
fn render_record<T: Serialize>(command: &str, record: &T, format: Format) -> String {
    let value = serde_json::to_value(record).expect("record serializes");
    let fields = value.as_object().expect("record is a struct");
    let scalar = |v: &serde_json::Value| match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let mut out = String::new();
    match format {
        Format::Text => {
            for (k, v) in fields {
                writeln!(out, "{k} = {}", scalar(v)).unwrap();
            }
        }
        Format::Json => {
            out = canonical_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": command,
                "result": value,
            }));
        }
        Format::Csv => {
            let keys: Vec<&str> = fields.keys().map(String::as_str).collect();
            let vals: Vec<String> = fields.values().map(scalar).collect();
            writeln!(out, "{}\n{}", keys.join(","), vals.join(",")).unwrap();
        }
        Format::Md => {
            out.push_str("| field | value |\n|---|---|\n");
            for (k, v) in fields {
                writeln!(out, "| {k} | {} |", scalar(v)).unwrap();
            }
        }
    }
    out
}

fn render_bounds(bounds: &CuspBounds, format: Format) -> String {
    #[derive(Serialize)]
    struct BoundsRecord<'a> {
        #[serde(flatten)]
        bounds: &'a CuspBounds,
        effective_upper: crate::rational::Rational,
    }
    render_record("bounds", &BoundsRecord { bounds, effective_upper: bounds.effective_upper() }, format)
}

fn render_full(window: i64, format: Format) -> Outcome {
    let table = render_table1(format);
    let reports: Vec<VerdictReport> =
        VERIFIER_IDS.iter().map(|id| run_verifier(id, window).expect("registered id")).collect();
    let verdicts = render_reports(&reports, format);
    let pass = table.pass && verdicts.pass;
    let body = match format {
        Format::Json => {
            let rows = filter_table1(&enumerate_table1());
            canonical_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "report",
                "table1": { "cases": rows, "survivors": survivors(&rows) },
                "reports": reports,
                "overall": pass,
            }))
        }
        Format::Csv => verdicts.body,
        Format::Md => format!("# Verification report\n\n## Table 1\n\n{}\n{}", table.body, verdicts.body),
        Format::Text => format!("{}\n{}", table.body, verdicts.body),
    };
    Outcome { body, pass }
}
