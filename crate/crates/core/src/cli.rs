//! Command-line front end. Exit codes: 0 success / classified, 1 catalog
//! mismatch, 2 usage or parse error, 3 inadmissible input, 4 toroidal.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use crate::catalog::{catalog, catalog_get, verify_entries, CatalogEntry, Expected, RowOutcome};
use crate::census::{census, write_csv, CensusBounds};
use crate::frac::{cf_eval, cf_expand, slope_normalize, ExtFraction, TwistVector};
use crate::tangle::{resolve, validate_descriptor, TangleDescriptor};
use crate::verdict::{classify, obstruction_check, Decomposition, DecompositionKind, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INADMISSIBLE: i32 = 3;
pub const EXIT_TOROIDAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "hkdecomp", version, about = "Essential annuli and hyperbolicity of 3-decomposable genus two handlebody-knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CensusType {
    Tautau,
    Taurho,
    Rhorho,
}

impl From<CensusType> for DecompositionKind {
    fn from(t: CensusType) -> Self {
        match t {
            CensusType::Tautau => DecompositionKind::TauTau,
            CensusType::Taurho => DecompositionKind::TauRho,
            CensusType::Rhorho => DecompositionKind::RhoRho,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a continued fraction [a1, ..., am] and its normalized slope
    #[command(allow_negative_numbers = true)]
    Cf {
        #[arg(required = true)]
        twists: Vec<i64>,
    },
    /// Expand a fraction p/q into a twist vector
    Expand {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
    },
    /// Resolve a single tangle descriptor (JSON)
    Tangle {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classify a decomposition document (JSON)
    Classify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Show or verify the built-in handlebody-knot catalog
    Catalog {
        name: Option<String>,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate special decompositions and write CSV
    Census {
        #[arg(value_enum)]
        kind: CensusType,
        #[arg(long, default_value_t = 25)]
        max_denominator: i64,
        #[arg(long, default_value_t = 5)]
        max_p: i64,
        #[arg(long, default_value_t = 5)]
        max_q: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `text` as JSON, reporting the offending field path and position.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T, String> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        format!("at `{path}` (line {}, column {}): {inner}", inner.line(), inner.column())
    })
}

pub fn parse_document(text: &str) -> Result<Decomposition, String> {
    parse_json(text)
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Cf { twists } => cmd_cf(twists, out),
        Command::Expand { fraction } => cmd_expand(&fraction, out),
        Command::Tangle { path, json } => cmd_tangle(&path, json, out),
        Command::Classify { path, json } => cmd_classify(&path, json, out),
        Command::Catalog { name, verify, json } => cmd_catalog(name.as_deref(), verify, json, out),
        Command::Census { kind, max_denominator, max_p, max_q, out: path } => {
            cmd_census(kind.into(), CensusBounds { max_denominator, max_p, max_q }, path.as_deref(), out)
        }
    };
    match result {
        Ok(code) => code,
        Err((code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

type CmdResult = Result<i32, (i32, String)>;

fn usage<E: ToString>(e: E) -> (i32, String) {
    (EXIT_USAGE, e.to_string())
}

fn io<E: ToString>(e: E) -> (i32, String) {
    (EXIT_USAGE, e.to_string())
}

fn cmd_cf(twists: Vec<i64>, out: &mut dyn Write) -> CmdResult {
    let tv = TwistVector::new(twists);
    let value = cf_eval(&tv).map_err(usage)?;
    let slope = slope_normalize(value).map_err(|_| usage(format!("{tv} evaluates to 1/0, which has no slope")))?;
    let hopf = if slope == ExtFraction::new(1, 2).expect("1/2") { " [Hopf ρ]" } else { "" };
    writeln!(out, "{value} (slope {slope}){hopf}").map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_expand(fraction: &str, out: &mut dyn Write) -> CmdResult {
    let f: ExtFraction = fraction.parse().map_err(usage)?;
    let tv = cf_expand(f).map_err(usage)?;
    let parts: Vec<String> = tv.entries().iter().map(|a| a.to_string()).collect();
    writeln!(out, "{}", parts.join(" ")).map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_tangle(path: &Path, json: bool, out: &mut dyn Write) -> CmdResult {
    let d: TangleDescriptor = read_json(path).map_err(usage)?;
    let violations = validate_descriptor(&d);
    if !violations.is_empty() {
        let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err((EXIT_INADMISSIBLE, msgs.join("; ")));
    }
    let t = resolve(&d).map_err(|e| (EXIT_INADMISSIBLE, e.to_string()))?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&t).map_err(io)?).map_err(io)?;
        return Ok(EXIT_OK);
    }
    let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
    writeln!(out, "kind          {}", t.kind).map_err(io)?;
    writeln!(out, "slope         {}", opt(t.slope.map(|s| s.to_string()))).map_err(io)?;
    writeln!(out, "atoroidal     {}", t.atoroidal).map_err(io)?;
    writeln!(out, "trivial       {}", t.trivial).map_err(io)?;
    writeln!(out, "hopf tangle   {}", t.hopf_tangle).map_err(io)?;
    writeln!(out, "essential     {}", t.essential).map_err(io)?;
    writeln!(out, "torus         {}", opt(t.torus.map(|p| p.to_string()))).map_err(io)?;
    writeln!(out, "satellite     {}", t.satellite).map_err(io)?;
    writeln!(out, "cable         {}", t.cable).map_err(io)?;
    writeln!(out, "hopf summand  {}", t.hopf_summand).map_err(io)?;
    for note in &t.provenance {
        writeln!(out, "  - {note}").map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn cmd_classify(path: &Path, json: bool, out: &mut dyn Write) -> CmdResult {
    let d: Decomposition = read_json(path).map_err(usage)?;
    let v = classify(&d);
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(io)?).map_err(io)?;
    } else {
        writeln!(out, "{}", v.headline()).map_err(io)?;
        writeln!(out, "status   {:?}", v.status).map_err(io)?;
        if let Some(c) = v.annulus_count {
            writeln!(out, "count    {c}").map_err(io)?;
        }
        writeln!(out, "branch   {}", v.branch).map_err(io)?;
        for a in &v.annuli {
            writeln!(out, "annulus  {a}").map_err(io)?;
        }
        for n in &v.notes {
            writeln!(out, "note     {n}").map_err(io)?;
        }
        for p in &v.violations {
            writeln!(out, "problem  {p}").map_err(io)?;
        }
    }
    Ok(match v.status {
        Status::Classified => EXIT_OK,
        Status::Inadmissible => EXIT_INADMISSIBLE,
        Status::Toroidal => EXIT_TOROIDAL,
    })
}

fn entry_line(e: &CatalogEntry) -> String {
    let observed = match (&e.decomposition, &e.profile, &e.expected) {
        (Some(d), _, _) => classify(d).headline(),
        (None, Some(p), _) => match obstruction_check(p) {
            Ok(obs) if obs.is_empty() => "no obstruction".to_string(),
            Ok(obs) => obs.iter().map(|o| o.to_string()).collect::<Vec<_>>().join("; "),
            Err(e) => e.to_string(),
        },
        (None, None, Expected::Hyperbolic) => "hyperbolic (stored fact)".to_string(),
        (None, None, _) => "no data".to_string(),
    };
    format!("{:<20} {observed}", e.name)
}

fn cmd_catalog(name: Option<&str>, verify: bool, json: bool, out: &mut dyn Write) -> CmdResult {
    let entries = match name {
        Some(n) => vec![catalog_get(n).map_err(usage)?],
        None => catalog(),
    };
    if verify {
        let report = verify_entries(&entries);
        if json {
            writeln!(out, "{}", serde_json::to_string_pretty(&report).map_err(io)?).map_err(io)?;
        } else {
            for row in &report.rows {
                let line = match &row.outcome {
                    RowOutcome::Pass { observed } => format!("PASS {:<20} {observed}", row.name),
                    RowOutcome::Fail { observed, expected } => {
                        format!("FAIL {:<20} {observed} (expected {expected})", row.name)
                    }
                    RowOutcome::StoredFact => format!("FACT {:<20} hyperbolic (stored fact)", row.name),
                };
                writeln!(out, "{line}").map_err(io)?;
            }
            if report.all_match() {
                writeln!(out, "all entries match ({} classified, {} stored facts)", report.passed, report.stored_facts)
                    .map_err(io)?;
            } else {
                writeln!(out, "{} mismatches", report.failed).map_err(io)?;
            }
        }
        return Ok(if report.all_match() { EXIT_OK } else { EXIT_MISMATCH });
    }
    if json {
        // a single entry with a decomposition exports as a classify document
        let text = match (name, entries.as_slice()) {
            (Some(_), [CatalogEntry { decomposition: Some(d), .. }]) => serde_json::to_string_pretty(d),
            _ => serde_json::to_string_pretty(&entries),
        }
        .map_err(io)?;
        writeln!(out, "{text}").map_err(io)?;
        return Ok(EXIT_OK);
    }
    for e in &entries {
        writeln!(out, "{}", entry_line(e)).map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn cmd_census(kind: DecompositionKind, bounds: CensusBounds, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let cases = census(kind, bounds).map_err(usage)?;
    match path {
        Some(p) => {
            let file = fs::File::create(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            write_csv(&cases, std::io::BufWriter::new(file)).map_err(io)?;
        }
        None => write_csv(&cases, out).map_err(io)?,
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hkdecomp").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn cf_outputs() {
        assert_eq!(run_str(&["cf", "3", "0"]), (0, "1/3 (slope 1/3)\n".into(), String::new()));
        assert_eq!(run_str(&["cf", "0"]).1, "0 (slope 0)\n");
        assert_eq!(run_str(&["cf", "2", "0"]).1, "1/2 (slope 1/2) [Hopf ρ]\n");
        assert_eq!(run_str(&["cf", "-3", "0"]).1, "-1/3 (slope -1/3)\n");
        assert_eq!(run_str(&["cf", "2", "3"]).1, "7/2 (slope 1/2) [Hopf ρ]\n");
        assert_eq!(run_str(&["cf", "0", "5"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["cf", "x"]).0, EXIT_USAGE);
    }

    #[test]
    fn expand_outputs() {
        assert_eq!(run_str(&["expand", "1/2"]).1, "2 0\n");
        assert_eq!(run_str(&["expand", "-3/8"]).1, "2 1 1 1 -1\n");
        assert_eq!(run_str(&["expand", "1/0"]).0, EXIT_USAGE);
    }

    #[test]
    fn catalog_lookups() {
        let (code, out, _) = run_str(&["catalog", "5_2"]);
        assert_eq!(code, 0);
        assert!(out.contains("infinitely many essential annuli"), "{out}");
        assert_eq!(run_str(&["catalog", "bogus"]).0, EXIT_USAGE);
        let (code, out, _) = run_str(&["catalog", "--verify"]);
        assert_eq!(code, 0);
        assert!(out.contains("all entries match"));
    }

    #[test]
    fn catalog_json_export_is_a_document() {
        let (_, out, _) = run_str(&["catalog", "4_1", "--json"]);
        let d = parse_document(&out).unwrap();
        assert_eq!(d, catalog_get("4_1").unwrap().decomposition.unwrap());
    }

    #[test]
    fn parse_errors_name_the_field() {
        let text = r#"{"type": "tautau", "special": true, "tangles": [
            {"kind": "tau", "presentation": {"rational": {"twists": [3, 0]}}},
            {"kind": "tau", "presentation": {"rational": {"twists": [3, 0], "twist": 1}}}
        ]}"#;
        let err = parse_document(text).unwrap_err();
        assert!(err.contains("tangles[1]"), "{err}");
        assert!(err.contains("line 3"), "{err}");
    }
}
