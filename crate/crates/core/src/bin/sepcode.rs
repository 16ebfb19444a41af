//! Batch command-line surface: construct codes, verify properties, print
//! bounds, and search difference-family exponent sets, all with
//! reproducible JSON outputs.
//!
//! Exit codes are a stable contract: 0 success / property holds,
//! 1 property violated (witness included in the report), 2 usage or
//! parameter error, 3 verification methods disagree.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use sepcode::bounds;
use sepcode::code::{Code, CodeFormat};
use sepcode::construct::{
    self, df_code, df_search, DfSearchSpec, EpsSelection, ExponentSet, SPattern,
};
use sepcode::field::{prime_power_split, FiniteField};
use sepcode::verify::{self, VerifyOptions, VerifyReport};

#[derive(Parser)]
#[command(
    name = "sepcode",
    version,
    about = "Separable-code construction, verification and search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output path; stdout when omitted.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Code file format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Maximum number of subsets an oracle may enumerate.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    budget: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for CodeFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => CodeFormat::Json,
            FormatArg::Text => CodeFormat::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from one of the construction families.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Check a property of a code file.
    Verify {
        /// Code file to check.
        input: PathBuf,
        #[arg(long, value_enum)]
        property: PropertyArg,
        /// Subset size bound; defaults to 3 (2 for fpc).
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Oracle)]
        method: MethodArg,
    },
    /// Print every applicable bound for the given parameters.
    Bound {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
    /// Search admissible exponent sets.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Block code with n(q-1) single-weight codewords.
    TrivialFpc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
    /// Cube code: r^3 codewords over r^2 symbols.
    PhfCube {
        #[arg(long)]
        r: u32,
    },
    /// Extended cube code: r^3 + k·r^2 codewords over r^2 symbols, r = k^2.
    PhfExtended {
        #[arg(long)]
        k: u32,
    },
    /// Difference-family translates over GF(q), q = 6t+1.
    Df {
        #[arg(long)]
        q: u64,
        /// Pattern name (all, mod3-nonzero, even, mod3-zero) or a
        /// comma-separated exponent list.
        #[arg(long, default_value = "all")]
        s: String,
        /// Rank of the primitive element to use.
        #[arg(long, default_value_t = 0)]
        eps_rank: u32,
    },
}

#[derive(Subcommand)]
enum SearchKind {
    /// Evaluate the admissibility criterion over primitive elements and
    /// patterns, streaming JSON-lines records.
    Df {
        #[arg(long)]
        q: u64,
        /// Comma-separated pattern list.
        #[arg(long, default_value = "all")]
        pattern: String,
        /// first | all | a rank number.
        #[arg(long, default_value = "first")]
        eps: String,
        /// Directory to write each admissible code into; every emitted
        /// code is structurally verified first.
        #[arg(long)]
        emit_codes: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    /// Separability over subsets of size up to t.
    ScBar,
    /// Separability over subsets of size exactly t.
    Sc,
    /// Frameproof property for coalitions of size up to t.
    Fpc,
    /// Perfect-hash-family property for t-subsets.
    Phf,
    /// Structural separability check for length-3 codes.
    Sc3barStructural,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MethodArg {
    Oracle,
    Structural,
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let opts = VerifyOptions {
        budget: cli.budget,
        workers,
    };
    let out = cli.output.clone();
    let format: CodeFormat = cli.format.into();
    match cli.command {
        Command::Construct { family } => run_construct(family, out.as_deref(), format),
        Command::Verify {
            input,
            property,
            t,
            method,
        } => run_verify(&input, property, t, method, &opts, out.as_deref(), format),
        Command::Bound { q, n, t } => run_bound(n, q, t, out.as_deref()),
        Command::Search { kind } => run_search(kind, &opts, out.as_deref()),
    }
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes),
        None => std::io::stdout().write_all(bytes),
    }
}

/// Code file with the provenance header, in canonical field order.
#[derive(Serialize)]
struct CodeFileOut<'a> {
    n: usize,
    q: u32,
    m: usize,
    columns: Vec<&'a [u32]>,
    provenance: serde_json::Value,
}

fn code_file_bytes(code: &Code, provenance: serde_json::Value) -> Vec<u8> {
    let file = CodeFileOut {
        n: code.n(),
        q: code.q(),
        m: code.len(),
        columns: code.columns().collect(),
        provenance,
    };
    let mut s = serde_json::to_string(&file).expect("serialization cannot fail");
    s.push('\n');
    s.into_bytes()
}

fn run_construct(family: Family, out: Option<&Path>, format: CodeFormat) -> ExitCode {
    let built: Result<(Code, serde_json::Value), String> = match family {
        Family::TrivialFpc { n, q } => construct::trivial_fpc(n, q)
            .map(|c| {
                let prov = provenance("trivial-fpc", json!({"n": n, "q": q}), None, None);
                (c, prov)
            })
            .map_err(|e| e.to_string()),
        Family::PhfCube { r } => construct::phf_cube(r)
            .map(|c| (c, provenance("phf-cube", json!({"r": r}), None, None)))
            .map_err(|e| e.to_string()),
        Family::PhfExtended { k } => construct::phf_extended(k)
            .map(|c| (c, provenance("phf-extended", json!({"k": k}), None, None)))
            .map_err(|e| e.to_string()),
        Family::Df { q, s, eps_rank } => build_df(q, &s, eps_rank),
    };
    match built {
        Ok((code, prov)) => {
            let bytes = match format {
                CodeFormat::Json => code_file_bytes(&code, prov),
                CodeFormat::Text => code.to_bytes(CodeFormat::Text),
            };
            match emit(out, &bytes) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(e),
            }
        }
        Err(e) => fail(e),
    }
}

fn build_df(q: u64, s: &str, eps_rank: u32) -> Result<(Code, serde_json::Value), String> {
    let (p, m) = prime_power_split(q).map_err(|e| e.to_string())?;
    let field = FiniteField::with_primitive_rank(p, m, eps_rank).map_err(|e| e.to_string())?;
    let root = field.cube_root().map_err(|e| e.to_string())?;
    let set = parse_exponent_set(s, root.t)?;
    let code = df_code(&field, &set).map_err(|e| e.to_string())?;
    let prov = provenance(
        "df",
        json!({"q": q, "eps_rank": eps_rank, "pattern": set.pattern_name()}),
        Some(serde_json::to_value(field.descriptor()).unwrap()),
        Some(json!(set.indices())),
    );
    Ok((code, prov))
}

fn parse_exponent_set(s: &str, t: u32) -> Result<ExponentSet, String> {
    if let Some(pattern) = SPattern::parse(s) {
        return ExponentSet::from_pattern(pattern, t).map_err(|e| e.to_string());
    }
    let indices: Vec<u32> = s
        .split(',')
        .map(|tok| tok.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("--s must be a pattern name or an exponent list: {e}"))?;
    ExponentSet::custom(indices, t).map_err(|e| e.to_string())
}

fn provenance(
    construction: &str,
    params: serde_json::Value,
    field: Option<serde_json::Value>,
    s: Option<serde_json::Value>,
) -> serde_json::Value {
    json!({
        "construction": construction,
        "params": params,
        "field": field,
        "S": s,
    })
}

fn run_verify(
    input: &Path,
    property: PropertyArg,
    t: Option<usize>,
    method: MethodArg,
    opts: &VerifyOptions,
    out: Option<&Path>,
    format: CodeFormat,
) -> ExitCode {
    let bytes = match std::fs::read(input) {
        Ok(b) => b,
        Err(e) => return fail(format!("{}: {e}", input.display())),
    };
    let code = match Code::from_bytes(&bytes, format) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let t = t.unwrap_or(match property {
        PropertyArg::Fpc => 2,
        _ => 3,
    });

    let run_oracle = |code: &Code| -> Result<VerifyReport, sepcode::VerifyError> {
        match property {
            PropertyArg::ScBar => verify::oracle_sc_bar(code, t, opts),
            PropertyArg::Sc => verify::oracle_sc_exact(code, t, opts),
            PropertyArg::Fpc => verify::check_fpc(code, t, opts),
            PropertyArg::Phf => verify::check_phf(code, t, opts),
            PropertyArg::Sc3barStructural => verify::check_sc3bar_structural(code, opts),
        }
    };
    let run_structural = |code: &Code| -> Result<VerifyReport, String> {
        match property {
            PropertyArg::ScBar => {
                if t != 3 {
                    return Err("structural separability check requires t = 3".into());
                }
                verify::check_sc3bar_structural(code, opts).map_err(|e| e.to_string())
            }
            PropertyArg::Sc3barStructural => {
                verify::check_sc3bar_structural(code, opts).map_err(|e| e.to_string())
            }
            PropertyArg::Fpc => {
                if t != 2 {
                    return Err("the projection characterization requires t = 2".into());
                }
                verify::check_fpc2_projection(code, opts).map_err(|e| e.to_string())
            }
            PropertyArg::Sc | PropertyArg::Phf => {
                Err("only an oracle method exists for this property".into())
            }
        }
    };

    let reports: Vec<VerifyReport> = match method {
        MethodArg::Oracle => match run_oracle(&code) {
            Ok(r) => vec![r],
            Err(e) => return fail(e),
        },
        MethodArg::Structural => match run_structural(&code) {
            Ok(r) => vec![r],
            Err(e) => return fail(e),
        },
        MethodArg::Both => {
            let a = match run_oracle(&code) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            let b = match run_structural(&code) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            vec![a, b]
        }
    };

    let payload = if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0]).unwrap()
    } else {
        serde_json::to_string_pretty(&reports).unwrap()
    };
    if let Err(e) = emit(out, format!("{payload}\n").as_bytes()) {
        return fail(e);
    }
    if reports.len() == 2 && reports[0].holds != reports[1].holds {
        eprintln!(
            "methods disagree: oracle={} structural={} — investigate immediately",
            reports[0].holds, reports[1].holds
        );
        return ExitCode::from(3);
    }
    if reports.iter().all(|r| r.holds) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_bound(n: usize, q: u32, t: usize, out: Option<&Path>) -> ExitCode {
    if q < 2 {
        return fail("q must be at least 2");
    }
    let results = bounds::applicable_bounds(n, q, t);
    if results.is_empty() {
        return fail(format!("no bound applies to n={n}, q={q}, t={t}"));
    }
    let payload = serde_json::to_string_pretty(&results).unwrap();
    match emit(out, format!("{payload}\n").as_bytes()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(e),
    }
}

fn run_search(kind: SearchKind, opts: &VerifyOptions, out: Option<&Path>) -> ExitCode {
    let SearchKind::Df {
        q,
        pattern,
        eps,
        emit_codes,
    } = kind;
    let patterns: Result<Vec<SPattern>, String> = pattern
        .split(',')
        .map(|tok| SPattern::parse(tok.trim()).ok_or_else(|| format!("unknown pattern {tok:?}")))
        .collect();
    let patterns = match patterns {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let eps = match eps.as_str() {
        "first" => EpsSelection::First,
        "all" => EpsSelection::All,
        other => match other.parse::<u32>() {
            Ok(rank) => EpsSelection::Rank(rank),
            Err(_) => return fail("--eps must be `first`, `all`, or a rank number"),
        },
    };
    let spec = DfSearchSpec { q, eps, patterns };
    let records = match df_search(&spec, opts.workers) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };

    let mut lines = String::new();
    for record in &records {
        let mut value = serde_json::to_value(record).unwrap();
        if record.admissible {
            if let Some(dir) = &emit_codes {
                match emit_verified_code(record, dir, opts) {
                    Ok((path, report)) => {
                        if !report.holds {
                            eprintln!(
                                "criterion and structural verifier disagree on q={} eps_rank={} pattern={} — investigate immediately",
                                record.q, record.eps_rank, record.pattern
                            );
                            return ExitCode::from(3);
                        }
                        value["code_path"] = json!(path.display().to_string());
                        value["verified"] = json!(report.holds);
                    }
                    Err(e) => return fail(e),
                }
            }
        }
        lines.push_str(&serde_json::to_string(&value).unwrap());
        lines.push('\n');
    }
    match emit(out, lines.as_bytes()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(e),
    }
}

fn emit_verified_code(
    record: &sepcode::construct::SearchRecord,
    dir: &Path,
    opts: &VerifyOptions,
) -> Result<(PathBuf, VerifyReport), String> {
    let field = FiniteField::with_primitive_rank(record.p, record.m, record.eps_rank)
        .map_err(|e| e.to_string())?;
    let root = field.cube_root().map_err(|e| e.to_string())?;
    let set = ExponentSet::custom(record.s.clone(), root.t).map_err(|e| e.to_string())?;
    let code = df_code(&field, &set).map_err(|e| e.to_string())?;
    let report = verify::check_sc3bar_structural(&code, opts).map_err(|e| e.to_string())?;

    std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    let path = dir.join(format!(
        "df-q{}-eps{}-{}.json",
        record.q, record.eps_rank, record.pattern
    ));
    let prov = provenance(
        "df",
        json!({"q": record.q, "eps_rank": record.eps_rank, "pattern": record.pattern}),
        Some(serde_json::to_value(&record.field).unwrap()),
        Some(json!(record.s)),
    );
    std::fs::write(&path, code_file_bytes(&code, prov)).map_err(|e| e.to_string())?;
    Ok((path, report))
}
