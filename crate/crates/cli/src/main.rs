//! `qclrc`: factor `x^m - 1`, analyze quasi-cyclic codes, scan extension
//! families and reproduce the worked examples.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qclrc::algebra::{factor_unity, Elem, Field, Poly};
use qclrc::bounds::{full_report, BoundsReport, LocalRecovery, Recovery};
use qclrc::codes::{low_weight_search, min_weight_codeword, DistanceBudget, LinearCode, Strategy};
use qclrc::construct::{extend_constituent, scan, CodeDatabase, FamilySpec, ScanReport, Source};
use qclrc::examples::{reproduce, EXAMPLES};
use qclrc::render::{
    factorization_text, report_text, reproduction_text, scan_text, FactorizationSummary,
};
use qclrc::spec::CodeSpec;
use qclrc::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Rounds of the randomized low-weight search used by `mindist` when the
/// exact search exceeds the budget.
const SEARCH_ROUNDS: usize = 2000;

#[derive(Parser, Debug)]
#[command(
    name = "qclrc",
    version,
    about = "Quasi-cyclic locally recoverable codes"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Work limit for exact distance computations: the largest number of
    /// codewords to enumerate and of support subsets to rank-check.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Extra code database merged with the bundled one.
    #[arg(long, global = true, value_name = "FILE")]
    db: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// A single JSON document.
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor x^m - 1 over F_q into minimal polynomials.
    Factor {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        q: u64,
    },
    /// Bounds for the code described by a spec file.
    Analyze {
        file: PathBuf,
        /// Also repair one symbol of a random codeword drawn with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Walk the extension family of a spec file.
    Scan {
        file: PathBuf,
        #[arg(long, default_value_t = qclrc::construct::DEFAULT_JMAX)]
        jmax: usize,
    },
    /// Recompute a worked example and compare with the published values.
    Reproduce {
        #[arg(value_parser = example_ids())]
        id: String,
    },
    /// Extend an [n, k, d] code to [n + j, k + j, d].
    Extend {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        j: usize,
    },
    /// Minimum distance of a linear code.
    Mindist {
        #[command(flatten)]
        code: CodeArgs,
        /// Use a random [n, k] code instead of --row.
        #[arg(long, num_args = 2, value_names = ["N", "K"], conflicts_with = "rows")]
        random: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
}

#[derive(Args, Debug)]
struct CodeArgs {
    #[arg(long)]
    q: u64,
    /// One generator row, e.g. "1 0 [1,1]"; entries are F_q elements as
    /// bracket polynomials in the field generator (or integers for F_p).
    #[arg(long = "row", value_name = "ROW")]
    rows: Vec<String>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum StrategyArg {
    Auto,
    Enumerate,
    SupportSearch,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Enumerate => Strategy::Enumerate,
            StrategyArg::SupportSearch => Strategy::SupportSearch,
        }
    }
}

fn example_ids() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(EXAMPLES.iter().map(|e| e.id))
}

#[derive(Serialize)]
struct Document<'a, T> {
    command: &'a str,
    result: T,
}

#[derive(Serialize)]
struct Analysis {
    report: BoundsReport,
    recovery: Option<RecoveryDemo>,
}

#[derive(Serialize)]
struct RecoveryDemo {
    seed: u64,
    recovery: Option<Recovery>,
    /// Why no repair was attempted.
    note: Option<String>,
}

#[derive(Serialize)]
struct Extension {
    q: u64,
    n: usize,
    k: usize,
    d: usize,
    source: Source,
    generator: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct Distance {
    q: u64,
    n: usize,
    k: usize,
    distance: usize,
    /// `false` when the exact search exceeded the budget and `distance` is
    /// only the weight of the lightest codeword found.
    exact: bool,
    codeword: Vec<String>,
}

/// A command's output: the value behind the structured form, its text
/// form, and whether the exit status should be a failure.
struct Output {
    json: serde_json::Value,
    text: String,
    failed: bool,
}

impl Output {
    fn new<T: Serialize>(command: &str, value: &T, text: String) -> Result<Output, String> {
        let json = serde_json::to_value(Document {
            command,
            result: value,
        })
        .map_err(|e| e.to_string())?;
        Ok(Output {
            json,
            text,
            failed: false,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Text => out.text,
                Format::Structured => serde_json::to_string_pretty(&out.json).expect("json") + "\n",
            };
            // a closed pipe (`| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if out.failed {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<Output, String> {
    let budget = match cli.budget {
        Some(b) => DistanceBudget {
            max_codewords: b,
            max_rank_checks: b,
        },
        None => DistanceBudget::default(),
    };
    let db = load_db(cli.db.as_deref())?;
    match &cli.command {
        Command::Factor { m, q } => {
            let field = Field::galois(*q).map_err(err)?;
            let summary = FactorizationSummary::new(&factor_unity(&field, *m).map_err(err)?);
            Output::new("factor", &summary, factorization_text(&summary))
        }
        Command::Analyze { file, seed } => analyze(file, *seed, &db, &budget),
        Command::Scan { file, jmax } => {
            let spec = read_spec(file)?;
            let base = spec.to_decomposition(Some(&db), &budget).map_err(err)?;
            let report: ScanReport = scan(&FamilySpec {
                base,
                jmax: *jmax,
                budget,
                database: Some(db),
            })
            .map_err(err)?;
            Output::new("scan", &report, scan_text(&report))
        }
        Command::Reproduce { id } => {
            let r = reproduce(id, &budget).map_err(err)?;
            let mut out = Output::new("reproduce", &r, reproduction_text(&r))?;
            out.failed = !r.passed();
            Ok(out)
        }
        Command::Extend { code, j } => extend(code, *j, &db, &budget),
        Command::Mindist {
            code,
            random,
            seed,
            strategy,
        } => mindist(code, random.as_deref(), *seed, (*strategy).into(), &budget),
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn load_db(path: Option<&Path>) -> Result<Arc<CodeDatabase>, String> {
    let mut db = CodeDatabase::bundled();
    if let Some(p) = path {
        let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
        db.merge(CodeDatabase::parse(&text).map_err(|e| format!("{}: {e}", p.display()))?);
    }
    Ok(Arc::new(db))
}

fn read_spec(path: &Path) -> Result<CodeSpec, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    CodeSpec::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn analyze(
    file: &Path,
    seed: Option<u64>,
    db: &CodeDatabase,
    budget: &DistanceBudget,
) -> Result<Output, String> {
    let dec = read_spec(file)?
        .to_decomposition(Some(db), budget)
        .map_err(err)?;
    let report = full_report(&dec, budget).map_err(err)?;
    let mut text = report_text(&report);
    let recovery = match seed {
        None => None,
        Some(seed) if report.locality_fallback => Some(RecoveryDemo {
            seed,
            recovery: None,
            note: Some(
                "the associated cyclic code is the whole space; no column parity exists".into(),
            ),
        }),
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = dec.random_codeword(&mut rng);
            let coord = (rng.gen_range(0..dec.m()), rng.gen_range(0..dec.ell()));
            let rec = LocalRecovery::new(&dec, budget)
                .and_then(|lr| lr.recover(&c, coord))
                .map_err(err)?;
            Some(RecoveryDemo {
                seed,
                recovery: Some(rec),
                note: None,
            })
        }
    };
    if let Some(demo) = &recovery {
        text.push('\n');
        match (&demo.recovery, &demo.note) {
            (Some(r), _) => {
                let set: Vec<String> = r.set.iter().map(|(i, j)| format!("({i},{j})")).collect();
                writeln!(
                    text,
                    "repair of ({},{}) with seed {}: read {} symbols {}, recovered {}, actual {} ({})",
                    r.coordinate.0,
                    r.coordinate.1,
                    demo.seed,
                    r.set.len(),
                    set.join(" "),
                    r.recovered,
                    r.actual,
                    if r.is_exact() { "exact" } else { "MISMATCH" }
                )
                .unwrap();
            }
            (None, Some(note)) => {
                writeln!(text, "repair with seed {}: skipped, {note}", demo.seed).unwrap()
            }
            (None, None) => {}
        }
    }
    let failed = recovery
        .as_ref()
        .and_then(|d| d.recovery.as_ref())
        .is_some_and(|r| !r.is_exact());
    let mut out = Output::new("analyze", &Analysis { report, recovery }, text)?;
    out.failed = failed;
    Ok(out)
}

/// Parses one `--row`: whitespace-separated entries, each a bracket
/// polynomial over the prime field or a bare integer.
fn parse_row(field: &Field, row: &str) -> Result<Vec<Elem>, String> {
    let base = field.base().unwrap_or(field);
    row.split_whitespace()
        .map(|tok| {
            let tok = if tok.starts_with('[') {
                tok.to_string()
            } else {
                format!("[{tok}]")
            };
            let p = Poly::parse(base, &tok).map_err(err)?;
            if p.coeffs().len() > field.step_degree() as usize {
                return Err(format!("{tok} has degree at least [F_q : F_p]"));
            }
            Ok(field.from_coeffs(p.coeffs()))
        })
        .collect()
}

fn code_from_rows(args: &CodeArgs) -> Result<(Field, LinearCode), String> {
    let field = Field::galois(args.q).map_err(err)?;
    let rows = args
        .rows
        .iter()
        .map(|r| parse_row(&field, r))
        .collect::<Result<Vec<_>, _>>()?;
    let n = rows
        .first()
        .map(Vec::len)
        .ok_or("give at least one --row")?;
    let code = LinearCode::new(&field, n, &rows).map_err(err)?;
    Ok((field, code))
}

fn elem_bracket(field: &Field, e: Elem) -> String {
    let base = field.base().unwrap_or(field);
    Poly::new(base, field.coeffs(e)).to_bracket()
}

fn extend(
    args: &CodeArgs,
    j: usize,
    db: &CodeDatabase,
    budget: &DistanceBudget,
) -> Result<Output, String> {
    let (field, code) = code_from_rows(args)?;
    let e = extend_constituent(&code, j, Some(db), budget).map_err(err)?;
    let d = if e.code.is_zero() {
        0
    } else {
        e.code.min_distance(budget).map_err(err)?
    };
    let generator: Vec<Vec<String>> = e
        .code
        .generator()
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(|&x| elem_bracket(&field, x)).collect())
        .collect();
    let ext = Extension {
        q: args.q,
        n: e.code.n(),
        k: e.code.k(),
        d,
        source: e.source,
        generator,
    };
    let mut text = format!(
        "[{}, {}, {}] over F_{} ({})\n",
        ext.n, ext.k, ext.d, ext.q, ext.source
    );
    for row in &ext.generator {
        writeln!(text, "  {}", row.join(" ")).unwrap();
    }
    Output::new("extend", &ext, text)
}

fn mindist(
    args: &CodeArgs,
    random: Option<&[usize]>,
    seed: u64,
    strategy: Strategy,
    budget: &DistanceBudget,
) -> Result<Output, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (field, code) = match random {
        Some(&[n, k]) => {
            if k > n || n == 0 {
                return Err(format!("need 0 < k <= n, got n = {n}, k = {k}"));
            }
            let field = Field::galois(args.q).map_err(err)?;
            let q = field.order();
            let rows: Vec<Vec<Elem>> = (0..k)
                .map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect())
                .collect();
            let code = LinearCode::new(&field, n, &rows).map_err(err)?;
            (field, code)
        }
        _ => code_from_rows(args)?,
    };
    let (distance, word, exact) = match min_weight_codeword(&code, strategy, budget) {
        Ok((d, w)) => (d, w, true),
        Err(Error::Budget(_)) => {
            let (d, w) = low_weight_search(&code, SEARCH_ROUNDS, &mut rng).map_err(err)?;
            (d, w, false)
        }
        Err(e) => return Err(err(e)),
    };
    let out = Distance {
        q: args.q,
        n: code.n(),
        k: code.k(),
        distance,
        exact,
        codeword: word.iter().map(|&x| elem_bracket(&field, x)).collect(),
    };
    let mut text = if exact {
        format!(
            "[{}, {}, {}] over F_{}\n",
            out.n, out.k, out.distance, out.q
        )
    } else {
        format!(
            "[{}, {}] over F_{}: d <= {} (budget exceeded; lightest word from {SEARCH_ROUNDS} random rounds)\n",
            out.n, out.k, out.q, out.distance
        )
    };
    writeln!(text, "word: {}", out.codeword.join(" ")).unwrap();
    Output::new("mindist", &out, text)
}
