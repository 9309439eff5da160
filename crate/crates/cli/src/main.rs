use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use htsasm::asm::{self, validate, ValidationReport};
use htsasm::detkit::{self, CheckMode, Lemma, LemmaCheckConfig};
use htsasm::identities::{sum_wgt, verify_with_table, TableEntry, WeightScheme, WeightTable};
use htsasm::paths::LatticePathConfig;
use htsasm::symfunc::Partition;
use htsasm::tableaux::ShiftedTableau;
use htsasm::{AsmKind, HalfTurnAsm, Limits, StrictPartition};

mod render;

/// Exit status for a failed identity.
const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;
const EXIT_INPUT: u8 = 4;

#[derive(Parser)]
#[command(name = "htsasm", version, about = "Half-turn symmetric alternating sign matrices: enumeration, weights and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every matrix of a shape, one JSON object per line.
    Enumerate(EnumerateArgs),
    /// Attach compass, tableau and lattice path forms to a matrix or tableau.
    Convert(ConvertArgs),
    /// Weight one matrix, or sum the weights of every matrix of a shape.
    Weigh(WeighArgs),
    /// Check the factorization of the weighted sum over a range of shapes.
    Verify(VerifyArgs),
    /// Draw a matrix as square ice, or a tableau as lattice paths, in SVG.
    Render(RenderArgs),
    /// Check one of the determinant or symmetric function identities.
    Lemma(LemmaArgs),
}

#[derive(Args, Clone)]
struct ShapeArgs {
    /// Matrix kind.
    #[arg(long, value_parser = parse_kind)]
    kind: Option<AsmKind>,
    #[arg(long)]
    n: Option<usize>,
    /// Strict partition, e.g. `3,2,1`.
    #[arg(long, value_parser = parse_strict)]
    lambda: Option<StrictPartition>,
    /// Partition with `lambda = mu + delta`, e.g. `2,1`.
    #[arg(long, value_parser = parse_partition)]
    mu: Option<Partition>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// JSON matrix or tableau; `-` reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Tableau in text form, rows separated by `/`, e.g. `1 1 2' / -2`.
    #[arg(long, conflicts_with = "input")]
    tableau: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Asm,
    Cpm,
    Tableau,
    Paths,
}

#[derive(Args)]
struct ConvertArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Representations to attach.
    #[arg(long = "to", value_enum, value_delimiter = ',', default_value = "cpm,tableau,paths")]
    targets: Vec<Target>,
    /// Kind used to read a tableau back as a matrix.
    #[arg(long, value_parser = parse_kind)]
    kind: Option<AsmKind>,
}

#[derive(Args)]
struct WeighArgs {
    #[arg(long, value_parser = parse_scheme)]
    scheme: WeightScheme,
    /// Matrix to weigh; without it, the sum over the shape is printed.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    shape: ShapeArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_scheme)]
    scheme: WeightScheme,
    #[arg(long, value_parser = parse_kind)]
    kind: Option<AsmKind>,
    /// A single `n`; overrides `--n-max`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    n_max: usize,
    /// A single `mu`; overrides `--mu-max`.
    #[arg(long, value_parser = parse_partition)]
    mu: Option<Partition>,
    /// Largest `|mu|` in the campaign.
    #[arg(long, default_value_t = 0)]
    mu_max: u32,
    /// Multiply one table entry (e.g. `upper/NS`) by `1 + eps`.
    #[arg(long, num_args = 0..=1, default_missing_value = "")]
    perturb: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Drawing {
    Ice,
    Paths,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    input: InputArgs,
    /// How to draw a matrix input; tableaux are always drawn as paths.
    #[arg(long = "as", value_enum, default_value = "ice")]
    drawing: Drawing,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Random,
}

#[derive(Args)]
struct LemmaArgs {
    /// One of deth, detm, hr, edet, edet-classes.
    #[arg(long)]
    lemma: String,
    /// Size; for `hr`, the number of extra variables.
    #[arg(long)]
    n: usize,
    /// Degree for `hr`.
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long, value_enum, default_value = "symbolic")]
    mode: ModeArg,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    trials: usize,
}

fn parse_kind(s: &str) -> Result<AsmKind, String> {
    s.parse()
}

fn parse_scheme(s: &str) -> Result<WeightScheme, String> {
    s.parse()
}

fn parse_parts(s: &str) -> Result<Vec<u32>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}"))).collect()
}

fn parse_strict(s: &str) -> Result<StrictPartition, String> {
    StrictPartition::new(parse_parts(s)?).map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::new(parse_parts(s)?).map_err(|e| e.to_string())
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<htsasm::Error> for Failure {
    fn from(e: htsasm::Error) -> Self {
        let code = match e {
            htsasm::Error::SizeLimitExceeded(_) => EXIT_LIMIT,
            htsasm::Error::Unsupported(_) => EXIT_USAGE,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Enumerate(a) => run_enumerate(a),
        Command::Convert(a) => run_convert(a),
        Command::Weigh(a) => run_weigh(a),
        Command::Verify(a) => run_verify(a),
        Command::Render(a) => run_render(a),
        Command::Lemma(a) => run_lemma(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn resolve_shape(s: &ShapeArgs) -> Result<StrictPartition, Failure> {
    let lambda = match (&s.lambda, &s.mu, s.n) {
        (Some(_), Some(_), _) => return Err(Failure::usage("give --lambda or --mu, not both")),
        (Some(l), None, _) => l.clone(),
        (None, Some(mu), Some(n)) => StrictPartition::from_mu(mu.parts(), n).map_err(|e| Failure::usage(e.to_string()))?,
        (None, Some(_), None) => return Err(Failure::usage("--mu needs --n")),
        (None, None, Some(n)) => StrictPartition::staircase(n),
        (None, None, None) => return Err(Failure::usage("give --n, --lambda or --mu")),
    };
    if let Some(n) = s.n {
        if lambda.len() != n {
            return Err(Failure::usage(format!("--lambda {lambda} has length {}, not n = {n}", lambda.len())));
        }
    }
    Ok(lambda)
}

fn print_json(v: &impl serde::Serialize) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(v).map_err(|e| Failure::input(e.to_string()))?;
    println!("{s}");
    Ok(())
}

fn run_enumerate(a: EnumerateArgs) -> CmdResult {
    let kind = a.shape.kind.ok_or_else(|| Failure::usage("--kind is required"))?;
    let lambda = resolve_shape(&a.shape)?;
    let all = asm::enumerate(kind, &lambda, &Limits::from_env())?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for m in &all {
        let line = match a.format {
            Format::Json => serde_json::to_string(m).map_err(|e| Failure::input(e.to_string()))?,
            Format::Text => m.to_string(),
        };
        match writeln!(out, "{line}") {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => break,
            r => r?,
        }
    }
    Ok(0)
}

/// A parsed `--input` or `--tableau`.
enum Input {
    Asm(HalfTurnAsm),
    Tableau(ShiftedTableau),
}

fn read_source(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    }
}

/// Reads a matrix, reporting every violated condition when it is not valid.
fn parse_asm(v: &Value) -> Result<HalfTurnAsm, Failure> {
    let kind: AsmKind = serde_json::from_value(v["kind"].clone()).map_err(|e| Failure::input(format!("kind: {e}")))?;
    let lambda: StrictPartition =
        serde_json::from_value(v["lambda"].clone()).map_err(|e| Failure::input(format!("lambda: {e}")))?;
    let entries: Vec<Vec<i64>> =
        serde_json::from_value(v["entries"].clone()).map_err(|e| Failure::input(format!("entries: {e}")))?;
    let n = v.get("n").and_then(Value::as_u64).map_or(lambda.len(), |n| n as usize);
    if let ValidationReport::Invalid(bad) = validate(&entries, kind, n, &lambda)? {
        let list = serde_json::to_string(&bad).unwrap_or_default();
        return Err(Failure::input(format!("invalid matrix: {list}")));
    }
    Ok(HalfTurnAsm::from_i64(kind, n, lambda, &entries)?)
}

fn read_input(a: &InputArgs) -> Result<Input, Failure> {
    if let Some(text) = &a.tableau {
        return Ok(Input::Tableau(text.parse()?));
    }
    let path = a.input.as_ref().ok_or_else(|| Failure::usage("give --input or --tableau"))?;
    let src = read_source(path)?;
    let v: Value = serde_json::from_str(&src).map_err(|e| Failure::input(format!("not JSON: {e}")))?;
    if let Some(text) = v.as_str() {
        return Ok(Input::Tableau(text.parse()?));
    }
    if v.get("entries").is_some() {
        return Ok(Input::Asm(parse_asm(&v)?));
    }
    if v.get("rows").is_some() {
        let t: ShiftedTableau = serde_json::from_value(v).map_err(|e| Failure::input(e.to_string()))?;
        return Ok(Input::Tableau(ShiftedTableau::new(t.lambda, t.rows)?));
    }
    Err(Failure::input("expected a matrix (with \"entries\") or a tableau (with \"rows\")"))
}

fn cpm_json(m: &HalfTurnAsm) -> Value {
    let c = m.to_compass();
    json!(c.rows.iter().map(|r| r.iter().map(|l| l.name()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>())
}

fn run_convert(a: ConvertArgs) -> CmdResult {
    let mut out = serde_json::Map::new();
    let want = |t: Target| a.targets.contains(&t);
    match read_input(&a.input)? {
        Input::Asm(m) => {
            out.insert("input".into(), json!("asm"));
            let t = ShiftedTableau::from_asm(&m);
            let back = t.to_asm(m.kind())?;
            if want(Target::Asm) {
                out.insert("asm".into(), json!(m));
            }
            if want(Target::Cpm) {
                out.insert("cpm".into(), cpm_json(&m));
                let c = m.to_compass();
                out.insert("cpm_round_trip".into(), json!(c.to_entries() == m.entries()));
            }
            if want(Target::Tableau) {
                out.insert("tableau".into(), json!(t.to_string()));
                out.insert("primings".into(), json!(t.primings(&m).len()));
            }
            if want(Target::Paths) {
                out.insert("paths".into(), json!(htsasm::paths::to_paths(&t)?));
            }
            out.insert("round_trip".into(), json!(back == m));
        }
        Input::Tableau(t) => {
            out.insert("input".into(), json!("tableau"));
            let kind = a.kind.unwrap_or(if t.rows.iter().flatten().any(|e| e.is_zero()) {
                AsmKind::OddBPrime
            } else {
                AsmKind::EvenB
            });
            let plain = t.unprimed();
            let m = plain.to_asm(kind).map_err(|e| Failure::input(e.to_string()));
            if want(Target::Tableau) {
                out.insert("tableau".into(), json!(t.to_string()));
            }
            if want(Target::Paths) {
                let cfg = LatticePathConfig::from_rows(t.n(), &t.rows)?;
                out.insert("non_intersecting".into(), json!(cfg.is_non_intersecting()));
                out.insert("paths".into(), json!(cfg));
            }
            if want(Target::Asm) || want(Target::Cpm) {
                let m = m?;
                if want(Target::Asm) {
                    out.insert("asm".into(), json!(m));
                }
                if want(Target::Cpm) {
                    out.insert("cpm".into(), cpm_json(&m));
                }
                let again = ShiftedTableau::from_asm(&m);
                let admits = again.primings(&m).contains(&t);
                out.insert("round_trip".into(), json!(again == plain && admits));
            }
        }
    }
    print_json(&Value::Object(out))?;
    Ok(0)
}

fn run_weigh(a: WeighArgs) -> CmdResult {
    let limits = Limits::from_env();
    if let Some(path) = &a.input {
        let v: Value = serde_json::from_str(&read_source(path)?).map_err(|e| Failure::input(format!("not JSON: {e}")))?;
        let m = parse_asm(&v)?;
        let table = WeightTable::new(a.scheme, m.n());
        let w = table.weigh(&m)?;
        print_json(&json!({ "scheme": a.scheme, "asm": m, "weight": w }))?;
        return Ok(0);
    }
    let lambda = resolve_shape(&a.shape)?;
    if let Some(kind) = a.shape.kind {
        check_kind(a.scheme, kind)?;
    }
    let table = WeightTable::new(a.scheme, lambda.len());
    let sum = sum_wgt(&table, &lambda, &limits)?;
    print_json(&json!({ "scheme": a.scheme, "kind": a.scheme.kind(), "lambda": lambda, "sum": sum }))?;
    Ok(0)
}

fn check_kind(scheme: WeightScheme, kind: AsmKind) -> Result<(), Failure> {
    if scheme.kind() != kind {
        return Err(Failure::usage(format!("scheme {scheme} weighs {} matrices, not {kind}", scheme.kind())));
    }
    Ok(())
}

fn find_entry(scheme: WeightScheme, name: &str) -> Result<TableEntry, Failure> {
    let all = TableEntry::all(scheme);
    if name.is_empty() {
        return Ok(all[0]);
    }
    all.iter().copied().find(|e| e.to_string().eq_ignore_ascii_case(name)).ok_or_else(|| {
        let names: Vec<String> = all.iter().map(|e| e.to_string()).collect();
        Failure::usage(format!("no table entry {name:?} in {scheme}; expected one of {}", names.join(", ")))
    })
}

fn run_verify(a: VerifyArgs) -> CmdResult {
    if let Some(kind) = a.kind {
        check_kind(a.scheme, kind)?;
    }
    let limits = Limits::from_env();
    let perturbed = a.perturb.as_deref().map(|p| find_entry(a.scheme, p)).transpose()?;
    let ns: Vec<usize> = match a.n {
        Some(n) => vec![n],
        None => (1..=a.n_max).collect(),
    };
    let mut reports = Vec::new();
    for &n in &ns {
        let mut table = WeightTable::new(a.scheme, n);
        if let Some(e) = perturbed {
            table.perturb(e);
        }
        let mus = match &a.mu {
            Some(mu) if mu.len() <= n => vec![mu.clone()],
            Some(_) => Vec::new(),
            None => Partition::all_up_to(a.mu_max, n),
        };
        for mu in mus {
            reports.push(verify_with_table(&table, &mu, &limits)?);
        }
    }
    let ok = reports.iter().all(|r| r.equal);
    match a.format {
        Format::Json => print_json(&json!({ "scheme": a.scheme, "kind": a.scheme.kind(), "ok": ok, "checks": reports }))?,
        Format::Text => {
            for r in &reports {
                println!("{r}");
            }
            println!("{}", if ok { "all equal" } else { "INEQUALITY FOUND" });
        }
    }
    Ok(if ok { 0 } else { EXIT_MISMATCH })
}

fn run_render(a: RenderArgs) -> CmdResult {
    let svg = match (read_input(&a.input)?, a.drawing) {
        (Input::Asm(m), Drawing::Ice) => render::square_ice_svg(&m),
        (Input::Asm(m), Drawing::Paths) => htsasm::paths::to_paths(&ShiftedTableau::from_asm(&m))?.to_svg(),
        (Input::Tableau(t), _) => LatticePathConfig::from_rows(t.n(), &t.rows)?.to_svg(),
    };
    match &a.out {
        Some(path) => fs::write(path, svg)?,
        None => print!("{svg}"),
    }
    Ok(0)
}

fn run_lemma(a: LemmaArgs) -> CmdResult {
    let lemma = match a.lemma.to_ascii_lowercase().as_str() {
        "hr" => Lemma::Hr { r: a.r },
        other => other.parse::<Lemma>()?,
    };
    let mode = match a.mode {
        ModeArg::Symbolic => CheckMode::Symbolic,
        ModeArg::Random => CheckMode::RandomEval { count: a.trials, seed: a.seed },
    };
    let report = detkit::check(&LemmaCheckConfig { n: a.n, mode, lemma })?;
    print_json(&report)?;
    Ok(if report.ok { 0 } else { EXIT_MISMATCH })
}
