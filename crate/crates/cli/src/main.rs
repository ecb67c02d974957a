use clap::{Args, Parser, Subcommand};
use curvkit::generators::{generate, BlockSpec, GeneratorKind, GeneratorSpec};
use curvkit::io::{parse_instance, parse_rational, serialize_instance, Meta};
use curvkit::report::{analyze_instance, sha256_hex, Outcome, Report};
use curvkit::suite::run_suite;
use curvkit::{Error, Rational};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const INPUT_ERROR: u8 = 1;
const THEOREM_FINDING: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "curvkit",
    version,
    about = "Exact curvature tensors and semi-symmetry certificates"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Refuse instances of larger dimension.
    #[arg(long, global = true, env = "CURVKIT_MAX_DIM", default_value_t = 8)]
    max_dim: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report; exits 0 unless an internal check disagrees.
    Analyze { file: PathBuf },
    /// Exits 0 iff the tensor is semi-symmetric and every certificate passes.
    Verify { file: PathBuf },
    /// Writes a generated instance.
    Generate(GenerateArgs),
    /// Jacobi identities of h̄(K) ⊕ V.
    Jacobi { file: PathBuf },
    /// Seeded instances with cross-checks.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(Args)]
struct GenerateArgs {
    /// JSON generator spec; the flags below are ignored when given.
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long, value_parser = parse_kind)]
    kind: Option<GeneratorKind>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// `flat:P,Q`, `constant:P,Q:LAMBDA` or `isotropic:P,Q`; repeatable.
    #[arg(long = "block", value_parser = parse_block)]
    blocks: Vec<BlockSpec>,
    /// `P,Q` for the product kind.
    #[arg(long, value_parser = parse_pair)]
    signature: Option<(usize, usize)>,
    #[arg(long, default_value_t = 0)]
    terms: usize,
    #[arg(long, value_parser = parse_rational)]
    epsilon: Option<Rational>,
    #[arg(long)]
    conjugate: bool,
    #[arg(long)]
    change_basis: bool,
    #[arg(long)]
    name: Option<String>,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_kind(s: &str) -> Result<GeneratorKind, String> {
    serde_json::from_value(serde_json::Value::String(s.replace('-', "_"))).map_err(|_| format!("unknown kind `{s}`"))
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s.split_once(',').ok_or_else(|| format!("expected P,Q, got `{s}`"))?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    Ok((num(p)?, num(q)?))
}

fn parse_block(s: &str) -> Result<BlockSpec, String> {
    let mut parts = s.split(':');
    let kind = parts.next().unwrap_or_default();
    let (positive, negative) = parse_pair(parts.next().ok_or("missing P,Q")?)?;
    let block = match kind {
        "flat" => BlockSpec::Flat { positive, negative },
        "isotropic" => BlockSpec::Isotropic { positive, negative },
        "constant" => BlockSpec::Constant {
            positive,
            negative,
            lambda: parse_rational(parts.next().ok_or("missing LAMBDA")?)?,
        },
        _ => return Err(format!("unknown block type `{kind}`")),
    };
    if parts.next().is_some() {
        return Err(format!("trailing fields in `{s}`"));
    }
    Ok(block)
}

/// Input and usage failures, printed and mapped to exit 1.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_report(path: &Path, max_dim: usize) -> Result<Report, Failure> {
    let text = read(path)?;
    let inst = parse_instance(&text)?;
    let dim = inst.space.dim();
    if dim > max_dim {
        return Err(Error::DimensionCap { dim, cap: max_dim }.into());
    }
    let mut r = analyze_instance(&inst);
    r.input_sha256 = Some(sha256_hex(text.as_bytes()));
    Ok(r)
}

fn emit_report(r: &Report, json: bool) {
    if json {
        print!("{}", r.to_json());
    } else {
        print!("{}", r.render_text());
    }
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { file } => {
            let r = load_report(&file, cli.max_dim)?;
            emit_report(&r, cli.json);
            Ok(if r.outcome == Outcome::Internal { INTERNAL } else { 0 })
        }
        Command::Verify { file } => {
            let r = load_report(&file, cli.max_dim)?;
            emit_report(&r, cli.json);
            Ok(match r.outcome {
                Outcome::Certified => 0,
                Outcome::NotSemisymmetric | Outcome::Violation => THEOREM_FINDING,
                Outcome::Internal => INTERNAL,
            })
        }
        Command::Jacobi { file } => {
            let r = load_report(&file, cli.max_dim)?;
            if cli.json {
                print!("{}", json_line(&r.jacobi));
            } else {
                println!("jacobi on h + V: {}", if r.jacobi.holds { "holds" } else { "fails" });
                for t in &r.jacobi.triples {
                    println!("  {} checked {} failed {}", t.kind, t.checked, t.failed);
                }
                if let Some(f) = &r.jacobi.first_failure {
                    println!("first failure: {f}");
                }
                println!("semi-symmetric: {}", if r.semisymmetric { "yes" } else { "no" });
            }
            Ok(if r.outcome == Outcome::Internal { INTERNAL } else { 0 })
        }
        Command::Generate(args) => {
            let spec = match &args.spec {
                Some(path) => serde_json::from_str::<GeneratorSpec>(&read(path)?)
                    .map_err(|e| Failure(format!("{}: {e}", path.display())))?,
                None => {
                    let kind = args
                        .kind
                        .ok_or_else(|| Failure("either --spec or --kind is required".into()))?;
                    let mut spec = GeneratorSpec::new(args.seed, kind, args.blocks.clone());
                    spec.signature = args.signature;
                    spec.terms = args.terms;
                    spec.epsilon = args.epsilon.clone();
                    spec.conjugate = args.conjugate;
                    spec.change_basis = args.change_basis;
                    spec
                }
            };
            let dim = match spec.signature {
                Some((p, q)) if spec.kind == GeneratorKind::Product => p + q,
                _ => spec.blocks.iter().map(BlockSpec::dim).sum(),
            };
            if dim > cli.max_dim {
                return Err(Error::DimensionCap { dim, cap: cli.max_dim }.into());
            }
            let (_, k) = generate(&spec)?;
            let meta = Meta {
                name: args.name.clone(),
                generator_spec: Some(spec),
            };
            let text = serialize_instance(&k, Some(&meta));
            match &args.output {
                Some(path) => std::fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Suite { seed, count } => {
            let s = run_suite(seed, count);
            if cli.json {
                print!("{}", json_line(&s));
            } else {
                print!("{}", s.render_text());
            }
            Ok(if s.has_internal() {
                INTERNAL
            } else if s.all_passed() {
                0
            } else {
                THEOREM_FINDING
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
