use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use charnum_core::bundle::{construct_m4, fiber_pontryagin, m4_model, RootSystemData, DEFAULT_CAP};
use charnum_core::lattice::{
    compound_check, conjecture_sweep, decompose, decompose_rational, divisibility_theorems,
    lambda2_three_adic, modified_signature_check, signature_two_adic, SweepRow, TheoremCheck,
};
use charnum_core::manifold::{builtin, Manifold, BUILTIN_NAMES};
use charnum_core::qforms::{witten_direct, witten_modular};
use charnum_core::twist::{twisted_ahat, twisted_sig};
use charnum_core::verify::{run_all, run_suite, SUITES};
use charnum_core::{Error, TwistExpr};

#[derive(Parser)]
#[command(name = "charnum", version, about = "Exact characteristic numbers of closed manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites.
    #[command(group(ArgGroup::new("which").required(true).args(["all", "suite"])))]
    Verify {
        #[arg(long)]
        all: bool,
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: Option<String>,
    },
    /// Evaluate a genus on a manifold.
    Eval {
        /// Built-in name or path to a JSON manifest.
        #[arg(long)]
        manifold: String,
        #[arg(long, value_enum)]
        genus: Genus,
        /// Twist such as `T^2*L^1*S^3`; `1` is the trivial bundle.
        #[arg(long, default_value = "1")]
        twist: String,
        /// Highest power of q printed for the Witten genus.
        #[arg(long, default_value_t = 5)]
        order: usize,
    },
    /// Borel-Hirzebruch computations for the F4 fiber bundle.
    #[command(group(ArgGroup::new("dump").required(true).args(["dump_fiber_class", "dump_m4"])))]
    Bh {
        #[arg(long)]
        dump_fiber_class: bool,
        #[arg(long)]
        dump_m4: bool,
    },
    /// Divisibility statements on the 24-dimensional String lattice.
    Divisibility {
        #[arg(long, value_enum)]
        theorem: Option<Theorem>,
    },
    /// Twisted Ahat and signature of M1 over T^i L^j S^k.
    Sweep {
        #[arg(long = "max", default_value_t = 5)]
        max_total: u32,
        #[arg(long = "mod", default_value_t = 24)]
        modulus: u64,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Coordinates of a 24-dimensional String class in the basis M1..M4.
    Decompose {
        /// Built-in name or path to a JSON manifest.
        #[arg(long)]
        manifold: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Genus {
    Ahat,
    Sig,
    Witten,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "1.2")]
    Signature,
    #[value(name = "1.4")]
    ModifiedSignature,
    #[value(name = "1.5")]
    TwistedSignature,
    #[value(name = "compound")]
    Compound,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

/// Failure modes with distinct exit codes.
enum Failure {
    /// Bad input: unreadable or invalid manifest, bad flag value.
    Input(anyhow::Error),
    /// A requested check ran and failed.
    Check,
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::Usage(_) | Error::Parse(_)) => Failure::Input(e),
            _ => Failure::Other(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::new(e))
    }
}

type CliResult = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Verify { all, suite } => verify(all, suite),
        Command::Eval { manifold, genus, twist, order } => eval(&manifold, genus, &twist, order),
        Command::Bh { dump_fiber_class, .. } => {
            if dump_fiber_class {
                dump_fiber()
            } else {
                dump_m4()
            }
        }
        Command::Divisibility { theorem } => divisibility(theorem),
        Command::Sweep { max_total, modulus, format } => sweep(max_total, modulus, format),
        Command::Decompose { manifold } => decompose_cmd(&manifold),
    }
}

fn load_manifold(source: &str) -> std::result::Result<Manifold, Failure> {
    if BUILTIN_NAMES.contains(&source) {
        return builtin(source).map_err(|e| Failure::Other(anyhow!(e).context(format!("built-in {source}"))));
    }
    let path = Path::new(source);
    let text = std::fs::read_to_string(path).map_err(|e| {
        Failure::Input(anyhow!(
            "cannot read manifest {source:?} ({e}); built-in names are {}",
            BUILTIN_NAMES.join(", ")
        ))
    })?;
    Manifold::from_json(&text)
        .map_err(|e| Failure::Input(anyhow!(e).context(format!("bad manifest {source}"))))
}

fn cap_from_env() -> std::result::Result<u32, Failure> {
    match std::env::var("CHARNUM_CAP") {
        Err(_) => Ok(DEFAULT_CAP),
        Ok(v) => v
            .trim()
            .parse::<u32>()
            .ok()
            .filter(|&c| c >= 1)
            .ok_or_else(|| Failure::Input(anyhow!("CHARNUM_CAP must be a positive integer, got {v:?}"))),
    }
}

fn verify(all: bool, suite: Option<String>) -> CliResult {
    let results = if all {
        run_all()?
    } else {
        run_suite(suite.as_deref().expect("clap enforces one of --all/--suite"))?
    };
    let failed = results.iter().filter(|r| !r.passed).count();
    for r in &results {
        println!("{}", r.line());
    }
    println!("{} checks, {} passed, {} failed", results.len(), results.len() - failed, failed);
    if failed > 0 {
        return Err(Failure::Check);
    }
    Ok(())
}

fn eval(source: &str, genus: Genus, twist: &str, order: usize) -> CliResult {
    let manifold = load_manifold(source)?;
    let nums = manifold.numbers();
    let expr: TwistExpr = twist.parse()?;
    match genus {
        Genus::Ahat | Genus::Sig => {
            let ch = expr.character(nums.dim())?;
            let value = match genus {
                Genus::Ahat => twisted_ahat(&nums, &ch)?,
                _ => twisted_sig(&nums, &ch)?,
            };
            println!("{value}");
        }
        Genus::Witten => {
            if !expr.factors().is_empty() {
                return Err(Failure::Input(anyhow!("--twist does not apply to the Witten genus")));
            }
            let modular = witten_modular(&nums, order)?;
            let direct = witten_direct(&nums, order.min(2))?;
            for n in 0..=order {
                println!("q^{n}\t{}", modular.coeff(n));
            }
            if (0..=order.min(2)).any(|n| direct.coeff(n) != modular.coeff(n)) {
                eprintln!("direct expansion disagrees with the modular form through q^2");
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn dump_fiber() -> CliResult {
    let cap = cap_from_env()?;
    let class = fiber_pontryagin(&RootSystemData::f4_spin9(), cap)?;
    for w in 0..=cap {
        println!("weight {w}: {}", class.weight_part(w));
    }
    Ok(())
}

fn dump_m4() -> CliResult {
    let c = construct_m4(4)?;
    let r = &c.ring;
    for (i, q) in c.q_images.iter().enumerate() {
        println!("f*(q{}) = {}", i + 1, r.format(q));
    }
    for (i, p) in c.p_images.iter().enumerate() {
        println!("f*(p{}) = {}", i + 1, r.format(p));
    }
    for k in 1..=6 {
        println!("p{k}(M4) = {}", r.format(&r.degree_part(&c.total_pont, 4 * k)));
    }
    let m4 = m4_model()?;
    for (lambda, value) in m4.numbers().entries() {
        println!("<p[{lambda}], [M4]> = {value}");
    }
    println!("Sig(M4) = {}", m4.signature()?);
    Ok(())
}

fn divisibility(theorem: Option<Theorem>) -> CliResult {
    let checks: Vec<TheoremCheck> = match theorem {
        None => divisibility_theorems()?,
        Some(Theorem::Signature) => signature_two_adic()?,
        Some(Theorem::ModifiedSignature) => modified_signature_check()?,
        Some(Theorem::TwistedSignature) => lambda2_three_adic(&[1, 2])?,
        Some(Theorem::Compound) => compound_check(&[2, 3, 5, 41], 1)?,
    };
    let mut ok = true;
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!("{status} {}: {} | {}", c.name, c.claim, c.computed);
        ok &= c.passed;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn sweep(max_total: u32, modulus: u64, format: Format) -> CliResult {
    if modulus == 0 {
        return Err(Failure::Input(anyhow!("--mod must be positive")));
    }
    let rows: Vec<SweepRow> = conjecture_sweep(max_total, modulus)?;
    match format {
        Format::Tsv => {
            println!("{}", SweepRow::tsv_header());
            for row in &rows {
                println!("{}", row.to_tsv());
            }
        }
        Format::Json => {
            let text = serde_json::to_string_pretty(&rows).context("serializing sweep")?;
            println!("{text}");
        }
    }
    let bad = rows.iter().filter(|r| !r.divisible()).count();
    eprintln!("{} rows, {} not divisible by {modulus}", rows.len(), bad);
    if bad > 0 {
        return Err(Failure::Check);
    }
    Ok(())
}

fn decompose_cmd(source: &str) -> CliResult {
    let manifold = load_manifold(source)?;
    let nums = manifold.numbers();
    match decompose(&nums) {
        Ok(x) => {
            println!("{x}");
            Ok(())
        }
        Err(Error::NotIntegral(_)) => {
            let coords = decompose_rational(&nums)?;
            let text: Vec<String> = coords.iter().map(ToString::to_string).collect();
            println!("({})", text.join(", "));
            eprintln!("rational coordinates: the numbers are not those of a String manifold");
            Err(Failure::Check)
        }
        Err(e @ (Error::NotString(_) | Error::Usage(_))) => {
            Err(Failure::Input(anyhow!(e).context(format!("cannot decompose {source}"))))
        }
        Err(e) => Err(Failure::Other(anyhow!(e))),
    }
}
