use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use boolspec::addcomb::{
    doubling_constant, even_zohar_f, even_zohar_s, is_sum_free, laba_check, sumset, Fraction,
};
use boolspec::harness::json::{DecompositionJson, FunctionJson, PointSetJson, SpectrumJson};
use boolspec::harness::{enumerate_verify, random_verify, RandomFamily};
use boolspec::spectrum::{granularity, sparsity, wht};
use boolspec::structure::{classify, decompose, generate, kill_number, Family};
use boolspec::{Error, Spectrum};

#[derive(Parser)]
#[command(name = "boolspec", version, about = "Fourier structure of Boolean functions on F2^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Walsh–Hadamard spectrum of a function.
    Spectrum {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        nonzero_only: bool,
    },
    /// Structure class of a function or spectrum.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Affine pieces of the support.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Granularity {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Sparsity {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Smallest codimension of an affine subspace on which f is constant.
    KillNumber {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Emit a member of a named family.
    Generate {
        #[arg(long, value_parser = Family::NAMES)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Additive combinatorics on point sets.
    Addcomb {
        #[command(subcommand)]
        op: AddcombOp,
    },
    /// Exhaustive (n <= 4) or randomized verification.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        random: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum AddcombOp {
    /// A + B, or A + A without `--with`.
    Sumset {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        with: Option<PathBuf>,
    },
    Doubling {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Sumfree {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Laba {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Even-Zohar's s and F(K) for K = num/den.
    Fk {
        #[arg(long)]
        num: u64,
        #[arg(long)]
        den: u64,
    },
}

enum Failure {
    Parse(String),
    OutOfScope,
    Violation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::OutOfScope => 3,
            Failure::Violation(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfScope => Failure::OutOfScope,
            Error::VerificationFailed(_) | Error::ClaimViolated(_) => Failure::Violation(e.to_string()),
            other => Failure::Parse(other.to_string()),
        }
    }
}

type CliResult = Result<String, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read_text(path)?).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SpectrumOrFunction {
    Spectrum(SpectrumJson),
    Function(FunctionJson),
}

fn read_spectrum(path: &Path) -> Result<Spectrum, Failure> {
    Ok(match read_json(path)? {
        SpectrumOrFunction::Spectrum(s) => s.to_spectrum()?,
        SpectrumOrFunction::Function(f) => wht(&f.to_function()?),
    })
}

fn read_function(path: &Path) -> Result<boolspec::BooleanFunction, Failure> {
    Ok(read_json::<FunctionJson>(path)?.to_function()?)
}

fn render<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Spectrum { input, nonzero_only } => {
            let f = read_function(&input)?;
            Ok(render(&SpectrumJson::from_spectrum(&wht(&f), nonzero_only)))
        }
        Command::Classify { input } => Ok(render(&classify(&read_spectrum(&input)?))),
        Command::Decompose { input } => {
            let d = decompose(&read_function(&input)?)?;
            Ok(render(&DecompositionJson::from_decomposition(&d)))
        }
        Command::Granularity { input } => Ok(render(&json!({ "granularity": granularity(&read_spectrum(&input)?) }))),
        Command::Sparsity { input } => Ok(render(&json!({ "sparsity": sparsity(&read_spectrum(&input)?) }))),
        Command::KillNumber { input } => Ok(render(&json!({ "kill_number": kill_number(&read_function(&input)?)? }))),
        Command::Generate { family, n, k } => {
            let f = generate(&Family::from_name(&family, n, k)?)?;
            Ok(render(&FunctionJson::from_function(&f)))
        }
        Command::Addcomb { op } => addcomb(op),
        Command::Verify { n, random, seed } => {
            let report = match random {
                Some(count) => random_verify(n, count, seed, RandomFamily::Mixed)?,
                None => enumerate_verify(n)?,
            };
            let value = render(&report);
            if report.is_clean() {
                Ok(value)
            } else {
                println!("{value}");
                Err(Failure::Violation(format!("{} violations", report.violations.len())))
            }
        }
    }
}

fn addcomb(op: AddcombOp) -> CliResult {
    let set = |p: &Path| -> Result<_, Failure> { Ok(read_json::<PointSetJson>(p)?.to_set()?) };
    match op {
        AddcombOp::Sumset { input, with } => {
            let a = set(&input)?;
            let b = match with {
                Some(p) => set(&p)?,
                None => a.clone(),
            };
            Ok(render(&PointSetJson::from_set(&sumset(&a, &b)?)))
        }
        AddcombOp::Doubling { input } => {
            let a = set(&input)?;
            Ok(render(&json!({ "doubling": doubling_constant(&a)?.to_string() })))
        }
        AddcombOp::Sumfree { input } => Ok(render(&json!({ "sum_free": is_sum_free(&set(&input)?) }))),
        AddcombOp::Laba { input } => Ok(render(&json!({ "verdict": laba_check(&set(&input)?)? }))),
        AddcombOp::Fk { num, den } => {
            let k = Fraction::new(num, den)?;
            Ok(render(&json!({
                "K": k.to_string(),
                "s": even_zohar_s(&k)?,
                "F": even_zohar_f(&k)?.to_string(),
            })))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(value) => {
            println!("{value}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Parse(msg) => eprintln!("error: {msg}"),
                Failure::OutOfScope => eprintln!("error: spectrum is out of scope"),
                Failure::Violation(msg) => eprintln!("verification failure: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
