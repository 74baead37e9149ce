use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lcsq_core::lcs::DEFAULT_RESOURCE_CAP;
use lcsq_core::verify::{
    default_lemma_checks, verify_instances, verify_lemma, DEFAULT_INSTANCES, DEFAULT_SEED,
};
use lcsq_core::{
    b_character, build_lcs_table_with, decompose, Arithmetic, Character, Error, LcsOptions, Lemma,
};

mod render;

use render::{Format, Rendered};

#[derive(Debug, Parser)]
#[command(
    name = "lcsq",
    version,
    about = "Lower central series quotients of free associative algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Arithmetic for rank computations.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Rational)]
    mode: Mode,

    /// Largest graded-piece dimension allowed.
    #[arg(long, global = true, env = "LCSQ_RESOURCE_CAP", default_value_t = DEFAULT_RESOURCE_CAP)]
    resource_cap: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Rational,
    PrimeField,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Default,
}

#[derive(Debug, Args)]
struct Instance {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    deg_max: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print dim B_m(A_n)[l] for 1 <= l <= deg_max.
    Dims(Instance),
    /// Decompose char B_m(A_n) into tensor-field modules F_D.
    Decompose(Instance),
    /// Run the verification pipeline or one property suite.
    Verify(VerifyArgs),
    /// Regenerate the golden fixtures, cross-checked against the dense oracle.
    Fixtures {
        /// Directory receiving one JSON file per default instance.
        #[arg(long, value_name = "DIR")]
        dir: PathBuf,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Run a named suite of instances and property checks.
    #[arg(long, value_enum, conflicts_with = "lemma")]
    suite: Option<Suite>,
    /// Run one property suite, by name or numeric id.
    #[arg(long)]
    lemma: Option<String>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), default_value_t = 6)]
    deg_max: u64,
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

enum Failure {
    Verification(String),
    Config(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NegativeMultiplicity { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Config(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Config(e.to_string())
    }
}

fn options(cli: &Cli) -> LcsOptions {
    LcsOptions {
        arithmetic: match cli.mode {
            Mode::Rational => Arithmetic::Rational,
            Mode::PrimeField => Arithmetic::PrimeField,
        },
        resource_cap: cli.resource_cap,
    }
}

fn dims(cli: &Cli, inst: &Instance) -> Result<Rendered, Failure> {
    let deg_max = inst.deg_max as usize;
    check_instance(inst.m, inst.n)?;
    let table = build_lcs_table_with(inst.n, inst.m, deg_max, options(cli))?;
    let b = b_character(&table, inst.m)?;
    Ok(render::dims(
        inst.m,
        inst.n,
        deg_max,
        &b.total_degree_series(),
    ))
}

fn decompose_cmd(cli: &Cli, inst: &Instance) -> Result<Rendered, Failure> {
    let deg_max = inst.deg_max as usize;
    check_instance(inst.m, inst.n)?;
    let table = build_lcs_table_with(inst.n, inst.m, deg_max, options(cli))?;
    let b = b_character(&table, inst.m)?;
    let dec = decompose(&Character::from(&b), deg_max)?;
    Ok(render::decomposition(inst.m, inst.n, deg_max, &dec))
}

fn check_instance(m: usize, n: usize) -> Result<(), Failure> {
    if m == 0 || n == 0 {
        return Err(Failure::Config(format!(
            "need m >= 1 and n >= 1, got m={m}, n={n}"
        )));
    }
    Ok(())
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<(Rendered, bool), Failure> {
    if let Some(id) = &args.lemma {
        let lemma: Lemma = id.parse()?;
        let n_list = args.n.map_or_else(|| vec![2, 3, 4], |n| vec![n]);
        let m_list = args.m.map_or_else(
            || match lemma {
                Lemma::Rearrangement => vec![5],
                _ => vec![2, 3],
            },
            |m| vec![m],
        );
        let checks = verify_lemma(lemma, &n_list, &m_list, args.seed)?;
        let pass = checks.values().all(|c| !c.is_fail());
        return Ok((render::lemma(lemma, &checks, pass), pass));
    }
    let (instances, lemmas) = match args.suite {
        Some(Suite::Default) => (
            DEFAULT_INSTANCES.to_vec(),
            Some(default_lemma_checks(args.seed)?),
        ),
        None => {
            let (Some(m), Some(n)) = (args.m, args.n) else {
                return Err(Failure::Config(
                    "verify needs --suite, --lemma, or both --m and --n".into(),
                ));
            };
            check_instance(m, n)?;
            (vec![(m, n, args.deg_max as usize)], None)
        }
    };
    let reports = verify_instances(&instances, options(cli))?;
    let pass = reports.iter().all(|r| r.passed())
        && lemmas
            .as_ref()
            .map_or(true, |l| l.values().all(|c| !c.is_fail()));
    Ok((render::verification(&reports, lemmas.as_ref(), pass), pass))
}

fn fixtures(cli: &Cli, dir: &Path) -> Result<Rendered, Failure> {
    if cli.mode != Mode::Rational {
        return Err(Failure::Config(
            "fixtures are only generated in rational mode".into(),
        ));
    }
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (m, n, deg_max) in DEFAULT_INSTANCES {
        let oracle =
            lcsq_oracle::b_dims(n, m, deg_max).map_err(|e| Failure::Config(e.to_string()))?;
        let table = build_lcs_table_with(n, m, deg_max, options(cli))?;
        let b = b_character(&table, m)?;
        let series: Vec<u64> = b.total_degree_series();
        let expected: Vec<u64> = oracle[m - 1].iter().map(|&d| d as u64).collect();
        if series != expected {
            return Err(Failure::Verification(format!(
                "pipeline {series:?} and oracle {expected:?} disagree for (m,n,deg_max)=({m},{n},{deg_max})"
            )));
        }
        let dec = decompose(&Character::from(&b), deg_max)?;
        let path = dir.join(render::fixture_name(m, n, deg_max));
        let body = render::fixture(&b, &dec);
        fs::write(&path, body)?;
        written.push(path.display().to_string());
    }
    Ok(render::written(&written))
}

fn emit(cli: &Cli, out: &Rendered) -> Result<(), Failure> {
    let text = out.to_format(cli.format);
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let (out, pass) = match &cli.command {
        Command::Dims(inst) => (dims(cli, inst)?, true),
        Command::Decompose(inst) => (decompose_cmd(cli, inst)?, true),
        Command::Verify(args) => verify(cli, args)?,
        Command::Fixtures { dir } => (fixtures(cli, dir)?, true),
    };
    emit(cli, &out)?;
    for name in &out.failing {
        eprintln!("failed: {name}");
    }
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
