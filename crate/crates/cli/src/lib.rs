//! Command-line front end for `qsl-core`: immanants, supersymmetric Schur
//! polynomials, the alpha/beta/gamma series and the verification suites.

pub mod format;
pub mod reports;

use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qsl_core::combinat::Partition;
use qsl_core::identities::alpha_beta_gamma;
use qsl_core::immanant::{ImmanantEngine, ImmanantError, ImmanantQuery};
use qsl_core::report::Report;
use qsl_core::suites::{cayley_hamilton_21_report, confluence_report, run_suite, Suite, SuiteConfig};
use qsl_core::superlinear::SuperSpaceCfg;
use qsl_core::symfun::super_schur;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use format::{Format, QSpec};

/// Environment variable capping the order of series coefficients.
pub const KMAX_VAR: &str = "QSL_KMAX";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad flags or inconsistent input: exit code 2.
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => f.write_str(s),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Parser, Debug)]
#[command(name = "qsl", version, about = "Quantum super immanants in A_q(Mat_{m|n})")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Dims {
    /// Even dimension.
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    /// Odd dimension.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
}

impl Dims {
    fn cfg(self) -> Result<SuperSpaceCfg, CliError> {
        if self.m + self.n == 0 {
            return Err(CliError::Usage("m + n must be at least 1".into()));
        }
        Ok(SuperSpaceCfg::new(self.m, self.n))
    }
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Specialize q to a nonzero rational, e.g. `2` or `3/2`.
    #[arg(long)]
    pub q: Option<QSpec>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the normal-ordered immanant `Imm_lambda(X^I_J)`.
    Imm {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        lambda: Partition,
        /// Row indices `I`, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        rows: Vec<usize>,
        /// Column indices `J`; defaults to the rows.
        #[arg(long, value_delimiter = ',')]
        cols: Option<Vec<usize>>,
        #[command(flatten)]
        out: Output,
    },
    /// Print the supersymmetric Schur polynomial `S_lambda(x; y)`.
    Schur {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        lambda: Partition,
        #[command(flatten)]
        out: Output,
    },
    /// Print `alpha_k`, `beta_k` or `gamma_k`.
    Series {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Run a verification suite; exit status 1 if any identity fails.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteName,
    #[command(flatten)]
    pub dims: Dims,
    /// Series order for macmahon and newton.
    #[arg(long)]
    pub order: Option<usize>,
    /// Largest degree r.
    #[arg(long)]
    pub rmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the confluence word generator.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random words for the confluence suite.
    #[arg(long, default_value_t = 200)]
    pub words: usize,
    /// Also evaluate the candidate (2|1) Cayley-Hamilton identity and report its residual.
    #[arg(long)]
    pub experimental_ch21: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Alpha,
    Beta,
    Gamma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Ybe,
    Hecke,
    Rtt,
    Macmahon,
    Newton,
    Gj,
    Littlewood1,
    Littlewood2,
    Littlewood3,
    Lmw,
    Hessenberg,
    Ch11,
    Kostant,
    Gt,
    Confluence,
    All,
}

/// What the binary prints and the status it exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn kmax_cap() -> Result<Option<usize>, CliError> {
    match std::env::var(KMAX_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{KMAX_VAR} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn check_cap(k: usize, what: &str) -> Result<(), CliError> {
    match kmax_cap()? {
        Some(cap) if k > cap => Err(CliError::Usage(format!("{what} {k} exceeds {KMAX_VAR}={cap}"))),
        _ => Ok(()),
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Imm {
            dims,
            lambda,
            rows,
            cols,
            out,
        } => {
            let cfg = dims.cfg()?;
            let cols = cols.unwrap_or_else(|| rows.clone());
            let query = ImmanantQuery {
                chi: qsl_core::immanant::Character::Irreducible(lambda.clone()),
                bra: rows,
                ket: cols,
            };
            let p = ImmanantEngine::new(cfg).immanant(&query).map_err(|e| match e {
                ImmanantError::SizeMismatch => CliError::Usage(format!(
                    "lambda = ({lambda}) needs {} row and column indices",
                    lambda.size()
                )),
                other => CliError::Usage(other.to_string()),
            })?;
            Ok(Outcome::ok(format::ncpoly(&p, out.format, out.q.as_ref())?))
        }
        Command::Schur { dims, lambda, out } => {
            dims.cfg()?;
            let p = super_schur(&lambda, dims.m, dims.n);
            Ok(Outcome::ok(format::spoly(
                &p,
                dims.m,
                dims.n,
                out.format,
                out.q.as_ref(),
            )?))
        }
        Command::Series { dims, kind, k, out } => {
            let cfg = dims.cfg()?;
            check_cap(k, "k")?;
            if k == 0 {
                return Err(CliError::Usage("k must be at least 1".into()));
            }
            let eng = ImmanantEngine::new(cfg);
            let bk = alpha_beta_gamma(&eng, k);
            let p = match kind {
                SeriesKind::Alpha => &bk.alpha[k],
                SeriesKind::Beta => &bk.beta[k],
                SeriesKind::Gamma => &bk.gamma[k],
            };
            Ok(Outcome::ok(format::ncpoly(p, out.format, out.q.as_ref())?))
        }
        Command::Verify(args) => verify(&args),
    }
}

fn core_suite(name: SuiteName) -> Option<Suite> {
    let s = name.to_possible_value()?;
    Suite::from_name(s.get_name())
}

/// `count` words of length 2 to 5 in the generators `x_ij`.
pub fn random_words(cfg: SuperSpaceCfg, count: usize, seed: u64) -> Vec<Vec<(usize, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = cfg.dim();
    (0..count)
        .map(|_| {
            let len = rng.gen_range(2..=5);
            (0..len).map(|_| (rng.gen_range(1..=d), rng.gen_range(1..=d))).collect()
        })
        .collect()
}

enum Job {
    Core(Suite),
    Confluence,
}

fn run_job(job: &Job, sc: &SuiteConfig, args: &VerifyArgs) -> Vec<Report> {
    match job {
        Job::Core(s) => run_suite(*s, sc),
        Job::Confluence => {
            let cfg = sc.cfg();
            vec![confluence_report(cfg, &random_words(cfg, args.words, args.seed))]
        }
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    args.dims.cfg()?;
    if let Some(order) = args.order {
        check_cap(order, "order")?;
        if order == 0 {
            return Err(CliError::Usage("order must be at least 1".into()));
        }
    }
    if args.rmax == Some(0) {
        return Err(CliError::Usage("rmax must be at least 1".into()));
    }
    let sc = SuiteConfig {
        m: args.dims.m,
        n: args.dims.n,
        rmax: args.rmax,
        order: args.order,
    };
    let jobs: Vec<Job> = match args.suite {
        SuiteName::All => Suite::ALL
            .iter()
            .map(|&s| Job::Core(s))
            .chain([Job::Confluence])
            .collect(),
        SuiteName::Confluence => vec![Job::Confluence],
        other => vec![Job::Core(core_suite(other).expect("every core suite has a name"))],
    };
    // one worker per suite, each with its own engines; results keep job order
    let mut reports: Vec<Report> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs.iter().map(|job| scope.spawn(|| run_job(job, &sc, args))).collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite worker panicked"))
            .collect()
    });
    if args.experimental_ch21 {
        reports.push(cayley_hamilton_21_report());
    }
    let name = args.suite.to_possible_value().expect("named").get_name().to_string();
    Ok(summarize(&name, &reports, args.format))
}

/// Exit status 0 iff every report passed, 1 otherwise.
pub fn summarize(suite: &str, reports: &[Report], fmt: Format) -> Outcome {
    let code = if reports.iter().all(Report::passed) { 0 } else { 1 };
    Outcome {
        stdout: reports::render(suite, reports, fmt),
        code,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_report_sets_exit_one() {
        let mut bad = Report::new("demo");
        bad.check(false, || "lhs = 1, rhs = 0".into());
        let out = summarize("demo", &[Report::new("ok"), bad], Format::Json);
        assert_eq!(out.code, 1);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["checks"][1]["status"], "fail");
        assert_eq!(v["checks"][1]["witness"], "lhs = 1, rhs = 0");
        assert!(v["checks"][0].get("witness").is_none());
        assert_eq!(summarize("demo", &[Report::new("ok")], Format::Text).code, 0);
    }

    #[test]
    fn words_are_reproducible() {
        let cfg = SuperSpaceCfg::new(2, 1);
        assert_eq!(random_words(cfg, 20, 7), random_words(cfg, 20, 7));
        assert_ne!(random_words(cfg, 20, 7), random_words(cfg, 20, 8));
        assert!(random_words(cfg, 50, 1)
            .iter()
            .flatten()
            .all(|&(i, j)| (1..=3).contains(&i) && (1..=3).contains(&j)));
    }
}
