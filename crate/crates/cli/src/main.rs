//! `habiro`: expansions, cross-checks, asymptotics and positivity certificates.

mod output;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use habiro::asym::{ratio_diagnostics, transform_ratio_diagnostics, AsymptoticProfile, Correction, Transform};
use habiro::families::{FamilySpec, SeriesCache, CACHE_DIR_ENV};
use habiro::qseries::{transform_g, transform_h, Series};
use habiro::signcheck::{infinite_family_check, verify_positivity, Verdict};
use habiro::thetaside::theta_xi;
use habiro::Error;
use num_bigint::BigInt;

use crate::output::Format;

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(name = "habiro", version, about = "Exact expansions of strange-identity q-series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of a family at q = 1 - u, 1/(1+q) or (1-q)/(1+q).
    Expand {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "one-minus-q")]
        transform: TransformArg,
        #[arg(short = 'N', long = "N")]
        n: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compare the direct expansion with the theta-side route.
    Crosscheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'N', long = "N")]
        n: usize,
        /// Replace `a` by `a + 1` on the theta side (must be detected).
        #[arg(long)]
        perturb_a: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Positivity certificates over a parameter range.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Print only the bounds N in the layout of the published tables.
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Ratios of exact coefficients to the asymptotic main term.
    Asym {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "one-minus-q")]
        transform: TransformArg,
        /// Comma-separated sample indices.
        #[arg(long, value_delimiter = ',', default_values_t = vec![25u64, 50, 100])]
        samples: Vec<u64>,
        #[arg(long, value_enum, default_value = "none")]
        correction: CorrectionArg,
        /// Working precision in bits for the log-domain evaluation.
        #[arg(long, default_value_t = 128)]
        precision: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Reproduce the published tables in their layout.
    Tables {
        /// Only this table (1-8).
        #[arg(long)]
        table: Option<u8>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Certify the infinite family l = (p1 m + p2)/q1 of torus-knot series.
    Remark {
        #[arg(long, allow_hyphen_values = true)]
        p1: i64,
        #[arg(long, allow_hyphen_values = true)]
        p2: i64,
        #[arg(long)]
        q1: i64,
        /// Members rechecked directly.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// A value, or an inclusive range `a..b` for `verify`.
    #[arg(long)]
    t: Option<ParamRange>,
    #[arg(long)]
    m: Option<ParamRange>,
    #[arg(long)]
    ell: Option<ParamRange>,
    #[arg(long)]
    k: Option<ParamRange>,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[arg(long, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Largest working precision, in bits, for sign decisions.
    #[arg(long, default_value_t = habiro::arith::expr::DEFAULT_PRECISION_CAP)]
    precision_cap: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(alias = "fishburn")]
    Kontsevich,
    Torus32t,
    Torus2,
    HabiroG,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransformArg {
    /// xi(n), the expansion in u = 1 - q.
    OneMinusQ,
    /// q -> 1/(1+q).
    #[value(alias = "g")]
    InvOnePlusQ,
    /// q -> (1-q)/(1+q).
    #[value(alias = "h")]
    Ratio,
}

impl TransformArg {
    fn name(self) -> &'static str {
        match self {
            TransformArg::OneMinusQ => "one-minus-q",
            TransformArg::InvOnePlusQ => "inv-one-plus-q",
            TransformArg::Ratio => "ratio",
        }
    }

    fn apply(self, xi: &Series) -> Series {
        match self {
            TransformArg::OneMinusQ => xi.clone(),
            TransformArg::InvOnePlusQ => transform_g(xi),
            TransformArg::Ratio => transform_h(xi),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CorrectionArg {
    None,
    Alpha1,
    FirstOrder,
}

#[derive(Clone, Copy, Debug)]
struct ParamRange {
    lo: u32,
    hi: u32,
}

impl std::str::FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |v: &str| v.trim().parse::<u32>().map_err(|e| format!("bad value {v:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(ParamRange { lo, hi })
    }
}

/// A failure with its exit code and message.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Undecided { .. } => EXIT_UNDECIDED,
            Error::InvalidParameter(_) => EXIT_USAGE,
            _ => EXIT_MISMATCH,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult = Result<u8, Failure>;

impl FamilyArgs {
    fn single(r: Option<ParamRange>, name: &str) -> Result<u32, Failure> {
        match r {
            Some(ParamRange { lo, hi }) if lo == hi => Ok(lo),
            Some(_) => Err(Failure::usage(format!("--{name} takes a single value here"))),
            None => Err(Failure::usage(format!("--{name} is required for this family"))),
        }
    }

    fn spec(&self) -> Result<FamilySpec, Failure> {
        let spec = match self.family {
            FamilyArg::Kontsevich => FamilySpec::Kontsevich,
            FamilyArg::Torus32t => FamilySpec::TorusKnot32t {
                t: Self::single(self.t, "t")?,
            },
            FamilyArg::Torus2 => FamilySpec::TorusKnot2 {
                m: Self::single(self.m, "m")?,
                ell: Self::single(self.ell, "ell")?,
            },
            FamilyArg::HabiroG => FamilySpec::HabiroG {
                k: Self::single(self.k, "k")?,
            },
        };
        spec.validate().map_err(|e| Failure::usage(e.to_string()))?;
        Ok(spec)
    }

    /// Every family in the requested ranges; a missing `--ell` means all `l < m`.
    fn specs(&self) -> Result<Vec<FamilySpec>, Failure> {
        let need = |r: Option<ParamRange>, name: &str| {
            r.ok_or_else(|| Failure::usage(format!("--{name} is required for this family")))
        };
        let out: Vec<FamilySpec> = match self.family {
            FamilyArg::Kontsevich => vec![FamilySpec::Kontsevich],
            FamilyArg::Torus32t => {
                let r = need(self.t, "t")?;
                (r.lo..=r.hi).map(|t| FamilySpec::TorusKnot32t { t }).collect()
            }
            FamilyArg::Torus2 => {
                let r = need(self.m, "m")?;
                let mut v = Vec::new();
                for m in r.lo..=r.hi {
                    let (lo, hi) = match self.ell {
                        Some(e) => (e.lo, e.hi.min(m.saturating_sub(1))),
                        None => (0, m.saturating_sub(1)),
                    };
                    v.extend((lo..=hi).map(|ell| FamilySpec::TorusKnot2 { m, ell }));
                }
                v
            }
            FamilyArg::HabiroG => {
                let r = need(self.k, "k")?;
                (r.lo..=r.hi).map(|k| FamilySpec::HabiroG { k }).collect()
            }
        };
        for s in &out {
            s.validate().map_err(|e| Failure::usage(e.to_string()))?;
        }
        if out.is_empty() {
            return Err(Failure::usage("empty parameter range"));
        }
        Ok(out)
    }
}

fn direct_expansion(spec: &FamilySpec, n: usize, cache_dir: &Option<PathBuf>) -> Result<Series, Error> {
    match cache_dir {
        Some(dir) => SeriesCache::new(dir).expand(spec, n),
        None => spec.expand(n),
    }
}

fn cmd_expand(family: &FamilyArgs, transform: TransformArg, n: usize, common: &CommonArgs) -> CliResult {
    let spec = family.spec()?;
    let xi = direct_expansion(&spec, n, &common.cache_dir)?;
    let coeffs = transform.apply(&xi).dense();
    print!("{}", output::coefficients(common.format, &spec, transform.name(), &coeffs));
    Ok(0)
}

fn cmd_crosscheck(family: &FamilyArgs, n: usize, perturb: bool, common: &CommonArgs) -> CliResult {
    let spec = family.spec()?;
    let direct = direct_expansion(&spec, n, &common.cache_dir)?.dense();
    let mut id = spec.identity()?;
    if perturb {
        id = id.with_a(id.a() + BigInt::from(1));
    }
    let report = match theta_xi(&id, n) {
        Ok(theta) => {
            let theta = theta.dense();
            let first = (0..=n).find(|&i| direct.get(i) != theta.get(i));
            match first {
                None => output::CrossCheck::Pass { n },
                Some(i) => output::CrossCheck::Mismatch {
                    index: i,
                    direct: direct[i].to_string(),
                    theta: theta.get(i).map_or_else(|| "missing".into(), |v| v.to_string()),
                },
            }
        }
        Err(Error::NonIntegral { index, value }) => output::CrossCheck::Mismatch {
            index,
            direct: direct.get(index).map_or_else(|| "missing".into(), |v| v.to_string()),
            theta: value,
        },
        Err(e) => return Err(e.into()),
    };
    print!("{}", report.render(common.format, &spec));
    Ok(if report.passed() { 0 } else { EXIT_MISMATCH })
}

fn cmd_verify(family: &FamilyArgs, table: bool, common: &CommonArgs) -> CliResult {
    let specs = family.specs()?;
    let verdicts = specs
        .iter()
        .map(|s| verify_positivity(s, common.precision_cap))
        .collect::<Result<Vec<_>, _>>()?;
    if table {
        print!("{}", tables::bound_table(&specs, &verdicts));
    } else {
        print!("{}", output::verdicts(common.format, &specs, &verdicts));
    }
    let code = if verdicts.iter().any(|v| v.verdict == Verdict::UndecidedAtPrecisionCap) {
        EXIT_UNDECIDED
    } else if verdicts.iter().any(|v| v.verdict != Verdict::ProvedPositive) {
        EXIT_MISMATCH
    } else {
        0
    };
    Ok(code)
}

fn cmd_asym(
    family: &FamilyArgs,
    transform: TransformArg,
    samples: &[u64],
    correction: CorrectionArg,
    precision: u32,
    common: &CommonArgs,
) -> CliResult {
    let spec = family.spec()?;
    if samples.is_empty() {
        return Err(Failure::usage("--samples is empty"));
    }
    let n = *samples.iter().max().expect("nonempty") as usize;
    // Beyond the Fishburn case the theta route is far cheaper at large n;
    // crosscheck exercises agreement with the direct sums.
    let xi = match spec {
        FamilySpec::Kontsevich => direct_expansion(&spec, n, &common.cache_dir)?,
        _ => theta_xi(&spec.identity()?, n)?,
    };
    let profile = AsymptoticProfile::for_family(&spec, precision)?;
    let rows = match transform {
        TransformArg::OneMinusQ => {
            let c = match correction {
                CorrectionArg::None => Correction::None,
                CorrectionArg::Alpha1 => Correction::Alpha1,
                CorrectionArg::FirstOrder => Correction::FirstOrder,
            };
            ratio_diagnostics(&xi, &profile, samples, c, precision)
        }
        other => {
            if !matches!(correction, CorrectionArg::None) {
                return Err(Failure::usage("corrections apply only to --transform one-minus-q"));
            }
            let which = if other == TransformArg::InvOnePlusQ {
                Transform::G
            } else {
                Transform::H
            };
            transform_ratio_diagnostics(&other.apply(&xi), &profile, which, samples, precision)
        }
    };
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    print!("{}", output::ratios(common.format, &spec, transform.name(), &rows));
    Ok(0)
}

fn cmd_tables(table: Option<u8>, common: &CommonArgs) -> CliResult {
    let which: Vec<u8> = match table {
        Some(t @ 1..=8) => vec![t],
        Some(t) => return Err(Failure::usage(format!("no table {t}; tables are 1-8"))),
        None => (1..=8).collect(),
    };
    let mut out = String::new();
    for t in which {
        out.push_str(&tables::render(t, common.precision_cap)?);
    }
    print!("{out}");
    Ok(0)
}

fn cmd_remark(p1: i64, p2: i64, q1: i64, samples: usize, common: &CommonArgs) -> CliResult {
    match infinite_family_check(p1, p2, q1, samples, common.precision_cap) {
        Ok(cert) => {
            print!("{}", output::remark(common.format, &cert));
            Ok(0)
        }
        Err(Error::NotCertified(why)) => {
            println!("not certified: {why}");
            Ok(EXIT_MISMATCH)
        }
        Err(e) => Err(e.into()),
    }
}

fn run(cli: Cli) -> CliResult {
    match &cli.command {
        Command::Expand {
            family,
            transform,
            n,
            common,
        } => cmd_expand(family, *transform, *n, common),
        Command::Crosscheck {
            family,
            n,
            perturb_a,
            common,
        } => cmd_crosscheck(family, *n, *perturb_a, common),
        Command::Verify { family, table, common } => cmd_verify(family, *table, common),
        Command::Asym {
            family,
            transform,
            samples,
            correction,
            precision,
            common,
        } => cmd_asym(family, *transform, samples, *correction, *precision, common),
        Command::Tables { table, common } => cmd_tables(*table, common),
        Command::Remark {
            p1,
            p2,
            q1,
            samples,
            common,
        } => cmd_remark(*p1, *p2, *q1, *samples, common),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
