//! The `polyzeta` command line.
//!
//! Exit status: 0 when every check passes, 1 when a verification fails or is
//! inconclusive, 2 on usage errors.

pub mod cache;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::families::{verify_eliminated_recurrences, Family, FamilyTable, Method, Relations};
use crate::mzv::{mzv_truncated, verify_identity, Identity, MzvIndex, NumericReport};
use crate::rings::rational::{self, q, Rational};
use crate::series_lab::{
    self, cdh_generating_check, lemma5_residual, ode_residual, Ode, ResidualReport,
};
use crate::zeros::{certify_table, Certificate, Witness};
use cache::TableCache;

#[derive(Parser, Debug)]
#[command(
    name = "polyzeta",
    version,
    about = "Polynomial families, series identities and MZV checks"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Table cache directory (default .polyzeta-cache, or $POLYZETA_CACHE_DIR)
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the table cache
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a polynomial family up to n
    Family {
        tag: String,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        alpha: Option<Rational>,
        #[arg(long, default_value = "rec")]
        method: String,
    },
    /// Generating series of a family through z^order
    Series {
        tag: String,
        #[arg(long)]
        order: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        alpha: Option<Rational>,
    },
    /// Run one verification
    Verify(Box<VerifyArgs>),
    /// Certify that roots in x = t³ lie on (−∞, 0]
    Zeros {
        family: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        alpha: Option<Rational>,
        /// First index to certify (default 2 for A, Atilde, B; 1 otherwise)
        #[arg(long)]
        from: Option<usize>,
    },
    /// Truncated multiple zeta value, e.g. `2~,1` or `{2,1}^3`
    Mzv {
        index: String,
        #[arg(long = "N")]
        n: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Id1,
    Id1a,
    Eighth,
    Lemma2,
    Ode,
    Lemma5,
    Cdh,
    Recurrences,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    target: Target,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long = "N")]
    n: Option<u64>,
    #[arg(long)]
    tol: Option<f64>,
    /// Factors kept in the product side of lemma2
    #[arg(long = "J")]
    j: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    /// c, b, a or a6 (default: all)
    #[arg(long)]
    ode: Option<String>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    alpha: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    t0: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    gamma: Option<Rational>,
    /// A, Aprime or Atilde (default: all)
    #[arg(long)]
    which: Option<String>,
    #[arg(long)]
    nmax: Option<usize>,
}

impl VerifyArgs {
    fn given(&self) -> Vec<&'static str> {
        let flags = [
            ("l", self.l.is_some()),
            ("N", self.n.is_some()),
            ("tol", self.tol.is_some()),
            ("J", self.j.is_some()),
            ("order", self.order.is_some()),
            ("ode", self.ode.is_some()),
            ("alpha", self.alpha.is_some()),
            ("t0", self.t0.is_some()),
            ("gamma", self.gamma.is_some()),
            ("which", self.which.is_some()),
            ("nmax", self.nmax.is_some()),
        ];
        flags.iter().filter(|f| f.1).map(|f| f.0).collect()
    }

    fn allowed(&self) -> &'static [&'static str] {
        match self.target {
            Target::Id1 | Target::Id1a | Target::Eighth => &["l", "N", "tol"],
            Target::Lemma2 => &["l", "N", "tol", "J"],
            Target::Ode => &["ode", "order"],
            Target::Lemma5 => &["alpha", "order"],
            Target::Cdh => &["alpha", "t0", "gamma", "order"],
            Target::Recurrences => &["which", "nmax"],
        }
    }
}

/// Sampled `(α, t0)` for the generating-function checks.
pub const CDH_SAMPLES: [(i64, i64, i64, i64); 5] = [
    (1, 2, 1, 3),
    (1, 1, 2, 5),
    (2, 1, -1, 7),
    (1, 3, 3, 2),
    (-5, 2, 1, 4),
];
/// Sampled `γ` for the three-parameter form.
pub const CDH_GAMMAS: [(i64, i64); 3] = [(1, 2), (2, 1), (-3, 5)];
/// Sampled `α` for the binomial-series identity.
pub const LEMMA5_ALPHAS: [(i64, i64); 10] = [
    (0, 1),
    (1, 3),
    (1, 2),
    (1, 1),
    (2, 1),
    (-1, 1),
    (-5, 2),
    (7, 4),
    (3, 5),
    (5, 1),
];

/// Default truncation and tolerance per identity and `l`.
pub fn numeric_defaults(id: Identity, l: usize) -> (u64, f64) {
    match (id, l) {
        (Identity::Id1, 1) => (1_000_000, 1e-4),
        (Identity::Id1, _) => (10_000_000, 5e-3),
        (Identity::Id1a, _) => (1_000_000, 1e-6),
        (Identity::Eighth, _) => (1_000_000, 1e-5),
        (Identity::Lemma2 { .. }, _) => (5000, 1e-2),
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInT3(_) | Error::NonRationalResult(_) => Failure::Check(e.to_string()),
            Error::ToleranceTooTight { .. } => Failure::Check(format!("inconclusive: {e}")),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

struct Ctx<'a> {
    json: bool,
    cache: TableCache,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit_json(&mut self, v: &impl Serialize) {
        let _ = writeln!(
            self.out,
            "{}",
            serde_json::to_string_pretty(v).expect("serializable")
        );
    }

    fn table(
        &mut self,
        family: &Family,
        nmax: usize,
        method: Method,
    ) -> crate::Result<FamilyTable> {
        let build = || FamilyTable::build(family.clone(), nmax, method);
        if method != Method::Rec {
            return build();
        }
        self.cache.get_or_build(family, nmax, build, self.err)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let cache = if cli.no_cache {
        TableCache::disabled()
    } else {
        let dir = cli
            .cache_dir
            .clone()
            .or_else(|| std::env::var_os(cache::DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(cache::DEFAULT_DIR));
        TableCache::new(dir)
    };
    let mut ctx = Ctx {
        json: cli.json,
        cache,
        out,
        err,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Check(msg)) => {
            let _ = writeln!(ctx.err, "verification failed: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, ctx: &mut Ctx<'_>) -> Outcome {
    match command {
        Command::Family {
            tag,
            n,
            alpha,
            method,
        } => {
            let family = Family::parse(&tag, alpha)?;
            let method: Method = method
                .parse()
                .map_err(|e: Error| Failure::Usage(format!("--method: {e}")))?;
            let table = ctx.table(&family, n, method)?;
            if ctx.json {
                ctx.emit_json(&table.to_json());
            } else {
                for (k, p) in table.entries().iter().enumerate() {
                    let _ = writeln!(ctx.out, "{family}_{k} = {p}");
                }
            }
            Ok(true)
        }
        Command::Series { tag, order, alpha } => {
            let family = Family::parse(&tag, alpha)?;
            let table = ctx.table(&family, order, Method::Rec)?;
            let s = series_lab::table_series(&table, order);
            if ctx.json {
                let coeffs: Vec<Vec<String>> = s.coeffs().iter().map(|p| p.to_strings()).collect();
                let mut v = json!({ "family": family.tag(), "order": order, "coeffs": coeffs });
                if let Some(a) = family.alpha() {
                    v["alpha"] = json!(rational::to_text(a));
                }
                ctx.emit_json(&v);
            } else {
                for (k, p) in s.coeffs().iter().enumerate() {
                    let _ = writeln!(ctx.out, "z^{k}: {p}");
                }
            }
            Ok(true)
        }
        Command::Verify(args) => verify(*args, ctx),
        Command::Zeros {
            family,
            nmax,
            alpha,
            from,
        } => {
            let family = Family::parse(&family, alpha)?;
            let from = from.unwrap_or(match family {
                Family::A | Family::Atilde | Family::B => 2,
                _ => 1,
            });
            if from > nmax {
                return Err(Failure::Usage(format!(
                    "--from {from} exceeds --nmax {nmax}"
                )));
            }
            let table = ctx.table(&family, nmax, Method::Rec)?;
            if let Some(n) = (from..=nmax).find(|&n| table.entries()[n].is_zero()) {
                return Err(Failure::Usage(format!(
                    "{family}_{n} is zero; choose a later --from"
                )));
            }
            let certs = certify_table(&table, from)?;
            let pass = certs.iter().all(|c| c.report.pass);
            if ctx.json {
                ctx.emit_json(&certs);
            } else {
                for c in &certs {
                    let _ = writeln!(ctx.out, "{}", certificate_line(c));
                }
            }
            Ok(pass)
        }
        Command::Mzv { index, n } => {
            let idx: MzvIndex = index.parse()?;
            let v = mzv_truncated(&idx, n)?;
            if ctx.json {
                ctx.emit_json(&json!({
                    "index": idx.to_string(),
                    "N": n,
                    "value": round15(v.value),
                    "tail_estimate": round15(v.tail_estimate),
                }));
            } else {
                let _ = writeln!(
                    ctx.out,
                    "zeta_N({idx}) = {:.15e}  (N = {n}, tail ~ {:.3e})",
                    v.value, v.tail_estimate
                );
            }
            Ok(true)
        }
    }
}

fn round15(v: f64) -> f64 {
    format!("{v:.14e}").parse().unwrap_or(v)
}

fn certificate_line(c: &Certificate) -> String {
    let r = &c.report;
    let name = match &c.alpha {
        Some(a) => format!("{}[{a}]_{}", c.family, c.n),
        None => format!("{}_{}", c.family, c.n),
    };
    let mut line = format!(
        "{} {name}: degree {} (squarefree {}), {} roots in (-inf, 0]",
        if r.pass { "PASS" } else { "FAIL" },
        r.degree,
        r.degree_sqfree,
        r.roots_in_halfline
    );
    match &r.witness {
        Some(Witness::PositiveRoot { lo, hi }) => {
            line += &format!(", positive root in ({lo}, {hi}]")
        }
        Some(Witness::NonReal { pairs }) => line += &format!(", {pairs} non-real pair(s)"),
        None => {}
    }
    line
}

fn verify(args: VerifyArgs, ctx: &mut Ctx<'_>) -> Outcome {
    let allowed = args.allowed();
    if let Some(bad) = args.given().into_iter().find(|f| !allowed.contains(f)) {
        return Err(Failure::Usage(format!(
            "--{bad} does not apply to this verification"
        )));
    }
    match args.target {
        Target::Id1 | Target::Id1a | Target::Eighth | Target::Lemma2 => {
            let id = match args.target {
                Target::Id1 => Identity::Id1,
                Target::Id1a => Identity::Id1a,
                Target::Eighth => Identity::Eighth,
                _ => Identity::Lemma2 {
                    j: args.j.unwrap_or(2000),
                },
            };
            let l = args.l.unwrap_or(1);
            let (n0, tol0) = numeric_defaults(id, l);
            let report = verify_identity(id, l, args.n.unwrap_or(n0), args.tol.unwrap_or(tol0))?;
            if ctx.json {
                ctx.emit_json(&report);
            } else {
                let _ = writeln!(ctx.out, "{}", numeric_line(&report));
            }
            Ok(report.pass)
        }
        Target::Ode => {
            let odes = match &args.ode {
                Some(s) => vec![s.parse::<Ode>()?],
                None => vec![Ode::C, Ode::B, Ode::A, Ode::ASixth],
            };
            let order = args.order.unwrap_or(12);
            let reports = odes
                .into_iter()
                .map(|ode| {
                    let r = ode_residual(ode, order)?;
                    Ok(ResidualReport::new(
                        "ode",
                        &[("equation", format!("{ode:?}"))],
                        &r,
                    ))
                })
                .collect::<crate::Result<Vec<_>>>()?;
            Ok(residuals(ctx, &reports))
        }
        Target::Lemma5 => {
            let alphas = match &args.alpha {
                Some(a) => vec![a.clone()],
                None => LEMMA5_ALPHAS.iter().map(|&(n, d)| q(n, d)).collect(),
            };
            let order = args.order.unwrap_or(20);
            let reports = alphas
                .iter()
                .map(|a| {
                    let r = lemma5_residual(a, order)?;
                    Ok(ResidualReport::new(
                        "lemma5",
                        &[("alpha", rational::to_text(a))],
                        &r,
                    ))
                })
                .collect::<crate::Result<Vec<_>>>()?;
            Ok(residuals(ctx, &reports))
        }
        Target::Cdh => {
            let order = args.order.unwrap_or(8);
            let pairs = match (&args.alpha, &args.t0) {
                (Some(a), Some(t)) => vec![(a.clone(), t.clone())],
                (None, None) => CDH_SAMPLES
                    .iter()
                    .map(|&(a, b, c, d)| (q(a, b), q(c, d)))
                    .collect(),
                _ => {
                    return Err(Failure::Usage(
                        "--alpha and --t0 must be given together".into(),
                    ))
                }
            };
            let gammas: Vec<Rational> = match &args.gamma {
                Some(g) => vec![g.clone()],
                None => CDH_GAMMAS.iter().map(|&(n, d)| q(n, d)).collect(),
            };
            let mut reports = Vec::new();
            for (a, t) in &pairs {
                if args.gamma.is_none() {
                    reports.push(cdh_generating_check(a, t, order, None)?);
                }
                for g in &gammas {
                    reports.push(cdh_generating_check(a, t, order, Some(g))?);
                }
            }
            Ok(residuals(ctx, &reports))
        }
        Target::Recurrences => {
            let which = match &args.which {
                Some(w) => vec![w.parse::<Relations>()?],
                None => vec![Relations::AEvenOdd, Relations::Aprime, Relations::Atilde],
            };
            let nmax = args.nmax.unwrap_or(20);
            let reports = which
                .into_iter()
                .map(|w| verify_eliminated_recurrences(w, nmax))
                .collect::<crate::Result<Vec<_>>>()?;
            let pass = reports.iter().all(|r| r.all_zero());
            if ctx.json {
                ctx.emit_json(&reports);
            } else {
                for r in &reports {
                    for c in &r.checks {
                        let _ = writeln!(ctx.out, "{} {} n={}", verdict(c.zero), c.relation, c.n);
                    }
                }
            }
            Ok(pass)
        }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn residuals(ctx: &mut Ctx<'_>, reports: &[ResidualReport]) -> bool {
    if ctx.json {
        ctx.emit_json(&reports);
    } else {
        for r in reports {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let mut line = format!(
                "{} {} [{}] order {}",
                verdict(r.zero),
                r.identity,
                params.join(" "),
                r.order
            );
            if let Some(k) = r.first_nonzero_order {
                line += &format!(", first nonzero residual at z^{k}");
            }
            let _ = writeln!(ctx.out, "{line}");
        }
    }
    reports.iter().all(|r| r.zero)
}

fn numeric_line(r: &NumericReport) -> String {
    format!(
        "{} {} l={} N={}: value {:.15e}, reference {:.15e}, |diff| {:.3e}, tail {:.3e}, tol {:.1e}",
        verdict(r.pass),
        r.identity,
        r.l,
        r.truncation,
        r.value,
        r.reference,
        r.difference.abs(),
        r.tail_estimate,
        r.tolerance
    )
}
