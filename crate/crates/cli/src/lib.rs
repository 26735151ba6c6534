//! Command-line front end for `qhecke`.
//!
//! [`run`] parses arguments and returns the exit code with everything that
//! would go to stdout and stderr, so the whole interface is testable in
//! process. The binary only adds the worker pool and the actual printing.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use qhecke::fock::{self, Crystal};
use qhecke::grdim::{self, ResidueWord, MAX_HEIGHT};
use qhecke::reptype::{self, RepType};
use qhecke::young::{self, Partition};
use qhecke::{CartanDatum, Error, QLaurent, RootSum};

mod selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_ENVELOPE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

/// Environment variable holding the worker count.
pub const THREADS_ENV: &str = "QHECKE_THREADS";

#[derive(Debug, Parser)]
#[command(name = "qhecke", version, about = "Finite quiver Hecke algebras of type C_l^(1) at level one")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Rank parameter l (at least 2).
    #[arg(long)]
    ell: usize,

    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Prefix the output with a generation timestamp.
    #[arg(long)]
    timestamp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graded dimension of R(beta), or of e(nu) R(beta) e(nu2).
    Dim {
        #[command(flatten)]
        common: Common,
        /// Coefficients of beta in alpha_0..alpha_l.
        #[arg(long, value_delimiter = ',', required_unless_present = "n_check")]
        beta: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',', requires = "nu2")]
        nu: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', requires = "nu")]
        nu2: Option<Vec<usize>>,
        /// Cross-check against the Fock space computation.
        #[arg(long)]
        verify: bool,
        /// Check dim R(n) = n! instead.
        #[arg(long, conflicts_with_all = ["beta", "nu", "nu2", "verify"])]
        n_check: Option<usize>,
    },
    /// Graded dimension of R(n), the sum over all beta of height n.
    DimN {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
    /// Standard tableaux of a shape with residues, deg and codeg.
    Tableaux {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',')]
        shape: Vec<usize>,
        /// Keep only tableaux with this residue sequence.
        #[arg(long, value_delimiter = ',')]
        nu: Option<Vec<usize>>,
    },
    /// The crystal B(Lambda_0) up to a given depth.
    Crystal {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        depth: usize,
        /// Keep only the vertices of weight Lambda_0 - beta.
        #[arg(long, value_delimiter = ',')]
        weight_filter: Option<Vec<u64>>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Representation type of R(beta), one record per --beta.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long, required = true)]
        beta: Vec<String>,
    },
    /// Dominant maximal weights of V(Lambda_0).
    Maxweights {
        #[command(flatten)]
        common: Common,
    },
    /// Run the internal invariant suites.
    Selftest {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, hide = true, value_parser = parse_override)]
        corrupt_d: Option<(usize, i64)>,
    },
}

fn parse_override(s: &str) -> std::result::Result<(usize, i64), String> {
    let (i, v) = s.split_once('=').ok_or("expected INDEX=VALUE")?;
    let i = i.trim().parse().map_err(|e| format!("{e}"))?;
    let v = v.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((i, v))
}

/// Exit code together with the captured streams.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Validation(String),
    Envelope(String),
    Invariant(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Validation(_) => EXIT_VALIDATION,
            Failure::Envelope(_) => EXIT_ENVELOPE,
            Failure::Invariant(_) => EXIT_INVARIANT,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::Envelope(m) | Failure::Invariant(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(_) | Error::DominantizeAbort { .. } => Failure::Invariant(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Ctx {
    out: String,
    err: String,
    code: i32,
}

impl Ctx {
    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn warn(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.err, "warning: {}", s.as_ref());
    }

    fn json(&mut self, v: &Value) {
        self.line(v.to_string());
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };

    let mut ctx = Ctx { out: String::new(), err: String::new(), code: EXIT_OK };
    if let Err(f) = dispatch(cli.command, &mut ctx) {
        let _ = writeln!(ctx.err, "error: {}", f.message());
        ctx.code = f.code();
    }
    Output { code: ctx.code, stdout: ctx.out, stderr: ctx.err }
}

fn dispatch(command: Command, ctx: &mut Ctx) -> Outcome {
    match command {
        Command::Dim { common, beta, nu, nu2, verify, n_check } => {
            let c = prelude(&common, Format::Text, &[Format::Text, Format::Json], ctx)?;
            match n_check {
                Some(n) => cmd_n_check(&c, n, ctx),
                None => {
                    let beta = parse_beta(&c, beta.as_deref().unwrap_or_default(), ctx)?;
                    cmd_dim(&c, &beta, nu, nu2, verify, fmt(&common, Format::Text), ctx)
                }
            }
        }
        Command::DimN { common, n } => {
            let c = prelude(&common, Format::Text, &[Format::Text, Format::Json], ctx)?;
            cmd_dim_n(&c, n, fmt(&common, Format::Text), ctx)
        }
        Command::Tableaux { common, shape, nu } => {
            let c = prelude(&common, Format::Text, &[Format::Text, Format::Json], ctx)?;
            cmd_tableaux(&c, shape, nu, fmt(&common, Format::Text), ctx)
        }
        Command::Crystal { common, depth, weight_filter, output } => {
            let c = prelude(&common, Format::Dot, &[Format::Dot, Format::Json], ctx)?;
            let filter = match weight_filter {
                Some(b) => Some(parse_beta(&c, &b, ctx)?),
                None => None,
            };
            cmd_crystal(&c, depth, filter, output, fmt(&common, Format::Dot), ctx)
        }
        Command::Classify { common, beta } => {
            let c = prelude(&common, Format::Json, &[Format::Text, Format::Json], ctx)?;
            let mut betas = Vec::with_capacity(beta.len());
            for raw in &beta {
                let coeffs = raw
                    .split(',')
                    .map(|s| s.trim().parse::<u64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Failure::Validation(format!("malformed beta '{raw}': {e}")))?;
                betas.push(parse_beta(&c, &coeffs, ctx)?);
            }
            cmd_classify(&c, &betas, fmt(&common, Format::Json), ctx)
        }
        Command::Maxweights { common } => {
            let c = prelude(&common, Format::Text, &[Format::Text, Format::Json], ctx)?;
            cmd_maxweights(&c, fmt(&common, Format::Text), ctx)
        }
        Command::Selftest { common, n, corrupt_d } => {
            let mut c = prelude(&common, Format::Text, &[Format::Text], ctx)?;
            if n > 8 {
                return Err(Failure::Envelope(format!("selftest supports n <= 8, got {n}")));
            }
            if let Some((i, v)) = corrupt_d {
                c.check_index(i)?;
                c = c.with_symmetrizer_override(i, v);
            }
            let report = selftest::run_suites(&c, n);
            for line in &report.lines {
                ctx.line(line);
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Invariant(format!("{} suite(s) failed", report.failures)))
            }
        }
    }
}

fn fmt(common: &Common, default: Format) -> Format {
    common.format.unwrap_or(default)
}

fn prelude(common: &Common, default: Format, allowed: &[Format], ctx: &mut Ctx) -> Result<CartanDatum, Failure> {
    let format = fmt(common, default);
    if !allowed.contains(&format) {
        return Err(Failure::Validation(format!("format {format:?} is not available for this command")));
    }
    let c = CartanDatum::new(common.ell)?;
    if common.timestamp {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        match format {
            Format::Dot => ctx.line(format!("// generated at unix time {secs}")),
            Format::Text => ctx.line(format!("# generated at unix time {secs}")),
            Format::Json => ctx.json(&json!({ "generated": secs })),
        }
    }
    Ok(c)
}

fn parse_beta(c: &CartanDatum, coeffs: &[u64], ctx: &mut Ctx) -> Result<RootSum, Failure> {
    let rank = c.rank();
    if coeffs.len() > rank {
        return Err(Failure::Validation(format!(
            "beta has {} entries but I has {rank} elements",
            coeffs.len()
        )));
    }
    let mut k = coeffs.to_vec();
    if k.len() < rank {
        ctx.warn(format!("beta has {} entries, padding with zeros to {rank}", k.len()));
        k.resize(rank, 0);
    }
    Ok(RootSum(k))
}

fn check_envelope(height: u64) -> Outcome {
    if height > MAX_HEIGHT {
        Err(Failure::Envelope(format!("|beta| = {height} exceeds the supported bound {MAX_HEIGHT}")))
    } else {
        Ok(())
    }
}

fn ints<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn qjson(p: &QLaurent) -> Value {
    serde_json::to_value(p).expect("polynomial serializes")
}

fn cmd_dim(
    c: &CartanDatum,
    beta: &RootSum,
    nu: Option<Vec<usize>>,
    nu2: Option<Vec<usize>>,
    verify: bool,
    format: Format,
    ctx: &mut Ctx,
) -> Outcome {
    check_envelope(beta.height())?;
    let words = match (nu, nu2) {
        (Some(a), Some(b)) => Some((ResidueWord::new(a, c.ell())?, ResidueWord::new(b, c.ell())?)),
        _ => None,
    };
    let dim_q = match &words {
        Some((a, b)) => grdim::graded_dim(c, beta, a, b)?,
        None => grdim::graded_dim_beta(c, beta)?,
    };
    let verified = if verify { Some(verify_dim(c, beta, words.as_ref(), &dim_q)?) } else { None };

    let dim = dim_q.eval_at_one();
    match format {
        Format::Json => {
            let mut v = json!({
                "beta": beta.coeffs(),
                "nu": words.as_ref().map(|(a, _)| a.seq().to_vec()),
                "nu_prime": words.as_ref().map(|(_, b)| b.seq().to_vec()),
                "dim_q": qjson(&dim_q),
                "dim": dim.to_string(),
            });
            if let Some(ok) = verified {
                v["verified"] = json!(ok);
            }
            ctx.json(&v);
        }
        _ => {
            ctx.line(format!("beta: {}", ints(beta.coeffs())));
            if let Some((a, b)) = &words {
                ctx.line(format!("nu: {}", ints(a.seq())));
                ctx.line(format!("nu_prime: {}", ints(b.seq())));
            }
            ctx.line(format!("dim_q: {dim_q}"));
            ctx.line(format!("dim_q json: {}", qjson(&dim_q)));
            ctx.line(format!("dim: {dim}"));
            if let Some(ok) = verified {
                ctx.line(format!("oracle: {}", if ok { "OK" } else { "MISMATCH" }));
            }
        }
    }
    match verified {
        Some(false) => Err(Failure::Invariant("tableau and Fock space computations disagree".into())),
        _ => Ok(()),
    }
}

/// Without words, R(β) is the sum of e(ν)R(β)e(ν′) over the words that occur
/// as residue sequences of tableaux; the others vanish.
fn verify_dim(
    c: &CartanDatum,
    beta: &RootSum,
    words: Option<&(ResidueWord, ResidueWord)>,
    dim_q: &QLaurent,
) -> Result<bool, Failure> {
    if let Some((a, b)) = words {
        return Ok(&grdim::oracle_graded_dim(c, beta, a, b)? == dim_q);
    }
    let mut live = std::collections::BTreeSet::new();
    for p in grdim::partitions_with_content(beta, c.ell()) {
        for t in young::standard_tableaux(&p) {
            live.insert(t.residue_sequence(c.ell()));
        }
    }
    let live: Vec<ResidueWord> = live
        .into_iter()
        .map(|w| ResidueWord::new(w, c.ell()))
        .collect::<qhecke::Result<_>>()?;
    let mut total = QLaurent::zero();
    for a in &live {
        for b in &live {
            total += grdim::oracle_graded_dim(c, beta, a, b)?;
        }
    }
    Ok(&total == dim_q)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

fn cmd_n_check(c: &CartanDatum, n: usize, ctx: &mut Ctx) -> Outcome {
    check_envelope(n as u64)?;
    let dim = grdim::graded_dim_n(c, n).eval_at_one();
    if dim == factorial(n) {
        ctx.line(format!("{dim} = {n}! OK"));
        Ok(())
    } else {
        ctx.line(format!("{dim} != {n}! = {} MISMATCH", factorial(n)));
        Err(Failure::Invariant(format!("dim R({n}) is not {n}!")))
    }
}

fn cmd_dim_n(c: &CartanDatum, n: usize, format: Format, ctx: &mut Ctx) -> Outcome {
    check_envelope(n as u64)?;
    let dim_q = grdim::graded_dim_n(c, n);
    let dim = dim_q.eval_at_one();
    match format {
        Format::Json => ctx.json(&json!({ "n": n, "dim_q": qjson(&dim_q), "dim": dim.to_string() })),
        _ => {
            ctx.line(format!("n: {n}"));
            ctx.line(format!("dim_q: {dim_q}"));
            ctx.line(format!("dim: {dim}"));
        }
    }
    Ok(())
}

fn cmd_tableaux(c: &CartanDatum, shape: Vec<usize>, nu: Option<Vec<usize>>, format: Format, ctx: &mut Ctx) -> Outcome {
    let p = Partition::new(shape)?;
    check_envelope(p.size() as u64)?;
    let tableaux: Vec<_> = match nu {
        Some(w) => young::standard_tableaux_with_residues(&p, &w, c.ell())?.collect(),
        None => young::standard_tableaux(&p).collect(),
    };
    for t in &tableaux {
        let res = t.residue_sequence(c.ell());
        let (d, cd) = (young::deg(c, t), young::codeg(c, t));
        match format {
            Format::Json => ctx.json(&json!({
                "shape": p.parts(),
                "rows": t.rows(),
                "residues": res,
                "deg": d,
                "codeg": cd,
            })),
            _ => {
                let rows: Vec<String> = t.rows().iter().map(|r| ints(r)).collect();
                ctx.line(format!("{}  res={}  deg={d}  codeg={cd}", rows.join("/"), ints(&res)));
            }
        }
    }
    if format == Format::Text {
        ctx.line(format!("count: {}", tableaux.len()));
    }
    Ok(())
}

fn cmd_crystal(
    c: &CartanDatum,
    depth: usize,
    filter: Option<RootSum>,
    output: Option<PathBuf>,
    format: Format,
    ctx: &mut Ctx,
) -> Outcome {
    check_envelope(depth as u64)?;
    let mut depth = depth;
    if let Some(b) = &filter {
        check_envelope(b.height())?;
        if (b.height() as usize) > depth {
            ctx.warn(format!("depth {depth} is below |beta| = {}, raising it", b.height()));
            depth = b.height() as usize;
        }
    }
    let full: Crystal = fock::generate_highest_weight_crystal(c, depth);
    let crystal = match &filter {
        Some(b) => full.filter_weight(b),
        None => full,
    };
    let body = match format {
        Format::Json => format!("{}\n", crystal.to_json()),
        _ => crystal.to_dot(),
    };
    match output {
        Some(path) => {
            std::fs::write(&path, body)
                .map_err(|e| Failure::Validation(format!("cannot write {}: {e}", path.display())))?;
            ctx.line(format!("wrote {} vertices to {}", crystal.len(), path.display()));
        }
        None => ctx.out.push_str(&body),
    }
    Ok(())
}

fn cmd_classify(c: &CartanDatum, betas: &[RootSum], format: Format, ctx: &mut Ctx) -> Outcome {
    use rayon::prelude::*;
    let results: Vec<qhecke::Result<reptype::Classification>> =
        betas.par_iter().map(|b| reptype::classify(c, b)).collect();
    for (beta, r) in betas.iter().zip(results) {
        let cl = r?;
        match format {
            Format::Json => ctx.json(&json!({
                "beta": beta.coeffs(),
                "ell": c.ell(),
                "status": cl.tag.as_str(),
                "i": cl.i,
                "k": cl.k,
                "dominant_word": cl.dominant_word,
            })),
            _ => {
                let detail = match (cl.tag, cl.i, cl.k) {
                    (RepType::Zero, _, _) => String::new(),
                    (_, Some(i), Some(k)) => format!(" (i={i}, k={k})"),
                    _ => String::new(),
                };
                ctx.line(format!("{}: {}{detail}", ints(beta.coeffs()), cl.tag));
            }
        }
    }
    Ok(())
}

fn cmd_maxweights(c: &CartanDatum, format: Format, ctx: &mut Ctx) -> Outcome {
    for m in reptype::max_dominant_weights(c)? {
        let beta = m.deficit(c);
        match format {
            Format::Json => ctx.json(&json!({
                "i": m.i,
                "weight": serde_json::to_value(&m.weight).expect("weight serializes"),
                "beta": beta.coeffs(),
            })),
            _ => ctx.line(format!("i={}  {}  beta={}", m.i, m.weight, ints(beta.coeffs()))),
        }
    }
    Ok(())
}
