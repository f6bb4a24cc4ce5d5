//! The `pbij` command-line front end.
//!
//! [`run`] does all the work and returns the report text together with the
//! exit code, so the binary is a thin wrapper and tests can drive the CLI
//! in-process. Exit codes: 0 when every check passes, 1 when a mathematical
//! violation is found, 2 on usage or parse errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use pbij::baer::{cokernel, factorize, kernel};
use pbij::exact::{complete_3x3, noether_first, noether_second, NoetherIso};
use pbij::inverse_monoid::{
    homomorphism_violation, injectivity_violation, symmetric_inverse_monoid,
    verify_inverse_semigroup, wagner_preston, CayleyTable,
};
use pbij::laws::{run_all, Fault, LawConfig};
use pbij::text::{parse_cayley, parse_grid, parse_morphisms, write_grid, write_morphism};
use pbij::{classify, compose, Error, FinSet, PBij};

pub const MAX_SIZE_LIMIT: usize = 6;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pbij", version, about = "Partial bijections between finite sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest set size used by enumerations (at most 6).
    #[arg(long, global = true, default_value_t = 3)]
    max_size: usize,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Print counts only, without element listings.
    #[arg(long, global = true)]
    count_only: bool,

    /// Ambient set, as space-separated tokens.
    #[arg(long = "x", global = true, allow_hyphen_values = true)]
    x: Option<String>,

    /// First subset of the ambient set.
    #[arg(long = "x1", global = true, allow_hyphen_values = true)]
    x1: Option<String>,

    /// Second subset of the ambient set.
    #[arg(long = "x2", global = true, allow_hyphen_values = true)]
    x2: Option<String>,

    /// Swap a deliberately broken primitive into the law suite.
    #[arg(long, global = true, hide = true)]
    inject_fault: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Run every law suite up to --max-size.
    CheckAxioms,
    /// Report |I(n)| and idempotent counts for n up to --max-size.
    Enumerate,
    /// Kernel of each morphism in a file.
    Kernel { input: PathBuf },
    /// Cokernel of each morphism in a file.
    Cokernel { input: PathBuf },
    /// Mono-epi factorization of each morphism in a file.
    Factorize { input: PathBuf },
    /// (X − X1) − (X2 − X1) = X − X2 for X1 ⊆ X2 ⊆ X.
    Noether1,
    /// X2 − (X1 ∩ X2) = (X1 ∪ X2) − X1 for X1, X2 ⊆ X.
    Noether2,
    /// Complete the bottom row of a 3×3 grid.
    Grid33 { input: PathBuf },
    /// Wagner–Preston embedding of a Cayley table.
    WagnerPreston { input: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckAxioms => "check-axioms",
            Command::Enumerate => "enumerate",
            Command::Kernel { .. } => "kernel",
            Command::Cokernel { .. } => "cokernel",
            Command::Factorize { .. } => "factorize",
            Command::Noether1 => "noether1",
            Command::Noether2 => "noether2",
            Command::Grid33 { .. } => "grid33",
            Command::WagnerPreston { .. } => "wagner-preston",
        }
    }
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub max_size: usize,
    pub seed: u64,
    pub count_only: bool,
    pub x: Option<String>,
    pub x1: Option<String>,
    pub x2: Option<String>,
    pub fault: Option<Fault>,
}

impl RunConfig {
    pub fn input_path(&self) -> Option<&Path> {
        match &self.command {
            Command::Kernel { input }
            | Command::Cokernel { input }
            | Command::Factorize { input }
            | Command::Grid33 { input }
            | Command::WagnerPreston { input } => Some(input),
            _ => None,
        }
    }
}

/// Report text, diagnostics and exit code of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: message.into(),
            code: EXIT_USAGE,
        }
    }
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::NotInverseSemigroup(_) => Failure::Violation(format!("error: {e}\n")),
            _ => Failure::Usage(format!("error: {e}\n")),
        }
    }
}

/// Parses `args` (including the program name) and builds a [`RunConfig`].
pub fn parse_config<I, T>(args: I) -> Result<RunConfig, Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return Err(if code == EXIT_OK {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome::usage(text)
            });
        }
    };
    if cli.max_size > MAX_SIZE_LIMIT {
        return Err(Outcome::usage(format!(
            "error: --max-size {} exceeds the limit of {MAX_SIZE_LIMIT}\n",
            cli.max_size
        )));
    }
    let fault = match cli.inject_fault.as_deref() {
        None => None,
        Some(name) => Some(
            Fault::parse(name)
                .ok_or_else(|| Outcome::usage(format!("error: unknown fault `{name}`\n")))?,
        ),
    };
    Ok(RunConfig {
        command: cli.command,
        max_size: cli.max_size,
        seed: cli.seed,
        count_only: cli.count_only,
        x: cli.x,
        x1: cli.x1,
        x2: cli.x2,
        fault,
    })
}

/// Runs the CLI on `args`, never panicking on malformed input.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_config(args) {
        Ok(cfg) => execute(&cfg),
        Err(outcome) => outcome,
    }
}

pub fn execute(cfg: &RunConfig) -> Outcome {
    let mut out = format!(
        "# pbij {} max_size={} seed={}\n",
        cfg.command.name(),
        cfg.max_size,
        cfg.seed
    );
    let result = match &cfg.command {
        Command::CheckAxioms => cmd_check_axioms(cfg, &mut out),
        Command::Enumerate => cmd_enumerate(cfg, &mut out),
        Command::Kernel { input } => cmd_morphism_tools(input, Tool::Kernel, &mut out),
        Command::Cokernel { input } => cmd_morphism_tools(input, Tool::Cokernel, &mut out),
        Command::Factorize { input } => cmd_morphism_tools(input, Tool::Factorize, &mut out),
        Command::Noether1 => cmd_noether(cfg, true, &mut out),
        Command::Noether2 => cmd_noether(cfg, false, &mut out),
        Command::Grid33 { input } => cmd_grid33(input, &mut out),
        Command::WagnerPreston { input } => cmd_wagner_preston(input, &mut out),
    };
    match result {
        Ok(true) => Outcome {
            stdout: out,
            stderr: String::new(),
            code: EXIT_OK,
        },
        Ok(false) => Outcome {
            stdout: out,
            stderr: String::new(),
            code: EXIT_VIOLATION,
        },
        Err(Failure::Violation(msg)) => Outcome {
            stdout: out,
            stderr: msg,
            code: EXIT_VIOLATION,
        },
        Err(Failure::Usage(msg)) => Outcome {
            stdout: out,
            stderr: msg,
            code: EXIT_USAGE,
        },
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("error: cannot read {}: {e}\n", path.display())))
}

fn verdict(out: &mut String, label: &str, ok: bool) -> bool {
    let _ = writeln!(out, "{label}: {}", if ok { "ok" } else { "FAILED" });
    ok
}

fn cmd_check_axioms(cfg: &RunConfig, out: &mut String) -> Result<bool, Failure> {
    let outcomes = run_all(LawConfig {
        max_size: cfg.max_size,
        seed: cfg.seed,
        fault: cfg.fault,
    });
    let mut failed = 0;
    for o in &outcomes {
        match &o.failure {
            None => {
                let _ = writeln!(out, "PASS  {} ({} checked)", o.name, o.checked);
            }
            Some(cx) => {
                failed += 1;
                let _ = writeln!(out, "FAIL  {}", o.name);
                let _ = writeln!(out, "counterexample: {cx}");
            }
        }
    }
    let _ = writeln!(out, "summary: {} passed, {failed} failed", outcomes.len() - failed);
    Ok(failed == 0)
}

fn cmd_enumerate(cfg: &RunConfig, out: &mut String) -> Result<bool, Failure> {
    for n in 0..=cfg.max_size {
        let x = FinSet::range(n);
        let monoid = symmetric_inverse_monoid(&x);
        let idempotents = monoid.iter().filter(|f| classify(f).is_idempotent).count();
        let _ = writeln!(out, "|I({n})| = {}, idempotents = {idempotents}", monoid.len());
        if !cfg.count_only {
            for (i, f) in monoid.iter().enumerate() {
                out.push_str(&write_morphism(&format!("I{n}_{i}"), f));
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy)]
enum Tool {
    Kernel,
    Cokernel,
    Factorize,
}

fn cmd_morphism_tools(input: &Path, tool: Tool, out: &mut String) -> Result<bool, Failure> {
    let text = read_input(input)?;
    let morphisms = parse_morphisms(&text)?;
    if morphisms.is_empty() {
        return Err(Failure::Usage("error: parse error at line 1: no morphism found\n".into()));
    }
    let mut all_ok = true;
    for (name, f) in &morphisms {
        let ok = match tool {
            Tool::Kernel => {
                let k = kernel(f);
                let _ = writeln!(out, "kernel of {name}");
                let _ = writeln!(out, "object: {}", k.object);
                let kname = format!("ker_{name}");
                out.push_str(&write_morphism(&kname, &k.arrow));
                let fk = compose(f, &k.arrow)?;
                verdict(out, "mono", classify(&k.arrow).is_mono)
                    & verdict(out, &format!("{name} ∘ {kname} = 0"), fk.is_zero())
            }
            Tool::Cokernel => {
                let q = cokernel(f);
                let _ = writeln!(out, "cokernel of {name}");
                let _ = writeln!(out, "object: {}", q.object);
                let qname = format!("coker_{name}");
                out.push_str(&write_morphism(&qname, &q.arrow));
                let qf = compose(&q.arrow, f)?;
                verdict(out, "epi", classify(&q.arrow).is_epi)
                    & verdict(out, &format!("{qname} ∘ {name} = 0"), qf.is_zero())
            }
            Tool::Factorize => {
                let fac = factorize(f);
                let _ = writeln!(out, "factorization of {name}");
                let _ = writeln!(out, "via: {}", fac.via);
                let (p, b) = (format!("p_{name}"), format!("beta_{name}"));
                out.push_str(&write_morphism(&p, &fac.mono));
                out.push_str(&write_morphism(&b, &fac.epi));
                let pb = compose(&fac.mono, &fac.epi)?;
                verdict(out, &format!("{p} mono"), classify(&fac.mono).is_mono)
                    & verdict(out, &format!("{b} epi"), classify(&fac.epi).is_epi)
                    & verdict(out, &format!("{p} ∘ {b} = {name}"), pb == *f)
            }
        };
        out.push('\n');
        all_ok &= ok;
    }
    Ok(all_ok)
}

fn inline_set(flag: &str, value: Option<&String>) -> Result<FinSet, Failure> {
    let value = value.ok_or_else(|| Failure::Usage(format!("error: missing --{flag}\n")))?;
    FinSet::parse(value).map_err(|e| Failure::Usage(format!("error: --{flag}: {e}\n")))
}

fn cmd_noether(cfg: &RunConfig, first: bool, out: &mut String) -> Result<bool, Failure> {
    let x = inline_set("x", cfg.x.as_ref())?;
    let x1 = inline_set("x1", cfg.x1.as_ref())?;
    let x2 = inline_set("x2", cfg.x2.as_ref())?;
    let _ = writeln!(out, "X  = {x}");
    let _ = writeln!(out, "X1 = {x1}");
    let _ = writeln!(out, "X2 = {x2}");
    let (NoetherIso { lhs, rhs, iso }, labels) = if first {
        (noether_first(&x, &x1, &x2)?, ["(X − X1) − (X2 − X1)", "X − X2"])
    } else {
        (noether_second(&x, &x1, &x2)?, ["X2 − (X1 ∩ X2)", "(X1 ∪ X2) − X1"])
    };
    let _ = writeln!(out, "{} = {lhs}", labels[0]);
    let _ = writeln!(out, "{} = {rhs}", labels[1]);
    let equal = lhs == rhs;
    let _ = writeln!(out, "verdict: {}", if equal { "EQUAL" } else { "DIFFERENT" });
    out.push_str(&write_morphism("iso", &iso));
    let ok = verdict(out, "iso", classify(&iso).is_iso);
    Ok(equal && ok)
}

fn cmd_grid33(input: &Path, out: &mut String) -> Result<bool, Failure> {
    let text = read_input(input)?;
    let grid = parse_grid(&text)?;
    let (phi, psi) = complete_3x3(&grid)?;
    let done = pbij::exact::Grid3x3 {
        bottom: Some([phi, psi]),
        ..grid
    };
    out.push_str(&write_grid(&done));
    let ok = done.validate().is_ok();
    let _ = writeln!(out, "verdict: {}", if ok { "EXACT" } else { "NOT EXACT" });
    Ok(ok)
}

fn cmd_wagner_preston(input: &Path, out: &mut String) -> Result<bool, Failure> {
    let text = read_input(input)?;
    let table = parse_cayley(&text)?;
    let report = verify_inverse_semigroup(&table)?;
    let _ = writeln!(out, "semigroup {} ({} elements)", table.name(), table.len());
    let _ = writeln!(out, "associative: {}", report.associative);
    let _ = writeln!(out, "regular: {}", report.regular);
    let _ = writeln!(out, "idempotents commute: {}", report.idempotents_commute);
    let _ = writeln!(out, "inverses unique: {}", report.inverses_unique);
    for w in &report.counterexamples {
        let _ = writeln!(out, "witness: {w}");
    }
    if !report.is_inverse_semigroup() {
        let _ = writeln!(out, "verdict: NOT AN INVERSE SEMIGROUP");
        return Ok(false);
    }
    let emb = wagner_preston(&table)?;
    for (a, theta) in table.carrier().iter().zip(&emb.images) {
        out.push_str(&write_morphism(&format!("theta_{a}"), theta));
    }
    let hom = homomorphism_violation(&table, &emb);
    let inj = injectivity_violation(&table, &emb);
    let image_ok = CayleyTable::from_morphisms("image", &emb.images)
        .and_then(|t| verify_inverse_semigroup(&t))
        .map(|r| r.is_inverse_semigroup())
        .unwrap_or(false);
    let ok = verdict(out, "homomorphism", hom.is_none())
        & verdict(out, "injective", inj.is_none())
        & verdict(out, "image is an inverse semigroup", image_ok);
    let _ = writeln!(out, "verdict: {}", if ok { "EMBEDDED" } else { "FAILED" });
    Ok(ok)
}

/// Morphism blocks appearing in a report, in order.
pub fn report_morphisms(report: &str) -> Result<Vec<(String, PBij)>, Error> {
    let mut blocks = Vec::new();
    let mut current: Option<String> = None;
    for line in report.lines() {
        if line.starts_with("pbij ") {
            if let Some(b) = current.take() {
                blocks.push(b);
            }
            current = Some(format!("{line}\n"));
        } else if let Some(b) = current.as_mut() {
            if line.trim().is_empty() {
                blocks.push(current.take().unwrap());
            } else {
                b.push_str(line);
                b.push('\n');
            }
        }
    }
    blocks.extend(current);
    let mut all = Vec::new();
    for b in &blocks {
        all.extend(parse_morphisms(b)?);
    }
    Ok(all)
}
