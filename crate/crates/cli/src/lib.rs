//! The `ninf` command line: `gen`, `verify`, `certify`, `search` and `plan`.
//!
//! Exit codes: 0 success, 1 property violated or object unsupported, 2 usage
//! or parse error, 3 search budget exhausted.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ninf_core::certify::{
    certify_x_member, check_corrupting_pair, check_properties, find_cycle_tuple, CertLevel, CorrupterData,
    CycleTuple, Report, XMember,
};
use ninf_core::construct::{
    build_hypercube_with, build_square_with, plan_order, recipe_for, search_ninf, Recipe, SEARCH_BUDGET,
};
use ninf_core::verify::{find_intercalate, find_proper_subhypercube, find_proper_subsquare, SubBox};
use ninf_core::{Hypercube, LatinSquare, PerturbedSquare};
use serde_json::{json, Map, Value};

pub mod cache;
pub mod format;

use cache::{ArtifactRecord, Cache};
use format::{parse_grid, Format, Object};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<ninf_core::Error> for CliError {
    fn from(e: ninf_core::Error) -> Self {
        match e {
            ninf_core::Error::BudgetExhausted(_) => CliError::Budget(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ninf", version, about = "Construct and certify Latin squares and hypercubes without proper subsquares")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum VerifyLevel {
    None,
    Latin,
    Ninf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Latin,
    Ninf,
    Intercalates,
    Hypercube,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct an N∞ Latin square (dim 2) or hypercube
    Gen {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Re-check applied to the object before it is written
        #[arg(long, value_enum, default_value = "ninf")]
        verify: VerifyLevel,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for orders that need the stochastic search
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = SEARCH_BUDGET)]
        budget: u64,
        /// Neither read nor write the artifact cache
        #[arg(long)]
        no_cache: bool,
    },
    /// Check a square or hypercube read from a file (`-` for stdin)
    Verify {
        input: String,
        #[arg(long, value_enum, default_value = "ninf")]
        mode: VerifyMode,
    },
    /// Certify a corrupting pair or a member of the recursion family
    Certify {
        #[command(subcommand)]
        what: CertifyCommand,
    },
    /// Seeded annealing search for an N∞ square
    Search {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = SEARCH_BUDGET)]
        max_iters: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the decomposition 8^i * 9^k * n' used to build order n
    Plan {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CertifyCommand {
    /// Corrupting-pair clauses and Properties 2-7 for squares A and B
    Pair {
        a: String,
        b: String,
        /// One-based cycle tuple i,j,l1,l2,l3,k; searched for when absent
        #[arg(long, value_delimiter = ',')]
        tuple: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Conditions (i)-(iii) for a square with a shift
    Xmember {
        input: String,
        #[arg(long, default_value_t = 1)]
        shift: usize,
        #[arg(long, default_value = "fully_verified")]
        level: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut io = Io { stdin, stdout, stderr };
    match dispatch(cli.command, &mut io) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(io.stderr, "{e}");
            e.code()
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, path: &str) -> Result<String, CliError> {
        let mut text = String::new();
        if path == "-" {
            self.stdin.read_to_string(&mut text).map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        } else {
            text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))?;
        }
        Ok(text)
    }

    fn emit(&mut self, out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
        let res = match out {
            Some(p) => std::fs::write(p, text),
            None => self.stdout.write_all(text.as_bytes()),
        };
        res.map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
    }

    fn read_square(&mut self, path: &str) -> Result<LatinSquare, CliError> {
        match parse_grid(&self.read_input(path)?)?.to_object() {
            Ok(Object::Square(l)) => Ok(l),
            Ok(Object::Hypercube(_)) => Err(CliError::Usage(format!("{path}: expected a square"))),
            Err(e) => Err(CliError::Failed(format!("{path}: not a Latin square: {e}"))),
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<(), CliError> {
    match cmd {
        Command::Gen { order, dim, format, verify, out, seed, budget, no_cache } => {
            let obj = generate(order, dim, verify, seed, budget, (!no_cache).then(Cache::from_env))?;
            io.emit(&out, &obj.render(format))
        }
        Command::Verify { input, mode } => {
            let grid = parse_grid(&io.read_input(&input)?)?;
            let line = verify(&grid, mode)?;
            io.emit(&None, &format!("{line}\n"))
        }
        Command::Certify { what: CertifyCommand::Pair { a, b, tuple, out } } => {
            let (a, b) = (io.read_square(&a)?, io.read_square(&b)?);
            let tuple = match tuple {
                Some(t) if t.len() == 6 && t.iter().all(|&v| v >= 1) => Some(CycleTuple::from_one_based([t[0], t[1], t[2], t[3], t[4], t[5]])),
                Some(_) => return Err(CliError::Usage("tuple takes six one-based entries".into())),
                None => None,
            };
            let (cert, failure) = certify_pair(a, b, tuple);
            io.emit(&out, &format!("{cert:#}\n"))?;
            failure.map_or(Ok(()), |f| Err(CliError::Failed(format!("certification failed: {f}"))))
        }
        Command::Certify { what: CertifyCommand::Xmember { input, shift, level, out } } => {
            let level = CertLevel::from_name(&level)
                .ok_or_else(|| CliError::Usage(format!("unknown level {level:?}")))?;
            let l = io.read_square(&input)?;
            let x = certify_x_member(&l, shift, level)
                .map_err(|e| CliError::Failed(format!("certification failed: {e}")))?;
            io.emit(&out, &format!("{:#}\n", member_certificate(&x)))
        }
        Command::Search { order, seed, max_iters, format, out } => {
            let l = search_ninf(order, seed, max_iters)?;
            if find_proper_subsquare(&l).is_some() {
                return Err(CliError::Failed("search returned a square with a subsquare".into()));
            }
            io.emit(&out, &Object::Square(l).render(format))
        }
        Command::Plan { order } => {
            let p = plan_order(order)?;
            io.emit(&None, &format!("8^{} * 9^{} * {}\n", p.eights, p.nines, p.base))
        }
    }
}

/// Name of the construction `gen` uses, part of the cache key.
pub fn recipe_name(order: usize, dim: usize) -> String {
    let base = match (order, recipe_for(order)) {
        (4 | 6, _) if dim > 2 => return "cube_fixture".into(),
        (_, Recipe::Cyclic) => "cyclic".into(),
        (_, Recipe::Fixture) => "fixture".into(),
        (_, Recipe::StoredSearch) => "stored_search".into(),
        (_, Recipe::Recursion(p)) => format!("recursion_8^{}_9^{}_{}", p.eights, p.nines, p.base),
        (_, Recipe::Search) => "search".into(),
        (_, Recipe::None) => "none".into(),
    };
    if dim > 2 {
        format!("{base}_boost")
    } else {
        base
    }
}

fn kind(dim: usize) -> &'static str {
    if dim == 2 {
        "latin_square"
    } else {
        "latin_hypercube"
    }
}

/// Builds (or loads from `cache`) the object behind `gen`.
pub fn generate(
    order: usize,
    dim: usize,
    verify: VerifyLevel,
    seed: u64,
    budget: u64,
    cache: Option<Cache>,
) -> Result<Object, CliError> {
    if dim < 2 {
        return Err(CliError::Usage("dimension must be at least 2".into()));
    }
    if order == 0 {
        return Err(CliError::Usage("order must be positive".into()));
    }
    let level_name = match verify {
        VerifyLevel::None => "unverified",
        VerifyLevel::Latin => "latin",
        VerifyLevel::Ninf => "ninf",
    };
    let recipe = recipe_name(order, dim);
    let key = cache::key_for(kind(dim), order, dim, &recipe, seed);
    let cached = cache
        .as_ref()
        .and_then(|c| c.load(&key))
        .and_then(|rec| parse_grid(&rec.payload).ok()?.to_object().ok())
        .filter(|o| o.order() == order && o.dim() == dim);
    let obj = match cached {
        Some(o) => o,
        None if dim == 2 => Object::Square(build_square_with(order, seed, budget)?),
        None => Object::from_hypercube(build_hypercube_with(order, dim, seed, budget)?),
    };
    if verify == VerifyLevel::Ninf {
        if let Some(b) = object_subsquare(&obj) {
            return Err(CliError::Failed(format!("constructed object has a proper subsquare: {b}")));
        }
    }
    if let Some(c) = cache {
        let rec = ArtifactRecord::new(kind(dim), order, dim, &recipe, seed, level_name, obj.render(Format::Json));
        // a cache that cannot be written only costs a rebuild later
        let _ = c.store(&rec);
    }
    Ok(obj)
}

fn object_subsquare(obj: &Object) -> Option<String> {
    match obj {
        Object::Square(l) => find_proper_subsquare(l).map(|b| describe_box(&b)),
        Object::Hypercube(h) => find_proper_subhypercube(h).map(|b| describe_axes(&b.axes, &b.symbols)),
    }
}

fn one_based(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(|x| (x + 1).to_string()).collect();
    format!("{{{}}}", s.join(","))
}

fn describe_box(b: &SubBox) -> String {
    let syms: Vec<usize> = b.symbols.iter().map(|&s| s as usize).collect();
    format!("order {} rows {} cols {} symbols {}", b.order(), one_based(&b.rows), one_based(&b.cols), one_based(&syms))
}

fn describe_axes(axes: &[Vec<usize>], symbols: &[u32]) -> String {
    let syms: Vec<usize> = symbols.iter().map(|&s| s as usize).collect();
    let parts: Vec<String> = axes.iter().map(|a| one_based(a)).collect();
    format!("order {} axes {} symbols {}", symbols.len(), parts.join(" x "), one_based(&syms))
}

/// One output line for `verify`, or [`CliError::Failed`] carrying the least
/// witness.
pub fn verify(grid: &format::Grid, mode: VerifyMode) -> Result<String, CliError> {
    let obj = grid.to_object().map_err(|e| CliError::Failed(format!("not Latin: {e}")))?;
    match (mode, obj) {
        (VerifyMode::Latin, _) => Ok("latin".into()),
        (VerifyMode::Ninf, Object::Square(l)) => match find_proper_subsquare(&l) {
            None => Ok("ninf".into()),
            Some(b) => Err(CliError::Failed(format!("proper subsquare: {}", describe_box(&b)))),
        },
        (VerifyMode::Intercalates, Object::Square(l)) => match find_intercalate(&PerturbedSquare::new(&l)) {
            None => Ok("no intercalates".into()),
            Some(b) => Err(CliError::Failed(format!("intercalate: {}", describe_box(&b)))),
        },
        (VerifyMode::Intercalates, Object::Hypercube(_)) => {
            Err(CliError::Usage("intercalates mode takes a square".into()))
        }
        (VerifyMode::Ninf | VerifyMode::Hypercube, obj) => {
            let h = match obj {
                Object::Square(l) => Hypercube::from_square(&l),
                Object::Hypercube(h) => h,
            };
            match find_proper_subhypercube(&h) {
                None => Ok("ninf".into()),
                Some(b) => Err(CliError::Failed(format!("proper subhypercube: {}", describe_axes(&b.axes, &b.symbols)))),
            }
        }
    }
}

fn checks_json(rep: &Report) -> Value {
    let mut m = Map::new();
    for c in &rep.checks {
        m.insert(c.name.into(), Value::Bool(c.passed));
    }
    Value::Object(m)
}

/// Certificate for a pair and the first failing clause, if any.
pub fn certify_pair(a: LatinSquare, b: LatinSquare, tuple: Option<CycleTuple>) -> (Value, Option<String>) {
    let order = a.order();
    let mut rep = check_corrupting_pair(&a, &b);
    let tuple = tuple.or_else(|| find_cycle_tuple(&a));
    let mut cert = json!({ "mode": "pair", "order": order });
    match tuple {
        Some(t) if a.order() == b.order() && a.order() >= 3 => {
            let data = CorrupterData::new(a, b, t);
            cert["d"] = json!(data.d.map(|x| x + 1));
            cert["tuple"] = json!(t.to_one_based());
            rep.checks.extend(check_properties(&data).checks);
        }
        _ => cert["tuple"] = Value::Null,
    }
    let mut failure = rep.first_failure().map(|c| format!("{} ({})", c.name, c.detail));
    if cert["tuple"].is_null() {
        failure.get_or_insert_with(|| "no cycle tuple".into());
    }
    cert["checks"] = checks_json(&rep);
    cert["passed"] = Value::Bool(failure.is_none());
    (cert, failure)
}

/// The certificate JSON for a certified member, one-based.
pub fn member_certificate(x: &XMember) -> Value {
    let mut checks = Map::new();
    checks.insert("condition_ii".into(), Value::Bool(true));
    checks.insert("condition_iii".into(), Value::Bool(true));
    if x.level >= CertLevel::ConditionsChecked {
        checks.insert("ninf".into(), Value::Bool(true));
    }
    if x.level >= CertLevel::FullyVerified {
        checks.insert("condition_i".into(), Value::Bool(true));
    }
    json!({
        "order": x.order(),
        "shift": x.shift,
        "witness_ii": { "x1": x.w2.x1 + 1, "x2": x.w2.x2 + 1, "y3": x.w2.y3() + 1 },
        "witness_iii": { "r1": x.w3.r1 + 1, "r2": x.w3.r2 + 1, "sigma": x.w3.sigma + 1 },
        "checks": checks,
        "cert_level": x.level.name(),
    })
}
