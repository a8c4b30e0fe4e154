//! Command-line front end. Every subcommand prints one JSON document on
//! standard output; the exit code is 0 on success, 2 when the input is
//! refused by a mathematical precondition, 1 on other errors and 64 on
//! usage errors.

use std::collections::HashMap;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::deform::{self, DeformError};
use crate::groebner::{self, GroebnerError, Limits, MonomialOrder, QuotientDimension};
use crate::poly::{parse_poly, parse_poly_list, PolyError, Polynomial, VariableSet};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::strata::{self, StrataError, Tag};
use crate::symmetry::{self, AutTarget, Strictness, SymmetryError};
use crate::verify;
use crate::weights::{self, Mode, WeightData, WeightError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Rejected,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => EXIT_OK,
            Status::Rejected => EXIT_REJECTED,
            Status::Error => EXIT_ERROR,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub elapsed_ms: u64,
}

/// What a finished invocation writes and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(name = "hassett-kit", version, about = "Exact combinatorics of weighted pointed stable curves")]
struct Cli {
    /// Wrap the payload in {"status", "payload", "elapsed_ms"}.
    #[arg(long, global = true)]
    envelope: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Weight data: admissibility, Kapranov weights, dimension.
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// Boundary strata and reduction morphisms.
    #[command(subcommand)]
    Strata(StrataCmd),
    /// Admissible transpositions and automorphism groups.
    #[command(subcommand)]
    Sym(SymCmd),
    /// Polynomial parsing and manipulation.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Groebner bases, quotient dimensions, Tyurina numbers.
    #[command(subcommand)]
    Gb(GbCmd),
    /// The Segre cubic threefold.
    #[command(subcommand)]
    Segre(SegreCmd),
    /// Run every built-in consistency check.
    VerifyPaper,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Strict,
    SumTwo,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::SumTwo => Mode::SumTwo,
        }
    }
}

#[derive(Debug, Args)]
struct WeightArgs {
    /// JSON array of fractions, or an object with "genus", "mode", "weights".
    #[arg(long)]
    weights: String,
    /// Genus, used when --weights is a bare array.
    #[arg(long, default_value_t = 0)]
    genus: u32,
    /// Mode, used when --weights is a bare array.
    #[arg(long, value_enum, default_value = "strict")]
    mode: ModeArg,
}

impl WeightArgs {
    fn load(&self) -> Result<WeightData, Failure> {
        Ok(weights::weight_data_from_json(&self.weights, self.genus, self.mode.into())?)
    }
}

#[derive(Debug, Subcommand)]
enum WeightsCmd {
    /// Validate weight data.
    Check(WeightArgs),
    /// The Kapranov weights A_{r,s}[n].
    Kapranov {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'r')]
        r: usize,
        #[arg(short = 's')]
        s: usize,
    },
    /// Dimension 3g - 3 + n of the moduli space.
    Dim(WeightArgs),
}

#[derive(Debug, Subcommand)]
enum StrataCmd {
    /// Classify the stratum with the given tail markings.
    Classify {
        #[command(flatten)]
        weights: WeightArgs,
        /// Comma-separated 1-based labels.
        #[arg(long)]
        subset: String,
    },
    /// Divisors contracted by the reduction from --from to --to.
    Reduce {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 0)]
        genus: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TargetArg {
    Coarse,
    Stack,
}

#[derive(Debug, Subcommand)]
enum SymCmd {
    /// Whether the transposition i <-> j is admissible.
    Transposition {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(short = 'i')]
        i: usize,
        #[arg(short = 'j')]
        j: usize,
        /// Also compare single-marking sums.
        #[arg(long)]
        with_singletons: bool,
    },
    /// The group generated by admissible transpositions.
    Group {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long)]
        with_singletons: bool,
    },
    /// Closed-form automorphism group of the moduli space.
    Aut {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, value_enum, default_value = "coarse")]
        target: TargetArg,
    },
}

#[derive(Debug, Args)]
struct VarsArg {
    /// Comma-separated variable names.
    #[arg(long)]
    vars: String,
}

#[derive(Debug, Subcommand)]
enum PolyCmd {
    /// Parse and print in canonical form.
    Parse {
        #[command(flatten)]
        vars: VarsArg,
        expr: String,
    },
    /// Partial derivative with respect to --by.
    Diff {
        #[command(flatten)]
        vars: VarsArg,
        expr: String,
        #[arg(long)]
        by: String,
    },
    /// Simultaneous substitution, bindings written "x=expr;y=expr".
    Subst {
        #[command(flatten)]
        vars: VarsArg,
        expr: String,
        #[arg(long)]
        bind: String,
        /// Target variables; defaults to --vars.
        #[arg(long)]
        target: Option<String>,
    },
    /// Evaluate at a comma-separated rational point.
    Eval {
        #[command(flatten)]
        vars: VarsArg,
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::GrevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Debug, Args)]
struct IdealArgs {
    #[command(flatten)]
    vars: VarsArg,
    /// Generators separated by ';'.
    #[arg(long, allow_hyphen_values = true)]
    gens: String,
    #[arg(long, value_enum, default_value = "grevlex")]
    order: OrderArg,
}

#[derive(Debug, Subcommand)]
enum GbCmd {
    /// Reduced Groebner basis.
    Basis(IdealArgs),
    /// Dimension of the quotient ring and its standard monomials.
    Dim(IdealArgs),
    /// Local dimension at --point. With --poly, of the ideal of the
    /// polynomial and its partials; with --gens, of that ideal.
    Tyurina {
        #[command(flatten)]
        vars: VarsArg,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "gens", required_unless_present = "gens")]
        poly: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        gens: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Debug, Subcommand)]
enum SegreCmd {
    /// The cubic in x0..x4.
    Poly,
    /// Certificates for the ten nodes.
    Nodes,
    /// Total Tyurina number, chart by chart.
    Audit,
    /// Euler-characteristic ledger for first-order deformations.
    Ledger,
}

/// A refused or failed command, with a machine-readable code.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Failure {
    status: Status,
    code: String,
    message: String,
}

impl Failure {
    fn rejected(code: &str, message: impl ToString) -> Self {
        Failure {
            status: Status::Rejected,
            code: code.into(),
            message: message.to_string(),
        }
    }

    fn error(code: &str, message: impl ToString) -> Self {
        Failure {
            status: Status::Error,
            code: code.into(),
            message: message.to_string(),
        }
    }
}

impl From<WeightError> for Failure {
    fn from(e: WeightError) -> Self {
        match e {
            WeightError::Parse(_) => Failure::error(e.code(), &e),
            _ => Failure::rejected(e.code(), &e),
        }
    }
}

impl From<StrataError> for Failure {
    fn from(e: StrataError) -> Self {
        match e {
            StrataError::Weights(w) => w.into(),
            StrataError::ResourceLimit(_) => Failure::error(e.code(), &e),
            _ => Failure::rejected(e.code(), &e),
        }
    }
}

impl From<SymmetryError> for Failure {
    fn from(e: SymmetryError) -> Self {
        match e {
            SymmetryError::ResourceLimit(_) => Failure::error(e.code(), &e),
            _ => Failure::rejected(e.code(), &e),
        }
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        Failure::error(e.code(), &e)
    }
}

impl From<GroebnerError> for Failure {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::NotIsolated(_) => Failure::rejected(e.code(), &e),
            GroebnerError::Poly(p) => p.into(),
            _ => Failure::error(e.code(), &e),
        }
    }
}

impl From<DeformError> for Failure {
    fn from(e: DeformError) -> Self {
        match e {
            DeformError::Groebner(g) => g.into(),
            DeformError::Symmetry(s) => s.into(),
            DeformError::NotIsolatedSingularities(_) | DeformError::NotHomogeneous => {
                Failure::rejected(e.code(), &e)
            }
            _ => Failure::error(e.code(), &e),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload types serialize")
}

/// Splits a list flag given either as a JSON array or as `sep`-separated text.
fn list_items(text: &str, sep: char) -> Result<Vec<String>, Failure> {
    if !text.trim_start().starts_with('[') {
        return Ok(text.split(sep).map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect());
    }
    let items: Vec<Value> =
        serde_json::from_str(text).map_err(|e| Failure::error("parse_error", format!("bad list: {e}")))?;
    items
        .into_iter()
        .map(|item| match item {
            Value::String(s) => Ok(s),
            Value::Number(n) => Ok(n.to_string()),
            other => Err(Failure::error("parse_error", format!("unexpected list item {other}"))),
        })
        .collect()
}

fn parse_labels(text: &str) -> Result<Vec<usize>, Failure> {
    list_items(text, ',')?
        .iter()
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Failure::error("parse_error", format!("bad label {s:?}")))
        })
        .collect()
}

fn parse_point(text: &str) -> Result<Vec<Rational>, Failure> {
    list_items(text, ',')?
        .iter()
        .map(|s| parse_rational(s).map_err(|e| Failure::error("parse_error", e.0)))
        .collect()
}

fn parse_generators(text: &str, vars: &VariableSet) -> Result<Vec<Polynomial>, Failure> {
    if !text.trim_start().starts_with('[') {
        return Ok(parse_poly_list(text, vars)?);
    }
    list_items(text, ';')?
        .iter()
        .map(|s| parse_poly(s, vars).map_err(Failure::from))
        .collect()
}

fn stratum_codim(tag: Tag, r: usize) -> Value {
    match tag {
        Tag::Nodal | Tag::Coincidence => json!(1),
        Tag::Contracted => json!(r - 1),
        Tag::Nonexistent => Value::Null,
    }
}

fn weights_cmd(cmd: &WeightsCmd) -> Result<Value, Failure> {
    match cmd {
        WeightsCmd::Check(args) => {
            let w = args.load()?;
            Ok(json!({
                "admissible": true,
                "genus": w.genus(),
                "mode": w.mode(),
                "weights": w.weight_strings(),
                "total": format_rational(&w.total()),
            }))
        }
        WeightsCmd::Kapranov { n, r, s } => Ok(to_value(&weights::kapranov_weights(*n, *r, *s)?.weight_strings())),
        WeightsCmd::Dim(args) => {
            let w = args.load()?;
            if w.mode() != Mode::Strict {
                return Err(Failure::rejected("unsupported_mode", "dimension is defined for strict weight data"));
            }
            Ok(json!({ "dimension": weights::moduli_dimension(&w) }))
        }
    }
}

fn strata_cmd(cmd: &StrataCmd) -> Result<Value, Failure> {
    match cmd {
        StrataCmd::Classify { weights, subset } => {
            let w = weights.load()?;
            let d = strata::classify_subset(&w, &parse_labels(subset)?)?;
            let r = d.light_side.map_or(d.tail.len(), |s| s.len());
            Ok(json!([{
                "subset": d.tail,
                "complement": d.body,
                "tag": d.tag,
                "codim": stratum_codim(d.tag, r),
            }]))
        }
        StrataCmd::Reduce { from, to, genus } => {
            let a = weights::weight_data_from_json(from, *genus, Mode::Strict)?;
            let b = weights::weight_data_from_json(to, *genus, Mode::Strict)?;
            let steps = strata::factor_reduction(&a, &b)?;
            Ok(Value::Array(
                steps
                    .iter()
                    .map(|s| {
                        json!({
                            "subset": s.collapsed,
                            "tag": "contracted",
                            "codim": s.image_codimension,
                            "r": s.r,
                            "normal_bundle": s.normal_bundle,
                        })
                    })
                    .collect(),
            ))
        }
    }
}

fn strictness(with_singletons: bool) -> Strictness {
    if with_singletons {
        Strictness::WithSingletons
    } else {
        Strictness::Printed
    }
}

fn sym_cmd(cmd: &SymCmd) -> Result<Value, Failure> {
    match cmd {
        SymCmd::Transposition { weights, i, j, with_singletons } => {
            let w = weights.load()?;
            let ok = symmetry::is_admissible_transposition_with(&w, *i, *j, strictness(*with_singletons))?;
            Ok(json!({ "i": i, "j": j, "admissible": ok }))
        }
        SymCmd::Group { weights, with_singletons } => {
            let w = weights.load()?;
            let s = strictness(*with_singletons);
            let transpositions = symmetry::admissible_transpositions(&w, s)?;
            let g = symmetry::admissible_group_with(&w, s)?;
            let orbits: Vec<Vec<usize>> = g.orbits();
            Ok(json!({
                "order": g.order(),
                "transpositions": transpositions,
                "orbits": orbits,
            }))
        }
        SymCmd::Aut { weights, target } => {
            let w = weights.load()?;
            let t = match target {
                TargetArg::Coarse => AutTarget::CoarseSpace,
                TargetArg::Stack => AutTarget::Stack,
            };
            Ok(to_value(&symmetry::aut_descriptor_for(&w, t)?))
        }
    }
}

fn poly_cmd(cmd: &PolyCmd) -> Result<Value, Failure> {
    let describe = |p: &Polynomial| {
        json!({
            "polynomial": p.to_string(),
            "terms": p.num_terms(),
            "degree": to_value(&p.degree()),
        })
    };
    match cmd {
        PolyCmd::Parse { vars, expr } => {
            let v = VariableSet::parse(&vars.vars)?;
            Ok(describe(&parse_poly(expr, &v)?))
        }
        PolyCmd::Diff { vars, expr, by } => {
            let v = VariableSet::parse(&vars.vars)?;
            Ok(describe(&parse_poly(expr, &v)?.partial_derivative(by)?))
        }
        PolyCmd::Subst { vars, expr, bind, target } => {
            let v = VariableSet::parse(&vars.vars)?;
            let t = match target {
                Some(t) => VariableSet::parse(t)?,
                None => v.clone(),
            };
            let p = parse_poly(expr, &v)?;
            let mut bindings = HashMap::new();
            for part in bind.split(';').map(str::trim).filter(|s| !s.is_empty()) {
                let (name, image) = part
                    .split_once('=')
                    .ok_or_else(|| Failure::error("parse_error", format!("binding {part:?} needs '='")))?;
                let name = name.trim();
                if v.index_of(name).is_none() {
                    return Err(PolyError::UnknownVariable(name.to_string()).into());
                }
                bindings.insert(name.to_string(), parse_poly(image, &t)?);
            }
            Ok(describe(&p.substitute(&bindings, &t)?))
        }
        PolyCmd::Eval { vars, expr, point } => {
            let v = VariableSet::parse(&vars.vars)?;
            let value = parse_poly(expr, &v)?.evaluate(&parse_point(point)?)?;
            Ok(json!({ "value": format_rational(&value) }))
        }
    }
}

fn gb_cmd(cmd: &GbCmd) -> Result<Value, Failure> {
    let limits = Limits::from_env();
    match cmd {
        GbCmd::Basis(args) | GbCmd::Dim(args) => {
            let v = VariableSet::parse(&args.vars.vars)?;
            let gens = parse_generators(&args.gens, &v)?;
            let order = MonomialOrder::from(args.order);
            let gb = groebner::buchberger_over(&v, &gens, order, &limits)?;
            if let GbCmd::Basis(_) = cmd {
                return Ok(json!({ "order": order, "basis": gb.strings() }));
            }
            Ok(match groebner::quotient_dimension(&gb) {
                QuotientDimension::Finite { value, staircase } => json!({
                    "dimension": value,
                    "staircase": staircase.iter().map(|m| m.render(&v)).collect::<Vec<_>>(),
                }),
                QuotientDimension::Infinite => json!({ "dimension": "infinite" }),
            })
        }
        GbCmd::Tyurina { vars, poly, gens, point } => {
            let v = VariableSet::parse(&vars.vars)?;
            let ideal = match (poly, gens) {
                (Some(f), _) => groebner::tyurina_ideal(&parse_poly(f, &v)?),
                (None, Some(g)) => parse_generators(g, &v)?,
                (None, None) => unreachable!("clap requires one of --poly and --gens"),
            };
            let p = parse_point(point)?;
            let tau = groebner::local_multiplicity_with(&ideal, &p, &limits)?;
            Ok(json!({ "tyurina": tau }))
        }
    }
}

fn segre_cmd(cmd: &SegreCmd) -> Result<Value, Failure> {
    let limits = Limits::from_env();
    match cmd {
        SegreCmd::Poly => {
            let f = deform::segre_cubic();
            Ok(json!({ "vars": f.vars().names(), "polynomial": f.to_string() }))
        }
        SegreCmd::Nodes => Ok(to_value(&deform::segre_nodes_with(&limits)?)),
        SegreCmd::Audit => {
            let charts = deform::chart_contributions(&deform::segre_cubic(), &limits)?;
            Ok(json!({ "total": charts.iter().sum::<u64>(), "charts": charts }))
        }
        SegreCmd::Ledger => Ok(to_value(&deform::build_ledger_with(&limits)?)),
    }
}

fn dispatch(command: &Command) -> Result<Value, Failure> {
    match command {
        Command::Weights(c) => weights_cmd(c),
        Command::Strata(c) => strata_cmd(c),
        Command::Sym(c) => sym_cmd(c),
        Command::Poly(c) => poly_cmd(c),
        Command::Gb(c) => gb_cmd(c),
        Command::Segre(c) => segre_cmd(c),
        Command::VerifyPaper => {
            let report = verify::run_checks();
            if report.passed() {
                Ok(to_value(&report))
            } else {
                Err(Failure {
                    status: Status::Rejected,
                    code: "verification_failed".into(),
                    message: serde_json::to_string(&report).expect("serializable"),
                })
            }
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let start = Instant::now();
    let (status, payload) = match dispatch(&cli.command) {
        Ok(v) => (Status::Ok, v),
        Err(f) => (
            f.status,
            json!({ "status": f.status, "code": f.code, "message": f.message }),
        ),
    };
    let document = if cli.envelope {
        to_value(&CommandResult {
            status,
            payload,
            elapsed_ms: start.elapsed().as_millis() as u64,
        })
    } else {
        payload
    };
    let mut stdout = serde_json::to_string(&document).expect("serializable");
    stdout.push('\n');
    Output {
        code: status.exit_code(),
        stdout,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Output {
        run(std::iter::once("hassett-kit").chain(args.iter().copied()))
    }

    fn payload(args: &[&str]) -> Value {
        let out = call(args);
        assert_eq!(out.code, 0, "{args:?}: {} {}", out.stdout, out.stderr);
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn kapranov_command() {
        let v = payload(&["weights", "kapranov", "-n", "6", "-r", "1", "-s", "1"]);
        assert_eq!(v, json!(["1/4", "1/4", "1/4", "1/4", "1/4", "1"]));
        assert_eq!(call(&["weights", "kapranov", "-n", "6", "-r", "1", "-s", "4"]).code, EXIT_REJECTED);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(call(&[]).code, EXIT_USAGE);
        assert_eq!(call(&["--help"]).code, EXIT_OK);
        let out = call(&["weights", "check", "--weights", r#"["1/3","1/3","1/3","1/3","1/3","1/3"]"#]);
        assert_eq!(out.code, EXIT_REJECTED);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["code"], "not_admissible");
        assert_eq!(call(&["weights", "check", "--weights", "[1/3"]).code, EXIT_ERROR);
        assert_eq!(call(&["poly", "parse", "--vars", "x", "x^-1"]).code, EXIT_ERROR);
    }

    #[test]
    fn segre_commands() {
        let v = payload(&["segre", "ledger"]);
        assert_eq!(v["dim_ext1"], 10);
        assert_eq!(v["chi_OS3"], 34);
        let v = payload(&["segre", "audit"]);
        assert_eq!(v["total"], 10);
        let v = payload(&["--envelope", "segre", "poly"]);
        assert_eq!(v["status"], "ok");
        assert!(v["payload"]["polynomial"].as_str().unwrap().contains("x0^2*x1"));
    }

    #[test]
    fn gb_and_poly_commands() {
        let gens = "x^2*w+x*y-z*w; 2*x*w+y; x; -w; x^2-z";
        let v = payload(&["gb", "basis", "--vars", "x,y,z,w", "--gens", gens]);
        assert_eq!(v["basis"], json!(["x", "y", "z", "w"]));
        let v = payload(&["gb", "dim", "--vars", "x,y", "--gens", "x^2; y^2"]);
        assert_eq!(v["dimension"], 4);
        assert_eq!(v["staircase"], json!(["1", "y", "x", "x*y"]));
        let v = payload(&["gb", "dim", "--vars", "x,y", "--gens", "x"]);
        assert_eq!(v["dimension"], "infinite");
        let v = payload(&["gb", "tyurina", "--vars", "x,y", "--poly", "x^3-y^2", "--point", "0,0"]);
        assert_eq!(v["tyurina"], 2);
        let v = payload(&["poly", "diff", "--vars", "x,y,z,w", "x^2*w + x*y - z*w", "--by", "w"]);
        assert_eq!(v["polynomial"], "x^2 - z");
        let v = payload(&["poly", "subst", "--vars", "x", "x^2", "--bind", "x=x+1"]);
        assert_eq!(v["polynomial"], "x^2 + 2*x + 1");
        let v = payload(&["poly", "eval", "--vars", "x,y", "x*y - 1/2", "--point", "-1,3"]);
        assert_eq!(v["value"], "-7/2");
    }

    #[test]
    fn strata_and_sym_commands() {
        let a = r#"["1","1/3","1/3","1/3","1/3","1/3"]"#;
        let v = payload(&["strata", "classify", "--weights", a, "--subset", "2,3,4"]);
        assert_eq!(v[0]["tag"], "contracted");
        assert_eq!(v[0]["codim"], 2);
        let v = payload(&["strata", "reduce", "--from", r#"["1","1","1","1","1","1"]"#, "--to", a]);
        assert_eq!(v.as_array().unwrap().len(), 10);
        let w = r#"{"genus":1,"weights":["1","1/3","1/3","1/3"]}"#;
        let v = payload(&["sym", "transposition", "--weights", w, "-i", "1", "-j", "4"]);
        assert_eq!(v["admissible"], false);
        let v = payload(&["sym", "group", "--weights", w]);
        assert_eq!(v["order"], 6);
        let v = payload(&["sym", "aut", "--weights", w]);
        assert_eq!(v["order"], 6);
    }

    #[test]
    fn deterministic_output() {
        let a = call(&["segre", "nodes"]);
        let b = call(&["segre", "nodes"]);
        assert_eq!(a, b);
    }
}
