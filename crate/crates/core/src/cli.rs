//! The `tropical` command line.
//!
//! Exit codes: 0 for a pass or a computed value, 1 when a checked property
//! fails (the witness is printed), 2 for usage, input and parse errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::functional::{
    check_a_linear, extend_functional, graph_sup_closed, pointwise_sup, recover_representer,
    separate_points, star_eval, Functional, LinearMapSample,
};
use crate::order::{b_completion, dm_completion, CompletionResult};
use crate::report::Report;
use crate::scalars::{check_semiring_axioms, Boolean, SemiringDescriptor};
use crate::selftest;
use crate::semialgebra::{check_unit_residual, idempotent_integral, scalar_product, Element};
use crate::semimodule::SpanBasis;
use crate::text;
use crate::{AlgebraElement, ExtendedScalar, FinVector, FunctionalRep};

#[derive(Debug, Parser)]
#[command(
    name = "tropical",
    version,
    about = "Max-plus functionals, scalar products and lattice completions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SemiringName {
    Boolean,
    /// `{-inf} ∪ Q ∪ {+inf}`.
    MaxPlus,
    /// `{-inf} ∪ Q`, a semifield.
    MaxPlusField,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    /// `y ↦ x*(y)`; needs `--x`.
    Star,
    /// `y ↦ y_1 ⊙ ... ⊙ y_n`, not a-linear in general.
    Product,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate x*(y), the least k with y ⪯ k ⊙ x.
    EvalStar {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
    },
    /// Recover the representer from the values f(e_1) ... f(e_n).
    Recover {
        /// One line with the values on the unit vectors.
        #[arg(long)]
        values: PathBuf,
    },
    /// Extend values given on generators of a span to a functional on the whole space.
    Extend {
        /// Generators, one per line.
        #[arg(long)]
        span: PathBuf,
        /// One line with a value per generator.
        #[arg(long)]
        values: PathBuf,
    },
    /// Find a residuation functional taking different values at x and y.
    Separate {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
    },
    /// Pointwise sup of the functionals whose representers are listed.
    SupFunctionals {
        #[arg(long)]
        functionals: PathBuf,
        /// Also evaluate the sup at this vector.
        #[arg(long)]
        probe: Option<PathBuf>,
    },
    /// Scalar product <phi, psi> = max(phi + psi) of two functions.
    ScalarProduct {
        #[arg(long)]
        phi: PathBuf,
        #[arg(long)]
        psi: PathBuf,
    },
    /// Idempotent integral of phi against a weight (default: the unit 0).
    Integrate {
        #[arg(long)]
        phi: PathBuf,
        #[arg(long)]
        weight: Option<PathBuf>,
    },
    /// Compare x*(y) with 1*(y x^-1) for a bounded function x.
    Prop4 {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
    },
    /// Normal completion by cuts.
    DmComplete {
        #[arg(long)]
        poset: PathBuf,
    },
    /// Completion of the bounded subsets.
    BComplete {
        #[arg(long)]
        poset: PathBuf,
    },
    /// Check the semiring axioms on a sample of scalars.
    CheckAxioms {
        #[arg(long, value_enum, default_value = "max-plus")]
        semiring: SemiringName,
        /// One line of scalars; defaults to `-inf -2 0 1 +inf`. Ignored for boolean.
        #[arg(long)]
        sample: Option<PathBuf>,
    },
    /// Check sup preservation and homogeneity of a map on test vectors.
    CheckAlinear {
        #[arg(long, value_enum, default_value = "star")]
        map: MapName,
        #[arg(long)]
        x: Option<PathBuf>,
        /// Test vectors, one per line (at most 16).
        #[arg(long)]
        vectors: PathBuf,
        /// One line of scalars for homogeneity; defaults to `-inf -1 0 2`.
        #[arg(long)]
        scalars: Option<PathBuf>,
    },
    /// Check that a sampled graph is closed under sums.
    CheckGraph {
        /// Inputs, one per line.
        #[arg(long)]
        inputs: PathBuf,
        /// Outputs, one per line, matching the inputs.
        #[arg(long)]
        outputs: PathBuf,
    },
    /// Run every property suite with a fixed seed.
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Largest dimension drawn.
        #[arg(long, default_value_t = 5)]
        dim: usize,
        /// Random instances per suite.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Value,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass | Status::Value => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub status: Status,
    /// Lines for standard output (error messages for [`Status::Error`]).
    pub details: Vec<String>,
    pub witnesses: Vec<String>,
    pub exit_code: i32,
}

impl RunReport {
    fn new(status: Status, details: Vec<String>, witnesses: Vec<String>) -> Self {
        Self {
            status,
            details,
            witnesses,
            exit_code: status.exit_code(),
        }
    }

    pub fn value(details: Vec<String>) -> Self {
        Self::new(Status::Value, details, Vec::new())
    }

    pub fn error(message: impl Into<String>) -> Self {
        Self::new(Status::Error, vec![message.into()], Vec::new())
    }

    pub fn fail(details: Vec<String>, witnesses: Vec<String>) -> Self {
        Self::new(Status::Fail, details, witnesses)
    }

    fn from_report(r: &Report) -> Self {
        let details = r.to_string().lines().map(String::from).collect();
        let witnesses: Vec<String> = r
            .failures()
            .map(|c| format!("{}: {}", c.name, c.witness.as_deref().unwrap_or("")))
            .collect();
        let status = if r.passed() {
            Status::Pass
        } else {
            Status::Fail
        };
        Self::new(status, details, witnesses)
    }

    /// Standard output text.
    pub fn stdout(&self) -> String {
        if self.status == Status::Error {
            return String::new();
        }
        let mut out = String::new();
        for l in &self.details {
            out.push_str(l);
            out.push('\n');
        }
        for w in &self.witnesses {
            out.push_str("witness: ");
            out.push_str(w);
            out.push('\n');
        }
        out
    }

    /// Standard error text.
    pub fn stderr(&self) -> String {
        if self.status != Status::Error {
            return String::new();
        }
        self.details
            .iter()
            .map(|l| format!("error: {l}\n"))
            .collect()
    }
}

/// Parses the arguments (program name first) and runs the command.
pub fn run<I, T>(args: I) -> RunReport
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(&cli.command),
        Err(e) if e.use_stderr() => {
            RunReport::error(e.to_string().trim_end().trim_start_matches("error: "))
        }
        Err(e) => RunReport::new(
            Status::Value,
            e.to_string().lines().map(String::from).collect(),
            Vec::new(),
        ),
    }
}

/// An input problem, reported with exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = std::result::Result<RunReport, Usage>;

fn read(path: &Path) -> std::result::Result<String, Usage> {
    fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))
}

fn located<T>(path: &Path, r: crate::Result<T>) -> std::result::Result<T, Usage> {
    r.map_err(|e| Usage(format!("{}:{e}", path.display())))
}

fn vectors(path: &Path) -> std::result::Result<Vec<FinVector>, Usage> {
    let src = read(path)?;
    Ok(located(path, text::parse_vectors(&src))?.vectors)
}

fn one_vector(path: &Path) -> std::result::Result<FinVector, Usage> {
    let mut vs = vectors(path)?;
    if vs.len() != 1 {
        return Err(Usage(format!(
            "{}: expected exactly one vector, found {}",
            path.display(),
            vs.len()
        )));
    }
    Ok(vs.pop().expect("one vector"))
}

fn function(path: &Path) -> std::result::Result<AlgebraElement, Usage> {
    let src = read(path)?;
    let mut fs = located(path, text::parse_functions(&src))?;
    if fs.len() != 1 {
        return Err(Usage(format!(
            "{}: expected exactly one function, found {}",
            path.display(),
            fs.len()
        )));
    }
    Ok(fs.pop().expect("one function"))
}

fn functional_lines(f: &FunctionalRep) -> Vec<String> {
    text::write_functional(f)
        .lines()
        .map(String::from)
        .collect()
}

fn completion_lines(c: &CompletionResult) -> Vec<String> {
    text::write_poset(&c.completed)
        .lines()
        .map(String::from)
        .collect()
}

pub fn run_command(c: &Command) -> RunReport {
    match dispatch(c) {
        Ok(r) => r,
        Err(Usage(m)) => RunReport::error(m),
    }
}

fn dispatch(c: &Command) -> Outcome {
    match c {
        Command::EvalStar { x, y } => {
            let (x, y) = (one_vector(x)?, one_vector(y)?);
            Ok(RunReport::value(vec![star_eval(&x, &y)?.to_string()]))
        }
        Command::Recover { values } => {
            let v = one_vector(values)?;
            let dim = v.dim();
            // An a-linear f is fixed by its values on units: f(y) = ⊕ y_i ⊙ f(e_i).
            let f = |y: &FinVector| {
                y.coords()
                    .iter()
                    .zip(v.coords())
                    .fold(ExtendedScalar::Bottom, |acc, (c, fi)| {
                        acc.oplus(&c.otimes(fi))
                    })
            };
            let x = recover_representer(f, dim)?;
            Ok(RunReport::value(functional_lines(&Functional::new(x))))
        }
        Command::Extend { span, values } => {
            let gens = vectors(span)?;
            let Some(dim) = gens.first().map(FinVector::dim) else {
                return Err(Usage(format!("{}: no generators", span.display())));
            };
            let vals = one_vector(values)?.into_coords();
            if vals.len() != gens.len() {
                return Err(Usage(format!(
                    "{} generators but {} values",
                    gens.len(),
                    vals.len()
                )));
            }
            let kept: Vec<(FinVector, ExtendedScalar)> = gens
                .into_iter()
                .zip(vals)
                .filter(|(w, _)| !w.is_zero())
                .collect();
            let (gens, vals): (Vec<_>, Vec<_>) = kept.into_iter().unzip();
            let basis = SpanBasis::new(dim, gens.clone())?;
            match extend_functional(&basis, &vals, dim) {
                Ok(f) => Ok(RunReport::value(functional_lines(&f))),
                Err(e @ Error::InconsistentValues { index }) => Ok(RunReport::fail(
                    vec![e.to_string()],
                    vec![format!(
                        "generator {} = {}, value {}",
                        index, gens[index], vals[index]
                    )],
                )),
                Err(e) => Err(e.into()),
            }
        }
        Command::Separate { x, y } => {
            let (x, y) = (one_vector(x)?, one_vector(y)?);
            match separate_points(&x, &y) {
                Ok(s) => {
                    let mut lines = functional_lines(&s.functional);
                    lines.push(format!("f(x) = {}", s.functional.eval(&x)?));
                    lines.push(format!("f(y) = {}", s.functional.eval(&y)?));
                    lines.push(format!(
                        "representer: {}",
                        if s.used_fallback { "y" } else { "x" }
                    ));
                    Ok(RunReport::value(lines))
                }
                Err(e @ Error::NotSeparated) => Ok(RunReport::fail(
                    vec![e.to_string()],
                    vec![format!("x = {x}, y = {y}")],
                )),
                Err(e) => Err(e.into()),
            }
        }
        Command::SupFunctionals { functionals, probe } => {
            let fs: Vec<FunctionalRep> = vectors(functionals)?
                .into_iter()
                .map(Functional::new)
                .collect();
            let p = pointwise_sup(&fs)?;
            let mut lines = functional_lines(&p);
            if let Some(path) = probe {
                let y = one_vector(path)?;
                lines.push(format!("value = {}", p.eval(&y)?));
            }
            Ok(RunReport::value(lines))
        }
        Command::ScalarProduct { phi, psi } => {
            let (phi, psi) = (function(phi)?, function(psi)?);
            Ok(RunReport::value(vec![
                scalar_product(&phi, &psi)?.to_string()
            ]))
        }
        Command::Integrate { phi, weight } => {
            let phi = function(phi)?;
            let weight = match weight {
                Some(w) => function(w)?,
                None => Element::one(phi.labels().to_vec()),
            };
            Ok(RunReport::value(vec![
                idempotent_integral(&phi, &weight)?.to_string()
            ]))
        }
        Command::Prop4 { x, y } => {
            let (x, y) = (function(x)?, function(y)?);
            let r = check_unit_residual(&x, &y)?;
            let lines = vec![
                format!("x*(y)       = {}", r.star),
                format!("1*(y x^-1)  = {}", r.via_unit),
            ];
            if r.holds() {
                Ok(RunReport::new(Status::Pass, lines, Vec::new()))
            } else {
                Ok(RunReport::fail(lines, vec![format!("x = {x}, y = {y}")]))
            }
        }
        Command::DmComplete { poset } => {
            let s = located(poset, text::parse_poset(&read(poset)?))?;
            Ok(RunReport::value(completion_lines(&dm_completion(&s)?)))
        }
        Command::BComplete { poset } => {
            let s = located(poset, text::parse_poset(&read(poset)?))?;
            Ok(RunReport::value(completion_lines(&b_completion(&s)?)))
        }
        Command::CheckAxioms { semiring, sample } => {
            let scalars = match sample {
                Some(p) => one_vector(p)?.into_coords(),
                None => ["-inf", "-2", "0", "1", "+inf"]
                    .iter()
                    .map(|t| text::parse_scalar(t).expect("valid literal"))
                    .collect(),
            };
            let report = match semiring {
                SemiringName::Boolean => {
                    check_semiring_axioms(&SemiringDescriptor::boolean(), &Boolean::all())?
                }
                SemiringName::MaxPlus => {
                    check_semiring_axioms(&SemiringDescriptor::completed_max_plus(), &scalars)?
                }
                SemiringName::MaxPlusField => {
                    check_semiring_axioms(&SemiringDescriptor::max_plus(), &scalars)?
                }
            };
            Ok(RunReport::from_report(&report))
        }
        Command::CheckAlinear {
            map,
            x,
            vectors: tests,
            scalars,
        } => {
            let tests = vectors(tests)?;
            let scalars = match scalars {
                Some(p) => one_vector(p)?.into_coords(),
                None => [
                    ExtendedScalar::Bottom,
                    ExtendedScalar::int(-1),
                    ExtendedScalar::int(0),
                    ExtendedScalar::int(2),
                ]
                .to_vec(),
            };
            let report = match map {
                MapName::Star => {
                    let Some(path) = x else {
                        return Err(Usage("--map star needs --x".into()));
                    };
                    let x = one_vector(path)?;
                    if let Some(t) = tests.first() {
                        t.check_dim(x.dim())?;
                    }
                    check_a_linear(
                        |y: &FinVector| star_eval(&x, y).expect("dimensions checked"),
                        &tests,
                        &scalars,
                    )?
                }
                MapName::Product => check_a_linear(
                    |y: &FinVector| {
                        y.coords()
                            .iter()
                            .fold(ExtendedScalar::int(0), |acc, c| acc.otimes(c))
                    },
                    &tests,
                    &scalars,
                )?,
            };
            Ok(RunReport::from_report(&report))
        }
        Command::CheckGraph { inputs, outputs } => {
            let ins = vectors(inputs)?;
            let outs = vectors(outputs)?;
            if ins.len() != outs.len() {
                return Err(Usage(format!(
                    "{} inputs but {} outputs",
                    ins.len(),
                    outs.len()
                )));
            }
            if let Some(first) = ins.first() {
                for v in &ins {
                    v.check_dim(first.dim())?;
                }
            }
            let sample = LinearMapSample::new(ins.into_iter().zip(outs).collect())?;
            Ok(RunReport::from_report(&graph_sup_closed(&sample)?))
        }
        Command::Selftest { seed, dim, samples } => {
            let cfg = selftest::Config {
                seed: *seed,
                dim: *dim,
                samples: *samples,
            };
            let board = selftest::run(&cfg)?;
            let details = board.to_string().lines().map(String::from).collect();
            let witnesses = board
                .suites
                .iter()
                .flat_map(|s| {
                    s.report.failures().map(move |c| {
                        format!(
                            "{} / {}: {}",
                            s.name,
                            c.name,
                            c.witness.as_deref().unwrap_or("")
                        )
                    })
                })
                .collect::<Vec<_>>();
            let status = if board.passed() {
                Status::Pass
            } else {
                Status::Fail
            };
            Ok(RunReport::new(status, details, witnesses))
        }
    }
}
