//! The pipeline steps exposed by the binary and the service.

use std::fmt;

use strata_core::cluster::{Seed, SeedDocument};
use strata_core::job::{lockstep_mutation, run_seed, JobSpec, LockstepStep};
use strata_core::minors::initial_minors;
use strata_core::verify::{self, Report, Suite};
use strata_core::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Dot,
}

/// A failed command, with the process exit code it maps to.
#[derive(Debug)]
pub enum CommandError {
    /// Rejected input: bad syntax, `v ≰ w`, frozen vertex and so on.
    Input(Error),
    /// The two sides of a lockstep mutation disagree.
    Disagreement(String),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Input(Error::NotBruhatBelow) => 3,
            CommandError::Input(_) => 2,
            CommandError::Disagreement(_) => 4,
        }
    }
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Input(e) => write!(f, "{e}"),
            CommandError::Disagreement(s) => write!(f, "categorical and combinatorial mutation disagree: {s}"),
        }
    }
}

impl std::error::Error for CommandError {}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Input(e)
    }
}

/// Short machine-readable name of an error, used in JSON error bodies.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::UnknownType(_) => "unknown_type",
        Error::VertexOutOfRange { .. } => "vertex_out_of_range",
        Error::NotBruhatBelow => "not_bruhat_below",
        Error::NotReduced(_) => "not_reduced",
        Error::TypeAOnly => "type_a_only",
        Error::FrozenVertex(_) => "frozen_vertex",
        Error::NoSuchVertex(_) => "no_such_vertex",
        Error::InexactDivision(_) => "inexact_division",
        Error::ZeroDivision(_) => "zero_division",
        Error::NotSkew => "not_skew",
        Error::Shape(_) => "shape",
        Error::UnknownSuite(_) => "unknown_suite",
        _ => "internal",
    }
}

/// The initial seed document of a job.
pub fn seed_document(job: &JobSpec) -> Result<SeedDocument, Error> {
    Ok(run_seed(job)?.document())
}

/// DOT picture of a seed; vertices show their label when they carry an
/// initial variable and the Laurent expression otherwise.
pub fn dot(seed: &Seed) -> String {
    let strings = seed.variable_strings();
    let names: Vec<String> = (0..seed.len())
        .map(|p| match seed.label(p) {
            Some(l) => format!("{}: {l}", seed.ids()[p]),
            None => format!("{}: {}", seed.ids()[p], strings[p]),
        })
        .collect();
    seed.quiver.to_dot(Some(&names))
}

pub fn render(doc: &SeedDocument, format: Format) -> Result<String, Error> {
    Ok(match format {
        Format::Json => doc.to_json(),
        Format::Dot => dot(&doc.to_seed()?),
    })
}

/// Mutates along the vertex ids in order.
pub fn mutate(doc: &SeedDocument, vertices: &[usize]) -> Result<SeedDocument, Error> {
    let mut seed = doc.to_seed()?;
    for &id in vertices {
        seed = seed.mutate_id(id)?;
    }
    let mut out = SeedDocument::from_seed(&seed);
    out.warnings = doc.warnings.clone();
    Ok(out)
}

/// Mutates the initial seed of `job` and its cluster-tilting module side by
/// side. When `doc` is given it must be that initial seed.
pub fn mutate_categorical(
    job: &JobSpec,
    doc: Option<&SeedDocument>,
    vertices: &[usize],
) -> Result<(SeedDocument, Vec<LockstepStep>), CommandError> {
    let start = run_seed(job)?;
    if let Some(doc) = doc {
        if doc.to_seed()? != start.seed {
            return Err(CommandError::Input(Error::Invariant(
                "--categorical starts from the initial seed of the job; the input seed differs".into(),
            )));
        }
    }
    let (mut seed, mut tilting) = (start.seed.clone(), start.tilting.clone());
    let mut steps = Vec::new();
    for &id in vertices {
        let (next, data, step) = lockstep_mutation(&seed, &tilting, id)?;
        if step.ext_dim != 1 || !step.quiver_agrees || !step.multiplicities_agree {
            return Err(CommandError::Disagreement(format!(
                "at vertex {id}: ext {}, quiver {}, middle terms {}",
                step.ext_dim, step.quiver_agrees, step.multiplicities_agree
            )));
        }
        steps.push(step);
        seed = next;
        tilting = data;
    }
    let mut out = SeedDocument::from_seed(&seed);
    out.warnings = start.warnings;
    Ok((out, steps))
}

/// One line per vertex: id, frozen flag, minor of the initial variable.
pub fn minors_table(job: &JobSpec) -> Result<String, Error> {
    let s = run_seed(job)?;
    let minors = initial_minors(&s.spec)?;
    let mut out = String::new();
    for (p, summand) in s.tilting.summands.iter().enumerate() {
        let minor = minors
            .iter()
            .find(|(j, _)| *j == summand.index)
            .map_or_else(|| "-".to_string(), |(_, m)| m.to_string());
        let kind = if summand.frozen { "frozen" } else { "mutable" };
        let dims: Vec<String> = summand.module.dims().iter().map(ToString::to_string).collect();
        out.push_str(&format!("{}\t{kind}\t{minor}\t[{}]\n", s.seed.ids()[p], dims.join(" ")));
    }
    Ok(out)
}

pub fn run_verify(suite: &str, rng_seed: Option<u64>) -> Result<Report, Error> {
    let suite: Suite = suite.parse()?;
    Ok(verify::run(suite, rng_seed.unwrap_or(verify::DEFAULT_RNG_SEED)))
}
