//! End-to-end jobs: `(type, v, w, word)` to a seed document, and mutation
//! sequences run on the combinatorial and the categorical side together.

use serde::{Deserialize, Serialize};

use crate::cluster::{Seed, SeedDocument};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::minors::{initial_minors, minor};
use crate::prepro::LambdaModule;
use crate::strata::{categorical_mutation, initial_tilting, CategorySpec, ClusterTiltingData};
use crate::weyl::{DynkinDiagram, Kind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    /// Dynkin type such as `"A5"`.
    #[serde(rename = "type")]
    pub kind: String,
    /// Reduced-word strings like `"s1 s2 s1"`; empty for the identity.
    #[serde(default)]
    pub v: String,
    pub w: String,
    /// Reduced word of `w` to use instead of the canonical one.
    #[serde(default, alias = "i")]
    pub word: Option<String>,
    #[serde(default)]
    pub seed_rng: Option<u64>,
}

impl JobSpec {
    pub fn new(kind: &str, v: &str, w: &str, word: Option<&str>) -> Self {
        JobSpec { kind: kind.into(), v: v.into(), w: w.into(), word: word.map(Into::into), seed_rng: None }
    }

    pub fn category(&self) -> Result<CategorySpec> {
        let diagram: DynkinDiagram = self.kind.parse()?;
        CategorySpec::parse(&diagram, &self.v, &self.w, self.word.as_deref())
    }
}

/// Everything computed for a job.
#[derive(Clone, Debug)]
pub struct SeedJob {
    pub spec: CategorySpec,
    pub tilting: ClusterTiltingData,
    pub seed: Seed,
    pub warnings: Vec<String>,
}

impl SeedJob {
    pub fn document(&self) -> SeedDocument {
        let mut doc = SeedDocument::from_seed(&self.seed);
        doc.warnings = self.warnings.clone();
        doc
    }
}

pub fn run_seed(job: &JobSpec) -> Result<SeedJob> {
    let spec = job.category()?;
    let tilting = initial_tilting(&spec)?;
    let mut warnings = Vec::new();
    let labels: Vec<Option<String>> = if spec.weyl().diagram().kind() == Kind::A {
        let minors = initial_minors(&spec)?;
        let u = spec.u_modules();
        // a piece of a decomposable U_j is not labelled by the minor of U_j
        tilting
            .summands
            .iter()
            .map(|s| {
                let whole = s.index == s.source && u[s.source - 1].dim() == s.module.dim();
                minors.iter().find(|(k, _)| *k == s.index && whole).map(|(_, m)| m.to_string())
            })
            .collect()
    } else {
        warnings.push("minor labels are only available in type A".into());
        vec![None; tilting.summands.len()]
    };
    let seed = Seed::initial(tilting.quiver.clone(), labels, Some(tilting.lambda.clone()));
    Ok(SeedJob { spec, tilting, seed, warnings })
}

/// One mutation done on both sides.
#[derive(Clone, Debug)]
pub struct LockstepStep {
    pub vertex: usize,
    pub old_module: LambdaModule,
    pub new_module: LambdaModule,
    /// Middle terms of the two exchange sequences, by position.
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
    pub ext_dim: usize,
    /// The categorical quiver agrees with the mutated seed off frozen pairs.
    pub quiver_agrees: bool,
    /// Middle-term multiplicities equal the arrows into and out of the vertex.
    pub multiplicities_agree: bool,
}

/// Mutates the seed and the cluster-tilting module at the vertex with the
/// given id and compares the two results.
pub fn lockstep_mutation(
    seed: &Seed,
    tilting: &ClusterTiltingData,
    id: usize,
) -> Result<(Seed, ClusterTiltingData, LockstepStep)> {
    let pos = seed.position(id)?;
    if tilting.summands.get(pos).map(|s| s.index) != Some(id) {
        return Err(Error::Invariant("seed and module are labelled differently".into()));
    }
    let next = seed.mutate(pos)?;
    let cm = categorical_mutation(tilting, pos)?;
    let n = seed.len();
    let arrows = &seed.quiver.arrows;
    let multiplicities_agree =
        (0..n).all(|i| cm.forward[i] == arrows[i][pos] && cm.backward[i] == arrows[pos][i]);
    let quiver_agrees = cm.quiver_agrees && cm.data.quiver.agrees_off_frozen(&next.quiver);
    let step = LockstepStep {
        vertex: id,
        old_module: cm.old_module,
        new_module: cm.new_module,
        forward: cm.forward,
        backward: cm.backward,
        ext_dim: cm.ext_dim,
        quiver_agrees,
        multiplicities_agree,
    };
    Ok((next, cm.data, step))
}

/// Values of the initial variables at a point of `N`, in seed order.
pub fn initial_values(spec: &CategorySpec, seed: &Seed, x: &Matrix) -> Result<Vec<Q>> {
    let minors = initial_minors(spec)?;
    seed.ids()
        .iter()
        .map(|id| {
            minors
                .iter()
                .find(|(j, _)| j == id)
                .map(|(_, m)| minor(x, m))
                .ok_or(Error::NoSuchVertex(*id))
        })
        .collect()
}
