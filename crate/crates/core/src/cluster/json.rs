//! JSON form of a seed.
//!
//! Variables are written as Laurent polynomials in the initial variables
//! `x<id>`. The minor labels of the initial variables travel with the
//! document so that a vertex carrying an initial variable keeps its label
//! after any sequence of mutations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cluster::enumerate::{detect_type, DEFAULT_CAP};
use crate::cluster::laurent::LaurentPoly;
use crate::cluster::seed::Seed;
use crate::error::{Error, Result};
use crate::strata::GabrielQuiver;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub frozen: bool,
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedInfo {
    pub cluster_size: usize,
    pub frozen_count: usize,
    pub mutable_count: usize,
    pub cluster_type: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedDocument {
    pub vertices: Vec<VertexJson>,
    /// `[from, to, multiplicity]` by vertex id.
    pub arrows: Vec<[usize; 3]>,
    pub variables: Vec<String>,
    #[serde(default)]
    pub lambda: Option<Vec<Vec<i64>>>,
    /// `x<id>` to minor label, for the initial variables.
    #[serde(default)]
    pub initial_labels: BTreeMap<String, String>,
    /// Recomputed on every write; ignored on read.
    #[serde(default, skip_deserializing)]
    pub info: Option<SeedInfo>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl SeedDocument {
    pub fn from_seed(seed: &Seed) -> Self {
        let names = seed.variable_names();
        let vertices = (0..seed.len())
            .map(|p| VertexJson { id: seed.ids()[p], frozen: seed.quiver.frozen[p], label: seed.label(p) })
            .collect();
        let arrows = seed.quiver.arrow_list().into_iter().map(|(a, b, m)| [a, b, m]).collect();
        let initial_labels = names
            .iter()
            .zip(&seed.initial_labels)
            .filter_map(|(n, l)| l.clone().map(|l| (n.clone(), l)))
            .collect();
        let frozen_count = seed.quiver.frozen.iter().filter(|&&f| f).count();
        let info = SeedInfo {
            cluster_size: seed.len(),
            frozen_count,
            mutable_count: seed.len() - frozen_count,
            cluster_type: detect_type(&seed.quiver, DEFAULT_CAP).to_string(),
        };
        SeedDocument {
            vertices,
            arrows,
            variables: seed.variable_strings(),
            lambda: seed.lambda.clone(),
            initial_labels,
            info: Some(info),
            warnings: Vec::new(),
        }
    }

    pub fn to_seed(&self) -> Result<Seed> {
        let n = self.vertices.len();
        let ids: Vec<usize> = self.vertices.iter().map(|v| v.id).collect();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::Parse("duplicate vertex ids".into()));
        }
        let pos = |id: usize| ids.iter().position(|&x| x == id).ok_or(Error::NoSuchVertex(id));
        let mut arrows = vec![vec![0; n]; n];
        for &[a, b, m] in &self.arrows {
            if a == b {
                return Err(Error::Parse(format!("loop at vertex {a}")));
            }
            arrows[pos(a)?][pos(b)?] += m;
        }
        let quiver = GabrielQuiver::new(ids.clone(), self.vertices.iter().map(|v| v.frozen).collect(), arrows);
        if self.variables.len() != n {
            return Err(Error::Shape(format!("{} variables for {n} vertices", self.variables.len())));
        }
        let names: Vec<String> = ids.iter().map(|id| format!("x{id}")).collect();
        let variables = self.variables.iter().map(|s| LaurentPoly::parse(s, &names)).collect::<Result<Vec<_>>>()?;
        if let Some(l) = &self.lambda {
            if l.len() != n || l.iter().any(|r| r.len() != n) {
                return Err(Error::Shape("λ must be square with one row per vertex".into()));
            }
        }
        let initial_labels = names.iter().map(|nm| self.initial_labels.get(nm).cloned()).collect();
        Ok(Seed { quiver, variables, initial_labels, lambda: self.lambda.clone() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("seed documents serialise")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
