//! JSON form of a module: vertices are 1-based, matrices are rows of
//! `"p/q"` strings.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::prepro::module::LambdaModule;
use crate::prepro::quiver::DoubleQuiver;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub from: usize,
    pub to: usize,
    pub star: bool,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub dims: Vec<usize>,
    pub arrows: Vec<ArrowJson>,
}

impl From<&LambdaModule> for ModuleJson {
    fn from(m: &LambdaModule) -> Self {
        let arrows = m
            .quiver()
            .arrows()
            .iter()
            .map(|a| ArrowJson {
                from: a.source + 1,
                to: a.target + 1,
                star: a.star,
                matrix: m.map(a.id).to_strings(),
            })
            .collect();
        ModuleJson { dims: m.dims().to_vec(), arrows }
    }
}

impl ModuleJson {
    pub fn to_module(&self, quiver: &Arc<DoubleQuiver>) -> Result<LambdaModule> {
        if self.dims.len() != quiver.vertices() {
            return Err(Error::Shape("dimension vector has the wrong length".into()));
        }
        let mut maps: Vec<Option<Matrix>> = vec![None; quiver.arrows().len()];
        for a in &self.arrows {
            let (s, t) = (a.from.wrapping_sub(1), a.to.wrapping_sub(1));
            let arrow = quiver
                .find(s, t)
                .ok_or_else(|| Error::Parse(format!("no arrow {} -> {}", a.from, a.to)))?;
            if arrow.star != a.star {
                return Err(Error::Parse(format!("arrow {} -> {} has the wrong star flag", a.from, a.to)));
            }
            let cols = self.dims[s];
            let m = if a.matrix.is_empty() {
                Matrix::zeros(0, cols)
            } else {
                Matrix::from_strings(cols, &a.matrix)?
            };
            maps[arrow.id] = Some(m);
        }
        let maps = quiver
            .arrows()
            .iter()
            .zip(maps)
            .map(|(a, m)| m.unwrap_or_else(|| Matrix::zeros(self.dims[a.target], self.dims[a.source])))
            .collect();
        LambdaModule::new(quiver.clone(), self.dims.clone(), maps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prepro::algebra::Preprojective;
    use crate::weyl::DynkinDiagram;

    #[test]
    fn round_trip() {
        let p = Preprojective::get(&DynkinDiagram::a(3));
        let m = p.injective(1);
        let json = serde_json::to_string(&ModuleJson::from(m)).unwrap();
        let back: ModuleJson = serde_json::from_str(&json).unwrap();
        assert_eq!(&back.to_module(p.quiver()).unwrap(), m);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn rejects_broken_relation() {
        let p = Preprojective::get(&DynkinDiagram::a(2));
        let bad = ModuleJson {
            dims: vec![1, 1],
            arrows: vec![
                ArrowJson { from: 1, to: 2, star: false, matrix: vec![vec!["1".into()]] },
                ArrowJson { from: 2, to: 1, star: true, matrix: vec![vec!["1".into()]] },
            ],
        };
        assert!(matches!(bad.to_module(p.quiver()), Err(Error::RelationFails(_))));
    }
}
