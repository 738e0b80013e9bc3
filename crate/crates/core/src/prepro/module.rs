//! Representations of the double quiver satisfying the preprojective
//! relation, and their submodules.

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Subspace};
use crate::prepro::quiver::DoubleQuiver;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaModule {
    quiver: Arc<DoubleQuiver>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl LambdaModule {
    /// Builds a module and checks shapes and the relation.
    pub fn new(quiver: Arc<DoubleQuiver>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let m = Self::new_unchecked(quiver, dims, maps)?;
        m.check_relation()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        quiver: Arc<DoubleQuiver>,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.vertices() || maps.len() != quiver.arrows().len() {
            return Err(Error::Shape("module does not match quiver".into()));
        }
        for a in quiver.arrows() {
            if maps[a.id].shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::Shape(format!(
                    "arrow {}->{} has shape {:?}",
                    a.source + 1,
                    a.target + 1,
                    maps[a.id].shape()
                )));
            }
        }
        Ok(LambdaModule { quiver, dims, maps })
    }

    pub fn zero(quiver: Arc<DoubleQuiver>) -> Self {
        let n = quiver.vertices();
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        LambdaModule { quiver, dims: vec![0; n], maps }
    }

    pub fn simple(quiver: Arc<DoubleQuiver>, i: usize) -> Self {
        let mut dims = vec![0; quiver.vertices()];
        dims[i] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        LambdaModule { quiver, dims, maps }
    }

    pub fn quiver(&self) -> &Arc<DoubleQuiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn check_relation(&self) -> Result<()> {
        for k in 0..self.quiver.vertices() {
            let d = self.dims[k];
            let mut acc = Matrix::zeros(d, d);
            for a in self.quiver.arrows_into(k) {
                let prod = self.maps[a.id].mul(&self.maps[a.reverse_id()]);
                acc = acc.add(&prod.scale(&q(a.sign())));
            }
            if !acc.is_zero() {
                return Err(Error::RelationFails(k + 1));
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &LambdaModule) -> LambdaModule {
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| Matrix::block_diag(&[a, b]))
            .collect();
        LambdaModule { quiver: self.quiver.clone(), dims, maps }
    }

    pub fn direct_sum_all<'a>(
        quiver: &Arc<DoubleQuiver>,
        parts: impl IntoIterator<Item = &'a LambdaModule>,
    ) -> LambdaModule {
        parts.into_iter().fold(LambdaModule::zero(quiver.clone()), |acc, m| acc.direct_sum(m))
    }

    pub fn power(&self, k: usize) -> LambdaModule {
        LambdaModule::direct_sum_all(&self.quiver, std::iter::repeat(self).take(k))
    }

    /// Transports the structure along invertible vertex maps `g_k`:
    /// `M'_α = g_t M_α g_s^{-1}`.
    pub fn conjugate(&self, g: &[Matrix]) -> Result<LambdaModule> {
        let inv: Vec<Matrix> = g
            .iter()
            .map(|m| m.inverse().ok_or_else(|| Error::Shape("singular base change".into())))
            .collect::<Result<_>>()?;
        let maps = self
            .quiver
            .arrows()
            .iter()
            .map(|a| g[a.target].mul(&self.maps[a.id]).mul(&inv[a.source]))
            .collect();
        Ok(LambdaModule { quiver: self.quiver.clone(), dims: self.dims.clone(), maps })
    }

    /// A random change of basis at every vertex.
    pub fn random_conjugate(&self, rng: &mut impl Rng) -> LambdaModule {
        loop {
            let g: Vec<Matrix> = self
                .dims
                .iter()
                .map(|&d| Matrix::from_fn(d, d, |_, _| q(rng.gen_range(-3..=3))))
                .collect();
            if let Ok(m) = self.conjugate(&g) {
                return m;
            }
        }
    }

    /// The dual module: `M'_α = (M_{α*})^T`.
    pub fn dual(&self) -> LambdaModule {
        let maps = self
            .quiver
            .arrows()
            .iter()
            .map(|a| self.maps[a.reverse_id()].transpose())
            .collect();
        LambdaModule { quiver: self.quiver.clone(), dims: self.dims.clone(), maps }
    }

    pub fn full_submodule(&self) -> Submodule {
        Submodule { spaces: self.dims.iter().map(|&d| Subspace::full(d)).collect() }
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule { spaces: self.dims.iter().map(|&d| Subspace::zero(d)).collect() }
    }

    pub fn is_submodule(&self, s: &Submodule) -> bool {
        self.quiver.arrows().iter().all(|a| {
            let img = s.spaces[a.source].image(&self.maps[a.id]);
            s.spaces[a.target].contains_space(&img)
        })
    }

    /// The smallest submodule containing the given per-vertex subspaces.
    pub fn generate(&self, seeds: &[Subspace]) -> Submodule {
        let mut spaces = seeds.to_vec();
        loop {
            let mut changed = false;
            for a in self.quiver.arrows() {
                let img = spaces[a.source].image(&self.maps[a.id]);
                if !spaces[a.target].contains_space(&img) {
                    spaces[a.target] = spaces[a.target].sum(&img);
                    changed = true;
                }
            }
            if !changed {
                return Submodule { spaces };
            }
        }
    }

    /// The submodule as a module in its own RREF basis.
    pub fn restrict(&self, s: &Submodule) -> Result<LambdaModule> {
        if !self.is_submodule(s) {
            return Err(Error::NotSubmodule);
        }
        let dims: Vec<usize> = s.spaces.iter().map(Subspace::dim).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .map(|a| {
                let src = &s.spaces[a.source];
                let tgt = &s.spaces[a.target];
                let mut m = Matrix::zeros(tgt.dim(), src.dim());
                for (c, b) in src.vectors().iter().enumerate() {
                    let img = self.maps[a.id].mul_vec(b);
                    for (r, x) in tgt.coordinates(&img).into_iter().enumerate() {
                        m[(r, c)] = x;
                    }
                }
                m
            })
            .collect();
        Ok(LambdaModule { quiver: self.quiver.clone(), dims, maps })
    }

    /// The quotient `X / S` in the coordinates of the free columns of `S`.
    pub fn quotient(&self, s: &Submodule) -> Result<LambdaModule> {
        if !self.is_submodule(s) {
            return Err(Error::NotSubmodule);
        }
        let pis: Vec<Matrix> = s.spaces.iter().map(Subspace::quotient_map).collect();
        let sigmas: Vec<Matrix> = s.spaces.iter().map(Subspace::quotient_section).collect();
        let dims = pis.iter().map(Matrix::rows).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .map(|a| pis[a.target].mul(&self.maps[a.id]).mul(&sigmas[a.source]))
            .collect();
        Ok(LambdaModule { quiver: self.quiver.clone(), dims, maps })
    }

    /// Dimension vector of the top `X / rad X`.
    pub fn top_dims(&self) -> Vec<usize> {
        (0..self.quiver.vertices())
            .map(|k| {
                let rad = self
                    .quiver
                    .arrows_into(k)
                    .fold(Subspace::zero(self.dims[k]), |acc, a| {
                        acc.sum(&Subspace::from_columns(&self.maps[a.id]))
                    });
                self.dims[k] - rad.dim()
            })
            .collect()
    }

    /// Dimension vector of the socle.
    pub fn socle_dims(&self) -> Vec<usize> {
        (0..self.quiver.vertices()).map(|k| self.socle_space(k).dim()).collect()
    }

    /// `∩ ker M_α` over arrows leaving `k`.
    pub fn socle_space(&self, k: usize) -> Subspace {
        self.quiver.arrows_out_of(k).fold(Subspace::full(self.dims[k]), |acc, a| {
            acc.intersection(&Subspace::from_columns(&self.maps[a.id].kernel()))
        })
    }

    /// Total-space matrix of a family of vertex maps (block diagonal).
    pub fn block_diag(maps: &[Matrix]) -> Matrix {
        let refs: Vec<&Matrix> = maps.iter().collect();
        Matrix::block_diag(&refs)
    }

    pub fn is_simple_at(&self, i: usize) -> bool {
        self.dim() == 1 && self.dims[i] == 1
    }
}

/// Per-vertex subspaces of an ambient module (which is passed alongside).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    pub spaces: Vec<Subspace>,
}

impl Submodule {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        Submodule { spaces: self.spaces.iter().zip(&other.spaces).map(|(a, b)| a.sum(b)).collect() }
    }

    pub fn intersection(&self, other: &Submodule) -> Submodule {
        Submodule {
            spaces: self.spaces.iter().zip(&other.spaces).map(|(a, b)| a.intersection(b)).collect(),
        }
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        self.spaces.iter().zip(&other.spaces).all(|(a, b)| a.contains_space(b))
    }
}
