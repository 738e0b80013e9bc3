//! Mutation of a cluster-tilting module through approximation sequences.
//!
//! For a mutable summand `M` of `T`, the right `add(T/M)`-approximation
//! `B → M` starts from `⊕_k T_k^{dim Hom(T_k, M)}` with the evaluation map.
//! A copy of `T_k` is dropped while its component `T_k → M` factors through
//! the remaining copies; when nothing more can be dropped no summand of `B`
//! lies in the kernel, which is right-minimality. `M' = ker(B → M)` replaces
//! `M`, and the approximation of `M'` must have kernel `M` again.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::prepro::{
    compose, ext1_dim, hom_basis, is_indecomposable, is_isomorphic, is_surjective, kernel, LambdaModule, Morphism,
};
use crate::strata::tilting::{ClusterTiltingData, Summand};

/// A minimal right approximation: the copies `(position, component map)`.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub copies: Vec<(usize, Morphism)>,
    pub source: LambdaModule,
    pub map: Morphism,
}

impl Approximation {
    /// Multiplicity of each summand position in the middle term.
    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let mut m = vec![0; n];
        for (k, _) in &self.copies {
            m[*k] += 1;
        }
        m
    }
}

fn flatten(f: &Morphism) -> Vec<crate::linalg::Q> {
    f.iter().flat_map(Matrix::to_vec).collect()
}

/// Minimal right approximation of `target` by `add` of the modules at the
/// given positions.
pub fn right_approximation(
    modules: &[LambdaModule],
    positions: &[usize],
    target: &LambdaModule,
) -> Result<Approximation> {
    let mut copies: Vec<(usize, Morphism)> = Vec::new();
    for &k in positions {
        for f in hom_basis(&modules[k], target) {
            copies.push((k, f));
        }
    }
    let n = modules.len();
    let mut homs: Vec<Vec<Option<Vec<Morphism>>>> = vec![vec![None; n]; n];
    let mut hom = |a: usize, b: usize| -> Vec<Morphism> {
        homs[a][b].get_or_insert_with(|| hom_basis(&modules[a], &modules[b])).clone()
    };

    let mut steps = 0;
    'shrink: loop {
        steps += 1;
        if steps > 10_000 {
            return Err(Error::Invariant("approximation did not become minimal".into()));
        }
        for c in 0..copies.len() {
            let (kc, fc) = &copies[c];
            let target_vec = flatten(fc);
            let mut span = Vec::new();
            for (d, (kd, fd)) in copies.iter().enumerate() {
                if d == c {
                    continue;
                }
                for h in hom(*kc, *kd) {
                    span.push(flatten(&compose(fd, &h)));
                }
            }
            let space = Subspace::from_vectors(target_vec.len(), span);
            if space.contains(&target_vec) {
                copies.remove(c);
                continue 'shrink;
            }
        }
        break;
    }

    let quiver = target.quiver();
    let source = LambdaModule::direct_sum_all(quiver, copies.iter().map(|(k, _)| &modules[*k]));
    let map: Morphism = (0..quiver.vertices())
        .map(|v| {
            copies.iter().fold(Matrix::zeros(target.dims()[v], 0), |acc, (_, f)| acc.hstack(&f[v]))
        })
        .collect();
    Ok(Approximation { copies, source, map })
}

#[derive(Clone, Debug)]
pub struct CategoricalMutation {
    pub data: ClusterTiltingData,
    pub old_module: LambdaModule,
    pub new_module: LambdaModule,
    /// Middle term of `0 → M' → B → M → 0`, as multiplicities per position.
    pub forward: Vec<usize>,
    /// Middle term of `0 → M → B' → M' → 0`.
    pub backward: Vec<usize>,
    pub ext_dim: usize,
    pub quiver_agrees: bool,
}

/// Mutates the summand at `pos` (a position in `data.summands`).
pub fn categorical_mutation(data: &ClusterTiltingData, pos: usize) -> Result<CategoricalMutation> {
    let summand = data.summands.get(pos).ok_or(Error::NoSuchVertex(pos))?;
    if summand.frozen {
        return Err(Error::FrozenVertex(summand.index));
    }
    let modules = data.modules();
    let others: Vec<usize> = (0..modules.len()).filter(|&k| k != pos).collect();
    let m = &modules[pos];

    let fwd = right_approximation(&modules, &others, m)?;
    if !is_surjective(&fwd.map) {
        return Err(Error::Invariant("approximation is not surjective".into()));
    }
    let new_module = fwd.source.restrict(&kernel(&fwd.map))?;
    if !is_indecomposable(&new_module) {
        return Err(Error::Invariant("exchanged module is decomposable".into()));
    }
    if modules.iter().any(|t| is_isomorphic(t, &new_module)) {
        return Err(Error::Invariant("exchanged module is already a summand".into()));
    }

    let bwd = right_approximation(&modules, &others, &new_module)?;
    if !is_surjective(&bwd.map) {
        return Err(Error::Invariant("second approximation is not surjective".into()));
    }
    let back = bwd.source.restrict(&kernel(&bwd.map))?;
    if !is_isomorphic(&back, m) {
        return Err(Error::Invariant("exchange sequences do not close up".into()));
    }

    let ext_dim = ext1_dim(m, &new_module);
    let mut summands = data.summands.clone();
    summands[pos] = Summand { index: summand.index, source: summand.source, module: new_module.clone(), frozen: false };
    let new_data = ClusterTiltingData::from_summands(summands, data.dropped.clone());
    if !new_data.is_rigid() {
        return Err(Error::Invariant("mutated module is not rigid".into()));
    }
    let quiver_agrees = data.quiver.mutate(pos).agrees_off_frozen(&new_data.quiver);
    let n = modules.len();
    Ok(CategoricalMutation {
        data: new_data,
        old_module: m.clone(),
        new_module,
        forward: fwd.multiplicities(n),
        backward: bwd.multiplicities(n),
        ext_dim,
        quiver_agrees,
    })
}
