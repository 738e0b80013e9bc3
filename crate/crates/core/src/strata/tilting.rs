//! The initial cluster-tilting module, its Gabriel quiver and λ-matrix.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::prepro::{
    compose, decompose, ext1_dim, hom_basis, hom_dim, indecomposable_pieces, is_indecomposable, is_isomorphic, LambdaModule,
    Morphism,
};
use crate::strata::category::CategorySpec;
use crate::strata::quiver::GabrielQuiver;

#[derive(Clone, Debug)]
pub struct Summand {
    /// Vertex id: the position `j` (1-based) of the word this summand comes
    /// from, or an id past the end of the word for further pieces of a
    /// decomposable `U_j`.
    pub index: usize,
    /// Position `j` whose `U_j` contains this summand.
    pub source: usize,
    pub module: LambdaModule,
    pub frozen: bool,
}

/// What happened to a position whose `U_j` did not become a summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dropped {
    Zero(usize),
    /// `U_j` (or a piece of it) is isomorphic to the summand with id `of`.
    Duplicate { index: usize, of: usize },
}

#[derive(Clone, Debug)]
pub struct ClusterTiltingData {
    pub summands: Vec<Summand>,
    pub quiver: GabrielQuiver,
    pub lambda: Vec<Vec<i64>>,
    pub dropped: Vec<Dropped>,
}

impl ClusterTiltingData {
    pub fn indices(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.index).collect()
    }

    pub fn modules(&self) -> Vec<LambdaModule> {
        self.summands.iter().map(|s| s.module.clone()).collect()
    }

    pub fn frozen(&self) -> Vec<bool> {
        self.summands.iter().map(|s| s.frozen).collect()
    }

    pub fn position(&self, index: usize) -> Option<usize> {
        self.summands.iter().position(|s| s.index == index)
    }

    /// Builds quiver and λ-matrix for a list of summands.
    pub fn from_summands(summands: Vec<Summand>, dropped: Vec<Dropped>) -> Self {
        let modules: Vec<LambdaModule> = summands.iter().map(|s| s.module.clone()).collect();
        let arrows = gabriel_arrows(&modules);
        let quiver = GabrielQuiver::new(
            summands.iter().map(|s| s.index).collect(),
            summands.iter().map(|s| s.frozen).collect(),
            arrows,
        );
        let lambda = poisson_matrix(&modules);
        ClusterTiltingData { summands, quiver, lambda, dropped }
    }

    /// Summand dimension vectors, frozen flags, arrows and λ as JSON.
    pub fn to_json(&self) -> String {
        let doc = serde_json::json!({
            "summands": self.summands.iter().map(|s| serde_json::json!({
                "index": s.index,
                "source": s.source,
                "dims": s.module.dims(),
                "frozen": s.frozen,
            })).collect::<Vec<_>>(),
            "arrows": self.quiver.arrow_list().into_iter().map(|(a, b, m)| [a, b, m]).collect::<Vec<_>>(),
            "lambda": self.lambda,
        });
        serde_json::to_string_pretty(&doc).expect("plain JSON values")
    }

    /// `Ext¹(T, T) = 0`.
    pub fn is_rigid(&self) -> bool {
        if self.summands.is_empty() {
            return true;
        }
        let t = LambdaModule::direct_sum_all(
            self.summands[0].module.quiver(),
            self.summands.iter().map(|s| &s.module),
        );
        ext1_dim(&t, &t) == 0
    }
}

/// The summands `U_j`, deduplicated, with frozen flags, quiver and λ.
pub fn initial_tilting(spec: &CategorySpec) -> Result<ClusterTiltingData> {
    let u = spec.u_modules();
    let j_set = spec.j_set();
    // positions in J first, so that duplicates point back into J
    let mut order: Vec<usize> = j_set.clone();
    order.extend((1..=u.len()).filter(|j| !j_set.contains(j)));
    let mut summands: Vec<Summand> = Vec::new();
    let mut dropped = Vec::new();
    let mut next_id = u.len() + 1;
    for j in order {
        let m = u[j - 1].clone();
        if m.is_zero() {
            dropped.push(Dropped::Zero(j));
            continue;
        }
        let pieces = if is_indecomposable(&m) { vec![m] } else { indecomposable_pieces(&m)? };
        let mut first = true;
        for piece in pieces {
            if let Some(s) = summands.iter().find(|s| is_isomorphic(&s.module, &piece)) {
                dropped.push(Dropped::Duplicate { index: j, of: s.index });
                continue;
            }
            // further pieces of a decomposable U_j get fresh ids
            let index = if first { j } else { next_id };
            if !first {
                next_id += 1;
            }
            first = false;
            summands.push(Summand { index, source: j, module: piece, frozen: false });
        }
    }
    summands.sort_by_key(|s| s.index);
    dropped.sort_by_key(|d| match d {
        Dropped::Zero(j) | Dropped::Duplicate { index: j, .. } => *j,
    });
    let expected = spec.dimension();
    if summands.len() != expected {
        return Err(Error::Invariant(format!(
            "found {} summands, expected ℓ(w) - ℓ(v) = {expected}",
            summands.len()
        )));
    }

    let mut pro_inj = Vec::new();
    for q in spec.projective_injectives() {
        for (piece, _) in decompose(&q)? {
            pro_inj.push(piece);
        }
    }
    for s in &mut summands {
        s.frozen = pro_inj.iter().any(|p| is_isomorphic(p, &s.module));
    }

    let data = ClusterTiltingData::from_summands(summands, dropped);
    if !data.is_rigid() {
        return Err(Error::Invariant("U is not rigid".into()));
    }
    Ok(data)
}

/// `λ_ij = dim Hom(T_i, T_j) - dim Hom(T_j, T_i)`.
pub fn poisson_matrix(modules: &[LambdaModule]) -> Vec<Vec<i64>> {
    let n = modules.len();
    let h: Vec<Vec<i64>> = modules
        .iter()
        .map(|a| modules.iter().map(|b| hom_dim(a, b) as i64).collect())
        .collect();
    (0..n).map(|i| (0..n).map(|j| h[i][j] - h[j][i]).collect()).collect()
}

fn flatten(f: &Morphism) -> Vec<crate::linalg::Q> {
    f.iter().flat_map(Matrix::to_vec).collect()
}

/// Radical morphisms `T_a → T_b` of `add(T)`: everything when `a ≠ b`,
/// the non-invertible endomorphisms when `a = b`.
fn radical_basis(modules: &[LambdaModule], a: usize, b: usize) -> Vec<Morphism> {
    let basis = hom_basis(&modules[a], &modules[b]);
    if a != b {
        return basis;
    }
    // rad End = kernel of the trace form
    let k = basis.len();
    let tr = |x: &Morphism, y: &Morphism| -> crate::linalg::Q { compose(x, y).iter().map(Matrix::trace).sum() };
    let gram = Matrix::from_fn(k, k, |i, j| tr(&basis[i], &basis[j]));
    let ker = gram.kernel();
    (0..ker.cols())
        .map(|c| {
            let mut out: Morphism = basis[0].iter().map(|m| Matrix::zeros(m.rows(), m.cols())).collect();
            for (i, f) in basis.iter().enumerate() {
                let coeff = &ker[(i, c)];
                for (o, fk) in out.iter_mut().zip(f) {
                    *o = o.add(&fk.scale(coeff));
                }
            }
            out
        })
        .collect()
}

/// `arrows[a][b] = dim rad(T_a, T_b) - dim rad²(T_a, T_b)`.
pub fn gabriel_arrows(modules: &[LambdaModule]) -> Vec<Vec<usize>> {
    let n = modules.len();
    let rad: Vec<Vec<Vec<Morphism>>> =
        (0..n).map(|a| (0..n).map(|b| radical_basis(modules, a, b)).collect()).collect();
    let mut arrows = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            if rad[a][b].is_empty() {
                continue;
            }
            let len = flatten(&rad[a][b][0]).len();
            let mut products = Vec::new();
            for l in 0..n {
                for f in &rad[a][l] {
                    for g in &rad[l][b] {
                        products.push(flatten(&compose(g, f)));
                    }
                }
            }
            let rad2 = Subspace::from_vectors(len, products).dim();
            arrows[a][b] = rad[a][b].len() - rad2;
        }
    }
    arrows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DynkinDiagram;

    #[test]
    fn single_simple_reflection() {
        let spec = CategorySpec::parse(&DynkinDiagram::a(2), "", "s1", None).unwrap();
        let t = initial_tilting(&spec).unwrap();
        assert_eq!(t.summands.len(), 1);
        assert!(t.summands[0].frozen);
        assert!(is_isomorphic(&t.summands[0].module, &spec.algebra().simple(0)));
        assert_eq!(t.quiver.arrow_count(), 0);
    }

    #[test]
    fn torus_stratum_has_no_mutable_vertex() {
        let spec = CategorySpec::parse(&DynkinDiagram::a(3), "s2", "s1 s2 s3", None).unwrap();
        let t = initial_tilting(&spec).unwrap();
        assert_eq!(t.summands.len(), 2);
        assert!(t.summands.iter().all(|s| s.frozen));
    }

    #[test]
    fn json_form() {
        let spec = CategorySpec::parse(&DynkinDiagram::a(2), "", "s1 s2", None).unwrap();
        let t = initial_tilting(&spec).unwrap();
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["summands"].as_array().unwrap().len(), 2);
        assert_eq!(v["lambda"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn decomposable_u_splits_into_frozen_pieces() {
        let spec = CategorySpec::parse(&DynkinDiagram::a(3), "s2", "s1 s3 s2 s1 s3", None).unwrap();
        let t = initial_tilting(&spec).unwrap();
        assert_eq!(t.summands.len(), 4);
        assert!(t.summands.iter().all(|s| s.frozen));
    }

    fn a5_codim_one() -> CategorySpec {
        CategorySpec::parse(
            &DynkinDiagram::a(5),
            "s1 s2 s1 s4 s5 s4",
            "s1 s3 s5 s2 s4 s1 s3 s5 s2 s4 s1 s3 s5 s4",
            Some("s1 s3 s5 s2 s4 s1 s3 s5 s2 s4 s1 s3 s5 s4"),
        )
        .unwrap()
    }

    #[test]
    fn a5_codim_one_quiver_and_lambda() {
        let t = initial_tilting(&a5_codim_one()).unwrap();
        assert_eq!(t.indices(), vec![3, 7, 8, 10, 11, 12, 13, 14]);
        let frozen: Vec<usize> = t.summands.iter().filter(|s| s.frozen).map(|s| s.index).collect();
        assert_eq!(frozen, vec![10, 11, 12, 13, 14]);
        let mut arrows: Vec<(usize, usize)> = t.quiver.arrow_list().iter().map(|&(a, b, m)| {
            assert_eq!(m, 1);
            (a, b)
        }).collect();
        arrows.sort();
        let mut expect = vec![
            (7, 12), (10, 7), (13, 10), (3, 10), (12, 10), (8, 13), (10, 8),
            (11, 8), (8, 3), (7, 3), (13, 11), (14, 11), (3, 14),
        ];
        expect.sort();
        assert_eq!(arrows, expect);
        let lambda: Vec<Vec<i64>> = vec![
            vec![0, -1, 0, 0, 0, 0, 0, 1],
            vec![1, 0, 1, 0, 1, 1, 0, 1],
            vec![0, -1, 0, -1, -1, -1, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 0, 1],
            vec![0, -1, 1, 0, 0, 0, 0, 0],
            vec![0, -1, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 0, 0],
            vec![-1, -1, 0, -1, 0, 0, 0, 0],
        ];
        assert_eq!(t.lambda, lambda);
    }
}
