//! The preprojective algebra, built degree by degree.
//!
//! `P_i = Λ e_i` is assembled as a graded representation: the degree `d + 1`
//! piece at vertex `k` is the sum of the degree `d` pieces at the sources of
//! arrows into `k`, modulo the new relations `ρ_k x` for `x` of degree
//! `d - 1` at `k`. Paths are composed on the left, so the arrow maps of the
//! representation are the inclusions of these summands followed by the
//! quotient. The construction stops at the first degree with nothing left.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::linalg::{q, Matrix, Subspace};
use crate::prepro::module::LambdaModule;
use crate::prepro::quiver::DoubleQuiver;
use crate::weyl::{DynkinDiagram, Kind};

/// Per-diagram data shared by every computation over the same algebra.
#[derive(Debug)]
pub struct Preprojective {
    quiver: Arc<DoubleQuiver>,
    projectives: Vec<LambdaModule>,
    injectives: Vec<LambdaModule>,
}

impl Preprojective {
    /// Returns the cached algebra for a diagram, building it on first use.
    pub fn get(diagram: &DynkinDiagram) -> Arc<Preprojective> {
        static CACHE: OnceLock<Mutex<HashMap<(Kind, usize), Arc<Preprojective>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let key = (diagram.kind(), diagram.rank());
        if let Some(p) = cache.lock().unwrap().get(&key) {
            return p.clone();
        }
        let built = Arc::new(Preprojective::build(diagram));
        cache.lock().unwrap().entry(key).or_insert(built).clone()
    }

    fn build(diagram: &DynkinDiagram) -> Preprojective {
        let quiver = Arc::new(DoubleQuiver::new(diagram));
        let projectives: Vec<LambdaModule> =
            (0..diagram.rank()).map(|i| build_projective(&quiver, i)).collect();
        let injectives = projectives.iter().map(LambdaModule::dual).collect();
        Preprojective { quiver, projectives, injectives }
    }

    pub fn quiver(&self) -> &Arc<DoubleQuiver> {
        &self.quiver
    }

    pub fn rank(&self) -> usize {
        self.quiver.vertices()
    }

    pub fn projective(&self, i: usize) -> &LambdaModule {
        &self.projectives[i]
    }

    /// The injective envelope `Q_i` of the simple `S_i`.
    pub fn injective(&self, i: usize) -> &LambdaModule {
        &self.injectives[i]
    }

    pub fn injectives(&self) -> &[LambdaModule] {
        &self.injectives
    }

    pub fn simple(&self, i: usize) -> LambdaModule {
        LambdaModule::simple(self.quiver.clone(), i)
    }

    pub fn zero(&self) -> LambdaModule {
        LambdaModule::zero(self.quiver.clone())
    }

    /// `⊕_i Q_i`.
    pub fn injective_sum(&self) -> LambdaModule {
        LambdaModule::direct_sum_all(&self.quiver, &self.injectives)
    }

    pub fn dimension(&self) -> usize {
        self.projectives.iter().map(LambdaModule::dim).sum()
    }
}

/// Degree-`d` piece of `P_i`: dimension per vertex, plus the arrow maps from
/// degree `d` to degree `d + 1`.
struct Layer {
    dims: Vec<usize>,
}

fn build_projective(quiver: &Arc<DoubleQuiver>, i: usize) -> LambdaModule {
    let n = quiver.vertices();
    let mut layers = vec![Layer { dims: (0..n).map(|k| usize::from(k == i)).collect() }];
    // maps[d][arrow]: degree d at source -> degree d+1 at target
    let mut maps: Vec<Vec<Matrix>> = Vec::new();

    loop {
        let d = layers.len() - 1;
        let cur = &layers[d].dims;
        let mut next_dims = vec![0; n];
        let mut next_maps: Vec<Matrix> = vec![Matrix::zeros(0, 0); quiver.arrows().len()];
        for k in 0..n {
            let incoming: Vec<_> = quiver.arrows_into(k).copied().collect();
            // offsets of each incoming arrow's summand
            let mut offsets = Vec::with_capacity(incoming.len());
            let mut total = 0;
            for a in &incoming {
                offsets.push(total);
                total += cur[a.source];
            }
            // relations ρ_k x for x in degree d-1 at k
            let mut rel_rows: Vec<Vec<_>> = Vec::new();
            if d >= 1 {
                let prev_dim = layers[d - 1].dims[k];
                for x in 0..prev_dim {
                    let mut row = vec![q(0); total];
                    for (a, &off) in incoming.iter().zip(&offsets) {
                        // α*: k -> s(α), degree d-1 -> d
                        let m = &maps[d - 1][a.reverse_id()];
                        for r in 0..m.rows() {
                            row[off + r] = q(a.sign()) * &m[(r, x)];
                        }
                    }
                    rel_rows.push(row);
                }
            }
            let rel = Subspace::from_vectors(total, rel_rows);
            let pi = rel.quotient_map();
            next_dims[k] = pi.rows();
            for (a, &off) in incoming.iter().zip(&offsets) {
                next_maps[a.id] = pi.block(0, off, pi.rows(), cur[a.source]);
            }
        }
        maps.push(next_maps);
        let done = next_dims.iter().all(|&x| x == 0);
        layers.push(Layer { dims: next_dims });
        if done {
            break;
        }
    }

    // Assemble the graded pieces.
    let mut offsets = vec![vec![0usize; n]; layers.len()];
    let mut dims = vec![0usize; n];
    for (d, layer) in layers.iter().enumerate() {
        for k in 0..n {
            offsets[d][k] = dims[k];
            dims[k] += layer.dims[k];
        }
    }
    let full_maps = quiver
        .arrows()
        .iter()
        .map(|a| {
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            for d in 0..layers.len() - 1 {
                let block = &maps[d][a.id];
                if block.rows() > 0 && block.cols() > 0 {
                    m.set_block(offsets[d + 1][a.target], offsets[d][a.source], block);
                }
            }
            m
        })
        .collect();
    LambdaModule::new(quiver.clone(), dims, full_maps)
        .expect("projective satisfies the preprojective relation")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra_dim(s: &str) -> usize {
        Preprojective::get(&s.parse().unwrap()).dimension()
    }

    #[test]
    fn dimensions_of_preprojective_algebras() {
        for n in 1..=5 {
            assert_eq!(algebra_dim(&format!("A{n}")), n * (n + 1) * (n + 2) / 6);
        }
        for n in 4..=5 {
            assert_eq!(algebra_dim(&format!("D{n}")), n * (n - 1) * (2 * n - 1) / 3);
        }
        assert_eq!(algebra_dim("E6"), 156);
    }

    #[test]
    fn injectives_have_simple_socle() {
        let p = Preprojective::get(&"A3".parse().unwrap());
        for i in 0..3 {
            let qi = p.injective(i);
            qi.check_relation().unwrap();
            let mut expect = vec![0; 3];
            expect[i] = 1;
            assert_eq!(qi.socle_dims(), expect);
            let mut top = vec![0; 3];
            top[2 - i] = 1;
            assert_eq!(qi.top_dims(), top, "top of Q_{} is S_{}", i + 1, 3 - i);
        }
        assert_eq!(p.injective(0).dims(), &[1, 1, 1]);
        assert_eq!(p.injective(1).dims(), &[1, 2, 1]);
    }

    #[test]
    fn a1_is_the_field() {
        let p = Preprojective::get(&"A1".parse().unwrap());
        assert_eq!(p.injective(0).dims(), &[1]);
    }
}
