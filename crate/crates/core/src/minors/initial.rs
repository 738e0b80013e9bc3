//! The initial cluster variables of `C_{v,w}` as minors.

use crate::error::Result;
use crate::linalg::{Matrix, Q};
use crate::minors::{minor, MinorSpec};
use crate::strata::CategorySpec;
use crate::weyl::Word;

/// `(j, Δ_{v_(j)^{-1}(ϖ_{i_j}), w_(j)^{-1}(ϖ_{i_j})})` for `j ∈ J`, with
/// `w_(j) = s_{i_j} ⋯ s_{i_1}`.
pub fn initial_minors(spec: &CategorySpec) -> Result<Vec<(usize, MinorSpec)>> {
    let weyl = spec.weyl();
    let word = spec.word();
    let seq = spec.v_sequence();
    spec.j_set()
        .into_iter()
        .map(|j| {
            let i = word.at(j);
            let wj = weyl.from_word(&Word::new((1..=j).rev().map(|k| word.at(k)).collect()));
            let rows = weyl.weight_subset(&seq[j].inverse(), i)?;
            let cols = weyl.weight_subset(&wj.inverse(), i)?;
            Ok((j, MinorSpec::new(rows, cols)?))
        })
        .collect()
}

pub fn initial_cluster_values(spec: &CategorySpec, x: &Matrix) -> Result<Vec<(usize, Q)>> {
    Ok(initial_minors(spec)?.into_iter().map(|(j, m)| (j, minor(x, &m))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::sample_unitri;
    use crate::weyl::DynkinDiagram;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn a5_initial_minors_match_reduced_labels() {
        let w = "s1 s3 s5 s2 s4 s1 s3 s5 s2 s4 s1 s3 s5 s4";
        let spec = CategorySpec::parse(&DynkinDiagram::a(5), "s1 s2 s1 s4 s5 s4", w, Some(w)).unwrap();
        let labels = ["Δ_{3,5}", "Δ_{3,4}", "Δ_{123,256}", "Δ_{123,245}", "Δ_{23,56}", "Δ_{123,234}", "Δ_{123,456}", "Δ_{3,6}"];
        let minors = initial_minors(&spec).unwrap();
        assert_eq!(minors.iter().map(|m| m.0).collect::<Vec<_>>(), vec![3, 7, 8, 10, 11, 12, 13, 14]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let x = sample_unitri(6, &mut rng);
            for ((_, m), label) in minors.iter().zip(labels) {
                let reduced: MinorSpec = label.parse().unwrap();
                assert_eq!(minor(&x, m), minor(&x, &reduced), "{m} vs {label}");
            }
        }
    }

    #[test]
    fn torus_stratum_frozen_minors() {
        let spec = CategorySpec::parse(&DynkinDiagram::a(3), "s2", "s1 s2 s3", None).unwrap();
        let labels: Vec<String> = initial_minors(&spec).unwrap().iter().map(|(_, m)| m.to_string()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let x = sample_unitri(4, &mut rng);
        let values: Vec<Q> = initial_cluster_values(&spec, &x).unwrap().into_iter().map(|p| p.1).collect();
        assert_eq!(values.len(), 2);
        let d14 = minor(&x, &"Δ_{1,4}".parse().unwrap());
        let d34 = minor(&x, &"Δ_{3,4}".parse().unwrap());
        assert!(values.contains(&d14) && values.contains(&d34), "{labels:?}");
    }

    #[test]
    fn identity_point_gives_ones_when_w_trivial() {
        let spec = CategorySpec::parse(&DynkinDiagram::a(3), "", "", None).unwrap();
        assert!(initial_minors(&spec).unwrap().is_empty());
        let spec = CategorySpec::parse(&DynkinDiagram::a(3), "s1", "s1", None).unwrap();
        for (_, x) in initial_cluster_values(&spec, &Matrix::identity(4)).unwrap() {
            assert_eq!(x, crate::linalg::q(1));
        }
    }
}
