//! Property tests against independent oracles.

use std::sync::OnceLock;

use proptest::prelude::*;
use strata_core::cluster::{check_compatibility, enumerate_class, Seed, SeedDocument, DEFAULT_CAP};
use strata_core::job::{run_seed, SeedJob};
use strata_core::verify::a5_codim_one_job;
use strata_core::weyl::{DynkinDiagram, Weyl, WeylElement};

fn a4() -> &'static (Weyl, Vec<WeylElement>) {
    static CELL: OnceLock<(Weyl, Vec<WeylElement>)> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = Weyl::new(DynkinDiagram::a(4));
        let e = g.elements();
        (g, e)
    })
}

fn example() -> &'static SeedJob {
    static CELL: OnceLock<SeedJob> = OnceLock::new();
    CELL.get_or_init(|| run_seed(&a5_codim_one_job()).unwrap())
}

/// Subword property: `v ≤ w` iff some subword of a reduced word of `w`
/// multiplies to `v`.
fn subword_oracle(g: &Weyl, v: &WeylElement, w: &WeylElement) -> bool {
    let word = g.reduced_word(w);
    let letters = word.letters();
    (0u32..1 << letters.len()).any(|mask| {
        let mut x = g.identity();
        for (k, &a) in letters.iter().enumerate() {
            if mask & (1 << k) != 0 {
                x = x.mul(g.s(a));
            }
        }
        x == *v
    })
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).flat_map(|a| (a + 1..p.len()).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count()
}

/// Walks a mutation sequence given as indices into the mutable positions.
fn walk(seed: &Seed, steps: &[usize]) -> (Seed, Vec<usize>) {
    let mutable = seed.mutable_positions();
    let mut s = seed.clone();
    let mut used = Vec::new();
    for &k in steps {
        let pos = mutable[k % mutable.len()];
        s = s.mutate(pos).unwrap();
        used.push(pos);
    }
    (s, used)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bruhat_order_matches_subwords(i in 0usize..120, j in 0usize..120) {
        let (g, e) = a4();
        prop_assert_eq!(g.bruhat_leq(&e[i], &e[j]), subword_oracle(g, &e[i], &e[j]));
    }

    #[test]
    fn length_is_the_number_of_inversions(i in 0usize..120) {
        let (g, e) = a4();
        prop_assert_eq!(g.length(&e[i]), inversions(&g.to_perm(&e[i]).unwrap()));
    }

    #[test]
    fn permutations_multiply_by_composition(i in 0usize..120, j in 0usize..120) {
        let (g, e) = a4();
        let (p, q) = (g.to_perm(&e[i]).unwrap(), g.to_perm(&e[j]).unwrap());
        let pq: Vec<usize> = q.iter().map(|&x| p[x - 1]).collect();
        prop_assert_eq!(g.to_perm(&e[i].mul(&e[j])).unwrap(), pq);
    }

    #[test]
    fn mutation_sequences_undo(steps in proptest::collection::vec(0usize..3, 0..12)) {
        let start = &example().seed;
        let (mut s, used) = walk(start, &steps);
        for &pos in used.iter().rev() {
            s = s.mutate(pos).unwrap();
        }
        prop_assert_eq!(&s, start);
    }

    #[test]
    fn compatibility_survives_mutation(steps in proptest::collection::vec(0usize..3, 0..12)) {
        let (s, _) = walk(&example().seed, &steps);
        let lambda = s.lambda.clone().unwrap();
        let c = check_compatibility(&s.quiver.exchange_matrix(), &s.quiver.frozen, &lambda).unwrap();
        prop_assert!(c.compatible, "{:?}", c.product);
        for (r, row) in c.product.iter().enumerate() {
            let k = s.mutable_positions()[r];
            prop_assert_eq!(row[k], 2);
        }
    }

    #[test]
    fn seed_documents_round_trip(steps in proptest::collection::vec(0usize..3, 0..8)) {
        let (s, _) = walk(&example().seed, &steps);
        let doc = SeedDocument::from_seed(&s);
        let back = SeedDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(back.to_seed().unwrap(), s);
    }
}

#[test]
fn class_size_does_not_depend_on_the_start() {
    let start = &example().seed;
    for steps in [vec![0], vec![1, 2], vec![2, 0, 1, 2]] {
        let (s, _) = walk(start, &steps);
        let class = enumerate_class(&s, DEFAULT_CAP).unwrap();
        assert_eq!((class.seeds.len(), class.variables.len()), (14, 9));
    }
}
