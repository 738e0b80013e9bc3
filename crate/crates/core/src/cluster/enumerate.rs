//! Breadth-first mutation classes, finite type detection and the
//! compatibility diagnostic for `(B, λ)`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::cluster::laurent::LaurentPoly;
use crate::cluster::seed::Seed;
use crate::error::{Error, Result};
use crate::strata::GabrielQuiver;
use crate::weyl::Kind;

pub const DEFAULT_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassStatus {
    Complete,
    /// The cap was hit: possibly infinite type.
    CapReached,
}

#[derive(Clone, Debug)]
pub struct MutationClass {
    pub seeds: Vec<Seed>,
    /// Non-frozen variables across all seeds.
    pub variables: BTreeSet<LaurentPoly>,
    /// `(from, position, to)` for every mutation explored.
    pub edges: Vec<(usize, usize, usize)>,
    pub status: ClassStatus,
}

/// Key identifying a seed up to relabelling of its mutable vertices: mutable
/// positions sorted by variable, then the arrows in that order.
fn seed_key(seed: &Seed) -> (Vec<LaurentPoly>, Vec<Vec<usize>>) {
    let mut order: Vec<usize> = (0..seed.len()).filter(|&p| seed.quiver.frozen[p]).collect();
    let mut mutable = seed.mutable_positions();
    mutable.sort_by(|&a, &b| seed.variables[a].cmp(&seed.variables[b]));
    order.extend(mutable);
    let vars = order.iter().map(|&p| seed.variables[p].clone()).collect();
    let arrows = order.iter().map(|&a| order.iter().map(|&b| seed.quiver.arrows[a][b]).collect()).collect();
    (vars, arrows)
}

/// All seeds reachable from `seed`, up to relabelling of mutable vertices.
pub fn enumerate_class(seed: &Seed, cap: usize) -> Result<MutationClass> {
    let mut seeds = vec![seed.clone()];
    let mut index: HashMap<_, usize> = HashMap::from([(seed_key(seed), 0)]);
    let mut queue = VecDeque::from([0]);
    let mut edges = Vec::new();
    let mut status = ClassStatus::Complete;
    'bfs: while let Some(s) = queue.pop_front() {
        for k in seeds[s].mutable_positions() {
            let next = seeds[s].mutate(k)?;
            let key = seed_key(&next);
            let t = match index.get(&key) {
                Some(&t) => t,
                None => {
                    if seeds.len() >= cap {
                        status = ClassStatus::CapReached;
                        break 'bfs;
                    }
                    seeds.push(next);
                    index.insert(key, seeds.len() - 1);
                    queue.push_back(seeds.len() - 1);
                    seeds.len() - 1
                }
            };
            edges.push((s, k, t));
        }
    }
    let variables = seeds
        .iter()
        .flat_map(|sd| sd.mutable_positions().into_iter().map(|p| sd.variables[p].clone()))
        .collect();
    Ok(MutationClass { seeds, variables, edges, status })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClusterType {
    /// Product of Dynkin types; empty for no mutable vertices.
    Finite(Vec<(Kind, usize)>),
    InfiniteOrUnknown,
}

impl fmt::Display for ClusterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterType::Finite(parts) if parts.is_empty() => write!(f, "A0"),
            ClusterType::Finite(parts) => {
                let s: Vec<String> = parts.iter().map(|(k, n)| format!("{k:?}{n}")).collect();
                write!(f, "{}", s.join(" x "))
            }
            ClusterType::InfiniteOrUnknown => write!(f, "infinite/unknown"),
        }
    }
}

/// Dynkin type of a quiver whose underlying graph is a simply-laced tree.
fn dynkin_shape(arrows: &[Vec<usize>]) -> Option<(Kind, usize)> {
    let n = arrows.len();
    let mut adj = vec![Vec::new(); n];
    let mut edges = 0;
    for a in 0..n {
        for b in 0..n {
            let m = arrows[a][b] + arrows[b][a];
            if a < b && m > 0 {
                if m > 1 {
                    return None;
                }
                adj[a].push(b);
                adj[b].push(a);
                edges += 1;
            }
        }
    }
    if edges + 1 != n {
        return None;
    }
    // connected with n - 1 edges: a tree
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        if !std::mem::replace(&mut seen[a], true) {
            stack.extend(adj[a].iter().copied());
        }
    }
    if seen.iter().any(|s| !s) {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&a| adj[a].len() > 2).collect();
    match branch.as_slice() {
        [] => Some((Kind::A, n)),
        [c] if adj[*c].len() == 3 => {
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    while let Some(&nx) = adj[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Some((Kind::D, k + 3)),
                [1, 2, 2] => Some((Kind::E, 6)),
                [1, 2, 3] => Some((Kind::E, 7)),
                [1, 2, 4] => Some((Kind::E, 8)),
                _ => None,
            }
        }
        _ => None,
    }
}

fn components(q: &GabrielQuiver) -> Vec<Vec<usize>> {
    let n = q.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        let mut stack = vec![s];
        comp[s] = out.len();
        while let Some(a) = stack.pop() {
            members.push(a);
            for b in 0..n {
                if comp[b] == usize::MAX && q.arrows[a][b] + q.arrows[b][a] > 0 {
                    comp[b] = out.len();
                    stack.push(b);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Deletes frozen vertices and searches the quiver mutation class of each
/// connected component for an orientation of a Dynkin diagram.
pub fn detect_type(quiver: &GabrielQuiver, cap: usize) -> ClusterType {
    let mutable = quiver.mutable_part();
    let mut parts = Vec::new();
    for comp in components(&mutable) {
        let arrows: Vec<Vec<usize>> = comp.iter().map(|&a| comp.iter().map(|&b| mutable.arrows[a][b]).collect()).collect();
        let start = GabrielQuiver::new(comp.clone(), vec![false; comp.len()], arrows);
        let mut seen = BTreeSet::from([start.arrows.clone()]);
        let mut queue = VecDeque::from([start]);
        let mut found = None;
        while let Some(q) = queue.pop_front() {
            if let Some(t) = dynkin_shape(&q.arrows) {
                found = Some(t);
                break;
            }
            for k in 0..q.len() {
                let m = q.mutate(k);
                if seen.len() >= cap {
                    return ClusterType::InfiniteOrUnknown;
                }
                if seen.insert(m.arrows.clone()) {
                    queue.push_back(m);
                }
            }
        }
        match found {
            Some(t) => parts.push(t),
            None => return ClusterType::InfiniteOrUnknown,
        }
    }
    parts.sort();
    ClusterType::Finite(parts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Compatibility {
    /// `(B^T λ)` restricted to the mutable rows, one row per mutable vertex.
    pub product: Vec<Vec<i64>>,
    /// The product is `[D | 0]` with `D` diagonal and nonnegative.
    pub compatible: bool,
}

/// Computes `B^T λ` on the mutable rows, where `b_ij = #(i→j) - #(j→i)`.
pub fn check_compatibility(b: &[Vec<i64>], frozen: &[bool], lambda: &[Vec<i64>]) -> Result<Compatibility> {
    let n = b.len();
    if lambda.len() != n || lambda.iter().any(|r| r.len() != n) || frozen.len() != n {
        return Err(Error::Shape("B and λ must be square of the same size".into()));
    }
    if (0..n).any(|i| (0..n).any(|j| lambda[i][j] != -lambda[j][i])) {
        return Err(Error::NotSkew);
    }
    let mutable: Vec<usize> = (0..n).filter(|&k| !frozen[k]).collect();
    let product: Vec<Vec<i64>> =
        mutable.iter().map(|&k| (0..n).map(|j| (0..n).map(|i| b[i][k] * lambda[i][j]).sum()).collect()).collect();
    let compatible = mutable
        .iter()
        .enumerate()
        .all(|(r, &k)| (0..n).all(|j| if j == k { product[r][j] >= 0 } else { product[r][j] == 0 }));
    Ok(Compatibility { product, compatible })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> GabrielQuiver {
        let arrows = (0..n).map(|a| (0..n).map(|b| usize::from(b == a + 1)).collect()).collect();
        GabrielQuiver::new((1..=n).collect(), vec![false; n], arrows)
    }

    #[test]
    fn a3_class_has_fourteen_seeds() {
        let s = Seed::initial(path(3), vec![None; 3], None);
        let class = enumerate_class(&s, DEFAULT_CAP).unwrap();
        assert_eq!(class.status, ClassStatus::Complete);
        assert_eq!(class.seeds.len(), 14);
        assert_eq!(class.variables.len(), 9);
    }

    #[test]
    fn no_mutable_vertex() {
        let mut q = path(2);
        q.frozen = vec![true, true];
        let class = enumerate_class(&Seed::initial(q.clone(), vec![None; 2], None), 10).unwrap();
        assert_eq!(class.seeds.len(), 1);
        assert!(class.variables.is_empty());
        assert_eq!(detect_type(&q, 10).to_string(), "A0");
    }

    #[test]
    fn types() {
        assert_eq!(detect_type(&path(4), DEFAULT_CAP), ClusterType::Finite(vec![(Kind::A, 4)]));
        // oriented triangle is mutation equivalent to A3
        let tri = GabrielQuiver::new(vec![1, 2, 3], vec![false; 3], vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
        assert_eq!(detect_type(&tri, DEFAULT_CAP).to_string(), "A3");
        let markov = GabrielQuiver::new(vec![1, 2, 3], vec![false; 3], vec![vec![0, 2, 0], vec![0, 0, 2], vec![2, 0, 0]]);
        assert_eq!(detect_type(&markov, DEFAULT_CAP), ClusterType::InfiniteOrUnknown);
        let d4 = GabrielQuiver::new(
            vec![1, 2, 3, 4],
            vec![false; 4],
            vec![vec![0, 1, 1, 1], vec![0; 4], vec![0; 4], vec![0; 4]],
        );
        assert_eq!(detect_type(&d4, DEFAULT_CAP).to_string(), "D4");
    }

    #[test]
    fn markov_class_hits_the_cap() {
        let markov = GabrielQuiver::new(vec![1, 2, 3], vec![false; 3], vec![vec![0, 2, 0], vec![0, 0, 2], vec![2, 0, 0]]);
        let class = enumerate_class(&Seed::initial(markov, vec![None; 3], None), 50).unwrap();
        assert_eq!(class.status, ClassStatus::CapReached);
    }

    #[test]
    fn compatibility_basics() {
        let z = vec![vec![0; 2]; 2];
        assert!(check_compatibility(&z, &[false, false], &z).unwrap().compatible);
        assert_eq!(check_compatibility(&z, &[false, false], &[vec![0, 1], vec![1, 0]]), Err(Error::NotSkew));
    }
}
