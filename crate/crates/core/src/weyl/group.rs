//! Weyl group elements as integer matrices on the weight lattice.
//!
//! An element `w` is stored through the matrix whose column `j` holds the
//! coordinates of `w(ϖ_j)` in the fundamental-weight basis, together with the
//! matrix of `w^{-1}`. The action on the root lattice in the simple-root basis
//! is the contragredient `(W^{-1})^T`, so positivity questions about roots are
//! read off rows of these matrices without any further bookkeeping.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix};
use crate::weyl::diagram::DynkinDiagram;
use crate::weyl::word::Word;

type IntMat = Vec<i64>;

fn int_mul(n: usize, a: &[i64], b: &[i64]) -> IntMat {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j];
            }
        }
    }
    out
}

fn identity(n: usize) -> IntMat {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    mat: IntMat,
    inv: IntMat,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { rank, mat: identity(rank), inv: identity(rank) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.mat == identity(self.rank)
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.rank, other.rank);
        WeylElement {
            rank: self.rank,
            mat: int_mul(self.rank, &self.mat, &other.mat),
            inv: int_mul(self.rank, &other.inv, &self.inv),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement { rank: self.rank, mat: self.inv.clone(), inv: self.mat.clone() }
    }

    /// Entry `(r, c)` of the weight-lattice matrix.
    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.mat[r * self.rank + c]
    }

    /// The weight-lattice matrix as rows.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.mat.chunks(self.rank).map(<[i64]>::to_vec).collect()
    }

    /// `w(λ)` for a weight in fundamental-weight coordinates.
    pub fn act_weight(&self, lambda: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n).map(|r| (0..n).map(|c| self.mat[r * n + c] * lambda[c]).sum()).collect()
    }

    /// `w(β)` for a root in simple-root coordinates, via `(W^{-1})^T`.
    pub fn act_root(&self, beta: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n).map(|r| (0..n).map(|c| self.inv[c * n + r] * beta[c]).sum()).collect()
    }

    /// True when `w^{-1}(α_i) < 0`, i.e. `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        // w^{-1}(α_i) has coordinates given by row i of W.
        let row = &self.mat[i * self.rank..(i + 1) * self.rank];
        row.iter().any(|&x| x < 0)
    }

    /// True when `w(α_i) < 0`, i.e. `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let row = &self.inv[i * self.rank..(i + 1) * self.rank];
        row.iter().any(|&x| x < 0)
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement{:?}", self.matrix())
    }
}

pub fn is_negative(root: &[i64]) -> bool {
    root.iter().any(|&x| x < 0)
}

struct Inner {
    diagram: DynkinDiagram,
    cartan: Vec<Vec<i64>>,
    gens: Vec<WeylElement>,
    positive_roots: Vec<Vec<i64>>,
    longest: WeylElement,
}

/// The Weyl group of a simply-laced Dynkin diagram. Cheap to clone.
#[derive(Clone)]
pub struct Weyl {
    inner: Arc<Inner>,
}

impl fmt::Debug for Weyl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weyl({})", self.inner.diagram)
    }
}

impl Weyl {
    pub fn new(diagram: DynkinDiagram) -> Self {
        let n = diagram.rank();
        let cartan = diagram.cartan();
        // s_i(ϖ_j) = ϖ_j - δ_ij α_i and α_i = Σ_k C_ik ϖ_k.
        let gens: Vec<WeylElement> = (0..n)
            .map(|i| {
                let mut m = identity(n);
                for k in 0..n {
                    m[k * n + i] -= cartan[i][k];
                }
                WeylElement { rank: n, mat: m.clone(), inv: m }
            })
            .collect();

        let mut positive_roots: Vec<Vec<i64>> = Vec::new();
        let mut seen = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        while let Some(beta) = queue.pop_front() {
            if !seen.insert(beta.clone()) {
                continue;
            }
            for g in &gens {
                let img = g.act_root(&beta);
                if !is_negative(&img) && !seen.contains(&img) {
                    queue.push_back(img);
                }
            }
            positive_roots.push(beta);
        }
        positive_roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let mut longest = WeylElement::identity(n);
        'grow: loop {
            for (i, g) in gens.iter().enumerate() {
                if !longest.has_left_descent(i) {
                    longest = g.mul(&longest);
                    continue 'grow;
                }
            }
            break;
        }

        Weyl { inner: Arc::new(Inner { diagram, cartan, gens, positive_roots, longest }) }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.inner.diagram
    }

    pub fn rank(&self) -> usize {
        self.inner.diagram.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.inner.cartan
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    pub fn s(&self, i: usize) -> &WeylElement {
        &self.inner.gens[i]
    }

    pub fn longest(&self) -> &WeylElement {
        &self.inner.longest
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.inner.positive_roots
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        e
    }

    pub fn fundamental_weight(&self, i: usize) -> Vec<i64> {
        self.simple_root(i)
    }

    /// Product `s_{a_1} s_{a_2} ⋯` of the letters, read left to right.
    pub fn from_word(&self, word: &Word) -> WeylElement {
        word.letters().iter().fold(self.identity(), |acc, &i| acc.mul(self.s(i)))
    }

    pub fn parse_word(&self, s: &str) -> Result<WeylElement> {
        let word = Word::parse(s)?;
        for &i in word.letters() {
            self.diagram().check_vertex(i)?;
        }
        Ok(self.from_word(&word))
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots().iter().filter(|b| is_negative(&w.act_root(b))).count()
    }

    pub fn left_descents(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.rank()).filter(|&i| w.has_left_descent(i)).collect()
    }

    /// Canonical reduced word: repeatedly strip the smallest left descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Word {
        let mut letters = Vec::new();
        let mut cur = w.clone();
        while let Some(i) = (0..self.rank()).find(|&i| cur.has_left_descent(i)) {
            letters.push(i);
            cur = self.s(i).mul(&cur);
        }
        Word::new(letters)
    }

    pub fn is_reduced(&self, word: &Word) -> bool {
        self.length(&self.from_word(word)) == word.len()
    }

    /// Bruhat order test by the lifting property along the canonical word of
    /// `w`: peel letters off the left of `w`, lowering `v` whenever the same
    /// letter is a left descent of it.
    pub fn bruhat_leq(&self, v: &WeylElement, w: &WeylElement) -> bool {
        let mut cur = v.clone();
        for &a in self.reduced_word(w).letters() {
            if cur.has_left_descent(a) {
                cur = self.s(a).mul(&cur);
            }
        }
        cur.is_identity()
    }

    /// Converts a weight (fundamental-weight coordinates) lying in the root
    /// lattice to simple-root coordinates.
    pub fn weight_to_root(&self, lambda: &[i64]) -> Result<Vec<i64>> {
        let c = Matrix::from_rows(
            self.rank(),
            self.cartan().iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(),
        );
        let rhs = Matrix::from_rows(1, lambda.iter().map(|&x| vec![q(x)]).collect());
        let sol = c.solve(&rhs).ok_or_else(|| Error::Invariant("singular Cartan matrix".into()))?;
        (0..self.rank())
            .map(|i| {
                let x = &sol[(i, 0)];
                if x.is_integer() {
                    i64::try_from(x.to_integer()).map_err(|_| Error::Invariant("overflow".into()))
                } else {
                    Err(Error::Invariant("weight not in root lattice".into()))
                }
            })
            .collect()
    }

    /// Every element of the group, in breadth-first order by length.
    pub fn elements(&self) -> Vec<WeylElement> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([self.identity()]);
        seen.insert(self.identity());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                let next = self.s(i).mul(&w);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
            out.push(w);
        }
        out
    }

    /// Formats an element as its canonical reduced word.
    pub fn format(&self, w: &WeylElement) -> String {
        self.reduced_word(w).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> Weyl {
        Weyl::new(DynkinDiagram::a(n))
    }

    #[test]
    fn group_orders_and_longest_lengths() {
        for (s, order, roots) in [("A2", 6, 3), ("A3", 24, 6), ("D4", 192, 12)] {
            let g = Weyl::new(s.parse().unwrap());
            assert_eq!(g.elements().len(), order, "{s}");
            assert_eq!(g.positive_roots().len(), roots);
            assert_eq!(g.length(g.longest()), roots);
        }
        for (s, roots) in [("E6", 36), ("E7", 63), ("E8", 120)] {
            let g = Weyl::new(s.parse().unwrap());
            assert_eq!(g.positive_roots().len(), roots);
            assert_eq!(g.length(g.longest()), roots);
        }
    }

    #[test]
    fn longest_element_of_a5() {
        let g = a(5);
        assert_eq!(g.length(g.longest()), 15);
        assert_eq!(g.length(&g.identity()), 0);
    }

    #[test]
    fn parabolic_element_length() {
        let g = a(5);
        let v = g.parse_word("s1 s2 s1 s4 s5 s4").unwrap();
        assert_eq!(g.length(&v), 6);
    }

    #[test]
    fn generators_are_involutions() {
        let g = a(4);
        for i in 0..4 {
            assert!(g.s(i).mul(g.s(i)).is_identity());
            assert_eq!(g.s(i).inverse(), *g.s(i));
        }
    }

    #[test]
    fn descents_agree_with_length() {
        let g = a(3);
        for w in g.elements() {
            let l = g.length(&w);
            for i in 0..3 {
                assert_eq!(w.has_left_descent(i), g.length(&g.s(i).mul(&w)) < l);
                assert_eq!(w.has_right_descent(i), g.length(&w.mul(g.s(i))) < l);
            }
        }
    }

    #[test]
    fn canonical_words_multiply_back() {
        let g = a(3);
        for w in g.elements() {
            let word = g.reduced_word(&w);
            assert_eq!(word.len(), g.length(&w));
            assert_eq!(g.from_word(&word), w);
        }
        let g2 = a(2);
        let w = g2.parse_word("s2 s1 s2").unwrap();
        assert_eq!(g2.reduced_word(&w).to_string(), "s1 s2 s1");
        assert!(g.reduced_word(&g.identity()).is_empty());
    }

    #[test]
    fn weight_to_root_on_simple_roots() {
        let g = a(3);
        // α_2 = -ϖ_1 + 2ϖ_2 - ϖ_3
        assert_eq!(g.weight_to_root(&[-1, 2, -1]).unwrap(), vec![0, 1, 0]);
        assert!(g.weight_to_root(&[1, 0, 0]).is_err());
    }
}
