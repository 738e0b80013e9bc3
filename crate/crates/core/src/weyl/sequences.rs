//! Sequences attached to a pair `v ≤ w` and a reduced word of `w`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::weyl::group::{is_negative, Weyl, WeylElement};
use crate::weyl::word::Word;

impl Weyl {
    /// `(v_(0), …, v_(r))` with `v_(0) = e`, where `v_(k) = s_{i_k} v_(k-1)`
    /// exactly when this shortens `v v_(k-1)^{-1}` on the right.
    pub fn v_sequence(&self, v: &WeylElement, word: &Word) -> Result<Vec<WeylElement>> {
        if !self.is_reduced(word) {
            return Err(Error::NotReduced(word.letters().to_vec()));
        }
        let mut seq = vec![self.identity()];
        for k in 1..=word.len() {
            let prev = seq.last().unwrap();
            let i = word.at(k);
            let x = v.mul(&prev.inverse());
            // ℓ(x s_i) < ℓ(x) iff x(α_i) < 0
            let next = if x.has_right_descent(i) { self.s(i).mul(prev) } else { prev.clone() };
            seq.push(next);
        }
        if seq.last() != Some(v) {
            return Err(Error::NotBruhatBelow);
        }
        Ok(seq)
    }

    /// The positions `k` (1-based, counted from the right) where the
    /// v-sequence stays put.
    pub fn j_set(&self, v: &WeylElement, word: &Word) -> Result<Vec<usize>> {
        let seq = self.v_sequence(v, word)?;
        Ok((1..seq.len()).filter(|&k| seq[k] == seq[k - 1]).collect())
    }

    /// `ℓ(w v^{-1}) + ℓ(v) = ℓ(w)`.
    pub fn property_p(&self, v: &WeylElement, w: &WeylElement) -> bool {
        self.length(&w.mul(&v.inverse())) + self.length(v) == self.length(w)
    }

    /// Positive roots `β` with `w(β) < 0` and `v(β) > 0`.
    pub fn interval_roots(&self, v: &WeylElement, w: &WeylElement) -> Vec<Vec<i64>> {
        self.positive_roots()
            .iter()
            .filter(|b| is_negative(&w.act_root(b)) && !is_negative(&v.act_root(b)))
            .cloned()
            .collect()
    }

    /// Longest element of the parabolic subgroup generated by `K`.
    pub fn longest_in(&self, k: &BTreeSet<usize>) -> WeylElement {
        let mut w = self.identity();
        'grow: loop {
            for &i in k {
                if !w.has_left_descent(i) {
                    w = self.s(i).mul(&w);
                    continue 'grow;
                }
            }
            return w;
        }
    }

    /// Membership in `W^K`: no left descent in `K`.
    pub fn is_min_coset_rep(&self, w: &WeylElement, k: &BTreeSet<usize>) -> bool {
        k.iter().all(|&i| !w.has_left_descent(i))
    }

    /// Every reduced word of `w`, in lexicographic order.
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Word> {
        if w.is_identity() {
            return vec![Word::new(Vec::new())];
        }
        let mut out = Vec::new();
        for i in self.left_descents(w) {
            for rest in self.reduced_words(&self.s(i).mul(w)) {
                let mut letters = vec![i];
                letters.extend_from_slice(rest.letters());
                out.push(Word::new(letters));
            }
        }
        out
    }

    /// A reduced word built from uniformly chosen left descents.
    pub fn random_reduced_word<R: rand::Rng>(&self, w: &WeylElement, rng: &mut R) -> Word {
        let mut letters = Vec::new();
        let mut cur = w.clone();
        while !cur.is_identity() {
            let d = self.left_descents(&cur);
            let i = d[rng.gen_range(0..d.len())];
            letters.push(i);
            cur = self.s(i).mul(&cur);
        }
        Word::new(letters)
    }

    /// `γ_k = ϖ_{i_k} - s_{i_1} ⋯ s_{i_k}(ϖ_{i_k})` in simple-root
    /// coordinates, for `k = 1..=r`.
    pub fn gammas(&self, word: &Word) -> Vec<Vec<i64>> {
        let pos = word.positions();
        let mut prefix = self.identity();
        let mut out = Vec::with_capacity(pos.len());
        for &i in &pos {
            prefix = prefix.mul(self.s(i));
            let pi = self.fundamental_weight(i);
            let img = prefix.act_weight(&pi);
            let diff: Vec<i64> = pi.iter().zip(&img).map(|(a, b)| a - b).collect();
            out.push(self.weight_to_root(&diff).expect("difference lies in the root lattice"));
        }
        out
    }
}
