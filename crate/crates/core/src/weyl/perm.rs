//! Type A: Weyl group elements as permutations of `{1, …, n+1}`.

use crate::error::{Error, Result};
use crate::weyl::diagram::Kind;
use crate::weyl::group::{Weyl, WeylElement};
use crate::weyl::word::Word;

/// One-line notation `[w(1), …, w(n)]`, 1-based values.
pub type Perm = Vec<usize>;

impl Weyl {
    fn require_type_a(&self) -> Result<usize> {
        if self.diagram().kind() == Kind::A {
            Ok(self.rank() + 1)
        } else {
            Err(Error::TypeAOnly)
        }
    }

    /// The permutation of `w`, with `s_i` the transposition `(i, i+1)` and
    /// products acting as composition of functions.
    pub fn to_perm(&self, w: &WeylElement) -> Result<Perm> {
        let n = self.require_type_a()?;
        let word = self.reduced_word(w);
        let mut p: Perm = (1..=n).collect();
        // p = s_{a_0} ∘ s_{a_1} ∘ ⋯ ; apply the rightmost factor first.
        for &a in word.letters().iter().rev() {
            for x in p.iter_mut() {
                if *x == a + 1 {
                    *x = a + 2;
                } else if *x == a + 2 {
                    *x = a + 1;
                }
            }
        }
        Ok(p)
    }

    pub fn from_perm(&self, p: &[usize]) -> Result<WeylElement> {
        let n = self.require_type_a()?;
        let mut sorted = p.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return Err(Error::Parse(format!("not a permutation of 1..{n}: {p:?}")));
        }
        // Bubble sort p into the identity by left multiplications s_a ∘ p,
        // which swap the values a+1 and a+2.
        let mut cur = p.to_vec();
        let mut letters = Vec::new();
        loop {
            let pos: Vec<usize> = {
                let mut pos = vec![0; n + 1];
                for (i, &x) in cur.iter().enumerate() {
                    pos[x] = i;
                }
                pos
            };
            let Some(a) = (1..n).find(|&a| pos[a] > pos[a + 1]) else {
                break;
            };
            for x in cur.iter_mut() {
                if *x == a {
                    *x = a + 1;
                } else if *x == a + 1 {
                    *x = a;
                }
            }
            letters.push(a - 1);
        }
        // s_{l_k} ⋯ s_{l_1} p = e, so p = s_{l_1} ⋯ s_{l_k}.
        Ok(self.from_word(&Word::new(letters)))
    }

    /// `w({1, …, i})`, sorted, for a 0-based vertex `i` (so the set has
    /// `i + 1` elements).
    pub fn weight_subset(&self, w: &WeylElement, i: usize) -> Result<Vec<usize>> {
        let p = self.to_perm(w)?;
        let mut s: Vec<usize> = p[..=i].to_vec();
        s.sort_unstable();
        Ok(s)
    }

    pub fn format_window(&self, w: &WeylElement) -> Result<String> {
        let p = self.to_perm(w)?;
        let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
        Ok(format!("[{}]", parts.join(",")))
    }

    pub fn parse_window(&self, s: &str) -> Result<WeylElement> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let p: Perm = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad window entry {x:?}"))))
            .collect::<Result<_>>()?;
        self.from_perm(&p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::diagram::DynkinDiagram;

    #[test]
    fn generators_are_adjacent_transpositions() {
        let g = Weyl::new(DynkinDiagram::a(3));
        assert_eq!(g.to_perm(g.s(1)).unwrap(), vec![1, 3, 2, 4]);
        // (s1 s2)(1) = s1(s2(1)) = 2, (s1 s2)(3) = s1(2) = 1
        let w = g.parse_word("s1 s2").unwrap();
        assert_eq!(g.to_perm(&w).unwrap(), vec![2, 3, 1, 4]);
    }

    #[test]
    fn window_round_trip() {
        let g = Weyl::new(DynkinDiagram::a(3));
        for w in g.elements() {
            let s = g.format_window(&w).unwrap();
            assert_eq!(g.parse_window(&s).unwrap(), w);
            let word = g.format(&w);
            assert_eq!(g.parse_word(&word).unwrap(), w);
        }
        assert!(g.parse_window("[1,1,2,3]").is_err());
    }

    #[test]
    fn composition_matches_group_product() {
        let g = Weyl::new(DynkinDiagram::a(3));
        let els = g.elements();
        for u in els.iter().step_by(5) {
            for v in els.iter().step_by(3) {
                let pu = g.to_perm(u).unwrap();
                let pv = g.to_perm(v).unwrap();
                let puv = g.to_perm(&u.mul(v)).unwrap();
                for x in 0..4 {
                    assert_eq!(puv[x], pu[pv[x] - 1]);
                }
            }
        }
    }

    #[test]
    fn weight_subsets() {
        let g = Weyl::new(DynkinDiagram::a(3));
        let s2 = g.parse_word("s2").unwrap();
        assert_eq!(g.weight_subset(&s2, 1).unwrap(), vec![1, 3]);
        let u = g.parse_word("s3 s2 s1").unwrap();
        assert_eq!(g.weight_subset(&u, 1).unwrap(), vec![1, 4]);
        assert_eq!(g.weight_subset(&g.identity(), 2).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn d_type_rejected() {
        let g = Weyl::new("D4".parse().unwrap());
        assert_eq!(g.to_perm(&g.identity()), Err(Error::TypeAOnly));
    }
}
