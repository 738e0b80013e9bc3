//! The category attached to `v ≤ w` and its distinguished modules.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::prepro::{
    e_word, e_word_sub, edag_word, hom_basis, is_isomorphic, soc_sequence, trace_submodule, LambdaModule,
    Preprojective, Submodule,
};
use crate::linalg::Subspace;
use crate::weyl::{DynkinDiagram, Weyl, WeylElement, Word};

/// `v ≤ w` together with a reduced word of `w`.
#[derive(Clone, Debug)]
pub struct CategorySpec {
    weyl: Weyl,
    algebra: Arc<Preprojective>,
    v: WeylElement,
    w: WeylElement,
    word: Word,
}

impl CategorySpec {
    pub fn new(weyl: &Weyl, v: WeylElement, w: WeylElement, word: Option<Word>) -> Result<Self> {
        let word = match word {
            Some(word) => {
                if !weyl.is_reduced(&word) {
                    return Err(Error::NotReduced(word.letters().to_vec()));
                }
                if weyl.from_word(&word) != w {
                    return Err(Error::Invariant("word does not multiply to w".into()));
                }
                word
            }
            None => weyl.reduced_word(&w),
        };
        if !weyl.bruhat_leq(&v, &w) {
            return Err(Error::NotBruhatBelow);
        }
        let algebra = Preprojective::get(weyl.diagram());
        Ok(CategorySpec { weyl: weyl.clone(), algebra, v, w, word })
    }

    /// Parses `v`, `w` and an optional word of `w` from reduced `s1 s2 ...`
    /// strings.
    pub fn parse(diagram: &DynkinDiagram, v: &str, w: &str, word: Option<&str>) -> Result<Self> {
        let weyl = Weyl::new(diagram.clone());
        let reduced = |s: &str| -> Result<WeylElement> {
            let x = weyl.parse_word(s)?;
            let word = Word::parse(s)?;
            if !weyl.is_reduced(&word) {
                return Err(Error::NotReduced(word.letters().to_vec()));
            }
            Ok(x)
        };
        let v = reduced(v)?;
        let w = reduced(w)?;
        let word = match word {
            Some(s) => {
                let word = Word::parse(s)?;
                for &i in word.letters() {
                    diagram.check_vertex(i)?;
                }
                Some(word)
            }
            None => None,
        };
        CategorySpec::new(&weyl, v, w, word)
    }

    pub fn weyl(&self) -> &Weyl {
        &self.weyl
    }

    pub fn algebra(&self) -> &Arc<Preprojective> {
        &self.algebra
    }

    pub fn v(&self) -> &WeylElement {
        &self.v
    }

    pub fn w(&self) -> &WeylElement {
        &self.w
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn rank(&self) -> usize {
        self.weyl.rank()
    }

    pub fn dimension(&self) -> usize {
        self.weyl.length(&self.w) - self.weyl.length(&self.v)
    }

    pub fn v_sequence(&self) -> Vec<WeylElement> {
        self.weyl.v_sequence(&self.v, &self.word).expect("validated on construction")
    }

    pub fn j_set(&self) -> Vec<usize> {
        self.weyl.j_set(&self.v, &self.word).expect("validated on construction")
    }

    /// `I_{i,x} = E_u(Q_i)` with `u = x^{-1} w_0`.
    pub fn generator_parts(&self, x: &WeylElement) -> Vec<LambdaModule> {
        let u = x.inverse().mul(self.weyl.longest());
        let word = self.weyl.reduced_word(&u);
        self.algebra.injectives().iter().map(|q| e_word(q, &word)).collect()
    }

    /// `I_x = ⊕_i E_u(Q_i)`.
    pub fn generator(&self, x: &WeylElement) -> LambdaModule {
        LambdaModule::direct_sum_all(self.algebra.quiver(), &self.generator_parts(x))
    }

    /// `J_x = E†_{x^{-1}}(⊕_i Q_i)`.
    pub fn cogenerator(&self, x: &WeylElement) -> LambdaModule {
        let word = self.weyl.reduced_word(&x.inverse());
        let parts: Vec<_> = self.algebra.injectives().iter().map(|q| edag_word(q, &word)).collect();
        LambdaModule::direct_sum_all(self.algebra.quiver(), &parts)
    }

    /// `Q_{i,v,w} = E†_{v^{-1}} E_u(Q_i)`, one per vertex (possibly zero).
    pub fn projective_injectives(&self) -> Vec<LambdaModule> {
        let word = self.weyl.reduced_word(&self.v.inverse());
        self.generator_parts(&self.w).iter().map(|m| edag_word(m, &word)).collect()
    }

    /// The same modules computed as `I_{i,w} / t_v(I_{i,w})`.
    pub fn projective_injectives_by_torsion(&self) -> Vec<LambdaModule> {
        let iv = self.generator(&self.v);
        self.generator_parts(&self.w)
            .iter()
            .map(|m| m.quotient(&trace_submodule(&iv, m)).expect("trace is a submodule"))
            .collect()
    }

    /// `V_k = Soc_{(i_k, …, i_1)}(Q_{i_k})` as a submodule of `Q_{i_k}`.
    pub fn v_submodule(&self, k: usize) -> Submodule {
        let i = self.word.at(k);
        let letters: Vec<usize> = (1..=k).rev().map(|s| self.word.at(s)).collect();
        soc_sequence(self.algebra.injective(i), &letters)
    }

    /// `V_1, …, V_r`.
    pub fn v_modules(&self) -> Vec<LambdaModule> {
        (1..=self.word.len())
            .map(|k| {
                let q = self.algebra.injective(self.word.at(k));
                q.restrict(&self.v_submodule(k)).expect("socle filtration is a submodule")
            })
            .collect()
    }

    /// `U_j = E†_{v_(j)^{-1}} V_j` for `j = 1..=r`.
    pub fn u_modules(&self) -> Vec<LambdaModule> {
        let seq = self.v_sequence();
        self.v_modules()
            .iter()
            .enumerate()
            .map(|(idx, vk)| edag_word(vk, &self.weyl.reduced_word(&seq[idx + 1].inverse())))
            .collect()
    }

    /// `U_j = V_j / t_v(V_j)`, the second description.
    pub fn u_modules_by_torsion(&self) -> Vec<LambdaModule> {
        let iv = self.generator(&self.v);
        self.v_modules()
            .iter()
            .map(|vk| vk.quotient(&trace_submodule(&iv, vk)).expect("trace is a submodule"))
            .collect()
    }

    /// Checks that both descriptions of every `U_j` agree.
    pub fn u_formulas_agree(&self) -> bool {
        self.u_modules()
            .iter()
            .zip(self.u_modules_by_torsion())
            .all(|(a, b)| is_isomorphic(a, &b))
    }

    /// `M_k = V_k / V_{k^-}` where `k^-` is the previous position carrying the
    /// same letter (`V_{k^-} = 0` when there is none).
    pub fn layer_modules(&self) -> Result<Vec<LambdaModule>> {
        let r = self.word.len();
        let mut out = Vec::with_capacity(r);
        for k in 1..=r {
            let i = self.word.at(k);
            let q = self.algebra.injective(i);
            let vk = self.v_submodule(k);
            let prev = (1..k).rev().find(|&s| self.word.at(s) == i);
            let sub = match prev {
                Some(s) => {
                    let vs = self.v_submodule(s);
                    if !vk.contains(&vs) {
                        return Err(Error::Invariant(format!("V_{s} is not contained in V_{k}")));
                    }
                    vs
                }
                None => q.zero_submodule(),
            };
            let vk_mod = q.restrict(&vk)?;
            // coordinates of the smaller submodule inside V_k
            let inner = Submodule {
                spaces: vk
                    .spaces
                    .iter()
                    .zip(&sub.spaces)
                    .map(|(big, small)| {
                        Subspace::from_vectors(
                            big.dim(),
                            small.vectors().iter().map(|v| big.coordinates(v)).collect(),
                        )
                    })
                    .collect(),
            };
            out.push(vk_mod.quotient(&inner)?);
        }
        Ok(out)
    }

    /// `x ∈ C_w`: the trace of `I_w` in `x` is all of `x`.
    pub fn in_cw(&self, x: &LambdaModule) -> bool {
        trace_submodule(&self.generator(&self.w), x).dim() == x.dim()
    }

    /// `x ∈ C^v`: maps to `J_v` separate points of `x`.
    pub fn in_cv_up(&self, x: &LambdaModule) -> bool {
        cogenerated_by(&self.cogenerator(&self.v), x)
    }

    pub fn membership(&self, x: &LambdaModule) -> Membership {
        let in_cw = self.in_cw(x);
        let in_cv_up = self.in_cv_up(x);
        Membership { in_cw, in_cv_up, in_cvw: in_cw && in_cv_up }
    }

    /// `E_u(Q_i)` tracked inside `Q_i`, used by the torsion checks.
    pub fn generator_submodule(&self, i: usize) -> Submodule {
        let u = self.w.inverse().mul(self.weyl.longest());
        e_word_sub(self.algebra.injective(i), &self.weyl.reduced_word(&u))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub in_cw: bool,
    pub in_cv_up: bool,
    pub in_cvw: bool,
}

/// True when the common kernel of all maps `x → j` is zero, i.e. `x` embeds
/// into a sum of copies of `j`.
pub fn cogenerated_by(j: &LambdaModule, x: &LambdaModule) -> bool {
    let mut common = x.full_submodule();
    for f in hom_basis(x, j) {
        common = common.intersection(&crate::prepro::kernel(&f));
        if common.is_zero() {
            return true;
        }
    }
    common.is_zero()
}
