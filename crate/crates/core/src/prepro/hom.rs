//! Homomorphism spaces, `Ext¹` dimensions, traces and isomorphism tests.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{q, Matrix, Subspace};
use crate::prepro::decompose::decompose;
use crate::prepro::module::{LambdaModule, Submodule};

/// A family of vertex maps `F_k : M_k → N_k`.
pub type Morphism = Vec<Matrix>;

/// Basis of `Hom(M, N)`.
pub fn hom_basis(m: &LambdaModule, n: &LambdaModule) -> Vec<Morphism> {
    let quiver = m.quiver();
    let nv = quiver.vertices();
    let (dm, dn) = (m.dims(), n.dims());
    // unknown F_k occupies dn[k]*dm[k] slots, row-major
    let mut offset = vec![0; nv + 1];
    for k in 0..nv {
        offset[k + 1] = offset[k] + dn[k] * dm[k];
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let var = |k: usize, r: usize, c: usize| offset[k] + r * dm[k] + c;

    let mut rows: Vec<Vec<_>> = Vec::new();
    for a in quiver.arrows() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (m.map(a.id), n.map(a.id));
        // (N_α F_s - F_t M_α)[r][c] = 0 for r < dn[t], c < dm[s]
        for r in 0..dn[t] {
            for c in 0..dm[s] {
                let mut row = vec![q(0); unknowns];
                let mut any = false;
                for l in 0..dn[s] {
                    let x = &na[(r, l)];
                    if !x.is_zero() {
                        row[var(s, l, c)] += x;
                        any = true;
                    }
                }
                for l in 0..dm[t] {
                    let x = &ma[(l, c)];
                    if !x.is_zero() {
                        row[var(t, r, l)] -= x;
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(unknowns, rows);
    let kernel = system.kernel();
    (0..kernel.cols())
        .map(|b| {
            (0..nv)
                .map(|k| Matrix::from_fn(dn[k], dm[k], |r, c| kernel[(var(k, r, c), b)].clone()))
                .collect()
        })
        .collect()
}

pub fn hom_dim(m: &LambdaModule, n: &LambdaModule) -> usize {
    hom_basis(m, n).len()
}

/// The symmetrised bilinear form `(d, e) = Σ 2 d_i e_i - Σ_{edges} (d_i e_j + d_j e_i)`.
pub fn cartan_form(m: &LambdaModule, d: &[usize], e: &[usize]) -> i64 {
    let diag: i64 = d.iter().zip(e).map(|(a, b)| 2 * (*a as i64) * (*b as i64)).sum();
    let off: i64 = m
        .quiver()
        .diagram()
        .edges()
        .iter()
        .map(|&(i, j)| (d[i] * e[j] + d[j] * e[i]) as i64)
        .sum();
    diag - off
}

/// `dim Ext¹(M, N) = dim Hom(M, N) + dim Hom(N, M) - (d_M, d_N)`.
pub fn ext1_dim(m: &LambdaModule, n: &LambdaModule) -> usize {
    let h = (hom_dim(m, n) + hom_dim(n, m)) as i64;
    let e = h - cartan_form(m, m.dims(), n.dims());
    usize::try_from(e).expect("Ext¹ dimension is nonnegative")
}

/// Evaluates a linear combination of morphisms.
pub fn combine(basis: &[Morphism], coeffs: &[i64]) -> Morphism {
    let first = &basis[0];
    let mut out: Morphism = first.iter().map(|m| Matrix::zeros(m.rows(), m.cols())).collect();
    for (f, &c) in basis.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, fk) in out.iter_mut().zip(f) {
            *o = o.add(&fk.scale(&q(c)));
        }
    }
    out
}

pub fn compose(g: &Morphism, f: &Morphism) -> Morphism {
    g.iter().zip(f).map(|(a, b)| a.mul(b)).collect()
}

pub fn is_invertible(f: &Morphism) -> bool {
    f.iter().all(|m| m.is_square() && m.rank() == m.rows())
}

pub fn is_injective(f: &Morphism) -> bool {
    f.iter().all(|m| m.rank() == m.cols())
}

pub fn is_surjective(f: &Morphism) -> bool {
    f.iter().all(|m| m.rank() == m.rows())
}

pub fn image(f: &Morphism) -> Submodule {
    Submodule { spaces: f.iter().map(Subspace::from_columns).collect() }
}

pub fn kernel(f: &Morphism) -> Submodule {
    Submodule { spaces: f.iter().map(|m| Subspace::from_columns(&m.kernel())).collect() }
}

/// Sum of the images of all homomorphisms `generator → x`.
pub fn trace_submodule(generator: &LambdaModule, x: &LambdaModule) -> Submodule {
    hom_basis(generator, x)
        .iter()
        .fold(x.zero_submodule(), |acc, f| acc.sum(&image(f)))
}

/// True when `m` embeds into `n`.
pub fn embeds(m: &LambdaModule, n: &LambdaModule) -> bool {
    if m.dims().iter().zip(n.dims()).any(|(a, b)| a > b) {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let basis = hom_basis(m, n);
    if basis.is_empty() {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..8 {
        let coeffs: Vec<i64> =
            basis.iter().map(|_| rng.gen_range(-(3 + 4 * trial)..=(3 + 4 * trial))).collect();
        if is_injective(&combine(&basis, &coeffs)) {
            return true;
        }
    }
    // injective maps form a Zariski-open subset, so eight misses in a row
    // mean there is none
    false
}

/// Isomorphism test: numerical invariants, then a search for an invertible
/// combination of a `Hom` basis, then decomposition as a fallback.
pub fn is_isomorphic(m: &LambdaModule, n: &LambdaModule) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let mn = hom_basis(m, n);
    let nm_dim = hom_dim(n, m);
    if mn.len() != nm_dim || mn.is_empty() {
        return false;
    }
    let end_m = hom_dim(m, m);
    if end_m != mn.len() || hom_dim(n, n) != end_m {
        return false;
    }
    if let Some(ok) = random_iso(&mn) {
        return ok;
    }
    iso_by_decomposition(m, n)
}

fn random_iso(basis: &[Morphism]) -> Option<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    for trial in 0..8 {
        let range = 2 + 3 * trial;
        let coeffs: Vec<i64> = basis.iter().map(|_| rng.gen_range(-range..=range)).collect();
        if is_invertible(&combine(basis, &coeffs)) {
            return Some(true);
        }
    }
    None
}

/// Deterministic comparison through the indecomposable summands.
pub fn iso_by_decomposition(m: &LambdaModule, n: &LambdaModule) -> bool {
    let (Ok(dm), Ok(dn)) = (decompose(m), decompose(n)) else {
        return false;
    };
    if dm.len() != dn.len() {
        return false;
    }
    let mut used = vec![false; dn.len()];
    for (a, ka) in &dm {
        let hit = dn.iter().enumerate().position(|(idx, (b, kb))| {
            !used[idx] && kb == ka && indecomposables_isomorphic(a, b)
        });
        match hit {
            Some(idx) => used[idx] = true,
            None => return false,
        }
    }
    true
}

/// For indecomposables: `A ≅ B` iff some `g_b ∘ f_a` is invertible, with `f`
/// ranging over a basis of `Hom(A, B)` and `g` over one of `Hom(B, A)`.
/// (Non-isomorphisms compose into the radical of the local ring `End A`.)
pub fn indecomposables_isomorphic(a: &LambdaModule, b: &LambdaModule) -> bool {
    if a.dims() != b.dims() {
        return false;
    }
    let ab = hom_basis(a, b);
    let ba = hom_basis(b, a);
    ab.iter().any(|f| ba.iter().any(|g| is_invertible(&compose(g, f))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prepro::algebra::Preprojective;
    use crate::weyl::DynkinDiagram;

    #[test]
    fn hom_between_simples() {
        let p = Preprojective::get(&DynkinDiagram::a(3));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(hom_dim(&p.simple(i), &p.simple(j)), usize::from(i == j));
            }
        }
    }

    #[test]
    fn ext_between_simples() {
        let p = Preprojective::get(&DynkinDiagram::a(3));
        assert_eq!(ext1_dim(&p.simple(0), &p.simple(0)), 0);
        assert_eq!(ext1_dim(&p.simple(0), &p.simple(1)), 1);
        assert_eq!(ext1_dim(&p.simple(0), &p.simple(2)), 0);
    }

    #[test]
    fn injectives_are_rigid_and_injective() {
        let p = Preprojective::get(&DynkinDiagram::a(3));
        for i in 0..3 {
            for s in 0..3 {
                assert_eq!(ext1_dim(&p.simple(s), p.injective(i)), 0);
            }
            assert!(hom_dim(p.injective(i), p.injective(i)) >= 1);
        }
    }

    #[test]
    fn morphisms_are_intertwiners() {
        let p = Preprojective::get(&DynkinDiagram::a(3));
        let (m, n) = (p.injective(1), p.injective(0));
        for f in hom_basis(m, n) {
            for a in m.quiver().arrows() {
                assert_eq!(n.map(a.id).mul(&f[a.source]), f[a.target].mul(m.map(a.id)));
            }
        }
    }

    #[test]
    fn isomorphism_checks() {
        let p = Preprojective::get(&DynkinDiagram::a(3));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let q2 = p.injective(1);
        let c = q2.random_conjugate(&mut rng);
        assert_ne!(&c, q2);
        assert!(is_isomorphic(q2, &c));
        assert!(iso_by_decomposition(q2, &c));
        assert!(!is_isomorphic(&p.simple(0), &p.simple(1)));
        assert!(is_isomorphic(&p.simple(0), &p.simple(0)));
        let a = p.injective(0).direct_sum(&p.simple(1));
        let b = p.simple(1).direct_sum(p.injective(0)).random_conjugate(&mut rng);
        assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn trace_of_self_is_everything() {
        let p = Preprojective::get(&DynkinDiagram::a(3));
        let x = p.injective(1);
        assert_eq!(trace_submodule(x, x).dims(), x.dims().to_vec());
    }
}
