//! Representatives of Weyl elements in `SL(n)`, `[z]^+`, `ζ_{v,w}` and the
//! Bruhat cell of a matrix.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix};
use crate::minors::{is_unitriangular, minor, MinorSpec};
use crate::weyl::{Kind, Weyl, WeylElement, Word};

fn size(weyl: &Weyl) -> Result<usize> {
    if weyl.diagram().kind() != Kind::A {
        return Err(Error::TypeAOnly);
    }
    Ok(weyl.rank() + 1)
}

/// `s_a` embedded at rows and columns `a, a+1` as `(0, -sign; sign, 0)`.
fn generator(n: usize, a: usize, sign: i64) -> Matrix {
    let mut m = Matrix::identity(n);
    m[(a, a)] = q(0);
    m[(a + 1, a + 1)] = q(0);
    m[(a, a + 1)] = q(-sign);
    m[(a + 1, a)] = q(sign);
    m
}

fn representative(weyl: &Weyl, w: &WeylElement, sign: i64) -> Result<Matrix> {
    along_word(weyl, &weyl.reduced_word(w), sign)
}

fn along_word(weyl: &Weyl, word: &Word, sign: i64) -> Result<Matrix> {
    let n = size(weyl)?;
    Ok(word.letters().iter().fold(Matrix::identity(n), |acc, &a| acc.mul(&generator(n, a, sign))))
}

/// `w̄` computed along the given word instead of the canonical one.
pub fn rep_bar_word(weyl: &Weyl, word: &Word) -> Result<Matrix> {
    along_word(weyl, word, 1)
}

/// `w̿` computed along the given word.
pub fn rep_barbar_word(weyl: &Weyl, word: &Word) -> Result<Matrix> {
    along_word(weyl, word, -1)
}

/// `w̄`: the product of the matrices `(0, -1; 1, 0)` along a reduced word.
pub fn rep_bar(weyl: &Weyl, w: &WeylElement) -> Result<Matrix> {
    representative(weyl, w, 1)
}

/// `w̿`: the product of the matrices `(0, 1; -1, 0)` along a reduced word.
pub fn rep_barbar(weyl: &Weyl, w: &WeylElement) -> Result<Matrix> {
    representative(weyl, w, -1)
}

/// The unsigned permutation matrix with a one at `(w(a), a)`.
pub fn perm_matrix(weyl: &Weyl, w: &WeylElement) -> Result<Matrix> {
    let p = weyl.to_perm(w)?;
    let n = p.len();
    Ok(Matrix::from_fn(n, n, |r, c| if p[c] == r + 1 { q(1) } else { q(0) }))
}

/// `[z]^+`: the unipotent upper factor of `z = L U` with `L` lower triangular.
/// Fails with [`Error::NotInG0`] naming the first vanishing leading principal
/// minor.
pub fn gauss_plus(z: &Matrix) -> Result<Matrix> {
    if !z.is_square() {
        return Err(Error::Shape("[z]^+ needs a square matrix".into()));
    }
    let n = z.rows();
    let mut l = Matrix::zeros(n, n);
    let mut u = Matrix::identity(n);
    for k in 0..n {
        for i in k..n {
            let mut s = z[(i, k)].clone();
            for m in 0..k {
                s -= &l[(i, m)] * &u[(m, k)];
            }
            l[(i, k)] = s;
        }
        if l[(k, k)].is_zero() {
            return Err(Error::NotInG0(k + 1));
        }
        for j in k + 1..n {
            let mut s = z[(k, j)].clone();
            for m in 0..k {
                s -= &l[(k, m)] * &u[(m, j)];
            }
            u[(k, j)] = s / &l[(k, k)];
        }
    }
    Ok(u)
}

/// `ζ_{v,w}(x) = [v̿ x \overline{w^{-1}}]^+`.
pub fn zeta(weyl: &Weyl, v: &WeylElement, w: &WeylElement, x: &Matrix) -> Result<Matrix> {
    let z = rep_barbar(weyl, v)?.mul(x).mul(&rep_bar(weyl, &w.inverse())?);
    gauss_plus(&z)
}

/// `φ_w(n) = w̿ n \overline{w^{-1}}`.
pub fn phi_w(weyl: &Weyl, w: &WeylElement, n: &Matrix) -> Result<Matrix> {
    Ok(rep_barbar(weyl, w)?.mul(n).mul(&rep_bar(weyl, &w.inverse())?))
}

/// The minors `Δ_{v^{-1}(ϖ_i), w^{-1}(ϖ_i)}` cutting out `O_{v,w}`.
pub fn o_minors(weyl: &Weyl, v: &WeylElement, w: &WeylElement) -> Result<Vec<MinorSpec>> {
    let (vi, wi) = (v.inverse(), w.inverse());
    (0..weyl.rank())
        .map(|i| MinorSpec::new(weyl.weight_subset(&vi, i)?, weyl.weight_subset(&wi, i)?))
        .collect()
}

pub fn in_o(weyl: &Weyl, v: &WeylElement, w: &WeylElement, x: &Matrix) -> Result<bool> {
    Ok(o_minors(weyl, v, w)?.iter().all(|m| !minor(x, m).is_zero()))
}

fn conjugate(weyl: &Weyl, w: &WeylElement, x: &Matrix) -> Result<Matrix> {
    let p = perm_matrix(weyl, w)?;
    Ok(p.mul(x).mul(&p.transpose()))
}

fn is_lower(m: &Matrix) -> bool {
    (0..m.rows()).all(|r| (r + 1..m.cols()).all(|c| m[(r, c)].is_zero()))
}

/// `x ∈ N(w) = N ∩ w^{-1} N^- w`.
pub fn in_nw(weyl: &Weyl, w: &WeylElement, x: &Matrix) -> Result<bool> {
    Ok(is_unitriangular(x) && is_lower(&conjugate(weyl, w, x)?))
}

/// `x ∈ N'(w) = N ∩ w^{-1} N w`.
pub fn in_n_prime(weyl: &Weyl, w: &WeylElement, x: &Matrix) -> Result<bool> {
    Ok(is_unitriangular(x) && is_unitriangular(&conjugate(weyl, w, x)?))
}

/// The `w` with `z ∈ B^- w̄ B^-`.
///
/// The ranks of the north-east corners `z[1..i, j..n]` are invariant under
/// `B^- × B^-`, and for a permutation matrix they count the ones in the
/// corner, which pins down the permutation.
pub fn bruhat_cell(weyl: &Weyl, z: &Matrix) -> Result<WeylElement> {
    let n = size(weyl)?;
    if z.shape() != (n, n) {
        return Err(Error::Shape(format!("expected a {n}×{n} matrix")));
    }
    if z.determinant().is_zero() {
        return Err(Error::Shape("matrix is singular".into()));
    }
    // r[i][j] = rank z[0..i, j..n]
    let mut r = vec![vec![0i64; n + 1]; n + 1];
    for i in 1..=n {
        for j in 0..n {
            let rows: Vec<usize> = (0..i).collect();
            let cols: Vec<usize> = (j..n).collect();
            r[i][j] = z.select_rows(&rows).select_cols(&cols).rank() as i64;
        }
    }
    let mut p = vec![0; n];
    for a in 0..n {
        for i in 0..n {
            let c = r[i + 1][a] - r[i][a] - r[i + 1][a + 1] + r[i][a + 1];
            if c == 1 {
                if p[a] != 0 {
                    return Err(Error::Invariant("rank table is not a permutation".into()));
                }
                p[a] = i + 1;
            }
        }
    }
    weyl.from_perm(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Q;
    use crate::minors::sample::{random_lower, random_q, sample_n_prime, sample_nw, sample_unitri};
    use crate::weyl::DynkinDiagram;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn a(n: usize) -> Weyl {
        Weyl::new(DynkinDiagram::a(n))
    }

    #[test]
    fn representatives_act_as_permutations() {
        let g = a(3);
        for w in g.elements() {
            let bar = rep_bar(&g, &w).unwrap();
            let p = g.to_perm(&w).unwrap();
            for c in 0..4 {
                for r in 0..4 {
                    assert_eq!(bar[(r, c)].is_zero(), p[c] != r + 1);
                }
            }
        }
    }

    #[test]
    fn representative_identities() {
        let g = a(3);
        for w in g.elements() {
            let bar = rep_bar(&g, &w).unwrap();
            let inv = bar.inverse().unwrap();
            assert_eq!(inv, bar.transpose());
            assert_eq!(inv, rep_barbar(&g, &w.inverse()).unwrap());
        }
    }

    #[test]
    fn longest_element_words_agree() {
        let g = a(2);
        let n = 3;
        let via = |letters: &[usize]| letters.iter().fold(Matrix::identity(n), |acc, &l| acc.mul(&generator(n, l, 1)));
        assert_eq!(via(&[0, 1, 0]), via(&[1, 0, 1]));
        assert_eq!(via(&[0, 1, 0]), rep_bar(&g, g.longest()).unwrap());
    }

    #[test]
    fn gauss_plus_recovers_upper_factor() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let l = random_lower(4, &mut rng);
            let u = sample_unitri(4, &mut rng);
            assert_eq!(gauss_plus(&l.mul(&u)).unwrap(), u);
        }
        assert_eq!(gauss_plus(&random_lower(3, &mut rng)).unwrap(), Matrix::identity(3));
        let z = Matrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(gauss_plus(&z), Err(Error::NotInG0(1)));
    }

    #[test]
    fn samplers_land_in_their_subgroups() {
        let g = a(3);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for w in g.elements() {
            let x = sample_nw(&g, &w, &mut rng).unwrap();
            assert!(in_nw(&g, &w, &x).unwrap());
            let y = sample_n_prime(&g, &w, &mut rng).unwrap();
            assert!(in_n_prime(&g, &w, &y).unwrap());
        }
    }

    #[test]
    fn bruhat_cell_of_orbit_points() {
        let g = a(3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for w in g.elements() {
            assert_eq!(bruhat_cell(&g, &rep_bar(&g, &w).unwrap()).unwrap(), w);
            let z = random_lower(4, &mut rng).mul(&rep_bar(&g, &w).unwrap()).mul(&random_lower(4, &mut rng));
            assert_eq!(bruhat_cell(&g, &z).unwrap(), w);
        }
    }

    #[test]
    fn identity_point_and_o() {
        let g = a(3);
        assert!(in_o(&g, &g.identity(), &g.identity(), &Matrix::identity(4)).unwrap());
        // Δ_{1, n} vanishes at the identity
        assert!(!in_o(&g, &g.identity(), g.longest(), &Matrix::identity(4)).unwrap());
    }

    fn upper(a: &Q, b: &Q, c: &Q, d: &Q, e: &Q, f: &Q) -> Matrix {
        let mut x = Matrix::identity(4);
        for ((r, col), val) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)].into_iter().zip([a, b, c, d, e, f]) {
            x[(r, col)] = val.clone();
        }
        x
    }

    #[test]
    fn torus_stratum_zeta() {
        let g = a(3);
        let v = g.parse_word("s2").unwrap();
        let w = g.parse_word("s1 s2 s3").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let mut hits = 0;
        while hits < 25 {
            let p: Vec<Q> = (0..6).map(|_| random_q(&mut rng)).collect();
            let (a_, b, c, d, e, f) = (&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]);
            let x = upper(a_, b, c, d, e, f);
            let inside = in_o(&g, &v, &w, &x).unwrap();
            assert_eq!(inside, !c.is_zero() && !f.is_zero());
            if !inside {
                continue;
            }
            hits += 1;
            let z = zeta(&g, &v, &w, &x).unwrap();
            let expect = upper(
                &(-q(1) / c),
                &(-a_ / c),
                &(-b / c),
                a_,
                &((b * f - c) / f),
                &((d * f - e) / f),
            );
            assert_eq!(z, expect);
            let n = sample_nw(&g, &v, &mut rng).unwrap();
            assert_eq!(zeta(&g, &v, &w, &n.mul(&x)).unwrap(), z);
            let n2 = sample_n_prime(&g, &w, &mut rng).unwrap();
            assert_eq!(zeta(&g, &v, &w, &x.mul(&n2)).unwrap(), z.mul(&phi_w(&g, &w, &n2).unwrap()));
        }
    }
}
