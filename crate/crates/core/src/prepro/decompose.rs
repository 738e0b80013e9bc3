//! Krull–Schmidt decomposition.
//!
//! A module is indecomposable exactly when `End(M)/rad End(M)` is a division
//! ring; the radical is the kernel of the trace form `(φ, ψ) ↦ tr(φψ)`, so
//! `rank` of the Gram matrix is `dim End/rad`. When that rank exceeds one we
//! look for an endomorphism `φ` with a rational eigenvalue `λ` that is not
//! its only eigenvalue; then the Fitting decomposition of `φ - λ` splits the
//! module into `ker (φ-λ)^N ⊕ im (φ-λ)^N`, and we recurse.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Q};
use crate::prepro::hom::{combine, hom_basis, indecomposables_isomorphic, Morphism};
use crate::prepro::module::{LambdaModule, Submodule};

/// Indecomposable summands up to isomorphism, with multiplicities, in order
/// of first appearance.
pub fn decompose(m: &LambdaModule) -> Result<Vec<(LambdaModule, usize)>> {
    let mut classes: Vec<(LambdaModule, usize)> = Vec::new();
    for piece in indecomposable_pieces(m)? {
        match classes.iter_mut().find(|(c, _)| indecomposables_isomorphic(c, &piece)) {
            Some((_, k)) => *k += 1,
            None => classes.push((piece, 1)),
        }
    }
    Ok(classes)
}

/// Number of pairwise non-isomorphic indecomposable summands.
pub fn count_summands(m: &LambdaModule) -> Result<usize> {
    Ok(decompose(m)?.len())
}

/// Splits `m` into indecomposable modules (with repetition).
pub fn indecomposable_pieces(m: &LambdaModule) -> Result<Vec<LambdaModule>> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split(&x)? {
            None => out.push(x),
            Some((a, b)) => {
                stack.push(x.restrict(&b).expect("Fitting image is a submodule"));
                stack.push(x.restrict(&a).expect("Fitting kernel is a submodule"));
            }
        }
    }
    Ok(out)
}

pub fn is_indecomposable(m: &LambdaModule) -> bool {
    !m.is_zero() && local_rank(&hom_basis(m, m)) == 1
}

fn trace_of_product(a: &Morphism, b: &Morphism) -> Q {
    let mut acc = Q::zero();
    for (x, y) in a.iter().zip(b) {
        for i in 0..x.rows() {
            for j in 0..x.cols() {
                let (p, r) = (&x[(i, j)], &y[(j, i)]);
                if !p.is_zero() && !r.is_zero() {
                    acc += p * r;
                }
            }
        }
    }
    acc
}

/// `dim End(M) / rad End(M)` via the trace form.
fn local_rank(end: &[Morphism]) -> usize {
    let k = end.len();
    let gram = Matrix::from_fn(k, k, |a, b| trace_of_product(&end[a], &end[b]));
    gram.rank()
}

/// Finds a nontrivial decomposition `m = A ⊕ B` into submodules, or `None`
/// when `m` is indecomposable.
fn split(m: &LambdaModule) -> Result<Option<(Submodule, Submodule)>> {
    let end = hom_basis(m, m);
    if end.len() <= 1 || local_rank(&end) == 1 {
        return Ok(None);
    }
    for phi in &end {
        if let Some(s) = fitting_split(m, phi) {
            return Ok(Some(s));
        }
    }
    for a in 0..end.len() {
        for b in a + 1..end.len() {
            for sign in [1, -1] {
                let mut c = vec![0; end.len()];
                c[a] = 1;
                c[b] = sign;
                if let Some(s) = fitting_split(m, &combine(&end, &c)) {
                    return Ok(Some(s));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xdec0);
    for _ in 0..64 {
        let c: Vec<i64> = end.iter().map(|_| rng.gen_range(-1..=1)).collect();
        if c.iter().all(|&x| x == 0) {
            continue;
        }
        if let Some(s) = fitting_split(m, &combine(&end, &c)) {
            return Ok(Some(s));
        }
    }
    Err(Error::DecompositionStalled)
}

fn fitting_split(m: &LambdaModule, phi: &Morphism) -> Option<(Submodule, Submodule)> {
    let poly = minimal_polynomial(phi);
    let roots = rational_roots(&poly)?;
    let degree = poly.len() - 1;
    for lambda in roots {
        // (x - λ)^k must not exhaust the minimal polynomial
        let mult = root_multiplicity(&poly, &lambda);
        if mult == degree {
            continue;
        }
        let n = m.dims().iter().copied().max().unwrap_or(0).max(1);
        let psi: Morphism = phi
            .iter()
            .map(|f| f.sub(&Matrix::identity(f.rows()).scale(&lambda)))
            .collect();
        let power: Morphism = psi.iter().map(|f| matrix_power(f, n)).collect();
        let ker = Submodule {
            spaces: power.iter().map(|p| Subspace::from_columns(&p.kernel())).collect(),
        };
        let img = Submodule { spaces: power.iter().map(Subspace::from_columns).collect() };
        if !ker.is_zero() && !img.is_zero() {
            return Some((ker, img));
        }
    }
    None
}

fn matrix_power(m: &Matrix, k: usize) -> Matrix {
    let mut out = Matrix::identity(m.rows());
    for _ in 0..k {
        out = out.mul(m);
    }
    out
}

/// Coefficients `c_0, …, c_k` (constant first, monic) of the minimal
/// polynomial of an endomorphism given vertex by vertex.
pub fn minimal_polynomial(phi: &Morphism) -> Vec<Q> {
    let flatten = |f: &Morphism| -> Vec<Q> { f.iter().flat_map(|m| m.to_vec()).collect() };
    let len: usize = phi.iter().map(|m| m.rows() * m.cols()).sum();
    let mut powers: Vec<Vec<Q>> = vec![flatten(
        &phi.iter().map(|m| Matrix::identity(m.rows())).collect::<Vec<_>>(),
    )];
    let mut cur: Morphism = phi.iter().map(|m| Matrix::identity(m.rows())).collect();
    loop {
        cur = cur.iter().zip(phi).map(|(c, f)| c.mul(f)).collect();
        powers.push(flatten(&cur));
        let k = powers.len();
        let cols = Matrix::from_fn(len, k, |r, c| powers[c][r].clone());
        let ker = cols.kernel();
        if ker.cols() > 0 {
            let v = ker.column(0);
            let lead = v[k - 1].clone();
            return v.iter().map(|x| x / &lead).collect();
        }
    }
}

fn root_multiplicity(poly: &[Q], root: &Q) -> usize {
    let mut p = poly.to_vec();
    let mut mult = 0;
    while p.len() > 1 {
        // synthetic division by (x - root)
        let deg = p.len() - 1;
        let mut quotient = vec![Q::zero(); deg];
        let mut acc = Q::zero();
        for i in (0..=deg).rev() {
            acc = &acc * root + &p[i];
            if i > 0 {
                quotient[i - 1] = acc.clone();
            }
        }
        if !acc.is_zero() {
            break;
        }
        mult += 1;
        p = quotient;
    }
    mult
}

fn eval(poly: &[Q], x: &Q) -> Q {
    poly.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

/// Rational roots by the rational root theorem. Returns `None` when the
/// coefficients are too large to factor by trial division.
pub fn rational_roots(poly: &[Q]) -> Option<Vec<Q>> {
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = poly.iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    while ints.len() > 1 && ints[0].is_zero() {
        ints.remove(0);
        if !roots.contains(&Q::zero()) {
            roots.push(Q::zero());
        }
    }
    if ints.len() <= 1 {
        return Some(roots);
    }
    let ps = divisors(&ints[0])?;
    let qs = divisors(ints.last().unwrap())?;
    let qpoly: Vec<Q> = ints.iter().map(|c| Q::from_integer(c.clone())).collect();
    for p in &ps {
        for qd in &qs {
            for sign in [1, -1] {
                let x = Q::new(p * BigInt::from(sign), qd.clone());
                if !roots.contains(&x) && eval(&qpoly, &x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    Some(roots)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&n| n <= 1_000_000_000_000)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::prepro::algebra::Preprojective;
    use crate::prepro::hom::is_isomorphic;
    use crate::weyl::DynkinDiagram;

    #[test]
    fn simple_squared() {
        let p = Preprojective::get(&DynkinDiagram::a(2));
        let m = p.simple(0).power(2);
        let d = decompose(&m).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(is_isomorphic(&d[0].0, &p.simple(0)));
    }

    #[test]
    fn injectives_are_indecomposable() {
        let p = Preprojective::get(&DynkinDiagram::a(4));
        for i in 0..4 {
            assert!(is_indecomposable(p.injective(i)));
        }
    }

    #[test]
    fn scrambled_sum_recovers_constituents() {
        let p = Preprojective::get(&DynkinDiagram::a(3));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let parts = [p.injective(1).clone(), p.simple(0), p.injective(1).clone(), p.injective(2).clone()];
        let m = LambdaModule::direct_sum_all(p.quiver(), &parts).random_conjugate(&mut rng);
        let d = decompose(&m).unwrap();
        assert_eq!(d.len(), 3);
        let mult_q2 = d.iter().find(|(x, _)| is_isomorphic(x, p.injective(1))).unwrap().1;
        assert_eq!(mult_q2, 2);
    }

    #[test]
    fn polynomial_roots() {
        let expand = |roots: &[Q]| {
            let mut p = vec![q(1)];
            for r in roots {
                let mut next = vec![Q::zero(); p.len() + 1];
                for (i, c) in p.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * r;
                }
                p = next;
            }
            p
        };
        // (x - 1)^2 (x + 2/3)
        let p = expand(&[q(1), q(1), Q::new((-2).into(), 3.into())]);
        let mut roots = rational_roots(&p).unwrap();
        roots.sort();
        assert_eq!(roots, vec![Q::new((-2).into(), 3.into()), q(1)]);
        assert_eq!(root_multiplicity(&p, &q(1)), 2);
        let irr = vec![q(-2), q(0), q(1)];
        assert!(rational_roots(&irr).unwrap().is_empty());
    }
}
