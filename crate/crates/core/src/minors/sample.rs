//! Seeded samplers for points of `N`, `N(w)`, `N'(w)` and hypersurfaces.

use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{q, q_frac, Matrix, Q};
use crate::minors::{minor, MinorSpec};
use crate::weyl::{Weyl, WeylElement};

/// A small nonzero-biased rational `p/d` with `|p| ≤ 9`, `1 ≤ d ≤ 3`.
pub fn random_q<R: Rng>(rng: &mut R) -> Q {
    q_frac(rng.gen_range(-9..=9), rng.gen_range(1..=3))
}

fn nonzero_q<R: Rng>(rng: &mut R) -> Q {
    loop {
        let x = random_q(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn sample_unitri<R: Rng>(n: usize, rng: &mut R) -> Matrix {
    Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Equal => q(1),
        std::cmp::Ordering::Less => random_q(rng),
        std::cmp::Ordering::Greater => q(0),
    })
}

/// Invertible lower triangular matrix.
pub fn random_lower<R: Rng>(n: usize, rng: &mut R) -> Matrix {
    Matrix::from_fn(n, n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Equal => nonzero_q(rng),
        std::cmp::Ordering::Greater => random_q(rng),
        std::cmp::Ordering::Less => q(0),
    })
}

/// Product of root subgroup elements `1 + t E_ab` over the pairs `a < b`
/// selected by `keep`.
fn root_product<R: Rng>(p: &[usize], keep: impl Fn(usize, usize) -> bool, rng: &mut R) -> Matrix {
    let n = p.len();
    let mut x = Matrix::identity(n);
    for a in 0..n {
        for b in a + 1..n {
            if keep(p[a], p[b]) {
                let mut e = Matrix::identity(n);
                e[(a, b)] = random_q(rng);
                x = x.mul(&e);
            }
        }
    }
    x
}

/// A point of `N(w)`: root subgroups of the inversions `a < b`, `w(a) > w(b)`.
pub fn sample_nw<R: Rng>(weyl: &Weyl, w: &WeylElement, rng: &mut R) -> Result<Matrix> {
    let p = weyl.to_perm(w)?;
    Ok(root_product(&p, |wa, wb| wa > wb, rng))
}

/// A point of `N'(w)`: root subgroups of the pairs `a < b` with `w(a) < w(b)`.
pub fn sample_n_prime<R: Rng>(weyl: &Weyl, w: &WeylElement, rng: &mut R) -> Result<Matrix> {
    let p = weyl.to_perm(w)?;
    Ok(root_product(&p, |wa, wb| wa < wb, rng))
}

/// A random unitriangular point on `{Δ = 0}`, found by solving for the
/// entry `(row, col)` (1-based), in which `Δ` is affine. Resamples when the
/// entry does not occur.
pub fn sample_on_hypersurface<R: Rng>(
    n: usize,
    spec: &MinorSpec,
    entry: (usize, usize),
    rng: &mut R,
) -> Result<Matrix> {
    let (r, c) = (entry.0 - 1, entry.1 - 1);
    if r >= c || c >= n {
        return Err(Error::Shape("entry must lie strictly above the diagonal".into()));
    }
    for _ in 0..100 {
        let mut x = sample_unitri(n, rng);
        x[(r, c)] = q(0);
        let b = minor(&x, spec);
        x[(r, c)] = q(1);
        let a = minor(&x, spec) - &b;
        if a.is_zero() {
            continue;
        }
        x[(r, c)] = -b / a;
        debug_assert!(minor(&x, spec).is_zero());
        return Ok(x);
    }
    Err(Error::Invariant(format!("{spec} does not depend on entry {entry:?}")))
}

/// A point of `N ⊂ SL(6)` with `[345] = 0` and `[245]`, `[156]`, `[234]`,
/// `[456]`, `[126]` all nonzero.
pub fn sample_chart_point<R: Rng>(rng: &mut R) -> Result<Matrix> {
    let target = MinorSpec::plucker(vec![3, 4, 5])?;
    let frozen: Vec<MinorSpec> = [[2, 4, 5], [1, 5, 6], [2, 3, 4], [4, 5, 6], [1, 2, 6]]
        .iter()
        .map(|c| MinorSpec::plucker(c.to_vec()))
        .collect::<Result<_>>()?;
    loop {
        let x = sample_on_hypersurface(6, &target, (1, 5), rng)?;
        if frozen.iter().all(|m| !minor(&x, m).is_zero()) {
            return Ok(x);
        }
    }
}
