//! Type A evaluation layer: points of `N ⊂ SL(n)` as exact rational
//! matrices, minors, the representatives `w̄`, `w̿`, Gaussian factorisation
//! and the maps `ζ_{v,w}`.
//!
//! Weyl elements act on `{1, …, n}` through [`crate::weyl::Weyl::to_perm`]; `w̄` sends the
//! basis vector `e_a` to `±e_{w(a)}`. All functions here reject D and E.

mod group;
mod initial;
mod sample;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};

pub use group::{
    bruhat_cell, gauss_plus, in_n_prime, in_nw, in_o, o_minors, perm_matrix, phi_w, rep_bar, rep_bar_word, rep_barbar,
    rep_barbar_word, zeta,
};
pub use initial::{initial_cluster_values, initial_minors};
pub use sample::{
    random_lower, random_q, sample_chart_point, sample_n_prime, sample_nw, sample_on_hypersurface, sample_unitri,
};

/// Row and column sets of a minor, 1-based and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinorSpec {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorSpec {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::Shape(format!("minor with {} rows and {} columns", rows.len(), cols.len())));
        }
        rows.sort_unstable();
        cols.sort_unstable();
        if rows.contains(&0) || cols.contains(&0) {
            return Err(Error::Parse("minor indices are 1-based".into()));
        }
        Ok(MinorSpec { rows, cols })
    }

    /// `Δ_{{1..k}, cols}`.
    pub fn plucker(cols: Vec<usize>) -> Result<Self> {
        MinorSpec::new((1..=cols.len()).collect(), cols)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

fn join(set: &[usize]) -> String {
    if set.iter().all(|&x| x < 10) {
        set.iter().map(usize::to_string).collect()
    } else {
        set.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for MinorSpec {
    /// `Δ_{123,125}`; indices are separated by spaces once one exceeds 9.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ_{{{},{}}}", join(&self.rows), join(&self.cols))
    }
}

impl FromStr for MinorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid minor label {s:?}"));
        let body = s
            .trim()
            .strip_prefix("Δ_{")
            .or_else(|| s.trim().strip_prefix("D_{"))
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(bad)?;
        let (r, c) = body.split_once(',').ok_or_else(bad)?;
        let set = |t: &str| -> Result<Vec<usize>> {
            if t.contains(' ') {
                t.split_whitespace().map(|x| x.parse().map_err(|_| bad())).collect()
            } else {
                t.chars().map(|ch| ch.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
            }
        };
        MinorSpec::new(set(r.trim())?, set(c.trim())?)
    }
}

/// Determinant of the submatrix of `x` on the given rows and columns.
pub fn minor(x: &Matrix, spec: &MinorSpec) -> Q {
    let rows: Vec<usize> = spec.rows.iter().map(|r| r - 1).collect();
    let cols: Vec<usize> = spec.cols.iter().map(|c| c - 1).collect();
    if rows.is_empty() {
        return crate::linalg::q(1);
    }
    x.select_rows(&rows).select_cols(&cols).determinant()
}

/// The Plücker coordinate `[cols] = Δ_{{1..k}, cols}(x)`.
pub fn plucker(x: &Matrix, cols: &[usize]) -> Q {
    minor(x, &MinorSpec { rows: (1..=cols.len()).collect(), cols: cols.to_vec() })
}

pub fn is_unitriangular(x: &Matrix) -> bool {
    use num_traits::{One, Zero};
    x.is_square() && (0..x.rows()).all(|r| (0..=r).all(|c| if r == c { x[(r, c)].is_one() } else { x[(r, c)].is_zero() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn labels_round_trip() {
        let m = MinorSpec::new(vec![1, 2, 3], vec![1, 2, 5]).unwrap();
        assert_eq!(m.to_string(), "Δ_{123,125}");
        assert_eq!("Δ_{123,125}".parse::<MinorSpec>().unwrap(), m);
        let big = MinorSpec::new(vec![1, 10], vec![2, 11]).unwrap();
        assert_eq!(big.to_string().parse::<MinorSpec>().unwrap(), big);
        assert!(MinorSpec::new(vec![1], vec![1, 2]).is_err());
    }

    #[test]
    fn minors_of_identity() {
        let id = Matrix::identity(4);
        assert_eq!(minor(&id, &MinorSpec::new(vec![1, 3], vec![1, 3]).unwrap()), q(1));
        assert_eq!(minor(&id, &MinorSpec::new(vec![1, 3], vec![1, 4]).unwrap()), q(0));
    }

    #[test]
    fn corner_entry() {
        let x = Matrix::from_i64(&[&[1, 2, 3, 7], &[0, 1, 4, 5], &[0, 0, 1, 6], &[0, 0, 0, 1]]);
        assert_eq!(minor(&x, &MinorSpec::new(vec![1], vec![4]).unwrap()), q(7));
        assert!(is_unitriangular(&x));
    }
}
