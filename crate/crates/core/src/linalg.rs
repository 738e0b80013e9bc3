//! Dense matrices over exact rationals.
//!
//! Everything in the module engine reduces to row reduction over `Q`, so this
//! module keeps the surface small: products, reduced row echelon form,
//! kernels, row spaces and a handful of helpers for subspace bookkeeping.
//! Subspaces are always stored as the rows of a matrix in reduced row echelon
//! form, which makes equality of subspaces a plain matrix comparison.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(format_q).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows. All rows must share one length; `cols` is
    /// needed to describe matrices with zero rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Q>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Q::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn trace(&self) -> Q {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, |r, c| self[(idx[r], c)].clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |r, c| self[(r, idx[c])].clone())
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.row_vecs();
        let pivots = rref_in_place(&mut m, self.cols);
        m.truncate(pivots.len());
        (Matrix::from_rows(self.cols, m), pivots)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.row_vecs();
        rref_in_place(&mut m, self.cols).len()
    }

    /// Basis of the right kernel `{x : A x = 0}`, returned as the columns of
    /// a `cols x k` matrix.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                out[(p, k)] = -r[(i, f)].clone();
            }
        }
        out
    }

    /// Row space in canonical (RREF) form.
    pub fn row_space(&self) -> Matrix {
        self.rref().0
    }

    /// Column space, as the rows of an RREF matrix.
    pub fn column_space(&self) -> Matrix {
        self.transpose().row_space()
    }

    pub fn determinant(&self) -> Q {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.row_vecs();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return Q::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            let piv = m[c][c].clone();
            det *= &piv;
            for r in c + 1..n {
                if m[r][c].is_zero() {
                    continue;
                }
                let f = &m[r][c] / &piv;
                for k in c..n {
                    if !m[c][k].is_zero() {
                        let t = &f * &m[c][k];
                        m[r][k] -= t;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    /// Solves `A X = B`, returning one solution when it exists.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x[(p, c)] = r[(i, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    /// Flattens row-major.
    pub fn to_vec(&self) -> Vec<Q> {
        self.data.clone()
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Q>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| self.row(r).iter().map(format_q).collect()).collect()
    }

    pub fn from_strings(cols: usize, rows: &[Vec<String>]) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != cols {
                return Err(Error::Parse("ragged matrix rows".into()));
            }
            out.push(row.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>()?);
        }
        Ok(Matrix::from_rows(cols, out))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.denom().is_one())
    }

    pub fn max_abs(&self) -> Q {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Row reduces `m` in place and returns the pivot columns. Rows past the
/// number of pivots are zero afterwards.
pub fn rref_in_place(m: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        if !inv.is_one() {
            for x in m[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let (head, tail) = m.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let f = other[c].clone();
            for k in c..cols {
                if !pivot_row[k].is_zero() {
                    let t = &f * &pivot_row[k];
                    other[k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A subspace of `Q^n` kept as an RREF basis (one basis vector per row).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(0, ambient), pivots: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let (basis, pivots) = m.rref();
        Subspace { basis, pivots }
    }

    /// Span of the columns of `m`.
    pub fn from_columns(m: &Matrix) -> Self {
        Subspace::from_rows(&m.transpose())
    }

    pub fn from_vectors(ambient: usize, vs: Vec<Vec<Q>>) -> Self {
        Subspace::from_rows(&Matrix::from_rows(ambient, vs))
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    /// Basis vectors as rows, in RREF.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Q>> {
        self.basis.row_vecs()
    }

    /// Coordinates of `v` in the RREF basis, assuming `v` lies in the space.
    pub fn coordinates(&self, v: &[Q]) -> Vec<Q> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Reduces `v` against the basis; the result vanishes on pivot columns.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *o -= &f * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_rows(&self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // v = a B1 = b B2  <=>  [a b] [B1; -B2] = 0
        let n = self.ambient();
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(n);
        }
        let stacked = self.basis.vstack(&other.basis.scale(&-Q::one()));
        let left = stacked.transpose().kernel(); // columns are [a; b]
        let a = left.block(0, 0, self.dim(), left.cols());
        Subspace::from_rows(&a.transpose().mul(&self.basis))
    }

    /// Complement coordinates: columns that are not pivots.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// The quotient map `Q^n -> Q^n / self` in the coordinates given by the
    /// free columns. Shape `(n - dim) x n`.
    pub fn quotient_map(&self) -> Matrix {
        let n = self.ambient();
        let free = self.free_columns();
        let mut out = Matrix::zeros(free.len(), n);
        for j in 0..n {
            let mut e = vec![Q::zero(); n];
            e[j] = Q::one();
            let red = self.reduce(&e);
            for (i, &f) in free.iter().enumerate() {
                out[(i, j)] = red[f].clone();
            }
        }
        out
    }

    /// A section of the quotient map: places quotient coordinates on the free
    /// columns. Shape `n x (n - dim)`.
    pub fn quotient_section(&self) -> Matrix {
        let free = self.free_columns();
        let mut out = Matrix::zeros(self.ambient(), free.len());
        for (i, &f) in free.iter().enumerate() {
            out[(f, i)] = Q::one();
        }
        out
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix) -> Subspace {
        if self.is_zero() {
            return Subspace::zero(map.rows());
        }
        Subspace::from_rows(&self.basis.mul(&map.transpose()))
    }

    /// Preimage `{v : map v ∈ self}` of this subspace under `map`.
    pub fn preimage(&self, map: &Matrix) -> Subspace {
        let pi = self.quotient_map().mul(map);
        Subspace::from_columns(&pi.kernel())
    }
}

/// Exact integer matrix helpers used by the Weyl group code.
pub fn int_matrix_to_q(m: &[Vec<i64>]) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    Matrix::from_rows(cols, m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_kernel() {
        let a = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn inverse_and_determinant() {
        let a = Matrix::from_i64(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant(), q(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        let s = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.determinant(), q(0));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Matrix::from_i64(&[&[1, 1], &[0, 1], &[1, 2]]);
        let b = Matrix::from_i64(&[&[3], &[1], &[4]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let bad = Matrix::from_i64(&[&[3], &[1], &[5]]);
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn subspace_quotient_section_roundtrip() {
        let s = Subspace::from_vectors(3, vec![vec![q(1), q(1), q(0)]]);
        let pi = s.quotient_map();
        let sigma = s.quotient_section();
        assert_eq!(pi.mul(&sigma), Matrix::identity(2));
        assert!(pi.mul_vec(&[q(2), q(2), q(0)]).iter().all(Zero::is_zero));
    }

    #[test]
    fn subspace_intersection() {
        let a = Subspace::from_vectors(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        let b = Subspace::from_vectors(3, vec![vec![q(0), q(1), q(1)], vec![q(1), q(1), q(0)]]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[q(1), q(1), q(0)]));
    }

    #[test]
    fn preimage_of_subspace() {
        let map = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let target = Subspace::zero(2);
        let pre = target.preimage(&map);
        assert_eq!(pre.dim(), 1);
        assert!(pre.contains(&[q(0), q(5)]));
    }

    #[test]
    fn rational_strings() {
        let x = parse_q("-3/6").unwrap();
        assert_eq!(format_q(&x), "-1/2");
        assert_eq!(format_q(&parse_q("4").unwrap()), "4");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
    }
}
