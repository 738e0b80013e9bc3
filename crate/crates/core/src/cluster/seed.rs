//! Seeds: a quiver with frozen vertices and Laurent polynomial variables.

use crate::cluster::laurent::LaurentPoly;
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::strata::GabrielQuiver;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    /// Vertex ids are the quiver labels; `x<id>` names the initial variables.
    pub quiver: GabrielQuiver,
    pub variables: Vec<LaurentPoly>,
    /// Minor labels of the initial variables, by position.
    pub initial_labels: Vec<Option<String>>,
    pub lambda: Option<Vec<Vec<i64>>>,
}

/// Matrix mutation `b'_ij = -b_ij` if `k ∈ {i, j}`, else
/// `b_ij + sgn(b_ik) max(b_ik b_kj, 0)`.
pub fn mutate_matrix(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == k || j == k {
                        -b[i][j]
                    } else {
                        b[i][j] + b[i][k].signum() * (b[i][k] * b[k][j]).max(0)
                    }
                })
                .collect()
        })
        .collect()
}

/// `λ' = E^T λ E` with `E = E_+` at `k`: the identity except for column
/// `k`, which is `-e_k + Σ_{i≠k} max(0, -b_ik) e_i`.
pub fn mutate_lambda(lambda: &[Vec<i64>], b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = lambda.len();
    let e = |i: usize, j: usize| -> i64 {
        if j != k {
            i64::from(i == j)
        } else if i == k {
            -1
        } else {
            (-b[i][k]).max(0)
        }
    };
    let le: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (0..n).map(|l| lambda[i][l] * e(l, j)).sum()).collect()).collect();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|l| e(l, i) * le[l][j]).sum()).collect()).collect()
}

impl Seed {
    /// The seed whose variables are the initial variables themselves.
    pub fn initial(quiver: GabrielQuiver, labels: Vec<Option<String>>, lambda: Option<Vec<Vec<i64>>>) -> Self {
        let n = quiver.len();
        Seed { variables: (0..n).map(|i| LaurentPoly::var(n, i)).collect(), quiver, initial_labels: labels, lambda }
    }

    pub fn len(&self) -> usize {
        self.quiver.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quiver.is_empty()
    }

    pub fn ids(&self) -> &[usize] {
        &self.quiver.labels
    }

    pub fn position(&self, id: usize) -> Result<usize> {
        self.ids().iter().position(|&x| x == id).ok_or(Error::NoSuchVertex(id))
    }

    pub fn mutable_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&p| !self.quiver.frozen[p]).collect()
    }

    /// `x<id>` for every vertex.
    pub fn variable_names(&self) -> Vec<String> {
        self.ids().iter().map(|id| format!("x{id}")).collect()
    }

    pub fn variable_strings(&self) -> Vec<String> {
        let names = self.variable_names();
        self.variables.iter().map(|v| v.format(&names)).collect()
    }

    /// Label of the variable at `pos`, when it is an initial one.
    pub fn label(&self, pos: usize) -> Option<String> {
        self.variables[pos].as_variable().and_then(|i| self.initial_labels[i].clone())
    }

    /// `(∏_{i→k} x_i^{m} , ∏_{k→j} x_j^{m})`.
    pub fn exchange_monomials(&self, k: usize) -> (LaurentPoly, LaurentPoly) {
        let n = self.len();
        let a = &self.quiver.arrows;
        let mut into = LaurentPoly::one(n);
        let mut out = LaurentPoly::one(n);
        for i in 0..n {
            into = into.mul(&self.variables[i].pow(a[i][k] as u32));
            out = out.mul(&self.variables[i].pow(a[k][i] as u32));
        }
        (into, out)
    }

    /// Mutation at position `k`.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        if k >= self.len() {
            return Err(Error::NoSuchVertex(k));
        }
        if self.quiver.frozen[k] {
            return Err(Error::FrozenVertex(self.ids()[k]));
        }
        let (p, m) = self.exchange_monomials(k);
        let new_var = p.add(&m).div_exact(&self.variables[k])?;
        let quiver = self.quiver.mutate(k);
        let b = self.quiver.exchange_matrix();
        // second implementation; entries between frozen vertices carry no information
        let mb = mutate_matrix(&b, k);
        let qb = quiver.exchange_matrix();
        let n = self.len();
        if !(0..n).all(|i| (0..n).all(|j| (quiver.frozen[i] && quiver.frozen[j]) || mb[i][j] == qb[i][j])) {
            return Err(Error::Invariant("quiver and matrix mutation disagree".into()));
        }
        let mut variables = self.variables.clone();
        variables[k] = new_var;
        let lambda = self.lambda.as_ref().map(|l| mutate_lambda(l, &b, k));
        Ok(Seed { quiver, variables, initial_labels: self.initial_labels.clone(), lambda })
    }

    /// Mutation at the vertex with the given id.
    pub fn mutate_id(&self, id: usize) -> Result<Seed> {
        self.mutate(self.position(id)?)
    }

    /// Substitutes values of the initial variables (by position).
    pub fn evaluate(&self, values: &[Q]) -> Result<Vec<Q>> {
        if values.len() != self.len() {
            return Err(Error::Shape(format!("expected {} values", self.len())));
        }
        self.variables
            .iter()
            .map(|v| v.eval(values).map_err(|e| if let Error::ZeroDivision(i) = e { Error::ZeroDivision(self.ids()[i]) } else { e }))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn a3_path() -> Seed {
        let arrows = vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]];
        Seed::initial(GabrielQuiver::new(vec![1, 2, 3], vec![false; 3], arrows), vec![None; 3], None)
    }

    #[test]
    fn mutation_is_involutive() {
        let s = a3_path();
        for k in 0..3 {
            assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
        }
    }

    #[test]
    fn exchange_relation() {
        let s = a3_path().mutate(1).unwrap();
        assert_eq!(s.variable_strings()[1], "(x1 + x3)/x2");
        let vals = s.evaluate(&[q(1), q(2), q(3)]).unwrap();
        assert_eq!(vals[1], q(2));
    }

    #[test]
    fn frozen_vertices_are_rejected() {
        let mut s = a3_path();
        s.quiver.frozen[0] = true;
        assert_eq!(s.mutate(0), Err(Error::FrozenVertex(1)));
    }

    #[test]
    fn matrix_mutation_matches_quiver_mutation() {
        let s = a3_path();
        for k in 0..3 {
            assert_eq!(s.quiver.mutate(k).exchange_matrix(), mutate_matrix(&s.quiver.exchange_matrix(), k));
        }
    }
}
