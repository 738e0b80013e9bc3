use std::fmt::Write;

use serde::{Deserialize, Serialize};

/// Quiver on labelled vertices with arrow multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GabrielQuiver {
    pub labels: Vec<usize>,
    pub frozen: Vec<bool>,
    /// `arrows[a][b]` arrows from vertex `a` to vertex `b` (positions, not labels).
    pub arrows: Vec<Vec<usize>>,
}

impl GabrielQuiver {
    pub fn new(labels: Vec<usize>, frozen: Vec<bool>, arrows: Vec<Vec<usize>>) -> Self {
        GabrielQuiver { labels, frozen, arrows }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().flatten().sum()
    }

    /// Arrows as `(from_label, to_label, multiplicity)`.
    pub fn arrow_list(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.arrows[a][b] > 0 {
                    out.push((self.labels[a], self.labels[b], self.arrows[a][b]));
                }
            }
        }
        out
    }

    pub fn has_loops(&self) -> bool {
        (0..self.len()).any(|a| self.arrows[a][a] > 0)
    }

    /// 2-cycles with both endpoints mutable.
    pub fn has_mutable_two_cycles(&self) -> bool {
        (0..self.len()).any(|a| {
            (0..self.len())
                .any(|b| a != b && !self.frozen[a] && !self.frozen[b] && self.arrows[a][b] > 0 && self.arrows[b][a] > 0)
        })
    }

    /// Skew-symmetric matrix `b_ab = #(a → b) - #(b → a)`.
    pub fn exchange_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        (0..n)
            .map(|a| (0..n).map(|b| self.arrows[a][b] as i64 - self.arrows[b][a] as i64).collect())
            .collect()
    }

    /// Fomin–Zelevinsky mutation at position `k`, done on arrows: reverse
    /// arrows at `k`, add a composite `i → j` for every path `i → k → j`,
    /// then cancel 2-cycles.
    pub fn mutate(&self, k: usize) -> GabrielQuiver {
        let n = self.len();
        let mut arr: Vec<Vec<i64>> =
            self.arrows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                if i != k && j != k && i != j {
                    arr[i][j] += self.arrows[i][k] as i64 * self.arrows[k][j] as i64;
                }
            }
        }
        for i in 0..n {
            arr[i][k] = self.arrows[k][i] as i64;
            arr[k][i] = self.arrows[i][k] as i64;
        }
        for i in 0..n {
            for j in i + 1..n {
                let c = arr[i][j].min(arr[j][i]);
                arr[i][j] -= c;
                arr[j][i] -= c;
            }
        }
        let arrows = arr.iter().map(|r| r.iter().map(|&x| x as usize).collect()).collect();
        GabrielQuiver { labels: self.labels.clone(), frozen: self.frozen.clone(), arrows }
    }

    /// Equality on every entry with at least one mutable endpoint.
    pub fn agrees_off_frozen(&self, other: &GabrielQuiver) -> bool {
        let n = self.len();
        n == other.len()
            && (0..n).all(|a| {
                (0..n).all(|b| (self.frozen[a] && self.frozen[b]) || self.arrows[a][b] == other.arrows[a][b])
            })
    }

    /// The quiver on the mutable vertices only.
    pub fn mutable_part(&self) -> GabrielQuiver {
        let keep: Vec<usize> = (0..self.len()).filter(|&a| !self.frozen[a]).collect();
        GabrielQuiver {
            labels: keep.iter().map(|&a| self.labels[a]).collect(),
            frozen: vec![false; keep.len()],
            arrows: keep.iter().map(|&a| keep.iter().map(|&b| self.arrows[a][b]).collect()).collect(),
        }
    }

    /// Graphviz rendering; frozen vertices are drawn as boxes.
    pub fn to_dot(&self, names: Option<&[String]>) -> String {
        let mut s = String::from("digraph quiver {\n");
        for a in 0..self.len() {
            let shape = if self.frozen[a] { "box" } else { "ellipse" };
            let name = names.map_or_else(|| format!("{}", self.labels[a]), |n| n[a].clone());
            let _ = writeln!(
                s,
                "  v{} [label=\"{}\", shape={shape}{}];",
                self.labels[a],
                name.replace('"', "\\\""),
                if self.frozen[a] { ", style=filled, fillcolor=lightgrey" } else { "" }
            );
        }
        for (a, b, m) in self.arrow_list() {
            if m == 1 {
                let _ = writeln!(s, "  v{a} -> v{b};");
            } else {
                let _ = writeln!(s, "  v{a} -> v{b} [label=\"{m}\"];");
            }
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> GabrielQuiver {
        // 0 -> 1 -> 2
        GabrielQuiver::new(vec![1, 2, 3], vec![false; 3], vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]])
    }

    #[test]
    fn mutation_is_involutive() {
        let q = path3();
        for k in 0..3 {
            assert_eq!(q.mutate(k).mutate(k), q);
        }
    }

    #[test]
    fn mutation_in_the_middle_creates_a_triangle() {
        // 1 -> 0, 2 -> 1 reversed, plus the composite 0 -> 2
        let q = path3().mutate(1);
        assert_eq!(q.arrows, vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
    }

    #[test]
    fn dot_output() {
        let mut q = path3();
        q.frozen[2] = true;
        let dot = q.to_dot(None);
        assert!(dot.contains("v1 -> v2;"));
        assert!(dot.contains("shape=box"));
    }
}
