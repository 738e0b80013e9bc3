use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    D,
    E,
}

/// A simply-laced Dynkin diagram. Vertices are `0..rank` internally and are
/// printed 1-based, with Bourbaki numbering (in type E the branch vertex is 4
/// and vertex 2 hangs off it).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    kind: Kind,
    rank: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<u8>>,
}

impl DynkinDiagram {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let bad = || Error::UnknownType(format!("{kind:?}{rank}"));
        let edges: Vec<(usize, usize)> = match kind {
            Kind::A if rank >= 1 => (0..rank - 1).map(|i| (i, i + 1)).collect(),
            Kind::D if rank >= 4 => {
                let mut e: Vec<_> = (0..rank - 2).map(|i| (i, i + 1)).collect();
                e.push((rank - 3, rank - 1));
                e
            }
            Kind::E if (6..=8).contains(&rank) => {
                let mut e = vec![(0, 2), (1, 3), (2, 3)];
                e.extend((3..rank - 1).map(|i| (i, i + 1)));
                e
            }
            _ => return Err(bad()),
        };
        let mut adjacency = vec![vec![0u8; rank]; rank];
        for &(a, b) in &edges {
            adjacency[a][b] = 1;
            adjacency[b][a] = 1;
        }
        Ok(DynkinDiagram { kind, rank, edges, adjacency })
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Kind::A, rank).expect("rank >= 1")
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_type_a(&self) -> bool {
        self.kind == Kind::A
    }

    /// Edges `(i, j)` with `i < j`, in a fixed order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> &[Vec<u8>] {
        &self.adjacency
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j] == 1
    }

    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| self.adjacency[i][j] == 1)
    }

    /// Cartan matrix `2I - A`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| if i == j { 2 } else { -(self.adjacency[i][j] as i64) })
                    .collect()
            })
            .collect()
    }

    pub fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: i + 1, rank: self.rank })
        }
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for DynkinDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::UnknownType(s.to_string());
        let mut chars = t.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Kind::A,
            Some('D') => Kind::D,
            Some('E') => Kind::E,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        DynkinDiagram::new(kind, rank).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_types() {
        assert_eq!("A5".parse::<DynkinDiagram>().unwrap().rank(), 5);
        assert_eq!("d4".parse::<DynkinDiagram>().unwrap().kind(), Kind::D);
        assert_eq!("E_8".parse::<DynkinDiagram>().unwrap().edges().len(), 7);
        assert!("E9".parse::<DynkinDiagram>().is_err());
        assert!("D3".parse::<DynkinDiagram>().is_err());
        assert!("B3".parse::<DynkinDiagram>().is_err());
    }

    #[test]
    fn diagrams_are_trees() {
        for s in ["A1", "A4", "D4", "D6", "E6", "E7", "E8"] {
            let d: DynkinDiagram = s.parse().unwrap();
            assert_eq!(d.edges().len(), d.rank() - 1, "{s}");
            let mut seen = vec![false; d.rank()];
            let mut stack = vec![0];
            while let Some(v) = stack.pop() {
                if !std::mem::replace(&mut seen[v], true) {
                    stack.extend(d.neighbours(v));
                }
            }
            assert!(seen.iter().all(|&b| b), "{s} connected");
        }
    }

    #[test]
    fn e6_branch_vertex() {
        let d: DynkinDiagram = "E6".parse().unwrap();
        assert_eq!(d.neighbours(3).count(), 3);
        assert_eq!(d.neighbours(1).collect::<Vec<_>>(), vec![3]);
    }
}
