use crate::weyl::DynkinDiagram;

/// An arrow of the double quiver. For the Dynkin edge `e = {i, j}` with
/// `i < j`, arrow `2e` is `i → j` and arrow `2e + 1` is its reverse `j → i`
/// (the starred one, with sign `-1` in the relation).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: usize,
    pub source: usize,
    pub target: usize,
    pub star: bool,
}

impl Arrow {
    pub fn sign(&self) -> i64 {
        if self.star {
            -1
        } else {
            1
        }
    }

    pub fn reverse_id(&self) -> usize {
        self.id ^ 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoubleQuiver {
    diagram: DynkinDiagram,
    arrows: Vec<Arrow>,
}

impl DoubleQuiver {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        let mut arrows = Vec::new();
        for &(i, j) in diagram.edges() {
            arrows.push(Arrow { id: arrows.len(), source: i, target: j, star: false });
            arrows.push(Arrow { id: arrows.len(), source: j, target: i, star: true });
        }
        DoubleQuiver { diagram: diagram.clone(), arrows }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn vertices(&self) -> usize {
        self.diagram.rank()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    pub fn reverse(&self, a: &Arrow) -> &Arrow {
        &self.arrows[a.reverse_id()]
    }

    pub fn arrows_into(&self, k: usize) -> impl Iterator<Item = &Arrow> + '_ {
        self.arrows.iter().filter(move |a| a.target == k)
    }

    pub fn arrows_out_of(&self, k: usize) -> impl Iterator<Item = &Arrow> + '_ {
        self.arrows.iter().filter(move |a| a.source == k)
    }

    pub fn find(&self, source: usize, target: usize) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.source == source && a.target == target)
    }
}
