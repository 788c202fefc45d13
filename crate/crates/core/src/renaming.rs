//! Recolouring between two colourings that induce the same colour classes,
//! using at most `floor(3n/2)` steps and at most two recolourings per vertex.
//!
//! The classes form a digraph with an arc `i -> j` when the current colour
//! of class `i` is the target colour of class `j`. In- and out-degrees are
//! at most one, so it splits into directed paths and cycles. A path is
//! recoloured from its source: each class moves into the colour just freed
//! by its predecessor. A cycle first parks its smallest class on a colour
//! unused anywhere, walks the rest of the cycle, then finishes the parked
//! class.

use std::collections::BTreeSet;

use crate::colouring::{colour_classes, is_proper, same_partition, Colour, Colouring};
use crate::error::{invalid, Result};
use crate::explorer::{RecolouringSequence, Step};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassNode {
    pub vertices: Vec<Vertex>,
    pub from: Colour,
    pub to: Colour,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenamingDigraph {
    /// Classes ordered by smallest vertex.
    pub nodes: Vec<ClassNode>,
    /// `(i, j)` when `nodes[i].from == nodes[j].to` and `i != j`.
    pub arcs: Vec<(usize, usize)>,
}

/// One weak component of the digraph, in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chain {
    Path(Vec<usize>),
    Cycle(Vec<usize>),
}

impl RenamingDigraph {
    fn successor(&self, i: usize) -> Option<usize> {
        self.arcs.iter().find(|&&(a, _)| a == i).map(|&(_, b)| b)
    }

    fn predecessor(&self, j: usize) -> Option<usize> {
        self.arcs.iter().find(|&&(_, b)| b == j).map(|&(a, _)| a)
    }

    /// Paths start at their source; cycles start at the class they park
    /// (minimum size, then smallest vertex). Ordered by smallest class index.
    pub fn chains(&self) -> Vec<Chain> {
        let k = self.nodes.len();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for i in 0..k {
            if seen[i] {
                continue;
            }
            // Walk back to a source, or around a cycle.
            let mut head = i;
            let mut cyclic = false;
            while let Some(p) = self.predecessor(head) {
                head = p;
                if head == i {
                    cyclic = true;
                    break;
                }
            }
            let mut members = vec![head];
            let mut cur = head;
            while let Some(s) = self.successor(cur) {
                if s == head {
                    break;
                }
                members.push(s);
                cur = s;
            }
            for &m in &members {
                seen[m] = true;
            }
            if cyclic {
                let park = (0..members.len())
                    .min_by_key(|&x| (self.nodes[members[x]].vertices.len(), members[x]))
                    .unwrap();
                members.rotate_left(park);
                out.push(Chain::Cycle(members));
            } else {
                out.push(Chain::Path(members));
            }
        }
        out
    }
}

pub fn build_renaming_digraph(a: &Colouring, b: &Colouring) -> Result<RenamingDigraph> {
    if !same_partition(a, b)? {
        return invalid("colourings do not induce the same partition");
    }
    let mut nodes: Vec<ClassNode> = colour_classes(a)
        .into_values()
        .map(|vertices| ClassNode {
            from: a.get(vertices[0]),
            to: b.get(vertices[0]),
            vertices,
        })
        .collect();
    nodes.sort_by_key(|c| c.vertices[0]);
    let mut arcs = Vec::new();
    for (i, ci) in nodes.iter().enumerate() {
        for (j, cj) in nodes.iter().enumerate() {
            if i != j && ci.from == cj.to {
                arcs.push((i, j));
            }
        }
    }
    Ok(RenamingDigraph { nodes, arcs })
}

/// A sequence from `a` to `b` in `C_ell(G)` of length at most
/// `floor(3n/2)`, recolouring each vertex at most twice.
pub fn optimal_renaming(g: &Graph, a: &Colouring, b: &Colouring, ell: Colour) -> Result<RecolouringSequence> {
    if a.len() != g.n() || b.len() != g.n() {
        return invalid("colouring length does not match the graph");
    }
    if !is_proper(g, a)? || !is_proper(g, b)? {
        return invalid("both colourings must be proper");
    }
    let d = build_renaming_digraph(a, b)?;
    let classes = d.nodes.len() as Colour;
    if ell < classes + 1 {
        return invalid(format!("ell = {ell} is below {} colour classes + 1", classes));
    }
    if a.max_colour() > ell || b.max_colour() > ell {
        return invalid(format!("colours exceed [ell] = [{ell}]"));
    }

    let mut current = a.clone();
    let mut steps = Vec::new();
    let mut move_class = |current: &mut Colouring, class: &ClassNode, colour: Colour| {
        for &v in &class.vertices {
            current.set(v, colour);
            steps.push(Step { vertex: v, colour });
        }
    };
    for chain in d.chains() {
        match chain {
            Chain::Path(members) => {
                for m in members {
                    let class = &d.nodes[m];
                    if class.from != class.to {
                        move_class(&mut current, class, class.to);
                    }
                }
            }
            Chain::Cycle(members) => {
                let used: BTreeSet<Colour> = current.as_slice().iter().copied().collect();
                let free = (1..=ell)
                    .find(|c| !used.contains(c))
                    .expect("ell exceeds the number of colours in use");
                let parked = &d.nodes[members[0]];
                move_class(&mut current, parked, free);
                for &m in &members[1..] {
                    move_class(&mut current, &d.nodes[m], d.nodes[m].to);
                }
                move_class(&mut current, parked, parked.to);
            }
        }
    }
    Ok(RecolouringSequence {
        start: a.clone(),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explorer::verify_sequence;
    use crate::graph::{complete_bipartite, path};
    use crate::Palette;

    fn col(v: &[Colour]) -> Colouring {
        Colouring::new(v.to_vec())
    }

    #[test]
    fn swap_is_a_two_cycle() {
        let d = build_renaming_digraph(&col(&[1, 2]), &col(&[2, 1])).unwrap();
        assert_eq!(d.nodes.len(), 2);
        assert_eq!(d.arcs, vec![(0, 1), (1, 0)]);
        assert_eq!(d.chains(), vec![Chain::Cycle(vec![0, 1])]);
    }

    #[test]
    fn identity_has_no_arcs() {
        let d = build_renaming_digraph(&col(&[1, 2, 1]), &col(&[1, 2, 1])).unwrap();
        assert!(d.arcs.is_empty());
    }

    #[test]
    fn three_cycle() {
        let d = build_renaming_digraph(&col(&[1, 1, 2, 3]), &col(&[2, 2, 3, 1])).unwrap();
        assert_eq!(d.nodes.len(), 3);
        assert_eq!(d.arcs.len(), 3);
        assert!(matches!(&d.chains()[..], [Chain::Cycle(m)] if m.len() == 3));
    }

    #[test]
    fn mismatched_partitions_are_rejected() {
        assert!(build_renaming_digraph(&col(&[1, 2, 1]), &col(&[1, 1, 2])).is_err());
    }

    #[test]
    fn k2_swap_uses_three_steps() {
        let g = path(2).unwrap();
        let (a, b) = (col(&[1, 2]), col(&[2, 1]));
        let s = optimal_renaming(&g, &a, &b, 3).unwrap();
        assert_eq!(
            s.steps,
            vec![
                Step { vertex: 0, colour: 3 },
                Step { vertex: 1, colour: 1 },
                Step { vertex: 0, colour: 2 }
            ]
        );
        assert!(verify_sequence(&g, &Palette::Uniform(3), &s, &b).valid);
        assert!(optimal_renaming(&g, &a, &b, 2).is_err());
    }

    #[test]
    fn identity_is_empty() {
        let g = path(3).unwrap();
        let a = col(&[1, 2, 1]);
        assert!(optimal_renaming(&g, &a, &a, 3).unwrap().is_empty());
    }

    #[test]
    fn path_shaped_renaming_touches_each_moved_vertex_once() {
        // U: 1 -> 3 must go before V: 2 -> 1.
        let g = complete_bipartite(2, 2).unwrap();
        let a = col(&[1, 1, 2, 2]);
        let b = col(&[3, 3, 1, 1]);
        let s = optimal_renaming(&g, &a, &b, 3).unwrap();
        assert_eq!(s.len(), 4);
        let r = verify_sequence(&g, &Palette::Uniform(3), &s, &b);
        assert!(r.valid && r.max_per_vertex() == 1);
    }
}
