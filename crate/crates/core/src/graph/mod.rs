//! Undirected simple graphs with optional bipartition metadata.

mod families;
mod format;

pub use families::{
    complete_bipartite, complete_bipartite_minus_matching, forcing_gadget, frozen_list_instance, k18_list_instance,
    layered_example, path, path_plus_chain, ForcingGadget, ListInstance,
};

use std::collections::VecDeque;

use crate::error::{invalid, Result};

pub type Vertex = usize;

/// A 2-colouring of the vertex set given as the two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    parts: Option<Bipartition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub matching_number: usize,
    pub degeneracy: usize,
}

impl Graph {
    /// Builds a graph on vertices `0..n`. Edges are unordered; self-loops,
    /// duplicates and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge ({u},{v}) out of range for {n} vertices"));
            }
            if u == v {
                return invalid(format!("self-loop at vertex {u}"));
            }
            list.push((u.min(v), u.max(v)));
            adj[u].push(v);
            adj[v].push(u);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return invalid(format!("duplicate edge ({},{})", w[0].0, w[0].1));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            parts: None,
        })
    }

    /// Attaches a bipartition whose left side is `left`; every other vertex
    /// goes right. Fails if some edge lies within a side.
    pub fn with_bipartition(mut self, left: &[Vertex]) -> Result<Self> {
        let mut side = vec![false; self.n];
        for &v in left {
            if v >= self.n {
                return invalid(format!("bipartition vertex {v} out of range"));
            }
            if side[v] {
                return invalid(format!("bipartition vertex {v} listed twice"));
            }
            side[v] = true;
        }
        if let Some(&(u, v)) = self.edges.iter().find(|&&(u, v)| side[u] == side[v]) {
            return invalid(format!("edge ({u},{v}) lies inside one side of the bipartition"));
        }
        let (l, r): (Vec<Vertex>, Vec<Vertex>) = (0..self.n).partition(|&v| side[v]);
        self.parts = Some(Bipartition { left: l, right: r });
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// The stored bipartition, if the graph was built with one.
    pub fn stored_bipartition(&self) -> Option<&Bipartition> {
        self.parts.as_ref()
    }

    /// The stored bipartition, or one found by 2-colouring each component
    /// (lowest vertex of each component on the left). `None` if the graph
    /// has an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        if let Some(p) = &self.parts {
            return Some(p.clone());
        }
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(true);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        let (l, r): (Vec<Vertex>, Vec<Vertex>) = (0..self.n).partition(|&v| side[v] == Some(true));
        Some(Bipartition { left: l, right: r })
    }

    pub fn stats(&self) -> Result<GraphStats> {
        Ok(GraphStats {
            n: self.n,
            m: self.m(),
            matching_number: matching_number(self)?,
            degeneracy: degeneracy(self),
        })
    }
}

const EXHAUSTIVE_MATCHING_LIMIT: usize = 20;

/// Size of a maximum matching. Bipartite graphs use augmenting paths over
/// the (stored or computed) bipartition; other graphs fall back to
/// exhaustive search, which is refused above 20 vertices.
pub fn matching_number(g: &Graph) -> Result<usize> {
    match g.bipartition() {
        Some(parts) => Ok(bipartite_matching(g, &parts)),
        None if g.n <= EXHAUSTIVE_MATCHING_LIMIT => Ok(exhaustive_matching(g)),
        None => invalid(format!(
            "non-bipartite graph on {} vertices is too large for exhaustive matching",
            g.n
        )),
    }
}

fn bipartite_matching(g: &Graph, parts: &Bipartition) -> usize {
    let mut mate: Vec<Option<Vertex>> = vec![None; g.n];
    let mut size = 0;
    for &u in &parts.left {
        let mut seen = vec![false; g.n];
        if augment(g, u, &mut mate, &mut seen) {
            size += 1;
        }
    }
    size
}

// Kuhn's augmenting path step from a left vertex.
fn augment(g: &Graph, u: Vertex, mate: &mut [Option<Vertex>], seen: &mut [bool]) -> bool {
    for &w in g.neighbours(u) {
        if seen[w] {
            continue;
        }
        seen[w] = true;
        let free = match mate[w] {
            None => true,
            Some(x) => augment(g, x, mate, seen),
        };
        if free {
            mate[w] = Some(u);
            mate[u] = Some(w);
            return true;
        }
    }
    false
}

fn exhaustive_matching(g: &Graph) -> usize {
    fn go(g: &Graph, start: usize, used: &mut [bool]) -> usize {
        let mut best = 0;
        for (i, &(u, v)) in g.edges.iter().enumerate().skip(start) {
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                best = best.max(1 + go(g, i + 1, used));
                used[u] = false;
                used[v] = false;
            }
        }
        best
    }
    go(g, 0, &mut vec![false; g.n])
}

/// Largest degree seen when repeatedly deleting a minimum-degree vertex.
pub fn degeneracy(g: &Graph) -> usize {
    let mut deg: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; g.n];
    let mut best = 0;
    for _ in 0..g.n {
        let v = (0..g.n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        best = best.max(deg[v]);
        removed[v] = true;
        for &w in g.neighbours(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}
