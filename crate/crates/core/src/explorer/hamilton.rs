//! Hamiltonian cycle search on a materialised reconfiguration graph.

use super::explicit::{NodeId, ReconfigurationGraph};
use crate::colouring::{Colouring, Palette};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonOutcome {
    Found(Vec<Colouring>),
    None,
    BudgetExhausted,
}

/// Backtracking from node 0 with degree pruning: an unvisited node needs
/// two usable edges (to unvisited nodes, the path end, or the start), and a
/// node down to exactly two must be entered from the current end if it is
/// adjacent to it. `budget` counts search-tree nodes; `state_budget` caps the
/// size of the materialised graph.
pub fn hamiltonian_cycle(g: &Graph, palette: &Palette, budget: u64, state_budget: u64) -> Result<HamiltonOutcome> {
    let rg = ReconfigurationGraph::build(g, palette, state_budget)?;
    Ok(hamiltonian_cycle_of(&rg, budget))
}

pub fn hamiltonian_cycle_of(rg: &ReconfigurationGraph, budget: u64) -> HamiltonOutcome {
    let n = rg.node_count();
    if n < 3 || (0..n as NodeId).any(|v| rg.neighbours(v).len() < 2) {
        return HamiltonOutcome::None;
    }
    if rg.component_labels().1 != 1 {
        return HamiltonOutcome::None;
    }
    let mut search = Search {
        rg,
        visited: vec![false; n],
        unvisited_deg: (0..n as NodeId).map(|v| rg.neighbours(v).len()).collect(),
        path: Vec::with_capacity(n),
        is_start_nb: vec![false; n],
        budget,
        spent: 0,
    };
    for &w in rg.neighbours(0) {
        search.is_start_nb[w as usize] = true;
    }
    search.visit(0);
    match search.extend() {
        Some(true) => HamiltonOutcome::Found(search.path.iter().map(|&v| rg.colouring(v)).collect()),
        Some(false) => HamiltonOutcome::None,
        None => HamiltonOutcome::BudgetExhausted,
    }
}

struct Search<'a, 'g> {
    rg: &'a ReconfigurationGraph<'g>,
    visited: Vec<bool>,
    unvisited_deg: Vec<usize>,
    path: Vec<NodeId>,
    is_start_nb: Vec<bool>,
    budget: u64,
    spent: u64,
}

impl Search<'_, '_> {
    fn visit(&mut self, v: NodeId) {
        self.visited[v as usize] = true;
        self.path.push(v);
        for &w in self.rg.neighbours(v) {
            self.unvisited_deg[w as usize] -= 1;
        }
    }

    fn unvisit(&mut self) {
        let v = self.path.pop().unwrap();
        self.visited[v as usize] = false;
        for &w in self.rg.neighbours(v) {
            self.unvisited_deg[w as usize] += 1;
        }
    }

    // Usable edges of unvisited `w` while the path ends at `end`.
    fn usable(&self, w: NodeId, end: NodeId) -> usize {
        let adj_end = self.rg.neighbours(w).binary_search(&end).is_ok();
        let adj_start = end != 0 && self.is_start_nb[w as usize];
        self.unvisited_deg[w as usize] + adj_end as usize + adj_start as usize
    }

    /// `Some(true)` on success, `Some(false)` when exhausted, `None` when
    /// out of budget.
    fn extend(&mut self) -> Option<bool> {
        self.spent += 1;
        if self.spent > self.budget {
            return None;
        }
        let end = *self.path.last().unwrap();
        if self.path.len() == self.visited.len() {
            return Some(self.is_start_nb[end as usize]);
        }
        let mut cands: Vec<(usize, NodeId)> = Vec::new();
        let mut forced: Option<NodeId> = None;
        for &w in self.rg.neighbours(end) {
            if self.visited[w as usize] {
                continue;
            }
            let u = self.usable(w, end);
            // From the start both of its edges are still free, so nothing is forced.
            if u == 2 && self.path.len() > 1 && self.path.len() + 1 < self.visited.len() {
                if forced.is_some() {
                    return Some(false);
                }
                forced = Some(w);
            }
            cands.push((u, w));
        }
        if let Some(f) = forced {
            cands.retain(|&(_, w)| w == f);
        }
        cands.sort_unstable();
        for (_, w) in cands {
            self.visit(w);
            let dead =
                self.rg.neighbours(end).iter().any(|&x| {
                    !self.visited[x as usize] && self.usable(x, w) < 2 && self.path.len() < self.visited.len()
                });
            if !dead {
                match self.extend() {
                    Some(false) => {}
                    other => return other,
                }
            }
            self.unvisit();
        }
        Some(false)
    }
}
