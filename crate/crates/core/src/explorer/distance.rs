//! Point-to-point distance by bidirectional BFS over the implicit graph.

use std::collections::HashMap;

use super::sequence::{RecolouringSequence, Step};
use super::space::{State, StateSpace};
use crate::colouring::{Colouring, Palette};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distance {
    /// Shortest length together with one shortest sequence.
    Reachable(usize, RecolouringSequence),
    Unreachable,
    BudgetExhausted,
}

impl Distance {
    pub fn length(&self) -> Option<usize> {
        match self {
            Distance::Reachable(d, _) => Some(*d),
            _ => None,
        }
    }
}

struct Side {
    // state -> parent (the state itself for the root)
    parent: HashMap<State, State>,
    frontier: Vec<State>,
    depth: usize,
}

impl Side {
    fn new(root: State) -> Self {
        Side {
            parent: HashMap::from([(root, root)]),
            frontier: vec![root],
            depth: 0,
        }
    }

    fn depth_of(&self, s: State) -> usize {
        let mut d = 0;
        let mut cur = s;
        while self.parent[&cur] != cur {
            cur = self.parent[&cur];
            d += 1;
        }
        d
    }

    /// `s` back to the root, inclusive.
    fn chain(&self, s: State) -> Vec<State> {
        let mut out = vec![s];
        let mut cur = s;
        while self.parent[&cur] != cur {
            cur = self.parent[&cur];
            out.push(cur);
        }
        out
    }
}

/// Exact distance between `a` and `b` in `C_P(G)`. `budget` caps the total
/// number of visited states.
pub fn distance(g: &Graph, palette: &Palette, a: &Colouring, b: &Colouring, budget: u64) -> Result<Distance> {
    let space = StateSpace::new(g, palette)?;
    let sa = space.require(a)?;
    let sb = space.require(b)?;
    if sa == sb {
        return Ok(Distance::Reachable(0, RecolouringSequence::empty(a.clone())));
    }
    let mut fwd = Side::new(sa);
    let mut bwd = Side::new(sb);
    let (mut buf, mut out) = (Vec::new(), Vec::new());
    loop {
        if fwd.frontier.is_empty() || bwd.frontier.is_empty() {
            return Ok(Distance::Unreachable);
        }
        let forward = fwd.frontier.len() <= bwd.frontier.len();
        let (grow, other) = if forward { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        let mut next = Vec::new();
        let mut best: Option<(usize, State)> = None;
        for &s in &grow.frontier {
            out.clear();
            space.neighbours_into(s, &mut buf, &mut out);
            for &t in &out {
                if grow.parent.contains_key(&t) {
                    continue;
                }
                grow.parent.insert(t, s);
                next.push(t);
                if other.parent.contains_key(&t) {
                    let total = grow.depth + 1 + other.depth_of(t);
                    if best.is_none_or(|(d, m)| (total, t) < (d, m)) {
                        best = Some((total, t));
                    }
                }
            }
        }
        grow.frontier = next;
        grow.depth += 1;
        if let Some((d, meet)) = best {
            let mut path = fwd.chain(meet);
            path.reverse();
            path.extend(bwd.chain(meet).into_iter().skip(1));
            let steps = path
                .windows(2)
                .map(|w| {
                    let (vertex, colour) = space.step_between(w[0], w[1]);
                    Step { vertex, colour }
                })
                .collect::<Vec<_>>();
            debug_assert_eq!(steps.len(), d);
            return Ok(Distance::Reachable(
                d,
                RecolouringSequence {
                    start: a.clone(),
                    steps,
                },
            ));
        }
        if (fwd.parent.len() + bwd.parent.len()) as u64 > budget {
            return Ok(Distance::BudgetExhausted);
        }
    }
}
