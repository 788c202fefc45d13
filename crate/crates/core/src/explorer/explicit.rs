//! The reconfiguration graph materialised in compressed sparse row form,
//! and the whole-graph queries built on it.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::space::{State, StateSpace};
use crate::colouring::{Colour, Colouring, Palette};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

pub type NodeId = u32;

const UNREACHED: u32 = u32::MAX;

/// Every node of `C_P(G)` with its adjacency. Node ids follow the
/// lexicographic order of the colourings.
pub struct ReconfigurationGraph<'g> {
    space: StateSpace<'g>,
    states: Vec<State>,
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
}

impl<'g> ReconfigurationGraph<'g> {
    /// Fails with [`Error::BudgetExhausted`] when there are more than
    /// `budget` nodes.
    pub fn build(g: &'g Graph, palette: &Palette, budget: u64) -> Result<Self> {
        let space = StateSpace::new(g, palette)?;
        let mut states = Vec::new();
        let complete = space.for_each_state(|s| {
            states.push(s);
            (states.len() as u64) <= budget
        });
        if !complete || states.len() as u64 > budget.min(UNREACHED as u64 - 1) {
            return Err(Error::BudgetExhausted { limit: budget });
        }
        let adjacency: Vec<Vec<NodeId>> = states
            .par_iter()
            .map_init(
                || (Vec::new(), Vec::new()),
                |(buf, out), &s| {
                    out.clear();
                    space.neighbours_into(s, buf, out);
                    let mut ids: Vec<NodeId> = out
                        .iter()
                        .map(|t| states.binary_search(t).expect("neighbour is a node") as NodeId)
                        .collect();
                    ids.sort_unstable();
                    ids
                },
            )
            .collect();
        let mut offsets = Vec::with_capacity(states.len() + 1);
        offsets.push(0);
        for a in &adjacency {
            offsets.push(offsets.last().unwrap() + a.len());
        }
        let targets = adjacency.into_iter().flatten().collect();
        Ok(ReconfigurationGraph {
            space,
            states,
            offsets,
            targets,
        })
    }

    pub fn node_count(&self) -> usize {
        self.states.len()
    }

    pub fn neighbours(&self, id: NodeId) -> &[NodeId] {
        let i = id as usize;
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn colouring(&self, id: NodeId) -> Colouring {
        self.space.decode(self.states[id as usize])
    }

    pub fn id_of(&self, c: &Colouring) -> Option<NodeId> {
        if !self.space.contains(c) {
            return None;
        }
        self.states
            .binary_search(&self.space.encode(c))
            .ok()
            .map(|i| i as NodeId)
    }

    /// BFS distances from `src` (`u32::MAX` for unreachable nodes).
    pub fn distances_from(&self, src: NodeId) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.node_count()];
        let mut queue = Vec::new();
        self.bfs(src, &mut dist, &mut queue);
        dist
    }

    // Returns (eccentricity within the component, smallest farthest id,
    // number of reached nodes).
    fn bfs(&self, src: NodeId, dist: &mut [u32], queue: &mut Vec<NodeId>) -> (u32, NodeId, usize) {
        dist.fill(UNREACHED);
        queue.clear();
        dist[src as usize] = 0;
        queue.push(src);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = dist[u as usize];
            for &w in self.neighbours(u) {
                if dist[w as usize] == UNREACHED {
                    dist[w as usize] = du + 1;
                    queue.push(w);
                }
            }
        }
        let ecc = dist[*queue.last().unwrap() as usize];
        let far = queue
            .iter()
            .copied()
            .filter(|&x| dist[x as usize] == ecc)
            .min()
            .unwrap();
        (ecc, far, queue.len())
    }

    /// Component label of every node, labels numbered by first node.
    pub fn component_labels(&self) -> (Vec<u32>, usize) {
        let mut label = vec![UNREACHED; self.node_count()];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.node_count() {
            if label[s] != UNREACHED {
                continue;
            }
            label[s] = count as u32;
            stack.push(s as NodeId);
            while let Some(u) = stack.pop() {
                for &w in self.neighbours(u) {
                    if label[w as usize] == UNREACHED {
                        label[w as usize] = count as u32;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    fn is_canonical(&self, id: NodeId, buf: &mut Vec<Colour>) -> bool {
        self.space.decode_into(self.states[id as usize], buf);
        let mut next = 1;
        for &c in buf.iter() {
            if c > next {
                return false;
            }
            if c == next {
                next += 1;
            }
        }
        true
    }
}

/// Diameter or radius: a hop count, or infinite on a disconnected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Extent {
    Finite(u64),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<u64> {
        match self {
            Extent::Finite(x) => Some(x),
            Extent::Infinite => None,
        }
    }
}

impl std::fmt::Display for Extent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Extent::Finite(x) => write!(f, "{x}"),
            Extent::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extent::Finite(x) => s.serialize_u64(*x),
            Extent::Infinite => s.serialize_none(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Components {
    #[serde(rename = "components")]
    pub count: usize,
    pub sizes: Vec<usize>,
    /// Lexicographically first colouring of each component.
    #[serde(serialize_with = "ser_colourings")]
    pub representatives: Vec<Colouring>,
}

fn ser_colourings<S: Serializer>(v: &[Colouring], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(Colouring::as_slice))
}

pub fn components(g: &Graph, palette: &Palette, budget: u64) -> Result<Components> {
    let rg = ReconfigurationGraph::build(g, palette, budget)?;
    Ok(components_of(&rg))
}

pub fn components_of(rg: &ReconfigurationGraph) -> Components {
    let (labels, count) = rg.component_labels();
    let mut sizes = vec![0; count];
    let mut representatives: Vec<Option<Colouring>> = vec![None; count];
    for (id, &l) in labels.iter().enumerate() {
        sizes[l as usize] += 1;
        if representatives[l as usize].is_none() {
            representatives[l as usize] = Some(rg.colouring(id as NodeId));
        }
    }
    Components {
        count,
        sizes,
        representatives: representatives.into_iter().map(Option::unwrap).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsReport {
    #[serde(rename = "nodes")]
    pub node_count: usize,
    pub connected: bool,
    #[serde(rename = "components")]
    pub component_count: usize,
    pub diameter: Extent,
    pub radius: Extent,
    #[serde(skip)]
    pub witness_pair: Option<(Colouring, Colouring)>,
}

/// Exact diameter and radius by one BFS per source.
///
/// With `use_colour_symmetry` (uniform palettes only) the sources are the
/// colourings whose colours first appear in the order `1, 2, 3, ...` along
/// the vertices: one per orbit of the colour permutation group, which acts
/// by automorphisms, so eccentricities are unchanged.
pub fn metrics(g: &Graph, palette: &Palette, use_colour_symmetry: bool, budget: u64) -> Result<MetricsReport> {
    if use_colour_symmetry && !matches!(palette, Palette::Uniform(_)) {
        return invalid("colour symmetry needs a uniform palette");
    }
    let rg = ReconfigurationGraph::build(g, palette, budget)?;
    Ok(metrics_of(&rg, use_colour_symmetry))
}

pub fn metrics_of(rg: &ReconfigurationGraph, use_colour_symmetry: bool) -> MetricsReport {
    let (_, count) = rg.component_labels();
    let node_count = rg.node_count();
    if count != 1 {
        return MetricsReport {
            node_count,
            connected: false,
            component_count: count,
            diameter: Extent::Infinite,
            radius: Extent::Infinite,
            witness_pair: None,
        };
    }
    let sources: Vec<NodeId> = if use_colour_symmetry {
        let mut buf = Vec::new();
        (0..node_count as NodeId)
            .filter(|&id| rg.is_canonical(id, &mut buf))
            .collect()
    } else {
        (0..node_count as NodeId).collect()
    };
    let ecc: Vec<(u32, NodeId)> = sources
        .par_iter()
        .map_init(
            || (vec![UNREACHED; node_count], Vec::with_capacity(node_count)),
            |(dist, queue), &s| {
                let (e, far, _) = rg.bfs(s, dist, queue);
                (e, far)
            },
        )
        .collect();
    let (best, &(diam, far)) = ecc
        .iter()
        .enumerate()
        .max_by_key(|&(i, &(e, _))| (e, std::cmp::Reverse(i)))
        .unwrap();
    let rad = ecc.iter().map(|&(e, _)| e).min().unwrap();
    MetricsReport {
        node_count,
        connected: true,
        component_count: 1,
        diameter: Extent::Finite(diam as u64),
        radius: Extent::Finite(rad as u64),
        witness_pair: Some((rg.colouring(sources[best]), rg.colouring(far))),
    }
}
