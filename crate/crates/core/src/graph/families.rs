//! Constructors for the graph and list-assignment families used in the
//! reproduction checks.

use super::{Graph, Vertex};
use crate::colouring::{Colour, Colouring, ListAssignment};
use crate::error::{invalid, Result};

/// `K_{p,q}` with `U = 0..p` and `V = p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return invalid("complete_bipartite needs two non-empty parts");
    }
    let edges = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v)));
    let left: Vec<Vertex> = (0..p).collect();
    Graph::new(p + q, edges)?.with_bipartition(&left)
}

/// `K_{m,m}` minus the perfect matching `{i, m+i}`.
pub fn complete_bipartite_minus_matching(m: usize) -> Result<Graph> {
    if m < 2 {
        return invalid("K_{m,m} minus a matching needs m >= 2");
    }
    let edges = (0..m).flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, m + j)));
    let left: Vec<Vertex> = (0..m).collect();
    Graph::new(2 * m, edges)?.with_bipartition(&left)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return invalid("path needs at least one vertex");
    }
    let left: Vec<Vertex> = (0..n).step_by(2).collect();
    Graph::new(n, (1..n).map(|i| (i - 1, i)))?.with_bipartition(&left)
}

/// The 10-vertex layered graph: a root `r` (0) adjacent to `a1..a3` (1..=3),
/// `a_i ~ b_j` (`b` = 4..=6) and `b_i ~ c_j` (`c` = 7..=9) whenever `i != j`.
pub fn layered_example() -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                edges.push((1 + i, 4 + j));
                edges.push((4 + i, 7 + j));
            }
        }
    }
    Graph::new(10, edges)
        .and_then(|g| g.with_bipartition(&[0, 4, 5, 6]))
        .expect("layered example is a valid bipartite graph")
}

#[derive(Debug, Clone)]
pub struct ForcingGadget {
    pub graph: Graph,
    pub lists: ListAssignment,
    /// The small side, `v_1..v_t`.
    pub special: Vec<Vertex>,
}

const GADGET_MAX_LARGE_SIDE: usize = 1 << 20;

/// `K_{t, s^t - 1}` with pairwise disjoint lists of size `s` on the small
/// side and every transversal of those lists except the all-first one on the
/// large side. Every proper list colouring puts the first colour of each
/// small-side list on the small side.
pub fn forcing_gadget(t: usize, s: usize) -> Result<ForcingGadget> {
    if t < 2 || s < 2 {
        return invalid("forcing gadget needs t >= 2 and s >= 2");
    }
    let total = (s as u128).checked_pow(t as u32).unwrap_or(u128::MAX);
    if total > GADGET_MAX_LARGE_SIDE as u128 {
        return invalid(format!("forcing gadget ({t},{s}) is too large"));
    }
    let total = total as usize;
    let small_lists: Vec<Vec<Colour>> = (0..t)
        .map(|i| ((i * s + 1)..=(i * s + s)).map(|c| c as Colour).collect())
        .collect();

    let mut lists = small_lists.clone();
    // Transversals in lexicographic order of the choice vector; index 0 is
    // the all-first transversal and is skipped.
    for idx in 1..total {
        let mut rest = idx;
        let mut choice = vec![0usize; t];
        for slot in choice.iter_mut().rev() {
            *slot = rest % s;
            rest /= s;
        }
        lists.push(choice.iter().enumerate().map(|(i, &x)| small_lists[i][x]).collect());
    }
    let n = t + total - 1;
    let edges = (0..t).flat_map(|u| (t..n).map(move |w| (u, w)));
    let special: Vec<Vertex> = (0..t).collect();
    let graph = Graph::new(n, edges)?.with_bipartition(&special)?;
    Ok(ForcingGadget {
        graph,
        lists: ListAssignment::new(lists)?,
        special,
    })
}

/// Colours of the path vertices in [`path_plus_chain`] besides colour 1.
pub const CHAIN_PATH_EXTRA: [Colour; 3] = [17, 18, 19];

/// A path `p_1..p_k` (vertices `0..k`) with a copy of the (4,4) forcing
/// gadget hung off each path vertex via its first special vertex. Path
/// vertices get the list `{1, 17, 18, 19}`.
pub fn path_plus_chain(k: usize) -> Result<(Graph, ListAssignment)> {
    if k == 0 {
        return invalid("path_plus_chain needs k >= 1");
    }
    let gadget = forcing_gadget(4, 4)?;
    let size = gadget.graph.n();
    let n = k + k * size;
    let mut edges: Vec<(Vertex, Vertex)> = (1..k).map(|i| (i - 1, i)).collect();
    let mut lists: Vec<Vec<Colour>> = vec![std::iter::once(1).chain(CHAIN_PATH_EXTRA).collect::<Vec<Colour>>(); k];
    for copy in 0..k {
        let offset = k + copy * size;
        edges.extend(gadget.graph.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
        edges.push((copy, offset + gadget.special[0]));
        lists.extend(gadget.lists.lists().iter().cloned());
    }
    let graph = Graph::new(n, edges)?;
    let graph = match graph.bipartition() {
        Some(parts) => graph.with_bipartition(&parts.left)?,
        None => graph,
    };
    Ok((graph, ListAssignment::new(lists)?))
}

/// A graph with a list assignment and two distinguished list colourings.
#[derive(Debug, Clone)]
pub struct ListInstance {
    pub graph: Graph,
    pub lists: ListAssignment,
    pub alpha: Colouring,
    pub beta: Colouring,
}

/// `K_{18,18}` with one `U`/`V` vertex pair per triple `(i, j, l)`,
/// `i in {1,3,5}`, `j in {2,4}`, `l in [5] \ {i,j}`. Both get the list
/// `[5] \ {l}`; `alpha(u) = i = beta(v)` and `beta(u) = j = alpha(v)`.
pub fn k18_list_instance() -> ListInstance {
    let mut triples = Vec::new();
    for i in [1, 3, 5] {
        for j in [2, 4] {
            for l in 1..=5 {
                if l != i && l != j {
                    triples.push((i, j, l));
                }
            }
        }
    }
    let m = triples.len();
    let mut lists = vec![Vec::new(); 2 * m];
    let mut alpha = vec![0; 2 * m];
    let mut beta = vec![0; 2 * m];
    for (t, &(i, j, l)) in triples.iter().enumerate() {
        let list: Vec<Colour> = (1..=5).filter(|&c| c != l).collect();
        lists[t] = list.clone();
        lists[m + t] = list;
        alpha[t] = i;
        beta[t] = j;
        alpha[m + t] = j;
        beta[m + t] = i;
    }
    ListInstance {
        graph: complete_bipartite(m, m).expect("18 > 0"),
        lists: ListAssignment::new(lists).expect("lists are non-empty"),
        alpha: Colouring::new(alpha),
        beta: Colouring::new(beta),
    }
}

/// `K_{m,m}` minus a perfect matching with `L(v_i) = L(w_i) = [m] \ {i}`
/// and the frozen colouring `phi(v_i) = phi(w_i) = (i mod m) + 1`.
pub fn frozen_list_instance(m: usize) -> Result<(Graph, ListAssignment, Colouring)> {
    if m < 4 {
        return invalid("frozen list instance needs m >= 4");
    }
    let graph = complete_bipartite_minus_matching(m)?;
    let side: Vec<Vec<Colour>> = (1..=m as Colour)
        .map(|i| (1..=m as Colour).filter(|&c| c != i).collect())
        .collect();
    let lists = ListAssignment::new(side.iter().chain(side.iter()).cloned().collect())?;
    let phi: Vec<Colour> = (1..=m as Colour).map(|i| (i % m as Colour) + 1).collect();
    let phi = Colouring::new(phi.iter().chain(phi.iter()).copied().collect());
    Ok((graph, lists, phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degeneracy, matching_number};

    #[test]
    fn complete_bipartite_shapes() {
        let star = complete_bipartite(1, 2).unwrap();
        assert_eq!((star.n(), star.m()), (3, 2));
        let parts = star.stored_bipartition().unwrap();
        assert_eq!((parts.left.clone(), parts.right.clone()), (vec![0], vec![1, 2]));
        assert_eq!(complete_bipartite(2, 3).unwrap().m(), 6);
        let big = complete_bipartite(18, 18).unwrap();
        assert_eq!((big.n(), big.m()), (36, 324));
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn minus_matching_shapes() {
        let g = complete_bipartite_minus_matching(2).unwrap();
        assert_eq!((g.n(), g.m()), (4, 2));
        let g = complete_bipartite_minus_matching(5).unwrap();
        assert_eq!((g.n(), g.m()), (10, 20));
        let g = complete_bipartite_minus_matching(3).unwrap();
        assert!((0..6).all(|v| g.degree(v) == 2));
        assert!(!g.has_edge(1, 4));
        assert!(complete_bipartite_minus_matching(1).is_err());
    }

    #[test]
    fn paths() {
        assert_eq!(path(1).unwrap().m(), 0);
        assert_eq!(path(2).unwrap().m(), 1);
        let p5 = path(5).unwrap();
        assert_eq!(p5.m(), 4);
        assert_eq!(matching_number(&p5).unwrap(), 2);
        assert!(path(0).is_err());
    }

    #[test]
    fn layered_example_stats() {
        let g = layered_example();
        let stats = g.stats().unwrap();
        assert_eq!(stats.n, 10);
        assert_eq!(stats.m, 15);
        assert_eq!(stats.matching_number, 4);
        assert_eq!(degeneracy(&g), 2);
        let parts = g.stored_bipartition().unwrap();
        assert_eq!((parts.left.len(), parts.right.len()), (4, 6));
    }

    #[test]
    fn small_gadget_lists() {
        let gad = forcing_gadget(2, 2).unwrap();
        assert_eq!(gad.graph.n(), 5);
        assert_eq!(gad.graph.m(), 6);
        let l = gad.lists.lists();
        assert_eq!(l[0], vec![1, 2]);
        assert_eq!(l[1], vec![3, 4]);
        assert_eq!(&l[2..], &[vec![1, 4], vec![2, 3], vec![2, 4]]);
        assert!(forcing_gadget(1, 4).is_err());
        assert!(forcing_gadget(4, 1).is_err());
    }

    #[test]
    fn gadget_4_4_is_k4_255() {
        let gad = forcing_gadget(4, 4).unwrap();
        assert_eq!(gad.graph.n(), 259);
        let mut large: Vec<_> = gad.lists.lists()[4..].to_vec();
        assert_eq!(large.len(), 255);
        large.sort();
        large.dedup();
        assert_eq!(large.len(), 255);
        assert!(!large.contains(&vec![1, 5, 9, 13]));
    }

    #[test]
    fn chain_sizes() {
        let (g, l) = path_plus_chain(1).unwrap();
        assert_eq!(g.n(), 260);
        let (g, l3) = path_plus_chain(3).unwrap();
        assert_eq!(g.n(), 780);
        assert!((0..3).all(|v| l3.list(v) == [1, 17, 18, 19]));
        let (g2, _) = path_plus_chain(2).unwrap();
        let cross = g2.edges().iter().filter(|&&(u, v)| (u < 2) != (v < 2)).count();
        assert_eq!(cross, 2);
        drop((g, l));
    }

    #[test]
    fn k18_instance_shape() {
        let inst = k18_list_instance();
        assert_eq!(inst.graph.n(), 36);
        let mut distinct: Vec<_> = inst.lists.lists().to_vec();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 5);
        for c in [1, 3, 5] {
            assert_eq!(inst.alpha.as_slice()[..18].iter().filter(|&&x| x == c).count(), 6);
        }
        assert!(inst.alpha.as_slice()[..18].iter().all(|c| [1, 3, 5].contains(c)));
    }

    #[test]
    fn frozen_instance_colouring() {
        let (_, lists, phi) = frozen_list_instance(4).unwrap();
        assert_eq!(phi.as_slice(), &[2, 3, 4, 1, 2, 3, 4, 1]);
        assert!(lists.lists().iter().all(|l| l.len() == 3));
        assert!(frozen_list_instance(3).is_err());
    }
}
