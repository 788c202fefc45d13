//! Exhaustive exploration of reconfiguration graphs `C_k(G)` and `C_L(G)`.
//!
//! Nodes are the proper palette-respecting colourings; two are adjacent when
//! they differ at exactly one vertex. Every query here is exact: when the
//! state budget runs out the caller gets a budget error or outcome, never an
//! approximation.

mod distance;
mod explicit;
mod hamilton;
mod sequence;
mod space;

pub use distance::{distance, Distance};
pub use explicit::{
    components, components_of, metrics, metrics_of, Components, Extent, MetricsReport, NodeId, ReconfigurationGraph,
};
pub use hamilton::{hamiltonian_cycle, hamiltonian_cycle_of, HamiltonOutcome};
pub use sequence::{verify_sequence, RecolouringSequence, Step, VerifyReport};
pub use space::{enumerate_colourings, Colourings, State, StateSpace};

use crate::colouring::{Colouring, Palette};
use crate::error::Result;
use crate::graph::Graph;

/// Default cap on visited states for distance and metrics queries.
pub const DEFAULT_STATE_BUDGET: u64 = 100_000_000;
/// Default cap on search-tree nodes for the Hamiltonian cycle search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000_000;

/// All colourings one recolouring away from `c`.
pub fn neighbours(g: &Graph, palette: &Palette, c: &Colouring) -> Result<Vec<Colouring>> {
    let space = StateSpace::new(g, palette)?;
    let s = space.require(c)?;
    let (mut buf, mut out) = (Vec::new(), Vec::new());
    space.neighbours_into(s, &mut buf, &mut out);
    out.sort_unstable();
    Ok(out.into_iter().map(|t| space.decode(t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, frozen_list_instance, path};

    #[test]
    fn frozen_colouring_has_no_neighbours() {
        let (g, lists, phi) = frozen_list_instance(5).unwrap();
        assert!(neighbours(&g, &Palette::Lists(lists), &phi).unwrap().is_empty());
    }

    #[test]
    fn path2_neighbours() {
        let g = path(2).unwrap();
        let got = neighbours(&g, &Palette::Uniform(3), &Colouring::new(vec![1, 2])).unwrap();
        let got: Vec<Vec<u32>> = got.into_iter().map(Colouring::into_vec).collect();
        assert_eq!(got, vec![vec![1, 3], vec![3, 2]]);
    }

    #[test]
    fn star_two_colouring_is_isolated() {
        let g = complete_bipartite(1, 2).unwrap();
        assert!(neighbours(&g, &Palette::Uniform(2), &Colouring::new(vec![1, 2, 2]))
            .unwrap()
            .is_empty());
        assert!(neighbours(&g, &Palette::Uniform(2), &Colouring::new(vec![1, 1, 2])).is_err());
    }
}
