use serde::Serialize;

use super::KpqInstance;
use crate::colouring::{Colour, Colouring};

/// Block structure of an extremal pair. Blocks are indexed by
/// `(i, j)` with `i in 1..=a`, `j in a+1..=k`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalPairSpec {
    pub a: Colour,
    pub b: Colour,
    pub blocks: Vec<(Colour, Colour)>,
    pub u_sizes: Vec<usize>,
    pub v_sizes: Vec<usize>,
}

/// Split `total` into `parts` near-equal sizes, larger ones first.
fn spread(total: usize, parts: usize) -> Vec<usize> {
    let (base, extra) = (total / parts, total % parts);
    (0..parts).map(|i| base + usize::from(i < extra)).collect()
}

/// Two colourings that swap colours between the parts block by block:
/// `alpha(U_ij) = i = beta(V_ij)` and `beta(U_ij) = j = alpha(V_ij)`.
///
/// `(a, b) = (1, k-1)` when `q >= kp`, otherwise `(floor(k/2), ceil(k/2))`.
pub fn extremal_pair(inst: &KpqInstance) -> (Colouring, Colouring, ExtremalPairSpec) {
    let k = inst.k;
    let (a, b) = if inst.q >= k as usize * inst.p {
        (1, k - 1)
    } else {
        (k / 2, k - k / 2)
    };
    let blocks: Vec<(Colour, Colour)> = (1..=a).flat_map(|i| (a + 1..=k).map(move |j| (i, j))).collect();
    // Each colour gets a near-equal share of its part, which is then split
    // near-equally over the blocks carrying that colour.
    let u_share: Vec<Vec<usize>> = spread(inst.p, a as usize)
        .into_iter()
        .map(|n| spread(n, b as usize))
        .collect();
    let v_share: Vec<Vec<usize>> = spread(inst.q, b as usize)
        .into_iter()
        .map(|n| spread(n, a as usize))
        .collect();
    let index = |&(i, j): &(Colour, Colour)| ((i - 1) as usize, (j - a - 1) as usize);
    let u_sizes: Vec<usize> = blocks.iter().map(index).map(|(i, j)| u_share[i][j]).collect();
    let v_sizes: Vec<usize> = blocks.iter().map(index).map(|(i, j)| v_share[j][i]).collect();

    let mut alpha = Vec::with_capacity(inst.n());
    let mut beta = Vec::with_capacity(inst.n());
    for (&(i, j), &size) in blocks.iter().zip(&u_sizes) {
        alpha.extend(std::iter::repeat_n(i, size));
        beta.extend(std::iter::repeat_n(j, size));
    }
    for (&(i, j), &size) in blocks.iter().zip(&v_sizes) {
        alpha.extend(std::iter::repeat_n(j, size));
        beta.extend(std::iter::repeat_n(i, size));
    }
    let spec = ExtremalPairSpec {
        a,
        b,
        blocks,
        u_sizes,
        v_sizes,
    };
    (Colouring::new(alpha), Colouring::new(beta), spec)
}
