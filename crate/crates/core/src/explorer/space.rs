//! Packed colouring states and the implicit reconfiguration graph.

use crate::colouring::{is_proper, Colour, Colouring, Palette};
use crate::error::{invalid, Result};
use crate::graph::{Graph, Vertex};

/// A colouring packed into a fixed number of bits per vertex, vertex 0 in
/// the most significant field, so numeric order equals lexicographic order
/// of the assignment vector.
pub type State = u128;

/// Implicit view of `C_P(G)`: per-vertex admissible colours plus the packing
/// used for hashing states.
#[derive(Debug, Clone)]
pub struct StateSpace<'g> {
    pub(crate) graph: &'g Graph,
    pub(crate) domains: Vec<Vec<Colour>>,
    bits: u32,
    mask: State,
}

impl<'g> StateSpace<'g> {
    pub fn new(graph: &'g Graph, palette: &Palette) -> Result<Self> {
        palette.check_size(graph.n())?;
        let max = palette.max_colour();
        let bits = (32 - max.leading_zeros()).max(1);
        if bits as usize * graph.n() > State::BITS as usize {
            return invalid(format!(
                "{} vertices with colours up to {} do not fit a {}-bit state",
                graph.n(),
                max,
                State::BITS
            ));
        }
        let domains = (0..graph.n()).map(|v| palette.admissible(v)).collect();
        Ok(StateSpace {
            graph,
            domains,
            bits,
            mask: (1 << bits) - 1,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    fn shift(&self, v: Vertex) -> u32 {
        (self.n() - 1 - v) as u32 * self.bits
    }

    pub fn encode(&self, c: &Colouring) -> State {
        c.as_slice()
            .iter()
            .enumerate()
            .fold(0, |acc, (v, &x)| acc | ((x as State) << self.shift(v)))
    }

    pub fn colour_at(&self, s: State, v: Vertex) -> Colour {
        ((s >> self.shift(v)) & self.mask) as Colour
    }

    pub fn decode_into(&self, s: State, buf: &mut Vec<Colour>) {
        buf.clear();
        buf.extend((0..self.n()).map(|v| self.colour_at(s, v)));
    }

    pub fn decode(&self, s: State) -> Colouring {
        let mut buf = Vec::with_capacity(self.n());
        self.decode_into(s, &mut buf);
        Colouring::new(buf)
    }

    /// Whether `c` is a node of the reconfiguration graph.
    pub fn contains(&self, c: &Colouring) -> bool {
        c.len() == self.n()
            && c.as_slice()
                .iter()
                .enumerate()
                .all(|(v, x)| self.domains[v].binary_search(x).is_ok())
            && is_proper(self.graph, c).unwrap_or(false)
    }

    pub(crate) fn require(&self, c: &Colouring) -> Result<State> {
        if !self.contains(c) {
            return invalid("colouring is not proper and palette-respecting");
        }
        Ok(self.encode(c))
    }

    /// Appends all states one recolouring away from `s`. `buf` is scratch.
    pub fn neighbours_into(&self, s: State, buf: &mut Vec<Colour>, out: &mut Vec<State>) {
        self.decode_into(s, buf);
        for v in 0..self.n() {
            let cur = buf[v];
            let shift = self.shift(v);
            for &c in &self.domains[v] {
                if c != cur && self.graph.neighbours(v).iter().all(|&w| buf[w] != c) {
                    out.push(s ^ (((cur ^ c) as State) << shift));
                }
            }
        }
    }

    /// Vertex and new colour of the single step from `a` to `b`.
    pub(crate) fn step_between(&self, a: State, b: State) -> (Vertex, Colour) {
        let diff = a ^ b;
        let v = (0..self.n())
            .find(|&v| (diff >> self.shift(v)) & self.mask != 0)
            .expect("states differ");
        (v, self.colour_at(b, v))
    }

    /// Calls `f` on every node in increasing order; stops early when `f`
    /// returns `false`. Returns whether the enumeration completed.
    pub fn for_each_state(&self, mut f: impl FnMut(State) -> bool) -> bool {
        let mut it = Enumerator::new(self.graph, self.domains.clone());
        while it.advance() {
            if !f(it.state(self)) {
                return false;
            }
        }
        true
    }
}

/// Backtracking over vertices in index order, colours in increasing order.
struct Enumerator<'g> {
    graph: &'g Graph,
    domains: Vec<Vec<Colour>>,
    choice: Vec<Option<usize>>,
    pos: usize,
    started: bool,
    done: bool,
}

impl<'g> Enumerator<'g> {
    fn new(graph: &'g Graph, domains: Vec<Vec<Colour>>) -> Self {
        let n = graph.n();
        Enumerator {
            graph,
            domains,
            choice: vec![None; n],
            pos: 0,
            started: false,
            done: false,
        }
    }

    fn colour(&self, v: Vertex) -> Colour {
        self.domains[v][self.choice[v].expect("assigned")]
    }

    /// Moves to the next complete colouring.
    fn advance(&mut self) -> bool {
        let n = self.graph.n();
        if self.done {
            return false;
        }
        if n == 0 {
            self.done = true;
            return true;
        }
        if self.started {
            self.pos = n - 1;
        }
        self.started = true;
        loop {
            let v = self.pos;
            let from = self.choice[v].map_or(0, |i| i + 1);
            let next = (from..self.domains[v].len()).find(|&i| {
                let c = self.domains[v][i];
                self.graph
                    .neighbours(v)
                    .iter()
                    .take_while(|&&w| w < v)
                    .all(|&w| self.colour(w) != c)
            });
            match next {
                Some(i) => {
                    self.choice[v] = Some(i);
                    if v + 1 == n {
                        return true;
                    }
                    self.pos += 1;
                    self.choice[self.pos] = None;
                }
                None => {
                    self.choice[v] = None;
                    if v == 0 {
                        self.done = true;
                        return false;
                    }
                    self.pos -= 1;
                }
            }
        }
    }

    fn colouring(&self) -> Colouring {
        Colouring::new((0..self.graph.n()).map(|v| self.colour(v)).collect())
    }

    fn state(&self, space: &StateSpace) -> State {
        (0..self.graph.n()).fold(0, |acc, v| acc | ((self.colour(v) as State) << space.shift(v)))
    }
}

/// Every proper palette-respecting colouring, in lexicographic order.
pub struct Colourings<'g> {
    inner: Enumerator<'g>,
}

impl Iterator for Colourings<'_> {
    type Item = Colouring;

    fn next(&mut self) -> Option<Colouring> {
        self.inner.advance().then(|| self.inner.colouring())
    }
}

pub fn enumerate_colourings<'g>(g: &'g Graph, palette: &Palette) -> Result<Colourings<'g>> {
    palette.check_size(g.n())?;
    let domains = (0..g.n()).map(|v| palette.admissible(v)).collect();
    Ok(Colourings {
        inner: Enumerator::new(g, domains),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::ListAssignment;
    use crate::graph::{complete_bipartite, path};

    fn all(g: &Graph, p: &Palette) -> Vec<Vec<Colour>> {
        enumerate_colourings(g, p).unwrap().map(Colouring::into_vec).collect()
    }

    #[test]
    fn path2_two_colours() {
        let g = path(2).unwrap();
        assert_eq!(all(&g, &Palette::Uniform(2)), vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn no_colourings_when_lists_clash() {
        let g = complete_bipartite(1, 1).unwrap();
        let l = ListAssignment::new(vec![vec![1], vec![1]]).unwrap();
        assert!(all(&g, &Palette::Lists(l)).is_empty());
    }

    #[test]
    fn path3_count_matches_product() {
        let g = path(3).unwrap();
        let cs = all(&g, &Palette::Uniform(3));
        assert_eq!(cs.len(), 3 * 2 * 2);
        assert!(cs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn states_follow_lexicographic_order() {
        let g = complete_bipartite(2, 2).unwrap();
        let pal = Palette::Uniform(4);
        let space = StateSpace::new(&g, &pal).unwrap();
        let mut states = Vec::new();
        assert!(space.for_each_state(|s| {
            states.push(s);
            true
        }));
        assert!(states.windows(2).all(|w| w[0] < w[1]));
        let decoded: Vec<Vec<Colour>> = states.iter().map(|&s| space.decode(s).into_vec()).collect();
        assert_eq!(decoded, all(&g, &pal));
    }

    #[test]
    fn neighbours_of_path_colouring() {
        let g = path(2).unwrap();
        let pal = Palette::Uniform(3);
        let space = StateSpace::new(&g, &pal).unwrap();
        let s = space.encode(&Colouring::new(vec![1, 2]));
        let (mut buf, mut out) = (Vec::new(), Vec::new());
        space.neighbours_into(s, &mut buf, &mut out);
        let mut got: Vec<Vec<Colour>> = out.iter().map(|&x| space.decode(x).into_vec()).collect();
        got.sort();
        assert_eq!(got, vec![vec![1, 3], vec![3, 2]]);
    }

    #[test]
    fn oversized_states_are_refused() {
        let g = complete_bipartite(18, 18).unwrap();
        assert!(StateSpace::new(&g, &Palette::Uniform(4)).is_ok());
        assert!(StateSpace::new(&g, &Palette::Uniform(16)).is_err());
    }
}
