//! Colourings, list assignments and palettes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{invalid, parse_err, Result};
use crate::graph::{Graph, Vertex};

/// Colours are positive integers; `[k]` is `1..=k`.
pub type Colour = u32;

/// A total assignment of colours to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Colouring(Vec<Colour>);

impl Colouring {
    /// Panics if a colour is 0.
    pub fn new(colours: Vec<Colour>) -> Self {
        assert!(colours.iter().all(|&c| c >= 1), "colours are 1-based");
        Colouring(colours)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Colour {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[Colour] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Colour> {
        self.0
    }

    pub(crate) fn set(&mut self, v: Vertex, c: Colour) {
        debug_assert!(c >= 1);
        self.0[v] = c;
    }

    /// Colours used on `vertices`.
    pub fn image(&self, vertices: &[Vertex]) -> BTreeSet<Colour> {
        vertices.iter().map(|&v| self.0[v]).collect()
    }

    pub fn max_colour(&self) -> Colour {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn to_text(&self) -> String {
        let words: Vec<String> = self.0.iter().map(Colour::to_string).collect();
        format!("{}\n", words.join(" "))
    }

    pub fn from_text(text: &str) -> Result<Colouring> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        if lines.len() != 1 {
            return parse_err(1, "a colouring is a single line of colours");
        }
        let line = text.lines().position(|l| !l.starts_with('#')).unwrap() + 1;
        Ok(Colouring(parse_colours(lines[0], line)?))
    }
}

impl From<Vec<Colour>> for Colouring {
    fn from(v: Vec<Colour>) -> Self {
        Colouring::new(v)
    }
}

fn parse_colours(line: &str, lineno: usize) -> Result<Vec<Colour>> {
    line.split_whitespace()
        .map(|t| match t.parse::<Colour>() {
            Ok(c) if c >= 1 => Ok(c),
            _ => parse_err(lineno, format!("`{t}` is not a positive colour")),
        })
        .collect()
}

/// Per-vertex colour lists, each sorted and non-empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment(Vec<Vec<Colour>>);

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<Colour>>) -> Result<Self> {
        for (v, l) in lists.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return invalid(format!("list of vertex {v} is empty"));
            }
            if l[0] == 0 {
                return invalid(format!("list of vertex {v} contains colour 0"));
            }
        }
        Ok(ListAssignment(lists))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn list(&self, v: Vertex) -> &[Colour] {
        &self.0[v]
    }

    pub fn lists(&self) -> &[Vec<Colour>] {
        &self.0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.0 {
            let words: Vec<String> = l.iter().map(Colour::to_string).collect();
            writeln!(out, "{}", words.join(" ")).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<ListAssignment> {
        let mut lists = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if line.starts_with('#') {
                continue;
            }
            let l = parse_colours(line, idx + 1)?;
            if l.is_empty() {
                return parse_err(idx + 1, "empty list");
            }
            lists.push(l);
        }
        ListAssignment::new(lists)
    }
}

/// The admissible colours at each vertex: `[k]` everywhere, or a list
/// assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Palette {
    Uniform(Colour),
    Lists(ListAssignment),
}

impl Palette {
    pub fn allows(&self, v: Vertex, c: Colour) -> bool {
        match self {
            Palette::Uniform(k) => (1..=*k).contains(&c),
            Palette::Lists(l) => l.list(v).binary_search(&c).is_ok(),
        }
    }

    /// Admissible colours at `v` in increasing order.
    pub fn admissible(&self, v: Vertex) -> Vec<Colour> {
        match self {
            Palette::Uniform(k) => (1..=*k).collect(),
            Palette::Lists(l) => l.list(v).to_vec(),
        }
    }

    pub fn max_colour(&self) -> Colour {
        match self {
            Palette::Uniform(k) => *k,
            Palette::Lists(l) => l.lists().iter().filter_map(|x| x.last().copied()).max().unwrap_or(0),
        }
    }

    /// Checks that the palette fits a graph on `n` vertices.
    pub fn check_size(&self, n: usize) -> Result<()> {
        match self {
            Palette::Uniform(0) => invalid("uniform palette needs k >= 1"),
            Palette::Lists(l) if l.len() != n => invalid(format!("{} lists for {} vertices", l.len(), n)),
            _ => Ok(()),
        }
    }

    pub fn respects(&self, c: &Colouring) -> bool {
        c.as_slice().iter().enumerate().all(|(v, &x)| self.allows(v, x))
    }
}

fn check_len(g: &Graph, c: &Colouring) -> Result<()> {
    if c.len() != g.n() {
        return invalid(format!("colouring has {} entries for {} vertices", c.len(), g.n()));
    }
    Ok(())
}

/// No edge has equal endpoint colours.
pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    check_len(g, c)?;
    Ok(g.edges().iter().all(|&(u, v)| c.get(u) != c.get(v)))
}

pub fn respects_lists(lists: &ListAssignment, c: &Colouring) -> Result<bool> {
    if lists.len() != c.len() {
        return invalid(format!("{} lists for a colouring of length {}", lists.len(), c.len()));
    }
    Ok(Palette::Lists(lists.clone()).respects(c))
}

/// Preimage of each used colour.
pub fn colour_classes(c: &Colouring) -> BTreeMap<Colour, Vec<Vertex>> {
    let mut classes: BTreeMap<Colour, Vec<Vertex>> = BTreeMap::new();
    for (v, &x) in c.as_slice().iter().enumerate() {
        classes.entry(x).or_default().push(v);
    }
    classes
}

/// Whether `a` and `b` induce the same partition into colour classes,
/// i.e. differ only by a renaming of colours.
pub fn same_partition(a: &Colouring, b: &Colouring) -> Result<bool> {
    if a.len() != b.len() {
        return invalid("colourings have different lengths");
    }
    let mut fwd: BTreeMap<Colour, Colour> = BTreeMap::new();
    let mut back: BTreeMap<Colour, Colour> = BTreeMap::new();
    for (&x, &y) in a.as_slice().iter().zip(b.as_slice()) {
        if *fwd.entry(x).or_insert(y) != y || *back.entry(y).or_insert(x) != x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether no vertex can move to another admissible colour while keeping
/// the colouring proper.
pub fn is_frozen(g: &Graph, c: &Colouring, palette: &Palette) -> Result<bool> {
    palette.check_size(g.n())?;
    if !is_proper(g, c)? || !palette.respects(c) {
        return invalid("is_frozen needs a proper, palette-respecting colouring");
    }
    Ok((0..g.n()).all(|v| {
        palette
            .admissible(v)
            .into_iter()
            .filter(|&x| x != c.get(v))
            .all(|x| g.neighbours(v).iter().any(|&w| c.get(w) == x))
    }))
}

/// Colours shared on `V` by both colourings (`c1`), only by `alpha` (`c2`)
/// and only by `beta` (`c3`). `swapped` is set when `|c3| < |c2|`, i.e.
/// when the roles of the two colourings have to be exchanged to get the
/// normal form `|c3| >= |c2|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourSplit {
    pub c1: BTreeSet<Colour>,
    pub c2: BTreeSet<Colour>,
    pub c3: BTreeSet<Colour>,
    pub swapped: bool,
}

impl ColourSplit {
    /// The split with the roles of the colourings exchanged so that
    /// `|c3| >= |c2|`.
    pub fn normalised(&self) -> ColourSplit {
        if self.swapped {
            ColourSplit {
                c1: self.c1.clone(),
                c2: self.c3.clone(),
                c3: self.c2.clone(),
                swapped: false,
            }
        } else {
            self.clone()
        }
    }
}

pub fn colour_split(alpha: &Colouring, beta: &Colouring, part: &[Vertex]) -> ColourSplit {
    let a = alpha.image(part);
    let b = beta.image(part);
    let c1: BTreeSet<Colour> = a.intersection(&b).copied().collect();
    let c2: BTreeSet<Colour> = a.difference(&c1).copied().collect();
    let c3: BTreeSet<Colour> = b.difference(&c1).copied().collect();
    let swapped = c3.len() < c2.len();
    ColourSplit { c1, c2, c3, swapped }
}
