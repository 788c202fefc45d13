//! Constructive recolouring of `K_{p,q}` within the upper bound.
//!
//! Every routine here works on a *view*: a pair of vertex lists `u`, `v`
//! (all of `u` adjacent to all of `v`) and the colours available to them.
//! Vertices outside the view keep colours outside the view's palette, so a
//! sub-view can be solved in place on full-length colourings and no
//! relabelling is needed when its steps are spliced back.
//!
//! Colour sets are bitmasks (bit `c` for colour `c`), which caps `k` at
//! [`MAX_COLOURS`].

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::KpqInstance;
use crate::colouring::{Colour, Colouring};
use crate::error::{invalid, Result};
use crate::explorer::{RecolouringSequence, Step};
use crate::graph::Vertex;

/// Largest number of colours the constructions accept.
pub const MAX_COLOURS: Colour = 63;

/// Subset pairs are enumerated exhaustively up to this `|C2| |C3|`.
const EXHAUSTIVE_SPLIT_LIMIT: u32 = 12;
const SPLIT_SAMPLES: usize = 1000;
const SPLIT_SEED: u64 = 0x5eed_5a11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InductionStats {
    pub y0: usize,
    pub y1: usize,
    pub y2: usize,
    pub y: usize,
}

/// How the colour `c` sits on `part` under the two colourings.
pub fn induction_stats(a: &Colouring, b: &Colouring, part: &[Vertex], c: Colour) -> InductionStats {
    let (mut y0, mut y1, mut y2) = (0, 0, 0);
    for &w in part {
        match (a.get(w) == c, b.get(w) == c) {
            (true, true) => y0 += 1,
            (true, false) => y1 += 1,
            (false, true) => y2 += 1,
            (false, false) => {}
        }
    }
    InductionStats {
        y0,
        y1,
        y2,
        y: y0 + y1 + y2,
    }
}

type Mask = u64;

fn bit(c: Colour) -> Mask {
    1 << c
}

fn has(m: Mask, c: Colour) -> bool {
    m >> c & 1 == 1
}

fn lowest(m: Mask) -> Colour {
    debug_assert!(m != 0);
    m.trailing_zeros()
}

fn colours_of(mut m: Mask) -> impl Iterator<Item = Colour> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let c = lowest(m);
            m &= m - 1;
            c
        })
    })
}

fn image(c: &[Colour], part: &[Vertex]) -> Mask {
    part.iter().fold(0, |m, &w| m | bit(c[w]))
}

#[derive(Clone, Copy)]
struct View<'a> {
    u: &'a [Vertex],
    v: &'a [Vertex],
    colours: Mask,
}

#[derive(Clone, Copy)]
struct Split {
    c1: Mask,
    c2: Mask,
    c3: Mask,
}

fn split(start: &[Colour], target: &[Colour], v: &[Vertex]) -> Split {
    let a = image(start, v);
    let b = image(target, v);
    Split {
        c1: a & b,
        c2: a & !b,
        c3: b & !a,
    }
}

/// Applies recolourings, dropping those that would not change anything.
#[derive(Default)]
struct Builder {
    cur: Vec<Colour>,
    steps: Vec<Step>,
}

impl Builder {
    fn reset(&mut self, start: &[Colour]) {
        self.cur.clear();
        self.cur.extend_from_slice(start);
        self.steps.clear();
    }

    fn set(&mut self, vertex: Vertex, colour: Colour) {
        if self.cur[vertex] != colour {
            self.cur[vertex] = colour;
            self.steps.push(Step { vertex, colour });
        }
    }

    fn move_to_target(&mut self, part: &[Vertex], target: &[Colour]) {
        for &w in part {
            self.set(w, target[w]);
        }
    }
}

/// Reusable buffers for one recursion depth.
#[derive(Default)]
struct Level {
    build: Builder,
    best: Vec<Step>,
    has_best: bool,
    sub: Vec<Step>,
    rest: Vec<Vertex>,
    undo: Vec<Colour>,
}

impl Level {
    /// Keeps the builder's steps if strictly shorter than the best so far.
    fn offer(&mut self) {
        if !self.has_best || self.build.steps.len() < self.best.len() {
            self.best.clone_from(&self.build.steps);
            self.has_best = true;
        }
    }
}

fn reverse_into(start: &[Colour], steps: &[Step], cur: &mut Vec<Colour>, out: &mut Vec<Step>) {
    cur.clear();
    cur.extend_from_slice(start);
    out.clear();
    for s in steps {
        out.push(Step {
            vertex: s.vertex,
            colour: cur[s.vertex],
        });
        cur[s.vertex] = s.colour;
    }
    out.reverse();
}

/// Writes a sequence from `start` to `target` on the view into `out`.
fn solve(levels: &mut [Level], view: View, start: &[Colour], target: &[Colour], out: &mut Vec<Step>) {
    let view = if view.u.len() > view.v.len() {
        View {
            u: view.v,
            v: view.u,
            colours: view.colours,
        }
    } else {
        view
    };
    let (lvl, deeper) = levels
        .split_first_mut()
        .expect("recursion depth is below the colour count");
    if view.u.is_empty() {
        lvl.build.reset(start);
        lvl.build.move_to_target(view.v, target);
        out.clone_from(&lvl.build.steps);
        return;
    }
    let s = split(start, target, view.v);
    if s.c3.count_ones() < s.c2.count_ones() {
        let s = Split {
            c1: s.c1,
            c2: s.c3,
            c3: s.c2,
        };
        solve_normalised(lvl, deeper, view, target, start, s);
        reverse_into(target, &lvl.best, &mut lvl.undo, out);
    } else {
        solve_normalised(lvl, deeper, view, start, target, s);
        out.clone_from(&lvl.best);
    }
}

fn solve_normalised(lvl: &mut Level, deeper: &mut [Level], view: View, start: &[Colour], target: &[Colour], s: Split) {
    lvl.has_best = false;
    let used = s.c1 | s.c2 | s.c3;
    let size = view.colours.count_ones();

    for c in colours_of(view.colours & !used) {
        lvl.build.reset(start);
        spare(&mut lvl.build, view, target, c);
        lvl.offer();
    }
    if s.c1 == 0 && used == view.colours && s.c3.count_ones() >= 2 {
        best_split_swap(lvl, view, start, target, s);
    }
    if size == 3 && s.c1.count_ones() == 1 && s.c2.count_ones() == 1 && s.c3.count_ones() == 1 {
        lvl.build.reset(start);
        k3_first(&mut lvl.build, view, start, target, s);
        lvl.offer();
        lvl.build.reset(start);
        k3_second(&mut lvl.build, view, start, target, s);
        lvl.offer();
    }
    if size >= 4 {
        for c in colours_of(s.c1) {
            claim_recursive(lvl, deeper, view, start, target, c);
            lvl.offer();
        }
    }
    if s.c2 != 0 && s.c3 != 0 {
        for c in colours_of(s.c1) {
            lvl.build.reset(start);
            claim_six_phase(&mut lvl.build, view, start, target, s, c);
            lvl.offer();
        }
    }
    assert!(lvl.has_best, "some strategy always applies to a proper pair");
}

/// Park `U` on a colour unused on `V` by both colourings.
fn spare(b: &mut Builder, view: View, target: &[Colour], c: Colour) {
    for &w in view.u {
        if b.cur[w] != target[w] {
            b.set(w, c);
        }
    }
    b.move_to_target(view.v, target);
    b.move_to_target(view.u, target);
}

/// The five-phase exchange for `C1 = {}` with chosen `C2' <= C2` and
/// `C3' < C3`, both non-empty.
fn split_swap(b: &mut Builder, view: View, start: &[Colour], target: &[Colour], s: Split, c2p: Mask, c3p: Mask) {
    let rest3 = lowest(s.c3 & !c3p);
    let park_v = lowest(c3p | (s.c2 & !c2p));
    let park_u = lowest(c2p);
    for &w in view.u {
        if has(c3p, start[w]) {
            b.set(w, rest3);
        }
    }
    for &w in view.v {
        if has(c2p, start[w]) {
            b.set(w, if has(c3p, target[w]) { target[w] } else { park_v });
        }
    }
    for &w in view.u {
        b.set(w, if has(c2p, target[w]) { target[w] } else { park_u });
    }
    b.move_to_target(view.v, target);
    b.move_to_target(view.u, target);
}

/// Sub-masks of `m` with exactly `size` bits, in increasing order.
fn submasks(m: Mask, size: u32) -> impl Iterator<Item = Mask> {
    let mut next = Some(0);
    std::iter::from_fn(move || {
        while let Some(cur) = next {
            // Smallest sub-mask of `m` above `cur`.
            let step = (cur | !m).wrapping_add(1) & m;
            next = (step != 0).then_some(step);
            if cur.count_ones() == size {
                return Some(cur);
            }
        }
        None
    })
}

fn best_split_swap(lvl: &mut Level, view: View, start: &[Colour], target: &[Colour], s: Split) {
    let (n2, n3) = (s.c2.count_ones(), s.c3.count_ones());
    // The averaging bound needs `|C3 \ C3'| = 1` in both choices, so
    // `(1, |C3|-1)` is tried alongside `(|C2|, |C3|-1)` and `(1, 1)`.
    let mut sizes = Vec::with_capacity(3);
    for choice in [(n2, n3 - 1), (1, n3 - 1), (1, 1)] {
        if !sizes.contains(&choice) {
            sizes.push(choice);
        }
    }
    let exhaustive = n2 * n3 <= EXHAUSTIVE_SPLIT_LIMIT;
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    for (s2, s3) in sizes {
        if exhaustive {
            for c2p in submasks(s.c2, s2) {
                for c3p in submasks(s.c3, s3) {
                    lvl.build.reset(start);
                    split_swap(&mut lvl.build, view, start, target, s, c2p, c3p);
                    lvl.offer();
                }
            }
        } else {
            let (c2p, c3p) = greedy_split(view, start, target, s, s2, s3);
            lvl.build.reset(start);
            split_swap(&mut lvl.build, view, start, target, s, c2p, c3p);
            lvl.offer();
            let c2: Vec<Colour> = colours_of(s.c2).collect();
            let c3: Vec<Colour> = colours_of(s.c3).collect();
            for _ in 0..SPLIT_SAMPLES {
                let c2p = sample(&mut rng, c2.len(), s2 as usize)
                    .into_iter()
                    .fold(0, |m, i| m | bit(c2[i]));
                let c3p = sample(&mut rng, c3.len(), s3 as usize)
                    .into_iter()
                    .fold(0, |m, i| m | bit(c3[i]));
                lvl.build.reset(start);
                split_swap(&mut lvl.build, view, start, target, s, c2p, c3p);
                lvl.offer();
            }
        }
    }
}

/// `C3'`: the colours of `C3` least used on `U`. `C2'`: the colours of `C2`
/// whose choice saves the most `U` recolourings net of extra `V` moves.
fn greedy_split(view: View, start: &[Colour], target: &[Colour], s: Split, s2: u32, s3: u32) -> (Mask, Mask) {
    let count = |part: &[Vertex], col: &[Colour], c: Colour| part.iter().filter(|&&w| col[w] == c).count();
    let mut c3: Vec<Colour> = colours_of(s.c3).collect();
    c3.sort_by_key(|&c| (count(view.u, start, c), c));
    let c3p = c3[..s3 as usize].iter().fold(0, |m, &c| m | bit(c));
    let gain = |c: Colour| {
        let kept = count(view.u, target, c) as i64;
        let extra = view
            .v
            .iter()
            .filter(|&&w| start[w] == c && !has(c3p, target[w]))
            .count() as i64;
        kept - extra
    };
    let mut c2: Vec<Colour> = colours_of(s.c2).collect();
    c2.sort_by_key(|&c| (-gain(c), c));
    let c2p = c2[..s2 as usize].iter().fold(0, |m, &c| m | bit(c));
    (c2p, c3p)
}

fn k3_first(b: &mut Builder, view: View, start: &[Colour], target: &[Colour], s: Split) {
    let (x, y, z) = (lowest(s.c1), lowest(s.c2), lowest(s.c3));
    for &w in view.v {
        if start[w] == y {
            b.set(w, x);
        }
    }
    for &w in view.u {
        b.set(w, y);
    }
    for &w in view.v {
        if target[w] == z {
            b.set(w, z);
        }
    }
}

fn k3_second(b: &mut Builder, view: View, start: &[Colour], target: &[Colour], s: Split) {
    let (x, y, z) = (lowest(s.c1), lowest(s.c2), lowest(s.c3));
    for &w in view.v {
        if start[w] == x {
            b.set(w, y);
        }
    }
    for &w in view.u {
        b.set(w, x);
    }
    for &w in view.v {
        b.set(w, z);
    }
    b.move_to_target(view.u, target);
    for &w in view.v {
        if target[w] == x {
            b.set(w, x);
        }
    }
}

/// Move `V`'s `beta`-class of `c` onto `c`, solve the rest of the graph
/// without `c`, then release the vertices still holding `c`.
fn claim_recursive(lvl: &mut Level, deeper: &mut [Level], view: View, start: &[Colour], target: &[Colour], c: Colour) {
    let Level { build, sub, rest, .. } = lvl;
    build.reset(start);
    for &w in view.v {
        if target[w] == c {
            build.set(w, c);
        }
    }
    rest.clear();
    rest.extend(view.v.iter().copied().filter(|&w| start[w] != c && target[w] != c));
    let inner = View {
        u: view.u,
        v: rest,
        colours: view.colours & !bit(c),
    };
    solve(deeper, inner, &build.cur, target, sub);
    for s in sub.iter() {
        build.set(s.vertex, s.colour);
    }
    build.move_to_target(view.v, target);
}

/// Route `U` through `c`: clear `c` off `V`, put `U` on `c`, finish `V`
/// with the `beta`-class of `c` parked in `C3`, finish `U`, then land the
/// parked class on `c`.
fn claim_six_phase(b: &mut Builder, view: View, start: &[Colour], target: &[Colour], s: Split, c: Colour) {
    let to_c2 = lowest(s.c2);
    let to_c3 = lowest(s.c3);
    let u_target = image(target, view.u);
    for &w in view.v {
        if start[w] == c {
            b.set(w, to_c2);
        }
    }
    for &w in view.u {
        b.set(w, c);
    }
    for &w in view.v {
        if target[w] != c {
            b.set(w, target[w]);
        }
    }
    for &w in view.v {
        if target[w] == c && has(u_target, b.cur[w]) {
            b.set(w, to_c3);
        }
    }
    b.move_to_target(view.u, target);
    b.move_to_target(view.v, target);
}

fn check_pair(inst: &KpqInstance, a: &Colouring, b: &Colouring) -> Result<()> {
    if inst.k > MAX_COLOURS {
        return invalid(format!("k = {} exceeds the supported maximum {MAX_COLOURS}", inst.k));
    }
    for (name, c) in [("alpha", a), ("beta", b)] {
        if c.len() != inst.n() {
            return invalid(format!("{name} has {} entries, expected {}", c.len(), inst.n()));
        }
        if c.max_colour() > inst.k {
            return invalid(format!("{name} uses colours outside [{}]", inst.k));
        }
        let c = c.as_slice();
        let (u, v) = c.split_at(inst.p);
        if image_of(u) & image_of(v) != 0 {
            return invalid(format!("{name} is not a proper colouring"));
        }
    }
    Ok(())
}

fn image_of(colours: &[Colour]) -> Mask {
    colours.iter().fold(0, |m, &c| m | bit(c))
}

struct Parts {
    u: Vec<Vertex>,
    v: Vec<Vertex>,
    colours: Mask,
}

impl Parts {
    fn of(inst: &KpqInstance) -> Self {
        Parts {
            u: inst.u_part(),
            v: inst.v_part(),
            colours: (1..=inst.k).fold(0, |m, c| m | bit(c)),
        }
    }

    fn view(&self) -> View<'_> {
        View {
            u: &self.u,
            v: &self.v,
            colours: self.colours,
        }
    }
}

fn sequence(a: &Colouring, steps: Vec<Step>) -> RecolouringSequence {
    RecolouringSequence {
        start: a.clone(),
        steps,
    }
}

/// A recolouring sequence from `a` to `b` of length at most
/// [`upper_bound_formula`](super::upper_bound_formula): the shortest of
/// several constructions, recursing on fewer colours where needed.
pub fn recolour_kpq(inst: &KpqInstance, a: &Colouring, b: &Colouring) -> Result<RecolouringSequence> {
    KpqRecolourer::new(inst)?.recolour(a, b)
}

/// [`recolour_kpq`] with its working buffers kept between calls.
pub struct KpqRecolourer {
    inst: KpqInstance,
    parts: Parts,
    levels: Vec<Level>,
}

impl KpqRecolourer {
    pub fn new(inst: &KpqInstance) -> Result<Self> {
        if inst.k > MAX_COLOURS {
            return invalid(format!("k = {} exceeds the supported maximum {MAX_COLOURS}", inst.k));
        }
        Ok(KpqRecolourer {
            inst: *inst,
            parts: Parts::of(inst),
            levels: (0..inst.k).map(|_| Level::default()).collect(),
        })
    }

    pub fn recolour(&mut self, a: &Colouring, b: &Colouring) -> Result<RecolouringSequence> {
        check_pair(&self.inst, a, b)?;
        let mut out = Vec::new();
        solve(
            &mut self.levels,
            self.parts.view(),
            a.as_slice(),
            b.as_slice(),
            &mut out,
        );
        Ok(sequence(a, out))
    }
}

/// Send `U` to the spare colour `c`, then `V` to `b`, then `U` to `b`.
/// At most `2p + q` steps.
pub fn spare_colour_sequence(
    inst: &KpqInstance,
    a: &Colouring,
    b: &Colouring,
    c: Colour,
) -> Result<RecolouringSequence> {
    check_pair(inst, a, b)?;
    if c == 0 || c > inst.k {
        return invalid(format!("colour {c} is outside [{}]", inst.k));
    }
    let parts = Parts::of(inst);
    if parts.v.iter().any(|&w| a.get(w) == c || b.get(w) == c) {
        return invalid(format!("colour {c} is used on the large part"));
    }
    let mut build = Builder::default();
    build.reset(a.as_slice());
    spare(&mut build, parts.view(), b.as_slice(), c);
    Ok(sequence(a, build.steps))
}

/// The exchange for pairs sharing no colour on the large part, minimised
/// over the subset choices.
pub fn split_swap_sequence(inst: &KpqInstance, a: &Colouring, b: &Colouring) -> Result<RecolouringSequence> {
    check_pair(inst, a, b)?;
    let parts = Parts::of(inst);
    let s = split(a.as_slice(), b.as_slice(), &parts.v);
    if s.c1 != 0 {
        return invalid("the colourings share a colour on the large part");
    }
    let swapped = s.c3.count_ones() < s.c2.count_ones();
    let (start, target, s) = if swapped {
        (
            b,
            a,
            Split {
                c1: 0,
                c2: s.c3,
                c3: s.c2,
            },
        )
    } else {
        (a, b, s)
    };
    if s.c3.count_ones() < 2 {
        return invalid("the exchange needs at least two colours on each side");
    }
    let mut lvl = Level::default();
    best_split_swap(&mut lvl, parts.view(), start.as_slice(), target.as_slice(), s);
    let steps = if swapped {
        let mut out = Vec::new();
        reverse_into(b.as_slice(), &lvl.best, &mut lvl.undo, &mut out);
        out
    } else {
        lvl.best
    };
    Ok(sequence(a, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::Palette;
    use crate::explorer::{distance, enumerate_colourings, verify_sequence, Distance};
    use crate::kpq::{extremal_pair, upper_bound_formula};

    fn inst(k: Colour, p: usize, q: usize) -> KpqInstance {
        KpqInstance::new(k, p, q).unwrap()
    }

    fn col(v: &[Colour]) -> Colouring {
        Colouring::new(v.to_vec())
    }

    fn all_colourings(i: &KpqInstance) -> Vec<Colouring> {
        enumerate_colourings(&i.graph(), &Palette::Uniform(i.k))
            .unwrap()
            .collect()
    }

    fn check_all_pairs(i: &KpqInstance) {
        let g = i.graph();
        let palette = Palette::Uniform(i.k);
        let bound = upper_bound_formula(i) as usize;
        let cs = all_colourings(i);
        for a in &cs {
            for b in &cs {
                let s = recolour_kpq(i, a, b).unwrap();
                let r = verify_sequence(&g, &palette, &s, b);
                assert!(r.valid, "{i:?} {a:?} -> {b:?}");
                assert!(s.len() <= bound, "{i:?} {a:?} -> {b:?}: {} > {bound}", s.len());
            }
        }
    }

    #[test]
    fn all_pairs_within_bound_small() {
        for (k, p, q) in [
            (3, 1, 1),
            (3, 1, 2),
            (3, 2, 2),
            (3, 1, 3),
            (3, 2, 3),
            (3, 3, 3),
            (4, 1, 4),
            (4, 2, 2),
            (4, 1, 3),
            (5, 1, 3),
            (5, 2, 2),
        ] {
            check_all_pairs(&inst(k, p, q));
        }
    }

    #[test]
    fn identity_is_empty() {
        let i = inst(4, 2, 3);
        let a = col(&[1, 2, 3, 4, 3]);
        assert!(recolour_kpq(&i, &a, &a).unwrap().is_empty());
    }

    #[test]
    fn spare_colour_examples() {
        let i = inst(3, 1, 1);
        let s = spare_colour_sequence(&i, &col(&[1, 2]), &col(&[2, 1]), 3).unwrap();
        assert_eq!(
            s.steps,
            vec![
                Step { vertex: 0, colour: 3 },
                Step { vertex: 1, colour: 1 },
                Step { vertex: 0, colour: 2 }
            ]
        );
        let i = inst(4, 1, 2);
        let (a, b) = (col(&[1, 2, 2]), col(&[2, 3, 3]));
        let s = spare_colour_sequence(&i, &a, &b, 4).unwrap();
        assert_eq!(s.len(), 4);
        assert!(verify_sequence(&i.graph(), &Palette::Uniform(4), &s, &b).valid);
        assert!(spare_colour_sequence(&i, &a, &b, 2).is_err());
        assert!(spare_colour_sequence(&i, &a, &a, 4).unwrap().is_empty());
    }

    #[test]
    fn split_swap_examples() {
        let i = inst(4, 2, 4);
        let (a, b, _) = extremal_pair(&i);
        let s = split_swap_sequence(&i, &a, &b).unwrap();
        assert!(verify_sequence(&i.graph(), &Palette::Uniform(4), &s, &b).valid);
        assert!(s.len() <= 9);

        let i = inst(3, 1, 2);
        let (a, b, _) = extremal_pair(&i);
        let s = split_swap_sequence(&i, &a, &b).unwrap();
        assert!(verify_sequence(&i.graph(), &Palette::Uniform(3), &s, &b).valid);
        let d = distance(&i.graph(), &Palette::Uniform(3), &a, &b, 1 << 20).unwrap();
        assert_eq!(d.length(), Some(4));
        assert_eq!(s.len(), 4);

        for p in [2, 4, 8] {
            let i = inst(4, p, p);
            let (a, b, _) = extremal_pair(&i);
            let s = split_swap_sequence(&i, &a, &b).unwrap();
            let bound = (4 * p as i64 + (p as i64 - 4 * p as i64).div_euclid(4)) as usize;
            assert!(s.len() <= bound, "p={p}");
        }

        let i = inst(3, 1, 2);
        assert!(split_swap_sequence(&i, &col(&[1, 2, 3]), &col(&[1, 2, 3])).is_err());
    }

    #[test]
    fn larger_palettes_fall_back_to_sampling() {
        // |C2| |C3| = 4 * 5 > 12, so subsets are sampled.
        let i = inst(9, 3, 20);
        let (a, b, spec) = extremal_pair(&i);
        assert_eq!((spec.a, spec.b), (4, 5));
        let s = recolour_kpq(&i, &a, &b).unwrap();
        assert!(verify_sequence(&i.graph(), &Palette::Uniform(9), &s, &b).valid);
        assert!(s.len() <= upper_bound_formula(&i) as usize);
        let again = recolour_kpq(&i, &a, &b).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn never_beats_the_oracle() {
        let i = inst(4, 2, 3);
        let g = i.graph();
        let palette = Palette::Uniform(4);
        let cs = all_colourings(&i);
        for a in cs.iter().step_by(7) {
            for b in cs.iter().step_by(5) {
                let s = recolour_kpq(&i, a, b).unwrap();
                let Distance::Reachable(d, _) = distance(&g, &palette, a, b, 1 << 22).unwrap() else {
                    panic!("C_4(K_2,3) is connected");
                };
                assert!(s.len() >= d);
            }
        }
    }

    #[test]
    fn stats() {
        let (a, b) = (col(&[1, 2, 2, 3, 4]), col(&[3, 2, 4, 4, 2]));
        let s = induction_stats(&a, &b, &[1, 2, 3, 4], 2);
        assert_eq!(
            s,
            InductionStats {
                y0: 1,
                y1: 1,
                y2: 1,
                y: 3
            }
        );
    }

    #[test]
    fn rejects_bad_input() {
        let i = inst(3, 1, 2);
        assert!(recolour_kpq(&i, &col(&[1, 1, 2]), &col(&[1, 2, 2])).is_err());
        assert!(recolour_kpq(&i, &col(&[1, 4, 2]), &col(&[1, 2, 2])).is_err());
        assert!(recolour_kpq(&i, &col(&[1, 2]), &col(&[1, 2, 2])).is_err());
    }
}
