//! Reproducible reports for the headline numbers: each check recomputes a
//! published value from scratch and compares.
//!
//! Reports are plain lines of `key=value` text followed by a verdict, and
//! are byte-identical across runs and thread counts.

use std::collections::BTreeSet;

use crate::colouring::{is_frozen, is_proper, respects_lists, Colour, Colouring, Palette};
use crate::error::{invalid, Error, Result};
use crate::explorer::{components, metrics, neighbours, verify_sequence, RecolouringSequence, Step};
use crate::graph::{
    complete_bipartite, complete_bipartite_minus_matching, degeneracy, forcing_gadget, frozen_list_instance,
    k18_list_instance, layered_example, matching_number, Vertex,
};
use crate::kpq::{upper_bound_formula, KpqInstance};

/// Names accepted by [`run_check`].
pub const CHECK_ITEMS: [&str; 6] = [
    "example-4.1",
    "example-4.2",
    "prop-1.2",
    "prop-4.3c",
    "gadget-forcing",
    "k18-formula",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Node budget for every reconfiguration graph built.
    pub budget: u64,
    /// Run the larger optional instances too.
    pub full: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub item: String,
    pub lines: Vec<String>,
    pub passed: bool,
}

impl CheckReport {
    fn new(item: &str) -> Self {
        CheckReport {
            item: item.to_string(),
            lines: Vec::new(),
            passed: true,
        }
    }

    fn line(&mut self, text: String) {
        self.lines.push(text);
    }

    fn require(&mut self, ok: bool) {
        self.passed &= ok;
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    /// The report lines followed by `<item>: PASS` or `<item>: FAIL`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out.push_str(&format!("{}: {}\n", self.item, self.verdict()));
        out
    }
}

pub fn run_check(item: &str, opts: &CheckOptions) -> Result<CheckReport> {
    match item {
        "example-4.1" => example_4_1(opts),
        "example-4.2" => example_4_2(opts),
        "prop-1.2" => prop_1_2(opts),
        "prop-4.3c" => prop_4_3c(opts),
        "gadget-forcing" => gadget_forcing(opts),
        "k18-formula" => k18_formula(),
        other => invalid(format!(
            "unknown check '{other}', expected one of {}",
            CHECK_ITEMS.join(", ")
        )),
    }
}

/// `C_k(K_{m,m} - M)` is connected exactly when `k >= 3` and `k != m`.
/// The `m = 5` rows are skipped if they exceed the budget.
pub fn example_4_1(opts: &CheckOptions) -> Result<CheckReport> {
    let mut r = CheckReport::new("example-4.1");
    for m in [3, 4, 5] {
        let g = complete_bipartite_minus_matching(m)?;
        for k in 2..=5 {
            let expected = k >= 3 && k as usize != m;
            match components(&g, &Palette::Uniform(k), opts.budget) {
                Ok(c) => {
                    let connected = c.count == 1;
                    r.line(format!(
                        "m={m} k={k} nodes={} components={} connected={connected} expected={expected}",
                        c.sizes.iter().sum::<usize>(),
                        c.count
                    ));
                    r.require(connected == expected);
                }
                Err(Error::BudgetExhausted { limit }) if m == 5 => {
                    r.line(format!("m={m} k={k} skipped: more than {limit} colourings"));
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(r)
}

/// The layered graph: order 10, matching number 4, degeneracy 2, and
/// `diam C_3 = 15`, `diam C_4 = 17`, `rad C_3 = 15`, `rad C_4 = 14`.
pub fn example_4_2(opts: &CheckOptions) -> Result<CheckReport> {
    let mut r = CheckReport::new("example-4.2");
    let g = layered_example();
    let (mu, delta) = (matching_number(&g)?, degeneracy(&g));
    r.line(format!("order={} matching={mu} degeneracy={delta}", g.n()));
    r.require(g.n() == 10 && mu == 4 && delta == 2);
    let mut found = Vec::new();
    for (k, diam, rad) in [(3, 15, 15), (4, 17, 14)] {
        let m = metrics(&g, &Palette::Uniform(k), true, opts.budget)?;
        r.line(format!(
            "k={k} nodes={} connected={} diam={} rad={}",
            m.node_count, m.connected, m.diameter, m.radius
        ));
        r.require(m.connected && m.diameter.finite() == Some(diam) && m.radius.finite() == Some(rad));
        found.push((m.diameter, m.radius));
    }
    r.line(format!(
        "diam3={} diam4={} rad3={} rad4={}",
        found[0].0, found[1].0, found[0].1, found[1].1
    ));
    Ok(r)
}

/// `diam C_3(K_{p,q}) = floor(3(p+q)/2)` for `p + q <= 7` (`<= 9` with
/// `full`).
pub fn prop_1_2(opts: &CheckOptions) -> Result<CheckReport> {
    let mut r = CheckReport::new("prop-1.2");
    let max_n = if opts.full { 9 } else { 7 };
    for n in 2..=max_n {
        for p in 1..=n / 2 {
            let q = n - p;
            let m = metrics(&complete_bipartite(p, q)?, &Palette::Uniform(3), true, opts.budget)?;
            let expected = (3 * n / 2) as u64;
            r.line(format!("p={p} q={q} diam={} expected={expected}", m.diameter));
            r.require(m.diameter.finite() == Some(expected));
        }
    }
    Ok(r)
}

/// `K_{m,m} - M` with lists `[m] \ {i}` has a frozen list colouring, while
/// `C_{m-1}` of the same graph is connected.
pub fn prop_4_3c(opts: &CheckOptions) -> Result<CheckReport> {
    let mut r = CheckReport::new("prop-4.3c");
    for m in [4, 5] {
        let (g, lists, phi) = frozen_list_instance(m)?;
        let palette = Palette::Lists(lists.clone());
        let respects = respects_lists(&lists, &phi)?;
        let frozen = is_frozen(&g, &phi, &palette)?;
        let isolated = neighbours(&g, &palette, &phi)?.is_empty();
        let k = (m - 1) as Colour;
        let c = components(&g, &Palette::Uniform(k), opts.budget)?;
        r.line(format!(
            "m={m} list_frozen={frozen} no_neighbours={isolated} k={k} components={}",
            c.count
        ));
        r.require(respects && frozen && isolated && c.count == 1);
    }
    Ok(r)
}

/// For each gadget, exactly one assignment of list colours to the small
/// side extends to the large side: the first colour of every list.
pub fn gadget_forcing(opts: &CheckOptions) -> Result<CheckReport> {
    let mut r = CheckReport::new("gadget-forcing");
    let mut sizes = vec![(2, 2), (3, 2)];
    if opts.full {
        sizes.push((4, 4));
    }
    for (t, s) in sizes {
        let gadget = forcing_gadget(t, s)?;
        let small: Vec<&[Colour]> = gadget.special.iter().map(|&v| gadget.lists.list(v)).collect();
        let large: Vec<Vertex> = (t..gadget.graph.n()).collect();
        let mut extending = Vec::new();
        let total = s.pow(t as u32);
        for idx in 0..total {
            let mut rest = idx;
            let mut choice = vec![0; t];
            for (slot, list) in choice.iter_mut().zip(&small).rev() {
                *slot = list[rest % s];
                rest /= s;
            }
            let used: BTreeSet<Colour> = choice.iter().copied().collect();
            let mut colours = choice.clone();
            let mut ok = true;
            for &w in &large {
                match gadget.lists.list(w).iter().find(|c| !used.contains(c)) {
                    Some(&c) => colours.push(c),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let full = Colouring::new(colours);
                ok = is_proper(&gadget.graph, &full)? && respects_lists(&gadget.lists, &full)?;
            }
            if ok {
                extending.push(choice);
            }
        }
        let first: Vec<Colour> = small.iter().map(|l| l[0]).collect();
        let shown: Vec<String> = extending
            .iter()
            .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        r.line(format!(
            "t={t} s={s} large={} assignments={total} extending={} forced={}",
            large.len(),
            extending.len(),
            shown.join(";")
        ));
        r.require(extending == [first]);
    }
    Ok(r)
}

/// `K_{18,18}` with `k = 4`: the diameter formula gives 54, which equals
/// `n + mu`. The list instance is checked to be well formed, and an explicit
/// list recolouring between its two colourings is built and verified.
pub fn k18_formula() -> Result<CheckReport> {
    let mut r = CheckReport::new("k18-formula");
    let upper = upper_bound_formula(&KpqInstance::new(4, 18, 18)?);
    let g = complete_bipartite(18, 18)?;
    let mu = matching_number(&g)?;
    r.line(format!(
        "upper_bound={upper} n={} matching={mu} n_plus_matching={}",
        g.n(),
        g.n() + mu
    ));
    r.require(upper == 54 && g.n() + mu == 54);

    let inst = k18_list_instance();
    let ok_a = respects_lists(&inst.lists, &inst.alpha)? && is_proper(&inst.graph, &inst.alpha)?;
    let ok_b = respects_lists(&inst.lists, &inst.beta)? && is_proper(&inst.graph, &inst.beta)?;
    r.line(format!("list_instance alpha_ok={ok_a} beta_ok={ok_b}"));
    r.require(ok_a && ok_b);

    let witness = k18_witness();
    let report = verify_sequence(&inst.graph, &Palette::Lists(inst.lists.clone()), &witness, &inst.beta);
    r.line(format!(
        "witness_length={} witness_valid={}",
        witness.len(),
        report.valid
    ));
    r.require(report.valid && witness.len() >= 55);
    Ok(r)
}

/// A list recolouring of the `K_{18,18}` instance from `alpha` to `beta`.
///
/// Colours cross between the parts one at a time: a colour is cleared off
/// one part (each vertex moving to its target if available, else to the
/// smallest allowed colour left on that part) and then opened on the other
/// part, where vertices wanting it take it at once. Every order of the five
/// crossings that keeps two colours on each part is tried and the shortest
/// result is kept.
pub fn k18_witness() -> RecolouringSequence {
    let inst = k18_list_instance();
    let half = inst.graph.n() / 2;
    let (u, v): (Vec<Vertex>, Vec<Vertex>) = ((0..half).collect(), (half..2 * half).collect());
    let mut best: Option<Vec<Step>> = None;
    for order in permutations(&[1, 2, 3, 4, 5]) {
        let mut sets = [BTreeSet::from([1, 3, 5]), BTreeSet::from([2, 4])];
        let mut cur = inst.alpha.as_slice().to_vec();
        let mut steps = Vec::new();
        let mut feasible = true;
        for &c in &order {
            let (from, to) = if sets[0].contains(&c) { (0, 1) } else { (1, 0) };
            if sets[from].len() < 3 {
                feasible = false;
                break;
            }
            sets[from].remove(&c);
            let parts = [&u, &v];
            for &w in parts[from] {
                if cur[w] == c {
                    let target = inst.beta.get(w);
                    let allowed = inst.lists.list(w);
                    let next = if sets[from].contains(&target) {
                        target
                    } else {
                        *allowed
                            .iter()
                            .find(|x| sets[from].contains(x))
                            .expect("lists miss one colour")
                    };
                    cur[w] = next;
                    steps.push(Step {
                        vertex: w,
                        colour: next,
                    });
                }
            }
            sets[to].insert(c);
            for &w in parts[to] {
                if inst.beta.get(w) == c && cur[w] != c {
                    cur[w] = c;
                    steps.push(Step { vertex: w, colour: c });
                }
            }
        }
        if !feasible {
            continue;
        }
        for (w, slot) in cur.iter_mut().enumerate() {
            let target = inst.beta.get(w);
            if *slot != target {
                *slot = target;
                steps.push(Step {
                    vertex: w,
                    colour: target,
                });
            }
        }
        if best.as_ref().is_none_or(|b| steps.len() < b.len()) {
            best = Some(steps);
        }
    }
    RecolouringSequence {
        start: inst.alpha,
        steps: best.expect("some crossing order is feasible"),
    }
}

fn permutations(items: &[Colour]) -> Vec<Vec<Colour>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}
