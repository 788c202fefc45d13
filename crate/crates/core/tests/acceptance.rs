//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact; the pinned instance ranges, seeds and counts
//! are the constants below. Criteria 1 to 11 run once in a 4-thread pool
//! and again in a 1-thread pool, and criterion 12 compares the two sets of
//! reports byte for byte.
//!
//! The target runs without the libtest harness so the lines are printed
//! even when everything passes.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use recolour::checks::{self, CheckOptions, CheckReport};
use recolour::colouring::{is_frozen, is_proper, Colour, Colouring, ListAssignment, Palette};
use recolour::explorer::{
    distance, hamiltonian_cycle, metrics, neighbours, verify_sequence, HamiltonOutcome, ReconfigurationGraph,
    DEFAULT_STATE_BUDGET,
};
use recolour::graph::{
    complete_bipartite, complete_bipartite_minus_matching, frozen_list_instance, layered_example, path, Graph,
};
use recolour::kpq::{diameter_interval, extremal_pair, upper_bound_formula, KpqInstance, KpqRecolourer};
use recolour::renaming::optimal_renaming;

const BUDGET: u64 = DEFAULT_STATE_BUDGET;
/// Criterion 3 and 7 instance range.
const INTERVAL_KS: [Colour; 2] = [4, 5];
const INTERVAL_MAX_N: usize = 8;
/// Criterion 5.
const RENAMING_INSTANCES: usize = 10_000;
const RENAMING_MAX_N: usize = 10;
const RENAMING_SEED: u64 = 0x0ddba11;
/// Criterion 6 instance range.
const ALL_PAIRS_KS: [Colour; 3] = [3, 4, 5];
const ALL_PAIRS_MAX_N: usize = 6;
/// Criterion 11.
const PATH_MAX_N: usize = 8;

struct Outcome {
    lines: Vec<String>,
    passed: bool,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            lines: Vec::new(),
            passed: true,
        }
    }

    fn check(&mut self, ok: bool, line: String) {
        self.passed &= ok;
        self.lines.push(if ok { line } else { format!("{line} MISMATCH") });
    }

    fn absorb(&mut self, r: CheckReport) {
        self.passed &= r.passed;
        self.lines.extend(r.lines);
    }

    fn render(&self) -> String {
        self.lines.iter().map(|l| format!("    {l}\n")).collect()
    }
}

fn opts(full: bool) -> CheckOptions {
    CheckOptions { budget: BUDGET, full }
}

fn pairs(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=max_n).flat_map(|n| (1..=n / 2).map(move |p| (p, n - p)))
}

fn c1_example_4_2() -> Outcome {
    let mut o = Outcome::new();
    o.absorb(checks::example_4_2(&opts(false)).unwrap());
    // Without the symmetry reduction, as an independent cross-check.
    let m = metrics(&layered_example(), &Palette::Uniform(3), false, BUDGET).unwrap();
    o.check(
        m.diameter.finite() == Some(15) && m.radius.finite() == Some(15),
        format!("k=3 no-symmetry diam={} rad={}", m.diameter, m.radius),
    );
    o
}

fn c2_prop_1_2() -> Outcome {
    let mut o = Outcome::new();
    for (p, q) in pairs(7) {
        let m = metrics(&complete_bipartite(p, q).unwrap(), &Palette::Uniform(3), false, BUDGET).unwrap();
        let expected = 3 * (p + q) as u64 / 2;
        o.check(
            m.diameter.finite() == Some(expected),
            format!("p={p} q={q} diam={} expected={expected}", m.diameter),
        );
    }
    o
}

fn c3_interval() -> Outcome {
    let mut o = Outcome::new();
    for k in INTERVAL_KS {
        for (p, q) in pairs(INTERVAL_MAX_N) {
            let inst = KpqInstance::new(k, p, q).unwrap();
            let d = diameter_interval(&inst);
            let m = metrics(&inst.graph(), &Palette::Uniform(k), true, BUDGET).unwrap();
            let diam = m.diameter.finite().expect("C_k(K_{p,q}) is connected for k >= 3");
            let ok = d.lower <= diam && diam <= d.upper && (!d.exact || diam == d.upper);
            o.check(
                ok,
                format!(
                    "k={k} p={p} q={q} diam={diam} interval=[{},{}] exact={}",
                    d.lower, d.upper, d.exact
                ),
            );
        }
    }
    o
}

fn c4_example_4_1() -> Outcome {
    let mut o = Outcome::new();
    o.absorb(checks::example_4_1(&opts(false)).unwrap());
    o
}

fn random_renaming_instance(rng: &mut ChaCha8Rng) -> (Graph, Colouring, Colouring, Colour) {
    let n = rng.gen_range(1..=RENAMING_MAX_N);
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, edges).unwrap();
    let k = (g.max_degree() + 1 + rng.gen_range(0..=2)) as Colour;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut a = vec![0; n];
    for &v in &order {
        let free: Vec<Colour> = (1..=k)
            .filter(|&c| g.neighbours(v).iter().all(|&w| a[w] != c))
            .collect();
        a[v] = *free.choose(rng).expect("k exceeds the maximum degree");
    }
    let mut image: Vec<Colour> = (1..=k).collect();
    image.shuffle(rng);
    let b = a.iter().map(|&c| image[c as usize - 1]).collect();
    (g, Colouring::new(a), Colouring::new(b), k + 1)
}

fn c5_renaming() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(RENAMING_SEED);
    let (mut valid, mut within, mut twice, mut longest) = (0, 0, 0, 0);
    let mut digest = DefaultHasher::new();
    for _ in 0..RENAMING_INSTANCES {
        let (g, a, b, ell) = random_renaming_instance(&mut rng);
        let seq = optimal_renaming(&g, &a, &b, ell).unwrap();
        let report = verify_sequence(&g, &Palette::Uniform(ell), &seq, &b);
        valid += report.valid as usize;
        within += (seq.len() <= 3 * g.n() / 2) as usize;
        twice += (report.max_per_vertex() <= 2) as usize;
        longest = longest.max(seq.len());
        for s in &seq.steps {
            (s.vertex, s.colour).hash(&mut digest);
        }
    }
    let all = RENAMING_INSTANCES;
    o.check(
        valid == all && within == all && twice == all,
        format!(
            "instances={all} valid={valid} within_3n/2={within} per_vertex_le_2={twice} longest={longest} digest={:016x}",
            digest.finish()
        ),
    );

    let k2 = path(2).unwrap();
    let (a, b) = (Colouring::new(vec![1, 2]), Colouring::new(vec![2, 1]));
    let bfs = distance(&k2, &Palette::Uniform(3), &a, &b, BUDGET).unwrap().length();
    let built = optimal_renaming(&k2, &a, &b, 3).unwrap().len();
    o.check(
        bfs == Some(3) && built == 3,
        format!("K2 witness bfs={bfs:?} constructed={built} bound=3"),
    );
    o
}

fn c6_all_pairs() -> Outcome {
    let mut o = Outcome::new();
    for k in ALL_PAIRS_KS {
        for (p, q) in pairs(ALL_PAIRS_MAX_N) {
            let inst = KpqInstance::new(k, p, q).unwrap();
            let g = inst.graph();
            let palette = Palette::Uniform(k);
            let rg = ReconfigurationGraph::build(&g, &palette, BUDGET).unwrap();
            let nodes: Vec<Colouring> = (0..rg.node_count() as u32).map(|id| rg.colouring(id)).collect();
            let bound = upper_bound_formula(&inst);
            let mut rec = KpqRecolourer::new(&inst).unwrap();
            let mut digest = DefaultHasher::new();
            let (mut bad_verify, mut over_bound, mut under_bfs) = (0u64, 0u64, 0u64);
            let (mut longest, mut optimal) = (0, 0u64);
            for (src, a) in nodes.iter().enumerate() {
                let dist = rg.distances_from(src as u32);
                for (tgt, b) in nodes.iter().enumerate() {
                    let seq = rec.recolour(a, b).unwrap();
                    let len = seq.len();
                    bad_verify += !verify_sequence(&g, &palette, &seq, b).valid as u64;
                    over_bound += (len as u64 > bound) as u64;
                    under_bfs += (len < dist[tgt] as usize) as u64;
                    optimal += (len == dist[tgt] as usize) as u64;
                    longest = longest.max(len);
                    for s in &seq.steps {
                        (s.vertex, s.colour).hash(&mut digest);
                    }
                }
            }
            let total = nodes.len() as u64 * nodes.len() as u64;
            o.check(
                bad_verify == 0 && over_bound == 0 && under_bfs == 0,
                format!(
                    "k={k} p={p} q={q} pairs={total} bound={bound} longest={longest} optimal={optimal} \
                     invalid={bad_verify} over_bound={over_bound} below_bfs={under_bfs} digest={:016x}",
                    digest.finish()
                ),
            );
        }
    }
    o
}

fn c7_extremal() -> Outcome {
    let mut o = Outcome::new();
    for k in INTERVAL_KS {
        for (p, q) in pairs(INTERVAL_MAX_N) {
            let inst = KpqInstance::new(k, p, q).unwrap();
            let (a, b, _) = extremal_pair(&inst);
            let d = diameter_interval(&inst);
            let dist = distance(&inst.graph(), &Palette::Uniform(k), &a, &b, BUDGET).unwrap();
            let len = dist.length().expect("C_k(K_{p,q}) is connected for k >= 3") as u64;
            o.check(
                len >= d.lower,
                format!(
                    "k={k} p={p} q={q} extremal_distance={len} lower={} upper={}",
                    d.lower, d.upper
                ),
            );
        }
    }
    o
}

fn c8_frozen() -> Outcome {
    let mut o = Outcome::new();
    for m in [4, 5] {
        let (g, lists, phi) = frozen_list_instance(m).unwrap();
        let palette = Palette::Lists(lists);
        let frozen = is_frozen(&g, &phi, &palette).unwrap();
        let isolated = neighbours(&g, &palette, &phi).unwrap().is_empty();
        o.check(
            frozen && isolated,
            format!("m={m} lists frozen={frozen} no_neighbours={isolated}"),
        );

        // v_i and w_i both get colour i; every other colour sits on a neighbour.
        let g = complete_bipartite_minus_matching(m).unwrap();
        let half: Vec<Colour> = (1..=m as Colour).collect();
        let c = Colouring::new(half.iter().chain(&half).copied().collect());
        let palette = Palette::Uniform(m as Colour);
        let proper = is_proper(&g, &c).unwrap();
        let frozen = is_frozen(&g, &c, &palette).unwrap();
        let isolated = neighbours(&g, &palette, &c).unwrap().is_empty();
        o.check(
            proper && frozen && isolated,
            format!("m={m} uniform k={m} proper={proper} frozen={frozen} no_neighbours={isolated}"),
        );
    }
    o
}

fn c9_gadgets() -> Outcome {
    let mut o = Outcome::new();
    let r = checks::gadget_forcing(&opts(true)).unwrap();
    let pinned = r
        .lines
        .iter()
        .any(|l| l.starts_with("t=4 s=4 ") && l.ends_with("extending=1 forced=1,5,9,13"));
    o.absorb(r);
    o.check(pinned, "gadget (4,4) forces 1,5,9,13".to_string());
    o
}

fn c10_k18() -> Outcome {
    let mut o = Outcome::new();
    o.absorb(checks::k18_formula().unwrap());
    o
}

fn c11_paths() -> Outcome {
    let mut o = Outcome::new();
    for n in 1..=PATH_MAX_N {
        let g = path(n).unwrap();
        let disjoint: Vec<Vec<Colour>> = (0..n as Colour).map(|i| vec![2 * i + 1, 2 * i + 2]).collect();
        let palette = Palette::Lists(ListAssignment::new(disjoint).unwrap());
        let lists = metrics(&g, &palette, false, BUDGET).unwrap();
        o.check(
            lists.diameter.finite() == Some(n as u64),
            format!("n={n} disjoint lists diam={}", lists.diameter),
        );

        let three = metrics(&g, &Palette::Uniform(3), true, BUDGET).unwrap();
        let diam = three.diameter.finite().expect("C_3 of a path is connected");
        let (lo, hi) = ((n * n - 1) as u64 / 4, 2 * (n * n) as u64);
        o.check(
            lo <= diam && diam <= hi,
            format!("n={n} k=3 diam={diam} range=[{lo},{hi}]"),
        );
    }
    o
}

type Criterion = (u32, &'static str, fn() -> Outcome);

const CRITERIA: [Criterion; 11] = [
    (1, "layered graph metrics", c1_example_4_2),
    (2, "C_3(K_{p,q}) diameter for p+q <= 7", c2_prop_1_2),
    (3, "explorer diameter inside the formula interval", c3_interval),
    (4, "C_k(K_{m,m} - M) connectivity table", c4_example_4_1),
    (5, "optimal renaming on random instances", c5_renaming),
    (6, "certified K_{p,q} constructions on all pairs", c6_all_pairs),
    (7, "extremal pairs reach the lower bound", c7_extremal),
    (8, "frozen colourings", c8_frozen),
    (9, "list-forcing gadgets", c9_gadgets),
    (10, "K_{18,18} formula pin and witness", c10_k18),
    (11, "path baselines", c11_paths),
];

fn run_all(threads: usize) -> Vec<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
    pool.install(|| CRITERIA.iter().map(|(_, _, f)| f()).collect())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Runs criteria 1 to 12 and returns whether all passed.
fn acceptance() -> bool {
    let first = run_all(4);
    let mut all_ok = true;
    for ((id, name, _), o) in CRITERIA.iter().zip(&first) {
        print!("{}", o.render());
        println!("{} criterion {id}: {name}", verdict(o.passed));
        all_ok &= o.passed;
    }

    let second = run_all(1);
    let mut differing = Vec::new();
    for ((id, _, _), (a, b)) in CRITERIA.iter().zip(first.iter().zip(&second)) {
        if a.render() != b.render() || a.passed != b.passed {
            differing.push(id.to_string());
        }
    }
    let same = differing.is_empty();
    println!(
        "    reports compared across 4-thread and 1-thread runs, differing: [{}]",
        differing.join(",")
    );
    println!(
        "{} criterion 12: byte-identical reports across runs and worker counts",
        verdict(same)
    );
    all_ok && same
}

/// Long-running: Hamiltonicity of `C_3(K_{5,5} - M)`.
fn hamiltonian_k55_minus_matching() -> bool {
    let g = complete_bipartite_minus_matching(5).unwrap();
    let outcome = hamiltonian_cycle(&g, &Palette::Uniform(3), 1 << 34, BUDGET).unwrap();
    let length = match &outcome {
        HamiltonOutcome::Found(cycle) => Some(cycle.len()),
        _ => None,
    };
    println!(
        "{} C_3(K_{{5,5}} - M) Hamiltonian cycle length {length:?}",
        verdict(length.is_some())
    );
    length.is_some()
}

/// Plain `main` so the criterion lines always reach the output. Pass
/// `--ignored` to run only the long Hamiltonicity search, or
/// `--include-ignored` to add it.
fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let only_ignored = args.iter().any(|a| a == "--ignored");
    let with_ignored = only_ignored || args.iter().any(|a| a == "--include-ignored");
    let mut ok = true;
    if !only_ignored {
        ok &= acceptance();
    }
    if with_ignored {
        ok &= hamiltonian_k55_minus_matching();
    }
    if !ok {
        eprintln!("at least one acceptance criterion failed");
        std::process::exit(1);
    }
}
