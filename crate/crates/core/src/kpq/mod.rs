//! Complete bipartite graphs `K_{p,q}`: closed-form diameter bounds for
//! `C_k(K_{p,q})`, the extremal colouring pairs behind the lower bounds, and
//! a constructive recolouring routine that meets the upper bounds.

mod extremal;
mod portfolio;

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::colouring::Colour;
use crate::error::{invalid, Result};
use crate::graph::{complete_bipartite, Graph, Vertex};

pub use extremal::{extremal_pair, ExtremalPairSpec};
pub use portfolio::{
    induction_stats, recolour_kpq, spare_colour_sequence, split_swap_sequence, InductionStats, KpqRecolourer,
    MAX_COLOURS,
};

/// `K_{p,q}` with `p <= q` and `k >= 3` colours. Vertices `0..p` form the
/// small part `U`, vertices `p..p+q` the large part `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KpqInstance {
    pub k: Colour,
    pub p: usize,
    pub q: usize,
}

impl KpqInstance {
    /// Parts are swapped if needed so that `p <= q`.
    pub fn new(k: Colour, p: usize, q: usize) -> Result<Self> {
        if k < 3 {
            return invalid(format!("k = {k} must be at least 3"));
        }
        if p == 0 || q == 0 {
            return invalid("both parts must be non-empty");
        }
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        Ok(KpqInstance { k, p, q })
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn graph(&self) -> Graph {
        complete_bipartite(self.p, self.q).expect("parts are non-empty")
    }

    pub fn u_part(&self) -> Vec<Vertex> {
        (0..self.p).collect()
    }

    pub fn v_part(&self) -> Vec<Vertex> {
        (self.p..self.p + self.q).collect()
    }

    fn ceil_half(&self) -> i64 {
        (self.k as i64 + 1) / 2
    }

    fn quarter_square(&self) -> i64 {
        let k = self.k as i64;
        k * k / 4
    }

    pub fn regime(&self) -> Regime {
        let (k, p, q) = (self.k as usize, self.p, self.q);
        if q > k * p {
            Regime::High
        } else if q > self.ceil_half() as usize * p {
            Regime::Middle
        } else {
            Regime::Low
        }
    }
}

/// The three ranges of `q/p`. `q = kp` is tagged `Middle` and
/// `q = ceil(k/2) p` is tagged `Low`; the adjacent expressions agree there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Regime {
    High,
    Middle,
    Low,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::High => "HIGH",
            Regime::Middle => "MIDDLE",
            Regime::Low => "LOW",
        })
    }
}

/// The three regime expressions, unfloored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegimeBounds {
    /// `2p + q + (q-p)/(k-1)`
    pub high: Ratio<i64>,
    /// `3p + q + (q-kp)/floor(k^2/4)`
    pub middle: Ratio<i64>,
    /// `2p + q + (q-p)/ceil(k/2)`
    pub low: Ratio<i64>,
}

impl RegimeBounds {
    pub fn of(inst: &KpqInstance) -> Self {
        let (k, p, q) = (inst.k as i64, inst.p as i64, inst.q as i64);
        let base = Ratio::from_integer(2 * p + q);
        RegimeBounds {
            high: base + Ratio::new(q - p, k - 1),
            middle: Ratio::from_integer(3 * p + q) + Ratio::new(q - k * p, inst.quarter_square()),
            low: base + Ratio::new(q - p, inst.ceil_half()),
        }
    }

    /// `max{high, min{low, middle}}`, the bound in force for this `q`.
    pub fn active(&self) -> Ratio<i64> {
        self.high.max(self.low.min(self.middle))
    }
}

/// The upper bound on `diam C_k(K_{p,q})` for the instance's regime.
pub fn upper_bound_formula(inst: &KpqInstance) -> u64 {
    let b = RegimeBounds::of(inst);
    let r = match inst.regime() {
        Regime::High => b.high,
        Regime::Middle => b.middle,
        Regime::Low => b.low,
    };
    r.floor().to_integer() as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiameterInterval {
    pub lower: u64,
    pub upper: u64,
    pub regime: Regime,
    pub g_slack: u64,
    pub exact: bool,
}

/// Where `diam C_k(K_{p,q})` is known to lie.
///
/// The slack is `floor(k^2/4)` strictly inside the middle range and
/// `floor(k/2)` in the low range (including its upper end). It vanishes
/// when `q >= kp`, when `k = 3`, and when `p` and `q` are both multiples of
/// `floor(k^2/4)`.
pub fn diameter_interval(inst: &KpqInstance) -> DiameterInterval {
    let upper = upper_bound_formula(inst);
    let regime = inst.regime();
    let m = inst.quarter_square() as usize;
    let exact =
        inst.k == 3 || inst.q >= inst.k as usize * inst.p || (inst.p.is_multiple_of(m) && inst.q.is_multiple_of(m));
    let g_slack = if exact {
        0
    } else {
        match regime {
            Regime::High => 0,
            Regime::Middle => m as u64,
            Regime::Low => inst.k as u64 / 2,
        }
    };
    DiameterInterval {
        lower: upper - g_slack,
        upper,
        regime,
        g_slack,
        exact,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegimeRow {
    pub q: usize,
    pub bounds: RegimeBounds,
}

fn render(r: Ratio<i64>) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl RegimeRow {
    /// `q`, the three expressions and the active one, tab-separated.
    pub fn to_tsv(&self) -> String {
        let b = &self.bounds;
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.q,
            render(b.high),
            render(b.middle),
            render(b.low),
            render(b.active())
        )
    }
}

/// Rows for `q = p..=q_max`.
pub fn regime_table(k: Colour, p: usize, q_max: usize) -> Result<Vec<RegimeRow>> {
    if q_max < p {
        return invalid(format!("q_max = {q_max} is below p = {p}"));
    }
    (p..=q_max)
        .map(|q| {
            let inst = KpqInstance::new(k, p, q)?;
            Ok(RegimeRow {
                q,
                bounds: RegimeBounds::of(&inst),
            })
        })
        .collect()
}

/// Header line matching [`RegimeRow::to_tsv`].
pub const REGIME_TABLE_HEADER: &str = "q\thigh\tmiddle\tlow\tactive";
