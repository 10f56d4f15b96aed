//! Closed-form lower bounds on the `(k, k', k'')`-domination number, the
//! earlier bounds they improve on, and a combined [`BoundReport`].
//!
//! All arithmetic is on exact rationals. A bound's integer value is the
//! ceiling of its rational, clamped at zero; the rational is kept alongside
//! so that dominance between bounds is compared exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::construction::{construct_best, Part};
use crate::graph::Graph;
use crate::params::ParamTriple;

pub type Rational = Ratio<i64>;

fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// A lower bound as an exact rational and its (nonnegative) ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundValue {
    pub raw: Rational,
    pub value: usize,
}

impl BoundValue {
    pub fn new(raw: Rational) -> Self {
        BoundValue {
            raw,
            value: raw.ceil().to_integer().max(0) as usize,
        }
    }

    fn exact(v: usize) -> Self {
        BoundValue::new(Rational::from_integer(v as i64))
    }
}

/// `min{deg(v) : deg(v) >= k' + k''}`, or `None` when no vertex qualifies.
pub fn delta_star(g: &Graph, p: ParamTriple) -> Option<usize> {
    let threshold = p.kp + p.kpp;
    (0..g.n())
        .map(|v| g.degree(v))
        .filter(|&d| d >= threshold)
        .min()
}

/// Result of the general lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneralBound {
    /// `((k' + δ*) n - 2m) / (δ* + k' - k)`.
    Formula(BoundValue),
    /// No vertex has degree `k' + k''`, so no vertex can be left out of `S`
    /// and the bound is `n`.
    NoOutsiders(BoundValue),
}

impl GeneralBound {
    pub fn bound(&self) -> BoundValue {
        match *self {
            GeneralBound::Formula(b) | GeneralBound::NoOutsiders(b) => b,
        }
    }
}

/// `γ ≥ ((k' + δ*) n - 2m) / (δ* + k' - k)` for graphs with `δ ≥ k`.
///
/// `None` when `δ < k`, when the graph is empty, or when the denominator is
/// not positive (only possible for `k' = 0`).
pub fn lower_bound_general(g: &Graph, p: ParamTriple) -> Option<GeneralBound> {
    let delta = g.min_degree().ok()?;
    if delta < p.k {
        return None;
    }
    let Some(ds) = delta_star(g, p) else {
        return Some(GeneralBound::NoOutsiders(BoundValue::exact(g.n())));
    };
    let (n, m) = (g.n() as i64, g.m() as i64);
    let (k, kp) = (p.k as i64, p.kp as i64);
    let den = ds as i64 + kp - k;
    if den <= 0 {
        return None;
    }
    let num = (kp + ds as i64) * n - 2 * m;
    Some(GeneralBound::Formula(BoundValue::new(ratio(num, den))))
}

/// `γ(k, k', 0) ≥ k' n / (Δ + k' - k)` for graphs with `δ ≥ k`.
pub fn lower_bound_kp_zero(g: &Graph, p: ParamTriple) -> Option<BoundValue> {
    if p.kpp != 0 {
        return None;
    }
    let delta = g.min_degree().ok()?;
    let max_deg = g.max_degree().ok()?;
    if delta < p.k {
        return None;
    }
    let den = (max_deg + p.kp) as i64 - p.k as i64;
    if den <= 0 {
        return None;
    }
    Some(BoundValue::new(ratio((p.kp * g.n()) as i64, den)))
}

/// Earlier lower bounds from the literature, each tied to one named
/// specialization and its own hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PriorBound {
    /// `γ_t^r ≥ 3n/2 - m`, no isolated vertices.
    Eq3,
    /// `γ_r ≥ n - 2m/3`.
    Eq4,
    /// `γ_t^r(T) ≥ ⌈(n+2)/2⌉`, trees with `n >= 2`.
    Eq5Tree,
    /// `γ_r(T) ≥ ⌈(n+2)/3⌉`, trees.
    Eq6Tree,
    /// `γ_{×k,t}^r ≥ 3n/2 - m/k`, `δ >= k`.
    Eq7,
    /// `γ_2r ≥ (5n - 2m)/4`, no isolated vertices.
    Eq8,
    /// `γ_{×k} ≥ (2kn - 2m)/(k+1)`, `δ >= k - 1`.
    HhTuple,
    /// `γ_{×k,t} ≥ 2(n - m/k)`, `δ >= k`.
    ZwxTupleTotal,
    /// `γ_k ≥ n - m/k`.
    Fj2Kdom,
    /// `γ_{×k,t} ≥ kn/Δ`, `δ >= k`.
    HkZwxRatio,
    /// `γ_{×k} ≥ kn/(Δ+1)`, `δ >= k - 1`.
    HhRatio,
    /// `γ_k ≥ kn/(Δ+k)`.
    Fj1Ratio,
}

impl PriorBound {
    pub const ALL: [PriorBound; 12] = [
        PriorBound::Eq3,
        PriorBound::Eq4,
        PriorBound::Eq5Tree,
        PriorBound::Eq6Tree,
        PriorBound::Eq7,
        PriorBound::Eq8,
        PriorBound::HhTuple,
        PriorBound::ZwxTupleTotal,
        PriorBound::Fj2Kdom,
        PriorBound::HkZwxRatio,
        PriorBound::HhRatio,
        PriorBound::Fj1Ratio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PriorBound::Eq3 => "eq3",
            PriorBound::Eq4 => "eq4",
            PriorBound::Eq5Tree => "eq5_tree",
            PriorBound::Eq6Tree => "eq6_tree",
            PriorBound::Eq7 => "eq7",
            PriorBound::Eq8 => "eq8",
            PriorBound::HhTuple => "hh_tuple",
            PriorBound::ZwxTupleTotal => "zwx_tuple_total",
            PriorBound::Fj2Kdom => "fj2_kdom",
            PriorBound::HkZwxRatio => "hk_zwx_ratio",
            PriorBound::HhRatio => "hh_ratio",
            PriorBound::Fj1Ratio => "fj1_ratio",
        }
    }

    /// Ratio bounds are improved on by the `k'' = 0` bound; all others by
    /// the general bound.
    pub fn is_ratio(self) -> bool {
        matches!(
            self,
            PriorBound::HkZwxRatio | PriorBound::HhRatio | PriorBound::Fj1Ratio
        )
    }

    /// The bound's rational value, or `None` when `p` is not its
    /// specialization or `g` fails its hypothesis. The tree bounds return
    /// `(n+2)/2` and `(n+2)/3` before the ceiling.
    pub fn evaluate(self, g: &Graph, p: ParamTriple) -> Option<Rational> {
        let n = g.n() as i64;
        let m = g.m() as i64;
        let delta = g.min_degree().ok()?;
        let max_deg = g.max_degree().ok()? as i64;
        let no_isolated = delta >= 1;
        let ParamTriple { k, kp, kpp } = p;
        let order = kp as i64;
        match self {
            PriorBound::Eq3 if (k, kp, kpp) == (1, 1, 1) && no_isolated => {
                Some(ratio(3 * n, 2) - m)
            }
            PriorBound::Eq4 if (k, kp, kpp) == (0, 1, 1) => Some(ratio(3 * n - 2 * m, 3)),
            PriorBound::Eq5Tree if (k, kp, kpp) == (1, 1, 1) && n >= 2 && g.is_tree() => {
                Some(ratio(n + 2, 2))
            }
            PriorBound::Eq6Tree if (k, kp, kpp) == (0, 1, 1) && g.is_tree() => {
                Some(ratio(n + 2, 3))
            }
            PriorBound::Eq7 if k >= 1 && k == kp && kp == kpp && delta >= k => {
                Some(ratio(3 * n, 2) - ratio(m, order))
            }
            PriorBound::Eq8 if (k, kp, kpp) == (1, 2, 1) && no_isolated => {
                Some(ratio(5 * n - 2 * m, 4))
            }
            PriorBound::HhTuple if kp >= 1 && k + 1 == kp && kpp == 0 && delta + 1 >= kp => {
                Some(ratio(2 * order * n - 2 * m, order + 1))
            }
            PriorBound::ZwxTupleTotal if k >= 1 && k == kp && kpp == 0 && delta >= k => {
                Some(ratio(2 * (order * n - m), order))
            }
            PriorBound::Fj2Kdom if k == 0 && kp >= 1 && kpp == 0 => {
                Some(ratio(order * n - m, order))
            }
            PriorBound::HkZwxRatio if k >= 1 && k == kp && kpp == 0 && delta >= k => {
                Some(ratio(order * n, max_deg))
            }
            PriorBound::HhRatio if kp >= 1 && k + 1 == kp && kpp == 0 && delta + 1 >= kp => {
                Some(ratio(order * n, max_deg + 1))
            }
            PriorBound::Fj1Ratio if k == 0 && kp >= 1 && kpp == 0 => {
                Some(ratio(order * n, max_deg + order))
            }
            _ => None,
        }
    }
}

impl fmt::Display for PriorBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for PriorBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Every prior bound, present exactly when applicable.
pub fn prior_bounds(g: &Graph, p: ParamTriple) -> BTreeMap<PriorBound, Option<BoundValue>> {
    PriorBound::ALL
        .into_iter()
        .map(|b| (b, b.evaluate(g, p).map(BoundValue::new)))
        .collect()
}

/// One prior bound compared against the bound that is meant to improve it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DominanceCheck {
    pub prior: PriorBound,
    pub prior_raw: Rational,
    pub improved_raw: Rational,
}

impl DominanceCheck {
    /// Exact comparison of the rationals and of their ceilings.
    pub fn holds(&self) -> bool {
        self.improved_raw >= self.prior_raw
            && BoundValue::new(self.improved_raw).value >= BoundValue::new(self.prior_raw).value
    }
}

/// All bounds for one `(graph, triple)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub triple: ParamTriple,
    pub n: usize,
    pub m: usize,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub delta_star: Option<usize>,
    pub lb_general: Option<GeneralBound>,
    pub lb_kp_zero: Option<BoundValue>,
    pub prior: BTreeMap<PriorBound, Option<BoundValue>>,
    pub ub_construct: Option<usize>,
    pub ub_part: Option<Part>,
}

impl BoundReport {
    /// The strongest applicable lower bound.
    pub fn best_lower(&self) -> Option<usize> {
        let general = self.lb_general.map(|b| b.bound().value);
        general.max(self.lb_kp_zero.map(|b| b.value))
    }

    /// Pairs each applicable prior bound with the bound that improves it.
    pub fn dominance_checks(&self) -> Vec<DominanceCheck> {
        self.prior
            .iter()
            .filter_map(|(&prior, value)| {
                let prior_raw = value.as_ref()?.raw;
                let improved = if prior.is_ratio() {
                    self.lb_kp_zero
                } else {
                    self.lb_general.map(|b| b.bound())
                };
                Some(DominanceCheck {
                    prior,
                    prior_raw,
                    // A missing improving bound cannot dominate anything.
                    improved_raw: improved.map_or(Rational::from_integer(i64::MIN), |b| b.raw),
                })
            })
            .collect()
    }

    pub fn applicability(&self) -> BTreeMap<&'static str, bool> {
        let mut flags = BTreeMap::new();
        flags.insert("lb_general", self.lb_general.is_some());
        flags.insert(
            "lb_general_no_outsiders",
            matches!(self.lb_general, Some(GeneralBound::NoOutsiders(_))),
        );
        flags.insert("lb_kp_zero", self.lb_kp_zero.is_some());
        flags.insert("ub_construct", self.ub_construct.is_some());
        for (prior, value) in &self.prior {
            flags.insert(prior.name(), value.is_some());
        }
        flags
    }

    pub fn to_json(&self) -> serde_json::Value {
        let raw = |r: Option<Rational>| r.map(|r| r.to_string());
        let prior: BTreeMap<_, _> = self
            .prior
            .iter()
            .map(|(b, v)| (b.name(), v.map(|v| v.value)))
            .collect();
        let prior_raw: BTreeMap<_, _> = self
            .prior
            .iter()
            .map(|(b, v)| (b.name(), raw(v.map(|v| v.raw))))
            .collect();
        serde_json::json!({
            "triple": self.triple,
            "n": self.n,
            "m": self.m,
            "delta": self.min_degree,
            "Delta": self.max_degree,
            "delta_star": self.delta_star,
            "lb_general": self.lb_general.map(|b| b.bound().value),
            "lb_kp_zero": self.lb_kp_zero.map(|b| b.value),
            "prior": prior,
            "ub_construct": self.ub_construct,
            "ub_part": self.ub_part,
            "applicability": self.applicability(),
            "raw": {
                "lb_general": raw(self.lb_general.map(|b| b.bound().raw)),
                "lb_kp_zero": raw(self.lb_kp_zero.map(|b| b.raw)),
                "prior": prior_raw,
            },
        })
    }
}

pub fn bound_report(g: &Graph, p: ParamTriple) -> BoundReport {
    let construction = construct_best(g, p);
    BoundReport {
        triple: p,
        n: g.n(),
        m: g.m(),
        min_degree: g.min_degree().ok(),
        max_degree: g.max_degree().ok(),
        delta_star: delta_star(g, p),
        lb_general: lower_bound_general(g, p),
        lb_kp_zero: lower_bound_kp_zero(g, p),
        prior: prior_bounds(g, p),
        ub_construct: construction.as_ref().map(|c| c.size),
        ub_part: construction.map(|c| c.part),
    }
}

/// Renders a rational as a decimal with six places, rounding half away
/// from zero.
pub fn format_decimal(r: Rational) -> String {
    let (num, den) = (*r.numer() as i128, *r.denom() as i128);
    let scaled = num.abs() * 1_000_000;
    let (q, rem) = scaled.div_rem(&den);
    let q = if 2 * rem >= den { q + 1 } else { q };
    let sign = if num < 0 && q != 0 { "-" } else { "" };
    format!("{sign}{}.{:06}", q / 1_000_000, q % 1_000_000)
}
