//! Parameter triples `(k, k', k'')` and the domination predicate.
//!
//! A set `S` is `(k, k', k'')`-dominating when every member of `S` has at
//! least `k` neighbors in `S`, and every vertex outside `S` has at least `k'`
//! neighbors in `S` and at least `k''` neighbors outside `S`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("expected \"k,k',k''\" with three nonnegative integers, got {0:?}")]
    Malformed(String),
    #[error("unknown parameter name {0:?}")]
    UnknownName(String),
    #[error("{0} needs an order k")]
    MissingOrder(&'static str),
    #[error("k_tuple requires k >= 1")]
    TupleOrderZero,
}

/// The triple `(k, k', k'')`. Nonnegativity is carried by the types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 3]", into = "[usize; 3]")]
pub struct ParamTriple {
    /// Minimum number of neighbors in `S` for members of `S`.
    pub k: usize,
    /// Minimum number of neighbors in `S` for vertices outside `S`.
    pub kp: usize,
    /// Minimum number of neighbors outside `S` for vertices outside `S`.
    pub kpp: usize,
}

impl ParamTriple {
    pub const fn new(k: usize, kp: usize, kpp: usize) -> Self {
        ParamTriple { k, kp, kpp }
    }

    /// True when `self` asks no more than `other` in every coordinate.
    pub fn relaxes(&self, other: &ParamTriple) -> bool {
        self.k <= other.k && self.kp <= other.kp && self.kpp <= other.kpp
    }
}

impl From<[usize; 3]> for ParamTriple {
    fn from([k, kp, kpp]: [usize; 3]) -> Self {
        ParamTriple { k, kp, kpp }
    }
}

impl From<ParamTriple> for [usize; 3] {
    fn from(p: ParamTriple) -> Self {
        [p.k, p.kp, p.kpp]
    }
}

impl fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.k, self.kp, self.kpp)
    }
}

impl FromStr for ParamTriple {
    type Err = ParamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[k, kp, kpp]) => Ok(ParamTriple::new(k, kp, kpp)),
            _ => Err(ParamError::Malformed(s.to_string())),
        }
    }
}

/// The named domination parameters that are specializations of the triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedParameter {
    Restrained,
    TotalRestrained,
    RestrainedDouble,
    KTupleTotalRestrained(usize),
    KTupleTotal(usize),
    KTuple(usize),
    KDomination(usize),
}

impl NamedParameter {
    pub fn triple(&self) -> Result<ParamTriple, ParamError> {
        Ok(match *self {
            NamedParameter::Restrained => ParamTriple::new(0, 1, 1),
            NamedParameter::TotalRestrained => ParamTriple::new(1, 1, 1),
            NamedParameter::RestrainedDouble => ParamTriple::new(1, 2, 1),
            NamedParameter::KTupleTotalRestrained(k) => ParamTriple::new(k, k, k),
            NamedParameter::KTupleTotal(k) => ParamTriple::new(k, k, 0),
            NamedParameter::KTuple(0) => return Err(ParamError::TupleOrderZero),
            NamedParameter::KTuple(k) => ParamTriple::new(k - 1, k, 0),
            NamedParameter::KDomination(k) => ParamTriple::new(0, k, 0),
        })
    }
}

/// Looks up a named parameter; the order `k` is required exactly for the
/// four families indexed by it.
pub fn named(name: &str, k: Option<usize>) -> Result<ParamTriple, ParamError> {
    let need = |label: &'static str| k.ok_or(ParamError::MissingOrder(label));
    let param = match name {
        "restrained" => NamedParameter::Restrained,
        "total_restrained" => NamedParameter::TotalRestrained,
        "restrained_double" => NamedParameter::RestrainedDouble,
        "k_tuple_total_restrained" => {
            NamedParameter::KTupleTotalRestrained(need("k_tuple_total_restrained")?)
        }
        "k_tuple_total" => NamedParameter::KTupleTotal(need("k_tuple_total")?),
        "k_tuple" => NamedParameter::KTuple(need("k_tuple")?),
        "k_domination" => NamedParameter::KDomination(need("k_domination")?),
        other => return Err(ParamError::UnknownName(other.to_string())),
    };
    param.triple()
}

/// Which of the three neighbor-count requirements a vertex fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// Member of `S` with fewer than `k` neighbors in `S`.
    #[serde(rename = "k in-S neighbors")]
    MemberInside,
    /// Non-member with fewer than `k'` neighbors in `S`.
    #[serde(rename = "k' in-S neighbors")]
    OutsiderInside,
    /// Non-member with fewer than `k''` neighbors outside `S`.
    #[serde(rename = "k'' out-of-S neighbors")]
    OutsiderOutside,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::MemberInside => "k in-S neighbors",
            Condition::OutsiderInside => "k' in-S neighbors",
            Condition::OutsiderOutside => "k'' out-of-S neighbors",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    pub condition: Condition,
    pub have: usize,
    pub need: usize,
}

pub fn is_dominating(g: &Graph, s: &VertexSet, p: ParamTriple) -> bool {
    debug_assert_eq!(s.universe(), g.n());
    (0..g.n()).all(|v| {
        let inside = g.neighbor_set(v).intersection_len(s);
        if s.contains(v) {
            inside >= p.k
        } else {
            inside >= p.kp && g.degree(v) - inside >= p.kpp
        }
    })
}

/// Every failed requirement, in vertex order. Empty iff `is_dominating`.
pub fn violation_report(g: &Graph, s: &VertexSet, p: ParamTriple) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        let inside = g.neighbor_set(v).intersection_len(s);
        let mut check = |condition, have, need| {
            if have < need {
                out.push(Violation {
                    vertex: v,
                    condition,
                    have,
                    need,
                });
            }
        };
        if s.contains(v) {
            check(Condition::MemberInside, inside, p.k);
        } else {
            check(Condition::OutsiderInside, inside, p.kp);
            check(Condition::OutsiderOutside, g.degree(v) - inside, p.kpp);
        }
    }
    out
}

/// `δ(g) ≥ k`, which makes `S = V` dominating. Sufficient for a dominating
/// set to exist, not necessary.
pub fn trivial_feasible(g: &Graph, p: ParamTriple) -> bool {
    g.min_degree().map_or(true, |d| d >= p.k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::Family;
    use proptest::prelude::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    fn p4() -> Graph {
        Family::Path { n: 4 }.generate(0).unwrap()
    }

    fn c4() -> Graph {
        Family::Cycle { n: 4 }.generate(0).unwrap()
    }

    const RESTRAINED: ParamTriple = ParamTriple::new(0, 1, 1);

    #[test]
    fn whole_vertex_set_dominates_when_min_degree_suffices() {
        let k4 = Family::Complete { n: 4 }.generate(0).unwrap();
        assert!(is_dominating(
            &k4,
            &VertexSet::full(4),
            ParamTriple::new(3, 9, 9)
        ));
        assert!(!is_dominating(
            &k4,
            &VertexSet::full(4),
            ParamTriple::new(4, 0, 0)
        ));
    }

    #[test]
    fn path_examples() {
        let g = p4();
        assert!(is_dominating(&g, &set(4, &[0, 3]), RESTRAINED));
        assert!(!is_dominating(&g, &set(4, &[1]), RESTRAINED));
        assert_eq!(
            violation_report(&g, &set(4, &[1]), RESTRAINED),
            vec![
                Violation {
                    vertex: 0,
                    condition: Condition::OutsiderOutside,
                    have: 0,
                    need: 1
                },
                Violation {
                    vertex: 3,
                    condition: Condition::OutsiderInside,
                    have: 0,
                    need: 1
                },
            ]
        );
    }

    #[test]
    fn cycle_total_restrained() {
        let g = c4();
        let s = set(4, &[0, 1]);
        assert!(is_dominating(&g, &s, ParamTriple::new(1, 1, 1)));
        assert!(violation_report(&g, &s, ParamTriple::new(1, 1, 1)).is_empty());
    }

    #[test]
    fn star_center_fails_outside_condition_for_every_leaf() {
        let g = Family::Star { n: 4 }.generate(0).unwrap();
        let report = violation_report(&g, &set(4, &[0]), RESTRAINED);
        assert_eq!(report.len(), 3);
        for (leaf, viol) in (1..4).zip(&report) {
            assert_eq!(viol.vertex, leaf);
            assert_eq!(viol.condition, Condition::OutsiderOutside);
            assert_eq!((viol.have, viol.need), (0, 1));
        }
    }

    #[test]
    fn empty_set_rule() {
        let g = c4();
        let none = VertexSet::empty(4);
        assert!(is_dominating(&g, &none, ParamTriple::new(0, 0, 1)));
        assert!(is_dominating(&g, &none, ParamTriple::new(5, 0, 2)));
        assert!(!is_dominating(&g, &none, ParamTriple::new(0, 0, 3)));
        assert!(!is_dominating(&g, &none, ParamTriple::new(0, 1, 0)));
    }

    #[test]
    fn trivial_feasibility() {
        let k4 = Family::Complete { n: 4 }.generate(0).unwrap();
        assert!(trivial_feasible(&k4, ParamTriple::new(3, 1, 1)));
        let star = Family::Star { n: 4 }.generate(0).unwrap();
        assert!(!trivial_feasible(&star, ParamTriple::new(2, 1, 0)));
        assert!(trivial_feasible(&p4(), RESTRAINED));
    }

    #[test]
    fn named_parameters() {
        assert_eq!(named("restrained", None), Ok(ParamTriple::new(0, 1, 1)));
        assert_eq!(
            named("total_restrained", None),
            Ok(ParamTriple::new(1, 1, 1))
        );
        assert_eq!(
            named("restrained_double", None),
            Ok(ParamTriple::new(1, 2, 1))
        );
        assert_eq!(
            named("k_tuple_total_restrained", Some(2)),
            Ok(ParamTriple::new(2, 2, 2))
        );
        assert_eq!(
            named("k_tuple_total", Some(2)),
            Ok(ParamTriple::new(2, 2, 0))
        );
        assert_eq!(named("k_tuple", Some(3)), Ok(ParamTriple::new(2, 3, 0)));
        assert_eq!(
            named("k_domination", Some(2)),
            Ok(ParamTriple::new(0, 2, 0))
        );
        assert_eq!(named("k_tuple", Some(0)), Err(ParamError::TupleOrderZero));
        assert_eq!(
            named("k_tuple", None),
            Err(ParamError::MissingOrder("k_tuple"))
        );
        assert!(matches!(
            named("roman", None),
            Err(ParamError::UnknownName(_))
        ));
    }

    #[test]
    fn triple_text_forms() {
        assert_eq!("1,2,1".parse(), Ok(ParamTriple::new(1, 2, 1)));
        assert_eq!(ParamTriple::new(0, 1, 1).to_string(), "0,1,1");
        assert!("1,2".parse::<ParamTriple>().is_err());
        assert!("1,-2,1".parse::<ParamTriple>().is_err());
        assert_eq!(
            serde_json::to_string(&ParamTriple::new(2, 3, 0)).unwrap(),
            "[2,3,0]"
        );
        let back: ParamTriple = serde_json::from_str("[2,3,0]").unwrap();
        assert_eq!(back, ParamTriple::new(2, 3, 0));
    }

    /// Straight per-vertex loop over neighbor lists and a boolean mask.
    fn loop_oracle(g: &Graph, mask: &[bool], p: ParamTriple) -> bool {
        for v in 0..g.n() {
            let mut inside = 0;
            let mut outside = 0;
            for &w in g.neighbors(v) {
                if mask[w] {
                    inside += 1;
                } else {
                    outside += 1;
                }
            }
            let ok = if mask[v] {
                inside >= p.k
            } else {
                inside >= p.kp && outside >= p.kpp
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn instance() -> impl Strategy<Value = (Graph, Vec<bool>, ParamTriple)> {
        (1usize..=12, 0.0f64..1.0, any::<u64>()).prop_flat_map(|(n, p, seed)| {
            let g = Family::RandomGnp { n, p }.generate(seed).unwrap();
            (
                Just(g),
                proptest::collection::vec(any::<bool>(), n),
                (0usize..4, 0usize..4, 0usize..4).prop_map(|(a, b, c)| ParamTriple::new(a, b, c)),
            )
        })
    }

    proptest! {
        #[test]
        fn bitset_predicate_matches_loop((g, mask, p) in instance()) {
            let s = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| mask[v])).unwrap();
            let fast = is_dominating(&g, &s, p);
            prop_assert_eq!(fast, loop_oracle(&g, &mask, p));
            prop_assert_eq!(fast, violation_report(&g, &s, p).is_empty());
        }

        #[test]
        fn relaxation_is_monotone((g, mask, p) in instance(), da in 0usize..4, db in 0usize..4, dc in 0usize..4) {
            let s = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| mask[v])).unwrap();
            if is_dominating(&g, &s, p) {
                let weaker = ParamTriple::new(
                    p.k.saturating_sub(da),
                    p.kp.saturating_sub(db),
                    p.kpp.saturating_sub(dc),
                );
                prop_assert!(weaker.relaxes(&p));
                prop_assert!(is_dominating(&g, &s, weaker));
            }
        }

        #[test]
        fn full_set_dominates_iff_min_degree((g, _mask, p) in instance()) {
            prop_assert_eq!(
                is_dominating(&g, &VertexSet::full(g.n()), p),
                g.min_degree().unwrap() >= p.k
            );
        }
    }
}
