//! Verifiers for the labeling and set predicates: these are the ground
//! truth the solvers and all tests are judged against.
//!
//! All checks report every violation, not just the first, so gadget tests
//! can assert exactly which vertex fails.

use crate::graph::{EdgeSet, Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("labeling value {value} at vertex {vertex} is outside {{0,1,2}}")]
    ValueOutOfRange { vertex: usize, value: u8 },
    #[error("labeling has length {len} but the graph has {n} vertices")]
    LengthMismatch { len: usize, n: usize },
    #[error("malformed labeling string {0:?}: expected comma-separated digits 0/1/2")]
    BadCsv(String),
    #[error("vertex set member {v} is outside 0..{n}")]
    InvalidSet { v: u32, n: usize },
    #[error("edge set member ({u},{v}) is not an edge of the graph")]
    NonEdgeMember { u: u32, v: u32 },
    #[error("k-fair check requires k >= 1, got {0}")]
    BadFairness(usize),
    #[error("vertex {v} outside 0..{n}")]
    VertexOutOfRange { v: u32, n: usize },
}

/// Per-vertex weights in `{0,1,2}`, aligned with the vertex ids of a host
/// graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    values: Vec<u8>,
}

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self, LabelingError> {
        for (vertex, &value) in values.iter().enumerate() {
            if value > 2 {
                return Err(LabelingError::ValueOutOfRange { vertex, value });
            }
        }
        Ok(Labeling { values })
    }

    /// The all-ones labeling: vacuously a PID-function on any graph.
    pub fn all_ones(n: usize) -> Self {
        Labeling { values: vec![1; n] }
    }

    pub fn zeros(n: usize) -> Self {
        Labeling { values: vec![0; n] }
    }

    /// Indicator labeling of a vertex set: 1 on members, 0 elsewhere.
    pub fn indicator(n: usize, set: &VertexSet) -> Self {
        let mut values = vec![0; n];
        for v in set.iter() {
            values[v as usize] = 1;
        }
        Labeling { values }
    }

    /// Parses `"1,0,2"` style comma-separated digits.
    pub fn from_csv(s: &str) -> Result<Self, LabelingError> {
        let values: Vec<u8> = s
            .split(',')
            .map(|tok| match tok.trim() {
                "0" => Ok(0),
                "1" => Ok(1),
                "2" => Ok(2),
                _ => Err(LabelingError::BadCsv(s.to_string())),
            })
            .collect::<Result<_, _>>()?;
        Ok(Labeling { values })
    }

    pub fn to_csv(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(u8::to_string).collect();
        parts.join(",")
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: u32) -> u8 {
        self.values[v as usize]
    }

    /// Total weight: the sum of all labels.
    pub fn weight(&self) -> u32 {
        self.values.iter().map(|&x| x as u32).sum()
    }
}

/// One failing vertex together with the neighborhood weight (or neighbor
/// count, for set checks) observed there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: u32,
    pub observed: u32,
}

/// Outcome of a predicate check; ok iff no violations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_lengths(g: &Graph, f: &Labeling) -> Result<(), LabelingError> {
    if f.len() != g.n() {
        return Err(LabelingError::LengthMismatch {
            len: f.len(),
            n: g.n(),
        });
    }
    Ok(())
}

fn neighbor_weight(g: &Graph, f: &Labeling, v: u32) -> u32 {
    g.neighbors(v).iter().map(|&u| f.get(u) as u32).sum()
}

/// Perfect Italian check: every 0-labeled vertex must see neighbor weight
/// exactly 2.
pub fn check_pid(g: &Graph, f: &Labeling) -> Result<Verdict, LabelingError> {
    check_lengths(g, f)?;
    let mut violations = Vec::new();
    for v in 0..g.n() as u32 {
        if f.get(v) == 0 {
            let observed = neighbor_weight(g, f, v);
            if observed != 2 {
                violations.push(Violation { vertex: v, observed });
            }
        }
    }
    Ok(Verdict { violations })
}

/// Roman {2} (Italian) check: every 0-labeled vertex must see neighbor
/// weight at least 2.
pub fn check_roman2(g: &Graph, f: &Labeling) -> Result<Verdict, LabelingError> {
    check_lengths(g, f)?;
    let mut violations = Vec::new();
    for v in 0..g.n() as u32 {
        if f.get(v) == 0 {
            let observed = neighbor_weight(g, f, v);
            if observed < 2 {
                violations.push(Violation { vertex: v, observed });
            }
        }
    }
    Ok(Verdict { violations })
}

/// Roman check: every 0-labeled vertex must have a neighbor labeled 2.
pub fn check_roman(g: &Graph, f: &Labeling) -> Result<Verdict, LabelingError> {
    check_lengths(g, f)?;
    let mut violations = Vec::new();
    for v in 0..g.n() as u32 {
        if f.get(v) == 0 && !g.neighbors(v).iter().any(|&u| f.get(u) == 2) {
            violations.push(Violation {
                vertex: v,
                observed: neighbor_weight(g, f, v),
            });
        }
    }
    Ok(Verdict { violations })
}

/// k-fair domination check: every vertex outside `s` must have exactly `k`
/// neighbors in `s`. For `k >= 1` this subsumes domination, so isolated
/// outside vertices fail.
pub fn check_k_fair(g: &Graph, s: &VertexSet, k: usize) -> Result<Verdict, LabelingError> {
    if k < 1 {
        return Err(LabelingError::BadFairness(k));
    }
    for v in s.iter() {
        if v as usize >= g.n() {
            return Err(LabelingError::InvalidSet { v, n: g.n() });
        }
    }
    let mut violations = Vec::new();
    for v in 0..g.n() as u32 {
        if !s.contains(v) {
            let observed = g.neighbors(v).iter().filter(|&&u| s.contains(u)).count();
            if observed != k {
                violations.push(Violation {
                    vertex: v,
                    observed: observed as u32,
                });
            }
        }
    }
    Ok(Verdict { violations })
}

/// Perfect dominating set check: the 1-fair case.
pub fn check_perfect_dominating(g: &Graph, s: &VertexSet) -> Result<Verdict, LabelingError> {
    check_k_fair(g, s, 1)
}

/// Induced (strong) matching check: member edges must be pairwise disjoint
/// and no edge of the graph may join endpoints of two distinct members.
pub fn check_induced_matching(g: &Graph, m: &EdgeSet) -> Result<Verdict, LabelingError> {
    for (u, v) in m.iter() {
        if !g.has_edge(u, v) {
            return Err(LabelingError::NonEdgeMember { u, v });
        }
    }
    let edges = m.members();
    let mut violations = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let shared = a == c || a == d || b == c || b == d;
            let connected =
                g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d);
            if shared || connected {
                violations.push(Violation {
                    vertex: a,
                    observed: c,
                });
            }
        }
    }
    Ok(Verdict { violations })
}

/// How a 0-labeled vertex `v` meets (or misses) its neighborhood-sum
/// requirement relative to a designated subgraph given by `inside`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Satisfaction {
    /// Neighbor weight 2, all of it from outside `inside`.
    OutSatisfied,
    /// Neighbor weight 2, all of it from inside `inside`.
    InSatisfied,
    /// Neighbor weight 2, split across the boundary.
    Mixed,
    /// Neighbor weight different from 2.
    Unsatisfied,
    /// `f(v)` is not 0, so no requirement applies.
    NotZero,
}

pub fn satisfaction(
    g: &Graph,
    f: &Labeling,
    v: u32,
    inside: &VertexSet,
) -> Result<Satisfaction, LabelingError> {
    check_lengths(g, f)?;
    if v as usize >= g.n() {
        return Err(LabelingError::VertexOutOfRange { v, n: g.n() });
    }
    if f.get(v) != 0 {
        return Ok(Satisfaction::NotZero);
    }
    let (mut inner, mut outer) = (0u32, 0u32);
    for &u in g.neighbors(v) {
        if inside.contains(u) {
            inner += f.get(u) as u32;
        } else {
            outer += f.get(u) as u32;
        }
    }
    Ok(if inner + outer != 2 {
        Satisfaction::Unsatisfied
    } else if inner == 0 {
        Satisfaction::OutSatisfied
    } else if outer == 0 {
        Satisfaction::InSatisfied
    } else {
        Satisfaction::Mixed
    })
}
