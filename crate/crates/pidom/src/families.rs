//! Deterministic generators for the parametric graph families the solvers
//! and characterizations are exercised on.
//!
//! Every generator has a frozen vertex layout (documented per variant) so
//! witnesses and graph6 output are reproducible byte for byte.

use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("path requires n >= 1, got {0}")]
    PathOrder(usize),
    #[error("cycle requires n >= 3, got {0}")]
    CycleOrder(usize),
    #[error("complete requires n >= 1, got {0}")]
    CompleteOrder(usize),
    #[error("star requires n >= 2, got {0}")]
    StarOrder(usize),
    #[error("wheel requires n >= 4, got {0}")]
    WheelOrder(usize),
    #[error("complete multipartite requires at least one part, each of size >= 1")]
    BadParts,
    #[error("threshold string must be nonempty and over {{0,1}}")]
    BadThresholdString,
    #[error("jewel requires l >= 1, got {0}")]
    JewelParam(usize),
    #[error("kc requires b > 4, r > 1, 2 < a < b and s >= 1, got a={a} r={r} b={b} s={s}")]
    KcParams { a: usize, r: usize, b: usize, s: usize },
    #[error("split family requires l >= 6, got {0}")]
    SplitParam(usize),
    #[error("fish requires l >= 1, got {0}")]
    FishParam(usize),
    #[error("unknown family spec {0:?}")]
    UnknownSpec(String),
    #[error("malformed parameters in family spec {0:?}")]
    BadSpecParams(String),
}

/// A parametric family instance, parseable from `"name:params"` strings
/// such as `"jewel:3"`, `"kc:3,2,5,1"` or `"kpartite:3,3,3"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Star on `n` vertices: one center plus `n-1` leaves.
    Star(usize),
    /// Wheel on `n` vertices: a hub joined to an `(n-1)`-cycle.
    Wheel(usize),
    CompleteMultipartite(Vec<usize>),
    /// Threshold graph from a creation string read left to right:
    /// `0` adds an isolated vertex, `1` a vertex adjacent to all previous.
    Threshold(String),
    Jewel(usize),
    Kc { a: usize, r: usize, b: usize, s: usize },
    SplitFamily(usize),
    Fish(usize),
}

impl FamilySpec {
    /// Checks the per-family parameter ranges without building the graph.
    pub fn validate(&self) -> Result<(), FamilyError> {
        match self {
            FamilySpec::Path(n) if *n < 1 => Err(FamilyError::PathOrder(*n)),
            FamilySpec::Cycle(n) if *n < 3 => Err(FamilyError::CycleOrder(*n)),
            FamilySpec::Complete(n) if *n < 1 => Err(FamilyError::CompleteOrder(*n)),
            FamilySpec::Star(n) if *n < 2 => Err(FamilyError::StarOrder(*n)),
            FamilySpec::Wheel(n) if *n < 4 => Err(FamilyError::WheelOrder(*n)),
            FamilySpec::CompleteMultipartite(parts) if parts.is_empty() || parts.contains(&0) => {
                Err(FamilyError::BadParts)
            }
            FamilySpec::Threshold(s)
                if s.is_empty() || s.bytes().any(|b| b != b'0' && b != b'1') =>
            {
                Err(FamilyError::BadThresholdString)
            }
            FamilySpec::Jewel(l) if *l < 1 => Err(FamilyError::JewelParam(*l)),
            FamilySpec::Kc { a, r, b, s }
                if !(*b > 4 && *r > 1 && *a > 2 && a < b && *s >= 1) =>
            {
                Err(FamilyError::KcParams {
                    a: *a,
                    r: *r,
                    b: *b,
                    s: *s,
                })
            }
            FamilySpec::SplitFamily(l) if *l < 6 => Err(FamilyError::SplitParam(*l)),
            FamilySpec::Fish(l) if *l < 1 => Err(FamilyError::FishParam(*l)),
            _ => Ok(()),
        }
    }

    /// Order of the generated graph, available without building it.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::Wheel(n) => *n,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::Threshold(s) => s.len(),
            FamilySpec::Jewel(l) => 2 * l + 8,
            FamilySpec::Kc { a, r, b, s } => a * r + b * s,
            FamilySpec::SplitFamily(l) => l + 2,
            FamilySpec::Fish(l) => 2 * l + 2,
        }
    }

    /// Builds the graph. Output layout is deterministic per variant.
    pub fn make(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::Wheel(n) => wheel(*n),
            FamilySpec::CompleteMultipartite(parts) => complete_multipartite(parts),
            FamilySpec::Threshold(s) => threshold(s),
            FamilySpec::Jewel(l) => jewel(*l),
            FamilySpec::Kc { a, r, b, s } => kc(*a, *r, *b, *s),
            FamilySpec::SplitFamily(l) => split_family(*l),
            FamilySpec::Fish(l) => fish(*l),
        };
        Ok(g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "kpartite:{}", parts.join(","))
            }
            FamilySpec::Threshold(s) => write!(f, "threshold:{s}"),
            FamilySpec::Jewel(l) => write!(f, "jewel:{l}"),
            FamilySpec::Kc { a, r, b, s } => write!(f, "kc:{a},{r},{b},{s}"),
            FamilySpec::SplitFamily(l) => write!(f, "split:{l}"),
            FamilySpec::Fish(l) => write!(f, "fish:{l}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| FamilyError::UnknownSpec(s.to_string()))?;
        let ints = || -> Result<Vec<usize>, FamilyError> {
            params
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| FamilyError::BadSpecParams(s.to_string()))
        };
        let one = || -> Result<usize, FamilyError> {
            let v = ints()?;
            if v.len() == 1 {
                Ok(v[0])
            } else {
                Err(FamilyError::BadSpecParams(s.to_string()))
            }
        };
        let spec = match name {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "star" => FamilySpec::Star(one()?),
            "wheel" => FamilySpec::Wheel(one()?),
            "kpartite" | "multipartite" => FamilySpec::CompleteMultipartite(ints()?),
            "threshold" => FamilySpec::Threshold(params.trim().to_string()),
            "jewel" => FamilySpec::Jewel(one()?),
            "kc" => {
                let v = ints()?;
                if v.len() != 4 {
                    return Err(FamilyError::BadSpecParams(s.to_string()));
                }
                FamilySpec::Kc {
                    a: v[0],
                    r: v[1],
                    b: v[2],
                    s: v[3],
                }
            }
            "split" | "split_family" => FamilySpec::SplitFamily(one()?),
            "fish" => FamilySpec::Fish(one()?),
            _ => return Err(FamilyError::UnknownSpec(s.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn path(n: usize) -> Graph {
    Graph::new(n, (1..n as u32).map(|v| (v - 1, v))).unwrap()
}

fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    edges.push((0, n as u32 - 1));
    Graph::new(n, edges).unwrap()
}

fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Layout: center 0, leaves `1..n`.
fn star(n: usize) -> Graph {
    Graph::new(n, (1..n as u32).map(|v| (0, v))).unwrap()
}

/// Layout: hub 0, rim cycle on `1..n`.
fn wheel(n: usize) -> Graph {
    let rim = n - 1;
    let mut edges: Vec<(u32, u32)> = (1..=rim as u32).map(|v| (0, v)).collect();
    for i in 1..rim as u32 {
        edges.push((i, i + 1));
    }
    edges.push((1, rim as u32));
    Graph::new(n, edges).unwrap()
}

/// Layout: partite sets occupy consecutive id ranges in declaration order.
fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut offset = Vec::with_capacity(parts.len() + 1);
    let mut acc = 0;
    for &p in parts {
        offset.push(acc);
        acc += p;
    }
    offset.push(acc);
    let part_of = |v: usize| offset.partition_point(|&o| o <= v) - 1;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of(u) != part_of(v) {
                edges.push((u as u32, v as u32));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Layout: vertex `i` is the one added by character `i` of the creation
/// string.
fn threshold(s: &str) -> Graph {
    let mut edges = Vec::new();
    for (i, b) in s.bytes().enumerate() {
        if b == b'1' {
            for j in 0..i {
                edges.push((j as u32, i as u32));
            }
        }
    }
    Graph::new(s.len(), edges).unwrap()
}

/// The planar family member `J_l` on `2l + 8` vertices.
///
/// `J_1` arises from `2K_2` by adding two non-adjacent dominating vertices
/// `u`, `v` and then attaching a pendant to every vertex except the two of
/// degree three; the widening step `J_l -> J_{l+1}` joins `u` and `v` to the
/// current pendants of the degree-four supports and gives each a fresh
/// pendant. The supports with pendants sit in different `K_2` components of
/// the middle, so the two pendant chains grow from opposite sides.
///
/// Layout: 0 = `u`, 1 = `v`, 2 = pendant of `u`, 3 = pendant of `v`,
/// 4 = companion of the x-chain, 5 = companion of the y-chain,
/// `6..=6+l` = x-chain `x_0..x_{l-1}` followed by its pendant `x_l`,
/// `l+7..=2l+7` = y-chain likewise.
fn jewel(l: usize) -> Graph {
    let n = 2 * l + 8;
    let (u, v, pu, pv, comp_x, comp_y) = (0u32, 1u32, 2u32, 3u32, 4u32, 5u32);
    let x = |i: usize| (6 + i) as u32;
    let y = |i: usize| (l + 7 + i) as u32;
    let mut edges = vec![
        (u, pu),
        (v, pv),
        (u, comp_x),
        (v, comp_x),
        (u, comp_y),
        (v, comp_y),
        (comp_x, x(0)),
        (comp_y, y(0)),
    ];
    for i in 0..l {
        edges.push((x(i), x(i + 1)));
        edges.push((y(i), y(i + 1)));
        edges.push((u, x(i)));
        edges.push((v, x(i)));
        edges.push((u, y(i)));
        edges.push((v, y(i)));
    }
    Graph::new(n, edges).unwrap()
}

/// `KC(a,r,b,s)`: the complete multipartite graph with `r` parts of size `a`
/// and `s` parts of size `b`, plus a cycle through each size-`b` part in
/// ascending index order.
///
/// Layout: the `a`-parts come first, then the `b`-parts, ids consecutive.
fn kc(a: usize, r: usize, b: usize, s: usize) -> Graph {
    let mut parts = vec![a; r];
    parts.extend(std::iter::repeat_n(b, s));
    let base = complete_multipartite(&parts);
    let mut edges: Vec<(u32, u32)> = base.edges().collect();
    for j in 0..s {
        let start = (a * r + b * j) as u32;
        for i in 0..b as u32 {
            edges.push((start + i, start + (i + 1) % b as u32));
        }
    }
    Graph::new(base.n(), edges).unwrap()
}

/// The split family member `S_l` on `l + 2` vertices: a clique `K_l` on
/// `0..l`, plus `x = l` adjacent to `{0,1,2}` and `y = l + 1` adjacent to
/// `{3}`.
fn split_family(l: usize) -> Graph {
    let mut edges: Vec<(u32, u32)> = complete(l).edges().collect();
    let x = l as u32;
    let y = l as u32 + 1;
    edges.extend([(x, 0), (x, 1), (x, 2), (y, 3)]);
    Graph::new(l + 2, edges).unwrap()
}

/// The fish gadget `F_l` on `2l + 2` vertices.
///
/// Layout: 0 = anchor `x`, 1 = hub `y`, `2..l+2` = `M` (adjacent to both
/// `x` and `y`), `l+2..2l+2` = `T` (pendants of `y`).
fn fish(l: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..l as u32 {
        let m = 2 + i;
        let t = 2 + l as u32 + i;
        edges.push((0, m));
        edges.push((1, m));
        edges.push((1, t));
    }
    Graph::new(2 * l + 2, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_degrees() {
        let g = FamilySpec::Path(4).make().unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn wheel_layout() {
        let g = FamilySpec::Wheel(5).make().unwrap();
        assert_eq!(g.m(), 8);
        assert_eq!(g.degree(0), 4);
        assert!((1..5u32).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn k33_counts() {
        let g = FamilySpec::CompleteMultipartite(vec![3, 3]).make().unwrap();
        assert_eq!(g.m(), 9);
        assert!(g.is_bipartite());
    }

    #[test]
    fn threshold_dominating_tail() {
        let g = FamilySpec::Threshold("0011".to_string()).make().unwrap();
        assert!(g.is_connected());
        assert_eq!(g.degree(3), 3);
        // last-symbol-1 strings always yield a dominating final vertex
        for s in ["1", "01", "00101", "110011"] {
            let g = FamilySpec::Threshold(s.to_string()).make().unwrap();
            assert_eq!(g.degree(g.n() as u32 - 1), g.n() - 1, "string {s}");
        }
    }

    #[test]
    fn jewel_one_structure() {
        let g = FamilySpec::Jewel(1).make().unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.m(), 14);
        // u and v: degree five, not adjacent
        assert_eq!(g.degree(0), 5);
        assert_eq!(g.degree(1), 5);
        assert!(!g.has_edge(0, 1));
        // the two degree-four supports are the chain heads
        let mut degs = g.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 1, 3, 3, 4, 4, 5, 5]);
        assert_eq!(g.degree(6), 4);
        assert_eq!(g.degree(8), 4);
    }

    #[test]
    fn jewel_widening_recurrence() {
        for l in 2..=10 {
            let small = FamilySpec::Jewel(l - 1).make().unwrap();
            let big = FamilySpec::Jewel(l).make().unwrap();
            assert_eq!(big.n() - small.n(), 2);
            assert_eq!(big.m() - small.m(), 6);
            assert_eq!(big.n(), 10 + 2 * (l - 1));
        }
    }

    #[test]
    fn jewel_support_pendants_and_common_neighbors() {
        for l in 1..=6 {
            let g = FamilySpec::Jewel(l).make().unwrap();
            for support in [0u32, 1] {
                let pendant_count = g
                    .neighbors(support)
                    .iter()
                    .filter(|&&w| g.degree(w) == 1)
                    .count();
                assert_eq!(pendant_count, 1, "jewel {l} support {support}");
            }
            // every common neighbor of u and v touches one of the chains
            let chain: Vec<u32> = (6..g.n() as u32).collect();
            for w in 0..g.n() as u32 {
                if g.has_edge(0, w) && g.has_edge(1, w) {
                    let on_chain = chain.contains(&w)
                        || g.neighbors(w).iter().any(|c| chain.contains(c));
                    assert!(on_chain, "jewel {l} common neighbor {w}");
                }
            }
        }
    }

    #[test]
    fn kc_structure() {
        let g = FamilySpec::Kc {
            a: 3,
            r: 2,
            b: 5,
            s: 1,
        }
        .make()
        .unwrap();
        assert_eq!(g.n(), 11);
        // K_{3,3,5} has 39 edges, the cycle adds 5
        assert_eq!(g.m(), 44);
        // the b-part hosts a cycle: consecutive ids 6..11 in a ring
        assert!(g.has_edge(6, 7) && g.has_edge(10, 6));
    }

    #[test]
    fn kc_regular_cases() {
        // b = a + 2 makes both part kinds have equal degree
        let g = FamilySpec::Kc {
            a: 3,
            r: 3,
            b: 5,
            s: 1,
        }
        .make()
        .unwrap();
        assert!(g.is_regular(11));
        let g = FamilySpec::Kc {
            a: 4,
            r: 2,
            b: 6,
            s: 1,
        }
        .make()
        .unwrap();
        assert!(g.is_regular(10));
    }

    #[test]
    fn split_family_structure() {
        let g = FamilySpec::SplitFamily(6).make().unwrap();
        assert_eq!(g.n(), 8);
        assert!(g.has_edge(6, 0) && g.has_edge(6, 1) && g.has_edge(6, 2));
        assert!(g.has_edge(7, 3));
        assert_eq!(g.degree(6), 3);
        assert_eq!(g.degree(7), 1);
        // {x, y} independent
        assert!(!g.has_edge(6, 7));
        // 0..6 is a clique
        for u in 0..6u32 {
            for v in u + 1..6 {
                assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn fish_structure() {
        let g = FamilySpec::Fish(3).make().unwrap();
        assert_eq!(g.n(), 8);
        let degs = g.degrees();
        assert_eq!(degs.iter().filter(|&&d| d == 2).count(), 3);
        assert_eq!(degs.iter().filter(|&&d| d == 1).count(), 3);
        assert_eq!(g.degree(1), 6); // y sees all of T and M
        assert_eq!(g.degree(0), 3); // x sees all of M
        assert!(g.is_bipartite());
    }

    #[test]
    fn fish_bipartite_for_range() {
        for l in 1..=8 {
            assert!(FamilySpec::Fish(l).make().unwrap().is_bipartite());
        }
    }

    #[test]
    fn connectivity_of_generated_families() {
        let specs: Vec<FamilySpec> = vec![
            FamilySpec::Path(6),
            FamilySpec::Cycle(7),
            FamilySpec::Complete(5),
            FamilySpec::Star(6),
            FamilySpec::Wheel(7),
            FamilySpec::CompleteMultipartite(vec![3, 4, 5]),
            FamilySpec::Threshold("0011".into()),
            FamilySpec::Jewel(2),
            FamilySpec::Kc {
                a: 3,
                r: 2,
                b: 5,
                s: 1,
            },
            FamilySpec::SplitFamily(7),
            FamilySpec::Fish(4),
        ];
        for spec in specs {
            assert!(spec.make().unwrap().is_connected(), "{spec} disconnected");
        }
    }

    #[test]
    fn validation_errors_name_the_bound() {
        assert_eq!(
            FamilySpec::Wheel(3).make(),
            Err(FamilyError::WheelOrder(3))
        );
        assert_eq!(
            FamilySpec::SplitFamily(5).make(),
            Err(FamilyError::SplitParam(5))
        );
        assert!(FamilySpec::Kc {
            a: 5,
            r: 2,
            b: 5,
            s: 1
        }
        .make()
        .is_err());
        assert_eq!(
            FamilySpec::Threshold("0x1".into()).make(),
            Err(FamilyError::BadThresholdString)
        );
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "path:4",
            "cycle:9",
            "complete:5",
            "star:6",
            "wheel:5",
            "kpartite:3,3,3",
            "threshold:0011",
            "jewel:3",
            "kc:3,2,5,1",
            "split:6",
            "fish:3",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.make().unwrap().n(), spec.order());
        }
        assert!("gadget:3".parse::<FamilySpec>().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
    }
}
