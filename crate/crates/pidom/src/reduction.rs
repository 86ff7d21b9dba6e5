//! Hardness reductions from exact cover by 3-sets.
//!
//! `reduce_x3c` builds the perfect-Italian-domination instance: every
//! element vertex of the bipartite incidence graph becomes the anchor of a
//! fish gadget `F_k` and every set vertex gains two pendants, with target
//! weight `k = 6q + 2t`. `forward_labeling` and `extract_cover` realize the
//! two directions of the equivalence. `verify_fish_props` certifies the
//! gadget minima by exhaustive enumeration for small gadget sizes.
//! `reduce_x3c_roman2` builds the companion Roman {2} instance (a chorded
//! 6-cycle plus a 2-vertex tail replacing each set vertex); its target
//! weight is supplied by the caller.

use thiserror::Error;

use crate::families::FamilySpec;
use crate::graph::{Graph, VertexSet};
use crate::labeling::{check_pid, Labeling};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("ground set size parameter q must be >= 1")]
    BadQ,
    #[error("an instance needs at least one triple")]
    NoTriples,
    #[error("triple {index} contains element {element} outside 1..={max}")]
    TripleOutOfRange { index: usize, element: u32, max: u32 },
    #[error("triple {index} has repeated elements")]
    TripleNotDistinct { index: usize },
    #[error("malformed X3C text at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("cover is not exact: element {element} is covered {times} times")]
    CoverNotExact { element: u32, times: usize },
    #[error("cover index {0} is out of range")]
    CoverIndexOutOfRange(usize),
    #[error("labeling is not a PID-function of the reduced graph")]
    LabelingInvalid,
    #[error("labeling weight {weight} exceeds the target {k}")]
    Overweight { weight: u32, k: u32 },
    #[error("element anchor x_{element} carries a nonzero label, impossible at weight <= k")]
    AnchorLabeled { element: u32 },
    #[error("extracted set family is not an exact cover (element {element} covered {times} times)")]
    ExtractedNotExact { element: u32, times: usize },
    #[error("fish gadget enumeration supports 3 <= l <= 5, got {0}")]
    FishEllOutOfRange(usize),
}

/// An exact-cover-by-3-sets instance: ground set `1..=3q` and an ordered
/// family of 3-element subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X3CInstance {
    q: usize,
    triples: Vec<[u32; 3]>,
}

impl X3CInstance {
    pub fn new(q: usize, triples: Vec<[u32; 3]>) -> Result<Self, ReductionError> {
        if q == 0 {
            return Err(ReductionError::BadQ);
        }
        if triples.is_empty() {
            return Err(ReductionError::NoTriples);
        }
        let max = 3 * q as u32;
        let mut canonical = Vec::with_capacity(triples.len());
        for (index, triple) in triples.iter().enumerate() {
            let mut t = *triple;
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(ReductionError::TripleNotDistinct { index });
            }
            if let Some(&element) = t.iter().find(|&&e| e == 0 || e > max) {
                return Err(ReductionError::TripleOutOfRange {
                    index,
                    element,
                    max,
                });
            }
            canonical.push(t);
        }
        Ok(X3CInstance {
            q,
            triples: canonical,
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn ground_size(&self) -> usize {
        3 * self.q
    }

    pub fn triples(&self) -> &[[u32; 3]] {
        &self.triples
    }

    pub fn t(&self) -> usize {
        self.triples.len()
    }

    /// Parses the text format: a header line `q t` followed by `t` lines of
    /// three space-separated elements (1-based).
    pub fn parse(text: &str) -> Result<Self, ReductionError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(ReductionError::Parse {
            line: 1,
            reason: "missing header".into(),
        })?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|e| ReductionError::Parse {
                line,
                reason: format!("bad header: {e}"),
            })?;
        let [q, t] = nums[..] else {
            return Err(ReductionError::Parse {
                line,
                reason: "expected \"q t\"".into(),
            });
        };
        let mut triples = Vec::with_capacity(t);
        for (line, text) in lines.take(t) {
            let nums: Vec<u32> = text
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|e| ReductionError::Parse {
                    line,
                    reason: format!("bad triple: {e}"),
                })?;
            let [a, b, c] = nums[..] else {
                return Err(ReductionError::Parse {
                    line,
                    reason: "expected three elements".into(),
                });
            };
            triples.push([a, b, c]);
        }
        if triples.len() != t {
            return Err(ReductionError::Parse {
                line: 0,
                reason: format!("expected {t} triples, found {}", triples.len()),
            });
        }
        X3CInstance::new(q, triples)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.q, self.t());
        for t in &self.triples {
            out.push_str(&format!("{} {} {}\n", t[0], t[1], t[2]));
        }
        out
    }

    /// True iff the selected triples partition the ground set.
    pub fn is_exact_cover(&self, cover: &Cover) -> Result<(), ReductionError> {
        let mut times = vec![0usize; self.ground_size() + 1];
        for &j in cover.indices() {
            if j >= self.t() {
                return Err(ReductionError::CoverIndexOutOfRange(j));
            }
            for &e in &self.triples[j] {
                times[e as usize] += 1;
            }
        }
        for e in 1..=self.ground_size() as u32 {
            if times[e as usize] != 1 {
                return Err(ReductionError::CoverNotExact {
                    element: e,
                    times: times[e as usize],
                });
            }
        }
        Ok(())
    }
}

/// A selection of triple indices (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    indices: Vec<usize>,
}

impl Cover {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Cover { indices: v }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, j: usize) -> bool {
        self.indices.binary_search(&j).is_ok()
    }
}

/// Role of a vertex in a reduced graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Role {
    /// Element vertex `x_i` (1-based element id), anchor of its fish gadget.
    ElementAnchor { element: u32 },
    /// Set vertex `c_j` (0-based triple index). In the Roman {2} reduction
    /// this is the gadget vertex that inherits the incidence edges.
    SetVertex { set: usize },
    /// Pendant `c'_j` (which = 0) or `c''_j` (which = 1).
    SetPendant { set: usize, which: u8 },
    FishY { element: u32 },
    FishM { element: u32 },
    FishT { element: u32 },
    /// Remaining chorded-6-cycle vertex of the Roman {2} gadget.
    GadgetRing { set: usize, pos: u8 },
    /// Tail-path vertex of the Roman {2} gadget.
    GadgetTail { set: usize, pos: u8 },
}

impl Role {
    /// Stable string form used in CLI role maps.
    pub fn tag(&self) -> String {
        match self {
            Role::ElementAnchor { element } => format!("element-anchor:{element}"),
            Role::SetVertex { set } => format!("set-vertex:{set}"),
            Role::SetPendant { set, which } => {
                format!("set-pendant:{set}:{}", if *which == 0 { "a" } else { "b" })
            }
            Role::FishY { element } => format!("fish-y:{element}"),
            Role::FishM { element } => format!("fish-m:{element}"),
            Role::FishT { element } => format!("fish-t:{element}"),
            Role::GadgetRing { set, pos } => format!("gadget-ring:{set}:{pos}"),
            Role::GadgetTail { set, pos } => format!("gadget-tail:{set}:{pos}"),
        }
    }
}

/// A reduced instance: the constructed graph, the target weight and the
/// per-vertex role map, plus direct handles into the layout.
#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub k: u32,
    pub roles: Vec<Role>,
    pub element_vertices: Vec<u32>,
    pub set_vertices: Vec<u32>,
    pub fish_y: Vec<u32>,
    pub set_pendants: Vec<(u32, u32)>,
}

/// The bipartite incidence graph: vertices `0..3q` are elements (element
/// `e` is vertex `e-1`), vertices `3q..3q+t` are triples, edges encode
/// membership.
pub fn incidence_graph(inst: &X3CInstance) -> Graph {
    let nq = inst.ground_size();
    let mut edges = Vec::new();
    for (j, triple) in inst.triples().iter().enumerate() {
        let c = (nq + j) as u32;
        for &e in triple {
            edges.push((e - 1, c));
        }
    }
    Graph::new(nq + inst.t(), edges).expect("incidence edges are in range")
}

/// The perfect-Italian-domination reduction. Layout: the incidence graph
/// ids come first, then per element `i` a fish block `y_i, M (k), T (k)`
/// of `2k + 1` vertices, then the pendant pairs of the set vertices.
/// The whole graph is bipartite by construction.
pub fn reduce_x3c(inst: &X3CInstance) -> ReductionOutput {
    let nq = inst.ground_size();
    let t = inst.t();
    let k = (6 * inst.q() + 2 * t) as u32;
    let kk = k as usize;
    let mut edges: Vec<(u32, u32)> = incidence_graph(inst).edges().collect();
    let n = nq + t + nq * (2 * kk + 1) + 2 * t;
    let mut roles = Vec::with_capacity(n);
    for e in 1..=nq as u32 {
        roles.push(Role::ElementAnchor { element: e });
    }
    for j in 0..t {
        roles.push(Role::SetVertex { set: j });
    }
    let mut fish_y = Vec::with_capacity(nq);
    for i in 0..nq {
        let element = i as u32 + 1;
        let base = (nq + t + i * (2 * kk + 1)) as u32;
        let x = i as u32;
        let y = base;
        fish_y.push(y);
        roles.push(Role::FishY { element });
        for idx in 0..k {
            let m = base + 1 + idx;
            edges.push((x, m));
            edges.push((y, m));
            roles.push(Role::FishM { element });
        }
        for idx in 0..k {
            let tvert = base + 1 + k + idx;
            edges.push((y, tvert));
            roles.push(Role::FishT { element });
        }
    }
    let pend_base = nq + t + nq * (2 * kk + 1);
    let mut set_pendants = Vec::with_capacity(t);
    for j in 0..t {
        let c = (nq + j) as u32;
        let p1 = (pend_base + 2 * j) as u32;
        let p2 = p1 + 1;
        edges.push((c, p1));
        edges.push((c, p2));
        set_pendants.push((p1, p2));
        roles.push(Role::SetPendant { set: j, which: 0 });
        roles.push(Role::SetPendant { set: j, which: 1 });
    }
    let graph = Graph::new(n, edges).expect("reduction edges are in range");
    debug_assert!(graph.is_bipartite());
    ReductionOutput {
        graph,
        k,
        roles,
        element_vertices: (0..nq as u32).collect(),
        set_vertices: (nq as u32..(nq + t) as u32).collect(),
        fish_y,
        set_pendants,
    }
}

/// The forward certificate: from an exact cover, the canonical weight-`k`
/// PID-function (2 on covered set vertices and every fish hub, 1 on the
/// pendants of uncovered set vertices, 0 elsewhere).
pub fn forward_labeling(
    inst: &X3CInstance,
    cover: &Cover,
    red: &ReductionOutput,
) -> Result<Labeling, ReductionError> {
    inst.is_exact_cover(cover)?;
    let mut values = vec![0u8; red.graph.n()];
    for j in 0..inst.t() {
        if cover.contains(j) {
            values[red.set_vertices[j] as usize] = 2;
        } else {
            let (p1, p2) = red.set_pendants[j];
            values[p1 as usize] = 1;
            values[p2 as usize] = 1;
        }
    }
    for &y in &red.fish_y {
        values[y as usize] = 2;
    }
    let labeling = Labeling::new(values).expect("labels are 0/1/2");
    debug_assert!(check_pid(&red.graph, &labeling).unwrap().ok());
    debug_assert_eq!(labeling.weight(), red.k);
    Ok(labeling)
}

/// The converse direction: any PID-function of weight at most `k` selects
/// an exact cover through its weight-2 set vertices.
pub fn extract_cover(red: &ReductionOutput, f: &Labeling) -> Result<Cover, ReductionError> {
    let verdict = check_pid(&red.graph, f).map_err(|_| ReductionError::LabelingInvalid)?;
    if !verdict.ok() {
        return Err(ReductionError::LabelingInvalid);
    }
    if f.weight() > red.k {
        return Err(ReductionError::Overweight {
            weight: f.weight(),
            k: red.k,
        });
    }
    if let Some(&x) = red.element_vertices.iter().find(|&&x| f.get(x) != 0) {
        return Err(ReductionError::AnchorLabeled { element: x + 1 });
    }
    let cover = Cover::new(
        red.set_vertices
            .iter()
            .enumerate()
            .filter(|&(_, &c)| f.get(c) == 2)
            .map(|(j, _)| j),
    );
    let mut times = vec![0usize; red.element_vertices.len() + 1];
    for &j in cover.indices() {
        let c = red.set_vertices[j];
        for &x in red.graph.neighbors(c) {
            if (x as usize) < red.element_vertices.len() {
                times[x as usize + 1] += 1;
            }
        }
    }
    for (e, &count) in times.iter().enumerate().skip(1) {
        if count != 1 {
            return Err(ReductionError::ExtractedNotExact {
                element: e as u32,
                times: count,
            });
        }
    }
    Ok(cover)
}

/// Exhaustively verified minima of the fish gadget `F_l`.
///
/// For nonzero anchor labels the whole gadget is scored; for `f(x) = 0` the
/// anchor's own requirement is modeled through the three boundary
/// scenarios — the sum the anchor sees inside `M` must be 0 (out-satisfied,
/// a phantom external 2), 2 (in-satisfied) or 1 (neither) — and the
/// restricted weight of the gadget is minimized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FishReport {
    pub ell: usize,
    /// Minimum gadget weight with `f(x) = 1`.
    pub min_weight_x1: u32,
    /// Minimum gadget weight with `f(x) = 2`.
    pub min_weight_x2: u32,
    /// Minimum restricted weight with `f(x) = 0`, out-satisfied.
    pub min_out_satisfied: u32,
    /// Minimum restricted weight with `f(x) = 0`, in-satisfied.
    pub min_in_satisfied: u32,
    /// Minimum restricted weight with `f(x) = 0`, neither.
    pub min_neither: u32,
}

pub fn verify_fish_props(ell: usize) -> Result<FishReport, ReductionError> {
    if !(3..=5).contains(&ell) {
        return Err(ReductionError::FishEllOutOfRange(ell));
    }
    let fish = FamilySpec::Fish(ell).make().expect("l >= 3 is valid");
    let n = fish.n();
    let m_set: VertexSet = (2..2 + ell as u32).collect();
    // minimum weight over assignments with f(x) fixed and an optional
    // requirement on the sum x sees inside M; all other zero vertices must
    // be satisfied within the gadget
    let minimize = |x_label: u8, m_sum_required: Option<u32>| -> u32 {
        let free = n - 1;
        let mut best = u32::MAX;
        let mut values = vec![0u8; n];
        values[0] = x_label;
        let total = 3u64.pow(free as u32);
        for idx in 0..total {
            let mut rest = idx;
            for slot in values.iter_mut().take(n).skip(1) {
                *slot = (rest % 3) as u8;
                rest /= 3;
            }
            let weight: u32 = values.iter().map(|&x| x as u32).sum();
            if weight >= best {
                continue;
            }
            if let Some(required) = m_sum_required {
                let m_sum: u32 = m_set.iter().map(|v| values[v as usize] as u32).sum();
                if m_sum != required {
                    continue;
                }
            }
            let ok = (1..n as u32).all(|v| {
                values[v as usize] != 0
                    || fish
                        .neighbors(v)
                        .iter()
                        .map(|&u| values[u as usize] as u32)
                        .sum::<u32>()
                        == 2
            });
            if ok {
                best = weight;
            }
        }
        best
    };
    Ok(FishReport {
        ell,
        min_weight_x1: minimize(1, None),
        min_weight_x2: minimize(2, None),
        min_out_satisfied: minimize(0, Some(0)),
        min_in_satisfied: minimize(0, Some(2)),
        min_neither: minimize(0, Some(1)),
    })
}

/// The Roman {2} reduction over the same incidence layout: each set vertex
/// is replaced by a 6-cycle with a long chord plus a 2-vertex tail, with
/// the incidence edges reattached to the chord vertex. Bipartite by
/// construction. The target weight is recorded as supplied.
pub fn reduce_x3c_roman2(inst: &X3CInstance, target_weight: u32) -> ReductionOutput {
    let nq = inst.ground_size();
    let t = inst.t();
    let n = nq + 8 * t;
    let mut edges = Vec::new();
    let mut roles = Vec::with_capacity(n);
    for e in 1..=nq as u32 {
        roles.push(Role::ElementAnchor { element: e });
    }
    let mut set_vertices = Vec::with_capacity(t);
    for (j, triple) in inst.triples().iter().enumerate() {
        let base = (nq + 8 * j) as u32;
        set_vertices.push(base);
        for i in 0..6u32 {
            edges.push((base + i, base + (i + 1) % 6));
        }
        edges.push((base, base + 3)); // the parity-preserving chord
        edges.push((base, base + 6));
        edges.push((base + 6, base + 7));
        for &e in triple {
            edges.push((e - 1, base));
        }
        roles.push(Role::SetVertex { set: j });
        for pos in 1..6u8 {
            roles.push(Role::GadgetRing { set: j, pos });
        }
        roles.push(Role::GadgetTail { set: j, pos: 0 });
        roles.push(Role::GadgetTail { set: j, pos: 1 });
    }
    let graph = Graph::new(n, edges).expect("gadget edges are in range");
    debug_assert!(graph.is_bipartite());
    ReductionOutput {
        graph,
        k: target_weight,
        roles,
        element_vertices: (0..nq as u32).collect(),
        set_vertices,
        fish_y: Vec::new(),
        set_pendants: Vec::new(),
    }
}
