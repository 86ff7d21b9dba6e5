//! Exact solvers for the domination parameters.
//!
//! `pid_bruteforce`, `roman_exact`, `roman2_exact` enumerate all `3^n`
//! labelings (data-parallel over index chunks); `gamma_exact` and
//! `fd2_exact` enumerate vertex subsets; `max_induced_matching` branches
//! over candidate edges. These are definitional oracles guarded by an order
//! cap. `pid_branch_bound` is the engineered solver: a depth-first search
//! over partial labelings with constraint propagation, weight pruning and
//! per-component decomposition, usable far beyond the brute-force cap and
//! for weight-decision queries.

use std::sync::atomic::{AtomicU32, Ordering};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::exec::{fold_chunks, Exec};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::labeling::Labeling;

/// Default order cap for the exhaustive oracles (3^14 labelings).
pub const DEFAULT_BRUTE_CAP: usize = 14;

/// Hard ceiling above which 3^n no longer fits the enumeration index type.
const ENUM_MAX_ORDER: usize = 39;

/// Hard ceiling for subset enumeration masks.
const SUBSET_MAX_ORDER: usize = 30;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("order {n} exceeds the brute-force cap {cap}; raise the cap or use the branch-and-bound")]
    OrderAboveCap { n: usize, cap: usize },
    #[error("order {n} exceeds the enumeration limit {max}")]
    EnumerationTooLarge { n: usize, max: usize },
    #[error("graph is not cubic: vertex {v} has degree {degree}")]
    NotCubic { v: u32, degree: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// The reported value is exactly the parameter and the witness attains it.
    Optimal,
    /// The search space was exhausted without finding a labeling within
    /// `max_weight`: a proof that the parameter exceeds the budget.
    BudgetProvedInfeasible,
    /// A time or node budget ran out before the search finished.
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Labeling(Labeling),
    Vertices(VertexSet),
    Edges(EdgeSet),
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub value: Option<u32>,
    pub witness: Option<Witness>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub status: Status,
}

/// Resource limits for [`pid_branch_bound`]. With `max_weight` set the
/// search decides whether `pid(G) <= max_weight`.
#[derive(Clone, Debug, Default)]
pub struct SearchBudget {
    pub max_weight: Option<u32>,
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
}

fn pow3(n: usize) -> u64 {
    3u64.pow(n as u32)
}

fn guard_cap(n: usize, cap: usize) -> Result<(), SolveError> {
    if n > cap {
        return Err(SolveError::OrderAboveCap { n, cap });
    }
    if n > ENUM_MAX_ORDER {
        return Err(SolveError::EnumerationTooLarge {
            n,
            max: ENUM_MAX_ORDER,
        });
    }
    Ok(())
}

/// Writes the base-3 digits of `idx` into `labels`, most significant digit
/// first, so ascending indices are ascending lexicographic labelings.
fn decode_base3(mut idx: u64, labels: &mut [u8]) {
    for slot in labels.iter_mut().rev() {
        *slot = (idx % 3) as u8;
        idx /= 3;
    }
}

fn increment_base3(labels: &mut [u8]) {
    for slot in labels.iter_mut().rev() {
        if *slot < 2 {
            *slot += 1;
            return;
        }
        *slot = 0;
    }
}

/// Scans all `3^n` labelings and returns the minimum-weight accepted one,
/// breaking weight ties towards the lexicographically smallest labeling.
/// The result is independent of the execution strategy.
fn scan_min_labeling(
    g: &Graph,
    exec: Exec,
    accept: impl Fn(&Graph, &[u8]) -> bool + Sync,
) -> Option<(u32, Labeling)> {
    let n = g.n();
    let total = pow3(n);
    let chunk = pow3(8.min(n));
    let bound = AtomicU32::new(u32::MAX);
    let identity = (u32::MAX, u64::MAX);
    let best = fold_chunks(
        exec,
        total,
        chunk,
        identity,
        |start, end| {
            let mut labels = vec![0u8; n];
            decode_base3(start, &mut labels);
            let mut local = identity;
            for idx in start..end {
                if idx != start {
                    increment_base3(&mut labels);
                }
                let weight: u32 = labels.iter().map(|&x| x as u32).sum();
                if weight < local.0
                    && weight <= bound.load(Ordering::Relaxed)
                    && accept(g, &labels)
                {
                    local = (weight, idx);
                    bound.fetch_min(weight, Ordering::Relaxed);
                }
            }
            local
        },
        std::cmp::min,
    );
    if best == identity {
        return None;
    }
    let mut labels = vec![0u8; n];
    decode_base3(best.1, &mut labels);
    Some((best.0, Labeling::new(labels).expect("digits are in range")))
}

fn pid_ok(g: &Graph, labels: &[u8]) -> bool {
    (0..g.n() as u32).all(|v| {
        labels[v as usize] != 0
            || g.neighbors(v)
                .iter()
                .map(|&u| labels[u as usize] as u32)
                .sum::<u32>()
                == 2
    })
}

fn roman2_ok(g: &Graph, labels: &[u8]) -> bool {
    (0..g.n() as u32).all(|v| {
        labels[v as usize] != 0
            || g.neighbors(v)
                .iter()
                .map(|&u| labels[u as usize] as u32)
                .sum::<u32>()
                >= 2
    })
}

fn roman_ok(g: &Graph, labels: &[u8]) -> bool {
    (0..g.n() as u32).all(|v| {
        labels[v as usize] != 0 || g.neighbors(v).iter().any(|&u| labels[u as usize] == 2)
    })
}

fn labeling_result(found: (u32, Labeling), nodes: u64, started: Instant) -> SolveResult {
    SolveResult {
        value: Some(found.0),
        witness: Some(Witness::Labeling(found.1)),
        nodes_explored: nodes,
        elapsed: started.elapsed(),
        status: Status::Optimal,
    }
}

/// Definitional oracle for `pid(G)`: enumerates every labeling. Refuses
/// orders above `cap`. The witness is the lexicographically smallest
/// minimum-weight PID-function.
pub fn pid_bruteforce(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    pid_bruteforce_with(g, cap, Exec::default())
}

pub fn pid_bruteforce_with(g: &Graph, cap: usize, exec: Exec) -> Result<SolveResult, SolveError> {
    guard_cap(g.n(), cap)?;
    let started = Instant::now();
    let found = scan_min_labeling(g, exec, pid_ok).expect("all-ones labeling is always valid");
    Ok(labeling_result(found, pow3(g.n()), started))
}

/// Minimum Roman {2} (Italian) domination weight by enumeration.
pub fn roman2_exact(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    roman2_exact_with(g, cap, Exec::default())
}

pub fn roman2_exact_with(g: &Graph, cap: usize, exec: Exec) -> Result<SolveResult, SolveError> {
    guard_cap(g.n(), cap)?;
    let started = Instant::now();
    let found = scan_min_labeling(g, exec, roman2_ok).expect("all-ones labeling is always valid");
    Ok(labeling_result(found, pow3(g.n()), started))
}

/// Minimum Roman domination weight by enumeration.
pub fn roman_exact(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    roman_exact_with(g, cap, Exec::default())
}

pub fn roman_exact_with(g: &Graph, cap: usize, exec: Exec) -> Result<SolveResult, SolveError> {
    guard_cap(g.n(), cap)?;
    let started = Instant::now();
    let found = scan_min_labeling(g, exec, roman_ok).expect("all-twos labeling is always valid");
    Ok(labeling_result(found, pow3(g.n()), started))
}

/// True iff subset `a` precedes `b` in (size, sorted member list) order.
fn subset_precedes(a: u64, b: u64) -> bool {
    let (ca, cb) = (a.count_ones(), b.count_ones());
    if ca != cb {
        return ca < cb;
    }
    if a == b {
        return false;
    }
    let low = {
        let diff = a ^ b;
        diff & diff.wrapping_neg()
    };
    a & low != 0
}

fn scan_min_subset(
    g: &Graph,
    cap: usize,
    accept: impl Fn(&Graph, u64) -> bool,
) -> Result<(Option<u64>, u64), SolveError> {
    let n = g.n();
    guard_cap(n, cap)?;
    if n > SUBSET_MAX_ORDER {
        return Err(SolveError::EnumerationTooLarge {
            n,
            max: SUBSET_MAX_ORDER,
        });
    }
    let total: u64 = 1 << n;
    let mut best: Option<u64> = None;
    for mask in 0..total {
        if let Some(b) = best {
            if !subset_precedes(mask, b) {
                continue;
            }
        }
        if accept(g, mask) {
            best = Some(mask);
        }
    }
    Ok((best, total))
}

fn mask_to_set(mask: u64) -> VertexSet {
    VertexSet::new((0..64u32).filter(|&v| mask >> v & 1 == 1))
}

fn set_result(mask: u64, nodes: u64, started: Instant) -> SolveResult {
    let set = mask_to_set(mask);
    SolveResult {
        value: Some(set.len() as u32),
        witness: Some(Witness::Vertices(set)),
        nodes_explored: nodes,
        elapsed: started.elapsed(),
        status: Status::Optimal,
    }
}

/// Domination number by subset enumeration.
pub fn gamma_exact(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    let started = Instant::now();
    let dominating = |g: &Graph, mask: u64| {
        (0..g.n() as u32).all(|v| {
            mask >> v & 1 == 1 || g.neighbors(v).iter().any(|&u| mask >> u & 1 == 1)
        })
    };
    let (best, nodes) = scan_min_subset(g, cap, dominating)?;
    Ok(set_result(
        best.expect("the full vertex set dominates"),
        nodes,
        started,
    ))
}

/// 2-fair domination number by subset enumeration. The full vertex set is
/// vacuously 2-fair, so a result always exists.
pub fn fd2_exact(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    let started = Instant::now();
    let fair2 = |g: &Graph, mask: u64| {
        (0..g.n() as u32).all(|v| {
            mask >> v & 1 == 1
                || g.neighbors(v)
                    .iter()
                    .filter(|&&u| mask >> u & 1 == 1)
                    .count()
                    == 2
        })
    };
    let (best, nodes) = scan_min_subset(g, cap, fair2)?;
    Ok(set_result(
        best.expect("the full vertex set is vacuously 2-fair"),
        nodes,
        started,
    ))
}

struct MatchingSearch<'a> {
    conflict: &'a [Vec<bool>],
    best: Vec<usize>,
    nodes: u64,
}

impl MatchingSearch<'_> {
    fn run(&mut self, cands: &[usize], chosen: &mut Vec<usize>) {
        self.nodes += 1;
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        if cands.is_empty() || chosen.len() + cands.len() <= self.best.len() {
            return;
        }
        let e = cands[0];
        chosen.push(e);
        let rest: Vec<usize> = cands[1..]
            .iter()
            .copied()
            .filter(|&f| !self.conflict[e][f])
            .collect();
        self.run(&rest, chosen);
        chosen.pop();
        self.run(&cands[1..], chosen);
    }
}

/// Maximum induced (strong) matching by branching over candidate edges.
pub fn max_induced_matching(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    guard_cap(g.n(), cap)?;
    let started = Instant::now();
    let edges: Vec<(u32, u32)> = g.edges().collect();
    let m = edges.len();
    let mut conflict = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let clash = a == c
                || a == d
                || b == c
                || b == d
                || g.has_edge(a, c)
                || g.has_edge(a, d)
                || g.has_edge(b, c)
                || g.has_edge(b, d);
            conflict[i][j] = clash;
            conflict[j][i] = clash;
        }
    }
    let mut search = MatchingSearch {
        conflict: &conflict,
        best: Vec::new(),
        nodes: 0,
    };
    let cands: Vec<usize> = (0..m).collect();
    search.run(&cands, &mut Vec::new());
    let matching = EdgeSet::new(search.best.iter().map(|&i| edges[i]));
    Ok(SolveResult {
        value: Some(matching.len() as u32),
        witness: Some(Witness::Edges(matching)),
        nodes_explored: search.nodes,
        elapsed: started.elapsed(),
        status: Status::Optimal,
    })
}

/// The constructive upper-bound labeling for cubic graphs: endpoints of a
/// maximum induced matching get 0, everything else 1, giving a PID-function
/// of weight `n - 2*im(G)`.
pub fn cubic_upper_labeling(g: &Graph, cap: usize) -> Result<Labeling, SolveError> {
    if let Some(v) = (0..g.n() as u32).find(|&v| g.degree(v) != 3) {
        return Err(SolveError::NotCubic {
            v,
            degree: g.degree(v),
        });
    }
    let result = max_induced_matching(g, cap)?;
    let Some(Witness::Edges(matching)) = result.witness else {
        unreachable!("matching solver always returns an edge witness");
    };
    let mut values = vec![1u8; g.n()];
    for v in matching.vertices().iter() {
        values[v as usize] = 0;
    }
    Ok(Labeling::new(values).expect("values are 0/1"))
}

// ---------------------------------------------------------------------------
// branch and bound

struct Dfs<'a> {
    adj: &'a [Vec<u32>],
    order: Vec<u32>,
    labels: Vec<i8>,
    assigned_sum: Vec<u32>,
    unassigned_cnt: Vec<u32>,
    trail: Vec<u32>,
    weight: u32,
    bound: u32,
    best: Option<(u32, Vec<u8>)>,
    nodes: u64,
    deadline: Option<Instant>,
    nodes_left: Option<u64>,
    exhausted: bool,
    claimed: Vec<bool>,
}

impl Dfs<'_> {
    fn place(&mut self, v: u32, val: u8) -> bool {
        self.labels[v as usize] = val as i8;
        self.weight += val as u32;
        self.trail.push(v);
        for i in 0..self.adj[v as usize].len() {
            let u = self.adj[v as usize][i] as usize;
            self.assigned_sum[u] += val as u32;
            self.unassigned_cnt[u] -= 1;
        }
        self.weight < self.bound
    }

    fn place_and_schedule(&mut self, v: u32, val: u8, work: &mut Vec<u32>) -> bool {
        if !self.place(v, val) {
            return false;
        }
        if val == 0 {
            work.push(v);
        }
        for i in 0..self.adj[v as usize].len() {
            let u = self.adj[v as usize][i];
            if self.labels[u as usize] == 0 {
                work.push(u);
            }
        }
        true
    }

    /// Assigns `v := val` and propagates to fixpoint. Zero-labeled vertices
    /// must end with neighbor sum exactly 2, so a saturated vertex forces
    /// its remaining neighbors to 0 and a vertex with one open neighbor
    /// forces the exact remainder. Returns false on conflict or when the
    /// running weight reaches the incumbent; the caller unwinds the trail.
    fn assign(&mut self, v: u32, val: u8) -> bool {
        let mut work = Vec::new();
        if !self.place_and_schedule(v, val, &mut work) {
            return false;
        }
        while let Some(w) = work.pop() {
            if self.labels[w as usize] != 0 {
                continue;
            }
            let s = self.assigned_sum[w as usize];
            let r = self.unassigned_cnt[w as usize];
            if s > 2 || (r == 0 && s != 2) {
                return false;
            }
            if r == 0 {
                continue;
            }
            if s == 2 {
                for i in 0..self.adj[w as usize].len() {
                    let u = self.adj[w as usize][i];
                    if self.labels[u as usize] < 0 && !self.place_and_schedule(u, 0, &mut work) {
                        return false;
                    }
                }
            } else if r == 1 {
                let u = *self.adj[w as usize]
                    .iter()
                    .find(|&&u| self.labels[u as usize] < 0)
                    .expect("one unassigned neighbor remains");
                if !self.place_and_schedule(u, (2 - s) as u8, &mut work) {
                    return false;
                }
            }
        }
        true
    }

    /// Admissible lower bound on the weight any completion must still add:
    /// a zero vertex with assigned neighbor sum `s < 2` needs exactly
    /// `2 - s` more weight among its unassigned neighbors, and demands over
    /// disjoint unassigned neighborhoods add up. Greedy by vertex id.
    #[allow(clippy::needless_range_loop)]
    fn pending_demand_lb(&mut self) -> u32 {
        let adj = self.adj;
        self.claimed.iter_mut().for_each(|c| *c = false);
        let mut lb = 0;
        for w in 0..self.labels.len() {
            if self.labels[w] != 0 {
                continue;
            }
            let s = self.assigned_sum[w];
            if s >= 2 || self.unassigned_cnt[w] == 0 {
                continue;
            }
            let overlaps = adj[w]
                .iter()
                .any(|&u| self.labels[u as usize] < 0 && self.claimed[u as usize]);
            if overlaps {
                continue;
            }
            for &u in &adj[w] {
                if self.labels[u as usize] < 0 {
                    self.claimed[u as usize] = true;
                }
            }
            lb += 2 - s;
        }
        lb
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("trail is nonempty") as usize;
            let val = self.labels[v] as u32;
            self.labels[v] = -1;
            self.weight -= val;
            for i in 0..self.adj[v].len() {
                let u = self.adj[v][i] as usize;
                self.assigned_sum[u] -= val;
                self.unassigned_cnt[u] += 1;
            }
        }
    }

    fn dfs(&mut self, mut pos: usize) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if let Some(left) = &mut self.nodes_left {
            if *left == 0 {
                self.exhausted = true;
                return;
            }
            *left -= 1;
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.exhausted = true;
                    return;
                }
            }
        }
        if self.weight + self.pending_demand_lb() >= self.bound {
            return;
        }
        while pos < self.order.len() && self.labels[self.order[pos] as usize] >= 0 {
            pos += 1;
        }
        if pos == self.order.len() {
            // complete and consistent: propagation checked every zero vertex
            self.best = Some((
                self.weight,
                self.labels.iter().map(|&x| x as u8).collect(),
            ));
            self.bound = self.weight;
            return;
        }
        let v = self.order[pos];
        // dominance: once every neighbor is assigned and nonzero, v's label
        // no longer feeds any zero vertex, so only the cheapest feasible
        // value can be optimal
        let influences = self.adj[v as usize]
            .iter()
            .any(|&u| self.labels[u as usize] <= 0);
        if !influences {
            let val = if self.assigned_sum[v as usize] == 2 { 0 } else { 1 };
            let mark = self.trail.len();
            if self.assign(v, val) {
                self.dfs(pos + 1);
            }
            self.undo_to(mark);
            return;
        }
        for val in 0..=2u8 {
            let mark = self.trail.len();
            if self.assign(v, val) {
                self.dfs(pos + 1);
            }
            self.undo_to(mark);
            if self.exhausted {
                return;
            }
        }
    }
}

enum CompOutcome {
    Optimal(u32, Vec<u8>),
    Infeasible,
    Exhausted,
}

fn bb_component(
    g: &Graph,
    weight_cap: Option<u32>,
    deadline: Option<Instant>,
    nodes_left: &mut Option<u64>,
) -> (CompOutcome, u64) {
    let n = g.n();
    let adj: Vec<Vec<u32>> = (0..n as u32).map(|v| g.neighbors(v).to_vec()).collect();
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v as usize].len()), v));
    let (best, bound) = match weight_cap {
        Some(c) if (n as u32) > c => (None, c + 1),
        _ => (Some((n as u32, vec![1u8; n])), n as u32),
    };
    let mut dfs = Dfs {
        adj: &adj,
        order,
        labels: vec![-1; n],
        assigned_sum: vec![0; n],
        unassigned_cnt: (0..n as u32).map(|v| adj[v as usize].len() as u32).collect(),
        trail: Vec::new(),
        weight: 0,
        bound,
        best,
        nodes: 0,
        deadline,
        nodes_left: *nodes_left,
        exhausted: false,
        claimed: vec![false; n],
    };
    dfs.dfs(0);
    *nodes_left = dfs.nodes_left;
    let outcome = if dfs.exhausted {
        CompOutcome::Exhausted
    } else {
        match dfs.best {
            Some((w, labels)) => CompOutcome::Optimal(w, labels),
            None => CompOutcome::Infeasible,
        }
    };
    (outcome, dfs.nodes)
}

/// Exact branch-and-bound for `pid(G)`.
///
/// Components are solved independently and summed. Branching follows a
/// fixed order (descending degree, ties by id) with labels tried 0, 1, 2,
/// so values and witnesses are deterministic. The all-ones labeling seeds
/// the incumbent. With `max_weight` the search decides `pid(G) <= W`:
/// completing without a witness proves infeasibility; budget exhaustion is
/// reported as a timeout, never as a value.
pub fn pid_branch_bound(g: &Graph, budget: &SearchBudget) -> SolveResult {
    let started = Instant::now();
    let deadline = budget.time_limit.map(|limit| started + limit);
    let mut nodes_left = budget.node_limit;
    let comps = g.components();
    let mut total_nodes = 0u64;
    let mut consumed = 0u32;
    let mut global = vec![0u8; g.n()];
    let mut status = Status::Optimal;
    for (i, comp) in comps.iter().enumerate() {
        let verts = comp.members();
        let sub = g.induced(verts);
        // every nonempty component needs weight at least 1
        let remaining_lb = (comps.len() - i - 1) as u32;
        let cap = budget
            .max_weight
            .map(|w| w.saturating_sub(consumed + remaining_lb));
        let (outcome, nodes) = bb_component(&sub, cap, deadline, &mut nodes_left);
        total_nodes += nodes;
        match outcome {
            CompOutcome::Optimal(w, labels) => {
                consumed += w;
                for (local, &orig) in verts.iter().enumerate() {
                    global[orig as usize] = labels[local];
                }
            }
            CompOutcome::Infeasible => {
                status = Status::BudgetProvedInfeasible;
                break;
            }
            CompOutcome::Exhausted => {
                status = Status::Timeout;
                break;
            }
        }
    }
    match status {
        Status::Optimal => {
            let witness = Labeling::new(global).expect("labels are 0/1/2");
            debug_assert!(crate::labeling::check_pid(g, &witness).unwrap().ok());
            debug_assert_eq!(witness.weight(), consumed);
            SolveResult {
                value: Some(consumed),
                witness: Some(Witness::Labeling(witness)),
                nodes_explored: total_nodes,
                elapsed: started.elapsed(),
                status,
            }
        }
        _ => SolveResult {
            value: None,
            witness: None,
            nodes_explored: total_nodes,
            elapsed: started.elapsed(),
            status,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::labeling::{check_induced_matching, check_k_fair, check_pid, check_roman, check_roman2};

    fn g(spec: FamilySpec) -> Graph {
        spec.make().unwrap()
    }

    fn pid(graph: &Graph) -> u32 {
        pid_bruteforce(graph, DEFAULT_BRUTE_CAP)
            .unwrap()
            .value
            .unwrap()
    }

    #[test]
    fn pid_small_family_values() {
        assert_eq!(pid(&g(FamilySpec::Path(4))), 3);
        assert_eq!(pid(&g(FamilySpec::Cycle(6))), 3);
        assert_eq!(pid(&g(FamilySpec::CompleteMultipartite(vec![3, 3]))), 4);
        assert_eq!(pid(&g(FamilySpec::CompleteMultipartite(vec![3, 3, 3]))), 3);
    }

    #[test]
    fn pid_witness_is_lex_smallest() {
        let p3 = g(FamilySpec::Path(3));
        let result = pid_bruteforce(&p3, 14).unwrap();
        assert_eq!(result.value, Some(2));
        let Some(Witness::Labeling(f)) = result.witness else {
            panic!("expected labeling witness");
        };
        // weight-2 PID-functions of P_3 include [0,2,0] and [1,0,1];
        // [0,2,0] is lexicographically smaller
        assert_eq!(f.values(), &[0, 2, 0]);
    }

    #[test]
    fn brute_force_refuses_above_cap() {
        let big = g(FamilySpec::Path(15));
        assert_eq!(
            pid_bruteforce(&big, 14).unwrap_err(),
            SolveError::OrderAboveCap { n: 15, cap: 14 }
        );
    }

    #[test]
    fn sequential_and_parallel_scans_agree() {
        for spec in [
            FamilySpec::Cycle(9),
            FamilySpec::Jewel(1),
            FamilySpec::CompleteMultipartite(vec![3, 3]),
        ] {
            let graph = g(spec);
            let seq = pid_bruteforce_with(&graph, 14, Exec::Sequential).unwrap();
            let par = pid_bruteforce_with(&graph, 14, Exec::Parallel).unwrap();
            assert_eq!(seq.value, par.value);
            let (Some(Witness::Labeling(a)), Some(Witness::Labeling(b))) =
                (seq.witness, par.witness)
            else {
                panic!("expected labeling witnesses");
            };
            assert_eq!(a, b);
        }
    }

    #[test]
    fn roman_values() {
        let k333 = g(FamilySpec::CompleteMultipartite(vec![3, 3, 3]));
        let res = roman_exact(&k333, 14).unwrap();
        assert_eq!(res.value, Some(4));
        let Some(Witness::Labeling(f)) = res.witness else {
            panic!()
        };
        assert!(check_roman(&k333, &f).unwrap().ok());
        assert_eq!(f.weight(), 4);
    }

    #[test]
    fn roman2_values() {
        let k4x3 = g(FamilySpec::CompleteMultipartite(vec![3, 3, 3, 3]));
        let res = roman2_exact(&k4x3, 14).unwrap();
        assert_eq!(res.value, Some(3));
        let Some(Witness::Labeling(f)) = res.witness else {
            panic!()
        };
        assert!(check_roman2(&k4x3, &f).unwrap().ok());
    }

    #[test]
    fn gamma_values() {
        assert_eq!(
            gamma_exact(&g(FamilySpec::Complete(7)), 14).unwrap().value,
            Some(1)
        );
        assert_eq!(
            gamma_exact(&g(FamilySpec::Path(6)), 14).unwrap().value,
            Some(2)
        );
    }

    #[test]
    fn fd2_values() {
        let c6 = g(FamilySpec::Cycle(6));
        let res = fd2_exact(&c6, 14).unwrap();
        assert_eq!(res.value, Some(3));
        let Some(Witness::Vertices(set)) = res.witness else {
            panic!()
        };
        assert!(check_k_fair(&c6, &set, 2).unwrap().ok());
        for n in 3..=7 {
            assert_eq!(
                fd2_exact(&g(FamilySpec::Complete(n)), 14).unwrap().value,
                Some(2),
                "fd2(K_{n})"
            );
        }
    }

    /// Exhaustive edge-subset oracle for the strong matching number,
    /// independent of the branching solver.
    fn im_by_subsets(graph: &Graph) -> usize {
        let edges: Vec<(u32, u32)> = graph.edges().collect();
        let m = edges.len();
        assert!(m <= 20, "oracle is for small graphs");
        let mut best = 0;
        for mask in 0u32..1 << m {
            let chosen: EdgeSet = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            if chosen.len() > best
                && check_induced_matching(graph, &chosen).unwrap().ok()
            {
                best = chosen.len();
            }
        }
        best
    }

    #[test]
    fn induced_matching_values_match_subset_oracle() {
        for (spec, expected) in [
            (FamilySpec::Path(4), 1),
            (FamilySpec::Cycle(6), 2),
            (FamilySpec::CompleteMultipartite(vec![3, 3]), 1),
            (FamilySpec::Star(6), 1),
            (FamilySpec::Cycle(9), 3),
        ] {
            let graph = g(spec.clone());
            let res = max_induced_matching(&graph, 14).unwrap();
            assert_eq!(res.value, Some(expected), "{spec}");
            assert_eq!(im_by_subsets(&graph), expected as usize, "{spec}");
            let Some(Witness::Edges(m)) = res.witness else {
                panic!()
            };
            assert!(check_induced_matching(&graph, &m).unwrap().ok());
        }
    }

    #[test]
    fn cubic_upper_labeling_validates() {
        let p2 = g(FamilySpec::Path(2));
        let q3 = p2.cartesian_product(&p2).cartesian_product(&p2);
        let f = cubic_upper_labeling(&q3, 14).unwrap();
        assert!(check_pid(&q3, &f).unwrap().ok());
        assert_eq!(f.weight(), 4);

        let prism = g(FamilySpec::Complete(3)).cartesian_product(&g(FamilySpec::Complete(2)));
        let f = cubic_upper_labeling(&prism, 14).unwrap();
        assert!(check_pid(&prism, &f).unwrap().ok());
        assert_eq!(f.weight(), 4);

        let k33 = g(FamilySpec::CompleteMultipartite(vec![3, 3]));
        let f = cubic_upper_labeling(&k33, 14).unwrap();
        assert!(check_pid(&k33, &f).unwrap().ok());
        assert_eq!(f.weight(), 4);

        assert!(matches!(
            cubic_upper_labeling(&g(FamilySpec::Path(4)), 14),
            Err(SolveError::NotCubic { .. })
        ));
    }

    #[test]
    fn branch_bound_matches_brute_force_on_families() {
        let specs = vec![
            FamilySpec::Path(7),
            FamilySpec::Cycle(8),
            FamilySpec::Complete(6),
            FamilySpec::Star(7),
            FamilySpec::Wheel(7),
            FamilySpec::CompleteMultipartite(vec![3, 4]),
            FamilySpec::CompleteMultipartite(vec![3, 3, 3]),
            FamilySpec::Threshold("010011".into()),
            FamilySpec::Jewel(1),
            FamilySpec::SplitFamily(6),
            FamilySpec::Fish(4),
        ];
        for spec in specs {
            let graph = g(spec.clone());
            let brute = pid_bruteforce(&graph, 14).unwrap();
            let bnb = pid_branch_bound(&graph, &SearchBudget::default());
            assert_eq!(bnb.status, Status::Optimal, "{spec}");
            assert_eq!(bnb.value, brute.value, "{spec}");
            let Some(Witness::Labeling(f)) = bnb.witness else {
                panic!()
            };
            assert!(check_pid(&graph, &f).unwrap().ok(), "{spec}");
            assert_eq!(f.weight(), bnb.value.unwrap(), "{spec}");
        }
    }

    #[test]
    fn branch_bound_decomposes_components() {
        let u = g(FamilySpec::Cycle(6)).disjoint_union(&g(FamilySpec::Path(4)));
        let res = pid_branch_bound(&u, &SearchBudget::default());
        assert_eq!(res.value, Some(3 + 3));
        let Some(Witness::Labeling(f)) = res.witness else {
            panic!()
        };
        assert!(check_pid(&u, &f).unwrap().ok());
    }

    #[test]
    fn branch_bound_weight_decision() {
        let c6 = g(FamilySpec::Cycle(6));
        let yes = pid_branch_bound(
            &c6,
            &SearchBudget {
                max_weight: Some(3),
                ..Default::default()
            },
        );
        assert_eq!(yes.status, Status::Optimal);
        assert_eq!(yes.value, Some(3));
        let no = pid_branch_bound(
            &c6,
            &SearchBudget {
                max_weight: Some(2),
                ..Default::default()
            },
        );
        assert_eq!(no.status, Status::BudgetProvedInfeasible);
        assert_eq!(no.value, None);
    }

    #[test]
    fn branch_bound_respects_node_limit() {
        let jewel = g(FamilySpec::Jewel(3));
        let res = pid_branch_bound(
            &jewel,
            &SearchBudget {
                node_limit: Some(5),
                ..Default::default()
            },
        );
        assert_eq!(res.status, Status::Timeout);
        assert_eq!(res.value, None);
        assert!(res.nodes_explored <= 6);
    }

    #[test]
    fn all_ones_is_always_accepted() {
        for spec in [FamilySpec::Jewel(1), FamilySpec::Wheel(6), FamilySpec::Fish(3)] {
            let graph = g(spec);
            let f = Labeling::all_ones(graph.n());
            assert!(check_pid(&graph, &f).unwrap().ok());
            assert!(pid(&graph) <= graph.n() as u32);
        }
    }

    #[test]
    fn empty_graph_solves_to_zero() {
        let e = Graph::empty(0);
        assert_eq!(pid_bruteforce(&e, 14).unwrap().value, Some(0));
        assert_eq!(pid_branch_bound(&e, &SearchBudget::default()).value, Some(0));
    }

    #[test]
    fn isolated_vertices_cost_one_each() {
        let e3 = Graph::empty(3);
        assert_eq!(pid_bruteforce(&e3, 14).unwrap().value, Some(3));
        assert_eq!(
            pid_branch_bound(&e3, &SearchBudget::default()).value,
            Some(3)
        );
    }
}
