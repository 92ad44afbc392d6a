//! Exact minimum broadcast time for small graphs, plus the cheap
//! logarithmic lower bound and a deterministic greedy upper bound.
//!
//! The solver runs iterative deepening over the number of rounds with a
//! branch-and-bound over informed-vertex bitsets. Because a superset of
//! informed vertices never needs more rounds, it is safe to branch only on
//! matchings where every informed vertex with an available uninformed
//! neighbor places a call.

use std::collections::HashMap;

use crate::cayley::CayleyGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sim::{log2_ceil, SimulationTrace};

/// Default vertex cap: state space is Theta(2^n) in the worst case.
pub const DEFAULT_VERTEX_CAP: usize = 20;

/// Outcome of an exact search from one origin.
#[derive(Debug, Clone)]
pub struct ExactResult {
    pub origin: u32,
    /// Optimal broadcast time b(origin).
    pub rounds: u32,
    /// One optimal schedule, replayable through trace validation.
    pub witness: SimulationTrace,
    /// Search nodes expanded across all deepening iterations.
    pub nodes_expanded: u64,
}

/// ceil(log2 n): no broadcast can inform more than 2^t vertices by time t.
pub fn log2_lower_bound(g: &Graph) -> u32 {
    log2_ceil(g.vertex_count())
}

/// Rounds used by a deterministic greedy policy: each round a maximal
/// matching from informed to uninformed vertices, preferring callees with
/// the most uninformed neighbors, ties by vertex rank. Always an upper
/// bound on the exact value.
pub fn greedy_upper_bound(g: &Graph, origin: u32) -> Result<u32> {
    let n = g.vertex_count();
    if (origin as usize) >= n {
        return Err(Error::SchemeMismatch(format!("origin {origin} out of range")));
    }
    let mut informed = vec![false; n];
    informed[origin as usize] = true;
    let mut informed_count = 1usize;
    let mut rounds = 0u32;
    while informed_count < n {
        let uninf_degree = |v: u32| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| !informed[w as usize])
                .count()
        };
        let mut callees: Vec<u32> = (0..n as u32).filter(|&v| !informed[v as usize]).collect();
        callees.sort_by_key(|&v| (std::cmp::Reverse(uninf_degree(v)), v));
        let mut busy = vec![false; n];
        let mut placed = Vec::new();
        for v in callees {
            let caller = g
                .neighbors(v)
                .iter()
                .find(|&&u| informed[u as usize] && !busy[u as usize]);
            if let Some(&u) = caller {
                busy[u as usize] = true;
                busy[v as usize] = true;
                placed.push(v);
            }
        }
        if placed.is_empty() {
            return Err(Error::Disconnected);
        }
        for v in placed {
            informed[v as usize] = true;
            informed_count += 1;
        }
        rounds += 1;
    }
    Ok(rounds)
}

/// b(origin) with an optimal witness schedule; complete search.
pub fn exact_broadcast_time_from(g: &Graph, origin: u32) -> Result<ExactResult> {
    exact_broadcast_time_from_with_cap(g, origin, DEFAULT_VERTEX_CAP)
}

pub fn exact_broadcast_time_from_with_cap(
    g: &Graph,
    origin: u32,
    cap: usize,
) -> Result<ExactResult> {
    let n = g.vertex_count();
    if n > cap || n > 63 {
        return Err(Error::ExceedsSolverCap {
            vertices: n,
            cap: cap.min(63),
        });
    }
    if (origin as usize) >= n {
        return Err(Error::SchemeMismatch(format!("origin {origin} out of range")));
    }
    let upper = greedy_upper_bound(g, origin)?;
    let lower = log2_lower_bound(g).max(g.eccentricity(origin)?);

    let adj: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v as u32)
                .iter()
                .fold(0u64, |m, &w| m | 1 << w)
        })
        .collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };

    let mut search = Search {
        adj: &adj,
        n,
        full,
        failed: HashMap::new(),
        nodes_expanded: 0,
    };

    for target in lower..=upper {
        let mut schedule = Vec::new();
        if search.feasible(1u64 << origin, target, &mut schedule) {
            let witness = trace_from_schedule(n, origin, &schedule);
            return Ok(ExactResult {
                origin,
                rounds: target,
                witness,
                nodes_expanded: search.nodes_expanded,
            });
        }
    }
    unreachable!("greedy upper bound is always feasible");
}

/// b(G) = max over origins of b(u).
pub fn exact_broadcast_time(g: &Graph) -> Result<u32> {
    exact_broadcast_time_with_cap(g, DEFAULT_VERTEX_CAP)
}

pub fn exact_broadcast_time_with_cap(g: &Graph, cap: usize) -> Result<u32> {
    let mut best = 0;
    for origin in 0..g.vertex_count() as u32 {
        best = best.max(exact_broadcast_time_from_with_cap(g, origin, cap)?.rounds);
    }
    Ok(best)
}

/// Exact broadcast time of a Cayley graph: vertex-transitivity makes the
/// identity origin representative of every origin.
pub fn exact_broadcast_time_cayley(cg: &CayleyGraph) -> Result<ExactResult> {
    exact_broadcast_time_from(cg.graph(), cg.identity_vertex())
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    full: u64,
    /// state -> largest rounds-left budget already proven infeasible.
    failed: HashMap<u64, u32>,
    nodes_expanded: u64,
}

impl Search<'_> {
    fn feasible(&mut self, state: u64, rounds_left: u32, schedule: &mut Vec<Vec<(u32, u32)>>) -> bool {
        self.nodes_expanded += 1;
        if state == self.full {
            return true;
        }
        if rounds_left == 0 {
            return false;
        }
        if let Some(&f) = self.failed.get(&state) {
            if rounds_left <= f {
                return false;
            }
        }
        let informed = state.count_ones() as u128;
        // Doubling cap: the informed set can at most double per round.
        if informed << rounds_left.min(64) < self.n as u128 {
            self.record_failure(state, rounds_left);
            return false;
        }
        // Layer bound: even with unbounded calls per vertex, covering the
        // graph needs as many rounds as BFS layers from the informed set.
        let mut reach = state;
        let mut layers = 0;
        while reach != self.full {
            let mut next = reach;
            let mut m = reach;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.adj[v];
            }
            if next == reach {
                // Unreachable vertices: disconnected graph.
                self.record_failure(state, u32::MAX);
                return false;
            }
            layers += 1;
            if layers > rounds_left {
                self.record_failure(state, rounds_left);
                return false;
            }
            reach = next;
        }

        let uninformed = self.full & !state;
        // Informed vertices that can call someone new, most constrained
        // first so dead branches fail early.
        let mut callers: Vec<(u32, u32)> = Vec::new();
        let mut m = state;
        while m != 0 {
            let v = m.trailing_zeros();
            m &= m - 1;
            let avail = self.adj[v as usize] & uninformed;
            if avail != 0 {
                callers.push((avail.count_ones(), v));
            }
        }
        callers.sort_unstable();
        let order: Vec<u32> = callers.into_iter().map(|(_, v)| v).collect();

        let mut calls = Vec::new();
        let found = self.match_and_recurse(state, uninformed, &order, 0, 0, rounds_left, &mut calls, schedule);
        if !found {
            self.record_failure(state, rounds_left);
        }
        found
    }

    #[allow(clippy::too_many_arguments)]
    fn match_and_recurse(
        &mut self,
        state: u64,
        uninformed: u64,
        order: &[u32],
        idx: usize,
        claimed: u64,
        rounds_left: u32,
        calls: &mut Vec<(u32, u32)>,
        schedule: &mut Vec<Vec<(u32, u32)>>,
    ) -> bool {
        if idx == order.len() {
            if claimed == 0 {
                return false;
            }
            schedule.push(calls.clone());
            if self.feasible(state | claimed, rounds_left - 1, schedule) {
                return true;
            }
            schedule.pop();
            return false;
        }
        let v = order[idx];
        let avail = self.adj[v as usize] & uninformed & !claimed;
        if avail == 0 {
            // Every neighbor already claimed this round; the vertex idles.
            return self.match_and_recurse(
                state,
                uninformed,
                order,
                idx + 1,
                claimed,
                rounds_left,
                calls,
                schedule,
            );
        }
        let mut m = avail;
        while m != 0 {
            let w = m.trailing_zeros();
            m &= m - 1;
            calls.push((v, w));
            if self.match_and_recurse(
                state,
                uninformed,
                order,
                idx + 1,
                claimed | 1 << w,
                rounds_left,
                calls,
                schedule,
            ) {
                return true;
            }
            calls.pop();
        }
        false
    }

    fn record_failure(&mut self, state: u64, rounds_left: u32) {
        self.failed
            .entry(state)
            .and_modify(|f| *f = (*f).max(rounds_left))
            .or_insert(rounds_left);
    }
}

fn trace_from_schedule(n: usize, origin: u32, schedule: &[Vec<(u32, u32)>]) -> SimulationTrace {
    let mut informed_time = vec![None; n];
    informed_time[origin as usize] = Some(0);
    for (ri, calls) in schedule.iter().enumerate() {
        for &(_, w) in calls {
            informed_time[w as usize] = Some(ri as u32 + 1);
        }
    }
    SimulationTrace {
        origin,
        rounds: schedule.to_vec(),
        informed_time,
        completion_round: Some(schedule.len() as u32),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::hypercube;
    use crate::graph::named_graph;
    use crate::sim::validate_trace;

    #[test]
    fn petersen_needs_four_rounds() {
        let g = named_graph("petersen").unwrap();
        let res = exact_broadcast_time_from(&g, 0).unwrap();
        assert_eq!(res.rounds, 4);
        assert_eq!(validate_trace(&g, &res.witness), None);
        assert_eq!(res.witness.completion_round, Some(4));
        assert_eq!(exact_broadcast_time(&g).unwrap(), 4);
    }

    #[test]
    fn small_graph_values() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(exact_broadcast_time_from(&k2, 0).unwrap().rounds, 1);

        let c5 = named_graph("cycle(5)").unwrap();
        assert_eq!(exact_broadcast_time(&c5).unwrap(), 3);

        let k4 = named_graph("complete(4)").unwrap();
        assert_eq!(exact_broadcast_time(&k4).unwrap(), 2);

        let q3 = hypercube(3).unwrap();
        assert_eq!(exact_broadcast_time_cayley(&q3).unwrap().rounds, 3);
    }

    #[test]
    fn cycle_law() {
        for n in 3..=12usize {
            let g = named_graph(&format!("cycle({n})")).unwrap();
            let expect = n.div_ceil(2) as u32;
            assert_eq!(exact_broadcast_time_from(&g, 0).unwrap().rounds, expect, "C_{n}");
        }
    }

    #[test]
    fn greedy_bounds_the_exact_value() {
        for name in ["petersen", "cycle(7)", "complete(5)", "cycle(12)"] {
            let g = named_graph(name).unwrap();
            for origin in 0..g.vertex_count() as u32 {
                let exact = exact_broadcast_time_from(&g, origin).unwrap().rounds;
                let greedy = greedy_upper_bound(&g, origin).unwrap();
                let lb = log2_lower_bound(&g);
                assert!(lb <= exact && exact <= greedy, "{name} origin {origin}");
            }
        }
    }

    #[test]
    fn star_from_center_is_sequential() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(greedy_upper_bound(&star, 0).unwrap(), 3);
        assert_eq!(exact_broadcast_time_from(&star, 0).unwrap().rounds, 3);
    }

    #[test]
    fn caps_and_disconnection_are_errors() {
        let big = named_graph("cycle(50)").unwrap();
        match exact_broadcast_time_from(&big, 0) {
            Err(Error::ExceedsSolverCap { vertices, .. }) => assert_eq!(vertices, 50),
            other => panic!("expected cap error, got {other:?}"),
        }
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(exact_broadcast_time_from(&disconnected, 0).is_err());
    }

    #[test]
    fn witness_is_optimal_and_valid() {
        for name in ["cycle(8)", "complete(6)", "petersen"] {
            let g = named_graph(name).unwrap();
            let res = exact_broadcast_time_from(&g, 1).unwrap();
            assert_eq!(validate_trace(&g, &res.witness), None, "{name}");
            assert_eq!(res.witness.completion_round, Some(res.rounds));
        }
    }
}
