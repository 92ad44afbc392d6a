//! Shared test fixtures: the published bound-table values and an
//! independent unpruned broadcast-time oracle.

// Each integration-test binary uses a subset of these fixtures.
#![allow(dead_code)]

use std::collections::HashSet;

use cayley_broadcast::Graph;

/// Upper bounds M(d, t) for d = 2..=10 (rows) and t = 2..=10 (columns).
pub const BOUND_TABLE_10: [[u64; 9]; 9] = [
    [4, 6, 8, 10, 12, 14, 16, 18, 20],
    [4, 8, 14, 24, 40, 66, 108, 176, 286],
    [4, 8, 16, 30, 56, 104, 192, 354, 652],
    [4, 8, 16, 32, 62, 120, 232, 448, 864],
    [4, 8, 16, 32, 64, 126, 248, 488, 960],
    [4, 8, 16, 32, 64, 128, 254, 504, 1000],
    [4, 8, 16, 32, 64, 128, 256, 510, 1016],
    [4, 8, 16, 32, 64, 128, 256, 512, 1022],
    [4, 8, 16, 32, 64, 128, 256, 512, 1024],
];

/// Plain breadth-first search over informed-set states, expanding every
/// matching (maximal or not, including idle callers). No pruning beyond
/// deduplicating visited states, so it is an independent check on the
/// branch-and-bound solver. Exponential: keep n small.
pub fn unpruned_broadcast_time(g: &Graph, origin: u32) -> u32 {
    let n = g.vertex_count();
    assert!(n <= 12, "unpruned oracle is exponential in n");
    let full: u32 = (1u32 << n) - 1;
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            g.neighbors(v as u32)
                .iter()
                .fold(0u32, |m, &w| m | 1 << w)
        })
        .collect();

    let start = 1u32 << origin;
    let mut visited: HashSet<u32> = HashSet::from([start]);
    let mut frontier = vec![start];
    let mut round = 0;
    loop {
        if frontier.contains(&full) {
            return round;
        }
        assert!(!frontier.is_empty(), "origin cannot reach every vertex");
        let mut next = Vec::new();
        for &state in &frontier {
            let informed: Vec<usize> = (0..n).filter(|&v| state >> v & 1 == 1).collect();
            let mut reached = HashSet::new();
            collect_matchings(&adj, &informed, 0, state, 0, &mut reached);
            for claimed in reached {
                let ns = state | claimed;
                if visited.insert(ns) {
                    next.push(ns);
                }
            }
        }
        frontier = next;
        round += 1;
    }
}

fn collect_matchings(
    adj: &[u32],
    informed: &[usize],
    idx: usize,
    state: u32,
    claimed: u32,
    out: &mut HashSet<u32>,
) {
    if idx == informed.len() {
        out.insert(claimed);
        return;
    }
    let v = informed[idx];
    // The caller may idle.
    collect_matchings(adj, informed, idx + 1, state, claimed, out);
    let mut avail = adj[v] & !state & !claimed;
    while avail != 0 {
        let w = avail & avail.wrapping_neg();
        avail ^= w;
        collect_matchings(adj, informed, idx + 1, state, claimed | w, out);
    }
}
