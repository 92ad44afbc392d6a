//! Telephone-model broadcast semantics: scheme representations,
//! deterministic round-by-round simulation, and trace validity checking.
//!
//! A round is a set of calls forming a matching; each call links two
//! adjacent vertices and transfers the message when the callee is
//! uninformed. Calls are blind: addressing an informed neighbor is legal
//! and wastes the round.

use std::fmt::Write as _;

use crate::cayley::CayleyGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{split_top_level, Element, GroupSpec};

/// How informed vertices decide whom to call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BroadcastScheme {
    /// Each vertex works through the generator set in index order, starting
    /// just past the generator its own message arrived on (so the calling
    /// order continues around the cycle rather than restarting).
    FixedOrder,
    /// One permutation of the generator indices per receipt time: a vertex
    /// informed at time i calls in the order of the i-th permutation
    /// (0-based entries; vertices informed beyond the list use the last).
    ReceiptPermutations(Vec<Vec<u8>>),
    /// A generator per round: at round k every informed vertex addresses
    /// its g_k-neighbor, idling when that neighbor already knows.
    RoundGenerators(Vec<Element>),
}

impl BroadcastScheme {
    /// Parse the scheme text format:
    ///
    /// ```text
    /// "fixed"
    /// "perm: 2,1,3; 1,3,2; ..."          (1-based generator indices)
    /// "rounds: (1,0),(1,1),(1,3),(1,0)"  (generator element literals)
    /// ```
    pub fn parse(spec: &GroupSpec, generator_count: usize, text: &str) -> Result<BroadcastScheme> {
        let s = text.trim();
        if s == "fixed" {
            return Ok(BroadcastScheme::FixedOrder);
        }
        if let Some(rest) = s.strip_prefix("perm:") {
            let mut perms = Vec::new();
            for chunk in rest.split(';') {
                let perm = parse_permutation(chunk, generator_count)?;
                perms.push(perm);
            }
            if perms.is_empty() {
                return Err(Error::parse(0, "perm scheme needs at least one permutation"));
            }
            return Ok(BroadcastScheme::ReceiptPermutations(perms));
        }
        if let Some(rest) = s.strip_prefix("rounds:") {
            let elems = split_top_level(rest.trim())
                .into_iter()
                .map(|part| spec.parse_element(part))
                .collect::<Result<Vec<_>>>()?;
            if elems.is_empty() {
                return Err(Error::parse(0, "rounds scheme needs at least one generator"));
            }
            return Ok(BroadcastScheme::RoundGenerators(elems));
        }
        Err(Error::parse(
            0,
            format!("expected 'fixed', 'perm: ...' or 'rounds: ...', got {s:?}"),
        ))
    }

    /// Render in the format accepted by [`BroadcastScheme::parse`].
    pub fn text(&self, spec: &GroupSpec) -> String {
        match self {
            BroadcastScheme::FixedOrder => "fixed".to_string(),
            BroadcastScheme::ReceiptPermutations(perms) => {
                let body = perms
                    .iter()
                    .map(|p| {
                        p.iter()
                            .map(|j| (j + 1).to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                format!("perm: {body}")
            }
            BroadcastScheme::RoundGenerators(elems) => {
                let body = elems
                    .iter()
                    .map(|e| spec.element_literal(e))
                    .collect::<Vec<_>>()
                    .join(",");
                format!("rounds: {body}")
            }
        }
    }
}

fn parse_permutation(chunk: &str, k: usize) -> Result<Vec<u8>> {
    let entries = chunk
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::parse(0, format!("bad permutation entry {tok:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if entries.len() != k {
        return Err(Error::parse(
            0,
            format!("permutation has {} entries, expected {k}", entries.len()),
        ));
    }
    let mut seen = vec![false; k];
    let mut perm = Vec::with_capacity(k);
    for e in entries {
        if e == 0 || e > k {
            return Err(Error::parse(0, format!("permutation entry {e} out of 1..={k}")));
        }
        if seen[e - 1] {
            return Err(Error::parse(0, format!("duplicate permutation entry {e}")));
        }
        seen[e - 1] = true;
        perm.push((e - 1) as u8);
    }
    Ok(perm)
}

/// Per-round record of a simulated broadcast.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulationTrace {
    pub origin: u32,
    /// Calls per round, in the deterministic order they were placed.
    pub rounds: Vec<Vec<(u32, u32)>>,
    /// Round at which each vertex learned the message; origin is 0.
    pub informed_time: Vec<Option<u32>>,
    /// Set iff every vertex was informed within the round limit.
    pub completion_round: Option<u32>,
}

impl SimulationTrace {
    pub fn informed_count(&self) -> usize {
        self.informed_time.iter().filter(|t| t.is_some()).count()
    }

    /// Vertices informed at or before round `r`.
    pub fn informed_set(&self, r: u32) -> Vec<u32> {
        self.informed_time
            .iter()
            .enumerate()
            .filter(|(_, t)| matches!(t, Some(ti) if *ti <= r))
            .map(|(v, _)| v as u32)
            .collect()
    }

    /// One line per round: `caller->callee` pairs, comma-separated.
    pub fn text(&self) -> String {
        let mut out = String::new();
        for (i, calls) in self.rounds.iter().enumerate() {
            let body = calls
                .iter()
                .map(|(u, v)| format!("{u}->{v}"))
                .collect::<Vec<_>>()
                .join(",");
            writeln!(out, "round {}: {}", i + 1, body).expect("write to string");
        }
        out
    }
}

/// Options controlling [`simulate`].
#[derive(Debug, Clone, Copy, Default)]
pub struct SimOptions {
    /// Round limit; defaults to `2*ceil(log2 n) + |S|`.
    pub max_rounds: Option<u32>,
    /// Keep the receipt generator in personal call lists (the naive
    /// reading: every vertex runs the full scheme order from the start).
    pub keep_receipt_generator: bool,
}

pub fn default_max_rounds(n: usize, generator_count: usize) -> u32 {
    2 * log2_ceil(n) + generator_count as u32
}

pub(crate) fn log2_ceil(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// Deterministically simulate a broadcast from `origin`.
///
/// For order-based schemes every informed vertex attempts one call per
/// round, advancing its personal generator pointer whether or not the call
/// succeeds. Proposals are processed by (receipt time, vertex rank); a call
/// whose caller or target is already engaged this round fails. Blind calls
/// to informed targets are placed and waste the round for both parties.
pub fn simulate(
    cg: &CayleyGraph,
    scheme: &BroadcastScheme,
    origin: u32,
    opts: SimOptions,
) -> Result<SimulationTrace> {
    let n = cg.vertex_count();
    if (origin as usize) >= n {
        return Err(Error::SchemeMismatch(format!(
            "origin {origin} out of range for {n} vertices"
        )));
    }
    let k = cg.generator_count();
    match scheme {
        BroadcastScheme::ReceiptPermutations(perms) => {
            if perms.is_empty() {
                return Err(Error::SchemeMismatch("empty permutation list".into()));
            }
            for p in perms {
                if p.len() != k || {
                    let mut seen = vec![false; k];
                    p.iter().any(|&j| {
                        (j as usize) >= k || std::mem::replace(&mut seen[j as usize], true)
                    })
                } {
                    return Err(Error::SchemeMismatch(format!(
                        "permutation {p:?} is not a bijection on {k} generators"
                    )));
                }
            }
        }
        BroadcastScheme::RoundGenerators(elems) => {
            for e in elems {
                if cg.generators().index_of(e).is_none() {
                    return Err(Error::SchemeMismatch(format!(
                        "round generator {} is not in the generator set",
                        cg.spec().element_literal(e)
                    )));
                }
            }
        }
        BroadcastScheme::FixedOrder => {}
    }

    let max_rounds = opts
        .max_rounds
        .unwrap_or_else(|| default_max_rounds(n, k));

    match scheme {
        BroadcastScheme::RoundGenerators(elems) => {
            simulate_round_generators(cg, elems, origin, max_rounds)
        }
        _ => simulate_order_based(cg, scheme, origin, max_rounds, opts.keep_receipt_generator),
    }
}

fn simulate_round_generators(
    cg: &CayleyGraph,
    elems: &[Element],
    origin: u32,
    max_rounds: u32,
) -> Result<SimulationTrace> {
    let n = cg.vertex_count();
    let gen_index: Vec<usize> = elems
        .iter()
        .map(|e| cg.generators().index_of(e).expect("validated above"))
        .collect();

    let mut informed_time: Vec<Option<u32>> = vec![None; n];
    informed_time[origin as usize] = Some(0);
    let mut informed: Vec<u32> = vec![origin];
    let mut rounds = Vec::new();
    let mut completion_round = None;

    let limit = (max_rounds as usize).min(gen_index.len());
    for (ri, &j) in gen_index.iter().take(limit).enumerate() {
        let r = ri as u32 + 1;
        let mut calls = Vec::new();
        let mut newly = Vec::new();
        for &v in &informed {
            let w = cg.neighbor(v, j);
            if informed_time[w as usize].is_none() {
                informed_time[w as usize] = Some(r);
                calls.push((v, w));
                newly.push(w);
            }
        }
        newly.sort_unstable();
        informed.extend(newly);
        rounds.push(calls);
        if informed.len() == n {
            completion_round = Some(r);
            break;
        }
    }

    Ok(SimulationTrace {
        origin,
        rounds,
        informed_time,
        completion_round,
    })
}

fn simulate_order_based(
    cg: &CayleyGraph,
    scheme: &BroadcastScheme,
    origin: u32,
    max_rounds: u32,
    keep_receipt: bool,
) -> Result<SimulationTrace> {
    let n = cg.vertex_count();
    let k = cg.generator_count();

    // Personal ordered call list for a vertex informed at `time` whose
    // message arrived along generator `callback` (None for the origin).
    let personal_list = |time: u32, callback: Option<usize>| -> Vec<u8> {
        let base: Vec<u8> = match scheme {
            BroadcastScheme::FixedOrder => match callback {
                Some(c) if !keep_receipt => {
                    // Continue around the generator cycle from the receipt
                    // position, dropping the generator that would call the
                    // informer straight back.
                    (1..k).map(|d| ((c + d) % k) as u8).collect()
                }
                _ => (0..k as u8).collect(),
            },
            BroadcastScheme::ReceiptPermutations(perms) => {
                let idx = (time as usize).min(perms.len() - 1);
                let perm = &perms[idx];
                match callback {
                    Some(c) if !keep_receipt => {
                        perm.iter().copied().filter(|&j| j as usize != c).collect()
                    }
                    _ => perm.clone(),
                }
            }
            BroadcastScheme::RoundGenerators(_) => unreachable!("handled separately"),
        };
        base
    };

    let mut informed_time: Vec<Option<u32>> = vec![None; n];
    let mut call_list: Vec<Vec<u8>> = vec![Vec::new(); n];
    let mut pointer: Vec<usize> = vec![0; n];
    // Priority order: appended in order of (receipt time, vertex rank).
    let mut callers: Vec<u32> = Vec::new();

    informed_time[origin as usize] = Some(0);
    call_list[origin as usize] = personal_list(0, None);
    callers.push(origin);

    let mut rounds = Vec::new();
    let mut completion_round = None;
    let mut informed_count = 1usize;

    for r in 1..=max_rounds {
        let mut engaged = vec![false; n];
        let mut calls = Vec::new();
        let mut newly: Vec<(u32, usize)> = Vec::new();

        for &caller in &callers {
            let v = caller as usize;
            let ptr = pointer[v];
            if ptr >= call_list[v].len() {
                continue;
            }
            let gen = call_list[v][ptr] as usize;
            // The attempt consumes this generator regardless of outcome.
            pointer[v] += 1;
            if engaged[v] {
                continue;
            }
            let w = cg.neighbor(v as u32, gen);
            if engaged[w as usize] {
                continue;
            }
            engaged[v] = true;
            engaged[w as usize] = true;
            calls.push((v as u32, w));
            if informed_time[w as usize].is_none() {
                informed_time[w as usize] = Some(r);
                informed_count += 1;
                newly.push((w, gen));
            }
        }

        newly.sort_unstable_by_key(|&(w, _)| w);
        for (w, gen_used) in newly {
            let callback = cg.inverse_generator(gen_used);
            call_list[w as usize] = personal_list(r, Some(callback));
            callers.push(w);
        }

        rounds.push(calls);
        if informed_count == n {
            completion_round = Some(r);
            break;
        }
    }

    Ok(SimulationTrace {
        origin,
        rounds,
        informed_time,
        completion_round,
    })
}

/// Completion round of a broadcast from the identity vertex; `None` when
/// the scheme does not finish within the round limit. By vertex-transitivity
/// this bounds the broadcast time of the whole Cayley graph.
pub fn broadcast_time_under_scheme(
    cg: &CayleyGraph,
    scheme: &BroadcastScheme,
    opts: SimOptions,
) -> Result<Option<u32>> {
    if !cg.is_connected() {
        return Err(Error::Disconnected);
    }
    let trace = simulate(cg, scheme, cg.identity_vertex(), opts)?;
    Ok(trace.completion_round)
}

/// The broadcast scheme of the dihedral construction: round generators
/// w x^(2^(k-1) - 1) for k = 1..degree, then w once more.
pub fn dihedral_scheme(degree: u32) -> Result<BroadcastScheme> {
    if degree < 2 {
        return Err(Error::InvalidSearch(
            "the dihedral scheme needs degree >= 2".into(),
        ));
    }
    let mut rounds: Vec<Element> = (1..=degree)
        .map(|k| Element::Dihedral {
            flip: 1,
            rot: (1u64 << (k - 1)) - 1,
        })
        .collect();
    rounds.push(Element::Dihedral { flip: 1, rot: 0 });
    Ok(BroadcastScheme::RoundGenerators(rounds))
}

/// First violated trace invariant, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceViolation {
    /// 1-based round number, when the violation is tied to a round.
    pub round: Option<u32>,
    pub message: String,
}

/// Check a trace against the telephone-model invariants: per-round calls
/// form a matching over graph edges, callers were informed before the
/// round, receipt times match first successful calls, and the completion
/// marker is consistent.
pub fn validate_trace(g: &Graph, trace: &SimulationTrace) -> Option<TraceViolation> {
    let n = g.vertex_count();
    let fail = |round: Option<u32>, message: String| Some(TraceViolation { round, message });

    if trace.informed_time.len() != n {
        return fail(
            None,
            format!(
                "trace covers {} vertices, graph has {n}",
                trace.informed_time.len()
            ),
        );
    }
    if (trace.origin as usize) >= n {
        return fail(None, format!("origin {} out of range", trace.origin));
    }
    if trace.informed_time[trace.origin as usize] != Some(0) {
        return fail(None, "origin is not informed at time 0".into());
    }

    let mut first_callee: Vec<Option<u32>> = vec![None; n];
    for (ri, calls) in trace.rounds.iter().enumerate() {
        let r = ri as u32 + 1;
        let mut busy = vec![false; n];
        for &(u, v) in calls {
            if (u as usize) >= n || (v as usize) >= n {
                return fail(Some(r), format!("call ({u},{v}) out of range"));
            }
            if !g.has_edge(u, v) {
                return fail(Some(r), format!("call ({u},{v}) is not along an edge"));
            }
            match trace.informed_time[u as usize] {
                Some(t) if t < r => {}
                _ => return fail(Some(r), format!("caller {u} uninformed at round {r}")),
            }
            if busy[u as usize] || busy[v as usize] {
                return fail(Some(r), format!("matching violated at call ({u},{v})"));
            }
            busy[u as usize] = true;
            busy[v as usize] = true;
            if first_callee[v as usize].is_none() {
                first_callee[v as usize] = Some(r);
            }
        }
    }

    for (v, (&stated, &first)) in trace.informed_time.iter().zip(&first_callee).enumerate() {
        if v as u32 == trace.origin {
            continue;
        }
        match (stated, first) {
            (Some(t), Some(f)) if t == f => {}
            (None, None) => {}
            (Some(t), f) => {
                return fail(
                    Some(t),
                    format!("vertex {v} stated informed at {t}, first called at {f:?}"),
                )
            }
            (None, Some(f)) => {
                return fail(Some(f), format!("vertex {v} called at {f} but marked uninformed"))
            }
        }
    }

    let all_informed = trace.informed_time.iter().all(|t| t.is_some());
    let max_time = trace
        .informed_time
        .iter()
        .filter_map(|t| *t)
        .max()
        .unwrap_or(0);
    match trace.completion_round {
        Some(c) => {
            if !all_informed {
                return fail(Some(c), "completion claimed but vertices remain uninformed".into());
            }
            if c != max_time {
                return fail(
                    Some(c),
                    format!("completion round {c} does not match last receipt {max_time}"),
                );
            }
        }
        None => {
            if all_informed {
                return fail(None, "all vertices informed but no completion round set".into());
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{build_cayley, hypercube};
    use crate::group::GeneratorSet;

    fn cycle_cayley(n: u64) -> CayleyGraph {
        let spec = GroupSpec::Cyclic(n);
        let gens = GeneratorSet::new(
            &spec,
            vec![Element::Cyclic(1), Element::Cyclic(n - 1)],
        )
        .unwrap();
        build_cayley(&spec, &gens).unwrap()
    }

    #[test]
    fn hypercube_fixed_order_completes_in_dimension_rounds() {
        for r in 1..=6u32 {
            let q = hypercube(r).unwrap();
            let t = broadcast_time_under_scheme(&q, &BroadcastScheme::FixedOrder, SimOptions::default())
                .unwrap();
            assert_eq!(t, Some(r), "Q_{r}");
        }
    }

    #[test]
    fn k2_completes_in_one_round() {
        let spec = GroupSpec::Cyclic(2);
        let gens = GeneratorSet::new(&spec, vec![Element::Cyclic(1)]).unwrap();
        let g = build_cayley(&spec, &gens).unwrap();
        let trace = simulate(&g, &BroadcastScheme::FixedOrder, 0, SimOptions::default()).unwrap();
        assert_eq!(trace.completion_round, Some(1));
        assert_eq!(trace.rounds[0], vec![(0, 1)]);
    }

    #[test]
    fn cycle_10_fixed_order_completes_in_five() {
        let g = cycle_cayley(10);
        let trace = simulate(&g, &BroadcastScheme::FixedOrder, 0, SimOptions::default()).unwrap();
        assert_eq!(trace.completion_round, Some(5));
    }

    #[test]
    fn even_cycles_broadcast_in_half_length() {
        for t in 2..=10u64 {
            let g = cycle_cayley(2 * t);
            let got =
                broadcast_time_under_scheme(&g, &BroadcastScheme::FixedOrder, SimOptions::default())
                    .unwrap();
            assert_eq!(got, Some(t as u32), "C_{}", 2 * t);
        }
    }

    #[test]
    fn keep_receipt_generator_breaks_the_cycle_row() {
        let g = cycle_cayley(6);
        let opts = SimOptions {
            keep_receipt_generator: true,
            ..Default::default()
        };
        let trace = simulate(&g, &BroadcastScheme::FixedOrder, 0, opts).unwrap();
        assert_ne!(trace.completion_round, Some(3));
    }

    #[test]
    fn dihedral_scheme_generator_sequence() {
        let spec = GroupSpec::Dihedral(7);
        let s = dihedral_scheme(3).unwrap();
        assert_eq!(s.text(&spec), "rounds: (1,0),(1,1),(1,3),(1,0)");
        let s2 = dihedral_scheme(2).unwrap();
        assert_eq!(s2.text(&spec), "rounds: (1,0),(1,1),(1,0)");
        let s4 = dihedral_scheme(4).unwrap();
        assert_eq!(s4.text(&spec), "rounds: (1,0),(1,1),(1,3),(1,7),(1,0)");
        assert!(dihedral_scheme(1).is_err());
    }

    #[test]
    fn dihedral_7_scheme_completes_in_four() {
        let spec = GroupSpec::Dihedral(7);
        let gens = GeneratorSet::parse(&spec, "(1,0),(1,1),(1,3)").unwrap();
        let g = build_cayley(&spec, &gens).unwrap();
        let t = broadcast_time_under_scheme(&g, &dihedral_scheme(3).unwrap(), SimOptions::default())
            .unwrap();
        assert_eq!(t, Some(4));
    }

    #[test]
    fn simulated_traces_validate() {
        let q4 = hypercube(4).unwrap();
        let trace = simulate(&q4, &BroadcastScheme::FixedOrder, 3, SimOptions::default()).unwrap();
        assert_eq!(validate_trace(q4.graph(), &trace), None);

        let g = cycle_cayley(9);
        let trace = simulate(&g, &BroadcastScheme::FixedOrder, 2, SimOptions::default()).unwrap();
        assert_eq!(validate_trace(g.graph(), &trace), None);
        assert_eq!(trace.completion_round, Some(5));
    }

    #[test]
    fn hand_built_violations_are_caught() {
        let g = crate::graph::named_graph("cycle(4)").unwrap();
        // Two calls sharing a callee in one round.
        let bad = SimulationTrace {
            origin: 0,
            rounds: vec![vec![(0, 1)], vec![(0, 3), (1, 2)], vec![(2, 3), (0, 3)]],
            informed_time: vec![Some(0), Some(1), Some(2), Some(2)],
            completion_round: Some(2),
        };
        let v = validate_trace(&g, &bad).unwrap();
        assert!(v.message.contains("matching"), "{v:?}");
        assert_eq!(v.round, Some(3));

        // Caller not yet informed.
        let bad = SimulationTrace {
            origin: 0,
            rounds: vec![vec![(2, 1)]],
            informed_time: vec![Some(0), Some(1), None, None],
            completion_round: None,
        };
        let v = validate_trace(&g, &bad).unwrap();
        assert!(v.message.contains("uninformed"), "{v:?}");

        // Call not along an edge.
        let bad = SimulationTrace {
            origin: 0,
            rounds: vec![vec![(0, 2)]],
            informed_time: vec![Some(0), None, Some(1), None],
            completion_round: None,
        };
        let v = validate_trace(&g, &bad).unwrap();
        assert!(v.message.contains("edge"), "{v:?}");
    }

    #[test]
    fn scheme_text_round_trips() {
        let spec = GroupSpec::Dihedral(7);
        for text in [
            "fixed",
            "perm: 2,1,3; 1,3,2",
            "rounds: (1,0),(1,1),(1,3),(1,0)",
        ] {
            let s = BroadcastScheme::parse(&spec, 3, text).unwrap();
            let rendered = s.text(&spec);
            let again = BroadcastScheme::parse(&spec, 3, &rendered).unwrap();
            assert_eq!(s, again);
        }
        assert!(BroadcastScheme::parse(&spec, 3, "perm: 1,2").is_err());
        assert!(BroadcastScheme::parse(&spec, 3, "perm: 1,1,2").is_err());
        assert!(BroadcastScheme::parse(&spec, 3, "perm: 0,1,2").is_err());
        assert!(BroadcastScheme::parse(&spec, 3, "nonsense").is_err());
    }

    #[test]
    fn round_generators_must_belong_to_the_set() {
        let spec = GroupSpec::Dihedral(7);
        let gens = GeneratorSet::parse(&spec, "(1,0),(1,1),(1,3)").unwrap();
        let g = build_cayley(&spec, &gens).unwrap();
        let scheme = BroadcastScheme::RoundGenerators(vec![Element::Dihedral { flip: 1, rot: 2 }]);
        match simulate(&g, &scheme, 0, SimOptions::default()) {
            Err(Error::SchemeMismatch(_)) => {}
            other => panic!("expected SchemeMismatch, got {other:?}"),
        }
    }

    #[test]
    fn incomplete_runs_report_no_completion() {
        let g = cycle_cayley(12);
        let opts = SimOptions {
            max_rounds: Some(3),
            ..Default::default()
        };
        let trace = simulate(&g, &BroadcastScheme::FixedOrder, 0, opts).unwrap();
        assert_eq!(trace.completion_round, None);
        assert!(trace.informed_count() < 12);
        assert_eq!(validate_trace(g.graph(), &trace), None);
    }

    #[test]
    fn receipt_permutations_follow_their_order() {
        // On Q_3, giving every receipt time the reversed order flips which
        // dimension is used first but still completes.
        let q3 = hypercube(3).unwrap();
        let scheme = BroadcastScheme::ReceiptPermutations(vec![
            vec![2, 1, 0],
            vec![2, 1, 0],
            vec![2, 1, 0],
        ]);
        let trace = simulate(&q3, &scheme, 0, SimOptions::default()).unwrap();
        assert_eq!(validate_trace(q3.graph(), &trace), None);
        assert_eq!(trace.rounds[0], vec![(0, 1)]);
        assert!(trace.completion_round.is_some());
    }

    #[test]
    fn trace_text_lists_rounds() {
        let q2 = hypercube(2).unwrap();
        let trace = simulate(&q2, &BroadcastScheme::FixedOrder, 0, SimOptions::default()).unwrap();
        let text = trace.text();
        assert!(text.starts_with("round 1: 0->2\n"));
        assert_eq!(text.lines().count(), trace.rounds.len());
    }
}
