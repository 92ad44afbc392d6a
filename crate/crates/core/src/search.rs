//! Seeded experimental search over (group, generator set, scheme) triples
//! for record broadcast networks.
//!
//! The search plans a deterministic candidate stream first (groups in a
//! family, inverse-closed generator sets as unions of involutions and
//! inverse pairs, schemes per policy), then evaluates candidates in
//! parallel. Results merge by (order, plan position), so the outcome is
//! independent of thread count.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::moore_bound;
use crate::catalog::CatalogRecord;
use crate::cayley::build_cayley;
use crate::error::{Error, Result};
use crate::group::{validate_generators, Element, GeneratorSet, GroupSpec};
use crate::sim::{simulate, BroadcastScheme, SimOptions};

/// Families of groups the search can enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupFamily {
    Dihedral,
    Cyclic,
    Z2Pow,
    Semidirect,
}

impl GroupFamily {
    pub fn parse(s: &str) -> Result<GroupFamily> {
        match s {
            "dihedral" => Ok(GroupFamily::Dihedral),
            "cyclic" => Ok(GroupFamily::Cyclic),
            "z2pow" => Ok(GroupFamily::Z2Pow),
            "semidirect" => Ok(GroupFamily::Semidirect),
            other => Err(Error::InvalidSearch(format!("unknown family {other:?}"))),
        }
    }
}

/// What groups and generator sets to try.
#[derive(Debug, Clone)]
pub enum GroupScope {
    /// Enumerate all groups of a family up to the order cap.
    Family(GroupFamily),
    /// One group; with `generators` set, only schemes are searched.
    Fixed {
        spec: GroupSpec,
        generators: Option<GeneratorSet>,
    },
}

/// How schemes are produced for each generator set.
#[derive(Debug, Clone, Copy)]
pub struct SchemePolicy {
    /// Try fixed-order schemes over generator orderings: all of them when
    /// k! is at most this cap, otherwise none (orderings explode).
    pub max_orderings: u64,
    /// Receipt-permutation schemes sampled per generator set.
    pub permutation_samples: u64,
}

impl Default for SchemePolicy {
    fn default() -> Self {
        SchemePolicy {
            max_orderings: 720,
            permutation_samples: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchSpace {
    pub scope: GroupScope,
    pub delta: u32,
    pub time: u32,
    /// Group order cap; also capped by the Moore bound at (delta, time).
    pub max_order: u64,
    /// Total scheme evaluations allowed.
    pub budget: u64,
    pub seed: u64,
    pub policy: SchemePolicy,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Successful candidates, best order first; capped at 100 entries.
    pub candidates: Vec<CatalogRecord>,
    pub evaluated: u64,
    pub groups_tried: usize,
    pub generator_sets_tried: usize,
}

enum SchemeKind {
    /// FixedOrder over this plan item's generator ordering.
    Fixed,
    /// Receipt permutations drawn from a dedicated RNG stream.
    PermStream(u64),
}

struct PlanItem {
    index: usize,
    spec: GroupSpec,
    gens: Vec<Element>,
    schemes: Vec<SchemeKind>,
}

/// Enumerate (group, generators, scheme) candidates and keep the triples
/// whose broadcast from the identity completes within the time bound.
/// Deterministic for a fixed seed, independent of `jobs`.
pub fn run_search(space: &SearchSpace, jobs: usize) -> Result<SearchOutcome> {
    if space.budget == 0 {
        return Err(Error::InvalidSearch("budget must be positive".into()));
    }
    if space.delta < 1 || space.time < 1 {
        return Err(Error::InvalidSearch("delta and time must be at least 1".into()));
    }

    let bound = moore_bound(space.delta, space.time);
    let bound_cap = u64::try_from(&bound).unwrap_or(u64::MAX);
    let max_order = space.max_order.min(bound_cap);

    let groups = match &space.scope {
        GroupScope::Family(family) => enumerate_groups(*family, max_order),
        GroupScope::Fixed { spec, .. } => {
            if spec.order() > max_order as u128 {
                Vec::new()
            } else {
                vec![spec.clone()]
            }
        }
    };
    if groups.is_empty() {
        return Err(Error::InvalidSearch(format!(
            "no groups of order <= {max_order} in the search space"
        )));
    }

    let plan = build_plan(space, &groups)?;
    if plan.is_empty() {
        return Err(Error::InvalidSearch("no candidate generator sets in the space".into()));
    }
    let groups_tried = groups.len();
    let generator_sets_tried = plan.len();

    let evaluate_all = || {
        plan.par_iter()
            .map(|item| evaluate_item(space, item))
            .collect::<Vec<_>>()
    };
    let results: Vec<(u64, Vec<(usize, CatalogRecord)>)> = if jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidSearch(format!("thread pool: {e}")))?
            .install(evaluate_all)
    } else {
        evaluate_all()
    };

    let mut evaluated = 0u64;
    let mut found: Vec<(usize, CatalogRecord)> = Vec::new();
    for (count, records) in results {
        evaluated += count;
        found.extend(records);
    }
    found.sort_by(|(ia, a), (ib, b)| b.order.cmp(&a.order).then(ia.cmp(ib)));
    found.truncate(100);

    Ok(SearchOutcome {
        candidates: found.into_iter().map(|(_, r)| r).collect(),
        evaluated,
        groups_tried,
        generator_sets_tried,
    })
}

fn enumerate_groups(family: GroupFamily, max_order: u64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    match family {
        GroupFamily::Dihedral => {
            let mut n = 2;
            while 2 * n <= max_order {
                out.push(GroupSpec::Dihedral(n));
                n += 1;
            }
        }
        GroupFamily::Cyclic => {
            for n in 3..=max_order {
                out.push(GroupSpec::Cyclic(n));
            }
        }
        GroupFamily::Z2Pow => {
            let mut r = 1;
            while (1u128 << r) <= max_order as u128 {
                out.push(GroupSpec::Z2Pow(r));
                r += 1;
            }
        }
        GroupFamily::Semidirect => {
            for m in 2..=max_order / 2 {
                for n in 2..=max_order / m {
                    for g in 2..n {
                        let spec = GroupSpec::Semidirect { m, n, g };
                        if spec.validate().is_ok() {
                            out.push(spec);
                        }
                    }
                }
            }
        }
    }
    out
}

fn build_plan(space: &SearchSpace, groups: &[GroupSpec]) -> Result<Vec<PlanItem>> {
    let mut plan: Vec<PlanItem> = Vec::new();
    let mut scheme_budget = space.budget;
    let mut stream_counter = 0u64;
    let mut index = 0usize;

    'groups: for spec in groups {
        let gensets: Vec<Vec<Element>> = match &space.scope {
            GroupScope::Fixed {
                generators: Some(gens),
                ..
            } => vec![gens.elements().to_vec()],
            _ => enumerate_generator_sets(spec, space.delta)?,
        };
        for gens in gensets {
            if scheme_budget == 0 {
                break 'groups;
            }
            let set = match GeneratorSet::new(spec, gens.clone()) {
                Ok(s) => s,
                Err(_) => continue,
            };
            // Non-generating sets give disconnected graphs: reject here.
            match validate_generators(spec, &set) {
                Ok(report) if report.is_valid() => {}
                _ => continue,
            }
            let k = set.len() as u64;
            let factorial: u64 = (1..=k).product();

            if factorial <= space.policy.max_orderings {
                for ordering in 0..factorial {
                    if scheme_budget == 0 {
                        break 'groups;
                    }
                    let perm = nth_permutation(k as usize, ordering);
                    let ordered: Vec<Element> =
                        perm.iter().map(|&j| gens[j as usize].clone()).collect();
                    plan.push(PlanItem {
                        index,
                        spec: spec.clone(),
                        gens: ordered,
                        schemes: vec![SchemeKind::Fixed],
                    });
                    index += 1;
                    scheme_budget -= 1;
                }
            }

            if space.policy.permutation_samples > 0 {
                // Chunk sample streams so large scheme searches on one
                // generator set still spread across the worker pool.
                const CHUNK: u64 = 512;
                let mut remaining = space.policy.permutation_samples.min(scheme_budget);
                scheme_budget -= remaining;
                while remaining > 0 {
                    let take = remaining.min(CHUNK);
                    let schemes = (0..take)
                        .map(|_| {
                            let s = SchemeKind::PermStream(stream_counter);
                            stream_counter += 1;
                            s
                        })
                        .collect();
                    plan.push(PlanItem {
                        index,
                        spec: spec.clone(),
                        gens: gens.clone(),
                        schemes,
                    });
                    index += 1;
                    remaining -= take;
                }
            }
        }
    }
    Ok(plan)
}

/// Inverse-closed generator sets as unions of involutions and inverse
/// pairs, canonicalized by element rank, sizes delta down to 1.
fn enumerate_generator_sets(spec: &GroupSpec, delta: u32) -> Result<Vec<Vec<Element>>> {
    let elems = spec.enumerate()?;
    let identity = spec.identity();
    let mut involutions = Vec::new();
    let mut pairs = Vec::new();
    for e in &elems {
        if *e == identity {
            continue;
        }
        let inv = spec.inverse(e)?;
        if inv == *e {
            involutions.push(e.clone());
        } else if *e < inv {
            pairs.push((e.clone(), inv));
        }
    }

    let mut out = Vec::new();
    for size in (1..=delta as usize).rev() {
        for p in 0..=size / 2 {
            let i = size - 2 * p;
            if i > involutions.len() || p > pairs.len() {
                continue;
            }
            for inv_combo in combinations(involutions.len(), i) {
                for pair_combo in combinations(pairs.len(), p) {
                    let mut gens: Vec<Element> =
                        inv_combo.iter().map(|&j| involutions[j].clone()).collect();
                    for &j in &pair_combo {
                        gens.push(pairs[j].0.clone());
                        gens.push(pairs[j].1.clone());
                    }
                    gens.sort();
                    out.push(gens);
                }
            }
        }
    }
    Ok(out)
}

/// All k-subsets of 0..n in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // Advance the rightmost index that can move.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn nth_permutation(k: usize, mut index: u64) -> Vec<u8> {
    let mut items: Vec<u8> = (0..k as u8).collect();
    let mut fact: u64 = (1..=k as u64).product();
    let mut out = Vec::with_capacity(k);
    for i in (1..=k).rev() {
        fact /= i as u64;
        let j = (index / fact) as usize;
        index %= fact;
        out.push(items.remove(j));
    }
    out
}

fn evaluate_item(space: &SearchSpace, item: &PlanItem) -> (u64, Vec<(usize, CatalogRecord)>) {
    let mut evaluated = 0u64;
    let mut found = Vec::new();
    let set = match GeneratorSet::new(&item.spec, item.gens.clone()) {
        Ok(s) => s,
        Err(_) => return (0, found),
    };
    let cg = match build_cayley(&item.spec, &set) {
        Ok(g) => g,
        Err(_) => return (0, found),
    };
    if !cg.is_connected() {
        return (0, found);
    }
    let opts = SimOptions {
        max_rounds: Some(space.time),
        ..Default::default()
    };
    let k = set.len();

    for scheme_kind in &item.schemes {
        let scheme = match scheme_kind {
            SchemeKind::Fixed => BroadcastScheme::FixedOrder,
            SchemeKind::PermStream(stream) => {
                let mut rng = ChaCha8Rng::seed_from_u64(space.seed ^ stream.wrapping_mul(0x9e3779b97f4a7c15));
                let perms = (0..space.time)
                    .map(|_| {
                        let mut p: Vec<u8> = (0..k as u8).collect();
                        p.shuffle(&mut rng);
                        p
                    })
                    .collect();
                BroadcastScheme::ReceiptPermutations(perms)
            }
        };
        evaluated += 1;
        let trace = match simulate(&cg, &scheme, cg.identity_vertex(), opts) {
            Ok(t) => t,
            Err(_) => continue,
        };
        if let Some(rounds) = trace.completion_round {
            let rec = CatalogRecord::new(
                space.delta,
                space.time,
                cg.vertex_count() as u64,
                item.spec.to_string(),
                set.literal(&item.spec),
                scheme.text(&item.spec),
                rounds,
                format!("search seed={} item={}", space.seed, item.index),
            );
            found.push((item.index, rec));
        }
    }
    (evaluated, found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::verify_record;

    fn space(scope: GroupScope, delta: u32, time: u32, budget: u64) -> SearchSpace {
        SearchSpace {
            scope,
            delta,
            time,
            max_order: u64::MAX,
            budget,
            seed: 7,
            policy: SchemePolicy::default(),
        }
    }

    #[test]
    fn dihedral_search_finds_the_order_14_record() {
        let outcome = run_search(
            &space(GroupScope::Family(GroupFamily::Dihedral), 3, 4, 10_000),
            0,
        )
        .unwrap();
        let best = &outcome.candidates[0];
        assert_eq!(best.order, 14);
        assert_eq!(best.group, "dihedral(7)");
        assert!(best.rounds <= 4);
        assert_eq!(verify_record(best), Ok(()));
    }

    #[test]
    fn z2pow_search_finds_the_hypercube() {
        let outcome = run_search(
            &space(GroupScope::Family(GroupFamily::Z2Pow), 3, 3, 2_000),
            0,
        )
        .unwrap();
        let best = &outcome.candidates[0];
        assert_eq!(best.order, 8);
        assert_eq!(best.group, "z2pow(3)");
    }

    #[test]
    fn search_is_deterministic_across_thread_counts() {
        let sp = space(GroupScope::Family(GroupFamily::Dihedral), 3, 4, 2_000);
        let a = run_search(&sp, 1).unwrap();
        let b = run_search(&sp, 4).unwrap();
        let lines_a: Vec<String> = a.candidates.iter().map(|r| r.to_line()).collect();
        let lines_b: Vec<String> = b.candidates.iter().map(|r| r.to_line()).collect();
        assert_eq!(lines_a, lines_b);
        assert_eq!(a.evaluated, b.evaluated);
    }

    #[test]
    fn zero_budget_is_rejected() {
        match run_search(&space(GroupScope::Family(GroupFamily::Dihedral), 3, 4, 0), 0) {
            Err(Error::InvalidSearch(msg)) => assert!(msg.contains("budget")),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn empty_space_is_rejected() {
        let mut sp = space(GroupScope::Family(GroupFamily::Dihedral), 3, 4, 100);
        sp.max_order = 3; // no dihedral group has order <= 3
        match run_search(&sp, 0) {
            Err(Error::InvalidSearch(msg)) => assert!(msg.contains("no groups")),
            other => panic!("expected empty-space error, got {other:?}"),
        }
    }

    #[test]
    fn fixed_scope_searches_schemes_only() {
        let spec = GroupSpec::parse("semidirect(12,13,2)").unwrap();
        let gens = GeneratorSet::parse(&spec, "(7,1),(5,7),(6,0)").unwrap();
        let sp = SearchSpace {
            scope: GroupScope::Fixed {
                spec,
                generators: Some(gens),
            },
            delta: 3,
            time: 12,
            max_order: u64::MAX,
            budget: 50,
            seed: 1,
            policy: SchemePolicy {
                max_orderings: 6,
                permutation_samples: 44,
            },
        };
        let outcome = run_search(&sp, 0).unwrap();
        assert_eq!(outcome.groups_tried, 1);
        assert!(outcome.evaluated <= 50);
        for rec in &outcome.candidates {
            assert_eq!(rec.order, 156);
            assert!(rec.rounds <= 12);
        }
    }

    #[test]
    fn combination_and_permutation_helpers() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3), Vec::<Vec<usize>>::new());
        let all: Vec<Vec<u8>> = (0..6).map(|i| nth_permutation(3, i)).collect();
        assert_eq!(all.len(), 6);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6, "all 3! orderings distinct");
    }
}
