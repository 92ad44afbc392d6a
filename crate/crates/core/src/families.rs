//! Closed-form record constructions with end-to-end verification: the
//! hypercubes at (degree, degree) and the dihedral family at
//! (degree, degree + 1).
//!
//! The dihedral construction uses D_n with n = 2^degree - 1 and the
//! involution generators w, wx^1, wx^3, ..., wx^(2^(degree-1)-1); its
//! order 2^(degree+1) - 2 meets the Moore-type bound, so the family is
//! optimal.

use num_bigint::BigUint;

use crate::bounds::moore_bound;
use crate::cayley::build_cayley;
use crate::error::{Error, Result};
use crate::group::{validate_generators, Element, GeneratorSet, GroupSpec, DEFAULT_ORDER_LIMIT};
use crate::sim::{simulate, dihedral_scheme, BroadcastScheme, SimOptions};

/// Self-contained witness for one family member: everything needed to
/// rebuild the graph and replay the broadcast.
#[derive(Debug, Clone)]
pub struct FamilyWitness {
    pub degree: u32,
    pub time: u32,
    pub spec: GroupSpec,
    pub generators: GeneratorSet,
    pub scheme: BroadcastScheme,
    pub expected_order: u64,
    pub expected_rounds: u32,
}

/// The dihedral member at degree d: D_(2^d - 1) with d involution
/// generators, broadcasting in d + 1 rounds over 2^(d+1) - 2 vertices.
pub fn dihedral_family(degree: u32) -> Result<FamilyWitness> {
    if degree < 2 {
        return Err(Error::InvalidSearch("dihedral family needs degree >= 2".into()));
    }
    if degree > 19 {
        // 2^(d+1) - 2 would exceed the default enumeration limit.
        return Err(Error::GroupTooLarge {
            order: 2u128.saturating_pow(degree + 1) - 2,
            limit: DEFAULT_ORDER_LIMIT,
        });
    }
    let n = (1u64 << degree) - 1;
    let spec = GroupSpec::Dihedral(n);
    let gens = (1..=degree)
        .map(|k| Element::Dihedral {
            flip: 1,
            rot: (1u64 << (k - 1)) - 1,
        })
        .collect();
    let generators = GeneratorSet::new(&spec, gens)?;
    Ok(FamilyWitness {
        degree,
        time: degree + 1,
        spec,
        generators,
        scheme: dihedral_scheme(degree)?,
        expected_order: 2 * n,
        expected_rounds: degree + 1,
    })
}

/// The hypercube member at degree d: Z_2^d with the standard basis,
/// broadcasting in d rounds over 2^d vertices.
pub fn hypercube_family(degree: u32) -> Result<FamilyWitness> {
    if degree < 1 {
        return Err(Error::InvalidSearch("hypercube family needs degree >= 1".into()));
    }
    if degree > 19 {
        return Err(Error::GroupTooLarge {
            order: 2u128.saturating_pow(degree),
            limit: DEFAULT_ORDER_LIMIT,
        });
    }
    let spec = GroupSpec::Z2Pow(degree);
    let basis = (0..degree).rev().map(|b| Element::Bits(1 << b)).collect();
    let generators = GeneratorSet::new(&spec, basis)?;
    Ok(FamilyWitness {
        degree,
        time: degree,
        spec,
        generators,
        scheme: BroadcastScheme::FixedOrder,
        expected_order: 1 << degree,
        expected_rounds: degree,
    })
}

/// One named check of a family verification.
#[derive(Debug, Clone)]
pub struct FamilyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Full verification record for a witness.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub checks: Vec<FamilyCheck>,
    /// Order achieved, for rendering.
    pub order: u64,
    /// Completion round achieved, when the replay finished.
    pub completed_in: Option<u32>,
    /// The witness meets the Moore-type bound at (degree, time).
    pub optimal: bool,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Rebuild the graph, validate the generators, replay the scheme from the
/// identity, and compare order, degree, completion round, and the
/// Moore-type bound.
pub fn verify_family_witness(w: &FamilyWitness) -> Result<FamilyReport> {
    let mut checks = Vec::new();
    let mut push = |name: &'static str, passed: bool, detail: String| {
        checks.push(FamilyCheck { name, passed, detail });
    };

    let report = validate_generators(&w.spec, &w.generators)?;
    push(
        "generators",
        report.is_valid(),
        format!(
            "inverse-closed: {}, generates {}/{}",
            report.inverse_closed, report.reached, report.order
        ),
    );

    let cg = build_cayley(&w.spec, &w.generators)?;
    let order = cg.vertex_count() as u64;
    push(
        "order",
        order == w.expected_order,
        format!("built {order}, expected {}", w.expected_order),
    );
    let degree = cg.graph().max_degree() as u32;
    push(
        "degree",
        degree == w.degree && cg.graph().is_regular(),
        format!("built degree {degree}, expected {} (regular)", w.degree),
    );

    let completed = match simulate(&cg, &w.scheme, cg.identity_vertex(), SimOptions::default()) {
        Ok(trace) => {
            let completed = trace.completion_round;
            push(
                "completion",
                completed == Some(w.expected_rounds),
                format!("completed in {completed:?}, expected {}", w.expected_rounds),
            );
            completed
        }
        Err(e) => {
            push("completion", false, format!("replay failed: {e}"));
            None
        }
    };

    let bound = moore_bound(w.degree, w.time);
    let optimal = BigUint::from(order) == bound;
    push(
        "moore-bound",
        BigUint::from(order) <= bound,
        format!("order {order} vs bound {bound}"),
    );

    Ok(FamilyReport {
        checks,
        order,
        completed_in: completed,
        optimal,
    })
}
