//! Cayley graph construction: vertices are the group elements in canonical
//! rank order, with an edge {a, b} whenever a*s = b for some generator s.
//!
//! The generator-to-neighbor map is kept alongside the plain adjacency
//! structure because broadcast schemes address neighbors by generator, not
//! by edge.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{Element, GeneratorSet, GroupSpec, DEFAULT_ORDER_LIMIT};

#[derive(Debug, Clone)]
pub struct CayleyGraph {
    graph: Graph,
    spec: GroupSpec,
    generators: GeneratorSet,
    /// `neighbor_by_gen[v][j]` is the vertex of `element(v) * s_j`.
    neighbor_by_gen: Vec<Vec<u32>>,
    /// For generator j, the index of its inverse in the set.
    inverse_gen: Vec<u8>,
    identity: u32,
    connected: bool,
}

impl CayleyGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn identity_vertex(&self) -> u32 {
        self.identity
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Vertex reached from `v` by multiplying with generator `j`.
    pub fn neighbor(&self, v: u32, j: usize) -> u32 {
        self.neighbor_by_gen[v as usize][j]
    }

    /// Index of the generator inverse to generator `j`.
    pub fn inverse_generator(&self, j: usize) -> usize {
        self.inverse_gen[j] as usize
    }

    /// Element sitting at a vertex.
    pub fn element(&self, v: u32) -> Element {
        self.spec.unrank(v as u64)
    }

    /// Vertex of an element.
    pub fn vertex(&self, e: &Element) -> Result<u32> {
        if !self.spec.contains(e) {
            return Err(Error::NotAMember {
                literal: format!("{e:?}"),
                group: self.spec.to_string(),
            });
        }
        Ok(self.spec.rank(e) as u32)
    }
}

/// Build the Cayley graph of a group with an inverse-closed generator set.
///
/// A non-generating set yields a disconnected graph, which is representable
/// (callers can consult [`CayleyGraph::is_connected`]); a set that is not
/// inverse-closed is an error.
pub fn build_cayley(spec: &GroupSpec, generators: &GeneratorSet) -> Result<CayleyGraph> {
    build_cayley_with_limit(spec, generators, DEFAULT_ORDER_LIMIT)
}

pub fn build_cayley_with_limit(
    spec: &GroupSpec,
    generators: &GeneratorSet,
    limit: u64,
) -> Result<CayleyGraph> {
    spec.validate()?;
    let order = spec.order();
    if order > limit as u128 {
        return Err(Error::GroupTooLarge {
            order,
            limit,
        });
    }
    let n = order as usize;

    let inverse_indices = generators.inverse_indices(spec);
    let mut inverse_gen = Vec::with_capacity(generators.len());
    for (j, inv) in inverse_indices.iter().enumerate() {
        match inv {
            Some(i) => inverse_gen.push(*i as u8),
            None => {
                return Err(Error::InvalidGenerators(format!(
                    "not inverse-closed: {} has no inverse in the set",
                    spec.element_literal(&generators.elements()[j])
                )))
            }
        }
    }

    let mut neighbor_by_gen = Vec::with_capacity(n);
    let mut adj: Vec<Vec<u32>> = Vec::with_capacity(n);
    for v in 0..n as u64 {
        let elem = spec.unrank(v);
        let row: Vec<u32> = generators
            .elements()
            .iter()
            .map(|s| spec.rank(&spec.mul_unchecked(&elem, s)) as u32)
            .collect();
        let mut list = row.clone();
        list.sort_unstable();
        list.dedup();
        adj.push(list);
        neighbor_by_gen.push(row);
    }

    let graph = Graph::from_adjacency(adj);
    let identity = spec.rank(&spec.identity()) as u32;
    let connected = graph.is_connected();

    Ok(CayleyGraph {
        graph,
        spec: spec.clone(),
        generators: generators.clone(),
        neighbor_by_gen,
        inverse_gen,
        identity,
        connected,
    })
}

/// The r-dimensional hypercube as the Cayley graph of Z_2^r with the
/// standard basis generators (highest bit first, matching literal order
/// `100..`, `010..`, ...).
pub fn hypercube(r: u32) -> Result<CayleyGraph> {
    let spec = GroupSpec::Z2Pow(r);
    spec.validate()?;
    let basis = (0..r).rev().map(|b| Element::Bits(1 << b)).collect();
    let generators = GeneratorSet::new(&spec, basis)?;
    build_cayley(&spec, &generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::validate_generators;

    #[test]
    fn hypercube_q3_shape() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.graph().edge_count(), 12);
        assert!(q3.graph().is_regular() && q3.graph().degree(0) == 3);
        assert!(q3.is_connected());
    }

    #[test]
    fn k2_as_cayley_graph() {
        let spec = GroupSpec::parse("cyclic(2)").unwrap();
        let gens = GeneratorSet::parse(&spec, "1").unwrap();
        let g = build_cayley(&spec, &gens).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.graph().edge_count(), 1);
    }

    #[test]
    fn the_156_vertex_example() {
        let spec = GroupSpec::parse("semidirect(12,13,2)").unwrap();
        let gens = GeneratorSet::parse(&spec, "(7,1),(5,7),(6,0)").unwrap();
        let g = build_cayley(&spec, &gens).unwrap();
        assert_eq!(g.vertex_count(), 156);
        assert!(g.graph().is_regular() && g.graph().degree(0) == 3);
        assert!(g.is_connected());
    }

    #[test]
    fn adjacency_matches_the_right_multiplication_rule() {
        let spec = GroupSpec::parse("dihedral(7)").unwrap();
        let gens = GeneratorSet::parse(&spec, "(1,0),(1,1),(1,3)").unwrap();
        let g = build_cayley(&spec, &gens).unwrap();
        for v in 0..g.vertex_count() as u32 {
            let elem = g.element(v);
            let mut expected: Vec<u32> = gens
                .elements()
                .iter()
                .map(|s| g.vertex(&spec.mul_unchecked(&elem, s)).unwrap())
                .collect();
            expected.sort_unstable();
            expected.dedup();
            assert_eq!(g.graph().neighbors(v), &expected[..]);
        }
    }

    #[test]
    fn non_generating_set_builds_disconnected() {
        let spec = GroupSpec::parse("cyclic(4)").unwrap();
        let gens = GeneratorSet::parse(&spec, "2").unwrap();
        let report = validate_generators(&spec, &gens).unwrap();
        assert!(!report.generates);
        let g = build_cayley(&spec, &gens).unwrap();
        assert!(!g.is_connected());
    }

    #[test]
    fn non_inverse_closed_set_is_rejected() {
        let spec = GroupSpec::parse("cyclic(5)").unwrap();
        let gens = GeneratorSet::parse(&spec, "1").unwrap();
        assert!(build_cayley(&spec, &gens).is_err());
    }

    #[test]
    fn cayley_graphs_are_regular_and_symmetric() {
        for (spec, gens) in [
            ("dihedral(7)", "(1,0),(1,1),(1,3)"),
            ("cyclic(10)", "1,9"),
            ("product(cyclic(3),cyclic(3))", "(1,0),(2,0),(0,1),(0,2)"),
            ("semidirect(12,13,2)", "(7,1),(5,7),(6,0)"),
        ] {
            let spec = GroupSpec::parse(spec).unwrap();
            let gens = GeneratorSet::parse(&spec, gens).unwrap();
            let g = build_cayley(&spec, &gens).unwrap();
            assert!(g.vertex_count() <= 200);
            for v in 0..g.vertex_count() as u32 {
                assert_eq!(g.graph().degree(v), gens.len());
                for &w in g.graph().neighbors(v) {
                    assert!(g.graph().has_edge(w, v), "asymmetric edge ({v},{w})");
                }
            }
        }
    }

    #[test]
    fn hypercube_diameter_is_the_dimension() {
        for r in 1..=10u32 {
            let q = hypercube(r).unwrap();
            assert_eq!(q.graph().diameter().unwrap(), r, "Q_{r}");
        }
    }
}
