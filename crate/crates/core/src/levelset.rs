//! The levelset zigzag and its translation into the four decorated diagrams.
//!
//! For critical values `a_1 < … < a_n` the zigzag is
//!
//! ```text
//! F_0 -> S_1 <- F_1 -> S_2 <- … -> S_n <- F_n
//! ```
//!
//! with `S_i ≃ V_i`, `F_i = E_i` for `0 < i < n`, and empty end fibers.

use std::fmt;

use crate::complexes::{homology, induced_homology_map, HomologyBasis};
use crate::diagrams::FourDiagrams;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};
use crate::measures::Behavior;
use crate::rspace::{ConstructibleRSpace, SpaceChains};
use crate::zigzag::{decompose, dualize, Arrow, IntervalMultiset, ZigzagModule};

/// Annotation of a levelset zigzag node, with 0-based critical indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    /// Regular fiber below critical value `i` (and above `i - 1`).
    Fiber(usize),
    /// Slice around critical value `i`.
    Slice(usize),
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeKind::Fiber(i) => write!(f, "F{i}"),
            NodeKind::Slice(i) => write!(f, "S{}", i + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LevelsetZigzag {
    pub module: ZigzagModule,
    pub nodes: Vec<NodeKind>,
}

/// Node annotations `F_0, S_1, F_1, …, S_n, F_n` for `n` critical values.
pub fn node_kinds(n: usize) -> Vec<NodeKind> {
    let mut out = Vec::with_capacity(2 * n + 1);
    for i in 0..n {
        out.push(NodeKind::Fiber(i));
        out.push(NodeKind::Slice(i));
    }
    out.push(NodeKind::Fiber(n));
    out
}

/// `H_k` of the levelset zigzag, from the chain data of the space.
pub fn levelset_zigzag_from_chains(chains: &SpaceChains, k: usize) -> Result<LevelsetZigzag> {
    let field = chains.field();
    let n = chains.critical_values().len();
    let vertex: Vec<HomologyBasis> = (0..n).map(|i| homology(chains.vertex(i), k)).collect();
    let edge: Vec<HomologyBasis> = (0..n.saturating_sub(1)).map(|i| homology(chains.edge(i), k)).collect();
    let nodes = node_kinds(n);
    let dims = nodes
        .iter()
        .map(|node| match *node {
            NodeKind::Slice(i) => vertex[i].rank(),
            NodeKind::Fiber(i) if i == 0 || i == n => 0,
            NodeKind::Fiber(i) => edge[i - 1].rank(),
        })
        .collect();
    let mut arrows = Vec::with_capacity(2 * n);
    for i in 0..n {
        // F_i -> S_i through the right map of gap i - 1
        arrows.push(Arrow::forward(if i == 0 {
            Matrix::zeros(field, vertex[i].rank(), 0)
        } else {
            induced_homology_map(chains.right(i - 1), &edge[i - 1], &vertex[i], k)?
        }));
        // S_i <- F_{i+1} through the left map of gap i
        arrows.push(Arrow::backward(if i + 1 == n {
            Matrix::zeros(field, vertex[i].rank(), 0)
        } else {
            induced_homology_map(chains.left(i), &edge[i], &vertex[i], k)?
        }));
    }
    Ok(LevelsetZigzag {
        module: ZigzagModule::new(field, dims, arrows)?,
        nodes,
    })
}

pub fn levelset_zigzag(space: &ConstructibleRSpace, k: usize, field: PrimeField) -> Result<LevelsetZigzag> {
    levelset_zigzag_from_chains(&SpaceChains::new(space, field)?, k)
}

/// Maps levelset zigzag intervals to decorated points.
///
/// | start  | end    | point              | type |
/// |--------|--------|--------------------|------|
/// | `S_i`  | `S_j`  | `[a_i, a_j]`       | `↓↑` |
/// | `S_i`  | `F_j`  | `[a_i, a_{j+1})`   | `↓↓` |
/// | `F_i`  | `S_j`  | `(a_i, a_j]`       | `↑↑` |
/// | `F_i`  | `F_j`  | `(a_i, a_{j+1})`   | `↑↓` |
///
/// with `a_0 = -∞` and `a_{n+1} = +∞` (1-based critical indices).
pub fn translate(
    intervals: &IntervalMultiset,
    nodes: &[NodeKind],
    critical_values: &[f64],
    dim: usize,
) -> Result<FourDiagrams> {
    let n = critical_values.len();
    if nodes.len() != intervals.len() {
        return Err(Error::Precondition(format!(
            "{} node annotations for a module of length {}",
            nodes.len(),
            intervals.len()
        )));
    }
    let value = |i: usize| critical_values[i];
    let mut out = FourDiagrams::empty(dim);
    for ((p, q), m) in intervals.iter() {
        let (start, end) = (nodes[p], nodes[q]);
        let (birth, closed_start) = match start {
            NodeKind::Slice(i) => (value(i), true),
            NodeKind::Fiber(0) => (f64::NEG_INFINITY, false),
            NodeKind::Fiber(i) if i <= n => (value(i - 1), false),
            node => return Err(Error::Precondition(format!("node {node} is out of range"))),
        };
        let (death, closed_end) = match end {
            NodeKind::Slice(j) => (value(j), true),
            NodeKind::Fiber(j) if j == n => (f64::INFINITY, false),
            NodeKind::Fiber(j) if j < n => (value(j), false),
            node => return Err(Error::Precondition(format!("node {node} is out of range"))),
        };
        let t = match (closed_start, closed_end) {
            (true, true) => Behavior::DownUp,
            (true, false) => Behavior::DownDown,
            (false, true) => Behavior::UpUp,
            (false, false) => Behavior::UpDown,
        };
        out.get_mut(t).insert_at(birth, death, m)?;
    }
    Ok(out)
}

/// The four diagrams of `H_k` via the levelset zigzag.
pub fn parametrized_homology_from_chains(chains: &SpaceChains, k: usize) -> Result<FourDiagrams> {
    let zz = levelset_zigzag_from_chains(chains, k)?;
    translate(&decompose(&zz.module)?, &zz.nodes, chains.critical_values(), k)
}

pub fn parametrized_homology(space: &ConstructibleRSpace, k: usize, field: PrimeField) -> Result<FourDiagrams> {
    parametrized_homology_from_chains(&SpaceChains::new(space, field)?, k)
}

/// The four diagrams for every dimension `0..=max_dim`.
pub fn parametrized_homology_upto(
    space: &ConstructibleRSpace,
    max_dim: usize,
    field: PrimeField,
) -> Result<Vec<FourDiagrams>> {
    let chains = SpaceChains::new(space, field)?;
    (0..=max_dim)
        .map(|k| parametrized_homology_from_chains(&chains, k))
        .collect()
}

/// The dual levelset zigzag translated with the same table.
pub fn dual_diagrams_from_chains(chains: &SpaceChains, k: usize) -> Result<FourDiagrams> {
    let zz = levelset_zigzag_from_chains(chains, k)?;
    translate(&decompose(&dualize(&zz.module))?, &zz.nodes, chains.critical_values(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{circle, point, sphere, two_component};

    #[test]
    fn zigzag_dimensions() {
        let f = PrimeField::GF2;
        assert_eq!(levelset_zigzag(&circle(), 0, f).unwrap().module.dims(), &[0, 1, 2, 1, 0]);
        assert_eq!(levelset_zigzag(&circle(), 1, f).unwrap().module.dims(), &[0, 0, 0, 0, 0]);
        assert_eq!(levelset_zigzag(&sphere(), 1, f).unwrap().module.dims(), &[0, 0, 1, 0, 0]);
    }

    #[test]
    fn translation_examples() {
        let nodes = node_kinds(2);
        let crit = [0.0, 1.0];
        let mut bars = IntervalMultiset::new(5);
        bars.insert(1, 3, 1);
        bars.insert(2, 2, 1);
        let d = translate(&bars, &nodes, &crit, 0).unwrap();
        assert_eq!(d.get(Behavior::DownUp).multiplicity(0.0, 1.0), 1);
        assert_eq!(d.get(Behavior::UpDown).multiplicity(0.0, 1.0), 1);
        assert_eq!(d.total(), 2);

        let mut bars = IntervalMultiset::new(5);
        bars.insert(0, 4, 1);
        bars.insert(0, 1, 1);
        bars.insert(3, 4, 1);
        let d = translate(&bars, &nodes, &crit, 0).unwrap();
        assert_eq!(d.get(Behavior::UpDown).multiplicity(f64::NEG_INFINITY, f64::INFINITY), 1);
        assert_eq!(d.get(Behavior::UpUp).multiplicity(f64::NEG_INFINITY, 0.0), 1);
        assert_eq!(d.get(Behavior::DownDown).multiplicity(1.0, f64::INFINITY), 1);
    }

    #[test]
    fn golden_diagrams() {
        let f = PrimeField::GF2;
        let d = parametrized_homology(&circle(), 0, f).unwrap();
        assert_eq!(d.get(Behavior::DownUp).multiplicity(0.0, 1.0), 1);
        assert_eq!(d.get(Behavior::UpDown).multiplicity(0.0, 1.0), 1);
        assert_eq!(d.total(), 2);
        let d = parametrized_homology(&sphere(), 1, f).unwrap();
        assert_eq!(d.get(Behavior::UpDown).multiplicity(0.0, 1.0), 1);
        assert_eq!(d.total(), 1);
        let d = parametrized_homology(&point(), 0, f).unwrap();
        assert_eq!(d.get(Behavior::DownUp).multiplicity(0.0, 0.0), 1);
        let d = parametrized_homology(&two_component(), 0, f).unwrap();
        assert_eq!(d.get(Behavior::DownUp).multiplicity(0.0, 3.0), 1);
        assert_eq!(d.get(Behavior::DownUp).multiplicity(1.0, 2.0), 1);
        assert_eq!(d.total(), 2);
    }
}
