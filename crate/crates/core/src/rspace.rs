//! Constructible R-spaces and their slices as chain complexes.
//!
//! The space is the quotient of `⊔ V_i × {a_i} ⊔ E_i × [a_i, a_{i+1}]` by
//! `(x, a_i) ~ (l_i(x), a_i)` and `(x, a_{i+1}) ~ (r_i(x), a_{i+1})`.
//!
//! All chain-level work goes through a [`LevelModel`]: the telescope of the
//! space subdivided at a set of cut values. Every slice, fiber, sublevel set,
//! and relative pair with endpoints among the cuts is a contiguous range of
//! telescope blocks, so maps between them are coordinate inclusions and
//! projections.

use std::fmt;
use std::ops::Range;

use crate::complexes::{
    chain_complex, homology_from_boundaries, induced_chain_map, telescope, ChainComplex, ChainMap,
    HomologyBasis, SimplicialComplex, SimplicialMap, Telescope, TelescopeLink,
};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

#[derive(Clone, Debug, PartialEq)]
pub struct ConstructibleRSpace {
    critical_values: Vec<f64>,
    vertex_complexes: Vec<SimplicialComplex>,
    edge_complexes: Vec<SimplicialComplex>,
    left_maps: Vec<SimplicialMap>,
    right_maps: Vec<SimplicialMap>,
}

/// One failed invariant of a [`ConstructibleRSpace`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub location: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl ConstructibleRSpace {
    /// Validating constructor.
    pub fn new(
        critical_values: Vec<f64>,
        vertex_complexes: Vec<SimplicialComplex>,
        edge_complexes: Vec<SimplicialComplex>,
        left_maps: Vec<SimplicialMap>,
        right_maps: Vec<SimplicialMap>,
    ) -> Result<Self> {
        let x = Self::from_parts(critical_values, vertex_complexes, edge_complexes, left_maps, right_maps);
        let violations = x.validate();
        if let Some(v) = violations.first() {
            return Err(Error::InvalidSpace(v.to_string()));
        }
        Ok(x)
    }

    /// Unchecked constructor; call [`validate`](Self::validate) before use.
    pub fn from_parts(
        critical_values: Vec<f64>,
        vertex_complexes: Vec<SimplicialComplex>,
        edge_complexes: Vec<SimplicialComplex>,
        left_maps: Vec<SimplicialMap>,
        right_maps: Vec<SimplicialMap>,
    ) -> Self {
        Self {
            critical_values,
            vertex_complexes,
            edge_complexes,
            left_maps,
            right_maps,
        }
    }

    /// A single compact complex sitting over one value.
    pub fn constant(value: f64, complex: SimplicialComplex) -> Self {
        Self::from_parts(vec![value], vec![complex], vec![], vec![], vec![])
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |location: String, message: String| out.push(Violation { location, message });
        let n = self.critical_values.len();
        if n == 0 {
            push("critical_values".into(), "at least one critical value is required".into());
        }
        for (i, v) in self.critical_values.iter().enumerate() {
            if !v.is_finite() {
                push(format!("critical_values[{i}]"), format!("{v} is not finite"));
            }
        }
        for (i, w) in self.critical_values.windows(2).enumerate() {
            // also catches NaN
            if w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less) {
                push(
                    format!("critical_values[{}]", i + 1),
                    format!("not strictly increasing ({} then {})", w[0], w[1]),
                );
            }
        }
        if self.vertex_complexes.len() != n {
            push(
                "vertex_complexes".into(),
                format!("expected {n} complexes, got {}", self.vertex_complexes.len()),
            );
        }
        let gaps = n.saturating_sub(1);
        for (name, len) in [
            ("edge_complexes", self.edge_complexes.len()),
            ("left_maps", self.left_maps.len()),
            ("right_maps", self.right_maps.len()),
        ] {
            if len != gaps {
                push(name.into(), format!("expected {gaps} entries, got {len}"));
            }
        }
        if self.vertex_complexes.len() == n
            && self.edge_complexes.len() == gaps
            && self.left_maps.len() == gaps
            && self.right_maps.len() == gaps
        {
            for i in 0..gaps {
                let e = &self.edge_complexes[i];
                for m in self.left_maps[i].violations(e, &self.vertex_complexes[i]) {
                    push(format!("left_maps[{i}]"), m);
                }
                for m in self.right_maps[i].violations(e, &self.vertex_complexes[i + 1]) {
                    push(format!("right_maps[{i}]"), m);
                }
            }
        }
        out
    }

    pub fn critical_count(&self) -> usize {
        self.critical_values.len()
    }

    pub fn critical_values(&self) -> &[f64] {
        &self.critical_values
    }

    pub fn vertex_complex(&self, i: usize) -> &SimplicialComplex {
        &self.vertex_complexes[i]
    }

    pub fn edge_complex(&self, i: usize) -> &SimplicialComplex {
        &self.edge_complexes[i]
    }

    pub fn left_map(&self, i: usize) -> &SimplicialMap {
        &self.left_maps[i]
    }

    pub fn right_map(&self, i: usize) -> &SimplicialMap {
        &self.right_maps[i]
    }

    pub fn vertex_complexes(&self) -> &[SimplicialComplex] {
        &self.vertex_complexes
    }

    pub fn edge_complexes(&self) -> &[SimplicialComplex] {
        &self.edge_complexes
    }

    pub fn left_maps(&self) -> &[SimplicialMap] {
        &self.left_maps
    }

    pub fn right_maps(&self) -> &[SimplicialMap] {
        &self.right_maps
    }

    /// Total simplex count over all pieces.
    pub fn size(&self) -> usize {
        self.vertex_complexes
            .iter()
            .chain(&self.edge_complexes)
            .map(SimplicialComplex::total_count)
            .sum()
    }

    /// Smallest distance between consecutive critical values (`None` if `n = 1`).
    pub fn min_gap(&self) -> Option<f64> {
        self.critical_values
            .windows(2)
            .map(|w| w[1] - w[0])
            .min_by(f64::total_cmp)
    }

    /// The same complexes and maps over `(X, -f)`.
    pub fn reversed(&self) -> Self {
        let gaps = self.edge_complexes.len();
        Self {
            critical_values: self.critical_values.iter().rev().map(|v| -v).collect(),
            vertex_complexes: self.vertex_complexes.iter().rev().cloned().collect(),
            edge_complexes: self.edge_complexes.iter().rev().cloned().collect(),
            left_maps: (0..gaps).map(|j| self.right_maps[gaps - 1 - j].clone()).collect(),
            right_maps: (0..gaps).map(|j| self.left_maps[gaps - 1 - j].clone()).collect(),
        }
    }

    /// Same combinatorics over new critical values.
    pub fn with_values(&self, values: Vec<f64>) -> Result<Self> {
        if values.len() != self.critical_values.len() {
            return Err(Error::InvalidSpace(format!(
                "{} values for {} critical levels",
                values.len(),
                self.critical_values.len()
            )));
        }
        let mut x = self.clone();
        x.critical_values = values;
        if let Some(v) = x.validate().first() {
            return Err(Error::InvalidSpace(v.to_string()));
        }
        Ok(x)
    }

    /// `f^{-1}(t)`: `V_i` at `a_i`, `E_i` strictly between `a_i` and `a_{i+1}`, empty outside.
    pub fn levelset_complex(&self, t: f64) -> SimplicialComplex {
        match locate(&self.critical_values, t) {
            Location::Critical(i) => self.vertex_complexes[i].clone(),
            Location::Gap(i) => self.edge_complexes[i].clone(),
            Location::Outside => SimplicialComplex::empty(),
        }
    }
}

enum Location {
    Critical(usize),
    Gap(usize),
    Outside,
}

fn locate(values: &[f64], t: f64) -> Location {
    let (Some(&lo), Some(&hi)) = (values.first(), values.last()) else {
        return Location::Outside;
    };
    if !(lo <= t && t <= hi) {
        return Location::Outside;
    }
    match values.binary_search_by(|v| v.total_cmp(&t)) {
        Ok(i) => Location::Critical(i),
        Err(i) => Location::Gap(i - 1),
    }
}

/// Chain complexes of the pieces and chain maps of the attaching maps.
#[derive(Clone, Debug)]
pub struct SpaceChains {
    field: PrimeField,
    critical_values: Vec<f64>,
    vertex: Vec<ChainComplex>,
    edge: Vec<ChainComplex>,
    left: Vec<ChainMap>,
    right: Vec<ChainMap>,
}

impl SpaceChains {
    pub fn new(space: &ConstructibleRSpace, field: PrimeField) -> Result<Self> {
        if let Some(v) = space.validate().first() {
            return Err(Error::InvalidSpace(v.to_string()));
        }
        let vertex = space
            .vertex_complexes
            .iter()
            .map(|k| chain_complex(k, field))
            .collect();
        let edge = space.edge_complexes.iter().map(|k| chain_complex(k, field)).collect();
        let gaps = space.edge_complexes.len();
        let left = (0..gaps)
            .map(|i| {
                induced_chain_map(
                    &space.left_maps[i],
                    &space.edge_complexes[i],
                    &space.vertex_complexes[i],
                    field,
                )
            })
            .collect::<Result<_>>()?;
        let right = (0..gaps)
            .map(|i| {
                induced_chain_map(
                    &space.right_maps[i],
                    &space.edge_complexes[i],
                    &space.vertex_complexes[i + 1],
                    field,
                )
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            field,
            critical_values: space.critical_values.clone(),
            vertex,
            edge,
            left,
            right,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn critical_values(&self) -> &[f64] {
        &self.critical_values
    }

    pub fn vertex(&self, i: usize) -> &ChainComplex {
        &self.vertex[i]
    }

    pub fn edge(&self, i: usize) -> &ChainComplex {
        &self.edge[i]
    }

    pub fn left(&self, i: usize) -> &ChainMap {
        &self.left[i]
    }

    pub fn right(&self, i: usize) -> &ChainMap {
        &self.right[i]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum LevelKind {
    Critical(usize),
    /// A regular cut inside gap `i`, carrying a copy of `E_i`.
    Regular(usize),
}

/// A contiguous run of telescope blocks, possibly empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Piece {
    blocks: Option<(usize, usize)>,
}

impl Piece {
    pub const EMPTY: Piece = Piece { blocks: None };

    fn new(first: usize, last: usize) -> Self {
        if first <= last {
            Piece {
                blocks: Some((first, last)),
            }
        } else {
            Piece::EMPTY
        }
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_none()
    }
}

/// Telescope of the space subdivided at cut values.
#[derive(Clone, Debug)]
pub struct LevelModel {
    field: PrimeField,
    critical: Vec<f64>,
    levels: Vec<f64>,
    telescope: Telescope,
}

impl LevelModel {
    /// Cuts outside `[a_1, a_n]`, infinite cuts, and cuts at critical values add no nodes.
    pub fn new(chains: &SpaceChains, cuts: &[f64]) -> Result<Self> {
        let critical = chains.critical_values.clone();
        let mut levels: Vec<(f64, LevelKind)> = critical
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, LevelKind::Critical(i)))
            .collect();
        for &t in cuts {
            if t.is_nan() {
                return Err(Error::Precondition("NaN cut value".into()));
            }
            if let Location::Gap(g) = locate(&critical, t) {
                if !levels.iter().any(|&(v, _)| v == t) {
                    levels.push((t, LevelKind::Regular(g)));
                }
            }
        }
        levels.sort_by(|x, y| x.0.total_cmp(&y.0));

        let nodes: Vec<ChainComplex> = levels
            .iter()
            .map(|&(_, kind)| match kind {
                LevelKind::Critical(i) => chains.vertex[i].clone(),
                LevelKind::Regular(g) => chains.edge[g].clone(),
            })
            .collect();
        let links: Vec<TelescopeLink> = levels
            .windows(2)
            .map(|w| {
                let gap = match w[0].1 {
                    LevelKind::Critical(i) => i,
                    LevelKind::Regular(g) => g,
                };
                let edge = &chains.edge[gap];
                let left = match w[0].1 {
                    LevelKind::Critical(_) => chains.left[gap].clone(),
                    LevelKind::Regular(_) => ChainMap::identity(edge),
                };
                let right = match w[1].1 {
                    LevelKind::Critical(_) => chains.right[gap].clone(),
                    LevelKind::Regular(_) => ChainMap::identity(edge),
                };
                TelescopeLink {
                    complex: edge.clone(),
                    left,
                    right,
                }
            })
            .collect();
        let telescope = telescope(&nodes, &links)?;
        Ok(Self {
            field: chains.field,
            critical,
            levels: levels.into_iter().map(|(v, _)| v).collect(),
            telescope,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn telescope(&self) -> &Telescope {
        &self.telescope
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    fn block_count(&self) -> usize {
        2 * self.levels.len() - 1
    }

    fn inside(&self, t: f64) -> bool {
        self.critical[0] <= t && t <= self.critical[self.critical.len() - 1]
    }

    /// Node index of level `t`; finite in-range values must be levels.
    fn node_at(&self, t: f64) -> Result<Option<usize>> {
        if !self.inside(t) {
            return Ok(None);
        }
        match self.levels.iter().position(|&v| v == t) {
            Some(j) => Ok(Some(j)),
            None => Err(Error::Precondition(format!("{t} is not a level of this model"))),
        }
    }

    /// Slice `f^{-1}[p, q]`; `±∞` endpoints give the full extent on that side.
    pub fn slice(&self, p: f64, q: f64) -> Result<Piece> {
        if p.is_nan() || q.is_nan() || p > q {
            return Err(Error::Precondition(format!("slice [{p}, {q}] needs p <= q")));
        }
        self.node_at(p)?;
        self.node_at(q)?;
        let first = self.levels.iter().position(|&v| v >= p);
        let last = self.levels.iter().rposition(|&v| v <= q);
        Ok(match (first, last) {
            (Some(a), Some(b)) if a <= b => Piece::new(2 * a, 2 * b),
            _ => Piece::EMPTY,
        })
    }

    /// Fiber `f^{-1}(t)`, empty outside `[a_1, a_n]`.
    pub fn fiber(&self, t: f64) -> Result<Piece> {
        Ok(match self.node_at(t)? {
            Some(j) => Piece::new(2 * j, 2 * j),
            None => Piece::EMPTY,
        })
    }

    /// `f^{-1}(-∞, t]`
    pub fn sublevel(&self, t: f64) -> Result<Piece> {
        self.slice(f64::NEG_INFINITY, t)
    }

    /// `f^{-1}[t, ∞)`
    pub fn superlevel(&self, t: f64) -> Result<Piece> {
        self.slice(t, f64::INFINITY)
    }

    /// The whole space.
    pub fn whole(&self) -> Piece {
        Piece::new(0, self.block_count() - 1)
    }

    /// Generators of the pair `(X, f^{-1}[t, ∞))`: every block strictly below level `t`.
    pub fn relative_to_superlevel(&self, t: f64) -> Result<Piece> {
        if t.is_nan() {
            return Err(Error::Precondition("NaN level".into()));
        }
        if t > self.critical[self.critical.len() - 1] {
            return Ok(self.whole());
        }
        match self.node_at(t)? {
            Some(0) | None => Ok(Piece::EMPTY),
            Some(j) => Ok(Piece::new(0, 2 * j - 1)),
        }
    }

    /// Degree-`k` generator range of a piece.
    pub fn range(&self, piece: Piece, k: usize) -> Range<usize> {
        match piece.blocks {
            Some((a, b)) => self.telescope.block_range(k, a, b),
            None => 0..0,
        }
    }

    pub fn complex_of(&self, piece: Piece) -> ChainComplex {
        let ranges: Vec<Range<usize>> = (0..self.telescope.degrees()).map(|k| self.range(piece, k)).collect();
        self.telescope.complex().restrict(&ranges)
    }

    /// `H_k` of the principal restriction to `piece`.
    pub fn homology(&self, piece: Piece, k: usize) -> PieceHomology {
        let c = self.telescope.complex();
        let rows_out = if k == 0 { 0..0 } else { self.range(piece, k - 1) };
        let here = self.range(piece, k);
        let up = self.range(piece, k + 1);
        let outgoing = match c.boundary_ref(k) {
            Some(d) if k > 0 => d.submatrix(rows_out, here.clone()),
            _ => Matrix::zeros(self.field, 0, here.len()),
        };
        let incoming = match c.boundary_ref(k + 1) {
            Some(d) => d.submatrix(here.clone(), up),
            None => Matrix::zeros(self.field, here.len(), 0),
        };
        let basis = homology_from_boundaries(&outgoing, &incoming, k)
            .expect("restriction of a telescope to a block range is a complex");
        PieceHomology { range: here, basis }
    }

    /// Matrix of the coordinate map `H_k(source) -> H_k(target)`.
    ///
    /// A generator goes to itself when the target contains it and to zero
    /// otherwise: an inclusion of subcomplexes, a projection onto a quotient,
    /// or a composite of the two.
    pub fn induced(&self, source: &PieceHomology, target: &PieceHomology) -> Result<Matrix> {
        let reps = source.basis.representatives();
        let mut images = Matrix::zeros(self.field, target.range.len(), reps.cols());
        for (i, g) in source.range.clone().enumerate() {
            if target.range.contains(&g) {
                let row = g - target.range.start;
                for c in 0..reps.cols() {
                    let v = reps.get(i, c);
                    if v != 0 {
                        images.set(row, c, v);
                    }
                }
            }
        }
        target
            .basis
            .project_columns(&images)
            .ok_or_else(|| Error::NotChainMap("coordinate map sends a cycle to a non-cycle".into()))
    }

    /// Coordinate chain map between two pieces.
    pub fn coordinate_map(&self, source: Piece, target: Piece) -> ChainMap {
        let degrees = self.telescope.degrees();
        let matrices = (0..degrees)
            .map(|k| {
                let s = self.range(source, k);
                let t = self.range(target, k);
                let mut m = Matrix::zeros(self.field, t.len(), s.len());
                for (i, g) in s.enumerate() {
                    if t.contains(&g) {
                        m.set(g - t.start, i, 1);
                    }
                }
                m
            })
            .collect();
        let source_c = self.complex_of(source);
        let target_c = self.complex_of(target);
        ChainMap::new(&source_c, &target_c, matrices).expect("coordinate maps between nested pieces commute")
    }
}

/// Homology of one piece, remembering where its generators sit.
#[derive(Clone, Debug)]
pub struct PieceHomology {
    range: Range<usize>,
    basis: HomologyBasis,
}

impl PieceHomology {
    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &HomologyBasis {
        &self.basis
    }
}

/// A slice `f^{-1}[p, q]` with the inclusions of its two end fibers.
#[derive(Clone, Debug)]
pub struct Slice {
    pub complex: ChainComplex,
    pub fiber_p: ChainComplex,
    pub fiber_q: ChainComplex,
    pub include_p: ChainMap,
    pub include_q: ChainMap,
}

pub fn slice_complex(space: &ConstructibleRSpace, p: f64, q: f64, field: PrimeField) -> Result<Slice> {
    if p.is_nan() || q.is_nan() || p > q {
        return Err(Error::Precondition(format!("slice [{p}, {q}] needs p <= q")));
    }
    let chains = SpaceChains::new(space, field)?;
    let model = LevelModel::new(&chains, &[p, q])?;
    let slice = model.slice(p, q)?;
    let fp = model.fiber(p)?;
    let fq = model.fiber(q)?;
    Ok(Slice {
        complex: model.complex_of(slice),
        fiber_p: model.complex_of(fp),
        fiber_q: model.complex_of(fq),
        include_p: model.coordinate_map(fp, slice),
        include_q: model.coordinate_map(fq, slice),
    })
}

/// `f^{-1}(-∞, t]` and the inclusion of the fiber at `t`.
pub fn sublevel_complex(
    space: &ConstructibleRSpace,
    t: f64,
    field: PrimeField,
) -> Result<(ChainComplex, ChainMap)> {
    let s = slice_complex(space, f64::NEG_INFINITY, t, field)?;
    Ok((s.complex, s.include_q))
}

/// `f^{-1}[t, ∞)` and the inclusion of the fiber at `t`.
pub fn superlevel_complex(
    space: &ConstructibleRSpace,
    t: f64,
    field: PrimeField,
) -> Result<(ChainComplex, ChainMap)> {
    let s = slice_complex(space, t, f64::INFINITY, field)?;
    Ok((s.complex, s.include_p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::homology;
    use crate::corpus::{circle, sphere};

    fn ranks(c: &ChainComplex, upto: usize) -> Vec<usize> {
        (0..=upto).map(|k| homology(c, k).rank()).collect()
    }

    #[test]
    fn validate_examples() {
        assert!(circle().validate().is_empty());
        let bad = ConstructibleRSpace::from_parts(
            vec![1.0, 1.0],
            vec![SimplicialComplex::point(), SimplicialComplex::point()],
            vec![SimplicialComplex::discrete(2)],
            vec![SimplicialMap::constant([0, 1], 0)],
            vec![SimplicialMap::constant([0, 1], 0)],
        );
        let v = bad.validate();
        assert_eq!(v.len(), 1);
        assert!(v[0].message.contains("not strictly increasing"));

        let bad = ConstructibleRSpace::from_parts(
            vec![0.0, 1.0],
            vec![SimplicialComplex::point(), SimplicialComplex::point()],
            vec![SimplicialComplex::discrete(2)],
            vec![SimplicialMap::new([(0, 0), (1, 7)])],
            vec![SimplicialMap::constant([0, 1], 0)],
        );
        let v = bad.validate();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].location, "left_maps[0]");
        assert!(ConstructibleRSpace::new(vec![], vec![], vec![], vec![], vec![]).is_err());
    }

    #[test]
    fn levelset_examples() {
        let x = circle();
        assert_eq!(x.levelset_complex(0.5), SimplicialComplex::discrete(2));
        assert_eq!(x.levelset_complex(0.0), SimplicialComplex::point());
        assert!(x.levelset_complex(-5.0).is_empty());
        assert!(x.levelset_complex(f64::NAN).is_empty());
    }

    #[test]
    fn slice_examples() {
        let f = PrimeField::GF2;
        let x = circle();
        let s = slice_complex(&x, -1.0, 0.5, f).unwrap();
        assert_eq!(ranks(&s.complex, 1), vec![1, 0]);
        assert_eq!(s.fiber_p.total_rank(), 0);
        assert_eq!(ranks(&s.fiber_q, 0), vec![2]);
        let s = slice_complex(&x, -1.0, 2.0, f).unwrap();
        assert_eq!(ranks(&s.complex, 1), vec![1, 1]);
        let s = slice_complex(&x, -3.0, -2.0, f).unwrap();
        assert_eq!(s.complex.total_rank(), 0);
        assert!(slice_complex(&x, 1.0, 0.0, f).is_err());
    }

    #[test]
    fn sublevel_and_superlevel() {
        let f = PrimeField::new(3).unwrap();
        let x = circle();
        let (c, _) = sublevel_complex(&x, 0.5, f).unwrap();
        assert_eq!(ranks(&c, 1), vec![1, 0]);
        let (c, _) = sublevel_complex(&x, 3.0, f).unwrap();
        assert_eq!(ranks(&c, 1), vec![1, 1]);
        let (c, _) = superlevel_complex(&x, 3.0, f).unwrap();
        assert_eq!(c.total_rank(), 0);
        let (c, _) = superlevel_complex(&x, 0.25, f).unwrap();
        assert_eq!(ranks(&c, 1), vec![1, 0]);
    }

    #[test]
    fn regular_point_slice_is_the_levelset() {
        let f = PrimeField::new(5).unwrap();
        let x = sphere();
        let s = slice_complex(&x, 0.3, 0.3, f).unwrap();
        assert_eq!(s.complex, chain_complex(&x.levelset_complex(0.3), f));
    }

    #[test]
    fn full_slice_matches_full_telescope() {
        let f = PrimeField::GF2;
        let x = sphere();
        let s = slice_complex(&x, 0.0, 1.0, f).unwrap();
        let chains = SpaceChains::new(&x, f).unwrap();
        let model = LevelModel::new(&chains, &[]).unwrap();
        assert_eq!(ranks(&s.complex, 2), ranks(model.telescope().complex(), 2));
        assert_eq!(ranks(&s.complex, 2), vec![1, 0, 1]);
    }

    #[test]
    fn relative_pieces() {
        let f = PrimeField::GF2;
        let chains = SpaceChains::new(&circle(), f).unwrap();
        let model = LevelModel::new(&chains, &[0.5]).unwrap();
        assert!(model.relative_to_superlevel(-1.0).unwrap().is_empty());
        assert_eq!(model.relative_to_superlevel(5.0).unwrap(), model.whole());
        // (circle, upper arc) ≃ (circle, point): H_1 = 1, H_0 = 0
        let rel = model.relative_to_superlevel(0.5).unwrap();
        assert_eq!(model.homology(rel, 0).rank(), 0);
        assert_eq!(model.homology(rel, 1).rank(), 1);
        assert!(model.fiber(0.25).is_err());
    }

    #[test]
    fn reversal_swaps_attaching_maps() {
        let x = crate::corpus::figure_four(crate::measures::Behavior::DownDown);
        let r = x.reversed();
        assert!(r.validate().is_empty());
        assert_eq!(r.critical_values(), &[-5.0, -3.0, -2.0, 0.0]);
        assert_eq!(r.reversed(), x);
    }
}
