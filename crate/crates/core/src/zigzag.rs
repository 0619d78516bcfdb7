//! Zigzag modules over `F_p` and their interval decomposition.
//!
//! Node indices are 0-based throughout; an interval `[p, q]` covers nodes
//! `p..=q`. Arrow `i` joins node `i` and node `i + 1`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `V_i -> V_{i+1}`
    Forward,
    /// `V_i <- V_{i+1}`
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub direction: Direction,
    pub matrix: Matrix,
}

impl Arrow {
    pub fn forward(matrix: Matrix) -> Self {
        Self {
            direction: Direction::Forward,
            matrix,
        }
    }

    pub fn backward(matrix: Matrix) -> Self {
        Self {
            direction: Direction::Backward,
            matrix,
        }
    }
}

/// A finite zigzag of vector spaces `V_0 - V_1 - ... - V_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagModule {
    field: PrimeField,
    dims: Vec<usize>,
    arrows: Vec<Arrow>,
}

impl ZigzagModule {
    pub fn new(field: PrimeField, dims: Vec<usize>, arrows: Vec<Arrow>) -> Result<Self> {
        if dims.is_empty() {
            if arrows.is_empty() {
                return Ok(Self { field, dims, arrows });
            }
            return Err(Error::Shape("arrows without nodes".into()));
        }
        if arrows.len() + 1 != dims.len() {
            return Err(Error::Shape(format!(
                "{} nodes need {} arrows, got {}",
                dims.len(),
                dims.len() - 1,
                arrows.len()
            )));
        }
        for (i, a) in arrows.iter().enumerate() {
            let (src, tgt) = match a.direction {
                Direction::Forward => (dims[i], dims[i + 1]),
                Direction::Backward => (dims[i + 1], dims[i]),
            };
            if a.matrix.shape() != (tgt, src) {
                return Err(Error::Shape(format!(
                    "arrow {i} is {:?}, expected {}x{}",
                    a.matrix.shape(),
                    tgt,
                    src
                )));
            }
            if a.matrix.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.characteristic(),
                    right: a.matrix.field().characteristic(),
                });
            }
        }
        Ok(Self { field, dims, arrows })
    }

    /// The interval module `I[p, q]` on the given arrow directions.
    pub fn interval(field: PrimeField, directions: &[Direction], p: usize, q: usize) -> Result<Self> {
        let len = directions.len() + 1;
        if p > q || q >= len {
            return Err(Error::InvalidInterval { p, q, len });
        }
        let dims: Vec<usize> = (0..len).map(|i| usize::from(p <= i && i <= q)).collect();
        let arrows = directions
            .iter()
            .enumerate()
            .map(|(i, &direction)| {
                let (src, tgt) = match direction {
                    Direction::Forward => (dims[i], dims[i + 1]),
                    Direction::Backward => (dims[i + 1], dims[i]),
                };
                let mut m = Matrix::zeros(field, tgt, src);
                if src == 1 && tgt == 1 {
                    m.set(0, 0, 1);
                }
                Arrow { direction, matrix: m }
            })
            .collect();
        Self::new(field, dims, arrows)
    }

    /// Direct sum of modules on the same arrow directions.
    pub fn direct_sum(&self, other: &ZigzagModule) -> Result<Self> {
        if self.len() != other.len() || self.directions() != other.directions() {
            return Err(Error::Shape("direct sum of differently shaped zigzags".into()));
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let arrows = self
            .arrows
            .iter()
            .zip(&other.arrows)
            .map(|(a, b)| Arrow {
                direction: a.direction,
                matrix: block_diagonal(&a.matrix, &b.matrix),
            })
            .collect();
        Self::new(self.field, dims, arrows)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn directions(&self) -> Vec<Direction> {
        self.arrows.iter().map(|a| a.direction).collect()
    }

    fn check_interval(&self, p: usize, q: usize) -> Result<()> {
        if p > q || q >= self.len() {
            return Err(Error::InvalidInterval {
                p,
                q,
                len: self.len(),
            });
        }
        Ok(())
    }
}

fn block_diagonal(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            m.set(r, c, a.get(r, c));
        }
    }
    for r in 0..b.rows() {
        for c in 0..b.cols() {
            m.set(a.rows() + r, a.cols() + c, b.get(r, c));
        }
    }
    m
}

/// Multiplicities of interval summands, keyed by `(p, q)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalMultiset {
    len: usize,
    counts: BTreeMap<(usize, usize), usize>,
}

impl IntervalMultiset {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            counts: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, p: usize, q: usize, mult: usize) {
        assert!(p <= q && q < self.len, "interval [{p}, {q}] out of range");
        if mult > 0 {
            *self.counts.entry((p, q)).or_insert(0) += mult;
        }
    }

    pub fn get(&self, p: usize, q: usize) -> usize {
        self.counts.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Module length the intervals live in.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Number of summands, with multiplicity.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    /// `dims[i] = Σ` multiplicities of intervals containing `i`.
    pub fn dimension_vector(&self) -> Vec<usize> {
        let mut dims = vec![0; self.len];
        for (&(p, q), &m) in &self.counts {
            for d in &mut dims[p..=q] {
                *d += m;
            }
        }
        dims
    }
}

/// Rank of the canonical map `lim -> colim` of the restriction to nodes `p..=q`.
///
/// The limit is the space of arrow-compatible tuples in `⊕ V_i`; the colimit is
/// `⊕ V_i` modulo `ι_s(x) - ι_t(A x)` for every arrow `A : V_s -> V_t`.
pub fn limit_colimit_rank(module: &ZigzagModule, p: usize, q: usize) -> Result<usize> {
    module.check_interval(p, q)?;
    let field = module.field;
    let dims = &module.dims;
    let mut offsets = vec![0usize; q - p + 2];
    for i in p..=q {
        offsets[i - p + 1] = offsets[i - p] + dims[i];
    }
    let total = offsets[q - p + 1];
    if total == 0 {
        return Ok(0);
    }
    let slot = |i: usize| offsets[i - p];

    // constraints A v_s - v_t = 0, one block row per arrow
    let constraint_rows: usize = (p..q)
        .map(|i| match module.arrows[i].direction {
            Direction::Forward => dims[i + 1],
            Direction::Backward => dims[i],
        })
        .sum();
    let mut constraints = Matrix::zeros(field, constraint_rows, total);
    let mut relations_cols: Vec<Vec<u32>> = Vec::new();
    let mut row0 = 0;
    for i in p..q {
        let arrow = &module.arrows[i];
        let (s, t) = match arrow.direction {
            Direction::Forward => (i, i + 1),
            Direction::Backward => (i + 1, i),
        };
        let a = &arrow.matrix;
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                constraints.set(row0 + r, slot(s) + c, a.get(r, c));
            }
            constraints.set(row0 + r, slot(t) + r, field.neg(1));
        }
        row0 += a.rows();
        for c in 0..a.cols() {
            let mut col = vec![0u32; total];
            col[slot(s) + c] = 1;
            for r in 0..a.rows() {
                col[slot(t) + r] = field.sub(col[slot(t) + r], a.get(r, c));
            }
            relations_cols.push(col);
        }
    }
    let limit = constraints.kernel_basis();
    let relations = Matrix::from_columns(field, total, &relations_cols);
    // lim -> V_p -> colim
    let mut image = Matrix::zeros(field, total, limit.cols());
    for c in 0..limit.cols() {
        for r in slot(p)..slot(p) + dims[p] {
            image.set(r, c, limit.get(r, c));
        }
    }
    Ok(relations.hstack(&image)?.rank() - relations.rank())
}

/// Subspace of `V` as independent columns.
#[derive(Clone, Debug)]
struct Subspace(Matrix);

impl Subspace {
    fn whole(field: PrimeField, dim: usize) -> Self {
        Subspace(Matrix::identity(field, dim))
    }

    fn zero(field: PrimeField, dim: usize) -> Self {
        Subspace(Matrix::zeros(field, dim, 0))
    }

    fn dim(&self) -> usize {
        self.0.cols()
    }

    /// `A(S)` for `A : V -> W`.
    fn image(&self, a: &Matrix) -> Self {
        Subspace(a.mul(&self.0).expect("shapes").column_space_basis())
    }

    /// `A^{-1}(S)` for `A : W -> V`, with `S ⊆ V`.
    fn preimage(&self, a: &Matrix) -> Self {
        // kernel of [A | S] projected to the W-coordinates
        let joint = a.hstack(&self.0).expect("shapes");
        let k = joint.kernel_basis();
        let rows: Vec<usize> = (0..a.cols()).collect();
        Subspace(k.select_rows(&rows).column_space_basis())
    }

    fn transport(&self, arrow: &Arrow, rightwards: bool) -> Self {
        match (arrow.direction, rightwards) {
            (Direction::Forward, true) | (Direction::Backward, false) => self.image(&arrow.matrix),
            (Direction::Forward, false) | (Direction::Backward, true) => self.preimage(&arrow.matrix),
        }
    }
}

/// `r(p, q)` for every `p <= q`, as `ranks[p][q - p]`.
///
/// For a fixed start `p`, the image of the limit in `V_q` and the kernel of
/// `V_q -> colim` both propagate arrow by arrow (image along an arrow that
/// points right, preimage along one that points left), and the kernel sits
/// inside the image, so `r(p, q)` is the difference of their dimensions.
fn all_limit_colimit_ranks(module: &ZigzagModule) -> Vec<Vec<usize>> {
    let n = module.len();
    let field = module.field;
    (0..n)
        .map(|p| {
            let mut limit = Subspace::whole(field, module.dims[p]);
            let mut kernel = Subspace::zero(field, module.dims[p]);
            let mut row = Vec::with_capacity(n - p);
            row.push(limit.dim());
            for q in p + 1..n {
                if limit.dim() == 0 {
                    row.resize(n - p, 0);
                    break;
                }
                let arrow = &module.arrows[q - 1];
                limit = limit.transport(arrow, true);
                kernel = kernel.transport(arrow, true);
                row.push(limit.dim() - kernel.dim());
            }
            row
        })
        .collect()
}

/// Interval decomposition by inclusion–exclusion on `lim -> colim` ranks:
/// `m[p, q] = r(p, q) - r(p-1, q) - r(p, q+1) + r(p-1, q+1)`.
pub fn decompose(module: &ZigzagModule) -> Result<IntervalMultiset> {
    let n = module.len();
    let ranks = all_limit_colimit_ranks(module);
    let r = |p: isize, q: usize| -> i64 {
        if p < 0 || q >= n {
            0
        } else {
            let p = p as usize;
            ranks[p][q - p] as i64
        }
    };
    let mut out = IntervalMultiset::new(n);
    for p in 0..n {
        for q in p..n {
            let pi = p as isize;
            let m = r(pi, q) - r(pi - 1, q) - r(pi, q + 1) + r(pi - 1, q + 1);
            if m < 0 {
                return Err(Error::NegativeMultiplicity { p, q, value: m });
            }
            out.insert(p, q, m as usize);
        }
    }
    Ok(out)
}

/// Multiplicity of `I[p, q]` in `module`.
pub fn multiplicity(module: &ZigzagModule, p: usize, q: usize) -> Result<usize> {
    module.check_interval(p, q)?;
    let r = |p: Option<usize>, q: usize| -> Result<i64> {
        match p {
            Some(p) if q < module.len() => Ok(limit_colimit_rank(module, p, q)? as i64),
            _ => Ok(0),
        }
    };
    let m = r(Some(p), q)? - r(p.checked_sub(1), q)? - r(Some(p), q + 1)? + r(p.checked_sub(1), q + 1)?;
    if m < 0 {
        return Err(Error::NegativeMultiplicity { p, q, value: m });
    }
    Ok(m as usize)
}

/// Drops node `k`, composing its two arrows; they must point the same way.
pub fn coarsen(module: &ZigzagModule, k: usize) -> Result<ZigzagModule> {
    if k == 0 || k + 1 >= module.len() {
        return Err(Error::Precondition(format!(
            "node {k} is not interior to a module of length {}",
            module.len()
        )));
    }
    let left = &module.arrows[k - 1];
    let right = &module.arrows[k];
    if left.direction != right.direction {
        return Err(Error::DirectionMismatch(k - 1, k));
    }
    let composite = match left.direction {
        Direction::Forward => right.matrix.mul(&left.matrix)?,
        Direction::Backward => left.matrix.mul(&right.matrix)?,
    };
    let mut dims = module.dims.clone();
    dims.remove(k);
    let mut arrows = module.arrows.clone();
    arrows.splice(
        k - 1..=k,
        [Arrow {
            direction: left.direction,
            matrix: composite,
        }],
    );
    ZigzagModule::new(module.field, dims, arrows)
}

/// Linear dual: every arrow reversed and transposed.
pub fn dualize(module: &ZigzagModule) -> ZigzagModule {
    ZigzagModule {
        field: module.field,
        dims: module.dims.clone(),
        arrows: module
            .arrows
            .iter()
            .map(|a| Arrow {
                direction: a.direction.reversed(),
                matrix: a.matrix.transpose(),
            })
            .collect(),
    }
}

/// Where interval `[p, q]` of a length-`n` module lands after dropping node `k`.
pub fn restrict_interval(p: usize, q: usize, k: usize) -> Option<(usize, usize)> {
    if p == k && q == k {
        return None;
    }
    let shift = |i: usize| if i > k { i - 1 } else { i };
    let p2 = if p == k { p } else { shift(p) };
    let q2 = if q == k { q - 1 } else { shift(q) };
    Some((p2, q2))
}
