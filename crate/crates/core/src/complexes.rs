//! Simplicial complexes, chain complexes over `F_p`, homology with explicit
//! bases, and the telescope (chain-level homotopy colimit) of an alternating
//! diagram `N_0 <- L_0 -> N_1 <- L_1 -> ... -> N_m`.

use std::collections::BTreeMap;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::linalg::{quotient_map, Matrix, PrimeField, Quotient};

pub type Simplex = Vec<u32>;

/// A finite abstract simplicial complex, closed under faces.
///
/// Simplices of each dimension are kept sorted lexicographically; the
/// position of a simplex in that order is its chain basis index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    by_dim: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The closure under faces of the given simplices.
    ///
    /// Vertex lists may be in any order; a repeated vertex is an error.
    pub fn from_simplices<I, S>(simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u32]>,
    {
        let mut by_dim: Vec<std::collections::BTreeSet<Simplex>> = Vec::new();
        for s in simplices {
            let mut s = s.as_ref().to_vec();
            if s.is_empty() {
                continue;
            }
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!(
                    "simplex {:?} repeats a vertex",
                    s
                )));
            }
            let top = s.len() - 1;
            if by_dim.len() <= top {
                by_dim.resize_with(top + 1, Default::default);
            }
            by_dim[top].insert(s);
        }
        // close downwards, highest dimension first
        for k in (1..by_dim.len()).rev() {
            let faces: Vec<Simplex> = by_dim[k].iter().flat_map(|s| faces_of(s)).collect();
            by_dim[k - 1].extend(faces);
        }
        Ok(Self {
            by_dim: by_dim.into_iter().map(|set| set.into_iter().collect()).collect(),
        })
    }

    pub fn point() -> Self {
        Self::from_simplices([[0u32]]).expect("point")
    }

    /// `count` isolated vertices `0..count`.
    pub fn discrete(count: u32) -> Self {
        Self::from_simplices((0..count).map(|v| [v])).expect("discrete")
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.by_dim.get(k).map_or(&[], |v| v.as_slice())
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn total_count(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.simplices(0).iter().map(|s| s[0])
    }

    pub fn index_of(&self, simplex: &[u32]) -> Option<usize> {
        let k = simplex.len().checked_sub(1)?;
        self.simplices(k)
            .binary_search_by(|s| s.as_slice().cmp(simplex))
            .ok()
    }

    pub fn contains(&self, simplex: &[u32]) -> bool {
        self.index_of(simplex).is_some()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(k, s)| if k % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// Iterates all simplices of all dimensions.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }
}

fn faces_of(s: &[u32]) -> impl Iterator<Item = Simplex> + '_ {
    (0..s.len()).map(move |i| {
        let mut f = s.to_vec();
        f.remove(i);
        f
    })
}

/// A vertex map between simplicial complexes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SimplicialMap {
    table: BTreeMap<u32, u32>,
}

impl SimplicialMap {
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        Self {
            table: pairs.into_iter().collect(),
        }
    }

    /// Sends every listed vertex to `target`.
    pub fn constant<I: IntoIterator<Item = u32>>(vertices: I, target: u32) -> Self {
        Self::new(vertices.into_iter().map(|v| (v, target)))
    }

    pub fn identity_on(complex: &SimplicialComplex) -> Self {
        Self::new(complex.vertices().map(|v| (v, v)))
    }

    pub fn apply(&self, v: u32) -> Option<u32> {
        self.table.get(&v).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.table.iter().map(|(&a, &b)| (a, b))
    }

    /// Sorted, deduplicated image of a simplex; `None` if a vertex is unmapped.
    pub fn image(&self, simplex: &[u32]) -> Option<Simplex> {
        let mut img: Simplex = simplex
            .iter()
            .map(|&v| self.apply(v))
            .collect::<Option<_>>()?;
        img.sort_unstable();
        img.dedup();
        Some(img)
    }

    /// Every way this map fails to be a simplicial map `source -> target`.
    pub fn violations(&self, source: &SimplicialComplex, target: &SimplicialComplex) -> Vec<String> {
        let mut out = Vec::new();
        for v in source.vertices() {
            match self.apply(v) {
                None => out.push(format!("vertex {v} has no image")),
                Some(w) if !target.contains(&[w]) => {
                    out.push(format!("vertex {v} maps to {w}, which is not a target vertex"))
                }
                _ => {}
            }
        }
        if !out.is_empty() {
            return out;
        }
        for s in source.iter().filter(|s| s.len() > 1) {
            let img = self.image(s).expect("vertices checked");
            if !target.contains(&img) {
                out.push(format!("simplex {s:?} maps to {img:?}, which is not a target simplex"));
            }
        }
        out
    }

    pub fn validate(&self, source: &SimplicialComplex, target: &SimplicialComplex) -> Result<()> {
        match self.violations(source, target).into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidMap(v)),
        }
    }
}

/// A chain complex of finite-dimensional `F_p` spaces, `C_k` for `k >= 0`.
///
/// `boundaries[k]` is `d_k : C_k -> C_{k-1}`; `d_0` has zero rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    field: PrimeField,
    boundaries: Vec<Matrix>,
}

impl ChainComplex {
    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            boundaries: Vec::new(),
        }
    }

    /// Checks shapes and `d ∘ d = 0`.
    pub fn new(field: PrimeField, boundaries: Vec<Matrix>) -> Result<Self> {
        let c = Self::new_unchecked(field, boundaries)?;
        c.check_boundary_squared()?;
        Ok(c)
    }

    fn new_unchecked(field: PrimeField, boundaries: Vec<Matrix>) -> Result<Self> {
        for (k, d) in boundaries.iter().enumerate() {
            if d.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.characteristic(),
                    right: d.field().characteristic(),
                });
            }
            if k == 0 && d.rows() != 0 {
                return Err(Error::Shape("d_0 must have zero rows".into()));
            }
            if k > 0 && d.rows() != boundaries[k - 1].cols() {
                return Err(Error::Shape(format!(
                    "d_{k} has {} rows but C_{} has rank {}",
                    d.rows(),
                    k - 1,
                    boundaries[k - 1].cols()
                )));
            }
        }
        let mut c = Self { field, boundaries };
        c.trim();
        Ok(c)
    }

    fn trim(&mut self) {
        while self.boundaries.last().is_some_and(|d| d.cols() == 0) {
            self.boundaries.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Rank of `C_k` (zero beyond the top degree).
    pub fn rank(&self, k: usize) -> usize {
        self.boundaries.get(k).map_or(0, Matrix::cols)
    }

    /// One past the highest degree with a nonzero chain group.
    pub fn len(&self) -> usize {
        self.boundaries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundaries.is_empty()
    }

    pub fn total_rank(&self) -> usize {
        (0..self.len()).map(|k| self.rank(k)).sum()
    }

    /// `d_k : C_k -> C_{k-1}`, a zero matrix of the right shape outside the stored range.
    pub fn boundary(&self, k: usize) -> Matrix {
        match self.boundaries.get(k) {
            Some(d) => d.clone(),
            None => Matrix::zeros(self.field, if k == 0 { 0 } else { self.rank(k - 1) }, 0),
        }
    }

    pub fn boundary_ref(&self, k: usize) -> Option<&Matrix> {
        self.boundaries.get(k)
    }

    pub fn check_boundary_squared(&self) -> Result<()> {
        for k in 2..self.boundaries.len() {
            if !self.boundaries[k - 1].mul(&self.boundaries[k])?.is_zero() {
                return Err(Error::NotChainComplex(format!("d_{} ∘ d_{k} != 0", k - 1)));
            }
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..self.len())
            .map(|k| {
                let r = self.rank(k) as i64;
                if k % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    /// The principal restriction to the generators in `ranges[k]` of each degree.
    ///
    /// This is the subcomplex when the ranges are closed under `d`, and the
    /// quotient complex when the complement is.
    pub fn restrict(&self, ranges: &[Range<usize>]) -> ChainComplex {
        let range = |k: usize| ranges.get(k).cloned().unwrap_or(0..0);
        let top = ranges.len();
        let boundaries = (0..top)
            .map(|k| {
                let cols = range(k);
                match self.boundaries.get(k) {
                    Some(d) if k > 0 => d.submatrix(range(k - 1), cols),
                    Some(d) => d.submatrix(0..0, cols),
                    None => Matrix::zeros(self.field, if k == 0 { 0 } else { range(k - 1).len() }, 0),
                }
            })
            .collect();
        let mut c = ChainComplex {
            field: self.field,
            boundaries,
        };
        c.trim();
        c
    }
}

/// Simplicial chain complex with alternating-sign boundary (signs vanish over `F_2`).
pub fn chain_complex(complex: &SimplicialComplex, field: PrimeField) -> ChainComplex {
    let top = complex.dimension().map_or(0, |d| d + 1);
    let boundaries = (0..top)
        .map(|k| {
            let cols = complex.simplices(k);
            if k == 0 {
                return Matrix::zeros(field, 0, cols.len());
            }
            let mut d = Matrix::zeros(field, complex.count(k - 1), cols.len());
            for (j, s) in cols.iter().enumerate() {
                for (i, face) in faces_of(s).enumerate() {
                    let row = complex.index_of(&face).expect("complex is closed under faces");
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    d.set(row, j, field.reduce(sign));
                }
            }
            d
        })
        .collect();
    ChainComplex::new_unchecked(field, boundaries).expect("simplicial boundary shapes")
}

/// A degreewise linear map between chain complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    matrices: Vec<Matrix>,
}

impl ChainMap {
    /// Checks shapes and `d ∘ f = f ∘ d`.
    pub fn new(source: &ChainComplex, target: &ChainComplex, matrices: Vec<Matrix>) -> Result<Self> {
        let top = source.len().max(target.len());
        let mut full = Vec::with_capacity(top);
        for k in 0..top {
            let m = matrices
                .get(k)
                .cloned()
                .unwrap_or_else(|| Matrix::zeros(source.field(), target.rank(k), source.rank(k)));
            if m.shape() != (target.rank(k), source.rank(k)) {
                return Err(Error::Shape(format!(
                    "chain map degree {k}: {:?} for C_{k} ranks {} -> {}",
                    m.shape(),
                    source.rank(k),
                    target.rank(k)
                )));
            }
            full.push(m);
        }
        let map = Self { matrices: full };
        for k in 1..top {
            let lhs = target.boundary(k).mul(&map.matrices[k])?;
            let rhs = map.matrices[k - 1].mul(&source.boundary(k))?;
            if lhs != rhs {
                return Err(Error::NotChainMap(format!("fails to commute with d_{k}")));
            }
        }
        Ok(map)
    }

    pub fn identity(complex: &ChainComplex) -> Self {
        Self {
            matrices: (0..complex.len())
                .map(|k| Matrix::identity(complex.field(), complex.rank(k)))
                .collect(),
        }
    }

    /// Degree-`k` matrix; callers must supply the field and ranks for degrees past the stored range.
    pub fn at(&self, k: usize) -> Option<&Matrix> {
        self.matrices.get(k)
    }

    pub fn degrees(&self) -> usize {
        self.matrices.len()
    }

    pub fn compose(&self, after: &ChainMap) -> Result<ChainMap> {
        let top = self.matrices.len().min(after.matrices.len());
        let matrices = (0..top)
            .map(|k| after.matrices[k].mul(&self.matrices[k]))
            .collect::<Result<_>>()?;
        Ok(ChainMap { matrices })
    }
}

/// The chain map induced by a simplicial map.
///
/// A simplex whose image repeats a vertex is degenerate and maps to zero;
/// otherwise it maps to the image simplex with the sign of the sorting permutation.
pub fn induced_chain_map(
    map: &SimplicialMap,
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    field: PrimeField,
) -> Result<ChainMap> {
    map.validate(source, target)?;
    let src = chain_complex(source, field);
    let tgt = chain_complex(target, field);
    let top = src.len().max(tgt.len());
    let mut matrices = Vec::with_capacity(top);
    for k in 0..top {
        let mut m = Matrix::zeros(field, target.count(k), source.count(k));
        for (j, s) in source.simplices(k).iter().enumerate() {
            let raw: Vec<u32> = s.iter().map(|&v| map.apply(v).expect("validated")).collect();
            let Some((sorted, odd)) = sort_with_parity(&raw) else {
                continue;
            };
            let row = target.index_of(&sorted).ok_or_else(|| {
                Error::InvalidMap(format!("image {sorted:?} is not a target simplex"))
            })?;
            m.set(row, j, field.reduce(if odd { -1 } else { 1 }));
        }
        matrices.push(m);
    }
    ChainMap::new(&src, &tgt, matrices)
}

/// Sorted copy and permutation parity, or `None` if a value repeats.
fn sort_with_parity(v: &[u32]) -> Option<(Vec<u32>, bool)> {
    let mut s = v.to_vec();
    let mut odd = false;
    // insertion sort, counting transpositions
    for i in 1..s.len() {
        let mut j = i;
        while j > 0 && s[j - 1] > s[j] {
            s.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if s.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((s, odd))
}

/// A basis of `H_k` given by cycle representatives, with class coordinates.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    degree: usize,
    chain_rank: usize,
    quotient: Quotient,
}

impl HomologyBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.quotient.dimension()
    }

    /// Rank of the ambient chain group `C_k`.
    pub fn chain_rank(&self) -> usize {
        self.chain_rank
    }

    /// Cycle representatives as columns.
    pub fn representatives(&self) -> &Matrix {
        self.quotient.representatives()
    }

    /// Homology class coordinates of a cycle; `None` if `z` is not a cycle.
    pub fn project(&self, z: &[u32]) -> Option<Vec<u32>> {
        self.quotient.project(z)
    }

    pub fn project_columns(&self, zs: &Matrix) -> Option<Matrix> {
        self.quotient.project_columns(zs)
    }
}

/// `H_k = ker d_k / im d_{k+1}` with representatives chosen by pivot order.
pub fn homology(complex: &ChainComplex, k: usize) -> HomologyBasis {
    homology_from_boundaries(&complex.boundary(k), &complex.boundary(k + 1), k)
        .expect("d ∘ d = 0 for a chain complex")
}

/// Homology at the middle of `C_{k+1} --incoming--> C_k --outgoing--> C_{k-1}`.
pub fn homology_from_boundaries(
    outgoing: &Matrix,
    incoming: &Matrix,
    degree: usize,
) -> Result<HomologyBasis> {
    if outgoing.cols() != incoming.rows() {
        return Err(Error::Shape(format!(
            "d_k has {} columns, d_(k+1) has {} rows",
            outgoing.cols(),
            incoming.rows()
        )));
    }
    let cycles = outgoing.kernel_basis();
    let quotient = quotient_map(&cycles, incoming)
        .map_err(|_| Error::NotChainComplex("boundaries are not cycles".into()))?;
    Ok(HomologyBasis {
        degree,
        chain_rank: outgoing.cols(),
        quotient,
    })
}

/// The matrix of `H_k(f)` in the given homology bases.
pub fn induced_homology_map(
    map: &ChainMap,
    source: &HomologyBasis,
    target: &HomologyBasis,
    k: usize,
) -> Result<Matrix> {
    let reps = source.representatives();
    let images = match map.at(k) {
        Some(m) => m.mul(reps)?,
        None => Matrix::zeros(reps.field(), target.chain_rank(), reps.cols()),
    };
    target
        .project_columns(&images)
        .ok_or_else(|| Error::NotChainMap(format!("a degree-{k} cycle maps to a non-cycle")))
}

/// One link `L_j` of a telescope diagram with its maps into the neighbouring nodes.
#[derive(Clone, Debug)]
pub struct TelescopeLink {
    pub complex: ChainComplex,
    pub left: ChainMap,
    pub right: ChainMap,
}

/// Total complex of an alternating diagram with explicit block offsets.
///
/// Blocks are ordered `N_0, L_0, N_1, L_1, ..., N_m`; block `2j` is node `j`
/// and block `2j+1` is the shifted copy of link `j`. A shifted generator
/// `e ι` of degree `|e| + 1` has `d(e ι) = r(e) - l(e) - (d e) ι`.
#[derive(Clone, Debug)]
pub struct Telescope {
    complex: ChainComplex,
    /// `offsets[k][b]` = first degree-`k` index of block `b`; one trailing total.
    offsets: Vec<Vec<usize>>,
}

impl Telescope {
    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn block_count(&self) -> usize {
        self.offsets.first().map_or(0, |o| o.len() - 1)
    }

    /// Degree-`k` index range of the blocks `first..=last`.
    pub fn block_range(&self, k: usize, first: usize, last: usize) -> Range<usize> {
        match self.offsets.get(k) {
            Some(o) => o[first]..o[last + 1],
            None => 0..0,
        }
    }

    pub fn degrees(&self) -> usize {
        self.offsets.len()
    }

    /// Inclusion of node `j` as a chain map.
    pub fn node_inclusion(&self, node: usize, node_complex: &ChainComplex) -> ChainMap {
        let field = self.complex.field();
        let matrices = (0..self.degrees())
            .map(|k| {
                let range = self.block_range(k, 2 * node, 2 * node);
                let mut m = Matrix::zeros(field, self.complex.rank(k), node_complex.rank(k));
                for (i, row) in range.enumerate() {
                    m.set(row, i, 1);
                }
                m
            })
            .collect();
        ChainMap { matrices }
    }
}

/// Telescope of `nodes[0] <- links[0] -> nodes[1] <- ... -> nodes[m]`.
pub fn telescope(nodes: &[ChainComplex], links: &[TelescopeLink]) -> Result<Telescope> {
    let Some(first) = nodes.first() else {
        return Err(Error::Precondition("telescope of an empty diagram".into()));
    };
    if links.len() + 1 != nodes.len() {
        return Err(Error::Precondition(format!(
            "{} nodes need {} links, got {}",
            nodes.len(),
            nodes.len() - 1,
            links.len()
        )));
    }
    let field = first.field();
    for (j, link) in links.iter().enumerate() {
        check_map_shape(&link.left, &link.complex, &nodes[j])
            .map_err(|e| Error::Precondition(format!("left map of link {j}: {e}")))?;
        check_map_shape(&link.right, &link.complex, &nodes[j + 1])
            .map_err(|e| Error::Precondition(format!("right map of link {j}: {e}")))?;
    }
    let top = nodes
        .iter()
        .map(ChainComplex::len)
        .chain(links.iter().map(|l| l.complex.len() + 1))
        .max()
        .unwrap_or(0);
    let block_rank = |b: usize, k: usize| -> usize {
        if b.is_multiple_of(2) {
            nodes[b / 2].rank(k)
        } else if k == 0 {
            0
        } else {
            links[b / 2].complex.rank(k - 1)
        }
    };
    let blocks = 2 * nodes.len() - 1;
    let offsets: Vec<Vec<usize>> = (0..top)
        .map(|k| {
            let mut o = Vec::with_capacity(blocks + 1);
            let mut acc = 0;
            o.push(0);
            for b in 0..blocks {
                acc += block_rank(b, k);
                o.push(acc);
            }
            o
        })
        .collect();

    let mut boundaries = Vec::with_capacity(top);
    for k in 0..top {
        let rows = if k == 0 { 0 } else { offsets[k - 1][blocks] };
        let mut d = Matrix::zeros(field, rows, offsets[k][blocks]);
        if k > 0 {
            for b in 0..blocks {
                let col0 = offsets[k][b];
                if b % 2 == 0 {
                    let node = &nodes[b / 2];
                    if let Some(nd) = node.boundary_ref(k) {
                        place(&mut d, offsets[k - 1][b], col0, nd, false);
                    }
                } else {
                    let j = b / 2;
                    let link = &links[j];
                    // r(e) into the right node, -l(e) into the left node
                    if let Some(r) = link.right.at(k - 1) {
                        place(&mut d, offsets[k - 1][b + 1], col0, r, false);
                    }
                    if let Some(l) = link.left.at(k - 1) {
                        place(&mut d, offsets[k - 1][b - 1], col0, l, true);
                    }
                    // -(d e) ι stays in the shifted block
                    if k >= 2 {
                        if let Some(ld) = link.complex.boundary_ref(k - 1) {
                            place(&mut d, offsets[k - 1][b], col0, ld, true);
                        }
                    }
                }
            }
        }
        boundaries.push(d);
    }
    let complex = ChainComplex {
        field,
        boundaries,
    };
    complex.check_boundary_squared()?;
    Ok(Telescope { complex, offsets })
}

fn check_map_shape(map: &ChainMap, source: &ChainComplex, target: &ChainComplex) -> Result<()> {
    for k in 0..source.len().max(target.len()) {
        let want = (target.rank(k), source.rank(k));
        let got = map.at(k).map_or((0, 0), Matrix::shape);
        if got != want && !(want.0 * want.1 == 0 && map.at(k).is_none()) {
            return Err(Error::Shape(format!("degree {k}: {got:?}, expected {want:?}")));
        }
    }
    Ok(())
}

fn place(d: &mut Matrix, row0: usize, col0: usize, block: &Matrix, negate: bool) {
    let f = d.field();
    for r in 0..block.rows() {
        for c in 0..block.cols() {
            let v = block.get(r, c);
            if v != 0 {
                let v = if negate { f.neg(v) } else { v };
                let cur = d.get(row0 + r, col0 + c);
                d.set(row0 + r, col0 + c, f.add(cur, v));
            }
        }
    }
}

/// A quotient complex `C / S` together with the surviving generators.
#[derive(Clone, Debug)]
pub struct RelativeComplex {
    pub complex: ChainComplex,
    /// Per degree, the indices of `C` kept in the quotient, in order.
    pub kept: Vec<Vec<usize>>,
}

impl RelativeComplex {
    /// The projection `C -> C / S` as a chain map.
    pub fn projection(&self, ambient: &ChainComplex) -> ChainMap {
        let field = ambient.field();
        let matrices = (0..ambient.len())
            .map(|k| {
                let kept = self.kept.get(k).map_or(&[][..], Vec::as_slice);
                let mut m = Matrix::zeros(field, kept.len(), ambient.rank(k));
                for (i, &g) in kept.iter().enumerate() {
                    m.set(i, g, 1);
                }
                m
            })
            .collect();
        ChainMap { matrices }
    }
}

/// Quotient of `complex` by the subcomplex spanned by the listed generators.
pub fn relative_complex(complex: &ChainComplex, sub: &[Vec<usize>]) -> Result<RelativeComplex> {
    let field = complex.field();
    let top = complex.len();
    let mut in_sub: Vec<Vec<bool>> = (0..top).map(|k| vec![false; complex.rank(k)]).collect();
    for (k, gens) in sub.iter().enumerate() {
        for &g in gens {
            if k >= top || g >= complex.rank(k) {
                return Err(Error::Precondition(format!("generator {g} of degree {k} out of range")));
            }
            in_sub[k][g] = true;
        }
    }
    for k in 1..top {
        let d = complex.boundary(k);
        for g in (0..complex.rank(k)).filter(|&g| in_sub[k][g]) {
            if (0..d.rows()).any(|r| d.get(r, g) != 0 && !in_sub[k - 1][r]) {
                return Err(Error::Precondition(format!(
                    "subcomplex is not closed under d: generator {g} of degree {k}"
                )));
            }
        }
    }
    let kept: Vec<Vec<usize>> = in_sub
        .iter()
        .map(|flags| (0..flags.len()).filter(|&g| !flags[g]).collect())
        .collect();
    let boundaries = (0..top)
        .map(|k| {
            let d = complex.boundary(k);
            let cols = d.select_columns(&kept[k]);
            if k == 0 {
                Matrix::zeros(field, 0, kept[0].len())
            } else {
                cols.select_rows(&kept[k - 1])
            }
        })
        .collect();
    let quotient = ChainComplex::new_unchecked(field, boundaries)?;
    Ok(RelativeComplex {
        complex: quotient,
        kept,
    })
}
