//! Bottleneck distance between undecorated diagrams in the extended plane.

use crate::error::{Error, Result};
use crate::levelset::parametrized_homology_from_chains;
use crate::linalg::PrimeField;
use crate::measures::Behavior;
use crate::rspace::{ConstructibleRSpace, SpaceChains};
use crate::diagrams::undecorate;

pub type Point = (f64, f64);

/// A finite multiset of `(p, q)` pairs with `p ≤ q`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct UndecoratedDiagram {
    points: Vec<(Point, usize)>,
}

impl UndecoratedDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_points<I: IntoIterator<Item = Point>>(points: I) -> Self {
        let mut d = Self::new();
        for (p, q) in points {
            d.insert(p, q, 1);
        }
        d
    }

    pub fn insert(&mut self, p: f64, q: f64, mult: usize) {
        if mult == 0 {
            return;
        }
        match self
            .points
            .binary_search_by(|(x, _)| x.0.total_cmp(&p).then(x.1.total_cmp(&q)))
        {
            Ok(i) => self.points[i].1 += mult,
            Err(i) => self.points.insert(i, ((p, q), mult)),
        }
    }

    pub fn points(&self) -> &[(Point, usize)] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points repeated by multiplicity.
    pub fn expanded(&self) -> Vec<Point> {
        self.points
            .iter()
            .flat_map(|&(x, m)| std::iter::repeat_n(x, m))
            .collect()
    }
}

/// `|x - y|` with `|∞ - ∞| = 0` for equal infinities.
fn coordinate_gap(x: f64, y: f64) -> f64 {
    if x == y {
        0.0
    } else {
        (x - y).abs()
    }
}

/// ℓ∞ distance in the extended plane.
pub fn dinf(x: Point, y: Point) -> f64 {
    coordinate_gap(x.0, y.0).max(coordinate_gap(x.1, y.1))
}

/// Distance to the diagonal; `+∞` when a coordinate is infinite.
pub fn diagonal_distance(x: Point) -> f64 {
    if x.0.is_finite() && x.1.is_finite() {
        (x.1 - x.0) / 2.0
    } else {
        f64::INFINITY
    }
}

/// Perfect matching of `A ∪ Δ(B)` with `B ∪ Δ(A)` using only edges of cost `≤ delta`.
fn feasible(a: &[Point], b: &[Point], delta: f64) -> bool {
    let (na, nb) = (a.len(), b.len());
    let n = na + nb;
    // left i < na: point a_i; left na + j: diagonal copy of b_j
    // right j < nb: point b_j; right nb + i: diagonal copy of a_i
    let adjacency: Vec<Vec<usize>> = (0..n)
        .map(|l| {
            if l < na {
                let mut row: Vec<usize> = (0..nb).filter(|&j| dinf(a[l], b[j]) <= delta).collect();
                if diagonal_distance(a[l]) <= delta {
                    row.push(nb + l);
                }
                row
            } else {
                let j = l - na;
                let mut row: Vec<usize> = (nb..n).collect();
                if diagonal_distance(b[j]) <= delta {
                    row.push(j);
                }
                row
            }
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for l in 0..n {
        let mut seen = vec![false; n];
        if !augment(l, &adjacency, &mut owner, &mut seen) {
            return false;
        }
    }
    true
}

fn augment(l: usize, adjacency: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &r in &adjacency[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if owner[r].is_none_or(|o| augment(o, adjacency, owner, seen)) {
            owner[r] = Some(l);
            return true;
        }
    }
    false
}

/// Smallest cost of a partial matching; `+∞` if every matching has infinite cost.
pub fn bottleneck_distance(a: &UndecoratedDiagram, b: &UndecoratedDiagram) -> f64 {
    let (pa, pb) = (a.expanded(), b.expanded());
    let mut candidates: Vec<f64> = vec![0.0];
    for &x in &pa {
        candidates.push(diagonal_distance(x));
        for &y in &pb {
            candidates.push(dinf(x, y));
        }
    }
    candidates.extend(pb.iter().map(|&y| diagonal_distance(y)));
    candidates.retain(|v| v.is_finite());
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    if !feasible(&pa, &pb, candidates[candidates.len() - 1]) {
        return f64::INFINITY;
    }
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(&pa, &pb, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo]
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilityRecord {
    pub dim: usize,
    pub behavior: Behavior,
    pub distance: f64,
    pub delta: f64,
    pub pass: bool,
}

/// Absolute slack for the stability inequality.
pub const STABILITY_TOLERANCE: f64 = 1e-9;

/// Compares the diagrams of `X` and of `Y`, the same space over other critical values.
pub fn stability_report(
    x: &ConstructibleRSpace,
    y: &ConstructibleRSpace,
    max_dim: usize,
    field: PrimeField,
) -> Result<Vec<StabilityRecord>> {
    if x.with_values(y.critical_values().to_vec()).ok().as_ref() != Some(y) {
        return Err(Error::Precondition(
            "spaces must share complexes and maps, differing only in critical values".into(),
        ));
    }
    let delta = x
        .critical_values()
        .iter()
        .zip(y.critical_values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let cx = SpaceChains::new(x, field)?;
    let cy = SpaceChains::new(y, field)?;
    let mut out = Vec::new();
    for k in 0..=max_dim {
        let dx = parametrized_homology_from_chains(&cx, k)?;
        let dy = parametrized_homology_from_chains(&cy, k)?;
        for t in Behavior::ALL {
            let distance = bottleneck_distance(&undecorate(dx.get(t)), &undecorate(dy.get(t)));
            out.push(StabilityRecord {
                dim: k,
                behavior: t,
                distance,
                delta,
                pass: distance <= delta + STABILITY_TOLERANCE,
            });
        }
    }
    Ok(out)
}
