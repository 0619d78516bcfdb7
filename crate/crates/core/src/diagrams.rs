//! Decorated persistence diagrams.
//!
//! A decorated point `(p*, q*)` stands for an interval whose ends are open or
//! closed: `p⁻` is a closed left end, `p⁺` an open one; `q⁺` is a closed right
//! end, `q⁻` an open one. A point lies in a rectangle when its coordinates do
//! and every tick on the boundary points inward.

use std::cmp::Ordering;
use std::fmt;

use crate::bottleneck::UndecoratedDiagram;
use crate::error::{Error, Result};
use crate::measures::{Behavior, Rectangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    Minus,
    Plus,
}

impl Decoration {
    pub fn symbol(self) -> char {
        match self {
            Decoration::Minus => '-',
            Decoration::Plus => '+',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecoratedPoint {
    p: f64,
    pdec: Decoration,
    q: f64,
    qdec: Decoration,
}

impl DecoratedPoint {
    pub fn new(p: f64, pdec: Decoration, q: f64, qdec: Decoration) -> Result<Self> {
        use Decoration::*;
        let bad = |why: &str| Err(Error::InvalidPoint(format!("({p}{}, {q}{}): {why}", pdec.symbol(), qdec.symbol())));
        if p.is_nan() || q.is_nan() {
            return bad("NaN coordinate");
        }
        if p == f64::INFINITY || q == f64::NEG_INFINITY {
            return bad("birth at +inf or death at -inf");
        }
        if p > q || (p == q && (pdec, qdec) != (Minus, Plus)) {
            return bad("need p < q, or p = q as the closed point [p, p]");
        }
        if p == f64::NEG_INFINITY && pdec != Plus {
            return bad("-inf must carry +");
        }
        if q == f64::INFINITY && qdec != Minus {
            return bad("+inf must carry -");
        }
        Ok(Self { p, pdec, q, qdec })
    }

    /// The point of behavior `t` at `(p, q)`.
    pub fn of_behavior(t: Behavior, p: f64, q: f64) -> Result<Self> {
        let (pd, qd) = t.decorations();
        Self::new(p, pd, q, qd)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn pdec(&self) -> Decoration {
        self.pdec
    }

    pub fn qdec(&self) -> Decoration {
        self.qdec
    }

    pub fn behavior(&self) -> Behavior {
        Behavior::from_decorations(self.pdec, self.qdec)
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        self.p
            .total_cmp(&other.p)
            .then(self.q.total_cmp(&other.q))
            .then(self.pdec.cmp(&other.pdec))
            .then(self.qdec.cmp(&other.qdec))
    }
}

impl fmt::Display for DecoratedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{}, {}{})", self.p, self.pdec.symbol(), self.q, self.qdec.symbol())
    }
}

/// `pt ∈ R` with ticks pointing inward on the boundary.
pub fn contains(r: &Rectangle, pt: &DecoratedPoint) -> bool {
    let (a, b, c, d) = r.corners();
    if !(a <= pt.p && pt.p <= b && c <= pt.q && pt.q <= d) {
        return false;
    }
    let inward = |at_low: bool, at_high: bool, dec: Decoration| {
        !(at_low && dec != Decoration::Plus) && !(at_high && dec != Decoration::Minus)
    };
    inward(pt.p == a, pt.p == b, pt.pdec) && inward(pt.q == c, pt.q == d, pt.qdec)
}

/// A finite multiset of decorated points of one behavior type in one dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct DecoratedDiagram {
    dim: usize,
    behavior: Behavior,
    /// Sorted by `(p, q)`, no repeats, multiplicities positive.
    points: Vec<(DecoratedPoint, usize)>,
}

impl DecoratedDiagram {
    pub fn new(dim: usize, behavior: Behavior) -> Self {
        Self {
            dim,
            behavior,
            points: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn behavior(&self) -> Behavior {
        self.behavior
    }

    /// Adds `mult` copies; the decorations must match the behavior type.
    pub fn insert(&mut self, pt: DecoratedPoint, mult: usize) -> Result<()> {
        if pt.behavior() != self.behavior {
            return Err(Error::InvalidPoint(format!(
                "{pt} does not have the decorations of {}",
                self.behavior.code()
            )));
        }
        if mult == 0 {
            return Ok(());
        }
        match self.points.binary_search_by(|(x, _)| x.cmp_key(&pt)) {
            Ok(i) => self.points[i].1 += mult,
            Err(i) => self.points.insert(i, (pt, mult)),
        }
        Ok(())
    }

    /// Inserts the point of this diagram's behavior at `(p, q)`.
    pub fn insert_at(&mut self, p: f64, q: f64, mult: usize) -> Result<()> {
        self.insert(DecoratedPoint::of_behavior(self.behavior, p, q)?, mult)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DecoratedPoint, usize)> {
        self.points.iter().map(|(p, m)| (p, *m))
    }

    pub fn multiplicity(&self, p: f64, q: f64) -> usize {
        self.points
            .iter()
            .find(|(x, _)| x.p == p && x.q == q)
            .map_or(0, |(_, m)| *m)
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of points counted with multiplicity.
    pub fn total(&self) -> usize {
        self.points.iter().map(|(_, m)| m).sum()
    }

    /// Number of points in `r`, with multiplicity.
    pub fn count_in(&self, r: &Rectangle) -> usize {
        self.points
            .iter()
            .filter(|(x, _)| contains(r, x))
            .map(|(_, m)| m)
            .sum()
    }

    /// True when every point carries this diagram's decoration pair.
    pub fn is_well_typed(&self) -> bool {
        self.points.iter().all(|(x, _)| x.behavior() == self.behavior)
    }
}

impl fmt::Display for DecoratedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{} {} {{", self.dim, self.behavior.code())?;
        for (i, (x, m)) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
            if *m > 1 {
                write!(f, " x{m}")?;
            }
        }
        write!(f, "}}")
    }
}

/// The four diagrams of one homology dimension, indexed by [`Behavior`].
#[derive(Clone, Debug, PartialEq)]
pub struct FourDiagrams {
    dim: usize,
    diagrams: [DecoratedDiagram; 4],
}

impl FourDiagrams {
    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            diagrams: Behavior::ALL.map(|t| DecoratedDiagram::new(dim, t)),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, t: Behavior) -> &DecoratedDiagram {
        &self.diagrams[t.index()]
    }

    pub fn get_mut(&mut self, t: Behavior) -> &mut DecoratedDiagram {
        &mut self.diagrams[t.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = &DecoratedDiagram> {
        self.diagrams.iter()
    }

    pub fn total(&self) -> usize {
        self.diagrams.iter().map(DecoratedDiagram::total).sum()
    }
}

/// Room around each candidate: a third of the smallest critical gap, so that
/// rectangles for adjacent critical values keep `b < c`; 1 for a single value.
pub fn extraction_epsilon(critical_values: &[f64]) -> f64 {
    critical_values
        .windows(2)
        .map(|w| w[1] - w[0])
        .min_by(f64::total_cmp)
        .map_or(1.0, |g| g / 3.0)
}

/// The small rectangle isolating candidate `(p*, q*)` among points on the critical grid.
pub fn isolating_rectangle(pt: &DecoratedPoint, critical_values: &[f64], eps: f64) -> Result<Rectangle> {
    let lo = critical_values.first().copied().unwrap_or(0.0);
    let hi = critical_values.last().copied().unwrap_or(0.0);
    let (a, b) = if pt.p == f64::NEG_INFINITY {
        (f64::NEG_INFINITY, lo - eps)
    } else if pt.pdec == Decoration::Minus {
        (pt.p - eps, pt.p)
    } else {
        (pt.p, pt.p + eps)
    };
    let (c, d) = if pt.q == f64::INFINITY {
        (hi + eps, f64::INFINITY)
    } else if pt.qdec == Decoration::Minus {
        (pt.q - eps, pt.q)
    } else {
        (pt.q, pt.q + eps)
    };
    if b == c {
        Rectangle::touching_diagonal(a, b, d)
    } else {
        Rectangle::new(a, b, c, d)
    }
}

/// Splits `[a, b]` (or `[c, d]`) at an interior point, finite even for infinite ends.
fn interior_point(lo: f64, hi: f64) -> f64 {
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) => lo + (hi - lo) / 2.0,
        (false, true) => hi - 1.0,
        (true, false) => lo + 1.0,
        (false, false) => 0.0,
    }
}

/// Recovers the diagram of a measure from its values on small rectangles.
///
/// Candidates are pairs of critical values (and `±∞`) with the decorations of
/// `behavior`. Each candidate's rectangle is also split horizontally and
/// vertically; a mismatch means the oracle is not additive.
pub fn extract_diagram<F>(
    mut measure: F,
    behavior: Behavior,
    dim: usize,
    critical_values: &[f64],
) -> Result<DecoratedDiagram>
where
    F: FnMut(&Rectangle) -> Result<usize>,
{
    let eps = extraction_epsilon(critical_values);
    let (pdec, qdec) = behavior.decorations();
    let mut births: Vec<f64> = critical_values.to_vec();
    if pdec == Decoration::Plus {
        births.insert(0, f64::NEG_INFINITY);
    }
    let mut deaths: Vec<f64> = critical_values.to_vec();
    if qdec == Decoration::Minus {
        deaths.push(f64::INFINITY);
    }
    let mut out = DecoratedDiagram::new(dim, behavior);
    for &p in &births {
        for &q in &deaths {
            let Ok(pt) = DecoratedPoint::new(p, pdec, q, qdec) else {
                continue;
            };
            let r = isolating_rectangle(&pt, critical_values, eps)?;
            let m = measure(&r)?;
            let (a, b, c, d) = r.corners();
            let x = interior_point(a, b);
            let (left, right) = r.split_horizontal(x)?;
            let y = interior_point(c, d);
            let (bottom, top) = r.split_vertical(y)?;
            let h = measure(&left)? + measure(&right)?;
            let v = measure(&bottom)? + measure(&top)?;
            if h != m || v != m {
                return Err(Error::NotAdditive(format!(
                    "μ{r} = {m}, horizontal split at {x} gives {h}, vertical split at {y} gives {v}"
                )));
            }
            out.insert(pt, m)?;
        }
    }
    Ok(out)
}

/// Forgets decorations, keeping multiplicities.
pub fn undecorate(d: &DecoratedDiagram) -> UndecoratedDiagram {
    let mut u = UndecoratedDiagram::new();
    for (x, m) in d.iter() {
        u.insert(x.p, x.q, m);
    }
    u
}
