//! The four rectangle measures of a constructible R-space.
//!
//! For `a < b < c < d` the slices over `{a, b, c, d}` form the zigzag
//!
//! ```text
//! X_a^a -> X_a^b <- X_b^b -> X_b^c <- X_c^c -> X_c^d <- X_d^d
//! ```
//!
//! and each behavior type counts one interval of its homology: a feature is
//! *killed* at an end when it lives at the fiber but not the outer slice, and
//! *expires* when it lives through the outer slice but not the outer fiber.

use std::collections::HashMap;
use std::fmt;

use crate::diagrams::{DecoratedDiagram, Decoration};
use crate::error::{Error, Result};
use crate::linalg::PrimeField;
use crate::rspace::{ConstructibleRSpace, LevelModel, Piece, SpaceChains};
use crate::zigzag::{decompose, Arrow, ZigzagModule};

/// `[a, b] × [c, d]` in the extended plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rectangle {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl Rectangle {
    /// Requires `-∞ ≤ a < b < c < d ≤ +∞`.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if a < b && b < c && c < d && a != f64::INFINITY && d != f64::NEG_INFINITY {
            Ok(Self { a, b, c, d })
        } else {
            Err(Error::InvalidRectangle { a, b, c, d })
        }
    }

    /// `[a, b] × [b, d]`, touching the diagonal at `(b, b)`.
    ///
    /// Only used to isolate closed points `[p, p]`, which no rectangle with
    /// `b < c` contains.
    pub fn touching_diagonal(a: f64, b: f64, d: f64) -> Result<Self> {
        if a < b && b < d && b.is_finite() {
            Ok(Self { a, b, c: b, d })
        } else {
            Err(Error::InvalidRectangle { a, b, c: b, d })
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn corners(&self) -> (f64, f64, f64, f64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn touches_diagonal(&self) -> bool {
        self.b == self.c
    }

    /// `[a, x] × [c, d]` and `[x, b] × [c, d]`.
    pub fn split_horizontal(&self, x: f64) -> Result<(Self, Self)> {
        if !(self.a < x && x < self.b) {
            return Err(Error::Precondition(format!("{x} is not inside ({}, {})", self.a, self.b)));
        }
        Ok((Self { b: x, ..*self }, Self { a: x, ..*self }))
    }

    /// `[a, b] × [c, y]` and `[a, b] × [y, d]`.
    pub fn split_vertical(&self, y: f64) -> Result<(Self, Self)> {
        if !(self.c < y && y < self.d) {
            return Err(Error::Precondition(format!("{y} is not inside ({}, {})", self.c, self.d)));
        }
        Ok((Self { d: y, ..*self }, Self { c: y, ..*self }))
    }

    /// `[-d, -c] × [-b, -a]`
    pub fn reversed(&self) -> Self {
        Self {
            a: -self.d,
            b: -self.c,
            c: -self.b,
            d: -self.a,
        }
    }

    pub fn contains_rectangle(&self, other: &Rectangle) -> bool {
        self.a <= other.a && other.b <= self.b && self.c <= other.c && other.d <= self.d
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]x[{}, {}]", self.a, self.b, self.c, self.d)
    }
}

/// How a feature perishes at its two ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Behavior {
    /// `↑↓`: killed at both ends, `(p⁺, q⁻)`.
    UpDown,
    /// `↓↓`: expires below, killed above, `(p⁻, q⁻)`.
    DownDown,
    /// `↑↑`: killed below, expires above, `(p⁺, q⁺)`.
    UpUp,
    /// `↓↑`: expires at both ends, `(p⁻, q⁺)`.
    DownUp,
}

impl Behavior {
    pub const ALL: [Behavior; 4] = [Behavior::UpDown, Behavior::DownDown, Behavior::UpUp, Behavior::DownUp];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Interval openness code: `oo`, `co`, `oc`, `cc`.
    pub fn code(self) -> &'static str {
        match self {
            Behavior::UpDown => "oo",
            Behavior::DownDown => "co",
            Behavior::UpUp => "oc",
            Behavior::DownUp => "cc",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.code() == code)
    }

    pub fn arrows(self) -> &'static str {
        match self {
            Behavior::UpDown => "↑↓",
            Behavior::DownDown => "↓↓",
            Behavior::UpUp => "↑↑",
            Behavior::DownUp => "↓↑",
        }
    }

    pub fn decorations(self) -> (Decoration, Decoration) {
        use Decoration::*;
        match self {
            Behavior::UpDown => (Plus, Minus),
            Behavior::DownDown => (Minus, Minus),
            Behavior::UpUp => (Plus, Plus),
            Behavior::DownUp => (Minus, Plus),
        }
    }

    pub fn from_decorations(p: Decoration, q: Decoration) -> Self {
        use Decoration::*;
        match (p, q) {
            (Plus, Minus) => Behavior::UpDown,
            (Minus, Minus) => Behavior::DownDown,
            (Plus, Plus) => Behavior::UpUp,
            (Minus, Plus) => Behavior::DownUp,
        }
    }

    /// The type matching this one after `f ↦ -f`.
    pub fn reversed(self) -> Self {
        match self {
            Behavior::DownDown => Behavior::UpUp,
            Behavior::UpUp => Behavior::DownDown,
            t => t,
        }
    }

    /// Interval in the 7-node slice zigzag counted by this type (0-based).
    fn pattern(self) -> (usize, usize) {
        match self {
            Behavior::UpDown => (2, 4),
            Behavior::DownDown => (1, 4),
            Behavior::UpUp => (2, 5),
            Behavior::DownUp => (1, 5),
        }
    }
}

impl fmt::Display for Behavior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.arrows())
    }
}

/// All four measures at once, indexed by [`Behavior::index`].
pub type MeasureValues = [usize; 4];

/// Evaluates measures of one space, reusing the chain complexes and attaching maps.
#[derive(Clone, Debug)]
pub struct MeasureEngine {
    chains: SpaceChains,
}

impl MeasureEngine {
    pub fn new(space: &ConstructibleRSpace, field: PrimeField) -> Result<Self> {
        Ok(Self {
            chains: SpaceChains::new(space, field)?,
        })
    }

    pub fn chains(&self) -> &SpaceChains {
        &self.chains
    }

    pub fn field(&self) -> PrimeField {
        self.chains.field()
    }

    fn model(&self, r: &Rectangle) -> Result<LevelModel> {
        LevelModel::new(&self.chains, &[r.a, r.b, r.c, r.d])
    }

    /// Homology zigzag of a sequence of nested pieces, arrows alternating `->`, `<-`, ...
    fn zigzag(model: &LevelModel, pieces: &[Piece], k: usize, first_forward: bool) -> Result<ZigzagModule> {
        let h: Vec<_> = pieces.iter().map(|&p| model.homology(p, k)).collect();
        let mut arrows = Vec::with_capacity(pieces.len().saturating_sub(1));
        for i in 0..pieces.len().saturating_sub(1) {
            let forward = (i % 2 == 0) == first_forward;
            arrows.push(if forward {
                Arrow::forward(model.induced(&h[i], &h[i + 1])?)
            } else {
                Arrow::backward(model.induced(&h[i + 1], &h[i])?)
            });
        }
        ZigzagModule::new(model.field(), h.iter().map(|x| x.rank()).collect(), arrows)
    }

    fn seven_pieces(model: &LevelModel, r: &Rectangle) -> Result<Vec<Piece>> {
        Ok(vec![
            model.fiber(r.a)?,
            model.slice(r.a, r.b)?,
            model.fiber(r.b)?,
            model.slice(r.b, r.c)?,
            model.fiber(r.c)?,
            model.slice(r.c, r.d)?,
            model.fiber(r.d)?,
        ])
    }

    /// The 7-node zigzag `H_k X_{a,b,c,d}`.
    pub fn slice_zigzag(&self, k: usize, r: &Rectangle) -> Result<ZigzagModule> {
        let model = self.model(r)?;
        let pieces = Self::seven_pieces(&model, r)?;
        Self::zigzag(&model, &pieces, k, true)
    }

    pub fn measures(&self, k: usize, r: &Rectangle) -> Result<MeasureValues> {
        Ok(self.measures_upto(k, r)?[k])
    }

    /// Measures in every dimension `0..=max_dim`, sharing one subdivided model.
    pub fn measures_upto(&self, max_dim: usize, r: &Rectangle) -> Result<Vec<MeasureValues>> {
        let model = self.model(r)?;
        let pieces = Self::seven_pieces(&model, r)?;
        (0..=max_dim)
            .map(|k| {
                let bars = decompose(&Self::zigzag(&model, &pieces, k, true)?)?;
                Ok(Behavior::ALL.map(|t| {
                    let (p, q) = t.pattern();
                    bars.get(p, q)
                }))
            })
            .collect()
    }

    pub fn measure(&self, k: usize, t: Behavior, r: &Rectangle) -> Result<usize> {
        Ok(self.measures(k, r)?[t.index()])
    }

    /// Multiplicity of the full bar in `X_b^b -> X_b^c <- X_c^c`.
    pub fn closed_bar_bound(&self, k: usize, r: &Rectangle) -> Result<usize> {
        let model = self.model(r)?;
        let pieces = [model.fiber(r.b)?, model.slice(r.b, r.c)?, model.fiber(r.c)?];
        Ok(decompose(&Self::zigzag(&model, &pieces, k, true)?)?.get(0, 2))
    }
}

/// `μ^t_k(R)` from the slices of `X`.
pub fn measure_direct(
    space: &ConstructibleRSpace,
    k: usize,
    t: Behavior,
    r: &Rectangle,
    field: PrimeField,
) -> Result<usize> {
    MeasureEngine::new(space, field)?.measure(k, t, r)
}

/// All four `μ^t_k(R)`.
pub fn measures_direct(
    space: &ConstructibleRSpace,
    k: usize,
    r: &Rectangle,
    field: PrimeField,
) -> Result<MeasureValues> {
    MeasureEngine::new(space, field)?.measures(k, r)
}

/// The bound `Σ_t μ^t_k(R) ≤` full-bar multiplicity of `H_k X_{b,c}`.
pub fn closed_bar_bound(space: &ConstructibleRSpace, k: usize, r: &Rectangle, field: PrimeField) -> Result<usize> {
    MeasureEngine::new(space, field)?.closed_bar_bound(k, r)
}

/// Number of points of `d` inside `r`.
pub fn measure_via_diagram(d: &DecoratedDiagram, r: &Rectangle) -> usize {
    d.count_in(r)
}

pub fn coordinate_reverse(space: &ConstructibleRSpace) -> ConstructibleRSpace {
    space.reversed()
}

pub fn reverse_rectangle(r: &Rectangle) -> Rectangle {
    r.reversed()
}

/// Memoizes measure evaluations by rectangle; extraction revisits the same rectangles
/// for every behavior type.
#[derive(Debug)]
pub struct MeasureCache<'a> {
    engine: &'a MeasureEngine,
    max_dim: usize,
    values: HashMap<[u64; 4], Vec<MeasureValues>>,
}

impl<'a> MeasureCache<'a> {
    pub fn new(engine: &'a MeasureEngine, max_dim: usize) -> Self {
        Self {
            engine,
            max_dim,
            values: HashMap::new(),
        }
    }

    pub fn measure(&mut self, k: usize, t: Behavior, r: &Rectangle) -> Result<usize> {
        if k > self.max_dim {
            return Err(Error::Precondition(format!("dimension {k} beyond cached {}", self.max_dim)));
        }
        let key = [r.a, r.b, r.c, r.d].map(f64::to_bits);
        if !self.values.contains_key(&key) {
            let v = self.engine.measures_upto(self.max_dim, r)?;
            self.values.insert(key, v);
        }
        Ok(self.values[&key][k][t.index()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{circle, figure_four, sphere};

    fn rect(a: f64, b: f64, c: f64, d: f64) -> Rectangle {
        Rectangle::new(a, b, c, d).unwrap()
    }

    #[test]
    fn rectangle_validation() {
        assert!(Rectangle::new(0.0, 1.0, 1.0, 2.0).is_err());
        assert!(Rectangle::new(0.0, 2.0, 1.0, 3.0).is_err());
        assert!(Rectangle::new(f64::NEG_INFINITY, 0.0, 1.0, f64::INFINITY).is_ok());
        assert!(Rectangle::new(0.0, f64::NAN, 1.0, 2.0).is_err());
        let r = rect(0.0, 1.0, 2.0, 4.0);
        let (l, rr) = r.split_horizontal(0.5).unwrap();
        assert_eq!((l.b(), rr.a()), (0.5, 0.5));
        assert!(r.split_vertical(1.0).is_err());
        assert_eq!(r.reversed(), rect(-4.0, -2.0, -1.0, 0.0));
    }

    #[test]
    fn codes_round_trip() {
        for t in Behavior::ALL {
            assert_eq!(Behavior::from_code(t.code()), Some(t));
            let (p, q) = t.decorations();
            assert_eq!(Behavior::from_decorations(p, q), t);
        }
    }

    #[test]
    fn circle_measures() {
        let f = PrimeField::GF2;
        let x = circle();
        assert_eq!(measure_direct(&x, 0, Behavior::DownUp, &rect(-1.0, 0.4, 0.6, 2.0), f).unwrap(), 1);
        // the closed bar [0, 1] is not born inside [-1, -0.5]
        assert_eq!(measure_direct(&x, 0, Behavior::DownUp, &rect(-1.0, -0.5, 1.5, 2.0), f).unwrap(), 0);
        assert_eq!(measure_direct(&x, 0, Behavior::UpDown, &rect(-0.2, 0.3, 0.6, 1.4), f).unwrap(), 1);
        assert_eq!(measures_direct(&x, 0, &rect(-4.0, -3.0, -2.0, -1.0), f).unwrap(), [0; 4]);
        assert_eq!(measures_direct(&x, 1, &rect(-1.0, -0.5, 1.5, 2.0), f).unwrap(), [0; 4]);
    }

    #[test]
    fn sphere_measures() {
        let f = PrimeField::new(3).unwrap();
        let x = sphere();
        assert_eq!(measures_direct(&x, 1, &rect(-0.2, 0.3, 0.6, 1.4), f).unwrap(), [1, 0, 0, 0]);
        assert_eq!(measures_direct(&x, 0, &rect(-1.0, 0.4, 0.6, 2.0), f).unwrap(), [0, 0, 0, 1]);
    }

    #[test]
    fn figure_four_detects_each_type() {
        let r = rect(1.0, 2.5, 2.7, 4.0);
        for t in Behavior::ALL {
            let v = measures_direct(&figure_four(t), 0, &r, PrimeField::GF2).unwrap();
            let mut expected = [0; 4];
            expected[t.index()] = 1;
            assert_eq!(v, expected, "{t}");
        }
    }

    #[test]
    fn reversal_identities() {
        let r = rect(1.0, 2.5, 2.7, 4.0);
        for t in Behavior::ALL {
            let x = figure_four(t);
            let xr = coordinate_reverse(&x);
            let rr = reverse_rectangle(&r);
            for s in Behavior::ALL {
                assert_eq!(
                    measure_direct(&xr, 0, s.reversed(), &rr, PrimeField::GF2).unwrap(),
                    measure_direct(&x, 0, s, &r, PrimeField::GF2).unwrap()
                );
            }
        }
    }

    #[test]
    fn bound_on_circle() {
        let f = PrimeField::GF2;
        let r = rect(-0.2, 0.3, 0.6, 1.4);
        let total: usize = measures_direct(&circle(), 0, &r, f).unwrap().iter().sum();
        assert!(total <= closed_bar_bound(&circle(), 0, &r, f).unwrap());
    }
}
