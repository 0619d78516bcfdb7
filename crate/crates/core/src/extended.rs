//! Extended persistence measures and their correspondence with the four
//! parametrized measures.
//!
//! For `a < b < c < d` the module is
//!
//! ```text
//! X^a -> X^b -> X^c -> X^d -> (X, X_d) -> (X, X_c) -> (X, X_b) -> (X, X_a)
//! ```
//!
//! with `X^t = f^{-1}(-∞, t]` and `X_t = f^{-1}[t, ∞)`.

use std::fmt;

use crate::diagrams::{DecoratedDiagram, FourDiagrams};
use crate::error::Result;
use crate::measures::{Behavior, Rectangle};
use crate::rspace::{ConstructibleRSpace, LevelModel, SpaceChains};
use crate::linalg::PrimeField;
use crate::zigzag::{decompose, Arrow, ZigzagModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedKind {
    Ord,
    Rel,
    ExtPlus,
    ExtMinus,
}

impl ExtendedKind {
    pub const ALL: [ExtendedKind; 4] = [
        ExtendedKind::Ord,
        ExtendedKind::Rel,
        ExtendedKind::ExtPlus,
        ExtendedKind::ExtMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExtendedKind::Ord => "Ord",
            ExtendedKind::Rel => "Rel",
            ExtendedKind::ExtPlus => "Ext+",
            ExtendedKind::ExtMinus => "Ext-",
        }
    }

    /// Bar of the 8-node module counted by this kind (0-based).
    fn pattern(self) -> (usize, usize) {
        match self {
            ExtendedKind::Ord => (1, 2),
            ExtendedKind::Rel => (5, 6),
            ExtendedKind::ExtPlus => (1, 4),
            ExtendedKind::ExtMinus => (3, 6),
        }
    }

    /// The parametrized type and dimension shift: `μ^kind_{i + shift} = μ^type_i`.
    pub fn correspondence(self) -> (Behavior, usize) {
        match self {
            ExtendedKind::Ord => (Behavior::DownDown, 0),
            ExtendedKind::Rel => (Behavior::UpUp, 1),
            ExtendedKind::ExtPlus => (Behavior::DownUp, 0),
            ExtendedKind::ExtMinus => (Behavior::UpDown, 1),
        }
    }
}

impl fmt::Display for ExtendedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One extended diagram: the points of a parametrized diagram relabelled.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedDiagram {
    pub dim: usize,
    pub kind: ExtendedKind,
    pub points: DecoratedDiagram,
}

/// Ord, Rel, Ext⁺, Ext⁻ in each dimension `0..=max + 1`.
pub fn extended_from_parametrized(diagrams: &[FourDiagrams]) -> Vec<ExtendedDiagram> {
    let top = diagrams.iter().map(FourDiagrams::dim).max().map_or(0, |d| d + 1);
    let mut out = Vec::new();
    for dim in 0..=top {
        for kind in ExtendedKind::ALL {
            let (t, shift) = kind.correspondence();
            let source = dim
                .checked_sub(shift)
                .and_then(|i| diagrams.iter().find(|d| d.dim() == i));
            let points = match source {
                Some(d) => d.get(t).clone(),
                None => DecoratedDiagram::new(dim.saturating_sub(shift), t),
            };
            out.push(ExtendedDiagram { dim, kind, points });
        }
    }
    out
}

/// Extended measures of one space, reusing its chain data.
#[derive(Clone, Debug)]
pub struct ExtendedEngine {
    chains: SpaceChains,
}

impl ExtendedEngine {
    pub fn new(space: &ConstructibleRSpace, field: PrimeField) -> Result<Self> {
        Ok(Self {
            chains: SpaceChains::new(space, field)?,
        })
    }

    pub fn from_chains(chains: SpaceChains) -> Self {
        Self { chains }
    }

    /// The 8-node module in degree `i`.
    pub fn module(&self, i: usize, r: &Rectangle) -> Result<ZigzagModule> {
        let (a, b, c, d) = r.corners();
        let model = LevelModel::new(&self.chains, &[a, b, c, d])?;
        let pieces = [
            model.sublevel(a)?,
            model.sublevel(b)?,
            model.sublevel(c)?,
            model.sublevel(d)?,
            model.relative_to_superlevel(d)?,
            model.relative_to_superlevel(c)?,
            model.relative_to_superlevel(b)?,
            model.relative_to_superlevel(a)?,
        ];
        let h: Vec<_> = pieces.iter().map(|&p| model.homology(p, i)).collect();
        let arrows = h
            .windows(2)
            .map(|w| Ok(Arrow::forward(model.induced(&w[0], &w[1])?)))
            .collect::<Result<Vec<_>>>()?;
        ZigzagModule::new(model.field(), h.iter().map(|x| x.rank()).collect(), arrows)
    }

    pub fn measures(&self, i: usize, r: &Rectangle) -> Result<[usize; 4]> {
        let bars = decompose(&self.module(i, r)?)?;
        Ok(ExtendedKind::ALL.map(|kind| {
            let (p, q) = kind.pattern();
            bars.get(p, q)
        }))
    }

    pub fn measure(&self, i: usize, kind: ExtendedKind, r: &Rectangle) -> Result<usize> {
        Ok(self.measures(i, r)?[kind as usize])
    }
}

/// `μ^kind_i(R)` from sublevel sets and relative pairs.
pub fn extended_direct(
    space: &ConstructibleRSpace,
    i: usize,
    kind: ExtendedKind,
    r: &Rectangle,
    field: PrimeField,
) -> Result<usize> {
    ExtendedEngine::new(space, field)?.measure(i, kind, r)
}
