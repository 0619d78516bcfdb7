//! Property suites run against a single space: additivity, equivalence of the
//! two diagram pipelines, the closed-bar bound, duality, the extended
//! correspondence, the restriction identity, and decoration typing.
//!
//! Every suite reports a counterexample on failure instead of stopping at an error.

use std::fmt;

use rand::Rng;

use crate::cohomology::cohomology_diagrams_from_chains;
use crate::diagrams::{extract_diagram, FourDiagrams};
use crate::error::Result;
use crate::extended::{ExtendedEngine, ExtendedKind};
use crate::levelset::parametrized_homology_from_chains;
use crate::linalg::PrimeField;
use crate::measures::{Behavior, MeasureCache, MeasureEngine, MeasureValues, Rectangle};
use crate::rspace::ConstructibleRSpace;
use crate::zigzag::{coarsen, decompose, restrict_interval, Direction, IntervalMultiset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn fail(&mut self, msg: String) {
        if self.failure.is_none() {
            self.failure = Some(msg);
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(m) => write!(f, "FAIL {} ({} cases): {m}", self.name, self.cases),
        }
    }
}

/// Number of random cases per suite.
#[derive(Clone, Copy, Debug)]
pub struct CaseCounts {
    pub rectangles: usize,
    pub splits: usize,
    pub bound: usize,
    pub correspondence: usize,
    pub restriction: usize,
}

impl Default for CaseCounts {
    fn default() -> Self {
        Self {
            rectangles: 200,
            splits: 200,
            bound: 100,
            correspondence: 100,
            restriction: 20,
        }
    }
}

/// A space with its chain data and levelset diagrams, ready for property runs.
pub struct Suite {
    critical: Vec<f64>,
    max_dim: usize,
    engine: MeasureEngine,
    extended: ExtendedEngine,
    diagrams: Vec<FourDiagrams>,
}

impl Suite {
    /// Dimensions `0..=max_dim` are checked; by default one above the top simplex dimension.
    pub fn new(space: &ConstructibleRSpace, field: PrimeField, max_dim: Option<usize>) -> Result<Self> {
        let max_dim = max_dim.unwrap_or_else(|| default_max_dim(space));
        let engine = MeasureEngine::new(space, field)?;
        let diagrams = (0..=max_dim)
            .map(|k| parametrized_homology_from_chains(engine.chains(), k))
            .collect::<Result<_>>()?;
        Ok(Self {
            critical: space.critical_values().to_vec(),
            max_dim,
            extended: ExtendedEngine::from_chains(engine.chains().clone()),
            engine,
            diagrams,
        })
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn diagrams(&self) -> &[FourDiagrams] {
        &self.diagrams
    }

    pub fn engine(&self) -> &MeasureEngine {
        &self.engine
    }

    fn span(&self) -> (f64, f64) {
        let lo = self.critical[0];
        let hi = self.critical[self.critical.len() - 1];
        let pad = 1.0 + 0.25 * (hi - lo);
        (lo - pad, hi + pad)
    }

    /// A value in the padded critical range that is not a critical value.
    pub fn regular_value<R: Rng>(&self, rng: &mut R) -> f64 {
        let (lo, hi) = self.span();
        loop {
            let t = rng.gen_range(lo..hi);
            if !self.critical.contains(&t) {
                return t;
            }
        }
    }

    /// A rectangle with regular corners; `a = -∞` or `d = +∞` one time in ten.
    pub fn random_rectangle<R: Rng>(&self, rng: &mut R) -> Rectangle {
        loop {
            let mut v: Vec<f64> = (0..4).map(|_| self.regular_value(rng)).collect();
            v.sort_by(f64::total_cmp);
            if rng.gen_bool(0.1) {
                v[0] = f64::NEG_INFINITY;
            }
            if rng.gen_bool(0.1) {
                v[3] = f64::INFINITY;
            }
            if let Ok(r) = Rectangle::new(v[0], v[1], v[2], v[3]) {
                return r;
            }
        }
    }

    /// `measure_direct` equals the diagram point count, every dimension and type.
    pub fn equivalence<R: Rng>(&self, rng: &mut R, count: usize) -> Result<CheckOutcome> {
        let mut out = CheckOutcome::new("equivalence");
        for _ in 0..count {
            let r = self.random_rectangle(rng);
            let direct = self.engine.measures_upto(self.max_dim, &r)?;
            for (k, values) in direct.iter().enumerate() {
                for t in Behavior::ALL {
                    out.cases += 1;
                    let via = self.diagrams[k].get(t).count_in(&r);
                    if values[t.index()] != via {
                        out.fail(format!(
                            "H{k} {} on {r}: direct {} vs diagram {via}",
                            t.code(),
                            values[t.index()]
                        ));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn additivity<R: Rng>(&self, rng: &mut R, count: usize) -> Result<CheckOutcome> {
        let engine = &self.engine;
        let max_dim = self.max_dim;
        self.additivity_with(rng, count, |r| engine.measures_upto(max_dim, r))
    }

    /// `μ(R) = μ(R₁) + μ(R₂)` for random horizontal and vertical splits of `oracle`.
    pub fn additivity_with<R, F>(&self, rng: &mut R, count: usize, mut oracle: F) -> Result<CheckOutcome>
    where
        R: Rng,
        F: FnMut(&Rectangle) -> Result<Vec<MeasureValues>>,
    {
        let mut out = CheckOutcome::new("additivity");
        for i in 0..count {
            let r = self.random_rectangle(rng);
            let (a, b, c, d) = r.corners();
            let (first, second) = if i % 2 == 0 {
                let x = self.split_point(rng, a, b);
                r.split_horizontal(x)?
            } else {
                let y = self.split_point(rng, c, d);
                r.split_vertical(y)?
            };
            let (whole, m1, m2) = (oracle(&r)?, oracle(&first)?, oracle(&second)?);
            for k in 0..whole.len() {
                for t in Behavior::ALL {
                    out.cases += 1;
                    let j = t.index();
                    if whole[k][j] != m1[k][j] + m2[k][j] {
                        out.fail(format!(
                            "H{k} {} on {r} split into {first} + {second}: {} != {} + {}",
                            t.code(),
                            whole[k][j],
                            m1[k][j],
                            m2[k][j]
                        ));
                    }
                }
            }
        }
        Ok(out)
    }

    fn split_point<R: Rng>(&self, rng: &mut R, lo: f64, hi: f64) -> f64 {
        let (span_lo, span_hi) = self.span();
        let lo = if lo.is_finite() { lo } else { span_lo.min(hi) - 1.0 };
        let hi = if hi.is_finite() { hi } else { span_hi.max(lo) + 1.0 };
        loop {
            let x = rng.gen_range(lo..hi);
            if x > lo && x < hi && !self.critical.contains(&x) {
                return x;
            }
        }
    }

    /// `Σ_t μ^t(R) ≤` closed-bar multiplicity of `X_b^b -> X_b^c <- X_c^c`.
    pub fn bound<R: Rng>(&self, rng: &mut R, count: usize) -> Result<CheckOutcome> {
        let mut out = CheckOutcome::new("bound");
        for _ in 0..count {
            let r = self.random_rectangle(rng);
            let values = self.engine.measures_upto(self.max_dim, &r)?;
            for (k, v) in values.iter().enumerate() {
                out.cases += 1;
                let sum: usize = v.iter().sum();
                let bar = self.engine.closed_bar_bound(k, &r)?;
                if sum > bar {
                    out.fail(format!("H{k} on {r}: Σμ = {sum} > {bar}"));
                }
            }
        }
        Ok(out)
    }

    /// Cohomology diagrams equal homology diagrams.
    pub fn duality(&self) -> Result<CheckOutcome> {
        let mut out = CheckOutcome::new("duality");
        for k in 0..=self.max_dim {
            out.cases += 1;
            if let Err(e) = cohomology_diagrams_from_chains(self.engine.chains(), k) {
                out.fail(e.to_string());
            }
        }
        Ok(out)
    }

    /// `μ^Ord_i = μ^↓↓_i`, `μ^Rel_{i+1} = μ^↑↑_i`, `μ^Ext⁺_i = μ^↓↑_i`, `μ^Ext⁻_{i+1} = μ^↑↓_i`.
    pub fn correspondence<R: Rng>(&self, rng: &mut R, count: usize) -> Result<CheckOutcome> {
        let mut out = CheckOutcome::new("correspondence");
        for _ in 0..count {
            let r = self.random_rectangle(rng);
            let param = self.engine.measures_upto(self.max_dim, &r)?;
            let ext: Vec<[usize; 4]> = (0..=self.max_dim + 1)
                .map(|i| self.extended.measures(i, &r))
                .collect::<Result<_>>()?;
            for kind in ExtendedKind::ALL {
                let (t, shift) = kind.correspondence();
                for i in 0..=self.max_dim {
                    out.cases += 1;
                    let lhs = ext[i + shift][kind as usize];
                    let rhs = param[i][t.index()];
                    if lhs != rhs {
                        out.fail(format!(
                            "{kind}_{} = {lhs} but {}_{i} = {rhs} on {r}",
                            i + shift,
                            t.code()
                        ));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Dropping an interior node of the all-forward extended module maps each bar
    /// to its restriction.
    pub fn restriction<R: Rng>(&self, rng: &mut R, count: usize) -> Result<CheckOutcome> {
        let mut out = CheckOutcome::new("restriction");
        for _ in 0..count {
            let r = self.random_rectangle(rng);
            for i in 0..=self.max_dim + 1 {
                let module = self.extended.module(i, &r)?;
                let bars = decompose(&module)?;
                let dirs = module.directions();
                for k in 1..module.len() - 1 {
                    if dirs[k - 1] != dirs[k] || dirs[k] != Direction::Forward {
                        continue;
                    }
                    out.cases += 1;
                    let coarse = decompose(&coarsen(&module, k)?)?;
                    let expected = restrict_bars(&bars, k);
                    if coarse != expected {
                        out.fail(format!("degree {i} on {r}, dropping node {k}"));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Diagrams extracted from the direct measures equal the levelset diagrams.
    pub fn pipelines_agree(&self) -> Result<CheckOutcome> {
        let mut out = CheckOutcome::new("pipelines");
        let mut cache = MeasureCache::new(&self.engine, self.max_dim);
        for k in 0..=self.max_dim {
            for t in Behavior::ALL {
                out.cases += 1;
                let extracted = extract_diagram(|r| cache.measure(k, t, r), t, k, &self.critical)?;
                let levelset = self.diagrams[k].get(t);
                if &extracted != levelset {
                    out.fail(format!("extracted {extracted} vs levelset {levelset}"));
                }
            }
        }
        Ok(out)
    }

    /// Every diagram holds only its own decoration pair.
    pub fn typing(&self) -> CheckOutcome {
        let mut out = CheckOutcome::new("typing");
        for d in self.diagrams.iter().flat_map(FourDiagrams::iter) {
            out.cases += 1;
            if !d.is_well_typed() {
                out.fail(format!("{d}"));
            }
        }
        out
    }

    pub fn run_all<R: Rng>(&self, rng: &mut R, counts: CaseCounts) -> Result<Vec<CheckOutcome>> {
        Ok(vec![
            self.additivity(rng, counts.splits)?,
            self.restriction(rng, counts.restriction)?,
            self.equivalence(rng, counts.rectangles)?,
            self.pipelines_agree()?,
            self.duality()?,
            self.bound(rng, counts.bound)?,
            self.correspondence(rng, counts.correspondence)?,
            self.typing(),
        ])
    }
}

/// One above the top simplex dimension: slices can carry homology that high.
pub fn default_max_dim(space: &ConstructibleRSpace) -> usize {
    space
        .vertex_complexes()
        .iter()
        .chain(space.edge_complexes())
        .filter_map(|k| k.dimension())
        .max()
        .map_or(0, |d| d + 1)
}

/// Expected bars after dropping node `k`.
pub fn restrict_bars(bars: &IntervalMultiset, k: usize) -> IntervalMultiset {
    let mut out = IntervalMultiset::new(bars.len() - 1);
    for ((p, q), m) in bars.iter() {
        if let Some((p2, q2)) = restrict_interval(p, q, k) {
            out.insert(p2, q2, m);
        }
    }
    out
}
