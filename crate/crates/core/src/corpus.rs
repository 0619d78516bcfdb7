//! Small named spaces with hand-computable diagrams, and a seeded generator
//! of random constructible spaces.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complexes::{SimplicialComplex, SimplicialMap, Simplex};
use crate::measures::Behavior;
use crate::rspace::ConstructibleRSpace;

fn graph(vertices: &[u32]) -> SimplicialComplex {
    SimplicialComplex::from_simplices(vertices.iter().map(|&v| [v])).expect("vertex list")
}

/// A point over `0`.
pub fn point() -> ConstructibleRSpace {
    ConstructibleRSpace::constant(0.0, SimplicialComplex::point())
}

/// The empty space (one critical value, empty fiber).
pub fn empty() -> ConstructibleRSpace {
    ConstructibleRSpace::constant(0.0, SimplicialComplex::empty())
}

/// A circle by height over `[0, 1]`: two arcs from the minimum to the maximum.
pub fn circle() -> ConstructibleRSpace {
    ConstructibleRSpace::new(
        vec![0.0, 1.0],
        vec![SimplicialComplex::point(), SimplicialComplex::point()],
        vec![SimplicialComplex::discrete(2)],
        vec![SimplicialMap::constant([0, 1], 0)],
        vec![SimplicialMap::constant([0, 1], 0)],
    )
    .expect("circle")
}

/// A 2-sphere by height over `[0, 1]`: triangle-boundary fibers coned off at both ends.
pub fn sphere() -> ConstructibleRSpace {
    let triangle = SimplicialComplex::from_simplices([[0u32, 1], [1, 2], [0, 2]]).expect("triangle");
    ConstructibleRSpace::new(
        vec![0.0, 1.0],
        vec![SimplicialComplex::point(), SimplicialComplex::point()],
        vec![triangle],
        vec![SimplicialMap::constant([0, 1, 2], 0)],
        vec![SimplicialMap::constant([0, 1, 2], 0)],
    )
    .expect("sphere")
}

/// A strand over `[0, 3]` plus a separate strand over `[1, 2]`.
pub fn two_component() -> ConstructibleRSpace {
    strands([0.0, 1.0, 2.0, 3.0], Behavior::DownUp)
}

/// One model for each panel of "two components over `[b, c]` become one",
/// over critical values `0, 2, 3, 5`.
///
/// The main strand `0` runs throughout; strand `1` lives over `[2, 3]` and
/// is free or attached to the main strand at each end according to `t`.
/// The rectangle `[1, 2.5] × [2.7, 4]` detects it with the measure of type `t`.
pub fn figure_four(t: Behavior) -> ConstructibleRSpace {
    strands([0.0, 2.0, 3.0, 5.0], t)
}

fn strands(values: [f64; 4], t: Behavior) -> ConstructibleRSpace {
    let one = graph(&[0]);
    let two = graph(&[0, 1]);
    let id = SimplicialMap::new([(0, 0), (1, 1)]);
    let merge = SimplicialMap::constant([0, 1], 0);
    // free end: strand 1 has its own endpoint in V; attached: it merges into 0
    let (free_low, free_high) = match t {
        Behavior::DownUp => (true, true),
        Behavior::DownDown => (true, false),
        Behavior::UpUp => (false, true),
        Behavior::UpDown => (false, false),
    };
    let v1 = if free_low { two.clone() } else { one.clone() };
    let v2 = if free_high { two.clone() } else { one.clone() };
    ConstructibleRSpace::new(
        values.to_vec(),
        vec![one.clone(), v1, v2, one.clone()],
        vec![one.clone(), two, one],
        vec![
            SimplicialMap::new([(0, 0)]),
            if free_low { id.clone() } else { merge.clone() },
            SimplicialMap::new([(0, 0)]),
        ],
        vec![
            SimplicialMap::new([(0, 0)]),
            if free_high { id } else { merge },
            SimplicialMap::new([(0, 0)]),
        ],
    )
    .expect("strand model")
}

/// A tree shaped like `Y` by height: two branches joining at `1`, one trunk to `2`.
pub fn y_tree() -> ConstructibleRSpace {
    ConstructibleRSpace::new(
        vec![0.0, 0.5, 1.0, 2.0],
        vec![graph(&[0]), graph(&[0, 1]), graph(&[0]), graph(&[0])],
        vec![graph(&[0]), graph(&[0, 1]), graph(&[0])],
        vec![
            SimplicialMap::new([(0, 0)]),
            SimplicialMap::new([(0, 0), (1, 1)]),
            SimplicialMap::new([(0, 0)]),
        ],
        vec![
            SimplicialMap::new([(0, 0)]),
            SimplicialMap::constant([0, 1], 0),
            SimplicialMap::new([(0, 0)]),
        ],
    )
    .expect("y tree")
}

/// A torus standing on end: circle fibers, pinched to a figure-eight at the two saddles.
pub fn torus() -> ConstructibleRSpace {
    let circle = SimplicialComplex::from_simplices([[0u32, 1], [1, 2], [0, 2]]).expect("circle");
    let two_circles =
        SimplicialComplex::from_simplices([[0u32, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]]).expect("circles");
    // figure-eight: two triangles sharing vertex 0
    let eight = SimplicialComplex::from_simplices([[0u32, 1], [1, 2], [0, 2], [0, 3], [3, 4], [0, 4]]).expect("eight");
    let onto_eight = SimplicialMap::new([(0, 0), (1, 1), (2, 2), (3, 0), (4, 3), (5, 4)]);
    let on_circle = SimplicialMap::new([(0, 0), (1, 1), (2, 2)]);
    let wrap = SimplicialMap::new([(0, 0), (1, 1), (2, 2)]);
    ConstructibleRSpace::new(
        vec![0.0, 1.0, 2.0, 3.0],
        vec![SimplicialComplex::point(), eight.clone(), eight, SimplicialComplex::point()],
        vec![circle.clone(), two_circles, circle],
        vec![SimplicialMap::constant([0, 1, 2], 0), onto_eight.clone(), on_circle],
        vec![wrap, onto_eight, SimplicialMap::constant([0, 1, 2], 0)],
    )
    .expect("torus")
}

/// The named spaces, with short names.
pub fn named() -> Vec<(&'static str, ConstructibleRSpace)> {
    vec![
        ("point", point()),
        ("empty", empty()),
        ("circle", circle()),
        ("sphere", sphere()),
        ("two-component", two_component()),
        ("figure-oo", figure_four(Behavior::UpDown)),
        ("figure-co", figure_four(Behavior::DownDown)),
        ("figure-oc", figure_four(Behavior::UpUp)),
        ("figure-cc", figure_four(Behavior::DownUp)),
        ("y-tree", y_tree()),
        ("torus", torus()),
    ]
}

/// Shape of a random constructible space.
#[derive(Clone, Debug)]
pub struct RandomSpaceParams {
    pub critical_values: RangeInclusive<usize>,
    pub vertices: RangeInclusive<u32>,
    pub edge_probability: f64,
    pub triangle_probability: f64,
    /// Chance of adding a hollow tetrahedron, to get 2-cycles.
    pub hollow_tetrahedron_probability: f64,
    pub max_piece_simplices: usize,
}

impl Default for RandomSpaceParams {
    fn default() -> Self {
        Self {
            critical_values: 1..=6,
            vertices: 1..=5,
            edge_probability: 0.45,
            triangle_probability: 0.3,
            hollow_tetrahedron_probability: 0.1,
            max_piece_simplices: 50,
        }
    }
}

fn random_simplices<R: Rng>(rng: &mut R, n: u32, params: &RandomSpaceParams) -> Vec<Simplex> {
    let mut out: Vec<Simplex> = (0..n).map(|v| vec![v]).collect();
    let mut edges = std::collections::BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(params.edge_probability) {
                edges.insert((i, j));
                out.push(vec![i, j]);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if edges.contains(&(i, j))
                    && edges.contains(&(j, k))
                    && edges.contains(&(i, k))
                    && rng.gen_bool(params.triangle_probability)
                {
                    out.push(vec![i, j, k]);
                }
            }
        }
    }
    if n >= 4 && rng.gen_bool(params.hollow_tetrahedron_probability) {
        let mut vs: Vec<u32> = (0..n).collect();
        vs.shuffle(rng);
        let t = &vs[..4];
        for skip in 0..4 {
            out.push(t.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect());
        }
    }
    out
}

/// A random valid constructible space; vertex complexes are enlarged by the
/// images of the edge complexes so both attaching maps are simplicial.
pub fn random_space<R: Rng>(rng: &mut R, params: &RandomSpaceParams) -> ConstructibleRSpace {
    loop {
        if let Some(x) = try_random_space(rng, params) {
            return x;
        }
    }
}

fn try_random_space<R: Rng>(rng: &mut R, params: &RandomSpaceParams) -> Option<ConstructibleRSpace> {
    let n = rng.gen_range(params.critical_values.clone());
    let mut values = Vec::with_capacity(n);
    let mut v: f64 = rng.gen_range(-2.0..2.0);
    for _ in 0..n {
        values.push(v);
        v += rng.gen_range(0.25..2.0);
    }
    let mut vertex_simplices: Vec<Vec<Simplex>> = (0..n)
        .map(|_| {
            let nv = rng.gen_range(params.vertices.clone()).max(1);
            random_simplices(rng, nv, params)
        })
        .collect();
    let vertex_counts: Vec<u32> = vertex_simplices
        .iter()
        .map(|s| s.iter().filter(|x| x.len() == 1).count() as u32)
        .collect();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut lefts = Vec::with_capacity(n.saturating_sub(1));
    let mut rights = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n.saturating_sub(1) {
        let ne = rng.gen_range(params.vertices.clone());
        let e = SimplicialComplex::from_simplices(random_simplices(rng, ne, params)).ok()?;
        let l = SimplicialMap::new((0..ne).map(|v| (v, rng.gen_range(0..vertex_counts[i]))));
        let r = SimplicialMap::new((0..ne).map(|v| (v, rng.gen_range(0..vertex_counts[i + 1]))));
        for s in e.iter() {
            vertex_simplices[i].push(l.image(s)?);
            vertex_simplices[i + 1].push(r.image(s)?);
        }
        edges.push(e);
        lefts.push(l);
        rights.push(r);
    }
    let vertices: Vec<SimplicialComplex> = vertex_simplices
        .into_iter()
        .map(SimplicialComplex::from_simplices)
        .collect::<crate::Result<_>>()
        .ok()?;
    if vertices
        .iter()
        .chain(&edges)
        .any(|k| k.total_count() > params.max_piece_simplices)
    {
        return None;
    }
    ConstructibleRSpace::new(values, vertices, edges, lefts, rights).ok()
}
