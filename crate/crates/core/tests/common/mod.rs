//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use parahom::corpus::{named, random_space, RandomSpaceParams};
use parahom::linalg::{Matrix, PrimeField};
use parahom::rspace::ConstructibleRSpace;
use parahom::zigzag::{Arrow, Direction, IntervalMultiset, ZigzagModule};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type ChaRng = ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rank over `F_p` by plain Gaussian elimination on `u64` rows.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|v| v % p).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for v in &mut m[rank] {
            *v = *v * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `dim Hom(I[a, b], V)`: tuples `v_i ∈ V_i` on `[a, b]` commuting with the
/// arrows inside, and killed by arrows leaving the interval.
pub fn hom_from_interval(v: &ZigzagModule, a: usize, b: usize) -> usize {
    let p = v.field().characteristic() as u64;
    let dims = v.dims();
    let offset: Vec<usize> = (a..=b)
        .scan(0, |acc, i| {
            let o = *acc;
            *acc += dims[i];
            Some(o)
        })
        .collect();
    let unknowns: usize = (a..=b).map(|i| dims[i]).sum();
    let at = |i: usize| offset[i - a];
    let mut rows: Vec<Vec<u64>> = Vec::new();
    // rows of `A x_src - x_tgt` (or `A x_src` when the target is outside)
    let mut push = |m: &Matrix, src: usize, tgt: Option<usize>| {
        for r in 0..m.rows() {
            let mut row = vec![0u64; unknowns];
            for c in 0..m.cols() {
                row[at(src) + c] = m.get(r, c) as u64;
            }
            if let Some(t) = tgt {
                row[at(t) + r] = (row[at(t) + r] + p - 1) % p;
            }
            rows.push(row);
        }
    };
    for (i, arrow) in v.arrows().iter().enumerate() {
        let (src, tgt) = match arrow.direction {
            Direction::Forward => (i, i + 1),
            Direction::Backward => (i + 1, i),
        };
        let src_in = (a..=b).contains(&src);
        let tgt_in = (a..=b).contains(&tgt);
        match (src_in, tgt_in) {
            (true, true) => push(&arrow.matrix, src, Some(tgt)),
            (true, false) => push(&arrow.matrix, src, None),
            _ => {}
        }
    }
    if rows.is_empty() {
        return unknowns;
    }
    unknowns - rank_mod_p(&rows, p)
}

fn hom_vector_of(intervals: &[(usize, usize)], directions: &[Direction], field: PrimeField) -> Vec<Vec<usize>> {
    // hom[x][y] = dim Hom(I_x, I_y)
    intervals
        .iter()
        .map(|&x| {
            intervals
                .iter()
                .map(|&(c, d)| {
                    let iy = ZigzagModule::interval(field, directions, c, d).unwrap();
                    hom_from_interval(&iy, x.0, x.1)
                })
                .collect()
        })
        .collect()
}

/// Brute-force decomposition: among all interval multisets with the right
/// dimension vector, the unique one whose Hom-dimensions from every interval
/// match those of `v`.
pub fn brute_force_decomposition(v: &ZigzagModule) -> IntervalMultiset {
    let n = v.len();
    let dirs = v.directions();
    let intervals: Vec<(usize, usize)> = (0..n).flat_map(|p| (p..n).map(move |q| (p, q))).collect();
    let target: Vec<usize> = intervals.iter().map(|&(a, b)| hom_from_interval(v, a, b)).collect();
    let hom = hom_vector_of(&intervals, &dirs, v.field());

    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut counts = vec![0usize; intervals.len()];
    let mut remaining = v.dims().to_vec();
    enumerate(&intervals, &mut remaining, &mut counts, 0, &mut |c| {
        let homs: Vec<usize> = (0..intervals.len())
            .map(|x| (0..intervals.len()).map(|y| c[y] * hom[x][y]).sum())
            .collect();
        if homs == target {
            found.push(c.to_vec());
        }
    });
    assert_eq!(found.len(), 1, "Hom-dimensions must single out one decomposition");
    let mut out = IntervalMultiset::new(n);
    for (i, &(p, q)) in intervals.iter().enumerate() {
        out.insert(p, q, found[0][i]);
    }
    out
}

/// Every multiset of intervals with the given dimension vector; intervals are
/// chosen in non-decreasing index order to avoid repeats.
fn enumerate(
    intervals: &[(usize, usize)],
    remaining: &mut [usize],
    counts: &mut [usize],
    from: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    let Some(first) = remaining.iter().position(|&d| d > 0) else {
        visit(counts);
        return;
    };
    for (idx, &(p, q)) in intervals.iter().enumerate().skip(from) {
        if p != first {
            continue;
        }
        if remaining[p..=q].contains(&0) {
            continue;
        }
        for d in &mut remaining[p..=q] {
            *d -= 1;
        }
        counts[idx] += 1;
        enumerate(intervals, remaining, counts, idx, visit);
        counts[idx] -= 1;
        for d in &mut remaining[p..=q] {
            *d += 1;
        }
    }
}

pub fn random_directions<R: Rng>(rng: &mut R, len: usize) -> Vec<Direction> {
    (0..len.saturating_sub(1))
        .map(|_| if rng.gen_bool(0.5) { Direction::Forward } else { Direction::Backward })
        .collect()
}

pub fn random_field<R: Rng>(rng: &mut R) -> PrimeField {
    PrimeField::new([2, 3, 5][rng.gen_range(0..3)]).unwrap()
}

/// Random matrix, low rank half the time.
pub fn random_matrix<R: Rng>(rng: &mut R, field: PrimeField, rows: usize, cols: usize) -> Matrix {
    let p = field.characteristic();
    let dense = |rng: &mut R, r: usize, c: usize| {
        let mut m = Matrix::zeros(field, r, c);
        for i in 0..r {
            for j in 0..c {
                m.set(i, j, rng.gen_range(0..p));
            }
        }
        m
    };
    if rng.gen_bool(0.5) && rows > 0 && cols > 0 {
        let k = rng.gen_range(0..=rows.min(cols));
        dense(rng, rows, k).mul(&dense(rng, k, cols)).unwrap()
    } else {
        dense(rng, rows, cols)
    }
}

/// A zigzag module with random directions, dimensions `0..=max_dim` and matrices.
pub fn random_module<R: Rng>(rng: &mut R, len: usize, max_dim: usize) -> ZigzagModule {
    let field = random_field(rng);
    let dirs = random_directions(rng, len);
    let dims: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=max_dim)).collect();
    let arrows = dirs
        .iter()
        .enumerate()
        .map(|(i, &d)| match d {
            Direction::Forward => Arrow::forward(random_matrix(rng, field, dims[i + 1], dims[i])),
            Direction::Backward => Arrow::backward(random_matrix(rng, field, dims[i], dims[i + 1])),
        })
        .collect();
    ZigzagModule::new(field, dims, arrows).unwrap()
}

fn random_invertible<R: Rng>(rng: &mut R, field: PrimeField, n: usize) -> (Matrix, Matrix) {
    loop {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, rng.gen_range(0..field.characteristic()));
            }
        }
        if let Some(inv) = m.solve_columns(&Matrix::identity(field, n)) {
            return (m, inv);
        }
    }
}

/// A direct sum of random intervals in random bases, with its known decomposition.
pub fn random_interval_sum<R: Rng>(rng: &mut R, len: usize, max_dim: usize) -> (ZigzagModule, IntervalMultiset) {
    let field = random_field(rng);
    let dirs = random_directions(rng, len);
    let mut bars = IntervalMultiset::new(len);
    let mut dims = vec![0usize; len];
    let mut module: Option<ZigzagModule> = None;
    for _ in 0..rng.gen_range(0..=2 * len) {
        let p = rng.gen_range(0..len);
        let q = rng.gen_range(p..len);
        if dims[p..=q].iter().any(|&d| d >= max_dim) {
            continue;
        }
        for d in &mut dims[p..=q] {
            *d += 1;
        }
        bars.insert(p, q, 1);
        let i = ZigzagModule::interval(field, &dirs, p, q).unwrap();
        module = Some(match module {
            None => i,
            Some(m) => m.direct_sum(&i).unwrap(),
        });
    }
    let module = module.unwrap_or_else(|| ZigzagModule::interval(field, &dirs, 0, 0).unwrap());
    if bars.is_empty() {
        bars.insert(0, 0, 1);
    }
    let bases: Vec<(Matrix, Matrix)> = module
        .dims()
        .iter()
        .map(|&d| random_invertible(rng, field, d))
        .collect();
    let arrows = module
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let (src, tgt) = match a.direction {
                Direction::Forward => (i, i + 1),
                Direction::Backward => (i + 1, i),
            };
            let m = bases[tgt].0.mul(&a.matrix).unwrap().mul(&bases[src].1).unwrap();
            Arrow { direction: a.direction, matrix: m }
        })
        .collect();
    (ZigzagModule::new(field, module.dims().to_vec(), arrows).unwrap(), bars)
}

/// Exhaustive bottleneck cost over all partial matchings (small inputs only).
pub fn brute_force_bottleneck(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    fn gap(x: f64, y: f64) -> f64 {
        if x == y { 0.0 } else { (x - y).abs() }
    }
    fn dist(x: (f64, f64), y: (f64, f64)) -> f64 {
        gap(x.0, y.0).max(gap(x.1, y.1))
    }
    fn diag(x: (f64, f64)) -> f64 {
        if x.0.is_finite() && x.1.is_finite() { (x.1 - x.0) / 2.0 } else { f64::INFINITY }
    }
    fn go(i: usize, a: &[(f64, f64)], b: &[(f64, f64)], used: &mut Vec<bool>, cost: f64) -> f64 {
        if i == a.len() {
            let rest = b
                .iter()
                .zip(used.iter())
                .filter(|(_, &u)| !u)
                .map(|(&y, _)| diag(y))
                .fold(0.0, f64::max);
            return cost.max(rest);
        }
        let mut best = go(i + 1, a, b, used, cost.max(diag(a[i])));
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                best = best.min(go(i + 1, a, b, used, cost.max(dist(a[i], b[j]))));
                used[j] = false;
            }
        }
        best
    }
    go(0, a, b, &mut vec![false; b.len()], 0.0)
}

/// Random spaces with at most 6 critical values and pieces of at most 50 simplices.
pub fn corpus_params() -> RandomSpaceParams {
    RandomSpaceParams {
        critical_values: 2..=6,
        vertices: 3..=7,
        ..RandomSpaceParams::default()
    }
}

/// The named spaces plus seeded random ones.
pub fn corpus(random: usize) -> Vec<(String, ConstructibleRSpace)> {
    let mut out: Vec<(String, ConstructibleRSpace)> =
        named().into_iter().map(|(n, x)| (n.to_string(), x)).collect();
    let params = corpus_params();
    let mut r = rng(2024);
    for i in 0..random {
        out.push((format!("random-{i}"), random_space(&mut r, &params)));
    }
    out
}
