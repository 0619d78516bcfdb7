//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

mod common;

use std::time::{Duration, Instant};

use parahom::bottleneck::{bottleneck_distance, stability_report, UndecoratedDiagram};
use parahom::checks::{default_max_dim, restrict_bars, CheckOutcome, Suite};
use parahom::corpus::{circle, figure_four, random_space, sphere, two_component, RandomSpaceParams};
use parahom::diagrams::FourDiagrams;
use parahom::extended::{extended_from_parametrized, ExtendedKind};
use parahom::levelset::parametrized_homology_upto;
use parahom::linalg::PrimeField;
use parahom::measures::{Behavior, MeasureEngine, Rectangle};
use parahom::rspace::ConstructibleRSpace;
use parahom::zigzag::{coarsen, decompose};
use rand::Rng;

const F: PrimeField = PrimeField::GF2;
const RANDOM_SPACES: usize = 10;

struct Line {
    failures: Vec<String>,
    cases: usize,
}

impl Line {
    fn new() -> Self {
        Self { failures: Vec::new(), cases: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, space: &str, o: CheckOutcome) {
        self.cases += o.cases;
        if let Some(f) = o.failure {
            self.failures.push(format!("{space}: {f}"));
        }
    }
}

fn report(n: usize, name: &str, line: Line, elapsed: Duration) -> bool {
    let ok = line.failures.is_empty();
    println!(
        "{} {n:>2} {name} ({} cases, {:.2} s)",
        if ok { "PASS" } else { "FAIL" },
        line.cases,
        elapsed.as_secs_f64()
    );
    for f in line.failures.iter().take(5) {
        println!("       {f}");
    }
    ok
}

/// Only the listed points, each once, and nothing else in dims `0..=2`.
fn exactly(diagrams: &[FourDiagrams], expected: &[(usize, Behavior, f64, f64)]) -> Result<(), String> {
    for d in diagrams {
        for t in Behavior::ALL {
            let want: Vec<_> = expected.iter().filter(|e| e.0 == d.dim() && e.1 == t).collect();
            let got = d.get(t);
            if got.total() != want.len() || want.iter().any(|e| got.multiplicity(e.2, e.3) != 1) {
                return Err(format!("H{} {}: {got}", d.dim(), t.code()));
            }
        }
    }
    Ok(())
}

type Golden = (&'static str, ConstructibleRSpace, Vec<(usize, Behavior, f64, f64)>);

fn golden() -> Line {
    use Behavior::*;
    let mut line = Line::new();
    let cases: [Golden; 3] = [
        ("circle", circle(), vec![(0, DownUp, 0.0, 1.0), (0, UpDown, 0.0, 1.0)]),
        ("sphere", sphere(), vec![(0, DownUp, 0.0, 1.0), (1, UpDown, 0.0, 1.0)]),
        ("two-component", two_component(), vec![(0, DownUp, 0.0, 3.0), (0, DownUp, 1.0, 2.0)]),
    ];
    for (name, x, expected) in cases {
        let start = Instant::now();
        let result = parametrized_homology_upto(&x, 2, F).map_err(|e| e.to_string());
        let elapsed = start.elapsed();
        let verdict = result.and_then(|d| exactly(&d, &expected));
        line.check(verdict.is_ok(), || format!("{name}: {}", verdict.clone().unwrap_err()));
        line.check(elapsed < Duration::from_secs(1), || format!("{name}: took {elapsed:?}"));
    }
    line
}

fn figure() -> Line {
    let mut line = Line::new();
    let r = Rectangle::new(1.0, 2.5, 2.7, 4.0).unwrap();
    for own in Behavior::ALL {
        let engine = MeasureEngine::new(&figure_four(own), F).unwrap();
        let values = engine.measures(0, &r).unwrap();
        for t in Behavior::ALL {
            let want = usize::from(t == own);
            line.check(values[t.index()] == want, || {
                format!("panel {}: μ^{} = {} (want {want})", own.code(), t.code(), values[t.index()])
            });
        }
    }
    line
}

fn suites(corpus: &[(String, Suite)], mut run: impl FnMut(&Suite, &mut common::ChaRng) -> CheckOutcome) -> Line {
    let mut line = Line::new();
    let mut rng = common::rng(11);
    for (name, s) in corpus {
        line.absorb(name, run(s, &mut rng));
    }
    line
}

fn restriction_modules() -> Line {
    let mut line = Line::new();
    let mut rng = common::rng(5);
    for n in 0..100 {
        let len = rng.gen_range(3..=8);
        let module = if n % 2 == 0 {
            common::random_module(&mut rng, len, 5)
        } else {
            common::random_interval_sum(&mut rng, len, 5).0
        };
        let bars = decompose(&module).unwrap();
        let dirs = module.directions();
        for k in 1..len - 1 {
            if dirs[k - 1] != dirs[k] {
                continue;
            }
            let coarse = decompose(&coarsen(&module, k).unwrap()).unwrap();
            line.check(coarse == restrict_bars(&bars, k), || format!("module {n}, node {k}"));
        }
    }
    line
}

fn decomposition_oracle() -> Line {
    let mut line = Line::new();
    let mut rng = common::rng(6);
    for n in 0..100 {
        let len = rng.gen_range(1..=6);
        if n % 2 == 0 {
            let module = common::random_module(&mut rng, len, 3);
            let oracle = common::brute_force_decomposition(&module);
            line.check(decompose(&module).unwrap() == oracle, || format!("random module {n}"));
        } else {
            let (module, known) = common::random_interval_sum(&mut rng, len, 3);
            let got = decompose(&module).unwrap();
            line.check(got == known && got == common::brute_force_decomposition(&module), || {
                format!("interval sum {n}")
            });
        }
    }
    line
}

fn extended_circle() -> Line {
    let mut line = Line::new();
    let e = extended_from_parametrized(&parametrized_homology_upto(&circle(), 1, F).unwrap());
    for x in &e {
        let want = match (x.dim, x.kind) {
            (0, ExtendedKind::ExtPlus) | (1, ExtendedKind::ExtMinus) => 1,
            _ => 0,
        };
        let ok = x.points.total() == want && (want == 0 || x.points.multiplicity(0.0, 1.0) == 1);
        line.check(ok, || format!("circle {}_{}: {}", x.kind, x.dim, x.points));
    }
    line
}

fn stability(corpus: &[(String, ConstructibleRSpace)]) -> Line {
    let mut line = Line::new();
    let mut rng = common::rng(10);
    for (name, x) in corpus {
        let max_dim = default_max_dim(x);
        let delta0 = x.min_gap().map_or(1.0, |g| 0.49 * g);
        for _ in 0..50 {
            let values: Vec<f64> = x
                .critical_values()
                .iter()
                .map(|v| v + rng.gen_range(-delta0..delta0))
                .collect();
            let y = x.with_values(values).unwrap();
            for r in stability_report(x, &y, max_dim, F).unwrap() {
                line.check(r.pass, || {
                    format!("{name} H{} {}: d_b = {} > δ = {}", r.dim, r.behavior.code(), r.distance, r.delta)
                });
            }
        }
    }
    // bottleneck against exhaustive matching on small diagrams
    let coord = |rng: &mut common::ChaRng, lo: bool| match rng.gen_range(0..10) {
        0 if lo => f64::NEG_INFINITY,
        0 => f64::INFINITY,
        _ => f64::from(rng.gen_range(0..12)) / 2.0,
    };
    for n in 0..300 {
        let sample = |rng: &mut common::ChaRng, count: usize| -> Vec<(f64, f64)> {
            (0..count)
                .map(|_| {
                    let (p, q) = (coord(rng, true), coord(rng, false));
                    if p <= q { (p, q) } else { (q, p) }
                })
                .collect()
        };
        let na = rng.gen_range(0..=3);
        let nb = rng.gen_range(0..=(6 - na).min(3));
        let a = sample(&mut rng, na);
        let b = sample(&mut rng, nb);
        let fast = bottleneck_distance(
            &UndecoratedDiagram::from_points(a.iter().copied()),
            &UndecoratedDiagram::from_points(b.iter().copied()),
        );
        let slow = common::brute_force_bottleneck(&a, &b);
        line.check(fast == slow, || format!("pair {n}: {a:?} vs {b:?}: {fast} vs {slow}"));
    }
    line
}

fn performance_space() -> ConstructibleRSpace {
    let params = RandomSpaceParams {
        critical_values: 20..=20,
        vertices: 10..=12,
        edge_probability: 0.4,
        triangle_probability: 0.4,
        hollow_tetrahedron_probability: 0.5,
        max_piece_simplices: 200,
    };
    let mut rng = common::rng(12);
    loop {
        let x = random_space(&mut rng, &params);
        if x.size() >= 2000 {
            return x;
        }
    }
}

fn performance() -> Line {
    let mut line = Line::new();
    let x = performance_space();
    let start = Instant::now();
    let d = parametrized_homology_upto(&x, 2, F);
    let elapsed = start.elapsed();
    line.check(d.is_ok(), || format!("{:?}", d.as_ref().err()));
    line.check(elapsed < Duration::from_secs(10), || {
        format!("{} simplices, {} critical values: {elapsed:?}", x.size(), x.critical_count())
    });
    println!(
        "       performance space: {} simplices, {} critical values, {:.2} s",
        x.size(),
        x.critical_count(),
        elapsed.as_secs_f64()
    );
    line
}

fn main() {
    let spaces = common::corpus(RANDOM_SPACES);
    let suites_by_space: Vec<(String, Suite)> = spaces
        .iter()
        .map(|(n, x)| (n.clone(), Suite::new(x, F, None).expect("suite")))
        .collect();
    let mut ok = true;
    let mut run = |n: usize, name: &str, f: &mut dyn FnMut() -> Line| {
        let start = Instant::now();
        let line = f();
        ok &= report(n, name, line, start.elapsed());
    };

    run(1, "golden spaces", &mut golden);
    run(2, "figure-4 panels", &mut figure);
    run(3, "measure/diagram equivalence", &mut || {
        let start = Instant::now();
        let mut line = suites(&suites_by_space, |s, r| s.equivalence(r, 200).unwrap());
        line.check(suites_by_space.len() >= 10, || "corpus too small".into());
        let elapsed = start.elapsed();
        line.check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"));
        line
    });
    run(4, "additivity", &mut || suites(&suites_by_space, |s, r| s.additivity(r, 200).unwrap()));
    run(5, "restriction principle", &mut restriction_modules);
    run(6, "decomposition oracle", &mut decomposition_oracle);
    run(7, "closed-bar bound", &mut || suites(&suites_by_space, |s, r| s.bound(r, 100).unwrap()));
    run(8, "cohomology duality", &mut || suites(&suites_by_space, |s, _| s.duality().unwrap()));
    run(9, "extended persistence correspondence", &mut || {
        let mut line = suites(&suites_by_space, |s, r| s.correspondence(r, 100).unwrap());
        let circle = extended_circle();
        line.cases += circle.cases;
        line.failures.extend(circle.failures);
        line
    });
    run(10, "stability", &mut || stability(&spaces));
    run(11, "decoration typing", &mut || suites(&suites_by_space, |s, _| s.typing()));
    run(12, "performance", &mut performance);

    if !ok {
        std::process::exit(1);
    }
}
