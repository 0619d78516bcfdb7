//! Command-line frontend: reads a space description, computes diagrams,
//! measures and distances, and writes text or SVG output.

pub mod document;
pub mod input;
pub mod plot;

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use parahom::bottleneck::{bottleneck_distance, stability_report, StabilityRecord};
use parahom::checks::{default_max_dim, CaseCounts, CheckOutcome, Suite};
use parahom::cohomology::cohomology_diagrams_from_chains;
use parahom::diagrams::FourDiagrams;
use parahom::extended::extended_from_parametrized;
use parahom::levelset::parametrized_homology_from_chains;
use parahom::measures::{Behavior, MeasureEngine, MeasureValues, Rectangle};
use parahom::rspace::SpaceChains;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::document::{format_real, parse_real, DiagramDocument};
use crate::input::{read_input, Input};

/// Exit status for a failed property check; usage and parse errors exit with 2.
pub const PROPERTY_FAILURE: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "parahom", version, about = "Parametrized homology of constructible R-spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the four decorated diagrams of every dimension.
    Diagram {
        input: PathBuf,
        /// Only this homology dimension.
        #[arg(long)]
        dim: Option<usize>,
        /// Compute from the dual (cohomology) zigzag.
        #[arg(long)]
        cohomology: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate one rectangle measure, cross-checked against the diagram.
    Measure {
        input: PathBuf,
        /// Type code: oo, co, oc or cc.
        #[arg(long = "type")]
        code: String,
        #[arg(long, default_value_t = 0)]
        dim: usize,
        /// Corners a < b < c < d; `-inf` and `inf` are allowed.
        #[arg(long, num_args = 4, value_names = ["A", "B", "C", "D"], allow_hyphen_values = true, required = true)]
        rect: Vec<String>,
    },
    /// Bottleneck distance between one (dim, type) of two diagram files.
    Bottleneck {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = 0)]
        dim: usize,
        #[arg(long = "type")]
        code: String,
    },
    /// Check d_b <= ||f - g|| for perturbed critical values.
    Stability {
        input: PathBuf,
        /// Replacement critical values.
        #[arg(long, num_args = 1.., allow_hyphen_values = true, conflicts_with = "random")]
        values: Option<Vec<f64>>,
        /// Number of random order-preserving perturbations.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the Ord, Rel, Ext+ and Ext- diagrams.
    Extended {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suites on an input.
    Validate {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random rectangles per suite.
        #[arg(long, default_value_t = 200)]
        cases: usize,
        /// Add one to every measure before the additivity check (negative control).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Render a diagram file as SVG.
    Plot {
        diagram: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn behavior(code: &str) -> Result<Behavior> {
    Behavior::from_code(code).ok_or_else(|| anyhow!("unknown type code {code:?}; expected oo, co, oc or cc"))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn max_dim(input: &Input) -> usize {
    input.max_dim.unwrap_or_else(|| default_max_dim(&input.space))
}

fn diagrams(input: &Input, dims: &[usize], cohomology: bool) -> Result<Vec<FourDiagrams>> {
    let chains = SpaceChains::new(&input.space, input.field)?;
    dims.iter()
        .map(|&k| {
            if cohomology {
                Ok(cohomology_diagrams_from_chains(&chains, k)?)
            } else {
                Ok(parametrized_homology_from_chains(&chains, k)?)
            }
        })
        .collect()
}

/// Runs one command, returning the process exit status.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Diagram {
            input,
            dim,
            cohomology,
            out,
        } => {
            let input = read_input(&input)?;
            let dims: Vec<usize> = match dim {
                Some(k) => vec![k],
                None => (0..=max_dim(&input)).collect(),
            };
            let doc = DiagramDocument::from_diagrams(&diagrams(&input, &dims, cohomology)?);
            emit(&doc.serialize(), out.as_deref())?;
            Ok(0)
        }
        Command::Measure { input, code, dim, rect } => {
            let t = behavior(&code)?;
            let v = rect.iter().map(|s| parse_real(s)).collect::<Result<Vec<f64>>>()?;
            let r = Rectangle::new(v[0], v[1], v[2], v[3])?;
            let input = read_input(&input)?;
            let direct = MeasureEngine::new(&input.space, input.field)?.measure(dim, t, &r)?;
            let via = diagrams(&input, &[dim], false)?[0].get(t).count_in(&r);
            println!("{direct}");
            if direct == via {
                println!("# diagram count {via} (agrees)");
                Ok(0)
            } else {
                println!("# diagram count {via} (DISAGREES)");
                Ok(PROPERTY_FAILURE)
            }
        }
        Command::Bottleneck {
            first,
            second,
            dim,
            code,
        } => {
            let t = behavior(&code)?;
            let read = |p: &Path| -> Result<DiagramDocument> {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                DiagramDocument::parse(&text).with_context(|| format!("parsing {}", p.display()))
            };
            let (a, b) = (read(&first)?, read(&second)?);
            let d = bottleneck_distance(&a.undecorated(dim, t), &b.undecorated(dim, t));
            if d.is_finite() {
                println!("{d:.9}");
            } else {
                println!("inf");
            }
            Ok(0)
        }
        Command::Stability {
            input,
            values,
            random,
            seed,
        } => {
            let input = read_input(&input)?;
            let top = max_dim(&input);
            let x = &input.space;
            let print = |records: &[StabilityRecord]| {
                for r in records {
                    println!(
                        "{} {} {:.9} {:.9} {}",
                        r.dim,
                        r.behavior.code(),
                        r.distance,
                        r.delta,
                        if r.pass { "PASS" } else { "FAIL" }
                    );
                }
            };
            println!("# dim type bottleneck delta verdict");
            let mut ok = true;
            match (values, random) {
                (Some(v), _) => {
                    let y = x.with_values(v)?;
                    let records = stability_report(x, &y, top, input.field)?;
                    ok &= records.iter().all(|r| r.pass);
                    print(&records);
                }
                (None, Some(trials)) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let d0 = x.min_gap().map_or(1.0, |g| 0.49 * g);
                    for i in 0..trials {
                        let v = x.critical_values().iter().map(|c| c + rng.gen_range(-d0..d0)).collect();
                        let y = x.with_values(v)?;
                        let records = stability_report(x, &y, top, input.field)?;
                        let failed: Vec<StabilityRecord> = records.iter().filter(|r| !r.pass).cloned().collect();
                        println!("# trial {i}: {} failures", failed.len());
                        ok &= failed.is_empty();
                        print(&failed);
                    }
                }
                (None, None) => bail!("give --values or --random"),
            }
            Ok(if ok { 0 } else { PROPERTY_FAILURE })
        }
        Command::Extended { input, out } => {
            let input = read_input(&input)?;
            let dims: Vec<usize> = (0..=max_dim(&input)).collect();
            let ext = extended_from_parametrized(&diagrams(&input, &dims, false)?);
            let mut text = String::from("# dim kind birth death multiplicity\n");
            for e in &ext {
                for (pt, m) in e.points.iter() {
                    text.push_str(&format!(
                        "{} {} {} {} {m}\n",
                        e.dim,
                        e.kind,
                        format_real(pt.p()),
                        format_real(pt.q())
                    ));
                }
            }
            emit(&text, out.as_deref())?;
            Ok(0)
        }
        Command::Validate {
            input,
            seed,
            cases,
            inject_fault,
        } => {
            let input = read_input(&input)?;
            let suite = Suite::new(&input.space, input.field, input.max_dim)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let counts = CaseCounts {
                rectangles: cases,
                splits: cases,
                bound: cases.div_ceil(2),
                correspondence: cases.div_ceil(2),
                restriction: cases.div_ceil(10),
            };
            let mut outcomes: Vec<CheckOutcome> = suite.run_all(&mut rng, counts)?;
            if inject_fault {
                let engine = suite.engine();
                let top = suite.max_dim();
                let corrupted = suite.additivity_with(&mut rng, counts.splits, |r| {
                    let values = engine.measures_upto(top, r)?;
                    Ok(values.into_iter().map(|v| v.map(|m| m + 1)).collect::<Vec<MeasureValues>>())
                })?;
                outcomes.retain(|o| o.name != "additivity");
                outcomes.insert(0, corrupted);
            }
            for o in &outcomes {
                println!("{o}");
            }
            Ok(if outcomes.iter().all(CheckOutcome::passed) { 0 } else { PROPERTY_FAILURE })
        }
        Command::Plot { diagram, out } => {
            let text = std::fs::read_to_string(&diagram).with_context(|| format!("reading {}", diagram.display()))?;
            let doc = DiagramDocument::parse(&text).with_context(|| format!("parsing {}", diagram.display()))?;
            std::fs::write(&out, plot::render(&doc)).with_context(|| format!("writing {}", out.display()))?;
            Ok(0)
        }
    }
}

