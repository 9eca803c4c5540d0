use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use mixprod::mixed::BlockKind;
use mixprod::report::{classify_raw, ClassifyOptions, OracleLevel};
use mixprod::sweep::{run_sweep, SweepConfig};
use mixprod::{parse_pairs, Caps, Error, MixedProductSpec, VariableUniverse};

const EXIT_INVALID: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

#[derive(Parser)]
#[command(
    name = "mixprod",
    version,
    about = "Classify and verify mixed product ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Clone)]
struct Global {
    /// Number of x-variables.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Number of y-variables.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Summands as comma-separated q:r pairs, e.g. 1:2,2:1.
    #[arg(long, global = true)]
    pairs: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Oracle level: none, fast or full (bare flag means full).
    #[arg(long, global = true, num_args = 0..=1, default_missing_value = "full")]
    oracle: Option<OracleLevel>,
    /// Largest n+m for explicit enumeration and homology.
    #[arg(long, global = true)]
    cap_vertices: Option<usize>,
    /// Largest facet count for the shelling search.
    #[arg(long, global = true)]
    cap_facets: Option<usize>,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Use a deliberately broken CM closed form (harness self-test).
    #[arg(long, global = true, hide = true)]
    perturb: bool,
    /// Include timings in the output.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Profile and unmixed / CM / sequentially CM verdicts.
    Classify,
    /// The Alexander dual as a mixed product.
    Dual {
        /// Also list the dual's minimal generators.
        #[arg(long)]
        expand: bool,
    },
    /// Minimal primes grouped into P_x, P_xy and P_y.
    Decompose,
    /// The facet partition of the Stanley-Reisner complex.
    Facets,
    /// Full oracle run for one spec; exits 2 on any mismatch.
    Oracle,
    /// Check every spec within the bounds.
    Sweep {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_s: usize,
        /// Write one JSON line per spec to this file.
        #[arg(long)]
        report: Option<std::path::PathBuf>,
    },
}

impl Global {
    fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        if let Some(v) = self.cap_vertices {
            caps.vertices = v;
            caps.homology_vertices = v;
        }
        if let Some(f) = self.cap_facets {
            caps.shelling_facets = f;
        }
        caps
    }

    fn spec_input(&self) -> Result<(VariableUniverse, Vec<mixprod::Summand>), Error> {
        let missing = |f: &str| Error::InvalidInput(format!("--{f} is required"));
        let n = self.n.ok_or_else(|| missing("n"))?;
        let m = self.m.ok_or_else(|| missing("m"))?;
        let pairs = self.pairs.as_deref().ok_or_else(|| missing("pairs"))?;
        Ok((VariableUniverse::new(n, m)?, parse_pairs(pairs)?))
    }

    fn spec(&self) -> Result<MixedProductSpec, Error> {
        let (u, pairs) = self.spec_input()?;
        let (spec, warnings) = MixedProductSpec::normalize(u, &pairs)?;
        for w in warnings {
            eprintln!("warning: {w}");
        }
        Ok(spec)
    }

    fn options(&self, default_oracle: OracleLevel) -> ClassifyOptions {
        ClassifyOptions {
            oracle: self.oracle.unwrap_or(default_oracle),
            caps: self.caps(),
            perturb: self.perturb,
            timing: self.timing,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let g = &cli.global;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |e: io::Error| Error::InvalidInput(format!("output failed: {e}"));
    match &cli.command {
        Command::Classify | Command::Oracle => {
            let default = if matches!(cli.command, Command::Oracle) {
                OracleLevel::Full
            } else {
                OracleLevel::None
            };
            let (u, pairs) = g.spec_input()?;
            let report = classify_raw(u, &pairs, &g.options(default))?;
            if g.json {
                writeln!(out, "{}", report.to_json()).map_err(io_err)?;
            } else {
                write!(out, "{}", report.to_text()).map_err(io_err)?;
            }
            if report.mismatches().is_empty() {
                Ok(0)
            } else {
                Ok(EXIT_MISMATCH)
            }
        }
        Command::Dual { expand } => {
            let spec = g.spec()?;
            let dual = spec.closed_form_dual();
            let generators = if *expand {
                let ideal = dual.expand_generators(&g.caps())?;
                Some(
                    ideal
                        .supports()
                        .map(|s| dual.universe().format_monomial(s))
                        .collect::<Vec<_>>(),
                )
            } else {
                None
            };
            if g.json {
                let pairs: Vec<[usize; 2]> = dual.summands().iter().map(|s| [s.q, s.r]).collect();
                let v =
                    json!({"n": dual.n(), "m": dual.m(), "pairs": pairs, "generators": generators});
                writeln!(out, "{v}").map_err(io_err)?;
            } else {
                writeln!(out, "dual: {dual}").map_err(io_err)?;
                writeln!(out, "pairs: {}", dual.pairs_string()).map_err(io_err)?;
                if let Some(gens) = generators {
                    writeln!(out, "generators: {}", gens.join(", ")).map_err(io_err)?;
                }
            }
            Ok(0)
        }
        Command::Decompose => {
            let spec = g.spec()?;
            let u = spec.universe();
            let d = spec.closed_form_primary_decomposition(&g.caps())?;
            let label = |k: BlockKind| match k {
                BlockKind::X => "P_x".to_string(),
                BlockKind::Xy(i) => format!("P_xy[{i}]"),
                BlockKind::Y => "P_y".to_string(),
            };
            if g.json {
                let groups: Vec<_> = d
                    .groups
                    .iter()
                    .map(|grp| {
                        json!({
                            "block": label(grp.kind),
                            "size": grp.size,
                            "components": grp.components.iter().map(|p| u.names(p.variables())).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                let v =
                    json!({"height": d.height, "count": d.components().len(), "groups": groups});
                writeln!(out, "{v}").map_err(io_err)?;
            } else {
                for grp in &d.groups {
                    let comps: Vec<String> = grp
                        .components
                        .iter()
                        .map(|p| u.format_set(p.variables()))
                        .collect();
                    writeln!(
                        out,
                        "{} (size {}, {} components): {}",
                        label(grp.kind),
                        grp.size,
                        comps.len(),
                        comps.join("; ")
                    )
                    .map_err(io_err)?;
                }
                writeln!(out, "components: {}", d.components().len()).map_err(io_err)?;
                writeln!(out, "h={}", d.height).map_err(io_err)?;
            }
            Ok(0)
        }
        Command::Facets => {
            let spec = g.spec()?;
            let u = spec.universe();
            let blocks = spec.facet_partition(&g.caps())?;
            if g.json {
                let v: Vec<_> = blocks
                    .iter()
                    .map(|b| {
                        json!({
                            "q": b.q,
                            "r": b.r,
                            "facets": b.facets.iter().map(|f| u.names(*f)).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                writeln!(out, "{}", json!({ "blocks": v })).map_err(io_err)?;
            } else {
                for (k, b) in blocks.iter().enumerate() {
                    let facets: Vec<String> = b.facets.iter().map(|f| u.format_set(*f)).collect();
                    writeln!(
                        out,
                        "block {} (q={}, r={}, {} facets): {}",
                        k + 1,
                        b.q,
                        b.r,
                        facets.len(),
                        facets.join(" ")
                    )
                    .map_err(io_err)?;
                }
            }
            Ok(0)
        }
        Command::Sweep {
            max_n,
            max_m,
            max_s,
            report,
        } => {
            let config = SweepConfig {
                max_n: *max_n,
                max_m: *max_m,
                max_s: *max_s,
                oracle: g.oracle.unwrap_or(OracleLevel::Full),
                workers: g.workers,
                caps: g.caps(),
                perturb: g.perturb,
            };
            let result = run_sweep(&config)?;
            if let Some(path) = report {
                let file = File::create(path)
                    .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                let mut w = BufWriter::new(file);
                result.write_json_lines(&mut w).map_err(io_err)?;
                w.flush().map_err(io_err)?;
            }
            if g.json {
                writeln!(out, "{}", result.summary_json()).map_err(io_err)?;
            } else {
                writeln!(out, "specs checked: {}", result.configs_checked).map_err(io_err)?;
                writeln!(out, "skipped: {}", result.skipped).map_err(io_err)?;
                writeln!(out, "mismatches: {}", result.mismatches.len()).map_err(io_err)?;
                for (spec, m) in result.mismatches.iter().take(20) {
                    writeln!(
                        out,
                        "  n={} m={} pairs={}: {} closed form {} vs oracle {}{}",
                        spec.n(),
                        spec.m(),
                        spec.pairs_string(),
                        m.field,
                        m.closed_form,
                        m.oracle,
                        m.witness
                            .as_deref()
                            .map(|w| format!(" ({w})"))
                            .unwrap_or_default()
                    )
                    .map_err(io_err)?;
                }
                writeln!(out, "elapsed: {:.3} s", result.elapsed.as_secs_f64()).map_err(io_err)?;
            }
            Ok(if result.is_clean() { 0 } else { EXIT_MISMATCH })
        }
    }
}
