//! Command-line front end: parse graphs, run the detectors, partition,
//! colorers, exact solver, and perfection certifier, and emit one JSON
//! report per run.
//!
//! Exit codes: 0 on success, 1 when the graph fails a structural check
//! (forbidden pattern found, scheme refusal, refuted certificate, sampling
//! exhausted), 2 on parse or usage errors.

mod io;

use clap::{Args, Parser, Subcommand, ValueEnum};
use colorbound::colorers::{color_butterfly_free, color_diamond_free, color_gem_free};
use colorbound::coloring::verify_coloring;
use colorbound::detect::{self, MembershipReport, Pattern, PatternWitness};
use colorbound::evidence::Violation;
use colorbound::gen::{self, GenSpec};
use colorbound::perfection::{self, Conclusion, Inapplicability};
use colorbound::{clique, oracle, wagon};
use colorbound::{ColorClass, Coloring, Graph};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "colorbound",
    version,
    about = "Structural coloring of hereditary graph classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Screen the graph against forbidden induced patterns
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated patterns: p2, p3, p4, p2p4, diamond, gem,
        /// butterfly, k<t>, c<k>
        #[arg(long, required = true, value_delimiter = ',', value_parser = parse_pattern)]
        forbid: Vec<Pattern>,
    },
    /// Partition around a maximum clique and check the class's structural facts
    Partition {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Color with the class scheme and report the clique-based bound
    Color {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Screen class membership first and refuse out-of-class input
        #[arg(long)]
        strict: bool,
        /// Re-verify the coloring and compare against the exact solver
        #[arg(long)]
        verify: bool,
    },
    /// Exact chromatic number with a witness coloring
    Oracle {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Perfection certificate for graphs excluding P2+P4, the diamond, and
    /// the five-cycle, with clique number at least five
    CertifyPerfect {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Sample a random graph inside a class and write it to a file
    Gen {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        /// Edge density; defaults to a rate calibrated for the class sampler
        #[arg(long)]
        p: Option<f64>,
        /// Stream seed; sampling is deterministic given the seed
        #[arg(long)]
        seed: u64,
        /// Attempt budget before reporting exhaustion
        #[arg(long, default_value_t = gen::DEFAULT_TRIES)]
        tries: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Read the graph from a file
    #[arg(long, conflicts_with = "name", required_unless_present = "name")]
    input: Option<PathBuf>,
    /// Use a catalog graph: grotzsch, petersen, two-k5, co-c7, p2p4,
    /// diamond, gem, butterfly, k<t>, c<k>, pendant-<t>
    #[arg(long)]
    name: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Default, PartialEq, Eq)]
enum Format {
    #[default]
    Dimacs,
    Json,
}

#[derive(ValueEnum, Clone, Copy)]
enum ClassArg {
    Gem,
    Butterfly,
    Diamond,
}

impl From<ClassArg> for ColorClass {
    fn from(c: ClassArg) -> ColorClass {
        match c {
            ClassArg::Gem => ColorClass::GemFree,
            ClassArg::Butterfly => ColorClass::ButterflyFree,
            ClassArg::Diamond => ColorClass::DiamondFree,
        }
    }
}

fn parse_pattern(s: &str) -> Result<Pattern, String> {
    let fixed = match s {
        "p2" => Some(Pattern::P2),
        "p3" => Some(Pattern::P3),
        "p4" => Some(Pattern::P4),
        "p2p4" => Some(Pattern::P2P4),
        "diamond" => Some(Pattern::Diamond),
        "gem" => Some(Pattern::Gem),
        "butterfly" => Some(Pattern::Butterfly),
        _ => None,
    };
    if let Some(p) = fixed {
        return Ok(p);
    }
    if let Some(k) = s.strip_prefix('c') {
        if let Some(k) = k.parse().ok().filter(|&k| k >= 3) {
            return Ok(Pattern::Cycle(k));
        }
    }
    if let Some(t) = s.strip_prefix('k') {
        if let Some(t) = t.parse().ok().filter(|&t| t >= 1) {
            return Ok(Pattern::Clique(t));
        }
    }
    Err(format!(
        "unknown pattern `{s}` (try p2p4, diamond, gem, butterfly, c5, c7)"
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Dispatches one subcommand; prints the run report and returns the exit
/// code. `Err` is reserved for parse and usage problems (exit 2).
fn run(command: Command) -> Result<u8, String> {
    let (name, graph, result, code) = match command {
        Command::Check { input, forbid } => {
            let g = load(&input)?;
            let report = detect::screen(&g, &forbid);
            let code = u8::from(!report.is_member());
            ("check", g, membership_json(&report), code)
        }
        Command::Partition { input, class } => {
            let g = load(&input)?;
            let (value, code) = run_partition(&g, class.into());
            ("partition", g, value, code)
        }
        Command::Color {
            input,
            class,
            strict,
            verify,
        } => {
            let g = load(&input)?;
            let (value, code) = run_color(&g, class.into(), strict, verify);
            ("color", g, value, code)
        }
        Command::Oracle { input } => {
            let g = load(&input)?;
            let r = oracle::chromatic_number(&g).map_err(|e| e.to_string())?;
            let value = json!({ "chi": r.chi, "assignment": r.witness_coloring.assignment() });
            ("oracle", g, value, 0)
        }
        Command::CertifyPerfect { input } => {
            let g = load(&input)?;
            let (value, code) = run_certify(&g);
            ("certify-perfect", g, value, code)
        }
        Command::Gen {
            class,
            n,
            p,
            seed,
            tries,
            out,
            format,
        } => {
            let spec = GenSpec {
                n,
                density: p.unwrap_or_else(|| gen::default_density(n)),
                class: class.into(),
                seed,
                max_tries: tries.max(1),
            };
            match gen::random_in_class(spec) {
                Ok(g) => {
                    let text = match format {
                        Format::Dimacs => io::render_dimacs(&g),
                        Format::Json => io::render_json_graph(&g),
                    };
                    std::fs::write(&out, text)
                        .map_err(|e| format!("writing {}: {e}", out.display()))?;
                    let value = json!({
                        "path": out.display().to_string(),
                        "class": spec.class.to_string(),
                        "density": spec.density,
                        "seed": spec.seed,
                    });
                    ("gen", g, value, 0)
                }
                Err(e) => {
                    let value = json!({ "exhausted": e.to_string() });
                    ("gen", Graph::empty(0), value, 1)
                }
            }
        }
    };
    let report = json!({
        "command": name,
        "input": { "n": graph.n(), "m": graph.m() },
        "result": result,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("valid json")
    );
    Ok(code)
}

fn load(input: &InputArgs) -> Result<Graph, String> {
    if let Some(name) = &input.name {
        return gen::named(name).ok_or_else(|| format!("unknown catalog graph `{name}`"));
    }
    let path = input.input.as_ref().expect("clap enforces input|name");
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    let parsed = match input.format {
        Format::Dimacs => io::parse_dimacs(&text),
        Format::Json => io::parse_json_graph(&text),
    };
    parsed.map_err(|e| e.to_string())
}

fn run_partition(g: &Graph, class: ColorClass) -> (Value, u8) {
    if g.n() == 0 {
        return (
            json!({ "anchor": [], "omega": 0, "sets": {}, "structure": { "all_hold": true, "facts": [] } }),
            0,
        );
    }
    let anchor = clique::max_clique(g);
    let p = match wagon::partition(g, &anchor) {
        Ok(p) => p,
        Err(e) => return (json!({ "partition_error": e.to_string() }), 1),
    };
    let mut sets = serde_json::Map::new();
    for ((i, j), members) in p.c_sets() {
        sets.insert(format!("C[{},{}]", i + 1, j + 1), json!(members));
    }
    for (a, members) in p.i_sets() {
        sets.insert(format!("I[{}]", a + 1), json!(members));
    }
    let report = wagon::verify_structure(g, &p, class);
    let facts: Vec<Value> = report
        .facts
        .iter()
        .map(|f| {
            json!({
                "claim": f.claim,
                "holds": f.holds(),
                "violation": f.refutation.as_ref().map(violation_json),
            })
        })
        .collect();
    let all_hold = report.all_hold();
    let value = json!({
        "anchor": p.anchor(),
        "omega": p.omega(),
        "sets": sets,
        "structure": { "all_hold": all_hold, "facts": facts },
    });
    (value, u8::from(!all_hold))
}

fn run_color(g: &Graph, class: ColorClass, strict: bool, verify: bool) -> (Value, u8) {
    if strict {
        let report = detect::screen(g, &class.forbidden());
        if let Some(w) = report.witness() {
            let value = json!({
                "strict": { "member": false, "witness": witness_json(w) },
            });
            return (value, 1);
        }
    }
    let coloring = match color_for(class, g) {
        Ok(c) => c,
        Err(v) => {
            let value = json!({
                "refused": { "claim": v.claim, "violation": violation_json(&v.violation) },
            });
            return (value, 1);
        }
    };
    let omega = clique::clique_number(g);
    let mut value = json!({
        "class": class.to_string(),
        "omega": omega,
        "bound": coloring.bound(),
        "colors_used": coloring.colors_used(),
        "assignment": coloring.assignment(),
    });
    let mut code = 0;
    if verify {
        let proper = verify_coloring(g, &coloring)
            .map(|v| v.is_proper())
            .unwrap_or(false);
        let chi = oracle::chromatic_number(g).ok().map(|r| r.chi);
        value["verify"] = json!({
            "proper": proper,
            "chi": chi,
            "optimal": chi.map(|chi| chi == coloring.colors_used()),
        });
        if !proper {
            code = 1;
        }
    }
    (value, code)
}

fn run_certify(g: &Graph) -> (Value, u8) {
    let cert = perfection::certify_perfect(g);
    let conclusion = match &cert.conclusion {
        Conclusion::Perfect => {
            // The certificate is existential; a concrete omega-coloring
            // comes from the exact solver when the graph is small enough.
            let assignment = oracle::chromatic_number(g)
                .ok()
                .map(|r| r.witness_coloring.assignment().to_vec());
            json!({ "verdict": "perfect", "chi": cert.omega, "assignment": assignment })
        }
        Conclusion::NotApplicable(Inapplicability::OutOfClass(w)) => {
            json!({ "verdict": "not-applicable", "reason": "out-of-class", "witness": witness_json(w) })
        }
        Conclusion::NotApplicable(Inapplicability::CliqueNumber { omega }) => {
            json!({ "verdict": "not-applicable", "reason": "clique-number", "omega": omega })
        }
        Conclusion::Refuted(i) => json!({ "verdict": "refuted", "witness": i.to_string() }),
    };
    let value = json!({
        "omega": cert.omega,
        "class_checks": membership_json(&cert.class_check),
        "c7": cert.c7.as_ref().map(witness_json),
        "odd_hole": cert.odd_hole_scan.as_ref().map(witness_json),
        "odd_antihole": cert.odd_antihole_scan.as_ref().map(witness_json),
        "conclusion": conclusion,
    });
    // Refutations and forbidden-pattern witnesses are structural failures;
    // a clique number below the threshold is merely out of scope.
    let code = u8::from(matches!(
        cert.conclusion,
        Conclusion::Refuted(_) | Conclusion::NotApplicable(Inapplicability::OutOfClass(_))
    ));
    (value, code)
}

fn color_for(
    class: ColorClass,
    g: &Graph,
) -> Result<Coloring, colorbound::evidence::StructureViolation> {
    match class {
        ColorClass::GemFree => color_gem_free(g),
        ColorClass::ButterflyFree => color_butterfly_free(g),
        ColorClass::DiamondFree => color_diamond_free(g),
    }
}

fn membership_json(report: &MembershipReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|(p, w)| json!({ "pattern": p.to_string(), "witness": w.as_ref().map(witness_json) }))
        .collect();
    json!({ "member": report.is_member(), "checks": checks })
}

fn witness_json(w: &PatternWitness) -> Value {
    json!({ "pattern": w.pattern.to_string(), "embedding": w.embedding })
}

fn violation_json(v: &Violation) -> Value {
    match v {
        Violation::ForbiddenPattern(w) => {
            json!({ "kind": "forbidden-pattern", "witness": witness_json(w) })
        }
        Violation::OversizedClique { members } => {
            json!({ "kind": "oversized-clique", "members": members })
        }
        Violation::MissingEdge { u, v } => {
            json!({ "kind": "missing-edge", "u": u, "v": v })
        }
    }
}
