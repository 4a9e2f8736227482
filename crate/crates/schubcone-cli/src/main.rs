//! `schubcone` — classify, scan, render, and cross-check the rigidity of
//! toric matrix Schubert varieties.
//!
//! Four subcommands over the `schubcone` library:
//!
//! * `classify "<perm>"` — full report for one permutation (JSON by
//!   default, `--text` for humans, `--faces` for the three-face dump);
//! * `scan --n N` — classify all of S_N in lexicographic order and
//!   stream NDJSON reports or a `--summary` table;
//! * `render --perm "<perm>" --what rothe|regions|graph-dot` — text
//!   views of the Rothe diagram, the region overlay, or G^π as DOT;
//! * `crosscheck --n N [--deep]` — verify that the graph criterion, the
//!   essential-chain corollary, and the exact polyhedral oracle agree.
//!
//! Exit codes: `0` success, `1` verification failure (a crosscheck
//! discrepancy or a classify run whose routes disagree), `2` usage or
//! parse errors (including guard violations), `3` domain precondition
//! (rigidity requested for a non-toric permutation; the report is still
//! printed with `toric=false` and the complexity).
//!
//! Everything is deterministic: no randomness, no environment variables,
//! and `scan --jobs K` output is byte-identical to `--jobs 1`.

mod crosscheck;
mod render;
mod report;
mod scan;

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use schubcone::bigraph::LabeledGraph;
use schubcone::edgecone::{classify, three_faces, MethodSet};
use schubcone::fault::{set_fault_mode, FaultMode};
use schubcone::rothe::{l_components, regions, rothe_diagram, Permutation};

use report::{
    classification_view, face_view, ComponentFaceView, DiagramsView, Report,
    TimingsView, SCHEMA_VERSION,
};

// ======================================================================
// exit codes
// ======================================================================

const EXIT_OK: i32 = 0;
const EXIT_VERIFY: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_DOMAIN: i32 = 3;

/// Write to stdout, ending the process quietly if the consumer hung up
/// (`schubcone scan --n 8 | head` must not panic on the broken pipe).
fn emit(text: impl AsRef<str>) {
    use std::io::Write as _;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_ref().as_bytes()).is_err() {
        std::process::exit(EXIT_OK);
    }
}

/// [`emit`] plus a trailing newline.
fn emitln(text: impl AsRef<str>) {
    emit(text);
    emit("\n");
}

// ======================================================================
// argument surface
// ======================================================================

#[derive(Parser)]
#[command(
    name = "schubcone",
    version,
    about = "Rothe diagrams, bipartite edge cones, and rigidity of toric \
             matrix Schubert varieties — exact arithmetic throughout"
)]
struct Cli {
    /// Deliberately corrupt one computation route (negative-control
    /// testing only).  Hidden from help on purpose.
    #[arg(
        long,
        global = true,
        hide = true,
        value_name = "MODE",
        default_value = "none",
        value_parser = parse_fault
    )]
    sabotage: FaultMode,

    #[command(subcommand)]
    command: Command,
}

fn parse_fault(s: &str) -> Result<FaultMode, String> {
    s.parse().map_err(|e: schubcone::fault::UnknownFaultMode| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Classify one permutation: toricness, complexity, rigidity.
    Classify(ClassifyArgs),
    /// Classify every permutation of S_N and stream reports.
    Scan(ScanArgs),
    /// Render text views of a permutation.
    Render(RenderArgs),
    /// Verify that the three rigidity routes agree on all of S_N.
    Crosscheck(CrosscheckArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Permutation in one-line notation, e.g. "[2,4,1,3]".
    perm: String,
    /// Comma-separated rigidity routes to run.
    #[arg(long, default_value = "graph,corollary,oracle", value_name = "LIST")]
    methods: String,
    /// Emit the report as JSON (the default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit a human-readable text report instead of JSON.
    #[arg(long)]
    text: bool,
    /// Include the full three-face inventory of every component cone.
    #[arg(long)]
    faces: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Symmetric group degree (2 ≤ N ≤ 8).
    #[arg(long)]
    n: usize,
    /// Keep only matching reports.
    #[arg(long, value_enum, default_value = "all")]
    filter: scan::Filter,
    /// Worker threads for the classification fan-out (output is
    /// byte-identical for every value).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Print a category summary table instead of NDJSON reports.
    #[arg(long)]
    summary: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// Permutation in one-line notation.
    #[arg(long)]
    perm: String,
    /// Which view to render.
    #[arg(long, value_enum)]
    what: What,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    /// N×N grid: `#` diagram cells, `*` permutation 1s, `.` elsewhere.
    Rothe,
    /// Region overlay: E essential, D dominant, L diagram∩L, P = L′.
    Regions,
    /// Graphviz DOT text for the bipartite graph G^π.
    GraphDot,
}

#[derive(Args)]
struct CrosscheckArgs {
    /// Symmetric group degree (2 ≤ N ≤ 7).
    #[arg(long)]
    n: usize,
    /// Also verify every |S| ≤ 3 face subset and every pair rule
    /// against the oracle.
    #[arg(long)]
    deep: bool,
}

// ======================================================================
// dispatch
// ======================================================================

fn main() {
    let cli = Cli::parse();
    set_fault_mode(cli.sabotage);
    let code = match cli.command {
        Command::Classify(args) => cmd_classify(&args),
        Command::Scan(args) => cmd_scan(&args),
        Command::Render(args) => cmd_render(&args),
        Command::Crosscheck(args) => cmd_crosscheck(&args),
    };
    std::process::exit(code);
}

fn parse_perm(text: &str) -> Result<Permutation, i32> {
    Permutation::parse(text).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    })
}

// ======================================================================
// classify
// ======================================================================

fn cmd_classify(args: &ClassifyArgs) -> i32 {
    let total = Instant::now();
    let parse_start = Instant::now();
    let p = match parse_perm(&args.perm) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let methods: MethodSet = match args.methods.parse() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let parse_ms = millis(parse_start);

    let classify_start = Instant::now();
    let cls = match classify(&p, &methods) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let classify_ms = millis(classify_start);

    // Optional three-face inventory, one entry per component face.
    let mut faces_ms = None;
    let faces = if args.faces && cls.toric {
        let faces_start = Instant::now();
        let reg = regions(&rothe_diagram(&p));
        let mut dump = Vec::new();
        for (ci, comp) in l_components(&reg.l).iter().enumerate() {
            let lg = LabeledGraph::from_cells(comp);
            match three_faces(&lg.graph) {
                Ok(fs) => dump.extend(fs.iter().map(|f| ComponentFaceView {
                    component: ci,
                    face: face_view(f),
                })),
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            }
        }
        faces_ms = Some(millis(faces_start));
        Some(dump)
    } else {
        None
    };

    if args.text {
        let rothe = render::rothe_grid(&p);
        let overlay = render::regions_grid(&p);
        emit(report::text_report(&cls, &rothe, &overlay));
        if let Some(dump) = &faces {
            emitln("three-faces");
            for item in dump {
                emitln(format!(
                    "  component {} dim {} rays {}",
                    item.component,
                    item.face.dim,
                    item.face.rays.len()
                ));
            }
        }
    } else {
        let report = Report {
            schema_version: SCHEMA_VERSION,
            input: p.to_string(),
            classification: classification_view(&cls),
            diagrams: Some(DiagramsView {
                rothe: render::rothe_grid(&p),
                regions: render::regions_grid(&p),
            }),
            faces,
            timings: Some(TimingsView {
                parse_ms,
                classify_ms,
                faces_ms,
                total_ms: millis(total),
            }),
        };
        emitln(serde_json::to_string_pretty(&report).expect("serialization"));
    }

    if !cls.toric {
        EXIT_DOMAIN
    } else if !cls.consistent {
        EXIT_VERIFY
    } else {
        EXIT_OK
    }
}

fn millis(since: Instant) -> f64 {
    (since.elapsed().as_secs_f64() * 1_000_000.0).round() / 1000.0
}

// ======================================================================
// scan
// ======================================================================

fn cmd_scan(args: &ScanArgs) -> i32 {
    if !(2..=8).contains(&args.n) {
        eprintln!("error: --n must be between 2 and 8 (got {})", args.n);
        return EXIT_USAGE;
    }
    if args.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return EXIT_USAGE;
    }
    let results = match scan::classify_all(args.n, args.jobs) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VERIFY;
        }
    };
    if args.summary {
        emit(scan::summary_table(args.n, &results));
    } else {
        for c in results.iter().filter(|c| args.filter.keeps(c)) {
            emitln(scan::ndjson_line(c));
        }
    }
    EXIT_OK
}

// ======================================================================
// render
// ======================================================================

fn cmd_render(args: &RenderArgs) -> i32 {
    let p = match parse_perm(&args.perm) {
        Ok(p) => p,
        Err(code) => return code,
    };
    match args.what {
        What::Rothe => {
            for line in render::rothe_grid(&p) {
                emitln(line);
            }
        }
        What::Regions => {
            for line in render::regions_grid(&p) {
                emitln(line);
            }
        }
        What::GraphDot => emit(render::graph_dot(&p)),
    }
    EXIT_OK
}

// ======================================================================
// crosscheck
// ======================================================================

fn cmd_crosscheck(args: &CrosscheckArgs) -> i32 {
    if !(2..=7).contains(&args.n) {
        eprintln!("error: --n must be between 2 and 7 (got {})", args.n);
        return EXIT_USAGE;
    }
    let outcome = crosscheck::run(args.n, args.deep);
    emit(crosscheck::summary(args.n, args.deep, &outcome));
    if outcome.passed() {
        emitln("all checks passed");
        EXIT_OK
    } else {
        emitln(outcome.failure.as_deref().unwrap_or_default());
        EXIT_VERIFY
    }
}

// ======================================================================
// tests
// ======================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argument_surface_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn fault_parser_accepts_the_three_modes() {
        assert_eq!(parse_fault("none"), Ok(FaultMode::None));
        assert_eq!(parse_fault("ray-sign"), Ok(FaultMode::RaySign));
        assert_eq!(parse_fault("corollary-pattern"), Ok(FaultMode::CorollaryPattern));
        assert!(parse_fault("sideways").is_err());
    }

    #[test]
    fn sabotage_flag_is_global_and_hidden() {
        let cli =
            Cli::try_parse_from(["schubcone", "crosscheck", "--n", "4", "--sabotage", "ray-sign"])
                .unwrap();
        assert_eq!(cli.sabotage, FaultMode::RaySign);
        let mut cmd = <Cli as clap::CommandFactory>::command();
        let help = cmd.render_long_help().to_string();
        assert!(!help.contains("sabotage"), "must stay out of --help");
    }
}
