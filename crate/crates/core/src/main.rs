use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use polyspan::cones::{ConeLabel, Side, SubconeRef};
use polyspan::generate::{generate, GeneratorConfig};
use polyspan::io::{parse_edge_list, parse_instance, parse_instance_unchecked, write_edge_list, write_instance};
use polyspan::render::{render_svg, RenderOptions};
use polyspan::scene::{restore_general_position, split_shared_vertices, SplitMode};
use polyspan::spanners::SpannerSuite;
use polyspan::verify::{run_checks, GraphKind, GraphSet};
use polyspan::{Graph, Scene};

#[derive(Parser)]
#[command(name = "polyspan", version, about = "Plane bounded-degree spanners among polygonal obstacles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random scene.
    Gen {
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        obstacles: usize,
        /// Corners per obstacle.
        #[arg(long, default_value_t = 4)]
        size: usize,
        #[arg(long, default_value_t = 1000)]
        bbox: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build one graph and write it as an edge list.
    Build {
        #[arg(long, value_parser = parse_kind)]
        graph: GraphKind,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every property of the constructions; exit 1 if any fails.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Replace a constructed graph with an edge list, as KIND=FILE.
        #[arg(long = "graph", value_parser = parse_graph_file)]
        graphs: Vec<(GraphKind, PathBuf)>,
        /// Print failed checks only.
        #[arg(long)]
        quiet: bool,
    },
    /// Draw a scene and one of its graphs as SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = parse_kind, default_value = "ginf")]
        graph: GraphKind,
        /// Draw this edge list instead of a constructed graph.
        #[arg(long)]
        edges: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 600.0)]
        width: f64,
        /// Comma-separated vertices of a path to highlight.
        #[arg(long, value_delimiter = ',')]
        path: Vec<usize>,
        /// Subcone to shade, as APEX:LABEL[:left|right], e.g. 3:~C0.
        #[arg(long, value_parser = parse_cone)]
        cone: Option<SubconeRef>,
        /// Bend edges that run along obstacle boundaries.
        #[arg(long)]
        offset_boundary: bool,
        #[arg(long)]
        labels: bool,
    },
    /// Rotate the scene until it is in general position.
    Perturb {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Separate obstacles that share a vertex.
    Split {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Passable)]
        mode: Mode,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Passable,
    Blocked,
}

fn parse_kind(s: &str) -> Result<GraphKind, String> {
    GraphKind::parse(s).ok_or_else(|| format!("unknown graph {s:?}; expected vis, ginf, g15, g10 or g7"))
}

fn parse_graph_file(s: &str) -> Result<(GraphKind, PathBuf), String> {
    let (kind, file) = s.split_once('=').ok_or("expected KIND=FILE")?;
    Ok((parse_kind(kind)?, PathBuf::from(file)))
}

fn parse_cone(s: &str) -> Result<SubconeRef, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || format!("bad cone {s:?}; expected APEX:LABEL[:left|right]");
    if !(2..=3).contains(&parts.len()) {
        return Err(bad());
    }
    let apex = parts[0].parse().map_err(|_| bad())?;
    let (neg, digit) = match parts[1].strip_prefix('~') {
        Some(rest) => (true, rest),
        None => (false, parts[1]),
    };
    let index = match digit.strip_prefix('C').and_then(|d| d.parse::<u8>().ok()) {
        Some(i) if i < 3 => i,
        _ => return Err(bad()),
    };
    let label = if neg { ConeLabel::negative(index) } else { ConeLabel::positive(index) };
    let side = match parts.get(2) {
        None => Side::Whole,
        Some(&"left") => Side::Left,
        Some(&"right") => Side::Right,
        Some(_) => return Err(bad()),
    };
    Ok(SubconeRef { apex, label, side })
}

/// A failure that ends the run with exit code 2.
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Fatal> {
    fs::read_to_string(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn read_scene(path: &Path) -> Result<Scene, Fatal> {
    parse_instance(&read(path)?).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Fatal> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Fatal(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build_suite(scene: &Scene) -> Result<SpannerSuite, Fatal> {
    SpannerSuite::build(scene).map_err(|e| Fatal(format!("construction failed: {e}")))
}

fn run(cli: Cli) -> Result<ExitCode, Fatal> {
    match cli.command {
        Command::Gen { n, obstacles, size, bbox, seed, out } => {
            let config = GeneratorConfig {
                n_points: n,
                n_obstacles: obstacles,
                obstacle_size: size,
                bbox,
                seed,
            };
            emit(out.as_deref(), &write_instance(&generate(&config)?))?;
        }
        Command::Build { graph, input, out } => {
            let suite = build_suite(&read_scene(&input)?)?;
            let set = GraphSet::from_suite(&suite);
            emit(out.as_deref(), &write_edge_list(set.get(graph)))?;
        }
        Command::Verify { input, graphs, quiet } => {
            let scene = read_scene(&input)?;
            let suite = build_suite(&scene)?;
            let mut set = GraphSet::from_suite(&suite);
            for (kind, file) in &graphs {
                let g = parse_edge_list(&read(file)?)
                    .map_err(|e| Fatal(format!("{}: {e}", file.display())))?;
                *set.get_mut(*kind) = g;
            }
            let outcomes = run_checks(&scene, &suite, &set);
            let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).collect();
            for o in &outcomes {
                if !quiet || !o.passed {
                    println!("{o}");
                }
            }
            if failed.is_empty() {
                println!("all {} checks passed", outcomes.len());
                return Ok(ExitCode::SUCCESS);
            }
            let names: Vec<&str> = failed.iter().map(|o| o.name.as_str()).collect();
            println!("{} of {} checks failed: {}", failed.len(), outcomes.len(), names.join(", "));
            return Ok(ExitCode::from(1));
        }
        Command::Render { input, graph, edges, out, width, path, cone, offset_boundary, labels } => {
            let scene = read_scene(&input)?;
            let g: Graph = match edges {
                Some(file) => parse_edge_list(&read(&file)?)?,
                None => GraphSet::from_suite(&build_suite(&scene)?).get(graph).clone(),
            };
            if g.n() != scene.len() {
                return Err(Fatal(format!("graph has {} vertices, scene has {}", g.n(), scene.len())));
            }
            if let Some(v) = path.iter().chain(cone.iter().map(|c| &c.apex)).find(|&&v| v >= scene.len()) {
                return Err(Fatal(format!("vertex {v} out of range")));
            }
            let options = RenderOptions {
                width,
                highlight_path: path,
                highlight_cone: cone,
                offset_boundary_edges: offset_boundary,
                labels,
            };
            emit(out.as_deref(), &render_svg(&scene, &g, &options))?;
        }
        Command::Perturb { input, out } => {
            let (scene, k) = restore_general_position(&read_scene(&input)?)?;
            match k {
                Some(k) => eprintln!("rotated with k = {k}"),
                None => eprintln!("already in general position"),
            }
            emit(out.as_deref(), &write_instance(&scene))?;
        }
        Command::Split { input, out, mode } => {
            let text = read(&input)?;
            let scene = parse_instance_unchecked(&text)?;
            let mode = match mode {
                Mode::Passable => SplitMode::Passable,
                Mode::Blocked => SplitMode::Blocked,
            };
            emit(out.as_deref(), &write_instance(&split_shared_vertices(&scene, mode)?))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
