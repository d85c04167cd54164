use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ramified::factorization::{embed, FactorError};
use ramified::generators::{
    asymmetric_tree7, cogwheel, gen_cycle, gen_grid, gen_hypercube, gen_path, gen_random_tree,
    gen_staircase_polygon, iterated_simplex, simplex_graph,
};
use ramified::graph::{parse_graph, write_graph, EdgeId, Graph, GraphFile, GraphKind, Vertex};
use ramified::oracle::DistanceOracle;
use ramified::polygon::{
    geodesic_dist, grid_network, parse_polygon, scale_decimal, write_polygon, Point, PolygonError,
};
use ramified::recognition::{recognize, RecognitionReport, Witness};
use ramified::reference::{inc_graph, is_median_graph, MedianCheck, REFERENCE_LIMIT};

#[derive(Parser)]
#[command(
    name = "ramified",
    version,
    about = "Partial double trees: recognition, factorization and distance queries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph embeds isometrically in a product of two trees.
    Recognize {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the two tree factors and the vertex coordinates.
    Factor { file: PathBuf, prefix: PathBuf },
    /// Distances between vertex pairs given as `u1 v1 u2 v2 ...` or in a file.
    Dist {
        file: PathBuf,
        ids: Vec<u64>,
        #[arg(long)]
        pairs: Option<PathBuf>,
    },
    /// Median of three vertices.
    Median {
        file: PathBuf,
        x: u64,
        y: u64,
        z: u64,
    },
    /// Geodesic distances and grid networks of rectilinear polygons.
    Polygon {
        file: PathBuf,
        /// Multiply every coordinate (and query point) by this factor.
        #[arg(long, default_value_t = 1)]
        scale: i64,
        #[command(subcommand)]
        action: PolygonAction,
    },
    /// Print a generated graph or polygon.
    Gen {
        kind: String,
        params: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        min_step: i64,
        #[arg(long, default_value_t = 10)]
        max_step: i64,
    },
    /// Compare the linear-time recognizer against the definitional reference.
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum PolygonAction {
    Dist {
        sx: String,
        sy: String,
        tx: String,
        ty: String,
    },
    /// Write `<prefix>.graph` and the coordinates sidecar `<prefix>.geom`.
    Network { prefix: PathBuf },
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

type Outcome = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Recognize { file, json } => cmd_recognize(&file, json),
        Command::Factor { file, prefix } => cmd_factor(&file, &prefix),
        Command::Dist { file, ids, pairs } => cmd_dist(&file, &ids, pairs.as_deref()),
        Command::Median { file, x, y, z } => cmd_median(&file, [x, y, z]),
        Command::Polygon {
            file,
            scale,
            action,
        } => cmd_polygon(&file, scale, action),
        Command::Gen {
            kind,
            params,
            seed,
            min_step,
            max_step,
        } => cmd_gen(&kind, &params, seed, min_step..=max_step),
        Command::Check { file } => cmd_check(&file),
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<GraphFile, Failure> {
    parse_graph(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn join(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().collect::<Vec<_>>().join(",")
}

/// Witness fields in original vertex ids; edges as `u-v`.
fn witness_fields(w: &Witness, f: &GraphFile) -> Vec<(&'static str, Value)> {
    let id = |v: Vertex| json!(f.ids[v]);
    let edge = |e: EdgeId| {
        let (u, v) = f.graph.endpoints(e);
        json!(format!("{}-{}", f.ids[u], f.ids[v]))
    };
    match w {
        Witness::NotConnected { unreached } => {
            vec![("unreached", unreached.map_or(Value::Null, id))]
        }
        Witness::NotBipartite { cycle } => vec![("cycle", cycle.iter().map(|&v| id(v)).collect())],
        Witness::LabelTooLarge { vertex, label } => {
            vec![
                ("vertex", id(*vertex)),
                ("label", label.iter().map(|&v| id(v)).collect()),
            ]
        }
        Witness::BadLabelIntersection { vertex, y, z, size } => {
            vec![
                ("vertex", id(*vertex)),
                ("y", id(*y)),
                ("z", id(*z)),
                ("size", json!(size)),
            ]
        }
        Witness::ConsecutiveEqualLabels { first, second }
        | Witness::DuplicateLabels { first, second } => {
            vec![("first", id(*first)), ("second", id(*second))]
        }
        Witness::OddLinkCycle { vertex, edges } => {
            vec![
                ("vertex", id(*vertex)),
                ("edges", edges.iter().map(|&e| edge(e)).collect()),
            ]
        }
    }
}

fn witness_text(w: &Witness, f: &GraphFile) -> String {
    let fields = witness_fields(w, f).into_iter().map(|(k, v)| {
        let text = match v {
            Value::Null => "none".to_string(),
            Value::String(s) => s,
            Value::Array(items) => join(items.into_iter().map(|i| match i {
                Value::String(s) => s,
                other => other.to_string(),
            })),
            other => other.to_string(),
        };
        format!("{k}={text}")
    });
    let mut out = w.kind().to_string();
    for field in fields {
        out.push(' ');
        out.push_str(&field);
    }
    out
}

fn witness_json(w: &Witness, f: &GraphFile) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("kind".into(), json!(w.kind()));
    for (k, v) in witness_fields(w, f) {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

fn cmd_recognize(path: &Path, as_json: bool) -> Outcome {
    let f = load_graph(path)?;
    let g = &f.graph;
    let report = recognize(g);
    let code = if report.is_yes() { 0 } else { 1 };
    let out = match (&report, as_json) {
        (RecognitionReport::Yes(cert), true) => json!({
            "result": "yes",
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "squares": cert.squares().len(),
        })
        .to_string(),
        (RecognitionReport::No(w), true) => {
            json!({"result": "no", "witness": witness_json(w, &f)}).to_string()
        }
        (RecognitionReport::Yes(_), false) => "YES".to_string(),
        (RecognitionReport::No(w), false) => format!("NO {}", witness_text(w, &f)),
    };
    Ok((out + "\n", code))
}

fn embed_or_fail(f: &GraphFile) -> Result<ramified::factorization::TwoTreeEmbedding, Failure> {
    embed(&f.graph).map_err(|e| match e {
        FactorError::NotPartialDoubleTree(w) => Failure {
            code: 1,
            message: format!("NO {}", witness_text(&w, f)),
        },
        other => Failure {
            code: 2,
            message: other.to_string(),
        },
    })
}

fn cmd_factor(path: &Path, prefix: &Path) -> Outcome {
    let f = load_graph(path)?;
    let e = embed_or_fail(&f)?;
    for (i, tree) in e.trees.iter().enumerate() {
        write(
            &with_suffix(prefix, &format!(".t{}", i + 1)),
            &write_graph(tree, None, GraphKind::Tree),
        )?;
    }
    let mut coords = String::new();
    for v in f.graph.vertices() {
        writeln!(coords, "{} {} {}", f.ids[v], e.coords[0][v], e.coords[1][v]).unwrap();
    }
    write(&with_suffix(prefix, ".coords"), &coords)?;
    Ok((String::new(), 0))
}

fn lookup(f: &GraphFile, id: u64) -> Result<Vertex, Failure> {
    f.vertex(id)
        .ok_or_else(|| input_error(format!("unknown vertex {id}")))
}

fn cmd_dist(path: &Path, ids: &[u64], pairs_file: Option<&Path>) -> Outcome {
    let f = load_graph(path)?;
    let mut flat = ids.to_vec();
    if let Some(p) = pairs_file {
        let text =
            String::from_utf8(read(p)?).map_err(|_| input_error("pairs file is not UTF-8"))?;
        for token in text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace)
        {
            flat.push(
                token
                    .parse()
                    .map_err(|_| input_error(format!("bad vertex id `{token}`")))?,
            );
        }
    }
    if !flat.len().is_multiple_of(2) {
        return Err(input_error("vertex ids must come in pairs"));
    }
    let queries = flat
        .chunks_exact(2)
        .map(|p| Ok((lookup(&f, p[0])?, lookup(&f, p[1])?)))
        .collect::<Result<Vec<_>, Failure>>()?;
    let oracle = DistanceOracle::build(&embed_or_fail(&f)?);
    let mut out = String::new();
    for (u, v) in queries {
        writeln!(out, "{}", oracle.dist_unchecked(u, v)).unwrap();
    }
    Ok((out, 0))
}

fn cmd_median(path: &Path, ids: [u64; 3]) -> Outcome {
    let f = load_graph(path)?;
    let [x, y, z] = [
        lookup(&f, ids[0])?,
        lookup(&f, ids[1])?,
        lookup(&f, ids[2])?,
    ];
    let oracle = DistanceOracle::build(&embed_or_fail(&f)?);
    let m = oracle
        .median(x, y, z)
        .map_err(|e| input_error(e.to_string()))?;
    Ok((format!("{}\n", f.ids[m]), 0))
}

fn coordinate(text: &str, scale: i64) -> Result<i64, Failure> {
    scale_decimal(text, scale).ok_or_else(|| {
        input_error(format!(
            "coordinate `{text}` is not an integer after scaling by {scale}"
        ))
    })
}

fn cmd_polygon(path: &Path, scale: i64, action: PolygonAction) -> Outcome {
    if scale < 1 {
        return Err(input_error("scale must be positive"));
    }
    let text =
        String::from_utf8(read(path)?).map_err(|_| input_error("polygon file is not UTF-8"))?;
    let polygon =
        parse_polygon(&text, scale).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    match action {
        PolygonAction::Dist { sx, sy, tx, ty } => {
            let s = Point::new(coordinate(&sx, scale)?, coordinate(&sy, scale)?);
            let t = Point::new(coordinate(&tx, scale)?, coordinate(&ty, scale)?);
            match geodesic_dist(&polygon, s, t) {
                Ok(d) => Ok((format!("{d}\n"), 0)),
                Err(e @ PolygonError::PointOutside(_)) => Err(Failure {
                    code: 1,
                    message: e.to_string(),
                }),
                Err(e) => Err(input_error(e)),
            }
        }
        PolygonAction::Network { prefix } => {
            let arr = grid_network(&polygon);
            write(
                &with_suffix(&prefix, ".graph"),
                &write_graph(&arr.network, None, GraphKind::Graph),
            )?;
            let mut geom = String::new();
            for (v, p) in arr.points.iter().enumerate() {
                writeln!(geom, "{v} {} {}", p.x, p.y).unwrap();
            }
            write(&with_suffix(&prefix, ".geom"), &geom)?;
            Ok((String::new(), 0))
        }
    }
}

fn params<const N: usize>(kind: &str, raw: &[String]) -> Result<[usize; N], Failure> {
    if raw.len() != N {
        return Err(input_error(format!("`gen {kind}` takes {N} parameter(s)")));
    }
    let mut out = [0; N];
    for (slot, text) in out.iter_mut().zip(raw) {
        *slot = text
            .parse()
            .map_err(|_| input_error(format!("bad parameter `{text}`")))?;
    }
    Ok(out)
}

fn cmd_gen(
    kind: &str,
    raw: &[String],
    seed: Option<u64>,
    steps: std::ops::RangeInclusive<i64>,
) -> Outcome {
    let need_seed =
        || seed.ok_or_else(|| input_error(format!("`gen {kind}` is random and requires --seed")));
    let from_file = |raw: &[String]| -> Result<Graph, Failure> {
        match raw {
            [file] => Ok(load_graph(Path::new(file))?.graph),
            _ => Err(input_error(format!("`gen {kind}` takes one graph file"))),
        }
    };
    let gen_err = |e: ramified::generators::GenError| input_error(e);
    let graph = match kind {
        "path" => gen_path(params::<1>(kind, raw)?[0]).map_err(gen_err)?,
        "cycle" => gen_cycle(params::<1>(kind, raw)?[0]).map_err(gen_err)?,
        "grid" => {
            let [m, n] = params::<2>(kind, raw)?;
            gen_grid(m, n).map_err(gen_err)?
        }
        "hypercube" => gen_hypercube(params::<1>(kind, raw)?[0]).map_err(gen_err)?,
        "tree" => gen_random_tree(params::<1>(kind, raw)?[0], need_seed()?).map_err(gen_err)?,
        "cogwheel" => cogwheel(params::<1>(kind, raw)?[0]).map_err(gen_err)?,
        "simplex" => simplex_graph(&from_file(raw)?).graph,
        "iterated-simplex" => iterated_simplex(&from_file(raw)?),
        "asym-tree7" => {
            params::<0>(kind, raw)?;
            asymmetric_tree7()
        }
        "staircase" => {
            let [s] = params::<1>(kind, raw)?;
            let p = gen_staircase_polygon(s, need_seed()?, steps).map_err(gen_err)?;
            return Ok((write_polygon(&p), 0));
        }
        other => return Err(input_error(format!("unknown kind `{other}`"))),
    };
    let kind = if kind == "tree" || kind == "asym-tree7" {
        GraphKind::Tree
    } else {
        GraphKind::Graph
    };
    Ok((write_graph(&graph, None, kind), 0))
}

fn reference_verdict(f: &GraphFile) -> (bool, String) {
    let g = &f.graph;
    match is_median_graph(g) {
        MedianCheck::Disconnected => (false, "not connected".into()),
        MedianCheck::NotMedian { triple, medians } => (
            false,
            format!(
                "not median: triple {} has {} medians",
                join(triple.iter().map(|&v| f.ids[v].to_string())),
                medians.len()
            ),
        ),
        MedianCheck::Median => {
            let inc = inc_graph(g).expect("median graph");
            match ramified::graph::is_bipartite(&inc.graph) {
                Ok(_) => (
                    true,
                    format!(
                        "median, incompatibility graph bipartite on {} splits",
                        inc.splits.len()
                    ),
                ),
                Err(cycle) => (
                    false,
                    format!(
                        "median, incompatibility graph has an odd cycle of length {}",
                        cycle.vertices.len()
                    ),
                ),
            }
        }
    }
}

fn cmd_check(path: &Path) -> Outcome {
    let f = load_graph(path)?;
    let g = &f.graph;
    if g.vertex_count() > REFERENCE_LIMIT {
        return Err(input_error(format!(
            "TooLarge: {} vertices exceeds the reference limit of {REFERENCE_LIMIT}",
            g.vertex_count()
        )));
    }
    let fast = recognize(g);
    let fast_text = match &fast {
        RecognitionReport::Yes(_) => "yes".to_string(),
        RecognitionReport::No(w) => format!("no ({})", witness_text(w, &f)),
    };
    let (slow, detail) = reference_verdict(&f);
    let slow_text = if slow {
        format!("yes ({detail})")
    } else {
        format!("no ({detail})")
    };
    let agree = fast.is_yes() == slow;
    let head = if agree { "AGREE" } else { "DISAGREE" };
    Ok((
        format!("{head}\nfast: {fast_text}\nreference: {slow_text}\n"),
        if agree { 0 } else { 1 },
    ))
}
