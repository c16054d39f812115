//! `degsim`: exact pencil invariants, certificates and verdicts for graph
//! pairs, with JSON output.
//!
//! Exit codes: 0 success, 1 refuted or invalid verdict, 2 parse error,
//! 3 dimension mismatch, 4 construction precondition.

mod error;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use degsim::algebra::json::{bipoly_to_json, unipoly_to_json};
use degsim::algebra::parse_rational;
use degsim::certify::instances::{random_instance, Construction};
use degsim::certify::{
    certificate_for_addjoin, certificate_for_class_join, certificate_for_complement,
    certificate_for_join, certificate_for_ksum, certificate_for_pendants, certificate_for_product,
    certificate_for_rooted_product, certificate_for_switching, certificate_for_union,
    certificate_for_vertex_deletion, check_pair, necessary_battery, CertifiedPair, Verdict,
};
use degsim::graph::{build_t1, build_t2, coalesce, emit_graph6, Graph, ProductKind, RootedGraph};
use degsim::pencil::{charpolys, psi, snf_from_psi};
use degsim::zeta::{ihara_reciprocal, ihara_to_json};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use error::{CliError, EXIT_VERDICT};

#[derive(Parser)]
#[command(
    name = "degsim",
    version,
    about = "Exact pencil invariants and degree-similarity certificates for graphs"
)]
struct Cli {
    /// Seed for randomized instance generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

/// A graph argument: graph6 or edge-list JSON, a file holding one, or `-`
/// for stdin (the default).
#[derive(Args)]
struct GraphInput {
    graph: Option<String>,
    /// Read newline-delimited graph6 and emit one JSON line per graph, in
    /// input order.
    #[arg(long)]
    batch: bool,
}

#[derive(Subcommand)]
enum Command {
    /// ψ(t, μ) = det(tI - (A - μD)) as nested coefficient arrays.
    Psi {
        #[command(flatten)]
        input: GraphInput,
        /// Specialize μ to a rational such as `-1` or `3/2`.
        #[arg(long, allow_hyphen_values = true)]
        at_mu: Option<String>,
    },
    /// Invariant factors of tI - (A - μD) over ℚ(μ)[t].
    Snf {
        #[command(flatten)]
        input: GraphInput,
    },
    /// det(I - tA + t²(D - I)) and the exponent |E| - |V|.
    Zeta {
        #[command(flatten)]
        input: GraphInput,
    },
    /// ψ, the four characteristic polynomials, degrees, SNF and zeta.
    Report {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Verdict on whether two graphs are degree similar.
    CheckPair {
        first: String,
        second: String,
        /// Certificate JSON, or `construct` output holding one.
        #[arg(long)]
        certificate: Option<String>,
        /// Decide pairs of trees by isomorphism.
        #[arg(long)]
        trees: bool,
    },
    /// Build a certified pair with one of the constructions.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
}

/// PAIR arguments take `construct` output, or a single graph standing for
/// the pair (g, g) with the identity certificate.
#[derive(Subcommand)]
enum ConstructKind {
    /// Local switching; INSTANCE is {"graph": .., "cells": [[..]], "rest": [..]}.
    Switch { instance: String },
    /// Complements of a pair whose first graph is connected.
    Complement { pair: String },
    /// Disjoint union of each graph with GRAPH.
    Union { pair: String, graph: String },
    /// Join of each graph with GRAPH; the pair must be connected and regular.
    Join { pair: String, graph: String },
    /// Join GRAPH to the chosen cells of a switching instance (the rest is
    /// index `cells.len()`), then switch.
    ClassJoin {
        instance: String,
        graph: String,
        #[arg(long, value_delimiter = ',', required = true)]
        cells: Vec<usize>,
    },
    /// Product of two pairs: cartesian, tensor, strong or lexicographic.
    Product {
        kind: ProductKind,
        first: String,
        second: String,
    },
    /// Merge vertices of each graph with vertices of GRAPH.
    Ksum {
        pair: String,
        graph: String,
        /// Vertices of the first graph.
        #[arg(long, value_delimiter = ',', required = true)]
        first: Vec<usize>,
        /// Corresponding vertices of the second graph.
        #[arg(long, value_delimiter = ',', required = true)]
        second: Vec<usize>,
        /// Vertices of GRAPH merged with them.
        #[arg(long, value_delimiter = ',', required = true)]
        attach: Vec<usize>,
    },
    /// Root rooted graphs (GRAPH@ROOT) at chosen vertices of each graph.
    Rooted {
        pair: String,
        #[arg(long, value_delimiter = ',', required = true)]
        first: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        second: Vec<usize>,
        #[arg(long = "attach", required = true)]
        attach: Vec<String>,
    },
    /// Attach pendant vertices by degree class, as `DEGREE=COUNT,...`.
    Pendants { pair: String, per_degree: String },
    /// Add one vertex per listed degree, joined to that degree class.
    Addjoin {
        pair: String,
        #[arg(value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
    },
    /// Delete vertex U1 from the first graph and U2 from the second.
    DeleteVertex { pair: String, u1: usize, u2: usize },
    /// Coalesce S at ROOT with each of the two fixed trees; the result is
    /// ψ-equal but not degree similar.
    #[command(name = "coalesce-T1T2")]
    CoalesceT1T2 { graph: String, root: usize },
    /// A random instance of a construction, reproducible with --seed.
    Random { construction: String },
}

fn emit(v: &Value) {
    println!("{v}");
}

fn error_json(e: &CliError) -> Value {
    json!({"error": e.to_string(), "kind": e.kind()})
}

/// Runs `f` on the single graph input, or on every line in batch mode.
fn per_graph(
    input: &GraphInput,
    f: impl Fn(&Graph) -> Result<Value, CliError> + Sync,
) -> Result<i32, CliError> {
    if !input.batch {
        emit(&f(&input::graph(input.graph.as_deref())?)?);
        return Ok(0);
    }
    let text = input::read_arg(input.graph.as_deref())?;
    let lines = input::batch_lines(&text);
    let results: Vec<Result<Value, CliError>> = lines
        .par_iter()
        .map(|l| input::parse_graph(l).and_then(|g| f(&g)))
        .collect();
    let mut code = 0;
    for (i, r) in results.iter().enumerate() {
        match r {
            Ok(v) => emit(v),
            Err(e) => {
                emit(&json!({"index": i, "error": error_json(e)}));
                if code == 0 {
                    code = e.exit_code();
                }
            }
        }
    }
    Ok(code)
}

fn cmd_psi(g: &Graph, at_mu: Option<&str>) -> Result<Value, CliError> {
    let p = psi(g);
    Ok(match at_mu {
        Some(m) => unipoly_to_json(&p.eval_mu(&parse_rational(m)?)),
        None => bipoly_to_json(&p),
    })
}

fn cmd_report(g: &Graph) -> Value {
    let profile = charpolys(g);
    let snf = snf_from_psi(&profile.psi);
    let mut warnings = Vec::new();
    let zeta = match ihara_reciprocal(g) {
        Ok((det, e)) => ihara_to_json(&det, e),
        Err(err) => {
            warnings.push(format!("zeta omitted: {err}"));
            Value::Null
        }
    };
    if profile.deg_scaled_charpoly.is_none() {
        warnings.push("degScaledCharpoly omitted: the graph has an isolated vertex".into());
    }
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let mut v = profile.to_json();
    v["graph6"] = json!(emit_graph6(g));
    v["n"] = json!(g.n());
    v["edges"] = json!(g.edge_count());
    v["snf"] = snf.to_json();
    v["zeta"] = zeta;
    v["warnings"] = json!(warnings);
    v
}

fn cmd_check_pair(
    first: &str,
    second: &str,
    cert: Option<&str>,
    trees: bool,
) -> Result<i32, CliError> {
    let g = input::graph(Some(first))?;
    let h = input::graph(Some(second))?;
    let cert = cert.map(input::certificate).transpose()?;
    let (verdict, report) = check_pair(&g, &h, cert.as_ref(), trees)?;
    let mut out = verdict.to_json();
    if let Some(r) = &report {
        out["report"] = r.to_json();
        // Equal Smith forms give similarity of the pencils over ℚ(μ) only,
        // which is weaker than degree similarity.
        out["pencilSimilarOverQmu"] = json!(r.snf_equal);
    }
    emit(&out);
    Ok(match verdict {
        Verdict::Refuted { .. } | Verdict::Invalid { .. } => EXIT_VERDICT,
        Verdict::Certified { .. } | Verdict::Unknown { .. } => 0,
    })
}

fn pair_output(name: &str, pair: &CertifiedPair) -> Result<Value, CliError> {
    let verified = pair.verify()?;
    let mut v = pair.to_json();
    v["construction"] = json!(name);
    v["verified"] = json!(verified);
    Ok(v)
}

fn cmd_construct(kind: &ConstructKind, seed: u64) -> Result<Value, CliError> {
    let (name, pair) = match kind {
        ConstructKind::Switch { instance } => {
            let (g, pi) = input::switching_instance(instance)?;
            ("switch", certificate_for_switching(&g, &pi)?)
        }
        ConstructKind::Complement { pair } => (
            "complement",
            certificate_for_complement(&input::pair(pair)?)?,
        ),
        ConstructKind::Union { pair, graph } => (
            "union",
            certificate_for_union(&input::pair(pair)?, &input::graph(Some(graph))?)?,
        ),
        ConstructKind::Join { pair, graph } => (
            "join",
            certificate_for_join(&input::pair(pair)?, &input::graph(Some(graph))?)?,
        ),
        ConstructKind::ClassJoin {
            instance,
            graph,
            cells,
        } => {
            let (g, pi) = input::switching_instance(instance)?;
            (
                "class-join",
                certificate_for_class_join(&g, &pi, &input::graph(Some(graph))?, cells)?,
            )
        }
        ConstructKind::Product {
            kind,
            first,
            second,
        } => (
            "product",
            certificate_for_product(&input::pair(first)?, &input::pair(second)?, *kind)?,
        ),
        ConstructKind::Ksum {
            pair,
            graph,
            first,
            second,
            attach,
        } => {
            let y = input::graph(Some(graph))?;
            (
                "ksum",
                certificate_for_ksum(&input::pair(pair)?, first, second, &y, attach)?,
            )
        }
        ConstructKind::Rooted {
            pair,
            first,
            second,
            attach,
        } => {
            let ys = attach
                .iter()
                .map(|s| input::rooted(s))
                .collect::<Result<Vec<_>, _>>()?;
            (
                "rooted",
                certificate_for_rooted_product(&input::pair(pair)?, first, second, &ys)?,
            )
        }
        ConstructKind::Pendants { pair, per_degree } => {
            let per = input::degree_counts(per_degree)?;
            (
                "pendants",
                certificate_for_pendants(&input::pair(pair)?, &per)?,
            )
        }
        ConstructKind::Addjoin { pair, degrees } => (
            "addjoin",
            certificate_for_addjoin(&input::pair(pair)?, degrees)?,
        ),
        ConstructKind::DeleteVertex { pair, u1, u2 } => (
            "delete-vertex",
            certificate_for_vertex_deletion(&input::pair(pair)?, *u1, *u2)?,
        ),
        ConstructKind::CoalesceT1T2 { graph, root } => {
            let s = RootedGraph::new(input::graph(Some(graph))?, *root)?;
            let (g, h) = (coalesce(&s, &build_t1()), coalesce(&s, &build_t2()));
            let report = necessary_battery(&g, &h);
            return Ok(json!({
                "construction": "coalesce-T1T2",
                "first": emit_graph6(&g),
                "second": emit_graph6(&h),
                "report": report.to_json(),
            }));
        }
        ConstructKind::Random { construction } => {
            let c = Construction::ALL
                .into_iter()
                .find(|c| c.name() == construction)
                .ok_or_else(|| CliError::Parse(format!("unknown construction {construction:?}")))?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut v = pair_output(c.name(), &random_instance(&mut rng, c))?;
            v["seed"] = json!(seed);
            return Ok(v);
        }
    };
    pair_output(name, &pair)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Psi { input, at_mu } => per_graph(&input, |g| cmd_psi(g, at_mu.as_deref())),
        Command::Snf { input } => per_graph(&input, |g| Ok(snf_from_psi(&psi(g)).to_json())),
        Command::Zeta { input } => per_graph(&input, |g| {
            let (det, e) = ihara_reciprocal(g)?;
            Ok(ihara_to_json(&det, e))
        }),
        Command::Report { input } => per_graph(&input, |g| Ok(cmd_report(g))),
        Command::CheckPair {
            first,
            second,
            certificate,
            trees,
        } => cmd_check_pair(&first, &second, certificate.as_deref(), trees),
        Command::Construct { kind } => {
            emit(&cmd_construct(&kind, cli.seed)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
