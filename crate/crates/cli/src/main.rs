//! `saturn` — command-line front end for the graph-saturation toolkit.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad parameters, infeasible
//! constructions, oracle limits), 2 on usage errors.

mod graph_spec;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_spec::{parse_graph_spec, Family, ParsedGraph};
use report::{bound_out, print_bounds_text, print_sat_text, print_verify_text, print_weights_text};
use saturn_core::bounds::{double_star_bounds, lower_bound_survey, shorty_bounds};
use saturn_core::constructions::{
    caterpillar_p5, double_star, ehm_construction, example_kdelta_doublestar, example_kdelta_star,
    fig4_gadget, fig4_labels, saturated_double_star, saturated_shorty, ConstructionReport,
};
use saturn_core::format::{emit_edge_list_text, to_dot};
use saturn_core::oracle::{audit_bounds_against_oracle, brute_force_sat, canonical_form, SatOptions};
use saturn_core::saturation::is_h_saturated;
use saturn_core::weights::weight_summary;
use saturn_core::{emit_graph6, Graph};
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "saturn",
    version,
    about = "Graph saturation toolkit: weights, bounds, constructions, verification, exact values"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: $SATURN_THREADS, else all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Edge-weight table and the constants k0, k1, k0', k1' of a pattern.
    Weights {
        /// Pattern graph: family spec, graph6, file, or `-` for stdin.
        spec: String,
    },
    /// Saturation-number bounds for a pattern at order n.
    Bound {
        /// Pattern graph: family spec, graph6, file, or `-` for stdin.
        spec: String,
        /// Host order the bounds are evaluated at.
        #[arg(long)]
        n: usize,
        /// Which bound family to evaluate.
        #[arg(long, value_enum, default_value_t = Which::Best)]
        which: Which,
    },
    /// Build a named host graph and print it.
    Construct {
        /// Output format.
        #[arg(long, global = true, value_enum, default_value_t = OutFormat::G6)]
        out: OutFormat,
        #[command(subcommand)]
        which: ConstructCmd,
    },
    /// Decide whether a host graph is pattern-free and pattern-saturated.
    Verify {
        /// Host graph spec.
        #[arg(long)]
        host: String,
        /// Pattern graph spec.
        #[arg(long)]
        pattern: String,
        /// Print the embedding map or counterexample details.
        #[arg(long)]
        explain: bool,
    },
    /// Exact minimum saturated size by exhaustive search (order ≤ 9).
    Sat {
        /// Pattern graph spec.
        #[arg(long)]
        pattern: String,
        /// Host order.
        #[arg(long)]
        n: usize,
        /// Abort if the sweep exceeds this many edges.
        #[arg(long)]
        max_edges: Option<usize>,
        /// Also cross-check bounds and constructions against exact values
        /// for every order up to n.
        #[arg(long)]
        audit: bool,
    },
    /// Parse a graph and re-emit it in another format.
    Convert {
        /// Graph spec.
        spec: String,
        /// Output format.
        #[arg(long, value_enum, default_value_t = OutFormat::G6)]
        out: OutFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Cp,
    General,
    TriangleFree,
    DoubleStar,
    Shorty,
    Best,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::Cp => "cp",
            Which::General => "general",
            Which::TriangleFree => "triangle-free",
            Which::DoubleStar => "double-star",
            Which::Shorty => "shorty",
            Which::Best => "best",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    G6,
    Dot,
    Edges,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Minimum host saturated for the double star S_{s,t} (2 ≤ s < t).
    SaturatedDoubleStar(SaturatedDoubleStarArgs),
    /// Minimum host saturated for the caterpillar P5^(s-1) (s ≥ 1).
    SaturatedShorty(SaturatedShortyArgs),
    /// Disjoint stars K_{1,k} over a (delta-1)-regular leaf graph: minimum
    /// average degree delta + (k-delta)/(k+1).
    KdeltaStar(KdeltaArgs),
    /// Disjoint double stars S_{k,k} over a (delta-1)-regular leaf graph:
    /// average degree delta + (k-delta)/k with unique high neighbors.
    KdeltaDoublestar(KdeltaArgs),
    /// Classical minimum clique-saturated host: K_{t-1} joined to an
    /// independent set.
    Ehm(EhmArgs),
    /// The ten-vertex obstruction gadget.
    Fig4,
}

#[derive(Args)]
struct SaturatedDoubleStarArgs {
    /// Small center degree s.
    #[arg(long)]
    s: usize,
    /// Large center degree t.
    #[arg(long)]
    t: usize,
    /// Host order.
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct SaturatedShortyArgs {
    /// Internal degree parameter: the pattern is P5^(s-1).
    #[arg(long)]
    s: usize,
    /// Host order.
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct KdeltaArgs {
    /// Minimum degree delta.
    #[arg(long)]
    delta: usize,
    /// High degree k (delta < k).
    #[arg(long)]
    k: usize,
    /// Number of disjoint copies.
    #[arg(long)]
    ell: usize,
}

#[derive(Args)]
struct EhmArgs {
    /// The host is K_{t+1}-saturated.
    #[arg(long)]
    t: usize,
    /// Host order.
    #[arg(long)]
    n: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let threads = cli.threads.or_else(|| {
        std::env::var("SATURN_THREADS").ok().and_then(|v| v.parse().ok())
    });
    if let Some(t) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global() {
            eprintln!("error: could not configure {} worker threads: {}", t, e);
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Weights { spec } => weights_cmd(&spec, cli.json),
        Command::Bound { spec, n, which } => bound_cmd(&spec, n, which, cli.json),
        Command::Construct { out, which } => construct_cmd(which, out, cli.json),
        Command::Verify { host, pattern, explain } => verify_cmd(&host, &pattern, explain, cli.json),
        Command::Sat { pattern, n, max_edges, audit } => {
            sat_cmd(&pattern, n, max_edges, audit, cli.json)
        }
        Command::Convert { spec, out } => convert_cmd(&spec, out, cli.json),
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(err)?;
    println!("{}", text);
    Ok(())
}

fn weights_cmd(spec: &str, json: bool) -> Result<(), String> {
    let parsed = parse_graph_spec(spec).map_err(err)?;
    let summary = weight_summary(&parsed.graph).map_err(err)?;
    let out = report::weights_out(&parsed.graph, &summary);
    if json {
        print_json(&out)
    } else {
        print_weights_text(&out);
        Ok(())
    }
}

/// Recognizes double stars and caterpillars presented as raw graphs, so
/// family-specific bounds also work on graph6 input.
fn detect_family(parsed: &ParsedGraph) -> Option<Family> {
    if let Some(f) = parsed.family {
        return Some(f);
    }
    let g = &parsed.graph;
    let order = g.order();
    if order > 12 {
        return None;
    }
    let code = canonical_form(g).ok()?;
    for s in 1..=order / 2 {
        let t = order - s;
        if s <= t && canonical_form(&double_star(s, t)).ok()? == code {
            return Some(Family::DoubleStar { s, t });
        }
    }
    if order >= 5 && (order - 5).is_multiple_of(3) {
        let s = (order - 5) / 3;
        if canonical_form(&caterpillar_p5(s)).ok()? == code {
            return Some(Family::Caterpillar { s });
        }
    }
    None
}

fn bound_cmd(spec: &str, n: usize, which: Which, json: bool) -> Result<(), String> {
    let parsed = parse_graph_spec(spec).map_err(err)?;
    let g = &parsed.graph;
    let survey = lower_bound_survey(g, n).map_err(err)?;
    let (reports, best) = match which {
        Which::Cp => (vec![survey.cp.clone()], None),
        Which::General => (
            survey
                .candidates
                .iter()
                .filter(|r| r.name.starts_with("general-"))
                .cloned()
                .collect(),
            None,
        ),
        Which::TriangleFree => {
            if !g.is_triangle_free() {
                return Err("pattern contains a triangle; triangle-free bounds do not apply".into());
            }
            (
                survey
                    .candidates
                    .iter()
                    .filter(|r| r.name.starts_with("triangle-free-"))
                    .cloned()
                    .collect(),
                None,
            )
        }
        Which::DoubleStar => match detect_family(&parsed) {
            Some(Family::DoubleStar { s, t }) => {
                (double_star_bounds(s, t, n).map_err(err)?, None)
            }
            _ => return Err("pattern is not a double star S_{s,t}".into()),
        },
        Which::Shorty => match detect_family(&parsed) {
            Some(Family::Caterpillar { s }) => (shorty_bounds(s + 1, n).map_err(err)?, None),
            _ => return Err("pattern is not a caterpillar P5^s".into()),
        },
        Which::Best => {
            let mut all = vec![survey.cp.clone()];
            all.extend(survey.candidates.iter().cloned());
            match detect_family(&parsed) {
                Some(Family::DoubleStar { s, t }) => {
                    all.extend(double_star_bounds(s, t, n).map_err(err)?)
                }
                Some(Family::Caterpillar { s }) => {
                    all.extend(shorty_bounds(s + 1, n).map_err(err)?)
                }
                None => {}
            }
            (all, Some(survey.best.clone()))
        }
    };
    let out = report::BoundsOut {
        graph6: emit_graph6(g),
        n,
        which: which.name().to_string(),
        reports: reports.iter().map(bound_out).collect(),
        best: best.as_ref().map(bound_out),
    };
    if json {
        print_json(&out)
    } else {
        print_bounds_text(&out);
        Ok(())
    }
}

fn construct_cmd(which: ConstructCmd, out: OutFormat, json: bool) -> Result<(), String> {
    let (name, report): (String, ConstructionReport) = match which {
        ConstructCmd::SaturatedDoubleStar(a) => (
            format!("saturated-double-star(s={}, t={}, n={})", a.s, a.t, a.n),
            saturated_double_star(a.s, a.t, a.n).map_err(err)?,
        ),
        ConstructCmd::SaturatedShorty(a) => (
            format!("saturated-shorty(s={}, n={})", a.s, a.n),
            saturated_shorty(a.s, a.n).map_err(err)?,
        ),
        ConstructCmd::KdeltaStar(a) => (
            format!("kdelta-star(delta={}, k={}, ell={})", a.delta, a.k, a.ell),
            example_kdelta_star(a.delta, a.k, a.ell).map_err(err)?,
        ),
        ConstructCmd::KdeltaDoublestar(a) => (
            format!("kdelta-doublestar(delta={}, k={}, ell={})", a.delta, a.k, a.ell),
            example_kdelta_doublestar(a.delta, a.k, a.ell).map_err(err)?,
        ),
        ConstructCmd::Ehm(a) => (
            format!("ehm(t={}, n={})", a.t, a.n),
            ehm_construction(a.t, a.n).map_err(err)?,
        ),
        ConstructCmd::Fig4 => {
            let g = fig4_gadget();
            return emit_plain_graph("fig4", &g, Some(fig4_labels()), out, json);
        }
    };
    let g = &report.graph;
    let labels: BTreeMap<usize, String> = report
        .roles
        .iter()
        .enumerate()
        .map(|(v, role)| (v, report::role_label(role)))
        .collect();
    if json {
        print_json(&report::ConstructOut {
            name,
            order: g.order(),
            size: g.size(),
            graph6: emit_graph6(g),
            roles: report.roles.iter().map(report::role_label).collect(),
            properties: report
                .properties
                .iter()
                .map(|(p, ok)| report::PropertyOut { name: p.to_string(), ok: *ok })
                .collect(),
        })
    } else {
        emit_graph(g, Some(&labels), out);
        Ok(())
    }
}

fn emit_plain_graph(
    name: &str,
    g: &Graph,
    labels: Option<BTreeMap<usize, String>>,
    out: OutFormat,
    json: bool,
) -> Result<(), String> {
    if json {
        print_json(&report::ConstructOut {
            name: name.to_string(),
            order: g.order(),
            size: g.size(),
            graph6: emit_graph6(g),
            roles: labels
                .as_ref()
                .map(|l| l.values().cloned().collect())
                .unwrap_or_default(),
            properties: Vec::new(),
        })
    } else {
        emit_graph(g, labels.as_ref(), out);
        Ok(())
    }
}

fn emit_graph(g: &Graph, labels: Option<&BTreeMap<usize, String>>, out: OutFormat) {
    match out {
        OutFormat::G6 => println!("{}", emit_graph6(g)),
        OutFormat::Dot => print!("{}", to_dot(g, labels)),
        OutFormat::Edges => print!("{}", emit_edge_list_text(g)),
    }
}

fn verify_cmd(host: &str, pattern: &str, explain: bool, json: bool) -> Result<(), String> {
    let host = parse_graph_spec(host).map_err(err)?.graph;
    let pattern = parse_graph_spec(pattern).map_err(err)?.graph;
    if pattern.size() == 0 {
        return Err("pattern has no edges; saturation is undefined".into());
    }
    let verdict = is_h_saturated(&host, &pattern);
    let out = report::verify_out(&host, &pattern, &verdict);
    if json {
        print_json(&out)
    } else {
        print_verify_text(&out, explain);
        Ok(())
    }
}

fn sat_cmd(
    pattern: &str,
    n: usize,
    max_edges: Option<usize>,
    audit: bool,
    json: bool,
) -> Result<(), String> {
    let parsed = parse_graph_spec(pattern).map_err(err)?;
    let opts = SatOptions { edge_cap: max_edges, ..SatOptions::default() };
    let result = brute_force_sat(n, &parsed.graph, opts).map_err(err)?;
    let audit_report = if audit {
        let corpus = vec![(pattern.to_string(), parsed.graph.clone())];
        Some(audit_bounds_against_oracle(&corpus, n).map_err(err)?)
    } else {
        None
    };
    let out = report::sat_out(&result, audit_report.as_ref());
    if json {
        print_json(&out)
    } else {
        print_sat_text(&out);
        Ok(())
    }
}

fn convert_cmd(spec: &str, out: OutFormat, json: bool) -> Result<(), String> {
    let g = parse_graph_spec(spec).map_err(err)?.graph;
    if json {
        #[derive(serde::Serialize)]
        struct ConvertOut {
            order: usize,
            size: usize,
            graph6: String,
            edges: Vec<(usize, usize)>,
        }
        print_json(&ConvertOut {
            order: g.order(),
            size: g.size(),
            graph6: emit_graph6(&g),
            edges: g.edges(),
        })
    } else {
        emit_graph(&g, None, out);
        Ok(())
    }
}
