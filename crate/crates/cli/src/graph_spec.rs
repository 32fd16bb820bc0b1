//! Parsing of the textual graph specifications accepted everywhere a
//! command takes a graph: generator families with parameters
//! (`double_star(4,5)`, `p5(1)`, `clique(4)`, …), a graph6 literal, a file
//! path, or `-` for standard input.

use saturn_core::constructions::{caterpillar_p5, double_star, fig4_gadget};
use saturn_core::format::{parse_edge_list_text, parse_graph6};
use saturn_core::generate::{circulant, clique, complete_multipartite, cycle, path, regular_bipartite, star};
use saturn_core::Graph;
use std::io::Read;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("`{family}` takes {expected} parameter(s), got {got}")]
    BadArity { family: String, expected: &'static str, got: usize },
    #[error("bad parameter `{0}`: expected a nonnegative integer")]
    BadParameter(String),
    #[error("{0}")]
    BadFamily(String),
    #[error("could not read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("`{text}` is not a known family, a readable file, or graph6 ({graph6_error})")]
    Unrecognized { text: String, graph6_error: String },
    #[error("{path} is neither graph6 ({g6}) nor an edge list ({edges})")]
    BadFileContent { path: String, g6: String, edges: String },
}

/// The family a spec named syntactically, when it named one the bound
/// machinery cares about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    DoubleStar { s: usize, t: usize },
    Caterpillar { s: usize },
}

#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub family: Option<Family>,
}

impl ParsedGraph {
    fn plain(graph: Graph) -> ParsedGraph {
        ParsedGraph { graph, family: None }
    }
}

/// Parses one spec. Family syntax wins; otherwise an existing file path is
/// read (graph6 or `n m` edge-list content); otherwise the text itself must
/// be graph6. `-` reads standard input.
pub fn parse_graph_spec(text: &str) -> Result<ParsedGraph, SpecError> {
    let text = text.trim();
    if text == "-" {
        let mut content = String::new();
        std::io::stdin()
            .read_to_string(&mut content)
            .map_err(|source| SpecError::Io { path: "<stdin>".into(), source })?;
        return parse_content("<stdin>", &content);
    }
    if text == "fig4" {
        return Ok(ParsedGraph::plain(fig4_gadget()));
    }
    if let Some(open) = text.find('(') {
        if text.ends_with(')') {
            let name = text[..open].trim();
            let args = parse_args(name, &text[open + 1..text.len() - 1])?;
            return family(name, &args);
        }
    }
    if std::path::Path::new(text).is_file() {
        let content = std::fs::read_to_string(text)
            .map_err(|source| SpecError::Io { path: text.into(), source })?;
        return parse_content(text, &content);
    }
    match parse_graph6(text) {
        Ok(g) => Ok(ParsedGraph::plain(g)),
        Err(e) => Err(SpecError::Unrecognized {
            text: text.into(),
            graph6_error: e.to_string(),
        }),
    }
}

fn parse_args(family: &str, list: &str) -> Result<Vec<usize>, SpecError> {
    let list = list.trim();
    if list.is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|a| {
            let a = a.trim();
            a.parse::<usize>().map_err(|_| SpecError::BadParameter(a.into()))
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| match e {
            SpecError::BadParameter(p) => SpecError::BadParameter(format!("{}: {}", family, p)),
            other => other,
        })
}

fn family(name: &str, args: &[usize]) -> Result<ParsedGraph, SpecError> {
    let arity = |expected: &'static str, want: usize| -> Result<(), SpecError> {
        if args.len() == want {
            Ok(())
        } else {
            Err(SpecError::BadArity { family: name.into(), expected, got: args.len() })
        }
    };
    let build = |r: Result<Graph, saturn_core::generate::GenerateError>| {
        r.map(ParsedGraph::plain).map_err(|e| SpecError::BadFamily(e.to_string()))
    };
    match name {
        "path" => {
            arity("1", 1)?;
            Ok(ParsedGraph::plain(path(args[0])))
        }
        "cycle" => {
            arity("1", 1)?;
            build(cycle(args[0]))
        }
        "star" => {
            arity("1", 1)?;
            Ok(ParsedGraph::plain(star(args[0])))
        }
        "clique" => {
            arity("1", 1)?;
            Ok(ParsedGraph::plain(clique(args[0])))
        }
        "double_star" => {
            arity("2", 2)?;
            let (s, t) = (args[0], args[1]);
            if s < 1 || s > t {
                return Err(SpecError::BadFamily(format!(
                    "double_star requires 1 <= s <= t, got ({}, {})",
                    s, t
                )));
            }
            Ok(ParsedGraph {
                graph: double_star(s, t),
                family: Some(Family::DoubleStar { s, t }),
            })
        }
        "p5" => {
            arity("1", 1)?;
            Ok(ParsedGraph {
                graph: caterpillar_p5(args[0]),
                family: Some(Family::Caterpillar { s: args[0] }),
            })
        }
        "complete_multipartite" => {
            if args.is_empty() {
                return Err(SpecError::BadArity {
                    family: name.into(),
                    expected: "1 or more",
                    got: 0,
                });
            }
            Ok(ParsedGraph::plain(complete_multipartite(args)))
        }
        "circulant" => {
            if args.len() < 2 {
                return Err(SpecError::BadArity {
                    family: name.into(),
                    expected: "2 or more (n, offsets…)",
                    got: args.len(),
                });
            }
            build(circulant(args[0], &args[1..]))
        }
        "regular_bipartite" => {
            arity("3 (a, b, r)", 3)?;
            build(regular_bipartite(args[0], args[1], args[2]))
        }
        "fig4" => {
            arity("0", 0)?;
            Ok(ParsedGraph::plain(fig4_gadget()))
        }
        other => Err(SpecError::UnknownFamily(other.into())),
    }
}

fn parse_content(path: &str, content: &str) -> Result<ParsedGraph, SpecError> {
    let first_line = content.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let g6 = parse_graph6(first_line);
    match g6 {
        Ok(g) => Ok(ParsedGraph::plain(g)),
        Err(g6_err) => match parse_edge_list_text(content) {
            Ok(g) => Ok(ParsedGraph::plain(g)),
            Err(el_err) => Err(SpecError::BadFileContent {
                path: path.into(),
                g6: g6_err.to_string(),
                edges: el_err.to_string(),
            }),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs_parse() {
        assert_eq!(parse_graph_spec("path(4)").unwrap().graph.size(), 3);
        assert_eq!(parse_graph_spec("cycle(5)").unwrap().graph.size(), 5);
        assert_eq!(parse_graph_spec("star(5)").unwrap().graph.order(), 6);
        assert_eq!(parse_graph_spec("clique(4)").unwrap().graph.size(), 6);
        assert_eq!(parse_graph_spec("fig4").unwrap().graph.order(), 10);
        assert_eq!(parse_graph_spec("fig4()").unwrap().graph.order(), 10);
        assert_eq!(parse_graph_spec("complete_multipartite(1,1,3)").unwrap().graph.order(), 5);
    }

    #[test]
    fn double_star_spec_remembers_family() {
        let p = parse_graph_spec("double_star(4, 5)").unwrap();
        assert_eq!(p.family, Some(Family::DoubleStar { s: 4, t: 5 }));
        assert_eq!(p.graph.order(), 9);
        let p = parse_graph_spec("p5(1)").unwrap();
        assert_eq!(p.family, Some(Family::Caterpillar { s: 1 }));
        assert_eq!(p.graph.order(), 8);
    }

    #[test]
    fn graph6_literal_parses() {
        let p = parse_graph_spec("IheA@GUAo").unwrap();
        assert_eq!(p.graph.order(), 10);
        assert_eq!(p.graph.size(), 15);
    }

    #[test]
    fn bad_specs_are_rejected() {
        assert!(matches!(parse_graph_spec("frob(3)"), Err(SpecError::UnknownFamily(_))));
        assert!(matches!(parse_graph_spec("path(3,4)"), Err(SpecError::BadArity { .. })));
        assert!(matches!(parse_graph_spec("path(x)"), Err(SpecError::BadParameter(_))));
        assert!(matches!(parse_graph_spec("double_star(5,4)"), Err(SpecError::BadFamily(_))));
        assert!(matches!(
            parse_graph_spec("definitely not a graph"),
            Err(SpecError::Unrecognized { .. })
        ));
    }

    #[test]
    fn files_parse_in_either_format() {
        let dir = std::env::temp_dir();
        let g6_path = dir.join("saturn_spec_test.g6");
        std::fs::write(&g6_path, "IheA@GUAo\n").unwrap();
        let p = parse_graph_spec(g6_path.to_str().unwrap()).unwrap();
        assert_eq!(p.graph.order(), 10);

        let el_path = dir.join("saturn_spec_test.edges");
        std::fs::write(&el_path, "# triangle\n3 3\n0 1\n1 2\n0 2\n").unwrap();
        let p = parse_graph_spec(el_path.to_str().unwrap()).unwrap();
        assert_eq!(p.graph.size(), 3);
    }
}
