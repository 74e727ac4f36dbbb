//! JSON graph and seed files, and DOT export.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use reflex_core::kan::{Generator, Label, SeedViolation};
use reflex_core::{FunctorSeed, Graph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("duplicate vertex name {0:?}")]
    DuplicateVertex(String),
    #[error("edge endpoint {0:?} is not a vertex")]
    UnknownEndpoint(String),
    #[error("self-edge at vertex {0:?}")]
    SelfEdge(String),
    #[error("label {0} names unknown vertex {1:?}")]
    UnknownLabelVertex(String, String),
    #[error("missing label {0}")]
    MissingLabel(&'static str),
    #[error("unknown label key {0:?}")]
    UnknownLabelKey(String),
    #[error("unknown action key {0:?}")]
    UnknownActionKey(String),
    #[error("action {0} is missing")]
    MissingAction(&'static str),
    #[error("action {0} does not map vertex {1:?}")]
    IncompleteAction(&'static str, String),
    #[error("action {0} mentions unknown vertex {1:?}")]
    UnknownActionVertex(&'static str, String),
    #[error("seed validation failed: {0}")]
    InvalidSeed(#[from] SeedViolation),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// `{"vertices": [...], "edges": [[a, b], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// A graph with a name for each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub graph: Graph,
    pub names: Vec<String>,
}

impl NamedGraph {
    /// Vertices named by their indices.
    pub fn numbered(graph: Graph) -> Self {
        let names = (0..graph.vertex_count()).map(|v| v.to_string()).collect();
        NamedGraph { graph, names }
    }

    pub fn from_file(file: &GraphFile) -> Result<Self, FormatError> {
        let index = name_index(&file.vertices)?;
        let mut edges = Vec::with_capacity(file.edges.len());
        for [a, b] in &file.edges {
            let u = *index.get(a.as_str()).ok_or_else(|| FormatError::UnknownEndpoint(a.clone()))?;
            let v = *index.get(b.as_str()).ok_or_else(|| FormatError::UnknownEndpoint(b.clone()))?;
            if u == v {
                return Err(FormatError::SelfEdge(a.clone()));
            }
            edges.push((u, v));
        }
        let graph = Graph::new(file.vertices.len(), edges).expect("endpoints checked");
        Ok(NamedGraph { graph, names: file.vertices.clone() })
    }

    /// Vertices in index order, edges sorted.
    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            vertices: self.names.clone(),
            edges: self.graph.edges().iter().map(|&(u, v)| [self.names[u].clone(), self.names[v].clone()]).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Self::from_file(&serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("graph files serialize")
    }

    /// Undirected DOT; loops are implicit and omitted.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for name in &self.names {
            let _ = writeln!(out, "  {};", dot_id(name));
        }
        for &(u, v) in self.graph.edges() {
            let _ = writeln!(out, "  {} -- {};", dot_id(&self.names[u]), dot_id(&self.names[v]));
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

fn name_index(names: &[String]) -> Result<HashMap<&str, usize>, FormatError> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.as_str(), i).is_some() {
            return Err(FormatError::DuplicateVertex(n.clone()));
        }
    }
    Ok(index)
}

/// `{"gee": GraphFile, "labels": {...}, "actions": {...}}`. Actions may be
/// omitted when every vertex is labelled and the labels determine them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedFile {
    pub gee: GraphFile,
    pub labels: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actions: Option<BTreeMap<String, BTreeMap<String, String>>>,
}

/// A validated seed with the vertex names of its file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSeed {
    pub seed: FunctorSeed,
    pub names: Vec<String>,
}

impl NamedSeed {
    pub fn from_file(file: &SeedFile) -> Result<Self, FormatError> {
        let gee = NamedGraph::from_file(&file.gee)?;
        let index = name_index(&gee.names)?;
        for key in file.labels.keys() {
            if Label::from_key(key).is_none() {
                return Err(FormatError::UnknownLabelKey(key.clone()));
            }
        }
        let mut labels = [0usize; 4];
        for l in Label::ALL {
            let name = file.labels.get(l.key()).ok_or(FormatError::MissingLabel(l.key()))?;
            labels[l.index()] = *index
                .get(name.as_str())
                .ok_or_else(|| FormatError::UnknownLabelVertex(l.key().to_string(), name.clone()))?;
        }
        let seed = match &file.actions {
            None => FunctorSeed::from_labels(gee.graph, labels)?,
            Some(actions) => {
                for key in actions.keys() {
                    if Generator::from_key(key).is_none() {
                        return Err(FormatError::UnknownActionKey(key.clone()));
                    }
                }
                let mut out: [Vec<usize>; 6] = Default::default();
                for g in Generator::ALL {
                    let map = actions.get(g.key()).ok_or(FormatError::MissingAction(g.key()))?;
                    let mut images = Vec::with_capacity(gee.names.len());
                    for name in &gee.names {
                        let target =
                            map.get(name).ok_or_else(|| FormatError::IncompleteAction(g.key(), name.clone()))?;
                        images.push(
                            *index
                                .get(target.as_str())
                                .ok_or_else(|| FormatError::UnknownActionVertex(g.key(), target.clone()))?,
                        );
                    }
                    if let Some(extra) = map.keys().find(|k| !index.contains_key(k.as_str())) {
                        return Err(FormatError::UnknownActionVertex(g.key(), extra.clone()));
                    }
                    out[g.index()] = images;
                }
                FunctorSeed { gee: gee.graph, labels, actions: out }
            }
        };
        seed.validate()?;
        Ok(NamedSeed { seed, names: gee.names })
    }

    /// Omits the actions exactly when the labels reproduce them.
    pub fn to_file(&self) -> SeedFile {
        let gee = NamedGraph { graph: self.seed.gee.clone(), names: self.names.clone() };
        let labels =
            Label::ALL.iter().map(|&l| (l.key().to_string(), self.names[self.seed.label(l)].clone())).collect();
        let derived = FunctorSeed::from_labels(self.seed.gee.clone(), self.seed.labels).ok();
        let actions = (derived.as_ref() != Some(&self.seed)).then(|| {
            Generator::ALL
                .iter()
                .map(|&g| {
                    let map = self
                        .seed
                        .action(g)
                        .iter()
                        .enumerate()
                        .map(|(v, &w)| (self.names[v].clone(), self.names[w].clone()))
                        .collect();
                    (g.key().to_string(), map)
                })
                .collect()
        });
        SeedFile { gee: gee.to_file(), labels, actions }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Self::from_file(&serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("seed files serialize")
    }
}

pub fn read_text(path: &std::path::Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

pub fn read_graph(path: &std::path::Path) -> Result<NamedGraph, FormatError> {
    NamedGraph::parse(&read_text(path)?)
}

pub fn read_seed(path: &std::path::Path) -> Result<NamedSeed, FormatError> {
    NamedSeed::parse(&read_text(path)?)
}

/// The `*.json` files of a directory in name order.
pub fn json_files(dir: &std::path::Path) -> Result<Vec<std::path::PathBuf>, FormatError> {
    let io = |source| FormatError::Io { path: dir.display().to_string(), source };
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.extension().is_some_and(|e| e == "json") {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use reflex_core::graph::edge;
    use reflex_core::kan::box_seed;

    #[test]
    fn edge_file() {
        let g = NamedGraph::parse(r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#).unwrap();
        assert_eq!(g.graph, edge());
        assert_eq!(g.names, ["a", "b"]);
    }

    #[test]
    fn format_errors() {
        let err = |t: &str| NamedGraph::parse(t).unwrap_err().to_string();
        assert!(err(r#"{"vertices":["a"],"edges":[["a","a"]]}"#).contains("self-edge"));
        assert!(err(r#"{"vertices":["a","a"],"edges":[]}"#).contains("duplicate"));
        assert!(err(r#"{"vertices":["a"],"edges":[["a","z"]]}"#).contains("\"z\""));
        assert!(err(r#"{"vertices":["a"],"edges":[["a"]]}"#).contains("malformed"));
    }

    #[test]
    fn round_trip_sorts_edges() {
        let text = r#"{"vertices":["c","b","a"],"edges":[["a","c"],["b","c"]]}"#;
        let g = NamedGraph::parse(text).unwrap();
        let file = g.to_file();
        assert_eq!(file.edges, [["c", "b"], ["c", "a"]].map(|p| p.map(String::from)));
        assert_eq!(NamedGraph::parse(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn labels_only_seed() {
        let text = r#"{"gee":{"vertices":["ss","st","ts","tt"],
            "edges":[["ss","st"],["ss","ts"],["st","tt"],["ts","tt"]]},
            "labels":{"ss":"ss","st":"st","ts":"ts","tt":"tt"}}"#;
        let s = NamedSeed::parse(text).unwrap();
        assert_eq!(s.seed, box_seed());
        assert!(s.to_file().actions.is_none());
        assert_eq!(NamedSeed::parse(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn invalid_seed_names_the_invariant() {
        let text = r#"{"gee":{"vertices":["ss","st","ts","tt"],"edges":[]},
            "labels":{"ss":"ss","st":"st","ts":"ts","tt":"tt"}}"#;
        let e = NamedSeed::parse(text).unwrap_err().to_string();
        assert!(e.contains("must be equal or adjacent"), "{e}");
    }

    #[test]
    fn dot_omits_loops() {
        let g = NamedGraph::parse(r#"{"vertices":["a","b"],"edges":[["b","a"]]}"#).unwrap();
        assert_eq!(g.to_dot(), "graph G {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n");
    }
}
