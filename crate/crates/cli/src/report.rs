//! JSON documents written by the commands, and DOT rendering.

use std::fmt::Write as _;

use distlat::compat::{check_compatible, check_hasse_subgraph, check_identities, majority_from_lattice};
use distlat::embed::{EdgeBlock, Embedding, Obstruction, VertexInterval};
use distlat::{CompatError, Downset, Lattice, RecognitionResult, ReflexiveGraph};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeJson {
    pub elements: usize,
    pub zero: usize,
    pub one: usize,
    /// `[x, y]` for each cover `x ≺ y`.
    pub covers: Vec<(usize, usize)>,
}

impl From<&Lattice> for LatticeJson {
    fn from(l: &Lattice) -> Self {
        Self {
            elements: l.len(),
            zero: l.zero(),
            one: l.one(),
            covers: l.covers(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognizeReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl From<&RecognitionResult> for RecognizeReport {
    fn from(r: &RecognitionResult) -> Self {
        match r {
            RecognitionResult::Yes(l) => Self {
                verdict: Verdict::Yes,
                lattice: Some(l.into()),
                reason: None,
            },
            RecognitionResult::No(reason) => Self {
                verdict: Verdict::No,
                lattice: None,
                reason: Some(reason.to_string()),
            },
            RecognitionResult::Inconclusive(reason) => Self {
                verdict: Verdict::Inconclusive,
                lattice: None,
                reason: Some(reason.to_string()),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub edges: [(usize, usize); 2],
    pub operation: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub compatible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub distributive: bool,
    pub min_max_identity: bool,
    pub vee_identity: bool,
    pub hasse_subgraph: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub majority_polymorphism: Option<bool>,
    /// For `G(P, A)` inputs: whether the arcs read back from the graph
    /// normalise to the same set as `A`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arcs_recovered: Option<bool>,
}

impl VerifyReport {
    /// Graph and lattice must have the same size.
    pub fn new(graph: &ReflexiveGraph, lattice: &Lattice, majority: bool) -> Self {
        let counterexample = match check_compatible(graph, lattice) {
            Err(CompatError::NotPreserved { u, u2, v, v2, meet }) => Some(Counterexample {
                edges: [(u, u2), (v, v2)],
                operation: if meet { "meet" } else { "join" },
            }),
            _ => None,
        };
        let identities = check_identities(graph, lattice).expect("sizes match");
        Self {
            compatible: counterexample.is_none(),
            counterexample,
            distributive: lattice.is_distributive(),
            min_max_identity: identities.min_max.is_ok(),
            vee_identity: identities.vee.is_ok(),
            hasse_subgraph: check_hasse_subgraph(graph, lattice),
            majority_polymorphism: majority.then(|| majority_from_lattice(lattice).is_polymorphism(graph)),
            arcs_recovered: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegionJson {
    pub alpha: usize,
    pub i: usize,
    pub beta: usize,
    pub j: usize,
}

impl From<&VertexInterval> for RegionJson {
    fn from(v: &VertexInterval) -> Self {
        Self {
            alpha: v.alpha,
            i: v.i,
            beta: v.beta,
            j: v.j,
        }
    }
}

impl From<&EdgeBlock> for RegionJson {
    fn from(e: &EdgeBlock) -> Self {
        Self {
            alpha: e.alpha,
            i: e.i,
            beta: e.beta,
            j: e.j,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&ReflexiveGraph> for GraphJson {
    fn from(g: &ReflexiveGraph) -> Self {
        Self {
            vertices: g.len(),
            edges: g.edges().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateJson {
    pub vertex: usize,
    pub downset: Vec<usize>,
    pub tuple: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub chains: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    pub coordinates: Vec<CoordinateJson>,
    pub factors: Vec<GraphJson>,
    pub removed_vertices: Vec<RegionJson>,
    pub removed_edges: Vec<RegionJson>,
    pub tight: bool,
    pub induced: bool,
    pub nontight_cover_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contractions: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstructions: Option<Vec<(usize, usize)>>,
}

impl EmbeddingReport {
    pub fn new(emb: &Embedding) -> Self {
        Self {
            chains: emb.cover.chains().to_vec(),
            sizes: emb.product.sizes().to_vec(),
            coordinates: emb
                .downsets
                .iter()
                .zip(&emb.coords)
                .enumerate()
                .map(|(vertex, (d, x))| CoordinateJson {
                    vertex,
                    downset: d.elements().collect(),
                    tuple: x.clone(),
                })
                .collect(),
            factors: emb.factors.iter().map(GraphJson::from).collect(),
            removed_vertices: emb.removed_vertices.iter().map(RegionJson::from).collect(),
            removed_edges: emb.removed_edges.iter().map(RegionJson::from).collect(),
            tight: emb.tight,
            induced: emb.induced,
            nontight_cover_count: emb.nontight_cover_count,
            contractions: None,
            obstructions: None,
        }
    }

    pub fn with_tightening(mut self, contractions: &[(usize, usize)], obstructions: &[Obstruction]) -> Self {
        self.contractions = Some(contractions.to_vec());
        self.obstructions = Some(obstructions.iter().map(|o| (o.factor, o.position)).collect());
        self
    }
}

pub fn downset_label(d: Downset) -> String {
    let inner: Vec<String> = d.elements().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialise");
    s.push('\n');
    s
}

/// Undirected DOT. Graph edges are thin; lattice covers are drawn thick
/// and light, dashed when they are not graph edges.
pub fn dot(graph: &ReflexiveGraph, lattice: Option<&Lattice>, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..graph.len() {
        match labels {
            Some(l) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", l[v]);
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    let covers = lattice.map(Lattice::covers).unwrap_or_default();
    let is_cover = |u: usize, v: usize| covers.contains(&(u, v)) || covers.contains(&(v, u));
    for (u, v) in graph.edges() {
        if is_cover(u, v) {
            let _ = writeln!(out, "  {u} -- {v} [penwidth=4, color=\"gray70\"];");
        } else {
            let _ = writeln!(out, "  {u} -- {v} [penwidth=1];");
        }
    }
    for &(x, y) in &covers {
        if !graph.adjacent(x, y) {
            let _ = writeln!(out, "  {x} -- {y} [penwidth=4, color=\"gray70\", style=dashed];");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_marks_covers() {
        let g = ReflexiveGraph::path(3);
        let s = dot(&g, Some(&Lattice::chain(3)), None);
        assert_eq!(s.matches("penwidth=4").count(), 2);
        let s = dot(&ReflexiveGraph::new(2), Some(&Lattice::chain(2)), Some(&["a".into(), "b".into()]));
        assert!(s.contains("style=dashed") && s.contains("label=\"b\""));
    }

    #[test]
    fn verify_report_on_twisted_chain() {
        let l = Lattice::chain(3).relabeled(&[0, 2, 1]);
        let r = VerifyReport::new(&ReflexiveGraph::path(3), &l, true);
        assert!(!r.compatible && !r.hasse_subgraph);
        assert_eq!(r.counterexample.unwrap().edges, [(0, 1), (1, 2)]);
    }

    #[test]
    fn recognize_json_shape() {
        let r = RecognizeReport::from(&RecognitionResult::Yes(Lattice::chain(2)));
        let v: serde_json::Value = serde_json::from_str(&to_json(&r)).unwrap();
        assert_eq!(v["verdict"], "yes");
        assert_eq!(v["lattice"]["covers"][0][1], 1);
        assert!(v.get("reason").is_none());
    }
}
