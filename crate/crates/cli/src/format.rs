//! Line-oriented text formats for graphs, posets with arc sets, and chain
//! covers.
//!
//! ```text
//! graph 3          poset 4          # chain cover of a poset
//! edge 0 1         cover 0 2        chain 1 2
//! edge 1 2         cover 1 2        chain 0
//!                  arc 0 2          chain 3
//!                  arcs all-loops
//! ```
//!
//! Everything after `#` is a comment. Indices are 0-based.

use std::fmt::Write as _;

use distlat::{ArcSet, ChainCover, OrderError, Poset, ReflexiveGraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unknown keyword `{0}`")]
    UnknownKeyword(String),
    #[error("`{0}` is not a non-negative integer")]
    BadNumber(String),
    #[error("unexpected token `{0}`")]
    Trailing(String),
    #[error("index {index} out of range for {n} elements")]
    OutOfRange { index: usize, n: usize },
    #[error("loop edge {0} {0}: loops are implicit")]
    LoopEdge(usize),
    #[error("cover {0} {1} closes a cycle")]
    CoverCycle(usize, usize),
    #[error("({0}, {1}) is not a comparability of the poset")]
    NotComparable(usize, usize),
    #[error("input is empty")]
    Empty,
    #[error(transparent)]
    Order(OrderError),
}

/// 1-based line and column of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetFile {
    pub poset: Poset,
    pub arcs: ArcSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Graph(ReflexiveGraph),
    Poset(PosetFile),
}

#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            kind,
        }
    }

    fn number(&self) -> Result<usize, ParseError> {
        self.text
            .parse()
            .map_err(|_| self.error(ParseErrorKind::BadNumber(self.text.to_owned())))
    }

    fn index(&self, n: usize) -> Result<usize, ParseError> {
        let index = self.number()?;
        if index >= n {
            return Err(self.error(ParseErrorKind::OutOfRange { index, n }));
        }
        Ok(index)
    }
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    end: usize,
}

impl<'a> Line<'a> {
    fn keyword(&self) -> Token<'a> {
        self.tokens[0]
    }

    /// The `k`-th argument after the keyword.
    fn arg(&self, k: usize, what: &'static str) -> Result<Token<'a>, ParseError> {
        self.tokens.get(k + 1).copied().ok_or(ParseError {
            line: self.number,
            column: self.end + 1,
            kind: ParseErrorKind::Expected(what),
        })
    }

    fn finish(&self, args: usize) -> Result<(), ParseError> {
        match self.tokens.get(args + 1) {
            Some(t) => Err(t.error(ParseErrorKind::Trailing(t.text.to_owned()))),
            None => Ok(()),
        }
    }

    fn pair(&self, n: usize) -> Result<(Token<'a>, usize, usize), ParseError> {
        let a = self.arg(0, "an index")?;
        let b = self.arg(1, "a second index")?;
        self.finish(2)?;
        Ok((a, a.index(n)?, b.index(n)?))
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (at, ch) in body.char_indices().chain([(body.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(at),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..at],
                        line: k + 1,
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        let end = body.trim_end().chars().count();
        (!tokens.is_empty()).then_some(Line { number: k + 1, tokens, end })
    })
}

/// Parses either format, dispatching on the header keyword.
pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    let first = lines(text).next().ok_or(ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::Empty,
    })?;
    match first.keyword().text {
        "graph" => parse_graph(text).map(Input::Graph),
        "poset" => parse_poset(text).map(Input::Poset),
        other => Err(first.keyword().error(ParseErrorKind::UnknownKeyword(other.to_owned()))),
    }
}

fn header<'a>(lines: &mut impl Iterator<Item = Line<'a>>, keyword: &'static str) -> Result<usize, ParseError> {
    let first = lines.next().ok_or(ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::Expected(keyword),
    })?;
    if first.keyword().text != keyword {
        return Err(first.keyword().error(ParseErrorKind::Expected(keyword)));
    }
    let n = first.arg(0, "a vertex count")?.number()?;
    first.finish(1)?;
    Ok(n)
}

pub fn parse_graph(text: &str) -> Result<ReflexiveGraph, ParseError> {
    let mut it = lines(text);
    let n = header(&mut it, "graph")?;
    let mut graph = ReflexiveGraph::new(n);
    for line in it {
        let keyword = line.keyword();
        if keyword.text != "edge" {
            return Err(keyword.error(ParseErrorKind::UnknownKeyword(keyword.text.to_owned())));
        }
        let (at, u, v) = line.pair(n)?;
        if u == v {
            return Err(at.error(ParseErrorKind::LoopEdge(u)));
        }
        graph.add_edge(u, v);
    }
    Ok(graph)
}

enum ArcLine<'a> {
    One(Token<'a>, usize, usize),
    All,
    AllLoops,
}

pub fn parse_poset(text: &str) -> Result<PosetFile, ParseError> {
    let mut it = lines(text);
    let n = header(&mut it, "poset")?;
    let mut covers = Vec::new();
    let mut arc_lines = Vec::new();
    for line in it {
        let keyword = line.keyword();
        match keyword.text {
            "cover" => {
                let (at, a, b) = line.pair(n)?;
                covers.push((a, b));
                if a == b || Poset::from_covers(n, &covers).is_err() {
                    return Err(at.error(ParseErrorKind::CoverCycle(a, b)));
                }
            }
            "arc" => {
                let (at, x, y) = line.pair(n)?;
                arc_lines.push(ArcLine::One(at, x, y));
            }
            "arcs" => {
                let which = line.arg(0, "`all` or `all-loops`")?;
                line.finish(1)?;
                arc_lines.push(match which.text {
                    "all" => ArcLine::All,
                    "all-loops" => ArcLine::AllLoops,
                    other => return Err(which.error(ParseErrorKind::UnknownKeyword(other.to_owned()))),
                });
            }
            other => return Err(keyword.error(ParseErrorKind::UnknownKeyword(other.to_owned()))),
        }
    }
    let poset = Poset::from_covers(n, &covers).map_err(|e| ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::Order(e),
    })?;
    let mut arcs = ArcSet::empty(n);
    for arc in arc_lines {
        match arc {
            ArcLine::One(at, x, y) => {
                if !poset.leq(x, y) {
                    return Err(at.error(ParseErrorKind::NotComparable(x, y)));
                }
                arcs.insert(x, y);
            }
            ArcLine::All => {
                for (x, y) in poset.comparabilities() {
                    arcs.insert(x, y);
                }
            }
            ArcLine::AllLoops => {
                for x in 0..n {
                    arcs.insert(x, x);
                }
            }
        }
    }
    Ok(PosetFile { poset, arcs })
}

/// One `chain` line per chain, elements listed bottom to top.
pub fn parse_cover(text: &str, poset: &Poset) -> Result<ChainCover, ParseError> {
    let n = poset.len();
    let mut chains = Vec::new();
    let mut last = (1, 1);
    for line in lines(text) {
        let keyword = line.keyword();
        if keyword.text != "chain" {
            return Err(keyword.error(ParseErrorKind::UnknownKeyword(keyword.text.to_owned())));
        }
        let chain = line.tokens[1..]
            .iter()
            .map(|t| t.index(n))
            .collect::<Result<Vec<_>, _>>()?;
        if chain.is_empty() {
            line.arg(0, "an element")?;
        }
        for (k, w) in chain.windows(2).enumerate() {
            if !poset.lt(w[0], w[1]) {
                return Err(line.tokens[k + 2].error(ParseErrorKind::NotComparable(w[0], w[1])));
            }
        }
        chains.push(chain);
        last = (line.number, 1);
    }
    ChainCover::new(poset, chains).map_err(|e| ParseError {
        line: last.0,
        column: last.1,
        kind: ParseErrorKind::Order(e),
    })
}

pub fn emit_graph(graph: &ReflexiveGraph) -> String {
    let mut out = format!("graph {}\n", graph.len());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "edge {u} {v}");
    }
    out
}

/// Covers, then the arc set in its shortest exact spelling.
pub fn emit_poset(file: &PosetFile) -> String {
    let PosetFile { poset, arcs } = file;
    let mut out = format!("poset {}\n", poset.len());
    for (a, b) in poset.covers() {
        let _ = writeln!(out, "cover {a} {b}");
    }
    if !poset.is_empty() && *arcs == ArcSet::all(poset) {
        out.push_str("arcs all\n");
        return out;
    }
    let all_loops = !poset.is_empty() && (0..poset.len()).all(|x| arcs.contains(x, x));
    if all_loops {
        out.push_str("arcs all-loops\n");
    }
    for (x, y) in arcs.iter() {
        if x != y || !all_loops {
            let _ = writeln!(out, "arc {x} {y}");
        }
    }
    out
}

pub fn emit_cover(cover: &ChainCover) -> String {
    let mut out = String::new();
    for chain in cover.chains() {
        out.push_str("chain");
        for x in chain {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_pair() {
        assert_eq!(parse_graph("graph 2\nedge 0 1").unwrap(), ReflexiveGraph::complete(2));
    }

    #[test]
    fn out_of_range_edge() {
        let e = parse_graph("graph 2\nedge 0 5").unwrap_err();
        assert_eq!((e.line, e.column), (2, 8));
        assert_eq!(e.kind, ParseErrorKind::OutOfRange { index: 5, n: 2 });
    }

    #[test]
    fn sample_file() {
        let text = "poset 4\ncover 0 2\ncover 1 2\ncover 1 3\narc 0 2\narc 1 3\narcs all-loops";
        let Input::Poset(f) = parse_input(text).unwrap() else { panic!("not a poset") };
        let mut expected = ArcSet::all(&f.poset);
        expected.remove(1, 2);
        assert_eq!(f.arcs, expected);
        assert_eq!(f.poset.covers(), vec![(0, 2), (1, 2), (1, 3)]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# a path\n\ngraph 3 # three vertices\nedge 0 1\n   edge 1 2 # done\n").unwrap();
        assert_eq!(g, ReflexiveGraph::path(3));
    }

    #[test]
    fn syntax_errors_point_at_tokens() {
        let e = parse_graph("graph 3\nedge 0 1 2").unwrap_err();
        assert_eq!((e.line, e.column), (2, 10));
        let e = parse_graph("graph 3\nedge 0").unwrap_err();
        assert_eq!((e.line, e.column, e.kind), (2, 7, ParseErrorKind::Expected("a second index")));
        let e = parse_graph("graph x").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadNumber("x".into()));
        let e = parse_graph("graph 3\nedge 1 1").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::LoopEdge(1));
        let e = parse_input("lattice 3").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownKeyword("lattice".into()));
        assert_eq!(parse_input("  # nothing\n").unwrap_err().kind, ParseErrorKind::Empty);
    }

    #[test]
    fn cover_cycle() {
        let e = parse_poset("poset 3\ncover 0 1\ncover 1 2\ncover 2 0").unwrap_err();
        assert_eq!((e.line, e.kind), (4, ParseErrorKind::CoverCycle(2, 0)));
    }

    #[test]
    fn arcs_must_be_comparabilities() {
        let e = parse_poset("poset 2\narc 0 1").unwrap_err();
        assert_eq!((e.line, e.column, e.kind), (2, 5, ParseErrorKind::NotComparable(0, 1)));
        let f = parse_poset("poset 2\ncover 0 1\narcs all").unwrap();
        assert_eq!(f.arcs.len(), 3);
    }

    #[test]
    fn cover_files() {
        let p = parse_poset("poset 4\ncover 0 2\ncover 1 2\ncover 1 3").unwrap().poset;
        let c = parse_cover("chain 1 2\nchain 0\nchain 3\n", &p).unwrap();
        assert_eq!(c.chains(), &[vec![1, 2], vec![0], vec![3]]);
        assert_eq!(parse_cover(&emit_cover(&c), &p).unwrap(), c);
        let e = parse_cover("chain 0 1\n", &p).unwrap_err();
        assert_eq!((e.column, e.kind), (9, ParseErrorKind::NotComparable(0, 1)));
        assert!(matches!(
            parse_cover("chain 0 2\n", &p).unwrap_err().kind,
            ParseErrorKind::Order(OrderError::Uncovered { element: 1 })
        ));
    }

    #[test]
    fn emitted_poset_spellings() {
        let f = parse_poset("poset 2\ncover 0 1\narcs all").unwrap();
        assert_eq!(emit_poset(&f), "poset 2\ncover 0 1\narcs all\n");
        let f = parse_poset("poset 2\ncover 0 1\narc 0 0").unwrap();
        assert_eq!(emit_poset(&f), "poset 2\ncover 0 1\narc 0 0\n");
    }
}
