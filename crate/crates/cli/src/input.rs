//! Input parsing: the ideal DSL and structured graph documents.
//!
//! Ideal DSL (version 1):
//!
//! ```text
//! # comment to end of line
//! format 1;                 # optional
//! ring x y z;
//! ideal y^2*z, z^3, y^2*x;
//! ```
//!
//! A generator is a `*`-separated product of `var(^exp)?` factors; the
//! literal `1` denotes the unit monomial and a literal `0` generator is
//! dropped (so `ideal 0;` is the zero ideal). Graph documents are JSON with
//! `vertices` and `edges`, plus optional `directed` and `weights` for
//! weighted oriented graphs.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;
use vnum_core::{Graph, Monomial, MonomialIdeal, Ring, WeightedOrientedGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub col: usize,
}

impl ParseError {
    fn new(message: impl Into<String>, line: usize, col: usize) -> ParseError {
        ParseError {
            message: message.into(),
            line,
            col,
        }
    }

    /// Errors from document-level validation, where no position applies.
    fn whole(message: impl Into<String>) -> ParseError {
        ParseError::new(message, 1, 1)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}:{}", self.message, self.line, self.col)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug)]
pub enum InputDocument {
    Ideal(MonomialIdeal),
    Graph(Graph),
    Weighted(WeightedOrientedGraph),
}

/// Dispatches on the document shape: JSON documents open with `{`,
/// everything else is the ideal DSL.
pub fn parse_input(text: &str) -> Result<InputDocument, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_graph(text)
    } else {
        let (_, ideal) = parse_ideal(text)?;
        Ok(InputDocument::Ideal(ideal))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Ident(String),
    Int(String),
    Star,
    Caret,
    Comma,
    Semi,
    Minus,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut advance = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            advance(&mut chars);
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                advance(&mut chars);
                if c == '\n' {
                    break;
                }
            }
            continue;
        }
        let kind = if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(advance(&mut chars));
                } else {
                    break;
                }
            }
            TokenKind::Ident(word)
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(advance(&mut chars));
                } else {
                    break;
                }
            }
            TokenKind::Int(digits)
        } else {
            advance(&mut chars);
            match c {
                '*' => TokenKind::Star,
                '^' => TokenKind::Caret,
                ',' => TokenKind::Comma,
                ';' => TokenKind::Semi,
                '-' => TokenKind::Minus,
                _ => {
                    return Err(ParseError::new(
                        format!("unexpected character `{c}`"),
                        tline,
                        tcol,
                    ))
                }
            }
        };
        tokens.push(Token {
            kind,
            line: tline,
            col: tcol,
        });
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map(|t| (t.line, t.col)).unwrap_or(self.end)
    }

    fn expect_ident_word(&mut self, word: &str) -> Result<(), ParseError> {
        let (line, col) = self.here();
        match self.next() {
            Some(Token {
                kind: TokenKind::Ident(w),
                ..
            }) if w == word => Ok(()),
            _ => Err(ParseError::new(format!("expected `{word}`"), line, col)),
        }
    }

    fn expect_semi(&mut self) -> Result<(), ParseError> {
        let (line, col) = self.here();
        match self.next() {
            Some(Token {
                kind: TokenKind::Semi,
                ..
            }) => Ok(()),
            _ => Err(ParseError::new("expected `;`", line, col)),
        }
    }
}

/// Parses the ideal DSL into its ring and canonical (minimalized) ideal.
pub fn parse_ideal(text: &str) -> Result<(Ring, MonomialIdeal), ParseError> {
    let tokens = lex(text)?;
    let last_line = text.lines().count().max(1);
    let end = (last_line, text.lines().last().map_or(1, |l| l.chars().count() + 1));
    let mut p = Parser {
        tokens,
        pos: 0,
        end,
    };

    // Optional `format N;` header.
    if let Some(Token {
        kind: TokenKind::Ident(w),
        ..
    }) = p.peek()
    {
        if w == "format" {
            p.next();
            let (line, col) = p.here();
            match p.next() {
                Some(Token {
                    kind: TokenKind::Int(n),
                    ..
                }) if n == "1" => {}
                _ => {
                    return Err(ParseError::new("unsupported format version", line, col));
                }
            }
            p.expect_semi()?;
        }
    }

    p.expect_ident_word("ring")?;
    let mut names: Vec<(String, usize, usize)> = Vec::new();
    loop {
        match p.peek() {
            Some(Token {
                kind: TokenKind::Ident(_),
                ..
            }) => {
                let t = p.next().unwrap();
                if let TokenKind::Ident(name) = t.kind {
                    if names.iter().any(|(n, _, _)| *n == name) {
                        return Err(ParseError::new(
                            format!("duplicate variable {name}"),
                            t.line,
                            t.col,
                        ));
                    }
                    names.push((name, t.line, t.col));
                }
            }
            Some(Token {
                kind: TokenKind::Semi,
                ..
            }) => {
                p.next();
                break;
            }
            _ => {
                let (line, col) = p.here();
                return Err(ParseError::new("expected variable name or `;`", line, col));
            }
        }
    }
    if names.is_empty() {
        return Err(ParseError::new("ring needs at least one variable", 1, 1));
    }
    let ring = Ring::new(names.iter().map(|(n, _, _)| n.clone()))
        .expect("duplicates already rejected");

    p.expect_ident_word("ideal")?;
    let mut gens: Vec<Monomial> = Vec::new();
    let mut saw_generator = false;
    loop {
        match p.peek().map(|t| t.kind.clone()) {
            Some(TokenKind::Semi) => {
                let (line, col) = p.here();
                p.next();
                if !saw_generator {
                    return Err(ParseError::new("empty generator list", line, col));
                }
                break;
            }
            Some(_) => {
                let gen = parse_generator(&mut p, &ring)?;
                saw_generator = true;
                if let Some(m) = gen {
                    gens.push(m);
                }
                match p.peek().map(|t| t.kind.clone()) {
                    Some(TokenKind::Comma) => {
                        p.next();
                    }
                    Some(TokenKind::Semi) => {}
                    _ => {
                        let (line, col) = p.here();
                        return Err(ParseError::new("expected `,` or `;`", line, col));
                    }
                }
            }
            None => {
                let (line, col) = p.here();
                return Err(ParseError::new("expected `;`", line, col));
            }
        }
    }
    if let Some(t) = p.peek() {
        return Err(ParseError::new("trailing input", t.line, t.col));
    }
    Ok((ring.clone(), MonomialIdeal::new(ring, gens)))
}

/// One generator; `None` for the literal `0`.
fn parse_generator(p: &mut Parser, ring: &Ring) -> Result<Option<Monomial>, ParseError> {
    if let Some(Token {
        kind: TokenKind::Int(n),
        ..
    }) = p.peek()
    {
        if n == "0" {
            p.next();
            return Ok(None);
        }
    }
    let mut exps = vec![0u32; ring.arity()];
    loop {
        parse_factor(p, ring, &mut exps)?;
        if let Some(Token {
            kind: TokenKind::Star,
            ..
        }) = p.peek()
        {
            p.next();
        } else {
            break;
        }
    }
    Ok(Some(ring.monomial(&exps)))
}

fn parse_factor(p: &mut Parser, ring: &Ring, exps: &mut [u32]) -> Result<(), ParseError> {
    let (line, col) = p.here();
    match p.next() {
        Some(Token {
            kind: TokenKind::Int(n),
            ..
        }) if n == "1" => Ok(()),
        Some(Token {
            kind: TokenKind::Int(n),
            ..
        }) if n == "0" => Err(ParseError::new("zero factor", line, col)),
        Some(Token {
            kind: TokenKind::Ident(name),
            ..
        }) => {
            let index = ring.index_of(&name).ok_or_else(|| {
                ParseError::new(format!("unknown variable {name}"), line, col)
            })?;
            let exp = if let Some(Token {
                kind: TokenKind::Caret,
                ..
            }) = p.peek()
            {
                p.next();
                let (eline, ecol) = p.here();
                match p.next() {
                    Some(Token {
                        kind: TokenKind::Minus,
                        ..
                    }) => {
                        return Err(ParseError::new("negative exponent", eline, ecol));
                    }
                    Some(Token {
                        kind: TokenKind::Int(digits),
                        ..
                    }) => {
                        let value: u32 = digits.parse().map_err(|_| {
                            ParseError::new("exponent too large", eline, ecol)
                        })?;
                        if value == 0 {
                            return Err(ParseError::new("zero exponent", eline, ecol));
                        }
                        value
                    }
                    _ => return Err(ParseError::new("expected exponent", eline, ecol)),
                }
            } else {
                1
            };
            exps[index] += exp;
            Ok(())
        }
        _ => Err(ParseError::new("expected monomial factor", line, col)),
    }
}

/// Canonical DSL emission; re-parsing yields an identical canonical ideal.
pub fn ideal_to_dsl(ideal: &MonomialIdeal) -> String {
    let ring = ideal.ring();
    let gens = if ideal.is_zero() {
        "0".to_string()
    } else {
        ideal
            .gens()
            .iter()
            .map(|g| ring.display(g))
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!("ring {}; ideal {};", ring.names().join(" "), gens)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    format: Option<u32>,
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
    #[serde(default)]
    directed: bool,
    weights: Option<BTreeMap<String, i64>>,
}

/// Parses and validates a JSON graph document into a simple or weighted
/// oriented graph.
pub fn parse_graph(text: &str) -> Result<InputDocument, ParseError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| {
        ParseError::new(format!("invalid graph document: {e}"), e.line(), e.column())
    })?;
    if let Some(v) = doc.format {
        if v != 1 {
            return Err(ParseError::whole(format!("unsupported format version {v}")));
        }
    }
    for (i, name) in doc.vertices.iter().enumerate() {
        if doc.vertices[..i].contains(name) {
            return Err(ParseError::whole(format!("duplicate vertex {name}")));
        }
    }
    let index_of = |name: &str| -> Result<usize, ParseError> {
        doc.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| ParseError::whole(format!("unknown vertex {name}")))
    };
    let mut arcs = Vec::with_capacity(doc.edges.len());
    for (a, b) in &doc.edges {
        let ia = index_of(a)?;
        let ib = index_of(b)?;
        if ia == ib {
            return Err(ParseError::whole(format!("loop edge at {a}")));
        }
        arcs.push((ia, ib));
    }
    {
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &arcs {
            let key = if doc.directed { (a, b) } else { (a.min(b), a.max(b)) };
            if !seen.insert(key) {
                return Err(ParseError::whole(format!(
                    "duplicate edge {} - {}",
                    doc.vertices[a], doc.vertices[b]
                )));
            }
        }
    }
    if !doc.directed && doc.weights.is_some() {
        return Err(ParseError::whole(
            "weights require a directed graph".to_string(),
        ));
    }

    let mut undirected = arcs.clone();
    undirected.sort_unstable_by_key(|&(a, b)| (a.min(b), a.max(b)));
    undirected.dedup_by_key(|&mut (a, b)| (a.min(b), a.max(b)));
    let graph = Graph::new(doc.vertices.clone(), &undirected)
        .map_err(|e| ParseError::whole(e.to_string()))?;

    if !doc.directed {
        return Ok(InputDocument::Graph(graph));
    }

    let mut weights = vec![1u32; doc.vertices.len()];
    if let Some(ws) = &doc.weights {
        for (name, &w) in ws {
            let idx = index_of(name)?;
            if w < 1 {
                return Err(ParseError::whole(format!(
                    "weight of {name} must be at least 1"
                )));
            }
            weights[idx] = w as u32;
        }
    }
    let wog = WeightedOrientedGraph::new(graph, arcs, weights)
        .map_err(|e| ParseError::whole(e.to_string()))?;
    Ok(InputDocument::Weighted(wog))
}

/// Parses an `--edges` multiset flag: comma-separated `a-b` pairs with
/// repetition, resolved against the graph's vertex names.
pub fn parse_edge_multiset(
    graph: &Graph,
    spec: &str,
) -> Result<Vec<(usize, usize)>, ParseError> {
    let mut edges = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        let (a, b) = part.split_once('-').ok_or_else(|| {
            ParseError::whole(format!("expected `a-b` edge, got `{part}`"))
        })?;
        let ring = graph.ring();
        let ia = ring
            .index_of(a.trim())
            .ok_or_else(|| ParseError::whole(format!("unknown vertex {}", a.trim())))?;
        let ib = ring
            .index_of(b.trim())
            .ok_or_else(|| ParseError::whole(format!("unknown vertex {}", b.trim())))?;
        if !graph.has_edge(ia, ib) {
            return Err(ParseError::whole(format!("{part} is not an edge")));
        }
        edges.push((ia, ib));
    }
    if edges.is_empty() {
        return Err(ParseError::whole("empty edge multiset".to_string()));
    }
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_multi_generator_ideal() {
        let (ring, ideal) = parse_ideal("ring x y z; ideal y^2*z, z^3, y^2*x;").unwrap();
        assert_eq!(ring.names(), &["x", "y", "z"]);
        assert_eq!(ideal.num_generators(), 3);
        assert!(ideal.gens().contains(&ring.monomial(&[0, 2, 1])));
    }

    #[test]
    fn parses_single_variable() {
        let (ring, ideal) = parse_ideal("ring x; ideal x;").unwrap();
        assert_eq!(ideal.gens(), &[ring.var(0)]);
    }

    #[test]
    fn unknown_variable_has_position() {
        let err = parse_ideal("ring x; ideal y;").unwrap_err();
        assert_eq!(err.to_string(), "unknown variable y at 1:15");
    }

    #[test]
    fn exponent_errors() {
        assert!(parse_ideal("ring x; ideal x^0;")
            .unwrap_err()
            .message
            .contains("zero exponent"));
        assert!(parse_ideal("ring x; ideal x^-2;")
            .unwrap_err()
            .message
            .contains("negative exponent"));
        assert!(parse_ideal("ring x; ideal ;")
            .unwrap_err()
            .message
            .contains("empty generator list"));
    }

    #[test]
    fn comments_and_format_header() {
        let text = "# fixture\nformat 1;\nring x y; # vars\nideal x*y, x^2;";
        let (_, ideal) = parse_ideal(text).unwrap();
        assert_eq!(ideal.num_generators(), 2);
        assert!(parse_ideal("format 2; ring x; ideal x;").is_err());
    }

    #[test]
    fn zero_and_unit_ideals_round_trip() {
        let (_, zero) = parse_ideal("ring x y; ideal 0;").unwrap();
        assert!(zero.is_zero());
        let (_, unit) = parse_ideal("ring x y; ideal 1;").unwrap();
        assert!(unit.is_unit());
        for text in ["ring x y; ideal 0;", "ring x y; ideal 1;", "ring x y; ideal x*y, x^2;"] {
            let (_, ideal) = parse_ideal(text).unwrap();
            let emitted = ideal_to_dsl(&ideal);
            let (_, reparsed) = parse_ideal(&emitted).unwrap();
            assert_eq!(ideal, reparsed);
        }
    }

    #[test]
    fn witness_strings_reverify_through_the_parser() {
        let (ring, ideal) = parse_ideal("ring x y z; ideal y^2*z, z^3, y^2*x;").unwrap();
        let w = vnum_core::v_number(&ideal, &vnum_core::Limits::DEFAULT).unwrap();
        let rendered = ring.display(&w.monomial);
        let (_, reparsed) = parse_ideal(&format!("ring x y z; ideal {rendered};")).unwrap();
        assert_eq!(reparsed.gens(), &[w.monomial.clone()]);
        assert!(w.verify(&ideal));
    }

    #[test]
    fn graph_document_validation() {
        let ok = r#"{"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]}"#;
        match parse_graph(ok).unwrap() {
            InputDocument::Graph(g) => assert_eq!(g.edge_count(), 2),
            _ => panic!("expected simple graph"),
        }
        let loop_edge = r#"{"vertices": ["a"], "edges": [["a", "a"]]}"#;
        assert!(parse_graph(loop_edge).unwrap_err().message.contains("loop"));
        let dup = r#"{"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]}"#;
        assert!(parse_graph(dup).unwrap_err().message.contains("duplicate edge"));
        let unknown = r#"{"vertices": ["a"], "edges": [["a", "z"]]}"#;
        assert!(parse_graph(unknown).unwrap_err().message.contains("unknown vertex"));
        let bad_weight =
            r#"{"vertices": ["a", "b"], "edges": [["a", "b"]], "directed": true, "weights": {"b": 0}}"#;
        assert!(parse_graph(bad_weight).unwrap_err().message.contains("at least 1"));
    }

    #[test]
    fn weighted_document() {
        let text = r#"{
            "format": 1,
            "vertices": ["x", "y"],
            "edges": [["x", "y"]],
            "directed": true,
            "weights": {"y": 2}
        }"#;
        match parse_graph(text).unwrap() {
            InputDocument::Weighted(d) => {
                assert_eq!(d.weight(1), 2);
                assert_eq!(d.arcs(), &[(0, 1)]);
            }
            _ => panic!("expected weighted graph"),
        }
    }
}
