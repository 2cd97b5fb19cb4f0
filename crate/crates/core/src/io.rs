//! Plain-text formats for graphs and subgroups, plus DOT export.
//!
//! A graph file names the alphabet, the basepoint (`-` for none), then
//! one line per edge in its positive orientation:
//!
//! ```text
//! alphabet: a b
//! basepoint: 0
//! edge 0 1 a
//! edge 1 0 b
//! ```
//!
//! A subgroup file is either a graph file (recognized by the
//! `basepoint:` line) or an `alphabet:` line followed by `gen <word>`
//! lines. Blank lines and `#` comments are ignored everywhere; parse
//! errors carry 1-based line numbers. Serialization requires
//! single-character lowercase letter names, so inverses can be written
//! as uppercase in words.

use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, Vertex};
use crate::subgroup::Subgroup;
use crate::word::Word;

/// Largest vertex id accepted from a file.
const MAX_FILE_VERTEX: u32 = 10_000_000;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Trimmed, nonempty, non-comment lines with their 1-based numbers.
fn content_lines(src: &str) -> Vec<(usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_alphabet(lines: &[(usize, &str)]) -> Result<Alphabet> {
    let Some(&(no, first)) = lines.first() else {
        return Err(parse_error(1, "empty file"));
    };
    let Some(rest) = first.strip_prefix("alphabet:") else {
        return Err(parse_error(no, "expected an `alphabet:` line"));
    };
    Alphabet::new(rest.split_whitespace().map(str::to_string))
        .map_err(|e| parse_error(no, e.to_string()))
}

/// Reads a graph file.
pub fn read_graph(src: &str) -> Result<LabeledGraph> {
    let lines = content_lines(src);
    let alphabet = parse_alphabet(&lines)?;
    let Some(&(no, bline)) = lines.get(1) else {
        return Err(parse_error(
            lines.first().map_or(1, |&(n, _)| n),
            "missing `basepoint:` line",
        ));
    };
    let Some(rest) = bline.strip_prefix("basepoint:") else {
        return Err(parse_error(no, "expected a `basepoint:` line"));
    };
    let rest = rest.trim();
    let basepoint: Option<Vertex> = if rest == "-" {
        None
    } else {
        let v: Vertex = rest
            .parse()
            .map_err(|_| parse_error(no, format!("bad basepoint `{rest}`")))?;
        if v > MAX_FILE_VERTEX {
            return Err(parse_error(no, "vertex id too large"));
        }
        Some(v)
    };

    let mut edges = Vec::new();
    let mut vertex_count = basepoint.map_or(0, |b| b + 1);
    for &(no, line) in &lines[2..] {
        let mut parts = line.split_whitespace();
        if parts.next() != Some("edge") {
            return Err(parse_error(no, "expected `edge <tail> <head> <letter>`"));
        }
        let mut endpoint = |what: &str| -> Result<Vertex> {
            let token = parts
                .next()
                .ok_or_else(|| parse_error(no, format!("missing {what}")))?;
            let v: Vertex = token
                .parse()
                .map_err(|_| parse_error(no, format!("bad {what} `{token}`")))?;
            if v > MAX_FILE_VERTEX {
                return Err(parse_error(no, "vertex id too large"));
            }
            Ok(v)
        };
        let tail = endpoint("tail")?;
        let head = endpoint("head")?;
        let name = parts
            .next()
            .ok_or_else(|| parse_error(no, "missing letter"))?;
        if parts.next().is_some() {
            return Err(parse_error(no, "trailing tokens after the letter"));
        }
        let letter = alphabet
            .get(name)
            .ok_or_else(|| parse_error(no, format!("unknown letter `{name}`")))?;
        vertex_count = vertex_count.max(tail + 1).max(head + 1);
        edges.push((tail, head, letter));
    }

    let mut g = LabeledGraph::with_vertices(alphabet, vertex_count as usize);
    for (tail, head, letter) in edges {
        g.add_edge(tail, head, letter);
    }
    g.set_basepoint(basepoint);
    Ok(g)
}

fn serializable_names(alphabet: &Alphabet) -> Result<()> {
    for letter in alphabet.letters() {
        let name = alphabet.name(letter);
        if !(name.len() == 1 && name.as_bytes()[0].is_ascii_lowercase()) {
            return Err(Error::Serialize(format!(
                "letter name `{name}` is not a single lowercase character"
            )));
        }
    }
    Ok(())
}

/// Writes a graph file: one `edge` line per edge, positively oriented, in
/// dart order. Trailing vertices that neither touch an edge nor carry the
/// basepoint have no representation and are rejected.
pub fn write_graph(g: &LabeledGraph) -> Result<String> {
    serializable_names(g.alphabet())?;
    let mut representable = g.basepoint().map_or(0, |b| b + 1);
    for d in 0..g.dart_count() as u32 {
        representable = representable.max(g.head(d) + 1);
    }
    if (representable as usize) < g.vertex_count() {
        return Err(Error::Serialize(
            "trailing isolated vertices cannot be represented".into(),
        ));
    }

    let mut out = format!("alphabet: {}\n", g.alphabet());
    match g.basepoint() {
        Some(b) => writeln!(out, "basepoint: {b}").expect("string write"),
        None => out.push_str("basepoint: -\n"),
    }
    for d in 0..g.dart_count() as u32 {
        let s = g.label(d);
        if !s.is_positive() {
            continue;
        }
        writeln!(
            out,
            "edge {} {} {}",
            g.tail(d),
            g.head(d),
            g.alphabet().name(s.letter())
        )
        .expect("string write");
    }
    Ok(out)
}

/// Reads a subgroup file in either format.
pub fn read_subgroup(src: &str) -> Result<Subgroup> {
    let lines = content_lines(src);
    if lines.len() >= 2 && lines[1].1.starts_with("basepoint:") {
        return Subgroup::from_graph(&read_graph(src)?);
    }
    let alphabet = parse_alphabet(&lines)?;
    let mut generators = Vec::new();
    for &(no, line) in lines.get(1..).unwrap_or(&[]) {
        let mut parts = line.split_whitespace();
        if parts.next() != Some("gen") {
            return Err(parse_error(no, "expected a `gen <word>` line"));
        }
        let text = parts
            .next()
            .ok_or_else(|| parse_error(no, "missing word after `gen`"))?;
        if parts.next().is_some() {
            return Err(parse_error(no, "trailing tokens after the word"));
        }
        let word = Word::parse(&alphabet, text).map_err(|e| parse_error(no, e.to_string()))?;
        generators.push(word);
    }
    Ok(Subgroup::from_generators(alphabet, &generators))
}

/// Writes a subgroup as `gen` lines over a free basis.
pub fn write_subgroup(h: &Subgroup) -> Result<String> {
    serializable_names(h.alphabet())?;
    let mut out = format!("alphabet: {}\n", h.alphabet());
    for w in h.basis() {
        writeln!(out, "gen {}", w.render(h.alphabet())?).expect("string write");
    }
    Ok(out)
}

/// Renders the graph in DOT: every vertex declared (basepoint as a double
/// circle), one arrow per edge in its positive orientation.
pub fn export_dot(g: &LabeledGraph) -> Result<String> {
    serializable_names(g.alphabet())?;
    let mut out = String::from("digraph stallings {\n  rankdir=LR;\n  node [shape=circle];\n");
    for v in g.vertices() {
        if Some(v) == g.basepoint() {
            writeln!(out, "  {v} [shape=doublecircle];").expect("string write");
        } else {
            writeln!(out, "  {v};").expect("string write");
        }
    }
    for d in 0..g.dart_count() as u32 {
        let s = g.label(d);
        if !s.is_positive() {
            continue;
        }
        writeln!(
            out,
            "  {} -> {} [label=\"{}\"];",
            g.tail(d),
            g.head(d),
            g.alphabet().name(s.letter())
        )
        .expect("string write");
    }
    out.push_str("}\n");
    Ok(out)
}
