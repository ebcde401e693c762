//! Text interchange: graph6, edge lists and cycle certificates.
//!
//! graph6 follows the nauty/geng format: a size prefix, then the upper
//! triangle of the adjacency matrix column by column (`(0,1), (0,2), (1,2),
//! (0,3), ...`) packed six bits per printable byte, each offset by 63.

use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::solvers::CyclePacking;

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(skip + i, format!("byte {b:#04x} outside the graph6 range")));
        }
    }
    let (n, header_len) = decode_size(body).map_err(|(off, msg)| parse_err(skip + off, msg))?;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != expected {
        return Err(parse_err(
            skip + header_len + data.len().min(expected),
            format!("expected {expected} adjacency bytes for n={n}, found {}", data.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut pos = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = data[pos / 6] - 63;
            if byte >> (5 - pos % 6) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
            if pos == pairs {
                break 'outer;
            }
        }
    }
    if pairs % 6 != 0 {
        let last = data[data.len() - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(parse_err(skip + header_len + data.len() - 1, "non-zero padding bits"));
        }
    }
    Graph::new(n, edges)
}

fn decode_size(body: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let first = *body.first().ok_or((0, "empty graph6 string".to_string()))?;
    if first != 126 {
        return Ok(((first - 63) as usize, 1));
    }
    let wide = body.get(1) == Some(&126);
    let (start, digits) = if wide { (2, 6) } else { (1, 3) };
    if body.len() < start + digits {
        return Err((body.len(), "truncated size prefix".to_string()));
    }
    let n = body[start..start + digits].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    Ok((n, start + digits))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

/// One graph per non-blank line; errors carry their 1-based line number.
pub fn graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(line_err(i + 1, e.to_string()))),
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(parse_graph6(l.trim()).map_err(|e| line_err(i + 1, e.to_string()))),
    })
}

fn line_err(line: usize, message: impl Into<String>) -> Error {
    Error::ParseLine { line, message: message.into() }
}

/// Content lines with their 1-based line numbers; `#` comments and blank
/// lines are skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = parts.next().ok_or_else(|| line_err(line_no, "expected two integers"))?;
        tok.parse().map_err(|_| line_err(line_no, format!("not a non-negative integer: {tok:?}")))
    };
    let pair = (next()?, next()?);
    if parts.next().is_some() {
        return Err(line_err(line_no, "expected exactly two integers"));
    }
    Ok(pair)
}

/// Parses `n m` followed by `m` lines `u v` (0-indexed).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| line_err(1, "missing \"n m\" header"))?;
    let (n, m) = parse_pair(line_no, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(line_err(line_no, format!("more than the declared {m} edges")));
        }
        let (u, v) = parse_pair(line_no, line)?;
        if u >= n || v >= n {
            return Err(line_err(line_no, format!("vertex {} out of range for n={n}", u.max(v))));
        }
        if u == v {
            return Err(line_err(line_no, format!("loop edge at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(line_err(text.lines().count().max(1), format!("declared {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// One cycle per line, vertices in cyclic order.
pub fn parse_certificate(text: &str) -> Result<CyclePacking> {
    let mut cycles = Vec::new();
    for (line_no, line) in content_lines(text) {
        let cycle: Vec<Vertex> = line
            .split_whitespace()
            .map(|tok| tok.parse().map_err(|_| line_err(line_no, format!("not a vertex id: {tok:?}"))))
            .collect::<Result<_>>()?;
        cycles.push(cycle);
    }
    Ok(CyclePacking { cycles })
}

pub fn write_certificate(p: &CyclePacking) -> String {
    let mut out = String::new();
    for cycle in &p.cycles {
        let line: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}
