//! Plain-text gain graph files.
//!
//! ```text
//! # comment
//! graph 3
//! edge 0 1 i
//! edge 1 2 polar:2.0943951023931957
//! edge 0 2 rect:0,-1
//! ```
//!
//! Gain tokens: `1`, `-1`, `i`, `-i`, `polar:<radians>`, `rect:<re>,<im>`.
//! A gain belongs to the orientation written, so `edge 2 0 g` stores
//! `conj(g)` on `0 -> 2`.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_complex::Complex;
use thiserror::Error;
use tgain::GainGraphF64;
use tgain::SimpleGraph;

/// Largest accepted `| |g| - 1 |` for `rect:` gains before renormalising.
pub const RECT_MODULUS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("expected `graph <n>` before any edge")]
    MissingHeader,
    #[error("duplicate `graph` header")]
    DuplicateHeader,
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("bad gain `{0}`")]
    BadGain(String),
    #[error("gain has modulus {0}, expected 1")]
    NonUnitGain(f64),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("{0}")]
    Invalid(String),
}

fn parse_float(s: &str) -> Option<f64> {
    s.parse::<f64>().ok().filter(|x| x.is_finite())
}

pub fn parse_gain(token: &str) -> Result<Complex<f64>, ParseErrorKind> {
    let bad = || ParseErrorKind::BadGain(token.to_string());
    match token {
        "1" => return Ok(Complex::new(1.0, 0.0)),
        "-1" => return Ok(Complex::new(-1.0, 0.0)),
        "i" => return Ok(Complex::new(0.0, 1.0)),
        "-i" => return Ok(Complex::new(0.0, -1.0)),
        _ => {}
    }
    if let Some(theta) = token.strip_prefix("polar:") {
        return parse_float(theta).map(Complex::cis).ok_or_else(bad);
    }
    if let Some(rest) = token.strip_prefix("rect:") {
        let (re, im) = rest.split_once(',').ok_or_else(bad)?;
        let z = Complex::new(parse_float(re).ok_or_else(bad)?, parse_float(im).ok_or_else(bad)?);
        let modulus = z.norm();
        if (modulus - 1.0).abs() > RECT_MODULUS_TOL {
            return Err(ParseErrorKind::NonUnitGain(modulus));
        }
        return Ok(z / modulus);
    }
    Err(bad())
}

pub fn parse(text: &str) -> Result<GainGraphF64, ParseError> {
    let mut n: Option<usize> = None;
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match words[0] {
            "graph" => {
                if n.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                let [_, count] = words[..] else {
                    return Err(err(ParseErrorKind::Syntax("expected `graph <n>`".into())));
                };
                let count = count.parse().map_err(|_| err(ParseErrorKind::Syntax(format!("bad vertex count `{count}`"))))?;
                n = Some(count);
            }
            "edge" => {
                let n = n.ok_or_else(|| err(ParseErrorKind::MissingHeader))?;
                let [_, u, v, gain] = words[..] else {
                    return Err(err(ParseErrorKind::Syntax("expected `edge <u> <v> <gain>`".into())));
                };
                let index = |s: &str| s.parse::<usize>().map_err(|_| err(ParseErrorKind::Syntax(format!("bad vertex `{s}`"))));
                let (u, v) = (index(u)?, index(v)?);
                for vertex in [u, v] {
                    if vertex >= n {
                        return Err(err(ParseErrorKind::VertexOutOfRange { vertex, n }));
                    }
                }
                if u == v {
                    return Err(err(ParseErrorKind::Loop(u)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(ParseErrorKind::DuplicateEdge(u.min(v), u.max(v))));
                }
                edges.push((u, v, parse_gain(gain).map_err(err)?));
            }
            other => return Err(err(ParseErrorKind::Syntax(format!("unknown keyword `{other}`")))),
        }
    }
    let n = n.ok_or(ParseError { line: last_line.max(1), kind: ParseErrorKind::MissingHeader })?;
    let invalid = |e: String| ParseError { line: last_line, kind: ParseErrorKind::Invalid(e) };
    let graph = SimpleGraph::new(n, edges.iter().map(|&(u, v, _)| (u, v))).map_err(|e| invalid(e.to_string()))?;
    GainGraphF64::from_directed(graph, edges).map_err(|e| invalid(e.to_string()))
}

fn gain_token(z: Complex<f64>) -> String {
    match (z.re, z.im) {
        (1.0, 0.0) => "1".into(),
        (-1.0, 0.0) => "-1".into(),
        (0.0, 1.0) => "i".into(),
        (0.0, -1.0) => "-i".into(),
        (re, im) => format!("rect:{re:?},{im:?}"),
    }
}

/// Writes edges in canonical order, oriented from the smaller endpoint.
pub fn write(phi: &GainGraphF64) -> String {
    let mut out = format!("graph {}\n", phi.n());
    for (&(u, v), &g) in phi.graph().edges().iter().zip(phi.gains()) {
        writeln!(out, "edge {u} {v} {}", gain_token(g)).unwrap();
    }
    out
}
