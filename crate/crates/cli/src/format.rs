//! The plain-text instance format.
//!
//! ```text
//! mh1 <variant> r=<r> n=<n> complete=<0|1>
//! <v1> ... <vr> | <mark> [<mark>]
//! ```
//!
//! One line per edge in lexicographic vertex-set order, ASCII with LF line
//! endings and single spaces. Two-extreme marks are two ascending ids,
//! min-marked and one-extreme marks a single id, min&max marks the pair in
//! (min, max) order. Serialization canonicalizes whatever the parser
//! accepted, and `parse(serialize(h)) == h` holds bit-exactly.

use std::fmt::Write as _;

use agreelin::{MarkVariant, MarkedEdge, MarkedHypergraph, Marks};
use anyhow::{bail, Context, Result};

pub fn serialize_instance(h: &MarkedHypergraph) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "mh1 {} r={} n={} complete={}",
        h.variant().token(),
        h.r(),
        h.n(),
        u8::from(h.is_clique())
    )
    .unwrap();
    for e in h.edges() {
        for v in e.verts() {
            write!(out, "{v} ").unwrap();
        }
        out.push('|');
        for m in e.marks().vertices() {
            write!(out, " {m}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_instance(text: &str) -> Result<MarkedHypergraph> {
    let mut lines = text.lines();
    let header = lines.next().context("empty instance file")?;
    let (variant, r, n, complete) = parse_header(header)?;
    let mut edges = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let edge =
            parse_edge(line, variant, r).with_context(|| format!("edge line {}", lineno + 2))?;
        edges.push(edge);
    }
    let h = MarkedHypergraph::new(n, r, variant, edges).context("invalid instance")?;
    if h.is_clique() != complete {
        bail!(
            "header says complete={} but the edge list {} a clique",
            u8::from(complete),
            if h.is_clique() { "is" } else { "is not" }
        );
    }
    Ok(h)
}

fn parse_header(line: &str) -> Result<(MarkVariant, u32, u32, bool)> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let [magic, variant, r, n, complete] = tokens[..] else {
        bail!("malformed header: expected `mh1 <variant> r=<r> n=<n> complete=<0|1>`");
    };
    if magic != "mh1" {
        bail!("unknown format magic {magic:?}, expected \"mh1\"");
    }
    let variant =
        MarkVariant::from_token(variant).with_context(|| format!("unknown variant {variant:?}"))?;
    let field = |tok: &str, key: &str| -> Result<u32> {
        let value = tok
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix('='))
            .with_context(|| format!("expected `{key}=<int>`, got {tok:?}"))?;
        value
            .parse()
            .with_context(|| format!("bad {key} value {value:?}"))
    };
    let complete = match field(complete, "complete")? {
        0 => false,
        1 => true,
        other => bail!("complete must be 0 or 1, got {other}"),
    };
    Ok((variant, field(r, "r")?, field(n, "n")?, complete))
}

fn parse_edge(line: &str, variant: MarkVariant, r: u32) -> Result<MarkedEdge> {
    let (verts_part, marks_part) = line
        .split_once('|')
        .context("missing `|` between vertices and marks")?;
    let verts: Vec<u32> = verts_part
        .split_whitespace()
        .map(|t| t.parse().with_context(|| format!("bad vertex id {t:?}")))
        .collect::<Result<_>>()?;
    if verts.len() != r as usize {
        bail!("expected {r} vertices, got {}", verts.len());
    }
    let marks: Vec<u32> = marks_part
        .split_whitespace()
        .map(|t| t.parse().with_context(|| format!("bad mark id {t:?}")))
        .collect::<Result<_>>()?;
    let marks = match (variant, marks.as_slice()) {
        (MarkVariant::TwoExtreme, &[a, b]) => Marks::TwoExtreme(a, b),
        (MarkVariant::MinMarked, &[a]) => Marks::MinMarked(a),
        (MarkVariant::OneExtreme, &[a]) => Marks::OneExtreme(a),
        (MarkVariant::MinMax, &[a, b]) => Marks::MinMax(a, b),
        _ => bail!(
            "variant {} takes {} mark(s), got {}",
            variant.token(),
            match variant {
                MarkVariant::MinMarked | MarkVariant::OneExtreme => 1,
                _ => 2,
            },
            marks.len()
        ),
    };
    MarkedEdge::new(verts, marks).context("invalid edge")
}
