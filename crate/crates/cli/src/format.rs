//! Text formats: tournaments, pair families, vertex sets, co-module
//! families and DOT.

use std::fmt::Write as _;

use revtour_core::{ComoduleFamily, PairFamily, Tournament, VertexSet, MAX_VERTICES};

use crate::CliError;

/// Two lines: `n`, then the upper triangle as `0`/`1` characters in
/// row-major order, `1` meaning `i -> j`.
pub fn write_tournament(t: &Tournament) -> String {
    let mut s = format!("{}\n", t.order());
    s.extend(t.upper_triangle().map(|b| if b { '1' } else { '0' }));
    s.push('\n');
    s
}

pub fn parse_tournament(text: &str) -> Result<Tournament, CliError> {
    let mut lines = text.lines();
    let head = lines
        .next()
        .ok_or_else(|| CliError::input("empty tournament input"))?
        .trim();
    let n: usize = head
        .parse()
        .map_err(|_| CliError::input(format!("bad vertex count '{head}'")))?;
    if n > MAX_VERTICES {
        return Err(CliError::input(format!("vertex count {n} exceeds {MAX_VERTICES}")));
    }
    let bits = lines.next().unwrap_or("").trim();
    let want = n * n.saturating_sub(1) / 2;
    if bits.len() != want {
        return Err(CliError::input(format!(
            "arc string has {} characters, expected {want} for n = {n}",
            bits.len()
        )));
    }
    if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
        return Err(CliError::input(format!("unexpected trailing line '{extra}'")));
    }
    let arcs = bits
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(CliError::input(format!("bad arc character '{other}'"))),
        })
        .collect::<Result<Vec<bool>, _>>()?;
    Ok(Tournament::from_upper_triangle(n, arcs)?)
}

fn parse_vertex(tok: &str, what: &str) -> Result<usize, CliError> {
    tok.trim()
        .parse()
        .map_err(|_| CliError::input(format!("malformed {what} '{tok}'")))
}

/// Raw pairs of `i-j,...`, each with `i < j`. The empty string is the
/// empty family.
pub fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let bad = || CliError::input(format!("malformed pair token '{}'", tok.trim()));
            let (a, b) = tok.split_once('-').ok_or_else(bad)?;
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            if a >= b {
                return Err(bad());
            }
            Ok((a, b))
        })
        .collect()
}

/// A pair family over `0..n`; with `n` absent the ambient size is one more
/// than the largest vertex mentioned.
pub fn parse_pair_family(text: &str, n: Option<usize>) -> Result<PairFamily, CliError> {
    let pairs = parse_pairs(text)?;
    let n = n.unwrap_or_else(|| pairs.iter().map(|&(_, b)| b + 1).max().unwrap_or(0));
    Ok(PairFamily::new(n, pairs)?)
}

/// `{a,b,...}`; braces optional.
pub fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet, CliError> {
    let t = text.trim();
    let inner = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(t);
    let mut set = VertexSet::EMPTY;
    for tok in inner.split(',').filter(|s| !s.trim().is_empty()) {
        let v = parse_vertex(tok, "vertex")?;
        if v >= n {
            return Err(CliError::input(format!("vertex {v} is out of range for n = {n}")));
        }
        set.insert(v);
    }
    Ok(set)
}

/// `{a,b};{c};...`; the empty string is the empty family.
pub fn parse_comodule_family(text: &str, n: usize) -> Result<ComoduleFamily, CliError> {
    let members = text
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_vertex_set(s, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ComoduleFamily::new(members))
}

pub fn to_dot(t: &Tournament) -> String {
    let mut s = String::from("digraph T {\n");
    for v in 0..t.order() {
        let _ = writeln!(s, "  {v};");
    }
    for (x, y) in t.arcs() {
        let _ = writeln!(s, "  {x} -> {y};");
    }
    s.push_str("}\n");
    s
}
