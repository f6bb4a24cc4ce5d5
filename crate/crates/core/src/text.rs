//! Line-oriented textual formats.
//!
//! Morphisms:
//!
//! ```text
//! pbij f : 1 2 3 -> a b
//! 1 -> a
//! 3 -> b
//!
//! ```
//!
//! Cayley tables:
//!
//! ```text
//! semigroup Z2 = e a
//! e: e a
//! a: a e
//! ```
//!
//! 3×3 grids: nine `object ROW COL = ...` lines (0-based indices) followed by
//! `arrow (r1,c1)->(r2,c2):` blocks whose body is the morphism pair syntax.
//!
//! In every format a blank line terminates a block and the empty set is an
//! empty token list.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::Grid3x3;
use crate::finset::{check_token, FinSet};
use crate::inverse_monoid::CayleyTable;
use crate::pbij::PBij;

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            lines: input.lines().enumerate().map(|(i, l)| (i + 1, l)).collect(),
            pos: 0,
        }
    }

    fn skip_blank(&mut self) {
        while self.pos < self.lines.len() && self.lines[self.pos].1.trim().is_empty() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let line = self.peek();
        self.pos += 1;
        line
    }

    fn last_line(&self) -> usize {
        self.lines.len().max(1)
    }
}

fn tokens_to_set(line: usize, tokens: &[&str]) -> Result<FinSet> {
    FinSet::new(tokens.iter().copied()).map_err(|e| Error::parse(line, e.to_string()))
}

/// Reads `x -> y` lines until a blank line, end of input, or a line for
/// which `stop` returns true.
fn read_pairs<'a>(
    lines: &mut Lines<'a>,
    stop: impl Fn(&str) -> bool,
) -> Result<Vec<(usize, &'a str, &'a str)>> {
    let mut pairs = Vec::new();
    while let Some((n, line)) = lines.peek() {
        if line.trim().is_empty() || stop(line) {
            break;
        }
        lines.next();
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            [x, "->", y] => pairs.push((n, *x, *y)),
            _ => return Err(Error::parse(n, format!("expected `x -> y`, found `{}`", line.trim()))),
        }
    }
    Ok(pairs)
}

fn build(line: usize, source: FinSet, target: FinSet, pairs: &[(usize, &str, &str)]) -> Result<PBij> {
    // Validate pair by pair so errors carry the offending line.
    let mut acc: Vec<(&str, &str)> = Vec::new();
    for &(n, x, y) in pairs {
        acc.push((x, y));
        PBij::new(source.clone(), target.clone(), acc.iter().copied())
            .map_err(|e| Error::parse(n, e.to_string()))?;
    }
    PBij::new(source, target, acc).map_err(|e| Error::parse(line, e.to_string()))
}

fn check_name(line: usize, name: &str) -> Result<()> {
    if name == ":" || name == "->" || name == "=" {
        return Err(Error::parse(line, format!("invalid name `{name}`")));
    }
    check_token(name).map_err(|e| Error::parse(line, e.to_string()))
}

fn parse_morphism_block(lines: &mut Lines<'_>) -> Result<(String, PBij)> {
    let (n, header) = lines
        .next()
        .ok_or_else(|| Error::parse(lines.last_line(), "expected `pbij` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (name, rest) = match toks.as_slice() {
        ["pbij", name, ":", rest @ ..] => (*name, rest),
        _ => {
            return Err(Error::parse(
                n,
                "expected `pbij NAME : x1 x2 ... -> y1 y2 ...`",
            ))
        }
    };
    check_name(n, name)?;
    let arrows: Vec<usize> = rest
        .iter()
        .enumerate()
        .filter(|(_, t)| **t == "->")
        .map(|(i, _)| i)
        .collect();
    let [arrow] = arrows.as_slice() else {
        return Err(Error::parse(n, "header needs exactly one `->`"));
    };
    let source = tokens_to_set(n, &rest[..*arrow])?;
    let target = tokens_to_set(n, &rest[arrow + 1..])?;
    let pairs = read_pairs(lines, |l| l.trim_start().starts_with("pbij "))?;
    Ok((name.to_string(), build(n, source, target, &pairs)?))
}

/// Parses every morphism block in `input`.
pub fn parse_morphisms(input: &str) -> Result<Vec<(String, PBij)>> {
    let mut lines = Lines::new(input);
    let mut out = Vec::new();
    loop {
        lines.skip_blank();
        if lines.peek().is_none() {
            return Ok(out);
        }
        out.push(parse_morphism_block(&mut lines)?);
    }
}

/// Parses a single morphism; trailing content is an error.
pub fn parse_morphism(input: &str) -> Result<(String, PBij)> {
    let mut all = parse_morphisms(input)?;
    match all.len() {
        0 => Err(Error::parse(1, "no morphism found")),
        1 => Ok(all.pop().unwrap()),
        _ => Err(Error::parse(1, "expected exactly one morphism")),
    }
}

fn write_pairs(out: &mut String, f: &PBij) {
    for (x, y) in f.pairs() {
        let _ = writeln!(out, "{x} -> {y}");
    }
    out.push('\n');
}

fn tokens_line(set: &FinSet) -> String {
    set.iter().fold(String::new(), |mut s, e| {
        s.push(' ');
        s.push_str(e);
        s
    })
}

/// Serializes `f` as a morphism block, including the terminating blank line.
pub fn write_morphism(name: &str, f: &PBij) -> String {
    let mut out = format!(
        "pbij {name} :{} ->{}\n",
        tokens_line(f.source()),
        tokens_line(f.target())
    );
    write_pairs(&mut out, f);
    out
}

/// Parses a Cayley table. Rows may appear in any order but each element
/// needs exactly one.
pub fn parse_cayley(input: &str) -> Result<CayleyTable> {
    let mut lines = Lines::new(input);
    lines.skip_blank();
    let (n, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "expected `semigroup` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (name, elems) = match toks.as_slice() {
        ["semigroup", name, "=", elems @ ..] => (*name, elems),
        _ => return Err(Error::parse(n, "expected `semigroup NAME = e1 e2 ...`")),
    };
    check_name(n, name)?;
    let carrier = tokens_to_set(n, elems)?;
    let size = carrier.len();
    let mut rows: Vec<Option<Vec<usize>>> = vec![None; size];
    for _ in 0..size {
        let (n, line) = lines
            .next()
            .ok_or_else(|| Error::parse(lines.last_line(), "table has too few rows"))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let Some((label, entries)) = toks.split_first() else {
            return Err(Error::parse(n, "table has too few rows"));
        };
        let label = label
            .strip_suffix(':')
            .ok_or_else(|| Error::parse(n, "row must start with `ELEMENT:`"))?;
        let row = carrier
            .position(label)
            .ok_or_else(|| Error::parse(n, format!("unknown row element `{label}`")))?;
        if rows[row].is_some() {
            return Err(Error::parse(n, format!("duplicate row for `{label}`")));
        }
        if entries.len() != size {
            return Err(Error::parse(
                n,
                format!("row `{label}` has {} entries, expected {size}", entries.len()),
            ));
        }
        let parsed = entries
            .iter()
            .map(|e| {
                carrier
                    .position(e)
                    .ok_or_else(|| Error::parse(n, format!("unknown element `{e}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows[row] = Some(parsed);
    }
    lines.skip_blank();
    if let Some((n, _)) = lines.peek() {
        return Err(Error::parse(n, "unexpected content after table"));
    }
    let product = rows.into_iter().map(Option::unwrap).collect();
    CayleyTable::new(name, carrier, product).map_err(|e| Error::parse(n, e.to_string()))
}

pub fn write_cayley(table: &CayleyTable) -> String {
    let mut out = format!(
        "semigroup {} ={}\n",
        table.name(),
        tokens_line(table.carrier())
    );
    for a in 0..table.len() {
        let _ = write!(out, "{}:", table.element(a));
        for b in 0..table.len() {
            let _ = write!(out, " {}", table.element(table.mul(a, b)));
        }
        out.push('\n');
    }
    out
}

fn parse_cell(line: usize, s: &str) -> Result<(usize, usize)> {
    let inner = s
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(line, format!("bad grid cell `{s}`")))?;
    let (r, c) = inner
        .split_once(',')
        .ok_or_else(|| Error::parse(line, format!("bad grid cell `{s}`")))?;
    let idx = |t: &str| -> Result<usize> {
        match t.trim().parse::<usize>() {
            Ok(v) if v < 3 => Ok(v),
            _ => Err(Error::parse(line, format!("grid index `{t}` out of range 0..3"))),
        }
    };
    Ok((idx(r)?, idx(c)?))
}

/// Parses a 3×3 grid. The two bottom-row arrows are optional.
pub fn parse_grid(input: &str) -> Result<Grid3x3> {
    let mut lines = Lines::new(input);
    let mut objects: [[Option<FinSet>; 3]; 3] = Default::default();
    let mut first_arrow_line = None;
    loop {
        lines.skip_blank();
        let Some((n, line)) = lines.peek() else { break };
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["object", r, c, "=", elems @ ..] => {
                lines.next();
                let (r, c) = parse_cell(n, &format!("({r},{c})"))?;
                if objects[r][c].is_some() {
                    return Err(Error::parse(n, format!("object ({r},{c}) declared twice")));
                }
                objects[r][c] = Some(tokens_to_set(n, elems)?);
            }
            ["arrow", ..] => {
                first_arrow_line = Some(n);
                break;
            }
            _ => return Err(Error::parse(n, "expected `object ROW COL = ...` or `arrow` block")),
        }
    }
    let mut objs: Vec<FinSet> = Vec::with_capacity(9);
    for (r, row) in objects.iter().enumerate() {
        for (c, o) in row.iter().enumerate() {
            objs.push(o.clone().ok_or_else(|| {
                Error::parse(first_arrow_line.unwrap_or(lines.last_line()), format!("missing object ({r},{c})"))
            })?);
        }
    }
    let obj = |r: usize, c: usize| objs[r * 3 + c].clone();

    let mut rows: [[Option<PBij>; 2]; 3] = Default::default();
    let mut cols: [[Option<PBij>; 3]; 2] = Default::default();
    loop {
        lines.skip_blank();
        let Some((n, line)) = lines.next() else { break };
        let rest = line
            .trim()
            .strip_prefix("arrow")
            .ok_or_else(|| Error::parse(n, "expected `arrow (r,c)->(r,c):`"))?;
        let compact: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
        let (from, to) = compact
            .strip_suffix(':')
            .and_then(|s| s.split_once("->"))
            .ok_or_else(|| Error::parse(n, "expected `arrow (r,c)->(r,c):`"))?;
        let (r1, c1) = parse_cell(n, from)?;
        let (r2, c2) = parse_cell(n, to)?;
        let pairs = read_pairs(&mut lines, |l| l.trim_start().starts_with("arrow"))?;
        let f = build(n, obj(r1, c1), obj(r2, c2), &pairs)?;
        let slot = if r1 == r2 && c2 == c1 + 1 {
            &mut rows[r1][c1]
        } else if c1 == c2 && r2 == r1 + 1 {
            &mut cols[r1][c1]
        } else {
            return Err(Error::parse(n, "arrows must join horizontally or vertically adjacent cells"));
        };
        if slot.is_some() {
            return Err(Error::parse(n, "arrow declared twice"));
        }
        *slot = Some(f);
    }
    let missing = |what: String| Error::parse(lines.last_line(), format!("missing arrow {what}"));
    let take_row = |r: usize, k: usize, rows: &mut [[Option<PBij>; 2]; 3]| {
        rows[r][k]
            .take()
            .ok_or_else(|| missing(format!("({r},{k})->({r},{})", k + 1)))
    };
    let top = [take_row(0, 0, &mut rows)?, take_row(0, 1, &mut rows)?];
    let middle = [take_row(1, 0, &mut rows)?, take_row(1, 1, &mut rows)?];
    let bottom = match (rows[2][0].take(), rows[2][1].take()) {
        (Some(a), Some(b)) => Some([a, b]),
        (None, None) => None,
        _ => return Err(missing("for the bottom row: give both or neither".into())),
    };
    let mut take_col = |k: usize, c: usize| {
        cols[k][c]
            .take()
            .ok_or_else(|| missing(format!("({k},{c})->({},{c})", k + 1)))
    };
    let upper = [take_col(0, 0)?, take_col(0, 1)?, take_col(0, 2)?];
    let lower = [take_col(1, 0)?, take_col(1, 1)?, take_col(1, 2)?];
    Ok(Grid3x3 {
        objects: [
            [obj(0, 0), obj(0, 1), obj(0, 2)],
            [obj(1, 0), obj(1, 1), obj(1, 2)],
            [obj(2, 0), obj(2, 1), obj(2, 2)],
        ],
        rows: [top, middle],
        bottom,
        cols: [upper, lower],
    })
}

pub fn write_grid(grid: &Grid3x3) -> String {
    let mut out = String::new();
    for (r, row) in grid.objects.iter().enumerate() {
        for (c, o) in row.iter().enumerate() {
            let _ = writeln!(out, "object {r} {c} ={}", tokens_line(o));
        }
    }
    out.push('\n');
    let arrow = |out: &mut String, (r1, c1): (usize, usize), (r2, c2): (usize, usize), f: &PBij| {
        let _ = writeln!(out, "arrow ({r1},{c1})->({r2},{c2}):");
        write_pairs(out, f);
    };
    for (r, row) in grid.rows.iter().enumerate() {
        for (k, f) in row.iter().enumerate() {
            arrow(&mut out, (r, k), (r, k + 1), f);
        }
    }
    if let Some(bottom) = &grid.bottom {
        for (k, f) in bottom.iter().enumerate() {
            arrow(&mut out, (2, k), (2, k + 1), f);
        }
    }
    for (k, level) in grid.cols.iter().enumerate() {
        for (c, f) in level.iter().enumerate() {
            arrow(&mut out, (k, c), (k + 1, c), f);
        }
    }
    out
}
