//! Text formats for basic decompositions and expansion plans.
//!
//! Basic decomposition (`basicspec`), vertices 1-based, pairs oriented so
//! that `J v_x = +v_y`:
//!
//! ```text
//! B <n>
//! A1 <x> <y>
//! A2 <s> <x> <y> [+|-]        J v_s = ±e_{x,y}
//! A3 <x1> <y1> <x2> <y2> [+|-]  J e_{x1,y1} = ±e_{x2,y2}
//! ```
//!
//! Expansion plan, one wedge per line, adding `{u, v}` and `{u, J v}`:
//!
//! ```text
//! W <count>
//! <u> <v>
//! ```
//!
//! Blank lines and `#` comments are skipped.

use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind};
use crate::structure::{BasicCopy, BasicDecomposition};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(k, l)| (k, l.split_whitespace().collect()))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    tag: &str,
) -> Result<(usize, usize), ParseError> {
    let (ln, parts) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, ParseErrorKind::MalformedHeader("empty input".into())))?;
    match parts.as_slice() {
        [t, k] if *t == tag => k
            .parse()
            .map(|k| (ln, k))
            .map_err(|_| ParseError::new(ln, ParseErrorKind::MalformedHeader(parts.join(" ")))),
        _ => Err(ParseError::new(ln, ParseErrorKind::MalformedHeader(parts.join(" ")))),
    }
}

/// 1-based vertex token to a 0-based index below `n`.
fn vertex(ln: usize, tok: &str, n: usize) -> Result<usize, ParseError> {
    let v: usize =
        tok.parse().map_err(|_| ParseError::new(ln, ParseErrorKind::MalformedLine(tok.into())))?;
    if v == 0 || v > n {
        return Err(ParseError::new(
            ln,
            ParseErrorKind::Graph(crate::error::GraphError::VertexOutOfRange { vertex: v, n }),
        ));
    }
    Ok(v - 1)
}

fn sign(ln: usize, tok: Option<&&str>) -> Result<i8, ParseError> {
    match tok.copied() {
        None | Some("+") => Ok(1),
        Some("-") => Ok(-1),
        Some(t) => Err(ParseError::new(ln, ParseErrorKind::MalformedLine(t.into()))),
    }
}

pub fn parse_basic(text: &str) -> Result<BasicDecomposition, ParseError> {
    let mut lines = content_lines(text);
    let (hl, n) = header(&mut lines, "B")?;
    let mut copies = Vec::new();
    let mut last = hl;
    for (ln, p) in lines {
        last = ln;
        let v = |i: usize| vertex(ln, p[i], n);
        let bad = || ParseError::new(ln, ParseErrorKind::MalformedLine(p.join(" ")));
        let copy = match (p[0], p.len()) {
            ("A1", 3) => BasicCopy::A1 { pair: (v(1)?, v(2)?) },
            ("A2", 4 | 5) => {
                BasicCopy::A2 { isolated: v(1)?, edge: (v(2)?, v(3)?), sign: sign(ln, p.get(4))? }
            }
            ("A3", 5 | 6) => BasicCopy::A3 {
                first: (v(1)?, v(2)?),
                second: (v(3)?, v(4)?),
                sign: sign(ln, p.get(5))?,
            },
            _ => return Err(bad()),
        };
        copies.push(copy);
    }
    BasicDecomposition::new(n, copies)
        .map_err(|e| ParseError::new(last, ParseErrorKind::Invalid(e.to_string())))
}

pub fn format_basic(b: &BasicDecomposition) -> String {
    let mut s = format!("B {}\n", b.n());
    let sg = |x: i8| if x < 0 { "-" } else { "+" };
    for c in b.copies() {
        let _ = match *c {
            BasicCopy::A1 { pair } => writeln!(s, "A1 {} {}", pair.0 + 1, pair.1 + 1),
            BasicCopy::A2 { isolated, edge, sign } => {
                writeln!(s, "A2 {} {} {} {}", isolated + 1, edge.0 + 1, edge.1 + 1, sg(sign))
            }
            BasicCopy::A3 { first, second, sign } => writeln!(
                s,
                "A3 {} {} {} {} {}",
                first.0 + 1,
                first.1 + 1,
                second.0 + 1,
                second.1 + 1,
                sg(sign)
            ),
        };
    }
    s
}

/// Wedges `(centre, endpoint)` for a basic graph on `n` vertices.
pub fn parse_wedges(text: &str, n: usize) -> Result<Vec<(usize, usize)>, ParseError> {
    let mut lines = content_lines(text);
    let (hl, count) = header(&mut lines, "W")?;
    let mut out = Vec::new();
    for (ln, p) in lines {
        if p.len() != 2 {
            return Err(ParseError::new(ln, ParseErrorKind::MalformedLine(p.join(" "))));
        }
        out.push((vertex(ln, p[0], n)?, vertex(ln, p[1], n)?));
    }
    if out.len() != count {
        return Err(ParseError::new(hl, ParseErrorKind::CountMismatch { expected: count, found: out.len() }));
    }
    Ok(out)
}

pub fn format_wedges(wedges: &[(usize, usize)]) -> String {
    let mut s = format!("W {}\n", wedges.len());
    for &(u, v) in wedges {
        let _ = writeln!(s, "{} {}", u + 1, v + 1);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let b = BasicDecomposition::canonical(1, 1, 1);
        assert_eq!(parse_basic(&format_basic(&b)).unwrap(), b);
        let w = vec![(0, 2), (4, 5)];
        assert_eq!(parse_wedges(&format_wedges(&w), 9).unwrap(), w);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_basic("B 3\nA1 1 2\nA1 3 4\n").unwrap_err();
        assert_eq!((e.line, e.code()), (3, "E-RANGE"));
        let e = parse_basic("B 4\nA1 1 2\n").unwrap_err();
        assert_eq!(e.code(), "E-INVALID");
        let e = parse_wedges("W 2\n1 3\n", 4).unwrap_err();
        assert_eq!((e.line, e.code()), (1, "E-COUNT"));
        let e = parse_basic("B 3\nA2 1 2 3 *\n").unwrap_err();
        assert_eq!(e.code(), "E-LINE");
    }
}
