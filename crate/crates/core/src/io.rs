//! Line-oriented text formats.
//!
//! Graph file:
//!
//! ```text
//! p pog <n> <m> <r>
//! t <v> <part>        (n lines, v in 1..=n, part in 1..=r)
//! e <u> <v>           (m lines)
//! ```
//!
//! Orientation file:
//!
//! ```text
//! o pog <n> <m>
//! a <tail> <head>     (m lines)
//! ```
//!
//! Lines starting with `#` and blank lines are ignored on input. Output is
//! canonical: part lines in vertex order, edges sorted with `u < v`.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::{Graph, Orientation, Partition};

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N], ParseError> {
    let mut out = [0; N];
    if fields.len() != N {
        return Err(err(line, ParseErrorKind::Malformed(fields.join(" "))));
    }
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| err(line, ParseErrorKind::Malformed(fields.join(" "))))?;
    }
    Ok(out)
}

/// Parses a graph file into a graph and a validated (proper) partition.
pub fn parse_graph(text: &str) -> Result<(Graph, Partition), ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(err(1, ParseErrorKind::MissingHeader))?;
    if header.len() != 5 || header[0] != "p" || header[1] != "pog" {
        return Err(err(hline, ParseErrorKind::MissingHeader));
    }
    let [n, m, r] = numbers::<3>(hline, &header[2..])?;

    let mut part: Vec<Option<usize>> = vec![None; n];
    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = hline;
    for (line, fields) in lines {
        last_line = line;
        match fields[0] {
            "t" => {
                let [v, p] = numbers::<2>(line, &fields[1..])?;
                if v == 0 || v > n {
                    return Err(err(line, ParseErrorKind::VertexOutOfRange(v)));
                }
                if p == 0 || p > r {
                    return Err(err(line, ParseErrorKind::PartOutOfRange { part: p, r }));
                }
                if part[v - 1].replace(p - 1).is_some() {
                    return Err(err(line, ParseErrorKind::DuplicatePart(v)));
                }
            }
            "e" => {
                let [u, v] = numbers::<2>(line, &fields[1..])?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(line, ParseErrorKind::VertexOutOfRange(x)));
                    }
                }
                if u == v {
                    return Err(err(line, ParseErrorKind::Loop(u)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(line, ParseErrorKind::DuplicateEdge(u, v)));
                }
                edges.push((u - 1, v - 1));
                edge_lines.push(line);
            }
            _ => return Err(err(line, ParseErrorKind::Malformed(fields.join(" ")))),
        }
    }
    if edges.len() != m {
        return Err(err(last_line, ParseErrorKind::Count { what: "edge", expected: m, got: edges.len() }));
    }
    let part = part
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or(err(last_line, ParseErrorKind::MissingPart(v + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    for (&(u, v), &line) in edges.iter().zip(&edge_lines) {
        if part[u] == part[v] {
            return Err(err(line, ParseErrorKind::EdgeInsidePart { u: u + 1, v: v + 1, part: part[u] + 1 }));
        }
    }
    let graph = Graph::new(n, edges).expect("edges validated above");
    let partition = Partition::new(r, part).expect("parts validated above");
    Ok((graph, partition))
}

/// Canonical graph file.
pub fn write_graph(g: &Graph, p: &Partition) -> String {
    let mut s = String::new();
    writeln!(s, "p pog {} {} {}", g.vertex_count(), g.edge_count(), p.part_count()).unwrap();
    for v in 0..g.vertex_count() {
        writeln!(s, "t {} {}", v + 1, p.part_of(v) + 1).unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
    s
}

/// Orientation file with arcs in edge order.
pub fn write_orientation(g: &Graph, o: &Orientation) -> String {
    let mut s = String::new();
    writeln!(s, "o pog {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (t, h) in o.arcs(g) {
        writeln!(s, "a {} {}", t + 1, h + 1).unwrap();
    }
    s
}

/// Parses an orientation file against `g`; the arcs must cover its edges exactly.
pub fn parse_orientation(g: &Graph, text: &str) -> Result<Orientation, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(err(1, ParseErrorKind::MissingHeader))?;
    if header.len() != 4 || header[0] != "o" || header[1] != "pog" {
        return Err(err(hline, ParseErrorKind::MissingHeader));
    }
    let [n, m] = numbers::<2>(hline, &header[2..])?;
    if n != g.vertex_count() {
        return Err(err(hline, ParseErrorKind::Count { what: "vertex", expected: g.vertex_count(), got: n }));
    }
    if m != g.edge_count() {
        return Err(err(hline, ParseErrorKind::Count { what: "arc", expected: g.edge_count(), got: m }));
    }
    let mut arcs = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, fields) in lines {
        last_line = line;
        if fields[0] != "a" {
            return Err(err(line, ParseErrorKind::Malformed(fields.join(" "))));
        }
        let [t, h] = numbers::<2>(line, &fields[1..])?;
        for x in [t, h] {
            if x == 0 || x > n {
                return Err(err(line, ParseErrorKind::VertexOutOfRange(x)));
            }
        }
        arcs.push((t - 1, h - 1));
    }
    if arcs.len() != m {
        return Err(err(last_line, ParseErrorKind::Count { what: "arc", expected: m, got: arcs.len() }));
    }
    Orientation::from_arcs(g, &arcs).map_err(|e| err(last_line, ParseErrorKind::Orientation(e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let text = "p pog 3 3 3\nt 1 1\nt 2 2\nt 3 3\ne 1 2\ne 2 3\ne 1 3\n";
        let (g, p) = parse_graph(text).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(p.as_slice(), &[0, 1, 2]);
        assert_eq!(write_graph(&g, &p), "p pog 3 3 3\nt 1 1\nt 2 2\nt 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn parses_single_edge_with_comments() {
        let text = "# K2\np pog 2 1 2\n\nt 1 1\nt 2 2\n# edge\ne 1 2\n";
        let (g, p) = parse_graph(text).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(p.part_count(), 2);
    }

    #[test]
    fn reports_line_numbers() {
        let loop_err = parse_graph("p pog 2 1 2\nt 1 1\nt 2 2\ne 1 1\n").unwrap_err();
        assert_eq!(loop_err, ParseError { line: 4, kind: ParseErrorKind::Loop(1) });

        let dup = parse_graph("p pog 2 2 2\nt 1 1\nt 2 2\ne 1 2\ne 2 1\n").unwrap_err();
        assert_eq!(dup.line, 5);
        assert!(matches!(dup.kind, ParseErrorKind::DuplicateEdge(2, 1)));

        let range = parse_graph("p pog 2 1 2\nt 1 3\nt 2 2\ne 1 2\n").unwrap_err();
        assert_eq!(range, ParseError { line: 2, kind: ParseErrorKind::PartOutOfRange { part: 3, r: 2 } });

        let inside = parse_graph("p pog 2 1 2\nt 1 1\nt 2 1\ne 1 2\n").unwrap_err();
        assert_eq!(inside.line, 4);
        assert!(matches!(inside.kind, ParseErrorKind::EdgeInsidePart { .. }));

        let junk = parse_graph("p pog 2 1 2\nt 1 1\nt 2 x\n").unwrap_err();
        assert_eq!(junk.line, 3);

        assert!(matches!(parse_graph("").unwrap_err().kind, ParseErrorKind::MissingHeader));
        assert!(matches!(
            parse_graph("p pog 2 0 2\nt 1 1\n").unwrap_err().kind,
            ParseErrorKind::MissingPart(2)
        ));
        assert!(matches!(
            parse_graph("p pog 2 2 2\nt 1 1\nt 2 2\ne 1 2\n").unwrap_err().kind,
            ParseErrorKind::Count { .. }
        ));
    }

    #[test]
    fn orientation_round_trip() {
        let (g, _) = parse_graph("p pog 3 3 3\nt 1 1\nt 2 2\nt 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        let text = "o pog 3 3\na 2 1\na 1 3\na 3 2\n";
        let o = parse_orientation(&g, text).unwrap();
        assert_eq!(write_orientation(&g, &o), "o pog 3 3\na 2 1\na 1 3\na 3 2\n");
        assert!(parse_orientation(&g, "o pog 3 3\na 2 1\na 1 2\na 3 2\n").is_err());
        assert!(parse_orientation(&g, "o pog 3 2\na 2 1\na 1 3\n").is_err());
    }
}
