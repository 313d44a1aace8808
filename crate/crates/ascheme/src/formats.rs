//! Text formats for schemes (`.asc`), groups (`.grp`) and morphisms
//! (`.mor`), with line/column diagnostics and strict trailing-garbage
//! rejection so emitted files round-trip byte-identically.

use ascheme_core::{Group, Scheme};

use crate::error::{CliError, Result};

struct Lines<'a> {
    lines: std::str::Lines<'a>,
    line_no: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        Lines { lines: text.lines(), line_no: 0 }
    }

    /// Next line as whitespace-separated integer tokens with their column
    /// positions; `expected` is used in the error message on EOF.
    fn next_ints(&mut self, expected: &str) -> Result<Vec<(usize, usize)>> {
        let Some(line) = self.lines.next() else {
            return Err(CliError::parse(self.line_no + 1, 1, format!("expected {expected}, found end of file")));
        };
        self.line_no += 1;
        let mut out = Vec::new();
        let mut offset = 0;
        for token in line.split_whitespace() {
            let start = line[offset..].find(token).map_or(offset, |i| i + offset);
            offset = start + token.len();
            let col = start + 1;
            let value: usize = token.parse().map_err(|_| {
                CliError::parse(self.line_no, col, format!("expected an integer, found {token:?}"))
            })?;
            out.push((value, col));
        }
        if out.is_empty() {
            return Err(CliError::parse(self.line_no, 1, format!("expected {expected}, found a blank line")));
        }
        Ok(out)
    }

    /// Everything after the expected content must be whitespace.
    fn expect_end(&mut self) -> Result<()> {
        for line in self.lines.by_ref() {
            self.line_no += 1;
            if !line.trim().is_empty() {
                return Err(CliError::parse(self.line_no, 1, "trailing garbage after expected content".into()));
            }
        }
        Ok(())
    }
}

fn expect_count(row: &[(usize, usize)], want: usize, line: usize, what: &str) -> Result<()> {
    if row.len() != want {
        return Err(CliError::parse(line, 1, format!("expected {want} {what}, found {}", row.len())));
    }
    Ok(())
}

/// `.asc`: first line `n d`, then `n` rows of `n` relation indices in
/// `[0, d)`. The scheme axioms are validated after parsing.
pub fn parse_scheme(text: &str) -> Result<Scheme> {
    let mut lines = Lines::new(text);
    let header = lines.next_ints("a header line \"n d\"")?;
    expect_count(&header, 2, 1, "header integers")?;
    let (n, d) = (header[0].0, header[1].0);
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let row = lines.next_ints("a matrix row")?;
        let line = rows.len() + 2;
        expect_count(&row, n, line, "entries")?;
        for &(v, col) in &row {
            if v >= d {
                return Err(CliError::parse(line, col, format!("relation index {v} out of range [0, {d})")));
            }
        }
        rows.push(row.into_iter().map(|(v, _)| v).collect::<Vec<_>>());
    }
    lines.expect_end()?;
    let scheme = Scheme::from_color_matrix(&rows)?;
    if scheme.rank() != d {
        return Err(CliError::parse(1, 1, format!("header declares {d} relations but {} occur", scheme.rank())));
    }
    Ok(scheme)
}

pub fn emit_scheme(s: &Scheme) -> String {
    let mut out = format!("{} {}\n", s.n(), s.rank());
    for row in s.color_rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// `.grp`: first line `n`, then `n` rows of the Cayley table with element
/// 0 the identity. Group axioms are validated after parsing.
pub fn parse_group(text: &str) -> Result<Group> {
    let mut lines = Lines::new(text);
    let header = lines.next_ints("a header line \"n\"")?;
    expect_count(&header, 1, 1, "header integer")?;
    let n = header[0].0;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let row = lines.next_ints("a Cayley table row")?;
        let line = rows.len() + 2;
        expect_count(&row, n, line, "entries")?;
        for &(v, col) in &row {
            if v >= n {
                return Err(CliError::parse(line, col, format!("element {v} out of range [0, {n})")));
            }
        }
        rows.push(row.into_iter().map(|(v, _)| v).collect::<Vec<_>>());
    }
    lines.expect_end()?;
    Ok(Group::from_table(&rows)?)
}

pub fn emit_group(g: &Group) -> String {
    let mut out = format!("{}\n", g.order());
    for row in g.table_rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// `.mor`: first line `n_dom n_cod`, then `n_dom` point images on the
/// following line(s).
pub fn parse_point_map(text: &str) -> Result<(usize, usize, Vec<usize>)> {
    let mut lines = Lines::new(text);
    let header = lines.next_ints("a header line \"n_dom n_cod\"")?;
    expect_count(&header, 2, 1, "header integers")?;
    let (n_dom, n_cod) = (header[0].0, header[1].0);
    let mut map = Vec::with_capacity(n_dom);
    while map.len() < n_dom {
        let row = lines.next_ints("point-map entries")?;
        for (v, col) in row {
            if map.len() == n_dom {
                return Err(CliError::parse(lines.line_no, col, "more point-map entries than domain points".into()));
            }
            if v >= n_cod {
                return Err(CliError::parse(lines.line_no, col, format!("point {v} out of range [0, {n_cod})")));
            }
            map.push(v);
        }
    }
    lines.expect_end()?;
    Ok((n_dom, n_cod, map))
}

pub fn emit_point_map(n_dom: usize, n_cod: usize, map: &[usize]) -> String {
    let cells: Vec<String> = map.iter().map(|v| v.to_string()).collect();
    format!("{n_dom} {n_cod}\n{}\n", cells.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scheme_round_trip() {
        let text = "3 2\n0 1 1\n1 0 1\n1 1 0\n";
        let s = parse_scheme(text).unwrap();
        assert_eq!(emit_scheme(&s), text);
    }

    #[test]
    fn scheme_rejects_garbage() {
        assert!(parse_scheme("1 1\n0\nextra\n").is_err());
        assert!(parse_scheme("2 2\n0 1\n1 0 0\n").is_err());
        assert!(parse_scheme("1 1\n").is_err());
        assert!(parse_scheme("2 2\n0 x\n1 0\n").is_err());
        // header rank must match the matrix
        assert!(parse_scheme("2 3\n0 1\n1 0\n").is_err());
    }

    #[test]
    fn parse_error_positions() {
        let err = parse_scheme("2 2\n0 9\n1 0\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn group_round_trip() {
        let text = "2\n0 1\n1 0\n";
        let g = parse_group(text).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(emit_group(&g), text);
        assert!(parse_group("2\n0 1\n0 1\n").is_err()); // not a group
    }

    #[test]
    fn point_map_round_trip() {
        let text = "3 2\n0 1 1\n";
        let (nd, nc, map) = parse_point_map(text).unwrap();
        assert_eq!((nd, nc), (3, 2));
        assert_eq!(emit_point_map(nd, nc, &map), text);
        assert!(parse_point_map("3 2\n0 1\n").is_err());
        assert!(parse_point_map("3 2\n0 1 1 0\n").is_err());
        assert!(parse_point_map("3 2\n0 1 2\n").is_err());
    }
}
