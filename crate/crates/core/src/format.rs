//! Text formats: `ecg 1` colorings and `cert 1` trail certificates.
//!
//! ```text
//! ecg 1            cert 1
//! <n> <k>          <color> <length> <closed:0|1>
//! <u> <v> <c>      <v0> <v1> ... <v_length>
//! ...
//! ```
//!
//! Coloring files list every pair `u < v` exactly once in ascending order.

use std::fmt::Write;

use crate::circuit::Trail;
use crate::coloring::{pairs, EdgeColoring};
use crate::error::{Error, Result};

pub fn write_ecg(coloring: &EdgeColoring) -> String {
    let mut out = String::with_capacity(16 + 12 * coloring.ranked_colors().len());
    let _ = writeln!(out, "ecg 1\n{} {}", coloring.n(), coloring.k());
    for (u, v, c) in coloring.edges() {
        let _ = writeln!(out, "{u} {v} {c}");
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next line with its 1-based number, or an error naming what was due.
    fn next(&mut self, expected: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((i, line)) => {
                self.last = i + 1;
                Ok((i + 1, line.trim_end_matches('\r')))
            }
            None => Err(Error::parse(
                self.last + 1,
                format!("unexpected end of input, expected {expected}"),
            )),
        }
    }

    fn finish(mut self) -> Result<()> {
        match self.inner.find(|(_, l)| !l.trim().is_empty()) {
            Some((i, _)) => Err(Error::parse(i + 1, "unexpected trailing content")),
            None => Ok(()),
        }
    }
}

fn numbers<const N: usize>(line_no: usize, line: &str, what: &str) -> Result<[usize; N]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != N {
        return Err(Error::parse(
            line_no,
            format!("expected {what} ({N} fields), found {} fields", fields.len()),
        ));
    }
    let mut out = [0usize; N];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field
            .parse()
            .map_err(|_| Error::parse(line_no, format!("'{field}' is not a non-negative integer")))?;
    }
    Ok(out)
}

fn header(lines: &mut Lines<'_>, magic: &str) -> Result<()> {
    let (no, line) = lines.next(magic)?;
    if line.trim() != magic {
        return Err(Error::parse(no, format!("expected header '{magic}'")));
    }
    Ok(())
}

pub fn parse_ecg(text: &str) -> Result<EdgeColoring> {
    let mut lines = Lines::new(text);
    header(&mut lines, "ecg 1")?;
    let (no, line) = lines.next("'<n> <k>'")?;
    let [n, k] = numbers::<2>(no, line, "'<n> <k>'")?;
    if n < 1 || k < 1 {
        return Err(Error::parse(no, "n and k must be at least 1"));
    }
    if k > crate::coloring::MAX_COLORS {
        return Err(Error::parse(no, format!("k = {k} exceeds {}", crate::coloring::MAX_COLORS)));
    }
    let mut colors = Vec::with_capacity(crate::coloring::pair_count(n));
    for (eu, ev) in pairs(n) {
        let (no, line) = lines.next(&format!("pair {eu} {ev}"))?;
        let [u, v, c] = numbers::<3>(no, line, "'<u> <v> <c>'")?;
        if u >= n || v >= n {
            return Err(Error::parse(no, format!("vertex out of range for n = {n}")));
        }
        if u >= v {
            return Err(Error::parse(no, format!("pair {u} {v} is not ordered u < v")));
        }
        if c >= k {
            return Err(Error::parse(no, format!("color {c} out of range for k = {k}")));
        }
        if (u, v) < (eu, ev) {
            return Err(Error::parse(no, format!("duplicate or out-of-order pair {u} {v}")));
        }
        if (u, v) > (eu, ev) {
            return Err(Error::parse(no, format!("gap: pair {eu} {ev} missing before {u} {v}")));
        }
        colors.push(c as u16);
    }
    lines.finish()?;
    EdgeColoring::from_ranked(n, k, colors)
}

pub fn write_cert(trail: &Trail) -> String {
    let vertices: Vec<String> = trail.vertices.iter().map(ToString::to_string).collect();
    format!(
        "cert 1\n{} {} {}\n{}\n",
        trail.color,
        trail.len(),
        u8::from(trail.closed),
        vertices.join(" ")
    )
}

/// Parses the certificate structure only; colors and vertices are checked
/// against a coloring by [`crate::circuit::check_trail`].
pub fn parse_cert(text: &str) -> Result<Trail> {
    let mut lines = Lines::new(text);
    header(&mut lines, "cert 1")?;
    let (no, line) = lines.next("'<color> <length> <closed>'")?;
    let [color, length, closed] = numbers::<3>(no, line, "'<color> <length> <closed>'")?;
    if closed > 1 {
        return Err(Error::parse(no, "closed flag must be 0 or 1"));
    }
    let (no, line) = lines.next("vertex list")?;
    let vertices = line
        .split_whitespace()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| Error::parse(no, format!("'{f}' is not a vertex id")))
        })
        .collect::<Result<Vec<_>>>()?;
    if vertices.len() != length + 1 {
        return Err(Error::parse(
            no,
            format!("expected {} vertex ids, found {}", length + 1, vertices.len()),
        ));
    }
    lines.finish()?;
    Ok(Trail {
        color,
        vertices,
        closed: closed == 1,
    })
}
