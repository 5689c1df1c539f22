//! Reading and writing triangle meshes in the OFF format.

use std::fmt::Write as _;
use std::path::Path;

use super::mesh::TriangleMesh;
use crate::error::{Error, Result};
use crate::real::Real;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses an OFF document. Only triangular faces are accepted.
pub fn parse_off<T: Real>(text: &str) -> Result<TriangleMesh<T>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty file, expected 'OFF'"))?;
    let rest = header
        .strip_prefix("OFF")
        .ok_or_else(|| parse_err(hline, format!("expected 'OFF', found '{header}'")))?
        .trim();
    let (cline, counts) = if rest.is_empty() {
        lines.next().ok_or_else(|| parse_err(hline + 1, "missing 'V F E' counts"))?
    } else {
        (hline, rest)
    };
    let counts: Vec<usize> = counts
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| parse_err(cline, format!("invalid count '{t}'"))))
        .collect::<Result<_>>()?;
    if counts.len() < 2 {
        return Err(parse_err(cline, "expected 'V F E'"));
    }
    let (nv, nf) = (counts[0], counts[1]);

    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (ln, l) = lines.next().ok_or_else(|| parse_err(text.lines().count(), "unexpected end of file in vertex list"))?;
        let vals: Vec<f64> = l
            .split_whitespace()
            .take(3)
            .map(|t| t.parse::<f64>().map_err(|_| parse_err(ln, format!("invalid coordinate '{t}'"))))
            .collect::<Result<_>>()?;
        if vals.len() < 3 {
            return Err(parse_err(ln, "vertex needs three coordinates"));
        }
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(parse_err(ln, "non-finite coordinate"));
        }
        vertices.push([T::c(vals[0]), T::c(vals[1]), T::c(vals[2])]);
    }
    let mut triangles = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (ln, l) = lines.next().ok_or_else(|| parse_err(text.lines().count(), "unexpected end of file in face list"))?;
        let idx: Vec<usize> = l
            .split_whitespace()
            .take(4)
            .map(|t| t.parse().map_err(|_| parse_err(ln, format!("invalid index '{t}'"))))
            .collect::<Result<_>>()?;
        if idx.first() != Some(&3) {
            return Err(parse_err(ln, "only triangular faces ('3 i j k') are supported"));
        }
        if idx.len() < 4 {
            return Err(parse_err(ln, "face needs three vertex indices"));
        }
        if let Some(&bad) = idx[1..].iter().find(|&&i| i >= nv) {
            return Err(parse_err(ln, format!("vertex index {bad} out of range (V = {nv})")));
        }
        triangles.push([idx[1], idx[2], idx[3]]);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "trailing data after the face list"));
    }
    TriangleMesh::new(vertices, triangles)
}

pub fn read_off<T: Real>(path: impl AsRef<Path>) -> Result<TriangleMesh<T>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_owned(), source })?;
    parse_off(&text)
}

/// OFF text with shortest round-trip decimal coordinates.
pub fn to_off_string<T: Real>(mesh: &TriangleMesh<T>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "OFF\n{} {} 0", mesh.vertex_count(), mesh.triangle_count());
    for v in mesh.vertices() {
        let _ = writeln!(s, "{} {} {}", v[0].to_f64_lossy(), v[1].to_f64_lossy(), v[2].to_f64_lossy());
    }
    for t in mesh.triangles() {
        let _ = writeln!(s, "3 {} {} {}", t[0], t[1], t[2]);
    }
    s
}

pub fn write_off<T: Real>(mesh: &TriangleMesh<T>, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_off_string(mesh)).map_err(|source| Error::Io { path: path.to_owned(), source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::icosphere;

    #[test]
    fn round_trip() {
        let m = icosphere::<f64>(2);
        let back: TriangleMesh<f64> = parse_off(&to_off_string(&m)).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn comments_and_inline_counts() {
        let text = "# a tetrahedron\nOFF 4 4 6\n\n1 1 1\n1 -1 -1 # corner\n-1 1 -1\n-1 -1 1\n3 0 1 2\n3 0 3 1\n3 0 2 3\n3 1 3 2\n";
        let m: TriangleMesh<f64> = parse_off(text).unwrap();
        assert_eq!(m.euler_characteristic().unwrap(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("PLY\n", 1),
            ("OFF\n3 1 0\n0 0 0\n1 0 x\n0 1 0\n3 0 1 2\n", 4),
            ("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n4 0 1 2 2\n", 6),
            ("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 7\n", 6),
        ];
        for (text, line) in cases {
            match parse_off::<f64>(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
