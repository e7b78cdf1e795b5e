//! File formats: the polytope text format, the graph format, functional
//! JSON, and the JSON exports for lattices, frameworks and reports.
//!
//! Polytope files: line 1 is `d n` (ambient dimension and vertex count),
//! followed by `n` lines of `d` rationals in `p/q` syntax.
//! Graph files: line 1 is `n m`, followed by `m` lines `u v` (0-based).
//! Functional files: JSON `{name, terms: [{S: [ints], coeff: "p/q"}]}`,
//! either a single object or an array of them.

use std::path::Path;

use serde::Deserialize;

use crate::constructors::Graph;
use crate::exact::{parse_rational, RatVector};
use crate::flags::Functional;
use crate::polytope::{FaceLattice, VPolytope};
use crate::{Error, Result};

fn format_error(file: &str, line: usize, msg: impl Into<String>) -> Error {
    Error::FileFormat {
        file: file.to_string(),
        line,
        msg: msg.into(),
    }
}

/// Serialize a polytope into the text format.
pub fn polytope_to_string(p: &VPolytope) -> String {
    let mut out = format!("{} {}\n", p.ambient_dim(), p.n_vertices());
    for v in p.vertices() {
        let coords: Vec<String> = v.iter().map(|r| r.to_string()).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

/// Parse the polytope text format. The vertex list is revalidated, so a
/// file listing non-vertex points is accepted and minimized.
pub fn polytope_from_str(content: &str, file: &str) -> Result<VPolytope> {
    let mut lines = content.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| format_error(file, 1, "empty polytope file"))?;
    let mut parts = header.split_whitespace();
    let d: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| format_error(file, header_no + 1, "expected 'd n' header"))?;
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| format_error(file, header_no + 1, "expected 'd n' header"))?;
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| format_error(file, header_no + 1, format!("expected {n} vertex lines")))?;
        let coords: Vec<_> = line.split_whitespace().collect();
        if coords.len() != d {
            return Err(format_error(
                file,
                no + 1,
                format!("expected {d} coordinates, found {}", coords.len()),
            ));
        }
        let mut v = Vec::with_capacity(d);
        for c in coords {
            v.push(
                parse_rational(c)
                    .map_err(|_| format_error(file, no + 1, format!("invalid rational {c:?}")))?,
            );
        }
        points.push(RatVector::new(v));
    }
    if let Some((no, _)) = lines.next() {
        return Err(format_error(file, no + 1, "trailing content after vertex list"));
    }
    VPolytope::from_points(points)
}

pub fn read_polytope_file(path: impl AsRef<Path>) -> Result<VPolytope> {
    let path = path.as_ref();
    let content = std::fs::read_to_string(path)?;
    polytope_from_str(&content, &path.display().to_string())
}

pub fn write_polytope_file(path: impl AsRef<Path>, p: &VPolytope) -> Result<()> {
    std::fs::write(path, polytope_to_string(p))?;
    Ok(())
}

/// Parse the graph text format.
pub fn graph_from_str(content: &str, file: &str) -> Result<Graph> {
    let mut lines = content.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| format_error(file, 1, "empty graph file"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| format_error(file, header_no + 1, "expected 'n m' header"))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| format_error(file, header_no + 1, "expected 'n m' header"))?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, line) = lines
            .next()
            .ok_or_else(|| format_error(file, header_no + 1, format!("expected {m} edge lines")))?;
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| format_error(file, no + 1, "expected 'u v'"))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| format_error(file, no + 1, "expected 'u v'"))?;
        edges.push((u, v));
    }
    Graph::new(n, &edges)
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let content = std::fs::read_to_string(path)?;
    graph_from_str(&content, &path.display().to_string())
}

#[derive(Deserialize)]
struct TermSpec {
    #[serde(rename = "S")]
    s: Vec<usize>,
    coeff: String,
}

#[derive(Deserialize)]
struct FunctionalSpec {
    name: String,
    terms: Vec<TermSpec>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FunctionalFile {
    One(FunctionalSpec),
    Many(Vec<FunctionalSpec>),
}

/// Parse one functional or a list of functionals from JSON.
pub fn functionals_from_str(content: &str) -> Result<Vec<Functional>> {
    let file: FunctionalFile = serde_json::from_str(content)?;
    let specs = match file {
        FunctionalFile::One(f) => vec![f],
        FunctionalFile::Many(fs) => fs,
    };
    specs
        .into_iter()
        .map(|spec| {
            let terms = spec
                .terms
                .into_iter()
                .map(|t| Ok((t.s, parse_rational(&t.coeff)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Functional::new(spec.name, terms))
        })
        .collect()
}

pub fn read_functionals_file(path: impl AsRef<Path>) -> Result<Vec<Functional>> {
    let content = std::fs::read_to_string(path)?;
    functionals_from_str(&content)
}

/// Lattice export: a JSON list of `{vertices: [indices], dim}`.
pub fn lattice_to_json(lat: &FaceLattice) -> Result<String> {
    Ok(serde_json::to_string_pretty(lat.faces())?)
}

/// An affinely isomorphic full-dimensional copy: identity when already
/// full-dimensional, otherwise the projection onto an independent
/// coordinate subset.
pub fn full_dimensional_copy(p: &VPolytope) -> Result<VPolytope> {
    if p.intrinsic_dim() == p.ambient_dim() {
        return Ok(p.clone());
    }
    let coords = crate::exact::independent_coordinates(p.vertices())?;
    VPolytope::from_points(p.vertices().iter().map(|v| v.select(&coords)).collect())
}
