//! Bar-joint frameworks from triangulated 2-skeletons of polytopes,
//! rigidity matrices, and (symmetric) stress space dimensions.
//!
//! The framework of a polytope has one joint per vertex and one bar per
//! polytope edge plus `k - 3` fan chords for every 2-face with `k`
//! vertices, so `e = f_1 + f_02 - 3 f_2`. The stress space is the left
//! kernel of the rigidity matrix; its dimension equals the toric `g_2` of
//! the polytope, which the caller can pass in for an exact cross-check.
//! In symmetric mode the triangulation respects the antipodal action and
//! the folded matrix `R_1 - R_2` yields the symmetric stress dimension.

use serde::Serialize;

use crate::exact::{RatMatrix, RatVector, Rational};
use crate::flags::binom;
use crate::polytope::{is_centrally_symmetric, FaceLattice, VPolytope, VertexSet};
use crate::{Error, Result};

/// Root choice for the fan triangulation of each 2-face. The rank of the
/// rigidity matrix must not depend on this; the alternative root exists to
/// test exactly that.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FanRoot {
    #[default]
    Least,
    SecondLeast,
}

/// Antipodal structure on a framework: involutions on joints and edges.
#[derive(Clone, Debug, Serialize)]
pub struct FrameworkSymmetry {
    pub vertex_pairing: Vec<usize>,
    pub edge_pairing: Vec<usize>,
}

/// A bar-joint framework with exact joint coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct Framework {
    pub dim: usize,
    #[serde(serialize_with = "coords_as_strings")]
    pub coords: Vec<RatVector>,
    pub edges: Vec<(usize, usize)>,
    pub symmetry: Option<FrameworkSymmetry>,
}

fn coords_as_strings<S: serde::Serializer>(
    coords: &[RatVector],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(coords.len()))?;
    for c in coords {
        let strings: Vec<String> = c.iter().map(|r| r.to_string()).collect();
        seq.serialize_element(&strings)?;
    }
    seq.end()
}

/// Walk the boundary cycle of a 2-face, starting at `root` and moving to
/// its smaller-indexed neighbor first.
fn polygon_cycle(face: &VertexSet, edges: &[VertexSet], root: usize) -> Vec<usize> {
    let members = face.to_indices();
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); 128];
    for e in edges {
        if e.is_subset(face) {
            let idx = e.to_indices();
            neighbors[idx[0]].push(idx[1]);
            neighbors[idx[1]].push(idx[0]);
        }
    }
    for v in &members {
        debug_assert_eq!(neighbors[*v].len(), 2, "2-face boundary is a cycle");
        neighbors[*v].sort_unstable();
    }
    let mut cycle = vec![root];
    let mut prev = root;
    let mut cur = neighbors[root][0];
    while cur != root {
        cycle.push(cur);
        let next = if neighbors[cur][0] == prev {
            neighbors[cur][1]
        } else {
            neighbors[cur][0]
        };
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(cycle.len(), members.len());
    cycle
}

/// Fan chords of one polygon: root to every cycle vertex that is not the
/// root or one of its two cycle neighbors.
fn fan_chords(cycle: &[usize]) -> Vec<(usize, usize)> {
    let root = cycle[0];
    cycle[2..cycle.len() - 1]
        .iter()
        .map(|&v| (root.min(v), root.max(v)))
        .collect()
}

fn face_root(face: &VertexSet, fan: FanRoot) -> usize {
    let idx = face.to_indices();
    match fan {
        FanRoot::Least => idx[0],
        FanRoot::SecondLeast => idx[1],
    }
}

/// Build the framework on the triangulated 2-skeleton. In symmetric mode
/// (which requires a cs certificate) one 2-face per antipodal orbit is fan
/// triangulated and its chords are mapped to the partner face by negation,
/// so the edge set is closed under the antipodal involution.
pub fn triangulate_2_skeleton(
    p: &VPolytope,
    lat: &FaceLattice,
    symmetric: bool,
    fan: FanRoot,
) -> Result<Framework> {
    if lat.dim < 3 {
        return Err(Error::InvalidParameter(format!(
            "2-skeleton triangulation needs dimension >= 3, got {}",
            lat.dim
        )));
    }
    let edge_sets: Vec<VertexSet> = lat.layer(1).iter().map(|f| f.vertices).collect();
    let mut edges: Vec<(usize, usize)> = edge_sets
        .iter()
        .map(|e| {
            let idx = e.to_indices();
            (idx[0], idx[1])
        })
        .collect();
    let two_faces: Vec<VertexSet> = lat.layer(2).iter().map(|f| f.vertices).collect();

    let symmetry = if symmetric {
        let cert = is_centrally_symmetric(p).ok_or(Error::NotCentrallySymmetric)?;
        let antipode = |set: &VertexSet| -> VertexSet { set.iter().map(|v| cert.pairing[v]).collect() };
        for face in &two_faces {
            let image = antipode(face);
            if *face > image {
                continue; // handled from the partner face
            }
            let cycle = polygon_cycle(face, &edge_sets, face_root(face, fan));
            for (u, v) in fan_chords(&cycle) {
                edges.push((u, v));
                let (pu, pv) = (cert.pairing[u], cert.pairing[v]);
                edges.push((pu.min(pv), pu.max(pv)));
            }
        }
        Some(cert)
    } else {
        for face in &two_faces {
            let cycle = polygon_cycle(face, &edge_sets, face_root(face, fan));
            edges.extend(fan_chords(&cycle));
        }
        None
    };
    edges.sort_unstable();
    edges.dedup();

    let symmetry = symmetry.map(|cert| {
        let edge_index: std::collections::HashMap<(usize, usize), usize> = edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        let edge_pairing: Vec<usize> = edges
            .iter()
            .map(|&(u, v)| {
                let (pu, pv) = (cert.pairing[u], cert.pairing[v]);
                edge_index[&(pu.min(pv), pu.max(pv))]
            })
            .collect();
        FrameworkSymmetry {
            vertex_pairing: cert.pairing,
            edge_pairing,
        }
    });

    Ok(Framework {
        dim: p.ambient_dim(),
        coords: p.vertices().to_vec(),
        edges,
        symmetry,
    })
}

/// The rigidity matrix: one row per edge `uv` with `p_u - p_v` in the
/// `u` block and `p_v - p_u` in the `v` block. The constant factor 2 from
/// differentiating squared lengths is dropped (rank-irrelevant).
pub fn rigidity_matrix(fw: &Framework) -> RatMatrix {
    let d = fw.dim;
    let v = fw.coords.len();
    let mut m = RatMatrix::zeros(fw.edges.len(), d * v);
    for (row, &(a, b)) in fw.edges.iter().enumerate() {
        let diff = fw.coords[a].sub(&fw.coords[b]);
        for k in 0..d {
            m.set(row, a * d + k, diff[k].clone());
            m.set(row, b * d + k, -diff[k].clone());
        }
    }
    m
}

/// A basis of the stress space `{w : wR = 0}` (the left kernel of the
/// rigidity matrix), one weight per edge.
pub fn stress_basis(fw: &Framework) -> Vec<RatVector> {
    rigidity_matrix(fw).transpose().nullspace_basis()
}

fn opt_rational_as_string<S: serde::Serializer>(
    r: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// Exact stress-space data of a framework.
#[derive(Clone, Debug, Serialize)]
pub struct StressReport {
    pub e: usize,
    pub v: usize,
    pub dim: usize,
    pub rank_r: usize,
    pub stress_dim: usize,
    pub sym_stress_dim: Option<usize>,
    /// Lower bound `e/2 - dv/2 + binom(d,2)` for the symmetric stress
    /// dimension (may be negative).
    pub sym_lower_bound: Option<i64>,
    pub sym_bound_holds: Option<bool>,
    #[serde(serialize_with = "opt_rational_as_string")]
    pub g2_predicted: Option<Rational>,
    /// Whether `stress_dim` equals the predicted toric `g_2`.
    pub g2_matches: Option<bool>,
    /// The factor 2 of the edge-function Jacobian is dropped uniformly.
    pub jacobian_factor_dropped: bool,
}

/// Rank and stress dimensions of a framework; with symmetry present the
/// folded matrix `R_1 - R_2` gives the symmetric stress dimension
/// `e/2 - rk(R_1 - R_2)`, which is checked against its proof lower bound.
pub fn stress_analysis(fw: &Framework, g2_predicted: Option<Rational>) -> Result<StressReport> {
    let e = fw.edges.len();
    let v = fw.coords.len();
    let d = fw.dim;
    let r = rigidity_matrix(fw);
    let rank_r = r.rank();
    let stress_dim = e - rank_r;

    let (sym_stress_dim, sym_lower_bound, sym_bound_holds) = match &fw.symmetry {
        None => (None, None, None),
        Some(sym) => {
            if e % 2 != 0 || v % 2 != 0 {
                return Err(Error::IdentityViolation(
                    "symmetric framework with odd edge or joint count".into(),
                ));
            }
            let folded = folded_matrix(fw, sym);
            let sym_dim = e / 2 - folded.rank();
            let bound = (e / 2) as i64 - (d * v / 2) as i64 + binom(d as u64, 2) as i64;
            let holds = sym_dim as i64 >= bound;
            if !holds {
                return Err(Error::IdentityViolation(format!(
                    "symmetric stress dimension {sym_dim} below its lower bound {bound}"
                )));
            }
            (Some(sym_dim), Some(bound), Some(holds))
        }
    };

    let g2_matches = g2_predicted
        .as_ref()
        .map(|g2| Rational::from_integer((stress_dim as i64).into()) == *g2);
    Ok(StressReport {
        e,
        v,
        dim: d,
        rank_r,
        stress_dim,
        sym_stress_dim,
        sym_lower_bound,
        sym_bound_holds,
        g2_predicted,
        g2_matches,
        jacobian_factor_dropped: true,
    })
}

/// The folded matrix `R_1 - R_2` of the antipodal block structure: rows are
/// representative edges, columns are representative joints, and a bar end
/// landing on a non-representative joint contributes with a minus sign at
/// its partner's block.
fn folded_matrix(fw: &Framework, sym: &FrameworkSymmetry) -> RatMatrix {
    let d = fw.dim;
    let reps: Vec<usize> = (0..fw.coords.len())
        .filter(|&v| v < sym.vertex_pairing[v])
        .collect();
    let mut pos = vec![usize::MAX; fw.coords.len()];
    for (i, &v) in reps.iter().enumerate() {
        pos[v] = i;
    }
    let rep_edges: Vec<usize> = (0..fw.edges.len())
        .filter(|&i| i <= sym.edge_pairing[i])
        .collect();
    let mut m = RatMatrix::zeros(rep_edges.len(), d * reps.len());
    for (row, &ei) in rep_edges.iter().enumerate() {
        let (a, b) = fw.edges[ei];
        let diff = fw.coords[a].sub(&fw.coords[b]);
        for (joint, sign) in [(a, 1i64), (b, -1i64)] {
            let (block, flip) = if pos[joint] != usize::MAX {
                (pos[joint], false)
            } else {
                (pos[sym.vertex_pairing[joint]], true)
            };
            for k in 0..d {
                let mut val = if sign == 1 {
                    diff[k].clone()
                } else {
                    -diff[k].clone()
                };
                if flip {
                    val = -val;
                }
                let cur = m.get(row, block * d + k).clone();
                m.set(row, block * d + k, cur + val);
            }
        }
    }
    m
}
