//! The combinatorial kernel: exact vertex polytopes, facet enumeration,
//! face lattices, combinatorial duals and lattice isomorphism.
//!
//! Facets are computed from the vertex list by an incremental double
//! description pass on the homogenization cone: the extreme rays of
//! `{(a, a0) : <a, v> <= a0 for all vertices v}` are exactly the facet
//! inequalities of the polytope. All arithmetic is over exact integers
//! after clearing denominators, so the output is certified by construction.
//! A brute-force hyperplane-search oracle lives in the test module.

use std::collections::{BTreeMap, HashSet};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::{affine_dim, independent_coordinates, Int, RatMatrix, RatVector, Rational};
use crate::{Error, Result};

/// Default backtracking budget for [`lattice_isomorphic`].
pub const DEFAULT_ISO_NODE_BUDGET: u64 = 10_000_000;

/// A subset of vertex indices, stored as a 128-bit mask. Every polytope in
/// scope has at most 128 vertices; constructors enforce the bound.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(i: usize) -> VertexSet {
        VertexSet(1u128 << i)
    }

    pub fn full(n: usize) -> VertexSet {
        if n == 128 {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..128).filter(move |&i| self.contains(i))
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// A polytope given by its exact vertex list. Invariants: the points are
/// pairwise distinct, each is a genuine vertex of the hull, and they are
/// sorted lexicographically by coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VPolytope {
    vertices: Vec<RatVector>,
    ambient_dim: usize,
    intrinsic_dim: usize,
}

/// Facets of a polytope as vertex-index sets plus exact supporting
/// hyperplanes `(a, a0)` with `<a, x> <= a0` valid and tight on the facet.
/// Normals are primitive integer vectors (content 1).
#[derive(Clone, Debug)]
pub struct IncidenceStructure {
    pub n_vertices: usize,
    pub facets: Vec<VertexSet>,
    pub facet_normals: Vec<(RatVector, Rational)>,
}

/// The graded face lattice: every face as a vertex set with its dimension,
/// including the empty face (dim -1) and the polytope itself (dim d).
/// Faces are sorted by (dimension, vertex set) and addressable per layer.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub dim: i32,
    pub n_vertices: usize,
    faces: Vec<Face>,
    /// `layer_start[k]` is the index of the first face of dimension `k-1`;
    /// layers run from dim -1 up to dim `dim`.
    layer_start: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Face {
    #[serde(serialize_with = "serialize_vertex_set", rename = "vertices")]
    pub vertices: VertexSet,
    pub dim: i32,
}

fn serialize_vertex_set<S: serde::Serializer>(v: &VertexSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let idx = v.to_indices();
    let mut seq = s.serialize_seq(Some(idx.len()))?;
    for i in idx {
        seq.serialize_element(&i)?;
    }
    seq.end()
}

/// Witness that a polytope is centrally symmetric: the fixed-point-free
/// involution sending each vertex index to the index of its negative.
#[derive(Clone, Debug)]
pub struct CsCertificate {
    pub pairing: Vec<usize>,
}

impl VPolytope {
    /// Build a polytope from an arbitrary exact point list: deduplicates,
    /// discards points that are not vertices of the convex hull, and sorts
    /// the survivors lexicographically.
    pub fn from_points(points: Vec<RatVector>) -> Result<VPolytope> {
        if points.is_empty() {
            return Err(Error::Degenerate("empty point set".into()));
        }
        let ambient = points[0].len();
        if points.iter().any(|p| p.len() != ambient) {
            return Err(Error::DimensionMismatch(
                "points of unequal ambient dimension".into(),
            ));
        }
        let mut dedup: Vec<RatVector> = Vec::new();
        let mut seen = HashSet::new();
        for p in points {
            if seen.insert(p.clone()) {
                dedup.push(p);
            }
        }
        if dedup.len() > 128 {
            return Err(Error::TooManyVertices(dedup.len()));
        }
        let dim = affine_dim(&dedup)?;
        let vertices = if dim == 0 {
            dedup
        } else {
            let (rays, _pts) = dd_on_projection(&dedup, dim)?;
            // A point is a vertex iff its active facet normals span the
            // full (projected) space.
            let mut keep = Vec::new();
            for (i, p) in dedup.iter().enumerate() {
                let active: Vec<RatVector> = rays
                    .iter()
                    .filter(|ray| ray.active.contains(i))
                    .map(|ray| RatVector::new(ray.normal_rationals()))
                    .collect();
                if !active.is_empty() {
                    let m = RatMatrix::from_rows(active)?;
                    if m.rank() == dim {
                        keep.push(p.clone());
                    }
                }
            }
            keep
        };
        let mut vertices = vertices;
        vertices.sort();
        Ok(VPolytope {
            ambient_dim: ambient,
            intrinsic_dim: dim,
            vertices,
        })
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn intrinsic_dim(&self) -> usize {
        self.intrinsic_dim
    }

    /// Complete facet list with exact supporting hyperplanes. Inputs that
    /// are not full-dimensional are first projected isomorphically onto an
    /// independent coordinate subset; the reported normals are lifted back
    /// to the ambient space (zero on the dropped coordinates).
    pub fn facet_enumeration(&self) -> Result<IncidenceStructure> {
        if self.intrinsic_dim < 1 {
            return Err(Error::Degenerate(format!(
                "facet enumeration needs dimension >= 1, got {}",
                self.intrinsic_dim
            )));
        }
        let (rays, coords) = dd_on_projection(&self.vertices, self.intrinsic_dim)?;
        let mut facets: Vec<(VertexSet, RatVector, Rational)> = rays
            .into_iter()
            .map(|ray| {
                let mut normal = vec![Rational::zero(); self.ambient_dim];
                for (k, &c) in coords.iter().enumerate() {
                    normal[c] = Rational::from_integer(ray.v[k].clone());
                }
                let a0 = Rational::from_integer(ray.v[coords.len()].clone());
                (ray.active, RatVector::new(normal), a0)
            })
            .collect();
        facets.sort_by_key(|(set, _, _)| *set);
        let inc = IncidenceStructure {
            n_vertices: self.vertices.len(),
            facets: facets.iter().map(|(s, _, _)| *s).collect(),
            facet_normals: facets.into_iter().map(|(_, a, a0)| (a, a0)).collect(),
        };
        debug_assert!(self.check_incidence(&inc));
        Ok(inc)
    }

    fn check_incidence(&self, inc: &IncidenceStructure) -> bool {
        (0..self.vertices.len()).all(|v| {
            inc.facets.iter().filter(|f| f.contains(v)).count() >= self.intrinsic_dim
        })
    }

    /// Convenience: facet enumeration followed by lattice construction.
    pub fn face_lattice(&self) -> Result<FaceLattice> {
        let inc = self.facet_enumeration()?;
        face_lattice(self, &inc)
    }
}

/// One extreme ray of the double description computation, as a primitive
/// integer vector together with the set of input points it is tight on.
struct Ray {
    v: Vec<Int>,
    active: VertexSet,
}

impl Ray {
    fn normal_rationals(&self) -> Vec<Rational> {
        self.v[..self.v.len() - 1]
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect()
    }
}

fn primitive(mut v: Vec<Int>) -> Vec<Int> {
    let content = v.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if !content.is_zero() && !content.is_one() {
        for x in &mut v {
            *x = &*x / &content;
        }
    }
    v
}

/// Project points onto an independent coordinate subset of size `dim` and
/// run the double description pass there. Returns the facet rays (in the
/// projected homogeneous space) and the chosen coordinates.
fn dd_on_projection(points: &[RatVector], dim: usize) -> Result<(Vec<Ray>, Vec<usize>)> {
    let coords = independent_coordinates(points)?;
    debug_assert_eq!(coords.len(), dim);
    let projected: Vec<RatVector> = points.iter().map(|p| p.select(&coords)).collect();
    let rays = dd_facet_rays(&projected, dim)?;
    Ok((rays, coords))
}

/// Double description on the homogenization cone of a full-dimensional
/// point set: constraint rows are `(-v, 1)`, and the extreme rays of
/// `{y : My >= 0}` are exactly the facet inequalities `(a, a0)`.
fn dd_facet_rays(points: &[RatVector], dim: usize) -> Result<Vec<Ray>> {
    let n = points.len();
    let hom = dim + 1;
    // Integer constraint rows (-v | 1), scaled to clear denominators.
    let rows: Vec<Vec<Int>> = points
        .iter()
        .map(|p| {
            let mut r: Vec<Rational> = p.iter().map(|x| -x).collect();
            r.push(Rational::one());
            RatVector::new(r).to_primitive_integer()
        })
        .collect();

    // Pick an initial basis of hom linearly independent rows.
    let basis = {
        let mut chosen: Vec<usize> = Vec::new();
        for i in 0..n {
            let mut trial: Vec<RatVector> = chosen
                .iter()
                .map(|&j| RatVector::new(rows[j].iter().map(|x| Rational::from_integer(x.clone())).collect()))
                .collect();
            trial.push(RatVector::new(
                rows[i].iter().map(|x| Rational::from_integer(x.clone())).collect(),
            ));
            if RatMatrix::from_rows(trial)?.rank() == chosen.len() + 1 {
                chosen.push(i);
                if chosen.len() == hom {
                    break;
                }
            }
        }
        if chosen.len() < hom {
            return Err(Error::Degenerate(format!(
                "point set does not affinely span dimension {dim}"
            )));
        }
        chosen
    };

    // Initial rays: columns of the (rational) inverse of the basis matrix,
    // scaled to primitive integers and oriented into the cone.
    let mut rays: Vec<Ray> = {
        let b = RatMatrix::from_rows(
            basis
                .iter()
                .map(|&i| {
                    RatVector::new(rows[i].iter().map(|x| Rational::from_integer(x.clone())).collect())
                })
                .collect(),
        )?;
        let inv = invert(&b).ok_or_else(|| Error::Degenerate("singular basis in dd".into()))?;
        (0..hom)
            .map(|j| {
                let col = RatVector::new((0..hom).map(|i| inv.get(i, j).clone()).collect());
                let mut v = col.to_primitive_integer();
                // Orient: the basis row j must evaluate positively.
                let val = dot_int(&rows[basis[j]], &v);
                if val.is_negative() {
                    for x in &mut v {
                        *x = -x.clone();
                    }
                }
                Ray {
                    v,
                    active: VertexSet::EMPTY,
                }
            })
            .collect()
    };

    // Process constraints one by one, maintaining active sets over the
    // constraints handled so far.
    let in_basis: HashSet<usize> = basis.iter().copied().collect();
    for &i in &basis {
        for ray in rays.iter_mut() {
            if dot_int(&rows[i], &ray.v).is_zero() {
                ray.active.insert(i);
            }
        }
    }
    for i in 0..n {
        if in_basis.contains(&i) {
            continue;
        }
        let vals: Vec<Int> = rays.iter().map(|r| dot_int(&rows[i], &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        if neg.is_empty() {
            for (k, ray) in rays.iter_mut().enumerate() {
                if vals[k].is_zero() {
                    ray.active.insert(i);
                }
            }
            continue;
        }
        let mut new_rays: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].active.intersect(&rays[q].active);
                // Combinatorial adjacency: no third ray is tight on all
                // common constraints of the pair.
                let adjacent = rays.iter().enumerate().all(|(k, r)| {
                    k == p || k == q || !common.is_subset(&r.active)
                });
                if !adjacent {
                    continue;
                }
                let w: Vec<Int> = (0..hom)
                    .map(|t| &vals[p] * &rays[q].v[t] - &vals[q] * &rays[p].v[t])
                    .collect();
                let w = primitive(w);
                let mut active = common;
                active.insert(i);
                new_rays.push(Ray { v: w, active });
            }
        }
        let mut kept: Vec<Ray> = Vec::new();
        for (k, mut ray) in rays.into_iter().enumerate() {
            if vals[k].is_negative() {
                continue;
            }
            if vals[k].is_zero() {
                ray.active.insert(i);
            }
            kept.push(ray);
        }
        kept.extend(new_rays);
        rays = kept;
    }

    // Recompute full active sets (facet vertex incidences) and sanity-check
    // feasibility of every ray on every constraint.
    for ray in rays.iter_mut() {
        let mut active = VertexSet::EMPTY;
        for (i, row) in rows.iter().enumerate() {
            let v = dot_int(row, &ray.v);
            if v.is_negative() {
                return Err(Error::IdentityViolation(
                    "double description produced an infeasible ray".into(),
                ));
            }
            if v.is_zero() {
                active.insert(i);
            }
        }
        ray.active = active;
    }
    Ok(rays)
}

fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Rational matrix inverse by Gauss–Jordan; `None` when singular.
fn invert(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.rows();
    if n != m.cols() {
        return None;
    }
    let mut a: Vec<Vec<Rational>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        inv.swap(c, p);
        let d = a[c][c].recip();
        for j in 0..n {
            a[c][j] = &a[c][j] * &d;
            inv[c][j] = &inv[c][j] * &d;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..n {
                    a[i][j] = &a[i][j] - &f * &a[c][j];
                    inv[i][j] = &inv[i][j] - &f * &inv[c][j];
                }
            }
        }
    }
    let mut out = RatMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, inv[r][c].clone());
        }
    }
    Some(out)
}

/// Build the full face lattice from the facet incidences: the face set is
/// the closure of the facet vertex sets under intersection, plus the whole
/// polytope; dimensions come from the affine hull of each face's vertices.
pub fn face_lattice(p: &VPolytope, inc: &IncidenceStructure) -> Result<FaceLattice> {
    let n = p.n_vertices();
    let d = p.intrinsic_dim() as i32;
    let full = VertexSet::full(n);
    let mut seen: HashSet<VertexSet> = HashSet::new();
    seen.insert(full);
    seen.insert(VertexSet::EMPTY);
    let mut frontier: Vec<VertexSet> = Vec::new();
    for f in &inc.facets {
        if seen.insert(*f) {
            frontier.push(*f);
        }
    }
    let mut all: Vec<VertexSet> = frontier.clone();
    while let Some(face) = frontier.pop() {
        for f in &inc.facets {
            let inter = face.intersect(f);
            if seen.insert(inter) {
                frontier.push(inter);
                all.push(inter);
            }
        }
    }
    let mut faces: Vec<Face> = Vec::with_capacity(all.len() + 2);
    faces.push(Face {
        vertices: VertexSet::EMPTY,
        dim: -1,
    });
    for set in all {
        let pts: Vec<RatVector> = set.iter().map(|i| p.vertices()[i].clone()).collect();
        let dim = affine_dim(&pts)? as i32;
        faces.push(Face {
            vertices: set,
            dim,
        });
    }
    faces.push(Face {
        vertices: full,
        dim: d,
    });
    assemble_lattice(d, n, faces)
}

fn assemble_lattice(d: i32, n_vertices: usize, mut faces: Vec<Face>) -> Result<FaceLattice> {
    faces.sort_by_key(|f| (f.dim, f.vertices));
    faces.dedup_by_key(|f| f.vertices);
    let n_layers = (d + 2) as usize;
    let mut layer_start = vec![0usize; n_layers + 1];
    let mut idx = 0;
    for k in 0..n_layers {
        let dim = k as i32 - 1;
        layer_start[k] = idx;
        while idx < faces.len() && faces[idx].dim == dim {
            idx += 1;
        }
    }
    layer_start[n_layers] = faces.len();
    if idx != faces.len() {
        return Err(Error::IdentityViolation(
            "face of dimension outside [-1, d] in lattice".into(),
        ));
    }
    Ok(FaceLattice {
        dim: d,
        n_vertices,
        faces,
        layer_start,
    })
}

impl FaceLattice {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Faces of dimension `dim` (may be `-1` or `self.dim`).
    pub fn layer(&self, dim: i32) -> &[Face] {
        let k = (dim + 1) as usize;
        &self.faces[self.layer_start[k]..self.layer_start[k + 1]]
    }

    /// Face counts `f_0, ..., f_{d-1}` of the proper nonempty layers.
    pub fn f_vector(&self) -> Vec<u64> {
        (0..self.dim)
            .map(|k| self.layer(k).len() as u64)
            .collect()
    }

    /// Total number of faces including the empty face and the polytope.
    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    /// Euler relation `sum_i (-1)^i f_i = 1 - (-1)^d`.
    pub fn euler_ok(&self) -> bool {
        let mut sum: i64 = 0;
        for (i, f) in self.f_vector().iter().enumerate() {
            let s = if i % 2 == 0 { 1 } else { -1 };
            sum += s * *f as i64;
        }
        sum == 1 - if self.dim % 2 == 0 { 1 } else { -1 }
    }

    /// Every rank-2 interval has exactly 4 elements. This is the standard
    /// polytopality sanity check on the computed lattice.
    pub fn diamond_ok(&self) -> bool {
        for dim in -1..self.dim - 1 {
            let lower = self.layer(dim);
            let upper = self.layer(dim + 2);
            let mid = self.layer(dim + 1);
            for lo in lower {
                for hi in upper {
                    if !lo.vertices.is_subset(&hi.vertices) {
                        continue;
                    }
                    let count = mid
                        .iter()
                        .filter(|m| {
                            lo.vertices.is_subset(&m.vertices)
                                && m.vertices.is_subset(&hi.vertices)
                        })
                        .count();
                    if count != 2 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Order-reversed lattice: the dual's ground set is the primal facet list,
/// the face corresponding to a primal face `G` is the set of facets
/// containing `G`, and dimensions map via `i -> d-1-i`.
pub fn combinatorial_dual(lat: &FaceLattice) -> FaceLattice {
    let d = lat.dim;
    let coatoms: Vec<VertexSet> = lat.layer(d - 1).iter().map(|f| f.vertices).collect();
    let faces: Vec<Face> = lat
        .faces()
        .iter()
        .map(|f| {
            let mut set = VertexSet::EMPTY;
            for (j, c) in coatoms.iter().enumerate() {
                if f.vertices.is_subset(c) && f.dim < d {
                    set.insert(j);
                }
            }
            if f.dim == d {
                set = VertexSet::EMPTY;
            }
            Face {
                vertices: set,
                dim: d - 1 - f.dim,
            }
        })
        .collect();
    assemble_lattice(d, coatoms.len(), faces).expect("dual of a graded lattice is graded")
}

/// Detect central symmetry: returns the antipodal vertex pairing when the
/// negation of every vertex is again a vertex, and nothing otherwise.
pub fn is_centrally_symmetric(p: &VPolytope) -> Option<CsCertificate> {
    let index: BTreeMap<&RatVector, usize> = p
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut pairing = vec![0usize; p.n_vertices()];
    for (i, v) in p.vertices().iter().enumerate() {
        let neg = v.neg();
        match index.get(&neg) {
            Some(&j) if j != i => pairing[i] = j,
            _ => return None,
        }
    }
    Some(CsCertificate { pairing })
}

/// Graded-poset isomorphism of two face lattices, decided by backtracking
/// on the vertex/facet incidence bipartite graph with color-refinement
/// pruning. Exceeding the node budget reports inconclusive, never `false`.
pub fn lattice_isomorphic(a: &FaceLattice, b: &FaceLattice, node_budget: u64) -> Result<bool> {
    if a.dim != b.dim || a.n_vertices != b.n_vertices || a.f_vector() != b.f_vector() {
        return Ok(false);
    }
    let fa: Vec<VertexSet> = a.layer(a.dim - 1).iter().map(|f| f.vertices).collect();
    let fb: Vec<VertexSet> = b.layer(b.dim - 1).iter().map(|f| f.vertices).collect();
    let n = a.n_vertices;

    let color_a = refine_colors(n, &fa);
    let color_b = refine_colors(n, &fb);
    let mut hist_a: BTreeMap<u64, usize> = BTreeMap::new();
    let mut hist_b: BTreeMap<u64, usize> = BTreeMap::new();
    for &c in &color_a.vertex {
        *hist_a.entry(c).or_default() += 1;
    }
    for &c in &color_b.vertex {
        *hist_b.entry(c).or_default() += 1;
    }
    if hist_a != hist_b || {
        let mut fa_h: Vec<u64> = color_a.facet.clone();
        let mut fb_h: Vec<u64> = color_b.facet.clone();
        fa_h.sort_unstable();
        fb_h.sort_unstable();
        fa_h != fb_h
    } {
        return Ok(false);
    }

    // Map vertices in order of ascending color-class size (most constrained
    // first).
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (hist_a[&color_a.vertex[v]], color_a.vertex[v], v));

    let mut state = IsoState {
        fa: &fa,
        fb: &fb,
        color_a: &color_a,
        color_b: &color_b,
        order: &order,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        nodes: 0,
        budget: node_budget,
    };
    match state.search(0) {
        SearchOutcome::Found => Ok(true),
        SearchOutcome::Exhausted => Ok(false),
        SearchOutcome::BudgetExceeded => Err(Error::IsoInconclusive(node_budget)),
    }
}

struct Colors {
    vertex: Vec<u64>,
    facet: Vec<u64>,
}

/// Iterated bipartite color refinement (vertex colors feed facet colors and
/// back) until stable; the final colors are isomorphism invariants.
fn refine_colors(n: usize, facets: &[VertexSet]) -> Colors {
    let mut vc: Vec<u64> = vec![0; n];
    let mut fc: Vec<u64> = vec![0; facets.len()];
    for _ in 0..n + facets.len() {
        let mut new_fc: Vec<u64> = Vec::with_capacity(facets.len());
        for (j, f) in facets.iter().enumerate() {
            let mut sig: Vec<u64> = f.iter().map(|v| vc[v]).collect();
            sig.sort_unstable();
            new_fc.push(hash_sig(fc[j], &sig));
        }
        let mut new_vc: Vec<u64> = Vec::with_capacity(n);
        for v in 0..n {
            let mut sig: Vec<u64> = facets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.contains(v))
                .map(|(j, _)| new_fc[j])
                .collect();
            sig.sort_unstable();
            new_vc.push(hash_sig(vc[v], &sig));
        }
        if new_vc == vc && new_fc == fc {
            break;
        }
        vc = new_vc;
        fc = new_fc;
    }
    Colors {
        vertex: vc,
        facet: fc,
    }
}

fn hash_sig(prev: u64, sig: &[u64]) -> u64 {
    use std::collections::hash_map::DefaultHasher;
    use std::hash::{Hash, Hasher};
    let mut h = DefaultHasher::new();
    prev.hash(&mut h);
    sig.hash(&mut h);
    h.finish()
}

enum SearchOutcome {
    Found,
    Exhausted,
    BudgetExceeded,
}

struct IsoState<'a> {
    fa: &'a [VertexSet],
    fb: &'a [VertexSet],
    color_a: &'a Colors,
    color_b: &'a Colors,
    order: &'a [usize],
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl IsoState<'_> {
    fn search(&mut self, depth: usize) -> SearchOutcome {
        if depth == self.order.len() {
            return if self.facets_map_bijectively() {
                SearchOutcome::Found
            } else {
                SearchOutcome::Exhausted
            };
        }
        let v = self.order[depth];
        for w in 0..self.image.len() {
            if self.used[w] || self.color_b.vertex[w] != self.color_a.vertex[v] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return SearchOutcome::BudgetExceeded;
            }
            self.image[v] = w;
            self.used[w] = true;
            if self.consistent(v) {
                match self.search(depth + 1) {
                    SearchOutcome::Found => return SearchOutcome::Found,
                    SearchOutcome::BudgetExceeded => return SearchOutcome::BudgetExceeded,
                    SearchOutcome::Exhausted => {}
                }
            }
            self.image[v] = usize::MAX;
            self.used[w] = false;
        }
        SearchOutcome::Exhausted
    }

    /// Every facet of `a` must still admit a facet of `b` that agrees with
    /// it on the mapped vertices (and conversely by symmetry of counts).
    fn consistent(&self, _last: usize) -> bool {
        let mapped: VertexSet = self
            .image
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != usize::MAX)
            .map(|(v, _)| v)
            .collect();
        let mapped_img: VertexSet = self
            .image
            .iter()
            .filter(|&&w| w != usize::MAX)
            .copied()
            .collect();
        'outer: for (j, f) in self.fa.iter().enumerate() {
            let dom = f.intersect(&mapped);
            let img: VertexSet = dom.iter().map(|v| self.image[v]).collect();
            for (k, g) in self.fb.iter().enumerate() {
                if self.color_b.facet[k] != self.color_a.facet[j] {
                    continue;
                }
                if img.is_subset(g) && g.intersect(&mapped_img) == img {
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    fn facets_map_bijectively(&self) -> bool {
        let mut images: Vec<VertexSet> = self
            .fa
            .iter()
            .map(|f| f.iter().map(|v| self.image[v]).collect())
            .collect();
        images.sort();
        let mut target: Vec<VertexSet> = self.fb.to_vec();
        target.sort();
        images == target
    }
}

/// Isomorphism budget from `CSPOLY_NODE_BUDGET`, falling back to the
/// default when unset or unparsable.
pub fn iso_budget_from_env() -> u64 {
    std::env::var("CSPOLY_NODE_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ISO_NODE_BUDGET)
}

#[cfg(test)]
pub(crate) mod test_oracles {
    //! Brute-force oracles kept independent of the double description path.

    use super::*;

    /// Exhaustive hyperplane search: for every `dim`-subset of vertices
    /// spanning a hyperplane, keep it if all vertices lie weakly on one
    /// side. Returns canonical (sorted) facet vertex sets.
    pub fn brute_force_facets(p: &VPolytope) -> Vec<VertexSet> {
        let coords = independent_coordinates(p.vertices()).unwrap();
        let pts: Vec<RatVector> = p.vertices().iter().map(|v| v.select(&coords)).collect();
        let d = p.intrinsic_dim();
        let n = pts.len();
        let mut found: HashSet<VertexSet> = HashSet::new();
        let mut subset: Vec<usize> = Vec::new();
        subsets(n, d, &mut subset, &mut |s| {
            // Hyperplane through the subset: nullspace of rows (v | -1).
            let rows: Vec<RatVector> = s
                .iter()
                .map(|&i| {
                    let mut r: Vec<Rational> = pts[i].as_slice().to_vec();
                    r.push(-Rational::one());
                    RatVector::new(r)
                })
                .collect();
            let m = RatMatrix::from_rows(rows).unwrap();
            let basis = m.nullspace_basis();
            if basis.len() != 1 {
                return; // not affinely independent (or degenerate)
            }
            let h = &basis[0];
            let a = RatVector::new(h.as_slice()[..d].to_vec());
            let a0 = h[d].clone();
            if a.is_zero() {
                return;
            }
            let mut pos = false;
            let mut neg = false;
            let mut active = VertexSet::EMPTY;
            for (i, v) in pts.iter().enumerate() {
                let val = a.dot(v) - &a0;
                if val.is_zero() {
                    active.insert(i);
                } else if val.is_positive() {
                    pos = true;
                } else {
                    neg = true;
                }
            }
            if pos && neg {
                return;
            }
            found.insert(active);
        });
        let mut out: Vec<VertexSet> = found.into_iter().collect();
        out.sort();
        out
    }

    fn subsets(n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let start = cur.last().map_or(0, |&x| x + 1);
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            subsets(n, k, cur, f);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{crosspolytope, cube};
    use crate::exact::rat_int;

    #[test]
    fn cube3_facets() {
        let c = cube(3).unwrap();
        let inc = c.facet_enumeration().unwrap();
        assert_eq!(inc.facets.len(), 6);
        for f in &inc.facets {
            assert_eq!(f.len(), 4);
        }
        // Supporting hyperplanes are valid and tight exactly on the facet.
        for (f, (a, a0)) in inc.facets.iter().zip(inc.facet_normals.iter()) {
            for (i, v) in c.vertices().iter().enumerate() {
                let val = a.dot(v);
                assert!(val <= *a0);
                assert_eq!(val == *a0, f.contains(i));
            }
        }
    }

    #[test]
    fn facets_match_brute_force_oracle() {
        for p in [cube(3).unwrap(), crosspolytope(3).unwrap(), cube(4).unwrap()] {
            let inc = p.facet_enumeration().unwrap();
            let dd: Vec<VertexSet> = inc.facets.clone();
            let brute = test_oracles::brute_force_facets(&p);
            assert_eq!(dd, brute);
        }
    }

    #[test]
    fn cube3_face_lattice() {
        let c = cube(3).unwrap();
        let lat = c.face_lattice().unwrap();
        assert_eq!(lat.f_vector(), vec![8, 12, 6]);
        assert_eq!(lat.n_faces(), 28);
        assert!(lat.euler_ok());
        assert!(lat.diamond_ok());
    }

    #[test]
    fn lattice_atoms_and_coatoms() {
        let p = crosspolytope(3).unwrap();
        let inc = p.facet_enumeration().unwrap();
        let lat = face_lattice(&p, &inc).unwrap();
        let atoms = lat.layer(0);
        assert_eq!(atoms.len(), p.n_vertices());
        assert!(atoms.iter().all(|f| f.vertices.len() == 1));
        let coatoms: Vec<VertexSet> = lat.layer(2).iter().map(|f| f.vertices).collect();
        assert_eq!(coatoms, inc.facets);
    }

    #[test]
    fn dual_reverses_f_vector() {
        let c = cube(4).unwrap();
        let lat = c.face_lattice().unwrap();
        let dual = combinatorial_dual(&lat);
        assert_eq!(dual.f_vector(), vec![8, 24, 32, 16]);
        let bidual = combinatorial_dual(&dual);
        assert!(lattice_isomorphic(&lat, &bidual, DEFAULT_ISO_NODE_BUDGET).unwrap());
        // bip C3 dualizes to the f-vector of prism C3^dual.
        let bip_c3 = crate::constructors::direct_sum(
            &cube(3).unwrap(),
            &crate::constructors::interval(),
        )
        .unwrap();
        let dual = combinatorial_dual(&bip_c3.face_lattice().unwrap());
        assert_eq!(dual.f_vector(), vec![12, 30, 28, 10]);
        assert!(dual.euler_ok() && dual.diamond_ok());
    }

    #[test]
    fn cs_detection() {
        let c = cube(4).unwrap();
        let cert = is_centrally_symmetric(&c).unwrap();
        assert_eq!(cert.pairing.len(), 16);
        for (i, &j) in cert.pairing.iter().enumerate() {
            assert_ne!(i, j);
            assert_eq!(cert.pairing[j], i);
            assert_eq!(c.vertices()[j], c.vertices()[i].neg());
        }
        // A simplex is not centrally symmetric.
        let simplex = VPolytope::from_points(vec![
            RatVector::from_ints(&[0, 0, 0]),
            RatVector::from_ints(&[1, 0, 0]),
            RatVector::from_ints(&[0, 1, 0]),
            RatVector::from_ints(&[0, 0, 1]),
        ])
        .unwrap();
        assert!(is_centrally_symmetric(&simplex).is_none());
    }

    #[test]
    fn antipodal_map_permutes_faces() {
        let c = crosspolytope(4).unwrap();
        let cert = is_centrally_symmetric(&c).unwrap();
        let lat = c.face_lattice().unwrap();
        let sets: HashSet<VertexSet> = lat.faces().iter().map(|f| f.vertices).collect();
        for f in lat.faces() {
            let image: VertexSet = f.vertices.iter().map(|v| cert.pairing[v]).collect();
            assert!(sets.contains(&image));
        }
    }

    #[test]
    fn cube_and_crosspolytope_not_isomorphic() {
        let a = cube(3).unwrap().face_lattice().unwrap();
        let b = crosspolytope(3).unwrap().face_lattice().unwrap();
        assert!(!lattice_isomorphic(&a, &b, DEFAULT_ISO_NODE_BUDGET).unwrap());
    }

    #[test]
    fn isomorphism_finds_relabelings() {
        // The cube is isomorphic to itself under a nontrivial vertex order.
        let a = cube(3).unwrap().face_lattice().unwrap();
        let rotated = VPolytope::from_points(
            cube(3)
                .unwrap()
                .vertices()
                .iter()
                .map(|v| {
                    RatVector::new(vec![v[1].clone(), v[2].clone(), v[0].clone() * rat_int(-1)])
                })
                .collect(),
        )
        .unwrap();
        let b = rotated.face_lattice().unwrap();
        assert!(lattice_isomorphic(&a, &b, DEFAULT_ISO_NODE_BUDGET).unwrap());
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let a = cube(4).unwrap().face_lattice().unwrap();
        let b = cube(4).unwrap().face_lattice().unwrap();
        match lattice_isomorphic(&a, &b, 2) {
            Err(Error::IsoInconclusive(2)) => {}
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn from_points_filters_non_vertices() {
        // Square plus its center and an edge midpoint.
        let p = VPolytope::from_points(vec![
            RatVector::from_ints(&[1, 1]),
            RatVector::from_ints(&[1, -1]),
            RatVector::from_ints(&[-1, 1]),
            RatVector::from_ints(&[-1, -1]),
            RatVector::from_ints(&[0, 0]),
            RatVector::from_ints(&[1, 0]),
        ])
        .unwrap();
        assert_eq!(p.n_vertices(), 4);
        assert_eq!(p.intrinsic_dim(), 2);
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let p = VPolytope::from_points(vec![RatVector::from_ints(&[2, 2])]).unwrap();
        assert_eq!(p.intrinsic_dim(), 0);
        assert!(p.facet_enumeration().is_err());
    }
}
