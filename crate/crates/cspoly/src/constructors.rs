//! Constructions for every polytope family used by the verification
//! harness: cubes, crosspolytopes, products, direct sums, (bi)pyramids,
//! prisms, twisted prisms, slab truncations, hypersimplices, and Hansen
//! polytopes built from the independence complex of a graph.
//!
//! Every constructor funnels its point list through
//! [`VPolytope::from_points`], which re-verifies vertex minimality, so the
//! output invariants hold by construction.

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::exact::{RatVector, Rational};
use crate::polytope::{face_lattice, VPolytope};
use crate::{Error, Result};

/// The segment `[-1, 1]`, i.e. `cube(1)`.
pub fn interval() -> VPolytope {
    cube(1).expect("cube(1) is valid")
}

/// The `d`-cube `[-1, 1]^d` with all `±1` vectors as vertices.
pub fn cube(d: usize) -> Result<VPolytope> {
    if d == 0 {
        return Err(Error::InvalidParameter("cube requires d >= 1".into()));
    }
    if d > 7 {
        return Err(Error::InvalidParameter(
            "cube(d) with d > 7 exceeds the 128-vertex guard".into(),
        ));
    }
    let mut pts = Vec::with_capacity(1 << d);
    for mask in 0u32..(1 << d) {
        let coords: Vec<i64> = (0..d).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
        pts.push(RatVector::from_ints(&coords));
    }
    VPolytope::from_points(pts)
}

/// The `d`-crosspolytope `conv{±e_1, ..., ±e_d}`.
pub fn crosspolytope(d: usize) -> Result<VPolytope> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "crosspolytope requires d >= 1".into(),
        ));
    }
    let mut pts = Vec::with_capacity(2 * d);
    for i in 0..d {
        for s in [1i64, -1] {
            let mut coords = vec![0i64; d];
            coords[i] = s;
            pts.push(RatVector::from_ints(&coords));
        }
    }
    VPolytope::from_points(pts)
}

fn require_full_dim(p: &VPolytope, what: &str) -> Result<()> {
    if p.intrinsic_dim() != p.ambient_dim() {
        return Err(Error::Degenerate(format!(
            "{what} requires a full-dimensional polytope (intrinsic {} < ambient {})",
            p.intrinsic_dim(),
            p.ambient_dim()
        )));
    }
    Ok(())
}

/// Direct product: vertex set is exactly the coordinate concatenation of
/// the vertex pairs. Both factors must be full-dimensional.
pub fn product(p: &VPolytope, q: &VPolytope) -> Result<VPolytope> {
    require_full_dim(p, "product")?;
    require_full_dim(q, "product")?;
    let mut pts = Vec::with_capacity(p.n_vertices() * q.n_vertices());
    for a in p.vertices() {
        for b in q.vertices() {
            pts.push(a.concat(b));
        }
    }
    VPolytope::from_points(pts)
}

/// Exact test that the origin is an interior point, via the facet
/// inequalities: `0` is interior iff every offset `a0` is strictly positive.
pub fn origin_interior(p: &VPolytope) -> Result<bool> {
    if p.intrinsic_dim() != p.ambient_dim() {
        return Ok(false);
    }
    let inc = p.facet_enumeration()?;
    Ok(inc.facet_normals.iter().all(|(_, a0)| a0.is_positive()))
}

/// Direct sum `conv(P x {0} ∪ {0} x Q)`, realized by embedding both factors
/// and re-verifying vertex minimality. Requires the origin in the interior
/// of both factors.
pub fn direct_sum(p: &VPolytope, q: &VPolytope) -> Result<VPolytope> {
    require_full_dim(p, "direct_sum")?;
    require_full_dim(q, "direct_sum")?;
    if !origin_interior(p)? || !origin_interior(q)? {
        return Err(Error::InvalidParameter(
            "direct_sum requires the origin in the interior of both factors".into(),
        ));
    }
    let dp = p.ambient_dim();
    let dq = q.ambient_dim();
    let mut pts = Vec::with_capacity(p.n_vertices() + q.n_vertices());
    for a in p.vertices() {
        pts.push(a.concat(&RatVector::zeros(dq)));
    }
    for b in q.vertices() {
        pts.push(RatVector::zeros(dp).concat(b));
    }
    VPolytope::from_points(pts)
}

/// Pyramid with apex at `e_{d+1}` over `p` embedded at height 0.
pub fn pyramid(p: &VPolytope) -> Result<VPolytope> {
    require_full_dim(p, "pyramid")?;
    let d = p.ambient_dim();
    let zero = RatVector::zeros(1);
    let mut pts: Vec<RatVector> = p.vertices().iter().map(|v| v.concat(&zero)).collect();
    let mut apex = vec![0i64; d + 1];
    apex[d] = 1;
    pts.push(RatVector::from_ints(&apex));
    VPolytope::from_points(pts)
}

/// Bipyramid with apexes at `±e_{d+1}`; this is the direct sum with a
/// segment, so the origin-interior requirement applies to `p`.
pub fn bipyramid(p: &VPolytope) -> Result<VPolytope> {
    direct_sum(p, &interval())
}

/// Prism `I x P`.
pub fn prism(p: &VPolytope) -> Result<VPolytope> {
    product(&interval(), p)
}

/// Twisted prism `conv(Q x {1} ∪ -Q x {-1})`; always centrally symmetric.
pub fn twisted_prism(q: &VPolytope) -> Result<VPolytope> {
    require_full_dim(q, "twisted_prism")?;
    let one = RatVector::from_ints(&[1]);
    let neg_one = RatVector::from_ints(&[-1]);
    let mut pts = Vec::with_capacity(2 * q.n_vertices());
    for v in q.vertices() {
        pts.push(v.concat(&one));
        pts.push(v.neg().concat(&neg_one));
    }
    VPolytope::from_points(pts)
}

/// The hypersimplex `Δ(k, d)`: all 0/1 vectors with exactly `k` ones.
/// Lives in the hyperplane `sum x_i = k`, so its intrinsic dimension is
/// `d - 1`.
pub fn hypersimplex(k: usize, d: usize) -> Result<VPolytope> {
    if k == 0 || k >= d {
        return Err(Error::InvalidParameter(format!(
            "hypersimplex requires 0 < k < d, got k={k}, d={d}"
        )));
    }
    if d > 20 {
        return Err(Error::InvalidParameter(
            "hypersimplex dimension beyond desk scale".into(),
        ));
    }
    let mut pts = Vec::new();
    for mask in 0u32..(1 << d) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let coords: Vec<i64> = (0..d).map(|i| (mask >> i & 1) as i64).collect();
        pts.push(RatVector::from_ints(&coords));
    }
    if pts.len() > 128 {
        return Err(Error::TooManyVertices(pts.len()));
    }
    VPolytope::from_points(pts)
}

/// The central hypersimplex `HS_k = Δ(k, 2k)` in its full-dimensional,
/// centrally symmetric `±1` realization: all `±1` vectors of length
/// `2k - 1` whose coordinate sum is `+1` or `-1`.
pub fn central_hypersimplex(k: usize) -> Result<VPolytope> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "central_hypersimplex requires k >= 1".into(),
        ));
    }
    let d = 2 * k - 1;
    if d > 7 {
        return Err(Error::InvalidParameter(
            "central hypersimplex beyond the 128-vertex guard".into(),
        ));
    }
    let mut pts = Vec::new();
    for mask in 0u32..(1 << d) {
        let ones = mask.count_ones() as i64;
        let sum = 2 * ones - d as i64;
        if sum == 1 || sum == -1 {
            let coords: Vec<i64> = (0..d).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
            pts.push(RatVector::from_ints(&coords));
        }
    }
    VPolytope::from_points(pts)
}

/// Result of a slab truncation.
#[derive(Clone, Debug)]
pub struct SlabResult {
    pub polytope: VPolytope,
    /// Set when the slab contained all of `p`, so nothing was cut.
    pub unchanged: bool,
}

/// Intersect `p` with the slab `{x : lo <= <a, x> <= hi}`, exactly. New
/// vertices are the intersection points of edges of `p` with the two
/// bounding hyperplanes; vertex minimality is re-verified afterwards.
pub fn slab(p: &VPolytope, a: &RatVector, lo: &Rational, hi: &Rational) -> Result<SlabResult> {
    require_full_dim(p, "slab")?;
    if a.len() != p.ambient_dim() {
        return Err(Error::DimensionMismatch(
            "slab normal has wrong length".into(),
        ));
    }
    if lo >= hi {
        return Err(Error::InvalidParameter("slab requires lo < hi".into()));
    }
    let values: Vec<Rational> = p.vertices().iter().map(|v| a.dot(v)).collect();
    if values.iter().all(|v| lo <= v && v <= hi) {
        return Ok(SlabResult {
            polytope: p.clone(),
            unchanged: true,
        });
    }
    let lat = face_lattice(p, &p.facet_enumeration()?)?;
    let mut candidates: BTreeSet<RatVector> = BTreeSet::new();
    for (i, v) in p.vertices().iter().enumerate() {
        if *lo <= values[i] && values[i] <= *hi {
            candidates.insert(v.clone());
        }
    }
    for edge in lat.layer(1) {
        let idx = edge.vertices.to_indices();
        debug_assert_eq!(idx.len(), 2);
        let (u, w) = (idx[0], idx[1]);
        for bound in [lo, hi] {
            let (vu, vw) = (&values[u], &values[w]);
            if (vu < bound && bound < vw) || (vw < bound && bound < vu) {
                let t = (bound - vu) / (vw - vu);
                let pu = &p.vertices()[u];
                let pw = &p.vertices()[w];
                candidates.insert(pu.add(&pw.sub(pu).scale(&t)));
            }
        }
    }
    if candidates.is_empty() {
        return Err(Error::Degenerate("slab does not meet the polytope".into()));
    }
    let polytope = VPolytope::from_points(candidates.into_iter().collect())?;
    Ok(SlabResult {
        polytope,
        unchanged: false,
    })
}

/// A simple undirected graph on `{0, ..., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for n={n}"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn complement(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.insert((u, v));
                }
            }
        }
        Graph {
            n: self.n,
            edges,
        }
    }

    /// The path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("path is simple")
    }

    /// The path on five vertices with the extra chord `{1, 3}` (the second
    /// self-complementary perfect graph used for the dimension-6 example).
    pub fn g5() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).expect("g5 is simple")
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| u != v && self.has_edge(u, v)).count()
    }
}

/// The independence complex of a graph: all vertex subsets inducing no
/// edge, as sorted bitmasks. Downward closed and containing the empty set.
#[derive(Clone, Debug)]
pub struct IndependenceComplex {
    pub n: usize,
    pub sets: Vec<u32>,
}

pub fn independence_complex(g: &Graph) -> Result<IndependenceComplex> {
    if g.n() > 16 {
        return Err(Error::InvalidParameter(
            "independence complex beyond desk scale (n > 16)".into(),
        ));
    }
    let edge_masks: Vec<u32> = g
        .edges()
        .map(|(u, v)| (1 << u) | (1 << v))
        .collect();
    let mut sets = Vec::new();
    for mask in 0u32..(1 << g.n()) {
        if edge_masks.iter().all(|&e| (mask & e) != e) {
            sets.push(mask);
        }
    }
    Ok(IndependenceComplex { n: g.n(), sets })
}

/// Berge check: searches for an induced odd cycle of length >= 5 in the
/// graph and in its complement. The graph is perfect iff neither exists.
#[derive(Clone, Debug)]
pub struct BergeReport {
    pub odd_hole: Option<Vec<usize>>,
    pub complement_odd_hole: Option<Vec<usize>>,
}

impl BergeReport {
    pub fn is_berge(&self) -> bool {
        self.odd_hole.is_none() && self.complement_odd_hole.is_none()
    }
}

pub fn berge_check(g: &Graph) -> Result<BergeReport> {
    if g.n() > 12 {
        return Err(Error::InvalidParameter(
            "Berge check beyond desk scale (n > 12)".into(),
        ));
    }
    Ok(BergeReport {
        odd_hole: find_odd_hole(g),
        complement_odd_hole: find_odd_hole(&g.complement()),
    })
}

/// Exhaustive induced-cycle search: a subset is an induced cycle iff every
/// member has exactly two neighbors inside and the induced subgraph is
/// connected.
fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size < 5 || size % 2 == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let degrees_ok = members.iter().all(|&v| {
            members.iter().filter(|&&u| u != v && g.has_edge(u, v)).count() == 2
        });
        if !degrees_ok {
            continue;
        }
        // Connectivity of the induced 2-regular subgraph means it is one cycle.
        let mut seen = vec![false; n];
        let mut stack = vec![members[0]];
        seen[members[0]] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &u in &members {
                if !seen[u] && g.has_edge(u, v) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if count == size {
            return Some(members);
        }
    }
    None
}

/// Result of the Hansen construction.
#[derive(Clone, Debug)]
pub struct HansenResult {
    pub polytope: VPolytope,
    pub berge: BergeReport,
    pub independent_set_count: usize,
}

/// The Hansen polytope `H(G)`: the twisted prism over the convex hull of
/// the `±1` characteristic vectors of the independent sets of `G`. A
/// non-Berge input is reported (Hansen's duality theorem needs a perfect
/// graph) but the construction still proceeds.
pub fn hansen(g: &Graph) -> Result<HansenResult> {
    let berge = berge_check(g)?;
    let ic = independence_complex(g)?;
    let base_dim = g.n();
    let pts: Vec<RatVector> = ic
        .sets
        .iter()
        .map(|&mask| {
            let coords: Vec<i64> = (0..base_dim)
                .map(|i| if mask >> i & 1 == 1 { 1 } else { -1 })
                .collect();
            RatVector::from_ints(&coords)
        })
        .collect();
    let base = VPolytope::from_points(pts)?;
    let polytope = twisted_prism(&base)?;
    Ok(HansenResult {
        polytope,
        berge,
        independent_set_count: ic.sets.len(),
    })
}

/// Brute-force test whether `g` is isomorphic to its complement, by
/// backtracking over adjacency-preserving vertex maps.
pub fn is_self_complementary(g: &Graph) -> bool {
    let h = g.complement();
    if g.n_edges() != h.n_edges() {
        return false;
    }
    let mut deg_g: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut deg_h: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    deg_g.sort_unstable();
    deg_h.sort_unstable();
    if deg_g != deg_h {
        return false;
    }
    let mut image = vec![usize::MAX; g.n()];
    let mut used = vec![false; g.n()];
    extend_iso(g, &h, 0, &mut image, &mut used)
}

fn extend_iso(g: &Graph, h: &Graph, v: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..g.n() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        let ok = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if ok {
            image[v] = w;
            used[w] = true;
            if extend_iso(g, h, v + 1, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[w] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, Rational};
    use crate::polytope::{is_centrally_symmetric, lattice_isomorphic, DEFAULT_ISO_NODE_BUDGET};

    fn f_vector(p: &VPolytope) -> Vec<u64> {
        p.face_lattice().unwrap().f_vector()
    }

    #[test]
    fn cube_and_cross_f_vectors() {
        assert_eq!(f_vector(&cube(4).unwrap()), vec![16, 32, 24, 8]);
        assert_eq!(f_vector(&crosspolytope(4).unwrap()), vec![8, 24, 32, 16]);
        assert_eq!(cube(1).unwrap().n_vertices(), 2);
        assert!(cube(0).is_err());
    }

    #[test]
    fn products_and_sums() {
        let c3 = product(&interval(), &product(&interval(), &interval()).unwrap()).unwrap();
        assert_eq!(f_vector(&c3), vec![8, 12, 6]);
        let bip_c3 = direct_sum(&cube(3).unwrap(), &interval()).unwrap();
        assert_eq!(f_vector(&bip_c3), vec![10, 28, 30, 12]);
        let prism_c3d = product(&interval(), &crosspolytope(3).unwrap()).unwrap();
        assert_eq!(f_vector(&prism_c3d), vec![12, 30, 28, 10]);
    }

    #[test]
    fn direct_sum_requires_interior_origin() {
        // A triangle with the origin on its boundary.
        let t = VPolytope::from_points(vec![
            RatVector::from_ints(&[0, 0]),
            RatVector::from_ints(&[1, 0]),
            RatVector::from_ints(&[0, 1]),
        ])
        .unwrap();
        assert!(direct_sum(&t, &interval()).is_err());
    }

    #[test]
    fn bipyramid_over_square_is_octahedron() {
        let square = cube(2).unwrap();
        let oct = bipyramid(&square).unwrap();
        assert_eq!(f_vector(&oct), vec![6, 12, 8]);
        let iso = lattice_isomorphic(
            &oct.face_lattice().unwrap(),
            &crosspolytope(3).unwrap().face_lattice().unwrap(),
            DEFAULT_ISO_NODE_BUDGET,
        )
        .unwrap();
        assert!(iso);
    }

    #[test]
    fn prism_of_cross4() {
        let p = prism(&crosspolytope(4).unwrap()).unwrap();
        assert_eq!(f_vector(&p), vec![16, 56, 88, 64, 18]);
    }

    #[test]
    fn twisted_prism_of_centered_square_is_cube() {
        // -Q = Q for the ±1 square, so the twisted prism is the ordinary
        // prism, i.e. the 3-cube.
        let tp = twisted_prism(&cube(2).unwrap()).unwrap();
        assert_eq!(f_vector(&tp), vec![8, 12, 6]);
        assert!(is_centrally_symmetric(&tp).is_some());
    }

    #[test]
    fn twisted_prism_always_cs() {
        // An uncentered triangle still gives a centrally symmetric prism.
        let t = VPolytope::from_points(vec![
            RatVector::from_ints(&[0, 0]),
            RatVector::from_ints(&[3, 0]),
            RatVector::from_ints(&[0, 2]),
        ])
        .unwrap();
        let tp = twisted_prism(&t).unwrap();
        assert_eq!(tp.n_vertices(), 6);
        assert!(is_centrally_symmetric(&tp).is_some());
    }

    #[test]
    fn hypersimplex_examples() {
        let h = hypersimplex(2, 4).unwrap();
        assert_eq!(h.n_vertices(), 6);
        assert_eq!(h.intrinsic_dim(), 3);
        let iso = lattice_isomorphic(
            &h.face_lattice().unwrap(),
            &crosspolytope(3).unwrap().face_lattice().unwrap(),
            DEFAULT_ISO_NODE_BUDGET,
        )
        .unwrap();
        assert!(iso);

        let simplex = hypersimplex(1, 4).unwrap();
        assert_eq!(simplex.n_vertices(), 4);
        assert_eq!(simplex.intrinsic_dim(), 3);

        assert!(hypersimplex(0, 4).is_err());
        assert!(hypersimplex(4, 4).is_err());
    }

    #[test]
    fn central_hypersimplex_is_cs_and_matches_embedding() {
        let hs2 = central_hypersimplex(2).unwrap();
        assert_eq!(hs2.n_vertices(), 6);
        assert!(is_centrally_symmetric(&hs2).is_some());
        let emb = hypersimplex(2, 4).unwrap();
        let iso = lattice_isomorphic(
            &hs2.face_lattice().unwrap(),
            &emb.face_lattice().unwrap(),
            DEFAULT_ISO_NODE_BUDGET,
        )
        .unwrap();
        assert!(iso);
    }

    #[test]
    fn slab_keeping_everything_is_flagged() {
        let c = cube(3).unwrap();
        let r = slab(
            &c,
            &RatVector::from_ints(&[0, 0, 1]),
            &rat_int(-1),
            &rat_int(1),
        )
        .unwrap();
        assert!(r.unchanged);
        assert_eq!(r.polytope, c);
    }

    #[test]
    fn slab_empty_intersection_rejected() {
        let c = cube(3).unwrap();
        let r = slab(
            &c,
            &RatVector::from_ints(&[0, 0, 1]),
            &rat_int(5),
            &rat_int(7),
        );
        assert!(r.is_err());
    }

    #[test]
    fn hansen_path4() {
        let r = hansen(&Graph::path(4)).unwrap();
        assert!(r.berge.is_berge());
        assert_eq!(r.independent_set_count, 8);
        assert_eq!(r.polytope.n_vertices(), 16);
        assert_eq!(f_vector(&r.polytope), vec![16, 64, 98, 64, 16]);
    }

    #[test]
    fn hansen_of_empty_graph_is_a_cube() {
        let empty = Graph::new(3, &[]).unwrap();
        let r = hansen(&empty).unwrap();
        assert_eq!(r.independent_set_count, 8);
        let iso = lattice_isomorphic(
            &r.polytope.face_lattice().unwrap(),
            &cube(4).unwrap().face_lattice().unwrap(),
            DEFAULT_ISO_NODE_BUDGET,
        )
        .unwrap();
        assert!(iso);
    }

    #[test]
    fn self_complementary_graphs() {
        assert!(is_self_complementary(&Graph::path(4)));
        assert!(is_self_complementary(&Graph::g5()));
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!is_self_complementary(&k3));
    }

    #[test]
    fn berge_detects_odd_holes() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let report = berge_check(&c5).unwrap();
        assert!(!report.is_berge());
        assert!(report.odd_hole.is_some());
        assert!(berge_check(&Graph::path(5)).unwrap().is_berge());
        assert!(berge_check(&Graph::g5()).unwrap().is_berge());
    }

    #[test]
    fn hansen_proceeds_on_non_berge_graphs() {
        // The duality theorem needs a perfect graph, but the construction
        // itself is still defined; the report carries the odd hole.
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let r = hansen(&c5).unwrap();
        assert!(!r.berge.is_berge());
        assert_eq!(r.independent_set_count, 11);
        assert_eq!(r.polytope.n_vertices(), 22);
        assert!(is_centrally_symmetric(&r.polytope).is_some());
    }

    #[test]
    fn independence_complex_is_downward_closed() {
        let ic = independence_complex(&Graph::g5()).unwrap();
        assert_eq!(ic.sets.len(), 12);
        let in_ic: std::collections::HashSet<u32> = ic.sets.iter().copied().collect();
        for &s in &ic.sets {
            for i in 0..ic.n {
                if s >> i & 1 == 1 {
                    assert!(in_ic.contains(&(s & !(1 << i))));
                }
            }
        }
    }

    #[test]
    fn vertex_minimality_of_constructors() {
        // Re-running from_points on the vertex list must not drop anything.
        for p in [
            cube(3).unwrap(),
            crosspolytope(4).unwrap(),
            bipyramid(&cube(3).unwrap()).unwrap(),
            hypersimplex(2, 4).unwrap(),
        ] {
            let again = VPolytope::from_points(p.vertices().to_vec()).unwrap();
            assert_eq!(again, p);
        }
    }

    #[test]
    fn embedded_hypersimplex_facets_and_dims() {
        // Delta(3,6) sits in a hyperplane of R^6; facet enumeration must
        // project, and the counts match the central realization.
        let h = hypersimplex(3, 6).unwrap();
        assert_eq!(h.n_vertices(), 20);
        assert_eq!(crate::exact::affine_dim(h.vertices()).unwrap(), 5);
        let inc = h.facet_enumeration().unwrap();
        assert_eq!(inc.facets.len(), 12);
        assert_eq!(h.face_lattice().unwrap().f_vector(), vec![20, 90, 120, 60, 12]);
    }

    #[test]
    fn slab_cut_vertices_match_brute_force_oracle() {
        // Chopping the two corners of the 3-cube strictly between the
        // corner and its neighbors: 6 surviving vertices plus one cut
        // point per cut edge.
        let c = cube(3).unwrap();
        let a = RatVector::from_ints(&[1, 1, 1]);
        let r = slab(&c, &a, &rat_int(-2), &rat_int(2)).unwrap();
        assert!(!r.unchanged);
        assert_eq!(r.polytope.n_vertices(), 12);
        let dd: Vec<_> = r.polytope.facet_enumeration().unwrap().facets;
        let brute = crate::polytope::test_oracles::brute_force_facets(&r.polytope);
        assert_eq!(dd, brute);

        // Cutting exactly through the neighbors leaves only the six
        // middle-layer vertices: the octahedron.
        let r = slab(&c, &a, &rat_int(-1), &rat_int(1)).unwrap();
        assert_eq!(r.polytope.n_vertices(), 6);
        let iso = lattice_isomorphic(
            &r.polytope.face_lattice().unwrap(),
            &crosspolytope(3).unwrap().face_lattice().unwrap(),
            DEFAULT_ISO_NODE_BUDGET,
        )
        .unwrap();
        assert!(iso);
        let brute = crate::polytope::test_oracles::brute_force_facets(&r.polytope);
        assert_eq!(r.polytope.facet_enumeration().unwrap().facets, brute);
    }

    #[test]
    fn slab_normal_scaling_does_not_matter() {
        let c = cube(4).unwrap();
        let a = RatVector::from_ints(&[1, 1, 1, 1]);
        let b = a.scale(&Rational::new(2.into(), 3.into()));
        let r1 = slab(&c, &a, &rat_int(-2), &rat_int(2)).unwrap();
        let lo = Rational::new((-4).into(), 3.into());
        let hi = Rational::new(4.into(), 3.into());
        let r2 = slab(&c, &b, &lo, &hi).unwrap();
        assert_eq!(r1.polytope, r2.polytope);
    }
}
