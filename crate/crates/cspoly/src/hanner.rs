//! Hanner polytopes as canonical expression trees over one-dimensional
//! leaves, with f-vectors computed purely by polynomial algebra, the
//! per-dimension catalog, and the domination queries behind conjectures
//! B and C.
//!
//! Canonical form: products never contain products, sums never contain
//! sums, children are sorted by the derived total order (leaf < product
//! < sum, then lexicographically by child lists), and the square is the
//! unique cross-operator coincidence — a sum of exactly two leaves is the
//! product of two leaves, and a square child of a sum splits into two
//! leaves of that sum. Matching Moon's catalog counts for d <= 8 validates
//! that this is the only identification needed.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::constructors::{direct_sum, interval, product};
use crate::exact::Rational;
use crate::flags::{evaluate_functional, flag_vector, s_value, FlagVector, Functional};
use crate::polytope::{is_centrally_symmetric, VPolytope};
use crate::{Error, Result};

/// Catalog counts of Hanner polytopes per dimension (two-terminal network
/// counts), used as a tripwire for the enumerator.
pub const MOON_COUNTS: [u64; 11] = [1, 1, 2, 4, 8, 18, 40, 94, 224, 548, 1356];

/// Guard for the enumerator.
pub const MAX_CATALOG_DIM: usize = 11;

/// An expression tree over segments: `I`, products `P(...)` and sums
/// `S(...)`. The derived `Ord` is the canonical total order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum HannerExpr {
    Leaf,
    Product(Vec<HannerExpr>),
    Sum(Vec<HannerExpr>),
}

impl HannerExpr {
    pub fn dim(&self) -> usize {
        match self {
            HannerExpr::Leaf => 1,
            HannerExpr::Product(cs) | HannerExpr::Sum(cs) => cs.iter().map(|c| c.dim()).sum(),
        }
    }

    /// Swap products and sums throughout; the result is the canonical form
    /// of the dual polytope.
    pub fn dual(&self) -> HannerExpr {
        fn swap(e: &HannerExpr) -> HannerExpr {
            match e {
                HannerExpr::Leaf => HannerExpr::Leaf,
                HannerExpr::Product(cs) => HannerExpr::Sum(cs.iter().map(swap).collect()),
                HannerExpr::Sum(cs) => HannerExpr::Product(cs.iter().map(swap).collect()),
            }
        }
        canonicalize(&swap(self))
    }

    /// Expression string in the `I` / `P(...)` / `S(...)` grammar.
    pub fn to_expr_string(&self) -> String {
        match self {
            HannerExpr::Leaf => "I".to_string(),
            HannerExpr::Product(cs) => format!(
                "P({})",
                cs.iter().map(|c| c.to_expr_string()).collect::<Vec<_>>().join(",")
            ),
            HannerExpr::Sum(cs) => format!(
                "S({})",
                cs.iter().map(|c| c.to_expr_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }

    /// Parse the `I` / `P(...)` / `S(...)` grammar.
    pub fn parse(s: &str) -> Result<HannerExpr> {
        let bytes = s.trim().as_bytes();
        let (expr, used) = parse_expr(bytes, 0)?;
        if used != bytes.len() {
            return Err(Error::Parse {
                pos: used,
                msg: "trailing input after expression".into(),
            });
        }
        Ok(expr)
    }
}

fn parse_expr(s: &[u8], pos: usize) -> Result<(HannerExpr, usize)> {
    match s.get(pos) {
        Some(b'I') => Ok((HannerExpr::Leaf, pos + 1)),
        Some(c @ (b'P' | b'S')) => {
            let mut at = pos + 1;
            if s.get(at) != Some(&b'(') {
                return Err(Error::Parse {
                    pos: at,
                    msg: "expected '('".into(),
                });
            }
            at += 1;
            let mut children = Vec::new();
            loop {
                let (child, next) = parse_expr(s, at)?;
                children.push(child);
                at = next;
                match s.get(at) {
                    Some(b',') => at += 1,
                    Some(b')') => {
                        at += 1;
                        break;
                    }
                    _ => {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "expected ',' or ')'".into(),
                        })
                    }
                }
            }
            if children.len() < 2 {
                return Err(Error::Parse {
                    pos,
                    msg: "product/sum needs at least two children".into(),
                });
            }
            let node = if *c == b'P' {
                HannerExpr::Product(children)
            } else {
                HannerExpr::Sum(children)
            };
            Ok((node, at))
        }
        _ => Err(Error::Parse {
            pos,
            msg: "expected 'I', 'P' or 'S'".into(),
        }),
    }
}

fn is_square(e: &HannerExpr) -> bool {
    matches!(e, HannerExpr::Product(cs) if cs.len() == 2 && cs.iter().all(|c| *c == HannerExpr::Leaf))
}

/// Canonicalize bottom-up: flatten same-operator children, absorb squares
/// into parent sums as two leaves, rewrite a bare two-leaf sum as the
/// square, and sort children. Idempotent; equal canonical forms characterize
/// combinatorially equivalent Hanner polytopes.
pub fn canonicalize(e: &HannerExpr) -> HannerExpr {
    match e {
        HannerExpr::Leaf => HannerExpr::Leaf,
        HannerExpr::Product(children) => {
            let mut flat = Vec::new();
            for c in children {
                match canonicalize(c) {
                    HannerExpr::Product(gs) => flat.extend(gs),
                    other => flat.push(other),
                }
            }
            flat.sort();
            HannerExpr::Product(flat)
        }
        HannerExpr::Sum(children) => {
            let mut flat = Vec::new();
            for c in children {
                match canonicalize(c) {
                    HannerExpr::Sum(gs) => flat.extend(gs),
                    sq if is_square(&sq) => {
                        flat.push(HannerExpr::Leaf);
                        flat.push(HannerExpr::Leaf);
                    }
                    other => flat.push(other),
                }
            }
            if flat.len() == 2 && flat.iter().all(|c| *c == HannerExpr::Leaf) {
                return HannerExpr::Product(flat);
            }
            flat.sort();
            HannerExpr::Sum(flat)
        }
    }
}

/// The face-count list `g = (f_0, ..., f_{d-1}, 1)` of a tree, computed
/// without geometry: products convolve the nonempty-face generating
/// polynomials, sums convolve the proper-face polynomials.
fn g_list(e: &HannerExpr) -> Vec<u64> {
    match e {
        HannerExpr::Leaf => vec![2, 1],
        HannerExpr::Product(cs) => {
            let mut acc = vec![1u64];
            for c in cs {
                acc = convolve(&acc, &g_list(c));
            }
            acc
        }
        HannerExpr::Sum(cs) => {
            let mut acc = vec![1u64];
            for c in cs {
                let g = g_list(c);
                let d = g.len() - 1;
                // Proper-face polynomial: e_0 = 1 (empty face), e_{i+1} = f_i.
                let mut ev = vec![1u64];
                ev.extend_from_slice(&g[..d]);
                acc = convolve(&acc, &ev);
            }
            let d = acc.len() - 1;
            let mut g = acc[1..=d].to_vec();
            g.push(1);
            g
        }
    }
}

fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// f-vector `(f_0, ..., f_{d-1})` of a tree, by algebra alone.
pub fn hanner_fvector(e: &HannerExpr) -> Vec<u64> {
    let g = g_list(e);
    g[..g.len() - 1].to_vec()
}

/// One catalog row.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    #[serde(serialize_with = "expr_as_string")]
    pub expr: HannerExpr,
    pub f: Vec<u64>,
}

fn expr_as_string<S: serde::Serializer>(
    e: &HannerExpr,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&e.to_expr_string())
}

impl CatalogEntry {
    pub fn s_value(&self) -> u64 {
        self.f.iter().sum::<u64>() + 1
    }
}

/// All Hanner polytopes of one dimension, as canonical trees with their
/// f-vectors, sorted by the canonical order.
#[derive(Clone, Debug)]
pub struct HannerCatalog {
    pub d: usize,
    pub entries: Vec<CatalogEntry>,
}

/// Enumerate all canonical trees of dimension `d`. The count is checked
/// against the published sequence; a mismatch is an internal error. The
/// catalog is memoized per dimension behind a shared read-only table.
pub fn enumerate_hanner(d: usize) -> Result<Arc<HannerCatalog>> {
    if d == 0 || d > MAX_CATALOG_DIM {
        return Err(Error::InvalidParameter(format!(
            "catalog dimension must be in 1..={MAX_CATALOG_DIM}, got {d}"
        )));
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<HannerCatalog>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&d) {
        return Ok(hit.clone());
    }
    let mut exprs = enumerate_canonical(d);
    exprs.sort();
    if exprs.len() as u64 != MOON_COUNTS[d - 1] {
        return Err(Error::IdentityViolation(format!(
            "Hanner enumeration produced {} types in dimension {d}, expected {}",
            exprs.len(),
            MOON_COUNTS[d - 1]
        )));
    }
    let entries = exprs
        .into_iter()
        .map(|expr| {
            let f = hanner_fvector(&expr);
            CatalogEntry { expr, f }
        })
        .collect();
    let catalog = Arc::new(HannerCatalog { d, entries });
    cache.lock().unwrap().insert(d, catalog.clone());
    Ok(catalog)
}

/// All canonical expressions of dimension `d`: the leaf, products whose
/// children are leaves or sums of dimension >= 3, and sums whose children
/// are leaves or products of dimension >= 3 (dimension-2 children cannot
/// occur in canonical form; the square exists only as the root `P(I,I)`).
fn enumerate_canonical(d: usize) -> Vec<HannerExpr> {
    if d == 1 {
        return vec![HannerExpr::Leaf];
    }
    let mut products: Vec<Vec<HannerExpr>> = vec![Vec::new(); d + 1];
    let mut sums: Vec<Vec<HannerExpr>> = vec![Vec::new(); d + 1];
    for k in 2..=d {
        let sum_pool: Vec<HannerExpr> = {
            let mut pool = vec![HannerExpr::Leaf];
            for sub in sums.iter().take(k) {
                pool.extend(sub.iter().cloned());
            }
            pool.sort();
            pool
        };
        for children in multisets_with_dim(&sum_pool, k) {
            products[k].push(HannerExpr::Product(children));
        }
        if k >= 3 {
            let product_pool: Vec<HannerExpr> = {
                let mut pool = vec![HannerExpr::Leaf];
                for (dim, sub) in products.iter().enumerate().take(k) {
                    if dim >= 3 {
                        pool.extend(sub.iter().cloned());
                    }
                }
                pool.sort();
                pool
            };
            for children in multisets_with_dim(&product_pool, k) {
                sums[k].push(HannerExpr::Sum(children));
            }
        }
    }
    let mut out = products[d].clone();
    out.extend(sums[d].iter().cloned());
    out
}

/// All multisets of at least two pool elements with total dimension `d`,
/// emitted as lists sorted consistently with the pool order.
fn multisets_with_dim(pool: &[HannerExpr], d: usize) -> Vec<Vec<HannerExpr>> {
    fn go(
        pool: &[HannerExpr],
        from: usize,
        remaining: usize,
        current: &mut Vec<HannerExpr>,
        out: &mut Vec<Vec<HannerExpr>>,
    ) {
        if remaining == 0 {
            if current.len() >= 2 {
                out.push(current.clone());
            }
            return;
        }
        for i in from..pool.len() {
            let dim = pool[i].dim();
            if dim <= remaining {
                current.push(pool[i].clone());
                go(pool, i, remaining - dim, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    go(pool, 0, d, &mut current, &mut out);
    out
}

/// Geometric realization: leaves become segments, products direct
/// products, sums direct sums.
pub fn realize(e: &HannerExpr) -> Result<VPolytope> {
    match e {
        HannerExpr::Leaf => Ok(interval()),
        HannerExpr::Product(cs) => {
            let mut acc: Option<VPolytope> = None;
            for c in cs {
                let q = realize(c)?;
                acc = Some(match acc {
                    None => q,
                    Some(p) => product(&p, &q)?,
                });
            }
            acc.ok_or_else(|| Error::InvalidParameter("empty product".into()))
        }
        HannerExpr::Sum(cs) => {
            let mut acc: Option<VPolytope> = None;
            for c in cs {
                let q = realize(c)?;
                acc = Some(match acc {
                    None => q,
                    Some(p) => direct_sum(&p, &q)?,
                });
            }
            acc.ok_or_else(|| Error::InvalidParameter("empty sum".into()))
        }
    }
}

/// First catalog entry whose f-vector is componentwise dominated by `fv`,
/// if any (the witness for conjecture B).
pub fn dominates_some_hanner(fv: &[u64], d: usize) -> Result<Option<HannerExpr>> {
    if fv.len() != d {
        return Err(Error::DimensionMismatch(format!(
            "f-vector has {} entries, expected {d}",
            fv.len()
        )));
    }
    let catalog = enumerate_hanner(d)?;
    Ok(catalog
        .entries
        .iter()
        .find(|entry| entry.f.iter().zip(fv.iter()).all(|(h, p)| p >= h))
        .map(|entry| entry.expr.clone()))
}

/// Facet-count classification of a Hanner polytope (the minimum is `2d`,
/// attained only by the cube; `2d + 2` forces `C_{d-3} x C_3^dual`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FacetClass {
    Cube,
    CubeTimesOcta,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetClassification {
    pub facet_count: u64,
    pub class: FacetClass,
}

pub fn hanner_facet_classification(e: &HannerExpr) -> FacetClassification {
    let canon = canonicalize(e);
    let d = canon.dim();
    let f = hanner_fvector(&canon);
    let facet_count = f[d - 1];
    let class = if canon == cube_expr(d) {
        FacetClass::Cube
    } else if d >= 3 && canon == cube_times_octa_expr(d) {
        FacetClass::CubeTimesOcta
    } else {
        FacetClass::Other
    };
    FacetClassification { facet_count, class }
}

/// Canonical tree of the `d`-cube.
pub fn cube_expr(d: usize) -> HannerExpr {
    if d == 1 {
        HannerExpr::Leaf
    } else {
        HannerExpr::Product(vec![HannerExpr::Leaf; d])
    }
}

/// Canonical tree of the `d`-crosspolytope.
pub fn crosspolytope_expr(d: usize) -> HannerExpr {
    cube_expr(d).dual()
}

/// Canonical tree of `C_{d-3} x C_3^dual` (for `d = 3` this is the
/// octahedron itself).
pub fn cube_times_octa_expr(d: usize) -> HannerExpr {
    assert!(d >= 3);
    let octa = HannerExpr::Sum(vec![HannerExpr::Leaf; 3]);
    if d == 3 {
        octa
    } else {
        let mut children = vec![HannerExpr::Leaf; d - 3];
        children.push(octa);
        canonicalize(&HannerExpr::Product(children))
    }
}

fn rational_as_string<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Verdict for conjecture A on one polytope.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureA {
    pub s: u64,
    pub bound: u64,
    pub holds: bool,
}

/// Verdict for conjecture B: either a dominated witness or a refutation,
/// together with the `f_0 + f_{d-1}` statistic used by the refutations.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureB {
    pub witness: Option<String>,
    pub holds: bool,
    pub own_f0_plus_flast: u64,
    pub min_hanner_f0_plus_flast: u64,
}

/// Verdict for one functional of the restricted conjecture C check.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureCItem {
    pub functional: String,
    #[serde(serialize_with = "rational_as_string")]
    pub value: Rational,
    #[serde(serialize_with = "rational_as_string")]
    pub min_hanner_value: Rational,
    pub min_witness: String,
    pub holds: bool,
}

pub const CONJECTURE_C_CAVEAT: &str = "conjecture C is checked only against the supplied \
functionals, not against the full cone of flag-nonnegative functionals";

/// Combined conjecture report for a centrally symmetric polytope.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub d: usize,
    pub f: Vec<u64>,
    pub a: ConjectureA,
    pub b: ConjectureB,
    pub c: Vec<ConjectureCItem>,
    pub c_caveat: &'static str,
}

/// Evaluate conjectures A, B and (restricted) C on a certified centrally
/// symmetric polytope. Functionals are evaluated on geometric realizations
/// of the catalog entries, which caps this path at dimension 6.
pub fn conjecture_report(p: &VPolytope, functionals: &[Functional]) -> Result<ConjectureReport> {
    if is_centrally_symmetric(p).is_none() {
        return Err(Error::NotCentrallySymmetric);
    }
    let d = p.intrinsic_dim();
    let lat = p.face_lattice()?;
    let f = lat.f_vector();
    let s = s_value(&lat);
    let a = ConjectureA {
        s,
        bound: 3u64.pow(d as u32),
        holds: s >= 3u64.pow(d as u32),
    };
    let catalog = enumerate_hanner(d)?;
    let witness = dominates_some_hanner(&f, d)?;
    let min_hanner_f0_plus_flast = catalog
        .entries
        .iter()
        .map(|e| e.f[0] + e.f[d - 1])
        .min()
        .expect("catalog nonempty");
    let b = ConjectureB {
        holds: witness.is_some(),
        witness: witness.map(|w| w.to_expr_string()),
        own_f0_plus_flast: f[0] + f[d - 1],
        min_hanner_f0_plus_flast,
    };
    let mut c = Vec::new();
    if !functionals.is_empty() {
        if d > 6 {
            return Err(Error::InvalidParameter(
                "functional checks against the catalog are limited to d <= 6".into(),
            ));
        }
        let fv = flag_vector(&lat);
        let hanner_flags: Vec<(String, FlagVector)> = catalog
            .entries
            .iter()
            .map(|entry| {
                let q = realize(&entry.expr)?;
                Ok((entry.expr.to_expr_string(), flag_vector(&q.face_lattice()?)))
            })
            .collect::<Result<_>>()?;
        for functional in functionals {
            let value = evaluate_functional(functional, &fv)?;
            let mut best: Option<(Rational, String)> = None;
            for (name, hfv) in &hanner_flags {
                let hv = evaluate_functional(functional, hfv)?;
                if best.as_ref().map_or(true, |(b, _)| hv < *b) {
                    best = Some((hv, name.clone()));
                }
            }
            let (min_hanner_value, min_witness) = best.expect("catalog nonempty");
            c.push(ConjectureCItem {
                functional: functional.name.clone(),
                holds: value >= min_hanner_value,
                value,
                min_hanner_value,
                min_witness,
            });
        }
    }
    Ok(ConjectureReport {
        d,
        f,
        a,
        b,
        c,
        c_caveat: CONJECTURE_C_CAVEAT,
    })
}

/// Catalog CSV export: canonical expression, f-vector entries, s.
pub fn catalog_csv(catalog: &HannerCatalog) -> String {
    let mut out = String::from("expr");
    for i in 0..catalog.d {
        out.push_str(&format!(",f{i}"));
    }
    out.push_str(",s\n");
    for entry in &catalog.entries {
        out.push_str(&entry.expr.to_expr_string());
        for x in &entry.f {
            out.push_str(&format!(",{x}"));
        }
        out.push_str(&format!(",{}\n", entry.s_value()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cube, slab};
    use crate::exact::{rat_int, RatVector};
    use crate::polytope::{lattice_isomorphic, DEFAULT_ISO_NODE_BUDGET};

    fn leaf() -> HannerExpr {
        HannerExpr::Leaf
    }

    #[test]
    fn canonicalize_flattens() {
        let nested = HannerExpr::Product(vec![
            leaf(),
            HannerExpr::Product(vec![leaf(), leaf()]),
        ]);
        assert_eq!(canonicalize(&nested), cube_expr(3));
    }

    #[test]
    fn square_identity() {
        let sum2 = HannerExpr::Sum(vec![leaf(), leaf()]);
        assert_eq!(canonicalize(&sum2), cube_expr(2));
        // A square under a sum splits into two leaves of that sum.
        let bip_square = HannerExpr::Sum(vec![leaf(), HannerExpr::Product(vec![leaf(), leaf()])]);
        assert_eq!(canonicalize(&bip_square), HannerExpr::Sum(vec![leaf(); 3]));
    }

    #[test]
    fn moon_counts_d_1_to_8() {
        for d in 1..=8 {
            let catalog = enumerate_hanner(d).unwrap();
            assert_eq!(catalog.entries.len() as u64, MOON_COUNTS[d - 1], "d = {d}");
        }
        assert!(enumerate_hanner(0).is_err());
        assert!(enumerate_hanner(12).is_err());
    }

    #[test]
    fn large_catalogs_up_to_the_guard() {
        // The enumerator itself trips on a count mismatch, so success here
        // certifies the published counts 224, 548, 1356.
        for d in 9..=11 {
            let catalog = enumerate_hanner(d).unwrap();
            assert_eq!(catalog.entries.len() as u64, MOON_COUNTS[d - 1]);
        }
    }

    #[test]
    fn d3_catalog_is_cube_and_octahedron() {
        let catalog = enumerate_hanner(3).unwrap();
        let fs: Vec<Vec<u64>> = catalog.entries.iter().map(|e| e.f.clone()).collect();
        assert!(fs.contains(&vec![8, 12, 6]));
        assert!(fs.contains(&vec![6, 12, 8]));
    }

    #[test]
    fn d4_catalog_matches_hanner_table() {
        let catalog = enumerate_hanner(4).unwrap();
        let fs: Vec<Vec<u64>> = catalog.entries.iter().map(|e| e.f.clone()).collect();
        for expected in [
            vec![16, 32, 24, 8],
            vec![8, 24, 32, 16],
            vec![10, 28, 30, 12],
            vec![12, 30, 28, 10],
        ] {
            assert!(fs.contains(&expected), "missing {expected:?}");
        }
    }

    #[test]
    fn s_equals_3_to_d_for_catalogs() {
        for d in 1..=8 {
            let catalog = enumerate_hanner(d).unwrap();
            for entry in &catalog.entries {
                assert_eq!(
                    entry.s_value(),
                    3u64.pow(d as u32),
                    "{}",
                    entry.expr.to_expr_string()
                );
            }
        }
    }

    #[test]
    fn duality_closure_of_catalog() {
        for d in 1..=7 {
            let catalog = enumerate_hanner(d).unwrap();
            let fset: std::collections::HashSet<Vec<u64>> =
                catalog.entries.iter().map(|e| e.f.clone()).collect();
            for entry in &catalog.entries {
                let mut rev = entry.f.clone();
                rev.reverse();
                assert!(fset.contains(&rev));
                // Dual expressions stay in the catalog and have the
                // reversed f-vector.
                assert_eq!(hanner_fvector(&entry.expr.dual()), rev);
            }
        }
    }

    #[test]
    fn fvector_algebra_matches_geometry_up_to_d5() {
        for d in 1..=5 {
            let catalog = enumerate_hanner(d).unwrap();
            for entry in &catalog.entries {
                let p = realize(&entry.expr).unwrap();
                let lat = p.face_lattice().unwrap();
                assert_eq!(
                    lat.f_vector(),
                    entry.f,
                    "algebra vs geometry for {}",
                    entry.expr.to_expr_string()
                );
            }
        }
    }

    #[test]
    fn known_fvectors_from_example_tables() {
        let bip_bip_c3 = HannerExpr::Sum(vec![
            leaf(),
            HannerExpr::Sum(vec![leaf(), cube_expr(3)]),
        ]);
        assert_eq!(
            hanner_fvector(&canonicalize(&bip_bip_c3)),
            vec![12, 48, 86, 72, 24]
        );
        let bip_prism_c4d = canonicalize(&HannerExpr::Sum(vec![
            leaf(),
            HannerExpr::Product(vec![leaf(), crosspolytope_expr(4)]),
        ]));
        assert_eq!(
            hanner_fvector(&bip_prism_c4d),
            vec![18, 88, 200, 240, 146, 36]
        );
        assert_eq!(hanner_fvector(&cube_expr(5)), vec![32, 80, 80, 40, 10]);
    }

    #[test]
    fn canonicalize_idempotent_on_random_trees() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20_240_917);
        fn random_tree(rng: &mut rand_chacha::ChaCha8Rng, dim: usize) -> HannerExpr {
            if dim == 1 {
                return HannerExpr::Leaf;
            }
            let mut parts = Vec::new();
            let mut left = dim;
            while left > 0 {
                let take = if parts.is_empty() && left >= 2 {
                    rng.gen_range(1..left)
                } else {
                    rng.gen_range(1..=left)
                };
                parts.push(take);
                left -= take;
            }
            if parts.len() == 1 {
                return random_tree(rng, dim);
            }
            let children: Vec<HannerExpr> =
                parts.into_iter().map(|p| random_tree(rng, p)).collect();
            if rng.gen_bool(0.5) {
                HannerExpr::Product(children)
            } else {
                HannerExpr::Sum(children)
            }
        }
        for _ in 0..1000 {
            let dim = rng.gen_range(1..=8);
            let t = random_tree(&mut rng, dim);
            let c1 = canonicalize(&t);
            let c2 = canonicalize(&c1);
            assert_eq!(c1, c2, "canonicalize not idempotent on {t:?}");
            assert_eq!(c1.dim(), dim);
            // Canonicalization preserves the f-vector (both operators have
            // order-insensitive algebra).
            assert_eq!(hanner_fvector(&t), hanner_fvector(&c1));
        }
    }

    #[test]
    fn canonical_equality_matches_lattice_isomorphism_d4() {
        // Cross-validate the canonical form geometrically: trees of
        // dimension 4 canonicalize equal iff their realizations have
        // isomorphic lattices.
        let trees = vec![
            HannerExpr::Product(vec![leaf(), leaf(), leaf(), leaf()]),
            HannerExpr::Product(vec![
                HannerExpr::Sum(vec![leaf(), leaf()]),
                HannerExpr::Product(vec![leaf(), leaf()]),
            ]),
            HannerExpr::Sum(vec![leaf(), HannerExpr::Sum(vec![leaf(), leaf(), leaf()])]),
            HannerExpr::Sum(vec![HannerExpr::Product(vec![leaf(), leaf()]), leaf(), leaf()]),
            HannerExpr::Sum(vec![leaf(), HannerExpr::Product(vec![leaf(), leaf(), leaf()])]),
            HannerExpr::Product(vec![leaf(), HannerExpr::Sum(vec![leaf(), leaf(), leaf()])]),
            HannerExpr::Product(vec![
                HannerExpr::Sum(vec![leaf(), leaf()]),
                HannerExpr::Sum(vec![leaf(), leaf()]),
            ]),
        ];
        for a in &trees {
            for b in &trees {
                let same_canon = canonicalize(a) == canonicalize(b);
                let la = realize(a).unwrap().face_lattice().unwrap();
                let lb = realize(b).unwrap().face_lattice().unwrap();
                let iso = lattice_isomorphic(&la, &lb, DEFAULT_ISO_NODE_BUDGET).unwrap();
                assert_eq!(same_canon, iso, "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn domination_examples() {
        // The printed P4 tuple is dominated by bip C3.
        let witness = dominates_some_hanner(&[10, 32, 36, 14], 4)
            .unwrap()
            .unwrap();
        assert_eq!(witness.to_expr_string(), "S(I,P(I,I,I))");
        // The computed orientation is dominated by prism C3^dual.
        let witness2 = dominates_some_hanner(&[14, 36, 32, 10], 4)
            .unwrap()
            .unwrap();
        assert_eq!(witness2.to_expr_string(), "P(I,S(I,I,I))");
        // H(G4) dominates no 5-dimensional Hanner polytope.
        assert!(dominates_some_hanner(&[16, 64, 98, 64, 16], 5)
            .unwrap()
            .is_none());
        // prism HS3 dominates no 6-dimensional Hanner polytope.
        assert!(dominates_some_hanner(&[40, 200, 330, 240, 84, 14], 6)
            .unwrap()
            .is_none());
    }

    #[test]
    fn facet_classification_examples() {
        let cube6 = hanner_facet_classification(&cube_expr(6));
        assert_eq!(cube6.facet_count, 12);
        assert_eq!(cube6.class, FacetClass::Cube);
        let c2_cross3 = HannerExpr::Product(vec![cube_expr(2), crosspolytope_expr(3)]);
        let cls = hanner_facet_classification(&c2_cross3);
        assert_eq!(cls.facet_count, 12);
        assert_eq!(cls.class, FacetClass::CubeTimesOcta);
        let cross5 = hanner_facet_classification(&crosspolytope_expr(5));
        assert_eq!(cross5.facet_count, 32);
        assert_eq!(cross5.class, FacetClass::Other);
    }

    #[test]
    fn prop_4_1_exhaustive_d_le_8() {
        for d in 1..=8usize {
            let catalog = enumerate_hanner(d).unwrap();
            for entry in &catalog.entries {
                let facets = entry.f[d - 1];
                assert!(facets >= 2 * d as u64, "{}", entry.expr.to_expr_string());
                if facets == 2 * d as u64 {
                    assert_eq!(entry.expr, cube_expr(d));
                }
                if d >= 3 && facets == 2 * d as u64 + 2 {
                    assert_eq!(entry.expr, cube_times_octa_expr(d));
                }
            }
        }
    }

    #[test]
    fn conjecture_report_p4() {
        let p4 = slab(
            &cube(4).unwrap(),
            &RatVector::from_ints(&[1, 1, 1, 1]),
            &rat_int(-2),
            &rat_int(2),
        )
        .unwrap()
        .polytope;
        let report = conjecture_report(&p4, &[Functional::alpha()]).unwrap();
        assert!(report.a.holds);
        assert_eq!(report.a.s, 93);
        assert_eq!(report.a.bound, 81);
        assert!(report.b.holds);
        assert_eq!(report.b.witness.as_deref(), Some("P(I,S(I,I,I))"));
        assert_eq!(report.c.len(), 1);
        let c = &report.c[0];
        assert_eq!(c.value, rat_int(6));
        assert_eq!(c.min_hanner_value, rat_int(9));
        assert!(!c.holds);
    }

    #[test]
    fn conjecture_report_cube5_attains_bound_and_witnesses_itself() {
        let report = conjecture_report(&cube(5).unwrap(), &[]).unwrap();
        assert!(report.a.holds);
        assert_eq!(report.a.s, report.a.bound);
        assert_eq!(report.b.witness.as_deref(), Some("P(I,I,I,I,I)"));
    }

    #[test]
    fn conjecture_report_requires_cs() {
        let simplex = crate::constructors::hypersimplex(1, 4).unwrap();
        assert!(matches!(
            conjecture_report(&simplex, &[]),
            Err(Error::NotCentrallySymmetric)
        ));
    }

    #[test]
    fn expr_string_roundtrip() {
        for d in 1..=6 {
            let catalog = enumerate_hanner(d).unwrap();
            for entry in &catalog.entries {
                let s = entry.expr.to_expr_string();
                assert_eq!(HannerExpr::parse(&s).unwrap(), entry.expr);
            }
        }
        assert!(HannerExpr::parse("P(I)").is_err());
        assert!(HannerExpr::parse("Q(I,I)").is_err());
        assert!(HannerExpr::parse("P(I,I)x").is_err());
    }

    #[test]
    fn csv_export_shape() {
        let catalog = enumerate_hanner(4).unwrap();
        let csv = catalog_csv(&catalog);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "expr,f0,f1,f2,f3,s");
        assert!(lines.iter().skip(1).all(|l| l.ends_with(",81")));
    }
}
