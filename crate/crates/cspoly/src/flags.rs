//! Flag vectors, f-polynomials, `s(P)`, the toric `g_2` functional, the
//! four-dimensional functionals `l1`/`l2`/`alpha`, and the battery of
//! flag-vector identities and inequalities used on cs 4-polytopes.
//!
//! Flag counts are computed by layer-by-layer incidence products over the
//! face lattice rather than by explicit chain enumeration; an explicit
//! chain-counting oracle lives in the test module.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::exact::{rat, rat_int, Rational};
use crate::polytope::FaceLattice;
use crate::{Error, Result};

/// All chain counts `f_S` of a polytope, indexed by the bitmask of
/// `S ⊆ {0, ..., d-1}`. `f_∅ = 1`.
#[derive(Clone, Debug)]
pub struct FlagVector {
    d: usize,
    counts: Vec<Option<u64>>,
}

impl FlagVector {
    pub fn dim(&self) -> usize {
        self.d
    }

    /// The chain count for the dimension set `dims` (strictly increasing).
    /// Panics if the entry was not computed (size cap) or out of range.
    pub fn count(&self, dims: &[usize]) -> u64 {
        let mut mask = 0usize;
        for &i in dims {
            assert!(i < self.d, "dimension {i} out of range for d={}", self.d);
            mask |= 1 << i;
        }
        self.counts[mask].expect("flag count not computed (size cap)")
    }

    /// Face count `f_i`.
    pub fn f(&self, i: usize) -> u64 {
        self.count(&[i])
    }

    /// The ordinary f-vector `(f_0, ..., f_{d-1})`.
    pub fn f_vector(&self) -> Vec<u64> {
        (0..self.d).map(|i| self.f(i)).collect()
    }
}

/// Compute `f_S` for every `S` (or every `|S| <= cap`), by dynamic
/// programming over the inclusion relation between the prescribed layers.
pub fn flag_vector_upto(lat: &FaceLattice, cap: Option<usize>) -> FlagVector {
    let d = lat.dim as usize;
    let mut counts: Vec<Option<u64>> = vec![None; 1 << d];
    counts[0] = Some(1);
    for mask in 1..(1u32 << d) {
        if let Some(c) = cap {
            if mask.count_ones() as usize > c {
                continue;
            }
        }
        let dims: Vec<i32> = (0..d as u32)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| i as i32)
            .collect();
        let mut prev = lat.layer(dims[0]);
        let mut acc: Vec<u64> = vec![1; prev.len()];
        for &dim in &dims[1..] {
            let layer = lat.layer(dim);
            let mut next = vec![0u64; layer.len()];
            for (gi, g) in layer.iter().enumerate() {
                for (fi, f) in prev.iter().enumerate() {
                    if f.vertices.is_subset(&g.vertices) {
                        next[gi] += acc[fi];
                    }
                }
            }
            acc = next;
            prev = layer;
        }
        counts[mask as usize] = Some(acc.iter().sum());
    }
    FlagVector { d, counts }
}

/// All flag counts of a lattice.
pub fn flag_vector(lat: &FaceLattice) -> FlagVector {
    flag_vector_upto(lat, None)
}

/// The f-polynomial `f_P(t) = f_{d-1} + f_{d-2} t + ... + f_0 t^{d-1} + t^d`,
/// stored by ascending powers, leading coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPolynomial {
    pub coefficients: Vec<u64>,
}

impl FPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * t + Rational::from_integer((*c).into());
        }
        acc
    }
}

pub fn f_polynomial(lat: &FaceLattice) -> FPolynomial {
    let f = lat.f_vector();
    let mut coefficients: Vec<u64> = f.iter().rev().copied().collect();
    coefficients.push(1);
    FPolynomial { coefficients }
}

/// Total number of non-empty faces, `s(P) = f_P(1)`. Cross-checked against
/// the lattice face count (all faces minus the empty one).
pub fn s_value(lat: &FaceLattice) -> u64 {
    let s = f_polynomial(lat).eval_at_one();
    debug_assert_eq!(s as usize, lat.n_faces() - 1);
    s
}

/// The toric `g_2` of a `d`-polytope (`d >= 3`):
/// `f_1 + f_02 - 3 f_2 - d f_0 + binom(d+1, 2)`.
pub fn g2_toric(fv: &FlagVector) -> Result<Rational> {
    let d = fv.dim();
    if d < 3 {
        return Err(Error::InvalidParameter(format!(
            "g2_toric requires dimension >= 3, got {d}"
        )));
    }
    let v = fv.f(1) as i64 + fv.count(&[0, 2]) as i64
        - 3 * fv.f(2) as i64
        - (d as i64) * fv.f(0) as i64
        + binom(d as u64 + 1, 2) as i64;
    Ok(rat_int(v))
}

pub(crate) fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The three 4-dimensional functionals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourDimFunctionals {
    pub l1: Rational,
    pub l2: Rational,
    pub alpha: Rational,
}

/// `l1 = f_02 - 3 f_2`, `l2 = f_13 - 3 f_1` (cross-checked against the
/// equivalent form `f_02 - 3 f_1`; a mismatch means the lattice violates a
/// Dehn–Sommerville relation and is reported as a hard error), and
/// `alpha = (l1 + l2) / 2`.
pub fn functionals_l1_l2_alpha(fv: &FlagVector) -> Result<FourDimFunctionals> {
    if fv.dim() != 4 {
        return Err(Error::InvalidParameter(format!(
            "l1/l2/alpha are defined for 4-polytopes, got d={}",
            fv.dim()
        )));
    }
    let f02 = fv.count(&[0, 2]) as i64;
    let f13 = fv.count(&[1, 3]) as i64;
    let f1 = fv.f(1) as i64;
    let f2 = fv.f(2) as i64;
    let l2_direct = f13 - 3 * f1;
    let l2_alt = f02 - 3 * f1;
    if l2_direct != l2_alt {
        return Err(Error::IdentityViolation(format!(
            "l2 routes disagree: f13 - 3 f1 = {l2_direct} but f02 - 3 f1 = {l2_alt}"
        )));
    }
    let l1 = rat_int(f02 - 3 * f2);
    let l2 = rat_int(l2_direct);
    let alpha = (&l1 + &l2) * rat(1, 2);
    Ok(FourDimFunctionals { l1, l2, alpha })
}

fn rational_as_string<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// The identity/inequality battery for a 4-polytope. The corollary bound
/// `f_03 >= 3 f_0 + 3 f_3 - 8` is evaluated always but only *asserted* for
/// certified centrally symmetric inputs, where it is a theorem.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub f: [u64; 4],
    pub f02: u64,
    pub f03: u64,
    pub f13: u64,
    pub f23: u64,
    pub is_cs: bool,
    pub euler_holds: bool,
    pub gds_holds: bool,
    pub f23_eq_2f2: bool,
    pub f02_eq_f13: bool,
    pub bayer_rhs: i64,
    pub bayer_holds: bool,
    /// Equality case of the Bayer inequality: every facet is simple.
    pub center_boolean: bool,
    pub cor22_rhs: i64,
    pub cor22_holds: bool,
    pub cor22_asserted: bool,
    #[serde(serialize_with = "rational_as_string")]
    pub f2_lower_bound: Rational,
    pub f2_bound_holds: bool,
    #[serde(serialize_with = "rational_as_string")]
    pub f1_lower_bound: Rational,
    pub f1_bound_holds: bool,
    pub large: bool,
    #[serde(serialize_with = "rational_as_string")]
    pub l1: Rational,
    #[serde(serialize_with = "rational_as_string")]
    pub l2: Rational,
    #[serde(serialize_with = "rational_as_string")]
    pub alpha: Rational,
    pub two_simplicial: bool,
    pub two_simple: bool,
    #[serde(serialize_with = "rational_as_string")]
    pub g2_toric: Rational,
    pub g2_bound_rhs: i64,
    pub g2_bound_holds: bool,
}

pub fn identities_and_inequalities(fv: &FlagVector, is_cs: bool) -> Result<IdentityReport> {
    if fv.dim() != 4 {
        return Err(Error::InvalidParameter(format!(
            "identity report is defined for 4-polytopes, got d={}",
            fv.dim()
        )));
    }
    let f = [fv.f(0), fv.f(1), fv.f(2), fv.f(3)];
    let f02 = fv.count(&[0, 2]);
    let f03 = fv.count(&[0, 3]);
    let f13 = fv.count(&[1, 3]);
    let f23 = fv.count(&[2, 3]);
    let euler_holds = f[0] as i64 - f[1] as i64 + f[2] as i64 - f[3] as i64 == 0;
    let gds_holds = f03 as i64 - f13 as i64 + f23 as i64 == 2 * f[3] as i64;
    let f23_eq_2f2 = f23 == 2 * f[2];
    let f02_eq_f13 = f02 == f13;
    let bayer_rhs = 4 * f[2] as i64 - 4 * f[3] as i64;
    let bayer_holds = (f03 as i64) <= bayer_rhs;
    let center_boolean = f03 as i64 == bayer_rhs;
    let cor22_rhs = 3 * f[0] as i64 + 3 * f[3] as i64 - 8;
    let cor22_holds = f03 as i64 >= cor22_rhs;
    if is_cs && !cor22_holds {
        return Err(Error::IdentityViolation(format!(
            "cs 4-polytope violates f03 >= 3 f0 + 3 f3 - 8 ({f03} < {cor22_rhs})"
        )));
    }
    let f2_lower_bound = rat_int(3 * f[0] as i64 + 7 * f[3] as i64) * rat(1, 4) - rat_int(2);
    let f1_lower_bound = rat_int(7 * f[0] as i64 + 3 * f[3] as i64) * rat(1, 4) - rat_int(2);
    let functionals = functionals_l1_l2_alpha(fv)?;
    let g2 = g2_toric(fv)?;
    let g2_bound_rhs = binom(4, 2) as i64 - 4;
    Ok(IdentityReport {
        f,
        f02,
        f03,
        f13,
        f23,
        is_cs,
        euler_holds,
        gds_holds,
        f23_eq_2f2,
        f02_eq_f13,
        bayer_rhs,
        bayer_holds,
        center_boolean,
        cor22_rhs,
        cor22_holds,
        cor22_asserted: is_cs,
        f2_bound_holds: rat_int(f[2] as i64) >= f2_lower_bound,
        f2_lower_bound,
        f1_bound_holds: rat_int(f[1] as i64) >= f1_lower_bound,
        f1_lower_bound,
        large: f[0] + f[3] >= 24,
        two_simplicial: functionals.l1.is_zero(),
        two_simple: functionals.l2.is_zero(),
        l1: functionals.l1,
        l2: functionals.l2,
        alpha: functionals.alpha,
        g2_bound_holds: g2 >= rat_int(g2_bound_rhs),
        g2_toric: g2,
        g2_bound_rhs,
    })
}

impl IdentityReport {
    /// Two-column markdown rendering of the report.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("| quantity | value |\n|---|---|\n");
        let mut row = |k: &str, v: String| {
            out.push_str(&format!("| {k} | {v} |\n"));
        };
        row("f-vector", format!("{:?}", self.f));
        row(
            "f02 / f03 / f13 / f23",
            format!("{} / {} / {} / {}", self.f02, self.f03, self.f13, self.f23),
        );
        row("Euler", self.euler_holds.to_string());
        row("GDS f03-f13+f23=2f3", self.gds_holds.to_string());
        row("f23 = 2 f2", self.f23_eq_2f2.to_string());
        row("f02 = f13", self.f02_eq_f13.to_string());
        row(
            "Bayer f03 <= 4f2-4f3",
            format!("{} <= {} : {}", self.f03, self.bayer_rhs, self.bayer_holds),
        );
        row("center-boolean (equality)", self.center_boolean.to_string());
        row(
            "cs bound f03 >= 3f0+3f3-8",
            format!(
                "{} >= {} : {}{}",
                self.f03,
                self.cor22_rhs,
                self.cor22_holds,
                if self.cor22_asserted {
                    " (asserted, cs)"
                } else {
                    " (informational)"
                }
            ),
        );
        row(
            "f2 >= (3f0+7f3)/4 - 2",
            format!("{} >= {} : {}", self.f[2], self.f2_lower_bound, self.f2_bound_holds),
        );
        row(
            "f1 >= (7f0+3f3)/4 - 2",
            format!("{} >= {} : {}", self.f[1], self.f1_lower_bound, self.f1_bound_holds),
        );
        row("large (f0+f3 >= 24)", self.large.to_string());
        row("l1 / l2 / alpha", format!("{} / {} / {}", self.l1, self.l2, self.alpha));
        row(
            "2-simplicial / 2-simple",
            format!("{} / {}", self.two_simplicial, self.two_simple),
        );
        row(
            "g2_toric >= C(d,2)-d",
            format!("{} >= {} : {}", self.g2_toric, self.g2_bound_rhs, self.g2_bound_holds),
        );
        out
    }
}

/// Direct structural test that every facet is a simple 3-polytope (each of
/// its vertices lies on exactly three of its edges). This is the equality
/// case of the Bayer inequality, kept as an independent route to the
/// `center_boolean` flag.
pub fn all_facets_simple(lat: &FaceLattice) -> bool {
    assert_eq!(lat.dim, 4, "facet simplicity check is for 4-polytopes");
    let edges = lat.layer(1);
    for facet in lat.layer(3) {
        for v in facet.vertices.iter() {
            let deg = edges
                .iter()
                .filter(|e| e.vertices.contains(v) && e.vertices.is_subset(&facet.vertices))
                .count();
            if deg != 3 {
                return false;
            }
        }
    }
    true
}

/// A finitely supported linear functional on flag vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    pub name: String,
    pub terms: BTreeMap<Vec<usize>, Rational>,
}

impl Functional {
    pub fn new(name: impl Into<String>, terms: Vec<(Vec<usize>, Rational)>) -> Functional {
        let mut map = BTreeMap::new();
        for (mut s, c) in terms {
            s.sort_unstable();
            s.dedup();
            map.insert(s, c);
        }
        Functional {
            name: name.into(),
            terms: map,
        }
    }

    /// The counterexample functional `alpha = f_02 - (3/2)(f_1 + f_2)`.
    pub fn alpha() -> Functional {
        Functional::new(
            "alpha",
            vec![
                (vec![0, 2], rat_int(1)),
                (vec![1], rat(-3, 2)),
                (vec![2], rat(-3, 2)),
            ],
        )
    }

    /// The coordinate functional `f_i`.
    pub fn face_count(i: usize) -> Functional {
        Functional::new(format!("f{i}"), vec![(vec![i], rat_int(1))])
    }
}

/// Evaluate `sum_S alpha_S f_S` exactly.
pub fn evaluate_functional(f: &Functional, fv: &FlagVector) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (s, coeff) in &f.terms {
        if let Some(&bad) = s.iter().find(|&&i| i >= fv.dim()) {
            return Err(Error::InvalidParameter(format!(
                "functional {} uses dimension {bad}, polytope has d={}",
                f.name,
                fv.dim()
            )));
        }
        acc += coeff * Rational::from_integer(fv.count(s).into());
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{
        central_hypersimplex, crosspolytope, cube, direct_sum, hansen, interval, product, slab,
        Graph,
    };
    use crate::exact::RatVector;
    use crate::polytope::{is_centrally_symmetric, VPolytope};

    fn p4() -> VPolytope {
        slab(
            &cube(4).unwrap(),
            &RatVector::from_ints(&[1, 1, 1, 1]),
            &rat_int(-2),
            &rat_int(2),
        )
        .unwrap()
        .polytope
    }

    /// Explicit chain-counting oracle, independent of the DP route.
    fn chain_count_oracle(lat: &FaceLattice, dims: &[i32]) -> u64 {
        fn extend(lat: &FaceLattice, dims: &[i32], prefix: Option<&crate::polytope::Face>) -> u64 {
            let Some((&dim, rest)) = dims.split_first() else {
                return 1;
            };
            lat.layer(dim)
                .iter()
                .filter(|f| match prefix {
                    Some(p) => p.vertices.is_subset(&f.vertices),
                    None => true,
                })
                .map(|f| extend(lat, rest, Some(f)))
                .sum()
        }
        extend(lat, dims, None)
    }

    #[test]
    fn flag_counts_match_chain_oracle() {
        for p in [cube(3).unwrap(), crosspolytope(3).unwrap(), cube(4).unwrap()] {
            let lat = p.face_lattice().unwrap();
            let fv = flag_vector(&lat);
            let d = lat.dim as usize;
            for mask in 1u32..(1 << d) {
                let dims: Vec<usize> = (0..d).filter(|&i| mask >> i & 1 == 1).collect();
                let dims_i: Vec<i32> = dims.iter().map(|&i| i as i32).collect();
                assert_eq!(
                    fv.count(&dims),
                    chain_count_oracle(&lat, &dims_i),
                    "f_{dims:?} mismatch"
                );
            }
        }
    }

    #[test]
    fn flag_examples_from_tables() {
        let c4 = cube(4).unwrap().face_lattice().unwrap();
        let fv = flag_vector(&c4);
        assert_eq!(fv.count(&[0, 2]), 96);
        assert_eq!(fv.count(&[0, 3]), 64);

        let p4 = p4().face_lattice().unwrap();
        let fv4 = flag_vector(&p4);
        assert_eq!(fv4.count(&[0, 2]), 108);
    }

    #[test]
    fn s_values() {
        for d in 1..=6 {
            let lat = cube(d).unwrap().face_lattice().unwrap();
            assert_eq!(s_value(&lat), 3u64.pow(d as u32), "s(cube({d}))");
        }
        let hs3 = central_hypersimplex(3).unwrap().face_lattice().unwrap();
        assert_eq!(s_value(&hs3), 303);
        let hg4 = hansen(&Graph::path(4))
            .unwrap()
            .polytope
            .face_lattice()
            .unwrap();
        assert_eq!(s_value(&hg4), 259);
    }

    #[test]
    fn f_polynomial_shape() {
        let lat = cube(3).unwrap().face_lattice().unwrap();
        let fp = f_polynomial(&lat);
        // f(t) = 6 + 12 t + 8 t^2 + t^3
        assert_eq!(fp.coefficients, vec![6, 12, 8, 1]);
        assert_eq!(fp.eval_at_one(), 27);
        assert_eq!(fp.eval(&rat_int(1)), rat_int(27));
        assert_eq!(fp.degree(), 3);
    }

    #[test]
    fn g2_values() {
        // Crosspolytopes attain the cs lower bound binom(d,2) - d.
        for d in 3..=5usize {
            let lat = crosspolytope(d).unwrap().face_lattice().unwrap();
            let g2 = g2_toric(&flag_vector(&lat)).unwrap();
            let bound = binom(d as u64, 2) as i64 - d as i64;
            assert_eq!(g2, rat_int(bound), "g2(cross({d}))");
        }
        let c4 = flag_vector(&cube(4).unwrap().face_lattice().unwrap());
        assert_eq!(g2_toric(&c4).unwrap(), rat_int(2));
        let p4 = flag_vector(&p4().face_lattice().unwrap());
        assert_eq!(g2_toric(&p4).unwrap(), rat_int(2));
        // Too small a dimension is rejected.
        let sq = flag_vector(&cube(2).unwrap().face_lattice().unwrap());
        assert!(g2_toric(&sq).is_err());
    }

    #[test]
    fn alpha_values_from_hanner_table() {
        let alpha_of = |p: &VPolytope| {
            let fv = flag_vector(&p.face_lattice().unwrap());
            functionals_l1_l2_alpha(&fv).unwrap().alpha
        };
        assert_eq!(alpha_of(&p4()), rat_int(6));
        assert_eq!(alpha_of(&cube(4).unwrap()), rat_int(12));
        assert_eq!(alpha_of(&crosspolytope(4).unwrap()), rat_int(12));
        let bip_c3 = direct_sum(&cube(3).unwrap(), &interval()).unwrap();
        assert_eq!(alpha_of(&bip_c3), rat_int(9));
        let prism_c3d = product(&interval(), &crosspolytope(3).unwrap()).unwrap();
        assert_eq!(alpha_of(&prism_c3d), rat_int(9));
    }

    #[test]
    fn identity_report_cube4() {
        let c4 = cube(4).unwrap();
        let lat = c4.face_lattice().unwrap();
        let fv = flag_vector(&lat);
        let report =
            identities_and_inequalities(&fv, is_centrally_symmetric(&c4).is_some()).unwrap();
        assert!(report.euler_holds && report.gds_holds);
        assert!(report.f23_eq_2f2 && report.f02_eq_f13);
        assert_eq!(report.f03, 64);
        assert_eq!(report.bayer_rhs, 64);
        assert!(report.center_boolean);
        assert_eq!(report.center_boolean, all_facets_simple(&lat));
        assert!(report.cor22_holds && report.cor22_asserted);
        assert!(report.large);
        assert!(!report.to_markdown().is_empty());
    }

    #[test]
    fn identity_report_bip_c3() {
        let bip_c3 = direct_sum(&cube(3).unwrap(), &interval()).unwrap();
        let lat = bip_c3.face_lattice().unwrap();
        let fv = flag_vector(&lat);
        let report = identities_and_inequalities(&fv, true).unwrap();
        // 12 square-pyramid facets with 5 vertices each.
        assert_eq!(report.f03, 60);
        assert_eq!(report.cor22_rhs, 58);
        assert!(report.cor22_holds);
        assert!(!report.center_boolean);
        assert_eq!(report.center_boolean, all_facets_simple(&lat));
    }

    #[test]
    fn functional_evaluation() {
        let p4 = flag_vector(&p4().face_lattice().unwrap());
        assert_eq!(
            evaluate_functional(&Functional::alpha(), &p4).unwrap(),
            rat_int(6)
        );
        let zero = Functional::new("zero", vec![]);
        assert_eq!(evaluate_functional(&zero, &p4).unwrap(), rat_int(0));
        let hs3 = flag_vector(&central_hypersimplex(3).unwrap().face_lattice().unwrap());
        assert_eq!(
            evaluate_functional(&Functional::face_count(0), &hs3).unwrap(),
            rat_int(20)
        );
        // Out-of-range dimension set is an error.
        let bad = Functional::new("bad", vec![(vec![9], rat_int(1))]);
        assert!(evaluate_functional(&bad, &p4).is_err());
    }

    #[test]
    fn layer_counts_match_flag_singletons() {
        let lat = central_hypersimplex(3).unwrap().face_lattice().unwrap();
        let fv = flag_vector(&lat);
        assert_eq!(fv.f_vector(), lat.f_vector());
        assert_eq!(fv.f_vector(), vec![20, 90, 120, 60, 12]);
    }

    #[test]
    fn size_cap_limits_computation() {
        let lat = cube(3).unwrap().face_lattice().unwrap();
        let fv = flag_vector_upto(&lat, Some(1));
        assert_eq!(fv.f(0), 8);
        let result = std::panic::catch_unwind(|| fv.count(&[0, 1]));
        assert!(result.is_err());
    }

    #[test]
    fn four_dim_nonnegativity_and_gds() {
        // l1, l2 >= 0 and the Dehn–Sommerville identities on a mixed corpus.
        let instances: Vec<VPolytope> = vec![
            cube(4).unwrap(),
            crosspolytope(4).unwrap(),
            direct_sum(&cube(3).unwrap(), &interval()).unwrap(),
            product(&interval(), &crosspolytope(3).unwrap()).unwrap(),
            p4(),
        ];
        for p in &instances {
            let fv = flag_vector(&p.face_lattice().unwrap());
            let fns = functionals_l1_l2_alpha(&fv).unwrap();
            assert!(fns.l1 >= rat_int(0));
            assert!(fns.l2 >= rat_int(0));
            let report = identities_and_inequalities(&fv, true).unwrap();
            assert!(report.euler_holds && report.gds_holds && report.f23_eq_2f2);
            assert!(report.f02_eq_f13);
        }
    }
}
