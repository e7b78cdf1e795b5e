//! The table-verification harness: recompute every numeric claim of the
//! source tables and report item-by-item verdicts.
//!
//! Items compare a claimed exact value against the recomputed one. The
//! only whitelisted ambiguity is the orientation of the printed P4
//! f-vector (the construction yields the reversed tuple; all derived
//! quantities are insensitive to the reversal), which is compared as a
//! multiset and reported as `PassUpToDocumentedAmbiguity`. Every other
//! mismatch is a plain `Fail` — including the printed face-count sum of
//! the prism over HS3, which disagrees with its own printed f-vector by
//! one (the total 1 + sum f_i of that row is 909, not 908).

use serde::Serialize;

use crate::constructors::{
    bipyramid, central_hypersimplex, crosspolytope, cube, direct_sum, hansen, hypersimplex,
    interval, prism, product, pyramid, slab, twisted_prism, Graph,
};
use crate::exact::{rat_int, RatVector};
use crate::flags::{
    flag_vector, functionals_l1_l2_alpha, g2_toric, identities_and_inequalities, s_value,
};
use crate::hanner::{
    cube_expr, cube_times_octa_expr, dominates_some_hanner, enumerate_hanner, realize,
    FacetClass, HannerExpr,
};
use crate::io::full_dimensional_copy;
use crate::polytope::{combinatorial_dual, is_centrally_symmetric, lattice_isomorphic, VPolytope};
use crate::rigidity::{rigidity_matrix, stress_analysis, triangulate_2_skeleton, FanRoot};
use crate::Result;

/// Item ids whose claimed-vs-computed mismatch is a documented ambiguity
/// rather than a failure. The only entry is the orientation of the printed
/// P4 f-vector; the comparison is by multiset.
pub const AMBIGUITY_WHITELIST: &[&str] = &["table3.P4.fvec"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    PassUpToDocumentedAmbiguity,
}

/// One verified claim: a stable id, the source citation, the claimed and
/// recomputed values, and the derived verdict.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationItem {
    pub id: String,
    pub citation: String,
    pub claimed: String,
    pub computed: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn fvec_string(f: &[u64]) -> String {
    let inner: Vec<String> = f.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

struct Items(Vec<VerificationItem>);

impl Items {
    fn push_eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        id: &str,
        citation: &str,
        claimed: T,
        computed: T,
    ) {
        let verdict = if claimed == computed {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self.0.push(VerificationItem {
            id: id.to_string(),
            citation: citation.to_string(),
            claimed: claimed.to_string(),
            computed: computed.to_string(),
            verdict,
            note: None,
        });
    }

    fn push_bool(&mut self, id: &str, citation: &str, claimed: &str, holds: bool) {
        self.0.push(VerificationItem {
            id: id.to_string(),
            citation: citation.to_string(),
            claimed: claimed.to_string(),
            computed: if holds { claimed.to_string() } else { format!("NOT ({claimed})") },
            verdict: if holds { Verdict::Pass } else { Verdict::Fail },
            note: None,
        });
    }

    fn push_with_note(&mut self, item: VerificationItem) {
        self.0.push(item);
    }
}

/// Everything the harness builds, cached so each polytope is constructed
/// and analyzed once.
struct Corpus {
    p4: VPolytope,
    hanner4: Vec<(&'static str, VPolytope)>,
}

impl Corpus {
    fn build() -> Result<Corpus> {
        let p4 = slab(
            &cube(4)?,
            &RatVector::from_ints(&[1, 1, 1, 1]),
            &rat_int(-2),
            &rat_int(2),
        )?
        .polytope;
        let hanner4 = vec![
            ("C4", cube(4)?),
            ("C4dual", crosspolytope(4)?),
            ("bipC3", direct_sum(&cube(3)?, &interval())?),
            ("prismC3dual", product(&interval(), &crosspolytope(3)?)?),
        ];
        Ok(Corpus { p4, hanner4 })
    }
}

/// Run every verification item. Deterministic: two runs produce identical
/// output.
pub fn verify_paper() -> Result<Vec<VerificationItem>> {
    let mut items = Items(Vec::new());
    let corpus = Corpus::build()?;
    section3_table(&mut items, &corpus)?;
    example52_table(&mut items)?;
    example53_table(&mut items)?;
    moon_counts(&mut items)?;
    rigidity_suite(&mut items, &corpus)?;
    identity_suite(&mut items, &corpus)?;
    structural_properties(&mut items)?;
    conjecture_a_sanity(&mut items, &corpus)?;
    Ok(items.0)
}

fn section3_table(items: &mut Items, corpus: &Corpus) -> Result<()> {
    let cite = "table of 4-dimensional Hanner polytopes and P4";
    let expected: &[(&str, [u64; 4], u64, i64)] = &[
        ("C4", [16, 32, 24, 8], 96, 12),
        ("C4dual", [8, 24, 32, 16], 96, 12),
        ("bipC3", [10, 28, 30, 12], 96, 9),
        ("prismC3dual", [12, 30, 28, 10], 96, 9),
    ];
    for ((name, f_claim, f02_claim, alpha_claim), (cname, p)) in
        expected.iter().zip(corpus.hanner4.iter())
    {
        assert_eq!(name, cname);
        let lat = p.face_lattice()?;
        let fv = flag_vector(&lat);
        items.push_eq(
            &format!("table3.{name}.fvec"),
            cite,
            fvec_string(f_claim),
            fvec_string(&fv.f_vector()),
        );
        items.push_eq(
            &format!("table3.{name}.f02"),
            cite,
            *f02_claim,
            fv.count(&[0, 2]),
        );
        let alpha = functionals_l1_l2_alpha(&fv)?.alpha;
        items.push_eq(
            &format!("table3.{name}.alpha"),
            cite,
            rat_int(*alpha_claim),
            alpha,
        );
    }

    let lat = corpus.p4.face_lattice()?;
    let fv = flag_vector(&lat);
    let computed_f = fv.f_vector();
    let claimed_f = [10u64, 32, 36, 14];
    let mut claimed_sorted = claimed_f.to_vec();
    claimed_sorted.sort_unstable();
    let mut computed_sorted = computed_f.clone();
    computed_sorted.sort_unstable();
    let verdict = if computed_f == claimed_f {
        Verdict::Pass
    } else if claimed_sorted == computed_sorted
        && AMBIGUITY_WHITELIST.contains(&"table3.P4.fvec")
    {
        Verdict::PassUpToDocumentedAmbiguity
    } else {
        Verdict::Fail
    };
    items.push_with_note(VerificationItem {
        id: "table3.P4.fvec".into(),
        citation: "P4 row of the dimension-4 table".into(),
        claimed: fvec_string(&claimed_f),
        computed: fvec_string(&computed_f),
        verdict,
        note: Some(
            "the printed tuple is the reversal of the constructed one; the slab construction \
             keeps 14 of 16 cube vertices and has 10 facets, and every derived quantity in the \
             table is invariant under the reversal, so the comparison is by multiset"
                .into(),
        ),
    });
    items.push_eq("table3.P4.f02", "f02 count for P4", 108u64, fv.count(&[0, 2]));
    let alpha = functionals_l1_l2_alpha(&fv)?.alpha;
    items.push_eq("table3.P4.alpha", "alpha value for P4", rat_int(6), alpha);
    Ok(())
}

/// The four dimension-5 catalog rows listed in the first example table,
/// as canonical expressions.
fn listed_hanner5() -> Vec<(&'static str, HannerExpr, [u64; 5])> {
    let i = HannerExpr::Leaf;
    vec![
        (
            "C5dual",
            HannerExpr::Sum(vec![i.clone(); 5]),
            [10, 40, 80, 80, 32],
        ),
        (
            "bipbipC3",
            HannerExpr::Sum(vec![i.clone(), i.clone(), cube_expr(3)]),
            [12, 48, 86, 72, 24],
        ),
        (
            "bipprismC3dual",
            HannerExpr::Sum(vec![
                i.clone(),
                HannerExpr::Product(vec![i.clone(), HannerExpr::Sum(vec![i.clone(); 3])]),
            ]),
            [14, 54, 88, 66, 20],
        ),
        (
            "prismC4dual",
            HannerExpr::Product(vec![i.clone(), HannerExpr::Sum(vec![i; 4])]),
            [16, 56, 88, 64, 18],
        ),
    ]
}

fn example52_table(items: &mut Items) -> Result<()> {
    let cite = "dimension-5 example table";
    let hg4 = hansen(&Graph::path(4))?.polytope;
    let lat = hg4.face_lattice()?;
    let f = lat.f_vector();
    items.push_eq(
        "ex5.2.HG4.fvec",
        cite,
        fvec_string(&[16, 64, 98, 64, 16]),
        fvec_string(&f),
    );
    items.push_eq("ex5.2.HG4.s", cite, 259u64, s_value(&lat));
    items.push_eq("ex5.2.HG4.f0f4", cite, 32u64, f[0] + f[4]);

    let hs3 = central_hypersimplex(3)?;
    let lat = hs3.face_lattice()?;
    items.push_eq(
        "ex5.2.HS3.fvec",
        cite,
        fvec_string(&[20, 90, 120, 60, 12]),
        fvec_string(&lat.f_vector()),
    );
    items.push_eq("ex5.2.HS3.s", cite, 303u64, s_value(&lat));

    let catalog = enumerate_hanner(5)?;
    for (name, expr, f_claim) in listed_hanner5() {
        let expr = crate::hanner::canonicalize(&expr);
        let entry = catalog.entries.iter().find(|e| e.expr == expr);
        let (computed_f, computed_s, dual_present) = match entry {
            Some(e) => {
                let mut rev = e.f.clone();
                rev.reverse();
                let dual_in = catalog
                    .entries
                    .iter()
                    .any(|other| other.expr == e.expr.dual() && other.f == rev);
                (fvec_string(&e.f), e.s_value(), dual_in)
            }
            None => ("absent from catalog".to_string(), 0, false),
        };
        items.push_eq(
            &format!("ex5.2.hanner5.{name}.fvec"),
            cite,
            fvec_string(&f_claim),
            computed_f,
        );
        items.push_eq(&format!("ex5.2.hanner5.{name}.s"), cite, 243u64, computed_s);
        items.push_bool(
            &format!("ex5.2.hanner5.{name}.dual_in_catalog"),
            cite,
            "the dual entry appears in the catalog with the reversed f-vector",
            dual_present,
        );
    }

    let min_f0f4 = catalog
        .entries
        .iter()
        .map(|e| e.f[0] + e.f[4])
        .min()
        .unwrap();
    items.push_eq("ex5.2.min_hanner_f0f4", cite, 34u64, min_f0f4);
    let witness = dominates_some_hanner(&f, 5)?;
    items.push_bool(
        "ex5.2.HG4.conjB",
        "refutation of conjecture B in dimension 5",
        "H(G4) dominates no 5-dimensional Hanner polytope",
        witness.is_none(),
    );
    Ok(())
}

/// The nine dimension-6 catalog rows listed in the second example table.
fn listed_hanner6() -> Vec<(&'static str, HannerExpr, [u64; 6])> {
    let i = HannerExpr::Leaf;
    let octa = HannerExpr::Sum(vec![i.clone(); 3]);
    let c3 = cube_expr(3);
    vec![
        (
            "C6dual",
            HannerExpr::Sum(vec![i.clone(); 6]),
            [12, 60, 160, 240, 192, 64],
        ),
        (
            "bipbipbipC3",
            HannerExpr::Sum(vec![i.clone(), i.clone(), i.clone(), c3.clone()]),
            [14, 72, 182, 244, 168, 48],
        ),
        (
            "bipbipprismC3dual",
            HannerExpr::Sum(vec![
                i.clone(),
                i.clone(),
                HannerExpr::Product(vec![i.clone(), octa.clone()]),
            ]),
            [16, 82, 196, 242, 152, 40],
        ),
        (
            "bipprismC4dual",
            HannerExpr::Sum(vec![
                i.clone(),
                HannerExpr::Product(vec![i.clone(), HannerExpr::Sum(vec![i.clone(); 4])]),
            ]),
            [18, 88, 200, 240, 146, 36],
        ),
        (
            "bipbipC4",
            HannerExpr::Sum(vec![i.clone(), i.clone(), cube_expr(4)]),
            [20, 100, 216, 232, 128, 32],
        ),
        (
            "prismC5dual",
            HannerExpr::Product(vec![i.clone(), HannerExpr::Sum(vec![i.clone(); 5])]),
            [20, 90, 200, 240, 144, 34],
        ),
        (
            "bipprismbipC3",
            HannerExpr::Sum(vec![
                i.clone(),
                HannerExpr::Product(vec![
                    i.clone(),
                    HannerExpr::Sum(vec![i.clone(), c3.clone()]),
                ]),
            ]),
            [22, 106, 220, 230, 122, 28],
        ),
        (
            "prismbipbipC3",
            HannerExpr::Product(vec![
                i.clone(),
                HannerExpr::Sum(vec![i.clone(), i.clone(), c3.clone()]),
            ]),
            [24, 108, 220, 230, 120, 26],
        ),
        (
            "C3sumC3",
            HannerExpr::Sum(vec![c3.clone(), c3]),
            [16, 88, 204, 240, 144, 36],
        ),
    ]
}

fn example53_table(items: &mut Items) -> Result<()> {
    let cite = "dimension-6 example table";
    let hg5 = hansen(&Graph::g5())?.polytope;
    let lat = hg5.face_lattice()?;
    items.push_eq(
        "ex5.3.HG5.fvec",
        cite,
        fvec_string(&[24, 116, 232, 232, 116, 24]),
        fvec_string(&lat.f_vector()),
    );
    items.push_eq("ex5.3.HG5.s", cite, 745u64, s_value(&lat));

    let prism_hs3 = prism(&central_hypersimplex(3)?)?;
    let lat = prism_hs3.face_lattice()?;
    let f = lat.f_vector();
    items.push_eq(
        "ex5.3.prismHS3.fvec",
        cite,
        fvec_string(&[40, 200, 330, 240, 84, 14]),
        fvec_string(&f),
    );
    let s = s_value(&lat);
    items.push_with_note(VerificationItem {
        id: "ex5.3.prismHS3.s".into(),
        citation: cite.into(),
        claimed: "908".into(),
        computed: s.to_string(),
        verdict: if s == 908 { Verdict::Pass } else { Verdict::Fail },
        note: Some(
            "the printed s-column entry of this row is its own f-vector sum without the +1 \
             for the polytope itself; by the definition s = 1 + sum f_i (and by s being \
             multiplicative over prisms, 3 * 303 = 909) the computed value is 909, so the \
             printed 908 cannot pass"
                .into(),
        ),
    });

    let catalog = enumerate_hanner(6)?;
    for (name, expr, f_claim) in listed_hanner6() {
        let expr = crate::hanner::canonicalize(&expr);
        let entry = catalog.entries.iter().find(|e| e.expr == expr);
        let (computed_f, computed_s) = match entry {
            Some(e) => (fvec_string(&e.f), e.s_value()),
            None => ("absent from catalog".to_string(), 0),
        };
        items.push_eq(
            &format!("ex5.3.hanner6.{name}.fvec"),
            cite,
            fvec_string(&f_claim),
            computed_f,
        );
        items.push_eq(&format!("ex5.3.hanner6.{name}.s"), cite, 729u64, computed_s);
    }

    let pair_violations = catalog
        .entries
        .iter()
        .filter(|e| e.f[1] <= 116 && e.f[4] <= 116)
        .count();
    items.push_eq(
        "ex5.3.B_pair_refutation",
        "the (f1, f4) pair argument in dimension 6",
        0usize,
        pair_violations,
    );
    let witness = dominates_some_hanner(&f, 6)?;
    items.push_bool(
        "ex5.3.prismHS3.conjB",
        "refutation of conjecture B in dimension 6",
        "prism over HS3 dominates no 6-dimensional Hanner polytope",
        witness.is_none(),
    );
    Ok(())
}

fn moon_counts(items: &mut Items) -> Result<()> {
    let cite = "two-terminal network counts n(d)";
    let expected = [1u64, 1, 2, 4, 8, 18, 40, 94];
    for (d, claim) in expected.iter().enumerate().map(|(i, c)| (i + 1, c)) {
        let catalog = enumerate_hanner(d)?;
        items.push_eq(
            &format!("moon.d{d}"),
            cite,
            *claim,
            catalog.entries.len() as u64,
        );
    }
    let mut all_attain = true;
    for d in 1..=8usize {
        let catalog = enumerate_hanner(d)?;
        all_attain &= catalog
            .entries
            .iter()
            .all(|e| e.s_value() == 3u64.pow(d as u32));
    }
    items.push_bool(
        "hanner.s_equals_3d",
        "Hanner polytopes attain s = 3^d",
        "every catalog entry with d <= 8 has s = 3^d",
        all_attain,
    );
    Ok(())
}

fn rigidity_suite(items: &mut Items, corpus: &Corpus) -> Result<()> {
    let cite = "stress-space dimension equals toric g2 (Whiteley identity)";
    let mut instances: Vec<(String, VPolytope)> = vec![("C3".into(), cube(3)?)];
    for (name, p) in &corpus.hanner4 {
        instances.push((name.to_string(), p.clone()));
    }
    instances.push(("P4".into(), corpus.p4.clone()));
    for (name, p) in &instances {
        let lat = p.face_lattice()?;
        let fv = flag_vector(&lat);
        let g2 = g2_toric(&fv)?;
        let fw = triangulate_2_skeleton(p, &lat, true, FanRoot::Least)?;
        let report = stress_analysis(&fw, Some(g2.clone()))?;
        items.push_eq(
            &format!("rigidity.{name}.stress_dim"),
            cite,
            g2.to_string(),
            report.stress_dim.to_string(),
        );
        items.push_bool(
            &format!("rigidity.{name}.sym_bound"),
            "symmetric stress dimension lower bound e/2 - dv/2 + C(d,2)",
            "sym_stress_dim >= e/2 - dv/2 + C(d,2)",
            report.sym_bound_holds == Some(true),
        );
        let alt = triangulate_2_skeleton(p, &lat, true, FanRoot::SecondLeast)?;
        let rank_alt = rigidity_matrix(&alt).rank();
        items.push_eq(
            &format!("rigidity.{name}.fan_independent"),
            "rank independence of the 2-face triangulation",
            report.rank_r,
            rank_alt,
        );
    }
    Ok(())
}

fn identity_suite(items: &mut Items, corpus: &Corpus) -> Result<()> {
    let cite = "generalized Dehn-Sommerville, Bayer and cs inequalities in dimension 4";
    let mut instances: Vec<(String, VPolytope)> = Vec::new();
    for (name, p) in &corpus.hanner4 {
        instances.push((name.to_string(), p.clone()));
    }
    instances.push(("P4".into(), corpus.p4.clone()));
    let square = cube(2)?;
    let triangle = full_dimensional_copy(&hypersimplex(1, 3)?)?;
    instances.push(("tprism_pyr_square".into(), twisted_prism(&pyramid(&square)?)?));
    instances.push((
        "tprism_pyr_triangle".into(),
        twisted_prism(&pyramid(&triangle)?)?,
    ));
    for (name, p) in &instances {
        let cs = is_centrally_symmetric(p).is_some();
        let lat = p.face_lattice()?;
        let fv = flag_vector(&lat);
        let report = identities_and_inequalities(&fv, cs)?;
        let all = report.euler_holds
            && report.gds_holds
            && report.f23_eq_2f2
            && report.f02_eq_f13
            && report.bayer_holds
            && report.cor22_holds
            && report.f1_bound_holds
            && report.f2_bound_holds
            && report.g2_bound_holds;
        items.push_bool(
            &format!("ident.{name}"),
            cite,
            "Euler, GDS, f23=2f2, f02=f13, Bayer, cs bound, the two display bounds and the g2 bound all hold",
            all,
        );
    }
    items.push_bool(
        "ident.C4.center_boolean",
        "equality case of the Bayer inequality",
        "the 4-cube is center-boolean (f03 = 4f2 - 4f3)",
        {
            let lat = corpus.hanner4[0].1.face_lattice()?;
            let report = identities_and_inequalities(&flag_vector(&lat), true)?;
            report.center_boolean && crate::flags::all_facets_simple(&lat)
        },
    );
    for d in 3..=5usize {
        let lat = crosspolytope(d)?.face_lattice()?;
        let g2 = g2_toric(&flag_vector(&lat))?;
        let bound = crate::flags::binom(d as u64, 2) as i64 - d as i64;
        items.push_eq(
            &format!("thm2.1.cross.d{d}"),
            "tightness of the cs g2 bound on crosspolytopes",
            rat_int(bound),
            g2,
        );
    }
    Ok(())
}

fn structural_properties(items: &mut Items) -> Result<()> {
    let budget = crate::polytope::iso_budget_from_env();
    let square = cube(2)?;
    let triangle = full_dimensional_copy(&hypersimplex(1, 3)?)?;
    for (name, q) in [("square", square), ("triangle", triangle)] {
        let lhs = twisted_prism(&pyramid(&q)?)?;
        let rhs = bipyramid(&full_dimensional_copy(&twisted_prism(&q)?)?)?;
        let iso = lattice_isomorphic(&lhs.face_lattice()?, &rhs.face_lattice()?, budget)?;
        items.push_bool(
            &format!("prop2.5.{name}"),
            "twisted prism over a pyramid is a bipyramid over the twisted prism",
            "tprism(pyr(Q)) is lattice-isomorphic to bip(tprism(Q))",
            iso,
        );
    }

    for (name, graph) in [("HG4", Graph::path(4)), ("HG5", Graph::g5())] {
        let h = hansen(&graph)?.polytope;
        let lat = h.face_lattice()?;
        let dual = combinatorial_dual(&lat);
        let iso = lattice_isomorphic(&lat, &dual, budget)?;
        items.push_bool(
            &format!("prop5.1.{name}.selfdual"),
            "Hansen polytopes of self-complementary perfect graphs are self-dual",
            "the polytope is lattice-isomorphic to its dual",
            iso,
        );
    }

    for d in 1..=8usize {
        let catalog = enumerate_hanner(d)?;
        let mut ok = true;
        for entry in &catalog.entries {
            let facets = entry.f[d - 1];
            ok &= facets >= 2 * d as u64;
            if facets == 2 * d as u64 {
                ok &= entry.expr == cube_expr(d);
            }
            if d >= 3 && facets == 2 * d as u64 + 2 {
                ok &= entry.expr == cube_times_octa_expr(d);
            }
            // Classification agrees with the expression comparison.
            let cls = crate::hanner::hanner_facet_classification(&entry.expr);
            ok &= (cls.class == FacetClass::Cube) == (entry.expr == cube_expr(d));
        }
        items.push_bool(
            &format!("prop4.1.d{d}"),
            "facet-count classification of Hanner polytopes",
            "f_{d-1} >= 2d; equality only for the cube; 2d+2 only for C_{d-3} x C_3^dual",
            ok,
        );
    }

    for k in 2..=3usize {
        let hs = central_hypersimplex(k)?;
        let inc = hs.facet_enumeration()?;
        items.push_eq(
            &format!("hs.facets.k{k}"),
            "central hypersimplices have 4k facets",
            4 * k as u64,
            inc.facets.len() as u64,
        );
    }

    // The central hypersimplex is a twisted prism over the half-integer
    // hypersimplex one dimension down.
    let base = full_dimensional_copy(&hypersimplex(3, 5)?)?;
    let tp = twisted_prism(&base)?;
    let iso = lattice_isomorphic(
        &tp.face_lattice()?,
        &central_hypersimplex(3)?.face_lattice()?,
        budget,
    )?;
    items.push_bool(
        "hs.twisted_prism.k3",
        "HS_k is a twisted prism over the (k, 2k-1)-hypersimplex",
        "tprism of a full-dimensional copy of the (3,5)-hypersimplex is lattice-isomorphic to HS_3",
        iso,
    );
    Ok(())
}

fn conjecture_a_sanity(items: &mut Items, corpus: &Corpus) -> Result<()> {
    let mut instances: Vec<(String, VPolytope)> = Vec::new();
    for d in 3..=6usize {
        instances.push((format!("C{d}"), cube(d)?));
        instances.push((format!("C{d}dual"), crosspolytope(d)?));
    }
    for (name, p) in &corpus.hanner4 {
        instances.push((name.to_string(), p.clone()));
    }
    instances.push(("P4".into(), corpus.p4.clone()));
    instances.push(("HS2".into(), central_hypersimplex(2)?));
    instances.push(("HS3".into(), central_hypersimplex(3)?));
    instances.push(("prismHS3".into(), prism(&central_hypersimplex(3)?)?));
    instances.push(("HG4".into(), hansen(&Graph::path(4))?.polytope));
    instances.push(("HG5".into(), hansen(&Graph::g5())?.polytope));
    instances.push((
        "tprism_pyr_square".into(),
        twisted_prism(&pyramid(&cube(2)?)?)?,
    ));
    for d in 4..=5usize {
        let catalog = enumerate_hanner(d)?;
        for entry in &catalog.entries {
            instances.push((
                format!("hanner{d}.{}", entry.expr.to_expr_string()),
                realize(&entry.expr)?,
            ));
        }
    }
    let mut failures = Vec::new();
    for (name, p) in &instances {
        if is_centrally_symmetric(p).is_none() {
            failures.push(format!("{name} (not cs!)"));
            continue;
        }
        let lat = p.face_lattice()?;
        let d = lat.dim as u32;
        if s_value(&lat) < 3u64.pow(d) {
            failures.push(name.clone());
        }
    }
    items.push_with_note(VerificationItem {
        id: "conjA.corpus".into(),
        citation: "the 3^d lower bound on every cs instance in the corpus".into(),
        claimed: "s(P) >= 3^d for all corpus instances".into(),
        computed: if failures.is_empty() {
            format!("holds on all {} instances", instances.len())
        } else {
            format!("violated by: {}", failures.join(", "))
        },
        verdict: if failures.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        note: None,
    });
    Ok(())
}

/// Overall pass: every item passes outright or via the documented
/// ambiguity whitelist.
pub fn overall_pass(items: &[VerificationItem]) -> bool {
    items.iter().all(|i| i.verdict != Verdict::Fail)
}

pub fn to_json(items: &[VerificationItem]) -> Result<String> {
    Ok(serde_json::to_string_pretty(items)?)
}

pub fn to_markdown(items: &[VerificationItem]) -> String {
    let mut out = String::from("| id | claimed | computed | verdict |\n|---|---|---|---|\n");
    for item in items {
        let verdict = match item.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::PassUpToDocumentedAmbiguity => "pass (documented ambiguity)",
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            item.id, item.claimed, item.computed, verdict
        ));
    }
    let fails = items.iter().filter(|i| i.verdict == Verdict::Fail).count();
    let ambiguous = items
        .iter()
        .filter(|i| i.verdict == Verdict::PassUpToDocumentedAmbiguity)
        .count();
    out.push_str(&format!(
        "\n{} items, {} failed, {} passed up to documented ambiguity.\n",
        items.len(),
        fails,
        ambiguous
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_paper_is_deterministic_and_complete() {
        let a = verify_paper().unwrap();
        let b = verify_paper().unwrap();
        assert_eq!(to_json(&a).unwrap(), to_json(&b).unwrap());
        assert!(a.len() > 60);
        // Exactly one whitelisted ambiguity and exactly one documented
        // failure (the off-by-one s entry of the prism-over-HS3 row).
        let ambiguous: Vec<&str> = a
            .iter()
            .filter(|i| i.verdict == Verdict::PassUpToDocumentedAmbiguity)
            .map(|i| i.id.as_str())
            .collect();
        assert_eq!(ambiguous, vec!["table3.P4.fvec"]);
        let failed: Vec<&str> = a
            .iter()
            .filter(|i| i.verdict == Verdict::Fail)
            .map(|i| i.id.as_str())
            .collect();
        assert_eq!(failed, vec!["ex5.3.prismHS3.s"]);
        assert!(!overall_pass(&a));
        let md = to_markdown(&a);
        assert!(md.contains("table3.P4.fvec"));
    }
}
