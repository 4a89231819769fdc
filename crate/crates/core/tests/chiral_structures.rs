//! End-to-end checks of the weak-structure kernel: the span fixture and
//! strict lifts pass every axiom, the calibration counts agree with an
//! independent recount, injected faults are caught by the right law with a
//! usable witness, and the morphism/square calculus composes soundly.

use std::collections::BTreeMap;

use mcat_core::chiral::{
    collapse_endomorphism, compose_pmorphisms, compose_pqcubes, degenerate_pqcube_p,
    degenerate_pqcube_q, enumerate_identity_cubes, identity_pmorphism, lift_strict,
    pmorphism_content_eq, pqcube_content_eq, shift_endomorphism, span_fixture,
    swap_endomorphism, unitor_cube, validate_chiral, validate_pmorphism, validate_pqcube,
    validate_pqmap, validate_pqrcube, ChiralMC, CubeAxis, GeomComp, LevelMap, PQMap, PQRCube,
    TvArrow, TvCat,
};
use mcat_core::fixtures::{fix3, sigma_two_z2};
use mcat_core::index::MultiIndex;
use mcat_core::quintets::build_q;
use mcat_core::report::{CheckMethod, CheckStatus, ValidationReport};

fn failure_digest(rep: &ValidationReport) -> String {
    rep.failures()
        .iter()
        .map(|r| format!("{}: {:?}", r.name, r.witness))
        .collect::<Vec<_>>()
        .join("\n")
}

fn record<'r>(rep: &'r ValidationReport, name: &str) -> &'r mcat_core::report::CheckRecord {
    rep.checks
        .iter()
        .find(|r| r.name == name)
        .unwrap_or_else(|| panic!("no record named {name}"))
}

fn sigma_lift() -> ChiralMC {
    lift_strict(&build_q(&sigma_two_z2(), 3).unwrap(), 2).unwrap()
}

// ---------------------------------------------------------------------------
// Independent recount of the span-fixture calibration numbers.
//
// Everything here is recomputed from scratch over the two-element universe:
// subsets are masks, a partial function is a map from elements of its domain,
// and a span is a pair of injections out of a common middle.  No code from
// the fixture construction is reused.
// ---------------------------------------------------------------------------

type Fun = BTreeMap<u8, u8>;

fn elements(mask: u8) -> Vec<u8> {
    (1..=2).filter(|e| mask & (1 << (e - 1)) != 0).collect()
}

fn all_functions(dom: u8, cod: u8) -> Vec<Fun> {
    let mut out = vec![Fun::new()];
    for e in elements(dom) {
        let mut next = Vec::new();
        for f in &out {
            for v in elements(cod) {
                let mut g = f.clone();
                g.insert(e, v);
                next.push(g);
            }
        }
        out = next;
        if out.is_empty() {
            return out;
        }
    }
    out
}

fn is_injective(f: &Fun) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    f.values().all(|v| seen.insert(*v))
}

fn compose_fun(first: &Fun, then: &Fun) -> Fun {
    first.iter().map(|(&x, &y)| (x, then[&y])).collect()
}

#[derive(Clone, Debug, PartialEq)]
struct RawSpan {
    src: u8,
    mid: u8,
    tgt: u8,
    f: Fun,
    g: Fun,
}

fn all_spans() -> Vec<RawSpan> {
    let mut out = Vec::new();
    for src in 0..4u8 {
        for mid in 0..4u8 {
            for tgt in 0..4u8 {
                for f in all_functions(mid, src).into_iter().filter(is_injective) {
                    for g in all_functions(mid, tgt).into_iter().filter(|g| is_injective(g)) {
                        out.push(RawSpan {
                            src,
                            mid,
                            tgt,
                            f: f.clone(),
                            g,
                        });
                    }
                }
            }
        }
    }
    out
}

#[test]
fn span_counts_match_independent_recount() {
    let spans = all_spans();
    assert_eq!(spans.len(), 52, "span census");

    // Transversal maps: all triples (h, k, l) making both squares commute.
    let mut maps = 0u64;
    let mut outdeg = vec![0u64; spans.len()];
    let mut indeg = vec![0u64; spans.len()];
    for (xi, x) in spans.iter().enumerate() {
        for (yi, y) in spans.iter().enumerate() {
            for h in all_functions(x.src, y.src) {
                for l in all_functions(x.tgt, y.tgt) {
                    for k in all_functions(x.mid, y.mid) {
                        if compose_fun(&k, &y.f) == compose_fun(&x.f, &h)
                            && compose_fun(&k, &y.g) == compose_fun(&x.g, &l)
                        {
                            maps += 1;
                            outdeg[xi] += 1;
                            indeg[yi] += 1;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(maps, 4368, "transversal map census");

    // Composable transversal pairs: middle span matched.
    let chained: u64 = (0..spans.len()).map(|i| outdeg[i] * indeg[i]).sum();
    assert_eq!(chained, 343_312, "transversal composition table size");

    // Span concatenation: every pair with matching feet composes (the
    // pullback of two injections always exists), so chains are counted by
    // feet alone.
    let pairs = spans
        .iter()
        .flat_map(|x| spans.iter().filter(move |y| x.tgt == y.src))
        .count() as u64;
    assert_eq!(pairs, 880, "composable span pairs");

    let mut triples = 0u64;
    let mut quads = 0u64;
    let mut by_feet = BTreeMap::<(u8, u8), u64>::new();
    for s in &spans {
        *by_feet.entry((s.src, s.tgt)).or_default() += 1;
    }
    for (&(_a, b), &n1) in &by_feet {
        for (&(b2, c), &n2) in &by_feet {
            if b != b2 {
                continue;
            }
            for (&(c2, d), &n3) in &by_feet {
                if c != c2 {
                    continue;
                }
                triples += n1 * n2 * n3;
                for (&(d2, _), &n4) in &by_feet {
                    if d == d2 {
                        quads += n1 * n2 * n3 * n4;
                    }
                }
            }
        }
    }
    assert_eq!(triples, 15_376, "associator instances");
    assert_eq!(quads, 269_632, "pentagon instances");

    // The fixture must agree with the recount.
    let a = span_fixture();
    let i1 = MultiIndex::single(1);
    let lv = &a.levels[&i1];
    assert_eq!(lv.n_cubes(), 52);
    assert_eq!(lv.n_arrows(), 4368);
    assert_eq!(lv.comp.len(), 343_312);
    assert_eq!(a.comps[&(i1.clone(), 1)].cubes.len(), 880);
    assert_eq!(a.associators[&(i1.clone(), 1)].len(), 15_376);
}

// ---------------------------------------------------------------------------
// Full validation of the fixtures.
// ---------------------------------------------------------------------------

#[test]
fn weak_span_fixture_passes_every_axiom() {
    let a = span_fixture();
    let rep = validate_chiral(a);
    assert!(rep.passed(), "span fixture failed:\n{}", failure_digest(&rep));

    // The big levels are boundary-determined, so the heavy laws must have
    // been discharged by reduction rather than enumeration.
    let assoc = record(&rep, "tv{1}/cat/assoc");
    assert_eq!(assoc.method, CheckMethod::FacewiseReduction);
    let inter = record(&rep, "tv{1}/plus1/interchange0");
    assert_eq!(inter.method, CheckMethod::FacewiseReduction);

    // The transversal category over the empty index is not thin, so its
    // associativity must have been checked instance by instance.
    let base_assoc = record(&rep, "tv{}/cat/assoc");
    assert_eq!(base_assoc.method, CheckMethod::Exhaustive);

    // Coherence is never reduced, and its instance counts are frozen.
    let pentagon = record(&rep, "tv{1}/assoc1/pentagon");
    assert_eq!(pentagon.method, CheckMethod::Exhaustive);
    assert_eq!(pentagon.instances, 269_632);
    let cells = record(&rep, "tv{1}/assoc1/cells");
    assert_eq!(cells.instances, 15_376);
}

#[test]
fn strict_lifts_pass_every_axiom() {
    for (name, m) in [
        ("fix3", build_q(&fix3(), 3).unwrap()),
        ("sigma", build_q(&sigma_two_z2(), 3).unwrap()),
    ] {
        let a = lift_strict(&m, 2).unwrap();
        let rep = validate_chiral(&a);
        assert!(
            rep.passed(),
            "lift of {name} failed:\n{}",
            failure_digest(&rep)
        );
    }
}

// ---------------------------------------------------------------------------
// Fault injection: each corruption must be caught by the matching law,
// with the shallow checks for that family still passing.
// ---------------------------------------------------------------------------

/// The nonidentity transversal endo-arrow at the unique cube of level
/// `{1}` in the lift of the one-object group example (the nontrivial
/// deck 2-cell).  It is special — both its faces are identities — so it
/// can replace a comparison cell without breaking any shape law.
fn nonidentity_special(a: &ChiralMC) -> u32 {
    let i1 = MultiIndex::single(1);
    let lv = &a.levels[&i1];
    (0..lv.n_arrows())
        .find(|&f| lv.src(f) == 0 && lv.tgt(f) == 0 && f != lv.ids[0])
        .expect("the group lift has a nonidentity endo-arrow")
}

#[test]
fn corrupted_associator_is_caught_by_the_pentagon() {
    let mut a = sigma_lift();
    let alpha = nonidentity_special(&a);
    let i1 = MultiIndex::single(1);
    let table = a.associators.get_mut(&(i1, 1)).unwrap();
    let key = *table.keys().next().unwrap();
    table.insert(key, alpha);

    let rep = validate_chiral(&a);
    assert!(!rep.passed());
    // The tampered cell is still a special invertible arrow with the right
    // boundary, so the cell-level checks accept it...
    assert_eq!(record(&rep, "tv{1}/assoc1/cells").status, CheckStatus::Pass);
    // ...and only the coherence equation exposes it.
    let pent = record(&rep, "tv{1}/assoc1/pentagon");
    assert_eq!(pent.status, CheckStatus::Fail);
    assert!(!pent.witness.is_empty(), "pentagon failure must carry a witness");
}

#[test]
fn corrupted_unitor_is_caught_by_the_triangle() {
    let mut a = sigma_lift();
    let alpha = nonidentity_special(&a);
    let i1 = MultiIndex::single(1);
    a.lunitors.get_mut(&(i1, 1)).unwrap()[0] = alpha;

    let rep = validate_chiral(&a);
    assert!(!rep.passed());
    assert_eq!(
        record(&rep, "tv{1}/unitor-l1/cells").status,
        CheckStatus::Pass
    );
    let tri = record(&rep, "tv{1}/unitors1/triangle");
    assert_eq!(tri.status, CheckStatus::Fail);
    assert!(!tri.witness.is_empty());
}

#[test]
fn corrupted_interchanger_is_reported_with_a_witness() {
    let mut a = sigma_lift();
    let i12 = MultiIndex::new(vec![1, 2]);

    // Replace one interchanger entry by a parallel but different arrow.  In
    // a lift every arrow is determined by its boundary, so the replacement
    // necessarily has nonidentity geometric faces and the interchanger
    // checks — speciality first — must notice, each with a witness.
    let (key, old) = a.interchangers[&(i12.clone(), 1, 2)]
        .iter()
        .map(|(k, v)| (*k, *v))
        .next()
        .expect("an interchanger entry");
    let lv = &a.levels[&i12];
    let ends = (lv.src(old), lv.tgt(old));
    let alt = lv.hom_buckets()[&ends]
        .iter()
        .copied()
        .find(|&f| f != old)
        .expect("a parallel alternative arrow");
    a.interchangers.get_mut(&(i12.clone(), 1, 2)).unwrap().insert(key, alt);

    let rep = validate_chiral(&a);
    assert!(!rep.passed());
    let failing: Vec<_> = rep
        .failures()
        .iter()
        .map(|r| r.name.clone())
        .collect();
    assert!(
        failing.iter().all(|n| n.contains("inter12")),
        "only interchange laws should fail, got {failing:?}"
    );
    assert!(
        rep.failures().iter().all(|r| !r.witness.is_empty()),
        "interchange failures must carry witnesses"
    );
}

// ---------------------------------------------------------------------------
// Morphisms of weak structures.
// ---------------------------------------------------------------------------

#[test]
fn shift_endomorphisms_validate_in_both_laxity_classes() {
    let a = span_fixture();
    for p in [1u8, 2] {
        let r = shift_endomorphism(p);
        let rep = validate_pmorphism(&r, a, a);
        assert!(
            rep.passed(),
            "shift of class {p} failed:\n{}",
            failure_digest(&rep)
        );
    }
    // The two classes orient the comparisons differently, so the morphisms
    // differ as data even though the underlying maps agree.
    assert!(!pmorphism_content_eq(
        &shift_endomorphism(1),
        &shift_endomorphism(2),
        a,
    ));
}

#[test]
fn strict_and_collapsing_endomorphisms_validate_and_compose() {
    let a = span_fixture();
    let swap = swap_endomorphism(1);
    let collapse = collapse_endomorphism(1);
    let shift = shift_endomorphism(1);

    for r in [&swap, &collapse, &shift] {
        let rep = validate_pmorphism(r, a, a);
        assert!(rep.passed(), "{} failed:\n{}", r.name, failure_digest(&rep));
    }

    // Identities collapse silently.
    let id = identity_pmorphism(a, 1);
    let same = compose_pmorphisms(&shift, &id, a).unwrap();
    assert!(pmorphism_content_eq(&same, &shift, a));
    let same = compose_pmorphisms(&id, &shift, a).unwrap();
    assert!(pmorphism_content_eq(&same, &shift, a));

    // A genuinely lax composite still validates.
    let both = compose_pmorphisms(&shift, &swap, a).unwrap();
    let rep = validate_pmorphism(&both, a, a);
    assert!(rep.passed(), "composite failed:\n{}", failure_digest(&rep));

    // Associativity of morphism composition, on content.
    let left = compose_pmorphisms(&compose_pmorphisms(&shift, &swap, a).unwrap(), &collapse, a)
        .unwrap();
    let right = compose_pmorphisms(&shift, &compose_pmorphisms(&swap, &collapse, a).unwrap(), a)
        .unwrap();
    assert!(pmorphism_content_eq(&left, &right, a));
}

// ---------------------------------------------------------------------------
// Squares between morphisms.
// ---------------------------------------------------------------------------

#[test]
fn unitor_square_is_valid_and_component_tampering_is_caught() {
    let a = span_fixture();
    let (cube, pool) = unitor_cube(1, 2);
    let rep = validate_pqcube(&cube, &pool, a);
    assert!(rep.passed(), "unitor square failed:\n{}", failure_digest(&rep));

    // The square is not degenerate: some component is a nonidentity arrow.
    let i1 = MultiIndex::single(1);
    let lv = &a.levels[&i1];
    assert!(cube.components[&i1]
        .iter()
        .enumerate()
        .any(|(x, &f)| f != lv.ids[x]));

    // Tampering with one component breaks a cell law with a witness.
    let mut bad = cube.clone();
    let slot = bad.components.get_mut(&i1).unwrap();
    let old = slot[0];
    slot[0] = (0..lv.n_arrows()).find(|&f| f != old).unwrap();
    let rep = validate_pqcube(&bad, &pool, a);
    assert!(!rep.passed());
    assert!(rep.failures().iter().all(|r| !r.witness.is_empty()));
}

#[test]
fn identity_squares_compose_and_degenerates_are_units() {
    // In a strict lift every arrow is pinned by its geometric boundary, so
    // the only square with identity sides is the fully degenerate one.
    let a = sigma_lift();
    let cubes = enumerate_identity_cubes(&a, 1, 2, 8);
    assert_eq!(
        cubes.len(),
        1,
        "a strict lift admits exactly the degenerate identity-sided square"
    );
    let mut pool = BTreeMap::new();
    for p in [1u8, 2] {
        let m = identity_pmorphism(&a, p);
        pool.insert(m.name.clone(), m);
    }
    let rep = validate_pqcube(&cubes[0], &pool, &a);
    assert!(rep.passed(), "degenerate square failed:\n{}", failure_digest(&rep));

    // Unit laws on a genuinely nontrivial square, over the span structure.
    let b = span_fixture();
    let (c, mut spool) = unitor_cube(1, 2);
    let up_l = degenerate_pqcube_p(&spool["id/p2"], 1, b);
    let up_r = degenerate_pqcube_p(&spool["shift/p2"], 1, b);
    let uq = degenerate_pqcube_q(&spool["id/p1"], 2, b);
    let left = compose_pqcubes(CubeAxis::AlongP, &up_l, &c, &mut spool, b).unwrap();
    assert!(pqcube_content_eq(&left, &c), "left unit along the class-1 axis");
    let right = compose_pqcubes(CubeAxis::AlongP, &c, &up_r, &mut spool, b).unwrap();
    assert!(pqcube_content_eq(&right, &c), "right unit along the class-1 axis");
    let left = compose_pqcubes(CubeAxis::AlongQ, &uq, &c, &mut spool, b).unwrap();
    assert!(pqcube_content_eq(&left, &c), "left unit along the class-2 axis");
    let right = compose_pqcubes(CubeAxis::AlongQ, &c, &uq, &mut spool, b).unwrap();
    assert!(pqcube_content_eq(&right, &c), "right unit along the class-2 axis");

    // A nontrivial self-composite stays valid, including the freshly
    // composed side morphism it adds to the pool.
    let z = compose_pqcubes(CubeAxis::AlongQ, &c, &c, &mut spool, b).unwrap();
    let rep = validate_pqcube(&z, &spool, b);
    assert!(rep.passed(), "self-composite failed:\n{}", failure_digest(&rep));
}

#[test]
fn square_maps_check_their_corner_squares() {
    let a = span_fixture();
    let (cube, mut pool) = unitor_cube(1, 2);
    let mut cubes = BTreeMap::new();
    cubes.insert(cube.name.clone(), cube.clone());

    for p in [1u8, 2] {
        let m = identity_pmorphism(a, p);
        pool.insert(m.name.clone(), m);
    }
    let swap = swap_endomorphism(1);
    pool.insert(swap.name.clone(), swap);

    let m = PQMap {
        name: "identity-map".into(),
        src: cube.name.clone(),
        tgt: cube.name.clone(),
        corners: [
            "id/p1".into(),
            "id/p1".into(),
            "id/p1".into(),
            "id/p1".into(),
        ],
    };
    let rep = validate_pqmap(&m, &cubes, &pool, a);
    assert!(rep.passed(), "identity map failed:\n{}", failure_digest(&rep));

    // A nonmatching corner breaks the commuting-square condition.
    let m = PQMap {
        name: "broken-map".into(),
        src: cube.name.clone(),
        tgt: cube.name,
        corners: [
            "swap/p1".into(),
            "id/p1".into(),
            "id/p1".into(),
            "id/p1".into(),
        ],
    };
    let rep = validate_pqmap(&m, &cubes, &pool, a);
    assert!(!rep.passed());
    assert!(rep
        .failures()
        .iter()
        .any(|r| r.name == "map/sides" && !r.witness.is_empty()));
}

// ---------------------------------------------------------------------------
// Three-class cubes over the span structure.  Laxity classes run up to
// degree + 1 = 3; the top class is colax in every positive direction.
// ---------------------------------------------------------------------------

#[test]
fn three_class_cubes_commute_and_detect_tampering() {
    let a = span_fixture();

    let (phi0, mut pool) = unitor_cube(1, 2);
    for p in 1..=3u8 {
        let m = identity_pmorphism(a, p);
        pool.entry(m.name.clone()).or_insert(m);
    }

    // Fully degenerate cube: six identity squares, everything commutes on
    // the nose.
    let mut f12 = degenerate_pqcube_p(&pool["id/p2"], 1, a);
    f12.name = "ident-12".into();
    let mut f13 = degenerate_pqcube_p(&pool["id/p3"], 1, a);
    f13.name = "ident-13".into();
    let mut f23 = degenerate_pqcube_p(&pool["id/p3"], 2, a);
    f23.name = "ident-23".into();
    let mut cubes = BTreeMap::new();
    for c in [&phi0, &f12, &f13, &f23] {
        cubes.insert(c.name.clone(), c.clone());
        let rep = validate_pqcube(c, &pool, a);
        assert!(rep.passed(), "{} failed:\n{}", c.name, failure_digest(&rep));
    }

    let trivial = PQRCube {
        name: "degenerate-3cube".into(),
        p: 1,
        q: 2,
        r: 3,
        p_face: [f23.name.clone(), f23.name.clone()],
        q_face: [f13.name.clone(), f13.name.clone()],
        r_face: [f12.name.clone(), f12.name.clone()],
    };
    let rep = validate_pqrcube(&trivial, &cubes, &pool, a);
    assert!(rep.passed(), "3-cube failed:\n{}", failure_digest(&rep));

    // Nontrivial cube: the unitor square extended degenerately in the
    // class-3 direction.  Its top faces carry genuinely nonidentity
    // components.
    let i1 = MultiIndex::single(1);
    let lv1 = &a.levels[&i1];
    assert!(
        phi0.components[&i1].iter().any(|f| !lv1.ids.contains(f)),
        "unitor square should have nonidentity components"
    );
    let pi = degenerate_pqcube_q(&pool["id/p1"], 3, a);
    let omega = degenerate_pqcube_q(&pool["id/p2"], 3, a);
    let zeta = degenerate_pqcube_q(&pool["shift/p2"], 3, a);
    for c in [&pi, &omega, &zeta] {
        cubes.insert(c.name.clone(), c.clone());
        let rep = validate_pqcube(c, &pool, a);
        assert!(rep.passed(), "{} failed:\n{}", c.name, failure_digest(&rep));
    }
    let eta = PQRCube {
        name: "unitor-3cube".into(),
        p: 1,
        q: 2,
        r: 3,
        p_face: [omega.name.clone(), zeta.name.clone()],
        q_face: [pi.name.clone(), pi.name.clone()],
        r_face: [phi0.name.clone(), phi0.name.clone()],
    };
    let rep = validate_pqrcube(&eta, &cubes, &pool, a);
    assert!(rep.passed(), "unitor 3-cube failed:\n{}", failure_digest(&rep));

    // Perturb a single component of the ζ face by a parallel but different
    // arrow: every edge equation still holds, so the failure must be the
    // two-path commutation law, with a witness naming the cube.
    let mut caught = None;
    'search: for idx in a.positive_indices() {
        let lv = &a.levels[&idx];
        let buckets = lv.hom_buckets();
        for (x, &f) in zeta.components[&idx].iter().enumerate() {
            for &alt in &buckets[&(lv.src(f), lv.tgt(f))] {
                if alt == f {
                    continue;
                }
                let mut tampered = zeta.clone();
                tampered.name = "tampered-face".into();
                tampered.components.get_mut(&idx).unwrap()[x] = alt;
                let mut cubes2 = cubes.clone();
                cubes2.insert(tampered.name.clone(), tampered);
                let bad = PQRCube {
                    name: "tampered-3cube".into(),
                    p: 1,
                    q: 2,
                    r: 3,
                    p_face: [omega.name.clone(), "tampered-face".into()],
                    q_face: [pi.name.clone(), pi.name.clone()],
                    r_face: [phi0.name.clone(), phi0.name.clone()],
                };
                let rep = validate_pqrcube(&bad, &cubes2, &pool, a);
                if !rep.passed() {
                    caught = Some(rep);
                    break 'search;
                }
            }
        }
    }
    let rep = caught.expect("no single-component perturbation was detected");
    let commute = record(&rep, "cube3/commute");
    assert_eq!(commute.status, CheckStatus::Fail);
    assert!(!commute.witness.is_empty());
    assert_eq!(record(&rep, "cube3/edges").status, CheckStatus::Pass);
}

// ---------------------------------------------------------------------------
// Degree-3 validator coverage on the terminal structure.
// ---------------------------------------------------------------------------

/// One cube and one arrow in every level of degree three: all tables are
/// singletons and every comparison is the identity.  The full validator,
/// including all three interchanger pairs at the top level, accepts it.
#[test]
fn terminal_degree_three_structure_validates() {
    let mut levels = BTreeMap::new();
    let mut faces = BTreeMap::new();
    let mut degens = BTreeMap::new();
    let mut comps = BTreeMap::new();
    let mut lunitors = BTreeMap::new();
    let mut runitors = BTreeMap::new();
    let mut associators = BTreeMap::new();
    let mut interchangers = BTreeMap::new();
    for idx in MultiIndex::new(vec![1, 2, 3]).subsets() {
        levels.insert(
            idx.clone(),
            TvCat {
                cubes: vec!["*".into()],
                arrows: vec![TvArrow { name: "1".into(), src: 0, tgt: 0 }],
                ids: vec![0],
                comp: BTreeMap::from([((0, 0), 0)]),
            },
        );
        let lm = || LevelMap { on_cubes: vec![0], on_arrows: vec![0] };
        for &i in idx.dirs() {
            faces.insert((idx.clone(), i), [lm(), lm()]);
            degens.insert((idx.clone(), i), lm());
            comps.insert(
                (idx.clone(), i),
                GeomComp {
                    cubes: BTreeMap::from([((0, 0), 0)]),
                    arrows: BTreeMap::from([((0, 0), 0)]),
                },
            );
            lunitors.insert((idx.clone(), i), vec![0]);
            runitors.insert((idx.clone(), i), vec![0]);
            associators.insert((idx.clone(), i), BTreeMap::from([((0, 0, 0), 0)]));
            for &j in idx.dirs() {
                if i < j {
                    interchangers
                        .insert((idx.clone(), i, j), BTreeMap::from([((0, 0, 0, 0), 0)]));
                }
            }
        }
    }
    let a = ChiralMC {
        name: "terminal3".into(),
        degree: 3,
        levels,
        faces,
        degens,
        comps,
        lunitors,
        runitors,
        associators,
        interchangers,
        invertible_interchangers: true,
    };
    let rep = validate_chiral(&a);
    assert!(rep.passed(), "terminal degree-3 failed:\n{}", failure_digest(&rep));
    for pair in ["12", "13", "23"] {
        record(&rep, &format!("tv{{1,2,3}}/inter{pair}/hexagon-outer"));
    }
}
