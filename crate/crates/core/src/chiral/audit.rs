//! Composition audit for squares of mixed laxity.
//!
//! Starting from identities plus user-supplied seed morphisms and squares,
//! this builds a pool per pair of laxity classes, closes it under both
//! square compositions for a few rounds, validates every morphism and
//! composite square produced, and spot-checks the algebra: middle-four
//! interchange on 2×2 matrices, unit laws against degenerate squares, and
//! associativity along both axes.  Everything is deterministic; the only
//! knobs are the budget caps.

use std::collections::{BTreeMap, BTreeSet};

use super::cells::{
    compose_pqcubes, composite_side_name, degenerate_pqcube_p, degenerate_pqcube_q,
    enumerate_identity_cubes, pqcube_content_eq, validate_pqcube, CubeAxis, PQCube,
};
use super::morphisms::{identity_pmorphism, validate_pmorphism, PMorphism};
use super::*;
use crate::report::{CheckMethod, ValidationReport, MAX_WITNESSES};

/// Budget caps for the audit.
#[derive(Clone, Debug)]
pub struct AuditOptions {
    /// Most squares tracked per pair of laxity classes.
    pub max_cubes: usize,
    /// Most square pairs composed over the whole audit.
    pub max_pairs: u64,
    /// Most 2×2 interchange matrices checked over the whole audit.
    pub max_matrices: u64,
    /// Closure rounds per pair of classes.
    pub rounds: usize,
    /// Most pooled morphisms (identities, seeds, and side composites).
    pub max_morphisms: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            max_cubes: 64,
            max_pairs: 100_000,
            max_matrices: 10_000,
            rounds: 2,
            max_morphisms: 24,
        }
    }
}

/// What the audit did and found.
#[derive(Debug)]
pub struct AuditOutcome {
    pub report: ValidationReport,
    /// Successful square compositions (including repeats across rounds).
    pub pairs_composed: u64,
    /// 2×2 matrices whose two evaluation orders were compared.
    pub matrices_checked: u64,
    /// Associativity triples compared along the two axes.
    pub associativity_triples: u64,
    /// Unit-law instances compared against degenerate squares.
    pub unit_instances: u64,
}

struct Wit(Vec<String>);

impl Wit {
    fn new() -> Wit {
        Wit(Vec::new())
    }

    fn push(&mut self, s: String) {
        if self.0.len() < MAX_WITNESSES {
            self.0.push(s);
        }
    }

    fn take(self) -> Vec<String> {
        self.0
    }
}

fn first_failure(rep: &ValidationReport) -> String {
    rep.failures()
        .first()
        .map(|r| r.name.clone())
        .unwrap_or_else(|| "unknown".into())
}

/// Validate pool morphisms not yet seen, aggregating failures.
fn sweep_morphisms(
    pool: &BTreeMap<String, PMorphism>,
    a: &ChiralMC,
    seen: &mut BTreeSet<String>,
    checked: &mut u64,
    wit: &mut Wit,
) {
    for (name, m) in pool {
        if !seen.insert(name.clone()) {
            continue;
        }
        *checked += 1;
        let rep = validate_pmorphism(m, a, a);
        if !rep.passed() {
            wit.push(format!("{name}: {}", first_failure(&rep)));
        }
    }
}

fn composable(axis: CubeAxis, x: &PQCube, y: &PQCube) -> bool {
    match axis {
        CubeAxis::AlongP => x.v == y.u,
        CubeAxis::AlongQ => x.s == y.r,
    }
}

/// The side-morphism pairs a composition along `axis` must merge.
fn side_pairs(axis: CubeAxis, x: &PQCube, y: &PQCube) -> [(String, String); 2] {
    match axis {
        CubeAxis::AlongP => [(x.r.clone(), y.r.clone()), (x.s.clone(), y.s.clone())],
        CubeAxis::AlongQ => [(x.u.clone(), y.u.clone()), (x.v.clone(), y.v.clone())],
    }
}

/// Count how many new pool entries composing along `axis` would create.
fn new_sides_needed(
    pool: &BTreeMap<String, PMorphism>,
    a: &ChiralMC,
    axis: CubeAxis,
    x: &PQCube,
    y: &PQCube,
) -> Result<usize> {
    let mut fresh = BTreeSet::new();
    for (n1, n2) in side_pairs(axis, x, y) {
        let (name, new) = composite_side_name(pool, a, &n1, &n2)?;
        if new {
            fresh.insert(name);
        }
    }
    Ok(fresh.len())
}

/// Run the full audit over one structure.
pub fn audit_cube_composition(
    a: &ChiralMC,
    seed_morphisms: &[PMorphism],
    seed_cubes: &[PQCube],
    opts: &AuditOptions,
) -> AuditOutcome {
    let mut rep = ValidationReport::new(format!("audit:{}", a.name));
    let mut pairs_composed = 0u64;
    let mut matrices_checked = 0u64;
    let mut associativity_triples = 0u64;
    let mut unit_instances = 0u64;

    // Morphism pool: identities of every class plus the seeds.  Classes run
    // to `degree + 1`: the top class is colax in every positive direction.
    let mut pool: BTreeMap<String, PMorphism> = BTreeMap::new();
    for p in 1..=a.degree.saturating_add(1) {
        let m = identity_pmorphism(a, p);
        pool.insert(m.name.clone(), m);
    }
    for m in seed_morphisms {
        pool.insert(m.name.clone(), m.clone());
    }

    let mut morph_seen: BTreeSet<String> = BTreeSet::new();
    let mut morph_checked = 0u64;
    let mut morph_wit = Wit::new();
    sweep_morphisms(&pool, a, &mut morph_seen, &mut morph_checked, &mut morph_wit);

    for p in 1..=a.degree {
        for q in (p + 1)..=a.degree.saturating_add(1) {
            audit_class(
                a,
                p,
                q,
                seed_cubes,
                opts,
                &mut pool,
                &mut morph_seen,
                &mut morph_checked,
                &mut morph_wit,
                &mut rep,
                &mut pairs_composed,
                &mut matrices_checked,
                &mut associativity_triples,
                &mut unit_instances,
            );
        }
    }

    rep.outcome(
        "pool/morphisms",
        "every pooled morphism (identities, seeds, side composites) passes validation",
        morph_checked,
        CheckMethod::Exhaustive,
        morph_wit.take(),
    );

    AuditOutcome {
        report: rep.finish(),
        pairs_composed,
        matrices_checked,
        associativity_triples,
        unit_instances,
    }
}

#[allow(clippy::too_many_arguments)]
fn audit_class(
    a: &ChiralMC,
    p: u8,
    q: u8,
    seed_cubes: &[PQCube],
    opts: &AuditOptions,
    pool: &mut BTreeMap<String, PMorphism>,
    morph_seen: &mut BTreeSet<String>,
    morph_checked: &mut u64,
    morph_wit: &mut Wit,
    rep: &mut ValidationReport,
    pairs_composed: &mut u64,
    matrices_checked: &mut u64,
    associativity_triples: &mut u64,
    unit_instances: &mut u64,
) {
    let tag = format!("(p{p},q{q})");

    // Assemble the starting squares: degenerates of every pooled morphism,
    // matching seeds, and identity-sided squares found by search.
    let mut cubes: BTreeMap<String, PQCube> = BTreeMap::new();
    let pool_now: Vec<PMorphism> = pool.values().cloned().collect();
    for m in &pool_now {
        if m.p == q {
            let c = degenerate_pqcube_p(m, p, a);
            cubes.insert(c.name.clone(), c);
        }
        if m.p == p {
            let c = degenerate_pqcube_q(m, q, a);
            cubes.insert(c.name.clone(), c);
        }
    }
    for c in seed_cubes {
        if (c.p, c.q) == (p, q) {
            cubes.insert(c.name.clone(), c.clone());
        }
    }
    for c in enumerate_identity_cubes(a, p, q, 8) {
        cubes.entry(c.name.clone()).or_insert(c);
    }
    while cubes.len() > opts.max_cubes {
        let last = cubes.keys().next_back().cloned().unwrap();
        cubes.remove(&last);
    }

    // Validate the starting squares.
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut validated = 0u64;
    let mut wit = Wit::new();
    for (name, c) in &cubes {
        seen.insert(name.clone());
        validated += 1;
        let r = validate_pqcube(c, pool, a);
        if !r.passed() {
            wit.push(format!("{name}: {}", first_failure(&r)));
        }
    }

    // Closure rounds: compose every composable ordered pair along both axes.
    let mut pair_wit = Wit::new();
    for _ in 0..opts.rounds {
        for axis in [CubeAxis::AlongP, CubeAxis::AlongQ] {
            let names: Vec<String> = cubes.keys().cloned().collect();
            let mut pending: Vec<PQCube> = Vec::new();
            for n1 in &names {
                for n2 in &names {
                    if *pairs_composed >= opts.max_pairs {
                        break;
                    }
                    let (x, y) = (&cubes[n1], &cubes[n2]);
                    if !composable(axis, x, y) {
                        continue;
                    }
                    match new_sides_needed(pool, a, axis, x, y) {
                        Ok(n) if pool.len() + n <= opts.max_morphisms => {}
                        Ok(_) => continue,
                        Err(e) => {
                            pair_wit.push(format!("{n1} with {n2}: {e}"));
                            continue;
                        }
                    }
                    match compose_pqcubes(axis, x, y, pool, a) {
                        Ok(z) => {
                            *pairs_composed += 1;
                            pending.push(z);
                        }
                        Err(e) => pair_wit.push(format!("{n1} with {n2}: {e}")),
                    }
                }
            }
            sweep_morphisms(pool, a, morph_seen, morph_checked, morph_wit);
            for z in pending {
                if seen.insert(z.name.clone()) {
                    validated += 1;
                    let r = validate_pqcube(&z, pool, a);
                    if !r.passed() {
                        wit.push(format!("{}: {}", z.name, first_failure(&r)));
                    }
                }
                if cubes.len() < opts.max_cubes {
                    cubes.entry(z.name.clone()).or_insert(z);
                }
            }
        }
    }
    rep.outcome(
        format!("cubes{tag}/validated"),
        "every seed, degenerate, and composite square passes validation",
        validated,
        CheckMethod::Exhaustive,
        wit.take(),
    );
    rep.outcome(
        format!("cubes{tag}/pairs"),
        "every composable pair of squares composes without error",
        *pairs_composed,
        CheckMethod::Exhaustive,
        pair_wit.take(),
    );

    // From here on composition may mint side morphisms freely in a scratch
    // pool; squares built over it are only compared, never pooled.
    let mut scratch = pool.clone();

    // Middle-four interchange on 2×2 matrices.
    let names: Vec<String> = cubes.keys().cloned().collect();
    let mut by_u: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    let mut by_r: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for n in &names {
        by_u.entry(cubes[n].u.as_str()).or_default().push(n);
        by_r.entry(cubes[n].r.as_str()).or_default().push(n);
    }
    let mut wit = Wit::new();
    let empty: Vec<&str> = Vec::new();
    'matrices: for nphi in &names {
        let phi = &cubes[nphi];
        for npsi in by_u.get(phi.v.as_str()).unwrap_or(&empty) {
            let psi = &cubes[*npsi];
            for nsig in by_r.get(phi.s.as_str()).unwrap_or(&empty) {
                let sig = &cubes[*nsig];
                for ntau in by_u.get(psi.v.as_str()).unwrap_or(&empty) {
                    let tau = &cubes[*ntau];
                    if tau.r != sig.s {
                        continue;
                    }
                    if *matrices_checked >= opts.max_matrices {
                        break 'matrices;
                    }
                    let res = (|| -> Result<bool> {
                        let row1 = compose_pqcubes(CubeAxis::AlongP, phi, psi, &mut scratch, a)?;
                        let row2 = compose_pqcubes(CubeAxis::AlongP, sig, tau, &mut scratch, a)?;
                        let rows =
                            compose_pqcubes(CubeAxis::AlongQ, &row1, &row2, &mut scratch, a)?;
                        let col1 = compose_pqcubes(CubeAxis::AlongQ, phi, sig, &mut scratch, a)?;
                        let col2 = compose_pqcubes(CubeAxis::AlongQ, psi, tau, &mut scratch, a)?;
                        let cols =
                            compose_pqcubes(CubeAxis::AlongP, &col1, &col2, &mut scratch, a)?;
                        Ok(pqcube_content_eq(&rows, &cols))
                    })();
                    *matrices_checked += 1;
                    match res {
                        Ok(true) => {}
                        Ok(false) => wit.push(format!(
                            "matrix [[{nphi},{npsi}],[{nsig},{ntau}]]: orders disagree"
                        )),
                        Err(e) => wit.push(format!(
                            "matrix [[{nphi},{npsi}],[{nsig},{ntau}]]: {e}"
                        )),
                    }
                }
            }
        }
    }
    rep.outcome(
        format!("cubes{tag}/middle-four"),
        "both evaluation orders of every 2×2 matrix of squares agree",
        *matrices_checked,
        CheckMethod::Exhaustive,
        wit.take(),
    );

    // Unit laws against degenerate squares.
    let mut wit = Wit::new();
    for n in &names {
        let c = &cubes[n];
        let checks: [(CubeAxis, PQCube, bool); 4] = [
            (CubeAxis::AlongP, degenerate_pqcube_p(&scratch[&c.u], p, a), true),
            (CubeAxis::AlongP, degenerate_pqcube_p(&scratch[&c.v], p, a), false),
            (CubeAxis::AlongQ, degenerate_pqcube_q(&scratch[&c.r], q, a), true),
            (CubeAxis::AlongQ, degenerate_pqcube_q(&scratch[&c.s], q, a), false),
        ];
        for (axis, deg, left) in checks {
            let got = if left {
                compose_pqcubes(axis, &deg, c, &mut scratch, a)
            } else {
                compose_pqcubes(axis, c, &deg, &mut scratch, a)
            };
            *unit_instances += 1;
            match got {
                Ok(z) if pqcube_content_eq(&z, c) => {}
                Ok(_) => wit.push(format!("{n}: composing with {} changes it", deg.name)),
                Err(e) => wit.push(format!("{n}: unit composition failed: {e}")),
            }
        }
    }
    rep.outcome(
        format!("cubes{tag}/units"),
        "degenerate squares are units for both compositions",
        *unit_instances,
        CheckMethod::Exhaustive,
        wit.take(),
    );

    // Associativity spot checks along both axes.
    let mut wit = Wit::new();
    let cap = 200u64;
    let mut done = 0u64;
    'assoc: for axis in [CubeAxis::AlongP, CubeAxis::AlongQ] {
        for n1 in &names {
            for n2 in &names {
                if !composable(axis, &cubes[n1], &cubes[n2]) {
                    continue;
                }
                for n3 in &names {
                    if !composable(axis, &cubes[n2], &cubes[n3]) {
                        continue;
                    }
                    if done >= cap {
                        break 'assoc;
                    }
                    done += 1;
                    let (x, y, z) = (&cubes[n1], &cubes[n2], &cubes[n3]);
                    let res = (|| -> Result<bool> {
                        let xy = compose_pqcubes(axis, x, y, &mut scratch, a)?;
                        let left = compose_pqcubes(axis, &xy, z, &mut scratch, a)?;
                        let yz = compose_pqcubes(axis, y, z, &mut scratch, a)?;
                        let right = compose_pqcubes(axis, x, &yz, &mut scratch, a)?;
                        Ok(pqcube_content_eq(&left, &right))
                    })();
                    match res {
                        Ok(true) => {}
                        Ok(false) => {
                            wit.push(format!("({n1}, {n2}, {n3}): associations disagree"))
                        }
                        Err(e) => wit.push(format!("({n1}, {n2}, {n3}): {e}")),
                    }
                }
            }
        }
    }
    *associativity_triples += done;
    rep.outcome(
        format!("cubes{tag}/assoc"),
        "square composition is associative along both axes",
        done,
        CheckMethod::Exhaustive,
        wit.take(),
    );
}
