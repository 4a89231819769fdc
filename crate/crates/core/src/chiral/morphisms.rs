//! Morphisms of chiral multiple categories with one-directional laxity.
//!
//! A morphism of laxity class `p` is transversally strict, preserves faces
//! and degeneracies of cubes on the nose, and preserves concatenations up
//! to special comparison arrows: covariantly (lax) in every direction
//! `i ≥ p` and contravariantly (colax) in every direction `i < p`.  The
//! comparisons must be natural and cohere with the unitors, associators
//! and interchangers of both structures.

use std::collections::{BTreeMap, BTreeSet};

use super::validate::level_determined;
use super::*;
use crate::report::{CheckMethod, ValidationReport, MAX_WITNESSES};

/// A structure morphism with laxity class `p`.
#[derive(Clone, Debug)]
pub struct PMorphism {
    pub name: String,
    /// Directions `i ≥ p` are lax, directions `i < p` are colax.
    pub p: u8,
    /// Per-level action on cubes and transversal arrows.
    pub components: BTreeMap<MultiIndex, LevelMap>,
    /// For `(𝐢, i)`: the unit comparison at each cube of level `𝐢∖i`,
    /// relating `e_i R(t)` and `R(e_i t)`.
    pub unit_cmp: BTreeMap<(MultiIndex, u8), Vec<u32>>,
    /// For `(𝐢, i)`: the concatenation comparison at each `i`-composable
    /// cube pair, relating `R(x) +_i R(y)` and `R(x +_i y)`.
    pub comp_cmp: BTreeMap<(MultiIndex, u8), BTreeMap<(u32, u32), u32>>,
}

impl PMorphism {
    pub fn cube(&self, idx: &MultiIndex, x: u32) -> u32 {
        self.components[idx].cube(x)
    }

    pub fn arrow(&self, idx: &MultiIndex, f: u32) -> u32 {
        self.components[idx].arrow(f)
    }

    fn lax_in(&self, i: u8) -> bool {
        i >= self.p
    }
}

/// The identity morphism at laxity class `p`.
pub fn identity_pmorphism(a: &ChiralMC, p: u8) -> PMorphism {
    let mut components = BTreeMap::new();
    let mut unit_cmp = BTreeMap::new();
    let mut comp_cmp = BTreeMap::new();
    for idx in a.positive_indices() {
        let lv = &a.levels[&idx];
        components.insert(idx.clone(), LevelMap::identity(lv));
        for &i in idx.dirs() {
            let d = &a.degens[&(idx.clone(), i)];
            let blv = &a.levels[&idx.without(i)];
            unit_cmp.insert(
                (idx.clone(), i),
                (0..blv.n_cubes()).map(|t| lv.ids[d.cube(t) as usize]).collect(),
            );
            comp_cmp.insert(
                (idx.clone(), i),
                a.comps[&(idx.clone(), i)]
                    .cubes
                    .iter()
                    .map(|(&(x, y), &z)| ((x, y), lv.ids[z as usize]))
                    .collect(),
            );
        }
    }
    PMorphism { name: format!("id/p{p}"), p, components, unit_cmp, comp_cmp }
}

/// Whether every component is an identity map and every comparison an
/// identity arrow.
pub fn is_identity_pmorphism(r: &PMorphism, a: &ChiralMC) -> bool {
    r.components.iter().all(|(_, m)| m.is_identity()) && is_strict_pmorphism(r, a)
}

/// Whether every comparison arrow is an identity.
pub fn is_strict_pmorphism(r: &PMorphism, b: &ChiralMC) -> bool {
    let id_arrow = |idx: &MultiIndex, f: u32| -> bool {
        let lv = &b.levels[idx];
        lv.src(f) == lv.tgt(f) && lv.ids[lv.src(f) as usize] == f
    };
    r.unit_cmp.iter().all(|((idx, _), v)| v.iter().all(|&f| id_arrow(idx, f)))
        && r.comp_cmp
            .iter()
            .all(|((idx, _), t)| t.values().all(|&f| id_arrow(idx, f)))
}

/// Equality of everything except the name.  The laxity class must agree
/// unless both morphisms are strict: a strict morphism belongs to every
/// class, so two strict morphisms with the same tables are the same
/// morphism regardless of the class they were tagged with.
pub fn pmorphism_content_eq(x: &PMorphism, y: &PMorphism, c: &ChiralMC) -> bool {
    x.components == y.components
        && x.unit_cmp == y.unit_cmp
        && x.comp_cmp == y.comp_cmp
        && (x.p == y.p || (is_strict_pmorphism(x, c) && is_strict_pmorphism(y, c)))
}

/// Compose two morphisms of equal laxity class diagrammatically (`r1`
/// first).  Both must land in (and the second act on) the same structure
/// `c` the composite is expressed in.
pub fn compose_pmorphisms(
    r1: &PMorphism,
    r2: &PMorphism,
    c: &ChiralMC,
) -> Result<PMorphism> {
    // A strict morphism has identity comparisons, so its laxity class is
    // immaterial; everything else must agree on the class.
    let p = if r1.p == r2.p {
        r1.p
    } else if is_strict_pmorphism(r1, c) {
        r2.p
    } else if is_strict_pmorphism(r2, c) {
        r1.p
    } else {
        return Err(KernelError::Malformed(format!(
            "cannot compose morphisms of laxity classes {} and {}",
            r1.p, r2.p
        )));
    };
    if is_identity_pmorphism(r1, c) {
        return Ok(r2.clone());
    }
    if is_identity_pmorphism(r2, c) {
        return Ok(r1.clone());
    }

    let mut components = BTreeMap::new();
    for (idx, m1) in &r1.components {
        let m2 = r2
            .components
            .get(idx)
            .ok_or_else(|| KernelError::MissingEntry(format!("component at {idx}")))?;
        components.insert(
            idx.clone(),
            LevelMap {
                on_cubes: m1.on_cubes.iter().map(|&x| m2.cube(x)).collect(),
                on_arrows: m1.on_arrows.iter().map(|&f| m2.arrow(f)).collect(),
            },
        );
    }

    let mut unit_cmp = BTreeMap::new();
    for ((idx, i), v1) in &r1.unit_cmp {
        let lv = &c.levels[idx];
        let v2 = &r2.unit_cmp[&(idx.clone(), *i)];
        let bidx = idx.without(*i);
        let mut out = Vec::with_capacity(v1.len());
        for (t, &u1) in v1.iter().enumerate() {
            let rt = r1.cube(&bidx, t as u32);
            let pushed = r2.arrow(idx, u1);
            let u2 = v2[rt as usize];
            let arrows = if r1.lax_in(*i) { [u2, pushed] } else { [pushed, u2] };
            out.push(lv.chain0(&arrows)?);
        }
        unit_cmp.insert((idx.clone(), *i), out);
    }

    let mut comp_cmp = BTreeMap::new();
    for ((idx, i), t1) in &r1.comp_cmp {
        let lv = &c.levels[idx];
        let t2 = &r2.comp_cmp[&(idx.clone(), *i)];
        let mut out = BTreeMap::new();
        for (&(x, y), &u1) in t1 {
            let key = (r1.cube(idx, x), r1.cube(idx, y));
            let u2 = *t2
                .get(&key)
                .ok_or_else(|| KernelError::MissingEntry(format!("comparison at {key:?}")))?;
            let pushed = r2.arrow(idx, u1);
            let arrows = if r1.lax_in(*i) { [u2, pushed] } else { [pushed, u2] };
            out.insert((x, y), lv.chain0(&arrows)?);
        }
        comp_cmp.insert((idx.clone(), *i), out);
    }

    Ok(PMorphism {
        name: format!("{}·{}", r1.name, r2.name),
        p,
        components,
        unit_cmp,
        comp_cmp,
    })
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

/// Check every morphism law of `r : a → b`.
pub fn validate_pmorphism(r: &PMorphism, a: &ChiralMC, b: &ChiralMC) -> ValidationReport {
    validate_pmorphism_with(r, a, b, &ChiralOptions::default())
}

/// Check every morphism law of `r : a → b` with explicit budgets.
pub fn validate_pmorphism_with(
    r: &PMorphism,
    a: &ChiralMC,
    b: &ChiralMC,
    opts: &ChiralOptions,
) -> ValidationReport {
    let mut rep = ValidationReport::new(format!("{}:{}", a.name, r.name));
    if !morphism_shapes(r, a, b, &mut rep) {
        return rep.finish();
    }
    let m = MCheck { r, a, b, opts };
    m.functors(&mut rep);
    m.faces(&mut rep);
    m.unit_comparisons(&mut rep);
    m.comp_comparisons(&mut rep);
    m.coherence(&mut rep);
    rep.finish()
}

fn morphism_shapes(
    r: &PMorphism,
    a: &ChiralMC,
    b: &ChiralMC,
    rep: &mut ValidationReport,
) -> bool {
    let mut bad = Wit::new();
    if a.degree != b.degree {
        bad.push("source and target have different degrees".into());
    }
    if r.p == 0 || r.p > a.degree.saturating_add(1) {
        bad.push(format!("laxity class {} out of range", r.p));
    }
    let expected: BTreeSet<MultiIndex> = a.positive_indices().into_iter().collect();
    for idx in &expected {
        let (alv, blv) = (&a.levels[idx], &b.levels[idx]);
        match r.components.get(idx) {
            None => bad.push(format!("missing component at {idx}")),
            Some(m) => {
                if m.on_cubes.len() != alv.n_cubes() as usize
                    || m.on_arrows.len() != alv.n_arrows() as usize
                {
                    bad.push(format!("component at {idx}: length mismatch"));
                } else if m.on_cubes.iter().any(|&v| v >= blv.n_cubes())
                    || m.on_arrows.iter().any(|&v| v >= blv.n_arrows())
                {
                    bad.push(format!("component at {idx}: value out of range"));
                }
            }
        }
        for &i in idx.dirs() {
            let bn = a.levels[&idx.without(i)].n_cubes();
            match r.unit_cmp.get(&(idx.clone(), i)) {
                None => bad.push(format!("missing unit comparison at ({idx},{i})")),
                Some(v) => {
                    if v.len() != bn as usize {
                        bad.push(format!("unit comparison at ({idx},{i}): length mismatch"));
                    } else if v.iter().any(|&f| f >= blv.n_arrows()) {
                        bad.push(format!("unit comparison at ({idx},{i}): value out of range"));
                    }
                }
            }
            match r.comp_cmp.get(&(idx.clone(), i)) {
                None => bad.push(format!("missing concatenation comparison at ({idx},{i})")),
                Some(t) => {
                    let keys: BTreeSet<(u32, u32)> = t.keys().copied().collect();
                    let expect: BTreeSet<(u32, u32)> =
                        a.comps[&(idx.clone(), i)].cubes.keys().copied().collect();
                    if keys != expect {
                        bad.push(format!(
                            "concatenation comparison at ({idx},{i}): keys do not match \
                             the composable pairs"
                        ));
                    }
                    if t.values().any(|&f| f >= blv.n_arrows()) {
                        bad.push(format!(
                            "concatenation comparison at ({idx},{i}): value out of range"
                        ));
                    }
                }
            }
        }
    }
    for (idx, _) in r.components.iter() {
        if !expected.contains(idx) {
            bad.push(format!("unexpected component at {idx}"));
        }
    }
    let ok = bad.0.is_empty();
    rep.outcome(
        "mor/shape",
        "components and comparisons are present with consistent lengths and in-range entries",
        expected.len() as u64,
        CheckMethod::Exhaustive,
        bad.take(),
    );
    ok
}

struct MCheck<'a> {
    r: &'a PMorphism,
    a: &'a ChiralMC,
    b: &'a ChiralMC,
    opts: &'a ChiralOptions,
}

impl<'a> MCheck<'a> {
    fn lax(&self, i: u8) -> bool {
        self.r.lax_in(i)
    }

    fn unit(&self, idx: &MultiIndex, i: u8, t: u32) -> u32 {
        self.r.unit_cmp[&(idx.clone(), i)][t as usize]
    }

    fn cmp(&self, idx: &MultiIndex, i: u8, x: u32, y: u32) -> Result<u32> {
        self.r.comp_cmp[&(idx.clone(), i)]
            .get(&(x, y))
            .copied()
            .ok_or_else(|| KernelError::MissingEntry(format!("comparison at ({x},{y})")))
    }

    fn functors(&self, rep: &mut ValidationReport) {
        for idx in self.a.positive_indices() {
            let alv = &self.a.levels[&idx];
            let blv = &self.b.levels[&idx];
            let m = &self.r.components[&idx];
            let mut bad = Wit::new();
            for f in 0..alv.n_arrows() {
                let mf = m.arrow(f);
                if blv.src(mf) != m.cube(alv.src(f)) || blv.tgt(mf) != m.cube(alv.tgt(f)) {
                    bad.push(format!("{idx}: endpoints of {} not respected", alv.arrow_label(f)));
                }
            }
            for x in 0..alv.n_cubes() {
                if m.arrow(alv.ids[x as usize]) != blv.ids[m.cube(x) as usize] {
                    bad.push(format!("{idx}: identity of {} not preserved", alv.cube_label(x)));
                }
            }
            for (&(f, g), &fg) in &alv.comp {
                if blv.comp.get(&(m.arrow(f), m.arrow(g))).copied() != Some(m.arrow(fg)) {
                    bad.push(format!(
                        "{idx}: composite of {} and {} not preserved",
                        alv.arrow_label(f),
                        alv.arrow_label(g)
                    ));
                }
            }
            rep.outcome(
                format!("mor/tv{idx}/functor"),
                "the component is a functor of transversal categories",
                alv.n_arrows() as u64 + alv.n_cubes() as u64 + alv.comp.len() as u64,
                CheckMethod::Exhaustive,
                bad.take(),
            );
        }
    }

    fn faces(&self, rep: &mut ValidationReport) {
        for idx in self.a.positive_indices() {
            if idx.is_empty() {
                continue;
            }
            let alv = &self.a.levels[&idx];
            let m = &self.r.components[&idx];
            let mut bad = Wit::new();
            let mut inst = 0u64;
            for &i in idx.dirs() {
                let bm = &self.r.components[&idx.without(i)];
                for sign in Sign::BOTH {
                    let fa = &self.a.faces[&(idx.clone(), i)][sign.idx()];
                    let fb = &self.b.faces[&(idx.clone(), i)][sign.idx()];
                    for x in 0..alv.n_cubes() {
                        inst += 1;
                        if fb.cube(m.cube(x)) != bm.cube(fa.cube(x)) {
                            bad.push(format!(
                                "{idx}: ∂{}{i} not preserved at {}",
                                sign.glyph(),
                                alv.cube_label(x)
                            ));
                        }
                    }
                    for f in 0..alv.n_arrows() {
                        inst += 1;
                        if fb.arrow(m.arrow(f)) != bm.arrow(fa.arrow(f)) {
                            bad.push(format!(
                                "{idx}: ∂{}{i} not preserved at {}",
                                sign.glyph(),
                                alv.arrow_label(f)
                            ));
                        }
                    }
                }
            }
            rep.outcome(
                format!("mor/tv{idx}/faces"),
                "the components commute with all faces",
                inst,
                CheckMethod::Exhaustive,
                bad.take(),
            );
        }
    }

    fn unit_comparisons(&self, rep: &mut ValidationReport) {
        for idx in self.a.positive_indices() {
            for &i in idx.dirs() {
                let bidx = idx.without(i);
                let ablv = &self.a.levels[&bidx];
                let blv = &self.b.levels[&idx];
                let bblv = &self.b.levels[&bidx];
                let m = &self.r.components[&idx];
                let bm = &self.r.components[&bidx];
                let da = &self.a.degens[&(idx.clone(), i)];
                let db = &self.b.degens[&(idx.clone(), i)];
                let lax = self.lax(i);

                let mut bad = Wit::new();
                for t in 0..ablv.n_cubes() {
                    let res = (|| -> Result<()> {
                        let u = self.unit(&idx, i, t);
                        let e_rt = db.cube(bm.cube(t));
                        let r_et = m.cube(da.cube(t));
                        let (s, g) = if lax { (e_rt, r_et) } else { (r_et, e_rt) };
                        if blv.src(u) != s || blv.tgt(u) != g {
                            return Err(KernelError::Malformed("wrong endpoints".into()));
                        }
                        for sign in Sign::BOTH {
                            let fb = &self.b.faces[&(idx.clone(), i)][sign.idx()];
                            if fb.arrow(u) != bblv.ids[bm.cube(t) as usize] {
                                return Err(KernelError::Malformed(format!(
                                    "{i}-face is not an identity"
                                )));
                            }
                        }
                        for &k in idx.dirs() {
                            if k == i {
                                continue;
                            }
                            let sub = idx.without(k);
                            for sign in Sign::BOTH {
                                let fb = &self.b.faces[&(idx.clone(), k)][sign.idx()];
                                let fa_low = &self.a.faces[&(bidx.clone(), k)][sign.idx()];
                                let expect =
                                    self.r.unit_cmp[&(sub.clone(), i)][fa_low.cube(t) as usize];
                                if fb.arrow(u) != expect {
                                    return Err(KernelError::Malformed(format!(
                                        "{k}-face is not the comparison of the face"
                                    )));
                                }
                            }
                        }
                        Ok(())
                    })();
                    if let Err(e) = res {
                        bad.push(format!(
                            "{idx}: unit comparison {i} at {}: {e}",
                            ablv.cube_label(t)
                        ));
                    }
                }
                rep.outcome(
                    format!("mor/tv{idx}/unit{i}/cells"),
                    "the unit comparison is a special arrow with the laxity-directed \
                     endpoints, compatible with faces",
                    ablv.n_cubes() as u64,
                    CheckMethod::Exhaustive,
                    bad.take(),
                );

                // Naturality in the boundary cube.
                let mut bad = Wit::new();
                for g in 0..ablv.n_arrows() {
                    let res = (|| -> Result<()> {
                        let (t0, t1) = (ablv.src(g), ablv.tgt(g));
                        let e_rg = db.arrow(bm.arrow(g));
                        let r_eg = m.arrow(da.arrow(g));
                        let (lhs, rhs) = if lax {
                            (
                                blv.compose0(e_rg, self.unit(&idx, i, t1))?,
                                blv.compose0(self.unit(&idx, i, t0), r_eg)?,
                            )
                        } else {
                            (
                                blv.compose0(r_eg, self.unit(&idx, i, t1))?,
                                blv.compose0(self.unit(&idx, i, t0), e_rg)?,
                            )
                        };
                        if lhs != rhs {
                            return Err(KernelError::Malformed("naturality square fails".into()));
                        }
                        Ok(())
                    })();
                    if let Err(e) = res {
                        bad.push(format!(
                            "{idx}: unit comparison {i} at {}: {e}",
                            ablv.arrow_label(g)
                        ));
                    }
                }
                rep.outcome(
                    format!("mor/tv{idx}/unit{i}/natural"),
                    "the unit comparison is natural in its argument",
                    ablv.n_arrows() as u64,
                    CheckMethod::Exhaustive,
                    bad.take(),
                );
            }
        }
    }

    fn comp_comparisons(&self, rep: &mut ValidationReport) {
        for idx in self.a.positive_indices() {
            for &i in idx.dirs() {
                let alv = &self.a.levels[&idx];
                let blv = &self.b.levels[&idx];
                let m = &self.r.components[&idx];
                let agc = &self.a.comps[&(idx.clone(), i)];
                let bgc = &self.b.comps[&(idx.clone(), i)];
                let lax = self.lax(i);

                let mut bad = Wit::new();
                for (&(x, y), &z) in &agc.cubes {
                    let res = (|| -> Result<()> {
                        let u = self.cmp(&idx, i, x, y)?;
                        let wide = *bgc.cubes.get(&(m.cube(x), m.cube(y))).ok_or_else(|| {
                            KernelError::MissingEntry("image concatenation".into())
                        })?;
                        let (s, g) = if lax { (wide, m.cube(z)) } else { (m.cube(z), wide) };
                        if blv.src(u) != s || blv.tgt(u) != g {
                            return Err(KernelError::Malformed("wrong endpoints".into()));
                        }
                        for sign in Sign::BOTH {
                            let fb = &self.b.faces[&(idx.clone(), i)][sign.idx()];
                            let fa = &self.a.faces[&(idx.clone(), i)][sign.idx()];
                            let bm = &self.r.components[&idx.without(i)];
                            let edge = match sign {
                                Sign::Minus => bm.cube(fa.cube(x)),
                                Sign::Plus => bm.cube(fa.cube(y)),
                            };
                            if fb.arrow(u) != self.b.levels[&idx.without(i)].ids[edge as usize] {
                                return Err(KernelError::Malformed(format!(
                                    "{i}-face is not an identity"
                                )));
                            }
                        }
                        for &k in idx.dirs() {
                            if k == i {
                                continue;
                            }
                            let sub = idx.without(k);
                            for sign in Sign::BOTH {
                                let fb = &self.b.faces[&(idx.clone(), k)][sign.idx()];
                                let fa = &self.a.faces[&(idx.clone(), k)][sign.idx()];
                                let expect = self.r.comp_cmp[&(sub.clone(), i)]
                                    .get(&(fa.cube(x), fa.cube(y)))
                                    .copied();
                                if Some(fb.arrow(u)) != expect {
                                    return Err(KernelError::Malformed(format!(
                                        "{k}-face is not the comparison of the faces"
                                    )));
                                }
                            }
                        }
                        Ok(())
                    })();
                    if let Err(e) = res {
                        bad.push(format!(
                            "{idx}: concatenation comparison {i} at ({}, {}): {e}",
                            alv.cube_label(x),
                            alv.cube_label(y)
                        ));
                    }
                }
                rep.outcome(
                    format!("mor/tv{idx}/comp{i}/cells"),
                    "the concatenation comparison is a special arrow with the \
                     laxity-directed endpoints, compatible with faces",
                    agc.cubes.len() as u64,
                    CheckMethod::Exhaustive,
                    bad.take(),
                );

                // Naturality: one equation per composable arrow pair.
                let instances = agc.arrows.len() as u64;
                let name = format!("mor/tv{idx}/comp{i}/natural");
                if level_determined(self.b, &idx) {
                    rep.pass(
                        name,
                        "the concatenation comparison is natural in both arguments (both \
                         sides are parallel with equal faces in a boundary-determined \
                         target level)",
                        instances,
                        CheckMethod::FacewiseReduction,
                    );
                    continue;
                }
                if instances > self.opts.exhaustive_budget {
                    rep.fail(
                        name,
                        "the concatenation comparison is natural in both arguments",
                        instances,
                        CheckMethod::Exhaustive,
                        vec![format!(
                            "{idx}: {instances} instances exceed budget {}",
                            self.opts.exhaustive_budget
                        )],
                    );
                    continue;
                }
                let mut bad = Wit::new();
                for (&(f, g), &fg) in &agc.arrows {
                    let res = (|| -> Result<()> {
                        let (x, y) = (alv.src(f), alv.src(g));
                        let (x2, y2) = (alv.tgt(f), alv.tgt(g));
                        let wide = *bgc
                            .arrows
                            .get(&(m.arrow(f), m.arrow(g)))
                            .ok_or_else(|| KernelError::MissingEntry("image arrow".into()))?;
                        let (lhs, rhs) = if lax {
                            (
                                blv.compose0(wide, self.cmp(&idx, i, x2, y2)?)?,
                                blv.compose0(self.cmp(&idx, i, x, y)?, m.arrow(fg))?,
                            )
                        } else {
                            (
                                blv.compose0(m.arrow(fg), self.cmp(&idx, i, x2, y2)?)?,
                                blv.compose0(self.cmp(&idx, i, x, y)?, wide)?,
                            )
                        };
                        if lhs != rhs {
                            return Err(KernelError::Malformed("naturality square fails".into()));
                        }
                        Ok(())
                    })();
                    if let Err(e) = res {
                        bad.push(format!(
                            "{idx}: concatenation comparison {i} at ({}, {}): {e}",
                            alv.arrow_label(f),
                            alv.arrow_label(g)
                        ));
                    }
                }
                rep.outcome(
                    name,
                    "the concatenation comparison is natural in both arguments",
                    instances,
                    CheckMethod::Exhaustive,
                    bad.take(),
                );
            }
        }
    }

    fn coherence(&self, rep: &mut ValidationReport) {
        for idx in self.a.positive_indices() {
            for &i in idx.dirs() {
                self.unitor_coherence(&idx, i, rep);
                self.assoc_coherence(&idx, i, rep);
            }
            for (p, &i) in idx.dirs().iter().enumerate() {
                for &j in &idx.dirs()[p + 1..] {
                    self.inter_coherence(&idx, i, j, rep);
                }
            }
        }
    }

    fn unitor_coherence(&self, idx: &MultiIndex, i: u8, rep: &mut ValidationReport) {
        let alv = &self.a.levels[idx];
        let blv = &self.b.levels[idx];
        let m = &self.r.components[idx];
        let lax = self.lax(i);
        let da = &self.a.degens[&(idx.clone(), i)];
        let lun_a = &self.a.lunitors[&(idx.clone(), i)];
        let run_a = &self.a.runitors[&(idx.clone(), i)];
        let lun_b = &self.b.lunitors[&(idx.clone(), i)];
        let run_b = &self.b.runitors[&(idx.clone(), i)];

        let mut bad = Wit::new();
        for x in 0..alv.n_cubes() {
            let res = (|| -> Result<()> {
                let rx = m.cube(x);
                // Left unitor.
                let t = self.a.faces[&(idx.clone(), i)][0].cube(x);
                let u_t = self.unit(idx, i, t);
                let widened =
                    self.b.compose_arrows(idx, i, u_t, blv.ids[rx as usize])?;
                let et_x = self.cmp(idx, i, da.cube(t), x)?;
                if lax {
                    let lhs =
                        blv.chain0(&[widened, et_x, m.arrow(lun_a[x as usize])])?;
                    if lhs != lun_b[rx as usize] {
                        return Err(KernelError::Malformed("left unitor coherence fails".into()));
                    }
                } else {
                    let lhs = blv.chain0(&[et_x, widened, lun_b[rx as usize]])?;
                    if lhs != m.arrow(lun_a[x as usize]) {
                        return Err(KernelError::Malformed("left unitor coherence fails".into()));
                    }
                }
                // Right unitor.
                let t = self.a.faces[&(idx.clone(), i)][1].cube(x);
                let u_t = self.unit(idx, i, t);
                let widened =
                    self.b.compose_arrows(idx, i, blv.ids[rx as usize], u_t)?;
                let x_et = self.cmp(idx, i, x, da.cube(t))?;
                if lax {
                    let lhs = blv.chain0(&[widened, x_et, m.arrow(run_a[x as usize])])?;
                    if lhs != run_b[rx as usize] {
                        return Err(KernelError::Malformed("right unitor coherence fails".into()));
                    }
                } else {
                    let lhs = blv.chain0(&[x_et, widened, run_b[rx as usize]])?;
                    if lhs != m.arrow(run_a[x as usize]) {
                        return Err(KernelError::Malformed("right unitor coherence fails".into()));
                    }
                }
                Ok(())
            })();
            if let Err(e) = res {
                bad.push(format!("{idx}: unitor coherence {i} at {}: {e}", alv.cube_label(x)));
            }
        }
        rep.outcome(
            format!("mor/tv{idx}/unitors{i}/coherence"),
            "the comparisons at degenerate arguments reduce to the unitors of both \
             structures",
            2 * alv.n_cubes() as u64,
            CheckMethod::Exhaustive,
            bad.take(),
        );
    }

    fn assoc_coherence(&self, idx: &MultiIndex, i: u8, rep: &mut ValidationReport) {
        let alv = &self.a.levels[idx];
        let blv = &self.b.levels[idx];
        let m = &self.r.components[idx];
        let lax = self.lax(i);
        let agc = &self.a.comps[&(idx.clone(), i)];
        let k_a = &self.a.associators[&(idx.clone(), i)];
        let k_b = &self.b.associators[&(idx.clone(), i)];

        let mut by_first: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &(x, y) in agc.cubes.keys() {
            by_first.entry(x).or_default().push(y);
        }
        let mut bad = Wit::new();
        let mut instances = 0u64;
        for (&(x, y), &xy) in &agc.cubes {
            let Some(zs) = by_first.get(&y) else { continue };
            for &z in zs {
                instances += 1;
                let res = (|| -> Result<()> {
                    let yz = *agc.cubes.get(&(y, z)).ok_or_else(|| {
                        KernelError::MissingEntry("composite".into())
                    })?;
                    let ka = *k_a.get(&(x, y, z)).ok_or_else(|| {
                        KernelError::MissingEntry("source associator".into())
                    })?;
                    let kb = *k_b
                        .get(&(m.cube(x), m.cube(y), m.cube(z)))
                        .ok_or_else(|| KernelError::MissingEntry("target associator".into()))?;
                    let inner = self.b.compose_arrows(
                        idx,
                        i,
                        blv.ids[m.cube(x) as usize],
                        self.cmp(idx, i, y, z)?,
                    )?;
                    let outer = self.b.compose_arrows(
                        idx,
                        i,
                        self.cmp(idx, i, x, y)?,
                        blv.ids[m.cube(z) as usize],
                    )?;
                    let (lhs, rhs) = if lax {
                        (
                            blv.chain0(&[inner, self.cmp(idx, i, x, yz)?, m.arrow(ka)])?,
                            blv.chain0(&[kb, outer, self.cmp(idx, i, xy, z)?])?,
                        )
                    } else {
                        (
                            blv.chain0(&[m.arrow(ka), self.cmp(idx, i, xy, z)?, outer])?,
                            blv.chain0(&[self.cmp(idx, i, x, yz)?, inner, kb])?,
                        )
                    };
                    if lhs != rhs {
                        return Err(KernelError::Malformed("associator coherence fails".into()));
                    }
                    Ok(())
                })();
                if let Err(e) = res {
                    bad.push(format!(
                        "{idx}: associator coherence {i} at ({}, {}, {}): {e}",
                        alv.cube_label(x),
                        alv.cube_label(y),
                        alv.cube_label(z)
                    ));
                }
            }
        }
        rep.outcome(
            format!("mor/tv{idx}/assoc{i}/coherence"),
            "the comparisons commute with the associators of both structures",
            instances,
            CheckMethod::Exhaustive,
            bad.take(),
        );
    }

    fn inter_coherence(&self, idx: &MultiIndex, i: u8, j: u8, rep: &mut ValidationReport) {
        let alv = &self.a.levels[idx];
        let blv = &self.b.levels[idx];
        let m = &self.r.components[idx];
        let ti = &self.a.comps[&(idx.clone(), i)].cubes;
        let tj = &self.a.comps[&(idx.clone(), j)].cubes;
        let chi_a = &self.a.interchangers[&(idx.clone(), i, j)];
        let chi_b = &self.b.interchangers[&(idx.clone(), i, j)];

        let mut bad = Wit::new();
        let mut instances = 0u64;
        for &(x, y) in ti.keys() {
            for &(z, u) in ti.keys() {
                if !tj.contains_key(&(x, z)) || !tj.contains_key(&(y, u)) {
                    continue;
                }
                instances += 1;
                let res = (|| -> Result<()> {
                    let get = |t: &BTreeMap<(u32, u32), u32>, a: u32, b: u32| -> Result<u32> {
                        t.get(&(a, b)).copied().ok_or_else(|| {
                            KernelError::MissingEntry(format!("composite ({a},{b})"))
                        })
                    };
                    let xy = get(ti, x, y)?;
                    let zu = get(ti, z, u)?;
                    let xz = get(tj, x, z)?;
                    let yu = get(tj, y, u)?;
                    let ca = *chi_a.get(&(x, y, z, u)).ok_or_else(|| {
                        KernelError::MissingEntry("source interchanger".into())
                    })?;
                    let cb = *chi_b
                        .get(&(m.cube(x), m.cube(y), m.cube(z), m.cube(u)))
                        .ok_or_else(|| KernelError::MissingEntry("target interchanger".into()))?;
                    let rows = self.b.compose_arrows(
                        idx,
                        j,
                        self.cmp(idx, i, x, y)?,
                        self.cmp(idx, i, z, u)?,
                    )?;
                    let cols = self.b.compose_arrows(
                        idx,
                        i,
                        self.cmp(idx, j, x, z)?,
                        self.cmp(idx, j, y, u)?,
                    )?;
                    let (lhs, rhs) = if self.lax(i) && self.lax(j) {
                        (
                            blv.chain0(&[cb, cols, self.cmp(idx, i, xz, yu)?])?,
                            blv.chain0(&[rows, self.cmp(idx, j, xy, zu)?, m.arrow(ca)])?,
                        )
                    } else if !self.lax(i) && self.lax(j) {
                        (
                            blv.chain0(&[rows, cb, cols])?,
                            blv.chain0(&[
                                self.cmp(idx, j, xy, zu)?,
                                m.arrow(ca),
                                self.cmp(idx, i, xz, yu)?,
                            ])?,
                        )
                    } else {
                        (
                            blv.chain0(&[self.cmp(idx, j, xy, zu)?, rows, cb])?,
                            blv.chain0(&[m.arrow(ca), self.cmp(idx, i, xz, yu)?, cols])?,
                        )
                    };
                    if lhs != rhs {
                        return Err(KernelError::Malformed("interchanger coherence fails".into()));
                    }
                    Ok(())
                })();
                if let Err(e) = res {
                    bad.push(format!(
                        "{idx}: interchanger coherence {i}{j} at ({}, {}, {}, {}): {e}",
                        alv.cube_label(x),
                        alv.cube_label(y),
                        alv.cube_label(z),
                        alv.cube_label(u)
                    ));
                }
            }
        }
        rep.outcome(
            format!("mor/tv{idx}/inter{i}{j}/coherence"),
            "the comparisons commute with the interchangers of both structures",
            instances,
            CheckMethod::Exhaustive,
            bad.take(),
        );
    }
}
