//! Exhaustive validation of chiral multiple categories.
//!
//! Every law is checked on every instance.  Laws whose two sides are
//! parallel transversal arrows with equal geometric faces are, in a level
//! whose arrows are determined by source, target and faces, exact
//! consequences of the face laws checked before them; such laws are
//! recorded with method [`CheckMethod::FacewiseReduction`] instead of being
//! swept, and are swept exhaustively (within budget) wherever that premise
//! fails.  Coherence equations between comparison arrows — pentagon,
//! triangle, hexagons, unit compatibilities — are always swept in full.

use std::collections::{BTreeMap, BTreeSet};

use super::*;
use crate::report::{CheckMethod, ValidationReport, MAX_WITNESSES};

/// Check every axiom of a chiral multiple category with default budgets.
pub fn validate_chiral(a: &ChiralMC) -> ValidationReport {
    validate_chiral_with(a, &ChiralOptions::default())
}

/// Check every axiom of a chiral multiple category.
pub fn validate_chiral_with(a: &ChiralMC, opts: &ChiralOptions) -> ValidationReport {
    let mut rep = ValidationReport::new(a.name.clone());
    let mut c = Checker {
        a,
        opts,
        determined: BTreeMap::new(),
        basic_ok: BTreeMap::new(),
        faces_ok: BTreeMap::new(),
        bound_ok: BTreeMap::new(),
        assoc_ok: BTreeMap::new(),
    };
    if c.shapes(&mut rep) {
        c.compute_determined();
        c.category_basics(&mut rep);
        c.face_functors(&mut rep);
        c.category_assoc(&mut rep);
        c.concat_tables(&mut rep);
        c.comparisons(&mut rep);
        c.coherence(&mut rep);
    }
    rep.finish()
}

/// A level is boundary-determined when no two distinct arrows share source,
/// target and all geometric faces.  (At the empty index this means the
/// transversal category is thin.)  In such a level, any two parallel arrows
/// with equal faces are equal, which is what facewise law reductions rely on.
pub(crate) fn level_determined(a: &ChiralMC, idx: &MultiIndex) -> bool {
    let lv = &a.levels[idx];
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    for f in 0..lv.n_arrows() {
        let mut key = vec![lv.src(f), lv.tgt(f)];
        for &i in idx.dirs() {
            for sign in Sign::BOTH {
                key.push(a.faces[&(idx.clone(), i)][sign.idx()].arrow(f));
            }
        }
        if !seen.insert(key) {
            return false;
        }
    }
    true
}

/// Witness collector capped at [`MAX_WITNESSES`].
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

    fn push_err(&mut self, ctx: &str, e: KernelError) {
        self.push(format!("{ctx}: {e}"));
    }

    fn take(self) -> Vec<String> {
        self.0
    }
}

struct Checker<'a> {
    a: &'a ChiralMC,
    opts: &'a ChiralOptions,
    /// Whether each level's arrows are determined by (src, tgt, faces).
    determined: BTreeMap<MultiIndex, bool>,
    /// Identity and closure laws of the level's transversal category hold.
    basic_ok: BTreeMap<MultiIndex, bool>,
    /// All face and degeneracy maps touching the level are functors and the
    /// cubical relations hold there.
    faces_ok: BTreeMap<MultiIndex, bool>,
    /// Closure and boundary laws of `+_i` at the level hold.
    bound_ok: BTreeMap<(MultiIndex, u8), bool>,
    /// Transversal associativity holds at the level.
    assoc_ok: BTreeMap<MultiIndex, bool>,
}

impl<'a> Checker<'a> {
    fn lv(&self, idx: &MultiIndex) -> &TvCat {
        &self.a.levels[idx]
    }

    fn fmap(&self, idx: &MultiIndex, i: u8, sign: Sign) -> &LevelMap {
        &self.a.faces[&(idx.clone(), i)][sign.idx()]
    }

    fn dmap(&self, idx: &MultiIndex, i: u8) -> &LevelMap {
        &self.a.degens[&(idx.clone(), i)]
    }

    fn gc(&self, idx: &MultiIndex, i: u8) -> &GeomComp {
        &self.a.comps[&(idx.clone(), i)]
    }

    /// `x +_i y` on cubes, with a contextual error.
    fn ccube(&self, idx: &MultiIndex, i: u8, x: u32, y: u32) -> Result<u32> {
        self.gc(idx, i).cubes.get(&(x, y)).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!(
                "cube composite {} +{i} {} at {idx}",
                self.lv(idx).cube_label(x),
                self.lv(idx).cube_label(y)
            ))
        })
    }

    /// `f +_i g` on arrows, with a contextual error.
    fn carr(&self, idx: &MultiIndex, i: u8, f: u32, g: u32) -> Result<u32> {
        self.gc(idx, i).arrows.get(&(f, g)).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!(
                "arrow composite {} +{i} {} at {idx}",
                self.lv(idx).arrow_label(f),
                self.lv(idx).arrow_label(g)
            ))
        })
    }

    fn premise_for_reduction(&self, idx: &MultiIndex) -> bool {
        *self.determined.get(idx).unwrap_or(&false)
            && *self.basic_ok.get(idx).unwrap_or(&false)
            && *self.faces_ok.get(idx).unwrap_or(&false)
    }

    // ------------------------------------------------------------------
    // Shape gate
    // ------------------------------------------------------------------

    /// Structural well-formedness: every level, face, degeneracy, table and
    /// comparison family exists with consistent lengths and in-range
    /// entries.  Law checks only run when this passes.
    fn shapes(&mut self, rep: &mut ValidationReport) -> bool {
        let a = self.a;
        let mut bad = Wit::new();
        let mut count = 0u64;

        if a.degree == 0 {
            bad.push("degree must be positive".into());
        }
        let positive: Vec<MultiIndex> = a.positive_indices();
        let expected: BTreeSet<&MultiIndex> = positive.iter().collect();
        for idx in a.levels.keys() {
            if !expected.contains(idx) {
                bad.push(format!("unexpected level {idx}"));
            }
        }

        for idx in &positive {
            count += 1;
            let lv = match a.levels.get(idx) {
                Some(lv) => lv,
                None => {
                    bad.push(format!("missing level {idx}"));
                    continue;
                }
            };
            let nc = lv.n_cubes();
            let na = lv.n_arrows();
            if lv.ids.len() != lv.cubes.len() {
                bad.push(format!("level {idx}: ids length mismatch"));
                continue;
            }
            for (x, arr) in lv.arrows.iter().enumerate() {
                if arr.src >= nc || arr.tgt >= nc {
                    bad.push(format!("level {idx}: arrow #{x} endpoint out of range"));
                }
            }
            for (x, &e) in lv.ids.iter().enumerate() {
                if e >= na {
                    bad.push(format!("level {idx}: identity of cube #{x} out of range"));
                } else if lv.src(e) != x as u32 || lv.tgt(e) != x as u32 {
                    bad.push(format!(
                        "level {idx}: identity of {} is not an endo-arrow",
                        lv.cube_label(x as u32)
                    ));
                }
            }
            for (&(f, g), &h) in &lv.comp {
                if f >= na || g >= na || h >= na {
                    bad.push(format!("level {idx}: composition entry ({f},{g}) out of range"));
                }
            }

            for &i in idx.dirs() {
                let bidx = idx.without(i);
                let bn = match a.levels.get(&bidx) {
                    Some(b) => (b.n_cubes(), b.n_arrows()),
                    None => continue,
                };
                match a.faces.get(&(idx.clone(), i)) {
                    None => bad.push(format!("missing faces ∂±{i} at {idx}")),
                    Some(pair) => {
                        for (s, m) in pair.iter().enumerate() {
                            let sg = if s == 0 { '-' } else { '+' };
                            if m.on_cubes.len() != nc as usize
                                || m.on_arrows.len() != na as usize
                            {
                                bad.push(format!("face ∂{sg}{i} at {idx}: length mismatch"));
                            } else if m.on_cubes.iter().any(|&v| v >= bn.0)
                                || m.on_arrows.iter().any(|&v| v >= bn.1)
                            {
                                bad.push(format!("face ∂{sg}{i} at {idx}: value out of range"));
                            }
                        }
                    }
                }
                match a.degens.get(&(idx.clone(), i)) {
                    None => bad.push(format!("missing degeneracy e{i} into {idx}")),
                    Some(m) => {
                        if m.on_cubes.len() != bn.0 as usize || m.on_arrows.len() != bn.1 as usize
                        {
                            bad.push(format!("degeneracy e{i} into {idx}: length mismatch"));
                        } else if m.on_cubes.iter().any(|&v| v >= nc)
                            || m.on_arrows.iter().any(|&v| v >= na)
                        {
                            bad.push(format!("degeneracy e{i} into {idx}: value out of range"));
                        }
                    }
                }
                match a.comps.get(&(idx.clone(), i)) {
                    None => bad.push(format!("missing concatenation +{i} at {idx}")),
                    Some(t) => {
                        if t.cubes
                            .iter()
                            .any(|(&(x, y), &z)| x >= nc || y >= nc || z >= nc)
                        {
                            bad.push(format!("+{i} cube table at {idx}: value out of range"));
                        }
                        if t.arrows
                            .iter()
                            .any(|(&(f, g), &h)| f >= na || g >= na || h >= na)
                        {
                            bad.push(format!("+{i} arrow table at {idx}: value out of range"));
                        }
                    }
                }
                for (label, table) in [("λ", &a.lunitors), ("ρ", &a.runitors)] {
                    match table.get(&(idx.clone(), i)) {
                        None => bad.push(format!("missing unitors {label}{i} at {idx}")),
                        Some(v) => {
                            if v.len() != nc as usize {
                                bad.push(format!("{label}{i} at {idx}: length mismatch"));
                            } else if v.iter().any(|&f| f >= na) {
                                bad.push(format!("{label}{i} at {idx}: value out of range"));
                            }
                        }
                    }
                }
                match a.associators.get(&(idx.clone(), i)) {
                    None => bad.push(format!("missing associators κ{i} at {idx}")),
                    Some(t) => {
                        if t.iter().any(|(&(x, y, z), &f)| {
                            x >= nc || y >= nc || z >= nc || f >= na
                        }) {
                            bad.push(format!("κ{i} at {idx}: entry out of range"));
                        }
                    }
                }
            }
            for (p, &i) in idx.dirs().iter().enumerate() {
                for &j in &idx.dirs()[p + 1..] {
                    match a.interchangers.get(&(idx.clone(), i, j)) {
                        None => bad.push(format!("missing interchangers χ{i}{j} at {idx}")),
                        Some(t) => {
                            if t.iter().any(|(&(x, y, z, u), &f)| {
                                x >= nc || y >= nc || z >= nc || u >= nc || f >= na
                            }) {
                                bad.push(format!("χ{i}{j} at {idx}: entry out of range"));
                            }
                        }
                    }
                }
            }
        }

        for (idx, i) in a.faces.keys() {
            if !expected.contains(idx) || !idx.contains(*i) {
                bad.push(format!("unexpected face key ({idx},{i})"));
            }
        }
        for (idx, i) in a.degens.keys().chain(a.comps.keys()) {
            if !expected.contains(idx) || !idx.contains(*i) {
                bad.push(format!("unexpected geometric key ({idx},{i})"));
            }
        }
        for (idx, i) in a.lunitors.keys().chain(a.runitors.keys()).chain(a.associators.keys()) {
            if !expected.contains(idx) || !idx.contains(*i) {
                bad.push(format!("unexpected comparison key ({idx},{i})"));
            }
        }
        for (idx, i, j) in a.interchangers.keys() {
            if !expected.contains(idx) || !idx.contains(*i) || !idx.contains(*j) || i >= j {
                bad.push(format!("unexpected interchanger key ({idx},{i},{j})"));
            }
        }

        let ok = bad.0.is_empty();
        rep.outcome(
            "shape/levels",
            "every level, face, degeneracy, concatenation and comparison family is present \
             with consistent lengths and in-range entries",
            count,
            CheckMethod::Exhaustive,
            bad.take(),
        );
        ok
    }

    // ------------------------------------------------------------------
    // Determinedness
    // ------------------------------------------------------------------

    fn compute_determined(&mut self) {
        for idx in self.a.positive_indices() {
            let det = level_determined(self.a, &idx);
            self.determined.insert(idx, det);
        }
    }

    // ------------------------------------------------------------------
    // Transversal categories
    // ------------------------------------------------------------------

    fn category_basics(&mut self, rep: &mut ValidationReport) {
        for idx in self.a.positive_indices() {
            let lv = self.lv(&idx);
            let mut ok = true;

            // Identity laws.
            let mut bad = Wit::new();
            for f in 0..lv.n_arrows() {
                let l = lv.comp.get(&(lv.ids[lv.src(f) as usize], f)).copied();
                let r = lv.comp.get(&(f, lv.ids[lv.tgt(f) as usize])).copied();
                if l != Some(f) || r != Some(f) {
                    bad.push(format!("{idx}: identity law fails at {}", lv.arrow_label(f)));
                }
            }
            ok &= bad.0.is_empty();
            rep.outcome(
                format!("tv{idx}/cat/identity"),
                "identity arrows are neutral for transversal composition",
                lv.n_arrows() as u64,
                CheckMethod::Exhaustive,
                bad.take(),
            );

            // Closure: a pair is composable exactly when an entry exists,
            // and composites have the right endpoints.
            let mut bad = Wit::new();
            let mut by_src: Vec<Vec<u32>> = vec![Vec::new(); lv.cubes.len()];
            for f in 0..lv.n_arrows() {
                by_src[lv.src(f) as usize].push(f);
            }
            let mut probes = 0u64;
            for f in 0..lv.n_arrows() {
                for &g in &by_src[lv.tgt(f) as usize] {
                    probes += 1;
                    match lv.comp.get(&(f, g)) {
                        None => bad.push(format!(
                            "{idx}: no composite of {} and {}",
                            lv.arrow_label(f),
                            lv.arrow_label(g)
                        )),
                        Some(&h) => {
                            if lv.src(h) != lv.src(f) || lv.tgt(h) != lv.tgt(g) {
                                bad.push(format!(
                                    "{idx}: composite of {} and {} has wrong endpoints",
                                    lv.arrow_label(f),
                                    lv.arrow_label(g)
                                ));
                            }
                        }
                    }
                }
            }
            if lv.comp.len() as u64 != probes {
                bad.push(format!(
                    "{idx}: composition table has {} entries but {} composable pairs",
                    lv.comp.len(),
                    probes
                ));
            }
            ok &= bad.0.is_empty();
            rep.outcome(
                format!("tv{idx}/cat/closure"),
                "transversal composition is total on composable pairs and respects endpoints",
                probes,
                CheckMethod::Exhaustive,
                bad.take(),
            );

            self.basic_ok.insert(idx, ok);
        }
    }

    fn category_assoc(&mut self, rep: &mut ValidationReport) {
        for idx in self.a.positive_indices() {
            let lv = self.lv(&idx);
            let mut out0: Vec<u64> = vec![0; lv.cubes.len()];
            let mut in0: Vec<u64> = vec![0; lv.cubes.len()];
            for f in 0..lv.n_arrows() {
                out0[lv.src(f) as usize] += 1;
                in0[lv.tgt(f) as usize] += 1;
            }
            let instances: u64 = (0..lv.n_arrows())
                .map(|g| in0[lv.src(g) as usize] * out0[lv.tgt(g) as usize])
                .sum();

            let lower_ok = idx
                .dirs()
                .iter()
                .all(|&i| *self.assoc_ok.get(&idx.without(i)).unwrap_or(&false));
            if self.premise_for_reduction(&idx) && lower_ok {
                rep.pass(
                    format!("tv{idx}/cat/assoc"),
                    "transversal composition is associative (both sides are parallel with \
                     equal faces in a boundary-determined level)",
                    instances,
                    CheckMethod::FacewiseReduction,
                );
                self.assoc_ok.insert(idx, true);
                continue;
            }

            if instances > self.opts.exhaustive_budget {
                rep.fail(
                    format!("tv{idx}/cat/assoc"),
                    "transversal composition is associative",
                    instances,
                    CheckMethod::Exhaustive,
                    vec![format!(
                        "{idx}: {instances} instances exceed budget {}",
                        self.opts.exhaustive_budget
                    )],
                );
                self.assoc_ok.insert(idx, false);
                continue;
            }

            let mut by_src: Vec<Vec<u32>> = vec![Vec::new(); lv.cubes.len()];
            for f in 0..lv.n_arrows() {
                by_src[lv.src(f) as usize].push(f);
            }
            let mut bad = Wit::new();
            for (&(f, g), &fg) in &lv.comp {
                for &h in &by_src[lv.tgt(g) as usize] {
                    let l = lv.comp.get(&(fg, h)).copied();
                    let r = lv
                        .comp
                        .get(&(g, h))
                        .and_then(|&gh| lv.comp.get(&(f, gh)))
                        .copied();
                    if l.is_none() || l != r {
                        bad.push(format!(
                            "{idx}: associativity fails at ({}, {}, {})",
                            lv.arrow_label(f),
                            lv.arrow_label(g),
                            lv.arrow_label(h)
                        ));
                    }
                }
            }
            self.assoc_ok.insert(idx.clone(), bad.0.is_empty());
            rep.outcome(
                format!("tv{idx}/cat/assoc"),
                "transversal composition is associative",
                instances,
                CheckMethod::Exhaustive,
                bad.take(),
            );
        }
    }

    // ------------------------------------------------------------------
    // Faces, degeneracies, cubical relations
    // ------------------------------------------------------------------

    /// Check that `m : src → dst` is a functor of transversal categories.
    fn functor_check(&self, src: &TvCat, dst: &TvCat, m: &LevelMap, what: &str, bad: &mut Wit) {
        for f in 0..src.n_arrows() {
            let mf = m.arrow(f);
            if dst.src(mf) != m.cube(src.src(f)) || dst.tgt(mf) != m.cube(src.tgt(f)) {
                bad.push(format!("{what} does not respect endpoints at {}", src.arrow_label(f)));
            }
        }
        for x in 0..src.n_cubes() {
            if m.arrow(src.ids[x as usize]) != dst.ids[m.cube(x) as usize] {
                bad.push(format!("{what} does not preserve the identity of {}", src.cube_label(x)));
            }
        }
        for (&(f, g), &fg) in &src.comp {
            match dst.comp.get(&(m.arrow(f), m.arrow(g))) {
                Some(&c) if c == m.arrow(fg) => {}
                _ => bad.push(format!(
                    "{what} does not preserve the composite of {} and {}",
                    src.arrow_label(f),
                    src.arrow_label(g)
                )),
            }
        }
    }

    fn face_functors(&mut self, rep: &mut ValidationReport) {
        let positive = self.a.positive_indices();
        let mut level_ok: BTreeMap<MultiIndex, bool> = BTreeMap::new();
        for idx in &positive {
            level_ok.insert(idx.clone(), true);
        }

        for idx in &positive {
            let lv = self.lv(idx);
            for &i in idx.dirs() {
                let bidx = idx.without(i);
                let blv = self.lv(&bidx);
                let mut bad = Wit::new();
                for sign in Sign::BOTH {
                    self.functor_check(
                        lv,
                        blv,
                        self.fmap(idx, i, sign),
                        &format!("∂{}{i}", sign.glyph()),
                        &mut bad,
                    );
                }
                let inst = 2 * (lv.n_arrows() as u64 + lv.n_cubes() as u64 + lv.comp.len() as u64);
                let ok = bad.0.is_empty();
                rep.outcome(
                    format!("tv{idx}/face{i}/functor"),
                    "both faces are functors of transversal categories",
                    inst,
                    CheckMethod::Exhaustive,
                    bad.take(),
                );
                if !ok {
                    level_ok.insert(idx.clone(), false);
                }

                let mut bad = Wit::new();
                self.functor_check(blv, lv, self.dmap(idx, i), &format!("e{i}"), &mut bad);
                let inst = blv.n_arrows() as u64 + blv.n_cubes() as u64 + blv.comp.len() as u64;
                let ok = bad.0.is_empty();
                rep.outcome(
                    format!("tv{idx}/degen{i}/functor"),
                    "the degeneracy is a functor of transversal categories",
                    inst,
                    CheckMethod::Exhaustive,
                    bad.take(),
                );
                if !ok {
                    level_ok.insert(idx.clone(), false);
                    level_ok.insert(bidx.clone(), false);
                }
            }
        }

        // Cubical relations.
        for idx in &positive {
            let lv = self.lv(idx);
            let mut bad = Wit::new();
            let mut inst = 0u64;
            for (p, &i) in idx.dirs().iter().enumerate() {
                // ∂±_i e_i = id.
                let d = self.dmap(idx, i);
                for sign in Sign::BOTH {
                    let f = self.fmap(idx, i, sign);
                    let blv = self.lv(&idx.without(i));
                    for x in 0..blv.n_cubes() {
                        inst += 1;
                        if f.cube(d.cube(x)) != x {
                            bad.push(format!("∂{}{i} e{i} ≠ id on cube {x} at {idx}", sign.glyph()));
                        }
                    }
                    for g in 0..blv.n_arrows() {
                        inst += 1;
                        if f.arrow(d.arrow(g)) != g {
                            bad.push(format!(
                                "∂{}{i} e{i} ≠ id on arrow {g} at {idx}",
                                sign.glyph()
                            ));
                        }
                    }
                }

                for &j in &idx.dirs()[p + 1..] {
                    // Faces commute: ∂β_j ∂α_i = ∂α_i ∂β_j.
                    for ai in Sign::BOTH {
                        for bj in Sign::BOTH {
                            let via_i = (self.fmap(idx, i, ai), self.fmap(&idx.without(i), j, bj));
                            let via_j = (self.fmap(idx, j, bj), self.fmap(&idx.without(j), i, ai));
                            for x in 0..lv.n_cubes() {
                                inst += 1;
                                if via_i.1.cube(via_i.0.cube(x)) != via_j.1.cube(via_j.0.cube(x)) {
                                    bad.push(format!(
                                        "∂{}{j} ∂{}{i} ≠ ∂{}{i} ∂{}{j} on cube {x} at {idx}",
                                        bj.glyph(),
                                        ai.glyph(),
                                        ai.glyph(),
                                        bj.glyph()
                                    ));
                                }
                            }
                            for f in 0..lv.n_arrows() {
                                inst += 1;
                                if via_i.1.arrow(via_i.0.arrow(f)) != via_j.1.arrow(via_j.0.arrow(f))
                                {
                                    bad.push(format!(
                                        "face-face relation fails on arrow {f} at {idx} \
                                         (i={i}, j={j})"
                                    ));
                                }
                            }
                        }
                    }

                    // Degeneracies commute: e_i e_j = e_j e_i into idx.
                    let lowlv = self.lv(&idx.without(i).without(j));
                    let ei_then = (self.dmap(&idx.without(j), i), self.dmap(idx, j));
                    let ej_then = (self.dmap(&idx.without(i), j), self.dmap(idx, i));
                    for x in 0..lowlv.n_cubes() {
                        inst += 1;
                        if ei_then.1.cube(ei_then.0.cube(x)) != ej_then.1.cube(ej_then.0.cube(x)) {
                            bad.push(format!("e{j} e{i} ≠ e{i} e{j} on cube {x} into {idx}"));
                        }
                    }
                    for f in 0..lowlv.n_arrows() {
                        inst += 1;
                        if ei_then.1.arrow(ei_then.0.arrow(f)) != ej_then.1.arrow(ej_then.0.arrow(f))
                        {
                            bad.push(format!("e{j} e{i} ≠ e{i} e{j} on arrow {f} into {idx}"));
                        }
                    }

                    // Mixed: ∂α_j e_i = e_i ∂α_j (i ≠ j).
                    for (lo, hi) in [(i, j), (j, i)] {
                        // e_lo into idx, then ∂α_hi out of idx.
                        let e_in = self.dmap(idx, lo);
                        let e_low = self.dmap(&idx.without(hi), lo);
                        let slv = self.lv(&idx.without(lo));
                        for sign in Sign::BOTH {
                            let f_out = self.fmap(idx, hi, sign);
                            let f_low = self.fmap(&idx.without(lo), hi, sign);
                            for x in 0..slv.n_cubes() {
                                inst += 1;
                                if f_out.cube(e_in.cube(x)) != e_low.cube(f_low.cube(x)) {
                                    bad.push(format!(
                                        "∂{}{hi} e{lo} ≠ e{lo} ∂{}{hi} on cube {x} at {idx}",
                                        sign.glyph(),
                                        sign.glyph()
                                    ));
                                }
                            }
                            for f in 0..slv.n_arrows() {
                                inst += 1;
                                if f_out.arrow(e_in.arrow(f)) != e_low.arrow(f_low.arrow(f)) {
                                    bad.push(format!(
                                        "mixed face-degeneracy relation fails on arrow {f} \
                                         at {idx} (e{lo}, ∂{}{hi})",
                                        sign.glyph()
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            if idx.dim() > 0 {
                let ok = bad.0.is_empty();
                rep.outcome(
                    format!("tv{idx}/relations"),
                    "faces and degeneracies satisfy the cubical relations",
                    inst,
                    CheckMethod::Exhaustive,
                    bad.take(),
                );
                if !ok {
                    level_ok.insert(idx.clone(), false);
                }
            }
        }

        self.faces_ok = level_ok;
    }

    // ------------------------------------------------------------------
    // Concatenations
    // ------------------------------------------------------------------

    fn concat_tables(&mut self, rep: &mut ValidationReport) {
        let positive = self.a.positive_indices();
        for idx in &positive {
            for &i in idx.dirs() {
                self.concat_closure(idx, i, rep);
                self.concat_units(idx, i, rep);
                self.concat_interchange0(idx, i, rep);
            }
        }
        self.degen_strictness(rep);
    }

    /// Closure and boundary laws of `+_i` on cubes and arrows.
    fn concat_closure(&mut self, idx: &MultiIndex, i: u8, rep: &mut ValidationReport) {
        let lv = self.lv(idx);
        let gc = self.gc(idx, i);
        let fm = self.fmap(idx, i, Sign::Minus);
        let fp = self.fmap(idx, i, Sign::Plus);
        let blv = self.lv(&idx.without(i));
        let mut ok = true;

        // Cubes.
        let mut bad = Wit::new();
        let mut by_minus: Vec<Vec<u32>> = vec![Vec::new(); blv.cubes.len()];
        for x in 0..lv.n_cubes() {
            by_minus[fm.cube(x) as usize].push(x);
        }
        let mut probes = 0u64;
        for x in 0..lv.n_cubes() {
            for &y in &by_minus[fp.cube(x) as usize] {
                probes += 1;
                match gc.cubes.get(&(x, y)) {
                    None => bad.push(format!(
                        "{idx}: no cube composite {} +{i} {}",
                        lv.cube_label(x),
                        lv.cube_label(y)
                    )),
                    Some(&z) => {
                        if fm.cube(z) != fm.cube(x) || fp.cube(z) != fp.cube(y) {
                            bad.push(format!(
                                "{idx}: {} +{i} {} has wrong {i}-faces",
                                lv.cube_label(x),
                                lv.cube_label(y)
                            ));
                        }
                        for &k in idx.dirs() {
                            if k == i {
                                continue;
                            }
                            let fk = [
                                self.fmap(idx, k, Sign::Minus),
                                self.fmap(idx, k, Sign::Plus),
                            ];
                            let bcomp = &self.gc(&idx.without(k), i).cubes;
                            for m in fk {
                                if bcomp.get(&(m.cube(x), m.cube(y))).copied() != Some(m.cube(z)) {
                                    bad.push(format!(
                                        "{idx}: {}-face of {} +{i} {} is not the face \
                                         composite",
                                        k,
                                        lv.cube_label(x),
                                        lv.cube_label(y)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        if gc.cubes.len() as u64 != probes {
            bad.push(format!(
                "{idx}: +{i} cube table has {} entries but {} composable pairs",
                gc.cubes.len(),
                probes
            ));
        }
        ok &= bad.0.is_empty();
        rep.outcome(
            format!("tv{idx}/plus{i}/cubes"),
            "cube concatenation is total on composable pairs and satisfies the boundary laws",
            probes,
            CheckMethod::Exhaustive,
            bad.take(),
        );

        // Arrows.
        let mut bad = Wit::new();
        let mut by_minus: Vec<Vec<u32>> = vec![Vec::new(); blv.arrows.len()];
        for f in 0..lv.n_arrows() {
            by_minus[fm.arrow(f) as usize].push(f);
        }
        let mut probes = 0u64;
        for f in 0..lv.n_arrows() {
            for &g in &by_minus[fp.arrow(f) as usize] {
                probes += 1;
                match gc.arrows.get(&(f, g)) {
                    None => bad.push(format!(
                        "{idx}: no arrow composite {} +{i} {}",
                        lv.arrow_label(f),
                        lv.arrow_label(g)
                    )),
                    Some(&h) => {
                        let se = gc.cubes.get(&(lv.src(f), lv.src(g))).copied();
                        let te = gc.cubes.get(&(lv.tgt(f), lv.tgt(g))).copied();
                        if Some(lv.src(h)) != se || Some(lv.tgt(h)) != te {
                            bad.push(format!(
                                "{idx}: {} +{i} {} has wrong endpoints",
                                lv.arrow_label(f),
                                lv.arrow_label(g)
                            ));
                        }
                        if fm.arrow(h) != fm.arrow(f) || fp.arrow(h) != fp.arrow(g) {
                            bad.push(format!(
                                "{idx}: {} +{i} {} has wrong {i}-faces",
                                lv.arrow_label(f),
                                lv.arrow_label(g)
                            ));
                        }
                        for &k in idx.dirs() {
                            if k == i {
                                continue;
                            }
                            let bcomp = &self.gc(&idx.without(k), i).arrows;
                            for sign in Sign::BOTH {
                                let m = self.fmap(idx, k, sign);
                                if bcomp.get(&(m.arrow(f), m.arrow(g))).copied()
                                    != Some(m.arrow(h))
                                {
                                    bad.push(format!(
                                        "{idx}: {}-face of {} +{i} {} is not the face \
                                         composite",
                                        k,
                                        lv.arrow_label(f),
                                        lv.arrow_label(g)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        if gc.arrows.len() as u64 != probes {
            bad.push(format!(
                "{idx}: +{i} arrow table has {} entries but {} composable pairs",
                gc.arrows.len(),
                probes
            ));
        }
        ok &= bad.0.is_empty();
        rep.outcome(
            format!("tv{idx}/plus{i}/arrows"),
            "arrow concatenation is total on composable pairs and satisfies the boundary laws",
            probes,
            CheckMethod::Exhaustive,
            bad.take(),
        );

        self.bound_ok.insert((idx.clone(), i), ok);
    }

    /// `e₀x +_i e₀y = e₀(x +_i y)`.
    fn concat_units(&mut self, idx: &MultiIndex, i: u8, rep: &mut ValidationReport) {
        let lv = self.lv(idx);
        let gc = self.gc(idx, i);
        let mut bad = Wit::new();
        for (&(x, y), &z) in &gc.cubes {
            if gc.arrows.get(&(lv.ids[x as usize], lv.ids[y as usize])).copied()
                != Some(lv.ids[z as usize])
            {
                bad.push(format!(
                    "{idx}: e₀{} +{i} e₀{} ≠ e₀ of the composite",
                    lv.cube_label(x),
                    lv.cube_label(y)
                ));
            }
        }
        rep.outcome(
            format!("tv{idx}/plus{i}/units"),
            "concatenation of identity arrows is the identity of the concatenation",
            gc.cubes.len() as u64,
            CheckMethod::Exhaustive,
            bad.take(),
        );
    }

    /// `(f +₀ f') +_i (g +₀ g') = (f +_i g) +₀ (f' +_i g')`.
    fn concat_interchange0(&mut self, idx: &MultiIndex, i: u8, rep: &mut ValidationReport) {
        let lv = self.lv(idx);
        let gc = self.gc(idx, i);

        // Exact instance count via a join over the arrow table.
        let mut by_srcs: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for &(f, g) in gc.arrows.keys() {
            *by_srcs.entry((lv.src(f), lv.src(g))).or_insert(0) += 1;
        }
        let instances: u64 = gc
            .arrows
            .keys()
            .map(|&(f, g)| by_srcs.get(&(lv.tgt(f), lv.tgt(g))).copied().unwrap_or(0))
            .sum();

        let name = format!("tv{idx}/plus{i}/interchange0");
        if self.premise_for_reduction(idx) && *self.bound_ok.get(&(idx.clone(), i)).unwrap_or(&false)
        {
            rep.pass(
                name,
                "concatenation commutes with transversal composition (both sides are \
                 parallel with equal faces in a boundary-determined level)",
                instances,
                CheckMethod::FacewiseReduction,
            );
            return;
        }
        if instances > self.opts.exhaustive_budget {
            rep.fail(
                name,
                "concatenation commutes with transversal composition",
                instances,
                CheckMethod::Exhaustive,
                vec![format!(
                    "{idx}: {instances} instances exceed budget {}",
                    self.opts.exhaustive_budget
                )],
            );
            return;
        }

        let mut by_src: Vec<Vec<u32>> = vec![Vec::new(); lv.cubes.len()];
        for f in 0..lv.n_arrows() {
            by_src[lv.src(f) as usize].push(f);
        }
        let mut bad = Wit::new();
        for (&(f, g), &fg) in &gc.arrows {
            for &f2 in &by_src[lv.tgt(f) as usize] {
                for &g2 in &by_src[lv.tgt(g) as usize] {
                    if let Some(&f2g2) = gc.arrows.get(&(f2, g2)) {
                        let lhs = lv
                            .comp
                            .get(&(f, f2))
                            .and_then(|&ff| lv.comp.get(&(g, g2)).map(|&gg| (ff, gg)))
                            .and_then(|(ff, gg)| gc.arrows.get(&(ff, gg)))
                            .copied();
                        let rhs = lv.comp.get(&(fg, f2g2)).copied();
                        if lhs.is_none() || lhs != rhs {
                            bad.push(format!(
                                "{idx}: interchange with +₀ fails at ({}, {}; {}, {})",
                                lv.arrow_label(f),
                                lv.arrow_label(f2),
                                lv.arrow_label(g),
                                lv.arrow_label(g2)
                            ));
                        }
                    }
                }
            }
        }
        rep.outcome(
            format!("tv{idx}/plus{i}/interchange0"),
            "concatenation commutes with transversal composition",
            instances,
            CheckMethod::Exhaustive,
            bad.take(),
        );
    }

    /// Degeneracies distribute strictly over concatenations, on cubes and
    /// arrows: `e_j(x +_i y) = e_j x +_i e_j y` for `j ≠ i`.
    fn degen_strictness(&mut self, rep: &mut ValidationReport) {
        for idx in self.a.positive_indices() {
            if idx.dim() < 2 {
                continue;
            }
            for &j in idx.dirs() {
                let bidx = idx.without(j);
                let d = self.dmap(&idx, j);
                for &i in bidx.dirs() {
                    let src_gc = self.gc(&bidx, i);
                    let dst_gc = self.gc(&idx, i);
                    let blv = self.lv(&bidx);
                    let mut bad = Wit::new();
                    for (&(x, y), &z) in &src_gc.cubes {
                        if dst_gc.cubes.get(&(d.cube(x), d.cube(y))).copied() != Some(d.cube(z)) {
                            bad.push(format!(
                                "e{j}({} +{i} {}) ≠ e{j}(..) +{i} e{j}(..) at {idx}",
                                blv.cube_label(x),
                                blv.cube_label(y)
                            ));
                        }
                    }
                    for (&(f, g), &h) in &src_gc.arrows {
                        if dst_gc.arrows.get(&(d.arrow(f), d.arrow(g))).copied()
                            != Some(d.arrow(h))
                        {
                            bad.push(format!(
                                "e{j} does not distribute over +{i} at arrows ({}, {}) \
                                 into {idx}",
                                blv.arrow_label(f),
                                blv.arrow_label(g)
                            ));
                        }
                    }
                    rep.outcome(
                        format!("tv{idx}/degen{j}/strict-plus{i}"),
                        "degeneracies distribute over concatenation on the nose",
                        (src_gc.cubes.len() + src_gc.arrows.len()) as u64,
                        CheckMethod::Exhaustive,
                        bad.take(),
                    );
                }
            }
        }
    }

    // ------------------------------------------------------------------
    // Comparisons
    // ------------------------------------------------------------------

    fn comparisons(&mut self, rep: &mut ValidationReport) {
        for idx in self.a.positive_indices() {
            let homb = self.lv(&idx).hom_buckets();
            for &i in idx.dirs() {
                self.unitor_checks(&idx, i, &homb, rep);
                self.associator_checks(&idx, i, &homb, rep);
            }
            for (p, &i) in idx.dirs().iter().enumerate() {
                for &j in &idx.dirs()[p + 1..] {
                    self.interchanger_checks(&idx, i, j, &homb, rep);
                }
            }
        }
    }

    fn invertible(
        &self,
        lv: &TvCat,
        homb: &BTreeMap<(u32, u32), Vec<u32>>,
        f: u32,
    ) -> bool {
        let (s, t) = (lv.src(f), lv.tgt(f));
        homb.get(&(t, s)).map_or(false, |cands| {
            cands.iter().any(|&g| {
                lv.comp.get(&(f, g)).copied() == Some(lv.ids[s as usize])
                    && lv.comp.get(&(g, f)).copied() == Some(lv.ids[t as usize])
            })
        })
    }

    fn unitor_checks(
        &mut self,
        idx: &MultiIndex,
        i: u8,
        homb: &BTreeMap<(u32, u32), Vec<u32>>,
        rep: &mut ValidationReport,
    ) {
        let lv = self.lv(idx);
        let d = self.dmap(idx, i);
        let fm = self.fmap(idx, i, Sign::Minus);
        let fp = self.fmap(idx, i, Sign::Plus);

        for (tag, left) in [("unitor-l", true), ("unitor-r", false)] {
            let table = if left {
                &self.a.lunitors[&(idx.clone(), i)]
            } else {
                &self.a.runitors[&(idx.clone(), i)]
            };
            let glyph = if left { "λ" } else { "ρ" };

            // Boundary, speciality, invertibility.
            let mut bad = Wit::new();
            for x in 0..lv.n_cubes() {
                let res = (|| -> Result<()> {
                    let u = table[x as usize];
                    let e = if left {
                        d.cube(fm.cube(x))
                    } else {
                        d.cube(fp.cube(x))
                    };
                    let src = if left {
                        self.ccube(idx, i, e, x)?
                    } else {
                        self.ccube(idx, i, x, e)?
                    };
                    if lv.src(u) != src || lv.tgt(u) != x {
                        return Err(KernelError::Malformed("wrong endpoints".into()));
                    }
                    for sign in Sign::BOTH {
                        let m = self.fmap(idx, i, sign);
                        let blv = self.lv(&idx.without(i));
                        if m.arrow(u) != blv.ids[m.cube(x) as usize] {
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
                        let subtab = if left {
                            &self.a.lunitors[&(sub.clone(), i)]
                        } else {
                            &self.a.runitors[&(sub.clone(), i)]
                        };
                        for sign in Sign::BOTH {
                            let m = self.fmap(idx, k, sign);
                            if m.arrow(u) != subtab[m.cube(x) as usize] {
                                return Err(KernelError::Malformed(format!(
                                    "{k}-face is not the unitor of the face"
                                )));
                            }
                        }
                    }
                    if !self.invertible(lv, homb, u) {
                        return Err(KernelError::Malformed("not invertible".into()));
                    }
                    Ok(())
                })();
                if let Err(e) = res {
                    bad.push_err(&format!("{idx}: {glyph}{i}({})", lv.cube_label(x)), e);
                }
            }
            rep.outcome(
                format!("tv{idx}/{tag}{i}/cells"),
                "the unitor is an invertible special arrow from the degenerate \
                 concatenation to the cube, compatible with faces",
                lv.n_cubes() as u64,
                CheckMethod::Exhaustive,
                bad.take(),
            );

            // Naturality.
            let mut bad = Wit::new();
            for f in 0..lv.n_arrows() {
                let res = (|| -> Result<()> {
                    let (x, y) = (lv.src(f), lv.tgt(f));
                    let ef = if left {
                        d.arrow(fm.arrow(f))
                    } else {
                        d.arrow(fp.arrow(f))
                    };
                    let wide = if left {
                        self.carr(idx, i, ef, f)?
                    } else {
                        self.carr(idx, i, f, ef)?
                    };
                    let lhs = lv.compose0(wide, table[y as usize])?;
                    let rhs = lv.compose0(table[x as usize], f)?;
                    if lhs != rhs {
                        return Err(KernelError::Malformed("naturality square fails".into()));
                    }
                    Ok(())
                })();
                if let Err(e) = res {
                    bad.push_err(&format!("{idx}: {glyph}{i} at {}", lv.arrow_label(f)), e);
                }
            }
            rep.outcome(
                format!("tv{idx}/{tag}{i}/natural"),
                "the unitor is natural in its argument",
                lv.n_arrows() as u64,
                CheckMethod::Exhaustive,
                bad.take(),
            );
        }
    }

    fn associator_checks(
        &mut self,
        idx: &MultiIndex,
        i: u8,
        homb: &BTreeMap<(u32, u32), Vec<u32>>,
        rep: &mut ValidationReport,
    ) {
        let lv = self.lv(idx);
        let gc = self.gc(idx, i);
        let table = &self.a.associators[&(idx.clone(), i)];

        // Key set = composable triples; boundary; speciality; invertibility.
        let mut bad = Wit::new();
        let mut by_first: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &(x, y) in gc.cubes.keys() {
            by_first.entry(x).or_default().push(y);
        }
        let mut triples = 0u64;
        for (&(x, y), &xy) in &gc.cubes {
            let Some(zs) = by_first.get(&y) else { continue };
            for &z in zs {
                triples += 1;
                let res = (|| -> Result<()> {
                    let u = *table.get(&(x, y, z)).ok_or_else(|| {
                        KernelError::MissingEntry("no associator entry".into())
                    })?;
                    let yz = self.ccube(idx, i, y, z)?;
                    let src = self.ccube(idx, i, x, yz)?;
                    let tgt = self.ccube(idx, i, xy, z)?;
                    if lv.src(u) != src || lv.tgt(u) != tgt {
                        return Err(KernelError::Malformed("wrong endpoints".into()));
                    }
                    for sign in Sign::BOTH {
                        let m = self.fmap(idx, i, sign);
                        let blv = self.lv(&idx.without(i));
                        let expect = match sign {
                            Sign::Minus => blv.ids[m.cube(x) as usize],
                            Sign::Plus => blv.ids[m.cube(z) as usize],
                        };
                        if m.arrow(u) != expect {
                            return Err(KernelError::Malformed(format!(
                                "{i}-face is not an identity"
                            )));
                        }
                    }
                    for &k in idx.dirs() {
                        if k == i {
                            continue;
                        }
                        let subtab = &self.a.associators[&(idx.without(k), i)];
                        for sign in Sign::BOTH {
                            let m = self.fmap(idx, k, sign);
                            if subtab.get(&(m.cube(x), m.cube(y), m.cube(z))).copied()
                                != Some(m.arrow(u))
                            {
                                return Err(KernelError::Malformed(format!(
                                    "{k}-face is not the associator of the faces"
                                )));
                            }
                        }
                    }
                    if !self.invertible(lv, homb, u) {
                        return Err(KernelError::Malformed("not invertible".into()));
                    }
                    Ok(())
                })();
                if let Err(e) = res {
                    bad.push_err(
                        &format!(
                            "{idx}: κ{i}({},{},{})",
                            lv.cube_label(x),
                            lv.cube_label(y),
                            lv.cube_label(z)
                        ),
                        e,
                    );
                }
            }
        }
        if table.len() as u64 != triples {
            bad.push(format!(
                "{idx}: κ{i} has {} entries but {} composable triples",
                table.len(),
                triples
            ));
        }
        rep.outcome(
            format!("tv{idx}/assoc{i}/cells"),
            "the associator is an invertible special arrow between the two bracketings, \
             defined exactly on composable triples and compatible with faces",
            triples,
            CheckMethod::Exhaustive,
            bad.take(),
        );

        // Naturality, reduced or swept.
        let mut out_the: Vec<u64> = vec![0; lv.arrows.len()];
        let mut arr_by_first: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &(f, g) in gc.arrows.keys() {
            out_the[f as usize] += 1;
            arr_by_first.entry(f).or_default().push(g);
        }
        let instances: u64 = gc
            .arrows
            .keys()
            .map(|&(_, g)| out_the[g as usize])
            .sum();
        let name = format!("tv{idx}/assoc{i}/natural");
        if self.premise_for_reduction(idx)
            && *self.bound_ok.get(&(idx.clone(), i)).unwrap_or(&false)
        {
            rep.pass(
                name,
                "the associator is natural in all three arguments (both sides are \
                 parallel with equal faces in a boundary-determined level)",
                instances,
                CheckMethod::FacewiseReduction,
            );
        } else if instances > self.opts.exhaustive_budget {
            rep.fail(
                name,
                "the associator is natural in all three arguments",
                instances,
                CheckMethod::Exhaustive,
                vec![format!(
                    "{idx}: {instances} instances exceed budget {}",
                    self.opts.exhaustive_budget
                )],
            );
        } else {
            let mut bad = Wit::new();
            for (&(f, g), _) in &gc.arrows {
                let Some(hs) = arr_by_first.get(&g) else { continue };
                for &h in hs {
                    let res = (|| -> Result<()> {
                        let gh = self.carr(idx, i, g, h)?;
                        let f_gh = self.carr(idx, i, f, gh)?;
                        let fg = self.carr(idx, i, f, g)?;
                        let fg_h = self.carr(idx, i, fg, h)?;
                        let k_src = *table
                            .get(&(lv.src(f), lv.src(g), lv.src(h)))
                            .ok_or_else(|| KernelError::MissingEntry("κ at sources".into()))?;
                        let k_tgt = *table
                            .get(&(lv.tgt(f), lv.tgt(g), lv.tgt(h)))
                            .ok_or_else(|| KernelError::MissingEntry("κ at targets".into()))?;
                        if lv.compose0(f_gh, k_tgt)? != lv.compose0(k_src, fg_h)? {
                            return Err(KernelError::Malformed("naturality square fails".into()));
                        }
                        Ok(())
                    })();
                    if let Err(e) = res {
                        bad.push_err(
                            &format!(
                                "{idx}: κ{i} at ({}, {}, {})",
                                lv.arrow_label(f),
                                lv.arrow_label(g),
                                lv.arrow_label(h)
                            ),
                            e,
                        );
                    }
                }
            }
            rep.outcome(
                name,
                "the associator is natural in all three arguments",
                instances,
                CheckMethod::Exhaustive,
                bad.take(),
            );
        }
    }

    /// Enumerate interchange-composable cube quadruples `(x, y, z, u)`.
    fn chi_instances(&self, idx: &MultiIndex, i: u8, j: u8) -> Vec<(u32, u32, u32, u32)> {
        let ti = &self.gc(idx, i).cubes;
        let tj = &self.gc(idx, j).cubes;
        let mut out = Vec::new();
        for &(x, y) in ti.keys() {
            for &(z, u) in ti.keys() {
                if tj.contains_key(&(x, z)) && tj.contains_key(&(y, u)) {
                    out.push((x, y, z, u));
                }
            }
        }
        out
    }

    fn interchanger_checks(
        &mut self,
        idx: &MultiIndex,
        i: u8,
        j: u8,
        homb: &BTreeMap<(u32, u32), Vec<u32>>,
        rep: &mut ValidationReport,
    ) {
        let lv = self.lv(idx);
        let table = &self.a.interchangers[&(idx.clone(), i, j)];
        let quads = self.chi_instances(idx, i, j);

        let mut bad = Wit::new();
        for &(x, y, z, u) in &quads {
            let res = (|| -> Result<()> {
                let c = *table.get(&(x, y, z, u)).ok_or_else(|| {
                    KernelError::MissingEntry("no interchanger entry".into())
                })?;
                let xy = self.ccube(idx, i, x, y)?;
                let zu = self.ccube(idx, i, z, u)?;
                let xz = self.ccube(idx, j, x, z)?;
                let yu = self.ccube(idx, j, y, u)?;
                let src = self.ccube(idx, j, xy, zu)?;
                let tgt = self.ccube(idx, i, xz, yu)?;
                if lv.src(c) != src || lv.tgt(c) != tgt {
                    return Err(KernelError::Malformed("wrong endpoints".into()));
                }
                // Speciality in i and in j.
                for (dir, other) in [(i, j), (j, i)] {
                    for sign in Sign::BOTH {
                        let m = self.fmap(idx, dir, sign);
                        let blv = self.lv(&idx.without(dir));
                        let sub = &self.gc(&idx.without(dir), other).cubes;
                        let pair = match (dir == i, sign) {
                            (true, Sign::Minus) => (m.cube(x), m.cube(z)),
                            (true, Sign::Plus) => (m.cube(y), m.cube(u)),
                            (false, Sign::Minus) => (m.cube(x), m.cube(y)),
                            (false, Sign::Plus) => (m.cube(z), m.cube(u)),
                        };
                        let face_cube = *sub.get(&pair).ok_or_else(|| {
                            KernelError::MissingEntry("face composite".into())
                        })?;
                        if m.arrow(c) != blv.ids[face_cube as usize] {
                            return Err(KernelError::Malformed(format!(
                                "{dir}-face is not an identity"
                            )));
                        }
                    }
                }
                for &k in idx.dirs() {
                    if k == i || k == j {
                        continue;
                    }
                    let subtab = &self.a.interchangers[&(idx.without(k), i, j)];
                    for sign in Sign::BOTH {
                        let m = self.fmap(idx, k, sign);
                        if subtab
                            .get(&(m.cube(x), m.cube(y), m.cube(z), m.cube(u)))
                            .copied()
                            != Some(m.arrow(c))
                        {
                            return Err(KernelError::Malformed(format!(
                                "{k}-face is not the interchanger of the faces"
                            )));
                        }
                    }
                }
                if self.a.invertible_interchangers && !self.invertible(lv, homb, c) {
                    return Err(KernelError::Malformed("not invertible".into()));
                }
                Ok(())
            })();
            if let Err(e) = res {
                bad.push_err(
                    &format!(
                        "{idx}: χ{i}{j}({},{},{},{})",
                        lv.cube_label(x),
                        lv.cube_label(y),
                        lv.cube_label(z),
                        lv.cube_label(u)
                    ),
                    e,
                );
            }
        }
        if table.len() != quads.len() {
            bad.push(format!(
                "{idx}: χ{i}{j} has {} entries but {} interchange-composable quadruples",
                table.len(),
                quads.len()
            ));
        }
        let inv_text = if self.a.invertible_interchangers {
            "an invertible"
        } else {
            "a directed"
        };
        rep.outcome(
            format!("tv{idx}/inter{i}{j}/cells"),
            format!(
                "the interchanger is {inv_text} special arrow from the row-wise to the \
                 column-wise concatenation, defined exactly on interchange-composable \
                 quadruples and compatible with faces"
            ),
            quads.len() as u64,
            CheckMethod::Exhaustive,
            bad.take(),
        );

        // Naturality, reduced or swept.
        let ti = &self.gc(idx, i).arrows;
        let tj = &self.gc(idx, j).arrows;
        let name = format!("tv{idx}/inter{i}{j}/natural");
        let base = ti.len() as u64;
        if self.premise_for_reduction(idx)
            && *self.bound_ok.get(&(idx.clone(), i)).unwrap_or(&false)
            && *self.bound_ok.get(&(idx.clone(), j)).unwrap_or(&false)
        {
            rep.pass(
                name,
                "the interchanger is natural in all four arguments, one equation per pair \
                 of i-composable arrow pairs matched along j (both sides are parallel with \
                 equal faces in a boundary-determined level)",
                base,
                CheckMethod::FacewiseReduction,
            );
            return;
        }

        let mut bad = Wit::new();
        let mut instances = 0u64;
        let mut over = false;
        'sweep: for (&(f, g), &fg) in ti {
            for (&(h, k), &hk) in ti {
                if !tj.contains_key(&(f, h)) || !tj.contains_key(&(g, k)) {
                    continue;
                }
                instances += 1;
                if instances > self.opts.exhaustive_budget {
                    over = true;
                    break 'sweep;
                }
                let res = (|| -> Result<()> {
                    let rows = self.carr(idx, j, fg, hk)?;
                    let fh = self.carr(idx, j, f, h)?;
                    let gk = self.carr(idx, j, g, k)?;
                    let cols = self.carr(idx, i, fh, gk)?;
                    let c_src = *table
                        .get(&(lv.src(f), lv.src(g), lv.src(h), lv.src(k)))
                        .ok_or_else(|| KernelError::MissingEntry("χ at sources".into()))?;
                    let c_tgt = *table
                        .get(&(lv.tgt(f), lv.tgt(g), lv.tgt(h), lv.tgt(k)))
                        .ok_or_else(|| KernelError::MissingEntry("χ at targets".into()))?;
                    if lv.compose0(rows, c_tgt)? != lv.compose0(c_src, cols)? {
                        return Err(KernelError::Malformed("naturality square fails".into()));
                    }
                    Ok(())
                })();
                if let Err(e) = res {
                    bad.push_err(
                        &format!(
                            "{idx}: χ{i}{j} at ({}, {}, {}, {})",
                            lv.arrow_label(f),
                            lv.arrow_label(g),
                            lv.arrow_label(h),
                            lv.arrow_label(k)
                        ),
                        e,
                    );
                }
            }
        }
        if over {
            bad.push(format!(
                "{idx}: naturality sweep exceeds budget {}",
                self.opts.exhaustive_budget
            ));
        }
        rep.outcome(
            name,
            "the interchanger is natural in all four arguments",
            instances,
            CheckMethod::Exhaustive,
            bad.take(),
        );
    }

    // ------------------------------------------------------------------
    // Coherence
    // ------------------------------------------------------------------

    fn coherence(&mut self, rep: &mut ValidationReport) {
        for idx in self.a.positive_indices() {
            for &i in idx.dirs() {
                self.pentagon(&idx, i, rep);
                self.triangle(&idx, i, rep);
            }
            for (p, &i) in idx.dirs().iter().enumerate() {
                for &j in &idx.dirs()[p + 1..] {
                    self.hexagons(&idx, i, j, rep);
                    self.chi_units(&idx, i, j, rep);
                }
            }
        }
    }

    fn pentagon(&mut self, idx: &MultiIndex, i: u8, rep: &mut ValidationReport) {
        let lv = self.lv(idx);
        let gc = self.gc(idx, i);
        let table = &self.a.associators[&(idx.clone(), i)];
        let mut by_first: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &(x, y) in gc.cubes.keys() {
            by_first.entry(x).or_default().push(y);
        }

        let mut bad = Wit::new();
        let mut instances = 0u64;
        for (&(w, x), _) in &gc.cubes {
            let Some(ys) = by_first.get(&x) else { continue };
            for &y in ys {
                let Some(zs) = by_first.get(&y) else { continue };
                for &z in zs {
                    instances += 1;
                    let res = (|| -> Result<()> {
                        let yz = self.ccube(idx, i, y, z)?;
                        let xy = self.ccube(idx, i, x, y)?;
                        let wx = self.ccube(idx, i, w, x)?;
                        let k = |a: u32, b: u32, c: u32| -> Result<u32> {
                            table.get(&(a, b, c)).copied().ok_or_else(|| {
                                KernelError::MissingEntry(format!("κ{i}({a},{b},{c})"))
                            })
                        };
                        let lhs = lv.chain0(&[k(w, x, yz)?, k(wx, y, z)?])?;
                        let inner = self.carr(idx, i, lv.ids[w as usize], k(x, y, z)?)?;
                        let outer = self.carr(idx, i, k(w, x, y)?, lv.ids[z as usize])?;
                        let rhs = lv.chain0(&[inner, k(w, xy, z)?, outer])?;
                        if lhs != rhs {
                            return Err(KernelError::Malformed("pentagon fails".into()));
                        }
                        Ok(())
                    })();
                    if let Err(e) = res {
                        bad.push_err(
                            &format!(
                                "{idx}: pentagon at ({}, {}, {}, {})",
                                lv.cube_label(w),
                                lv.cube_label(x),
                                lv.cube_label(y),
                                lv.cube_label(z)
                            ),
                            e,
                        );
                    }
                }
            }
        }
        rep.outcome(
            format!("tv{idx}/assoc{i}/pentagon"),
            "the two rebracketing paths on quadruple concatenations agree",
            instances,
            CheckMethod::Exhaustive,
            bad.take(),
        );
    }

    fn triangle(&mut self, idx: &MultiIndex, i: u8, rep: &mut ValidationReport) {
        let lv = self.lv(idx);
        let gc = self.gc(idx, i);
        let d = self.dmap(idx, i);
        let fp = self.fmap(idx, i, Sign::Plus);
        let lun = &self.a.lunitors[&(idx.clone(), i)];
        let run = &self.a.runitors[&(idx.clone(), i)];
        let assoc = &self.a.associators[&(idx.clone(), i)];

        let mut bad = Wit::new();
        for &(x, y) in gc.cubes.keys() {
            let res = (|| -> Result<()> {
                let m = d.cube(fp.cube(x));
                let k = *assoc.get(&(x, m, y)).ok_or_else(|| {
                    KernelError::MissingEntry("κ at the unit triple".into())
                })?;
                let right = self.carr(idx, i, run[x as usize], lv.ids[y as usize])?;
                let lhs = lv.compose0(k, right)?;
                let rhs = self.carr(idx, i, lv.ids[x as usize], lun[y as usize])?;
                if lhs != rhs {
                    return Err(KernelError::Malformed("triangle fails".into()));
                }
                Ok(())
            })();
            if let Err(e) = res {
                bad.push_err(
                    &format!(
                        "{idx}: triangle at ({}, {})",
                        lv.cube_label(x),
                        lv.cube_label(y)
                    ),
                    e,
                );
            }
        }
        rep.outcome(
            format!("tv{idx}/unitors{i}/triangle"),
            "the associator at an interposed unit reduces to the unitors",
            gc.cubes.len() as u64,
            CheckMethod::Exhaustive,
            bad.take(),
        );
    }

    fn hexagons(&mut self, idx: &MultiIndex, i: u8, j: u8, rep: &mut ValidationReport) {
        let lv = self.lv(idx);
        let ti = &self.gc(idx, i).cubes;
        let tj = &self.gc(idx, j).cubes;
        let chi = &self.a.interchangers[&(idx.clone(), i, j)];
        let ki = &self.a.associators[&(idx.clone(), i)];
        let kj = &self.a.associators[&(idx.clone(), j)];
        let quads = self.chi_instances(idx, i, j);

        let cget = |t: &BTreeMap<(u32, u32), u32>, x: u32, y: u32| -> Result<u32> {
            t.get(&(x, y)).copied().ok_or_else(|| {
                KernelError::MissingEntry(format!("cube composite ({x},{y})"))
            })
        };
        let chiget = |x: u32, y: u32, z: u32, u: u32| -> Result<u32> {
            chi.get(&(x, y, z, u)).copied().ok_or_else(|| {
                KernelError::MissingEntry(format!("χ{i}{j}({x},{y},{z},{u})"))
            })
        };

        // Hexagon with κ_j: three i-concatenations stacked along j.
        let mut bad = Wit::new();
        let mut instances = 0u64;
        for &(x, y, z, u) in &quads {
            // Third row (w, v) under (z, u).
            for (&(w, v), _) in ti.iter() {
                if !tj.contains_key(&(z, w)) || !tj.contains_key(&(u, v)) {
                    continue;
                }
                instances += 1;
                let res = (|| -> Result<()> {
                    let xiy = cget(ti, x, y)?;
                    let ziu = cget(ti, z, u)?;
                    let wiv = cget(ti, w, v)?;
                    let zjw = cget(tj, z, w)?;
                    let ujv = cget(tj, u, v)?;
                    let kgetj = |a: u32, b: u32, c: u32| -> Result<u32> {
                        kj.get(&(a, b, c)).copied().ok_or_else(|| {
                            KernelError::MissingEntry(format!("κ{j}({a},{b},{c})"))
                        })
                    };
                    let p1a = self.carr(idx, j, lv.ids[xiy as usize], chiget(z, u, w, v)?)?;
                    let p1b = chiget(x, y, zjw, ujv)?;
                    let p1c = self.carr(idx, i, kgetj(x, z, w)?, kgetj(y, u, v)?)?;
                    let lhs = lv.chain0(&[p1a, p1b, p1c])?;
                    let p2a = kgetj(xiy, ziu, wiv)?;
                    let p2b = self.carr(idx, j, chiget(x, y, z, u)?, lv.ids[wiv as usize])?;
                    let xjz = cget(tj, x, z)?;
                    let yju = cget(tj, y, u)?;
                    let p2c = chiget(xjz, yju, w, v)?;
                    let rhs = lv.chain0(&[p2a, p2b, p2c])?;
                    if lhs != rhs {
                        return Err(KernelError::Malformed("hexagon fails".into()));
                    }
                    Ok(())
                })();
                if let Err(e) = res {
                    bad.push_err(
                        &format!(
                            "{idx}: hexagon(κ{j}) at ({},{},{},{},{},{})",
                            lv.cube_label(x),
                            lv.cube_label(y),
                            lv.cube_label(z),
                            lv.cube_label(u),
                            lv.cube_label(w),
                            lv.cube_label(v)
                        ),
                        e,
                    );
                }
            }
        }
        rep.outcome(
            format!("tv{idx}/inter{i}{j}/hexagon-outer"),
            "interchange of a triple stack matches the associator of the outer direction",
            instances,
            CheckMethod::Exhaustive,
            bad.take(),
        );

        // Hexagon with κ_i: two i-composable triples matched along j.
        let mut bad = Wit::new();
        let mut instances = 0u64;
        let mut by_first: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &(x, y) in ti.keys() {
            by_first.entry(x).or_default().push(y);
        }
        for (&(x, y), _) in ti {
            let Some(zs) = by_first.get(&y) else { continue };
            for &z in zs {
                for (&(x2, y2), _) in ti {
                    if !tj.contains_key(&(x, x2)) || !tj.contains_key(&(y, y2)) {
                        continue;
                    }
                    let Some(z2s) = by_first.get(&y2) else { continue };
                    for &z2 in z2s {
                        if !tj.contains_key(&(z, z2)) {
                            continue;
                        }
                        instances += 1;
                        let res = (|| -> Result<()> {
                            let kgeti = |a: u32, b: u32, c: u32| -> Result<u32> {
                                ki.get(&(a, b, c)).copied().ok_or_else(|| {
                                    KernelError::MissingEntry(format!("κ{i}({a},{b},{c})"))
                                })
                            };
                            let xy = cget(ti, x, y)?;
                            let x2y2 = cget(ti, x2, y2)?;
                            let yz = cget(ti, y, z)?;
                            let y2z2 = cget(ti, y2, z2)?;
                            let xjx2 = cget(tj, x, x2)?;
                            let yjy2 = cget(tj, y, y2)?;
                            let zjz2 = cget(tj, z, z2)?;
                            let p1a = self.carr(idx, j, kgeti(x, y, z)?, kgeti(x2, y2, z2)?)?;
                            let p1b = chiget(xy, z, x2y2, z2)?;
                            let p1c =
                                self.carr(idx, i, chiget(x, y, x2, y2)?, lv.ids[zjz2 as usize])?;
                            let lhs = lv.chain0(&[p1a, p1b, p1c])?;
                            let p2a = chiget(x, yz, x2, y2z2)?;
                            let p2b =
                                self.carr(idx, i, lv.ids[xjx2 as usize], chiget(y, z, y2, z2)?)?;
                            let p2c = kgeti(xjx2, yjy2, zjz2)?;
                            let rhs = lv.chain0(&[p2a, p2b, p2c])?;
                            if lhs != rhs {
                                return Err(KernelError::Malformed("hexagon fails".into()));
                            }
                            Ok(())
                        })();
                        if let Err(e) = res {
                            bad.push_err(
                                &format!(
                                    "{idx}: hexagon(κ{i}) at ({},{},{};{},{},{})",
                                    lv.cube_label(x),
                                    lv.cube_label(y),
                                    lv.cube_label(z),
                                    lv.cube_label(x2),
                                    lv.cube_label(y2),
                                    lv.cube_label(z2)
                                ),
                                e,
                            );
                        }
                    }
                }
            }
        }
        rep.outcome(
            format!("tv{idx}/inter{i}{j}/hexagon-inner"),
            "interchange of matched triples matches the associator of the inner direction",
            instances,
            CheckMethod::Exhaustive,
            bad.take(),
        );
    }

    fn chi_units(&mut self, idx: &MultiIndex, i: u8, j: u8, rep: &mut ValidationReport) {
        let lv = self.lv(idx);
        let ti = &self.gc(idx, i).cubes;
        let tj = &self.gc(idx, j).cubes;
        let chi = &self.a.interchangers[&(idx.clone(), i, j)];
        let chiget = |x: u32, y: u32, z: u32, u: u32| -> Result<u32> {
            chi.get(&(x, y, z, u)).copied().ok_or_else(|| {
                KernelError::MissingEntry(format!("χ{i}{j}({x},{y},{z},{u})"))
            })
        };

        // Unitors of the outer direction j over an i-concatenation.
        let dj = self.dmap(idx, j);
        let fjm = self.fmap(idx, j, Sign::Minus);
        let fjp = self.fmap(idx, j, Sign::Plus);
        let lj = &self.a.lunitors[&(idx.clone(), j)];
        let rj = &self.a.runitors[&(idx.clone(), j)];
        let mut bad = Wit::new();
        for (&(z, u), &ziu) in ti {
            let res = (|| -> Result<()> {
                let ez = dj.cube(fjm.cube(z));
                let eu = dj.cube(fjm.cube(u));
                let lhs = lv.compose0(
                    chiget(ez, eu, z, u)?,
                    self.carr(idx, i, lj[z as usize], lj[u as usize])?,
                )?;
                if lhs != lj[ziu as usize] {
                    return Err(KernelError::Malformed("λ-compatibility fails".into()));
                }
                let ez2 = dj.cube(fjp.cube(z));
                let eu2 = dj.cube(fjp.cube(u));
                let lhs2 = lv.compose0(
                    chiget(z, u, ez2, eu2)?,
                    self.carr(idx, i, rj[z as usize], rj[u as usize])?,
                )?;
                if lhs2 != rj[ziu as usize] {
                    return Err(KernelError::Malformed("ρ-compatibility fails".into()));
                }
                Ok(())
            })();
            if let Err(e) = res {
                bad.push_err(
                    &format!(
                        "{idx}: χ{i}{j}-unit({j}) at ({}, {})",
                        lv.cube_label(z),
                        lv.cube_label(u)
                    ),
                    e,
                );
            }
        }
        rep.outcome(
            format!("tv{idx}/inter{i}{j}/units-outer"),
            "the interchanger at degenerate outer rows reduces to the outer unitors",
            2 * ti.len() as u64,
            CheckMethod::Exhaustive,
            bad.take(),
        );

        // Unitors of the inner direction i over a j-concatenation.
        let di = self.dmap(idx, i);
        let fim = self.fmap(idx, i, Sign::Minus);
        let fip = self.fmap(idx, i, Sign::Plus);
        let li = &self.a.lunitors[&(idx.clone(), i)];
        let ri = &self.a.runitors[&(idx.clone(), i)];
        let mut bad = Wit::new();
        for (&(y, u), &yju) in tj {
            let res = (|| -> Result<()> {
                let ey = di.cube(fim.cube(y));
                let eu = di.cube(fim.cube(u));
                let lhs = lv.compose0(chiget(ey, y, eu, u)?, li[yju as usize])?;
                let rhs = self.carr(idx, j, li[y as usize], li[u as usize])?;
                if lhs != rhs {
                    return Err(KernelError::Malformed("λ-compatibility fails".into()));
                }
                let ey2 = di.cube(fip.cube(y));
                let eu2 = di.cube(fip.cube(u));
                let lhs2 = lv.compose0(chiget(y, ey2, u, eu2)?, ri[yju as usize])?;
                let rhs2 = self.carr(idx, j, ri[y as usize], ri[u as usize])?;
                if lhs2 != rhs2 {
                    return Err(KernelError::Malformed("ρ-compatibility fails".into()));
                }
                Ok(())
            })();
            if let Err(e) = res {
                bad.push_err(
                    &format!(
                        "{idx}: χ{i}{j}-unit({i}) at ({}, {})",
                        lv.cube_label(y),
                        lv.cube_label(u)
                    ),
                    e,
                );
            }
        }
        rep.outcome(
            format!("tv{idx}/inter{i}{j}/units-inner"),
            "the interchanger at degenerate inner columns reduces to the inner unitors",
            2 * tj.len() as u64,
            CheckMethod::Exhaustive,
            bad.take(),
        );
    }
}
