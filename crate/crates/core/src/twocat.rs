//! Finite strict 2-categories with fully tabulated composition.
//!
//! A [`FiniteTwoCategory`] lists its objects, 1-cells and 2-cells explicitly
//! and stores every composite in lookup tables, so all axioms are decidable
//! by exhaustion.  Conventions used throughout the crate:
//!
//! * composition is written in *diagrammatic* order: `comp1(f, g)` is "f then
//!   g" (classically g∘f), and `vcomp(a, b)` for `a: f → g`, `b: g → h` is
//!   the vertical composite `f → h`;
//! * `whisker_l(s, a)` post-whiskers: for `a: f → f'` with `f, f': A → B` and
//!   `s: B → C` it is `s·a: sf → sf'`;
//! * `whisker_r(a, r)` pre-whiskers: for `r: A' → A` it is `a·r: fr → f'r`.
//!
//! Two 2-cells are equal exactly when their ids are equal; validators verify
//! that the tables respect boundaries so this is sound.

use std::collections::BTreeMap;

use crate::error::{KernelError, Result};
use crate::report::{CheckMethod, ValidationReport};

/// Index of an object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub u32);

/// Index of a 1-cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OneId(pub u32);

/// Index of a 2-cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoId(pub u32);

/// A 1-cell: a named arrow between objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneCell {
    pub name: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// A 2-cell between parallel 1-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCell {
    pub name: String,
    pub src: OneId,
    pub tgt: OneId,
}

/// A finite strict 2-category with tabulated composition.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FiniteTwoCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub one_cells: Vec<OneCell>,
    pub two_cells: Vec<TwoCell>,
    /// Identity 1-cell per object.
    pub id_one: Vec<OneId>,
    /// Identity 2-cell per 1-cell.
    pub id_two: Vec<TwoId>,
    /// `(f, g) ↦ "f then g"` for `tgt f = src g`.
    pub comp1: BTreeMap<(OneId, OneId), OneId>,
    /// `(a, b) ↦ a ⊗ b` for `tgt a = src b` (vertical, diagrammatic).
    pub vcomp: BTreeMap<(TwoId, TwoId), TwoId>,
    /// `(s, a) ↦ s·a` for `src s = tgt(boundary of a)`.
    pub whisker_l: BTreeMap<(OneId, TwoId), TwoId>,
    /// `(a, r) ↦ a·r` for `tgt r = src(boundary of a)`.
    pub whisker_r: BTreeMap<(TwoId, OneId), TwoId>,
}

impl FiniteTwoCategory {
    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn src1(&self, f: OneId) -> ObjId {
        self.one_cells[f.0 as usize].src
    }

    pub fn tgt1(&self, f: OneId) -> ObjId {
        self.one_cells[f.0 as usize].tgt
    }

    pub fn src2(&self, a: TwoId) -> OneId {
        self.two_cells[a.0 as usize].src
    }

    pub fn tgt2(&self, a: TwoId) -> OneId {
        self.two_cells[a.0 as usize].tgt
    }

    pub fn obj_name(&self, x: ObjId) -> &str {
        &self.objects[x.0 as usize]
    }

    pub fn one_name(&self, f: OneId) -> &str {
        &self.one_cells[f.0 as usize].name
    }

    pub fn two_name(&self, a: TwoId) -> &str {
        &self.two_cells[a.0 as usize].name
    }

    /// "f then g"; errors when not composable or the table is incomplete.
    pub fn compose1(&self, f: OneId, g: OneId) -> Result<OneId> {
        if self.tgt1(f) != self.src1(g) {
            return Err(KernelError::NotComposable {
                lhs: self.one_name(f).into(),
                rhs: self.one_name(g).into(),
                dir: 1,
            });
        }
        self.comp1.get(&(f, g)).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!(
                "comp1({}, {})",
                self.one_name(f),
                self.one_name(g)
            ))
        })
    }

    /// Vertical composite `a ⊗ b` for `a: f → g`, `b: g → h`.
    pub fn vcompose(&self, a: TwoId, b: TwoId) -> Result<TwoId> {
        if self.tgt2(a) != self.src2(b) {
            return Err(KernelError::NotComposable {
                lhs: self.two_name(a).into(),
                rhs: self.two_name(b).into(),
                dir: 2,
            });
        }
        self.vcomp.get(&(a, b)).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!(
                "vcomp({}, {})",
                self.two_name(a),
                self.two_name(b)
            ))
        })
    }

    /// Post-whisker `s·a`.
    pub fn whisk_l(&self, s: OneId, a: TwoId) -> Result<TwoId> {
        if self.src1(s) != self.tgt1(self.src2(a)) {
            return Err(KernelError::NotComposable {
                lhs: self.one_name(s).into(),
                rhs: self.two_name(a).into(),
                dir: 1,
            });
        }
        self.whisker_l.get(&(s, a)).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!(
                "whisker_l({}, {})",
                self.one_name(s),
                self.two_name(a)
            ))
        })
    }

    /// Pre-whisker `a·r`.
    pub fn whisk_r(&self, a: TwoId, r: OneId) -> Result<TwoId> {
        if self.tgt1(r) != self.src1(self.src2(a)) {
            return Err(KernelError::NotComposable {
                lhs: self.two_name(a).into(),
                rhs: self.one_name(r).into(),
                dir: 1,
            });
        }
        self.whisker_r.get(&(a, r)).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!(
                "whisker_r({}, {})",
                self.two_name(a),
                self.one_name(r)
            ))
        })
    }

    /// Horizontal composite of `a: f → f': A → B` and `b: g → g': B → C`,
    /// evaluated as `(g·a) ⊗ (b·f')`.  Interchange (checked by the validator)
    /// makes the other bracketing equal.
    pub fn hcompose(&self, a: TwoId, b: TwoId) -> Result<TwoId> {
        let g = self.src2(b);
        let f_tgt = self.tgt2(a);
        let lhs = self.whisk_l(g, a)?;
        let rhs = self.whisk_r(b, f_tgt)?;
        self.vcompose(lhs, rhs)
    }

    /// All 1-cells from `a` to `b`, in id order.
    pub fn hom1(&self, a: ObjId, b: ObjId) -> Vec<OneId> {
        (0..self.one_cells.len() as u32)
            .map(OneId)
            .filter(|&f| self.src1(f) == a && self.tgt1(f) == b)
            .collect()
    }

    /// All 2-cells from `f` to `g`, in id order.
    pub fn hom2(&self, f: OneId, g: OneId) -> Vec<TwoId> {
        (0..self.two_cells.len() as u32)
            .map(TwoId)
            .filter(|&c| self.src2(c) == f && self.tgt2(c) == g)
            .collect()
    }

    /// All factorizations of `f` as "r then v".
    pub fn factorizations(&self, f: OneId) -> Vec<(OneId, OneId)> {
        let mut out = Vec::new();
        for r in 0..self.one_cells.len() as u32 {
            let r = OneId(r);
            if self.src1(r) != self.src1(f) {
                continue;
            }
            for v in 0..self.one_cells.len() as u32 {
                let v = OneId(v);
                if self.src1(v) == self.tgt1(r)
                    && self.tgt1(v) == self.tgt1(f)
                    && self.comp1.get(&(r, v)) == Some(&f)
                {
                    out.push((r, v));
                }
            }
        }
        out
    }
}

/// One factor of a pasting word: a 2-cell with optional whiskering arrows.
///
/// `post` arrows are applied left-whiskering (outermost last), `pre` arrows
/// right-whiskering (outermost last), so the factor denotes
/// `post[k]·(…(post[0]·((…(cell·pre[0])…)·pre[m]))…)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PasteFactor {
    pub post: Vec<OneId>,
    pub cell: TwoId,
    pub pre: Vec<OneId>,
}

impl PasteFactor {
    pub fn cell(cell: TwoId) -> Self {
        PasteFactor {
            post: Vec::new(),
            cell,
            pre: Vec::new(),
        }
    }

    pub fn post(cell: TwoId, s: OneId) -> Self {
        PasteFactor {
            post: vec![s],
            cell,
            pre: Vec::new(),
        }
    }

    pub fn pre(cell: TwoId, r: OneId) -> Self {
        PasteFactor {
            post: Vec::new(),
            cell,
            pre: vec![r],
        }
    }
}

/// A pasting word: factors composed vertically left-to-right; an empty word
/// denotes the identity 2-cell on `unit_on`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PasteWord {
    pub factors: Vec<PasteFactor>,
    pub unit_on: Option<OneId>,
}

impl PasteWord {
    pub fn of(factors: Vec<PasteFactor>) -> Self {
        PasteWord {
            factors,
            unit_on: None,
        }
    }
}

/// Evaluate a pasting word to a single 2-cell.
pub fn paste(c: &FiniteTwoCategory, word: &PasteWord) -> Result<TwoId> {
    let mut acc: Option<TwoId> = None;
    for factor in &word.factors {
        let mut cell = factor.cell;
        for &r in &factor.pre {
            cell = c.whisk_r(cell, r)?;
        }
        for &s in &factor.post {
            cell = c.whisk_l(s, cell)?;
        }
        acc = Some(match acc {
            None => cell,
            Some(prev) => c.vcompose(prev, cell)?,
        });
    }
    match (acc, word.unit_on) {
        (Some(cell), _) => Ok(cell),
        (None, Some(f)) => Ok(c.id_two[f.0 as usize]),
        (None, None) => Err(KernelError::Malformed(
            "empty pasting word without a unit 1-cell".into(),
        )),
    }
}

/// Exhaustively check every axiom of a finite strict 2-category.
pub fn validate_two_category(c: &FiniteTwoCategory) -> ValidationReport {
    let mut rep = ValidationReport::new(c.name.clone());
    let n1 = c.one_cells.len() as u32;
    let n2 = c.two_cells.len() as u32;

    // Structural sanity: table entries exist exactly for composable pairs and
    // respect boundaries.
    let mut wf = Vec::new();
    let mut wf_count = 0u64;
    if c.id_one.len() != c.objects.len() || c.id_two.len() != c.one_cells.len() {
        wf.push("identity tables have wrong length".to_string());
    }
    for (x, &i) in c.id_one.iter().enumerate() {
        wf_count += 1;
        if c.src1(i) != ObjId(x as u32) || c.tgt1(i) != ObjId(x as u32) {
            wf.push(format!("id_one[{}] is not an endo-1-cell", c.objects[x]));
        }
    }
    for (f, &i) in c.id_two.iter().enumerate() {
        wf_count += 1;
        if c.src2(i) != OneId(f as u32) || c.tgt2(i) != OneId(f as u32) {
            wf.push(format!(
                "id_two[{}] is not an endo-2-cell",
                c.one_cells[f].name
            ));
        }
    }
    for f in (0..n1).map(OneId) {
        for g in (0..n1).map(OneId) {
            let composable = c.tgt1(f) == c.src1(g);
            match c.comp1.get(&(f, g)) {
                Some(&h) => {
                    wf_count += 1;
                    if !composable {
                        wf.push(format!(
                            "comp1 defined on non-composable ({}, {})",
                            c.one_name(f),
                            c.one_name(g)
                        ));
                    } else if c.src1(h) != c.src1(f) || c.tgt1(h) != c.tgt1(g) {
                        wf.push(format!(
                            "comp1({}, {}) has wrong boundary",
                            c.one_name(f),
                            c.one_name(g)
                        ));
                    }
                }
                None if composable => {
                    wf.push(format!(
                        "comp1 missing entry ({}, {})",
                        c.one_name(f),
                        c.one_name(g)
                    ));
                }
                None => {}
            }
        }
    }
    for a in (0..n2).map(TwoId) {
        for b in (0..n2).map(TwoId) {
            let composable = c.tgt2(a) == c.src2(b);
            match c.vcomp.get(&(a, b)) {
                Some(&d) => {
                    wf_count += 1;
                    if !composable {
                        wf.push(format!(
                            "vcomp defined on non-composable ({}, {})",
                            c.two_name(a),
                            c.two_name(b)
                        ));
                    } else if c.src2(d) != c.src2(a) || c.tgt2(d) != c.tgt2(b) {
                        wf.push(format!(
                            "vcomp({}, {}) has wrong boundary",
                            c.two_name(a),
                            c.two_name(b)
                        ));
                    }
                }
                None if composable => {
                    wf.push(format!(
                        "vcomp missing entry ({}, {})",
                        c.two_name(a),
                        c.two_name(b)
                    ));
                }
                None => {}
            }
        }
    }
    for s in (0..n1).map(OneId) {
        for a in (0..n2).map(TwoId) {
            let f = c.src2(a);
            let g = c.tgt2(a);
            let l_ok = c.src1(s) == c.tgt1(f);
            match c.whisker_l.get(&(s, a)) {
                Some(&d) => {
                    wf_count += 1;
                    let exp_src = l_ok.then(|| c.comp1.get(&(f, s)).copied()).flatten();
                    let exp_tgt = l_ok.then(|| c.comp1.get(&(g, s)).copied()).flatten();
                    if !l_ok {
                        wf.push(format!(
                            "whisker_l defined on non-composable ({}, {})",
                            c.one_name(s),
                            c.two_name(a)
                        ));
                    } else if Some(c.src2(d)) != exp_src || Some(c.tgt2(d)) != exp_tgt {
                        wf.push(format!(
                            "whisker_l({}, {}) has wrong boundary",
                            c.one_name(s),
                            c.two_name(a)
                        ));
                    }
                }
                None if l_ok => {
                    wf.push(format!(
                        "whisker_l missing entry ({}, {})",
                        c.one_name(s),
                        c.two_name(a)
                    ));
                }
                None => {}
            }
            let r_ok = c.tgt1(s) == c.src1(f);
            match c.whisker_r.get(&(a, s)) {
                Some(&d) => {
                    wf_count += 1;
                    let exp_src = r_ok.then(|| c.comp1.get(&(s, f)).copied()).flatten();
                    let exp_tgt = r_ok.then(|| c.comp1.get(&(s, g)).copied()).flatten();
                    if !r_ok {
                        wf.push(format!(
                            "whisker_r defined on non-composable ({}, {})",
                            c.two_name(a),
                            c.one_name(s)
                        ));
                    } else if Some(c.src2(d)) != exp_src || Some(c.tgt2(d)) != exp_tgt {
                        wf.push(format!(
                            "whisker_r({}, {}) has wrong boundary",
                            c.two_name(a),
                            c.one_name(s)
                        ));
                    }
                }
                None if r_ok => {
                    wf.push(format!(
                        "whisker_r missing entry ({}, {})",
                        c.two_name(a),
                        c.one_name(s)
                    ));
                }
                None => {}
            }
        }
    }
    let tables_ok = wf.is_empty();
    rep.outcome(
        "structure/tables",
        "composition tables are total on composable pairs and respect boundaries",
        wf_count,
        CheckMethod::Exhaustive,
        wf,
    );
    if !tables_ok {
        // The law sweeps below index the tables directly, which is only
        // meaningful once the tables are total and boundary-correct.
        return rep.finish();
    }

    // 1-cell category laws.
    let mut bad = Vec::new();
    let mut count = 0u64;
    for f in (0..n1).map(OneId) {
        for g in (0..n1).map(OneId) {
            if c.tgt1(f) != c.src1(g) {
                continue;
            }
            for h in (0..n1).map(OneId) {
                if c.tgt1(g) != c.src1(h) {
                    continue;
                }
                count += 1;
                let fg_h = c.comp1[&(c.comp1[&(f, g)], h)];
                let f_gh = c.comp1[&(f, c.comp1[&(g, h)])];
                if fg_h != f_gh {
                    bad.push(format!(
                        "({}, {}, {})",
                        c.one_name(f),
                        c.one_name(g),
                        c.one_name(h)
                    ));
                }
            }
        }
    }
    rep.outcome(
        "cat1/assoc",
        "composition of 1-cells is associative",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    let mut bad = Vec::new();
    let mut count = 0u64;
    for f in (0..n1).map(OneId) {
        count += 1;
        let l = c.comp1[&(c.id_one[c.src1(f).0 as usize], f)];
        let r = c.comp1[&(f, c.id_one[c.tgt1(f).0 as usize])];
        if l != f || r != f {
            bad.push(c.one_name(f).to_string());
        }
    }
    rep.outcome(
        "cat1/unit",
        "identity 1-cells are units for composition",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    // Hom-category laws.
    let mut bad = Vec::new();
    let mut count = 0u64;
    for a in (0..n2).map(TwoId) {
        for b in (0..n2).map(TwoId) {
            if c.tgt2(a) != c.src2(b) {
                continue;
            }
            for d in (0..n2).map(TwoId) {
                if c.tgt2(b) != c.src2(d) {
                    continue;
                }
                count += 1;
                let ab_d = c.vcomp[&(c.vcomp[&(a, b)], d)];
                let a_bd = c.vcomp[&(a, c.vcomp[&(b, d)])];
                if ab_d != a_bd {
                    bad.push(format!(
                        "({}, {}, {})",
                        c.two_name(a),
                        c.two_name(b),
                        c.two_name(d)
                    ));
                }
            }
        }
    }
    rep.outcome(
        "cat2/assoc",
        "vertical composition of 2-cells is associative",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    let mut bad = Vec::new();
    let mut count = 0u64;
    for a in (0..n2).map(TwoId) {
        count += 1;
        let l = c.vcomp[&(c.id_two[c.src2(a).0 as usize], a)];
        let r = c.vcomp[&(a, c.id_two[c.tgt2(a).0 as usize])];
        if l != a || r != a {
            bad.push(c.two_name(a).to_string());
        }
    }
    rep.outcome(
        "cat2/unit",
        "identity 2-cells are units for vertical composition",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    // Whiskering is functorial in the 2-cell argument.
    let mut bad = Vec::new();
    let mut count = 0u64;
    for s in (0..n1).map(OneId) {
        for a in (0..n2).map(TwoId) {
            if c.src1(s) != c.tgt1(c.src2(a)) {
                continue;
            }
            count += 1;
            let f = c.src2(a);
            if c.whisker_l[&(s, c.id_two[f.0 as usize])] != c.id_two[c.comp1[&(f, s)].0 as usize]
            {
                bad.push(format!("s·id: ({}, {})", c.one_name(s), c.one_name(f)));
            }
            for b in (0..n2).map(TwoId) {
                if c.tgt2(a) != c.src2(b) {
                    continue;
                }
                count += 1;
                let lhs = c.whisker_l[&(s, c.vcomp[&(a, b)])];
                let rhs = c.vcomp[&(c.whisker_l[&(s, a)], c.whisker_l[&(s, b)])];
                if lhs != rhs {
                    bad.push(format!(
                        "s·(a⊗b): ({}, {}, {})",
                        c.one_name(s),
                        c.two_name(a),
                        c.two_name(b)
                    ));
                }
            }
        }
    }
    for a in (0..n2).map(TwoId) {
        for r in (0..n1).map(OneId) {
            if c.tgt1(r) != c.src1(c.src2(a)) {
                continue;
            }
            count += 1;
            let f = c.src2(a);
            if c.whisker_r[&(c.id_two[f.0 as usize], r)] != c.id_two[c.comp1[&(r, f)].0 as usize]
            {
                bad.push(format!("id·r: ({}, {})", c.one_name(f), c.one_name(r)));
            }
            for b in (0..n2).map(TwoId) {
                if c.tgt2(a) != c.src2(b) {
                    continue;
                }
                count += 1;
                let lhs = c.whisker_r[&(c.vcomp[&(a, b)], r)];
                let rhs = c.vcomp[&(c.whisker_r[&(a, r)], c.whisker_r[&(b, r)])];
                if lhs != rhs {
                    bad.push(format!(
                        "(a⊗b)·r: ({}, {}, {})",
                        c.two_name(a),
                        c.two_name(b),
                        c.one_name(r)
                    ));
                }
            }
        }
    }
    rep.outcome(
        "whisker/functorial",
        "whiskering preserves identities and vertical composites",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    // Whiskering is a strict action of the 1-cell category.
    let mut bad = Vec::new();
    let mut count = 0u64;
    for a in (0..n2).map(TwoId) {
        let f = c.src2(a);
        count += 2;
        if c.whisker_l[&(c.id_one[c.tgt1(f).0 as usize], a)] != a {
            bad.push(format!("id_B·{}", c.two_name(a)));
        }
        if c.whisker_r[&(a, c.id_one[c.src1(f).0 as usize])] != a {
            bad.push(format!("{}·id_A", c.two_name(a)));
        }
        for s in (0..n1).map(OneId) {
            if c.src1(s) != c.tgt1(f) {
                continue;
            }
            for t in (0..n1).map(OneId) {
                if c.src1(t) != c.tgt1(s) {
                    continue;
                }
                count += 1;
                let st = c.comp1[&(s, t)];
                if c.whisker_l[&(st, a)] != c.whisker_l[&(t, c.whisker_l[&(s, a)])] {
                    bad.push(format!(
                        "(ts)·a: ({}, {}, {})",
                        c.one_name(t),
                        c.one_name(s),
                        c.two_name(a)
                    ));
                }
            }
        }
        for r in (0..n1).map(OneId) {
            if c.tgt1(r) != c.src1(f) {
                continue;
            }
            for q in (0..n1).map(OneId) {
                if c.tgt1(q) != c.src1(r) {
                    continue;
                }
                count += 1;
                let qr = c.comp1[&(q, r)];
                if c.whisker_r[&(a, qr)] != c.whisker_r[&(c.whisker_r[&(a, r)], q)] {
                    bad.push(format!(
                        "a·(rq): ({}, {}, {})",
                        c.two_name(a),
                        c.one_name(r),
                        c.one_name(q)
                    ));
                }
            }
            for s in (0..n1).map(OneId) {
                if c.src1(s) != c.tgt1(f) {
                    continue;
                }
                count += 1;
                let lhs = c.whisker_l[&(s, c.whisker_r[&(a, r)])];
                let rhs = c.whisker_r[&(c.whisker_l[&(s, a)], r)];
                if lhs != rhs {
                    bad.push(format!(
                        "s·(a·r) vs (s·a)·r: ({}, {}, {})",
                        c.one_name(s),
                        c.two_name(a),
                        c.one_name(r)
                    ));
                }
            }
        }
    }
    rep.outcome(
        "whisker/action",
        "whiskering is a strict unital action of 1-cell composition",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    // Interchange: for a: f → f' : A → B and b: g → g' : B → C,
    // (g·a) ⊗ (b·f') = (b·f) ⊗ (g'·a).
    let mut bad = Vec::new();
    let mut count = 0u64;
    for a in (0..n2).map(TwoId) {
        for b in (0..n2).map(TwoId) {
            let (f, f2) = (c.src2(a), c.tgt2(a));
            let (g, g2) = (c.src2(b), c.tgt2(b));
            if c.tgt1(f) != c.src1(g) {
                continue;
            }
            count += 1;
            let lhs = c.vcomp[&(c.whisker_l[&(g, a)], c.whisker_r[&(b, f2)])];
            let rhs = c.vcomp[&(c.whisker_r[&(b, f)], c.whisker_l[&(g2, a)])];
            if lhs != rhs {
                bad.push(format!("({}, {})", c.two_name(a), c.two_name(b)));
            }
        }
    }
    rep.outcome(
        "whisker/interchange",
        "horizontal and vertical composition satisfy interchange",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    rep.finish()
}

/// A strict 2-functor given by explicit cell maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictTwoFunctor {
    pub name: String,
    /// Image object per source object.
    pub ob_map: Vec<ObjId>,
    /// Image 1-cell per source 1-cell.
    pub one_map: Vec<OneId>,
    /// Image 2-cell per source 2-cell.
    pub two_map: Vec<TwoId>,
}

impl StrictTwoFunctor {
    /// The identity 2-functor on `c`.
    pub fn identity(c: &FiniteTwoCategory) -> Self {
        StrictTwoFunctor {
            name: format!("id_{}", c.name),
            ob_map: (0..c.objects.len() as u32).map(ObjId).collect(),
            one_map: (0..c.one_cells.len() as u32).map(OneId).collect(),
            two_map: (0..c.two_cells.len() as u32).map(TwoId).collect(),
        }
    }

    pub fn on_obj(&self, x: ObjId) -> ObjId {
        self.ob_map[x.0 as usize]
    }

    pub fn on_one(&self, f: OneId) -> OneId {
        self.one_map[f.0 as usize]
    }

    pub fn on_two(&self, a: TwoId) -> TwoId {
        self.two_map[a.0 as usize]
    }

    /// Compose two functors: `self` then `next`.
    pub fn then(&self, next: &StrictTwoFunctor) -> StrictTwoFunctor {
        StrictTwoFunctor {
            name: format!("{};{}", self.name, next.name),
            ob_map: self.ob_map.iter().map(|&x| next.on_obj(x)).collect(),
            one_map: self.one_map.iter().map(|&f| next.on_one(f)).collect(),
            two_map: self.two_map.iter().map(|&a| next.on_two(a)).collect(),
        }
    }
}

/// Exhaustively check strict 2-functor laws for `u: c → d`.
pub fn validate_two_functor(
    u: &StrictTwoFunctor,
    c: &FiniteTwoCategory,
    d: &FiniteTwoCategory,
) -> ValidationReport {
    let mut rep = ValidationReport::new(u.name.clone());

    let mut bad = Vec::new();
    let mut count = 0u64;
    if u.ob_map.len() != c.objects.len()
        || u.one_map.len() != c.one_cells.len()
        || u.two_map.len() != c.two_cells.len()
    {
        bad.push("cell maps have wrong length".to_string());
    }
    for f in (0..c.one_cells.len() as u32).map(OneId) {
        count += 1;
        let uf = u.on_one(f);
        if d.src1(uf) != u.on_obj(c.src1(f)) || d.tgt1(uf) != u.on_obj(c.tgt1(f)) {
            bad.push(format!("boundary of {}", c.one_name(f)));
        }
    }
    for a in (0..c.two_cells.len() as u32).map(TwoId) {
        count += 1;
        let ua = u.on_two(a);
        if d.src2(ua) != u.on_one(c.src2(a)) || d.tgt2(ua) != u.on_one(c.tgt2(a)) {
            bad.push(format!("boundary of {}", c.two_name(a)));
        }
    }
    rep.outcome(
        "functor/boundaries",
        "cell maps commute with sources and targets",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    let mut bad = Vec::new();
    let mut count = 0u64;
    for (x, &i) in c.id_one.iter().enumerate() {
        count += 1;
        if u.on_one(i) != d.id_one[u.on_obj(ObjId(x as u32)).0 as usize] {
            bad.push(format!("id 1-cell at {}", c.objects[x]));
        }
    }
    for (f, &i) in c.id_two.iter().enumerate() {
        count += 1;
        if u.on_two(i) != d.id_two[u.on_one(OneId(f as u32)).0 as usize] {
            bad.push(format!("id 2-cell at {}", c.one_cells[f].name));
        }
    }
    rep.outcome(
        "functor/identities",
        "identities are preserved",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    let mut bad = Vec::new();
    let mut count = 0u64;
    for (&(f, g), &h) in &c.comp1 {
        count += 1;
        if d.comp1.get(&(u.on_one(f), u.on_one(g))) != Some(&u.on_one(h)) {
            bad.push(format!("comp1({}, {})", c.one_name(f), c.one_name(g)));
        }
    }
    for (&(a, b), &e) in &c.vcomp {
        count += 1;
        if d.vcomp.get(&(u.on_two(a), u.on_two(b))) != Some(&u.on_two(e)) {
            bad.push(format!("vcomp({}, {})", c.two_name(a), c.two_name(b)));
        }
    }
    for (&(s, a), &e) in &c.whisker_l {
        count += 1;
        if d.whisker_l.get(&(u.on_one(s), u.on_two(a))) != Some(&u.on_two(e)) {
            bad.push(format!("whisker_l({}, {})", c.one_name(s), c.two_name(a)));
        }
    }
    for (&(a, s), &e) in &c.whisker_r {
        count += 1;
        if d.whisker_r.get(&(u.on_two(a), u.on_one(s))) != Some(&u.on_two(e)) {
            bad.push(format!("whisker_r({}, {})", c.two_name(a), c.one_name(s)));
        }
    }
    rep.outcome(
        "functor/composition",
        "all composites and whiskers are preserved strictly",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    rep.finish()
}

/// Direction of the links in a sequence of 2-functors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceShape {
    /// Links lower the level: `links[i]: levels[i+1] → levels[i]`.
    Forgetful,
    /// Links raise the level: `links[i]: levels[i] → levels[i+1]`.
    Structural,
}

/// A finite sequence of 2-categories connected by strict 2-functors, all
/// sharing the same object set.
#[derive(Debug, Clone)]
pub struct TwoFunctorSequence {
    pub name: String,
    pub levels: Vec<FiniteTwoCategory>,
    pub links: Vec<StrictTwoFunctor>,
    pub shape: SequenceShape,
}

impl TwoFunctorSequence {
    /// Depth: the highest level index.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// The identity sequence on `c` with the given depth.
    pub fn identity(c: &FiniteTwoCategory, depth: usize, shape: SequenceShape) -> Self {
        TwoFunctorSequence {
            name: format!("id_seq_{}", c.name),
            levels: vec![c.clone(); depth + 1],
            links: vec![StrictTwoFunctor::identity(c); depth],
            shape,
        }
    }

    /// Composite link from level `j` down to level `i` (forgetful shape,
    /// `i ≤ j`), or from level `i` up to level `j` (structural shape).
    /// `i == j` yields the identity functor.
    pub fn link_between(&self, i: usize, j: usize) -> Result<StrictTwoFunctor> {
        if i > j || j >= self.levels.len() {
            return Err(KernelError::Malformed(format!(
                "bad link request {i} → {j} in sequence of depth {}",
                self.depth()
            )));
        }
        match self.shape {
            SequenceShape::Forgetful => {
                let mut u = StrictTwoFunctor::identity(&self.levels[j]);
                // links[k]: levels[k+1] → levels[k]; walk j-1, j-2, …, i.
                for k in (i..j).rev() {
                    u = u.then(&self.links[k]);
                }
                Ok(u)
            }
            SequenceShape::Structural => {
                let mut u = StrictTwoFunctor::identity(&self.levels[i]);
                for k in i..j {
                    u = u.then(&self.links[k]);
                }
                Ok(u)
            }
        }
    }

    /// Validate that every link is a strict 2-functor and levels share the
    /// object set.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new(self.name.clone());
        let mut bad = Vec::new();
        let count = self.links.len() as u64;
        for (k, link) in self.links.iter().enumerate() {
            let (src, tgt) = match self.shape {
                SequenceShape::Forgetful => (&self.levels[k + 1], &self.levels[k]),
                SequenceShape::Structural => (&self.levels[k], &self.levels[k + 1]),
            };
            let sub = validate_two_functor(link, src, tgt);
            if !sub.passed() {
                bad.push(format!("link {k} fails 2-functor laws"));
            }
            if src.objects != tgt.objects {
                bad.push(format!("levels around link {k} differ on objects"));
            } else if (0..src.objects.len() as u32)
                .map(ObjId)
                .any(|x| link.on_obj(x) != x)
            {
                bad.push(format!("link {k} is not the identity on objects"));
            }
        }
        rep.outcome(
            "sequence/links",
            "links are strict 2-functors and are the identity on the shared objects",
            count,
            CheckMethod::Exhaustive,
            bad,
        );
        rep.finish()
    }
}
