//! Pseudo double algebras: word composition operations on a weak double
//! category carrier, evaluated on demand, with exhaustive law checking.
//!
//! An algebra is presented by its carrier, a bracketing [`FoldShape`]
//! and normaliser components ([`PseudoAlgebra`]).  The structure map
//! sends a word to its folded vertical composite; the re-bracketing
//! comparison at a block word is computed by normalising both bracketing
//! trees to the left comb through the carrier's unitors and associators,
//! and correcting by the normaliser fold.  This keeps algebras over
//! fixtures with hundreds of thousands of words tractable: nothing is
//! tabulated per word, yet every law instance can be evaluated exactly.
//!
//! [`validate_pseudo_algebra`] sweeps all words up to a length bound and
//! checks totality, the two unit laws, the pentagon for flattening,
//! naturality of the normaliser and of the comparison, and transversal
//! invertibility of both families.  Naturality sweeps run over cell
//! words up to a separate (smaller) bound, since cell words grow much
//! faster than path words; transversal functoriality of the binary
//! vertical composition itself is the carrier's interchange law and is
//! checked by [`super::validate_weak_double`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{KernelError, Result};
use crate::report::{CheckMethod, ValidationReport};

use super::dbl::WeakDoubleCategory;
use super::words::{
    block_words_of, deep_words_of, cell_block_words_of, cell_words, empty_word, flatten_blocks,
    flatten_cell_blocks, flatten_outer, flatten_inner, letter_word, path_words, single_block,
    split_letters, BlockCellWord, BlockWord, CellWord, PathWord,
};
use super::{fold_sweep, inverse_table, validate_cat_graph, CatGraph, Wit};

/// The bracketing shape used to fold a word into its composite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FoldShape {
    /// `((u₁ ⊗ u₂) ⊗ u₃) ⊗ ⋯`
    Left,
    /// `u₁ ⊗ (u₂ ⊗ (u₃ ⊗ ⋯))`
    Right,
}

/// A pseudo double algebra presented over a weak double category.
///
/// The structure map on a word is the `fold`-shaped vertical composite
/// of its letters (the vertical unit on empty words).  `twist0[x]` and
/// `twist[u]` are the normaliser components at each object and each
/// vertical arrow — transversal endo-arrows measuring how far the
/// algebra is from being normal; both families are identities exactly
/// for normal algebras ([`is_normal`]).  The re-bracketing comparison at
/// a block word is evaluated by [`AlgEvaluator::comparison`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoAlgebra {
    pub name: String,
    pub dbl: WeakDoubleCategory,
    pub fold: FoldShape,
    pub twist0: Vec<u32>,
    pub twist: Vec<u32>,
}

impl PseudoAlgebra {
    pub fn graph(&self) -> &CatGraph {
        &self.dbl.graph
    }

    /// Build the evaluation context: transversal inverse tables for both
    /// levels plus the normaliser triviality flag.
    pub fn evaluator(&self) -> AlgEvaluator<'_> {
        AlgEvaluator {
            alg: self,
            inv: inverse_table(&self.dbl.graph.vert),
            inv0: inverse_table(&self.dbl.graph.base),
            twist_trivial: is_normal(self),
        }
    }
}

/// An algebra is normal when every normaliser component is an identity.
pub fn is_normal(a: &PseudoAlgebra) -> bool {
    let g = &a.dbl.graph;
    a.twist0.len() == g.base.cubes.len()
        && a.twist.len() == g.vert.cubes.len()
        && a.twist0.iter().enumerate().all(|(x, &f)| f == g.base.ids[x])
        && a.twist.iter().enumerate().all(|(u, &f)| f == g.vert.ids[u])
}

/// A bracketing tree over one word: units, letters and binary pastings.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Unit(u32),
    Leaf(u32),
    Pair(Box<Expr>, Box<Expr>),
}

fn comb(shape: FoldShape, base: u32, mut items: Vec<Expr>) -> Expr {
    if items.is_empty() {
        return Expr::Unit(base);
    }
    match shape {
        FoldShape::Left => {
            let mut it = items.drain(..);
            let first = it.next().expect("nonempty");
            it.fold(first, |acc, e| Expr::Pair(Box::new(acc), Box::new(e)))
        }
        FoldShape::Right => {
            let last = items.pop().expect("nonempty");
            items
                .into_iter()
                .rev()
                .fold(last, |acc, e| Expr::Pair(Box::new(e), Box::new(acc)))
        }
    }
}

fn fold_tree(shape: FoldShape, base: u32, letters: &[u32]) -> Expr {
    comb(shape, base, letters.iter().map(|&u| Expr::Leaf(u)).collect())
}

fn block_tree(shape: FoldShape, bw: &BlockWord) -> Expr {
    comb(
        shape,
        bw.base,
        bw.blocks
            .iter()
            .map(|b| fold_tree(shape, b.base, &b.letters))
            .collect(),
    )
}

fn tree_letters(e: &Expr, out: &mut Vec<u32>) {
    match e {
        Expr::Unit(_) => {}
        Expr::Leaf(u) => out.push(*u),
        Expr::Pair(l, r) => {
            tree_letters(l, out);
            tree_letters(r, out);
        }
    }
}

/// Evaluation context for one algebra: resolves word composites,
/// normaliser components and re-bracketing comparisons, with transversal
/// inverses precomputed once.
pub struct AlgEvaluator<'a> {
    alg: &'a PseudoAlgebra,
    inv: Vec<Option<u32>>,
    inv0: Vec<Option<u32>>,
    twist_trivial: bool,
}

impl<'a> AlgEvaluator<'a> {
    fn g(&self) -> &'a CatGraph {
        &self.alg.dbl.graph
    }

    /// `u ⊗ v` on vertical arrows.
    fn vc(&self, x: u32, y: u32) -> Result<u32> {
        self.alg.dbl.vcomp.cubes.get(&(x, y)).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!(
                "vertical composite {} ⊗ {}",
                self.g().vert.cube_label(x),
                self.g().vert.cube_label(y)
            ))
        })
    }

    /// Vertical pasting of cells.
    fn vcc(&self, a: u32, b: u32) -> Result<u32> {
        self.alg.dbl.vcomp.arrows.get(&(a, b)).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!(
                "vertical pasting {} ⊗ {}",
                self.g().vert.arrow_label(a),
                self.g().vert.arrow_label(b)
            ))
        })
    }

    fn lunitor(&self, u: u32) -> Result<u32> {
        self.alg.dbl.lunitors.get(u as usize).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!("unitor λ at {}", self.g().vert.cube_label(u)))
        })
    }

    fn runitor(&self, u: u32) -> Result<u32> {
        self.alg.dbl.runitors.get(u as usize).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!("unitor ρ at {}", self.g().vert.cube_label(u)))
        })
    }

    fn associator(&self, x: u32, y: u32, z: u32) -> Result<u32> {
        self.alg.dbl.associators.get(&(x, y, z)).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!(
                "associator at ({}, {}, {})",
                self.g().vert.cube_label(x),
                self.g().vert.cube_label(y),
                self.g().vert.cube_label(z)
            ))
        })
    }

    /// The normaliser component at a vertical arrow.
    pub fn normaliser(&self, u: u32) -> Result<u32> {
        self.alg.twist.get(u as usize).copied().ok_or_else(|| {
            KernelError::Malformed(format!("no normaliser component at vertical arrow #{u}"))
        })
    }

    /// The normaliser component at an object.
    pub fn normaliser0(&self, x: u32) -> Result<u32> {
        self.alg.twist0.get(x as usize).copied().ok_or_else(|| {
            KernelError::Malformed(format!("no normaliser component at object #{x}"))
        })
    }

    /// Transversal inverse of a cell.
    pub fn inverse(&self, f: u32) -> Result<u32> {
        self.inv.get(f as usize).copied().flatten().ok_or_else(|| {
            KernelError::Malformed(format!(
                "no transversal inverse for {}",
                self.g().vert.arrow_label(f)
            ))
        })
    }

    /// Transversal inverse of an object arrow.
    pub fn inverse0(&self, f: u32) -> Result<u32> {
        self.inv0.get(f as usize).copied().flatten().ok_or_else(|| {
            KernelError::Malformed(format!(
                "no transversal inverse for {}",
                self.g().base.arrow_label(f)
            ))
        })
    }

    /// The structure map on a word: its `fold`-shaped vertical composite.
    pub fn compose_word(&self, w: &PathWord) -> Result<u32> {
        match w.letters.split_first() {
            None => Ok(self.alg.dbl.unit.on_cubes[w.base as usize]),
            Some((&first, rest)) => match self.alg.fold {
                FoldShape::Left => rest.iter().try_fold(first, |acc, &u| self.vc(acc, u)),
                FoldShape::Right => {
                    let (&last, front) = w.letters.split_last().expect("nonempty");
                    front.iter().rev().try_fold(last, |acc, &u| self.vc(u, acc))
                }
            },
        }
    }

    /// The structure map on a cell word.
    pub fn compose_cells(&self, cw: &CellWord) -> Result<u32> {
        match cw.letters.split_first() {
            None => Ok(self.alg.dbl.unit.on_arrows[cw.base as usize]),
            Some((&first, rest)) => match self.alg.fold {
                FoldShape::Left => rest.iter().try_fold(first, |acc, &a| self.vcc(acc, a)),
                FoldShape::Right => {
                    let (&last, front) = cw.letters.split_last().expect("nonempty");
                    front.iter().rev().try_fold(last, |acc, &a| self.vcc(a, acc))
                }
            },
        }
    }

    /// The structure map applied blockwise, then to the word of block
    /// composites.
    pub fn compose_block_cells(&self, bcw: &BlockCellWord) -> Result<u32> {
        let letters = bcw
            .blocks
            .iter()
            .map(|b| self.compose_cells(b))
            .collect::<Result<Vec<_>>>()?;
        self.compose_cells(&CellWord { base: bcw.base, letters })
    }

    fn value(&self, e: &Expr) -> Result<u32> {
        match e {
            Expr::Unit(x) => Ok(self.alg.dbl.unit.on_cubes[*x as usize]),
            Expr::Leaf(u) => Ok(*u),
            Expr::Pair(l, r) => {
                let lv = self.value(l)?;
                let rv = self.value(r)?;
                self.vc(lv, rv)
            }
        }
    }

    /// The canonical cell from the value of a tree to the value of the
    /// left comb over the same letters, assembled from unitors and
    /// associators.
    fn nf(&self, e: &Expr) -> Result<u32> {
        let vert = &self.g().vert;
        match e {
            Expr::Unit(x) => Ok(vert.ids[self.alg.dbl.unit.on_cubes[*x as usize] as usize]),
            Expr::Leaf(u) => Ok(vert.ids[*u as usize]),
            Expr::Pair(l, r) => {
                let nl = self.nf(l)?;
                let nr = self.nf(r)?;
                let w = self.vcc(nl, nr)?;
                let mut ll = Vec::new();
                tree_letters(l, &mut ll);
                let mut lr = Vec::new();
                tree_letters(r, &mut lr);
                let xv = vert.tgt(nl);
                let yv = vert.tgt(nr);
                let mu = if lr.is_empty() {
                    self.runitor(xv)?
                } else if ll.is_empty() {
                    self.lunitor(yv)?
                } else {
                    self.peel(xv, &lr)?
                };
                vert.compose0(w, mu)
            }
        }
    }

    /// `X ⊗ LC(yl) →₀ LC(xl ++ yl)` for nonempty `xl` (of value `xv`) and
    /// nonempty `yl`, by peeling associators off the last letter.
    fn peel(&self, xv: u32, yl: &[u32]) -> Result<u32> {
        let vert = &self.g().vert;
        if yl.len() == 1 {
            return Ok(vert.ids[self.vc(xv, yl[0])? as usize]);
        }
        let (front, last) = yl.split_at(yl.len() - 1);
        let z = last[0];
        let yr = front[1..]
            .iter()
            .try_fold(front[0], |acc, &u| self.vc(acc, u))?;
        let a = self.associator(xv, yr, z)?;
        let m = self.peel(xv, front)?;
        let mw = self.vcc(m, vert.ids[z as usize])?;
        vert.compose0(a, mw)
    }

    /// The canonical re-bracketing cell between two trees over the same
    /// letters.
    fn reassoc(&self, t1: &Expr, t2: &Expr) -> Result<u32> {
        if t1 == t2 {
            let v = self.value(t1)?;
            return Ok(self.g().vert.ids[v as usize]);
        }
        let n1 = self.nf(t1)?;
        let n2 = self.nf(t2)?;
        let i2 = self.inverse(n2)?;
        self.g().vert.compose0(n1, i2)
    }

    /// The comparison from one bracketing of a word to another.
    pub fn rebracketing(&self, w: &PathWord, target: FoldShape) -> Result<u32> {
        let t1 = fold_tree(self.alg.fold, w.base, &w.letters);
        let t2 = fold_tree(target, w.base, &w.letters);
        self.reassoc(&t1, &t2)
    }

    /// The extended comparison at a block word: the cell from the
    /// composite of block composites to the composite of the flattened
    /// word, corrected by the normaliser fold.
    pub fn comparison(&self, bw: &BlockWord) -> Result<u32> {
        let t1 = block_tree(self.alg.fold, bw);
        let flat = flatten_blocks(bw);
        let t2 = fold_tree(self.alg.fold, flat.base, &flat.letters);
        let r = self.reassoc(&t1, &t2)?;
        if self.twist_trivial {
            return Ok(r);
        }
        let cells = bw
            .blocks
            .iter()
            .map(|b| Ok(self.normaliser(self.compose_word(b)?)?))
            .collect::<Result<Vec<_>>>()?;
        let f = self.compose_cells(&CellWord {
            base: self.normaliser0(bw.base)?,
            letters: cells,
        })?;
        let finv = self.inverse(f)?;
        self.g().vert.compose0(finv, r)
    }
}

/// Bounds for the word sweeps of a pseudo algebra validation.
///
/// `len` bounds path-word length and block-word weight; `nat_len` bounds
/// the cell words driving the comparison naturality sweep, which grow
/// much faster than path words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PsaOptions {
    pub len: usize,
    pub nat_len: usize,
}

impl Default for PsaOptions {
    fn default() -> Self {
        PsaOptions { len: 4, nat_len: 2 }
    }
}

/// Shape gate for the algebra data over an already-validated graph.
fn alg_shapes(a: &PseudoAlgebra, rep: &mut ValidationReport) -> bool {
    let g = &a.dbl.graph;
    let mut bad = Wit::new();
    let d = &a.dbl;
    if d.unit.on_cubes.len() != g.base.cubes.len() || d.unit.on_arrows.len() != g.base.arrows.len()
    {
        bad.push("unit map: length mismatch".into());
    } else if d.unit.on_cubes.iter().any(|&v| v >= g.vert.n_cubes())
        || d.unit.on_arrows.iter().any(|&v| v >= g.vert.n_arrows())
    {
        bad.push("unit map: value out of range".into());
    }
    if d.vcomp
        .cubes
        .iter()
        .any(|(&(x, y), &z)| x >= g.vert.n_cubes() || y >= g.vert.n_cubes() || z >= g.vert.n_cubes())
    {
        bad.push("vertical cube table: value out of range".into());
    }
    if d.vcomp
        .arrows
        .iter()
        .any(|(&(x, y), &z)| {
            x >= g.vert.n_arrows() || y >= g.vert.n_arrows() || z >= g.vert.n_arrows()
        })
    {
        bad.push("vertical pasting table: value out of range".into());
    }
    for (label, v) in [("λ", &d.lunitors), ("ρ", &d.runitors)] {
        if v.len() != g.vert.cubes.len() {
            bad.push(format!("unitors {label}: length mismatch"));
        } else if v.iter().any(|&f| f >= g.vert.n_arrows()) {
            bad.push(format!("unitors {label}: value out of range"));
        }
    }
    if d.associators
        .iter()
        .any(|(&(x, y, z), &f)| {
            x >= g.vert.n_cubes()
                || y >= g.vert.n_cubes()
                || z >= g.vert.n_cubes()
                || f >= g.vert.n_arrows()
        })
    {
        bad.push("associators: entry out of range".into());
    }
    if a.twist0.len() != g.base.cubes.len() {
        bad.push("normaliser components at objects: length mismatch".into());
    } else if a.twist0.iter().any(|&f| f >= g.base.n_arrows()) {
        bad.push("normaliser components at objects: value out of range".into());
    }
    if a.twist.len() != g.vert.cubes.len() {
        bad.push("normaliser components at vertical arrows: length mismatch".into());
    } else if a.twist.iter().any(|&f| f >= g.vert.n_arrows()) {
        bad.push("normaliser components at vertical arrows: value out of range".into());
    }
    let ok = bad.0.is_empty();
    rep.outcome(
        "alg/shape",
        "unit, vertical composition, comparison and normaliser tables are present \
         with consistent lengths and in-range entries",
        1,
        CheckMethod::Exhaustive,
        bad.take(),
    );
    ok
}

/// Check every pseudo double algebra law with the default bounds.
pub fn validate_pseudo_algebra(a: &PseudoAlgebra) -> ValidationReport {
    validate_pseudo_algebra_with(a, &PsaOptions::default())
}

/// Check every pseudo double algebra law over all words up to
/// `opts.len`: carrier category axioms, unit functoriality, totality and
/// boundary-compatibility of the structure map, typing, naturality and
/// invertibility of the normaliser, the two unit laws, typing,
/// naturality and invertibility of the re-bracketing comparison, and the
/// pentagon for iterated flattening.
pub fn validate_pseudo_algebra_with(a: &PseudoAlgebra, opts: &PsaOptions) -> ValidationReport {
    let mut rep = ValidationReport::new(a.name.clone());
    let graph_rep = validate_cat_graph(&a.dbl.graph);
    let graph_ok = graph_rep.passed();
    rep.merge(graph_rep);
    if !graph_ok || !alg_shapes(a, &mut rep) {
        return rep.finish();
    }

    let g = a.graph();
    let ev = a.evaluator();
    let words = path_words(g, opts.len);

    unit_functor(a, &mut rep);
    vcomp_identities(a, &mut rep);
    structure_total(a, &ev, &words, &mut rep);
    normaliser_checks(a, &ev, &mut rep);
    unit_laws(a, &ev, &words, &mut rep);
    comparison_checks(a, &ev, &words, opts, &mut rep);
    comparison_naturality(a, &ev, opts, &mut rep);
    pentagon(a, &ev, &words, opts, &mut rep);
    if ev.twist_trivial {
        normal_units(a, &ev, &mut rep);
    }
    rep.finish()
}

/// The unit map is a functor and its cells have the expected boundaries.
fn unit_functor(a: &PseudoAlgebra, rep: &mut ValidationReport) {
    let g = a.graph();
    let e = &a.dbl.unit;
    let mut bad = Wit::new();
    let mut count = 0u64;
    for x in 0..g.base.n_cubes() {
        count += 1;
        let ex = e.on_cubes[x as usize];
        if g.src_obj(ex) != x || g.tgt_obj(ex) != x {
            bad.push(format!(
                "unit of {} has wrong boundary",
                g.base.cube_label(x)
            ));
        }
        if e.on_arrows[g.base.ids[x as usize] as usize] != g.vert.ids[ex as usize] {
            bad.push(format!(
                "unit does not preserve the identity of {}",
                g.base.cube_label(x)
            ));
        }
    }
    for f in 0..g.base.n_arrows() {
        count += 1;
        let ef = e.on_arrows[f as usize];
        if g.neg_face(ef) != f || g.pos_face(ef) != f {
            bad.push(format!(
                "unit cell of {} has wrong faces",
                g.base.arrow_label(f)
            ));
        }
        if g.vert.src(ef) != e.on_cubes[g.base.src(f) as usize]
            || g.vert.tgt(ef) != e.on_cubes[g.base.tgt(f) as usize]
        {
            bad.push(format!(
                "unit cell of {} has wrong transversal boundary",
                g.base.arrow_label(f)
            ));
        }
    }
    for (&(f, h), &fh) in &g.base.comp {
        count += 1;
        let lhs = e.on_arrows[fh as usize];
        let rhs = g
            .vert
            .comp
            .get(&(e.on_arrows[f as usize], e.on_arrows[h as usize]));
        if rhs != Some(&lhs) {
            bad.push(format!(
                "unit does not preserve {};{}",
                g.base.arrow_label(f),
                g.base.arrow_label(h)
            ));
        }
    }
    rep.outcome(
        "alg/unit-functor",
        "the vertical unit is a functor from object arrows to cells, compatible \
         with faces",
        count,
        CheckMethod::Exhaustive,
        bad.take(),
    );
}

/// Vertical pasting of identity cells is the identity of the composite.
fn vcomp_identities(a: &PseudoAlgebra, rep: &mut ValidationReport) {
    let g = a.graph();
    let mut bad = Wit::new();
    let mut count = 0u64;
    for (&(u, v), &uv) in &a.dbl.vcomp.cubes {
        count += 1;
        let entry = a
            .dbl
            .vcomp
            .arrows
            .get(&(g.vert.ids[u as usize], g.vert.ids[v as usize]));
        if entry != Some(&g.vert.ids[uv as usize]) {
            bad.push(format!(
                "1 ⊗ 1 at ({}, {}) is not the identity of the composite",
                g.vert.cube_label(u),
                g.vert.cube_label(v)
            ));
        }
    }
    rep.outcome(
        "alg/vcomp-identities",
        "vertical pasting of identity cells is the identity of the vertical \
         composite",
        count,
        CheckMethod::Exhaustive,
        bad.take(),
    );
}

/// The structure map is total on words, boundary-compatible, and sends
/// identity cell words to identities.
fn structure_total(
    a: &PseudoAlgebra,
    ev: &AlgEvaluator<'_>,
    words: &[PathWord],
    rep: &mut ValidationReport,
) {
    let g = a.graph();
    let parts: Vec<(u64, Vec<String>)> = words
        .par_iter()
        .map(|w| {
            let mut bad = Vec::new();
            let ctx = || w.label(g);
            match ev.compose_word(w) {
                Err(e) => bad.push(format!("{}: {e}", ctx())),
                Ok(c) => {
                    if g.src_obj(c) != w.src_obj() || g.tgt_obj(c) != w.tgt_obj(g) {
                        bad.push(format!("{}: composite has wrong boundary", ctx()));
                    }
                    let idw = super::words::identity_cell_word(g, w);
                    match ev.compose_cells(&idw) {
                        Err(e) => bad.push(format!("{}: {e}", ctx())),
                        Ok(ic) => {
                            if ic != g.vert.ids[c as usize] {
                                bad.push(format!(
                                    "{}: identity cell word does not compose to an identity",
                                    ctx()
                                ));
                            }
                        }
                    }
                }
            }
            (1, bad)
        })
        .collect();
    let (count, bad) = fold_sweep(parts);
    rep.outcome(
        "alg/structure-total",
        "the structure map is defined on every word, preserves boundaries, and \
         sends identity cell words to identities",
        count,
        CheckMethod::Exhaustive,
        bad,
    );
}

/// Typing, invertibility and naturality of the normaliser components.
fn normaliser_checks(a: &PseudoAlgebra, ev: &AlgEvaluator<'_>, rep: &mut ValidationReport) {
    let g = a.graph();

    let mut bad = Wit::new();
    let mut count = 0u64;
    for x in 0..g.base.n_cubes() {
        count += 1;
        let t = a.twist0[x as usize];
        if g.base.src(t) != x || g.base.tgt(t) != x {
            bad.push(format!(
                "normaliser at {} is not an endo-arrow",
                g.base.cube_label(x)
            ));
        }
    }
    for u in 0..g.vert.n_cubes() {
        count += 1;
        let t = a.twist[u as usize];
        if g.vert.src(t) != u || g.vert.tgt(t) != u {
            bad.push(format!(
                "normaliser at {} is not an endo-cell",
                g.vert.cube_label(u)
            ));
        } else if g.neg_face(t) != a.twist0[g.src_obj(u) as usize]
            || g.pos_face(t) != a.twist0[g.tgt_obj(u) as usize]
        {
            bad.push(format!(
                "normaliser at {} has faces other than the object components",
                g.vert.cube_label(u)
            ));
        }
    }
    rep.outcome(
        "alg/normaliser-typing",
        "normaliser components are endo-cells whose faces are the object \
         components",
        count,
        CheckMethod::Exhaustive,
        bad.take(),
    );

    let mut bad = Wit::new();
    let mut count = 0u64;
    for x in 0..g.base.n_cubes() {
        count += 1;
        if let Err(e) = ev.inverse0(a.twist0[x as usize]) {
            bad.push_err(&g.base.cube_label(x), e);
        }
    }
    for u in 0..g.vert.n_cubes() {
        count += 1;
        if let Err(e) = ev.inverse(a.twist[u as usize]) {
            bad.push_err(&g.vert.cube_label(u), e);
        }
    }
    rep.outcome(
        "alg/normaliser-invertible",
        "every normaliser component is transversally invertible",
        count,
        CheckMethod::Exhaustive,
        bad.take(),
    );

    let mut bad = Wit::new();
    let mut count = 0u64;
    for f in 0..g.base.n_arrows() {
        count += 1;
        let lhs = g.base.compose0(a.twist0[g.base.src(f) as usize], f).ok();
        let rhs = g.base.compose0(f, a.twist0[g.base.tgt(f) as usize]).ok();
        if lhs.is_none() || lhs != rhs {
            bad.push(format!(
                "normaliser square at {} does not commute",
                g.base.arrow_label(f)
            ));
        }
    }
    for c in 0..g.vert.n_arrows() {
        count += 1;
        let lhs = g.vert.compose0(a.twist[g.vert.src(c) as usize], c).ok();
        let rhs = g.vert.compose0(c, a.twist[g.vert.tgt(c) as usize]).ok();
        if lhs.is_none() || lhs != rhs {
            bad.push(format!(
                "normaliser square at {} does not commute",
                g.vert.arrow_label(c)
            ));
        }
    }
    rep.outcome(
        "alg/normaliser-natural",
        "the normaliser is natural: it commutes transversally with every cell \
         and every object arrow",
        count,
        CheckMethod::Exhaustive,
        bad.take(),
    );
}

/// The two unit laws for the extended comparison.
fn unit_laws(
    a: &PseudoAlgebra,
    ev: &AlgEvaluator<'_>,
    words: &[PathWord],
    rep: &mut ValidationReport,
) {
    let g = a.graph();

    let parts: Vec<(u64, Vec<String>)> = words
        .par_iter()
        .map(|w| {
            let mut bad = Vec::new();
            let run = || -> Result<bool> {
                let tw_word = CellWord {
                    base: ev.normaliser0(w.base)?,
                    letters: w
                        .letters
                        .iter()
                        .map(|&u| ev.normaliser(u))
                        .collect::<Result<Vec<_>>>()?,
                };
                let f = ev.compose_cells(&tw_word)?;
                let k = ev.comparison(&split_letters(g, w))?;
                let c = ev.compose_word(w)?;
                Ok(g.vert.compose0(f, k)? == g.vert.ids[c as usize])
            };
            match run() {
                Err(e) => bad.push(format!("{}: {e}", w.label(g))),
                Ok(false) => bad.push(format!(
                    "{}: normaliser fold and letterwise comparison do not cancel",
                    w.label(g)
                )),
                Ok(true) => {}
            }
            (1, bad)
        })
        .collect();
    let (count, bad) = fold_sweep(parts);
    rep.outcome(
        "alg/unit-left",
        "folding the normaliser over the letters and comparing along the \
         letterwise splitting is the identity",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    let parts: Vec<(u64, Vec<String>)> = words
        .par_iter()
        .map(|w| {
            let mut bad = Vec::new();
            let run = || -> Result<bool> {
                let c = ev.compose_word(w)?;
                let t = ev.normaliser(c)?;
                let k = ev.comparison(&single_block(w))?;
                Ok(g.vert.compose0(t, k)? == g.vert.ids[c as usize])
            };
            match run() {
                Err(e) => bad.push(format!("{}: {e}", w.label(g))),
                Ok(false) => bad.push(format!(
                    "{}: normaliser at the composite and one-block comparison do \
                     not cancel",
                    w.label(g)
                )),
                Ok(true) => {}
            }
            (1, bad)
        })
        .collect();
    let (count, bad) = fold_sweep(parts);
    rep.outcome(
        "alg/unit-right",
        "the normaliser at a composite and the one-block comparison cancel",
        count,
        CheckMethod::Exhaustive,
        bad,
    );
}

/// Typing, speciality-up-to-normaliser and invertibility of the extended
/// comparison over all block words within the weight budget.
fn comparison_checks(
    a: &PseudoAlgebra,
    ev: &AlgEvaluator<'_>,
    words: &[PathWord],
    opts: &PsaOptions,
    rep: &mut ValidationReport,
) {
    let g = a.graph();
    let parts: Vec<(u64, Vec<String>, Vec<String>)> = words
        .par_iter()
        .map(|w| {
            let mut n = 0u64;
            let mut bad_typing = Vec::new();
            let mut bad_inv = Vec::new();
            for bw in block_words_of(g, w, opts.len) {
                n += 1;
                let label = || bw.label(g);
                let run = || -> Result<Vec<String>> {
                    let mut local = Vec::new();
                    let k = ev.comparison(&bw)?;
                    let blockwise = PathWord {
                        base: bw.base,
                        letters: bw
                            .blocks
                            .iter()
                            .map(|b| ev.compose_word(b))
                            .collect::<Result<Vec<_>>>()?,
                    };
                    let src = ev.compose_word(&blockwise)?;
                    let tgt = ev.compose_word(w)?;
                    if g.vert.src(k) != src || g.vert.tgt(k) != tgt {
                        local.push(format!("{}: comparison has wrong boundary", label()));
                    }
                    let neg_exp = ev.inverse0(ev.normaliser0(w.src_obj())?)?;
                    let pos_exp = ev.inverse0(ev.normaliser0(w.tgt_obj(g))?)?;
                    if g.neg_face(k) != neg_exp || g.pos_face(k) != pos_exp {
                        local.push(format!(
                            "{}: comparison faces are not inverse normaliser components",
                            label()
                        ));
                    }
                    Ok(local)
                };
                match run() {
                    Err(e) => bad_typing.push(format!("{}: {e}", label())),
                    Ok(local) => bad_typing.extend(local),
                }
                match ev.comparison(&bw).and_then(|k| ev.inverse(k)) {
                    Err(e) => bad_inv.push(format!("{}: {e}", label())),
                    Ok(_) => {}
                }
            }
            bad_typing.truncate(crate::report::MAX_WITNESSES);
            bad_inv.truncate(crate::report::MAX_WITNESSES);
            (n, bad_typing, bad_inv)
        })
        .collect();
    let mut count = 0u64;
    let mut bad_typing = Wit::new();
    let mut bad_inv = Wit::new();
    for (n, t, i) in parts {
        count += n;
        for s in t {
            bad_typing.push(s);
        }
        for s in i {
            bad_inv.push(s);
        }
    }
    rep.outcome(
        "alg/comparison",
        "the comparison at every block word runs from the blockwise composite to \
         the flat composite, with inverse normaliser components as faces",
        count,
        CheckMethod::Exhaustive,
        bad_typing.take(),
    );
    rep.outcome(
        "alg/comparison-invertible",
        "every comparison component is transversally invertible",
        count,
        CheckMethod::Exhaustive,
        bad_inv.take(),
    );
}

/// Naturality of the comparison in the word, over all cell block words
/// within the (smaller) naturality budget.
fn comparison_naturality(
    a: &PseudoAlgebra,
    ev: &AlgEvaluator<'_>,
    opts: &PsaOptions,
    rep: &mut ValidationReport,
) {
    let g = a.graph();
    let cwords = cell_words(g, opts.nat_len);
    let parts: Vec<(u64, Vec<String>)> = cwords
        .par_iter()
        .map(|cw| {
            let mut n = 0u64;
            let mut bad = Vec::new();
            for phi in cell_block_words_of(g, cw, opts.nat_len) {
                n += 1;
                let run = || -> Result<bool> {
                    let w_src = phi.src_blocks(g);
                    let w_tgt = phi.tgt_blocks(g);
                    let lhs = g
                        .vert
                        .compose0(ev.compose_block_cells(&phi)?, ev.comparison(&w_tgt)?)?;
                    let rhs = g
                        .vert
                        .compose0(ev.comparison(&w_src)?, ev.compose_cells(&flatten_cell_blocks(&phi))?)?;
                    Ok(lhs == rhs)
                };
                match run() {
                    Err(e) => {
                        if bad.len() < crate::report::MAX_WITNESSES {
                            bad.push(format!("{}: {e}", phi.label(g)));
                        }
                    }
                    Ok(false) => {
                        if bad.len() < crate::report::MAX_WITNESSES {
                            bad.push(format!(
                                "{}: comparison square does not commute",
                                phi.label(g)
                            ));
                        }
                    }
                    Ok(true) => {}
                }
            }
            (n, bad)
        })
        .collect();
    let (count, bad) = fold_sweep(parts);
    rep.outcome(
        "alg/comparison-natural",
        "the comparison commutes with the structure map on every cell block word",
        count,
        CheckMethod::Exhaustive,
        bad,
    );
}

/// The pentagon for iterated flattening, over all deep words within the
/// weight budget.
fn pentagon(
    a: &PseudoAlgebra,
    ev: &AlgEvaluator<'_>,
    words: &[PathWord],
    opts: &PsaOptions,
    rep: &mut ValidationReport,
) {
    let g = a.graph();
    let parts: Vec<(u64, Vec<String>)> = words
        .par_iter()
        .map(|w| {
            let mut n = 0u64;
            let mut bad = Vec::new();
            for d in deep_words_of(g, w, opts.len) {
                n += 1;
                let run = || -> Result<bool> {
                    let blockwise = BlockWord {
                        base: d.base,
                        blocks: d
                            .blocks
                            .iter()
                            .map(|b| {
                                Ok(PathWord {
                                    base: b.base,
                                    letters: b
                                        .blocks
                                        .iter()
                                        .map(|x| ev.compose_word(x))
                                        .collect::<Result<Vec<_>>>()?,
                                })
                            })
                            .collect::<Result<Vec<_>>>()?,
                    };
                    let outer = flatten_outer(&d);
                    let inner = flatten_inner(&d);
                    let lhs = g
                        .vert
                        .compose0(ev.comparison(&blockwise)?, ev.comparison(&outer)?)?;
                    let kcells = d
                        .blocks
                        .iter()
                        .map(|b| ev.comparison(b))
                        .collect::<Result<Vec<_>>>()?;
                    let kbase = ev.inverse0(ev.normaliser0(w.src_obj())?)?;
                    let f = ev.compose_cells(&CellWord { base: kbase, letters: kcells })?;
                    let rhs = g.vert.compose0(f, ev.comparison(&inner)?)?;
                    Ok(lhs == rhs)
                };
                match run() {
                    Err(e) => {
                        if bad.len() < crate::report::MAX_WITNESSES {
                            bad.push(format!("{}: {e}", d.label(g)));
                        }
                    }
                    Ok(false) => {
                        if bad.len() < crate::report::MAX_WITNESSES {
                            bad.push(format!("{}: pentagon does not commute", d.label(g)));
                        }
                    }
                    Ok(true) => {}
                }
            }
            (n, bad)
        })
        .collect();
    let (count, bad) = fold_sweep(parts);
    rep.outcome(
        "alg/pentagon",
        "comparing blockwise then flattening the outer layer equals folding the \
         block comparisons then flattening the inner layers",
        count,
        CheckMethod::Exhaustive,
        bad,
    );
}

/// Consequences of normality: unary and unit block words have identity
/// comparisons.
fn normal_units(a: &PseudoAlgebra, ev: &AlgEvaluator<'_>, rep: &mut ValidationReport) {
    let g = a.graph();
    let mut bad = Wit::new();
    let mut count = 0u64;
    for u in 0..g.vert.n_cubes() {
        count += 1;
        match ev.comparison(&single_block(&letter_word(g, u))) {
            Err(e) => bad.push_err(&g.vert.cube_label(u), e),
            Ok(k) => {
                if k != g.vert.ids[u as usize] {
                    bad.push(format!(
                        "comparison at the unary word on {} is not the identity",
                        g.vert.cube_label(u)
                    ));
                }
            }
        }
    }
    for x in 0..g.base.n_cubes() {
        count += 1;
        match ev.comparison(&single_block(&empty_word(x))) {
            Err(e) => bad.push_err(&g.base.cube_label(x), e),
            Ok(k) => {
                let e_x = a.dbl.unit.on_cubes[x as usize];
                if k != g.vert.ids[e_x as usize] {
                    bad.push(format!(
                        "comparison at the unit word on {} is not the identity",
                        g.base.cube_label(x)
                    ));
                }
            }
        }
    }
    rep.outcome(
        "alg/normal-units",
        "in a normal algebra, one-block words of length at most one have \
         identity comparisons",
        count,
        CheckMethod::Exhaustive,
        bad.take(),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comb_shapes() {
        let left = fold_tree(FoldShape::Left, 0, &[1, 2, 3]);
        let right = fold_tree(FoldShape::Right, 0, &[1, 2, 3]);
        assert_ne!(left, right);
        let mut l = Vec::new();
        tree_letters(&left, &mut l);
        let mut r = Vec::new();
        tree_letters(&right, &mut r);
        assert_eq!(l, r);
        assert_eq!(fold_tree(FoldShape::Left, 5, &[]), Expr::Unit(5));
        assert_eq!(
            fold_tree(FoldShape::Left, 0, &[7]),
            fold_tree(FoldShape::Right, 0, &[7])
        );
    }
}
