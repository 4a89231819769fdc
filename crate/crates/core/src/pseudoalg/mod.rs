//! Free double categories on graphs of categories, and pseudo double
//! algebras with exhaustive law checking.
//!
//! A *graph of categories* consists of a category of objects and
//! transversal arrows, a category of vertical arrows and transversal
//! cells, and a pair of face functors cutting out the object boundaries
//! of every vertical arrow.  Vertical *path words* over such a graph form
//! a free double category ([`free_double`]); sending a graph to its words
//! is a monad, with singleton embedding and block flattening as unit and
//! multiplication ([`words`]).
//!
//! Algebras for that monad are strict double categories.  Weakening the
//! structure map up to coherent special comparisons gives *pseudo double
//! algebras*: here one is presented by a [`WeakDoubleCategory`] carrier
//! together with a bracketing shape and normaliser components
//! ([`PseudoAlgebra`]), from which word composites and re-bracketing
//! comparisons are evaluated on demand.  [`validate_pseudo_algebra`]
//! checks the unit, pentagon, naturality and invertibility laws over all
//! words up to a length bound; [`functor_j`], [`functor_v`] and
//! [`epsilon`] witness that normal pseudo algebras are weak double
//! categories, with the comparison morphisms re-verified instance-wise.
//!
//! Morphisms of algebras come in strict, pseudo, lax and colax flavours
//! ([`AlgebraMorphism`]), and squares of lax against colax morphisms are
//! filled by [`PsaCell`]s whose coherence law is checked word by word.

pub mod algebra;
pub mod dbl;
pub mod equivalence;
pub mod examples;
pub mod morphisms;
pub mod words;

use std::collections::BTreeSet;

use crate::chiral::{LevelMap, TvCat};
use crate::report::{CheckMethod, ValidationReport};

pub use algebra::{
    is_normal, validate_pseudo_algebra, validate_pseudo_algebra_with, AlgEvaluator, FoldShape,
    PsaOptions, PseudoAlgebra,
};
pub use dbl::{validate_weak_double, weak_double_from_chiral, DblFunctor, WeakDoubleCategory};
pub use equivalence::{epsilon, functor_j, functor_v, functor_v_morphism, is_identity_morphism};
pub use morphisms::{
    compose_algebra_morphisms, compose_psa_h, compose_psa_v, identity_algebra_morphism,
    lift_double_functor, pseudo_as_colax, validate_algebra_morphism, validate_psa_cell,
    AlgebraMorphism, MorphFlavor, PsaCell,
};
pub use words::{
    cell_words, free_double, path_words, CellWord, FreeDouble, PathWord,
};

/// A graph of categories: the generating shape for free double categories
/// and the underlying data of every weak double category.
///
/// `base` holds the objects and the transversal arrows between them;
/// `vert` holds the vertical arrows (as its cubes) and the transversal
/// cells between those.  `neg` and `pos` are the face functors
/// `∂⁻, ∂⁺ : vert → base` sending a vertical arrow `u : x ⤓ y` to `x`
/// resp. `y` and a cell to its boundary arrows.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CatGraph {
    pub name: String,
    pub base: TvCat,
    pub vert: TvCat,
    pub neg: LevelMap,
    pub pos: LevelMap,
}

impl CatGraph {
    /// Start object of a vertical arrow.
    pub fn src_obj(&self, u: u32) -> u32 {
        self.neg.on_cubes[u as usize]
    }

    /// End object of a vertical arrow.
    pub fn tgt_obj(&self, u: u32) -> u32 {
        self.pos.on_cubes[u as usize]
    }

    /// Negative boundary arrow of a cell.
    pub fn neg_face(&self, a: u32) -> u32 {
        self.neg.on_arrows[a as usize]
    }

    /// Positive boundary arrow of a cell.
    pub fn pos_face(&self, a: u32) -> u32 {
        self.pos.on_arrows[a as usize]
    }
}

/// Shape gate for a graph of categories: both levels carry well-formed
/// tables and the face maps have the right lengths and ranges.
fn graph_shapes(g: &CatGraph, rep: &mut ValidationReport) -> bool {
    let mut bad = Wit::new();
    for (label, cat) in [("base", &g.base), ("vert", &g.vert)] {
        let nc = cat.n_cubes();
        let na = cat.n_arrows();
        if cat.ids.len() != cat.cubes.len() {
            bad.push(format!("{label}: ids length mismatch"));
        }
        for (x, arr) in cat.arrows.iter().enumerate() {
            if arr.src >= nc || arr.tgt >= nc {
                bad.push(format!("{label}: arrow #{x} endpoint out of range"));
            }
        }
        for &e in &cat.ids {
            if e >= na {
                bad.push(format!("{label}: identity entry out of range"));
            }
        }
        for (&(f, h), &k) in &cat.comp {
            if f >= na || h >= na || k >= na {
                bad.push(format!("{label}: composition entry ({f},{h}) out of range"));
            }
        }
    }
    for (label, m) in [("∂⁻", &g.neg), ("∂⁺", &g.pos)] {
        if m.on_cubes.len() != g.vert.cubes.len() || m.on_arrows.len() != g.vert.arrows.len() {
            bad.push(format!("face {label}: length mismatch"));
        } else if m.on_cubes.iter().any(|&v| v >= g.base.n_cubes())
            || m.on_arrows.iter().any(|&v| v >= g.base.n_arrows())
        {
            bad.push(format!("face {label}: value out of range"));
        }
    }
    let ok = bad.0.is_empty();
    rep.outcome(
        "graph/shape",
        "both level categories and both face maps are present with consistent \
         lengths and in-range entries",
        2,
        CheckMethod::Exhaustive,
        bad.take(),
    );
    ok
}

/// Category axioms for one level of a graph, reported under `prefix`.
fn check_category(prefix: &str, cat: &TvCat, rep: &mut ValidationReport) {
    use rayon::prelude::*;

    // Identities are endo-arrows and neutral on both sides.
    let mut bad = Wit::new();
    let mut count = 0u64;
    for (x, &e) in cat.ids.iter().enumerate() {
        count += 1;
        if cat.src(e) != x as u32 || cat.tgt(e) != x as u32 {
            bad.push(format!(
                "identity of {} is not an endo-arrow",
                cat.cube_label(x as u32)
            ));
        }
    }
    for f in 0..cat.n_arrows() {
        count += 2;
        let l = cat.comp.get(&(cat.ids[cat.src(f) as usize], f));
        let r = cat.comp.get(&(f, cat.ids[cat.tgt(f) as usize]));
        if l != Some(&f) {
            bad.push(format!("1;{0} ≠ {0}", cat.arrow_label(f)));
        }
        if r != Some(&f) {
            bad.push(format!("{0};1 ≠ {0}", cat.arrow_label(f)));
        }
    }
    rep.outcome(
        format!("{prefix}/identities"),
        "identity arrows are endo-arrows and neutral for transversal composition",
        count,
        CheckMethod::Exhaustive,
        bad.take(),
    );

    // Closure: the table holds exactly the composable pairs, with correct
    // boundaries.
    let mut bad = Wit::new();
    let mut count = 0u64;
    for (&(f, h), &k) in &cat.comp {
        count += 1;
        if cat.tgt(f) != cat.src(h) {
            bad.push(format!(
                "table entry {};{} is not composable",
                cat.arrow_label(f),
                cat.arrow_label(h)
            ));
        } else if cat.src(k) != cat.src(f) || cat.tgt(k) != cat.tgt(h) {
            bad.push(format!(
                "composite {};{} has wrong boundary",
                cat.arrow_label(f),
                cat.arrow_label(h)
            ));
        }
    }
    let mut by_src: Vec<Vec<u32>> = vec![Vec::new(); cat.n_cubes() as usize];
    for f in 0..cat.n_arrows() {
        by_src[cat.src(f) as usize].push(f);
    }
    for f in 0..cat.n_arrows() {
        for &h in &by_src[cat.tgt(f) as usize] {
            count += 1;
            if !cat.comp.contains_key(&(f, h)) {
                bad.push(format!(
                    "missing composite {};{}",
                    cat.arrow_label(f),
                    cat.arrow_label(h)
                ));
            }
        }
    }
    rep.outcome(
        format!("{prefix}/composition"),
        "the transversal composition table is total on composable pairs and \
         boundary-correct",
        count,
        CheckMethod::Exhaustive,
        bad.take(),
    );

    // Associativity, parallelised over the first arrow.
    let per_arrow: Vec<(u64, Vec<String>)> = (0..cat.n_arrows())
        .into_par_iter()
        .map(|f| {
            let mut n = 0u64;
            let mut bad = Vec::new();
            for &h in &by_src[cat.tgt(f) as usize] {
                let fh = match cat.comp.get(&(f, h)) {
                    Some(&v) => v,
                    None => continue,
                };
                for &k in &by_src[cat.tgt(h) as usize] {
                    n += 1;
                    let lhs = cat.comp.get(&(fh, k));
                    let rhs = cat
                        .comp
                        .get(&(h, k))
                        .and_then(|&hk| cat.comp.get(&(f, hk)));
                    if lhs != rhs && bad.len() < crate::report::MAX_WITNESSES {
                        bad.push(format!(
                            "({0};{1});{2} ≠ {0};({1};{2})",
                            cat.arrow_label(f),
                            cat.arrow_label(h),
                            cat.arrow_label(k)
                        ));
                    }
                }
            }
            (n, bad)
        })
        .collect();
    let mut count = 0u64;
    let mut bad = Wit::new();
    for (n, w) in per_arrow {
        count += n;
        for s in w {
            bad.push(s);
        }
    }
    rep.outcome(
        format!("{prefix}/associativity"),
        "transversal composition is associative",
        count,
        CheckMethod::Exhaustive,
        bad.take(),
    );
}

/// Functor laws for one face map of a graph.
fn check_face_functor(label: &str, g: &CatGraph, m: &LevelMap, rep: &mut ValidationReport) {
    let mut bad = Wit::new();
    let mut count = 0u64;
    for u in 0..g.vert.n_cubes() {
        count += 1;
        if m.on_arrows[g.vert.ids[u as usize] as usize]
            != g.base.ids[m.on_cubes[u as usize] as usize]
        {
            bad.push(format!(
                "{label} does not preserve the identity of {}",
                g.vert.cube_label(u)
            ));
        }
    }
    for a in 0..g.vert.n_arrows() {
        count += 1;
        let fa = m.on_arrows[a as usize];
        if g.base.src(fa) != m.on_cubes[g.vert.src(a) as usize]
            || g.base.tgt(fa) != m.on_cubes[g.vert.tgt(a) as usize]
        {
            bad.push(format!(
                "{label} of {} has wrong boundary",
                g.vert.arrow_label(a)
            ));
        }
    }
    for (&(a, b), &ab) in &g.vert.comp {
        count += 1;
        let lhs = m.on_arrows[ab as usize];
        let rhs = g
            .base
            .comp
            .get(&(m.on_arrows[a as usize], m.on_arrows[b as usize]));
        if rhs != Some(&lhs) {
            bad.push(format!(
                "{label} does not preserve {};{}",
                g.vert.arrow_label(a),
                g.vert.arrow_label(b)
            ));
        }
    }
    rep.outcome(
        format!("faces/{}", if label == "∂⁻" { "negative" } else { "positive" }),
        format!("{label} is a functor from cells to object arrows"),
        count,
        CheckMethod::Exhaustive,
        bad.take(),
    );
}

/// Check that `g` really is a graph of categories: both levels satisfy the
/// category axioms and both faces are functors.
pub fn validate_cat_graph(g: &CatGraph) -> ValidationReport {
    let mut rep = ValidationReport::new(g.name.clone());
    if graph_shapes(g, &mut rep) {
        check_category("base", &g.base, &mut rep);
        check_category("vert", &g.vert, &mut rep);
        check_face_functor("∂⁻", g, &g.neg, &mut rep);
        check_face_functor("∂⁺", g, &g.pos, &mut rep);
    }
    rep.finish()
}

/// Transversal inverses of every arrow of `cat` that has one, found by a
/// single scan of the composition table.
pub(crate) fn inverse_table(cat: &TvCat) -> Vec<Option<u32>> {
    let mut inv: Vec<Option<u32>> = vec![None; cat.n_arrows() as usize];
    for (&(f, h), &k) in &cat.comp {
        if k == cat.ids[cat.src(f) as usize]
            && cat.comp.get(&(h, f)) == Some(&cat.ids[cat.src(h) as usize])
        {
            inv[f as usize] = Some(h);
        }
    }
    inv
}

/// Witness collector capped at [`crate::report::MAX_WITNESSES`].
pub(crate) struct Wit(pub Vec<String>);

impl Wit {
    pub fn new() -> Wit {
        Wit(Vec::new())
    }

    pub fn push(&mut self, s: String) {
        if self.0.len() < crate::report::MAX_WITNESSES {
            self.0.push(s);
        }
    }

    pub fn push_err(&mut self, ctx: &str, e: crate::KernelError) {
        self.push(format!("{ctx}: {e}"));
    }

    pub fn take(self) -> Vec<String> {
        self.0
    }
}

/// Fold ordered per-item results `(instances, failures)` from a parallel
/// sweep into a total count and a capped witness list.  Collecting per item
/// and merging in order keeps reports deterministic under parallelism.
pub(crate) fn fold_sweep(parts: Vec<(u64, Vec<String>)>) -> (u64, Vec<String>) {
    let mut count = 0u64;
    let mut bad = Wit::new();
    for (n, w) in parts {
        count += n;
        for s in w {
            bad.push(s);
        }
    }
    (count, bad.take())
}

/// Deduplicate a sorted listing of object names, for error messages.
pub(crate) fn duplicate_names(names: &[String]) -> Vec<String> {
    let mut seen = BTreeSet::new();
    let mut dup = Vec::new();
    for n in names {
        if !seen.insert(n) && !dup.contains(n) {
            dup.push(n.clone());
        }
    }
    dup
}
