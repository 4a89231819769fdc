//! A genuinely weak chiral multiple category of spans.
//!
//! Base cubes are the subsets of a two-element set; base arrows are all
//! functions between them.  A cube of positive degree in direction 1 is a
//! span of injections, and spans concatenate by pullback, realised
//! canonically as an intersection of images.  Concatenation is therefore
//! associative and unital only up to comparison arrows, which this module
//! finds by searching for the unique transversally special arrow between
//! the two composites — so the fixture exercises every weak-structure law
//! of the validator.  Direction 2 is degenerate (a formal cylinder), which
//! makes the interchanger tables small enough to enumerate while still
//! exercising every two-direction law.
//!
//! The module also provides structure endomorphisms of every laxity
//! (shift, swap, collapse) and a doubly weak square built from them, which
//! the higher cells of [`super::cells`] are tested against.

use std::collections::BTreeMap;

use once_cell::sync::Lazy;

use super::morphisms::{identity_pmorphism, PMorphism};
use super::*;

/// A function between subsets of `{1,2}`, stored per element: `0` when the
/// element is outside the domain, otherwise the image element plus one.
type Func = [u8; 2];

fn enc(f: Func) -> u8 {
    f[0] + 3 * f[1]
}

fn in_mask(m: u8, e: u8) -> bool {
    m & (1 << e) != 0
}

fn mask_str(m: u8) -> &'static str {
    ["0", "1", "2", "12"][m as usize]
}

fn identity_on(m: u8) -> Func {
    let mut f = [0, 0];
    for e in 0..2 {
        if in_mask(m, e) {
            f[e as usize] = e + 1;
        }
    }
    f
}

fn domain(f: Func) -> u8 {
    (f[0] != 0) as u8 | (((f[1] != 0) as u8) << 1)
}

fn image(f: Func) -> u8 {
    let mut m = 0;
    for e in 0..2 {
        if f[e] != 0 {
            m |= 1 << (f[e] - 1);
        }
    }
    m
}

fn injective(f: Func) -> bool {
    f[0] == 0 || f[1] == 0 || f[0] != f[1]
}

/// Diagrammatic composite: first `f`, then `g`.
fn then(f: Func, g: Func) -> Func {
    let mut h = [0, 0];
    for e in 0..2 {
        if f[e] != 0 {
            h[e] = g[(f[e] - 1) as usize];
        }
    }
    h
}

fn restrict(f: Func, m: u8) -> Func {
    let mut h = f;
    for e in 0..2 {
        if !in_mask(m, e as u8) {
            h[e] = 0;
        }
    }
    h
}

/// Partial inverse of an injective function.
fn inverse(f: Func) -> Func {
    let mut h = [0, 0];
    for e in 0..2u8 {
        if f[e as usize] != 0 {
            h[(f[e as usize] - 1) as usize] = e + 1;
        }
    }
    h
}

/// All functions defined exactly on `src` with values in `tgt`, in a fixed
/// order.
fn total_funcs(src: u8, tgt: u8) -> Vec<Func> {
    let choices = |e: u8| -> Vec<u8> {
        if !in_mask(src, e) {
            vec![0]
        } else {
            (0..2).filter(|&b| in_mask(tgt, b)).map(|b| b + 1).collect()
        }
    };
    let mut out = Vec::new();
    for c0 in choices(0) {
        for c1 in choices(1) {
            out.push([c0, c1]);
        }
    }
    out
}

/// A span of subsets with both legs injective.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Span {
    src: u8,
    mid: u8,
    tgt: u8,
    f: Func,
    g: Func,
}

impl Span {
    fn key(&self) -> (u8, u8, u8, u8, u8) {
        (self.src, self.mid, self.tgt, enc(self.f), enc(self.g))
    }

    fn degenerate(m: u8) -> Span {
        Span { src: m, mid: m, tgt: m, f: identity_on(m), g: identity_on(m) }
    }
}

/// The canonical pullback concatenation: the middle is the intersection of
/// the two inner images, with legs transported back along the injections.
fn pullback(x: &Span, y: &Span) -> Span {
    let w = image(x.g) & image(y.f);
    Span {
        src: x.src,
        mid: w,
        tgt: y.tgt,
        f: then(restrict(inverse(x.g), w), x.f),
        g: then(restrict(inverse(y.f), w), y.g),
    }
}

/// A transversal arrow of spans: three components making both squares
/// commute.
#[derive(Clone, Copy)]
struct SpanArrow {
    src: u32,
    tgt: u32,
    h: Func,
    k: Func,
    l: Func,
}

type ArrowKey = (u32, u32, u8, u8, u8);

impl SpanArrow {
    fn key(&self) -> ArrowKey {
        (self.src, self.tgt, enc(self.h), enc(self.k), enc(self.l))
    }
}

pub(crate) struct Model {
    pub(crate) cmc: ChiralMC,
    base_arrows: Vec<(u8, u8, Func)>,
    base_idx: BTreeMap<(u8, u8, u8), u32>,
    spans: Vec<Span>,
    arrows: Vec<SpanArrow>,
    arrow_idx: BTreeMap<ArrowKey, u32>,
    e1_cubes: Vec<u32>,
    e1_arrows: Vec<u32>,
    plus_cubes: BTreeMap<(u32, u32), u32>,
    plus_arrows: BTreeMap<(u32, u32), u32>,
    hom1: BTreeMap<(u32, u32), Vec<u32>>,
}

impl Model {
    /// The unique transversally special arrow between two parallel spans.
    fn special(&self, src: u32, tgt: u32) -> u32 {
        let s = &self.spans[src as usize];
        let hits: Vec<u32> = self
            .hom1
            .get(&(src, tgt))
            .map(|v| {
                v.iter()
                    .copied()
                    .filter(|&f| {
                        let ar = &self.arrows[f as usize];
                        ar.h == identity_on(s.src) && ar.l == identity_on(s.tgt)
                    })
                    .collect()
            })
            .unwrap_or_default();
        assert_eq!(hits.len(), 1, "comparison arrow is not unique");
        hits[0]
    }
}

fn mirror_level(lv: &TvCat) -> TvCat {
    TvCat {
        cubes: lv.cubes.iter().map(|c| format!("e2({c})")).collect(),
        arrows: lv
            .arrows
            .iter()
            .map(|a| TvArrow { name: format!("e2({})", a.name), src: a.src, tgt: a.tgt })
            .collect(),
        ids: lv.ids.clone(),
        comp: lv.comp.clone(),
    }
}

fn identity_vecs(lv: &TvCat) -> LevelMap {
    LevelMap {
        on_cubes: (0..lv.n_cubes()).collect(),
        on_arrows: (0..lv.n_arrows()).collect(),
    }
}

fn diagonal_comp(lv: &TvCat) -> GeomComp {
    GeomComp {
        cubes: (0..lv.n_cubes()).map(|x| ((x, x), x)).collect(),
        arrows: (0..lv.n_arrows()).map(|f| ((f, f), f)).collect(),
    }
}

fn build_model() -> Model {
    // Degree-zero level: subsets and all functions.
    let mut base_arrows: Vec<(u8, u8, Func)> = Vec::new();
    let mut base_idx: BTreeMap<(u8, u8, u8), u32> = BTreeMap::new();
    let mut base = TvCat {
        cubes: (0..4).map(|m| mask_str(m).to_string()).collect(),
        arrows: Vec::new(),
        ids: Vec::new(),
        comp: BTreeMap::new(),
    };
    for src in 0..4u8 {
        for tgt in 0..4u8 {
            for f in total_funcs(src, tgt) {
                let idx = base_arrows.len() as u32;
                base_idx.insert((src, tgt, enc(f)), idx);
                base_arrows.push((src, tgt, f));
                base.arrows.push(TvArrow {
                    name: format!("f{}>{}#{}", mask_str(src), mask_str(tgt), enc(f)),
                    src: src as u32,
                    tgt: tgt as u32,
                });
            }
        }
    }
    for m in 0..4u8 {
        base.ids.push(base_idx[&(m, m, enc(identity_on(m)))]);
    }
    for (i, &(s1, t1, f1)) in base_arrows.iter().enumerate() {
        for (j, &(s2, t2, f2)) in base_arrows.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let c = base_idx[&(s1, t2, enc(then(f1, f2)))];
            base.comp.insert((i as u32, j as u32), c);
        }
    }

    // Spans.
    let mut spans: Vec<Span> = Vec::new();
    for src in 0..4u8 {
        for mid in 0..4u8 {
            for tgt in 0..4u8 {
                for f in total_funcs(mid, src) {
                    if !injective(f) {
                        continue;
                    }
                    for g in total_funcs(mid, tgt) {
                        if injective(g) {
                            spans.push(Span { src, mid, tgt, f, g });
                        }
                    }
                }
            }
        }
    }
    let span_idx: BTreeMap<(u8, u8, u8, u8, u8), u32> =
        spans.iter().enumerate().map(|(i, s)| (s.key(), i as u32)).collect();

    // Transversal arrows of spans: the middle component is forced by the
    // left square, the right square is then a filter.
    let mut arrows: Vec<SpanArrow> = Vec::new();
    let mut tv1 = TvCat {
        cubes: spans
            .iter()
            .map(|s| {
                format!(
                    "sp({}<{}>{}#{}.{})",
                    mask_str(s.src),
                    mask_str(s.mid),
                    mask_str(s.tgt),
                    enc(s.f),
                    enc(s.g)
                )
            })
            .collect(),
        arrows: Vec::new(),
        ids: Vec::new(),
        comp: BTreeMap::new(),
    };
    for (xi, x) in spans.iter().enumerate() {
        for (yi, y) in spans.iter().enumerate() {
            for h in total_funcs(x.src, y.src) {
                let fh = then(x.f, h);
                for l in total_funcs(x.tgt, y.tgt) {
                    let k = then(fh, inverse(y.f));
                    if domain(k) != x.mid || then(k, y.f) != fh {
                        continue;
                    }
                    if then(k, y.g) != then(x.g, l) {
                        continue;
                    }
                    let a = SpanArrow { src: xi as u32, tgt: yi as u32, h, k, l };
                    tv1.arrows.push(TvArrow {
                        name: format!("t{}>{}#{}.{}.{}", xi, yi, enc(h), enc(k), enc(l)),
                        src: xi as u32,
                        tgt: yi as u32,
                    });
                    arrows.push(a);
                }
            }
        }
    }
    let arrow_idx: BTreeMap<ArrowKey, u32> =
        arrows.iter().enumerate().map(|(i, a)| (a.key(), i as u32)).collect();
    for (xi, x) in spans.iter().enumerate() {
        tv1.ids.push(
            arrow_idx[&(
                xi as u32,
                xi as u32,
                enc(identity_on(x.src)),
                enc(identity_on(x.mid)),
                enc(identity_on(x.tgt)),
            )],
        );
    }
    let mut by_src: Vec<Vec<u32>> = vec![Vec::new(); spans.len()];
    for (i, a) in arrows.iter().enumerate() {
        by_src[a.src as usize].push(i as u32);
    }
    for (i, a) in arrows.iter().enumerate() {
        for &j in &by_src[a.tgt as usize] {
            let b = &arrows[j as usize];
            let c = SpanArrow {
                src: a.src,
                tgt: b.tgt,
                h: then(a.h, b.h),
                k: then(a.k, b.k),
                l: then(a.l, b.l),
            };
            tv1.comp.insert((i as u32, j), arrow_idx[&c.key()]);
        }
    }

    // Faces and the degeneracy in direction 1.
    let f1m = LevelMap {
        on_cubes: spans.iter().map(|s| s.src as u32).collect(),
        on_arrows: arrows.iter().map(|a| base_idx[&(spans[a.src as usize].src, spans[a.tgt as usize].src, enc(a.h))]).collect(),
    };
    let f1p = LevelMap {
        on_cubes: spans.iter().map(|s| s.tgt as u32).collect(),
        on_arrows: arrows.iter().map(|a| base_idx[&(spans[a.src as usize].tgt, spans[a.tgt as usize].tgt, enc(a.l))]).collect(),
    };
    let e1_cubes: Vec<u32> = (0..4u8).map(|m| span_idx[&Span::degenerate(m).key()]).collect();
    let e1_arrows: Vec<u32> = base_arrows
        .iter()
        .map(|&(s, t, f)| {
            arrow_idx[&(e1_cubes[s as usize], e1_cubes[t as usize], enc(f), enc(f), enc(f))]
        })
        .collect();
    let e1 = LevelMap { on_cubes: e1_cubes.clone(), on_arrows: e1_arrows.clone() };

    // Concatenation tables in direction 1.
    let mut plus_cubes: BTreeMap<(u32, u32), u32> = BTreeMap::new();
    for (xi, x) in spans.iter().enumerate() {
        for (yi, y) in spans.iter().enumerate() {
            if x.tgt == y.src {
                plus_cubes
                    .insert((xi as u32, yi as u32), span_idx[&pullback(x, y).key()]);
            }
        }
    }
    let mut by_hface: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (i, _) in arrows.iter().enumerate() {
        by_hface.entry(f1m.arrow(i as u32)).or_default().push(i as u32);
    }
    let mut plus_arrows: BTreeMap<(u32, u32), u32> = BTreeMap::new();
    for (i, a) in arrows.iter().enumerate() {
        let Some(partners) = by_hface.get(&f1p.arrow(i as u32)) else { continue };
        for &j in partners {
            let b = &arrows[j as usize];
            let src = plus_cubes[&(a.src, b.src)];
            let tgt = plus_cubes[&(a.tgt, b.tgt)];
            let c = SpanArrow {
                src,
                tgt,
                h: a.h,
                k: restrict(a.l, spans[src as usize].mid),
                l: b.l,
            };
            plus_arrows.insert((i as u32, j), arrow_idx[&c.key()]);
        }
    }

    let hom1 = tv1.hom_buckets();
    let mut model = Model {
        cmc: ChiralMC {
            name: "spans2".into(),
            degree: 2,
            levels: BTreeMap::new(),
            faces: BTreeMap::new(),
            degens: BTreeMap::new(),
            comps: BTreeMap::new(),
            lunitors: BTreeMap::new(),
            runitors: BTreeMap::new(),
            associators: BTreeMap::new(),
            interchangers: BTreeMap::new(),
            invertible_interchangers: true,
        },
        base_arrows,
        base_idx,
        spans,
        arrows,
        arrow_idx,
        e1_cubes,
        e1_arrows,
        plus_cubes,
        plus_arrows,
        hom1,
    };

    // Unitors and associators in direction 1, found by search.
    let lun1: Vec<u32> = model
        .spans
        .iter()
        .enumerate()
        .map(|(xi, x)| {
            let src = model.plus_cubes[&(model.e1_cubes[x.src as usize], xi as u32)];
            model.special(src, xi as u32)
        })
        .collect();
    let run1: Vec<u32> = model
        .spans
        .iter()
        .enumerate()
        .map(|(xi, x)| {
            let src = model.plus_cubes[&(xi as u32, model.e1_cubes[x.tgt as usize])];
            model.special(src, xi as u32)
        })
        .collect();
    let mut kappa1: BTreeMap<(u32, u32, u32), u32> = BTreeMap::new();
    let pc = model.plus_cubes.clone();
    for (&(x, y), &xy) in &pc {
        for (&(y2, z), &yz) in &pc {
            if y2 != y {
                continue;
            }
            let src = pc[&(x, yz)];
            let tgt = pc[&(xy, z)];
            kappa1.insert((x, y, z), model.special(src, tgt));
        }
    }

    // Assemble the four levels; direction 2 is a formal cylinder, so its
    // levels mirror the lower ones and its tables are diagonal.
    let i0 = MultiIndex::empty();
    let i1 = MultiIndex::single(1);
    let i2 = MultiIndex::single(2);
    let i12 = MultiIndex::new(vec![1, 2]);

    let tv2 = mirror_level(&base);
    let tv12 = mirror_level(&tv1);
    let cmc = &mut model.cmc;
    cmc.levels.insert(i0.clone(), base);
    cmc.levels.insert(i1.clone(), tv1);
    cmc.levels.insert(i2.clone(), tv2);
    cmc.levels.insert(i12.clone(), tv12);

    let lv = |idx: &MultiIndex, cmc: &ChiralMC| identity_vecs(&cmc.levels[idx]);
    let id0 = lv(&i0, cmc);
    let id1 = lv(&i1, cmc);

    cmc.faces.insert((i1.clone(), 1), [f1m.clone(), f1p.clone()]);
    cmc.faces.insert((i2.clone(), 2), [id0.clone(), id0.clone()]);
    cmc.faces.insert((i12.clone(), 2), [id1.clone(), id1.clone()]);
    cmc.faces.insert((i12.clone(), 1), [f1m, f1p]);

    cmc.degens.insert((i1.clone(), 1), e1.clone());
    cmc.degens.insert((i2.clone(), 2), id0);
    cmc.degens.insert((i12.clone(), 2), id1);
    cmc.degens.insert((i12.clone(), 1), e1);

    let gc1 = GeomComp { cubes: model.plus_cubes.clone(), arrows: model.plus_arrows.clone() };
    cmc.comps.insert((i1.clone(), 1), gc1.clone());
    cmc.comps.insert((i2.clone(), 2), diagonal_comp(&cmc.levels[&i2]));
    cmc.comps.insert((i12.clone(), 1), gc1);
    cmc.comps.insert((i12.clone(), 2), diagonal_comp(&cmc.levels[&i12]));

    let ids_of = |idx: &MultiIndex, cmc: &ChiralMC| cmc.levels[idx].ids.clone();
    cmc.lunitors.insert((i1.clone(), 1), lun1.clone());
    cmc.runitors.insert((i1.clone(), 1), run1.clone());
    cmc.lunitors.insert((i2.clone(), 2), ids_of(&i2, cmc));
    cmc.runitors.insert((i2.clone(), 2), ids_of(&i2, cmc));
    cmc.lunitors.insert((i12.clone(), 1), lun1);
    cmc.runitors.insert((i12.clone(), 1), run1);
    cmc.lunitors.insert((i12.clone(), 2), ids_of(&i12, cmc));
    cmc.runitors.insert((i12.clone(), 2), ids_of(&i12, cmc));

    let diag_assoc = |idx: &MultiIndex, cmc: &ChiralMC| -> BTreeMap<(u32, u32, u32), u32> {
        let l = &cmc.levels[idx];
        (0..l.n_cubes()).map(|x| ((x, x, x), l.ids[x as usize])).collect()
    };
    cmc.associators.insert((i1.clone(), 1), kappa1.clone());
    cmc.associators.insert((i2.clone(), 2), diag_assoc(&i2, cmc));
    cmc.associators.insert((i12.clone(), 1), kappa1);
    cmc.associators.insert((i12.clone(), 2), diag_assoc(&i12, cmc));

    let chi: BTreeMap<(u32, u32, u32, u32), u32> = model
        .plus_cubes
        .iter()
        .map(|(&(x, y), &xy)| ((x, y, x, y), model.cmc.levels[&i12].ids[xy as usize]))
        .collect();
    model.cmc.interchangers.insert((i12, 1, 2), chi);

    model
}

pub(crate) static MODEL: Lazy<Model> = Lazy::new(build_model);

/// The weak span fixture: degree 2, 52 positive cubes, with every
/// comparison family nontrivial in direction 1.
pub fn span_fixture() -> &'static ChiralMC {
    &MODEL.cmc
}

fn levels() -> [MultiIndex; 4] {
    [
        MultiIndex::empty(),
        MultiIndex::single(1),
        MultiIndex::single(2),
        MultiIndex::new(vec![1, 2]),
    ]
}

/// Shared scaffolding for the endomorphisms below: assemble a morphism of
/// the span fixture from its action on base cubes/arrows and on spans,
/// mirroring it through the degenerate direction.
fn assemble_endo(
    name: String,
    p: u8,
    on_base_cubes: Vec<u32>,
    on_base_arrows: Vec<u32>,
    on_spans: Vec<u32>,
    on_span_arrows: Vec<u32>,
    unit1: Vec<u32>,
    comp1: BTreeMap<(u32, u32), u32>,
) -> PMorphism {
    let m = &*MODEL;
    let [i0, i1, i2, i12] = levels();
    let map0 = LevelMap { on_cubes: on_base_cubes, on_arrows: on_base_arrows };
    let map1 = LevelMap { on_cubes: on_spans, on_arrows: on_span_arrows };

    let mut components = BTreeMap::new();
    components.insert(i0, map0.clone());
    components.insert(i1.clone(), map1.clone());
    components.insert(i2.clone(), map0.clone());
    components.insert(i12.clone(), map1.clone());

    let tv12 = &m.cmc.levels[&i12];
    let tv2 = &m.cmc.levels[&i2];

    let mut unit_cmp = BTreeMap::new();
    unit_cmp.insert((i1.clone(), 1), unit1.clone());
    unit_cmp.insert((i12.clone(), 1), unit1);
    // Direction 2 is a cylinder: degeneracies commute with everything on
    // the nose, so those unit comparisons are identities.
    unit_cmp.insert(
        (i2.clone(), 2),
        (0..tv2.n_cubes()).map(|t| tv2.ids[map0.cube(t) as usize]).collect(),
    );
    unit_cmp.insert(
        (i12.clone(), 2),
        (0..tv12.n_cubes()).map(|t| tv12.ids[map1.cube(t) as usize]).collect(),
    );

    let mut comp_cmp = BTreeMap::new();
    comp_cmp.insert((i1.clone(), 1), comp1.clone());
    comp_cmp.insert((i12.clone(), 1), comp1);
    comp_cmp.insert(
        (i2.clone(), 2),
        (0..tv2.n_cubes()).map(|x| ((x, x), tv2.ids[map0.cube(x) as usize])).collect(),
    );
    comp_cmp.insert(
        (i12.clone(), 2),
        (0..tv12.n_cubes()).map(|x| ((x, x), tv12.ids[map1.cube(x) as usize])).collect(),
    );

    PMorphism { name, p, components, unit_cmp, comp_cmp }
}

/// The endomorphism `x ↦ x +₁ e₁(∂⁺₁ x)`.  Its comparisons in direction 1
/// are the searched special arrows, so it is lax for `p = 1` and colax in
/// direction 1 for `p = 2`.
pub fn shift_endomorphism(p: u8) -> PMorphism {
    assert!(p >= 1 && p <= 2, "laxity out of range");
    let m = &*MODEL;
    let tv1 = &m.cmc.levels[&MultiIndex::single(1)];

    let on_spans: Vec<u32> = (0..m.spans.len())
        .map(|x| {
            let t = m.spans[x].tgt as usize;
            m.plus_cubes[&(x as u32, m.e1_cubes[t])]
        })
        .collect();
    let on_arrows: Vec<u32> = (0..m.arrows.len())
        .map(|f| {
            let l = m.cmc.faces[&(MultiIndex::single(1), 1)][1].arrow(f as u32);
            m.plus_arrows[&(f as u32, m.e1_arrows[l as usize])]
        })
        .collect();

    // e₁M +₁ e₁M is e₁M on the nose, so the unit comparison is an identity.
    let unit1: Vec<u32> = (0..4u8).map(|t| tv1.ids[m.e1_cubes[t as usize] as usize]).collect();
    let comp1: BTreeMap<(u32, u32), u32> = m
        .plus_cubes
        .iter()
        .map(|(&(x, y), &xy)| {
            let lhs = m.plus_cubes[&(on_spans[x as usize], on_spans[y as usize])];
            let rhs = on_spans[xy as usize];
            let cmp = if p == 1 { m.special(lhs, rhs) } else { m.special(rhs, lhs) };
            ((x, y), cmp)
        })
        .collect();

    let base_ids: Vec<u32> = (0..4).collect();
    let base_arrow_ids: Vec<u32> = (0..m.base_arrows.len() as u32).collect();
    assemble_endo(
        format!("shift/p{p}"),
        p,
        base_ids,
        base_arrow_ids,
        on_spans,
        on_arrows,
        unit1,
        comp1,
    )
}

fn swap_elem(e: u8) -> u8 {
    1 - e
}

fn swap_mask(m: u8) -> u8 {
    (m & 1) << 1 | (m >> 1) & 1
}

fn swap_func(f: Func) -> Func {
    let mut h = [0, 0];
    for e in 0..2u8 {
        let v = f[swap_elem(e) as usize];
        h[e as usize] = if v == 0 { 0 } else { swap_elem(v - 1) + 1 };
    }
    h
}

/// Conjugation by the transposition of the two base elements.  Pullbacks
/// are swap-equivariant, so this endomorphism is strict at every laxity.
pub fn swap_endomorphism(p: u8) -> PMorphism {
    assert!(p >= 1 && p <= 2, "laxity out of range");
    let m = &*MODEL;
    let span_idx: BTreeMap<_, u32> =
        m.spans.iter().enumerate().map(|(i, s)| (s.key(), i as u32)).collect();
    let on_base: Vec<u32> = (0..4).map(|x| swap_mask(x as u8) as u32).collect();
    let on_base_arrows: Vec<u32> = m
        .base_arrows
        .iter()
        .map(|&(s, t, f)| m.base_idx[&(swap_mask(s), swap_mask(t), enc(swap_func(f)))])
        .collect();
    let on_spans: Vec<u32> = m
        .spans
        .iter()
        .map(|s| {
            span_idx[&Span {
                src: swap_mask(s.src),
                mid: swap_mask(s.mid),
                tgt: swap_mask(s.tgt),
                f: swap_func(s.f),
                g: swap_func(s.g),
            }
            .key()]
        })
        .collect();
    let on_arrows: Vec<u32> = m
        .arrows
        .iter()
        .map(|a| {
            m.arrow_idx[&(
                on_spans[a.src as usize],
                on_spans[a.tgt as usize],
                enc(swap_func(a.h)),
                enc(swap_func(a.k)),
                enc(swap_func(a.l)),
            )]
        })
        .collect();

    let tv1 = &m.cmc.levels[&MultiIndex::single(1)];
    let unit1: Vec<u32> =
        (0..4u8).map(|t| tv1.ids[m.e1_cubes[swap_mask(t) as usize] as usize]).collect();
    let comp1: BTreeMap<(u32, u32), u32> = m
        .plus_cubes
        .iter()
        .map(|(&(x, y), _)| {
            let img = m.plus_cubes[&(on_spans[x as usize], on_spans[y as usize])];
            ((x, y), tv1.ids[img as usize])
        })
        .collect();
    assemble_endo(
        format!("swap/p{p}"),
        p,
        on_base,
        on_base_arrows,
        on_spans,
        on_arrows,
        unit1,
        comp1,
    )
}

/// The endomorphism collapsing everything onto the empty subset; strict at
/// every laxity.
pub fn collapse_endomorphism(p: u8) -> PMorphism {
    assert!(p >= 1 && p <= 2, "laxity out of range");
    let m = &*MODEL;
    let tv1 = &m.cmc.levels[&MultiIndex::single(1)];
    let span_idx: BTreeMap<_, u32> =
        m.spans.iter().enumerate().map(|(i, s)| (s.key(), i as u32)).collect();
    let zero_span = span_idx[&Span::degenerate(0).key()];
    let zero_base_arrow = m.base_idx[&(0, 0, 0)];
    let zero_span_arrow = tv1.ids[zero_span as usize];

    let on_base = vec![0u32; 4];
    let on_base_arrows = vec![zero_base_arrow; m.base_arrows.len()];
    let on_spans = vec![zero_span; m.spans.len()];
    let on_arrows = vec![zero_span_arrow; m.arrows.len()];
    let unit1 = vec![tv1.ids[zero_span as usize]; 4];
    let comp1: BTreeMap<(u32, u32), u32> = m
        .plus_cubes
        .keys()
        .map(|&(x, y)| ((x, y), tv1.ids[zero_span as usize]))
        .collect();
    assemble_endo(
        format!("collapse/p{p}"),
        p,
        on_base,
        on_base_arrows,
        on_spans,
        on_arrows,
        unit1,
        comp1,
    )
}

/// A doubly weak square on the span fixture: identities on three sides,
/// the shift endomorphism on the fourth, filled by the right unitors.
/// Returns the square together with a pool holding its side morphisms.
pub fn unitor_cube(p: u8, q: u8) -> (super::cells::PQCube, BTreeMap<String, PMorphism>) {
    assert!(p < q, "laxity classes must be ordered");
    let m = &*MODEL;
    let a = &m.cmc;
    let idp = identity_pmorphism(a, p);
    let idq = identity_pmorphism(a, q);
    let shift = shift_endomorphism(q);

    let [i0, i1, i2, i12] = levels();
    let mut components: BTreeMap<MultiIndex, Vec<u32>> = BTreeMap::new();
    components.insert(i0.clone(), a.levels[&i0].ids.clone());
    components.insert(i2.clone(), a.levels[&i2].ids.clone());
    components.insert(i1.clone(), a.runitors[&(i1.clone(), 1)].clone());
    components.insert(i12.clone(), a.runitors[&(i12.clone(), 1)].clone());

    let cube = super::cells::PQCube {
        name: "unitor-square".into(),
        p,
        q,
        r: idp.name.clone(),
        s: idp.name.clone(),
        u: idq.name.clone(),
        v: shift.name.clone(),
        components,
    };
    let mut pool = BTreeMap::new();
    pool.insert(idp.name.clone(), idp);
    pool.insert(idq.name.clone(), idq);
    pool.insert(shift.name.clone(), shift);
    (cube, pool)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_has_expected_scale() {
        let m = &*MODEL;
        assert_eq!(m.spans.len(), 52);
        assert_eq!(m.arrows.len(), 4368);
        assert_eq!(m.plus_cubes.len(), 880);
        assert_eq!(m.cmc.levels[&MultiIndex::single(1)].comp.len(), 343_312);
        assert_eq!(m.cmc.associators[&(MultiIndex::single(1), 1)].len(), 15_376);
    }

    #[test]
    fn unitors_are_nontrivial() {
        let m = &*MODEL;
        let i1 = MultiIndex::single(1);
        let lv = &m.cmc.levels[&i1];
        let lun = &m.cmc.lunitors[&(i1.clone(), 1)];
        let nontrivial = (0..lv.n_cubes())
            .filter(|&x| lun[x as usize] != lv.ids[x as usize])
            .count();
        assert!(nontrivial > 0, "all left unitors are identities");
    }

    #[test]
    fn shift_moves_cubes() {
        let r = shift_endomorphism(1);
        let i1 = MultiIndex::single(1);
        let map = &r.components[&i1];
        assert!((0..52).any(|x| map.cube(x) != x));
    }
}
