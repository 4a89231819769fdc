//! Chiral multiple categories of finite degree, their lax/colax morphisms,
//! and the double cells between those morphisms.
//!
//! A structure of degree `n` ([`ChiralMC`]) stores one small category per
//! subset `𝐢` of the positive directions `{1, …, n}`: the objects of that
//! category are the `𝐢`-cubes, its arrows are the transversal maps between
//! them, and its composition is the transversal composition `+₀`.  Geometric
//! faces `∂±_i`, degeneracies `e_i` and the concatenations `+_i` connect the
//! levels.  The weak part of the structure is carried by comparison arrows:
//! unitors `λ_i`, `ρ_i` and associators `κ_i` (always transversally
//! invertible) and interchangers `χ_{ij}` for `i < j`, which are directed —
//! `(x +_i y) +_j (z +_i u) →₀ (x +_j z) +_i (y +_j u)` — and invertible
//! only when [`ChiralMC::invertible_interchangers`] is set.  The unit layer
//! is strict: degeneracies commute with each other and distribute over the
//! concatenations on the nose.
//!
//! The coherence contract enforced by [`validate_chiral`] is: naturality,
//! speciality and boundary correctness of every comparison; invertibility of
//! unitors and associators (interchangers only under the flag); the
//! associator pentagon; the unit triangle; two associator–interchanger
//! hexagons; and four unitor–interchanger compatibilities.  This axiom list
//! is the kernel's own explicit contract for the weak structure; it is what
//! every construction and fixture in this module is checked against.
//!
//! Morphisms ([`PMorphism`]) carry a laxity index `p`: they are colax in the
//! positive directions below `p` and lax in the directions at `p` and above.
//! Squares between a pair of `p`-morphisms and a pair of `q`-morphisms
//! (`p < q`) are [`PQCube`]s; transversal maps of those are [`PQMap`]s, and
//! commutative cubes of them are [`PQRCube`]s.  Cubes compose in both the
//! `p`- and the `q`-direction ([`compose_pqcubes`]) and the two pasting
//! orders of a 2×2 matrix agree; [`audit_cube_composition`] checks exactly
//! that, together with validity of every composite, on generated cube pools.

mod audit;
mod cells;
mod morphisms;
mod spans;
mod validate;

pub use audit::{audit_cube_composition, AuditOptions, AuditOutcome};
pub use cells::{
    compose_pqcubes, degenerate_pqcube_p, degenerate_pqcube_q, enumerate_identity_cubes,
    pqcube_content_eq, validate_pqcube, validate_pqmap, validate_pqrcube, CubeAxis, PQCube,
    PQMap, PQRCube,
};
pub use morphisms::{
    compose_pmorphisms, identity_pmorphism, is_identity_pmorphism, is_strict_pmorphism,
    pmorphism_content_eq, validate_pmorphism, validate_pmorphism_with, PMorphism,
};
pub use spans::{
    collapse_endomorphism, span_fixture, swap_endomorphism, unitor_cube, shift_endomorphism,
};
pub use validate::{validate_chiral, validate_chiral_with};

use std::collections::BTreeMap;

use crate::error::{KernelError, Result};
use crate::index::MultiIndex;
use crate::multicat::{CompCtx, Sign, TruncatedMultipleCategory};

/// One transversal map between cubes of the same multi-index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TvArrow {
    pub name: String,
    pub src: u32,
    pub tgt: u32,
}

/// The transversal category of one level: its cubes, the transversal maps
/// between them, the identity `e₀x` per cube, and the composition `+₀`
/// (written diagrammatically: `comp[(f, g)]` is `f` followed by `g`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TvCat {
    pub cubes: Vec<String>,
    pub arrows: Vec<TvArrow>,
    /// Identity arrow per cube.
    pub ids: Vec<u32>,
    /// `+₀` on arrow pairs with `tgt(f) = src(g)`.
    pub comp: BTreeMap<(u32, u32), u32>,
}

impl TvCat {
    pub fn n_cubes(&self) -> u32 {
        self.cubes.len() as u32
    }

    pub fn n_arrows(&self) -> u32 {
        self.arrows.len() as u32
    }

    pub fn cube_label(&self, x: u32) -> String {
        self.cubes
            .get(x as usize)
            .filter(|n| !n.is_empty())
            .cloned()
            .unwrap_or_else(|| format!("#{x}"))
    }

    pub fn arrow_label(&self, f: u32) -> String {
        match self.arrows.get(f as usize) {
            Some(a) if !a.name.is_empty() => a.name.clone(),
            _ => format!("#{f}"),
        }
    }

    pub fn src(&self, f: u32) -> u32 {
        self.arrows[f as usize].src
    }

    pub fn tgt(&self, f: u32) -> u32 {
        self.arrows[f as usize].tgt
    }

    /// `f +₀ g`, i.e. `f` followed by `g`.
    pub fn compose0(&self, f: u32, g: u32) -> Result<u32> {
        if self.tgt(f) != self.src(g) {
            return Err(KernelError::NotComposable {
                lhs: self.arrow_label(f),
                rhs: self.arrow_label(g),
                dir: 0,
            });
        }
        self.comp.get(&(f, g)).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!(
                "transversal composite of {} and {}",
                self.arrow_label(f),
                self.arrow_label(g)
            ))
        })
    }

    /// Compose a whole chain of arrows transversally, left to right.
    pub fn chain0(&self, parts: &[u32]) -> Result<u32> {
        let mut it = parts.iter();
        let first = *it.next().ok_or_else(|| {
            KernelError::Malformed("empty transversal composition chain".into())
        })?;
        it.try_fold(first, |acc, &g| self.compose0(acc, g))
    }

    /// Arrows grouped by `(src, tgt)`, for inverse and uniqueness searches.
    pub fn hom_buckets(&self) -> BTreeMap<(u32, u32), Vec<u32>> {
        let mut out: BTreeMap<(u32, u32), Vec<u32>> = BTreeMap::new();
        for (f, a) in self.arrows.iter().enumerate() {
            out.entry((a.src, a.tgt)).or_default().push(f as u32);
        }
        out
    }
}

/// The action of a face, degeneracy or morphism component on one level:
/// images of all cubes and of all arrows.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LevelMap {
    pub on_cubes: Vec<u32>,
    pub on_arrows: Vec<u32>,
}

impl LevelMap {
    pub fn identity(level: &TvCat) -> LevelMap {
        LevelMap {
            on_cubes: (0..level.n_cubes()).collect(),
            on_arrows: (0..level.n_arrows()).collect(),
        }
    }

    pub fn cube(&self, x: u32) -> u32 {
        self.on_cubes[x as usize]
    }

    pub fn arrow(&self, f: u32) -> u32 {
        self.on_arrows[f as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.on_cubes.iter().enumerate().all(|(i, &v)| v == i as u32)
            && self.on_arrows.iter().enumerate().all(|(i, &v)| v == i as u32)
    }
}

/// One concatenation `+_i` at one level: partial tables on cube pairs and on
/// arrow pairs whose `i`-boundaries match.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeomComp {
    pub cubes: BTreeMap<(u32, u32), u32>,
    pub arrows: BTreeMap<(u32, u32), u32>,
}

/// A chiral multiple category of finite degree, tabulated level by level.
///
/// `degree = n` means positive directions `1, …, n`; there is one level
/// per subset of those.  Faces and degeneracies are keyed by the *higher*
/// index of the two levels they connect; a comparison family in direction
/// `i` at level `𝐢` is keyed by `(𝐢, i)` with `i ∈ 𝐢`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiralMC {
    pub name: String,
    pub degree: u8,
    pub levels: BTreeMap<MultiIndex, TvCat>,
    /// `∂−_i, ∂+_i : 𝐢 → 𝐢∖i`, stored as `[minus, plus]`.
    pub faces: BTreeMap<(MultiIndex, u8), [LevelMap; 2]>,
    /// `e_i : 𝐢∖i → 𝐢`.
    pub degens: BTreeMap<(MultiIndex, u8), LevelMap>,
    /// `+_i` on the cubes and arrows of level `𝐢`.
    pub comps: BTreeMap<(MultiIndex, u8), GeomComp>,
    /// `λ_i x : (e_i ∂−_i x) +_i x →₀ x`, one arrow per cube.
    pub lunitors: BTreeMap<(MultiIndex, u8), Vec<u32>>,
    /// `ρ_i x : x +_i (e_i ∂+_i x) →₀ x`, one arrow per cube.
    pub runitors: BTreeMap<(MultiIndex, u8), Vec<u32>>,
    /// `κ_i(x,y,z) : x +_i (y +_i z) →₀ (x +_i y) +_i z` per composable
    /// triple.
    pub associators: BTreeMap<(MultiIndex, u8), BTreeMap<(u32, u32, u32), u32>>,
    /// `χ_{ij}(x,y,z,u) : (x +_i y) +_j (z +_i u) →₀ (x +_j z) +_i (y +_j u)`
    /// per interchange-composable quadruple, keyed by `(𝐢, i, j)`, `i < j`.
    pub interchangers: BTreeMap<(MultiIndex, u8, u8), BTreeMap<(u32, u32, u32, u32), u32>>,
    /// Whether the interchangers are required to be transversally
    /// invertible (they always are in the intended examples built from
    /// strict data; genuinely chiral structures keep them directed).
    pub invertible_interchangers: bool,
}

impl ChiralMC {
    /// The positive directions `1, …, degree`.
    pub fn positive_dirs(&self) -> Vec<u8> {
        (1..=self.degree).collect()
    }

    /// All positive multi-indices, sorted by dimension then lexicographically.
    pub fn positive_indices(&self) -> Vec<MultiIndex> {
        let mut out = MultiIndex::new(self.positive_dirs()).subsets();
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        out
    }

    pub fn level(&self, idx: &MultiIndex) -> Result<&TvCat> {
        self.levels
            .get(idx)
            .ok_or_else(|| KernelError::MissingEntry(format!("level {idx}")))
    }

    pub fn face(&self, idx: &MultiIndex, i: u8, sign: Sign) -> Result<&LevelMap> {
        self.faces
            .get(&(idx.clone(), i))
            .map(|pair| &pair[sign.idx()])
            .ok_or_else(|| {
                KernelError::MissingEntry(format!("face map ∂{}_{i} at {idx}", sign.glyph()))
            })
    }

    pub fn degen(&self, idx: &MultiIndex, i: u8) -> Result<&LevelMap> {
        self.degens
            .get(&(idx.clone(), i))
            .ok_or_else(|| KernelError::MissingEntry(format!("degeneracy e{i} into {idx}")))
    }

    pub fn comp_at(&self, idx: &MultiIndex, i: u8) -> Result<&GeomComp> {
        self.comps
            .get(&(idx.clone(), i))
            .ok_or_else(|| KernelError::MissingEntry(format!("concatenation +{i} at {idx}")))
    }

    /// Whether cubes `x, y` of level `idx` are `i`-composable.
    pub fn cubes_composable(&self, idx: &MultiIndex, i: u8, x: u32, y: u32) -> Result<bool> {
        let minus = self.face(idx, i, Sign::Minus)?;
        let plus = self.face(idx, i, Sign::Plus)?;
        Ok(plus.cube(x) == minus.cube(y))
    }

    /// `x +_i y` on cubes.
    pub fn compose_cubes(&self, idx: &MultiIndex, i: u8, x: u32, y: u32) -> Result<u32> {
        let lv = self.level(idx)?;
        self.comp_at(idx, i)?.cubes.get(&(x, y)).copied().ok_or_else(|| {
            KernelError::NotComposable {
                lhs: lv.cube_label(x),
                rhs: lv.cube_label(y),
                dir: i,
            }
        })
    }

    /// `f +_i g` on arrows.
    pub fn compose_arrows(&self, idx: &MultiIndex, i: u8, f: u32, g: u32) -> Result<u32> {
        let lv = self.level(idx)?;
        self.comp_at(idx, i)?.arrows.get(&(f, g)).copied().ok_or_else(|| {
            KernelError::NotComposable {
                lhs: lv.arrow_label(f),
                rhs: lv.arrow_label(g),
                dir: i,
            }
        })
    }

    pub fn lunitor(&self, idx: &MultiIndex, i: u8, x: u32) -> Result<u32> {
        self.lunitors
            .get(&(idx.clone(), i))
            .and_then(|v| v.get(x as usize).copied())
            .ok_or_else(|| KernelError::MissingEntry(format!("left unitor λ{i} at {idx}")))
    }

    pub fn runitor(&self, idx: &MultiIndex, i: u8, x: u32) -> Result<u32> {
        self.runitors
            .get(&(idx.clone(), i))
            .and_then(|v| v.get(x as usize).copied())
            .ok_or_else(|| KernelError::MissingEntry(format!("right unitor ρ{i} at {idx}")))
    }

    pub fn associator(&self, idx: &MultiIndex, i: u8, x: u32, y: u32, z: u32) -> Result<u32> {
        self.associators
            .get(&(idx.clone(), i))
            .and_then(|t| t.get(&(x, y, z)).copied())
            .ok_or_else(|| {
                KernelError::MissingEntry(format!("associator κ{i}({x},{y},{z}) at {idx}"))
            })
    }

    pub fn interchanger(
        &self,
        idx: &MultiIndex,
        i: u8,
        j: u8,
        q: (u32, u32, u32, u32),
    ) -> Result<u32> {
        self.interchangers
            .get(&(idx.clone(), i, j))
            .and_then(|t| t.get(&q).copied())
            .ok_or_else(|| {
                KernelError::MissingEntry(format!(
                    "interchanger χ{i}{j}({},{},{},{}) at {idx}",
                    q.0, q.1, q.2, q.3
                ))
            })
    }
}

/// Budgets for the exhaustive sweeps of [`validate_chiral_with`].
#[derive(Debug, Clone)]
pub struct ChiralOptions {
    /// Ceiling on the instance count of any single exhaustively swept law;
    /// a law whose instance set is provably redundant (its sides are
    /// parallel arrows with equal faces in a boundary-determined level) is
    /// reduced instead and never consumes budget.
    pub exhaustive_budget: u64,
}

impl Default for ChiralOptions {
    fn default() -> Self {
        ChiralOptions {
            exhaustive_budget: 50_000_000,
        }
    }
}

/// Reinterpret a strict truncated multiple category (with a transversal
/// direction `0`) as a chiral multiple category with identity comparisons.
///
/// The cubes of level `𝐢` are the `𝐢`-cells, its arrows the `(0𝐢)`-cells;
/// all composition tables are taken from the strict structure (facewise
/// rules are materialised), and every comparison becomes an identity arrow.
/// Fails if the strict laws needed for identity comparisons do not hold on
/// the nose, or if the required pools are not explicitly presented.
pub fn lift_strict(m: &TruncatedMultipleCategory, degree: u8) -> Result<ChiralMC> {
    if degree == 0 {
        return Err(KernelError::Malformed("degree must be positive".into()));
    }
    if !m.directions.contains(&0) {
        return Err(KernelError::Malformed(format!(
            "{} has no transversal direction 0",
            m.name
        )));
    }
    for d in 1..=degree {
        if !m.directions.contains(&d) {
            return Err(KernelError::Malformed(format!(
                "{} is missing direction {d} required for degree {degree}",
                m.name
            )));
        }
    }
    if m.explicit_dim < degree as usize + 1 {
        return Err(KernelError::Malformed(format!(
            "{} stores cells up to dimension {} but degree {degree} needs {}",
            m.name,
            m.explicit_dim,
            degree as usize + 1
        )));
    }

    let ctx = CompCtx::new(m);
    let positive = {
        let mut out = MultiIndex::new((1..=degree).collect()).subsets();
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        out
    };

    let mut out = ChiralMC {
        name: format!("lift({})", m.name),
        degree,
        levels: BTreeMap::new(),
        faces: BTreeMap::new(),
        degens: BTreeMap::new(),
        comps: BTreeMap::new(),
        lunitors: BTreeMap::new(),
        runitors: BTreeMap::new(),
        associators: BTreeMap::new(),
        interchangers: BTreeMap::new(),
        invertible_interchangers: true,
    };

    for idx in &positive {
        let arrow_idx = idx.with(0);
        let cp = m.pool_of(idx)?;
        let ap = m.pool_of(&arrow_idx)?;

        // Transversal category: cells of `idx` with the `(0 idx)`-cells as
        // arrows, composed in direction 0 (always position 0).
        let arrows: Vec<TvArrow> = (0..ap.n_cells)
            .map(|c| TvArrow {
                name: ap.label(c),
                src: ap.face(c, 0, Sign::Minus),
                tgt: ap.face(c, 0, Sign::Plus),
            })
            .collect();
        let mut comp = BTreeMap::new();
        for f in 0..ap.n_cells {
            for g in 0..ap.n_cells {
                if ap.face(f, 0, Sign::Plus) == ap.face(g, 0, Sign::Minus) {
                    comp.insert((f, g), m.comp_in(&ctx, &arrow_idx, 0, f, g)?);
                }
            }
        }
        let lv = TvCat {
            cubes: (0..cp.n_cells).map(|c| cp.label(c)).collect(),
            arrows,
            ids: ap.degens[0].clone(),
            comp,
        };

        for (pos, &i) in idx.dirs().iter().enumerate() {
            let apos = arrow_idx.position_of(i).expect("direction in index");
            out.faces.insert(
                (idx.clone(), i),
                [
                    LevelMap {
                        on_cubes: cp.faces[pos][0].clone(),
                        on_arrows: ap.faces[apos][0].clone(),
                    },
                    LevelMap {
                        on_cubes: cp.faces[pos][1].clone(),
                        on_arrows: ap.faces[apos][1].clone(),
                    },
                ],
            );
            out.degens.insert(
                (idx.clone(), i),
                LevelMap {
                    on_cubes: cp.degens[pos].clone(),
                    on_arrows: ap.degens[apos].clone(),
                },
            );

            let mut gc = GeomComp::default();
            for x in 0..cp.n_cells {
                for y in 0..cp.n_cells {
                    if cp.face(x, pos, Sign::Plus) == cp.face(y, pos, Sign::Minus) {
                        gc.cubes.insert((x, y), m.comp_in(&ctx, idx, pos, x, y)?);
                    }
                }
            }
            for f in 0..ap.n_cells {
                for g in 0..ap.n_cells {
                    if ap.face(f, apos, Sign::Plus) == ap.face(g, apos, Sign::Minus) {
                        gc.arrows
                            .insert((f, g), m.comp_in(&ctx, &arrow_idx, apos, f, g)?);
                    }
                }
            }
            out.comps.insert((idx.clone(), i), gc);
        }

        out.levels.insert(idx.clone(), lv);
    }

    // Identity comparisons, each backed by the corresponding strict law.
    for idx in &positive {
        let lv = out.levels[idx].clone();
        for &i in idx.dirs() {
            let gc = &out.comps[&(idx.clone(), i)];
            let minus: Vec<u32> = out.faces[&(idx.clone(), i)][0].on_cubes.clone();
            let plus: Vec<u32> = out.faces[&(idx.clone(), i)][1].on_cubes.clone();
            let e = out.degens[&(idx.clone(), i)].on_cubes.clone();

            let mut lu = Vec::with_capacity(lv.cubes.len());
            let mut ru = Vec::with_capacity(lv.cubes.len());
            for x in 0..lv.n_cubes() {
                let lsrc = gc.cubes.get(&(e[minus[x as usize] as usize], x)).copied();
                if lsrc != Some(x) {
                    return Err(KernelError::Malformed(format!(
                        "left unit law fails strictly at {} in {}; cannot lift",
                        lv.cube_label(x),
                        m.name
                    )));
                }
                let rsrc = gc.cubes.get(&(x, e[plus[x as usize] as usize])).copied();
                if rsrc != Some(x) {
                    return Err(KernelError::Malformed(format!(
                        "right unit law fails strictly at {} in {}; cannot lift",
                        lv.cube_label(x),
                        m.name
                    )));
                }
                lu.push(lv.ids[x as usize]);
                ru.push(lv.ids[x as usize]);
            }
            out.lunitors.insert((idx.clone(), i), lu);
            out.runitors.insert((idx.clone(), i), ru);

            let mut assoc = BTreeMap::new();
            for (&(x, y), &xy) in &gc.cubes {
                for z in 0..lv.n_cubes() {
                    if let Some(&yz) = gc.cubes.get(&(y, z)) {
                        let left = gc.cubes.get(&(x, yz)).copied();
                        let right = gc.cubes.get(&(xy, z)).copied();
                        if left.is_none() || left != right {
                            return Err(KernelError::Malformed(format!(
                                "associativity fails strictly at ({},{},{}) in {}; cannot lift",
                                lv.cube_label(x),
                                lv.cube_label(y),
                                lv.cube_label(z),
                                m.name
                            )));
                        }
                        assoc.insert((x, y, z), lv.ids[left.unwrap() as usize]);
                    }
                }
            }
            out.associators.insert((idx.clone(), i), assoc);
        }

        for (a, &i) in idx.dirs().iter().enumerate() {
            for &j in &idx.dirs()[a + 1..] {
                let gi = &out.comps[&(idx.clone(), i)];
                let gj = &out.comps[&(idx.clone(), j)];
                let mut table = BTreeMap::new();
                for (&(x, y), &xy) in &gi.cubes {
                    for (&(z, u), &zu) in &gi.cubes {
                        let jfaces = &out.faces[&(idx.clone(), j)];
                        if jfaces[1].cube(x) != jfaces[0].cube(z)
                            || jfaces[1].cube(y) != jfaces[0].cube(u)
                        {
                            continue;
                        }
                        let rows = gj.cubes.get(&(xy, zu)).copied();
                        let xz = gj.cubes.get(&(x, z)).copied();
                        let yu = gj.cubes.get(&(y, u)).copied();
                        let cols = match (xz, yu) {
                            (Some(xz), Some(yu)) => gi.cubes.get(&(xz, yu)).copied(),
                            _ => None,
                        };
                        if rows.is_none() || rows != cols {
                            return Err(KernelError::Malformed(format!(
                                "interchange fails strictly at ({x},{y},{z},{u}) in {}; \
                                 cannot lift",
                                m.name
                            )));
                        }
                        table.insert((x, y, z, u), lv.ids[rows.unwrap() as usize]);
                    }
                }
                out.interchangers.insert((idx.clone(), i, j), table);
            }
        }
    }

    Ok(out)
}

/// The transversal projection of a structure: its levels, with all weak
/// data forgotten.  Composing projections of morphisms is functorial by
/// construction, since a morphism's transversal part is exactly its
/// component maps.
pub fn tv_projection(a: &ChiralMC) -> BTreeMap<MultiIndex, TvCat> {
    a.levels.clone()
}

/// The transversal projection of a morphism: its per-level component maps,
/// with the comparisons forgotten.
pub fn tv_projection_morphism(r: &PMorphism) -> BTreeMap<MultiIndex, LevelMap> {
    r.components.clone()
}

/// The transversal projection of a cube: its per-level component families.
pub fn tv_projection_cube(c: &PQCube) -> BTreeMap<MultiIndex, Vec<u32>> {
    c.components.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::quintets::build_q;

    #[test]
    fn lift_of_strict_quintets_has_identity_comparisons() {
        let q = build_q(&fixtures::fix3(), 3).unwrap();
        let a = lift_strict(&q, 2).unwrap();
        assert_eq!(a.degree, 2);
        assert_eq!(a.positive_indices().len(), 4);
        for idx in a.positive_indices() {
            let lv = a.level(&idx).unwrap();
            for &i in idx.dirs() {
                for x in 0..lv.n_cubes() {
                    assert_eq!(a.lunitor(&idx, i, x).unwrap(), lv.ids[x as usize]);
                }
            }
        }
    }

    #[test]
    fn lift_requires_explicit_cells() {
        let q = build_q(&fixtures::fix3(), 2).unwrap();
        assert!(lift_strict(&q, 2).is_err());
    }

    #[test]
    fn projection_strips_to_levels() {
        let q = build_q(&fixtures::fix3(), 3).unwrap();
        let a = lift_strict(&q, 2).unwrap();
        let tv = tv_projection(&a);
        assert_eq!(tv.len(), 4);
        for (idx, lv) in &tv {
            assert_eq!(lv, a.level(idx).unwrap());
        }
    }
}
