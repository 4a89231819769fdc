//! Weak double categories as degree-1 chiral structures.
//!
//! A weak double category is exactly a chiral multiple category of degree
//! one: one positive direction, vertical composition with unitors and
//! associators, and no interchange data.  This module stores the
//! degree-1 presentation over a [`CatGraph`] and converts losslessly to
//! and from [`ChiralMC`], so validation reuses the full chiral axiom
//! checker.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chiral::{validate_chiral, ChiralMC, GeomComp, LevelMap};
use crate::error::{KernelError, Result};
use crate::index::MultiIndex;
use crate::report::ValidationReport;

use super::morphisms::MorphFlavor;
use super::CatGraph;

/// A weak double category: a graph of categories with vertical units and
/// composition, weakly unital and associative up to the given special
/// comparisons.
///
/// `unit` sends objects to vertical identity arrows and object arrows to
/// their unit cells.  `vcomp.cubes` is `u ⊗ v` on vertical arrows (in
/// diagrammatic order) and `vcomp.arrows` the corresponding vertical
/// pasting of cells.  `lunitors[u] : e(x) ⊗ u →₀ u`,
/// `runitors[u] : u ⊗ e(y) →₀ u`, and
/// `associators[(u,v,w)] : u ⊗ (v ⊗ w) →₀ (u ⊗ v) ⊗ w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakDoubleCategory {
    pub graph: CatGraph,
    pub unit: LevelMap,
    pub vcomp: GeomComp,
    pub lunitors: Vec<u32>,
    pub runitors: Vec<u32>,
    pub associators: BTreeMap<(u32, u32, u32), u32>,
}

impl WeakDoubleCategory {
    /// Present the same structure as a chiral multiple category of degree
    /// one, with the vertical data in direction 1.
    pub fn to_chiral(&self) -> ChiralMC {
        let empty = MultiIndex::empty();
        let one = MultiIndex::single(1);
        let mut levels = BTreeMap::new();
        levels.insert(empty, self.graph.base.clone());
        levels.insert(one.clone(), self.graph.vert.clone());
        let mut faces = BTreeMap::new();
        faces.insert((one.clone(), 1), [self.graph.neg.clone(), self.graph.pos.clone()]);
        let mut degens = BTreeMap::new();
        degens.insert((one.clone(), 1), self.unit.clone());
        let mut comps = BTreeMap::new();
        comps.insert((one.clone(), 1), self.vcomp.clone());
        let mut lunitors = BTreeMap::new();
        lunitors.insert((one.clone(), 1), self.lunitors.clone());
        let mut runitors = BTreeMap::new();
        runitors.insert((one.clone(), 1), self.runitors.clone());
        let mut associators = BTreeMap::new();
        associators.insert((one, 1), self.associators.clone());
        ChiralMC {
            name: self.graph.name.clone(),
            degree: 1,
            levels,
            faces,
            degens,
            comps,
            lunitors,
            runitors,
            associators,
            interchangers: BTreeMap::new(),
            invertible_interchangers: true,
        }
    }
}

/// Extract the weak double category lying in direction `dir` of a chiral
/// multiple category: the empty level with the level `{dir}` above it.
pub fn weak_double_from_chiral(c: &ChiralMC, dir: u8) -> Result<WeakDoubleCategory> {
    if dir == 0 || dir > c.degree {
        return Err(KernelError::Malformed(format!(
            "direction {dir} outside degree {}",
            c.degree
        )));
    }
    let one = MultiIndex::single(dir);
    let base = c.level(&MultiIndex::empty())?.clone();
    let vert = c.level(&one)?.clone();
    let pair = c
        .faces
        .get(&(one.clone(), dir))
        .ok_or_else(|| KernelError::MissingEntry(format!("faces ∂±{dir} at {one}")))?;
    let unit = c.degen(&one, dir)?.clone();
    let vcomp = c.comp_at(&one, dir)?.clone();
    let lunitors = c
        .lunitors
        .get(&(one.clone(), dir))
        .ok_or_else(|| KernelError::MissingEntry(format!("unitors λ{dir} at {one}")))?
        .clone();
    let runitors = c
        .runitors
        .get(&(one.clone(), dir))
        .ok_or_else(|| KernelError::MissingEntry(format!("unitors ρ{dir} at {one}")))?
        .clone();
    let associators = c
        .associators
        .get(&(one.clone(), dir))
        .ok_or_else(|| KernelError::MissingEntry(format!("associators κ{dir} at {one}")))?
        .clone();
    Ok(WeakDoubleCategory {
        graph: CatGraph {
            name: c.name.clone(),
            base,
            vert,
            neg: pair[0].clone(),
            pos: pair[1].clone(),
        },
        unit,
        vcomp,
        lunitors,
        runitors,
        associators,
    })
}

/// Check every weak double category axiom by validating the degree-1
/// chiral presentation: category structure on both levels, face and unit
/// functoriality, vertical closure and boundaries, interchange of the two
/// compositions, and naturality, speciality, invertibility and coherence
/// of the comparisons.
pub fn validate_weak_double(d: &WeakDoubleCategory) -> ValidationReport {
    validate_chiral(&d.to_chiral())
}

/// The biased data of a double functor between weak double categories:
/// the level maps together with unit and binary composition comparisons.
///
/// For the lax flavour the comparisons run `e(Fx) →₀ F(e(x))` and
/// `F(u) ⊗ F(v) →₀ F(u ⊗ v)`; for the colax flavour they run the other
/// way.  A strict functor's comparisons are identities and may be left
/// out.  Lifting along [`super::lift_double_functor`] extends this data
/// to comparison components at every word of a pseudo algebra, where its
/// functor and coherence laws are then checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DblFunctor {
    pub name: String,
    pub flavor: MorphFlavor,
    /// Action on objects and their arrows.
    pub f0: LevelMap,
    /// Action on vertical arrows and cells.
    pub f1: LevelMap,
    /// Unit comparison at each object.
    pub unit_cmp: Vec<u32>,
    /// Composition comparison at each composable vertical pair.
    pub comp_cmp: BTreeMap<(u32, u32), u32>,
}
