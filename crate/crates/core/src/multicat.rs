//! Truncated multiple categories: cells graded by multi-indices, with faces,
//! degeneracies and per-direction compositions, all finitely tabulated.
//!
//! # Representation
//!
//! Cells of each dimension live in [`Pool`]s; a structure maps every
//! multi-index of dimension ≤ `explicit_dim` to a pool.  Several indices of
//! the same dimension may share one pool (cubical structures such as the
//! quintet construction look the same in every direction); the validator
//! checks that such sharing is compatible with the face assignment.
//! Dimensions above `explicit_dim` (up to `dim_bound`) are *virtual*: their
//! cells are, by definition, the face-consistent families of cells one
//! dimension below, so they need never be stored.
//!
//! # Positional conventions
//!
//! A cell of index `𝐢 = {d₀ < d₁ < …}` has its faces, degeneracies and
//! compositions addressed by *position* (0-based slot in the sorted index),
//! not by direction label.  The face at position `p` with sign `α` lands in
//! the pool of `𝐢` minus its `p`-th direction.  When a direction is removed,
//! positions above it shift down by one; [`shifted`] performs that
//! adjustment.
//!
//! # Validation tiers
//!
//! Every law is checked *exactly*, by one of three methods recorded in the
//! report:
//!
//! * `Exhaustive`: every instance evaluated;
//! * `FacewiseReduction`: at a dimension whose cells are verified to be
//!   uniquely determined by their boundaries and whose compositions are
//!   computed facewise, the composition laws hold for *all* instances as
//!   soon as the lower-dimensional laws hold — both sides of any law have
//!   equal faces, hence are the same cell;
//! * `CoskeletalConstruction`: virtual dimensions consist of all
//!   face-consistent families with componentwise operations, for which the
//!   laws hold by construction.

use std::collections::BTreeMap;

use crate::error::{KernelError, Result};
use crate::index::MultiIndex;
use crate::report::{CheckMethod, ValidationReport};

/// A face sign: the lower (`Minus`) or upper (`Plus`) face in a direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];

    pub fn idx(self) -> usize {
        match self {
            Sign::Minus => 0,
            Sign::Plus => 1,
        }
    }

    pub fn glyph(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

/// Position of the direction currently at `p` after the direction at `q`
/// (`q ≠ p`) has been removed from the index.
pub fn shifted(p: usize, q: usize) -> usize {
    if q < p {
        p - 1
    } else {
        p
    }
}

/// How composition in one direction of a pool is presented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompRule {
    /// Explicit table on composable pairs.
    Table(BTreeMap<(u32, u32), u32>),
    /// The composite is the unique cell whose faces are the composites of
    /// the arguments' faces.  Requires the pool to be boundary-determined.
    Facewise,
}

/// The cells of one dimension, with their operation tables.
///
/// `faces[p][sign]` maps each cell to its face at position `p`;
/// `degens[p]` maps each cell of the boundary pool to its degeneracy with a
/// new direction inserted at position `p`; `comps[p]` composes in the
/// direction at position `p`.  All three vectors have length = dimension.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Pool {
    /// Optional display names; empty = synthesize `#id`.
    pub names: Vec<String>,
    pub n_cells: u32,
    pub faces: Vec<[Vec<u32>; 2]>,
    pub degens: Vec<Vec<u32>>,
    pub comps: Vec<CompRule>,
}

impl Pool {
    pub fn dim(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, cell: u32, pos: usize, sign: Sign) -> u32 {
        self.faces[pos][sign.idx()][cell as usize]
    }

    pub fn label(&self, cell: u32) -> String {
        self.names
            .get(cell as usize)
            .filter(|n| !n.is_empty())
            .cloned()
            .unwrap_or_else(|| format!("#{cell}"))
    }

    /// Boundary fingerprint: all faces in position order, minus before plus.
    pub fn fingerprint(&self, cell: u32) -> Vec<u32> {
        let mut fp = Vec::with_capacity(2 * self.dim());
        for p in 0..self.dim() {
            fp.push(self.face(cell, p, Sign::Minus));
            fp.push(self.face(cell, p, Sign::Plus));
        }
        fp
    }
}

/// A face-consistent family: a candidate cell of dimension d presented by
/// its 2d prospective faces, stored as `[pos0−, pos0+, pos1−, pos1+, …]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FaceConsistentFamily(pub Vec<u32>);

impl FaceConsistentFamily {
    pub fn get(&self, pos: usize, sign: Sign) -> u32 {
        self.0[2 * pos + sign.idx()]
    }
}

/// A finitely presented multiple category, truncated at `dim_bound`, with
/// cells stored up to `explicit_dim` and coskeletal above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedMultipleCategory {
    pub name: String,
    /// The direction labels in play, sorted.
    pub directions: Vec<u8>,
    /// Highest dimension the structure speaks about.
    pub dim_bound: usize,
    /// Highest dimension with stored cells; above this, cells are virtual
    /// face-consistent families.
    pub explicit_dim: usize,
    pub pools: Vec<Pool>,
    /// Pool assignment per multi-index of dimension ≤ `explicit_dim`.
    pub index_pool: BTreeMap<MultiIndex, usize>,
    /// Pools whose facewise compositions are closed by construction, with
    /// the constructing operation's justification; the validator records
    /// these instead of sweeping all composable pairs.
    pub closure_certificates: BTreeMap<usize, String>,
}

impl TruncatedMultipleCategory {
    /// All multi-indices over `directions` of dimension ≤ `dim`.
    pub fn indices_up_to(&self, dim: usize) -> Vec<MultiIndex> {
        let mut out: Vec<MultiIndex> = MultiIndex::new(self.directions.clone())
            .subsets()
            .into_iter()
            .filter(|i| i.dim() <= dim)
            .collect();
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        out
    }

    pub fn pool_of(&self, idx: &MultiIndex) -> Result<&Pool> {
        let k = self
            .index_pool
            .get(idx)
            .ok_or_else(|| KernelError::MissingEntry(format!("no pool for index {idx}")))?;
        Ok(&self.pools[*k])
    }

    pub fn pool_id(&self, idx: &MultiIndex) -> Result<usize> {
        self.index_pool
            .get(idx)
            .copied()
            .ok_or_else(|| KernelError::MissingEntry(format!("no pool for index {idx}")))
    }

    /// The boundary index of `idx` at `pos`.
    pub fn boundary_index(&self, idx: &MultiIndex, pos: usize) -> MultiIndex {
        idx.without(idx.direction_at(pos))
    }

    /// Number of stored cells at `idx`, or `None` for virtual dimensions.
    pub fn cell_count(&self, idx: &MultiIndex) -> Option<u64> {
        if idx.dim() > self.explicit_dim {
            None
        } else {
            self.index_pool
                .get(idx)
                .map(|&k| self.pools[k].n_cells as u64)
        }
    }

    /// Compose `x` and `y` at `pos` in the cells of `idx`; facewise rules
    /// are evaluated recursively and resolved through `ctx`.
    pub fn comp_in(
        &self,
        ctx: &CompCtx,
        idx: &MultiIndex,
        pos: usize,
        x: u32,
        y: u32,
    ) -> Result<u32> {
        let pid = self.pool_id(idx)?;
        let pool = &self.pools[pid];
        if pool.face(x, pos, Sign::Plus) != pool.face(y, pos, Sign::Minus) {
            return Err(KernelError::NotComposable {
                lhs: pool.label(x),
                rhs: pool.label(y),
                dir: idx.direction_at(pos),
            });
        }
        match &pool.comps[pos] {
            CompRule::Table(t) => t.get(&(x, y)).copied().ok_or_else(|| {
                KernelError::MissingEntry(format!(
                    "composite of {} and {} at {idx} position {pos}",
                    pool.label(x),
                    pool.label(y)
                ))
            }),
            CompRule::Facewise => {
                let mut fp = Vec::with_capacity(2 * pool.dim());
                for q in 0..pool.dim() {
                    if q == pos {
                        fp.push(pool.face(x, pos, Sign::Minus));
                        fp.push(pool.face(y, pos, Sign::Plus));
                    } else {
                        let bidx = self.boundary_index(idx, q);
                        let bpos = shifted(pos, q);
                        for sign in Sign::BOTH {
                            fp.push(self.comp_in(
                                ctx,
                                &bidx,
                                bpos,
                                pool.face(x, q, sign),
                                pool.face(y, q, sign),
                            )?);
                        }
                    }
                }
                ctx.lookup(pid, &fp).ok_or_else(|| {
                    KernelError::MissingEntry(format!(
                        "no cell of {idx} with the boundary of {} composed with {} \
                         at position {pos} (pool not closed)",
                        pool.label(x),
                        pool.label(y)
                    ))
                })
            }
        }
    }

    /// Convenience wrapper building a fresh [`CompCtx`].
    pub fn comp(&self, idx: &MultiIndex, pos: usize, x: u32, y: u32) -> Result<u32> {
        let ctx = CompCtx::new(self);
        self.comp_in(&ctx, idx, pos, x, y)
    }

    /// Check whether `family` is a face-consistent family for `idx`, i.e.
    /// `∂^β_j x^α_i = ∂^α_i x^β_j` at every pair of positions.
    pub fn is_face_consistent(&self, idx: &MultiIndex, family: &FaceConsistentFamily) -> bool {
        let d = idx.dim();
        if family.0.len() != 2 * d {
            return false;
        }
        for i in 0..d {
            let pi = match self.pool_of(&self.boundary_index(idx, i)) {
                Ok(p) => p,
                Err(_) => return false,
            };
            for sign in Sign::BOTH {
                if family.get(i, sign) >= pi.n_cells {
                    return false;
                }
            }
            for j in (i + 1)..d {
                let pj = match self.pool_of(&self.boundary_index(idx, j)) {
                    Ok(p) => p,
                    Err(_) => return false,
                };
                for a in Sign::BOTH {
                    for b in Sign::BOTH {
                        if pi.face(family.get(i, a), j - 1, b) != pj.face(family.get(j, b), i, a)
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Enumerate all face-consistent families for `idx` (dimension ≥ 1),
    /// in lexicographic order, stopping with an error when `budget` is
    /// exceeded.
    pub fn families_for_index(
        &self,
        idx: &MultiIndex,
        budget: u64,
    ) -> Result<Vec<FaceConsistentFamily>> {
        let d = idx.dim();
        if d == 0 || d > self.explicit_dim + 1 {
            return Err(KernelError::Malformed(format!(
                "family enumeration needs stored cells one dimension below {idx}"
            )));
        }
        // Per slot position j: cells of the boundary pool indexed by their
        // face prefix (faces at positions 0..j), so candidates matching the
        // already-chosen slots are found by lookup.  Indexing costs one unit
        // of budget per (slot, cell) and is charged before any allocation.
        let mut work: u64 = 0;
        for j in 0..d {
            work += self.pool_of(&self.boundary_index(idx, j))?.n_cells as u64;
        }
        if work > budget {
            return Err(KernelError::BudgetExceeded {
                budget,
                context: format!("family enumeration at {idx}"),
            });
        }
        let mut prefix_maps: Vec<BTreeMap<Vec<u32>, Vec<u32>>> = Vec::with_capacity(d);
        for j in 0..d {
            let pool = self.pool_of(&self.boundary_index(idx, j))?;
            let mut map: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
            for cell in 0..pool.n_cells {
                let mut prefix = Vec::with_capacity(2 * j);
                for p in 0..j {
                    prefix.push(pool.face(cell, p, Sign::Minus));
                    prefix.push(pool.face(cell, p, Sign::Plus));
                }
                map.entry(prefix).or_default().push(cell);
            }
            prefix_maps.push(map);
        }

        let mut out = Vec::new();
        let mut chosen: Vec<u32> = Vec::with_capacity(2 * d);
        self.families_rec(idx, &prefix_maps, &mut chosen, &mut out, &mut work, budget)?;
        Ok(out)
    }

    fn families_rec(
        &self,
        idx: &MultiIndex,
        prefix_maps: &[BTreeMap<Vec<u32>, Vec<u32>>],
        chosen: &mut Vec<u32>,
        out: &mut Vec<FaceConsistentFamily>,
        work: &mut u64,
        budget: u64,
    ) -> Result<()> {
        let d = idx.dim();
        let slot = chosen.len();
        if slot == 2 * d {
            out.push(FaceConsistentFamily(chosen.clone()));
            return Ok(());
        }
        let j = slot / 2;
        let beta = Sign::BOTH[slot % 2];
        // The candidate's faces at positions 0..j are forced by the chosen
        // slots: face(x^β_j, i, α) = face(x^α_i, j−1, β).
        let mut prefix = Vec::with_capacity(2 * j);
        for i in 0..j {
            for alpha in Sign::BOTH {
                let xi = chosen[2 * i + alpha.idx()];
                let pi = self.pool_of(&self.boundary_index(idx, i))?;
                prefix.push(pi.face(xi, j - 1, beta));
            }
        }
        if let Some(cands) = prefix_maps[j].get(&prefix) {
            for &cand in cands {
                *work += 1;
                if *work > budget {
                    return Err(KernelError::BudgetExceeded {
                        budget,
                        context: format!("family enumeration at {idx}"),
                    });
                }
                chosen.push(cand);
                self.families_rec(idx, prefix_maps, chosen, out, work, budget)?;
                chosen.pop();
            }
        }
        Ok(())
    }
}

/// Per-pool fingerprint indices, shared by heavy operations so the maps are
/// built once.
pub struct CompCtx {
    /// Per pool: `(fingerprint, cell)` sorted by fingerprint.
    fps: Vec<Vec<(Vec<u32>, u32)>>,
}

impl CompCtx {
    pub fn new(m: &TruncatedMultipleCategory) -> Self {
        let fps = m
            .pools
            .iter()
            .map(|pool| {
                let mut v: Vec<(Vec<u32>, u32)> = (0..pool.n_cells)
                    .map(|c| (pool.fingerprint(c), c))
                    .collect();
                v.sort();
                v
            })
            .collect();
        CompCtx { fps }
    }

    /// The unique cell of `pool` with boundary `fp`, if there is exactly
    /// one.
    pub fn lookup(&self, pool: usize, fp: &[u32]) -> Option<u32> {
        let v = &self.fps[pool];
        let at = v.partition_point(|(k, _)| k.as_slice() < fp);
        if at < v.len() && v[at].0 == fp {
            // Ambiguous boundaries make the facewise composite undefined.
            if at + 1 < v.len() && v[at + 1].0 == fp {
                return None;
            }
            Some(v[at].1)
        } else {
            None
        }
    }

    /// A pair of distinct cells sharing a boundary, if any.
    pub fn ambiguity(&self, pool: usize) -> Option<(u32, u32)> {
        let v = &self.fps[pool];
        v.windows(2)
            .find(|w| w[0].0 == w[1].0)
            .map(|w| (w[0].1.min(w[1].1), w[0].1.max(w[1].1)))
    }
}

/// Budgets for the exhaustive sweeps of [`validate_multiple_category_with`].
#[derive(Debug, Clone)]
pub struct ValidationOptions {
    /// Largest instance count a single law sweep may take on directly.
    pub exhaustive_budget: u64,
    /// Largest composable-pair count for a facewise closure sweep.
    pub closure_budget: u64,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        ValidationOptions {
            exhaustive_budget: 50_000_000,
            closure_budget: 20_000_000,
        }
    }
}

/// Check every axiom of a truncated multiple category with default budgets.
pub fn validate_multiple_category(m: &TruncatedMultipleCategory) -> ValidationReport {
    validate_multiple_category_with(m, &ValidationOptions::default())
}

/// Check every axiom of a truncated multiple category.
///
/// Laws are grouped per dimension; each record names its method.  Facewise
/// pools must be boundary-determined: their composition laws are then exact
/// consequences of the lower-dimensional ones, which is what the
/// `FacewiseReduction` method certifies.
pub fn validate_multiple_category_with(
    m: &TruncatedMultipleCategory,
    opts: &ValidationOptions,
) -> ValidationReport {
    let mut v = Validator {
        m,
        ctx: CompCtx::new(m),
        opts,
        rep: ValidationReport::new(m.name.clone()),
        comp_laws_ok: vec![true; m.explicit_dim + 1],
    };
    if v.structure() {
        for d in 1..=m.explicit_dim {
            v.relations_at(d);
        }
        for d in 1..=m.explicit_dim {
            v.comps_at(d);
        }
        v.coskeletal_tail();
    }
    v.rep.finish()
}

struct Validator<'a> {
    m: &'a TruncatedMultipleCategory,
    ctx: CompCtx,
    opts: &'a ValidationOptions,
    rep: ValidationReport,
    /// Whether all composition laws verified so far hold at each dimension;
    /// facewise reductions at d require `comp_laws_ok[d-1]`.
    comp_laws_ok: Vec<bool>,
}

impl<'a> Validator<'a> {
    /// A representative index per pool id, smallest first.
    fn representatives(&self) -> BTreeMap<usize, MultiIndex> {
        let mut reps: BTreeMap<usize, MultiIndex> = BTreeMap::new();
        for (idx, &k) in &self.m.index_pool {
            reps.entry(k).or_insert_with(|| idx.clone());
        }
        reps
    }

    /// Pools of dimension `d` with a representative index.
    fn pools_at(&self, d: usize) -> Vec<(usize, MultiIndex)> {
        self.representatives()
            .into_iter()
            .filter(|(_, idx)| idx.dim() == d)
            .map(|(k, idx)| (k, idx))
            .collect()
    }

    fn structure(&mut self) -> bool {
        let m = self.m;
        let mut bad = Vec::new();
        let mut count = 0u64;

        if m.explicit_dim > m.dim_bound {
            bad.push(format!(
                "explicit_dim {} exceeds dim_bound {}",
                m.explicit_dim, m.dim_bound
            ));
        }
        let dirs_sorted = {
            let mut d = m.directions.clone();
            d.sort_unstable();
            d.dedup();
            d == m.directions
        };
        if !dirs_sorted {
            bad.push("directions are not sorted and duplicate-free".to_string());
        }

        // Every index of dimension ≤ explicit_dim has a pool of the right
        // dimension, and no extra indices appear.
        for idx in m.indices_up_to(m.explicit_dim) {
            count += 1;
            match m.index_pool.get(&idx) {
                None => bad.push(format!("index {idx} has no pool")),
                Some(&k) if k >= m.pools.len() => {
                    bad.push(format!("index {idx} points to missing pool {k}"))
                }
                Some(&k) if m.pools[k].dim() != idx.dim() => bad.push(format!(
                    "index {idx} mapped to a pool of dimension {}",
                    m.pools[k].dim()
                )),
                Some(_) => {}
            }
        }
        for idx in m.index_pool.keys() {
            if idx.dim() > m.explicit_dim || !idx.dirs().iter().all(|d| m.directions.contains(d))
            {
                bad.push(format!("stray index {idx} in the pool assignment"));
            }
        }

        // Table shapes and id ranges.
        for (k, pool) in m.pools.iter().enumerate() {
            count += 1;
            let d = pool.dim();
            if pool.degens.len() != d || pool.comps.len() != d {
                bad.push(format!("pool {k}: table counts do not match dimension {d}"));
                continue;
            }
            if !pool.names.is_empty() && pool.names.len() != pool.n_cells as usize {
                bad.push(format!("pool {k}: name list has wrong length"));
            }
            for (p, pair) in pool.faces.iter().enumerate() {
                for sign in Sign::BOTH {
                    if pair[sign.idx()].len() != pool.n_cells as usize {
                        bad.push(format!("pool {k}: face table at position {p} has wrong length"));
                    }
                }
            }
        }

        // Face-compatible sharing: the boundary pools of an index are
        // determined by its pool, so two indices sharing a pool must have
        // pairwise-equal boundary pools, and face/degeneracy ids must be in
        // range for them.
        let mut boundary_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (idx, &k) in &m.index_pool {
            for p in 0..idx.dim() {
                count += 1;
                let bidx = m.boundary_index(idx, p);
                match m.index_pool.get(&bidx) {
                    None => bad.push(format!("boundary {bidx} of {idx} has no pool")),
                    Some(&bk) => match boundary_of.get(&(k, p)) {
                        None => {
                            boundary_of.insert((k, p), bk);
                        }
                        Some(&prev) if prev != bk => bad.push(format!(
                            "indices sharing pool {k} disagree on the boundary pool at \
                             position {p}"
                        )),
                        Some(_) => {}
                    },
                }
            }
        }
        for (&(k, p), &bk) in &boundary_of {
            let pool = &m.pools[k];
            let bn = m.pools[bk].n_cells;
            for sign in Sign::BOTH {
                if let Some(&f) = pool.faces[p][sign.idx()].iter().find(|&&f| f >= bn) {
                    bad.push(format!(
                        "pool {k}: face id {f} at position {p} out of range for pool {bk}"
                    ));
                }
            }
            if pool.degens[p].len() != bn as usize {
                bad.push(format!(
                    "pool {k}: degeneracy table at position {p} has wrong length"
                ));
            }
            if let Some(&g) = pool.degens[p].iter().find(|&&g| g >= pool.n_cells) {
                bad.push(format!(
                    "pool {k}: degeneracy id {g} at position {p} out of range"
                ));
            }
            match &pool.comps[p] {
                CompRule::Table(t) => {
                    if let Some((&(x, y), &z)) = t
                        .iter()
                        .find(|(&(x, y), &z)| x >= pool.n_cells || y >= pool.n_cells || z >= pool.n_cells)
                    {
                        bad.push(format!(
                            "pool {k}: composition entry ({x},{y})→{z} out of range at \
                             position {p}"
                        ));
                    }
                }
                CompRule::Facewise => {}
            }
        }

        let ok = bad.is_empty();
        self.rep.outcome(
            "structure/indices",
            "indices, pools and tables are well-formed and sharing is face-compatible",
            count,
            CheckMethod::Exhaustive,
            bad,
        );
        ok
    }

    /// Face/degeneracy relations at dimension `d`.
    fn relations_at(&mut self, d: usize) {
        let m = self.m;

        // Faces commute: ∂^α_i ∂^β_j = ∂^β_{j-1} ∂^α_i for i < j.
        if d >= 2 {
            let mut bad = Vec::new();
            let mut count = 0u64;
            for (k, idx) in self.pools_at(d) {
                let pool = &m.pools[k];
                for i in 0..d {
                    let pi = m.pool_of(&m.boundary_index(&idx, i)).unwrap();
                    for j in (i + 1)..d {
                        let pj = m.pool_of(&m.boundary_index(&idx, j)).unwrap();
                        for cell in 0..pool.n_cells {
                            for a in Sign::BOTH {
                                for b in Sign::BOTH {
                                    count += 1;
                                    let via_i = pi.face(pool.face(cell, i, a), j - 1, b);
                                    let via_j = pj.face(pool.face(cell, j, b), i, a);
                                    if via_i != via_j {
                                        bad.push(format!(
                                            "cell {} of {idx}: positions {i}{},{j}{}",
                                            pool.label(cell),
                                            a.glyph(),
                                            b.glyph()
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
            self.rep.outcome(
                format!("relations/faces-commute@{d}"),
                "faces in distinct directions commute",
                count,
                CheckMethod::Exhaustive,
                bad,
            );
        }

        // ∂^α_p e_p = id and ∂^α_q e_p = e ∂^α y for q ≠ p.
        let mut bad = Vec::new();
        let mut count = 0u64;
        for (k, idx) in self.pools_at(d) {
            let pool = &m.pools[k];
            for p in 0..d {
                let bidx = m.boundary_index(&idx, p);
                let bpool = m.pool_of(&bidx).unwrap();
                for y in 0..bpool.n_cells {
                    let ey = pool.degens[p][y as usize];
                    for a in Sign::BOTH {
                        count += 1;
                        if pool.face(ey, p, a) != y {
                            bad.push(format!(
                                "∂^{}_{p} of the degeneracy of {} at {idx}",
                                a.glyph(),
                                bpool.label(y)
                            ));
                        }
                    }
                    for q in 0..d {
                        if q == p {
                            continue;
                        }
                        // Removing position q: the inserted direction sits at
                        // shifted(p, q); the removed one sits at shifted(q, p)
                        // of the boundary index.
                        let qidx = m.boundary_index(&idx, q);
                        let qpool = m.pool_of(&qidx).unwrap();
                        for a in Sign::BOTH {
                            count += 1;
                            let lhs = pool.face(ey, q, a);
                            let rhs = qpool.degens[shifted(p, q)]
                                [bpool.face(y, shifted(q, p), a) as usize];
                            if lhs != rhs {
                                bad.push(format!(
                                    "∂^{}_{q} of the degeneracy at {p} of {} at {idx}",
                                    a.glyph(),
                                    bpool.label(y)
                                ));
                            }
                        }
                    }
                }
            }
        }
        self.rep.outcome(
            format!("relations/face-degen@{d}"),
            "a degeneracy's faces are the identity in its own direction and lower degeneracies elsewhere",
            count,
            CheckMethod::Exhaustive,
            bad,
        );

        // Degeneracies commute: e_p e_{q-1} = e_q e_p for p < q (positions
        // in the top index).
        if d >= 2 {
            let mut bad = Vec::new();
            let mut count = 0u64;
            for (k, idx) in self.pools_at(d) {
                let pool = &m.pools[k];
                for p in 0..d {
                    for q in (p + 1)..d {
                        let pidx = m.boundary_index(&idx, p);
                        let ppool = m.pool_of(&pidx).unwrap();
                        let qidx = m.boundary_index(&idx, q);
                        let qpool = m.pool_of(&qidx).unwrap();
                        let zn = m
                            .pool_of(&m.boundary_index(&pidx, q - 1))
                            .unwrap()
                            .n_cells;
                        for z in 0..zn {
                            count += 1;
                            let via_p = pool.degens[p][ppool.degens[q - 1][z as usize] as usize];
                            let via_q = pool.degens[q][qpool.degens[p][z as usize] as usize];
                            if via_p != via_q {
                                bad.push(format!(
                                    "double degeneracy of #{z} at positions {p},{q} of {idx}"
                                ));
                            }
                        }
                    }
                }
            }
            self.rep.outcome(
                format!("relations/degen-degen@{d}"),
                "degeneracies in distinct directions commute",
                count,
                CheckMethod::Exhaustive,
                bad,
            );
        }
    }

    /// Count of composable pairs at position `pos` of `pool`.
    fn composable_pairs(&self, pool: &Pool, pos: usize) -> u64 {
        let mut plus: BTreeMap<u32, u64> = BTreeMap::new();
        let mut minus: BTreeMap<u32, u64> = BTreeMap::new();
        for c in 0..pool.n_cells {
            *plus.entry(pool.face(c, pos, Sign::Plus)).or_default() += 1;
            *minus.entry(pool.face(c, pos, Sign::Minus)).or_default() += 1;
        }
        plus.iter()
            .map(|(v, np)| np * minus.get(v).copied().unwrap_or(0))
            .sum()
    }

    fn pairs_at(&self, pool: &Pool, pos: usize) -> Vec<(u32, u32)> {
        let mut by_minus: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for c in 0..pool.n_cells {
            by_minus.entry(pool.face(c, pos, Sign::Minus)).or_default().push(c);
        }
        let mut out = Vec::new();
        for x in 0..pool.n_cells {
            if let Some(ys) = by_minus.get(&pool.face(x, pos, Sign::Plus)) {
                for &y in ys {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Composition laws at dimension `d`: totality/closure, boundary laws,
    /// units, associativity, degeneracy compatibility and interchange.
    fn comps_at(&mut self, d: usize) {
        let m = self.m;
        let mut dim_ok = true;

        for (k, idx) in self.pools_at(d) {
            let pool = &m.pools[k];
            let facewise = pool.comps.iter().any(|c| matches!(c, CompRule::Facewise));

            // Facewise pools must be boundary-determined; that premise also
            // makes the derived laws below exact.
            let determined = if facewise {
                let mut bad = Vec::new();
                if let Some((a, b)) = self.ctx.ambiguity(k) {
                    bad.push(format!(
                        "cells {} and {} of {idx} share a boundary",
                        pool.label(a),
                        pool.label(b)
                    ));
                }
                let ok = bad.is_empty();
                self.rep.outcome(
                    format!("structure/boundary-determined@{d}"),
                    "cells with facewise composition are uniquely determined by their boundaries",
                    pool.n_cells as u64,
                    CheckMethod::Exhaustive,
                    bad,
                );
                if !ok {
                    dim_ok = false;
                }
                ok
            } else {
                true
            };
            let reducible = determined && self.comp_laws_ok[d - 1];

            for pos in 0..d {
                let tag = format!("@{d}/pos{pos}");
                match &pool.comps[pos] {
                    CompRule::Table(t) => {
                        self.table_comp_laws(k, &idx, pos, t, &tag);
                    }
                    CompRule::Facewise => {
                        // Closure: every composable pair must resolve to a
                        // cell.  Certified by the constructor, or swept.
                        let pairs = self.composable_pairs(pool, pos);
                        if let Some(reason) = m.closure_certificates.get(&k) {
                            self.rep.outcome(
                                format!("comp/closure{tag}"),
                                format!("facewise composites exist for all composable pairs ({reason})"),
                                pairs,
                                CheckMethod::FacewiseReduction,
                                Vec::new(),
                            );
                        } else if pairs <= self.opts.closure_budget {
                            let all = self.pairs_at(pool, pos);
                            let mut bad = Vec::new();
                            for (x, y) in all {
                                if self.m.comp_in(&self.ctx, &idx, pos, x, y).is_err() {
                                    bad.push(format!(
                                        "no composite of {} and {} at {idx} position {pos}",
                                        pool.label(x),
                                        pool.label(y)
                                    ));
                                    if bad.len() >= crate::report::MAX_WITNESSES {
                                        break;
                                    }
                                }
                            }
                            if !bad.is_empty() {
                                dim_ok = false;
                            }
                            self.rep.outcome(
                                format!("comp/closure{tag}"),
                                "facewise composites exist for all composable pairs",
                                pairs,
                                CheckMethod::Exhaustive,
                                bad,
                            );
                        } else {
                            dim_ok = false;
                            self.rep.outcome(
                                format!("comp/closure{tag}"),
                                "facewise composites exist for all composable pairs",
                                pairs,
                                CheckMethod::Exhaustive,
                                vec![format!(
                                    "{pairs} composable pairs exceed the closure budget and no \
                                     certificate was provided"
                                )],
                            );
                        }

                        // Boundary laws hold by definition of the facewise
                        // composite; units/associativity reduce to the lower
                        // dimension when the pool is determined.
                        let (method, mut bad) = if reducible {
                            (CheckMethod::FacewiseReduction, Vec::new())
                        } else {
                            (
                                CheckMethod::FacewiseReduction,
                                vec![format!(
                                    "reduction unavailable: boundary-determinedness or \
                                     lower-dimensional laws failed at {idx}"
                                )],
                            )
                        };
                        if !bad.is_empty() {
                            dim_ok = false;
                        }
                        self.rep.outcome(
                            format!("comp/boundary-laws{tag}"),
                            "composite faces are the argument faces in the composition direction and composites of faces elsewhere",
                            pool.n_cells as u64,
                            method,
                            bad.clone(),
                        );
                        bad.truncate(usize::MAX);
                        self.rep.outcome(
                            format!("comp/units{tag}"),
                            "degenerate cells are strict units (derived: both sides share all faces)",
                            pool.n_cells as u64,
                            method,
                            bad.clone(),
                        );
                        self.rep.outcome(
                            format!("comp/assoc{tag}"),
                            "composition is associative (derived: both bracketings share all faces)",
                            pool.n_cells as u64,
                            method,
                            bad,
                        );
                    }
                }
            }

            // Degeneracy compatibility: inserting a direction into a
            // composite equals composing the insertions.
            let mut bad = Vec::new();
            let mut count = 0u64;
            if d >= 2 {
                'outer: for q in 0..d {
                    let bidx = m.boundary_index(&idx, q);
                    let bpool = m.pool_of(&bidx).unwrap();
                    for bpos in 0..(d - 1) {
                        let hi_pos = if q <= bpos { bpos + 1 } else { bpos };
                        let pairs = self.pairs_at(bpool, bpos);
                        for (x, y) in pairs {
                            count += 1;
                            if count > self.opts.exhaustive_budget {
                                bad.push(format!(
                                    "degeneracy/composition sweep at {idx} exceeds budget"
                                ));
                                break 'outer;
                            }
                            let xy = match m.comp_in(&self.ctx, &bidx, bpos, x, y) {
                                Ok(c) => c,
                                Err(_) => continue,
                            };
                            let lhs = pool.degens[q][xy as usize];
                            let rhs = m.comp_in(
                                &self.ctx,
                                &idx,
                                hi_pos,
                                pool.degens[q][x as usize],
                                pool.degens[q][y as usize],
                            );
                            if rhs.ok() != Some(lhs) {
                                bad.push(format!(
                                    "degeneracy at {q} of {} ∘ {} in {bidx}",
                                    bpool.label(x),
                                    bpool.label(y)
                                ));
                            }
                        }
                    }
                }
                if !bad.is_empty() {
                    dim_ok = false;
                }
                self.rep.outcome(
                    format!("relations/degen-comp@{d}"),
                    "degeneracies preserve composites",
                    count,
                    CheckMethod::Exhaustive,
                    bad,
                );
            }

            // Interchange between distinct positions.
            if d >= 2 {
                let all_tables = pool
                    .comps
                    .iter()
                    .all(|c| matches!(c, CompRule::Table(_)));
                if all_tables {
                    let mut bad = Vec::new();
                    let mut count = 0u64;
                    'm4: for p in 0..d {
                        for q in (p + 1)..d {
                            let p_pairs = self.pairs_at(pool, p);
                            for &(x, y) in &p_pairs {
                                for &(z, w) in &p_pairs {
                                    if pool.face(x, q, Sign::Plus) != pool.face(z, q, Sign::Minus)
                                        || pool.face(y, q, Sign::Plus)
                                            != pool.face(w, q, Sign::Minus)
                                    {
                                        continue;
                                    }
                                    count += 1;
                                    if count > self.opts.exhaustive_budget {
                                        bad.push(format!(
                                            "interchange sweep at {idx} exceeds budget"
                                        ));
                                        break 'm4;
                                    }
                                    let r = (|| -> Result<bool> {
                                        let top = m.comp_in(&self.ctx, &idx, p, x, y)?;
                                        let bot = m.comp_in(&self.ctx, &idx, p, z, w)?;
                                        let lhs = m.comp_in(&self.ctx, &idx, q, top, bot)?;
                                        let l = m.comp_in(&self.ctx, &idx, q, x, z)?;
                                        let rr = m.comp_in(&self.ctx, &idx, q, y, w)?;
                                        let rhs = m.comp_in(&self.ctx, &idx, p, l, rr)?;
                                        Ok(lhs == rhs)
                                    })();
                                    if !matches!(r, Ok(true)) {
                                        bad.push(format!(
                                            "matrix ({}, {}; {}, {}) at {idx} positions {p},{q}",
                                            pool.label(x),
                                            pool.label(y),
                                            pool.label(z),
                                            pool.label(w)
                                        ));
                                    }
                                }
                            }
                        }
                    }
                    if !bad.is_empty() {
                        dim_ok = false;
                    }
                    self.rep.outcome(
                        format!("comp/interchange@{d}"),
                        "compositions in distinct directions satisfy middle-four interchange",
                        count,
                        CheckMethod::Exhaustive,
                        bad,
                    );
                } else {
                    let bad = if reducible {
                        Vec::new()
                    } else {
                        vec![format!(
                            "reduction unavailable: boundary-determinedness or lower laws \
                             failed at {idx}"
                        )]
                    };
                    if !bad.is_empty() {
                        dim_ok = false;
                    }
                    self.rep.outcome(
                        format!("comp/interchange@{d}"),
                        "compositions in distinct directions satisfy middle-four interchange (derived: both sides share all faces)",
                        pool.n_cells as u64,
                        CheckMethod::FacewiseReduction,
                        bad,
                    );
                }
            }
        }

        if !dim_ok && d < self.comp_laws_ok.len() {
            self.comp_laws_ok[d] = false;
        }
        // Propagate failures: any failed record at this dimension blocks
        // reductions above.
        let dim_tag = format!("@{d}");
        if self.rep.failures().iter().any(|c| c.name.contains(&dim_tag)) {
            self.comp_laws_ok[d] = false;
        }
    }

    /// Exhaustive laws for a tabulated composition.
    fn table_comp_laws(
        &mut self,
        k: usize,
        idx: &MultiIndex,
        pos: usize,
        table: &BTreeMap<(u32, u32), u32>,
        tag: &str,
    ) {
        let m = self.m;
        let pool = &m.pools[k];
        let d = pool.dim();

        // Totality: entries exactly on composable pairs.
        let mut bad = Vec::new();
        let mut count = 0u64;
        for (&(x, y), _) in table {
            if pool.face(x, pos, Sign::Plus) != pool.face(y, pos, Sign::Minus) {
                bad.push(format!(
                    "entry ({}, {}) is not composable at position {pos}",
                    pool.label(x),
                    pool.label(y)
                ));
            }
        }
        for (x, y) in self.pairs_at(pool, pos) {
            count += 1;
            if !table.contains_key(&(x, y)) {
                bad.push(format!(
                    "missing composite of {} and {} at position {pos}",
                    pool.label(x),
                    pool.label(y)
                ));
            }
        }
        self.rep.outcome(
            format!("comp/closure{tag}"),
            "the composition table is total on composable pairs and has no stray entries",
            count,
            CheckMethod::Exhaustive,
            bad,
        );

        // Boundary laws.
        let mut bad = Vec::new();
        let mut count = 0u64;
        for (&(x, y), &z) in table {
            count += 1;
            if pool.face(z, pos, Sign::Minus) != pool.face(x, pos, Sign::Minus)
                || pool.face(z, pos, Sign::Plus) != pool.face(y, pos, Sign::Plus)
            {
                bad.push(format!(
                    "composite of {} and {} has wrong faces in its own direction",
                    pool.label(x),
                    pool.label(y)
                ));
                continue;
            }
            for q in 0..d {
                if q == pos {
                    continue;
                }
                let bidx = m.boundary_index(idx, q);
                for a in Sign::BOTH {
                    let sub = m.comp_in(
                        &self.ctx,
                        &bidx,
                        shifted(pos, q),
                        pool.face(x, q, a),
                        pool.face(y, q, a),
                    );
                    if sub.ok() != Some(pool.face(z, q, a)) {
                        bad.push(format!(
                            "face {}{} of the composite of {} and {}",
                            q,
                            a.glyph(),
                            pool.label(x),
                            pool.label(y)
                        ));
                    }
                }
            }
        }
        self.rep.outcome(
            format!("comp/boundary-laws{tag}"),
            "composite faces are the argument faces in the composition direction and composites of faces elsewhere",
            count,
            CheckMethod::Exhaustive,
            bad,
        );

        // Units: degeneracies of the two faces act as identities.
        let mut bad = Vec::new();
        let mut count = 0u64;
        for x in 0..pool.n_cells {
            count += 1;
            let lo = pool.degens[pos][pool.face(x, pos, Sign::Minus) as usize];
            let hi = pool.degens[pos][pool.face(x, pos, Sign::Plus) as usize];
            if table.get(&(lo, x)) != Some(&x) || table.get(&(x, hi)) != Some(&x) {
                bad.push(format!("unit laws at {} position {pos}", pool.label(x)));
            }
        }
        self.rep.outcome(
            format!("comp/units{tag}"),
            "degenerate cells are strict units",
            count,
            CheckMethod::Exhaustive,
            bad,
        );

        // Associativity over composable triples.
        let mut bad = Vec::new();
        let mut count = 0u64;
        let pairs = self.pairs_at(pool, pos);
        let mut by_minus: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for c in 0..pool.n_cells {
            by_minus.entry(pool.face(c, pos, Sign::Minus)).or_default().push(c);
        }
        'assoc: for &(x, y) in &pairs {
            if let Some(zs) = by_minus.get(&pool.face(y, pos, Sign::Plus)) {
                for &z in zs {
                    count += 1;
                    if count > self.opts.exhaustive_budget {
                        bad.push("associativity sweep exceeds budget".to_string());
                        break 'assoc;
                    }
                    let xy_z = table.get(&(x, y)).and_then(|&xy| table.get(&(xy, z)));
                    let x_yz = table.get(&(y, z)).and_then(|&yz| table.get(&(x, yz)));
                    if xy_z.is_none() || xy_z != x_yz {
                        bad.push(format!(
                            "triple ({}, {}, {}) at position {pos}",
                            pool.label(x),
                            pool.label(y),
                            pool.label(z)
                        ));
                    }
                }
            }
        }
        self.rep.outcome(
            format!("comp/assoc{tag}"),
            "composition is associative",
            count,
            CheckMethod::Exhaustive,
            bad,
        );
    }

    fn coskeletal_tail(&mut self) {
        let m = self.m;
        let top = m.directions.len().min(m.dim_bound);
        if m.explicit_dim < top {
            self.rep.outcome(
                "coskeletal/tail",
                format!(
                    "cells of dimensions {}..={} are the face-consistent families over the \
                     stored truncation, with componentwise operations; the laws hold by \
                     construction",
                    m.explicit_dim + 1,
                    top
                ),
                (top - m.explicit_dim) as u64,
                CheckMethod::CoskeletalConstruction,
                Vec::new(),
            );
        }
    }
}

/// Discard all cells above dimension `n`.
pub fn dtrc(m: &TruncatedMultipleCategory, n: usize) -> Result<TruncatedMultipleCategory> {
    if n > m.dim_bound {
        return Err(KernelError::Malformed(format!(
            "cannot truncate at {n}: structure is bounded at {}",
            m.dim_bound
        )));
    }
    let keep_dim = n.min(m.explicit_dim);
    let kept: Vec<usize> = {
        let mut ids: Vec<usize> = m
            .index_pool
            .iter()
            .filter(|(idx, _)| idx.dim() <= keep_dim)
            .map(|(_, &k)| k)
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    };
    let remap: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    Ok(TruncatedMultipleCategory {
        name: format!("dtrc_{n}({})", m.name),
        directions: m.directions.clone(),
        dim_bound: n,
        explicit_dim: keep_dim,
        pools: kept.iter().map(|&k| m.pools[k].clone()).collect(),
        index_pool: m
            .index_pool
            .iter()
            .filter(|(idx, _)| idx.dim() <= keep_dim)
            .map(|(idx, k)| (idx.clone(), remap[k]))
            .collect(),
        closure_certificates: m
            .closure_certificates
            .iter()
            .filter_map(|(k, v)| remap.get(k).map(|&nk| (nk, v.clone())))
            .collect(),
    })
}

/// Options for [`dcosk`] materialization.
#[derive(Debug, Clone)]
pub struct CoskOptions {
    /// Stop materializing a dimension when enumeration exceeds this many
    /// steps; the remaining dimensions stay virtual.
    pub materialize_budget: u64,
}

impl Default for CoskOptions {
    fn default() -> Self {
        CoskOptions {
            materialize_budget: 2_000_000,
        }
    }
}

/// Freely add coskeletal cells to a truncation: for each dimension from
/// `n+1` to `m`, the new cells are exactly the face-consistent families one
/// dimension below, with faces the family components and degeneracies and
/// compositions computed componentwise.
pub fn dcosk(
    a: &TruncatedMultipleCategory,
    n: usize,
    m: usize,
    opts: &CoskOptions,
) -> Result<TruncatedMultipleCategory> {
    if a.dim_bound != n || a.explicit_dim != n {
        return Err(KernelError::Malformed(format!(
            "coskeleton needs a truncation at exactly {n}, got bound {} explicit {}",
            a.dim_bound, a.explicit_dim
        )));
    }
    if m < n {
        return Err(KernelError::Malformed(format!(
            "coskeleton target {m} below truncation {n}"
        )));
    }
    let mut out = a.clone();
    out.name = format!("dcosk_{n}({})", a.name);
    out.dim_bound = m;
    let top = m.min(out.directions.len());

    'dims: for d in (n + 1)..=top {
        // Group the dimension-d indices by their boundary-pool signature;
        // indices with the same signature have identical family sets and
        // can share the materialized pool.
        let indices: Vec<MultiIndex> = out
            .indices_up_to(d)
            .into_iter()
            .filter(|i| i.dim() == d)
            .collect();
        let mut groups: BTreeMap<Vec<usize>, Vec<MultiIndex>> = BTreeMap::new();
        for idx in indices {
            let sig: Vec<usize> = (0..d)
                .map(|p| out.pool_id(&out.boundary_index(&idx, p)))
                .collect::<Result<_>>()?;
            groups.entry(sig).or_default().push(idx);
        }

        let mut new_pools: Vec<(Vec<MultiIndex>, Pool)> = Vec::new();
        for (_, idxs) in groups {
            let rep = idxs[0].clone();
            let families = match out.families_for_index(&rep, opts.materialize_budget) {
                Ok(f) => f,
                Err(KernelError::BudgetExceeded { .. }) => {
                    // This dimension (and everything above) stays virtual.
                    break 'dims;
                }
                Err(e) => return Err(e),
            };
            let n_cells = families.len() as u32;
            let mut faces: Vec<[Vec<u32>; 2]> = vec![[Vec::new(), Vec::new()]; d];
            for fam in &families {
                for p in 0..d {
                    for sign in Sign::BOTH {
                        faces[p][sign.idx()].push(fam.get(p, sign));
                    }
                }
            }
            let lookup: BTreeMap<&FaceConsistentFamily, u32> = families
                .iter()
                .enumerate()
                .map(|(i, f)| (f, i as u32))
                .collect();
            // Degeneracies: e_p(y) has faces y at position p, and lower
            // degeneracies of y's faces elsewhere.
            let mut degens: Vec<Vec<u32>> = Vec::with_capacity(d);
            for p in 0..d {
                let bidx = out.boundary_index(&rep, p);
                let bpool = out.pool_of(&bidx)?;
                let mut col = Vec::with_capacity(bpool.n_cells as usize);
                for y in 0..bpool.n_cells {
                    let mut fam = vec![0u32; 2 * d];
                    for q in 0..d {
                        for sign in Sign::BOTH {
                            let v = if q == p {
                                y
                            } else {
                                let qidx = out.boundary_index(&rep, q);
                                let qpool = out.pool_of(&qidx)?;
                                qpool.degens[shifted(p, q)]
                                    [bpool.face(y, shifted(q, p), sign) as usize]
                            };
                            fam[2 * q + sign.idx()] = v;
                        }
                    }
                    let fam = FaceConsistentFamily(fam);
                    let id = lookup.get(&&fam).copied().ok_or_else(|| {
                        KernelError::Malformed(format!(
                            "degeneracy of {} is not face-consistent at {rep}",
                            bpool.label(y)
                        ))
                    })?;
                    col.push(id);
                }
                degens.push(col);
            }
            let pool = Pool {
                names: Vec::new(),
                n_cells,
                faces,
                degens,
                comps: vec![CompRule::Facewise; d],
            };
            new_pools.push((idxs, pool));
        }

        for (idxs, pool) in new_pools {
            let k = out.pools.len();
            out.pools.push(pool);
            out.closure_certificates.insert(
                k,
                "coskeletal dimension: cells are all face-consistent families, and composite \
                 faces form such a family by the lower boundary laws"
                    .to_string(),
            );
            for idx in idxs {
                out.index_pool.insert(idx, k);
            }
        }
        out.explicit_dim = d;
    }
    Ok(out)
}

/// Per-dimension comparison between a structure and the coskeletal
/// reconstruction from the dimension below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionDeterminacy {
    pub dim: usize,
    /// No two cells share a boundary.
    pub determined: bool,
    /// Every face-consistent family is a cell.
    pub complete: bool,
    /// Witness for a failure of either property.
    pub witness: Option<String>,
}

/// Result of [`coskeletal_dimension`].
#[derive(Debug, Clone)]
pub struct CoskdimOutcome {
    /// Least n (within the bound) such that the structure is its own
    /// n-coskeleton.
    pub value: usize,
    /// The bound the answer is relative to.
    pub dim_bound: usize,
    pub per_dim: Vec<DimensionDeterminacy>,
}

impl CoskdimOutcome {
    /// Witness that the structure is *not* coskeletal at `n`, i.e. some
    /// dimension above `n` is not reconstructed from its boundary data.
    pub fn obstruction_above(&self, n: usize) -> Option<&DimensionDeterminacy> {
        self.per_dim
            .iter()
            .find(|d| d.dim > n && !(d.determined && d.complete))
    }
}

/// The least `n` within the bound such that the structure is isomorphic to
/// the coskeletal reconstruction of its own `n`-truncation.
///
/// Dimension by dimension, a structure agrees with the reconstruction
/// exactly when its cells are uniquely determined by their boundaries and
/// every face-consistent family is realized; virtual dimensions agree by
/// construction.
pub fn coskeletal_dimension(m: &TruncatedMultipleCategory) -> Result<CoskdimOutcome> {
    let ctx = CompCtx::new(m);
    let mut per_dim = Vec::new();
    for d in 1..=m.explicit_dim {
        let mut determined = true;
        let mut complete = true;
        let mut witness = None;
        for (k, idx) in {
            let mut reps: BTreeMap<usize, MultiIndex> = BTreeMap::new();
            for (idx, &k) in &m.index_pool {
                if idx.dim() == d {
                    reps.entry(k).or_insert_with(|| idx.clone());
                }
            }
            reps
        } {
            let pool = &m.pools[k];
            if let Some((a, b)) = ctx.ambiguity(k) {
                determined = false;
                witness.get_or_insert(format!(
                    "cells {} and {} of {idx} share a boundary",
                    pool.label(a),
                    pool.label(b)
                ));
            }
            let families = m.families_for_index(&idx, u64::MAX)?;
            if families.len() as u64 != pool.n_cells as u64 || !determined {
                // With determinedness, counts decide completeness; without
                // it, hunt for an unrealized family either way.
                for fam in &families {
                    if ctx.lookup(k, &fam.0).is_none() {
                        complete = false;
                        let mut parts = Vec::with_capacity(2 * d);
                        for p in 0..d {
                            let bidx = m.boundary_index(&idx, p);
                            let bpool = m.pool_of(&bidx).unwrap();
                            for s in Sign::BOTH {
                                parts.push(format!(
                                    "{}{}={}",
                                    p,
                                    s.glyph(),
                                    bpool.label(fam.get(p, s))
                                ));
                            }
                        }
                        witness.get_or_insert(format!(
                            "face-consistent family at {idx} with no filling cell: {}",
                            parts.join(", ")
                        ));
                        break;
                    }
                }
                if complete && families.len() as u64 != pool.n_cells as u64 {
                    complete = false;
                    witness.get_or_insert(format!(
                        "{} families vs {} cells at {idx}",
                        families.len(),
                        pool.n_cells
                    ));
                }
            }
        }
        per_dim.push(DimensionDeterminacy {
            dim: d,
            determined,
            complete,
            witness,
        });
    }
    let value = (0..=m.explicit_dim)
        .find(|&n| {
            per_dim
                .iter()
                .all(|d| d.dim <= n || (d.determined && d.complete))
        })
        .unwrap_or(m.explicit_dim);
    Ok(CoskdimOutcome {
        value,
        dim_bound: m.dim_bound,
        per_dim,
    })
}

/// A strict multiple functor presented by its cell maps per multi-index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultipleFunctorData {
    pub name: String,
    /// Image cell per cell, for every index of the source up to its
    /// explicit dimension.
    pub maps: BTreeMap<MultiIndex, Vec<u32>>,
}

impl MultipleFunctorData {
    pub fn identity(m: &TruncatedMultipleCategory) -> Self {
        MultipleFunctorData {
            name: format!("id_{}", m.name),
            maps: m
                .index_pool
                .iter()
                .map(|(idx, &k)| (idx.clone(), (0..m.pools[k].n_cells).collect()))
                .collect(),
        }
    }

    pub fn on(&self, idx: &MultiIndex, cell: u32) -> Result<u32> {
        self.maps
            .get(idx)
            .and_then(|v| v.get(cell as usize))
            .copied()
            .ok_or_else(|| KernelError::MissingEntry(format!("functor image of #{cell} at {idx}")))
    }
}

/// Validate that `f` is a strict multiple functor from `a` to `b` on the
/// stored dimensions (virtual tails correspond by construction once the
/// stored dimensions do).
pub fn validate_multiple_functor(
    f: &MultipleFunctorData,
    a: &TruncatedMultipleCategory,
    b: &TruncatedMultipleCategory,
) -> ValidationReport {
    let mut rep = ValidationReport::new(f.name.clone());
    let ctx_b = CompCtx::new(b);

    let mut bad = Vec::new();
    let mut count = 0u64;
    for (idx, &k) in &a.index_pool {
        count += 1;
        match f.maps.get(idx) {
            None => bad.push(format!("no map for index {idx}")),
            Some(v) => {
                if v.len() != a.pools[k].n_cells as usize {
                    bad.push(format!("map at {idx} has wrong length"));
                }
                if let Ok(bp) = b.pool_of(idx) {
                    if let Some(&img) = v.iter().find(|&&img| img >= bp.n_cells) {
                        bad.push(format!("image {img} out of range at {idx}"));
                    }
                } else {
                    bad.push(format!("target has no cells at {idx}"));
                }
            }
        }
    }
    let shape_ok = bad.is_empty();
    rep.outcome(
        "functor/shape",
        "every stored index has a total map into the target",
        count,
        CheckMethod::Exhaustive,
        bad,
    );
    if !shape_ok {
        return rep.finish();
    }

    let mut bad = Vec::new();
    let mut count = 0u64;
    for (idx, &k) in &a.index_pool {
        let pa = &a.pools[k];
        let pb = b.pool_of(idx).unwrap();
        for p in 0..idx.dim() {
            let bidx = a.boundary_index(idx, p);
            for cell in 0..pa.n_cells {
                for sign in Sign::BOTH {
                    count += 1;
                    let lhs = f.on(&bidx, pa.face(cell, p, sign)).ok();
                    let rhs = f.on(idx, cell).map(|c| pb.face(c, p, sign)).ok();
                    if lhs.is_none() || lhs != rhs {
                        bad.push(format!(
                            "face {p}{} of {} at {idx}",
                            sign.glyph(),
                            pa.label(cell)
                        ));
                    }
                }
            }
            let bpa = a.pool_of(&bidx).unwrap();
            for y in 0..bpa.n_cells {
                count += 1;
                let lhs = f.on(idx, pa.degens[p][y as usize]).ok();
                let rhs = f
                    .on(&bidx, y)
                    .map(|fy| pb.degens[p][fy as usize])
                    .ok();
                if lhs.is_none() || lhs != rhs {
                    bad.push(format!(
                        "degeneracy at {p} of {} toward {idx}",
                        bpa.label(y)
                    ));
                }
            }
        }
    }
    rep.outcome(
        "functor/faces-degens",
        "cell maps commute with faces and degeneracies",
        count,
        CheckMethod::Exhaustive,
        bad,
    );

    let mut bad = Vec::new();
    let mut count = 0u64;
    let mut derived = false;
    for (idx, &k) in &a.index_pool {
        let pa = &a.pools[k];
        for p in 0..idx.dim() {
            match &pa.comps[p] {
                CompRule::Table(t) => {
                    for (&(x, y), &z) in t {
                        count += 1;
                        let r = (|| -> Result<bool> {
                            let fx = f.on(idx, x)?;
                            let fy = f.on(idx, y)?;
                            let fz = f.on(idx, z)?;
                            Ok(b.comp_in(&ctx_b, idx, p, fx, fy)? == fz)
                        })();
                        if !matches!(r, Ok(true)) {
                            bad.push(format!(
                                "composite of {} and {} at {idx} position {p}",
                                pa.label(x),
                                pa.label(y)
                            ));
                        }
                    }
                }
                CompRule::Facewise => {
                    // With faces preserved and the target determined at this
                    // dimension, images of facewise composites share all
                    // faces with the composite of the images.
                    derived = true;
                    count += pa.n_cells as u64;
                    let bk = b.pool_id(idx).unwrap();
                    if ctx_b.ambiguity(bk).is_some() {
                        bad.push(format!(
                            "target not boundary-determined at {idx}; composite preservation \
                             cannot be derived"
                        ));
                    }
                }
            }
        }
    }
    rep.outcome(
        "functor/composition",
        "cell maps preserve all composites",
        count,
        if derived {
            CheckMethod::FacewiseReduction
        } else {
            CheckMethod::Exhaustive
        },
        bad,
    );

    rep.finish()
}

/// The terminal multiple category: one cell per multi-index.
pub fn terminal_multiple_category(directions: Vec<u8>, dim_bound: usize) -> TruncatedMultipleCategory {
    let dirs = MultiIndex::new(directions);
    let explicit = dim_bound.min(dirs.dim());
    let pools: Vec<Pool> = (0..=explicit)
        .map(|d| Pool {
            names: vec!["*".to_string()],
            n_cells: 1,
            faces: vec![[vec![0], vec![0]]; d],
            degens: vec![vec![0]; d],
            comps: vec![CompRule::Table(BTreeMap::from([((0, 0), 0)])); d],
        })
        .collect();
    let index_pool = dirs
        .subsets()
        .into_iter()
        .filter(|i| i.dim() <= explicit)
        .map(|i| {
            let d = i.dim();
            (i, d)
        })
        .collect();
    TruncatedMultipleCategory {
        name: "terminal".to_string(),
        directions: dirs.dirs().to_vec(),
        dim_bound,
        explicit_dim: explicit,
        pools,
        index_pool,
        closure_certificates: BTreeMap::new(),
    }
}

/// A discrete truncation: `n` objects, nothing above dimension 0.
pub fn discrete_truncation(n_objects: u32, directions: Vec<u8>) -> TruncatedMultipleCategory {
    let dirs = MultiIndex::new(directions);
    TruncatedMultipleCategory {
        name: format!("discrete_{n_objects}"),
        directions: dirs.dirs().to_vec(),
        dim_bound: 0,
        explicit_dim: 0,
        pools: vec![Pool {
            names: (0..n_objects).map(|i| format!("x{i}")).collect(),
            n_cells: n_objects,
            faces: Vec::new(),
            degens: Vec::new(),
            comps: Vec::new(),
        }],
        index_pool: BTreeMap::from([(MultiIndex::empty(), 0)]),
        closure_certificates: BTreeMap::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::CheckStatus;

    #[test]
    fn terminal_passes_validation() {
        let t = terminal_multiple_category(vec![0, 1, 2], 3);
        let rep = validate_multiple_category(&t);
        assert!(rep.passed(), "failures: {:?}", rep.failures());
    }

    #[test]
    fn terminal_is_coskeletal_at_zero() {
        let t = terminal_multiple_category(vec![0, 1, 2], 3);
        let out = coskeletal_dimension(&t).unwrap();
        assert_eq!(out.value, 0);
    }

    #[test]
    fn coskeleton_of_discrete_counts_consistent_boundaries() {
        let a = discrete_truncation(2, vec![0, 1]);
        let c = dcosk(&a, 0, 2, &CoskOptions::default()).unwrap();
        // Dimension 1: any ordered pair of the 2 objects.
        assert_eq!(c.cell_count(&MultiIndex::single(0)), Some(4));
        assert_eq!(c.cell_count(&MultiIndex::single(1)), Some(4));
        // Dimension 2: one cell per corner-consistent 4-tuple of 1-cells.
        assert_eq!(c.cell_count(&MultiIndex::new(vec![0, 1])), Some(16));
        let rep = validate_multiple_category(&c);
        assert!(rep.passed(), "failures: {:?}", rep.failures());
        let out = coskeletal_dimension(&c).unwrap();
        assert_eq!(out.value, 0);
    }

    #[test]
    fn truncation_after_coskeleton_restores_the_truncation() {
        let a = discrete_truncation(3, vec![0, 1]);
        let c = dcosk(&a, 0, 2, &CoskOptions::default()).unwrap();
        let back = dtrc(&c, 0).unwrap();
        assert_eq!(back.pools, a.pools);
        assert_eq!(back.index_pool, a.index_pool);
    }

    #[test]
    fn truncation_at_the_bound_changes_nothing_but_names() {
        let t = terminal_multiple_category(vec![0, 1], 2);
        let u = dtrc(&t, 2).unwrap();
        assert_eq!(u.pools, t.pools);
        assert_eq!(u.index_pool, t.index_pool);
        assert_eq!(u.dim_bound, 2);
    }

    #[test]
    fn corrupted_degeneracy_face_is_reported_with_the_cell() {
        let a = discrete_truncation(2, vec![0, 1]);
        let mut c = dcosk(&a, 0, 1, &CoskOptions::default()).unwrap();
        // Point the degeneracy of object x1 at the wrong 1-cell.
        let k = c.pool_id(&MultiIndex::single(0)).unwrap();
        c.pools[k].degens[0][1] = 0;
        let rep = validate_multiple_category(&c);
        assert!(!rep.passed());
        let fail = rep
            .failures()
            .into_iter()
            .find(|r| r.name.starts_with("relations/face-degen"))
            .expect("face-degeneracy failure");
        assert_eq!(fail.status, CheckStatus::Fail);
        assert!(fail.witness.iter().any(|w| w.contains("x1")));
    }

    #[test]
    fn family_enumeration_respects_its_budget() {
        let a = discrete_truncation(4, vec![0, 1]);
        let c = dcosk(&a, 0, 1, &CoskOptions::default()).unwrap();
        let err = c
            .families_for_index(&MultiIndex::new(vec![0, 1]), 3)
            .unwrap_err();
        assert!(matches!(err, KernelError::BudgetExceeded { .. }));
    }

    #[test]
    fn identity_functor_validates() {
        let t = terminal_multiple_category(vec![0, 1], 2);
        let f = MultipleFunctorData::identity(&t);
        let rep = validate_multiple_functor(&f, &t, &t);
        assert!(rep.passed(), "failures: {:?}", rep.failures());
    }
}
