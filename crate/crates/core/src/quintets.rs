//! The multiple category of higher quintets over a 2-category.
//!
//! A quintet is a square of 1-cells inhabited by a 2-cell
//!
//! ```text
//!        r
//!    A ────▶ B
//!  u │   ⇙φ  │ v        φ: "r then v" → "u then s"
//!    ▼       ▼
//!    C ────▶ D
//!        s
//! ```
//!
//! For an `{a,b}`-cell with `a < b`, direction `a` runs down the page and
//! direction `b` across it: the faces at position 0 are `(u, v)` and at
//! position 1 are `(r, s)`.  A 3-dimensional cell is a cube of six quintets
//! `[ω, ζ, π, ρ, φ, ψ]` (positions 0−, 0+, 1−, 1+, 2−, 2+) sharing edges
//! through face-consistency, subject to the commutativity relation: both
//! ways of pasting the three quintets around the cube agree.  Cells of
//! dimension above 3 are coskeletal: face-consistent families of cubes.
//!
//! All directions including 0 carry the same structure, so one cell pool per
//! dimension serves every multi-index of that dimension.

use std::collections::BTreeMap;

use crate::error::{KernelError, Result};
use crate::index::MultiIndex;
use crate::multicat::{
    dcosk, CompRule, CoskOptions, FaceConsistentFamily, MultipleFunctorData, Pool, Sign,
    TruncatedMultipleCategory,
};
use crate::twocat::{validate_two_category, FiniteTwoCategory, OneId, TwoId};

/// A quintet: four boundary 1-cells and the inhabiting 2-cell
/// `cell: "r then v" → "u then s"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Quintet {
    pub r: OneId,
    pub s: OneId,
    pub u: OneId,
    pub v: OneId,
    pub cell: TwoId,
}

impl Quintet {
    /// Boundary well-formedness against `c`.
    pub fn check_shape(&self, c: &FiniteTwoCategory) -> Result<()> {
        let rv = c.compose1(self.r, self.v)?;
        let us = c.compose1(self.u, self.s)?;
        if c.src2(self.cell) != rv || c.tgt2(self.cell) != us {
            return Err(KernelError::Malformed(format!(
                "2-cell {} does not run from \"{} then {}\" to \"{} then {}\"",
                c.two_name(self.cell),
                c.one_name(self.r),
                c.one_name(self.v),
                c.one_name(self.u),
                c.one_name(self.s)
            )));
        }
        Ok(())
    }

    pub fn name(&self, c: &FiniteTwoCategory) -> String {
        format!(
            "q[{},{},{},{};{}]",
            c.one_name(self.r),
            c.one_name(self.s),
            c.one_name(self.u),
            c.one_name(self.v),
            c.two_name(self.cell)
        )
    }
}

/// All quintets of `c`, in lexicographic order of `(r, s, u, v, cell)`.
pub fn quintet_list(c: &FiniteTwoCategory) -> Vec<Quintet> {
    let n1 = c.one_cells.len() as u32;
    let mut out = Vec::new();
    for r in (0..n1).map(OneId) {
        for s in (0..n1).map(OneId) {
            for u in (0..n1).map(OneId) {
                if c.src1(u) != c.src1(r) {
                    continue;
                }
                for v in (0..n1).map(OneId) {
                    if c.src1(v) != c.tgt1(r)
                        || c.src1(s) != c.tgt1(u)
                        || c.tgt1(s) != c.tgt1(v)
                    {
                        continue;
                    }
                    let rv = c.comp1[&(r, v)];
                    let us = c.comp1[&(u, s)];
                    for cell in c.hom2(rv, us) {
                        out.push(Quintet { r, s, u, v, cell });
                    }
                }
            }
        }
    }
    out
}

/// The degenerate quintet on a 1-cell, inserting the new direction at
/// `pos` (0: the 1-cell becomes both position-0 faces; 1: both position-1
/// faces); the inhabiting 2-cell is an identity.
pub fn degenerate_quintet(c: &FiniteTwoCategory, pos: usize, f: OneId) -> Quintet {
    let ids = c.id_one[c.src1(f).0 as usize];
    let idt = c.id_one[c.tgt1(f).0 as usize];
    let cell = c.id_two[f.0 as usize];
    match pos {
        0 => Quintet {
            r: ids,
            s: idt,
            u: f,
            v: f,
            cell,
        },
        1 => Quintet {
            r: f,
            s: f,
            u: ids,
            v: idt,
            cell,
        },
        _ => panic!("a quintet has positions 0 and 1"),
    }
}

/// Compose two quintets at `pos`.
///
/// At position 0 the squares share a position-0 face (`v` of `x` equals `u`
/// of `y`) and paste as `(y.cell·x.r) ⊗ (y.s·x.cell)`; at position 1 they
/// share a position-1 face (`s` of `x` equals `r` of `y`) and paste as
/// `(y.v·x.cell) ⊗ (y.cell·x.u)`.
pub fn compose_quintets(
    c: &FiniteTwoCategory,
    pos: usize,
    x: &Quintet,
    y: &Quintet,
) -> Result<Quintet> {
    match pos {
        0 => {
            if x.v != y.u {
                return Err(KernelError::NotComposable {
                    lhs: x.name(c),
                    rhs: y.name(c),
                    dir: 0,
                });
            }
            let lhs = c.whisk_r(y.cell, x.r)?;
            let rhs = c.whisk_l(y.s, x.cell)?;
            Ok(Quintet {
                r: c.compose1(x.r, y.r)?,
                s: c.compose1(x.s, y.s)?,
                u: x.u,
                v: y.v,
                cell: c.vcompose(lhs, rhs)?,
            })
        }
        1 => {
            if x.s != y.r {
                return Err(KernelError::NotComposable {
                    lhs: x.name(c),
                    rhs: y.name(c),
                    dir: 1,
                });
            }
            let lhs = c.whisk_l(y.v, x.cell)?;
            let rhs = c.whisk_r(y.cell, x.u)?;
            Ok(Quintet {
                r: x.r,
                s: y.s,
                u: c.compose1(x.u, y.u)?,
                v: c.compose1(x.v, y.v)?,
                cell: c.vcompose(lhs, rhs)?,
            })
        }
        _ => Err(KernelError::Malformed(
            "a quintet has positions 0 and 1".into(),
        )),
    }
}

/// A candidate 3-dimensional cell: six quintets in positional order
/// `[ω, ζ, π, ρ, φ, ψ]` = `[0−, 0+, 1−, 1+, 2−, 2+]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuintetCube {
    pub faces: [Quintet; 6],
}

impl QuintetCube {
    pub fn omega(&self) -> &Quintet {
        &self.faces[0]
    }
    pub fn zeta(&self) -> &Quintet {
        &self.faces[1]
    }
    pub fn pi(&self) -> &Quintet {
        &self.faces[2]
    }
    pub fn rho(&self) -> &Quintet {
        &self.faces[3]
    }
    pub fn phi(&self) -> &Quintet {
        &self.faces[4]
    }
    pub fn psi(&self) -> &Quintet {
        &self.faces[5]
    }
}

/// Check the edge-sharing between the six faces of a cube candidate.
///
/// With `φ = (r, s, u, v)`, `ψ = (r′, s′, u′, v′)` and the four connecting
/// 1-cells `x, y, x′, y′`, the remaining faces must be `π = (r, r′, x, x′)`,
/// `ρ = (s, s′, y, y′)`, `ω = (u, u′, x, y)`, `ζ = (v, v′, x′, y′)`.
pub fn check_cube_shape(c: &FiniteTwoCategory, cube: &QuintetCube) -> Result<()> {
    for q in &cube.faces {
        q.check_shape(c)?;
    }
    let (phi, psi) = (cube.phi(), cube.psi());
    let (pi, rho) = (cube.pi(), cube.rho());
    let (omega, zeta) = (cube.omega(), cube.zeta());
    let ok = pi.r == phi.r
        && pi.s == psi.r
        && rho.r == phi.s
        && rho.s == psi.s
        && omega.r == phi.u
        && omega.s == psi.u
        && zeta.r == phi.v
        && zeta.s == psi.v
        && omega.u == pi.u
        && omega.v == rho.u
        && zeta.u == pi.v
        && zeta.v == rho.v;
    if ok {
        Ok(())
    } else {
        Err(KernelError::Malformed(
            "cube faces do not share their edges consistently".into(),
        ))
    }
}

/// Evaluate the cube commutativity relation.
///
/// Returns `None` when the two pastings agree, otherwise the two distinct
/// 2-cells `(lhs, rhs)` with
/// `lhs = y′φ ⊗ ρu ⊗ s′ω` and `rhs = ζr ⊗ v′π ⊗ ψx`.
pub fn check_cube(
    c: &FiniteTwoCategory,
    cube: &QuintetCube,
) -> Result<Option<(TwoId, TwoId)>> {
    check_cube_shape(c, cube)?;
    let (phi, psi) = (cube.phi(), cube.psi());
    let (pi, rho) = (cube.pi(), cube.rho());
    let (omega, zeta) = (cube.omega(), cube.zeta());
    let x = omega.u;
    let y_pr = rho.v;
    let s_pr = psi.s;
    let v_pr = psi.v;
    let r = phi.r;
    let u = phi.u;

    let lhs = {
        let a = c.whisk_l(y_pr, phi.cell)?;
        let b = c.whisk_r(rho.cell, u)?;
        let d = c.whisk_l(s_pr, omega.cell)?;
        c.vcompose(c.vcompose(a, b)?, d)?
    };
    let rhs = {
        let a = c.whisk_r(zeta.cell, r)?;
        let b = c.whisk_l(v_pr, pi.cell)?;
        let d = c.whisk_r(psi.cell, x)?;
        c.vcompose(c.vcompose(a, b)?, d)?
    };
    Ok(if lhs == rhs { None } else { Some((lhs, rhs)) })
}

/// Budgets for building the quintet construction.
#[derive(Debug, Clone)]
pub struct QuintetOptions {
    /// Enumeration budget per materialized dimension at 3 and above;
    /// dimensions above 3 that exceed it stay virtual (coskeletal), while
    /// dimension 3 itself must fit.
    pub materialize_budget: u64,
}

impl Default for QuintetOptions {
    fn default() -> Self {
        QuintetOptions {
            materialize_budget: 2_000_000,
        }
    }
}

/// Build the multiple category of higher quintets over `c`, with directions
/// `0..=up_to` and cells materialized through dimension 3 (and beyond while
/// the budget lasts; the remainder is coskeletal).
pub fn build_q(c: &FiniteTwoCategory, up_to: usize) -> Result<TruncatedMultipleCategory> {
    build_q_with(c, up_to, &QuintetOptions::default())
}

/// [`build_q`] with explicit budgets.
pub fn build_q_with(
    c: &FiniteTwoCategory,
    up_to: usize,
    opts: &QuintetOptions,
) -> Result<TruncatedMultipleCategory> {
    let base = validate_two_category(c);
    if !base.passed() {
        return Err(KernelError::Malformed(format!(
            "base 2-category {} fails its own axioms; first failure: {}",
            c.name,
            base.failures()
                .first()
                .map(|f| f.name.clone())
                .unwrap_or_default()
        )));
    }
    if up_to > u8::MAX as usize {
        return Err(KernelError::Malformed("direction labels exceed u8".into()));
    }
    let directions: Vec<u8> = (0..=up_to as u8).collect();
    let mut pools = Vec::new();
    let mut index_pool = BTreeMap::new();
    let dirs_index = MultiIndex::new(directions.clone());

    // Dimension 0: the objects.
    pools.push(Pool {
        names: c.objects.clone(),
        n_cells: c.objects.len() as u32,
        faces: Vec::new(),
        degens: Vec::new(),
        comps: Vec::new(),
    });
    index_pool.insert(MultiIndex::empty(), 0);

    // Dimension 1: every direction's cells are the 1-cells of `c`.
    if up_to >= 1 {
        let n1 = c.one_cells.len() as u32;
        let pool = Pool {
            names: c.one_cells.iter().map(|f| f.name.clone()).collect(),
            n_cells: n1,
            faces: vec![[
                c.one_cells.iter().map(|f| f.src.0).collect(),
                c.one_cells.iter().map(|f| f.tgt.0).collect(),
            ]],
            degens: vec![c.id_one.iter().map(|f| f.0).collect()],
            comps: vec![CompRule::Table(
                c.comp1.iter().map(|(&(f, g), &h)| ((f.0, g.0), h.0)).collect(),
            )],
        };
        pools.push(pool);
        for idx in dirs_index.subsets() {
            if idx.dim() == 1 {
                index_pool.insert(idx, 1);
            }
        }
    }

    // Dimension 2: quintets.
    let quintets = quintet_list(c);
    let qid: BTreeMap<Quintet, u32> = quintets
        .iter()
        .enumerate()
        .map(|(i, q)| (*q, i as u32))
        .collect();
    if up_to >= 2 {
        let mut comps = Vec::new();
        for pos in 0..2 {
            let mut table = BTreeMap::new();
            for (i, x) in quintets.iter().enumerate() {
                for (j, y) in quintets.iter().enumerate() {
                    let share = match pos {
                        0 => x.v == y.u,
                        _ => x.s == y.r,
                    };
                    if !share {
                        continue;
                    }
                    let z = compose_quintets(c, pos, x, y)?;
                    let zid = *qid.get(&z).ok_or_else(|| {
                        KernelError::Malformed(format!(
                            "composite quintet {} not enumerated",
                            z.name(c)
                        ))
                    })?;
                    table.insert((i as u32, j as u32), zid);
                }
            }
            comps.push(CompRule::Table(table));
        }
        let pool = Pool {
            names: quintets.iter().map(|q| q.name(c)).collect(),
            n_cells: quintets.len() as u32,
            faces: vec![
                [
                    quintets.iter().map(|q| q.u.0).collect(),
                    quintets.iter().map(|q| q.v.0).collect(),
                ],
                [
                    quintets.iter().map(|q| q.r.0).collect(),
                    quintets.iter().map(|q| q.s.0).collect(),
                ],
            ],
            degens: (0..2)
                .map(|pos| {
                    (0..c.one_cells.len() as u32)
                        .map(|f| qid[&degenerate_quintet(c, pos, OneId(f))])
                        .collect()
                })
                .collect(),
            comps,
        };
        pools.push(pool);
        for idx in dirs_index.subsets() {
            if idx.dim() == 2 {
                index_pool.insert(idx, 2);
            }
        }
    }

    let mut m = TruncatedMultipleCategory {
        name: format!("Q({})", c.name),
        directions,
        dim_bound: up_to.min(2),
        explicit_dim: up_to.min(2),
        pools,
        index_pool,
        closure_certificates: BTreeMap::new(),
    };
    if up_to <= 2 {
        m.dim_bound = up_to;
        return Ok(m);
    }

    // Dimension 3: face-consistent families of quintets satisfying the cube
    // relation.
    let rep3 = MultiIndex::new(vec![0, 1, 2]);
    let families = m.families_for_index(&rep3, opts.materialize_budget)?;
    let mut cubes: Vec<FaceConsistentFamily> = Vec::new();
    for fam in families {
        let cube = QuintetCube {
            faces: [
                quintets[fam.get(0, Sign::Minus) as usize],
                quintets[fam.get(0, Sign::Plus) as usize],
                quintets[fam.get(1, Sign::Minus) as usize],
                quintets[fam.get(1, Sign::Plus) as usize],
                quintets[fam.get(2, Sign::Minus) as usize],
                quintets[fam.get(2, Sign::Plus) as usize],
            ],
        };
        if check_cube(c, &cube)?.is_none() {
            cubes.push(fam);
        }
    }
    let find_cube = |fam: &FaceConsistentFamily| -> Result<u32> {
        cubes
            .binary_search(fam)
            .map(|i| i as u32)
            .map_err(|_| KernelError::Malformed("expected cube is missing".into()))
    };

    let mut faces3: Vec<[Vec<u32>; 2]> = vec![[Vec::new(), Vec::new()]; 3];
    for fam in &cubes {
        for p in 0..3 {
            for sign in Sign::BOTH {
                faces3[p][sign.idx()].push(fam.get(p, sign));
            }
        }
    }
    // Degenerate cubes: the inserted position repeats the quintet, the other
    // positions take its faces' degeneracies.
    let pool2 = &m.pools[2];
    let mut degens3: Vec<Vec<u32>> = Vec::with_capacity(3);
    for p in 0..3 {
        let mut col = Vec::with_capacity(quintets.len());
        for y in 0..quintets.len() as u32 {
            let mut fam = vec![0u32; 6];
            for q in 0..3 {
                for sign in Sign::BOTH {
                    let v = if q == p {
                        y
                    } else {
                        let lower_pos = crate::multicat::shifted(p, q);
                        let face_pos = crate::multicat::shifted(q, p);
                        pool2.degens[lower_pos][pool2.face(y, face_pos, sign) as usize]
                    };
                    fam[2 * q + sign.idx()] = v;
                }
            }
            col.push(find_cube(&FaceConsistentFamily(fam))?);
        }
        degens3.push(col);
    }
    let pool3 = Pool {
        names: Vec::new(),
        n_cells: cubes.len() as u32,
        faces: faces3,
        degens: degens3,
        comps: vec![CompRule::Facewise; 3],
    };
    let k3 = m.pools.len();
    m.pools.push(pool3);
    m.closure_certificates.insert(
        k3,
        "pasting two commuting cubes yields a commuting cube, by the interchange and \
         associativity laws verified exhaustively on the base 2-category"
            .to_string(),
    );
    for idx in MultiIndex::new(m.directions.clone()).subsets() {
        if idx.dim() == 3 {
            m.index_pool.insert(idx, k3);
        }
    }
    m.dim_bound = 3;
    m.explicit_dim = 3;
    if up_to == 3 {
        return Ok(m);
    }

    // Dimensions above 3 are coskeletal; materialize while the budget
    // lasts.
    let mut out = dcosk(
        &m,
        3,
        up_to,
        &CoskOptions {
            materialize_budget: opts.materialize_budget,
        },
    )?;
    out.name = format!("Q({})", c.name);
    Ok(out)
}

/// Decide whether `a` is of quintet type over `q = build_q(...)` along the
/// multiple functor `u`: every cell of dimension ≥ 2 must be uniquely
/// determined by its boundary together with its image under `u`.
///
/// Returns `None` when the condition holds, otherwise a witness naming two
/// cells that collide.  `u` must validate as a strict multiple functor.
pub fn check_quintet_type(
    a: &TruncatedMultipleCategory,
    u: &MultipleFunctorData,
    q: &TruncatedMultipleCategory,
) -> Result<Option<String>> {
    let rep = crate::multicat::validate_multiple_functor(u, a, q);
    if !rep.passed() {
        return Err(KernelError::Malformed(format!(
            "comparison map fails multiple-functor laws; first failure: {}",
            rep.failures()
                .first()
                .map(|f| f.name.clone())
                .unwrap_or_default()
        )));
    }
    for (idx, &k) in &a.index_pool {
        if idx.dim() < 2 {
            continue;
        }
        let pool = &a.pools[k];
        let mut seen: BTreeMap<(Vec<u32>, u32), u32> = BTreeMap::new();
        for cell in 0..pool.n_cells {
            let key = (pool.fingerprint(cell), u.on(idx, cell)?);
            if let Some(&other) = seen.get(&key) {
                return Ok(Some(format!(
                    "cells {} and {} of {idx} share boundary and image",
                    pool.label(other),
                    pool.label(cell)
                )));
            }
            seen.insert(key, cell);
        }
    }
    Ok(None)
}

/// Identity comparison data on a quintet construction (used to state that
/// `build_q` output itself is of quintet type).
pub fn identity_comparison(q: &TruncatedMultipleCategory) -> MultipleFunctorData {
    MultipleFunctorData::identity(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fix1, fix3, one_by_name, sigma_two_z2};
    use crate::multicat::validate_multiple_category;

    #[test]
    fn quintet_composition_has_units() {
        let c = fix1();
        let qs = quintet_list(&c);
        for pos in 0..2 {
            for q in qs.iter().take(40) {
                let (lo, hi) = match pos {
                    0 => (q.u, q.v),
                    _ => (q.r, q.s),
                };
                let el = degenerate_quintet(&c, pos, lo);
                let er = degenerate_quintet(&c, pos, hi);
                assert_eq!(compose_quintets(&c, pos, &el, q).unwrap(), *q);
                assert_eq!(compose_quintets(&c, pos, q, &er).unwrap(), *q);
            }
        }
    }

    #[test]
    fn all_identity_cube_commutes() {
        let c = fix1();
        let f = one_by_name(&c, "i2");
        let q = degenerate_quintet(&c, 0, f);
        let cube = QuintetCube { faces: [q; 6] };
        assert_eq!(check_cube(&c, &cube).unwrap(), None);
    }

    #[test]
    fn group_fixture_has_a_noncommuting_cube() {
        let c = sigma_two_z2();
        let qs = quintet_list(&c);
        assert_eq!(qs.len(), 2);
        let (id, sig) = (qs[0], qs[1]);
        let cube = QuintetCube {
            faces: [sig, id, id, id, id, id],
        };
        assert!(check_cube(&c, &cube).unwrap().is_some());
        let balanced = QuintetCube {
            faces: [sig, sig, id, id, id, id],
        };
        assert_eq!(check_cube(&c, &balanced).unwrap(), None);
    }

    #[test]
    fn codiscrete_fixture_counts_follow_corner_choices() {
        let c = fix3();
        let q = build_q(&c, 4).unwrap();
        let at = |dirs: &[u8]| q.cell_count(&MultiIndex::new(dirs.to_vec())).unwrap();
        assert_eq!(at(&[]), 2);
        assert_eq!(at(&[0]), 4);
        assert_eq!(at(&[0, 1]), 16);
        assert_eq!(at(&[1, 3]), 16);
        assert_eq!(at(&[0, 1, 2]), 256);
        assert_eq!(at(&[0, 1, 2, 3]), 65536);
    }

    #[test]
    fn codiscrete_construction_validates_to_dimension_four() {
        let c = fix3();
        let q = build_q(&c, 4).unwrap();
        let rep = validate_multiple_category(&q);
        assert!(rep.passed(), "failures: {:?}", rep.failures());
    }

    #[test]
    fn rejecting_an_invalid_base_names_the_failure() {
        let mut c = fix1();
        let a = crate::fixtures::two_by_name(&c, "k0<=i2");
        let b = crate::fixtures::two_by_name(&c, "1_k0");
        let v = c.vcomp.get_mut(&(b, a)).unwrap();
        *v = b;
        let err = build_q(&c, 2).unwrap_err();
        assert!(matches!(err, KernelError::Malformed(_)));
    }
}
