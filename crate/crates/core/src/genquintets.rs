//! Generalised quintets over a sequence of 2-categories.
//!
//! Given levels `L_0, …, L_d` joined by strict 2-functors that are the
//! identity on a shared object set, the construction produces a multiple
//! category with directions `0..=d`: an `{i}`-cell is a 1-cell of `L_i`,
//! and an `{i,j}`-cell (`i < j`) is a square
//!
//! ```text
//!        r                  r, s: 1-cells of L_i
//!    A ────▶ B              u, v: 1-cells of L_j
//!  u │   ⇙φ  │ v
//!    ▼       ▼              φ inhabits the square inside one level — the
//!    C ────▶ D              carrier — after the other pair of edges is
//!        s                  pushed there through the links.
//! ```
//!
//! With descending links (`L_{i+1} → L_i`) the carrier of the pair is `L_i`
//! and `φ: (Uv)r → s(Uu)`; with ascending links (`L_i → L_{i+1}`) it is
//! `L_j` and `φ: v(Ur) → (Us)u`.  Three-dimensional cells are cubes of such
//! squares whose images in the common carrier of the triple commute, and
//! higher cells are coskeletal, exactly as for plain quintets.

use std::collections::BTreeMap;

use crate::error::{KernelError, Result};
use crate::index::MultiIndex;
use crate::multicat::{
    dcosk, shifted, CompRule, CoskOptions, FaceConsistentFamily, MultipleFunctorData, Pool, Sign,
    TruncatedMultipleCategory,
};
use crate::quintets::{check_cube, quintet_list, Quintet, QuintetCube};
use crate::twocat::{
    validate_two_category, OneId, SequenceShape, StrictTwoFunctor,
    TwoFunctorSequence, TwoId,
};

/// A square over a level pair: `r, s` live in the lower level, `u, v` in
/// the higher one, `cell` in the pair's carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct UQuintet {
    pub r: OneId,
    pub s: OneId,
    pub u: OneId,
    pub v: OneId,
    pub cell: TwoId,
}

/// The level a pair's inhabiting 2-cell lives in.
pub fn carrier_of_pair(shape: SequenceShape, i: usize, j: usize) -> usize {
    match shape {
        SequenceShape::Forgetful => i,
        SequenceShape::Structural => j,
    }
}

/// The level a triple's cube relation is evaluated in.
pub fn carrier_of_triple(shape: SequenceShape, i: usize, k: usize) -> usize {
    match shape {
        SequenceShape::Forgetful => i,
        SequenceShape::Structural => k,
    }
}

/// The links that push an `(a, b)`-square's parts into level `w`:
/// `(for r and s, for u and v, for the cell)`.
fn pushers(
    seq: &TwoFunctorSequence,
    a: usize,
    b: usize,
    w: usize,
) -> Result<(StrictTwoFunctor, StrictTwoFunctor, StrictTwoFunctor)> {
    match seq.shape {
        SequenceShape::Forgetful => {
            let rs = seq.link_between(w, a)?;
            let uv = seq.link_between(w, b)?;
            let cell = seq.link_between(w, a)?;
            Ok((rs, uv, cell))
        }
        SequenceShape::Structural => {
            let rs = seq.link_between(a, w)?;
            let uv = seq.link_between(b, w)?;
            let cell = seq.link_between(b, w)?;
            Ok((rs, uv, cell))
        }
    }
}

/// The plain quintet underlying an `(a, b)`-square inside level `w`
/// (forgetful: `w ≤ a`; structural: `w ≥ b`).
pub fn quintet_at_level(
    seq: &TwoFunctorSequence,
    pair: (usize, usize),
    q: &UQuintet,
    w: usize,
) -> Result<Quintet> {
    let (rs, uv, cell) = pushers(seq, pair.0, pair.1, w)?;
    Ok(Quintet {
        r: rs.on_one(q.r),
        s: rs.on_one(q.s),
        u: uv.on_one(q.u),
        v: uv.on_one(q.v),
        cell: cell.on_two(q.cell),
    })
}

/// All `(i, j)`-squares of the sequence, in lexicographic order of
/// `(r, s, u, v, cell)`.
pub fn u_quintet_list(
    seq: &TwoFunctorSequence,
    i: usize,
    j: usize,
) -> Result<Vec<UQuintet>> {
    let li = &seq.levels[i];
    let lj = &seq.levels[j];
    let w = carrier_of_pair(seq.shape, i, j);
    let lw = &seq.levels[w];
    let (rs, uv, _) = pushers(seq, i, j, w)?;
    let mut out = Vec::new();
    for r in (0..li.one_cells.len() as u32).map(OneId) {
        for s in (0..li.one_cells.len() as u32).map(OneId) {
            for u in (0..lj.one_cells.len() as u32).map(OneId) {
                if lj.src1(u) != li.src1(r) {
                    continue;
                }
                for v in (0..lj.one_cells.len() as u32).map(OneId) {
                    if lj.src1(v) != li.tgt1(r)
                        || li.src1(s) != lj.tgt1(u)
                        || li.tgt1(s) != lj.tgt1(v)
                    {
                        continue;
                    }
                    let src = lw.compose1(rs.on_one(r), uv.on_one(v))?;
                    let tgt = lw.compose1(uv.on_one(u), rs.on_one(s))?;
                    for cell in lw.hom2(src, tgt) {
                        out.push(UQuintet { r, s, u, v, cell });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Compose two `(i, j)`-squares at `pos` (0: glue along the shared
/// higher-level edge; 1: along the shared lower-level edge), pasting the
/// inhabiting cells in the pair's carrier.
pub fn compose_u_quintets(
    seq: &TwoFunctorSequence,
    pair: (usize, usize),
    pos: usize,
    x: &UQuintet,
    y: &UQuintet,
) -> Result<UQuintet> {
    let (i, j) = pair;
    let li = &seq.levels[i];
    let lj = &seq.levels[j];
    let w = carrier_of_pair(seq.shape, i, j);
    let lw = &seq.levels[w];
    let (rs, uv, _) = pushers(seq, i, j, w)?;
    match pos {
        0 => {
            if x.v != y.u {
                return Err(KernelError::NotComposable {
                    lhs: format!("square #{}", x.cell.0),
                    rhs: format!("square #{}", y.cell.0),
                    dir: 0,
                });
            }
            let lhs = lw.whisk_r(y.cell, rs.on_one(x.r))?;
            let rhs = lw.whisk_l(rs.on_one(y.s), x.cell)?;
            Ok(UQuintet {
                r: li.compose1(x.r, y.r)?,
                s: li.compose1(x.s, y.s)?,
                u: x.u,
                v: y.v,
                cell: lw.vcompose(lhs, rhs)?,
            })
        }
        1 => {
            if x.s != y.r {
                return Err(KernelError::NotComposable {
                    lhs: format!("square #{}", x.cell.0),
                    rhs: format!("square #{}", y.cell.0),
                    dir: 1,
                });
            }
            let lhs = lw.whisk_l(uv.on_one(y.v), x.cell)?;
            let rhs = lw.whisk_r(y.cell, uv.on_one(x.u))?;
            Ok(UQuintet {
                r: x.r,
                s: y.s,
                u: lj.compose1(x.u, y.u)?,
                v: lj.compose1(x.v, y.v)?,
                cell: lw.vcompose(lhs, rhs)?,
            })
        }
        _ => Err(KernelError::Malformed(
            "a square has positions 0 and 1".into(),
        )),
    }
}

/// The degenerate `(i, j)`-square on a 1-cell of one of the two levels:
/// `pos` 0 takes a level-`j` cell, `pos` 1 a level-`i` cell.
pub fn degenerate_u_quintet(
    seq: &TwoFunctorSequence,
    pair: (usize, usize),
    pos: usize,
    f: OneId,
) -> Result<UQuintet> {
    let (i, j) = pair;
    let li = &seq.levels[i];
    let lj = &seq.levels[j];
    let w = carrier_of_pair(seq.shape, i, j);
    let lw = &seq.levels[w];
    let (rs, uv, _) = pushers(seq, i, j, w)?;
    match pos {
        0 => {
            let a = lj.src1(f).0 as usize;
            let b = lj.tgt1(f).0 as usize;
            Ok(UQuintet {
                r: li.id_one[a],
                s: li.id_one[b],
                u: f,
                v: f,
                cell: lw.id_two[uv.on_one(f).0 as usize],
            })
        }
        1 => {
            let a = li.src1(f).0 as usize;
            let b = li.tgt1(f).0 as usize;
            Ok(UQuintet {
                r: f,
                s: f,
                u: lj.id_one[a],
                v: lj.id_one[b],
                cell: lw.id_two[rs.on_one(f).0 as usize],
            })
        }
        _ => Err(KernelError::Malformed(
            "a square has positions 0 and 1".into(),
        )),
    }
}

/// A candidate 3-cell over a triple `i < j < k`: six squares in positional
/// order `[ω, ζ, π, ρ, φ, ψ]`, where `φ, ψ` are `(i,j)`-squares, `π, ρ`
/// are `(i,k)`-squares and `ω, ζ` are `(j,k)`-squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UCube {
    pub faces: [UQuintet; 6],
}

/// Check edge-sharing between the six faces of a cube candidate, on the
/// raw (unpushed) data.
pub fn check_u_cube_shape(cube: &UCube) -> Result<()> {
    let [omega, zeta, pi, rho, phi, psi] = &cube.faces;
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

/// Evaluate the cube commutativity relation for a triple `i < j < k` by
/// pushing all six squares into the triple's carrier level and pasting
/// there.  Returns `None` when both pastes agree, otherwise the two
/// distinct 2-cells of the carrier.
pub fn check_u_cube(
    seq: &TwoFunctorSequence,
    dirs: (usize, usize, usize),
    cube: &UCube,
) -> Result<Option<(TwoId, TwoId)>> {
    let (i, j, k) = dirs;
    if !(i < j && j < k && k <= seq.depth()) {
        return Err(KernelError::Malformed(format!(
            "directions ({i}, {j}, {k}) are not an increasing triple within depth {}",
            seq.depth()
        )));
    }
    check_u_cube_shape(cube)?;
    let w = carrier_of_triple(seq.shape, i, k);
    let lw = &seq.levels[w];
    let pushed = QuintetCube {
        faces: [
            quintet_at_level(seq, (j, k), &cube.faces[0], w)?,
            quintet_at_level(seq, (j, k), &cube.faces[1], w)?,
            quintet_at_level(seq, (i, k), &cube.faces[2], w)?,
            quintet_at_level(seq, (i, k), &cube.faces[3], w)?,
            quintet_at_level(seq, (i, j), &cube.faces[4], w)?,
            quintet_at_level(seq, (i, j), &cube.faces[5], w)?,
        ],
    };
    check_cube(lw, &pushed)
}

/// Budgets and strategy switches for building the generalised quintet
/// construction.
#[derive(Debug, Clone)]
pub struct GqOptions {
    /// Enumeration budget per materialized dimension at 3 and above;
    /// dimension 3 must fit, higher dimensions fall back to the coskeletal
    /// description.
    pub materialize_budget: u64,
    /// Describe 2-dimensional compositions facewise instead of tabulating
    /// them, for pools whose squares are determined by their four edges.
    /// Pools where several squares share a frame keep explicit tables.
    pub facewise_pairs: bool,
}

impl Default for GqOptions {
    fn default() -> Self {
        GqOptions {
            materialize_budget: 2_000_000,
            facewise_pairs: false,
        }
    }
}

/// Build the multiple category of generalised quintets over `seq`, with
/// one direction per level and cells materialized through dimension
/// `min(up_to, 3)` (and beyond while the budget lasts).
pub fn build_gq(seq: &TwoFunctorSequence, up_to: usize) -> Result<TruncatedMultipleCategory> {
    build_gq_with(seq, up_to, &GqOptions::default())
}

/// [`build_gq`] with explicit budgets.
pub fn build_gq_with(
    seq: &TwoFunctorSequence,
    up_to: usize,
    opts: &GqOptions,
) -> Result<TruncatedMultipleCategory> {
    let rep = seq.validate();
    if !rep.passed() {
        return Err(KernelError::Malformed(format!(
            "sequence {} fails its structural laws; first failure: {}",
            seq.name,
            rep.failures()
                .first()
                .map(|f| f.name.clone())
                .unwrap_or_default()
        )));
    }
    for level in &seq.levels {
        let base = validate_two_category(level);
        if !base.passed() {
            return Err(KernelError::Malformed(format!(
                "level {} fails its own axioms; first failure: {}",
                level.name,
                base.failures()
                    .first()
                    .map(|f| f.name.clone())
                    .unwrap_or_default()
            )));
        }
    }
    let d = seq.depth();
    if d + 1 > u8::MAX as usize {
        return Err(KernelError::Malformed("direction labels exceed u8".into()));
    }
    let directions: Vec<u8> = (0..=d as u8).collect();
    let dirs_index = MultiIndex::new(directions.clone());
    let bound = up_to.min(d + 1);

    let mut pools = Vec::new();
    let mut index_pool = BTreeMap::new();
    pools.push(Pool {
        names: seq.levels[0].objects.clone(),
        n_cells: seq.levels[0].objects.len() as u32,
        faces: Vec::new(),
        degens: Vec::new(),
        comps: Vec::new(),
    });
    index_pool.insert(MultiIndex::empty(), 0);

    if bound >= 1 {
        for i in 0..=d {
            let c = &seq.levels[i];
            let k = pools.len();
            pools.push(Pool {
                names: c.one_cells.iter().map(|f| f.name.clone()).collect(),
                n_cells: c.one_cells.len() as u32,
                faces: vec![[
                    c.one_cells.iter().map(|f| f.src.0).collect(),
                    c.one_cells.iter().map(|f| f.tgt.0).collect(),
                ]],
                degens: vec![c.id_one.iter().map(|f| f.0).collect()],
                comps: vec![CompRule::Table(
                    c.comp1.iter().map(|(&(f, g), &h)| ((f.0, g.0), h.0)).collect(),
                )],
            });
            index_pool.insert(MultiIndex::single(i as u8), k);
        }
    }

    let mut pair_cells: BTreeMap<(usize, usize), Vec<UQuintet>> = BTreeMap::new();
    let mut pair_certs: BTreeMap<usize, String> = BTreeMap::new();
    if bound >= 2 {
        for idx in dirs_index.subsets() {
            if idx.dim() != 2 {
                continue;
            }
            let (i, j) = (
                idx.direction_at(0) as usize,
                idx.direction_at(1) as usize,
            );
            let cells = u_quintet_list(seq, i, j)?;
            let cid: BTreeMap<UQuintet, u32> = cells
                .iter()
                .enumerate()
                .map(|(n, q)| (*q, n as u32))
                .collect();
            let li = &seq.levels[i];
            let lj = &seq.levels[j];
            let w = carrier_of_pair(seq.shape, i, j);
            let lw = &seq.levels[w];
            let frames_unique = {
                let mut seen = std::collections::BTreeSet::new();
                cells.iter().all(|q| seen.insert((q.r, q.s, q.u, q.v)))
            };
            let use_facewise = opts.facewise_pairs && frames_unique;
            let comps = if use_facewise {
                pair_certs.insert(
                    pools.len(),
                    "pasting two squares in the carrier level inhabits the composite frame, \
                     by the composition laws verified exhaustively on every level"
                        .to_string(),
                );
                vec![CompRule::Facewise; 2]
            } else {
                let mut comps = Vec::new();
                for pos in 0..2 {
                    let mut table = BTreeMap::new();
                    for (a, x) in cells.iter().enumerate() {
                        for (b, y) in cells.iter().enumerate() {
                            let share = match pos {
                                0 => x.v == y.u,
                                _ => x.s == y.r,
                            };
                            if !share {
                                continue;
                            }
                            let z = compose_u_quintets(seq, (i, j), pos, x, y)?;
                            let zid = *cid.get(&z).ok_or_else(|| {
                                KernelError::Malformed(
                                    "composite square not enumerated".into(),
                                )
                            })?;
                            table.insert((a as u32, b as u32), zid);
                        }
                    }
                    comps.push(CompRule::Table(table));
                }
                comps
            };
            let mut degens = Vec::with_capacity(2);
            for pos in 0..2 {
                let n = if pos == 0 {
                    lj.one_cells.len()
                } else {
                    li.one_cells.len()
                };
                let mut col = Vec::with_capacity(n);
                for f in 0..n as u32 {
                    let dq = degenerate_u_quintet(seq, (i, j), pos, OneId(f))?;
                    col.push(*cid.get(&dq).ok_or_else(|| {
                        KernelError::Malformed("degenerate square not enumerated".into())
                    })?);
                }
                degens.push(col);
            }
            let k = pools.len();
            pools.push(Pool {
                names: cells
                    .iter()
                    .map(|q| {
                        format!(
                            "q[{},{},{},{};{}]",
                            li.one_name(q.r),
                            li.one_name(q.s),
                            lj.one_name(q.u),
                            lj.one_name(q.v),
                            lw.two_name(q.cell)
                        )
                    })
                    .collect(),
                n_cells: cells.len() as u32,
                faces: vec![
                    [
                        cells.iter().map(|q| q.u.0).collect(),
                        cells.iter().map(|q| q.v.0).collect(),
                    ],
                    [
                        cells.iter().map(|q| q.r.0).collect(),
                        cells.iter().map(|q| q.s.0).collect(),
                    ],
                ],
                degens,
                comps,
            });
            index_pool.insert(idx.clone(), k);
            pair_cells.insert((i, j), cells);
        }
    }

    let mut m = TruncatedMultipleCategory {
        name: format!("GQ({})", seq.name),
        directions,
        dim_bound: bound.min(2),
        explicit_dim: bound.min(2),
        pools,
        index_pool,
        closure_certificates: pair_certs,
    };
    if bound <= 2 {
        m.dim_bound = bound;
        return Ok(m);
    }

    for idx in dirs_index.subsets() {
        if idx.dim() != 3 {
            continue;
        }
        let (i, j, k) = (
            idx.direction_at(0) as usize,
            idx.direction_at(1) as usize,
            idx.direction_at(2) as usize,
        );
        let w = carrier_of_triple(seq.shape, i, k);
        let lw = &seq.levels[w];
        // Push each boundary pool to the carrier once, so the relation
        // check per family is a plain cube check there.
        let mut pushed: Vec<Vec<Quintet>> = Vec::with_capacity(3);
        for (a, b) in [(j, k), (i, k), (i, j)] {
            let cells = &pair_cells[&(a, b)];
            let mut col = Vec::with_capacity(cells.len());
            for q in cells {
                col.push(quintet_at_level(seq, (a, b), q, w)?);
            }
            pushed.push(col);
        }
        let families = m.families_for_index(&idx, opts.materialize_budget)?;
        let mut cubes: Vec<FaceConsistentFamily> = Vec::new();
        for fam in families {
            let pc = QuintetCube {
                faces: [
                    pushed[0][fam.get(0, Sign::Minus) as usize],
                    pushed[0][fam.get(0, Sign::Plus) as usize],
                    pushed[1][fam.get(1, Sign::Minus) as usize],
                    pushed[1][fam.get(1, Sign::Plus) as usize],
                    pushed[2][fam.get(2, Sign::Minus) as usize],
                    pushed[2][fam.get(2, Sign::Plus) as usize],
                ],
            };
            if check_cube(lw, &pc)?.is_none() {
                cubes.push(fam);
            }
        }
        let mut faces3: Vec<[Vec<u32>; 2]> = vec![[Vec::new(), Vec::new()]; 3];
        for fam in &cubes {
            for p in 0..3 {
                for sign in Sign::BOTH {
                    faces3[p][sign.idx()].push(fam.get(p, sign));
                }
            }
        }
        let mut degens3: Vec<Vec<u32>> = Vec::with_capacity(3);
        for p in 0..3 {
            let bpool = m.pool_of(&m.boundary_index(&idx, p))?;
            let n = bpool.n_cells;
            let mut col = Vec::with_capacity(n as usize);
            for y in 0..n {
                let mut fam = vec![0u32; 6];
                for q in 0..3 {
                    for sign in Sign::BOTH {
                        let v = if q == p {
                            y
                        } else {
                            let qpool = m.pool_of(&m.boundary_index(&idx, q))?;
                            qpool.degens[shifted(p, q)]
                                [bpool.face(y, shifted(q, p), sign) as usize]
                        };
                        fam[2 * q + sign.idx()] = v;
                    }
                }
                let id = cubes
                    .binary_search(&FaceConsistentFamily(fam))
                    .map_err(|_| {
                        KernelError::Malformed("expected degenerate cube is missing".into())
                    })?;
                col.push(id as u32);
            }
            degens3.push(col);
        }
        let kp = m.pools.len();
        m.pools.push(Pool {
            names: Vec::new(),
            n_cells: cubes.len() as u32,
            faces: faces3,
            degens: degens3,
            comps: vec![CompRule::Facewise; 3],
        });
        m.closure_certificates.insert(
            kp,
            "pasting two commuting cubes yields a commuting cube in the carrier level, \
             by the interchange and associativity laws verified exhaustively on every level"
                .to_string(),
        );
        m.index_pool.insert(idx.clone(), kp);
    }
    m.dim_bound = 3;
    m.explicit_dim = 3;
    if bound == 3 {
        return Ok(m);
    }

    let mut out = dcosk(
        &m,
        3,
        bound,
        &CoskOptions {
            materialize_budget: opts.materialize_budget,
        },
    )?;
    out.name = format!("GQ({})", seq.name);
    Ok(out)
}

/// For a descending-link sequence, the comparison that pushes every cell
/// down to level 0, landing in the plain quintet construction over it.
///
/// `gq` must be `build_gq(seq, …)` and `q0` must be `build_q` of level 0
/// with at least the same explicit dimension.
pub fn forgetful_comparison(
    seq: &TwoFunctorSequence,
    gq: &TruncatedMultipleCategory,
    q0: &TruncatedMultipleCategory,
) -> Result<MultipleFunctorData> {
    if seq.shape != SequenceShape::Forgetful {
        return Err(KernelError::Malformed(
            "the level-0 comparison applies to descending-link sequences".into(),
        ));
    }
    let c0 = &seq.levels[0];
    let plain = quintet_list(c0);
    let plain_id: BTreeMap<Quintet, u32> = plain
        .iter()
        .enumerate()
        .map(|(n, q)| (*q, n as u32))
        .collect();
    let mut maps: BTreeMap<MultiIndex, Vec<u32>> = BTreeMap::new();
    let mut cube_fps: Option<Vec<Vec<u32>>> = None;
    let mut order: Vec<(&MultiIndex, &usize)> = gq.index_pool.iter().collect();
    order.sort_by_key(|(idx, _)| (idx.dim(), (*idx).clone()));
    for (idx, &k) in order {
        let pool = &gq.pools[k];
        let col: Vec<u32> = match idx.dim() {
            0 => (0..pool.n_cells).collect(),
            1 => {
                let i = idx.direction_at(0) as usize;
                let link = seq.link_between(0, i)?;
                (0..pool.n_cells)
                    .map(|c| link.on_one(OneId(c)).0)
                    .collect()
            }
            2 => {
                let (i, j) = (
                    idx.direction_at(0) as usize,
                    idx.direction_at(1) as usize,
                );
                let cells = u_quintet_list(seq, i, j)?;
                let mut col = Vec::with_capacity(cells.len());
                for q in &cells {
                    let img = quintet_at_level(seq, (i, j), q, 0)?;
                    col.push(*plain_id.get(&img).ok_or_else(|| {
                        KernelError::Malformed(
                            "pushed square is not a quintet of level 0".into(),
                        )
                    })?);
                }
                col
            }
            3 => {
                let fps = cube_fps.get_or_insert_with(|| {
                    let p3 = q0
                        .index_pool
                        .iter()
                        .find(|(i, _)| i.dim() == 3)
                        .map(|(_, &k)| k)
                        .expect("target has 3-cells");
                    let pool3 = &q0.pools[p3];
                    (0..pool3.n_cells).map(|c| pool3.fingerprint(c)).collect()
                });
                let mut face_maps = Vec::with_capacity(3);
                for p in 0..3 {
                    let bidx = gq.boundary_index(idx, p);
                    face_maps.push(maps.get(&bidx).cloned().ok_or_else(|| {
                        KernelError::Malformed(
                            "boundary maps must be built before cube maps".into(),
                        )
                    })?);
                }
                let mut col = Vec::with_capacity(pool.n_cells as usize);
                for c in 0..pool.n_cells {
                    let mut img = Vec::with_capacity(6);
                    for p in 0..3 {
                        for sign in Sign::BOTH {
                            img.push(face_maps[p][pool.face(c, p, sign) as usize]);
                        }
                    }
                    let id = fps.binary_search(&img).map_err(|_| {
                        KernelError::Malformed(
                            "pushed cube is not a cube of level 0".into(),
                        )
                    })?;
                    col.push(id as u32);
                }
                col
            }
            _ => {
                return Err(KernelError::Malformed(
                    "comparison maps cover explicit dimensions up to 3".into(),
                ))
            }
        };
        maps.insert(idx.clone(), col);
    }
    Ok(MultipleFunctorData {
        name: format!("{} -> level 0", gq.name),
        maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{collapse_to_point, fix3, sigma_two_z2};
    use crate::quintets::build_q;
    use crate::multicat::{
        coskeletal_dimension, terminal_multiple_category, validate_multiple_category,
        validate_multiple_functor,
    };
    use crate::quintets::{check_quintet_type, QuintetCube};

    #[test]
    fn identity_sequence_matches_plain_quintets() {
        let c = fix3();
        let seq = TwoFunctorSequence::identity(&c, 3, SequenceShape::Forgetful);
        let gq = build_gq(&seq, 3).unwrap();
        let q = build_q(&c, 3).unwrap();
        for (idx, &k) in &gq.index_pool {
            let qk = q.pool_of(idx).unwrap();
            assert_eq!(
                gq.pools[k].n_cells, qk.n_cells,
                "cell count differs at {idx}"
            );
        }
        let rep = validate_multiple_category(&gq);
        assert!(rep.passed(), "failures: {:?}", rep.failures());
        assert!(coskeletal_dimension(&gq).unwrap().value <= 3);
    }

    #[test]
    fn ascending_identity_sequence_agrees_too() {
        let c = sigma_two_z2();
        let seq = TwoFunctorSequence::identity(&c, 2, SequenceShape::Structural);
        let gq = build_gq(&seq, 3).unwrap();
        let q = build_q(&c, 2).unwrap();
        let pair = MultiIndex::new(vec![0, 2]);
        assert_eq!(
            gq.pool_of(&pair).unwrap().n_cells,
            q.pool_of(&MultiIndex::new(vec![0, 1])).unwrap().n_cells
        );
        let triple = MultiIndex::new(vec![0, 1, 2]);
        assert_eq!(gq.pool_of(&triple).unwrap().n_cells, 32);
        let rep = validate_multiple_category(&gq);
        assert!(rep.passed(), "failures: {:?}", rep.failures());
    }

    #[test]
    fn point_levels_give_the_terminal_structure() {
        let (point, _) = collapse_to_point(&fix3());
        let seq = TwoFunctorSequence::identity(&point, 2, SequenceShape::Forgetful);
        let gq = build_gq(&seq, 3).unwrap();
        let t = terminal_multiple_category(vec![0, 1, 2], 3);
        for (idx, &k) in &gq.index_pool {
            assert_eq!(gq.pools[k].n_cells, t.pool_of(idx).unwrap().n_cells);
        }
        assert!(validate_multiple_category(&gq).passed());
    }

    #[test]
    fn cube_checks_agree_with_the_plain_construction() {
        let c = sigma_two_z2();
        let seq = TwoFunctorSequence::identity(&c, 2, SequenceShape::Forgetful);
        let squares = u_quintet_list(&seq, 0, 1).unwrap();
        assert_eq!(squares.len(), 2);
        for a in 0..2usize {
            for b in 0..2usize {
                for c_ in 0..2usize {
                    let faces = [
                        squares[a], squares[b], squares[c_], squares[0], squares[0],
                        squares[0],
                    ];
                    let ucube = UCube { faces };
                    let plain = QuintetCube {
                        faces: faces.map(|q| crate::quintets::Quintet {
                            r: q.r,
                            s: q.s,
                            u: q.u,
                            v: q.v,
                            cell: q.cell,
                        }),
                    };
                    assert_eq!(
                        check_u_cube(&seq, (0, 1, 2), &ucube).unwrap(),
                        crate::quintets::check_cube(&c, &plain).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn level_zero_comparison_is_a_functor_of_quintet_type() {
        let c = fix3();
        let seq = TwoFunctorSequence::identity(&c, 2, SequenceShape::Forgetful);
        let gq = build_gq(&seq, 3).unwrap();
        let q = build_q(&c, 3).unwrap();
        let u = forgetful_comparison(&seq, &gq, &q).unwrap();
        let rep = validate_multiple_functor(&u, &gq, &q);
        assert!(rep.passed(), "failures: {:?}", rep.failures());
        assert_eq!(check_quintet_type(&gq, &u, &q).unwrap(), None);
    }
}
