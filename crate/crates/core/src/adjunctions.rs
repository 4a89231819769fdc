//! Adjunction chains, mates, and bundles over a 2-category, together with
//! the level sequences they generate.
//!
//! An adjunction `p ⊣ p⁺` is stored with explicit unit and counit, and a
//! chain alternates left and right adjoints:
//!
//! ```text
//!   u_0: X → Y,  u_1: Y → X,  u_2: X → Y, …   with  u_{k-1} ⊣ u_k.
//! ```
//!
//! A 2-cell between chains is determined by its component between the
//! first arrows; the higher components are iterated mates, contravariant
//! in the odd positions.  The chains of length `i` form a 2-category
//! `Adj_i`, and the levels `Adj_0, Adj_1, …` with the truncation links
//! form a descending sequence whose generalised quintets assemble the
//! chains of all lengths into one multiple category.  Bundles — tuples of
//! parallel arrows with repeat-last links — play the same role in the
//! ascending shape.

use std::collections::BTreeMap;

use crate::error::{KernelError, Result};
use crate::genquintets::GqOptions;
use crate::multicat::TruncatedMultipleCategory;
use crate::twocat::{
    FiniteTwoCategory, ObjId, OneCell, OneId, SequenceShape, StrictTwoFunctor, TwoCell,
    TwoFunctorSequence, TwoId,
};

/// An adjunction `left ⊣ right` with chosen unit and counit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct AdjunctionData {
    /// The left adjoint `p: X → Y`.
    pub left: OneId,
    /// The right adjoint `p⁺: Y → X`.
    pub right: OneId,
    /// `η: 1_X ⇒ p⁺p`.
    pub unit: TwoId,
    /// `ε: pp⁺ ⇒ 1_Y`.
    pub counit: TwoId,
}

/// Check the shape and both triangle identities of an adjunction.
pub fn validate_adjunction(c: &FiniteTwoCategory, a: &AdjunctionData) -> Result<()> {
    let x = c.src1(a.left);
    let y = c.tgt1(a.left);
    if c.src1(a.right) != y || c.tgt1(a.right) != x {
        return Err(KernelError::Malformed(format!(
            "right adjoint {} does not run opposite to {}",
            c.one_name(a.right),
            c.one_name(a.left)
        )));
    }
    let lr = c.compose1(a.left, a.right)?;
    let rl = c.compose1(a.right, a.left)?;
    if c.src2(a.unit) != c.id_one[x.0 as usize] || c.tgt2(a.unit) != lr {
        return Err(KernelError::Malformed(format!(
            "unit {} has the wrong boundary",
            c.two_name(a.unit)
        )));
    }
    if c.src2(a.counit) != rl || c.tgt2(a.counit) != c.id_one[y.0 as usize] {
        return Err(KernelError::Malformed(format!(
            "counit {} has the wrong boundary",
            c.two_name(a.counit)
        )));
    }
    let t1 = c.vcompose(c.whisk_l(a.left, a.unit)?, c.whisk_r(a.counit, a.left)?)?;
    if t1 != c.id_two[a.left.0 as usize] {
        return Err(KernelError::Malformed(format!(
            "triangle on the left adjoint fails for {} ⊣ {}",
            c.one_name(a.left),
            c.one_name(a.right)
        )));
    }
    let t2 = c.vcompose(c.whisk_r(a.unit, a.right)?, c.whisk_l(a.right, a.counit)?)?;
    if t2 != c.id_two[a.right.0 as usize] {
        return Err(KernelError::Malformed(format!(
            "triangle on the right adjoint fails for {} ⊣ {}",
            c.one_name(a.left),
            c.one_name(a.right)
        )));
    }
    Ok(())
}

/// All adjunctions of `c`, in lexicographic order of
/// `(left, right, unit, counit)`.
pub fn find_adjunctions(c: &FiniteTwoCategory) -> Result<Vec<AdjunctionData>> {
    let mut out = Vec::new();
    for left in (0..c.one_cells.len() as u32).map(OneId) {
        let x = c.src1(left);
        let y = c.tgt1(left);
        for right in (0..c.one_cells.len() as u32).map(OneId) {
            if c.src1(right) != y || c.tgt1(right) != x {
                continue;
            }
            let lr = c.compose1(left, right)?;
            let rl = c.compose1(right, left)?;
            for unit in c.hom2(c.id_one[x.0 as usize], lr) {
                for counit in c.hom2(rl, c.id_one[y.0 as usize]) {
                    let a = AdjunctionData {
                        left,
                        right,
                        unit,
                        counit,
                    };
                    if validate_adjunction(c, &a).is_ok() {
                        out.push(a);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The mate `ξ⁺: q⁺ ⇒ p⁺` of `ξ: p ⇒ q` across adjunctions
/// `a = (p ⊣ p⁺)` and `b = (q ⊣ q⁺)`.
pub fn mate(
    c: &FiniteTwoCategory,
    xi: TwoId,
    a: &AdjunctionData,
    b: &AdjunctionData,
) -> Result<TwoId> {
    if c.src2(xi) != a.left || c.tgt2(xi) != b.left {
        return Err(KernelError::Malformed(format!(
            "cell {} does not run from the left adjoint of the first adjunction to that of the second",
            c.two_name(xi)
        )));
    }
    let step1 = c.whisk_r(a.unit, b.right)?;
    let step2 = c.whisk_l(a.right, c.whisk_r(xi, b.right)?)?;
    let step3 = c.whisk_l(a.right, b.counit)?;
    c.vcompose(c.vcompose(step1, step2)?, step3)
}

/// The inverse transform: recover `ξ: p ⇒ q` from `ζ: q⁺ ⇒ p⁺`.
pub fn mate_back(
    c: &FiniteTwoCategory,
    zeta: TwoId,
    a: &AdjunctionData,
    b: &AdjunctionData,
) -> Result<TwoId> {
    if c.src2(zeta) != b.right || c.tgt2(zeta) != a.right {
        return Err(KernelError::Malformed(format!(
            "cell {} does not run between the right adjoints in the reverse direction",
            c.two_name(zeta)
        )));
    }
    let step1 = c.whisk_l(a.left, b.unit)?;
    let step2 = c.whisk_r(c.whisk_l(a.left, zeta)?, b.left)?;
    let step3 = c.whisk_r(a.counit, b.left)?;
    c.vcompose(c.vcompose(step1, step2)?, step3)
}

/// Compose adjunctions along a shared middle object: `inner = (p ⊣ p⁺)`
/// with `p: X → Y`, `outer = (q ⊣ q⁺)` with `q: Y → Z`, giving
/// `pq ⊣ q⁺p⁺` (diagrammatic order).
pub fn compose_adjunctions(
    c: &FiniteTwoCategory,
    inner: &AdjunctionData,
    outer: &AdjunctionData,
) -> Result<AdjunctionData> {
    let left = c.compose1(inner.left, outer.left)?;
    let right = c.compose1(outer.right, inner.right)?;
    let unit = c.vcompose(
        inner.unit,
        c.whisk_r(c.whisk_l(inner.right, outer.unit)?, inner.left)?,
    )?;
    let counit = c.vcompose(
        c.whisk_r(c.whisk_l(outer.left, inner.counit)?, outer.right)?,
        outer.counit,
    )?;
    Ok(AdjunctionData {
        left,
        right,
        unit,
        counit,
    })
}

/// A chain of adjoints: `arrows[k-1] ⊣ arrows[k]` via `adjs[k-1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AdjChain {
    pub arrows: Vec<OneId>,
    pub adjs: Vec<AdjunctionData>,
}

impl AdjChain {
    /// Number of adjunctions in the chain.
    pub fn length(&self) -> usize {
        self.adjs.len()
    }

    /// The chain starts where its first arrow does.
    pub fn src(&self, c: &FiniteTwoCategory) -> ObjId {
        c.src1(self.arrows[0])
    }

    pub fn tgt(&self, c: &FiniteTwoCategory) -> ObjId {
        c.tgt1(self.arrows[0])
    }
}

/// Check that a chain alternates correctly and all its adjunctions hold.
pub fn validate_chain(c: &FiniteTwoCategory, chain: &AdjChain) -> Result<()> {
    if chain.arrows.is_empty() || chain.arrows.len() != chain.adjs.len() + 1 {
        return Err(KernelError::Malformed(
            "a chain has one more arrow than it has adjunctions".into(),
        ));
    }
    for (k, adj) in chain.adjs.iter().enumerate() {
        if adj.left != chain.arrows[k] || adj.right != chain.arrows[k + 1] {
            return Err(KernelError::Malformed(format!(
                "adjunction {k} does not connect arrows {k} and {}",
                k + 1
            )));
        }
        validate_adjunction(c, adj)?;
    }
    Ok(())
}

/// The identity chain of the given length at an object.
pub fn identity_chain(c: &FiniteTwoCategory, x: ObjId, len: usize) -> AdjChain {
    let i = c.id_one[x.0 as usize];
    let e = c.id_two[i.0 as usize];
    AdjChain {
        arrows: vec![i; len + 1],
        adjs: vec![
            AdjunctionData {
                left: i,
                right: i,
                unit: e,
                counit: e,
            };
            len
        ],
    }
}

/// Compose chains end to end (diagrammatic: `x` then `y`).  Component `k`
/// is `x_k y_k` for even `k` and `y_k x_k` for odd `k`, and the connecting
/// adjunctions compose with the matching nesting.
pub fn compose_chains(
    c: &FiniteTwoCategory,
    x: &AdjChain,
    y: &AdjChain,
) -> Result<AdjChain> {
    if x.length() != y.length() {
        return Err(KernelError::Malformed(
            "chains of different lengths do not compose".into(),
        ));
    }
    let mut arrows = Vec::with_capacity(x.arrows.len());
    for k in 0..x.arrows.len() {
        arrows.push(if k % 2 == 0 {
            c.compose1(x.arrows[k], y.arrows[k])?
        } else {
            c.compose1(y.arrows[k], x.arrows[k])?
        });
    }
    let mut adjs = Vec::with_capacity(x.adjs.len());
    for k in 0..x.adjs.len() {
        adjs.push(if k % 2 == 0 {
            compose_adjunctions(c, &x.adjs[k], &y.adjs[k])?
        } else {
            compose_adjunctions(c, &y.adjs[k], &x.adjs[k])?
        });
    }
    Ok(AdjChain { arrows, adjs })
}

/// All valid chains of the given length, in extension order.
pub fn enumerate_chains(c: &FiniteTwoCategory, len: usize) -> Result<Vec<AdjChain>> {
    let adjunctions = find_adjunctions(c)?;
    let mut by_left: BTreeMap<OneId, Vec<AdjunctionData>> = BTreeMap::new();
    for a in &adjunctions {
        by_left.entry(a.left).or_default().push(*a);
    }
    let mut chains: Vec<AdjChain> = (0..c.one_cells.len() as u32)
        .map(|f| AdjChain {
            arrows: vec![OneId(f)],
            adjs: Vec::new(),
        })
        .collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for ch in &chains {
            let last = *ch.arrows.last().unwrap();
            if let Some(exts) = by_left.get(&last) {
                for adj in exts {
                    let mut arrows = ch.arrows.clone();
                    arrows.push(adj.right);
                    let mut adjs = ch.adjs.clone();
                    adjs.push(*adj);
                    next.push(AdjChain { arrows, adjs });
                }
            }
        }
        chains = next;
    }
    Ok(chains)
}

/// A 2-cell between parallel chains, with all components stored.  The
/// even components run source-to-target, the odd ones backwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTwoCell {
    pub src: AdjChain,
    pub tgt: AdjChain,
    pub components: Vec<TwoId>,
}

/// Extend a base component `φ_0: u_0 ⇒ v_0` to a full chain cell by
/// iterated mates.
pub fn chain_two_cell(
    c: &FiniteTwoCategory,
    u: &AdjChain,
    v: &AdjChain,
    phi0: TwoId,
) -> Result<ChainTwoCell> {
    if u.length() != v.length() {
        return Err(KernelError::Malformed(
            "chain cells need chains of equal length".into(),
        ));
    }
    if c.src2(phi0) != u.arrows[0] || c.tgt2(phi0) != v.arrows[0] {
        return Err(KernelError::Malformed(format!(
            "base component {} does not run between the first arrows",
            c.two_name(phi0)
        )));
    }
    let mut components = vec![phi0];
    for k in 0..u.length() {
        let (a, b) = if k % 2 == 0 {
            (&u.adjs[k], &v.adjs[k])
        } else {
            (&v.adjs[k], &u.adjs[k])
        };
        let next = mate(c, components[k], a, b)?;
        components.push(next);
    }
    Ok(ChainTwoCell {
        src: u.clone(),
        tgt: v.clone(),
        components,
    })
}

/// Vertical composition of chain cells, componentwise with the odd
/// components composed in the reverse order.
pub fn compose_chain_cells(
    c: &FiniteTwoCategory,
    x: &ChainTwoCell,
    y: &ChainTwoCell,
) -> Result<ChainTwoCell> {
    if x.tgt != y.src {
        return Err(KernelError::NotComposable {
            lhs: "first chain cell".into(),
            rhs: "second chain cell".into(),
            dir: 0,
        });
    }
    let mut components = Vec::with_capacity(x.components.len());
    for k in 0..x.components.len() {
        components.push(if k % 2 == 0 {
            c.vcompose(x.components[k], y.components[k])?
        } else {
            c.vcompose(y.components[k], x.components[k])?
        });
    }
    Ok(ChainTwoCell {
        src: x.src.clone(),
        tgt: y.tgt.clone(),
        components,
    })
}

/// Whisker a chain cell by chains on both sides (diagrammatic:
/// `r`, then the cell, then `s`).  Odd components swap the two whiskers.
pub fn whisker_chain_cell(
    c: &FiniteTwoCategory,
    r: &AdjChain,
    x: &ChainTwoCell,
    s: &AdjChain,
) -> Result<ChainTwoCell> {
    let mut components = Vec::with_capacity(x.components.len());
    for k in 0..x.components.len() {
        components.push(if k % 2 == 0 {
            c.whisk_l(s.arrows[k], c.whisk_r(x.components[k], r.arrows[k])?)?
        } else {
            c.whisk_l(r.arrows[k], c.whisk_r(x.components[k], s.arrows[k])?)?
        });
    }
    Ok(ChainTwoCell {
        src: compose_chains(c, &compose_chains(c, r, &x.src)?, s)?,
        tgt: compose_chains(c, &compose_chains(c, r, &x.tgt)?, s)?,
        components,
    })
}

/// Extend a square over a 0-chain and two 1-chains to the opposite
/// square over the right adjoints: given `φ: fv ⇒ ug` (diagrammatic
/// boundaries `comp1(f, v.left) ⇒ comp1(u.left, g)`), produce
/// `φ⁺: comp1(u.right, f) ⇒ comp1(g, v.right)`.
pub fn mate_extension(
    c: &FiniteTwoCategory,
    f: OneId,
    g: OneId,
    u: &AdjunctionData,
    v: &AdjunctionData,
    phi: TwoId,
) -> Result<TwoId> {
    let step1 = c.whisk_r(v.unit, c.compose1(u.right, f)?)?;
    let step2 = c.whisk_r(c.whisk_l(v.right, phi)?, u.right)?;
    let step3 = c.whisk_l(c.compose1(g, v.right)?, u.counit)?;
    c.vcompose(c.vcompose(step1, step2)?, step3)
}

/// The inverse of [`mate_extension`]: recover the base square from the
/// opposite one.
pub fn recover_base(
    c: &FiniteTwoCategory,
    f: OneId,
    g: OneId,
    u: &AdjunctionData,
    v: &AdjunctionData,
    chi: TwoId,
) -> Result<TwoId> {
    let step1 = c.whisk_l(c.compose1(f, v.left)?, u.unit)?;
    let step2 = c.whisk_l(v.left, c.whisk_r(chi, u.left)?)?;
    let step3 = c.whisk_r(v.counit, c.compose1(u.left, g)?)?;
    c.vcompose(c.vcompose(step1, step2)?, step3)
}

/// A chain level: the 2-category of chains of one fixed length, plus the
/// chain and cell data behind its cell indices.
#[derive(Debug, Clone)]
pub struct AdjLevel {
    pub cat: FiniteTwoCategory,
    pub chains: Vec<AdjChain>,
    /// Per 2-cell: source chain, target chain, base component.
    pub cells: Vec<(u32, u32, TwoId)>,
}

fn chain_name(c: &FiniteTwoCategory, ch: &AdjChain) -> String {
    let arrows: Vec<&str> = ch.arrows.iter().map(|&f| c.one_name(f)).collect();
    if ch.adjs.is_empty() {
        format!("⟨{}⟩", arrows.join(","))
    } else {
        let data: Vec<String> = ch
            .adjs
            .iter()
            .map(|a| format!("{}/{}", c.two_name(a.unit), c.two_name(a.counit)))
            .collect();
        format!("⟨{}|{}⟩", arrows.join(","), data.join(";"))
    }
}

/// Build the 2-category of chains of length `len` over `c`.
pub fn build_adj_level(c: &FiniteTwoCategory, len: usize) -> Result<AdjLevel> {
    let chains = enumerate_chains(c, len)?;
    let chain_id: BTreeMap<AdjChain, u32> = chains
        .iter()
        .enumerate()
        .map(|(n, ch)| (ch.clone(), n as u32))
        .collect();
    let lookup = |ch: &AdjChain| -> Result<OneId> {
        chain_id
            .get(ch)
            .map(|&n| OneId(n))
            .ok_or_else(|| KernelError::Malformed("composite chain not enumerated".into()))
    };

    let one_cells: Vec<OneCell> = chains
        .iter()
        .map(|ch| OneCell {
            name: chain_name(c, ch),
            src: ch.src(c),
            tgt: ch.tgt(c),
        })
        .collect();
    let id_one: Vec<OneId> = (0..c.objects.len() as u32)
        .map(|x| lookup(&identity_chain(c, ObjId(x), len)))
        .collect::<Result<_>>()?;

    let mut comp1 = BTreeMap::new();
    for (a, ch_a) in chains.iter().enumerate() {
        for (b, ch_b) in chains.iter().enumerate() {
            if ch_a.tgt(c) != ch_b.src(c) {
                continue;
            }
            let z = compose_chains(c, ch_a, ch_b)?;
            comp1.insert((OneId(a as u32), OneId(b as u32)), lookup(&z)?);
        }
    }

    let mut cells: Vec<(u32, u32, TwoId)> = Vec::new();
    let mut two_cells: Vec<TwoCell> = Vec::new();
    for (a, ch_a) in chains.iter().enumerate() {
        for (b, ch_b) in chains.iter().enumerate() {
            if ch_a.src(c) != ch_b.src(c) || ch_a.tgt(c) != ch_b.tgt(c) {
                continue;
            }
            for phi0 in c.hom2(ch_a.arrows[0], ch_b.arrows[0]) {
                cells.push((a as u32, b as u32, phi0));
                two_cells.push(TwoCell {
                    name: format!(
                        "[{}:{}⇒{}]",
                        c.two_name(phi0),
                        one_cells[a].name,
                        one_cells[b].name
                    ),
                    src: OneId(a as u32),
                    tgt: OneId(b as u32),
                });
            }
        }
    }
    let cell_id: BTreeMap<(u32, u32, TwoId), u32> = cells
        .iter()
        .enumerate()
        .map(|(n, &t)| (t, n as u32))
        .collect();
    let cl = |a: u32, b: u32, phi: TwoId| -> Result<TwoId> {
        cell_id
            .get(&(a, b, phi))
            .map(|&n| TwoId(n))
            .ok_or_else(|| KernelError::Malformed("chain cell not enumerated".into()))
    };

    let id_two: Vec<TwoId> = chains
        .iter()
        .enumerate()
        .map(|(a, ch)| cl(a as u32, a as u32, c.id_two[ch.arrows[0].0 as usize]))
        .collect::<Result<_>>()?;

    let mut vcomp = BTreeMap::new();
    for (x, &(a, b, phi)) in cells.iter().enumerate() {
        for (y, &(b2, d, psi)) in cells.iter().enumerate() {
            if b != b2 {
                continue;
            }
            let z = cl(a, d, c.vcompose(phi, psi)?)?;
            vcomp.insert((TwoId(x as u32), TwoId(y as u32)), z);
        }
    }
    let mut whisker_l = BTreeMap::new();
    let mut whisker_r = BTreeMap::new();
    for (s, ch_s) in chains.iter().enumerate() {
        for (x, &(a, b, phi)) in cells.iter().enumerate() {
            // post-whisker: cell boundary chains end where s starts
            if chains[a as usize].tgt(c) == ch_s.src(c) {
                let za = lookup(&compose_chains(c, &chains[a as usize], ch_s)?)?;
                let zb = lookup(&compose_chains(c, &chains[b as usize], ch_s)?)?;
                let z = cl(za.0, zb.0, c.whisk_l(ch_s.arrows[0], phi)?)?;
                whisker_l.insert((OneId(s as u32), TwoId(x as u32)), z);
            }
            // pre-whisker: s ends where the cell boundary chains start
            if ch_s.tgt(c) == chains[a as usize].src(c) {
                let za = lookup(&compose_chains(c, ch_s, &chains[a as usize])?)?;
                let zb = lookup(&compose_chains(c, ch_s, &chains[b as usize])?)?;
                let z = cl(za.0, zb.0, c.whisk_r(phi, ch_s.arrows[0])?)?;
                whisker_r.insert((TwoId(x as u32), OneId(s as u32)), z);
            }
        }
    }

    Ok(AdjLevel {
        cat: FiniteTwoCategory {
            name: format!("Adj_{len}({})", c.name),
            objects: c.objects.clone(),
            one_cells,
            two_cells,
            id_one,
            id_two,
            comp1,
            vcomp,
            whisker_l,
            whisker_r,
        },
        chains,
        cells,
    })
}

/// The descending sequence `Adj_0, Adj_1, …, Adj_max` with truncation
/// links, plus the level data.
pub fn adj_sequence(
    c: &FiniteTwoCategory,
    max_len: usize,
) -> Result<(TwoFunctorSequence, Vec<AdjLevel>)> {
    let levels: Vec<AdjLevel> = (0..=max_len)
        .map(|i| build_adj_level(c, i))
        .collect::<Result<_>>()?;
    let mut links = Vec::with_capacity(max_len);
    for i in 0..max_len {
        let hi = &levels[i + 1];
        let lo = &levels[i];
        let lo_chain: BTreeMap<&AdjChain, u32> = lo
            .chains
            .iter()
            .enumerate()
            .map(|(n, ch)| (ch, n as u32))
            .collect();
        let lo_cell: BTreeMap<(u32, u32, TwoId), u32> = lo
            .cells
            .iter()
            .enumerate()
            .map(|(n, &t)| (t, n as u32))
            .collect();
        let mut one_map = Vec::with_capacity(hi.chains.len());
        let mut trunc_ids = Vec::with_capacity(hi.chains.len());
        for ch in &hi.chains {
            let t = AdjChain {
                arrows: ch.arrows[..ch.arrows.len() - 1].to_vec(),
                adjs: ch.adjs[..ch.adjs.len() - 1].to_vec(),
            };
            let id = *lo_chain.get(&t).ok_or_else(|| {
                KernelError::Malformed("truncated chain not enumerated".into())
            })?;
            one_map.push(OneId(id));
            trunc_ids.push(id);
        }
        let mut two_map = Vec::with_capacity(hi.cells.len());
        for &(a, b, phi0) in &hi.cells {
            let id = *lo_cell
                .get(&(trunc_ids[a as usize], trunc_ids[b as usize], phi0))
                .ok_or_else(|| {
                    KernelError::Malformed("truncated chain cell not enumerated".into())
                })?;
            two_map.push(TwoId(id));
        }
        links.push(StrictTwoFunctor {
            name: format!("trunc_{}", i + 1),
            ob_map: (0..c.objects.len() as u32).map(ObjId).collect(),
            one_map,
            two_map,
        });
    }
    let seq = TwoFunctorSequence {
        name: format!("Adj({})", c.name),
        levels: levels.iter().map(|l| l.cat.clone()).collect(),
        links,
        shape: SequenceShape::Forgetful,
    };
    Ok((seq, levels))
}

/// The multiple category of adjunction chains up to the given length.
pub fn build_adj(
    c: &FiniteTwoCategory,
    max_len: usize,
    up_to: usize,
) -> Result<TruncatedMultipleCategory> {
    build_adj_with(c, max_len, up_to, &GqOptions::default())
}

/// [`build_adj`] with explicit budgets.
pub fn build_adj_with(
    c: &FiniteTwoCategory,
    max_len: usize,
    up_to: usize,
    opts: &GqOptions,
) -> Result<TruncatedMultipleCategory> {
    let (seq, _) = adj_sequence(c, max_len)?;
    let mut m = crate::genquintets::build_gq_with(&seq, up_to, opts)?;
    m.name = format!("Adj({})", c.name);
    Ok(m)
}

/// A bundle level: the 2-category of `(i+1)`-tuples of parallel arrows,
/// with componentwise cells and operations.
#[derive(Debug, Clone)]
pub struct BundleLevel {
    pub cat: FiniteTwoCategory,
    pub arrows: Vec<Vec<OneId>>,
    /// Per 2-cell: source tuple, target tuple, component cells.
    pub cells: Vec<(u32, u32, Vec<TwoId>)>,
}

/// Build the 2-category of `(len+1)`-tuples of parallel arrows of `c`.
pub fn bundle_level(c: &FiniteTwoCategory, len: usize) -> Result<BundleLevel> {
    let mut arrows: Vec<Vec<OneId>> = (0..c.one_cells.len() as u32)
        .map(|f| vec![OneId(f)])
        .collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for t in &arrows {
            let head = t[0];
            for g in (0..c.one_cells.len() as u32).map(OneId) {
                if c.src1(g) == c.src1(head) && c.tgt1(g) == c.tgt1(head) {
                    let mut ext = t.clone();
                    ext.push(g);
                    next.push(ext);
                }
            }
        }
        arrows = next;
    }
    let arrow_id: BTreeMap<&Vec<OneId>, u32> = arrows
        .iter()
        .enumerate()
        .map(|(n, t)| (t, n as u32))
        .collect();
    let tuple_name = |t: &[OneId]| -> String {
        let parts: Vec<&str> = t.iter().map(|&f| c.one_name(f)).collect();
        format!("({})", parts.join(","))
    };
    let one_cells: Vec<OneCell> = arrows
        .iter()
        .map(|t| OneCell {
            name: tuple_name(t),
            src: c.src1(t[0]),
            tgt: c.tgt1(t[0]),
        })
        .collect();
    let id_one: Vec<OneId> = (0..c.objects.len())
        .map(|x| {
            let t = vec![c.id_one[x]; len + 1];
            OneId(arrow_id[&t])
        })
        .collect();
    let mut comp1 = BTreeMap::new();
    for (a, ta) in arrows.iter().enumerate() {
        for (b, tb) in arrows.iter().enumerate() {
            if c.tgt1(ta[0]) != c.src1(tb[0]) {
                continue;
            }
            let z: Vec<OneId> = ta
                .iter()
                .zip(tb)
                .map(|(&f, &g)| c.compose1(f, g))
                .collect::<Result<_>>()?;
            comp1.insert((OneId(a as u32), OneId(b as u32)), OneId(arrow_id[&z]));
        }
    }

    let mut cells: Vec<(u32, u32, Vec<TwoId>)> = Vec::new();
    let mut two_cells: Vec<TwoCell> = Vec::new();
    for (a, ta) in arrows.iter().enumerate() {
        for (b, tb) in arrows.iter().enumerate() {
            if c.src1(ta[0]) != c.src1(tb[0]) || c.tgt1(ta[0]) != c.tgt1(tb[0]) {
                continue;
            }
            let choices: Vec<Vec<TwoId>> = ta
                .iter()
                .zip(tb)
                .map(|(&f, &g)| c.hom2(f, g))
                .collect();
            if choices.iter().any(|v| v.is_empty()) {
                continue;
            }
            let mut pick = vec![0usize; choices.len()];
            loop {
                let comp: Vec<TwoId> =
                    pick.iter().zip(&choices).map(|(&i, v)| v[i]).collect();
                let names: Vec<&str> = comp.iter().map(|&x| c.two_name(x)).collect();
                cells.push((a as u32, b as u32, comp));
                two_cells.push(TwoCell {
                    name: format!("({})", names.join(",")),
                    src: OneId(a as u32),
                    tgt: OneId(b as u32),
                });
                let mut h = 0;
                loop {
                    if h == pick.len() {
                        break;
                    }
                    pick[h] += 1;
                    if pick[h] < choices[h].len() {
                        break;
                    }
                    pick[h] = 0;
                    h += 1;
                }
                if h == pick.len() {
                    break;
                }
            }
        }
    }
    let cell_id: BTreeMap<(u32, u32, &Vec<TwoId>), u32> = cells
        .iter()
        .enumerate()
        .map(|(n, (a, b, v))| ((*a, *b, v), n as u32))
        .collect();
    let cl = |a: u32, b: u32, v: &Vec<TwoId>| -> Result<TwoId> {
        cell_id
            .get(&(a, b, v))
            .map(|&n| TwoId(n))
            .ok_or_else(|| KernelError::Malformed("componentwise cell not enumerated".into()))
    };
    let id_two: Vec<TwoId> = arrows
        .iter()
        .enumerate()
        .map(|(a, t)| {
            let v: Vec<TwoId> = t.iter().map(|&f| c.id_two[f.0 as usize]).collect();
            cl(a as u32, a as u32, &v)
        })
        .collect::<Result<_>>()?;
    let mut vcomp = BTreeMap::new();
    for (x, (a, b, phi)) in cells.iter().enumerate() {
        for (y, (b2, d, psi)) in cells.iter().enumerate() {
            if b != b2 {
                continue;
            }
            let v: Vec<TwoId> = phi
                .iter()
                .zip(psi)
                .map(|(&p, &q)| c.vcompose(p, q))
                .collect::<Result<_>>()?;
            vcomp.insert((TwoId(x as u32), TwoId(y as u32)), cl(*a, *d, &v)?);
        }
    }
    let mut whisker_l = BTreeMap::new();
    let mut whisker_r = BTreeMap::new();
    for (s, ts) in arrows.iter().enumerate() {
        for (x, (a, b, phi)) in cells.iter().enumerate() {
            if c.tgt1(arrows[*a as usize][0]) == c.src1(ts[0]) {
                let za = comp1[&(OneId(*a), OneId(s as u32))];
                let zb = comp1[&(OneId(*b), OneId(s as u32))];
                let v: Vec<TwoId> = phi
                    .iter()
                    .zip(ts)
                    .map(|(&p, &w)| c.whisk_l(w, p))
                    .collect::<Result<_>>()?;
                whisker_l.insert((OneId(s as u32), TwoId(x as u32)), cl(za.0, zb.0, &v)?);
            }
            if c.tgt1(ts[0]) == c.src1(arrows[*a as usize][0]) {
                let za = comp1[&(OneId(s as u32), OneId(*a))];
                let zb = comp1[&(OneId(s as u32), OneId(*b))];
                let v: Vec<TwoId> = phi
                    .iter()
                    .zip(ts)
                    .map(|(&p, &w)| c.whisk_r(p, w))
                    .collect::<Result<_>>()?;
                whisker_r.insert((TwoId(x as u32), OneId(s as u32)), cl(za.0, zb.0, &v)?);
            }
        }
    }
    Ok(BundleLevel {
        cat: FiniteTwoCategory {
            name: format!("Bnd_{len}({})", c.name),
            objects: c.objects.clone(),
            one_cells,
            two_cells,
            id_one,
            id_two,
            comp1,
            vcomp,
            whisker_l,
            whisker_r,
        },
        arrows,
        cells,
    })
}

/// The ascending sequence of bundle levels with repeat-last links.
pub fn bnd_sequence(
    c: &FiniteTwoCategory,
    depth: usize,
) -> Result<(TwoFunctorSequence, Vec<BundleLevel>)> {
    let levels: Vec<BundleLevel> = (0..=depth)
        .map(|i| bundle_level(c, i))
        .collect::<Result<_>>()?;
    let mut links = Vec::with_capacity(depth);
    for i in 0..depth {
        let lo = &levels[i];
        let hi = &levels[i + 1];
        let hi_arrow: BTreeMap<&Vec<OneId>, u32> = hi
            .arrows
            .iter()
            .enumerate()
            .map(|(n, t)| (t, n as u32))
            .collect();
        let hi_cell: BTreeMap<(u32, u32, &Vec<TwoId>), u32> = hi
            .cells
            .iter()
            .enumerate()
            .map(|(n, (a, b, v))| ((*a, *b, v), n as u32))
            .collect();
        let mut one_map = Vec::with_capacity(lo.arrows.len());
        for t in &lo.arrows {
            let mut ext = t.clone();
            ext.push(*t.last().unwrap());
            one_map.push(OneId(*hi_arrow.get(&ext).ok_or_else(|| {
                KernelError::Malformed("repeated tuple not enumerated".into())
            })?));
        }
        let mut two_map = Vec::with_capacity(lo.cells.len());
        for (a, b, v) in &lo.cells {
            let mut ext = v.clone();
            ext.push(*v.last().unwrap());
            let key = (one_map[*a as usize].0, one_map[*b as usize].0, &ext);
            two_map.push(TwoId(*hi_cell.get(&key).ok_or_else(|| {
                KernelError::Malformed("repeated componentwise cell not enumerated".into())
            })?));
        }
        links.push(StrictTwoFunctor {
            name: format!("repeat_{i}"),
            ob_map: (0..c.objects.len() as u32).map(ObjId).collect(),
            one_map,
            two_map,
        });
    }
    let seq = TwoFunctorSequence {
        name: format!("Bnd({})", c.name),
        levels: levels.iter().map(|l| l.cat.clone()).collect(),
        links,
        shape: SequenceShape::Structural,
    };
    Ok((seq, levels))
}

/// The multiple category of bundles up to the given depth.
pub fn build_bnd(
    c: &FiniteTwoCategory,
    depth: usize,
    up_to: usize,
) -> Result<TruncatedMultipleCategory> {
    build_bnd_with(c, depth, up_to, &GqOptions::default())
}

/// [`build_bnd`] with explicit budgets.
pub fn build_bnd_with(
    c: &FiniteTwoCategory,
    depth: usize,
    up_to: usize,
    opts: &GqOptions,
) -> Result<TruncatedMultipleCategory> {
    let (seq, _) = bnd_sequence(c, depth)?;
    let mut m = crate::genquintets::build_gq_with(&seq, up_to, opts)?;
    m.name = format!("Bnd({})", c.name);
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fix1, fix3, one_by_name, sigma_two_z2};
    use crate::twocat::validate_two_category;

    #[test]
    fn the_poset_map_fixture_has_five_adjunctions() {
        let c = fix1();
        let adjs = find_adjunctions(&c).unwrap();
        let pairs: Vec<(String, String)> = adjs
            .iter()
            .map(|a| (c.one_name(a.left).to_string(), c.one_name(a.right).to_string()))
            .collect();
        assert_eq!(adjs.len(), 5);
        for (l, r) in [("i1", "i1"), ("c0", "t"), ("t", "c1"), ("k0", "k1"), ("i2", "i2")] {
            assert!(
                pairs.contains(&(l.to_string(), r.to_string())),
                "missing {l} ⊣ {r} in {pairs:?}"
            );
        }
    }

    #[test]
    fn units_and_counits_must_match_for_the_group_fixture() {
        let c = sigma_two_z2();
        let adjs = find_adjunctions(&c).unwrap();
        // The single arrow is self-adjoint; the triangle forces the
        // counit to cancel the unit, so exactly the matching choices work.
        assert_eq!(adjs.len(), 2);
        for a in &adjs {
            assert_eq!(a.unit, a.counit);
        }
    }

    #[test]
    fn double_mates_are_the_identity() {
        for c in [fix1(), sigma_two_z2(), fix3()] {
            let adjs = find_adjunctions(&c).unwrap();
            for a in &adjs {
                for b in &adjs {
                    for xi in c.hom2(a.left, b.left) {
                        let m = mate(&c, xi, a, b).unwrap();
                        assert_eq!(mate_back(&c, m, a, b).unwrap(), xi);
                    }
                    for zeta in c.hom2(b.right, a.right) {
                        let m = mate_back(&c, zeta, a, b).unwrap();
                        assert_eq!(mate(&c, m, a, b).unwrap(), zeta);
                    }
                }
            }
        }
    }

    #[test]
    fn composed_adjunctions_still_satisfy_the_triangles() {
        for c in [fix1(), sigma_two_z2()] {
            let adjs = find_adjunctions(&c).unwrap();
            for inner in &adjs {
                for outer in &adjs {
                    if c.tgt1(inner.left) != c.src1(outer.left) {
                        continue;
                    }
                    let z = compose_adjunctions(&c, inner, outer).unwrap();
                    validate_adjunction(&c, &z).unwrap();
                }
            }
        }
    }

    #[test]
    fn chain_levels_are_two_categories_with_frozen_sizes() {
        let c = fix1();
        let l1 = build_adj_level(&c, 1).unwrap();
        assert_eq!(l1.chains.len(), 5);
        assert_eq!(l1.cells.len(), 6);
        let rep = validate_two_category(&l1.cat);
        assert!(rep.passed(), "failures: {:?}", rep.failures());
        let l2 = build_adj_level(&c, 2).unwrap();
        assert_eq!(l2.chains.len(), 3);
        assert_eq!(l2.cells.len(), 3);
        assert!(validate_two_category(&l2.cat).passed());
        // c1 and k1 have no right adjoints, so no chain passes through
        // them before its final position.
        let stuck = [one_by_name(&c, "c1"), one_by_name(&c, "k1")];
        for ch in &l2.chains {
            for &f in &ch.arrows[..ch.arrows.len() - 1] {
                assert!(!stuck.contains(&f), "chain continues past a dead end");
            }
        }
    }

    #[test]
    fn chain_cell_composition_swaps_odd_components() {
        for (c, len) in [(fix1(), 2), (sigma_two_z2(), 2), (fix3(), 2)] {
            let chains = enumerate_chains(&c, len).unwrap();
            for u in &chains {
                for v in &chains {
                    if u.src(&c) != v.src(&c) || u.tgt(&c) != v.tgt(&c) {
                        continue;
                    }
                    for w in &chains {
                        if v.src(&c) != w.src(&c) || v.tgt(&c) != w.tgt(&c) {
                            continue;
                        }
                        for phi0 in c.hom2(u.arrows[0], v.arrows[0]) {
                            for psi0 in c.hom2(v.arrows[0], w.arrows[0]) {
                                let x = chain_two_cell(&c, u, v, phi0).unwrap();
                                let y = chain_two_cell(&c, v, w, psi0).unwrap();
                                let z = compose_chain_cells(&c, &x, &y).unwrap();
                                let direct = chain_two_cell(
                                    &c,
                                    u,
                                    w,
                                    c.vcompose(phi0, psi0).unwrap(),
                                )
                                .unwrap();
                                assert_eq!(z.components, direct.components);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chain_cell_whiskers_swap_odd_components() {
        for (c, len) in [(fix1(), 2), (sigma_two_z2(), 2)] {
            let chains = enumerate_chains(&c, len).unwrap();
            for r in &chains {
                for u in &chains {
                    if r.tgt(&c) != u.src(&c) {
                        continue;
                    }
                    for v in &chains {
                        if v.src(&c) != u.src(&c) || v.tgt(&c) != u.tgt(&c) {
                            continue;
                        }
                        for s in &chains {
                            if u.tgt(&c) != s.src(&c) {
                                continue;
                            }
                            for phi0 in c.hom2(u.arrows[0], v.arrows[0]) {
                                let x = chain_two_cell(&c, u, v, phi0).unwrap();
                                let w = whisker_chain_cell(&c, r, &x, s).unwrap();
                                let base = c
                                    .whisk_l(
                                        s.arrows[0],
                                        c.whisk_r(phi0, r.arrows[0]).unwrap(),
                                    )
                                    .unwrap();
                                let direct =
                                    chain_two_cell(&c, &w.src, &w.tgt, base).unwrap();
                                assert_eq!(w.components, direct.components);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn opposite_squares_extend_uniquely() {
        let c = fix1();
        let adjs = find_adjunctions(&c).unwrap();
        let mut seen = 0u32;
        for u in &adjs {
            for v in &adjs {
                for f in (0..c.one_cells.len() as u32).map(OneId) {
                    if c.src1(f) != c.src1(u.left) || c.tgt1(f) != c.src1(v.left) {
                        continue;
                    }
                    for g in (0..c.one_cells.len() as u32).map(OneId) {
                        if c.src1(g) != c.tgt1(u.left) || c.tgt1(g) != c.tgt1(v.left) {
                            continue;
                        }
                        let src = c.compose1(f, v.left).unwrap();
                        let tgt = c.compose1(u.left, g).unwrap();
                        for phi in c.hom2(src, tgt) {
                            let ext = mate_extension(&c, f, g, u, v, phi).unwrap();
                            let candidates: Vec<TwoId> = c
                                .hom2(
                                    c.compose1(u.right, f).unwrap(),
                                    c.compose1(g, v.right).unwrap(),
                                )
                                .into_iter()
                                .filter(|&chi| {
                                    recover_base(&c, f, g, u, v, chi).unwrap() == phi
                                })
                                .collect();
                            assert_eq!(candidates, vec![ext]);
                            seen += 1;
                        }
                    }
                }
            }
        }
        assert!(seen > 20, "only {seen} squares exercised");
    }

    #[test]
    fn truncation_links_form_a_valid_sequence() {
        let (seq, levels) = adj_sequence(&fix1(), 2).unwrap();
        assert_eq!(levels[0].chains.len(), 7);
        let rep = seq.validate();
        assert!(rep.passed(), "failures: {:?}", rep.failures());
    }

    #[test]
    fn bundle_levels_have_frozen_sizes_and_validate() {
        let c = fix1();
        let l1 = bundle_level(&c, 1).unwrap();
        assert_eq!(l1.arrows.len(), 15);
        assert_eq!(l1.cells.len(), 47);
        assert!(validate_two_category(&l1.cat).passed());
        let l2 = bundle_level(&c, 2).unwrap();
        assert_eq!(l2.arrows.len(), 37);
        assert_eq!(l2.cells.len(), 245);
        assert!(validate_two_category(&l2.cat).passed());
        let (seq, _) = bnd_sequence(&c, 2).unwrap();
        assert!(seq.validate().passed());
    }
}
