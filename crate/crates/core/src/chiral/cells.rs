//! Higher cells between morphisms of mixed laxity: squares bounded by two
//! laxity classes, their two compositions, maps of such squares, and
//! commuting cubes bounded by three laxity classes.
//!
//! A square has two sides of laxity class `p` and two of class `q > p`,
//! and a transversal component at every cube; the components must be
//! natural, compatible with faces, and cohere with the comparison arrows
//! of the four sides — the shape of that coherence changes with the
//! position of the direction relative to `p` and `q`.

use std::collections::{BTreeMap, BTreeSet};

use super::morphisms::{
    compose_pmorphisms, identity_pmorphism, is_identity_pmorphism, is_strict_pmorphism,
    pmorphism_content_eq, PMorphism,
};
use super::*;
use crate::report::{CheckMethod, ValidationReport, MAX_WITNESSES};

/// A square bounded by laxity classes `p < q`: sides `r, s` of class `p`,
/// sides `u, v` of class `q` (named into a shared morphism pool), and a
/// transversal arrow `φ(x) : V(R(x)) → S(U(x))` for every cube.
#[derive(Clone, Debug)]
pub struct PQCube {
    pub name: String,
    pub p: u8,
    pub q: u8,
    pub r: String,
    pub s: String,
    pub u: String,
    pub v: String,
    pub components: BTreeMap<MultiIndex, Vec<u32>>,
}

/// The two compositions of squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubeAxis {
    /// Side-by-side along the class-`p` boundary (gluing `v` to `u`).
    AlongP,
    /// Stacked along the class-`q` boundary (gluing `s` to `r`).
    AlongQ,
}

/// Equality of squares up to renaming the square itself (side names and
/// all components must agree).
pub fn pqcube_content_eq(x: &PQCube, y: &PQCube) -> bool {
    x.p == y.p
        && x.q == y.q
        && x.r == y.r
        && x.s == y.s
        && x.u == y.u
        && x.v == y.v
        && x.components == y.components
}

fn mor<'p>(pool: &'p BTreeMap<String, PMorphism>, name: &str) -> Result<&'p PMorphism> {
    pool.get(name).ok_or_else(|| KernelError::UnknownId {
        kind: "morphism".into(),
        id: name.into(),
    })
}

struct Wit(Vec<String>);

impl Wit {
    fn new() -> Wit {
        Wit(Vec::new())
    }

    fn push(&mut self, s: String) {
        if self.0.len() < MAX_WITNESSES {
            self.0.push(s);
        }
    }

    fn take(self) -> Vec<String> {
        self.0
    }
}

/// Check every law of a square over the structure `a`.
pub fn validate_pqcube(
    c: &PQCube,
    pool: &BTreeMap<String, PMorphism>,
    a: &ChiralMC,
) -> ValidationReport {
    let mut rep = ValidationReport::new(format!("{}:{}", a.name, c.name));

    // Shape.
    let mut bad = Wit::new();
    if !(1 <= c.p && c.p < c.q && c.q <= a.degree.saturating_add(1)) {
        bad.push(format!("laxity classes ({}, {}) out of order or range", c.p, c.q));
    }
    for (side, want) in [(&c.r, c.p), (&c.s, c.p), (&c.u, c.q), (&c.v, c.q)] {
        match pool.get(side) {
            None => bad.push(format!("side morphism {side} not in pool")),
            Some(m) => {
                if m.p != want {
                    bad.push(format!(
                        "side morphism {side} has laxity class {} but the square needs {want}",
                        m.p
                    ));
                }
            }
        }
    }
    let expected: BTreeSet<MultiIndex> = a.positive_indices().into_iter().collect();
    for idx in &expected {
        let lv = &a.levels[idx];
        match c.components.get(idx) {
            None => bad.push(format!("missing components at {idx}")),
            Some(v) => {
                if v.len() != lv.n_cubes() as usize {
                    bad.push(format!("components at {idx}: length mismatch"));
                } else if v.iter().any(|&f| f >= lv.n_arrows()) {
                    bad.push(format!("components at {idx}: value out of range"));
                }
            }
        }
    }
    for idx in c.components.keys() {
        if !expected.contains(idx) {
            bad.push(format!("unexpected components at {idx}"));
        }
    }
    let ok = bad.0.is_empty();
    rep.outcome(
        "cell/shape",
        "the four sides exist with the right laxity classes and the components cover \
         every level",
        expected.len() as u64,
        CheckMethod::Exhaustive,
        bad.take(),
    );
    if !ok {
        return rep.finish();
    }

    let r = &pool[&c.r];
    let s = &pool[&c.s];
    let u = &pool[&c.u];
    let v = &pool[&c.v];

    // Boundaries and face compatibility.
    let mut bad = Wit::new();
    let mut inst = 0u64;
    for idx in &expected {
        let lv = &a.levels[idx];
        let phi = &c.components[idx];
        for x in 0..lv.n_cubes() {
            inst += 1;
            let f = phi[x as usize];
            if lv.src(f) != v.cube(idx, r.cube(idx, x)) || lv.tgt(f) != s.cube(idx, u.cube(idx, x))
            {
                bad.push(format!("{idx}: component at {} has wrong endpoints", lv.cube_label(x)));
            }
            for &i in idx.dirs() {
                let sub = idx.without(i);
                for sign in Sign::BOTH {
                    let fm = &a.faces[&(idx.clone(), i)][sign.idx()];
                    if fm.arrow(f) != c.components[&sub][fm.cube(x) as usize] {
                        bad.push(format!(
                            "{idx}: ∂{}{i} of the component at {} is not the component of \
                             the face",
                            sign.glyph(),
                            lv.cube_label(x)
                        ));
                    }
                }
            }
        }
    }
    rep.outcome(
        "cell/faces",
        "components have the square's boundary and restrict along all faces",
        inst,
        CheckMethod::Exhaustive,
        bad.take(),
    );

    // Naturality.
    let mut bad = Wit::new();
    let mut inst = 0u64;
    for idx in &expected {
        let lv = &a.levels[idx];
        let phi = &c.components[idx];
        for f in 0..lv.n_arrows() {
            inst += 1;
            let (x, y) = (lv.src(f), lv.tgt(f));
            let top = v.arrow(idx, r.arrow(idx, f));
            let bot = s.arrow(idx, u.arrow(idx, f));
            let lhs = lv.compose0(top, phi[y as usize]);
            let rhs = lv.compose0(phi[x as usize], bot);
            if lhs.is_err() || lhs.ok() != rhs.ok() {
                bad.push(format!("{idx}: naturality fails at {}", lv.arrow_label(f)));
            }
        }
    }
    rep.outcome(
        "cell/natural",
        "components are natural in the cube",
        inst,
        CheckMethod::Exhaustive,
        bad.take(),
    );

    // Coherence with the sides' comparisons, per direction.
    for idx in &expected {
        for &i in idx.dirs() {
            coherence_direction(c, r, s, u, v, a, idx, i, &mut rep);
        }
    }

    rep.finish()
}

#[allow(clippy::too_many_arguments)]
fn coherence_direction(
    c: &PQCube,
    r: &PMorphism,
    s: &PMorphism,
    u: &PMorphism,
    v: &PMorphism,
    a: &ChiralMC,
    idx: &MultiIndex,
    i: u8,
    rep: &mut ValidationReport,
) {
    let lv = &a.levels[idx];
    let sub = idx.without(i);
    let blv = &a.levels[&sub];
    let d = &a.degens[&(idx.clone(), i)];
    let phi = &c.components[idx];
    let phi_b = &c.components[&sub];
    let key = (idx.clone(), i);

    let unit_of = |m: &PMorphism, t: u32| m.unit_cmp[&key][t as usize];
    let cmp_of = |m: &PMorphism, x: u32, y: u32| -> Result<u32> {
        m.comp_cmp[&key].get(&(x, y)).copied().ok_or_else(|| {
            KernelError::MissingEntry(format!("side comparison at ({x},{y})"))
        })
    };

    // Regime: both classes lax in i, only the p-class lax, or neither.
    let regime = if i < c.p {
        'c'
    } else if i < c.q {
        'b'
    } else {
        'a'
    };

    // Units.
    let mut bad = Wit::new();
    for t in 0..blv.n_cubes() {
        let res = (|| -> Result<()> {
            let rt = r.cube(&sub, t);
            let ut = u.cube(&sub, t);
            let v_unit = unit_of(v, rt);
            let s_unit = unit_of(s, ut);
            let v_of_r = v.arrow(idx, unit_of(r, t));
            let s_of_u = s.arrow(idx, unit_of(u, t));
            let phi_et = phi[d.cube(t) as usize];
            let e_phi = d.arrow(phi_b[t as usize]);
            let (lhs, rhs) = match regime {
                'a' => (
                    lv.chain0(&[v_unit, v_of_r, phi_et])?,
                    lv.chain0(&[e_phi, s_unit, s_of_u])?,
                ),
                'b' => (
                    lv.chain0(&[v_unit, e_phi, s_unit])?,
                    lv.chain0(&[v_of_r, phi_et, s_of_u])?,
                ),
                _ => (
                    lv.chain0(&[phi_et, s_of_u, s_unit])?,
                    lv.chain0(&[v_of_r, v_unit, e_phi])?,
                ),
            };
            if lhs != rhs {
                return Err(KernelError::Malformed("unit coherence fails".into()));
            }
            Ok(())
        })();
        if let Err(e) = res {
            bad.push(format!("{idx}: unit coherence {i} at {}: {e}", blv.cube_label(t)));
        }
    }
    rep.outcome(
        format!("cell/coherence{i}/units{idx}"),
        "components at degenerate cubes cohere with the sides' unit comparisons",
        blv.n_cubes() as u64,
        CheckMethod::Exhaustive,
        bad.take(),
    );

    // Concatenations.
    let gc = &a.comps[&key];
    let mut bad = Wit::new();
    for (&(x, y), &z) in &gc.cubes {
        let res = (|| -> Result<()> {
            let (rx, ry) = (r.cube(idx, x), r.cube(idx, y));
            let (ux, uy) = (u.cube(idx, x), u.cube(idx, y));
            let v_cmp = cmp_of(v, rx, ry)?;
            let s_cmp = cmp_of(s, ux, uy)?;
            let v_of_r = v.arrow(idx, cmp_of(r, x, y)?);
            let s_of_u = s.arrow(idx, cmp_of(u, x, y)?);
            let phi_z = phi[z as usize];
            let side_pair =
                a.compose_arrows(idx, i, phi[x as usize], phi[y as usize])?;
            let (lhs, rhs) = match regime {
                'a' => (
                    lv.chain0(&[v_cmp, v_of_r, phi_z])?,
                    lv.chain0(&[side_pair, s_cmp, s_of_u])?,
                ),
                'b' => (
                    lv.chain0(&[v_cmp, side_pair, s_cmp])?,
                    lv.chain0(&[v_of_r, phi_z, s_of_u])?,
                ),
                _ => (
                    lv.chain0(&[phi_z, s_of_u, s_cmp])?,
                    lv.chain0(&[v_of_r, v_cmp, side_pair])?,
                ),
            };
            if lhs != rhs {
                return Err(KernelError::Malformed("concatenation coherence fails".into()));
            }
            Ok(())
        })();
        if let Err(e) = res {
            bad.push(format!(
                "{idx}: concatenation coherence {i} at ({}, {}): {e}",
                lv.cube_label(x),
                lv.cube_label(y)
            ));
        }
    }
    rep.outcome(
        format!("cell/coherence{i}/comps{idx}"),
        "components at concatenations cohere with the sides' concatenation comparisons",
        gc.cubes.len() as u64,
        CheckMethod::Exhaustive,
        bad.take(),
    );
}

/// Register the composite of two pooled morphisms under a canonical name,
/// collapsing identities, and return that name.
pub(crate) fn ensure_composite(
    pool: &mut BTreeMap<String, PMorphism>,
    a: &ChiralMC,
    n1: &str,
    n2: &str,
) -> Result<String> {
    let m1 = mor(pool, n1)?.clone();
    let m2 = mor(pool, n2)?.clone();
    if is_identity_pmorphism(&m1, a) {
        return Ok(n2.to_string());
    }
    if is_identity_pmorphism(&m2, a) {
        return Ok(n1.to_string());
    }
    let name = format!("{n1}·{n2}");
    if !pool.contains_key(&name) {
        let mut comp = compose_pmorphisms(&m1, &m2, a)?;
        comp.name = name.clone();
        pool.insert(name.clone(), comp);
    }
    Ok(name)
}

/// The names `ensure_composite` would produce, without inserting anything:
/// `(name, would_create_new_entry)`.
pub(crate) fn composite_side_name(
    pool: &BTreeMap<String, PMorphism>,
    a: &ChiralMC,
    n1: &str,
    n2: &str,
) -> Result<(String, bool)> {
    let m1 = mor(pool, n1)?;
    let m2 = mor(pool, n2)?;
    if is_identity_pmorphism(m1, a) {
        return Ok((n2.to_string(), false));
    }
    if is_identity_pmorphism(m2, a) {
        return Ok((n1.to_string(), false));
    }
    let name = format!("{n1}·{n2}");
    let new = !pool.contains_key(&name);
    Ok((name, new))
}

/// Compose two squares along the given axis, registering whatever side
/// composites the result needs in the pool.
pub fn compose_pqcubes(
    axis: CubeAxis,
    x: &PQCube,
    y: &PQCube,
    pool: &mut BTreeMap<String, PMorphism>,
    a: &ChiralMC,
) -> Result<PQCube> {
    if x.p != y.p || x.q != y.q {
        return Err(KernelError::Malformed(format!(
            "cannot compose squares of classes ({},{}) and ({},{})",
            x.p, x.q, y.p, y.q
        )));
    }
    match axis {
        CubeAxis::AlongP => {
            if x.v != y.u {
                return Err(KernelError::NotComposable {
                    lhs: x.name.clone(),
                    rhs: y.name.clone(),
                    dir: x.p,
                });
            }
            let r = ensure_composite(pool, a, &x.r, &y.r)?;
            let s = ensure_composite(pool, a, &x.s, &y.s)?;
            let rx = pool[&x.r].clone();
            let s2 = pool[&y.s].clone();
            let mut components = BTreeMap::new();
            for (idx, xs) in &x.components {
                let lv = &a.levels[idx];
                let ys = &y.components[idx];
                let mut out = Vec::with_capacity(xs.len());
                for (cube, &phi) in xs.iter().enumerate() {
                    let through = ys[rx.cube(idx, cube as u32) as usize];
                    out.push(lv.compose0(through, s2.arrow(idx, phi))?);
                }
                components.insert(idx.clone(), out);
            }
            Ok(PQCube {
                name: format!("({}+p{})", x.name, y.name),
                p: x.p,
                q: x.q,
                r,
                s,
                u: x.u.clone(),
                v: y.v.clone(),
                components,
            })
        }
        CubeAxis::AlongQ => {
            if x.s != y.r {
                return Err(KernelError::NotComposable {
                    lhs: x.name.clone(),
                    rhs: y.name.clone(),
                    dir: x.q,
                });
            }
            let u = ensure_composite(pool, a, &x.u, &y.u)?;
            let v = ensure_composite(pool, a, &x.v, &y.v)?;
            let ux = pool[&x.u].clone();
            let v2 = pool[&y.v].clone();
            let mut components = BTreeMap::new();
            for (idx, xs) in &x.components {
                let lv = &a.levels[idx];
                let ys = &y.components[idx];
                let mut out = Vec::with_capacity(xs.len());
                for (cube, &phi) in xs.iter().enumerate() {
                    let through = ys[ux.cube(idx, cube as u32) as usize];
                    out.push(lv.compose0(v2.arrow(idx, phi), through)?);
                }
                components.insert(idx.clone(), out);
            }
            Ok(PQCube {
                name: format!("({}+q{})", x.name, y.name),
                p: x.p,
                q: x.q,
                r: x.r.clone(),
                s: y.s.clone(),
                u,
                v,
                components,
            })
        }
    }
}

/// The degenerate square of a class-`q` morphism in the class-`p`
/// direction: identities on the `p`-sides, `u` on both `q`-sides,
/// identity components.
pub fn degenerate_pqcube_p(u: &PMorphism, p: u8, a: &ChiralMC) -> PQCube {
    assert!(p < u.p, "degenerate square needs p < q");
    let components = a
        .positive_indices()
        .into_iter()
        .map(|idx| {
            let lv = &a.levels[&idx];
            let v = (0..lv.n_cubes()).map(|x| lv.ids[u.cube(&idx, x) as usize]).collect();
            (idx, v)
        })
        .collect();
    PQCube {
        name: format!("ep({})", u.name),
        p,
        q: u.p,
        r: format!("id/p{p}"),
        s: format!("id/p{p}"),
        u: u.name.clone(),
        v: u.name.clone(),
        components,
    }
}

/// The degenerate square of a class-`p` morphism in the class-`q`
/// direction.
pub fn degenerate_pqcube_q(r: &PMorphism, q: u8, a: &ChiralMC) -> PQCube {
    assert!(r.p < q, "degenerate square needs p < q");
    let components = a
        .positive_indices()
        .into_iter()
        .map(|idx| {
            let lv = &a.levels[&idx];
            let v = (0..lv.n_cubes()).map(|x| lv.ids[r.cube(&idx, x) as usize]).collect();
            (idx, v)
        })
        .collect();
    PQCube {
        name: format!("eq({})", r.name),
        p: r.p,
        q,
        r: r.name.clone(),
        s: r.name.clone(),
        u: format!("id/p{q}"),
        v: format!("id/p{q}"),
        components,
    }
}

/// Enumerate squares whose four sides are identities, i.e. families of
/// endo-arrows compatible with faces, keeping only those passing full
/// validation.  Bails out to the single degenerate square when the raw
/// search space exceeds ten thousand combinations.
pub fn enumerate_identity_cubes(
    a: &ChiralMC,
    p: u8,
    q: u8,
    cap: usize,
) -> Vec<PQCube> {
    let idp = identity_pmorphism(a, p);
    let idq = identity_pmorphism(a, q);
    let mut pool = BTreeMap::new();
    pool.insert(idp.name.clone(), idp.clone());
    pool.insert(idq.name.clone(), idq.clone());

    let levels = a.positive_indices();
    let mut space: u64 = 1;
    let mut homs: BTreeMap<MultiIndex, BTreeMap<(u32, u32), Vec<u32>>> = BTreeMap::new();
    for idx in &levels {
        let lv = &a.levels[idx];
        let hb = lv.hom_buckets();
        for x in 0..lv.n_cubes() {
            let n = hb.get(&(x, x)).map_or(0, |v| v.len()) as u64;
            space = space.saturating_mul(n.max(1));
        }
        homs.insert(idx.clone(), hb);
    }

    let assemble = |components: BTreeMap<MultiIndex, Vec<u32>>, k: usize| PQCube {
        name: format!("icube#{k}"),
        p,
        q,
        r: idp.name.clone(),
        s: idp.name.clone(),
        u: idq.name.clone(),
        v: idq.name.clone(),
        components,
    };

    let mut found: Vec<BTreeMap<MultiIndex, Vec<u32>>> = Vec::new();
    if space > 10_000 {
        found.push(
            levels
                .iter()
                .map(|idx| (idx.clone(), a.levels[idx].ids.clone()))
                .collect(),
        );
    } else {
        // Depth-first over levels in dimension order, cubes in index order.
        fn fill(
            a: &ChiralMC,
            levels: &[MultiIndex],
            homs: &BTreeMap<MultiIndex, BTreeMap<(u32, u32), Vec<u32>>>,
            li: usize,
            cube: u32,
            acc: &mut BTreeMap<MultiIndex, Vec<u32>>,
            out: &mut Vec<BTreeMap<MultiIndex, Vec<u32>>>,
            cap: usize,
        ) {
            if out.len() >= cap {
                return;
            }
            if li == levels.len() {
                out.push(acc.clone());
                return;
            }
            let idx = &levels[li];
            let lv = &a.levels[idx];
            if cube == lv.n_cubes() {
                fill(a, levels, homs, li + 1, 0, acc, out, cap);
                return;
            }
            let empty = Vec::new();
            let cands = homs[idx].get(&(cube, cube)).unwrap_or(&empty);
            for &f in cands {
                let fits = idx.dirs().iter().all(|&i| {
                    Sign::BOTH.into_iter().all(|sign| {
                        let fm = &a.faces[&(idx.clone(), i)][sign.idx()];
                        acc[&idx.without(i)][fm.cube(cube) as usize] == fm.arrow(f)
                    })
                });
                if !fits {
                    continue;
                }
                acc.get_mut(idx).unwrap().push(f);
                fill(a, levels, homs, li, cube + 1, acc, out, cap);
                acc.get_mut(idx).unwrap().pop();
            }
        }
        let mut acc: BTreeMap<MultiIndex, Vec<u32>> =
            levels.iter().map(|idx| (idx.clone(), Vec::new())).collect();
        // Enumerate a little past the cap so that validation filtering
        // still returns `cap` squares when some candidates fail.
        fill(a, &levels, &homs, 0, 0, &mut acc, &mut found, cap.saturating_mul(4).max(16));
    }

    let mut out = Vec::new();
    for (k, comps) in found.into_iter().enumerate() {
        let cand = assemble(comps, k);
        if validate_pqcube(&cand, &pool, a).passed() {
            out.push(cand);
            if out.len() >= cap {
                break;
            }
        }
    }
    out
}

/// A map between squares of the same classes: four strict corner
/// morphisms commuting with the sides and with the components.
#[derive(Clone, Debug)]
pub struct PQMap {
    pub name: String,
    pub src: String,
    pub tgt: String,
    /// Corner morphisms `[A, B, C, D]` at the corners source-of-`r`,
    /// target-of-`r`, source-of-`s`, target-of-`s`.
    pub corners: [String; 4],
}

/// Check a map of squares: corners strict, side squares commute, and the
/// components intertwine.
pub fn validate_pqmap(
    m: &PQMap,
    cubes: &BTreeMap<String, PQCube>,
    pool: &BTreeMap<String, PMorphism>,
    a: &ChiralMC,
) -> ValidationReport {
    let mut rep = ValidationReport::new(format!("{}:{}", a.name, m.name));

    let mut bad = Wit::new();
    let (src, tgt) = (cubes.get(&m.src), cubes.get(&m.tgt));
    if src.is_none() {
        bad.push(format!("source square {} unknown", m.src));
    }
    if tgt.is_none() {
        bad.push(format!("target square {} unknown", m.tgt));
    }
    if let (Some(s), Some(t)) = (src, tgt) {
        if s.p != t.p || s.q != t.q {
            bad.push("source and target squares have different laxity classes".into());
        }
    }
    for corner in &m.corners {
        match pool.get(corner) {
            None => bad.push(format!("corner morphism {corner} unknown")),
            Some(c) => {
                if !is_strict_pmorphism(c, a) {
                    bad.push(format!("corner morphism {corner} is not strict"));
                }
            }
        }
    }
    let ok = bad.0.is_empty();
    rep.outcome(
        "map/shape",
        "both squares exist with equal classes and all four corners are strict",
        1,
        CheckMethod::Exhaustive,
        bad.take(),
    );
    if !ok {
        return rep.finish();
    }
    let (src, tgt) = (src.unwrap(), tgt.unwrap());
    let [ca, cb, cc, cd] = &m.corners;

    let mut bad = Wit::new();
    let sides = [
        (ca, &tgt.r, &src.r, cb, "r"),
        (cc, &tgt.s, &src.s, cd, "s"),
        (ca, &tgt.u, &src.u, cc, "u"),
        (cb, &tgt.v, &src.v, cd, "v"),
    ];
    for (first, after, before, second, tag) in sides {
        let res = (|| -> Result<bool> {
            let lhs = compose_pmorphisms(mor(pool, first)?, mor(pool, after)?, a)?;
            let rhs = compose_pmorphisms(mor(pool, before)?, mor(pool, second)?, a)?;
            Ok(pmorphism_content_eq(&lhs, &rhs, a))
        })();
        match res {
            Ok(true) => {}
            Ok(false) => bad.push(format!("side {tag}: the corner square does not commute")),
            Err(e) => bad.push(format!("side {tag}: {e}")),
        }
    }
    rep.outcome(
        "map/sides",
        "the four corner squares of morphisms commute",
        4,
        CheckMethod::Exhaustive,
        bad.take(),
    );

    let mut bad = Wit::new();
    let mut inst = 0u64;
    let da = mor(pool, cd).expect("checked above");
    let fa = mor(pool, ca).expect("checked above");
    for (idx, phi) in &src.components {
        let lv = &a.levels[idx];
        let psi = &tgt.components[idx];
        for x in 0..lv.n_cubes() {
            inst += 1;
            if da.arrow(idx, phi[x as usize]) != psi[fa.cube(idx, x) as usize] {
                bad.push(format!(
                    "{idx}: component at {} not intertwined",
                    lv.cube_label(x)
                ));
            }
        }
    }
    rep.outcome(
        "map/components",
        "the far corner pushes the source components onto the target components",
        inst,
        CheckMethod::Exhaustive,
        bad.take(),
    );

    rep.finish()
}

/// A commuting cube bounded by three laxity classes `p < q < r`:
/// two squares per pair of classes, glued along matching sides.
#[derive(Clone, Debug)]
pub struct PQRCube {
    pub name: String,
    pub p: u8,
    pub q: u8,
    pub r: u8,
    /// The two `(q,r)`-squares `[ω, ζ]`.
    pub p_face: [String; 2],
    /// The two `(p,r)`-squares `[π, ρ]`.
    pub q_face: [String; 2],
    /// The two `(p,q)`-squares `[φ, ψ]`.
    pub r_face: [String; 2],
}

/// Check a three-class cube: face classes, the twelve edge identifications,
/// and commutation of the two transversal pastings at every cube.
pub fn validate_pqrcube(
    c: &PQRCube,
    cubes: &BTreeMap<String, PQCube>,
    pool: &BTreeMap<String, PMorphism>,
    a: &ChiralMC,
) -> ValidationReport {
    let mut rep = ValidationReport::new(format!("{}:{}", a.name, c.name));

    let mut bad = Wit::new();
    if !(1 <= c.p && c.p < c.q && c.q < c.r && c.r <= a.degree.saturating_add(1)) {
        bad.push(format!("laxity classes ({}, {}, {}) out of order or range", c.p, c.q, c.r));
    }
    let wanted = [
        (&c.p_face[0], (c.q, c.r)),
        (&c.p_face[1], (c.q, c.r)),
        (&c.q_face[0], (c.p, c.r)),
        (&c.q_face[1], (c.p, c.r)),
        (&c.r_face[0], (c.p, c.q)),
        (&c.r_face[1], (c.p, c.q)),
    ];
    for (name, (wp, wq)) in wanted {
        match cubes.get(name) {
            None => bad.push(format!("face square {name} unknown")),
            Some(f) => {
                if (f.p, f.q) != (wp, wq) {
                    bad.push(format!(
                        "face square {name} has classes ({},{}) but the cube needs ({wp},{wq})",
                        f.p, f.q
                    ));
                }
            }
        }
    }
    let ok = bad.0.is_empty();
    rep.outcome(
        "cube3/shape",
        "all six face squares exist with the right laxity classes",
        6,
        CheckMethod::Exhaustive,
        bad.take(),
    );
    if !ok {
        return rep.finish();
    }

    let omega = &cubes[&c.p_face[0]];
    let zeta = &cubes[&c.p_face[1]];
    let pi = &cubes[&c.q_face[0]];
    let rho = &cubes[&c.q_face[1]];
    let phi = &cubes[&c.r_face[0]];
    let psi = &cubes[&c.r_face[1]];

    let mut bad = Wit::new();
    let edges: [(&str, &String, &String); 12] = [
        ("φ.r = π.r", &phi.r, &pi.r),
        ("ψ.r = π.s", &psi.r, &pi.s),
        ("φ.s = ρ.r", &phi.s, &rho.r),
        ("ψ.s = ρ.s", &psi.s, &rho.s),
        ("φ.u = ω.r", &phi.u, &omega.r),
        ("ψ.u = ω.s", &psi.u, &omega.s),
        ("φ.v = ζ.r", &phi.v, &zeta.r),
        ("ψ.v = ζ.s", &psi.v, &zeta.s),
        ("π.u = ω.u", &pi.u, &omega.u),
        ("π.v = ζ.u", &pi.v, &zeta.u),
        ("ρ.u = ω.v", &rho.u, &omega.v),
        ("ρ.v = ζ.v", &rho.v, &zeta.v),
    ];
    for (tag, l, r) in edges {
        if l != r {
            bad.push(format!("edge {tag} fails ({l} vs {r})"));
        }
    }
    let ok = bad.0.is_empty();
    rep.outcome(
        "cube3/edges",
        "the twelve edge morphisms of the six faces match up",
        12,
        CheckMethod::Exhaustive,
        bad.take(),
    );
    if !ok {
        return rep.finish();
    }

    let mut bad = Wit::new();
    let mut inst = 0u64;
    let res = (|| -> Result<()> {
        let y2 = mor(pool, &rho.v)?;
        let s2 = mor(pool, &psi.s)?;
        let v2 = mor(pool, &psi.v)?;
        let xm = mor(pool, &pi.u)?;
        let um = mor(pool, &phi.u)?;
        let rm = mor(pool, &phi.r)?;
        for idx in a.positive_indices() {
            let lv = &a.levels[&idx];
            for x in 0..lv.n_cubes() {
                inst += 1;
                let path1 = lv.chain0(&[
                    y2.arrow(&idx, phi.components[&idx][x as usize]),
                    rho.components[&idx][um.cube(&idx, x) as usize],
                    s2.arrow(&idx, omega.components[&idx][x as usize]),
                ]);
                let path2 = lv.chain0(&[
                    zeta.components[&idx][rm.cube(&idx, x) as usize],
                    v2.arrow(&idx, pi.components[&idx][x as usize]),
                    psi.components[&idx][xm.cube(&idx, x) as usize],
                ]);
                match (path1, path2) {
                    (Ok(a1), Ok(a2)) if a1 == a2 => {}
                    _ => bad.push(format!(
                        "{idx}: the two pastings differ at {}",
                        lv.cube_label(x)
                    )),
                }
            }
        }
        Ok(())
    })();
    if let Err(e) = res {
        bad.push(format!("pasting could not be formed: {e}"));
    }
    rep.outcome(
        "cube3/commute",
        "the two transversal pastings around the cube agree at every cube",
        inst,
        CheckMethod::Exhaustive,
        bad.take(),
    );

    rep.finish()
}
