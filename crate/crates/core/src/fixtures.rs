//! Reference 2-categories used across the test suites.
//!
//! Most fixtures are *thin* (at most one 2-cell between parallel 1-cells)
//! and are generated from a [`ThinSpec`], which fixes the 1-cell category
//! and a local preorder; vertical composition and whiskering are then the
//! unique cells with the right boundaries.  The exception is
//! [`sigma_two_z2`], whose single hom-category is the group of order two —
//! the smallest 2-category with two distinct parallel 2-cells.

use std::collections::BTreeMap;

use crate::twocat::{FiniteTwoCategory, ObjId, OneCell, OneId, StrictTwoFunctor, TwoCell, TwoId};

/// A thin 2-category presented by its 1-cell category and a local preorder.
///
/// `leq` is only consulted on parallel 1-cells; it must be reflexive and
/// transitive there, and compatible with composition on both sides —
/// [`thin_two_category`] panics otherwise, since fixtures are built from
/// static data.
pub struct ThinSpec {
    pub name: String,
    pub objects: Vec<String>,
    /// `(name, src, tgt)` per 1-cell.
    pub one_cells: Vec<(String, usize, usize)>,
    /// Identity 1-cell per object.
    pub id_one: Vec<usize>,
    /// `(f, g) ↦ "f then g"` on composable pairs.
    pub comp1: BTreeMap<(usize, usize), usize>,
    /// Local preorder on 1-cell ids.
    pub leq: Vec<Vec<bool>>,
}

/// Build the thin 2-category of a [`ThinSpec`].
pub fn thin_two_category(spec: &ThinSpec) -> FiniteTwoCategory {
    let n1 = spec.one_cells.len();
    let parallel = |f: usize, g: usize| {
        spec.one_cells[f].1 == spec.one_cells[g].1 && spec.one_cells[f].2 == spec.one_cells[g].2
    };
    let rel = |f: usize, g: usize| parallel(f, g) && spec.leq[f][g];

    let mut two_cells = Vec::new();
    let mut cell_id: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for f in 0..n1 {
        assert!(spec.leq[f][f], "local preorder must be reflexive");
        for g in 0..n1 {
            if rel(f, g) {
                let name = if f == g {
                    format!("1_{}", spec.one_cells[f].0)
                } else {
                    format!("{}<={}", spec.one_cells[f].0, spec.one_cells[g].0)
                };
                cell_id.insert((f, g), two_cells.len() as u32);
                two_cells.push(TwoCell {
                    name,
                    src: OneId(f as u32),
                    tgt: OneId(g as u32),
                });
            }
        }
    }

    let mut vcomp = BTreeMap::new();
    for (&(f, g), &a) in &cell_id {
        for (&(g2, h), &b) in &cell_id {
            if g == g2 {
                let c = *cell_id
                    .get(&(f, h))
                    .expect("local preorder must be transitive");
                vcomp.insert((TwoId(a), TwoId(b)), TwoId(c));
            }
        }
    }

    let comp = |f: usize, g: usize| -> usize {
        *spec
            .comp1
            .get(&(f, g))
            .unwrap_or_else(|| panic!("missing composite ({f}, {g})"))
    };
    let mut whisker_l = BTreeMap::new();
    let mut whisker_r = BTreeMap::new();
    for (&(f, g), &a) in &cell_id {
        let (_, _, tgt) = spec.one_cells[f];
        let (_, src, _) = spec.one_cells[f];
        for s in 0..n1 {
            if spec.one_cells[s].1 == tgt {
                let c = *cell_id
                    .get(&(comp(f, s), comp(g, s)))
                    .expect("local preorder must be stable under post-composition");
                whisker_l.insert((OneId(s as u32), TwoId(a)), TwoId(c));
            }
            if spec.one_cells[s].2 == src {
                let c = *cell_id
                    .get(&(comp(s, f), comp(s, g)))
                    .expect("local preorder must be stable under pre-composition");
                whisker_r.insert((TwoId(a), OneId(s as u32)), TwoId(c));
            }
        }
    }

    FiniteTwoCategory {
        name: spec.name.clone(),
        objects: spec.objects.clone(),
        one_cells: spec
            .one_cells
            .iter()
            .map(|(n, s, t)| OneCell {
                name: n.clone(),
                src: ObjId(*s as u32),
                tgt: ObjId(*t as u32),
            })
            .collect(),
        two_cells,
        id_one: spec.id_one.iter().map(|&f| OneId(f as u32)).collect(),
        id_two: (0..n1)
            .map(|f| TwoId(*cell_id.get(&(f, f)).expect("reflexive")))
            .collect(),
        comp1: spec
            .comp1
            .iter()
            .map(|(&(f, g), &h)| ((OneId(f as u32), OneId(g as u32)), OneId(h as u32)))
            .collect(),
        vcomp,
        whisker_l,
        whisker_r,
    }
}

/// A finite poset, given by name and reflexive order matrix.
pub struct PosetSpec {
    pub name: String,
    /// `leq[i][j]` iff element `i ≤ j`; must be a partial order.
    pub leq: Vec<Vec<bool>>,
}

impl PosetSpec {
    pub fn chain(name: impl Into<String>, n: usize) -> Self {
        PosetSpec {
            name: name.into(),
            leq: (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.leq.len()
    }
}

/// The [`ThinSpec`] of the full sub-2-category of posets on the given list:
/// 1-cells are all monotone maps, ordered pointwise.
pub fn monotone_maps_spec(name: impl Into<String>, posets: &[PosetSpec]) -> ThinSpec {
    let name = name.into();
    // Enumerate monotone maps per ordered pair of posets, in lexicographic
    // order of their value tables.
    let mut one_cells: Vec<(String, usize, usize)> = Vec::new();
    let mut values: Vec<Vec<usize>> = Vec::new();
    let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (s, ps) in posets.iter().enumerate() {
        for (t, pt) in posets.iter().enumerate() {
            let mut maps: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 0..ps.size() {
                maps = maps
                    .into_iter()
                    .flat_map(|m| {
                        (0..pt.size()).map(move |v| {
                            let mut m2 = m.clone();
                            m2.push(v);
                            m2
                        })
                    })
                    .collect();
            }
            maps.retain(|m| {
                (0..ps.size()).all(|x| {
                    (0..ps.size()).all(|y| !ps.leq[x][y] || pt.leq[m[x]][m[y]])
                })
            });
            for m in maps {
                let id = one_cells.len();
                let vals: String = m.iter().map(|v| v.to_string()).collect();
                one_cells.push((format!("{}>{}[{}]", ps.name, pt.name, vals), s, t));
                values.push(m);
                by_pair.entry((s, t)).or_default().push(id);
            }
        }
    }

    let id_one: Vec<usize> = (0..posets.len())
        .map(|s| {
            by_pair[&(s, s)]
                .iter()
                .copied()
                .find(|&f| values[f].iter().enumerate().all(|(x, &v)| v == x))
                .expect("identity map")
        })
        .collect();

    let mut comp1 = BTreeMap::new();
    for f in 0..one_cells.len() {
        for g in 0..one_cells.len() {
            if one_cells[f].2 != one_cells[g].1 {
                continue;
            }
            let composed: Vec<usize> = values[f].iter().map(|&x| values[g][x]).collect();
            let h = by_pair[&(one_cells[f].1, one_cells[g].2)]
                .iter()
                .copied()
                .find(|&h| values[h] == composed)
                .expect("composite is monotone");
            comp1.insert((f, g), h);
        }
    }

    let leq: Vec<Vec<bool>> = (0..one_cells.len())
        .map(|f| {
            (0..one_cells.len())
                .map(|g| {
                    one_cells[f].1 == one_cells[g].1
                        && one_cells[f].2 == one_cells[g].2
                        && values[f]
                            .iter()
                            .zip(&values[g])
                            .all(|(&a, &b)| posets[one_cells[f].2].leq[a][b])
                })
                .collect()
        })
        .collect();

    ThinSpec {
        name,
        objects: posets.iter().map(|p| p.name.clone()).collect(),
        one_cells,
        id_one,
        comp1,
        leq,
    }
}

/// The full sub-2-category of posets on the one- and two-element chains.
///
/// Seven monotone maps: the identities `i1`, `i2`; the two points
/// `c0, c1: 1 → 2`; the collapse `t: 2 → 1`; and the constants
/// `k0, k1: 2 → 2`.  The pointwise order gives four nonidentity 2-cells
/// (`c0 ≤ c1`, `k0 ≤ i2 ≤ k1`) and a chain of adjunctions `c0 ⊣ t ⊣ c1`.
pub fn fix1() -> FiniteTwoCategory {
    let mut spec = monotone_maps_spec(
        "monotone-maps-1-2",
        &[PosetSpec::chain("1", 1), PosetSpec::chain("2", 2)],
    );
    for (name, src, tgt) in spec.one_cells.iter_mut() {
        // Value tables are unambiguous here; rename by role.
        *name = match (*src, *tgt, name.as_str()) {
            (0, 0, _) => "i1",
            (0, 1, "1>2[0]") => "c0",
            (0, 1, "1>2[1]") => "c1",
            (1, 0, _) => "t",
            (1, 1, "2>2[00]") => "k0",
            (1, 1, "2>2[01]") => "i2",
            (1, 1, "2>2[11]") => "k1",
            other => panic!("unexpected monotone map {other:?}"),
        }
        .to_string();
    }
    thin_two_category(&spec)
}

/// The codiscrete 2-category on `n` objects: exactly one 1-cell between any
/// ordered pair of objects (hence only identity 2-cells).
pub fn codiscrete_two_category(n: usize) -> FiniteTwoCategory {
    let one_cells: Vec<(String, usize, usize)> = (0..n)
        .flat_map(|s| (0..n).map(move |t| (format!("u{s}{t}"), s, t)))
        .collect();
    let at = |s: usize, t: usize| s * n + t;
    let spec = ThinSpec {
        name: format!("codiscrete-{n}"),
        objects: (0..n).map(|i| format!("x{i}")).collect(),
        one_cells,
        id_one: (0..n).map(|s| at(s, s)).collect(),
        comp1: (0..n)
            .flat_map(|s| {
                (0..n).flat_map(move |m| (0..n).map(move |t| ((at(s, m), at(m, t)), at(s, t))))
            })
            .collect(),
        leq: (0..n * n).map(|f| (0..n * n).map(|g| f == g).collect()).collect(),
    };
    thin_two_category(&spec)
}

/// The codiscrete 2-category on two objects — every hom a singleton, so
/// quintets are determined by their corners alone.
pub fn fix3() -> FiniteTwoCategory {
    codiscrete_two_category(2)
}

/// A non-codiscrete category whose local preorder is codiscrete: two
/// parallel arrows `f, g: A → B` (and no arrow back), with 2-cells both
/// ways between them.
pub fn codiscrete_local_preorder() -> FiniteTwoCategory {
    let spec = ThinSpec {
        name: "codiscrete-local-preorder".to_string(),
        objects: vec!["A".to_string(), "B".to_string()],
        one_cells: vec![
            ("idA".to_string(), 0, 0),
            ("idB".to_string(), 1, 1),
            ("f".to_string(), 0, 1),
            ("g".to_string(), 0, 1),
        ],
        id_one: vec![0, 1],
        comp1: BTreeMap::from([
            ((0, 0), 0),
            ((1, 1), 1),
            ((0, 2), 2),
            ((0, 3), 3),
            ((2, 1), 2),
            ((3, 1), 3),
        ]),
        leq: vec![
            vec![true, false, false, false],
            vec![false, true, false, false],
            vec![false, false, true, true],
            vec![false, false, true, true],
        ],
    };
    thin_two_category(&spec)
}

/// The chain poset `0 < 1 < … < n−1` viewed as a locally discrete
/// 2-category: 1-cells are the order pairs, 2-cells are identities only.
pub fn locally_discrete_chain(n: usize) -> FiniteTwoCategory {
    let mut one_cells = Vec::new();
    let mut at = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            at.insert((i, j), one_cells.len());
            one_cells.push((format!("a{i}{j}"), i, j));
        }
    }
    let n1 = one_cells.len();
    let mut comp1 = BTreeMap::new();
    for (&(i, j), &f) in &at {
        for (&(j2, k), &g) in &at {
            if j2 == j {
                comp1.insert((f, g), at[&(i, k)]);
            }
        }
    }
    let spec = ThinSpec {
        name: format!("chain-{n}"),
        objects: (0..n).map(|i| format!("x{i}")).collect(),
        one_cells,
        id_one: (0..n).map(|i| at[&(i, i)]).collect(),
        comp1,
        leq: (0..n1).map(|f| (0..n1).map(|g| f == g).collect()).collect(),
    };
    thin_two_category(&spec)
}

/// One object, one 1-cell, and the group of order two as 2-cells: the
/// smallest 2-category with two distinct parallel 2-cells.  Interchange
/// holds because the group is abelian.
pub fn sigma_two_z2() -> FiniteTwoCategory {
    FiniteTwoCategory {
        name: "sigma2-z2".to_string(),
        objects: vec!["*".to_string()],
        one_cells: vec![OneCell {
            name: "i".to_string(),
            src: ObjId(0),
            tgt: ObjId(0),
        }],
        two_cells: vec![
            TwoCell {
                name: "e".to_string(),
                src: OneId(0),
                tgt: OneId(0),
            },
            TwoCell {
                name: "s".to_string(),
                src: OneId(0),
                tgt: OneId(0),
            },
        ],
        id_one: vec![OneId(0)],
        id_two: vec![TwoId(0)],
        comp1: BTreeMap::from([((OneId(0), OneId(0)), OneId(0))]),
        vcomp: BTreeMap::from([
            ((TwoId(0), TwoId(0)), TwoId(0)),
            ((TwoId(0), TwoId(1)), TwoId(1)),
            ((TwoId(1), TwoId(0)), TwoId(1)),
            ((TwoId(1), TwoId(1)), TwoId(0)),
        ]),
        whisker_l: BTreeMap::from([
            ((OneId(0), TwoId(0)), TwoId(0)),
            ((OneId(0), TwoId(1)), TwoId(1)),
        ]),
        whisker_r: BTreeMap::from([
            ((TwoId(0), OneId(0)), TwoId(0)),
            ((TwoId(1), OneId(0)), TwoId(1)),
        ]),
    }
}

/// The terminal 2-category and the collapse functor onto it.
pub fn collapse_to_point(c: &FiniteTwoCategory) -> (FiniteTwoCategory, StrictTwoFunctor) {
    let point = FiniteTwoCategory {
        name: "point".to_string(),
        objects: vec!["*".to_string()],
        one_cells: vec![OneCell {
            name: "i".to_string(),
            src: ObjId(0),
            tgt: ObjId(0),
        }],
        two_cells: vec![TwoCell {
            name: "e".to_string(),
            src: OneId(0),
            tgt: OneId(0),
        }],
        id_one: vec![OneId(0)],
        id_two: vec![TwoId(0)],
        comp1: BTreeMap::from([((OneId(0), OneId(0)), OneId(0))]),
        vcomp: BTreeMap::from([((TwoId(0), TwoId(0)), TwoId(0))]),
        whisker_l: BTreeMap::from([((OneId(0), TwoId(0)), TwoId(0))]),
        whisker_r: BTreeMap::from([((TwoId(0), OneId(0)), TwoId(0))]),
    };
    let collapse = StrictTwoFunctor {
        name: format!("collapse_{}", c.name),
        ob_map: vec![ObjId(0); c.objects.len()],
        one_map: vec![OneId(0); c.one_cells.len()],
        two_map: vec![TwoId(0); c.two_cells.len()],
    };
    (point, collapse)
}

/// Look up a 1-cell by name.
pub fn one_by_name(c: &FiniteTwoCategory, name: &str) -> OneId {
    OneId(
        c.one_cells
            .iter()
            .position(|f| f.name == name)
            .unwrap_or_else(|| panic!("no 1-cell named {name} in {}", c.name)) as u32,
    )
}

/// Look up a 2-cell by name.
pub fn two_by_name(c: &FiniteTwoCategory, name: &str) -> TwoId {
    TwoId(
        c.two_cells
            .iter()
            .position(|a| a.name == name)
            .unwrap_or_else(|| panic!("no 2-cell named {name} in {}", c.name)) as u32,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twocat::{validate_two_category, validate_two_functor};

    #[test]
    fn monotone_map_fixture_has_the_expected_cells() {
        let c = fix1();
        assert_eq!(c.one_cells.len(), 7);
        assert_eq!(c.two_cells.len(), 11);
        let rep = validate_two_category(&c);
        assert!(rep.passed(), "failures: {:?}", rep.failures());
    }

    #[test]
    fn monotone_map_fixture_composes_as_functions() {
        let c = fix1();
        let f = |n: &str| one_by_name(&c, n);
        // Apply-left-then-right composition of the underlying maps.
        assert_eq!(c.compose1(f("c0"), f("t")).unwrap(), f("i1"));
        assert_eq!(c.compose1(f("t"), f("c0")).unwrap(), f("k0"));
        assert_eq!(c.compose1(f("t"), f("c1")).unwrap(), f("k1"));
        assert_eq!(c.compose1(f("k0"), f("k1")).unwrap(), f("k1"));
        assert_eq!(c.compose1(f("k1"), f("k0")).unwrap(), f("k0"));
        assert_eq!(c.compose1(f("c1"), f("k0")).unwrap(), f("c0"));
    }

    #[test]
    fn codiscrete_fixture_is_a_two_category() {
        let c = fix3();
        assert_eq!(c.objects.len(), 2);
        assert_eq!(c.one_cells.len(), 4);
        assert_eq!(c.two_cells.len(), 4);
        assert!(validate_two_category(&c).passed());
    }

    #[test]
    fn codiscrete_local_preorder_fixture_validates() {
        let c = codiscrete_local_preorder();
        // Two identity homs plus a two-element codiscrete hom: 2 + 4 cells.
        assert_eq!(c.two_cells.len(), 6);
        assert!(validate_two_category(&c).passed());
    }

    #[test]
    fn chain_fixture_is_locally_discrete() {
        let c = locally_discrete_chain(3);
        assert_eq!(c.one_cells.len(), 6);
        assert_eq!(c.two_cells.len(), 6);
        assert!(validate_two_category(&c).passed());
    }

    #[test]
    fn group_fixture_validates_with_two_parallel_cells() {
        let c = sigma_two_z2();
        assert!(validate_two_category(&c).passed());
        assert_eq!(c.hom2(OneId(0), OneId(0)).len(), 2);
    }

    #[test]
    fn collapse_functor_is_strict() {
        let c = fix1();
        let (point, u) = collapse_to_point(&c);
        assert!(validate_two_category(&point).passed());
        let rep = validate_two_functor(&u, &c, &point);
        assert!(rep.passed(), "failures: {:?}", rep.failures());
    }
}
