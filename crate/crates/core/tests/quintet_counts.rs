//! Frozen cell counts for the quintet construction, cross-checked against
//! independent brute-force enumeration working straight off the raw
//! 2-category tables.

use std::collections::BTreeMap;

use mcat_core::fixtures::{fix1, fix3, locally_discrete_chain, sigma_two_z2};
use mcat_core::index::MultiIndex;
use mcat_core::multicat::{coskeletal_dimension, validate_multiple_category};
use mcat_core::quintets::{build_q, check_quintet_type, identity_comparison, quintet_list};
use mcat_core::twocat::{FiniteTwoCategory, OneId, TwoId};

/// Plain tuple form of a square: `(r, s, u, v, cell)`.
type Sq = (u32, u32, u32, u32, u32);

/// Count inhabited squares by looping over all 1-cell quadruples with
/// matching corners and scanning every 2-cell for the right boundary.
fn oracle_squares(c: &FiniteTwoCategory) -> Vec<Sq> {
    let n1 = c.one_cells.len() as u32;
    let mut out = Vec::new();
    for r in 0..n1 {
        for s in 0..n1 {
            for u in 0..n1 {
                for v in 0..n1 {
                    let (r_, s_, u_, v_) = (OneId(r), OneId(s), OneId(u), OneId(v));
                    if c.src1(u_) != c.src1(r_)
                        || c.src1(v_) != c.tgt1(r_)
                        || c.src1(s_) != c.tgt1(u_)
                        || c.tgt1(s_) != c.tgt1(v_)
                    {
                        continue;
                    }
                    let top = c.comp1[&(r_, v_)];
                    let bot = c.comp1[&(u_, s_)];
                    for (a, two) in c.two_cells.iter().enumerate() {
                        if two.src == top && two.tgt == bot {
                            out.push((r, s, u, v, a as u32));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Count commuting cubes over the square list: fix the 2-face pair, filter
/// the four connecting squares by edge equations, and evaluate both pastes
/// by direct table indexing.
fn oracle_cubes(c: &FiniteTwoCategory, squares: &[Sq]) -> u64 {
    let mut by_rs: BTreeMap<(u32, u32), Vec<Sq>> = BTreeMap::new();
    for q in squares {
        by_rs.entry((q.0, q.1)).or_default().push(*q);
    }
    let empty = Vec::new();
    let group = |r: u32, s: u32| by_rs.get(&(r, s)).unwrap_or(&empty);

    let vc = |a: u32, b: u32| c.vcomp[&(TwoId(a), TwoId(b))].0;
    let wl = |s: u32, a: u32| c.whisker_l[&(OneId(s), TwoId(a))].0;
    let wr = |a: u32, s: u32| c.whisker_r[&(TwoId(a), OneId(s))].0;

    let mut count = 0u64;
    for phi in squares {
        for psi in squares {
            for pi in group(phi.0, psi.0) {
                for rho in group(phi.1, psi.1) {
                    for omega in group(phi.2, psi.2) {
                        if omega.2 != pi.2 || omega.3 != rho.2 {
                            continue;
                        }
                        for zeta in group(phi.3, psi.3) {
                            if zeta.2 != pi.3 || zeta.3 != rho.3 {
                                continue;
                            }
                            let lhs =
                                vc(vc(wl(rho.3, phi.4), wr(rho.4, phi.2)), wl(psi.1, omega.4));
                            let rhs =
                                vc(vc(wr(zeta.4, phi.0), wl(psi.3, pi.4)), wr(psi.4, omega.2));
                            if lhs == rhs {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    count
}

#[test]
fn poset_map_fixture_counts_are_frozen() {
    let c = fix1();
    let squares = oracle_squares(&c);
    assert_eq!(squares.len(), 159);
    assert_eq!(oracle_cubes(&c, &squares), 269_072);

    let q = build_q(&c, 4).unwrap();
    let at = |dirs: &[u8]| q.cell_count(&MultiIndex::new(dirs.to_vec()));
    assert_eq!(at(&[0]), Some(7));
    assert_eq!(at(&[2, 4]), Some(159));
    assert_eq!(at(&[0, 1, 2]), Some(269_072));
    assert_eq!(at(&[1, 2, 3]), Some(269_072));
    // The fourth dimension stays coskeletal: far too many cells to store.
    assert_eq!(at(&[0, 1, 2, 3]), None);
    assert_eq!(q.explicit_dim, 3);
    assert_eq!(q.dim_bound, 4);

    let kernel = quintet_list(&c);
    assert_eq!(kernel.len(), squares.len());
    for (k, o) in kernel.iter().zip(&squares) {
        assert_eq!((k.r.0, k.s.0, k.u.0, k.v.0, k.cell.0), *o);
    }
}

#[test]
fn poset_map_fixture_is_two_coskeletal() {
    let c = fix1();
    let q = build_q(&c, 4).unwrap();
    let out = coskeletal_dimension(&q).unwrap();
    assert_eq!(out.value, 2);
    // Dimension 2 is obstructed (a boundary square whose two composites are
    // unrelated in the hom order has no filling 2-cell), dimension 3 is not.
    let d2 = out.obstruction_above(1).unwrap();
    assert_eq!(d2.dim, 2);
    assert!(!d2.complete);
    assert!(d2.witness.as_deref().unwrap().contains("no filling cell"));
    assert!(out.obstruction_above(2).is_none());
}

#[test]
fn codiscrete_fixture_is_zero_coskeletal() {
    let c = fix3();
    let squares = oracle_squares(&c);
    assert_eq!(squares.len(), 16);
    assert_eq!(oracle_cubes(&c, &squares), 256);

    let q = build_q(&c, 4).unwrap();
    assert_eq!(q.explicit_dim, 4);
    let out = coskeletal_dimension(&q).unwrap();
    assert_eq!(out.value, 0);
}

#[test]
fn locally_discrete_squares_are_commuting_squares() {
    let c = locally_discrete_chain(3);
    let squares = oracle_squares(&c);
    // One square per corner-compatible quadruple: every square of monotone
    // maps between chain positions commutes.
    assert_eq!(squares.len(), 20);
    assert_eq!(squares.len(), quintet_list(&c).len());
    let q = build_q(&c, 4).unwrap();
    let rep = validate_multiple_category(&q);
    assert!(rep.passed(), "failures: {:?}", rep.failures());
}

#[test]
fn group_fixture_cubes_obey_the_parity_relation() {
    let c = sigma_two_z2();
    let squares = oracle_squares(&c);
    assert_eq!(squares.len(), 2);
    // Face-consistency never constrains the faces here (there is a single
    // 1-cell), so cubes are exactly the parity-balanced 6-tuples.
    assert_eq!(oracle_cubes(&c, &squares), 32);

    let q = build_q(&c, 4).unwrap();
    let at = |dirs: &[u8]| q.cell_count(&MultiIndex::new(dirs.to_vec()));
    assert_eq!(at(&[0, 1]), Some(2));
    assert_eq!(at(&[0, 1, 2]), Some(32));
    // Dimension 4: one parity unknown per 2-face of a 4-cube (24), one
    // parity constraint per 3-face (8, of rank 7): 2^17 solutions.
    assert_eq!(at(&[0, 1, 2, 3]), Some(131_072));

    let rep = validate_multiple_category(&q);
    assert!(rep.passed(), "failures: {:?}", rep.failures());

    // Truncating at 2 and rebuilding coskeletally would double dimension 3:
    // the 32 unbalanced 6-tuples are face-consistent but have no filler.
    let out = coskeletal_dimension(&q).unwrap();
    assert_eq!(out.value, 3);
    let d3 = out.obstruction_above(2).unwrap();
    assert_eq!(d3.dim, 3);
    assert!(d3.determined);
    assert!(!d3.complete);
    assert!(d3.witness.as_deref().unwrap().contains("no filling cell"));
}

#[test]
fn quintet_constructions_are_of_quintet_type() {
    for c in [fix3(), sigma_two_z2(), locally_discrete_chain(2)] {
        let q = build_q(&c, 3).unwrap();
        let u = identity_comparison(&q);
        assert_eq!(check_quintet_type(&q, &u, &q).unwrap(), None);
    }
}
