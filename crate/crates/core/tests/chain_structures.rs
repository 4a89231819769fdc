//! Cross-checks for the chain and bundle constructions: frozen cell
//! counts computed independently from the raw fixture tables, validation
//! of the assembled multiple categories, and the comparison down to the
//! base level.

use mcat_core::adjunctions::{adj_sequence, bnd_sequence, build_adj, build_bnd, build_bnd_with};
use mcat_core::fixtures::{fix1, fix3, sigma_two_z2};
use mcat_core::genquintets::{forgetful_comparison, u_quintet_list, GqOptions};
use mcat_core::index::MultiIndex;
use mcat_core::multicat::{
    coskeletal_dimension, validate_multiple_category, validate_multiple_functor,
};
use mcat_core::quintets::{build_q, check_quintet_type};
use mcat_core::twocat::{FiniteTwoCategory, OneId};

/// Count `(i, j)`-cells of the bundle construction straight off the raw
/// tables: tuples of parallel arrows at both levels, a componentwise
/// 2-cell into each square after repeating the last arrow of the lower
/// tuple.
fn oracle_bundle_cells(c: &FiniteTwoCategory, i: usize, j: usize) -> u64 {
    let tuples = |n: usize| -> Vec<Vec<OneId>> {
        let mut out: Vec<Vec<OneId>> = (0..c.one_cells.len() as u32)
            .map(|f| vec![OneId(f)])
            .collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for t in &out {
                for g in (0..c.one_cells.len() as u32).map(OneId) {
                    if c.src1(g) == c.src1(t[0]) && c.tgt1(g) == c.tgt1(t[0]) {
                        let mut ext = t.clone();
                        ext.push(g);
                        next.push(ext);
                    }
                }
            }
            out = next;
        }
        out
    };
    let low = tuples(i);
    let high = tuples(j);
    let mut count = 0u64;
    for r in &low {
        for s in &low {
            for u in &high {
                if c.src1(u[0]) != c.src1(r[0]) {
                    continue;
                }
                for v in &high {
                    if c.src1(v[0]) != c.tgt1(r[0])
                        || c.src1(s[0]) != c.tgt1(u[0])
                        || c.tgt1(s[0]) != c.tgt1(v[0])
                    {
                        continue;
                    }
                    let mut m = 1u64;
                    for h in 0..=j {
                        let rh = r[h.min(i)];
                        let sh = s[h.min(i)];
                        let src = c.compose1(rh, v[h]).unwrap();
                        let tgt = c.compose1(u[h], sh).unwrap();
                        m *= c.hom2(src, tgt).len() as u64;
                        if m == 0 {
                            break;
                        }
                    }
                    count += m;
                }
            }
        }
    }
    count
}

#[test]
fn bundle_cell_counts_match_the_raw_tables() {
    let c = fix1();
    let (seq, _) = bnd_sequence(&c, 2).unwrap();
    let expect = [((0, 1), 751), ((0, 2), 4551), ((1, 2), 28835)];
    for ((i, j), frozen) in expect {
        let oracle = oracle_bundle_cells(&c, i, j);
        assert_eq!(oracle, frozen, "oracle drifted at ({i}, {j})");
        let cells = u_quintet_list(&seq, i, j).unwrap();
        assert_eq!(cells.len() as u64, oracle, "kernel disagrees at ({i}, {j})");
    }
}

#[test]
fn deep_bundle_construction_validates_facewise() {
    // The poset-map fixture is locally thin, so every bundle square is
    // determined by its frame and the facewise description applies; the
    // tabulated description would need tens of millions of entries here.
    let c = fix1();
    let opts = GqOptions {
        facewise_pairs: true,
        ..Default::default()
    };
    let m = build_bnd_with(&c, 2, 2, &opts).unwrap();
    assert_eq!(m.cell_count(&MultiIndex::new(vec![0, 1])), Some(751));
    assert_eq!(m.cell_count(&MultiIndex::new(vec![0, 2])), Some(4551));
    assert_eq!(m.cell_count(&MultiIndex::new(vec![1, 2])), Some(28835));
    let rep = validate_multiple_category(&m);
    assert!(rep.passed(), "failures: {:?}", rep.failures());
}

#[test]
fn small_bundle_constructions_validate_to_dimension_three() {
    for c in [sigma_two_z2(), fix3()] {
        let m = build_bnd(&c, 2, 3).unwrap();
        let rep = validate_multiple_category(&m);
        assert!(rep.passed(), "{}: {:?}", m.name, rep.failures());
        assert!(coskeletal_dimension(&m).unwrap().value <= 3);
    }
}

#[test]
fn group_bundle_pools_have_frozen_sizes() {
    let c = sigma_two_z2();
    let (seq, levels) = bnd_sequence(&c, 2).unwrap();
    assert_eq!(levels[1].cells.len(), 4);
    assert_eq!(levels[2].cells.len(), 8);
    assert_eq!(u_quintet_list(&seq, 0, 1).unwrap().len(), 4);
    assert_eq!(u_quintet_list(&seq, 0, 2).unwrap().len(), 8);
    assert_eq!(u_quintet_list(&seq, 1, 2).unwrap().len(), 8);
    let m = build_bnd(&c, 2, 3).unwrap();
    let triple = mcat_core::index::MultiIndex::new(vec![0, 1, 2]);
    assert_eq!(m.cell_count(&triple), Some(8192));
}

#[test]
fn chain_construction_validates_and_compares_to_the_base() {
    let c = fix1();
    let (seq, _) = adj_sequence(&c, 2).unwrap();
    let m = build_adj(&c, 2, 3).unwrap();
    let rep = validate_multiple_category(&m);
    assert!(rep.passed(), "failures: {:?}", rep.failures());
    assert!(coskeletal_dimension(&m).unwrap().value <= 3);

    let q0 = build_q(&seq.levels[0], 3).unwrap();
    let u = forgetful_comparison(&seq, &m, &q0).unwrap();
    let frep = validate_multiple_functor(&u, &m, &q0);
    assert!(frep.passed(), "failures: {:?}", frep.failures());
    // Every truncation link is faithful, so the comparison separates
    // cells with a common boundary.
    assert_eq!(check_quintet_type(&m, &u, &q0).unwrap(), None);
}

#[test]
fn chain_square_counts_match_the_raw_tables() {
    let c = fix1();
    let (seq, levels) = adj_sequence(&c, 2).unwrap();
    // Oracle for (0, 1): the lower edges are plain arrows, the higher
    // ones chains, and the inhabiting cell lives in the base.
    let chains = &levels[1].chains;
    let mut oracle = 0u64;
    for r in (0..c.one_cells.len() as u32).map(OneId) {
        for s in (0..c.one_cells.len() as u32).map(OneId) {
            for u in chains {
                if c.src1(u.arrows[0]) != c.src1(r) {
                    continue;
                }
                for v in chains {
                    if c.src1(v.arrows[0]) != c.tgt1(r)
                        || c.src1(s) != c.tgt1(u.arrows[0])
                        || c.tgt1(s) != c.tgt1(v.arrows[0])
                    {
                        continue;
                    }
                    let src = c.compose1(r, v.arrows[0]).unwrap();
                    let tgt = c.compose1(u.arrows[0], s).unwrap();
                    oracle += c.hom2(src, tgt).len() as u64;
                }
            }
        }
    }
    let cells = u_quintet_list(&seq, 0, 1).unwrap();
    assert_eq!(cells.len() as u64, oracle);
    assert!(oracle > 0);
}
