mod common;

use std::collections::BTreeSet;

use ppg_core::pieces::{enumerate_generalized_pieces, BlockFilter};
use ppg_core::points::{left_ideal_dim, Oracle, PieceKey};

#[test]
fn idempotents_are_primitive_invariant_representatives() {
    for (name, p) in common::CORPUS {
        let a = common::analysis(name, p);
        let o = Oracle::new(&a).unwrap();
        for (ci, pts) in o.points.iter().enumerate() {
            let rep = &a.classes[ci].rep;
            let n = pts.len();
            for l in 0..n {
                let i = o.idempotent(ci, l);
                assert!(i.is_idempotent() && i.is_invariant(rep), "{name}");
                // Rank one on its own simple of (FG)^P, zero on the others.
                for k in 0..n {
                    assert_eq!(pts.rank_on(k, i), usize::from(k == l), "{name} class {ci}");
                }
            }
            // The simples of (FG)^P fill the semisimple quotient.
            let total: usize = (0..n).map(|l| pts.multiplicity(l).pow(2)).sum();
            assert_eq!(total + pts.radical_dim, pts.algebra.dim());
        }
    }
}

#[test]
fn correspondence_on_corpus() {
    for (name, p) in common::CORPUS {
        let a = common::analysis(name, p);
        let o = Oracle::new(&a).unwrap();
        let points: BTreeSet<(PieceKey, usize)> =
            o.info.iter().flatten().map(|i| (i.key.clone(), i.multiplicity)).collect();
        let pieces: BTreeSet<(PieceKey, usize)> = enumerate_generalized_pieces(&a, BlockFilter::All, true)
            .unwrap()
            .iter()
            .map(|g| {
                (
                    PieceKey { p_class: g.p_class, q: g.piece.q.elements().to_vec(), phi: g.piece.phi },
                    g.multiplicity,
                )
            })
            .collect();
        assert_eq!(points.len(), o.info.iter().map(Vec::len).sum::<usize>(), "{name}");
        assert_eq!(points, pieces, "{name}");
    }
}

#[test]
fn s4_restriction_equations() {
    let a = common::analysis("s4", 2);
    let o = Oracle::new(&a).unwrap();
    let mp = common::multiposet(&a, &o, BlockFilter::All);
    assert_eq!(common::rel(&a, &o, &mp, "1_1", "C2'_1"), 1);
    assert_eq!(common::rel(&a, &o, &mp, "1_2", "C2'_1"), 0);
    assert_eq!(common::rel(&a, &o, &mp, "1_2", "C2'↑1_2"), 2);
    assert_eq!(common::rel(&a, &o, &mp, "1_1", "C2'↑1_2"), 0);
}

#[test]
fn s5_restriction_equations() {
    let a = common::analysis("s5", 2);
    let o = Oracle::new(&a).unwrap();
    let mp = common::multiposet(&a, &o, BlockFilter::Principal);
    for n in mp.nodes.iter().filter(|n| !n.is_piece) {
        assert_eq!(common::rel(&a, &o, &mp, "1_2", &n.label), n.p_order, "{}", n.label);
    }
    for n in mp.nodes.iter().filter(|n| n.is_piece && n.p_order > 1) {
        assert_eq!(common::rel(&a, &o, &mp, "1_1", &n.label), 1, "{}", n.label);
        let expected = if n.label == "V4_1" || n.label == "D_1" { 4 } else { 0 };
        assert_eq!(common::rel(&a, &o, &mp, "1_2", &n.label), expected, "{}", n.label);
    }
}

#[test]
fn local_points_and_defect_groups() {
    for (name, p) in common::CORPUS {
        let a = common::analysis(name, p);
        let o = Oracle::new(&a).unwrap();
        for (ci, row) in o.info.iter().enumerate() {
            let order = a.classes[ci].rep.order();
            assert_eq!(row.iter().filter(|i| i.local).count(), a.locals[ci].simples.len(), "{name}");
            for info in row {
                assert_eq!(info.local, info.defect.order() == order, "{name}");
                if let Some(t) = info.piece {
                    assert_eq!(info.multiplicity, a.piece_module(ci, t).dim());
                }
            }
        }
    }
}

#[test]
fn slow_and_fast_relative_multiplicities_agree() {
    for (name, p) in [("s4", 2), ("s5", 2), ("q8", 2), ("s3", 3)] {
        let a = common::analysis(name, p);
        let o = Oracle::new(&a).unwrap();
        for (ci, class) in a.classes.iter().enumerate() {
            for (wi, w) in a.classes.iter().enumerate() {
                if !w.rep.is_subgroup_of(&class.rep) {
                    continue;
                }
                for mu in 0..o.points[ci].len() {
                    for omega in 0..o.points[wi].len() {
                        assert_eq!(
                            o.relative_multiplicity(&w.rep, omega, &class.rep, mu).unwrap(),
                            o.relative_multiplicity_slow(&w.rep, omega, &class.rep, mu).unwrap(),
                            "{name}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn dimension_accounting_for_s4() {
    // Σ m(P_α) dim FG·i_α = |G| for every P when there is one block.
    let a = common::analysis("s4", 2);
    let o = Oracle::new(&a).unwrap();
    for (ci, row) in o.info.iter().enumerate() {
        let total: usize = row.iter().map(|i| i.multiplicity * left_ideal_dim(o.idempotent(ci, i.index))).sum();
        assert_eq!(total, 24);
    }
}

#[test]
fn point_records() {
    let a = common::analysis("s4", 2);
    let o = Oracle::new(&a).unwrap();
    let c2 = common::class(&a, "C2'");
    let recs: Vec<_> = o.info[c2].iter().map(|i| o.record(i, String::new())).collect();
    assert_eq!(recs.len(), 2);
    let local: Vec<_> = recs.iter().filter(|r| r.local).collect();
    assert_eq!(local.len(), 1);
    assert_eq!(local[0].piece.as_deref(), Some("C2'_1"));
    let other = recs.iter().find(|r| !r.local).unwrap();
    assert_eq!(other.defect_class, "1");
}
