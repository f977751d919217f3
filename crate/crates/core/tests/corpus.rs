mod common;

use common::{arc_walk, brute_colorings, brute_reps, Rel};
use qf_core::corpus;
use qf_core::diagram::{
    parse_gauss, welded_equivalence_probe, wirtinger_group, wirtinger_quandle, QuandlePresentation, Relation,
};
use qf_core::fp::{GroupPresentation, Letter};
use qf_core::invariants::{coset_experiment, count_colorings, count_group_reps, crosscheck_diagram};
use qf_core::quandle::FiniteQuandle;
use qf_core::FiniteGroup;

const NO_LIMIT: u64 = u64::MAX;

fn codes() -> Vec<&'static str> {
    vec![
        corpus::TREFOIL,
        corpus::FIGURE_EIGHT,
        corpus::VIRTUAL_TREFOIL,
        corpus::UNKNOT,
        corpus::TREFOIL_ARC,
        corpus::TREFOIL_R1,
        corpus::TREFOIL_R2,
        "O1- U1-",
        "arc;",
    ]
}

#[test]
fn presentations_match_arc_walk() {
    for code in codes() {
        let (arcs, rels) = arc_walk(code);
        let q = wirtinger_quandle(&parse_gauss(code).unwrap());
        assert_eq!(q.generators, arcs, "{code}");
        let got: Vec<Rel> =
            q.relations.iter().map(|r| Rel { out: r.output, inp: r.input, over: r.over, sign: r.sign }).collect();
        assert_eq!(got, rels, "{code}");
        let (g, _) = wirtinger_group(&parse_gauss(code).unwrap());
        assert_eq!(g.relators().len(), q.relations.len());
    }
}

#[test]
fn colorings_match_brute_force() {
    let targets =
        [FiniteQuandle::dihedral(3), FiniteQuandle::dihedral(4), FiniteQuandle::dihedral(5), FiniteQuandle::trivial(2)];
    for code in codes() {
        let p = wirtinger_quandle(&parse_gauss(code).unwrap());
        for t in &targets {
            assert_eq!(count_colorings(&p, t, NO_LIMIT).unwrap(), brute_colorings(code, t.table()), "{code}");
        }
    }
}

#[test]
fn crosscheck_every_corpus_class() {
    for (name, g) in corpus::groups() {
        let reps: Vec<usize> = (0..g.order()).filter(|&m| g.conjugacy_class(m)[0] == m).collect();
        for (dname, d) in corpus::diagrams() {
            for &m in &reps {
                let r = crosscheck_diagram(&d, &g, m, NO_LIMIT).unwrap();
                assert!(r.matched, "{dname} / {name} / {m}: {r:?}");
            }
        }
    }
}

#[test]
fn reps_match_brute_force_on_small_groups() {
    let s3 = FiniteGroup::symmetric(3);
    let z3 = FiniteGroup::cyclic(3);
    for code in [corpus::TREFOIL, corpus::FIGURE_EIGHT, corpus::VIRTUAL_TREFOIL, corpus::TREFOIL_ARC] {
        let (p, per) = wirtinger_group(&parse_gauss(code).unwrap());
        for g in [&s3, &z3] {
            for m in 0..g.order() {
                let class = g.conjugacy_class(m);
                assert_eq!(
                    count_group_reps(&p, g, per.meridian, &class, NO_LIMIT).unwrap(),
                    brute_reps(code, g, &class),
                    "{code}"
                );
            }
        }
    }
}

#[test]
fn centralizer_coset_quandles_color_like_conjugation_quandles() {
    for (name, g) in corpus::groups().into_iter().filter(|(_, g)| g.order() <= 12) {
        for m in 0..g.order() {
            let cq = qf_core::coset::CosetQuandle::build(&g, &g.centralizer(m), m).unwrap();
            let conj = FiniteQuandle::conjugation(&g, m).unwrap();
            assert!(qf_core::quandle::are_isomorphic(cq.quandle(), &conj).is_some(), "{name} {m}");
            for (dname, d) in corpus::diagrams() {
                let p = wirtinger_quandle(&d);
                assert_eq!(
                    count_colorings(&p, cq.quandle(), NO_LIMIT).unwrap(),
                    count_colorings(&p, &conj, NO_LIMIT).unwrap(),
                    "{dname} {name} {m}"
                );
            }
        }
    }
}

fn permute_quandle_presentation(p: &QuandlePresentation, perm: &[usize]) -> QuandlePresentation {
    let relations = p
        .relations
        .iter()
        .map(|r| Relation { output: perm[r.output], input: perm[r.input], over: perm[r.over], sign: r.sign })
        .collect();
    QuandlePresentation::new(p.generators, relations).unwrap()
}

fn permute_group_presentation(p: &GroupPresentation, perm: &[usize]) -> GroupPresentation {
    let relators = p
        .relators()
        .iter()
        .map(|r| r.iter().map(|l| Letter { generator: perm[l.generator], ..*l }).collect())
        .collect();
    GroupPresentation::with_count(p.generator_count(), relators).unwrap()
}

#[test]
fn counts_ignore_generator_order() {
    let s4 = FiniteGroup::symmetric(4);
    let t = s4.element_of_images(&[1, 0, 2, 3]).unwrap();
    let class = s4.conjugacy_class(t);
    let target = FiniteQuandle::conjugation(&s4, t).unwrap();
    for code in [corpus::FIGURE_EIGHT, corpus::TREFOIL_R2, corpus::TREFOIL_ARC] {
        let d = parse_gauss(code).unwrap();
        let q = wirtinger_quandle(&d);
        let (g, per) = wirtinger_group(&d);
        let n = q.generators;
        let perm: Vec<usize> = (0..n).rev().collect();
        assert_eq!(
            count_colorings(&q, &target, NO_LIMIT).unwrap(),
            count_colorings(&permute_quandle_presentation(&q, &perm), &target, NO_LIMIT).unwrap()
        );
        assert_eq!(
            count_group_reps(&g, &s4, per.meridian, &class, NO_LIMIT).unwrap(),
            count_group_reps(&permute_group_presentation(&g, &perm), &s4, perm[per.meridian], &class, NO_LIMIT)
                .unwrap()
        );
    }
}

#[test]
fn counts_ignore_rotation_and_relabeling() {
    let targets: Vec<FiniteQuandle> = corpus::coloring_targets().into_iter().map(|(_, q)| q).collect();
    for code in [corpus::TREFOIL, corpus::FIGURE_EIGHT, corpus::TREFOIL_R2] {
        let d = parse_gauss(code).unwrap();
        let base: Vec<u64> =
            targets.iter().map(|t| count_colorings(&wirtinger_quandle(&d), t, NO_LIMIT).unwrap()).collect();
        for k in 0..d.passes().len() {
            let r = d.rotated(k).unwrap().relabeled(|id| 100 - id).unwrap();
            let counts: Vec<u64> =
                targets.iter().map(|t| count_colorings(&wirtinger_quandle(&r), t, NO_LIMIT).unwrap()).collect();
            assert_eq!(counts, base, "{code} rotated by {k}");
        }
    }
}

#[test]
fn welded_probe() {
    let targets: Vec<FiniteQuandle> = corpus::coloring_targets().into_iter().map(|(_, q)| q).collect();
    let trefoil = parse_gauss(corpus::TREFOIL).unwrap();
    let kinked = parse_gauss(corpus::TREFOIL_R1).unwrap();
    assert!(welded_equivalence_probe(&trefoil, &kinked, &targets, NO_LIMIT).unwrap().all_equal);
    assert!(welded_equivalence_probe(&trefoil, &trefoil, &targets, NO_LIMIT).unwrap().all_equal);
    let unknot = parse_gauss(corpus::UNKNOT).unwrap();
    let probe = welded_equivalence_probe(&trefoil, &unknot, &[FiniteQuandle::dihedral(3)], NO_LIMIT).unwrap();
    assert!(!probe.all_equal);
    assert_eq!((probe.comparisons[0].first, probe.comparisons[0].second), (9, 3));
}

#[test]
fn abelianized_knot_groups_are_integers() {
    for code in [corpus::TREFOIL, corpus::FIGURE_EIGHT, corpus::VIRTUAL_TREFOIL, corpus::TREFOIL_R2, ""] {
        let (g, _) = wirtinger_group(&parse_gauss(code).unwrap());
        let a = qf_core::fp::abelianization(&g);
        assert_eq!((a.rank, a.torsion.len()), (1, 0), "{code}");
        let (cols, m) = common::wirtinger_exponents(code);
        assert_eq!(common::abelian_invariants(&m, cols), (1, vec![]), "{code}");
    }
}

#[test]
fn coset_experiment_runs_on_non_centralizer_subgroups() {
    let s4 = FiniteGroup::symmetric(4);
    let t = s4.element_of_images(&[1, 0, 2, 3]).unwrap();
    let p = s4.subgroup_generated(&[t]);
    let d = parse_gauss(corpus::TREFOIL).unwrap();
    let e = coset_experiment(&d, &s4, &p, t, NO_LIMIT).unwrap();
    assert_eq!(e.subgroup_order, 2);
    assert_eq!(e.centralizer_order, 4);
    assert_eq!(e.reps, e.conjugation_colorings);
}
