//! The group `Adconj(Q)`: one generator `q̂` per quandle element, with the
//! quandle operation read as conjugation, `q̂_{a^b} = q̂_b⁻¹ q̂_a q̂_b`.
//!
//! `Adconj(Q)` acts on `Q` on the right, `q·q̂_0⋯q̂_n = (⋯(q^{q_0})⋯)^{q_n}`,
//! and its image in `Sym(Q)` is the inner group.

use serde::Serialize;

use crate::coset::CosetQuandle;
use crate::fp::{abelianization, AbelianInvariants, GroupPresentation, Letter, Word};
use crate::perm::{Permutation, PermutationGroup};
use crate::quandle::FiniteQuandle;
use crate::report::Check;

#[derive(Clone, Debug)]
pub struct AdconjPresentation {
    pub presentation: GroupPresentation,
    /// One candidate relator per pair `(a, b)`, before freely trivial ones
    /// are dropped.
    pub candidate_relators: usize,
}

/// `q̂_b⁻¹ q̂_a q̂_b q̂_{a^b}⁻¹` for every pair `(a, b)` in row-major order,
/// dropping those that freely reduce to the empty word. Relators from fixed
/// pairs (`a^b = a`, `a ≠ b`) are commutators and are kept.
pub fn adconj_presentation(q: &FiniteQuandle) -> AdconjPresentation {
    let n = q.order();
    let names = match q.labels() {
        Some(l) => l.iter().map(|s| format!("q{s}")).collect(),
        None => (0..n).map(|i| format!("q{i}")).collect(),
    };
    let mut relators = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let r = crate::fp::free_reduce(&[Letter::inv(b), Letter::gen(a), Letter::gen(b), Letter::inv(q.op(a, b))]);
            if !r.is_empty() {
                relators.push(r);
            }
        }
    }
    AdconjPresentation {
        presentation: GroupPresentation::new(names, relators).expect("indices are quandle elements"),
        candidate_relators: n * n,
    }
}

/// Acts on `element` by `word`, letter by letter: `q̂_b` applies `x ↦ x^b`,
/// `q̂_b⁻¹` applies its inverse.
pub fn adconj_act(q: &FiniteQuandle, element: usize, word: &[Letter]) -> usize {
    word.iter().fold(element, |x, l| if l.inverse { q.left_div(x, l.generator) } else { q.op(x, l.generator) })
}

/// Image of `Adconj(Q)` in `Sym(Q)`: generator `b` is the action of `q̂_b`.
pub fn adconj_inn_image(q: &FiniteQuandle) -> PermutationGroup {
    let n = q.order();
    let gens = (0..n)
        .map(|b| {
            let images = (0..n).map(|x| adconj_act(q, x, &[Letter::gen(b)])).collect();
            Permutation::from_images(images).expect("generator acts bijectively")
        })
        .collect();
    PermutationGroup::new(n, gens).expect("degree is the quandle order")
}

pub fn adconj_abelianization(q: &FiniteQuandle) -> AbelianInvariants {
    abelianization(&adconj_presentation(q).presentation)
}

/// Permutation of `Q` induced by a word in the `q̂`.
pub fn word_permutation(q: &FiniteQuandle, word: &Word) -> Permutation {
    Permutation::from_images_unchecked((0..q.order()).map(|x| adconj_act(q, x, word)).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilizerProbe {
    /// `|Inn(Q)|`, the image of `Adconj(Q)` acting on the coset quandle.
    pub inn_order: usize,
    /// Size of the stabilizer of the base coset inside that image.
    pub base_stabilizer_order: usize,
    /// `|N|` for `N` the normal closure of `m` in `G`.
    pub normal_closure_order: usize,
    /// `|P ∩ N|`
    pub peripheral_intersection_order: usize,
    /// Size of the image of `P ∩ N` under the `G`-action.
    pub peripheral_image_order: usize,
    pub checks: Vec<Check>,
}

impl StabilizerProbe {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Compares the stabilizer of the base point in the inner image with the
/// group side. The column `σ_{Ph}` is the action of `h⁻¹mh`, so the inner
/// image is the action image of `N = ⟨⟨m⟩⟩`, and the base stabilizer in it
/// must be the action image of `P ∩ N`.
///
/// This checks the finite image only; whether the stabilizer of `m` in
/// `Adconj(Q)` itself is `P` also depends on the kernel of the action.
pub fn stabilizer_probe(cq: &CosetQuandle<'_>) -> crate::error::Result<StabilizerProbe> {
    let g = cq.group();
    let q = cq.quandle();
    let inn = adconj_inn_image(q);
    let base_stab = inn.stabilizer(cq.base())?;

    let normal = g.normal_closure(&[cq.meridian()]);
    let action_image = |elements: &[usize]| -> crate::error::Result<Vec<Permutation>> {
        let gens = elements.iter().map(|&h| cq.group_action(h)).collect();
        Ok(PermutationGroup::new(q.order(), gens)?.elements()?.to_vec())
    };
    let normal_image = action_image(normal.elements())?;
    let intersection: Vec<usize> = normal.elements().iter().copied().filter(|&x| cq.subgroup().contains(x)).collect();
    let peripheral_image = action_image(&intersection)?;

    let checks = vec![
        Check::new("inn_image_is_normal_closure_image", inn.elements()? == normal_image.as_slice()),
        Check::new("base_stabilizer_is_peripheral_image", base_stab == peripheral_image),
        Check::new("stabilizer_elements_fix_base", base_stab.iter().all(|p| p.apply(cq.base()) == cq.base())),
    ];
    Ok(StabilizerProbe {
        inn_order: inn.order()?,
        base_stabilizer_order: base_stab.len(),
        normal_closure_order: normal.order(),
        peripheral_intersection_order: intersection.len(),
        peripheral_image_order: peripheral_image.len(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::todd_coxeter;
    use crate::group::FiniteGroup;

    #[test]
    fn trivial_quandle_presentation() {
        let q = FiniteQuandle::trivial(3);
        let ap = adconj_presentation(&q);
        assert_eq!(ap.candidate_relators, 9);
        assert_eq!(ap.presentation.relators().len(), 6);
        assert_eq!(adconj_abelianization(&q), AbelianInvariants { rank: 3, torsion: vec![] });
    }

    #[test]
    fn one_point_quandle() {
        let ap = adconj_presentation(&FiniteQuandle::trivial(1));
        assert_eq!(ap.presentation.generator_count(), 1);
        assert!(ap.presentation.relators().is_empty());
    }

    #[test]
    fn dihedral_three() {
        let q = FiniteQuandle::dihedral(3);
        let ap = adconj_presentation(&q);
        assert_eq!(ap.candidate_relators, 9);
        // diagonal pairs reduce away; the other six survive
        assert_eq!(ap.presentation.relators().len(), 6);
        assert_eq!(adconj_abelianization(&q).rank, 1);
        assert!(adconj_abelianization(&q).torsion.is_empty());
        assert_eq!(adconj_abelianization(&FiniteQuandle::dihedral(4)).rank, 2);
    }

    #[test]
    fn action_folds_left_to_right() {
        let q = FiniteQuandle::dihedral(3);
        assert_eq!(adconj_act(&q, 2, &[]), 2);
        assert_eq!(adconj_act(&q, 2, &[Letter::gen(1), Letter::inv(1)]), 2);
        let expected = q.column(1).then(&q.column(2)).apply(0);
        assert_eq!(adconj_act(&q, 0, &[Letter::gen(1), Letter::gen(2)]), q.op(q.op(0, 1), 2));
        assert_eq!(adconj_act(&q, 0, &[Letter::gen(1), Letter::gen(2)]), expected);
    }

    #[test]
    fn relators_act_trivially() {
        for q in [FiniteQuandle::dihedral(5), FiniteQuandle::dihedral(4), FiniteQuandle::trivial(2)] {
            for r in adconj_presentation(&q).presentation.relators() {
                assert!(word_permutation(&q, r).is_identity());
            }
        }
    }

    #[test]
    fn inn_image_matches_inner_group() {
        for q in [FiniteQuandle::dihedral(4), FiniteQuandle::trivial(3), FiniteQuandle::dihedral(6)] {
            let a = adconj_inn_image(&q);
            let b = q.inner_group();
            assert_eq!(a.generators(), b.generators());
        }
        assert_eq!(adconj_inn_image(&FiniteQuandle::trivial(4)).order().unwrap(), 1);
        // Inn(R_4) is generated by the reflections x ↦ 2b − x: order 4 by closure
        assert_eq!(adconj_inn_image(&FiniteQuandle::dihedral(4)).order().unwrap(), 4);
    }

    #[test]
    fn adconj_whole_subgroup_has_index_one() {
        let ap = adconj_presentation(&FiniteQuandle::dihedral(3));
        let subgens: Vec<Word> = (0..3).map(|i| vec![Letter::gen(i)]).collect();
        assert_eq!(todd_coxeter(&ap.presentation, &subgens, 100).unwrap().index(), 1);
    }

    #[test]
    fn probe_examples() {
        let g = FiniteGroup::symmetric(3);
        let t = g.element_of_images(&[1, 0, 2]).unwrap();
        let cq = CosetQuandle::build(&g, &g.subgroup_generated(&[t]), t).unwrap();
        let probe = stabilizer_probe(&cq).unwrap();
        assert!(probe.passed());
        assert_eq!((probe.inn_order, probe.base_stabilizer_order), (6, 2));

        let c = g.element_of_images(&[1, 2, 0]).unwrap();
        let cq = CosetQuandle::build(&g, &g.subgroup_generated(&[c]), c).unwrap();
        let probe = stabilizer_probe(&cq).unwrap();
        assert!(probe.passed());
        assert_eq!((probe.inn_order, probe.base_stabilizer_order), (1, 1));

        let whole = g.subgroup_generated(&(0..6).collect::<Vec<_>>());
        let cq = CosetQuandle::build(&g, &whole, 0).unwrap();
        let probe = stabilizer_probe(&cq).unwrap();
        assert!(probe.passed());
        assert_eq!(probe.base_stabilizer_order, probe.inn_order);
    }
}
