//! Curated groups, diagrams and quandles used by the sweeps in the test
//! suites and by `qf` examples.

use crate::diagram::{parse_gauss, Diagram};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::quandle::{enumerate_quandles, FiniteQuandle};

pub const TREFOIL: &str = "U1+ O2+ U3+ O1+ U2+ O3+";
pub const FIGURE_EIGHT: &str = "U1+ O2+ U3- O4- U2+ O1+ U4- O3-";
/// Both chords nested; every two-arc diagram has a trivial quandle.
pub const VIRTUAL_TREFOIL: &str = "flavor=virtual; O1+ U2+ O2+ U1+";
pub const UNKNOT: &str = "";
pub const TREFOIL_ARC: &str = "arc; U1+ O2+ U3+ O1+ U2+ O3+";
/// The trefoil with a negative Reidemeister I kink appended.
pub const TREFOIL_R1: &str = "U1+ O2+ U3+ O1+ U2+ O3+ O4- U4-";
/// The trefoil with a Reidemeister II pair: one strand passes over another
/// twice in a row, with opposite signs.
pub const TREFOIL_R2: &str = "U1+ O2+ O7+ O8- U3+ O1+ U2+ O3+ U7+ U8-";

fn perm_group(degree: usize, gens: &[&[usize]]) -> FiniteGroup {
    let gens = gens.iter().map(|g| Permutation::from_images(g.to_vec()).expect("corpus permutation")).collect();
    FiniteGroup::from_permutations(degree, gens).expect("corpus group")
}

/// Groups of order at most 24.
pub fn groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z1", FiniteGroup::cyclic(1)),
        ("Z2", FiniteGroup::cyclic(2)),
        ("Z3", FiniteGroup::cyclic(3)),
        ("Z4", FiniteGroup::cyclic(4)),
        ("V4", perm_group(4, &[&[1, 0, 2, 3], &[0, 1, 3, 2]])),
        ("Z5", FiniteGroup::cyclic(5)),
        ("Z6", FiniteGroup::cyclic(6)),
        ("S3", FiniteGroup::symmetric(3)),
        ("D4", FiniteGroup::dihedral(4)),
        ("Q8", FiniteGroup::quaternion()),
        ("Z2^3", perm_group(6, &[&[1, 0, 2, 3, 4, 5], &[0, 1, 3, 2, 4, 5], &[0, 1, 2, 3, 5, 4]])),
        ("D5", FiniteGroup::dihedral(5)),
        ("A4", FiniteGroup::alternating(4)),
        ("D6", FiniteGroup::dihedral(6)),
        ("S4", FiniteGroup::symmetric(4)),
    ]
}

pub fn diagrams() -> Vec<(&'static str, Diagram)> {
    [
        ("trefoil", TREFOIL),
        ("figure_eight", FIGURE_EIGHT),
        ("virtual_trefoil", VIRTUAL_TREFOIL),
        ("unknot", UNKNOT),
        ("trefoil_arc", TREFOIL_ARC),
        ("trefoil_r1", TREFOIL_R1),
        ("trefoil_r2", TREFOIL_R2),
    ]
    .into_iter()
    .map(|(name, code)| (name, parse_gauss(code).expect("corpus diagram")))
    .collect()
}

/// Trivial and dihedral quandles, conjugation quandles of every class in
/// the small non-abelian groups, and all quandles of order at most 4.
pub fn quandles() -> Vec<(String, FiniteQuandle)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("T{n}"), FiniteQuandle::trivial(n)));
    }
    for n in 1..=8 {
        out.push((format!("R{n}"), FiniteQuandle::dihedral(n)));
    }
    for (name, g) in groups().into_iter().filter(|(_, g)| !g.is_abelian()) {
        for m in 0..g.order() {
            if g.conjugacy_class(m)[0] != m {
                continue;
            }
            out.push((format!("Conj({name},{})", g.label(m)), FiniteQuandle::conjugation(&g, m).expect("in range")));
        }
    }
    for n in 1..=4 {
        for (i, q) in enumerate_quandles(n, n).expect("within cap").into_iter().enumerate() {
            out.push((format!("Q{n}.{i}"), q));
        }
    }
    out
}

/// Targets for coloring comparisons.
pub fn coloring_targets() -> Vec<(String, FiniteQuandle)> {
    let s4 = FiniteGroup::symmetric(4);
    let transposition = s4.element_of_images(&[1, 0, 2, 3]).expect("in S4");
    let four_cycle = s4.element_of_images(&[1, 2, 3, 0]).expect("in S4");
    vec![
        ("T3".into(), FiniteQuandle::trivial(3)),
        ("R3".into(), FiniteQuandle::dihedral(3)),
        ("R4".into(), FiniteQuandle::dihedral(4)),
        ("R5".into(), FiniteQuandle::dihedral(5)),
        ("R7".into(), FiniteQuandle::dihedral(7)),
        ("Conj(S4,transposition)".into(), FiniteQuandle::conjugation(&s4, transposition).expect("in range")),
        ("Conj(S4,4-cycle)".into(), FiniteQuandle::conjugation(&s4, four_cycle).expect("in range")),
    ]
}
