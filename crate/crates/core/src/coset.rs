//! Coset quandles `(P\G, m)`: right cosets of a subgroup `P` with
//! `Pg^Ph = P(g h⁻¹ m h)`, for `m` central in `P`.
//!
//! `G` acts on the cosets by right multiplication. The base coset `P·e`
//! (index 0) plays the role of the distinguished element `m_Q`: every coset
//! is `base·g`, two such agree exactly when the group elements differ by a
//! left factor from `P`, and the stabilizer of `base·g` is `g⁻¹Pg`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{CosetDecomposition, FiniteGroup, Subgroup};
use crate::perm::{Permutation, PermutationGroup};
use crate::quandle::{validate_quandle, FiniteQuandle};
use crate::report::{Check, ValidationReport};

#[derive(Clone, Debug)]
pub struct CosetQuandle<'g> {
    group: &'g FiniteGroup,
    subgroup: Subgroup,
    meridian: usize,
    cosets: CosetDecomposition,
    quandle: FiniteQuandle,
}

/// Result of building the coset table without the centrality hypothesis.
#[derive(Clone, Debug, Serialize)]
pub struct ForcedBuild {
    pub table: Vec<Vec<usize>>,
    pub central: bool,
    /// Number of `(g, h)` pairs where the coset of `g·h⁻¹mh` differs from
    /// the table entry computed from the coset representatives.
    pub representative_conflicts: usize,
    /// First conflicting `(g, h)`, if any.
    pub first_conflict: Option<(usize, usize)>,
    pub validation: ValidationReport,
}

fn check_inputs(group: &FiniteGroup, subgroup: &Subgroup, meridian: usize) -> Result<()> {
    if subgroup.parent_order() != group.order() {
        return Err(Error::MalformedInput("subgroup belongs to a group of a different order".into()));
    }
    if meridian >= group.order() {
        return Err(Error::MalformedInput(format!("meridian {meridian} is out of range")));
    }
    Ok(())
}

fn centrality_witness(group: &FiniteGroup, subgroup: &Subgroup, meridian: usize) -> Option<Option<usize>> {
    if !subgroup.contains(meridian) {
        return Some(None);
    }
    subgroup.elements().iter().find(|&&p| !group.commute(meridian, p)).map(|&p| Some(p))
}

fn fill_table(group: &FiniteGroup, cosets: &CosetDecomposition, meridian: usize) -> Vec<Vec<usize>> {
    let reps = &cosets.representatives;
    reps.par_iter()
        .map(|&g| reps.iter().map(|&h| cosets.coset_of[group.mul(g, group.conjugate(meridian, h))]).collect())
        .collect()
}

/// Compares every `(g, h) ∈ G × G` against the representative-based table.
fn representative_conflicts(
    group: &FiniteGroup,
    cosets: &CosetDecomposition,
    meridian: usize,
    table: &[Vec<usize>],
) -> (usize, Option<(usize, usize)>) {
    let n = group.order();
    let mut count = 0;
    let mut first = None;
    for g in 0..n {
        for h in 0..n {
            let direct = cosets.coset_of[group.mul(g, group.conjugate(meridian, h))];
            if direct != table[cosets.coset_of[g]][cosets.coset_of[h]] {
                count += 1;
                first.get_or_insert((g, h));
            }
        }
    }
    (count, first)
}

/// Builds the table regardless of whether `m ∈ Z(P)`, reporting what breaks.
pub fn build_coset_table_forced(group: &FiniteGroup, subgroup: &Subgroup, meridian: usize) -> Result<ForcedBuild> {
    check_inputs(group, subgroup, meridian)?;
    let cosets = group.right_cosets(subgroup);
    let table = fill_table(group, &cosets, meridian);
    let (representative_conflicts, first_conflict) = representative_conflicts(group, &cosets, meridian, &table);
    let validation = validate_quandle(&table)?;
    Ok(ForcedBuild {
        central: centrality_witness(group, subgroup, meridian).is_none(),
        table,
        representative_conflicts,
        first_conflict,
        validation,
    })
}

impl<'g> CosetQuandle<'g> {
    /// Builds `(P\G, m)`. Fails with [`Error::CentralityViolation`] unless
    /// `m ∈ Z(P)`.
    pub fn build(group: &'g FiniteGroup, subgroup: &Subgroup, meridian: usize) -> Result<Self> {
        check_inputs(group, subgroup, meridian)?;
        if let Some(witness) = centrality_witness(group, subgroup, meridian) {
            return Err(Error::CentralityViolation { meridian, witness });
        }
        let cosets = group.right_cosets(subgroup);
        let table = fill_table(group, &cosets, meridian);
        let (conflicts, first) = representative_conflicts(group, &cosets, meridian, &table);
        if conflicts > 0 {
            return Err(Error::InvalidQuandle(format!("coset table depends on representatives at {first:?}")));
        }
        let quandle = FiniteQuandle::from_table(table)?;
        let labels = cosets.representatives.iter().map(|&g| format!("P{}", group.label(g))).collect();
        Ok(CosetQuandle { group, subgroup: subgroup.clone(), meridian, cosets, quandle: quandle.with_labels(labels)? })
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn into_quandle(self) -> FiniteQuandle {
        self.quandle
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn meridian(&self) -> usize {
        self.meridian
    }

    pub fn cosets(&self) -> &CosetDecomposition {
        &self.cosets
    }

    /// Index of the base coset `P·e`.
    pub fn base(&self) -> usize {
        0
    }

    /// Right multiplication `Pg ↦ Pgh` as a permutation of coset indices.
    pub fn group_action(&self, h: usize) -> Permutation {
        let images = self.cosets.representatives.iter().map(|&g| self.cosets.coset_of[self.group.mul(g, h)]).collect();
        Permutation::from_images_unchecked(images)
    }

    /// Image of `G` in `Sym(P\G)`, with generator `h` equal to the action of `h`.
    pub fn action_group(&self) -> PermutationGroup {
        PermutationGroup::new(self.cosets.len(), (0..self.group.order()).map(|h| self.group_action(h)).collect())
            .expect("action has the coset count as degree")
    }

    /// Whether every coset is `base·g` for some `g`.
    pub fn check_transitivity(&self) -> bool {
        let mut hit = vec![false; self.cosets.len()];
        for g in 0..self.group.order() {
            hit[self.group_action(g).apply(self.base())] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// `{h ∈ G : Pg·h = Pg}` for the coset with index `coset`.
    pub fn stabilizer_of(&self, coset: usize) -> Result<Subgroup> {
        let Some(&g) = self.cosets.representatives.get(coset) else {
            return Err(Error::MalformedInput(format!("coset index {coset} is out of range")));
        };
        let fixing: Vec<usize> =
            (0..self.group.order()).filter(|&h| self.cosets.coset_of[self.group.mul(g, h)] == coset).collect();
        self.group.subgroup(&fixing)
    }

    /// Verifies, on this instance, the structure behind the isomorphism
    /// `m_Q g ↦ Pg`: the operation is the action of `h⁻¹mh`, coset equality
    /// is the `h = ag` criterion, the action is transitive, and stabilizers
    /// are the conjugates `g⁻¹Pg`.
    pub fn theorem1_selfcheck(&self) -> SelfCheckReport {
        let g = self.group;
        let n = g.order();
        let c = &self.cosets;
        let q = &self.quandle;
        let m = self.meridian;
        let mut checks = Vec::new();

        checks.push(Check::with_detail(
            "validates_as_quandle",
            validate_quandle(q.table()).ok().filter(|r| !r.valid).map(|r| r.summary()),
        ));

        let action_form = (0..n)
            .flat_map(|x| (0..n).map(move |h| (x, h)))
            .find(|&(x, h)| {
                q.op(c.coset_of[x], c.coset_of[h]) != self.group_action(g.conjugate(m, h)).apply(c.coset_of[x])
            })
            .map(|w| format!("mismatch at (g, h) = {w:?}"));
        checks.push(Check::with_detail("operation_is_action_of_conjugate", action_form));

        let coset_criterion = (0..n)
            .flat_map(|x| (0..n).map(move |h| (x, h)))
            .find(|&(x, h)| (c.coset_of[x] == c.coset_of[h]) != self.subgroup.contains(g.mul(h, g.inv(x))))
            .map(|w| format!("criterion fails at (g, h) = {w:?}"));
        checks.push(Check::with_detail("coset_equality_iff_left_factor_in_p", coset_criterion));

        let homomorphism = (0..n)
            .flat_map(|x| (0..n).map(move |h| (x, h)))
            .find(|&(x, h)| self.group_action(x).then(&self.group_action(h)) != self.group_action(g.mul(x, h)))
            .map(|w| format!("action not multiplicative at {w:?}"));
        checks.push(Check::with_detail("action_is_homomorphism", homomorphism));

        checks.push(Check::new("transitive", self.check_transitivity()));

        let base_stab = self.stabilizer_of(self.base()).map(|s| s == self.subgroup).unwrap_or(false);
        checks.push(Check::new("base_stabilizer_is_p", base_stab));

        let conj_stab = (0..n)
            .find(|&x| self.stabilizer_of(c.coset_of[x]).ok() != Some(g.conjugate_subgroup(&self.subgroup, x)))
            .map(|x| format!("stabilizer of coset of {x} is not its conjugate of P"));
        checks.push(Check::with_detail("stabilizers_are_conjugates", conj_stab));

        let columns = (0..n)
            .find(|&h| q.column(c.coset_of[h]) != self.group_action(g.conjugate(m, h)))
            .map(|h| format!("column of coset of {h} differs"));
        checks.push(Check::with_detail("columns_are_conjugate_actions", columns));

        SelfCheckReport { order: q.order(), checks }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfCheckReport {
    pub order: usize,
    pub checks: Vec<Check>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}
