//! Coloring counts and meridian-constrained representation counts, and the
//! cross-check that equates them for conjugation quandles.
//!
//! Both counters backtrack over generators in a fixed order, propagate
//! every relation whose unknowns become determined, and branch on the
//! first generator in parallel. Branch totals are summed in branch order,
//! so counts do not depend on the thread count.

use rayon::prelude::*;
use serde::Serialize;

use crate::coset::CosetQuandle;
use crate::diagram::{wirtinger_group, wirtinger_quandle, Diagram, PeripheralData, QuandlePresentation};
use crate::error::{Error, Result};
use crate::fp::{GroupPresentation, Letter, Word};
use crate::group::{FiniteGroup, Subgroup};
use crate::limits::Budget;
use crate::quandle::FiniteQuandle;

const UNSET: usize = usize::MAX;

struct Colorer<'a> {
    p: &'a QuandlePresentation,
    target: &'a FiniteQuandle,
    /// Relations mentioning each generator.
    touching: Vec<Vec<usize>>,
    budget: &'a Budget,
}

impl Colorer<'_> {
    /// Sets `c[x] = v` and closes under every relation with enough known
    /// entries. Returns false on a contradiction.
    fn assign(&self, c: &mut [usize], x: usize, v: usize) -> bool {
        let mut queue = vec![(x, v)];
        while let Some((x, v)) = queue.pop() {
            if c[x] != UNSET {
                if c[x] != v {
                    return false;
                }
                continue;
            }
            c[x] = v;
            for &ri in &self.touching[x] {
                let r = self.p.relations[ri];
                let (out, inp, over) = (c[r.output], c[r.input], c[r.over]);
                if over == UNSET {
                    continue;
                }
                if inp != UNSET {
                    queue.push((r.output, self.target.op_signed(inp, over, r.sign)));
                } else if out != UNSET {
                    queue.push((r.input, self.target.op_signed(out, over, -r.sign)));
                }
            }
        }
        true
    }

    fn count_from(&self, c: &mut [usize]) -> Result<u64> {
        let Some(x) = c.iter().position(|&v| v == UNSET) else {
            debug_assert!(self.p.is_coloring(self.target, c));
            return Ok(1);
        };
        let mut total = 0;
        for v in 0..self.target.order() {
            self.budget.tick()?;
            let mut next = c.to_vec();
            if self.assign(&mut next, x, v) {
                total += self.count_from(&mut next)?;
            }
        }
        Ok(total)
    }
}

/// Number of colorings of the presented quandle by `target`: assignments
/// of target elements to generators satisfying every relation.
pub fn count_colorings(p: &QuandlePresentation, target: &FiniteQuandle, budget: u64) -> Result<u64> {
    if p.generators == 0 {
        return Ok(1);
    }
    let mut touching = vec![Vec::new(); p.generators];
    for (i, r) in p.relations.iter().enumerate() {
        for g in [r.output, r.input, r.over] {
            if !touching[g].contains(&i) {
                touching[g].push(i);
            }
        }
    }
    let budget = Budget::new(budget);
    let colorer = Colorer { p, target, touching, budget: &budget };
    let branches: Vec<Result<u64>> = (0..target.order())
        .into_par_iter()
        .map(|v| {
            colorer.budget.tick()?;
            let mut c = vec![UNSET; p.generators];
            if colorer.assign(&mut c, 0, v) {
                colorer.count_from(&mut c)
            } else {
                Ok(0)
            }
        })
        .collect();
    branches.into_iter().sum()
}

struct RepCounter<'a> {
    p: &'a GroupPresentation,
    g: &'a FiniteGroup,
    touching: Vec<Vec<usize>>,
    budget: &'a Budget,
}

impl RepCounter<'_> {
    fn eval(&self, word: &[Letter], images: &[usize]) -> usize {
        word.iter().fold(self.g.identity(), |acc, l| {
            let x = images[l.generator];
            self.g.mul(acc, if l.inverse { self.g.inv(x) } else { x })
        })
    }

    /// Solves `relator = 1` for its only unknown generator when that
    /// generator occurs exactly once. `Err(())` means the relator is fully
    /// assigned and fails.
    fn propagate(&self, relator: &Word, images: &[usize]) -> std::result::Result<Option<(usize, usize)>, ()> {
        let mut unknown = None;
        let mut occurrences = 0;
        for l in relator {
            if images[l.generator] == UNSET {
                if unknown.is_some_and(|u| u != l.generator) {
                    return Ok(None);
                }
                unknown = Some(l.generator);
                occurrences += 1;
            }
        }
        let Some(x) = unknown else {
            return if self.eval(relator, images) == self.g.identity() { Ok(None) } else { Err(()) };
        };
        if occurrences != 1 {
            return Ok(None);
        }
        // relator = A x^e B, so x^e = A⁻¹ B⁻¹
        let at = relator.iter().position(|l| l.generator == x).expect("unknown occurs");
        let a = self.eval(&relator[..at], images);
        let b = self.eval(&relator[at + 1..], images);
        let xe = self.g.mul(self.g.inv(a), self.g.inv(b));
        Ok(Some((x, if relator[at].inverse { self.g.inv(xe) } else { xe })))
    }

    fn assign(&self, images: &mut [usize], x: usize, v: usize) -> bool {
        let mut queue = vec![(x, v)];
        while let Some((x, v)) = queue.pop() {
            if images[x] != UNSET {
                if images[x] != v {
                    return false;
                }
                continue;
            }
            images[x] = v;
            for &ri in &self.touching[x] {
                match self.propagate(&self.p.relators()[ri], images) {
                    Err(()) => return false,
                    Ok(Some(forced)) => queue.push(forced),
                    Ok(None) => {}
                }
            }
        }
        true
    }

    fn count_from(&self, images: &mut [usize]) -> Result<u64> {
        let Some(x) = images.iter().position(|&v| v == UNSET) else {
            return Ok(1);
        };
        let mut total = 0;
        for v in 0..self.g.order() {
            self.budget.tick()?;
            let mut next = images.to_vec();
            if self.assign(&mut next, x, v) {
                total += self.count_from(&mut next)?;
            }
        }
        Ok(total)
    }
}

/// Number of homomorphisms from the presented group to `target` sending
/// generator `meridian` into `cls`.
pub fn count_group_reps(
    p: &GroupPresentation,
    target: &FiniteGroup,
    meridian: usize,
    cls: &[usize],
    budget: u64,
) -> Result<u64> {
    if meridian >= p.generator_count() {
        return Err(Error::MalformedInput(format!("meridian generator {meridian} is out of range")));
    }
    let mut cls = cls.to_vec();
    cls.sort_unstable();
    cls.dedup();
    if let Some(&x) = cls.iter().find(|&&x| x >= target.order()) {
        return Err(Error::MalformedInput(format!("element {x} is out of range")));
    }
    let mut touching = vec![Vec::new(); p.generator_count()];
    for (i, r) in p.relators().iter().enumerate() {
        for l in r {
            if !touching[l.generator].contains(&i) {
                touching[l.generator].push(i);
            }
        }
    }
    let budget = Budget::new(budget);
    let counter = RepCounter { p, g: target, touching, budget: &budget };
    let branches: Vec<Result<u64>> = cls
        .par_iter()
        .map(|&v| {
            counter.budget.tick()?;
            let mut images = vec![UNSET; p.generator_count()];
            if counter.assign(&mut images, meridian, v) {
                counter.count_from(&mut images)
            } else {
                Ok(0)
            }
        })
        .collect();
    branches.into_iter().sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TargetInfo {
    pub group_order: usize,
    pub element: usize,
    pub element_label: String,
    pub class_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub colorings: u64,
    pub reps: u64,
    #[serde(rename = "match")]
    pub matched: bool,
    pub target: TargetInfo,
    pub diagram: Option<String>,
}

/// Counts colorings by the conjugation quandle on the class of `m` and
/// representations sending the meridian into that class. The two agree
/// whenever both presentations come from the same diagram.
pub fn crosscheck_conjugation(
    pq: &QuandlePresentation,
    pg: &GroupPresentation,
    peripheral: &PeripheralData,
    group: &FiniteGroup,
    m: usize,
    budget: u64,
) -> Result<CrosscheckReport> {
    let quandle = FiniteQuandle::conjugation(group, m)?;
    let class = group.conjugacy_class(m);
    let colorings = count_colorings(pq, &quandle, budget)?;
    let reps = count_group_reps(pg, group, peripheral.meridian, &class, budget)?;
    Ok(CrosscheckReport {
        colorings,
        reps,
        matched: colorings == reps,
        target: TargetInfo {
            group_order: group.order(),
            element: m,
            element_label: group.label(m),
            class_size: class.len(),
        },
        diagram: None,
    })
}

/// [`crosscheck_conjugation`] on both Wirtinger presentations of `d`.
pub fn crosscheck_diagram(d: &Diagram, group: &FiniteGroup, m: usize, budget: u64) -> Result<CrosscheckReport> {
    let (pg, peripheral) = wirtinger_group(d);
    let mut report = crosscheck_conjugation(&wirtinger_quandle(d), &pg, &peripheral, group, m, budget)?;
    report.diagram = Some(d.to_string());
    Ok(report)
}

/// Colorings by a general coset quandle `(P\G, m)` set beside the
/// conjugation-side counts. Nothing here is asserted: the relation between
/// the counts for arbitrary `P` is what the report is for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetExperiment {
    pub subgroup_order: usize,
    pub centralizer_order: usize,
    pub coset_colorings: u64,
    pub conjugation_colorings: u64,
    pub reps: u64,
    pub coset_equals_reps: bool,
}

pub fn coset_experiment(
    d: &Diagram,
    group: &FiniteGroup,
    subgroup: &Subgroup,
    m: usize,
    budget: u64,
) -> Result<CosetExperiment> {
    let cq = CosetQuandle::build(group, subgroup, m)?;
    let coset_colorings = count_colorings(&wirtinger_quandle(d), cq.quandle(), budget)?;
    let cross = crosscheck_diagram(d, group, m, budget)?;
    Ok(CosetExperiment {
        subgroup_order: subgroup.order(),
        centralizer_order: group.centralizer(m).order(),
        coset_colorings,
        conjugation_colorings: cross.colorings,
        reps: cross.reps,
        coset_equals_reps: coset_colorings == cross.reps,
    })
}
