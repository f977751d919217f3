//! Homomorphism and isomorphism search between finite quandles, and
//! enumeration of all quandles of a given order up to isomorphism.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;

use super::FiniteQuandle;
use crate::error::{Error, Result};
use crate::limits::Budget;
use crate::perm::Permutation;

const UNSET: usize = usize::MAX;

/// Per-element data preserved by isomorphisms: orbit size and the cycle
/// type of the element's column map.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsoProfile {
    pub orbit_size: usize,
    pub column_cycle_type: Vec<usize>,
}

fn profiles(q: &FiniteQuandle) -> Vec<IsoProfile> {
    let mut orbit_size = vec![0; q.order()];
    for orbit in q.orbits() {
        for &a in &orbit {
            orbit_size[a] = orbit.len();
        }
    }
    (0..q.order())
        .map(|a| IsoProfile { orbit_size: orbit_size[a], column_cycle_type: q.column(a).cycle_type() })
        .collect()
}

struct HomSearch<'a> {
    source: &'a FiniteQuandle,
    target: &'a FiniteQuandle,
    /// Allowed images per source element.
    candidates: Vec<Vec<usize>>,
    injective: bool,
    budget: &'a Budget,
    /// Stop after the first solution.
    first_only: bool,
}

impl HomSearch<'_> {
    /// Assigns `f(x) = y` and closes the assignment under `f(a^b) = f(a)^f(b)`.
    /// Returns false on a contradiction.
    fn assign(&self, f: &mut [usize], used: &mut [bool], x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if f[x] != UNSET {
                if f[x] != y {
                    return false;
                }
                continue;
            }
            if !self.candidates[x].contains(&y) {
                return false;
            }
            if self.injective {
                if used[y] {
                    return false;
                }
                used[y] = true;
            }
            f[x] = y;
            for a in 0..self.source.order() {
                let fa = f[a];
                if fa == UNSET {
                    continue;
                }
                queue.push((self.source.op(a, x), self.target.op(fa, y)));
                queue.push((self.source.op(x, a), self.target.op(y, fa)));
            }
        }
        true
    }

    fn run(&self, f: Vec<usize>, used: Vec<bool>, out: &mut Vec<Vec<usize>>) -> Result<()> {
        let Some(x) = f.iter().position(|&v| v == UNSET) else {
            out.push(f);
            return Ok(());
        };
        for &y in &self.candidates[x] {
            self.budget.tick()?;
            let mut f2 = f.clone();
            let mut used2 = used.clone();
            if self.assign(&mut f2, &mut used2, x, y) {
                self.run(f2, used2, out)?;
                if self.first_only && !out.is_empty() {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    /// Branches on the image of element 0 in parallel; results are
    /// concatenated in candidate order, so the output is lexicographic.
    fn solve(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.source.order();
        let m = self.target.order();
        let branches: Vec<Result<Vec<Vec<usize>>>> = self.candidates[0]
            .par_iter()
            .map(|&y| {
                let mut out = Vec::new();
                self.budget.tick()?;
                let mut f = vec![UNSET; n];
                let mut used = vec![false; m];
                if self.assign(&mut f, &mut used, 0, y) {
                    self.run(f, used, &mut out)?;
                }
                Ok(out)
            })
            .collect();
        let mut all = Vec::new();
        for b in branches {
            all.extend(b?);
            if self.first_only && !all.is_empty() {
                all.truncate(1);
                break;
            }
        }
        Ok(all)
    }
}

/// All quandle homomorphisms `source → target`, as image vectors in
/// lexicographic order.
pub fn enumerate_homs(source: &FiniteQuandle, target: &FiniteQuandle, budget: u64) -> Result<Vec<Vec<usize>>> {
    let budget = Budget::new(budget);
    let all: Vec<usize> = (0..target.order()).collect();
    HomSearch {
        source,
        target,
        candidates: vec![all; source.order()],
        injective: false,
        budget: &budget,
        first_only: false,
    }
    .solve()
}

/// Returns an isomorphism `q1 → q2` as an image vector, if one exists.
pub fn are_isomorphic(q1: &FiniteQuandle, q2: &FiniteQuandle) -> Option<Vec<usize>> {
    if q1.order() != q2.order() {
        return None;
    }
    let p1 = profiles(q1);
    let p2 = profiles(q2);
    let sorted = |p: &[IsoProfile]| p.iter().cloned().sorted().collect::<Vec<_>>();
    if sorted(&p1) != sorted(&p2) {
        return None;
    }
    let candidates = p1.iter().map(|pa| (0..q2.order()).filter(|&b| &p2[b] == pa).collect()).collect();
    let budget = Budget::new(u64::MAX);
    let found = HomSearch { source: q1, target: q2, candidates, injective: true, budget: &budget, first_only: true }
        .solve()
        .expect("isomorphism search is unbudgeted");
    found.into_iter().next()
}

/// Lexicographically smallest relabelling of the table, flattened.
pub(crate) fn canonical_form(q: &FiniteQuandle) -> Vec<usize> {
    let n = q.order();
    let mut best: Option<Vec<usize>> = None;
    let mut buf = vec![0; n * n];
    for perm in (0..n).permutations(n) {
        for a in 0..n {
            for b in 0..n {
                buf[perm[a] * n + perm[b]] = perm[q.op(a, b)];
            }
        }
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    best.expect("n ≥ 1")
}

/// Every quandle of order `n` up to isomorphism, each given by its
/// canonical (lexicographically least) table, sorted.
///
/// The search assigns column maps `σ_0, σ_1, …` in turn. Each `σ_b` fixes
/// `b`, and self-distributivity is the condition
/// `σ_{σ_c(b)} = σ_c⁻¹ σ_b σ_c`, checked on every assigned pair.
pub fn enumerate_quandles(n: usize, order_cap: usize) -> Result<Vec<FiniteQuandle>> {
    if n == 0 {
        return Err(Error::MalformedInput("quandle order must be positive".into()));
    }
    if n > order_cap {
        return Err(Error::OrderCapExceeded { order: n, cap: order_cap });
    }
    let columns: Vec<Vec<Permutation>> = (0..n)
        .map(|b| (0..n).permutations(n).filter(|p| p[b] == b).map(Permutation::from_images_unchecked).collect())
        .collect();

    let found: Vec<Vec<Vec<Vec<usize>>>> = columns[0]
        .par_iter()
        .map(|s0| {
            let mut sigma = vec![s0.clone()];
            let mut out = Vec::new();
            extend_columns(n, &columns, &mut sigma, &mut out);
            out
        })
        .collect();

    let canon: BTreeSet<Vec<usize>> =
        found.into_iter().flatten().map(|t| canonical_form(&FiniteQuandle::from_valid_table(t))).collect();
    Ok(canon
        .into_iter()
        .map(|flat| FiniteQuandle::from_valid_table(flat.chunks(n).map(<[usize]>::to_vec).collect()))
        .collect())
}

fn consistent(sigma: &[Permutation]) -> bool {
    let k = sigma.len();
    let new = k - 1;
    for c in 0..k {
        for b in 0..k {
            if b != new && c != new {
                continue;
            }
            let e = sigma[c].apply(b);
            if e < k {
                let expected = sigma[c].inverse().then(&sigma[b]).then(&sigma[c]);
                if sigma[e] != expected {
                    return false;
                }
            }
        }
    }
    // pairs whose image index only now became assigned
    for c in 0..k {
        for b in 0..k {
            if sigma[c].apply(b) == new {
                let expected = sigma[c].inverse().then(&sigma[b]).then(&sigma[c]);
                if sigma[new] != expected {
                    return false;
                }
            }
        }
    }
    true
}

fn extend_columns(
    n: usize,
    columns: &[Vec<Permutation>],
    sigma: &mut Vec<Permutation>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if !consistent(sigma) {
        return;
    }
    if sigma.len() == n {
        out.push((0..n).map(|a| (0..n).map(|b| sigma[b].apply(a)).collect()).collect());
        return;
    }
    for s in &columns[sigma.len()] {
        sigma.push(s.clone());
        extend_columns(n, columns, sigma, out);
        sigma.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::validate_quandle;

    #[test]
    fn homs_between_trivial_quandles() {
        let t2 = FiniteQuandle::trivial(2);
        assert_eq!(enumerate_homs(&t2, &t2, u64::MAX).unwrap().len(), 4);
    }

    #[test]
    fn homs_from_one_point() {
        let q = FiniteQuandle::dihedral(5);
        assert_eq!(enumerate_homs(&FiniteQuandle::trivial(1), &q, u64::MAX).unwrap().len(), 5);
    }

    #[test]
    fn homs_dihedral_three_match_brute_force() {
        let q = FiniteQuandle::dihedral(3);
        let brute: Vec<Vec<usize>> = itertools::repeat_n(0..3, 3)
            .multi_cartesian_product()
            .filter(|f| itertools::iproduct!(0..3, 0..3).all(|(a, b)| f[q.op(a, b)] == q.op(f[a], f[b])))
            .collect();
        assert_eq!(enumerate_homs(&q, &q, u64::MAX).unwrap(), brute);
    }

    #[test]
    fn hom_budget() {
        let q = FiniteQuandle::trivial(4);
        assert!(matches!(enumerate_homs(&q, &q, 10), Err(Error::SearchBudgetExceeded { budget: 10 })));
    }

    #[test]
    fn isomorphism_basics() {
        let d3 = FiniteQuandle::dihedral(3);
        assert_eq!(are_isomorphic(&d3, &d3), Some(vec![0, 1, 2]));
        assert!(are_isomorphic(&d3, &FiniteQuandle::trivial(3)).is_none());
        let shuffled = d3.relabel(&[2, 0, 1]);
        let w = are_isomorphic(&d3, &shuffled).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(w[d3.op(a, b)], shuffled.op(w[a], w[b]));
            }
        }
    }

    /// Independent oracle: every 3×3 table, filtered by the axioms, grouped
    /// by the minimum over all relabellings.
    fn naive_count(n: usize) -> usize {
        let cells = n * n;
        let mut classes = BTreeSet::new();
        for flat in itertools::repeat_n(0..n, cells).multi_cartesian_product() {
            let t: Vec<Vec<usize>> = flat.chunks(n).map(|r| r.to_vec()).collect();
            if !validate_quandle(&t).unwrap().valid {
                continue;
            }
            let mut best = None::<Vec<usize>>;
            for p in (0..n).permutations(n) {
                let mut r = vec![0; cells];
                for a in 0..n {
                    for b in 0..n {
                        r[p[a] * n + p[b]] = p[t[a][b]];
                    }
                }
                if best.as_ref().is_none_or(|x| r < *x) {
                    best = Some(r);
                }
            }
            classes.insert(best.unwrap());
        }
        classes.len()
    }

    #[test]
    fn enumeration_matches_naive_oracle() {
        for n in 1..=3 {
            assert_eq!(enumerate_quandles(n, 5).unwrap().len(), naive_count(n), "order {n}");
        }
        assert_eq!(naive_count(2), 1);
        assert_eq!(naive_count(3), 3);
    }

    #[test]
    fn enumeration_order_four_matches_column_oracle() {
        // oracle: every choice of column permutations fixing their index,
        // filtered by validate_quandle, deduplicated by pairwise isomorphism
        let n = 4;
        let fixing: Vec<Vec<Vec<usize>>> =
            (0..n).map(|b| (0..n).permutations(n).filter(|p| p[b] == b).collect()).collect();
        let mut reps: Vec<FiniteQuandle> = Vec::new();
        for choice in fixing.iter().map(|v| v.iter()).multi_cartesian_product() {
            let t: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| choice[b][a]).collect()).collect();
            if !validate_quandle(&t).unwrap().valid {
                continue;
            }
            let q = FiniteQuandle::from_valid_table(t);
            if !reps.iter().any(|r| are_isomorphic(r, &q).is_some()) {
                reps.push(q);
            }
        }
        assert_eq!(enumerate_quandles(4, 5).unwrap().len(), reps.len());
        assert_eq!(reps.len(), 7);
    }

    #[test]
    fn enumerated_quandles_are_valid_and_distinct() {
        let qs = enumerate_quandles(4, 5).unwrap();
        for q in &qs {
            assert!(validate_quandle(q.table()).unwrap().valid);
        }
        for (i, a) in qs.iter().enumerate() {
            for b in &qs[i + 1..] {
                assert!(are_isomorphic(a, b).is_none());
            }
        }
    }

    #[test]
    fn order_five_count() {
        // known isomorphism-class counts 1, 1, 3, 7, 22
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_quandles(n, 5).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 3, 7, 22]);
    }

    #[test]
    fn order_cap() {
        assert!(matches!(enumerate_quandles(6, 5), Err(Error::OrderCapExceeded { order: 6, cap: 5 })));
    }
}
