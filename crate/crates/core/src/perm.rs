//! Permutations of `0..degree` and the finite groups they generate.
//!
//! Permutations act on the right: `p.then(q)` applies `p` first, then `q`.
//! This matches the right action of a group on cosets and of `Adconj(Q)` on
//! a quandle.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::DEFAULT_ELEMENT_CAP;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    /// Builds a permutation from its image list, checking that it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return Err(Error::MalformedInput(format!("image {x} of point {i} is out of range for degree {n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::MalformedInput(format!("point {x} is hit twice")));
            }
        }
        Ok(Permutation(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.0[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle lengths in non-increasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A permutation group given by generators, with its element set computed on
/// demand by product closure.
#[derive(Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    element_cap: usize,
    elements: OnceLock<Vec<Permutation>>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        let elements = OnceLock::new();
        if let Some(e) = self.elements.get() {
            let _ = elements.set(e.clone());
        }
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            element_cap: self.element_cap,
            elements,
        }
    }
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::MalformedInput(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        Ok(PermutationGroup { degree, generators, element_cap: DEFAULT_ELEMENT_CAP, elements: OnceLock::new() })
    }

    pub fn with_element_cap(mut self, cap: usize) -> Self {
        self.element_cap = cap;
        self.elements = OnceLock::new();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All group elements, sorted lexicographically by image list.
    pub fn elements(&self) -> Result<&[Permutation]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let closed = self.closure()?;
        Ok(self.elements.get_or_init(|| closed))
    }

    fn closure(&self) -> Result<Vec<Permutation>> {
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= self.element_cap {
                        return Err(Error::ElementCapExceeded { cap: self.element_cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        Ok(self.elements()?.binary_search(p).is_ok())
    }

    /// Same element set (generators may differ).
    pub fn same_elements(&self, other: &PermutationGroup) -> Result<bool> {
        Ok(self.degree == other.degree && self.elements()? == other.elements()?)
    }

    /// Orbit of `point` under the generators, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut stack = vec![point];
        seen[point] = true;
        let mut orbit = vec![point];
        while let Some(x) = stack.pop() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    stack.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbit partition of `0..degree`, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if assigned[p] {
                continue;
            }
            let orbit = self.orbit(p);
            for &x in &orbit {
                assigned[x] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// Elements fixing `point`, sorted.
    pub fn stabilizer(&self, point: usize) -> Result<Vec<Permutation>> {
        Ok(self.elements()?.iter().filter(|p| p.apply(point) == point).cloned().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = p(&[1, 0, 2]);
        let b = p(&[0, 2, 1]);
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn symmetric_group_closure() {
        let g = PermutationGroup::new(3, vec![p(&[1, 0, 2]), p(&[1, 2, 0])]).unwrap();
        assert_eq!(g.order().unwrap(), 6);
        assert!(g.is_transitive());
        assert_eq!(g.stabilizer(0).unwrap().len(), 2);
        assert_eq!(g.elements().unwrap()[0], Permutation::identity(3));
    }

    #[test]
    fn trivial_generators() {
        let g = PermutationGroup::new(4, vec![Permutation::identity(4)]).unwrap();
        assert_eq!(g.order().unwrap(), 1);
        assert_eq!(g.orbits().len(), 4);
        let empty = PermutationGroup::new(2, vec![]).unwrap();
        assert_eq!(empty.order().unwrap(), 1);
    }

    #[test]
    fn element_cap_is_enforced() {
        let g = PermutationGroup::new(5, vec![p(&[1, 0, 2, 3, 4]), p(&[1, 2, 3, 4, 0])]).unwrap().with_element_cap(50);
        assert!(matches!(g.order(), Err(Error::ElementCapExceeded { cap: 50 })));
    }

    #[test]
    fn cycle_type_of_product() {
        assert_eq!(p(&[1, 2, 0, 4, 3, 5]).cycle_type(), vec![3, 2, 1]);
    }
}
