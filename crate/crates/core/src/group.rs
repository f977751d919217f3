//! Finite groups stored as full multiplication tables, with subgroups,
//! centers, conjugation and right cosets.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup};
use crate::quandle::check_square;
use crate::report::{Axiom, ValidationReport, Violation};

/// Largest group order stored as a table.
pub const MAX_GROUP_ORDER: usize = 255;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    /// Present when the group was built from permutations: element `i` is `perms[i]`.
    perms: Option<Vec<Permutation>>,
}

/// Checks associativity, identity and inverses exhaustively.
pub fn validate_group(mult: &[Vec<usize>]) -> Result<ValidationReport> {
    let n = check_square(mult)?;
    let mut violations = Vec::new();

    'triples: for a in 0..n {
        for b in 0..n {
            let ab = mult[a][b];
            for c in 0..n {
                if mult[ab][c] != mult[a][mult[b][c]] {
                    violations.push(Violation { axiom: Axiom::Associativity, witness: vec![a, b, c] });
                    break 'triples;
                }
            }
        }
    }

    match find_identity(mult) {
        None => violations.push(Violation { axiom: Axiom::Identity, witness: vec![] }),
        Some(e) => {
            if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| mult[a][b] == e && mult[b][a] == e)) {
                violations.push(Violation { axiom: Axiom::Inverse, witness: vec![a] });
            }
        }
    }
    Ok(ValidationReport::from_violations(violations))
}

fn find_identity(mult: &[Vec<usize>]) -> Option<usize> {
    let n = mult.len();
    (0..n).find(|&e| (0..n).all(|a| mult[e][a] == a && mult[a][e] == a))
}

impl FiniteGroup {
    pub fn from_table(mult: Vec<Vec<usize>>) -> Result<Self> {
        if mult.len() > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge { order: mult.len(), max: MAX_GROUP_ORDER });
        }
        let report = validate_group(&mult)?;
        if !report.valid {
            return Err(Error::InvalidGroup(report.summary()));
        }
        Ok(Self::from_valid_table(mult, None))
    }

    fn from_valid_table(mult: Vec<Vec<usize>>, perms: Option<Vec<Permutation>>) -> Self {
        let n = mult.len();
        let identity = find_identity(&mult).expect("validated");
        let inverse = (0..n).map(|a| (0..n).find(|&b| mult[a][b] == identity).expect("validated")).collect();
        FiniteGroup { mult, identity, inverse, perms }
    }

    /// Closes permutation generators into a table. Elements are numbered in
    /// lexicographic order of their image lists, so the identity is 0, and
    /// `a·b` applies `a` first.
    pub fn from_permutations(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        let group = PermutationGroup::new(degree, generators)?.with_element_cap(MAX_GROUP_ORDER);
        let elements = match group.elements() {
            Ok(e) => e.to_vec(),
            Err(Error::ElementCapExceeded { .. }) => {
                return Err(Error::GroupTooLarge { order: MAX_GROUP_ORDER + 1, max: MAX_GROUP_ORDER })
            }
            Err(e) => return Err(e),
        };
        let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mult = elements.iter().map(|a| elements.iter().map(|b| index[&a.then(b)]).collect()).collect();
        Ok(Self::from_valid_table(mult, Some(elements)))
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(Permutation::from_images_unchecked(t));
            gens.push(Permutation::from_images_unchecked((0..n).map(|i| (i + 1) % n).collect()));
        }
        Self::from_permutations(n.max(1), gens).expect("symmetric group within cap")
    }

    pub fn alternating(n: usize) -> Self {
        // 3-cycles (0 1 k) generate A_n
        let gens = (2..n)
            .map(|k| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                Permutation::from_images_unchecked(p)
            })
            .collect();
        Self::from_permutations(n.max(1), gens).expect("alternating group within cap")
    }

    /// `Z_n` with element `i` standing for `i mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!((1..=MAX_GROUP_ORDER).contains(&n));
        Self::from_valid_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(), None)
    }

    /// Symmetries of the regular `n`-gon, of order `2n`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3);
        let rotation = (0..n).map(|i| (i + 1) % n).collect();
        let reflection = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(
            n,
            vec![Permutation::from_images_unchecked(rotation), Permutation::from_images_unchecked(reflection)],
        )
        .expect("dihedral group within cap")
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`; element `2u + s` is `(−1)^s·u`
    /// for the units `u ∈ (1, i, j, k)`.
    pub fn quaternion() -> Self {
        // unit products: (sign, unit)
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mult = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (s, u) = UNIT[a / 2][b / 2];
                        2 * u + (s + a % 2 + b % 2) % 2
                    })
                    .collect()
            })
            .collect();
        Self::from_table(mult).expect("quaternion table is a group")
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn permutation(&self, a: usize) -> Option<&Permutation> {
        self.perms.as_ref().map(|p| &p[a])
    }

    pub fn permutations(&self) -> Option<&[Permutation]> {
        self.perms.as_deref()
    }

    /// Index of the element with the given image list, for permutation groups.
    pub fn element_of_images(&self, images: &[usize]) -> Option<usize> {
        self.perms.as_ref()?.iter().position(|p| p.images() == images)
    }

    /// Display label: the image list for permutation groups, else the index.
    pub fn label(&self, a: usize) -> String {
        match &self.perms {
            Some(p) => format!("{:?}", p[a].images()),
            None => a.to_string(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.commute(a, b)))
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// `h⁻¹ g h`
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// `{h⁻¹ m h : h ∈ G}`, sorted.
    pub fn conjugacy_class(&self, m: usize) -> Vec<usize> {
        let class: BTreeSet<usize> = (0..self.order()).map(|h| self.conjugate(m, h)).collect();
        class.into_iter().collect()
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let n = self.order();
        let mut member = vec![false; n];
        member[self.identity] = true;
        let mut elements = vec![self.identity];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            i += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elements.push(y);
                }
            }
        }
        Subgroup::from_members(member)
    }

    /// Builds a subgroup from an element list, checking closure.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        let n = self.order();
        if let Some(&x) = elements.iter().find(|&&x| x >= n) {
            return Err(Error::MalformedInput(format!("element {x} is out of range")));
        }
        let generated = self.subgroup_generated(elements);
        let given: BTreeSet<usize> = elements.iter().copied().collect();
        if generated.elements().len() != given.len() || !generated.elements().iter().all(|x| given.contains(x)) {
            return Err(Error::MalformedInput("element set is not closed under products".into()));
        }
        Ok(generated)
    }

    /// `Z(P) = {a ∈ P : ap = pa for all p ∈ P}`.
    pub fn center_of_subgroup(&self, p: &Subgroup) -> Subgroup {
        let mut member = vec![false; self.order()];
        for &a in p.elements() {
            member[a] = p.elements().iter().all(|&x| self.commute(a, x));
        }
        Subgroup::from_members(member)
    }

    pub fn centralizer(&self, m: usize) -> Subgroup {
        Subgroup::from_members((0..self.order()).map(|h| self.commute(m, h)).collect())
    }

    /// Smallest normal subgroup containing `elements`.
    pub fn normal_closure(&self, elements: &[usize]) -> Subgroup {
        let conjugates: BTreeSet<usize> = elements
            .iter()
            .flat_map(|&m| (0..self.order()).map(move |h| (m, h)))
            .map(|(m, h)| self.conjugate(m, h))
            .collect();
        self.subgroup_generated(&conjugates.into_iter().collect::<Vec<_>>())
    }

    /// `g⁻¹ P g`
    pub fn conjugate_subgroup(&self, p: &Subgroup, g: usize) -> Subgroup {
        let mut member = vec![false; self.order()];
        for &x in p.elements() {
            member[self.conjugate(x, g)] = true;
        }
        Subgroup::from_members(member)
    }

    /// Right cosets `Pg`. The identity's coset is index 0; the remaining
    /// cosets are numbered by their smallest element, which is also their
    /// representative.
    pub fn right_cosets(&self, p: &Subgroup) -> CosetDecomposition {
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut representatives = Vec::new();
        let order = std::iter::once(self.identity).chain((0..n).filter(|&g| g != self.identity));
        for g in order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let index = representatives.len();
            representatives.push(g);
            for &a in p.elements() {
                coset_of[self.mul(a, g)] = index;
            }
        }
        CosetDecomposition { representatives, coset_of }
    }

    /// Every subgroup, sorted by order and then by element list.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let trivial = self.subgroup_generated(&[]);
        found.insert(trivial.elements().to_vec());
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for g in 0..self.order() {
                if h.contains(g) {
                    continue;
                }
                let mut gens = h.elements().to_vec();
                gens.push(g);
                let k = self.subgroup_generated(&gens);
                if found.insert(k.elements().to_vec()) {
                    frontier.push(k);
                }
            }
        }
        let mut out: Vec<Subgroup> = found
            .into_iter()
            .map(|e| {
                let mut member = vec![false; self.order()];
                e.iter().for_each(|&x| member[x] = true);
                Subgroup::from_members(member)
            })
            .collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<usize>,
    member: Vec<bool>,
}

impl Subgroup {
    fn from_members(member: Vec<bool>) -> Self {
        let elements = member.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
        Subgroup { elements, member }
    }

    /// Sorted element indices.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Order of the ambient group.
    pub fn parent_order(&self) -> usize {
        self.member.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.member.get(g).copied().unwrap_or(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    /// Representative of each coset; `representatives[0]` is the identity.
    pub representatives: Vec<usize>,
    /// Coset index of every group element.
    pub coset_of: Vec<usize>,
}

impl CosetDecomposition {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}
