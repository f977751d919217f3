//! Finite quandles stored as dense operation tables.
//!
//! Elements are `0..n`; `table[a][b]` holds `a^b`. A table is a quandle when
//! it is idempotent (`a^a = a`), every column map `a ↦ a^b` is a bijection,
//! and the operation is right self-distributive: `(a^b)^c = (a^c)^(b^c)`.

mod search;

pub use search::{are_isomorphic, enumerate_homs, enumerate_quandles, IsoProfile};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::{Permutation, PermutationGroup};
use crate::report::{Axiom, ValidationReport, Violation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    table: Vec<Vec<usize>>,
    /// `inverse[c][b]` is the unique `a` with `a^b = c`.
    inverse: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// Checks that `table` is square with entries in range.
pub(crate) fn check_square(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!("row {i} has {} entries, expected {n}", row.len())));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return Err(Error::MalformedTable(format!("entry {x} in row {i} is out of range")));
        }
    }
    Ok(n)
}

/// Exhaustively checks the three quandle axioms, reporting the
/// lexicographically first witness for each violated axiom.
pub fn validate_quandle(table: &[Vec<usize>]) -> Result<ValidationReport> {
    let n = check_square(table)?;
    let mut violations = Vec::new();

    if let Some(a) = (0..n).find(|&a| table[a][a] != a) {
        violations.push(Violation { axiom: Axiom::Idempotence, witness: vec![a] });
    }

    'columns: for b in 0..n {
        let mut preimage = vec![usize::MAX; n];
        for a in 0..n {
            let c = table[a][b];
            if preimage[c] != usize::MAX {
                violations.push(Violation { axiom: Axiom::LeftInvertibility, witness: vec![b, preimage[c], a] });
                break 'columns;
            }
            preimage[c] = a;
        }
    }

    'triples: for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[table[a][c]][table[b][c]] {
                    violations.push(Violation { axiom: Axiom::SelfDistributivity, witness: vec![a, b, c] });
                    break 'triples;
                }
            }
        }
    }

    Ok(ValidationReport::from_violations(violations))
}

impl FiniteQuandle {
    /// Validates `table` and wraps it.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let report = validate_quandle(&table)?;
        if !report.valid {
            return Err(Error::InvalidQuandle(report.summary()));
        }
        Ok(Self::from_valid_table(table))
    }

    pub(crate) fn from_valid_table(table: Vec<Vec<usize>>) -> Self {
        let n = table.len();
        let mut inverse = vec![vec![0; n]; n];
        for (a, row) in table.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                inverse[c][b] = a;
            }
        }
        FiniteQuandle { table, inverse, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::MalformedInput(format!(
                "{} labels for a quandle of order {}",
                labels.len(),
                self.order()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    /// `a^b`
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// The unique `a` with `a^b = c`.
    #[inline]
    pub fn left_div(&self, c: usize, b: usize) -> usize {
        self.inverse[c][b]
    }

    /// `a^b` for `sign > 0`, the inverse operation otherwise.
    #[inline]
    pub fn op_signed(&self, a: usize, b: usize, sign: i8) -> usize {
        if sign > 0 {
            self.op(a, b)
        } else {
            self.left_div(a, b)
        }
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The column map `σ_b : a ↦ a^b`.
    pub fn column(&self, b: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.order()).map(|a| self.table[a][b]).collect())
    }

    /// `a^b = a` everywhere.
    pub fn is_trivial(&self) -> bool {
        self.table.iter().enumerate().all(|(a, row)| row.iter().all(|&x| x == a))
    }

    /// `a^b = a` for all a, b.
    pub fn trivial(n: usize) -> Self {
        assert!(n >= 1, "quandle order must be positive");
        Self::from_valid_table((0..n).map(|a| vec![a; n]).collect())
    }

    /// The dihedral quandle `a^b = 2b − a mod n`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1, "quandle order must be positive");
        Self::from_valid_table((0..n).map(|a| (0..n).map(|b| (2 * b + n - a) % n).collect()).collect())
    }

    /// The conjugacy class of `class_rep` in `group` with `x^y = y⁻¹xy`.
    /// Element `i` is the `i`-th smallest class member.
    pub fn conjugation(group: &FiniteGroup, class_rep: usize) -> Result<Self> {
        if class_rep >= group.order() {
            return Err(Error::MalformedInput(format!(
                "element {class_rep} is out of range for a group of order {}",
                group.order()
            )));
        }
        let class = group.conjugacy_class(class_rep);
        let index_of = |g: usize| class.binary_search(&g).expect("class is closed under conjugation");
        let table = class.iter().map(|&x| class.iter().map(|&y| index_of(group.conjugate(x, y))).collect()).collect();
        let labels = class.iter().map(|g| group.label(*g)).collect();
        Self::from_table(table)?.with_labels(labels)
    }

    /// The group generated by the column maps `σ_b`, with generator `b` equal to `σ_b`.
    pub fn inner_group(&self) -> PermutationGroup {
        PermutationGroup::new(self.order(), (0..self.order()).map(|b| self.column(b)).collect())
            .expect("columns have the quandle's degree")
    }

    /// Orbit partition under the inner group, ordered by smallest member.
    ///
    /// Computed directly from the table by closing each element under
    /// `a ↦ a^b`; it agrees with `inner_group().orbits()`.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut orbit_of = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            orbit_of[start] = id;
            let mut members = vec![start];
            let mut i = 0;
            while i < members.len() {
                let a = members[i];
                i += 1;
                for &c in &self.table[a] {
                    if orbit_of[c] == usize::MAX {
                        orbit_of[c] = id;
                        members.push(c);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Applies the element relabelling `a ↦ perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteQuandle {
        let n = self.order();
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a]][perm[b]] = perm[self.table[a][b]];
            }
        }
        FiniteQuandle::from_valid_table(table)
    }
}
