//! Finitely presented groups: words over signed generators, free reduction,
//! abelianization and coset enumeration.

mod snf;
mod todd_coxeter;

pub use snf::smith_diagonal;
pub use todd_coxeter::{todd_coxeter, CosetTable};

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn gen(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn inv(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }

    /// `gen(g)` for `exponent > 0`, `inv(g)` otherwise.
    pub fn pow(generator: usize, exponent: i8) -> Self {
        Letter { generator, inverse: exponent < 0 }
    }

    pub fn inverted(self) -> Self {
        Letter { inverse: !self.inverse, ..self }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Column of this letter in a coset table: `2g` or `2g + 1`.
    #[inline]
    pub fn column(self) -> usize {
        2 * self.generator + self.inverse as usize
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "x{}^-1", self.generator)
        } else {
            write!(f, "x{}", self.generator)
        }
    }
}

pub type Word = Vec<Letter>;

/// Cancels adjacent `x x⁻¹` pairs until none remain.
pub fn free_reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn invert_word(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| l.inverted()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    /// Relators are freely reduced; a relator that reduces to the empty
    /// word is kept so relator positions stay meaningful.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let g = generators.len();
        for r in &relators {
            if let Some(l) = r.iter().find(|l| l.generator >= g) {
                return Err(Error::MalformedInput(format!(
                    "relator uses generator {} but only {g} exist",
                    l.generator
                )));
            }
        }
        Ok(GroupPresentation { generators, relators: relators.iter().map(|r| free_reduce(r)).collect() })
    }

    /// Generators named `x0, x1, …`.
    pub fn with_count(count: usize, relators: Vec<Word>) -> Result<Self> {
        Self::new((0..count).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Relator × generator matrix of exponent sums.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generator_count()];
                for l in r {
                    row[l.generator] += l.exponent();
                }
                row
            })
            .collect()
    }
}

/// `Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_k` with `t₁ | t₂ | … | t_k`, all `tᵢ > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    pub rank: usize,
    #[serde(serialize_with = "serialize_factors")]
    pub torsion: Vec<BigUint>,
}

fn serialize_factors<S: Serializer>(factors: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(factors.len()))?;
    for f in factors {
        match f.to_u64() {
            Some(v) => seq.serialize_element(&v)?,
            None => seq.serialize_element(&f.to_string())?,
        }
    }
    seq.end()
}

impl AbelianInvariants {
    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(|t| t.to_u64()).collect()
    }
}

/// Abelian invariants from the Smith form of the exponent matrix.
pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let matrix: Vec<Vec<BigInt>> =
        p.exponent_matrix().into_iter().map(|row| row.into_iter().map(BigInt::from).collect()).collect();
    let diagonal = smith_diagonal(matrix, p.generator_count());
    let torsion = diagonal.iter().filter(|d| !d.is_one()).map(|d| d.abs().to_biguint().expect("nonnegative")).collect();
    AbelianInvariants { rank: p.generator_count() - diagonal.len(), torsion }
}
