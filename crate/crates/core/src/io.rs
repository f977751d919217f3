//! JSON file formats for quandles, groups, presentations and coset
//! sidecars.

use serde::{Deserialize, Serialize};

use crate::coset::CosetQuandle;
use crate::error::{Error, Result};
use crate::fp::{GroupPresentation, Letter, Word};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::quandle::FiniteQuandle;

/// `{"order": n, "table": [[...]], "labels": [...]?}`, with `table[a][b] = a^b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuandleFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl QuandleFile {
    /// Checks the declared order against the table shape, without
    /// checking the axioms.
    pub fn checked_table(&self) -> Result<&[Vec<usize>]> {
        if self.order != self.table.len() {
            return Err(Error::MalformedTable(format!(
                "order is {} but the table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        crate::quandle::check_square(&self.table)?;
        Ok(&self.table)
    }

    pub fn into_quandle(self) -> Result<FiniteQuandle> {
        self.checked_table()?;
        let q = FiniteQuandle::from_table(self.table)?;
        match self.labels {
            Some(l) => q.with_labels(l),
            None => Ok(q),
        }
    }
}

impl From<&FiniteQuandle> for QuandleFile {
    fn from(q: &FiniteQuandle) -> Self {
        QuandleFile { order: q.order(), table: q.table().to_vec(), labels: q.labels().map(<[String]>::to_vec) }
    }
}

pub fn quandle_from_json(text: &str) -> Result<FiniteQuandle> {
    serde_json::from_str::<QuandleFile>(text)?.into_quandle()
}

pub fn quandle_to_json(q: &FiniteQuandle) -> String {
    serde_json::to_string(&QuandleFile::from(q)).expect("quandle serializes")
}

/// Either a multiplication table or permutation generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Table { order: usize, mult: Vec<Vec<usize>> },
    Permutations { degree: usize, perm_gens: Vec<Vec<usize>> },
}

impl GroupFile {
    pub fn into_group(self) -> Result<FiniteGroup> {
        match self {
            GroupFile::Table { order, mult } => {
                if order != mult.len() {
                    return Err(Error::MalformedTable(format!(
                        "order is {order} but the table has {} rows",
                        mult.len()
                    )));
                }
                FiniteGroup::from_table(mult)
            }
            GroupFile::Permutations { degree, perm_gens } => {
                let gens = perm_gens
                    .into_iter()
                    .map(|g| {
                        if g.len() != degree {
                            return Err(Error::MalformedInput(format!(
                                "generator {g:?} does not have degree {degree}"
                            )));
                        }
                        Permutation::from_images(g)
                    })
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::from_permutations(degree, gens)
            }
        }
    }
}

pub fn group_from_json(text: &str) -> Result<FiniteGroup> {
    serde_json::from_str::<GroupFile>(text)?.into_group()
}

/// `{"generators": ["x1", ...], "relators": [["x1", "x2^-1", ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<String>>,
}

impl PresentationFile {
    pub fn into_presentation(self) -> Result<GroupPresentation> {
        let relators = self.relators.iter().map(|r| parse_word(&self.generators, r)).collect::<Result<Vec<_>>>()?;
        GroupPresentation::new(self.generators, relators)
    }
}

impl From<&GroupPresentation> for PresentationFile {
    fn from(p: &GroupPresentation) -> Self {
        PresentationFile {
            generators: p.generators().to_vec(),
            relators: p.relators().iter().map(|r| format_word(p.generators(), r)).collect(),
        }
    }
}

/// Reads `name` / `name^-1` tokens against a list of generator names.
pub fn parse_word(generators: &[String], tokens: &[impl AsRef<str>]) -> Result<Word> {
    tokens
        .iter()
        .map(|t| {
            let t = t.as_ref();
            let (name, inverse) = match t.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (t, false),
            };
            let g = generators
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| Error::MalformedInput(format!("unknown generator `{name}`")))?;
            Ok(Letter { generator: g, inverse })
        })
        .collect()
}

pub fn format_word(generators: &[String], word: &[Letter]) -> Vec<String> {
    word.iter()
        .map(|l| {
            let name = &generators[l.generator];
            if l.inverse {
                format!("{name}^-1")
            } else {
                name.clone()
            }
        })
        .collect()
}

pub fn presentation_from_json(text: &str) -> Result<GroupPresentation> {
    serde_json::from_str::<PresentationFile>(text)?.into_presentation()
}

pub fn presentation_to_json(p: &GroupPresentation) -> String {
    serde_json::to_string(&PresentationFile::from(p)).expect("presentation serializes")
}

/// Maps each coset index of a coset quandle to its representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetSidecar {
    pub group_order: usize,
    pub subgroup: Vec<usize>,
    pub meridian: usize,
    pub representatives: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representative_labels: Option<Vec<String>>,
}

impl From<&CosetQuandle<'_>> for CosetSidecar {
    fn from(cq: &CosetQuandle<'_>) -> Self {
        let g = cq.group();
        let reps = cq.cosets().representatives.clone();
        CosetSidecar {
            group_order: g.order(),
            subgroup: cq.subgroup().elements().to_vec(),
            meridian: cq.meridian(),
            representative_labels: g.permutations().map(|_| reps.iter().map(|&r| g.label(r)).collect()),
            representatives: reps,
        }
    }
}
