//! Signed Gauss codes for classical, virtual and welded knots and arcs, and
//! the Wirtinger quandle and group presentations read from them.
//!
//! A code is a sequence of passes `O<id><sign>` / `U<id><sign>` met while
//! walking the strand. Virtual crossings are never written. Headers `arc;`
//! and `flavor=classical|virtual|welded;` may precede the passes, and `#`
//! starts a comment that runs to the end of the line.
//!
//! Arcs run from one under-pass to the next. With under-passes at sequence
//! positions `u_0 < … < u_{c−1}`, arc `i` is the arc arriving at `u_i`. In
//! a closed diagram the last arc wraps around to arc 0; an arc diagram has
//! `c + 1` arcs, the first and last ending at the free ends. Arc 0 contains
//! the start of the sequence and carries the meridian.
//!
//! A `+` crossing is one where the under-strand passes right to left
//! beneath the over-strand. There the outgoing under-arc is the incoming
//! one acted on by the over-arc, `x_out = x_in ^ x_over`; at a `−` crossing
//! `x_out = x_in ^{x_over, −1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::{GroupPresentation, Letter, Word};
use crate::quandle::FiniteQuandle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagramKind {
    Closed,
    Arc,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    #[default]
    Classical,
    Virtual,
    Welded,
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "classical" => Ok(Flavor::Classical),
            "virtual" => Ok(Flavor::Virtual),
            "welded" => Ok(Flavor::Welded),
            other => Err(format!("unknown flavor `{other}`")),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Classical => "classical",
            Flavor::Virtual => "virtual",
            Flavor::Welded => "welded",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strand {
    Over,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pass {
    pub crossing: u64,
    pub strand: Strand,
    /// `+1` or `−1`.
    pub sign: i8,
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.strand == Strand::Over { 'O' } else { 'U' };
        let sign = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{s}{}{sign}", self.crossing)
    }
}

/// A validated Gauss code: every crossing id occurs once over and once
/// under, with the same sign on both passes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    kind: DiagramKind,
    flavor: Flavor,
    passes: Vec<Pass>,
}

impl Diagram {
    pub fn new(kind: DiagramKind, flavor: Flavor, passes: Vec<Pass>) -> Result<Self> {
        check_pairing(&passes)?;
        Ok(Diagram { kind, flavor, passes })
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn passes(&self) -> &[Pass] {
        &self.passes
    }

    pub fn crossing_count(&self) -> usize {
        self.passes.len() / 2
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.passes.iter().filter(|p| p.strand == Strand::Under).map(|p| p.sign as i64).sum()
    }

    /// Number of Wirtinger generators.
    pub fn arc_count(&self) -> usize {
        match self.kind {
            DiagramKind::Closed => self.crossing_count().max(1),
            DiagramKind::Arc => self.crossing_count() + 1,
        }
    }

    /// The same closed diagram read from pass `k` onwards.
    pub fn rotated(&self, k: usize) -> Result<Self> {
        if self.kind != DiagramKind::Closed {
            return Err(Error::MalformedInput("only closed diagrams can be rotated".into()));
        }
        let mut passes = self.passes.clone();
        let len = passes.len();
        if len > 0 {
            passes.rotate_left(k % len);
        }
        Ok(Diagram { passes, ..self.clone() })
    }

    /// Renames crossing ids through `rename`, which must be injective on
    /// the ids in use.
    pub fn relabeled(&self, rename: impl Fn(u64) -> u64) -> Result<Self> {
        let passes = self.passes.iter().map(|p| Pass { crossing: rename(p.crossing), ..*p }).collect();
        Diagram::new(self.kind, self.flavor, passes)
    }

    /// Over-arc index for every pass position, and the under-pass positions.
    fn arc_layout(&self) -> (Vec<usize>, Vec<usize>) {
        let c = self.crossing_count();
        let mut unders_before = 0;
        let mut arc_at = Vec::with_capacity(self.passes.len());
        let mut unders = Vec::with_capacity(c);
        for (pos, p) in self.passes.iter().enumerate() {
            let arc = match self.kind {
                DiagramKind::Closed => unders_before % c,
                DiagramKind::Arc => unders_before,
            };
            arc_at.push(arc);
            if p.strand == Strand::Under {
                unders.push(pos);
                unders_before += 1;
            }
        }
        (arc_at, unders)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.kind == DiagramKind::Arc {
            parts.push("arc;".to_string());
        }
        if self.flavor != Flavor::Classical {
            parts.push(format!("flavor={};", self.flavor));
        }
        parts.extend(self.passes.iter().map(Pass::to_string));
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_gauss(s)
    }
}

fn check_pairing(passes: &[Pass]) -> Result<()> {
    let mut seen: BTreeMap<u64, (Option<i8>, Option<i8>)> = BTreeMap::new();
    for p in passes {
        if p.sign != 1 && p.sign != -1 {
            return Err(Error::Pairing(format!("crossing {} has sign {}", p.crossing, p.sign)));
        }
        let entry = seen.entry(p.crossing).or_default();
        let slot = match p.strand {
            Strand::Over => &mut entry.0,
            Strand::Under => &mut entry.1,
        };
        if slot.replace(p.sign).is_some() {
            let which = if p.strand == Strand::Over { "over" } else { "under" };
            return Err(Error::Pairing(format!("crossing {} has two {which}-passes", p.crossing)));
        }
    }
    for (id, pair) in seen {
        match pair {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Pairing(format!("crossing {id} has different signs on its two passes")))
            }
            (Some(_), Some(_)) => {}
            (None, _) => return Err(Error::Pairing(format!("crossing {id} has no over-pass"))),
            (_, None) => return Err(Error::Pairing(format!("crossing {id} has no under-pass"))),
        }
    }
    Ok(())
}

fn parse_pass(token: &str, position: usize) -> Result<Pass> {
    let err = |message: String| Error::Parse { position, message };
    let bytes = token.as_bytes();
    if bytes.len() < 3 {
        return Err(err(format!("`{token}` is not a pass")));
    }
    let strand = match bytes[0] {
        b'O' => Strand::Over,
        b'U' => Strand::Under,
        _ => return Err(err(format!("`{token}` must start with O or U"))),
    };
    let sign = match bytes[bytes.len() - 1] {
        b'+' => 1,
        b'-' => -1,
        _ => return Err(err(format!("`{token}` must end with + or -"))),
    };
    let digits = &token[1..token.len() - 1];
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(format!("`{token}` has a non-numeric crossing id")));
    }
    let crossing: u64 = digits.parse().map_err(|_| err(format!("crossing id in `{token}` is too large")))?;
    if crossing == 0 {
        return Err(err("crossing ids start at 1".into()));
    }
    Ok(Pass { crossing, strand, sign })
}

/// Parses a signed Gauss code. Error positions count headers and passes
/// from 1.
pub fn parse_gauss(text: &str) -> Result<Diagram> {
    let text: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n");
    let mut segments: Vec<&str> = text.split(';').collect();
    let body = segments.pop().unwrap_or("");

    let mut kind = DiagramKind::Closed;
    let mut flavor = None;
    let mut position = 0;
    for header in segments {
        position += 1;
        let header = header.trim();
        if header == "arc" {
            kind = DiagramKind::Arc;
        } else if header == "closed" {
            kind = DiagramKind::Closed;
        } else if let Some(value) = header.strip_prefix("flavor=") {
            let f = value.trim().parse().map_err(|message| Error::Parse { position, message })?;
            if flavor.replace(f).is_some() {
                return Err(Error::Parse { position, message: "flavor given twice".into() });
            }
        } else {
            return Err(Error::Parse { position, message: format!("unknown header `{header}`") });
        }
    }

    let passes = body
        .split_whitespace()
        .map(|token| {
            position += 1;
            parse_pass(token, position)
        })
        .collect::<Result<Vec<_>>>()?;
    Diagram::new(kind, flavor.unwrap_or_default(), passes)
}

/// `x_output = x_input ^{x_over, sign}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub output: usize,
    pub input: usize,
    pub over: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuandlePresentation {
    pub generators: usize,
    pub relations: Vec<Relation>,
}

impl QuandlePresentation {
    pub fn new(generators: usize, relations: Vec<Relation>) -> Result<Self> {
        for r in &relations {
            if r.output.max(r.input).max(r.over) >= generators {
                return Err(Error::MalformedInput(format!("relation {r:?} uses a missing generator")));
            }
            if r.sign != 1 && r.sign != -1 {
                return Err(Error::MalformedInput(format!("relation {r:?} has an invalid sign")));
            }
        }
        Ok(QuandlePresentation { generators, relations })
    }

    /// Whether `coloring` satisfies every relation in `target`.
    pub fn is_coloring(&self, target: &FiniteQuandle, coloring: &[usize]) -> bool {
        coloring.len() == self.generators
            && self
                .relations
                .iter()
                .all(|r| coloring[r.output] == target.op_signed(coloring[r.input], coloring[r.over], r.sign))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeripheralData {
    pub meridian: usize,
    /// Closed diagrams only.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_word")]
    pub longitude: Option<Word>,
}

fn serialize_word<S: serde::Serializer>(w: &Option<Word>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(w) => s.collect_seq(w.iter().map(|l| (l.generator, l.exponent()))),
        None => s.serialize_none(),
    }
}

/// One relation per crossing, in the order the under-passes are met.
pub fn wirtinger_quandle(d: &Diagram) -> QuandlePresentation {
    let arcs = d.arc_count();
    let c = d.crossing_count();
    let (arc_at, unders) = d.arc_layout();
    let over_pos: BTreeMap<u64, usize> = d
        .passes
        .iter()
        .enumerate()
        .filter(|(_, p)| p.strand == Strand::Over)
        .map(|(pos, p)| (p.crossing, pos))
        .collect();
    let relations = unders
        .iter()
        .enumerate()
        .map(|(i, &pos)| {
            let p = d.passes[pos];
            let output = match d.kind {
                DiagramKind::Closed => (i + 1) % c,
                DiagramKind::Arc => i + 1,
            };
            Relation { output, input: i, over: arc_at[over_pos[&p.crossing]], sign: p.sign }
        })
        .collect();
    QuandlePresentation::new(arcs, relations).expect("arc indices are in range")
}

/// The Wirtinger group: relation `x_k = x_i^{x_j, ε}` becomes the relator
/// `x_k⁻¹ x_j^{−ε} x_i x_j^{ε}`. The longitude is the product of the
/// over-arcs met at under-passes, each to its crossing sign, followed by
/// `meridian^(−writhe)`.
pub fn wirtinger_group(d: &Diagram) -> (GroupPresentation, PeripheralData) {
    let q = wirtinger_quandle(d);
    let relators = q
        .relations
        .iter()
        .map(|r| {
            vec![Letter::inv(r.output), Letter::pow(r.over, -r.sign), Letter::gen(r.input), Letter::pow(r.over, r.sign)]
        })
        .collect();
    let presentation = GroupPresentation::with_count(q.generators, relators).expect("arc indices are in range");
    let longitude = match d.kind {
        DiagramKind::Closed => {
            let mut w: Word = q.relations.iter().map(|r| Letter::pow(r.over, r.sign)).collect();
            let writhe = d.writhe();
            let correction = Letter::pow(0, if writhe > 0 { -1 } else { 1 });
            w.extend(std::iter::repeat_n(correction, writhe.unsigned_abs() as usize));
            Some(crate::fp::free_reduce(&w))
        }
        DiagramKind::Arc => None,
    };
    (presentation, PeripheralData { meridian: 0, longitude })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TargetComparison {
    pub target: usize,
    pub order: usize,
    pub first: u64,
    pub second: u64,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeldedProbe {
    pub comparisons: Vec<TargetComparison>,
    /// True when every target gave equal counts. This is consistent with
    /// equivalence; a single unequal count proves the diagrams differ.
    pub all_equal: bool,
}

/// Compares coloring counts of two diagrams over each target quandle.
pub fn welded_equivalence_probe(
    d1: &Diagram,
    d2: &Diagram,
    targets: &[FiniteQuandle],
    budget: u64,
) -> Result<WeldedProbe> {
    let p1 = wirtinger_quandle(d1);
    let p2 = wirtinger_quandle(d2);
    let comparisons = targets
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let first = crate::invariants::count_colorings(&p1, t, budget)?;
            let second = crate::invariants::count_colorings(&p2, t, budget)?;
            Ok(TargetComparison { target: i, order: t.order(), first, second, equal: first == second })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeldedProbe { all_equal: comparisons.iter().all(|c| c.equal), comparisons })
}
