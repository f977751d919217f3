//! HLT coset enumeration with immediate coincidence processing.

use super::{GroupPresentation, Letter, Word};
use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup};

const UNDEF: usize = usize::MAX;

/// A complete coset table. Coset 0 is the subgroup itself; column `2g`
/// holds the action of generator `g`, column `2g + 1` its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    rows: Vec<Vec<usize>>,
    generators: usize,
    subgroup_generators: Vec<Word>,
}

impl CosetTable {
    /// Number of cosets, i.e. the subgroup index.
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn subgroup_generators(&self) -> &[Word] {
        &self.subgroup_generators
    }

    #[inline]
    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        self.rows[coset][letter.column()]
    }

    pub fn trace(&self, coset: usize, word: &[Letter]) -> usize {
        word.iter().fold(coset, |c, &l| self.act(c, l))
    }

    pub fn generator_permutation(&self, generator: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.index()).map(|c| self.act(c, Letter::gen(generator))).collect())
    }

    /// The permutation representation on cosets, one generator per
    /// presentation generator.
    pub fn to_permutation_group(&self) -> PermutationGroup {
        PermutationGroup::new(self.index(), (0..self.generators).map(|g| self.generator_permutation(g)).collect())
            .expect("degree is the index")
    }
}

struct Enumerator {
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    columns: usize,
    cap: usize,
}

#[inline]
fn inverse_column(c: usize) -> usize {
    c ^ 1
}

impl Enumerator {
    fn new(generators: usize, cap: usize) -> Self {
        let columns = 2 * generators;
        Enumerator { table: vec![vec![UNDEF; columns]], parent: vec![0], columns, cap }
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, coset: usize, column: usize) -> Result<()> {
        if self.table.len() >= self.cap {
            return Err(Error::CosetCapExceeded { cap: self.cap });
        }
        let new = self.table.len();
        self.table.push(vec![UNDEF; self.columns]);
        self.parent.push(new);
        self.table[coset][column] = new;
        self.table[new][inverse_column(column)] = coset;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = c;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let ra = self.rep(a);
        let rb = self.rep(b);
        if ra != rb {
            let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[drop] = keep;
            queue.push(drop);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let dead = queue[i];
            i += 1;
            for x in 0..self.columns {
                let target = self.table[dead][x];
                if target == UNDEF {
                    continue;
                }
                let xi = inverse_column(x);
                if self.table[target][xi] == dead {
                    self.table[target][xi] = UNDEF;
                }
                let mu = self.rep(dead);
                let nu = self.rep(target);
                if self.table[mu][x] != UNDEF {
                    let other = self.table[mu][x];
                    self.merge(nu, other, &mut queue);
                } else if self.table[nu][xi] != UNDEF {
                    let other = self.table[nu][xi];
                    self.merge(mu, other, &mut queue);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][xi] = mu;
                }
            }
        }
    }

    /// Scans `word` from `start`, defining new cosets until it closes.
    fn scan_and_fill(&mut self, start: usize, word: &[Letter]) -> Result<()> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = start;
        let mut b = start;
        let mut i = 0isize;
        let mut j = word.len() as isize - 1;
        let col = |k: isize| word[k as usize].column();
        loop {
            while i <= j && self.table[f][col(i)] != UNDEF {
                f = self.table[f][col(i)];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][inverse_column(col(j))] != UNDEF {
                b = self.table[b][inverse_column(col(j))];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = col(i);
                self.table[f][x] = b;
                self.table[b][inverse_column(x)] = f;
                return Ok(());
            }
            self.define(f, col(i))?;
        }
    }

    /// Renumbers live cosets in order of first appearance.
    fn compact(mut self) -> Vec<Vec<usize>> {
        let n = self.table.len();
        let mut new_index = vec![UNDEF; n];
        let mut live = Vec::new();
        for c in 0..n {
            if self.is_live(c) {
                new_index[c] = live.len();
                live.push(c);
            }
        }
        live.iter()
            .map(|&c| {
                (0..self.columns)
                    .map(|x| {
                        let t = self.table[c][x];
                        new_index[self.rep(t)]
                    })
                    .collect()
            })
            .collect()
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup_generators`.
/// Fails with [`Error::CosetCapExceeded`] once more than `max_cosets`
/// cosets have been defined.
pub fn todd_coxeter(
    presentation: &GroupPresentation,
    subgroup_generators: &[Word],
    max_cosets: usize,
) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::MalformedInput("coset cap must be positive".into()));
    }
    let generators = presentation.generator_count();
    if let Some(l) = subgroup_generators.iter().flatten().find(|l| l.generator >= generators) {
        return Err(Error::MalformedInput(format!("subgroup word uses unknown generator {}", l.generator)));
    }
    let relators: Vec<&Word> = presentation.relators().iter().filter(|r| !r.is_empty()).collect();
    let mut e = Enumerator::new(generators, max_cosets);

    for w in subgroup_generators {
        let w = super::free_reduce(w);
        e.scan_and_fill(0, &w)?;
    }

    let mut alpha = 0;
    while alpha < e.table.len() {
        for r in &relators {
            if !e.is_live(alpha) {
                break;
            }
            e.scan_and_fill(alpha, r)?;
        }
        if e.is_live(alpha) {
            for x in 0..e.columns {
                if e.table[alpha][x] == UNDEF {
                    e.define(alpha, x)?;
                }
            }
        }
        alpha += 1;
    }

    Ok(CosetTable { rows: e.compact(), generators, subgroup_generators: subgroup_generators.to_vec() })
}
