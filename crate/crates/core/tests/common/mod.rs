//! Brute-force oracles shared by the integration tests. None of these call
//! into the search or presentation code they are used to check.

#![allow(dead_code, clippy::needless_range_loop)]

use itertools::Itertools;
use qf_core::group::FiniteGroup;

/// Checks the three quandle axioms on every element triple.
pub fn axioms_hold(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    if t.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return false;
    }
    let idempotent = (0..n).all(|a| t[a][a] == a);
    let invertible = (0..n).all(|b| (0..n).map(|a| t[a][b]).sorted().eq(0..n));
    let distributive = itertools::iproduct!(0..n, 0..n, 0..n).all(|(a, b, c)| t[t[a][b]][c] == t[t[a][c]][t[b][c]]);
    idempotent && invertible && distributive
}

/// Crossing relation `x_out = x_in ^{x_over, sign}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rel {
    pub out: usize,
    pub inp: usize,
    pub over: usize,
    pub sign: i8,
}

/// Reads a Gauss code by walking it: a new arc starts after every
/// under-pass, and each crossing's over-arc is the arc current at its
/// over-pass. Returns the arc count and the relations in walk order.
pub fn arc_walk(code: &str) -> (usize, Vec<Rel>) {
    let body = code.rsplit(';').next().unwrap();
    let is_arc = code.split(';').rev().skip(1).any(|h| h.trim() == "arc");
    let tokens: Vec<(char, u64, i8)> = body
        .split_whitespace()
        .map(|t| {
            let kind = t.chars().next().unwrap();
            let sign = if t.ends_with('+') { 1 } else { -1 };
            (kind, t[1..t.len() - 1].parse().unwrap(), sign)
        })
        .collect();
    let crossings = tokens.len() / 2;
    if crossings == 0 {
        return (1, vec![]);
    }
    let arcs = if is_arc { crossings + 1 } else { crossings };
    let mut current = 0usize;
    let mut over_arc = std::collections::HashMap::new();
    let mut unders = Vec::new();
    for &(kind, id, sign) in &tokens {
        if kind == 'O' {
            over_arc.insert(id, current);
        } else {
            let next = if is_arc { current + 1 } else { (current + 1) % arcs };
            unders.push((id, sign, current, next));
            current = next;
        }
    }
    let rels = unders.into_iter().map(|(id, sign, inp, out)| Rel { out, inp, over: over_arc[&id], sign }).collect();
    (arcs, rels)
}

pub fn quandle_op(t: &[Vec<usize>], a: usize, b: usize, sign: i8) -> usize {
    if sign > 0 {
        t[a][b]
    } else {
        (0..t.len()).find(|&x| t[x][b] == a).unwrap()
    }
}

pub fn brute_colorings(code: &str, t: &[Vec<usize>]) -> u64 {
    let (arcs, rels) = arc_walk(code);
    itertools::repeat_n(0..t.len(), arcs)
        .multi_cartesian_product()
        .filter(|c| rels.iter().all(|r| c[r.out] == quandle_op(t, c[r.inp], c[r.over], r.sign)))
        .count() as u64
}

/// Homomorphisms from the Wirtinger group with arc 0 sent into `class`:
/// every crossing needs `x_out = x_over^{−sign} x_in x_over^{sign}`.
pub fn brute_reps(code: &str, g: &FiniteGroup, class: &[usize]) -> u64 {
    let (arcs, rels) = arc_walk(code);
    let conj = |x: usize, y: usize, sign: i8| {
        let (a, b) = if sign > 0 { (g.inv(y), y) } else { (y, g.inv(y)) };
        g.mul(g.mul(a, x), b)
    };
    itertools::repeat_n(0..g.order(), arcs)
        .multi_cartesian_product()
        .filter(|img| class.contains(&img[0]))
        .filter(|img| rels.iter().all(|r| img[r.out] == conj(img[r.inp], img[r.over], r.sign)))
        .count() as u64
}

/// Number of orbits of the column maps, by union-find.
pub fn orbit_count(t: &[Vec<usize>]) -> usize {
    let n = t.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (find(&mut parent, a), find(&mut parent, t[a][b]));
            parent[x] = y;
        }
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

fn det(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            (if j % 2 == 0 { 1 } else { -1 }) * m[0][j] * det(&minor)
        })
        .sum()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Free rank and nontrivial invariant factors of `Z^cols / rows`, from
/// gcds of minors.
pub fn abelian_invariants(m: &[Vec<i64>], cols: usize) -> (usize, Vec<i64>) {
    let rows = m.len();
    let mut factors = Vec::new();
    let mut prev = 1;
    for k in 1..=rows.min(cols) {
        let mut d = 0;
        for rs in (0..rows).combinations(k) {
            for cs in (0..cols).combinations(k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                d = gcd(d, det(&sub));
            }
        }
        if d == 0 {
            break;
        }
        factors.push(d / prev);
        prev = d;
    }
    let rank = cols - factors.len();
    (rank, factors.into_iter().filter(|&f| f != 1).collect())
}

/// Exponent-sum matrix of the Wirtinger relators, one row per crossing.
pub fn wirtinger_exponents(code: &str) -> (usize, Vec<Vec<i64>>) {
    let (arcs, rels) = arc_walk(code);
    let rows = rels
        .iter()
        .map(|r| {
            let mut row = vec![0; arcs];
            row[r.out] -= 1;
            row[r.inp] += 1;
            row
        })
        .collect();
    (arcs, rows)
}
