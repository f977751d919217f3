//! Smith normal form over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Nonzero diagonal entries of the Smith normal form of a `rows × cols`
/// matrix, positive and in divisibility order. `matrix` may have zero rows;
/// `cols` gives the width in that case.
pub fn smith_diagonal(mut a: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let rows = a.len();
    debug_assert!(a.iter().all(|r| r.len() == cols));
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the trailing block
        let Some((pi, pj)) = smallest_entry(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let d = &q * &a[i][t];
                    a[i][j] -= d;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a remainder is now smaller than the pivot; move it in
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            // pivot must divide the whole trailing block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
        t += 1;
    }
    diagonal
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let consider = |best: &mut (usize, usize), i: usize, j: usize| {
        let v = &a[i][j];
        if !v.is_zero() && (a[best.0][best.1].is_zero() || v.abs() < a[best.0][best.1].abs()) {
            *best = (i, j);
        }
    };
    for i in t..a.len() {
        consider(&mut best, i, t);
    }
    for j in t..a[t].len() {
        consider(&mut best, t, j);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum()
    }

    /// Oracle: invariant factors from determinantal divisors,
    /// `d_k = gcd of all k×k minors`, `s_k = d_k / d_{k−1}`.
    fn determinantal_factors(m: &[Vec<i64>]) -> Vec<i64> {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut out = Vec::new();
        let mut prev = 1i64;
        for k in 1..=rows.min(cols) {
            let mut g = 0i64;
            for rs in (0..rows).combinations(k) {
                for cs in (0..cols).combinations(k) {
                    let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                    g = g.gcd(&det(&sub));
                }
            }
            if g == 0 {
                break;
            }
            out.push(g / prev);
            prev = g;
        }
        out
    }

    #[test]
    fn small_examples() {
        assert_eq!(smith_diagonal(big(&[vec![2, 4], vec![6, 8]]), 2), vec![BigInt::from(2), BigInt::from(4)]);
        assert!(smith_diagonal(vec![], 3).is_empty());
        assert!(smith_diagonal(big(&[vec![0, 0]]), 2).is_empty());
        // trefoil Wirtinger exponent matrix: each relator x_k⁻¹ x_j⁻¹ x_i x_j
        let trefoil = [vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]];
        assert_eq!(determinantal_factors(&trefoil), vec![1, 1]);
        assert_eq!(smith_diagonal(big(&trefoil), 3), vec![BigInt::from(1), BigInt::from(1)]);
    }

    proptest! {
        #[test]
        fn matches_determinantal_divisors(
            m in (1usize..4, 1usize..4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..7, c), r))
        ) {
            let cols = m[0].len();
            let got: Vec<i64> = smith_diagonal(big(&m), cols).iter().map(|x| i64::try_from(x).unwrap()).collect();
            prop_assert_eq!(got, determinantal_factors(&m));
        }
    }
}
