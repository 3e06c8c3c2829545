//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn from_rows(data: Vec<Vec<BigInt>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &BigInt) {
        self.data[i][j] += v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    /// Non-zero invariant factors `d₁ | d₂ | …`, all positive. Their count
    /// is the rank.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut diag = diagonalize(self.data.clone(), self.cols);
        // (a, b) -> (gcd, lcm) until the divisibility chain holds
        for i in 0..diag.len() {
            for j in i + 1..diag.len() {
                let g = diag[i].gcd(&diag[j]);
                if g != diag[i] {
                    let l = diag[i].lcm(&diag[j]);
                    diag[i] = g;
                    diag[j] = l;
                }
            }
        }
        diag
    }

    pub fn rank(&self) -> usize {
        diagonalize(self.data.clone(), self.cols).len()
    }
}

/// Reduce to a diagonal by unimodular row and column operations; returns the
/// absolute values of the non-zero diagonal entries.
fn diagonalize(mut a: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        let Some((pi, pj)) = min_entry(&a, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        move_to_pivot(&mut a, t, pi, pj);
        loop {
            let pivot = a[t][t].clone();
            let mut clean = true;
            let pivot_row: Vec<(usize, BigInt)> = (t + 1..cols)
                .filter(|&j| !a[t][j].is_zero())
                .map(|j| (j, a[t][j].clone()))
                .collect();
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &pivot;
                if !q.is_zero() {
                    a[i][t] -= &q * &pivot;
                    for (j, v) in &pivot_row {
                        a[i][*j] -= &q * v;
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &pivot;
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        if !row[t].is_zero() {
                            let d = &q * &row[t];
                            row[j] -= d;
                        }
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            let cands = (t..rows)
                .map(|i| (i, t))
                .chain((t + 1..cols).map(|j| (t, j)));
            let (pi, pj) = min_entry(&a, cands).expect("pivot row or column is non-zero");
            move_to_pivot(&mut a, t, pi, pj);
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

fn min_entry(
    a: &[Vec<BigInt>],
    cands: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, j) in cands {
        let v = &a[i][j];
        if v.is_zero() {
            continue;
        }
        if best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
            best = Some((i, j));
            if v.abs() == 1.into() {
                break;
            }
        }
    }
    best
}

fn move_to_pivot(a: &mut [Vec<BigInt>], t: usize, i: usize, j: usize) {
    a.swap(t, i);
    if j != t {
        for row in a.iter_mut() {
            row.swap(t, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn known_forms() {
        assert_eq!(m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]).invariant_factors(), [2, 6, 12].map(BigInt::from));
        assert_eq!(m(&[&[2, 0], &[0, 3]]).invariant_factors(), [1, 6].map(BigInt::from));
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).invariant_factors(), [BigInt::from(1)]);
        assert_eq!(IntMatrix::zeros(0, 3).rank(), 0);
    }
}
