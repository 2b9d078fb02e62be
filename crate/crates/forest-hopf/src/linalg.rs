//! Exact linear algebra over the integers via fraction-free (Bareiss)
//! elimination: determinants and ranks without any rational arithmetic.

use crate::algebra::Scalar;
use num_traits::{One, Signed, Zero};

/// Determinant of a square integer matrix by Bareiss elimination. All
/// intermediate divisions are exact.
pub fn det(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = 1i32;
    let mut prev = Scalar::one();
    for k in 0..n {
        // row pivoting only; a fully zero column means det = 0
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Scalar::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Rank of a rectangular integer matrix by fraction-free elimination with
/// full pivoting over the remaining block.
pub fn rank(mut m: Vec<Vec<Scalar>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    debug_assert!(m.iter().all(|r| r.len() == cols));
    let mut prev = Scalar::one();
    let mut r = 0usize;
    let mut c = 0usize;
    while r < rows && c < cols {
        let mut pivot = None;
        'search: for j in c..cols {
            for i in r..rows {
                if !m[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(r, pi);
        if pj != c {
            for row in m.iter_mut() {
                row.swap(c, pj);
            }
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][c] = Scalar::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        c += 1;
    }
    r
}

/// An integer row-echelon form supporting exact rational-span membership
/// tests by cross-multiplication. Rows are kept primitive (gcd 1) to bound
/// growth.
pub struct RowSpan {
    cols: usize,
    rows: Vec<Vec<Scalar>>, // each with a leading nonzero entry, pivots strictly increasing
}

impl RowSpan {
    pub fn new(cols: usize) -> Self {
        RowSpan { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn normalize(v: &mut [Scalar]) {
        let mut g = Scalar::zero();
        for x in v.iter() {
            g = gcd(&g, x);
            if g.is_one() {
                return;
            }
        }
        if g.is_zero() || g.is_one() {
            return;
        }
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }

    /// Reduce `v` against the rows; the remainder is zero exactly when `v`
    /// lies in the rational span.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        for row in &self.rows {
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            if v[p].is_zero() {
                continue;
            }
            let a = row[p].clone();
            let b = v[p].clone();
            for j in 0..self.cols {
                v[j] = &v[j] * &a - &row[j] * &b;
            }
            Self::normalize(&mut v);
        }
        v
    }

    pub fn contains(&self, v: Vec<Scalar>) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let rem = self.reduce(v);
        if rem.iter().all(Zero::is_zero) {
            return false;
        }
        let p = rem.iter().position(|x| !x.is_zero()).unwrap();
        let at = self
            .rows
            .iter()
            .position(|r| r.iter().position(|x| !x.is_zero()).unwrap() > p)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, rem);
        true
    }
}

fn gcd(a: &Scalar, b: &Scalar) -> Scalar {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Scalar::from(x)).collect())
            .collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(det(s(&[[1, 1].as_slice(), [1, 0].as_slice()])), Scalar::from(-1));
        assert_eq!(det(s(&[[0, 1].as_slice(), [1, 0].as_slice()])), Scalar::from(-1));
        assert_eq!(
            det(s(&[[2, 0, 0].as_slice(), [0, 3, 0].as_slice(), [0, 0, 5].as_slice()])),
            Scalar::from(30)
        );
        assert_eq!(
            det(s(&[[1, 2].as_slice(), [2, 4].as_slice()])),
            Scalar::from(0)
        );
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(s(&[[1, 2, 3].as_slice(), [2, 4, 6].as_slice()])), 1);
        assert_eq!(rank(s(&[[1, 0].as_slice(), [0, 1].as_slice(), [1, 1].as_slice()])), 2);
        assert_eq!(rank(s(&[[0, 0].as_slice()])), 0);
    }

    #[test]
    fn row_span_membership() {
        let mut span = RowSpan::new(3);
        assert!(span.insert(vec![Scalar::from(2), Scalar::from(4), Scalar::from(0)]));
        assert!(span.insert(vec![Scalar::from(0), Scalar::from(3), Scalar::from(3)]));
        // (1,2,0) is a rational multiple of the first row
        assert!(span.contains(vec![Scalar::from(1), Scalar::from(2), Scalar::from(0)]));
        assert!(span.contains(vec![Scalar::from(2), Scalar::from(7), Scalar::from(3)]));
        assert!(!span.contains(vec![Scalar::from(0), Scalar::from(0), Scalar::from(1)]));
        assert_eq!(span.rank(), 2);
    }
}
