//! Dense matrices over a field.

use crate::polyring::Field;

/// Row-major dense matrix. The column count is kept explicitly so empty
/// matrices still have a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<Vec<E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn zeros(nrows: usize, ncols: usize, zero: E) -> Self {
        Matrix { nrows, ncols, rows: vec![vec![zero; ncols]; nrows] }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        Matrix { nrows: rows.len(), ncols, rows }
    }

    /// Matrix whose columns are the given vectors of length `nrows`.
    pub fn from_columns(cols: &[Vec<E>], nrows: usize, zero: E) -> Self {
        let mut m = Self::zeros(nrows, cols.len(), zero);
        for (c, col) in cols.iter().enumerate() {
            for (r, x) in col.iter().enumerate() {
                m.rows[r][c] = x.clone();
            }
        }
        m
    }

    pub fn transpose(&self, zero: E) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows, zero);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                t.rows[c][r] = x.clone();
            }
        }
        t
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        self.rows.iter().map(|r| r[c].clone()).collect()
    }
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    if m.nrows == 0 || m.ncols == 0 {
        return 0;
    }
    // eliminate along the shorter side
    let mut rows = if m.nrows <= m.ncols { m.clone() } else { m.transpose(field.zero()) };
    let ncols = rows.ncols;
    field.rref(&mut rows.rows, ncols).len()
}

pub fn mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.ncols, b.nrows, "shape mismatch in product");
    let mut out = Matrix::zeros(a.nrows, b.ncols, field.zero());
    for (i, row) in a.rows.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if field.is_zero(x) {
                continue;
            }
            for (j, y) in b.rows[k].iter().enumerate() {
                if !field.is_zero(y) {
                    let t = field.mul(x, y);
                    out.rows[i][j] = field.add(&out.rows[i][j], &t);
                }
            }
        }
    }
    out
}

pub fn is_zero<F: Field>(field: &F, m: &Matrix<F::Elem>) -> bool {
    m.rows.iter().all(|r| r.iter().all(|x| field.is_zero(x)))
}

/// Basis of `{x : m x = 0}`.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let n = m.ncols;
    let mut rows = m.rows.clone();
    let pivots = field.rref(&mut rows, n);
    let mut out = Vec::new();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = field.neg(&rows[r][free]);
        }
        out.push(v);
    }
    out
}

/// Indices of the vectors that are not in the span of the earlier ones.
pub fn independent_prefix_columns<F: Field>(
    field: &F,
    vectors: &[Vec<F::Elem>],
    len: usize,
) -> Vec<usize> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_columns(vectors, len, field.zero());
    let mut rows = m.rows;
    field.rref(&mut rows, vectors.len())
}

/// Some `x` with `a x = b`, if the system is consistent.
pub fn solve<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(a.nrows, b.len());
    let n = a.ncols;
    let mut rows: Vec<Vec<F::Elem>> = a
        .rows
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = field.rref(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![field.zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = rows[r][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{PrimeField, Rationals};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix<BigRational> {
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Rationals.from_i64(x)).collect()).collect(),
            ncols,
        )
    }

    #[test]
    fn rank_and_kernel() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&Rationals, &m), 2);
        let k = kernel(&Rationals, &m);
        assert_eq!(k.len(), 1);
        let col = Matrix::from_columns(&k, 3, Rationals.zero());
        assert!(is_zero(&Rationals, &mul(&Rationals, &m, &col)));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = q(&[&[1, 1], &[1, -1]]);
        let x = solve(&Rationals, &m, &[Rationals.from_i64(3), Rationals.from_i64(1)]).unwrap();
        assert_eq!(x, vec![Rationals.from_i64(2), Rationals.from_i64(1)]);
        let m = q(&[&[1, 1], &[2, 2]]);
        assert!(solve(&Rationals, &m, &[Rationals.from_i64(1), Rationals.from_i64(3)]).is_none());
    }

    #[test]
    fn independent_columns() {
        let f = Rationals;
        let v = |a: i64, b: i64| vec![f.from_i64(a), f.from_i64(b)];
        assert_eq!(independent_prefix_columns(&f, &[v(1, 0), v(2, 0), v(0, 1), v(1, 1)], 2), vec![0, 2]);
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in prop::collection::vec(0u64..7, 12)) {
            let f = PrimeField::new(7).unwrap();
            let rows: Vec<Vec<u64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let m = Matrix::from_rows(rows, 4);
            let k = kernel(&f, &m);
            prop_assert_eq!(rank(&f, &m) + k.len(), 4);
            prop_assert_eq!(rank(&f, &m), rank(&f, &m.transpose(0)));
        }
    }
}
