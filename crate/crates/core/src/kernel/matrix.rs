//! Exact linear algebra: dense rank/kernel, sparse rank, and a fraction-free
//! integer rank used to cross-check prime-field computations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::kernel::field::Field;

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    nrows: usize,
    ncols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, nrows: usize, ncols: usize) -> Self {
        Matrix {
            field: field.clone(),
            nrows,
            ncols,
            data: vec![field.zero(); nrows * ncols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            field: field.clone(),
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(field: &F, rows: &[Vec<i64>]) -> Self {
        Self::from_rows(field, rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        (0..self.nrows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect()
    }

    /// Rank and a basis of the right kernel `{v : M v = 0}`, by Gauss-Jordan
    /// elimination to reduced row echelon form.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<F::Elem>>) {
        let f = &self.field;
        let mut a: Vec<Vec<F::Elem>> = (0..self.nrows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            let Some(p) = (r..self.nrows).find(|&i| !f.is_zero(&a[i][c])) else {
                continue;
            };
            a.swap(r, p);
            let inv = f.inv(&a[r][c]).expect("pivot is nonzero");
            for x in a[r].iter_mut() {
                *x = f.mul(x, &inv);
            }
            for i in 0..self.nrows {
                if i != r && !f.is_zero(&a[i][c]) {
                    let factor = a[i][c].clone();
                    #[allow(clippy::needless_range_loop)]
                    for j in c..self.ncols {
                        let t = f.mul(&factor, &a[r][j]);
                        a[i][j] = f.sub(&a[i][j], &t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.nrows {
                break;
            }
        }
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        let kernel = free
            .iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.ncols];
                v[fc] = f.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(&a[row][fc]);
                }
                v
            })
            .collect();
        (rank, kernel)
    }

    pub fn rank(&self) -> usize {
        let rows = (0..self.nrows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !self.field.is_zero(x))
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect();
        sparse_rank(&self.field, rows)
    }
}

/// Sparse vector: (column, nonzero value) pairs sorted by column.
pub type SparseVec<F> = Vec<(usize, <F as Field>::Elem)>;

/// `a - c*b` for sparse vectors.
fn axpy<F: Field>(f: &F, a: &[(usize, F::Elem)], c: &F::Elem, b: &[(usize, F::Elem)]) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, f.neg(&f.mul(c, &b[j].1))));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = f.sub(&a[i].1, &f.mul(c, &b[j].1));
                if !f.is_zero(&v) {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(k, v)| (*k, f.neg(&f.mul(c, v)))));
    out
}

/// Rank of the matrix whose rows are the given sparse vectors, by sparse
/// row echelon reduction. Rows are processed shortest first to limit fill-in.
pub fn sparse_rank<F: Field>(f: &F, mut rows: Vec<SparseVec<F>>) -> usize {
    rows.retain(|r| !r.is_empty());
    rows.sort_by_key(|r| (r[0].0, r.len()));
    let mut pivots: HashMap<usize, SparseVec<F>> = HashMap::new();
    for mut row in rows {
        loop {
            let Some((lead, c)) = row.first().cloned() else { break };
            match pivots.get(&lead) {
                Some(p) => row = axpy(f, &row, &c, p),
                None => {
                    let inv = f.inv(&c).expect("nonzero lead");
                    for (_, v) in row.iter_mut() {
                        *v = f.mul(v, &inv);
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank of an integer matrix over the rationals, by fraction-free (Bareiss)
/// elimination; all intermediate values stay integral.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{PrimeField, Rationals};

    #[test]
    fn identity_has_full_rank() {
        let m = Matrix::identity(&Rationals, 3);
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!(rank, 3);
        assert!(kernel.is_empty());
    }

    #[test]
    fn zero_matrix_kernel() {
        let m = Matrix::zeros(&PrimeField::default(), 2, 5);
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!((rank, kernel.len()), (0, 5));
    }

    #[test]
    fn rank_one_by_hand() {
        let q = Rationals;
        let m = Matrix::from_i64_rows(&q, &[vec![1, 2], vec![2, 4]]);
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!(rank, 1);
        assert_eq!(kernel, vec![vec![q.from_i64(-2), q.from_i64(1)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn bareiss_matches_rational_rank() {
        let rows = vec![
            vec![2, 4, 6].into_iter().map(BigInt::from).collect(),
            vec![1, 3, 5].into_iter().map(BigInt::from).collect(),
            vec![3, 7, 11].into_iter().map(BigInt::from).collect(),
        ];
        assert_eq!(bareiss_rank(&rows), 2);
    }
}
