//! Dense matrices over a generic scalar with exact elimination.
//!
//! Everything here is plain Gaussian elimination with first-nonzero pivoting;
//! for `BigRational` scalars intermediate rows are rescaled to coprime
//! integers, which keeps entry growth bounded on the large cochain systems.

use crate::error::LieError;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Self { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![S::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self::new(rows, cols, data)
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        Self::new(nrows, ncols, data)
    }

    /// Build a matrix from integer entries; handy for fixtures and tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| S::from_i64(v).unwrap()).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row_slice(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() + other.get(r, c).clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() - other.get(r, c).clone()
        })
    }

    pub fn scaled(&self, factor: &S) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() * factor.clone()
        })
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "apply shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for (a, x) in self.row_slice(r).iter().zip(v.iter()) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> S {
        assert!(self.is_square());
        let mut t = S::zero();
        for i in 0..self.rows {
            t = t + self.get(i, i).clone();
        }
        t
    }

    /// Flatten row-major into a single vector (used to treat maps as vectors).
    pub fn flatten(&self) -> Vec<S> {
        self.data.clone()
    }

    pub fn from_flat(n: usize, flat: &[S]) -> Self {
        assert_eq!(flat.len(), n * n);
        Self::new(n, n, flat.to_vec())
    }

    fn to_row_vecs(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row_slice(r).to_vec()).collect()
    }

    /// Exact rank via forward elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_row_vecs();
        echelon(&mut rows, self.cols, false).len()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut rows = self.to_row_vecs();
        let pivots = echelon(&mut rows, self.cols, true);
        (Self::from_rows_padded(rows, self.cols), pivots)
    }

    fn from_rows_padded(rows: Vec<Vec<S>>, cols: usize) -> Self {
        if rows.is_empty() {
            Self::zero(0, cols)
        } else {
            Self::from_rows(rows)
        }
    }

    /// Basis of the right null space. `rank + kernel.len() == cols`.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let mut rows = self.to_row_vecs();
        let pivots = echelon(&mut rows, self.cols, true);
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -rows[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = rhs`, if consistent (free variables zero).
    pub fn solve(&self, rhs: &[S]) -> Option<Vec<S>> {
        assert_eq!(rhs.len(), self.rows);
        let mut rows: Vec<Vec<S>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row_slice(r).to_vec();
                row.push(rhs[r].clone());
                row
            })
            .collect();
        let pivots = echelon(&mut rows, self.cols + 1, true);
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = rows[r][self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<S>> = (0..n)
            .map(|r| {
                let mut row = self.row_slice(r).to_vec();
                row.extend((0..n).map(|c| if c == r { S::one() } else { S::zero() }));
                row
            })
            .collect();
        let pivots = echelon(&mut rows, 2 * n, true);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| rows[r][n + c].clone()))
    }

    /// Characteristic polynomial `det(x I - self)`, monic, via the
    /// division-free Faddeev-LeVerrier recurrence.
    pub fn char_poly(&self) -> Result<Poly<S>, LieError> {
        if !self.is_square() {
            return Err(LieError::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![S::zero(); n + 1];
        coeffs[n] = S::one();
        let mut m = self.clone();
        for k in 1..=n {
            let c = -(m.trace() / S::from_usize(k).unwrap());
            coeffs[n - k] = c.clone();
            if k < n {
                let mut shifted = m;
                for i in 0..n {
                    let v = shifted.get(i, i).clone() + c.clone();
                    shifted.set(i, i, v);
                }
                m = self.matmul(&shifted);
            }
        }
        Ok(Poly::new(coeffs))
    }

    /// Monic minimal polynomial, as the lcm of the local annihilators of the
    /// standard basis vectors (Krylov subspaces).
    pub fn min_poly(&self) -> Result<Poly<S>, LieError> {
        if !self.is_square() {
            return Err(LieError::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut result = Poly::one();
        for i in 0..n {
            let mut e = vec![S::zero(); n];
            e[i] = S::one();
            if result.apply_to_vector(self, &e).iter().all(S::is_zero) {
                continue;
            }
            let local = self.local_min_poly(e);
            result = result.lcm(&local);
        }
        Ok(result)
    }

    fn local_min_poly(&self, start: Vec<S>) -> Poly<S> {
        let n = self.rows;
        let mut krylov: Vec<Vec<S>> = vec![start.clone()];
        let mut cur = start;
        loop {
            cur = self.apply(&cur);
            let cols = Matrix::from_fn(n, krylov.len(), |r, c| krylov[c][r].clone());
            if let Some(rep) = cols.solve(&cur) {
                let mut coeffs: Vec<S> = rep.into_iter().map(|c| -c).collect();
                coeffs.push(S::one());
                return Poly::new(coeffs);
            }
            krylov.push(cur.clone());
        }
    }

    /// Inertia `(positive, negative, zero)` of a symmetric matrix, by exact
    /// symmetric congruence diagonalization.
    pub fn signature(&self) -> Result<(usize, usize, usize), LieError> {
        if !self.is_square() {
            return Err(LieError::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_symmetric() {
            return Err(LieError::NonSymmetricMatrix);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut pos = 0;
        let mut neg = 0;
        for k in 0..n {
            if a.get(k, k).is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                    a.symmetric_swap(k, j);
                } else if let Some((i, j)) = find_offdiag(&a, k) {
                    // all remaining diagonal entries vanish; fold the
                    // off-diagonal pivot onto the diagonal (char != 2)
                    a.symmetric_row_col_add(i, j);
                    if i != k {
                        a.symmetric_swap(k, i);
                    }
                } else {
                    break;
                }
            }
            let pivot = a.get(k, k).clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone() / pivot.clone();
                for c in 0..n {
                    let v = a.get(i, c).clone() - f.clone() * a.get(k, c).clone();
                    a.set(i, c, v);
                }
                for r in 0..n {
                    let v = a.get(r, i).clone() - f.clone() * a.get(r, k).clone();
                    a.set(r, i, v);
                }
            }
        }
        Ok((pos, neg, n - pos - neg))
    }

    fn symmetric_swap(&mut self, i: usize, j: usize) {
        let n = self.cols;
        for c in 0..n {
            let (a, b) = (self.get(i, c).clone(), self.get(j, c).clone());
            self.set(i, c, b);
            self.set(j, c, a);
        }
        for r in 0..n {
            let (a, b) = (self.get(r, i).clone(), self.get(r, j).clone());
            self.set(r, i, b);
            self.set(r, j, a);
        }
    }

    fn symmetric_row_col_add(&mut self, i: usize, j: usize) {
        let n = self.cols;
        for c in 0..n {
            let v = self.get(i, c).clone() + self.get(j, c).clone();
            self.set(i, c, v);
        }
        for r in 0..n {
            let v = self.get(r, i).clone() + self.get(r, j).clone();
            self.set(r, i, v);
        }
    }
}

fn find_offdiag<S: Scalar>(a: &Matrix<S>, k: usize) -> Option<(usize, usize)> {
    let n = a.rows();
    for i in k..n {
        for j in i + 1..n {
            if !a.get(i, j).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// In-place elimination. Returns pivot columns; `reduced` additionally
/// normalizes pivots to one and clears entries above them.
fn echelon<S: Scalar>(rows: &mut [Vec<S>], cols: usize, reduced: bool) -> Vec<usize> {
    let m = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..m {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone() / rows[r][c].clone();
            subtract_scaled(rows, i, r, c, &factor);
            S::reduce_row(&mut rows[i]);
        }
        pivots.push(c);
        r += 1;
    }
    if reduced {
        for (r, &c) in pivots.iter().enumerate().rev() {
            let pivot = rows[r][c].clone();
            if !pivot.is_one() {
                for v in rows[r].iter_mut() {
                    if !v.is_zero() {
                        *v = v.clone() / pivot.clone();
                    }
                }
            }
            for i in 0..r {
                if rows[i][c].is_zero() {
                    continue;
                }
                let factor = rows[i][c].clone();
                subtract_scaled(rows, i, r, c, &factor);
            }
        }
    }
    pivots
}

fn subtract_scaled<S: Scalar>(rows: &mut [Vec<S>], dst: usize, src: usize, from: usize, f: &S) {
    let (a, b) = if dst < src {
        let (lo, hi) = rows.split_at_mut(src);
        (&mut lo[dst], &hi[0][..])
    } else {
        let (lo, hi) = rows.split_at_mut(dst);
        (&mut hi[0], &lo[src][..])
    };
    for (x, y) in a.iter_mut().zip(b.iter()).skip(from) {
        if !y.is_zero() {
            *x = x.clone() - f.clone() * y.clone();
        }
    }
}
