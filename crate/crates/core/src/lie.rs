//! Structure-constant Lie algebras and their basic structural invariants.

use std::collections::BTreeMap;

use crate::error::LieError;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Lie algebra presented by structure constants on a fixed basis.
///
/// Only pairs `i < j` are stored; antisymmetry is structural. The Jacobi
/// identity is *not* a construction invariant: validation is explicit via
/// [`StructureConstants::validated`], so near-Lie data (e.g. a mistyped
/// input file) can still be inspected and diagnosed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants<S> {
    dim: usize,
    brackets: BTreeMap<(usize, usize), Vec<S>>,
}

impl<S: Scalar> StructureConstants<S> {
    /// The abelian algebra of the given dimension.
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Set `[e_i, e_j]` to the given coordinate vector. Indices in either
    /// order; the stored key is normalized to `i < j`.
    pub fn set_bracket(&mut self, i: usize, j: usize, coeffs: Vec<S>) {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        assert_ne!(i, j, "self-bracket must be zero");
        assert_eq!(coeffs.len(), self.dim, "coefficient vector length");
        let (key, coeffs) = if i < j {
            ((i, j), coeffs)
        } else {
            ((j, i), coeffs.into_iter().map(|c| -c).collect())
        };
        if coeffs.iter().all(S::is_zero) {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, coeffs);
        }
    }

    /// Stored nonzero brackets, keyed by `i < j`.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &[S])> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    /// Coordinates of `[e_i, e_j]` for arbitrary index order.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<S> {
        if i == j {
            return vec![S::zero(); self.dim];
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        match self.brackets.get(&key) {
            None => vec![S::zero(); self.dim],
            Some(v) if flip => v.iter().map(|c| -c.clone()).collect(),
            Some(v) => v.clone(),
        }
    }

    /// Coefficient of `e_k` in `[e_i, e_j]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> S {
        if i == j {
            return S::zero();
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        match self.brackets.get(&key) {
            None => S::zero(),
            Some(v) => {
                if flip {
                    -v[k].clone()
                } else {
                    v[k].clone()
                }
            }
        }
    }

    /// Bilinear antisymmetric expansion of `[x, y]`.
    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vec<S>, LieError> {
        if x.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = vec![S::zero(); self.dim];
        for (&(i, j), coeffs) in &self.brackets {
            // [x, y] picks up C_ij (x_i y_j - x_j y_i)
            let w = x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
            if w.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(coeffs.iter()) {
                if !c.is_zero() {
                    *o = o.clone() + w.clone() * c.clone();
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `y -> [x, y]` on the basis.
    pub fn ad(&self, x: &[S]) -> Result<Matrix<S>, LieError> {
        if x.len() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let mut col = vec![S::zero(); self.dim];
            for (&(a, b), coeffs) in &self.brackets {
                // contribution of [x, e_j]
                let w = if b == j {
                    x[a].clone()
                } else if a == j {
                    -x[b].clone()
                } else {
                    continue;
                };
                if w.is_zero() {
                    continue;
                }
                for (o, c) in col.iter_mut().zip(coeffs.iter()) {
                    if !c.is_zero() {
                        *o = o.clone() + w.clone() * c.clone();
                    }
                }
            }
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        Ok(m)
    }

    /// `ad(e_i)` without allocating the coordinate vector.
    pub fn ad_basis(&self, i: usize) -> Matrix<S> {
        let mut x = vec![S::zero(); self.dim];
        x[i] = S::one();
        self.ad(&x).expect("basis vector has the right length")
    }

    /// Jacobi defect `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> Vec<S> {
        let e = |idx: usize| -> Vec<S> {
            let mut v = vec![S::zero(); self.dim];
            v[idx] = S::one();
            v
        };
        let (ei, ej, ek) = (e(i), e(j), e(k));
        let t1 = self.bracket(&self.bracket(&ei, &ej).unwrap(), &ek).unwrap();
        let t2 = self.bracket(&self.bracket(&ej, &ek).unwrap(), &ei).unwrap();
        let t3 = self.bracket(&self.bracket(&ek, &ei).unwrap(), &ej).unwrap();
        t1.into_iter()
            .zip(t2)
            .zip(t3)
            .map(|((a, b), c)| a + b + c)
            .collect()
    }

    /// First basis triple violating the Jacobi identity, with its defect.
    pub fn first_jacobi_failure(&self) -> Option<((usize, usize, usize), Vec<S>)> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let d = self.jacobi_defect(i, j, k);
                    if d.iter().any(|c| !c.is_zero()) {
                        return Some(((i, j, k), d));
                    }
                }
            }
        }
        None
    }

    /// Membership test for the variety of Lie algebras.
    pub fn is_lie_algebra(&self) -> bool {
        self.first_jacobi_failure().is_none()
    }

    /// `Err(NotLieAlgebra)` with the first offending triple if Jacobi fails.
    pub fn validated(&self) -> Result<(), LieError> {
        match self.first_jacobi_failure() {
            None => Ok(()),
            Some((triple, _)) => Err(LieError::NotLieAlgebra { triple }),
        }
    }

    fn bracket_span(&self, a: &Subspace<S>, b: &Subspace<S>) -> Subspace<S> {
        let mut vectors = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vectors.push(self.bracket(x, y).unwrap());
            }
        }
        Subspace::span(self.dim, &vectors)
    }

    fn series_dims(&self, lower_central: bool) -> Result<Vec<usize>, LieError> {
        self.validated()?;
        let full = Subspace::full(self.dim);
        let mut cur = full.clone();
        let mut dims = vec![self.dim];
        loop {
            let next = if lower_central {
                self.bracket_span(&full, &cur)
            } else {
                self.bracket_span(&cur, &cur)
            };
            if next.dim() == cur.dim() {
                break;
            }
            dims.push(next.dim());
            if next.dim() == 0 {
                break;
            }
            cur = next;
        }
        Ok(dims)
    }

    /// Dimensions of the derived series `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ...`,
    /// starting at `dim` and recorded until the sequence stabilizes.
    pub fn derived_series_dims(&self) -> Result<Vec<usize>, LieError> {
        self.series_dims(false)
    }

    /// Dimensions of the lower central series `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...`.
    pub fn lower_central_dims(&self) -> Result<Vec<usize>, LieError> {
        self.series_dims(true)
    }

    pub fn is_solvable(&self) -> Result<bool, LieError> {
        Ok(self.derived_series_dims()?.last() == Some(&0))
    }

    pub fn is_nilpotent(&self) -> Result<bool, LieError> {
        Ok(self.lower_central_dims()?.last() == Some(&0))
    }

    /// `{x : [x, y] = 0 for all y}`, as the kernel of the stacked adjoint
    /// action.
    pub fn center(&self) -> Subspace<S> {
        let n = self.dim;
        // rows indexed by (j, k): coefficient of e_k in [x, e_j]
        let mut m = Matrix::zero(n * n, n);
        for j in 0..n {
            for i in 0..n {
                let col = self.basis_bracket(i, j);
                for (k, v) in col.into_iter().enumerate() {
                    if !v.is_zero() {
                        m.set(j * n + k, i, v);
                    }
                }
            }
        }
        Subspace::span(n, &m.kernel_basis())
    }

    /// Killing form `K(e_i, e_j) = tr(ad e_i · ad e_j)`.
    pub fn killing_form(&self) -> Matrix<S> {
        let n = self.dim;
        let ads: Vec<Matrix<S>> = (0..n).map(|i| self.ad_basis(i)).collect();
        Matrix::from_fn(n, n, |i, j| trace_product(&ads[i], &ads[j]))
    }

    /// Inertia of the Killing form; a real isomorphism invariant.
    pub fn killing_signature(&self) -> (usize, usize, usize) {
        self.killing_form()
            .signature()
            .expect("Killing form is symmetric")
    }

    /// Decides complete solvability: solvable with a full flag of ideals,
    /// equivalently every `ad(x)` has real spectrum.
    ///
    /// For solvable algebras the eigenvalues of `ad(x)` are the weights of a
    /// simultaneous triangularization over the complex numbers, and weights
    /// are linear in `x`; real spectra on a basis therefore give real
    /// spectra everywhere, so checking the basis decides the property.
    pub fn is_completely_solvable(&self) -> Result<CompleteSolvability, LieError> {
        self.validated()?;
        if !self.is_solvable()? {
            return Ok(CompleteSolvability::NotSolvable);
        }
        for i in 0..self.dim {
            let p = self.ad_basis(i).char_poly().expect("ad is square");
            let squarefree = p.squarefree_part();
            let deg = squarefree.degree().unwrap_or(0);
            if squarefree.count_real_roots().expect("nonzero") != deg {
                return Ok(CompleteSolvability::NonRealSpectrum { basis_index: i });
            }
        }
        Ok(CompleteSolvability::Yes)
    }

    /// Structure constants in the basis `e'_j = sum_i p_ij e_i`.
    pub fn change_basis(&self, p: &Matrix<S>) -> Result<Self, LieError> {
        if !p.is_square() || p.rows() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                got: p.rows(),
            });
        }
        let inv = p.inverse().ok_or(LieError::SingularMatrix)?;
        let mut out = Self::new(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let value = self.bracket(&p.column(i), &p.column(j))?;
                out.set_bracket(i, j, inv.apply(&value));
            }
        }
        Ok(out)
    }

    /// Multiply every structure constant by a fixed scalar.
    pub fn scaled_constants(&self, factor: &S) -> Self {
        let mut out = Self::new(self.dim);
        for (&(i, j), v) in &self.brackets {
            out.set_bracket(
                i,
                j,
                v.iter().map(|c| c.clone() * factor.clone()).collect(),
            );
        }
        out
    }

    /// Induced structure constants on a bracket-closed subspace, expressed in
    /// the given basis of the subspace.
    pub fn subalgebra_on(&self, basis: &[Vec<S>]) -> Result<Self, LieError> {
        let k = basis.len();
        let cols = Matrix::from_fn(self.dim, k, |r, c| basis[c][r].clone());
        let mut out = Self::new(k);
        for i in 0..k {
            for j in i + 1..k {
                let v = self.bracket(&basis[i], &basis[j])?;
                let rep = cols.solve(&v).ok_or(LieError::NotBracketClosed)?;
                out.set_bracket(i, j, rep);
            }
        }
        Ok(out)
    }

    /// Block sum of two algebras on the concatenated bases.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::new(n + other.dim);
        for (i, j, v) in self.brackets() {
            let mut coeffs = v.to_vec();
            coeffs.extend(vec![S::zero(); other.dim]);
            out.set_bracket(i, j, coeffs);
        }
        for (i, j, v) in other.brackets() {
            let mut coeffs = vec![S::zero(); n];
            coeffs.extend_from_slice(v);
            out.set_bracket(n + i, n + j, coeffs);
        }
        out
    }
}

/// `tr(a · b)` without forming the product.
pub(crate) fn trace_product<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> S {
    let n = a.rows();
    let mut acc = S::zero();
    for r in 0..n {
        for c in 0..n {
            let x = a.get(r, c);
            if x.is_zero() {
                continue;
            }
            let y = b.get(c, r);
            if !y.is_zero() {
                acc = acc + x.clone() * y.clone();
            }
        }
    }
    acc
}

/// Outcome of the complete-solvability test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompleteSolvability {
    Yes,
    NotSolvable,
    /// `char_poly(ad e_i)` has a non-real root for this basis index.
    NonRealSpectrum { basis_index: usize },
}

impl CompleteSolvability {
    pub fn holds(&self) -> bool {
        matches!(self, CompleteSolvability::Yes)
    }
}

/// Linear subspace in canonical reduced-echelon form, so that equal
/// subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn span(ambient: usize, vectors: &[Vec<S>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "span vector length");
        }
        let m = Matrix::from_fn(vectors.len(), ambient, |r, c| vectors[r][c].clone());
        let (rref, pivots) = m.rref();
        let basis = (0..pivots.len())
            .map(|r| rref.row_slice(r).to_vec())
            .collect();
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(ambient, &[])
    }

    pub fn full(ambient: usize) -> Self {
        let mut vectors = Vec::with_capacity(ambient);
        for i in 0..ambient {
            let mut v = vec![S::zero(); ambient];
            v[i] = S::one();
            vectors.push(v);
        }
        Self::span(ambient, &vectors)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating the pivot coordinates; zero iff the
    /// vector lies in the subspace.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(self.pivots.iter()) {
            let f = out[p].clone();
            if f.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(row.iter()) {
                if !b.is_zero() {
                    *o = o.clone() - f.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(S::is_zero)
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates_of(&self, v: &[S]) -> Option<Vec<S>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Algebra, Rational};
    use num_traits::{FromPrimitive, One, Zero};

    fn e(n: usize, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    }

    fn heisenberg3() -> Algebra {
        let mut g = Algebra::new(3);
        g.set_bracket(0, 1, e(3, 2));
        g
    }

    #[test]
    fn heisenberg_is_lie() {
        assert!(heisenberg3().is_lie_algebra());
        assert!(Algebra::new(7).is_lie_algebra());
    }

    #[test]
    fn broken_triple_detected() {
        // [e1,e2]=e3, [e1,e3]=e1 violates Jacobi on (e1,e2,e3)
        let mut g = Algebra::new(3);
        g.set_bracket(0, 1, e(3, 2));
        g.set_bracket(0, 2, e(3, 0));
        assert!(!g.is_lie_algebra());
        let ((i, j, k), defect) = g.first_jacobi_failure().unwrap();
        assert_eq!((i, j, k), (0, 1, 2));
        assert!(defect.iter().any(|c| !c.is_zero()));
        assert_eq!(
            g.validated(),
            Err(LieError::NotLieAlgebra { triple: (0, 1, 2) })
        );
    }

    #[test]
    fn bracket_on_heisenberg() {
        let g = heisenberg3();
        assert_eq!(g.bracket(&e(3, 0), &e(3, 1)).unwrap(), e(3, 2));
        let x = vec![
            Rational::from_i64(2).unwrap(),
            Rational::from_i64(-3).unwrap(),
            Rational::from_i64(5).unwrap(),
        ];
        let zero = g.bracket(&x, &x).unwrap();
        assert!(zero.iter().all(|c| c.is_zero()));
        assert!(g.bracket(&e(3, 0), &[Rational::zero()]).is_err());
    }

    #[test]
    fn ad_matrices() {
        let g = heisenberg3();
        let ad1 = g.ad(&e(3, 0)).unwrap();
        // X2 -> X3 is the only action
        let mut expected = Matrix::zero(3, 3);
        expected.set(2, 1, Rational::one());
        assert_eq!(ad1, expected);
        let zero = g.ad(&vec![Rational::zero(); 3]).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn antisymmetry_of_bracket() {
        let g = heisenberg3();
        let x = vec![
            Rational::from_i64(1).unwrap(),
            Rational::from_i64(2).unwrap(),
            Rational::from_i64(3).unwrap(),
        ];
        let y = vec![
            Rational::from_i64(-1).unwrap(),
            Rational::from_i64(7).unwrap(),
            Rational::new(1.into(), 2.into()),
        ];
        let xy = g.bracket(&x, &y).unwrap();
        let yx = g.bracket(&y, &x).unwrap();
        for (a, b) in xy.iter().zip(yx.iter()) {
            assert_eq!(a.clone() + b.clone(), Rational::zero());
        }
    }

    #[test]
    fn series_and_flags() {
        let g = heisenberg3();
        assert_eq!(g.lower_central_dims().unwrap(), vec![3, 1, 0]);
        assert_eq!(g.derived_series_dims().unwrap(), vec![3, 1, 0]);
        assert!(g.is_nilpotent().unwrap());
        assert!(g.is_solvable().unwrap());

        let abelian = Algebra::new(4);
        assert_eq!(abelian.derived_series_dims().unwrap(), vec![4, 0]);
        assert!(abelian.is_nilpotent().unwrap());
    }

    #[test]
    fn center_of_heisenberg() {
        let g = heisenberg3();
        let c = g.center();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&e(3, 2)));
        assert_eq!(Algebra::new(5).center().dim(), 5);
    }

    #[test]
    fn nilpotent_killing_form_vanishes() {
        let g = heisenberg3();
        assert!(g.killing_form().is_zero());
        assert_eq!(g.killing_signature(), (0, 0, 3));
    }

    #[test]
    fn subspace_canonical_equality() {
        let a = Subspace::span(3, &[e(3, 0), e(3, 1)]);
        let sum = vec![Rational::one(), Rational::one(), Rational::zero()];
        let b = Subspace::span(3, &[sum, e(3, 0)]);
        assert_eq!(a, b);
        assert!(a.contains_subspace(&Subspace::span(3, &[e(3, 1)])));
        assert!(!a.contains(&e(3, 2)));
    }

    #[test]
    fn change_basis_preserves_lie_and_signature() {
        let mut g = Algebra::new(4);
        // [X1,Y1]=Y1, [X2,Y2]=Y2 on basis (X1,X2,Y1,Y2)
        g.set_bracket(0, 2, e(4, 2));
        g.set_bracket(1, 3, e(4, 3));
        let p = Matrix::from_i64(&[
            &[1, 2, 0, 0],
            &[0, 1, 0, 3],
            &[5, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        let h = g.change_basis(&p).unwrap();
        assert!(h.is_lie_algebra());
        assert_eq!(h.killing_signature(), g.killing_signature());
        assert_eq!(
            h.derived_series_dims().unwrap(),
            g.derived_series_dims().unwrap()
        );
    }

    #[test]
    fn subalgebra_rejects_unclosed_span() {
        let g = heisenberg3();
        // span{X1, X2} is not closed: [X1,X2] = X3
        let err = g.subalgebra_on(&[e(3, 0), e(3, 1)]);
        assert_eq!(err.unwrap_err(), LieError::NotBracketClosed);
        // the derived algebra is closed (abelian line)
        let sub = g.subalgebra_on(&[e(3, 2)]).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.is_lie_algebra());
    }

    #[test]
    fn scaled_constants_still_lie() {
        let g = heisenberg3();
        let scaled = g.scaled_constants(&Rational::new(3.into(), 7.into()));
        assert!(scaled.is_lie_algebra());
        assert_eq!(
            scaled.constant(0, 1, 2),
            Rational::new(3.into(), 7.into())
        );
    }
}
