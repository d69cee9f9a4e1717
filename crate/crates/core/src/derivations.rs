//! Derivation algebras, inner derivations, semisimplicity, torus validation
//! and real non-conjugacy certificates.

use crate::error::{LieError, TorusDefect};
use crate::lie::{StructureConstants, Subspace};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// The full derivation algebra `Der(g)`, solved as the kernel of the linear
/// system `D[e_i,e_j] = [De_i,e_j] + [e_i,De_j]` over all basis pairs.
#[derive(Debug, Clone)]
pub struct DerivationSpace<S> {
    algebra: StructureConstants<S>,
    basis: Vec<Matrix<S>>,
    span: Subspace<S>,
    inner_dim: usize,
}

impl<S: Scalar> DerivationSpace<S> {
    pub fn algebra(&self) -> &StructureConstants<S> {
        &self.algebra
    }

    /// Basis of `Der(g)` as matrices.
    pub fn basis(&self) -> &[Matrix<S>] {
        &self.basis
    }

    /// The same space with matrices flattened row-major (ambient `n^2`).
    pub fn span(&self) -> &Subspace<S> {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `dim ad(g) = dim g - dim center`.
    pub fn inner_dim(&self) -> usize {
        self.inner_dim
    }

    /// Dimension of the outer derivation space `Der(g) / ad(g) = H^1(g, g)`.
    pub fn outer_dim(&self) -> usize {
        self.dim() - self.inner_dim
    }
}

/// Checks the derivation identity for a single matrix on all basis pairs.
pub fn is_derivation<S: Scalar>(g: &StructureConstants<S>, d: &Matrix<S>) -> bool {
    let n = g.dim();
    if d.rows() != n || d.cols() != n {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.apply(&g.basis_bracket(i, j));
            let di = d.column(i);
            let dj = d.column(j);
            let mut e_i = vec![S::zero(); n];
            e_i[i] = S::one();
            let mut e_j = vec![S::zero(); n];
            e_j[j] = S::one();
            let rhs1 = g.bracket(&di, &e_j).unwrap();
            let rhs2 = g.bracket(&e_i, &dj).unwrap();
            for k in 0..n {
                let sum = rhs1[k].clone() + rhs2[k].clone();
                if lhs[k] != sum {
                    return false;
                }
            }
        }
    }
    true
}

/// Solves for the full derivation algebra.
pub fn derivation_space<S: Scalar>(
    g: &StructureConstants<S>,
) -> Result<DerivationSpace<S>, LieError> {
    g.validated()?;
    let n = g.dim();
    // unknown d_{rc} flattened row-major: index r*n + c
    let pairs = n * (n - 1) / 2;
    let mut m: Matrix<S> = Matrix::zero(pairs.max(1) * n, n * n);
    let mut row_block = 0;
    for i in 0..n {
        for j in i + 1..n {
            let cij = g.basis_bracket(i, j);
            for k in 0..n {
                let row = row_block * n + k;
                // D[e_i,e_j]_k = sum_c C_ij^c d_{kc}
                for (c, coeff) in cij.iter().enumerate() {
                    if !coeff.is_zero() {
                        let idx = k * n + c;
                        let v = m.get(row, idx).clone() + coeff.clone();
                        m.set(row, idx, v);
                    }
                }
                // -[De_i, e_j]_k = -sum_a d_{ai} C_aj^k
                for a in 0..n {
                    let coeff = g.constant(a, j, k);
                    if !coeff.is_zero() {
                        let idx = a * n + i;
                        let v = m.get(row, idx).clone() - coeff;
                        m.set(row, idx, v);
                    }
                }
                // -[e_i, De_j]_k = -sum_b d_{bj} C_ib^k
                for b in 0..n {
                    let coeff = g.constant(i, b, k);
                    if !coeff.is_zero() {
                        let idx = b * n + j;
                        let v = m.get(row, idx).clone() - coeff;
                        m.set(row, idx, v);
                    }
                }
            }
            row_block += 1;
        }
    }
    let kernel = m.kernel_basis();
    let basis: Vec<Matrix<S>> = kernel.iter().map(|f| Matrix::from_flat(n, f)).collect();
    let span = Subspace::span(n * n, &kernel);
    let inner_dim = n - g.center().dim();
    Ok(DerivationSpace {
        algebra: g.clone(),
        basis,
        span,
        inner_dim,
    })
}

/// `span{ad(e_i)}` with matrices flattened row-major.
pub fn inner_derivations<S: Scalar>(g: &StructureConstants<S>) -> Subspace<S> {
    let n = g.dim();
    let vectors: Vec<Vec<S>> = (0..n).map(|i| g.ad_basis(i).flatten()).collect();
    Subspace::span(n * n, &vectors)
}

/// Semisimple over the complexes: squarefree minimal polynomial.
pub fn is_semisimple<S: Scalar>(m: &Matrix<S>) -> Result<bool, LieError> {
    m.min_poly()?.is_squarefree()
}

/// Diagonalizable over the reals: squarefree minimal polynomial whose roots
/// are all real.
pub fn is_real_diagonalizable<S: Scalar>(m: &Matrix<S>) -> Result<bool, LieError> {
    let p = m.min_poly()?;
    if !p.is_squarefree()? {
        return Ok(false);
    }
    Ok(p.count_real_roots()? == p.degree().unwrap_or(0))
}

/// Exterior torus of derivations: abelian, every element semisimple.
///
/// Only the generators are validated; commuting semisimple generators are
/// simultaneously diagonalizable over the complexes, so every element of
/// their span is semisimple as well.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Torus<S> {
    algebra: StructureConstants<S>,
    generators: Vec<Matrix<S>>,
}

impl<S: Scalar> Torus<S> {
    pub fn new(
        algebra: StructureConstants<S>,
        generators: Vec<Matrix<S>>,
    ) -> Result<Self, LieError> {
        algebra.validated()?;
        let n = algebra.dim();
        for (index, m) in generators.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(LieError::NotTorus(TorusDefect::WrongShape {
                    index,
                    expected: n,
                }));
            }
            if !is_derivation(&algebra, m) {
                return Err(LieError::NotTorus(TorusDefect::NotDerivation { index }));
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                let ab = generators[i].matmul(&generators[j]);
                let ba = generators[j].matmul(&generators[i]);
                if ab != ba {
                    return Err(LieError::NotTorus(TorusDefect::NotCommuting { i, j }));
                }
            }
        }
        for (index, m) in generators.iter().enumerate() {
            if !is_semisimple(m)? {
                return Err(LieError::NotTorus(TorusDefect::NotSemisimple { index }));
            }
        }
        Ok(Self {
            algebra,
            generators,
        })
    }

    pub fn algebra(&self) -> &StructureConstants<S> {
        &self.algebra
    }

    pub fn generators(&self) -> &[Matrix<S>] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        let n = self.algebra.dim();
        let flat: Vec<Vec<S>> = self.generators.iter().map(Matrix::flatten).collect();
        Subspace::span(n * n, &flat).dim()
    }

    /// Split torus: every generator is real-diagonalizable. Commuting
    /// real-diagonalizable generators diagonalize simultaneously over the
    /// reals, so all elements of the span then have real spectrum.
    pub fn is_split(&self) -> Result<bool, LieError> {
        for m in &self.generators {
            if !is_real_diagonalizable(m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Validates a would-be torus; wrong-shape generators are an error, any
/// other defect just yields `false`.
pub fn is_torus<S: Scalar>(
    g: &StructureConstants<S>,
    generators: &[Matrix<S>],
) -> Result<bool, LieError> {
    let n = g.dim();
    for m in generators {
        if m.rows() != n || m.cols() != n {
            return Err(LieError::DimensionMismatch {
                expected: n,
                got: m.rows(),
            });
        }
    }
    match Torus::new(g.clone(), generators.to_vec()) {
        Ok(_) => Ok(true),
        Err(LieError::NotTorus(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Which of the two tori carries the witness element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhichTorus {
    First,
    Second,
}

/// Spectral shape of the witness: its squarefree minimal polynomial has
/// fewer real roots than its degree, so the element has non-real eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralReason {
    pub distinct_real_roots: usize,
    pub min_poly_degree: usize,
}

/// One-sided certificate that two tori are not conjugate under any real
/// automorphism: real conjugation preserves spectra, one torus has all-real
/// spectra (split) and the witness element of the other does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonConjugacyCertificate<S> {
    pub witness_torus: WhichTorus,
    /// Coefficients of the witness in the generators of its torus.
    pub witness_combination: Vec<S>,
    pub witness: Matrix<S>,
    pub reason: SpectralReason,
}

/// Returns a certificate when exactly one torus is split; `None` is
/// inconclusive and does **not** prove conjugacy.
pub fn nonconjugacy_certificate<S: Scalar>(
    t1: &Torus<S>,
    t2: &Torus<S>,
) -> Result<Option<NonConjugacyCertificate<S>>, LieError> {
    if t1.algebra() != t2.algebra() {
        return Err(LieError::DifferentAlgebras);
    }
    let split1 = t1.is_split()?;
    let split2 = t2.is_split()?;
    if split1 == split2 {
        return Ok(None);
    }
    let (which, non_split) = if split1 {
        (WhichTorus::Second, t2)
    } else {
        (WhichTorus::First, t1)
    };
    for (idx, m) in non_split.generators().iter().enumerate() {
        if is_real_diagonalizable(m)? {
            continue;
        }
        let p = m.min_poly()?.squarefree_part();
        let mut combination = vec![S::zero(); non_split.generators().len()];
        combination[idx] = S::one();
        return Ok(Some(NonConjugacyCertificate {
            witness_torus: which,
            witness_combination: combination,
            witness: m.clone(),
            reason: SpectralReason {
                distinct_real_roots: p.count_real_roots()?,
                min_poly_degree: p.degree().unwrap_or(0),
            },
        }));
    }
    unreachable!("a non-split torus has a generator with non-real spectrum")
}

/// Derivations diagonal in the given basis: `diag(l_1..l_n)` is a derivation
/// iff `l_i + l_j = l_k` for every nonzero structure constant `C_ij^k`.
/// Returned in the eigenvalue coordinates (ambient `n`).
pub fn diagonal_derivations<S: Scalar>(g: &StructureConstants<S>) -> Subspace<S> {
    let n = g.dim();
    let mut rows: Vec<Vec<S>> = Vec::new();
    for (i, j, coeffs) in g.brackets() {
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut row = vec![S::zero(); n];
            row[i] = row[i].clone() + S::one();
            row[j] = row[j].clone() + S::one();
            row[k] = row[k].clone() - S::one();
            rows.push(row);
        }
    }
    let m = if rows.is_empty() {
        Matrix::zero(0, n)
    } else {
        Matrix::from_rows(rows)
    };
    Subspace::span(n, &m.kernel_basis())
}

/// Materialize an eigenvalue vector from [`diagonal_derivations`] as a map.
pub fn diagonal_matrix<S: Scalar>(lambda: &[S]) -> Matrix<S> {
    let n = lambda.len();
    let mut m = Matrix::zero(n, n);
    for (i, v) in lambda.iter().enumerate() {
        m.set(i, i, v.clone());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Algebra, RatMatrix, Rational};
    use num_traits::{One, Zero};

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
    fn derivations_of_heisenberg_have_dim_6() {
        let der = derivation_space(&heisenberg3()).unwrap();
        assert_eq!(der.dim(), 6);
        assert_eq!(der.inner_dim(), 2);
        assert_eq!(der.outer_dim(), 4);
    }

    #[test]
    fn derivations_of_abelian() {
        for n in 1..=4 {
            let der = derivation_space(&Algebra::new(n)).unwrap();
            assert_eq!(der.dim(), n * n);
            assert_eq!(der.inner_dim(), 0);
        }
    }

    #[test]
    fn derivation_basis_satisfies_identity_independently() {
        let g = heisenberg3();
        let der = derivation_space(&g).unwrap();
        for d in der.basis() {
            assert!(is_derivation(&g, d));
        }
    }

    #[test]
    fn inner_contained_in_derivations() {
        let g = heisenberg3();
        let der = derivation_space(&g).unwrap();
        let inner = inner_derivations(&g);
        assert_eq!(inner.dim(), 2);
        assert!(der.span().contains_subspace(&inner));
    }

    #[test]
    fn semisimplicity_examples() {
        let rot = RatMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(is_semisimple(&rot).unwrap());
        assert!(!is_real_diagonalizable(&rot).unwrap());

        let jordan = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(!is_semisimple(&jordan).unwrap());
        assert!(!is_real_diagonalizable(&jordan).unwrap());

        let diag = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        assert!(is_semisimple(&diag).unwrap());
        assert!(is_real_diagonalizable(&diag).unwrap());
    }

    fn h1_tori() -> (Torus<Rational>, Torus<Rational>) {
        let g = heisenberg3();
        let t1 = Torus::new(
            g.clone(),
            vec![
                RatMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]),
                RatMatrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            ],
        )
        .unwrap();
        let t2 = Torus::new(
            g,
            vec![
                RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]),
                RatMatrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
            ],
        )
        .unwrap();
        (t1, t2)
    }

    #[test]
    fn heisenberg_tori_validate() {
        let (t1, t2) = h1_tori();
        assert!(t1.is_split().unwrap());
        assert!(!t2.is_split().unwrap());
        assert_eq!(t1.rank(), 2);
        assert_eq!(t2.rank(), 2);
    }

    #[test]
    fn nilpotent_generator_is_not_a_torus() {
        let g = Algebra::new(2);
        let jordan = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(!is_torus(&g, std::slice::from_ref(&jordan)).unwrap());
        assert!(matches!(
            Torus::new(g, vec![jordan]),
            Err(LieError::NotTorus(TorusDefect::NotSemisimple { index: 0 }))
        ));
    }

    #[test]
    fn non_derivation_rejected() {
        let g = heisenberg3();
        // scaling only the center is not a derivation of h1
        let bad = RatMatrix::from_i64(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        assert!(!is_torus(&g, &[bad]).unwrap());
    }

    #[test]
    fn wrong_shape_is_an_error() {
        let g = heisenberg3();
        let too_small = RatMatrix::identity(2);
        assert!(is_torus(&g, &[too_small]).is_err());
    }

    #[test]
    fn certificate_for_heisenberg_pair() {
        let (t1, t2) = h1_tori();
        let cert = nonconjugacy_certificate(&t1, &t2).unwrap().unwrap();
        assert_eq!(cert.witness_torus, WhichTorus::Second);
        assert_eq!(cert.reason.distinct_real_roots, 1);
        assert_eq!(cert.reason.min_poly_degree, 3);
        // same torus twice: inconclusive
        assert!(nonconjugacy_certificate(&t1, &t1).unwrap().is_none());
        // order flips the witness side
        let cert = nonconjugacy_certificate(&t2, &t1).unwrap().unwrap();
        assert_eq!(cert.witness_torus, WhichTorus::First);
    }

    #[test]
    fn tori_on_different_algebras_rejected() {
        let (t1, _) = h1_tori();
        let other = Torus::new(Algebra::new(3), vec![RatMatrix::identity(3)]).unwrap();
        assert_eq!(
            nonconjugacy_certificate(&t1, &other),
            Err(LieError::DifferentAlgebras)
        );
    }

    #[test]
    fn diagonal_derivations_dims() {
        assert_eq!(diagonal_derivations(&heisenberg3()).dim(), 2);
        assert_eq!(diagonal_derivations(&Algebra::new(4)).dim(), 4);
    }

    #[test]
    fn diagonal_derivations_are_derivations() {
        let g = heisenberg3();
        for lambda in diagonal_derivations(&g).basis() {
            assert!(is_derivation(&g, &diagonal_matrix(lambda)));
        }
    }
}
