//! Nilradical computation, semidirect constructions, and isomorphism
//! fingerprints separating real forms.

use crate::cohomology;
use crate::derivations::{derivation_space, Torus};
use crate::error::LieError;
use crate::lie::{trace_product, StructureConstants, Subspace};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Maximal nilpotent ideal of a solvable algebra.
///
/// Let `A` be the associative algebra spanned by all products
/// `ad(e_{i_1}) ... ad(e_{i_m})`, `m >= 1`. For solvable `g` the adjoint maps
/// triangularize simultaneously over the complexes with diagonals given by
/// the weights; `ad(x)` is then nilpotent iff `tr(ad(x) b) = 0` for every
/// `b` in `A`, and `{x : ad(x) nilpotent}` is exactly the nilradical.
pub fn nilradical<S: Scalar>(g: &StructureConstants<S>) -> Result<Subspace<S>, LieError> {
    g.validated()?;
    if !g.is_solvable()? {
        return Err(LieError::NotSolvable);
    }
    let n = g.dim();
    let ads: Vec<Matrix<S>> = (0..n).map(|i| g.ad_basis(i)).collect();

    // associative closure of the adjoint images, by right-multiplication
    let mut span = Subspace::zero(n * n);
    let mut basis_mats: Vec<Matrix<S>> = Vec::new();
    let mut queue: Vec<Matrix<S>> = ads.clone();
    while let Some(m) = queue.pop() {
        let flat = m.flatten();
        if span.contains(&flat) {
            continue;
        }
        span = span.sum(&Subspace::span(n * n, &[flat]));
        for a in &ads {
            queue.push(m.matmul(a));
        }
        basis_mats.push(m);
    }

    // trace conditions: rows indexed by the closure basis
    let rows: Vec<Vec<S>> = basis_mats
        .iter()
        .map(|b| (0..n).map(|i| trace_product(&ads[i], b)).collect())
        .collect();
    let m = if rows.is_empty() {
        Matrix::zero(0, n)
    } else {
        Matrix::from_rows(rows)
    };
    Ok(Subspace::span(n, &m.kernel_basis()))
}

/// Extension of a nilpotent algebra by commuting semisimple derivations:
/// new basis `(T_1..T_k, e_1..e_n)` with `[T_a, T_b] = 0`,
/// `[T_a, x] = D_a(x)`, and the brackets of `n` unchanged.
///
/// Generator sets that fail torus validation are refused; the construction
/// then always satisfies the Jacobi identity (the derivation identity is the
/// mixed Jacobi equation and commutativity is the torus-torus one).
pub fn semidirect_sum<S: Scalar>(
    nil: &StructureConstants<S>,
    torus_generators: &[Matrix<S>],
) -> Result<StructureConstants<S>, LieError> {
    let torus = Torus::new(nil.clone(), torus_generators.to_vec())?;
    let k = torus.generators().len();
    let n = nil.dim();
    let mut out = StructureConstants::new(k + n);
    for (i, j, coeffs) in nil.brackets() {
        let mut v = vec![S::zero(); k];
        v.extend_from_slice(coeffs);
        out.set_bracket(k + i, k + j, v);
    }
    for (a, d) in torus.generators().iter().enumerate() {
        for x in 0..n {
            let col = d.column(x);
            if col.iter().all(S::is_zero) {
                continue;
            }
            let mut v = vec![S::zero(); k];
            v.extend(col);
            out.set_bracket(a, k + x, v);
        }
    }
    Ok(out)
}

/// Vector of real isomorphism invariants. Equality of fingerprints does
/// **not** imply isomorphism; inequality proves non-isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub center_dim: usize,
    pub nilradical_dim: usize,
    pub nilradical_lower_central_dims: Vec<usize>,
    pub der_dim: usize,
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    pub killing_signature: (usize, usize, usize),
    pub completely_solvable: bool,
}

/// Field names, in the order [`distinguish`] compares them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FingerprintField {
    Dim,
    DerivedDims,
    LowerCentralDims,
    CenterDim,
    NilradicalDim,
    NilradicalLowerCentralDims,
    DerDim,
    H0,
    H1,
    H2,
    KillingSignature,
    CompletelySolvable,
}

impl FingerprintField {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Dim => "dim",
            Self::DerivedDims => "derived_dims",
            Self::LowerCentralDims => "lower_central_dims",
            Self::CenterDim => "center_dim",
            Self::NilradicalDim => "nilradical_dim",
            Self::NilradicalLowerCentralDims => "nilradical_lower_central_dims",
            Self::DerDim => "der_dim",
            Self::H0 => "h0",
            Self::H1 => "h1",
            Self::H2 => "h2",
            Self::KillingSignature => "killing_signature",
            Self::CompletelySolvable => "completely_solvable",
        }
    }
}

impl std::fmt::Display for FingerprintField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Assembles every invariant; requires a solvable Lie algebra (the
/// nilradical computation does).
pub fn fingerprint<S: Scalar>(g: &StructureConstants<S>) -> Result<Fingerprint, LieError> {
    g.validated()?;
    let nil = nilradical(g)?;
    let nil_algebra = g.subalgebra_on(nil.basis())?;
    let der = derivation_space(g)?;
    let report = cohomology::full_report(g)?;
    Ok(Fingerprint {
        dim: g.dim(),
        derived_dims: g.derived_series_dims()?,
        lower_central_dims: g.lower_central_dims()?,
        center_dim: g.center().dim(),
        nilradical_dim: nil.dim(),
        nilradical_lower_central_dims: nil_algebra.lower_central_dims()?,
        der_dim: der.dim(),
        h0: report.h_dims[0],
        h1: report.h_dims[1],
        h2: report.h_dims[2],
        killing_signature: g.killing_signature(),
        completely_solvable: g.is_completely_solvable()?.holds(),
    })
}

/// Outcome of a fingerprint comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The named invariant differs, so no isomorphism exists.
    ProvablyNonIsomorphic(FingerprintField),
    /// All computed invariants agree; explicitly **not** an isomorphism proof.
    Indistinguishable,
}

/// Compares fingerprints field by field, naming the first difference.
pub fn distinguish<S: Scalar>(
    g1: &StructureConstants<S>,
    g2: &StructureConstants<S>,
) -> Result<Verdict, LieError> {
    let a = fingerprint(g1)?;
    let b = fingerprint(g2)?;
    use FingerprintField as F;
    let field = if a.dim != b.dim {
        Some(F::Dim)
    } else if a.derived_dims != b.derived_dims {
        Some(F::DerivedDims)
    } else if a.lower_central_dims != b.lower_central_dims {
        Some(F::LowerCentralDims)
    } else if a.center_dim != b.center_dim {
        Some(F::CenterDim)
    } else if a.nilradical_dim != b.nilradical_dim {
        Some(F::NilradicalDim)
    } else if a.nilradical_lower_central_dims != b.nilradical_lower_central_dims {
        Some(F::NilradicalLowerCentralDims)
    } else if a.der_dim != b.der_dim {
        Some(F::DerDim)
    } else if a.h0 != b.h0 {
        Some(F::H0)
    } else if a.h1 != b.h1 {
        Some(F::H1)
    } else if a.h2 != b.h2 {
        Some(F::H2)
    } else if a.killing_signature != b.killing_signature {
        Some(F::KillingSignature)
    } else if a.completely_solvable != b.completely_solvable {
        Some(F::CompletelySolvable)
    } else {
        None
    };
    Ok(match field {
        Some(f) => Verdict::ProvablyNonIsomorphic(f),
        None => Verdict::Indistinguishable,
    })
}
