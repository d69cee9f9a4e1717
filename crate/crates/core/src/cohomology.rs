//! Chevalley-Eilenberg cochain complex `C^k(g, g)` for `k = 0..3` and the
//! algebraic rigidity test `dim H^2(g, g) = 0`.
//!
//! Sign conventions, fixed once so the matrices are reproducible:
//!
//! ```text
//! d0 x (y)      = [y, x]
//! d1 f (x,y)    = [x, f(y)] - [y, f(x)] - f([x,y])
//! d2 p (x,y,z)  = [x, p(y,z)] - [y, p(x,z)] + [z, p(x,y)]
//!                 - p([x,y], z) + p([x,z], y) - p([y,z], x)
//! ```
//!
//! Cochains are flattened with k-subsets of basis indices in colexicographic
//! order and the target coordinate fastest-varying. Ranks computed over the
//! rationals are valid over the reals and the complexes, so the cohomology
//! dimensions certify the real (and complex) statements.

use crate::error::LieError;
use crate::lie::StructureConstants;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Index scheme for `C^k(g, g) = Hom(Λ^k g, g)`.
///
/// Flat index of (subset `S`, target coordinate `t`) is
/// `subset_rank(S) * n + t`, with subsets ranked colexicographically.
#[derive(Debug, Clone)]
pub struct CochainSpace {
    n: usize,
    degree: usize,
    subsets: Vec<Vec<usize>>,
}

impl CochainSpace {
    pub fn new(n: usize, degree: usize) -> Self {
        // degree > n gives the zero space (no k-subsets)
        let mut subsets = vec![Vec::new()];
        for _ in 0..degree {
            let mut next = Vec::new();
            for s in &subsets {
                let lo = s.last().map_or(0, |&m| m + 1);
                for v in lo..n {
                    let mut t = s.clone();
                    t.push(v);
                    next.push(t);
                }
            }
            subsets = next;
        }
        // colex: compare largest elements first
        subsets.sort_by_key(|s| s.iter().rev().copied().collect::<Vec<_>>());
        Self { n, degree, subsets }
    }

    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `n * C(n, k)`.
    pub fn dim(&self) -> usize {
        self.subsets.len() * self.n
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    /// Colex rank of a strictly increasing index subset.
    pub fn subset_rank(&self, subset: &[usize]) -> usize {
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        // combinatorial number system: rank = sum C(s_i, i+1)
        subset
            .iter()
            .enumerate()
            .map(|(pos, &s)| binomial(s, pos + 1))
            .sum()
    }

    pub fn flat_index(&self, subset: &[usize], target: usize) -> usize {
        self.subset_rank(subset) * self.n + target
    }

    pub fn unflatten(&self, flat: usize) -> (&[usize], usize) {
        (&self.subsets[flat / self.n], flat % self.n)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All dimensions and ranks of the complex in degrees 0..=2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    /// `dim C^0 .. dim C^3`
    pub c_dims: [usize; 4],
    /// ranks of `d0, d1, d2`
    pub d_ranks: [usize; 3],
    /// `dim Z^0 .. dim Z^2` (cocycles)
    pub z_dims: [usize; 3],
    /// `dim B^1, dim B^2` (coboundaries)
    pub b_dims: [usize; 2],
    /// `dim H^0 .. dim H^2`
    pub h_dims: [usize; 3],
}

/// Exact matrix of `d^k : C^k -> C^{k+1}` for `k = 0, 1, 2`.
pub fn differential_matrix<S: Scalar>(
    g: &StructureConstants<S>,
    k: u8,
) -> Result<Matrix<S>, LieError> {
    g.validated()?;
    match k {
        0 => Ok(d0(g)),
        1 => Ok(d1(g)),
        2 => Ok(d2(g)),
        other => Err(LieError::InvalidDegree(other)),
    }
}

fn d0<S: Scalar>(g: &StructureConstants<S>) -> Matrix<S> {
    let n = g.dim();
    let dom = CochainSpace::new(n, 0);
    let cod = CochainSpace::new(n, 1);
    let mut m = Matrix::zero(cod.dim(), dom.dim());
    for t in 0..n {
        // x = e_t, column t; (d0 x)(e_j) = [e_j, e_t]
        for j in 0..n {
            let v = g.basis_bracket(j, t);
            for (coord, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(cod.flat_index(&[j], coord), t, c);
                }
            }
        }
    }
    m
}

fn d1<S: Scalar>(g: &StructureConstants<S>) -> Matrix<S> {
    let n = g.dim();
    let dom = CochainSpace::new(n, 1);
    let cod = CochainSpace::new(n, 2);
    let mut m = Matrix::zero(cod.dim(), dom.dim());
    for j in 0..n {
        for t in 0..n {
            // f = delta(e_j -> e_t), column flat({j}, t)
            let col = dom.flat_index(&[j], t);
            for pair in cod.subsets() {
                let (a, b) = (pair[0], pair[1]);
                let mut val = vec![S::zero(); n];
                if b == j {
                    add_scaled(&mut val, &g.basis_bracket(a, t), &S::one());
                }
                if a == j {
                    add_scaled(&mut val, &g.basis_bracket(b, t), &-S::one());
                }
                // - f([e_a, e_b]) = - C_ab^j e_t
                let c = g.constant(a, b, j);
                if !c.is_zero() {
                    val[t] = val[t].clone() - c;
                }
                for (coord, c) in val.into_iter().enumerate() {
                    if !c.is_zero() {
                        m.set(cod.flat_index(pair, coord), col, c);
                    }
                }
            }
        }
    }
    m
}

fn d2<S: Scalar>(g: &StructureConstants<S>) -> Matrix<S> {
    let n = g.dim();
    let dom = CochainSpace::new(n, 2);
    let cod = CochainSpace::new(n, 3);
    let mut m = Matrix::zero(cod.dim(), dom.dim());
    for pair in dom.subsets() {
        let (i, j) = (pair[0], pair[1]);
        for t in 0..n {
            // p = delta(e_i ^ e_j -> e_t), column flat({i,j}, t)
            let col = dom.flat_index(pair, t);
            // p(e_a, e_b) as a signed multiple of e_t
            let phi = |a: usize, b: usize| -> Option<S> {
                if (a, b) == (i, j) {
                    Some(S::one())
                } else if (a, b) == (j, i) {
                    Some(-S::one())
                } else {
                    None
                }
            };
            for triple in cod.subsets() {
                let (a, b, c) = (triple[0], triple[1], triple[2]);
                let mut val = vec![S::zero(); n];
                // [e_a, p(e_b,e_c)] - [e_b, p(e_a,e_c)] + [e_c, p(e_a,e_b)]
                for (x, y, z, sign) in [
                    (a, b, c, S::one()),
                    (b, a, c, -S::one()),
                    (c, a, b, S::one()),
                ] {
                    if let Some(s) = phi(y, z) {
                        add_scaled(&mut val, &g.basis_bracket(x, t), &(sign * s));
                    }
                }
                // - p([e_a,e_b], e_c) + p([e_a,e_c], e_b) - p([e_b,e_c], e_a)
                for (x, y, z, sign) in [
                    (a, b, c, -S::one()),
                    (a, c, b, S::one()),
                    (b, c, a, -S::one()),
                ] {
                    // p([e_x,e_y], e_z) = sum_q C_xy^q p(e_q, e_z)
                    for q in [i, j] {
                        let cq = g.constant(x, y, q);
                        if cq.is_zero() {
                            continue;
                        }
                        if let Some(s) = phi(q, z) {
                            val[t] = val[t].clone() + sign.clone() * cq * s;
                        }
                    }
                }
                for (coord, v) in val.into_iter().enumerate() {
                    if !v.is_zero() {
                        m.set(cod.flat_index(triple, coord), col, v);
                    }
                }
            }
        }
    }
    m
}

fn add_scaled<S: Scalar>(acc: &mut [S], v: &[S], factor: &S) {
    for (a, b) in acc.iter_mut().zip(v.iter()) {
        if !b.is_zero() {
            *a = a.clone() + factor.clone() * b.clone();
        }
    }
}

/// `dim H^k(g, g)` for `k = 0, 1, 2`.
pub fn h_dim<S: Scalar>(g: &StructureConstants<S>, k: u8) -> Result<usize, LieError> {
    if k > 2 {
        return Err(LieError::InvalidDegree(k));
    }
    let rank_prev = if k == 0 {
        0
    } else {
        differential_matrix(g, k - 1)?.rank()
    };
    let dk = differential_matrix(g, k)?;
    Ok(dk.cols() - dk.rank() - rank_prev)
}

/// Nijenhuis-Richardson sufficient condition: `dim H^2(g, g) = 0`.
pub fn is_algebraically_rigid<S: Scalar>(g: &StructureConstants<S>) -> Result<bool, LieError> {
    Ok(h_dim(g, 2)? == 0)
}

/// Full rank/dimension report of the complex in degrees 0..=2.
pub fn full_report<S: Scalar>(g: &StructureConstants<S>) -> Result<CohomologyReport, LieError> {
    g.validated()?;
    let n = g.dim();
    let c_dims = [
        CochainSpace::new(n, 0).dim(),
        CochainSpace::new(n, 1).dim(),
        CochainSpace::new(n, 2).dim(),
        CochainSpace::new(n, 3).dim(),
    ];
    let d_ranks = [d0(g).rank(), d1(g).rank(), d2(g).rank()];
    let z_dims = [
        c_dims[0] - d_ranks[0],
        c_dims[1] - d_ranks[1],
        c_dims[2] - d_ranks[2],
    ];
    let b_dims = [d_ranks[0], d_ranks[1]];
    let h_dims = [z_dims[0], z_dims[1] - b_dims[0], z_dims[2] - b_dims[1]];
    Ok(CohomologyReport {
        c_dims,
        d_ranks,
        z_dims,
        b_dims,
        h_dims,
    })
}
