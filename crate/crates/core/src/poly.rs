//! Univariate polynomials over a generic scalar.
//!
//! Coefficients are stored lowest degree first. The zero polynomial has an
//! empty coefficient vector.

use crate::error::LieError;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(S::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| S::from_i64(c).unwrap()).collect())
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![S::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].clone() + c.clone();
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = out[i].clone() + c.clone();
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scaled(&self, factor: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * S::from_usize(i).unwrap())
                .collect(),
        )
    }

    /// Long division; panics on a zero divisor.
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (Self::zero(), self.clone());
        }
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![S::zero(); self.coeffs.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / lead.clone();
            quot[k] = q.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * c.clone();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic normalization (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = S::one() / l.clone();
                self.scaled(&inv)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let (q, r) = self.mul(other).divmod(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// True iff `gcd(p, p')` is constant.
    pub fn is_squarefree(&self) -> Result<bool, LieError> {
        if self.is_zero() {
            return Err(LieError::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        let (q, r) = self.divmod(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Exact number of distinct real roots, by a Sturm chain on the
    /// squarefree part with signs at plus/minus infinity read off the leading
    /// coefficients.
    pub fn count_real_roots(&self) -> Result<usize, LieError> {
        if self.is_zero() {
            return Err(LieError::ZeroPolynomial);
        }
        let sf = self.squarefree_part();
        if sf.degree() == Some(0) {
            return Ok(0);
        }
        let mut chain = vec![sf.clone(), sf.derivative()];
        loop {
            let last = &chain[chain.len() - 1];
            if last.is_zero() {
                chain.pop();
                break;
            }
            let prev = &chain[chain.len() - 2];
            let (_, r) = prev.divmod(last);
            chain.push(r.neg());
        }
        let sign_at = |p: &Self, at_pos_inf: bool| -> i8 {
            let lead = p.leading().unwrap();
            let mut s: i8 = if lead.is_positive() { 1 } else { -1 };
            if !at_pos_inf && p.degree().unwrap() % 2 == 1 {
                s = -s;
            }
            s
        };
        let variations = |at_pos_inf: bool| -> usize {
            let mut count = 0;
            let mut prev: Option<i8> = None;
            for p in &chain {
                let s = sign_at(p, at_pos_inf);
                if let Some(q) = prev {
                    if q != s {
                        count += 1;
                    }
                }
                prev = Some(s);
            }
            count
        };
        Ok(variations(false) - variations(true))
    }

    /// Horner evaluation of `p(A) v` without materializing `p(A)`.
    pub fn apply_to_vector(&self, a: &Matrix<S>, v: &[S]) -> Vec<S> {
        let mut acc = vec![S::zero(); v.len()];
        for c in self.coeffs.iter().rev() {
            acc = a.apply(&acc);
            for (x, base) in acc.iter_mut().zip(v.iter()) {
                *x = x.clone() + c.clone() * base.clone();
            }
        }
        acc
    }

    /// Matrix substitution `p(A)`.
    pub fn apply_to_matrix(&self, a: &Matrix<S>) -> Matrix<S> {
        let n = a.rows();
        let mut acc = Matrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = a.matmul(&acc);
            for i in 0..n {
                let v = acc.get(i, i).clone() + c.clone();
                acc.set(i, i, v);
            }
        }
        acc
    }
}

impl<S: Scalar> std::fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "{c}*x")?,
                _ if c.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::RatPoly;

    #[test]
    fn squarefree_examples() {
        assert!(RatPoly::from_i64(&[1, 0, 1]).is_squarefree().unwrap());
        assert!(!RatPoly::from_i64(&[0, 0, 1]).is_squarefree().unwrap());
        // x^2 - 2x + 1 = (x-1)^2, gcd with derivative is x - 1
        let p = RatPoly::from_i64(&[1, -2, 1]);
        assert!(!p.is_squarefree().unwrap());
        assert_eq!(p.gcd(&p.derivative()), RatPoly::from_i64(&[-1, 1]));
        assert_eq!(
            RatPoly::zero().is_squarefree(),
            Err(crate::LieError::ZeroPolynomial)
        );
    }

    #[test]
    fn real_root_counts() {
        assert_eq!(RatPoly::from_i64(&[1, 0, 1]).count_real_roots().unwrap(), 0);
        assert_eq!(RatPoly::from_i64(&[-2, 0, 1]).count_real_roots().unwrap(), 2);
        assert_eq!(
            RatPoly::from_i64(&[0, -1, 0, 1]).count_real_roots().unwrap(),
            3
        );
        assert_eq!(
            RatPoly::zero().count_real_roots(),
            Err(crate::LieError::ZeroPolynomial)
        );
    }

    #[test]
    fn root_count_bounded_by_degree_and_odd_degree_has_root() {
        let polys = [
            RatPoly::from_i64(&[1, 2, 3, 4]),
            RatPoly::from_i64(&[-7, 0, 0, 0, 0, 1]),
            RatPoly::from_i64(&[5, -1, 2]),
            RatPoly::from_i64(&[0, 0, 1, 1]),
        ];
        for p in polys {
            let count = p.count_real_roots().unwrap();
            let deg = p.degree().unwrap();
            assert!(count <= deg);
            if deg % 2 == 1 {
                assert!(count >= 1);
            }
        }
    }

    #[test]
    fn multiple_roots_counted_once() {
        // (x-1)^2 (x+2)
        let p = RatPoly::from_i64(&[-1, 1])
            .mul(&RatPoly::from_i64(&[-1, 1]))
            .mul(&RatPoly::from_i64(&[2, 1]));
        assert_eq!(p.count_real_roots().unwrap(), 2);
    }

    #[test]
    fn divmod_roundtrip() {
        let a = RatPoly::from_i64(&[3, 0, -2, 1, 4]);
        let b = RatPoly::from_i64(&[1, 2, 1]);
        let (q, r) = a.divmod(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_and_lcm() {
        let a = RatPoly::from_i64(&[-1, 1]); // x - 1
        let b = RatPoly::from_i64(&[-2, 1]); // x - 2
        let ab = a.mul(&b);
        let bc = b.mul(&RatPoly::from_i64(&[1, 1]));
        assert_eq!(ab.gcd(&bc), b.monic());
        let l = ab.lcm(&bc);
        assert_eq!(l.degree(), Some(3));
        assert!(l.divmod(&ab).1.is_zero());
        assert!(l.divmod(&bc).1.is_zero());
    }
}
