//! Shared test oracles, independent of the engine paths they check.
#![allow(dead_code)] // each test target uses a different subset

use lierig_core::{Algebra, RatPoly, RatSubspace, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn basis_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Tiny deterministic generator for reproducible "random" rationals.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        // xorshift64
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn small_rational(&mut self) -> Rational {
        let n = (self.next_u64() % 11) as i64 - 5;
        let d = (self.next_u64() % 3) as i64 + 1;
        q(n, d)
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.small_rational()).collect()
    }
}

/// All subspaces spanned by subsets of the given basis that are nilpotent
/// ideals. Valid as an exhaustive oracle for fixtures whose bases are
/// adapted (the nilradical is a coordinate subspace there).
pub fn coordinate_nilpotent_ideals(g: &Algebra) -> Vec<RatSubspace> {
    let n = g.dim();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let indices: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let vectors: Vec<Vec<Rational>> = indices.iter().map(|&i| basis_vec(n, i)).collect();
        let span = RatSubspace::span(n, &vectors);
        // ideal: brackets with every basis vector stay inside
        let is_ideal = (0..n).all(|j| {
            indices
                .iter()
                .all(|&i| span.contains(&g.basis_bracket(j, i)))
        });
        if !is_ideal {
            continue;
        }
        let induced = g
            .subalgebra_on(span.basis())
            .expect("an ideal is bracket-closed");
        if induced.is_nilpotent().expect("fixture is a Lie algebra") {
            out.push(span);
        }
    }
    out
}

/// Nilpotency of `ad(x)` read from the characteristic polynomial.
pub fn ad_is_nilpotent(g: &Algebra, x: &[Rational]) -> bool {
    let p = g.ad(x).unwrap().char_poly().unwrap();
    // x^n: every coefficient below the leading one vanishes
    p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .all(Rational::is_zero)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

/// Exact rational roots, by the rational root bound on the
/// denominator-cleared coefficients.
pub fn rational_roots(p: &RatPoly) -> Vec<Rational> {
    assert!(!p.is_zero());
    let coeffs = p.coeffs();
    let low = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let shifted = &coeffs[low..];
    if shifted.len() == 1 {
        return roots;
    }
    let mut den_lcm = BigInt::one();
    for c in shifted {
        den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = shifted
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    let a0 = &ints[0];
    let lead = ints.last().unwrap();
    for p_div in divisors(a0) {
        for q_div in divisors(lead) {
            for sign in [1i64, -1] {
                let cand = Rational::new(&p_div * BigInt::from(sign), q_div.clone());
                if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand.clone());
                }
            }
        }
    }
    roots
}

fn intersect(a: &RatSubspace, b: &RatSubspace) -> RatSubspace {
    let n = a.ambient_dim();
    if a.dim() == 0 || b.dim() == 0 {
        return RatSubspace::zero(n);
    }
    // x = sum s_i a_i with b.reduce(x) = 0, linear in s
    let rows = n;
    let cols = a.dim();
    let m = lierig_core::RatMatrix::from_fn(rows, cols, |r, c| b.reduce(&a.basis()[c])[r].clone());
    let mut vectors = Vec::new();
    for s in m.kernel_basis() {
        let mut x = vec![Rational::zero(); n];
        for (coeff, base) in s.iter().zip(a.basis()) {
            for (xi, bi) in x.iter_mut().zip(base.iter()) {
                *xi = xi.clone() + coeff.clone() * bi.clone();
            }
        }
        vectors.push(x);
    }
    RatSubspace::span(n, &vectors)
}

fn quotient_by_line(g: &Algebra, line: &RatSubspace) -> Algebra {
    let n = g.dim();
    let complement: Vec<usize> = (0..n).filter(|c| !line.pivots().contains(c)).collect();
    let mut out = Algebra::new(complement.len());
    for a in 0..complement.len() {
        for b in a + 1..complement.len() {
            let v = g.basis_bracket(complement[a], complement[b]);
            let reduced = line.reduce(&v);
            let coords: Vec<Rational> =
                complement.iter().map(|&c| reduced[c].clone()).collect();
            out.set_bracket(a, b, coords);
        }
    }
    out
}

/// Existence of a full flag of ideals with one-dimensional quotients, by
/// exhaustive search over rational common eigenlines and recursion on the
/// quotient. Exact for fixtures whose weights are rational (all catalog
/// fixtures); a real flag with irrational weights would be missed, so this
/// oracle is only consulted at desk scale on integer-weight fixtures.
pub fn rational_ideal_flag_exists(g: &Algebra) -> bool {
    let n = g.dim();
    if n == 0 {
        return true;
    }
    // refine candidate subspaces by rational eigenspaces of each ad(e_j)
    let mut candidates = vec![RatSubspace::full(n)];
    for j in 0..n {
        let ad = g.ad_basis(j);
        let eigenvalues = rational_roots(&ad.char_poly().unwrap());
        let mut next = Vec::new();
        for lambda in &eigenvalues {
            let mut shifted = ad.clone();
            for i in 0..n {
                let v = shifted.get(i, i).clone() - lambda.clone();
                shifted.set(i, i, v);
            }
            let eigenspace = RatSubspace::span(n, &shifted.kernel_basis());
            for cand in &candidates {
                let meet = intersect(cand, &eigenspace);
                if meet.dim() > 0 && !next.contains(&meet) {
                    next.push(meet);
                }
            }
        }
        candidates = next;
        if candidates.is_empty() {
            return false;
        }
    }
    for cand in candidates {
        for x in cand.basis() {
            let line = RatSubspace::span(n, std::slice::from_ref(x));
            if rational_ideal_flag_exists(&quotient_by_line(g, &line)) {
                return true;
            }
        }
    }
    false
}
