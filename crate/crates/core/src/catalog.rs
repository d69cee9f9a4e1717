//! Built-in catalog of the rigid solvable real Lie algebras of dimension at
//! most 8 with non-diagonal derivations, their nilpotent supports, and the
//! exterior tori used for the non-conjugacy certificates.
//!
//! Entries whose published bracket tables contain transcription defects are
//! stored twice: a canonical corrected table (consistent with the Jacobi
//! identity, rigidity, and the nilradical pairing) and an `_var` entry
//! carrying the defective table verbatim so the verifier can report the
//! discrepancy instead of hiding it.

use crate::error::LieError;
use crate::{Algebra, RatMatrix, Rational};
use num_traits::{FromPrimitive, Zero};

/// One catalog item: either full structure constants or a name-only stub for
/// a normal form whose constants are not transcribed here.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub dim: usize,
    pub description: &'static str,
    pub kind: EntryKind,
}

#[derive(Debug, Clone)]
pub enum EntryKind {
    Full(Box<FullEntry>),
    /// External normal form, listed for the pairing table only.
    Stub,
}

#[derive(Debug, Clone)]
pub struct FullEntry {
    pub constants: Algebra,
    pub tori: Vec<NamedTorus>,
    pub expected: Expected,
}

/// Torus generators bundled with the entry they act on.
#[derive(Debug, Clone)]
pub struct NamedTorus {
    pub name: &'static str,
    pub generators: Vec<RatMatrix>,
}

/// Claims the verifier checks for the entry. `None` means unasserted.
#[derive(Debug, Clone, Default)]
pub struct Expected {
    pub is_lie_algebra: bool,
    pub rigid: Option<bool>,
    pub completely_solvable: Option<bool>,
    pub nilradical_dim: Option<usize>,
}

impl CatalogEntry {
    pub fn is_stub(&self) -> bool {
        matches!(self.kind, EntryKind::Stub)
    }

    pub fn full(&self) -> Option<&FullEntry> {
        match &self.kind {
            EntryKind::Full(f) => Some(f),
            EntryKind::Stub => None,
        }
    }

    /// Structure constants, or a stub error.
    pub fn constants(&self) -> Result<&Algebra, LieError> {
        self.full()
            .map(|f| &f.constants)
            .ok_or_else(|| LieError::StubEntry(self.name.to_string()))
    }
}

fn q(v: i64) -> Rational {
    Rational::from_i64(v).unwrap()
}

/// One bracket line, 1-based: `(i, j, [(k, c)])` meaning `[X_i, X_j] = sum c X_k`.
type BracketSpec<'a> = (usize, usize, &'a [(usize, i64)]);

fn alg(dim: usize, brackets: &[BracketSpec]) -> Algebra {
    let mut g = Algebra::new(dim);
    for &(i, j, terms) in brackets {
        let mut v = vec![Rational::zero(); dim];
        for &(k, c) in terms {
            v[k - 1] = q(c);
        }
        g.set_bracket(i - 1, j - 1, v);
    }
    g
}

fn mat(rows: &[&[i64]]) -> RatMatrix {
    RatMatrix::from_i64(rows)
}

fn full_entry(
    name: &'static str,
    dim: usize,
    description: &'static str,
    constants: Algebra,
    tori: Vec<NamedTorus>,
    expected: Expected,
) -> CatalogEntry {
    CatalogEntry {
        name,
        dim,
        description,
        kind: EntryKind::Full(Box::new(FullEntry {
            constants,
            tori,
            expected,
        })),
    }
}

fn stub(name: &'static str, dim: usize, description: &'static str) -> CatalogEntry {
    CatalogEntry {
        name,
        dim,
        description,
        kind: EntryKind::Stub,
    }
}

const RIGID: Expected = Expected {
    is_lie_algebra: true,
    rigid: Some(true),
    completely_solvable: Some(false),
    nilradical_dim: None,
};

fn rigid_with_nilradical(dim: usize) -> Expected {
    Expected {
        nilradical_dim: Some(dim),
        ..RIGID
    }
}

fn nilpotent_expected(dim: usize) -> Expected {
    Expected {
        is_lie_algebra: true,
        rigid: Some(false),
        completely_solvable: Some(true),
        nilradical_dim: Some(dim),
    }
}

/// All entries, catalog order.
pub fn entries() -> Vec<CatalogEntry> {
    vec![
        full_entry(
            "a2",
            2,
            "abelian plane; smallest algebra with two non-conjugate maximal tori",
            Algebra::new(2),
            vec![
                NamedTorus {
                    name: "t1",
                    generators: vec![mat(&[&[1, 0], &[0, 0]]), mat(&[&[0, 0], &[0, 1]])],
                },
                NamedTorus {
                    name: "t2",
                    generators: vec![mat(&[&[1, 0], &[0, 1]]), mat(&[&[0, -1], &[1, 0]])],
                },
            ],
            nilpotent_expected(2),
        ),
        full_entry(
            "h1",
            3,
            "Heisenberg algebra of dimension 3",
            alg(3, &[(1, 2, &[(3, 1)])]),
            vec![
                NamedTorus {
                    name: "t1",
                    generators: vec![
                        mat(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]),
                        mat(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
                    ],
                },
                NamedTorus {
                    name: "t2",
                    generators: vec![
                        mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]),
                        mat(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
                    ],
                },
            ],
            nilpotent_expected(3),
        ),
        full_entry(
            "h2",
            5,
            "Heisenberg algebra of dimension 5",
            alg(5, &[(1, 2, &[(5, 1)]), (3, 4, &[(5, 1)])]),
            vec![],
            nilpotent_expected(5),
        ),
        full_entry(
            "N5_3",
            5,
            "free nilpotent algebra on two generators of class 3",
            alg(5, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (2, 3, &[(5, 1)])]),
            vec![
                NamedTorus {
                    name: "t1",
                    generators: vec![
                        mat(&[
                            &[1, 0, 0, 0, 0],
                            &[0, 0, 0, 0, 0],
                            &[0, 0, 1, 0, 0],
                            &[0, 0, 0, 2, 0],
                            &[0, 0, 0, 0, 1],
                        ]),
                        mat(&[
                            &[0, 0, 0, 0, 0],
                            &[0, 1, 0, 0, 0],
                            &[0, 0, 1, 0, 0],
                            &[0, 0, 0, 1, 0],
                            &[0, 0, 0, 0, 2],
                        ]),
                    ],
                },
                NamedTorus {
                    name: "t2",
                    generators: vec![
                        mat(&[
                            &[1, 0, 0, 0, 0],
                            &[0, 1, 0, 0, 0],
                            &[0, 0, 2, 0, 0],
                            &[0, 0, 0, 3, 0],
                            &[0, 0, 0, 0, 3],
                        ]),
                        mat(&[
                            &[0, 1, 0, 0, 0],
                            &[-1, 0, 0, 0, 0],
                            &[0, 0, 0, 0, 0],
                            &[0, 0, 0, 0, 1],
                            &[0, 0, 0, -1, 0],
                        ]),
                    ],
                },
            ],
            nilpotent_expected(5),
        ),
        full_entry(
            "g4_normal",
            4,
            "split torus extension of the abelian plane (normal real form of r2^2)",
            alg(4, &[(1, 3, &[(3, 1)]), (2, 4, &[(4, 1)])]),
            vec![],
            Expected {
                is_lie_algebra: true,
                rigid: Some(true),
                completely_solvable: Some(true),
                nilradical_dim: Some(2),
            },
        ),
        full_entry(
            "g4_rotated",
            4,
            "rotational torus extension of the abelian plane (second real form of r2^2)",
            alg(
                4,
                &[
                    (1, 3, &[(3, 1)]),
                    (1, 4, &[(4, 1)]),
                    (2, 3, &[(4, 1)]),
                    (2, 4, &[(3, -1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(2),
        ),
        full_entry(
            "g4_2",
            4,
            "rigid classification list, dimension 4",
            alg(
                4,
                &[
                    (1, 3, &[(2, 1)]),
                    (2, 3, &[(1, -1)]),
                    (1, 4, &[(1, -1)]),
                    (2, 4, &[(2, -1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(2),
        ),
        full_entry(
            "g5_2",
            5,
            "rigid classification list, dimension 5",
            alg(
                5,
                &[
                    (1, 2, &[(3, 1)]),
                    (1, 4, &[(1, -1)]),
                    (2, 4, &[(2, -1)]),
                    (3, 4, &[(3, -2)]),
                    (1, 5, &[(2, 1)]),
                    (2, 5, &[(1, -1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(3),
        ),
        full_entry(
            "g6_4",
            6,
            "rigid classification list, dimension 6",
            alg(
                6,
                &[
                    (1, 3, &[(2, 1)]),
                    (2, 3, &[(1, -1)]),
                    (1, 4, &[(1, -1)]),
                    (2, 4, &[(2, -1)]),
                    (5, 6, &[(5, 1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(3),
        ),
        full_entry(
            "g7_9",
            7,
            "rigid classification list, dimension 7; torus with a double rotation over N5_3",
            alg(
                7,
                &[
                    (1, 2, &[(3, 1)]),
                    (1, 3, &[(4, 1)]),
                    (2, 3, &[(5, 1)]),
                    (1, 6, &[(2, 1)]),
                    (2, 6, &[(1, -1)]),
                    (4, 6, &[(5, 1)]),
                    (5, 6, &[(4, -1)]),
                    (1, 7, &[(1, -1)]),
                    (2, 7, &[(2, -1)]),
                    (3, 7, &[(3, -2)]),
                    (4, 7, &[(4, -3)]),
                    (5, 7, &[(5, -3)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(5),
        ),
        full_entry(
            "g7_9_var",
            7,
            "erratum variant of g7_9 with [X2,X3] = X4; fails the Jacobi identity",
            alg(
                7,
                &[
                    (1, 2, &[(3, 1)]),
                    (1, 3, &[(4, 1)]),
                    (2, 3, &[(4, 1)]),
                    (1, 6, &[(2, 1)]),
                    (2, 6, &[(1, -1)]),
                    (4, 6, &[(5, 1)]),
                    (5, 6, &[(4, -1)]),
                    (1, 7, &[(1, -1)]),
                    (2, 7, &[(2, -1)]),
                    (3, 7, &[(3, -2)]),
                    (4, 7, &[(4, -3)]),
                    (5, 7, &[(5, -3)]),
                ],
            ),
            vec![],
            Expected {
                is_lie_algebra: false,
                ..Expected::default()
            },
        ),
        full_entry(
            "g7_10",
            7,
            "rigid classification list, dimension 7; nilradical h1 + R",
            alg(
                7,
                &[
                    (1, 2, &[(3, 1)]),
                    (1, 5, &[(1, -1)]),
                    (2, 5, &[(2, -1)]),
                    (3, 5, &[(3, -2)]),
                    (1, 6, &[(2, 1)]),
                    (2, 6, &[(1, -1)]),
                    (4, 7, &[(4, -1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(4),
        ),
        full_entry(
            "g7_10_var",
            7,
            "erratum variant of g7_10 without [X1,X2] = X3; valid but not rigid and with abelian nilradical",
            alg(
                7,
                &[
                    (1, 5, &[(1, -1)]),
                    (2, 5, &[(2, -1)]),
                    (3, 5, &[(3, -2)]),
                    (1, 6, &[(2, 1)]),
                    (2, 6, &[(1, -1)]),
                    (4, 7, &[(4, -1)]),
                ],
            ),
            vec![],
            Expected {
                is_lie_algebra: true,
                rigid: Some(false),
                completely_solvable: Some(false),
                nilradical_dim: Some(4),
            },
        ),
        full_entry(
            "g8_34",
            8,
            "rigid classification list, dimension 8; g4_2 + g4_2",
            alg(
                8,
                &[
                    (1, 3, &[(2, 1)]),
                    (2, 3, &[(1, -1)]),
                    (1, 4, &[(1, -1)]),
                    (2, 4, &[(2, -1)]),
                    (5, 7, &[(6, 1)]),
                    (6, 7, &[(5, -1)]),
                    (5, 8, &[(5, -1)]),
                    (6, 8, &[(6, -1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(4),
        ),
        full_entry(
            "g8_35",
            8,
            "rigid classification list, dimension 8; g4_2 + aff(R) + aff(R)",
            alg(
                8,
                &[
                    (1, 3, &[(2, 1)]),
                    (2, 3, &[(1, -1)]),
                    (1, 4, &[(1, -1)]),
                    (2, 4, &[(2, -1)]),
                    (5, 6, &[(6, 1)]),
                    (7, 8, &[(8, 1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(4),
        ),
        full_entry(
            "g8_36",
            8,
            "rigid classification list, dimension 8; nilradical N5_5",
            alg(
                8,
                &[
                    (1, 2, &[(4, 1)]),
                    (1, 3, &[(5, 1)]),
                    (1, 6, &[(1, -1)]),
                    (4, 6, &[(4, -1)]),
                    (5, 6, &[(5, -1)]),
                    (2, 7, &[(3, 1)]),
                    (3, 7, &[(2, -1)]),
                    (4, 7, &[(5, 1)]),
                    (5, 7, &[(4, -1)]),
                    (2, 8, &[(2, -1)]),
                    (3, 8, &[(3, -1)]),
                    (4, 8, &[(4, -1)]),
                    (5, 8, &[(5, -1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(5),
        ),
        full_entry(
            "g8_37",
            8,
            "rigid classification list, dimension 8; two rotations over h2",
            alg(
                8,
                &[
                    (1, 2, &[(5, 1)]),
                    (3, 4, &[(5, 1)]),
                    (1, 6, &[(1, -1)]),
                    (2, 6, &[(2, -1)]),
                    (3, 6, &[(3, -1)]),
                    (4, 6, &[(4, -1)]),
                    (5, 6, &[(5, -2)]),
                    (1, 7, &[(2, 1)]),
                    (2, 7, &[(1, -1)]),
                    (3, 8, &[(4, 1)]),
                    (4, 8, &[(3, -1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(5),
        ),
        full_entry(
            "g8_37_var",
            8,
            "erratum variant of g8_37 with the grading derivation acting only on X1, X2; fails the Jacobi identity",
            alg(
                8,
                &[
                    (1, 2, &[(5, 1)]),
                    (3, 4, &[(5, 1)]),
                    (1, 6, &[(1, -1)]),
                    (2, 6, &[(2, -1)]),
                    (5, 6, &[(5, -2)]),
                    (1, 7, &[(2, 1)]),
                    (2, 7, &[(1, -1)]),
                    (3, 8, &[(4, 1)]),
                    (4, 8, &[(3, -1)]),
                ],
            ),
            vec![],
            Expected {
                is_lie_algebra: false,
                ..Expected::default()
            },
        ),
        full_entry(
            "g8_38",
            8,
            "rigid classification list, dimension 8; one rotation and one split pair over h2",
            alg(
                8,
                &[
                    (1, 2, &[(5, 1)]),
                    (3, 4, &[(5, 1)]),
                    (1, 6, &[(1, -1)]),
                    (2, 6, &[(2, -1)]),
                    (3, 6, &[(3, -1)]),
                    (4, 6, &[(4, -1)]),
                    (5, 6, &[(5, -2)]),
                    (1, 7, &[(1, -1)]),
                    (2, 7, &[(2, 1)]),
                    (3, 8, &[(4, 1)]),
                    (4, 8, &[(3, -1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(5),
        ),
        full_entry(
            "g8_38_var",
            8,
            "erratum variant of g8_38 with the grading derivation acting only on X1, X2; fails the Jacobi identity",
            alg(
                8,
                &[
                    (1, 2, &[(5, 1)]),
                    (3, 4, &[(5, 1)]),
                    (1, 6, &[(1, -1)]),
                    (2, 6, &[(2, -1)]),
                    (5, 6, &[(5, -2)]),
                    (1, 7, &[(1, -1)]),
                    (2, 7, &[(2, 1)]),
                    (3, 8, &[(4, 1)]),
                    (4, 8, &[(3, -1)]),
                ],
            ),
            vec![],
            Expected {
                is_lie_algebra: false,
                ..Expected::default()
            },
        ),
        full_entry(
            "g8_39",
            8,
            "rigid classification list, dimension 8; nilradical N6_6",
            alg(
                8,
                &[
                    (1, 2, &[(3, 1)]),
                    (1, 3, &[(4, 1)]),
                    (1, 4, &[(5, 1)]),
                    (2, 3, &[(6, -1)]),
                    (2, 6, &[(5, -1)]),
                    (1, 7, &[(1, -1)]),
                    (2, 7, &[(2, -1)]),
                    (3, 7, &[(3, -2)]),
                    (4, 7, &[(4, -3)]),
                    (5, 7, &[(5, -4)]),
                    (6, 7, &[(6, -3)]),
                    (1, 8, &[(2, -1)]),
                    (2, 8, &[(1, 1)]),
                    (4, 8, &[(6, 1)]),
                    (6, 8, &[(4, -1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(6),
        ),
        full_entry(
            "g8_40",
            8,
            "rigid classification list, dimension 8; nilradical N6_14",
            alg(
                8,
                &[
                    (1, 2, &[(4, 1)]),
                    (1, 3, &[(5, 1)]),
                    (1, 4, &[(6, 1)]),
                    (2, 3, &[(6, 1)]),
                    (2, 4, &[(5, -1)]),
                    (1, 7, &[(1, -1)]),
                    (2, 7, &[(2, -1)]),
                    (3, 7, &[(3, -2)]),
                    (4, 7, &[(4, -2)]),
                    (5, 7, &[(5, -3)]),
                    (6, 7, &[(6, -3)]),
                    (1, 8, &[(2, -1)]),
                    (2, 8, &[(1, 1)]),
                    (5, 8, &[(6, -1)]),
                    (6, 8, &[(5, 1)]),
                ],
            ),
            vec![],
            rigid_with_nilradical(6),
        ),
        stub("g4_1", 4, "normal form over the abelian plane (complex classification)"),
        stub("g5_1", 5, "normal form over h1 (complex classification)"),
        stub("g6_3", 6, "normal form, dimension 6 (complex classification)"),
        stub("g7_6", 7, "normal form over N5_3 (complex classification)"),
        stub("g7_8", 7, "normal form over h1 + R (complex classification)"),
        stub("g8_22", 8, "normal form over N6_6 (complex classification)"),
        stub("g8_29", 8, "normal form over N6_14 (complex classification)"),
        stub("g8_31", 8, "normal form over N5_5 (complex classification)"),
        stub("g8_32", 8, "normal form over h2 (complex classification)"),
        stub("g8_33", 8, "normal form over the abelian nilradical, dimension 8 (complex classification)"),
    ]
}

/// Lookup by name.
pub fn get(name: &str) -> Result<CatalogEntry, LieError> {
    entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| LieError::UnknownCatalogEntry(name.to_string()))
}

/// Heisenberg algebra `h_n` of dimension `2n + 1`:
/// `[X_{2i-1}, X_{2i}] = X_{2n+1}`.
pub fn heisenberg(n: usize) -> Result<Algebra, LieError> {
    if n == 0 {
        return Err(LieError::InvalidParameter(
            "Heisenberg algebra requires n >= 1".into(),
        ));
    }
    let dim = 2 * n + 1;
    let mut g = Algebra::new(dim);
    for i in 1..=n {
        let mut v = vec![Rational::zero(); dim];
        v[dim - 1] = q(1);
        g.set_bracket(2 * i - 2, 2 * i - 1, v);
    }
    Ok(g)
}

/// The real forms of the rigid algebra over `h_n`, dimension `3n + 2`:
/// basis `X_1..X_{2n+1}, Y_1..Y_{n+1}` with `k` rotation-type torus
/// generators (`[Y_i, X_{2i-1}] = X_{2i}`, `[Y_i, X_{2i}] = -X_{2i-1}` for
/// `i <= k`), split pairs for `k < i <= n`, and the grading action
/// `[Y_{n+1}, X_i] = X_i` (`i <= 2n`), `[Y_{n+1}, X_{2n+1}] = 2 X_{2n+1}`.
/// `k = 0` is the split (normal) form.
pub fn heisenberg_rigid_form(n: usize, k: usize) -> Result<Algebra, LieError> {
    if n == 0 {
        return Err(LieError::InvalidParameter(
            "Heisenberg family requires n >= 1".into(),
        ));
    }
    if k > n {
        return Err(LieError::InvalidParameter(format!(
            "rotation count k = {k} exceeds n = {n}"
        )));
    }
    let dim = 3 * n + 2;
    let center = 2 * n; // 0-based index of X_{2n+1}
    let y = |i: usize| 2 * n + i; // 0-based index of Y_i, 1 <= i <= n+1
    let mut g = Algebra::new(dim);
    for i in 1..=n {
        let mut v = vec![Rational::zero(); dim];
        v[center] = q(1);
        g.set_bracket(2 * i - 2, 2 * i - 1, v);
    }
    for i in 1..=n {
        let (a, b) = (2 * i - 2, 2 * i - 1); // X_{2i-1}, X_{2i}
        if i <= k {
            // rotation: [Y_i, X_{2i-1}] = X_{2i}, [Y_i, X_{2i}] = -X_{2i-1}
            let mut v = vec![Rational::zero(); dim];
            v[b] = q(-1);
            g.set_bracket(a, y(i), v);
            let mut w = vec![Rational::zero(); dim];
            w[a] = q(1);
            g.set_bracket(b, y(i), w);
        } else {
            // split: [Y_i, X_{2i-1}] = X_{2i-1}, [Y_i, X_{2i}] = -X_{2i}
            let mut v = vec![Rational::zero(); dim];
            v[a] = q(-1);
            g.set_bracket(a, y(i), v);
            let mut w = vec![Rational::zero(); dim];
            w[b] = q(1);
            g.set_bracket(b, y(i), w);
        }
    }
    for x in 0..2 * n {
        let mut v = vec![Rational::zero(); dim];
        v[x] = q(-1);
        g.set_bracket(x, y(n + 1), v);
    }
    let mut v = vec![Rational::zero(); dim];
    v[center] = q(-2);
    g.set_bracket(center, y(n + 1), v);
    Ok(g)
}

/// One row of the nilradical pairing table: the real forms supported on a
/// common nilradical.
#[derive(Debug, Clone)]
pub struct NilradicalRow {
    pub dim: usize,
    pub nilradical: &'static str,
    pub forms: Vec<FormRef>,
}

#[derive(Debug, Clone)]
pub struct FormRef {
    pub name: &'static str,
    /// Name-only stub, constants not transcribed here.
    pub external: bool,
}

fn form(name: &'static str, external: bool) -> FormRef {
    FormRef { name, external }
}

/// The pairing of rigid real forms over a common nilradical.
pub fn table1_pairs() -> Vec<NilradicalRow> {
    vec![
        NilradicalRow {
            dim: 4,
            nilradical: "abelian",
            forms: vec![form("g4_1", true), form("g4_2", false)],
        },
        NilradicalRow {
            dim: 5,
            nilradical: "N3 = h1",
            forms: vec![form("g5_1", true), form("g5_2", false)],
        },
        NilradicalRow {
            dim: 6,
            nilradical: "abelian",
            forms: vec![form("g6_3", true), form("g6_4", false)],
        },
        NilradicalRow {
            dim: 7,
            nilradical: "N3 + R",
            forms: vec![form("g7_8", true), form("g7_10", false)],
        },
        NilradicalRow {
            dim: 7,
            nilradical: "N5_3",
            forms: vec![form("g7_6", true), form("g7_9", false)],
        },
        NilradicalRow {
            dim: 8,
            nilradical: "abelian",
            forms: vec![form("g8_33", true), form("g8_34", false), form("g8_35", false)],
        },
        NilradicalRow {
            dim: 8,
            nilradical: "N5_5",
            forms: vec![form("g8_31", true), form("g8_36", false)],
        },
        NilradicalRow {
            dim: 8,
            nilradical: "N5_6 = h2",
            forms: vec![form("g8_32", true), form("g8_37", false), form("g8_38", false)],
        },
        NilradicalRow {
            dim: 8,
            nilradical: "N6_6",
            forms: vec![form("g8_22", true), form("g8_39", false)],
        },
        NilradicalRow {
            dim: 8,
            nilradical: "N6_14",
            forms: vec![form("g8_29", true), form("g8_40", false)],
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn get_known_and_unknown() {
        assert_eq!(get("h1").unwrap().dim, 3);
        assert!(matches!(
            get("nope"),
            Err(LieError::UnknownCatalogEntry(_))
        ));
        assert!(get("g7_6").unwrap().is_stub());
        assert!(matches!(
            get("g7_6").unwrap().constants(),
            Err(LieError::StubEntry(_))
        ));
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = entries().iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), entries().len());
    }

    #[test]
    fn expected_bracket_samples() {
        // [X6,X5] = 2 X5 in g8_37, stored as [X5,X6] = -2 X5
        let g = get("g8_37").unwrap();
        let c = g.full().unwrap().constants.constant(4, 5, 4);
        assert_eq!(c, q(-2));
        // [X1,X3] = X2 in g4_2
        let g = get("g4_2").unwrap();
        assert_eq!(g.full().unwrap().constants.constant(0, 2, 1), q(1));
        // N5_3 brackets
        let g = get("N5_3").unwrap();
        let c = &g.full().unwrap().constants;
        assert_eq!(c.constant(0, 1, 2), q(1));
        assert_eq!(c.constant(0, 2, 3), q(1));
        assert_eq!(c.constant(1, 2, 4), q(1));
    }

    #[test]
    fn canonical_entries_pass_jacobi() {
        for entry in entries() {
            let Some(full) = entry.full() else { continue };
            assert_eq!(
                full.constants.is_lie_algebra(),
                full.expected.is_lie_algebra,
                "{}",
                entry.name
            );
        }
    }

    #[test]
    fn heisenberg_parameters() {
        assert!(heisenberg(0).is_err());
        let h1 = heisenberg(1).unwrap();
        assert_eq!(h1, get("h1").unwrap().full().unwrap().constants);
        for n in 1..=4 {
            let g = heisenberg(n).unwrap();
            assert_eq!(g.dim(), 2 * n + 1);
            assert!(g.is_lie_algebra());
            assert_eq!(g.center().dim(), 1);
        }
    }

    #[test]
    fn heisenberg_family_valid() {
        assert!(heisenberg_rigid_form(1, 2).is_err());
        assert!(heisenberg_rigid_form(0, 0).is_err());
        for n in 1..=2 {
            for k in 0..=n {
                let g = heisenberg_rigid_form(n, k).unwrap();
                assert_eq!(g.dim(), 3 * n + 2);
                assert!(g.is_lie_algebra(), "family ({n}, {k})");
            }
        }
    }

    #[test]
    fn family_k1_matches_g5_2_up_to_relabeling() {
        // swap the two torus directions and flip the rotation sign
        let fam = heisenberg_rigid_form(1, 1).unwrap();
        let p = RatMatrix::from_i64(&[
            &[1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, 0, -1],
            &[0, 0, 0, 1, 0],
        ]);
        let relabeled = fam.change_basis(&p).unwrap();
        let g5_2 = get("g5_2").unwrap().full().unwrap().constants.clone();
        assert_eq!(relabeled, g5_2);
    }

    #[test]
    fn table_rows_reference_catalog_names() {
        for row in table1_pairs() {
            for f in &row.forms {
                let entry = get(f.name).unwrap();
                assert_eq!(entry.is_stub(), f.external, "{}", f.name);
                assert_eq!(entry.dim, row.dim);
            }
        }
    }
}
