//! Line-based input format for structure constants and torus blocks.
//!
//! ```text
//! # comment
//! algebra h1 dim 3
//! basis X1 X2 X3
//! [X1,X2] = X3
//! torus t2
//! row 1 0 0
//! row 0 1 0
//! row 0 0 2
//! ```
//!
//! Grammar, one statement per line: a header `algebra <name> dim <n>`,
//! `basis <id>+` lines, bracket lines `[<id>,<id>] = <term> (("+"|"-")
//! <term>)*` with `<term> = [<rational> "*"] <id>` and rationals
//! `[-]int[/posint]`, and `torus <name>` blocks of `row <rational>+` lines
//! grouped into square matrices. Unspecified brackets are zero.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Algebra, RatMatrix, Rational};

/// Parsed and normalized document: bracket statements keyed by ascending
/// basis index pairs, coefficients combined and reduced, zero terms dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketStatement>,
    pub tori: Vec<TorusBlock>,
}

/// `[basis[left], basis[right]] = sum coeff * basis[target]` with
/// `left < right` and targets strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketStatement {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<(Rational, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusBlock {
    pub name: String,
    pub generators: Vec<RatMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownLabel(String),
    DuplicateLabel(String),
    DuplicateBracket(String, String),
    SelfBracket(String),
    RowLength { expected: usize, got: usize },
    MissingHeader,
    BasisSizeMismatch { declared: usize, got: usize },
    IncompleteTorus { name: String, rows: usize },
    DuplicateTorus(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.col)?;
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "{msg}"),
            ParseErrorKind::UnknownLabel(l) => write!(f, "unknown basis label `{l}`"),
            ParseErrorKind::DuplicateLabel(l) => write!(f, "duplicate basis label `{l}`"),
            ParseErrorKind::DuplicateBracket(a, b) => {
                write!(f, "bracket [{a},{b}] specified twice")
            }
            ParseErrorKind::SelfBracket(l) => {
                write!(f, "self-bracket [{l},{l}] is identically zero")
            }
            ParseErrorKind::RowLength { expected, got } => {
                write!(f, "torus row has {got} entries, expected {expected}")
            }
            ParseErrorKind::MissingHeader => {
                write!(f, "expected header `algebra <name> dim <n>`")
            }
            ParseErrorKind::BasisSizeMismatch { declared, got } => {
                write!(f, "header declares dim {declared} but {got} basis labels given")
            }
            ParseErrorKind::IncompleteTorus { name, rows } => {
                write!(f, "torus `{name}` has {rows} rows, not a multiple of the dimension")
            }
            ParseErrorKind::DuplicateTorus(n) => write!(f, "torus `{n}` specified twice"),
        }
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line_no: usize,
    _text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line_no: usize) -> Self {
        Self {
            chars: text.chars().collect(),
            pos: 0,
            line_no,
            _text: text,
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line_no,
            col: self.col(),
            kind,
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.err(ParseErrorKind::Syntax(msg.into()))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect_char(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.syntax(format!("expected `{want}`"))),
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.syntax("unexpected trailing input"))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return Err(self.syntax("expected identifier")),
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let negative = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let value: BigInt = digits.parse().expect("digits parse");
        Ok(if negative { -value } else { value })
    }

    /// `[-]int[/posint]`
    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.integer()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let col = self.col();
            let denom = self.integer()?;
            if !denom.is_positive() {
                return Err(ParseError {
                    line: self.line_no,
                    col,
                    kind: ParseErrorKind::Syntax("denominator must be positive".into()),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses a document, normalizing bracket statements, or reports the first
/// defect with its line and column.
pub fn parse(text: &str) -> Result<AlgebraDocument, ParseError> {
    let mut doc: Option<AlgebraDocument> = None;
    let mut open_torus: Option<(TorusBlock, Vec<Vec<Rational>>, usize)> = None;

    let close_torus = |doc: &mut AlgebraDocument,
                       open: Option<(TorusBlock, Vec<Vec<Rational>>, usize)>|
     -> Result<(), ParseError> {
        let Some((mut block, rows, line_no)) = open else {
            return Ok(());
        };
        let n = doc.dim;
        if rows.len() % n != 0 {
            return Err(ParseError {
                line: line_no,
                col: 1,
                kind: ParseErrorKind::IncompleteTorus {
                    name: block.name,
                    rows: rows.len(),
                },
            });
        }
        for chunk in rows.chunks(n) {
            block
                .generators
                .push(RatMatrix::from_rows(chunk.to_vec()));
        }
        doc.tori.push(block);
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let stripped = strip_comment(raw);
        let mut cur = Cursor::new(stripped, line_no);
        if cur.at_end() {
            continue;
        }
        let Some(doc_ref) = doc.as_mut() else {
            // first significant line must be the header
            let kw = cur.ident().map_err(|mut e| {
                e.kind = ParseErrorKind::MissingHeader;
                e
            })?;
            if kw != "algebra" {
                return Err(ParseError {
                    line: line_no,
                    col: 1,
                    kind: ParseErrorKind::MissingHeader,
                });
            }
            let name = cur.ident()?;
            let dim_kw = cur.ident()?;
            if dim_kw != "dim" {
                return Err(cur.syntax("expected keyword `dim`"));
            }
            let n = cur.integer()?;
            let dim: usize = n
                .try_into()
                .map_err(|_| cur.syntax("dimension out of range"))?;
            cur.expect_end()?;
            doc = Some(AlgebraDocument {
                name,
                dim,
                basis: Vec::new(),
                brackets: Vec::new(),
                tori: Vec::new(),
            });
            continue;
        };

        cur.skip_ws();
        if cur.peek() == Some('[') {
            // brackets close any open torus block
            close_torus(doc_ref, open_torus.take())?;
            parse_bracket_line(&mut cur, doc_ref)?;
            continue;
        }
        let col_kw = cur.col();
        let kw = cur.ident()?;
        match kw.as_str() {
            "basis" => {
                close_torus(doc_ref, open_torus.take())?;
                loop {
                    cur.skip_ws();
                    if cur.peek().is_none() {
                        break;
                    }
                    let col = cur.col();
                    let label = cur.ident()?;
                    if doc_ref.basis.contains(&label) {
                        return Err(ParseError {
                            line: line_no,
                            col,
                            kind: ParseErrorKind::DuplicateLabel(label),
                        });
                    }
                    doc_ref.basis.push(label);
                }
            }
            "torus" => {
                close_torus(doc_ref, open_torus.take())?;
                let name = cur.ident()?;
                cur.expect_end()?;
                if doc_ref.tori.iter().any(|t| t.name == name) {
                    return Err(ParseError {
                        line: line_no,
                        col: 1,
                        kind: ParseErrorKind::DuplicateTorus(name),
                    });
                }
                open_torus = Some((
                    TorusBlock {
                        name,
                        generators: Vec::new(),
                    },
                    Vec::new(),
                    line_no,
                ));
            }
            "row" => {
                let Some((_, rows, _)) = open_torus.as_mut() else {
                    return Err(ParseError {
                        line: line_no,
                        col: col_kw,
                        kind: ParseErrorKind::Syntax(
                            "`row` outside of a torus block".into(),
                        ),
                    });
                };
                let mut row = Vec::new();
                loop {
                    cur.skip_ws();
                    if cur.peek().is_none() {
                        break;
                    }
                    row.push(cur.rational()?);
                }
                if row.len() != doc_ref.dim {
                    return Err(ParseError {
                        line: line_no,
                        col: 1,
                        kind: ParseErrorKind::RowLength {
                            expected: doc_ref.dim,
                            got: row.len(),
                        },
                    });
                }
                rows.push(row);
            }
            other => {
                return Err(ParseError {
                    line: line_no,
                    col: col_kw,
                    kind: ParseErrorKind::Syntax(format!("unknown statement `{other}`")),
                });
            }
        }
    }

    let Some(mut doc) = doc else {
        return Err(ParseError {
            line: 1,
            col: 1,
            kind: ParseErrorKind::MissingHeader,
        });
    };
    close_torus(&mut doc, open_torus.take())?;
    if doc.basis.len() != doc.dim {
        return Err(ParseError {
            line: text.lines().count().max(1),
            col: 1,
            kind: ParseErrorKind::BasisSizeMismatch {
                declared: doc.dim,
                got: doc.basis.len(),
            },
        });
    }
    doc.brackets.sort_by_key(|b| (b.left, b.right));
    Ok(doc)
}

fn parse_bracket_line(cur: &mut Cursor, doc: &mut AlgebraDocument) -> Result<(), ParseError> {
    let lookup = |cur: &Cursor, col: usize, label: &str, basis: &[String]| {
        basis.iter().position(|b| b == label).ok_or(ParseError {
            line: cur.line_no,
            col,
            kind: ParseErrorKind::UnknownLabel(label.to_string()),
        })
    };
    cur.expect_char('[')?;
    cur.skip_ws();
    let col_a = cur.col();
    let a_label = cur.ident()?;
    cur.expect_char(',')?;
    cur.skip_ws();
    let col_b = cur.col();
    let b_label = cur.ident()?;
    cur.expect_char(']')?;
    cur.expect_char('=')?;
    let a = lookup(cur, col_a, &a_label, &doc.basis)?;
    let b = lookup(cur, col_b, &b_label, &doc.basis)?;
    if a == b {
        return Err(ParseError {
            line: cur.line_no,
            col: col_a,
            kind: ParseErrorKind::SelfBracket(a_label),
        });
    }

    let mut coeffs = vec![Rational::zero(); doc.dim];
    let mut sign = Rational::one();
    loop {
        // term: [rational "*"] id
        cur.skip_ws();
        let col_t = cur.col();
        let coeff = if cur.peek().is_some_and(|c| c.is_ascii_digit() || c == '-') {
            let r = cur.rational()?;
            cur.expect_char('*')?;
            r
        } else {
            Rational::one()
        };
        cur.skip_ws();
        let col_id = cur.col();
        let label = cur.ident().map_err(|_| ParseError {
            line: cur.line_no,
            col: col_t.max(col_id),
            kind: ParseErrorKind::Syntax("expected term `[rational *] id`".into()),
        })?;
        let target = lookup(cur, col_id, &label, &doc.basis)?;
        coeffs[target] = coeffs[target].clone() + sign.clone() * coeff;

        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.bump();
                sign = Rational::one();
            }
            Some('-') => {
                cur.bump();
                sign = -Rational::one();
            }
            Some(_) => return Err(cur.syntax("expected `+`, `-`, or end of line")),
        }
    }

    // normalize to ascending pair
    let (left, right, coeffs) = if a < b {
        (a, b, coeffs)
    } else {
        (b, a, coeffs.into_iter().map(|c| -c).collect())
    };
    if doc.brackets.iter().any(|s| (s.left, s.right) == (left, right)) {
        return Err(ParseError {
            line: cur.line_no,
            col: 1,
            kind: ParseErrorKind::DuplicateBracket(
                doc.basis[left].clone(),
                doc.basis[right].clone(),
            ),
        });
    }
    let terms: Vec<(Rational, usize)> = coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (c, k))
        .collect();
    if !terms.is_empty() {
        doc.brackets.push(BracketStatement { left, right, terms });
    }
    Ok(())
}

/// Canonical text form: basis order preserved, brackets sorted by index
/// pair, coefficients reduced. `parse(serialize(d)) == d`.
pub fn serialize(doc: &AlgebraDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra {} dim {}\n", doc.name, doc.dim));
    if !doc.basis.is_empty() {
        out.push_str(&format!("basis {}\n", doc.basis.join(" ")));
    }
    for stmt in &doc.brackets {
        out.push_str(&format!(
            "[{},{}] = {}\n",
            doc.basis[stmt.left],
            doc.basis[stmt.right],
            render_terms(&stmt.terms, &doc.basis)
        ));
    }
    for torus in &doc.tori {
        out.push_str(&format!("torus {}\n", torus.name));
        for gen in &torus.generators {
            for r in 0..gen.rows() {
                let entries: Vec<String> =
                    gen.row_slice(r).iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("row {}\n", entries.join(" ")));
            }
        }
    }
    out
}

fn render_terms(terms: &[(Rational, usize)], basis: &[String]) -> String {
    let mut out = String::new();
    for (pos, (coeff, target)) in terms.iter().enumerate() {
        let label = &basis[*target];
        if pos == 0 {
            if coeff.is_one() {
                out.push_str(label);
            } else {
                out.push_str(&format!("{coeff}*{label}"));
            }
        } else {
            let (op, mag) = if coeff.is_negative() {
                (" - ", -coeff.clone())
            } else {
                (" + ", coeff.clone())
            };
            out.push_str(op);
            if mag.is_one() {
                out.push_str(label);
            } else {
                out.push_str(&format!("{mag}*{label}"));
            }
        }
    }
    out
}

impl AlgebraDocument {
    /// Default labels `X1..Xn`.
    pub fn from_algebra(name: &str, algebra: &Algebra) -> Self {
        let dim = algebra.dim();
        let basis: Vec<String> = (1..=dim).map(|i| format!("X{i}")).collect();
        let brackets = algebra
            .brackets()
            .map(|(i, j, coeffs)| BracketStatement {
                left: i,
                right: j,
                terms: coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (c.clone(), k))
                    .collect(),
            })
            .collect();
        Self {
            name: name.to_string(),
            dim,
            basis,
            brackets,
            tori: Vec::new(),
        }
    }

    pub fn with_torus(mut self, name: &str, generators: Vec<RatMatrix>) -> Self {
        self.tori.push(TorusBlock {
            name: name.to_string(),
            generators,
        });
        self
    }

    pub fn torus(&self, name: &str) -> Option<&TorusBlock> {
        self.tori.iter().find(|t| t.name == name)
    }

    pub fn to_constants(&self) -> Algebra {
        let mut g = Algebra::new(self.dim);
        for stmt in &self.brackets {
            let mut v = vec![Rational::zero(); self.dim];
            for (c, k) in &stmt.terms {
                v[*k] = c.clone();
            }
            g.set_bracket(stmt.left, stmt.right, v);
        }
        g
    }
}
