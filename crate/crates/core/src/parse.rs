//! Parser and printer for structure equations (Salamon shorthand),
//! differential-form expressions, bivector expressions, and endomorphism
//! specifications.
//!
//! Form grammar, covector mode:
//!
//! ```text
//! expr  := term (('+'|'-') term)*
//! term  := unary (('^'|'*') unary)*        juxtaposition also multiplies
//! unary := '-' unary | atom
//! atom  := number | 'i' | 'cos' | 'sin' | 'e'<digits>
//!        | '(' expr ')' | 'exp(' expr ')' | 'conj(' expr ')'
//! ```
//!
//! Bivector (vector) mode is identical except the basis monomials are
//! written `e_35` and live in the exterior algebra of the vector side.
//! `cos` and `sin` are reserved tokens substituted from a circle point;
//! an expression using them is a *family*. Indices are single digits, so
//! the textual syntax covers dimensions up to 9.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::exterior::{Bivector, Form};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{CirclePoint, Rational, Scalar};
use num::traits::Zero;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(Rational),
    ImaginaryUnit,
    Cos,
    Sin,
    Exp,
    Conj,
    Covector(Vec<usize>),
    Vector(Vec<usize>),
    Plus,
    Minus,
    Wedge,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, Error> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Token::Minus));
                i += 1;
            }
            '^' | '*' => {
                toks.push((i, Token::Wedge));
                i += 1;
            }
            '(' => {
                toks.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer = &text[start..i];
                let denom = if i < bytes.len() && bytes[i] == b'/' {
                    let dstart = i + 1;
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == dstart {
                        return Err(Error::Syntax { pos: i, msg: "expected denominator".into() });
                    }
                    Some(&text[dstart..i])
                } else {
                    None
                };
                let r: Rational = match denom {
                    None => numer.parse().map_err(|_| Error::Syntax {
                        pos: start,
                        msg: format!("bad number `{numer}`"),
                    })?,
                    Some(d) => format!("{numer}/{d}").parse().map_err(|_| Error::Syntax {
                        pos: start,
                        msg: format!("bad number `{numer}/{d}`"),
                    })?,
                };
                toks.push((start, Token::Num(r)));
            }
            'e' if i + 1 < bytes.len() && (bytes[i + 1].is_ascii_digit() || bytes[i + 1] == b'_') => {
                let start = i;
                let vector_side = bytes[i + 1] == b'_';
                i += if vector_side { 2 } else { 1 };
                let digit_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digit_start {
                    return Err(Error::Syntax { pos: start, msg: "expected index digits".into() });
                }
                let idx: Vec<usize> =
                    text[digit_start..i].bytes().map(|b| (b - b'0') as usize).collect();
                toks.push((
                    start,
                    if vector_side { Token::Vector(idx) } else { Token::Covector(idx) },
                ));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphabetic() {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "i" => Token::ImaginaryUnit,
                    "cos" => Token::Cos,
                    "sin" => Token::Sin,
                    "exp" => Token::Exp,
                    "conj" => Token::Conj,
                    other => {
                        return Err(Error::Syntax {
                            pos: start,
                            msg: format!("unknown token `{other}`"),
                        })
                    }
                };
                toks.push((start, tok));
            }
            other => {
                return Err(Error::Syntax { pos: i, msg: format!("unexpected character `{other}`") })
            }
        }
    }
    Ok(toks)
}

/// Whether an expression mentions the reserved family tokens `cos`/`sin`.
pub fn expr_uses_circle(text: &str) -> bool {
    tokenize(text)
        .map(|toks| toks.iter().any(|(_, t)| matches!(t, Token::Cos | Token::Sin)))
        .unwrap_or(false)
}

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    CovectorSide,
    VectorSide,
}

struct Parser<'a> {
    toks: Vec<(usize, Token)>,
    pos: usize,
    dim: usize,
    mode: Mode,
    subst: Option<&'a CirclePoint>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(usize::MAX, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect_rparen(&mut self) -> Result<(), Error> {
        match self.bump() {
            Some(Token::RParen) => Ok(()),
            _ => Err(Error::Syntax { pos: self.here(), msg: "expected `)`".into() }),
        }
    }

    fn expr(&mut self) -> Result<Form, Error> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Form, Error> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Wedge) => {
                    self.pos += 1;
                    acc = acc.wedge(&self.unary()?);
                }
                // juxtaposition: `2e34`, `i(e1+e2)`
                Some(
                    Token::Num(_)
                    | Token::ImaginaryUnit
                    | Token::Cos
                    | Token::Sin
                    | Token::Exp
                    | Token::Conj
                    | Token::Covector(_)
                    | Token::Vector(_)
                    | Token::LParen,
                ) => {
                    acc = acc.wedge(&self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Form, Error> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.atom()
    }

    fn monomial(&mut self, indices: &[usize], vector_side: bool, pos: usize) -> Result<Form, Error> {
        let expected = matches!(self.mode, Mode::VectorSide);
        if vector_side != expected {
            let msg = if vector_side {
                "vector monomial `e_..` is not allowed in a form expression"
            } else {
                "covector monomial is not allowed in a bivector expression; write `e_ij`"
            };
            return Err(Error::Syntax { pos, msg: msg.into() });
        }
        let mut acc = Form::one();
        for &idx in indices {
            if idx == 0 || idx > self.dim {
                return Err(Error::IndexOutOfRange { index: idx, dim: self.dim });
            }
            acc = acc.wedge(&Form::monomial(1 << (idx - 1), Scalar::one()));
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Form, Error> {
        let pos = self.here();
        match self.bump() {
            Some(Token::Num(r)) => Ok(Form::monomial(0, Scalar::from_rational(r))),
            Some(Token::ImaginaryUnit) => Ok(Form::monomial(0, Scalar::i())),
            Some(Token::Cos) => match self.subst {
                Some(cp) => Ok(Form::monomial(0, cp.cos())),
                None => Err(Error::CircleRequired),
            },
            Some(Token::Sin) => match self.subst {
                Some(cp) => Ok(Form::monomial(0, cp.sin())),
                None => Err(Error::CircleRequired),
            },
            Some(Token::Covector(idx)) => self.monomial(&idx, false, pos),
            Some(Token::Vector(idx)) => self.monomial(&idx, true, pos),
            Some(Token::LParen) => {
                let f = self.expr()?;
                self.expect_rparen()?;
                Ok(f)
            }
            Some(Token::Exp) => {
                match self.bump() {
                    Some(Token::LParen) => {}
                    _ => return Err(Error::Syntax { pos, msg: "expected `(` after exp".into() }),
                }
                let f = self.expr()?;
                self.expect_rparen()?;
                f.exp_wedge()
            }
            Some(Token::Conj) => {
                match self.bump() {
                    Some(Token::LParen) => {}
                    _ => return Err(Error::Syntax { pos, msg: "expected `(` after conj".into() }),
                }
                let f = self.expr()?;
                self.expect_rparen()?;
                Ok(f.conj())
            }
            _ => Err(Error::Syntax { pos, msg: "expected an expression".into() }),
        }
    }

    fn finish(mut self) -> Result<Form, Error> {
        let f = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(Error::Syntax { pos: self.here(), msg: "trailing input".into() });
        }
        Ok(f)
    }
}

/// Parse a differential-form expression over covectors `e1..e<dim>`.
pub fn parse_form(text: &str, dim: usize, subst: Option<&CirclePoint>) -> Result<Form, Error> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Syntax { pos: 0, msg: "empty expression".into() });
    }
    Parser { toks, pos: 0, dim, mode: Mode::CovectorSide, subst }.finish()
}

/// Parse a bivector expression over vectors `e_1..e_<dim>`; the result must
/// be homogeneous of degree 2 (or zero).
pub fn parse_bivector(
    text: &str,
    dim: usize,
    subst: Option<&CirclePoint>,
) -> Result<Bivector, Error> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Syntax { pos: 0, msg: "empty expression".into() });
    }
    let f = Parser { toks, pos: 0, dim, mode: Mode::VectorSide, subst }.finish()?;
    Bivector::from_vector_form(&f)
}

fn fmt_coeff_times_monomial(c: &Scalar, mask: u32) -> String {
    let monomial = if mask == 0 {
        String::new()
    } else {
        let mut s = String::from("e");
        for b in 0..32 {
            if mask & (1 << b) != 0 {
                s.push_str(&(b + 1).to_string());
            }
        }
        s
    };
    if mask == 0 {
        return if c.is_real() || c.re.is_zero() {
            c.to_string()
        } else {
            format!("({c})")
        };
    }
    if c.is_one() {
        monomial
    } else if (-c.clone()).is_one() {
        format!("-{monomial}")
    } else if c.is_real() || c.re.is_zero() {
        format!("{c}*{monomial}")
    } else {
        format!("({c})*{monomial}")
    }
}

/// Deterministic printing: terms in ascending bitmask order; round-trips
/// through [`parse_form`].
pub fn print_form(f: &Form) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (mask, c) in f.terms() {
        let piece = fmt_coeff_times_monomial(c, mask);
        if out.is_empty() {
            out = piece;
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    out
}

/// Parse Salamon shorthand like `0,0,0,0,13+42,14+23`. The number of
/// entries is the dimension; each entry is `0` or a signed list of
/// two-digit index pairs, the pair `jk` contributing `e^j ^ e^k`.
pub fn parse_salamon(text: &str) -> Result<LieAlgebra, Error> {
    let entries: Vec<&str> = text.split(',').map(str::trim).collect();
    let dim = entries.len();
    let mut d1 = Vec::with_capacity(dim);
    for entry in &entries {
        if entry.is_empty() {
            return Err(Error::MalformedSalamon {
                entry: (*entry).into(),
                msg: "empty entry".into(),
            });
        }
        if *entry == "0" {
            d1.push(Form::zero());
            continue;
        }
        let mut form = Form::zero();
        let bytes = entry.as_bytes();
        let mut i = 0;
        let mut sign = 1i64;
        let mut saw_pair = false;
        while i < bytes.len() {
            match bytes[i] {
                b'+' => {
                    sign = 1;
                    i += 1;
                }
                b'-' => {
                    sign = -1;
                    i += 1;
                }
                b'0'..=b'9' => {
                    if i + 1 >= bytes.len() || !bytes[i + 1].is_ascii_digit() {
                        return Err(Error::MalformedSalamon {
                            entry: (*entry).into(),
                            msg: "index pairs must be two digits".into(),
                        });
                    }
                    let j = (bytes[i] - b'0') as usize;
                    let k = (bytes[i + 1] - b'0') as usize;
                    for idx in [j, k] {
                        if idx == 0 || idx > dim {
                            return Err(Error::IndexOutOfRange { index: idx, dim });
                        }
                    }
                    let pair = Form::monomial(1 << (j - 1), Scalar::one())
                        .wedge(&Form::monomial(1 << (k - 1), Scalar::one()));
                    form = form.add(&pair.scale(&Scalar::from_int(sign)));
                    sign = 1;
                    saw_pair = true;
                    i += 2;
                }
                other => {
                    return Err(Error::MalformedSalamon {
                        entry: (*entry).into(),
                        msg: format!("unexpected character `{}`", other as char),
                    })
                }
            }
        }
        if !saw_pair {
            return Err(Error::MalformedSalamon {
                entry: (*entry).into(),
                msg: "no index pairs".into(),
            });
        }
        d1.push(form);
    }
    LieAlgebra::new(dim, d1)
}

/// Inverse of [`parse_salamon`] where expressible: requires dim <= 9 and
/// all structure constants equal to +-1.
pub fn print_salamon(algebra: &LieAlgebra) -> Option<String> {
    if algebra.dim() > 9 {
        return None;
    }
    let mut entries = Vec::with_capacity(algebra.dim());
    for i in 0..algebra.dim() {
        let f = algebra.d_generator(i);
        if f.is_zero() {
            entries.push("0".to_string());
            continue;
        }
        let mut s = String::new();
        for (mask, c) in f.terms() {
            let neg = -c.clone();
            let sign = if c.is_one() {
                ""
            } else if neg.is_one() {
                "-"
            } else {
                return None;
            };
            let j = mask.trailing_zeros() + 1;
            let k = 32 - mask.leading_zeros();
            if !s.is_empty() && sign.is_empty() {
                s.push('+');
            }
            s.push_str(sign);
            s.push_str(&format!("{j}{k}"));
        }
        entries.push(s);
    }
    Some(entries.join(","))
}

/// How an endomorphism of covectors is specified.
#[derive(Clone, Debug)]
pub enum EndoSpec {
    /// `J e^i = <form expression>` for (at least half of) the generators.
    Images(BTreeMap<usize, String>),
    /// Full matrix, `J e^j = sum_i M[i][j] e^i`, rows of scalar expressions.
    Matrix(Vec<Vec<String>>),
}

/// Build the real covector matrix of an almost-complex structure. Images
/// may specify only one generator of each pair when the image is a signed
/// multiple of a single basis covector; the partner follows from
/// `J^2 = -1`. The result is validated: entries real, square `= -identity`.
pub fn parse_endo(
    spec: &EndoSpec,
    dim: usize,
    subst: Option<&CirclePoint>,
) -> Result<Matrix, Error> {
    let mut columns: Vec<Option<Vec<Scalar>>> = vec![None; dim];
    match spec {
        EndoSpec::Images(images) => {
            for (&gen, expr) in images {
                if gen == 0 || gen > dim {
                    return Err(Error::IndexOutOfRange { index: gen, dim });
                }
                let f = parse_form(expr, dim, subst)?;
                if !f.is_zero() && f.homogeneous_degree() != Some(1) {
                    return Err(Error::DimensionMismatch {
                        msg: format!("image of e{gen} must be a 1-form"),
                    });
                }
                let col: Vec<Scalar> = (0..dim).map(|i| f.coefficient(1 << i)).collect();
                columns[gen - 1] = Some(col);
            }
            // complete pairs from J^2 = -1 when the image is c * e^j
            for gen in 0..dim {
                let Some(col) = columns[gen].clone() else { continue };
                let nonzero: Vec<usize> = (0..dim).filter(|&i| !col[i].is_zero()).collect();
                if let [j] = nonzero[..] {
                    if columns[j].is_none() {
                        let c = col[j].inv().expect("nonzero entry");
                        let mut back = vec![Scalar::zero(); dim];
                        back[gen] = -c;
                        columns[j] = Some(back);
                    }
                }
            }
            for (gen, col) in columns.iter().enumerate() {
                if col.is_none() {
                    return Err(Error::MissingImage { generator: gen + 1 });
                }
            }
        }
        EndoSpec::Matrix(rows) => {
            if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                return Err(Error::DimensionMismatch {
                    msg: format!("matrix must be {dim} x {dim}"),
                });
            }
            for j in 0..dim {
                let mut col = Vec::with_capacity(dim);
                for row in rows {
                    let f = parse_form(&row[j], dim, subst)?;
                    if !f.is_zero() && f.homogeneous_degree() != Some(0) {
                        return Err(Error::DimensionMismatch {
                            msg: "matrix entries must be scalars".into(),
                        });
                    }
                    col.push(f.coefficient(0));
                }
                columns[j] = Some(col);
            }
        }
    }
    let mut m = Matrix::zero(dim, dim);
    for (j, col) in columns.into_iter().enumerate() {
        for (i, v) in col.expect("all columns present").into_iter().enumerate() {
            if !v.is_real() {
                return Err(Error::ComplexEntries {
                    msg: format!("entry ({}, {}) is {}", i + 1, j + 1, v),
                });
            }
            m.set(i, j, v);
        }
    }
    let square = m.mul(&m);
    if square != Matrix::identity(dim).scale(&-Scalar::one()) {
        return Err(Error::NotAlmostComplex);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, HalfTangent};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn salamon_iwasawa() {
        let g = parse_salamon("0,0,0,0,13+42,14+23").unwrap();
        let e5 = g.d_generator(4);
        assert_eq!(e5, &parse_form("e13 - e24", 6, None).unwrap());
        assert_eq!(g.d_generator(5), &parse_form("e14 + e23", 6, None).unwrap());
    }

    #[test]
    fn salamon_abelian_and_errors() {
        let g = parse_salamon("0,0").unwrap();
        assert_eq!(g.dim(), 2);
        assert!(g.d_generator(0).is_zero());
        let err = parse_salamon("0,0,77").unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { index: 7, dim: 3 }));
        assert!(matches!(parse_salamon("0,0,0,xy").unwrap_err(), Error::MalformedSalamon { .. }));
        // shorthand that fails the Jacobi check: d e5 = e13, d e6 = e25
        assert!(matches!(
            parse_salamon("0,0,0,0,13,25").unwrap_err(),
            Error::JacobiFailed { .. }
        ));
    }

    #[test]
    fn salamon_roundtrip() {
        for text in ["0,0,0,0,13+42,14+23", "0,0", "0,0,0,12", "0,0,0,12,0,0"] {
            let g = parse_salamon(text).unwrap();
            let printed = print_salamon(&g).unwrap();
            assert_eq!(parse_salamon(&printed).unwrap(), g);
        }
    }

    #[test]
    fn form_expressions() {
        let phi = parse_form("e1 + i*e2", 6, None).unwrap();
        assert_eq!(phi.coefficient(1), Scalar::one());
        assert_eq!(phi.coefficient(2), Scalar::i());
        assert_eq!(parse_form("0", 6, None).unwrap(), Form::zero());
        // exp expansion checked against the hand expansion
        let rho = parse_form("exp(i*(-e36 - e45)) ^ (e1 + i*e2)", 6, None).unwrap();
        let direct = parse_form(
            "(e1 + i*e2) - i*(e1 + i*e2)^(e36 + e45) - 1/2*(e1 + i*e2)^(e36 + e45)^(e36 + e45)",
            6,
            None,
        )
        .unwrap();
        assert_eq!(rho, direct);
    }

    #[test]
    fn exp_inverse_property() {
        let mut rng = StdRng::seed_from_u64(77);
        for _ in 0..15 {
            let mut even = Form::zero();
            for _ in 0..3 {
                let i = rng.gen_range(0..6);
                let j = rng.gen_range(0..6);
                if i != j {
                    let m = Form::monomial(1 << i, Scalar::one())
                        .wedge(&Form::monomial(1 << j, Scalar::from_int(rng.gen_range(-2..=2))));
                    even = even.add(&m);
                }
            }
            let e = even.exp_wedge().unwrap();
            let einv = even.neg().exp_wedge().unwrap();
            assert_eq!(e.wedge(&einv), Form::one());
        }
    }

    #[test]
    fn print_roundtrip() {
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..60 {
            let mut f = Form::zero();
            for _ in 0..rng.gen_range(0..5) {
                f.add_term(
                    rng.gen_range(0..64),
                    Scalar::new(
                        rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)),
                        rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)),
                    ),
                );
            }
            let printed = print_form(&f);
            let reparsed = parse_form(&printed, 6, None).unwrap();
            assert_eq!(reparsed, f, "roundtrip failed for `{printed}`");
        }
        assert_eq!(print_form(&Form::zero()), "0");
        assert_eq!(print_form(&parse_form("e2 ^ e1", 6, None).unwrap()), "-e12");
    }

    #[test]
    fn bivector_expressions() {
        let b = parse_bivector("e_35", 6, None).unwrap();
        assert_eq!(b, Bivector::pair(2, 4));
        let b2 = parse_bivector("e_3 ^ e_5 - 2*e_46", 6, None).unwrap();
        let mut expect = Bivector::pair(2, 4);
        expect.add_term(3, 5, Scalar::from_int(-2));
        assert_eq!(b2, expect);
        assert!(parse_bivector("e_345", 6, None).is_err());
        assert!(parse_bivector("e35", 6, None).is_err());
        assert!(parse_form("e_35", 6, None).is_err());
    }

    #[test]
    fn circle_substitution() {
        let cp = CirclePoint::from_half_tangent(&HalfTangent::Finite(rat(1, 1)));
        let f = parse_form("cos*e1 + sin*e2", 6, Some(&cp)).unwrap();
        assert_eq!(f.coefficient(1), Scalar::zero());
        assert_eq!(f.coefficient(2), Scalar::one());
        assert!(matches!(parse_form("cos*e1", 6, None).unwrap_err(), Error::CircleRequired));
        assert!(expr_uses_circle("cos*e1"));
        assert!(!expr_uses_circle("e1 + i*e2"));
    }

    #[test]
    fn endo_images_with_completion() {
        let mut images = BTreeMap::new();
        images.insert(1, "-e2".to_string());
        images.insert(3, "-e4".to_string());
        images.insert(5, "-e6".to_string());
        let j0 = parse_endo(&EndoSpec::Images(images), 6, None).unwrap();
        // completed: J e^2 = e^1
        assert_eq!(j0.get(0, 1), &Scalar::one());
        assert_eq!(j0.get(1, 0), &-Scalar::one());
        assert_eq!(j0.mul(&j0), Matrix::identity(6).scale(&-Scalar::one()));

        let mut bad = BTreeMap::new();
        for k in 1..=6 {
            bad.insert(k, format!("e{k}"));
        }
        assert!(matches!(
            parse_endo(&EndoSpec::Images(bad), 6, None).unwrap_err(),
            Error::NotAlmostComplex
        ));

        let mut partial = BTreeMap::new();
        partial.insert(1, "-e2 + e3".to_string());
        assert!(matches!(
            parse_endo(&EndoSpec::Images(partial), 6, None).unwrap_err(),
            Error::MissingImage { .. }
        ));

        // complex-valued images are a validation failure
        let mut complex_images = BTreeMap::new();
        complex_images.insert(1, "-e2".to_string());
        complex_images.insert(3, "-i*e4".to_string());
        complex_images.insert(5, "-i*e6".to_string());
        assert!(matches!(
            parse_endo(&EndoSpec::Images(complex_images), 6, None).unwrap_err(),
            Error::ComplexEntries { .. }
        ));
    }
}
