//! Expression parser for quaternion polynomials.
//!
//! Tokens: real numbers, the units `i`, `j`, `k` (runs like `ij` fold to a
//! single constant through the Hamilton table at lex time), the variable
//! `z`, and `+ - * ^ ( )`. Multiplication may be implicit between adjacent
//! factors, e.g. `(2+ij) z`.
//!
//! Standard mode normalizes everything into left-coefficient form
//! ([`StdPoly`]); two-sided mode keeps coefficients on the side they were
//! written on ([`TwoSidedPoly`]).

use std::fmt;

use quatpoly::twosided::TwoSidedTerm;
use quatpoly::{Quat64, Quaternion, StdPoly, StdPoly64, TwoSidedPoly, TwoSidedPoly64};

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        message: message.into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tok {
    Num(f64),
    Unit(Quat64),
    Z,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                pos += 1;
            }
            '+' => {
                toks.push((pos, Tok::Plus));
                pos += 1;
            }
            '-' => {
                toks.push((pos, Tok::Minus));
                pos += 1;
            }
            '*' => {
                toks.push((pos, Tok::Star));
                pos += 1;
            }
            '^' => {
                toks.push((pos, Tok::Caret));
                pos += 1;
            }
            '(' => {
                toks.push((pos, Tok::LParen));
                pos += 1;
            }
            ')' => {
                toks.push((pos, Tok::RParen));
                pos += 1;
            }
            'z' => {
                toks.push((pos, Tok::Z));
                pos += 1;
            }
            'i' | 'j' | 'k' => {
                let start = pos;
                let mut q = Quat64::one();
                while pos < bytes.len() {
                    let u = match bytes[pos] as char {
                        'i' => Quaternion::unit_i(),
                        'j' => Quaternion::unit_j(),
                        'k' => Quaternion::unit_k(),
                        _ => break,
                    };
                    q = q * u;
                    pos += 1;
                }
                toks.push((start, Tok::Unit(q)));
            }
            '0'..='9' | '.' => {
                let start = pos;
                while pos < bytes.len() && (bytes[pos] as char).is_ascii_digit() {
                    pos += 1;
                }
                if pos < bytes.len() && bytes[pos] == b'.' {
                    pos += 1;
                    while pos < bytes.len() && (bytes[pos] as char).is_ascii_digit() {
                        pos += 1;
                    }
                }
                // exponent only when it is really one: e / E followed by
                // optional sign and at least one digit
                if pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
                    let mut probe = pos + 1;
                    if probe < bytes.len() && (bytes[probe] == b'+' || bytes[probe] == b'-') {
                        probe += 1;
                    }
                    if probe < bytes.len() && (bytes[probe] as char).is_ascii_digit() {
                        pos = probe;
                        while pos < bytes.len() && (bytes[pos] as char).is_ascii_digit() {
                            pos += 1;
                        }
                    }
                }
                let slice = &text[start..pos];
                match slice.parse::<f64>() {
                    Ok(v) => toks.push((start, Tok::Num(v))),
                    Err(_) => return err(start, format!("invalid number literal '{slice}'")),
                }
            }
            other => return err(pos, format!("unexpected character '{other}'")),
        }
    }
    Ok(toks)
}

/// Value the parser folds expressions into; one implementation per mode.
trait ParseValue: Sized + Clone {
    fn from_quat(q: Quat64) -> Self;
    fn var() -> Self;
    fn add(a: Self, b: Self) -> Self;
    fn neg(a: Self) -> Self;
    fn mul(a: Self, b: Self, pos: usize) -> Result<Self, ParseError>;
}

impl ParseValue for StdPoly64 {
    fn from_quat(q: Quat64) -> Self {
        StdPoly::constant(q)
    }
    fn var() -> Self {
        StdPoly::var()
    }
    fn add(a: Self, b: Self) -> Self {
        &a + &b
    }
    fn neg(a: Self) -> Self {
        -&a
    }
    fn mul(a: Self, b: Self, _pos: usize) -> Result<Self, ParseError> {
        Ok(&a * &b)
    }
}

/// Two-sided parse value: a sum of `left z^pow right` monomials.
#[derive(Clone, Debug)]
struct TsValue {
    terms: Vec<TwoSidedTerm<f64>>,
}

fn mono_mul(
    a: &TwoSidedTerm<f64>,
    b: &TwoSidedTerm<f64>,
    pos: usize,
) -> Result<TwoSidedTerm<f64>, ParseError> {
    if a.power == 0 {
        let c = a.left * a.right;
        return Ok(TwoSidedTerm {
            left: c * b.left,
            power: b.power,
            right: b.right,
        });
    }
    if b.power == 0 {
        let c = b.left * b.right;
        return Ok(TwoSidedTerm {
            left: a.left,
            power: a.power,
            right: a.right * c,
        });
    }
    // the inner product must be a scalar for the z powers to merge
    let bridge = a.right * b.left;
    if bridge.imag().abs() <= 1e-12 * (1.0 + bridge.abs()) {
        Ok(TwoSidedTerm {
            left: a.left.scale(bridge.re),
            power: a.power + b.power,
            right: b.right,
        })
    } else {
        err(
            pos,
            "cannot multiply two z-terms whose inner coefficients are not real \
             (coefficients must stay on one side of each z power in two-sided form)",
        )
    }
}

impl ParseValue for TsValue {
    fn from_quat(q: Quat64) -> Self {
        TsValue {
            terms: vec![TwoSidedTerm {
                left: q,
                power: 0,
                right: Quat64::one(),
            }],
        }
    }
    fn var() -> Self {
        TsValue {
            terms: vec![TwoSidedTerm {
                left: Quat64::one(),
                power: 1,
                right: Quat64::one(),
            }],
        }
    }
    fn add(mut a: Self, b: Self) -> Self {
        a.terms.extend(b.terms);
        a
    }
    fn neg(mut a: Self) -> Self {
        for t in &mut a.terms {
            t.left = -t.left;
        }
        a
    }
    fn mul(a: Self, b: Self, pos: usize) -> Result<Self, ParseError> {
        let mut terms = Vec::new();
        for x in &a.terms {
            for y in &b.terms {
                terms.push(mono_mul(x, y, pos)?);
            }
        }
        Ok(TsValue { terms })
    }
}

struct Parser<'t> {
    toks: &'t [(usize, Tok)],
    idx: usize,
    end: usize,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.idx)
    }

    fn pos(&self) -> usize {
        self.peek().map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.idx).copied();
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expr<V: ParseValue>(&mut self) -> Result<V, ParseError> {
        let mut negate = false;
        if let Some((_, tok)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                }
                Tok::Minus => {
                    self.bump();
                    negate = true;
                }
                _ => {}
            }
        }
        let mut acc = self.term::<V>()?;
        if negate {
            acc = V::neg(acc);
        }
        while let Some((_, tok)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                    let t = self.term::<V>()?;
                    acc = V::add(acc, t);
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term::<V>()?;
                    acc = V::add(acc, V::neg(t));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn starts_atom(tok: &Tok) -> bool {
        matches!(
            tok,
            Tok::Num(_) | Tok::Unit(_) | Tok::Z | Tok::LParen | Tok::Minus
        )
    }

    fn term<V: ParseValue>(&mut self) -> Result<V, ParseError> {
        let mut acc = self.factor::<V>()?;
        loop {
            match self.peek() {
                Some((_, Tok::Star)) => {
                    let (pos, _) = self.bump().unwrap();
                    let f = self.factor::<V>()?;
                    acc = V::mul(acc, f, pos)?;
                }
                Some((pos, tok)) if Self::starts_atom(tok) && !matches!(tok, Tok::Minus) => {
                    let pos = *pos;
                    let f = self.factor::<V>()?;
                    acc = V::mul(acc, f, pos)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor<V: ParseValue>(&mut self) -> Result<V, ParseError> {
        if let Some((_, Tok::Minus)) = self.peek() {
            self.bump();
            let f = self.factor::<V>()?;
            return Ok(V::neg(f));
        }
        let base = self.atom::<V>()?;
        if let Some((_, Tok::Caret)) = self.peek() {
            let (caret_pos, _) = self.bump().unwrap();
            let (pos, tok) = self
                .bump()
                .ok_or_else(|| ParseError {
                    pos: caret_pos,
                    message: "expected an exponent after '^'".into(),
                })?;
            let Tok::Num(v) = tok else {
                return err(pos, "expected a nonnegative integer exponent");
            };
            if v.fract() != 0.0 || v < 0.0 || v > 64.0 {
                return err(pos, "exponent must be an integer in 0..=64");
            }
            let mut acc = V::from_quat(Quat64::one());
            for _ in 0..(v as u32) {
                acc = V::mul(acc, base.clone(), pos)?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom<V: ParseValue>(&mut self) -> Result<V, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some((_, Tok::Num(v))) => Ok(V::from_quat(Quat64::from_real(v))),
            Some((_, Tok::Unit(q))) => Ok(V::from_quat(q)),
            Some((_, Tok::Z)) => Ok(V::var()),
            Some((_, Tok::LParen)) => {
                let inner = self.expr::<V>()?;
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    other => err(
                        other.map(|(p, _)| p).unwrap_or(self.end),
                        "expected ')'",
                    ),
                }
            }
            _ => err(pos, "expected a number, i/j/k, z, or '('"),
        }
    }
}

fn parse_value<V: ParseValue>(text: &str) -> Result<V, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return err(0, "empty input");
    }
    let mut parser = Parser {
        toks: &toks,
        idx: 0,
        end: text.len(),
    };
    let value = parser.expr::<V>()?;
    if let Some((pos, _)) = parser.peek() {
        return err(*pos, "unexpected trailing input");
    }
    Ok(value)
}

/// Parse a standard (left-coefficient) polynomial in `z`.
pub fn parse_std_poly(text: &str) -> Result<StdPoly64, ParseError> {
    parse_value::<StdPoly64>(text)
}

/// Parse a constant quaternion expression (no `z`).
pub fn parse_quaternion(text: &str) -> Result<Quat64, ParseError> {
    let poly = parse_std_poly(text)?;
    match poly.degree() {
        None => Ok(Quat64::zero()),
        Some(0) => Ok(poly.coeff(0)),
        Some(_) => err(0, "expected a constant quaternion expression without z"),
    }
}

/// Parse a polynomial keeping coefficients on the side they were written.
pub fn parse_two_sided_poly(text: &str) -> Result<TwoSidedPoly64, ParseError> {
    let value = parse_value::<TsValue>(text)?;
    let terms = value
        .terms
        .into_iter()
        .filter(|t| t.left.abs() * t.right.abs() > 0.0)
        .collect();
    Ok(TwoSidedPoly::new(terms))
}

/// Extract the monic two-sided quadratic `z^2 + a z b + c`.
///
/// The `z^2` term must carry real coefficients (anything else cannot equal
/// a monic square for all quaternions); a real overall scaling is divided
/// out. There must be exactly one `a z b` term and a nonzero constant.
pub fn extract_two_sided_quadratic(
    poly: &TwoSidedPoly64,
) -> Result<(Quat64, Quat64, Quat64), String> {
    let mut square_scale = 0.0f64;
    let mut linear: Option<(Quat64, Quat64)> = None;
    let mut constant = Quat64::zero();
    for t in &poly.terms {
        match t.power {
            0 => constant = constant + t.left * t.right,
            1 => {
                if linear.is_some() {
                    return Err(
                        "two-sided form needs a single 'a z b' term of degree one".into()
                    );
                }
                linear = Some((t.left, t.right));
            }
            2 => {
                let tol = 1e-12 * (1.0 + t.left.abs() + t.right.abs());
                if !t.left.is_pure_real(tol) || !t.right.is_pure_real(tol) {
                    return Err("the z^2 term must have real coefficients".into());
                }
                square_scale += t.left.re * t.right.re;
            }
            p => return Err(format!("degree {p} term not supported; expected degree <= 2")),
        }
    }
    if square_scale.abs() < 1e-12 {
        return Err("missing the z^2 term".into());
    }
    let Some((a, b)) = linear else {
        return Err("missing the 'a z b' term".into());
    };
    Ok((
        a.scale(1.0 / square_scale),
        b,
        constant.scale(1.0 / square_scale),
    ))
}
