//! The line-oriented ideal file format.
//!
//! ```text
//! # comment
//! ring: x,y,z
//! char: 0
//! order: grevlex
//! poly: y*z - x
//! poly: x*z - y
//! poly: x*y - z
//! ```
//!
//! Multiplication is always explicit (`2*x`, never `2x`), `^` raises to a
//! non-negative power, parentheses and unary minus work as expected.
//! Coefficients are integers; the coefficient field is chosen by `char:`
//! (0 means the rationals, a prime means GF(p)).

use std::collections::BTreeMap;
use std::fmt;

use siggb::{Monomial, OrderKind, PrimeField, TermOrder};

/// One polynomial as integer terms, kept sorted descending under the
/// file's term order with no zero coefficients.
pub type IntPoly = Vec<(i128, Vec<u16>)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub vars: Vec<String>,
    /// 0 selects the rationals, otherwise a prime < 2^31.
    pub characteristic: u32,
    pub order: OrderKind,
    pub polys: Vec<IntPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    UnknownVariable { line: usize, name: String },
    Malformed { line: usize, detail: String },
    NonPrimeCharacteristic { line: usize, value: u64 },
    DuplicateVariable { line: usize, name: String },
    DuplicateHeader { line: usize, which: &'static str },
    MissingHeader { which: &'static str },
    NoPolynomials,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::UnknownVariable { line, name } => {
                write!(f, "line {line}: unknown variable '{name}'")
            }
            ParseError::Malformed { line, detail } => write!(f, "line {line}: {detail}"),
            ParseError::NonPrimeCharacteristic { line, value } => {
                write!(
                    f,
                    "line {line}: characteristic {value} is not prime (or too large)"
                )
            }
            ParseError::DuplicateVariable { line, name } => {
                write!(f, "line {line}: variable '{name}' declared twice")
            }
            ParseError::DuplicateHeader { line, which } => {
                write!(f, "line {line}: '{which}:' given twice")
            }
            ParseError::MissingHeader { which } => write!(f, "missing '{which}:' line"),
            ParseError::NoPolynomials => write!(f, "no 'poly:' lines"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(i128),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(line: usize, s: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::Open);
                i += 1;
            }
            ')' => {
                out.push(Token::Close);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &s[start..i];
                let v: i128 = text.parse().map_err(|_| ParseError::Malformed {
                    line,
                    detail: format!("integer '{text}' out of range"),
                })?;
                out.push(Token::Int(v));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Token::Ident(s[start..i].to_string()));
            }
            other => {
                return Err(ParseError::Malformed {
                    line,
                    detail: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

/// Dense-exponent polynomial under construction, keyed by exponent vector.
pub(crate) type TermMap = BTreeMap<Vec<u16>, i128>;

struct ExprParser<'a> {
    line: usize,
    tokens: &'a [Token],
    pos: usize,
    vars: &'a [String],
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn malformed(&self, detail: String) -> ParseError {
        ParseError::Malformed {
            line: self.line,
            detail,
        }
    }

    fn add_into(&self, acc: &mut TermMap, other: TermMap, negate: bool) -> Result<(), ParseError> {
        for (exps, c) in other {
            let c = if negate {
                c.checked_neg()
                    .ok_or_else(|| self.malformed("coefficient overflow".into()))?
            } else {
                c
            };
            let slot = acc.entry(exps).or_insert(0);
            *slot = slot
                .checked_add(c)
                .ok_or_else(|| self.malformed("coefficient overflow".into()))?;
        }
        Ok(())
    }

    fn mul(&self, a: &TermMap, b: &TermMap) -> Result<TermMap, ParseError> {
        let mut out = TermMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let mut exps = ea.clone();
                for (x, y) in exps.iter_mut().zip(eb) {
                    *x = x
                        .checked_add(*y)
                        .ok_or_else(|| self.malformed("exponent overflow".into()))?;
                }
                let c = ca
                    .checked_mul(*cb)
                    .ok_or_else(|| self.malformed("coefficient overflow".into()))?;
                let slot = out.entry(exps).or_insert(0);
                *slot = slot
                    .checked_add(c)
                    .ok_or_else(|| self.malformed("coefficient overflow".into()))?;
            }
        }
        Ok(out)
    }

    fn constant(&self, c: i128) -> TermMap {
        let mut m = TermMap::new();
        m.insert(vec![0; self.vars.len()], c);
        m
    }

    fn expr(&mut self) -> Result<TermMap, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = TermMap::new();
        let first = self.term()?;
        self.add_into(&mut acc, first, negate)?;
        loop {
            let negate = match self.peek() {
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            let t = self.term()?;
            self.add_into(&mut acc, t, negate)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<TermMap, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.mul(&acc, &f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<TermMap, ParseError> {
        let base = self.base()?;
        if !matches!(self.peek(), Some(Token::Caret)) {
            return Ok(base);
        }
        self.pos += 1;
        let e = match self.bump().cloned() {
            Some(Token::Int(v)) if (0..=u16::MAX as i128).contains(&v) => v as u16,
            Some(Token::Int(v)) => return Err(self.malformed(format!("exponent {v} out of range"))),
            other => return Err(self.malformed(format!("expected exponent, found {other:?}"))),
        };
        let mut acc = self.constant(1);
        for _ in 0..e {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    fn base(&mut self) -> Result<TermMap, ParseError> {
        match self.bump().cloned() {
            Some(Token::Int(v)) => Ok(self.constant(v)),
            Some(Token::Ident(name)) => {
                let idx = self.vars.iter().position(|v| *v == name).ok_or(
                    ParseError::UnknownVariable {
                        line: self.line,
                        name,
                    },
                )?;
                let mut exps = vec![0u16; self.vars.len()];
                exps[idx] = 1;
                let mut m = TermMap::new();
                m.insert(exps, 1);
                Ok(m)
            }
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(self.malformed("unbalanced parenthesis".into())),
                }
            }
            Some(Token::Minus) => {
                let f = self.factor()?;
                let mut out = TermMap::new();
                self.add_into(&mut out, f, true)?;
                Ok(out)
            }
            other => Err(self.malformed(format!("expected a term, found {other:?}"))),
        }
    }
}

fn parse_expr(line: usize, tokens: &[Token], vars: &[String]) -> Result<TermMap, ParseError> {
    let mut p = ExprParser {
        line,
        tokens,
        pos: 0,
        vars,
    };
    let m = p.expr()?;
    if p.pos != tokens.len() {
        return Err(ParseError::Malformed {
            line,
            detail: format!("trailing input from token {:?}", tokens[p.pos]),
        });
    }
    Ok(m)
}

/// Drop zeros and sort descending under the order; the canonical shape
/// both the renderer and the round-trip tests rely on.
pub(crate) fn normalize(map: TermMap, order: &TermOrder) -> IntPoly {
    let mut terms: Vec<(i128, Vec<u16>)> = map
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(e, c)| (c, e))
        .collect();
    terms.sort_by(|a, b| order.compare(&Monomial::from_exps(&b.1), &Monomial::from_exps(&a.1)));
    terms
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<IdealFile, ParseError> {
        let mut vars: Option<(usize, Vec<String>)> = None;
        let mut characteristic: Option<(usize, u32)> = None;
        let mut order: Option<(usize, OrderKind)> = None;
        // (line, raw expression) pairs; parsed once the ring is known.
        let mut poly_lines: Vec<(usize, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            }
            .trim();
            if content.is_empty() {
                continue;
            }
            let (key, rest) = content.split_once(':').ok_or(ParseError::Malformed {
                line,
                detail: "expected 'key: value'".to_string(),
            })?;
            let rest = rest.trim();
            match key.trim() {
                "ring" => {
                    if vars.is_some() {
                        return Err(ParseError::DuplicateHeader {
                            line,
                            which: "ring",
                        });
                    }
                    let mut names = Vec::new();
                    for name in rest.split(',') {
                        let name = name.trim();
                        if name.is_empty()
                            || !name.chars().next().unwrap().is_ascii_alphabetic()
                                && !name.starts_with('_')
                            || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                        {
                            return Err(ParseError::Malformed {
                                line,
                                detail: format!("bad variable name '{name}'"),
                            });
                        }
                        if names.iter().any(|n| n == name) {
                            return Err(ParseError::DuplicateVariable {
                                line,
                                name: name.to_string(),
                            });
                        }
                        names.push(name.to_string());
                    }
                    vars = Some((line, names));
                }
                "char" => {
                    if characteristic.is_some() {
                        return Err(ParseError::DuplicateHeader {
                            line,
                            which: "char",
                        });
                    }
                    let v: u64 = rest.parse().map_err(|_| ParseError::Malformed {
                        line,
                        detail: format!("bad characteristic '{rest}'"),
                    })?;
                    if v != 0 && (v > u32::MAX as u64 || PrimeField::new(v as u32).is_err()) {
                        return Err(ParseError::NonPrimeCharacteristic { line, value: v });
                    }
                    characteristic = Some((line, v as u32));
                }
                "order" => {
                    if order.is_some() {
                        return Err(ParseError::DuplicateHeader {
                            line,
                            which: "order",
                        });
                    }
                    let kind = OrderKind::parse(rest).ok_or(ParseError::Malformed {
                        line,
                        detail: format!("unknown order '{rest}'"),
                    })?;
                    order = Some((line, kind));
                }
                "poly" => poly_lines.push((line, rest.to_string())),
                other => {
                    return Err(ParseError::Malformed {
                        line,
                        detail: format!("unknown key '{other}'"),
                    })
                }
            }
        }
        let (_, vars) = vars.ok_or(ParseError::MissingHeader { which: "ring" })?;
        let (_, characteristic) =
            characteristic.ok_or(ParseError::MissingHeader { which: "char" })?;
        let (_, order) = order.ok_or(ParseError::MissingHeader { which: "order" })?;
        if poly_lines.is_empty() {
            return Err(ParseError::NoPolynomials);
        }
        let tord = TermOrder::new(order, vars.len());
        let mut polys = Vec::with_capacity(poly_lines.len());
        for (line, text) in poly_lines {
            let tokens = tokenize(line, &text)?;
            if tokens.is_empty() {
                return Err(ParseError::Malformed {
                    line,
                    detail: "empty polynomial".to_string(),
                });
            }
            let map = parse_expr(line, &tokens, &vars)?;
            polys.push(normalize(map, &tord));
        }
        Ok(IdealFile {
            vars,
            characteristic,
            order,
            polys,
        })
    }

    /// Canonical text form; `parse(render(f)) == f`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("ring: {}\n", self.vars.join(",")));
        out.push_str(&format!("char: {}\n", self.characteristic));
        out.push_str(&format!("order: {}\n", self.order.name()));
        for p in &self.polys {
            out.push_str(&format!("poly: {}\n", self.render_poly(p)));
        }
        out
    }

    pub fn render_poly(&self, p: &IntPoly) -> String {
        if p.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (c, exps)) in p.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else if *c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = self.render_mono(exps);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }

    fn render_mono(&self, exps: &[u16]) -> String {
        let mut parts = Vec::new();
        for (v, &e) in self.vars.iter().zip(exps) {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        parts.join("*")
    }
}
