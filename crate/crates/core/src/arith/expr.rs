//! A small parser for linear combinations of named vectors with coefficients
//! in `Q(i)(E, λ)`, e.g. `-i/2*lam*(E*v1 - v2) + E*v8`.
//!
//! Scalar identifiers are `E`, `lam` and `i`; every other identifier must be
//! accepted by the caller's label predicate. Products of two vector-valued
//! factors and division by vectors are rejected.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use super::RationalFunction;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("unexpected end of input in `{0}`")]
    Eof(String),
    #[error("unexpected `{found}` at offset {pos} in `{src}`")]
    Unexpected { src: String, pos: usize, found: char },
    #[error("unknown identifier `{0}`")]
    UnknownIdent(String),
    #[error("expression `{0}` is not linear in the vector labels")]
    NonLinear(String),
    #[error("division by zero in `{0}`")]
    DivByZero(String),
}

/// `scalar + Σ coeff·label`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LinearExpr {
    pub scalar: RationalFunction,
    pub terms: BTreeMap<String, RationalFunction>,
}

impl LinearExpr {
    fn scalar(c: RationalFunction) -> Self {
        LinearExpr {
            scalar: c,
            terms: BTreeMap::new(),
        }
    }

    fn label(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(name.to_string(), RationalFunction::from_int(1));
        LinearExpr {
            scalar: RationalFunction::zero(),
            terms,
        }
    }

    fn is_scalar(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(mut self, other: LinearExpr, sign: bool) -> Self {
        let signed = |c: RationalFunction| if sign { c } else { -c };
        self.scalar = &self.scalar + &signed(other.scalar);
        for (k, c) in other.terms {
            let e = self.terms.entry(k.clone()).or_insert_with(RationalFunction::zero);
            *e = &*e + &signed(c);
            if e.is_zero() {
                self.terms.remove(&k);
            }
        }
        self
    }

    fn scale(self, c: &RationalFunction) -> Self {
        LinearExpr {
            scalar: &self.scalar * c,
            terms: self
                .terms
                .into_iter()
                .map(|(k, v)| (k, &v * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }
}

struct Parser<'a, F> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    is_label: F,
}

impl<F: Fn(&str) -> bool> Parser<'_, F> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn unexpected(&self) -> ExprError {
        match self.src[self.pos..].chars().next() {
            Some(found) => ExprError::Unexpected {
                src: self.src.to_string(),
                pos: self.pos,
                found,
            },
            None => ExprError::Eof(self.src.to_string()),
        }
    }

    fn expr(&mut self) -> Result<LinearExpr, ExprError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                LinearExpr::default().add(self.term()?, false)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(rhs, c == b'+');
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LinearExpr, ExprError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                match (acc.is_scalar(), rhs.is_scalar()) {
                    (true, _) => rhs.scale(&acc.scalar),
                    (false, true) => acc.scale(&rhs.scalar),
                    (false, false) => return Err(ExprError::NonLinear(self.src.to_string())),
                }
            } else {
                if !rhs.is_scalar() {
                    return Err(ExprError::NonLinear(self.src.to_string()));
                }
                let inv = rhs
                    .scalar
                    .inv()
                    .ok_or_else(|| ExprError::DivByZero(self.src.to_string()))?;
                acc.scale(&inv)
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<LinearExpr, ExprError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(inner.scale(&RationalFunction::from_int(-1)));
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let exp: u32 = self.src[start..self.pos].parse().map_err(|_| self.unexpected())?;
            if !base.is_scalar() {
                return Err(ExprError::NonLinear(self.src.to_string()));
            }
            return Ok(LinearExpr::scalar(base.scalar.pow(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<LinearExpr, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: i64 = self.src[start..self.pos].parse().map_err(|_| self.unexpected())?;
                Ok(LinearExpr::scalar(RationalFunction::from_int(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let ident = &self.src[start..self.pos];
                match ident {
                    "E" => Ok(LinearExpr::scalar(RationalFunction::e())),
                    "lam" => Ok(LinearExpr::scalar(RationalFunction::lambda())),
                    "i" => Ok(LinearExpr::scalar(RationalFunction::i())),
                    _ if (self.is_label)(ident) => Ok(LinearExpr::label(ident)),
                    _ => Err(ExprError::UnknownIdent(ident.to_string())),
                }
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses a linear combination of labels accepted by `is_label`.
pub fn parse_linear(src: &str, is_label: impl Fn(&str) -> bool) -> Result<LinearExpr, ExprError> {
    let mut p = Parser {
        src,
        bytes: src.as_bytes(),
        pos: 0,
        is_label,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok(out)
}

/// Parses a scalar expression in `E`, `lam` and `i`.
pub fn parse_scalar(src: &str) -> Result<RationalFunction, ExprError> {
    Ok(parse_linear(src, |_| false)?.scalar)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_table_entries() {
        let e = parse_linear("-i/2*lam*(E*v1-v2)+E*v8", |s| s.starts_with('v')).unwrap();
        assert!(e.scalar.is_zero());
        assert_eq!(e.terms["v1"], parse_scalar("-i/2*lam*E").unwrap());
        assert_eq!(e.terms["v2"], parse_scalar("i*lam/2").unwrap());
        assert_eq!(e.terms["v8"], RationalFunction::e());
    }

    #[test]
    fn cancellation_removes_labels() {
        let e = parse_linear("v1 + 2*v2 - v1", |s| s.starts_with('v')).unwrap();
        assert_eq!(e.terms.keys().collect::<Vec<_>>(), vec!["v2"]);
    }

    #[test]
    fn rejects_nonlinear_and_unknown() {
        assert!(matches!(
            parse_linear("v1*v2", |s| s.starts_with('v')),
            Err(ExprError::NonLinear(_))
        ));
        assert!(matches!(parse_scalar("x + 1"), Err(ExprError::UnknownIdent(_))));
        assert!(parse_scalar("1/(E-E)").is_err());
        assert!(parse_scalar("(E").is_err());
    }
}
