use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::symbol::{Const, FieldName, FieldVar, Symbol};
use crate::arith::json::{gaussian_from_json, gaussian_to_json};
use crate::arith::GaussianRational;
use crate::graded::{swap_sign, Degree};

/// Sorts `factors` into canonical order by adjacent swaps and returns the
/// accumulated sign, or `None` when a repeated odd symbol kills the product.
pub fn canonical_order(factors: &mut [Symbol]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..factors.len() {
        let mut j = i;
        while j > 0 && factors[j - 1] > factors[j] {
            sign *= swap_sign(factors[j - 1].degree(), factors[j].degree());
            factors.swap(j - 1, j);
            j -= 1;
        }
    }
    let repeated_odd = factors
        .windows(2)
        .any(|w| w[0] == w[1] && w[0].degree().is_odd());
    (!repeated_odd).then_some(sign)
}

pub fn degree_of(factors: &[Symbol]) -> Degree {
    factors.iter().fold(Degree::D00, |d, s| d + s.degree())
}

/// A polynomial in graded-commutative symbols with Gaussian-rational
/// coefficients. Keys are canonical factor lists; coefficients are nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedPoly {
    terms: BTreeMap<Vec<Symbol>, GaussianRational>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        GradedPoly::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        GradedPoly::term(c, Vec::new())
    }

    pub fn one() -> Self {
        GradedPoly::constant(GaussianRational::one())
    }

    pub fn symbol(s: impl Into<Symbol>) -> Self {
        GradedPoly::term(GaussianRational::one(), vec![s.into()])
    }

    pub fn var(name: FieldName, barred: bool, order: u8) -> Self {
        GradedPoly::symbol(FieldVar::new(name, barred, order))
    }

    /// `c · f₁ f₂ … fₙ` in the written order, normalized.
    pub fn term(c: GaussianRational, mut factors: Vec<Symbol>) -> Self {
        let mut p = GradedPoly::zero();
        if c.is_zero() {
            return p;
        }
        if let Some(sign) = canonical_order(&mut factors) {
            let c = if sign < 0 { -c } else { c };
            p.terms.insert(factors, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Symbol>, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, factors: &[Symbol]) -> GaussianRational {
        self.terms.get(factors).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Adds `c·factors` where `factors` is already canonical.
    pub(crate) fn add_canonical(&mut self, factors: Vec<Symbol>, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(factors) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c·factors` for an arbitrary factor order.
    pub(crate) fn add_term(&mut self, c: GaussianRational, mut factors: Vec<Symbol>) {
        if c.is_zero() {
            return;
        }
        if let Some(sign) = canonical_order(&mut factors) {
            self.add_canonical(factors, if sign < 0 { -c } else { c });
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return GradedPoly::zero();
        }
        GradedPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// The common degree of all terms, or `None` if inhomogeneous. Zero has
    /// every degree and reports `Some(D00)`.
    pub fn degree(&self) -> Option<Degree> {
        let mut it = self.terms.keys().map(|k| degree_of(k));
        let first = it.next().unwrap_or(Degree::D00);
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, d: Degree) -> bool {
        self.terms.keys().all(|k| degree_of(k) == d)
    }

    /// All field variables occurring, with their derivative orders.
    pub fn field_vars(&self) -> std::collections::BTreeSet<FieldVar> {
        self.terms
            .keys()
            .flatten()
            .filter_map(|s| match s {
                Symbol::Field(v) => Some(*v),
                Symbol::Const(_) => None,
            })
            .collect()
    }

    pub fn contains_const(&self, c: Const) -> bool {
        self.terms.keys().flatten().any(|s| *s == Symbol::Const(c))
    }

    pub fn max_order(&self) -> u8 {
        self.field_vars().iter().map(|v| v.order).max().unwrap_or(0)
    }

    /// Antilinear involution: bars toggled, `ε ↔ ε̄`, coefficients
    /// conjugated, factor order reversed with no extra sign.
    pub fn conjugate(&self) -> Self {
        let mut out = GradedPoly::zero();
        for (k, c) in &self.terms {
            let factors: Vec<Symbol> = k.iter().rev().map(|s| s.conjugate()).collect();
            out.add_term(c.conj(), factors);
        }
        out
    }

    /// Applies `f` to every term and sums the results.
    pub fn flat_map<E>(
        &self,
        mut f: impl FnMut(&[Symbol], &GaussianRational) -> Result<GradedPoly, E>,
    ) -> Result<GradedPoly, E> {
        let mut out = GradedPoly::zero();
        for (k, c) in &self.terms {
            out = out + f(k, c)?;
        }
        Ok(out)
    }

    /// Splits by the number of field factors.
    pub fn by_field_degree(&self) -> BTreeMap<usize, GradedPoly> {
        let mut out: BTreeMap<usize, GradedPoly> = BTreeMap::new();
        for (k, c) in &self.terms {
            let d = k.iter().filter(|s| matches!(s, Symbol::Field(_))).count();
            out.entry(d).or_default().add_canonical(k.clone(), c.clone());
        }
        out
    }

    /// `Some(c)` if `other = c·self` with the same support, `c ≠ 0`.
    pub fn ratio_to(&self, other: &GradedPoly) -> Option<GaussianRational> {
        if self.is_zero() || other.is_zero() || self.terms.len() != other.terms.len() {
            return None;
        }
        let (k0, c0) = self.terms.iter().next()?;
        let ratio = other.terms.get(k0)? * &c0.inv()?;
        (&self.scale(&ratio) == other).then_some(ratio)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| {
                    json!({
                        "coeff": gaussian_to_json(c),
                        "factors": k.iter().map(symbol_to_json).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Option<GradedPoly> {
        let mut out = GradedPoly::zero();
        for t in v.as_array()? {
            let c = gaussian_from_json(t.get("coeff")?)?;
            let factors = t
                .get("factors")?
                .as_array()?
                .iter()
                .map(symbol_from_json)
                .collect::<Option<Vec<_>>>()?;
            out.add_term(c, factors);
        }
        Some(out)
    }
}

fn symbol_to_json(s: &Symbol) -> Value {
    match s {
        Symbol::Const(c) => json!({ "const": c.text() }),
        Symbol::Field(v) => json!({ "field": v.name.text(), "barred": v.barred, "order": v.order }),
    }
}

fn symbol_from_json(v: &Value) -> Option<Symbol> {
    if let Some(c) = v.get("const") {
        return match Symbol::parse(c.as_str()?)? {
            s @ Symbol::Const(_) => Some(s),
            Symbol::Field(_) => None,
        };
    }
    let name = FieldName::from_text(v.get("field")?.as_str()?)?;
    let barred = v.get("barred")?.as_bool()?;
    if barred && name.is_real() {
        return None;
    }
    let order = u8::try_from(v.get("order")?.as_u64()?).ok()?;
    Some(Symbol::Field(FieldVar::new(name, barred, order)))
}

impl Add for GradedPoly {
    type Output = GradedPoly;
    fn add(mut self, rhs: GradedPoly) -> GradedPoly {
        for (k, c) in rhs.terms {
            self.add_canonical(k, c);
        }
        self
    }
}

impl Sub for GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: GradedPoly) -> GradedPoly {
        self + (-rhs)
    }
}

impl Neg for GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        GradedPoly {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

/// The canonical (graded-commutative) product.
impl Mul for &GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let mut factors = ka.clone();
                factors.extend(kb.iter().copied());
                out.add_term(ca * cb, factors);
            }
        }
        out
    }
}

impl Mul for GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: GradedPoly) -> GradedPoly {
        &self * &rhs
    }
}

pub fn canonical_product(a: &GradedPoly, b: &GradedPoly) -> GradedPoly {
    a * b
}

fn coefficient_text(c: &GaussianRational) -> String {
    let s = c.to_string();
    if !c.re().is_zero() && !c.im().is_zero() {
        format!("({s})")
    } else {
        s
    }
}

fn term_text(factors: &[Symbol], c: &GaussianRational) -> String {
    let body: Vec<String> = factors.iter().map(|s| s.to_string()).collect();
    let body = body.join("*");
    if body.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        body
    } else if (-c).is_one() {
        format!("-{body}")
    } else {
        format!("{}*{body}", coefficient_text(c))
    }
}

/// Stable text form, e.g. `2*i*mu*dx*ddzbar - 3*psi*xibar`.
impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let t = term_text(k, c);
            match (n, t.strip_prefix('-')) {
                (0, _) => f.write_str(&t)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {t}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("cannot parse graded polynomial `{src}` at offset {pos}: {msg}")]
pub struct ParsePolyError {
    pub src: String,
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> ParsePolyError {
        ParsePolyError {
            src: self.src.to_string(),
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<GradedPoly, ParsePolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GradedPoly, ParsePolyError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = &acc * &rhs;
            } else {
                let k = match (rhs.len(), rhs.terms().next()) {
                    (1, Some((f, k))) if f.is_empty() => k.clone(),
                    _ => return Err(self.err("division by a non-constant")),
                };
                let inv = k.inv().ok_or_else(|| self.err("division by zero"))?;
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<GradedPoly, ParsePolyError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.peek();
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let n: u32 = self.src[start..self.pos]
                .parse()
                .map_err(|_| self.err("expected exponent"))?;
            let mut acc = GradedPoly::one();
            for _ in 0..n {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<GradedPoly, ParsePolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: i64 = self.src[start..self.pos]
                    .parse()
                    .map_err(|_| self.err("integer too large"))?;
                Ok(GradedPoly::constant(GaussianRational::from_int(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let ident = &self.src[start..self.pos];
                if ident == "i" {
                    return Ok(GradedPoly::constant(GaussianRational::i()));
                }
                Symbol::parse(ident)
                    .map(GradedPoly::symbol)
                    .ok_or_else(|| self.err(format!("unknown symbol `{ident}`")))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses the text form; products are taken in the written order.
impl FromStr for GradedPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> GradedPoly {
        s.parse().unwrap()
    }

    #[test]
    fn sign_and_nilpotency() {
        assert!(p("psi*psi").is_zero());
        assert!(p("eps10*x*eps10").is_zero());
        assert_eq!(p("xi*psi"), p("psi*xi"));
        assert_eq!(p("z*psi"), -p("psi*z"));
        assert_eq!(p("z*z").len(), 1);
        assert_eq!(p("mu*mu").len(), 1);
    }

    #[test]
    fn printer_roundtrip() {
        let e = p("2*i*mu*dx*ddzbar - 3*xibar*psi + (1-i)*x + 1/2");
        let text = e.to_string();
        assert_eq!(text, "1/2 + 2*i*mu*dx*ddzbar + (1-i)*x - 3*psi*xibar");
        assert_eq!(p(&text), e);
        assert_eq!(GradedPoly::from_json(&e.to_json()), Some(e));
    }

    #[test]
    fn conjugation() {
        assert_eq!(p("x").conjugate(), p("xbar"));
        assert_eq!(p("i*psi").conjugate(), p("-i*psibar"));
        assert_eq!(p("eps10*psi").conjugate(), p("psibar*epsbar10"));
        let e = p("i*psibar*dpsi + eps11*z*x + mu*F");
        assert_eq!(e.conjugate().conjugate(), e);
    }

    #[test]
    fn ratio() {
        let a = p("dx*psibar + dz*xibar");
        assert_eq!(a.ratio_to(&a.scale(&GaussianRational::i())), Some(GaussianRational::i()));
        assert_eq!(a.ratio_to(&p("dx*psibar")), None);
    }
}
