use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::unipoly::UniPoly;
use super::GaussianRational;

/// A polynomial in `E` and `λ` with Gaussian-rational coefficients.
///
/// Terms are keyed by `(deg_E, deg_λ)`; the key order is lexicographic, so the
/// last entry is the leading term. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), GaussianRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: GaussianRational, deg_e: u32, deg_l: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_e, deg_l), c);
        }
        BiPoly { terms }
    }

    /// The indeterminate `E`.
    pub fn e() -> Self {
        BiPoly::monomial(GaussianRational::one(), 1, 0)
    }

    /// The indeterminate `λ`.
    pub fn lambda() -> Self {
        BiPoly::monomial(GaussianRational::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), GaussianRational)>>(iter: I) -> Self {
        let mut p = BiPoly::zero();
        for (k, c) in iter {
            p.add_term(k, &c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(u32, u32), &GaussianRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            Some(GaussianRational::zero())
        } else if self.is_constant() {
            self.terms.get(&(0, 0)).cloned()
        } else {
            None
        }
    }

    /// Leading term under the lexicographic `(deg_E, deg_λ)` order.
    pub fn leading(&self) -> Option<((u32, u32), &GaussianRational)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    pub fn degree_e(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_l(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    fn add_term(&mut self, key: (u32, u32), c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(GaussianRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, &-c);
        }
        out
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let mut out = BiPoly::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, e0: &GaussianRational, l0: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for ((a, b), c) in &self.terms {
            acc += &(&(c * &e0.pow(*a)) * &l0.pow(*b));
        }
        acc
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &BiPoly) -> Option<BiPoly> {
        let ((de, dl), dc) = divisor.leading()?;
        let dc_inv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some(((re, rl), rc)) = rem.leading() {
            if re < de || rl < dl {
                return None;
            }
            let t = BiPoly::monomial(rc * &dc_inv, re - de, rl - dl);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Recursive view: coefficient of `E^k` as a polynomial in `λ`.
    fn to_rec(&self) -> Vec<UniPoly> {
        let n = self.degree_e() as usize + 1;
        let mut dense: Vec<Vec<GaussianRational>> = vec![Vec::new(); n];
        for ((a, b), c) in &self.terms {
            let row = &mut dense[*a as usize];
            if row.len() <= *b as usize {
                row.resize(*b as usize + 1, GaussianRational::zero());
            }
            row[*b as usize] = c.clone();
        }
        let mut rec: Vec<UniPoly> = dense.into_iter().map(UniPoly::new).collect();
        while rec.last().is_some_and(|p| p.is_zero()) {
            rec.pop();
        }
        rec
    }

    fn from_rec(rec: &[UniPoly]) -> BiPoly {
        BiPoly::from_terms(rec.iter().enumerate().flat_map(|(a, p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .map(move |(b, c)| ((a as u32, b as u32), c.clone()))
        }))
    }

    /// Greatest common divisor, normalized so the leading coefficient is 1.
    ///
    /// Primitive pseudo-remainder sequence in `E` over `Q(i)[λ]`.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return BiPoly::one();
        }
        let a = self.to_rec();
        let b = other.to_rec();
        let ca = rec_content(&a);
        let cb = rec_content(&b);
        let content = ca.gcd(&cb);
        let mut p = rec_div_content(&a, &ca);
        let mut q = rec_div_content(&b, &cb);
        if p.len() < q.len() {
            std::mem::swap(&mut p, &mut q);
        }
        let g = loop {
            if q.len() <= 1 {
                // q primitive of E-degree 0 is a unit.
                break if q.is_empty() { p } else { vec![UniPoly::one()] };
            }
            let r = rec_prem(&p, &q);
            p = q;
            q = if r.is_empty() {
                r
            } else {
                let c = rec_content(&r);
                rec_div_content(&r, &c)
            };
        };
        let g: Vec<UniPoly> = g.iter().map(|c| c.mul(&content)).collect();
        BiPoly::from_rec(&g).monic()
    }

    pub fn monic(&self) -> BiPoly {
        match self.leading().and_then(|(_, c)| c.inv()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn conj(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }
}

fn rec_content(p: &[UniPoly]) -> UniPoly {
    p.iter().fold(UniPoly::zero(), |acc, c| acc.gcd(c))
}

fn rec_div_content(p: &[UniPoly], c: &UniPoly) -> Vec<UniPoly> {
    p.iter().map(|a| a.div_exact(c)).collect()
}

/// Pseudo-remainder of `a` by `b` as polynomials in `E`.
fn rec_prem(a: &[UniPoly], b: &[UniPoly]) -> Vec<UniPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<UniPoly> = a.to_vec();
    while r.len() > db {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (k, bc) in b.iter().enumerate() {
            r[shift + k] = r[shift + k].sub(&lr.mul(bc));
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, a: u32, b: u32) -> fmt::Result {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("E".to_string()),
        _ => parts.push(format!("E^{a}")),
    }
    match b {
        0 => {}
        1 => parts.push("lam".to_string()),
        _ => parts.push(format!("lam^{b}")),
    }
    write!(f, "{}", parts.join("*"))
}

/// Terms in descending order, e.g. `E^2*lam - 1/2*i*E + 3`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let (negative, mag) = if c.is_negative_real() { (true, -c) } else { (false, c.clone()) };
            if n == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let coef = mag.to_string();
            let compound = !mag.is_real() && !mag.re().is_zero();
            let coef = if compound { format!("({coef})") } else { coef };
            if *a == 0 && *b == 0 {
                write!(f, "{coef}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{coef}*")?;
                }
                fmt_monomial(f, *a, *b)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn gcd_cancels_common_factor() {
        let e = BiPoly::e();
        let l = BiPoly::lambda();
        let f = l.sub(&e.mul(&e)); // λ - E²
        let a = f.mul(&l.add(&BiPoly::constant(gr(2))));
        let b = f.mul(&e);
        let g = a.gcd(&b);
        assert_eq!(g, f.monic());
        assert_eq!(a.div_exact(&g).unwrap().mul(&g), a);
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let e = BiPoly::e();
        let l = BiPoly::lambda();
        assert_eq!(e.gcd(&l), BiPoly::one());
        assert_eq!(e.add(&l).gcd(&e.sub(&l)), BiPoly::one());
    }

    #[test]
    fn gcd_with_lambda_content() {
        // λ(E+1) and λ²(E-1): gcd is λ
        let e = BiPoly::e();
        let l = BiPoly::lambda();
        let one = BiPoly::one();
        let a = l.mul(&e.add(&one));
        let b = l.mul(&l).mul(&e.sub(&one));
        assert_eq!(a.gcd(&b), l);
    }

    #[test]
    fn display_is_descending() {
        let p = BiPoly::from_terms([((2, 1), gr(1)), ((1, 0), GaussianRational::from_ratio(-1, 2)), ((0, 0), gr(3))]);
        assert_eq!(p.to_string(), "E^2*lam - 1/2*E + 3");
    }
}
