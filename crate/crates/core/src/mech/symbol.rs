use std::fmt;

use crate::graded::Degree;

/// Field names. `Y` and `A` are real; the others come with a barred partner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldName {
    X,
    Z,
    Psi,
    Xi,
    F,
    Y,
    A,
    /// `a = ẋ`
    LowA,
}

impl FieldName {
    pub const ALL: [FieldName; 8] = [
        FieldName::X,
        FieldName::Z,
        FieldName::Psi,
        FieldName::Xi,
        FieldName::F,
        FieldName::Y,
        FieldName::A,
        FieldName::LowA,
    ];

    pub const fn degree(self) -> Degree {
        match self {
            FieldName::X | FieldName::Y | FieldName::A | FieldName::LowA => Degree::D00,
            FieldName::Z | FieldName::F => Degree::D11,
            FieldName::Psi => Degree::D10,
            FieldName::Xi => Degree::D01,
        }
    }

    pub const fn is_real(self) -> bool {
        matches!(self, FieldName::Y | FieldName::A)
    }

    pub const fn text(self) -> &'static str {
        match self {
            FieldName::X => "x",
            FieldName::Z => "z",
            FieldName::Psi => "psi",
            FieldName::Xi => "xi",
            FieldName::F => "F",
            FieldName::Y => "y",
            FieldName::A => "A",
            FieldName::LowA => "a",
        }
    }

    pub fn from_text(s: &str) -> Option<FieldName> {
        FieldName::ALL.into_iter().find(|f| f.text() == s)
    }
}

/// `name^(order)`, barred or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldVar {
    pub name: FieldName,
    pub barred: bool,
    pub order: u8,
}

impl FieldVar {
    pub const fn new(name: FieldName, barred: bool, order: u8) -> Self {
        FieldVar { name, barred, order }
    }

    pub const fn plain(name: FieldName) -> Self {
        FieldVar::new(name, false, 0)
    }

    pub const fn bar(name: FieldName) -> Self {
        FieldVar::new(name, true, 0)
    }

    pub const fn degree(self) -> Degree {
        self.name.degree()
    }

    pub const fn with_order(self, order: u8) -> Self {
        FieldVar::new(self.name, self.barred, order)
    }

    /// The same variable at order 0.
    pub const fn base(self) -> Self {
        self.with_order(0)
    }

    pub fn conjugate(self) -> Self {
        if self.name.is_real() {
            self
        } else {
            FieldVar::new(self.name, !self.barred, self.order)
        }
    }
}

impl fmt::Display for FieldVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.order {
            f.write_str("d")?;
        }
        f.write_str(self.name.text())?;
        if self.barred {
            f.write_str("bar")?;
        }
        Ok(())
    }
}

/// Time-independent graded constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Const {
    Mu,
    Eps10,
    EpsBar10,
    Eps01,
    EpsBar01,
    Eps11,
}

impl Const {
    pub const ALL: [Const; 6] = [
        Const::Mu,
        Const::Eps10,
        Const::EpsBar10,
        Const::Eps01,
        Const::EpsBar01,
        Const::Eps11,
    ];

    pub const fn degree(self) -> Degree {
        match self {
            Const::Mu | Const::Eps11 => Degree::D11,
            Const::Eps10 | Const::EpsBar10 => Degree::D10,
            Const::Eps01 | Const::EpsBar01 => Degree::D01,
        }
    }

    pub const fn text(self) -> &'static str {
        match self {
            Const::Mu => "mu",
            Const::Eps10 => "eps10",
            Const::EpsBar10 => "epsbar10",
            Const::Eps01 => "eps01",
            Const::EpsBar01 => "epsbar01",
            Const::Eps11 => "eps11",
        }
    }

    /// `ε ↔ ε̄`; `μ` and `ε₁₁` are self-conjugate.
    pub const fn conjugate(self) -> Self {
        match self {
            Const::Eps10 => Const::EpsBar10,
            Const::EpsBar10 => Const::Eps10,
            Const::Eps01 => Const::EpsBar01,
            Const::EpsBar01 => Const::Eps01,
            c => c,
        }
    }
}

/// A factor of a monomial. Constants order before fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Const(Const),
    Field(FieldVar),
}

impl Symbol {
    pub const fn degree(self) -> Degree {
        match self {
            Symbol::Const(c) => c.degree(),
            Symbol::Field(v) => v.degree(),
        }
    }

    pub fn conjugate(self) -> Self {
        match self {
            Symbol::Const(c) => Symbol::Const(c.conjugate()),
            Symbol::Field(v) => Symbol::Field(v.conjugate()),
        }
    }

    /// Parses `mu`, `eps10`, `ddzbar`, `dpsi`, `A`, ...
    pub fn parse(s: &str) -> Option<Symbol> {
        if let Some(c) = Const::ALL.into_iter().find(|c| c.text() == s) {
            return Some(Symbol::Const(c));
        }
        let order = s.bytes().take_while(|&b| b == b'd').count();
        let rest = &s[order..];
        let (name, barred) = match rest.strip_suffix("bar") {
            Some(n) => (n, true),
            None => (rest, false),
        };
        let name = FieldName::from_text(name)?;
        if barred && name.is_real() {
            return None;
        }
        Some(Symbol::Field(FieldVar::new(name, barred, u8::try_from(order).ok()?)))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Const(c) => f.write_str(c.text()),
            Symbol::Field(v) => v.fmt(f),
        }
    }
}

impl From<FieldVar> for Symbol {
    fn from(v: FieldVar) -> Self {
        Symbol::Field(v)
    }
}

impl From<Const> for Symbol {
    fn from(c: Const) -> Self {
        Symbol::Const(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        for s in ["mu", "eps10", "epsbar01", "x", "ddzbar", "dpsi", "xibar", "A", "dy", "abar", "dddF"] {
            assert_eq!(Symbol::parse(s).unwrap().to_string(), s);
        }
        assert!(Symbol::parse("Abar").is_none());
        assert!(Symbol::parse("w").is_none());
    }

    #[test]
    fn constants_sort_first() {
        let c = Symbol::Const(Const::Eps11);
        let x = Symbol::Field(FieldVar::plain(FieldName::X));
        assert!(c < x);
    }
}
