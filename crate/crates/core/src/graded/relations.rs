use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{swap_sign, Degree};
use crate::RationalFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorId {
    H,
    Z,
    Q10,
    Q10d,
    Q01,
    Q01d,
}

impl GeneratorId {
    pub const ALL: [GeneratorId; 6] = [
        GeneratorId::H,
        GeneratorId::Z,
        GeneratorId::Q10,
        GeneratorId::Q10d,
        GeneratorId::Q01,
        GeneratorId::Q01d,
    ];

    /// The five generators other than `H`, in table order.
    pub const ACTING: [GeneratorId; 5] = [
        GeneratorId::Q10,
        GeneratorId::Q10d,
        GeneratorId::Q01,
        GeneratorId::Q01d,
        GeneratorId::Z,
    ];

    pub const fn degree(self) -> Degree {
        match self {
            GeneratorId::H => Degree::D00,
            GeneratorId::Z => Degree::D11,
            GeneratorId::Q10 | GeneratorId::Q10d => Degree::D10,
            GeneratorId::Q01 | GeneratorId::Q01d => Degree::D01,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            GeneratorId::H => "H",
            GeneratorId::Z => "Z",
            GeneratorId::Q10 => "Q10",
            GeneratorId::Q10d => "Q10d",
            GeneratorId::Q01 => "Q01",
            GeneratorId::Q01d => "Q01d",
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        GeneratorId::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| format!("unknown generator `{s}`"))
    }
}

/// A basis element of the span of generators and the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Operator {
    Identity,
    Gen(GeneratorId),
}

/// `[[left, right]] = Σ coeff·op`. The bracket kind follows from the degrees.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketRelation {
    pub left: GeneratorId,
    pub right: GeneratorId,
    pub rhs: Vec<(Operator, RationalFunction)>,
}

impl BracketRelation {
    pub fn is_anticommutator(&self) -> bool {
        swap_sign(self.left.degree(), self.right.degree()) == -1
    }
}

impl fmt::Display for BracketRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = if self.is_anticommutator() { ('{', '}') } else { ('[', ']') };
        write!(f, "{open}{},{}{close} = ", self.left, self.right)?;
        if self.rhs.is_empty() {
            return f.write_str("0");
        }
        for (k, (op, c)) in self.rhs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let name = match op {
                Operator::Identity => "1",
                Operator::Gen(g) => g.name(),
            };
            if c == &RationalFunction::from_int(1) {
                f.write_str(name)?;
            } else {
                write!(f, "{c}*{name}")?;
            }
        }
        Ok(())
    }
}

/// The 21 defining relations in canonical order: nilpotency (4),
/// Z-anticommutators (4), H-producing (2), iZ-producing (2), vanishing mixed
/// (2), centrality of H (6, including `[H,H]`), and `[Z,Z]`.
pub fn relation_list() -> Vec<BracketRelation> {
    use GeneratorId::*;
    let rel = |left, right, rhs| BracketRelation { left, right, rhs };
    let one = RationalFunction::from_int(1);
    let i = RationalFunction::i();
    let mut out = Vec::with_capacity(21);
    for q in [Q10, Q10d, Q01, Q01d] {
        out.push(rel(q, q, vec![]));
    }
    for q in [Q10, Q10d, Q01, Q01d] {
        out.push(rel(Z, q, vec![]));
    }
    out.push(rel(Q10, Q10d, vec![(Operator::Gen(H), one.clone())]));
    out.push(rel(Q01, Q01d, vec![(Operator::Gen(H), one)]));
    out.push(rel(Q01, Q10d, vec![(Operator::Gen(Z), i.clone())]));
    out.push(rel(Q01d, Q10, vec![(Operator::Gen(Z), i)]));
    out.push(rel(Q10, Q01, vec![]));
    out.push(rel(Q10d, Q01d, vec![]));
    for g in GeneratorId::ALL {
        out.push(rel(H, g, vec![]));
    }
    out.push(rel(Z, Z, vec![]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_list() {
        let rels = relation_list();
        assert_eq!(rels.len(), 21);
        assert_eq!(rels[8].to_string(), "{Q10,Q10d} = H");
        assert_eq!(rels[10].to_string(), "[Q01,Q10d] = i*Z");
        assert_eq!(rels[12].to_string(), "[Q10,Q01] = 0");
        assert_eq!(rels[20].to_string(), "[Z,Z] = 0");
        assert_eq!(rels.iter().filter(|r| r.is_anticommutator()).count(), 10);
    }
}
