use std::fmt;
use std::ops::Add;

/// An element `(a, b)` of Z₂×Z₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree {
    a: u8,
    b: u8,
}

impl Degree {
    pub const D00: Degree = Degree { a: 0, b: 0 };
    pub const D11: Degree = Degree { a: 1, b: 1 };
    pub const D10: Degree = Degree { a: 1, b: 0 };
    pub const D01: Degree = Degree { a: 0, b: 1 };
    pub const ALL: [Degree; 4] = [Self::D00, Self::D11, Self::D10, Self::D01];

    pub const fn new(a: u8, b: u8) -> Self {
        Degree { a: a & 1, b: b & 1 }
    }

    pub const fn a(self) -> u8 {
        self.a
    }

    pub const fn b(self) -> u8 {
        self.b
    }

    /// `a·a' + b·b' mod 2`.
    pub const fn dot(self, other: Degree) -> u8 {
        (self.a * other.a + self.b * other.b) & 1
    }

    /// Self-pairing is odd: the component squares to zero in a
    /// Z₂²-commutative algebra.
    pub const fn is_odd(self) -> bool {
        self.dot(self) == 1
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        Degree::new(self.a ^ rhs.a, self.b ^ rhs.b)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// `(-1)^(d1·d2)`: the factor in `x·y = sign·y·x` for homogeneous elements.
pub const fn swap_sign(d1: Degree, d2: Degree) -> i8 {
    if d1.dot(d2) == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_rule() {
        assert_eq!(swap_sign(Degree::D10, Degree::D01), 1);
        assert_eq!(swap_sign(Degree::D10, Degree::D10), -1);
        assert_eq!(swap_sign(Degree::D11, Degree::D11), 1);
        assert_eq!(swap_sign(Degree::D11, Degree::D10), -1);
        for d1 in Degree::ALL {
            for d2 in Degree::ALL {
                assert_eq!(swap_sign(d1, d2), swap_sign(d2, d1));
            }
        }
    }

    #[test]
    fn addition_is_componentwise() {
        assert_eq!(Degree::D10 + Degree::D01, Degree::D11);
        assert_eq!(Degree::D11 + Degree::D11, Degree::D00);
        assert!(Degree::D10.is_odd() && Degree::D01.is_odd());
        assert!(!Degree::D11.is_odd() && !Degree::D00.is_odd());
    }
}
