use core::fmt;
use core::ops::{Mul, Neg};
use core::str::FromStr;

/// A character of `O(1)`, written `+` or `-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn parity(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Sign {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s.trim() {
            "+" | "plus" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "minus" | "-1" => Ok(Sign::Minus),
            _ => Err(()),
        }
    }
}

/// Signature of a representation in the block. `Both` is reserved for
/// discrete series, which are isomorphic to their `χ₋` twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Signature {
    Plus,
    Minus,
    Both,
}

impl Signature {
    pub fn definite(self) -> Option<Sign> {
        match self {
            Signature::Plus => Some(Sign::Plus),
            Signature::Minus => Some(Sign::Minus),
            Signature::Both => None,
        }
    }

    /// Equality where `Both` matches either sign.
    pub fn matches(self, other: Signature) -> bool {
        self == other || self == Signature::Both || other == Signature::Both
    }

    /// Effect of tensoring with `χ₋`.
    pub fn twist(self) -> Signature {
        match self {
            Signature::Plus => Signature::Minus,
            Signature::Minus => Signature::Plus,
            Signature::Both => Signature::Both,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Signature::Plus => "+",
            Signature::Minus => "-",
            Signature::Both => "pm",
        }
    }
}

impl From<Sign> for Signature {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => Signature::Plus,
            Sign::Minus => Signature::Minus,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Signature {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s.trim() {
            "pm" | "±" | "+-" | "both" => Ok(Signature::Both),
            other => other.parse::<Sign>().map(Signature::from),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_handles_negative_exponents() {
        assert_eq!(Sign::parity(-1), Sign::Minus);
        assert_eq!(Sign::parity(-2), Sign::Plus);
        assert_eq!(Sign::parity(3), Sign::Minus);
    }

    #[test]
    fn both_is_a_wildcard() {
        assert!(Signature::Both.matches(Signature::Minus));
        assert!(Signature::Plus.matches(Signature::Both));
        assert!(!Signature::Plus.matches(Signature::Minus));
        assert_eq!(Signature::Both.twist(), Signature::Both);
    }

    #[test]
    fn symbols_round_trip() {
        for s in [Signature::Plus, Signature::Minus, Signature::Both] {
            assert_eq!(s.symbol().parse::<Signature>(), Ok(s));
        }
    }
}
