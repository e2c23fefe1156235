use core::fmt;

use crate::GroupTag;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `SO(N,1)` with `N` outside the supported range.
    InvalidGroup(u32),
    /// Entries are not weakly decreasing and nonnegative.
    NotMonotone,
    WrongRank {
        expected: usize,
        found: usize,
    },
    /// The trailing entry must vanish for `SO(N,1)` with `N` odd.
    NotSelfDual,
    /// Two entries of an infinitesimal character coincide.
    SingularInfChar,
    RankMismatch {
        left: usize,
        right: usize,
    },
    /// Langlands data outside the classified set.
    InvalidDescriptor(&'static str),
    /// `(weight, height, signature)` violating the parameter invariants.
    InvalidEnhanced(&'static str),
    /// The second group is not the subgroup `SO(N-1,1)` of the first.
    GroupMismatch {
        parent: GroupTag,
        child: GroupTag,
    },
    NotInterlacing,
    NotTempered,
    NotAqLambda,
    BadTarget,
    OutOfRange(&'static str),
    UnknownSuite,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGroup(n) => write!(f, "unsupported group SO({n},1)"),
            Error::NotMonotone => {
                f.write_str("weight entries must be nonnegative and weakly decreasing")
            }
            Error::WrongRank { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::NotSelfDual => f.write_str("last entry must be 0 for SO(N,1) with N odd"),
            Error::SingularInfChar => f.write_str("infinitesimal character is singular"),
            Error::RankMismatch { left, right } => {
                write!(f, "ranks {left} and {right} cannot interlace")
            }
            Error::InvalidDescriptor(why) => write!(f, "invalid Langlands descriptor: {why}"),
            Error::InvalidEnhanced(why) => write!(f, "invalid enhanced parameter: {why}"),
            Error::GroupMismatch { parent, child } => {
                write!(f, "{child} is not the subgroup of {parent}")
            }
            Error::NotInterlacing => f.write_str("weights do not interlace"),
            Error::NotTempered => f.write_str("representation is not tempered"),
            Error::NotAqLambda => f.write_str("representation is not of the form A_q(λ)"),
            Error::BadTarget => f.write_str("target group is not in the subgroup chain"),
            Error::OutOfRange(what) => write!(f, "{what} out of range"),
            Error::UnknownSuite => f.write_str("unknown suite"),
        }
    }
}

impl core::error::Error for Error {}
