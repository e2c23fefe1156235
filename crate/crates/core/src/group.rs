use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Largest supported `N`; keeps the complexified rank at or below 32.
const MAX_N: u32 = 64;

/// The real rank one group `SO(N,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupTag {
    big_n: u32,
}

impl GroupTag {
    pub fn new(big_n: u32) -> Result<Self> {
        if (2..=MAX_N).contains(&big_n) {
            Ok(GroupTag { big_n })
        } else {
            Err(Error::InvalidGroup(big_n))
        }
    }

    /// `N` in `SO(N,1)`.
    pub fn big_n(self) -> u32 {
        self.big_n
    }

    /// `n = N - 1`, so that the group reads `SO(n+1,1)`.
    pub fn n(self) -> u32 {
        self.big_n - 1
    }

    /// Rank of `so(N+1, C)`, which is also the length of a θ-weight.
    pub fn rank(self) -> usize {
        self.big_n.div_ceil(2) as usize
    }

    /// Rank of `SO(n)`, the length of the `σ` in a Langlands parameter.
    pub fn sigma_rank(self) -> usize {
        ((self.big_n - 1) / 2) as usize
    }

    /// Height of the tempered members of a block.
    pub fn top_height(self) -> u32 {
        self.big_n / 2
    }

    /// `N` odd: the complexified algebra is of type D and θ-weights end in 0.
    pub fn is_type_d(self) -> bool {
        self.big_n % 2 == 1
    }

    /// `N` even: tempered members are discrete series.
    pub fn has_discrete_series(self) -> bool {
        self.big_n.is_multiple_of(2)
    }

    pub fn subgroup(self) -> Option<GroupTag> {
        GroupTag::new(self.big_n - 1).ok()
    }

    pub fn is_subgroup_of(self, parent: GroupTag) -> bool {
        self.big_n + 1 == parent.big_n
    }

    pub(crate) fn expect_subgroup(self, child: GroupTag) -> Result<()> {
        if child.is_subgroup_of(self) {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                parent: self,
                child,
            })
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SO({},1)", self.big_n)
    }
}

/// Parses `SO(N,1)`; whitespace around the numbers is ignored.
impl FromStr for GroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("SO(")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or(Error::InvalidGroup(0))?;
        let (big_n, one) = inner.split_once(',').ok_or(Error::InvalidGroup(0))?;
        if one.trim() != "1" {
            return Err(Error::InvalidGroup(0));
        }
        let big_n: u32 = big_n.trim().parse().map_err(|_| Error::InvalidGroup(0))?;
        GroupTag::new(big_n)
    }
}
