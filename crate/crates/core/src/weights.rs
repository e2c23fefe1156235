//! Highest weights, infinitesimal characters and interlacing.
//!
//! Half-integral quantities are stored doubled. For `G = SO(N,1)` with
//! `n = N - 1` the ρ-shift of the `j`-th coordinate (1-based) is
//! `n/2 + 1 - j`, i.e. `N + 1 - 2j` doubled, and the `k`-th coordinate of
//! an `SO(n)` weight is shifted by `n/2 - k`, i.e. `N - 1 - 2k` doubled.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, GroupTag, Result, Sign};

/// Weakly decreasing vector of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<u32>);

impl Weight {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.windows(2).all(|w| w[0] >= w[1]) {
            Ok(Weight(entries))
        } else {
            Err(Error::NotMonotone)
        }
    }

    /// Accepts signed input; any negative entry is reported as
    /// [`Error::NotMonotone`] since the chain must end at `≥ 0`.
    pub fn from_signed(entries: &[i64]) -> Result<Self> {
        let entries = entries
            .iter()
            .map(|&e| u32::try_from(e).map_err(|_| Error::NotMonotone))
            .collect::<Result<Vec<_>>>()?;
        Weight::new(entries)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(alloc::vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Checks rank and, when `N` is odd, the trailing zero.
    pub(crate) fn check_theta_weight(&self, group: GroupTag) -> Result<()> {
        if self.rank() != group.rank() {
            return Err(Error::WrongRank {
                expected: group.rank(),
                found: self.rank(),
            });
        }
        if group.is_type_d() && self.last() != Some(0) {
            return Err(Error::NotSelfDual);
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Validates a highest weight for `SO(N,1)`. With `assumption_a` set and `N`
/// odd the last entry must be zero.
pub fn validate_weight(entries: &[i64], group: GroupTag, assumption_a: bool) -> Result<Weight> {
    if entries.len() != group.rank() {
        return Err(Error::WrongRank {
            expected: group.rank(),
            found: entries.len(),
        });
    }
    let weight = Weight::from_signed(entries)?;
    if assumption_a && group.is_type_d() && weight.last() != Some(0) {
        return Err(Error::NotSelfDual);
    }
    Ok(weight)
}

/// Regular integral infinitesimal character modulo the Weyl group, stored
/// as the doubled absolute values sorted strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InfChar {
    doubled: Vec<u32>,
    half_odd: bool,
}

impl InfChar {
    /// Builds from doubled entries in any order; signs are discarded.
    pub fn from_doubled(entries: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut doubled: Vec<u32> = entries
            .into_iter()
            .map(|e| u32::try_from(e.unsigned_abs()).map_err(|_| Error::OutOfRange("entry")))
            .collect::<Result<_>>()?;
        doubled.sort_unstable_by(|a, b| b.cmp(a));
        if doubled.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::SingularInfChar);
        }
        let half_odd = doubled.first().is_some_and(|e| e % 2 == 1);
        if doubled.iter().any(|e| (e % 2 == 1) != half_odd) {
            return Err(Error::InvalidDescriptor(
                "mixed integral and half-integral entries",
            ));
        }
        Ok(InfChar { doubled, half_odd })
    }

    pub fn doubled(&self) -> &[u32] {
        &self.doubled
    }

    pub fn half_odd(&self) -> bool {
        self.half_odd
    }

    pub fn rank(&self) -> usize {
        self.doubled.len()
    }
}

impl fmt::Display for InfChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, e) in self.doubled.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            if e % 2 == 0 {
                write!(f, "{}", e / 2)?;
            } else {
                write!(f, "{e}/2")?;
            }
        }
        f.write_str(")")
    }
}

/// Doubled ρ-shift of the `j`-th θ-weight coordinate (1-based).
pub(crate) fn rho_shift(group: GroupTag, j: usize) -> i64 {
    i64::from(group.big_n()) + 1 - 2 * j as i64
}

/// Doubled shift of the `k`-th coordinate of an `SO(n)` weight (1-based).
pub(crate) fn sigma_shift(group: GroupTag, k: usize) -> i64 {
    i64::from(group.big_n()) - 1 - 2 * k as i64
}

/// Doubled `|λ - n/2|`.
pub(crate) fn lambda_entry(group: GroupTag, lambda: i64) -> i64 {
    (2 * lambda - i64::from(group.n())).abs()
}

/// Doubled `s + ρ`, strictly decreasing whenever `s` is weakly decreasing.
pub(crate) fn shifted_theta(group: GroupTag, s: &Weight) -> Vec<i64> {
    s.entries()
        .iter()
        .enumerate()
        .map(|(j, &e)| 2 * i64::from(e) + rho_shift(group, j + 1))
        .collect()
}

/// Infinitesimal character `s + ρ` of the finite-dimensional
/// representation with highest weight `s`.
pub fn infchar_finite_dim(group: GroupTag, s: &Weight) -> Result<InfChar> {
    if s.rank() != group.rank() {
        return Err(Error::WrongRank {
            expected: group.rank(),
            found: s.rank(),
        });
    }
    InfChar::from_doubled(shifted_theta(group, s))
}

/// Infinitesimal character `{σ_k + n/2 - k} ∪ {|λ - n/2|}` of the principal
/// series `I_δ(σ, λ)`.
pub fn infchar_principal_series(group: GroupTag, sigma: &Weight, lambda: i64) -> Result<InfChar> {
    if sigma.rank() != group.sigma_rank() {
        return Err(Error::WrongRank {
            expected: group.sigma_rank(),
            found: sigma.rank(),
        });
    }
    InfChar::from_doubled(principal_series_doubled(group, sigma, lambda))
}

pub(crate) fn principal_series_doubled(group: GroupTag, sigma: &Weight, lambda: i64) -> Vec<i64> {
    let mut entries: Vec<i64> = sigma
        .entries()
        .iter()
        .enumerate()
        .map(|(k, &e)| 2 * i64::from(e) + sigma_shift(group, k + 1))
        .collect();
    entries.push(lambda_entry(group, lambda));
    entries
}

fn check_interlacing_ranks(mu: usize, nu: usize) -> Result<()> {
    if nu == mu || nu + 1 == mu {
        Ok(())
    } else {
        Err(Error::RankMismatch {
            left: mu,
            right: nu,
        })
    }
}

/// `ν_k` ranges over `[μ_{k+1}, μ_k]`, with `μ_{p+1} = 0` when the ranks agree.
fn interlacing_bounds(mu: &Weight, target_rank: usize) -> Vec<(u32, u32)> {
    let m = mu.entries();
    (0..target_rank)
        .map(|k| (m.get(k + 1).copied().unwrap_or(0), m[k]))
        .collect()
}

/// `μ₁ ≥ ν₁ ≥ μ₂ ≥ ν₂ ≥ ⋯`, where `rank(ν)` is `rank(μ)` or `rank(μ) - 1`.
pub fn interlaces(mu: &Weight, nu: &Weight) -> Result<bool> {
    check_interlacing_ranks(mu.rank(), nu.rank())?;
    Ok(interlacing_bounds(mu, nu.rank())
        .iter()
        .zip(nu.entries())
        .all(|(&(lo, hi), &v)| lo <= v && v <= hi))
}

/// Every `ν` of the given rank interlacing `μ`, lexicographically decreasing.
pub fn enumerate_interlacing(mu: &Weight, target_rank: usize) -> Result<Interlacing> {
    check_interlacing_ranks(mu.rank(), target_rank)?;
    let bounds = interlacing_bounds(mu, target_rank);
    let next = Some(bounds.iter().map(|&(_, hi)| hi).collect());
    Ok(Interlacing { bounds, next })
}

/// Number of weights [`enumerate_interlacing`] yields.
pub fn count_interlacing(mu: &Weight, target_rank: usize) -> Result<BigUint> {
    check_interlacing_ranks(mu.rank(), target_rank)?;
    Ok(interlacing_bounds(mu, target_rank)
        .iter()
        .map(|&(lo, hi)| BigUint::from(hi - lo + 1))
        .product())
}

/// Odometer over a box of interlacing bounds.
#[derive(Clone, Debug)]
pub struct Interlacing {
    bounds: Vec<(u32, u32)>,
    next: Option<Vec<u32>>,
}

impl Iterator for Interlacing {
    type Item = Weight;

    fn next(&mut self) -> Option<Weight> {
        let current = self.next.take()?;
        let mut following = current.clone();
        for k in (0..following.len()).rev() {
            let (lo, hi) = self.bounds[k];
            if following[k] > lo {
                following[k] -= 1;
                self.next = Some(following);
                break;
            }
            following[k] = hi;
        }
        // Interlacing bounds keep every point of the box weakly decreasing.
        Some(Weight(current))
    }
}

/// All dominant weights of the given rank with entries at most `max`,
/// lexicographically increasing.
pub fn dominant_weights(rank: usize, max: u32) -> Vec<Weight> {
    let mut out: Vec<Vec<u32>> = alloc::vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|c| {
                let cap = c.last().copied().unwrap_or(max);
                (0..=cap).map(move |v| {
                    let mut next = c.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    let mut out: Vec<Weight> = out.into_iter().map(Weight).collect();
    out.sort();
    out
}

/// Dimension of the irreducible `SO(N)`-module with highest weight `lam`.
///
/// `lam` has rank `⌊N/2⌋`. For even `N` with a nonzero last entry the
/// chirality selects one of two conjugate modules; both have this dimension.
pub fn weyl_dim(big_n: u32, lam: &Weight, chirality: Sign) -> Result<BigUint> {
    let rank = (big_n / 2) as usize;
    if big_n == 0 {
        return Err(Error::InvalidGroup(0));
    }
    if lam.rank() != rank {
        return Err(Error::WrongRank {
            expected: rank,
            found: lam.rank(),
        });
    }
    let mut signed: Vec<i64> = lam.entries().iter().map(|&e| i64::from(e)).collect();
    if chirality == Sign::Minus && big_n.is_multiple_of(2) {
        if let Some(last) = signed.last_mut() {
            *last = -*last;
        }
    }
    Ok(weyl_dim_signed(big_n, &signed))
}

/// Weyl dimension formula `∏_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩` for `so(N)`, with the
/// last entry allowed to be negative in type D. Coordinates are doubled so
/// that type B stays integral; the doubling cancels in the quotient.
pub(crate) fn weyl_dim_signed(big_n: u32, lam: &[i64]) -> BigUint {
    let rank = lam.len();
    let type_b = big_n % 2 == 1;
    // Doubled ρ: type B has ρ_j = k - j + 1/2, type D has ρ_j = k - j.
    let rho: Vec<i64> = (1..=rank)
        .map(|j| {
            let base = 2 * (rank - j) as i64;
            if type_b {
                base + 1
            } else {
                base
            }
        })
        .collect();
    let shifted: Vec<i64> = lam.iter().zip(&rho).map(|(l, r)| 2 * l + r).collect();

    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let mul = |acc: &mut BigUint, v: i64| {
        *acc *= BigUint::from(v.unsigned_abs());
    };
    for i in 0..rank {
        for j in i + 1..rank {
            mul(&mut num, shifted[i] - shifted[j]);
            mul(&mut num, shifted[i] + shifted[j]);
            mul(&mut den, rho[i] - rho[j]);
            mul(&mut den, rho[i] + rho[j]);
        }
        if type_b {
            mul(&mut num, shifted[i]);
            mul(&mut den, rho[i]);
        }
    }
    debug_assert!((&num % &den) == BigUint::from(0u8));
    num / den
}
