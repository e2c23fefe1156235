//! Exhaustive verification suites.
//!
//! The reference point is the classical branching rule for compact
//! `SO(N) ↓ SO(N-1)` together with the Weyl dimension formula, which do not
//! depend on anything in [`crate::reps`] or [`crate::branching`]. Every suite
//! is a deterministic sweep over a finite grid. Grids are split into cases
//! numbered from 0; a shard runs the cases congruent to its index, so
//! shards can run on separate threads and merge in any order.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

use crate::reps::height_by_intervals;
use crate::weights::weyl_dim_signed;
use crate::{
    branch_enumerate, classify, dominant_weights, enhanced_from_langlands, finite_dim_branch,
    langlands_from_enhanced, multiplicity, sb_diagram, twist_chi_minus, EnhancedParam, Error,
    GroupTag, Result, Sign, Weight,
};

/// Highest weight of `SO(N)`: `⌊N/2⌋` entries, weakly decreasing, and for
/// even `N` the last entry may be negative with `μ_{k-1} ≥ |μ_k|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompactWeight {
    big_n: u32,
    entries: Vec<i64>,
}

impl CompactWeight {
    pub fn new(big_n: u32, entries: Vec<i64>) -> Result<Self> {
        if big_n == 0 {
            return Err(Error::InvalidGroup(0));
        }
        let rank = (big_n / 2) as usize;
        if entries.len() != rank {
            return Err(Error::WrongRank {
                expected: rank,
                found: entries.len(),
            });
        }
        let mut abs = entries.clone();
        if big_n.is_multiple_of(2) {
            if let Some(last) = abs.last_mut() {
                *last = last.abs();
            }
        }
        if abs.iter().any(|&e| e < 0) || abs.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotMonotone);
        }
        Ok(CompactWeight { big_n, entries })
    }

    pub fn big_n(&self) -> u32 {
        self.big_n
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn dim(&self) -> BigUint {
        weyl_dim_signed(self.big_n, &self.entries)
    }
}

impl fmt::Display for CompactWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Classical multiplicity-free restriction `SO(N) ↓ SO(N-1)`:
/// `μ₁ ≥ ν₁ ≥ ⋯ ≥ μ_k ≥ |ν_k|` for `N = 2k+1`, and
/// `μ₁ ≥ ν₁ ≥ ⋯ ≥ ν_{k-1} ≥ |μ_k|` for `N = 2k`.
pub fn compact_branch_so(lam: &CompactWeight) -> Result<Vec<CompactWeight>> {
    let big_n = lam.big_n;
    if big_n < 2 {
        return Err(Error::InvalidGroup(big_n));
    }
    let mu = &lam.entries;
    let ranges: Vec<(i64, i64)> = if big_n % 2 == 1 {
        let k = mu.len();
        (0..k)
            .map(|j| {
                if j + 1 < k {
                    (mu[j + 1], mu[j])
                } else {
                    (-mu[j], mu[j])
                }
            })
            .collect()
    } else {
        (0..mu.len() - 1)
            .map(|j| (mu[j + 1].abs(), mu[j]))
            .collect()
    };
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for &(lo, hi) in &ranges {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).rev().map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|e| CompactWeight::new(big_n - 1, e))
        .collect()
}

/// The six verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    DimConservation,
    Roundtrip,
    HeightConsistency,
    TrivialRhoDiagrams,
    ChiTwist,
    Height0VsFinite,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::DimConservation,
        Suite::Roundtrip,
        Suite::HeightConsistency,
        Suite::TrivialRhoDiagrams,
        Suite::ChiTwist,
        Suite::Height0VsFinite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DimConservation => "dim-conservation",
            Suite::Roundtrip => "roundtrip",
            Suite::HeightConsistency => "height-consistency",
            Suite::TrivialRhoDiagrams => "trivial-rho-diagrams",
            Suite::ChiTwist => "chi-twist",
            Suite::Height0VsFinite => "height0-vs-finite",
        }
    }

    /// Default grid. For dim-conservation `max_n` bounds the compact
    /// `SO(N)`; otherwise it bounds the `N` of `SO(N,1)`.
    pub fn default_bounds(self) -> GridBounds {
        match self {
            Suite::DimConservation => GridBounds {
                max_n: 8,
                max_entry: 3,
            },
            Suite::TrivialRhoDiagrams => GridBounds {
                max_n: 11,
                max_entry: 0,
            },
            _ => GridBounds {
                max_n: 11,
                max_entry: 4,
            },
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s.trim())
            .ok_or(Error::UnknownSuite)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridBounds {
    pub max_n: u32,
    pub max_entry: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Counterexample {
    pub case: u64,
    pub detail: String,
}

/// Result of running a suite or one of its shards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub cases_run: u64,
    pub failures: Vec<Counterexample>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Combines shard outcomes of the same suite; failures stay sorted by
    /// case index so the result does not depend on merge order.
    pub fn merge(mut self, other: SuiteOutcome) -> SuiteOutcome {
        debug_assert_eq!(self.suite, other.suite);
        self.cases_run += other.cases_run;
        self.failures.extend(other.failures);
        self.failures
            .sort_by(|a, b| a.case.cmp(&b.case).then_with(|| a.detail.cmp(&b.detail)));
        self
    }
}

pub fn run_suite(suite: Suite, bounds: GridBounds) -> SuiteOutcome {
    run_suite_shard(suite, bounds, 0, 1)
}

/// Runs the cases whose index is `shard` modulo `shards`.
pub fn run_suite_shard(suite: Suite, bounds: GridBounds, shard: u64, shards: u64) -> SuiteOutcome {
    assert!(shards > 0 && shard < shards, "shard {shard} of {shards}");
    let mut runner = Runner {
        shard,
        shards,
        next_case: 0,
        cases_run: 0,
        failures: Vec::new(),
    };
    match suite {
        Suite::DimConservation => dim_conservation(&mut runner, bounds),
        Suite::Roundtrip => roundtrip(&mut runner, bounds),
        Suite::HeightConsistency => height_consistency(&mut runner, bounds),
        Suite::TrivialRhoDiagrams => trivial_rho_diagrams(&mut runner, bounds),
        Suite::ChiTwist => chi_twist(&mut runner, bounds),
        Suite::Height0VsFinite => height0_vs_finite(&mut runner, bounds),
    }
    SuiteOutcome {
        suite,
        cases_run: runner.cases_run,
        failures: runner.failures,
    }
}

struct Runner {
    shard: u64,
    shards: u64,
    next_case: u64,
    cases_run: u64,
    failures: Vec<Counterexample>,
}

impl Runner {
    /// Runs `check` if the next case belongs to this shard. `check` returns
    /// the failure details for the case.
    fn case(&mut self, check: impl FnOnce() -> Vec<String>) {
        let case = self.next_case;
        self.next_case += 1;
        if case % self.shards != self.shard {
            return;
        }
        self.cases_run += 1;
        self.failures.extend(
            check()
                .into_iter()
                .map(|detail| Counterexample { case, detail }),
        );
    }
}

fn group(big_n: u32) -> GroupTag {
    GroupTag::new(big_n).expect("grid groups are in range")
}

/// θ-weights of `SO(N,1)` with entries at most `max_entry`.
pub fn theta_grid(g: GroupTag, max_entry: u32) -> Vec<Weight> {
    dominant_weights(g.rank(), max_entry)
        .into_iter()
        .filter(|s| !g.is_type_d() || s.last() == Some(0))
        .collect()
}

/// Every member of every block in the grid for `SO(N,1)`, as enhanced
/// parameters, block by block.
fn grid_members(g: GroupTag, max_entry: u32) -> Vec<Vec<EnhancedParam>> {
    theta_grid(g, max_entry)
        .iter()
        .map(|s| {
            classify(g, s)
                .and_then(|ds| ds.iter().map(enhanced_from_langlands).collect())
                .expect("grid weights are valid")
        })
        .collect()
}

/// Both chiralities for even `N` with a nonzero last entry.
fn compact_grid(big_n: u32, max_entry: u32) -> Vec<CompactWeight> {
    let mut out = Vec::new();
    for w in dominant_weights((big_n / 2) as usize, max_entry) {
        let e: Vec<i64> = w.entries().iter().map(|&x| i64::from(x)).collect();
        let flip = big_n.is_multiple_of(2) && e.last().is_some_and(|&x| x != 0);
        out.push(CompactWeight::new(big_n, e.clone()).expect("dominant"));
        if flip {
            let mut f = e;
            let last = f.len() - 1;
            f[last] = -f[last];
            out.push(CompactWeight::new(big_n, f).expect("dominant"));
        }
    }
    out
}

/// Dimension of the `O(N)`-module with nonnegative label `ν`.
fn dim_o(big_n: u32, nu: &Weight) -> BigUint {
    let e: Vec<i64> = nu.entries().iter().map(|&x| i64::from(x)).collect();
    let d = weyl_dim_signed(big_n, &e);
    if big_n.is_multiple_of(2) && nu.last().unwrap_or(0) > 0 {
        d * 2u32
    } else {
        d
    }
}

fn dim_conservation(r: &mut Runner, b: GridBounds) {
    for big_n in 2..=b.max_n {
        for mu in compact_grid(big_n, b.max_entry) {
            r.case(|| {
                let mut bad = Vec::new();
                let parts = compact_branch_so(&mu).expect("valid weight");
                let sum: BigUint = parts.iter().map(CompactWeight::dim).sum();
                if sum != mu.dim() {
                    bad.push(format!(
                        "SO({big_n}) {mu}: branch sum {sum} vs dim {}",
                        mu.dim()
                    ));
                }
                // The finite-dimensional law for SO(N-1,1) ↓ SO(N-2,1) against
                // the same dimensions, with O(N-1)-labels on the right.
                if big_n >= 4 && mu.entries().last().is_none_or(|&x| x >= 0) {
                    let lam = Weight::from_signed(mu.entries()).expect("nonnegative");
                    let g = group(big_n - 1);
                    let comps = finite_dim_branch(g, &lam, Sign::Plus).expect("valid weight");
                    let sum: BigUint = comps.iter().map(|c| dim_o(big_n - 1, &c.weight)).sum();
                    if sum != mu.dim() {
                        bad.push(format!("{g} F{lam}: branch sum {sum} vs dim {}", mu.dim()));
                    }
                }
                bad
            });
        }
    }
}

fn roundtrip(r: &mut Runner, b: GridBounds) {
    for big_n in 2..=b.max_n {
        let g = group(big_n);
        for s in theta_grid(g, b.max_entry) {
            r.case(|| {
                let mut bad = Vec::new();
                let members = match classify(g, &s) {
                    Ok(m) => m,
                    Err(e) => return vec![format!("{g} {s}: classify failed: {e}")],
                };
                if members.len() != big_n as usize + 1 {
                    bad.push(format!("{g} {s}: {} members", members.len()));
                }
                for d in &members {
                    let back = enhanced_from_langlands(d).and_then(|e| {
                        let d2 = langlands_from_enhanced(&e)?;
                        let e2 = enhanced_from_langlands(&d2)?;
                        Ok((e, d2, e2))
                    });
                    match back {
                        Ok((e, d2, e2)) if d2 == *d && e2 == e && *e.weight() == s => {}
                        Ok((e, d2, _)) => bad.push(format!("{d} -> {e} -> {d2}")),
                        Err(err) => bad.push(format!("{d}: {err}")),
                    }
                }
                bad
            });
        }
    }
}

fn height_consistency(r: &mut Runner, b: GridBounds) {
    for big_n in 2..=b.max_n {
        let g = group(big_n);
        for s in theta_grid(g, b.max_entry) {
            r.case(|| {
                let members = classify(g, &s).expect("grid weight");
                members
                    .iter()
                    .filter_map(|d| {
                        let inserted = enhanced_from_langlands(d).map(|e| e.height());
                        let intervals = height_by_intervals(d);
                        (inserted != intervals).then(|| {
                            format!("{d}: insertion {inserted:?}, intervals {intervals:?}")
                        })
                    })
                    .collect()
            });
        }
    }
}

/// Arrows of the diagrams for the zero weight, written out per parity of `N`.
fn expected_trivial_arrows(big_n: u32) -> Vec<(u32, u32)> {
    let mut arrows = Vec::new();
    if big_n % 2 == 1 {
        // SO(2m+1,1) ↓ SO(2m,1).
        let m = (big_n - 1) / 2;
        for i in 0..=m {
            arrows.push((i, i));
            if i >= 1 {
                arrows.push((i, i - 1));
            }
        }
    } else {
        // SO(2m+2,1) ↓ SO(2m+1,1): the last column only has a diagonal arrow.
        let m = (big_n - 2) / 2;
        for i in 0..=m + 1 {
            if i <= m {
                arrows.push((i, i));
            }
            if i >= 1 {
                arrows.push((i, i - 1));
            }
        }
    }
    arrows.sort_unstable();
    arrows
}

fn trivial_rho_diagrams(r: &mut Runner, b: GridBounds) {
    for big_n in 3..=b.max_n {
        let g = group(big_n);
        for sig in [Sign::Plus, Sign::Minus] {
            r.case(|| {
                let s = Weight::zero(g.rank());
                let s_prime = Weight::zero(group(big_n - 1).rank());
                let mut got = match sb_diagram(g, &s, &s_prime, sig) {
                    Ok(d) => d.arrow_pairs(),
                    Err(e) => return vec![format!("{g} {sig}: {e}")],
                };
                got.sort_unstable();
                let want = expected_trivial_arrows(big_n);
                if got == want {
                    Vec::new()
                } else {
                    vec![format!("{g} {sig}: arrows {got:?}, expected {want:?}")]
                }
            });
        }
    }
}

fn chi_twist(r: &mut Runner, b: GridBounds) {
    for big_n in 3..=b.max_n {
        let g = group(big_n);
        let lower: Vec<EnhancedParam> = grid_members(group(big_n - 1), b.max_entry)
            .into_iter()
            .flatten()
            .collect();
        let lower_twisted: Vec<EnhancedParam> = lower.iter().map(twist_chi_minus).collect();
        for block in grid_members(g, b.max_entry) {
            r.case(|| {
                let mut bad = Vec::new();
                for big_pi in &block {
                    let twisted = twist_chi_minus(big_pi);
                    for (pi, pi_t) in lower.iter().zip(&lower_twisted) {
                        let m = multiplicity(big_pi, pi).expect("adjacent");
                        let mt = multiplicity(&twisted, pi_t).expect("adjacent");
                        if m != mt {
                            bad.push(format!("{big_pi} / {pi}: {m} but twisted {mt}"));
                        }
                    }
                }
                bad
            });
        }
    }
}

fn height0_vs_finite(r: &mut Runner, b: GridBounds) {
    for big_n in 3..=b.max_n {
        let g = group(big_n);
        let sub = group(big_n - 1);
        let lower = theta_grid(sub, b.max_entry);
        for s in theta_grid(g, b.max_entry) {
            r.case(|| {
                // F(s) of SO(N,1) is the SO(N+1)-module s; fold the compact
                // branching onto O(N)-labels and keep the self-dual ones.
                let parent = CompactWeight::new(
                    big_n + 1,
                    s.entries().iter().map(|&x| i64::from(x)).collect(),
                )
                .expect("dominant");
                let folded: Vec<Weight> = compact_branch_so(&parent)
                    .expect("valid")
                    .into_iter()
                    .map(|nu| {
                        let abs: Vec<i64> = nu.entries().iter().map(|x| x.abs()).collect();
                        Weight::from_signed(&abs).expect("folded labels are dominant")
                    })
                    .collect();
                let mut bad = Vec::new();
                for delta in [Sign::Plus, Sign::Minus] {
                    let big_pi = EnhancedParam::new(g, s.clone(), 0, delta.into()).expect("valid");
                    for nu in &lower {
                        for eps in [Sign::Plus, Sign::Minus] {
                            let pi =
                                EnhancedParam::new(sub, nu.clone(), 0, eps.into()).expect("valid");
                            let decided = multiplicity(&big_pi, &pi).expect("adjacent") == 1;
                            let classical = delta == eps && folded.contains(nu);
                            if decided != classical {
                                bad.push(format!("{big_pi} / {pi}: {decided} vs {classical}"));
                            }
                        }
                    }
                }
                bad
            });
        }
    }
}

/// `branch_enumerate(Π)` against the decision procedure over a list of
/// candidate targets. Exposed for tests.
pub fn stream_matches_decision(big_pi: &EnhancedParam, candidates: &[EnhancedParam]) -> bool {
    let stream = branch_enumerate(big_pi).expect("valid");
    let decided: Vec<&EnhancedParam> = candidates
        .iter()
        .filter(|pi| multiplicity(big_pi, pi).expect("adjacent") == 1)
        .collect();
    decided.iter().all(|pi| stream.contains(pi))
        && stream
            .iter()
            .all(|pi| multiplicity(big_pi, pi).expect("adjacent") == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(n: u32, e: &[i64]) -> CompactWeight {
        CompactWeight::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn compact_branch_examples() {
        assert_eq!(
            compact_branch_so(&cw(5, &[1, 0])).unwrap(),
            vec![cw(4, &[1, 0]), cw(4, &[0, 0])]
        );
        assert_eq!(
            compact_branch_so(&cw(4, &[1, 1])).unwrap(),
            vec![cw(3, &[1])]
        );
        assert_eq!(
            compact_branch_so(&cw(4, &[1, -1])).unwrap(),
            vec![cw(3, &[1])]
        );
        assert_eq!(
            compact_branch_so(&cw(7, &[0, 0, 0])).unwrap(),
            vec![cw(6, &[0, 0, 0])]
        );
        assert_eq!(
            compact_branch_so(&cw(3, &[1])).unwrap(),
            vec![cw(2, &[1]), cw(2, &[0]), cw(2, &[-1])]
        );
        assert_eq!(compact_branch_so(&cw(2, &[3])).unwrap(), vec![cw(1, &[])]);
    }

    #[test]
    fn compact_weight_validation() {
        assert!(CompactWeight::new(5, vec![1, -1]).is_err());
        assert!(CompactWeight::new(4, vec![1, -1]).is_ok());
        assert!(CompactWeight::new(4, vec![1, -2]).is_err());
        assert!(CompactWeight::new(4, vec![1]).is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert_eq!("bogus".parse::<Suite>(), Err(Error::UnknownSuite));
    }

    #[test]
    fn expected_diagrams_have_the_right_size() {
        // SO(2m+1,1): 2m+1 arrows; SO(2m+2,1): 2m+2 arrows.
        for big_n in 3..=11 {
            assert_eq!(expected_trivial_arrows(big_n).len() as u32, big_n);
        }
    }

    #[test]
    fn small_grids_pass_and_shards_merge() {
        let small = GridBounds {
            max_n: 6,
            max_entry: 2,
        };
        for suite in Suite::ALL {
            let whole = run_suite(suite, small);
            assert!(whole.passed(), "{suite}: {:?}", whole.failures.first());
            assert!(whole.cases_run > 0);
            let merged = (0..3)
                .map(|k| run_suite_shard(suite, small, k, 3))
                .reduce(SuiteOutcome::merge)
                .unwrap();
            assert_eq!(merged, whole);
        }
    }
}
