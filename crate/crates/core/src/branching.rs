//! Restriction from `G = SO(N,1)` to `G' = SO(N-1,1)`.
//!
//! For `Π` and `π` in the classified blocks, the space of symmetry breaking
//! operators `Π|_{G'} → π` has dimension 0 or 1, and it is 1 exactly when
//! the signatures agree, `h(π) ∈ {h(Π), h(Π) - 1}` and the θ-weights
//! interlace. [`multiplicity`] decides this; everything else here is a view
//! built on it.

use alloc::vec::Vec;

use crate::weights::enumerate_interlacing;
use crate::{
    interlaces, standard_sequence, EnhancedParam, Error, GroupTag, RepDescriptor, RepVariant,
    Result, Sign, Signature, Weight,
};

/// One summand of a restricted finite-dimensional representation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteDimComponent {
    pub weight: Weight,
    pub sign: Sign,
    /// Whether the summand is self-dual for the subgroup. Summands outside
    /// the classified set are still part of the decomposition.
    pub in_a: bool,
}

/// `F^{SO(N,1)}(λ)_δ |_{SO(N-1,1)}` as a multiplicity-free list, `ν`
/// lexicographically decreasing.
pub fn finite_dim_branch(
    group: GroupTag,
    lam: &Weight,
    delta: Sign,
) -> Result<Vec<FiniteDimComponent>> {
    let sub = group
        .subgroup()
        .ok_or(Error::InvalidGroup(group.big_n() - 1))?;
    if lam.rank() != group.rank() {
        return Err(Error::WrongRank {
            expected: group.rank(),
            found: lam.rank(),
        });
    }
    Ok(enumerate_interlacing(lam, sub.rank())?
        .map(|nu| {
            let in_a = !sub.is_type_d() || nu.last() == Some(0);
            FiniteDimComponent {
                weight: nu,
                sign: delta,
                in_a,
            }
        })
        .collect())
}

/// `dim Hom_{G'}(Π|_{G'}, π)`, which is always 0 or 1.
pub fn multiplicity(big_pi: &EnhancedParam, pi: &EnhancedParam) -> Result<u32> {
    big_pi.group().expect_subgroup(pi.group())?;
    let same_sign = big_pi.signature().matches(pi.signature());
    let h = big_pi.height();
    let height_ok = pi.height() == h || pi.height() + 1 == h;
    let ok = same_sign && height_ok && interlaces(big_pi.weight(), pi.weight())?;
    Ok(u32::from(ok))
}

/// Every `π` of `SO(N-1,1)` with `multiplicity(Π, π) = 1`.
///
/// Order: `ν` lexicographically decreasing, then height ascending, then `+`
/// before `-`.
pub fn branch_enumerate(big_pi: &EnhancedParam) -> Result<Vec<EnhancedParam>> {
    let group = big_pi.group();
    let sub = group
        .subgroup()
        .ok_or(Error::InvalidGroup(group.big_n() - 1))?;
    let h = big_pi.height();
    let heights: Vec<u32> = [h.checked_sub(1), Some(h)]
        .into_iter()
        .flatten()
        .filter(|&j| j <= sub.top_height())
        .collect();
    let signs: &[Signature] = match big_pi.signature() {
        Signature::Both => &[Signature::Plus, Signature::Minus],
        Signature::Plus => &[Signature::Plus],
        Signature::Minus => &[Signature::Minus],
    };

    let mut out = Vec::new();
    for nu in enumerate_interlacing(big_pi.weight(), sub.rank())? {
        if sub.is_type_d() && nu.last() != Some(0) {
            continue;
        }
        for &j in &heights {
            if sub.has_discrete_series() && j == sub.top_height() {
                out.push(EnhancedParam::new(sub, nu.clone(), j, Signature::Both)?);
            } else {
                for &sig in signs {
                    out.push(EnhancedParam::new(sub, nu.clone(), j, sig)?);
                }
            }
        }
    }
    Ok(out)
}

/// A nonzero symmetry breaking operator between members of two standard
/// sequences.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub from_height: u32,
    pub to_height: u32,
    pub from: EnhancedParam,
    pub to: EnhancedParam,
}

/// Standard sequences of `F` and `F'` together with the arrows between them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    pub upper: Vec<EnhancedParam>,
    pub lower: Vec<EnhancedParam>,
    pub arrows: Vec<Arrow>,
}

impl Diagram {
    /// `(from_height, to_height)` pairs in order.
    pub fn arrow_pairs(&self) -> Vec<(u32, u32)> {
        self.arrows
            .iter()
            .map(|a| (a.from_height, a.to_height))
            .collect()
    }
}

/// Symmetry breaking diagram for the blocks of `s` (on `group`) and `s'`
/// (on its subgroup), with both standard sequences starting at signature
/// `sig`.
pub fn sb_diagram(group: GroupTag, s: &Weight, s_prime: &Weight, sig: Sign) -> Result<Diagram> {
    let sub = group
        .subgroup()
        .ok_or(Error::InvalidGroup(group.big_n() - 1))?;
    s.check_theta_weight(group)?;
    s_prime.check_theta_weight(sub)?;
    if !interlaces(s, s_prime)? {
        return Err(Error::NotInterlacing);
    }
    let upper = standard_sequence(group, s, sig)?;
    let lower = standard_sequence(sub, s_prime, sig)?;
    let mut arrows = Vec::new();
    for from in &upper {
        for to in &lower {
            if multiplicity(from, to)? == 1 {
                arrows.push(Arrow {
                    from_height: from.height(),
                    to_height: to.height(),
                    from: from.clone(),
                    to: to.clone(),
                });
            }
        }
    }
    Ok(Diagram {
        upper,
        lower,
        arrows,
    })
}

/// Tempered Gross–Prasad check for a unitary principal series `Π` of
/// `SO(2m+1,1)` and a discrete series `π` of `SO(2m,1)`.
///
/// The θ-weights are read off directly: `Π` has `(σ₁-1, …, σ_m-1, 0)` and
/// `π` has `(σ'₁-1, …, σ'_{m-1}-1, λ-m)`. The answer is whether
/// `μ₁ ≥ ν₁ ≥ ⋯ ≥ μ_m ≥ ν_m ≥ 0`. The center condition is the caller's.
pub fn gp_tempered_check(big_pi: &RepDescriptor, pi: &RepDescriptor) -> Result<bool> {
    let (
        RepVariant::TemperedPS { sigma, .. },
        RepVariant::DiscreteSeries {
            sigma: sigma_p,
            lambda,
        },
    ) = (big_pi.variant(), pi.variant())
    else {
        return Err(Error::NotTempered);
    };
    big_pi.group().expect_subgroup(pi.group())?;
    let m = pi.group().top_height() as i64;
    let mu: Vec<i64> = sigma.entries().iter().map(|&e| i64::from(e) - 1).collect();
    let mut nu: Vec<i64> = sigma_p
        .entries()
        .iter()
        .map(|&e| i64::from(e) - 1)
        .collect();
    nu.push(lambda - m);
    debug_assert_eq!(mu.len(), nu.len());
    Ok(mu
        .iter()
        .zip(&nu)
        .enumerate()
        .all(|(k, (&a, &b))| a >= b && b >= mu.get(k + 1).copied().unwrap_or(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{classify, enhanced_from_langlands, twist_chi_minus};
    use alloc::vec;
    use Signature::{Both, Minus, Plus};

    fn g(n: u32) -> GroupTag {
        GroupTag::new(n).unwrap()
    }

    fn w(e: &[u32]) -> Weight {
        Weight::new(e.to_vec()).unwrap()
    }

    fn ep(n: u32, e: &[u32], h: u32, sig: Signature) -> EnhancedParam {
        EnhancedParam::new(g(n), w(e), h, sig).unwrap()
    }

    #[test]
    fn finite_dim_branch_examples() {
        let got = finite_dim_branch(g(4), &w(&[1, 0]), Sign::Plus).unwrap();
        let weights: Vec<_> = got.iter().map(|c| (c.weight.clone(), c.sign)).collect();
        assert_eq!(
            weights,
            vec![(w(&[1, 0]), Sign::Plus), (w(&[0, 0]), Sign::Plus)]
        );
        assert!(got.iter().all(|c| c.in_a));

        // ν₁ = 1 is forced; (1,1) is listed but is not self-dual for SO(3,1).
        let got = finite_dim_branch(g(4), &w(&[1, 1]), Sign::Plus).unwrap();
        let flagged: Vec<_> = got.iter().map(|c| (c.weight.clone(), c.in_a)).collect();
        assert_eq!(flagged, vec![(w(&[1, 1]), false), (w(&[1, 0]), true)]);

        for big_n in 3..=9 {
            let zero = Weight::zero(g(big_n).rank());
            let got = finite_dim_branch(g(big_n), &zero, Sign::Minus).unwrap();
            assert_eq!(got.len(), 1);
            assert!(got[0].weight.is_zero() && got[0].sign == Sign::Minus);
        }
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(
            multiplicity(&ep(3, &[0, 0], 1, Plus), &ep(2, &[0], 0, Plus)).unwrap(),
            1
        );
        let chi = EnhancedParam::character(g(5), Sign::Plus);
        for h in 1..=2 {
            for sig in [Plus, Minus, Both] {
                if let Ok(pi) = EnhancedParam::new(g(4), w(&[0, 0]), h, sig) {
                    assert_eq!(multiplicity(&chi, &pi).unwrap(), 0);
                }
            }
        }
        assert_eq!(
            multiplicity(&ep(5, &[1, 1, 0], 1, Minus), &ep(4, &[2, 0], 1, Minus)).unwrap(),
            0
        );
        assert!(matches!(
            multiplicity(&ep(5, &[1, 1, 0], 1, Minus), &ep(3, &[1, 0], 1, Minus)),
            Err(Error::GroupMismatch { .. })
        ));
    }

    #[test]
    fn branch_enumerate_examples() {
        assert_eq!(
            branch_enumerate(&ep(3, &[0, 0], 1, Plus)).unwrap(),
            vec![ep(2, &[0], 0, Plus), ep(2, &[0], 1, Both)]
        );
        for big_n in 3..=10 {
            let chi = EnhancedParam::character(g(big_n), Sign::Plus);
            let sub = g(big_n - 1);
            assert_eq!(
                branch_enumerate(&chi).unwrap(),
                vec![EnhancedParam::character(sub, Sign::Plus)]
            );
        }
        assert_eq!(
            branch_enumerate(&ep(5, &[1, 1, 0], 1, Minus)).unwrap(),
            vec![
                ep(4, &[1, 1], 0, Minus),
                ep(4, &[1, 1], 1, Minus),
                ep(4, &[1, 0], 0, Minus),
                ep(4, &[1, 0], 1, Minus),
            ]
        );
    }

    #[test]
    fn discrete_series_source_branches_to_both_signs() {
        let got = branch_enumerate(&ep(4, &[0, 0], 2, Both)).unwrap();
        assert_eq!(got, vec![ep(3, &[0, 0], 1, Plus), ep(3, &[0, 0], 1, Minus)]);
    }

    #[test]
    fn trivial_rho_diagrams() {
        let d = sb_diagram(g(3), &w(&[0, 0]), &w(&[0]), Sign::Plus).unwrap();
        assert_eq!(d.arrow_pairs(), vec![(0, 0), (1, 0), (1, 1)]);
        let d = sb_diagram(g(4), &w(&[0, 0]), &w(&[0, 0]), Sign::Plus).unwrap();
        assert_eq!(d.arrow_pairs(), vec![(0, 0), (1, 0), (1, 1), (2, 1)]);
        let d = sb_diagram(g(3), &w(&[1, 0]), &w(&[1]), Sign::Plus).unwrap();
        assert_eq!(d.arrow_pairs(), vec![(0, 0), (1, 1)]);
        assert_eq!(
            sb_diagram(g(3), &w(&[1, 0]), &w(&[2]), Sign::Plus),
            Err(Error::NotInterlacing)
        );
    }

    #[test]
    fn gp_examples() {
        let big_pi = RepDescriptor::tempered_ps(g(3), w(&[2]), Sign::Plus).unwrap();
        assert_eq!(
            enhanced_from_langlands(&big_pi).unwrap(),
            ep(3, &[1, 0], 1, Plus)
        );
        // DS of SO(2,1) with θ-weight (1) has λ = 2; θ-weight (3) has λ = 4.
        let ds1 = RepDescriptor::discrete_series(g(2), w(&[]), 2).unwrap();
        let ds3 = RepDescriptor::discrete_series(g(2), w(&[]), 4).unwrap();
        assert_eq!(enhanced_from_langlands(&ds1).unwrap(), ep(2, &[1], 1, Both));
        assert!(gp_tempered_check(&big_pi, &ds1).unwrap());
        assert!(!gp_tempered_check(&big_pi, &ds3).unwrap());

        let t0 = RepDescriptor::tempered_ps(g(3), w(&[1]), Sign::Plus).unwrap();
        let d0 = RepDescriptor::discrete_series(g(2), w(&[]), 1).unwrap();
        assert_eq!(
            enhanced_from_langlands(&t0).unwrap(),
            ep(3, &[0, 0], 1, Plus)
        );
        assert_eq!(enhanced_from_langlands(&d0).unwrap(), ep(2, &[0], 1, Both));
        assert!(gp_tempered_check(&t0, &d0).unwrap());
        assert_eq!(gp_tempered_check(&d0, &t0), Err(Error::NotTempered));
    }

    #[test]
    fn gp_agrees_with_multiplicity_on_small_blocks() {
        for m in 1..=3u32 {
            let big = g(2 * m + 1);
            let small = g(2 * m);
            let tempered = |group: GroupTag, rank: usize, tail_zero: bool| {
                let mut out = Vec::new();
                for s in crate::weights::dominant_weights(rank, 3) {
                    if tail_zero && s.last() != Some(0) {
                        continue;
                    }
                    for d in classify(group, &s).unwrap() {
                        if d.is_tempered() {
                            out.push(d);
                        }
                    }
                }
                out
            };
            let uppers = tempered(big, big.rank(), true);
            let lowers = tempered(small, small.rank(), false);
            for a in &uppers {
                for b in &lowers {
                    let generic = multiplicity(
                        &enhanced_from_langlands(a).unwrap(),
                        &enhanced_from_langlands(b).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(gp_tempered_check(a, b).unwrap(), generic == 1, "{a} / {b}");
                }
            }
        }
    }

    #[test]
    fn twist_invariance_small() {
        for s in crate::weights::dominant_weights(3, 2) {
            if s.last() != Some(0) {
                continue;
            }
            for d in classify(g(5), &s).unwrap() {
                let e = enhanced_from_langlands(&d).unwrap();
                for pi in branch_enumerate(&e).unwrap() {
                    assert_eq!(
                        multiplicity(&twist_chi_minus(&e), &twist_chi_minus(&pi)).unwrap(),
                        1
                    );
                }
            }
        }
    }
}
