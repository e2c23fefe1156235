//! Representations in the block of a self-dual finite-dimensional
//! representation: Langlands descriptors, enhanced θ-stable parameters,
//! height, signature and the Hasse/standard sequences.
//!
//! A block for `G = SO(N,1)` is determined by a θ-weight `s`. Its members are
//! the representations whose infinitesimal character is `s + ρ`; there are
//! exactly `N + 1 = n + 2` of them. The enhanced θ-stable parameter
//! `(s, h, ε)` records the block, the height `h` (position of the
//! `|λ - n/2|` entry inside `s + ρ`) and the signature `ε`.
//!
//! Height 0 is always represented by [`RepVariant::FiniteDim`]; the Langlands
//! triple of a finite-dimensional representation is available through
//! [`RepDescriptor::langlands_triple`].

use alloc::vec::Vec;
use core::fmt;

use crate::weights::{
    lambda_entry, principal_series_doubled, rho_shift, shifted_theta, sigma_shift,
};
use crate::{Error, GroupTag, Result, Sign, Signature, Weight};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepVariant {
    /// `F^G(s)` with its signature.
    FiniteDim { s: Weight, sig: Sign },
    /// Langlands subrepresentation `Π_δ(σ, λ)` of `I_δ(σ, λ)`, `λ < n/2`.
    Nontempered {
        sigma: Weight,
        delta: Sign,
        lambda: i64,
    },
    /// Unitary principal series `I_δ(σ, n/2)` for `N` odd, stored with `σ_m > 0`.
    TemperedPS { sigma: Weight, delta: Sign },
    /// Discrete series `Π_+(σ, λ)` for `N` even.
    DiscreteSeries { sigma: Weight, lambda: i64 },
}

/// A validated representation descriptor. Construction rejects data outside
/// the classified set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepDescriptor {
    group: GroupTag,
    variant: RepVariant,
}

impl RepDescriptor {
    pub fn new(group: GroupTag, variant: RepVariant) -> Result<Self> {
        validate(group, &variant)?;
        Ok(RepDescriptor { group, variant })
    }

    pub fn finite_dim(group: GroupTag, s: Weight, sig: Sign) -> Result<Self> {
        Self::new(group, RepVariant::FiniteDim { s, sig })
    }

    pub fn nontempered(group: GroupTag, sigma: Weight, delta: Sign, lambda: i64) -> Result<Self> {
        Self::new(
            group,
            RepVariant::Nontempered {
                sigma,
                delta,
                lambda,
            },
        )
    }

    pub fn tempered_ps(group: GroupTag, sigma: Weight, delta: Sign) -> Result<Self> {
        Self::new(group, RepVariant::TemperedPS { sigma, delta })
    }

    pub fn discrete_series(group: GroupTag, sigma: Weight, lambda: i64) -> Result<Self> {
        Self::new(group, RepVariant::DiscreteSeries { sigma, lambda })
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn variant(&self) -> &RepVariant {
        &self.variant
    }

    pub fn is_tempered(&self) -> bool {
        matches!(
            self.variant,
            RepVariant::TemperedPS { .. } | RepVariant::DiscreteSeries { .. }
        )
    }

    /// `(σ, δ, λ)` with `I_δ(σ, λ)` the principal series containing the
    /// representation; `δ` is `+` for discrete series.
    pub fn langlands_triple(&self) -> (Weight, Sign, i64) {
        let group = self.group;
        match &self.variant {
            RepVariant::FiniteDim { s, sig } => {
                // Removing the top entry of s + ρ leaves σ; λ = n/2 - (s₁ + n/2).
                let a = shifted_theta(group, s);
                let sigma = sigma_from_rest(group, &a[1..]);
                let lambda = -i64::from(s.entries()[0]);
                (sigma, *sig * Sign::parity(lambda), lambda)
            }
            RepVariant::Nontempered {
                sigma,
                delta,
                lambda,
            } => (sigma.clone(), *delta, *lambda),
            RepVariant::TemperedPS { sigma, delta } => {
                (sigma.clone(), *delta, i64::from(group.n() / 2))
            }
            RepVariant::DiscreteSeries { sigma, lambda } => (sigma.clone(), Sign::Plus, *lambda),
        }
    }
}

impl fmt::Display for RepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.variant {
            RepVariant::FiniteDim { s, sig } => write!(f, "F^{}{s}_{sig}", self.group),
            RepVariant::Nontempered {
                sigma,
                delta,
                lambda,
            } => {
                write!(f, "Π_{delta}(σ={sigma}, λ={lambda}) of {}", self.group)
            }
            RepVariant::TemperedPS { sigma, delta } => {
                write!(
                    f,
                    "I_{delta}(σ={sigma}, λ={}) of {}",
                    self.group.n() / 2,
                    self.group
                )
            }
            RepVariant::DiscreteSeries { sigma, lambda } => {
                write!(f, "DS(σ={sigma}, λ={lambda}) of {}", self.group)
            }
        }
    }
}

fn check_sigma_rank(group: GroupTag, sigma: &Weight) -> Result<()> {
    if sigma.rank() != group.sigma_rank() {
        return Err(Error::WrongRank {
            expected: group.sigma_rank(),
            found: sigma.rank(),
        });
    }
    Ok(())
}

fn validate(group: GroupTag, variant: &RepVariant) -> Result<()> {
    let n = i64::from(group.n());
    match variant {
        RepVariant::FiniteDim { s, .. } => s.check_theta_weight(group),
        RepVariant::Nontempered { sigma, lambda, .. } => {
            check_sigma_rank(group, sigma)?;
            if group.is_type_d() && sigma.last() != Some(0) {
                return Err(Error::InvalidDescriptor("nontempered σ must be self-dual"));
            }
            if 2 * lambda >= n {
                return Err(Error::InvalidDescriptor("nontempered λ must lie below n/2"));
            }
            // λ ∉ {k - σ_k}: the reducibility walls.
            let on_wall = sigma
                .entries()
                .iter()
                .enumerate()
                .any(|(k, &s)| *lambda == k as i64 + 1 - i64::from(s));
            if on_wall {
                return Err(Error::SingularInfChar);
            }
            Ok(())
        }
        RepVariant::TemperedPS { sigma, .. } => {
            if !group.is_type_d() {
                return Err(Error::InvalidDescriptor(
                    "tempered principal series need N odd",
                ));
            }
            check_sigma_rank(group, sigma)?;
            if sigma.last().unwrap_or(0) == 0 {
                return Err(Error::InvalidDescriptor("tempered σ must have σ_m > 0"));
            }
            Ok(())
        }
        RepVariant::DiscreteSeries { sigma, lambda } => {
            if !group.has_discrete_series() {
                return Err(Error::InvalidDescriptor("discrete series need N even"));
            }
            check_sigma_rank(group, sigma)?;
            // m ≤ λ ≤ m - 1 + σ_{m-1}; for SO(2,1) there is no upper bound.
            let m = i64::from(group.top_height());
            if *lambda < m {
                return Err(Error::InvalidDescriptor("discrete series λ below m"));
            }
            if let Some(last) = sigma.last() {
                if last == 0 || *lambda > m - 1 + i64::from(last) {
                    return Err(Error::InvalidDescriptor(
                        "discrete series λ outside its range",
                    ));
                }
            }
            Ok(())
        }
    }
}

/// `σ_k = rest_k - (n/2 - k)` on doubled entries.
fn sigma_from_rest(group: GroupTag, rest: &[i64]) -> Weight {
    let entries = rest
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let d = a - sigma_shift(group, k + 1);
            debug_assert!(d >= 0 && d % 2 == 0);
            (d / 2) as u32
        })
        .collect();
    Weight::new(entries).expect("strictly decreasing entries give a dominant σ")
}

/// `s_j = a_j - (n/2 + 1 - j)` on doubled entries.
fn theta_from_shifted(group: GroupTag, a: &[i64]) -> Weight {
    let entries = a
        .iter()
        .enumerate()
        .map(|(j, &v)| {
            let d = v - rho_shift(group, j + 1);
            debug_assert!(d >= 0 && d % 2 == 0);
            (d / 2) as u32
        })
        .collect();
    Weight::new(entries).expect("strictly decreasing entries give a dominant weight")
}

/// The enhanced θ-stable parameter `(s, height, signature)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnhancedParam {
    group: GroupTag,
    weight: Weight,
    height: u32,
    signature: Signature,
}

impl EnhancedParam {
    pub fn new(group: GroupTag, weight: Weight, height: u32, signature: Signature) -> Result<Self> {
        weight.check_theta_weight(group).map_err(|e| match e {
            Error::NotSelfDual => Error::InvalidEnhanced("θ-weight must end in 0 for N odd"),
            other => other,
        })?;
        if height > group.top_height() {
            return Err(Error::InvalidEnhanced("height exceeds ⌊N/2⌋"));
        }
        let discrete = group.has_discrete_series() && height == group.top_height();
        if discrete != (signature == Signature::Both) {
            return Err(Error::InvalidEnhanced(
                "signature ± exactly on discrete series",
            ));
        }
        Ok(EnhancedParam {
            group,
            weight,
            height,
            signature,
        })
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn is_tempered(&self) -> bool {
        self.height == self.group.top_height()
    }

    /// The one-dimensional representation `χ_ψ`.
    pub fn character(group: GroupTag, psi: Sign) -> Self {
        EnhancedParam {
            group,
            weight: Weight::zero(group.rank()),
            height: 0,
            signature: psi.into(),
        }
    }
}

impl fmt::Display for EnhancedParam {
    /// θ-stable notation `(s₁,…,s_h || s_{h+1},…)_ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        let h = self.height as usize;
        for (k, e) in self.weight.entries().iter().enumerate() {
            if k == h {
                f.write_str(if k == 0 { "|| " } else { " || " })?;
            } else if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        if h == self.weight.rank() {
            f.write_str(" ||")?;
        }
        write!(f, ")_{}", self.signature)
    }
}

/// Sorted doubled infinitesimal character and the index of the λ-entry.
fn insertion(group: GroupTag, sigma: &Weight, lambda: i64) -> Result<(Vec<i64>, usize)> {
    let mut a = principal_series_doubled(group, sigma, lambda);
    let target = lambda_entry(group, lambda);
    a.sort_unstable_by(|x, y| y.cmp(x));
    if a.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::SingularInfChar);
    }
    let pos = a
        .iter()
        .position(|&v| v == target)
        .expect("λ-entry present");
    Ok((a, pos))
}

/// Langlands data to `(θ-weight, height, signature)`.
pub fn enhanced_from_langlands(d: &RepDescriptor) -> Result<EnhancedParam> {
    validate(d.group, &d.variant)?;
    let group = d.group;
    match &d.variant {
        RepVariant::FiniteDim { s, sig } => EnhancedParam::new(group, s.clone(), 0, (*sig).into()),
        RepVariant::Nontempered {
            sigma,
            delta,
            lambda,
        } => {
            let (a, pos) = insertion(group, sigma, *lambda)?;
            let sig = *delta * Sign::parity(pos as i64 - lambda);
            EnhancedParam::new(group, theta_from_shifted(group, &a), pos as u32, sig.into())
        }
        RepVariant::TemperedPS { sigma, delta } => {
            let lambda = i64::from(group.n() / 2);
            let (a, pos) = insertion(group, sigma, lambda)?;
            assert_eq!(pos as u32, group.top_height(), "tempered λ-entry sits last");
            EnhancedParam::new(
                group,
                theta_from_shifted(group, &a),
                pos as u32,
                (*delta).into(),
            )
        }
        RepVariant::DiscreteSeries { sigma, lambda } => {
            let (a, pos) = insertion(group, sigma, *lambda)?;
            assert_eq!(pos + 1, a.len(), "discrete series λ-entry sits last");
            EnhancedParam::new(
                group,
                theta_from_shifted(group, &a),
                group.top_height(),
                Signature::Both,
            )
        }
    }
}

/// Inverse of [`enhanced_from_langlands`]; height 0 yields `FiniteDim`.
pub fn langlands_from_enhanced(e: &EnhancedParam) -> Result<RepDescriptor> {
    let e = EnhancedParam::new(e.group, e.weight.clone(), e.height, e.signature)?;
    let group = e.group;
    let h = e.height as usize;
    let n = i64::from(group.n());
    let a = shifted_theta(group, &e.weight);
    let variant = if h == 0 {
        let sig = e
            .signature
            .definite()
            .expect("height 0 is never discrete series");
        RepVariant::FiniteDim {
            s: e.weight.clone(),
            sig,
        }
    } else if group.has_discrete_series() && h == group.top_height() as usize {
        // λ - n/2 is the smallest entry of s + ρ.
        let last = a[a.len() - 1];
        RepVariant::DiscreteSeries {
            sigma: sigma_from_rest(group, &a[..a.len() - 1]),
            lambda: (last + n) / 2,
        }
    } else {
        let mut rest = a.clone();
        let removed = rest.remove(h);
        let sigma = sigma_from_rest(group, &rest);
        let sig = e.signature.definite().expect("checked above");
        if group.is_type_d() && h == group.top_height() as usize {
            debug_assert_eq!(removed, 0);
            RepVariant::TemperedPS { sigma, delta: sig }
        } else {
            let lambda = (n - removed) / 2;
            let delta = sig * Sign::parity(h as i64 - lambda);
            RepVariant::Nontempered {
                sigma,
                delta,
                lambda,
            }
        }
    };
    RepDescriptor::new(group, variant).map_err(|_| Error::InvalidEnhanced("no representation"))
}

/// Height by the interval inequalities `i - σ_i < λ < i + 1 - σ_{i+1}`,
/// with `σ_0 = +∞` and no upper bound past the last `σ` entry.
pub fn height_by_intervals(d: &RepDescriptor) -> Result<u32> {
    validate(d.group, &d.variant)?;
    if d.is_tempered() {
        return Ok(d.group.top_height());
    }
    let (sigma, _, lambda) = d.langlands_triple();
    let s: Vec<i64> = sigma.entries().iter().map(|&e| i64::from(e)).collect();
    let found = (0..=s.len()).find(|&i| {
        let above = i == 0 || (i as i64 - s[i - 1]) < lambda;
        let below = i == s.len() || lambda < i as i64 + 1 - s[i];
        above && below
    });
    found.map(|i| i as u32).ok_or(Error::SingularInfChar)
}

/// Height of a representation, computed by sorted insertion and by the
/// interval inequalities; the two always agree.
pub fn height(d: &RepDescriptor) -> Result<u32> {
    let by_insertion = enhanced_from_langlands(d)?.height;
    let by_intervals = height_by_intervals(d)?;
    assert_eq!(by_insertion, by_intervals, "height methods disagree on {d}");
    Ok(by_insertion)
}

pub fn signature(d: &RepDescriptor) -> Result<Signature> {
    Ok(enhanced_from_langlands(d)?.signature)
}

/// `Π ↦ Π ⊗ χ₋`.
pub fn twist_chi_minus(e: &EnhancedParam) -> EnhancedParam {
    EnhancedParam {
        signature: e.signature.twist(),
        ..e.clone()
    }
}

/// All `n + 2` members of the block of `s`, ordered by height then signature.
///
/// Members are found by matching infinitesimal characters: each entry of
/// `s + ρ` is tried as the `|λ - n/2|` entry, the rest determines `σ`, and
/// the resulting Langlands data is kept when it passes validation.
pub fn classify(group: GroupTag, s: &Weight) -> Result<Vec<RepDescriptor>> {
    s.check_theta_weight(group)?;
    let n = i64::from(group.n());
    let a = shifted_theta(group, s);
    let mut out = Vec::with_capacity(group.big_n() as usize + 1);
    for (p, &entry) in a.iter().enumerate() {
        let mut rest = a.clone();
        rest.remove(p);
        let sigma = sigma_from_rest(group, &rest);

        if entry > 0 {
            let lambda = (n - entry) / 2;
            for delta in [Sign::Plus, Sign::Minus] {
                if let Ok(d) = RepDescriptor::nontempered(group, sigma.clone(), delta, lambda) {
                    out.push(if p == 0 {
                        let sig = signature(&d)?.definite().expect("finite-dimensional");
                        RepDescriptor::finite_dim(group, s.clone(), sig)?
                    } else {
                        d
                    });
                }
            }
        }
        if group.is_type_d() && entry == 0 {
            for delta in [Sign::Plus, Sign::Minus] {
                if let Ok(d) = RepDescriptor::tempered_ps(group, sigma.clone(), delta) {
                    out.push(d);
                }
            }
        }
        if group.has_discrete_series() {
            if let Ok(d) = RepDescriptor::discrete_series(group, sigma, (n + entry) / 2) {
                out.push(d);
            }
        }
    }
    let mut keyed = out
        .into_iter()
        .map(|d| enhanced_from_langlands(&d).map(|e| ((e.height, e.signature), d)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by_key(|x| x.0);
    debug_assert_eq!(keyed.len(), group.big_n() as usize + 1);
    Ok(keyed.into_iter().map(|(_, d)| d).collect())
}

/// Hasse sequence `U_0 ≃ F, …, U_top`, with
/// `ε_i = sig0 · (-1)^{i - s_{i+1} + s_1}` so that `U_0` has signature `sig0`.
pub fn hasse_sequence(group: GroupTag, s: &Weight, sig0: Sign) -> Result<Vec<EnhancedParam>> {
    s.check_theta_weight(group)?;
    let e = s.entries();
    (0..=group.top_height())
        .map(|i| {
            let sig = if group.has_discrete_series() && i == group.top_height() {
                Signature::Both
            } else {
                let exp = i64::from(i) - i64::from(e[i as usize]) + i64::from(e[0]);
                (sig0 * Sign::parity(exp)).into()
            };
            EnhancedParam::new(group, s.clone(), i, sig)
        })
        .collect()
}

/// Standard sequence `Π_i = U_i ⊗ χ₋^i`.
pub fn standard_sequence(group: GroupTag, s: &Weight, sig0: Sign) -> Result<Vec<EnhancedParam>> {
    Ok(hasse_sequence(group, s, sig0)?
        .into_iter()
        .enumerate()
        .map(|(i, u)| if i % 2 == 1 { twist_chi_minus(&u) } else { u })
        .collect())
}

/// `Π_{ℓ,δ}` with trivial infinitesimal character, `0 ≤ ℓ ≤ N`.
///
/// For `ℓ ≤ ⌊N/2⌋` this is `((0,…,0), ℓ, δ)` (signature `±` on discrete
/// series). Larger indices use `Π_{ℓ,δ} ≃ Π_{N-ℓ,-δ}`, which holds on
/// `SO(N,1)` because the determinant character of `O(N,1)` restricts trivially.
pub fn trivial_rho_member(group: GroupTag, ell: u32, delta: Sign) -> Result<EnhancedParam> {
    if ell > group.big_n() {
        return Err(Error::OutOfRange("index ℓ"));
    }
    let (height, delta) = if ell <= group.top_height() {
        (ell, delta)
    } else {
        (group.big_n() - ell, -delta)
    };
    let sig = if group.has_discrete_series() && height == group.top_height() {
        Signature::Both
    } else {
        delta.into()
    };
    EnhancedParam::new(group, Weight::zero(group.rank()), height, sig)
}
