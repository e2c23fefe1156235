//! Nonvanishing of the bilinear forms that a symmetry breaking operator
//! `T: Π → π` induces on `(g,K)`-cohomology. Only nonvanishing is decided;
//! no cohomology spaces are computed.

use crate::{
    interlaces, multiplicity, trivial_rho_member, EnhancedParam, Error, GroupTag, Result, Sign,
    Weight,
};

/// Highest weight of the finite-dimensional `V` whose infinitesimal
/// character matches that of `e`; a necessary condition for
/// `H^*(g,K; Π ⊗ V) ≠ 0`. The character twist of `V` is not determined.
pub fn coefficient_weight(e: &EnhancedParam) -> Weight {
    e.weight().clone()
}

/// Whether `B_T` on `H^j(Π_{i,δ}) × H^{n-j}(partner)` is nonzero, for the
/// pair `(SO(n+1,1), SO(n,1))` and trivial infinitesimal character: true iff
/// `j = i` and `δ = (-1)^i`.
pub fn bilinear_nonzero_trivial_rho(n: u32, i: u32, delta: Sign, j: u32) -> Result<bool> {
    if 2 * i > n {
        return Err(Error::OutOfRange("height i must satisfy 2i ≤ n"));
    }
    if j > n {
        return Err(Error::OutOfRange("degree j must satisfy j ≤ n"));
    }
    Ok(j == i && delta == Sign::parity(i.into()))
}

/// Label of the right-hand factor of the pairing.
///
/// The two renderings name the same representation of `SO(n,1)`:
/// `π_{n-i,(-1)^n δ} ≃ π_{i,(-1)^{n-1} δ}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PairingConvention {
    /// `π_{n-i,(-1)^n δ}`.
    #[default]
    Complementary,
    /// `π_{i,(-1)^{n-1} δ}`.
    SameIndex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairingSide {
    pub group: GroupTag,
    /// `(ℓ, ε)` in the notation `Π_{ℓ,ε}` / `π_{ℓ,ε}`.
    pub label: (u32, Sign),
    pub param: EnhancedParam,
    pub coefficient: Weight,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairingDescriptor {
    pub degree_j: u32,
    pub convention: PairingConvention,
    pub left: PairingSide,
    pub right: PairingSide,
    pub nonzero: bool,
}

/// `B_T : H^j(g,K; Π_{i,δ}) × H^{n-j}(g',K'; partner) → ℂ` for
/// `(SO(n+1,1), SO(n,1))`, `n ≥ 2`.
pub fn pairing(
    n: u32,
    i: u32,
    delta: Sign,
    j: u32,
    convention: PairingConvention,
) -> Result<PairingDescriptor> {
    let nonzero = bilinear_nonzero_trivial_rho(n, i, delta, j)?;
    let group = GroupTag::new(n + 1)?;
    let sub = GroupTag::new(n)?;
    let right_label = match convention {
        PairingConvention::Complementary => (n - i, Sign::parity(n.into()) * delta),
        PairingConvention::SameIndex => (i, Sign::parity(i64::from(n) - 1) * delta),
    };
    let left_param = trivial_rho_member(group, i, delta)?;
    let right_param = trivial_rho_member(sub, right_label.0, right_label.1)?;
    Ok(PairingDescriptor {
        degree_j: j,
        convention,
        left: PairingSide {
            group,
            label: (i, delta),
            coefficient: coefficient_weight(&left_param),
            param: left_param,
            degree: j,
        },
        right: PairingSide {
            group: sub,
            label: right_label,
            coefficient: coefficient_weight(&right_param),
            param: right_param,
            degree: n - j,
        },
        nonzero,
    })
}

/// The gate for a nontrivial map `T^i: H^i(Π ⊗ V) → H^i(π ⊗ V')`: `V` and
/// `V'` match the coefficients of `Π` and `π`, `Hom_{G'}(V|, V') ≠ 0`, equal
/// heights, equal signatures and `multiplicity(Π, π) = 1`. Returns the
/// common height.
pub fn bilinear_gate(
    big_pi: &EnhancedParam,
    pi: &EnhancedParam,
    v: &Weight,
    v_prime: &Weight,
) -> Result<Option<u32>> {
    big_pi.group().expect_subgroup(pi.group())?;
    let coefficients = *v == coefficient_weight(big_pi) && *v_prime == coefficient_weight(pi);
    let ok = coefficients
        && interlaces(v, v_prime)?
        && big_pi.height() == pi.height()
        && big_pi.signature() == pi.signature()
        && multiplicity(big_pi, pi)? == 1;
    Ok(ok.then_some(big_pi.height()))
}
