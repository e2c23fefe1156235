//! Periods, `A_q(λ)` recognition, distinguishing chains and exact period
//! values for the trivial infinitesimal character.
//!
//! A `G'`-period on `Π ⊠ π` is the same datum as a symmetry breaking
//! operator `Π → π^∨`, and every member of the classified blocks is
//! self-dual at the parameter level, so [`has_period`] reduces to
//! [`multiplicity`].

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::{branch_enumerate, multiplicity, EnhancedParam, Error, GroupTag, Result, Sign, Weight};

/// Nonzero `G'`-invariant functional on `Π ⊠ π`.
pub fn has_period(big_pi: &EnhancedParam, pi: &EnhancedParam) -> Result<bool> {
    Ok(multiplicity(big_pi, pi)? == 1)
}

/// `A_q(λ)_δ` data read off a θ-stable parameter `(λ₁,…,λ_i || 0,…,0)_δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AqDescriptor {
    pub group: GroupTag,
    /// θ-stable parabolic index, equal to the height.
    pub i: u32,
    /// Entries before the bar.
    pub lambda_part: Weight,
    /// `S_i = i(n-i)`.
    pub inducing_degree: u64,
    /// Levi factor `SO(2)^i × SO(levi_big_n, 1)`; `levi_big_n = n - 2i + 1`
    /// may be 0 or 1 at the top height.
    pub levi_big_n: u32,
}

pub fn is_aq_lambda(e: &EnhancedParam) -> Option<AqDescriptor> {
    let h = e.height() as usize;
    let (head, tail) = e.weight().entries().split_at(h);
    if tail.iter().any(|&x| x != 0) {
        return None;
    }
    let n = u64::from(e.group().n());
    let i = e.height();
    Some(AqDescriptor {
        group: e.group(),
        i,
        lambda_part: Weight::new(head.to_vec()).expect("prefix of a dominant weight"),
        inducing_degree: u64::from(i) * (n - u64::from(i)),
        levi_big_n: e.group().big_n() - 2 * i,
    })
}

/// `SO(n+1-h, 1)` for an `A_q(λ)` of height `h`.
pub fn distinguished_subgroup(e: &EnhancedParam) -> Result<GroupTag> {
    is_aq_lambda(e).ok_or(Error::NotAqLambda)?;
    GroupTag::new(e.group().big_n() - e.height()).map_err(|_| Error::BadTarget)
}

/// A chain `Π = τ_N → τ_{N-1} → ⋯ → τ_M = χ_ψ` of multiplicity-one steps
/// down to the character `χ_ψ` of `target = SO(M,1)`.
///
/// The returned chain starts with `Π`; when `target` is the group of `Π`
/// the chain is `[Π]` if `Π = χ_ψ`. Stepwise multiplicity one is a witness,
/// not a proof that the composed functional is nonzero. The search is depth
/// first in [`branch_enumerate`] order, so ties go to the largest `ν`.
pub fn distinguishing_chain(
    big_pi: &EnhancedParam,
    target: GroupTag,
    psi: Sign,
) -> Result<Option<Vec<EnhancedParam>>> {
    if target.big_n() > big_pi.group().big_n() {
        return Err(Error::BadTarget);
    }
    let goal = EnhancedParam::character(target, psi);
    let mut dead = BTreeSet::new();
    let found = search(big_pi, &goal, &mut dead)?;
    Ok(found.map(|mut rev| {
        rev.reverse();
        rev
    }))
}

/// Returns the chain reversed (goal first).
fn search(
    node: &EnhancedParam,
    goal: &EnhancedParam,
    dead: &mut BTreeSet<EnhancedParam>,
) -> Result<Option<Vec<EnhancedParam>>> {
    let steps = node.group().big_n() - goal.group().big_n();
    if steps == 0 {
        return Ok((node == goal).then(|| vec![node.clone()]));
    }
    // The height drops by at most one per step.
    if node.height() > steps || dead.contains(node) {
        return Ok(None);
    }
    for child in branch_enumerate(node)? {
        if let Some(mut chain) = search(&child, goal, dead)? {
            chain.push(node.clone());
            return Ok(Some(chain));
        }
    }
    dead.insert(node.clone());
    Ok(None)
}

/// `sign · (num/den) · π^{pi_quarters/4}` with `num/den` reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodValue {
    pub sign: Sign,
    pub num: BigUint,
    pub den: BigUint,
    pub pi_quarters: u64,
}

impl PeriodValue {
    pub fn new(sign: Sign, num: BigUint, den: BigUint, pi_quarters: u64) -> Result<Self> {
        if num == BigUint::ZERO || den == BigUint::ZERO {
            return Err(Error::OutOfRange("period rational part"));
        }
        let g = num.gcd(&den);
        Ok(PeriodValue {
            sign,
            num: num / &g,
            den: den / g,
            pi_quarters,
        })
    }

    pub fn is_one(&self) -> bool {
        self.sign == Sign::Plus && self.num.is_one() && self.den.is_one() && self.pi_quarters == 0
    }
}

/// Renders `2·π^{3/2}`, `-(1/6)·π^{5/4}`, `π`, `1`.
impl fmt::Display for PeriodValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            f.write_str("-")?;
        }
        let rational_is_one = self.num.is_one() && self.den.is_one();
        if !rational_is_one || self.pi_quarters == 0 {
            if self.den.is_one() {
                write!(f, "{}", self.num)?;
            } else {
                write!(f, "({}/{})", self.num, self.den)?;
            }
        }
        if self.pi_quarters == 0 {
            return Ok(());
        }
        if !rational_is_one {
            f.write_str("·")?;
        }
        let g = self.pi_quarters.gcd(&4);
        let (p, q) = (self.pi_quarters / g, 4 / g);
        match (p, q) {
            (1, 1) => f.write_str("π"),
            (p, 1) => write!(f, "π^{p}"),
            (p, q) => write!(f, "π^{{{p}/{q}}}"),
        }
    }
}

fn factorial(k: u64) -> BigUint {
    (2..=k).fold(BigUint::one(), |acc, j| acc * j)
}

/// Value of the `SO(n+1-i,1)`-period on the normalized minimal `K`-type
/// vector of `Π_{i,+}` (trivial infinitesimal character):
///
/// `π^{i(2n-i-1)/4} / ((n-i)!)^{i-1}` times `1/(n-2i)!` if `2i < n+1`, and
/// `(-1)^{n+1} (2i-n-1)!` otherwise.
pub fn period_value(n: u32, i: u32) -> Result<PeriodValue> {
    if i > n {
        return Err(Error::OutOfRange("period index i"));
    }
    let (n, i) = (u64::from(n), u64::from(i));
    let pi_quarters = if i == 0 { 0 } else { i * (2 * n - i - 1) };
    let base = factorial(n - i);
    // ((n-i)!)^{i-1}: the exponent is -1 when i = 0.
    let (mut num, mut den) = if i == 0 {
        (base, BigUint::one())
    } else {
        (BigUint::one(), base.pow((i - 1) as u32))
    };
    let sign = if 2 * i < n + 1 {
        den *= factorial(n - 2 * i);
        Sign::Plus
    } else {
        num *= factorial(2 * i - n - 1);
        Sign::parity((n + 1) as i64)
    };
    PeriodValue::new(sign, num, den, pi_quarters)
}

/// The `K = O(n+1) × O(1)` type `Λ^i(ℂ^{n+1}) ⊠ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KType {
    pub degree: u32,
    pub ambient: u32,
    pub dimension: BigUint,
}

impl fmt::Display for KType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ^{}(ℂ^{}) ⊠ 1", self.degree, self.ambient)
    }
}

/// Minimal `K`-type of `Π_{i,+}` with trivial infinitesimal character.
/// It contains a test vector for the period.
pub fn minimal_k_type_trivial_rho(n: u32, i: u32) -> Result<KType> {
    if i > n + 1 {
        return Err(Error::OutOfRange("exterior degree i"));
    }
    let ambient = n + 1;
    let dimension = (0..i).fold(BigUint::one(), |acc, j| acc * (ambient - j) / (j + 1));
    Ok(KType {
        degree: i,
        ambient,
        dimension,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{trivial_rho_member, Signature};
    use alloc::string::ToString;

    fn g(n: u32) -> GroupTag {
        GroupTag::new(n).unwrap()
    }

    fn ep(n: u32, e: &[u32], h: u32, sig: Signature) -> EnhancedParam {
        EnhancedParam::new(g(n), Weight::new(e.to_vec()).unwrap(), h, sig).unwrap()
    }

    #[test]
    fn has_period_examples() {
        assert!(has_period(
            &ep(3, &[0, 0], 1, Signature::Plus),
            &ep(2, &[0], 0, Signature::Plus)
        )
        .unwrap());
        assert!(!has_period(
            &ep(3, &[0, 0], 1, Signature::Minus),
            &ep(2, &[0], 0, Signature::Plus)
        )
        .unwrap());
        let chi = EnhancedParam::character(g(6), Sign::Plus);
        assert!(has_period(&chi, &EnhancedParam::character(g(5), Sign::Plus)).unwrap());
    }

    #[test]
    fn aq_recognition() {
        let a = is_aq_lambda(&ep(7, &[2, 1, 0, 0], 2, Signature::Minus)).unwrap();
        assert_eq!(a.i, 2);
        assert_eq!(a.lambda_part, Weight::new([2, 1].to_vec()).unwrap());
        assert_eq!(a.inducing_degree, 8);
        assert_eq!(a.levi_big_n, 3);
        let t = is_aq_lambda(&ep(6, &[0, 0, 0], 3, Signature::Both)).unwrap();
        assert_eq!((t.i, t.lambda_part.rank(), t.levi_big_n), (3, 3, 0));
        assert!(is_aq_lambda(&ep(5, &[1, 1, 0], 1, Signature::Minus)).is_none());
    }

    #[test]
    fn distinguished_subgroups() {
        assert_eq!(
            distinguished_subgroup(&ep(5, &[0, 0, 0], 2, Signature::Plus)).unwrap(),
            g(3)
        );
        for big_n in 3..=10 {
            for i in 0..=(big_n - 1) / 2 {
                let e = trivial_rho_member(g(big_n), i, Sign::Plus).unwrap();
                assert_eq!(distinguished_subgroup(&e).unwrap(), g(big_n - i));
            }
        }
        let chi = EnhancedParam::character(g(5), Sign::Plus);
        assert_eq!(distinguished_subgroup(&chi).unwrap(), g(5));
        assert_eq!(
            distinguished_subgroup(&ep(5, &[1, 1, 0], 1, Signature::Minus)),
            Err(Error::NotAqLambda)
        );
    }

    #[test]
    fn chain_examples() {
        let p1 = ep(3, &[0, 0], 1, Signature::Plus);
        assert_eq!(
            distinguishing_chain(&p1, g(2), Sign::Plus).unwrap(),
            Some(vec![p1.clone(), ep(2, &[0], 0, Signature::Plus)])
        );
        let chi = EnhancedParam::character(g(4), Sign::Plus);
        assert_eq!(
            distinguishing_chain(&chi, g(4), Sign::Plus).unwrap(),
            Some(vec![chi.clone()])
        );
        let ds = ep(4, &[0, 0], 2, Signature::Both);
        assert_eq!(
            distinguishing_chain(&ds, g(2), Sign::Plus).unwrap(),
            Some(vec![
                ds.clone(),
                ep(3, &[0, 0], 1, Signature::Plus),
                ep(2, &[0], 0, Signature::Plus)
            ])
        );
        assert_eq!(
            distinguishing_chain(&p1, g(5), Sign::Plus),
            Err(Error::BadTarget)
        );
        // Height 2 cannot reach height 0 in one step.
        assert_eq!(distinguishing_chain(&ds, g(3), Sign::Plus).unwrap(), None);
    }

    #[test]
    fn period_value_examples() {
        for n in 0..=40 {
            assert!(period_value(n, 0).unwrap().is_one(), "n = {n}");
        }
        let v = period_value(2, 1).unwrap();
        assert_eq!((v.sign, v.pi_quarters), (Sign::Plus, 2));
        assert_eq!(v.to_string(), "π^{1/2}");
        let v = period_value(3, 3).unwrap();
        assert_eq!(v.to_string(), "2·π^{3/2}");
        assert_eq!(v.num, BigUint::from(2u32));
        assert_eq!(period_value(4, 2).unwrap().to_string(), "(1/2)·π^{5/2}");
        assert_eq!(period_value(1, 1).unwrap().to_string(), "1");
        assert!(period_value(3, 4).is_err());
    }

    #[test]
    fn k_types() {
        let k = minimal_k_type_trivial_rho(4, 1).unwrap();
        assert_eq!(
            (k.dimension.clone(), k.to_string()),
            (BigUint::from(5u32), "Λ^1(ℂ^5) ⊠ 1".to_string())
        );
        assert_eq!(
            minimal_k_type_trivial_rho(3, 2).unwrap().dimension,
            BigUint::from(6u32)
        );
        assert_eq!(
            minimal_k_type_trivial_rho(7, 0).unwrap().dimension,
            BigUint::one()
        );
        assert!(minimal_k_type_trivial_rho(3, 5).is_err());
    }
}
