use proptest::prelude::*;

use sobranch_core::oracle::stream_matches_decision;
use sobranch_core::{
    bilinear_gate, bilinear_nonzero_trivial_rho, branch_enumerate, classify, coefficient_weight,
    distinguished_subgroup, distinguishing_chain, enhanced_from_langlands, has_period,
    hasse_sequence, infchar_finite_dim, infchar_principal_series, is_aq_lambda, multiplicity,
    period_value, sb_diagram, standard_sequence, twist_chi_minus, EnhancedParam, GroupTag,
    RepVariant, Sign, Signature, Weight,
};

fn g(big_n: u32) -> GroupTag {
    GroupTag::new(big_n).unwrap()
}

/// A θ-weight for `SO(N,1)` with entries at most `max`.
fn theta(group: GroupTag, max: u32) -> impl Strategy<Value = Weight> {
    let free = group.rank() - usize::from(group.is_type_d());
    let tail = usize::from(group.is_type_d());
    prop::collection::vec(0..=max, free).prop_map(move |mut e| {
        e.sort_unstable_by(|a, b| b.cmp(a));
        e.extend(std::iter::repeat_n(0, tail));
        Weight::new(e).unwrap()
    })
}

fn group_and_weight(lo: u32, hi: u32, max: u32) -> impl Strategy<Value = (GroupTag, Weight)> {
    (lo..=hi).prop_flat_map(move |n| theta(g(n), max).prop_map(move |s| (g(n), s)))
}

fn members(group: GroupTag, s: &Weight) -> Vec<EnhancedParam> {
    classify(group, s)
        .unwrap()
        .iter()
        .map(|d| enhanced_from_langlands(d).unwrap())
        .collect()
}

/// A member of a block of `SO(N,1)` and every member of a block of the
/// subgroup.
fn pair_blocks() -> impl Strategy<Value = (Vec<EnhancedParam>, Vec<EnhancedParam>)> {
    (3u32..=9).prop_flat_map(|n| {
        (theta(g(n), 3), theta(g(n - 1), 3))
            .prop_map(move |(s, t)| (members(g(n), &s), members(g(n - 1), &t)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn blocks_have_n_plus_two_members_with_the_block_infchar((group, s) in group_and_weight(2, 12, 5)) {
        let block = classify(group, &s).unwrap();
        prop_assert_eq!(block.len(), group.big_n() as usize + 1);
        let want = infchar_finite_dim(group, &s).unwrap();
        let mut heights = Vec::new();
        for d in &block {
            let (sigma, _, lambda) = d.langlands_triple();
            prop_assert_eq!(infchar_principal_series(group, &sigma, lambda).unwrap(), want.clone());
            let e = enhanced_from_langlands(d).unwrap();
            prop_assert_eq!(e.weight(), &s);
            prop_assert_eq!(e.is_tempered(), d.is_tempered());
            prop_assert_eq!(e.height() == 0, matches!(d.variant(), RepVariant::FiniteDim { .. }));
            heights.push(e.height());
        }
        heights.dedup();
        prop_assert_eq!(heights, (0..=group.top_height()).collect::<Vec<_>>());
    }

    #[test]
    fn tempered_members_have_closed_form_sigma((group, s) in group_and_weight(2, 12, 5)) {
        let m = group.top_height() as usize;
        for d in classify(group, &s).unwrap() {
            match d.variant() {
                RepVariant::TemperedPS { sigma, .. } => {
                    let want: Vec<u32> = s.entries()[..m].iter().map(|x| x + 1).collect();
                    prop_assert_eq!(sigma.entries(), &want[..]);
                }
                RepVariant::DiscreteSeries { sigma, lambda } => {
                    let want: Vec<u32> = s.entries()[..m - 1].iter().map(|x| x + 1).collect();
                    prop_assert_eq!(sigma.entries(), &want[..]);
                    prop_assert_eq!(*lambda, i64::from(s.entries()[m - 1]) + m as i64);
                }
                _ => {}
            }
        }
    }

    #[test]
    fn twist_keeps_height_and_flips_definite_signatures((group, s) in group_and_weight(2, 10, 4)) {
        for e in members(group, &s) {
            let t = twist_chi_minus(&e);
            prop_assert_eq!(t.height(), e.height());
            prop_assert_eq!(t.weight(), e.weight());
            match e.signature() {
                Signature::Both => prop_assert_eq!(t.signature(), Signature::Both),
                sig => prop_assert_ne!(t.signature(), sig),
            }
            prop_assert_eq!(twist_chi_minus(&t), e);
        }
    }

    #[test]
    fn hasse_members_are_distinct_and_standard_ends_tempered((group, s) in group_and_weight(2, 12, 4)) {
        for sig0 in [Sign::Plus, Sign::Minus] {
            let h = hasse_sequence(group, &s, sig0).unwrap();
            let mut sorted = h.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), h.len());
            prop_assert_eq!(h[0].signature(), Signature::from(sig0));
            let st = standard_sequence(group, &s, sig0).unwrap();
            prop_assert_eq!(st.last().unwrap().height(), group.top_height());
            for (i, (a, b)) in st.iter().zip(&h).enumerate() {
                let want = if i % 2 == 1 { twist_chi_minus(b) } else { b.clone() };
                prop_assert_eq!(a, &want);
            }
        }
    }

    #[test]
    fn stream_agrees_with_decision((upper, lower) in pair_blocks()) {
        for big_pi in &upper {
            prop_assert!(stream_matches_decision(big_pi, &lower));
            let stream = branch_enumerate(big_pi).unwrap();
            let mut sorted = stream.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), stream.len());
        }
    }

    #[test]
    fn multiplicity_is_twist_equivariant_and_matches_periods((upper, lower) in pair_blocks()) {
        for big_pi in &upper {
            for pi in &lower {
                let m = multiplicity(big_pi, pi).unwrap();
                prop_assert!(m <= 1);
                prop_assert_eq!(m, multiplicity(&twist_chi_minus(big_pi), &twist_chi_minus(pi)).unwrap());
                prop_assert_eq!(has_period(big_pi, pi).unwrap(), m == 1);
                let gate = bilinear_gate(big_pi, pi, &coefficient_weight(big_pi), &coefficient_weight(pi)).unwrap();
                if gate.is_some() {
                    prop_assert!(m == 1);
                }
            }
        }
    }

    #[test]
    fn diagram_arrows_drop_height_by_at_most_one(
        (group, s) in group_and_weight(3, 10, 3),
        pick in any::<prop::sample::Index>(),
        sig in prop_oneof![Just(Sign::Plus), Just(Sign::Minus)],
    ) {
        let sub = group.subgroup().unwrap();
        let candidates: Vec<Weight> = sobranch_core::enumerate_interlacing(&s, sub.rank())
            .unwrap()
            .filter(|nu| !sub.is_type_d() || nu.last() == Some(0))
            .collect();
        prop_assume!(!candidates.is_empty());
        let s_prime = pick.get(&candidates);
        let d = sb_diagram(group, &s, s_prime, sig).unwrap();
        for a in &d.arrows {
            prop_assert!(a.to_height == a.from_height || a.to_height + 1 == a.from_height);
            prop_assert_eq!(multiplicity(&a.from, &a.to).unwrap(), 1);
        }
    }

    #[test]
    fn aq_parameters_have_distinguishing_chains((group, s) in group_and_weight(2, 9, 3)) {
        for e in members(group, &s) {
            let Some(aq) = is_aq_lambda(&e) else { continue };
            prop_assert_eq!(aq.inducing_degree, u64::from(e.height()) * u64::from(group.n() - e.height()));
            let Ok(target) = distinguished_subgroup(&e) else {
                // SO(2,1) discrete series would need SO(1,1).
                prop_assert_eq!(group.big_n(), e.height() + 1);
                continue;
            };
            let psi = e.signature().definite().unwrap_or(Sign::Plus);
            let chain = distinguishing_chain(&e, target, psi).unwrap();
            prop_assert!(chain.is_some(), "{} has no chain to {}", e, target);
            let chain = chain.unwrap();
            prop_assert_eq!(chain.first(), Some(&e));
            prop_assert_eq!(chain.last(), Some(&EnhancedParam::character(target, psi)));
            for w in chain.windows(2) {
                prop_assert_eq!(multiplicity(&w[0], &w[1]).unwrap(), 1);
            }
        }
    }

    #[test]
    fn period_value_shape(n in 0u32..=40, i in 0u32..=40) {
        prop_assume!(i <= n);
        let v = period_value(n, i).unwrap();
        let quarters = if i == 0 { 0 } else { u64::from(i) * u64::from(2 * n - i - 1) };
        prop_assert_eq!(v.pi_quarters, quarters);
        let sign = if 2 * i > n { Sign::parity(i64::from(n) + 1) } else { Sign::Plus };
        prop_assert_eq!(v.sign, sign);
    }

    #[test]
    fn trivial_rho_forms(n in 0u32..=30, i in 0u32..=15, j in 0u32..=30) {
        prop_assume!(2 * i <= n && j <= n);
        let plus = bilinear_nonzero_trivial_rho(n, i, Sign::Plus, j).unwrap();
        let minus = bilinear_nonzero_trivial_rho(n, i, Sign::Minus, j).unwrap();
        if plus || minus {
            prop_assert_eq!(j, i);
        }
        if j == i {
            prop_assert!(plus != minus);
            prop_assert_eq!(plus, i % 2 == 0);
        }
    }
}

#[test]
fn height_zero_pairs_follow_the_finite_dimensional_law() {
    use sobranch_core::finite_dim_branch;
    for big_n in 3..=9 {
        let (group, sub) = (g(big_n), g(big_n - 1));
        for s in sobranch_core::oracle::theta_grid(group, 3) {
            for delta in [Sign::Plus, Sign::Minus] {
                let law: Vec<Weight> = finite_dim_branch(group, &s, delta)
                    .unwrap()
                    .into_iter()
                    .filter(|c| c.in_a)
                    .map(|c| c.weight)
                    .collect();
                let big_pi = EnhancedParam::new(group, s.clone(), 0, delta.into()).unwrap();
                for t in sobranch_core::oracle::theta_grid(sub, 3) {
                    for eps in [Sign::Plus, Sign::Minus] {
                        let pi = EnhancedParam::new(sub, t.clone(), 0, eps.into()).unwrap();
                        let want = delta == eps && law.contains(&t);
                        assert_eq!(
                            multiplicity(&big_pi, &pi).unwrap() == 1,
                            want,
                            "{big_pi} / {pi}"
                        );
                    }
                }
            }
        }
    }
}
