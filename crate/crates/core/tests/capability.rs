use baermult::capability::{
    c_center_descriptor, cover_spec, is_capable, power_absorption_check, power_absorption_check_seeded,
    verbal_center_descriptor, CapabilityError, FreeRankCase, Verdict,
};
use baermult::group::GroupSpec;

fn spec(m: u32, r: &[u64], n: u32) -> GroupSpec {
    GroupSpec::new(m, r.to_vec(), n).unwrap()
}

#[test]
fn descriptions_agree_case_by_case() {
    for m in 0..=3 {
        for chain in [&[121u64, 121][..], &[49, 7], &[121, 11, 11], &[13]] {
            for (c1, c2, n) in [(1, 1, 1), (2, 1, 2), (2, 2, 1)] {
                let h = cover_spec(&spec(m, chain, n), c1, c2);
                let verbal = verbal_center_descriptor(&h, c1, c2).unwrap();
                let center = c_center_descriptor(&h, c1 + c2 + 1).unwrap();
                assert_eq!(verbal, center);
                assert_eq!(verbal.case, FreeRankCase::of(&h));
                assert_eq!(verbal.extra_generators.is_empty(), m >= 2);
            }
        }
    }
}

#[test]
fn capable_groups_are_recovered_from_their_cover() {
    for g in [spec(2, &[11], 2), spec(0, &[25, 25], 1), spec(3, &[], 1), spec(0, &[49, 49, 7], 2)] {
        let verdict = is_capable(&g, 1, 1).unwrap();
        assert_eq!(verdict.verdict, Verdict::Capable);
        let h = cover_spec(&g, 1, 1);
        let d = verbal_center_descriptor(&h, 1, 1).unwrap();
        // H / gamma_{n+1}(H) has the parameters of G
        assert_eq!(h.with_degree(d.n), g);
    }
}

#[test]
fn absorption_on_three_letters_sampled_and_exhaustive() {
    let h = cover_spec(&spec(0, &[25, 25, 5], 1), 1, 1);
    // 3 letters, 3 slots: 27 tuples
    assert!(power_absorption_check(&h, 1, 1, 27).unwrap());
    for seed in 0..4 {
        assert!(power_absorption_check_seeded(&h, 1, 1, 10, seed).unwrap());
    }
    let h = cover_spec(&spec(0, &[121, 11], 1), 2, 1);
    assert!(power_absorption_check(&h, 2, 1, 100).unwrap());
}

#[test]
fn rejected_inputs() {
    assert!(matches!(is_capable(&spec(2, &[6], 1), 1, 1), Err(CapabilityError::Hypotheses(_))));
    assert!(matches!(is_capable(&spec(2, &[25, 7], 1), 1, 1), Err(CapabilityError::Hypotheses(_))));
    assert!(matches!(is_capable(&spec(2, &[25], 1), 0, 1), Err(CapabilityError::BadParameter(_))));
    let h = cover_spec(&spec(0, &[3, 3], 1), 1, 1);
    assert!(matches!(power_absorption_check(&h, 1, 1, 5), Err(CapabilityError::Hypotheses(_))));
}
