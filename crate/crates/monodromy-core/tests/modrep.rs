use std::sync::Arc;

use monodromy_core::chevalley::{ChevalleyAlgebra, LieBracket};
use monodromy_core::field::{Field, Fp};
use monodromy_core::linalg::{self, Subspace};
use monodromy_core::modrep::{
    check_invariant, check_irreducible, coordinate_submodule, decompose, normalizer_action, spin,
    twist_distinguish, Certificate, Construction, Irreducibility, ModrepError, Submodule,
};
use monodromy_core::rootsys::{Family, LengthClass, RootSystem};
use proptest::prelude::*;

fn algebra(family: Family, rank: usize, p: u64) -> ChevalleyAlgebra<Fp> {
    ChevalleyAlgebra::new(Arc::new(RootSystem::new(family, rank).unwrap()), Fp::new(p).unwrap()).unwrap()
}

fn roots_of_class(sys: &RootSystem, class: LengthClass) -> usize {
    (0..sys.num_roots()).filter(|&r| sys.length_class(r) == class).count()
}

/// Summand dimensions predicted by counting: `t`, then root spaces grouped
/// by length.
fn expected_dims(sys: &RootSystem) -> Vec<usize> {
    let mut dims = vec![sys.rank()];
    if sys.is_simply_laced() {
        dims.push(sys.num_roots());
    } else {
        dims.push(roots_of_class(sys, LengthClass::Long));
        dims.push(roots_of_class(sys, LengthClass::Short));
    }
    dims.sort_unstable();
    dims
}

#[test]
fn spin_examples_on_sl5() {
    let g = algebra(Family::A, 4, 73);
    let f = *g.field();
    let full = normalizer_action(&g, Construction::FullNormalizer).unwrap();
    let m = spin(&full, &g.x_vector(3)).unwrap();
    assert_eq!(m.dim(), 20);
    let root_spaces: Vec<usize> = (0..20).collect();
    assert_eq!(m, coordinate_submodule(&g, &root_spaces, false));

    let torus = normalizer_action(&g, Construction::TorusOnly).unwrap();
    let h = g.coroot_vector(2);
    assert_eq!(spin(&torus, &h).unwrap().dim(), 1);

    let mixed = linalg::vec_add(&f, &g.h_vector(0), &g.x_vector(5));
    assert_eq!(spin(&full, &mixed).unwrap().dim(), 24);
}

#[test]
fn decomposition_counts_for_restricted_constructions() {
    let mut cases: Vec<(Family, usize)> = Vec::new();
    cases.extend((3..=6).map(|n| (Family::A, n)));
    cases.extend((4..=6).map(|n| (Family::D, n)));
    cases.extend((2..=5).map(|n| (Family::B, n)));
    cases.extend((2..=5).map(|n| (Family::C, n)));
    for p in [73, 97] {
        for &(family, rank) in &cases {
            let g = algebra(family, rank, p);
            let action = normalizer_action(&g, Construction::Restricted).unwrap();
            let dec = decompose(&action, 7).unwrap();
            let expected = expected_dims(g.system());
            assert_eq!(dec.dims(), expected, "{family}{rank} at {p}");
            let count = if g.system().is_simply_laced() { 2 } else { 3 };
            assert_eq!(dec.summands.len(), count);
            check_decomposition(&g, &action, &dec.summands);
        }
    }
}

#[test]
fn decomposition_counts_for_full_normalizers() {
    for p in [73, 97] {
        for (family, rank) in [(Family::A, 2), (Family::B, 3), (Family::C, 2), (Family::D, 4), (Family::G, 2), (Family::F, 4)] {
            let g = algebra(family, rank, p);
            let action = normalizer_action(&g, Construction::FullNormalizer).unwrap();
            let dec = decompose(&action, 3).unwrap();
            assert_eq!(dec.dims(), expected_dims(g.system()), "{family}{rank} at {p}");
            check_decomposition(&g, &action, &dec.summands);
        }
    }
}

#[test]
fn e7_decomposes_into_three_summands() {
    for p in [73, 97] {
        let g = algebra(Family::E, 7, p);
        let action = normalizer_action(&g, Construction::Restricted).unwrap();
        let dec = decompose(&action, 11).unwrap();
        assert_eq!(dec.dims(), vec![7, 56, 70], "at {p}");
        check_decomposition(&g, &action, &dec.summands);
        let a7 = g.system().e7_a7().unwrap();
        assert_eq!(dec.summands[1], coordinate_submodule(&g, &a7.roots, false));
        assert_eq!(dec.summands[2], coordinate_submodule(&g, &a7.complement, false));
    }
}

/// Dimensions as stated for the E7 root-space summands (twice the orbit
/// sizes). They sum to 259 > 133, so this cannot hold.
#[test]
#[ignore = "stated E7 summand dimensions 112 and 140 exceed dim E7 = 133"]
fn e7_stated_summand_dimensions() {
    let g = algebra(Family::E, 7, 73);
    let action = normalizer_action(&g, Construction::Restricted).unwrap();
    assert_eq!(decompose(&action, 11).unwrap().dims(), vec![7, 112, 140]);
}

fn check_decomposition(
    g: &ChevalleyAlgebra<Fp>,
    action: &monodromy_core::modrep::ActionSet,
    summands: &[Submodule],
) {
    let f = *g.field();
    assert_eq!(summands.iter().map(|s| s.dim()).sum::<usize>(), g.dim());
    let mut total = Subspace::zero(g.dim());
    for (i, s) in summands.iter().enumerate() {
        check_invariant(s, action).unwrap();
        for t in &summands[i + 1..] {
            assert_eq!(s.space().intersection_dim(&f, t.space()), 0);
        }
        total = total.sum(&f, s.space());
    }
    assert_eq!(total.dim(), g.dim());
}

#[test]
fn torus_is_irreducible_under_alternating_permutations() {
    for rank in 3..=6 {
        let g = algebra(Family::A, rank, 73);
        let action = normalizer_action(&g, Construction::Restricted).unwrap();
        let t = coordinate_submodule(&g, &[], true);
        let verdict = check_irreducible(&t, &action, 1).unwrap();
        assert!(matches!(verdict, Irreducibility::Irreducible(Certificate::Norton { .. })), "A{rank}");
    }
}

#[test]
fn three_letter_torus_depends_on_l_mod_3() {
    // The cyclic group of order 3 acting on t of sl3 has eigenvalues the
    // primitive cube roots of unity, which lie in F_l iff l = 1 mod 3.
    let split = algebra(Family::A, 2, 73);
    let action = normalizer_action(&split, Construction::Restricted).unwrap();
    let t = coordinate_submodule(&split, &[], true);
    assert!(matches!(check_irreducible(&t, &action, 1).unwrap(), Irreducibility::Reducible { .. }));

    let inert = algebra(Family::A, 2, 83);
    let action = normalizer_action(&inert, Construction::Restricted).unwrap();
    let t = coordinate_submodule(&inert, &[], true);
    assert!(matches!(check_irreducible(&t, &action, 1).unwrap(), Irreducibility::Irreducible(_)));
}

#[test]
fn whole_algebra_is_reducible_with_invariant_witness() {
    let g = algebra(Family::A, 4, 73);
    let action = normalizer_action(&g, Construction::FullNormalizer).unwrap();
    let all = Submodule::from_space(Subspace::full(g.field(), g.dim()));
    match check_irreducible(&all, &action, 5).unwrap() {
        Irreducibility::Reducible { witness } => {
            assert!(witness.dim() > 0 && witness.dim() < g.dim());
            check_invariant(&witness, &action).unwrap();
        }
        other => panic!("expected reducible, got {other:?}"),
    }
}

#[test]
fn short_root_spaces_of_sp4_are_weight_transitive() {
    let g = algebra(Family::C, 2, 73);
    let sys = g.system();
    let action = normalizer_action(&g, Construction::FullNormalizer).unwrap();
    let short: Vec<usize> = (0..sys.num_roots()).filter(|&r| sys.length_class(r) == LengthClass::Short).collect();
    let gs = coordinate_submodule(&g, &short, false);
    assert_eq!(
        check_irreducible(&gs, &action, 0).unwrap(),
        Irreducibility::Irreducible(Certificate::WeightTransitive { lines: 4 })
    );
}

#[test]
fn non_invariant_subspace_is_rejected() {
    let g = algebra(Family::B, 2, 73);
    let action = normalizer_action(&g, Construction::FullNormalizer).unwrap();
    let one_root = coordinate_submodule(&g, &[0], false);
    assert!(matches!(check_irreducible(&one_root, &action, 0), Err(ModrepError::NotInvariant(_))));
}

#[test]
fn twists_are_distinguished_for_every_construction() {
    let cases = [
        (Family::A, 4, Construction::Restricted),
        (Family::A, 5, Construction::Restricted),
        (Family::B, 3, Construction::Restricted),
        (Family::C, 3, Construction::Restricted),
        (Family::D, 4, Construction::Restricted),
        (Family::B, 2, Construction::Restricted),
        (Family::C, 2, Construction::FullNormalizer),
        (Family::E, 7, Construction::Restricted),
    ];
    for p in [73, 97] {
        for (family, rank, construction) in cases {
            let g = algebra(family, rank, p);
            let f = *g.field();
            let action = normalizer_action(&g, construction).unwrap();
            let dec = decompose(&action, 2).unwrap();
            let verdict = twist_distinguish(&dec.summands, &action, f.primitive_root()).unwrap();
            assert!(verdict.distinguished, "{family}{rank} at {p}");
            let trivial = twist_distinguish(&dec.summands, &action, 1).unwrap();
            assert!(!trivial.distinguished);
        }
    }
}

#[test]
fn twist_spectra_on_sl5() {
    let g = algebra(Family::A, 4, 73);
    let f = *g.field();
    let a = f.primitive_root();
    let action = normalizer_action(&g, Construction::Restricted).unwrap();
    let dec = decompose(&action, 2).unwrap();
    let v = twist_distinguish(&dec.summands, &action, a).unwrap();
    assert_eq!(v.labels, vec!["M0", "M0(1)", "M1", "M1(1)"]);

    // sigma on t: eigenvalues in {1, -1}; on the twist, in {a, -a}.
    let minus_one = f.neg(&1);
    assert!(v.sigma[0].eigenvalues.iter().all(|&(e, _)| e == 1 || e == minus_one));
    assert!(v.sigma[1].eigenvalues.iter().all(|&(e, _)| e == a || e == f.neg(&a)));

    // tau on g_Phi: a^{ht(alpha)}; on the twist a^{ht(alpha) + 1}.
    let sys = g.system();
    let mut expected: Vec<u64> = (0..sys.num_roots())
        .map(|r| {
            let h = sys.height(r) as i64;
            f.pow(&a, h.rem_euclid(72) as u64)
        })
        .collect();
    expected.sort_unstable();
    let flatten = |spec: &[(u64, usize)]| -> Vec<u64> {
        spec.iter().flat_map(|&(e, k)| std::iter::repeat_n(e, k)).collect()
    };
    assert_eq!(flatten(&v.tau[2].eigenvalues), expected);
    let mut shifted: Vec<u64> = expected.iter().map(|e| f.mul(e, &a)).collect();
    shifted.sort_unstable();
    assert_eq!(flatten(&v.tau[3].eigenvalues), shifted);
}

#[test]
fn twist_needs_test_elements_and_nonzero_scalar() {
    let g = algebra(Family::A, 2, 73);
    let action = normalizer_action(&g, Construction::Restricted).unwrap();
    let dec = decompose(&action, 0).unwrap();
    assert_eq!(twist_distinguish(&dec.summands, &action, 5).unwrap_err(), ModrepError::NoTwistElements);
    let g = algebra(Family::A, 4, 73);
    let action = normalizer_action(&g, Construction::Restricted).unwrap();
    let dec = decompose(&action, 0).unwrap();
    assert_eq!(twist_distinguish(&dec.summands, &action, 73).unwrap_err(), ModrepError::ZeroTwist);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn spin_stays_inside_summands_and_is_idempotent(seed in any::<u64>(), which in 0usize..3) {
        use rand::{Rng, SeedableRng};
        let (family, rank) = [(Family::B, 3), (Family::A, 4), (Family::C, 3)][which];
        let g = algebra(family, rank, 73);
        let f = *g.field();
        let action = normalizer_action(&g, Construction::Restricted).unwrap();
        let dec = decompose(&action, seed).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for s in &dec.summands {
            let coords: Vec<u64> = (0..s.dim()).map(|_| rng.gen_range(0..73)).collect();
            if coords.iter().all(|&c| c == 0) {
                continue;
            }
            let v = s.space().from_coordinates(&f, &coords);
            let m = spin(&action, &v).unwrap();
            prop_assert!(s.space().contains_subspace(&f, m.space()));
            // Irreducible: every nonzero vector spins to the whole summand.
            prop_assert_eq!(&m, s);
            let w = m.basis()[rng.gen_range(0..m.dim())].clone();
            prop_assert_eq!(spin(&action, &w).unwrap(), m);
        }
    }

    #[test]
    fn decomposition_is_independent_of_seed(seed in any::<u64>()) {
        let g = algebra(Family::D, 4, 97);
        let action = normalizer_action(&g, Construction::Restricted).unwrap();
        let a = decompose(&action, seed).unwrap();
        let b = decompose(&action, seed.wrapping_mul(31).wrapping_add(1)).unwrap();
        prop_assert_eq!(a.summands, b.summands);
    }
}
