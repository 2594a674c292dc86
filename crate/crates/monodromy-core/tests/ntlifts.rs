use monodromy_core::field::Fp;
use monodromy_core::linalg::{self, Matrix};
use monodromy_core::ntlifts::{
    det_square_criterion, e7_real_bound_check, even_perm_lift, explicit_fixed_dim, fixed_root_count, real_h0_classical,
    real_h0_max, sp_sn_section, sp_tilde_d_generators, GroupTag, MatrixGroup, StdMatrix, CLOSURE_CAP,
};
use monodromy_core::perm::{Perm, StabChain};
use monodromy_core::rootsys::{Family, RootSystem};
use proptest::prelude::*;

fn f73() -> Fp {
    Fp::new(73).unwrap()
}

fn perm(images: &[usize]) -> Perm {
    Perm::from_images(images.to_vec()).unwrap()
}

fn cycle(n: usize, points: &[usize]) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    for (k, &p) in points.iter().enumerate() {
        images[p] = points[(k + 1) % points.len()];
    }
    perm(&images)
}

fn sym_gens(n: usize) -> Vec<Perm> {
    let all: Vec<usize> = (0..n).collect();
    vec![cycle(n, &[0, 1]), cycle(n, &all)]
}

fn alt_gens(n: usize) -> Vec<Perm> {
    (2..n).map(|k| cycle(n, &[0, 1, k])).collect()
}

#[test]
fn even_permutation_lifts() {
    let f = f73();
    let c = cycle(4, &[0, 1, 2]);
    let m = even_perm_lift(&f, &c).unwrap();
    assert_eq!(linalg::det(&f, &m.matrix), 1);
    assert!(m.satisfies(&f));

    // The lift of tau-then-sigma is lift(sigma) lift(tau).
    let s = cycle(4, &[1, 2, 3]);
    let prod = even_perm_lift(&f, &s).unwrap().mul(&f, &even_perm_lift(&f, &c).unwrap());
    assert_eq!(prod, even_perm_lift(&f, &c.then(&s)).unwrap());

    let t = [2u64, 3, 5, 7];
    let conj = linalg::mul(&f, &linalg::mul(&f, &m.matrix, &linalg::diagonal(&f, &t)), &linalg::inverse(&f, &m.matrix).unwrap());
    let mut moved = [0u64; 4];
    for i in 0..4 {
        moved[c.apply(i)] = t[i];
    }
    assert_eq!(conj, linalg::diagonal(&f, &moved));
}

#[test]
fn tilde_d_is_a_product_of_cyclic_groups_of_order_4() {
    let f = f73();
    for n in 1..=4 {
        let d = sp_tilde_d_generators(n, 73).unwrap();
        assert_eq!(d.len(), n);
        for (i, di) in d.iter().enumerate() {
            assert_eq!(di.group, GroupTag::Sp);
            assert!(di.satisfies(&f));
            let sq = di.mul(&f, di);
            assert!(!linalg::is_identity(&f, &sq.matrix));
            assert!(linalg::is_identity(&f, &sq.mul(&f, &sq).matrix));
            for dj in &d[..i] {
                assert_eq!(di.mul(&f, dj), dj.mul(&f, di));
            }
            // Modulo the torus, d_i swaps the lines of e_i and e'_i.
            let expected = cycle(2 * n, &[i, 2 * n - 1 - i]);
            assert_eq!(di.monomial_perm().unwrap(), expected);
        }
        let group = MatrixGroup::generate(&f, &d.iter().map(|m| m.matrix.clone()).collect::<Vec<_>>(), CLOSURE_CAP).unwrap();
        assert_eq!(group.order(), 4usize.pow(n as u32));
    }
}

#[test]
fn symmetric_section_normalizes_tilde_d() {
    let f = f73();
    let n = 3;
    let d = sp_tilde_d_generators(n, 73).unwrap();
    let sections: Vec<StdMatrix> = sym_gens(n).iter().map(|s| sp_sn_section(&f, s).unwrap()).collect();
    for (s, p) in sym_gens(n).iter().zip(&sections) {
        let pi = linalg::inverse(&f, &p.matrix).unwrap();
        for i in 0..n {
            let conj = linalg::mul(&f, &linalg::mul(&f, &p.matrix, &d[i].matrix), &pi);
            assert_eq!(conj, d[s.apply(i)].matrix);
        }
    }
    let sn = MatrixGroup::generate(&f, &sections.iter().map(|m| m.matrix.clone()).collect::<Vec<_>>(), CLOSURE_CAP).unwrap();
    let dt = MatrixGroup::generate(&f, &d.iter().map(|m| m.matrix.clone()).collect::<Vec<_>>(), CLOSURE_CAP).unwrap();
    assert_eq!(sn.order(), 6);
    let common = sn.elements.iter().filter(|m| dt.contains(m)).count();
    assert_eq!(common, 1);
}

#[test]
fn w1_maps_onto_the_weyl_group_of_c_n() {
    let f = f73();
    for n in 2..=3 {
        let mut gens: Vec<Matrix<u64>> = sym_gens(n).iter().map(|s| sp_sn_section(&f, s).unwrap().matrix).collect();
        gens.extend(sp_tilde_d_generators(n, 73).unwrap().into_iter().map(|m| m.matrix));
        let w1 = MatrixGroup::generate(&f, &gens, CLOSURE_CAP).unwrap();
        let factorial: usize = (1..=n).product();
        assert_eq!(w1.order(), factorial * 4usize.pow(n as u32));

        let image_gens: Vec<Perm> =
            gens.iter().map(|g| StdMatrix { matrix: g.clone(), group: GroupTag::Sp }.monomial_perm().unwrap()).collect();
        let weyl_order = StabChain::new(2 * n, &image_gens, &[]).order();
        assert_eq!(weyl_order, (factorial * 2usize.pow(n as u32)) as u128);

        let kernel: Vec<&Matrix<u64>> = w1
            .elements
            .iter()
            .filter(|m| StdMatrix { matrix: (*m).clone(), group: GroupTag::Sp }.monomial_perm().unwrap().is_identity())
            .collect();
        assert_eq!(kernel.len(), 2usize.pow(n as u32));
        assert!(kernel.iter().all(|m| linalg::is_diagonal(&f, m)));
    }
}

#[test]
fn det_square_examples() {
    let f = f73();
    let lift = |p: &Perm| {
        let n = p.degree();
        Matrix::from_fn(n, n, |r, c| u64::from(p.apply(c) == r))
    };
    for n in 3..=5 {
        let a: Vec<Matrix<u64>> = alt_gens(n).iter().map(lift).collect();
        let v = det_square_criterion(&f, &a, CLOSURE_CAP).unwrap();
        assert!(v.has_section, "A{n}");
        assert_eq!(v.witness, Some(vec![1; a.len()]));
        let factorial: usize = (1..=n).product();
        assert_eq!(v.order, factorial / 2);
    }
    for n in 2..=5 {
        let s: Vec<Matrix<u64>> = sym_gens(n).iter().map(lift).collect();
        let v = det_square_criterion(&f, &s, CLOSURE_CAP).unwrap();
        assert!(!v.has_section, "S{n}");
        assert_eq!(v.abelianization_order, 2);
    }
    let trivial = det_square_criterion(&f, &[linalg::identity(&f, 3)], CLOSURE_CAP).unwrap();
    assert!(trivial.has_section);
    assert_eq!(trivial.order, 1);

    // Cyclic groups: det = g^2 has the root g; a non-square det has none.
    let g = f.primitive_root();
    let v = det_square_criterion(&f, &[linalg::diagonal(&f, &[g, g])], CLOSURE_CAP).unwrap();
    assert!(v.has_section);
    assert_eq!(v.order, 72);
    let v = det_square_criterion(&f, &[linalg::diagonal(&f, &[g, 1])], CLOSURE_CAP).unwrap();
    assert!(!v.has_section);
    // det = -1 on a group of order 2: -1 is a square mod 73 but chi(x)^2 = 1.
    let v = det_square_criterion(&f, &[linalg::diagonal(&f, &[f.elem(-1), 1])], CLOSURE_CAP).unwrap();
    assert!(!v.has_section);
    assert!(det_square_criterion(&f, &[linalg::diagonal(&f, &[g, 1])], 10).is_err());
}

fn family_ranks() -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((Family::A, n));
    }
    for n in 2..=8 {
        out.push((Family::B, n));
        out.push((Family::C, n));
    }
    for n in 4..=8 {
        out.push((Family::D, n));
    }
    out
}

#[test]
fn real_h0_two_paths_agree() {
    for (family, rank) in family_ranks() {
        let n = if family == Family::A { rank + 1 } else { rank };
        for d in 1..n {
            let h = real_h0_classical(family, rank, d).unwrap();
            assert!(h.agree(), "{family}{rank} d = {d}: {h:?}");
        }
    }
}

#[test]
fn real_h0_maxima() {
    for (family, rank) in family_ranks() {
        let (n, bound) = match family {
            Family::A => {
                let n = rank + 1;
                (n, n * n - 2 * n + 1)
            }
            Family::B => (rank, 2 * rank * rank - 3 * rank + 2),
            Family::C => (rank, 2 * rank * rank - 3 * rank + 4),
            _ => (rank, 2 * rank * rank - 5 * rank + 4),
        };
        let max = real_h0_max(family, rank).unwrap();
        assert_eq!(max.formula, bound, "{family}{rank}");
        assert_eq!(max.explicit, bound, "{family}{rank}");
        assert_eq!(max.d, n - 1, "{family}{rank}");
    }
}

/// For `B_n` the involution with `d = 0` is not central in `SO_{2n+1}` and
/// fixes more than the bound; the bound relies on `0 < d < n`.
#[test]
fn b_n_with_d_zero_exceeds_the_bound() {
    for n in 2..=5 {
        let fixed = explicit_fixed_dim(Family::B, n, 0).unwrap();
        assert_eq!(fixed, 2 * n * n - n);
        assert!(fixed > 2 * n * n - 3 * n + 2);
        assert!(fixed < n * (2 * n + 1));
    }
    for n in 2..=5 {
        assert_eq!(explicit_fixed_dim(Family::C, n, 0).unwrap(), n * (2 * n + 1));
        assert_eq!(explicit_fixed_dim(Family::C, n, n).unwrap(), n * (2 * n + 1));
    }
    assert!(fixed_root_count(Family::B, 3, 0).is_err());
}

/// Largest `7 + #{roots with even mask pairing}` over masks nontrivial on `A7`.
fn parity_oracle_max_h0() -> usize {
    let sys = RootSystem::new(Family::E, 7).unwrap();
    let a7 = sys.e7_a7().unwrap();
    let sign = |mask: u32, r: usize| sys.root(r).iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c).sum::<i32>().rem_euclid(2);
    (1u32..128)
        .filter(|&m| a7.roots.iter().any(|&r| sign(m, r) == 1))
        .map(|m| 7 + (0..sys.num_roots()).filter(|&r| sign(m, r) == 0).count())
        .max()
        .unwrap()
}

#[test]
fn e7_bound() {
    let r = e7_real_bound_check(73).unwrap();
    assert_eq!(r.candidates, 126);
    assert_eq!(r.guaranteed_minus, 14);
    assert_eq!(r.bound, 119);
    // Torus characters of E7 restrict to even patterns on A7, so the
    // smallest realised count is 2 * 2 * 6.
    assert_eq!(r.min_minus_on_a7, 24);
    assert_eq!(r.max_h0, parity_oracle_max_h0());
    assert!(r.holds());
    assert!(e7_real_bound_check(4).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_stay_in_sp(word in proptest::collection::vec(0usize..5, 0..12)) {
        let f = f73();
        let n = 3;
        let mut gens: Vec<StdMatrix> = sym_gens(n).iter().map(|s| sp_sn_section(&f, s).unwrap()).collect();
        gens.extend(sp_tilde_d_generators(n, 73).unwrap());
        let mut acc = StdMatrix::new(&f, linalg::identity(&f, 2 * n), GroupTag::Sp).unwrap();
        for k in word {
            acc = acc.mul(&f, &gens[k]);
        }
        prop_assert!(acc.satisfies(&f));
        prop_assert!(acc.monomial_perm().is_some());
    }

    #[test]
    fn even_lifts_are_in_sl(images in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let f = f73();
        let p = perm(&images);
        match even_perm_lift(&f, &p) {
            Ok(m) => {
                prop_assert!(p.is_even());
                prop_assert!(m.satisfies(&f));
                prop_assert_eq!(m.monomial_perm().unwrap(), p);
            }
            Err(_) => prop_assert!(!p.is_even()),
        }
    }
}
