//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if a criterion fails that is not listed in `KNOWN_FAILURES`.

use std::sync::Arc;
use std::time::{Duration, Instant};

use monodromy_core::chevalley::{ChevalleyAlgebra, LieBracket};
use monodromy_core::field::{Fp, Rationals};
use monodromy_core::ledger::{dual_selmer_descent_sim, standard_ledger, unramified_local_h, LedgerConstruction};
use monodromy_core::linalg::{self, Matrix, Subspace};
use monodromy_core::modrep::{decompose, normalizer_action, Construction};
use monodromy_core::ntlifts::{e7_real_bound_check, real_h0_max};
use monodromy_core::perm::{orbits, StabChain};
use monodromy_core::principal::{
    ad_power_component_check, even_height_fixed_dim, involution_fixed_dim, kostant_decomposition,
    lie_an_closed_form_check, principal_triple, rational_algebra, sym_fixed_dim,
};
use monodromy_core::rootsys::{all_types, Family, LengthClass, RootSystem};
use monodromy_core::transporter::fixtures::{self, elementary, Fixture};
use monodromy_core::transporter::{ambient_setup, component_flags, PrimedDecomposition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIME: u64 = 73;

/// Criterion 2 states E7 summand dimensions (7, 112, 140), which sum to
/// 259 while dim E7 = 133. The computed split is (7, 56, 70).
const KNOWN_FAILURES: &[u32] = &[2];

const LIMIT_ORBITS: Duration = Duration::from_secs(5);
const LIMIT_E7_DECOMPOSITION: Duration = Duration::from_secs(60);
const LIMIT_SUITE: Duration = Duration::from_secs(300);

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn within(&mut self, start: Instant, limit: Duration, what: &str) {
        let elapsed = start.elapsed();
        self.note(format!("{what}: {:.2}s (limit {}s)", elapsed.as_secs_f64(), limit.as_secs()));
        self.check(elapsed <= limit, format!("{what} took {elapsed:?}"));
    }
}

fn field() -> Fp {
    Fp::new(PRIME).unwrap()
}

fn system(family: Family, rank: usize) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(family, rank).unwrap())
}

fn algebra(family: Family, rank: usize, p: u64) -> ChevalleyAlgebra<Fp> {
    ChevalleyAlgebra::new(system(family, rank), Fp::new(p).unwrap()).unwrap()
}

fn criterion_1() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    let e7 = RootSystem::new(Family::E, 7).unwrap();
    let a8 = e7.alternating_generators().unwrap();
    let mut sizes: Vec<usize> = orbits(e7.num_roots(), &a8).iter().map(Vec::len).collect();
    sizes.sort_unstable();
    out.check(sizes == [56, 70], format!("orbit sizes {sizes:?}"));
    let a7 = e7.e7_a7().unwrap();
    let chain = StabChain::new(e7.num_roots(), &a8, &[a7.outside]);
    out.check(chain.first_orbit().len() == 70, "orbit of the outside root");
    out.check(chain.first_stabilizer_order() == 288, format!("stabilizer {}", chain.first_stabilizer_order()));
    out.note(format!("orbits {sizes:?}, stabilizer {}", chain.first_stabilizer_order()));
    out.within(start, LIMIT_ORBITS, "E7 orbits");
    out
}

fn class_count(sys: &RootSystem, class: LengthClass) -> usize {
    (0..sys.num_roots()).filter(|&r| sys.length_class(r) == class).count()
}

fn criterion_2() -> Outcome {
    let mut out = Outcome::new();
    let mut cases: Vec<(Family, usize)> = Vec::new();
    cases.extend((4..=8).map(|n| (Family::A, n)));
    cases.extend((4..=8).map(|n| (Family::D, n)));
    cases.extend((2..=8).map(|n| (Family::B, n)));
    cases.extend((2..=8).map(|n| (Family::C, n)));
    for (family, rank) in cases {
        let g = algebra(family, rank, PRIME);
        let sys = g.system();
        let dec = decompose(&normalizer_action(&g, Construction::Restricted).unwrap(), 7).unwrap();
        let mut expected = if sys.is_simply_laced() {
            vec![rank, sys.num_roots()]
        } else {
            vec![rank, class_count(sys, LengthClass::Long), class_count(sys, LengthClass::Short)]
        };
        expected.sort_unstable();
        out.check(dec.dims() == expected, format!("{family}{rank}: {:?} vs {expected:?}", dec.dims()));
    }
    out.note("A4-8, D4-8: 2 summands; B2-8, C2-8: (rank, #long, #short)");

    let start = Instant::now();
    let g = algebra(Family::E, 7, PRIME);
    let dec = decompose(&normalizer_action(&g, Construction::Restricted).unwrap(), 11).unwrap();
    out.within(start, LIMIT_E7_DECOMPOSITION, "E7 decomposition");
    let dims = dec.dims();
    out.check(dims.len() == 3, "E7 summand count");
    out.check(dims == [7, 112, 140], format!("E7 dims {dims:?}, stated (7, 112, 140)"));
    out.note(format!(
        "E7 computed dims {dims:?} sum to {}; the stated dims sum to 259 > dim E7 = 133 and count each orbit twice",
        dims.iter().sum::<usize>()
    ));
    out
}

fn span(fx: &Fixture, mats: &[Matrix<u64>]) -> Subspace<u64> {
    fx.subspace(mats).unwrap()
}

/// Subspace of the fixture algebra cut out by matrix positions.
fn positions(fx: &Fixture, cells: &[(usize, usize)]) -> Subspace<u64> {
    let f = fx.field();
    let n = fx.algebra.size();
    let cell_vectors: Vec<Vec<u64>> = cells.iter().map(|&(i, j)| elementary(f, n, i, j).data().to_vec()).collect();
    let cells_space = Subspace::from_vectors(f, n * n, &cell_vectors);
    let basis: Vec<Vec<u64>> =
        (0..fx.algebra.dim()).map(|k| fx.algebra.element(&fx.algebra.basis_vector(k)).data().to_vec()).collect();
    let inside = Subspace::from_vectors(f, n * n, &basis).intersection(f, &cells_space);
    let mats: Vec<Matrix<u64>> = inside.basis().iter().map(|v| Matrix::from_vec(n, n, v.clone())).collect();
    span(fx, &mats)
}

/// Returns `(t' ∩ t, t'_{alpha'} ∩ t, W ∩ t)`.
fn intersections(f: &Fp, dec: &PrimedDecomposition, a: usize, torus: &Subspace<u64>) -> [Subspace<u64>; 3] {
    [
        dec.t_prime.intersection(f, torus),
        dec.weight_kernel(a).unwrap().intersection(f, torus),
        dec.w_space(a).unwrap().intersection(f, torus),
    ]
}

fn check_flags<A: LieBracket<Fp>>(
    out: &mut Outcome,
    name: &str,
    alg: &A,
    dec: &PrimedDecomposition,
    a: usize,
    torus: &Subspace<u64>,
    summands: &[Subspace<u64>],
) {
    out.check(component_flags(alg, dec, a, torus).unwrap() == (false, true), format!("{name}: flags on t"));
    for (k, m) in summands.iter().enumerate() {
        out.check(component_flags(alg, dec, a, m).unwrap() == (true, true), format!("{name}: flags on summand {k}"));
    }
}

fn criterion_3() -> Outcome {
    let mut out = Outcome::new();
    let f = field();
    let minus = f.elem(-1);

    let fx = fixtures::gl2(f).unwrap();
    let dec = fx.decomposition().unwrap();
    let a = fx.alpha_prime(&dec).unwrap();
    out.check(dec.lines[a].sigma_value == minus, "gl2: alpha'(Sigma) = -1");
    check_flags(&mut out, "gl2", &fx.algebra, &dec, a, &fx.torus, &[span(&fx, &fx.root_vectors)]);
    let [tp, ker, w] = intersections(&f, &dec, a, &fx.torus);
    out.check(tp == ker && ker == w, "gl2: t' ∩ t = t'_a' ∩ t = W ∩ t");

    let fx = fixtures::sl3(f).unwrap();
    let dec = fx.decomposition().unwrap();
    let a = fx.alpha_prime(&dec).unwrap();
    out.check(f.mult_order(dec.lines[a].sigma_value) == Some(3), "sl3: order 3");
    check_flags(&mut out, "sl3", &fx.algebra, &dec, a, &fx.torus, &[span(&fx, &fx.root_vectors)]);
    let [tp, ker, w] = intersections(&f, &dec, a, &fx.torus);
    out.check(tp == ker && ker == w, "sl3: t' ∩ t = t'_a' ∩ t = W ∩ t");

    let fx = fixtures::sp4(f).unwrap();
    let dec = fx.decomposition().unwrap();
    let a = fx.alpha_prime(&dec).unwrap();
    out.check(f.mult_order(dec.lines[a].sigma_value) == Some(4), "sp4: order 4");
    let antidiagonal = [(0, 3), (1, 2), (2, 1), (3, 0)];
    let off: Vec<(usize, usize)> =
        (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|&(i, j)| i != j && i + j != 3).collect();
    let summands = [positions(&fx, &antidiagonal), positions(&fx, &off)];
    check_flags(&mut out, "sp4", &fx.algebra, &dec, a, &fx.torus, &summands);
    let [_, _, w] = intersections(&f, &dec, a, &fx.torus);
    out.check(dec.t_prime.contains_subspace(&f, &w), "sp4: W ∩ t ⊆ t'");
    out.note("fixtures gl2, sl3, sp4 over F_73");

    let mut ambient: Vec<(Family, usize)> = (1..=7).map(|n| (Family::A, n)).collect();
    ambient.extend((4..=7).map(|n| (Family::D, n)));
    ambient.extend((2..=7).flat_map(|n| [(Family::B, n), (Family::C, n)]));
    ambient.push((Family::E, 7));
    for (family, rank) in ambient {
        let alg = algebra(family, rank, PRIME);
        let sys = alg.system();
        let setup = ambient_setup(&alg, 17).unwrap();
        let a = setup.alpha_prime;
        let coords =
            |roots: Vec<usize>| Subspace::coordinate(&f, alg.dim(), &roots.iter().map(|&r| alg.root_index(r)).collect::<Vec<_>>());
        let summands: Vec<Subspace<u64>> = match family {
            Family::E => {
                let a7 = sys.e7_a7().unwrap();
                vec![coords(a7.roots.clone()), coords(a7.complement.clone())]
            }
            Family::A | Family::D => vec![coords((0..sys.num_roots()).collect())],
            _ => [LengthClass::Long, LengthClass::Short]
                .iter()
                .map(|c| coords((0..sys.num_roots()).filter(|&r| sys.length_class(r) == *c).collect()))
                .collect(),
        };
        let name = format!("{family}{rank}");
        check_flags(&mut out, &name, &alg, &setup.dec, a, &setup.torus, &summands);
        let [tp, ker, w] = intersections(&f, &setup.dec, a, &setup.torus);
        if matches!(family, Family::A | Family::D) {
            out.check(tp == ker && ker == w, format!("{name}: t' ∩ t = t'_a' ∩ t = W ∩ t"));
        } else {
            out.check(setup.dec.t_prime.contains_subspace(&f, &w), format!("{name}: W ∩ t ⊆ t'"));
        }
    }
    out.note("ambient A1-7, D4-7, B2-7, C2-7, E7");
    out
}

fn criterion_4() -> Outcome {
    let mut out = Outcome::new();
    for (family, rank) in all_types(8) {
        let alg = rational_algebra(system(family, rank)).unwrap();
        let t = principal_triple(&alg).unwrap();
        let kd = kostant_decomposition(&alg, &t).unwrap();
        out.check(kd.exponents.len() == rank, format!("{family}{rank}: dim g^X = {}", kd.exponents.len()));
        out.check(kd.dimension_checksum() == alg.dim(), format!("{family}{rank}: checksum"));
        if (family, rank) == (Family::E, 7) {
            out.check(kd.exponents == [1, 5, 7, 9, 11, 13, 17], format!("E7 exponents {:?}", kd.exponents));
            let total: usize = kd.exponents.iter().map(|m| 2 * m + 1).sum();
            out.check(total == 133, format!("E7 sum {total}"));
        }
    }
    out.note(format!("{} types of rank <= 8", all_types(8).len()));
    out
}

fn criterion_5() -> Outcome {
    let mut out = Outcome::new();
    let run = |family: Family, rank: usize, indices: &[usize]| -> Vec<usize> {
        let alg = rational_algebra(system(family, rank)).unwrap();
        let t = principal_triple(&alg).unwrap();
        let kd = kostant_decomposition(&alg, &t).unwrap();
        indices
            .iter()
            .copied()
            .filter(|&i| ad_power_component_check(&alg, &t, &kd, i).unwrap().iter().all(|fl| fl.l_alpha && fl.g_minus_alpha))
            .collect()
    };
    for n in 1..=8 {
        out.check(!run(Family::A, n, &[0]).is_empty(), format!("A{n}"));
    }
    for n in 2..=8 {
        out.check(!run(Family::B, n, &[0]).is_empty(), format!("B{n}"));
    }
    let e6 = run(Family::E, 6, &[0, 1, 2, 3, 4, 5]);
    out.check(!e6.is_empty(), "E6: no simple root works");
    out.note(format!("E6 simple roots passing every exponent: {e6:?}"));
    let mut count = 0;
    for n in 1..=8 {
        for h in 1..=n {
            count += 1;
            out.check(lie_an_closed_form_check(n, h).unwrap().holds(), format!("closed form n = {n}, h = {h}"));
        }
    }
    out.note(format!("closed form checked on {count} pairs"));
    out
}

fn criterion_6() -> Outcome {
    let mut out = Outcome::new();
    let mut check_max = |family: Family, rank: usize, expected: usize| {
        let m = real_h0_max(family, rank).unwrap();
        out.check(m.agree() && m.formula == expected, format!("{family}{rank}: {m:?}, expected {expected}"));
    };
    for n in 2..=9 {
        check_max(Family::A, n - 1, n * n - 2 * n + 1);
    }
    for n in 2..=8 {
        check_max(Family::B, n, 2 * n * n - 3 * n + 2);
        check_max(Family::C, n, 2 * n * n - 3 * n + 4);
    }
    for n in 4..=8 {
        check_max(Family::D, n, 2 * n * n - 5 * n + 4);
    }
    let e7 = e7_real_bound_check(PRIME).unwrap();
    out.check(e7.bound == 119 && e7.holds(), format!("E7: {e7:?}"));
    out.note(format!("E7 bound {}, realised minimum {}, max h0 {}", e7.bound, e7.min_minus_on_a7, e7.max_h0));
    for (family, rank, expected) in [(Family::A, 2, 4), (Family::B, 3, 9), (Family::E, 6, 38)] {
        let sys = system(family, rank);
        let by_height = even_height_fixed_dim(&sys);
        let by_matrix = involution_fixed_dim(&rational_algebra(sys.clone()).unwrap()).unwrap();
        let by_sym: usize = sys.exponents_by_height().iter().map(|&m| sym_fixed_dim(m).unwrap().brute_force).sum();
        out.check(
            by_height == expected && by_matrix == expected && by_sym == expected,
            format!("{family}{rank}: {by_height}/{by_matrix}/{by_sym}, expected {expected}"),
        );
    }
    out
}

fn weyl_slack(family: Family, rank: usize, h0: usize) -> i64 {
    let sys = RootSystem::new(family, rank).unwrap();
    let dim = (sys.rank() + sys.num_roots()) as u64;
    standard_ledger(family, rank, LedgerConstruction::Weyl, h0 as u64, dim).unwrap().wiles_rhs()
}

fn criterion_7() -> Outcome {
    let mut out = Outcome::new();
    for n in 2..=9 {
        let s = weyl_slack(Family::A, n - 1, real_h0_max(Family::A, n - 1).unwrap().formula);
        out.check(s == n as i64 - 1, format!("SL_{n}: {s}"));
    }
    for n in 2..=8 {
        let s = weyl_slack(Family::B, n, real_h0_max(Family::B, n).unwrap().formula);
        out.check(s == 3 * n as i64 - 2, format!("Spin_{}: {s}", 2 * n + 1));
        let s = weyl_slack(Family::C, n, real_h0_max(Family::C, n).unwrap().formula);
        out.check(s == 3 * n as i64 - 4, format!("Sp_{}: {s}", 2 * n));
    }
    for n in 4..=8 {
        let s = weyl_slack(Family::D, n, real_h0_max(Family::D, n).unwrap().formula);
        out.check(s == 3 * n as i64 - 4, format!("Spin_{}: {s}", 2 * n));
    }
    let s = weyl_slack(Family::E, 7, e7_real_bound_check(PRIME).unwrap().bound);
    out.check(s == 7, format!("E7: {s}"));
    for (family, rank, expected) in [(Family::A, 2, 2), (Family::B, 3, 9), (Family::E, 6, 34)] {
        let sys = RootSystem::new(family, rank).unwrap();
        let dim = (sys.rank() + sys.num_roots()) as u64;
        let h0 = even_height_fixed_dim(&sys) as u64;
        let rhs = standard_ledger(family, rank, LedgerConstruction::Principal, h0, dim).unwrap().wiles_rhs();
        out.check(rhs == expected, format!("principal {family}{rank}: {rhs}"));
    }
    out
}

fn criterion_8() -> Outcome {
    let mut out = Outcome::new();
    for (family, rank) in all_types(4) {
        let g = ChevalleyAlgebra::new(system(family, rank), Rationals).unwrap();
        out.check(g.jacobi_failures(None) == 0, format!("Jacobi {family}{rank}"));
    }
    for rank in [6, 7] {
        let g = ChevalleyAlgebra::new(system(Family::E, rank), Rationals).unwrap();
        out.check(g.jacobi_failures(Some((10_000, 0xE0 + rank as u64))) == 0, format!("Jacobi E{rank} sampled"));
    }
    out.note("Jacobi: exhaustive rank <= 4, 10^4 samples for E6 and E7");

    // 97 > 3h for every type of rank <= 8.
    for (family, rank) in all_types(8) {
        let g = algebra(family, rank, 97);
        for i in 0..rank {
            let lift = g.weyl_lift(g.system().simple_root(i).unwrap()).unwrap();
            let perm = g.induced_root_perm(&lift);
            out.check(perm == Some(g.system().simple_reflection(i).unwrap()), format!("weyl_lift {family}{rank} s_{i}"));
        }
    }

    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..1000 {
        let n = rng.gen_range(1..=5);
        let diag: Vec<u64> = (0..n).map(|_| rng.gen_range(1..PRIME)).collect();
        let q = rng.gen_range(1..PRIME);
        let u = Matrix::from_fn(n, n, |r, c| if r == c { 1 } else if r < c { rng.gen_range(0..PRIME) } else { 0 });
        let phi = linalg::mul(&f, &linalg::mul(&f, &u, &linalg::diagonal(&f, &diag)), &linalg::inverse(&f, &u).unwrap());
        let h = unramified_local_h(&f, &phi, q).unwrap();
        let ones = diag.iter().filter(|&&d| d == 1).count();
        let qs = diag.iter().filter(|&&d| d == q).count();
        out.check(h.h1 == h.h0 + h.h2 && h.h0 == ones && h.h2 == qs, format!("unramified trial {trial}"));
    }
    for trial in 0..1000 {
        let dual = rng.gen_range(0..50u64);
        let sel = rng.gen_range(0..=dual);
        let trace = dual_selmer_descent_sim(sel, dual).unwrap();
        let ok = trace.steps() as u64 == dual
            && trace.states.windows(2).all(|w| {
                let ((s0, d0), (s1, d1)) = (w[0], w[1]);
                d0 == d1 + 1 && (s0 == 0 && s1 == 0 || s0 as i64 - d0 as i64 == s1 as i64 - d1 as i64)
            });
        out.check(ok, format!("descent trial {trial}"));
    }
    out.note("10^3 unramified triples and 10^3 descent traces");
    out
}

fn main() {
    let suite_start = Instant::now();
    let criteria: [(u32, &str, fn() -> Outcome); 8] = [
        (1, "E7 orbit structure", criterion_1),
        (2, "adjoint decomposition counts", criterion_2),
        (3, "transporter fixtures", criterion_3),
        (4, "Kostant data", criterion_4),
        (5, "principal component checks", criterion_5),
        (6, "archimedean dimensions", criterion_6),
        (7, "Wiles ledgers", criterion_7),
        (8, "property suites", criterion_8),
    ];
    let mut unexpected = Vec::new();
    for (id, title, run) in criteria {
        let start = Instant::now();
        let out = run();
        let pass = out.failures.is_empty();
        let known = KNOWN_FAILURES.contains(&id);
        let tag = match (pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("criterion {id}: {tag}: {title} [{:.2}s]", start.elapsed().as_secs_f64());
        for note in &out.notes {
            println!("    {note}");
        }
        for failure in &out.failures {
            println!("    failed: {failure}");
        }
        if pass && known {
            println!("    listed as a known failure but passed");
            unexpected.push(id);
        }
        if !pass && !known {
            unexpected.push(id);
        }
    }
    let total = suite_start.elapsed();
    println!("suite: {:.2}s (limit {}s)", total.as_secs_f64(), LIMIT_SUITE.as_secs());
    if total > LIMIT_SUITE {
        unexpected.push(0);
    }
    if !unexpected.is_empty() {
        println!("unexpected outcomes: {unexpected:?}");
        std::process::exit(1);
    }
}
