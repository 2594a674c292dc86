//! Regular semisimple elements of the torus normalizer above a given Weyl
//! element, the centralizer torus `t'` and primed root lines they
//! determine, and component and intersection data around a primed root.

pub mod fixtures;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::chevalley::{Automorphism, ChevalleyAlgebra, ChevalleyError, LieBracket};
use crate::field::{lcm, Field, Fp};
use crate::ledger::{unramified_local_h, LedgerError, LocalH};
use crate::linalg::{self, Matrix, Subspace};
use crate::poly;
use crate::rootsys::{Family, LengthClass, RootSystemError, WeylWord};

/// Torus elements tried per Weyl element.
pub const REGULARITY_BUDGET: usize = 4096;
/// Random `h` in `t'` tried before giving up on a regular one.

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransporterError {
    #[error("no regular element found in {budget} tries (best fixed dimension {best_fixed_dim}, rank {rank})")]
    BudgetExhausted { budget: usize, best_fixed_dim: usize, rank: usize },
    #[error("primed spectrum does not split over F_l; needs l = 1 mod {order}")]
    NonSplit { order: u64 },
    #[error("t' is not a torus: ad(t') does not act diagonally on a primed line")]
    NotDiagonal,
    #[error("matrix is not in the algebra")]
    NotInAlgebra,
    #[error("conjugating matrix is singular")]
    Singular,
    #[error("primed root index {0} out of range")]
    UnknownRoot(usize),
    #[error("primed root {0} has no negative")]
    NoNegative(usize),
    #[error("q = {got} differs from alpha'(Sigma) = {expected}")]
    ValueMismatch { expected: u64, got: u64 },
    #[error("no root orthogonal to the given root with commuting sl_2 ({0})")]
    NoCommutingRoot(String),
    #[error("subspace is not stable under Sigma")]
    NotInvariant,
    #[error("root lengths on the local subsystem are not in ratio 2 or 3")]
    LengthClasses,
    #[error("unsupported type {0}")]
    Unsupported(String),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Ledger(#[from] LedgerError),
}

/// A Lie subalgebra of `gl_n`, with coordinates read at the pivots of its
/// reduced echelon basis of flattened matrices.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    field: Fp,
    n: usize,
    space: Subspace<u64>,
}

impl MatrixLieAlgebra {
    pub fn span(field: Fp, n: usize, mats: &[Matrix<u64>]) -> Self {
        let vecs: Vec<Vec<u64>> = mats.iter().map(|m| m.data().to_vec()).collect();
        MatrixLieAlgebra { field, n, space: Subspace::from_vectors(&field, n * n, &vecs) }
    }

    pub fn gl(field: Fp, n: usize) -> Self {
        MatrixLieAlgebra { field, n, space: Subspace::full(&field, n * n) }
    }

    pub fn sl(field: Fp, n: usize) -> Self {
        let trace = Matrix::from_fn(1, n * n, |_, k| if k % (n + 1) == 0 { 1 } else { 0 });
        let basis = linalg::nullspace(&field, &trace);
        MatrixLieAlgebra { field, n, space: Subspace::from_vectors(&field, n * n, &basis) }
    }

    /// `{X : X^T J + J X = 0}`.
    pub fn preserving_form(field: Fp, j: &Matrix<u64>) -> Self {
        let f = &field;
        let n = j.rows();
        let cols: Vec<Vec<u64>> = (0..n * n)
            .map(|k| {
                let e = Matrix::from_fn(n, n, |r, c| if r * n + c == k { 1 } else { 0 });
                let image = linalg::add(f, &linalg::mul(f, &e.transpose(), j), &linalg::mul(f, j, &e));
                image.data().to_vec()
            })
            .collect();
        let basis = linalg::nullspace(f, &Matrix::from_columns(n * n, &cols));
        MatrixLieAlgebra { field, n, space: Subspace::from_vectors(f, n * n, &basis) }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, m: &Matrix<u64>) -> bool {
        self.space.contains(&self.field, m.data())
    }

    pub fn coords(&self, m: &Matrix<u64>) -> Option<Vec<u64>> {
        self.space.coordinates(&self.field, m.data())
    }

    pub fn element(&self, c: &[u64]) -> Matrix<u64> {
        Matrix::from_vec(self.n, self.n, self.space.from_coordinates(&self.field, c))
    }

    /// Diagonal matrices of the algebra, in algebra coordinates.
    pub fn diagonal_part(&self) -> Subspace<u64> {
        let f = &self.field;
        let diag: Vec<usize> = (0..self.n).map(|i| i * (self.n + 1)).collect();
        let inside = self.space.intersection(f, &Subspace::coordinate(f, self.n * self.n, &diag));
        let coords: Vec<Vec<u64>> =
            inside.basis().iter().map(|v| self.space.coordinates(f, v).expect("subspace of the algebra")).collect();
        Subspace::from_vectors(f, self.space.dim(), &coords)
    }

    /// `X -> g X g^{-1}` in algebra coordinates.
    pub fn conjugation(&self, g: &Matrix<u64>) -> Result<Automorphism<u64>, TransporterError> {
        let f = &self.field;
        let gi = linalg::inverse(f, g).ok_or(TransporterError::Singular)?;
        let cols = (0..self.space.dim())
            .map(|k| {
                let x = self.element(&self.basis_vector(k));
                self.coords(&linalg::mul(f, &linalg::mul(f, g, &x), &gi)).ok_or(TransporterError::NotInAlgebra)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Automorphism::new(Matrix::from_columns(self.space.dim(), &cols)))
    }
}

impl LieBracket<Fp> for MatrixLieAlgebra {
    fn field(&self) -> &Fp {
        &self.field
    }

    fn dim(&self) -> usize {
        self.space.dim()
    }

    fn bracket_vec(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = &self.field;
        let (x, y) = (self.element(a), self.element(b));
        let c = linalg::sub(f, &linalg::mul(f, &x, &y), &linalg::mul(f, &y, &x));
        self.coords(&c).expect("the algebra is closed under the bracket")
    }
}

/// `Ad(n_w t)` with fixed space of dimension exactly the rank.
#[derive(Clone, Debug)]
pub struct RegSSElement {
    pub auto: Automorphism<u64>,
    pub weyl: WeylWord,
    /// Simple-root values of the torus factor.
    pub torus: Vec<u64>,
    pub order: u64,
}

pub fn find_regular_ss(
    alg: &ChevalleyAlgebra<Fp>,
    w: &WeylWord,
    seed: u64,
    budget: usize,
) -> Result<RegSSElement, TransporterError> {
    search(alg, w, seed, budget, false).map(|(e, _)| e)
}

/// Regular element whose primed spectrum splits over `F_l`. Torus factors
/// are drawn among squares, which makes splitting likely once `-1` is a
/// square.
pub fn find_split_regular_ss(
    alg: &ChevalleyAlgebra<Fp>,
    w: &WeylWord,
    seed: u64,
    budget: usize,
) -> Result<(RegSSElement, PrimedDecomposition), TransporterError> {
    search(alg, w, seed, budget, true).map(|(e, d)| (e, d.expect("split search returns a decomposition")))
}

fn search(
    alg: &ChevalleyAlgebra<Fp>,
    w: &WeylWord,
    seed: u64,
    budget: usize,
    split: bool,
) -> Result<(RegSSElement, Option<PrimedDecomposition>), TransporterError> {
    let f = *alg.field();
    let p = f.modulus();
    let rank = alg.rank();
    let lift = alg.word_lift(w)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = usize::MAX;
    for _ in 0..budget {
        let torus: Vec<u64> = (0..rank)
            .map(|_| {
                let u = rng.gen_range(1..p);
                if split {
                    f.mul(&u, &u)
                } else {
                    u
                }
            })
            .collect();
        let auto = lift.compose(&f, &alg.ad_torus(&torus)?);
        let fixed = linalg::nullity(&f, &linalg::shift(&f, auto.matrix(), &1));
        best = best.min(fixed);
        if fixed != rank {
            continue;
        }
        let order = element_order(alg, w, &auto);
        if order.is_multiple_of(p) {
            continue;
        }
        let element = RegSSElement { auto, weyl: w.clone(), torus, order };
        if !split {
            return Ok((element, None));
        }
        match primed_decomposition(alg, &element.auto) {
            Ok(dec) => return Ok((element, Some(dec))),
            Err(TransporterError::NonSplit { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(TransporterError::BudgetExhausted { budget, best_fixed_dim: best, rank })
}

/// `ord(w)` times the order of the torus element `(n_w t)^{ord(w)}`.
fn element_order(alg: &ChevalleyAlgebra<Fp>, w: &WeylWord, auto: &Automorphism<u64>) -> u64 {
    let f = alg.field();
    let k = alg.system().word_perm(w).order();
    let power = linalg::pow(f, auto.matrix(), k);
    let torus_order = (0..power.rows())
        .map(|i| f.mult_order(*power.get(i, i)).unwrap_or(0))
        .fold(1, lcm);
    debug_assert!(linalg::is_diagonal(f, &power));
    k * torus_order
}

/// Multiplicative order of an invertible matrix, if at most `limit`.
pub fn matrix_order(f: &Fp, m: &Matrix<u64>, limit: u64) -> Option<u64> {
    let mut acc = m.clone();
    for k in 1..=limit {
        if linalg::is_identity(f, &acc) {
            return Some(k);
        }
        acc = linalg::mul(f, &acc, m);
    }
    None
}

/// A joint eigenline of `ad(t')`, normalized to have first nonzero
/// coordinate 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimedLine {
    pub vector: Vec<u64>,
    /// Values on the echelon basis of `t'`.
    pub weight: Vec<u64>,
    /// Eigenvalue of `Ad(Sigma)` on the line.
    pub sigma_value: u64,
}

#[derive(Clone, Debug)]
pub struct PrimedDecomposition {
    pub t_prime: Subspace<u64>,
    /// Sorted by weight.
    pub lines: Vec<PrimedLine>,
    field: Fp,
}

impl PrimedDecomposition {
    pub fn rank(&self) -> usize {
        self.t_prime.dim()
    }

    fn line(&self, i: usize) -> Result<&PrimedLine, TransporterError> {
        self.lines.get(i).ok_or(TransporterError::UnknownRoot(i))
    }

    /// `alpha'(h)` for `h` in `t'`.
    pub fn weight_at(&self, i: usize, h: &[u64]) -> Result<u64, TransporterError> {
        let f = &self.field;
        let c = self.t_prime.coordinates(f, h).ok_or(TransporterError::NotInAlgebra)?;
        Ok(linalg::dot(f, &self.line(i)?.weight, &c))
    }

    pub fn negative(&self, i: usize) -> Result<usize, TransporterError> {
        let f = &self.field;
        let neg: Vec<u64> = self.line(i)?.weight.iter().map(|w| f.neg(w)).collect();
        self.lines.iter().position(|l| l.weight == neg).ok_or(TransporterError::NoNegative(i))
    }

    /// `t'_{alpha'}`: the kernel of `alpha'` on `t'`.
    pub fn weight_kernel(&self, i: usize) -> Result<Subspace<u64>, TransporterError> {
        let f = &self.field;
        let w = &self.line(i)?.weight;
        let row = Matrix::from_rows(w.len(), std::slice::from_ref(w));
        let vecs: Vec<Vec<u64>> =
            linalg::nullspace(f, &row).iter().map(|c| self.t_prime.from_coordinates(f, c)).collect();
        Ok(Subspace::from_vectors(f, self.t_prime.ambient(), &vecs))
    }

    /// `W = t'_{alpha'} + g_{alpha'}`.
    pub fn w_space(&self, i: usize) -> Result<Subspace<u64>, TransporterError> {
        let mut w = self.weight_kernel(i)?;
        w.insert(&self.field, &self.line(i)?.vector);
        Ok(w)
    }

    /// Lines whose weight vanishes on `t' ∩ t`.
    pub fn local_roots(&self, torus: &Subspace<u64>) -> Vec<usize> {
        let f = &self.field;
        let common = self.t_prime.intersection(f, torus);
        (0..self.lines.len())
            .filter(|&i| common.basis().iter().all(|h| self.weight_at(i, h).map(|v| v == 0).unwrap_or(false)))
            .collect()
    }
}

/// Centralizer `t' = ker(Ad Sigma - 1)` and the joint eigenlines of
/// `ad(t')`, refined one basis vector of `t'` at a time.
pub fn primed_decomposition<A: LieBracket<Fp>>(
    alg: &A,
    ad_sigma: &Automorphism<u64>,
) -> Result<PrimedDecomposition, TransporterError> {
    let f = *alg.field();
    let dim = alg.dim();
    let t_prime = Subspace::from_vectors(&f, dim, &linalg::nullspace(&f, &linalg::shift(&f, ad_sigma.matrix(), &1)));
    let r = t_prime.dim();
    let mut blocks = vec![Subspace::full(&f, dim)];
    for h in t_prime.basis() {
        let adh = alg.ad_matrix(h);
        let mut refined = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.dim() == 1 {
                refined.push(block);
                continue;
            }
            let cols = block
                .basis()
                .iter()
                .map(|b| block.coordinates(&f, &linalg::mat_vec(&f, &adh, b)).ok_or(TransporterError::NotDiagonal))
                .collect::<Result<Vec<_>, _>>()?;
            let restricted = Matrix::from_columns(block.dim(), &cols);
            let roots = poly::roots(&f, &linalg::char_poly(&f, &restricted));
            if roots.iter().map(|(_, k)| k).sum::<usize>() != block.dim() {
                let order = matrix_order(&f, ad_sigma.matrix(), if dim <= 40 { 4096 } else { 64 }).unwrap_or(0);
                return Err(TransporterError::NonSplit { order });
            }
            for &(lambda, k) in &roots {
                let kernel = linalg::nullspace(&f, &linalg::shift(&f, &restricted, &lambda));
                if kernel.len() != k {
                    return Err(TransporterError::NotDiagonal);
                }
                let vecs: Vec<Vec<u64>> = kernel.iter().map(|c| block.from_coordinates(&f, c)).collect();
                refined.push(Subspace::from_vectors(&f, dim, &vecs));
            }
        }
        blocks = refined;
    }
    let mut lines = Vec::with_capacity(dim - r);
    for block in blocks {
        if block == t_prime {
            continue;
        }
        if block.dim() != 1 {
            return Err(TransporterError::NotDiagonal);
        }
        let mut v = block.basis()[0].clone();
        let lead = *v.iter().find(|x| **x != 0).expect("basis vector is nonzero");
        v = linalg::vec_scale(&f, &f.inv(&lead).expect("nonzero"), &v);
        let weight = t_prime
            .basis()
            .iter()
            .map(|b| eigenvalue(&f, &alg.bracket_vec(b, &v), &v).ok_or(TransporterError::NotDiagonal))
            .collect::<Result<Vec<_>, _>>()?;
        let sigma_value =
            linalg::proportionality(&f, &ad_sigma.apply(&f, &v), &v).ok_or(TransporterError::NotDiagonal)?;
        lines.push(PrimedLine { vector: v, weight, sigma_value });
    }
    if lines.len() + r != dim {
        return Err(TransporterError::NotDiagonal);
    }
    lines.sort_by(|a, b| a.weight.cmp(&b.weight));
    Ok(PrimedDecomposition { t_prime, lines, field: f })
}

/// `c` with `a = c v`, zero allowed; `v` nonzero.
fn eigenvalue(f: &Fp, a: &[u64], v: &[u64]) -> Option<u64> {
    if linalg::is_zero_vec(f, a) {
        return Some(0);
    }
    linalg::proportionality(f, a, v)
}

/// `h_{alpha'} = [X_{alpha'}, X_{-alpha'}]`, scaled so `alpha'(h) = 2`.
pub fn primed_coroot<A: LieBracket<Fp>>(
    alg: &A,
    dec: &PrimedDecomposition,
    i: usize,
) -> Result<Vec<u64>, TransporterError> {
    let f = alg.field();
    let j = dec.negative(i)?;
    let h = alg.bracket_vec(&dec.line(i)?.vector, &dec.lines[j].vector);
    let value = dec.weight_at(i, &h)?;
    let scale = f.div(&2, &value).ok_or(TransporterError::NotDiagonal)?;
    Ok(linalg::vec_scale(f, &scale, &h))
}

/// Whether some vector of `m` has a nonzero component on the coroot line
/// of `alpha'`, resp. on the line of `-alpha'`, in the decomposition
/// `t'_{alpha'} + l_{alpha'} + sum of primed lines`.
pub fn component_flags<A: LieBracket<Fp>>(
    alg: &A,
    dec: &PrimedDecomposition,
    i: usize,
    m: &Subspace<u64>,
) -> Result<(bool, bool), TransporterError> {
    let f = alg.field();
    let kernel = dec.weight_kernel(i)?;
    let mut cols: Vec<Vec<u64>> = kernel.basis().to_vec();
    let l_index = cols.len();
    cols.push(primed_coroot(alg, dec, i)?);
    let g_index = cols.len() + dec.negative(i)?;
    cols.extend(dec.lines.iter().map(|l| l.vector.clone()));
    let inv = linalg::inverse(f, &Matrix::from_columns(alg.dim(), &cols)).ok_or(TransporterError::Singular)?;
    let mut flags = (false, false);
    for v in m.basis() {
        let c = linalg::mat_vec(f, &inv, v);
        flags.0 |= c[l_index] != 0;
        flags.1 |= c[g_index] != 0;
    }
    Ok(flags)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionDims {
    pub t_prime_t: usize,
    pub kernel_t: usize,
    pub w_t: usize,
    /// `W ∩ t` is contained in `t'`.
    pub w_t_in_t_prime: bool,
}

pub fn intersection_dims(
    dec: &PrimedDecomposition,
    i: usize,
    torus: &Subspace<u64>,
) -> Result<IntersectionDims, TransporterError> {
    let f = &dec.field;
    let w_t = dec.w_space(i)?.intersection(f, torus);
    Ok(IntersectionDims {
        t_prime_t: dec.t_prime.intersection_dim(f, torus),
        kernel_t: dec.weight_kernel(i)?.intersection_dim(f, torus),
        w_t: w_t.dim(),
        w_t_in_t_prime: dec.t_prime.contains_subspace(f, &w_t),
    })
}

/// Splits local roots by length using `kappa(h, h)`, which is inversely
/// proportional to the squared length of the root.
pub fn length_classes<A: LieBracket<Fp>>(
    alg: &A,
    dec: &PrimedDecomposition,
    roots: &[usize],
) -> Result<Vec<LengthClass>, TransporterError> {
    let f = alg.field();
    let values = roots
        .iter()
        .map(|&i| primed_coroot(alg, dec, i).map(|h| alg.killing_form(&h, &h)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut distinct = values.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let long_value = match distinct.as_slice() {
        [v] => *v,
        [a, b] => {
            let related = |x: &u64, y: &u64| *y == f.mul(&2, x) || *y == f.mul(&3, x);
            if related(a, b) {
                *a
            } else if related(b, a) {
                *b
            } else {
                return Err(TransporterError::LengthClasses);
            }
        }
        _ => return Err(TransporterError::LengthClasses),
    };
    Ok(values.iter().map(|v| if *v == long_value { LengthClass::Long } else { LengthClass::Short }).collect())
}

fn restrict(f: &Fp, auto: &Automorphism<u64>, s: &Subspace<u64>) -> Result<Matrix<u64>, TransporterError> {
    let cols = s
        .basis()
        .iter()
        .map(|b| s.coordinates(f, &auto.apply(f, b)).ok_or(TransporterError::NotInvariant))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_columns(s.dim(), &cols))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RamakrishnaStep {
    /// `h1(W ∩ t) - h0(t)` for the unramified action of `Sigma` with
    /// cyclotomic value `q`.
    pub eq2_delta: i64,
    /// `t` has a nonzero component on the line of `-alpha'`.
    pub eq1_strict_possible: bool,
    pub w_t: LocalH,
    pub t: LocalH,
}

pub fn ramakrishna_step_invariants<A: LieBracket<Fp>>(
    alg: &A,
    dec: &PrimedDecomposition,
    ad_sigma: &Automorphism<u64>,
    i: usize,
    torus: &Subspace<u64>,
    q: u64,
) -> Result<RamakrishnaStep, TransporterError> {
    let f = alg.field();
    let expected = dec.line(i)?.sigma_value;
    if q % f.modulus() != expected {
        return Err(TransporterError::ValueMismatch { expected, got: q });
    }
    let w_t = dec.w_space(i)?.intersection(f, torus);
    let w_t_h = unramified_local_h(f, &restrict(f, ad_sigma, &w_t)?, q)?;
    let t_h = unramified_local_h(f, &restrict(f, ad_sigma, torus)?, q)?;
    let (_, g_minus) = component_flags(alg, dec, i, torus)?;
    Ok(RamakrishnaStep {
        eq2_delta: w_t_h.h1 as i64 - t_h.h0 as i64,
        eq1_strict_possible: g_minus,
        w_t: w_t_h,
        t: t_h,
    })
}

/// A regular element over `s_alpha s_beta` with `beta` orthogonal to
/// `alpha` and `alpha ± beta` not roots. Among such `beta`, the lowest
/// height wins, then the last in root order.
pub fn modified_sigma(
    alg: &ChevalleyAlgebra<Fp>,
    alpha: usize,
    seed: u64,
) -> Result<(RegSSElement, PrimedDecomposition, usize), TransporterError> {
    let sys = alg.system();
    let beta = (0..sys.num_positive())
        .filter(|&b| {
            b != alpha
                && b != sys.negate(alpha)
                && sys.inner(alpha, b) == 0
                && sys.add(alpha, b).is_none()
                && sys.sub(alpha, b).is_none()
        })
        .min_by_key(|&b| (sys.height(b), std::cmp::Reverse(b)))
        .ok_or_else(|| TransporterError::NoCommutingRoot(sys.name()))?;
    let (e, d) = find_split_regular_ss(alg, &WeylWord(vec![alpha, beta]), seed, REGULARITY_BUDGET)?;
    Ok((e, d, beta))
}

/// Data for the component and intersection checks in the full algebra.
#[derive(Clone, Debug)]
pub struct AmbientSetup {
    pub element: RegSSElement,
    pub dec: PrimedDecomposition,
    /// The reflections used: `[alpha]` or `[beta, gamma]`.
    pub roots: Vec<usize>,
    /// Primed roots vanishing on `t' ∩ t`.
    pub local: Vec<usize>,
    pub alpha_prime: usize,
    pub torus: Subspace<u64>,
}

/// `A_n`, `D_n`: `Sigma` over `s_alpha` for a simple root. `B_n`, `C_n`:
/// over `s_beta s_gamma`, `beta` long and `gamma` short, not orthogonal,
/// with `alpha'` long. `E7`: over `s_beta s_gamma` with `beta` in the `A7`
/// subsystem and `gamma` outside it.
pub fn ambient_setup(alg: &ChevalleyAlgebra<Fp>, seed: u64) -> Result<AmbientSetup, TransporterError> {
    let sys = alg.system();
    let n = sys.rank();
    let roots = match (sys.family(), n) {
        (Family::A, _) | (Family::D, _) => vec![sys.simple_root(0)?],
        (Family::B, _) => {
            let mut long = vec![0; n];
            long[0] = 1;
            long[1] = -1;
            let mut short = vec![0; n];
            short[1] = 1;
            vec![sys.from_epsilon(&long)?, sys.from_epsilon(&short)?]
        }
        (Family::C, _) => {
            let mut long = vec![0; n];
            long[1] = 2;
            let mut short = vec![0; n];
            short[0] = 1;
            short[1] = -1;
            vec![sys.from_epsilon(&long)?, sys.from_epsilon(&short)?]
        }
        (Family::E, 7) => {
            let a7 = sys.e7_a7()?;
            let beta = a7.simple[3];
            vec![beta, a7.outside]
        }
        _ => return Err(TransporterError::Unsupported(sys.name())),
    };
    let f = *alg.field();
    let (element, dec) = find_split_regular_ss(alg, &WeylWord(roots.clone()), seed, REGULARITY_BUDGET)?;
    let torus = Subspace::coordinate(&f, alg.dim(), &(0..n).collect::<Vec<_>>());
    let local = dec.local_roots(&torus);
    let alpha_prime = match sys.family() {
        Family::B | Family::C => {
            let classes = length_classes(alg, &dec, &local)?;
            local
                .iter()
                .zip(&classes)
                .find(|(_, c)| **c == LengthClass::Long)
                .map(|(i, _)| *i)
                .ok_or(TransporterError::LengthClasses)?
        }
        _ => *local.first().ok_or(TransporterError::UnknownRoot(0))?,
    };
    Ok(AmbientSetup { element, dec, roots, local, alpha_prime, torus })
}
