//! The principal `sl_2`: `X` the sum of simple root vectors, `H` the sum of
//! positive coroots, `Y` solved from `[X, Y] = H`. Everything here is exact
//! over the rationals; reduction mod `l` is separate.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::chevalley::{ChevalleyAlgebra, ChevalleyError, LieBracket};
use crate::field::{rational_to_i64, Field, Fp, Rationals};
use crate::linalg::{self, Matrix};
use crate::rootsys::{RootSystem, RootSystemError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PrincipalError {
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("[X, Y] = H has no solution in the span of negative simple root vectors")]
    NoSolution,
    #[error("triple relation {0} fails")]
    Relation(&'static str),
    #[error("ad(H) is not diagonal on basis vector {0}")]
    NotGraded(usize),
    #[error("basis vector {0} of ker ad(X) is not homogeneous")]
    Inhomogeneous(usize),
    #[error("{p} divides a denominator of the triple")]
    BadReduction { p: u64 },
    #[error("need 1 <= h <= n, got n = {n}, h = {h}")]
    HeightOutOfRange { n: usize, h: usize },
    #[error("exponent must be positive")]
    ZeroExponent,
}

/// `(X, H, Y)` in Chevalley coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple<E> {
    pub x: Vec<E>,
    pub h: Vec<E>,
    pub y: Vec<E>,
}

impl Sl2Triple<BigRational> {
    /// Coefficient of `X_{-alpha_i}` in `Y` for each simple index `i`.
    pub fn y_coefficients(&self, alg: &ChevalleyAlgebra<Rationals>) -> Vec<BigRational> {
        let sys = alg.system();
        sys.simple_indices().iter().map(|&s| self.y[alg.root_index(sys.negate(s))].clone()).collect()
    }

    pub fn reduce(&self, f: &Fp) -> Result<Sl2Triple<u64>, PrincipalError> {
        let p = f.modulus();
        let red = |v: &[BigRational]| {
            v.iter()
                .map(|q| {
                    let den = f.from_bigint(q.denom());
                    let inv = f.inv(&den).ok_or(PrincipalError::BadReduction { p })?;
                    Ok(f.mul(&f.from_bigint(q.numer()), &inv))
                })
                .collect::<Result<Vec<u64>, PrincipalError>>()
        };
        Ok(Sl2Triple { x: red(&self.x)?, h: red(&self.h)?, y: red(&self.y)? })
    }
}

/// Whether `[X, Y] = H`, `[H, X] = 2X`, `[H, Y] = -2Y`.
pub fn check_relations<F: Field, A: LieBracket<F>>(alg: &A, t: &Sl2Triple<F::Elem>) -> Result<(), PrincipalError> {
    let f = alg.field();
    let two = f.from_i64(2);
    if alg.bracket_vec(&t.x, &t.y) != t.h {
        return Err(PrincipalError::Relation("[X, Y] = H"));
    }
    if alg.bracket_vec(&t.h, &t.x) != linalg::vec_scale(f, &two, &t.x) {
        return Err(PrincipalError::Relation("[H, X] = 2X"));
    }
    if alg.bracket_vec(&t.h, &t.y) != linalg::vec_scale(f, &f.neg(&two), &t.y) {
        return Err(PrincipalError::Relation("[H, Y] = -2Y"));
    }
    Ok(())
}

pub fn rational_algebra(sys: Arc<RootSystem>) -> Result<ChevalleyAlgebra<Rationals>, PrincipalError> {
    Ok(ChevalleyAlgebra::new(sys, Rationals)?)
}

pub fn principal_triple(alg: &ChevalleyAlgebra<Rationals>) -> Result<Sl2Triple<BigRational>, PrincipalError> {
    let q = Rationals;
    let sys = alg.system();
    let dim = alg.dim();
    let mut x = vec![q.zero(); dim];
    for &s in sys.simple_indices() {
        x[alg.root_index(s)] = q.one();
    }
    let mut h = vec![q.zero(); dim];
    for (i, c) in sys.two_rho_coroot().into_iter().enumerate() {
        h[i] = q.from_i64(c);
    }
    let negatives: Vec<usize> = sys.simple_indices().iter().map(|&s| alg.root_index(sys.negate(s))).collect();
    let cols: Vec<Vec<BigRational>> =
        negatives.iter().map(|&k| alg.bracket_vec(&x, &alg.basis_vector(k))).collect();
    let coeffs = linalg::solve(&q, &Matrix::from_columns(dim, &cols), &h).ok_or(PrincipalError::NoSolution)?;
    let mut y = vec![q.zero(); dim];
    for (&k, c) in negatives.iter().zip(coeffs) {
        y[k] = c;
    }
    let triple = Sl2Triple { x, h, y };
    check_relations(alg, &triple)?;
    Ok(triple)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostantData {
    /// Sorted, with multiplicity.
    pub exponents: Vec<usize>,
    /// `(m, v_{2m})`: a basis of `ker ad(X)` by `H`-weight.
    pub centralizer_basis: Vec<(usize, Vec<BigRational>)>,
    /// `ad(H)`-eigenvalue on each basis vector of the algebra.
    pub h_eigenvalues: Vec<i64>,
}

impl KostantData {
    pub fn dimension_checksum(&self) -> usize {
        self.exponents.iter().map(|m| 2 * m + 1).sum()
    }

    /// Multiplicity of the `ad(H)`-eigenvalue `2k` predicted by the
    /// exponents.
    pub fn predicted_multiplicity(&self, k: i64) -> usize {
        self.exponents.iter().filter(|&&m| m as i64 >= k.abs()).count()
    }
}

/// `ker ad(X)`, one `ad(H)`-weight space at a time: `ad(X)` raises the
/// weight by 2, so the kernel is the sum of the kernels of the blocks.
pub fn kostant_decomposition(
    alg: &ChevalleyAlgebra<Rationals>,
    triple: &Sl2Triple<BigRational>,
) -> Result<KostantData, PrincipalError> {
    let q = Rationals;
    let dim = alg.dim();
    let mut h_eigenvalues = Vec::with_capacity(dim);
    for j in 0..dim {
        let e = alg.basis_vector(j);
        let image = alg.bracket_vec(&triple.h, &e);
        let value = if linalg::is_zero_vec(&q, &image) {
            q.zero()
        } else {
            linalg::proportionality(&q, &image, &e).ok_or(PrincipalError::NotGraded(j))?
        };
        h_eigenvalues.push(rational_to_i64(&value).ok_or(PrincipalError::NotGraded(j))?);
    }
    let mut weights: Vec<i64> = h_eigenvalues.clone();
    weights.sort_unstable();
    weights.dedup();

    let mut centralizer_basis = Vec::new();
    for &w in weights.iter().filter(|&&w| w >= 0) {
        let source: Vec<usize> = (0..dim).filter(|&j| h_eigenvalues[j] == w).collect();
        let target: Vec<usize> = (0..dim).filter(|&j| h_eigenvalues[j] == w + 2).collect();
        let images: Vec<Vec<BigRational>> =
            source.iter().map(|&j| alg.bracket_vec(&triple.x, &alg.basis_vector(j))).collect();
        let block = Matrix::from_fn(target.len().max(1), source.len(), |r, c| {
            target.get(r).map(|&t| images[c][t].clone()).unwrap_or_else(|| q.zero())
        });
        for kernel in linalg::nullspace(&q, &block) {
            let mut v = vec![q.zero(); dim];
            for (&j, c) in source.iter().zip(kernel) {
                v[j] = c;
            }
            if w % 2 != 0 {
                return Err(PrincipalError::Inhomogeneous(centralizer_basis.len()));
            }
            centralizer_basis.push(((w / 2) as usize, v));
        }
    }
    let mut exponents: Vec<usize> = centralizer_basis.iter().map(|(m, _)| *m).collect();
    exponents.sort_unstable();
    Ok(KostantData { exponents, centralizer_basis, h_eigenvalues })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentFlags {
    pub exponent: usize,
    /// `alpha((ad Y)^m v_{2m})`, exact.
    pub alpha_value: String,
    pub l_alpha: bool,
    pub g_minus_alpha: bool,
}

/// For each `v_{2m}`: whether `(ad Y)^m v_{2m}` pairs nonzero with `alpha`
/// and whether `(ad Y)^{m+1} v_{2m}` has a nonzero `X_{-alpha}` coefficient.
pub fn ad_power_component_check(
    alg: &ChevalleyAlgebra<Rationals>,
    triple: &Sl2Triple<BigRational>,
    kd: &KostantData,
    simple_index: usize,
) -> Result<Vec<ComponentFlags>, PrincipalError> {
    let q = Rationals;
    let sys = alg.system();
    let alpha = sys.simple_root(simple_index)?;
    let x_alpha = alg.x_vector(alpha);
    let minus = alg.root_index(sys.negate(alpha));
    let mut out = Vec::with_capacity(kd.centralizer_basis.len());
    for (m, v) in &kd.centralizer_basis {
        let mut u = v.clone();
        for _ in 0..*m {
            u = alg.bracket_vec(&triple.y, &u);
        }
        debug_assert!(u[alg.rank()..].iter().all(|c| c.is_zero()), "(ad Y)^m v_2m lies in t");
        let pairing = alg.bracket_vec(&u, &x_alpha);
        let alpha_value = pairing[alg.root_index(alpha)].clone();
        let w = alg.bracket_vec(&triple.y, &u);
        out.push(ComponentFlags {
            exponent: *m,
            l_alpha: !q.is_zero(&alpha_value),
            alpha_value: alpha_value.to_string(),
            g_minus_alpha: !q.is_zero(&w[minus]),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormCheck {
    pub n: usize,
    pub h: usize,
    /// Coefficients of `H_{1,2}` and `H_{2,3}` in `(ad Y)^h v_{2h}`,
    /// computed with matrices in `sl_{n+1}`.
    pub h1: BigInt,
    pub h2: BigInt,
    /// The same two coefficients from the `k_{i,j}` recursion.
    pub recursion_h1: BigInt,
    pub recursion_h2: BigInt,
    /// `(-1)^{h-1} (h+1)! h (n-1)(n-2)...(n-h+1)`.
    pub closed_form: BigInt,
}

impl ClosedFormCheck {
    pub fn holds(&self) -> bool {
        self.h1 == self.recursion_h1
            && self.h2 == self.recursion_h2
            && &self.h2 - BigInt::from(2) * &self.h1 == self.closed_form
            && !self.closed_form.is_zero()
    }

    /// `alpha_{1,2}` evaluated on `(ad Y)^h v_{2h}`; the negative of the
    /// closed form.
    pub fn alpha_value(&self) -> BigInt {
        BigInt::from(2) * &self.h1 - &self.h2
    }
}

fn k(n: usize, i: usize) -> BigInt {
    BigInt::from(i * (n - i + 1))
}

/// `k_i k_{i+1} ... k_{j-1}`, zero when `j > n + 1`.
fn k_range(n: usize, i: usize, j: usize) -> BigInt {
    if j > n + 1 {
        return BigInt::zero();
    }
    (i..j).map(|t| k(n, t)).product()
}

fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    (0..r).fold(BigInt::one(), |acc, t| acc * BigInt::from(n - t) / BigInt::from(t + 1))
}

fn sign(e: usize) -> BigInt {
    if e.is_even() {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn lie_an_closed_form_check(n: usize, h: usize) -> Result<ClosedFormCheck, PrincipalError> {
    if h == 0 || h > n {
        return Err(PrincipalError::HeightOutOfRange { n, h });
    }
    let size = n + 1;
    // Matrices over Z, entry (r, c) at r * size + c; indices are 0-based.
    let mut y = vec![BigInt::zero(); size * size];
    for i in 1..=n {
        y[i * size + (i - 1)] = k(n, i);
    }
    let mut v = vec![BigInt::zero(); size * size];
    for i in 0..size - h {
        v[i * size + i + h] = BigInt::one();
    }
    let mul = |a: &[BigInt], b: &[BigInt]| {
        let mut out = vec![BigInt::zero(); size * size];
        for r in 0..size {
            for t in 0..size {
                if a[r * size + t].is_zero() {
                    continue;
                }
                for c in 0..size {
                    out[r * size + c] += &a[r * size + t] * &b[t * size + c];
                }
            }
        }
        out
    };
    for _ in 0..h {
        let left = mul(&y, &v);
        let right = mul(&v, &y);
        v = left.iter().zip(&right).map(|(a, b)| a - b).collect();
    }
    // diag(d) = sum h_i (E_ii - E_{i+1,i+1}) gives h_i = d_1 + ... + d_i.
    let h1 = v[0].clone();
    let h2 = if n >= 2 { &v[0] + &v[size + 1] } else { BigInt::zero() };

    let recursion_h1 = sign(h) * k_range(n, 1, h + 1);
    let recursion_h2 = if n >= 2 {
        sign(h - 1) * binomial(h - 1, 1) * k_range(n, 1, h + 1) + sign(h) * k_range(n, 2, h + 2)
    } else {
        BigInt::zero()
    };
    let falling: BigInt = (1..h).map(|t| BigInt::from(n - t)).product();
    let factorial: BigInt = (1..=h + 1).map(BigInt::from).product();
    let closed_form = sign(h - 1) * factorial * BigInt::from(h) * falling;
    Ok(ClosedFormCheck { n, h, h1, h2, recursion_h1, recursion_h2, closed_form })
}

/// `rank + #{alpha : ht(alpha) even}`.
pub fn even_height_fixed_dim(sys: &RootSystem) -> usize {
    sys.rank() + (0..sys.num_roots()).filter(|&r| sys.height(r) % 2 == 0).count()
}

/// Fixed space of `Ad(rho^vee(-1))`, from the torus automorphism with
/// every simple root sent to `-1`.
pub fn involution_fixed_dim<F: Field>(alg: &ChevalleyAlgebra<F>) -> Result<usize, PrincipalError> {
    let f = alg.field();
    let t = vec![f.from_i64(-1); alg.rank()];
    let ad = alg.ad_torus(&t)?;
    Ok(linalg::nullity(f, &linalg::shift(f, ad.matrix(), &f.one())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymFixedDim {
    pub brute_force: usize,
    pub parity_formula: usize,
}

impl SymFixedDim {
    pub fn agree(&self) -> bool {
        self.brute_force == self.parity_formula
    }
}

/// Fixed vectors of `diag(1, -1)` on `Sym^{2m}(k^2) (x) det^{-m}`.
pub fn sym_fixed_dim(m: usize) -> Result<SymFixedDim, PrincipalError> {
    if m == 0 {
        return Err(PrincipalError::ZeroExponent);
    }
    let q = Rationals;
    // x^a y^{2m-a} scales by (-1)^{2m-a}; det^{-m} by (-1)^m.
    let diag: Vec<BigRational> = (0..=2 * m).map(|a| q.from_i64(if (2 * m - a + m).is_even() { 1 } else { -1 })).collect();
    let action = linalg::diagonal(&q, &diag);
    let brute_force = linalg::nullity(&q, &linalg::shift(&q, &action, &q.one()));
    let parity_formula = if m % 2 == 1 { m } else { m + 1 };
    Ok(SymFixedDim { brute_force, parity_formula })
}
