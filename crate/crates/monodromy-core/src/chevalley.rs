//! Chevalley bases: integral structure constants, the Lie algebra over a
//! field, torus automorphisms, Weyl-group lifts and the Killing form.
//!
//! Basis index `i < rank` is `H_i = alpha_i^vee`; index `rank + r` is `X_r`
//! for root `r`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::perm::Perm;
use crate::rootsys::{RootSystem, RootSystemError, WeylWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChevalleyError {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("characteristic {p} is too small: need p > {bound} (three times the Coxeter number)")]
    ModulusTooSmall { p: u64, bound: u64 },
    #[error("element has {got} coordinates, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("torus value for simple root {0} is zero")]
    ZeroTorusValue(usize),
    #[error("exponent of a non-nilpotent derivation")]
    NotNilpotent,
    #[error("matrix is not invertible")]
    Singular,
    #[error("structure constants inconsistent at roots {0} and {1}")]
    StructureConstants(usize, usize),
}

/// `N_{a,b}` for all pairs of roots, zero when `a + b` is not a root.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    num_roots: usize,
    values: Vec<i32>,
}

impl StructureConstants {
    pub fn compute(sys: &RootSystem) -> Result<Self, ChevalleyError> {
        let r = sys.num_roots();
        let n_pos = sys.num_positive();
        let mut extraspecial: HashMap<usize, (usize, usize)> = HashMap::new();
        for xi in 0..n_pos {
            if sys.height(xi) == 1 {
                continue;
            }
            let (alpha, beta) = (0..n_pos)
                .find_map(|a| sys.sub(xi, a).filter(|&b| sys.is_positive(b)).map(|b| (a, b)))
                .expect("non-simple positive roots decompose");
            extraspecial.insert(xi, (alpha, beta));
        }
        let mut solver = Solver { sys, extraspecial, memo: HashMap::new() };
        let mut values = vec![0i32; r * r];
        for a in 0..r {
            for b in 0..r {
                values[a * r + b] = solver.n(a, b)? as i32;
            }
        }
        Ok(StructureConstants { num_roots: r, values })
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> i32 {
        self.values[a * self.num_roots + b]
    }
}

struct Solver<'a> {
    sys: &'a RootSystem,
    extraspecial: HashMap<usize, (usize, usize)>,
    memo: HashMap<(usize, usize), i64>,
}

impl Solver<'_> {
    fn p_value(&self, alpha: usize, beta: usize) -> i64 {
        let mut p = 0;
        let mut cur = beta;
        while let Some(next) = self.sys.sub(cur, alpha) {
            p += 1;
            cur = next;
        }
        p
    }

    fn norm(&self, a: usize) -> i64 {
        self.sys.norm(a) as i64
    }

    fn n(&mut self, a: usize, b: usize) -> Result<i64, ChevalleyError> {
        let sys = self.sys;
        let Some(c) = sys.add(a, b) else {
            return Ok(0);
        };
        if let Some(&v) = self.memo.get(&(a, b)) {
            return Ok(v);
        }
        let value = match (sys.is_positive(a), sys.is_positive(b)) {
            (true, true) => {
                if a > b {
                    -self.n(b, a)?
                } else {
                    let (alpha, beta) = self.extraspecial[&c];
                    let n_ab = self.p_value(alpha, beta) + 1;
                    if (a, b) == (alpha, beta) {
                        n_ab
                    } else {
                        let (zeta, eta) = (a, b);
                        let neg_alpha = sys.negate(alpha);
                        let neg_beta = sys.negate(beta);
                        let mut acc = Ratio::from_integer(0i64);
                        if let Some(d) = sys.sub(eta, alpha) {
                            let t = self.n(eta, neg_alpha)? * self.n(zeta, neg_beta)?;
                            acc += Ratio::new(t, self.norm(d));
                        }
                        if let Some(d) = sys.sub(zeta, alpha) {
                            let t = self.n(neg_alpha, zeta)? * self.n(eta, neg_beta)?;
                            acc += Ratio::new(t, self.norm(d));
                        }
                        let v = acc * Ratio::new(self.norm(c), n_ab);
                        if !v.is_integer() {
                            return Err(ChevalleyError::StructureConstants(a, b));
                        }
                        v.to_integer()
                    }
                }
            }
            (false, false) => -self.n(sys.negate(a), sys.negate(b))?,
            (false, true) => -self.n(b, a)?,
            (true, false) => {
                let v = if sys.is_positive(c) {
                    Ratio::new(self.norm(c), self.norm(a)) * -self.n(sys.negate(b), c)?
                } else {
                    Ratio::new(self.norm(c), self.norm(b)) * self.n(sys.negate(c), a)?
                };
                if !v.is_integer() {
                    return Err(ChevalleyError::StructureConstants(a, b));
                }
                v.to_integer()
            }
        };
        self.memo.insert((a, b), value);
        Ok(value)
    }
}

/// Structure of the basis element at an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    Cartan(usize),
    Root(usize),
}

/// Anything with a Lie bracket on coordinate vectors.
pub trait LieBracket<F: Field> {
    fn field(&self) -> &F;
    fn dim(&self) -> usize;
    fn bracket_vec(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem>;

    fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let f = self.field();
        (0..self.dim()).map(|j| if i == j { f.one() } else { f.zero() }).collect()
    }

    /// Column `j` is `[x, e_j]`.
    fn ad_matrix(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        let cols: Vec<Vec<F::Elem>> =
            (0..self.dim()).map(|j| self.bracket_vec(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    fn killing_form(&self, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
        let f = self.field();
        let prod = linalg::mul(f, &self.ad_matrix(a), &self.ad_matrix(b));
        (0..self.dim()).fold(f.zero(), |acc, i| f.add(&acc, prod.get(i, i)))
    }
}

/// A Chevalley-basis Lie algebra over `F`.
#[derive(Debug)]
pub struct ChevalleyAlgebra<F: Field> {
    system: Arc<RootSystem>,
    field: F,
    constants: StructureConstants,
    int_table: Vec<Vec<(u32, i64)>>,
    table: Vec<Vec<(u32, F::Elem)>>,
    killing: OnceLock<Vec<i64>>,
}

impl<F: Field> ChevalleyAlgebra<F> {
    pub fn new(system: Arc<RootSystem>, field: F) -> Result<Self, ChevalleyError> {
        let p = field.characteristic();
        let bound = 3 * system.coxeter_number() as u64;
        if p != 0 && p <= bound {
            return Err(ChevalleyError::ModulusTooSmall { p, bound });
        }
        let constants = StructureConstants::compute(&system)?;
        let int_table = integer_table(&system, &constants);
        let table = int_table
            .iter()
            .map(|entries| entries.iter().map(|&(k, c)| (k, field.from_i64(c))).collect())
            .collect();
        Ok(ChevalleyAlgebra { system, field, constants, int_table, table, killing: OnceLock::new() })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn system_arc(&self) -> Arc<RootSystem> {
        self.system.clone()
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn label(&self, i: usize) -> BasisLabel {
        let r = self.rank();
        if i < r {
            BasisLabel::Cartan(i)
        } else {
            BasisLabel::Root(i - r)
        }
    }

    pub fn root_index(&self, root: usize) -> usize {
        self.rank() + root
    }

    pub fn h_vector(&self, i: usize) -> Vec<F::Elem> {
        self.basis_vector(i)
    }

    pub fn x_vector(&self, root: usize) -> Vec<F::Elem> {
        self.basis_vector(self.root_index(root))
    }

    /// `H_alpha` in coordinates.
    pub fn coroot_vector(&self, root: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        for (k, c) in self.system.coroot_coords(root).into_iter().enumerate() {
            v[k] = self.field.from_i64(c as i64);
        }
        v
    }

    /// Integer bracket of two basis elements.
    pub fn int_bracket_basis(&self, i: usize, j: usize) -> &[(u32, i64)] {
        &self.int_table[i * self.dim() + j]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(u32, F::Elem)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>, ChevalleyError> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.bracket_vec(a, b))
    }

    fn check_len(&self, a: &[F::Elem]) -> Result<(), ChevalleyError> {
        if a.len() != self.dim() {
            return Err(ChevalleyError::DimensionMismatch { expected: self.dim(), got: a.len() });
        }
        Ok(())
    }

    /// `[e_i, v]` scaled by `coeff`, added into `out`.
    fn ad_basis_accumulate(&self, i: usize, coeff: &F::Elem, v: &[F::Elem], out: &mut [F::Elem]) {
        let f = &self.field;
        for (j, vj) in v.iter().enumerate() {
            if f.is_zero(vj) {
                continue;
            }
            let s = f.mul(coeff, vj);
            for (k, c) in self.bracket_basis(i, j) {
                let k = *k as usize;
                out[k] = f.mul_add(&out[k], &s, c);
            }
        }
    }

    pub fn killing_int(&self) -> &[i64] {
        self.killing.get_or_init(|| {
            let n = self.dim();
            let mut gram = vec![0i64; n * n];
            for j in 0..n {
                for k in 0..n {
                    for &(m, c) in self.int_bracket_basis(j, k) {
                        let m = m as usize;
                        for i in 0..n {
                            for &(kk, d) in self.int_bracket_basis(i, m) {
                                if kk as usize == k {
                                    gram[i * n + j] += c * d;
                                }
                            }
                        }
                    }
                }
            }
            gram
        })
    }

    pub fn killing_matrix(&self) -> Matrix<F::Elem> {
        let n = self.dim();
        let g = self.killing_int();
        Matrix::from_fn(n, n, |i, j| self.field.from_i64(g[i * n + j]))
    }

    pub fn killing_pairing(&self, a: &[F::Elem], b: &[F::Elem]) -> Result<F::Elem, ChevalleyError> {
        self.check_len(a)?;
        self.check_len(b)?;
        let f = &self.field;
        let n = self.dim();
        let g = self.killing_int();
        let mut acc = f.zero();
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                let gij = g[i * n + j];
                if gij != 0 && !f.is_zero(bj) {
                    acc = f.add(&acc, &f.mul(&f.mul(ai, bj), &f.from_i64(gij)));
                }
            }
        }
        Ok(acc)
    }

    pub fn killing_nondegenerate(&self) -> bool {
        !self.field.is_zero(&linalg::det(&self.field, &self.killing_matrix()))
    }

    /// Jacobi identity on basis triples over the integers; returns the
    /// number of failing triples. All triples when `samples` is `None`.
    pub fn jacobi_failures(&self, samples: Option<(usize, u64)>) -> usize {
        let n = self.dim();
        let check = |a: usize, b: usize, c: usize| -> bool {
            let mut acc = vec![0i64; n];
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                for &(m, s) in self.int_bracket_basis(y, z) {
                    for &(k, t) in self.int_bracket_basis(x, m as usize) {
                        acc[k as usize] += s * t;
                    }
                }
            }
            acc.iter().all(|&v| v == 0)
        };
        match samples {
            None => {
                let mut bad = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            bad += !check(a, b, c) as usize;
                        }
                    }
                }
                bad
            }
            Some((count, seed)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .filter(|_| !check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                    .count()
            }
        }
    }

    /// Diagonal automorphism with `alpha_i(t) = t[i]` on simple roots.
    pub fn ad_torus(&self, t: &[F::Elem]) -> Result<Automorphism<F::Elem>, ChevalleyError> {
        let f = &self.field;
        let r = self.rank();
        if t.len() != r {
            return Err(ChevalleyError::DimensionMismatch { expected: r, got: t.len() });
        }
        let mut inv = Vec::with_capacity(r);
        for (i, ti) in t.iter().enumerate() {
            inv.push(f.inv(ti).ok_or(ChevalleyError::ZeroTorusValue(i))?);
        }
        let mut diag = vec![f.one(); self.dim()];
        for root in 0..self.system.num_roots() {
            let mut v = f.one();
            for (i, &a) in self.system.root(root).iter().enumerate() {
                let base = if a >= 0 { &t[i] } else { &inv[i] };
                v = f.mul(&v, &f.pow(base, a.unsigned_abs() as u64));
            }
            diag[self.root_index(root)] = v;
        }
        Ok(Automorphism::new(linalg::diagonal(f, &diag)))
    }

    /// `Ad(alpha_j^vee(c))`: simple-root values `c^{<alpha_i, alpha_j^vee>}`.
    pub fn coroot_torus(&self, j: usize, c: &F::Elem) -> Result<Automorphism<F::Elem>, ChevalleyError> {
        let f = &self.field;
        if j >= self.rank() {
            return Err(RootSystemError::IndexOutOfRange { index: j, rank: self.rank() }.into());
        }
        let ci = f.inv(c).ok_or(ChevalleyError::ZeroTorusValue(j))?;
        let t: Vec<F::Elem> = (0..self.rank())
            .map(|i| {
                let e = self.system.cartan()[i][j];
                if e >= 0 {
                    f.pow(c, e as u64)
                } else {
                    f.pow(&ci, (-e) as u64)
                }
            })
            .collect();
        self.ad_torus(&t)
    }

    /// `exp(ad x)` applied to `v`; `x` must be ad-nilpotent.
    pub fn exp_ad_apply(&self, x: &[F::Elem], v: &[F::Elem]) -> Result<Vec<F::Elem>, ChevalleyError> {
        let f = &self.field;
        let support: Vec<usize> = (0..x.len()).filter(|&i| !f.is_zero(&x[i])).collect();
        let mut acc = v.to_vec();
        let mut term = v.to_vec();
        let limit = self.dim() + 1;
        for k in 1..=limit {
            let mut next = vec![f.zero(); self.dim()];
            for &i in &support {
                self.ad_basis_accumulate(i, &x[i], &term, &mut next);
            }
            if linalg::is_zero_vec(f, &next) {
                return Ok(acc);
            }
            let kinv = f.inv(&f.from_i64(k as i64)).ok_or(ChevalleyError::NotNilpotent)?;
            term = linalg::vec_scale(f, &kinv, &next);
            acc = linalg::vec_add(f, &acc, &term);
        }
        Err(ChevalleyError::NotNilpotent)
    }

    pub fn exp_ad(&self, x: &[F::Elem]) -> Result<Automorphism<F::Elem>, ChevalleyError> {
        self.check_len(x)?;
        let cols = (0..self.dim())
            .map(|j| self.exp_ad_apply(x, &self.basis_vector(j)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Automorphism::new(Matrix::from_columns(self.dim(), &cols)))
    }

    /// `n_alpha = exp(ad X_alpha) exp(-ad X_{-alpha}) exp(ad X_alpha)`.
    pub fn weyl_lift(&self, root: usize) -> Result<Automorphism<F::Elem>, ChevalleyError> {
        let f = &self.field;
        let x = self.x_vector(root);
        let y = linalg::vec_scale(f, &f.neg(&f.one()), &self.x_vector(self.system.negate(root)));
        let cols = (0..self.dim())
            .map(|j| {
                let v = self.exp_ad_apply(&x, &self.basis_vector(j))?;
                let v = self.exp_ad_apply(&y, &v)?;
                self.exp_ad_apply(&x, &v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Automorphism::new(Matrix::from_columns(self.dim(), &cols)))
    }

    /// Lift of a word of reflections, `n_{r_0} ... n_{r_k}`.
    pub fn word_lift(&self, word: &WeylWord) -> Result<Automorphism<F::Elem>, ChevalleyError> {
        let mut acc = Automorphism::identity(&self.field, self.dim());
        for &r in &word.0 {
            acc = acc.compose(&self.field, &self.weyl_lift(r)?);
        }
        Ok(acc)
    }

    /// The permutation of roots induced by an automorphism that maps each
    /// root line to a root line.
    pub fn induced_root_perm(&self, g: &Automorphism<F::Elem>) -> Option<Perm> {
        let f = &self.field;
        let r = self.rank();
        let mut images = Vec::with_capacity(self.system.num_roots());
        for root in 0..self.system.num_roots() {
            let col = g.matrix().column(self.root_index(root));
            let support: Vec<usize> = (0..col.len()).filter(|&k| !f.is_zero(&col[k])).collect();
            match support.as_slice() {
                [k] if *k >= r => images.push(k - r),
                _ => return None,
            }
        }
        Perm::from_images(images)
    }

    /// Checks `g [e_i, e_j] = [g e_i, g e_j]` on all basis pairs, or on a
    /// seeded sample of pairs.
    pub fn preserves_bracket(&self, g: &Automorphism<F::Elem>, sample: Option<(usize, u64)>) -> bool {
        let f = &self.field;
        let n = self.dim();
        let cols = g.matrix().columns();
        let check = |i: usize, j: usize| -> bool {
            let mut lhs = vec![f.zero(); n];
            for (k, c) in self.bracket_basis(i, j) {
                linalg::axpy(f, &mut lhs, c, &cols[*k as usize]);
            }
            lhs == self.bracket_vec(&cols[i], &cols[j])
        };
        match sample {
            None => (0..n).all(|i| (i..n).all(|j| check(i, j))),
            Some((count, seed)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count).all(|_| check(rng.gen_range(0..n), rng.gen_range(0..n)))
            }
        }
    }
}

impl<F: Field> LieBracket<F> for ChevalleyAlgebra<F> {
    fn field(&self) -> &F {
        &self.field
    }

    fn dim(&self) -> usize {
        self.rank() + self.system.num_roots()
    }

    fn bracket_vec(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if !f.is_zero(ai) {
                self.ad_basis_accumulate(i, ai, b, &mut out);
            }
        }
        out
    }

    fn ad_matrix(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        let f = &self.field;
        let n = self.dim();
        let mut m = linalg::zeros(f, n, n);
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.bracket_basis(i, j) {
                    let k = *k as usize;
                    let v = f.mul_add(m.get(k, j), xi, c);
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    fn killing_form(&self, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
        self.killing_pairing(a, b).expect("coordinate vectors of the algebra")
    }
}

fn integer_table(sys: &RootSystem, n: &StructureConstants) -> Vec<Vec<(u32, i64)>> {
    let r = sys.rank();
    let dim = r + sys.num_roots();
    let mut table = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let entry = &mut table[i * dim + j];
            match (i < r, j < r) {
                (true, true) => {}
                (true, false) => {
                    let c = sys.simple_pairing(j - r, i) as i64;
                    if c != 0 {
                        entry.push((j as u32, c));
                    }
                }
                (false, true) => {
                    let c = sys.simple_pairing(i - r, j) as i64;
                    if c != 0 {
                        entry.push((i as u32, -c));
                    }
                }
                (false, false) => {
                    let (a, b) = (i - r, j - r);
                    if sys.negate(a) == b {
                        for (k, c) in sys.coroot_coords(a).into_iter().enumerate() {
                            if c != 0 {
                                entry.push((k as u32, c as i64));
                            }
                        }
                    } else if let Some(s) = sys.add(a, b) {
                        entry.push(((r + s) as u32, n.get(a, b) as i64));
                    }
                }
            }
        }
    }
    table
}

/// A linear automorphism; column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism<E> {
    matrix: Matrix<E>,
}

impl<E: Clone> Automorphism<E> {
    pub fn new(matrix: Matrix<E>) -> Self {
        assert!(matrix.is_square(), "automorphism matrix must be square");
        Automorphism { matrix }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Automorphism { matrix: linalg::identity(f, n) }
    }

    pub fn matrix(&self) -> &Matrix<E> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        linalg::mat_vec(f, &self.matrix, v)
    }

    /// `self` after `other`.
    pub fn compose<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        Automorphism { matrix: linalg::mul(f, &self.matrix, &other.matrix) }
    }

    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Result<Self, ChevalleyError> {
        linalg::inverse(f, &self.matrix).map(|matrix| Automorphism { matrix }).ok_or(ChevalleyError::Singular)
    }

    pub fn is_identity<F: Field<Elem = E>>(&self, f: &F) -> bool {
        linalg::is_identity(f, &self.matrix)
    }

    pub fn scaled<F: Field<Elem = E>>(&self, f: &F, s: &E) -> Self {
        Automorphism { matrix: linalg::scale(f, s, &self.matrix) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use crate::rootsys::Family;

    fn algebra(family: Family, rank: usize, p: u64) -> ChevalleyAlgebra<Fp> {
        ChevalleyAlgebra::new(Arc::new(RootSystem::new(family, rank).unwrap()), Fp::new(p).unwrap()).unwrap()
    }

    #[test]
    fn modulus_floor() {
        let sys = Arc::new(RootSystem::new(Family::A, 4).unwrap());
        let err = ChevalleyAlgebra::new(sys.clone(), Fp::new(13).unwrap()).unwrap_err();
        assert_eq!(err, ChevalleyError::ModulusTooSmall { p: 13, bound: 15 });
        assert!(ChevalleyAlgebra::new(sys.clone(), Fp::new(17).unwrap()).is_ok());
        assert!(ChevalleyAlgebra::new(sys, Rationals).is_ok());
    }

    #[test]
    fn structure_constants_are_root_string_values() {
        for (family, rank) in [(Family::B, 3), (Family::G, 2), (Family::F, 4)] {
            let sys = RootSystem::new(family, rank).unwrap();
            let n = StructureConstants::compute(&sys).unwrap();
            for a in 0..sys.num_roots() {
                for b in 0..sys.num_roots() {
                    if sys.add(a, b).is_none() {
                        assert_eq!(n.get(a, b), 0);
                        continue;
                    }
                    let mut p = 0;
                    let mut cur = b;
                    while let Some(next) = sys.sub(cur, a) {
                        p += 1;
                        cur = next;
                    }
                    assert_eq!(n.get(a, b).abs(), p + 1, "{family}{rank} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn weyl_lift_of_g2_short_root() {
        let g = algebra(Family::G, 2, 23);
        let a = g.system().simple_root(0).unwrap();
        let lift = g.weyl_lift(a).unwrap();
        assert!(g.preserves_bracket(&lift, None));
        assert_eq!(g.induced_root_perm(&lift), Some(g.system().reflection_perm(a)));
    }

    #[test]
    fn torus_scales_root_vectors() {
        let g = algebra(Family::A, 2, 11);
        let t = g.ad_torus(&[2, 3]).unwrap();
        let theta = g.system().highest_root();
        assert_eq!(*t.matrix().get(g.root_index(theta), g.root_index(theta)), 6);
        assert_eq!(g.ad_torus(&[0, 1]).unwrap_err(), ChevalleyError::ZeroTorusValue(0));
    }
}
