//! Dense linear algebra over an arbitrary [`Field`].

use crate::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<E>]) -> Self {
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn from_rows(cols: usize, rows: &[Vec<E>]) -> Self {
        Matrix::from_fn(rows.len(), cols, |r, c| rows[r][c].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }
}

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    Matrix::from_vec(rows, cols, vec![f.zero(); rows * cols])
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, n, |r, c| if r == c { f.one() } else { f.zero() })
}

pub fn diagonal<F: Field>(f: &F, d: &[F::Elem]) -> Matrix<F::Elem> {
    Matrix::from_fn(d.len(), d.len(), |r, c| if r == c { d[r].clone() } else { f.zero() })
}

pub fn is_zero_vec<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

pub fn is_identity<F: Field>(f: &F, m: &Matrix<F::Elem>) -> bool {
    m.is_square()
        && (0..m.rows).all(|r| {
            (0..m.cols).all(|c| {
                let x = m.get(r, c);
                if r == c {
                    f.is_one(x)
                } else {
                    f.is_zero(x)
                }
            })
        })
}

pub fn is_diagonal<F: Field>(f: &F, m: &Matrix<F::Elem>) -> bool {
    (0..m.rows).all(|r| (0..m.cols).all(|c| r == c || f.is_zero(m.get(r, c))))
}

pub fn mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "matrix product dimension mismatch");
    let mut out = zeros(f, a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(r, k);
            if f.is_zero(x) {
                continue;
            }
            let brow = b.row(k);
            let base = r * b.cols;
            for c in 0..b.cols {
                if !f.is_zero(&brow[c]) {
                    out.data[base + c] = f.mul_add(&out.data[base + c], x, &brow[c]);
                }
            }
        }
    }
    out
}

pub fn mat_vec<F: Field>(f: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len(), "matrix-vector dimension mismatch");
    let mut out = vec![f.zero(); a.rows];
    for (c, x) in v.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (r, o) in out.iter_mut().enumerate() {
            let m = a.get(r, c);
            if !f.is_zero(m) {
                *o = f.mul_add(o, m, x);
            }
        }
    }
    out
}

pub fn add<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Matrix::from_vec(
        a.rows,
        a.cols,
        a.data.iter().zip(&b.data).map(|(x, y)| f.add(x, y)).collect(),
    )
}

pub fn sub<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Matrix::from_vec(
        a.rows,
        a.cols,
        a.data.iter().zip(&b.data).map(|(x, y)| f.sub(x, y)).collect(),
    )
}

pub fn scale<F: Field>(f: &F, s: &F::Elem, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    Matrix::from_vec(a.rows, a.cols, a.data.iter().map(|x| f.mul(s, x)).collect())
}

/// `a - lambda * I`
pub fn shift<F: Field>(f: &F, a: &Matrix<F::Elem>, lambda: &F::Elem) -> Matrix<F::Elem> {
    let mut out = a.clone();
    for i in 0..a.rows.min(a.cols) {
        let v = f.sub(out.get(i, i), lambda);
        out.set(i, i, v);
    }
    out
}

pub fn pow<F: Field>(f: &F, a: &Matrix<F::Elem>, mut e: u64) -> Matrix<F::Elem> {
    let mut base = a.clone();
    let mut acc = identity(f, a.rows);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(f, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(f, &base, &base);
        }
    }
    acc
}

pub fn vec_add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vec_sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vec_scale<F: Field>(f: &F, s: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|x| f.mul(s, x)).collect()
}

pub fn dot<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter().zip(b).fold(f.zero(), |acc, (x, y)| f.mul_add(&acc, x, y))
}

/// `y += s * x`
pub fn axpy<F: Field>(f: &F, y: &mut [F::Elem], s: &F::Elem, x: &[F::Elem]) {
    if f.is_zero(s) {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !f.is_zero(xi) {
            *yi = f.mul_add(yi, s, xi);
        }
    }
}

/// If `a` is a nonzero scalar multiple `c * b`, returns `c`.
pub fn proportionality<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Option<F::Elem> {
    let k = b.iter().position(|x| !f.is_zero(x))?;
    let c = f.div(&a[k], &b[k])?;
    if f.is_zero(&c) {
        return None;
    }
    a.iter().zip(b).all(|(x, y)| *x == f.mul(&c, y)).then_some(c)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
        for j in c..m.cols {
            let v = f.mul(m.get(r, j), &inv);
            m.set(r, j, v);
        }
        let pivot_row: Vec<F::Elem> = m.row(r)[c..].to_vec();
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c).clone();
            if f.is_zero(&factor) {
                continue;
            }
            let base = i * m.cols;
            for (off, pv) in pivot_row.iter().enumerate() {
                if !f.is_zero(pv) {
                    let idx = base + c + off;
                    m.data[idx] = f.sub(&m.data[idx], &f.mul(&factor, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    rref(f, &mut m.clone()).len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut a = m.clone();
    let pivots = rref(f, &mut a);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); m.cols];
        v[free] = f.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(a.get(row, free));
        }
        basis.push(v);
    }
    basis
}

pub fn nullity<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    m.cols - rank(f, m)
}

pub fn inverse<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows;
    let mut aug = Matrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m.get(r, c).clone()
        } else if c - n == r {
            f.one()
        } else {
            f.zero()
        }
    });
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |r, c| aug.get(r, n + c).clone()))
}

pub fn det<F: Field>(f: &F, m: &Matrix<F::Elem>) -> F::Elem {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut acc = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !f.is_zero(a.get(i, c))) else {
            return f.zero();
        };
        if p != c {
            a.swap_rows(p, c);
            acc = f.neg(&acc);
        }
        let pv = a.get(c, c).clone();
        acc = f.mul(&acc, &pv);
        let inv = f.inv(&pv).expect("pivot is nonzero");
        for i in c + 1..n {
            let factor = f.mul(a.get(i, c), &inv);
            if f.is_zero(&factor) {
                continue;
            }
            for j in c..n {
                let v = f.sub(a.get(i, j), &f.mul(&factor, a.get(c, j)));
                a.set(i, j, v);
            }
        }
    }
    acc
}

/// Solves `m x = b`; returns one solution if consistent.
pub fn solve<F: Field>(f: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = m.cols;
    let mut aug = Matrix::from_fn(m.rows, n + 1, |r, c| {
        if c < n {
            m.get(r, c).clone()
        } else {
            b[r].clone()
        }
    });
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![f.zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = aug.get(row, n).clone();
    }
    Some(x)
}

/// Characteristic polynomial `det(x I - m)`, coefficients from the constant
/// term up; monic of degree `n`. Hessenberg reduction then the standard
/// recurrence, `O(n^3)`.
pub fn char_poly<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows;
    let mut h = m.clone();
    for col in 1..n.saturating_sub(1) {
        let Some(i) = (col..n).find(|&i| !f.is_zero(h.get(i, col - 1))) else {
            continue;
        };
        if i != col {
            h.swap_rows(i, col);
            h.swap_cols(i, col);
        }
        let tinv = f.inv(h.get(col, col - 1)).expect("pivot is nonzero");
        for i in col + 1..n {
            let u = f.mul(h.get(i, col - 1), &tinv);
            if f.is_zero(&u) {
                continue;
            }
            for j in 0..n {
                let v = f.sub(h.get(i, j), &f.mul(&u, h.get(col, j)));
                h.set(i, j, v);
            }
            for r in 0..n {
                let v = f.add(h.get(r, col), &f.mul(&u, h.get(r, i)));
                h.set(r, col, v);
            }
        }
    }
    // p[k] = char poly of the leading k x k block.
    let mut p: Vec<Vec<F::Elem>> = vec![vec![f.one()]];
    for k in 1..=n {
        let hkk = h.get(k - 1, k - 1).clone();
        let prev = &p[k - 1];
        let mut next = vec![f.zero(); k + 1];
        for (d, c) in prev.iter().enumerate() {
            next[d + 1] = f.add(&next[d + 1], c);
            next[d] = f.sub(&next[d], &f.mul(&hkk, c));
        }
        let mut t = f.one();
        for i in (1..k).rev() {
            t = f.mul(&t, h.get(i, i - 1));
            if f.is_zero(&t) {
                break;
            }
            let coef = f.mul(h.get(i - 1, k - 1), &t);
            if f.is_zero(&coef) {
                continue;
            }
            for (d, c) in p[i - 1].iter().enumerate() {
                next[d] = f.sub(&next[d], &f.mul(&coef, c));
            }
        }
        p.push(next);
    }
    p.pop().expect("at least the empty product")
}

/// A subspace of `F^n` held as a fully reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<E> {
    ambient: usize,
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full<F: Field<Elem = E>>(f: &F, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            .collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn from_vectors<F: Field<Elem = E>>(f: &F, ambient: usize, vecs: &[Vec<E>]) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vecs {
            s.insert(f, v);
        }
        s
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate<F: Field<Elem = E>>(f: &F, ambient: usize, indices: &[usize]) -> Self {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let rows = idx
            .iter()
            .map(|&i| (0..ambient).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            .collect();
        Subspace { ambient, rows, pivots: idx }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivot columns.
    pub fn reduce<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !f.is_zero(&c) {
                let neg = f.neg(&c);
                axpy(f, &mut out, &neg, row);
            }
        }
        out
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        is_zero_vec(f, &self.reduce(f, v))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert<F: Field<Elem = E>>(&mut self, f: &F, v: &[E]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let mut r = self.reduce(f, v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("leading entry is nonzero");
        r = vec_scale(f, &inv, &r);
        for row in self.rows.iter_mut() {
            let c = row[p].clone();
            if !f.is_zero(&c) {
                let neg = f.neg(&c);
                axpy(f, row, &neg, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// Coordinates of `v` in [`Self::basis`], if `v` lies in the span.
    pub fn coordinates<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Option<Vec<E>> {
        if !self.contains(f, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn from_coordinates<F: Field<Elem = E>>(&self, f: &F, c: &[E]) -> Vec<E> {
        let mut out = vec![f.zero(); self.ambient];
        for (row, x) in self.rows.iter().zip(c) {
            axpy(f, &mut out, x, row);
        }
        out
    }

    pub fn sum<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(f, v);
        }
        s
    }

    pub fn contains_subspace<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        other.rows.iter().all(|v| self.contains(f, v))
    }

    pub fn intersection<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let (a, b) = (self.rows.len(), other.rows.len());
        if a == 0 || b == 0 {
            return Subspace::zero(self.ambient);
        }
        let m = Matrix::from_fn(self.ambient, a + b, |r, c| {
            if c < a {
                self.rows[c][r].clone()
            } else {
                f.neg(&other.rows[c - a][r])
            }
        });
        let vecs: Vec<Vec<E>> = nullspace(f, &m)
            .into_iter()
            .map(|k| self.from_coordinates(f, &k[..a]))
            .collect();
        Subspace::from_vectors(f, self.ambient, &vecs)
    }

    pub fn intersection_dim<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> usize {
        self.dim() + other.dim() - self.sum(f, other).dim()
    }

    /// `{x : <y, x> = 0 for all y in self}` under the standard pairing.
    pub fn annihilator<F: Field<Elem = E>>(&self, f: &F) -> Self {
        if self.rows.is_empty() {
            return Subspace::full(f, self.ambient);
        }
        let m = Matrix::from_rows(self.ambient, &self.rows);
        Subspace::from_vectors(f, self.ambient, &nullspace(f, &m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(f: &Fp, n: usize, seed: u64) -> Matrix<u64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Matrix::from_fn(n, n, |_, _| rng.gen_range(0..f.modulus()))
    }

    /// Leibniz expansion; exponential, only for tiny matrices.
    fn leibniz_det(f: &Fp, m: &Matrix<u64>) -> u64 {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.rows();
        let mut acc = 0;
        for p in perms(n) {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let mut term = if inversions % 2 == 0 { 1 } else { f.modulus() - 1 };
            for (r, &c) in p.iter().enumerate() {
                term = f.mul(&term, m.get(r, c));
            }
            acc = f.add(&acc, &term);
        }
        acc
    }

    #[test]
    fn char_poly_matches_determinant_evaluation() {
        let f = Fp::new(101).unwrap();
        for seed in 0..20 {
            let m = random_matrix(&f, 5, seed);
            let cp = char_poly(&f, &m);
            assert_eq!(cp.len(), 6);
            assert_eq!(cp[5], 1);
            for x in [0u64, 1, 7, 50] {
                let shifted = scale(&f, &(f.modulus() - 1), &shift(&f, &m, &x));
                let expected = leibniz_det(&f, &shifted);
                let value = cp.iter().rev().fold(0, |acc, c| f.add(&f.mul(&acc, &x), c));
                assert_eq!(value, expected, "seed {seed} x {x}");
            }
        }
    }

    #[test]
    fn char_poly_of_companion_like_nilpotent() {
        let f = Fp::new(7).unwrap();
        let m = Matrix::from_fn(4, 4, |r, c| if c == r + 1 { 1 } else { 0 });
        assert_eq!(char_poly(&f, &m), vec![0, 0, 0, 0, 1]);
    }

    #[test]
    fn exact_inverse_and_det() {
        let q = Rationals;
        let m = Matrix::from_fn(3, 3, |r, c| q.from_i64([[2, 1, 0], [1, 3, 1], [0, 1, 4]][r][c]));
        assert_eq!(det(&q, &m), q.from_i64(18));
        let inv = inverse(&q, &m).unwrap();
        assert!(is_identity(&q, &mul(&q, &m, &inv)));
    }

    #[test]
    fn subspace_intersection() {
        let f = Fp::new(11).unwrap();
        let u = Subspace::from_vectors(&f, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let v = Subspace::from_vectors(&f, 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 0]]);
        let w = u.intersection(&f, &v);
        assert_eq!(w.dim(), 1);
        assert!(w.contains(&f, &[3, 3, 0, 0]));
        assert_eq!(u.intersection_dim(&f, &v), 1);
        assert_eq!(u.annihilator(&f).dim(), 2);
    }

    proptest! {
        #[test]
        fn rank_nullity(seed in 0u64..500, rows in 1usize..7, cols in 1usize..7) {
            let f = Fp::new(5).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = Matrix::from_fn(rows, cols, |_, _| rng.gen_range(0..5));
            let ns = nullspace(&f, &m);
            prop_assert_eq!(rank(&f, &m) + ns.len(), cols);
            for v in &ns {
                prop_assert!(is_zero_vec(&f, &mat_vec(&f, &m, v)));
            }
        }

        #[test]
        fn inverse_roundtrip(seed in 0u64..500) {
            let f = Fp::new(73).unwrap();
            let m = random_matrix(&f, 6, seed);
            match inverse(&f, &m) {
                Some(inv) => {
                    prop_assert!(is_identity(&f, &mul(&f, &inv, &m)));
                    prop_assert!(det(&f, &m) != 0);
                }
                None => prop_assert_eq!(det(&f, &m), 0),
            }
        }

        #[test]
        fn dimension_formula(seed in 0u64..300) {
            let f = Fp::new(3).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut draw = |k: usize| -> Vec<Vec<u64>> {
                (0..k).map(|_| (0..6).map(|_| rng.gen_range(0..3)).collect()).collect()
            };
            let u = Subspace::from_vectors(&f, 6, &draw(3));
            let v = Subspace::from_vectors(&f, 6, &draw(4));
            let meet = u.intersection(&f, &v);
            prop_assert_eq!(meet.dim(), u.intersection_dim(&f, &v));
            prop_assert!(u.contains_subspace(&f, &meet) && v.contains_subspace(&f, &meet));
        }
    }
}
