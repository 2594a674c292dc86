//! Low-rank matrix models: `gl_2` with a swap, `sl_3` with a 3-cycle, and
//! `sp_4` with a Coxeter-type element. In each, `P^{-1} Sigma P` is
//! diagonal, so `P` carries the diagonal torus onto `t'`.

use crate::chevalley::{Automorphism, LieBracket};
use crate::field::{Field, Fp};
use crate::linalg::{self, Matrix, Subspace};

use super::{primed_decomposition, MatrixLieAlgebra, PrimedDecomposition, TransporterError};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub algebra: MatrixLieAlgebra,
    pub sigma: Matrix<u64>,
    pub conjugator: Matrix<u64>,
    /// The root of unity in `P` (`-1` for `gl_2`).
    pub root_of_unity: u64,
    pub root_vectors: Vec<Matrix<u64>>,
    /// Diagonal matrices of the algebra, in algebra coordinates.
    pub torus: Subspace<u64>,
    /// Elementary matrix spanning the root line of `alpha'` in the
    /// eigenbasis of `Sigma`.
    pub alpha_prime_model: Matrix<u64>,
    field: Fp,
}

pub fn elementary(f: &Fp, n: usize, i: usize, j: usize) -> Matrix<u64> {
    Matrix::from_fn(n, n, |r, c| if (r, c) == (i, j) { f.one() } else { f.zero() })
}

fn signed(f: &Fp, n: usize, entries: &[i64]) -> Matrix<u64> {
    Matrix::from_fn(n, n, |r, c| f.elem(entries[r * n + c]))
}

/// Gram matrix of `x1 y4 + x2 y3 - x3 y2 - x4 y1`.
pub fn sp4_form(f: &Fp) -> Matrix<u64> {
    signed(f, 4, &[0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0])
}

impl Fixture {
    pub fn field(&self) -> &Fp {
        &self.field
    }

    pub fn ad_sigma(&self) -> Result<Automorphism<u64>, TransporterError> {
        self.algebra.conjugation(&self.sigma)
    }

    pub fn decomposition(&self) -> Result<PrimedDecomposition, TransporterError> {
        primed_decomposition(&self.algebra, &self.ad_sigma()?)
    }

    /// `P^{-1} M P`.
    pub fn to_eigenbasis(&self, m: &Matrix<u64>) -> Result<Matrix<u64>, TransporterError> {
        let f = &self.field;
        let pi = linalg::inverse(f, &self.conjugator).ok_or(TransporterError::Singular)?;
        Ok(linalg::mul(f, &linalg::mul(f, &pi, m), &self.conjugator))
    }

    /// `P M P^{-1}`.
    pub fn from_eigenbasis(&self, m: &Matrix<u64>) -> Result<Matrix<u64>, TransporterError> {
        let f = &self.field;
        let pi = linalg::inverse(f, &self.conjugator).ok_or(TransporterError::Singular)?;
        Ok(linalg::mul(f, &linalg::mul(f, &self.conjugator, m), &pi))
    }

    pub fn subspace(&self, mats: &[Matrix<u64>]) -> Result<Subspace<u64>, TransporterError> {
        let coords = mats
            .iter()
            .map(|m| self.algebra.coords(m).ok_or(TransporterError::NotInAlgebra))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::from_vectors(&self.field, self.algebra.dim(), &coords))
    }

    /// Index of the primed line spanned by `P E P^{-1}` for the model `E`.
    pub fn alpha_prime(&self, dec: &PrimedDecomposition) -> Result<usize, TransporterError> {
        let target = self
            .algebra
            .coords(&self.from_eigenbasis(&self.alpha_prime_model)?)
            .ok_or(TransporterError::NotInAlgebra)?;
        dec.lines
            .iter()
            .position(|l| linalg::proportionality(&self.field, &target, &l.vector).is_some())
            .ok_or(TransporterError::UnknownRoot(usize::MAX))
    }
}

/// `gl_2`, `Sigma` the swap, `P = [[1, 1], [1, -1]]`, `alpha = e1 - e2`.
pub fn gl2(f: Fp) -> Result<Fixture, TransporterError> {
    let algebra = MatrixLieAlgebra::gl(f, 2);
    let torus = algebra.diagonal_part();
    Ok(Fixture {
        sigma: signed(&f, 2, &[0, 1, 1, 0]),
        conjugator: signed(&f, 2, &[1, 1, 1, -1]),
        root_of_unity: f.elem(-1),
        root_vectors: vec![elementary(&f, 2, 0, 1)],
        torus,
        alpha_prime_model: elementary(&f, 2, 0, 1),
        algebra,
        field: f,
    })
}

/// `sl_3`, `Sigma` the 3-cycle `s_beta s_gamma`, `P` the Vandermonde matrix
/// of a primitive cube root of unity; `alpha' = beta'`.
pub fn sl3(f: Fp) -> Result<Fixture, TransporterError> {
    let r = f.root_of_unity(3).ok_or(TransporterError::NonSplit { order: 3 })?;
    let r2 = f.mul(&r, &r);
    let algebra = MatrixLieAlgebra::sl(f, 3);
    let torus = algebra.diagonal_part();
    let swap12 = signed(&f, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
    let swap23 = signed(&f, 3, &[1, 0, 0, 0, 0, 1, 0, 1, 0]);
    let p = Matrix::from_vec(3, 3, vec![1, 1, 1, 1, r2, r, 1, r, r2]);
    Ok(Fixture {
        sigma: linalg::mul(&f, &swap12, &swap23),
        conjugator: p,
        root_of_unity: r,
        root_vectors: vec![elementary(&f, 3, 0, 1), elementary(&f, 3, 1, 2)],
        torus,
        alpha_prime_model: elementary(&f, 3, 0, 1),
        algebra,
        field: f,
    })
}

/// `sp_4` for `x1 y4 + x2 y3 - x3 y2 - x4 y1`, `Sigma = s_beta s_gamma` for
/// `beta = e1 - e2`, `gamma = 2 e1`, `P` built from a primitive 8th root of
/// unity; `alpha'` corresponds to `2 e2`.
pub fn sp4(f: Fp) -> Result<Fixture, TransporterError> {
    let r = f.root_of_unity(8).ok_or(TransporterError::NonSplit { order: 8 })?;
    let rp = |k: u64| f.pow(&r, k);
    let algebra = MatrixLieAlgebra::preserving_form(f, &sp4_form(&f));
    let torus = algebra.diagonal_part();
    let s_beta = signed(&f, 4, &[0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0]);
    let s_gamma = signed(&f, 4, &[0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0]);
    let p = Matrix::from_vec(
        4,
        4,
        vec![1, 1, 1, 1, rp(1), rp(3), rp(5), rp(7), rp(3), rp(1), rp(7), rp(5), rp(2), rp(6), rp(2), rp(6)],
    );
    let x_beta = linalg::sub(&f, &elementary(&f, 4, 0, 1), &elementary(&f, 4, 2, 3));
    Ok(Fixture {
        sigma: linalg::mul(&f, &s_beta, &s_gamma),
        conjugator: p,
        root_of_unity: r,
        root_vectors: vec![x_beta, elementary(&f, 4, 0, 3)],
        torus,
        alpha_prime_model: elementary(&f, 4, 1, 2),
        algebra,
        field: f,
    })
}
