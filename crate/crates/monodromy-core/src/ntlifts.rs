//! Torus-normalizer lifts as explicit matrices in the standard
//! representations of `SL_n`, `Sp_2n` and `SO_m`, the determinant-square
//! test for sections into the double cover of `GL_n`, and fixed-space
//! dimensions of involutions on the adjoint module.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::chevalley::{ChevalleyAlgebra, ChevalleyError};
use crate::field::{Field, Fp};
use crate::linalg::{self, Matrix};
use crate::perm::Perm;
use crate::rootsys::{Family, RootSystem, RootSystemError};
use crate::transporter::{MatrixLieAlgebra, TransporterError};

/// Closures larger than this are not enumerated.
pub const CLOSURE_CAP: usize = 1_000_000;

/// Odd prime used for the explicit fixed-space counts; any odd prime gives
/// the same dimensions since the involutions are diagonal with entries `±1`.
pub const EXPLICIT_PRIME: u64 = 101;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NtError {
    #[error("permutation is odd")]
    OddPermutation,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("matrix does not satisfy the defining equations of {0:?}")]
    NotInGroup(GroupTag),
    #[error("matrix is not square or has the wrong size")]
    BadShape,
    #[error("group closure exceeds {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("no generators")]
    NoGenerators,
    #[error("need 0 < d < {n}, got d = {d}")]
    DOutOfRange { d: usize, n: usize },
    #[error("unsupported type {0}")]
    Unsupported(String),
    #[error(transparent)]
    Transporter(#[from] TransporterError),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupTag {
    SL,
    /// Form `x_1 y_2n + ... + x_n y_{n+1} - x_{n+1} y_n - ... - x_2n y_1`.
    Sp,
    /// Form `x_1 y_m + x_2 y_{m-1} + ... + x_m y_1`.
    SO,
}

/// Gram matrix of the tagged group's form on `k^size`; `None` for `SL`.
pub fn form(f: &Fp, group: GroupTag, size: usize) -> Option<Matrix<u64>> {
    match group {
        GroupTag::SL => None,
        GroupTag::Sp => {
            let n = size / 2;
            Some(Matrix::from_fn(size, size, |r, c| {
                if r + c + 1 != size {
                    0
                } else if r < n {
                    1
                } else {
                    f.elem(-1)
                }
            }))
        }
        GroupTag::SO => Some(Matrix::from_fn(size, size, |r, c| u64::from(r + c + 1 == size))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StdMatrix {
    pub matrix: Matrix<u64>,
    pub group: GroupTag,
}

impl StdMatrix {
    pub fn new(f: &Fp, matrix: Matrix<u64>, group: GroupTag) -> Result<Self, NtError> {
        if !matrix.is_square() || (group == GroupTag::Sp && !matrix.rows().is_multiple_of(2)) {
            return Err(NtError::BadShape);
        }
        let m = StdMatrix { matrix, group };
        if !m.satisfies(f) {
            return Err(NtError::NotInGroup(group));
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// `det = 1`, and `g^T J g = J` for the form groups.
    pub fn satisfies(&self, f: &Fp) -> bool {
        if linalg::det(f, &self.matrix) != 1 {
            return false;
        }
        match form(f, self.group, self.size()) {
            None => true,
            Some(j) => linalg::mul(f, &linalg::mul(f, &self.matrix.transpose(), &j), &self.matrix) == j,
        }
    }

    pub fn mul(&self, f: &Fp, other: &StdMatrix) -> StdMatrix {
        StdMatrix { matrix: linalg::mul(f, &self.matrix, &other.matrix), group: self.group }
    }

    /// The permutation of basis lines, if the matrix is monomial.
    pub fn monomial_perm(&self) -> Option<Perm> {
        let n = self.size();
        let images = (0..n)
            .map(|c| {
                let mut nonzero = (0..n).filter(|&r| *self.matrix.get(r, c) != 0);
                let r = nonzero.next()?;
                nonzero.next().is_none().then_some(r)
            })
            .collect::<Option<Vec<_>>>()?;
        Perm::from_images(images)
    }
}

fn permutation_matrix(n: usize, images: impl Fn(usize) -> usize) -> Matrix<u64> {
    let mut m = Matrix::from_fn(n, n, |_, _| 0);
    for c in 0..n {
        m.set(images(c), c, 1);
    }
    m
}

/// The permutation matrix `e_i -> e_{sigma(i)}` in `SL_n`.
pub fn even_perm_lift(f: &Fp, sigma: &Perm) -> Result<StdMatrix, NtError> {
    if !sigma.is_even() {
        return Err(NtError::OddPermutation);
    }
    StdMatrix::new(f, permutation_matrix(sigma.degree(), |c| sigma.apply(c)), GroupTag::SL)
}

fn check_odd_prime(l: u64) -> Result<Fp, NtError> {
    if l == 2 {
        return Err(NtError::NotOddPrime(l));
    }
    Fp::new(l).map_err(|_| NtError::NotOddPrime(l))
}

/// `e'_i` sits at index `2n - 1 - i`.
fn primed(n: usize, i: usize) -> usize {
    2 * n - 1 - i
}

/// `d_i`: `e_i -> -e'_i`, `e'_i -> e_i`, identity elsewhere.
pub fn sp_tilde_d_generators(n: usize, l: u64) -> Result<Vec<StdMatrix>, NtError> {
    let f = check_odd_prime(l)?;
    (0..n)
        .map(|i| {
            let size = 2 * n;
            let mut m = linalg::identity(&f, size);
            let ip = primed(n, i);
            m.set(i, i, 0);
            m.set(ip, ip, 0);
            m.set(ip, i, f.elem(-1));
            m.set(i, ip, 1);
            StdMatrix::new(&f, m, GroupTag::Sp)
        })
        .collect()
}

/// `sigma` permuting `e_1..e_n` and `e'_1..e'_n` by the same indices.
pub fn sp_sn_section(f: &Fp, sigma: &Perm) -> Result<StdMatrix, NtError> {
    let n = sigma.degree();
    let m = permutation_matrix(2 * n, |c| if c < n { sigma.apply(c) } else { primed(n, sigma.apply(primed(n, c))) });
    StdMatrix::new(f, m, GroupTag::Sp)
}

/// Enumerated closure of finitely many invertible matrices, with the
/// right-multiplication Cayley graph.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub elements: Vec<Matrix<u64>>,
    /// `edges[h][g]` is the index of `elements[h] * gens[g]`.
    pub edges: Vec<Vec<usize>>,
    index: HashMap<Vec<u64>, usize>,
}

impl MatrixGroup {
    pub fn generate(f: &Fp, gens: &[Matrix<u64>], cap: usize) -> Result<Self, NtError> {
        let first = gens.first().ok_or(NtError::NoGenerators)?;
        let id = linalg::identity(f, first.rows());
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id.data().to_vec(), 0usize)]);
        let mut edges: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(h) = queue.pop_front() {
            let mut row = Vec::with_capacity(gens.len());
            for g in gens {
                let prod = linalg::mul(f, &elements[h], g);
                let next = match index.get(prod.data()) {
                    Some(&k) => k,
                    None => {
                        if elements.len() >= cap {
                            return Err(NtError::ClosureTooLarge { cap });
                        }
                        let k = elements.len();
                        index.insert(prod.data().to_vec(), k);
                        elements.push(prod);
                        queue.push_back(k);
                        k
                    }
                };
                row.push(next);
            }
            if edges.len() <= h {
                edges.resize(h + 1, Vec::new());
            }
            edges[h] = row;
        }
        Ok(MatrixGroup { elements, edges, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Matrix<u64>) -> bool {
        self.index.contains_key(m.data())
    }
}

/// Derived subgroup: normal closure of the generator commutators.
pub fn derived_subgroup(f: &Fp, group: &MatrixGroup, gens: &[Matrix<u64>], cap: usize) -> Result<MatrixGroup, NtError> {
    let n = gens.first().ok_or(NtError::NoGenerators)?.rows();
    let inv: Vec<Matrix<u64>> =
        gens.iter().map(|g| linalg::inverse(f, g).expect("group elements are invertible")).collect();
    let mut comm: Vec<Matrix<u64>> = Vec::new();
    for (a, ai) in gens.iter().zip(&inv) {
        for (b, bi) in gens.iter().zip(&inv) {
            comm.push(linalg::mul(f, &linalg::mul(f, a, b), &linalg::mul(f, ai, bi)));
        }
    }
    comm.push(linalg::identity(f, n));
    let mut derived = MatrixGroup::generate(f, &comm, cap)?;
    loop {
        let extra = gens.iter().zip(&inv).find_map(|(g, gi)| {
            comm.iter()
                .map(|c| linalg::mul(f, &linalg::mul(f, g, c), gi))
                .find(|conj| !derived.contains(conj))
        });
        match extra {
            Some(m) => {
                comm.push(m);
                derived = MatrixGroup::generate(f, &comm, cap)?;
            }
            None => break,
        }
    }
    debug_assert!(derived.elements.iter().all(|m| group.contains(m)));
    Ok(derived)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DetSquareVerdict {
    pub has_section: bool,
    pub order: usize,
    pub abelianization_order: usize,
    /// `chi(g)` on each generator, with `chi^2 = det` on the whole group.
    pub witness: Option<Vec<u64>>,
}

/// Whether `det` restricted to `<gens>` is the square of an `F_l^x`-valued
/// character. Characters are determined by their values on generators, so
/// each choice of square roots is propagated along the Cayley graph and
/// checked on every edge.
pub fn det_square_criterion(f: &Fp, gens: &[Matrix<u64>], cap: usize) -> Result<DetSquareVerdict, NtError> {
    let group = MatrixGroup::generate(f, gens, cap)?;
    let derived = derived_subgroup(f, &group, gens, cap)?;
    let abelianization_order = group.order() / derived.order();
    let dets: Vec<u64> = gens.iter().map(|g| linalg::det(f, g)).collect();
    let roots: Option<Vec<u64>> = dets.iter().map(|d| f.sqrt(*d)).collect();
    let mut verdict = DetSquareVerdict { has_section: false, order: group.order(), abelianization_order, witness: None };
    let Some(roots) = roots else {
        return Ok(verdict);
    };
    let r = gens.len();
    for mask in 0u64..(1 << r) {
        let values: Vec<u64> =
            (0..r).map(|i| if mask >> i & 1 == 1 { f.neg(&roots[i]) } else { roots[i] }).collect();
        if let Some(chi) = propagate(f, &group, &values) {
            debug_assert!(group.elements.iter().zip(&chi).all(|(m, c)| f.mul(c, c) == linalg::det(f, m)));
            verdict.has_section = true;
            verdict.witness = Some(values);
            return Ok(verdict);
        }
    }
    Ok(verdict)
}

/// The homomorphism with the given generator values, if consistent.
fn propagate(f: &Fp, group: &MatrixGroup, values: &[u64]) -> Option<Vec<u64>> {
    let mut chi = vec![0u64; group.order()];
    chi[0] = 1;
    let mut seen = vec![false; group.order()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(h) = queue.pop_front() {
        for (g, &next) in group.edges[h].iter().enumerate() {
            let value = f.mul(&chi[h], &values[g]);
            if seen[next] {
                if chi[next] != value {
                    return None;
                }
            } else {
                seen[next] = true;
                chi[next] = value;
                queue.push_back(next);
            }
        }
    }
    Some(chi)
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// `n` with `0 < d < n` for the family: `A_{n-1}` uses `n = rank + 1`.
fn d_bound(family: Family, rank: usize) -> Result<usize, NtError> {
    match family {
        Family::A => Ok(rank + 1),
        Family::B | Family::C | Family::D => Ok(rank),
        _ => Err(NtError::Unsupported(format!("{family}{rank}"))),
    }
}

/// Number of root vectors fixed by the involution with `d` eigenvalues `+1`
/// among the first `n` coordinates.
pub fn fixed_root_count(family: Family, rank: usize, d: usize) -> Result<usize, NtError> {
    let n = d_bound(family, rank)?;
    if d == 0 || d >= n {
        return Err(NtError::DOutOfRange { d, n });
    }
    let base = choose2(d) + choose2(n - d);
    Ok(match family {
        Family::A => 2 * base,
        Family::B => 4 * base + 2 * d,
        Family::C => 4 * base + 2 * n,
        _ => 4 * base,
    })
}

/// The involution `diag(eps, [1,] reversed eps)` with `eps = (1^d, (-1)^{n-d})`,
/// and the matrix algebra it acts on.
pub fn explicit_involution(f: Fp, family: Family, rank: usize, d: usize) -> Result<(MatrixLieAlgebra, Matrix<u64>), NtError> {
    let n = d_bound(family, rank)?;
    let minus = f.elem(-1);
    let eps: Vec<u64> = (0..n).map(|i| if i < d { 1 } else { minus }).collect();
    let mirrored = |middle: Option<u64>| {
        let mut v = eps.clone();
        v.extend(middle);
        v.extend(eps.iter().rev());
        v
    };
    let (diag, alg) = match family {
        Family::A => (eps.clone(), MatrixLieAlgebra::sl(f, n)),
        Family::B => {
            let size = 2 * n + 1;
            (mirrored(Some(1)), MatrixLieAlgebra::preserving_form(f, &form(&f, GroupTag::SO, size).expect("form")))
        }
        Family::C => (mirrored(None), MatrixLieAlgebra::preserving_form(f, &form(&f, GroupTag::Sp, 2 * n).expect("form"))),
        _ => (mirrored(None), MatrixLieAlgebra::preserving_form(f, &form(&f, GroupTag::SO, 2 * n).expect("form"))),
    };
    Ok((alg, linalg::diagonal(&f, &diag)))
}

/// `dim ker(Ad c - 1)` for the explicit involution, any `d`.
pub fn explicit_fixed_dim(family: Family, rank: usize, d: usize) -> Result<usize, NtError> {
    let f = Fp::new(EXPLICIT_PRIME).expect("prime");
    let (alg, c) = explicit_involution(f, family, rank, d)?;
    let ad = alg.conjugation(&c)?;
    Ok(linalg::nullity(&f, &linalg::shift(&f, ad.matrix(), &1)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RealH0 {
    pub d: usize,
    /// `rank + f` with `f` from the closed form.
    pub formula: usize,
    /// Fixed space of the explicit involution matrix.
    pub explicit: usize,
}

impl RealH0 {
    pub fn agree(&self) -> bool {
        self.formula == self.explicit
    }
}

pub fn real_h0_classical(family: Family, rank: usize, d: usize) -> Result<RealH0, NtError> {
    let formula = rank + fixed_root_count(family, rank, d)?;
    let explicit = explicit_fixed_dim(family, rank, d)?;
    Ok(RealH0 { d, formula, explicit })
}

/// Maximum over `0 < d < n`; ties resolved towards larger `d`.
pub fn real_h0_max(family: Family, rank: usize) -> Result<RealH0, NtError> {
    let n = d_bound(family, rank)?;
    let mut best: Option<RealH0> = None;
    for d in 1..n {
        let h = real_h0_classical(family, rank, d)?;
        if best.map(|b| h.formula >= b.formula).unwrap_or(true) {
            best = Some(h);
        }
    }
    best.ok_or(NtError::DOutOfRange { d: 0, n })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E7RealBound {
    /// Order-2 torus elements acting nontrivially on the `A7` root spaces.
    pub candidates: usize,
    /// Least `-1`-eigenspace dimension on the `A7` root spaces over all candidates.
    pub min_minus_on_a7: usize,
    /// Least `2d(8 - d)` over `0 < d < 8`: the `-1` count of any nontrivial
    /// diagonal involution of `sl_8`.
    pub guaranteed_minus: usize,
    /// Largest fixed-space dimension on the whole algebra.
    pub max_h0: usize,
    /// `7 + 126 - guaranteed_minus`.
    pub bound: usize,
}

impl E7RealBound {
    pub fn holds(&self) -> bool {
        self.min_minus_on_a7 >= self.guaranteed_minus && self.max_h0 <= self.bound
    }
}

/// Runs over every `Ad` of a torus element with simple-root values `±1`.
pub fn e7_real_bound_check(l: u64) -> Result<E7RealBound, NtError> {
    let f = check_odd_prime(l)?;
    let sys = std::sync::Arc::new(RootSystem::new(Family::E, 7)?);
    let a7 = sys.e7_a7()?;
    let alg = ChevalleyAlgebra::new(sys.clone(), f)?;
    let minus = f.elem(-1);
    let guaranteed_minus = (1..8).map(|d| 2 * d * (8 - d)).min().unwrap_or(0);
    let mut out = E7RealBound { candidates: 0, min_minus_on_a7: usize::MAX, guaranteed_minus, max_h0: 0, bound: 0 };
    for mask in 1u32..(1 << 7) {
        let t: Vec<u64> = (0..7).map(|i| if mask >> i & 1 == 1 { minus } else { 1 }).collect();
        let ad = alg.ad_torus(&t)?;
        let on_a7 = a7.roots.iter().filter(|&&r| *ad.matrix().get(alg.root_index(r), alg.root_index(r)) == minus).count();
        if on_a7 == 0 {
            continue;
        }
        out.candidates += 1;
        out.min_minus_on_a7 = out.min_minus_on_a7.min(on_a7);
        let h0 = linalg::nullity(&f, &linalg::shift(&f, ad.matrix(), &1));
        out.max_h0 = out.max_h0.max(h0);
    }
    out.bound = 7 + sys.num_roots() - guaranteed_minus;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Fp {
        Fp::new(73).unwrap()
    }

    #[test]
    fn forms_are_nondegenerate_with_the_right_symmetry() {
        let f = f();
        let sp = form(&f, GroupTag::Sp, 6).unwrap();
        assert_eq!(sp.transpose(), linalg::scale(&f, &f.elem(-1), &sp));
        let so = form(&f, GroupTag::SO, 5).unwrap();
        assert_eq!(so.transpose(), so);
        assert_ne!(linalg::det(&f, &sp), 0);
    }

    #[test]
    fn odd_permutation_rejected() {
        let t = Perm::from_images(vec![1, 0, 2]).unwrap();
        assert_eq!(even_perm_lift(&f(), &t).unwrap_err(), NtError::OddPermutation);
    }

    #[test]
    fn d_range() {
        assert!(fixed_root_count(Family::A, 3, 0).is_err());
        assert!(fixed_root_count(Family::A, 3, 4).is_err());
        assert_eq!(fixed_root_count(Family::A, 3, 3).unwrap(), 6);
        assert!(sp_tilde_d_generators(2, 2).is_err());
    }
}
