//! Reduced irreducible root systems in simple-root coordinates (Bourbaki
//! labelling), Weyl-group permutation actions and the finite subgroups of
//! the Weyl group used by the normalizer constructions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{orbits, Perm, StabChain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = RootSystemError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(RootSystemError::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LengthClass {
    Long,
    Short,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("unknown Lie type family {0:?}")]
    UnknownFamily(String),
    #[error("no root system of type {family}{rank}")]
    InvalidRank { family: Family, rank: usize },
    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("{0} is not a root of this system")]
    NotARoot(String),
    #[error("the alternating-type subgroup is only defined for classical types and E7, not {0}")]
    Unsupported(String),
}

/// A root system. Positive roots are ordered by height, then
/// lexicographically on coordinates; root `N + k` is the negative of
/// positive root `k`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    /// Scaled symmetric form on simple roots; off-diagonal entries are
    /// `-max_norm / 2` on edges of the Dynkin diagram.
    form: Vec<Vec<i32>>,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Vec<i32>>,
    norms: Vec<i32>,
    max_norm: i32,
    index: HashMap<Vec<i32>, usize>,
    n_pos: usize,
    simple: Vec<usize>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let (norms, edges) = dynkin(family, rank)?;
        let max_norm = *norms.iter().max().expect("rank is positive");
        let mut form = vec![vec![0i32; rank]; rank];
        for i in 0..rank {
            form[i][i] = norms[i];
        }
        for &(i, j) in &edges {
            let v = -norms[i].max(norms[j]) / 2;
            form[i][j] = v;
            form[j][i] = v;
        }
        let cartan: Vec<Vec<i32>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * form[i][j] / form[j][j]).collect())
            .collect();

        let mut positive: Vec<Vec<i32>> = Vec::new();
        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut queue: Vec<Vec<i32>> = (0..rank)
            .map(|i| (0..rank).map(|j| (i == j) as i32).collect())
            .collect();
        while let Some(r) = queue.pop() {
            if seen.contains_key(&r) {
                continue;
            }
            seen.insert(r.clone(), ());
            if r.iter().all(|&c| c >= 0) {
                positive.push(r.clone());
            }
            for i in 0..rank {
                let pairing: i32 = (0..rank).map(|k| r[k] * cartan[k][i]).sum();
                let mut s = r.clone();
                s[i] -= pairing;
                if !seen.contains_key(&s) {
                    queue.push(s);
                }
            }
        }
        positive.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let n_pos = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let index: HashMap<Vec<i32>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let norms_all: Vec<i32> = roots
            .iter()
            .map(|r| {
                (0..rank)
                    .flat_map(|i| (0..rank).map(move |j| (i, j)))
                    .map(|(i, j)| r[i] * r[j] * form[i][j])
                    .sum()
            })
            .collect();
        let simple = (0..rank)
            .map(|i| {
                let e: Vec<i32> = (0..rank).map(|j| (i == j) as i32).collect();
                index[&e]
            })
            .collect();
        Ok(RootSystem {
            family,
            rank,
            form,
            cartan,
            roots,
            norms: norms_all,
            max_norm,
            index,
            n_pos,
            simple,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn roots(&self) -> &[Vec<i32>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i32] {
        &self.roots[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    pub fn index_of(&self, coords: &[i32]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Root index of `alpha_i` (0-based simple index).
    pub fn simple_root(&self, i: usize) -> Result<usize, RootSystemError> {
        self.simple
            .get(i)
            .copied()
            .ok_or(RootSystemError::IndexOutOfRange { index: i, rank: self.rank })
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn height(&self, i: usize) -> i32 {
        self.roots[i].iter().sum()
    }

    /// `cartan()[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn symmetric_form(&self) -> &[Vec<i32>] {
        &self.form
    }

    /// Scaled `(alpha, alpha)`; long roots have norm `max_norm()`.
    pub fn norm(&self, i: usize) -> i32 {
        self.norms[i]
    }

    pub fn max_norm(&self) -> i32 {
        self.max_norm
    }

    /// `(alpha, alpha)` normalized so that long roots have squared length 2.
    pub fn squared_length(&self, i: usize) -> num_rational::Ratio<i32> {
        num_rational::Ratio::new(2 * self.norms[i], self.max_norm)
    }

    pub fn length_class(&self, i: usize) -> LengthClass {
        if self.norms[i] == self.max_norm {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        self.norms.iter().all(|&n| n == self.max_norm)
    }

    /// Scaled inner product of two coordinate vectors.
    pub fn inner_coords(&self, a: &[i32], b: &[i32]) -> i32 {
        let mut acc = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                acc += a[i] * b[j] * self.form[i][j];
            }
        }
        acc
    }

    pub fn inner(&self, i: usize, j: usize) -> i32 {
        self.inner_coords(&self.roots[i], &self.roots[j])
    }

    /// `<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)`.
    pub fn pairing(&self, beta: usize, alpha: usize) -> i32 {
        2 * self.inner(beta, alpha) / self.norms[alpha]
    }

    /// `<beta, alpha_i^vee>` for a simple index `i`.
    pub fn simple_pairing(&self, beta: usize, i: usize) -> i32 {
        (0..self.rank).map(|k| self.roots[beta][k] * self.cartan[k][i]).sum()
    }

    /// `alpha + beta` as a root index.
    pub fn add(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i32> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.index_of(&s)
    }

    pub fn sub(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i32> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x - y).collect();
        self.index_of(&s)
    }

    /// `s_alpha(beta) = beta - <beta, alpha^vee> alpha`.
    pub fn reflect(&self, beta: usize, alpha: usize) -> usize {
        let c = self.pairing(beta, alpha);
        let img: Vec<i32> = self.roots[beta]
            .iter()
            .zip(&self.roots[alpha])
            .map(|(b, a)| b - c * a)
            .collect();
        self.index[&img]
    }

    pub fn reflection_perm(&self, alpha: usize) -> Perm {
        Perm::from_images((0..self.num_roots()).map(|b| self.reflect(b, alpha)).collect())
            .expect("reflections permute the roots")
    }

    pub fn simple_reflection(&self, i: usize) -> Result<Perm, RootSystemError> {
        Ok(self.reflection_perm(self.simple_root(i)?))
    }

    pub fn weyl_generators(&self) -> Vec<Perm> {
        self.simple.iter().map(|&a| self.reflection_perm(a)).collect()
    }

    pub fn weyl_order(&self) -> u128 {
        StabChain::new(self.num_roots(), &self.weyl_generators(), &[]).order()
    }

    /// Coordinates of `alpha^vee` in the basis of simple coroots.
    pub fn coroot_coords(&self, alpha: usize) -> Vec<i32> {
        let n = self.norms[alpha];
        (0..self.rank)
            .map(|k| {
                let num = self.roots[alpha][k] * self.form[k][k];
                debug_assert_eq!(num % n, 0);
                num / n
            })
            .collect()
    }

    pub fn highest_root(&self) -> usize {
        self.n_pos - 1
    }

    pub fn coxeter_number(&self) -> usize {
        self.height(self.highest_root()) as usize + 1
    }

    /// Twice the coordinates of `rho^vee` in the simple-coroot basis; the
    /// `i`-th entry is the sum of the `alpha_i^vee` coefficients over all
    /// positive coroots.
    pub fn two_rho_coroot(&self) -> Vec<i64> {
        let mut acc = vec![0i64; self.rank];
        for a in 0..self.n_pos {
            for (k, c) in self.coroot_coords(a).into_iter().enumerate() {
                acc[k] += c as i64;
            }
        }
        acc
    }

    /// `rho^vee` in the coroot lattice, if it lies there.
    pub fn rho_coroot_integral(&self) -> Option<Vec<i64>> {
        let two = self.two_rho_coroot();
        two.iter().all(|c| c % 2 == 0).then(|| two.iter().map(|c| c / 2).collect())
    }

    pub fn exponents_by_height(&self) -> Vec<usize> {
        let h = self.coxeter_number();
        let mut count = vec![0usize; h + 1];
        for a in 0..self.n_pos {
            count[self.height(a) as usize] += 1;
        }
        let mut out = Vec::new();
        for m in 1..h {
            let drop = count[m] - count.get(m + 1).copied().unwrap_or(0);
            out.extend(std::iter::repeat_n(m, drop));
        }
        out
    }

    /// Product of reflections as a permutation; `word[0]` is applied last.
    pub fn word_perm(&self, word: &WeylWord) -> Perm {
        let mut acc = Perm::identity(self.num_roots());
        for &r in word.0.iter().rev() {
            acc = acc.then(&self.reflection_perm(r));
        }
        acc
    }

    /// Root index of a classical root given in the standard `e_i` basis.
    pub fn from_epsilon(&self, e: &[i32]) -> Result<usize, RootSystemError> {
        let n = self.rank;
        let bad = || RootSystemError::NotARoot(format!("{e:?}"));
        let partial = |k: usize| -> i32 { e[..=k].iter().sum() };
        let coords: Vec<i32> = match self.family {
            Family::A => {
                if e.len() != n + 1 || e.iter().sum::<i32>() != 0 {
                    return Err(bad());
                }
                (0..n).map(partial).collect()
            }
            Family::B => {
                if e.len() != n {
                    return Err(bad());
                }
                (0..n).map(partial).collect()
            }
            Family::C => {
                if e.len() != n {
                    return Err(bad());
                }
                let total = partial(n - 1);
                if total % 2 != 0 {
                    return Err(bad());
                }
                let mut c: Vec<i32> = (0..n - 1).map(partial).collect();
                c.push(total / 2);
                c
            }
            Family::D => {
                if e.len() != n {
                    return Err(bad());
                }
                let head = if n >= 3 { partial(n - 3) } else { 0 };
                let twice_last = e[n - 2] + e[n - 1] + head;
                if twice_last % 2 != 0 {
                    return Err(bad());
                }
                let c_n = twice_last / 2;
                let mut c: Vec<i32> = (0..n - 2).map(partial).collect();
                c.push(c_n - e[n - 1]);
                c.push(c_n);
                c
            }
            _ => return Err(RootSystemError::Unsupported(self.name())),
        };
        self.index_of(&coords).ok_or_else(bad)
    }

    fn epsilon_root(&self, pairs: &[(usize, i32)]) -> usize {
        let len = if self.family == Family::A { self.rank + 1 } else { self.rank };
        let mut e = vec![0i32; len];
        for &(i, c) in pairs {
            e[i] += c;
        }
        self.from_epsilon(&e).expect("classical root")
    }

    /// Words generating the alternating-type subgroup `W'` of the Weyl group:
    /// the even permutations of the `e_i` (for `A` and the permutation part
    /// of `B`, `C`, `D`) together with the sign-change group, and the
    /// alternating group `A_8` inside `W(E7)`.
    pub fn alternating_words(&self) -> Result<Vec<WeylWord>, RootSystemError> {
        let n = self.rank;
        let letters = match self.family {
            Family::A => n + 1,
            Family::B | Family::C | Family::D => n,
            Family::E if n == 7 => {
                let a7 = self.e7_a7()?;
                let r0 = a7.simple[0];
                return Ok(a7.simple[1..].iter().map(|&rj| WeylWord(vec![r0, rj])).collect());
            }
            _ => return Err(RootSystemError::Unsupported(self.name())),
        };
        let t = |i: usize, j: usize| self.epsilon_root(&[(i, 1), (j, -1)]);
        let mut words: Vec<WeylWord> = (2..letters).map(|k| WeylWord(vec![t(0, 1), t(1, k)])).collect();
        match self.family {
            Family::B => words.extend((0..n).map(|i| WeylWord(vec![self.epsilon_root(&[(i, 1)])]))),
            Family::C => words.extend((0..n).map(|i| WeylWord(vec![self.epsilon_root(&[(i, 2)])]))),
            Family::D => words.extend((0..n - 1).map(|i| {
                WeylWord(vec![t(i, i + 1), self.epsilon_root(&[(i, 1), (i + 1, 1)])])
            })),
            _ => {}
        }
        Ok(words)
    }

    pub fn alternating_generators(&self) -> Result<Vec<Perm>, RootSystemError> {
        Ok(self.alternating_words()?.iter().map(|w| self.word_perm(w)).collect())
    }

    /// Words generating the subgroup `W'` that the restricted normalizer
    /// construction uses: the alternating-type subgroup, except that `B2`
    /// and `C_n` use the whole Weyl group.
    pub fn construction_words(&self) -> Result<Vec<WeylWord>, RootSystemError> {
        match (self.family, self.rank) {
            (Family::B, 2) | (Family::C, _) => {
                Ok(self.simple.iter().map(|&a| WeylWord(vec![a])).collect())
            }
            _ => self.alternating_words(),
        }
    }

    /// The `A7` subsystem of `E7` obtained from the extended diagram by
    /// deleting `alpha_2`.
    pub fn e7_a7(&self) -> Result<A7Subsystem, RootSystemError> {
        if (self.family, self.rank) != (Family::E, 7) {
            return Err(RootSystemError::Unsupported(self.name()));
        }
        let minus_theta = self.negate(self.highest_root());
        let mut simple = vec![minus_theta];
        for i in [0usize, 2, 3, 4, 5, 6] {
            simple.push(self.simple[i]);
        }
        let refl: Vec<Perm> = simple.iter().map(|&a| self.reflection_perm(a)).collect();
        let mut in_sub = vec![false; self.num_roots()];
        let mut roots = Vec::new();
        for orbit in orbits(self.num_roots(), &refl) {
            if orbit.iter().any(|r| simple.contains(r)) {
                for &r in &orbit {
                    in_sub[r] = true;
                }
                roots.extend(orbit);
            }
        }
        roots.sort_unstable();
        let complement = (0..self.num_roots()).filter(|&r| !in_sub[r]).collect();
        Ok(A7Subsystem { simple, roots, complement, outside: self.simple[1] })
    }
}

/// Product of reflections `s_{r_0} s_{r_1} ... s_{r_k}` in roots given by
/// index; `r_k` acts first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn from_simple(system: &RootSystem, simple: &[usize]) -> Result<Self, RootSystemError> {
        simple.iter().map(|&i| system.simple_root(i)).collect::<Result<_, _>>().map(WeylWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct A7Subsystem {
    /// Chain order `-theta, alpha_1, alpha_3, ..., alpha_7`.
    pub simple: Vec<usize>,
    pub roots: Vec<usize>,
    pub complement: Vec<usize>,
    /// `alpha_2`.
    pub outside: usize,
}

/// Norms of the simple roots (scaled) and the edges of the Dynkin diagram,
/// both 0-indexed in Bourbaki order.
fn dynkin(family: Family, rank: usize) -> Result<(Vec<i32>, Vec<(usize, usize)>), RootSystemError> {
    let invalid = Err(RootSystemError::InvalidRank { family, rank });
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match family {
        Family::A if rank >= 1 => Ok((vec![2; rank], chain(rank))),
        Family::B if rank >= 2 => {
            let mut norms = vec![4; rank];
            norms[rank - 1] = 2;
            Ok((norms, chain(rank)))
        }
        Family::C if rank >= 2 => {
            let mut norms = vec![2; rank];
            norms[rank - 1] = 4;
            Ok((norms, chain(rank)))
        }
        Family::D if rank >= 3 => {
            let mut edges = chain(rank - 1);
            edges.push((rank - 3, rank - 1));
            Ok((vec![2; rank], edges))
        }
        Family::E if (6..=8).contains(&rank) => {
            let all = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
            let edges = all.iter().copied().filter(|&(i, j)| i < rank && j < rank).collect();
            Ok((vec![2; rank], edges))
        }
        Family::F if rank == 4 => Ok((vec![4, 4, 2, 2], chain(4))),
        Family::G if rank == 2 => Ok((vec![2, 6], chain(2))),
        _ => invalid,
    }
}

/// Types for which `rho^vee` lies in the coroot lattice.
pub fn rho_coroot_is_integral(family: Family, rank: usize) -> bool {
    match family {
        Family::A => rank.is_multiple_of(2),
        Family::B => rank.is_multiple_of(4) || rank % 4 == 3,
        Family::C => false,
        Family::D => rank.is_multiple_of(4) || rank % 4 == 1,
        Family::E => rank == 6 || rank == 8,
        Family::F | Family::G => true,
    }
}

/// Every valid `(family, rank)` with rank at most `max_rank`.
pub fn all_types(max_rank: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if dynkin(family, rank).is_ok() {
                out.push((family, rank));
            }
        }
    }
    out
}
