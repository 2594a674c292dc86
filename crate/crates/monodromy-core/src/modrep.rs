//! Invariant subspaces of the adjoint module under a finite set of
//! automorphisms over `F_l`: spinning, decomposition into irreducibles with
//! certificates, and the eigenvalue test separating summands from their
//! Tate twists.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::chevalley::{Automorphism, ChevalleyAlgebra, ChevalleyError, LieBracket};
use crate::field::{Field, Fp};
use crate::linalg::{self, Matrix, Subspace};
use crate::perm::{orbits, Perm};
use crate::poly;
use crate::rootsys::{Family, RootSystemError, WeylWord};

/// Random algebra elements tried by the Norton test before giving up.
pub const NORTON_BUDGET: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModrepError {
    #[error("action set has no generators")]
    EmptyAction,
    #[error("generator {0} has dimension {1}, expected {2}")]
    DimensionMismatch(String, usize, usize),
    #[error("cannot spin the zero vector")]
    ZeroVector,
    #[error("subspace is not invariant under generator {0}")]
    NotInvariant(String),
    #[error("torus generator {0} is not diagonal")]
    TorusNotDiagonal(String),
    #[error("generator {0} does not permute the torus weight spaces")]
    WeightsNotPermuted(String),
    #[error("irreducibility inconclusive after {0} random elements")]
    Inconclusive(usize),
    #[error("could not split a reducible summand into a direct sum (dimension {0})")]
    Indecomposable(usize),
    #[error("no designated twist test elements for this action")]
    NoTwistElements,
    #[error("twist scalar must be nonzero")]
    ZeroTwist,
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GeneratorKind {
    Torus,
    WeylLift,
    Involution,
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub label: String,
    pub auto: Automorphism<u64>,
}

/// Elements whose spectra separate summands from their twists.
#[derive(Clone, Debug)]
pub struct TwistElements {
    /// Order 2 in the Weyl image.
    pub sigma: Automorphism<u64>,
    /// Torus element with every simple root value equal to a generator of `F_l^*`.
    pub tau: Automorphism<u64>,
}

#[derive(Clone, Debug)]
pub struct ActionSet {
    field: Fp,
    dim: usize,
    generators: Vec<Generator>,
    twist: Option<TwistElements>,
}

impl ActionSet {
    pub fn new(field: Fp, generators: Vec<Generator>) -> Result<Self, ModrepError> {
        let dim = generators.first().ok_or(ModrepError::EmptyAction)?.auto.dim();
        for g in &generators {
            if g.auto.dim() != dim {
                return Err(ModrepError::DimensionMismatch(g.label.clone(), g.auto.dim(), dim));
            }
        }
        Ok(ActionSet { field, dim, generators, twist: None })
    }

    pub fn with_twist(mut self, twist: TwistElements) -> Self {
        self.twist = Some(twist);
        self
    }

    pub fn field(&self) -> &Fp {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn twist(&self) -> Option<&TwistElements> {
        self.twist.as_ref()
    }
}

/// An invariant subspace in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    space: Subspace<u64>,
}

impl Submodule {
    pub fn from_space(space: Subspace<u64>) -> Self {
        Submodule { space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        self.space.basis()
    }

    pub fn space(&self) -> &Subspace<u64> {
        &self.space
    }

    pub fn contains(&self, f: &Fp, v: &[u64]) -> bool {
        self.space.contains(f, v)
    }

    fn first_pivot(&self) -> usize {
        self.space.pivots().first().copied().unwrap_or(usize::MAX)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    OneDimensional,
    /// Distinct one-dimensional weight lines permuted transitively.
    WeightTransitive { lines: usize },
    /// Norton: for an irreducible factor `p` of the characteristic
    /// polynomial of `theta` with `dim ker p(theta) = deg p`, a kernel vector
    /// spins to the whole module, and so does a kernel vector of
    /// `p(theta)^T` under the transposes.
    Norton { factor: Vec<u64>, attempt: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(Certificate),
    Reducible { witness: Submodule },
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Submodule>,
    pub certificates: Vec<Certificate>,
}

impl Decomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.dim()).collect()
    }
}

fn spin_with(f: &Fp, mats: &[&Matrix<u64>], start: &[Vec<u64>], ambient: usize) -> Subspace<u64> {
    let mut space = Subspace::zero(ambient);
    let mut queue: Vec<Vec<u64>> = Vec::new();
    for v in start {
        if space.insert(f, v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for m in mats {
            let w = linalg::mat_vec(f, m, &v);
            if space.insert(f, &w) {
                queue.push(w);
            }
        }
        if space.dim() == ambient {
            break;
        }
    }
    space
}

/// Smallest invariant subspace containing `v`.
pub fn spin(action: &ActionSet, v: &[u64]) -> Result<Submodule, ModrepError> {
    let f = action.field();
    if linalg::is_zero_vec(f, v) {
        return Err(ModrepError::ZeroVector);
    }
    if v.len() != action.dim() {
        return Err(ModrepError::DimensionMismatch("vector".into(), v.len(), action.dim()));
    }
    let mats: Vec<&Matrix<u64>> = action.generators().iter().map(|g| g.auto.matrix()).collect();
    Ok(Submodule { space: spin_with(f, &mats, &[v.to_vec()], action.dim()) })
}

pub fn check_invariant(m: &Submodule, action: &ActionSet) -> Result<(), ModrepError> {
    let f = action.field();
    for g in action.generators() {
        for b in m.basis() {
            if !m.contains(f, &g.auto.apply(f, b)) {
                return Err(ModrepError::NotInvariant(g.label.clone()));
            }
        }
    }
    Ok(())
}

/// Matrix of `g` restricted to the invariant subspace `m`, in the
/// coordinates of `m`'s echelon basis.
fn restrict(f: &Fp, m: &Subspace<u64>, g: &Generator) -> Result<Matrix<u64>, ModrepError> {
    let cols = m
        .basis()
        .iter()
        .map(|b| m.coordinates(f, &g.auto.apply(f, b)).ok_or_else(|| ModrepError::NotInvariant(g.label.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_columns(m.dim(), &cols))
}

/// Basis indices grouped by their tuple of torus-generator eigenvalues,
/// and the permutation of those classes induced by each other generator.
struct WeightData {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    perms: Vec<Perm>,
}

fn weight_data(action: &ActionSet) -> Result<WeightData, ModrepError> {
    let f = action.field();
    let n = action.dim();
    let mut keys: Vec<Vec<u64>> = vec![Vec::new(); n];
    for g in action.generators().iter().filter(|g| g.kind == GeneratorKind::Torus) {
        if !linalg::is_diagonal(f, g.auto.matrix()) {
            return Err(ModrepError::TorusNotDiagonal(g.label.clone()));
        }
        for (i, k) in keys.iter_mut().enumerate() {
            k.push(*g.auto.matrix().get(i, i));
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    let mut seen: std::collections::HashMap<Vec<u64>, usize> = std::collections::HashMap::new();
    for (i, k) in keys.into_iter().enumerate() {
        let c = *seen.entry(k).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(i);
        class_of[i] = c;
    }
    let mut perms = Vec::new();
    for g in action.generators().iter().filter(|g| g.kind != GeneratorKind::Torus) {
        let mut images = Vec::with_capacity(classes.len());
        for class in &classes {
            let mut target: Option<usize> = None;
            for &j in class {
                for r in 0..n {
                    if f.is_zero(g.auto.matrix().get(r, j)) {
                        continue;
                    }
                    match target {
                        None => target = Some(class_of[r]),
                        Some(t) if t == class_of[r] => {}
                        Some(_) => return Err(ModrepError::WeightsNotPermuted(g.label.clone())),
                    }
                }
            }
            images.push(target.ok_or_else(|| ModrepError::WeightsNotPermuted(g.label.clone()))?);
        }
        perms.push(Perm::from_images(images).ok_or_else(|| ModrepError::WeightsNotPermuted(g.label.clone()))?);
    }
    Ok(WeightData { classes, class_of, perms })
}

/// Weight-orbit test first, then Norton's criterion with a seeded random
/// element of the group algebra.
pub fn check_irreducible(m: &Submodule, action: &ActionSet, seed: u64) -> Result<Irreducibility, ModrepError> {
    let f = action.field();
    check_invariant(m, action)?;
    if m.dim() == 0 {
        return Err(ModrepError::ZeroVector);
    }
    if m.dim() == 1 {
        return Ok(Irreducibility::Irreducible(Certificate::OneDimensional));
    }
    let wd = weight_data(action)?;
    let n = action.dim();
    let mut components: Vec<(usize, Subspace<u64>)> = Vec::new();
    for (c, class) in wd.classes.iter().enumerate() {
        let piece = m.space().intersection(f, &Subspace::coordinate(f, n, class));
        if piece.dim() > 0 {
            components.push((c, piece));
        }
    }
    let total: usize = components.iter().map(|(_, s)| s.dim()).sum();
    if total != m.dim() {
        return Err(ModrepError::NotInvariant("torus".into()));
    }
    let present: Vec<usize> = components.iter().map(|(c, _)| *c).collect();
    let local: Vec<Perm> = wd
        .perms
        .iter()
        .map(|p| {
            Perm::from_images(
                present.iter().map(|c| present.iter().position(|d| *d == p.apply(*c)).expect("m is invariant")).collect(),
            )
            .expect("restriction of a permutation")
        })
        .collect();
    let orbs = orbits(present.len(), &local);
    if orbs.len() > 1 {
        let mut witness = Subspace::zero(n);
        for &k in &orbs[0] {
            witness = witness.sum(f, &components[k].1);
        }
        return Ok(Irreducibility::Reducible { witness: Submodule { space: witness } });
    }
    if components.iter().all(|(_, s)| s.dim() == 1) {
        return Ok(Irreducibility::Irreducible(Certificate::WeightTransitive { lines: components.len() }));
    }
    norton(m, action, seed)
}

fn norton(m: &Submodule, action: &ActionSet, seed: u64) -> Result<Irreducibility, ModrepError> {
    let f = action.field();
    let d = m.dim();
    let mats = action
        .generators()
        .iter()
        .map(|g| restrict(f, m.space(), g))
        .collect::<Result<Vec<_>, _>>()?;
    let transposes: Vec<Matrix<u64>> = mats.iter().map(|x| x.transpose()).collect();
    let mat_refs: Vec<&Matrix<u64>> = mats.iter().collect();
    let tr_refs: Vec<&Matrix<u64>> = transposes.iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..NORTON_BUDGET {
        let theta = random_algebra_element(f, &mats, &mut rng);
        for (factor, evaluated) in irreducible_factor_values(f, &theta) {
            let kernel = linalg::nullspace(f, &evaluated);
            if kernel.len() != factor.len() - 1 {
                continue;
            }
            let sub = spin_with(f, &mat_refs, &kernel[..1], d);
            if sub.dim() < d {
                let vecs: Vec<Vec<u64>> = sub.basis().iter().map(|c| m.space().from_coordinates(f, c)).collect();
                return Ok(Irreducibility::Reducible {
                    witness: Submodule { space: Subspace::from_vectors(f, action.dim(), &vecs) },
                });
            }
            let dual_kernel = linalg::nullspace(f, &evaluated.transpose());
            let dual = spin_with(f, &tr_refs, &dual_kernel[..1], d);
            if dual.dim() < d {
                let ann = dual.annihilator(f);
                let vecs: Vec<Vec<u64>> = ann.basis().iter().map(|c| m.space().from_coordinates(f, c)).collect();
                return Ok(Irreducibility::Reducible {
                    witness: Submodule { space: Subspace::from_vectors(f, action.dim(), &vecs) },
                });
            }
            return Ok(Irreducibility::Irreducible(Certificate::Norton { factor, attempt }));
        }
    }
    Err(ModrepError::Inconclusive(NORTON_BUDGET))
}

/// Monic irreducible factors `p` of the characteristic polynomial of
/// `theta`, linear ones first, paired with `p(theta)`. Factors of degree
/// at least 2 are only reported when they are alone in their degree.
fn irreducible_factor_values(f: &Fp, theta: &Matrix<u64>) -> Vec<(Vec<u64>, Matrix<u64>)> {
    let cp = linalg::char_poly(f, theta);
    let mut out: Vec<(Vec<u64>, Matrix<u64>)> = poly::roots(f, &cp)
        .into_iter()
        .map(|(lambda, _)| (vec![f.neg(&lambda), 1], linalg::shift(f, theta, &lambda)))
        .collect();
    for (d, part) in poly::distinct_degree_parts(f, &cp) {
        if d >= 2 && part.len() == d + 1 {
            let value = part.iter().rev().fold(linalg::zeros(f, theta.rows(), theta.cols()), |acc, c| {
                let scaled = linalg::mul(f, &acc, theta);
                linalg::add(f, &scaled, &linalg::scale(f, c, &linalg::identity(f, theta.rows())))
            });
            out.push((part, value));
        }
    }
    out
}

/// Random combination of the identity and words of length 1 to 3.
fn random_algebra_element(f: &Fp, mats: &[Matrix<u64>], rng: &mut ChaCha8Rng) -> Matrix<u64> {
    let d = mats[0].rows();
    let p = f.modulus();
    let mut acc = linalg::scale(f, &rng.gen_range(0..p), &linalg::identity(f, d));
    for _ in 0..4 {
        let len = rng.gen_range(1..=3);
        let mut word = linalg::identity(f, d);
        for _ in 0..len {
            word = linalg::mul(f, &word, &mats[rng.gen_range(0..mats.len())]);
        }
        acc = linalg::add(f, &acc, &linalg::scale(f, &rng.gen_range(1..p), &word));
    }
    acc
}

/// Irreducible summands in canonical order (dimension, then first pivot).
pub fn decompose(action: &ActionSet, seed: u64) -> Result<Decomposition, ModrepError> {
    let f = action.field();
    let n = action.dim();
    let wd = weight_data(action)?;
    let mut pieces: Vec<(Submodule, Certificate)> = Vec::new();
    for (k, orbit) in orbits(wd.classes.len(), &wd.perms).into_iter().enumerate() {
        let idx: Vec<usize> = orbit.iter().flat_map(|&c| wd.classes[c].iter().copied()).collect();
        let candidate = Submodule { space: Subspace::coordinate(f, n, &idx) };
        split(&candidate, action, seed.wrapping_add(k as u64), &mut pieces)?;
    }
    debug_assert!(wd.class_of.len() == n);
    pieces.sort_by_key(|(s, _)| (s.dim(), s.first_pivot()));
    let mut total = Subspace::zero(n);
    for (s, _) in &pieces {
        total = total.sum(f, s.space());
    }
    let dims: usize = pieces.iter().map(|(s, _)| s.dim()).sum();
    if total.dim() != n || dims != n {
        return Err(ModrepError::Indecomposable(n));
    }
    let (summands, certificates) = pieces.into_iter().unzip();
    Ok(Decomposition { summands, certificates })
}

fn split(
    m: &Submodule,
    action: &ActionSet,
    seed: u64,
    out: &mut Vec<(Submodule, Certificate)>,
) -> Result<(), ModrepError> {
    let f = action.field();
    let witness = match check_irreducible(m, action, seed)? {
        Irreducibility::Irreducible(cert) => {
            out.push((m.clone(), cert));
            return Ok(());
        }
        Irreducibility::Reducible { witness } => witness,
    };
    let mut covered = witness.space().clone();
    let mut parts = vec![witness];
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a5a);
    let mats = action
        .generators()
        .iter()
        .map(|g| restrict(f, m.space(), g))
        .collect::<Result<Vec<_>, _>>()?;
    for _ in 0..NORTON_BUDGET {
        if covered.dim() == m.dim() {
            break;
        }
        let theta = random_algebra_element(f, &mats, &mut rng);
        for (_, evaluated) in irreducible_factor_values(f, &theta) {
            for c in linalg::nullspace(f, &evaluated) {
                let v = m.space().from_coordinates(f, &c);
                if covered.contains(f, &v) {
                    continue;
                }
                let s = spin(action, &v)?;
                if s.space().intersection_dim(f, &covered) == 0 {
                    covered = covered.sum(f, s.space());
                    parts.push(s);
                }
            }
        }
    }
    if covered.dim() != m.dim() {
        return Err(ModrepError::Indecomposable(m.dim()));
    }
    for (k, part) in parts.iter().enumerate() {
        split(part, action, seed.wrapping_add(1 + k as u64), out)?;
    }
    Ok(())
}

/// Which normalizer subgroup an action set realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Construction {
    /// Simply connected torus together with lifts of the subgroup `W'` of
    /// the Weyl group chosen for the family.
    Restricted,
    /// Simply connected torus together with lifts of all simple reflections.
    FullNormalizer,
    /// Torus generators only.
    TorusOnly,
}

/// `Ad` of the torus-normalizer subgroup: `rank` torus generators
/// `alpha_j^vee(a)` for a generator `a` of `F_l^*`, plus Weyl lifts.
pub fn normalizer_action(alg: &ChevalleyAlgebra<Fp>, construction: Construction) -> Result<ActionSet, ModrepError> {
    let f = *alg.field();
    let sys = alg.system();
    let a = f.primitive_root();
    let mut gens = Vec::new();
    for j in 0..sys.rank() {
        gens.push(Generator {
            kind: GeneratorKind::Torus,
            label: format!("coroot{}({a})", j + 1),
            auto: alg.coroot_torus(j, &a)?,
        });
    }
    let words: Vec<WeylWord> = match construction {
        Construction::Restricted => sys.construction_words()?,
        Construction::FullNormalizer => sys.simple_indices().iter().map(|&r| WeylWord(vec![r])).collect(),
        Construction::TorusOnly => Vec::new(),
    };
    for (k, w) in words.iter().enumerate() {
        gens.push(Generator { kind: GeneratorKind::WeylLift, label: format!("lift{k}"), auto: alg.word_lift(w)? });
    }
    let mut action = ActionSet::new(f, gens)?;
    if let Some(sigma) = twist_sigma_word(alg, construction)? {
        let tau = alg.ad_torus(&vec![a; sys.rank()])?;
        action = action.with_twist(TwistElements { sigma: alg.word_lift(&sigma)?, tau });
    }
    Ok(action)
}

/// An order-2 Weyl element inside the construction's `W'`.
fn twist_sigma_word(alg: &ChevalleyAlgebra<Fp>, construction: Construction) -> Result<Option<WeylWord>, ModrepError> {
    let sys = alg.system();
    let n = sys.rank();
    if construction == Construction::TorusOnly {
        return Ok(None);
    }
    if construction == Construction::FullNormalizer {
        return Ok(Some(WeylWord(vec![sys.simple_root(0)?])));
    }
    let word = match sys.family() {
        Family::A if n >= 3 => {
            let mut e1 = vec![0; n + 1];
            e1[0] = 1;
            e1[1] = -1;
            let mut e2 = vec![0; n + 1];
            e2[2] = 1;
            e2[3] = -1;
            Some(WeylWord(vec![sys.from_epsilon(&e1)?, sys.from_epsilon(&e2)?]))
        }
        Family::B | Family::C => {
            let mut e = vec![0; n];
            e[0] = if sys.family() == Family::B { 1 } else { 2 };
            Some(WeylWord(vec![sys.from_epsilon(&e)?]))
        }
        Family::D => {
            let mut minus = vec![0; n];
            minus[0] = 1;
            minus[1] = -1;
            let mut plus = vec![0; n];
            plus[0] = 1;
            plus[1] = 1;
            Some(WeylWord(vec![sys.from_epsilon(&minus)?, sys.from_epsilon(&plus)?]))
        }
        Family::E if n == 7 => {
            let a7 = sys.e7_a7()?;
            Some(WeylWord(vec![a7.simple[0], a7.simple[2]]))
        }
        _ => None,
    };
    Ok(word)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub char_poly: Vec<u64>,
    /// Roots in `F_l` with multiplicity.
    pub eigenvalues: Vec<(u64, usize)>,
    /// Whether the characteristic polynomial splits over `F_l`.
    pub split: bool,
}

impl Spectrum {
    fn of(f: &Fp, m: &Matrix<u64>) -> Self {
        let char_poly = linalg::char_poly(f, m);
        let eigenvalues = poly::roots(f, &char_poly);
        let split = eigenvalues.iter().map(|(_, k)| k).sum::<usize>() == m.rows();
        Spectrum { char_poly, eigenvalues, split }
    }

    /// Spectrum of `q` times the element: `p(x) -> q^d p(x / q)`.
    fn twisted(&self, f: &Fp, q: u64) -> Self {
        let d = self.char_poly.len() - 1;
        let char_poly = self
            .char_poly
            .iter()
            .enumerate()
            .map(|(k, c)| f.mul(c, &f.pow(&q, (d - k) as u64)))
            .collect();
        let mut eigenvalues: Vec<(u64, usize)> = self.eigenvalues.iter().map(|&(e, k)| (f.mul(&e, &q), k)).collect();
        eigenvalues.sort_unstable();
        Spectrum { char_poly, eigenvalues, split: self.split }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistVerdict {
    /// Summand `i` at position `2i`, its twist at `2i + 1`.
    pub labels: Vec<String>,
    pub sigma: Vec<Spectrum>,
    pub tau: Vec<Spectrum>,
    /// `separated[i][j]`: the two modules differ in the spectrum of `sigma`
    /// or of `tau`.
    pub separated: Vec<Vec<bool>>,
    pub distinguished: bool,
}

pub fn twist_distinguish(summands: &[Submodule], action: &ActionSet, q: u64) -> Result<TwistVerdict, ModrepError> {
    let f = action.field();
    let q = q % f.modulus();
    if q == 0 {
        return Err(ModrepError::ZeroTwist);
    }
    let twist = action.twist().ok_or(ModrepError::NoTwistElements)?;
    let as_gen = |label: &str, auto: &Automorphism<u64>| Generator {
        kind: GeneratorKind::Involution,
        label: label.to_string(),
        auto: auto.clone(),
    };
    let (sg, tg) = (as_gen("sigma", &twist.sigma), as_gen("tau", &twist.tau));
    let mut labels = Vec::new();
    let mut sigma = Vec::new();
    let mut tau = Vec::new();
    for (i, s) in summands.iter().enumerate() {
        let ss = Spectrum::of(f, &restrict(f, s.space(), &sg)?);
        let ts = Spectrum::of(f, &restrict(f, s.space(), &tg)?);
        labels.push(format!("M{i}"));
        labels.push(format!("M{i}(1)"));
        sigma.push(ss.twisted(f, q));
        tau.push(ts.twisted(f, q));
        sigma.insert(sigma.len() - 1, ss);
        tau.insert(tau.len() - 1, ts);
    }
    let k = labels.len();
    let separated: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..k).map(|j| i != j && (sigma[i].char_poly != sigma[j].char_poly || tau[i].char_poly != tau[j].char_poly)).collect())
        .collect();
    let distinguished = (0..k).all(|i| (0..k).all(|j| i == j || separated[i][j]));
    Ok(TwistVerdict { labels, sigma, tau, separated, distinguished })
}

/// The standard summands spanned by basis vectors: `t`, and the root
/// spaces grouped by the given partition of roots.
pub fn coordinate_submodule(alg: &ChevalleyAlgebra<Fp>, roots: &[usize], include_torus: bool) -> Submodule {
    let f = alg.field();
    let mut idx: Vec<usize> = roots.iter().map(|&r| alg.root_index(r)).collect();
    if include_torus {
        idx.extend(0..alg.rank());
    }
    Submodule { space: Subspace::coordinate(f, alg.dim(), &idx) }
}
