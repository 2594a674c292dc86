//! Dimension bookkeeping for Selmer and dual Selmer groups: local
//! conditions, the Euler-characteristic formula, unramified local
//! cohomology, and the arithmetic of killing the dual Selmer group one
//! auxiliary prime at a time.

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::field::{is_prime, Field, Fp, Rationals};
use crate::linalg::{self, Matrix};
use crate::rootsys::{Family, RootSystem, RootSystemError, WeylWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LedgerError {
    #[error("Frobenius matrix is singular")]
    Singular,
    #[error("Frobenius matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("cyclotomic value must be nonzero")]
    ZeroTwist,
    #[error("{kind:?} condition violates its dimension relation: {reason}")]
    InvalidCondition { kind: PlaceKind, reason: String },
    #[error("descent needs sel <= dual, got sel = {sel}, dual = {dual}")]
    DescentPrecondition { sel: u64, dual: u64 },
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("unsupported ledger construction for {0}")]
    Unsupported(String),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlaceKind {
    Real,
    Ell,
    Minimal,
    Steinberg,
    FixedFrobenius,
    Ramakrishna,
    Unramified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCondition {
    pub kind: PlaceKind,
    pub dim_l: u64,
    pub h0: u64,
    pub label: String,
}

impl LocalCondition {
    /// Checks the kind's relation between `dim_l` and `h0`; `module_dim` is
    /// needed for the place above `l`.
    pub fn new(kind: PlaceKind, dim_l: u64, h0: u64, label: &str, module_dim: u64) -> Result<Self, LedgerError> {
        let bad = |reason: String| Err(LedgerError::InvalidCondition { kind, reason });
        match kind {
            PlaceKind::Minimal | PlaceKind::Steinberg | PlaceKind::Ramakrishna if dim_l != h0 => {
                return bad(format!("dim_l = {dim_l} != h0 = {h0}"));
            }
            PlaceKind::Ell if dim_l != h0 + module_dim => {
                return bad(format!("dim_l = {dim_l} != h0 + dim = {}", h0 + module_dim));
            }
            PlaceKind::FixedFrobenius if dim_l != 0 => return bad(format!("dim_l = {dim_l} != 0")),
            _ => {}
        }
        if h0 > module_dim {
            return bad(format!("h0 = {h0} exceeds module dimension {module_dim}"));
        }
        Ok(LocalCondition { kind, dim_l, h0, label: label.to_string() })
    }

    pub fn slack(&self) -> i64 {
        self.dim_l as i64 - self.h0 as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WilesLedger {
    pub conditions: Vec<LocalCondition>,
    pub h0_global: u64,
    pub h0_global_dual: u64,
    pub module_dim: u64,
    /// `h^2` of the decomposition group at `l` vanishes, so imposing no
    /// condition there is liftable. Consumed as an input, not derived.
    pub h2_at_l_vanishes: bool,
}

impl WilesLedger {
    pub fn new(module_dim: u64) -> Self {
        WilesLedger { conditions: Vec::new(), h0_global: 0, h0_global_dual: 0, module_dim, h2_at_l_vanishes: true }
    }

    pub fn push(&mut self, kind: PlaceKind, dim_l: u64, h0: u64, label: &str) -> Result<(), LedgerError> {
        self.conditions.push(LocalCondition::new(kind, dim_l, h0, label, self.module_dim)?);
        Ok(())
    }

    /// Selmer minus dual Selmer dimension.
    pub fn wiles_rhs(&self) -> i64 {
        self.h0_global as i64 - self.h0_global_dual as i64 + self.local_slack()
    }

    /// `sum_v (dim L_v - h0_v)`.
    pub fn local_slack(&self) -> i64 {
        self.conditions.iter().map(LocalCondition::slack).sum()
    }

    /// Ledger of the direct sum of the two modules, with places merged.
    pub fn direct_sum(&self, other: &WilesLedger) -> WilesLedger {
        let mut conditions = self.conditions.clone();
        conditions.extend(other.conditions.iter().cloned());
        WilesLedger {
            conditions,
            h0_global: self.h0_global + other.h0_global,
            h0_global_dual: self.h0_global_dual + other.h0_global_dual,
            module_dim: self.module_dim + other.module_dim,
            h2_at_l_vanishes: self.h2_at_l_vanishes && other.h2_at_l_vanishes,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LedgerConstruction {
    /// Torus-normalizer image; regular semisimple Frobenius with a fixed lift
    /// at one auxiliary prime.
    Weyl,
    /// Principal `GL_2` image; Steinberg at one prime, minimal at another,
    /// and a fixed torus lift at an auxiliary prime.
    Principal,
}

/// Slack-neutral places record `h0 = 0`; their contribution is zero either way.
pub fn standard_ledger(
    family: Family,
    rank: usize,
    construction: LedgerConstruction,
    h0_real: u64,
    module_dim: u64,
) -> Result<WilesLedger, LedgerError> {
    let sys = RootSystem::new(family, rank)?;
    if module_dim != (sys.rank() + sys.num_roots()) as u64 {
        return Err(LedgerError::Unsupported(format!("{} with module dimension {module_dim}", sys.name())));
    }
    let r = rank as u64;
    let mut ledger = WilesLedger::new(module_dim);
    ledger.push(PlaceKind::Real, 0, h0_real, "infinity")?;
    ledger.push(PlaceKind::Ell, module_dim, 0, "l, unrestricted")?;
    match construction {
        LedgerConstruction::Weyl => {
            ledger.push(PlaceKind::Minimal, 0, 0, "ramified, prime to l")?;
            ledger.push(PlaceKind::FixedFrobenius, 0, r, "regular semisimple Frobenius")?;
        }
        LedgerConstruction::Principal => {
            ledger.push(PlaceKind::Steinberg, 0, 0, "Steinberg prime")?;
            ledger.push(PlaceKind::Minimal, 0, 0, "principal series prime")?;
            ledger.push(PlaceKind::FixedFrobenius, 0, r, "regular torus Frobenius")?;
        }
    }
    Ok(ledger)
}

/// `dim g - rank - h0_real`, the value `standard_ledger` must reproduce.
pub fn closed_form_slack(family: Family, rank: usize, h0_real: u64) -> Result<i64, LedgerError> {
    let sys = RootSystem::new(family, rank)?;
    Ok(sys.num_roots() as i64 - h0_real as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocalH {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
}

/// Unramified local cohomology away from `l`: `h0 = dim ker(phi - 1)`,
/// `h2 = dim ker(phi - q)` by local duality, Euler characteristic 0.
pub fn unramified_local_h(f: &Fp, phi: &Matrix<u64>, q: u64) -> Result<LocalH, LedgerError> {
    if !phi.is_square() {
        return Err(LedgerError::NotSquare(phi.rows(), phi.cols()));
    }
    let q = q % f.modulus();
    if q == 0 {
        return Err(LedgerError::ZeroTwist);
    }
    if phi.rows() == 0 {
        return Ok(LocalH { h0: 0, h1: 0, h2: 0 });
    }
    if f.is_zero(&linalg::det(f, phi)) {
        return Err(LedgerError::Singular);
    }
    let h0 = linalg::nullity(f, &linalg::shift(f, phi, &1));
    let h2 = linalg::nullity(f, &linalg::shift(f, phi, &q));
    Ok(LocalH { h0, h1: h0 + h2, h2 })
}

/// Dimension of the fixed space of a Weyl group element on `t`.
pub fn t_fixed_dim(sys: &RootSystem, w: &WeylWord) -> usize {
    let q = Rationals;
    let n = sys.rank();
    // Column j: w applied to the simple coroot H_j, in simple-coroot coordinates.
    let mut m: Matrix<BigRational> = linalg::identity(&q, n);
    for &r in w.0.iter().rev() {
        let coroot = sys.coroot_coords(r);
        let refl = Matrix::from_fn(n, n, |i, j| {
            let delta = if i == j { 1 } else { 0 };
            q.from_i64(delta - (sys.simple_pairing(r, j) * coroot[i]) as i64)
        });
        m = linalg::mul(&q, &refl, &m);
    }
    linalg::nullity(&q, &linalg::shift(&q, &m, &q.one()))
}

/// Slack of the torus ledger: `-h0(R, t)`, never positive.
pub fn t_ledger_check(h0_real_t: u64) -> i64 {
    -(h0_real_t as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentTrace {
    /// `(sel, dual)` before each auxiliary prime, then the final state.
    pub states: Vec<(u64, u64)>,
}

impl DescentTrace {
    pub fn steps(&self) -> usize {
        self.states.len() - 1
    }
}

/// Each auxiliary prime keeps `sel - dual` fixed and lowers `dual` by one;
/// `sel` is floored at 0.
pub fn dual_selmer_descent_sim(sel: u64, dual: u64) -> Result<DescentTrace, LedgerError> {
    if sel > dual {
        return Err(LedgerError::DescentPrecondition { sel, dual });
    }
    let mut states = vec![(sel, dual)];
    let (mut s, mut d) = (sel, dual);
    while d > 0 {
        s = s.saturating_sub(1);
        d -= 1;
        states.push((s, d));
    }
    Ok(DescentTrace { states })
}

/// `mu_{l^2}` cannot lie in a field whose Galois group has abelianization of
/// order at most `ab_order_bound` once that bound is below `|(Z/l^2)^*|`.
pub fn mu_l2_obstruction(ab_order_bound: u64, l: u64) -> Result<bool, LedgerError> {
    if l < 3 || !is_prime(l) {
        return Err(LedgerError::NotOddPrime(l));
    }
    Ok((ab_order_bound as u128) < (l as u128) * (l as u128 - 1))
}
