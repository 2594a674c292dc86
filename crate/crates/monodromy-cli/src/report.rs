use std::sync::Arc;
use std::time::Instant;

use monodromy_core::chevalley::ChevalleyAlgebra;
use monodromy_core::field::Fp;
use monodromy_core::ledger::{standard_ledger, LedgerConstruction};
use monodromy_core::modrep::{decompose, normalizer_action, Construction};
use monodromy_core::ntlifts::{e7_real_bound_check, real_h0_classical, real_h0_max, RealH0};
use monodromy_core::perm::orbits;
use monodromy_core::principal::even_height_fixed_dim;
use monodromy_core::rootsys::{Family, RootSystem};
use serde::Serialize;
use serde_json::Value;

use crate::checks::{selected, Ctx, Suite};
use crate::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub anchor: String,
    pub status: Status,
    pub observed: Value,
    pub expected: Value,
    pub elapsed_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct VerifyParams {
    pub suite: Suite,
    pub prime: u64,
    pub seed: u64,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub params: VerifyParams,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Runs the suite's checks in id order. `prime` must already be validated.
pub fn verify(suite: Suite, prime: u64, seed: u64) -> Result<VerifyReport, String> {
    let ctx = Ctx { field: Fp::new(prime).map_err(|e| e.to_string())?, seed };
    let mut checks = Vec::new();
    for c in selected(suite) {
        let start = Instant::now();
        let (status, observed, expected) = match (c.run)(&ctx) {
            Ok(v) => (if v.pass { Status::Pass } else { Status::Fail }, v.observed, v.expected),
            Err(e) => (Status::Fail, serde_json::json!({ "error": e }), Value::Null),
        };
        checks.push(CheckRecord {
            check_id: c.id.to_string(),
            anchor: c.anchor.to_string(),
            status,
            observed,
            expected,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    let summary =
        Summary { total: checks.len(), passed: count(Status::Pass), failed: count(Status::Fail), skipped: count(Status::Skipped) };
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        command: "verify",
        params: VerifyParams { suite, prime, seed },
        summary,
        checks,
    })
}

#[derive(Debug, Serialize)]
pub struct TypeParams {
    pub family: String,
    pub rank: usize,
    pub prime: u64,
    pub seed: u64,
}

#[derive(Debug, Serialize)]
pub struct TypeSummary {
    pub name: String,
    pub dim: usize,
    pub roots: usize,
    pub coxeter_number: usize,
    pub exponents: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct DecompositionSummary {
    pub construction: &'static str,
    pub summand_dims: Vec<usize>,
    pub weyl_orbit_sizes: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct H0Table {
    /// Classical types only: one row per `0 < d < n`.
    pub real: Vec<RealH0>,
    pub real_max: Option<usize>,
    pub e7_bound: Option<usize>,
    pub even_height: usize,
}

#[derive(Debug, Serialize)]
pub struct LedgerSummary {
    pub weyl_slack: Option<i64>,
    pub principal_rhs: i64,
}

#[derive(Debug, Serialize)]
pub struct TypeReport {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub params: TypeParams,
    #[serde(rename = "type")]
    pub ty: TypeSummary,
    pub decomposition: DecompositionSummary,
    pub h0: H0Table,
    pub ledger: LedgerSummary,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn validate_report_args(family: Family, rank: usize, prime: u64) -> Result<Arc<RootSystem>, String> {
    let sys = RootSystem::new(family, rank).map_err(|e| e.to_string())?;
    Fp::new(prime).map_err(|e| e.to_string())?;
    if prime <= 3 * sys.coxeter_number() as u64 {
        return Err(format!("prime {prime} must exceed 3h = {}", 3 * sys.coxeter_number()));
    }
    Ok(Arc::new(sys))
}

pub fn report(family: Family, rank: usize, prime: u64, seed: u64) -> Result<TypeReport, String> {
    let start = Instant::now();
    let sys = validate_report_args(family, rank, prime)?;
    let f = Fp::new(prime).map_err(err)?;
    let alg = ChevalleyAlgebra::new(sys.clone(), f).map_err(err)?;
    let mut notes = Vec::new();

    let (construction, action, gens) = match (normalizer_action(&alg, Construction::Restricted), sys.alternating_generators()) {
        (Ok(action), Ok(gens)) => ("restricted", action, gens),
        _ => {
            notes.push("no restricted Weyl subgroup for this type; using all simple reflections".to_string());
            let action = normalizer_action(&alg, Construction::FullNormalizer).map_err(err)?;
            ("full_normalizer", action, sys.weyl_generators())
        }
    };
    let summand_dims = decompose(&action, seed).map_err(err)?.dims();
    let mut weyl_orbit_sizes: Vec<usize> = orbits(sys.num_roots(), &gens).iter().map(Vec::len).collect();
    weyl_orbit_sizes.sort_unstable();

    let n = match family {
        Family::A => Some(rank + 1),
        Family::B | Family::C | Family::D => Some(rank),
        _ => None,
    };
    let mut real = Vec::new();
    let mut real_max = None;
    if let Some(n) = n {
        for d in 1..n {
            real.push(real_h0_classical(family, rank, d).map_err(err)?);
        }
        if n > 1 {
            real_max = Some(real_h0_max(family, rank).map_err(err)?.formula);
        }
    }
    let e7_bound = if (family, rank) == (Family::E, 7) {
        let r = e7_real_bound_check(prime).map_err(err)?;
        notes.push(format!(
            "E7 real bound uses the guaranteed -1 count {}; the smallest count realised by the torus is {}",
            r.guaranteed_minus, r.min_minus_on_a7
        ));
        Some(r.bound)
    } else {
        None
    };
    let even_height = even_height_fixed_dim(&sys);

    let dim = (sys.rank() + sys.num_roots()) as u64;
    let weyl_slack = match real_max.or(e7_bound) {
        Some(h0) => Some(
            standard_ledger(family, rank, LedgerConstruction::Weyl, h0 as u64, dim).map_err(err)?.wiles_rhs(),
        ),
        None => None,
    };
    let principal_rhs = standard_ledger(family, rank, LedgerConstruction::Principal, even_height as u64, dim)
        .map_err(err)?
        .wiles_rhs();

    match (family, rank) {
        (Family::A, 1) | (Family::A, 2) | (Family::B, 3) => {
            notes.push("the Weyl construction excludes SL_2, SL_3 and Spin_7".to_string())
        }
        _ => {}
    }
    if weyl_orbit_sizes.iter().all(|&s| s == 1) {
        notes.push("the Weyl subgroup acts trivially on roots, so every root line is its own summand".to_string());
    }

    Ok(TypeReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        command: "report",
        params: TypeParams { family: family.to_string(), rank, prime, seed },
        ty: TypeSummary {
            name: sys.name(),
            dim: dim as usize,
            roots: sys.num_roots(),
            coxeter_number: sys.coxeter_number(),
            exponents: sys.exponents_by_height(),
        },
        decomposition: DecompositionSummary { construction, summand_dims, weyl_orbit_sizes },
        h0: H0Table { real, real_max, e7_bound, even_height },
        ledger: LedgerSummary { weyl_slack, principal_rhs },
        notes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
