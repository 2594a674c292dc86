//! Check registry and report builders behind the `monodromy` binary.

pub mod checks;
pub mod report;

use monodromy_core::field::is_prime;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_PRIME: u64 = 73;

/// The suites use roots of unity of order 3 and 8 and Chevalley algebras
/// up to `E7`, whose Coxeter number is 18.
pub fn validate_verify_prime(l: u64) -> Result<(), String> {
    if !is_prime(l) {
        return Err(format!("{l} is not prime"));
    }
    if l % 24 != 1 {
        return Err(format!("{l} is not 1 mod 24"));
    }
    if l <= 3 * 18 {
        return Err(format!("{l} does not exceed 3h = 54 for E7"));
    }
    Ok(())
}
