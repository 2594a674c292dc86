//! Computational core for monodromy-group and deformation-dimension checks on
//! adjoint Galois representations: root systems, Chevalley algebras over
//! `F_l`, decomposition of the adjoint module under torus normalizers,
//! regular semisimple elements over Weyl elements, the principal `sl_2`, and
//! dimension ledgers for Galois-cohomology bookkeeping.

pub mod chevalley;
pub mod field;
pub mod ledger;
pub mod linalg;
pub mod modrep;
pub mod ntlifts;
pub mod perm;
pub mod poly;
pub mod principal;
pub mod rootsys;
pub mod transporter;
