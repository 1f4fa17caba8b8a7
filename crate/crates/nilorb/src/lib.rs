//! Nilpotent adjoint orbits of the non-compact classical real simple Lie algebras.
//!
//! Orbits are parametrized by (signed) Young diagrams. For every orbit the crate
//! reports the dimensions of its first and second de Rham cohomology, the structure
//! of the reductive centralizer of an sl₂-triple through it and of that
//! centralizer's maximal compact subgroup, and an exact matrix realization of the
//! triple together with the invariant form.

pub mod cohomology;
pub mod exactlin;
pub mod orbit_enum;
pub mod partition;
pub mod realize;
pub mod signed_diagram;
pub mod structure;
pub mod verify;
