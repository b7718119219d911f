//! Exact symbolic workbench for quantum duality functors on finitely
//! presented Hopf algebras over one-parameter rings, their semiclassical
//! limits, and the field-level crystal functors on finite-dimensional Hopf
//! algebras and finite-group algebras.

pub mod coeff;
pub mod drinfeld;
pub mod hopf;
pub mod presets;
