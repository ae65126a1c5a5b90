//! Exponential operations: the classical `Lambda_t`, `S_t` and Adams
//! operations on bundles, and their Hecke-built analogues on q-series that
//! express replicability of `J`.

mod bundle;
mod ganter;

pub use bundle::{
    adams_exponential, adams_psi, lambda_t, newton_identities_hold, symmetric_t, Monomial, SymPoly,
    TSeries, VirtualBundle,
};
pub use ganter::{
    ganter_lambda, ganter_s, replicability_check_faber_form, replicability_check_theorem_form,
    replicability_faber_form, replicability_theorem_form, required_input_order, symmetry_check,
    theorem_lhs, ExponentialKind, ExponentialSeries, FaberFormReport, GridMismatch, GridReport,
    SymmetryReport,
};
