//! Exact invariants of projective hypersurfaces with isolated singularities.
//!
//! The crate computes, over the rationals and without any floating point:
//! the Jacobian ideal and graded Milnor algebra M(f) = S/J_f of a homogeneous
//! polynomial f, the Hilbert-Poincaré series of M(f) in both rational forms,
//! the total Tjurina number, the coincidence and stability thresholds ct/st,
//! the saturation Î of J_f with its threshold sat and defect module, the
//! free-divisor test (sat = 0) and the regularity max(T-ct, sat-1), where
//! T = (n+1)(d-2).
//!
//! Layers, bottom up: [`ring`]/[`poly`]/[`parse`] for exact sparse
//! polynomial arithmetic, [`groebner`] for reduced Gröbner bases, [`hilbert`]
//! for series, [`saturation`] for Î/sat/SD, [`invariants`] for the report,
//! and [`corpus`] for the built-in golden examples used by the CLI.

pub mod corpus;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod invariants;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod saturation;

pub use error::{Error, Result};
pub use groebner::{
    buchberger, ideal_contains, ideal_equal, lead_term_ideal, normal_form, GroebnerBasis,
    IdealGens, MonomialIdeal,
};
pub use hilbert::{
    expand, hilbert_numerator, quotient_series, reduce_form, smooth_prefix, smooth_series,
    HilbertSeries, SeriesPrefix,
};
pub use invariants::{
    check_isolated, coincidence_threshold, freeness, full_report, full_report_with,
    milnor_algebra, regularity, sat_bound_check, stability_threshold,
    stability_threshold_by_scan, theorem1_check, total_tjurina, InvariantReport, Isolation,
    Theorem1Verdict, Threshold,
};
pub use parse::{parse_polynomial, parse_with_vars};
pub use poly::{euler_check, Polynomial};
pub use ring::{Monomial, MonomialOrder, Ring};
pub use saturation::{
    colon_var_saturate, defect_dims, intersect, sat_threshold, saturate_irrelevant,
    saturation_result, SaturationResult,
};
