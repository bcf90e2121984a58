//! Exact arithmetic for the Mertens bound |M(X)| <= q^(X/2) over elliptic
//! curves on finite fields.
//!
//! The library classifies (q, a) pairs by the Waterhouse trace conditions,
//! generates the degree-aggregated Möbius coefficients of a class exactly,
//! evaluates the closed forms for M(X)/q^(X/2), decides the bound per class
//! with exact limsups, and cross-checks everything against two independent
//! brute-force oracles (an Euler-product expansion and an exhaustive curve
//! census).
//!
//! The census and the classification sweep are data-parallel; the `parallel`
//! feature (on by default) backs them with rayon, and disabling it falls
//! back to sequential loops with the same results.

pub mod error;
pub mod field;
pub mod isogeny;
pub mod mertens;
pub mod mobius;
pub mod oracle;
pub mod quad;
pub mod zeta;

mod par;

pub use error::{Error, Result};
pub use field::{FieldElement, FiniteField, PrimePower};
pub use isogeny::{
    admissible_traces, classify, classify_order, frobenius_angle, IsogenyClass, ThetaKind,
    WaterhouseCase,
};
pub use mertens::{
    conjecture_check_exact, conjecture_scan, limsup_exact, limsup_ratio, parse_decimal,
    residue_table, sweep, sweep_serial, theorem_condition, verdict, witness_search,
    ConjectureReport, Limsup, RatioProfile, SweepEntry, TheoremCondition, Verdict,
};
pub use mobius::{
    amplitude_and_phase, amplitude_squared_exact, closed_form_ratio, mertens_sums,
    mobius_coefficients, MertensTrajectory, MobiusSeries,
};
pub use oracle::{
    count_points, product_oracle, trace_census, trace_census_opts, trace_census_serial,
    TraceCensus, WeierstrassCurve, CENSUS_CAP,
};
pub use quad::QuadExt;
pub use zeta::{extension_counts, l_polynomial, lpoly_inverse_coefficients, ExtensionCounts, LPolynomial};
