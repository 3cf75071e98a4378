//! Exact spectra of twisted Dirac operators on complex projective spaces.
//!
//! The squared Dirac operator of `ℂPᵈ` (odd `d`, Fubini–Study metric of
//! holomorphic sectional curvature 4) is diagonalized on sections of
//! `Σ(ℂPᵈ) ⊗ γ_d^m` and of `Σ(ℂPᵈ) ⊗ Σ(N)`, where `N` is the normal bundle of
//! the canonical embedding `ℂPᵈ → ℂPⁿ`. Every eigenvalue is an integer and
//! every multiplicity is the dimension of an `SU(d+1)` representation; both
//! are computed exactly.
//!
//! Only spectra of the squared operator are produced. The spectrum of the
//! Dirac operator itself is symmetric about the origin and consists of
//! `±√λ`.

pub mod arith;
pub mod bounds;
pub mod error;
pub mod line_bundle;
pub mod normal;
pub mod types;
pub mod weyl;

pub use arith::{binomial, rational_reduce, Rational};
pub use num_bigint::BigUint;
pub use bounds::{
    bounds_report, kirchberg_lower_bound, killing_spinor_count, re_spectrum_totally_geodesic,
    sharpness_report, type_rr1_bounds, upper_bound, BoundsReport, SharpnessReport, Verdict,
};
pub use error::{Error, Result};
pub use line_bundle::{
    enumerate_line_bundle, family_eigenvalue, family_highest_weight, family_multiplicity,
    LineBundleContribution,
};
pub use normal::{
    decompose_normal_spinor, enumerate_normal, family_minima, lowest_eigenvalue, substitution_merge,
    DecompositionTerm,
};
pub use types::{
    Contribution, EmbeddingParams, Family, FamilyIndex, HighestWeight, Spectrum, SpectrumEntry,
    SpectrumSource, TwistPower,
};
pub use weyl::{inner, root_system, weyl_dim, RootSystem, WeightVector};
