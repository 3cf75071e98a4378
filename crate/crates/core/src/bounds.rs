//! Eigenvalue bounds for the squared twisted Dirac operator and their sharpness.
//!
//! The upper bound comes from restricting Kählerian Killing spinors of the
//! ambient space; the lower bounds are Kirchberg-type estimates in terms of
//! the scalar curvature and the smallest eigenvalue `κ₁` of the twisting
//! curvature endomorphism.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{self, binomial, Rational};
use crate::error::{Error, Result};
use crate::normal::{enumerate_normal, lowest_eigenvalue};
use crate::types::EmbeddingParams;

/// Summary of the upper and lower bounds for one embedding, in the
/// curvature-4 normalization (`α² = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub params: EmbeddingParams,
    pub alpha_sq: Rational,
    pub upper_bound: Rational,
    pub mu: BigUint,
    pub scal0: i64,
    pub kappa1: i64,
    pub kirchberg_bound: Rational,
    pub lowest: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Sharp,
    NotSharp,
}

/// How the upper bound compares with the actual spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpnessReport {
    pub params: EmbeddingParams,
    pub upper_bound: u64,
    pub mu: BigUint,
    pub mult_zero: BigUint,
    /// Multiplicity of the eigenvalue equal to the upper bound.
    pub mult_bound: BigUint,
    /// Total multiplicity of eigenvalues strictly below the upper bound.
    pub count_below: BigUint,
    /// Total multiplicity of eigenvalues at or below the upper bound.
    pub cumulative_below: BigUint,
    pub verdict: Verdict,
}

/// Upper bound `(d+1)²α²` (odd `d`) or `d(d+2)α²` (even `d`) for `μ` eigenvalues.
pub fn upper_bound(d: i64, alpha_sq: &Rational) -> Result<Rational> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("d must be positive, got {d}")));
    }
    let factor = if d % 2 == 1 { (d + 1) * (d + 1) } else { d * (d + 2) };
    Ok(arith::int(factor) * alpha_sq)
}

/// Dimension `μ = 2·C(n, (n+1)/2)` of the space of Kählerian Killing spinors on `ℂPⁿ`.
pub fn killing_spinor_count(n: i64) -> Result<BigUint> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("n must be odd and at least 3, got {n}")));
    }
    Ok(binomial(n, (n + 1) / 2)? * 2u32)
}

/// Scalar curvature `4d(d+1)` of `ℂPᵈ` with holomorphic sectional curvature 4.
pub fn scalar_curvature(d: i64) -> i64 {
    4 * d * (d + 1)
}

/// Eigenvalues `4(2r−d)(2s−(n−d))` of the twisting curvature `R^E` of a
/// totally geodesic embedding, over `0 <= r <= d`, `0 <= s <= n−d`, sorted
/// ascending, together with their minimum `κ₁`.
pub fn re_spectrum_totally_geodesic(params: EmbeddingParams) -> (Vec<i64>, i64) {
    let (d, codim) = (params.d(), params.codim());
    let mut values: Vec<i64> = (0..=d)
        .flat_map(|r| (0..=codim).map(move |s| 4 * (2 * r - d) * (2 * s - codim)))
        .collect();
    values.sort_unstable();
    let kappa1 = values[0];
    (values, kappa1)
}

/// Kirchberg-type lower bound on the eigenvalues of the squared operator:
/// `(d+1)/(4d)·(Scal₀+κ₁)` for odd `d`, `d/(4(d−1))·(Scal₀+κ₁)` for even `d`.
pub fn kirchberg_lower_bound(d: i64, scal0: i64, kappa1: i64) -> Result<Rational> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("d must be positive, got {d}")));
    }
    let constant = if d % 2 == 1 {
        arith::ratio(d + 1, 4 * d)?
    } else {
        arith::ratio(d, 4 * (d - 1))?
    };
    Ok(constant * arith::int(scal0 + kappa1))
}

/// The two lower bounds for an eigenspinor of type `(r, r+1)`:
/// `(Scal₀+κ₁)/(4(1−a_r))` and `(Scal₀+κ₁)/(4(1−b_{r+1}))` with
/// `a_r = 1/(2(r+1))` and `b_r = 1/(2(d−r+1))`.
///
/// The `b_r` coefficient is written with a free dimension symbol in its usual
/// statement; here it is the complex dimension `d`.
pub fn type_rr1_bounds(d: i64, r: i64, scal0: i64, kappa1: i64) -> Result<(Rational, Rational)> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("d must be positive, got {d}")));
    }
    if !(0..d).contains(&r) {
        return Err(Error::InvalidParameter(format!("r must satisfy 0 <= r <= d - 1, got {r}")));
    }
    let one = Rational::one();
    let bracket = arith::int(scal0 + kappa1);
    let a_r = arith::ratio(1, 2 * (r + 1))?;
    // b_{r+1} = 1/(2(d − (r+1) + 1))
    let b_next = arith::ratio(1, 2 * (d - r))?;
    let four = arith::int(4);
    let first = &bracket / (&four * (&one - a_r));
    let second = &bracket / (&four * (&one - b_next));
    Ok((first, second))
}

/// Upper bound, `μ`, curvature data and the Kirchberg bound for an embedding.
pub fn bounds_report(params: EmbeddingParams) -> Result<BoundsReport> {
    let d = params.d();
    let alpha_sq = Rational::one();
    let scal0 = scalar_curvature(d);
    let (_, kappa1) = re_spectrum_totally_geodesic(params);
    Ok(BoundsReport {
        params,
        upper_bound: upper_bound(d, &alpha_sq)?,
        alpha_sq,
        mu: killing_spinor_count(params.n())?,
        scal0,
        kappa1,
        kirchberg_bound: kirchberg_lower_bound(d, scal0, kappa1)?,
        lowest: lowest_eigenvalue(params),
    })
}

/// Closed forms for `d = 1`: `mult(0) = (n−1)/2·C(n−1,(n−1)/2)` and
/// `mult(4) = 4·C(n−1,(n−1)/2)`.
pub fn d1_closed_forms(n: i64) -> Result<(BigUint, BigUint)> {
    EmbeddingParams::new(1, n)?;
    let central = binomial(n - 1, (n - 1) / 2)?;
    Ok((&central * BigUint::from(((n - 1) / 2) as u64), central * 4u32))
}

/// Compares the Killing-spinor count `μ` with the spectrum below the upper bound.
///
/// The bound is sharp when fewer than `μ` eigenvalues (counted with
/// multiplicity) lie strictly below it, so that some of the `μ` eigenvalues it
/// controls must sit exactly at the bound.
pub fn sharpness_report(params: EmbeddingParams) -> Result<SharpnessReport> {
    let bound = upper_bound(params.d(), &Rational::one())?;
    let bound = u64::try_from(bound.to_integer())
        .map_err(|_| Error::Consistency("upper bound out of range".into()))?;
    let mu = killing_spinor_count(params.n())?;
    let spectrum = enumerate_normal(params, bound)?;
    let mult_zero = spectrum.multiplicity(0);
    if params.d() == 1 {
        let (zero, four) = d1_closed_forms(params.n())?;
        if zero != mult_zero || four != spectrum.multiplicity(4) {
            return Err(Error::Consistency(format!(
                "d = 1 closed forms disagree with the enumerated spectrum on {params}"
            )));
        }
    }
    let count_below = spectrum.count_below(bound);
    let verdict = if count_below < mu { Verdict::Sharp } else { Verdict::NotSharp };
    Ok(SharpnessReport {
        params,
        upper_bound: bound,
        mult_bound: spectrum.multiplicity(bound),
        cumulative_below: spectrum.count_at_most(bound),
        count_below,
        mu,
        mult_zero,
        verdict,
    })
}

/// `Σ_{s=0}^{(n−3)/2} C(n−1, s)(n−1−2s)`, the summed form of `mult(0)` for `d = 1`.
pub fn d1_zero_multiplicity_sum(n: i64) -> Result<BigUint> {
    EmbeddingParams::new(1, n)?;
    let mut acc = BigInt::zero();
    for s in 0..=(n - 3) / 2 {
        acc += BigInt::from(binomial(n - 1, s)?) * BigInt::from(n - 1 - 2 * s);
    }
    Ok(acc.to_biguint().expect("sum of nonnegative terms"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(d: i64, n: i64) -> EmbeddingParams {
        EmbeddingParams::new(d, n).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn upper_bound_examples() {
        let one = Rational::one();
        assert_eq!(upper_bound(1, &one).unwrap(), arith::int(4));
        assert_eq!(upper_bound(3, &one).unwrap(), arith::int(16));
        assert_eq!(upper_bound(2, &one).unwrap(), arith::int(8));
        let quarter = arith::ratio(1, 4).unwrap();
        assert_eq!(upper_bound(3, &quarter).unwrap(), arith::int(4));
        assert!(upper_bound(0, &one).is_err());
    }

    #[test]
    fn killing_spinor_count_examples() {
        assert_eq!(killing_spinor_count(3).unwrap(), big(6));
        assert_eq!(killing_spinor_count(5).unwrap(), big(20));
        assert_eq!(killing_spinor_count(7).unwrap(), big(70));
        assert!(killing_spinor_count(4).is_err());
        assert!(killing_spinor_count(1).is_err());
    }

    #[test]
    fn re_spectrum_examples() {
        let (values, kappa1) = re_spectrum_totally_geodesic(params(1, 3));
        assert_eq!(values, vec![-8, -8, 0, 0, 8, 8]);
        assert_eq!(kappa1, -8);
        let mut distinct = values.clone();
        distinct.dedup();
        assert_eq!(distinct, vec![-8, 0, 8]);
        assert_eq!(re_spectrum_totally_geodesic(params(3, 5)).1, -24);
    }

    #[test]
    fn kirchberg_examples() {
        assert_eq!(kirchberg_lower_bound(3, 48, -24).unwrap(), arith::int(8));
        assert_eq!(kirchberg_lower_bound(1, 8, -8).unwrap(), arith::int(0));
        for d in [1, 3, 5, 7] {
            assert!(kirchberg_lower_bound(d, 17, -17).unwrap().is_zero());
        }
        // even branch: d/(4(d−1))
        assert_eq!(kirchberg_lower_bound(2, 24, 0).unwrap(), arith::int(12));
        assert!(kirchberg_lower_bound(0, 1, 1).is_err());
    }

    #[test]
    fn type_rr1_examples() {
        let (a, b) = type_rr1_bounds(1, 0, 8, -8).unwrap();
        assert!(a.is_zero() && b.is_zero());
        let (a, b) = type_rr1_bounds(3, 1, 48, -24).unwrap();
        assert_eq!((a, b), (arith::int(8), arith::int(8)));
        assert!(type_rr1_bounds(3, 3, 48, -24).is_err());
        assert!(type_rr1_bounds(3, -1, 48, -24).is_err());
    }

    #[test]
    fn type_rr1_recovers_odd_constant() {
        for d in [1i64, 3, 5, 7, 9] {
            let (first, _) = type_rr1_bounds(d, (d - 1) / 2, 100, -20).unwrap();
            assert_eq!(first, kirchberg_lower_bound(d, 100, -20).unwrap());
        }
    }

    #[test]
    fn sharpness_examples() {
        let r = sharpness_report(params(1, 3)).unwrap();
        assert_eq!((r.mult_zero.clone(), r.mu.clone()), (big(2), big(6)));
        assert_eq!(r.mult_bound, big(8));
        assert_eq!(r.cumulative_below, big(10));
        assert_eq!(r.verdict, Verdict::Sharp);

        let r = sharpness_report(params(1, 9)).unwrap();
        assert_eq!((r.mult_zero.clone(), r.mu.clone()), (big(280), big(252)));
        assert_eq!(r.verdict, Verdict::NotSharp);

        let r = sharpness_report(params(1, 7)).unwrap();
        assert_eq!((r.mult_zero.clone(), r.mu.clone()), (big(60), big(70)));
        assert_eq!(r.verdict, Verdict::Sharp);
    }

    #[test]
    fn d1_closed_form_values() {
        assert_eq!(d1_closed_forms(3).unwrap(), (big(2), big(8)));
        assert_eq!(d1_closed_forms(5).unwrap(), (big(12), big(24)));
        assert_eq!(d1_zero_multiplicity_sum(5).unwrap(), big(12));
        assert!(d1_closed_forms(4).is_err());
    }

    #[test]
    fn bounds_report_d3_n5() {
        let r = bounds_report(params(3, 5)).unwrap();
        assert_eq!(r.upper_bound, arith::int(16));
        assert_eq!(r.mu, big(20));
        assert_eq!((r.scal0, r.kappa1), (48, -24));
        assert_eq!(r.kirchberg_bound, arith::int(8));
        assert_eq!(r.lowest, 12);
    }
}
