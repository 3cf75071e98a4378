//! Spectrum of the square of the Dirac operator of `ℂPᵈ` twisted by `γ_d^m`.
//!
//! `ℂPᵈ` carries the Fubini–Study metric of constant holomorphic sectional
//! curvature 4 and `d` is odd. The spectrum splits into three families of
//! eigenvalues, each labelled by a [`FamilyIndex`]; every index corresponds to
//! one irreducible `SU(d+1)` representation whose dimension is the
//! multiplicity of its contribution.

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{self, binomial, Rational};
use crate::error::{Error, Result};
use crate::types::{
    check_odd_dimension, Contribution, Family, FamilyIndex, HighestWeight, Spectrum,
    SpectrumBuilder, SpectrumSource, TwistPower,
};
use crate::weyl::WeightVector;

/// A single admissible index together with everything derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineBundleContribution {
    pub index: FamilyIndex,
    pub eigenvalue: u64,
    pub multiplicity: BigUint,
    pub highest_weight: HighestWeight,
}

/// Smallest admissible `l` for a family at twist `m`.
///
/// `r` and `epsilon` are only read for [`Family::F1`].
pub fn min_l(d: i64, m: TwistPower, family: Family, r: i64, epsilon: i64) -> i64 {
    let h = (d + 1) / 2;
    let m = m.0;
    match family {
        Family::F1 => epsilon.max(h - r + m),
        Family::F2 => 0.max(m + h),
        Family::F3 => 0.max(m - h),
    }
}

/// Validates `idx` against its family constraint at `(d, m)`. The `s` field is ignored.
pub fn check_index(d: i64, m: TwistPower, idx: &FamilyIndex) -> Result<()> {
    check_odd_dimension(d)?;
    let (r, eps) = match idx.family {
        Family::F1 => {
            let r = idx.r_value()?;
            if !(1..d).contains(&r) {
                return Err(Error::Constraint(format!(
                    "{idx}: F1 requires 1 <= r <= d - 1 = {}",
                    d - 1
                )));
            }
            (r, idx.epsilon_value()?)
        }
        _ => (0, 0),
    };
    let lb = min_l(d, m, idx.family, r, eps);
    if idx.l < lb {
        let rule = match idx.family {
            Family::F1 => "l >= max(eps, (d+1)/2 - r + m)",
            Family::F2 => "l >= max(0, m + (d+1)/2)",
            Family::F3 => "l >= max(0, m - (d+1)/2)",
        };
        return Err(Error::Constraint(format!(
            "{idx} at d = {d}, m = {}: {} requires {rule} = {lb}",
            m.0, idx.family
        )));
    }
    Ok(())
}

/// The eigenvalue as a signed integer, before the sign check.
fn raw_eigenvalue(d: i64, m: i64, idx: &FamilyIndex) -> (i128, i128) {
    let (d, m, l) = (d as i128, m as i128, idx.l as i128);
    match idx.family {
        Family::F1 => {
            let r = idx.r.unwrap_or(0) as i128;
            let eps = idx.epsilon.unwrap_or(0) as i128;
            (2 * (r + l), d + 1 + 2 * (l - m - eps))
        }
        Family::F2 => (2 * l, 2 * l + d - 1 - 2 * m),
        Family::F3 => (2 * (d + l), d + 1 + 2 * (l - m)),
    }
}

fn to_eigenvalue(first: i128, second: i128, what: impl FnOnce() -> String) -> Result<u64> {
    let value = first * second;
    u64::try_from(value)
        .map_err(|_| Error::Consistency(format!("eigenvalue {value} of {} out of range", what())))
}

/// Eigenvalue of the squared twisted Dirac operator for an admissible index.
pub fn family_eigenvalue(d: i64, m: impl Into<TwistPower>, idx: &FamilyIndex) -> Result<u64> {
    let m = m.into();
    check_index(d, m, idx)?;
    let (a, b) = raw_eigenvalue(d, m.0, idx);
    to_eigenvalue(a, b, || idx.to_string())
}

/// `∏_{k=2}^d (1 + l/(k−1)) · (1 + head/d) · ∏_{j=2}^d (1 + tail/(d−j+1))`
pub(crate) fn product_multiplicity(d: i64, l: i64, head: i64, tail: i64) -> Result<Rational> {
    let one = Rational::one();
    let mut acc = &one + arith::ratio(head, d)?;
    for k in 2..=d {
        acc *= &one + arith::ratio(l, k - 1)?;
    }
    for j in 2..=d {
        acc *= &one + arith::ratio(tail, d - j + 1)?;
    }
    Ok(acc)
}

/// Closed-form multiplicity as an exact rational, before the integrality check.
///
/// The constraint on `idx` is not checked.
pub fn family_multiplicity_rational(d: i64, m: i64, idx: &FamilyIndex) -> Result<Rational> {
    let h = (d + 1) / 2;
    let l = idx.l;
    match idx.family {
        Family::F1 => {
            let r = idx.r_value()?;
            let eps = idx.epsilon_value()?;
            let prefactor = arith::ratio(d * (h + r - m + 2 * l - eps), (r + l) * (h - m + l - eps))?;
            Ok(prefactor
                * arith::uint(binomial(d + l - eps, d)?)
                * arith::uint(binomial(d - 1, d - r - eps)?)
                * arith::uint(binomial((d - 1) / 2 + r - m + l, d)?))
        }
        Family::F2 => product_multiplicity(d, l, 2 * l - h - m, l - h - m),
        Family::F3 => product_multiplicity(d, l, 2 * l + h - m, l + h - m),
    }
}

/// Multiplicity of the contribution of `idx`, from the closed-form expressions.
pub fn family_multiplicity(d: i64, m: impl Into<TwistPower>, idx: &FamilyIndex) -> Result<BigUint> {
    let m = m.into();
    check_index(d, m, idx)?;
    let value = family_multiplicity_rational(d, m.0, idx)?;
    arith::positive_integer(&value, || format!("multiplicity of {idx} at d = {d}, m = {}", m.0))
}

/// Highest weight of the `SU(d+1)` representation behind `idx`.
pub fn family_highest_weight(
    d: i64,
    m: impl Into<TwistPower>,
    idx: &FamilyIndex,
) -> Result<HighestWeight> {
    let m = m.into();
    check_index(d, m, idx)?;
    let (m, l, h) = (m.0, idx.l, (d + 1) / 2);
    let half = (d - 1) / 2;
    let d = d as usize;
    let mut coords = Vec::with_capacity(d);
    match idx.family {
        Family::F1 => {
            let r = idx.r_value()?;
            let eps = idx.epsilon_value()?;
            let upper = r + l - half - m;
            let lower = r + l - h - m;
            coords.push(r + 2 * l - half - m - eps);
            coords.extend(std::iter::repeat_n(upper, r as usize - 1));
            coords.push(lower + eps);
            coords.extend(std::iter::repeat_n(lower, d - r as usize - 1));
        }
        Family::F2 => {
            coords.push(2 * l - h - m);
            coords.extend(std::iter::repeat_n(l - h - m, d - 1));
        }
        Family::F3 => {
            coords.push(2 * l + h - m);
            coords.extend(std::iter::repeat_n(l + h - m, d - 1));
        }
    }
    Ok(WeightVector::new(coords))
}

/// Eigenvalue, multiplicity and highest weight of one admissible index.
pub fn contribution(d: i64, m: impl Into<TwistPower>, idx: &FamilyIndex) -> Result<LineBundleContribution> {
    let m = m.into();
    Ok(LineBundleContribution {
        index: idx.without_s(),
        eigenvalue: family_eigenvalue(d, m, idx)?,
        multiplicity: family_multiplicity(d, m, idx)?,
        highest_weight: family_highest_weight(d, m, idx)?,
    })
}

/// The `(family, r, epsilon)` strands of the spectrum at rank `d`.
pub(crate) fn strands(d: i64) -> impl Iterator<Item = (Family, i64, i64)> {
    let first = (1..d).flat_map(|r| (0..=1).map(move |eps| (Family::F1, r, eps)));
    first.chain([(Family::F2, 0, 0), (Family::F3, 0, 0)])
}

pub(crate) fn strand_index(family: Family, r: i64, eps: i64, l: i64) -> FamilyIndex {
    match family {
        Family::F1 => FamilyIndex::first(r, eps, l),
        Family::F2 => FamilyIndex::second(l),
        Family::F3 => FamilyIndex::third(l),
    }
}

/// Every admissible index with `l` at most `extra_l` above its family's lower bound.
pub fn admissible_indices(d: i64, m: impl Into<TwistPower>, extra_l: i64) -> Result<Vec<FamilyIndex>> {
    let m = m.into();
    check_odd_dimension(d)?;
    Ok(strands(d)
        .flat_map(|(family, r, eps)| {
            let lb = min_l(d, m, family, r, eps);
            (lb..=lb + extra_l).map(move |l| strand_index(family, r, eps, l))
        })
        .collect())
}

/// All eigenvalues `<= cutoff` of the squared Dirac operator twisted by `γ_d^m`.
pub fn enumerate_line_bundle(d: i64, m: impl Into<TwistPower>, cutoff: u64) -> Result<Spectrum> {
    let m = m.into();
    check_odd_dimension(d)?;
    let mut builder = SpectrumBuilder::new(SpectrumSource::LineBundle { d, m }, cutoff);
    for (family, r, eps) in strands(d) {
        let mut l = min_l(d, m, family, r, eps);
        loop {
            let idx = strand_index(family, r, eps, l);
            let (first, second) = raw_eigenvalue(d, m.0, &idx);
            let eigenvalue = to_eigenvalue(first, second, || idx.to_string())?;
            if eigenvalue > cutoff {
                // both factors are nondecreasing in l; the second grows by 2 per step
                if second > 0 {
                    break;
                }
            } else {
                builder.push(
                    eigenvalue,
                    Contribution {
                        index: idx,
                        multiplicity: family_multiplicity(d, m, &idx)?,
                        highest_weight: family_highest_weight(d, m, &idx)?,
                    },
                );
            }
            l += 1;
        }
    }
    Ok(builder.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::weyl_dim;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(family_eigenvalue(3, 0, &FamilyIndex::second(2)).unwrap(), 24);
        assert_eq!(family_eigenvalue(1, 0, &FamilyIndex::third(0)).unwrap(), 4);
        assert_eq!(family_eigenvalue(3, 0, &FamilyIndex::first(2, 0, 0)).unwrap(), 16);
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(family_multiplicity(3, 0, &FamilyIndex::first(2, 0, 0)).unwrap(), big(6));
        assert_eq!(family_multiplicity(3, 0, &FamilyIndex::second(2)).unwrap(), big(10));
        assert_eq!(family_multiplicity(1, 0, &FamilyIndex::second(1)).unwrap(), big(2));
    }

    #[test]
    fn highest_weight_examples() {
        assert_eq!(
            family_highest_weight(3, 0, &FamilyIndex::second(2)).unwrap(),
            WeightVector::new(vec![2, 0, 0])
        );
        assert_eq!(
            family_highest_weight(3, 0, &FamilyIndex::first(2, 0, 0)).unwrap(),
            WeightVector::new(vec![1, 1, 0])
        );
        assert_eq!(
            family_highest_weight(1, 0, &FamilyIndex::third(0)).unwrap(),
            WeightVector::new(vec![1])
        );
    }

    #[test]
    fn highest_weight_block_structure() {
        // d = 5, r = 2: 1 + (r−1) + 1 + (d−r−1) components
        let w = family_highest_weight(5, 1, &FamilyIndex::first(2, 1, 3)).unwrap();
        // u' = r+2l−2−m−ε = 4, u₊ = r+l−2−m = 2, u = r+l−3−m+ε = 2, u₋ = 1
        assert_eq!(w, WeightVector::new(vec![4, 2, 2, 1, 1]));
    }

    #[test]
    fn constraint_violations_are_named() {
        let err = family_eigenvalue(1, 0, &FamilyIndex::second(0)).unwrap_err();
        assert!(err.to_string().contains("m + (d+1)/2"), "{err}");
        assert!(err.is_validation());
        let err = family_eigenvalue(3, 0, &FamilyIndex::first(3, 0, 5)).unwrap_err();
        assert!(err.to_string().contains("1 <= r <= d - 1"), "{err}");
        let err = family_multiplicity(3, 0, &FamilyIndex::first(1, 1, 0)).unwrap_err();
        assert!(err.to_string().contains("max(eps"), "{err}");
        assert!(family_eigenvalue(2, 0, &FamilyIndex::third(0)).is_err());
        let bad_eps = FamilyIndex { epsilon: Some(2), ..FamilyIndex::first(1, 0, 4) };
        assert!(family_eigenvalue(3, 0, &bad_eps).is_err());
    }

    #[test]
    fn d1_has_no_first_family() {
        assert_eq!(strands(1).count(), 2);
        assert!(admissible_indices(1, 0, 3).unwrap().iter().all(|i| i.family != Family::F1));
    }

    #[test]
    fn round_sphere_small_cutoffs() {
        let s = enumerate_line_bundle(1, 0, 16).unwrap();
        let pairs: Vec<_> = s.pairs().map(|(e, m)| (e, m.clone())).collect();
        assert_eq!(pairs, vec![(4, big(4)), (16, big(8))]);
        assert!(enumerate_line_bundle(1, 0, 3).unwrap().is_empty());
    }

    #[test]
    fn d3_untwisted_contains_square() {
        let s = enumerate_line_bundle(3, 0, 16).unwrap();
        let entry = s.get(16).expect("16 present");
        assert!(entry.contributions.iter().any(|c| c.index == FamilyIndex::first(2, 0, 0)));
    }

    #[test]
    fn zero_eigenvalue_for_large_negative_twist() {
        // F2 at l = 0 is admissible once m <= −(d+1)/2: harmonic spinors.
        let s = enumerate_line_bundle(1, -2, 0).unwrap();
        assert_eq!(s.multiplicity(0), big(2));
        let s = enumerate_line_bundle(1, 2, 0).unwrap();
        assert_eq!(s.multiplicity(0), big(2));
    }

    #[test]
    fn multiplicity_matches_weyl_dim_small_grid() {
        for d in [1, 3, 5] {
            for m in -3..=3 {
                for idx in admissible_indices(d, m, 4).unwrap() {
                    let w = family_highest_weight(d, m, &idx).unwrap();
                    assert_eq!(
                        family_multiplicity(d, m, &idx).unwrap(),
                        weyl_dim(d as usize, &w).unwrap(),
                        "d={d} m={m} {idx}"
                    );
                }
            }
        }
    }

    #[test]
    fn contributions_sorted_within_entries() {
        let s = enumerate_line_bundle(5, 1, 300).unwrap();
        for e in s.entries() {
            assert!(e.contributions.windows(2).all(|w| w[0].index < w[1].index));
            assert!(e.eigenvalue % 2 == 0);
        }
    }
}
