//! Dirac operator of `ℂPᵈ` twisted by the spinor bundle of its normal bundle in `ℂPⁿ`.
//!
//! The normal spinor bundle splits as `⊕_s C(n−d, s)·γ_d^{(n−d)/2−s}`, so the
//! spectrum is a weighted union of line-bundle spectra. [`enumerate_normal`]
//! evaluates the combined eigenvalue and multiplicity formulas in `(r, s, ε, l)`
//! directly; [`substitution_merge`] rebuilds the same spectrum from
//! [`enumerate_line_bundle`] and serves as a cross-check.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::arith::{self, binomial, Rational};
use crate::error::{Error, Result};
use crate::line_bundle::{self, enumerate_line_bundle, product_multiplicity, strand_index, strands};
use crate::types::{
    Contribution, EmbeddingParams, Family, FamilyIndex, HighestWeight, Spectrum, SpectrumBuilder,
    SpectrumSource, TwistPower,
};

/// One summand `C(n−d, s)·γ_d^power` of the normal spinor bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTerm {
    pub power: TwistPower,
    pub multiplicity: BigUint,
}

/// Splitting of the normal spinor bundle into powers of `γ_d`, by descending power.
pub fn decompose_normal_spinor(params: EmbeddingParams) -> Vec<DecompositionTerm> {
    let codim = params.codim();
    (0..=codim)
        .map(|s| DecompositionTerm {
            power: params.twist_for(s),
            multiplicity: binomial(codim, s).expect("codim is positive"),
        })
        .collect()
}

/// Smallest admissible `l` for the strand `(family, r, s, epsilon)`.
pub fn min_l(params: EmbeddingParams, family: Family, r: i64, s: i64, epsilon: i64) -> i64 {
    let (d, n) = (params.d(), params.n());
    match family {
        Family::F1 => epsilon.max((n + 1) / 2 - r - s),
        Family::F2 => 0.max((n + 1) / 2 - s),
        Family::F3 => 0.max((n - 1) / 2 - d - s),
    }
}

fn s_value(params: EmbeddingParams, idx: &FamilyIndex) -> Result<i64> {
    let s = idx
        .s
        .ok_or_else(|| Error::Constraint(format!("{idx}: s is required for the normal spectrum")))?;
    if !(0..=params.codim()).contains(&s) {
        return Err(Error::Constraint(format!(
            "{idx}: requires 0 <= s <= n - d = {}",
            params.codim()
        )));
    }
    Ok(s)
}

/// Validates `idx` (which must carry `s`) against the constraints of its family.
pub fn check_index(params: EmbeddingParams, idx: &FamilyIndex) -> Result<()> {
    let s = s_value(params, idx)?;
    let (r, eps) = match idx.family {
        Family::F1 => {
            let r = idx.r_value()?;
            if !(1..params.d()).contains(&r) {
                return Err(Error::Constraint(format!(
                    "{idx}: F1 requires 1 <= r <= d - 1 = {}",
                    params.d() - 1
                )));
            }
            (r, idx.epsilon_value()?)
        }
        _ => (0, 0),
    };
    let lb = min_l(params, idx.family, r, s, eps);
    if idx.l < lb {
        let rule = match idx.family {
            Family::F1 => "l >= max(eps, (n+1)/2 - r - s)",
            Family::F2 => "l >= max(0, (n+1)/2 - s)",
            Family::F3 => "l >= max(0, (n-1)/2 - d - s)",
        };
        return Err(Error::Constraint(format!("{idx} on {params}: requires {rule} = {lb}")));
    }
    Ok(())
}

fn raw_eigenvalue(params: EmbeddingParams, idx: &FamilyIndex) -> (i128, i128) {
    let (d, n) = (params.d() as i128, params.n() as i128);
    let s = idx.s.unwrap_or(0) as i128;
    let l = idx.l as i128;
    match idx.family {
        Family::F1 => {
            let r = idx.r.unwrap_or(0) as i128;
            let eps = idx.epsilon.unwrap_or(0) as i128;
            (2 * (r + l), 2 * d + 1 - n + 2 * (s + l - eps))
        }
        Family::F2 => (4 * l, l + s + d - (n + 1) / 2),
        Family::F3 => (2 * (d + l), 2 * d - n + 1 + 2 * (l + s)),
    }
}

fn eigenvalue_of(params: EmbeddingParams, idx: &FamilyIndex) -> Result<u64> {
    let (a, b) = raw_eigenvalue(params, idx);
    u64::try_from(a * b)
        .map_err(|_| Error::Consistency(format!("eigenvalue of {idx} on {params} is negative")))
}

/// Eigenvalue contributed by an admissible `(family, r, s, ε, l)` index.
pub fn normal_eigenvalue(params: EmbeddingParams, idx: &FamilyIndex) -> Result<u64> {
    check_index(params, idx)?;
    eigenvalue_of(params, idx)
}

/// Exact rational value of the multiplicity formula; the admissibility of `idx` is not checked.
pub fn normal_multiplicity_rational(params: EmbeddingParams, idx: &FamilyIndex) -> Result<Rational> {
    let (d, n) = (params.d(), params.n());
    let s = s_value(params, idx)?;
    let l = idx.l;
    let weight = arith::uint(binomial(n - d, s)?);
    let body = match idx.family {
        Family::F1 => {
            let r = idx.r_value()?;
            let eps = idx.epsilon_value()?;
            let prefactor = arith::ratio(
                d * (d - (n - 1) / 2 + r + s + 2 * l - eps),
                (r + l) * (d - (n - 1) / 2 + s + l - eps),
            )?;
            prefactor
                * arith::uint(binomial(d + l - eps, d)?)
                * arith::uint(binomial(d - 1, d - r - eps)?)
                * arith::uint(binomial(d - (n + 1) / 2 + r + s + l, d)?)
        }
        Family::F2 => product_multiplicity(d, l, 2 * l - (n + 1) / 2 + s, l - (n + 1) / 2 + s)?,
        Family::F3 => {
            product_multiplicity(d, l, 2 * l + d - (n - 1) / 2 + s, l + d - (n - 1) / 2 + s)?
        }
    };
    Ok(weight * body)
}

/// Multiplicity of the contribution of `idx`, including the `C(n−d, s)` factor.
pub fn normal_multiplicity(params: EmbeddingParams, idx: &FamilyIndex) -> Result<BigUint> {
    check_index(params, idx)?;
    let value = normal_multiplicity_rational(params, idx)?;
    arith::positive_integer(&value, || format!("multiplicity of {idx} on {params}"))
}

/// Highest weight behind `idx`, read off the summand `γ_d^{(n−d)/2−s}`.
pub fn normal_highest_weight(params: EmbeddingParams, idx: &FamilyIndex) -> Result<HighestWeight> {
    let s = s_value(params, idx)?;
    line_bundle::family_highest_weight(params.d(), params.twist_for(s), idx)
}

/// All eigenvalues `<= cutoff` of the squared Dirac operator twisted by the normal spinor bundle.
pub fn enumerate_normal(params: EmbeddingParams, cutoff: u64) -> Result<Spectrum> {
    let mut builder = SpectrumBuilder::new(SpectrumSource::NormalSpinor(params), cutoff);
    for s in 0..=params.codim() {
        for (family, r, eps) in strands(params.d()) {
            let mut l = min_l(params, family, r, s, eps);
            loop {
                let idx = strand_index(family, r, eps, l).with_s(s);
                let (_, second) = raw_eigenvalue(params, &idx);
                let eigenvalue = eigenvalue_of(params, &idx)?;
                if eigenvalue > cutoff {
                    if second > 0 {
                        break;
                    }
                } else {
                    builder.push(
                        eigenvalue,
                        Contribution {
                            index: idx,
                            multiplicity: normal_multiplicity(params, &idx)?,
                            highest_weight: normal_highest_weight(params, &idx)?,
                        },
                    );
                }
                l += 1;
            }
        }
    }
    Ok(builder.finish())
}

/// The normal spectrum assembled from line-bundle spectra: each summand
/// `C(n−d, s)·γ_d^{(n−d)/2−s}` contributes its spectrum scaled by `C(n−d, s)`.
pub fn substitution_merge(params: EmbeddingParams, cutoff: u64) -> Result<Spectrum> {
    let mut builder = SpectrumBuilder::new(SpectrumSource::NormalSpinor(params), cutoff);
    for (s, term) in decompose_normal_spinor(params).into_iter().enumerate() {
        let spectrum = enumerate_line_bundle(params.d(), term.power, cutoff)?;
        for entry in spectrum.entries() {
            for c in &entry.contributions {
                builder.push(
                    entry.eigenvalue,
                    Contribution {
                        index: c.index.with_s(s as i64),
                        multiplicity: &c.multiplicity * &term.multiplicity,
                        highest_weight: c.highest_weight.clone(),
                    },
                );
            }
        }
    }
    Ok(builder.finish())
}

/// Lowest eigenvalue of the squared operator: `0` for `d < (n+1)/2`, else `(n+1)(2d+1−n)`.
pub fn lowest_eigenvalue(params: EmbeddingParams) -> u64 {
    let (d, n) = (params.d(), params.n());
    if 2 * d < n + 1 {
        0
    } else {
        ((n + 1) * (2 * d + 1 - n)) as u64
    }
}

/// Smallest eigenvalue of each family. Eigenvalues are nondecreasing in `l`
/// along a strand, so each strand attains its minimum at its lowest `l`.
pub fn family_minima(params: EmbeddingParams) -> Result<BTreeMap<Family, u64>> {
    let mut minima = BTreeMap::new();
    for s in 0..=params.codim() {
        for (family, r, eps) in strands(params.d()) {
            let l = min_l(params, family, r, s, eps);
            let value = normal_eigenvalue(params, &strand_index(family, r, eps, l).with_s(s))?;
            minima
                .entry(family)
                .and_modify(|v: &mut u64| *v = (*v).min(value))
                .or_insert(value);
        }
    }
    Ok(minima)
}
