//! `SU(d+1)` root data in θ-coordinates and the Weyl dimension formula.
//!
//! Weights are integer vectors `(λ_1, …, λ_d)` in the basis `θ_1, …, θ_d` of the
//! dual of a maximal torus. The invariant inner product is `⟨u, v⟩ = u·β·vᵀ`
//! with `β_jk = 2/(d+1)·(−1 + (d+1)δ_jk)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::arith::{self, Rational};
use crate::error::{Error, Result};

/// Integer weight in θ-coordinates; its length is the rank `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    coords: Vec<i64>,
}

impl WeightVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zero(d: usize) -> Self {
        Self { coords: vec![0; d] }
    }

    /// Unit vector `θ_j` (1-based, as in the usual notation).
    pub fn theta(d: usize, j: usize) -> Self {
        let mut coords = vec![0; d];
        coords[j - 1] = 1;
        Self { coords }
    }

    pub fn d(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}

impl From<Vec<i64>> for WeightVector {
    fn from(coords: Vec<i64>) -> Self {
        Self::new(coords)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Positive roots of `SU(d+1)` and their half-sum `δ₊`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub d: usize,
    pub positive_roots: Vec<WeightVector>,
    pub delta_plus: WeightVector,
}

/// Positive roots `θ_j − θ_k` (`j < k`) followed by `θ_j + Σ_k θ_k`, and
/// `δ₊ = Σ_k (d − k + 1) θ_k`.
pub fn root_system(d: usize) -> Result<RootSystem> {
    if d == 0 {
        return Err(Error::InvalidParameter("rank d must be positive".into()));
    }
    let mut positive_roots = Vec::with_capacity(d * (d + 1) / 2);
    for j in 0..d {
        for k in j + 1..d {
            let mut c = vec![0; d];
            c[j] = 1;
            c[k] = -1;
            positive_roots.push(WeightVector::new(c));
        }
    }
    for j in 0..d {
        let mut c = vec![1; d];
        c[j] = 2;
        positive_roots.push(WeightVector::new(c));
    }
    let delta_plus = WeightVector::new((1..=d as i64).rev().collect());
    Ok(RootSystem { d, positive_roots, delta_plus })
}

fn check_len(d: usize, w: &WeightVector) -> Result<()> {
    if w.d() != d {
        return Err(Error::LengthMismatch { expected: d, found: w.d() });
    }
    Ok(())
}

/// Invariant inner product `u·β·vᵀ`.
pub fn inner(d: usize, u: &WeightVector, v: &WeightVector) -> Result<Rational> {
    check_len(d, u)?;
    check_len(d, v)?;
    let dp1 = d as i64 + 1;
    // β = 2/(d+1) · B with B_jk = (d+1)δ_jk − 1
    let mut acc = BigInt::from(0);
    for (j, &uj) in u.coords.iter().enumerate() {
        for (k, &vk) in v.coords.iter().enumerate() {
            let b = if j == k { dp1 - 1 } else { -1 };
            acc += BigInt::from(uj) * BigInt::from(b) * BigInt::from(vk);
        }
    }
    Ok(Rational::from_integer(acc) * arith::ratio(2, dp1)?)
}

/// Weyl dimension `∏_{α∈Δ₊} (1 + ⟨λ,α⟩/⟨δ₊,α⟩)` of the representation with highest weight `λ`.
///
/// Dominance is not checked; a product that is not a positive integer is
/// reported as [`Error::InadmissibleWeight`].
pub fn weyl_dim(d: usize, lambda: &WeightVector) -> Result<BigUint> {
    let roots = root_system(d)?;
    weyl_dim_with(&roots, lambda)
}

/// [`weyl_dim`] against a precomputed root system.
pub fn weyl_dim_with(roots: &RootSystem, lambda: &WeightVector) -> Result<BigUint> {
    check_len(roots.d, lambda)?;
    let one = Rational::one();
    let mut product = one.clone();
    for alpha in &roots.positive_roots {
        let denom = inner(roots.d, &roots.delta_plus, alpha)?;
        let numer = inner(roots.d, lambda, alpha)?;
        product *= &one + numer / denom;
    }
    if !product.is_integer() || product <= Rational::from_integer(0.into()) {
        return Err(Error::InadmissibleWeight {
            weight: lambda.to_string(),
            value: product.to_string(),
        });
    }
    Ok(product.to_integer().to_biguint().expect("positive"))
}
