//! Domain types shared by the spectrum modules.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::weyl::WeightVector;

/// Highest weight of an irreducible `SU(d+1)` representation in θ-coordinates.
pub type HighestWeight = WeightVector;

/// Checks that `d` is a valid complex dimension for the `ℂPᵈ` theorems (odd, positive).
pub fn check_odd_dimension(d: i64) -> Result<()> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("d must be positive, got {d}")));
    }
    if d % 2 == 0 {
        return Err(Error::InvalidParameter(format!("d must be odd, got {d}")));
    }
    Ok(())
}

/// The canonical embedding `ℂPᵈ → ℂPⁿ` with `d < n` both odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EmbeddingParams {
    d: i64,
    n: i64,
}

impl EmbeddingParams {
    pub fn new(d: i64, n: i64) -> Result<Self> {
        check_odd_dimension(d)?;
        if n < 3 {
            return Err(Error::InvalidParameter(format!("n must be at least 3, got {n}")));
        }
        if n % 2 == 0 {
            return Err(Error::InvalidParameter(format!("n must be odd, got {n}")));
        }
        if d >= n {
            return Err(Error::InvalidParameter(format!(
                "d must be smaller than n, got d = {d}, n = {n}"
            )));
        }
        Ok(Self { d, n })
    }

    /// Complex dimension of the submanifold.
    pub fn d(&self) -> i64 {
        self.d
    }

    /// Complex dimension of the ambient space.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Complex rank `n - d` of the normal bundle; always even and at least 2.
    pub fn codim(&self) -> i64 {
        self.n - self.d
    }

    /// Power of the tautological bundle carried by the `s`-th normal-spinor summand.
    pub fn twist_for(&self, s: i64) -> TwistPower {
        TwistPower(self.codim() / 2 - s)
    }
}

impl fmt::Display for EmbeddingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CP^{} -> CP^{}", self.d, self.n)
    }
}

/// Power `m` of the tautological line bundle; any integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistPower(pub i64);

impl From<i64> for TwistPower {
    fn from(m: i64) -> Self {
        TwistPower(m)
    }
}

/// One of the three eigenvalue families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    F1,
    F2,
    F3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::F1, Family::F2, Family::F3];

    pub fn number(self) -> u8 {
        match self {
            Family::F1 => 1,
            Family::F2 => 2,
            Family::F3 => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.number())
    }
}

/// Identifies a single eigenvalue contribution within a family.
///
/// `r` and `epsilon` are set only for [`Family::F1`]; `s` is set only when the
/// index comes from the normal-spinor enumeration. The derived ordering sorts
/// by family, then `r`, `s`, `epsilon` and `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyIndex {
    pub family: Family,
    pub r: Option<i64>,
    pub s: Option<i64>,
    pub epsilon: Option<i64>,
    pub l: i64,
}

impl FamilyIndex {
    pub fn first(r: i64, epsilon: i64, l: i64) -> Self {
        Self { family: Family::F1, r: Some(r), s: None, epsilon: Some(epsilon), l }
    }

    pub fn second(l: i64) -> Self {
        Self { family: Family::F2, r: None, s: None, epsilon: None, l }
    }

    pub fn third(l: i64) -> Self {
        Self { family: Family::F3, r: None, s: None, epsilon: None, l }
    }

    pub fn with_s(mut self, s: i64) -> Self {
        self.s = Some(s);
        self
    }

    pub fn without_s(mut self) -> Self {
        self.s = None;
        self
    }

    /// `r` of a first-family index; an error for the other families.
    pub(crate) fn r_value(&self) -> Result<i64> {
        self.r.ok_or_else(|| Error::Constraint(format!("{self}: r is required for F1")))
    }

    pub(crate) fn epsilon_value(&self) -> Result<i64> {
        let eps = self
            .epsilon
            .ok_or_else(|| Error::Constraint(format!("{self}: epsilon is required for F1")))?;
        if eps != 0 && eps != 1 {
            return Err(Error::Constraint(format!("{self}: epsilon must be 0 or 1")));
        }
        Ok(eps)
    }
}

impl fmt::Display for FamilyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.family)?;
        if let Some(r) = self.r {
            write!(f, "r={r}, ")?;
        }
        if let Some(s) = self.s {
            write!(f, "s={s}, ")?;
        }
        if let Some(eps) = self.epsilon {
            write!(f, "eps={eps}, ")?;
        }
        write!(f, "l={})", self.l)
    }
}

/// One admissible index with its share of an eigenvalue's multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contribution {
    pub index: FamilyIndex,
    pub multiplicity: BigUint,
    pub highest_weight: HighestWeight,
}

/// An eigenvalue of the squared operator with its aggregated multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub eigenvalue: u64,
    pub multiplicity: BigUint,
    pub contributions: Vec<Contribution>,
}

/// Which operator a [`Spectrum`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    /// Dirac operator of `ℂPᵈ` twisted by `γ_d^m`.
    LineBundle { d: i64, m: TwistPower },
    /// Dirac operator of `ℂPᵈ` twisted by the normal spinor bundle in `ℂPⁿ`.
    NormalSpinor(EmbeddingParams),
}

/// Eigenvalues of a squared twisted Dirac operator up to a cutoff, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub source: SpectrumSource,
    pub cutoff: u64,
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, eigenvalue: u64) -> Option<&SpectrumEntry> {
        self.entries
            .binary_search_by_key(&eigenvalue, |e| e.eigenvalue)
            .ok()
            .map(|i| &self.entries[i])
    }

    /// Multiplicity of `eigenvalue`, zero when it is not in the spectrum.
    pub fn multiplicity(&self, eigenvalue: u64) -> BigUint {
        self.get(eigenvalue).map(|e| e.multiplicity.clone()).unwrap_or_default()
    }

    pub fn lowest(&self) -> Option<u64> {
        self.entries.first().map(|e| e.eigenvalue)
    }

    /// Total multiplicity of eigenvalues `<= bound`.
    pub fn count_at_most(&self, bound: u64) -> BigUint {
        self.entries
            .iter()
            .take_while(|e| e.eigenvalue <= bound)
            .fold(BigUint::zero(), |acc, e| acc + &e.multiplicity)
    }

    /// Total multiplicity of eigenvalues `< bound`.
    pub fn count_below(&self, bound: u64) -> BigUint {
        self.entries
            .iter()
            .take_while(|e| e.eigenvalue < bound)
            .fold(BigUint::zero(), |acc, e| acc + &e.multiplicity)
    }

    /// Iterates `(eigenvalue, multiplicity)` pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (u64, &BigUint)> {
        self.entries.iter().map(|e| (e.eigenvalue, &e.multiplicity))
    }
}

/// Collects contributions and aggregates them by eigenvalue.
#[derive(Debug)]
pub(crate) struct SpectrumBuilder {
    source: SpectrumSource,
    cutoff: u64,
    buckets: BTreeMap<u64, Vec<Contribution>>,
}

impl SpectrumBuilder {
    pub(crate) fn new(source: SpectrumSource, cutoff: u64) -> Self {
        Self { source, cutoff, buckets: BTreeMap::new() }
    }

    pub(crate) fn push(&mut self, eigenvalue: u64, contribution: Contribution) {
        debug_assert!(eigenvalue <= self.cutoff);
        self.buckets.entry(eigenvalue).or_default().push(contribution);
    }

    pub(crate) fn finish(self) -> Spectrum {
        let entries = self
            .buckets
            .into_iter()
            .map(|(eigenvalue, mut contributions)| {
                contributions.sort_by_key(|c| c.index);
                let multiplicity = contributions
                    .iter()
                    .fold(BigUint::zero(), |acc, c| acc + &c.multiplicity);
                SpectrumEntry { eigenvalue, multiplicity, contributions }
            })
            .collect();
        Spectrum { source: self.source, cutoff: self.cutoff, entries }
    }
}
