//! Boundary strata `D_{I,J}`, the contraction criterion for reduction
//! morphisms, and the factorization of a reduction into single-divisor
//! blow-downs.
//!
//! For genus zero `D_{I,J} = D_{J,I}`; the representative keeps the largest
//! label `n` in the body `J`. A weight-sum test on a genus-zero divisor looks
//! at both sides, since whichever side carries total weight `<= 1` is the tail
//! that collapses (in strict mode at most one side can).
//! For `g >= 1` only rational tails are modelled: `I` is the genus-zero side.

use std::fmt;

use serde::Serialize;

use crate::weights::{dominates, Mode, ScaledWeights, WeightData, WeightError};

/// Upper bound on `n` for operations that walk all `2^n` subsets.
pub const MAX_ENUMERATION_MARKINGS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StrataError {
    #[error(transparent)]
    Weights(#[from] WeightError),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not a reduction: {0}")]
    NotAReduction(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

impl StrataError {
    pub fn code(&self) -> &'static str {
        match self {
            StrataError::Weights(e) => e.code(),
            StrataError::IndexOutOfRange(_) => "index_out_of_range",
            StrataError::NotAReduction(_) => "not_a_reduction",
            StrataError::Unsupported(_) => "unsupported_mode",
            StrataError::ResourceLimit(_) => "resource_limit",
        }
    }
}

/// A subset of the marking labels `{1, ..., n}`, `n <= 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkingSet(u64);

impl MarkingSet {
    pub fn from_labels(labels: &[usize], n: usize) -> Result<Self, StrataError> {
        if n > 64 {
            return Err(StrataError::ResourceLimit(format!(
                "at most 64 markings are supported, got {n}"
            )));
        }
        let mut bits = 0u64;
        for &l in labels {
            if l == 0 || l > n {
                return Err(StrataError::IndexOutOfRange(format!(
                    "label {l} is not in {{1..{n}}}"
                )));
            }
            let bit = 1u64 << (l - 1);
            if bits & bit != 0 {
                return Err(StrataError::IndexOutOfRange(format!("label {l} repeated")));
            }
            bits |= bit;
        }
        Ok(MarkingSet(bits))
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        MarkingSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=64).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    pub fn complement(self, n: usize) -> Self {
        MarkingSet(!self.0 & full_mask(n))
    }

    pub fn is_subset_of(self, other: MarkingSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        (0..64).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }
}

impl fmt::Display for MarkingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

impl Serialize for MarkingSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tag {
    /// A genuine two-component boundary divisor.
    Nodal,
    /// Two markings of total weight `<= 1` may collide on a smooth curve.
    Coincidence,
    /// Three or more markings of total weight `<= 1`: the tail is contracted
    /// and the stratum has codimension `|I| - 1`.
    Contracted,
    Nonexistent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryDivisor {
    pub tail: MarkingSet,
    pub body: MarkingSet,
    pub tail_genus: u32,
    pub body_genus: u32,
    pub tag: Tag,
    /// The side whose weights sum to at most one, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub light_side: Option<MarkingSet>,
}

/// One divisor contracted by a reduction morphism, seen from the target as
/// the locus blown up to recover it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub divisor: BoundaryDivisor,
    /// The markings that collide once the tail is contracted.
    pub collapsed: MarkingSet,
    pub r: usize,
    pub image_codimension: usize,
    pub normal_bundle: String,
}

impl ReductionStep {
    fn new(divisor: BoundaryDivisor, collapsed: MarkingSet) -> Self {
        let r = collapsed.len();
        ReductionStep {
            divisor,
            collapsed,
            r,
            image_codimension: r - 1,
            normal_bundle: format!("(psi_1_dual)^({})", r - 1),
        }
    }
}

fn require_strict(w: &WeightData) -> Result<(), StrataError> {
    match w.mode() {
        Mode::Strict => Ok(()),
        Mode::SumTwo => Err(StrataError::Unsupported(
            "boundary combinatorics is only modelled for strict weight data".into(),
        )),
    }
}

fn scaled(w: &WeightData) -> Result<ScaledWeights, StrataError> {
    ScaledWeights::new(w)
        .ok_or_else(|| StrataError::ResourceLimit("weight denominators overflow i128".into()))
}

/// Puts `(I, J)` into canonical orientation.
pub fn canonicalize(genus: u32, n: usize, tail: MarkingSet) -> (MarkingSet, MarkingSet) {
    let body = tail.complement(n);
    if genus == 0 && tail.contains(n) {
        (body, tail)
    } else {
        (tail, body)
    }
}

fn classify_masks(genus: u32, n: usize, sums: &ScaledWeights, tail: MarkingSet) -> BoundaryDivisor {
    let (tail, body) = canonicalize(genus, n, tail);
    let mut divisor = BoundaryDivisor {
        tail,
        body,
        tail_genus: 0,
        body_genus: genus,
        tag: Tag::Nonexistent,
        light_side: None,
    };
    let min_body = if genus == 0 { 2 } else { 0 };
    if tail.len() < 2 || body.len() < min_body {
        return divisor;
    }
    let light = if sums.at_most_one(tail.mask()) {
        Some(tail)
    } else if genus == 0 && sums.at_most_one(body.mask()) {
        Some(body)
    } else {
        None
    };
    divisor.tag = match light {
        None => Tag::Nodal,
        Some(side) if side.len() == 2 => Tag::Coincidence,
        Some(_) => Tag::Contracted,
    };
    divisor.light_side = light;
    divisor
}

/// Classifies the stratum with markings `labels` on the rational tail.
pub fn classify_subset(w: &WeightData, labels: &[usize]) -> Result<BoundaryDivisor, StrataError> {
    require_strict(w)?;
    let set = MarkingSet::from_labels(labels, w.n())?;
    Ok(classify_masks(w.genus(), w.n(), &scaled(w)?, set))
}

/// Every canonical tail `I` with `|I| >= 2` (and `|J| >= 2` in genus zero),
/// in increasing mask order.
pub fn canonical_tails(genus: u32, n: usize) -> Result<Vec<MarkingSet>, StrataError> {
    if n > MAX_ENUMERATION_MARKINGS {
        return Err(StrataError::ResourceLimit(format!(
            "subset enumeration is capped at n = {MAX_ENUMERATION_MARKINGS}"
        )));
    }
    let top = if genus == 0 { n.saturating_sub(1) } else { n };
    let min_body = if genus == 0 { 2 } else { 0 };
    Ok((0..1u64 << top)
        .map(MarkingSet::from_mask)
        .filter(|s| s.len() >= 2 && n - s.len() >= min_body)
        .collect())
}

/// Every canonical stratum of `w` with its tag.
pub fn boundary_strata(w: &WeightData) -> Result<Vec<BoundaryDivisor>, StrataError> {
    require_strict(w)?;
    let sums = scaled(w)?;
    Ok(canonical_tails(w.genus(), w.n())?
        .into_iter()
        .map(|t| classify_masks(w.genus(), w.n(), &sums, t))
        .collect())
}

fn check_reduction(a: &WeightData, b: &WeightData) -> Result<(), StrataError> {
    require_strict(a)?;
    require_strict(b)?;
    if !dominates(a, b)? {
        return Err(StrataError::NotAReduction(format!(
            "{a} does not dominate {b} componentwise"
        )));
    }
    if a.n() > MAX_ENUMERATION_MARKINGS {
        return Err(StrataError::ResourceLimit(format!(
            "subset enumeration is capped at n = {MAX_ENUMERATION_MARKINGS}"
        )));
    }
    Ok(())
}

/// Divisors that exist for `a` and are contracted by the reduction `a -> b`:
/// all tails of size `>= 3` with `b`-weight at most one that are nodal
/// under `a`. Sorted by decreasing size, then lexicographically.
pub fn contracted_divisors(a: &WeightData, b: &WeightData) -> Result<Vec<ReductionStep>, StrataError> {
    check_reduction(a, b)?;
    let (genus, n) = (a.genus(), a.n());
    let sums_a = scaled(a)?;
    let sums_b = scaled(b)?;
    let min_body = if genus == 0 { 2 } else { 0 };
    let mut steps: Vec<ReductionStep> = (0..1u64 << n)
        .map(MarkingSet::from_mask)
        .filter(|s| s.len() >= 3 && n - s.len() >= min_body)
        .filter(|s| sums_b.at_most_one(s.mask()))
        .filter_map(|collapsed| {
            let before = classify_masks(genus, n, &sums_a, collapsed);
            if before.tag != Tag::Nodal {
                return None;
            }
            let after = classify_masks(genus, n, &sums_b, collapsed);
            debug_assert_eq!(after.tag, Tag::Contracted);
            Some(ReductionStep::new(after, collapsed))
        })
        .collect();
    steps.sort_by(|x, y| {
        y.r.cmp(&x.r)
            .then_with(|| x.collapsed.labels().cmp(&y.collapsed.labels()))
    });
    Ok(steps)
}

/// Orders the contracted divisors into a chain of single-divisor blow-ups,
/// larger tails first so that the order refines inclusion.
pub fn factor_reduction(a: &WeightData, b: &WeightData) -> Result<Vec<ReductionStep>, StrataError> {
    let chain = contracted_divisors(a, b)?;
    debug_assert!(chain.iter().enumerate().all(|(i, s)| chain[i + 1..]
        .iter()
        .all(|t| !s.collapsed.is_subset_of(t.collapsed))));
    Ok(chain)
}

/// With at most two markings the reduction to `M_{g,n}` is an isomorphism.
pub fn reduction_is_isomorphism(w: &WeightData) -> bool {
    w.n() <= 2
}
