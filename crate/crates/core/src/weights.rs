//! Weight data `(g, a_1, ..., a_n)` for weighted pointed stable curves.
//!
//! Weights are exact rationals in `(0, 1]`. Two flavours are supported:
//! the usual [`Mode::Strict`] data with `2g - 2 + sum a_i > 0`, and the
//! genus-zero [`Mode::SumTwo`] variation where the weights sum to exactly two.
//! Positions are meaningful and are never sorted.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{format_rational, int, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("weight list is empty")]
    Empty,
    #[error("weight a_{index} = {value} lies outside (0, 1]")]
    WeightOutOfRange { index: usize, value: String },
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("cannot parse weight data: {0}")]
    Parse(String),
}

impl WeightError {
    pub fn code(&self) -> &'static str {
        match self {
            WeightError::Empty => "empty_weights",
            WeightError::WeightOutOfRange { .. } => "weight_out_of_range",
            WeightError::NotAdmissible(_) => "not_admissible",
            WeightError::IndexOutOfRange(_) => "index_out_of_range",
            WeightError::ShapeMismatch(_) => "shape_mismatch",
            WeightError::Parse(_) => "parse_error",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Strict,
    SumTwo,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::SumTwo => "sum_two",
        })
    }
}

/// A single weight, a reduced rational in `(0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Rational);

impl Weight {
    pub fn new(value: Rational) -> Option<Self> {
        (value > Rational::zero() && value <= Rational::one()).then_some(Weight(value))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

/// Validated weight data. Construct through [`validate_weight_data`] or the
/// Kapranov generators; every value of this type satisfies its mode's
/// admissibility inequality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WeightDataJson", into = "WeightDataJson")]
pub struct WeightData {
    genus: u32,
    weights: Vec<Weight>,
    mode: Mode,
}

impl WeightData {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Number of markings.
    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// Weight of the marking with 1-based label `label`.
    pub fn weight(&self, label: usize) -> &Rational {
        self.weights[label - 1].value()
    }

    pub fn values(&self) -> Vec<Rational> {
        self.weights.iter().map(|w| w.0.clone()).collect()
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().fold(Rational::zero(), |acc, w| acc + &w.0)
    }

    /// Relabels the markings by `images` (0-based, `i -> images[i]`): the
    /// weight carried by marking `i` moves to position `images[i]`.
    pub fn relabeled(&self, images: &[usize]) -> Result<WeightData, WeightError> {
        if images.len() != self.n() {
            return Err(WeightError::ShapeMismatch(format!(
                "permutation of length {} applied to {} markings",
                images.len(),
                self.n()
            )));
        }
        let mut out = vec![None; self.n()];
        for (i, &target) in images.iter().enumerate() {
            if target >= self.n() || out[target].is_some() {
                return Err(WeightError::IndexOutOfRange(format!(
                    "{images:?} is not a permutation"
                )));
            }
            out[target] = Some(self.weights[i].clone());
        }
        Ok(WeightData {
            genus: self.genus,
            weights: out.into_iter().map(Option::unwrap).collect(),
            mode: self.mode,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("weight data always serializes")
    }

    pub fn weight_strings(&self) -> Vec<String> {
        self.weights.iter().map(Weight::to_string).collect()
    }
}

impl fmt::Display for WeightData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}; ", self.genus)?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "; {})", self.mode)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct WeightDataJson {
    #[serde(default)]
    genus: u32,
    #[serde(default = "default_mode")]
    mode: Mode,
    weights: Vec<String>,
}

fn default_mode() -> Mode {
    Mode::Strict
}

impl TryFrom<WeightDataJson> for WeightData {
    type Error = WeightError;

    fn try_from(raw: WeightDataJson) -> Result<Self, Self::Error> {
        let values = raw
            .weights
            .iter()
            .map(|s| parse_rational(s).map_err(|e| WeightError::Parse(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        validate_weight_data(raw.genus, &values, raw.mode)
    }
}

impl From<WeightData> for WeightDataJson {
    fn from(w: WeightData) -> Self {
        WeightDataJson {
            genus: w.genus,
            mode: w.mode,
            weights: w.weight_strings(),
        }
    }
}

/// Checks `0 < a_i <= 1` and the mode's sum condition, returning the
/// normalized data or the first violated condition.
pub fn validate_weight_data(
    genus: u32,
    weights: &[Rational],
    mode: Mode,
) -> Result<WeightData, WeightError> {
    if weights.is_empty() {
        return Err(WeightError::Empty);
    }
    let weights = weights
        .iter()
        .enumerate()
        .map(|(i, q)| {
            Weight::new(q.clone()).ok_or_else(|| WeightError::WeightOutOfRange {
                index: i + 1,
                value: format_rational(q),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let data = WeightData {
        genus,
        weights,
        mode,
    };
    let total = data.total();
    match mode {
        Mode::Strict => {
            let lhs = int(2 * genus as i64 - 2) + &total;
            if lhs <= Rational::zero() {
                return Err(WeightError::NotAdmissible(format!(
                    "2g - 2 + sum a_i = {} is not > 0",
                    format_rational(&lhs)
                )));
            }
        }
        Mode::SumTwo => {
            if genus != 0 {
                return Err(WeightError::NotAdmissible(format!(
                    "sum-two weight data requires genus 0, got {genus}"
                )));
            }
            if total != int(2) {
                return Err(WeightError::NotAdmissible(format!(
                    "sum a_i = {} is not equal to 2",
                    format_rational(&total)
                )));
            }
        }
    }
    Ok(data)
}

/// Parses weight data from JSON: either the full object form
/// `{"genus": .., "mode": .., "weights": [..]}` or a bare array of weight
/// strings, in which case `genus` and `mode` supply the rest.
pub fn weight_data_from_json(
    text: &str,
    genus: u32,
    mode: Mode,
) -> Result<WeightData, WeightError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| WeightError::Parse(e.to_string()))?;
    match value {
        serde_json::Value::Array(items) => {
            let values = items
                .iter()
                .map(|item| match item {
                    serde_json::Value::String(s) => {
                        parse_rational(s).map_err(|e| WeightError::Parse(e.to_string()))
                    }
                    serde_json::Value::Number(n) if n.is_i64() => {
                        Ok(int(n.as_i64().expect("checked")))
                    }
                    other => Err(WeightError::Parse(format!(
                        "weights must be fraction strings, got {other}"
                    ))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            validate_weight_data(genus, &values, mode)
        }
        obj @ serde_json::Value::Object(_) => {
            let raw: WeightDataJson =
                serde_json::from_value(obj).map_err(|e| WeightError::Parse(e.to_string()))?;
            WeightData::try_from(raw)
        }
        other => Err(WeightError::Parse(format!(
            "expected an array or object, got {other}"
        ))),
    }
}

/// Kapranov weight data `A_{r,s}[n]`: `n - r - 1` copies of `1/(n-r-1)`,
/// then `s/(n-r-1)`, then `r` ones.
pub fn kapranov_weights(n: usize, r: usize, s: usize) -> Result<WeightData, WeightError> {
    if n < 4 {
        return Err(WeightError::IndexOutOfRange(format!(
            "Kapranov weights need n >= 4, got n = {n}"
        )));
    }
    if r < 1 || r > n - 3 {
        return Err(WeightError::IndexOutOfRange(format!(
            "r = {r} must lie in [1, {}]",
            n - 3
        )));
    }
    if s < 1 || s > n - r - 2 {
        return Err(WeightError::IndexOutOfRange(format!(
            "s = {s} must lie in [1, {}] for n = {n}, r = {r}",
            n - r - 2
        )));
    }
    let light = n - r - 1;
    let mut values = vec![crate::rational::frac(1, light as i64); light];
    values.push(crate::rational::frac(s as i64, light as i64));
    values.extend(std::iter::repeat_n(int(1), r));
    validate_weight_data(0, &values, Mode::Strict)
}

/// The Losev-Manin weights `A_{1, n-3}[n]`.
pub fn losev_manin_weights(n: usize) -> Result<WeightData, WeightError> {
    if n < 4 {
        return Err(WeightError::IndexOutOfRange(format!(
            "Losev-Manin weights need n >= 4, got n = {n}"
        )));
    }
    kapranov_weights(n, 1, n - 3)
}

/// Iterates every valid Kapranov index pair `(r, s)` for `n` markings.
pub fn kapranov_indices(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n.saturating_sub(3)).flat_map(move |r| (1..=n - r - 2).map(move |s| (r, s)))
}

/// `3g - 3 + n`.
pub fn moduli_dimension(w: &WeightData) -> i64 {
    3 * w.genus as i64 - 3 + w.n() as i64
}

/// Componentwise `a_i >= b_i`; a reduction morphism from `a` to `b` exists
/// exactly when this holds.
pub fn dominates(a: &WeightData, b: &WeightData) -> Result<bool, WeightError> {
    if a.genus != b.genus || a.n() != b.n() {
        return Err(WeightError::ShapeMismatch(format!(
            "(g={}, n={}) vs (g={}, n={})",
            a.genus,
            a.n(),
            b.genus,
            b.n()
        )));
    }
    Ok(a.weights.iter().zip(&b.weights).all(|(x, y)| x >= y))
}

/// Weights rescaled to integers over a common denominator, so that subset
/// sums can be compared against one without rational arithmetic.
#[derive(Debug, Clone)]
pub(crate) struct ScaledWeights {
    pub numers: Vec<i128>,
    pub denom: i128,
}

impl ScaledWeights {
    /// `None` when the common denominator or the scaled total overflows.
    pub fn new(w: &WeightData) -> Option<Self> {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let mut denom = num_bigint::BigInt::one();
        for q in w.weights.iter() {
            denom = denom.lcm(q.0.denom());
        }
        let d = denom.to_i128()?;
        let numers = w
            .weights
            .iter()
            .map(|q| (q.0.numer() * (&denom / q.0.denom())).to_i128())
            .collect::<Option<Vec<_>>>()?;
        numers
            .iter()
            .try_fold(0i128, |acc, &x| acc.checked_add(x))?;
        Some(ScaledWeights { numers, denom: d })
    }

    /// Sum over the markings whose 0-based positions are set in `mask`.
    pub fn mask_sum(&self, mask: u64) -> i128 {
        let mut total = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            total += self.numers[i];
            m &= m - 1;
        }
        total
    }

    pub fn at_most_one(&self, mask: u64) -> bool {
        self.mask_sum(mask) <= self.denom
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn ws(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(p, q)| frac(p, q)).collect()
    }

    #[test]
    fn deligne_mumford_triple() {
        let w = validate_weight_data(0, &ws(&[(1, 1); 3]), Mode::Strict).unwrap();
        assert_eq!(w.n(), 3);
        assert_eq!(moduli_dimension(&w), 0);
    }

    #[test]
    fn sum_two_sixths() {
        let thirds = ws(&[(1, 3); 6]);
        let w = validate_weight_data(0, &thirds, Mode::SumTwo).unwrap();
        assert_eq!(w.total(), int(2));
        let err = validate_weight_data(0, &thirds, Mode::Strict).unwrap_err();
        assert!(matches!(err, WeightError::NotAdmissible(_)));
        let err = validate_weight_data(1, &thirds, Mode::SumTwo).unwrap_err();
        assert!(matches!(err, WeightError::NotAdmissible(_)));
        let err = validate_weight_data(0, &ws(&[(1, 3); 5]), Mode::SumTwo).unwrap_err();
        assert!(matches!(err, WeightError::NotAdmissible(_)));
    }

    #[test]
    fn out_of_range_weights() {
        let err = validate_weight_data(0, &ws(&[(1, 1), (0, 1), (1, 1)]), Mode::Strict).unwrap_err();
        assert_eq!(
            err,
            WeightError::WeightOutOfRange {
                index: 2,
                value: "0".into()
            }
        );
        let err = validate_weight_data(0, &ws(&[(3, 2), (1, 1), (1, 1)]), Mode::Strict).unwrap_err();
        assert_eq!(err.code(), "weight_out_of_range");
        let err = validate_weight_data(0, &ws(&[(1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (-1, 3)]), Mode::SumTwo);
        assert!(matches!(err, Err(WeightError::WeightOutOfRange { index: 7, .. })));
        assert_eq!(validate_weight_data(0, &[], Mode::Strict), Err(WeightError::Empty));
    }

    #[test]
    fn kapranov_examples() {
        let w = kapranov_weights(6, 1, 1).unwrap();
        assert_eq!(w.weight_strings(), ["1/4", "1/4", "1/4", "1/4", "1/4", "1"]);
        let w = kapranov_weights(6, 3, 1).unwrap();
        assert_eq!(w.weight_strings(), ["1/2", "1/2", "1/2", "1", "1", "1"]);
        let err = kapranov_weights(6, 1, 4).unwrap_err();
        assert!(matches!(&err, WeightError::IndexOutOfRange(m) if m.contains("[1, 3]")));
        assert!(kapranov_weights(3, 1, 1).is_err());
        assert!(kapranov_weights(6, 4, 1).is_err());
        assert!(kapranov_weights(6, 0, 1).is_err());
    }

    #[test]
    fn losev_manin_examples() {
        // A_{1,n-3}: n-2 copies of 1/(n-2), then (n-3)/(n-2), then 1.
        let w = losev_manin_weights(5).unwrap();
        assert_eq!(w.weight_strings(), ["1/3", "1/3", "1/3", "2/3", "1"]);
        assert_eq!(w.total(), frac(8, 3));
        let w = losev_manin_weights(6).unwrap();
        assert_eq!(w.weight_strings(), ["1/4", "1/4", "1/4", "1/4", "3/4", "1"]);
        assert_eq!(w.total(), frac(11, 4));
        assert!(matches!(losev_manin_weights(3), Err(WeightError::IndexOutOfRange(_))));
    }

    #[test]
    fn dimensions() {
        let w = validate_weight_data(0, &ws(&[(1, 1); 6]), Mode::Strict).unwrap();
        assert_eq!(moduli_dimension(&w), 3);
        let w = validate_weight_data(1, &ws(&[(1, 1)]), Mode::Strict).unwrap();
        assert_eq!(moduli_dimension(&w), 1);
        let w = validate_weight_data(2, &ws(&[(1, 2); 5]), Mode::Strict).unwrap();
        assert_eq!(moduli_dimension(&w), 8);
    }

    #[test]
    fn domination_examples() {
        let dm = validate_weight_data(0, &ws(&[(1, 1); 6]), Mode::Strict).unwrap();
        let a6 = validate_weight_data(
            0,
            &ws(&[(1, 1), (1, 3), (1, 3), (1, 3), (1, 3), (1, 3)]),
            Mode::Strict,
        )
        .unwrap();
        assert!(dominates(&dm, &a6).unwrap());
        assert!(!dominates(&a6, &dm).unwrap());
        assert!(dominates(&a6, &a6).unwrap());

        let a = validate_weight_data(1, &ws(&[(1, 1), (1, 3), (1, 3), (1, 3)]), Mode::Strict).unwrap();
        let b = validate_weight_data(1, &ws(&[(1, 2), (1, 2), (1, 3), (1, 3)]), Mode::Strict).unwrap();
        assert!(!dominates(&a, &b).unwrap());

        let err = dominates(&dm, &a).unwrap_err();
        assert_eq!(err.code(), "shape_mismatch");
    }

    #[test]
    fn json_round_trip_and_bare_arrays() {
        let w = kapranov_weights(6, 2, 1).unwrap();
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(
            text,
            r#"{"genus":0,"mode":"strict","weights":["1/3","1/3","1/3","1/3","1","1"]}"#
        );
        let back: WeightData = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);

        let bare = weight_data_from_json(r#"["1","1/3","2/6","1/3"]"#, 1, Mode::Strict).unwrap();
        assert_eq!(bare.weight_strings(), ["1", "1/3", "1/3", "1/3"]);
        assert_eq!(bare.genus(), 1);

        let obj = weight_data_from_json(
            r#"{"genus":0,"mode":"sum_two","weights":["1/3","1/3","1/3","1/3","1/3","1/3"]}"#,
            5,
            Mode::Strict,
        )
        .unwrap();
        assert_eq!(obj.mode(), Mode::SumTwo);
        assert!(weight_data_from_json(r#"["1/3","x"]"#, 0, Mode::Strict).is_err());
        assert!(weight_data_from_json(r#"{"weights":["1/3","1/3"]}"#, 0, Mode::Strict).is_err());
    }

    #[test]
    fn relabel_moves_weights() {
        let w = validate_weight_data(1, &ws(&[(1, 1), (1, 3), (1, 2)]), Mode::Strict).unwrap();
        let r = w.relabeled(&[2, 0, 1]).unwrap();
        assert_eq!(r.weight_strings(), ["1/3", "1/2", "1"]);
        assert!(w.relabeled(&[0, 0, 1]).is_err());
        assert!(w.relabeled(&[0, 1]).is_err());
    }
}
