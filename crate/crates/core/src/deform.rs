//! The Segre cubic threefold: its ten nodes, a chart-by-chart audit of the
//! singular scheme, and the Euler-characteristic ledger for its first-order
//! deformations.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::groebner::{
    buchberger_over, local_multiplicity_with, quotient_dimension, subspace_multiplicity, tyurina_ideal, GroebnerError,
    Limits, MonomialOrder,
};
use crate::poly::{Polynomial, VariableSet};
use crate::rational::{format_rational, frac, int, Rational};
use crate::symmetry::{admissible_group, PermGroup, Permutation, SymmetryError};
use crate::weights::{validate_weight_data, Mode};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeformError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error("singularities are not isolated: {0}")]
    NotIsolatedSingularities(String),
    #[error("expected a homogeneous polynomial")]
    NotHomogeneous,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl DeformError {
    pub fn code(&self) -> &'static str {
        match self {
            DeformError::Groebner(e) => e.code(),
            DeformError::Symmetry(e) => e.code(),
            DeformError::NotIsolatedSingularities(_) => "not_isolated_singularities",
            DeformError::NotHomogeneous => "not_homogeneous",
            DeformError::ZeroPoint => "zero_point",
            DeformError::Internal(_) => "internal",
        }
    }
}

/// A point of projective space, scaled so its first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self, DeformError> {
        let lead = coords.iter().find(|c| !c.is_zero()).cloned().ok_or(DeformError::ZeroPoint)?;
        Ok(ProjectivePoint {
            coords: coords.into_iter().map(|c| c / &lead).collect(),
        })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Index of the first nonzero coordinate, which is also the chart the
    /// point belongs to.
    pub fn chart(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).expect("normalized")
    }

    /// Affine coordinates in the chart `x_chart = 1`.
    pub fn affine(&self) -> Vec<Rational> {
        let k = self.chart();
        self.coords
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, c)| c.clone())
            .collect()
    }

    pub fn permuted(&self, sigma: &Permutation) -> Result<Self, DeformError> {
        let mut out = vec![Rational::zero(); self.coords.len()];
        for (i, c) in self.coords.iter().enumerate() {
            out[sigma.apply(i)] = c.clone();
        }
        ProjectivePoint::new(out)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        parts.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeCertificate {
    /// The node in the five-coordinate model `x0..x4`.
    pub point: ProjectivePoint,
    /// The same node in the symmetric six-coordinate model.
    pub symmetric_point: ProjectivePoint,
    pub chart: usize,
    pub on_hypersurface: bool,
    pub all_partials_vanish: bool,
    pub hessian_rank: usize,
    pub tyurina: u64,
}

impl NodeCertificate {
    pub fn is_certified_node(&self) -> bool {
        self.on_hypersurface && self.all_partials_vanish && self.hessian_rank == 4 && self.tyurina == 1
    }
}

pub fn six_variables() -> VariableSet {
    VariableSet::indexed("x", 6)
}

pub fn five_variables() -> VariableSet {
    VariableSet::indexed("x", 5)
}

/// The symmetric model: `sum x_i^3` and `sum x_i` in `x0..x5`.
pub fn segre_six() -> (Polynomial, Polynomial) {
    let v = six_variables();
    let mut cubic = Polynomial::zero(&v);
    let mut linear = Polynomial::zero(&v);
    for i in 0..6 {
        let x = Polynomial::var_index(&v, i);
        cubic = &cubic + &x.pow(3);
        linear = &linear + &x;
    }
    (cubic, linear)
}

/// The cubic in `x0..x4` obtained by eliminating `x5 = -(x0 + ... + x4)`.
pub fn segre_cubic() -> Polynomial {
    let (cubic, _) = segre_six();
    let v = five_variables();
    let mut images: Vec<Polynomial> = (0..5).map(|i| Polynomial::var_index(&v, i)).collect();
    let sum = images.iter().fold(Polynomial::zero(&v), |acc, x| &acc + x);
    images.push(-&sum);
    cubic.compose(&images, &v)
}

/// The hypersurface restricted to the affine chart `x_k = 1`, over the
/// remaining variables in their original order.
pub fn chart_polynomial(f: &Polynomial, k: usize) -> Polynomial {
    let names: Vec<String> = f
        .vars()
        .names()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, n)| n.clone())
        .collect();
    let chart_vars = VariableSet::new(&names).expect("subset of distinct names");
    let mut next = 0;
    let images: Vec<Polynomial> = (0..f.vars().len())
        .map(|i| {
            if i == k {
                Polynomial::one(&chart_vars)
            } else {
                next += 1;
                Polynomial::var_index(&chart_vars, next - 1)
            }
        })
        .collect();
    f.compose(&images, &chart_vars)
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = &row[c] / &pivot_row[c];
                for (x, y) in row[c..ncols].iter_mut().zip(&pivot_row[c..ncols]) {
                    *x -= &factor * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Rank of the affine Hessian of `g` at `point`.
pub fn hessian_rank(g: &Polynomial, point: &[Rational]) -> Result<usize, DeformError> {
    let grad = g.gradient();
    let mut rows = Vec::with_capacity(grad.len());
    for gi in &grad {
        let row = gi
            .gradient()
            .iter()
            .map(|h| h.evaluate(point))
            .collect::<Result<Vec<_>, _>>()
            .map_err(GroebnerError::from)?;
        rows.push(row);
    }
    Ok(rank(rows))
}

/// The orbit of `[1:1:1:-1:-1:-1]` under coordinate permutations, as
/// normalized points of the six-coordinate model in lexicographic order.
pub fn node_orbit() -> Vec<ProjectivePoint> {
    let mut out = Vec::new();
    // Normalization fixes x0 = 1, so choose the two other +1 positions.
    for a in 1..6 {
        for b in a + 1..6 {
            let coords = (0..6)
                .map(|i| if i == 0 || i == a || i == b { int(1) } else { int(-1) })
                .collect();
            out.push(ProjectivePoint::new(coords).expect("nonzero"));
        }
    }
    out.sort();
    out
}

fn certify(f: &Polynomial, symmetric: ProjectivePoint, limits: &Limits) -> Result<NodeCertificate, DeformError> {
    let point = ProjectivePoint::new(symmetric.coords()[..5].to_vec())?;
    let on_hypersurface = f.evaluate(point.coords()).map_err(GroebnerError::from)?.is_zero();
    let mut all_partials_vanish = true;
    for d in f.gradient() {
        if !d.evaluate(point.coords()).map_err(GroebnerError::from)?.is_zero() {
            all_partials_vanish = false;
        }
    }
    let chart = point.chart();
    let g = chart_polynomial(f, chart);
    let affine = point.affine();
    let hessian_rank = hessian_rank(&g, &affine)?;
    let tyurina = local_multiplicity_with(&tyurina_ideal(&g), &affine, limits)?;
    Ok(NodeCertificate {
        point,
        symmetric_point: symmetric,
        chart,
        on_hypersurface,
        all_partials_vanish,
        hessian_rank,
        tyurina,
    })
}

/// Certificates for the ten nodes of the Segre cubic.
pub fn segre_nodes() -> Result<Vec<NodeCertificate>, DeformError> {
    segre_nodes_with(&Limits::default())
}

pub fn segre_nodes_with(limits: &Limits) -> Result<Vec<NodeCertificate>, DeformError> {
    let f = segre_cubic();
    let certs = node_orbit()
        .into_iter()
        .map(|p| certify(&f, p, limits))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(bad) = certs.iter().find(|c| !c.is_certified_node()) {
        return Err(DeformError::Internal(format!("{} failed node certification", bad.point)));
    }
    Ok(certs)
}

/// Contribution of each chart `x0 = ... = x_{k-1} = 0, x_k = 1` to the
/// total Tyurina number of the hypersurface `f = 0`.
pub fn chart_contributions(f: &Polynomial, limits: &Limits) -> Result<Vec<u64>, DeformError> {
    if !f.is_homogeneous() {
        return Err(DeformError::NotHomogeneous);
    }
    let n = f.vars().len();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let g = chart_polynomial(f, k);
        let ideal = tyurina_ideal(&g);
        let gb = buchberger_over(g.vars(), &ideal, MonomialOrder::GrevLex, limits)?;
        if quotient_dimension(&gb).value().is_none() {
            return Err(DeformError::NotIsolatedSingularities(format!(
                "the singular locus in the chart x{k} = 1 is positive dimensional"
            )));
        }
        // Keep only the part of the singular scheme on x0 = ... = x_{k-1} = 0.
        let earlier: Vec<usize> = (0..k).collect();
        let value = subspace_multiplicity(&ideal, g.vars(), &earlier, limits).map_err(|e| match e {
            GroebnerError::NotIsolated(m) => DeformError::NotIsolatedSingularities(m),
            other => other.into(),
        })?;
        out.push(value);
    }
    Ok(out)
}

/// Total Tyurina number of the projective hypersurface `f = 0`, summed over
/// the charts that partition projective space by first nonzero coordinate.
pub fn singular_audit(f: &Polynomial) -> Result<u64, DeformError> {
    singular_audit_with(f, &Limits::default())
}

pub fn singular_audit_with(f: &Polynomial, limits: &Limits) -> Result<u64, DeformError> {
    Ok(chart_contributions(f, limits)?.iter().sum())
}

fn choose(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut out = BigInt::one();
    for i in 0..b {
        out = out * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    out
}

/// `chi(O_X(d))` for a hypersurface `X` of degree `k` in `P^n`.
pub fn hypersurface_chi(n: u32, k: u32, d: i64) -> BigInt {
    let n = i64::from(n);
    choose(d + n, n) - choose(d - i64::from(k) + n, n)
}

/// `chi(T_{P^n}|_X)` from the restricted Euler sequence.
pub fn chi_tangent_ambient(n: u32, k: u32) -> BigInt {
    BigInt::from(n + 1) * hypersurface_chi(n, k, 1) - hypersurface_chi(n, k, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Computed,
    PaperInput,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerProvenance {
    pub chi_tangent_ambient_restricted: Provenance,
    #[serde(rename = "chi_OS3")]
    pub chi_os3: Provenance,
    pub tau_total: Provenance,
    #[serde(rename = "chi_TS")]
    pub chi_ts: Provenance,
    #[serde(rename = "h0_TS")]
    pub h0_ts: Provenance,
    #[serde(rename = "h1_TS")]
    pub h1_ts: Provenance,
    pub dim_ext1: Provenance,
    pub dim_ext2: Provenance,
    pub aut_order: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeformationLedger {
    pub chi_tangent_ambient_restricted: i64,
    #[serde(rename = "chi_OS3")]
    pub chi_os3: i64,
    pub tau_total: i64,
    #[serde(rename = "chi_TS")]
    pub chi_ts: i64,
    #[serde(rename = "h0_TS")]
    pub h0_ts: i64,
    #[serde(rename = "h1_TS")]
    pub h1_ts: i64,
    pub dim_ext1: i64,
    pub dim_ext2: i64,
    pub aut_order: u64,
    pub provenance: LedgerProvenance,
}

impl DeformationLedger {
    /// `chi(T_S) + chi(O_S(3)) = chi(T_{P^4}|_S) + tau`, `h0 - h1 = chi(T_S)`
    /// and `dim Ext^1 = h1 + tau`.
    pub fn identities_hold(&self) -> bool {
        self.chi_ts + self.chi_os3 == self.chi_tangent_ambient_restricted + self.tau_total
            && self.h0_ts - self.h1_ts == self.chi_ts
            && self.dim_ext1 == self.h1_ts + self.tau_total
    }
}

fn small(v: BigInt) -> Result<i64, DeformError> {
    v.to_i64().ok_or_else(|| DeformError::Internal("value does not fit in 64 bits".into()))
}

pub fn build_ledger() -> Result<DeformationLedger, DeformError> {
    build_ledger_with(&Limits::default())
}

pub fn build_ledger_with(limits: &Limits) -> Result<DeformationLedger, DeformError> {
    use Provenance::*;
    let chi_tangent_ambient_restricted = small(chi_tangent_ambient(4, 3))?;
    let chi_os3 = small(hypersurface_chi(4, 3, 3))?;
    let tau_total = singular_audit_with(&segre_cubic(), limits)? as i64;
    let chi_ts = chi_tangent_ambient_restricted + tau_total - chi_os3;
    // No infinitesimal automorphisms, since Aut(S) is finite.
    let h0_ts = 0;
    let h1_ts = h0_ts - chi_ts;
    let dim_ext1 = h1_ts + tau_total;
    let ledger = DeformationLedger {
        chi_tangent_ambient_restricted,
        chi_os3,
        tau_total,
        chi_ts,
        h0_ts,
        h1_ts,
        dim_ext1,
        dim_ext2: 0,
        aut_order: aut_segre_order()?,
        provenance: LedgerProvenance {
            chi_tangent_ambient_restricted: Computed,
            chi_os3: Computed,
            tau_total: Computed,
            chi_ts: Computed,
            h0_ts: PaperInput,
            h1_ts: Computed,
            dim_ext1: Computed,
            dim_ext2: PaperInput,
            aut_order: Computed,
        },
    };
    if !ledger.identities_hold() {
        return Err(DeformError::Internal("ledger identities fail".into()));
    }
    Ok(ledger)
}

/// The permutation of the node list induced by permuting the six coordinates.
pub fn node_permutation(nodes: &[ProjectivePoint], sigma: &Permutation) -> Result<Permutation, DeformError> {
    let index: HashMap<&ProjectivePoint, usize> = nodes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let images = nodes
        .iter()
        .map(|p| {
            let q = p.permuted(sigma)?;
            index
                .get(&q)
                .copied()
                .ok_or_else(|| DeformError::Internal(format!("{q} is not a node")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Permutation::from_images(images)?)
}

/// The group induced on the ten nodes by the coordinate transpositions.
pub fn node_action() -> Result<PermGroup, DeformError> {
    let nodes = node_orbit();
    let gens = (0..5)
        .map(|i| node_permutation(&nodes, &Permutation::transposition(6, i, i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PermGroup::generate(nodes.len(), gens)?)
}

/// Order of `Aut(S)`, computed as the group generated by admissible
/// transpositions of six weights 1/3 and checked against the faithful
/// transitive action on the nodes.
pub fn aut_segre_order() -> Result<u64, DeformError> {
    let w = validate_weight_data(0, &vec![frac(1, 3); 6], Mode::SumTwo)
        .map_err(|e| DeformError::Internal(e.to_string()))?;
    let order = admissible_group(&w)?.order();
    let action = node_action()?;
    if !action.is_transitive() || action.order() != order {
        return Err(DeformError::Internal(format!(
            "node action has order {} but the weight symmetry group has order {order}",
            action.order()
        )));
    }
    Ok(order)
}

/// Whether `point` lies on `f = 0` with every partial derivative vanishing.
pub fn is_singular_point(f: &Polynomial, point: &ProjectivePoint) -> Result<bool, DeformError> {
    if !f.evaluate(point.coords()).map_err(GroebnerError::from)?.is_zero() {
        return Ok(false);
    }
    for d in f.gradient() {
        if !d.evaluate(point.coords()).map_err(GroebnerError::from)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
