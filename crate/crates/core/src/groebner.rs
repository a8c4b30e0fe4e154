//! Buchberger's algorithm over the rationals, normal forms, standard
//! monomials, and local multiplicities by `m`-adic stabilization.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::poly::{grevlex_cmp, Monomial, PolyError, Polynomial, VariableSet};
use crate::rational::Rational;

/// Default cap on coefficient size, in decimal digits.
pub const DEFAULT_MAX_DIGITS: u64 = 10_000;
/// Environment variable overriding [`DEFAULT_MAX_DIGITS`].
pub const MAX_DIGITS_ENV: &str = "HASSETT_KIT_MAX_DIGITS";
/// Largest power `N` tried when stabilizing `J + m^N`.
pub const MAX_STABILIZATION_POWER: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("generators live over different variable sets")]
    VariableMismatch,
    #[error("coefficient with {digits} decimal digits exceeds the cap of {limit}")]
    CoefficientOverflow { digits: u64, limit: u64 },
    #[error("not an isolated point: {0}")]
    NotIsolated(String),
}

impl GroebnerError {
    pub fn code(&self) -> &'static str {
        match self {
            GroebnerError::Poly(e) => e.code(),
            GroebnerError::VariableMismatch => "variable_mismatch",
            GroebnerError::CoefficientOverflow { .. } => "coefficient_overflow",
            GroebnerError::NotIsolated(_) => "not_isolated",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex_cmp(a, b),
            MonomialOrder::Lex => a.cmp(b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_digits: u64,
}

impl Limits {
    /// The default cap, overridden by `HASSETT_KIT_MAX_DIGITS` when set to a
    /// positive integer.
    pub fn from_env() -> Self {
        let max_digits = std::env::var(MAX_DIGITS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&d| d > 0)
            .unwrap_or(DEFAULT_MAX_DIGITS);
        Limits { max_digits }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::from_env()
    }
}

type Term = (Monomial, Rational);

/// Terms sorted ascending in the working order; the leading term is last.
#[derive(Debug, Clone)]
struct OrderedPoly {
    terms: Vec<Term>,
}

impl OrderedPoly {
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        let mut terms: Vec<Term> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        OrderedPoly { terms }
    }

    fn to_poly(&self, vars: &VariableSet) -> Polynomial {
        Polynomial::from_terms(vars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &Term {
        self.terms.last().expect("non-zero polynomial")
    }

    fn lm(&self) -> &Monomial {
        &self.lead().0
    }

    fn make_monic(&mut self) {
        let lc = self.lead().1.clone();
        if !lc.is_one() {
            for t in &mut self.terms {
                t.1 /= &lc;
            }
        }
    }

    fn max_digits(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| crate::rational::decimal_digits(&t.1))
            .max()
            .unwrap_or(0)
    }
}

/// `p - c * m * g`, merging two ascending term lists.
fn sub_scaled(p: &[Term], c: &Rational, m: &Monomial, g: &[Term], order: MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut shifted = g.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
    while i < p.len() || shifted.peek().is_some() {
        let take_p = match shifted.peek() {
            None => true,
            Some(s) if i < p.len() => order.cmp(&p[i].0, &s.0) != Ordering::Greater,
            Some(_) => false,
        };
        if take_p {
            if let Some(s) = shifted.peek() {
                if p[i].0 == s.0 {
                    let s = shifted.next().expect("peeked");
                    let c = &p[i].1 - s.1;
                    if !c.is_zero() {
                        out.push((s.0, c));
                    }
                    i += 1;
                    continue;
                }
            }
            out.push(p[i].clone());
            i += 1;
        } else {
            let (sm, sc) = shifted.next().expect("peeked");
            out.push((sm, -sc));
        }
    }
    out
}

/// Full reduction of `p` by the monic polynomials `basis`.
fn reduce(p: &OrderedPoly, basis: &[OrderedPoly], order: MonomialOrder, limits: &Limits) -> Result<OrderedPoly, GroebnerError> {
    let mut work = p.terms.clone();
    let mut remainder: Vec<Term> = Vec::new();
    let mut steps = 0u64;
    while let Some((m, c)) = work.last().cloned() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let shift = g.lm().quotient_of(&m).expect("divides");
                work = sub_scaled(&work, &c, &shift, &g.terms, order);
                steps += 1;
                if steps % 64 == 0 {
                    check_digits(&work, limits)?;
                }
            }
            None => {
                remainder.push(work.pop().expect("non-empty"));
            }
        }
    }
    remainder.reverse();
    let out = OrderedPoly { terms: remainder };
    let digits = out.max_digits();
    if digits > limits.max_digits {
        return Err(GroebnerError::CoefficientOverflow {
            digits,
            limit: limits.max_digits,
        });
    }
    Ok(out)
}

fn check_digits(terms: &[Term], limits: &Limits) -> Result<(), GroebnerError> {
    for t in terms {
        let digits = crate::rational::decimal_digits(&t.1);
        if digits > limits.max_digits {
            return Err(GroebnerError::CoefficientOverflow {
                digits,
                limit: limits.max_digits,
            });
        }
    }
    Ok(())
}

fn s_polynomial(f: &OrderedPoly, g: &OrderedPoly, order: MonomialOrder) -> OrderedPoly {
    let lcm = f.lm().lcm(g.lm());
    let uf = f.lm().quotient_of(&lcm).expect("lcm");
    let ug = g.lm().quotient_of(&lcm).expect("lcm");
    let left: Vec<Term> = f.terms.iter().map(|(m, c)| (m.mul(&uf), c.clone())).collect();
    OrderedPoly {
        terms: sub_scaled(&left, &Rational::one(), &ug, &g.terms, order),
    }
}

/// A reduced Groebner basis: monic, inter-reduced, sorted by decreasing
/// leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    vars: VariableSet,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    ordered: Vec<OrderedPoly>,
    source: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn source_ideal(&self) -> &[Polynomial] {
        &self.source
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.ordered.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.ordered.len() == 1 && self.ordered[0].lm().is_one()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        normal_form(p, self).is_zero()
    }

    /// Every S-polynomial of basis pairs reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let limits = Limits { max_digits: u64::MAX };
        (0..self.ordered.len()).all(|i| {
            (i + 1..self.ordered.len()).all(|j| {
                let s = s_polynomial(&self.ordered[i], &self.ordered[j], self.order);
                reduce(&s, &self.ordered, self.order, &limits)
                    .map(|r| r.is_zero())
                    .unwrap_or(false)
            })
        })
    }

    /// Monic, and no term of a generator is divisible by another
    /// generator's leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.ordered.iter().enumerate().all(|(i, g)| {
            g.lead().1.is_one()
                && self.ordered.iter().enumerate().all(|(j, h)| {
                    i == j || g.terms.iter().all(|(m, _)| !h.lm().divides(m))
                })
        })
    }

    pub fn strings(&self) -> Vec<String> {
        self.generators.iter().map(Polynomial::to_string).collect()
    }
}

fn common_vars(gens: &[Polynomial]) -> Result<Option<VariableSet>, GroebnerError> {
    let mut vars: Option<VariableSet> = None;
    for g in gens {
        match &vars {
            None => vars = Some(g.vars().clone()),
            Some(v) if v != g.vars() => return Err(GroebnerError::VariableMismatch),
            Some(_) => {}
        }
    }
    Ok(vars)
}

pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(gens, order, &Limits::default())
}

/// Reduced Groebner basis of the ideal generated by `gens`. Zero
/// generators are discarded. Pairs are processed smallest lcm first, with
/// Buchberger's coprime and chain criteria.
pub fn buchberger_with(gens: &[Polynomial], order: MonomialOrder, limits: &Limits) -> Result<GroebnerBasis, GroebnerError> {
    let vars = match common_vars(gens)? {
        Some(v) => v,
        None => {
            return Err(GroebnerError::Poly(PolyError::InvalidVariables(
                "no generators to infer variables from".into(),
            )))
        }
    };
    buchberger_over(&vars, gens, order, limits)
}

/// As [`buchberger_with`], with the variables given explicitly so that an
/// empty generator list (the zero ideal) is representable.
pub fn buchberger_over(vars: &VariableSet, gens: &[Polynomial], order: MonomialOrder, limits: &Limits) -> Result<GroebnerBasis, GroebnerError> {
    if gens.iter().any(|g| g.vars() != vars) {
        return Err(GroebnerError::VariableMismatch);
    }
    let mut basis: Vec<OrderedPoly> = Vec::new();
    let mut pending = PairQueue::new();
    let mut live: HashSet<(usize, usize)> = HashSet::new();

    for g in gens.iter().filter(|g| !g.is_zero()) {
        let p = OrderedPoly::from_poly(g, order);
        let mut r = reduce(&p, &basis, order, limits)?;
        if !r.is_zero() {
            r.make_monic();
            add_generator(r, &mut basis, &mut pending, &mut live);
        }
    }

    while let Some(&(deg, i, j)) = pending.iter().next() {
        pending.remove(&(deg, i, j));
        live.remove(&(i, j));
        if basis.iter().any(|b| b.lm().is_one()) {
            break;
        }
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lm().is_coprime_to(fj.lm()) {
            continue;
        }
        let lcm = fi.lm().lcm(fj.lm());
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm)
                && !live.contains(&(i.min(k), i.max(k)))
                && !live.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(fi, fj, order);
        let mut r = reduce(&s, &basis, order, limits)?;
        if !r.is_zero() {
            r.make_monic();
            add_generator(r, &mut basis, &mut pending, &mut live);
        }
    }

    let reduced = interreduce(basis, order, limits)?;
    Ok(GroebnerBasis {
        vars: vars.clone(),
        order,
        generators: reduced.iter().map(|g| g.to_poly(vars)).collect(),
        ordered: reduced,
        source: gens.to_vec(),
    })
}

type PairQueue = BTreeSet<(u32, usize, usize)>;

fn add_generator(p: OrderedPoly, basis: &mut Vec<OrderedPoly>, pending: &mut PairQueue, live: &mut HashSet<(usize, usize)>) {
    let k = basis.len();
    basis.push(p);
    for i in 0..k {
        let deg = basis[i].lm().lcm(basis[k].lm()).degree();
        pending.insert((deg, i, k));
        live.insert((i, k));
    }
}

fn interreduce(basis: Vec<OrderedPoly>, order: MonomialOrder, limits: &Limits) -> Result<Vec<OrderedPoly>, GroebnerError> {
    if let Some(unit) = basis.iter().find(|b| b.lm().is_one()) {
        return Ok(vec![OrderedPoly {
            terms: vec![(unit.lm().clone(), Rational::one())],
        }]);
    }
    // Minimal basis: drop generators whose leading monomial is divisible by
    // another's (keeping the first of equal leading monomials).
    let mut minimal: Vec<OrderedPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<OrderedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = minimal[i].lead().clone();
        let tail = OrderedPoly {
            terms: minimal[i].terms[..minimal[i].terms.len() - 1].to_vec(),
        };
        let mut r = reduce(&tail, &others, order, limits)?;
        r.terms.push(lead);
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    Ok(out)
}

/// Remainder of `p` on division by `gb`; no remaining monomial is divisible
/// by a leading monomial of the basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let limits = Limits { max_digits: u64::MAX };
    let op = OrderedPoly::from_poly(p, gb.order);
    reduce(&op, &gb.ordered, gb.order, &limits)
        .expect("unbounded limits never overflow")
        .to_poly(p.vars())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite { value: u64, staircase: Vec<Monomial> },
    Infinite,
}

impl QuotientDimension {
    pub fn value(&self) -> Option<u64> {
        match self {
            QuotientDimension::Finite { value, .. } => Some(*value),
            QuotientDimension::Infinite => None,
        }
    }
}

/// Dimension of `K[x]/I` read off the staircase of leading monomials.
pub fn quotient_dimension(gb: &GroebnerBasis) -> QuotientDimension {
    let lms = gb.leading_monomials();
    let nvars = gb.vars.len();
    if gb.is_unit_ideal() {
        return QuotientDimension::Finite {
            value: 0,
            staircase: vec![],
        };
    }
    let mut bounded = vec![false; nvars];
    for m in &lms {
        if let Some(i) = m.pure_power_variable() {
            bounded[i] = true;
        }
    }
    if bounded.iter().any(|b| !b) {
        return QuotientDimension::Infinite;
    }
    let standard = |m: &Monomial| lms.iter().all(|l| !l.divides(m));
    let one = Monomial::one(nvars);
    let mut seen: HashSet<Monomial> = HashSet::from([one.clone()]);
    let mut queue = VecDeque::from([one]);
    while let Some(m) = queue.pop_front() {
        for i in 0..nvars {
            let next = m.mul(&Monomial::variable(nvars, i));
            if standard(&next) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut staircase: Vec<Monomial> = seen.into_iter().collect();
    staircase.sort_by(|a, b| gb.order.cmp(a, b));
    QuotientDimension::Finite {
        value: staircase.len() as u64,
        staircase,
    }
}

/// All monomials of total degree `n` in the variables `subset`.
fn monomials_of_degree(nvars: usize, subset: &[usize], n: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(subset: &[usize], k: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == subset.len() {
            exps[subset[k]] = left;
            out.push(Monomial::from_exponents(exps.clone()));
            exps[subset[k]] = 0;
            return;
        }
        for e in 0..=left {
            exps[subset[k]] = e;
            rec(subset, k + 1, left - e, exps, out);
        }
        exps[subset[k]] = 0;
    }
    if subset.is_empty() {
        return out;
    }
    rec(subset, 0, n, &mut exps, &mut out);
    out
}

/// Dimension of the part of `K[x]/J` supported on the coordinate subspace
/// `{x_i = 0 : i in subset}`: the stable value of `dim K[x]/(J + (x_subset)^N)`.
/// The first `N` with `d_N = d_{N+1}` certifies stabilization.
pub fn subspace_multiplicity(
    gens: &[Polynomial],
    vars: &VariableSet,
    subset: &[usize],
    limits: &Limits,
) -> Result<u64, GroebnerError> {
    if subset.is_empty() {
        let gb = buchberger_over(vars, gens, MonomialOrder::GrevLex, limits)?;
        return quotient_dimension(&gb).value().ok_or_else(|| {
            GroebnerError::NotIsolated("the solution set is positive dimensional".into())
        });
    }
    let dim_at = |n: u32| -> Result<u64, GroebnerError> {
        let mut all = gens.to_vec();
        all.extend(
            monomials_of_degree(vars.len(), subset, n)
                .into_iter()
                .map(|m| Polynomial::monomial(vars, m, Rational::one())),
        );
        let gb = buchberger_over(vars, &all, MonomialOrder::GrevLex, limits)?;
        quotient_dimension(&gb).value().ok_or_else(|| {
            GroebnerError::NotIsolated("the solution set meets the locus in positive dimension".into())
        })
    };
    let mut previous = dim_at(1)?;
    for n in 2..=MAX_STABILIZATION_POWER + 1 {
        let current = dim_at(n)?;
        if current == previous {
            return Ok(current);
        }
        previous = current;
    }
    Err(GroebnerError::NotIsolated(format!(
        "no stabilization by N = {MAX_STABILIZATION_POWER}"
    )))
}

/// Local dimension of `K[x]/(gens)` at the rational point `point`, e.g. the
/// Tyurina number when `gens` are a function and its partial derivatives.
pub fn local_multiplicity(gens: &[Polynomial], point: &[Rational]) -> Result<u64, GroebnerError> {
    local_multiplicity_with(gens, point, &Limits::default())
}

pub fn local_multiplicity_with(gens: &[Polynomial], point: &[Rational], limits: &Limits) -> Result<u64, GroebnerError> {
    let vars = common_vars(gens)?.ok_or_else(|| {
        GroebnerError::Poly(PolyError::InvalidVariables("no generators".into()))
    })?;
    if point.len() != vars.len() {
        return Err(PolyError::LengthMismatch {
            expected: vars.len(),
            got: point.len(),
        }
        .into());
    }
    let translated = translate_to_origin(gens, &vars, point)?;
    let all: Vec<usize> = (0..vars.len()).collect();
    subspace_multiplicity(&translated, &vars, &all, limits)
}

/// Replaces `x_i` by `x_i + p_i`, moving `point` to the origin.
pub fn translate_to_origin(gens: &[Polynomial], vars: &VariableSet, point: &[Rational]) -> Result<Vec<Polynomial>, GroebnerError> {
    let bindings: HashMap<String, Polynomial> = vars
        .names()
        .iter()
        .zip(point)
        .enumerate()
        .map(|(i, (name, c))| {
            let shifted = &Polynomial::var_index(vars, i) + &Polynomial::constant(vars, c.clone());
            (name.clone(), shifted)
        })
        .collect();
    gens.iter()
        .map(|g| g.substitute(&bindings, vars).map_err(GroebnerError::from))
        .collect()
}

/// `f` together with all of its first partial derivatives.
pub fn tyurina_ideal(f: &Polynomial) -> Vec<Polynomial> {
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::rational::int;

    fn gens(vars: &str, list: &str) -> (VariableSet, Vec<Polynomial>) {
        let v = VariableSet::parse(vars).unwrap();
        let g = crate::poly::parse_poly_list(list, &v).unwrap();
        (v, g)
    }

    #[test]
    fn local_model_is_the_maximal_ideal() {
        let (_, g) = gens("x,y,z,w", "x^2*w+x*y-z*w; 2*x*w+y; x; -w; x^2-z");
        let gb = buchberger(&g, MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.strings(), ["x", "y", "z", "w"]);
        let q = quotient_dimension(&gb);
        assert_eq!(q.value(), Some(1));
        assert!(gb.is_groebner() && gb.is_reduced());
        for p in &g {
            assert!(normal_form(p, &gb).is_zero());
        }
        let one = Polynomial::one(gb.vars());
        assert_eq!(normal_form(&one, &gb), one);
    }

    #[test]
    fn already_reduced_and_unit() {
        let (v, g) = gens("x,y", "x^2; y^2");
        let gb = buchberger(&g, MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.strings(), ["x^2", "y^2"]);
        let xy = parse_poly("x*y", &v).unwrap();
        assert_eq!(normal_form(&xy, &gb), xy);
        match quotient_dimension(&gb) {
            QuotientDimension::Finite { value, staircase } => {
                assert_eq!(value, 4);
                let s: Vec<String> = staircase.iter().map(|m| m.render(&v)).collect();
                assert_eq!(s, ["1", "y", "x", "x*y"]);
            }
            QuotientDimension::Infinite => panic!("finite"),
        }

        let (_, g) = gens("x", "x; x+1");
        let gb = buchberger(&g, MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.strings(), ["1"]);
        assert!(gb.is_unit_ideal());
        assert_eq!(quotient_dimension(&gb).value(), Some(0));
    }

    #[test]
    fn infinite_quotient() {
        let (_, g) = gens("x,y", "x");
        let gb = buchberger(&g, MonomialOrder::GrevLex).unwrap();
        assert_eq!(quotient_dimension(&gb), QuotientDimension::Infinite);
    }

    #[test]
    fn zero_ideal() {
        let v = VariableSet::parse("x").unwrap();
        let zero = Polynomial::zero(&v);
        let gb = buchberger(&[zero], MonomialOrder::GrevLex).unwrap();
        assert!(gb.generators().is_empty());
        assert_eq!(quotient_dimension(&gb), QuotientDimension::Infinite);
    }

    #[test]
    fn idempotent() {
        let (_, g) = gens("x,y,z", "x^2 - y*z; y^2 - x*z + 1; z^2 - x*y");
        let gb = buchberger(&g, MonomialOrder::GrevLex).unwrap();
        assert!(gb.is_groebner() && gb.is_reduced());
        let again = buchberger(gb.generators(), MonomialOrder::GrevLex).unwrap();
        assert_eq!(again.generators(), gb.generators());
        let lex = buchberger(&g, MonomialOrder::Lex).unwrap();
        assert!(lex.is_groebner() && lex.is_reduced());
        assert_eq!(quotient_dimension(&lex).value(), quotient_dimension(&gb).value());
    }

    #[test]
    fn tyurina_numbers() {
        let (_, g) = gens("x,y", "x*y; y; x");
        assert_eq!(local_multiplicity(&g, &[int(0), int(0)]).unwrap(), 1);
        let (v, _) = gens("x,y", "x");
        let cusp = parse_poly("x^3 - y^2", &v).unwrap();
        assert_eq!(local_multiplicity(&tyurina_ideal(&cusp), &[int(0), int(0)]).unwrap(), 2);
        // A node moved to (1, -2).
        let node = parse_poly("(x-1)*(y+2)", &v).unwrap();
        assert_eq!(local_multiplicity(&tyurina_ideal(&node), &[int(1), int(-2)]).unwrap(), 1);
        // The node at the origin does not contribute at a smooth point.
        let at_smooth = local_multiplicity(&tyurina_ideal(&node), &[int(0), int(0)]).unwrap();
        assert_eq!(at_smooth, 0);
    }

    #[test]
    fn non_isolated_points_are_reported() {
        let (v, _) = gens("x,y", "x");
        let line_squared = parse_poly("x^2", &v).unwrap();
        let err = local_multiplicity(&tyurina_ideal(&line_squared), &[int(0), int(0)]).unwrap_err();
        assert!(matches!(err, GroebnerError::NotIsolated(_)));
    }

    #[test]
    fn coefficient_cap() {
        let (_, g) = gens("x,y", "12345678901234567890*x^2 + y; 98765432109876543210*y^2 + 3*x");
        let err = buchberger_with(&g, MonomialOrder::GrevLex, &Limits { max_digits: 5 });
        assert!(matches!(err, Err(GroebnerError::CoefficientOverflow { .. })));
        assert!(buchberger_with(&g, MonomialOrder::GrevLex, &Limits { max_digits: 1000 }).is_ok());
    }
}
