//! Sparse multivariate polynomials with exact rational coefficients, and a
//! recursive-descent parser for them.
//!
//! Exponent vectors are dense and aligned with a [`VariableSet`]; terms live
//! in a map so every mathematical polynomial has exactly one representation.
//! Printing uses graded reverse lexicographic order, largest term first.
//!
//! Grammar accepted by [`parse_poly`]:
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := ident | rational | '(' expr ')' | '-' factor
//! rational := int ('/' nat)?
//! ```
//!
//! Juxtaposition is not multiplication: `x y` and `2x` are errors.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{format_rational, Rational};

/// Largest exponent literal the parser accepts.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown identifier {name:?} at byte {pos}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error("bad exponent at byte {pos}: exponents must be non-negative integer literals <= {MAX_EXPONENT}")]
    BadExponent { pos: usize },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable {0:?} is unbound and absent from the target variables")]
    UnboundVariable(String),
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
    #[error("point has {got} coordinates but there are {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("polynomials live over different variable sets: {0} vs {1}")]
    VariableMismatch(String, String),
}

impl PolyError {
    pub fn code(&self) -> &'static str {
        match self {
            PolyError::Syntax { .. } => "syntax_error",
            PolyError::UnknownIdentifier { .. } => "unknown_identifier",
            PolyError::BadExponent { .. } => "bad_exponent",
            PolyError::UnknownVariable(_) => "unknown_variable",
            PolyError::UnboundVariable(_) => "unbound_variable",
            PolyError::InvalidVariables(_) => "invalid_variables",
            PolyError::LengthMismatch { .. } => "length_mismatch",
            PolyError::VariableMismatch(..) => "variable_mismatch",
        }
    }
}

/// An ordered list of distinct variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariableSet(Arc<[String]>);

impl VariableSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, PolyError> {
        let mut seen = std::collections::HashSet::new();
        for name in names {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(PolyError::InvalidVariables(format!("{name:?} is not an identifier")));
            }
            if !seen.insert(name) {
                return Err(PolyError::InvalidVariables(format!("{name:?} repeated")));
            }
        }
        Ok(VariableSet(names.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    /// Parses `"x,y,z,w"`.
    pub fn parse(list: &str) -> Result<Self, PolyError> {
        let names: Vec<&str> = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        Self::new(&names)
    }

    /// `prefix0, ..., prefix{count-1}`.
    pub fn indexed(prefix: &str, count: usize) -> Self {
        let names: Vec<String> = (0..count).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names).expect("indexed names are valid and distinct")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(","))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An exponent vector. The derived ordering is lexicographic with the first
/// variable largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime_to(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the only variable occurring, if this is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_variable(&self) -> Option<usize> {
        let mut hit = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if hit.is_some() {
                    return None;
                }
                hit = Some(i);
            }
        }
        hit
    }

    pub fn render(&self, vars: &VariableSet) -> String {
        if self.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars.names())
            .filter(|(e, _)| **e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        parts.join("*")
    }
}

/// Graded reverse lexicographic comparison.
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.0.iter().zip(&b.0).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl serde::Serialize for Degree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::NegInfinity => s.serialize_str("-infinity"),
            Degree::Finite(d) => s.serialize_u32(*d),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: VariableSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &VariableSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VariableSet, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn one(vars: &VariableSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &VariableSet, name: &str) -> Result<Self, PolyError> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.into()))?;
        Ok(Self::var_index(vars, i))
    }

    pub fn var_index(vars: &VariableSet, index: usize) -> Self {
        Self::monomial(vars, Monomial::variable(vars.len(), index), Rational::one())
    }

    pub fn monomial(vars: &VariableSet, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), vars.len(), "monomial length must match the variables");
        let mut p = Self::zero(vars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(vars: &VariableSet, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "monomial length must match the variables");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic monomial order (smallest first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted by `cmp`, largest first.
    pub fn sorted_terms_by(&self, cmp: impl Fn(&Monomial, &Monomial) -> Ordering) -> Vec<(Monomial, Rational)> {
        let mut t: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        t.sort_by(|a, b| cmp(&b.0, &a.0));
        t
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.vars.len()))
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::degree)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `m` with coefficient `c`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn check_same_vars(&self, other: &Polynomial) {
        assert!(
            self.vars == other.vars,
            "polynomial arithmetic across variable sets {} and {}",
            self.vars,
            other.vars
        );
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if self.vars != other.vars {
            return Err(self.mismatch(other));
        }
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if self.vars != other.vars {
            return Err(self.mismatch(other));
        }
        Ok(self * other)
    }

    fn mismatch(&self, other: &Polynomial) -> PolyError {
        PolyError::VariableMismatch(self.vars.to_string(), other.vars.to_string())
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial, PolyError> {
        let i = self
            .vars
            .index_of(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.into()))?;
        Ok(self.derivative_index(i))
    }

    pub fn derivative_index(&self, i: usize) -> Polynomial {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[i] -= 1;
            out.add_term(d, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// All first partial derivatives, in variable order.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.vars.len()).map(|i| self.derivative_index(i)).collect()
    }

    /// Simultaneous substitution. Every variable either has a binding (a
    /// polynomial over `target`) or is carried over by name into `target`.
    pub fn substitute(
        &self,
        bindings: &HashMap<String, Polynomial>,
        target: &VariableSet,
    ) -> Result<Polynomial, PolyError> {
        let mut images = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            let image = match bindings.get(name) {
                Some(p) => {
                    if p.vars != *target {
                        return Err(PolyError::VariableMismatch(p.vars.to_string(), target.to_string()));
                    }
                    p.clone()
                }
                None => match target.index_of(name) {
                    Some(j) => Self::var_index(target, j),
                    None => {
                        // Unused variables need no image.
                        if self.terms.keys().all(|m| m.0[images.len()] == 0) {
                            Self::zero(target)
                        } else {
                            return Err(PolyError::UnboundVariable(name.clone()));
                        }
                    }
                },
            };
            images.push(image);
        }
        Ok(self.compose(&images, target))
    }

    /// Substitutes `images[i]` for variable `i`. All images must live over `target`.
    pub fn compose(&self, images: &[Polynomial], target: &VariableSet) -> Polynomial {
        assert_eq!(images.len(), self.vars.len());
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Self::one(target)]; images.len()];
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().expect("non-empty") * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.vars.len() {
            return Err(PolyError::LengthMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Homogenizes with a new variable appended at the end of the variable list.
    pub fn homogenize(&self, new_var: &str) -> Result<Polynomial, PolyError> {
        let mut names = self.vars.names().to_vec();
        names.push(new_var.to_string());
        let target = VariableSet::new(&names)?;
        let d = match self.degree() {
            Degree::NegInfinity => return Ok(Self::zero(&target)),
            Degree::Finite(d) => d,
        };
        Ok(Self::from_terms(
            &target,
            self.terms.iter().map(|(m, c)| {
                let mut e = m.0.clone();
                e.push(d - m.degree());
                (Monomial(e), c.clone())
            }),
        ))
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that occurs.
    pub fn embed(&self, target: &VariableSet) -> Result<Polynomial, PolyError> {
        self.substitute(&HashMap::new(), target)
    }

    /// Largest coefficient size, in decimal digits.
    pub fn max_coefficient_digits(&self) -> u64 {
        self.terms
            .values()
            .map(crate::rational::decimal_digits)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.sorted_terms_by(grevlex_cmp).iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&format_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&m.render(&self.vars))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), m.render(&self.vars))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({} over {})", self, self.vars)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_same_vars(rhs);
        let mut out = Polynomial::zero(&self.vars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -(&self)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Int(n) => write!(f, "number {n}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse::<BigInt>().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().expect("in bounds");
                return Err(PolyError::Syntax {
                    pos: start,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a VariableSet,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let at = self.offset();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e = u32::try_from(&n)
                        .ok()
                        .filter(|&e| e <= MAX_EXPONENT)
                        .ok_or(PolyError::BadExponent { pos: at })?;
                    return Ok(base.pow(e));
                }
                _ => return Err(PolyError::BadExponent { pos: at }),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, PolyError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Ident(name)) => match self.vars.index_of(&name) {
                Some(i) => Ok(Polynomial::var_index(self.vars, i)),
                None => Err(PolyError::UnknownIdentifier { name, pos: at }),
            },
            Some(Tok::Int(n)) => {
                let mut q = Rational::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => q /= Rational::from_integer(d),
                        _ => {
                            self.pos -= 1;
                            return self.error("expected a positive denominator after '/'");
                        }
                    }
                }
                Ok(Polynomial::constant(self.vars, q))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => {
                        self.pos -= 1;
                        self.error("expected ')'")
                    }
                }
            }
            Some(Tok::Minus) => Ok(-self.factor()?),
            Some(t) => {
                self.pos -= 1;
                self.error(format!("unexpected {t}"))
            }
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses and expands `text` over `vars`.
pub fn parse_poly(text: &str, vars: &VariableSet) -> Result<Polynomial, PolyError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        vars,
    };
    let p = parser.expr()?;
    if let Some(t) = parser.peek().cloned() {
        return parser.error(format!("unexpected {t} after a complete expression"));
    }
    Ok(p)
}

/// Parses a `;`-separated list of polynomials.
pub fn parse_poly_list(text: &str, vars: &VariableSet) -> Result<Vec<Polynomial>, PolyError> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_poly(s, vars))
        .collect()
}
