//! Independent oracles and generators shared by the integration tests. None
//! of this goes through Buchberger's algorithm.

#![allow(dead_code)]

use std::collections::HashMap;

use hassett_kit::poly::{Monomial, Polynomial, VariableSet};
use hassett_kit::rational::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

pub const P: u64 = 2_147_483_647;

pub fn mul_mod(a: u64, b: u64) -> u64 {
    a * b % P
}

pub fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

fn bigint_mod(n: &BigInt) -> u64 {
    let m = BigInt::from(P);
    let r = ((n % &m) + &m) % &m;
    r.to_u64().expect("reduced")
}

pub fn rational_mod(q: &Rational) -> u64 {
    mul_mod(bigint_mod(q.numer()), inv_mod(bigint_mod(q.denom())))
}

/// All exponent vectors in `nvars` variables of total degree at most `max`,
/// sorted by descending degree (ties by descending lex).
pub fn monomials_up_to(nvars: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == nvars {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, max, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        db.cmp(&da).then(b.cmp(a))
    });
    out
}

/// Row echelon form over `F_P`, built one row at a time.
pub struct Echelon {
    ncols: usize,
    pivots: Vec<Option<Vec<u64>>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: vec![None; ncols],
        }
    }

    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        for c in 0..self.ncols {
            if row[c] == 0 {
                continue;
            }
            match &self.pivots[c] {
                Some(p) => {
                    let f = row[c];
                    for j in c..self.ncols {
                        if p[j] != 0 {
                            row[j] = (row[j] + P - mul_mod(f, p[j])) % P;
                        }
                    }
                }
                None => {
                    let inv = inv_mod(row[c]);
                    for x in row.iter_mut().skip(c) {
                        *x = mul_mod(*x, inv);
                    }
                    self.pivots[c] = Some(row);
                    return true;
                }
            }
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.pivots.iter().filter(|p| p.is_some()).count()
    }

    /// Pivots in the columns `from..`.
    pub fn pivots_from(&self, from: usize) -> usize {
        self.pivots[from..].iter().filter(|p| p.is_some()).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleAnswer {
    Finite(u64),
    Infinite,
    Inconclusive,
}

/// Dimension of `K[x]/I` from truncated Macaulay matrices over `F_P`.
///
/// `c(d, D)` counts monomials of degree `<= d` minus the dimension of the
/// span of all multiples `m*g` of degree `<= D` that lie in degree `<= d`.
/// It decreases to the affine Hilbert function of `I` as `D` grows, and that
/// function is strictly increasing until it becomes constant.
/// A generator as its degree and its terms reduced mod p.
type SparseRow = (u32, Vec<(Vec<u32>, u64)>);

pub fn macaulay_dimension(gens: &[Polynomial], nvars: usize, big_d: u32) -> OracleAnswer {
    let small_d = big_d - 2;
    let cols = monomials_up_to(nvars, big_d);
    let index: HashMap<&[u32], usize> = cols.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let degree_start = |d: u32| cols.iter().position(|m| m.iter().sum::<u32>() <= d).unwrap_or(cols.len());

    let sparse: Vec<SparseRow> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let terms: Vec<(Vec<u32>, u64)> = g
                .terms()
                .map(|(m, c)| (m.exponents().to_vec(), rational_mod(c)))
                .filter(|(_, c)| *c != 0)
                .collect();
            let deg = terms.iter().map(|(m, _)| m.iter().sum::<u32>()).max().unwrap_or(0);
            (deg, terms)
        })
        .filter(|(_, t)| !t.is_empty())
        .collect();

    let mut rows: Vec<(u32, Vec<u64>)> = Vec::new();
    for (deg, terms) in sparse.iter().filter(|(d, _)| *d <= big_d) {
        for m in monomials_up_to(nvars, big_d - deg) {
            let mut row = vec![0u64; cols.len()];
            for (e, c) in terms {
                let prod: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                let i = index[prod.as_slice()];
                row[i] = (row[i] + c) % P;
            }
            rows.push((deg + m.iter().sum::<u32>(), row));
        }
    }
    rows.sort_by_key(|(d, _)| *d);

    let count_up_to = |d: u32| (cols.len() - degree_start(d)) as i64;
    let mut ech = Echelon::new(cols.len());
    let mut table_small = Vec::new();
    let mut inserted_small = false;
    for (d, row) in rows.iter() {
        if *d > small_d && !inserted_small {
            table_small = (0..=small_d).map(|t| count_up_to(t) - ech.pivots_from(degree_start(t)) as i64).collect();
            inserted_small = true;
        }
        ech.insert(row.clone());
    }
    if !inserted_small {
        table_small = (0..=small_d).map(|t| count_up_to(t) - ech.pivots_from(degree_start(t)) as i64).collect();
    }
    let table_big: Vec<i64> = (0..=big_d).map(|t| count_up_to(t) - ech.pivots_from(degree_start(t)) as i64).collect();

    let horizon = small_d - 1;
    for d in 0..horizon {
        let (d, next) = (d as usize, d as usize + 1);
        if table_big[d] == table_big[next] && table_small[d] == table_big[d] && table_small[next] == table_big[next] {
            return OracleAnswer::Finite(table_big[d] as u64);
        }
    }
    let strictly_growing = (0..horizon as usize).all(|d| table_big[d] < table_big[d + 1]);
    let settled = table_small[horizon as usize] == table_big[horizon as usize];
    if strictly_growing && settled {
        OracleAnswer::Infinite
    } else {
        OracleAnswer::Inconclusive
    }
}

/// Monomials of degree `<= d` outside the monomial ideal generated by `lms`.
pub fn standard_count(lms: &[Monomial], nvars: usize, d: u32) -> u64 {
    monomials_up_to(nvars, d)
        .into_iter()
        .filter(|e| {
            let m = Monomial::from_exponents(e.clone());
            lms.iter().all(|l| !l.divides(&m))
        })
        .count() as u64
}

/// Rank over `F_P` of a list of polynomials, as vectors of coefficients.
pub fn rank_mod_p(polys: &[Polynomial]) -> usize {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let mut ech = Echelon::new(index.len());
    for p in polys {
        let mut row = vec![0u64; index.len()];
        for (m, c) in p.terms() {
            row[index[m]] = rational_mod(c);
        }
        ech.insert(row);
    }
    ech.rank()
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |q| !q.is_zero())
}

/// Polynomials over `vars` with up to `max_terms` terms of degree `<= max_deg`.
pub fn poly_strategy(vars: VariableSet, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let mons = monomials_up_to(vars.len(), max_deg);
    let count = mons.len();
    prop::collection::vec((0..count, nonzero_rational()), 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            &vars,
            terms
                .into_iter()
                .map(|(i, c)| (Monomial::from_exponents(mons[i].clone()), c)),
        )
    })
}

/// Homogeneous polynomials of degree exactly `deg`.
pub fn homogeneous_strategy(vars: VariableSet, deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let mons: Vec<Vec<u32>> = monomials_up_to(vars.len(), deg)
        .into_iter()
        .filter(|m| m.iter().sum::<u32>() == deg)
        .collect();
    let count = mons.len();
    prop::collection::vec((0..count, nonzero_rational()), 1..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            &vars,
            terms
                .into_iter()
                .map(|(i, c)| (Monomial::from_exponents(mons[i].clone()), c)),
        )
    })
}

/// A unimodular integer matrix as a product of elementary shears.
pub fn unimodular_strategy(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2), 1..=6).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, c) in ops {
            if i != j {
                let src = m[j].clone();
                for (x, y) in m[i].iter_mut().zip(&src) {
                    *x += c * y;
                }
            }
        }
        m
    })
}

/// Images `x_i -> sum_j a_ij x_j` for a linear change of variables.
pub fn linear_images(vars: &VariableSet, a: &[Vec<i64>]) -> Vec<Polynomial> {
    a.iter()
        .map(|row| {
            row.iter().enumerate().fold(Polynomial::zero(vars), |acc, (j, &c)| {
                &acc + &Polynomial::var_index(vars, j).scale(&Rational::from_integer(BigInt::from(c)))
            })
        })
        .collect()
}

pub fn determinant(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut det = Rational::from_integer(BigInt::from(1));
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            let pivot = m[c].clone();
            for (x, y) in m[r][c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * y;
            }
        }
    }
    assert!(det.is_integer());
    let v = det.to_integer();
    if v.is_negative() {
        -(-v).to_i64().unwrap()
    } else {
        v.to_i64().unwrap()
    }
}

pub fn palette() -> Vec<Rational> {
    [(1, 6), (1, 5), (1, 4), (1, 3), (2, 5), (1, 2), (3, 5), (2, 3), (3, 4), (1, 1)]
        .iter()
        .map(|&(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
        .collect()
}

/// Admissible strict weight data with `n` markings drawn from [`palette`].
pub fn weight_strategy(
    genus: std::ops::RangeInclusive<u32>,
    n: std::ops::RangeInclusive<usize>,
) -> BoxedStrategy<hassett_kit::weights::WeightData> {
    let pal = palette();
    (genus, n)
        .prop_flat_map(move |(g, n)| (Just(g), prop::collection::vec(0..pal.len(), n)))
        .prop_filter_map("admissible", |(g, idx)| {
            let pal = palette();
            let ws: Vec<Rational> = idx.into_iter().map(|i| pal[i].clone()).collect();
            hassett_kit::weights::validate_weight_data(g, &ws, hassett_kit::weights::Mode::Strict).ok()
        })
        .boxed()
}

/// A permutation of `0..n` as an image vector.
pub fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Sum of the weights of the 1-based `labels`.
pub fn weight_sum(w: &hassett_kit::weights::WeightData, labels: &[usize]) -> Rational {
    labels.iter().fold(Rational::zero(), |acc, &l| acc + w.weight(l))
}

/// All subsets of `1..=n` as sorted label lists.
pub fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .map(|mask| (1..=n).filter(|&l| mask >> (l - 1) & 1 == 1).collect())
        .collect()
}
