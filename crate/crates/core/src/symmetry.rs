//! Admissible transpositions, the group `S_{A[n]}` they generate, and the
//! automorphism groups of Hassett spaces that are known in closed form.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::weights::{kapranov_indices, kapranov_weights, Mode, ScaledWeights, WeightData};

/// Largest degree for which groups are materialized element by element.
pub const MAX_MATERIALIZED_DEGREE: usize = 10;
/// Largest closure ever materialized.
pub const MAX_MATERIALIZED_ORDER: usize = 1_000_000;
/// Largest `n` for which admissibility is decided by subset enumeration.
pub const MAX_ADMISSIBILITY_MARKINGS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetryError {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
}

impl SymmetryError {
    pub fn code(&self) -> &'static str {
        match self {
            SymmetryError::IndexOutOfRange(_) => "index_out_of_range",
            SymmetryError::ResourceLimit(_) => "resource_limit",
            SymmetryError::NotAPermutation(_) => "not_a_permutation",
        }
    }
}

/// A bijection of `{0, ..., n-1}` stored by its images. Labels shown to
/// users are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Swaps the 0-based points `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, SymmetryError> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(SymmetryError::NotAPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Disjoint cycles of length at least two, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![];
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// A finitely generated permutation group with every element materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: BTreeSet<Permutation>,
}

impl PermGroup {
    /// Breadth-first closure of `generators`.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self, SymmetryError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(SymmetryError::NotAPermutation(format!(
                "generator {g} has degree {} but the group acts on {degree} points",
                g.degree()
            )));
        }
        let identity = Permutation::identity(degree);
        let mut elements = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(e) = queue.pop_front() {
            for g in &generators {
                let next = g.compose(&e);
                if !elements.contains(&next) {
                    if elements.len() >= MAX_MATERIALIZED_ORDER {
                        return Err(SymmetryError::ResourceLimit(format!(
                            "closure exceeds {MAX_MATERIALIZED_ORDER} elements"
                        )));
                    }
                    elements.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    pub fn elements(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter()
    }

    /// Orbits on `{1..n}`, each sorted, listed by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// `sigma G sigma^{-1}`.
    pub fn conjugate(&self, sigma: &Permutation) -> PermGroup {
        let inv = sigma.inverse();
        let conj = |p: &Permutation| sigma.compose(p).compose(&inv);
        PermGroup {
            degree: self.degree,
            generators: self.generators.iter().map(conj).collect(),
            elements: self.elements.iter().map(conj).collect(),
        }
    }
}

fn orbits_of(degree: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut y = x;
        while parent[y] != root {
            let next = parent[y];
            parent[y] = root;
            y = next;
        }
        root
    }
    for g in generators {
        for x in 0..degree {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![vec![]; degree];
    for x in 0..degree {
        let root = find(&mut parent, x);
        classes[root].push(x + 1);
    }
    classes.into_iter().filter(|c| !c.is_empty()).collect()
}

/// Which subsets `{h_1, ..., h_r}` the admissibility test quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    /// `r >= 2`, as the definition is printed.
    #[default]
    Printed,
    /// Also require the condition for single markings, `r >= 1`.
    WithSingletons,
}

fn scaled(w: &WeightData) -> Result<ScaledWeights, SymmetryError> {
    if w.n() > MAX_ADMISSIBILITY_MARKINGS {
        return Err(SymmetryError::ResourceLimit(format!(
            "admissibility enumeration is capped at n = {MAX_ADMISSIBILITY_MARKINGS}"
        )));
    }
    ScaledWeights::new(w)
        .ok_or_else(|| SymmetryError::ResourceLimit("weight denominators overflow i128".into()))
}

fn admissible_masks(sums: &ScaledWeights, n: usize, i: usize, j: usize, strictness: Strictness) -> bool {
    let (ai, aj) = (sums.numers[i], sums.numers[j]);
    if ai == aj {
        return true;
    }
    let min_r = match strictness {
        Strictness::Printed => 2,
        Strictness::WithSingletons => 1,
    };
    let others = ((1u64 << n) - 1) & !(1 << i) & !(1 << j);
    let mut sub = others;
    loop {
        if sub.count_ones() >= min_r {
            let rest = sums.mask_sum(sub);
            if (ai + rest <= sums.denom) != (aj + rest <= sums.denom) {
                return false;
            }
        }
        if sub == 0 {
            return true;
        }
        sub = (sub - 1) & others;
    }
}

/// Whether swapping markings `i` and `j` (1-based) preserves every
/// "weights sum to at most one" pattern.
pub fn is_admissible_transposition(w: &WeightData, i: usize, j: usize) -> Result<bool, SymmetryError> {
    is_admissible_transposition_with(w, i, j, Strictness::Printed)
}

pub fn is_admissible_transposition_with(
    w: &WeightData,
    i: usize,
    j: usize,
    strictness: Strictness,
) -> Result<bool, SymmetryError> {
    let n = w.n();
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(SymmetryError::IndexOutOfRange(format!(
            "need two distinct labels in 1..={n}, got {i} and {j}"
        )));
    }
    Ok(admissible_masks(&scaled(w)?, n, i - 1, j - 1, strictness))
}

/// All admissible transpositions `(i, j)`, `i < j`, 1-based.
pub fn admissible_transpositions(
    w: &WeightData,
    strictness: Strictness,
) -> Result<Vec<(usize, usize)>, SymmetryError> {
    let sums = scaled(w)?;
    let n = w.n();
    Ok((0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| admissible_masks(&sums, n, i, j, strictness))
        .map(|(i, j)| (i + 1, j + 1))
        .collect())
}

/// The subgroup `S_{A[n]}` of `S_n` generated by admissible transpositions.
pub fn admissible_group(w: &WeightData) -> Result<PermGroup, SymmetryError> {
    admissible_group_with(w, Strictness::Printed)
}

pub fn admissible_group_with(w: &WeightData, strictness: Strictness) -> Result<PermGroup, SymmetryError> {
    let n = w.n();
    if n > MAX_MATERIALIZED_DEGREE {
        return Err(SymmetryError::ResourceLimit(format!(
            "groups are materialized only for n <= {MAX_MATERIALIZED_DEGREE}, got {n}"
        )));
    }
    let gens = admissible_transpositions(w, strictness)?
        .into_iter()
        .map(|(i, j)| Permutation::transposition(n, i - 1, j - 1))
        .collect();
    PermGroup::generate(n, gens)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigUint),
    Infinite,
    Unknown,
}

impl Serialize for GroupOrder {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GroupOrder::Infinite => s.serialize_str("infinite"),
            GroupOrder::Unknown => s.serialize_str("unknown"),
            GroupOrder::Finite(n) => match u64::try_from(n) {
                Ok(small) => s.serialize_u64(small),
                Err(_) => s.serialize_str(&n.to_string()),
            },
        }
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => f.write_str("infinite"),
            GroupOrder::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AutKind {
    FiniteSymmetricProduct,
    /// `(K^*)^{n-3} ⋊ (S_2 × S_{n-2})`.
    SemidirectTorus,
    /// `PGL(2, K)`.
    ProjectiveLinear,
    /// `(K^*)^2`.
    TorusSquared,
    Trivial,
    /// `K^*`.
    TorusOne,
    Unknown,
}

/// Whether to describe the coarse moduli space or the moduli stack. The two
/// differ only for `(g, n) = (1, 1), (1, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AutTarget {
    #[default]
    CoarseSpace,
    Stack,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutDescriptor {
    pub kind: AutKind,
    pub order: GroupOrder,
    /// Symmetric-group degrees, for products of symmetric groups (and for
    /// the finite part of the torus extension).
    pub factors: Vec<usize>,
    /// Which closed form produced the value, when a Kapranov space matched.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kapranov: Option<(usize, usize)>,
}

impl AutDescriptor {
    fn symmetric_product(factors: Vec<usize>) -> Self {
        let order = factors.iter().map(|&k| factorial(k)).product();
        AutDescriptor {
            kind: AutKind::FiniteSymmetricProduct,
            order: GroupOrder::Finite(order),
            factors,
            kapranov: None,
        }
    }

    fn infinite(kind: AutKind, factors: Vec<usize>) -> Self {
        AutDescriptor {
            kind,
            order: GroupOrder::Infinite,
            factors,
            kapranov: None,
        }
    }

    fn unknown() -> Self {
        AutDescriptor {
            kind: AutKind::Unknown,
            order: GroupOrder::Unknown,
            factors: vec![],
            kapranov: None,
        }
    }

    pub fn finite_order(&self) -> Option<&BigUint> {
        match &self.order {
            GroupOrder::Finite(n) => Some(n),
            _ => None,
        }
    }
}

pub fn factorial(k: usize) -> BigUint {
    (1..=k as u64).map(BigUint::from).product()
}

/// Automorphism group of the coarse space `M_{g,A[n]}`.
pub fn aut_descriptor(w: &WeightData) -> Result<AutDescriptor, SymmetryError> {
    aut_descriptor_for(w, AutTarget::CoarseSpace)
}

pub fn aut_descriptor_for(w: &WeightData, target: AutTarget) -> Result<AutDescriptor, SymmetryError> {
    let (g, n) = (w.genus() as usize, w.n());
    if w.mode() != Mode::Strict {
        return Ok(AutDescriptor::unknown());
    }
    if g >= 1 {
        return Ok(match (g, n, target) {
            (1, 2, AutTarget::CoarseSpace) => AutDescriptor::infinite(AutKind::TorusSquared, vec![]),
            (1, 2, AutTarget::Stack) => AutDescriptor {
                kind: AutKind::Trivial,
                order: GroupOrder::Finite(BigUint::one()),
                factors: vec![],
                kapranov: None,
            },
            (1, 1, AutTarget::CoarseSpace) => AutDescriptor::infinite(AutKind::ProjectiveLinear, vec![]),
            (1, 1, AutTarget::Stack) => AutDescriptor::infinite(AutKind::TorusOne, vec![]),
            _ => {
                // A group generated by transpositions is the product of the
                // symmetric groups on the connected components of the
                // transposition graph.
                let n_gens: Vec<Permutation> = admissible_transpositions(w, Strictness::Printed)?
                    .into_iter()
                    .map(|(i, j)| Permutation::transposition(n, i - 1, j - 1))
                    .collect();
                let mut factors: Vec<usize> = orbits_of(n, &n_gens)
                    .iter()
                    .map(Vec::len)
                    .filter(|&k| k > 1)
                    .collect();
                factors.sort_unstable_by(|a, b| b.cmp(a));
                AutDescriptor::symmetric_product(factors)
            }
        });
    }
    let Some((r, s)) = kapranov_indices(n).find(|&(r, s)| {
        kapranov_weights(n, r, s).map(|k| &k == w).unwrap_or(false)
    }) else {
        return Ok(AutDescriptor::unknown());
    };
    let mut d = if n < 5 {
        AutDescriptor::unknown()
    } else if r == n - 3 {
        AutDescriptor::symmetric_product(vec![n])
    } else if r == 1 && s == n - 3 {
        AutDescriptor::infinite(AutKind::SemidirectTorus, vec![2, n - 2])
    } else if (2..=n - 4).contains(&r) {
        if s == 1 {
            AutDescriptor::symmetric_product(vec![n - r, r])
        } else if s == n - r - 2 {
            AutDescriptor::symmetric_product(vec![n - r - 1, r + 1])
        } else {
            AutDescriptor::symmetric_product(vec![n - r - 1, r])
        }
    } else {
        AutDescriptor::unknown()
    };
    if d.kind != AutKind::Unknown {
        d.kapranov = Some((r, s));
    }
    Ok(d)
}
