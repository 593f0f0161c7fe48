//! Combinatorial predictions for multivariate Bernstein-Sato ideals of central
//! arrangements: bounds on zero loci, the generic-arrangement generator, the
//! generic b-function, and restriction to coarser factorizations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arrangement::{genericity, intersection_lattice, restrict_factorization, Arrangement, Factorization, Lattice};
use crate::error::{domain, structural, Error, Result};
use crate::rational::{primitive_integer_vector, Rational};

/// Affine hyperplane `sum coeffs[k] * s_k + constant = 0` in `s`-space, stored
/// as coprime integers with a positive first nonzero coefficient.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SHyperplane {
    coeffs: Vec<Rational>,
    constant: Rational,
}

impl SHyperplane {
    pub fn new(coeffs: Vec<Rational>, constant: Rational) -> Result<Self> {
        if coeffs.iter().all(Rational::is_zero) {
            return Err(domain("s-hyperplane with an all-zero linear part"));
        }
        let mut all = coeffs;
        all.push(constant);
        let mut norm = primitive_integer_vector(&all);
        let constant = norm.pop().expect("nonempty");
        Ok(SHyperplane { coeffs: norm, constant })
    }

    fn from_ints(coeffs: impl IntoIterator<Item = i64>, constant: i64) -> Self {
        SHyperplane::new(coeffs.into_iter().map(Rational::from).collect(), Rational::from(constant)).expect("nonzero linear part")
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn r(&self) -> usize {
        self.coeffs.len()
    }

    /// Root of a univariate factor.
    pub fn root(&self) -> Option<Rational> {
        (self.r() == 1).then(|| -(&self.constant / &self.coeffs[0]))
    }
}

fn s_name(r: usize, k: usize) -> String {
    if r == 1 {
        "s".to_string()
    } else {
        format!("s{}", k + 1)
    }
}

impl fmt::Display for SHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.r();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            if a.is_one() {
                write!(f, "{}", s_name(r, k))?;
            } else {
                write!(f, "{}*{}", a, s_name(r, k))?;
            }
        }
        if !self.constant.is_zero() {
            let sign = if self.constant.is_negative() { "-" } else { "+" };
            write!(f, " {sign} {}", self.constant.abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self} = 0}}")
    }
}

/// Finite union of hyperplanes in `C^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSLocus {
    r: usize,
    hyperplanes: BTreeSet<SHyperplane>,
}

impl BSLocus {
    pub fn empty(r: usize) -> Self {
        BSLocus { r, hyperplanes: BTreeSet::new() }
    }

    pub fn from_hyperplanes(r: usize, hs: impl IntoIterator<Item = SHyperplane>) -> Result<Self> {
        let mut l = BSLocus::empty(r);
        for h in hs {
            l.insert(h)?;
        }
        Ok(l)
    }

    pub fn insert(&mut self, h: SHyperplane) -> Result<()> {
        if h.r() != self.r {
            return Err(structural(format!("hyperplane in {} variables added to a locus in {}", h.r(), self.r)));
        }
        self.hyperplanes.insert(h);
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn hyperplanes(&self) -> &BTreeSet<SHyperplane> {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn is_subset(&self, other: &BSLocus) -> bool {
        self.r == other.r && self.hyperplanes.is_subset(&other.hyperplanes)
    }

    pub fn union(&self, other: &BSLocus) -> Result<BSLocus> {
        if self.r != other.r {
            return Err(structural("union of loci in different dimensions"));
        }
        Ok(BSLocus { r: self.r, hyperplanes: self.hyperplanes.union(&other.hyperplanes).cloned().collect() })
    }

    pub fn to_json(&self) -> LocusJson {
        LocusJson {
            r: self.r,
            hyperplanes: self.hyperplanes.iter().map(|h| HyperplaneJson { coeffs: h.coeffs.clone(), constant: h.constant.clone(), mult: None }).collect(),
        }
    }

    pub fn from_json(j: &LocusJson) -> Result<Self> {
        let hs = j
            .hyperplanes
            .iter()
            .map(|h| {
                if h.coeffs.len() != j.r {
                    return Err(structural(format!("hyperplane with {} coefficients in a locus with r = {}", h.coeffs.len(), j.r)));
                }
                SHyperplane::new(h.coeffs.clone(), h.constant.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        BSLocus::from_hyperplanes(j.r, hs)
    }
}

impl fmt::Display for BSLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.hyperplanes.iter().map(|h| format!("{{{h} = 0}}")).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

/// Product of linear `s`-polynomials with multiplicities, up to a nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSProduct {
    r: usize,
    factors: BTreeMap<SHyperplane, u32>,
}

impl BSProduct {
    pub fn new(r: usize) -> Self {
        BSProduct { r, factors: BTreeMap::new() }
    }

    pub fn push(&mut self, h: SHyperplane, mult: u32) -> Result<()> {
        if h.r() != self.r {
            return Err(structural("factor in the wrong number of s-variables"));
        }
        if mult > 0 {
            *self.factors.entry(h).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn factors(&self) -> &BTreeMap<SHyperplane, u32> {
        &self.factors
    }

    pub fn multiplicity(&self, h: &SHyperplane) -> u32 {
        self.factors.get(h).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.values().sum()
    }

    /// Divisibility as factor multisets.
    pub fn divides(&self, other: &BSProduct) -> bool {
        self.r == other.r && self.factors.iter().all(|(h, &m)| other.multiplicity(h) >= m)
    }

    pub fn zero_locus(&self) -> BSLocus {
        BSLocus { r: self.r, hyperplanes: self.factors.keys().cloned().collect() }
    }

    /// Roots of a univariate product, ignoring multiplicity.
    pub fn roots(&self) -> BTreeSet<Rational> {
        self.factors.keys().filter_map(SHyperplane::root).collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.factors.values().all(|&m| m == 1)
    }

    pub fn to_json(&self) -> LocusJson {
        LocusJson {
            r: self.r,
            hyperplanes: self
                .factors
                .iter()
                .map(|(h, &m)| HyperplaneJson { coeffs: h.coeffs.clone(), constant: h.constant.clone(), mult: Some(m) })
                .collect(),
        }
    }
}

impl fmt::Display for BSProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(h, &m)| if m == 1 { format!("({h})") } else { format!("({h})^{m}") })
            .collect();
        write!(f, "{}", parts.join(""))
    }
}

/// JSON for both loci and products; products carry `mult`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocusJson {
    pub r: usize,
    pub hyperplanes: Vec<HyperplaneJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneJson {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<u32>,
}

/// A locus together with precondition warnings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusReport {
    pub locus: BSLocus,
    pub warnings: Vec<String>,
}

fn root_bound_preconditions(a: &Arrangement) -> Result<Vec<String>> {
    if a.forms().is_empty() {
        return Err(domain("empty arrangement"));
    }
    a.require_reduced()?;
    let mut warnings = Vec::new();
    if a.n() > 3 {
        let generic = genericity(a)?.is_generic();
        if !generic {
            warnings.push(format!(
                "tameness is not certified for n = {} and a non-generic arrangement; the bounds assume a tame divisor (see check-tame)",
                a.n()
            ));
        }
    }
    Ok(warnings)
}

/// Collect `{sum_k d_{X,k} s_k + r(X) + l = 0}` for `l` in `0..=top(X)` over
/// indecomposable edges.
fn edge_locus(a: &Arrangement, f: &Factorization, lat: &Lattice, top: impl Fn(usize, usize) -> i64) -> Result<BSLocus> {
    let d = a.degree();
    f.check(d)?;
    let mut locus = BSLocus::empty(f.r());
    for e in lat.indecomposable_edges() {
        let (d_x, counts) = restrict_factorization(e, f, d)?;
        let coeffs: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
        for l in 0..=top(d_x, e.rank) {
            locus.insert(SHyperplane::from_ints(coeffs.iter().copied(), e.rank as i64 + l))?;
        }
    }
    Ok(locus)
}

/// Hyperplanes guaranteed to lie in the zero locus of a tame, central, reduced
/// arrangement: `0 <= l <= d_X - 1` on every indecomposable edge.
pub fn lower_locus(a: &Arrangement, f: &Factorization) -> Result<LocusReport> {
    let warnings = root_bound_preconditions(a)?;
    let lat = intersection_lattice(a);
    let locus = edge_locus(a, f, &lat, |d_x, _| d_x as i64 - 1)?;
    Ok(LocusReport { locus, warnings })
}

/// `T_X = 2 d_X - d_X / d - r(X)`.
pub fn t_x(d_x: usize, d: usize, rank: usize) -> Rational {
    Rational::from(2 * d_x as i64) - Rational::new(d_x as i64, d as i64) - Rational::from(rank as i64)
}

/// `ceil(T_X - 1)`, exact.
pub fn upper_index(d_x: usize, d: usize, rank: usize) -> i64 {
    let c: BigInt = (t_x(d_x, d, rank) - Rational::one()).ceil();
    c.to_i64().expect("small")
}

/// Hyperplanes that may lie in the zero locus: `0 <= l <= ceil(T_X - 1)`.
pub fn upper_locus(a: &Arrangement, f: &Factorization) -> Result<LocusReport> {
    let warnings = root_bound_preconditions(a)?;
    let lat = intersection_lattice(a);
    let d = a.degree();
    // For d = 1 the formula gives T_X = 0; the range never drops below the lower bound's.
    let locus = edge_locus(a, f, &lat, |d_x, rank| upper_index(d_x, d, rank).max(d_x as i64 - 1))?;
    Ok(LocusReport { locus, warnings })
}

/// Bernstein-Sato data for a reduced generic arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericIdeal {
    /// Principal generator; present for factorizations into linear forms.
    pub generator: Option<BSProduct>,
    pub locus: BSLocus,
    pub principal: bool,
    /// The ideal equals its radical (linear factorizations).
    pub reduced: bool,
}

/// Zero locus `∪{s_k + 1} ∪ ∪_{i=0}^{2d-n-2} {sum d_k s_k + i + n}` and, for a
/// factorization into linear forms, the generator itself.
pub fn generic_ideal(a: &Arrangement, f: &Factorization) -> Result<GenericIdeal> {
    let rep = genericity(a)?;
    if !rep.independent_n_subsets {
        return Err(domain("arrangement is not generic: some n forms are linearly dependent"));
    }
    if !rep.degree_exceeds_dimension {
        return Err(domain(format!("generic formulas need d > n, got d = {}, n = {}", a.degree(), a.n())));
    }
    let d = a.degree();
    f.check(d)?;
    let n = a.n() as i64;
    let r = f.r();
    let dk: Vec<i64> = f.groups().iter().map(|g| g.len() as i64).collect();
    let mut product = BSProduct::new(r);
    for k in 0..r {
        let e: Vec<i64> = (0..r).map(|j| i64::from(j == k)).collect();
        product.push(SHyperplane::from_ints(e, 1), 1)?;
    }
    for i in 0..=(2 * d as i64 - n - 2) {
        product.push(SHyperplane::from_ints(dk.iter().copied(), i + n), 1)?;
    }
    let linear = f.is_linear();
    Ok(GenericIdeal { locus: product.zero_locus(), generator: linear.then_some(product), principal: true, reduced: linear })
}

/// `(s+1)^{n-1} prod_{i=0}^{2d-n-2} (s + (i+n)/d)` with merged multiplicities.
pub fn walther_bfunction(n: usize, d: usize) -> Result<BSProduct> {
    if n == 0 || d <= n {
        return Err(domain(format!("generic b-function needs d > n >= 1, got n = {n}, d = {d}")));
    }
    let mut b = BSProduct::new(1);
    if n > 1 {
        b.push(SHyperplane::from_ints([1], 1), (n - 1) as u32)?;
    }
    for i in 0..=(2 * d - n - 2) {
        b.push(SHyperplane::new(vec![Rational::one()], Rational::new((i + n) as i64, d as i64))?, 1)?;
    }
    Ok(b)
}

/// `prod_X prod_{l=0}^{N} (sum_{j in J(X)} s_j + r(X) + l)` over indecomposable edges.
pub fn maisonobe_element(a: &Arrangement, f: &Factorization, big_n: usize) -> Result<BSProduct> {
    let d = a.degree();
    f.check(d)?;
    if !f.is_linear() {
        return Err(domain("the Maisonobe element needs a factorization into linear forms"));
    }
    if d == 0 {
        return Err(domain("empty arrangement"));
    }
    let lat = intersection_lattice(a);
    let mut b = BSProduct::new(f.r());
    for e in lat.indecomposable_edges() {
        let (_, counts) = restrict_factorization(e, f, d)?;
        let coeffs: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
        for l in 0..=big_n as i64 {
            b.push(SHyperplane::from_ints(coeffs.iter().copied(), e.rank as i64 + l), 1)?;
        }
    }
    Ok(b)
}

/// Partition of the `r` factor indices into blocks `I_1..I_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoarseningMap {
    blocks: Vec<Vec<usize>>,
}

impl CoarseningMap {
    pub fn new(blocks: Vec<Vec<usize>>, r: usize) -> Result<Self> {
        Factorization::new(blocks.clone(), r)?;
        Ok(CoarseningMap { blocks })
    }

    /// The single block `{0..r}`: restriction to the diagonal.
    pub fn diagonal(r: usize) -> Self {
        CoarseningMap { blocks: vec![(0..r).collect()] }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn r(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn m(&self) -> usize {
        self.blocks.len()
    }

    /// `self` followed by `next` (a partition of `self`'s blocks).
    pub fn then(&self, next: &CoarseningMap) -> Result<CoarseningMap> {
        if next.r() != self.m() {
            return Err(structural("coarsening maps do not compose"));
        }
        let blocks = next.blocks.iter().map(|b| b.iter().flat_map(|&t| self.blocks[t].iter().copied()).collect()).collect();
        CoarseningMap::new(blocks, self.r())
    }
}

/// Merge factorization groups along `c`: `h_t = prod_{k in I_t} f_k`.
pub fn coarsen(f: &Factorization, c: &CoarseningMap) -> Result<Factorization> {
    if c.r() != f.r() {
        return Err(structural(format!("coarsening of {} groups applied to a factorization with {}", c.r(), f.r())));
    }
    let groups: Vec<Vec<usize>> = c
        .blocks
        .iter()
        .map(|b| {
            let mut g: Vec<usize> = b.iter().flat_map(|&k| f.groups()[k].iter().copied()).collect();
            g.sort_unstable();
            g
        })
        .collect();
    let d = groups.iter().map(Vec::len).sum();
    Factorization::new(groups, d)
}

/// Pullback of a locus along the diagonal embedding of a coarser factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    pub locus: BSLocus,
    /// Some hyperplane pulled back to `0 = 0`: the whole space lies in the preimage.
    pub entire_space: bool,
}

pub fn pullback_locus(l: &BSLocus, c: &CoarseningMap) -> Result<Pullback> {
    if l.r() != c.r() {
        return Err(structural(format!("locus in {} variables pulled back along a map from {} factors", l.r(), c.r())));
    }
    let mut out = BSLocus::empty(c.m());
    let mut entire = false;
    for h in l.hyperplanes() {
        let coeffs: Vec<Rational> = c.blocks.iter().map(|b| b.iter().fold(Rational::zero(), |acc, &k| acc + &h.coeffs[k])).collect();
        if coeffs.iter().all(Rational::is_zero) {
            if h.constant.is_zero() {
                entire = true;
            }
            continue;
        }
        out.insert(SHyperplane::new(coeffs, h.constant.clone())?)?;
    }
    Ok(Pullback { locus: out, entire_space: entire })
}

/// Points of the locus on the diagonal `s_1 = ... = s_r`, as values of `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalRoots {
    pub roots: BTreeSet<Rational>,
    /// Some hyperplane contains the whole diagonal.
    pub entire_diagonal: bool,
}

pub fn diagonal_roots(l: &BSLocus) -> DiagonalRoots {
    let pb = pullback_locus(l, &CoarseningMap::diagonal(l.r())).expect("diagonal map matches");
    DiagonalRoots { roots: pb.locus.hyperplanes().iter().filter_map(SHyperplane::root).collect(), entire_diagonal: pb.entire_space }
}

/// Every root lies strictly inside `(-2 + 1/d, 0)`.
pub fn saito_interval_check(roots: &BTreeSet<Rational>, d: usize) -> Result<bool> {
    if d == 0 {
        return Err(domain("degree must be positive"));
    }
    let lo = Rational::from(-2) + Rational::new(1, d as i64);
    Ok(roots.iter().all(|r| r > &lo && r.is_negative()))
}

impl std::str::FromStr for BSLocus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let j: LocusJson = serde_json::from_str(s).map_err(|e| Error::Parse { position: e.column(), message: e.to_string() })?;
        BSLocus::from_json(&j)
    }
}
