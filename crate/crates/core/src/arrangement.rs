//! Central hyperplane arrangements, their intersection lattices, edge
//! statistics and matroid-based indecomposability.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{domain, structural, Error, Result};
use crate::linalg::QMatrix;
use crate::poly::Poly;
use crate::rational::{primitive_integer_vector, Rational};

/// A linear form `sum coeffs[i] * x_i` with a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub coeffs: Vec<Rational>,
    pub mult: u32,
}

/// Central arrangement of linear forms in `n` variables.
///
/// Coefficient vectors are stored as primitive integer vectors with a positive
/// first nonzero entry, so two forms define the same hyperplane iff their
/// coefficients are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    forms: Vec<LinearForm>,
    label: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormJson {
    pub coeffs: Vec<Rational>,
    #[serde(default = "one_u32")]
    pub mult: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<Rational>,
}

fn one_u32() -> u32 {
    1
}

/// On-disk arrangement format.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementJson {
    pub n: usize,
    pub forms: Vec<FormJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorization: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl Arrangement {
    pub fn new(n: usize, forms: Vec<(Vec<Rational>, u32)>) -> Result<Self> {
        if n == 0 {
            return Err(domain("ambient dimension must be positive"));
        }
        let mut out = Vec::with_capacity(forms.len());
        for (i, (coeffs, mult)) in forms.into_iter().enumerate() {
            if coeffs.len() != n {
                return Err(structural(format!("form {i} has {} coefficients, expected {n}", coeffs.len())));
            }
            if coeffs.iter().all(Rational::is_zero) {
                return Err(domain(format!("form {i} is the zero form")));
            }
            if mult == 0 {
                return Err(domain(format!("form {i} has multiplicity zero")));
            }
            out.push(LinearForm { coeffs: primitive_integer_vector(&coeffs), mult });
        }
        Ok(Arrangement { n, forms: out, label: None })
    }

    /// Forms given as integer rows, all with multiplicity one.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        Arrangement::new(n, rows.iter().map(|r| (r.iter().map(|&x| Rational::from(x)).collect(), 1)).collect())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn from_json(j: &ArrangementJson) -> Result<(Self, Option<Factorization>)> {
        let mut forms = Vec::with_capacity(j.forms.len());
        for (i, f) in j.forms.iter().enumerate() {
            if f.constant.as_ref().is_some_and(|c| !c.is_zero()) {
                return Err(domain(format!("form {i} has a nonzero constant term; only central arrangements are supported")));
            }
            forms.push((f.coeffs.clone(), f.mult));
        }
        let mut a = Arrangement::new(j.n, forms)?;
        a.label = j.label.clone();
        let fact = match &j.factorization {
            Some(groups) => Some(Factorization::new(groups.clone(), a.degree())?),
            None => None,
        };
        Ok((a, fact))
    }

    pub fn to_json(&self, factorization: Option<&Factorization>) -> ArrangementJson {
        ArrangementJson {
            n: self.n,
            forms: self.forms.iter().map(|f| FormJson { coeffs: f.coeffs.clone(), mult: f.mult, constant: None }).collect(),
            factorization: factorization.map(|f| f.groups.clone()),
            label: self.label.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// `d`, the number of linear-form occurrences counted with multiplicity.
    pub fn degree(&self) -> usize {
        self.forms.iter().map(|f| f.mult as usize).sum()
    }

    /// Occurrence index -> form index; each form appears `mult` times.
    pub fn occurrences(&self) -> Vec<usize> {
        self.forms.iter().enumerate().flat_map(|(i, f)| std::iter::repeat(i).take(f.mult as usize)).collect()
    }

    /// Form indices grouped by hyperplane; each class is one distinct hyperplane.
    pub fn hyperplane_classes(&self) -> Vec<Vec<usize>> {
        let mut by_coeffs: BTreeMap<&Vec<Rational>, Vec<usize>> = BTreeMap::new();
        let mut order = Vec::new();
        for (i, f) in self.forms.iter().enumerate() {
            let e = by_coeffs.entry(&f.coeffs).or_default();
            if e.is_empty() {
                order.push(&f.coeffs);
            }
            e.push(i);
        }
        order.into_iter().map(|c| by_coeffs[c].clone()).collect()
    }

    /// Reduced: every hyperplane appears exactly once with multiplicity one.
    pub fn is_reduced(&self) -> bool {
        self.reduction_obstruction().is_none()
    }

    fn reduction_obstruction(&self) -> Option<String> {
        if let Some((i, f)) = self.forms.iter().enumerate().find(|(_, f)| f.mult > 1) {
            return Some(format!("form {i} {} has multiplicity {}", fmt_coeffs(&f.coeffs), f.mult));
        }
        for class in self.hyperplane_classes() {
            if class.len() > 1 {
                return Some(format!(
                    "forms {} and {} define the same hyperplane {}",
                    class[0],
                    class[1],
                    fmt_coeffs(&self.forms[class[0]].coeffs)
                ));
            }
        }
        None
    }

    pub fn require_reduced(&self) -> Result<()> {
        match self.reduction_obstruction() {
            Some(m) => Err(domain(format!("arrangement is not reduced: {m}"))),
            None => Ok(()),
        }
    }

    /// The same hyperplanes, each once with multiplicity one.
    pub fn reduced(&self) -> Arrangement {
        let forms = self
            .hyperplane_classes()
            .into_iter()
            .map(|c| LinearForm { coeffs: self.forms[c[0]].coeffs.clone(), mult: 1 })
            .collect();
        Arrangement { n: self.n, forms, label: self.label.clone() }
    }

    /// Standard variable names: `x,y,z` up to three variables, else `x1..xn`.
    pub fn default_vars(n: usize) -> Arc<[String]> {
        if n <= 3 {
            Poly::make_vars(&["x", "y", "z"][..n])
        } else {
            (1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>().into()
        }
    }

    pub fn linear_form_poly(&self, i: usize, vars: &Arc<[String]>) -> Poly {
        let mut p = Poly::zero(vars.clone());
        for (k, c) in self.forms[i].coeffs.iter().enumerate() {
            p = &p + &Poly::var(vars.clone(), k).scale(c);
        }
        p
    }

    /// Defining polynomial `prod l_i^{mult_i}`.
    pub fn polynomial(&self) -> Poly {
        let vars = Arrangement::default_vars(self.n);
        let mut f = Poly::one(vars.clone());
        for (i, form) in self.forms.iter().enumerate() {
            f = &f * &self.linear_form_poly(i, &vars).pow(form.mult);
        }
        f
    }

    /// Per-group defining polynomials `f_k = prod_{j in S_k} l_j`.
    pub fn factor_polys(&self, fact: &Factorization) -> Result<Vec<Poly>> {
        fact.check(self.degree())?;
        let vars = Arrangement::default_vars(self.n);
        let occ = self.occurrences();
        Ok(fact
            .groups
            .iter()
            .map(|g| g.iter().fold(Poly::one(vars.clone()), |acc, &j| &acc * &self.linear_form_poly(occ[j], &vars)))
            .collect())
    }
}

fn fmt_coeffs(c: &[Rational]) -> String {
    format!("({})", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

/// Partition of the occurrence indices `0..d` into nonempty groups `S_1..S_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    groups: Vec<Vec<usize>>,
}

impl Factorization {
    pub fn new(groups: Vec<Vec<usize>>, d: usize) -> Result<Self> {
        let f = Factorization { groups };
        f.check(d)?;
        Ok(f)
    }

    /// One group per linear-form occurrence.
    pub fn linear(d: usize) -> Self {
        Factorization { groups: (0..d).map(|i| vec![i]).collect() }
    }

    /// A single group: `f = f`.
    pub fn trivial(d: usize) -> Self {
        Factorization { groups: vec![(0..d).collect()] }
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn r(&self) -> usize {
        self.groups.len()
    }

    pub fn is_linear(&self) -> bool {
        self.groups.iter().all(|g| g.len() == 1)
    }

    pub fn check(&self, d: usize) -> Result<()> {
        let mut seen = vec![false; d];
        for (k, g) in self.groups.iter().enumerate() {
            if g.is_empty() {
                return Err(structural(format!("factorization group {k} is empty")));
            }
            for &j in g {
                if j >= d {
                    return Err(structural(format!("factorization index {j} out of range for degree {d}")));
                }
                if seen[j] {
                    return Err(structural(format!("factorization index {j} appears twice")));
                }
                seen[j] = true;
            }
        }
        if let Some(j) = seen.iter().position(|s| !s) {
            return Err(structural(format!("factorization misses index {j}")));
        }
        Ok(())
    }

    /// Group index of every occurrence.
    pub fn group_of(&self, d: usize) -> Vec<usize> {
        let mut out = vec![0; d];
        for (k, g) in self.groups.iter().enumerate() {
            for &j in g {
                out[j] = k;
            }
        }
        out
    }
}

/// An edge `X` of the intersection lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeEdge {
    /// Reduced row echelon basis of the span of the normals vanishing on `X`.
    pub annihilator: Vec<Vec<Rational>>,
    /// Reduced row echelon basis of `X` itself.
    pub basis: Vec<Vec<Rational>>,
    /// Codimension `r(X)`.
    pub rank: usize,
    /// Occurrence indices of all forms vanishing on `X`, sorted.
    pub j: Vec<usize>,
    /// Form indices (not occurrences) vanishing on `X`.
    pub form_indices: Vec<usize>,
    /// `|J(X)|` counted with multiplicity.
    pub d_x: usize,
    pub indecomposable: bool,
}

/// Intersection lattice: all edges, ambient space first.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub n: usize,
    pub edges: Vec<LatticeEdge>,
    /// Pairs `(a, b)` with `X_a` strictly contained in `X_b`.
    pub containment: Vec<(usize, usize)>,
}

impl Lattice {
    pub fn indecomposable_edges(&self) -> impl Iterator<Item = &LatticeEdge> {
        self.edges.iter().filter(|e| e.indecomposable)
    }

    pub fn edge_by_forms(&self, forms: &[usize]) -> Option<&LatticeEdge> {
        self.edges.iter().find(|e| e.form_indices == forms)
    }

    /// The edge that is the origin, if the arrangement is essential.
    pub fn origin(&self) -> Option<&LatticeEdge> {
        self.edges.iter().find(|e| e.rank == self.n)
    }
}

fn span_rref(rows: Vec<Vec<Rational>>, n: usize) -> Vec<Vec<Rational>> {
    if rows.is_empty() {
        return Vec::new();
    }
    QMatrix::from_rows(n, rows).expect("rectangular").row_space_basis().row_vecs()
}

fn in_span(basis: &[Vec<Rational>], v: &[Rational], n: usize) -> bool {
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    span_rref(rows, n).len() == basis.len()
}

/// All edges of `L(A)` by worklist closure: every edge is intersected with every
/// hyperplane, deduplicating on the canonical annihilator basis.
pub fn intersection_lattice(a: &Arrangement) -> Lattice {
    let n = a.n;
    let classes = a.hyperplane_classes();
    let normals: Vec<&Vec<Rational>> = classes.iter().map(|c| &a.forms[c[0]].coeffs).collect();
    let mut seen: BTreeMap<Vec<Vec<Rational>>, ()> = BTreeMap::new();
    let mut found: Vec<Vec<Vec<Rational>>> = Vec::new();
    let mut queue: VecDeque<Vec<Vec<Rational>>> = VecDeque::new();
    seen.insert(Vec::new(), ());
    found.push(Vec::new());
    queue.push_back(Vec::new());
    while let Some(ann) = queue.pop_front() {
        for h in &normals {
            if in_span(&ann, h, n) {
                continue;
            }
            let mut rows = ann.clone();
            rows.push((*h).clone());
            let next = span_rref(rows, n);
            if seen.insert(next.clone(), ()).is_none() {
                found.push(next.clone());
                queue.push_back(next);
            }
        }
    }

    let occ = a.occurrences();
    let mut edges: Vec<LatticeEdge> = found
        .into_iter()
        .map(|ann| {
            let form_indices: Vec<usize> = (0..a.forms.len()).filter(|&i| in_span(&ann, &a.forms[i].coeffs, n)).collect();
            let j: Vec<usize> = (0..occ.len()).filter(|&k| form_indices.contains(&occ[k])).collect();
            let basis = if ann.is_empty() {
                QMatrix::identity(n).row_vecs()
            } else {
                let ker = QMatrix::from_rows(n, ann.clone()).expect("rectangular").kernel_basis();
                span_rref(ker, n)
            };
            let rank = ann.len();
            let mut e = LatticeEdge { annihilator: ann, basis, rank, d_x: j.len(), j, form_indices, indecomposable: false };
            e.indecomposable = is_indecomposable(&e, a);
            e
        })
        .collect();
    edges.sort_by(|x, y| x.rank.cmp(&y.rank).then_with(|| x.j.cmp(&y.j)));

    let mut containment = Vec::new();
    for (ia, ea) in edges.iter().enumerate() {
        for (ib, eb) in edges.iter().enumerate() {
            // X_a strictly inside X_b iff J(X_b) is a proper subset of J(X_a)
            if ia != ib && eb.form_indices.len() < ea.form_indices.len() && eb.form_indices.iter().all(|f| ea.form_indices.contains(f)) {
                containment.push((ia, ib));
            }
        }
    }
    Lattice { n, edges, containment }
}

/// Connected components of the linear matroid on `vectors`. The basis is chosen
/// greedily following `order`; the components do not depend on that choice.
pub fn matroid_components(vectors: &[Vec<Rational>], order: &[usize]) -> Vec<Vec<usize>> {
    let m = vectors.len();
    if m == 0 {
        return Vec::new();
    }
    let n = vectors[0].len();
    let mut basis: Vec<usize> = Vec::new();
    let mut span: Vec<Vec<Rational>> = Vec::new();
    for &i in order {
        if !in_span(&span, &vectors[i], n) {
            basis.push(i);
            let mut rows = span.clone();
            rows.push(vectors[i].clone());
            span = span_rref(rows, n);
        }
    }
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    if !basis.is_empty() {
        // columns are basis vectors; solve for the fundamental circuit of each other element
        let cols = QMatrix::from_rows(n, basis.iter().map(|&b| vectors[b].clone()).collect()).expect("rectangular").transpose();
        for e in 0..m {
            if basis.contains(&e) {
                continue;
            }
            let coeffs = cols.solve(&vectors[e]).expect("shape").expect("spanned by basis");
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    let (ra, rb) = (find(&mut parent, e), find(&mut parent, basis[k]));
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..m {
        let r = find(&mut parent, i);
        comps.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = comps.into_values().collect();
    out.sort();
    out
}

/// An edge is indecomposable iff the matroid of its distinct forms is connected.
/// Repeated forms are parallel and never split a component. The ambient space
/// (no forms) is decomposable by convention.
pub fn is_indecomposable(e: &LatticeEdge, a: &Arrangement) -> bool {
    let mut distinct: Vec<&Vec<Rational>> = e.form_indices.iter().map(|&i| &a.forms[i].coeffs).collect();
    distinct.sort();
    distinct.dedup();
    if distinct.is_empty() {
        return false;
    }
    let vectors: Vec<Vec<Rational>> = distinct.into_iter().cloned().collect();
    let order: Vec<usize> = (0..vectors.len()).collect();
    matroid_components(&vectors, &order).len() == 1
}

/// Genericity details: both conditions are needed for the generic formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericityReport {
    /// Every `n` of the forms are linearly independent (vacuous when `d < n`).
    pub independent_n_subsets: bool,
    /// `d > n`.
    pub degree_exceeds_dimension: bool,
}

impl GenericityReport {
    pub fn is_generic(&self) -> bool {
        self.independent_n_subsets && self.degree_exceeds_dimension
    }
}

fn combinations(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            if d - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, d, k, cur, out);
            cur.pop();
        }
    }
    rec(0, d, k, &mut cur, &mut out);
    out
}

pub(crate) fn k_subsets(d: usize, k: usize) -> Vec<Vec<usize>> {
    combinations(d, k)
}

pub fn genericity(a: &Arrangement) -> Result<GenericityReport> {
    a.require_reduced()?;
    let d = a.forms.len();
    let independent = d < a.n
        || combinations(d, a.n).iter().all(|s| {
            let rows = s.iter().map(|&i| a.forms[i].coeffs.clone()).collect();
            QMatrix::from_rows(a.n, rows).expect("rectangular").rank() == a.n
        });
    Ok(GenericityReport { independent_n_subsets: independent, degree_exceeds_dimension: d > a.n })
}

/// Generic in the sense needed downstream: `d > n` and any `n` forms meet only at 0.
pub fn is_generic(a: &Arrangement) -> Result<bool> {
    Ok(genericity(a)?.is_generic())
}

/// `d_X` and the per-group counts `d_{X,k} = |J(X) ∩ S_k|`.
pub fn restrict_factorization(e: &LatticeEdge, f: &Factorization, d: usize) -> Result<(usize, Vec<usize>)> {
    f.check(d)?;
    if e.j.iter().any(|&j| j >= d) {
        return Err(structural("edge indices exceed the factorization's degree"));
    }
    let counts: Vec<usize> = f.groups.iter().map(|g| g.iter().filter(|j| e.j.binary_search(j).is_ok()).count()).collect();
    Ok((e.d_x, counts))
}

/// Flats of the reduced arrangement as bitmasks over hyperplane classes, with ranks.
fn flats(a: &Arrangement) -> Result<Vec<(u64, usize)>> {
    if a.forms.len() > 64 {
        return Err(domain("lattice isomorphism supports at most 64 hyperplanes"));
    }
    let lat = intersection_lattice(a);
    Ok(lat.edges.iter().map(|e| (e.form_indices.iter().fold(0u64, |m, &i| m | (1 << i)), e.rank)).collect())
}

/// True iff some bijection of hyperplanes maps the edges of `A` onto the edges
/// of `B`, preserving ranks.
pub fn lattice_isomorphic(a: &Arrangement, b: &Arrangement) -> Result<bool> {
    a.require_reduced()?;
    b.require_reduced()?;
    let d = a.forms.len();
    if d != b.forms.len() {
        return Ok(false);
    }
    let fa = flats(a)?;
    let fb = flats(b)?;
    let profile = |fs: &[(u64, usize)]| {
        let mut p: Vec<(usize, u32)> = fs.iter().map(|(m, r)| (*r, m.count_ones())).collect();
        p.sort();
        p
    };
    if profile(&fa) != profile(&fb) {
        return Ok(false);
    }
    let fingerprint = |fs: &[(u64, usize)], i: usize| {
        let mut p: Vec<(usize, u32)> = fs.iter().filter(|(m, _)| m & (1 << i) != 0).map(|(m, r)| (*r, m.count_ones())).collect();
        p.sort();
        p
    };
    let fp_a: Vec<_> = (0..d).map(|i| fingerprint(&fa, i)).collect();
    let fp_b: Vec<_> = (0..d).map(|i| fingerprint(&fb, i)).collect();
    let flats_b: HashMap<u64, usize> = fb.iter().cloned().collect();
    // flats of A grouped by their highest element, checked once fully assigned
    let mut completes_at: Vec<Vec<(u64, usize)>> = vec![Vec::new(); d];
    for &(m, r) in &fa {
        if m != 0 {
            completes_at[63 - m.leading_zeros() as usize].push((m, r));
        }
    }

    struct Search<'a> {
        d: usize,
        fp_a: &'a [Vec<(usize, u32)>],
        fp_b: &'a [Vec<(usize, u32)>],
        flats_b: &'a HashMap<u64, usize>,
        completes_at: &'a [Vec<(u64, usize)>],
        image: Vec<usize>,
        used: Vec<bool>,
    }
    impl Search<'_> {
        fn map_mask(&self, m: u64) -> u64 {
            (0..self.d).filter(|i| m & (1 << i) != 0).fold(0u64, |acc, i| acc | (1 << self.image[i]))
        }
        fn go(&mut self, k: usize) -> bool {
            if k == self.d {
                return true;
            }
            for c in 0..self.d {
                if self.used[c] || self.fp_a[k] != self.fp_b[c] {
                    continue;
                }
                self.image[k] = c;
                self.used[c] = true;
                let ok = self.completes_at[k].iter().all(|&(m, r)| self.flats_b.get(&self.map_mask(m)) == Some(&r));
                if ok && self.go(k + 1) {
                    return true;
                }
                self.used[c] = false;
            }
            false
        }
    }
    let mut s = Search { d, fp_a: &fp_a, fp_b: &fp_b, flats_b: &flats_b, completes_at: &completes_at, image: vec![0; d], used: vec![false; d] };
    Ok(s.go(0))
}

impl std::str::FromStr for Arrangement {
    type Err = Error;

    /// Parse arrangement JSON.
    fn from_str(s: &str) -> Result<Self> {
        let j: ArrangementJson = serde_json::from_str(s).map_err(|e| Error::Parse { position: e.column(), message: e.to_string() })?;
        Ok(Arrangement::from_json(&j)?.0)
    }
}

/// Set of hyperplane classes as sorted index sets (used by tests and reports).
pub fn edge_sets(l: &Lattice) -> BTreeSet<Vec<usize>> {
    l.edges.iter().map(|e| e.form_indices.clone()).collect()
}
