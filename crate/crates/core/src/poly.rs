use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::Value;

use crate::error::{domain, structural, Error, Result};
use crate::rational::Rational;

/// Exponent vector ordered by graded lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a map keyed by graded-lex ordered exponent vectors, so the
/// leading term is the last entry. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

/// Binary operations exposed through [`poly_arithmetic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
    PartialDerivative(usize),
}

/// Exact add / multiply / differentiate with variable-list checking.
pub fn poly_arithmetic(p: &Poly, q: &Poly, op: PolyOp) -> Result<Poly> {
    match op {
        PolyOp::Add => p.checked_add(q),
        PolyOp::Mul => p.checked_mul(q),
        PolyOp::PartialDerivative(i) => p.partial(i),
    }
}

impl Poly {
    pub fn zero(vars: Arc<[String]>) -> Self {
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Arc<[String]>, c: Rational) -> Self {
        let mut p = Poly::zero(vars);
        let n = p.nvars();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(n), c);
        }
        p
    }

    pub fn one(vars: Arc<[String]>) -> Self {
        Poly::constant(vars, Rational::one())
    }

    pub fn var(vars: Arc<[String]>, i: usize) -> Self {
        let n = vars.len();
        assert!(i < n, "variable index out of range");
        let mut p = Poly::zero(vars);
        p.terms.insert(Monomial::var(n, i), Rational::one());
        p
    }

    pub fn monomial(vars: Arc<[String]>, m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Build from `(coefficient, exponents)` pairs, merging repeated monomials.
    pub fn from_terms(vars: Arc<[String]>, terms: impl IntoIterator<Item = (Rational, Vec<u32>)>) -> Result<Self> {
        let n = vars.len();
        let mut p = Poly::zero(vars);
        for (c, e) in terms {
            if e.len() != n {
                return Err(structural(format!("exponent vector of length {} for {} variables", e.len(), n)));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn make_vars<S: AsRef<str>>(names: &[S]) -> Arc<[String]> {
        names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one(self.nvars())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[v]).max()
    }

    pub fn involves(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m.0[v] > 0)
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(structural(format!(
                "variable lists differ: [{}] vs [{}]",
                self.vars.join(","),
                other.vars.join(",")
            )))
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.vars.clone());
        }
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.vars.clone());
        }
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.vars.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Normalize to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn partial(&self, i: usize) -> Result<Poly> {
        if i >= self.nvars() {
            return Err(structural(format!("no variable with index {i}")));
        }
        let mut out = Poly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            if m.0[i] > 0 {
                let mut e = m.0.clone();
                e[i] -= 1;
                out.add_term(Monomial(e), c * &Rational::from(m.0[i] as i64));
            }
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars()).map(|i| self.partial(i).expect("index in range")).collect()
    }

    /// Substitute `images[i]` for the i-th variable.
    pub fn compose(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.nvars() {
            return Err(structural("compose needs one image per variable"));
        }
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .ok_or_else(|| structural("compose on a ring without variables"))?;
        let mut out = Poly::zero(target.clone());
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target.clone(), c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    images[i].check_same(&t)?;
                    t = &t * &images[i].pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.vars.clone());
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let tm = m.div(&lm);
            let tc = c / &lc;
            rem = &rem - &divisor.mul_term(&tm, &tc);
            quot.add_term(tm, tc);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Coefficients of `self` viewed as a polynomial in variable `v`, indexed by degree.
    fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = vec![Poly::zero(self.vars.clone()); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[v] as usize;
            e[v] = 0;
            out[k].add_term(Monomial(e), c.clone());
        }
        out
    }

    fn leading_coeff_in(&self, v: usize) -> Poly {
        self.coeffs_in(v).pop().unwrap_or_else(|| Poly::zero(self.vars.clone()))
    }

    /// Pseudo-remainder of `self` by `b` with respect to variable `v`.
    fn pseudo_rem(&self, b: &Poly, v: usize) -> Poly {
        let db = b.degree_in(v).unwrap_or(0);
        let lcb = b.leading_coeff_in(v);
        let mut r = self.clone();
        while !r.is_zero() {
            let dr = r.degree_in(v).unwrap_or(0);
            if dr < db {
                break;
            }
            let mut shift = vec![0; self.nvars()];
            shift[v] = dr - db;
            let t = r.leading_coeff_in(v).mul_term(&Monomial(shift), &Rational::one());
            r = &(&lcb * &r) - &(&t * b);
        }
        r
    }

    fn content_in(&self, v: usize) -> Poly {
        let mut g = Poly::zero(self.vars.clone());
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = gcd_from(&g, &c, v + 1);
            if g.is_constant() && !g.is_zero() {
                break;
            }
        }
        g
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        Ok(gcd_from(self, other, 0))
    }

    /// Product of the distinct irreducible factors, normalized monic.
    pub fn squarefree_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(domain("squarefree part of the zero polynomial"));
        }
        let mut g = self.clone();
        for d in self.gradient() {
            g = gcd_from(&g, &d, 0);
        }
        let red = self.div_exact(&g).expect("gcd divides its argument");
        Ok(red.monic())
    }

    /// True when `self = c * other` for a nonzero rational `c`.
    pub fn is_unit_multiple_of(&self, other: &Poly) -> bool {
        if self.is_zero() || other.is_zero() {
            return false;
        }
        match self.div_exact(other) {
            Some(q) => q.is_constant(),
            None => false,
        }
    }

    /// Parse an infix expression, inferring the variable list from the names used.
    pub fn parse(src: &str) -> Result<Poly> {
        crate::parse::parse_poly(src, None)
    }

    pub fn parse_with_vars<S: AsRef<str>>(src: &str, vars: &[S]) -> Result<Poly> {
        crate::parse::parse_poly(src, Some(Poly::make_vars(vars)))
    }

    /// JSON encoding as a list of `[coefficient, exponent-vector]`, leading term first.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| serde_json::json!([c.to_string(), m.0]))
                .collect(),
        )
    }

    pub fn from_json(vars: Arc<[String]>, v: &Value) -> Result<Poly> {
        let bad = |m: &str| Error::Parse { position: 0, message: m.to_string() };
        if let Some(s) = v.as_str() {
            return crate::parse::parse_poly(s, Some(vars));
        }
        let arr = v.as_array().ok_or_else(|| bad("polynomial must be a string or a list of terms"))?;
        let mut terms = Vec::with_capacity(arr.len());
        for t in arr {
            let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("term must be [coefficient, exponents]"))?;
            let c: Rational = serde_json::from_value(pair[0].clone()).map_err(|e| bad(&e.to_string()))?;
            let e: Vec<u32> = serde_json::from_value(pair[1].clone()).map_err(|e| bad(&e.to_string()))?;
            terms.push((c, e));
        }
        Poly::from_terms(vars, terms)
    }
}

/// Recursive primitive-PRS gcd over the variables `v..n`; inputs must not involve
/// variables below `v`.
fn gcd_from(a: &Poly, b: &Poly, v: usize) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.vars.clone());
    }
    let n = a.nvars();
    let v = (v..n).find(|&i| a.involves(i) || b.involves(i)).unwrap_or(n);
    if v == n {
        return Poly::one(a.vars.clone());
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd_from(&ca, &cb, v + 1);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if q.degree_in(v).unwrap_or(0) == 0 {
            break Poly::one(a.vars.clone());
        }
        let r = p.pseudo_rem(&q, v);
        if r.is_zero() {
            break q;
        }
        let cr = r.content_in(v);
        p = q;
        q = r.div_exact(&cr).expect("content divides");
    };
    (&c * &g).monic()
}

impl std::ops::Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl std::ops::Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut out = Poly::zero(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Rational::from(-1))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], e) })
                .collect();
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", a, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
