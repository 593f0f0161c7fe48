//! Buchberger's algorithm for submodules of free modules over `Q[x_1..x_n]`,
//! with membership tests, syzygies and graded minimal free resolutions.
//!
//! Ideals are rank-one modules. Module elements are plain `Vec<Poly>` tuples.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{domain, structural, Error, Result};
use crate::poly::{Monomial, Poly};
use crate::rational::Rational;

pub const DEFAULT_DEGREE_CAP: u32 = 30;

static DEGREE_CAP: AtomicU32 = AtomicU32::new(DEFAULT_DEGREE_CAP);

/// Process-wide cap on the total degree of any basis element.
pub fn degree_cap() -> u32 {
    DEGREE_CAP.load(AtomicOrdering::Relaxed)
}

pub fn set_degree_cap(cap: u32) {
    DEGREE_CAP.store(cap, AtomicOrdering::Relaxed);
}

/// Module monomial orders; both extend graded-lex on the ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ModuleOrder {
    /// Compare monomials first, then prefer the lower position.
    #[default]
    TermOverPosition,
    /// Lower position dominates, then monomials. Used for elimination.
    PositionOverTerm,
}

/// Leading term of a module element: position, monomial, coefficient.
#[derive(Clone, Debug)]
struct Lead {
    pos: usize,
    mon: Monomial,
    coeff: Rational,
}

fn cmp_pos_mon(order: ModuleOrder, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    match order {
        ModuleOrder::TermOverPosition => a.1.cmp(b.1).then_with(|| b.0.cmp(&a.0)),
        ModuleOrder::PositionOverTerm => b.0.cmp(&a.0).then_with(|| a.1.cmp(b.1)),
    }
}

fn lead(v: &[Poly], order: ModuleOrder) -> Option<Lead> {
    let mut best: Option<(usize, &Monomial, &Rational)> = None;
    for (i, p) in v.iter().enumerate() {
        if let Some((m, c)) = p.leading_term() {
            let better = match best {
                None => true,
                Some((bi, bm, _)) => cmp_pos_mon(order, (i, m), (bi, bm)) == Ordering::Greater,
            };
            if better {
                best = Some((i, m, c));
            }
            if order == ModuleOrder::PositionOverTerm {
                break;
            }
        }
    }
    best.map(|(pos, m, c)| Lead { pos, mon: m.clone(), coeff: c.clone() })
}

fn is_zero_vec(v: &[Poly]) -> bool {
    v.iter().all(Poly::is_zero)
}

fn vec_degree(v: &[Poly]) -> u32 {
    v.iter().filter_map(Poly::degree).max().unwrap_or(0)
}

fn vec_mul_term(v: &[Poly], m: &Monomial, c: &Rational) -> Vec<Poly> {
    v.iter().map(|p| p.mul_term(m, c)).collect()
}

fn vec_sub(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_monic(v: &[Poly], order: ModuleOrder) -> Vec<Poly> {
    match lead(v, order) {
        Some(l) => {
            let inv = l.coeff.recip();
            v.iter().map(|p| p.scale(&inv)).collect()
        }
        None => v.to_vec(),
    }
}

/// Finitely generated submodule of `R^ambient_rank`, `R = Q[vars]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyModule {
    vars: Arc<[String]>,
    ambient_rank: usize,
    generators: Vec<Vec<Poly>>,
    grading: Option<Vec<i64>>,
}

impl PolyModule {
    /// Zero generators are dropped; every tuple must have length `ambient_rank`.
    pub fn new(vars: Arc<[String]>, ambient_rank: usize, generators: Vec<Vec<Poly>>) -> Result<Self> {
        if ambient_rank == 0 {
            return Err(structural("ambient rank must be positive"));
        }
        for g in &generators {
            if g.len() != ambient_rank {
                return Err(structural(format!("generator of length {} in ambient rank {}", g.len(), ambient_rank)));
            }
            if g.iter().any(|p| p.vars() != &vars) {
                return Err(structural("generator over a different variable list"));
            }
        }
        let generators = generators.into_iter().filter(|g| !is_zero_vec(g)).collect();
        Ok(PolyModule { vars, ambient_rank, generators, grading: None })
    }

    pub fn ideal(gens: Vec<Poly>) -> Result<Self> {
        let vars = gens.first().map(|p| p.vars().clone()).ok_or_else(|| structural("ideal needs a generator"))?;
        PolyModule::new(vars, 1, gens.into_iter().map(|g| vec![g]).collect())
    }

    /// The free module `R^rank` with its standard basis.
    pub fn free(vars: Arc<[String]>, rank: usize) -> Result<Self> {
        let gens = (0..rank)
            .map(|i| (0..rank).map(|j| if i == j { Poly::one(vars.clone()) } else { Poly::zero(vars.clone()) }).collect())
            .collect();
        PolyModule::new(vars, rank, gens)
    }

    pub fn with_grading(mut self, shifts: Vec<i64>) -> Result<Self> {
        if shifts.len() != self.ambient_rank {
            return Err(structural("grading shift vector must have one entry per coordinate"));
        }
        self.grading = Some(shifts);
        Ok(self)
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &[Vec<Poly>] {
        &self.generators
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Multiply every generator by a polynomial.
    pub fn scaled_by(&self, p: &Poly) -> PolyModule {
        let generators = self.generators.iter().map(|g| g.iter().map(|x| x * p).collect()).collect();
        PolyModule::new(self.vars.clone(), self.ambient_rank, generators).expect("same shape")
    }

    fn shifts(&self) -> Vec<i64> {
        self.grading.clone().unwrap_or_else(|| vec![0; self.ambient_rank])
    }

    /// Degree of a homogeneous element under the module grading, `None` if not homogeneous.
    pub fn homogeneous_degree(&self, v: &[Poly]) -> Option<i64> {
        homogeneous_degree(v, &self.shifts())
    }

    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "vars": self.vars.to_vec(),
            "ambient_rank": self.ambient_rank,
            "generators": self.generators.iter().map(|g| g.iter().map(Poly::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        });
        if let Some(g) = &self.grading {
            obj["grading"] = json!(g);
        }
        obj
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse { position: 0, message: m.to_string() };
        let vars: Vec<String> = serde_json::from_value(v.get("vars").cloned().ok_or_else(|| bad("module needs \"vars\""))?)
            .map_err(|e| bad(&e.to_string()))?;
        let vars = Poly::make_vars(&vars);
        let rank = v.get("ambient_rank").and_then(Value::as_u64).ok_or_else(|| bad("module needs \"ambient_rank\""))? as usize;
        let gens = v.get("generators").and_then(Value::as_array).ok_or_else(|| bad("module needs \"generators\""))?;
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            let comps = g.as_array().ok_or_else(|| bad("generator must be a list of polynomials"))?;
            out.push(comps.iter().map(|c| Poly::from_json(vars.clone(), c)).collect::<Result<Vec<_>>>()?);
        }
        let mut m = PolyModule::new(vars, rank, out)?;
        if let Some(g) = v.get("grading") {
            let shifts: Vec<i64> = serde_json::from_value(g.clone()).map_err(|e| bad(&e.to_string()))?;
            m = m.with_grading(shifts)?;
        }
        Ok(m)
    }
}

pub fn homogeneous_degree(v: &[Poly], shifts: &[i64]) -> Option<i64> {
    let mut deg = None;
    for (p, s) in v.iter().zip(shifts) {
        for (m, _) in p.terms() {
            let d = m.degree() as i64 + s;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
    }
    deg
}

/// Reduced Groebner basis of a submodule.
#[derive(Clone, Debug)]
pub struct GrobnerBasis {
    vars: Arc<[String]>,
    rank: usize,
    order: ModuleOrder,
    elements: Vec<Vec<Poly>>,
    leads: Vec<Lead>,
}

impl GrobnerBasis {
    pub fn elements(&self) -> &[Vec<Poly>] {
        &self.elements
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    /// Fully reduced normal form.
    pub fn reduce(&self, v: &[Poly]) -> Vec<Poly> {
        normal_form(v, &self.elements, &self.leads, self.order)
    }

    pub fn contains(&self, v: &[Poly]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Check that every S-pair reduces to zero against the basis.
    pub fn verify(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                if let Some(s) = s_vector(&self.elements[i], &self.leads[i], &self.elements[j], &self.leads[j]) {
                    if !self.contains(&s) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn normal_form(v: &[Poly], basis: &[Vec<Poly>], leads: &[Lead], order: ModuleOrder) -> Vec<Poly> {
    let vars = match v.first() {
        Some(p) => p.vars().clone(),
        None => return Vec::new(),
    };
    let mut p = v.to_vec();
    let mut rem = vec![Poly::zero(vars.clone()); v.len()];
    while let Some(lt) = lead(&p, order) {
        let divisor = leads.iter().position(|l| l.pos == lt.pos && l.mon.divides(&lt.mon));
        match divisor {
            Some(k) => {
                let m = lt.mon.div(&leads[k].mon);
                let c = &lt.coeff / &leads[k].coeff;
                p = vec_sub(&p, &vec_mul_term(&basis[k], &m, &c));
            }
            None => {
                let single = Poly::monomial(vars.clone(), lt.mon.clone(), lt.coeff.clone());
                rem[lt.pos] = &rem[lt.pos] + &single;
                p[lt.pos] = &p[lt.pos] - &single;
            }
        }
    }
    rem
}

fn s_vector(a: &[Poly], la: &Lead, b: &[Poly], lb: &Lead) -> Option<Vec<Poly>> {
    if la.pos != lb.pos {
        return None;
    }
    let l = la.mon.lcm(&lb.mon);
    let ta = vec_mul_term(a, &l.div(&la.mon), &la.coeff.recip());
    let tb = vec_mul_term(b, &l.div(&lb.mon), &lb.coeff.recip());
    Some(vec_sub(&ta, &tb))
}

/// Groebner basis with the process-wide degree cap.
pub fn buchberger(m: &PolyModule, order: ModuleOrder) -> Result<GrobnerBasis> {
    buchberger_with_cap(m, order, degree_cap())
}

pub fn buchberger_with_cap(m: &PolyModule, order: ModuleOrder, cap: u32) -> Result<GrobnerBasis> {
    let rank = m.ambient_rank;
    let mut basis: Vec<Vec<Poly>> = Vec::new();
    let mut leads: Vec<Lead> = Vec::new();
    // pending pairs (i, j) with i < j
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push = |v: Vec<Poly>, basis: &mut Vec<Vec<Poly>>, leads: &mut Vec<Lead>, pairs: &mut BTreeSet<(usize, usize)>| -> Result<()> {
        let deg = vec_degree(&v);
        if deg > cap {
            return Err(Error::CapExceeded { cap, degree: deg });
        }
        let v = vec_monic(&v, order);
        let l = lead(&v, order).expect("nonzero");
        let j = basis.len();
        for (i, li) in leads.iter().enumerate() {
            if li.pos == l.pos {
                pairs.insert((i, j));
            }
        }
        basis.push(v);
        leads.push(l);
        Ok(())
    };

    for g in &m.generators {
        let r = normal_form(g, &basis, &leads, order);
        if !is_zero_vec(&r) {
            push(r, &mut basis, &mut leads, &mut pairs)?;
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first, ties by lcm exponents then indices
        let &(i, j) = pairs
            .iter()
            .min_by(|a, b| {
                let la = leads[a.0].mon.lcm(&leads[a.1].mon);
                let lb = leads[b.0].mon.lcm(&leads[b.1].mon);
                la.cmp(&lb).then_with(|| a.cmp(b))
            })
            .expect("nonempty");
        pairs.remove(&(i, j));
        let (li, lj) = (&leads[i], &leads[j]);
        if rank == 1 && li.mon.is_coprime(&lj.mon) {
            continue;
        }
        let lcm = li.mon.lcm(&lj.mon);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].pos == li.pos
                && leads[k].mon.divides(&lcm)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_vector(&basis[i], li, &basis[j], lj).expect("same position");
        let r = normal_form(&s, &basis, &leads, order);
        if !is_zero_vec(&r) {
            push(r, &mut basis, &mut leads, &mut pairs)?;
        }
    }

    // minimize then inter-reduce
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len()).any(|k| {
            k != i && leads[k].pos == leads[i].pos && leads[k].mon.divides(&leads[i].mon) && (leads[k].mon != leads[i].mon || k < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let min_basis: Vec<Vec<Poly>> = keep.iter().map(|&i| basis[i].clone()).collect();
    let min_leads: Vec<Lead> = keep.iter().map(|&i| leads[i].clone()).collect();
    let mut elements = Vec::with_capacity(min_basis.len());
    for (i, g) in min_basis.iter().enumerate() {
        let others: Vec<Vec<Poly>> = min_basis.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| x.clone()).collect();
        let other_leads: Vec<Lead> = min_leads.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| x.clone()).collect();
        let tail = normal_form(g, &others, &other_leads, order);
        elements.push(vec_monic(&tail, order));
    }
    // deterministic output: sort by leading term descending
    let mut with_leads: Vec<(Lead, Vec<Poly>)> = elements.into_iter().map(|e| (lead(&e, order).expect("nonzero"), e)).collect();
    with_leads.sort_by(|a, b| cmp_pos_mon(order, (b.0.pos, &b.0.mon), (a.0.pos, &a.0.mon)));
    let (leads, elements): (Vec<Lead>, Vec<Vec<Poly>>) = with_leads.into_iter().unzip();
    Ok(GrobnerBasis { vars: m.vars.clone(), rank, order, elements, leads })
}

fn check_rank(v: &[Poly], m: &PolyModule) -> Result<()> {
    if v.len() != m.ambient_rank {
        return Err(structural(format!("element of length {} against a module of ambient rank {}", v.len(), m.ambient_rank)));
    }
    if v.iter().any(|p| p.vars() != &m.vars) {
        return Err(structural("element over a different variable list"));
    }
    Ok(())
}

/// True iff `v` lies in the submodule `m`.
pub fn membership(v: &[Poly], m: &PolyModule) -> Result<bool> {
    check_rank(v, m)?;
    if is_zero_vec(v) {
        return Ok(true);
    }
    Ok(buchberger(m, ModuleOrder::default())?.contains(v))
}

/// Ideal-membership shorthand.
pub fn ideal_contains(p: &Poly, ideal: &PolyModule) -> Result<bool> {
    membership(std::slice::from_ref(p), ideal)
}

/// Relations among `gens` (zero entries allowed), computed by eliminating the
/// first `rank` coordinates of the graph module `{(g_i, e_i)}`.
pub fn syzygies_of(vars: &Arc<[String]>, rank: usize, gens: &[Vec<Poly>]) -> Result<Vec<Vec<Poly>>> {
    let m = gens.len();
    let zero = Poly::zero(vars.clone());
    let one = Poly::one(vars.clone());
    let graph: Vec<Vec<Poly>> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut v = g.clone();
            v.extend((0..m).map(|k| if k == i { one.clone() } else { zero.clone() }));
            v
        })
        .collect();
    let module = PolyModule::new(vars.clone(), rank + m, graph)?;
    let gb = buchberger(&module, ModuleOrder::PositionOverTerm)?;
    let out = gb
        .elements()
        .iter()
        .filter(|e| e[..rank].iter().all(Poly::is_zero))
        .map(|e| e[rank..].to_vec())
        .collect();
    Ok(out)
}

/// Module of relations among the generators of `m`.
pub fn syzygies(m: &PolyModule) -> Result<PolyModule> {
    if m.generators.is_empty() {
        return Err(domain("syzygies of a module without generators"));
    }
    let rel = syzygies_of(&m.vars, m.ambient_rank, &m.generators)?;
    let mut out = PolyModule::new(m.vars.clone(), m.generators.len(), rel)?;
    if m.grading.is_some() || m.generators.iter().all(|g| m.homogeneous_degree(g).is_some()) {
        let shifts: Vec<i64> = m.generators.iter().map(|g| m.homogeneous_degree(g).unwrap_or(0)).collect();
        out = out.with_grading(shifts)?;
    }
    Ok(out)
}

/// True iff the two submodules coincide.
pub fn module_equal(a: &PolyModule, b: &PolyModule) -> Result<bool> {
    if a.ambient_rank != b.ambient_rank {
        return Err(structural(format!("ambient ranks differ: {} vs {}", a.ambient_rank, b.ambient_rank)));
    }
    if a.vars != b.vars {
        return Err(structural("modules over different variable lists"));
    }
    Ok(module_contains(a, b)? && module_contains(b, a)?)
}

/// True iff every generator of `inner` lies in `outer`.
pub fn module_contains(outer: &PolyModule, inner: &PolyModule) -> Result<bool> {
    if inner.generators.is_empty() {
        return Ok(true);
    }
    let gb = buchberger(outer, ModuleOrder::default())?;
    Ok(inner.generators.iter().all(|g| gb.contains(g)))
}

/// Minimal homogeneous generating set of a graded module, chosen greedily by
/// degree (ties keep input order).
pub fn minimal_generators(m: &PolyModule) -> Result<Vec<Vec<Poly>>> {
    let shifts = m.shifts();
    let mut gens: Vec<(i64, usize, &Vec<Poly>)> = Vec::with_capacity(m.generators.len());
    for (i, g) in m.generators.iter().enumerate() {
        let d = homogeneous_degree(g, &shifts).ok_or_else(|| domain(format!("generator {i} is not homogeneous")))?;
        gens.push((d, i, g));
    }
    gens.sort_by_key(|(d, i, _)| (*d, *i));
    let mut kept: Vec<Vec<Poly>> = Vec::new();
    let mut gb: Option<GrobnerBasis> = None;
    for (_, _, g) in gens {
        let inside = gb.as_ref().is_some_and(|b| b.contains(g));
        if !inside {
            kept.push(g.clone());
            let sub = PolyModule::new(m.vars.clone(), m.ambient_rank, kept.clone())?;
            gb = Some(buchberger(&sub, ModuleOrder::default())?);
        }
    }
    Ok(kept)
}

/// Betti numbers of a graded minimal free resolution, truncated at `max_length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    /// Total Betti numbers `b_0, b_1, ...`.
    pub betti: Vec<usize>,
    /// Degrees of the minimal generators at each step.
    pub graded: Vec<Vec<i64>>,
    /// Projective dimension, or `None` when it exceeds `max_length`.
    pub proj_dim: Option<usize>,
}

pub fn graded_minimal_resolution(m: &PolyModule, max_length: usize) -> Result<Resolution> {
    let mut betti = Vec::new();
    let mut graded = Vec::new();
    let mut current = PolyModule::new(m.vars.clone(), m.ambient_rank, minimal_generators(m)?)?;
    if let Some(g) = &m.grading {
        current = current.with_grading(g.clone())?;
    }
    if current.is_zero() {
        return Ok(Resolution { betti: vec![0], graded: vec![Vec::new()], proj_dim: Some(0) });
    }
    let degs = |mm: &PolyModule| mm.generators.iter().map(|g| mm.homogeneous_degree(g).expect("homogeneous")).collect::<Vec<_>>();
    betti.push(current.generators.len());
    graded.push(degs(&current));
    for step in 1..=max_length + 1 {
        let syz = syzygies(&current)?;
        if syz.is_zero() {
            return Ok(Resolution { betti, graded, proj_dim: Some(step - 1) });
        }
        if step > max_length {
            break;
        }
        let shifts = syz.shifts();
        let mins = minimal_generators(&syz)?;
        current = PolyModule::new(m.vars.clone(), syz.ambient_rank, mins)?.with_grading(shifts)?;
        betti.push(current.generators.len());
        graded.push(degs(&current));
    }
    Ok(Resolution { betti, graded, proj_dim: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Arc<[String]> {
        Poly::make_vars(&["x", "y", "z"])
    }

    fn p(s: &str) -> Poly {
        Poly::parse_with_vars(s, &["x", "y", "z"]).unwrap()
    }

    fn ideal(gs: &[&str]) -> PolyModule {
        PolyModule::ideal(gs.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn monomial_and_principal_bases() {
        let gb = buchberger(&ideal(&["x", "y"]), ModuleOrder::default()).unwrap();
        assert_eq!(gb.elements().len(), 2);
        assert!(gb.verify());
        let gb = buchberger(&ideal(&["x*y"]), ModuleOrder::default()).unwrap();
        assert_eq!(gb.elements(), &[vec![p("x*y")]]);
    }

    #[test]
    fn x_fourth_membership() {
        // x^4 = (x^2 - y)(x^2 + y) + y^2
        let i = ideal(&["x^2 - y", "y^2"]);
        let gb = buchberger(&i, ModuleOrder::default()).unwrap();
        assert!(gb.verify());
        assert!(gb.contains(&[p("x^4")]));
        assert!(!gb.contains(&[p("x^3")]));
    }

    #[test]
    fn membership_examples() {
        assert!(membership(&[p("x^2 + x*y")], &ideal(&["x"])).unwrap());
        assert!(!membership(&[p("y")], &ideal(&["x"])).unwrap());
        // 2xy(by - ax) with a = y, b = x is zero, hence in (x^2 y^2)
        let a = p("y");
        let b = p("x");
        let cond = &p("2*x*y") * &(&(&b * &p("y")) - &(&a * &p("x")));
        assert!(membership(&[cond], &ideal(&["x^2*y^2"])).unwrap());
        assert!(matches!(membership(&[p("x"), p("y")], &ideal(&["x"])), Err(Error::Structural(_))));
    }

    #[test]
    fn syzygy_examples() {
        let koszul = syzygies(&ideal(&["x", "y"])).unwrap();
        let expected = PolyModule::new(vars(), 2, vec![vec![p("y"), p("-x")]]).unwrap();
        assert!(module_equal(&koszul, &expected).unwrap());

        let twin = syzygies(&ideal(&["x", "x"])).unwrap();
        let expected = PolyModule::new(vars(), 2, vec![vec![p("1"), p("-1")]]).unwrap();
        assert!(module_equal(&twin, &expected).unwrap());

        let s = syzygies(&ideal(&["y", "x", "x*y"])).unwrap();
        assert!(membership(&[p("x"), p("0"), p("-1")], &s).unwrap());
        assert!(membership(&[p("0"), p("y"), p("-1")], &s).unwrap());
        for r in s.generators() {
            let total = &(&(&r[0] * &p("y")) + &(&r[1] * &p("x"))) + &(&r[2] * &p("x*y"));
            assert!(total.is_zero());
        }
    }

    #[test]
    fn module_equality_examples() {
        assert!(module_equal(&ideal(&["x", "y"]), &ideal(&["y", "x + y"])).unwrap());
        assert!(!module_equal(&ideal(&["x"]), &ideal(&["x^2"])).unwrap());
        let a = PolyModule::new(vars(), 2, vec![vec![p("y"), p("0")], vec![p("0"), p("x")]]).unwrap();
        let b = PolyModule::new(vars(), 2, vec![vec![p("0"), p("x")], vec![p("y"), p("0")]]).unwrap();
        assert!(module_equal(&a, &b).unwrap());
        assert!(matches!(module_equal(&a, &ideal(&["x"])), Err(Error::Structural(_))));
    }

    #[test]
    fn koszul_resolutions() {
        let r = graded_minimal_resolution(&ideal(&["x", "y"]), 5).unwrap();
        assert_eq!(r.betti, vec![2, 1]);
        assert_eq!(r.proj_dim, Some(1));
        let r = graded_minimal_resolution(&ideal(&["x", "y", "z"]), 5).unwrap();
        assert_eq!(r.betti, vec![3, 3, 1]);
        assert_eq!(r.proj_dim, Some(2));
        assert_eq!(r.graded, vec![vec![1, 1, 1], vec![2, 2, 2], vec![3]]);
        let free = PolyModule::free(vars(), 2).unwrap();
        let r = graded_minimal_resolution(&free, 5).unwrap();
        assert_eq!(r.betti, vec![2]);
        assert_eq!(r.proj_dim, Some(0));
    }

    #[test]
    fn resolution_truncates() {
        let r = graded_minimal_resolution(&ideal(&["x", "y", "z"]), 1).unwrap();
        assert_eq!(r.betti, vec![3, 3]);
        assert_eq!(r.proj_dim, None);
    }

    #[test]
    fn non_homogeneous_rejected() {
        assert!(matches!(graded_minimal_resolution(&ideal(&["x + y^2"]), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn degree_cap_is_enforced() {
        let r = buchberger_with_cap(&ideal(&["x^3 - y", "x*y^2 - z"]), ModuleOrder::default(), 2);
        assert!(matches!(r, Err(Error::CapExceeded { cap: 2, .. })));
    }

    #[test]
    fn json_round_trip() {
        let a = PolyModule::new(vars(), 2, vec![vec![p("y"), p("0")], vec![p("0"), p("x")]]).unwrap();
        let back = PolyModule::from_json(&a.to_json()).unwrap();
        assert_eq!(a, back);
    }
}
