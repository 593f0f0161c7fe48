//! Logarithmic derivations and logarithmic differential forms of a possibly
//! non-reduced divisor `f = 0`, computed through syzygies.
//!
//! A logarithmic `k`-form `eta` is stored by its numerator `omega = f * eta`, a
//! tuple indexed by the `k`-subsets of the variables in lexicographic order.
//! `omega` is a numerator iff `df ∧ omega ∈ f * Omega^{k+1}`.

use std::fmt;
use std::sync::Arc;

use crate::arrangement::{is_generic, k_subsets, Arrangement};
use crate::error::{domain, structural, Error, Result};
use crate::groebner::{buchberger, graded_minimal_resolution, minimal_generators, module_contains, module_equal, syzygies_of, ModuleOrder, PolyModule};
use crate::linalg::QMatrix;
use crate::poly::Poly;
use crate::rational::Rational;

/// `δ = Σ coeffs[i] ∂_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub coeffs: Vec<Poly>,
}

impl Derivation {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        Derivation { coeffs }
    }

    pub fn euler(vars: &Arc<[String]>) -> Self {
        Derivation { coeffs: (0..vars.len()).map(|i| Poly::var(vars.clone(), i)).collect() }
    }

    /// `δ • g`.
    pub fn apply(&self, g: &Poly) -> Result<Poly> {
        if self.coeffs.len() != g.nvars() {
            return Err(structural("derivation and polynomial live in different rings"));
        }
        let mut out = Poly::zero(g.vars().clone());
        for (i, a) in self.coeffs.iter().enumerate() {
            out = &out + &(a * &g.partial(i)?);
        }
        Ok(out)
    }
}

fn wrap(p: &Poly) -> String {
    if p.num_terms() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| {
                let v = &a.vars()[i];
                if a.is_one() {
                    format!("d{v}")
                } else {
                    format!("{}*d{v}", wrap(a))
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `ψ_F(δ) = δ - Σ s_k (δ • f_k) / f_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorElement {
    pub derivation: Derivation,
    pub s_linear: Vec<Poly>,
}

impl fmt::Display for AnnihilatorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.derivation)?;
        let r = self.s_linear.len();
        for (k, q) in self.s_linear.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let s = if r == 1 { "s".to_string() } else { format!("s{}", k + 1) };
            if q.is_one() {
                write!(f, " - {s}")?;
            } else {
                write!(f, " - {s}*{}", wrap(q))?;
            }
        }
        Ok(())
    }
}

/// Numerator module of `Omega^k(log f)`, inside the free module of rank `C(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogFormNumerators {
    pub k: usize,
    pub module: PolyModule,
}

fn require_divisor(f: &Poly) -> Result<()> {
    if f.is_zero() {
        return Err(domain("the zero polynomial does not define a divisor"));
    }
    if f.is_constant() {
        return Err(domain("a constant polynomial defines the empty divisor"));
    }
    Ok(())
}

/// Prefer a minimal generating set whenever the module is graded.
fn tidy(vars: &Arc<[String]>, rank: usize, gens: Vec<Vec<Poly>>) -> Result<PolyModule> {
    let m = PolyModule::new(vars.clone(), rank, gens)?;
    if m.generators().iter().all(|g| m.homogeneous_degree(g).is_some()) {
        PolyModule::new(vars.clone(), rank, minimal_generators(&m)?)
    } else {
        Ok(m)
    }
}

/// `Der(-log f) = {δ : δ • f ∈ (f)}`, from syzygies of `(∂_1 f, ..., ∂_n f, f)`.
pub fn log_derivations(f: &Poly) -> Result<PolyModule> {
    require_divisor(f)?;
    let n = f.nvars();
    let mut gens: Vec<Vec<Poly>> = f.gradient().into_iter().map(|p| vec![p]).collect();
    gens.push(vec![f.clone()]);
    let syz = syzygies_of(f.vars(), 1, &gens)?;
    let projected = syz.into_iter().map(|mut s| {
        s.truncate(n);
        s
    });
    tidy(f.vars(), n, projected.collect())
}

pub fn is_log_derivation(f: &Poly, delta: &[Poly]) -> Result<bool> {
    Ok(f.divides(&Derivation::new(delta.to_vec()).apply(f)?))
}

/// `ψ_F(δ)` for each generator of `Der(-log prod F)`.
pub fn annihilator_generators(factors: &[Poly]) -> Result<Vec<AnnihilatorElement>> {
    let first = factors.first().ok_or_else(|| domain("empty factorization"))?;
    let mut f = Poly::one(first.vars().clone());
    for fk in factors {
        f = f.checked_mul(fk)?;
    }
    log_derivations(&f)?
        .generators()
        .iter()
        .map(|g| psi(&Derivation::new(g.clone()), factors))
        .collect()
}

pub fn psi(delta: &Derivation, factors: &[Poly]) -> Result<AnnihilatorElement> {
    let s_linear = factors
        .iter()
        .enumerate()
        .map(|(k, fk)| {
            let image = delta.apply(fk)?;
            image.div_exact(fk).ok_or_else(|| domain(format!("factor {} ({fk}) does not divide {delta} applied to it", k + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AnnihilatorElement { derivation: delta.clone(), s_linear })
}

/// Determinant of a square polynomial matrix by Laplace expansion along the first row.
pub fn poly_det(m: &[Vec<Poly>], vars: &Arc<[String]>) -> Poly {
    match m.len() {
        0 => Poly::one(vars.clone()),
        1 => m[0][0].clone(),
        n => {
            let mut out = Poly::zero(vars.clone());
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect()).collect();
                let term = &m[0][j] * &poly_det(&minor, vars);
                out = if j % 2 == 0 { &out + &term } else { &out - &term };
            }
            out
        }
    }
}

/// Outcome of Saito's criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub free: bool,
    /// Minimal homogeneous generators of `Der(-log f)`.
    pub generators: Vec<Vec<Poly>>,
    pub generator_degrees: Vec<i64>,
    /// Determinant of the coefficient matrix when there are exactly `n` generators.
    pub determinant: Option<Poly>,
    /// `c` with `determinant = c * f_red`.
    pub constant: Option<Rational>,
    pub f_red: Poly,
}

pub fn is_free_saito(f: &Poly) -> Result<FreenessReport> {
    require_divisor(f)?;
    if !f.is_homogeneous() {
        return Err(domain("freeness is decided in the graded model; the input is not homogeneous"));
    }
    let n = f.nvars();
    let f_red = f.squarefree_part()?;
    let der = log_derivations(f)?;
    let gens = minimal_generators(&der)?;
    let generator_degrees = gens.iter().map(|g| der.homogeneous_degree(g).unwrap_or(0)).collect();
    let (determinant, constant) = if gens.len() == n {
        let det = poly_det(&gens, f.vars());
        let c = det.div_exact(&f_red).filter(Poly::is_constant).map(|q| q.constant_term());
        (Some(det), c.filter(|c| !c.is_zero()))
    } else {
        (None, None)
    };
    Ok(FreenessReport { free: constant.is_some(), generators: gens, generator_degrees, determinant, constant, f_red })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn subset_index(subsets: &[Vec<usize>], s: &[usize]) -> usize {
    subsets.binary_search_by(|t| t.as_slice().cmp(s)).expect("subset present")
}

/// Components of `df ∧ omega`, indexed by `(k+1)`-subsets.
pub fn df_wedge(f: &Poly, k: usize, omega: &[Poly]) -> Result<Vec<Poly>> {
    let n = f.nvars();
    let ks = k_subsets(n, k);
    if omega.len() != ks.len() {
        return Err(structural(format!("a {k}-form in {n} variables has {} components, got {}", ks.len(), omega.len())));
    }
    let grad = f.gradient();
    Ok(k_subsets(n, k + 1)
        .iter()
        .map(|t| {
            let mut acc = Poly::zero(f.vars().clone());
            for (m, &tm) in t.iter().enumerate() {
                let rest: Vec<usize> = t.iter().copied().filter(|&x| x != tm).collect();
                let term = &grad[tm] * &omega[subset_index(&ks, &rest)];
                acc = if m % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        })
        .collect())
}

/// Membership test for the numerator module, coordinate by coordinate.
pub fn is_log_form_numerator(f: &Poly, k: usize, omega: &[Poly]) -> Result<bool> {
    Ok(df_wedge(f, k, omega)?.iter().all(|c| f.divides(c)))
}

/// Numerators of `Omega^k(log f)`.
pub fn log_k_forms(f: &Poly, k: usize) -> Result<LogFormNumerators> {
    require_divisor(f)?;
    let n = f.nvars();
    if k > n {
        return Err(domain(format!("k = {k} exceeds the number of variables {n}")));
    }
    let vars = f.vars();
    let rank = binomial(n, k);
    if k == n {
        let module = PolyModule::free(vars.clone(), rank)?;
        return Ok(LogFormNumerators { k, module });
    }
    let zero = Poly::zero(vars.clone());
    let big = binomial(n, k + 1);
    let mut gens: Vec<Vec<Poly>> = Vec::with_capacity(rank + big);
    for s in 0..rank {
        let mut e = vec![zero.clone(); rank];
        e[s] = Poly::one(vars.clone());
        gens.push(df_wedge(f, k, &e)?);
    }
    for t in 0..big {
        let mut e = vec![zero.clone(); big];
        e[t] = f.clone();
        gens.push(e);
    }
    let syz = syzygies_of(vars, big, &gens)?;
    let projected = syz.into_iter().map(|mut s| {
        s.truncate(rank);
        s
    });
    Ok(LogFormNumerators { k, module: tidy(vars, rank, projected.collect())? })
}

/// Contraction `ι_χ omega` of a `k`-form, indexed by `(k-1)`-subsets.
pub fn contract(chi: &[Poly], k: usize, omega: &[Poly]) -> Result<Vec<Poly>> {
    let n = chi.len();
    if k == 0 {
        return Err(domain("cannot contract a 0-form"));
    }
    let ks = k_subsets(n, k);
    if omega.len() != ks.len() {
        return Err(structural("form has the wrong number of components"));
    }
    let vars = chi.first().ok_or_else(|| domain("derivation in zero variables"))?.vars().clone();
    Ok(k_subsets(n, k - 1)
        .iter()
        .map(|j| {
            let mut acc = Poly::zero(vars.clone());
            for i in (0..n).filter(|i| !j.contains(i)) {
                let mut s = j.clone();
                s.push(i);
                s.sort_unstable();
                let pos = s.iter().position(|&x| x == i).expect("inserted");
                let term = &chi[i] * &omega[subset_index(&ks, &s)];
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        })
        .collect())
}

/// `N_k(f) = N_k(f_red)`: the numerator form of `Omega^k(log f) = (f_red / f) Omega^k(log f_red)`.
pub fn verify_twist_identity(f: &Poly, k: usize) -> Result<bool> {
    let f_red = f.squarefree_part()?;
    module_equal(&log_k_forms(f, k)?.module, &log_k_forms(&f_red, k)?.module)
}

/// Contraction along every generator of `Der(-log f)` maps `N_k` into `N_{k-1}`, for all `k >= 1`.
pub fn contraction_check(f: &Poly) -> Result<bool> {
    let der = log_derivations(f)?;
    let n = f.nvars();
    let mut lower = log_k_forms(f, 0)?;
    for k in 1..=n {
        let upper = log_k_forms(f, k)?;
        let gb = buchberger(&lower.module, ModuleOrder::default())?;
        for chi in der.generators() {
            for omega in upper.module.generators() {
                if !gb.contains(&contract(chi, k, omega)?) {
                    return Ok(false);
                }
            }
        }
        lower = upper;
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    /// Every pairing `Σ χ_i omega_i` lies in `(f_red)`.
    pub lands_in_f_red: bool,
    /// `det [<δ_i, omega_j> / f_red]` for minimal bases in the free case.
    pub determinant: Option<Poly>,
    pub perfect: Option<bool>,
}

impl PairingReport {
    pub fn passed(&self) -> bool {
        self.lands_in_f_red && self.perfect != Some(false)
    }
}

pub fn pairing_check(f: &Poly) -> Result<PairingReport> {
    let f_red = f.squarefree_part()?;
    let der = log_derivations(f)?;
    let forms = log_k_forms(f, 1)?;
    let pair = |chi: &[Poly], om: &[Poly]| -> Result<Poly> { Ok(contract(chi, 1, om)?.remove(0)) };
    let mut lands = true;
    for chi in der.generators() {
        for om in forms.module.generators() {
            lands &= f_red.divides(&pair(chi, om)?);
        }
    }
    let mut determinant = None;
    let mut perfect = None;
    if lands && f.is_homogeneous() && is_free_saito(f)?.free {
        let basis_d = minimal_generators(&der)?;
        let basis_w = minimal_generators(&forms.module)?;
        if basis_w.len() == basis_d.len() {
            let m = basis_d
                .iter()
                .map(|d| basis_w.iter().map(|w| Ok(pair(d, w)?.div_exact(&f_red).expect("checked divisibility"))).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let det = poly_det(&m, f.vars());
            perfect = Some(det.is_constant() && !det.is_zero());
            determinant = Some(det);
        } else {
            perfect = Some(false);
        }
    }
    Ok(PairingReport { lands_in_f_red: lands, determinant, perfect })
}

/// Comparison of the span `W` of `omega_a ∧ omega_b` (numerators of
/// `Omega^1(log f) ∧ Omega^1(log f)` over `f^2`) with `f * N_2(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorSquareReport {
    pub wedges: PolyModule,
    pub twisted_top: PolyModule,
    pub wedge_in_forms: bool,
    pub forms_in_wedge: bool,
}

impl ExteriorSquareReport {
    /// `∧^2 Omega^1(log f)` strictly contains `Omega^2(log f)`.
    pub fn strict(&self) -> bool {
        self.forms_in_wedge && !self.wedge_in_forms
    }
}

pub fn wedge(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let n = a.len();
    k_subsets(n, 2).iter().map(|s| &(&a[s[0]] * &b[s[1]]) - &(&a[s[1]] * &b[s[0]])).collect()
}

pub fn exterior_square(f: &Poly) -> Result<ExteriorSquareReport> {
    let n = f.nvars();
    if n < 2 {
        return Err(domain("the exterior square needs at least two variables"));
    }
    let vars = f.vars();
    let one = log_k_forms(f, 1)?;
    let two = log_k_forms(f, 2)?;
    let g = one.module.generators();
    let mut ws = Vec::new();
    for a in 0..g.len() {
        for b in a + 1..g.len() {
            ws.push(wedge(&g[a], &g[b]));
        }
    }
    let rank = binomial(n, 2);
    let wedges = PolyModule::new(vars.clone(), rank, ws)?;
    let twisted_top = two.module.scaled_by(f);
    Ok(ExteriorSquareReport {
        wedge_in_forms: module_contains(&twisted_top, &wedges)?,
        forms_in_wedge: module_contains(&wedges, &twisted_top)?,
        wedges,
        twisted_top,
    })
}

/// `δ ↦ ι_δ(dx_1 ∧ ... ∧ dx_n)` maps `Der(-log f)` onto `N_{n-1}(f)`.
pub fn top_duality_check(f: &Poly) -> Result<bool> {
    let n = f.nvars();
    let der = log_derivations(f)?;
    let forms = log_k_forms(f, n - 1)?;
    let vol = vec![Poly::one(f.vars().clone())];
    let images = der.generators().iter().map(|d| contract(d, n, &vol)).collect::<Result<Vec<_>>>()?;
    let image = PolyModule::new(f.vars().clone(), n, images)?;
    module_equal(&image, &forms.module)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixReport {
    pub twist: bool,
    pub contraction: bool,
    pub pairing: bool,
    pub exterior_square_strict: bool,
}

pub fn verify_appendix(f: &Poly) -> Result<AppendixReport> {
    let mut twist = true;
    for k in 0..=f.nvars() {
        twist &= verify_twist_identity(f, k)?;
    }
    Ok(AppendixReport {
        twist,
        contraction: contraction_check(f)?,
        pairing: pairing_check(f)?.passed(),
        exterior_square_strict: f.nvars() >= 2 && exterior_square(f)?.strict(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EulerVerdict {
    /// `E = Σ w_i x_i ∂_i` satisfies `E • f = f` and vanishes at the origin.
    Holds { weights: Vec<Rational> },
    Undecided,
    /// `f` does not vanish at the origin.
    NotApplicable,
}

/// Strong Euler-homogeneity at the origin, via homogeneity or a weight system.
pub fn strong_euler_check(f: &Poly) -> EulerVerdict {
    if f.is_zero() || !f.constant_term().is_zero() {
        return EulerVerdict::NotApplicable;
    }
    let n = f.nvars();
    if f.is_homogeneous() {
        let d = Rational::from(f.degree().expect("nonzero") as i64);
        return EulerVerdict::Holds { weights: vec![d.recip(); n] };
    }
    let rows: Vec<Vec<Rational>> = f.terms().map(|(m, _)| m.0.iter().map(|&e| Rational::from(e as i64)).collect()).collect();
    let ones = vec![Rational::one(); rows.len()];
    let a = QMatrix::from_rows(n, rows).expect("rectangular");
    match a.solve(&ones) {
        Ok(Some(weights)) => EulerVerdict::Holds { weights },
        _ => EulerVerdict::Undecided,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TameVerdict {
    /// Holds without computation (dimension at most three, or a generic arrangement).
    Tame { reason: String },
    /// `pd N_k <= k` for every computed `k <= max_k`.
    TameUpTo(usize),
    NotTame { k: usize },
    /// The degree cap interrupted some `k`; the computed part is reported.
    Partial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameDegree {
    pub k: usize,
    pub proj_dim: Option<usize>,
    pub ok: Option<bool>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameReport {
    pub verdict: TameVerdict,
    pub per_k: Vec<TameDegree>,
}

/// Bounded check of `pd Omega^k(log f) <= k`. Pass the arrangement when `f` is
/// its defining polynomial so that genericity can short-circuit.
pub fn tame_check(f: &Poly, max_k: usize, arrangement: Option<&Arrangement>) -> Result<TameReport> {
    require_divisor(f)?;
    let n = f.nvars();
    if n <= 3 {
        return Ok(TameReport { verdict: TameVerdict::Tame { reason: format!("every divisor in dimension {n} <= 3 is tame") }, per_k: Vec::new() });
    }
    if let Some(a) = arrangement {
        if a.reduced().polynomial().monic() != f.squarefree_part()? {
            return Err(structural("the arrangement does not define the given polynomial"));
        }
        if is_generic(&a.reduced())? {
            return Ok(TameReport { verdict: TameVerdict::Tame { reason: "generic arrangements are tame".into() }, per_k: Vec::new() });
        }
    }
    if !f.is_homogeneous() {
        return Err(domain("the resolution path needs a homogeneous polynomial"));
    }
    let mut per_k = Vec::new();
    let mut partial = false;
    let mut failed = None;
    for k in 0..=max_k.min(n) {
        let res = log_k_forms(f, k).and_then(|m| graded_minimal_resolution(&m.module, k));
        match res {
            Ok(r) => {
                let ok = r.proj_dim.is_some_and(|p| p <= k);
                if !ok && failed.is_none() {
                    failed = Some(k);
                }
                per_k.push(TameDegree { k, proj_dim: r.proj_dim, ok: Some(ok), note: None });
            }
            Err(e @ Error::CapExceeded { .. }) => {
                partial = true;
                per_k.push(TameDegree { k, proj_dim: None, ok: None, note: Some(e.to_string()) });
            }
            Err(e) => return Err(e),
        }
    }
    let verdict = match (failed, partial) {
        (Some(k), _) => TameVerdict::NotTame { k },
        (None, true) => TameVerdict::Partial,
        (None, false) => TameVerdict::TameUpTo(max_k.min(n)),
    };
    Ok(TameReport { verdict, per_k })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SaitoHolonomic {
    /// Hyperplane arrangements are Saito-holonomic.
    Holds,
    Unknown,
}

pub fn saito_holonomic(is_arrangement: bool) -> SaitoHolonomic {
    if is_arrangement {
        SaitoHolonomic::Holds
    } else {
        SaitoHolonomic::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse_with_vars(s, &["x", "y"]).unwrap()
    }

    fn p3(s: &str) -> Poly {
        Poly::parse_with_vars(s, &["x", "y", "z"]).unwrap()
    }

    fn module(rank: usize, gens: &[&[&str]]) -> PolyModule {
        let vars = Poly::make_vars(&["x", "y"]);
        PolyModule::new(vars, rank, gens.iter().map(|g| g.iter().map(|s| p(s)).collect()).collect()).unwrap()
    }

    #[test]
    fn derivations_of_normal_crossing() {
        let der = log_derivations(&p("x*y")).unwrap();
        assert!(module_equal(&der, &module(2, &[&["x", "0"], &["0", "y"]])).unwrap());
        let sq = log_derivations(&p("x^2*y^2")).unwrap();
        assert!(module_equal(&der, &sq).unwrap());
        for g in der.generators() {
            assert!(is_log_derivation(&p("x*y"), g).unwrap());
        }
        assert!(matches!(log_derivations(&p("3")), Err(Error::Domain(_))));
    }

    #[test]
    fn euler_is_logarithmic() {
        for s in ["x*y*(x+y)", "x^3 - y^2*x", "x*y*z*(x+y)"] {
            let f = Poly::parse(s).unwrap();
            let e = Derivation::euler(f.vars());
            let der = log_derivations(&f).unwrap();
            assert!(crate::groebner::membership(&e.coeffs, &der).unwrap());
        }
    }

    #[test]
    fn annihilator_examples() {
        let x = p("x");
        let y = p("y");
        let ann = annihilator_generators(&[x.clone(), y.clone()]).unwrap();
        assert_eq!(ann.len(), 2);
        for a in &ann {
            let one: Vec<usize> = a.s_linear.iter().enumerate().filter(|(_, q)| q.is_one()).map(|(i, _)| i).collect();
            assert_eq!(one.len(), 1);
        }
        let xy = annihilator_generators(&[p("x*y")]).unwrap();
        for a in &xy {
            assert!(a.s_linear[0].is_one());
        }
        let e = Derivation::euler(x.vars());
        let psi_e = psi(&e, &[x, y, p("x+y")]).unwrap();
        assert!(psi_e.s_linear.iter().all(Poly::is_one));
        assert_eq!(psi_e.to_string(), "x*dx + y*dy - s1 - s2 - s3");
        let bad = psi(&Derivation::new(vec![p("1"), p("0")]), &[p("x")]);
        assert!(matches!(bad, Err(Error::Domain(_))));
    }

    #[test]
    fn saito_examples() {
        let r = is_free_saito(&p("x*y")).unwrap();
        assert!(r.free);
        assert!(r.determinant.unwrap().is_unit_multiple_of(&p("x*y")));
        let r = is_free_saito(&p("x*y*(x+y)")).unwrap();
        assert!(r.free);
        assert_eq!(r.generator_degrees, vec![1, 2]);
        let r = is_free_saito(&p("x^2*y^2")).unwrap();
        assert!(r.free);
        assert!(r.determinant.unwrap().is_unit_multiple_of(&p("x*y")));
        assert!(is_free_saito(&p("x + y^2")).is_err());
        let generic = p3("x*y*z*(x+y+z)");
        let r = is_free_saito(&generic).unwrap();
        assert!(!r.free);
        assert!(r.generators.len() > 3);
    }

    #[test]
    fn example_forms() {
        let f = p("x^2*y^2");
        let one = log_k_forms(&f, 1).unwrap();
        assert!(module_equal(&one.module, &module(2, &[&["y", "0"], &["0", "x"]])).unwrap());
        let zero = log_k_forms(&f, 0).unwrap();
        assert!(module_equal(&zero.module, &module(1, &[&["x*y"]])).unwrap());
        let zero = log_k_forms(&p("x^3*y"), 0).unwrap();
        assert!(module_equal(&zero.module, &module(1, &[&["x*y"]])).unwrap());
        let two = log_k_forms(&f, 2).unwrap();
        assert!(module_equal(&two.module, &module(1, &[&["1"]])).unwrap());
        assert!(log_k_forms(&f, 3).is_err());
        for g in one.module.generators() {
            assert!(is_log_form_numerator(&f, 1, g).unwrap());
        }
    }

    #[test]
    fn twist_contraction_pairing() {
        for s in ["x^2*y^2", "x^3*y", "x*y", "(x*y*(x+y))^2"] {
            let f = p(s);
            for k in 0..=2 {
                assert!(verify_twist_identity(&f, k).unwrap(), "{s} k={k}");
            }
            assert!(contraction_check(&f).unwrap(), "{s}");
            let pr = pairing_check(&f).unwrap();
            assert!(pr.passed(), "{s}");
            assert_eq!(pr.perfect, Some(true));
        }
        let pr = pairing_check(&p("x^2*y^2")).unwrap();
        assert!(pr.determinant.unwrap().is_one());
    }

    #[test]
    fn exterior_square_example() {
        let r = exterior_square(&p("x^2*y^2")).unwrap();
        assert!(r.strict());
        let reduced = exterior_square(&p("x*y")).unwrap();
        assert!(reduced.wedge_in_forms && !reduced.strict());
        let rep = verify_appendix(&p("x^2*y^2")).unwrap();
        assert_eq!(rep, AppendixReport { twist: true, contraction: true, pairing: true, exterior_square_strict: true });
    }

    #[test]
    fn contraction_signs() {
        let chi = vec![p3("1"), p3("0"), p3("0")];
        // ι_{∂x}(dx ∧ dy) = dy, ι_{∂x}(dy ∧ dz) = 0
        let c = contract(&chi, 2, &[p3("1"), p3("0"), p3("0")]).unwrap();
        assert_eq!(c, vec![p3("0"), p3("1"), p3("0")]);
        let chi = vec![p3("0"), p3("1"), p3("0")];
        // ι_{∂y}(dx ∧ dy) = -dx
        let c = contract(&chi, 2, &[p3("1"), p3("0"), p3("0")]).unwrap();
        assert_eq!(c, vec![p3("-1"), p3("0"), p3("0")]);
    }

    #[test]
    fn top_duality() {
        for s in ["x*y", "x^2*y^2", "x*y*(x+y)"] {
            assert!(top_duality_check(&p(s)).unwrap(), "{s}");
        }
        assert!(top_duality_check(&p3("x*y*z*(x+y)")).unwrap());
    }

    #[test]
    fn euler_verdicts() {
        assert!(matches!(strong_euler_check(&p("x*y*(x+y)")), EulerVerdict::Holds { .. }));
        let a = strong_euler_check(&p("x*y"));
        let b = strong_euler_check(&p("x^2*y^2"));
        assert!(matches!(a, EulerVerdict::Holds { .. }) && matches!(b, EulerVerdict::Holds { .. }));
        match strong_euler_check(&p("x + x^2*y")) {
            EulerVerdict::Holds { weights } => assert_eq!(weights, vec![Rational::from(1), Rational::from(-1)]),
            other => panic!("{other:?}"),
        }
        assert_eq!(strong_euler_check(&p("x + x^2 + y^3")), EulerVerdict::Undecided);
        assert_eq!(strong_euler_check(&p("1 + x")), EulerVerdict::NotApplicable);
    }

    #[test]
    fn tame_shortcuts() {
        assert!(matches!(tame_check(&p("x*y"), 2, None).unwrap().verdict, TameVerdict::Tame { .. }));
        let vars = ["x1", "x2", "x3", "x4"];
        let f = Poly::parse_with_vars("x1*x2*x3*x4*(x1+x2+x3+x4)", &vars).unwrap();
        let a = Arrangement::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 1, 1]]).unwrap();
        assert!(matches!(tame_check(&f, 4, Some(&a)).unwrap().verdict, TameVerdict::Tame { .. }));
        let nc = Poly::parse_with_vars("x1*x2*x3*x4", &vars).unwrap();
        let r = tame_check(&nc, 4, None).unwrap();
        assert_eq!(r.verdict, TameVerdict::TameUpTo(4));
        assert!(r.per_k.iter().all(|d| d.proj_dim == Some(0)));
    }

    #[test]
    fn saito_holonomic_status() {
        assert_eq!(saito_holonomic(true), SaitoHolonomic::Holds);
        assert_eq!(saito_holonomic(false), SaitoHolonomic::Unknown);
    }
}
