//! Symmetric derivations `D: Ω^(q) → S²(Ω^(q))`: extension to the
//! symmetric algebra, validation, an exact existence test, and the maps
//! `t` and `β` they induce.
//!
//! A derivation is stored by its values on the generators `δ^(q)(x^α)` and
//! extended by `D(p·g) = δ^(q)(p) ∨ g + p·D(g)`, with `D(p) = δ^(q)(p)` on
//! `S⁰ = R`.

use crate::diffmod::{jq_presentation, omega_presentation_with, DeltaBasis, JetBasis};
use crate::error::{Error, Result};
use crate::groebner::{solve_linear_with, LinearSolution};
use crate::monomial::Monomial;
use crate::presentation::{ModuleMap, Presentation};
use crate::ring::RingSpec;
use crate::{Matrix, Poly, Rational, Vector};

/// Values `D(δ^(q)(x^α)) ∈ S²(Ω^(q))`, one per generator in the default
/// [`DeltaBasis`] order, in the coordinates of
/// [`Presentation::symmetric_square`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricDerivation {
    order: u32,
    values: Vec<Vector>,
}

impl SymmetricDerivation {
    pub fn new(order: u32, values: Vec<Vector>) -> SymmetricDerivation {
        SymmetricDerivation { order, values }
    }

    /// The derivation with all values zero.
    pub fn zero(ring: &RingSpec, q: u32) -> SymmetricDerivation {
        let frame = SymmetricFrame::new(ring, q);
        let values = (0..frame.omega.ngens()).map(|_| frame.sym.zero_vector()).collect();
        SymmetricDerivation { order: q, values }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn values(&self) -> &[Vector] {
        &self.values
    }
}

/// The modules `Ω^(q)` and `S²(Ω^(q))` with the product `Ω × F → S²F`.
#[derive(Clone, Debug)]
pub struct SymmetricFrame {
    ring: RingSpec,
    order: u32,
    basis: DeltaBasis,
    omega: Presentation,
    sym: Presentation,
    pairs: Vec<Vec<usize>>,
}

impl SymmetricFrame {
    pub fn new(ring: &RingSpec, q: u32) -> SymmetricFrame {
        let basis = DeltaBasis::new(ring, q);
        let omega = omega_presentation_with(ring, &basis);
        let sym = omega.symmetric_square();
        let n = omega.ngens();
        let mut pairs = vec![vec![0; n]; n];
        let mut next = 0;
        for i in 0..n {
            for j in i..n {
                pairs[i][j] = next;
                pairs[j][i] = next;
                next += 1;
            }
        }
        SymmetricFrame {
            ring: ring.clone(),
            order: q,
            basis,
            omega,
            sym,
            pairs,
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn basis(&self) -> &DeltaBasis {
        &self.basis
    }

    pub fn omega(&self) -> &Presentation {
        &self.omega
    }

    pub fn sym(&self) -> &Presentation {
        &self.sym
    }

    /// Index of `s(g_i, g_j)` in `S²`.
    pub fn pair(&self, i: usize, j: usize) -> usize {
        self.pairs[i][j]
    }

    /// `δ^(q)(p)` in `Ω^(q)` coordinates.
    pub fn delta(&self, p: &Poly) -> Vector {
        self.basis.expand(&self.ring, p)
    }

    /// `a ∨ g_j` for `a` in `Ω^(q)` coordinates.
    pub fn product(&self, a: &Vector, j: usize) -> Vector {
        let mut out = self.sym.zero_vector();
        for (k, p) in a.coords().iter().enumerate() {
            if !p.is_zero() {
                let t = self.pairs[k][j];
                out.set(t, out.get(t) + p);
            }
        }
        out
    }

    /// `D(v)` for `v ∈ F = R^t` given by coordinates, reduced modulo `I`.
    pub fn extend(&self, d: &SymmetricDerivation, v: &Vector) -> Vector {
        let mut out = self.sym.zero_vector();
        for (a, p) in v.coords().iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            out = out.add(&self.product(&self.delta(p), a));
            out = out.add(&d.values[a].scale(p));
        }
        self.ring.reduce_vector(&out)
    }

    /// Elements of the relation module whose images under `D` must lie in
    /// `l_N`: `x^γ·ρ` for each relation `ρ` and `|γ| <= q` (`γ = 0` when
    /// `q = 1`). Together they force well-definedness, because
    /// `p ↦ D(p·ρ)` is a differential operator of order `q`.
    pub fn constraints(&self) -> Vec<Constraint> {
        let max = if self.order == 1 { 0 } else { self.order };
        let one = Rational::from_integer(1.into());
        let mut out = Vec::new();
        for (k, rho) in self.omega.relations().iter().enumerate() {
            for gamma in Monomial::all_up_to_degree(self.ring.nvars(), 0, max) {
                let element = Vector::new(rho.coords().iter().map(|p| p.mul_term(&gamma, &one)).collect());
                out.push(Constraint {
                    relation: k,
                    multiplier: gamma,
                    element,
                });
            }
        }
        out
    }
}

/// A multiple `x^γ·ρ_k` of a relation of `Ω^(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub relation: usize,
    pub multiplier: Monomial,
    pub element: Vector,
}

/// Why no symmetric derivation exists: the constraint `x^γ·ρ_k` has no
/// solution, and `residue` is the obstruction left after reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub relation: usize,
    pub multiplier: String,
    pub residue: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymDerivVerdict {
    Found(SymmetricDerivation),
    NotFound(Obstruction),
}

impl SymDerivVerdict {
    pub fn is_found(&self) -> bool {
        matches!(self, SymDerivVerdict::Found(_))
    }
}

/// Decides whether a symmetric derivation of order `q` exists on `ring` by
/// solving the constraint system for the generator values.
pub fn symmetric_derivation_solve(ring: &RingSpec, q: u32) -> Result<SymDerivVerdict> {
    if q == 0 {
        return Err(Error::Invalid("order must be at least 1".into()));
    }
    let frame = SymmetricFrame::new(ring, q);
    let t = frame.omega.ngens();
    let n = frame.sym.ngens();
    let constraints = frame.constraints();
    if constraints.is_empty() {
        return Ok(SymDerivVerdict::Found(SymmetricDerivation::zero(ring, q)));
    }
    let c = constraints.len();
    let pr = ring.poly_ring();
    let zero = SymmetricDerivation::zero(ring, q);
    let mut a = Matrix::zeros(pr, c * n, t * n);
    let mut rhs = Vec::with_capacity(c * n);
    for (ci, con) in constraints.iter().enumerate() {
        for (alpha, p) in con.element.coords().iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for k in 0..n {
                a.set(ci * n + k, alpha * n + k, p.clone());
            }
        }
        let fixed = frame.extend(&zero, &con.element);
        rhs.extend(fixed.coords().iter().map(|p| -p));
    }
    let rhs = Vector::new(rhs);
    let mut extra = Vec::with_capacity(c * frame.sym.nrels());
    for ci in 0..c {
        for r in frame.sym.relations() {
            let mut v = Vector::zero(pr, c * n);
            for (k, p) in r.coords().iter().enumerate() {
                v.set(ci * n + k, p.clone());
            }
            extra.push(v);
        }
    }
    match solve_linear_with(&a, &extra, &rhs, ring.ideal())? {
        LinearSolution::Solution(x) => {
            let values = (0..t)
                .map(|alpha| frame.sym.reduce(&x.slice(alpha * n..(alpha + 1) * n)))
                .collect();
            let d = SymmetricDerivation::new(q, values);
            let report = validate_with(&frame, &d);
            if !report.is_valid() {
                return Err(Error::InvalidDerivation(report.messages.join("; ")));
            }
            Ok(SymDerivVerdict::Found(d))
        }
        LinearSolution::NoSolution { residue } => {
            let block = (0..c)
                .find(|&ci| !residue.slice(ci * n..(ci + 1) * n).is_zero())
                .unwrap_or(0);
            let con = &constraints[block];
            Ok(SymDerivVerdict::NotFound(Obstruction {
                relation: con.relation,
                multiplier: ring.render_monomial(&con.multiplier),
                residue: residue.slice(block * n..(block + 1) * n),
            }))
        }
    }
}

/// Outcome of [`validate_symmetric_derivation`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Values have the right count and length.
    pub structure: bool,
    /// Commutators with `q+1` multiplications vanish on the test corpus.
    pub order_condition: bool,
    /// `D` agrees with `δ^(q)` on monomials of degree `<= q+1`.
    pub restriction: bool,
    /// Relations of `Ω^(q)` (0-based) whose image is not in `l_N`.
    pub violated_relations: Vec<usize>,
    pub messages: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.structure && self.order_condition && self.restriction && self.violated_relations.is_empty()
    }
}

/// Checks that `d` is a well-defined symmetric derivation of order
/// `d.order()` on `ring`.
pub fn validate_symmetric_derivation(d: &SymmetricDerivation, ring: &RingSpec) -> ValidationReport {
    if d.order == 0 {
        return ValidationReport {
            messages: vec!["order must be at least 1".into()],
            ..Default::default()
        };
    }
    validate_with(&SymmetricFrame::new(ring, d.order), d)
}

fn validate_with(frame: &SymmetricFrame, d: &SymmetricDerivation) -> ValidationReport {
    let mut report = ValidationReport::default();
    let t = frame.omega.ngens();
    let n = frame.sym.ngens();
    if d.values.len() != t || d.values.iter().any(|v| v.rank() != n) {
        report.messages.push(format!("expected {t} values in a module of rank {n}"));
        return report;
    }
    if d.values.iter().any(|v| v.coords().iter().any(|p| p.ring() != frame.ring.poly_ring())) {
        report.messages.push("values live over a different ring".into());
        return report;
    }
    report.structure = true;

    for con in frame.constraints() {
        let image = frame.extend(d, &con.element);
        if !frame.sym.represents_zero(&image) && !report.violated_relations.contains(&con.relation) {
            report.violated_relations.push(con.relation);
            report.messages.push(format!(
                "relation {} is not preserved (multiplier {})",
                con.relation,
                frame.ring.render_monomial(&con.multiplier)
            ));
        }
    }

    report.order_condition = order_condition_holds(frame, d, &mut report.messages);

    let s = frame.ring.nvars();
    report.restriction = true;
    for m in Monomial::all_up_to_degree(s, 1, frame.order + 1) {
        let p = frame.ring.monomial(&m);
        if leibniz_scalar(frame, &p) != frame.delta(&p) {
            report.restriction = false;
            report.messages.push(format!("D differs from δ on {}", frame.ring.render_monomial(&m)));
        }
    }
    report
}

/// `D` on `S⁰`: `D(p·1) = δ^(q)(p)∨1 + p·D(1)` with `D(1) = 0`.
fn leibniz_scalar(frame: &SymmetricFrame, p: &Poly) -> Vector {
    frame.delta(p)
}

/// Inclusion-exclusion form of `[..[[D, x_{i_0}], x_{i_1}].., x_{i_q}] = 0`
/// on `x^μ` and `x^μ g_α`, `|μ| <= 1`.
fn order_condition_holds(frame: &SymmetricFrame, d: &SymmetricDerivation, messages: &mut Vec<String>) -> bool {
    let ring = &frame.ring;
    let s = ring.nvars();
    let q = frame.order;
    let one = Rational::from_integer(1.into());
    let mus = Monomial::all_up_to_degree(s, 0, 1);
    let tuples = Monomial::all_of_degree(s, q + 1);
    let t = frame.omega.ngens();
    for tuple in &tuples {
        let vars: Vec<usize> = tuple
            .exponents()
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect();
        for mu in &mus {
            // scalars: values in Ω
            let mut acc = frame.omega.zero_vector();
            for (sign, inner, outer) in subsets(ring, &vars) {
                let p = inner.mul_term(mu, &one);
                let term = leibniz_scalar(frame, &p).scale(&outer);
                acc = if sign { acc.add(&term) } else { acc.sub(&term) };
            }
            if !frame.omega.represents_zero(&ring.reduce_vector(&acc)) {
                messages.push(format!("order condition fails on {}", ring.render_monomial(mu)));
                return false;
            }
            for alpha in 0..t {
                let mut acc = frame.sym.zero_vector();
                for (sign, inner, outer) in subsets(ring, &vars) {
                    let mut v = frame.omega.zero_vector();
                    v.set(alpha, inner.mul_term(mu, &one));
                    let term = frame.extend(d, &v).scale(&outer);
                    acc = if sign { acc.add(&term) } else { acc.sub(&term) };
                }
                if !frame.sym.represents_zero(&ring.reduce_vector(&acc)) {
                    messages.push(format!(
                        "order condition fails on {}·{}",
                        ring.render_monomial(mu),
                        frame.omega.generators()[alpha]
                    ));
                    return false;
                }
            }
        }
    }
    true
}

/// For each subset `S` of the listed variables: whether the sign
/// `(-1)^{|complement|}` is positive, `Π_{S} x`, and `Π_{complement} x`.
fn subsets(ring: &RingSpec, vars: &[usize]) -> Vec<(bool, Poly, Poly)> {
    let k = vars.len();
    (0..1usize << k)
        .map(|mask| {
            let mut inner = ring.one();
            let mut outer = ring.one();
            for (b, &v) in vars.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    inner = &inner * &ring.var(v);
                } else {
                    outer = &outer * &ring.var(v);
                }
            }
            let positive = (k - mask.count_ones() as usize) % 2 == 0;
            (positive, inner, outer)
        })
        .collect()
}

fn require_valid(frame: &SymmetricFrame, d: &SymmetricDerivation) -> Result<()> {
    let report = validate_with(frame, d);
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidDerivation(report.messages.join("; ")))
    }
}

/// `t: Ω^(2) → S²(Ω^(1))` with `t∘δ^(2) = D∘δ^(1)`, for `d` of order 1.
pub fn splitting_t(d: &SymmetricDerivation, ring: &RingSpec) -> Result<ModuleMap> {
    if d.order != 1 {
        return Err(Error::InvalidDerivation("the splitting map needs an order-1 derivation".into()));
    }
    let frame = SymmetricFrame::new(ring, 1);
    require_valid(&frame, d)?;
    let b2 = DeltaBasis::new(ring, 2);
    let source = omega_presentation_with(ring, &b2);
    let cols = b2
        .monomials()
        .iter()
        .map(|m| frame.extend(d, &frame.delta(&ring.monomial(m))))
        .collect();
    ModuleMap::from_columns(source, frame.sym.clone(), cols)?.certified()
}

/// `β: J_q(Ω^(q)) → S²(Ω^(q))`, `Δ_q(x^β g) ↦ D(x^β g)`.
pub fn beta_to_sym(d: &SymmetricDerivation, ring: &RingSpec, q: u32) -> Result<ModuleMap> {
    if d.order != q {
        return Err(Error::InvalidDerivation(format!(
            "derivation has order {}, expected {q}",
            d.order
        )));
    }
    let frame = SymmetricFrame::new(ring, q);
    require_valid(&frame, d)?;
    let source = jq_presentation(&frame.omega, q);
    let jb = JetBasis::new(ring, q, frame.omega.generators());
    let t = frame.omega.ngens();
    let mut cols = Vec::with_capacity(jb.len());
    for m in jb.monomials() {
        for j in 0..t {
            let mut v = frame.omega.zero_vector();
            v.set(j, ring.monomial(m));
            cols.push(frame.extend(d, &v));
        }
    }
    ModuleMap::from_columns(source, frame.sym.clone(), cols)?.certified()
}
