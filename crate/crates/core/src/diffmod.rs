//! Presentations of the modules of higher differentials `Ω^(q)(R/k)`, the
//! jet modules `J_q(M)`, and the canonical maps between them.
//!
//! Everything is computed from the truncated shift `h(x+u)`: writing
//! `(x+u)^β = Σ_{γ≤β} C(β,γ) x^{β-γ} u^γ` gives a unitriangular change of
//! basis between the `u^γ` and the `(x+u)^β`, and the coefficients of `h`
//! in the second basis are the expansions used for `δ^(q)` and `Δ_q`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::label::GeneratorLabel;
use crate::monomial::Monomial;
use crate::presentation::{direct_sum, prune, sort_by_degree, ModuleMap, Presentation};
use crate::ring::RingSpec;
use crate::scalar::binomial;
use crate::{Poly, Rational, Vector};

/// Coefficients `r_β` with `h(x+u) = Σ_{|β|≤q} r_β (x+u)^β` modulo
/// `u`-degree `q+1`, indexed like `Monomial::all_up_to_degree(s, 0, q)`.
/// Not reduced modulo the ideal.
fn shift_coefficients(h: &Poly, monos: &[Monomial], index: &HashMap<Monomial, usize>, q: u32) -> Vec<Poly> {
    let ring = h.ring();
    let mut c = vec![Poly::zero(ring); monos.len()];
    for (beta, coeff) in h.taylor_coefficients(0, q) {
        c[index[&beta]] = coeff;
    }
    for k in (0..monos.len()).rev() {
        if c[k].is_zero() {
            continue;
        }
        let beta = &monos[k];
        let r = c[k].clone();
        for gamma in beta.divisors() {
            if &gamma == beta {
                continue;
            }
            let mut coef = Rational::from_integer(1.into());
            for (&b, &g) in beta.exponents().iter().zip(gamma.exponents()) {
                coef *= binomial::<Rational>(b, g);
            }
            let rest = gamma.quotient_of(beta).expect("gamma divides beta");
            let sub = r.mul_term(&rest, &coef);
            let g = index[&gamma];
            c[g] = &c[g] - &sub;
        }
    }
    c
}

/// Monomials `x^β`, `|β| <= q`, with their positions.
#[derive(Clone, Debug)]
struct ShiftTable {
    q: u32,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl ShiftTable {
    fn new(nvars: usize, q: u32) -> ShiftTable {
        let monos = Monomial::all_up_to_degree(nvars, 0, q);
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        ShiftTable { q, monos, index }
    }

    fn expand(&self, h: &Poly) -> Vec<Poly> {
        shift_coefficients(h, &self.monos, &self.index, self.q)
    }
}

/// The generators `δ^(q)(x^α)`, `1 <= |α| <= q`, in a fixed order.
#[derive(Clone, Debug)]
pub struct DeltaBasis {
    order: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    table: ShiftTable,
}

impl DeltaBasis {
    /// Default order: ascending total degree, then `x^2, x*y, y^2`.
    pub fn new(ring: &RingSpec, q: u32) -> DeltaBasis {
        assert!(q >= 1, "order must be at least 1");
        let monos = Monomial::all_up_to_degree(ring.nvars(), 1, q);
        Self::build(ring, q, monos)
    }

    /// A basis listed in the given order, which must be a permutation of the
    /// monomials of degree `1..=q`.
    pub fn with_monomials(ring: &RingSpec, q: u32, monomials: Vec<Monomial>) -> Result<DeltaBasis> {
        if q == 0 {
            return Err(Error::Invalid("order must be at least 1".into()));
        }
        let expected = Monomial::all_up_to_degree(ring.nvars(), 1, q);
        let mut seen = std::collections::HashSet::new();
        for m in &monomials {
            if m.nvars() != ring.nvars() || m.is_one() || m.degree() > q as u64 {
                return Err(Error::Invalid(format!(
                    "`{}` is not a monomial of degree 1..{q}",
                    ring.render_monomial(m)
                )));
            }
            if !seen.insert(m.clone()) {
                return Err(Error::Invalid(format!("`{}` listed twice", ring.render_monomial(m))));
            }
        }
        if monomials.len() != expected.len() {
            return Err(Error::Invalid(format!(
                "basis lists {} monomials, expected {}",
                monomials.len(),
                expected.len()
            )));
        }
        Ok(Self::build(ring, q, monomials))
    }

    fn build(ring: &RingSpec, q: u32, monomials: Vec<Monomial>) -> DeltaBasis {
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        DeltaBasis {
            order: q,
            monomials,
            index,
            table: ShiftTable::new(ring.nvars(), q),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn labels(&self, ring: &RingSpec) -> Vec<GeneratorLabel> {
        self.monomials
            .iter()
            .map(|m| GeneratorLabel::delta(ring, self.order, m))
            .collect()
    }

    /// Weighted degrees of the generators over a homogeneous ring.
    pub fn degrees(&self, ring: &RingSpec) -> Option<Vec<i64>> {
        ring.is_homogeneous()
            .then(|| self.monomials.iter().map(|m| ring.weighted_degree(m)).collect())
    }

    /// Coefficients of `δ^(q)(h)` in this basis, reduced modulo the ideal.
    pub fn expand(&self, ring: &RingSpec, h: &Poly) -> Vector {
        let c = self.table.expand(h);
        let mut out = vec![ring.zero(); self.len()];
        for (k, m) in self.table.monos.iter().enumerate() {
            if let Some(&i) = self.index.get(m) {
                out[i] = ring.reduce(&c[k]);
            }
        }
        Vector::new(out)
    }
}

/// `δ^(q)(h)` in the default basis.
pub fn delta_expand(h: &Poly, ring: &RingSpec, q: u32) -> Vector {
    DeltaBasis::new(ring, q).expand(ring, h)
}

/// Generators `Δ_q(x^β e_j)`, monomial-major.
#[derive(Clone, Debug)]
pub struct JetBasis {
    table: ShiftTable,
    inner: Vec<GeneratorLabel>,
}

impl JetBasis {
    pub fn new(ring: &RingSpec, q: u32, inner: &[GeneratorLabel]) -> JetBasis {
        JetBasis {
            table: ShiftTable::new(ring.nvars(), q),
            inner: inner.to_vec(),
        }
    }

    pub fn order(&self) -> u32 {
        self.table.q
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.table.monos
    }

    pub fn len(&self) -> usize {
        self.table.monos.len() * self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn position(&self, beta: &Monomial, j: usize) -> usize {
        self.table.index[beta] * self.inner.len() + j
    }

    pub fn labels(&self, ring: &RingSpec) -> Vec<GeneratorLabel> {
        let mut out = Vec::with_capacity(self.len());
        for m in &self.table.monos {
            for g in &self.inner {
                out.push(GeneratorLabel::jet(ring, self.table.q, g.clone(), m));
            }
        }
        out
    }

    pub fn degrees(&self, ring: &RingSpec, inner: &[i64]) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len());
        for m in &self.table.monos {
            for d in inner {
                out.push(ring.weighted_degree(m) + d);
            }
        }
        out
    }

    /// `Δ_q(v)` for `v = Σ v_j e_j`: each `v_j(x+u)` rewritten onto the
    /// `Δ_q(x^β e_j)`, reduced modulo the ideal.
    pub fn expand(&self, ring: &RingSpec, v: &Vector) -> Vector {
        assert_eq!(v.rank(), self.inner.len(), "vector length must match the inner module");
        let n = self.inner.len();
        let mut out = vec![ring.zero(); self.len()];
        for (j, p) in v.coords().iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (k, c) in self.table.expand(p).into_iter().enumerate() {
                if !c.is_zero() {
                    out[k * n + j] = &out[k * n + j] + &c;
                }
            }
        }
        Vector::new(out.iter().map(|p| ring.reduce(p)).collect())
    }
}

/// Candidate relation rows `δ^(q)(x^β f_i)` for `|β| <= max_beta`, ordered
/// by `|β|` with the ideal generators innermost.
pub fn omega_relation_candidates(ring: &RingSpec, basis: &DeltaBasis, max_beta: u32) -> Vec<Vector> {
    let mut out = Vec::new();
    for beta in Monomial::all_up_to_degree(ring.nvars(), 0, max_beta) {
        for f in ring.ideal() {
            let h = f.mul_term(&beta, &Rational::from_integer(1.into()));
            out.push(basis.expand(ring, &h));
        }
    }
    out
}

/// `Ω^(q)(R/k)` in the default basis.
pub fn omega_presentation(ring: &RingSpec, q: u32) -> Presentation {
    omega_presentation_with(ring, &DeltaBasis::new(ring, q))
}

/// `Ω^(q)(R/k)` with generators in the order of `basis`; relation rows are
/// the `δ^(q)(x^β f_i)`, `|β| <= q`, with redundant rows pruned.
pub fn omega_presentation_with(ring: &RingSpec, basis: &DeltaBasis) -> Presentation {
    let degrees = basis.degrees(ring);
    let mut cands = omega_relation_candidates(ring, basis, basis.order());
    sort_by_degree(&mut cands, &ring.weights(), degrees.as_deref());
    let rows = prune(ring, basis.len(), &[], cands);
    Presentation::new(ring.clone(), basis.labels(ring), degrees, rows).expect("omega presentation")
}

/// `J_q(M)`: generators `Δ_q(x^β g_j)`, relations the jet expansions of
/// `x^γ r` for `r` a relation of `M` or `f_i e_j`, `|γ| <= q`.
pub fn jq_presentation(m: &Presentation, q: u32) -> Presentation {
    let ring = m.ring();
    let jb = JetBasis::new(ring, q, m.generators());
    let n = m.ngens();
    let mut base: Vec<Vector> = m.relations().to_vec();
    for j in 0..n {
        for f in ring.ideal() {
            let mut v = m.zero_vector();
            v.set(j, f.clone());
            base.push(v);
        }
    }
    let one = Rational::from_integer(1.into());
    let mut cands = Vec::new();
    for gamma in Monomial::all_up_to_degree(ring.nvars(), 0, q) {
        for r in &base {
            let shifted = Vector::new(r.coords().iter().map(|p| p.mul_term(&gamma, &one)).collect());
            cands.push(jb.expand(ring, &shifted));
        }
    }
    let degrees = if m.is_graded() {
        Some(jb.degrees(ring, m.degrees().expect("graded")))
    } else {
        None
    };
    sort_by_degree(&mut cands, &ring.weights(), degrees.as_deref());
    let rows = prune(ring, jb.len(), &[], cands);
    Presentation::new(ring.clone(), jb.labels(ring), degrees, rows).expect("jet presentation")
}

/// The free module `R` on the generator `1`.
pub fn ring_as_module(ring: &RingSpec) -> Presentation {
    let degrees = ring.is_homogeneous().then(|| vec![0]);
    Presentation::free(ring, vec![GeneratorLabel::plain("1")], degrees)
}

/// `J_n(R)` with the map `Δ_n(x^α) ↦ (δ^(n)(x^α), x^α)` into `Ω^(n)(R) ⊕ R`.
pub fn jets_of_ring(ring: &RingSpec, n: u32) -> Result<(Presentation, ModuleMap)> {
    let r = ring_as_module(ring);
    let jets = jq_presentation(&r, n);
    let basis = DeltaBasis::new(ring, n);
    let omega = omega_presentation_with(ring, &basis);
    let target = direct_sum(&omega, &r)?;
    let t = basis.len();
    let jb = JetBasis::new(ring, n, r.generators());
    let mut cols = Vec::with_capacity(jb.len());
    for m in jb.monomials() {
        let mut v = target.zero_vector();
        if let Some(i) = basis.index_of(m) {
            v.set(i, ring.one());
        }
        v.set(t, ring.monomial(m));
        cols.push(v);
    }
    let map = ModuleMap::from_columns(jets.clone(), target, cols)?.certified()?;
    Ok((jets, map))
}

/// `θ: Ω^(2) → Ω^(1)`, `δ^(2)(h) ↦ δ^(1)(h)`.
pub fn theta_second_to_first(ring: &RingSpec) -> Result<ModuleMap> {
    let b2 = DeltaBasis::new(ring, 2);
    let b1 = DeltaBasis::new(ring, 1);
    let src = omega_presentation_with(ring, &b2);
    let tgt = omega_presentation_with(ring, &b1);
    let cols = b2.monomials().iter().map(|m| b1.expand(ring, &ring.monomial(m))).collect();
    ModuleMap::from_columns(src, tgt, cols)?.certified()
}

/// `ι: S²(Ω^(1)) → Ω^(2)`, `δx_i ∨ δx_j ↦ δ²(x_i x_j) - x_i δ²(x_j) - x_j δ²(x_i)`.
pub fn iota_sym_to_omega2(ring: &RingSpec) -> Result<ModuleMap> {
    let s = ring.nvars();
    let b2 = DeltaBasis::new(ring, 2);
    let omega1 = omega_presentation(ring, 1);
    let src = omega1.symmetric_square();
    let tgt = omega_presentation_with(ring, &b2);
    let var = |i: usize| Monomial::variable(s, i);
    let mut cols = Vec::new();
    for i in 0..s {
        for j in i..s {
            let prod = ring.monomial(&var(i).mul(&var(j)));
            let mut v = b2.expand(ring, &prod);
            let di = b2.index_of(&var(i)).expect("degree one");
            let dj = b2.index_of(&var(j)).expect("degree one");
            v.set(dj, v.get(dj) - &ring.var(i));
            v.set(di, v.get(di) - &ring.var(j));
            cols.push(v);
        }
    }
    ModuleMap::from_columns(src, tgt, cols)?.certified()
}

/// `θ: Ω^(2q) → J_q(Ω^(q))`, `δ^(2q)(h) ↦ Δ_q(δ^(q)(h))`.
pub fn theta_to_jets(ring: &RingSpec, q: u32) -> Result<ModuleMap> {
    let b2q = DeltaBasis::new(ring, 2 * q);
    let bq = DeltaBasis::new(ring, q);
    let src = omega_presentation_with(ring, &b2q);
    let omega_q = omega_presentation_with(ring, &bq);
    let tgt = jq_presentation(&omega_q, q);
    let jb = JetBasis::new(ring, q, omega_q.generators());
    let cols = b2q
        .monomials()
        .iter()
        .map(|m| jb.expand(ring, &bq.expand(ring, &ring.monomial(m))))
        .collect();
    ModuleMap::from_columns(src, tgt, cols)?.certified()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_monomial_list, parse_poly, parse_ringspec};

    fn cusp() -> RingSpec {
        parse_ringspec("vars=[x,y]; weights=[2,3]; ideal=[y^2 - x^3]; assume_domain=true;").unwrap()
    }

    fn vecp(ring: &RingSpec, entries: &[&str]) -> Vector {
        Vector::new(entries.iter().map(|e| ring.reduce(&parse_poly(e, ring).unwrap())).collect())
    }

    fn reference_basis(ring: &RingSpec) -> DeltaBasis {
        let ms = parse_monomial_list("x^2, y^2, x*y, x, y", ring).unwrap();
        DeltaBasis::with_monomials(ring, 2, ms).unwrap()
    }

    #[test]
    fn default_basis_order() {
        let r = RingSpec::polynomial(&["x", "y"]);
        let b = DeltaBasis::new(&r, 2);
        let labels: Vec<String> = b.labels(&r).iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["d2(x)", "d2(y)", "d2(x^2)", "d2(x*y)", "d2(y^2)"]);
    }

    #[test]
    fn cusp_second_order_expansions() {
        let r = cusp();
        let b = reference_basis(&r);
        let f = r.ideal()[0].clone();
        assert_eq!(b.expand(&r, &f), vecp(&r, &["-3*x", "1", "0", "3*x^2", "0"]));
        let xf = &r.var(0) * &f;
        assert_eq!(b.expand(&r, &xf), vecp(&r, &["-6*x^2", "x", "2*y", "7*x^3", "-2*x*y"]));
        let yf = &r.var(1) * &f;
        assert_eq!(b.expand(&r, &yf), vecp(&r, &["-3*x*y", "3*y", "-3*x^2", "6*x^2*y", "-y^2"]));
    }

    #[test]
    fn constants_and_powers() {
        let r = RingSpec::polynomial(&["x"]);
        assert!(delta_expand(&r.constant(Rational::from_integer(7.into())), &r, 3).is_zero());
        // (x+u)^4 - x^4 mod u^3 = 4x^3 u + 6x^2 u^2, u^2 = δ(x^2) - 2x δ(x)
        let v = delta_expand(&r.var(0).pow(4), &r, 2);
        assert_eq!(v, vecp(&r, &["-8*x^3", "6*x^2"]));
    }

    #[test]
    fn omega_presentations() {
        let p2 = RingSpec::polynomial(&["x", "y"]);
        let o = omega_presentation(&p2, 2);
        assert_eq!((o.ngens(), o.nrels()), (5, 0));
        let c = cusp();
        let o1 = omega_presentation(&c, 1);
        assert_eq!(o1.relations(), &[vecp(&c, &["-3*x^2", "2*y"])]);
        let o2 = omega_presentation_with(&c, &reference_basis(&c));
        assert_eq!(o2.nrels(), 3);
        let labels: Vec<String> = o2.generators().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["d2(x^2)", "d2(y^2)", "d2(x*y)", "d2(x)", "d2(y)"]);
        assert_eq!(o2.rank().unwrap(), 2);
    }

    #[test]
    fn jet_modules() {
        let p2 = RingSpec::polynomial(&["x", "y"]);
        let j = jq_presentation(&omega_presentation(&p2, 1), 1);
        assert_eq!((j.ngens(), j.nrels()), (6, 0));
        let labels: Vec<String> = j.generators().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels[..3], ["D1[d1(x)](1)", "D1[d1(y)](1)", "D1[d1(x)](x)"]);
        let c = cusp();
        let jc = jq_presentation(&omega_presentation(&c, 1), 1);
        assert_eq!(jc.rank().unwrap(), 2);
    }

    #[test]
    fn jets_of_rings_are_isomorphic_to_sums() {
        for r in [RingSpec::polynomial(&["x"]), cusp()] {
            let (_, map) = jets_of_ring(&r, 1).unwrap();
            assert!(map.is_injective().unwrap());
            assert!(map.is_surjective());
        }
    }

    #[test]
    fn theta_and_iota() {
        let r = RingSpec::polynomial(&["x", "y"]);
        let th = theta_second_to_first(&r).unwrap();
        // δ²(x^2) ↦ 2x δ(x)
        assert_eq!(th.columns()[2], vecp(&r, &["2*x", "0"]));
        let io = iota_sym_to_omega2(&r).unwrap();
        // s(δx,δy) ↦ δ²(xy) - x δ²(y) - y δ²(x)
        assert_eq!(io.columns()[1], vecp(&r, &["-y", "-x", "0", "1", "0"]));
        assert!(th.compose(&io).unwrap().is_zero());
    }

    #[test]
    fn theta_into_jets_on_the_line() {
        let r = RingSpec::polynomial(&["x"]);
        let th = theta_to_jets(&r, 1).unwrap();
        assert_eq!(th.columns()[1], vecp(&r, &["0", "2"]));
        assert!(th.is_injective().unwrap());
        assert!(th.is_surjective());
    }
}
