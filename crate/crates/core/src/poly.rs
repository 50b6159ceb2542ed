//! Sparse multivariate polynomials over an exact field.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::PolyError;
use crate::monomial::{Monomial, MonomialOrder};
use crate::scalar::{binomial, Field};

/// Variable names plus the monomial order used to sort terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, order: MonomialOrder) -> Arc<PolyRing> {
        if let MonomialOrder::WeightedRevLex(w) = &order {
            assert_eq!(w.len(), vars.len(), "one weight per variable");
        }
        Arc::new(PolyRing { vars, order })
    }

    pub fn with_vars(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            vars.iter().map(|v| v.to_string()).collect(),
            MonomialOrder::DegRevLex,
        )
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Grading weights: the order's weights, or all ones.
    pub fn weights(&self) -> Vec<u32> {
        match &self.order {
            MonomialOrder::WeightedRevLex(w) => w.clone(),
            _ => vec![1; self.vars.len()],
        }
    }

    /// The same variables under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<PolyRing> {
        PolyRing::new(self.vars.clone(), order)
    }

    /// Variables `x_1..x_s, u_x_1..u_x_s`, where `u_v` stands for `1⊗v - v⊗1`.
    pub fn doubled(&self) -> Arc<PolyRing> {
        let mut vars = self.vars.clone();
        vars.extend(self.vars.iter().map(|v| format!("u_{v}")));
        let order = match &self.order {
            MonomialOrder::WeightedRevLex(w) => {
                MonomialOrder::WeightedRevLex(w.iter().chain(w.iter()).copied().collect())
            }
            o => o.clone(),
        };
        PolyRing::new(vars, order)
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.vars.iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A polynomial in canonical form: terms sorted strictly descending under the
/// ring's order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<C> {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, C)>,
}

/// Arithmetic selector for [`Polynomial::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl<C: Field> Polynomial<C> {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: C) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(ring, Monomial::variable(ring.nvars(), index), C::one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: C) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            *acc.entry(m).or_insert_with(C::zero) += c;
        }
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().compare(&w[0].0, &w[1].0).is_gt()));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    /// Coefficient of the monomial `1`, i.e. the value at the origin.
    pub fn constant_term(&self) -> C {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => C::zero(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// `Some(d)` when every term has weighted degree `d`; `None` for mixed
    /// degrees. The zero polynomial reports `Some(None)`-like behaviour via
    /// [`Polynomial::is_homogeneous`].
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u64> {
        let mut it = self.terms.iter().map(|(m, _)| m.weighted_degree(weights));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        self.is_zero() || self.weighted_degree(weights).is_some()
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.nterms() * other.nterms());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                *acc.entry(m).or_insert_with(C::zero) += ca.mul_ref(cb);
            }
        }
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = self.ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self, PolyError> {
        match op {
            ArithOp::Add => self.checked_add(other),
            ArithOp::Sub => self.checked_sub(other),
            ArithOp::Mul => self.checked_mul(other),
        }
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].0, &b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if subtract { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    if subtract {
                        c -= &b[j].1;
                    } else {
                        c += &b[j].1;
                    }
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            let c = if subtract { -c.clone() } else { c.clone() };
            out.push((m.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul_ref(c)))
                .collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.mul_ref(c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.ring);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inverse()),
        }
    }

    /// Iterated partial derivative `∂^order / ∂x_var^order`.
    pub fn partial_derivative(&self, var: usize, order: u32) -> Result<Self, PolyError> {
        let nvars = self.ring.nvars();
        if var >= nvars {
            return Err(PolyError::VariableIndex { index: var, nvars });
        }
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[var];
            if e < order {
                return None;
            }
            // e (e-1) ... (e-order+1)
            let falling: i64 = (0..order).map(|k| (e - k) as i64).product();
            let mut exps = m.exponents().to_vec();
            exps[var] -= order;
            Some((Monomial::from_exponents(&exps), c.mul_ref(&C::from_int(falling))))
        });
        Ok(Self::from_terms(&self.ring, terms))
    }

    /// Taylor coefficients `∂^β h / β!` for every `β` with `lo <= |β| <= hi`,
    /// keyed by `β`. Zero coefficients are omitted.
    pub fn taylor_coefficients(&self, lo: u32, hi: u32) -> Vec<(Monomial, Self)> {
        let mut buckets: HashMap<Monomial, Vec<(Monomial, C)>> = HashMap::new();
        for (m, c) in &self.terms {
            for beta in m.divisors() {
                let d = beta.degree();
                if d < lo as u64 || d > hi as u64 {
                    continue;
                }
                let mut coeff = c.clone();
                for (&a, &b) in m.exponents().iter().zip(beta.exponents()) {
                    coeff *= &binomial::<C>(a, b);
                }
                let rest = beta.quotient_of(m).expect("beta divides m");
                buckets.entry(beta).or_default().push((rest, coeff));
            }
        }
        let mut out: Vec<(Monomial, Self)> = buckets
            .into_iter()
            .map(|(beta, terms)| (beta, Self::from_terms(&self.ring, terms)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        let order = self.ring.order();
        out.sort_by(|a, b| order.compare(&b.0, &a.0));
        out
    }

    /// `h(x+u) - h(x)` with every monomial of `u`-degree above `q` dropped,
    /// as a polynomial over [`PolyRing::doubled`].
    pub fn truncated_shift(&self, q: u32) -> Self {
        let doubled = self.ring.doubled();
        let s = self.ring.nvars();
        let mut terms = Vec::new();
        for (beta, coeff) in self.taylor_coefficients(1, q) {
            for (m, c) in coeff.terms {
                let exps: Vec<u32> = m
                    .exponents()
                    .iter()
                    .chain(beta.exponents())
                    .copied()
                    .collect();
                debug_assert_eq!(exps.len(), 2 * s);
                terms.push((Monomial::from_exponents(&exps), c));
            }
        }
        Self::from_terms(&doubled, terms)
    }

    /// Re-sorts the same polynomial under another ring with identical variables.
    pub fn reorder(&self, ring: &Arc<PolyRing>) -> Result<Self, PolyError> {
        if ring.vars() != self.ring.vars() {
            return Err(PolyError::VariableMismatch);
        }
        Ok(Self::from_terms(ring, self.terms.iter().cloned()))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.leading_term()?;
        let lc_inv = lc.inverse();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = lm.quotient_of(&m)?;
            let qc = c.mul_ref(&lc_inv);
            rem = &rem - &d.mul_term(&q, &qc);
            quot.push((q, qc));
        }
        Some(Self::from_terms(&self.ring, quot))
    }

    /// Map into another ring with the same number of variables (same names or not).
    pub fn transfer(&self, ring: &Arc<PolyRing>) -> Self {
        assert_eq!(ring.nvars(), self.ring.nvars());
        Self::from_terms(ring, self.terms.iter().cloned())
    }
}

impl<C: Field> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<C: Field> Eq for Polynomial<C> {}

impl<C: Field> std::hash::Hash for Polynomial<C> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<C: Field> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.render_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ring.render_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl<C: Field> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<C: Field> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<C: Field> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<C: Field> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl<C: Field> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = Polynomial<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn ring() -> Arc<PolyRing> {
        PolyRing::with_vars(&["x", "y"])
    }

    fn x(r: &Arc<PolyRing>) -> P {
        P::var(r, 0)
    }

    fn y(r: &Arc<PolyRing>) -> P {
        P::var(r, 1)
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let a = &x(&r) + &y(&r);
        let b = &x(&r) - &y(&r);
        assert_eq!((&a * &b).to_string(), "x^2 - y^2");
        assert_eq!(&a + &P::zero(&r), a);
    }

    #[test]
    fn cusp_times_x() {
        let r = ring();
        let f = &y(&r).pow(2) - &x(&r).pow(3);
        assert_eq!(f.to_string(), "-x^3 + y^2");
        let xf = f.arith(&x(&r), ArithOp::Mul).unwrap();
        let expected = &(&x(&r) * &y(&r).pow(2)) - &x(&r).pow(4);
        assert_eq!(xf, expected);
    }

    #[test]
    fn mismatched_rings_error() {
        let a = P::var(&ring(), 0);
        let b = P::var(&PolyRing::with_vars(&["x", "z"]), 0);
        assert_eq!(a.checked_add(&b), Err(PolyError::VariableMismatch));
    }

    #[test]
    fn cusp_partials() {
        let r = ring();
        let f = &y(&r).pow(2) - &x(&r).pow(3);
        assert_eq!(f.partial_derivative(0, 1).unwrap(), x(&r).pow(2).scale(&q(-3)));
        assert_eq!(f.partial_derivative(1, 1).unwrap(), y(&r).scale(&q(2)));
        assert!(P::constant(&r, q(7)).partial_derivative(0, 1).unwrap().is_zero());
        assert!(f.partial_derivative(2, 1).is_err());
    }

    #[test]
    fn shift_examples() {
        let r = PolyRing::with_vars(&["x"]);
        let s = P::var(&r, 0).pow(3).truncated_shift(2);
        assert_eq!(s.to_string(), "3*x^2*u_x + 3*x*u_x^2");
        let r2 = PolyRing::with_vars(&["y"]);
        assert_eq!(P::var(&r2, 0).pow(2).truncated_shift(2).to_string(), "2*y*u_y + u_y^2");
        assert!(P::constant(&r2, q(5)).truncated_shift(3).is_zero());
    }

    #[test]
    fn rendering() {
        let r = ring();
        let p = &(&x(&r).pow(2) * &y(&r)).scale(&q(-3)) + &y(&r).scale(&q(2));
        assert_eq!(p.to_string(), "-3*x^2*y + 2*y");
        let half = Rational::new(1.into(), 2.into());
        assert_eq!((&x(&r) * &y(&r)).scale(&half).to_string(), "1/2*x*y");
        assert_eq!(P::constant(&r, q(-1)).to_string(), "-1");
        assert_eq!(P::zero(&r).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let a = &x(&r) + &y(&r);
        let b = &(&x(&r) - &y(&r)) * &a;
        assert_eq!(b.div_exact(&a).unwrap(), &x(&r) - &y(&r));
        assert!(x(&r).div_exact(&y(&r)).is_none());
    }
}
