//! Affine algebras `R = ℚ[x_1..x_s]/(f_1..f_m)`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, PolyError, Result};
use crate::groebner::{self, IdealReducer};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::PolyRing;
use crate::{Poly, Rational};

/// A validated affine algebra description.
#[derive(Clone)]
pub struct RingSpec {
    poly_ring: Arc<PolyRing>,
    weights: Option<Vec<u32>>,
    ideal: Vec<Poly>,
    assume_domain: bool,
    homogeneous: bool,
    reducer: Arc<IdealReducer<Rational>>,
}

impl RingSpec {
    /// Builds a ring from variable names, optional positive weights and ideal
    /// generators written over `poly_ring(vars, weights)`.
    pub fn new(
        vars: Vec<String>,
        weights: Option<Vec<u32>>,
        ideal: Vec<Poly>,
        assume_domain: bool,
    ) -> Result<RingSpec> {
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Invalid(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Invalid(format!("duplicate variable `{v}`")));
            }
        }
        if vars.len() > 63 {
            return Err(Error::Invalid("at most 63 variables are supported".into()));
        }
        let order = match &weights {
            Some(w) => {
                if w.len() != vars.len() {
                    return Err(Error::Invalid(format!(
                        "{} weights for {} variables",
                        w.len(),
                        vars.len()
                    )));
                }
                MonomialOrder::weighted(w.clone())?
            }
            None => MonomialOrder::DegRevLex,
        };
        let poly_ring = PolyRing::new(vars, order);
        let mut gens = Vec::with_capacity(ideal.len());
        for f in ideal {
            if f.ring().vars() != poly_ring.vars() {
                return Err(PolyError::VariableMismatch.into());
            }
            let f = f.reorder(&poly_ring)?;
            if !f.is_zero() {
                gens.push(f);
            }
        }
        let effective = poly_ring.weights();
        let homogeneous = gens.iter().all(|f| f.is_homogeneous(&effective));
        let reducer = Arc::new(IdealReducer::new(&poly_ring, &gens));
        Ok(RingSpec {
            poly_ring,
            weights,
            ideal: gens,
            assume_domain,
            homogeneous,
            reducer,
        })
    }

    /// The polynomial ring `ℚ[vars]` with no relations.
    pub fn polynomial(vars: &[&str]) -> RingSpec {
        RingSpec::new(vars.iter().map(|v| v.to_string()).collect(), None, Vec::new(), true)
            .expect("valid variable names")
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.poly_ring
    }

    pub fn vars(&self) -> &[String] {
        self.poly_ring.vars()
    }

    pub fn nvars(&self) -> usize {
        self.poly_ring.nvars()
    }

    /// Declared weights, if any.
    pub fn declared_weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    /// Grading weights in effect: declared weights or all ones.
    pub fn weights(&self) -> Vec<u32> {
        self.poly_ring.weights()
    }

    pub fn ideal(&self) -> &[Poly] {
        &self.ideal
    }

    pub fn assume_domain(&self) -> bool {
        self.assume_domain
    }

    /// The domain flag, or a polynomial ring (always a domain).
    pub fn is_domain(&self) -> bool {
        self.assume_domain || self.ideal.is_empty()
    }

    /// Whether every ideal generator is homogeneous under [`RingSpec::weights`].
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Whether every ideal generator vanishes at the origin.
    pub fn contains_origin(&self) -> bool {
        self.ideal.iter().all(|f| f.constant_term() == Rational::from_integer(0.into()))
    }

    pub fn reducer(&self) -> &IdealReducer<Rational> {
        &self.reducer
    }

    /// Normal form modulo the ideal.
    pub fn reduce(&self, p: &Poly) -> Poly {
        self.reducer.reduce(p)
    }

    pub fn reduce_vector(&self, v: &crate::Vector) -> crate::Vector {
        self.reducer.reduce_element(v)
    }

    pub fn is_zero(&self, p: &Poly) -> bool {
        self.reducer.is_zero(p)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(&self.poly_ring)
    }

    pub fn one(&self) -> Poly {
        Poly::one(&self.poly_ring)
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(&self.poly_ring, i)
    }

    pub fn constant(&self, c: Rational) -> Poly {
        Poly::constant(&self.poly_ring, c)
    }

    pub fn monomial(&self, m: &Monomial) -> Poly {
        Poly::monomial(&self.poly_ring, m.clone(), Rational::from_integer(1.into()))
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        self.poly_ring.render_monomial(m)
    }

    pub fn weighted_degree(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.weights()) as i64
    }

    /// Krull dimension of the ring; -1 for the zero ring.
    pub fn krull_dimension(&self) -> i64 {
        groebner::krull_dimension(&self.poly_ring, &self.ideal)
    }

    /// Reduced Gröbner basis of the ideal.
    pub fn ideal_groebner(&self) -> Vec<Poly> {
        groebner::ideal_groebner(&self.poly_ring, &self.ideal)
    }

    /// Text form in the ring-file grammar.
    pub fn render(&self) -> String {
        let mut out = format!("vars = [{}];\n", self.vars().join(", "));
        if let Some(w) = &self.weights {
            let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("weights = [{}];\n", ws.join(", ")));
        }
        let fs: Vec<String> = self.ideal.iter().map(|f| f.to_string()).collect();
        out.push_str(&format!("ideal = [{}];\n", fs.join(", ")));
        if self.assume_domain {
            out.push_str("assume_domain = true;\n");
        }
        out
    }
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.poly_ring == other.poly_ring
            && self.weights == other.weights
            && self.ideal == other.ideal
            && self.assume_domain == other.assume_domain
    }
}

impl Eq for RingSpec {}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingSpec({})", self.render().replace('\n', " ").trim_end())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cusp_ring_properties() {
        let r = RingSpec::polynomial(&["x", "y"]);
        let f = &r.var(1).pow(2) - &r.var(0).pow(3);
        let cusp = RingSpec::new(
            vec!["x".into(), "y".into()],
            Some(vec![2, 3]),
            vec![f],
            true,
        )
        .unwrap();
        assert!(cusp.is_homogeneous());
        assert!(cusp.contains_origin());
        assert_eq!(cusp.krull_dimension(), 1);
        // x^3 leads under the weighted order: x^3 -> y^2
        let x3 = cusp.var(0).pow(3);
        assert_eq!(cusp.reduce(&x3), cusp.var(1).pow(2));
    }

    #[test]
    fn rejects_bad_variables() {
        assert!(RingSpec::new(vec!["x".into(), "x".into()], None, vec![], false).is_err());
        assert!(RingSpec::new(vec!["1x".into()], None, vec![], false).is_err());
        assert!(RingSpec::new(vec!["x".into()], Some(vec![0]), vec![], false).is_err());
    }
}
