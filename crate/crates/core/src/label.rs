//! Generator labels: `d{q}(m)`, `D{q}[inner](m)`, `s(a,b)` and plain names.

use std::fmt;

use crate::monomial::Monomial;
use crate::ring::RingSpec;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum GeneratorLabel {
    /// `δ^(q)(x^α)`; the monomial is stored in rendered form.
    Delta { order: u32, monomial: String },
    /// `Δ_q(x^β · inner)`.
    Jet {
        order: u32,
        inner: Box<GeneratorLabel>,
        monomial: String,
    },
    /// `a ∨ b`, factors kept in canonical textual order.
    Sym(Box<GeneratorLabel>, Box<GeneratorLabel>),
    Plain(String),
}

impl GeneratorLabel {
    pub fn delta(ring: &RingSpec, order: u32, m: &Monomial) -> Self {
        GeneratorLabel::Delta {
            order,
            monomial: ring.render_monomial(m),
        }
    }

    pub fn jet(ring: &RingSpec, order: u32, inner: GeneratorLabel, m: &Monomial) -> Self {
        GeneratorLabel::Jet {
            order,
            inner: Box::new(inner),
            monomial: ring.render_monomial(m),
        }
    }

    pub fn sym(a: GeneratorLabel, b: GeneratorLabel) -> Self {
        if a.to_string() <= b.to_string() {
            GeneratorLabel::Sym(Box::new(a), Box::new(b))
        } else {
            GeneratorLabel::Sym(Box::new(b), Box::new(a))
        }
    }

    pub fn plain(name: impl Into<String>) -> Self {
        GeneratorLabel::Plain(name.into())
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorLabel::Delta { order, monomial } => write!(f, "d{order}({monomial})"),
            GeneratorLabel::Jet {
                order,
                inner,
                monomial,
            } => write!(f, "D{order}[{inner}]({monomial})"),
            GeneratorLabel::Sym(a, b) => write!(f, "s({a},{b})"),
            GeneratorLabel::Plain(name) => f.write_str(name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let r = RingSpec::polynomial(&["x", "y"]);
        let dx = GeneratorLabel::delta(&r, 1, &Monomial::from_exponents(&[1, 0]));
        let dy = GeneratorLabel::delta(&r, 1, &Monomial::from_exponents(&[0, 1]));
        assert_eq!(dx.to_string(), "d1(x)");
        let s = GeneratorLabel::sym(dy.clone(), dx.clone());
        assert_eq!(s, GeneratorLabel::sym(dx.clone(), dy));
        assert_eq!(s.to_string(), "s(d1(x),d1(y))");
        let j = GeneratorLabel::jet(&r, 1, dx, &Monomial::one(2));
        assert_eq!(j.to_string(), "D1[d1(x)](1)");
    }
}
