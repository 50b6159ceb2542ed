//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::PolyError;

/// Exponent vector of a monomial, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u32; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The monomial `x_index`.
    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut out = self.0.clone();
        for (a, b) in out.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).ok_or(PolyError::ExponentOverflow)?;
        }
        Ok(Monomial(out))
    }

    /// Product of two monomials. Exponent overflow is a hard error.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(self.0.iter()).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Support of the monomial as a bitmask over variable indices.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i))
    }

    /// All exponent vectors in `nvars` variables with total degree exactly `d`,
    /// in descending lexicographic order (`x^2, x*y, y^2, ...`).
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == nvars {
                prefix.push(left);
                out.push(Monomial::from_exponents(prefix));
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(nvars, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
        out
    }

    /// All exponent vectors with total degree in `lo..=hi`, ascending degree,
    /// descending lexicographic within a degree.
    pub fn all_up_to_degree(nvars: usize, lo: u32, hi: u32) -> Vec<Monomial> {
        (lo..=hi)
            .flat_map(|d| Monomial::all_of_degree(nvars, d))
            .collect()
    }

    /// Divisors `g` of `self` (componentwise `g <= self`), in no particular order.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(self.nvars())];
        for (i, &e) in self.0.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for m in &out {
                for k in 0..=e {
                    let mut n = m.clone();
                    n.0[i] = k;
                    next.push(n);
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// A monomial order on exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
    /// Weighted degree first, reverse lexicographic tie-break.
    WeightedRevLex(Vec<u32>),
}

impl MonomialOrder {
    pub fn weighted(weights: Vec<u32>) -> Result<Self, PolyError> {
        if weights.iter().any(|&w| w == 0) {
            return Err(PolyError::NonPositiveWeight);
        }
        Ok(MonomialOrder::WeightedRevLex(weights))
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::WeightedRevLex(_) => "wdegrevlex",
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(a, b)),
            MonomialOrder::WeightedRevLex(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| revlex(a, b)),
        }
    }
}

// Among equal degrees, the monomial with the smaller exponent in the last
// differing variable is larger.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.0.iter().zip(b.0.iter()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > x*y > y^2 in two variables
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.compare(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // x*z^1 vs y^2 in x,y,z: revlex puts y^2 above x*z
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn weighted_cusp_order() {
        let o = MonomialOrder::weighted(vec![2, 3]).unwrap();
        // x^3 and y^2 share weighted degree 6; revlex prefers x^3
        assert_eq!(o.compare(&m(&[3, 0]), &m(&[0, 2])), Ordering::Greater);
        assert!(MonomialOrder::weighted(vec![1, 0]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Monomial::all_up_to_degree(2, 1, 2).len(), 5);
        assert_eq!(Monomial::all_up_to_degree(3, 0, 2).len(), 10);
        assert_eq!(
            Monomial::all_of_degree(2, 2),
            vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]
        );
        assert_eq!(m(&[1, 2]).divisors().len(), 6);
    }

    #[test]
    fn overflow_is_an_error() {
        let a = m(&[u32::MAX]);
        assert_eq!(a.checked_mul(&m(&[1])), Err(PolyError::ExponentOverflow));
    }
}
