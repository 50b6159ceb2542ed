//! Gröbner bases for submodules of free modules `P^n` over a polynomial ring.
//!
//! Module terms are compared position-over-term: the lower position index
//! wins, and within a position the ring's monomial order decides. Submodules
//! of `R^n` for a quotient `R = P/I` are handled by the callers adding the
//! generators `f * e_i` for every ideal generator `f` and unit vector `e_i`.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::scalar::Field;

/// An element of the free module `P^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeElement<C: Field> {
    coords: Vec<Polynomial<C>>,
}

impl<C: Field> FreeElement<C> {
    pub fn new(coords: Vec<Polynomial<C>>) -> Self {
        FreeElement { coords }
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        FreeElement {
            coords: vec![Polynomial::zero(ring); rank],
        }
    }

    pub fn unit(ring: &Arc<PolyRing>, rank: usize, index: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.coords[index] = Polynomial::one(ring);
        v
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Polynomial<C>] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Polynomial<C>> {
        self.coords
    }

    pub fn get(&self, i: usize) -> &Polynomial<C> {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, p: Polynomial<C>) {
        self.coords[i] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        FreeElement {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        FreeElement {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, p: &Polynomial<C>) -> Self {
        FreeElement {
            coords: self.coords.iter().map(|a| a * p).collect(),
        }
    }

    pub fn scale_const(&self, c: &C) -> Self {
        FreeElement {
            coords: self.coords.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().cloned());
        FreeElement { coords }
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        FreeElement {
            coords: self.coords[range].to_vec(),
        }
    }

    /// Weighted degree of a homogeneous element when coordinate `i` carries
    /// the shift `shifts[i]`; `None` for zero or inhomogeneous elements.
    pub fn homogeneous_degree(&self, weights: &[u32], shifts: &[i64]) -> Option<i64> {
        let mut deg = None;
        for (p, &s) in self.coords.iter().zip(shifts) {
            for (m, _) in p.terms() {
                let d = m.weighted_degree(weights) as i64 + s;
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
        deg
    }

    /// True when the element is homogeneous (or zero) under the shifts.
    pub fn is_homogeneous(&self, weights: &[u32], shifts: &[i64]) -> bool {
        self.is_zero() || self.homogeneous_degree(weights, shifts).is_some()
    }
}

impl<C: Field> std::fmt::Debug for FreeElement<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// One term `coeff * mono * e_pos` of a module element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct VTerm<C> {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: C,
}

fn cmp_terms(order: &MonomialOrder, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| order.compare(a.1, b.1))
}

/// Flat, sorted representation used inside the engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Vector<C> {
    pub terms: Vec<VTerm<C>>,
}

impl<C: Field> Vector<C> {
    pub fn from_free(v: &FreeElement<C>) -> Self {
        Self::from_free_offset(v, 0)
    }

    pub fn from_free_offset(v: &FreeElement<C>, offset: usize) -> Self {
        let mut terms = Vec::new();
        for (i, p) in v.coords.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(VTerm {
                    pos: i + offset,
                    mono: m.clone(),
                    coeff: c.clone(),
                });
            }
        }
        // coordinates are already sorted internally and positions ascend
        Vector { terms }
    }

    /// Coordinates `range` as a free element of rank `range.len()`.
    pub fn to_free(&self, ring: &Arc<PolyRing>, range: std::ops::Range<usize>) -> FreeElement<C> {
        let mut coords: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); range.len()];
        for t in &self.terms {
            if range.contains(&t.pos) {
                coords[t.pos - range.start].push((t.mono.clone(), t.coeff.clone()));
            }
        }
        FreeElement {
            coords: coords
                .into_iter()
                .map(|ts| Polynomial::from_sorted_terms(ring, ts))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monic(mut self) -> Self {
        if let Some(first) = self.terms.first() {
            if !first.coeff.is_one() {
                let inv = first.coeff.inverse();
                for t in &mut self.terms {
                    t.coeff *= &inv;
                }
            }
        }
        self
    }

    /// `self[from..] - c * m * other`, merged in order; `self[..from]` is kept.
    fn sub_scaled_from(&mut self, order: &MonomialOrder, from: usize, c: &C, m: &Monomial, other: &Vector<C>) {
        let tail = self.terms.split_off(from);
        let mut out = Vec::with_capacity(tail.len() + other.terms.len());
        let mut it_a = tail.into_iter().peekable();
        let mut it_b = other.terms.iter().map(|t| VTerm {
            pos: t.pos,
            mono: t.mono.mul(m),
            coeff: -t.coeff.mul_ref(c),
        }).peekable();
        loop {
            match (it_a.peek(), it_b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(it_a.next().unwrap()),
                (None, Some(_)) => out.push(it_b.next().unwrap()),
                (Some(a), Some(b)) => match cmp_terms(order, (a.pos, &a.mono), (b.pos, &b.mono)) {
                    Ordering::Greater => out.push(it_a.next().unwrap()),
                    Ordering::Less => out.push(it_b.next().unwrap()),
                    Ordering::Equal => {
                        let mut a = it_a.next().unwrap();
                        let b = it_b.next().unwrap();
                        a.coeff += &b.coeff;
                        if !a.coeff.is_zero() {
                            out.push(a);
                        }
                    }
                },
            }
        }
        self.terms.extend(out);
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
}

/// Incremental Buchberger state with Gebauer–Möller pair pruning.
#[derive(Clone)]
pub(crate) struct Engine<C> {
    order: MonomialOrder,
    basis: Vec<Vector<C>>,
    redundant: Vec<bool>,
    pairs: Vec<Pair>,
    by_pos: Vec<Vec<usize>>,
}

impl<C: Field> Engine<C> {
    pub fn new(order: MonomialOrder) -> Self {
        Engine {
            order,
            basis: Vec::new(),
            redundant: Vec::new(),
            pairs: Vec::new(),
            by_pos: Vec::new(),
        }
    }

    /// Appends an element known to extend a Gröbner basis without creating pairs.
    fn load(&mut self, h: Vector<C>) {
        let pos = h.terms[0].pos;
        if self.by_pos.len() <= pos {
            self.by_pos.resize(pos + 1, Vec::new());
        }
        self.by_pos[pos].push(self.basis.len());
        self.basis.push(h);
        self.redundant.push(false);
    }

    fn reducer(&self, pos: usize, m: &Monomial) -> Option<usize> {
        self.by_pos
            .get(pos)?
            .iter()
            .copied()
            .find(|&k| !self.redundant[k] && self.basis[k].terms[0].mono.divides(m))
    }

    /// Full normal form against the current basis.
    pub fn reduce(&self, mut v: Vector<C>) -> Vector<C> {
        let mut i = 0;
        while i < v.terms.len() {
            let (pos, mono) = (v.terms[i].pos, &v.terms[i].mono);
            match self.reducer(pos, mono) {
                Some(k) => {
                    let g = &self.basis[k];
                    let q = g.terms[0].mono.quotient_of(mono).expect("divisible");
                    let c = v.terms[i].coeff.div_ref(&g.terms[0].coeff);
                    v.sub_scaled_from(&self.order, i, &c, &q, g);
                }
                None => i += 1,
            }
        }
        v
    }

    /// Reduce only while the leading term is reducible.
    fn top_reduce(&self, mut v: Vector<C>) -> Vector<C> {
        while let Some(t) = v.terms.first() {
            match self.reducer(t.pos, &t.mono) {
                Some(k) => {
                    let g = &self.basis[k];
                    let q = g.terms[0].mono.quotient_of(&t.mono).expect("divisible");
                    let c = t.coeff.div_ref(&g.terms[0].coeff);
                    v.sub_scaled_from(&self.order, 0, &c, &q, g);
                }
                None => break,
            }
        }
        v
    }

    /// Adds a generator, reducing it first; returns false when it reduced to zero.
    pub fn add(&mut self, v: Vector<C>) -> bool {
        let v = self.reduce(v);
        if v.is_zero() {
            return false;
        }
        self.insert(v.monic());
        true
    }

    fn insert(&mut self, h: Vector<C>) {
        let t = self.basis.len();
        let (hpos, hmono) = (h.terms[0].pos, h.terms[0].mono.clone());

        // new pairs with non-redundant elements at the same position
        let mut candidates: Vec<Pair> = self
            .by_pos
            .get(hpos)
            .map(|ks| {
                ks.iter()
                    .filter(|&&k| !self.redundant[k])
                    .map(|&k| Pair {
                        i: k,
                        j: t,
                        pos: hpos,
                        lcm: self.basis[k].terms[0].mono.lcm(&hmono),
                    })
                    .collect()
            })
            .unwrap_or_default();

        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = (!candidates.is_empty()).then(|| candidates.remove(0)) {
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|o| o.lcm.divides(&p.lcm));
            if !dominated {
                kept.push(p);
            }
        }

        // chain criterion on old pairs
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if p.pos != hpos || !hmono.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].terms[0].mono.lcm(&hmono);
            let lj = basis[p.j].terms[0].mono.lcm(&hmono);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(kept);

        if self.by_pos.len() <= hpos {
            self.by_pos.resize(hpos + 1, Vec::new());
        }
        for &k in &self.by_pos[hpos] {
            if !self.redundant[k] && hmono.divides(&self.basis[k].terms[0].mono) {
                self.redundant[k] = true;
            }
        }
        self.by_pos[hpos].push(t);
        self.basis.push(h);
        self.redundant.push(false);
    }

    fn take_next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = &self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let c = cmp_terms(order, (a.pos, &a.lcm), (b.pos, &b.lcm))
                .then_with(|| (b.i, b.j).cmp(&(a.i, a.j)));
            if c == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Vector<C> {
        let gi = &self.basis[p.i];
        let gj = &self.basis[p.j];
        let mi = gi.terms[0].mono.quotient_of(&p.lcm).expect("lcm");
        let mj = gj.terms[0].mono.quotient_of(&p.lcm).expect("lcm");
        // basis elements are monic
        let mut s = Vector {
            terms: gi
                .terms
                .iter()
                .map(|t| VTerm {
                    pos: t.pos,
                    mono: t.mono.mul(&mi),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        };
        s.sub_scaled_from(&self.order, 0, &C::one(), &mj, gj);
        s
    }

    /// Runs Buchberger's algorithm until all pairs are processed.
    pub fn complete(&mut self) {
        while let Some(p) = self.take_next_pair() {
            let s = self.spoly(&p);
            let s = self.top_reduce(s);
            if s.is_zero() {
                continue;
            }
            let s = self.reduce(s);
            self.insert(s.monic());
        }
    }

    /// The reduced Gröbner basis, sorted by descending leading term.
    pub fn reduced_basis(&self) -> Vec<Vector<C>> {
        let keep: Vec<usize> = (0..self.basis.len()).filter(|&k| !self.redundant[k]).collect();
        let mut out = Vec::with_capacity(keep.len());
        for &k in &keep {
            let g = &self.basis[k];
            let mut v = Vector { terms: g.terms[1..].to_vec() };
            v = self.reduce(v);
            let mut terms = vec![g.terms[0].clone()];
            terms.extend(v.terms);
            out.push(Vector { terms }.monic());
        }
        let order = &self.order;
        out.sort_by(|a, b| {
            let (x, y) = (&a.terms[0], &b.terms[0]);
            cmp_terms(order, (y.pos, &y.mono), (x.pos, &x.mono))
        });
        out
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }
}

/// A submodule of `P^n` given by generators, with a cached reduced Gröbner basis.
#[derive(Clone)]
pub struct SubmoduleBasis<C: Field> {
    ring: Arc<PolyRing>,
    rank: usize,
    generators: Vec<FreeElement<C>>,
    groebner: Vec<FreeElement<C>>,
    engine: Engine<C>,
}

impl<C: Field> SubmoduleBasis<C> {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeElement<C>] {
        &self.generators
    }

    /// The reduced Gröbner basis.
    pub fn groebner(&self) -> &[FreeElement<C>] {
        &self.groebner
    }

    pub fn normal_form(&self, v: &FreeElement<C>) -> Result<FreeElement<C>> {
        if v.rank() != self.rank {
            return Err(Error::Shape(format!(
                "element of rank {} reduced against a submodule of rank {}",
                v.rank(),
                self.rank
            )));
        }
        Ok(self.engine.reduce(Vector::from_free(v)).to_free(&self.ring, 0..self.rank))
    }

    pub fn contains(&self, v: &FreeElement<C>) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// True when every element of `other` lies in `self`.
    pub fn contains_all(&self, others: &[FreeElement<C>]) -> Result<bool> {
        let e = &self.engine;
        for v in others {
            if v.rank() != self.rank {
                return Err(Error::Shape("rank mismatch".into()));
            }
            if !e.reduce(Vector::from_free(v)).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A growing submodule of `P^n`, kept as a Gröbner basis so that membership
/// can be tested between insertions.
#[derive(Clone)]
pub struct IncrementalBasis<C: Field> {
    ring: Arc<PolyRing>,
    rank: usize,
    engine: Engine<C>,
}

impl<C: Field> IncrementalBasis<C> {
    pub fn new(ring: &Arc<PolyRing>, rank: usize) -> Self {
        IncrementalBasis {
            ring: ring.clone(),
            rank,
            engine: Engine::new(ring.order().clone()),
        }
    }

    /// Starts from `I * P^rank`.
    pub fn with_ideal(ring: &Arc<PolyRing>, rank: usize, ideal: &[Polynomial<C>]) -> Self {
        IncrementalBasis {
            ring: ring.clone(),
            rank,
            engine: ideal_engine(ring, ideal, rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn check(&self, v: &FreeElement<C>) {
        assert_eq!(v.rank(), self.rank, "element rank does not match the submodule");
    }

    pub fn normal_form(&self, v: &FreeElement<C>) -> FreeElement<C> {
        self.check(v);
        self.engine.reduce(Vector::from_free(v)).to_free(&self.ring, 0..self.rank)
    }

    pub fn contains(&self, v: &FreeElement<C>) -> bool {
        self.check(v);
        self.engine.reduce(Vector::from_free(v)).is_zero()
    }

    /// Adds `v`; returns false when it was already a member.
    pub fn insert(&mut self, v: &FreeElement<C>) -> bool {
        self.check(v);
        if !self.engine.add(Vector::from_free(v)) {
            return false;
        }
        self.engine.complete();
        true
    }

    /// Adds all of `vs` and completes once.
    pub fn extend(&mut self, vs: &[FreeElement<C>]) {
        for v in vs {
            self.check(v);
            self.engine.add(Vector::from_free(v));
        }
        self.engine.complete();
    }
}

/// Computes the reduced Gröbner basis of the submodule generated by `gens`
/// under the position-over-term extension of `order`.
pub fn groebner_basis<C: Field>(
    ring: &Arc<PolyRing>,
    rank: usize,
    gens: &[FreeElement<C>],
    order: &MonomialOrder,
) -> Result<SubmoduleBasis<C>> {
    let work_ring = if ring.order() == order {
        ring.clone()
    } else {
        ring.with_order(order.clone())
    };
    let mut gens_in = Vec::with_capacity(gens.len());
    for g in gens {
        if g.rank() != rank {
            return Err(Error::Shape(format!("generator of rank {} in rank {rank}", g.rank())));
        }
        let coords = g
            .coords()
            .iter()
            .map(|p| p.reorder(&work_ring))
            .collect::<Result<Vec<_>, _>>()?;
        gens_in.push(FreeElement::new(coords));
    }
    let mut engine = Engine::new(order.clone());
    for g in &gens_in {
        engine.add(Vector::from_free(g));
    }
    engine.complete();
    let reduced = engine.reduced_basis();
    let groebner = reduced.iter().map(|v| v.to_free(&work_ring, 0..rank)).collect();
    let mut loaded = Engine::new(order.clone());
    for v in reduced {
        loaded.load(v);
    }
    let basis = SubmoduleBasis {
        ring: work_ring,
        rank,
        generators: gens_in.into_iter().filter(|g| !g.is_zero()).collect(),
        groebner,
        engine: loaded,
    };
    debug_assert!(basis.contains_all(&basis.generators.clone()).unwrap_or(false));
    Ok(basis)
}

/// Unit-vector multiples `f * e_i` of the ideal generators, for `i in 0..rank`.
pub fn ideal_multiples<C: Field>(ideal: &[Polynomial<C>], rank: usize) -> Vec<FreeElement<C>> {
    let mut out = Vec::with_capacity(ideal.len() * rank);
    if let Some(f0) = ideal.first() {
        let ring = f0.ring();
        for i in 0..rank {
            for f in ideal {
                let mut v = FreeElement::zero(ring, rank);
                v.set(i, f.clone());
                out.push(v);
            }
        }
    }
    out
}

/// Generators of the first syzygy module of `basis.generators()`, as a
/// submodule of `P^m`, `m` the number of generators.
pub fn syzygies<C: Field>(basis: &SubmoduleBasis<C>) -> Result<SubmoduleBasis<C>> {
    let gens = basis.generators();
    let m = gens.len();
    let syz = syzygy_vectors(basis.ring(), basis.rank(), gens, &[])?;
    groebner_basis(basis.ring(), m, &syz, basis.ring().order())
}

/// Syzygies of `gens` modulo the ideal: all `c` in `P^m` with
/// `sum c_i gens_i` in `I * P^n`, reduced modulo `I` with zero vectors dropped.
/// The result generates the syzygy module over `R = P/I`.
pub fn syzygy_vectors<C: Field>(
    ring: &Arc<PolyRing>,
    n: usize,
    gens: &[FreeElement<C>],
    ideal: &[Polynomial<C>],
) -> Result<Vec<FreeElement<C>>> {
    let m = gens.len();
    let order = ring.order().clone();
    let mut engine = Engine::new(order.clone());
    for (i, g) in gens.iter().enumerate() {
        if g.rank() != n {
            return Err(Error::Shape(format!("generator of rank {} in rank {n}", g.rank())));
        }
        let mut v = Vector::from_free(g);
        v.terms.push(VTerm {
            pos: n + i,
            mono: Monomial::one(ring.nvars()),
            coeff: C::one(),
        });
        engine.add(v);
    }
    for f in ideal_multiples(ideal, n) {
        engine.add(Vector::from_free(&f));
    }
    for f in ideal_multiples(ideal, m) {
        engine.add(Vector::from_free_offset(&f, n));
    }
    engine.complete();
    let quotient = ideal_engine(ring, ideal, m);
    let mut out = Vec::new();
    for g in engine.reduced_basis() {
        if g.terms[0].pos < n {
            continue;
        }
        let shifted = Vector {
            terms: g
                .terms
                .iter()
                .map(|t| VTerm {
                    pos: t.pos - n,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        };
        let r = quotient.reduce(shifted);
        if !r.is_zero() {
            out.push(r.to_free(ring, 0..m));
        }
    }
    Ok(out)
}

/// Engine holding the Gröbner basis of `I * P^rank`.
pub(crate) fn ideal_engine<C: Field>(ring: &Arc<PolyRing>, ideal: &[Polynomial<C>], rank: usize) -> Engine<C> {
    let mut e = Engine::new(ring.order().clone());
    if ideal.is_empty() {
        return e;
    }
    // one ideal Gröbner basis, copied into each position
    let mut ie = Engine::new(ring.order().clone());
    for f in ideal {
        ie.add(Vector::from_free(&FreeElement::new(vec![f.clone()])));
    }
    ie.complete();
    let gb = ie.reduced_basis();
    for pos in 0..rank {
        for g in &gb {
            let v = Vector {
                terms: g
                    .terms
                    .iter()
                    .map(|t| VTerm {
                        pos,
                        mono: t.mono.clone(),
                        coeff: t.coeff.clone(),
                    })
                    .collect(),
            };
            e.load(v);
        }
    }
    e
}

/// Reduced Gröbner basis of an ideal of `P`.
pub fn ideal_groebner<C: Field>(ring: &Arc<PolyRing>, ideal: &[Polynomial<C>]) -> Vec<Polynomial<C>> {
    let mut ie = Engine::new(ring.order().clone());
    for f in ideal {
        ie.add(Vector::from_free(&FreeElement::new(vec![f.clone()])));
    }
    ie.complete();
    ie.reduced_basis()
        .into_iter()
        .map(|v| v.to_free(ring, 0..1).into_coords().remove(0))
        .collect()
}

/// Normal form of a polynomial modulo an ideal.
pub struct IdealReducer<C> {
    ring: Arc<PolyRing>,
    engine: Engine<C>,
}

impl<C: Field> IdealReducer<C> {
    pub fn new(ring: &Arc<PolyRing>, ideal: &[Polynomial<C>]) -> Self {
        IdealReducer {
            ring: ring.clone(),
            engine: ideal_engine(ring, ideal, 1),
        }
    }

    pub fn reduce(&self, p: &Polynomial<C>) -> Polynomial<C> {
        if self.engine.basis_len() == 0 || p.is_zero() {
            return p.clone();
        }
        let v = Vector::from_free(&FreeElement::new(vec![p.clone()]));
        self.engine.reduce(v).to_free(&self.ring, 0..1).into_coords().remove(0)
    }

    pub fn reduce_element(&self, v: &FreeElement<C>) -> FreeElement<C> {
        FreeElement::new(v.coords().iter().map(|p| self.reduce(p)).collect())
    }

    pub fn is_zero(&self, p: &Polynomial<C>) -> bool {
        self.reduce(p).is_zero()
    }
}

/// A matrix with polynomial entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<C: Field> {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial<C>>,
}

impl<C: Field> Matrix<C> {
    pub fn zeros(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Arc<PolyRing>, cols: usize, rows: Vec<Vec<Polynomial<C>>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(format!("row of length {} in a matrix with {cols} columns", r.len())));
            }
            data.extend(r);
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows: nrows,
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given elements.
    pub fn from_columns(ring: &Arc<PolyRing>, rows: usize, cols: &[FreeElement<C>]) -> Self {
        let mut m = Self::zeros(ring, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.rank(), rows, "column length");
            for i in 0..rows {
                m.set(i, j, c.get(i).clone());
            }
        }
        m
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<C> {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<C>) {
        self.data[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> FreeElement<C> {
        FreeElement::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> FreeElement<C> {
        FreeElement::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<FreeElement<C>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn rows_vec(&self) -> Vec<FreeElement<C>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn apply(&self, v: &FreeElement<C>) -> FreeElement<C> {
        assert_eq!(v.rank(), self.cols, "matrix-vector shape");
        let mut out = FreeElement::zero(&self.ring, self.rows);
        for i in 0..self.rows {
            let mut acc = Polynomial::zero(&self.ring);
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() && !v.get(j).is_zero() {
                    acc = &acc + &(a * v.get(j));
                }
            }
            out.set(i, acc);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let cols: Vec<FreeElement<C>> = other.columns().iter().map(|c| self.apply(c)).collect();
        Ok(Self::from_columns(&self.ring, self.rows, &cols))
    }

    pub fn map_entries(&self, f: impl Fn(&Polynomial<C>) -> Polynomial<C>) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Polynomial<C> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        let mut a: Vec<Vec<Polynomial<C>>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign_neg = false;
        let mut prev = Polynomial::one(&self.ring);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign_neg = !sign_neg;
                    }
                    None => return Polynomial::zero(&self.ring),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                a[i][k] = Polynomial::zero(&self.ring);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign_neg {
            -&d
        } else {
            d
        }
    }

    /// The submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(&self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }
}

impl<C: Field> std::fmt::Debug for Matrix<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Outcome of [`solve_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution<C: Field> {
    Solution(FreeElement<C>),
    /// The normal form of the right-hand side modulo the column module is nonzero.
    NoSolution { residue: FreeElement<C> },
}

/// Solves `A x = b` over `R = P/I`, i.e. `A x - b` in `I * P^m`.
pub fn solve_linear<C: Field>(
    a: &Matrix<C>,
    b: &FreeElement<C>,
    ideal: &[Polynomial<C>],
) -> Result<LinearSolution<C>> {
    solve_linear_with(a, &[], b, ideal)
}

/// Like [`solve_linear`] but `A x - b` only needs to lie in the span of
/// `extra` plus `I * P^m`.
pub fn solve_linear_with<C: Field>(
    a: &Matrix<C>,
    extra: &[FreeElement<C>],
    b: &FreeElement<C>,
    ideal: &[Polynomial<C>],
) -> Result<LinearSolution<C>> {
    let (m, n) = (a.nrows(), a.ncols());
    if b.rank() != m {
        return Err(Error::Shape(format!("right-hand side of length {} for {m} equations", b.rank())));
    }
    let ring = a.ring();
    let mut engine = Engine::new(ring.order().clone());
    for j in 0..n {
        let mut v = Vector::from_free(&a.column(j));
        v.terms.push(VTerm {
            pos: m + j,
            mono: Monomial::one(ring.nvars()),
            coeff: C::one(),
        });
        engine.add(v);
    }
    for e in extra {
        if e.rank() != m {
            return Err(Error::Shape("extra column length".into()));
        }
        engine.add(Vector::from_free(e));
    }
    for f in ideal_multiples(ideal, m) {
        engine.add(Vector::from_free(&f));
    }
    for f in ideal_multiples(ideal, n) {
        engine.add(Vector::from_free_offset(&f, m));
    }
    engine.complete();
    let r = engine.reduce(Vector::from_free(b));
    if r.terms.first().is_some_and(|t| t.pos < m) {
        return Ok(LinearSolution::NoSolution {
            residue: r.to_free(ring, 0..m),
        });
    }
    let tail = r.to_free(ring, m..m + n);
    let x = FreeElement::new(tail.coords().iter().map(|p| -p).collect());
    Ok(LinearSolution::Solution(x))
}

/// Krull dimension of `P/I` from the leading terms of a Gröbner basis of `I`:
/// the size of a largest variable set containing no leading monomial's support.
/// Returns -1 for the unit ideal.
pub fn krull_dimension<C: Field>(ring: &Arc<PolyRing>, ideal: &[Polynomial<C>]) -> i64 {
    let s = ring.nvars();
    let gb = ideal_groebner(ring, ideal);
    if gb.iter().any(|g| g.is_constant() && !g.is_zero()) {
        return -1;
    }
    let masks: Vec<u64> = gb
        .iter()
        .filter_map(|g| g.leading_term().map(|(m, _)| m.support_mask()))
        .collect();
    let mut best = 0;
    for subset in 0u64..(1u64 << s) {
        let size = subset.count_ones() as i64;
        if size <= best {
            continue;
        }
        if masks.iter().all(|&lm| lm & !subset != 0) {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = Polynomial<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn xy() -> (Arc<PolyRing>, P, P) {
        let r = PolyRing::with_vars(&["x", "y"]);
        let x = P::var(&r, 0);
        let y = P::var(&r, 1);
        (r, x, y)
    }

    fn el(v: Vec<P>) -> FreeElement<Rational> {
        FreeElement::new(v)
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let (r, x, y) = xy();
        let f = &y.pow(2) - &x.pow(3);
        let b = groebner_basis(&r, 1, &[el(vec![f.clone()])], r.order()).unwrap();
        assert_eq!(b.groebner().len(), 1);
        assert_eq!(b.groebner()[0].get(0), &f.monic());
        let b2 = groebner_basis(&r, 1, &[el(vec![f.clone()]), el(vec![&x * &f])], r.order()).unwrap();
        assert_eq!(b2.groebner(), b.groebner());
    }

    #[test]
    fn maximal_ideal() {
        let (r, x, y) = xy();
        let b = groebner_basis(&r, 1, &[el(vec![x.clone()]), el(vec![y.clone()])], r.order()).unwrap();
        let polys: Vec<P> = b.groebner().iter().map(|g| g.get(0).clone()).collect();
        assert_eq!(polys, vec![x, y]);
    }

    #[test]
    fn normal_forms() {
        let (r, x, y) = xy();
        let f = &y.pow(2) - &x.pow(3);
        let b = groebner_basis(&r, 1, &[el(vec![f.clone()])], r.order()).unwrap();
        assert!(b.normal_form(&el(vec![&x * &f])).unwrap().is_zero());
        // x^3 leads under degrevlex, so x^2 y^2 is already reduced here
        let t = &x.pow(2) * &y.pow(2);
        assert_eq!(b.normal_form(&el(vec![t.clone()])).unwrap(), el(vec![t.clone()]));
        // with y^2 leading (lex, x < y after swapping roles) the step gives x^5
        let lex = PolyRing::new(vec!["y".into(), "x".into()], MonomialOrder::Lex);
        let (yl, xl) = (P::var(&lex, 0), P::var(&lex, 1));
        let fl = &yl.pow(2) - &xl.pow(3);
        let bl = groebner_basis(&lex, 1, &[el(vec![fl])], lex.order()).unwrap();
        let nf = bl.normal_form(&el(vec![&xl.pow(2) * &yl.pow(2)])).unwrap();
        assert_eq!(nf, el(vec![xl.pow(5)]));
        assert!(b.normal_form(&el(vec![P::zero(&r)])).unwrap().is_zero());
        assert!(b.normal_form(&el(vec![x.clone(), y.clone()])).is_err());
    }

    #[test]
    fn koszul_syzygy() {
        let (r, x, y) = xy();
        let b = groebner_basis(&r, 1, &[el(vec![x.clone()]), el(vec![y.clone()])], r.order()).unwrap();
        let s = syzygies(&b).unwrap();
        assert_eq!(s.groebner().len(), 1);
        let g = &s.groebner()[0];
        // (y, -x) up to scaling
        assert!(g.get(0) == &y && g.get(1) == &-&x || g.get(0) == &-&y && g.get(1) == &x);
    }

    #[test]
    fn no_syzygy_for_single_nonzero_element() {
        let (r, x, y) = xy();
        let f = &y.pow(2) - &x.pow(3);
        let b = groebner_basis(&r, 1, &[el(vec![f])], r.order()).unwrap();
        assert!(syzygies(&b).unwrap().groebner().is_empty());
    }

    #[test]
    fn three_linear_forms() {
        let (r, x, y) = xy();
        let gens = vec![el(vec![x.clone()]), el(vec![y.clone()]), el(vec![&x + &y])];
        let b = groebner_basis(&r, 1, &gens, r.order()).unwrap();
        let s = syzygies(&b).unwrap();
        let one = P::one(&r);
        let target = el(vec![one.clone(), one.clone(), -&one]);
        assert!(s.contains(&target).unwrap());
        // rank 2: (y, -x, 0) is also a syzygy, independent of (1, 1, -1)
        assert!(s.contains(&el(vec![y.clone(), -&x, P::zero(&r)])).unwrap());
        for g in s.groebner() {
            let sum = &(&(g.get(0) * &x) + &(g.get(1) * &y)) + &(g.get(2) * &(&x + &y));
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn linear_solve_cases() {
        let r = PolyRing::with_vars(&["x"]);
        let x = P::var(&r, 0);
        let a = Matrix::from_rows(&r, 1, vec![vec![x.clone()]]).unwrap();
        match solve_linear(&a, &el(vec![x.pow(2)]), &[]).unwrap() {
            LinearSolution::Solution(s) => assert_eq!(s, el(vec![x.clone()])),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            solve_linear(&a, &el(vec![P::one(&r)]), &[]).unwrap(),
            LinearSolution::NoSolution { .. }
        ));
        let (r2, x2, y2) = xy();
        let f = &y2.pow(2) - &x2.pow(3);
        let a2 = Matrix::from_rows(&r2, 2, vec![vec![y2.scale(&q(2)), x2.pow(2).scale(&q(-3))]]).unwrap();
        match solve_linear(&a2, &el(vec![P::zero(&r2)]), &[f]).unwrap() {
            LinearSolution::Solution(s) => assert!(s.is_zero()),
            other => panic!("{other:?}"),
        }
        assert!(solve_linear(&a2, &el(vec![]), &[]).is_err());
    }

    #[test]
    fn krull_dimensions() {
        let (r, x, y) = xy();
        assert_eq!(krull_dimension::<Rational>(&r, &[]), 2);
        assert_eq!(krull_dimension(&r, &[&y.pow(2) - &x.pow(3)]), 1);
        let r3 = PolyRing::with_vars(&["x", "y", "z"]);
        let (x, y, z) = (P::var(&r3, 0), P::var(&r3, 1), P::var(&r3, 2));
        let ideal = vec![&y.pow(2) - &(&x * &z), &z.pow(2) - &x.pow(3)];
        assert_eq!(krull_dimension(&r3, &ideal), 1);
        assert_eq!(krull_dimension(&r3, &[P::one(&r3)]), -1);
    }

    #[test]
    fn bareiss_determinant() {
        let (r, x, y) = xy();
        let m = Matrix::from_rows(
            &r,
            2,
            vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]],
        )
        .unwrap();
        assert_eq!(m.determinant(), &x.pow(2) - &y.pow(2));
        let z = Matrix::from_rows(&r, 2, vec![vec![P::zero(&r), x.clone()], vec![y.clone(), P::zero(&r)]]).unwrap();
        assert_eq!(z.determinant(), -&(&x * &y));
    }

    #[test]
    fn module_basis_over_quotient() {
        // rows of the cusp's first-order relation plus f * e_i
        let (r, x, y) = xy();
        let f = &y.pow(2) - &x.pow(3);
        let mut gens = vec![el(vec![x.pow(2).scale(&q(-3)), y.scale(&q(2))])];
        gens.extend(ideal_multiples(&[f.clone()], 2));
        let b = groebner_basis(&r, 2, &gens, r.order()).unwrap();
        assert!(b.contains(&el(vec![&x.pow(2).scale(&q(-3)) * &x, &y.scale(&q(2)) * &x])).unwrap());
        assert!(!b.contains(&el(vec![x.clone(), P::zero(&r)])).unwrap());
    }
}
