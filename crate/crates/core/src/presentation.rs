//! Finitely presented modules over `R = P/I` and maps between them.
//!
//! A presentation `F/N` is stored as labeled generators of `F = R^n` and
//! relation rows spanning `N`. Submodule questions are answered in `P^n`
//! against `N + I·P^n`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{syzygy_vectors, IncrementalBasis};
use crate::label::GeneratorLabel;
use crate::ring::RingSpec;
use crate::{Matrix, Rational, Vector};

#[derive(Clone)]
pub struct Presentation {
    ring: RingSpec,
    generators: Vec<GeneratorLabel>,
    degrees: Option<Vec<i64>>,
    relations: Vec<Vector>,
    module: OnceLock<Arc<IncrementalBasis<Rational>>>,
}

impl Presentation {
    /// Validates shapes, reduces relation entries modulo the ideal and drops
    /// zero rows. Degrees, when given, must make every relation homogeneous.
    pub fn new(
        ring: RingSpec,
        generators: Vec<GeneratorLabel>,
        degrees: Option<Vec<i64>>,
        relations: Vec<Vector>,
    ) -> Result<Presentation> {
        let n = generators.len();
        if let Some(d) = &degrees {
            if d.len() != n {
                return Err(Error::Shape(format!("{} degrees for {n} generators", d.len())));
            }
        }
        let mut rows = Vec::with_capacity(relations.len());
        for (i, r) in relations.into_iter().enumerate() {
            if r.rank() != n {
                return Err(Error::Shape(format!(
                    "relation {} has {} entries for {n} generators",
                    i + 1,
                    r.rank()
                )));
            }
            let r = adopt(&ring, r)?;
            if r.is_zero() {
                continue;
            }
            if let Some(d) = &degrees {
                if !r.is_homogeneous(&ring.weights(), d) {
                    return Err(Error::Invalid(format!(
                        "relation {} is not homogeneous for the given degrees",
                        i + 1
                    )));
                }
            }
            rows.push(r);
        }
        Ok(Presentation {
            ring,
            generators,
            degrees,
            relations: rows,
            module: OnceLock::new(),
        })
    }

    pub fn free(ring: &RingSpec, generators: Vec<GeneratorLabel>, degrees: Option<Vec<i64>>) -> Presentation {
        Presentation::new(ring.clone(), generators, degrees, Vec::new()).expect("free module")
    }

    /// `R^n` with generators `e1..en` in degree 0.
    pub fn free_rank(ring: &RingSpec, n: usize) -> Presentation {
        let labels = (1..=n).map(|i| GeneratorLabel::plain(format!("e{i}"))).collect();
        let degrees = ring.is_homogeneous().then(|| vec![0; n]);
        Presentation::free(ring, labels, degrees)
    }

    pub fn zero(ring: &RingSpec) -> Presentation {
        Presentation::free(ring, Vec::new(), Some(Vec::new()))
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generators(&self) -> &[GeneratorLabel] {
        &self.generators
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn nrels(&self) -> usize {
        self.relations.len()
    }

    /// Relations as a matrix, one row per relation.
    pub fn relation_matrix(&self) -> Matrix {
        let rows = self.relations.iter().map(|r| r.coords().to_vec()).collect();
        Matrix::from_rows(self.ring.poly_ring(), self.ngens(), rows).expect("rows have ngens entries")
    }

    /// Degrees present over a homogeneous ring.
    pub fn is_graded(&self) -> bool {
        self.degrees.is_some() && self.ring.is_homogeneous()
    }

    /// Same module with degrees dropped.
    pub fn ungraded(&self) -> Presentation {
        let mut p = self.clone();
        p.degrees = None;
        p
    }

    /// Replaces the generator labels.
    pub fn relabeled(&self, generators: Vec<GeneratorLabel>) -> Result<Presentation> {
        if generators.len() != self.ngens() {
            return Err(Error::Shape("label count".into()));
        }
        let mut p = self.clone();
        p.generators = generators;
        Ok(p)
    }

    pub fn zero_vector(&self) -> Vector {
        Vector::zero(self.ring.poly_ring(), self.ngens())
    }

    pub fn unit(&self, j: usize) -> Vector {
        Vector::unit(self.ring.poly_ring(), self.ngens(), j)
    }

    /// Normal form modulo `I` only.
    pub fn reduce(&self, v: &Vector) -> Vector {
        self.ring.reduce_vector(v)
    }

    /// Gröbner basis of `N + I·P^n`, built on first use.
    pub fn relation_module(&self) -> &IncrementalBasis<Rational> {
        self.module.get_or_init(|| {
            let mut b = IncrementalBasis::with_ideal(self.ring.poly_ring(), self.ngens(), self.ring.ideal());
            b.extend(&self.relations);
            Arc::new(b)
        })
    }

    /// Whether `v` represents zero in the module.
    pub fn represents_zero(&self, v: &Vector) -> bool {
        self.relation_module().contains(v)
    }

    /// Canonical representative of the class of `v`.
    pub fn normal_form(&self, v: &Vector) -> Vector {
        self.relation_module().normal_form(v)
    }

    /// Whether every generator is zero in the module.
    pub fn is_zero(&self) -> bool {
        (0..self.ngens()).all(|j| self.represents_zero(&self.unit(j)))
    }

    /// Degree of a homogeneous element, `None` when ungraded or inhomogeneous.
    pub fn degree_of(&self, v: &Vector) -> Option<i64> {
        let d = self.degrees.as_ref()?;
        v.homogeneous_degree(&self.ring.weights(), d)
    }

    /// Whether `v` lies in the span of `gens` plus the relations.
    pub fn span_contains(&self, gens: &[Vector], v: &Vector) -> bool {
        let mut b = (*self.relation_module_arc()).clone();
        b.extend(gens);
        b.contains(v)
    }

    /// Equality of the submodules of this module spanned by `a` and by `b`.
    pub fn same_submodule(&self, a: &[Vector], b: &[Vector]) -> bool {
        let mut sa = (*self.relation_module_arc()).clone();
        sa.extend(a);
        if !b.iter().all(|v| sa.contains(v)) {
            return false;
        }
        let mut sb = (*self.relation_module_arc()).clone();
        sb.extend(b);
        a.iter().all(|v| sb.contains(v))
    }

    fn relation_module_arc(&self) -> Arc<IncrementalBasis<Rational>> {
        self.relation_module();
        self.module.get().expect("initialized").clone()
    }

    /// Rank over the fraction field: generator count minus the largest size
    /// of a minor of the relation matrix that is nonzero in `R`.
    pub fn rank(&self) -> Result<usize> {
        if !self.ring.is_domain() {
            return Err(Error::DomainRequired);
        }
        Ok(self.ngens() - matrix_rank_mod(&self.ring, &self.relation_matrix()))
    }

    /// Number of minimal generators at the origin: generator count minus the
    /// rank of the relation matrix evaluated at zero.
    pub fn minimal_generator_count(&self) -> Result<usize> {
        if !self.ring.contains_origin() {
            return Err(Error::NotLocal("the ideal does not vanish at the origin".into()));
        }
        let rows: Vec<Vec<Rational>> = self
            .relations
            .iter()
            .map(|r| r.coords().iter().map(|p| p.constant_term()).collect())
            .collect();
        Ok(self.ngens() - rational_rank(rows))
    }

    /// `S²(M) = S²(F)/l_N` with generators `s(g_i, g_j)`, `i <= j`.
    pub fn symmetric_square(&self) -> Presentation {
        let n = self.ngens();
        let mut table = vec![vec![0usize; n]; n];
        let mut next = 0;
        for i in 0..n {
            for j in i..n {
                table[i][j] = next;
                table[j][i] = next;
                next += 1;
            }
        }
        let idx = |i: usize, j: usize| table[i][j];
        let mut labels = Vec::new();
        let mut degrees = self.degrees.as_ref().map(|_| Vec::new());
        for i in 0..n {
            for j in i..n {
                debug_assert_eq!(idx(i, j), labels.len());
                labels.push(GeneratorLabel::sym(self.generators[i].clone(), self.generators[j].clone()));
                if let (Some(out), Some(d)) = (degrees.as_mut(), self.degrees.as_ref()) {
                    out.push(d[i] + d[j]);
                }
            }
        }
        let m = labels.len();
        let ring = self.ring.poly_ring();
        let mut rows = Vec::new();
        for r in &self.relations {
            for j in 0..n {
                let mut v = Vector::zero(ring, m);
                for (k, p) in r.coords().iter().enumerate() {
                    if p.is_zero() {
                        continue;
                    }
                    let t = idx(k, j);
                    v.set(t, v.get(t) + p);
                }
                rows.push(v);
            }
        }
        Presentation::new(self.ring.clone(), labels, degrees, rows).expect("symmetric square")
    }

    /// Text form; parses back to an equal presentation.
    pub fn render_text(&self) -> String {
        let mut out = self.ring.render();
        let labels: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        out.push_str(&format!("generators = [{}];\n", labels.join(", ")));
        if let Some(d) = &self.degrees {
            let ds: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("degrees = [{}];\n", ds.join(", ")));
        }
        if self.relations.is_empty() {
            out.push_str("relations = [];\n");
        } else {
            out.push_str("relations = [\n");
            for r in &self.relations {
                let entries: Vec<String> = r.coords().iter().map(|p| p.to_string()).collect();
                out.push_str(&format!("  [{}],\n", entries.join(", ")));
            }
            out.push_str("];\n");
        }
        out
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.generators == other.generators
            && self.degrees == other.degrees
            && self.relations == other.relations
    }
}

impl Eq for Presentation {}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// Moves a vector onto the ring's polynomial ring and reduces it modulo `I`.
fn adopt(ring: &RingSpec, v: Vector) -> Result<Vector> {
    let pr = ring.poly_ring();
    let mut coords = Vec::with_capacity(v.rank());
    for p in v.into_coords() {
        if p.ring().vars() != pr.vars() {
            return Err(Error::RingMismatch);
        }
        let p = if p.ring() == pr { p } else { p.reorder(pr)? };
        coords.push(ring.reduce(&p));
    }
    Ok(Vector::new(coords))
}

/// Rank of a matrix with rational entries.
pub fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i == rank || rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] / &pivot;
            for k in c..ncols {
                let d = &factor * &rows[rank][k];
                rows[i][k] -= d;
            }
        }
        rank += 1;
    }
    rank
}

/// Largest size of a minor of `m` that is nonzero modulo the ideal, found by
/// growing a nonsingular minor one row at a time.
pub(crate) fn matrix_rank_mod(ring: &RingSpec, m: &Matrix) -> usize {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut rows: Vec<usize> = Vec::new();
    let mut cols: Vec<usize> = Vec::new();
    for i in 0..nr {
        if rows.len() == nc {
            break;
        }
        let mut trial_rows = rows.clone();
        trial_rows.push(i);
        for c in 0..nc {
            if cols.contains(&c) {
                continue;
            }
            let mut trial_cols = cols.clone();
            trial_cols.push(c);
            let det = m.submatrix(&trial_rows, &trial_cols).determinant();
            if !ring.is_zero(&det) {
                rows = trial_rows;
                cols = trial_cols;
                break;
            }
        }
    }
    rows.len()
}

/// Keeps the candidates that are not in the span of `base + I·P^n` and of
/// the previously kept candidates, in order.
pub fn prune(ring: &RingSpec, n: usize, base: &[Vector], candidates: Vec<Vector>) -> Vec<Vector> {
    let mut b = IncrementalBasis::with_ideal(ring.poly_ring(), n, ring.ideal());
    b.extend(base);
    let mut out = Vec::new();
    for v in candidates {
        let v = ring.reduce_vector(&v);
        if v.is_zero() {
            continue;
        }
        if b.insert(&v) {
            out.push(v);
        }
    }
    out
}

/// Sorts homogeneous candidates by degree (stable); leaves them unchanged
/// when some degree is undefined.
pub(crate) fn sort_by_degree(vs: &mut [Vector], weights: &[u32], shifts: Option<&[i64]>) {
    let Some(shifts) = shifts else { return };
    let degs: Option<Vec<i64>> = vs
        .iter()
        .map(|v| if v.is_zero() { Some(i64::MAX) } else { v.homogeneous_degree(weights, shifts) })
        .collect();
    if let Some(degs) = degs {
        let mut idx: Vec<usize> = (0..vs.len()).collect();
        idx.sort_by_key(|&i| degs[i]);
        let sorted: Vec<Vector> = idx.iter().map(|&i| vs[i].clone()).collect();
        vs.clone_from_slice(&sorted);
    }
}

/// Certificate returned by [`ModuleMap::check_well_defined`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WellDefinedness {
    WellDefined,
    /// The image of source relation `relation` (0-based) is `image`, which
    /// is not zero in the target.
    Fails { relation: usize, image: Vector },
}

impl WellDefinedness {
    pub fn is_ok(&self) -> bool {
        matches!(self, WellDefinedness::WellDefined)
    }
}

/// A homomorphism given on generators: column `j` is the image of source
/// generator `j` in target coordinates.
#[derive(Clone)]
pub struct ModuleMap {
    source: Presentation,
    target: Presentation,
    matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: Presentation, target: Presentation, matrix: Matrix) -> Result<ModuleMap> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch);
        }
        if matrix.nrows() != target.ngens() || matrix.ncols() != source.ngens() {
            return Err(Error::Shape(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.nrows(),
                matrix.ncols(),
                target.ngens(),
                source.ngens()
            )));
        }
        let columns = matrix.columns();
        Self::from_columns(source, target, columns)
    }

    pub fn from_columns(source: Presentation, target: Presentation, columns: Vec<Vector>) -> Result<ModuleMap> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch);
        }
        if columns.len() != source.ngens() {
            return Err(Error::Shape(format!(
                "{} columns for {} source generators",
                columns.len(),
                source.ngens()
            )));
        }
        let mut cols = Vec::with_capacity(columns.len());
        for c in columns {
            if c.rank() != target.ngens() {
                return Err(Error::Shape(format!(
                    "column of length {} for {} target generators",
                    c.rank(),
                    target.ngens()
                )));
            }
            cols.push(adopt(&target.ring, c)?);
        }
        let matrix = Matrix::from_columns(target.ring.poly_ring(), target.ngens(), &cols);
        Ok(ModuleMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(p: &Presentation) -> ModuleMap {
        let m = Matrix::identity(p.ring.poly_ring(), p.ngens());
        ModuleMap::new(p.clone(), p.clone(), m).expect("identity")
    }

    pub fn zero(source: &Presentation, target: &Presentation) -> Result<ModuleMap> {
        let m = Matrix::zeros(source.ring.poly_ring(), target.ngens(), source.ngens());
        ModuleMap::new(source.clone(), target.clone(), m)
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn columns(&self) -> Vec<Vector> {
        self.matrix.columns()
    }

    /// Image of a source vector, reduced modulo `I`.
    pub fn apply(&self, v: &Vector) -> Vector {
        self.target.reduce(&self.matrix.apply(v))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ModuleMap) -> Result<ModuleMap> {
        if inner.target != self.source {
            return Err(Error::Shape("maps are not composable".into()));
        }
        let m = self.matrix.mul(&inner.matrix)?;
        ModuleMap::new(inner.source.clone(), self.target.clone(), m)
    }

    pub fn scaled(&self, c: &Rational) -> ModuleMap {
        let m = self.matrix.map_entries(|p| p.scale(c));
        ModuleMap::new(self.source.clone(), self.target.clone(), m).expect("same shape")
    }

    /// Checks that every source relation maps to zero in the target.
    pub fn check_well_defined(&self) -> WellDefinedness {
        for (i, r) in self.source.relations.iter().enumerate() {
            let img = self.apply(r);
            if !self.target.represents_zero(&img) {
                return WellDefinedness::Fails {
                    relation: i,
                    image: img,
                };
            }
        }
        WellDefinedness::WellDefined
    }

    /// Returns the map if it is well defined.
    pub fn certified(self) -> Result<ModuleMap> {
        match self.check_well_defined() {
            WellDefinedness::WellDefined => Ok(self),
            WellDefinedness::Fails { relation, .. } => Err(Error::NotWellDefined { relation }),
        }
    }

    /// Whether the map sends every generator to zero.
    pub fn is_zero(&self) -> bool {
        self.columns().iter().all(|c| self.target.represents_zero(c))
    }

    /// Equality as homomorphisms: columns agree modulo target relations.
    pub fn equals(&self, other: &ModuleMap) -> bool {
        self.source == other.source
            && self.target == other.target
            && self
                .columns()
                .iter()
                .zip(other.columns())
                .all(|(a, b)| self.target.represents_zero(&a.sub(&b)))
    }

    pub fn image_contains(&self, v: &Vector) -> bool {
        self.target.span_contains(&self.columns(), v)
    }

    /// Generators of the preimage of the target relations, a submodule of
    /// `P^n0` containing the source relations.
    fn preimage_generators(&self) -> Result<Vec<Vector>> {
        let n0 = self.source.ngens();
        let n1 = self.target.ngens();
        let mut gens = self.columns();
        gens.extend(self.target.relations.iter().cloned());
        let ring = &self.source.ring;
        let syz = syzygy_vectors(ring.poly_ring(), n1, &gens, ring.ideal())?;
        let mut out: Vec<Vector> = syz.into_iter().map(|s| s.slice(0..n0)).filter(|v| !v.is_zero()).collect();
        if n1 == 0 {
            out = (0..n0).map(|j| self.source.unit(j)).collect();
        }
        Ok(out)
    }

    /// Kernel presentation with its inclusion into the source.
    pub fn kernel(&self) -> Result<(Presentation, ModuleMap)> {
        let src = &self.source;
        let ring = &src.ring;
        let n0 = src.ngens();
        let mut cands = self.preimage_generators()?;
        let weights = ring.weights();
        sort_by_degree(&mut cands, &weights, src.degrees.as_deref().filter(|_| src.is_graded()));
        let ks = prune(ring, n0, &src.relations, cands);
        let p = ks.len();
        let degrees: Option<Vec<i64>> = if src.is_graded() {
            ks.iter().map(|k| src.degree_of(k)).collect()
        } else {
            None
        };
        let mut gens = ks.clone();
        gens.extend(src.relations.iter().cloned());
        let rels = if p == 0 {
            Vec::new()
        } else {
            let syz = syzygy_vectors(ring.poly_ring(), n0, &gens, ring.ideal())?;
            let mut rows: Vec<Vector> = syz.into_iter().map(|s| s.slice(0..p)).collect();
            sort_by_degree(&mut rows, &weights, degrees.as_deref());
            prune(ring, p, &[], rows)
        };
        let labels = (1..=p).map(|i| GeneratorLabel::plain(format!("k{i}"))).collect();
        let ker = Presentation::new(ring.clone(), labels, degrees, rels)?;
        let incl = ModuleMap::from_columns(ker.clone(), src.clone(), ks)?;
        Ok((ker, incl))
    }

    /// Target modulo the image.
    pub fn cokernel(&self) -> Presentation {
        let t = &self.target;
        let cols = self.columns();
        let graded_map = t.is_graded()
            && self.source.is_graded()
            && cols.iter().enumerate().all(|(j, c)| {
                c.is_zero() || t.degree_of(c) == Some(self.source.degrees.as_ref().unwrap()[j])
            });
        let extra = prune(&t.ring, t.ngens(), &t.relations, cols);
        let mut rows = t.relations.clone();
        rows.extend(extra);
        let degrees = if graded_map { t.degrees.clone() } else { None };
        Presentation::new(t.ring.clone(), t.generators.clone(), degrees, rows).expect("cokernel")
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.0.is_zero())
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_zero()
    }
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "map {} -> {} generators", self.source.ngens(), self.target.ngens())?;
        write!(f, "{:?}", self.matrix)
    }
}

/// Block-diagonal presentation of `a ⊕ b`.
pub fn direct_sum(a: &Presentation, b: &Presentation) -> Result<Presentation> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    let (na, nb) = (a.ngens(), b.ngens());
    let pr = a.ring.poly_ring();
    let mut labels = a.generators.clone();
    labels.extend(b.generators.iter().cloned());
    let degrees = match (&a.degrees, &b.degrees) {
        (Some(x), Some(y)) => Some(x.iter().chain(y).copied().collect()),
        _ => None,
    };
    let mut rows = Vec::with_capacity(a.nrels() + b.nrels());
    for r in &a.relations {
        rows.push(r.concat(&Vector::zero(pr, nb)));
    }
    for r in &b.relations {
        rows.push(Vector::zero(pr, na).concat(r));
    }
    Presentation::new(a.ring.clone(), labels, degrees, rows)
}

/// Exactness at each interior module of `m_0 → m_1 → ... `: entry `i`
/// reports whether `image(maps[i]) = kernel(maps[i+1])`.
pub fn check_exact(maps: &[ModuleMap]) -> Result<Vec<bool>> {
    let mut out = Vec::new();
    for (i, w) in maps.windows(2).enumerate() {
        let (f, g) = (&w[0], &w[1]);
        if f.target != g.source {
            return Err(Error::Shape(format!("maps {} and {} are not composable", i, i + 1)));
        }
        let mid = &g.source;
        let complex = f.columns().iter().all(|c| g.target.represents_zero(&g.apply(c)));
        let exact = complex && {
            let ker = g.preimage_generators()?;
            let mut span = (*mid.relation_module_arc()).clone();
            span.extend(&f.columns());
            ker.iter().all(|k| span.contains(k))
        };
        out.push(exact);
    }
    Ok(out)
}

/// Whether `scalar · (retraction ∘ iota)` is the identity of `iota`'s source.
pub fn verify_splitting(iota: &ModuleMap, retraction: &ModuleMap, scalar: &Rational) -> Result<bool> {
    if retraction.source.ngens() != iota.target.ngens() || retraction.target.ngens() != iota.source.ngens() {
        return Err(Error::Shape("retraction does not go back to the source of iota".into()));
    }
    if retraction.source != iota.target || retraction.target != iota.source {
        return Err(Error::Shape("retraction and iota use different presentations".into()));
    }
    let comp = retraction.compose(iota)?.scaled(scalar);
    let src = &iota.source;
    Ok(comp
        .columns()
        .iter()
        .enumerate()
        .all(|(j, c)| src.represents_zero(&c.sub(&src.unit(j)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::parse::{parse_poly, parse_presentation, parse_ringspec};

    fn poly_ring(vars: &[&str]) -> RingSpec {
        RingSpec::polynomial(vars)
    }

    fn cusp() -> RingSpec {
        parse_ringspec("vars=[x,y]; weights=[2,3]; ideal=[y^2 - x^3]; assume_domain=true;").unwrap()
    }

    fn vecp(ring: &RingSpec, entries: &[&str]) -> Vector {
        Vector::new(entries.iter().map(|e| parse_poly(e, ring).unwrap()).collect())
    }

    fn omega1_cusp() -> Presentation {
        let r = cusp();
        let labels = vec![GeneratorLabel::plain("dx"), GeneratorLabel::plain("dy")];
        Presentation::new(r.clone(), labels, Some(vec![2, 3]), vec![vecp(&r, &["-3*x^2", "2*y"])]).unwrap()
    }

    #[test]
    fn identity_is_well_defined_and_bijective() {
        let m = omega1_cusp();
        let id = ModuleMap::identity(&m);
        assert!(id.check_well_defined().is_ok());
        assert!(id.kernel().unwrap().0.is_zero());
        assert!(id.cokernel().is_zero());
    }

    #[test]
    fn quotient_to_free_is_not_well_defined() {
        let r = poly_ring(&["x"]);
        let q = Presentation::new(r.clone(), vec![GeneratorLabel::plain("g")], None, vec![vecp(&r, &["x"])]).unwrap();
        let f = Presentation::free_rank(&r, 1);
        let map = ModuleMap::from_columns(q, f, vec![vecp(&r, &["1"])]).unwrap();
        match map.check_well_defined() {
            WellDefinedness::Fails { relation, .. } => assert_eq!(relation, 0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_map_kernel_and_cokernel() {
        let m = omega1_cusp();
        let z = ModuleMap::zero(&m, &m).unwrap();
        let (k, incl) = z.kernel().unwrap();
        assert_eq!(k.ngens(), 2);
        assert!(incl.is_surjective());
        let c = z.cokernel();
        assert_eq!(c.relations(), m.relations());
    }

    #[test]
    fn ranks() {
        let r = cusp();
        assert_eq!(omega1_cusp().rank().unwrap(), 1);
        assert_eq!(Presentation::free_rank(&r, 5).rank().unwrap(), 5);
        let nd = parse_ringspec("vars=[x,y]; ideal=[x*y];").unwrap();
        assert_eq!(Presentation::free_rank(&nd, 1).rank(), Err(Error::DomainRequired));
    }

    #[test]
    fn minimal_generators() {
        let r = poly_ring(&["x"]);
        assert_eq!(omega1_cusp().minimal_generator_count().unwrap(), 2);
        let p = Presentation::new(
            r.clone(),
            vec![GeneratorLabel::plain("a"), GeneratorLabel::plain("b")],
            None,
            vec![vecp(&r, &["1", "x"])],
        )
        .unwrap();
        assert_eq!(p.minimal_generator_count().unwrap(), 1);
        let away = parse_ringspec("vars=[x]; ideal=[x-1];").unwrap();
        assert!(Presentation::free_rank(&away, 1).minimal_generator_count().is_err());
    }

    #[test]
    fn symmetric_squares() {
        let r = poly_ring(&["x", "y"]);
        let s = Presentation::free_rank(&r, 2).symmetric_square();
        assert_eq!((s.ngens(), s.nrels()), (3, 0));
        let s3 = Presentation::free_rank(&r, 3).symmetric_square();
        assert_eq!(s3.ngens(), 6);
        let sc = omega1_cusp().symmetric_square();
        assert_eq!((sc.ngens(), sc.nrels()), (3, 2));
        assert_eq!(sc.generators()[1].to_string(), "s(dx,dy)");
        assert_eq!(sc.degrees(), Some(&[4, 5, 6][..]));
        // df∨dx = -3x^2 s(dx,dx) + 2y s(dx,dy)
        assert_eq!(sc.relations()[0], vecp(&cusp(), &["-3*x^2", "2*y", "0"]));
        assert_eq!(sc.relations()[1], vecp(&cusp(), &["0", "-3*x^2", "2*y"]));
        assert_eq!(Presentation::zero(&r).symmetric_square().ngens(), 0);
        assert_eq!(sc.rank().unwrap(), 1);
    }

    #[test]
    fn exactness_of_identity() {
        let m = omega1_cusp();
        let z = Presentation::zero(m.ring());
        let seq = [
            ModuleMap::zero(&z, &m).unwrap(),
            ModuleMap::identity(&m),
            ModuleMap::zero(&m, &z).unwrap(),
        ];
        assert_eq!(check_exact(&seq).unwrap(), vec![true, true]);
        let broken = [
            ModuleMap::zero(&z, &m).unwrap(),
            ModuleMap::zero(&m, &m).unwrap(),
            ModuleMap::zero(&m, &z).unwrap(),
        ];
        assert_eq!(check_exact(&broken).unwrap(), vec![false, false]);
    }

    #[test]
    fn splitting_checks() {
        let m = omega1_cusp();
        let id = ModuleMap::identity(&m);
        assert!(verify_splitting(&id, &id, &Rational::one()).unwrap());
        let z = ModuleMap::zero(&m, &m).unwrap();
        assert!(!verify_splitting(&id, &z, &Rational::one()).unwrap());
    }

    #[test]
    fn direct_sums() {
        let r = cusp();
        let a = omega1_cusp();
        let s = direct_sum(&a, &Presentation::zero(&r)).unwrap();
        assert_eq!(s, a);
        let f = direct_sum(&Presentation::free_rank(&r, 1), &Presentation::free_rank(&r, 2)).unwrap();
        assert_eq!(f.rank().unwrap(), 3);
        let b = a.symmetric_square();
        assert_eq!(direct_sum(&a, &b).unwrap().rank().unwrap(), a.rank().unwrap() + b.rank().unwrap());
    }

    #[test]
    fn kernel_of_koszul_map() {
        // R^2 -> R, (a, b) -> a x + b y has kernel generated by (y, -x), free
        let r = poly_ring(&["x", "y"]);
        let src = Presentation::free_rank(&r, 2);
        let tgt = Presentation::free_rank(&r, 1);
        let map = ModuleMap::from_columns(src, tgt, vec![vecp(&r, &["x"]), vecp(&r, &["y"])]).unwrap();
        let (k, incl) = map.kernel().unwrap();
        assert_eq!((k.ngens(), k.nrels()), (1, 0));
        assert!(map.compose(&incl).unwrap().is_zero());
        assert_eq!(k.degrees(), Some(&[1][..]));
        let c = map.cokernel();
        assert_eq!(c.nrels(), 2);
        assert!(!c.is_zero());
    }

    #[test]
    fn text_round_trip() {
        let m = omega1_cusp().symmetric_square();
        let text = m.render_text();
        assert_eq!(parse_presentation(&text).unwrap(), m);
    }
}
