//! Free resolutions over `R = P/I`, minimalization, projective dimension
//! and the Jacobian criterion.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{ideal_groebner, syzygy_vectors};
use crate::presentation::{prune, sort_by_degree, Presentation};
use crate::ring::RingSpec;
use crate::{Matrix, Rational, Vector};

/// A resolution `... → R^{b_2} → R^{b_1} → R^{b_0} → M → 0`.
///
/// `steps[i]` has `b_{i+1}` rows and `b_i` columns: row `r` is the image
/// of the `r`-th basis vector of `R^{b_{i+1}}`.
#[derive(Clone, Debug)]
pub struct ResolutionReport {
    pub module: Presentation,
    pub steps: Vec<Matrix>,
    pub betti: Vec<usize>,
    pub terminated: bool,
    pub cutoff: usize,
    pub graded: bool,
    /// Degrees of the basis of each `R^{b_i}` when graded.
    pub shifts: Vec<Option<Vec<i64>>>,
    /// Whether [`minimalize`] has been applied.
    pub minimal: bool,
}

impl ResolutionReport {
    /// Length of the resolution when it terminated: the last index with
    /// `b_i > 0`.
    pub fn length(&self) -> Option<usize> {
        if !self.terminated {
            return None;
        }
        Some(self.betti.iter().rposition(|&b| b > 0).unwrap_or(0))
    }

    /// Whether consecutive steps compose to zero modulo the ideal.
    pub fn is_complex(&self) -> bool {
        let ring = self.module.ring();
        self.steps.windows(2).all(|w| match w[1].mul(&w[0]) {
            Ok(p) => p.map_entries(|e| ring.reduce(e)).is_zero(),
            Err(_) => false,
        })
    }

    /// Short description of how the Betti numbers evolve when the
    /// resolution did not terminate.
    pub fn growth_note(&self) -> Option<String> {
        if self.terminated || self.betti.len() < 3 {
            return None;
        }
        let tail = &self.betti[1..];
        let kind = if tail.windows(2).all(|w| w[0] == w[1]) {
            "constant"
        } else if tail.windows(2).all(|w| w[0] <= w[1]) {
            "nondecreasing"
        } else {
            "irregular"
        };
        Some(format!("no termination through step {}; Betti numbers past b_0 are {kind}", self.cutoff))
    }
}

/// Computes `b_0, ..., b_cutoff` of a resolution of `m`, stopping early at a
/// zero syzygy module. Each syzygy module is generated by a pruned set, so
/// over a graded ring the resolution is minimal past step 0.
pub fn free_resolution(m: &Presentation, cutoff: usize) -> Result<ResolutionReport> {
    if cutoff == 0 {
        return Err(Error::Invalid("cutoff must be at least 1".into()));
    }
    let ring = m.ring();
    let pr = ring.poly_ring();
    let weights = ring.weights();
    let graded = m.is_graded();
    let mut shifts: Vec<Option<Vec<i64>>> = vec![m.degrees().filter(|_| graded).map(|d| d.to_vec())];
    let mut betti = vec![m.ngens()];
    let mut steps = Vec::new();

    let mut rows = m.relations().to_vec();
    sort_by_degree(&mut rows, &weights, shifts[0].as_deref());
    let mut rows = prune(ring, m.ngens(), &[], rows);
    let mut width = m.ngens();
    loop {
        let k = betti.len();
        betti.push(rows.len());
        let next_shifts = shifts[k - 1].as_ref().map(|s| {
            rows.iter()
                .map(|r| r.homogeneous_degree(&weights, s).expect("homogeneous row"))
                .collect::<Vec<i64>>()
        });
        shifts.push(next_shifts);
        if rows.is_empty() {
            break;
        }
        steps.push(rows_to_matrix(ring, width, &rows));
        if k == cutoff {
            break;
        }
        let mut syz = syzygy_vectors(pr, width, &rows, ring.ideal())?;
        sort_by_degree(&mut syz, &weights, shifts[k].as_deref());
        width = rows.len();
        rows = prune(ring, width, &[], syz);
    }
    let terminated = betti.last() == Some(&0);
    if terminated && betti.len() > 1 {
        betti.pop();
        shifts.pop();
    }
    Ok(ResolutionReport {
        module: m.clone(),
        steps,
        betti,
        terminated,
        cutoff,
        graded,
        shifts,
        minimal: false,
    })
}

fn rows_to_matrix(ring: &RingSpec, width: usize, rows: &[Vector]) -> Matrix {
    let data = rows.iter().map(|r| r.coords().to_vec()).collect();
    Matrix::from_rows(ring.poly_ring(), width, data).expect("rows have equal length")
}

/// Removes every nonzero constant entry by eliminating a generator together
/// with the relation that expresses it.
///
/// Needs a graded module or a ring whose ideal vanishes at the origin; an
/// entry that is a unit locally but not a constant yields `NotLocal`.
pub fn minimalize(r: &ResolutionReport) -> Result<ResolutionReport> {
    let ring = r.module.ring();
    if !r.graded && !ring.contains_origin() {
        return Err(Error::NotLocal("the ring does not pass through the origin".into()));
    }
    let mut steps: Vec<Vec<Vec<crate::Poly>>> = r
        .steps
        .iter()
        .map(|m| (0..m.nrows()).map(|i| m.row(i).into_coords()).collect())
        .collect();
    let mut betti = r.betti.clone();
    let mut shifts = r.shifts.clone();
    let zero = Rational::zero();
    'outer: loop {
        for i in 0..steps.len() {
            for row in 0..steps[i].len() {
                for col in 0..betti[i] {
                    let e = &steps[i][row][col];
                    let c = e.constant_term();
                    if c == zero {
                        continue;
                    }
                    if !e.is_constant() {
                        return Err(Error::NotLocal(format!(
                            "entry {e} is a unit at the origin but not a constant"
                        )));
                    }
                    eliminate(ring, &mut steps, i, row, col, &c);
                    betti[i] -= 1;
                    betti[i + 1] -= 1;
                    for (k, drop) in [(i, col), (i + 1, row)] {
                        if let Some(Some(s)) = shifts.get_mut(k) {
                            s.remove(drop);
                        }
                    }
                    continue 'outer;
                }
            }
        }
        break;
    }
    while steps.last().is_some_and(|s| s.is_empty()) {
        steps.pop();
    }
    let mut terminated = r.terminated;
    // trailing zeros mean the shortened resolution stops earlier
    if let Some(pos) = betti.iter().skip(1).position(|&b| b == 0) {
        betti.truncate(pos + 1);
        shifts.truncate(pos + 1);
        steps.truncate(pos);
        terminated = true;
    }
    let pr = ring.poly_ring();
    let steps = steps
        .into_iter()
        .zip(&betti)
        .map(|(rows, &w)| Matrix::from_rows(pr, w, rows).expect("consistent widths"))
        .collect();
    Ok(ResolutionReport {
        module: r.module.clone(),
        steps,
        betti,
        terminated,
        cutoff: r.cutoff,
        graded: r.graded,
        shifts,
        minimal: true,
    })
}

/// Pivots on the constant `u = steps[i][row][col]`.
fn eliminate(ring: &RingSpec, steps: &mut [Vec<Vec<crate::Poly>>], i: usize, row: usize, col: usize, u: &Rational) {
    let pivot = steps[i][row].clone();
    let inv = Rational::from_integer(1.into()) / u;
    for (r2, other) in steps[i].iter_mut().enumerate() {
        if r2 == row || other[col].is_zero() {
            continue;
        }
        let factor = other[col].scale(&inv);
        for (c, p) in other.iter_mut().enumerate() {
            if !pivot[c].is_zero() {
                *p = ring.reduce(&(&*p - &(&factor * &pivot[c])));
            }
        }
    }
    steps[i].remove(row);
    for r in steps[i].iter_mut() {
        r.remove(col);
    }
    if i > 0 {
        steps[i - 1].remove(col);
    }
    if let Some(next) = steps.get_mut(i + 1) {
        for r in next.iter_mut() {
            r.remove(row);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdVerdict {
    Finite(usize),
    AtLeast(usize),
}

impl fmt::Display for PdVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdVerdict::Finite(d) => write!(f, "Finite({d})"),
            PdVerdict::AtLeast(c) => write!(f, "AtLeast({c})"),
        }
    }
}

/// Projective dimension from the minimalized resolution up to `cutoff`.
pub fn projective_dimension(m: &Presentation, cutoff: usize) -> Result<PdVerdict> {
    let res = minimalize(&free_resolution(m, cutoff)?)?;
    Ok(verdict(&res))
}

/// Verdict for an already minimal resolution.
pub fn verdict(res: &ResolutionReport) -> PdVerdict {
    match res.length() {
        Some(d) if d <= res.cutoff => PdVerdict::Finite(d),
        _ => PdVerdict::AtLeast(res.cutoff),
    }
}

/// Jacobian criterion: `I` plus the `c×c` minors of the Jacobian matrix,
/// `c = s - dim R`, is the unit ideal.
pub fn jacobian_regular(ring: &RingSpec) -> bool {
    let gens = ring.ideal();
    if gens.is_empty() {
        return true;
    }
    let dim = ring.krull_dimension();
    if dim < 0 {
        return true;
    }
    let s = ring.nvars();
    let c = s - dim as usize;
    if c == 0 {
        return true;
    }
    let rows: Vec<Vec<crate::Poly>> = gens
        .iter()
        .map(|f| (0..s).map(|j| f.partial_derivative(j, 1).expect("first derivative")).collect())
        .collect();
    let jac = Matrix::from_rows(ring.poly_ring(), s, rows).expect("jacobian");
    let mut ideal = gens.to_vec();
    for rs in combinations(gens.len(), c) {
        for cs in combinations(s, c) {
            let det = jac.submatrix(&rs, &cs).determinant();
            if !det.is_zero() {
                ideal.push(det);
            }
        }
    }
    ideal_groebner(ring.poly_ring(), &ideal).iter().any(|g| g.is_constant() && !g.is_zero())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffmod::{omega_presentation, omega_presentation_with, DeltaBasis};
    use crate::parse::{parse_monomial_list, parse_poly, parse_presentation, parse_ringspec};

    fn cusp() -> RingSpec {
        parse_ringspec("vars=[x,y]; weights=[2,3]; ideal=[y^2 - x^3]; assume_domain=true;").unwrap()
    }

    #[test]
    fn cusp_first_order() {
        let r = cusp();
        let res = free_resolution(&omega_presentation(&r, 1), 6).unwrap();
        assert_eq!(res.betti, vec![2, 1]);
        assert!(res.terminated);
        let row = res.steps[0].row(0);
        assert_eq!(row.get(0), &parse_poly("-3*x^2", &r).unwrap());
        assert_eq!(row.get(1), &parse_poly("2*y", &r).unwrap());
        assert_eq!(projective_dimension(&omega_presentation(&r, 1), 6).unwrap(), PdVerdict::Finite(1));
    }

    #[test]
    fn cusp_second_order_matrix() {
        let r = cusp();
        let ms = parse_monomial_list("x^2, y^2, x*y, x, y", &r).unwrap();
        let b = DeltaBasis::with_monomials(&r, 2, ms).unwrap();
        let res = free_resolution(&omega_presentation_with(&r, &b), 6).unwrap();
        assert_eq!(res.betti, vec![5, 3]);
        let expect = [
            ["-3*x", "1", "0", "3*x^2", "0"],
            ["-6*x^2", "x", "2*y", "7*x^3", "-2*x*y"],
            ["-3*x*y", "3*y", "-3*x^2", "6*x^2*y", "-y^2"],
        ];
        for (i, row) in expect.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let want = r.reduce(&parse_poly(e, &r).unwrap());
                assert_eq!(res.steps[0].get(i, j), &want, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn free_modules() {
        let r = RingSpec::polynomial(&["x", "y"]);
        let res = free_resolution(&omega_presentation(&r, 2), 3).unwrap();
        assert_eq!(res.betti, vec![5]);
        assert!(res.terminated);
        assert_eq!(verdict(&res), PdVerdict::Finite(0));
    }

    #[test]
    fn unit_entries_are_eliminated() {
        let p = parse_presentation(
            "vars=[x,y]; generators=[a,b]; degrees=[0,1]; relations=[[x, 1], [y^2, y]];",
        )
        .unwrap();
        let res = free_resolution(&p, 4).unwrap();
        let min = minimalize(&res).unwrap();
        assert_eq!(min.betti[0], res.betti[0] - 1);
        assert_eq!(min.betti[1], res.betti[1] - 1);
        assert!(min.is_complex());
        assert!(min.steps.iter().all(|m| (0..m.nrows())
            .all(|i| (0..m.ncols()).all(|j| m.get(i, j).constant_term().is_zero()))));
    }

    #[test]
    fn koszul_complex() {
        let p = parse_presentation("vars=[x,y,z]; generators=[a]; degrees=[0]; relations=[[x],[y],[z]];").unwrap();
        let res = free_resolution(&p, 6).unwrap();
        assert_eq!(res.betti, vec![1, 3, 3, 1]);
        assert!(res.is_complex());
        assert_eq!(projective_dimension(&p, 6).unwrap(), PdVerdict::Finite(3));
        assert_eq!(projective_dimension(&p, 2).unwrap(), PdVerdict::AtLeast(2));
    }

    #[test]
    fn residue_field_of_the_cusp_never_stops() {
        let r = cusp();
        let p = Presentation::new(
            r.clone(),
            vec![crate::GeneratorLabel::plain("a")],
            Some(vec![0]),
            vec![Vector::new(vec![r.var(0)]), Vector::new(vec![r.var(1)])],
        )
        .unwrap();
        let res = minimalize(&free_resolution(&p, 4).unwrap()).unwrap();
        assert_eq!(verdict(&res), PdVerdict::AtLeast(4));
        assert!(res.betti.iter().all(|&b| b > 0));
        assert!(res.is_complex());
        assert!(res.growth_note().is_some());
    }

    #[test]
    fn non_local_input() {
        let p = parse_presentation("vars=[x]; ideal=[x^2 - 1]; generators=[a]; relations=[[x + 1]];").unwrap();
        let res = free_resolution(&p, 3).unwrap();
        assert!(matches!(minimalize(&res), Err(Error::NotLocal(_))));
    }

    #[test]
    fn jacobian() {
        assert!(jacobian_regular(&RingSpec::polynomial(&["x", "y"])));
        assert!(!jacobian_regular(&cusp()));
        let ex = parse_ringspec("vars=[x,y,z]; weights=[4,5,6]; ideal=[y^2 - x*z, z^2 - x^3];").unwrap();
        assert!(!jacobian_regular(&ex));
        let smooth = parse_ringspec("vars=[x,y]; ideal=[y - x^2];").unwrap();
        assert!(jacobian_regular(&smooth));
        let circle = parse_ringspec("vars=[x,y]; ideal=[x^2 + y^2 - 1];").unwrap();
        assert!(jacobian_regular(&circle));
    }
}
