//! Vertical (t^3) and horizontal periodicity maps on E6, as matrices on the
//! canonical class bases.

use serde::Serialize;

use super::{corollary_representatives, SpectralError, SpectralSequence};
use crate::gca::{Bidegree, Element};
use crate::linalg::{Matrix, Subquotient, F3};

/// A linear map between two E6 class spaces. Row `i` of `matrix` is the
/// image of the `i`-th canonical class of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMap {
    pub source: Bidegree,
    pub target: Bidegree,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassMapSummary {
    pub source: Bidegree,
    pub target: Bidegree,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl ClassMap {
    pub fn is_bijective(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && self.matrix.rank() == self.matrix.rows()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ClassMap) -> ClassMap {
        assert_eq!(self.target, other.source, "maps must compose");
        ClassMap { source: self.source, target: other.target, matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn apply(&self, coords: &[F3]) -> Vec<F3> {
        self.matrix.vec_mul(coords)
    }

    pub fn summary(&self) -> ClassMapSummary {
        ClassMapSummary {
            source: self.source,
            target: self.target,
            source_dim: self.matrix.rows(),
            target_dim: self.matrix.cols(),
            rank: self.matrix.rank(),
        }
    }
}

fn e6_subquotient(ss: &SpectralSequence, b: Bidegree) -> Result<Subquotient, SpectralError> {
    if !ss.in_range(b) {
        return Err(SpectralError::OutOfRange(b));
    }
    Ok(ss.e6().slot(b).ok_or(SpectralError::OutOfRange(b))?.subquotient()?)
}

/// Class coordinates of a homogeneous element of bidegree `b` in E6.
pub(crate) fn e6_class(ss: &SpectralSequence, b: Bidegree, e: &Element) -> Result<Vec<F3>, SpectralError> {
    let sq = e6_subquotient(ss, b)?;
    let v = ss.e2_algebra().coords(b, e)?;
    if !sq.cycles().contains(&v)? {
        return Err(SpectralError::NotACycle(b));
    }
    Ok(sq.class_coords(&v)?)
}

/// Multiplication by `t^3`, `E6(n,m) -> E6(n,m+6)`. Fails if `t^3` does not
/// carry cycles to cycles and boundaries to boundaries.
pub fn psi(ss: &SpectralSequence, b: Bidegree) -> Result<ClassMap, SpectralError> {
    let target = b + Bidegree::new(0, 6);
    let src = e6_subquotient(ss, b)?;
    let tgt = e6_subquotient(ss, target)?;
    let e2 = ss.e2_algebra();
    let gca = e2.gca();
    let t3 = gca.pow(&gca.gen("t")?, 3);
    let times_t3 = |v: &[F3]| -> Result<Vec<F3>, SpectralError> {
        let e = gca.mul(&t3, &e2.element(b, v));
        Ok(e2.coords(target, &e)?)
    };
    for row in src.boundaries().rows() {
        if !tgt.boundaries().contains(&times_t3(row)?)? {
            return Err(SpectralError::NotACycle(b));
        }
    }
    let mut rows = Vec::with_capacity(src.dim());
    for rep in src.representatives().iter_rows() {
        let v = times_t3(rep)?;
        if !tgt.cycles().contains(&v)? {
            return Err(SpectralError::NotACycle(b));
        }
        rows.push(tgt.class_coords(&v)?);
    }
    Ok(ClassMap { source: b, target, matrix: Matrix::from_rows(tgt.dim(), &rows) })
}

/// The horizontal map `E6(n,m) -> E6(n+2,m)` for `n >= 5`, sending the
/// survival representatives at `(n,m)` to those at `(n+2,m)` in order.
pub fn phi(ss: &SpectralSequence, b: Bidegree) -> Result<ClassMap, SpectralError> {
    if b.n < 5 {
        return Err(SpectralError::OutOfRange(b));
    }
    let target = b + Bidegree::new(2, 0);
    let src = e6_subquotient(ss, b)?;
    let tgt = e6_subquotient(ss, target)?;
    let gca = ss.e2_algebra().gca();
    let from = corollary_representatives(gca, b);
    let to = corollary_representatives(gca, target);
    if from.len() != src.dim() || to.len() != from.len() {
        return Err(SpectralError::BasisMismatch(b));
    }
    let classes = |list: &[Element], at: Bidegree, width: usize| -> Result<Matrix, SpectralError> {
        let rows: Vec<Vec<F3>> = list.iter().map(|e| e6_class(ss, at, e)).collect::<Result<_, _>>()?;
        Ok(Matrix::from_rows(width, &rows))
    };
    let ms = classes(&from, b, src.dim())?;
    let mt = classes(&to, target, tgt.dim())?;
    let inv = ms.inverse().ok_or(SpectralError::BasisMismatch(b))?;
    Ok(ClassMap { source: b, target, matrix: inv.mul(&mt) })
}

/// Whether `(x1 + s*x2)^q` has the same E6 class at `(2q, 0)` as
/// `x1^q + x2^q - s*x1^(q-1)*x2` (q even) or `x1^q + s*x2^q` (q odd), for
/// both signs `s = ±1`.
pub fn binomial_identity_holds(ss: &SpectralSequence, q: u32) -> Result<bool, SpectralError> {
    let b = Bidegree::new(2 * q as i32, 0);
    let gca = ss.e2_algebra().gca();
    for s in [F3::ONE, F3::TWO] {
        let x1 = gca.gen("x1")?;
        let x2 = gca.gen("x2")?;
        let lhs = gca.pow(&(&x1 + &x2.scale(s)), q);
        let x1q = gca.pow(&x1, q);
        let x2q = gca.pow(&x2, q);
        let rhs = if q % 2 == 0 {
            let mixed = gca.mul(&gca.pow(&x1, q - 1), &x2);
            &(&x1q + &x2q) - &mixed.scale(s)
        } else {
            &x1q + &x2q.scale(s)
        };
        if e6_class(ss, b, &lhs)? != e6_class(ss, b, &rhs)? {
            return Ok(false);
        }
    }
    Ok(true)
}
