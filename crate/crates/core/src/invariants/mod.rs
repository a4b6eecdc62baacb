//! The order-8 automorphism of E2 and its fixed points on each page.
//!
//! The automorphism is `u ↦ -u`, `t ↦ -t`, `y1 ↦ y1 - y2`, `y2 ↦ y1 + y2`,
//! `x1 ↦ x1 - x2`, `x2 ↦ x1 + x2`. Since 8 is invertible mod 3, the fixed
//! subspace of a class space is the image of the averaging projector
//! `π = 8⁻¹ Σ αⁱ = 2 Σ αⁱ`; it is also cross-checked as `ker(α - 1)`.

mod labels;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gca::{AlgebraMap, Bidegree, Element, Gca, GcaError};
use crate::linalg::{left_kernel, LinalgError, Matrix, Subspace, F3};
use crate::spectral::{phi, psi, E2Algebra, Page, SpectralError, SpectralSequence};

pub use labels::{invariant_table, named_symbols, InvariantTable, LabelCheck, LabelStatus, SlotSpanCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Gca(#[from] GcaError),
    #[error("the action does not preserve the cycles or boundaries at {0}")]
    NotStable(Bidegree),
    #[error("group order {0} is divisible by 3, so there is no averaging projector")]
    OrderNotInvertible(u32),
    #[error("bidegree {0} is outside the computed range")]
    OutOfRange(Bidegree),
}

/// An automorphism given on generators, with its declared order.
#[derive(Clone, Debug)]
pub struct ActionSpec {
    map: AlgebraMap,
    order: u32,
}

impl ActionSpec {
    pub fn new(map: AlgebraMap, order: u32) -> Self {
        ActionSpec { map, order }
    }

    pub fn from_named(gca: &Gca, images: &[(&str, &str)], order: u32) -> Result<Self, GcaError> {
        let named: Vec<(&str, Element)> =
            images.iter().map(|(g, s)| Ok((*g, gca.parse(s)?))).collect::<Result<_, GcaError>>()?;
        Ok(ActionSpec { map: AlgebraMap::from_named(gca, &named)?, order })
    }

    /// The order-8 action on E2.
    pub fn c8(gca: &Gca) -> Self {
        Self::from_named(
            gca,
            &[("u", "-u"), ("t", "-t"), ("y1", "y1 - y2"), ("y2", "y1 + y2"), ("x1", "x1 - x2"), ("x2", "x1 + x2")],
            8,
        )
        .expect("action images parse")
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn map(&self) -> &AlgebraMap {
        &self.map
    }

    /// `α^k(e)`.
    pub fn act(&self, gca: &Gca, e: &Element, k: u32) -> Element {
        let mut out = e.clone();
        for _ in 0..k {
            out = self.map.apply(gca, &out);
        }
        out
    }
}

pub fn act(spec: &ActionSpec, gca: &Gca, e: &Element, k: u32) -> Element {
    spec.act(gca, e, k)
}

/// Fixed points of a linear map of finite order, computed two ways.
#[derive(Clone, Debug)]
pub struct FixedSpace {
    pub projector: Matrix,
    /// Row space of the projector.
    pub image: Subspace,
    /// `{v : v·(A - 1) = 0}`.
    pub kernel: Subspace,
}

impl FixedSpace {
    pub fn dim(&self) -> usize {
        self.image.dim()
    }

    pub fn methods_agree(&self) -> bool {
        self.image == self.kernel
    }
}

/// `π = |G|⁻¹ Σ_{i<order} Aⁱ` and the fixed subspace of `A` (row convention).
pub fn fixed_space(a: &Matrix, order: u32) -> Result<FixedSpace, InvariantError> {
    let inv = F3::new(order as i64).inv().ok_or(InvariantError::OrderNotInvertible(order))?;
    let n = a.rows();
    let mut sum = Matrix::zeros(n, n);
    let mut power = Matrix::identity(n);
    for _ in 0..order {
        sum = sum.add(&power);
        power = power.mul(a);
    }
    let projector = sum.scale(inv);
    let image = Subspace::from_matrix(&projector);
    let kernel = left_kernel(&a.sub(&Matrix::identity(n)));
    Ok(FixedSpace { projector, image, kernel })
}

/// Whether `π² = π` and `Aπ = πA = π`.
pub fn projector_laws_hold(a: &Matrix, p: &Matrix) -> bool {
    p.mul(p) == *p && a.mul(p) == *p && p.mul(a) == *p
}

/// The action on the E2 coordinates of slot `b` (row `i` is the image of the
/// `i`-th basis monomial).
pub fn slot_action(e2: &E2Algebra, spec: &ActionSpec, b: Bidegree) -> Result<Matrix, InvariantError> {
    let basis = e2.basis(b);
    let rows: Vec<Vec<F3>> = basis
        .monomials()
        .iter()
        .map(|m| basis.coordinates(&spec.map.apply(e2.gca(), &Element::monomial(m.clone(), F3::ONE))))
        .collect::<Result<_, _>>()?;
    Ok(Matrix::from_rows(basis.len(), &rows))
}

/// The induced action on the class space `Z/B` of a page slot, after
/// checking that `Z` and `B` are both stable.
pub fn class_action(e2: &E2Algebra, spec: &ActionSpec, page: &Page, b: Bidegree) -> Result<Matrix, InvariantError> {
    let slot = page.slot(b).ok_or(InvariantError::OutOfRange(b))?;
    let a = slot_action(e2, spec, b)?;
    for row in slot.z.rows() {
        if !slot.z.contains(&a.vec_mul(row))? {
            return Err(InvariantError::NotStable(b));
        }
    }
    for row in slot.b.rows() {
        if !slot.b.contains(&a.vec_mul(row))? {
            return Err(InvariantError::NotStable(b));
        }
    }
    let sq = slot.subquotient()?;
    let rows: Vec<Vec<F3>> =
        sq.representatives().iter_rows().map(|r| sq.class_coords(&a.vec_mul(r))).collect::<Result<_, _>>()?;
    Ok(Matrix::from_rows(sq.dim(), &rows))
}

#[derive(Clone, Debug)]
pub struct SlotInvariants {
    pub bidegree: Bidegree,
    pub class_dim: usize,
    pub action: Matrix,
    pub fixed: FixedSpace,
}

impl SlotInvariants {
    pub fn dim(&self) -> usize {
        self.fixed.dim()
    }

    pub fn projector_ok(&self) -> bool {
        projector_laws_hold(&self.action, &self.fixed.projector)
    }
}

/// Fixed subspace of E6 at `b`, in the canonical class coordinates.
pub fn slot_invariants(ss: &SpectralSequence, spec: &ActionSpec, b: Bidegree) -> Result<SlotInvariants, InvariantError> {
    if !ss.in_range(b) {
        return Err(InvariantError::OutOfRange(b));
    }
    let action = class_action(ss.e2_algebra(), spec, ss.e6(), b)?;
    let fixed = fixed_space(&action, spec.order())?;
    Ok(SlotInvariants { bidegree: b, class_dim: action.rows(), action, fixed })
}

/// Invariants of every exact E6 slot, keyed by bidegree.
pub fn all_slot_invariants(
    ss: &SpectralSequence,
    spec: &ActionSpec,
) -> Result<BTreeMap<Bidegree, SlotInvariants>, InvariantError> {
    let keys: Vec<Bidegree> = ss.e6().slots().map(|(b, _)| b).filter(|b| ss.in_range(*b)).collect();
    let found: Vec<SlotInvariants> =
        keys.par_iter().map(|&b| slot_invariants(ss, spec, b)).collect::<Result<_, _>>()?;
    Ok(found.into_iter().map(|s| (s.bidegree, s)).collect())
}

/// `Σ_{n+m=d} dim (E6^{n,m})^α` for `d = 0..=max_degree`.
pub fn poincare_from_invariants(
    ss: &SpectralSequence,
    spec: &ActionSpec,
    max_degree: i32,
) -> Result<Vec<i64>, InvariantError> {
    if max_degree > ss.max_total_degree() {
        return Err(InvariantError::OutOfRange(Bidegree::new(max_degree, 0)));
    }
    let inv = all_slot_invariants(ss, spec)?;
    let mut out = vec![0i64; max_degree as usize + 1];
    for (b, s) in &inv {
        if b.total() <= max_degree {
            out[b.total() as usize] += s.dim() as i64;
        }
    }
    Ok(out)
}

/// Slots where the invariant dimension differs from the slot 12 higher in
/// `m`, or (for `n >= 5`) from the slot 4 further in `n`. Only pairs that
/// both lie in `dims` are compared.
pub fn invariant_periodicity_breaks(dims: &BTreeMap<Bidegree, usize>) -> Vec<(Bidegree, Bidegree)> {
    let mut out = Vec::new();
    for (&b, &d) in dims {
        let mut partners = vec![b + Bidegree::new(0, 12)];
        if b.n >= 5 {
            partners.push(b + Bidegree::new(4, 0));
        }
        for p in partners {
            if dims.get(&p).is_some_and(|&e| e != d) {
                out.push((b, p));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SquareKind {
    PsiSquared,
    PhiSquared,
}

#[derive(Clone, Debug, Serialize)]
pub struct SquareCheck {
    pub kind: SquareKind,
    pub bidegree: Bidegree,
    pub commutes: bool,
}

/// Checks `α∘Ψ² = Ψ²∘α` on every slot whose image `(n, m+12)` is exact, and
/// `α∘Φ² = Φ²∘α` on every slot with `n >= 5` whose image `(n+4, m)` is exact.
pub fn verify_commuting_squares(ss: &SpectralSequence, spec: &ActionSpec) -> Result<Vec<SquareCheck>, InvariantError> {
    let max = ss.max_total_degree();
    let e2 = ss.e2_algebra();
    let mut jobs = Vec::new();
    for n in 0..=max {
        for m in 0..=(max - n) {
            let b = Bidegree::new(n, m);
            if b.total() + 12 <= max {
                jobs.push((SquareKind::PsiSquared, b));
            }
            if n >= 5 && b.total() + 4 <= max {
                jobs.push((SquareKind::PhiSquared, b));
            }
        }
    }
    jobs.par_iter()
        .map(|&(kind, b)| {
            let (map, target) = match kind {
                SquareKind::PsiSquared => {
                    let mid = b + Bidegree::new(0, 6);
                    (psi(ss, b)?.then(&psi(ss, mid)?), mid + Bidegree::new(0, 6))
                }
                SquareKind::PhiSquared => {
                    let mid = b + Bidegree::new(2, 0);
                    (phi(ss, b)?.then(&phi(ss, mid)?), mid + Bidegree::new(2, 0))
                }
            };
            let a_src = class_action(e2, spec, ss.e6(), b)?;
            let a_tgt = class_action(e2, spec, ss.e6(), target)?;
            let commutes = a_src.mul(&map.matrix) == map.matrix.mul(&a_tgt);
            Ok(SquareCheck { kind, bidegree: b, commutes })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct DifferentialEquivariance {
    pub r: u32,
    pub bidegree: Bidegree,
    pub commutes: bool,
}

/// Checks that the action commutes with the induced differential `d_r` on
/// every page `r = 2..5` and every slot whose target is exact.
pub fn verify_action_commutes_with_differentials(
    ss: &SpectralSequence,
    spec: &ActionSpec,
) -> Result<Vec<DifferentialEquivariance>, InvariantError> {
    let max = ss.max_total_degree();
    let e2 = ss.e2_algebra();
    let mut jobs = Vec::new();
    for r in 2..=5u32 {
        for n in 0..=max {
            for m in 0..=(max - n) {
                let b = Bidegree::new(n, m);
                let t = b + crate::spectral::RuleSet::shift_for(r);
                if t.m >= 0 && t.total() <= max {
                    jobs.push((r, b));
                }
            }
        }
    }
    jobs.par_iter()
        .map(|&(r, b)| {
            let page = ss.page(r)?;
            let d = ss.induced_differential(r, b)?.ok_or(InvariantError::OutOfRange(b))?;
            let t = b + crate::spectral::RuleSet::shift_for(r);
            let a_src = class_action(e2, spec, page, b)?;
            let a_tgt = class_action(e2, spec, page, t)?;
            Ok(DifferentialEquivariance { r, bidegree: b, commutes: a_src.mul(&d) == d.mul(&a_tgt) })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_examples() {
        let g = Gca::e2();
        let a = ActionSpec::c8(&g);
        let w = g.parse("u*y1*y2").unwrap();
        assert_eq!(a.act(&g, &w, 1), w);
        assert_eq!(a.act(&g, &g.parse("t").unwrap(), 1), g.parse("-t").unwrap());
        assert_eq!(a.act(&g, &g.parse("y1").unwrap(), 4), g.parse("-y1").unwrap());
        assert_eq!(a.act(&g, &w, 0), w);
    }

    #[test]
    fn order_eight_on_small_slots() {
        let e2 = E2Algebra::new();
        let a = ActionSpec::c8(e2.gca());
        for n in 0..=12 {
            for m in 0..=(12 - n) {
                let mat = slot_action(&e2, &a, Bidegree::new(n, m)).unwrap();
                assert_eq!(mat.pow(8), Matrix::identity(mat.rows()), "({n},{m})");
            }
        }
    }

    #[test]
    fn fixed_space_of_rotation() {
        // the 2x2 generator has no fixed vectors; its square does not either,
        // but the identity fixes everything
        let r = Matrix::from_i64(2, 2, &[1, 2, 1, 1]);
        let f = fixed_space(&r, 8).unwrap();
        assert_eq!(f.dim(), 0);
        assert!(f.methods_agree());
        let id = fixed_space(&Matrix::identity(3), 8).unwrap();
        assert_eq!(id.dim(), 3);
        assert!(matches!(fixed_space(&r, 3), Err(InvariantError::OrderNotInvertible(3))));
    }

    #[test]
    fn small_slot_invariants() {
        let ss = SpectralSequence::compute(6, 1).unwrap();
        let a = ActionSpec::c8(ss.e2_algebra().gca());
        assert_eq!(slot_invariants(&ss, &a, Bidegree::new(2, 1)).unwrap().dim(), 1);
        assert_eq!(slot_invariants(&ss, &a, Bidegree::new(3, 1)).unwrap().dim(), 2);
        assert_eq!(slot_invariants(&ss, &a, Bidegree::new(1, 0)).unwrap().dim(), 0);
    }
}
