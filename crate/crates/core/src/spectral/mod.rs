//! The spectral sequence of the central extension of the extraspecial group
//! of order 27, computed page by page inside E2.
//!
//! Every page stores, for each bidegree `(n, m)` with `n + m <= cutoff`, a
//! pair of subspaces `B ⊆ Z` of the E2 coordinate space; the page itself is
//! the subquotient `Z/B`. Turning a page applies a [`RuleSet`] to a spanning
//! set of each slot's cycles, checks that the induced map on `Z/B` is well
//! defined, and keeps only the combinations whose image is a boundary.

mod checks;
mod declared;
mod export;
mod periodicity;
mod rules;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gca::{Bidegree, Element, Gca, GcaError, MonomialBasis};
use crate::linalg::{axpy, left_kernel, LinalgError, Matrix, Solver, Subquotient, Subspace, F3};

pub use checks::{
    d_squared_zero, dimension_growth, negative_control, t_cubed_is_permanent, DSquaredCheck, NegativeControl,
    CORRUPTED_T2W_IMAGE,
};
pub use declared::{
    corner_dims, corollary_representatives, declared_e6, declared_slot, verify_e6, DeclaredSlot, E6Case,
    E6Descriptor, E6Mismatch, E6Report,
};
pub use export::{export_page, PageDocument, SlotDocument};
pub use periodicity::{binomial_identity_holds, phi, psi, ClassMap, ClassMapSummary};
pub use rules::{multipliers, slot_differential, w_element, PatternRule, RuleKind, RuleMode, RuleSet, SlotDifferential};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Gca(#[from] GcaError),
    #[error("d5 constant must be 1 or 2, got {0}")]
    InvalidK(u8),
    #[error("bidegree {0} is outside the computed range")]
    OutOfRange(Bidegree),
    #[error("page index {0} is not in 2..=6")]
    BadPage(u32),
    #[error("pattern lhs must be a nonzero element")]
    ZeroPattern,
    #[error("pattern for d{r} maps {lhs} to {rhs}")]
    PatternShift { lhs: Bidegree, rhs: Bidegree, r: u32 },
    #[error("differentials are not well defined: {}", summarize(.0))]
    NotWellDefined(Vec<TurnIssue>),
    #[error("element is not a cycle at {0}")]
    NotACycle(Bidegree),
    #[error("map at {0} is not defined on the listed basis")]
    BasisMismatch(Bidegree),
}

fn summarize(issues: &[TurnIssue]) -> String {
    let shown: Vec<String> = issues.iter().take(8).map(|i| format!("d{} {} {:?}", i.r, i.source, i.kind)).collect();
    format!("{} issue(s): {}", issues.len(), shown.join(", "))
}

/// E2 = Λ(u) ⊗ F3[t] ⊗ Λ(y1,y2) ⊗ F3[x1,x2] with a cache of slot bases.
#[derive(Debug)]
pub struct E2Algebra {
    gca: Gca,
    bases: RwLock<HashMap<Bidegree, Arc<MonomialBasis>>>,
}

impl Default for E2Algebra {
    fn default() -> Self {
        Self::new()
    }
}

impl E2Algebra {
    pub fn new() -> Self {
        E2Algebra { gca: Gca::e2(), bases: RwLock::new(HashMap::new()) }
    }

    pub fn gca(&self) -> &Gca {
        &self.gca
    }

    pub fn basis(&self, b: Bidegree) -> Arc<MonomialBasis> {
        if let Some(found) = self.bases.read().expect("basis cache lock").get(&b) {
            return found.clone();
        }
        let basis = Arc::new(self.gca.monomial_basis(b));
        self.bases.write().expect("basis cache lock").entry(b).or_insert(basis).clone()
    }

    pub fn dim(&self, b: Bidegree) -> usize {
        self.basis(b).len()
    }

    pub fn parse(&self, s: &str) -> Result<Element, GcaError> {
        self.gca.parse(s)
    }

    pub fn coords(&self, b: Bidegree, e: &Element) -> Result<Vec<F3>, GcaError> {
        self.basis(b).coordinates(e)
    }

    pub fn element(&self, b: Bidegree, v: &[F3]) -> Element {
        self.basis(b).element(v)
    }

    /// Bidegree of a nonzero homogeneous element.
    pub fn bidegree_of(&self, e: &Element) -> Result<Option<Bidegree>, GcaError> {
        self.gca.bidegree(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slot {
    pub z: Subspace,
    pub b: Subspace,
    /// Set when a differential out of this slot would land beyond the
    /// cutoff, so `z` may be too large.
    pub provisional: bool,
}

impl Slot {
    pub fn dim(&self) -> usize {
        self.z.dim() - self.b.dim()
    }

    pub fn subquotient(&self) -> Result<Subquotient, LinalgError> {
        Subquotient::new(self.z.clone(), self.b.clone())
    }
}

#[derive(Clone, Debug)]
pub struct Page {
    pub r: u32,
    pub cutoff: i32,
    slots: BTreeMap<Bidegree, Slot>,
}

impl Page {
    /// E2 up to total degree `cutoff`: full cycles, no boundaries.
    pub fn e2(e2: &E2Algebra, cutoff: i32) -> Page {
        let mut slots = BTreeMap::new();
        for n in 0..=cutoff.max(-1) {
            for m in 0..=(cutoff - n) {
                let b = Bidegree::new(n, m);
                let d = e2.dim(b);
                slots.insert(b, Slot { z: Subspace::full(d), b: Subspace::zero(d), provisional: false });
            }
        }
        Page { r: 2, cutoff, slots }
    }

    pub fn from_slots(r: u32, cutoff: i32, slots: BTreeMap<Bidegree, Slot>) -> Page {
        Page { r, cutoff, slots }
    }

    pub fn slot(&self, b: Bidegree) -> Option<&Slot> {
        self.slots.get(&b)
    }

    pub fn slots(&self) -> impl Iterator<Item = (Bidegree, &Slot)> + '_ {
        self.slots.iter().map(|(&b, s)| (b, s))
    }

    pub fn dim(&self, b: Bidegree) -> Option<usize> {
        self.slot(b).map(Slot::dim)
    }

    pub fn contains(&self, b: Bidegree) -> bool {
        self.slots.contains_key(&b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IssueKind {
    /// A spanning representative is not in the source cycles.
    RepresentativeNotCycle,
    /// An image is not in the target cycles.
    ImageNotCycle,
    /// Some source boundary maps outside the target boundaries.
    NotWellDefined,
    /// After the turn a boundary space is not inside its cycle space.
    BoundaryNotInCycles,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TurnIssue {
    pub r: u32,
    pub source: Bidegree,
    pub kind: IssueKind,
}

struct SlotTurn {
    source: Bidegree,
    new_z: Option<Subspace>,
    provisional: bool,
    target: Option<(Bidegree, Vec<Vec<F3>>)>,
    issues: Vec<TurnIssue>,
}

fn combine(coeffs: &[F3], rows: &[Vec<F3>], len: usize) -> Vec<F3> {
    let mut v = vec![F3::ZERO; len];
    for (c, row) in coeffs.iter().zip(rows) {
        axpy(&mut v, *c, row);
    }
    v
}

fn stack(rows: &[Vec<F3>], extra: &Subspace, width: usize) -> Matrix {
    let all: Vec<&[F3]> = rows.iter().map(Vec::as_slice).chain(extra.rows()).collect();
    Matrix::from_rows(width, &all)
}

fn turn_slot(e2: &E2Algebra, page: &Page, rules: &RuleSet, b: Bidegree) -> Result<SlotTurn, SpectralError> {
    let slot = page.slot(b).ok_or(SpectralError::OutOfRange(b))?;
    let target = b + rules.shift();
    let mut turn = SlotTurn { source: b, new_z: None, provisional: slot.provisional, target: None, issues: vec![] };
    if target.m < 0 {
        return Ok(turn);
    }
    let Some(diff) = slot_differential(e2, page, rules, b)? else {
        turn.provisional = true;
        return Ok(turn);
    };
    let tslot = page.slot(target).ok_or(SpectralError::OutOfRange(target))?;
    let (ds, dt) = (slot.z.ambient_dim(), tslot.z.ambient_dim());
    let issue = |kind| TurnIssue { r: rules.r, source: b, kind };

    for s in &diff.sources {
        if !slot.z.contains(s)? {
            turn.issues.push(issue(IssueKind::RepresentativeNotCycle));
            break;
        }
    }
    for img in &diff.images {
        if !tslot.z.contains(img)? {
            turn.issues.push(issue(IssueKind::ImageNotCycle));
            break;
        }
    }

    // combinations of representatives that are boundaries must map to boundaries
    let ns = diff.sources.len();
    let rel = left_kernel(&stack(&diff.sources, &slot.b, ds));
    for c in rel.rows() {
        let img = combine(&c[..ns], &diff.images, dt);
        if !tslot.b.contains(&img)? {
            turn.issues.push(issue(IssueKind::NotWellDefined));
            break;
        }
    }

    let hits = left_kernel(&stack(&diff.images, &tslot.b, dt));
    let mut cycles: Vec<Vec<F3>> = hits.rows().map(|c| combine(&c[..ns], &diff.sources, ds)).collect();
    cycles.extend(slot.b.rows().map(<[F3]>::to_vec));
    turn.new_z = Some(Subspace::span(ds, &cycles));
    turn.target = Some((target, diff.images));
    Ok(turn)
}

/// Applies `rules` to every slot of `page`. Issues are collected rather than
/// raised so that callers can report them.
pub fn turn_page(e2: &E2Algebra, page: &Page, rules: &RuleSet) -> Result<(Page, Vec<TurnIssue>), SpectralError> {
    if rules.r != page.r {
        return Err(SpectralError::BadPage(rules.r));
    }
    let keys: Vec<Bidegree> = page.slots.keys().copied().collect();
    let turns: Vec<SlotTurn> =
        keys.par_iter().map(|&b| turn_slot(e2, page, rules, b)).collect::<Result<_, SpectralError>>()?;

    let mut slots = page.slots.clone();
    let mut issues = Vec::new();
    for t in &turns {
        let s = slots.get_mut(&t.source).expect("slot exists");
        if let Some(z) = &t.new_z {
            s.z = z.clone();
        }
        s.provisional = t.provisional;
        issues.extend(t.issues.iter().cloned());
    }
    for t in turns {
        if let Some((target, images)) = t.target {
            let s = slots.get_mut(&target).expect("target slot exists");
            let rows: Vec<&[F3]> = s.b.rows().chain(images.iter().map(Vec::as_slice)).collect();
            s.b = Subspace::span(s.b.ambient_dim(), &rows);
        }
    }
    for (&b, s) in &slots {
        if !s.b.is_subspace_of(&s.z)? {
            issues.push(TurnIssue { r: rules.r, source: b, kind: IssueKind::BoundaryNotInCycles });
        }
    }
    issues.sort_by_key(|i| (i.source, i.r));
    Ok((Page { r: page.r + 1, cutoff: page.cutoff, slots }, issues))
}

/// Pages E2 through E6 computed from a list of rule sets.
#[derive(Debug)]
pub struct SpectralSequence {
    e2: E2Algebra,
    max_total_degree: i32,
    k: u8,
    rules: Vec<RuleSet>,
    pages: Vec<Page>,
    issues: Vec<TurnIssue>,
}

impl SpectralSequence {
    /// Computes E2..E6 with the standard differentials and fails on any
    /// well-definedness issue. Pages are built one degree past
    /// `max_total_degree`, so every slot up to that degree is exact.
    pub fn compute(max_total_degree: i32, k: u8) -> Result<Self, SpectralError> {
        let ss = Self::compute_lenient(max_total_degree, k)?;
        if ss.issues.is_empty() {
            Ok(ss)
        } else {
            Err(SpectralError::NotWellDefined(ss.issues))
        }
    }

    /// Like [`compute`](Self::compute) but records issues instead of failing.
    pub fn compute_lenient(max_total_degree: i32, k: u8) -> Result<Self, SpectralError> {
        if k != 1 && k != 2 {
            return Err(SpectralError::InvalidK(k));
        }
        let gca = Gca::e2();
        let rules = RuleSet::standard(&gca, max_total_degree + 1, k);
        Self::compute_with_rules(max_total_degree, k, rules)
    }

    pub fn compute_with_rules(max_total_degree: i32, k: u8, rules: Vec<RuleSet>) -> Result<Self, SpectralError> {
        let e2 = E2Algebra::new();
        let mut pages = vec![Page::e2(&e2, max_total_degree + 1)];
        let mut issues = Vec::new();
        for r in &rules {
            let (next, found) = turn_page(&e2, pages.last().expect("nonempty"), r)?;
            issues.extend(found);
            pages.push(next);
        }
        Ok(SpectralSequence { e2, max_total_degree, k, rules, pages, issues })
    }

    pub fn e2_algebra(&self) -> &E2Algebra {
        &self.e2
    }

    pub fn max_total_degree(&self) -> i32 {
        self.max_total_degree
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn issues(&self) -> &[TurnIssue] {
        &self.issues
    }

    pub fn rules(&self) -> &[RuleSet] {
        &self.rules
    }

    pub fn page(&self, r: u32) -> Result<&Page, SpectralError> {
        self.pages.get((r as usize).wrapping_sub(2)).ok_or(SpectralError::BadPage(r))
    }

    pub fn e6(&self) -> &Page {
        self.pages.last().expect("at least E2")
    }

    pub fn pages(&self) -> &[Page] {
        &self.pages
    }

    /// Whether `b` is a slot whose value is exact (not provisional).
    pub fn in_range(&self, b: Bidegree) -> bool {
        b.is_valid() && b.total() <= self.max_total_degree
    }

    /// E6 class dims for every exact slot.
    pub fn e6_dims(&self) -> BTreeMap<Bidegree, usize> {
        self.e6().slots().filter(|(b, _)| self.in_range(*b)).map(|(b, s)| (b, s.dim())).collect()
    }

    /// The map `d_r` on class spaces `E_r(b) -> E_r(b + shift)`, as a matrix
    /// whose rows are images of the canonical class basis. `None` when the
    /// target is off the page.
    pub fn induced_differential(&self, r: u32, b: Bidegree) -> Result<Option<Matrix>, SpectralError> {
        let page = self.page(r)?;
        let rules = self.rules.iter().find(|x| x.r == r).ok_or(SpectralError::BadPage(r))?;
        let Some(diff) = slot_differential(&self.e2, page, rules, b)? else {
            return Ok(None);
        };
        let src = page.slot(b).ok_or(SpectralError::OutOfRange(b))?.subquotient()?;
        let tgt = page.slot(diff.target).ok_or(SpectralError::OutOfRange(diff.target))?.subquotient()?;
        let width = src.ambient_dim();
        let solver = Solver::new(&Matrix::from_rows(width, &diff.sources));
        let dt = tgt.ambient_dim();
        let mut rows = Vec::with_capacity(src.dim());
        for rep in src.representatives().iter_rows() {
            let combo = solver.solve(rep).ok_or(SpectralError::NotACycle(b))?;
            let img = combine(&combo, &diff.images, dt);
            rows.push(tgt.class_coords(&img)?);
        }
        Ok(Some(Matrix::from_rows(tgt.dim(), &rows)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bd(n: i32, m: i32) -> Bidegree {
        Bidegree::new(n, m)
    }

    #[test]
    fn e2_slot_dims() {
        let e2 = E2Algebra::new();
        let p = Page::e2(&e2, 8);
        assert_eq!(p.dim(bd(0, 0)), Some(1));
        assert_eq!(p.dim(bd(2, 1)), Some(3));
        assert_eq!(p.dim(bd(6, 0)), Some(7));
        assert_eq!(p.dim(bd(6, 3)), None);
    }

    #[test]
    fn first_turn_examples() {
        let e2 = E2Algebra::new();
        let p = Page::e2(&e2, 10);
        let (p3, issues) = turn_page(&e2, &p, &RuleSet::d2(e2.gca())).unwrap();
        assert!(issues.is_empty());
        assert_eq!(p3.dim(bd(0, 1)), Some(0));
        assert_eq!(p3.dim(bd(2, 0)), Some(2));
        assert_eq!(p3.dim(bd(1, 0)), Some(2));
    }

    #[test]
    fn rule_for_t_squared_y() {
        let gca = Gca::e2();
        let d4 = RuleSet::d4(&gca, 10);
        let RuleMode::Pattern(rules) = &d4.mode else { panic!("d4 is a pattern rule set") };
        let lhs = gca.parse("t^2*y1").unwrap();
        let rule = rules.iter().find(|r| r.lhs == lhs).expect("t^2*y1 rule present");
        assert_eq!(rule.rhs, gca.parse("u*(x1*y2 - x2*y1)*x1").unwrap());
        assert_eq!(rule.lhs_bidegree, bd(1, 4));
    }

    #[test]
    fn mismatched_page_index_rejected() {
        let e2 = E2Algebra::new();
        let p = Page::e2(&e2, 4);
        assert!(matches!(turn_page(&e2, &p, &RuleSet::d3(e2.gca())), Err(SpectralError::BadPage(3))));
    }

    #[test]
    fn bad_k_rejected() {
        assert!(matches!(SpectralSequence::compute(6, 0), Err(SpectralError::InvalidK(0))));
    }

    #[test]
    fn low_degree_e6() {
        let ss = SpectralSequence::compute(8, 1).unwrap();
        let e6 = ss.e6();
        assert_eq!(e6.dim(bd(0, 0)), Some(1));
        assert_eq!(e6.dim(bd(2, 3)), Some(1));
        assert_eq!(e6.dim(bd(0, 4)), Some(0));
        assert!(!e6.slot(bd(3, 5)).unwrap().provisional);
        assert!(e6.slot(bd(4, 5)).unwrap().provisional);
    }
}
