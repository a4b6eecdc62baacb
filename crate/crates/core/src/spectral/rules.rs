//! Differentials d2..d5 and their representative-level spanning sets.
//!
//! d2 and d3 are derivations. d4 and d5 are only known on a few elements;
//! they are extended by right multiplication with monomials in the
//! permanent cycles `y1, y2, x1, x2, t^3`, and every representative outside
//! the span of those products is sent to zero.

use serde::Serialize;

use super::{E2Algebra, Page, SpectralError};
use crate::gca::{derivation_extend, Bidegree, DerivationSpec, Element, Gca};
use crate::linalg::{Subspace, F3};

#[derive(Clone, Debug)]
pub struct PatternRule {
    pub lhs: Element,
    pub rhs: Element,
    pub lhs_bidegree: Bidegree,
}

#[derive(Clone, Debug)]
pub enum RuleMode {
    Derivation(DerivationSpec),
    Pattern(Vec<PatternRule>),
}

#[derive(Clone, Debug)]
pub struct RuleSet {
    pub r: u32,
    pub mode: RuleMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RuleKind {
    Derivation,
    Pattern,
}

fn parse(gca: &Gca, s: &str) -> Element {
    gca.parse(s).expect("built-in expression parses")
}

/// `x1*y2 - x2*y1`, the image of t under d3.
pub fn w_element(gca: &Gca) -> Element {
    parse(gca, "x1*y2 - x2*y1")
}

impl RuleSet {
    pub fn shift_for(r: u32) -> Bidegree {
        Bidegree::new(r as i32, 1 - r as i32)
    }

    pub fn shift(&self) -> Bidegree {
        Self::shift_for(self.r)
    }

    pub fn kind(&self) -> RuleKind {
        match self.mode {
            RuleMode::Derivation(_) => RuleKind::Derivation,
            RuleMode::Pattern(_) => RuleKind::Pattern,
        }
    }

    pub fn derivation(gca: &Gca, r: u32, values: &[(&str, &str)]) -> Result<Self, SpectralError> {
        let vals: Vec<(&str, Element)> = values.iter().map(|(g, s)| Ok((*g, gca.parse(s)?))).collect::<Result<_, SpectralError>>()?;
        let spec = DerivationSpec::new(gca, Self::shift_for(r), &vals)?;
        Ok(RuleSet { r, mode: RuleMode::Derivation(spec) })
    }

    /// A pattern rule set; every pair must be homogeneous with the rhs
    /// shifted from the lhs by `(r, 1-r)`.
    pub fn pattern(gca: &Gca, r: u32, pairs: Vec<(Element, Element)>) -> Result<Self, SpectralError> {
        let shift = Self::shift_for(r);
        let mut rules = Vec::with_capacity(pairs.len());
        for (lhs, rhs) in pairs {
            let lb = gca.bidegree(&lhs)?.ok_or(SpectralError::ZeroPattern)?;
            if let Some(rb) = gca.bidegree(&rhs)? {
                if rb != lb + shift {
                    return Err(SpectralError::PatternShift { lhs: lb, rhs: rb, r });
                }
            }
            rules.push(PatternRule { lhs, rhs, lhs_bidegree: lb });
        }
        Ok(RuleSet { r, mode: RuleMode::Pattern(rules) })
    }

    /// `d2(u) = y1*y2`, `d2(t) = 0`.
    pub fn d2(gca: &Gca) -> Self {
        Self::derivation(gca, 2, &[("u", "y1*y2")]).expect("d2 is well formed")
    }

    /// `d3(t) = x1*y2 - x2*y1`, zero on the other generators.
    pub fn d3(gca: &Gca) -> Self {
        Self::derivation(gca, 3, &[("t", "x1*y2 - x2*y1")]).expect("d3 is well formed")
    }

    /// `d4(t^i*u*w) = i*t^(i-1)*(x1*x2^2*y2 - x1^2*x2*y1)` for `i >= 1`, and
    /// `d4(t^2*y_i) = u*w*x_i`, with `w = x1*y2 - x2*y1`. Only lhs of total
    /// degree at most `cutoff` are generated.
    pub fn d4(gca: &Gca, cutoff: i32) -> Self {
        let w = w_element(gca);
        let t = parse(gca, "t");
        let u = parse(gca, "u");
        let tail = parse(gca, "x1*x2^2*y2 - x1^2*x2*y1");
        let mut pairs = Vec::new();
        let mut i = 1;
        while 2 * i + 4 <= cutoff {
            let lhs = gca.mul(&gca.mul(&gca.pow(&t, i as u32), &u), &w);
            let rhs = gca.mul(&gca.pow(&t, i as u32 - 1), &tail).scale(F3::new(i as i64));
            pairs.push((lhs, rhs));
            i += 1;
        }
        for (x, y) in [("x1", "y1"), ("x2", "y2")] {
            let lhs = gca.mul(&gca.pow(&t, 2), &parse(gca, y));
            let rhs = gca.mul(&gca.mul(&u, &w), &parse(gca, x));
            pairs.push((lhs, rhs));
        }
        Self::pattern(gca, 4, pairs).expect("d4 patterns are well formed")
    }

    /// `d5(t^2*w) = x1^3*x2 - x1*x2^3` and
    /// `d5(u*t^2*y1*y2) = k*u*(x1^3*y2 - x2^3*y1)`.
    pub fn d5(gca: &Gca, k: u8) -> Self {
        Self::d5_with(gca, k, "x1^3*x2 - x1*x2^3")
    }

    /// d5 with a replacement image for `t^2*w`; used by negative controls.
    pub fn d5_with(gca: &Gca, k: u8, t2w_image: &str) -> Self {
        let w = w_element(gca);
        let t2 = parse(gca, "t^2");
        let pairs = vec![
            (gca.mul(&t2, &w), parse(gca, t2w_image)),
            (parse(gca, "u*t^2*y1*y2"), parse(gca, "u*(x1^3*y2 - x2^3*y1)").scale(F3::new(k as i64))),
        ];
        Self::pattern(gca, 5, pairs).expect("d5 patterns are well formed")
    }

    /// The four rule sets d2, d3, d4, d5 for pages of the given cutoff.
    pub fn standard(gca: &Gca, cutoff: i32, k: u8) -> Vec<RuleSet> {
        vec![Self::d2(gca), Self::d3(gca), Self::d4(gca, cutoff), Self::d5(gca, k)]
    }
}

/// Monomials over the permanent cycles `y1, y2, x1, x2, t^3` of bidegree `b`:
/// empty unless `6 | m`, in which case `t^(m/2)` times the base monomials of
/// bidegree `(n, 0)`.
pub fn multipliers(e2: &E2Algebra, b: Bidegree) -> Vec<Element> {
    if !b.is_valid() || b.m % 6 != 0 {
        return Vec::new();
    }
    let gca = e2.gca();
    let tpow = gca.pow(&gca.gen("t").expect("t exists"), (b.m / 2) as u32);
    e2.basis(Bidegree::new(b.n, 0))
        .monomials()
        .iter()
        .map(|mono| gca.mul(&tpow, &Element::monomial(mono.clone(), F3::ONE)))
        .collect()
}

/// A spanning set of the source slot's cycles together with the chosen image
/// of each spanning vector, both in E2 coordinates.
#[derive(Clone, Debug)]
pub struct SlotDifferential {
    pub source: Bidegree,
    pub target: Bidegree,
    pub sources: Vec<Vec<F3>>,
    pub images: Vec<Vec<F3>>,
}

/// Builds the representative-level differential out of slot `b`, or `None`
/// when the target lies below the axis or beyond the page cutoff.
///
/// Derivation mode uses the cycle basis with its derivation images. Pattern
/// mode lists every pattern product `lhs*q` with image `rhs*q`, then the
/// boundary basis with image zero, then a complement of cycle basis vectors
/// (also with image zero) until the cycles are spanned.
pub fn slot_differential(
    e2: &E2Algebra,
    page: &Page,
    rules: &RuleSet,
    b: Bidegree,
) -> Result<Option<SlotDifferential>, SpectralError> {
    let target = b + rules.shift();
    if target.m < 0 || target.total() > page.cutoff {
        return Ok(None);
    }
    let slot = page.slot(b).ok_or(SpectralError::OutOfRange(b))?;
    let gca = e2.gca();
    let src_basis = e2.basis(b);
    let tgt_basis = e2.basis(target);
    let mut sources = Vec::new();
    let mut images = Vec::new();
    match &rules.mode {
        RuleMode::Derivation(d) => {
            for row in slot.z.rows() {
                let e = src_basis.element(row);
                let img = derivation_extend(gca, d, &e);
                sources.push(row.to_vec());
                images.push(tgt_basis.coordinates(&img)?);
            }
        }
        RuleMode::Pattern(rules) => {
            for rule in rules {
                let rest = b - rule.lhs_bidegree;
                if !rest.is_valid() {
                    continue;
                }
                for q in multipliers(e2, rest) {
                    let rep = gca.mul(&rule.lhs, &q);
                    if rep.is_zero() {
                        continue;
                    }
                    let img = gca.mul(&rule.rhs, &q);
                    sources.push(src_basis.coordinates(&rep)?);
                    images.push(tgt_basis.coordinates(&img)?);
                }
            }
            let zero = vec![F3::ZERO; tgt_basis.len()];
            for row in slot.b.rows() {
                sources.push(row.to_vec());
                images.push(zero.clone());
            }
            let mut spanned = Subspace::span(src_basis.len(), &sources);
            for row in slot.z.rows() {
                if !spanned.contains(row)? {
                    sources.push(row.to_vec());
                    images.push(zero.clone());
                    spanned = Subspace::span(src_basis.len(), &sources);
                }
            }
        }
    }
    Ok(Some(SlotDifferential { source: b, target, sources, images }))
}
