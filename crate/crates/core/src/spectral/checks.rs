//! Structural sanity checks on a computed spectral sequence.

use serde::Serialize;

use super::{verify_e6, declared_e6, E6Report, RuleSet, SpectralError, SpectralSequence, TurnIssue};
use crate::gca::Bidegree;

#[derive(Clone, Debug, Serialize)]
pub struct DSquaredCheck {
    pub r: u32,
    pub bidegree: Bidegree,
    pub zero: bool,
}

/// `d_r ∘ d_r = 0` on class spaces for `r = 2..=5`, wherever both maps land
/// on the page.
pub fn d_squared_zero(ss: &SpectralSequence) -> Result<Vec<DSquaredCheck>, SpectralError> {
    let max = ss.max_total_degree();
    let mut out = Vec::new();
    for rules in ss.rules() {
        let r = rules.r;
        let shift = rules.shift();
        for n in 0..=max {
            for m in 0..=(max - n) {
                let b = Bidegree::new(n, m);
                let (Some(first), Some(second)) =
                    (ss.induced_differential(r, b)?, ss.induced_differential(r, b + shift)?)
                else {
                    continue;
                };
                if (b + shift + shift).total() > max {
                    continue;
                }
                out.push(DSquaredCheck { r, bidegree: b, zero: first.mul(&second).is_zero() });
            }
        }
    }
    Ok(out)
}

/// Slots where a later page is larger than an earlier one. Empty when the
/// class dimensions never grow from `E_r` to `E_{r+1}`.
pub fn dimension_growth(ss: &SpectralSequence) -> Vec<(u32, Bidegree)> {
    let mut out = Vec::new();
    for w in ss.pages().windows(2) {
        for (b, s) in w[1].slots() {
            if ss.in_range(b) && w[0].dim(b).is_some_and(|d| s.dim() > d) {
                out.push((w[1].r, b));
            }
        }
    }
    out
}

/// Whether `t^3` is a cycle on every page and nonzero in E6.
pub fn t_cubed_is_permanent(ss: &SpectralSequence) -> Result<bool, SpectralError> {
    let b = Bidegree::new(0, 6);
    if !ss.in_range(b) {
        return Err(SpectralError::OutOfRange(b));
    }
    let e2 = ss.e2_algebra();
    let v = e2.coords(b, &e2.parse("t^3")?)?;
    for page in ss.pages() {
        let slot = page.slot(b).ok_or(SpectralError::OutOfRange(b))?;
        if !slot.z.contains(&v)? {
            return Ok(false);
        }
    }
    let sq = ss.e6().slot(b).ok_or(SpectralError::OutOfRange(b))?.subquotient()?;
    Ok(!sq.is_zero_class(&v)?)
}

/// Outcome of running the pipeline with a deliberately corrupted d5.
#[derive(Clone, Debug, Serialize)]
pub struct NegativeControl {
    pub corrupted_image: String,
    pub issues: Vec<TurnIssue>,
    pub report: E6Report,
}

impl NegativeControl {
    /// True when the corruption was caught by the turn checks or by the
    /// comparison with the declared page.
    pub fn detected(&self) -> bool {
        !self.issues.is_empty() || !self.report.passed()
    }
}

/// The image of `t^2 w` under d5 with one sign flipped.
pub const CORRUPTED_T2W_IMAGE: &str = "x1^3*x2 + x1*x2^3";

pub fn negative_control(max_total_degree: i32, k: u8, t2w_image: &str) -> Result<NegativeControl, SpectralError> {
    let gca = crate::gca::Gca::e2();
    let cutoff = max_total_degree + 1;
    let mut rules = RuleSet::standard(&gca, cutoff, k);
    let last = rules.len() - 1;
    rules[last] = RuleSet::d5_with(&gca, k, t2w_image);
    let ss = SpectralSequence::compute_with_rules(max_total_degree, k, rules)?;
    let declared = declared_e6(ss.e2_algebra(), cutoff)?;
    let report = verify_e6(ss.e2_algebra(), ss.e6(), &declared, max_total_degree)?;
    Ok(NegativeControl { corrupted_image: t2w_image.to_string(), issues: ss.issues().to_vec(), report })
}
