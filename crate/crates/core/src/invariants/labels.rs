//! Invariant dimensions over a rectangle of E6, checked against the listed
//! generators.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{all_slot_invariants, ActionSpec, InvariantError};
use crate::gca::{Bidegree, Element, Gca, GcaError, SymbolTable};
use crate::linalg::{Subspace, F3};
use crate::spectral::SpectralSequence;
use crate::tables::{INVARIANT_GENERATORS, LABEL_CORRECTIONS, NAMED_INVARIANTS};

/// The named invariants as a symbol table for the expression parser.
pub fn named_symbols(gca: &Gca) -> Result<SymbolTable, GcaError> {
    let mut table = SymbolTable::new();
    for (name, expr) in NAMED_INVARIANTS {
        let e = gca.parse_with(expr, &table)?;
        table.insert(name.to_string(), e);
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum LabelStatus {
    /// A cycle with an invariant class at the listed bidegree.
    Invariant,
    /// A cycle at the listed bidegree whose class is not fixed.
    NotInvariant,
    NotCycle,
    /// The expression does not live at the listed bidegree. `actual` is
    /// `None` when it is zero.
    BidegreeMismatch { actual: Option<Bidegree>, corrected: Option<String>, corrected_invariant: bool },
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelCheck {
    pub n: i32,
    pub m: i32,
    pub expr: String,
    pub status: LabelStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct SlotSpanCheck {
    pub bidegree: Bidegree,
    pub invariant_dim: usize,
    /// Rank of the classes of the (corrected) labels at this slot.
    pub label_rank: usize,
    pub spans: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantTable {
    pub n_max: i32,
    pub m_max: i32,
    /// `dims[m][n]`.
    pub dims: Vec<Vec<usize>>,
    pub labels: Vec<LabelCheck>,
    pub spans: Vec<SlotSpanCheck>,
}

impl InvariantTable {
    pub fn dim(&self, n: i32, m: i32) -> usize {
        self.dims[m as usize][n as usize]
    }

    pub fn nonzero_slots(&self) -> usize {
        self.dims.iter().flatten().filter(|&&d| d > 0).count()
    }

    pub fn mismatched_labels(&self) -> impl Iterator<Item = &LabelCheck> + '_ {
        self.labels.iter().filter(|l| l.status != LabelStatus::Invariant)
    }

    /// Every label is an invariant class at its bidegree, or is a listed
    /// misprint whose correction is one, and the labels span every slot.
    pub fn consistent(&self) -> bool {
        self.labels.iter().all(|l| match &l.status {
            LabelStatus::Invariant => true,
            LabelStatus::BidegreeMismatch { corrected_invariant, .. } => *corrected_invariant,
            _ => false,
        }) && self.spans.iter().all(|s| s.spans)
    }
}

/// Class of a cycle in the E6 slot `b`, or `None` if it is not a cycle.
fn class_of(ss: &SpectralSequence, b: Bidegree, e: &Element) -> Result<Option<Vec<F3>>, InvariantError> {
    let sq = ss.e6().slot(b).ok_or(InvariantError::OutOfRange(b))?.subquotient()?;
    let v = ss.e2_algebra().coords(b, e)?;
    if !sq.cycles().contains(&v)? {
        return Ok(None);
    }
    Ok(Some(sq.class_coords(&v)?))
}

/// Invariant dimensions for `0 <= n <= n_max`, `0 <= m <= m_max`, with every
/// listed generator in that range checked. Needs `n_max + m_max` within the
/// computed range.
pub fn invariant_table(
    ss: &SpectralSequence,
    spec: &ActionSpec,
    n_max: i32,
    m_max: i32,
) -> Result<InvariantTable, InvariantError> {
    if n_max + m_max > ss.max_total_degree() {
        return Err(InvariantError::OutOfRange(Bidegree::new(n_max, m_max)));
    }
    let gca = ss.e2_algebra().gca();
    let symbols = named_symbols(gca)?;
    let inv = all_slot_invariants(ss, spec)?;
    let mut dims = vec![vec![0usize; n_max as usize + 1]; m_max as usize + 1];
    for (b, s) in &inv {
        if b.n <= n_max && b.m <= m_max {
            dims[b.m as usize][b.n as usize] = s.dim();
        }
    }

    let mut labels = Vec::new();
    let mut classes: BTreeMap<Bidegree, Vec<Vec<F3>>> = BTreeMap::new();
    let mut judge = |b: Bidegree, e: &Element| -> Result<LabelStatus, InvariantError> {
        match class_of(ss, b, e)? {
            None => Ok(LabelStatus::NotCycle),
            Some(c) => {
                let fixed = &inv[&b].fixed.image;
                if fixed.contains(&c)? {
                    classes.entry(b).or_default().push(c);
                    Ok(LabelStatus::Invariant)
                } else {
                    Ok(LabelStatus::NotInvariant)
                }
            }
        }
    };
    for &(n, m, expr) in INVARIANT_GENERATORS {
        if n > n_max || m > m_max {
            continue;
        }
        let b = Bidegree::new(n, m);
        let e = gca.parse_with(expr, &symbols)?;
        let actual = gca.bidegree(&e)?;
        let status = if actual == Some(b) {
            judge(b, &e)?
        } else {
            let corrected = LABEL_CORRECTIONS.iter().find(|c| c.0 == n && c.1 == m && c.2 == expr).map(|c| c.3);
            let corrected_invariant = match corrected {
                Some(c) => {
                    let ce = gca.parse_with(c, &symbols)?;
                    gca.bidegree(&ce)? == Some(b) && judge(b, &ce)? == LabelStatus::Invariant
                }
                None => false,
            };
            LabelStatus::BidegreeMismatch { actual, corrected: corrected.map(str::to_string), corrected_invariant }
        };
        labels.push(LabelCheck { n, m, expr: expr.to_string(), status });
    }

    let mut spans = Vec::new();
    for (b, s) in &inv {
        if b.n > n_max || b.m > m_max || (s.dim() == 0 && !classes.contains_key(b)) {
            continue;
        }
        let found = classes.get(b).map(|c| Subspace::span(s.class_dim, c)).unwrap_or_else(|| Subspace::zero(s.class_dim));
        spans.push(SlotSpanCheck {
            bidegree: *b,
            invariant_dim: s.dim(),
            label_rank: found.dim(),
            spans: found == s.fixed.image,
        });
    }
    Ok(InvariantTable { n_max, m_max, dims, labels, spans })
}
