//! Structured export of a page.

use serde::Serialize;

use super::{E2Algebra, Page};
use crate::gca::Bidegree;

#[derive(Clone, Debug, Serialize)]
pub struct SlotDocument {
    pub n: i32,
    pub m: i32,
    pub dim: usize,
    pub provisional: bool,
    pub z_basis: Vec<Vec<u8>>,
    pub b_basis: Vec<Vec<u8>>,
    /// Canonical class representatives printed as elements.
    pub representatives: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PageDocument {
    pub page: u32,
    pub cutoff: i32,
    pub slots: Vec<SlotDocument>,
}

/// Slots with total degree at most `max_total_degree`, ordered by `(n, m)`.
pub fn export_page(e2: &E2Algebra, page: &Page, max_total_degree: i32) -> PageDocument {
    let mut slots = Vec::new();
    for (b, s) in page.slots() {
        if b.total() > max_total_degree {
            continue;
        }
        let representatives = match s.subquotient() {
            Ok(sq) => sq.representatives().iter_rows().map(|r| e2.gca().format(&e2.element(b, r))).collect(),
            Err(_) => Vec::new(),
        };
        slots.push(SlotDocument {
            n: b.n,
            m: b.m,
            dim: s.dim(),
            provisional: s.provisional,
            z_basis: s.z.rows_u8(),
            b_basis: s.b.rows_u8(),
            representatives,
        });
    }
    slots.sort_by_key(|d| Bidegree::new(d.n, d.m));
    PageDocument { page: page.r, cutoff: page.cutoff, slots }
}
