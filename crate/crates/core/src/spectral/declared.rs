//! The closed-form description of E6 as a subquotient of E2, and the check
//! that the computed page agrees with it.
//!
//! For each bidegree a bookkeeping element `z` is chosen by `m mod 6`:
//! `t^{3k}`, `u t^{3k}`, `t^{3k+1}`, `u t^{3k+1}` for residues 0..3 with
//! `k = m / 6`; residues 4 and 5 give zero. The slot is then spanned by
//! explicit multiples of `z` modulo explicit relations, split into six
//! cases by `n`.

use serde::Serialize;

use super::{E2Algebra, Page, SpectralError, SpectralSequence};
use crate::gca::{Bidegree, Element, Gca, Monomial};
use crate::linalg::{Matrix, Subspace, F3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum E6Case {
    /// n = 0
    I,
    /// n = 1
    II,
    /// n = 2
    III,
    /// n = 3
    IV,
    /// n = 2q >= 4
    V,
    /// n = 2q + 1 >= 5
    VI,
}

#[derive(Clone, Debug)]
pub struct E6Descriptor {
    pub bidegree: Bidegree,
    pub case: E6Case,
    pub residue: i32,
    pub z: Option<Element>,
}

impl E6Descriptor {
    pub fn new(gca: &Gca, b: Bidegree) -> Self {
        let k = (b.m / 6) as u32;
        let residue = b.m % 6;
        let t = gca.gen("t").expect("t exists");
        let u = gca.gen("u").expect("u exists");
        let z = match residue {
            0 => Some(gca.pow(&t, 3 * k)),
            1 => Some(gca.mul(&u, &gca.pow(&t, 3 * k))),
            2 => Some(gca.pow(&t, 3 * k + 1)),
            3 => Some(gca.mul(&u, &gca.pow(&t, 3 * k + 1))),
            _ => None,
        };
        let case = match b.n {
            0 => E6Case::I,
            1 => E6Case::II,
            2 => E6Case::III,
            3 => E6Case::IV,
            n if n % 2 == 0 => E6Case::V,
            _ => E6Case::VI,
        };
        E6Descriptor { bidegree: b, case, residue, z }
    }
}

#[derive(Clone, Debug)]
pub struct DeclaredSlot {
    pub descriptor: E6Descriptor,
    pub generators: Vec<Element>,
    pub relations: Vec<Element>,
}

/// `x1^a * x2^b * y1^c * y2^d` as an element.
fn base(gca: &Gca, a: u16, b: u16, c: u16, d: u16) -> Element {
    let mut m = Monomial::one(gca.len());
    m.0[2] = c;
    m.0[3] = d;
    m.0[4] = a;
    m.0[5] = b;
    Element::monomial(m, F3::ONE)
}

pub fn declared_slot(gca: &Gca, b: Bidegree) -> DeclaredSlot {
    let descriptor = E6Descriptor::new(gca, b);
    let mut generators = Vec::new();
    let mut relations = Vec::new();
    if let Some(z) = &descriptor.z {
        let zm = |e: Element| gca.mul(z, &e);
        let r = descriptor.residue;
        match descriptor.case {
            E6Case::I => {
                if r == 0 {
                    generators.push(z.clone());
                }
            }
            E6Case::II => {
                if r <= 2 {
                    generators = vec![zm(base(gca, 0, 0, 1, 0)), zm(base(gca, 0, 0, 0, 1))];
                }
            }
            E6Case::III => match r {
                0 => generators = vec![zm(base(gca, 1, 0, 0, 0)), zm(base(gca, 0, 1, 0, 0))],
                1 | 3 => generators = vec![zm(base(gca, 0, 0, 1, 1))],
                _ => {}
            },
            E6Case::IV => match r {
                1 => {
                    generators = gca.basis(b).into_iter().map(|m| Element::monomial(m, F3::ONE)).collect();
                }
                0 | 2 => {
                    generators = vec![
                        zm(base(gca, 1, 0, 1, 0)),
                        zm(base(gca, 1, 0, 0, 1)),
                        zm(base(gca, 0, 1, 1, 0)),
                        zm(base(gca, 0, 1, 0, 1)),
                    ];
                    relations = vec![zm(super::w_element(gca))];
                }
                _ => {}
            },
            E6Case::V => {
                let q = (b.n / 2) as u16;
                if r == 0 {
                    generators = (0..=q).map(|i| zm(base(gca, i, q - i, 0, 0))).collect();
                    for i in 1..q.saturating_sub(2) {
                        relations.push(zm(&base(gca, i, q - i, 0, 0) - &base(gca, i + 2, q - i - 2, 0, 0)));
                    }
                }
            }
            E6Case::VI => {
                let q = ((b.n - 1) / 2) as u16;
                if r <= 2 {
                    for i in 0..=q {
                        generators.push(zm(base(gca, i, q - i, 1, 0)));
                        generators.push(zm(base(gca, i, q - i, 0, 1)));
                    }
                    for i in 0..q {
                        relations.push(zm(&base(gca, i, q - i, 1, 0) - &base(gca, i + 1, q - i - 1, 0, 1)));
                    }
                    for j in 1..q.saturating_sub(1) {
                        relations.push(zm(&base(gca, j, q - j, 0, 1) - &base(gca, j + 1, q - j - 1, 1, 0)));
                    }
                }
            }
        }
    }
    DeclaredSlot { descriptor, generators, relations }
}

/// The declared page: `Z` is the span of the listed generators and `B` the
/// span of the listed relations, so `Z/B` is the declared E6 slot.
pub fn declared_e6(e2: &E2Algebra, cutoff: i32) -> Result<Page, SpectralError> {
    let mut slots = std::collections::BTreeMap::new();
    for n in 0..=cutoff {
        for m in 0..=(cutoff - n) {
            let b = Bidegree::new(n, m);
            let d = declared_slot(e2.gca(), b);
            let basis = e2.basis(b);
            let g: Vec<Vec<F3>> = d.generators.iter().map(|e| basis.coordinates(e)).collect::<Result<_, _>>()?;
            let r: Vec<Vec<F3>> = d.relations.iter().map(|e| basis.coordinates(e)).collect::<Result<_, _>>()?;
            let z = Subspace::span(basis.len(), &g);
            let bsub = Subspace::span(basis.len(), &r);
            slots.insert(b, super::Slot { z, b: bsub, provisional: false });
        }
    }
    Ok(Page::from_slots(6, cutoff, slots))
}

/// Elements of E2 whose classes are claimed to form a basis of E6 at `b`.
/// Repeated entries (the two middle entries for `n = 4`) are listed once.
pub fn corollary_representatives(gca: &Gca, b: Bidegree) -> Vec<Element> {
    let d = E6Descriptor::new(gca, b);
    let Some(z) = &d.z else { return Vec::new() };
    let zm = |e: Element| gca.mul(z, &e);
    let r = d.residue;
    let list: Vec<Element> = match d.case {
        E6Case::I if r == 0 => vec![z.clone()],
        E6Case::II if r <= 2 => vec![zm(base(gca, 0, 0, 1, 0)), zm(base(gca, 0, 0, 0, 1))],
        E6Case::III if r == 0 => vec![zm(base(gca, 1, 0, 0, 0)), zm(base(gca, 0, 1, 0, 0))],
        E6Case::III if r == 1 || r == 3 => vec![zm(base(gca, 0, 0, 1, 1))],
        E6Case::IV if r == 1 => vec![
            zm(base(gca, 1, 0, 1, 0)),
            zm(base(gca, 1, 0, 0, 1)),
            zm(base(gca, 0, 1, 1, 0)),
            zm(base(gca, 0, 1, 0, 1)),
        ],
        E6Case::IV if r == 0 || r == 2 => {
            vec![zm(base(gca, 1, 0, 1, 0)), zm(base(gca, 1, 0, 0, 1)), zm(base(gca, 0, 1, 0, 1))]
        }
        E6Case::V if r == 0 => {
            let q = (b.n / 2) as u16;
            vec![
                zm(base(gca, q, 0, 0, 0)),
                zm(base(gca, q - 1, 1, 0, 0)),
                zm(base(gca, q - 2, 2, 0, 0)),
                zm(base(gca, 0, q, 0, 0)),
            ]
        }
        E6Case::VI if r <= 2 => {
            let q = ((b.n - 1) / 2) as u16;
            vec![
                zm(base(gca, q, 0, 1, 0)),
                zm(base(gca, q, 0, 0, 1)),
                zm(base(gca, q - 1, 1, 0, 1)),
                zm(base(gca, 0, q, 0, 1)),
            ]
        }
        _ => Vec::new(),
    };
    let mut out: Vec<Element> = Vec::with_capacity(list.len());
    for e in list {
        if !out.contains(&e) {
            out.push(e);
        }
    }
    out
}

/// Class dims indexed `[m][n]` for `0 <= n <= n_max`, `0 <= m <= m_max`;
/// `None` where the page has no slot.
pub fn corner_dims(page: &Page, n_max: i32, m_max: i32) -> Vec<Vec<Option<usize>>> {
    (0..=m_max).map(|m| (0..=n_max).map(|n| page.dim(Bidegree::new(n, m))).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum E6Mismatch {
    MissingSlot { bidegree: Bidegree },
    Provisional { bidegree: Bidegree },
    Dimension { bidegree: Bidegree, computed: usize, declared: usize },
    /// span(generators) + B ≠ Z
    Cycles { bidegree: Bidegree },
    /// span(generators) ∩ B ≠ span(relations)
    Relations { bidegree: Bidegree },
    RepresentativeNotCycle { bidegree: Bidegree, representative: String },
    RepresentativesNotBasis { bidegree: Bidegree, count: usize, rank: usize, dim: usize },
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct E6Report {
    pub slots_checked: usize,
    pub mismatches: Vec<E6Mismatch>,
}

impl E6Report {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the computed E6 with the declared one on every slot of total
/// degree at most `max_total_degree`.
///
/// E2 boundaries such as `y1*y2` are never among the declared generators, so
/// the comparison is made modulo the computed boundaries: the declared
/// generators together with `B` must give `Z`, and they must meet `B` in
/// exactly the declared relations. Each survival representative must lie in
/// `Z` and the representatives must give a basis of `Z/B`.
pub fn verify_e6(
    e2: &E2Algebra,
    computed: &Page,
    declared: &Page,
    max_total_degree: i32,
) -> Result<E6Report, SpectralError> {
    let mut report = E6Report::default();
    for n in 0..=max_total_degree {
        for m in 0..=(max_total_degree - n) {
            let b = Bidegree::new(n, m);
            report.slots_checked += 1;
            let (Some(c), Some(d)) = (computed.slot(b), declared.slot(b)) else {
                report.mismatches.push(E6Mismatch::MissingSlot { bidegree: b });
                continue;
            };
            if c.provisional {
                report.mismatches.push(E6Mismatch::Provisional { bidegree: b });
                continue;
            }
            if c.dim() != d.dim() {
                report.mismatches.push(E6Mismatch::Dimension { bidegree: b, computed: c.dim(), declared: d.dim() });
            }
            if d.z.sum(&c.b)? != c.z {
                report.mismatches.push(E6Mismatch::Cycles { bidegree: b });
            }
            if d.z.intersection(&c.b)? != d.b {
                report.mismatches.push(E6Mismatch::Relations { bidegree: b });
            }

            let sq = c.subquotient()?;
            let basis = e2.basis(b);
            let mut coords = Vec::new();
            for rep in corollary_representatives(e2.gca(), b) {
                let v = basis.coordinates(&rep)?;
                if !c.z.contains(&v)? {
                    report.mismatches.push(E6Mismatch::RepresentativeNotCycle {
                        bidegree: b,
                        representative: e2.gca().format(&rep),
                    });
                    continue;
                }
                coords.push(sq.class_coords(&v)?);
            }
            let rank = Matrix::from_rows(sq.dim(), &coords).rank();
            if coords.len() != sq.dim() || rank != sq.dim() {
                report.mismatches.push(E6Mismatch::RepresentativesNotBasis {
                    bidegree: b,
                    count: coords.len(),
                    rank,
                    dim: sq.dim(),
                });
            }
        }
    }
    Ok(report)
}

impl SpectralSequence {
    /// Runs [`verify_e6`] against the declared page over the exact range.
    pub fn verify_declared(&self) -> Result<E6Report, SpectralError> {
        let declared = declared_e6(self.e2_algebra(), self.max_total_degree())?;
        verify_e6(self.e2_algebra(), self.e6(), &declared, self.max_total_degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn declared_examples() {
        let e2 = E2Algebra::new();
        let p = declared_e6(&e2, 12).unwrap();
        assert_eq!(p.dim(Bidegree::new(0, 6)), Some(1));
        assert_eq!(p.dim(Bidegree::new(3, 1)), Some(4));
        assert_eq!(p.dim(Bidegree::new(10, 0)), Some(4));
        let bottom: Vec<usize> = (0..=6).map(|n| p.dim(Bidegree::new(n, 0)).unwrap()).collect();
        assert_eq!(bottom, vec![1, 2, 2, 3, 3, 4, 4]);
        assert!((0..=6).all(|n| p.dim(Bidegree::new(n, 4)) == Some(0)));
        assert_eq!(p.dim(Bidegree::new(2, 3)), Some(1));
    }

    #[test]
    fn descriptor_z_by_residue() {
        let g = Gca::e2();
        let z = |m| E6Descriptor::new(&g, Bidegree::new(0, m)).z.map(|e| g.format(&e));
        assert_eq!(z(0).as_deref(), Some("1"));
        assert_eq!(z(7).as_deref(), Some("u*t^3"));
        assert_eq!(z(14).as_deref(), Some("t^7"));
        assert_eq!(z(3).as_deref(), Some("u*t"));
        assert_eq!(z(4), None);
        assert_eq!(z(11), None);
    }

    #[test]
    fn corollary_dedupes_middle_terms() {
        let g = Gca::e2();
        assert_eq!(corollary_representatives(&g, Bidegree::new(4, 0)).len(), 3);
        assert_eq!(corollary_representatives(&g, Bidegree::new(6, 0)).len(), 4);
        assert_eq!(corollary_representatives(&g, Bidegree::new(5, 3)).len(), 0);
    }
}
