use j2coh_core::gca::Bidegree;
use j2coh_core::invariants::{poincare_from_invariants, ActionSpec};
use j2coh_core::linalg::{Subspace, F3};
use j2coh_core::presentation::PresentedAlgebra;
use j2coh_core::rings::{redundant_module_generators, Rings};
use j2coh_core::series::RationalSeriesSpec;
use j2coh_core::tables::{FREE_MODULE_BASIS, FREE_MODULE_POLYNOMIAL_DEGREES};
use j2coh_core::{Element, SpectralSequence};

const N: i32 = 24;

/// Dense span of every relation-times-monomial product in degree `d`.
fn brute_force_ideal(a: &PresentedAlgebra, d: i32) -> (Vec<j2coh_core::Monomial>, Subspace) {
    let gca = a.gca();
    let basis = gca.monomial_basis(Bidegree::new(d, 0));
    let mut rows = Vec::new();
    for r in a.relations() {
        let rd = gca.bidegree(r).unwrap().unwrap().n;
        if rd > d {
            continue;
        }
        for m in gca.basis(Bidegree::new(d - rd, 0)) {
            let p = gca.mul(r, &Element::monomial(m, F3::ONE));
            rows.push(basis.coordinates(&p).unwrap());
        }
    }
    (basis.monomials().to_vec(), Subspace::span(basis.len(), &rows))
}

#[test]
fn is_zero_agrees_with_brute_force() {
    let rings = Rings::load(None).unwrap();
    for alg in [&rings.leary, &rings.j2] {
        for d in 0..=10 {
            let (monos, ideal) = brute_force_ideal(alg, d);
            assert_eq!(alg.dim(d), monos.len() - ideal.dim(), "degree {d}");
            // sample elements: each monomial, and sums of consecutive pairs
            let n = monos.len();
            for i in 0..n {
                for j in [i, (i + 1) % n] {
                    let mut v = vec![F3::ZERO; n];
                    v[i] += F3::ONE;
                    v[j] += F3::new(2);
                    let e = alg.gca().monomial_basis(Bidegree::new(d, 0)).element(&v);
                    assert_eq!(alg.is_zero(&e).unwrap(), ideal.contains(&v).unwrap(), "degree {d}");
                }
            }
            // every ideal basis vector is zero in the quotient
            for row in ideal.rows() {
                let e = alg.gca().monomial_basis(Bidegree::new(d, 0)).element(row);
                assert!(alg.is_zero(&e).unwrap());
            }
        }
    }
}

#[test]
fn leary_hilbert_series_matches_e6_diagonals() {
    let rings = Rings::load(None).unwrap();
    let ss = SpectralSequence::compute(N, 1).unwrap();
    let mut diag = vec![0i64; N as usize + 1];
    for (b, d) in ss.e6_dims() {
        if ss.in_range(b) {
            diag[b.total() as usize] += d as i64;
        }
    }
    assert_eq!(rings.leary.hilbert_coeffs(N), diag);
}

#[test]
fn four_way_poincare_agreement() {
    let rings = Rings::load(None).unwrap();
    let ss = SpectralSequence::compute(N, 1).unwrap();
    let spec = ActionSpec::c8(ss.e2_algebra().gca());
    let closed = RationalSeriesSpec::poincare().expand(N as usize);
    let e6 = poincare_from_invariants(&ss, &spec, N).unwrap();
    let leary = rings.c8_invariant_dims(N).unwrap();
    let abstract_ring = rings.j2.hilbert_coeffs(N);
    assert_eq!(closed.coeffs(), e6.as_slice());
    assert_eq!(e6, leary);
    assert_eq!(leary, abstract_ring);
}

#[test]
fn ring_theorems() {
    let rings = Rings::load(None).unwrap();
    assert!(rings.action.well_defined().unwrap().passed());
    assert!(rings.generators_fixed().unwrap().iter().all(|(_, ok)| *ok));
    let inv = rings.c8_invariants(N).unwrap();
    assert!(inv.iter().all(|i| i.projector_ok()));
    let gen = rings.generation_check(N).unwrap();
    assert!(gen.passed(), "{:?}", gen.failures());
    let pres = rings.j2_presentation_check(N).unwrap();
    assert_eq!(pres.well_defined.relations_checked, 16);
    assert!(pres.passed());
    let coeffs = rings.j2.hilbert_coeffs(N);
    assert!(redundant_module_generators(&coeffs, &FREE_MODULE_BASIS, &FREE_MODULE_POLYNOMIAL_DEGREES).is_empty());
}

#[test]
fn relation_examples_from_the_proof() {
    let rings = Rings::load(None).unwrap();
    let l = &rings.leary;
    let map = |s: &str| rings.inclusion.apply(&rings.j2.parse(s).unwrap());
    assert!(l.is_zero(&map("b*f - a*g")).unwrap());
    assert!(l.is_zero(&map("f^2 - c^2*h")).unwrap());
    let ag = l.normal_form(&map("a*g")).unwrap();
    let expected = l.normal_form(&l.parse("z*(x^3*Y - x'^3*Y' - x*x'^2*Y + x^3*x')").unwrap()).unwrap();
    assert_eq!(ag, expected);
    let c2h = l.normal_form(&map("c^2*h")).unwrap();
    let expected = l.normal_form(&l.parse("z^2*(x^4 + x'^4 - x^2*x'^2)").unwrap()).unwrap();
    assert_eq!(c2h, expected);
}

#[test]
fn corrupted_generator_is_reported() {
    let rings = Rings::load(None).unwrap().corrupted().unwrap();
    let report = rings.inclusion.well_defined().unwrap();
    assert!(!report.passed());
    assert!(!rings.generators_fixed().unwrap()[0].1);
}
