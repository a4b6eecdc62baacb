//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every comparison is exact.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use j2coh_core::gca::Bidegree;
use j2coh_core::invariants::{invariant_table, poincare_from_invariants, verify_commuting_squares, ActionSpec};
use j2coh_core::linalg::{kernel_basis, Matrix, Subspace, F3};
use j2coh_core::presentation::PresentedAlgebra;
use j2coh_core::rings::{free_module_count, redundant_module_generators, Rings};
use j2coh_core::series::{compare, double_sum_expand, Comparison, RationalSeriesSpec};
use j2coh_core::spectral::{
    binomial_identity_holds, corner_dims, d_squared_zero, negative_control, phi, psi, CORRUPTED_T2W_IMAGE,
};
use j2coh_core::tables::{
    E6_CORNER_DIMS, FREE_MODULE_BASIS, FREE_MODULE_POLYNOMIAL_DEGREES, INVARIANT_CORNER, INVARIANT_GENERATORS,
    INVARIANT_TABLE, LABEL_CORRECTIONS, POINCARE_PREFIX,
};
use j2coh_core::{Element, SpectralSequence};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn ss(max: i32, k: u8) -> Result<SpectralSequence, String> {
    SpectralSequence::compute(max, k).map_err(e)
}

fn corner() -> Outcome {
    let s = ss(11, 1)?;
    let dims = corner_dims(s.e6(), 6, 5);
    for (m, row) in E6_CORNER_DIMS.iter().enumerate() {
        for (n, &want) in row.iter().enumerate() {
            ensure(dims[m][n] == Some(want), || format!("({n},{m}): {:?} != {want}", dims[m][n]))?;
        }
    }
    ensure(dims[3][2] == Some(1), || "slot (2,3)".into())?;
    Ok("42 slots of 0<=n<=6, 0<=m<=5".into())
}

fn declared() -> Outcome {
    for k in [1, 2] {
        let r = ss(24, k)?.verify_declared().map_err(e)?;
        ensure(r.passed(), || format!("k={k}: {:?}", r.mismatches.first()))?;
        ensure(r.slots_checked == 325, || format!("k={k}: {} slots", r.slots_checked))?;
    }
    Ok("325 slots with n+m<=24, k=1 and k=2, corollary representatives included".into())
}

fn periodicity() -> Outcome {
    let s = ss(24, 1)?;
    let (mut a, mut b) = (0, 0);
    for n in 0..=18 {
        for m in 0..=(18 - n) {
            let x = Bidegree::new(n, m);
            if x.total() + 6 <= 18 {
                ensure(psi(&s, x).map_err(e)?.is_bijective(), || format!("psi at {x}"))?;
                a += 1;
            }
            if n >= 5 && x.total() + 2 <= 18 {
                ensure(phi(&s, x).map_err(e)?.is_bijective(), || format!("phi at {x}"))?;
                b += 1;
            }
        }
    }
    for q in 2..=10 {
        ensure(binomial_identity_holds(&s, q).map_err(e)?, || format!("q={q}"))?;
    }
    Ok(format!("psi on {a} slots, phi on {b} slots, q=2..10"))
}

fn invariants() -> Outcome {
    let s = ss(24, 1)?;
    let spec = ActionSpec::c8(s.e2_algebra().gca());
    let c = invariant_table(&s, &spec, INVARIANT_CORNER.0, INVARIANT_CORNER.1).map_err(e)?;
    ensure(c.nonzero_slots() == 15, || format!("{} nonzero corner slots", c.nonzero_slots()))?;
    for (m, row) in c.dims.iter().enumerate() {
        for (n, &d) in row.iter().enumerate() {
            let want = if (n, m) == (3, 1) { d == 2 } else { d <= 1 };
            ensure(want, || format!("corner ({n},{m}) = {d}"))?;
        }
    }
    let big = ss(42, 1)?;
    let t = invariant_table(&big, &ActionSpec::c8(big.e2_algebra().gca()), INVARIANT_TABLE.0, INVARIANT_TABLE.1)
        .map_err(e)?;
    for m in 0..=21 {
        for n in 0..=21 {
            let listed = INVARIANT_GENERATORS.iter().filter(|g| g.0 == n && g.1 == m).count();
            ensure(t.dim(n, m) == listed, || format!("table ({n},{m}): {} != {listed}", t.dim(n, m)))?;
        }
    }
    let flagged: Vec<_> = t.mismatched_labels().collect();
    ensure(flagged.len() == LABEL_CORRECTIONS.len() && t.consistent(), || format!("labels {flagged:?}"))?;
    let squares = verify_commuting_squares(&s, &spec).map_err(e)?;
    ensure(squares.iter().all(|x| x.commutes), || "commuting squares".into())?;
    let notes: Vec<String> = flagged.iter().map(|l| format!("({},{}) {}", l.n, l.m, l.expr)).collect();
    Ok(format!("22x22 counts match, {} squares commute; flagged labels: {}", squares.len(), notes.join(", ")))
}

fn poincare() -> Outcome {
    let s = ss(24, 1)?;
    let rings = Rings::load(None).map_err(e)?;
    let closed = RationalSeriesSpec::poincare().expand(24);
    let e6 = poincare_from_invariants(&s, &ActionSpec::c8(s.e2_algebra().gca()), 24).map_err(e)?;
    let leary = rings.c8_invariant_dims(24).map_err(e)?;
    let pres = rings.j2.hilbert_coeffs(24);
    ensure(closed.coeffs() == e6.as_slice(), || format!("closed {closed} vs E6 {e6:?}"))?;
    ensure(e6 == leary, || format!("E6 {e6:?} vs Leary {leary:?}"))?;
    ensure(leary == pres, || format!("Leary {leary:?} vs presentation {pres:?}"))?;
    ensure(closed.coeffs()[..13] == POINCARE_PREFIX, || "printed prefix".into())?;
    let d = compare(&double_sum_expand(60), &RationalSeriesSpec::poincare().expand(60), 60).map_err(e)?;
    ensure(d == Comparison::Equal, || format!("double sum {d:?}"))?;
    Ok("four computations agree to degree 24; double sum = closed form to 60".into())
}

fn ring_theorems() -> Outcome {
    let r = Rings::load(None).map_err(e)?;
    let action = r.action.well_defined().map_err(e)?;
    ensure(action.passed(), || format!("action: {:?}", action.failures))?;
    let fixed = r.generators_fixed().map_err(e)?;
    ensure(fixed.iter().all(|x| x.1), || format!("fixed: {fixed:?}"))?;
    let rels = r.inclusion.well_defined().map_err(e)?;
    ensure(rels.passed() && rels.relations_checked == 16, || format!("relations: {:?}", rels.failures))?;
    let g = r.generation_check(24).map_err(e)?;
    ensure(g.passed(), || format!("generation fails in degrees {:?}", g.failures()))?;
    let h = r.j2.hilbert_coeffs(24);
    for (d, &c) in h.iter().enumerate() {
        let count = free_module_count(d as i32, &FREE_MODULE_BASIS, &FREE_MODULE_POLYNOMIAL_DEGREES) as i64;
        ensure(count == c, || format!("free module count {count} != {c} in degree {d}"))?;
    }
    let redundant = redundant_module_generators(&h, &FREE_MODULE_BASIS, &FREE_MODULE_POLYNOMIAL_DEGREES);
    ensure(redundant.is_empty(), || format!("redundant {redundant:?}"))?;
    Ok("action well defined, a..h fixed, 16 relations vanish, generation and module count to 24".into())
}

fn brute_force_matches(a: &PresentedAlgebra, d: i32) -> Result<(), String> {
    let gca = a.gca();
    let basis = gca.monomial_basis(Bidegree::new(d, 0));
    let mut rows = Vec::new();
    for r in a.relations() {
        let rd = gca.bidegree(r).map_err(e)?.map_or(0, |b| b.n);
        if rd <= d {
            for m in gca.basis(Bidegree::new(d - rd, 0)) {
                rows.push(basis.coordinates(&gca.mul(r, &Element::monomial(m, F3::ONE))).map_err(e)?);
            }
        }
    }
    let ideal = Subspace::span(basis.len(), &rows);
    ensure(a.dim(d) + ideal.dim() == basis.len(), || format!("dimension in degree {d}"))?;
    for i in 0..basis.len() {
        let mut v = vec![F3::ZERO; basis.len()];
        v[i] = F3::ONE;
        if i + 1 < basis.len() {
            v[i + 1] = F3::TWO;
        }
        let x = basis.element(&v);
        ensure(a.is_zero(&x).map_err(e)? == ideal.contains(&v).map_err(e)?, || format!("degree {d} vector {i}"))?;
    }
    for row in ideal.rows() {
        ensure(a.is_zero(&basis.element(row)).map_err(e)?, || format!("ideal row in degree {d}"))?;
    }
    Ok(())
}

fn properties() -> Outcome {
    let s = ss(24, 1)?;
    let dd = d_squared_zero(&s).map_err(e)?;
    ensure(dd.iter().all(|c| c.zero), || "d o d".into())?;
    ensure((2..=5).all(|r| dd.iter().any(|c| c.r == r)), || "d o d missing a page".into())?;

    let spec = ActionSpec::c8(s.e2_algebra().gca());
    let inv = j2coh_core::invariants::all_slot_invariants(&s, &spec).map_err(e)?;
    ensure(inv.values().all(|i| i.projector_ok() && i.fixed.methods_agree()), || "projector".into())?;
    let rings = Rings::load(None).map_err(e)?;
    ensure(rings.c8_invariants(24).map_err(e)?.iter().all(|i| i.projector_ok()), || "Leary projector".into())?;

    for code in 0..81i64 {
        let entries: Vec<i64> = (0..4).map(|i| (code / 3i64.pow(i)) % 3).collect();
        let m = Matrix::from_i64(2, 2, &entries);
        ensure(m.rank() + kernel_basis(&m).dim() == 2, || format!("rank-nullity {entries:?}"))?;
    }

    for alg in [&rings.leary, &rings.j2] {
        for d in 0..=10 {
            brute_force_matches(alg, d)?;
        }
    }

    let nc = negative_control(24, 1, CORRUPTED_T2W_IMAGE).map_err(e)?;
    ensure(nc.detected() && !nc.report.mismatches.is_empty(), || "corrupted d5 not detected".into())?;
    let bad = rings.corrupted().map_err(e)?.inclusion.well_defined().map_err(e)?;
    ensure(!bad.failures.is_empty(), || "corrupted generator not detected".into())?;
    Ok(format!(
        "{} d o d composites, 81 2x2 matrices, brute force to degree 10; controls: {} E6 mismatches, {} relations fail",
        dd.len(),
        nc.report.mismatches.len(),
        bad.failures.len()
    ))
}

fn full_report() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_j2coh")).arg("report").output().map_err(e)?;
    let took = start.elapsed();
    ensure(out.status.code() == Some(0), || {
        format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout))
    })?;
    ensure(took < Duration::from_secs(120), || format!("took {took:?}"))?;
    Ok(format!("exit 0 in {:.1} s", took.as_secs_f64()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("E6 corner", corner, Duration::from_secs(5)),
        ("E6 equals the declared subquotients", declared, Duration::from_secs(30)),
        ("periodicity", periodicity, Duration::from_secs(60)),
        ("invariants", invariants, Duration::from_secs(60)),
        ("Poincaré four-way agreement", poincare, Duration::from_secs(60)),
        ("ring theorems", ring_theorems, Duration::from_secs(120)),
        ("property suites", properties, Duration::from_secs(120)),
        ("full report", full_report, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let (tag, detail) = match result {
            Ok(d) if took <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the {limit:?} budget")),
            Err(d) => ("FAIL", d),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} criterion {}: {name} ({:.2} s) {detail}", i + 1, took.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
