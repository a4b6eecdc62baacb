//! Named pass/fail checks grouped into suites, and the table documents the
//! command line prints.

use std::fmt;
use std::path::PathBuf;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::gca::Bidegree;
use crate::invariants::{
    all_slot_invariants, invariant_periodicity_breaks, invariant_table, poincare_from_invariants,
    verify_action_commutes_with_differentials, verify_commuting_squares, ActionSpec, InvariantTable, LabelStatus,
};
use crate::linalg::Subspace;
use crate::rings::{redundant_module_generators, Rings};
use crate::series::{compare, double_sum_expand, Comparison, RationalSeriesSpec};
use crate::spectral::{
    binomial_identity_holds, corner_dims, d_squared_zero, dimension_growth, negative_control, phi, psi,
    t_cubed_is_permanent, SpectralSequence, CORRUPTED_T2W_IMAGE,
};
use crate::tables::{
    E6_CORNER_DIMS, E6_CORNER_REPRESENTATIVES, FREE_MODULE_BASIS, FREE_MODULE_POLYNOMIAL_DEGREES, INVARIANT_CORNER,
    INVARIANT_GENERATORS, INVARIANT_TABLE, LABEL_CORRECTIONS, POINCARE_PREFIX,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Smallest total degree for which the suites make sense: the E6 corner
/// and the printed Poincaré prefix both need degree 12.
pub const MIN_TOTAL_DEGREE: i32 = 12;

/// The full invariant table spans `n, m <= 21`, so it is always computed
/// to this total degree whatever the configured maximum.
pub const TABLE_TOTAL_DEGREE: i32 = INVARIANT_TABLE.0 + INVARIANT_TABLE.1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("max total degree {0} is below the minimum {MIN_TOTAL_DEGREE}")]
    DegreeTooSmall(i32),
    #[error("d5 constant must be 1 or 2, got {0}")]
    InvalidK(u8),
    #[error("requested degree {requested} exceeds max total degree {max}")]
    BeyondMax { requested: i32, max: i32 },
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub max_total_degree: i32,
    pub k_d5: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixtures: Option<PathBuf>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_total_degree: 24, k_d5: 1, fixtures: None }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.k_d5 != 1 && self.k_d5 != 2 {
            return Err(ConfigError::InvalidK(self.k_d5));
        }
        if self.max_total_degree < MIN_TOTAL_DEGREE {
            return Err(ConfigError::DegreeTooSmall(self.max_total_degree));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Ss,
    Invariants,
    Rings,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Ss => "ss",
            Suite::Invariants => "invariants",
            Suite::Rings => "rings",
            Suite::All => "all",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// The result the check reproduces.
    pub topic: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &str, topic: &str, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            topic: topic.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn error(name: &str, topic: &str, err: impl fmt::Display) -> Self {
        Check::new(name, topic, false, format!("error: {err}"))
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub suite: String,
    pub max_total_degree: i32,
    pub k_d5: u8,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub config: ConfigEcho,
    pub checks: Vec<Check>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<TableDocument>,
}

impl Report {
    fn new(suite: &str, cfg: &VerifyConfig, checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.passed()).count();
        let failed = checks.len() - passed;
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config: ConfigEcho { suite: suite.to_string(), max_total_degree: cfg.max_total_degree, k_d5: cfg.k_d5 },
            summary: Summary {
                total: checks.len(),
                passed,
                failed,
                status: if failed == 0 { Status::Pass } else { Status::Fail },
            },
            checks,
            tables: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.status == Status::Pass
    }
}

/// Lazily computed inputs shared by the suites.
pub struct Session {
    cfg: VerifyConfig,
    ss: [OnceLock<Result<SpectralSequence, String>>; 2],
    table_ss: OnceLock<Result<SpectralSequence, String>>,
    rings: OnceLock<Result<Rings, String>>,
}

impl Session {
    pub fn new(cfg: VerifyConfig) -> Result<Self, ConfigError> {
        cfg.validate()?;
        Ok(Session { cfg, ss: [OnceLock::new(), OnceLock::new()], table_ss: OnceLock::new(), rings: OnceLock::new() })
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.cfg
    }

    /// The sequence to the configured degree with d5 constant `k`.
    pub fn ss_for(&self, k: u8) -> Result<&SpectralSequence, String> {
        let cell = &self.ss[usize::from(k == 2)];
        cell.get_or_init(|| SpectralSequence::compute(self.cfg.max_total_degree, k).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn ss(&self) -> Result<&SpectralSequence, String> {
        self.ss_for(self.cfg.k_d5)
    }

    /// The sequence used for the full invariant table.
    pub fn table_ss(&self) -> Result<&SpectralSequence, String> {
        if self.cfg.max_total_degree >= TABLE_TOTAL_DEGREE {
            return self.ss();
        }
        self.table_ss
            .get_or_init(|| SpectralSequence::compute(TABLE_TOTAL_DEGREE, self.cfg.k_d5).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn rings(&self) -> Result<&Rings, String> {
        self.rings
            .get_or_init(|| Rings::load(self.cfg.fixtures.as_deref()).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn action(&self, ss: &SpectralSequence) -> ActionSpec {
        ActionSpec::c8(ss.e2_algebra().gca())
    }
}

/// Runs one suite. `All` runs the three suites in order.
pub fn run(suite: Suite, session: &Session) -> Report {
    let checks = match suite {
        Suite::Ss => ss_checks(session),
        Suite::Invariants => invariant_checks(session),
        Suite::Rings => ring_checks(session),
        Suite::All => {
            let mut c = ss_checks(session);
            c.extend(invariant_checks(session));
            c.extend(ring_checks(session));
            c
        }
    };
    Report::new(&suite.to_string(), session.config(), checks)
}

/// `verify all` plus every table.
pub fn full_report(session: &Session) -> Report {
    let mut report = run(Suite::All, session);
    report.config.suite = "report".into();
    for which in [TableKind::E6Corner, TableKind::InvariantsCorner, TableKind::Invariants21] {
        match table(which, session) {
            Ok(t) => report.tables.push(t),
            Err(e) => {
                report.checks.push(Check::error(&format!("table_{}", which.name()), "tables", e));
            }
        }
    }
    let failed = report.checks.iter().filter(|c| !c.passed()).count();
    report.summary = Summary {
        total: report.checks.len(),
        passed: report.checks.len() - failed,
        failed,
        status: if failed == 0 { Status::Pass } else { Status::Fail },
    };
    report
}

fn ss_checks(s: &Session) -> Vec<Check> {
    let mut out = Vec::new();
    let max = s.cfg.max_total_degree;
    let ss = match s.ss() {
        Ok(ss) => ss,
        Err(e) => return vec![Check::error("spectral_sequence", "differentials", e)],
    };

    // corner dimensions and representatives
    let dims = corner_dims(ss.e6(), 6, 5);
    let mut bad = Vec::new();
    for (m, row) in E6_CORNER_DIMS.iter().enumerate() {
        for (n, &want) in row.iter().enumerate() {
            if dims[m][n] != Some(want) {
                bad.push(format!("({n},{m}) expected {want} got {:?}", dims[m][n]));
            }
        }
    }
    out.push(Check::new(
        "e6_corner_dims",
        "E6 corner",
        bad.is_empty(),
        if bad.is_empty() { "42 slots match".into() } else { bad.join("; ") },
    ));
    out.push(match corner_representatives(ss) {
        Ok(bad) => Check::new(
            "e6_corner_representatives",
            "E6 corner",
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} slots spanned by the listed classes", E6_CORNER_REPRESENTATIVES.len())
            } else {
                bad.join("; ")
            },
        ),
        Err(e) => Check::error("e6_corner_representatives", "E6 corner", e),
    });

    // computed page against the declared description, for both constants
    for k in [1u8, 2] {
        let name = format!("e6_declared_k{k}");
        out.push(match s.ss_for(k).and_then(|x| x.verify_declared().map_err(|e| e.to_string())) {
            Ok(r) => Check::new(
                &name,
                "E6 subquotient description",
                r.passed(),
                format!("{} slots, {} mismatches{}", r.slots_checked, r.mismatches.len(), first(&r.mismatches)),
            ),
            Err(e) => Check::error(&name, "E6 subquotient description", e),
        });
    }

    let pmax = max.min(18);
    out.push(match periodicity(ss, pmax) {
        Ok((npsi, nphi, bad)) => Check::new(
            "periodicity_bijective",
            "vertical and horizontal periodicity",
            bad.is_empty(),
            if bad.is_empty() {
                format!("psi on {npsi} slots, phi on {nphi} slots, total degree <= {pmax}")
            } else {
                bad.join("; ")
            },
        ),
        Err(e) => Check::error("periodicity_bijective", "vertical and horizontal periodicity", e),
    });

    let qmax = (max / 2).min(10);
    let binom: Result<Vec<u32>, _> =
        (2..=qmax as u32).filter_map(|q| binomial_identity_holds(ss, q).map(|ok| (!ok).then_some(q)).transpose()).collect();
    out.push(match binom {
        Ok(bad) => Check::new(
            "binomial_identity",
            "(x1 ± x2)^q class identity",
            bad.is_empty(),
            format!("q = 2..={qmax}, failures {bad:?}"),
        ),
        Err(e) => Check::error("binomial_identity", "(x1 ± x2)^q class identity", e),
    });

    out.push(match d_squared_zero(ss) {
        Ok(c) => {
            let bad: Vec<String> = c.iter().filter(|x| !x.zero).map(|x| format!("d{} at {}", x.r, x.bidegree)).collect();
            Check::new("d_squared_zero", "differentials", bad.is_empty(), format!("{} composites, failures {bad:?}", c.len()))
        }
        Err(e) => Check::error("d_squared_zero", "differentials", e),
    });

    let growth = dimension_growth(ss);
    out.push(Check::new(
        "pages_shrink",
        "differentials",
        growth.is_empty(),
        format!("slots where a page grows: {growth:?}"),
    ));

    out.push(match t_cubed_is_permanent(ss) {
        Ok(ok) => Check::new("t_cubed_permanent", "vertical periodicity", ok, "t^3 is a nonzero cycle on every page"),
        Err(e) => Check::error("t_cubed_permanent", "vertical periodicity", e),
    });

    out.push(match negative_control(max, s.cfg.k_d5, CORRUPTED_T2W_IMAGE) {
        Ok(nc) => Check::new(
            "negative_control_d5",
            "differentials",
            nc.detected(),
            format!(
                "d5(t^2 w) = {}: {} turn issues, {} E6 mismatches{}",
                nc.corrupted_image,
                nc.issues.len(),
                nc.report.mismatches.len(),
                first(&nc.report.mismatches)
            ),
        ),
        Err(e) => Check::error("negative_control_d5", "differentials", e),
    });
    out
}

fn first<T: fmt::Debug>(items: &[T]) -> String {
    items.first().map(|x| format!(", first {x:?}")).unwrap_or_default()
}

fn corner_representatives(ss: &SpectralSequence) -> Result<Vec<String>, String> {
    let e2 = ss.e2_algebra();
    let mut bad = Vec::new();
    for &(n, m, reps) in E6_CORNER_REPRESENTATIVES {
        let b = Bidegree::new(n, m);
        let sq = ss.e6().slot(b).ok_or("missing slot")?.subquotient().map_err(|e| e.to_string())?;
        let mut classes = Vec::new();
        for r in reps {
            let v = e2.coords(b, &e2.parse(r).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            if !sq.cycles().contains(&v).map_err(|e| e.to_string())? {
                bad.push(format!("{r} is not a cycle at {b}"));
                continue;
            }
            classes.push(sq.class_coords(&v).map_err(|e| e.to_string())?);
        }
        let span = Subspace::span(sq.dim(), &classes);
        if span.dim() != sq.dim() || reps.len() != sq.dim() {
            bad.push(format!("{b}: {} listed, rank {}, dim {}", reps.len(), span.dim(), sq.dim()));
        }
    }
    Ok(bad)
}

fn periodicity(ss: &SpectralSequence, pmax: i32) -> Result<(usize, usize, Vec<String>), String> {
    let (mut npsi, mut nphi, mut bad) = (0, 0, Vec::new());
    for n in 0..=pmax {
        for m in 0..=(pmax - n) {
            let b = Bidegree::new(n, m);
            if b.total() + 6 <= pmax {
                npsi += 1;
                if !psi(ss, b).map_err(|e| e.to_string())?.is_bijective() {
                    bad.push(format!("psi at {b}"));
                }
            }
            if n >= 5 && b.total() + 2 <= pmax {
                nphi += 1;
                if !phi(ss, b).map_err(|e| e.to_string())?.is_bijective() {
                    bad.push(format!("phi at {b}"));
                }
            }
        }
    }
    Ok((npsi, nphi, bad))
}

fn invariant_checks(s: &Session) -> Vec<Check> {
    let mut out = Vec::new();
    let ss = match s.ss() {
        Ok(ss) => ss,
        Err(e) => return vec![Check::error("spectral_sequence", "invariants", e)],
    };
    let spec = s.action(ss);

    out.push(match invariant_table(ss, &spec, INVARIANT_CORNER.0, INVARIANT_CORNER.1) {
        Ok(t) => {
            let mut bad = Vec::new();
            if t.nonzero_slots() != 15 {
                bad.push(format!("{} nonzero slots", t.nonzero_slots()));
            }
            for (m, row) in t.dims.iter().enumerate() {
                for (n, &d) in row.iter().enumerate() {
                    let want_max = if (n, m) == (3, 1) { 2 } else { 1 };
                    if d > want_max || ((n, m) == (3, 1) && d != 2) {
                        bad.push(format!("({n},{m}) has dim {d}"));
                    }
                }
            }
            if !t.consistent() {
                bad.push("listed generators do not span".into());
            }
            Check::new("invariants_corner", "invariants corner", bad.is_empty(), if bad.is_empty() {
                "15 nonzero slots, dim 2 only at (3,1), listed classes span".to_string()
            } else {
                bad.join("; ")
            })
        }
        Err(e) => Check::error("invariants_corner", "invariants corner", e),
    });

    match s.table_ss().map_err(|e| e.to_string()).and_then(|tss| {
        let spec = s.action(tss);
        invariant_table(tss, &spec, INVARIANT_TABLE.0, INVARIANT_TABLE.1).map_err(|e| e.to_string())
    }) {
        Ok(t) => {
            out.push(table_counts_check(&t));
            out.push(label_check(&t));
        }
        Err(e) => out.push(Check::error("invariants_table_21", "generators of the invariant E6", e)),
    }

    let projector = match all_slot_invariants(ss, &spec) {
        Ok(inv) => {
            let bad: Vec<Bidegree> =
                inv.values().filter(|i| !i.projector_ok() || !i.fixed.methods_agree()).map(|i| i.bidegree).collect();
            let dims = inv.iter().map(|(b, i)| (*b, i.dim())).collect();
            let breaks = invariant_periodicity_breaks(&dims);
            out.push(Check::new(
                "invariant_periodicity",
                "invariants table",
                breaks.is_empty(),
                format!("period 12 in m, 4 in n >= 5; breaks {breaks:?}"),
            ));
            Check::new(
                "averaging_projector",
                "invariants",
                bad.is_empty(),
                format!("{} slots: idempotent, equivariant, image = ker(alpha - 1); failures {bad:?}", inv.len()),
            )
        }
        Err(e) => Check::error("averaging_projector", "invariants", e),
    };
    out.push(projector);

    out.push(match verify_commuting_squares(ss, &spec) {
        Ok(c) => {
            let bad: Vec<String> =
                c.iter().filter(|x| !x.commutes).map(|x| format!("{:?} at {}", x.kind, x.bidegree)).collect();
            Check::new("commuting_squares", "action commutes with periodicity", bad.is_empty(), format!(
                "{} squares, failures {bad:?}",
                c.len()
            ))
        }
        Err(e) => Check::error("commuting_squares", "action commutes with periodicity", e),
    });

    out.push(match verify_action_commutes_with_differentials(ss, &spec) {
        Ok(c) => {
            let bad: Vec<String> =
                c.iter().filter(|x| !x.commutes).map(|x| format!("d{} at {}", x.r, x.bidegree)).collect();
            Check::new("action_commutes_with_differentials", "invariants", bad.is_empty(), format!(
                "{} maps on pages 2..5, failures {bad:?}",
                c.len()
            ))
        }
        Err(e) => Check::error("action_commutes_with_differentials", "invariants", e),
    });

    out.push(match poincare_from_invariants(ss, &spec, 12) {
        Ok(p) => Check::new(
            "poincare_prefix",
            "Poincaré series",
            p == POINCARE_PREFIX,
            format!("{p:?}"),
        ),
        Err(e) => Check::error("poincare_prefix", "Poincaré series", e),
    });
    out
}

fn table_counts_check(t: &InvariantTable) -> Check {
    let mut counts = std::collections::BTreeMap::<(i32, i32), usize>::new();
    for &(n, m, _) in INVARIANT_GENERATORS {
        *counts.entry((n, m)).or_default() += 1;
    }
    let mut bad = Vec::new();
    for m in 0..=t.m_max {
        for n in 0..=t.n_max {
            let want = counts.get(&(n, m)).copied().unwrap_or(0);
            if t.dim(n, m) != want {
                bad.push(format!("({n},{m}) listed {want} computed {}", t.dim(n, m)));
            }
        }
    }
    Check::new(
        "invariants_table_21",
        "generators of the invariant E6",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} nonzero slots, entry counts match", t.nonzero_slots())
        } else {
            bad.join("; ")
        },
    )
}

fn label_check(t: &InvariantTable) -> Check {
    let flagged: Vec<String> = t
        .mismatched_labels()
        .map(|l| {
            let what = match &l.status {
                LabelStatus::BidegreeMismatch { actual, corrected, corrected_invariant } => format!(
                    "{}; {}",
                    actual.map_or("is zero".to_string(), |b| format!("lives at {b}")),
                    match corrected {
                        Some(c) if *corrected_invariant => format!("{c} is an invariant class there"),
                        Some(c) => format!("{c} does not fix it"),
                        None => "no correction known".to_string(),
                    }
                ),
                other => format!("{other:?}"),
            };
            format!("({},{}) {}: {what}", l.n, l.m, l.expr)
        })
        .collect();
    let known = flagged.len() == LABEL_CORRECTIONS.len();
    Check::new(
        "invariants_table_labels",
        "generators of the invariant E6",
        t.consistent() && known,
        format!("{} labels checked; flagged: {}", t.labels.len(), flagged.join("; ")),
    )
}

fn ring_checks(s: &Session) -> Vec<Check> {
    let mut out = Vec::new();
    let n = s.cfg.max_total_degree;
    let rings = match s.rings() {
        Ok(r) => r,
        Err(e) => return vec![Check::error("rings", "Leary's ring", e)],
    };

    out.push(match rings.action.well_defined() {
        Ok(r) => Check::new(
            "leary_action_well_defined",
            "action on Leary's ring",
            r.passed(),
            format!("{} relations, failures {:?}", r.relations_checked, r.failures),
        ),
        Err(e) => Check::error("leary_action_well_defined", "action on Leary's ring", e),
    });

    out.push(match s.ss() {
        Ok(ss) => {
            let mut diag = vec![0i64; n as usize + 1];
            for (b, d) in ss.e6_dims() {
                if ss.in_range(b) {
                    diag[b.total() as usize] += d as i64;
                }
            }
            let h = rings.leary.hilbert_coeffs(n);
            Check::new("leary_hilbert_matches_e6", "Leary's ring", h == diag, format!("{h:?}"))
        }
        Err(e) => Check::error("leary_hilbert_matches_e6", "Leary's ring", e),
    });

    out.push(match rings.c8_invariants(n) {
        Ok(inv) => {
            let bad: Vec<i32> = inv.iter().filter(|i| !i.projector_ok()).map(|i| i.degree).collect();
            Check::new(
                "leary_projector",
                "action on Leary's ring",
                bad.is_empty(),
                format!("degrees 0..={n}; failures {bad:?}"),
            )
        }
        Err(e) => Check::error("leary_projector", "action on Leary's ring", e),
    });

    out.push(match rings.generators_fixed() {
        Ok(f) => {
            let bad: Vec<&str> = f.iter().filter(|(_, ok)| !ok).map(|(g, _)| g.as_str()).collect();
            Check::new("generators_fixed", "invariant subring", bad.is_empty(), format!("not fixed: {bad:?}"))
        }
        Err(e) => Check::error("generators_fixed", "invariant subring", e),
    });

    out.push(match rings.generation_check(n) {
        Ok(g) => Check::new(
            "generators_span_invariants",
            "invariant subring",
            g.passed(),
            format!("degrees 0..={n}; failures {:?}", g.failures()),
        ),
        Err(e) => Check::error("generators_span_invariants", "invariant subring", e),
    });

    let presentation = match rings.j2_presentation_check(n) {
        Ok(p) => {
            let bad: Vec<i32> = p.degrees.iter().filter(|d| !d.bijective_onto_invariants).map(|d| d.degree).collect();
            out.push(Check::new(
                "j2_relations_vanish",
                "presentation of the invariant ring",
                p.well_defined.passed(),
                format!("{} relations, failures {:?}", p.well_defined.relations_checked, p.well_defined.failures),
            ));
            let redundant = redundant_module_generators(&p.hilbert, &FREE_MODULE_BASIS, &FREE_MODULE_POLYNOMIAL_DEGREES);
            let counts_ok = p.hilbert.iter().enumerate().all(|(d, &c)| {
                crate::rings::free_module_count(d as i32, &FREE_MODULE_BASIS, &FREE_MODULE_POLYNOMIAL_DEGREES) as i64 == c
            });
            out.push(Check::new(
                "free_module_basis",
                "free module over F3[c,h]",
                counts_ok && redundant.is_empty(),
                format!("counts match: {counts_ok}; redundant generators {redundant:?}"),
            ));
            Check::new(
                "j2_presentation_isomorphism",
                "presentation of the invariant ring",
                p.passed(),
                format!("Hilbert series {:?}; non-bijective degrees {bad:?}", p.hilbert),
            )
        }
        Err(e) => Check::error("j2_presentation_isomorphism", "presentation of the invariant ring", e),
    };
    out.push(presentation);

    out.push(poincare_check(s, n as usize));

    out.push(match rings.corrupted().and_then(|c| Ok(c.inclusion.well_defined()?)) {
        Ok(r) => Check::new(
            "negative_control_generator",
            "presentation of the invariant ring",
            !r.passed(),
            format!("a = {}: {} relations fail: {:?}", crate::rings::CORRUPTED_A_IMAGE, r.failures.len(), r.failures),
        ),
        Err(e) => Check::error("negative_control_generator", "presentation of the invariant ring", e),
    });
    out
}

/// The four computations of the Poincaré series, to degree `n`.
#[derive(Clone, Debug, Serialize)]
pub struct PoincareRows {
    pub degree: usize,
    pub closed_form: Vec<i64>,
    pub e6_invariants: Vec<i64>,
    pub leary_invariants: Vec<i64>,
    pub presentation: Vec<i64>,
    pub agree: bool,
}

pub fn poincare_rows(s: &Session, n: usize) -> Result<PoincareRows, String> {
    if n as i32 > s.cfg.max_total_degree {
        return Err(ConfigError::BeyondMax { requested: n as i32, max: s.cfg.max_total_degree }.to_string());
    }
    let ss = s.ss()?;
    let rings = s.rings()?;
    let closed_form = RationalSeriesSpec::poincare().expand(n).coeffs().to_vec();
    let e6_invariants = poincare_from_invariants(ss, &s.action(ss), n as i32).map_err(|e| e.to_string())?;
    let leary_invariants = rings.c8_invariant_dims(n as i32).map_err(|e| e.to_string())?;
    let presentation = rings.j2.hilbert_coeffs(n as i32);
    let agree = closed_form == e6_invariants && e6_invariants == leary_invariants && leary_invariants == presentation;
    Ok(PoincareRows { degree: n, closed_form, e6_invariants, leary_invariants, presentation, agree })
}

fn poincare_check(s: &Session, n: usize) -> Check {
    match poincare_rows(s, n) {
        Ok(rows) => {
            let double = compare(&double_sum_expand(60), &RationalSeriesSpec::poincare().expand(60), 60);
            let prefix = rows.closed_form[..=12] == POINCARE_PREFIX;
            let ok = rows.agree && prefix && double == Ok(Comparison::Equal);
            Check::new(
                "poincare_four_way",
                "Poincaré series",
                ok,
                format!(
                    "degrees 0..={n} agree: {}; printed prefix: {prefix}; double sum to 60: {double:?}",
                    rows.agree
                ),
            )
        }
        Err(e) => Check::error("poincare_four_way", "Poincaré series", e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TableKind {
    E6Corner,
    InvariantsCorner,
    Invariants21,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::E6Corner => "e6-corner",
            TableKind::InvariantsCorner => "invariants-corner",
            TableKind::Invariants21 => "invariants-21",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub n: i32,
    pub m: i32,
    pub dim: usize,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableDocument {
    pub table: String,
    pub n_max: i32,
    pub m_max: i32,
    /// `dims[m][n]`.
    pub dims: Vec<Vec<usize>>,
    /// Nonzero slots with their listed representatives or generators.
    pub entries: Vec<TableEntry>,
}

pub fn table(which: TableKind, s: &Session) -> Result<TableDocument, String> {
    let (dims, n_max, m_max, labels): (Vec<Vec<usize>>, i32, i32, Vec<(i32, i32, String)>) = match which {
        TableKind::E6Corner => {
            let ss = s.ss()?;
            let d = corner_dims(ss.e6(), 6, 5);
            let dims = d.into_iter().map(|r| r.into_iter().map(|x| x.unwrap_or(0)).collect()).collect();
            let labels = E6_CORNER_REPRESENTATIVES
                .iter()
                .flat_map(|(n, m, reps)| reps.iter().map(move |r| (*n, *m, r.to_string())))
                .collect();
            (dims, 6, 5, labels)
        }
        TableKind::InvariantsCorner | TableKind::Invariants21 => {
            let ((n_max, m_max), ss) = if which == TableKind::InvariantsCorner {
                (INVARIANT_CORNER, s.ss()?)
            } else {
                (INVARIANT_TABLE, s.table_ss()?)
            };
            let t = invariant_table(ss, &s.action(ss), n_max, m_max).map_err(|e| e.to_string())?;
            let labels = t.labels.iter().map(|l| (l.n, l.m, l.expr.clone())).collect();
            (t.dims, n_max, m_max, labels)
        }
    };
    let mut entries = Vec::new();
    for (m, row) in dims.iter().enumerate() {
        for (n, &dim) in row.iter().enumerate() {
            let (n, m) = (n as i32, m as i32);
            if dim > 0 {
                let labels = labels.iter().filter(|l| l.0 == n && l.1 == m).map(|l| l.2.clone()).collect();
                entries.push(TableEntry { n, m, dim, labels });
            }
        }
    }
    Ok(TableDocument { table: which.name().to_string(), n_max, m_max, dims, entries })
}
