//! Plain-text layouts. Grids put n across and m down, so m grows downward.

use std::fmt::Write;

use j2coh_core::verify::{Check, PoincareRows, Report, Status, TableDocument};

pub fn table(doc: &TableDocument) -> String {
    let mut s = String::new();
    let width = doc.n_max.to_string().len().max(doc.m_max.to_string().len()).max(2);
    writeln!(s, "{} (n = 0..{}, m = 0..{})", doc.table, doc.n_max, doc.m_max).unwrap();
    writeln!(s, "axes: n increases to the right, m increases downward; '.' marks 0").unwrap();
    write!(s, "{:>w$} |", "m\\n", w = width + 1).unwrap();
    for n in 0..=doc.n_max {
        write!(s, " {n:>width$}").unwrap();
    }
    s.push('\n');
    writeln!(s, "{}-+{}", "-".repeat(width + 1), "-".repeat((doc.n_max as usize + 1) * (width + 1))).unwrap();
    for (m, row) in doc.dims.iter().enumerate() {
        write!(s, "{m:>w$} |", w = width + 1).unwrap();
        for d in row {
            if *d == 0 {
                write!(s, " {:>width$}", ".").unwrap();
            } else {
                write!(s, " {d:>width$}").unwrap();
            }
        }
        s.push('\n');
    }
    if doc.entries.iter().any(|e| !e.labels.is_empty()) {
        s.push('\n');
        for e in &doc.entries {
            writeln!(s, "({},{}) dim {}: {}", e.n, e.m, e.dim, e.labels.join(", ")).unwrap();
        }
    }
    s
}

fn check_line(s: &mut String, c: &Check) {
    let tag = match c.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    };
    writeln!(s, "{tag} {:<36} [{}] {}", c.name, c.topic, c.detail).unwrap();
}

pub fn report(r: &Report) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "j2coh {} verify {} (max total degree {}, k = {})",
        r.tool_version, r.config.suite, r.config.max_total_degree, r.config.k_d5
    )
    .unwrap();
    for c in &r.checks {
        check_line(&mut s, c);
    }
    let status = match r.summary.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    };
    writeln!(s, "{status}: {} of {} checks passed", r.summary.passed, r.summary.total).unwrap();
    s
}

pub fn full_report(r: &Report) -> String {
    let mut s = report(r);
    for t in &r.tables {
        s.push('\n');
        s.push_str(&table(t));
    }
    s
}

pub fn poincare(p: &PoincareRows) -> String {
    let mut s = String::new();
    let cell = |v: i64| format!("{v:>3}");
    let rows: [(&str, &[i64]); 4] = [
        ("closed form", &p.closed_form),
        ("E6 invariants", &p.e6_invariants),
        ("Leary invariants", &p.leary_invariants),
        ("presentation", &p.presentation),
    ];
    write!(s, "{:<17}", "degree").unwrap();
    for d in 0..=p.degree {
        write!(s, "{}", cell(d as i64)).unwrap();
    }
    s.push('\n');
    for (name, vals) in rows {
        write!(s, "{name:<17}").unwrap();
        for v in vals {
            write!(s, "{}", cell(*v)).unwrap();
        }
        s.push('\n');
    }
    writeln!(s, "{}", if p.agree { "agree" } else { "DISAGREE" }).unwrap();
    s
}
