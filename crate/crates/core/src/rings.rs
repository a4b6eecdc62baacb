//! Leary's ring, its order-8 automorphism, the eight generators of the
//! invariant subring and the abstract presentation of that subring.

use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gca::{Bidegree, Element};
use crate::invariants::{fixed_space, projector_laws_hold, FixedSpace, InvariantError};
use crate::linalg::{Matrix, Subspace, F3};
use crate::presentation::{AlgebraMorphism, MorphismReport, PresentationError, PresentedAlgebra};
use crate::tables::{FREE_MODULE_BASIS, FREE_MODULE_POLYNOMIAL_DEGREES};

pub const LEARY_FIXTURE: &str = include_str!("../fixtures/leary.pres");
pub const J2_FIXTURE: &str = include_str!("../fixtures/j2.pres");

/// Images of Leary's generators under the order-8 automorphism.
pub const LEARY_ACTION: [(&str, &str); 9] = [
    ("y", "y - y'"),
    ("y'", "y + y'"),
    ("x", "x - x'"),
    ("x'", "x + x'"),
    ("Y", "x + x' - Y - Y'"),
    ("Y'", "x - x' + Y - Y'"),
    ("X", "-X - X'"),
    ("X'", "X - X'"),
    ("z", "-z"),
];

/// The eight invariant generators as elements of Leary's ring.
pub const J2_GENERATORS: [(&str, &str); 8] = [
    ("a", "Y*y' - x*y - x'*y'"),
    ("b", "Y*x - Y'*x'"),
    ("c", "x^2 + x'^2 + x*Y' + x'*Y"),
    ("d", "X*x - X'*x'"),
    ("e", "z*(y*x + y'*x')"),
    ("f", "z*(x^2 + x'^2)"),
    ("g", "-z*(X*x - X'*x' + Y*X')"),
    ("h", "z^2"),
];

/// `a ↦ Yy'` in place of the correct image; used as a negative control.
pub const CORRUPTED_A_IMAGE: &str = "Y*y'";

#[derive(Debug, Error)]
pub enum RingError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("cannot read fixture {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// Fixture text, from `dir/<name>` when a directory is given and from the
/// copy built into the crate otherwise.
pub fn load_fixture(name: &str, dir: Option<&Path>) -> Result<String, RingError> {
    if let Some(dir) = dir {
        let path = dir.join(name);
        return std::fs::read_to_string(&path).map_err(|source| RingError::Io { path: path.display().to_string(), source });
    }
    Ok(match name {
        "leary.pres" => LEARY_FIXTURE.to_string(),
        "j2.pres" => J2_FIXTURE.to_string(),
        other => {
            return Err(RingError::Io {
                path: other.to_string(),
                source: std::io::Error::new(std::io::ErrorKind::NotFound, "no built-in fixture"),
            })
        }
    })
}

/// Leary's ring together with the abstract J2 ring and the maps between them.
#[derive(Debug)]
pub struct Rings {
    pub leary: Arc<PresentedAlgebra>,
    pub j2: Arc<PresentedAlgebra>,
    pub action: AlgebraMorphism,
    pub inclusion: AlgebraMorphism,
}

impl Rings {
    pub fn load(dir: Option<&Path>) -> Result<Self, RingError> {
        let leary = Arc::new(PresentedAlgebra::from_text(&load_fixture("leary.pres", dir)?)?);
        let j2 = Arc::new(PresentedAlgebra::from_text(&load_fixture("j2.pres", dir)?)?);
        Self::with_generators(leary, j2, &J2_GENERATORS)
    }

    /// Same rings, with the images of `a..h` replaced.
    pub fn with_generators(
        leary: Arc<PresentedAlgebra>,
        j2: Arc<PresentedAlgebra>,
        generators: &[(&str, &str)],
    ) -> Result<Self, RingError> {
        let action = AlgebraMorphism::from_named(leary.clone(), leary.clone(), &LEARY_ACTION)?;
        let inclusion = AlgebraMorphism::from_named(j2.clone(), leary.clone(), generators)?;
        Ok(Rings { leary, j2, action, inclusion })
    }

    /// The same rings with `a` sent to [`CORRUPTED_A_IMAGE`].
    pub fn corrupted(&self) -> Result<Self, RingError> {
        let mut gens = J2_GENERATORS;
        gens[0].1 = CORRUPTED_A_IMAGE;
        Self::with_generators(self.leary.clone(), self.j2.clone(), &gens)
    }

    /// The generators `a..h` as elements of Leary's ring.
    pub fn j2_generators(&self) -> Vec<(String, Element)> {
        self.j2
            .spec()
            .generators
            .iter()
            .enumerate()
            .map(|(i, (name, _))| (name.clone(), self.inclusion.image(i).clone()))
            .collect()
    }

    /// Fixed points of the action on each degree `0..=n` of Leary's ring.
    pub fn c8_invariants(&self, n: i32) -> Result<Vec<LearyInvariants>, RingError> {
        self.leary.components(n);
        (0..=n)
            .into_par_iter()
            .map(|d| {
                let action = self.action.matrix(d)?;
                let fixed = fixed_space(&action, 8)?;
                Ok(LearyInvariants { degree: d, action, fixed })
            })
            .collect()
    }

    pub fn c8_invariant_dims(&self, n: i32) -> Result<Vec<i64>, RingError> {
        Ok(self.c8_invariants(n)?.iter().map(|i| i.fixed.dim() as i64).collect())
    }

    /// Whether each of `a..h` is fixed by the action.
    pub fn generators_fixed(&self) -> Result<Vec<(String, bool)>, RingError> {
        self.j2_generators()
            .into_iter()
            .map(|(name, e)| {
                let diff = &self.action.apply(&e) - &e;
                Ok((name, self.leary.is_zero(&diff)?))
            })
            .collect()
    }

    /// Per degree `d <= n`: the span of the monomials in `a..h` equals the
    /// fixed subspace, and the free-module count matches its dimension.
    pub fn generation_check(&self, n: i32) -> Result<GenerationReport, RingError> {
        let inv = self.c8_invariants(n)?;
        self.j2.components(n);
        let degrees: Vec<GenerationDegree> = inv
            .par_iter()
            .map(|li| {
                let d = li.degree;
                let free = self.j2.gca().basis(Bidegree::new(d, 0));
                let tgt = self.leary.component(d);
                let rows: Vec<Vec<_>> = free
                    .into_iter()
                    .map(|m| {
                        let img = self.inclusion.apply(&Element::monomial(m, F3::ONE));
                        tgt.free_basis().coordinates(&img).map(|v| tgt.quotient_coords(&v))
                    })
                    .collect::<Result<_, _>>()
                    .map_err(PresentationError::from)?;
                let span = Subspace::span(tgt.dim(), &rows);
                Ok(GenerationDegree {
                    degree: d,
                    invariant_dim: li.fixed.dim(),
                    span_dim: span.dim(),
                    free_module_count: free_module_count(d, &FREE_MODULE_BASIS, &FREE_MODULE_POLYNOMIAL_DEGREES),
                    spans_invariants: span == li.fixed.image,
                })
            })
            .collect::<Result<_, RingError>>()?;
        Ok(GenerationReport { degrees })
    }

    /// Compares the abstract ring with the invariants of Leary's ring up to
    /// degree `n`.
    pub fn j2_presentation_check(&self, n: i32) -> Result<PresentationCheck, RingError> {
        let well_defined = self.inclusion.well_defined()?;
        let hilbert = self.j2.hilbert_coeffs(n);
        let inv = self.c8_invariants(n)?;
        let invariant_dims = inv.iter().map(|i| i.fixed.dim() as i64).collect();
        let degrees = inv
            .par_iter()
            .map(|li| {
                let m = self.inclusion.matrix(li.degree)?;
                let image = Subspace::from_matrix(&m);
                Ok(InclusionDegree {
                    degree: li.degree,
                    source_dim: m.rows(),
                    rank: m.rank(),
                    invariant_dim: li.fixed.dim(),
                    bijective_onto_invariants: m.rank() == m.rows() && image == li.fixed.image,
                })
            })
            .collect::<Result<_, RingError>>()?;
        Ok(PresentationCheck { well_defined, hilbert, invariant_dims, degrees })
    }
}

#[derive(Clone, Debug)]
pub struct LearyInvariants {
    pub degree: i32,
    pub action: Matrix,
    pub fixed: FixedSpace,
}

impl LearyInvariants {
    pub fn projector_ok(&self) -> bool {
        projector_laws_hold(&self.action, &self.fixed.projector) && self.fixed.methods_agree()
    }
}

/// `#{(m', i, j) : deg m' + p0·i + p1·j = d}` for a free module over a
/// polynomial ring on generators of degrees `poly`.
pub fn free_module_count(d: i32, basis: &[(&str, u32)], poly: &[u32]) -> usize {
    fn count(rem: i64, poly: &[u32]) -> usize {
        match poly.split_first() {
            None => usize::from(rem == 0),
            Some((&p, rest)) => (0..=rem / p as i64).map(|i| count(rem - i * p as i64, rest)).sum(),
        }
    }
    basis.iter().filter(|(_, deg)| d as i64 >= *deg as i64).map(|(_, deg)| count(d as i64 - *deg as i64, poly)).sum()
}

/// Basis elements whose removal leaves the count unchanged for every degree
/// up to `n`. Empty when the module basis is minimal.
pub fn redundant_module_generators(coeffs: &[i64], basis: &[(&str, u32)], poly: &[u32]) -> Vec<String> {
    let mut out = Vec::new();
    for skip in 0..basis.len() {
        let sub: Vec<(&str, u32)> =
            basis.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, b)| *b).collect();
        let same = coeffs.iter().enumerate().all(|(d, &c)| free_module_count(d as i32, &sub, poly) as i64 == c);
        if same {
            out.push(basis[skip].0.to_string());
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationDegree {
    pub degree: i32,
    pub invariant_dim: usize,
    pub span_dim: usize,
    pub free_module_count: usize,
    pub spans_invariants: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationReport {
    pub degrees: Vec<GenerationDegree>,
}

impl GenerationReport {
    pub fn failures(&self) -> Vec<i32> {
        self.degrees
            .iter()
            .filter(|g| !g.spans_invariants || g.free_module_count != g.invariant_dim)
            .map(|g| g.degree)
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InclusionDegree {
    pub degree: i32,
    pub source_dim: usize,
    pub rank: usize,
    pub invariant_dim: usize,
    pub bijective_onto_invariants: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationCheck {
    pub well_defined: MorphismReport,
    pub hilbert: Vec<i64>,
    pub invariant_dims: Vec<i64>,
    pub degrees: Vec<InclusionDegree>,
}

impl PresentationCheck {
    pub fn passed(&self) -> bool {
        self.well_defined.passed()
            && self.hilbert == self.invariant_dims
            && self.degrees.iter().all(|d| d.bijective_onto_invariants)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        let r = Rings::load(None).unwrap();
        assert_eq!(r.leary.spec().generators.len(), 9);
        assert_eq!(r.leary.spec().relations.len(), 23);
        assert_eq!(r.j2.spec().relations.len(), 16);
        let odd: Vec<&str> = r
            .leary
            .spec()
            .generators
            .iter()
            .filter(|(_, d)| d % 2 == 1)
            .map(|(n, _)| n.as_str())
            .collect();
        assert_eq!(odd, ["y", "y'", "X", "X'"]);
    }

    #[test]
    fn leary_examples() {
        let r = Rings::load(None).unwrap();
        assert_eq!(r.leary.hilbert_coeffs(3), vec![1, 2, 4, 6]);
        for (s, zero) in [("y*y'", true), ("x^3*x' - x'^3*x", true), ("x", false)] {
            assert_eq!(r.leary.is_zero(&r.leary.parse(s).unwrap()).unwrap(), zero, "{s}");
        }
    }

    #[test]
    fn free_module_counts() {
        let c = |d| free_module_count(d, &FREE_MODULE_BASIS, &FREE_MODULE_POLYNOMIAL_DEGREES);
        assert_eq!(c(12), 3);
        assert_eq!(c(7), 1);
        assert_eq!(c(6), 0);
        assert_eq!(c(0), 1);
    }

    #[test]
    fn module_generators_are_needed() {
        let coeffs: Vec<i64> =
            (0..=24).map(|d| free_module_count(d, &FREE_MODULE_BASIS, &FREE_MODULE_POLYNOMIAL_DEGREES) as i64).collect();
        assert!(redundant_module_generators(&coeffs, &FREE_MODULE_BASIS, &FREE_MODULE_POLYNOMIAL_DEGREES).is_empty());
        let mut padded = FREE_MODULE_BASIS.to_vec();
        padded.push(("extra", 30));
        let r = redundant_module_generators(&coeffs, &padded, &FREE_MODULE_POLYNOMIAL_DEGREES);
        assert_eq!(r, vec!["extra".to_string()]);
    }

    #[test]
    fn fixture_directory_override() {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        assert_eq!(load_fixture("leary.pres", Some(&dir)).unwrap(), LEARY_FIXTURE);
        assert!(load_fixture("missing.pres", Some(&dir)).is_err());
    }
}
