//! Finitely presented graded-commutative algebras over F3, computed one
//! degree at a time.
//!
//! The ideal in degree `d` is spanned by the products `r·m` of a relation
//! with a monomial of complementary degree; graded commutativity makes this
//! the two-sided ideal. Each degree is reduced to a sparse echelon form whose
//! pivot is the smallest column, and the monomials that are not pivots form
//! the quotient basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gca::{AlgebraMap, Bidegree, Element, Gca, GcaError, Monomial, MonomialBasis};
use crate::linalg::{Matrix, F3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Expression { line: usize, source: GcaError },
    #[error(transparent)]
    Gca(#[from] GcaError),
    #[error("relation `{0}` is not homogeneous")]
    InhomogeneousRelation(String),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("image of {generator} has degree {found}, expected {expected}")]
    DegreeMismatch { generator: String, expected: i32, found: i32 },
    #[error("expected {expected} generator images, got {found}")]
    ImageCount { expected: usize, found: usize },
}

/// Generators with degrees and relations as source text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationSpec {
    pub generators: Vec<(String, i32)>,
    pub relations: Vec<String>,
}

impl PresentationSpec {
    /// Reads `gen <name> <degree>` and `rel <expr>` lines. A relation may be
    /// written `lhs = rhs`, stored as `lhs - (rhs)` (or `lhs` when `rhs` is 0). `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut generators = Vec::new();
        let mut relations = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
            let rest = rest.trim();
            match kw {
                "gen" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    let [name, deg] = parts[..] else {
                        return Err(PresentationError::Syntax { line, msg: "expected `gen <name> <degree>`".into() });
                    };
                    let deg: i32 = deg
                        .parse()
                        .map_err(|_| PresentationError::Syntax { line, msg: format!("bad degree `{deg}`") })?;
                    generators.push((name.to_string(), deg));
                }
                "rel" => {
                    if rest.is_empty() {
                        return Err(PresentationError::Syntax { line, msg: "empty relation".into() });
                    }
                    let rel = match rest.split_once('=') {
                        Some((l, r)) if r.trim() == "0" => l.trim().to_string(),
                        Some((l, r)) => format!("{} - ({})", l.trim(), r.trim()),
                        None => rest.to_string(),
                    };
                    relations.push(rel);
                }
                other => {
                    return Err(PresentationError::Syntax { line, msg: format!("unknown keyword `{other}`") });
                }
            }
        }
        Ok(PresentationSpec { generators, relations })
    }
}

/// One degree of a presented algebra.
#[derive(Debug)]
pub struct DegreeComponent {
    degree: i32,
    basis: MonomialBasis,
    /// `pivots[c]` is the ideal row with leading column `c`, normalised to 1.
    pivots: Vec<Option<Vec<(usize, F3)>>>,
    quotient: Vec<usize>,
}

impl DegreeComponent {
    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn free_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ideal_dim(&self) -> usize {
        self.basis.len() - self.quotient.len()
    }

    pub fn dim(&self) -> usize {
        self.quotient.len()
    }

    pub fn free_basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn quotient_basis(&self) -> Vec<Monomial> {
        self.quotient.iter().map(|&i| self.basis.monomials()[i].clone()).collect()
    }

    /// Reduces a dense vector in place. One left-to-right pass suffices
    /// because a pivot row only touches columns at or after its pivot.
    fn reduce(&self, v: &mut [F3]) {
        for c in 0..v.len() {
            let f = v[c];
            if f.is_zero() {
                continue;
            }
            if let Some(row) = &self.pivots[c] {
                for &(j, x) in row {
                    v[j] -= f * x;
                }
            }
        }
    }

    /// Quotient coordinates of a dense free-algebra vector.
    pub fn quotient_coords(&self, v: &[F3]) -> Vec<F3> {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        self.quotient.iter().map(|&i| v[i]).collect()
    }

    fn insert(&mut self, mut v: Vec<F3>) {
        self.reduce(&mut v);
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let inv = v[lead].inv().expect("nonzero");
        let row = (lead..v.len()).filter(|&j| !v[j].is_zero()).map(|j| (j, v[j] * inv)).collect();
        self.pivots[lead] = Some(row);
    }
}

/// `F3⟨generators⟩ / (relations)` in the graded-commutative sense.
#[derive(Debug)]
pub struct PresentedAlgebra {
    spec: PresentationSpec,
    gca: Gca,
    /// Nonzero relations with their source text and degree.
    relations: Vec<(String, i32, Element)>,
    cache: RwLock<HashMap<i32, Arc<DegreeComponent>>>,
}

impl PresentedAlgebra {
    pub fn new(spec: PresentationSpec) -> Result<Self, PresentationError> {
        let gca = Gca::singly_graded(&spec.generators)?;
        let mut relations = Vec::with_capacity(spec.relations.len());
        for text in &spec.relations {
            let e = gca.parse(text)?;
            match gca.bidegree(&e) {
                Ok(Some(b)) => relations.push((text.clone(), b.n, e)),
                Ok(None) => {}
                Err(_) => return Err(PresentationError::InhomogeneousRelation(text.clone())),
            }
        }
        Ok(PresentedAlgebra { spec, gca, relations, cache: RwLock::new(HashMap::new()) })
    }

    /// Parses a presentation file and builds the algebra. Expression errors
    /// are reported with the line they come from.
    pub fn from_text(text: &str) -> Result<Self, PresentationError> {
        let spec = PresentationSpec::parse(text)?;
        let gca = Gca::singly_graded(&spec.generators)?;
        let mut rel_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.starts_with("rel") {
                let text = &spec.relations[rel_line];
                gca.parse(text).map_err(|source| PresentationError::Expression { line: i + 1, source })?;
                rel_line += 1;
            }
        }
        Self::new(spec)
    }

    pub fn spec(&self) -> &PresentationSpec {
        &self.spec
    }

    pub fn gca(&self) -> &Gca {
        &self.gca
    }

    pub fn relations(&self) -> impl Iterator<Item = &Element> + '_ {
        self.relations.iter().map(|(_, _, e)| e)
    }

    pub fn parse(&self, s: &str) -> Result<Element, GcaError> {
        self.gca.parse(s)
    }

    pub fn format(&self, e: &Element) -> String {
        self.gca.format(e)
    }

    /// Degree of a homogeneous element, `None` for zero.
    pub fn degree(&self, e: &Element) -> Result<Option<i32>, PresentationError> {
        match self.gca.bidegree(e) {
            Ok(b) => Ok(b.map(|b| b.n)),
            Err(_) => Err(PresentationError::NotHomogeneous),
        }
    }

    pub fn component(&self, d: i32) -> Arc<DegreeComponent> {
        if let Some(c) = self.cache.read().expect("cache lock").get(&d) {
            return Arc::clone(c);
        }
        let built = Arc::new(self.build(d));
        Arc::clone(self.cache.write().expect("cache lock").entry(d).or_insert(built))
    }

    /// Builds (in parallel) every component up to degree `n`.
    pub fn components(&self, n: i32) -> Vec<Arc<DegreeComponent>> {
        (0..=n).into_par_iter().map(|d| self.component(d)).collect()
    }

    fn build(&self, d: i32) -> DegreeComponent {
        let basis = self.gca.monomial_basis(Bidegree::new(d.max(0), 0));
        let len = basis.len();
        let mut comp = DegreeComponent {
            degree: d,
            basis,
            pivots: vec![None; len],
            quotient: Vec::new(),
        };
        if d >= 0 {
            for (_, rd, r) in &self.relations {
                if *rd > d {
                    continue;
                }
                for m in self.gca.basis(Bidegree::new(d - rd, 0)) {
                    let prod = self.gca.mul(r, &Element::monomial(m, F3::ONE));
                    if prod.is_zero() {
                        continue;
                    }
                    let v = comp.basis.coordinates(&prod).expect("product lies in the degree");
                    comp.insert(v);
                }
            }
        }
        comp.quotient = (0..len).filter(|&c| comp.pivots[c].is_none()).collect();
        comp
    }

    pub fn dim(&self, d: i32) -> usize {
        self.component(d).dim()
    }

    /// Quotient dimensions for degrees `0..=n`.
    pub fn hilbert_coeffs(&self, n: i32) -> Vec<i64> {
        self.components(n).iter().map(|c| c.dim() as i64).collect()
    }

    /// Coordinates of a homogeneous element in the quotient basis of its
    /// degree; `None` for the zero element.
    pub fn coords(&self, e: &Element) -> Result<Option<(i32, Vec<F3>)>, PresentationError> {
        let Some(d) = self.degree(e)? else {
            return Ok(None);
        };
        let comp = self.component(d);
        let v = comp.basis.coordinates(e)?;
        Ok(Some((d, comp.quotient_coords(&v))))
    }

    /// The representative of `e` supported on quotient-basis monomials.
    pub fn normal_form(&self, e: &Element) -> Result<Element, PresentationError> {
        let Some((d, q)) = self.coords(e)? else {
            return Ok(Element::zero());
        };
        Ok(self.from_quotient(d, &q))
    }

    pub fn from_quotient(&self, d: i32, q: &[F3]) -> Element {
        let comp = self.component(d);
        let mut out = Element::zero();
        for (&c, &x) in comp.quotient.iter().zip(q) {
            out.add_term(comp.basis.monomials()[c].clone(), x);
        }
        out
    }

    pub fn is_zero(&self, e: &Element) -> Result<bool, PresentationError> {
        match self.coords(e)? {
            None => Ok(true),
            Some((_, q)) => Ok(q.iter().all(|x| x.is_zero())),
        }
    }
}

impl fmt::Display for PresentedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.spec.generators.iter().map(|(n, d)| format!("{n}:{d}")).collect();
        write!(f, "<{}> / ({} relations)", gens.join(", "), self.relations.len())
    }
}

/// A degree-preserving map of presented algebras given on generators.
#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    source: Arc<PresentedAlgebra>,
    target: Arc<PresentedAlgebra>,
    map: AlgebraMap,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct MorphismReport {
    pub relations_checked: usize,
    /// Source relations (as text) whose image is nonzero.
    pub failures: Vec<String>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl AlgebraMorphism {
    pub fn new(
        source: Arc<PresentedAlgebra>,
        target: Arc<PresentedAlgebra>,
        images: Vec<Element>,
    ) -> Result<Self, PresentationError> {
        let gens = &source.spec.generators;
        if images.len() != gens.len() {
            return Err(PresentationError::ImageCount { expected: gens.len(), found: images.len() });
        }
        for ((name, deg), img) in gens.iter().zip(&images) {
            if let Some(found) = target.degree(img)? {
                if found != *deg {
                    return Err(PresentationError::DegreeMismatch {
                        generator: name.clone(),
                        expected: *deg,
                        found,
                    });
                }
            }
        }
        let map = AlgebraMap::new(source.gca(), images)?;
        Ok(AlgebraMorphism { source, target, map })
    }

    /// Images given as expressions in the target, keyed by source generator.
    pub fn from_named(
        source: Arc<PresentedAlgebra>,
        target: Arc<PresentedAlgebra>,
        images: &[(&str, &str)],
    ) -> Result<Self, PresentationError> {
        let mut out = Vec::with_capacity(source.spec.generators.len());
        for (name, _) in &source.spec.generators {
            let (_, expr) = images
                .iter()
                .find(|(g, _)| g == name)
                .ok_or_else(|| GcaError::UnknownGenerator(name.clone()))?;
            out.push(target.parse(expr)?);
        }
        Self::new(source, target, out)
    }

    pub fn source(&self) -> &Arc<PresentedAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PresentedAlgebra> {
        &self.target
    }

    pub fn image(&self, i: usize) -> &Element {
        self.map.image(i)
    }

    /// Image in the free algebra on the target generators.
    pub fn apply(&self, e: &Element) -> Element {
        self.map.apply(self.target.gca(), e)
    }

    pub fn well_defined(&self) -> Result<MorphismReport, PresentationError> {
        let mut report = MorphismReport::default();
        for (text, _, r) in &self.source.relations {
            report.relations_checked += 1;
            if !self.target.is_zero(&self.apply(r))? {
                report.failures.push(text.clone());
            }
        }
        Ok(report)
    }

    /// Matrix of the map on degree `d` quotients; row `i` is the image of the
    /// `i`-th source quotient monomial.
    pub fn matrix(&self, d: i32) -> Result<Matrix, PresentationError> {
        let src = self.source.component(d);
        let tgt = self.target.component(d);
        let mut rows = Vec::with_capacity(src.dim());
        for m in src.quotient_basis() {
            let img = self.apply(&Element::monomial(m, F3::ONE));
            let v = tgt.basis.coordinates(&img)?;
            rows.push(tgt.quotient_coords(&v));
        }
        Ok(Matrix::from_rows(tgt.dim(), &rows))
    }
}
