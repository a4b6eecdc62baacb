//! Exact linear algebra over the field with three elements.
//!
//! Vectors are plain `[F3]` slices and matrices are dense and row-major.
//! Every [`Subspace`] is stored by its reduced row-echelon basis, which makes
//! the representation canonical: two subspaces are equal exactly when their
//! basis grids are equal, so `==` on [`Subspace`] is subspace equality.
//!
//! Maps between coordinate spaces are written in the row-vector convention
//! (`v ↦ v·M`, so row `i` of `M` is the image of the `i`-th basis vector).
//! The one exception is [`kernel_basis`], which solves `M·v = 0` for column
//! vectors `v`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vector does not lie in the subspace")]
    NotInSubspace,
    #[error("subspace of boundaries is not contained in the subspace of cycles")]
    NotNested,
}

const ADD: [[u8; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
const MUL: [[u8; 3]; 3] = [[0, 0, 0], [0, 1, 2], [0, 2, 1]];
const NEG: [u8; 3] = [0, 2, 1];

/// An element of F3, stored as its residue in `{0, 1, 2}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F3(u8);

impl F3 {
    pub const ZERO: F3 = F3(0);
    pub const ONE: F3 = F3(1);
    pub const TWO: F3 = F3(2);

    pub fn new(value: i64) -> Self {
        F3(value.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; `None` for zero. Each nonzero element is its
    /// own inverse.
    pub fn inv(self) -> Option<F3> {
        match self.0 {
            0 => None,
            v => Some(F3(v)),
        }
    }

    /// Signed representative in `{-1, 0, 1}`.
    pub fn signed(self) -> i8 {
        match self.0 {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }
}

impl fmt::Debug for F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for F3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.0)
    }
}

impl From<bool> for F3 {
    fn from(b: bool) -> Self {
        F3(b as u8)
    }
}

impl Add for F3 {
    type Output = F3;
    fn add(self, rhs: F3) -> F3 {
        F3(ADD[self.0 as usize][rhs.0 as usize])
    }
}

impl Sub for F3 {
    type Output = F3;
    fn sub(self, rhs: F3) -> F3 {
        self + (-rhs)
    }
}

impl Mul for F3 {
    type Output = F3;
    fn mul(self, rhs: F3) -> F3 {
        F3(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl Neg for F3 {
    type Output = F3;
    fn neg(self) -> F3 {
        F3(NEG[self.0 as usize])
    }
}

impl AddAssign for F3 {
    fn add_assign(&mut self, rhs: F3) {
        *self = *self + rhs;
    }
}

impl SubAssign for F3 {
    fn sub_assign(&mut self, rhs: F3) {
        *self = *self - rhs;
    }
}

impl MulAssign for F3 {
    fn mul_assign(&mut self, rhs: F3) {
        *self = *self * rhs;
    }
}

impl std::iter::Sum for F3 {
    fn sum<I: Iterator<Item = F3>>(iter: I) -> F3 {
        iter.fold(F3::ZERO, |a, b| a + b)
    }
}

/// `y += a·x`
pub fn axpy(y: &mut [F3], a: F3, x: &[F3]) {
    debug_assert_eq!(y.len(), x.len());
    if a.is_zero() {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

pub fn is_zero_vec(v: &[F3]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_from_i64(v: &[i64]) -> Vec<F3> {
    v.iter().map(|&x| F3::new(x)).collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F3>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<u8> = self.row(r).iter().map(|x| x.value()).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F3::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F3::ONE);
        }
        m
    }

    /// Builds a matrix from integer entries, reduced mod 3.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, data: vec_from_i64(entries) }
    }

    pub fn from_rows<R: AsRef<[F3]>>(cols: usize, rows: &[R]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "row length must equal column count");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> F3 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F3) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F3] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [F3] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[F3]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<F3>> {
        self.iter_rows().map(<[F3]>::to_vec).collect()
    }

    pub fn column(&self, c: usize) -> Vec<F3> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if !a.is_zero() {
                    axpy(out.row_mut(r), a, other.row(k));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: F3) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| a * s).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Column-vector product `self · v`.
    pub fn mul_vec(&self, v: &[F3]) -> Vec<F3> {
        assert_eq!(v.len(), self.cols);
        self.iter_rows().map(|row| row.iter().zip(v).map(|(&a, &b)| a * b).sum()).collect()
    }

    /// Row-vector product `v · self`.
    pub fn vec_mul(&self, v: &[F3]) -> Vec<F3> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![F3::ZERO; self.cols];
        for (r, &a) in v.iter().enumerate() {
            axpy(&mut out, a, self.row(r));
        }
        out
    }

    /// Reduced row-echelon form (zero rows dropped) and its pivot columns.
    pub fn echelonize(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).inv().expect("pivot is nonzero");
            for x in m.row_mut(lead) {
                *x *= inv;
            }
            let pivot_row = m.row(lead).to_vec();
            for r in 0..m.rows {
                if r != lead {
                    let f = m.get(r, c);
                    if !f.is_zero() {
                        axpy(m.row_mut(r), -f, &pivot_row);
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        m.rows = lead;
        m.data.truncate(lead * m.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelonize().1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            aug.row_mut(r)[..n].copy_from_slice(self.row(r));
            aug.set(r, n + r, F3::ONE);
        }
        let (rref, pivots) = aug.echelonize();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            inv.row_mut(r).copy_from_slice(&rref.row(r)[n..]);
        }
        Some(inv)
    }
}

/// Reduced row-echelon form of `m` together with its pivot columns.
pub fn echelonize(m: &Matrix) -> (Matrix, Vec<usize>) {
    m.echelonize()
}

/// `{v : m·v = 0}` as a subspace of F3^cols.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let (rref, pivots) = m.echelonize();
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut rows = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F3::ZERO; n];
        v[free] = F3::ONE;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rref.get(r, free);
        }
        rows.push(v);
    }
    Subspace::span(n, &rows)
}

/// `{c : c·m = 0}`, the linear relations among the rows of `m`.
pub fn left_kernel(m: &Matrix) -> Subspace {
    kernel_basis(&m.transpose())
}

/// Expresses vectors as combinations of a fixed list of rows, which need not
/// be independent.
#[derive(Clone, Debug)]
pub struct Solver {
    cols: usize,
    nrows: usize,
    echelon: Matrix,
    pivots: Vec<usize>,
}

impl Solver {
    pub fn new(rows: &Matrix) -> Self {
        let (k, cols) = (rows.rows(), rows.cols());
        let mut aug = Matrix::zeros(k, cols + k);
        for r in 0..k {
            aug.row_mut(r)[..cols].copy_from_slice(rows.row(r));
            aug.set(r, cols + r, F3::ONE);
        }
        let (echelon, pivots) = aug.echelonize();
        let pivots = pivots.into_iter().take_while(|&p| p < cols).collect();
        Solver { cols, nrows: k, echelon, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Some `c` with `c·rows = v`, or `None` if `v` is outside the row space.
    pub fn solve(&self, v: &[F3]) -> Option<Vec<F3>> {
        assert_eq!(v.len(), self.cols, "vector length must match row length");
        let mut rest = v.to_vec();
        let mut combo = vec![F3::ZERO; self.nrows];
        for (r, &p) in self.pivots.iter().enumerate() {
            let f = rest[p];
            if f.is_zero() {
                continue;
            }
            let row = self.echelon.row(r);
            axpy(&mut rest, -f, &row[..self.cols]);
            axpy(&mut combo, f, &row[self.cols..]);
        }
        is_zero_vec(&rest).then_some(combo)
    }
}

/// A subspace of F3^n in canonical (reduced row-echelon) form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Sum,
    Intersection,
}

/// Sum or intersection of two subspaces of the same ambient space.
pub fn lattice(a: &Subspace, b: &Subspace, op: LatticeOp) -> Result<Subspace, LinalgError> {
    match op {
        LatticeOp::Sum => a.sum(b),
        LatticeOp::Intersection => a.intersection(b),
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn span<R: AsRef<[F3]>>(ambient: usize, rows: &[R]) -> Self {
        Self::from_matrix(&Matrix::from_rows(ambient, rows))
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let (basis, pivots) = m.echelonize();
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> impl Iterator<Item = &[F3]> + '_ {
        self.basis.iter_rows()
    }

    fn check_len(&self, v: &[F3]) -> Result<(), LinalgError> {
        if v.len() == self.ambient {
            Ok(())
        } else {
            Err(LinalgError::LengthMismatch { expected: self.ambient, got: v.len() })
        }
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(LinalgError::AmbientMismatch { left: self.ambient, right: other.ambient })
        }
    }

    /// Remainder of `v` after clearing every pivot column of the basis.
    /// Zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[F3]) -> Vec<F3> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let f = out[p];
            if !f.is_zero() {
                axpy(&mut out, -f, self.basis.row(r));
            }
        }
        out
    }

    pub fn contains(&self, v: &[F3]) -> Result<bool, LinalgError> {
        self.check_len(v)?;
        Ok(is_zero_vec(&self.reduce(v)))
    }

    /// Coefficients of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[F3]) -> Result<Option<Vec<F3>>, LinalgError> {
        self.check_len(v)?;
        let coeffs: Vec<F3> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut rest = v.to_vec();
        for (r, &c) in coeffs.iter().enumerate() {
            axpy(&mut rest, -c, self.basis.row(r));
        }
        Ok(is_zero_vec(&rest).then_some(coeffs))
    }

    pub fn combination(&self, coeffs: &[F3]) -> Vec<F3> {
        self.basis.vec_mul(coeffs)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let rows: Vec<&[F3]> = self.rows().chain(other.rows()).collect();
        Ok(Subspace::span(self.ambient, &rows))
    }

    /// Intersection computed from the kernel of the stacked system
    /// `Σ αᵢ aᵢ − Σ βⱼ bⱼ = 0`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let (da, db) = (self.dim(), other.dim());
        let mut stacked = Matrix::zeros(self.ambient, da + db);
        for (j, row) in self.rows().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                stacked.set(i, j, x);
            }
        }
        for (j, row) in other.rows().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                stacked.set(i, da + j, -x);
            }
        }
        let ker = kernel_basis(&stacked);
        let rows: Vec<Vec<F3>> = ker.rows().map(|c| self.basis.vec_mul(&c[..da])).collect();
        Ok(Subspace::span(self.ambient, &rows))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        for row in self.rows() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Basis rows as plain residues, for export.
    pub fn rows_u8(&self) -> Vec<Vec<u8>> {
        self.rows().map(|r| r.iter().map(|x| x.value()).collect()).collect()
    }
}

/// A subquotient `Z/B` with `B ⊆ Z`, equipped with a canonical set of class
/// representatives: the echelon basis of `Z` reduced modulo `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient {
    cycles: Subspace,
    boundaries: Subspace,
    reps: Subspace,
}

impl Subquotient {
    pub fn new(cycles: Subspace, boundaries: Subspace) -> Result<Self, LinalgError> {
        if !boundaries.is_subspace_of(&cycles)? {
            return Err(LinalgError::NotNested);
        }
        let reduced: Vec<Vec<F3>> = cycles.rows().map(|r| boundaries.reduce(r)).collect();
        let reps = Subspace::span(cycles.ambient_dim(), &reduced);
        Ok(Subquotient { cycles, boundaries, reps })
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.cycles.ambient_dim()
    }

    pub fn cycles(&self) -> &Subspace {
        &self.cycles
    }

    pub fn boundaries(&self) -> &Subspace {
        &self.boundaries
    }

    /// Canonical class representatives, one row per class basis vector.
    pub fn representatives(&self) -> &Matrix {
        self.reps.basis()
    }

    /// Coordinates of the class of `v` in the representative basis.
    pub fn class_coords(&self, v: &[F3]) -> Result<Vec<F3>, LinalgError> {
        let r = self.boundaries.reduce(v);
        if r.len() != self.ambient_dim() {
            return Err(LinalgError::LengthMismatch { expected: self.ambient_dim(), got: r.len() });
        }
        self.reps.coordinates(&r)?.ok_or(LinalgError::NotInSubspace)
    }

    pub fn lift(&self, coords: &[F3]) -> Vec<F3> {
        self.reps.combination(coords)
    }

    pub fn is_zero_class(&self, v: &[F3]) -> Result<bool, LinalgError> {
        self.boundaries.contains(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, e: &[i64]) -> Matrix {
        Matrix::from_i64(rows, cols, e)
    }

    #[test]
    fn field_tables() {
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!((F3::new(a) + F3::new(b)).value() as i64, (a + b) % 3);
                assert_eq!((F3::new(a) * F3::new(b)).value() as i64, (a * b) % 3);
            }
        }
        assert_eq!(F3::ONE.inv(), Some(F3::ONE));
        assert_eq!(F3::TWO.inv(), Some(F3::TWO));
        assert_eq!(F3::ZERO.inv(), None);
        assert_eq!(F3::new(-1), F3::TWO);
    }

    #[test]
    fn echelon_examples() {
        let (r, p) = m(2, 2, &[1, 0, 0, 1]).echelonize();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(p, vec![0, 1]);

        let (r, p) = m(2, 2, &[1, 2, 2, 1]).echelonize();
        assert_eq!(r, m(1, 2, &[1, 2]));
        assert_eq!(p, vec![0]);

        let (r, p) = Matrix::zeros(3, 3).echelonize();
        assert_eq!(r.rows(), 0);
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(2)).is_zero());
        let k = kernel_basis(&m(1, 2, &[1, 2]));
        assert_eq!(k, Subspace::span(2, &[vec_from_i64(&[1, 1])]));
        assert_eq!(kernel_basis(&Matrix::zeros(2, 3)), Subspace::full(3));
    }

    #[test]
    fn lattice_examples() {
        let e0 = Subspace::span(2, &[vec_from_i64(&[1, 0])]);
        let e1 = Subspace::span(2, &[vec_from_i64(&[0, 1])]);
        assert_eq!(lattice(&e0, &e1, LatticeOp::Sum).unwrap().dim(), 2);
        assert_eq!(lattice(&e0, &e0, LatticeOp::Intersection).unwrap(), e0);
        let a = Subspace::span(2, &[vec_from_i64(&[1, 1])]);
        let b = Subspace::span(2, &[vec_from_i64(&[1, 2])]);
        assert!(lattice(&a, &b, LatticeOp::Intersection).unwrap().is_zero());
        let c = Subspace::zero(3);
        assert!(matches!(a.sum(&c), Err(LinalgError::AmbientMismatch { .. })));
    }

    #[test]
    fn contains_examples() {
        let a = Subspace::span(2, &[vec_from_i64(&[1, 1])]);
        assert!(a.contains(&vec_from_i64(&[0, 0])).unwrap());
        assert!(!a.contains(&vec_from_i64(&[1, 0])).unwrap());
        assert!(a.contains(&vec_from_i64(&[2, 2])).unwrap());
        assert!(matches!(a.contains(&vec_from_i64(&[1])), Err(LinalgError::LengthMismatch { .. })));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(2, 2, &[1, 2, 1, 1]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(2, 2, &[1, 2, 2, 1]).inverse().is_none());
    }

    #[test]
    fn subquotient_coordinates() {
        let z = Subspace::full(3);
        let b = Subspace::span(3, &[vec_from_i64(&[1, 1, 0])]);
        let q = Subquotient::new(z, b).unwrap();
        assert_eq!(q.dim(), 2);
        let c1 = q.class_coords(&vec_from_i64(&[1, 0, 0])).unwrap();
        let c2 = q.class_coords(&vec_from_i64(&[0, 2, 0])).unwrap();
        assert_eq!(c1, c2);
        assert!(q.class_coords(&vec_from_i64(&[1, 1, 0])).unwrap().iter().all(|x| x.is_zero()));
        let bad = Subquotient::new(Subspace::zero(3), Subspace::full(3));
        assert_eq!(bad.unwrap_err(), LinalgError::NotNested);
    }
}
