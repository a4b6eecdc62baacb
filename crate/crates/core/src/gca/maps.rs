//! Derivations and algebra homomorphisms determined by generator values.

use super::{Bidegree, Element, Gca, GcaError, Monomial};
use crate::linalg::F3;

/// A derivation of bidegree `shift`, given by its value on each generator.
#[derive(Clone, Debug)]
pub struct DerivationSpec {
    pub shift: Bidegree,
    values: Vec<Element>,
}

impl DerivationSpec {
    /// Generators not named in `values` are sent to zero.
    pub fn new(gca: &Gca, shift: Bidegree, values: &[(&str, Element)]) -> Result<Self, GcaError> {
        let mut vals = vec![Element::zero(); gca.len()];
        for (name, v) in values {
            let i = gca.generator_index(name).ok_or_else(|| GcaError::UnknownGenerator(name.to_string()))?;
            if let Some(b) = gca.bidegree(v)? {
                let expected = gca.generators()[i].bidegree + shift;
                if b != expected {
                    return Err(GcaError::BidegreeMismatch { name: name.to_string(), expected, got: b });
                }
            }
            vals[i] = v.clone();
        }
        Ok(DerivationSpec { shift, values: vals })
    }

    pub fn value(&self, i: usize) -> &Element {
        &self.values[i]
    }
}

/// Extends `d` by the graded Leibniz rule `d(ab) = d(a)b + (-1)^{|a|} a d(b)`.
///
/// For a normal-ordered monomial `p · g^e · s` the `e` copies of an even `g`
/// contribute identically, so each generator is handled once with
/// multiplicity `e`.
pub fn derivation_extend(gca: &Gca, d: &DerivationSpec, e: &Element) -> Element {
    let mut out = Element::zero();
    for (mono, c) in e.terms() {
        let mut odd_before = 0usize;
        for i in 0..gca.len() {
            let exp = mono.0[i];
            if exp == 0 {
                continue;
            }
            let dg = d.value(i);
            if !dg.is_zero() {
                let mut prefix = Monomial::one(gca.len());
                prefix.0[..i].copy_from_slice(&mono.0[..i]);
                let mut suffix = Monomial::one(gca.len());
                suffix.0[i + 1..].copy_from_slice(&mono.0[i + 1..]);
                suffix.0[i] = exp - 1;
                let sign = if odd_before % 2 == 0 { F3::ONE } else { F3::TWO };
                let coeff = sign * c * F3::new(exp as i64);
                let left = Element::monomial(prefix, F3::ONE);
                let right = Element::monomial(suffix, F3::ONE);
                let term = gca.mul(&gca.mul(&left, dg), &right);
                out.add_scaled(&term, coeff);
            }
            if gca.is_odd(i) {
                odd_before += exp as usize;
            }
        }
    }
    out
}

/// An algebra homomorphism from a source alphabet, given by the images of
/// its generators in a target algebra.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    images: Vec<Element>,
}

impl AlgebraMap {
    pub fn new(source: &Gca, images: Vec<Element>) -> Result<Self, GcaError> {
        if images.len() != source.len() {
            return Err(GcaError::ImageCount { expected: source.len(), got: images.len() });
        }
        Ok(AlgebraMap { images })
    }

    /// Images given by name; every source generator must be named.
    pub fn from_named(source: &Gca, named: &[(&str, Element)]) -> Result<Self, GcaError> {
        let mut images: Vec<Option<Element>> = vec![None; source.len()];
        for (name, e) in named {
            let i = source.generator_index(name).ok_or_else(|| GcaError::UnknownGenerator(name.to_string()))?;
            images[i] = Some(e.clone());
        }
        let images: Option<Vec<Element>> = images.into_iter().collect();
        let images = images.ok_or(GcaError::ImageCount { expected: source.len(), got: named.len() })?;
        Ok(AlgebraMap { images })
    }

    pub fn image(&self, i: usize) -> &Element {
        &self.images[i]
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    /// Applies the map, expanding each monomial as the ordered product of
    /// generator images in `target`.
    pub fn apply(&self, target: &Gca, e: &Element) -> Element {
        let mut out = Element::zero();
        for (mono, c) in e.terms() {
            let mut acc = target.one().scale(c);
            for (i, &exp) in mono.0.iter().enumerate() {
                if exp > 0 {
                    acc = target.mul(&acc, &target.pow(&self.images[i], exp as u32));
                    if acc.is_zero() {
                        break;
                    }
                }
            }
            out.add_scaled(&acc, F3::ONE);
        }
        out
    }

    /// Composite `other ∘ self`, with `self` landing in `mid`.
    pub fn then(&self, mid: &Gca, other: &AlgebraMap) -> AlgebraMap {
        AlgebraMap { images: self.images.iter().map(|e| other.apply(mid, e)).collect() }
    }
}

/// The endomorphism of `gca` extending the generator images.
pub fn endo_extend(gca: &Gca, images: &AlgebraMap, e: &Element) -> Element {
    images.apply(gca, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d2(a: &Gca) -> DerivationSpec {
        DerivationSpec::new(a, Bidegree::new(2, -1), &[("u", a.parse("y1*y2").unwrap())]).unwrap()
    }

    fn alpha(a: &Gca) -> AlgebraMap {
        let named: Vec<(&str, Element)> = [
            ("u", "-u"),
            ("t", "-t"),
            ("y1", "y1 - y2"),
            ("y2", "y1 + y2"),
            ("x1", "x1 - x2"),
            ("x2", "x1 + x2"),
        ]
        .iter()
        .map(|(n, s)| (*n, a.parse(s).unwrap()))
        .collect();
        AlgebraMap::from_named(a, &named).unwrap()
    }

    #[test]
    fn leibniz_examples() {
        let a = Gca::e2();
        let d = d2(&a);
        assert_eq!(derivation_extend(&a, &d, &a.parse("u*t").unwrap()), a.parse("t*y1*y2").unwrap());
        assert!(derivation_extend(&a, &d, &a.parse("u*y1").unwrap()).is_zero());
        assert!(derivation_extend(&a, &d, &a.parse("t^2").unwrap()).is_zero());
    }

    #[test]
    fn leibniz_sign_on_odd_prefix() {
        // d(u*y2) = d(u)*y2 - u*d(y2)
        let a = Gca::e2();
        let d = DerivationSpec::new(&a, Bidegree::new(0, 0), &[("y2", a.parse("y1").unwrap())]).unwrap();
        let got = derivation_extend(&a, &d, &a.parse("u*y2").unwrap());
        assert_eq!(got, a.parse("-u*y1").unwrap());
    }

    #[test]
    fn bidegree_of_values_is_checked() {
        let a = Gca::e2();
        let bad = DerivationSpec::new(&a, Bidegree::new(2, -1), &[("u", a.parse("y1").unwrap())]);
        assert!(matches!(bad, Err(GcaError::BidegreeMismatch { .. })));
    }

    #[test]
    fn action_examples() {
        let a = Gca::e2();
        let al = alpha(&a);
        assert_eq!(endo_extend(&a, &al, &a.parse("x1").unwrap()), a.parse("x1 - x2").unwrap());
        let w = a.parse("u*y1*y2").unwrap();
        assert_eq!(endo_extend(&a, &al, &w), w);
        let mut g = a.parse("y1").unwrap();
        for _ in 0..4 {
            g = endo_extend(&a, &al, &g);
        }
        assert_eq!(g, a.parse("-y1").unwrap());
    }

    #[test]
    fn action_has_order_eight_on_generators() {
        let a = Gca::e2();
        let al = alpha(&a);
        let mut pow = AlgebraMap::new(&a, (0..a.len()).map(|i| a.generator(i)).collect()).unwrap();
        for k in 1..=8 {
            pow = pow.then(&a, &al);
            let identity = (0..a.len()).all(|i| pow.image(i) == &a.generator(i));
            assert_eq!(identity, k == 8, "alpha^{k}");
        }
    }
}
