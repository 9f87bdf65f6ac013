//! Finite linear combinations of Pauli words with Gaussian-rational
//! coefficients.
//!
//! An [`Element`] is always kept canonical: a sorted map from word to nonzero
//! coefficient, so two elements are equal exactly when their maps are equal
//! and an identity `a = b` holds exactly when `a - b` has no terms.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::AlgebraError;
use crate::pauli::{LetterTable, PauliWord};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    arity: usize,
    terms: BTreeMap<PauliWord, Scalar>,
}

impl Element {
    pub fn zero(arity: usize) -> Self {
        assert!(arity > 0, "arity must be at least one");
        Element { arity, terms: BTreeMap::new() }
    }

    pub fn identity(arity: usize) -> Self {
        Self::word(PauliWord::identity(arity))
    }

    pub fn scalar(arity: usize, c: Scalar) -> Self {
        Self::identity(arity).scale(&c)
    }

    pub fn word(w: PauliWord) -> Self {
        Self::term(w, Scalar::one())
    }

    pub fn term(w: PauliWord, c: Scalar) -> Self {
        let mut out = Element::zero(w.len());
        out.accumulate(w, c);
        out
    }

    /// Two-site word `E_{ij}` with coefficient one.
    pub fn pair(i: u8, j: u8) -> Self {
        Self::word(PauliWord::pair(i, j))
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (PauliWord, Scalar)>,
    {
        let mut out = Element::zero(arity);
        for (w, c) in terms {
            if w.len() != arity {
                return Err(AlgebraError::ArityMismatch(arity, w.len()));
            }
            out.accumulate(w, c);
        }
        Ok(out)
    }

    fn accumulate(&mut self, w: PauliWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &PauliWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    fn check_arity(&self, other: &Element) -> Result<(), AlgebraError> {
        if self.arity != other.arity {
            Err(AlgebraError::ArityMismatch(self.arity, other.arity))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.accumulate(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.add(&other.negate())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero(self.arity);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(w, v)| (w.clone(), c * v)).collect();
        out
    }

    pub fn negate(&self) -> Element {
        self.scale(&Scalar::integer(-1))
    }

    /// Product under the standard composition table.
    pub fn mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.mul_in(&LetterTable::standard(), other)
    }

    /// Product under an explicit composition table.
    pub fn mul_in(&self, table: &LetterTable, other: &Element) -> Result<Element, AlgebraError> {
        self.check_arity(other)?;
        let mut out = Element::zero(self.arity);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let (phase, w) = table.mul_words(wa, wb)?;
                out.accumulate(w, (ca * cb).mul_phase(phase));
            }
        }
        Ok(out)
    }

    /// Coefficient-wise conjugation; every word is self-adjoint.
    pub fn adjoint(&self) -> Element {
        Element {
            arity: self.arity,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.conj())).collect(),
        }
    }

    /// Coefficient of the identity word, i.e. the trace divided by `2^arity`.
    pub fn trace_normalized(&self) -> Scalar {
        self.coefficient(&PauliWord::identity(self.arity))
    }
}

/// Prints terms in canonical word order using the expression syntax, e.g.
/// `-1/2*I + 1/2*E11`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_real_or_imaginary();
            let magnitude = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if magnitude == Scalar::one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{magnitude}*{w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> Scalar {
        Scalar::ratio(1, 2)
    }

    #[test]
    fn additive_inverse() {
        let a = Element::pair(1, 2).add(&Element::pair(0, 3).scale(&Scalar::i())).unwrap();
        assert!(a.add(&a.negate()).unwrap().is_zero());
    }

    #[test]
    fn scale_by_i() {
        let a = Element::pair(0, 3).scale(&Scalar::i());
        assert_eq!(a.len(), 1);
        assert_eq!(a.coefficient(&PauliWord::pair(0, 3)), Scalar::i());
    }

    #[test]
    fn half_shifted_projector_term() {
        let psi1 = Element::pair(1, 1).sub(&Element::identity(2)).unwrap().scale(&half());
        assert_eq!(psi1.len(), 2);
        assert_eq!(psi1.coefficient(&PauliWord::pair(1, 1)), half());
        assert_eq!(psi1.coefficient(&PauliWord::identity(2)), -half());
    }

    #[test]
    fn products() {
        let p = Element::pair(0, 1).mul(&Element::pair(0, 2)).unwrap();
        assert_eq!(p, Element::pair(0, 3).scale(&Scalar::i()));
        assert_eq!(Element::pair(0, 1).mul(&Element::pair(1, 0)).unwrap(), Element::pair(1, 1));
        assert_eq!(Element::pair(1, 0).mul(&Element::pair(0, 1)).unwrap(), Element::pair(1, 1));
    }

    #[test]
    fn arity_mismatch() {
        let one = Element::identity(1);
        let two = Element::identity(2);
        assert_eq!(one.add(&two), Err(AlgebraError::ArityMismatch(1, 2)));
        assert_eq!(one.mul(&two), Err(AlgebraError::ArityMismatch(1, 2)));
        assert!(Element::from_terms(2, [(PauliWord::identity(1), Scalar::one())]).is_err());
    }

    #[test]
    fn adjoint_conjugates() {
        assert_eq!(Element::pair(0, 1).adjoint(), Element::pair(0, 1));
        let a = Element::pair(0, 3).scale(&Scalar::i());
        assert_eq!(a.adjoint(), Element::pair(0, 3).scale(&-Scalar::i()));
    }

    #[test]
    fn trace() {
        assert_eq!(Element::identity(2).trace_normalized(), Scalar::one());
        assert_eq!(Element::pair(1, 2).trace_normalized(), Scalar::zero());
    }

    #[test]
    fn signed_pairs_match_commute_sign() {
        for a in PauliWord::nontrivial(2) {
            for b in PauliWord::nontrivial(2) {
                if a == b {
                    continue;
                }
                let ea = Element::word(a.clone());
                let eb = Element::word(b.clone());
                let ab = ea.mul(&eb).unwrap();
                let ba = eb.mul(&ea).unwrap();
                let sign = crate::pauli::commute_sign(&a, &b).unwrap();
                assert_eq!(ab, ba.scale(&Scalar::integer(sign as i64)));
            }
        }
    }

    #[test]
    fn display() {
        let psi1 = Element::pair(1, 1).sub(&Element::identity(2)).unwrap().scale(&half());
        assert_eq!(psi1.to_string(), "-1/2*I + 1/2*E11");
        let a = Element::pair(0, 3).scale(&-Scalar::i()).add(&Element::pair(1, 2)).unwrap();
        assert_eq!(a.to_string(), "-i*E03 + E12");
        assert_eq!(Element::zero(2).to_string(), "0");
        let c = Element::term(PauliWord::pair(2, 1), Scalar::complex(1, 1, 1));
        assert_eq!(c.to_string(), "(1 + i)*E21");
    }
}
