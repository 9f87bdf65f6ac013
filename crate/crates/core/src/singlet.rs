//! The two-site singlet sector.
//!
//! `psi_k = (E_kk - 1)/2` and `psi = psi_1 psi_2 psi_3`. With these signs
//! `psi` squares to `-psi`; the genuine projector is `P = -psi`. Both are
//! kept: `psi` for the identities written in terms of it, `P` for traces and
//! expectation values.

use crate::element::Element;
use crate::error::AlgebraError;
use crate::pauli::LetterTable;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingletState {
    table: LetterTable,
    factors: [Element; 3],
    psi: Element,
    projector: Element,
}

/// Builds `psi` under the standard composition table.
pub fn build_singlet() -> SingletState {
    SingletState::build_with(LetterTable::standard())
}

impl SingletState {
    /// Builds `psi` with every product taken under `table`.
    pub fn build_with(table: LetterTable) -> Self {
        let half = Scalar::ratio(1, 2);
        let one = Element::identity(2);
        let factors = [1u8, 2, 3].map(|k| {
            Element::pair(k, k).sub(&one).expect("arity 2").scale(&half)
        });
        let psi = factors[0]
            .mul_in(&table, &factors[1])
            .and_then(|p| p.mul_in(&table, &factors[2]))
            .expect("arity 2");
        let projector = psi.negate();
        SingletState { table, factors, psi, projector }
    }

    pub fn table(&self) -> &LetterTable {
        &self.table
    }

    /// `psi_1, psi_2, psi_3`.
    pub fn factors(&self) -> &[Element; 3] {
        &self.factors
    }

    pub fn psi(&self) -> &Element {
        &self.psi
    }

    pub fn projector(&self) -> &Element {
        &self.projector
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        a.mul_in(&self.table, b)
    }

    fn check_arity(&self, a: &Element) -> Result<(), AlgebraError> {
        if a.arity() != self.psi.arity() {
            return Err(AlgebraError::ArityMismatch(a.arity(), self.psi.arity()));
        }
        Ok(())
    }

    /// `(a - b) psi`, the quantity that must vanish for `a psi = b psi`.
    pub fn residual_mod_psi(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.check_arity(a)?;
        self.check_arity(b)?;
        self.mul(&a.sub(b)?, &self.psi)
    }

    /// True iff `a psi = b psi` exactly.
    pub fn equal_mod_psi(&self, a: &Element, b: &Element) -> Result<bool, AlgebraError> {
        Ok(self.residual_mod_psi(a, b)?.is_zero())
    }

    /// `tr(P a) / tr(P)`.
    pub fn expectation(&self, a: &Element) -> Result<Scalar, AlgebraError> {
        self.check_arity(a)?;
        let num = self.mul(&self.projector, a)?.trace_normalized();
        num.div(&self.projector.trace_normalized())
    }

    fn require_involution(&self, a: &Element) -> Result<Scalar, AlgebraError> {
        self.check_arity(a)?;
        if self.mul(a, a)? != Element::identity(a.arity()) {
            return Err(AlgebraError::NotAnInvolution);
        }
        self.expectation(a)
    }

    /// Born-rule outcome probabilities `((1 + <a>)/2, (1 - <a>)/2)` for a
    /// `+-1` observable.
    pub fn outcome_probabilities(&self, a: &Element) -> Result<(Scalar, Scalar), AlgebraError> {
        let mean = self.require_involution(a)?;
        let half = Scalar::ratio(1, 2);
        let one = Scalar::one();
        Ok((&(&one + &mean) * &half, &(&one - &mean) * &half))
    }

    /// The unnormalized form `(1/2 + <a>, 1/2 - <a>)`, which leaves `[0, 1]`
    /// whenever `|<a>| > 1/2`. Reported next to the Born values, never used
    /// for decisions.
    pub fn literal_probabilities(&self, a: &Element) -> Result<(Scalar, Scalar), AlgebraError> {
        let mean = self.require_involution(a)?;
        let half = Scalar::ratio(1, 2);
        Ok((&half + &mean, &half - &mean))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{element_matrix, ORACLE_TOLERANCE};
    use crate::pauli::PauliWord;

    fn e(i: u8, j: u8) -> Element {
        Element::pair(i, j)
    }

    #[test]
    fn annihilated_by_shifted_diagonals() {
        let s = build_singlet();
        for k in 1..=3 {
            let shifted = e(k, k).add(&Element::identity(2)).unwrap();
            assert!(s.mul(&shifted, s.psi()).unwrap().is_zero());
            assert_eq!(s.mul(&e(k, k), s.psi()).unwrap(), s.psi().negate());
        }
    }

    #[test]
    fn psi_squares_to_minus_psi() {
        let s = build_singlet();
        assert_eq!(s.mul(s.psi(), s.psi()).unwrap(), s.psi().negate());
        assert_eq!(s.mul(s.projector(), s.projector()).unwrap(), *s.projector());
        assert_eq!(s.projector().trace_normalized(), Scalar::ratio(1, 4));
        assert_eq!(s.psi().trace_normalized(), Scalar::ratio(-1, 4));
        assert_eq!(s.psi().adjoint(), *s.psi());
    }

    #[test]
    fn factor_order_is_irrelevant() {
        let s = build_singlet();
        let [a, b, c] = s.factors().clone();
        let prod = |x: &Element, y: &Element, z: &Element| s.mul(&s.mul(x, y).unwrap(), z).unwrap();
        for p in [prod(&b, &a, &c), prod(&c, &a, &b), prod(&a, &c, &b), prod(&b, &c, &a), prod(&c, &b, &a)] {
            assert_eq!(p, *s.psi());
        }
    }

    #[test]
    fn projector_is_rank_one() {
        let s = build_singlet();
        let m = element_matrix(s.projector());
        let ev = m.hermitian_eigenvalues();
        for (got, want) in ev.iter().zip([0.0, 0.0, 0.0, 1.0]) {
            assert!((got - want).abs() <= ORACLE_TOLERANCE);
        }
        assert!((m.trace().re - 1.0).abs() <= ORACLE_TOLERANCE);
    }

    #[test]
    fn mod_psi_equality() {
        let s = build_singlet();
        assert!(s.equal_mod_psi(&e(0, 1), &e(1, 0).negate()).unwrap());
        assert!(s.equal_mod_psi(&e(1, 2), &e(1, 2)).unwrap());
        assert!(!s.equal_mod_psi(&e(0, 1), &e(1, 0)).unwrap());
        assert!(!s.residual_mod_psi(&e(0, 1), &e(1, 0)).unwrap().is_zero());
        assert_eq!(
            s.equal_mod_psi(&Element::identity(1), &Element::identity(1)),
            Err(AlgebraError::ArityMismatch(1, 2))
        );
    }

    #[test]
    fn expectations() {
        let s = build_singlet();
        assert_eq!(s.expectation(&e(1, 1)).unwrap(), Scalar::integer(-1));
        assert_eq!(s.expectation(&Element::identity(2)).unwrap(), Scalar::one());
        assert_eq!(s.expectation(&e(0, 1)).unwrap(), Scalar::zero());
        assert_eq!(s.expectation(&e(1, 2)).unwrap(), Scalar::zero());
        for w in PauliWord::nontrivial(2) {
            let diag = w.letters()[0] == w.letters()[1];
            let want = if diag { Scalar::integer(-1) } else { Scalar::zero() };
            assert_eq!(s.expectation(&Element::word(w)).unwrap(), want);
        }
    }

    #[test]
    fn probabilities() {
        let s = build_singlet();
        assert_eq!(s.outcome_probabilities(&e(1, 1)).unwrap(), (Scalar::zero(), Scalar::one()));
        assert_eq!(s.outcome_probabilities(&Element::identity(2)).unwrap(), (Scalar::one(), Scalar::zero()));
        let half = Scalar::ratio(1, 2);
        assert_eq!(s.outcome_probabilities(&e(0, 3)).unwrap(), (half.clone(), half));
        assert_eq!(
            s.literal_probabilities(&e(1, 1)).unwrap(),
            (Scalar::ratio(-1, 2), Scalar::ratio(3, 2))
        );
        let not_involution = e(0, 1).add(&e(1, 0)).unwrap();
        assert_eq!(s.outcome_probabilities(&not_involution), Err(AlgebraError::NotAnInvolution));
    }
}
