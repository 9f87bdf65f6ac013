//! Numerical cross-check: dense complex matrices built from the explicit 2x2
//! spin matrices and Kronecker products.
//!
//! Nothing here consults the symbolic composition table. Words are turned
//! into matrices letter by letter from the hard-coded base matrices, so a
//! fault in the symbolic layer shows up as a disagreement with this one.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::element::Element;
use crate::error::AlgebraError;
use crate::pauli::{PauliWord, SiteLetter};

/// Agreement threshold for every symbolic/numerical comparison.
pub const ORACLE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    entries: DMatrix<Complex64>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The 2x2 matrix of one site letter.
pub fn base_matrix(letter: SiteLetter) -> DMatrix<Complex64> {
    let o = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    let entries = match letter.index() {
        0 => [one, o, o, one],
        1 => [o, one, one, o],
        2 => [o, -i, i, o],
        _ => [one, o, o, -one],
    };
    DMatrix::from_row_slice(2, 2, &entries)
}

impl MatrixRep {
    pub fn identity(dim: usize) -> Self {
        MatrixRep { entries: DMatrix::identity(dim, dim) }
    }

    pub fn zeros(dim: usize) -> Self {
        MatrixRep { entries: DMatrix::zeros(dim, dim) }
    }

    pub fn from_matrix(entries: DMatrix<Complex64>) -> Self {
        assert!(entries.is_square(), "matrix representation must be square");
        MatrixRep { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    pub fn mul(&self, other: &MatrixRep) -> Result<MatrixRep, AlgebraError> {
        self.check_dim(other)?;
        Ok(MatrixRep { entries: &self.entries * &other.entries })
    }

    pub fn add(&self, other: &MatrixRep) -> Result<MatrixRep, AlgebraError> {
        self.check_dim(other)?;
        Ok(MatrixRep { entries: &self.entries + &other.entries })
    }

    pub fn sub(&self, other: &MatrixRep) -> Result<MatrixRep, AlgebraError> {
        self.check_dim(other)?;
        Ok(MatrixRep { entries: &self.entries - &other.entries })
    }

    pub fn scale(&self, re: f64, im: f64) -> MatrixRep {
        MatrixRep { entries: &self.entries * c(re, im) }
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    pub fn adjoint(&self) -> MatrixRep {
        MatrixRep { entries: self.entries.adjoint() }
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Eigenvalues in ascending order. Only meaningful for Hermitian input.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self.entries.clone().symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(|a, b| a.total_cmp(b));
        ev
    }

    fn check_dim(&self, other: &MatrixRep) -> Result<(), AlgebraError> {
        if self.dim() != other.dim() {
            Err(AlgebraError::DimensionMismatch(self.dim(), other.dim()))
        } else {
            Ok(())
        }
    }
}

/// Kronecker product of the base matrices, first site leftmost.
pub fn word_matrix(w: &PauliWord) -> MatrixRep {
    let mut m = DMatrix::from_element(1, 1, c(1.0, 0.0));
    for &letter in w.letters() {
        m = m.kronecker(&base_matrix(letter));
    }
    MatrixRep { entries: m }
}

/// Coefficient-weighted sum of word matrices.
pub fn element_matrix(a: &Element) -> MatrixRep {
    let dim = 1usize << a.arity();
    let mut m = DMatrix::zeros(dim, dim);
    for (w, coef) in a.terms() {
        let (re, im) = coef.to_f64_pair();
        m += word_matrix(w).entries * c(re, im);
    }
    MatrixRep { entries: m }
}

/// True iff the max-norm of `a - b` is at most `tol`.
pub fn approx_equal(a: &MatrixRep, b: &MatrixRep, tol: f64) -> Result<bool, AlgebraError> {
    Ok(a.sub(b)?.max_abs() <= tol)
}

/// The singlet-sector element built from matrices alone: the product of
/// `(M(E_kk) - 1)/2` for `k = 1, 2, 3`, with `M(E_kk) = e_k (x) e_k`.
pub fn singlet_matrix() -> MatrixRep {
    let id = MatrixRep::identity(4);
    let mut out = MatrixRep::identity(4);
    for k in [SiteLetter::E1, SiteLetter::E2, SiteLetter::E3] {
        let ekk = MatrixRep { entries: base_matrix(k).kronecker(&base_matrix(k)) };
        let factor = ekk.sub(&id).expect("4x4").scale(0.5, 0.0);
        out = out.mul(&factor).expect("4x4");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() <= ORACLE_TOLERANCE
    }

    #[test]
    fn printed_two_site_matrices() {
        // (row, col) one-based positions of the unit entries.
        let m = word_matrix(&PauliWord::pair(0, 1));
        let ones = [(1, 2), (2, 1), (3, 4), (4, 3)];
        for r in 1..=4 {
            for col in 1..=4 {
                let want = if ones.contains(&(r, col)) { c(1.0, 0.0) } else { c(0.0, 0.0) };
                assert!(close(m.get(r - 1, col - 1), want));
            }
        }

        let m = word_matrix(&PauliWord::pair(3, 0));
        let diag = [1.0, 1.0, -1.0, -1.0];
        for (r, &d) in diag.iter().enumerate() {
            for col in 0..4 {
                let want = if r == col { c(d, 0.0) } else { c(0.0, 0.0) };
                assert!(close(m.get(r, col), want));
            }
        }

        let m = word_matrix(&PauliWord::pair(2, 0));
        assert!(close(m.get(0, 2), c(0.0, -1.0)));
        assert!(close(m.get(1, 3), c(0.0, -1.0)));
        assert!(close(m.get(2, 0), c(0.0, 1.0)));
        assert!(close(m.get(3, 1), c(0.0, 1.0)));

        let m = word_matrix(&PauliWord::pair(0, 2));
        assert!(close(m.get(0, 1), c(0.0, -1.0)));
        assert!(close(m.get(1, 0), c(0.0, 1.0)));
        assert!(close(m.get(2, 3), c(0.0, -1.0)));
        assert!(close(m.get(3, 2), c(0.0, 1.0)));

        assert_eq!(word_matrix(&PauliWord::identity(2)), MatrixRep::identity(4));
    }

    #[test]
    fn zero_element() {
        assert_eq!(element_matrix(&Element::zero(2)), MatrixRep::zeros(4));
    }

    #[test]
    fn product_matches_phase() {
        let lhs = word_matrix(&PauliWord::pair(0, 1)).mul(&word_matrix(&PauliWord::pair(0, 2))).unwrap();
        let rhs = element_matrix(&Element::pair(0, 3).scale(&Scalar::i()));
        assert!(approx_equal(&lhs, &rhs, ORACLE_TOLERANCE).unwrap());
    }

    #[test]
    fn approx_equal_cases() {
        let m = word_matrix(&PauliWord::pair(1, 2));
        assert!(approx_equal(&m, &m, 0.0).unwrap());
        let split = word_matrix(&PauliWord::pair(1, 0)).mul(&word_matrix(&PauliWord::pair(0, 2))).unwrap();
        assert!(approx_equal(&m, &split, ORACLE_TOLERANCE).unwrap());
        assert!(!approx_equal(&m, &word_matrix(&PauliWord::pair(2, 1)), ORACLE_TOLERANCE).unwrap());
        assert_eq!(
            approx_equal(&m, &MatrixRep::identity(2), 1.0),
            Err(AlgebraError::DimensionMismatch(4, 2))
        );
    }

    #[test]
    fn singlet_projector_spectrum() {
        let p = singlet_matrix().scale(-1.0, 0.0);
        let ev = p.hermitian_eigenvalues();
        let want = [0.0, 0.0, 0.0, 1.0];
        for (a, b) in ev.iter().zip(want) {
            assert!((a - b).abs() <= ORACLE_TOLERANCE, "{ev:?}");
        }
        assert!(close(p.trace(), c(1.0, 0.0)));
        // Singlet vector (|01> - |10>)/sqrt(2) in the product basis.
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let v = [0.0, s, -s, 0.0];
        for r in 0..4 {
            for col in 0..4 {
                assert!(close(p.get(r, col), c(v[r] * v[col], 0.0)));
            }
        }
    }

    #[test]
    fn distinct_words_are_trace_orthogonal() {
        for a in PauliWord::all(2) {
            for b in PauliWord::all(2) {
                let t = word_matrix(&a).mul(&word_matrix(&b)).unwrap().trace();
                let want = if a == b { 4.0 } else { 0.0 };
                assert!(close(t, c(want, 0.0)));
            }
        }
    }
}
