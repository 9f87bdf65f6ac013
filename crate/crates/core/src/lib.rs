//! Exact symbolic algebra of two-site Pauli words, built to check the
//! operator identities behind the singlet-state (EPR) argument.
//!
//! The symbolic engine works over Gaussian rationals, so every identity is
//! decided by literal equality. An independent matrix representation
//! cross-checks each verdict numerically.

pub mod element;
pub mod error;
pub mod expr;
pub mod oracle;
pub mod pauli;
pub mod report;
pub mod scalar;
pub mod singlet;
pub mod suite;
pub mod triples;

pub use element::Element;
pub use error::AlgebraError;
pub use expr::{eval_matrix, parse_expr, ElementExpr, EvalError, Evaluator, ParseError, ParseErrorKind};
pub use oracle::{approx_equal, element_matrix, word_matrix, MatrixRep, ORACLE_TOLERANCE};
pub use pauli::{commute_sign, compose_letters, mul_words, LetterTable, PauliWord, Phase, SiteLetter};
pub use report::{run_full_report, Overall, VerificationReport};
pub use scalar::Scalar;
pub use singlet::{build_singlet, SingletState};
pub use suite::{CheckKind, CheckStatus, IdentityCheck};
pub use triples::{build_incidence, diff_with_paper_list, enumerate_basic_triples, BasicTriple, DiffReport, IncidenceMap};
