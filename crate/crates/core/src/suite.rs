//! Identity checks on the singlet sector.
//!
//! Each check states an equation between two expressions and a kind: strict
//! (equal as elements of the full algebra) or mod-psi (equal after right
//! multiplication by `psi`). Writing `=` for both is exactly how the
//! `E12 = E21` fallacy arises, so the kind is never implicit. Checks also
//! state whether the equation is expected to hold; expected refutations are
//! asserted, not just tolerated.
//!
//! Every check is evaluated twice, symbolically and through the matrix
//! oracle, and records whether the two routes agree.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::expr::{eval_matrix, parse_expr, ElementExpr, Evaluator};
use crate::oracle::{self, approx_equal, element_matrix, MatrixRep, ORACLE_TOLERANCE};
use crate::pauli::PauliWord;
use crate::scalar::Scalar;
use crate::singlet::SingletState;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Strict,
    ModPsi,
    /// A count or exhaustive search rather than an equation.
    Enumeration,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::Strict => "strict",
            CheckKind::ModPsi => "mod-psi",
            CheckKind::Enumeration => "enumeration",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Verified,
    Refuted,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Verified => "verified",
            CheckStatus::Refuted => "refuted",
        })
    }
}

impl From<bool> for CheckStatus {
    fn from(holds: bool) -> Self {
        if holds {
            CheckStatus::Verified
        } else {
            CheckStatus::Refuted
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    /// Which family of claims this check belongs to.
    pub group: String,
    pub kind: CheckKind,
    pub lhs: Option<ElementExpr>,
    pub rhs: Option<ElementExpr>,
    pub expected: CheckStatus,
    pub status: CheckStatus,
    /// `lhs - rhs`, or `(lhs - rhs) psi` for mod-psi checks. Absent for
    /// enumeration checks.
    pub residual: Option<Element>,
    /// Residual term count, or the number of offending cases for
    /// enumeration checks.
    pub residual_terms: usize,
    /// The matrix route reached the same verdict.
    pub oracle_ok: bool,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.status == self.expected && self.oracle_ok
    }

    /// An enumeration outcome: verified iff `found == expected_count`.
    pub fn enumeration(name: impl Into<String>, group: &str, found: usize, expected_count: usize, oracle_ok: bool) -> Self {
        IdentityCheck {
            name: name.into(),
            group: group.to_string(),
            kind: CheckKind::Enumeration,
            lhs: None,
            rhs: None,
            expected: CheckStatus::Verified,
            status: (found == expected_count).into(),
            residual: None,
            residual_terms: found.abs_diff(expected_count),
            oracle_ok,
        }
    }
}

/// Evaluates identity checks against one singlet state.
pub struct Checker<'a> {
    state: &'a SingletState,
    evaluator: Evaluator,
    psi_matrix: MatrixRep,
}

impl<'a> Checker<'a> {
    pub fn new(state: &'a SingletState) -> Self {
        Checker {
            state,
            evaluator: Evaluator::new(state.table().clone(), state.psi().clone()),
            psi_matrix: oracle::singlet_matrix(),
        }
    }

    pub fn state(&self) -> &SingletState {
        self.state
    }

    pub fn eval(&self, src: &str) -> Element {
        let e = parse_expr(src).unwrap_or_else(|err| panic!("built-in expression {src:?}: {err}"));
        self.evaluator.eval(&e, 2).expect("built-in expressions have arity 2")
    }

    /// Checks `lhs = rhs` (strict) or `lhs psi = rhs psi` (mod-psi).
    pub fn check(&self, group: &str, kind: CheckKind, lhs: &str, rhs: &str, expected: CheckStatus) -> IdentityCheck {
        let parse = |s: &str| parse_expr(s).unwrap_or_else(|err| panic!("built-in expression {s:?}: {err}"));
        let (le, re) = (parse(lhs), parse(rhs));
        let a = self.evaluator.eval(&le, 2).expect("arity 2");
        let b = self.evaluator.eval(&re, 2).expect("arity 2");
        let diff = a.sub(&b).expect("arity 2");

        let ma = eval_matrix(&le, 2, &self.psi_matrix).expect("4x4");
        let mb = eval_matrix(&re, 2, &self.psi_matrix).expect("4x4");

        let (name, residual, oracle_holds) = match kind {
            CheckKind::Strict => (format!("{lhs} = {rhs}"), diff, approx_equal(&ma, &mb, ORACLE_TOLERANCE).expect("4x4")),
            CheckKind::ModPsi => {
                let residual = self.state.mul(&diff, self.state.psi()).expect("arity 2");
                let ma = ma.mul(&self.psi_matrix).expect("4x4");
                let mb = mb.mul(&self.psi_matrix).expect("4x4");
                (
                    format!("{} = {}", times_psi(lhs), times_psi(rhs)),
                    residual,
                    approx_equal(&ma, &mb, ORACLE_TOLERANCE).expect("4x4"),
                )
            }
            CheckKind::Enumeration => panic!("enumeration checks are not equations"),
        };
        let status = CheckStatus::from(residual.is_zero());
        IdentityCheck {
            name,
            group: group.to_string(),
            kind,
            lhs: Some(le),
            rhs: Some(re),
            expected,
            status,
            residual_terms: residual.len(),
            residual: Some(residual),
            oracle_ok: (status == CheckStatus::Verified) == oracle_holds,
        }
    }

    pub fn strict(&self, group: &str, lhs: &str, rhs: &str, expected: CheckStatus) -> IdentityCheck {
        self.check(group, CheckKind::Strict, lhs, rhs, expected)
    }

    pub fn mod_psi(&self, group: &str, lhs: &str, rhs: &str, expected: CheckStatus) -> IdentityCheck {
        self.check(group, CheckKind::ModPsi, lhs, rhs, expected)
    }
}

/// `x psi`, parenthesizing compound `x`; `0 psi` is written `0`.
fn times_psi(x: &str) -> String {
    if x == "0" {
        "0".into()
    } else if x.contains([' ', '*', '+']) {
        format!("({x}) psi")
    } else {
        format!("{x} psi")
    }
}

use CheckStatus::{Refuted, Verified};

/// The 9 single-site products of the generators, plus every two-site word
/// product compared against the matrix route.
pub fn verify_generator_laws(state: &SingletState) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    let single = [
        ("e1*e1", "I"),
        ("e2*e2", "I"),
        ("e3*e3", "I"),
        ("e1*e2", "i*e3"),
        ("e2*e3", "i*e1"),
        ("e3*e1", "i*e2"),
        ("e2*e1", "-i*e3"),
        ("e3*e2", "-i*e1"),
        ("e1*e3", "-i*e2"),
    ];
    let psi_matrix = oracle::singlet_matrix();
    let evaluator = Evaluator::new(state.table().clone(), state.psi().clone());
    for (lhs, rhs) in single {
        let (le, re) = (parse_expr(lhs).expect("valid"), parse_expr(rhs).expect("valid"));
        let a = evaluator.eval(&le, 1).expect("arity 1");
        let b = evaluator.eval(&re, 1).expect("arity 1");
        let residual = a.sub(&b).expect("arity 1");
        let oracle_holds = approx_equal(
            &eval_matrix(&le, 1, &psi_matrix).expect("2x2"),
            &eval_matrix(&re, 1, &psi_matrix).expect("2x2"),
            ORACLE_TOLERANCE,
        )
        .expect("2x2");
        let status = CheckStatus::from(residual.is_zero());
        out.push(IdentityCheck {
            name: format!("{lhs} = {rhs}"),
            group: "composition".into(),
            kind: CheckKind::Strict,
            lhs: Some(le),
            rhs: Some(re),
            expected: Verified,
            status,
            residual_terms: residual.len(),
            residual: Some(residual),
            oracle_ok: (status == Verified) == oracle_holds,
        });
    }

    let words = PauliWord::all(2);
    let mut disagreements = 0;
    for a in &words {
        for b in &words {
            let sym = Element::word(a.clone()).mul_in(state.table(), &Element::word(b.clone())).expect("arity 2");
            let num = oracle::word_matrix(a).mul(&oracle::word_matrix(b)).expect("4x4");
            if !approx_equal(&element_matrix(&sym), &num, ORACLE_TOLERANCE).expect("4x4") {
                disagreements += 1;
            }
        }
    }
    out.push(IdentityCheck::enumeration(
        "two-site word products disagreeing with the matrix route (of 256)",
        "composition",
        disagreements,
        0,
        true,
    ));
    out
}

/// `psi` construction: annihilation by `E_kk + 1`, eigenvalue `-1` for each
/// `E_kk`, order independence of the factors, `psi^2 = -psi`, and the
/// numerical rank/trace of `-psi`.
pub fn verify_singlet_invariants(state: &SingletState) -> Vec<IdentityCheck> {
    let c = Checker::new(state);
    let mut out = Vec::new();
    for k in 1..=3 {
        out.push(c.strict("singlet", &format!("(E{k}{k} + I)*psi"), "0", Verified));
    }
    for k in 1..=3 {
        out.push(c.strict("singlet", &format!("E{k}{k}*psi"), "-psi", Verified));
    }
    let f = |k: u8| format!("(1/2*(E{k}{k} - I))");
    let order = |a: u8, b: u8, d: u8| format!("{}*{}*{}", f(a), f(b), f(d));
    out.push(c.strict("singlet", &order(1, 2, 3), "psi", Verified));
    out.push(c.strict("singlet", &order(2, 1, 3), "psi", Verified));
    out.push(c.strict("singlet", &order(3, 1, 2), "psi", Verified));
    out.push(c.strict("singlet", "psi*psi", "-psi", Verified));
    out.push(c.strict("singlet", "psi*psi", "psi", Refuted));

    let projector = element_matrix(state.projector());
    let ev = projector.hermitian_eigenvalues();
    let spectrum_off = ev
        .iter()
        .zip([0.0, 0.0, 0.0, 1.0])
        .filter(|(got, want)| (*got - want).abs() > ORACLE_TOLERANCE)
        .count();
    let trace_ok = (projector.trace() - num_complex::Complex64::new(1.0, 0.0)).norm() <= ORACLE_TOLERANCE;
    let exact_trace_ok = state.projector().trace_normalized() == Scalar::ratio(1, 4);
    out.push(IdentityCheck::enumeration(
        "eigenvalues of -psi off {0, 0, 0, 1}",
        "singlet",
        spectrum_off,
        0,
        trace_ok && exact_trace_ok,
    ));
    out
}

/// `(E0i + Ei0) psi = 0` for `i = 1, 2, 3`.
pub fn verify_singlet_constraints(state: &SingletState) -> Vec<IdentityCheck> {
    let c = Checker::new(state);
    (1..=3)
        .map(|i| c.mod_psi("peres-constraint", &format!("E0{i} + E{i}0"), "0", Verified))
        .collect()
}

/// `(E01 E20 + E10 E02) psi = 0`.
pub fn verify_product_constraint(state: &SingletState) -> IdentityCheck {
    Checker::new(state).mod_psi("peres-constraint", "E01*E20 + E10*E02", "0", Verified)
}

/// The same four constraints read as strict identities; each must fail.
pub fn verify_constraints_not_strict(state: &SingletState) -> Vec<IdentityCheck> {
    let c = Checker::new(state);
    let mut out: Vec<_> = (1..=3)
        .map(|i| c.strict("peres-constraint", &format!("E0{i} + E{i}0"), "0", Refuted))
        .collect();
    out.push(c.strict("peres-constraint", "E01*E20 + E10*E02", "0", Refuted));
    out
}

/// The four single-particle observables given definite values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Observable {
    E01,
    E10,
    E02,
    E20,
}

impl Observable {
    pub const ALL: [Observable; 4] = [Observable::E01, Observable::E10, Observable::E02, Observable::E20];

    pub fn name(self) -> &'static str {
        match self {
            Observable::E01 => "E01",
            Observable::E10 => "E10",
            Observable::E02 => "E02",
            Observable::E20 => "E20",
        }
    }
}

/// A definite `+-1` value for each observable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassicalAssignment {
    values: BTreeMap<Observable, i8>,
}

impl ClassicalAssignment {
    pub fn new(e01: i8, e10: i8, e02: i8, e20: i8) -> Self {
        for v in [e01, e10, e02, e20] {
            assert!(v == 1 || v == -1, "classical values are +-1");
        }
        let values = Observable::ALL.into_iter().zip([e01, e10, e02, e20]).collect();
        ClassicalAssignment { values }
    }

    pub fn value(&self, o: Observable) -> i8 {
        self.values[&o]
    }

    /// All 16 assignments, `+1` before `-1`, `E01` varying slowest.
    pub fn all() -> Vec<ClassicalAssignment> {
        let signs = [1i8, -1];
        let mut out = Vec::with_capacity(16);
        for a in signs {
            for b in signs {
                for c in signs {
                    for d in signs {
                        out.push(ClassicalAssignment::new(a, b, c, d));
                    }
                }
            }
        }
        out
    }

    pub fn satisfies(&self, constraint: ValueConstraint) -> bool {
        use Observable::*;
        let m = |o| self.value(o);
        match constraint {
            ValueConstraint::OppositeFirstAxis => m(E01) == -m(E10),
            ValueConstraint::OppositeSecondAxis => m(E02) == -m(E20),
            ValueConstraint::OppositeProducts => m(E01) * m(E20) == -(m(E10) * m(E02)),
        }
    }
}

/// Value constraints implied by the singlet operator equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ValueConstraint {
    /// `(E01 + E10) psi = 0`  =>  `m(E01) = -m(E10)`.
    OppositeFirstAxis,
    /// `(E02 + E20) psi = 0`  =>  `m(E02) = -m(E20)`.
    OppositeSecondAxis,
    /// `(E01 E20 + E10 E02) psi = 0`  =>  `m(E01) m(E20) = -m(E10) m(E02)`.
    OppositeProducts,
}

impl ValueConstraint {
    pub const ALL: [ValueConstraint; 3] = [
        ValueConstraint::OppositeFirstAxis,
        ValueConstraint::OppositeSecondAxis,
        ValueConstraint::OppositeProducts,
    ];

    pub fn describe(self) -> &'static str {
        match self {
            ValueConstraint::OppositeFirstAxis => "m(E01) = -m(E10)",
            ValueConstraint::OppositeSecondAxis => "m(E02) = -m(E20)",
            ValueConstraint::OppositeProducts => "m(E01)m(E20) = -m(E10)m(E02)",
        }
    }
}

/// Assignments satisfying every constraint in `constraints`.
pub fn search_assignments(constraints: &[ValueConstraint]) -> Vec<ClassicalAssignment> {
    ClassicalAssignment::all()
        .into_iter()
        .filter(|a| constraints.iter().all(|&c| a.satisfies(c)))
        .collect()
}

/// Exhaustive search under all three constraints. Always empty.
pub fn classical_assignment_search() -> Vec<ClassicalAssignment> {
    search_assignments(&ValueConstraint::ALL)
}

pub fn verify_classical_contradiction() -> Vec<IdentityCheck> {
    let group = "classical-assignment";
    let mut out = vec![IdentityCheck::enumeration(
        "assignments satisfying all three value constraints",
        group,
        classical_assignment_search().len(),
        0,
        true,
    )];
    for dropped in ValueConstraint::ALL {
        let kept: Vec<_> = ValueConstraint::ALL.into_iter().filter(|&c| c != dropped).collect();
        out.push(IdentityCheck::enumeration(
            format!("assignments satisfying all but {}", dropped.describe()),
            group,
            search_assignments(&kept).len(),
            4,
            true,
        ));
    }
    out.push(IdentityCheck::enumeration(
        "assignments with no constraint",
        group,
        search_assignments(&[]).len(),
        16,
        true,
    ));
    out
}

/// The battery of mod-psi relations between single-particle and correlated
/// words, as `(lhs, rhs)` with `lhs psi = rhs psi`.
pub const DERIVED_IDENTITIES: [(&str, &str); 10] = [
    ("E01", "-E10"),
    ("E01", "-i*E23"),
    ("E02", "-E20"),
    ("E02", "i*E13"),
    ("E03", "-E30"),
    ("E03", "i*E21"),
    ("E12", "-E21"),
    ("E23", "-E32"),
    ("E13", "-E31"),
    ("-E10", "-i*E23"),
];

/// `lambda * X * (E_kk + 1)`, a multiple of one annihilating generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorWitness {
    pub word: PauliWord,
    pub k: u8,
    pub scale: Scalar,
}

impl GeneratorWitness {
    pub fn expression(&self) -> String {
        format!("{}*{}*(E{k}{k} + I)", self.scale, self.word, k = self.k)
    }
}

/// Finds `lambda, X, k` with `lambda X (E_kk + 1) = diff` exactly.
pub fn derive_from_generators(state: &SingletState, diff: &Element) -> Option<GeneratorWitness> {
    let (pivot, pivot_coef) = diff.terms().next()?;
    for word in PauliWord::all(2) {
        for k in 1..=3u8 {
            let generator = Element::word(word.clone())
                .mul_in(state.table(), &Element::pair(k, k).add(&Element::identity(2)).expect("arity 2"))
                .expect("arity 2");
            let g = generator.coefficient(pivot);
            if g.is_zero() {
                continue;
            }
            let scale = pivot_coef.div(&g).expect("nonzero");
            if generator.scale(&scale) == *diff {
                return Some(GeneratorWitness { word, k, scale });
            }
        }
    }
    None
}

/// The derived battery, the full generator family `X (E_kk + 1) psi = 0`
/// over all 16 words and `k = 1, 2, 3`, and for each battery entry a strict
/// witness showing its residual is a multiple of a single generator.
pub fn verify_derived_identities(state: &SingletState) -> Vec<IdentityCheck> {
    let c = Checker::new(state);
    let mut out: Vec<_> = DERIVED_IDENTITIES
        .iter()
        .map(|(l, r)| c.mod_psi("derived-identity", l, r, Verified))
        .collect();
    out.push(c.mod_psi("derived-identity", "E12", "E21", Refuted));

    for word in PauliWord::all(2) {
        for k in 1..=3 {
            out.push(c.mod_psi("generator-family", &format!("{word}*(E{k}{k} + I)"), "0", Verified));
        }
    }

    for (l, r) in DERIVED_IDENTITIES {
        let diff = c.eval(&format!("{l} - ({r})"));
        match derive_from_generators(state, &diff) {
            Some(w) => out.push(c.strict("derivation-witness", &format!("{l} - ({r})"), &w.expression(), Verified)),
            None => out.push(IdentityCheck::enumeration(
                format!("generator witness for {l} - ({r})"),
                "derivation-witness",
                0,
                1,
                true,
            )),
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepRole {
    Premise,
    Substitution,
    Conclusion,
    Clash,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FallacyStep {
    pub description: String,
    pub role: StepRole,
    pub checks: Vec<IdentityCheck>,
    /// False for a step that treats a mod-psi relation as strict.
    pub legitimate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FallacyReport {
    pub steps: Vec<FallacyStep>,
}

impl FallacyReport {
    pub fn invalid_steps(&self) -> impl Iterator<Item = &FallacyStep> {
        self.steps.iter().filter(|s| !s.legitimate)
    }

    pub fn checks(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.steps.iter().flat_map(|s| s.checks.iter())
    }
}

/// Replays the naive argument `E12 = E10 E02 = E01 E20 = E21`.
///
/// The premises hold strictly. The substitutions `E02 -> -E20` and
/// `E10 -> -E01` hold only mod psi, and in the chain they are applied to
/// factors not adjacent to `psi`, so the steps are flagged. The conclusion
/// fails both strictly and mod psi, and clashes with `E12 psi = -E21 psi`.
pub fn fallacy_trace(state: &SingletState) -> FallacyReport {
    let c = Checker::new(state);
    let g = "fallacy";
    let mut steps = Vec::new();
    for (l, r) in [("E12", "E10*E02"), ("E21", "E20*E01")] {
        let check = c.strict(g, l, r, Verified);
        steps.push(FallacyStep {
            description: format!("premise {l} = {r}"),
            role: StepRole::Premise,
            legitimate: check.status == Verified,
            checks: vec![check],
        });
    }
    for (from, to) in [("E02", "-E20"), ("E10", "-E01")] {
        let strict = c.strict(g, from, to, Refuted);
        let modpsi = c.mod_psi(g, from, to, Verified);
        steps.push(FallacyStep {
            description: format!("substitute {from} -> {to} inside a product, as if strict"),
            role: StepRole::Substitution,
            legitimate: strict.status == Verified,
            checks: vec![strict, modpsi],
        });
    }
    for (l, r) in [("E10*E02", "E01*E20"), ("E20*E01", "E02*E10"), ("E12", "E21")] {
        steps.push(FallacyStep {
            description: format!("conclude {l} = {r}"),
            role: StepRole::Conclusion,
            legitimate: false,
            checks: vec![c.strict(g, l, r, Refuted), c.mod_psi(g, l, r, Refuted)],
        });
    }
    let clash = c.mod_psi(g, "E12", "-E21", Verified);
    steps.push(FallacyStep {
        description: "the singlet sector requires E12 psi = -E21 psi".into(),
        role: StepRole::Clash,
        legitimate: clash.status == Verified,
        checks: vec![clash],
    });
    FallacyReport { steps }
}

/// The permutation-explicit rewriting of `E12` and `E21` (strict), its
/// reduction on the singlet sector (mod psi), and the functional-dependence
/// witnesses `E02 = E03 E01 / i`, `E01 = E02 E03 / i` (strict). Division by
/// `i` is written as multiplication by `-i`.
pub fn verify_resolution(state: &SingletState) -> Vec<IdentityCheck> {
    let c = Checker::new(state);
    let g = "resolution";
    vec![
        c.strict(g, "E12", "-i*E13*E01", Verified),
        c.strict(g, "E21", "-i*E22*E03", Verified),
        c.strict(g, "E12", "-i*E10*E03*E01", Verified),
        c.strict(g, "E12", "E10*(-i*E03*E01)", Verified),
        c.strict(g, "E21", "-i*E20*E02*E03", Verified),
        c.strict(g, "E21", "E20*(-i*E02*E03)", Verified),
        c.strict(g, "-i*E10*E03*E01", "-i*E03*E10*E01", Verified),
        c.strict(g, "-i*E20*E02*E03", "-i*(-E03*E02*E20)", Verified),
        c.mod_psi(g, "-i*E03*E10*E01", "-(-i*E03)", Verified),
        c.mod_psi(g, "E12", "-(-i*E03)", Verified),
        c.mod_psi(g, "-i*(-E03*E02*E20)", "-i*E03", Verified),
        c.mod_psi(g, "E21", "-i*E03", Verified),
        c.mod_psi(g, "E12", "-E21", Verified),
        c.strict(g, "E12", "-(-i*E03)", Refuted),
        c.strict(g, "E12", "-E21", Refuted),
        c.strict("functional-dependence", "E02", "-i*E03*E01", Verified),
        c.strict("functional-dependence", "E01", "-i*E02*E03", Verified),
    ]
}

/// Singlet expectations of all 15 nontrivial words: `-1` on `E11, E22, E33`
/// and `0` elsewhere, exactly and numerically; plus exact normalization of
/// the Born probabilities for every word.
pub fn verify_expectations(state: &SingletState) -> Vec<IdentityCheck> {
    let projector = element_matrix(state.projector());
    let mut wrong = 0;
    let mut oracle_ok = true;
    let mut unnormalized = 0;
    for w in PauliWord::nontrivial(2) {
        let diagonal = w.letters()[0] == w.letters()[1];
        let want = if diagonal { Scalar::integer(-1) } else { Scalar::zero() };
        let e = Element::word(w.clone());
        let got = state.expectation(&e).expect("arity 2");
        if got != want {
            wrong += 1;
        }
        let numeric = projector.mul(&oracle::word_matrix(&w)).expect("4x4").trace() / projector.trace();
        let (re, im) = want.to_f64_pair();
        if (numeric - num_complex::Complex64::new(re, im)).norm() > ORACLE_TOLERANCE {
            oracle_ok = false;
        }
        match state.outcome_probabilities(&e) {
            Ok((p, m)) if &p + &m == Scalar::one() => {}
            _ => unnormalized += 1,
        }
    }
    vec![
        IdentityCheck::enumeration("words with unexpected singlet expectation (of 15)", "expectation", wrong, 0, oracle_ok),
        IdentityCheck::enumeration(
            "words whose Born probabilities do not sum to 1 (of 15)",
            "expectation",
            unnormalized,
            0,
            true,
        ),
    ]
}
