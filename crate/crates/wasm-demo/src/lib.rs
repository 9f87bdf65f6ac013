//! Browser bindings. Every export returns a JSON string; failures come back
//! as `{"error": "..."}` rather than as thrown exceptions.

use epr_algebra::expr::Symbol;
use epr_algebra::triples::listed_positions;
use epr_algebra::{build_incidence, build_singlet, enumerate_basic_triples, parse_expr, ElementExpr, Evaluator};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

fn error_json(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

/// Canonical form of an expression. `psi` is the unnormalized singlet
/// element unless `projector` is set.
#[wasm_bindgen]
pub fn eval_expr(src: &str, projector: bool) -> String {
    let state = build_singlet();
    let psi = if projector { state.projector().clone() } else { state.psi().clone() };
    let parsed = match parse_expr(src) {
        Ok(e) => e,
        Err(e) => return error_json(e),
    };
    match Evaluator::new(state.table().clone(), psi).eval(&parsed, 2) {
        Ok(v) => json!({ "value": v.to_string(), "terms": v.len(), "arity": v.arity() }).to_string(),
        Err(e) => error_json(e),
    }
}

#[derive(Serialize)]
struct Expectation {
    value: String,
    mean: String,
    born: [String; 2],
    literal: [String; 2],
}

/// Singlet mean of a two-site expression with its outcome probabilities.
#[wasm_bindgen]
pub fn expect(src: &str) -> String {
    let state = build_singlet();
    let result = parse_expr(src)
        .map_err(|e| e.to_string())
        .and_then(|e| {
            Evaluator::new(state.table().clone(), state.psi().clone()).eval(&e, 2).map_err(|e| e.to_string())
        })
        .and_then(|v| {
            if v.arity() != 2 {
                return Err(format!("expectations need a two-site expression, got arity {}", v.arity()));
            }
            let mean = state.expectation(&v).map_err(|e| e.to_string())?;
            let (p, m) = state.outcome_probabilities(&v).map_err(|e| e.to_string())?;
            let (lp, lm) = state.literal_probabilities(&v).map_err(|e| e.to_string())?;
            Ok(Expectation {
                value: v.to_string(),
                mean: mean.to_string(),
                born: [p.to_string(), m.to_string()],
                literal: [lp.to_string(), lm.to_string()],
            })
        });
    match result {
        Ok(e) => serde_json::to_string(&e).expect("plain strings"),
        Err(e) => error_json(e),
    }
}

#[derive(Serialize)]
struct Membership {
    triple: [String; 3],
    cyclic: String,
}

/// Basic triples containing a two-site word such as `E12`.
#[wasm_bindgen]
pub fn incidence(word: &str) -> String {
    let w = match parse_expr(word.trim()) {
        Ok(ElementExpr::Symbol(Symbol::Pair(i, j))) if (i, j) != (0, 0) => epr_algebra::PauliWord::pair(i, j),
        Ok(_) => return error_json(format!("expected a word E<ij> other than E00, got {word:?}")),
        Err(e) => return error_json(e),
    };
    let found = enumerate_basic_triples();
    let map = build_incidence(&found);
    let members: Vec<Membership> = map
        .get(&w)
        .unwrap_or_default()
        .iter()
        .map(|t| {
            let [a, b, c] = t.cyclic();
            Membership { triple: t.labels(), cyclic: format!("{a}*{b} = i*{c}") }
        })
        .collect();
    json!({
        "word": w.to_string(),
        "total_triples": found.len(),
        "memberships": members,
        "listed_at": listed_positions(&w),
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn eval_reports_canonical_form() {
        let v = parse(eval_expr("E01*E02", false));
        assert_eq!(v["value"], "i*E03");
        let v = parse(eval_expr("psi", true));
        assert_eq!(v["terms"], 4);
    }

    #[test]
    fn eval_reports_parse_errors() {
        let v = parse(eval_expr("E01 * * E02", false));
        assert!(v["error"].as_str().unwrap().contains("SyntaxError"));
    }

    #[test]
    fn singlet_expectations() {
        let v = parse(expect("E33"));
        assert_eq!(v["mean"], "-1");
        assert_eq!(v["born"][0], "0");
        assert_eq!(v["born"][1], "1");
        let v = parse(expect("E12"));
        assert_eq!(v["mean"], "0");
        assert_eq!(v["born"][0], "1/2");
        assert!(parse(expect("e1")).get("error").is_some());
    }

    #[test]
    fn word_incidence() {
        let v = parse(incidence("E12"));
        assert_eq!(v["total_triples"], 20);
        assert_eq!(v["memberships"].as_array().unwrap().len(), 4);
        assert_eq!(v["listed_at"], json!([1, 7, 13, 16]));
        assert!(parse(incidence("E00")).get("error").is_some());
        assert!(parse(incidence("E12+E21")).get("error").is_some());
    }
}
