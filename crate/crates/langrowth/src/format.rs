//! Automaton documents, polynomial serialization and delimited exports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use langrowth_core::automaton::{Automaton, Transition};
use langrowth_core::polyalg::{MultiPoly, RationalSeries};
use langrowth_core::series::{CoefficientTable, TableMode};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: line {line}, column {column}: {message}")]
    Syntax {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {location}: {message}")]
    Invalid {
        path: String,
        location: String,
        message: String,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomatonDoc {
    alphabet: Vec<String>,
    states: Vec<String>,
    initial: Vec<String>,
    #[serde(rename = "final")]
    final_states: Vec<String>,
    transitions: Vec<TransitionDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TransitionDoc {
    from: String,
    symbol: String,
    to: String,
}

fn lookup(names: &[String], name: &str, path: &str, location: String, kind: &str) -> Result<usize, FormatError> {
    names.iter().position(|n| n == name).ok_or_else(|| FormatError::Invalid {
        path: path.to_string(),
        location,
        message: format!("unknown {kind} {name:?}"),
    })
}

fn duplicate(names: &[String], path: &str, key: &str) -> Result<(), FormatError> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(FormatError::Invalid {
                path: path.to_string(),
                location: format!("{key}[{i}]"),
                message: format!("duplicate entry {n:?}"),
            });
        }
    }
    Ok(())
}

fn nonempty<T>(v: &[T], path: &str, key: &str) -> Result<(), FormatError> {
    if v.is_empty() {
        return Err(FormatError::Invalid {
            path: path.to_string(),
            location: key.to_string(),
            message: "must not be empty".to_string(),
        });
    }
    Ok(())
}

/// Parses an automaton document. `path` only labels diagnostics.
pub fn parse_automaton(text: &str, path: &str) -> Result<Automaton, FormatError> {
    let doc: AutomatonDoc = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    nonempty(&doc.alphabet, path, "alphabet")?;
    nonempty(&doc.states, path, "states")?;
    nonempty(&doc.initial, path, "initial")?;
    nonempty(&doc.final_states, path, "final")?;
    duplicate(&doc.alphabet, path, "alphabet")?;
    duplicate(&doc.states, path, "states")?;
    let states = |v: &[String], key: &str| -> Result<Vec<usize>, FormatError> {
        v.iter()
            .enumerate()
            .map(|(i, s)| lookup(&doc.states, s, path, format!("{key}[{i}]"), "state"))
            .collect()
    };
    let initial = states(&doc.initial, "initial")?;
    let final_states = states(&doc.final_states, "final")?;
    let mut transitions = Vec::with_capacity(doc.transitions.len());
    for (i, t) in doc.transitions.iter().enumerate() {
        transitions.push(Transition {
            from: lookup(&doc.states, &t.from, path, format!("transitions[{i}].from"), "state")?,
            symbol: lookup(&doc.alphabet, &t.symbol, path, format!("transitions[{i}].symbol"), "symbol")?,
            to: lookup(&doc.states, &t.to, path, format!("transitions[{i}].to"), "state")?,
        });
    }
    Automaton::new(doc.alphabet, doc.states, transitions, initial, final_states).map_err(|e| FormatError::Invalid {
        path: path.to_string(),
        location: "document".to_string(),
        message: e.to_string(),
    })
}

pub fn load_automaton(path: &str) -> Result<Automaton, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    parse_automaton(&text, path)
}

pub fn automaton_to_json(a: &Automaton) -> String {
    let names = |v: &[usize]| v.iter().map(|&i| a.states()[i].clone()).collect();
    let doc = AutomatonDoc {
        alphabet: a.alphabet().to_vec(),
        states: a.states().to_vec(),
        initial: names(a.initial()),
        final_states: names(a.final_states()),
        transitions: a
            .transitions()
            .iter()
            .map(|t| TransitionDoc {
                from: a.states()[t.from].clone(),
                symbol: a.alphabet()[t.symbol].clone(),
                to: a.states()[t.to].clone(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("automaton documents serialize")
}

fn exponent_key(e: &[u32]) -> String {
    e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// `{"i1,...,id": "coefficient", ...}`.
pub fn poly_to_json(p: &MultiPoly) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = p
        .terms()
        .map(|(m, c)| (exponent_key(m.exponents()), serde_json::Value::String(c.to_string())))
        .collect();
    serde_json::Value::Object(map)
}

pub fn poly_from_json(v: &serde_json::Value, nvars: usize) -> Result<MultiPoly, FormatError> {
    let bad = |location: String, message: String| FormatError::Invalid {
        path: "polynomial".to_string(),
        location,
        message,
    };
    let obj = v
        .as_object()
        .ok_or_else(|| bad("document".into(), "expected an object".into()))?;
    let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (k, c) in obj {
        let e: Vec<u32> = k
            .split(',')
            .map(|s| s.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad(k.clone(), "exponent key must be comma-separated integers".into()))?;
        if e.len() != nvars {
            return Err(bad(k.clone(), format!("expected {nvars} exponents")));
        }
        let c: BigInt = c
            .as_str()
            .ok_or_else(|| bad(k.clone(), "coefficient must be an integer string".into()))?
            .parse()
            .map_err(|_| bad(k.clone(), "coefficient must be an integer string".into()))?;
        terms.insert(e, c);
    }
    MultiPoly::from_terms(nvars, terms)
        .map_err(|e| bad("document".into(), e.to_string()))
}

/// `{"nvars": d, "numerator": {...}, "denominator": {...}}`.
pub fn series_to_json(s: &RationalSeries) -> String {
    let doc = serde_json::json!({
        "nvars": s.nvars(),
        "numerator": poly_to_json(s.numerator()),
        "denominator": poly_to_json(s.denominator()),
    });
    serde_json::to_string_pretty(&doc).expect("series documents serialize")
}

/// Shortest round-trip decimal; infinities as `-inf` and `inf`.
pub fn fmt_real(x: f64) -> String {
    if x == f64::NEG_INFINITY {
        "-inf".to_string()
    } else if x == f64::INFINITY {
        "inf".to_string()
    } else {
        format!("{x}")
    }
}

/// One line per stored vector, graded order, header first.
pub fn table_csv(t: &CoefficientTable) -> String {
    let mut out = String::new();
    let mut header: Vec<String> = (1..=t.dim()).map(|i| format!("i{i}")).collect();
    header.push(match t.mode() {
        TableMode::Exact => "count".to_string(),
        TableMode::Log => "logcount".to_string(),
    });
    out.push_str(&header.join(","));
    out.push('\n');
    match t.exact_entries() {
        Some(entries) => {
            for (i, c) in entries {
                let _ = writeln!(out, "{},{c}", exponent_key(i));
            }
        }
        None => {
            for (i, v) in t.log_entries() {
                let _ = writeln!(out, "{},{}", exponent_key(i), fmt_real(v));
            }
        }
    }
    out
}

/// Comma-separated rows under a header.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use langrowth_core::automaton::{catalog_automaton, CatalogName};

    #[test]
    fn automaton_round_trip() {
        let a = catalog_automaton(CatalogName::Fibonacci).unwrap();
        let b = parse_automaton(&automaton_to_json(&a), "mem").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_key_and_symbol_located() {
        let extra = r#"{"alphabet":["a"],"states":["s"],"initial":["s"],"final":["s"],"transitions":[],"x":1}"#;
        assert!(matches!(parse_automaton(extra, "f"), Err(FormatError::Syntax { .. })));
        let bad = r#"{"alphabet":["a"],"states":["s"],"initial":["s"],"final":["s"],
            "transitions":[{"from":"s","symbol":"b","to":"s"}]}"#;
        let e = parse_automaton(bad, "f").unwrap_err().to_string();
        assert!(e.contains("transitions[0].symbol"), "{e}");
        let empty = r#"{"alphabet":["a"],"states":["s"],"initial":[],"final":["s"],"transitions":[]}"#;
        assert!(parse_automaton(empty, "f").unwrap_err().to_string().contains("initial"));
    }

    #[test]
    fn polynomial_round_trip() {
        let p = MultiPoly::from_i64_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[1, 1], -3)]);
        assert_eq!(poly_from_json(&poly_to_json(&p), 2).unwrap(), p);
        assert_eq!(fmt_real(f64::NEG_INFINITY), "-inf");
    }
}
