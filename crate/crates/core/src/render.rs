//! Plain, JSON and LaTeX renderings of elements.
//!
//! Terms appear in the canonical [`BasisIndex`] order, so every format is a
//! pure function of the element.

use serde_json::{json, Value};

use crate::algebra::{Basis, BasisIndex, Element, Index};
use crate::composition::Composition;

fn signed_join(terms: Vec<(String, i64)>, times: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (body, c)) in terms.into_iter().enumerate() {
        let sign = if c < 0 { "-" } else { "+" };
        match (i, c.abs()) {
            (0, 1) if c < 0 => out.push('-'),
            (0, 1) => {}
            (0, m) if c < 0 => out.push_str(&format!("-{m}{times}")),
            (0, m) => out.push_str(&format!("{m}{times}")),
            (_, 1) => out.push_str(&format!(" {sign} ")),
            (_, m) => out.push_str(&format!(" {sign} {m}{times}")),
        }
        out.push_str(&body);
    }
    out
}

/// `F[1,2] - 2*S*[2,1/1]`; the zero element prints as `0`.
pub fn plain(e: &Element) -> String {
    signed_join(e.terms().map(|(k, c)| (k.to_string(), c)).collect(), "*")
}

fn parts(c: &Composition) -> Vec<usize> {
    c.parts().to_vec()
}

/// One record per term: `{"basis", "index", "coeff"}`, plus `"inner"` for
/// skew terms.
pub fn json_value(e: &Element) -> Value {
    Value::Array(e.terms().map(|(k, c)| term_json(k, c)).collect())
}

fn term_json(k: &BasisIndex, c: i64) -> Value {
    match k.index() {
        Index::Straight(a) => json!({"basis": k.basis().name(), "index": parts(a), "coeff": c}),
        Index::Skew(s) => json!({
            "basis": k.basis().name(),
            "index": parts(s.outer()),
            "inner": parts(s.inner()),
            "coeff": c,
        }),
    }
}

/// Compact, key-sorted JSON.
pub fn json(e: &Element) -> String {
    json_value(e).to_string()
}

fn latex_comp(c: &Composition) -> String {
    if c.is_empty() {
        return "\\emptyset".to_string();
    }
    let p: Vec<String> = c.parts().iter().map(|x| x.to_string()).collect();
    format!("({})", p.join(","))
}

fn latex_symbol(b: Basis) -> &'static str {
    match b {
        Basis::M => "M",
        Basis::F => "F",
        Basis::DualImmaculate | Basis::SkewDualImmaculate => "\\mathfrak{S}^*",
        Basis::RsDualImmaculate | Basis::SkewRsDualImmaculate => "\\mathcal{R}\\mathfrak{S}^*",
        Basis::H => "H",
        Basis::E => "E",
        Basis::Immaculate => "\\mathfrak{S}",
        Basis::RsImmaculate => "\\mathcal{R}\\mathfrak{S}",
    }
}

pub fn latex_index(k: &BasisIndex) -> String {
    let sub = match k.index() {
        Index::Straight(a) => latex_comp(a),
        Index::Skew(s) => format!("{}/{}", latex_comp(s.outer()), latex_comp(s.inner())),
    };
    format!("{}_{{{}}}", latex_symbol(k.basis()), sub)
}

pub fn latex(e: &Element) -> String {
    signed_join(e.terms().map(|(k, c)| (latex_index(k), c)).collect(), " ")
}
