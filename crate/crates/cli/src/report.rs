//! Human and JSON reports for root sets and scalar results.

use quatpoly::{Quat64, RootSet};
use serde_json::{json, Value};

pub fn quat_array(q: Quat64) -> Value {
    json!([q.re, q.i, q.j, q.k])
}

/// Root set as the stable JSON schema:
/// `{"roots": [{"q": [..], "residual": r}], "spheres": [{"re":, "imag_norm":}], "status": ..}`.
pub fn root_set_json(set: &RootSet<f64>, residuals: &[f64], status: &str) -> Value {
    let roots: Vec<Value> = set
        .isolated
        .iter()
        .zip(residuals)
        .map(|(z, r)| json!({"q": quat_array(*z), "residual": r}))
        .collect();
    let spheres: Vec<Value> = set
        .spheres
        .iter()
        .map(|s| json!({"re": s.re, "imag_norm": s.imag_norm}))
        .collect();
    json!({"roots": roots, "spheres": spheres, "status": status})
}

pub fn root_set_human(set: &RootSet<f64>, residuals: &[f64], status: &str) -> String {
    let mut out = String::new();
    for (z, r) in set.isolated.iter().zip(residuals) {
        out.push_str(&format!("root: {z}    (residual {r:.3e})\n"));
    }
    for s in &set.spheres {
        out.push_str(&format!(
            "sphere: re = {}, imag_norm = {}    (all re + x with |x|^2 = imag_norm)\n",
            s.re, s.imag_norm
        ));
    }
    if set.isolated.is_empty() && set.spheres.is_empty() {
        out.push_str("no roots found\n");
    }
    out.push_str(&format!("status: {status}\n"));
    out
}
