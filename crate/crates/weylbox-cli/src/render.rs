//! Output shaping shared by the commands: CSV tables, `{meta, rows}` JSON
//! documents, and fixed-width complex matrix blocks for text mode.

use serde_json::{json, Value};
use weylbox::algebra::{Mat2, Mat4, C64};

/// Shortest round-tripping decimal form; reparsing gives the same f64,
/// which is what makes the bc output loadable as a config file.
pub fn num(v: f64) -> String {
    format!("{v}")
}

pub fn csv(header: &str, rows: &[Vec<String>]) -> String {
    let mut out = String::with_capacity(64 + 16 * rows.len());
    out.push_str(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// The one JSON document shape every command emits: a `meta` object and a
/// `rows` array mirroring the CSV columns.
pub fn json_doc(meta: Value, rows: Value) -> String {
    let doc = json!({ "meta": meta, "rows": rows });
    let mut text = serde_json::to_string_pretty(&doc).expect("plain JSON values always serialize");
    text.push('\n');
    text
}

pub fn fmt_complex(z: C64) -> String {
    format!("{:+.6}{:+.6}i", z.re, z.im)
}

pub fn mat2_text(m: &Mat2, indent: &str) -> String {
    let mut out = String::new();
    for row in &m.e {
        out.push_str(indent);
        out.push('[');
        out.push_str(&fmt_complex(row[0]));
        out.push_str("  ");
        out.push_str(&fmt_complex(row[1]));
        out.push_str("]\n");
    }
    out
}

pub fn mat4_text(m: &Mat4, indent: &str) -> String {
    let mut out = String::new();
    for row in &m.e {
        out.push_str(indent);
        out.push('[');
        let cells: Vec<String> = row.iter().map(|z| fmt_complex(*z)).collect();
        out.push_str(&cells.join("  "));
        out.push_str("]\n");
    }
    out
}

pub fn real_mat_text<const N: usize>(rows: &[[f64; N]], indent: &str) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(indent);
        out.push('[');
        let cells: Vec<String> = row.iter().map(|v| format!("{v:+.6}")).collect();
        out.push_str(&cells.join("  "));
        out.push_str("]\n");
    }
    out
}

/// Complex entries as [re, im] pairs so the JSON stays number-only.
pub fn mat2_json(m: &Mat2) -> Value {
    Value::Array(
        m.e.iter()
            .map(|row| Value::Array(row.iter().map(|z| json!([z.re, z.im])).collect()))
            .collect(),
    )
}

pub fn mat4_json(m: &Mat4) -> Value {
    Value::Array(
        m.e.iter()
            .map(|row| Value::Array(row.iter().map(|z| json!([z.re, z.im])).collect()))
            .collect(),
    )
}

pub fn real_mat_json<const N: usize>(rows: &[[f64; N]]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| Value::Array(row.iter().map(|v| json!(v)).collect()))
            .collect(),
    )
}
