use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};
use tatecx::homalg::HomologyTable;

use crate::session::SCHEMA_VERSION;

/// Echo of the resolved invocation.
#[derive(Debug, Clone, Serialize)]
pub struct CommandEcho {
    pub subcommand: String,
    pub session: String,
    pub field: String,
    pub seed: u64,
    pub check_t: bool,
    pub lutz: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Bounds {
    #[serde(rename = "N")]
    pub n: Option<usize>,
    #[serde(rename = "D")]
    pub d: i64,
}

pub fn envelope(command: &CommandEcho, bounds: &Bounds, result: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "bounds": bounds,
        "result": result,
    })
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

/// `i \ j` grid of nonzero homology dimensions.
pub fn homology_grid(title: &str, h: &HomologyTable) -> String {
    let mut out = String::new();
    let _ = write!(out, "{title}");
    if let Some(d) = h.up_to_degree {
        let _ = write!(out, " (internal degrees <= {d})");
    }
    out.push('\n');
    if h.entries.is_empty() {
        let _ = writeln!(out, "  zero for i in {}", index_span(&h.indices));
        return out;
    }
    let lo = h.entries.iter().map(|e| e.degree).min().unwrap_or(0);
    let hi = h.entries.iter().map(|e| e.degree).max().unwrap_or(0);
    let _ = write!(out, "  {:>4} |", "i\\j");
    for j in lo..=hi {
        let _ = write!(out, "{j:>5}");
    }
    out.push('\n');
    for &i in &h.indices {
        let _ = write!(out, "  {i:>4} |");
        for j in lo..=hi {
            match h.dim(i, j) {
                0 => out.push_str("    ."),
                d => {
                    let _ = write!(out, "{d:>5}");
                }
            }
        }
        out.push('\n');
    }
    out
}

fn index_span(indices: &[i64]) -> String {
    match (indices.first(), indices.last()) {
        (Some(a), Some(b)) => format!("[{a}, {b}]"),
        _ => "[]".into(),
    }
}

pub fn list(items: &[String]) -> String {
    items.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use tatecx::homalg::HomologyEntry;

    #[test]
    fn grid_marks_zero_cells() {
        let h = HomologyTable {
            indices: vec![1, 2],
            entries: vec![HomologyEntry { index: 2, degree: 4, dim: 1 }],
            up_to_degree: Some(6),
        };
        let g = homology_grid("H", &h);
        assert!(g.starts_with("H (internal degrees <= 6)"));
        assert!(g.contains("     1 |    .\n"));
        assert!(g.contains("     2 |    1\n"));
    }

    #[test]
    fn tables_serialize_keyed_by_index_and_degree() {
        let h = HomologyTable {
            indices: vec![2],
            entries: vec![HomologyEntry { index: 2, degree: 4, dim: 1 }],
            up_to_degree: None,
        };
        assert_eq!(to_value(&h), json!({ "indices": [2], "dims": { "2,4": 1 }, "up_to_degree": null }));
    }
}
