//! JSON interchange format for spaces and optional value assignments.
//!
//! The on-disk document lists point labels, a basis of generator sets (as
//! label lists), and optionally a total assignment from point labels to
//! value strings:
//!
//! ```json
//! {
//!   "points": ["0", "1", "2"],
//!   "basis": [["0"], ["2"]],
//!   "assignment": { "0": "A", "1": "A", "2": "B" }
//! }
//! ```
//!
//! The empty set and the whole space are open implicitly and never listed.
//! Duplicate and empty basis entries are dropped with a warning. Documents
//! produced by [`save_string`] are canonical and round-trip byte-exactly
//! through load → save.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::space::SemiTopology;
use crate::values::ValueAssignment;

#[derive(Debug, Error)]
pub enum DocError {
    /// Malformed JSON; the message carries line/column context.
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),

    /// Well-formed JSON that violates the document schema.
    #[error("schema error at {context}: {message}")]
    Schema { context: String, message: String },

    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn schema(context: impl Into<String>, message: impl Into<String>) -> DocError {
    DocError::Schema { context: context.into(), message: message.into() }
}

/// The serialized form. `assignment` maps point label → value string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemiTopologyDocument {
    pub points: Vec<String>,
    pub basis: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<BTreeMap<String, String>>,
}

/// A loaded document: the space, the optional assignment, and any warnings
/// produced while canonicalizing.
#[derive(Debug)]
pub struct Loaded {
    pub space: SemiTopology,
    pub assignment: Option<ValueAssignment>,
    pub warnings: Vec<String>,
}

impl SemiTopologyDocument {
    /// Validates the document and builds the space and assignment.
    pub fn realize(&self) -> Result<Loaded, DocError> {
        for (i, label) in self.points.iter().enumerate() {
            if label.is_empty() {
                return Err(schema(format!("points[{i}]"), "empty point label"));
            }
            if self.points[..i].contains(label) {
                return Err(schema(format!("points[{i}]"), format!("duplicate point label `{label}`")));
            }
        }
        if self.points.len() > crate::set::MAX_POINTS {
            return Err(schema("points", format!("more than {} points", crate::set::MAX_POINTS)));
        }
        let index = |context: String, label: &str| -> Result<usize, DocError> {
            self.points
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| schema(context, format!("unknown point label `{label}`")))
        };

        let mut warnings = Vec::new();
        let mut gens: Vec<Vec<usize>> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (i, entry) in self.basis.iter().enumerate() {
            let mut gen: Vec<usize> = Vec::with_capacity(entry.len());
            for label in entry {
                gen.push(index(format!("basis[{i}]"), label)?);
            }
            gen.sort_unstable();
            gen.dedup();
            if gen.is_empty() {
                warnings.push(format!("basis[{i}]: empty generator dropped"));
                continue;
            }
            if !seen.insert(gen.clone()) {
                warnings.push(format!("basis[{i}]: duplicate generator dropped"));
                continue;
            }
            gens.push(gen);
        }

        let space = SemiTopology::with_labels(self.points.clone(), gens)
            .map_err(|e| schema("points/basis", e.to_string()))?;

        let assignment = match &self.assignment {
            None => None,
            Some(map) => {
                for label in map.keys() {
                    index("assignment".to_string(), label)?;
                }
                let mut value_labels: Vec<String> = map.values().cloned().collect();
                value_labels.sort();
                value_labels.dedup();
                if value_labels.is_empty() {
                    return Err(schema("assignment", "assignment present but empty"));
                }
                let mut values = Vec::with_capacity(space.len());
                for label in space.labels() {
                    let value = map.get(label).ok_or_else(|| {
                        schema("assignment", format!("missing value for point `{label}`"))
                    })?;
                    values.push(value_labels.iter().position(|v| v == value).expect("collected above"));
                }
                Some(
                    ValueAssignment::new(values, value_labels)
                        .map_err(|e| schema("assignment", e.to_string()))?,
                )
            }
        };

        Ok(Loaded { space, assignment, warnings })
    }

    /// Canonical document for a space: labels in point order, basis in
    /// canonical set order.
    pub fn from_space(st: &SemiTopology, assignment: Option<&ValueAssignment>) -> Self {
        let points = st.labels().to_vec();
        let basis = st
            .basis()
            .iter()
            .map(|g| g.iter().map(|p| st.label(p).to_string()).collect())
            .collect();
        let assignment = assignment.map(|f| {
            st.points()
                .map(|p| (st.label(p).to_string(), f.label_of(f.value(p)).to_string()))
                .collect()
        });
        SemiTopologyDocument { points, basis, assignment }
    }
}

/// Parses a document from JSON text and realizes it.
pub fn load_str(text: &str) -> Result<Loaded, DocError> {
    let doc: SemiTopologyDocument = serde_json::from_str(text)?;
    doc.realize()
}

/// Reads and realizes a document file.
pub fn load(path: &Path) -> Result<Loaded, DocError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| DocError::Io { path: path.display().to_string(), source })?;
    load_str(&text)
}

/// Canonical JSON text for a space (2-space indentation, trailing newline).
pub fn save_string(st: &SemiTopology, assignment: Option<&ValueAssignment>) -> String {
    let doc = SemiTopologyDocument::from_space(st, assignment);
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

/// Writes the canonical document to a file.
pub fn save(path: &Path, st: &SemiTopology, assignment: Option<&ValueAssignment>) -> Result<(), DocError> {
    std::fs::write(path, save_string(st, assignment))
        .map_err(|source| DocError::Io { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_fig2_top_left() {
        let loaded = load_str(r#"{"points":["0","1","2"],"basis":[["0"],["2"]]}"#).unwrap();
        assert_eq!(loaded.space.len(), 3);
        assert_eq!(loaded.space.basis().len(), 2);
        assert!(loaded.warnings.is_empty());
        assert!(loaded.assignment.is_none());
    }

    #[test]
    fn loads_final_space() {
        let loaded = load_str(r#"{"points":["a"],"basis":[]}"#).unwrap();
        assert_eq!(loaded.space.len(), 1);
        assert_eq!(loaded.space.enumerate_opens(4).opens.len(), 2);
    }

    #[test]
    fn unknown_label_is_schema_error() {
        let err = load_str(r#"{"points":["0","1"],"basis":[["0","zz"]]}"#).unwrap_err();
        match err {
            DocError::Schema { context, message } => {
                assert_eq!(context, "basis[0]");
                assert!(message.contains("zz"));
            }
            other => panic!("expected schema error, got {other}"),
        }
    }

    #[test]
    fn duplicate_point_is_schema_error() {
        let err = load_str(r#"{"points":["a","a"],"basis":[]}"#).unwrap_err();
        assert!(matches!(err, DocError::Schema { .. }));
    }

    #[test]
    fn malformed_json_is_parse_error() {
        let err = load_str("{points: oops").unwrap_err();
        assert!(matches!(err, DocError::Parse(_)));
    }

    #[test]
    fn dropped_generators_warn() {
        let loaded =
            load_str(r#"{"points":["0","1"],"basis":[["0"],[],["0"],["0","0"]]}"#).unwrap();
        assert_eq!(loaded.space.basis().len(), 1);
        assert_eq!(loaded.warnings.len(), 3, "empty, duplicate, and label-duplicate generator");
    }

    #[test]
    fn assignment_must_be_total() {
        let err = load_str(
            r#"{"points":["0","1"],"basis":[["0"]],"assignment":{"0":"A"}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, DocError::Schema { .. }));

        let ok = load_str(
            r#"{"points":["0","1"],"basis":[["0"]],"assignment":{"0":"A","1":"B"}}"#,
        )
        .unwrap();
        let f = ok.assignment.unwrap();
        assert_ne!(f.value(0), f.value(1));
    }

    #[test]
    fn canonical_round_trip_is_byte_exact() {
        let loaded = load_str(r#"{"points":["0","1","2"],"basis":[["2"],["0"]]}"#).unwrap();
        let text = save_string(&loaded.space, None);
        let again = load_str(&text).unwrap();
        assert_eq!(save_string(&again.space, None), text);
        assert!(again.warnings.is_empty(), "canonical documents re-load without warnings");
    }
}
