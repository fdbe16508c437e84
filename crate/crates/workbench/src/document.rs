//! The input document format and its conversion into validated model data.
//!
//! Documents are UTF-8 JSON. Every rational is written as a `"p/q"` (or
//! `"p"`) string; areas are always ω/π and the monotonicity constant is λ·π,
//! so the files never contain a floating point number. Unknown keys are
//! rejected to keep fixtures honest.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use pearl_core::blowup::BlowupParams;
use pearl_core::model::{
    validate_monotone, CriticalPoint, DiskClass, FloerPairData, LagrangianData, ManifoldData,
    TrajectoryCount,
};
use pearl_core::Rat;

use crate::WorkbenchError;

fn parse_rat(text: &str, context: &str) -> Result<Rat, WorkbenchError> {
    Rat::from_str(text.trim()).map_err(|e| {
        WorkbenchError::Parse(format!(
            "{}: unreadable rational '{}' ({})",
            context, text, e
        ))
    })
}

fn format_rat(r: Rat) -> String {
    r.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocManifold {
    pub n: u32,
    pub lambda_pi: String,
    pub width_asserted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocPoint {
    pub name: String,
    pub index: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocClass {
    pub name: String,
    pub maslov: i64,
    pub area_over_pi: String,
    pub through_point: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<BTreeMap<String, u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocCount {
    pub from: String,
    pub to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocLagrangian {
    pub name: String,
    pub dim: u32,
    pub critical_points: Vec<DocPoint>,
    pub classes: Vec<DocClass>,
    pub morse_counts: Vec<DocCount>,
    pub quantum_counts: Vec<DocCount>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti_mod2: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocFloerPair {
    pub points: Vec<String>,
    pub strip_classes: Vec<DocClass>,
    pub strip_counts: Vec<DocCount>,
    pub min_maslov_assertion: bool,
}

/// Top-level document. `notes` is free-form documentation carried along with
/// fixtures (for example where the blown-up point sits).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub manifold: DocManifold,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lagrangians: Vec<DocLagrangian>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub floer_pairs: Vec<DocFloerPair>,
}

/// A fully validated in-memory workspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Workspace {
    pub notes: Vec<String>,
    pub manifold: ManifoldData,
    pub lagrangians: Vec<LagrangianData>,
    pub floer_pairs: Vec<FloerPairData>,
}

impl Workspace {
    /// Blow-up parameters for the manifold, computed on demand.
    pub fn blowup_params(&self) -> BlowupParams {
        BlowupParams::monotone(&self.manifold)
    }

    pub fn from_document(doc: &Document) -> Result<Workspace, WorkbenchError> {
        let lambda_pi = parse_rat(&doc.manifold.lambda_pi, "manifold.lambda_pi")?;
        let manifold = ManifoldData::new(doc.manifold.n, lambda_pi, doc.manifold.width_asserted)
            .map_err(|e| WorkbenchError::Validation(vec![format!("manifold: {}", e)]))?;

        let mut problems = Vec::new();
        let mut lagrangians = Vec::new();
        let mut seen_names = BTreeMap::new();
        for dl in &doc.lagrangians {
            if seen_names.insert(dl.name.clone(), ()).is_some() {
                problems.push(format!("duplicate lagrangian name '{}'", dl.name));
            }
            let l = convert_lagrangian(dl)?;
            let structural = l.validate(&manifold);
            if structural.is_empty() {
                let report = validate_monotone(&manifold, &l);
                for v in &report.violations {
                    problems.push(format!("lagrangian {}: {}", l.name, v));
                }
            } else {
                for p in structural {
                    problems.push(format!("lagrangian {}: {}", dl.name, p));
                }
            }
            lagrangians.push(l);
        }

        let mut floer_pairs = Vec::new();
        for (i, dp) in doc.floer_pairs.iter().enumerate() {
            let pair = convert_pair(dp)?;
            for p in pair.validate(&manifold) {
                problems.push(format!("floer pair #{}: {}", i, p));
            }
            floer_pairs.push(pair);
        }

        if !problems.is_empty() {
            return Err(WorkbenchError::Validation(problems));
        }
        Ok(Workspace {
            notes: doc.notes.clone(),
            manifold,
            lagrangians,
            floer_pairs,
        })
    }

    /// Canonical document form; serializing it and parsing the result yields
    /// an identical workspace.
    pub fn to_document(&self) -> Document {
        Document {
            notes: self.notes.clone(),
            manifold: DocManifold {
                n: self.manifold.half_dim,
                lambda_pi: format_rat(self.manifold.lambda_pi),
                width_asserted: self.manifold.width_asserted,
            },
            lagrangians: self
                .lagrangians
                .iter()
                .map(|l| DocLagrangian {
                    name: l.name.clone(),
                    dim: l.dim,
                    critical_points: l
                        .critical_points
                        .iter()
                        .map(|p| DocPoint {
                            name: p.name.clone(),
                            index: p.index,
                        })
                        .collect(),
                    classes: l.classes.iter().map(class_to_doc).collect(),
                    morse_counts: l.morse_counts.iter().map(count_to_doc).collect(),
                    quantum_counts: l.quantum_counts.iter().map(count_to_doc).collect(),
                    betti_mod2: l.betti_mod2.clone(),
                })
                .collect(),
            floer_pairs: self
                .floer_pairs
                .iter()
                .map(|p| DocFloerPair {
                    points: p.intersection_points.clone(),
                    strip_classes: p.strip_classes.iter().map(class_to_doc).collect(),
                    strip_counts: p.strip_counts.iter().map(count_to_doc).collect(),
                    min_maslov_assertion: p.min_maslov_assertion,
                })
                .collect(),
        }
    }
}

fn class_to_doc(c: &DiskClass) -> DocClass {
    DocClass {
        name: c.name.clone(),
        maslov: c.maslov,
        area_over_pi: format_rat(c.area_over_pi),
        through_point: c.through_point,
        components: c.components.clone(),
    }
}

fn count_to_doc(c: &TrajectoryCount) -> DocCount {
    DocCount {
        from: c.from.clone(),
        to: c.to.clone(),
        class: c.class_name.clone(),
        count: c.count,
    }
}

fn convert_class(dc: &DocClass, context: &str) -> Result<DiskClass, WorkbenchError> {
    Ok(DiskClass {
        name: dc.name.clone(),
        maslov: dc.maslov,
        area_over_pi: parse_rat(&dc.area_over_pi, &format!("{}.{}", context, dc.name))?,
        exc_mult: 0,
        through_point: dc.through_point,
        components: dc.components.clone(),
    })
}

fn convert_count(dc: &DocCount) -> TrajectoryCount {
    TrajectoryCount {
        from: dc.from.clone(),
        to: dc.to.clone(),
        class_name: dc.class.clone(),
        count: dc.count,
    }
}

fn convert_lagrangian(dl: &DocLagrangian) -> Result<LagrangianData, WorkbenchError> {
    Ok(LagrangianData {
        name: dl.name.clone(),
        dim: dl.dim,
        critical_points: dl
            .critical_points
            .iter()
            .map(|p| CriticalPoint {
                name: p.name.clone(),
                index: p.index,
            })
            .collect(),
        classes: dl
            .classes
            .iter()
            .map(|c| convert_class(c, &dl.name))
            .collect::<Result<_, _>>()?,
        morse_counts: dl.morse_counts.iter().map(convert_count).collect(),
        quantum_counts: dl.quantum_counts.iter().map(convert_count).collect(),
        betti_mod2: dl.betti_mod2.clone(),
    })
}

fn convert_pair(dp: &DocFloerPair) -> Result<FloerPairData, WorkbenchError> {
    Ok(FloerPairData {
        intersection_points: dp.points.clone(),
        strip_classes: dp
            .strip_classes
            .iter()
            .map(|c| convert_class(c, "floer_pair"))
            .collect::<Result<_, _>>()?,
        strip_counts: dp.strip_counts.iter().map(convert_count).collect(),
        min_maslov_assertion: dp.min_maslov_assertion,
    })
}

/// Parses a UTF-8 document into a validated workspace. Syntax problems carry
/// the line and column reported by the JSON parser.
pub fn parse_spec(text: &str) -> Result<Workspace, WorkbenchError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| {
        WorkbenchError::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e))
    })?;
    Workspace::from_document(&doc)
}

/// Canonical serialization of a workspace.
pub fn render_document(w: &Workspace) -> String {
    serde_json::to_string_pretty(&w.to_document()).expect("document serialization")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_documents_are_parse_errors() {
        assert!(matches!(parse_spec(""), Err(WorkbenchError::Parse(_))));
    }

    #[test]
    fn unknown_keys_are_parse_errors() {
        let text =
            r#"{"manifold": {"n": 2, "lambda_pi": "6", "width_asserted": true, "pi": 3.14}}"#;
        assert!(matches!(parse_spec(text), Err(WorkbenchError::Parse(_))));
    }

    #[test]
    fn floats_are_not_rationals() {
        let text = r#"{"manifold": {"n": 2, "lambda_pi": "6.0", "width_asserted": true}}"#;
        assert!(matches!(parse_spec(text), Err(WorkbenchError::Parse(_))));
    }

    #[test]
    fn dangling_class_references_fail_validation() {
        let text = r#"{
            "manifold": {"n": 2, "lambda_pi": "6", "width_asserted": true},
            "lagrangians": [{
                "name": "l", "dim": 2,
                "critical_points": [{"name": "p0", "index": 0}, {"name": "p1", "index": 1}],
                "classes": [{"name": "A", "maslov": 2, "area_over_pi": "1/3", "through_point": false}],
                "morse_counts": [],
                "quantum_counts": [{"from": "p0", "to": "p1", "class": "B", "count": 1}]
            }]
        }"#;
        match parse_spec(text) {
            Err(WorkbenchError::Validation(items)) => {
                assert!(items.iter().any(|i| i.contains("'B'")));
            }
            other => panic!("expected validation failure, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn minimal_document_round_trips() {
        let text = r#"{
            "manifold": {"n": 2, "lambda_pi": "6", "width_asserted": true},
            "lagrangians": [{
                "name": "l", "dim": 2,
                "critical_points": [{"name": "p0", "index": 0}],
                "classes": [],
                "morse_counts": [],
                "quantum_counts": []
            }]
        }"#;
        let w = parse_spec(text).unwrap();
        let rendered = render_document(&w);
        let reparsed = parse_spec(&rendered).unwrap();
        assert_eq!(w, reparsed);
    }
}
