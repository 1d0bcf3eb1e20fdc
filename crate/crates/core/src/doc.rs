//! The space description document: a small JSON tree with fixed field names.
//! Parsing gives line/column diagnostics; serialization is canonical (stable
//! field order, two-space indentation), so canonical documents round-trip
//! byte-exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::{DirMode, FinitePreorderedSpace, PointSet};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TopologySection {
    pub relations: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DirectionSection {
    /// `explicit`, `discrete`, or `indiscrete`.
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub name: String,
    pub points: Vec<String>,
    pub topology: TopologySection,
    pub direction: DirectionSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<String>>,
}

impl SpaceDocument {
    pub fn parse(text: &str) -> Result<SpaceDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn serialize(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serialization");
        s.push('\n');
        s
    }

    /// Validates the document into a space and optional pair subset.
    pub fn build(&self) -> Result<(FinitePreorderedSpace, Option<PointSet>)> {
        let points: Vec<&str> = self.points.iter().map(|s| s.as_str()).collect();
        let topo: Vec<(&str, &str)> = self
            .topology
            .relations
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let dir_pairs: Vec<(&str, &str)> = self
            .direction
            .relations
            .iter()
            .flatten()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let mode = match self.direction.mode.as_str() {
            "explicit" => {
                if self.direction.relations.is_none() {
                    return Err(Error::DirectionModeMismatch(
                        "explicit mode needs a relations field".into(),
                    ));
                }
                DirMode::Explicit
            }
            "discrete" | "indiscrete" => {
                if !dir_pairs.is_empty() {
                    return Err(Error::DirectionModeMismatch(format!(
                        "{} mode must not carry relations",
                        self.direction.mode
                    )));
                }
                if self.direction.mode == "discrete" {
                    DirMode::Discrete
                } else {
                    DirMode::Indiscrete
                }
            }
            other => {
                return Err(Error::DirectionModeMismatch(format!(
                    "unknown mode '{other}'"
                )));
            }
        };
        let space = FinitePreorderedSpace::validate(&points, &topo, &dir_pairs, mode)?;
        let subset = match &self.subset {
            Some(ids) => {
                let refs: Vec<&str> = ids.iter().map(|s| s.as_str()).collect();
                Some(space.point_set(&refs)?)
            }
            None => None,
        };
        Ok((space, subset))
    }

    /// Canonical document of a space. Relation lists are Hasse reductions
    /// when the relation is antisymmetric (validation restores the closure),
    /// full non-reflexive pair lists otherwise; the direction mode is
    /// recovered when it is discrete or indiscrete.
    pub fn from_space(
        name: &str,
        space: &FinitePreorderedSpace,
        subset: Option<&PointSet>,
    ) -> SpaceDocument {
        let n = space.len();
        let pair_list = |rel: &crate::space::Relation| -> Vec<(String, String)> {
            let reduce = rel.antisymmetry_violation().is_none();
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i == j || !rel.contains(i, j) {
                        continue;
                    }
                    if reduce {
                        let skippable = (0..n)
                            .any(|k| k != i && k != j && rel.contains(i, k) && rel.contains(k, j));
                        if skippable {
                            continue;
                        }
                    }
                    out.push((space.id(i).to_string(), space.id(j).to_string()));
                }
            }
            out
        };
        let topo = pair_list(space.topo());
        let dir_count: usize = (0..n)
            .map(|i| (0..n).filter(|&j| space.dir_leq(i, j)).count())
            .sum();
        let direction = if dir_count == n {
            DirectionSection {
                mode: "discrete".into(),
                relations: None,
            }
        } else if dir_count == n * n {
            DirectionSection {
                mode: "indiscrete".into(),
                relations: None,
            }
        } else {
            DirectionSection {
                mode: "explicit".into(),
                relations: Some(pair_list(space.dir())),
            }
        };
        SpaceDocument {
            name: name.to_string(),
            points: space.point_ids().to_vec(),
            topology: TopologySection { relations: topo },
            direction,
            subset: subset.map(|s| s.iter().map(|i| space.id(i).to_string()).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_document_round_trips() {
        let text = r#"{
  "name": "dot",
  "points": ["p"],
  "topology": { "relations": [] },
  "direction": { "mode": "discrete" }
}"#;
        let doc = SpaceDocument::parse(text).unwrap();
        let (space, subset) = doc.build().unwrap();
        assert_eq!(space.len(), 1);
        assert!(subset.is_none());
        let doc2 = SpaceDocument::parse(&doc.serialize()).unwrap();
        let (space2, _) = doc2.build().unwrap();
        assert_eq!(space, space2);
    }

    #[test]
    fn explicit_mode_requires_relations() {
        let text = r#"{
  "name": "bad",
  "points": ["p"],
  "topology": { "relations": [] },
  "direction": { "mode": "explicit" }
}"#;
        let err = SpaceDocument::parse(text).unwrap().build().unwrap_err();
        assert!(matches!(err, Error::DirectionModeMismatch(_)));
    }

    #[test]
    fn discrete_mode_rejects_relations() {
        let text = r#"{
  "name": "bad",
  "points": ["a", "b"],
  "topology": { "relations": [] },
  "direction": { "mode": "discrete", "relations": [["a", "b"]] }
}"#;
        let err = SpaceDocument::parse(text).unwrap().build().unwrap_err();
        assert!(matches!(err, Error::DirectionModeMismatch(_)));
    }

    #[test]
    fn unknown_fields_and_points_are_rejected() {
        let err = SpaceDocument::parse(r#"{"name": "x", "pts": []}"#).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
        let text = r#"{
  "name": "bad",
  "points": ["a"],
  "topology": { "relations": [["a", "z"]] },
  "direction": { "mode": "discrete" }
}"#;
        let err = SpaceDocument::parse(text).unwrap().build().unwrap_err();
        assert!(matches!(err, Error::UnknownPoint(_)));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = SpaceDocument::parse("{\n  \"name\": }").unwrap_err();
        let msg = format!("{err}");
        assert!(msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn space_export_round_trips_fixtures() {
        for model in crate::models::all_models() {
            let doc = SpaceDocument::from_space(&model.name, &model.space, model.subset.as_ref());
            let (rebuilt, subset) = doc.build().unwrap();
            assert_eq!(rebuilt, model.space, "round trip of {}", model.name);
            assert_eq!(subset, model.subset);
            // serialized form parses back to the same document
            let doc2 = SpaceDocument::parse(&doc.serialize()).unwrap();
            assert_eq!(doc2.serialize(), doc.serialize());
        }
    }
}
