//! On-disk document formats: instance files and solution documents.
//!
//! Both are UTF-8 JSON with a fixed field order so canonical files
//! round-trip byte-exactly.

use crate::eptas::{DerivedConstants, EptasDiagnostics, EptasMode, EptasParams, LogBase};
use crate::error::{Error, Result};
use crate::generators::EmbeddingConfig;
use crate::geometry::{Ball, GeometricInstance, Point};
use serde::{Deserialize, Serialize};

pub const INSTANCE_FORMAT: &str = "geoclique-instance";
pub const SOLUTION_FORMAT: &str = "geoclique-solution";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub format: String,
    pub version: u32,
    pub dim: usize,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub balls: Option<Vec<BallDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metadata: Option<InstanceMetadata>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BallDoc {
    pub center: Vec<f64>,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct InstanceMetadata {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Source graph of an embedding, for round-trip verification.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source_graph: Option<GraphDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding: Option<EmbeddingConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target_eps: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl InstanceDoc {
    pub fn from_instance(inst: &GeometricInstance) -> Self {
        match inst {
            GeometricInstance::Balls { dim, balls, weights } => InstanceDoc {
                format: INSTANCE_FORMAT.into(),
                version: 1,
                dim: *dim,
                kind: "balls".into(),
                balls: Some(
                    balls
                        .iter()
                        .map(|b| BallDoc {
                            center: b.center.coords.clone(),
                            radius: b.radius,
                        })
                        .collect(),
                ),
                points: None,
                threshold: None,
                weights: weights.clone(),
                metadata: None,
            },
            GeometricInstance::Points {
                dim,
                points,
                threshold,
                weights,
            } => InstanceDoc {
                format: INSTANCE_FORMAT.into(),
                version: 1,
                dim: *dim,
                kind: "points".into(),
                balls: None,
                points: Some(points.iter().map(|p| p.coords.clone()).collect()),
                threshold: Some(*threshold),
                weights: weights.clone(),
                metadata: None,
            },
        }
    }

    pub fn to_instance(&self) -> Result<GeometricInstance> {
        if self.format != INSTANCE_FORMAT {
            return Err(Error::BadInstance(format!(
                "unexpected format `{}`",
                self.format
            )));
        }
        let mut inst = match self.kind.as_str() {
            "balls" => {
                let balls = self
                    .balls
                    .as_ref()
                    .ok_or_else(|| Error::BadInstance("kind `balls` without balls".into()))?;
                GeometricInstance::Balls {
                    dim: self.dim,
                    balls: balls
                        .iter()
                        .map(|b| Ball::new(Point::new(b.center.clone()), b.radius))
                        .collect(),
                    weights: None,
                }
            }
            "points" => {
                let points = self
                    .points
                    .as_ref()
                    .ok_or_else(|| Error::BadInstance("kind `points` without points".into()))?;
                let threshold = self
                    .threshold
                    .ok_or_else(|| Error::BadInstance("kind `points` without threshold".into()))?;
                GeometricInstance::Points {
                    dim: self.dim,
                    points: points.iter().map(|c| Point::new(c.clone())).collect(),
                    threshold,
                    weights: None,
                }
            }
            other => {
                return Err(Error::BadInstance(format!("unknown instance kind `{other}`")));
            }
        };
        inst.set_weights(self.weights.clone());
        inst.validate()?;
        Ok(inst)
    }

    /// Canonical serialization: pretty JSON plus a trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub epsilon: f64,
    pub beta: f64,
    pub vc_dim: u32,
    pub iocp: u32,
    pub mode: EptasMode,
    pub seed: u64,
    pub s_cap: usize,
    pub t_cap: usize,
    pub log_base: LogBase,
    pub strict: bool,
}

impl From<&EptasParams> for ParamsDoc {
    fn from(p: &EptasParams) -> Self {
        ParamsDoc {
            epsilon: p.epsilon,
            beta: p.beta,
            vc_dim: p.vc_dim,
            iocp: p.iocp,
            mode: p.mode,
            seed: p.seed,
            s_cap: p.s_cap,
            t_cap: p.t_cap,
            log_base: p.log_base,
            strict: p.strict,
        }
    }
}

/// Everything a solver run reports. `valid` is recomputed from the instance
/// by the CLI before printing, never copied from the solver.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub format: String,
    pub version: u32,
    pub problem: String,
    pub method: String,
    pub vertices: Vec<usize>,
    pub size: usize,
    pub weight: f64,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived_constants: Option<DerivedConstants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<EptasDiagnostics>,
    pub elapsed_ms: u64,
}

impl SolutionDocument {
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_round_trip_is_byte_exact() {
        let inst = GeometricInstance::Balls {
            dim: 2,
            balls: vec![
                Ball::new(Point::new(vec![0.1, 0.2]), 1.0),
                Ball::new(Point::new(vec![1.0 / 3.0, 2.0f64.sqrt()]), 0.75),
            ],
            weights: Some(vec![1.0, 2.5]),
        };
        let doc = InstanceDoc::from_instance(&inst);
        let text = doc.to_canonical_json();
        let parsed = InstanceDoc::from_json(&text).unwrap();
        assert_eq!(doc, parsed);
        assert_eq!(text, parsed.to_canonical_json());
        assert_eq!(parsed.to_instance().unwrap(), inst);
    }

    #[test]
    fn point_instance_round_trip() {
        let inst = GeometricInstance::points(
            3,
            vec![Point::new(vec![0.0, 0.1, 0.2])],
            1.0,
        );
        let doc = InstanceDoc::from_instance(&inst);
        let back = doc.to_instance().unwrap();
        assert_eq!(back, inst);
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(InstanceDoc::from_json("{").is_err());
        let doc = InstanceDoc {
            format: "other".into(),
            version: 1,
            dim: 2,
            kind: "balls".into(),
            balls: Some(vec![]),
            points: None,
            threshold: None,
            weights: None,
            metadata: None,
        };
        assert!(doc.to_instance().is_err());
    }
}
