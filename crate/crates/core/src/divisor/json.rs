use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{AmbientRing, BaseMorphism, Superdivisor};
use crate::error::{Error, Result};
use crate::superalgebra::VariableContext;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseJson {
    #[serde(default)]
    pub even: Vec<String>,
    #[serde(default)]
    pub odd: Vec<String>,
}

impl BaseJson {
    pub fn from_context(ctx: &VariableContext) -> Self {
        BaseJson {
            even: ctx.even_vars().to_vec(),
            odd: ctx.odd_vars().to_vec(),
        }
    }

    pub fn to_context(&self) -> Result<VariableContext> {
        VariableContext::new(&self.even, &self.odd)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub a: String,
    pub b: String,
}

/// Names of the patch coordinates; `z` and `t` when absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbientJson {
    pub z: String,
    pub theta: String,
}

/// `{"g": 2, "coeffs": [{"a": "...", "b": "..."}], "base": {"even": [...], "odd": [...]}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorJson {
    pub g: usize,
    pub coeffs: Vec<CoeffJson>,
    pub base: BaseJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<AmbientJson>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Invalid(format!("json: {e}"))
}

impl DivisorJson {
    pub fn from_divisor(d: &Superdivisor) -> Self {
        let ring = d.ring();
        let ambient = (ring.coordinate() != super::DEFAULT_COORDINATE
            || ring.odd_coordinate() != super::DEFAULT_ODD_COORDINATE)
            .then(|| AmbientJson {
                z: ring.coordinate().to_string(),
                theta: ring.odd_coordinate().to_string(),
            });
        DivisorJson {
            g: d.degree(),
            coeffs: d
                .coefficients()
                .iter()
                .map(|(a, b)| CoeffJson {
                    a: a.to_string(),
                    b: b.to_string(),
                })
                .collect(),
            base: BaseJson::from_context(d.base()),
            ambient,
        }
    }

    pub fn to_divisor(&self) -> Result<Superdivisor> {
        if self.coeffs.len() != self.g {
            return Err(Error::CoefficientCount {
                expected: self.g,
                found: self.coeffs.len(),
            });
        }
        let base = self.base.to_context()?;
        let ring = match &self.ambient {
            Some(a) => AmbientRing::new(&base, &a.z, &a.theta)?,
            None => AmbientRing::with_defaults(&base)?,
        };
        let pairs: Vec<(&str, &str)> = self
            .coeffs
            .iter()
            .map(|c| (c.a.as_str(), c.b.as_str()))
            .collect();
        Superdivisor::parse(ring, &pairs)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// `{"target": {"even": [...], "odd": [...]}, "images": {"a1": "...", ...}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub target: BaseJson,
    #[serde(default)]
    pub images: BTreeMap<String, String>,
}

impl MapJson {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn from_morphism(phi: &BaseMorphism) -> Self {
        MapJson {
            target: BaseJson::from_context(phi.target()),
            images: phi
                .assignment()
                .into_iter()
                .map(|(k, v)| (k, v.to_string()))
                .collect(),
        }
    }

    pub fn to_morphism(&self, source: &VariableContext) -> Result<BaseMorphism> {
        BaseMorphism::parse(source, &self.target.to_context()?, &self.images)
    }
}
