//! JSON input describing a constructible ℝ-space.

use std::path::Path;

use anyhow::{Context, Result};
use parahom::complexes::{SimplicialComplex, SimplicialMap};
use parahom::linalg::PrimeField;
use parahom::rspace::ConstructibleRSpace;
use serde::{Deserialize, Serialize};

/// `left_maps[i]` and `right_maps[i]` are `[source, target]` vertex pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default = "default_characteristic")]
    pub characteristic: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_dim: Option<usize>,
    pub critical_values: Vec<f64>,
    pub vertex_complexes: Vec<Vec<Vec<u32>>>,
    #[serde(default)]
    pub edge_complexes: Vec<Vec<Vec<u32>>>,
    #[serde(default)]
    pub left_maps: Vec<Vec<[u32; 2]>>,
    #[serde(default)]
    pub right_maps: Vec<Vec<[u32; 2]>>,
}

fn default_characteristic() -> u32 {
    2
}

/// A parsed and validated input.
pub struct Input {
    pub space: ConstructibleRSpace,
    pub field: PrimeField,
    pub max_dim: Option<usize>,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn build(&self) -> Result<Input> {
        let field = PrimeField::new(self.characteristic)?;
        let complexes = |list: &[Vec<Vec<u32>>], name: &str| -> Result<Vec<SimplicialComplex>> {
            list.iter()
                .enumerate()
                .map(|(i, s)| {
                    SimplicialComplex::from_simplices(s.iter().cloned()).with_context(|| format!("{name}[{i}]"))
                })
                .collect()
        };
        let maps = |list: &[Vec<[u32; 2]>]| -> Vec<SimplicialMap> {
            list.iter().map(|m| SimplicialMap::new(m.iter().map(|&[s, t]| (s, t)))).collect()
        };
        let space = ConstructibleRSpace::new(
            self.critical_values.clone(),
            complexes(&self.vertex_complexes, "vertex_complexes")?,
            complexes(&self.edge_complexes, "edge_complexes")?,
            maps(&self.left_maps),
            maps(&self.right_maps),
        )?;
        Ok(Input {
            space,
            field,
            max_dim: self.max_dim,
        })
    }

    pub fn from_space(space: &ConstructibleRSpace, field: PrimeField, max_dim: Option<usize>) -> Self {
        let complexes = |list: &[SimplicialComplex]| -> Vec<Vec<Vec<u32>>> {
            list.iter().map(|k| k.iter().cloned().collect()).collect()
        };
        let maps = |list: &mut dyn Iterator<Item = &SimplicialMap>| -> Vec<Vec<[u32; 2]>> {
            list.map(|m| m.pairs().map(|(s, t)| [s, t]).collect()).collect()
        };
        let gaps = space.edge_complexes().len();
        Self {
            characteristic: field.characteristic(),
            max_dim,
            critical_values: space.critical_values().to_vec(),
            vertex_complexes: complexes(space.vertex_complexes()),
            edge_complexes: complexes(space.edge_complexes()),
            left_maps: maps(&mut (0..gaps).map(|i| space.left_map(i))),
            right_maps: maps(&mut (0..gaps).map(|i| space.right_map(i))),
        }
    }
}

pub fn read_input(path: &Path) -> Result<Input> {
    InputDocument::read(path)?.build().with_context(|| format!("validating {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use parahom::corpus::{circle, torus};

    #[test]
    fn circle_document() {
        let text = r#"{
            "critical_values": [0, 1],
            "vertex_complexes": [[[0]], [[0]]],
            "edge_complexes": [[[0], [1]]],
            "left_maps": [[[0, 0], [1, 0]]],
            "right_maps": [[[0, 0], [1, 0]]]
        }"#;
        let input = InputDocument::parse(text).unwrap().build().unwrap();
        assert_eq!(input.space, circle());
        assert_eq!(input.field, PrimeField::GF2);
        assert_eq!(input.max_dim, None);
    }

    #[test]
    fn round_trip_through_space() {
        let x = torus();
        let doc = InputDocument::from_space(&x, PrimeField::new(3).unwrap(), Some(2));
        let back = InputDocument::parse(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.build().unwrap().space, x);
    }

    #[test]
    fn violations_are_named() {
        let text = r#"{"critical_values": [1, 0], "vertex_complexes": [[[0]], [[0]]],
            "edge_complexes": [[[0]]], "left_maps": [[[0, 0]]], "right_maps": [[[0, 0]]]}"#;
        let err = InputDocument::parse(text).unwrap().build().err().unwrap();
        assert!(format!("{err:#}").contains("critical_values[1]"), "{err:#}");
        assert!(InputDocument::parse(r#"{"critical_values": [0]}"#).is_err());
        assert!(InputDocument::parse(r#"{"critical_values": [0], "vertex_complexes": [[]], "bogus": 1}"#).is_err());
        let p4 = r#"{"characteristic": 4, "critical_values": [0], "vertex_complexes": [[]]}"#;
        assert!(InputDocument::parse(p4).unwrap().build().is_err());
    }
}
