//! JSON seed schema:
//! `{vars: [{name, label?, frozen}], ex: [names], B: [[row, col, int]],
//!   history?: [names]}`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::grassmann::Partition;
use crate::laurent::LaurentPoly;
use crate::registry;

use super::{ClusterVar, ExchangeMatrix, InitialFrame, Seed};

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct VarJson {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub frozen: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SeedJson {
    pub vars: Vec<VarJson>,
    pub ex: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<(String, String, i64)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub history: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum SeedJsonError {
    #[error("malformed seed json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Schema(String),
}

pub fn to_json(s: &Seed) -> SeedJson {
    SeedJson {
        vars: s
            .vars
            .iter()
            .map(|v| VarJson {
                name: registry::name(v.id),
                label: v.label.as_ref().map(|l| l.to_string()),
                frozen: v.frozen,
            })
            .collect(),
        ex: s.ex.iter().map(|&x| registry::name(x)).collect(),
        b: s
            .b
            .entries()
            .map(|(r, c, v)| (registry::name(r), registry::name(c), v))
            .collect(),
        history: s.history.clone(),
    }
}

/// Reconstructs a seed from the schema. Expressions are reset to the
/// variables themselves: a loaded seed is an initial seed.
pub fn from_json(j: &SeedJson) -> Result<Seed, SeedJsonError> {
    let mut ids = Vec::new();
    let mut vars = Vec::new();
    for vj in &j.vars {
        let id = registry::var(&vj.name);
        if ids.contains(&id) {
            return Err(SeedJsonError::Schema(format!(
                "duplicate variable {}",
                vj.name
            )));
        }
        let label = match &vj.label {
            None => None,
            Some(text) => Some(text.parse::<Partition>().map_err(|e| {
                SeedJsonError::Schema(format!("label of {}: {}", vj.name, e))
            })?),
        };
        ids.push(id);
        vars.push(ClusterVar {
            id,
            label,
            expr: LaurentPoly::var(id),
            frozen: vj.frozen,
        });
    }
    let mut ex = BTreeSet::new();
    for name in &j.ex {
        let id = registry::var(name);
        if !ids.contains(&id) {
            return Err(SeedJsonError::Schema(format!(
                "exchangeable {} not among vars",
                name
            )));
        }
        ex.insert(id);
    }
    for v in &mut vars {
        v.frozen = !ex.contains(&v.id);
    }
    let mut b = ExchangeMatrix::new();
    for (r, c, val) in &j.b {
        let rid = registry::var(r);
        let cid = registry::var(c);
        if !ids.contains(&rid) || !ids.contains(&cid) {
            return Err(SeedJsonError::Schema(format!(
                "matrix entry ({}, {}) refers to unknown variables",
                r, c
            )));
        }
        b.add(rid, cid, *val);
    }
    let frame = InitialFrame {
        vars: ids,
        ex: ex.clone(),
    };
    Ok(Seed {
        vars,
        ex,
        b,
        frame: Arc::new(frame),
        history: j.history.clone(),
    })
}

pub fn to_string_pretty(s: &Seed) -> String {
    serde_json::to_string_pretty(&to_json(s)).expect("seed json serialises")
}

pub fn from_str(text: &str) -> Result<Seed, SeedJsonError> {
    let j: SeedJson = serde_json::from_str(text)?;
    from_json(&j)
}

/// Consistency used by round-trip checks: same names, labels, frozen
/// flags, exchangeable set and matrix entries.
pub fn same_shape(a: &Seed, b: &Seed) -> bool {
    a.vars.len() == b.vars.len()
        && a.vars.iter().zip(&b.vars).all(|(x, y)| {
            x.id == y.id && x.label == y.label && x.frozen == y.frozen
        })
        && a.ex == b.ex
        && a.b == b.b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::Seed;

    #[test]
    fn round_trip() {
        let s = Seed::from_quiver(
            &[("js_a", false), ("js_b", true)],
            &[("js_a", "js_b", 2)],
        )
        .with_label(1, "[2,1]".parse().unwrap());
        let text = to_string_pretty(&s);
        let back = from_str(&text).unwrap();
        assert!(same_shape(&s, &back));
        assert_eq!(back.vars[1].label, Some("[2,1]".parse().unwrap()));
    }

    #[test]
    fn rejects_dangling_exchangeable() {
        let text = r#"{"vars": [{"name": "js_q", "frozen": false}], "ex": ["js_missing"], "B": []}"#;
        assert!(from_str(text).is_err());
    }
}
