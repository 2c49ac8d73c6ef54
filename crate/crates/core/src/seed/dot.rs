//! DOT rendering of ice quivers.

use crate::registry;

use super::{Seed, SeedError};

/// Renders the seed's ice quiver as a DOT digraph. Frozen vertices are
/// boxed; arrow multiplicities appear as edge labels. Requires a
/// skew-symmetric ex-part.
pub fn quiver_to_dot(s: &Seed) -> Result<String, SeedError> {
    for (u, v, w) in s.b.entries() {
        if s.ex.contains(&v) && s.b.entry(v, u) != -w {
            return Err(SeedError::NotSkewSymmetric);
        }
    }
    let mut out = String::from("digraph seed {\n");
    for v in &s.vars {
        let shape = if v.frozen { "box" } else { "ellipse" };
        out.push_str(&format!(
            "  \"{}\" [shape={}];\n",
            registry::name(v.id),
            shape
        ));
    }
    let mut edge = |from: crate::registry::VarId, to: crate::registry::VarId, mult: i64| {
        if mult == 1 {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                registry::name(from),
                registry::name(to)
            ));
        } else {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                registry::name(from),
                registry::name(to),
                mult
            ));
        }
    };
    for (u, v, w) in s.b.entries() {
        if w > 0 {
            edge(u, v, w);
        } else if w < 0 && !s.ex.contains(&v) {
            // Arrows from frozen vertices are only recorded in the
            // exchangeable row; emit them here.
            edge(v, u, -w);
        }
    }
    out.push_str("}\n");
    Ok(out)
}
