//! Exchangeably connected components.
//!
//! Two variables are neighbours when they share a nonzero matrix entry;
//! exchangeable connectivity allows paths whose interior nodes are
//! exchangeable. Components of the exchangeable set may share frozen
//! variables on their boundary; frozen variables with no neighbours are
//! isolated and belong to no component.

use std::collections::{BTreeMap, BTreeSet};

use crate::registry::VarId;

use super::{ExchangeMatrix, Seed};

/// Result of the component decomposition: one seed fragment per component
/// (cluster restricted to the component, matrix restricted accordingly),
/// plus the isolated frozen variables.
#[derive(Clone, Debug)]
pub struct ComponentsReport {
    pub components: Vec<Seed>,
    pub isolated_frozen: Vec<VarId>,
}

impl ComponentsReport {
    /// The component (index into `components`) containing `id`, if any.
    pub fn component_of(&self, id: VarId) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.vars.iter().any(|v| v.id == id))
    }
}

/// Partition of the non-isolated variables into exchangeably connected
/// components.
pub fn exchangeable_components(s: &Seed) -> ComponentsReport {
    // Union-find over exchangeable variables using direct neighbour edges.
    let exvars: Vec<VarId> = s.ex.iter().copied().collect();
    let index: BTreeMap<VarId, usize> = exvars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..exvars.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for (u, v, w) in s.b.entries() {
        if w != 0 && s.ex.contains(&u) && s.ex.contains(&v) {
            let (iu, iv) = (index[&u], index[&v]);
            let (ru, rv) = (find(&mut parent, iu), find(&mut parent, iv));
            if ru != rv {
                parent[ru] = rv;
            }
        }
    }
    // Group exchangeables by root, then attach frozen neighbours.
    let mut groups: BTreeMap<usize, Vec<VarId>> = BTreeMap::new();
    for (i, &v) in exvars.iter().enumerate() {
        groups.entry(find(&mut parent, i)).or_default().push(v);
    }
    let mut touched_frozen: BTreeSet<VarId> = BTreeSet::new();
    let mut components = Vec::new();
    for group in groups.values() {
        let exset: BTreeSet<VarId> = group.iter().copied().collect();
        let mut members: BTreeSet<VarId> = exset.clone();
        for &u in group {
            for (v, w) in s.b.row(u) {
                if w != 0 && !s.ex.contains(&v) {
                    members.insert(v);
                    touched_frozen.insert(v);
                }
            }
        }
        let vars: Vec<_> = s
            .vars
            .iter()
            .filter(|v| members.contains(&v.id))
            .cloned()
            .collect();
        let mut b = ExchangeMatrix::new();
        for (u, v, w) in s.b.entries() {
            if exset.contains(&u) && members.contains(&v) {
                b.set(u, v, w);
            }
        }
        components.push(Seed {
            vars,
            ex: exset,
            b,
            frame: s.frame.clone(),
            history: s.history.clone(),
        });
    }
    let isolated_frozen: Vec<VarId> = s
        .vars
        .iter()
        .filter(|v| v.frozen && !touched_frozen.contains(&v.id))
        .map(|v| v.id)
        .collect();
    ComponentsReport {
        components,
        isolated_frozen,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry;
    use crate::seed::Seed;

    /// The 12-vertex quiver with four exchangeably connected components and
    /// one isolated frozen vertex.
    pub fn twelve_vertex_example() -> Seed {
        Seed::from_quiver(
            &[
                ("cex_x1", false),
                ("cex_x2", true),
                ("cex_x3", false),
                ("cex_x4", true),
                ("cex_x5", false),
                ("cex_x6", false),
                ("cex_x7", false),
                ("cex_x8", false),
                ("cex_x9", true),
                ("cex_x10", false),
                ("cex_x11", true),
                ("cex_x12", true),
            ],
            &[
                ("cex_x1", "cex_x2", 1),
                ("cex_x1", "cex_x3", 1),
                ("cex_x1", "cex_x4", 1),
                ("cex_x2", "cex_x3", 2),
                ("cex_x3", "cex_x4", 1),
                ("cex_x2", "cex_x5", 1),
                ("cex_x4", "cex_x5", 1),
                ("cex_x5", "cex_x6", 1),
                ("cex_x2", "cex_x7", 1),
                ("cex_x7", "cex_x8", 1),
                ("cex_x9", "cex_x10", 1),
                ("cex_x10", "cex_x11", 1),
            ],
        )
    }

    #[test]
    fn four_components_with_isolated_vertex() {
        let s = twelve_vertex_example();
        let report = exchangeable_components(&s);
        assert_eq!(report.components.len(), 4);
        assert_eq!(
            report.isolated_frozen,
            vec![registry::lookup("cex_x12").unwrap()]
        );
        let names = |c: &Seed| {
            let mut v: Vec<String> = c.vars.iter().map(|v| registry::name(v.id)).collect();
            v.sort();
            v
        };
        let mut comps: Vec<Vec<String>> = report.components.iter().map(names).collect();
        comps.sort();
        assert!(comps.contains(&vec![
            "cex_x1".to_string(),
            "cex_x2".to_string(),
            "cex_x3".to_string(),
            "cex_x4".to_string()
        ]));
        assert!(comps.contains(&vec![
            "cex_x2".to_string(),
            "cex_x4".to_string(),
            "cex_x5".to_string(),
            "cex_x6".to_string()
        ]));
        assert!(comps.contains(&vec![
            "cex_x2".to_string(),
            "cex_x7".to_string(),
            "cex_x8".to_string()
        ]));
        assert!(comps.contains(&vec![
            "cex_x10".to_string(),
            "cex_x11".to_string(),
            "cex_x9".to_string()
        ]));
    }

    #[test]
    fn empty_exchangeable_set() {
        let s = Seed::from_quiver(&[("cef_a", true), ("cef_b", true)], &[]);
        let report = exchangeable_components(&s);
        assert!(report.components.is_empty());
        assert_eq!(report.isolated_frozen.len(), 2);
    }
}
