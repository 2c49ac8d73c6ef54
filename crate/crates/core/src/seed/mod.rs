//! Seeds, mutation, admissible sequences, exchangeably connected
//! components, similarity and melting cluster morphisms.

pub mod components;
pub mod dot;
pub mod json;
pub mod morphism;
pub mod mutate;
pub mod similar;

pub use components::{exchangeable_components, ComponentsReport};
pub use dot::quiver_to_dot;
pub use morphism::{check_melting_morphism, MeltingMorphismSpec, MorphImage, MorphismReport};
pub use similar::{seeds_similar, Similarity};

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use thiserror::Error;

use crate::grassmann::Partition;
use crate::laurent::{LaurentError, LaurentPoly};
use crate::registry::{self, VarId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeedError {
    #[error("variable {var} is not exchangeable{}", step.map(|i| format!(" (sequence step {})", i)).unwrap_or_default())]
    NotExchangeable { var: String, step: Option<usize> },
    #[error("variable {0} does not belong to the seed")]
    UnknownVariable(String),
    #[error("exchange matrix is not skew-symmetric on the exchangeable part")]
    NotSkewSymmetric,
    #[error("similarity search bound exceeded ({0} variables, limit {1})")]
    SearchTooLarge(usize, usize),
    #[error("arithmetic error during mutation: {0}")]
    Laurent(#[from] LaurentError),
}

/// One cluster variable: its registry id, an optional partition label, its
/// value as a Laurent polynomial in the initial cluster, and frozen status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterVar {
    pub id: VarId,
    pub label: Option<Partition>,
    pub expr: LaurentPoly,
    pub frozen: bool,
}

/// Sparse exchange matrix with rows indexed by exchangeable variables only.
/// Entries between two frozen variables are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExchangeMatrix {
    rows: BTreeMap<VarId, BTreeMap<VarId, i64>>,
}

impl ExchangeMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn entry(&self, row: VarId, col: VarId) -> i64 {
        self.rows
            .get(&row)
            .and_then(|r| r.get(&col))
            .copied()
            .unwrap_or(0)
    }

    pub fn set(&mut self, row: VarId, col: VarId, value: i64) {
        if value == 0 {
            if let Some(r) = self.rows.get_mut(&row) {
                r.remove(&col);
                if r.is_empty() {
                    self.rows.remove(&row);
                }
            }
        } else {
            self.rows.entry(row).or_default().insert(col, value);
        }
    }

    pub fn add(&mut self, row: VarId, col: VarId, delta: i64) {
        let v = self.entry(row, col) + delta;
        self.set(row, col, v);
    }

    pub fn row(&self, row: VarId) -> impl Iterator<Item = (VarId, i64)> + '_ {
        self.rows
            .get(&row)
            .into_iter()
            .flat_map(|r| r.iter().map(|(&c, &v)| (c, v)))
    }

    pub fn row_keys(&self) -> impl Iterator<Item = VarId> + '_ {
        self.rows.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (VarId, VarId, i64)> + '_ {
        self.rows
            .iter()
            .flat_map(|(&r, cols)| cols.iter().map(move |(&c, &v)| (r, c, v)))
    }

    pub fn remove_row(&mut self, row: VarId) -> BTreeMap<VarId, i64> {
        self.rows.remove(&row).unwrap_or_default()
    }
}

/// The fixed initial cluster a seed's expressions are written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialFrame {
    pub vars: Vec<VarId>,
    pub ex: BTreeSet<VarId>,
}

/// A seed: ordered cluster, exchangeable subset, exchange matrix, plus the
/// initial frame its expressions refer to and the mutation history that
/// produced it. Immutable; mutation returns a new seed.
#[derive(Clone, Debug)]
pub struct Seed {
    pub vars: Vec<ClusterVar>,
    pub ex: BTreeSet<VarId>,
    pub b: ExchangeMatrix,
    pub frame: Arc<InitialFrame>,
    pub history: Vec<String>,
}

impl Seed {
    /// Builds an initial seed from named variables and quiver arrows
    /// (`src -> dst` with multiplicity). Arrows between two frozen
    /// variables are dropped.
    pub fn from_quiver(
        vars: &[(&str, bool)],
        arrows: &[(&str, &str, i64)],
    ) -> Seed {
        let ids: Vec<VarId> = vars.iter().map(|(n, _)| registry::var(n)).collect();
        let frozen: BTreeMap<VarId, bool> = ids
            .iter()
            .zip(vars.iter())
            .map(|(&id, &(_, f))| (id, f))
            .collect();
        let ex: BTreeSet<VarId> = ids
            .iter()
            .copied()
            .filter(|id| !frozen[id])
            .collect();
        let mut b = ExchangeMatrix::new();
        for &(s, d, mult) in arrows {
            let s = registry::lookup(s).expect("arrow endpoint not among vars");
            let d = registry::lookup(d).expect("arrow endpoint not among vars");
            if ex.contains(&s) {
                b.add(s, d, mult);
            }
            if ex.contains(&d) {
                b.add(d, s, -mult);
            }
        }
        let cluster_vars: Vec<ClusterVar> = ids
            .iter()
            .map(|&id| ClusterVar {
                id,
                label: None,
                expr: LaurentPoly::var(id),
                frozen: frozen[&id],
            })
            .collect();
        Seed {
            vars: cluster_vars,
            ex: ex.clone(),
            b,
            frame: Arc::new(InitialFrame {
                vars: ids,
                ex,
            }),
            history: Vec::new(),
        }
    }

    pub fn var_ids(&self) -> Vec<VarId> {
        self.vars.iter().map(|v| v.id).collect()
    }

    pub fn position_of(&self, id: VarId) -> Option<usize> {
        self.vars.iter().position(|v| v.id == id)
    }

    pub fn var(&self, id: VarId) -> Option<&ClusterVar> {
        self.vars.iter().find(|v| v.id == id)
    }

    pub fn var_by_name(&self, name: &str) -> Option<&ClusterVar> {
        registry::lookup(name).and_then(|id| self.var(id))
    }

    pub fn var_by_label(&self, label: &Partition) -> Option<&ClusterVar> {
        self.vars.iter().find(|v| v.label.as_ref() == Some(label))
    }

    pub fn is_exchangeable(&self, id: VarId) -> bool {
        self.ex.contains(&id)
    }

    /// Attaches a partition label to the variable at `pos`.
    pub fn with_label(mut self, pos: usize, label: Partition) -> Seed {
        self.vars[pos].label = Some(label);
        self
    }
}

/// A sequence of mutation steps, each a variable id that must be
/// exchangeable in the seed obtained by applying all prior steps.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdmissibleSeq {
    pub steps: Vec<VarId>,
}

impl AdmissibleSeq {
    pub fn new(steps: Vec<VarId>) -> Self {
        AdmissibleSeq { steps }
    }

    pub fn empty() -> Self {
        AdmissibleSeq { steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// A single validation finding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// b_uv != -b_vu for exchangeable u, v.
    NotSkewSymmetric(String, String),
    /// A stored entry connects two frozen variables.
    FrozenFrozenEntry(String, String),
    /// A matrix row is indexed by a non-exchangeable or unknown variable.
    RowNotExchangeable(String),
    /// An exchangeable id or matrix column is not among the cluster
    /// variables.
    DanglingId(String),
    /// Duplicate variable id in the cluster.
    DuplicateVariable(String),
    /// A variable's frozen flag disagrees with the exchangeable set.
    FrozenFlagMismatch(String),
    /// A mutated variable's expression has a denominator outside the
    /// exchangeable initial variables.
    NonLaurentDenominator(String),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotSkewSymmetric(u, v) => {
                write!(f, "ex-part not skew-symmetric at ({}, {})", u, v)
            }
            Violation::FrozenFrozenEntry(u, v) => {
                write!(f, "entry between frozen variables {} and {}", u, v)
            }
            Violation::RowNotExchangeable(u) => {
                write!(f, "matrix row {} is not an exchangeable variable", u)
            }
            Violation::DanglingId(u) => write!(f, "dangling id {}", u),
            Violation::DuplicateVariable(u) => write!(f, "duplicate variable {}", u),
            Violation::FrozenFlagMismatch(u) => {
                write!(f, "frozen flag of {} disagrees with exchangeable set", u)
            }
            Violation::NonLaurentDenominator(u) => write!(
                f,
                "expression of {} has a denominator outside the exchangeable initial cluster",
                u
            ),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Structural validation: dense checks of the seed invariants. The report
/// is empty iff the seed is valid.
pub fn seed_validate(s: &Seed) -> ValidationReport {
    let mut violations = Vec::new();
    let ids: BTreeSet<VarId> = s.vars.iter().map(|v| v.id).collect();
    if ids.len() != s.vars.len() {
        let mut seen = BTreeSet::new();
        for v in &s.vars {
            if !seen.insert(v.id) {
                violations.push(Violation::DuplicateVariable(registry::name(v.id)));
            }
        }
    }
    for &x in &s.ex {
        if !ids.contains(&x) {
            violations.push(Violation::DanglingId(registry::name(x)));
        }
    }
    for v in &s.vars {
        if v.frozen == s.ex.contains(&v.id) {
            violations.push(Violation::FrozenFlagMismatch(registry::name(v.id)));
        }
    }
    for row in s.b.row_keys() {
        if !s.ex.contains(&row) {
            violations.push(Violation::RowNotExchangeable(registry::name(row)));
        }
    }
    for (r, c, v) in s.b.entries() {
        if !ids.contains(&c) {
            violations.push(Violation::DanglingId(registry::name(c)));
        }
        if v != 0 && !s.ex.contains(&r) && !s.ex.contains(&c) {
            violations.push(Violation::FrozenFrozenEntry(
                registry::name(r),
                registry::name(c),
            ));
        }
        if s.ex.contains(&r) && s.ex.contains(&c) && s.b.entry(c, r) != -v {
            violations.push(Violation::NotSkewSymmetric(
                registry::name(r),
                registry::name(c),
            ));
        }
    }
    // Laurent phenomenon on expressions: denominators must be monomials in
    // exchangeable initial variables.
    for v in &s.vars {
        let den = v.expr.denominator_monomial();
        if den.iter().any(|(var, _)| !s.frame.ex.contains(&var)) {
            violations.push(Violation::NonLaurentDenominator(registry::name(v.id)));
        }
    }
    ValidationReport { violations }
}

/// Skew-symmetrisability of the ex-part: existence of positive integers
/// `d_v` with `d_u b_uv = -b_vu d_v`. The engine only mutates
/// skew-symmetric seeds, but the more general condition can be probed.
pub fn is_skew_symmetrizable(s: &Seed) -> bool {
    use num_rational::Ratio;
    // Assign d's along a spanning forest of the ex-graph and check cycles.
    let exvars: Vec<VarId> = s.ex.iter().copied().collect();
    let mut d: BTreeMap<VarId, Ratio<i64>> = BTreeMap::new();
    for &start in &exvars {
        if d.contains_key(&start) {
            continue;
        }
        d.insert(start, Ratio::from_integer(1));
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let du = d[&u];
            for (v, buv) in s.b.row(u).collect::<Vec<_>>() {
                if !s.ex.contains(&v) {
                    continue;
                }
                let bvu = s.b.entry(v, u);
                if (buv == 0) != (bvu == 0) {
                    return false;
                }
                if buv == 0 {
                    continue;
                }
                if buv.signum() == bvu.signum() {
                    return false;
                }
                let dv = du * Ratio::new(buv.abs(), bvu.abs());
                match d.get(&v) {
                    Some(&seen) => {
                        if seen != dv {
                            return false;
                        }
                    }
                    None => {
                        d.insert(v, dv);
                        stack.push(v);
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiver_construction_and_validation() {
        let s = Seed::from_quiver(
            &[("sv_x1", false), ("sv_x2", false), ("sv_f", true)],
            &[("sv_x1", "sv_x2", 1), ("sv_x2", "sv_f", 2)],
        );
        assert!(seed_validate(&s).is_valid());
        let x1 = registry::var("sv_x1");
        let x2 = registry::var("sv_x2");
        let f = registry::var("sv_f");
        assert_eq!(s.b.entry(x1, x2), 1);
        assert_eq!(s.b.entry(x2, x1), -1);
        assert_eq!(s.b.entry(x2, f), 2);
        assert_eq!(s.b.entry(x1, f), 0);
    }

    #[test]
    fn non_skew_symmetric_detected() {
        let mut s = Seed::from_quiver(&[("nss_u", false), ("nss_v", false)], &[]);
        let u = registry::var("nss_u");
        let v = registry::var("nss_v");
        s.b.set(u, v, 1);
        s.b.set(v, u, 1);
        let report = seed_validate(&s);
        assert!(report
            .violations
            .iter()
            .any(|x| matches!(x, Violation::NotSkewSymmetric(_, _))));
    }

    #[test]
    fn frozen_frozen_entry_detected() {
        let mut s = Seed::from_quiver(&[("ff_a", true), ("ff_b", true)], &[]);
        let a = registry::var("ff_a");
        let b = registry::var("ff_b");
        s.b.set(a, b, 1);
        let report = seed_validate(&s);
        assert!(report
            .violations
            .iter()
            .any(|x| matches!(x, Violation::FrozenFrozenEntry(_, _))));
        assert!(report
            .violations
            .iter()
            .any(|x| matches!(x, Violation::RowNotExchangeable(_))));
    }

    #[test]
    fn skew_symmetrizable_but_not_symmetric() {
        // B = [[0, 2], [-1, 0]] is skew-symmetrisable with d = (1, 2).
        let mut s = Seed::from_quiver(&[("ssz_u", false), ("ssz_v", false)], &[]);
        let u = registry::var("ssz_u");
        let v = registry::var("ssz_v");
        s.b.set(u, v, 2);
        s.b.set(v, u, -1);
        assert!(!seed_validate(&s).is_valid());
        assert!(is_skew_symmetrizable(&s));
        s.b.set(v, u, 1);
        assert!(!is_skew_symmetrizable(&s));
    }
}
