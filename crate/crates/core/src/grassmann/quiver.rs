//! Combinatorial Pluecker quivers: labelled ice quivers whose vertices all
//! carry partition labels, mutated by square moves.
//!
//! A square move is a mutation at an exchangeable vertex of valency four
//! (two in, two out, all simple arrows) whose neighbour labels stand in
//! three-term Pluecker position with the vertex; it replaces the label by
//! the unique complementary label. Expressions are not tracked here; they
//! are replayed on full seeds when algebra is required.

use std::collections::BTreeMap;

use crate::registry::VarId;
use crate::seed::{ClusterVar, ExchangeMatrix, InitialFrame, Seed};

use super::partition::Partition;
use super::rect::{label_var, WindowSeed};
use super::GrassError;

/// A labelled quiver with positions as identity. Matrix rows are kept for
/// exchangeable positions only, mirroring the seed convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerQuiver {
    pub labels: Vec<Partition>,
    pub frozen: Vec<bool>,
    rows: BTreeMap<usize, BTreeMap<usize, i64>>,
}

impl PlueckerQuiver {
    /// An arrowless labelled quiver; arrows are added with
    /// [`PlueckerQuiver::add_arrow`].
    pub fn bare(labels: Vec<Partition>, frozen: Vec<bool>) -> PlueckerQuiver {
        assert_eq!(labels.len(), frozen.len());
        PlueckerQuiver {
            labels,
            frozen,
            rows: BTreeMap::new(),
        }
    }

    /// Records `mult` arrows from `src` to `dst` in the rows of whichever
    /// endpoints are exchangeable; frozen-frozen arrows are dropped.
    pub fn add_arrow(&mut self, src: usize, dst: usize, mult: i64) {
        if !self.frozen[src] {
            let cur = self.entry(src, dst);
            self.set(src, dst, cur + mult);
        }
        if !self.frozen[dst] {
            let cur = self.entry(dst, src);
            self.set(dst, src, cur - mult);
        }
    }

    /// Projects a fully labelled seed down to its combinatorial shadow.
    pub fn from_seed(seed: &Seed) -> Option<PlueckerQuiver> {
        let mut labels = Vec::new();
        let mut frozen = Vec::new();
        let index: BTreeMap<VarId, usize> = seed
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id, i))
            .collect();
        for v in &seed.vars {
            labels.push(v.label.clone()?);
            frozen.push(v.frozen);
        }
        let mut rows: BTreeMap<usize, BTreeMap<usize, i64>> = BTreeMap::new();
        for (r, c, w) in seed.b.entries() {
            rows.entry(index[&r]).or_default().insert(index[&c], w);
        }
        Some(PlueckerQuiver {
            labels,
            frozen,
            rows,
        })
    }

    pub fn from_window(w: &WindowSeed) -> PlueckerQuiver {
        Self::from_seed(&w.seed).expect("window seeds are fully labelled")
    }

    /// Rebuilds an initial seed over the Pluecker variables named by the
    /// current labels. Expressions are the variables themselves.
    pub fn to_seed(&self) -> Seed {
        let ids: Vec<VarId> = self.labels.iter().map(label_var).collect();
        let ex: std::collections::BTreeSet<VarId> = ids
            .iter()
            .zip(&self.frozen)
            .filter(|(_, &f)| !f)
            .map(|(&id, _)| id)
            .collect();
        let mut b = ExchangeMatrix::new();
        for (&r, cols) in &self.rows {
            for (&c, &w) in cols {
                b.set(ids[r], ids[c], w);
            }
        }
        let vars: Vec<ClusterVar> = ids
            .iter()
            .zip(&self.labels)
            .zip(&self.frozen)
            .map(|((&id, label), &frozen)| ClusterVar {
                id,
                label: Some(label.clone()),
                expr: crate::laurent::LaurentPoly::var(id),
                frozen,
            })
            .collect();
        Seed {
            vars,
            ex: ex.clone(),
            b,
            frame: std::sync::Arc::new(InitialFrame {
                vars: ids,
                ex,
            }),
            history: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.rows
            .get(&r)
            .and_then(|row| row.get(&c))
            .copied()
            .unwrap_or(0)
    }

    fn set(&mut self, r: usize, c: usize, v: i64) {
        if v == 0 {
            if let Some(row) = self.rows.get_mut(&r) {
                row.remove(&c);
                if row.is_empty() {
                    self.rows.remove(&r);
                }
            }
        } else {
            self.rows.entry(r).or_default().insert(c, v);
        }
    }

    pub fn row(&self, r: usize) -> Vec<(usize, i64)> {
        self.rows
            .get(&r)
            .map(|row| row.iter().map(|(&c, &v)| (c, v)).collect())
            .unwrap_or_default()
    }

    pub fn position_of(&self, label: &Partition) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Valency of an exchangeable vertex (sum of |entries| of its row).
    pub fn valency(&self, pos: usize) -> i64 {
        self.row(pos).iter().map(|&(_, v)| v.abs()).sum()
    }

    /// The label produced by a square move at `pos`, without mutating.
    ///
    /// Requires valency four with simple arrows and the three-term
    /// Pluecker position on the neighbour labels.
    pub fn square_move_label(&self, pos: usize) -> Result<Partition, GrassError> {
        if self.frozen[pos] {
            return Err(GrassError::NotQuadrilateral(format!(
                "vertex d{} is frozen",
                self.labels[pos]
            )));
        }
        let row = self.row(pos);
        let ins: Vec<usize> = row
            .iter()
            .filter(|&&(_, v)| v == -1)
            .map(|&(c, _)| c)
            .collect();
        let outs: Vec<usize> = row
            .iter()
            .filter(|&&(_, v)| v == 1)
            .map(|&(c, _)| c)
            .collect();
        if ins.len() != 2 || outs.len() != 2 || row.len() != 4 {
            return Err(GrassError::NotQuadrilateral(format!(
                "vertex d{} has arrow pattern {:?}",
                self.labels[pos],
                row.iter().map(|&(_, v)| v).collect::<Vec<_>>()
            )));
        }
        let dev = |label: &Partition| label.maya_deviation();
        let sum = |pair: &[usize]| {
            let (a1, r1) = dev(&self.labels[pair[0]]);
            let (a2, r2) = dev(&self.labels[pair[1]]);
            let mut arms: Vec<i64> = a1.into_iter().chain(a2).collect();
            let mut removed: Vec<i64> = r1.into_iter().chain(r2).collect();
            arms.sort_unstable();
            removed.sort_unstable();
            (arms, removed)
        };
        let in_sum = sum(&ins);
        let out_sum = sum(&outs);
        if in_sum != out_sum {
            return Err(GrassError::NotQuadrilateral(format!(
                "neighbour labels of d{} are not in three-term position",
                self.labels[pos]
            )));
        }
        // New label: multiset difference of the shared sum by the centre.
        let (c_arms, c_removed) = dev(&self.labels[pos]);
        let subtract = |mut sum: Vec<i64>, part: &std::collections::BTreeSet<i64>| {
            for x in part {
                match sum.iter().position(|y| y == x) {
                    Some(i) => {
                        sum.remove(i);
                    }
                    None => return None,
                }
            }
            Some(sum)
        };
        let arms = subtract(in_sum.0, &c_arms);
        let removed = subtract(in_sum.1, &c_removed);
        let (Some(arms), Some(removed)) = (arms, removed) else {
            return Err(GrassError::NotQuadrilateral(format!(
                "centre label d{} does not divide the neighbour products",
                self.labels[pos]
            )));
        };
        let distinct =
            |v: &[i64]| v.windows(2).all(|w| w[0] != w[1]);
        if !distinct(&arms) || !distinct(&removed) {
            return Err(GrassError::NotQuadrilateral(
                "complementary label has repeated Maya entries".into(),
            ));
        }
        let arms_u: Vec<u32> = arms.iter().rev().map(|&x| x as u32).collect();
        let legs_u: Vec<u32> = removed.iter().map(|&x| (-x - 1) as u32).collect();
        let frob = super::partition::FrobeniusForm::new(arms_u, legs_u)
            .map_err(|e| GrassError::NotQuadrilateral(e.to_string()))?;
        Ok(frob.to_partition())
    }

    /// Applies the square move: Fomin-Zelevinsky matrix mutation at `pos`
    /// plus the label replacement. Returns the new label.
    pub fn square_move(&mut self, pos: usize) -> Result<Partition, GrassError> {
        let new_label = self.square_move_label(pos)?;
        self.mutate_matrix(pos);
        self.labels[pos] = new_label.clone();
        Ok(new_label)
    }

    /// Matrix-only mutation at an exchangeable position.
    pub fn mutate_matrix(&mut self, pos: usize) {
        assert!(!self.frozen[pos], "mutation at frozen vertex");
        let x_row = self.row(pos);
        self.rows.remove(&pos);
        let row_keys: Vec<usize> = self.rows.keys().copied().collect();
        for u in row_keys {
            let bux = self.entry(u, pos);
            if bux != 0 {
                self.set(u, pos, -bux);
            }
            for &(v, bxv) in &x_row {
                if v == u {
                    continue;
                }
                let delta = (bux.abs() * bxv + bux * bxv.abs()) / 2;
                if delta != 0 {
                    let cur = self.entry(u, v);
                    self.set(u, v, cur + delta);
                }
            }
        }
        for &(v, bxv) in &x_row {
            self.set(pos, v, -bxv);
        }
    }

    /// Canonical key of the cluster: sorted labels.
    pub fn cluster_key(&self) -> Vec<Partition> {
        let mut key = self.labels.clone();
        key.sort();
        key
    }

    /// Restriction to the vertices carrying the given labels, with the
    /// supplied frozen set. Entries in rows of vertices frozen by the
    /// restriction are dropped, as are columns outside the label set.
    pub fn restrict(&self, labels: &[Partition], frozen: &[Partition]) -> Option<PlueckerQuiver> {
        let mut positions = Vec::new();
        for l in labels {
            positions.push(self.position_of(l)?);
        }
        let back: BTreeMap<usize, usize> = positions
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let new_frozen: Vec<bool> = labels.iter().map(|l| frozen.contains(l)).collect();
        let mut rows: BTreeMap<usize, BTreeMap<usize, i64>> = BTreeMap::new();
        for (new_r, &old_r) in positions.iter().enumerate() {
            if new_frozen[new_r] {
                continue;
            }
            for (old_c, w) in self.row(old_r) {
                if let Some(&new_c) = back.get(&old_c) {
                    rows.entry(new_r).or_default().insert(new_c, w);
                }
            }
        }
        Some(PlueckerQuiver {
            labels: labels.to_vec(),
            frozen: new_frozen,
            rows,
        })
    }
}
