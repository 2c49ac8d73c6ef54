//! Seed mutation and admissible sequences.
//!
//! Mutation at an exchangeable variable `x` replaces it by `x'` with
//! `x' * x = prod_{b_xu > 0} u^{b_xu} + prod_{b_xv < 0} v^{-b_xv}`, the
//! expressions being composed in the initial cluster via exact division,
//! and transforms the matrix by the Fomin-Zelevinsky rule. Seeds are
//! immutable; mutation returns a new seed sharing unchanged expressions.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::laurent::LaurentPoly;
use crate::registry::{self, VarId};

use super::{AdmissibleSeq, ClusterVar, Seed, SeedError};

impl Seed {
    /// The two-term exchange numerator at `x`: product over positive-entry
    /// neighbours plus product over negative-entry neighbours, composed in
    /// initial-cluster expressions.
    pub fn exchange_numerator(&self, x: VarId) -> Result<LaurentPoly, SeedError> {
        if !self.ex.contains(&x) {
            return Err(SeedError::NotExchangeable {
                var: registry::name(x),
                step: None,
            });
        }
        let mut pos = LaurentPoly::one();
        let mut neg = LaurentPoly::one();
        for (v, bxv) in self.b.row(x) {
            let expr = &self
                .var(v)
                .expect("matrix column refers to a cluster variable")
                .expr;
            if bxv > 0 {
                pos = &pos * &expr.pow(bxv as u64);
            } else {
                neg = &neg * &expr.pow((-bxv) as u64);
            }
        }
        Ok(&pos + &neg)
    }

    /// The exchange relation at `x` rendered as text, e.g.
    /// `mu[..]*d[1] = d[2]*d[1,1] + d[]*d[2,2]`, in terms of current
    /// cluster variable names.
    pub fn exchange_relation_text(&self, x: VarId) -> Result<String, SeedError> {
        if !self.ex.contains(&x) {
            return Err(SeedError::NotExchangeable {
                var: registry::name(x),
                step: None,
            });
        }
        let side = |positive: bool| {
            let factors: Vec<String> = self
                .b
                .row(x)
                .filter(|&(_, b)| (b > 0) == positive)
                .map(|(v, b)| {
                    let name = registry::name(v);
                    if b.abs() == 1 {
                        name
                    } else {
                        format!("{}^{}", name, b.abs())
                    }
                })
                .collect();
            if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join("*")
            }
        };
        let new_name = self.mutated_var_name(x);
        Ok(format!(
            "{}*{} = {} + {}",
            new_name,
            registry::name(x),
            side(true),
            side(false)
        ))
    }

    /// Deterministic name for the variable produced by mutating at `x`:
    /// provenance-tagged with a short hash over the initial frame and the
    /// mutation history.
    pub fn mutated_var_name(&self, x: VarId) -> String {
        let mut h = DefaultHasher::new();
        for v in &self.frame.vars {
            registry::name(*v).hash(&mut h);
        }
        for step in &self.history {
            step.hash(&mut h);
        }
        registry::name(x).hash(&mut h);
        format!("mu[{};{:016x}]", registry::name(x), h.finish())
    }

    /// The mutated seed `mu_x(self)`.
    pub fn mutate(&self, x: VarId) -> Result<Seed, SeedError> {
        if !self.ex.contains(&x) {
            return Err(SeedError::NotExchangeable {
                var: registry::name(x),
                step: None,
            });
        }
        let numerator = self.exchange_numerator(x)?;
        let x_expr = &self.var(x).expect("x is in the cluster").expr;
        let new_expr = numerator.div_exact(x_expr)?;
        let new_id = registry::var(&self.mutated_var_name(x));

        let pos = self.position_of(x).expect("x is in the cluster");
        let mut vars = self.vars.clone();
        vars[pos] = ClusterVar {
            id: new_id,
            label: None,
            expr: new_expr,
            frozen: false,
        };

        let mut ex = self.ex.clone();
        ex.remove(&x);
        ex.insert(new_id);

        // Fomin-Zelevinsky matrix mutation. The new variable takes over the
        // row and column index of x with negated entries; other entries
        // pick up the two-path correction through x.
        let mut b = self.b.clone();
        let x_row: Vec<(VarId, i64)> = b.remove_row(x).into_iter().collect();
        let rows: Vec<VarId> = b.row_keys().collect();
        for u in rows {
            let bux = b.entry(u, x);
            if bux != 0 {
                b.set(u, x, 0);
                b.set(u, new_id, -bux);
            }
            for &(v, bxv) in &x_row {
                if v == u {
                    continue;
                }
                let delta = (bux.abs() * bxv + bux * bxv.abs()) / 2;
                if delta != 0 {
                    b.add(u, v, delta);
                }
            }
        }
        for &(v, bxv) in &x_row {
            b.set(new_id, v, -bxv);
        }

        let mut history = self.history.clone();
        history.push(registry::name(x));

        Ok(Seed {
            vars,
            ex,
            b,
            frame: self.frame.clone(),
            history,
        })
    }

    /// Applies a sequence of mutations; the empty sequence is the identity.
    pub fn mutate_seq(&self, seq: &AdmissibleSeq) -> Result<Seed, SeedError> {
        let mut cur = self.clone();
        for (i, &x) in seq.steps.iter().enumerate() {
            cur = cur.mutate(x).map_err(|e| match e {
                SeedError::NotExchangeable { var, .. } => SeedError::NotExchangeable {
                    var,
                    step: Some(i),
                },
                other => other,
            })?;
        }
        Ok(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::{exchangeable_components, seed_validate};

    /// Two-vertex seed x1 -> x2, both exchangeable.
    fn two_vertex() -> Seed {
        Seed::from_quiver(
            &[("mt_x1", false), ("mt_x2", false)],
            &[("mt_x1", "mt_x2", 1)],
        )
    }

    #[test]
    fn exchange_relation_single_neighbour() {
        // mu_{x1}(x1) = (x2 + 1)/x1
        let s = two_vertex();
        let x1 = registry::lookup("mt_x1").unwrap();
        let x2 = registry::lookup("mt_x2").unwrap();
        let m = s.mutate(x1).unwrap();
        let new_var = m.vars[0].clone();
        let expect = (&LaurentPoly::var(x2) + &LaurentPoly::one())
            .div_exact(&LaurentPoly::var(x1))
            .unwrap();
        assert_eq!(new_var.expr, expect);
        assert!(seed_validate(&m).is_valid());
        // Matrix flips sign.
        assert_eq!(m.b.entry(new_var.id, x2), -1);
    }

    #[test]
    fn mutation_requires_exchangeable() {
        let s = Seed::from_quiver(&[("mt_fa", true), ("mt_fb", false)], &[("mt_fb", "mt_fa", 1)]);
        let fa = registry::lookup("mt_fa").unwrap();
        assert!(matches!(
            s.mutate(fa),
            Err(SeedError::NotExchangeable { .. })
        ));
    }

    #[test]
    fn empty_sequence_is_identity() {
        let s = two_vertex();
        let m = s.mutate_seq(&AdmissibleSeq::empty()).unwrap();
        assert_eq!(m.vars, s.vars);
        assert_eq!(m.b, s.b);
    }

    #[test]
    fn involution_on_random_small_seeds() {
        // mutate(mutate(s, x), x') returns a seed whose expressions and
        // matrix equal s's, after identifying x'' with x.
        let mut rng = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            rng ^= rng << 13;
            rng ^= rng >> 7;
            rng ^= rng << 17;
            rng
        };
        for case in 0..50 {
            let n = 2 + (next() % 4) as usize; // 2..=5 vertices
            let names: Vec<String> = (0..n).map(|i| format!("inv{}_{}", case, i)).collect();
            let vars: Vec<(&str, bool)> = names
                .iter()
                .enumerate()
                .map(|(i, s)| (s.as_str(), i != 0 && next() % 3 == 0))
                .collect();
            let mut arrows: Vec<(&str, &str, i64)> = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    match next() % 4 {
                        0 => arrows.push((vars[i].0, vars[j].0, 1)),
                        1 => arrows.push((vars[j].0, vars[i].0, 1)),
                        2 => arrows.push((vars[i].0, vars[j].0, 2)),
                        _ => {}
                    }
                }
            }
            let s = Seed::from_quiver(&vars, &arrows);
            let x = *s.ex.iter().next().unwrap();
            let m1 = s.mutate(x).unwrap();
            let x2 = m1.vars[s.position_of(x).unwrap()].id;
            let m2 = m1.mutate(x2).unwrap();
            // Identify the twice-mutated variable with x again.
            let pos = s.position_of(x).unwrap();
            assert_eq!(m2.vars[pos].expr, s.vars[pos].expr, "case {}", case);
            for (i, v) in s.vars.iter().enumerate() {
                if i != pos {
                    assert_eq!(m2.vars[i], *v);
                }
            }
            let rename = |id: VarId| if id == m2.vars[pos].id { x } else { id };
            for u in s.vars.iter().map(|v| v.id) {
                for w in s.vars.iter().map(|v| v.id) {
                    let orig = s.b.entry(u, w);
                    let round = m2.b.entry(
                        if u == x { m2.vars[pos].id } else { u },
                        if w == x { m2.vars[pos].id } else { w },
                    );
                    assert_eq!(orig, round, "case {} entry ({:?},{:?})", case, rename(u), w);
                }
            }
        }
    }

    #[test]
    fn matrix_mutation_preserves_skew_symmetry_and_components() {
        let s = Seed::from_quiver(
            &[
                ("ms_a", false),
                ("ms_b", false),
                ("ms_c", true),
                ("ms_d", false),
                ("ms_e", true),
            ],
            &[
                ("ms_a", "ms_b", 1),
                ("ms_b", "ms_c", 1),
                ("ms_d", "ms_e", 2),
            ],
        );
        let a = registry::lookup("ms_a").unwrap();
        let m = s.mutate(a).unwrap();
        assert!(seed_validate(&m).is_valid());
        // The component {d, e} is untouched entry-wise.
        let d = registry::lookup("ms_d").unwrap();
        let e = registry::lookup("ms_e").unwrap();
        assert_eq!(m.b.entry(d, e), 2);
        let before = exchangeable_components(&s);
        let after = exchangeable_components(&m);
        assert_eq!(before.components.len(), after.components.len());
    }
}
