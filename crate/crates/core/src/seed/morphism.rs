//! Melting cluster morphisms between rooted cluster algebras, specified on
//! the initial cluster, and their verification.
//!
//! A spec maps every source initial variable to a target initial variable
//! or an integer. The checker tests the structural axioms directly and the
//! mutation-commutation axiom exhaustively over all biadmissible sequences
//! up to a configured depth, comparing ring images of mutated variables.

use std::collections::BTreeMap;

use crate::laurent::LaurentPoly;
use crate::registry::{self, VarId};

use super::{Seed, SeedError};

/// Image of one initial cluster variable.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MorphImage {
    Var(VarId),
    Int(i64),
}

/// A melting cluster morphism given by its values on the source initial
/// cluster.
#[derive(Clone, Debug, Default)]
pub struct MeltingMorphismSpec {
    pub image: BTreeMap<VarId, MorphImage>,
}

impl MeltingMorphismSpec {
    pub fn new(image: BTreeMap<VarId, MorphImage>) -> Self {
        MeltingMorphismSpec { image }
    }

    /// The identity morphism on a seed's initial cluster.
    pub fn identity(s: &Seed) -> Self {
        MeltingMorphismSpec {
            image: s
                .frame
                .vars
                .iter()
                .map(|&v| (v, MorphImage::Var(v)))
                .collect(),
        }
    }

    pub fn get(&self, v: VarId) -> Option<MorphImage> {
        self.image.get(&v).copied()
    }

    /// The substitution map realising the algebraic extension of the
    /// morphism on Laurent expressions over the source initial cluster.
    pub fn substitution(&self) -> BTreeMap<VarId, LaurentPoly> {
        self.image
            .iter()
            .map(|(&v, &img)| {
                let poly = match img {
                    MorphImage::Var(w) => LaurentPoly::var(w),
                    MorphImage::Int(z) => LaurentPoly::int(z),
                };
                (v, poly)
            })
            .collect()
    }

    /// Applies the morphism to an expression over the source initial
    /// cluster.
    pub fn apply(&self, expr: &LaurentPoly) -> Result<LaurentPoly, crate::laurent::LaurentError> {
        expr.substitute(&self.substitution())
    }
}

/// The first CM2 failure found, if any.
#[derive(Clone, Debug)]
pub struct Cm2Failure {
    /// Names of the source variables mutated, in order.
    pub sequence: Vec<String>,
    /// Name of the initial source variable whose images disagree.
    pub witness: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking a melting morphism spec.
#[derive(Clone, Debug, Default)]
pub struct MorphismReport {
    /// CM1 violations: unmapped variables or images outside the target
    /// cluster.
    pub cm1: Vec<String>,
    /// MCM violations: exchangeable variables sent to frozen targets.
    pub mcm: Vec<String>,
    /// iMCM violations: exchangeable variables sent to zero.
    pub imcm: Vec<String>,
    /// Specialisation violations: the product of integer-specialised
    /// neighbours on one side of an exchange relation is not 1.
    pub specialisation: Vec<String>,
    /// First failing biadmissible sequence, if commutation fails.
    pub cm2_failure: Option<Cm2Failure>,
    /// Number of biadmissible sequences exercised for CM2.
    pub sequences_checked: usize,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.cm1.is_empty()
            && self.mcm.is_empty()
            && self.imcm.is_empty()
            && self.specialisation.is_empty()
            && self.cm2_failure.is_none()
    }

    pub fn failed_axioms(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.cm1.is_empty() {
            out.push("CM1");
        }
        if !self.mcm.is_empty() {
            out.push("MCM");
        }
        if !self.imcm.is_empty() {
            out.push("iMCM");
        }
        if !self.specialisation.is_empty() {
            out.push("specialisation");
        }
        if self.cm2_failure.is_some() {
            out.push("CM2");
        }
        out
    }
}

/// Checks CM1, MCM, iMCM and the neighbour-specialisation condition
/// directly, and CM2 exhaustively over all biadmissible sequences of
/// length at most `depth`.
pub fn check_melting_morphism(
    f: &MeltingMorphismSpec,
    src: &Seed,
    dst: &Seed,
    depth: usize,
) -> Result<MorphismReport, SeedError> {
    let mut report = MorphismReport::default();

    // CM1: total on the source cluster, images are target variables or
    // integers.
    for v in &src.vars {
        match f.get(v.id) {
            None => report
                .cm1
                .push(format!("{} has no image", registry::name(v.id))),
            Some(MorphImage::Var(w)) => {
                if dst.var(w).is_none() {
                    report.cm1.push(format!(
                        "{} maps to {} which is not a target cluster variable",
                        registry::name(v.id),
                        registry::name(w)
                    ));
                }
            }
            Some(MorphImage::Int(_)) => {}
        }
    }

    // MCM / iMCM on exchangeable variables.
    for &x in &src.ex {
        match f.get(x) {
            Some(MorphImage::Var(w)) if dst.var(w).is_some() && !dst.ex.contains(&w) => {
                report.mcm.push(format!(
                    "exchangeable {} maps to frozen {}",
                    registry::name(x),
                    registry::name(w)
                ));
            }
            Some(MorphImage::Int(0)) => {
                report.imcm.push(format!(
                    "exchangeable {} maps to 0",
                    registry::name(x)
                ));
            }
            _ => {}
        }
    }

    // Specialisation condition: for x exchangeable with exchangeable
    // image, the product of images of integer-specialised neighbours on
    // each side of the exchange relation must be exactly 1.
    for &x in &src.ex {
        let Some(MorphImage::Var(w)) = f.get(x) else {
            continue;
        };
        if !dst.ex.contains(&w) {
            continue;
        }
        let mut pos_prod: i128 = 1;
        let mut neg_prod: i128 = 1;
        for (v, bxv) in src.b.row(x) {
            if let Some(MorphImage::Int(z)) = f.get(v) {
                let p = (z as i128).pow(bxv.unsigned_abs() as u32);
                if bxv > 0 {
                    pos_prod *= p;
                } else {
                    neg_prod *= p;
                }
            }
        }
        if pos_prod != 1 || neg_prod != 1 {
            report.specialisation.push(format!(
                "neighbour specialisation products at {} are ({}, {}); both must be 1",
                registry::name(x),
                pos_prod,
                neg_prod
            ));
        }
    }

    if report.cm1.is_empty() {
        check_cm2(f, src, dst, depth, &mut report)?;
    }
    Ok(report)
}

/// Depth-first enumeration of biadmissible sequences, carrying a pairing
/// between the evolving source and target clusters. At each node, every
/// tracked initial variable's ring image must match its paired target
/// value.
fn check_cm2(
    f: &MeltingMorphismSpec,
    src: &Seed,
    dst: &Seed,
    depth: usize,
    report: &mut MorphismReport,
) -> Result<(), SeedError> {
    let subst = f.substitution();
    // Pairing of current source variables with current target values.
    let pairing: BTreeMap<VarId, MorphImage> = src
        .vars
        .iter()
        .map(|v| (v.id, f.get(v.id).expect("CM1 checked")))
        .collect();

    struct Ctx<'a> {
        subst: &'a BTreeMap<VarId, LaurentPoly>,
        depth: usize,
    }

    fn compare_node(
        ctx: &Ctx,
        src_cur: &Seed,
        dst_cur: &Seed,
        pairing: &BTreeMap<VarId, MorphImage>,
        seq: &[VarId],
        report: &mut MorphismReport,
    ) -> Result<bool, SeedError> {
        for v in &src_cur.vars {
            let lhs = v.expr.substitute(ctx.subst)?;
            let rhs = match pairing[&v.id] {
                MorphImage::Int(z) => LaurentPoly::int(z),
                MorphImage::Var(w) => dst_cur
                    .var(w)
                    .expect("pairing targets live in the target seed")
                    .expr
                    .clone(),
            };
            if lhs != rhs {
                report.cm2_failure = Some(Cm2Failure {
                    sequence: seq.iter().map(|&x| registry::name(x)).collect(),
                    witness: registry::name(v.id),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn dfs(
        ctx: &Ctx,
        src_cur: &Seed,
        dst_cur: &Seed,
        pairing: &BTreeMap<VarId, MorphImage>,
        seq: &mut Vec<VarId>,
        report: &mut MorphismReport,
    ) -> Result<bool, SeedError> {
        if seq.len() >= ctx.depth {
            return Ok(true);
        }
        for x in src_cur.ex.iter().copied().collect::<Vec<_>>() {
            // Biadmissible only if the paired value is an exchangeable
            // target variable.
            let MorphImage::Var(w) = pairing[&x] else {
                continue;
            };
            if !dst_cur.ex.contains(&w) {
                continue;
            }
            let src_next = src_cur.mutate(x)?;
            let dst_next = dst_cur.mutate(w)?;
            let src_new = src_next.vars[src_cur.position_of(x).unwrap()].id;
            let dst_new = dst_next.vars[dst_cur.position_of(w).unwrap()].id;
            let mut pairing_next = pairing.clone();
            pairing_next.remove(&x);
            pairing_next.insert(src_new, MorphImage::Var(dst_new));
            seq.push(x);
            report.sequences_checked += 1;
            let ok = compare_node(ctx, &src_next, &dst_next, &pairing_next, seq, report)?
                && dfs(ctx, &src_next, &dst_next, &pairing_next, seq, report)?;
            seq.pop();
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    let ctx = Ctx {
        subst: &subst,
        depth,
    };
    // Depth-0 consistency: images of initial variables match the spec by
    // construction, so start the search directly.
    dfs(&ctx, src, dst, &pairing, &mut Vec::new(), report)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::Seed;

    fn simple_seed(prefix: &str) -> Seed {
        let x = format!("{}_x", prefix);
        let f1 = format!("{}_f1", prefix);
        let f2 = format!("{}_f2", prefix);
        Seed::from_quiver(
            &[(&x, false), (&f1, true), (&f2, true)],
            &[(&x, &f1, 1), (&f2, &x, 1)],
        )
    }

    #[test]
    fn identity_passes_all_depths() {
        let s = simple_seed("mid");
        for depth in 0..4 {
            let f = MeltingMorphismSpec::identity(&s);
            let report = check_melting_morphism(&f, &s, &s, depth).unwrap();
            assert!(report.passed(), "depth {}: {:?}", depth, report);
        }
    }

    #[test]
    fn exchangeable_to_zero_fails_imcm() {
        let s = simple_seed("mz");
        let x = crate::registry::lookup("mz_x").unwrap();
        let mut f = MeltingMorphismSpec::identity(&s);
        f.image.insert(x, MorphImage::Int(0));
        let report = check_melting_morphism(&f, &s, &s, 1).unwrap();
        assert_eq!(report.failed_axioms(), vec!["iMCM"]);
    }

    #[test]
    fn neighbour_specialised_to_two_fails() {
        let src = simple_seed("ms");
        let dst = simple_seed("msd");
        let x = crate::registry::lookup("ms_x").unwrap();
        let f1 = crate::registry::lookup("ms_f1").unwrap();
        let f2 = crate::registry::lookup("ms_f2").unwrap();
        let mut image = BTreeMap::new();
        image.insert(x, MorphImage::Var(crate::registry::lookup("msd_x").unwrap()));
        image.insert(f1, MorphImage::Int(2));
        image.insert(f2, MorphImage::Var(crate::registry::lookup("msd_f2").unwrap()));
        let f = MeltingMorphismSpec::new(image);
        let report = check_melting_morphism(&f, &src, &dst, 0).unwrap();
        assert!(report
            .failed_axioms()
            .contains(&"specialisation"));
    }

    #[test]
    fn specialisation_to_one_passes_structurally() {
        // Melting f1 |-> 1 keeps both side products equal to 1; the target
        // seed must then drop the frozen neighbour for CM2 to hold.
        let src = simple_seed("mo");
        let dst = Seed::from_quiver(
            &[("mo2_x", false), ("mo2_f2", true)],
            &[("mo2_f2", "mo2_x", 1)],
        );
        let x = crate::registry::lookup("mo_x").unwrap();
        let f1 = crate::registry::lookup("mo_f1").unwrap();
        let f2 = crate::registry::lookup("mo_f2").unwrap();
        let mut image = BTreeMap::new();
        image.insert(x, MorphImage::Var(crate::registry::lookup("mo2_x").unwrap()));
        image.insert(f1, MorphImage::Int(1));
        image.insert(f2, MorphImage::Var(crate::registry::lookup("mo2_f2").unwrap()));
        let f = MeltingMorphismSpec::new(image);
        let report = check_melting_morphism(&f, &src, &dst, 3).unwrap();
        assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn wrong_target_matrix_fails_cm2() {
        let src = simple_seed("mw");
        // Same shape but the frozen arrow doubled: exchange relations
        // disagree after one step.
        let dst = Seed::from_quiver(
            &[("mw2_x", false), ("mw2_f1", true), ("mw2_f2", true)],
            &[("mw2_x", "mw2_f1", 1), ("mw2_f2", "mw2_x", 2)],
        );
        let mut image = BTreeMap::new();
        for (a, b) in [("mw_x", "mw2_x"), ("mw_f1", "mw2_f1"), ("mw_f2", "mw2_f2")] {
            image.insert(
                crate::registry::lookup(a).unwrap(),
                MorphImage::Var(crate::registry::lookup(b).unwrap()),
            );
        }
        let f = MeltingMorphismSpec::new(image);
        let report = check_melting_morphism(&f, &src, &dst, 2).unwrap();
        let failure = report.cm2_failure.expect("CM2 must fail");
        assert_eq!(failure.sequence, vec!["mw_x".to_string()]);
    }
}
