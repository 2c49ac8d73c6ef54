//! Similarity of seeds: a bijection preserving the exchangeable set and
//! matrix entries up to one sign per exchangeably connected component.
//! With the identity (or caller-supplied) bijection this is strong
//! similarity.

use std::collections::BTreeMap;

use crate::registry::{self, VarId};

use super::{exchangeable_components, Seed, SeedError};

/// Search bound for the backtracking bijection search.
pub const SIMILARITY_SEARCH_BOUND: usize = 12;

/// A witness of similarity: the bijection and the sign chosen on each
/// component (keyed by a representative exchangeable variable of the first
/// seed).
#[derive(Clone, Debug)]
pub struct Similarity {
    pub bijection: BTreeMap<VarId, VarId>,
    pub signs: BTreeMap<VarId, i8>,
}

/// Verifies (or, without `phi`, searches for) a similarity bijection.
///
/// Returns `Ok(Some(witness))` on success, `Ok(None)` when the seeds are
/// not similar, and `SearchTooLarge` when no bijection is supplied and the
/// seeds exceed the search bound.
pub fn seeds_similar(
    a: &Seed,
    b: &Seed,
    phi: Option<&BTreeMap<VarId, VarId>>,
) -> Result<Option<Similarity>, SeedError> {
    if a.vars.len() != b.vars.len() || a.ex.len() != b.ex.len() {
        return Ok(None);
    }
    match phi {
        Some(map) => Ok(verify_bijection(a, b, map)),
        None => {
            if a.vars.len() > SIMILARITY_SEARCH_BOUND {
                return Err(SeedError::SearchTooLarge(
                    a.vars.len(),
                    SIMILARITY_SEARCH_BOUND,
                ));
            }
            Ok(search_bijection(a, b))
        }
    }
}

/// Strong similarity via a name-matching bijection: variables are paired
/// by registry name. Useful when two seeds are built over the same labels.
pub fn strongly_similar_by_name(a: &Seed, b: &Seed) -> Result<Option<Similarity>, SeedError> {
    let mut phi = BTreeMap::new();
    for v in &a.vars {
        phi.insert(v.id, v.id);
    }
    if b.vars.len() != a.vars.len() || !b.vars.iter().all(|v| phi.contains_key(&v.id)) {
        return Ok(None);
    }
    seeds_similar(a, b, Some(&phi))
}

/// Strong similarity via partition labels: variables of `a` and `b` are
/// paired by equal labels (all variables must be labelled uniquely).
pub fn strongly_similar_by_label(a: &Seed, b: &Seed) -> Result<Option<Similarity>, SeedError> {
    let mut phi = BTreeMap::new();
    for v in &a.vars {
        let Some(label) = &v.label else {
            return Ok(None);
        };
        let Some(w) = b.var_by_label(label) else {
            return Ok(None);
        };
        phi.insert(v.id, w.id);
    }
    seeds_similar(a, b, Some(&phi))
}

fn verify_bijection(a: &Seed, b: &Seed, phi: &BTreeMap<VarId, VarId>) -> Option<Similarity> {
    // Bijection onto b's variables, restricting to the exchangeable sets.
    let mut seen = std::collections::BTreeSet::new();
    for v in &a.vars {
        let &img = phi.get(&v.id)?;
        if b.var(img).is_none() || !seen.insert(img) {
            return None;
        }
        if a.ex.contains(&v.id) != b.ex.contains(&img) {
            return None;
        }
    }
    // One sign per exchangeably connected component of a.
    let comps = exchangeable_components(a);
    let mut signs: BTreeMap<VarId, i8> = BTreeMap::new();
    for comp in &comps.components {
        let rep = *comp.ex.iter().next().expect("component has an exchangeable");
        let mut sign: Option<i8> = None;
        for &u in &comp.ex {
            for v in a.vars.iter().map(|v| v.id) {
                let lhs = a.b.entry(u, v);
                let rhs = b.b.entry(phi[&u], phi[&v]);
                match (lhs, rhs) {
                    (0, 0) => {}
                    (0, _) | (_, 0) => return None,
                    _ => {
                        if lhs.abs() != rhs.abs() {
                            return None;
                        }
                        let s = if lhs == rhs { 1 } else { -1 };
                        match sign {
                            None => sign = Some(s),
                            Some(prev) if prev != s => return None,
                            _ => {}
                        }
                    }
                }
            }
        }
        signs.insert(rep, sign.unwrap_or(1));
    }
    // Entries of b in exchangeable rows whose preimage row is exchangeable
    // are covered above by skew-symmetry and bijectivity; rows of b with
    // entries where a has none are caught by the (0, _) case.
    Some(Similarity {
        bijection: phi.clone(),
        signs,
    })
}

/// Backtracking search with degree-sequence pruning.
fn search_bijection(a: &Seed, b: &Seed) -> Option<Similarity> {
    // Signature: (exchangeable, multiset of |entries| in row and column).
    fn signature(s: &Seed, id: VarId) -> (bool, Vec<i64>) {
        let mut mags: Vec<i64> = Vec::new();
        for v in s.vars.iter().map(|v| v.id) {
            let e = s.b.entry(id, v).abs() + s.b.entry(v, id).abs();
            if e != 0 {
                mags.push(e);
            }
        }
        mags.sort_unstable();
        (s.ex.contains(&id), mags)
    }
    let a_ids = a.var_ids();
    let b_ids = b.var_ids();
    let b_sigs: BTreeMap<VarId, (bool, Vec<i64>)> = b_ids
        .iter()
        .map(|&id| (id, signature(b, id)))
        .collect();
    let candidates: Vec<Vec<VarId>> = a_ids
        .iter()
        .map(|&ai| {
            let sig = signature(a, ai);
            b_ids
                .iter()
                .copied()
                .filter(|bi| b_sigs[bi] == sig)
                .collect()
        })
        .collect();

    fn extend(
        a: &Seed,
        b: &Seed,
        a_ids: &[VarId],
        candidates: &[Vec<VarId>],
        pos: usize,
        phi: &mut BTreeMap<VarId, VarId>,
        used: &mut std::collections::BTreeSet<VarId>,
    ) -> Option<Similarity> {
        if pos == a_ids.len() {
            return verify_bijection(a, b, phi);
        }
        let ai = a_ids[pos];
        for &bi in &candidates[pos] {
            if used.contains(&bi) {
                continue;
            }
            // Local consistency: magnitudes against already-assigned vars.
            let ok = phi.iter().all(|(&u, &w)| {
                a.b.entry(ai, u).abs() == b.b.entry(bi, w).abs()
                    && a.b.entry(u, ai).abs() == b.b.entry(w, bi).abs()
            });
            if !ok {
                continue;
            }
            phi.insert(ai, bi);
            used.insert(bi);
            if let Some(w) = extend(a, b, a_ids, candidates, pos + 1, phi, used) {
                return Some(w);
            }
            phi.remove(&ai);
            used.remove(&bi);
        }
        None
    }

    let mut phi = BTreeMap::new();
    let mut used = std::collections::BTreeSet::new();
    extend(a, b, &a_ids, &candidates, 0, &mut phi, &mut used)
}

/// Renders a similarity witness for reports.
pub fn describe(sim: &Similarity) -> String {
    let pairs: Vec<String> = sim
        .bijection
        .iter()
        .map(|(&u, &v)| format!("{} -> {}", registry::name(u), registry::name(v)))
        .collect();
    let signs: Vec<String> = sim
        .signs
        .iter()
        .map(|(&rep, &s)| format!("component of {}: {:+}", registry::name(rep), s))
        .collect();
    format!("bijection {{{}}}, signs {{{}}}", pairs.join(", "), signs.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::Seed;

    fn sample() -> Seed {
        Seed::from_quiver(
            &[
                ("sim_a", false),
                ("sim_b", false),
                ("sim_f", true),
                ("sim_c", false),
                ("sim_g", true),
            ],
            &[
                ("sim_a", "sim_b", 1),
                ("sim_b", "sim_f", 2),
                ("sim_c", "sim_g", 1),
            ],
        )
    }

    #[test]
    fn identity_is_strongly_similar() {
        let s = sample();
        let sim = strongly_similar_by_name(&s, &s).unwrap().unwrap();
        assert!(sim.signs.values().all(|&x| x == 1));
    }

    #[test]
    fn component_sign_flip_is_similar() {
        let s = sample();
        let mut t = s.clone();
        // Flip all signs on the component {a, b, f}.
        let a = crate::registry::lookup("sim_a").unwrap();
        let b = crate::registry::lookup("sim_b").unwrap();
        let f = crate::registry::lookup("sim_f").unwrap();
        t.b.set(a, b, -1);
        t.b.set(b, a, 1);
        t.b.set(b, f, -2);
        let sim = strongly_similar_by_name(&s, &t).unwrap().unwrap();
        let mut signs: Vec<i8> = sim.signs.values().copied().collect();
        signs.sort_unstable();
        assert_eq!(signs, vec![-1, 1]);
        // Flipping only one entry of a two-entry component breaks it.
        let mut broken = s.clone();
        broken.b.set(a, b, -1);
        broken.b.set(b, a, 1);
        broken.b.set(b, f, 2); // keep old sign here
        assert!(strongly_similar_by_name(&s, &broken).unwrap().is_none());
    }

    #[test]
    fn cardinality_mismatch_not_similar() {
        let s = sample();
        let t = Seed::from_quiver(&[("sim2_a", false)], &[]);
        assert!(seeds_similar(&s, &t, None).unwrap().is_none());
    }

    #[test]
    fn search_finds_relabelling() {
        let s = Seed::from_quiver(
            &[("ss_p", false), ("ss_q", false), ("ss_r", true)],
            &[("ss_p", "ss_q", 1), ("ss_q", "ss_r", 1)],
        );
        let t = Seed::from_quiver(
            &[("ss_u", true), ("ss_v", false), ("ss_w", false)],
            &[("ss_w", "ss_v", 1), ("ss_v", "ss_u", 1)],
        );
        let sim = seeds_similar(&s, &t, None).unwrap().unwrap();
        let p = crate::registry::lookup("ss_p").unwrap();
        let w = crate::registry::lookup("ss_w").unwrap();
        assert_eq!(sim.bijection[&p], w);
    }

    #[test]
    fn search_bound_enforced() {
        let names: Vec<String> = (0..13).map(|i| format!("big_{}", i)).collect();
        let vars: Vec<(&str, bool)> = names.iter().map(|n| (n.as_str(), false)).collect();
        let s = Seed::from_quiver(&vars, &[]);
        assert!(matches!(
            seeds_similar(&s, &s, None),
            Err(SeedError::SearchTooLarge(13, _))
        ));
    }
}
