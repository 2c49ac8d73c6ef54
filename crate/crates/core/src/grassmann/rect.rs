//! Rectangle seeds of finite Grassmannian coordinate rings and finite
//! windows of the infinite quiver.
//!
//! Vertices are labelled by rectangular partitions `i x j` (height i,
//! width j) plus the empty partition. Arrows run `empty -> 1x1`,
//! `i x j -> i x (j+1)`, `i x j -> (i+1) x j` and
//! `i x j -> (i-1) x (j-1)`, whenever both endpoints exist; arrows between
//! two frozen vertices are dropped.

use std::collections::BTreeSet;

use crate::registry::{self, VarId};
use crate::seed::Seed;

use super::partition::Partition;
use super::GrassError;

/// Registry name of the Pluecker variable labelled by a partition.
pub fn var_name(label: &Partition) -> String {
    format!("d{}", label)
}

/// Registers (or finds) the variable for a partition label.
pub fn label_var(label: &Partition) -> VarId {
    registry::var(&var_name(label))
}

/// The index tuple `(l_1 < ... < l_m)` of `d_lambda` inside the chosen
/// `m x n` Grassmannian box, via `l_i = a_{m-i+1}` on the charge-0 Maya
/// sequence.
pub fn finite_label(lambda: &Partition, m: u32, n: u32) -> Result<Vec<i64>, GrassError> {
    if !lambda.fits_box(m, n) {
        return Err(GrassError::DoesNotFitBox);
    }
    let maya = lambda.to_maya(0);
    let mut tuple: Vec<i64> = (1..=m as usize).map(|i| maya.entry(i)).collect();
    tuple.reverse();
    Ok(tuple)
}

/// Recovers the partition from a strictly increasing index tuple with
/// entries at least `-(len)`.
pub fn partition_from_tuple(tuple: &[i64]) -> Result<Partition, GrassError> {
    let m = tuple.len();
    if !tuple.windows(2).all(|w| w[0] < w[1]) {
        return Err(GrassError::InvalidMaya("tuple not strictly increasing".into()));
    }
    if let Some(&first) = tuple.first() {
        if first < -(m as i64) {
            return Err(GrassError::InvalidMaya(
                "tuple extends below the implied tail".into(),
            ));
        }
    }
    let mut head: Vec<i64> = tuple.to_vec();
    head.reverse();
    let maya = super::partition::MayaSeq::new(0, head)?;
    Ok(maya.to_partition())
}

fn rect_label(i: u32, j: u32) -> Partition {
    Partition::rectangle(i, j)
}

/// Grid of rectangle labels with the four Grassmannian arrow families,
/// filtered by a vertex predicate.
fn build_rect_quiver(
    labels: &[(u32, u32)],
    frozen: impl Fn(u32, u32) -> bool,
) -> Seed {
    let mut vars: Vec<(String, bool, Partition)> = Vec::new();
    vars.push((var_name(&Partition::empty()), true, Partition::empty()));
    let exists = |i: u32, j: u32| labels.contains(&(i, j));
    for &(i, j) in labels {
        let label = rect_label(i, j);
        vars.push((var_name(&label), frozen(i, j), label));
    }
    let mut arrows: Vec<(String, String, i64)> = Vec::new();
    let name = |i: u32, j: u32| var_name(&rect_label(i, j));
    if exists(1, 1) {
        arrows.push((var_name(&Partition::empty()), name(1, 1), 1));
    }
    for &(i, j) in labels {
        if exists(i, j + 1) {
            arrows.push((name(i, j), name(i, j + 1), 1));
        }
        if exists(i + 1, j) {
            arrows.push((name(i, j), name(i + 1, j), 1));
        }
        if i > 1 && j > 1 && exists(i - 1, j - 1) {
            arrows.push((name(i, j), name(i - 1, j - 1), 1));
        }
    }
    let var_refs: Vec<(&str, bool)> = vars.iter().map(|(n, f, _)| (n.as_str(), *f)).collect();
    let arrow_refs: Vec<(&str, &str, i64)> = arrows
        .iter()
        .map(|(a, b, m)| (a.as_str(), b.as_str(), *m))
        .collect();
    let mut seed = Seed::from_quiver(&var_refs, &arrow_refs);
    for (pos, (_, _, label)) in vars.iter().enumerate() {
        seed.vars[pos].label = Some(label.clone());
    }
    seed
}

/// The rectangle seed of the `m x n` Grassmannian: `mn + 1` vertices,
/// frozen exactly at the empty partition and the maximal-height and
/// maximal-width rectangles.
pub fn rect_seed(m: u32, n: u32) -> Seed {
    assert!(m >= 1 && n >= 1, "box sides must be positive");
    let labels: Vec<(u32, u32)> = (1..=m)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .collect();
    build_rect_quiver(&labels, |i, j| i == m || j == n)
}

/// A finite window of the infinite rectangle quiver: rectangles up to
/// `max_h x max_w` plus the single frozen empty vertex. Mutation is only
/// defined away from the window boundary, where arrows were truncated.
#[derive(Clone, Debug)]
pub struct WindowSeed {
    pub seed: Seed,
    pub max_h: u32,
    pub max_w: u32,
    /// Vertices whose neighbourhood was cut by the window edge.
    pub boundary: BTreeSet<VarId>,
}

impl WindowSeed {
    /// Positions safe to mutate: every neighbour of the vertex in the
    /// infinite quiver lies inside the window.
    pub fn is_safe(&self, id: VarId) -> bool {
        self.seed.is_exchangeable(id) && !self.boundary.contains(&id)
    }
}

/// Materialises the window of the infinite quiver on rectangles within
/// `max_h x max_w`. Only the empty vertex is frozen; arrows with an
/// endpoint outside the window are dropped, and the boundary rows/columns
/// are marked unsafe for mutation.
pub fn q_infty_window(max_h: u32, max_w: u32) -> WindowSeed {
    assert!(max_h >= 1 && max_w >= 1, "window sides must be positive");
    let labels: Vec<(u32, u32)> = (1..=max_h)
        .flat_map(|i| (1..=max_w).map(move |j| (i, j)))
        .collect();
    let seed = build_rect_quiver(&labels, |_, _| false);
    let boundary: BTreeSet<VarId> = labels
        .iter()
        .filter(|&&(i, j)| i == max_h || j == max_w)
        .map(|&(i, j)| label_var(&rect_label(i, j)))
        .collect();
    WindowSeed {
        seed,
        max_h,
        max_w,
        boundary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::seed_validate;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn finite_labels_match_examples() {
        // 1x1 rectangle in the m = 2 box.
        assert_eq!(finite_label(&p("[1]"), 2, 2).unwrap(), vec![-2, 0]);
        // (2,1) with m = 2.
        assert_eq!(finite_label(&p("[2,1]"), 2, 2).unwrap(), vec![-1, 1]);
        // Empty partition with m = 3.
        assert_eq!(finite_label(&p("[]"), 3, 3).unwrap(), vec![-3, -2, -1]);
        assert_eq!(finite_label(&p("[4]"), 3, 3), Err(GrassError::DoesNotFitBox));
        assert_eq!(
            partition_from_tuple(&[-1, 1]).unwrap(),
            p("[2,1]")
        );
    }

    #[test]
    fn rect_seed_counts() {
        // 5 x 4: 21 vertices, 9 frozen, 12 exchangeable.
        let s = rect_seed(5, 4);
        assert_eq!(s.vars.len(), 21);
        assert_eq!(s.vars.iter().filter(|v| v.frozen).count(), 9);
        assert_eq!(s.ex.len(), 12);
        assert!(seed_validate(&s).is_valid());
    }

    #[test]
    fn degenerate_rect_seed() {
        // 1 x 1: both vertices frozen.
        let s = rect_seed(1, 1);
        assert_eq!(s.vars.len(), 2);
        assert!(s.ex.is_empty());
    }

    #[test]
    fn kp_exchange_relation_on_2x2() {
        let s = rect_seed(2, 2);
        let x = s.var_by_label(&p("[1]")).unwrap().id;
        let text = s.exchange_relation_text(x).unwrap();
        // d[2,1]*d[1] = d[2]*d[1,1] + d[]*d[2,2] up to factor order
        assert!(text.contains("*d[1] ="), "{}", text);
        let numerator = s.exchange_numerator(x).unwrap();
        let d = |name: &str| crate::laurent::LaurentPoly::var(registry::lookup(name).unwrap());
        let expect = &(&d("d[2]") * &d("d[1,1]")) + &(&d("d[]") * &d("d[2,2]"));
        assert_eq!(numerator, expect);
    }

    #[test]
    fn window_structure() {
        let w = q_infty_window(1, 1);
        assert_eq!(w.seed.vars.len(), 2);
        assert_eq!(w.seed.ex.len(), 1);
        let one_by_one = label_var(&p("[1]"));
        assert!(!w.is_safe(one_by_one));

        let w = q_infty_window(3, 3);
        assert!(w.is_safe(label_var(&p("[1]"))));
        assert!(w.is_safe(label_var(&p("[2,2]"))));
        assert!(!w.is_safe(label_var(&p("[3,3,3]"))));
        assert!(!w.is_safe(label_var(&p("[3]"))));
    }

    #[test]
    fn window_interior_agrees_with_larger_rect_seed() {
        // Entries in rows of non-boundary vertices of window(3,3) equal the
        // corresponding entries of rect_seed(4,4).
        let w = q_infty_window(3, 3);
        let big = rect_seed(4, 4);
        for i in 1..=2u32 {
            for j in 1..=2u32 {
                let v = label_var(&Partition::rectangle(i, j));
                for col in w.seed.vars.iter().map(|c| c.id) {
                    assert_eq!(
                        w.seed.b.entry(v, col),
                        big.b.entry(v, col),
                        "entry ({}x{}, {})",
                        i,
                        j,
                        registry::name(col)
                    );
                }
            }
        }
    }

    #[test]
    fn mutation_at_1x1_matches_rect_2x2() {
        let w = q_infty_window(2, 2);
        let s = rect_seed(2, 2);
        let x = label_var(&p("[1]"));
        assert!(w.is_safe(x));
        let nw = w.seed.exchange_numerator(x).unwrap();
        let ns = s.exchange_numerator(x).unwrap();
        assert_eq!(nw, ns);
    }
}
