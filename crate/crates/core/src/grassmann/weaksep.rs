//! Weak separation of Pluecker labels.
//!
//! Two charge-0 Maya sets are weakly separated when their finite difference
//! sets do not alternate around the integer line: there is no `a < b < c <
//! d` with `a, c` in one difference set and `b, d` in the other. Pairwise
//! weak separation characterises compatibility of Pluecker variables in a
//! cluster.

use super::partition::Partition;
use std::collections::BTreeSet;

/// The two finite difference sets `I_lambda \ I_mu` and `I_mu \ I_lambda`
/// of the charge-0 Maya sets.
pub fn difference_sets(lambda: &Partition, mu: &Partition) -> (BTreeSet<i64>, BTreeSet<i64>) {
    let (arms_l, removed_l) = lambda.maya_deviation();
    let (arms_m, removed_m) = mu.maya_deviation();
    // In lambda but not mu: extra arms, plus negatives that mu removed and
    // lambda kept.
    let in_l: BTreeSet<i64> = arms_l
        .difference(&arms_m)
        .chain(removed_m.difference(&removed_l))
        .copied()
        .collect();
    let in_m: BTreeSet<i64> = arms_m
        .difference(&arms_l)
        .chain(removed_l.difference(&removed_m))
        .copied()
        .collect();
    (in_l, in_m)
}

/// No-alternation test on the two difference sets.
pub fn weakly_separated(lambda: &Partition, mu: &Partition) -> bool {
    let (in_l, in_m) = difference_sets(lambda, mu);
    let mut tagged: Vec<(i64, u8)> = in_l
        .iter()
        .map(|&x| (x, 0u8))
        .chain(in_m.iter().map(|&x| (x, 1u8)))
        .collect();
    tagged.sort();
    let mut blocks = 0u32;
    let mut last = None;
    for (_, tag) in tagged {
        if last != Some(tag) {
            blocks += 1;
            last = Some(tag);
        }
    }
    blocks <= 3
}

/// Every unordered pair in `labels` is weakly separated.
pub fn pairwise_weakly_separated(labels: &[Partition]) -> bool {
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            if !weakly_separated(&labels[i], &labels[j]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn giambelli_counterexample_pair() {
        // (2|1) = (3,1,1) and (0|0) = (1): difference sets {2,-1} and
        // {0,-2} alternate as -2 < -1 < 0 < 2.
        let lam = p("(2|1)");
        assert_eq!(lam, p("[3,1,1]"));
        let mu = p("(0|0)");
        assert_eq!(mu, p("[1]"));
        let (in_l, in_m) = difference_sets(&lam, &mu);
        assert_eq!(in_l.into_iter().collect::<Vec<_>>(), vec![-1, 2]);
        assert_eq!(in_m.into_iter().collect::<Vec<_>>(), vec![-2, 0]);
        assert!(!weakly_separated(&lam, &mu));
    }

    #[test]
    fn equal_labels_are_separated() {
        let lam = p("[3,2,1]");
        assert!(weakly_separated(&lam, &lam));
    }

    #[test]
    fn rectangles_pairwise_separated() {
        // All 256 ordered pairs of rectangles in a 4x4 box (the initial
        // cluster of the infinite quiver restricted to that box).
        let mut rects = vec![Partition::empty()];
        for i in 1..=4 {
            for j in 1..=4 {
                rects.push(Partition::rectangle(i, j));
            }
        }
        for a in &rects {
            for b in &rects {
                assert!(weakly_separated(a, b), "{} vs {}", a, b);
            }
        }
    }
}
