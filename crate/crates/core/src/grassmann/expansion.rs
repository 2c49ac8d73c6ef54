//! Laurent expansions of Pluecker variables in the rectangle seed.
//!
//! `d_lambda` is a Laurent polynomial `F_lambda` in the rectangle
//! variables of its bounding box. The expansion is found by best-first
//! search over Pluecker clusters reachable from the rectangle seed by
//! square moves; once a cluster contains the target label the winning path
//! is replayed as algebraic mutation, and the result is verified against
//! the minors oracle at seeded random integer matrices before it is
//! returned.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::laurent::LaurentPoly;
use crate::seed::Seed;

use super::oracle::{rectangle_values, MinorsOracle};
use super::partition::Partition;
use super::quiver::PlueckerQuiver;
use super::rect::rect_seed;
use super::GrassError;

#[derive(Clone, Debug)]
pub struct ExpansionOptions {
    /// Verify the expansion against the minors oracle before returning.
    pub verify_oracle: bool,
    /// Number of random matrices used for verification.
    pub oracle_samples: usize,
    /// Seed for the verification matrices.
    pub rng_seed: u64,
    /// Hard cap on explored clusters.
    pub max_clusters: usize,
}

impl Default for ExpansionOptions {
    fn default() -> Self {
        ExpansionOptions {
            verify_oracle: true,
            oracle_samples: 3,
            rng_seed: 0x1d05,
            max_clusters: 200_000,
        }
    }
}

/// Best-first search for a Pluecker cluster containing `target`, starting
/// from `start`. Returns the mutation path as vertex positions. Clusters
/// are memoised by their sorted label multiset; moves whose new label is
/// closest to the target in diagram distance are explored first.
pub fn find_cluster_with(
    start: &PlueckerQuiver,
    target: &Partition,
    max_clusters: usize,
) -> Result<Vec<usize>, GrassError> {
    if start.position_of(target).is_some() {
        return Ok(Vec::new());
    }
    #[derive(PartialEq, Eq)]
    struct Node {
        priority: Reverse<(u64, usize, Vec<Partition>)>,
        quiver: PlueckerQuiver,
        path: Vec<usize>,
    }
    impl Ord for Node {
        fn cmp(&self, other: &Self) -> std::cmp::Ordering {
            self.priority.cmp(&other.priority)
        }
    }
    impl PartialOrd for Node {
        fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }
    let score = |q: &PlueckerQuiver| {
        q.labels
            .iter()
            .map(|l| l.diagram_distance(target))
            .min()
            .unwrap_or(u64::MAX)
    };
    let mut visited: BTreeSet<Vec<Partition>> = BTreeSet::new();
    let mut heap: BinaryHeap<Node> = BinaryHeap::new();
    visited.insert(start.cluster_key());
    heap.push(Node {
        priority: Reverse((score(start), 0, start.cluster_key())),
        quiver: start.clone(),
        path: Vec::new(),
    });
    while let Some(node) = heap.pop() {
        if visited.len() > max_clusters {
            return Err(GrassError::SearchExhausted);
        }
        for pos in 0..node.quiver.len() {
            if node.quiver.frozen[pos] {
                continue;
            }
            let Ok(new_label) = node.quiver.square_move_label(pos) else {
                continue;
            };
            let mut next = node.quiver.clone();
            next.square_move(pos)
                .expect("square_move_label succeeded");
            let key = next.cluster_key();
            if !visited.insert(key.clone()) {
                continue;
            }
            let mut path = node.path.clone();
            path.push(pos);
            if new_label == *target {
                return Ok(path);
            }
            let depth = path.len();
            heap.push(Node {
                priority: Reverse((score(&next), depth, key)),
                quiver: next,
                path,
            });
        }
    }
    Err(GrassError::SearchExhausted)
}

/// Replays a square-move path from a labelled seed as algebraic mutation,
/// assigning the combinatorial labels to the new variables. Returns the
/// final seed.
pub fn replay_path(seed: &Seed, path: &[usize]) -> Result<Seed, GrassError> {
    let mut quiver = PlueckerQuiver::from_seed(seed)
        .ok_or_else(|| GrassError::NotQuadrilateral("seed is not fully labelled".into()))?;
    let mut cur = seed.clone();
    for &pos in path {
        let new_label = quiver.square_move(pos)?;
        let x = cur.vars[pos].id;
        cur = cur.mutate(x)?;
        cur.vars[pos].label = Some(new_label);
    }
    Ok(cur)
}

/// The Laurent expansion `F_lambda` of `d_lambda` over the rectangle
/// variables of the `m x n` box, with oracle verification per `opts`.
pub fn laurent_expansion_with(
    lambda: &Partition,
    m: u32,
    n: u32,
    opts: &ExpansionOptions,
) -> Result<LaurentPoly, GrassError> {
    if !lambda.fits_box(m, n) {
        return Err(GrassError::DoesNotFitBox);
    }
    let seed = rect_seed(m, n);
    let expansion = if let Some(v) = seed.var_by_label(lambda) {
        // Rectangles and the empty label are initial variables.
        v.expr.clone()
    } else {
        let quiver = PlueckerQuiver::from_seed(&seed).expect("rectangle seed is labelled");
        let path = find_cluster_with(&quiver, lambda, opts.max_clusters)?;
        let final_seed = replay_path(&seed, &path)?;
        final_seed
            .var_by_label(lambda)
            .ok_or(GrassError::SearchExhausted)?
            .expr
            .clone()
    };
    if opts.verify_oracle {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed);
        for sample in 0..opts.oracle_samples {
            let oracle = MinorsOracle::random(m, n, &mut rng, 1_000_000);
            let values = rectangle_values(&oracle)?;
            let lhs = expansion.eval(&values)?;
            let rhs = oracle.value(lambda)?;
            if lhs != rhs {
                return Err(GrassError::OracleMismatch(format!(
                    "F_{} sample {}: {} vs {}",
                    lambda, sample, lhs, rhs
                )));
            }
        }
    }
    Ok(expansion)
}

/// [`laurent_expansion_with`] under default options (oracle verification
/// at three seeded random matrices).
pub fn laurent_expansion(lambda: &Partition, m: u32, n: u32) -> Result<LaurentPoly, GrassError> {
    laurent_expansion_with(lambda, m, n, &ExpansionOptions::default())
}

/// Expansions for several labels, fanned out in parallel when enabled.
pub fn laurent_expansion_batch(
    labels: &[Partition],
    m: u32,
    n: u32,
    opts: &ExpansionOptions,
) -> Vec<Result<LaurentPoly, GrassError>> {
    crate::par::map(labels, |l| laurent_expansion_with(l, m, n, opts))
}

/// Sequential twin of [`laurent_expansion_batch`] for benchmarks.
pub fn laurent_expansion_batch_seq(
    labels: &[Partition],
    m: u32,
    n: u32,
    opts: &ExpansionOptions,
) -> Vec<Result<LaurentPoly, GrassError>> {
    crate::par::map_seq(labels, |l| laurent_expansion_with(l, m, n, opts))
}

/// All clusters reachable from `start` by at most `depth` square moves
/// (label multisets, deduplicated).
pub fn clusters_within(start: &PlueckerQuiver, depth: usize) -> Vec<Vec<Partition>> {
    let mut visited: BTreeSet<Vec<Partition>> = BTreeSet::new();
    visited.insert(start.cluster_key());
    let mut frontier = vec![start.clone()];
    for _ in 0..depth {
        let mut next_frontier = Vec::new();
        for q in &frontier {
            for pos in 0..q.len() {
                if q.frozen[pos] || q.square_move_label(pos).is_err() {
                    continue;
                }
                let mut next = q.clone();
                next.square_move(pos).expect("validated move");
                if visited.insert(next.cluster_key()) {
                    next_frontier.push(next);
                }
            }
        }
        frontier = next_frontier;
        if frontier.is_empty() {
            break;
        }
    }
    visited.into_iter().collect()
}

/// Evaluates `F_lambda` at positive rectangle values; used by the
/// positivity certificate.
pub fn evaluate_at_rectangles(
    expansion: &LaurentPoly,
    values: &std::collections::BTreeMap<crate::registry::VarId, crate::laurent::Rational>,
) -> Result<crate::laurent::Rational, GrassError> {
    Ok(expansion.eval(values)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Rational;
    use crate::registry;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn rectangle_label_is_initial_variable() {
        let f = laurent_expansion(&p("[2,2]"), 2, 2).unwrap();
        assert_eq!(
            f,
            LaurentPoly::var(registry::lookup("d[2,2]").unwrap())
        );
    }

    #[test]
    fn expansion_of_2_1_in_2x2_box() {
        // F_(2,1) = (d_(2) d_(1,1) + d_empty d_(2,2)) / d_(1)
        let f = laurent_expansion(&p("[2,1]"), 2, 2).unwrap();
        let d = |name: &str| LaurentPoly::var(registry::lookup(name).unwrap());
        let numerator = &(&d("d[2]") * &d("d[1,1]")) + &(&d("d[]") * &d("d[2,2]"));
        let expect = numerator.div_exact(&d("d[1]")).unwrap();
        assert_eq!(f, expect);
        assert!(f.is_coefficient_positive());
    }

    #[test]
    fn expansion_respects_bounding_box() {
        let f = laurent_expansion(&p("[2,1]"), 3, 3).unwrap();
        // Only rectangle variables within the 2 x 2 bounding box appear.
        let allowed: BTreeSet<_> = ["d[]", "d[1]", "d[2]", "d[1,1]", "d[2,2]"]
            .iter()
            .map(|n| registry::var(n))
            .collect();
        for v in f.variables() {
            assert!(allowed.contains(&v), "unexpected variable {}", registry::name(v));
        }
    }

    #[test]
    fn expansion_is_integral_and_positive_for_staircase() {
        let f = laurent_expansion(&p("[3,2,1]"), 3, 3).unwrap();
        assert!(f.is_coefficient_positive());
        assert!(f.has_integer_coefficients());
    }

    #[test]
    fn does_not_fit_box_rejected() {
        assert!(matches!(
            laurent_expansion(&p("[4,1]"), 3, 3),
            Err(GrassError::DoesNotFitBox)
        ));
    }

    #[test]
    fn oracle_catches_wrong_value() {
        // Evaluating F_(2,1) with a deliberately wrong value disagrees
        // with the oracle (sanity check that verification is active).
        let f = laurent_expansion(&p("[2,1]"), 2, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let oracle = MinorsOracle::random(2, 2, &mut rng, 100);
        let mut values = rectangle_values(&oracle).unwrap();
        let lhs = f.eval(&values).unwrap();
        assert_eq!(lhs, oracle.value(&p("[2,1]")).unwrap());
        let key = registry::lookup("d[2,2]").unwrap();
        let bumped = values.get(&key).unwrap() + Rational::from_integer(1.into());
        values.insert(key, bumped);
        assert_ne!(f.eval(&values).unwrap(), oracle.value(&p("[2,1]")).unwrap());
    }

    #[test]
    fn clusters_within_depth_counts() {
        let q = PlueckerQuiver::from_seed(&rect_seed(2, 2)).unwrap();
        // One exchangeable vertex: the initial cluster and its single move.
        let cs = clusters_within(&q, 3);
        assert_eq!(cs.len(), 2);
    }
}
