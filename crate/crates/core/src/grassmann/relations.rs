//! Generators for the quadratic relations among Pluecker variables: the
//! general exchange-family relations, the three-term relations for hook
//! partitions and the three-term relations on the rectangle diagonal.

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::rect::partition_from_tuple;
use super::GrassError;

/// A signed list of label pairs; the relation asserts that the signed sum
/// of products vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerRelation {
    pub terms: Vec<(i8, Partition, Partition)>,
}

impl PlueckerRelation {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Canonical form: pairs ordered within each term, terms sorted, global
    /// sign normalised so the term containing the lexicographically largest
    /// partition is positive.
    pub fn normalised(mut self) -> PlueckerRelation {
        for t in &mut self.terms {
            if t.1 > t.2 {
                std::mem::swap(&mut t.1, &mut t.2);
            }
        }
        self.terms.sort_by(|a, b| (&a.1, &a.2).cmp(&(&b.1, &b.2)));
        let largest = self
            .terms
            .iter()
            .map(|(_, a, b)| a.max(b).clone())
            .max();
        if let Some(largest) = largest {
            let sign_of_largest = self
                .terms
                .iter()
                .find(|(_, a, b)| *a.max(b) == largest)
                .map(|(s, _, _)| *s)
                .unwrap_or(1);
            if sign_of_largest < 0 {
                for t in &mut self.terms {
                    t.0 = -t.0;
                }
            }
        }
        self
    }

    /// Same relation up to global sign.
    pub fn same_up_to_sign(&self, other: &PlueckerRelation) -> bool {
        let a = self.clone().normalised();
        let b = other.clone().normalised();
        a == b
    }
}

impl std::fmt::Display for PlueckerRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 = 0");
        }
        for (i, (s, a, b)) in self.terms.iter().enumerate() {
            if i == 0 {
                if *s < 0 {
                    write!(f, "-")?;
                }
            } else if *s < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "d{}*d{}", a, b)?;
        }
        write!(f, " = 0")
    }
}

/// JSON form of a relation: a list of signed label pairs.
#[derive(Serialize, Deserialize)]
pub struct RelationJson {
    pub terms: Vec<RelationTermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct RelationTermJson {
    pub sign: i8,
    pub a: String,
    pub b: String,
}

impl PlueckerRelation {
    pub fn to_json(&self) -> RelationJson {
        RelationJson {
            terms: self
                .terms
                .iter()
                .map(|(s, a, b)| RelationTermJson {
                    sign: *s,
                    a: a.to_string(),
                    b: b.to_string(),
                })
                .collect(),
        }
    }
}

/// Sorts an index tuple, returning the permutation sign, or `None` when an
/// index repeats (the Pluecker variable vanishes).
fn sort_with_sign(tuple: &mut Vec<i64>) -> Option<i8> {
    let mut sign = 1i8;
    // Insertion sort, counting transpositions.
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] > tuple[j] {
            tuple.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if tuple.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// The quadratic relation attached to an `(m-1)`-tuple `I` and an
/// `(m+1)`-tuple `J` of indices at least `-m`: the alternating sum over
/// `j in J` of `d_{I,j} * d_{J \ j}`. Terms with a repeated index are
/// dropped; terms with equal unordered label pairs cancel.
pub fn pluecker_relation(m: u32, i_tuple: &[i64], j_tuple: &[i64]) -> Result<PlueckerRelation, GrassError> {
    let m = m as usize;
    if i_tuple.len() + 1 != m || j_tuple.len() != m + 1 {
        return Err(GrassError::InvalidMaya(
            "index tuples must have sizes m-1 and m+1".into(),
        ));
    }
    let strictly_increasing = |t: &[i64]| t.windows(2).all(|w| w[0] < w[1]);
    if !strictly_increasing(i_tuple) || !strictly_increasing(j_tuple) {
        return Err(GrassError::InvalidMaya("index tuples must strictly increase".into()));
    }
    if i_tuple.iter().chain(j_tuple).any(|&x| x < -(m as i64)) {
        return Err(GrassError::InvalidMaya("indices must be at least -m".into()));
    }
    let mut terms: Vec<(i8, Partition, Partition)> = Vec::new();
    for (ell, &j) in j_tuple.iter().enumerate() {
        let parity = if (ell + 1) % 2 == 0 { 1i8 } else { -1i8 };
        let mut first: Vec<i64> = i_tuple.to_vec();
        first.push(j);
        let Some(sort_sign) = sort_with_sign(&mut first) else {
            continue;
        };
        let second: Vec<i64> = j_tuple
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != ell)
            .map(|(_, &x)| x)
            .collect();
        let lam = partition_from_tuple(&first)?;
        let mu = partition_from_tuple(&second)?;
        terms.push((parity * sort_sign, lam, mu));
    }
    // Cancel identical unordered pairs (the degenerate case I subset J).
    let mut combined: Vec<(i8, Partition, Partition)> = Vec::new();
    'outer: for (s, a, b) in terms {
        for entry in &mut combined {
            let same = (entry.1 == a && entry.2 == b) || (entry.1 == b && entry.2 == a);
            if same {
                entry.0 += s;
                continue 'outer;
            }
        }
        combined.push((s, a, b));
    }
    combined.retain(|t| t.0 != 0);
    debug_assert!(combined.iter().all(|t| t.0.abs() == 1));
    Ok(PlueckerRelation { terms: combined }.normalised())
}

/// The three-term relation for hook partitions with arms `a, a-1` and legs
/// `b, b-1`:
/// `d_(a|b) d_(a-1|b-1) = d_empty d_(a,a-1|b,b-1) + d_(a-1|b) d_(a|b-1)`.
pub fn hook_relation(a: u32, b: u32) -> Result<PlueckerRelation, GrassError> {
    if a < 1 || b < 1 {
        return Err(GrassError::InvalidFrobenius(
            "hook relation needs arm and leg at least 1".into(),
        ));
    }
    let hook = |arm: u32, leg: u32| Partition::hook(arm, leg);
    let double = super::partition::FrobeniusForm::new(vec![a, a - 1], vec![b, b - 1])?
        .to_partition();
    let terms = vec![
        (1, hook(a, b), hook(a - 1, b - 1)),
        (-1, Partition::empty(), double),
        (-1, hook(a - 1, b), hook(a, b - 1)),
    ];
    Ok(PlueckerRelation { terms }.normalised())
}

/// The three-term relation along the rectangle diagonal:
/// `d_(k^k) d_((k+1)^k, k) = d_((k+1)^k) d_(k^(k+1)) +
///  d_(k^(k-1), k-1) d_((k+1)^(k+1))`; `k = 0` is the KP relation.
pub fn diag_relation(k: u32) -> PlueckerRelation {
    if k == 0 {
        return hook_relation(1, 1).expect("KP relation is the (1,1) hook relation");
    }
    let stacked = |width: u32, height: u32, extra: u32| {
        // height rows of `width` followed by one row of `extra`.
        let mut parts = vec![width; height as usize];
        if extra > 0 {
            parts.push(extra);
        }
        Partition::from_untrimmed(parts)
    };
    let terms = vec![
        (
            1,
            Partition::rectangle(k, k),
            stacked(k + 1, k, k),
        ),
        (
            -1,
            Partition::rectangle(k, k + 1),
            Partition::rectangle(k + 1, k),
        ),
        (
            -1,
            stacked(k, k - 1, k - 1),
            Partition::rectangle(k + 1, k + 1),
        ),
    ];
    PlueckerRelation { terms }.normalised()
}

/// The KP relation in partition labels:
/// `-d_(2,2) d_empty + d_(2,1) d_(1) - d_(1,1) d_(2) = 0`.
pub fn kp_relation() -> PlueckerRelation {
    diag_relation(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn kp_relation_terms() {
        let kp = kp_relation();
        let expect = PlueckerRelation {
            terms: vec![
                (1, p("[]"), p("[2,2]")),
                (-1, p("[1]"), p("[2,1]")),
                (1, p("[1,1]"), p("[2]")),
            ],
        }
        .normalised();
        assert_eq!(kp, expect);
    }

    #[test]
    fn pluecker_m2_gives_kp() {
        // I = (1), J = (-2, -1, 0) inside the 2 x 2 box.
        let rel = pluecker_relation(2, &[1], &[-2, -1, 0]).unwrap();
        assert!(rel.same_up_to_sign(&kp_relation()), "{}", rel);
    }

    #[test]
    fn pluecker_m3_matches_worked_example() {
        // I = (-3, -2), J = (-1, 0, 1, 2):
        // d_(3,3,3) d_empty - d_(3,3,2) d_(1) + d_(3,3,1) d_(1,1)
        //   - d_(3,3) d_(1,1,1) = 0.
        let rel = pluecker_relation(3, &[-3, -2], &[-1, 0, 1, 2]).unwrap();
        let expect = PlueckerRelation {
            terms: vec![
                (1, p("[]"), p("[3,3,3]")),
                (-1, p("[1]"), p("[3,3,2]")),
                (1, p("[1,1]"), p("[3,3,1]")),
                (-1, p("[1,1,1]"), p("[3,3]")),
            ],
        }
        .normalised();
        assert_eq!(rel, expect);
    }

    #[test]
    fn degenerate_relation_cancels() {
        // I contained in J: all terms cancel in unordered pairs.
        let rel = pluecker_relation(3, &[-3, -2], &[-3, -2, -1, 0]).unwrap();
        assert!(rel.is_empty(), "{}", rel);
    }

    #[test]
    fn hook_relation_at_1_1_is_kp() {
        let rel = hook_relation(1, 1).unwrap();
        assert!(rel.same_up_to_sign(&kp_relation()));
        assert_eq!(rel.clone().normalised().terms, kp_relation().terms);
    }

    #[test]
    fn hook_relation_labels_expand() {
        // a=2, b=1: (2|1) = (3,1,1), (1|0) = (2), (2,1|1,0) = (3,3,1)? No:
        // derive from Frobenius coordinates and trust the oracle tests for
        // the identity itself.
        let rel = hook_relation(2, 1).unwrap();
        let labels: Vec<Partition> = rel
            .terms
            .iter()
            .flat_map(|(_, a, b)| [a.clone(), b.clone()])
            .collect();
        assert!(labels.contains(&p("(2|1)")));
        assert!(labels.contains(&p("(1|0)")));
        assert!(labels.contains(&p("(2,1|1,0)")));
        assert!(labels.contains(&p("[]")));
    }

    #[test]
    fn diag_relation_k1() {
        // d_(1) d_(2,1) = d_(2) d_(1,1) + d_empty d_(2,2).
        let rel = diag_relation(1);
        let expect = PlueckerRelation {
            terms: vec![
                (1, p("[1]"), p("[2,1]")),
                (-1, p("[1,1]"), p("[2]")),
                (-1, p("[]"), p("[2,2]")),
            ],
        }
        .normalised();
        assert_eq!(rel, expect);
        assert!(rel.same_up_to_sign(&kp_relation()));
    }

    #[test]
    fn diag_relation_k2_labels() {
        // d_(2,2) d_(3,3,2) = d_(3,3) d_(2,2,2) + d_(2,1) d_(3,3,3).
        let rel = diag_relation(2);
        let expect = PlueckerRelation {
            terms: vec![
                (1, p("[2,2]"), p("[3,3,2]")),
                (-1, p("[2,2,2]"), p("[3,3]")),
                (-1, p("[2,1]"), p("[3,3,3]")),
            ],
        }
        .normalised();
        assert_eq!(rel, expect);
    }
}
