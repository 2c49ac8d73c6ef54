//! Partitions, Maya sequences and Frobenius coordinates.
//!
//! Three interconvertible labels for the Pluecker variables `d_lambda`. A
//! Maya sequence of charge `c` is a strictly decreasing integer sequence
//! `(a_i)` with `a_k = c - k` for all large `k`; the bijection with
//! partitions is `a_i = lambda_i - i + c`. Frobenius coordinates `(alpha |
//! beta)` record arm and leg lengths of the diagonal boxes.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::GrassError;

/// A partition: weakly decreasing positive parts (empty = the empty
/// partition).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds from a not-necessarily-trimmed weakly decreasing list
    /// (trailing zeros allowed).
    pub fn from_untrimmed(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    /// The rectangle with `height` rows of width `width`; empty if either
    /// side is zero.
    pub fn rectangle(height: u32, width: u32) -> Self {
        if height == 0 || width == 0 {
            Partition::empty()
        } else {
            Partition {
                parts: vec![width; height as usize],
            }
        }
    }

    /// Hook partition `(a+1, 1^b)` with arm `a` and leg `b`.
    pub fn hook(arm: u32, leg: u32) -> Self {
        let mut parts = vec![arm + 1];
        parts.extend(std::iter::repeat(1).take(leg as usize));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let width = self.parts[0] as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn fits_box(&self, height: u32, width: u32) -> bool {
        self.len() as u32 <= height && self.part(0) <= width
    }

    /// Number of boxes in the symmetric difference of the diagrams.
    pub fn diagram_distance(&self, other: &Partition) -> u64 {
        let rows = self.len().max(other.len());
        (0..rows)
            .map(|i| (self.part(i) as i64 - other.part(i) as i64).unsigned_abs())
            .sum()
    }

    /// All partitions of `n`.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn gen(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let hi = rem.min(max);
            for p in (1..=hi).rev() {
                cur.push(p);
                gen(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        gen(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `size_bound` boxes (including the empty
    /// one).
    pub fn all_up_to_size(size_bound: u32) -> Vec<Partition> {
        (0..=size_bound).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions fitting in an `m x n` box (including the empty one).
    pub fn all_in_box(m: u32, n: u32) -> Vec<Partition> {
        fn gen(rows_left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::from_untrimmed(cur.clone()));
            if rows_left == 0 {
                return;
            }
            for p in (1..=max).rev() {
                cur.push(p);
                gen(rows_left - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        gen(m, n, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = GrassError;

    /// Accepts `[3,2]`, `(3,2)`, `[]`, `()` and Frobenius form `(2,0|1,0)`.
    fn from_str(s: &str) -> Result<Self, GrassError> {
        let s = s.trim();
        let inner = if (s.starts_with('[') && s.ends_with(']'))
            || (s.starts_with('(') && s.ends_with(')'))
        {
            &s[1..s.len() - 1]
        } else {
            s
        };
        let bad = || GrassError::BadPartitionLiteral(s.to_string());
        if let Some((arms, legs)) = inner.split_once('|') {
            let parse_side = |side: &str| -> Result<Vec<u32>, GrassError> {
                side.split(',')
                    .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
                    .collect()
            };
            let arms = parse_side(arms)?;
            let legs = parse_side(legs)?;
            let frob = FrobeniusForm::new(arms, legs).map_err(|_| bad())?;
            return Ok(frob.to_partition());
        }
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, GrassError> = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect();
        let mut parts = parts?;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(bad());
        }
        Ok(Partition::new(parts))
    }
}

/// A Maya sequence: charge plus the minimal head after which `a_k = c - k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MayaSeq {
    charge: i64,
    head: Vec<i64>,
}

impl MayaSeq {
    pub fn new(charge: i64, mut head: Vec<i64>) -> Result<Self, GrassError> {
        if !head.windows(2).all(|w| w[0] > w[1]) {
            return Err(GrassError::InvalidMaya("head not strictly decreasing".into()));
        }
        if let Some(&last) = head.last() {
            if last < charge - head.len() as i64 {
                return Err(GrassError::InvalidMaya(
                    "head drops below the eventual tail".into(),
                ));
            }
        }
        // Trim to the minimal head.
        while let Some(&last) = head.last() {
            if last == charge - head.len() as i64 {
                head.pop();
            } else {
                break;
            }
        }
        Ok(MayaSeq { charge, head })
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    /// The i-th entry (1-based).
    pub fn entry(&self, i: usize) -> i64 {
        assert!(i >= 1);
        if i <= self.head.len() {
            self.head[i - 1]
        } else {
            self.charge - i as i64
        }
    }

    /// The rank: smallest `j` with `a_k = c - k` for all `k >= j`.
    pub fn rank(&self) -> usize {
        self.head.len() + 1
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    /// First `k` entries.
    pub fn prefix(&self, k: usize) -> Vec<i64> {
        (1..=k).map(|i| self.entry(i)).collect()
    }

    pub fn to_partition(&self) -> Partition {
        let parts: Vec<u32> = (1..=self.head.len())
            .map(|i| (self.entry(i) + i as i64 - self.charge) as u32)
            .collect();
        Partition::from_untrimmed(parts)
    }
}

impl Partition {
    /// The Maya sequence `a_i = lambda_i - i + c`.
    pub fn to_maya(&self, charge: i64) -> MayaSeq {
        let head: Vec<i64> = (1..=self.len())
            .map(|i| self.part(i - 1) as i64 - i as i64 + charge)
            .collect();
        MayaSeq::new(charge, head).expect("partition always yields a valid Maya sequence")
    }

    /// Charge-zero Maya set, split into its finite deviation from the
    /// negative integers: (arms present in `Z_{>=0}`, negatives missing
    /// from the sequence).
    pub fn maya_deviation(&self) -> (BTreeSet<i64>, BTreeSet<i64>) {
        let frob = self.to_frobenius();
        let arms: BTreeSet<i64> = frob.arms().iter().map(|&a| a as i64).collect();
        let removed: BTreeSet<i64> = frob.legs().iter().map(|&b| -(b as i64) - 1).collect();
        (arms, removed)
    }

    /// Frobenius coordinates, computed from the Maya-set complements: arms
    /// are the nonnegative entries of the charge-0 Maya sequence, legs come
    /// from the missing negative integers via `beta = -missing - 1`.
    pub fn to_frobenius(&self) -> FrobeniusForm {
        let maya = self.to_maya(0);
        let arms: Vec<u32> = maya
            .head()
            .iter()
            .copied()
            .filter(|&a| a >= 0)
            .map(|a| a as u32)
            .collect();
        let present: BTreeSet<i64> = maya.head().iter().copied().filter(|&a| a < 0).collect();
        let low = maya.charge() - maya.rank() as i64;
        let mut legs: Vec<u32> = Vec::new();
        let mut k = -1i64;
        while k > low {
            if !present.contains(&k) {
                legs.push((-k - 1) as u32);
            }
            k -= 1;
        }
        legs.sort_unstable_by(|a, b| b.cmp(a));
        FrobeniusForm::new(arms, legs).expect("complement sets always balance")
    }
}

/// Frobenius coordinates `(alpha_1,...,alpha_l | beta_1,...,beta_l)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrobeniusForm {
    arms: Vec<u32>,
    legs: Vec<u32>,
}

impl FrobeniusForm {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Result<Self, GrassError> {
        if arms.len() != legs.len() {
            return Err(GrassError::InvalidFrobenius("unequal lengths".into()));
        }
        let strict = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]);
        if !strict(&arms) || !strict(&legs) {
            return Err(GrassError::InvalidFrobenius(
                "arms and legs must strictly decrease".into(),
            ));
        }
        Ok(FrobeniusForm { arms, legs })
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    pub fn legs(&self) -> &[u32] {
        &self.legs
    }

    pub fn diagonal_len(&self) -> usize {
        self.arms.len()
    }

    pub fn to_partition(&self) -> Partition {
        // Reassemble the charge-0 Maya set from the complements.
        let removed: BTreeSet<i64> = self.legs.iter().map(|&b| -(b as i64) - 1).collect();
        let mut head: Vec<i64> = self.arms.iter().map(|&a| a as i64).collect();
        let low = -(self.legs.iter().map(|&b| b as i64 + 1).max().unwrap_or(0)) - 1;
        let mut k = -1i64;
        while k > low {
            if !removed.contains(&k) {
                head.push(k);
            }
            k -= 1;
        }
        let maya = MayaSeq::new(0, head).expect("reassembled Maya set is strictly decreasing");
        maya.to_partition()
    }
}

impl fmt::Display for FrobeniusForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({}|{})", side(&self.arms), side(&self.legs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn maya_of_figure_example() {
        // lambda = (6,4,3,3,2,1) has charge-0 Maya head (5,2,0,-1,-3,-5)
        // with tail -7,-8,...; equivalently arms {5,2,0} and missing
        // negatives {-2,-4,-6}.
        let lam = p(&[6, 4, 3, 3, 2, 1]);
        let maya = lam.to_maya(0);
        assert_eq!(maya.prefix(9), vec![5, 2, 0, -1, -3, -5, -7, -8, -9]);
        let (arms, removed) = lam.maya_deviation();
        assert_eq!(arms.into_iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(removed.into_iter().collect::<Vec<_>>(), vec![-6, -4, -2]);
    }

    #[test]
    fn maya_of_empty() {
        let maya = Partition::empty().to_maya(0);
        assert_eq!(maya.prefix(3), vec![-1, -2, -3]);
        assert_eq!(maya.rank(), 1);
    }

    #[test]
    fn charge_shifts_entries() {
        let maya = p(&[2, 1]).to_maya(3);
        assert_eq!(maya.prefix(4), vec![4, 2, 0, -1]);
        assert_eq!(maya.to_partition(), p(&[2, 1]));
    }

    #[test]
    fn frobenius_of_3_2() {
        let f = p(&[3, 2]).to_frobenius();
        assert_eq!(f.arms(), &[2, 0]);
        assert_eq!(f.legs(), &[1, 0]);
        assert_eq!(f.to_partition(), p(&[3, 2]));
    }

    #[test]
    fn frobenius_of_hook() {
        for a in 0..4u32 {
            for b in 0..4u32 {
                let h = Partition::hook(a, b);
                let f = h.to_frobenius();
                assert_eq!(f.arms(), &[a]);
                assert_eq!(f.legs(), &[b]);
                assert_eq!(f.to_partition(), h);
            }
        }
    }

    /// Independent Frobenius computation by reading arm/leg lengths off the
    /// Young diagram directly.
    fn frobenius_direct(lam: &Partition) -> (Vec<u32>, Vec<u32>) {
        let conj = lam.conjugate();
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        let mut i = 0usize;
        while lam.part(i) as usize > i {
            arms.push(lam.part(i) - i as u32 - 1);
            legs.push(conj.part(i) - i as u32 - 1);
            i += 1;
        }
        (arms, legs)
    }

    #[test]
    fn frobenius_matches_direct_reading() {
        for lam in Partition::all_up_to_size(9) {
            let f = lam.to_frobenius();
            let (arms, legs) = frobenius_direct(&lam);
            assert_eq!(f.arms(), arms.as_slice(), "lambda = {}", lam);
            assert_eq!(f.legs(), legs.as_slice(), "lambda = {}", lam);
        }
    }

    #[test]
    fn round_trips() {
        for lam in Partition::all_up_to_size(10) {
            assert_eq!(lam.to_maya(0).to_partition(), lam);
            assert_eq!(lam.to_maya(-4).to_partition(), lam);
            assert_eq!(lam.to_frobenius().to_partition(), lam);
        }
    }

    #[test]
    fn conjugate_involutive() {
        for lam in Partition::all_up_to_size(8) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!("[3,2]".parse::<Partition>().unwrap(), p(&[3, 2]));
        assert_eq!("(3,2)".parse::<Partition>().unwrap(), p(&[3, 2]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(2,0|1,0)".parse::<Partition>().unwrap(), p(&[3, 2]));
        assert!("(2,9)".parse::<Partition>().is_err());
    }

    #[test]
    fn box_enumeration() {
        // Partitions in a 3x3 box: binomial(6,3) = 20.
        assert_eq!(Partition::all_in_box(3, 3).len(), 20);
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
    }
}

