//! The quadrilateral quiver Q(m): a cluster quiver for the square
//! Grassmannian box in which every exchangeable vertex is four-valent.
//!
//! Vertices sit on an m x m grid plus one extra empty vertex. The vertex
//! in grid row `k` of the `r`-th diagonal above the main one carries the
//! label with consecutive arms `a, a-1, ..., a-k` and legs
//! `b, b-1, ..., b-k` where `b = a - r`; positions below the main diagonal
//! carry the conjugate labels. The last column and last row hold the
//! frozen maximal rectangles. Arrows follow two alternating local
//! configurations, fixed by the parity of `r + k`, and the whole quiver is
//! reflection symmetric under conjugation of labels.

use super::partition::{FrobeniusForm, Partition};
use super::quiver::PlueckerQuiver;
use std::collections::BTreeMap;

/// Consecutive-hook label: arms `a, a-1, ..., a-k`, legs `b, ..., b-k`.
fn staircase_label(a: i64, b: i64, k: i64) -> Option<Partition> {
    if k < 0 || a < k || b < k || a < 0 || b < 0 {
        return None;
    }
    let arms: Vec<u32> = (0..=k).map(|i| (a - i) as u32).collect();
    let legs: Vec<u32> = (0..=k).map(|i| (b - i) as u32).collect();
    Some(
        FrobeniusForm::new(arms, legs)
            .expect("consecutive arms and legs strictly decrease")
            .to_partition(),
    )
}

/// Grid coordinates: `(row, col)` with `0 <= row, col < m`; the label at a
/// position on or above the main diagonal (`col >= row`) is
/// `staircase(a(r,k), a(r,k)-r; k)` with `r = col - row`, `k = row`;
/// below the diagonal the conjugate.
fn grid_label(m: i64, row: i64, col: i64) -> Partition {
    if col >= row {
        let r = col - row;
        let k = row;
        let a = param_a(m, r, k);
        staircase_label(a, a - r, k).expect("grid parameters are valid")
    } else {
        grid_label(m, col, row).conjugate()
    }
}

/// The arm parameter on the `r`-th diagonal at height `k`: descends from
/// `m-1` at the frozen top (`k = m-1-r`), dropping by one at every step
/// whose parity matches the local configuration rule.
fn param_a(m: i64, r: i64, k: i64) -> i64 {
    let top = m - 1 - r;
    let drops = (k..top).filter(|j| (r + j) % 2 == 1).count() as i64;
    m - 1 - drops
}

/// The quadrilateral quiver Q(m) built directly from the grid rules.
pub fn quad_quiver(m: u32) -> PlueckerQuiver {
    assert!(m >= 2, "quad quiver needs m >= 2");
    let m = m as i64;
    let mut labels: Vec<Partition> = Vec::new();
    let mut frozen: Vec<bool> = Vec::new();
    let mut position: BTreeMap<Partition, usize> = BTreeMap::new();
    labels.push(Partition::empty());
    frozen.push(true);
    position.insert(Partition::empty(), 0);
    for row in 0..m {
        for col in 0..m {
            let label = grid_label(m, row, col);
            let is_frozen = row == m - 1 || col == m - 1;
            position.insert(label.clone(), labels.len());
            labels.push(label);
            frozen.push(is_frozen);
        }
    }

    // Arrows emitted per exchangeable vertex from the two local
    // configurations; each arrow is recorded once (from its source) and
    // mirrored into the skew rows below.
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    let mut push_arrow = |src: Option<&Partition>,
                          dst: Option<&Partition>,
                          position: &BTreeMap<Partition, usize>| {
        if let (Some(s), Some(d)) = (src, dst) {
            if let (Some(&ps), Some(&pd)) = (position.get(s), position.get(d)) {
                arrows.push((ps, pd));
            }
        }
    };
    for row in 0..m - 1 {
        for col in 0..m - 1 {
            if col < row {
                continue; // lower half handled by reflection
            }
            let r = col - row;
            let k = row;
            let a = param_a(m, r, k);
            let b = a - r;
            let here = grid_label(m, row, col);
            let lbl = |aa: i64, bb: i64, kk: i64| {
                if kk < 0 && aa >= 0 && bb >= 0 {
                    // removing the whole hook chain leaves the empty label
                    Some(Partition::empty())
                } else {
                    staircase_label(aa, bb, kk)
                }
            };
            if (r + k) % 2 == 1 {
                // in from above-diagonal and from below, out to the sides
                push_arrow(lbl(a + 1, b + 1, k + 1).as_ref(), Some(&here), &position);
                push_arrow(lbl(a, b, k - 1).as_ref(), Some(&here), &position);
                push_arrow(Some(&here), lbl(a + 1, b, k).as_ref(), &position);
                push_arrow(Some(&here), lbl(a, b + 1, k).as_ref(), &position);
            } else {
                // out along the diagonal, in from the sides
                push_arrow(Some(&here), lbl(a, b, k + 1).as_ref(), &position);
                push_arrow(Some(&here), lbl(a - 1, b - 1, k - 1).as_ref(), &position);
                push_arrow(lbl(a, b - 1, k).as_ref(), Some(&here), &position);
                push_arrow(lbl(a - 1, b, k).as_ref(), Some(&here), &position);
            }
        }
    }
    // Reflection symmetry: conjugate every arrow.
    let conj_pos: Vec<usize> = labels
        .iter()
        .map(|l| position[&l.conjugate()])
        .collect();
    let mut all: Vec<(usize, usize)> = arrows
        .iter()
        .flat_map(|&(s, d)| [(s, d), (conj_pos[s], conj_pos[d])])
        .collect();
    all.sort_unstable();
    all.dedup();

    let mut quiver = PlueckerQuiver::bare(labels, frozen);
    for (s, d) in all {
        quiver.add_arrow(s, d, 1);
    }
    quiver
}
