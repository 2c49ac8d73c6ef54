//! Box-enlarging morphisms between rectangle seeds.
//!
//! On index tuples the map prepends the interval `[-m', -m-1]`; on
//! partition labels it is the identity embedding of the same Young diagram
//! into the larger box. Frozen maximal rectangles of the small seed melt
//! unless they are still maximal in the large one.

use std::collections::BTreeMap;

use crate::seed::{MeltingMorphismSpec, MorphImage};

use super::partition::Partition;
use super::rect::{label_var, rect_seed};
use super::GrassError;

/// The melting morphism spec from `rect_seed(m, n)` to
/// `rect_seed(m2, n2)`; label-level identity.
pub fn r_map(m: u32, n: u32, m2: u32, n2: u32) -> Result<MeltingMorphismSpec, GrassError> {
    if m2 < m || n2 < n {
        return Err(GrassError::BoxShrinks);
    }
    let mut image = BTreeMap::new();
    let empty = label_var(&Partition::empty());
    image.insert(empty, MorphImage::Var(empty));
    for i in 1..=m {
        for j in 1..=n {
            let v = label_var(&Partition::rectangle(i, j));
            image.insert(v, MorphImage::Var(v));
        }
    }
    // Touch both seeds so all names are registered consistently.
    let _ = rect_seed(m, n);
    let _ = rect_seed(m2, n2);
    Ok(MeltingMorphismSpec::new(image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::finite_label;
    use crate::registry;
    use crate::seed::check_melting_morphism;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn index_tuple_semantics() {
        // (2,2) -> (3,3): d_{-2,0} becomes d_{-3,-2,0}, both labelled (1).
        let small = finite_label(&p("[1]"), 2, 2).unwrap();
        let large = finite_label(&p("[1]"), 3, 3).unwrap();
        assert_eq!(small, vec![-2, 0]);
        assert_eq!(large, vec![-3, -2, 0]);
        assert_eq!(&large[1..], &small[..]);
    }

    #[test]
    fn identity_r_map() {
        let f = r_map(2, 2, 2, 2).unwrap();
        let s = rect_seed(2, 2);
        for v in &s.vars {
            assert_eq!(f.get(v.id), Some(MorphImage::Var(v.id)));
        }
        let report = check_melting_morphism(&f, &s, &s, 2).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn shrinking_box_rejected() {
        assert!(matches!(r_map(3, 3, 2, 3), Err(GrassError::BoxShrinks)));
    }

    #[test]
    fn maximal_rectangles_melt() {
        let _ = r_map(2, 2, 3, 3).unwrap();
        let small = rect_seed(2, 2);
        let large = rect_seed(3, 3);
        // 2 x 1 is frozen in the small seed, exchangeable in the large one.
        let v = registry::lookup("d[1,1]").unwrap();
        assert!(!small.is_exchangeable(v));
        assert!(large.is_exchangeable(v));
        // The full rectangle stays frozen only while still maximal: 2 x 2
        // melts inside 3 x 3.
        let w = registry::lookup("d[2,2]").unwrap();
        assert!(large.is_exchangeable(w));
    }
}
