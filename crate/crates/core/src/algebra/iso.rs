use alloc::vec::Vec;

use itertools::Itertools;

use super::OperationTables;

/// Searches all bijections for one carrying `a` onto `b`; returns it as
/// the image list `[σ(0), …, σ(n-1)]`.
pub fn mcb_isomorphic(a: &OperationTables, b: &OperationTables) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let n = a.order();
    (0..n).permutations(n).find(|p| a.relabel(p) == *b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{fixtures, McBiquandle};

    #[test]
    fn self_iso_is_identity() {
        let x = fixtures::ex26();
        assert_eq!(mcb_isomorphic(&x, &x), Some(alloc::vec![0, 1, 2]));
    }

    #[test]
    fn swap_relabelling_is_found() {
        let x = fixtures::ex26();
        let swapped = x.relabel(&[2, 1, 0]);
        let found = mcb_isomorphic(&x, &swapped).unwrap();
        assert_eq!(x.relabel(&found), swapped);
        // the swap is the only bijection other than ones fixing x
        assert!(found == alloc::vec![2, 1, 0] || x.relabel(&found) == swapped);
    }

    #[test]
    fn order_mismatch() {
        let two = McBiquandle::trivial(2).unwrap();
        assert_eq!(mcb_isomorphic(&two, &fixtures::ex26()), None);
    }
}
