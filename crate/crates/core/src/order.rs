//! Weighted-degree reverse-lexicographic monomial order.

use std::cmp::Ordering;

use crate::multi_index::MultiIndex;
use crate::weights::WeightSystem;

/// Weighted degree first, reverse lexicographic on exponents to break ties.
///
/// With positive weights this is a multiplicative well-order, and every
/// weighted homogeneous ideal stays homogeneous under reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    weights: WeightSystem,
}

impl MonomialOrder {
    pub fn new(weights: WeightSystem) -> Self {
        MonomialOrder { weights }
    }

    pub fn standard(nvars: usize) -> Self {
        MonomialOrder::new(WeightSystem::standard(nvars))
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.nvars()
    }

    pub fn cmp(&self, a: &MultiIndex, b: &MultiIndex) -> Ordering {
        self.weights
            .degree(a)
            .cmp(&self.weights.degree(b))
            .then_with(|| a.revlex_cmp(b))
    }

    pub fn key(&self, m: MultiIndex) -> MonoKey {
        MonoKey { degree: self.weights.degree(&m), exps: m }
    }
}

/// A monomial with its weighted degree cached, ordered by [`MonomialOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonoKey {
    pub degree: u64,
    pub exps: MultiIndex,
}

impl MonoKey {
    pub fn mul(&self, other: &MonoKey) -> MonoKey {
        MonoKey { degree: self.degree + other.degree, exps: self.exps.add(&other.exps) }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &MonoKey) -> Option<MonoKey> {
        Some(MonoKey { degree: self.degree - other.degree, exps: self.exps.checked_sub(&other.exps)? })
    }
}

impl Ord for MonoKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.revlex_cmp(&other.exps))
    }
}

impl PartialOrd for MonoKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e)
    }

    #[test]
    fn graded_then_revlex() {
        let o = MonomialOrder::standard(3);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[1, 1, 0])), Ordering::Less);
    }

    #[test]
    fn weights_dominate() {
        let o = MonomialOrder::new(WeightSystem::new(vec![3, 2]).unwrap());
        // deg y^2 = 4 beats deg x = 3; x^2 and y^3 tie at 6 and revlex prefers x^2.
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[0, 3])), Ordering::Greater);
    }

    #[test]
    fn key_order_agrees_with_order() {
        let o = MonomialOrder::new(WeightSystem::new(vec![2, 1, 3]).unwrap());
        let all = MultiIndex::graded_range(3, 0, 3);
        for a in &all {
            for b in &all {
                assert_eq!(o.key(a.clone()).cmp(&o.key(b.clone())), o.cmp(a, b));
            }
        }
    }
}
