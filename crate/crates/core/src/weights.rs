//! Positive integer weight vectors and the weighted-degree functional.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::multi_index::MultiIndex;

/// Weights `w ∈ N_{≥1}^s`; `deg_w(x^α) = α·w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct WeightSystem(Vec<u32>);

impl WeightSystem {
    pub fn new(weights: Vec<u32>) -> Result<Self, Error> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("at least one weight is required".into()));
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeights(format!(
                "weight {} is zero; weights must be positive",
                pos + 1
            )));
        }
        Ok(WeightSystem(weights))
    }

    /// All weights equal to one: the standard grading.
    pub fn standard(nvars: usize) -> Self {
        WeightSystem(vec![1; nvars])
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn max(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn min(&self) -> u32 {
        self.0.iter().copied().min().unwrap_or(0)
    }

    pub fn degree(&self, m: &MultiIndex) -> u64 {
        debug_assert_eq!(m.nvars(), self.nvars());
        m.exponents()
            .iter()
            .zip(&self.0)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    /// Weights sorted descending together with the permutation used:
    /// `sorted[k] = w[perm[k]]`. Ties keep their original order.
    pub fn sorted_descending(&self) -> (Vec<u32>, Vec<usize>) {
        let mut perm: Vec<usize> = (0..self.0.len()).collect();
        perm.sort_by(|&a, &b| self.0[b].cmp(&self.0[a]));
        (perm.iter().map(|&i| self.0[i]).collect(), perm)
    }
}

impl TryFrom<Vec<u32>> for WeightSystem {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self, Error> {
        WeightSystem::new(v)
    }
}

impl From<WeightSystem> for Vec<u32> {
    fn from(w: WeightSystem) -> Vec<u32> {
        w.0
    }
}

impl std::str::FromStr for WeightSystem {
    type Err = Error;

    /// Parses `w1,w2,...`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parsed: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        match parsed {
            Ok(v) => WeightSystem::new(v),
            Err(e) => Err(Error::InvalidWeights(format!("cannot parse {s:?}: {e}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_and_empty() {
        assert!(WeightSystem::new(vec![]).is_err());
        assert!(WeightSystem::new(vec![1, 0]).is_err());
        assert!("3,x".parse::<WeightSystem>().is_err());
    }

    #[test]
    fn degree_and_sorting() {
        let w: WeightSystem = "2,3".parse().unwrap();
        assert_eq!(w.degree(&MultiIndex::new(&[3, 0])), 6);
        assert_eq!(w.degree(&MultiIndex::new(&[0, 2])), 6);
        let (sorted, perm) = w.sorted_descending();
        assert_eq!(sorted, vec![3, 2]);
        assert_eq!(perm, vec![1, 0]);
    }
}
