//! Exponent vectors in `N^s`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// An exponent vector `α ∈ N^s`, doubling as the monomial `x^α`.
///
/// The derived `Ord` is plain lexicographic on the exponents and is only used
/// for map keys. Use [`MultiIndex::revlex_cmp`] or a
/// [`MonomialOrder`](crate::order::MonomialOrder) when a term order matters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(SmallVec<[u32; 4]>);

impl MultiIndex {
    pub fn new(exponents: &[u32]) -> Self {
        MultiIndex(SmallVec::from_slice(exponents))
    }

    pub fn zero(nvars: usize) -> Self {
        MultiIndex(SmallVec::from_elem(0, nvars))
    }

    /// The `i`-th unit vector (0-based).
    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut m = Self::zero(nvars);
        m.0[i] = 1;
        m
    }

    /// Ambient variable count `s`.
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// `|α| = Σ α_i`.
    pub fn norm(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `α! = Π α_i!`.
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &e in &self.0 {
            for k in 2..=e {
                acc *= k;
            }
        }
        acc
    }

    /// Componentwise `self ≤ other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &MultiIndex) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self − other`, defined only when `other ≤ self`.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if self.nvars() != other.nvars() {
            return None;
        }
        let mut out = SmallVec::with_capacity(self.nvars());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(MultiIndex(out))
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.nvars(), other.nvars());
        MultiIndex(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is a pure power `x_i^k` with `k ≥ 1`, returns `i`.
    pub fn pure_power_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// `Π C(α_i, γ_i)`; zero unless `γ ≤ α`.
    pub fn binomial(&self, lower: &MultiIndex) -> BigInt {
        let mut acc = BigInt::one();
        for (&a, &g) in self.0.iter().zip(lower.0.iter()) {
            if g > a {
                return BigInt::from(0);
            }
            acc *= binomial(a as u64, g as u64);
        }
        acc
    }

    /// Reverse-lexicographic tie break: the monomial with the smaller exponent in
    /// the last differing variable is the larger one.
    pub fn revlex_cmp(&self, other: &MultiIndex) -> Ordering {
        for (a, b) in self.0.iter().zip(other.0.iter()).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    /// All multi-indices of norm exactly `k` in `nvars` variables, in
    /// descending graded reverse-lex order (`x1^k` first).
    pub fn of_norm(nvars: usize, k: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut buf = vec![0u32; nvars];
        fill_norm(&mut buf, 0, k, &mut out);
        out.sort_by(|a, b| b.revlex_cmp(a));
        out
    }

    /// All multi-indices with `lo ≤ |α| ≤ hi`, ordered by norm ascending and
    /// then descending reverse-lex inside each norm.
    pub fn graded_range(nvars: usize, lo: u32, hi: u32) -> Vec<MultiIndex> {
        (lo..=hi).flat_map(|k| Self::of_norm(nvars, k)).collect()
    }
}

fn fill_norm(buf: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    if pos + 1 == buf.len() {
        buf[pos] = remaining;
        out.push(MultiIndex::new(buf));
        return;
    }
    if buf.is_empty() {
        return;
    }
    for e in 0..=remaining {
        buf[pos] = e;
        fill_norm(buf, pos + 1, remaining - e, out);
    }
}

/// `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n, k)` saturating into `u128`, for size estimates.
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_and_factorial() {
        let a = MultiIndex::new(&[3, 0, 2]);
        assert_eq!(a.norm(), 5);
        assert_eq!(a.factorial(), BigInt::from(12));
        assert_eq!(MultiIndex::zero(2).factorial(), BigInt::from(1));
    }

    #[test]
    fn partial_order_and_subtraction() {
        let a = MultiIndex::new(&[2, 1]);
        let b = MultiIndex::new(&[1, 1]);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(a.checked_sub(&b), Some(MultiIndex::new(&[1, 0])));
        assert_eq!(b.checked_sub(&a), None);
    }

    #[test]
    fn enumeration_sizes_match_binomials() {
        for s in 1..=3usize {
            for n in 1..=4u32 {
                let rows = MultiIndex::graded_range(s, 0, n - 1).len() as u64;
                let cols = MultiIndex::graded_range(s, 1, n).len() as u64;
                assert_eq!(rows as u128, binomial_u128(n as u64 + s as u64 - 1, s as u64));
                assert_eq!(cols as u128 + 1, binomial_u128(n as u64 + s as u64, s as u64));
            }
        }
    }

    #[test]
    fn degree_two_order_matches_grevlex() {
        let got = MultiIndex::of_norm(2, 2);
        let want = vec![
            MultiIndex::new(&[2, 0]),
            MultiIndex::new(&[1, 1]),
            MultiIndex::new(&[0, 2]),
        ];
        assert_eq!(got, want);
        let three = MultiIndex::of_norm(3, 2);
        // x^2, xy, y^2, xz, yz, z^2
        assert_eq!(three[2], MultiIndex::new(&[0, 2, 0]));
        assert_eq!(three[3], MultiIndex::new(&[1, 0, 1]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::from(0));
        assert_eq!(binomial_u128(19, 10), 92378);
        assert_eq!(MultiIndex::new(&[3, 2]).binomial(&MultiIndex::new(&[2, 1])), BigInt::from(6));
    }
}
