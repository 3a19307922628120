//! Order-`n` Jacobian matrices and their maximal minors.
//!
//! Rows are indexed by `β` with `|β| ≤ n−1`, columns by `α` with
//! `1 ≤ |α| ≤ n`, and the `(β, α)` entry is the Hasse derivative of `f` at
//! `α − β` (zero when `α − β` is undefined or zero). Both index lists follow
//! the canonical order: by norm, then descending reverse-lex, which for
//! `s = n = 2` reproduces the familiar 3×5 layout
//! `(f1 f2 ½f11 f12 ½f22 / 0 0 f1 f2 0 / 0 0 0 f1 f2)`.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::multi_index::{binomial_u128, MultiIndex};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::weights::WeightSystem;

/// What sits at entries with `β = α`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Zero on the `β = α` entries.
    #[default]
    ZeroDiagonal,
    /// `f` on the `β = α` entries.
    FDiagonal,
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "zero" | "zero-diagonal" => Ok(Variant::ZeroDiagonal),
            "f" | "f-diagonal" => Ok(Variant::FDiagonal),
            _ => Err(format!("unknown variant {s:?}; expected 'zero' or 'f'")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct JacobianMatrix {
    pub n: u32,
    pub f: Polynomial,
    pub rows: Vec<MultiIndex>,
    pub cols: Vec<MultiIndex>,
    /// Row-major, `rows.len() × cols.len()`.
    pub entries: Vec<Vec<Polynomial>>,
    pub variant: Variant,
}

impl JacobianMatrix {
    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    /// Number of maximal minors, `C(N−1, M)`.
    pub fn subset_count(&self) -> u128 {
        binomial_u128(self.num_cols() as u64, self.num_rows() as u64)
    }

    /// The square submatrix on the given (ascending) columns.
    pub fn submatrix(&self, cols: &[usize]) -> Vec<Vec<Polynomial>> {
        self.entries.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect()
    }

    pub fn column_labels(&self, cols: &[usize]) -> Vec<MultiIndex> {
        cols.iter().map(|&c| self.cols[c].clone()).collect()
    }
}

/// Row and column index sets for order `n` in `s` variables.
pub fn index_sets(n: u32, s: usize) -> (Vec<MultiIndex>, Vec<MultiIndex>) {
    let rows = MultiIndex::graded_range(s, 0, n.saturating_sub(1));
    let cols = MultiIndex::graded_range(s, 1, n);
    (rows, cols)
}

pub fn build_jacobian(f: &Polynomial, n: u32, variant: Variant) -> Result<JacobianMatrix, Error> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    let s = f.nvars();
    let (rows, cols) = index_sets(n, s);
    let entries = rows
        .iter()
        .map(|beta| {
            cols.iter()
                .map(|alpha| match alpha.checked_sub(beta) {
                    Some(gamma) if gamma.is_zero() => match variant {
                        Variant::ZeroDiagonal => Polynomial::zero(s),
                        Variant::FDiagonal => f.clone(),
                    },
                    Some(gamma) => f.hasse_derivative(&gamma).expect("same dimension"),
                    None => Polynomial::zero(s),
                })
                .collect()
        })
        .collect();
    Ok(JacobianMatrix { n, f: f.clone(), rows, cols, entries, variant })
}

/// Generators of the maximal-minor ideal, normalized and deduplicated.
#[derive(Clone, Debug)]
pub struct MinorIdeal {
    pub generators: Vec<Polynomial>,
    /// For each generator, every column subset (ascending column indices)
    /// whose minor is a nonzero rational multiple of it.
    pub sources: Vec<Vec<Vec<usize>>>,
    /// Number of nonzero minors before deduplication.
    pub nonzero_minors: usize,
    /// `C(N−1, M)`.
    pub subset_count: u128,
}

impl MinorIdeal {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Weighted degree of each generator (`None` if not homogeneous).
    pub fn degrees(&self, w: &WeightSystem) -> Vec<Option<u64>> {
        self.generators
            .iter()
            .map(|g| g.weighted_degree(w).filter(|d| d.homogeneous).map(|d| d.degree))
            .collect()
    }
}

/// All maximal minors of `j`, computed exactly.
///
/// Fails with [`Error::TooManyMinors`] instead of truncating when the number
/// of column subsets exceeds `cap`.
pub fn maximal_minors(j: &JacobianMatrix, cap: usize) -> Result<MinorIdeal, Error> {
    let subset_count = j.subset_count();
    if subset_count > cap as u128 || j.num_cols() > 128 {
        return Err(Error::TooManyMinors { subsets: subset_count, cap });
    }
    let raw = all_minors(j);
    let nonzero_minors = raw.len();
    let order = MonomialOrder::standard(j.nvars());

    let mut dedup: HashMap<Polynomial, Vec<Vec<usize>>> = HashMap::new();
    for (mask, minor) in raw {
        dedup.entry(minor.primitive(&order)).or_default().push(mask_to_cols(mask));
    }
    let mut pairs: Vec<(Polynomial, Vec<Vec<usize>>)> = dedup
        .into_iter()
        .map(|(g, mut src)| {
            src.sort();
            (g, src)
        })
        .collect();
    pairs.sort_by(|a, b| a.1[0].cmp(&b.1[0]));
    let (generators, sources) = pairs.into_iter().unzip();
    Ok(MinorIdeal { generators, sources, nonzero_minors, subset_count })
}

fn mask_to_cols(mask: u128) -> Vec<usize> {
    (0..128).filter(|&c| mask >> c & 1 == 1).collect()
}

/// Every nonzero maximal minor keyed by its column bitmask.
///
/// Laplace expansion along rows with memoization on the set of columns used
/// so far: the partial determinant of the first `k` processed rows over a
/// column set `U` is shared by every maximal subset containing `U`. Rows are
/// processed sparsest first so that few partial states are ever reachable;
/// the row permutation only contributes a global sign.
fn all_minors(j: &JacobianMatrix) -> BTreeMap<u128, Polynomial> {
    let s = j.nvars();
    let m = j.num_rows();
    let nonzeros: Vec<Vec<usize>> = j
        .entries
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, p)| !p.is_zero()).map(|(c, _)| c).collect())
        .collect();
    let mut row_order: Vec<usize> = (0..m).collect();
    row_order.sort_by_key(|&r| nonzeros[r].len());
    let row_sign_negative = permutation_is_odd(&row_order);

    let mut layer: BTreeMap<u128, Polynomial> = BTreeMap::new();
    layer.insert(0, Polynomial::one(s));
    for &r in &row_order {
        let states: Vec<(u128, Polynomial)> = layer.into_iter().collect();
        let contributions: Vec<Vec<(u128, Polynomial)>> = states
            .par_iter()
            .map(|(mask, partial)| {
                nonzeros[r]
                    .iter()
                    .filter(|&&c| mask >> c & 1 == 0)
                    .map(|&c| {
                        let inversions = (mask >> c).count_ones() % 2 == 1;
                        let mut term = partial * j.entry(r, c);
                        if inversions {
                            term = -term;
                        }
                        (mask | 1u128 << c, term)
                    })
                    .collect()
            })
            .collect();
        let mut next: BTreeMap<u128, Polynomial> = BTreeMap::new();
        for (mask, term) in contributions.into_iter().flatten() {
            match next.get_mut(&mask) {
                Some(acc) => *acc += &term,
                None => {
                    next.insert(mask, term);
                }
            }
        }
        next.retain(|_, p| !p.is_zero());
        layer = next;
    }
    if row_sign_negative {
        for p in layer.values_mut() {
            *p = -&*p;
        }
    }
    layer
}

fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for k in i + 1..perm.len() {
            if perm[i] > perm[k] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
///
/// Every division is exact; kept as an independent check on [`maximal_minors`].
pub fn bareiss_determinant(matrix: &[Vec<Polynomial>]) -> Polynomial {
    let n = matrix.len();
    if n == 0 {
        return Polynomial::one(0);
    }
    let s = matrix[0][0].nvars();
    let mut a: Vec<Vec<Polynomial>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = Polynomial::one(s);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Polynomial::zero(s),
            }
        }
        for i in k + 1..n {
            for c in k + 1..n {
                let num = &(&a[k][k] * &a[i][c]) - &(&a[i][k] * &a[k][c]);
                a[i][c] = if num.is_zero() {
                    num
                } else {
                    num.exact_div(&prev).expect("Bareiss step divides exactly")
                };
            }
            a[i][k] = Polynomial::zero(s);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Predicted weighted degree of the minor on each column subset:
/// `M·d − Σ_{α∈S} w·α + Σ_β w·β`.
///
/// Valid for weighted homogeneous `f` of degree `d`; a subset whose minor
/// vanishes still gets a prediction.
pub fn minor_degree_table(
    j: &JacobianMatrix,
    w: &WeightSystem,
    cap: usize,
) -> Result<Vec<(Vec<usize>, i64)>, Error> {
    let d = match j.f.weighted_degree(w) {
        Some(wd) if wd.homogeneous => wd.degree as i64,
        _ => {
            return Err(Error::NotHomogeneous { index: 0, polynomial: j.f.to_string() });
        }
    };
    let subsets = j.subset_count();
    if subsets > cap as u128 {
        return Err(Error::TooManyMinors { subsets, cap });
    }
    let m = j.num_rows();
    let row_sum: i64 = j.rows.iter().map(|b| w.degree(b) as i64).sum();
    let col_deg: Vec<i64> = j.cols.iter().map(|a| w.degree(a) as i64).collect();
    Ok((0..j.num_cols())
        .combinations(m)
        .map(|cols| {
            let col_sum: i64 = cols.iter().map(|&c| col_deg[c]).sum();
            (cols, m as i64 * d - col_sum + row_sum)
        })
        .collect())
}

/// Predicted degree of a single column subset; see [`minor_degree_table`].
pub fn predicted_minor_degree(j: &JacobianMatrix, w: &WeightSystem, d: u64, cols: &[usize]) -> i64 {
    let row_sum: i64 = j.rows.iter().map(|b| w.degree(b) as i64).sum();
    let col_sum: i64 = cols.iter().map(|&c| w.degree(&j.cols[c]) as i64).sum();
    j.num_rows() as i64 * d as i64 - col_sum + row_sum
}

/// Generators of `J_1(f)^3`: all products `f_i f_j f_k` with `i ≤ j ≤ k`.
pub fn jacobian_cube_generators(f: &Polynomial) -> Vec<Polynomial> {
    let grad = f.gradient();
    (0..grad.len())
        .combinations_with_replacement(3)
        .map(|ix| &(&grad[ix[0]] * &grad[ix[1]]) * &grad[ix[2]])
        .filter(|p| !p.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn index_set_examples() {
        let (r, c) = index_sets(2, 2);
        assert_eq!((r.len(), c.len()), (3, 5));
        let (r, c) = index_sets(1, 3);
        assert_eq!((r.len(), c.len()), (1, 3));
        let (r, c) = index_sets(3, 2);
        assert_eq!((r.len(), c.len()), (6, 9));
    }

    #[test]
    fn order_one_is_the_gradient_row() {
        let f = p("x^2*y + z^3 - x*z", 3);
        let j = build_jacobian(&f, 1, Variant::ZeroDiagonal).unwrap();
        assert_eq!(j.entries, vec![f.gradient()]);
        let minors = maximal_minors(&j, 100).unwrap();
        assert_eq!(minors.len(), 3);
    }

    #[test]
    fn cubic_order_two_entries() {
        let f = p("x^3+y^3", 2);
        let j = build_jacobian(&f, 2, Variant::ZeroDiagonal).unwrap();
        let z = Polynomial::zero(2);
        let expect = vec![
            vec![p("3*x^2", 2), p("3*y^2", 2), p("3*x", 2), z.clone(), p("3*y", 2)],
            vec![z.clone(), z.clone(), p("3*x^2", 2), p("3*y^2", 2), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), p("3*x^2", 2), p("3*y^2", 2)],
        ];
        assert_eq!(j.entries, expect);
        let jf = build_jacobian(&f, 2, Variant::FDiagonal).unwrap();
        assert_eq!(jf.entries[1][0], f);
        assert_eq!(jf.entries[2][1], f);
        assert!(jf.entries[0][0] == p("3*x^2", 2));
    }

    #[test]
    fn cap_is_enforced() {
        let f = p("x^3+y^3", 2);
        let j = build_jacobian(&f, 3, Variant::ZeroDiagonal).unwrap();
        match maximal_minors(&j, 10) {
            Err(Error::TooManyMinors { subsets, cap }) => assert_eq!((subsets, cap), (84, 10)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bareiss_handles_pivot_swaps() {
        let m = vec![
            vec![p("0", 2), p("x", 2)],
            vec![p("y", 2), p("1", 2)],
        ];
        assert_eq!(bareiss_determinant(&m), p("-x*y", 2));
    }

    #[test]
    fn degree_table_for_cubic() {
        let f = p("x^3+y^3", 2);
        let w = WeightSystem::standard(2);
        let j = build_jacobian(&f, 2, Variant::ZeroDiagonal).unwrap();
        let table = minor_degree_table(&j, &w, 100).unwrap();
        assert_eq!(table.len(), 10);
        // columns x, x^2, xy carry f1^3 of degree 3(d - w1) = 6
        let idx = table.iter().position(|(c, _)| c == &vec![0, 2, 3]).unwrap();
        assert_eq!(table[idx].1, 6);
    }
}
