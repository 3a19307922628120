//! Exact rank and nullspace over the rationals by fraction-free elimination.
//!
//! Rows are scaled to primitive integer vectors up front; elimination then
//! uses only integer cross-multiplication followed by content removal, so no
//! rational arithmetic happens inside the loop.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer row with gcd 1 (or all zero) and clearing denominators.
fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in row {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = row.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    make_primitive(ints)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Reduced echelon data: pivot columns and the corresponding rows.
struct Echelon {
    ncols: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<BigInt>>,
}

/// Gauss–Jordan elimination over `Z`: each pivot row clears its column in all
/// other rows via `r ← p·r − r[c]·prow`, followed by content removal.
fn echelon(rows: &[Vec<BigRational>], ncols: usize) -> Echelon {
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            integer_row(r)
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut done = 0;
    for col in 0..ncols {
        let Some(found) = (done..work.len()).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(done, found);
        if work[done][col].is_negative() {
            for x in &mut work[done] {
                *x = -&*x;
            }
        }
        let prow = work[done].clone();
        let p = prow[col].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == done || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                *x = &p * &*x - &factor * y;
            }
            let reduced = make_primitive(std::mem::take(row));
            *row = reduced;
        }
        pivots.push(col);
        done += 1;
        if done == work.len() {
            break;
        }
    }
    work.truncate(done);
    Echelon { ncols, pivots, rows: work }
}

pub fn rank(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    echelon(rows, ncols).pivots.len()
}

/// Basis of `{v : A v = 0}` as primitive integer vectors, one per free
/// column in ascending order. Each vector has a positive entry at its free
/// column and zeros at the other free columns.
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigInt>> {
    let e = echelon(rows, ncols);
    let mut is_pivot = vec![false; e.ncols];
    for &c in &e.pivots {
        is_pivot[c] = true;
    }
    let lcm_pivots = e.rows.iter().zip(&e.pivots).fold(BigInt::one(), |acc, (r, &c)| acc.lcm(&r[c]));
    let mut out = Vec::new();
    for free in (0..e.ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![BigInt::zero(); e.ncols];
        v[free] = lcm_pivots.clone();
        for (row, &pc) in e.rows.iter().zip(&e.pivots) {
            // row[pc]·v[pc] + row[free]·v[free] = 0
            v[pc] = -(&row[free] * &lcm_pivots) / &row[pc];
        }
        out.push(make_primitive(v));
    }
    out
}
