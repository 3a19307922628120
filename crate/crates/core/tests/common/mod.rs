//! Brute-force reference implementations used only by tests. Nothing here
//! calls the library's arithmetic, Gröbner, determinant or derivation code;
//! library values are converted in and compared on the way out.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use nashjet_core::{MultiIndex, Polynomial};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Sparse polynomial as a plain exponent-vector map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, Q>,
}

impl OPoly {
    pub fn zero(nvars: usize) -> Self {
        OPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(e: Vec<u32>, c: Q) -> Self {
        let mut p = OPoly::zero(e.len());
        p.add_term(e, c);
        p
    }

    pub fn from_lib(p: &Polynomial) -> Self {
        let mut out = OPoly::zero(p.nvars());
        for (m, c) in p.terms() {
            out.add_term(m.exponents().to_vec(), c.clone());
        }
        out
    }

    pub fn to_lib(&self) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| (MultiIndex::new(e), c.clone())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &OPoly) -> OPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Q) -> OPoly {
        let mut out = OPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn sub(&self, other: &OPoly) -> OPoly {
        self.add(&other.scale(&q(-1)))
    }

    pub fn mul(&self, other: &OPoly) -> OPoly {
        let mut out = OPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    pub fn shift(&self, m: &[u32]) -> OPoly {
        self.mul(&OPoly::monomial(m.to_vec(), q(1)))
    }

    /// Ordinary partial derivative `∂/∂x_i`.
    pub fn diff(&self, i: usize) -> OPoly {
        let mut out = OPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c * q(e[i] as i64));
            }
        }
        out
    }

    /// `(1/γ!) ∂^γ`, computed by repeated differentiation and division.
    pub fn hasse(&self, gamma: &[u32]) -> OPoly {
        let mut p = self.clone();
        let mut fact = BigInt::one();
        for (i, &g) in gamma.iter().enumerate() {
            for k in 1..=g {
                p = p.diff(i);
                fact *= BigInt::from(k);
            }
        }
        p.scale(&Q::new(BigInt::one(), fact))
    }

    pub fn wdeg(e: &[u32], w: &[u32]) -> u64 {
        e.iter().zip(w).map(|(a, b)| (*a as u64) * (*b as u64)).sum()
    }
}

/// All exponent vectors in `nvars` variables with weighted degree exactly `d`.
pub fn monomials_of_degree(w: &[u32], d: u64) -> Vec<Vec<u32>> {
    fn go(w: &[u32], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = 0u32;
        while (k as u64) * (w[i] as u64) <= left {
            cur.push(k);
            go(w, i + 1, left - (k as u64) * (w[i] as u64), cur, out);
            cur.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    go(w, 0, d, &mut Vec::new(), &mut out);
    out
}

pub fn monomials_up_to(w: &[u32], d: u64) -> Vec<Vec<u32>> {
    (0..=d).flat_map(|k| monomials_of_degree(w, k)).collect()
}

/// Reduced row echelon form over `Q` with plain rational pivoting.
pub struct Rref {
    pub rows: Vec<Vec<Q>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

pub fn rref(mut m: Vec<Vec<Q>>, ncols: usize) -> Rref {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Rref { rows: m, pivots, ncols }
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the row space; zero iff `v` lies in it.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if !v[c].is_zero() {
                let f = v[c].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        v
    }
}

pub fn nullity(m: Vec<Vec<Q>>, ncols: usize) -> usize {
    ncols - rref(m, ncols).rank()
}

/// Degree-bounded membership: `p ∈ ⟨gens⟩` decided by spanning
/// `{x^m·g : deg_w(x^m·g) ≤ bound}` and testing `p` against that span.
/// Exact for weighted homogeneous generators once `bound ≥ deg_w(p)`.
pub fn member_by_linear_algebra(gens: &[OPoly], w: &[u32], bound: u64, p: &OPoly) -> bool {
    let cols = monomials_up_to(w, bound);
    let index: BTreeMap<&Vec<u32>, usize> = cols.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let to_vec = |f: &OPoly| -> Option<Vec<Q>> {
        let mut v = vec![Q::zero(); cols.len()];
        for (e, c) in &f.terms {
            v[*index.get(e)?] = c.clone();
        }
        Some(v)
    };
    let mut rows = Vec::new();
    for g in gens {
        let gdeg = g.terms.keys().map(|e| OPoly::wdeg(e, w)).max().unwrap_or(0);
        if gdeg > bound {
            continue;
        }
        for m in monomials_up_to(w, bound - gdeg) {
            rows.push(to_vec(&g.shift(&m)).expect("within bound"));
        }
    }
    let Some(target) = to_vec(p) else {
        return false;
    };
    let e = rref(rows, cols.len());
    e.reduce(&target).iter().all(Zero::is_zero)
}

/// One degree of a [`LinearQuotient`]: the monomials of that degree, the
/// echelon form of `I_k`, and the non-pivot positions forming a basis of `A_k`.
pub type Stratum = (Vec<Vec<u32>>, Rref, Vec<usize>);

/// A finite-dimensional graded quotient built degree by degree with linear
/// algebra: `A_k = Q[x]_k / I_k`, where `I_k` is spanned by shifted generators.
pub struct LinearQuotient {
    pub w: Vec<u32>,
    pub strata: BTreeMap<u64, Stratum>,
}

impl LinearQuotient {
    /// Returns `None` if the quotient is still nonzero at `max_degree`.
    pub fn new(gens: &[OPoly], w: &[u32], max_degree: u64) -> Option<Self> {
        let maxw = *w.iter().max().unwrap() as u64;
        let mut strata = BTreeMap::new();
        let mut zero_run = 0;
        for k in 0..=max_degree {
            let mons = monomials_of_degree(w, k);
            let index: BTreeMap<&Vec<u32>, usize> = mons.iter().enumerate().map(|(i, e)| (e, i)).collect();
            let mut rows = Vec::new();
            for g in gens {
                let gdeg = OPoly::wdeg(g.terms.keys().next().expect("nonzero generator"), w);
                if gdeg > k {
                    continue;
                }
                for m in monomials_of_degree(w, k - gdeg) {
                    let h = g.shift(&m);
                    let mut v = vec![Q::zero(); mons.len()];
                    for (e, c) in &h.terms {
                        v[index[e]] = c.clone();
                    }
                    rows.push(v);
                }
            }
            let e = rref(rows, mons.len());
            let basis: Vec<usize> = (0..mons.len()).filter(|c| !e.pivots.contains(c)).collect();
            let empty = basis.is_empty();
            strata.insert(k, (mons, e, basis));
            zero_run = if empty { zero_run + 1 } else { 0 };
            if zero_run >= maxw {
                return Some(LinearQuotient { w: w.to_vec(), strata });
            }
        }
        None
    }

    pub fn dims(&self) -> BTreeMap<u64, usize> {
        self.strata.iter().filter(|(_, s)| !s.2.is_empty()).map(|(k, s)| (*k, s.2.len())).collect()
    }

    pub fn dimension(&self) -> usize {
        self.strata.values().map(|s| s.2.len()).sum()
    }

    pub fn socle(&self) -> u64 {
        *self.dims().keys().next_back().unwrap_or(&0)
    }

    /// Basis monomials with their degrees, grouped by ascending degree.
    pub fn basis(&self) -> Vec<(u64, Vec<u32>)> {
        let mut out = Vec::new();
        for (k, (mons, _, b)) in &self.strata {
            for &i in b {
                out.push((*k, mons[i].clone()));
            }
        }
        out
    }

    /// Coordinates of a homogeneous polynomial of degree `k` in the basis of `A_k`.
    pub fn coords(&self, k: u64, p: &OPoly) -> Vec<Q> {
        let Some((mons, e, basis)) = self.strata.get(&k) else {
            return Vec::new();
        };
        let index: BTreeMap<&Vec<u32>, usize> = mons.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut v = vec![Q::zero(); mons.len()];
        for (m, c) in &p.terms {
            v[index[m]] += c;
        }
        let r = e.reduce(&v);
        basis.iter().map(|&i| r[i].clone()).collect()
    }

    pub fn stratum_dim(&self, k: i64) -> usize {
        if k < 0 {
            return 0;
        }
        self.strata.get(&(k as u64)).map_or(0, |s| s.2.len())
    }
}

/// Dimension of the degree-`e` derivations of `A` from its multiplication
/// table: unknown linear maps `D: A_k → A_{k+e}` constrained by the Leibniz
/// rule on every pair of basis monomials.
pub fn derivation_dim_by_leibniz(a: &LinearQuotient, e: i64) -> usize {
    let basis = a.basis();
    // Unknown block for basis element b: its image coordinates in A_{deg b + e}.
    let mut offset = Vec::with_capacity(basis.len());
    let mut n = 0usize;
    for (k, _) in &basis {
        offset.push(n);
        n += a.stratum_dim(*k as i64 + e);
    }
    if n == 0 {
        return 0;
    }
    let first_of_degree = |k: u64| basis.iter().position(|(d, _)| *d == k).unwrap();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (i, (ki, mi)) in basis.iter().enumerate() {
        for (j, (kj, mj)) in basis.iter().enumerate().skip(i) {
            let prod_deg = ki + kj;
            let target = prod_deg as i64 + e;
            let tdim = a.stratum_dim(target);
            if tdim == 0 {
                continue;
            }
            let mut eqs = vec![vec![Q::zero(); n]; tdim];
            // D(b_i b_j) expanded through the coordinates of b_i b_j in A_{ki+kj}.
            let prod = OPoly::monomial(mi.iter().zip(mj).map(|(x, y)| x + y).collect(), q(1));
            let pc = a.coords(prod_deg, &prod);
            let base = if pc.is_empty() { 0 } else { first_of_degree(prod_deg) };
            for (t, c) in pc.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let src = base + t;
                for r in 0..tdim {
                    eqs[r][offset[src] + r] += c;
                }
            }
            // − D(b_i)·b_j − b_i·D(b_j)
            for (src, other) in [(i, mj), (j, mi)] {
                let (ks, _) = &basis[src];
                let img_deg = *ks as i64 + e;
                if img_deg < 0 {
                    continue;
                }
                let img_deg = img_deg as u64;
                let (mons, _, b) = &a.strata[&img_deg];
                for (u, &bi) in b.iter().enumerate() {
                    let shifted = OPoly::monomial(mons[bi].iter().zip(other).map(|(x, y)| x + y).collect(), q(1));
                    let sc = a.coords(target as u64, &shifted);
                    for (r, c) in sc.iter().enumerate() {
                        eqs[r][offset[src] + u] -= c;
                    }
                }
            }
            rows.extend(eqs);
        }
    }
    nullity(rows, n)
}

/// Determinant by first-row Laplace expansion.
pub fn cofactor_det(m: &[Vec<OPoly>], nvars: usize) -> OPoly {
    let k = m.len();
    if k == 0 {
        return OPoly::monomial(vec![0; nvars], q(1));
    }
    let mut acc = OPoly::zero(nvars);
    for c in 0..k {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<OPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][c].mul(&cofactor_det(&minor, nvars));
        acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// The order-`n` matrix rebuilt from scratch: rows `|β| ≤ n−1`, columns
/// `1 ≤ |α| ≤ n`, both in the library's index order (taken as given).
pub fn oracle_matrix(f: &OPoly, rows: &[Vec<u32>], cols: &[Vec<u32>], f_diagonal: bool) -> Vec<Vec<OPoly>> {
    rows.iter()
        .map(|b| {
            cols.iter()
                .map(|a| {
                    if a.iter().zip(b).any(|(x, y)| x < y) {
                        OPoly::zero(f.nvars)
                    } else if a == b {
                        if f_diagonal {
                            f.clone()
                        } else {
                            OPoly::zero(f.nvars)
                        }
                    } else {
                        let g: Vec<u32> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                        f.hasse(&g)
                    }
                })
                .collect()
        })
        .collect()
}

/// `x` is a nonzero rational multiple of `y`.
pub fn proportional(x: &OPoly, y: &OPoly) -> bool {
    let (Some((e, cx)), false) = (x.terms.iter().next(), y.is_zero()) else {
        return false;
    };
    let Some(cy) = y.terms.get(e) else {
        return false;
    };
    x.scale(&(cy / cx)) == *y
}

/// Deterministic small pseudo-random integers for fixture generation.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_i64(&mut self, lo: i64, hi: i64) -> i64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        lo + ((self.0 >> 33) % ((hi - lo + 1) as u64)) as i64
    }
}
