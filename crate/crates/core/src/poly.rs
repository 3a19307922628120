//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::multi_index::MultiIndex;
use crate::order::{MonoKey, MonomialOrder};
use crate::weights::WeightSystem;

/// A polynomial in `nvars` variables, stored as `x^α ↦ c_α` with no zero
/// coefficients. The empty map is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<MultiIndex, BigRational>,
}

/// Result of [`Polynomial::weighted_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedDegree {
    /// Common degree if homogeneous, otherwise the largest term degree.
    pub degree: u64,
    pub homogeneous: bool,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(MultiIndex::zero(nvars), c)
    }

    /// `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::unit(nvars, i), BigRational::one())
    }

    pub fn monomial(m: MultiIndex, c: BigRational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// Builds a polynomial from possibly repeated terms, summing duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (MultiIndex, BigRational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has wrong variable count");
            p.add_term(m, c);
        }
        p
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms.iter().map(|(e, c)| (MultiIndex::new(e), BigRational::from_integer(BigInt::from(*c)))),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &MultiIndex) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Constant term.
    pub fn constant_coeff(&self) -> BigRational {
        self.coeff(&MultiIndex::zero(self.nvars))
    }

    pub fn add_term(&mut self, m: MultiIndex, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c·x^m·self`.
    pub fn mul_term(&self, m: &MultiIndex, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, b)| (a.add(m), b * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Largest total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::norm).max()
    }

    /// Terms in descending `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&MultiIndex, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&MultiIndex, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// The Hasse derivative `(1/γ!)·∂^γ f`. On monomials,
    /// `x^a ↦ Π C(a_i, γ_i)·x^{a−γ}`.
    pub fn hasse_derivative(&self, gamma: &MultiIndex) -> Result<Polynomial, Error> {
        if gamma.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: gamma.nvars() });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            if let Some(rest) = a.checked_sub(gamma) {
                let b = BigRational::from_integer(a.binomial(gamma));
                out.add_term(rest, c * b);
            }
        }
        Ok(out)
    }

    /// `∂f/∂x_i` with a 0-based variable index.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial, Error> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, nvars: self.nvars });
        }
        self.hasse_derivative(&MultiIndex::unit(self.nvars, i))
    }

    /// All first partials `(f_1, …, f_s)`.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.nvars).map(|i| self.partial_derivative(i).expect("index in range")).collect()
    }

    pub fn weighted_degree(&self, w: &WeightSystem) -> Option<WeightedDegree> {
        let mut degrees = self.terms.keys().map(|m| w.degree(m));
        let first = degrees.next()?;
        let (mut lo, mut hi) = (first, first);
        for d in degrees {
            lo = lo.min(d);
            hi = hi.max(d);
        }
        Some(WeightedDegree { degree: hi, homogeneous: lo == hi })
    }

    /// True for zero and for polynomials whose terms share one weighted degree.
    pub fn is_weighted_homogeneous(&self, w: &WeightSystem) -> bool {
        self.weighted_degree(w).is_none_or(|d| d.homogeneous)
    }

    /// `Σ w_i x_i ∂f/∂x_i`, which scales each term by its weighted degree.
    pub fn euler_apply(&self, w: &WeightSystem) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for i in 0..self.nvars {
            let d = self.partial_derivative(i).expect("index in range");
            let wi = BigRational::from_integer(BigInt::from(w.get(i)));
            out = &out + &d.mul_term(&MultiIndex::unit(self.nvars, i), &wi);
        }
        out
    }

    /// Scales to integer coefficients with gcd 1 and a positive leading
    /// coefficient with respect to `order`. Zero stays zero.
    pub fn primitive(&self, order: &MonomialOrder) -> Polynomial {
        let Some((_, lc)) = self.leading_term(order) else {
            return self.clone();
        };
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        // content = gcd(numerators) / lcm(denominators)
        let mut factor = BigRational::new(den, num);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let order = MonomialOrder::standard(self.nvars);
        let dkeys: Vec<(MonoKey, BigRational)> = divisor
            .sorted_terms(&order)
            .into_iter()
            .map(|(m, c)| (order.key(m.clone()), c.clone()))
            .collect();
        let (dlead, dlc) = &dkeys[0];
        let mut rem: BTreeMap<MonoKey, BigRational> =
            self.terms.iter().map(|(m, c)| (order.key(m.clone()), c.clone())).collect();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((k, c)) = rem.pop_last() {
            let q = k.div(dlead)?;
            let qc = c / dlc;
            for (dk, dc) in &dkeys[1..] {
                let key = dk.mul(&q);
                let delta = -(&qc * dc);
                accumulate(&mut rem, key, delta);
            }
            quot.add_term(q.exps, qc);
        }
        Some(quot)
    }

    /// Renders in descending `order`, using `x,y,z,u,v` for at most five
    /// variables and `x1..xs` otherwise.
    pub fn to_string_with(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_string(m);
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => out.push_str(&rational_string(&abs)),
                (false, true) => out.push_str(&mono),
                (false, false) => {
                    out.push_str(&rational_string(&abs));
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }
}

pub(crate) fn accumulate(map: &mut BTreeMap<MonoKey, BigRational>, key: MonoKey, delta: BigRational) {
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            if !delta.is_zero() {
                v.insert(delta);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += delta;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Name of variable `i` (0-based) in an `nvars`-variable ring.
pub fn variable_name(i: usize, nvars: usize) -> String {
    const ALIASES: [&str; 5] = ["x", "y", "z", "u", "v"];
    if nvars <= ALIASES.len() {
        ALIASES[i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

fn monomial_string(m: &MultiIndex) -> String {
    let n = m.nvars();
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(variable_name(i, n)),
            _ => parts.push(format!("{}^{}", variable_name(i, n), e)),
        }
    }
    parts.join("*")
}

fn rational_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&MonomialOrder::standard(self.nvars)))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.add(b), c * d);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// `p/q` as a rational.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
