//! Graded derivations of a finite-dimensional graded quotient `A = Q[x]/I`.
//!
//! A derivation of `A` is determined by the images of the variables. Writing
//! each image as its normal form `r_i`, the lift `Σ r_i ∂/∂x_i` to `Q[x]`
//! descends to `A` exactly when it maps every generator of `I` into `I`; by
//! the Leibniz rule that is enough for the whole ideal. A derivation of
//! weighted degree `e` has `r_i` homogeneous of degree `w_i + e`, so each
//! graded piece is the nullspace of a finite linear system whose unknowns
//! are the coefficients of the `r_i` over standard monomials.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::Error;
use crate::groebner::GradedQuotient;
use crate::linalg;
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::weights::WeightSystem;

/// A derivation of weighted degree `degree`, given by the normal forms of the
/// images of `x_1, …, x_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDerivation {
    pub degree: i64,
    pub images: Vec<Polynomial>,
}

impl GradedDerivation {
    /// `Σ r_i ∂g/∂x_i` computed in `Q[x]`.
    pub fn apply(&self, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(g.nvars());
        for (i, r) in self.images.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            acc += &(r * &g.partial_derivative(i).expect("index in range"));
        }
        acc
    }

    /// The Euler derivation `Σ w_i x_i ∂/∂x_i`, with images reduced into `q`.
    pub fn euler(q: &GradedQuotient, w: &WeightSystem) -> Self {
        let s = q.nvars();
        let images = (0..s)
            .map(|i| {
                let xi = Polynomial::var(s, i).scale(&BigRational::from_integer(BigInt::from(w.get(i))));
                q.basis.normal_form(&xi)
            })
            .collect();
        GradedDerivation { degree: 0, images }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Polynomial::is_zero)
    }

    /// Re-checks that every generator of `q` (as originally given, not the
    /// Gröbner basis) is mapped into the ideal.
    pub fn preserves_ideal(&self, q: &GradedQuotient) -> bool {
        q.generators.iter().all(|g| q.basis.contains(&self.apply(g)))
    }
}

#[derive(Clone, Debug)]
pub struct DerivationSpaceReport {
    pub degree: i64,
    pub dimension: usize,
    pub basis: Vec<GradedDerivation>,
}

impl DerivationSpaceReport {
    /// Whether `d` lies in the span of this piece.
    pub fn contains(&self, q: &GradedQuotient, d: &GradedDerivation) -> bool {
        if d.is_zero() {
            return true;
        }
        if d.degree != self.degree {
            return false;
        }
        let w = q.weights();
        let unknowns = unknowns(q, w, self.degree);
        let coords = |g: &GradedDerivation| -> Option<Vec<BigRational>> {
            let mut v = vec![BigRational::zero(); unknowns.len()];
            for (i, r) in g.images.iter().enumerate() {
                for (m, c) in r.terms() {
                    let pos = unknowns.iter().position(|(j, u)| *j == i && u == m)?;
                    v[pos] = c.clone();
                }
            }
            Some(v)
        };
        let Some(target) = coords(d) else {
            return false;
        };
        let mut rows: Vec<Vec<BigRational>> = self.basis.iter().filter_map(coords).collect();
        let before = linalg::rank(&rows, unknowns.len());
        rows.push(target);
        linalg::rank(&rows, unknowns.len()) == before
    }
}

/// Unknown slots `(variable, standard monomial)` for degree `e`.
fn unknowns(q: &GradedQuotient, w: &WeightSystem, e: i64) -> Vec<(usize, MultiIndex)> {
    let mut out = Vec::new();
    for i in 0..q.nvars() {
        let target = w.get(i) as i64 + e;
        if target < 0 {
            continue;
        }
        for m in q.stratum(target as u64) {
            out.push((i, m));
        }
    }
    out
}

fn check_input(q: &GradedQuotient, w: &WeightSystem) -> Result<(), Error> {
    if w.nvars() != q.nvars() {
        return Err(Error::DimensionMismatch { expected: q.nvars(), got: w.nvars() });
    }
    if let Some(index) = q.generators.iter().position(|g| !g.is_weighted_homogeneous(w)) {
        return Err(Error::NotHomogeneous { index, polynomial: q.generators[index].to_string() });
    }
    if !q.is_finite() {
        return Err(Error::InfiniteDimensional);
    }
    Ok(())
}

/// Exact basis of the degree-`e` derivations of `q`.
pub fn derivation_space(q: &GradedQuotient, w: &WeightSystem, e: i64) -> Result<DerivationSpaceReport, Error> {
    check_input(q, w)?;
    Ok(solve_degree(q, w, e))
}

fn solve_degree(q: &GradedQuotient, w: &WeightSystem, e: i64) -> DerivationSpaceReport {
    let s = q.nvars();
    let slots = unknowns(q, w, e);
    if slots.is_empty() {
        return DerivationSpaceReport { degree: e, dimension: 0, basis: Vec::new() };
    }
    let gens = q.basis.polynomials();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for g in &gens {
        let partials = g.gradient();
        // NF(x^m · ∂g/∂x_i) for every slot; one equation per monomial in the union of supports.
        let images: Vec<Polynomial> = slots
            .iter()
            .map(|(i, m)| q.basis.normal_form(&partials[*i].mul_term(m, &BigRational::from_integer(1.into()))))
            .collect();
        let support: BTreeSet<&MultiIndex> = images.iter().flat_map(|p| p.terms().map(|(m, _)| m)).collect();
        for t in support {
            rows.push(images.iter().map(|p| p.coeff(t)).collect());
        }
    }
    let basis: Vec<GradedDerivation> = linalg::nullspace(&rows, slots.len())
        .into_iter()
        .map(|v| {
            let mut images = vec![Polynomial::zero(s); s];
            for ((i, m), c) in slots.iter().zip(v) {
                images[*i].add_term(m.clone(), BigRational::from_integer(c));
            }
            GradedDerivation { degree: e, images }
        })
        .collect();
    DerivationSpaceReport { degree: e, dimension: basis.len(), basis }
}

/// Solves every degree in `degrees` in parallel; results come back in input order.
pub fn derivation_spaces(
    q: &GradedQuotient,
    w: &WeightSystem,
    degrees: impl IntoIterator<Item = i64>,
) -> Result<Vec<DerivationSpaceReport>, Error> {
    check_input(q, w)?;
    let degrees: Vec<i64> = degrees.into_iter().collect();
    Ok(degrees.par_iter().map(|&e| solve_degree(q, w, e)).collect())
}

/// The window `[−max w_i, −1]`. Below it every `w_i + e` is negative, so every
/// image is forced to zero; the window therefore decides whether any
/// negative-degree derivation exists.
pub fn negative_window(w: &WeightSystem) -> std::ops::RangeInclusive<i64> {
    -(w.max() as i64)..=-1
}

/// The window `[−max w_i, socle]`. Above `socle − min w_i` every image would
/// land in a zero stratum.
pub fn full_window(q: &GradedQuotient, w: &WeightSystem) -> std::ops::RangeInclusive<i64> {
    -(w.max() as i64)..=q.socle_degree().unwrap_or(0) as i64
}

/// Dimensions of all negative-degree pieces.
pub fn negative_derivation_scan(q: &GradedQuotient, w: &WeightSystem) -> Result<BTreeMap<i64, usize>, Error> {
    Ok(derivation_spaces(q, w, negative_window(w))?.into_iter().map(|r| (r.degree, r.dimension)).collect())
}

/// Dimensions of every graded piece of the derivation algebra.
pub fn full_derivation_dims(q: &GradedQuotient, w: &WeightSystem) -> Result<BTreeMap<i64, usize>, Error> {
    Ok(derivation_spaces(q, w, full_window(q, w))?.into_iter().map(|r| (r.degree, r.dimension)).collect())
}
