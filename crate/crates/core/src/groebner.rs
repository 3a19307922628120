//! Buchberger's algorithm over the rationals, normal forms, and graded
//! quotient algebras `Q[x]/I`.
//!
//! For weighted homogeneous ideals the polynomial quotient has the same graded
//! dimensions as the quotient of the convergent power series ring, since the
//! ideal is contained in the maximal ideal at the origin and every graded
//! piece is finite-dimensional; all computations therefore run in `Q[x]`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::multi_index::MultiIndex;
use crate::order::{MonoKey, MonomialOrder};
use crate::poly::{accumulate, Polynomial};
use crate::weights::WeightSystem;

/// Terms sorted by descending monomial order; never empty once stored.
#[derive(Clone, Debug)]
struct OrderedPoly {
    terms: Vec<(MonoKey, BigRational)>,
}

impl OrderedPoly {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(MonoKey, BigRational)> =
            p.terms().map(|(m, c)| (order.key(m.clone()), c.clone())).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        OrderedPoly { terms }
    }

    fn from_map(map: BTreeMap<MonoKey, BigRational>) -> Self {
        OrderedPoly { terms: map.into_iter().rev().collect() }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().map(|(k, c)| (k.exps.clone(), c.clone())))
    }

    fn lead(&self) -> &MonoKey {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigRational {
        &self.terms[0].1
    }

    fn monic(mut self) -> Self {
        if let Some(inv) = self.terms.first().map(|t| t.1.recip()) {
            for t in &mut self.terms {
                t.1 *= &inv;
            }
        }
        self
    }

    /// Integer coefficients with gcd 1, positive leading coefficient.
    fn primitive(self, nvars: usize, order: &MonomialOrder) -> Self {
        OrderedPoly::from_poly(&self.to_poly(nvars).primitive(order), order)
    }
}

/// Fully reduces `h` modulo `basis`.
fn reduce(h: BTreeMap<MonoKey, BigRational>, basis: &[OrderedPoly]) -> BTreeMap<MonoKey, BigRational> {
    let mut work = h;
    let mut rem: BTreeMap<MonoKey, BigRational> = BTreeMap::new();
    while let Some((k, c)) = work.pop_last() {
        match basis.iter().find(|g| g.lead().exps.divides(&k.exps)) {
            Some(g) => {
                let q = k.div(g.lead()).expect("divisible");
                let factor = &c / g.lc();
                for (gk, gc) in &g.terms[1..] {
                    accumulate(&mut work, gk.mul(&q), -(&factor * gc));
                }
            }
            None => {
                rem.insert(k, c);
            }
        }
    }
    rem
}

fn to_map(p: &OrderedPoly) -> BTreeMap<MonoKey, BigRational> {
    p.terms.iter().cloned().collect()
}

/// A reduced Gröbner basis: monic, autoreduced, sorted by ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elems: Vec<OrderedPoly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elems.iter().map(|e| e.to_poly(self.nvars())).collect()
    }

    pub fn leading_monomials(&self) -> Vec<MultiIndex> {
        self.elems.iter().map(|e| e.lead().exps.clone()).collect()
    }

    /// Remainder of `f`, supported on standard monomials.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let map: BTreeMap<MonoKey, BigRational> =
            f.terms().map(|(m, c)| (self.order.key(m.clone()), c.clone())).collect();
        let rem = reduce(map, &self.elems);
        Polynomial::from_terms(self.nvars(), rem.into_iter().map(|(k, c)| (k.exps, c)))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elems.iter().any(|e| e.lead().exps.is_zero())
    }

    pub fn is_standard(&self, m: &MultiIndex) -> bool {
        !self.elems.iter().any(|e| e.lead().exps.divides(m))
    }

    /// Variables with no pure power among the leading monomials.
    pub fn free_variables(&self) -> Vec<usize> {
        if self.is_unit_ideal() {
            return Vec::new();
        }
        let covered: HashSet<usize> =
            self.elems.iter().filter_map(|e| e.lead().exps.pure_power_variable()).collect();
        (0..self.nvars()).filter(|i| !covered.contains(i)).collect()
    }

    /// The leading-term ideal contains a pure power of every variable.
    pub fn is_zero_dimensional(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// Standard monomials in ascending order, or `None` if there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<MultiIndex>> {
        if !self.is_zero_dimensional() {
            return None;
        }
        let s = self.nvars();
        let mut seen: BTreeSet<MonoKey> = BTreeSet::new();
        let one = MultiIndex::zero(s);
        if !self.is_standard(&one) {
            return Some(Vec::new());
        }
        let mut stack = vec![one];
        while let Some(m) = stack.pop() {
            if !seen.insert(self.order.key(m.clone())) {
                continue;
            }
            for i in 0..s {
                let next = m.add(&MultiIndex::unit(s, i));
                if self.is_standard(&next) {
                    stack.push(next);
                }
            }
        }
        Some(seen.into_iter().map(|k| k.exps).collect())
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.polynomials() == other.polynomials()
    }
}

/// A queued unit of Buchberger work, ordered by the degree it lives in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    Input(usize),
    Pair(usize, usize),
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Input generators and S-pairs share one queue ordered by leading monomial
/// (normal selection strategy), so homogeneous inputs are handled degree by
/// degree and high-degree generators already in the ideal reduce away without
/// spawning pairs. Pairs are skipped by the coprime and chain criteria.
pub fn groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> GroebnerBasis {
    let s = order.nvars();
    let inputs: Vec<OrderedPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            assert_eq!(g.nvars(), s, "generator has wrong variable count");
            OrderedPoly::from_poly(g, order)
        })
        .collect();

    let mut basis: Vec<OrderedPoly> = Vec::new();
    let mut queue: BTreeSet<(MonoKey, Task)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for (i, g) in inputs.iter().enumerate() {
        queue.insert((g.lead().clone(), Task::Input(i)));
    }

    while let Some((_, task)) = queue.pop_first() {
        let candidate = match task {
            Task::Input(i) => to_map(&inputs[i]),
            Task::Pair(i, j) => {
                pending.remove(&(i, j));
                let (a, b) = (&basis[i], &basis[j]);
                if a.lead().exps.is_coprime(&b.lead().exps) {
                    continue;
                }
                let lcm = a.lead().exps.lcm(&b.lead().exps);
                if chain_criterion(&basis, &pending, i, j, &lcm) {
                    continue;
                }
                s_polynomial(a, b, order, &lcm)
            }
        };
        let rem = reduce(candidate, &basis);
        if rem.is_empty() {
            continue;
        }
        let new = OrderedPoly::from_map(rem).primitive(s, order);
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let lcm = order.key(g.lead().exps.lcm(&new.lead().exps));
            queue.insert((lcm, Task::Pair(i, k)));
            pending.insert((i, k));
        }
        basis.push(new);
        if basis[k].lead().exps.is_zero() {
            break;
        }
    }
    GroebnerBasis { order: order.clone(), elems: reduce_basis(basis, s, order) }
}

/// Skip `(i, j)` when some other element's leading monomial divides the lcm
/// and both of its pairs with `i` and `j` are already treated.
fn chain_criterion(
    basis: &[OrderedPoly],
    pending: &HashSet<(usize, usize)>,
    i: usize,
    j: usize,
    lcm: &MultiIndex,
) -> bool {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    basis.iter().enumerate().any(|(k, g)| {
        k != i
            && k != j
            && g.lead().exps.divides(lcm)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

fn s_polynomial(
    a: &OrderedPoly,
    b: &OrderedPoly,
    order: &MonomialOrder,
    lcm: &MultiIndex,
) -> BTreeMap<MonoKey, BigRational> {
    let lcm = order.key(lcm.clone());
    let qa = lcm.div(a.lead()).expect("lcm divisible");
    let qb = lcm.div(b.lead()).expect("lcm divisible");
    let ca = b.lc().clone();
    let cb = a.lc().clone();
    let mut out = BTreeMap::new();
    for (k, c) in &a.terms[1..] {
        accumulate(&mut out, k.mul(&qa), c * &ca);
    }
    for (k, c) in &b.terms[1..] {
        accumulate(&mut out, k.mul(&qb), -(c * &cb));
    }
    out
}

/// Minimalize, fully interreduce, make monic, sort ascending.
fn reduce_basis(basis: Vec<OrderedPoly>, s: usize, order: &MonomialOrder) -> Vec<OrderedPoly> {
    if basis.iter().any(|g| g.lead().exps.is_zero()) {
        return vec![OrderedPoly::from_poly(&Polynomial::one(s), order)];
    }
    let mut minimal: Vec<OrderedPoly> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| a.lead().cmp(b.lead()));
    for g in sorted {
        if !minimal.iter().any(|h| h.lead().exps.divides(&g.lead().exps)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<OrderedPoly> =
            minimal.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, g)| g.clone()).collect();
        let g = &minimal[idx];
        let mut tail: BTreeMap<MonoKey, BigRational> = g.terms[1..].iter().cloned().collect();
        tail = reduce(tail, &others);
        tail.insert(g.lead().clone(), g.lc().clone());
        out.push(OrderedPoly::from_map(tail).monic());
    }
    out
}

/// Every generator of `b` lies in the ideal generated by `a`.
pub fn ideal_contains(a: &[Polynomial], b: &[Polynomial], order: &MonomialOrder) -> bool {
    let gb = groebner_basis(a, order);
    b.iter().all(|g| gb.contains(g))
}

pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial], order: &MonomialOrder) -> bool {
    groebner_basis(a, order) == groebner_basis(b, order)
}

/// `Q[x]/I` with its Gröbner basis and standard-monomial basis.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    pub generators: Vec<Polynomial>,
    pub basis: GroebnerBasis,
    /// Ascending; `None` when the quotient is infinite-dimensional.
    pub standard_monomials: Option<Vec<MultiIndex>>,
    /// Standard monomials counted by weighted degree (empty if infinite).
    pub degree_strata: BTreeMap<u64, usize>,
}

impl GradedQuotient {
    pub fn is_finite(&self) -> bool {
        self.standard_monomials.is_some()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.standard_monomials.as_ref().map(Vec::len)
    }

    pub fn weights(&self) -> &WeightSystem {
        self.basis.order().weights()
    }

    pub fn nvars(&self) -> usize {
        self.basis.nvars()
    }

    /// Standard monomials of weighted degree `d`.
    pub fn stratum(&self, d: u64) -> Vec<MultiIndex> {
        let w = self.weights();
        self.standard_monomials
            .iter()
            .flatten()
            .filter(|m| w.degree(m) == d)
            .cloned()
            .collect()
    }

    /// Largest weighted degree carrying a standard monomial.
    pub fn socle_degree(&self) -> Option<u64> {
        self.degree_strata.keys().next_back().copied()
    }
}

pub fn quotient_basis(gens: &[Polynomial], order: &MonomialOrder) -> GradedQuotient {
    let basis = groebner_basis(gens, order);
    let standard_monomials = basis.standard_monomials();
    let mut degree_strata = BTreeMap::new();
    for m in standard_monomials.iter().flatten() {
        *degree_strata.entry(order.weights().degree(m)).or_insert(0) += 1;
    }
    GradedQuotient { generators: gens.to_vec(), basis, standard_monomials, degree_strata }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDimensions {
    pub by_degree: BTreeMap<u64, usize>,
    pub total: usize,
    /// `None` for the zero algebra.
    pub socle_degree: Option<u64>,
}

/// Dimension of each graded piece of a finite-dimensional quotient.
pub fn graded_dimensions(q: &GradedQuotient, w: &WeightSystem) -> Result<GradedDimensions, Error> {
    if let Some(index) = q.generators.iter().position(|g| !g.is_weighted_homogeneous(w)) {
        return Err(Error::NotHomogeneous { index, polynomial: q.generators[index].to_string() });
    }
    let monomials = q.standard_monomials.as_ref().ok_or(Error::InfiniteDimensional)?;
    let mut by_degree = BTreeMap::new();
    for m in monomials {
        *by_degree.entry(w.degree(m)).or_insert(0) += 1;
    }
    let socle_degree = by_degree.keys().next_back().copied();
    Ok(GradedDimensions { by_degree, total: monomials.len(), socle_degree })
}

/// Convenience: `Σ c_i·g_i` for rational `c_i`.
pub fn combination(coeffs: &[BigRational], gens: &[Polynomial], nvars: usize) -> Polynomial {
    let mut acc = Polynomial::zero(nvars);
    for (c, g) in coeffs.iter().zip(gens) {
        if !c.is_zero() {
            acc += &g.scale(c);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, 2).unwrap()
    }

    fn ps(v: &[&str]) -> Vec<Polynomial> {
        v.iter().map(|s| p(s)).collect()
    }

    fn std2() -> MonomialOrder {
        MonomialOrder::standard(2)
    }

    #[test]
    fn simple_bases() {
        let gb = groebner_basis(&ps(&["x", "y"]), &std2());
        assert_eq!(gb.polynomials(), ps(&["y", "x"]));
        let gb = groebner_basis(&ps(&["3*x^2", "3*y^2"]), &std2());
        assert_eq!(gb.polynomials(), ps(&["y^2", "x^2"]));
    }

    #[test]
    fn mixed_basis_leading_terms() {
        let gb = groebner_basis(&ps(&["x^2+y^2", "x*y"]), &std2());
        let mut leads = gb.leading_monomials();
        leads.sort();
        assert_eq!(
            leads,
            vec![MultiIndex::new(&[0, 3]), MultiIndex::new(&[1, 1]), MultiIndex::new(&[2, 0])]
        );
        let again = groebner_basis(&gb.polynomials(), &std2());
        assert_eq!(again, gb);
    }

    #[test]
    fn normal_forms() {
        let gb = groebner_basis(&ps(&["x", "y"]), &std2());
        assert_eq!(gb.normal_form(&p("1")), p("1"));
        let gb = groebner_basis(&ps(&["x^2", "y^2"]), &std2());
        assert!(gb.normal_form(&p("x^3")).is_zero());
        assert_eq!(gb.normal_form(&p("x^2 + x*y + 2")), p("x*y + 2"));
    }

    #[test]
    fn containment() {
        let o = std2();
        assert!(ideal_contains(&ps(&["x"]), &ps(&["x^2"]), &o));
        assert!(!ideal_equal(&ps(&["x"]), &ps(&["x^2"]), &o));
        assert!(!ideal_contains(&ps(&["x^2"]), &ps(&["x"]), &o));
    }

    #[test]
    fn quotients() {
        let w = WeightSystem::new(vec![3, 2]).unwrap();
        let o = MonomialOrder::new(w.clone());
        let q = quotient_basis(&ps(&["x^2+y^3", "2*x", "3*y^2"]), &o);
        assert_eq!(q.standard_monomials, Some(vec![MultiIndex::new(&[0, 0]), MultiIndex::new(&[0, 1])]));
        let dims = graded_dimensions(&q, &w).unwrap();
        assert_eq!(dims.by_degree, BTreeMap::from([(0, 1), (2, 1)]));

        let q = quotient_basis(&ps(&["3*x^2", "3*y^2"]), &std2());
        assert_eq!(q.dimension(), Some(4));
        let dims = graded_dimensions(&q, &WeightSystem::standard(2)).unwrap();
        assert_eq!(dims.by_degree, BTreeMap::from([(0, 1), (1, 2), (2, 1)]));
        assert_eq!(dims.socle_degree, Some(2));

        let q = quotient_basis(&ps(&["x", "y"]), &std2());
        assert_eq!(q.dimension(), Some(1));
        assert_eq!(graded_dimensions(&q, &WeightSystem::standard(2)).unwrap().by_degree, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn infinite_and_unit_quotients() {
        let q = quotient_basis(&ps(&["2*x*y", "x^2"]), &std2());
        assert!(!q.is_finite());
        assert_eq!(q.basis.free_variables(), vec![1]);
        assert!(matches!(graded_dimensions(&q, &WeightSystem::standard(2)), Err(Error::InfiniteDimensional)));

        let q = quotient_basis(&ps(&["x + 1", "x"]), &std2());
        assert!(q.basis.is_unit_ideal());
        assert_eq!(q.dimension(), Some(0));
    }

    #[test]
    fn non_homogeneous_generators_are_named() {
        let q = quotient_basis(&ps(&["x^2", "y + x^2", "y^2"]), &std2());
        match graded_dimensions(&q, &WeightSystem::standard(2)) {
            Err(Error::NotHomogeneous { index, .. }) => assert_eq!(index, 1),
            other => panic!("unexpected {other:?}"),
        }
    }
}
