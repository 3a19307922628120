//! Serializable views of computed objects. Polynomials are rendered with the
//! weighted order of the instance so output is stable across runs.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::derivations::DerivationSpaceReport;
use crate::groebner::GradedQuotient;
use crate::jacobian::{JacobianMatrix, MinorIdeal, Variant};
use crate::multi_index::MultiIndex;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::weights::WeightSystem;

#[derive(Clone, Debug, Serialize)]
pub struct EntryView {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinorView {
    pub columns: Vec<MultiIndex>,
    pub degree: Option<u64>,
    pub polynomial: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobianReport {
    pub n: u32,
    pub s: usize,
    pub variant: Variant,
    pub rows: Vec<MultiIndex>,
    pub cols: Vec<MultiIndex>,
    /// Nonzero entries only.
    pub entries: Vec<EntryView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minors: Option<Vec<MinorView>>,
}

fn degree_of(p: &Polynomial, w: &WeightSystem) -> Option<u64> {
    p.weighted_degree(w).filter(|d| d.homogeneous).map(|d| d.degree)
}

pub fn jacobian_report(j: &JacobianMatrix, w: &WeightSystem, minors: Option<&MinorIdeal>) -> JacobianReport {
    let order = MonomialOrder::new(w.clone());
    let mut entries = Vec::new();
    for (r, row) in j.entries.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            if !e.is_zero() {
                entries.push(EntryView { row: r, col: c, value: e.to_string_with(&order) });
            }
        }
    }
    let minors = minors.map(|m| {
        m.generators
            .iter()
            .zip(&m.sources)
            .map(|(g, src)| MinorView {
                columns: j.column_labels(&src[0]),
                degree: degree_of(g, w),
                polynomial: g.to_string_with(&order),
            })
            .collect()
    });
    JacobianReport {
        n: j.n,
        s: j.nvars(),
        variant: j.variant,
        rows: j.rows.clone(),
        cols: j.cols.clone(),
        entries,
        minors,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    pub n: u32,
    pub subsets: String,
    pub nonzero_minors: usize,
    pub generators: Vec<MinorView>,
    pub reduced_basis: Vec<String>,
}

pub fn ideal_report(j: &JacobianMatrix, minors: &MinorIdeal, q: &GradedQuotient) -> IdealReport {
    let w = q.weights();
    let full = jacobian_report(j, w, Some(minors));
    IdealReport {
        n: j.n,
        subsets: minors.subset_count.to_string(),
        nonzero_minors: minors.nonzero_minors,
        generators: full.minors.unwrap_or_default(),
        reduced_basis: polys(&q.basis.polynomials(), q.basis.order()),
    }
}

fn polys(ps: &[Polynomial], order: &MonomialOrder) -> Vec<String> {
    ps.iter().map(|p| p.to_string_with(order)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub generators: Vec<String>,
    pub reduced_basis: Vec<String>,
    pub zero_dimensional: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standard_monomials: Option<Vec<MultiIndex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims_by_degree: Option<BTreeMap<u64, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_dim: Option<usize>,
}

pub fn quotient_report(q: &GradedQuotient) -> QuotientReport {
    let order = q.basis.order();
    let finite = q.is_finite();
    QuotientReport {
        generators: polys(&q.generators, order),
        reduced_basis: polys(&q.basis.polynomials(), order),
        zero_dimensional: finite,
        standard_monomials: q.standard_monomials.clone(),
        dims_by_degree: finite.then(|| q.degree_strata.clone()),
        total_dim: q.dimension(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivationReport {
    pub degree: i64,
    pub dimension: usize,
    /// Each basis element as the images of `x_1, …, x_s`.
    pub basis: Vec<Vec<String>>,
}

pub fn derivation_report(r: &DerivationSpaceReport, order: &MonomialOrder) -> DerivationReport {
    DerivationReport {
        degree: r.degree,
        dimension: r.dimension,
        basis: r.basis.iter().map(|d| polys(&d.images, order)).collect(),
    }
}
