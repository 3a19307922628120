//! Fixtures shared by the benchmarks.

use nashjet_core::{build_jacobian, maximal_minors, parse_polynomial, Polynomial, Variant, WeightSystem};

/// A singularity from the bundled catalog, parsed.
pub fn fixture(poly: &str, weights: &[u32]) -> (Polynomial, WeightSystem) {
    let w = WeightSystem::new(weights.to_vec()).expect("valid weights");
    let f = parse_polynomial(poly, w.nvars()).expect("valid polynomial");
    (f, w)
}

/// Generators of `⟨f, J_n(f)⟩` for the zero-diagonal matrix.
pub fn tn_generators(f: &Polynomial, n: u32) -> Vec<Polynomial> {
    let j = build_jacobian(f, n, Variant::ZeroDiagonal).expect("n ≥ 1");
    let m = maximal_minors(&j, nashjet_core::DEFAULT_MAX_MINORS).expect("within cap");
    std::iter::once(f.clone()).chain(m.generators).collect()
}
