use std::sync::OnceLock;

use crate::spectra::symmetric_spectrum;

/// Largest `k` with `2k + 1 ≤ C(64, 2)`.
const MAX_K: usize = 1007;

static CACHE: [OnceLock<f64>; MAX_K + 1] = [const { OnceLock::new() }; MAX_K + 1];

/// λ(SK_{2,k}), memoised per `k`.
///
/// Computed from the quotient of the equitable partition
/// `{x}, {y}, {w}, {z₁}, {z₂..z_k}` (`w` subdivides `x z₁`), symmetrised as
/// `√(b_ij b_ji)`, so it works for `k` far beyond 64 vertices.
pub fn sk2_spectral_radius(k: usize) -> f64 {
    assert!(k >= 1, "SK_{{2,k}} needs k >= 1");
    match CACHE.get(k) {
        Some(cell) => *cell.get_or_init(|| quotient_radius(k)),
        None => quotient_radius(k),
    }
}

fn quotient_radius(k: usize) -> f64 {
    let r = ((k - 1) as f64).sqrt();
    // x, y, w, z1, Z
    #[rustfmt::skip]
    let q = [
        0.0, 0.0, 1.0, 0.0, r,
        0.0, 0.0, 0.0, 1.0, r,
        1.0, 0.0, 0.0, 1.0, 0.0,
        0.0, 1.0, 1.0, 0.0, 0.0,
        r,   r,   0.0, 0.0, 0.0,
    ];
    symmetric_spectrum(5, &q)
        .expect("5x5 Jacobi converges")
        .spectral_radius()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::spectra::eigenvalues;
    use approx::assert_abs_diff_eq;

    #[test]
    fn matches_generated_graph() {
        for k in 1..=61 {
            let g = FamilySpec::Sk2 { k }.generate().unwrap();
            let direct = eigenvalues(&g).unwrap().spectral_radius();
            assert_abs_diff_eq!(sk2_spectral_radius(k), direct, epsilon = 1e-10);
        }
    }

    #[test]
    fn small_cases() {
        // P4 and C5.
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert_abs_diff_eq!(sk2_spectral_radius(1), golden, epsilon = 1e-12);
        assert_abs_diff_eq!(sk2_spectral_radius(2), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn below_sqrt_m_minus_one() {
        // Non-bipartite and triangle-free with m = 2k + 1 edges.
        for k in 2..=MAX_K {
            let lam = sk2_spectral_radius(k);
            assert!(lam * lam <= (2 * k) as f64 + 1e-9, "k = {k}");
        }
        assert!(sk2_spectral_radius(MAX_K + 5) > sk2_spectral_radius(MAX_K));
    }
}
