//! Adjacency spectra and the trace identities tying them to `m` and `t(G)`.
//!
//! For the adjacency matrix `A` of a simple graph,
//!
//! ```text
//! Σ λᵢ  = tr A  = 0
//! Σ λᵢ² = tr A² = 2m
//! Σ λᵢ³ = tr A³ = 6 t(G)
//! ```
//!
//! The triangle count used on the right is always the combinatorial one, so
//! these identities double as an end-to-end check on the eigensolver.

mod jacobi;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub use jacobi::{Jacobi, MAX_SWEEPS, OFF_DIAGONAL_RATIO};

/// Relative factor of the default comparison tolerance.
pub const RELATIVE_TOL: f64 = 1e-9;

/// Iteration cap of the power-iteration cross-check.
pub const POWER_ITERATION_CAP: usize = 10_000;

/// Allowed relative disagreement between Jacobi and power iteration on λ₁.
pub const CROSS_CHECK_RTOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("spectrum of the empty graph is undefined")]
    Empty,
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("spectral radius cross-check failed: Jacobi {jacobi}, power iteration {power}")]
    CrossCheck { jacobi: f64, power: f64 },
    #[error("trace identity {identity} off by {residual:e} (allowed {allowed:e})")]
    TraceIdentity {
        identity: &'static str,
        residual: f64,
        allowed: f64,
    },
    #[error("subspectrum has {sub} values but the host only {host}")]
    InterlacingSize { host: usize, sub: usize },
}

/// All eigenvalues in non-increasing order plus the tolerance for comparing them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Sorts `values` descending and attaches the default tolerance
    /// `RELATIVE_TOL · max(1, λ₁)`.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let top = values.first().copied().unwrap_or(0.0);
        Self {
            values,
            tol: RELATIVE_TOL * top.max(1.0),
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// λ_i with 1-based `i`, as written in the literature.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    /// λ₁.
    pub fn spectral_radius(&self) -> f64 {
        self.values[0]
    }

    /// λₙ.
    pub fn smallest(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }

    pub fn power_sum(&self, k: i32) -> f64 {
        self.values.iter().map(|x| x.powi(k)).sum()
    }

    /// Groups of values separated by gaps larger than `10·tol`.
    pub fn distinct_count(&self) -> usize {
        if self.values.is_empty() {
            return 0;
        }
        1 + self
            .values
            .windows(2)
            .filter(|w| w[0] - w[1] > 10.0 * self.tol)
            .count()
    }

    /// n⁺: values above `10·tol`; anything within the band counts as zero.
    pub fn positive_count(&self) -> usize {
        self.values.iter().filter(|&&x| x > 10.0 * self.tol).count()
    }

    /// Residuals of the three trace identities for a graph with `m` edges and
    /// `t` triangles.
    pub fn trace_residuals(&self, m: usize, t: u64) -> TraceResiduals {
        TraceResiduals {
            sum: self.power_sum(1),
            sum_squares: self.power_sum(2) - 2.0 * m as f64,
            sum_cubes: self.power_sum(3) - 6.0 * t as f64,
        }
    }

    /// Checks the trace identities and Perron dominance at this spectrum's tolerance.
    pub fn verify_identities(&self, m: usize, t: u64) -> Result<(), SpectrumError> {
        let n = self.values.len() as f64;
        let scale = (2.0 * m as f64).max(1.0);
        let r = self.trace_residuals(m, t);
        let checks = [
            ("sum", r.sum, n * self.tol),
            ("sum of squares", r.sum_squares, scale * self.tol),
            ("sum of cubes", r.sum_cubes, scale * self.tol),
            (
                "perron dominance",
                (self.smallest().abs() - self.spectral_radius()).max(0.0),
                self.tol,
            ),
        ];
        for (identity, residual, allowed) in checks {
            if residual.abs() > allowed || residual.is_nan() {
                return Err(SpectrumError::TraceIdentity {
                    identity,
                    residual,
                    allowed,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceResiduals {
    pub sum: f64,
    pub sum_squares: f64,
    pub sum_cubes: f64,
}

/// Adjacency spectrum of `g`.
pub fn eigenvalues(g: &Graph) -> Result<Spectrum, SpectrumError> {
    eigenvalues_with(&mut Jacobi::new(), g)
}

/// [`eigenvalues`] reusing a caller-owned solver.
pub fn eigenvalues_with(solver: &mut Jacobi, g: &Graph) -> Result<Spectrum, SpectrumError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectrumError::Empty);
    }
    let values = solver.eigenvalues(n, &g.adjacency_matrix())?;
    Ok(Spectrum::from_values(values))
}

/// Spectrum of a symmetric matrix given row-major.
pub fn symmetric_spectrum(n: usize, a: &[f64]) -> Result<Spectrum, SpectrumError> {
    Ok(Spectrum::from_values(Jacobi::new().eigenvalues(n, a)?))
}

/// λ₁ of `g`, confirmed by power iteration.
pub fn spectral_radius(g: &Graph) -> Result<f64, SpectrumError> {
    let s = eigenvalues(g)?;
    cross_check_radius(g, s.spectral_radius())?;
    Ok(s.spectral_radius())
}

/// Fails if power iteration disagrees with `jacobi` by more than
/// [`CROSS_CHECK_RTOL`] relative.
pub fn cross_check_radius(g: &Graph, jacobi: f64) -> Result<(), SpectrumError> {
    let power = power_iteration_radius(g);
    if (power - jacobi).abs() > CROSS_CHECK_RTOL * jacobi.abs().max(1.0) {
        return Err(SpectrumError::CrossCheck { jacobi, power });
    }
    Ok(())
}

/// Rayleigh-quotient power iteration on `A + I` from the all-ones vector.
///
/// The all-ones start has positive weight on the Perron vector of every
/// component, so the iteration reaches λ₁ of the whole graph. The unit shift
/// makes λ₁ + 1 strictly dominant in modulus even for bipartite graphs.
pub fn power_iteration_radius(g: &Graph) -> f64 {
    let n = g.order();
    if n == 0 {
        return 0.0;
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut rho = 0.0;
    for _ in 0..POWER_ITERATION_CAP {
        for (v, yv) in y.iter_mut().enumerate() {
            let mut acc = x[v];
            let mut row = g.neighbors(v);
            while row != 0 {
                acc += x[row.trailing_zeros() as usize];
                row &= row - 1;
            }
            *yv = acc;
        }
        rho = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - rho * a).powi(2))
            .sum::<f64>()
            .sqrt();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xv, yv) in x.iter_mut().zip(&y) {
            *xv = yv / norm;
        }
        if residual <= 1e-10 * rho.max(1.0) {
            break;
        }
    }
    rho - 1.0
}

/// Cauchy interlacing between a host spectrum (n values) and the spectrum
/// of an `r × r` principal submatrix: `λᵢ ≥ μᵢ ≥ λ_{i+n−r}` for `1 ≤ i ≤ r`.
pub fn check_interlacing(host: &Spectrum, sub: &Spectrum) -> Result<bool, SpectrumError> {
    let (n, r) = (host.len(), sub.len());
    if r > n {
        return Err(SpectrumError::InterlacingSize { host: n, sub: r });
    }
    let tol = host.tol().max(sub.tol());
    Ok(sub.values().iter().enumerate().all(|(i, &mu)| {
        host.values[i] + tol >= mu && mu >= host.values[i + n - r] - tol
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn complete(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edge_list(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            .unwrap()
    }

    #[test]
    fn k4_spectrum() {
        let s = eigenvalues(&complete(4)).unwrap();
        for (got, want) in s.values().iter().zip([3.0, -1.0, -1.0, -1.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        assert_eq!(s.distinct_count(), 2);
        assert_eq!(s.positive_count(), 1);
    }

    #[test]
    fn c5_golden_ratio_pairs() {
        let s = eigenvalues(&cycle(5)).unwrap();
        assert_abs_diff_eq!(s.lambda(1), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.lambda(2), 0.6180, epsilon = 1e-3);
        assert_abs_diff_eq!(s.lambda(4), -1.6180, epsilon = 1e-3);
        assert_eq!(s.distinct_count(), 3);
    }

    #[test]
    fn complete_bipartite_spectrum() {
        let s = eigenvalues(&complete_bipartite(3, 4)).unwrap();
        let r = 12f64.sqrt();
        assert_abs_diff_eq!(s.lambda(1), r, epsilon = 1e-12);
        assert_abs_diff_eq!(s.lambda(7), -r, epsilon = 1e-12);
        for i in 2..=6 {
            assert_abs_diff_eq!(s.lambda(i), 0.0, epsilon = 1e-12);
        }
        assert_eq!(s.positive_count(), 1);
        assert_eq!(eigenvalues(&complete_bipartite(2, 3)).unwrap().distinct_count(), 3);
    }

    #[test]
    fn two_k2_has_two_positive() {
        let g = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        let s = eigenvalues(&g).unwrap();
        assert_eq!(s.positive_count(), 2);
        assert_abs_diff_eq!(s.lambda(2), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.lambda(3), -1.0, epsilon = 1e-12);
    }

    #[test]
    fn radius_examples() {
        assert_abs_diff_eq!(
            spectral_radius(&complete_bipartite(5, 5)).unwrap(),
            5.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            spectral_radius(&complete_bipartite(1, 4)).unwrap(),
            2.0,
            epsilon = 1e-12
        );
        assert_eq!(spectral_radius(&Graph::empty(1).unwrap()).unwrap(), 0.0);
        assert_eq!(eigenvalues(&Graph::empty(0).unwrap()), Err(SpectrumError::Empty));
    }

    #[test]
    fn power_iteration_handles_bipartite_and_disconnected() {
        // K_{3,3} alone oscillates without the shift.
        assert_abs_diff_eq!(
            power_iteration_radius(&complete_bipartite(3, 3)),
            3.0,
            epsilon = 1e-9
        );
        // K4 plus a disjoint P10: the larger component is not the dominant one.
        let mut edges: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        edges.extend((4..13).map(|i| (i, i + 1)));
        let g = Graph::from_edge_list(14, edges).unwrap();
        assert_abs_diff_eq!(power_iteration_radius(&g), 3.0, epsilon = 1e-9);
        assert!(spectral_radius(&g).is_ok());
    }

    #[test]
    fn cross_check_rejects_wrong_value() {
        assert!(matches!(
            cross_check_radius(&complete(4), 3.1),
            Err(SpectrumError::CrossCheck { .. })
        ));
    }

    #[test]
    fn identities_hold_for_k4() {
        let g = complete(4);
        let s = eigenvalues(&g).unwrap();
        s.verify_identities(6, 4).unwrap();
        assert!(matches!(
            s.verify_identities(6, 5),
            Err(SpectrumError::TraceIdentity { identity: "sum of cubes", .. })
        ));
    }

    #[test]
    fn interlacing_examples() {
        let k4 = eigenvalues(&complete(4)).unwrap();
        let k3 = eigenvalues(&complete(3)).unwrap();
        assert!(check_interlacing(&k4, &k3).unwrap());
        assert!(check_interlacing(&k4, &k4).unwrap());

        // C5 = (2, φ⁻¹, φ⁻¹, −φ, −φ), P3 = (√2, 0, −√2):
        // 2 ≥ √2 ≥ φ⁻¹, φ⁻¹ ≥ 0 ≥ −φ, φ⁻¹ ≥ −√2 ≥ −φ.
        let c5 = eigenvalues(&cycle(5)).unwrap();
        let p3 = eigenvalues(&Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap()).unwrap();
        assert!(check_interlacing(&c5, &p3).unwrap());

        // K3 does not interlace inside 2K2 (it is not a principal submatrix).
        let two_k2 = eigenvalues(&Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap()).unwrap();
        assert!(!check_interlacing(&two_k2, &k3).unwrap());
        assert_eq!(
            check_interlacing(&k3, &k4),
            Err(SpectrumError::InterlacingSize { host: 3, sub: 4 })
        );
    }
}
