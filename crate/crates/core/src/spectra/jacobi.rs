//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

use super::SpectrumError;

/// Sweep cap; quadratic convergence needs well under 20 sweeps at n <= 64.
pub const MAX_SWEEPS: usize = 100;

/// Stop once the off-diagonal mass drops below this fraction of `‖A‖²_F`.
pub const OFF_DIAGONAL_RATIO: f64 = 1e-24;

/// Reusable scratch space for [`Jacobi::eigenvalues`].
///
/// A solver owns its working matrix, so one instance per thread is enough for
/// sweeps over millions of graphs without reallocating.
#[derive(Debug, Default, Clone)]
pub struct Jacobi {
    work: Vec<f64>,
}

impl Jacobi {
    pub fn new() -> Self {
        Self::default()
    }

    /// Eigenvalues of the symmetric `n × n` row-major matrix `a`, unsorted.
    ///
    /// Only symmetry of `a` is assumed; the strict lower triangle is ignored.
    pub fn eigenvalues(&mut self, n: usize, a: &[f64]) -> Result<Vec<f64>, SpectrumError> {
        assert_eq!(a.len(), n * n, "matrix is not n x n");
        if n == 0 {
            return Err(SpectrumError::Empty);
        }
        self.work.clear();
        self.work.extend_from_slice(a);
        let w = &mut self.work;
        for p in 0..n {
            for q in p + 1..n {
                w[q * n + p] = w[p * n + q];
            }
        }

        let frob: f64 = w.iter().map(|x| x * x).sum();
        let threshold = OFF_DIAGONAL_RATIO * frob.max(1.0);

        let mut sweeps = 0;
        loop {
            let off: f64 = 2.0
                * (0..n)
                    .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
                    .map(|(p, q)| w[p * n + q] * w[p * n + q])
                    .sum::<f64>();
            if off < threshold {
                break;
            }
            if sweeps == MAX_SWEEPS {
                return Err(SpectrumError::NoConvergence { sweeps, off });
            }
            sweeps += 1;
            for p in 0..n {
                for q in p + 1..n {
                    rotate(w, n, p, q);
                }
            }
        }
        Ok((0..n).map(|i| w[i * n + i]).collect())
    }
}

/// Annihilates `w[p][q]` with one plane rotation applied on both sides.
#[inline]
fn rotate(w: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = w[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = w[p * n + p];
    let aqq = w[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // Smaller root of t² + 2θt − 1 = 0, i.e. rotation angle ≤ π/4.
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    w[p * n + p] = app - t * apq;
    w[q * n + q] = aqq + t * apq;
    w[p * n + q] = 0.0;
    w[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = w[r * n + p];
        let arq = w[r * n + q];
        let new_rp = c * arp - s * arq;
        let new_rq = s * arp + c * arq;
        w[r * n + p] = new_rp;
        w[p * n + r] = new_rp;
        w[r * n + q] = new_rq;
        w[q * n + r] = new_rq;
    }
}
