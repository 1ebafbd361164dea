use std::sync::OnceLock;

use super::{
    sk2_spectral_radius, BoundError, BoundVerdict, Hypothesis, Outcome, TheoremId,
    EQUALITY_FACTOR,
};
use crate::analysis::Analysis;
use crate::families::turan_edge_count;
use crate::graph::{Graph, MAX_VERTICES};

/// Band around a threshold `T` when comparing `λ²` against it.
fn square_band(a: &Analysis) -> f64 {
    EQUALITY_FACTOR * a.tol() * (2.0 * a.record().m as f64).max(1.0)
}

/// `t_{n,2}` for `0 ≤ n ≤ 64`, taken from the generated Turán graphs.
fn bipartite_turan_edges(n: usize) -> usize {
    static TABLE: OnceLock<Vec<usize>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=MAX_VERTICES)
            .map(|n| if n < 2 { 0 } else { turan_edge_count(n, 2).expect("valid") })
            .collect()
    })[n]
}

/// Spectral reconstruction of the triangle count:
/// `t = (1/6) Σ_{i≥2} (λ₁ + λᵢ) λᵢ² + λ₁(λ₁² − m)/3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleReconstruction {
    pub reconstructed_t: f64,
    /// `λ₁(λ₁² − m)/3`
    pub residual_term: f64,
}

impl Analysis {
    pub fn triangle_identity(&self) -> TriangleReconstruction {
        let values = self.spectrum().values();
        let l1 = values[0];
        let m = self.record().m as f64;
        let tail: f64 = values[1..].iter().map(|&l| (l1 + l) * l * l).sum();
        let residual_term = l1 * (l1 * l1 - m) / 3.0;
        TriangleReconstruction {
            reconstructed_t: tail / 6.0 + residual_term,
            residual_term,
        }
    }

    /// The identity as a verdict: violated when the reconstruction misses the
    /// combinatorial count by more than `max(1, 6t)·10·tol`.
    pub fn triangle_identity_verdict(&self) -> BoundVerdict {
        let t = self.record().t as f64;
        let got = self.triangle_identity().reconstructed_t;
        let slack = got - t;
        let allowed = (6.0 * t).max(1.0) * EQUALITY_FACTOR * self.tol();
        BoundVerdict {
            theorem: TheoremId::TriangleIdentity,
            hypothesis: Hypothesis::Satisfied,
            bound_value: t,
            actual_value: got,
            slack,
            exception_matched: false,
            outcome: if slack.abs() <= allowed {
                Outcome::Holds
            } else {
                Outcome::Violated
            },
            tol: self.tol(),
        }
    }

    /// `t ≥ λ(λ² − m)/3`, with equality exactly for complete bipartite graphs
    /// plus isolated vertices.
    pub fn bn_size_bound(&self) -> BoundVerdict {
        let l = self.lambda();
        let m = self.record().m as f64;
        BoundVerdict::judge(
            TheoremId::BnSize,
            Hypothesis::Satisfied,
            l * (l * l - m) / 3.0,
            self.record().t as f64,
            self.flags().is_complete_bipartite_plus_isolated,
            self.tol(),
        )
    }

    /// `t ≥ (n²/12)(λ − n/2)`.
    pub fn bn_order_bound(&self) -> BoundVerdict {
        let n = self.record().n as f64;
        BoundVerdict::judge(
            TheoremId::BnOrder,
            Hypothesis::Satisfied,
            n * n / 12.0 * (self.lambda() - n / 2.0),
            self.record().t as f64,
            false,
            self.tol(),
        )
    }

    /// `λ ≥ √m ⇒ t ≥ ⌊(√m − 1)/2⌋` unless complete bipartite (plus isolated
    /// vertices).
    pub fn counting_size_theorem(&self) -> BoundVerdict {
        let m = self.record().m;
        if m == 0 {
            return BoundVerdict::not_applicable(TheoremId::CountingSize);
        }
        // ⌊(√m − 1)/2⌋ = ⌊(⌊√m⌋ − 1)/2⌋
        let bound = ((m as u64).isqrt() - 1) / 2;
        let l = self.lambda();
        BoundVerdict::judge(
            TheoremId::CountingSize,
            Hypothesis::at_least(l * l, m as f64, square_band(self)),
            bound as f64,
            self.record().t as f64,
            self.flags().is_complete_bipartite_plus_isolated,
            self.tol(),
        )
    }

    /// `λ² ≥ ⌊n²/4⌋ ⇒ t ≥ ⌊n/2⌋ − 1` unless `T_{n,2}`.
    pub fn counting_order_theorem(&self) -> BoundVerdict {
        let n = self.record().n;
        if n < 2 {
            return BoundVerdict::not_applicable(TheoremId::CountingOrder);
        }
        let l = self.lambda();
        BoundVerdict::judge(
            TheoremId::CountingOrder,
            Hypothesis::at_least(l * l, (n * n / 4) as f64, square_band(self)),
            (n / 2 - 1) as f64,
            self.record().t as f64,
            self.flags().is_turan_2,
            self.tol(),
        )
    }

    /// One triangle-existence threshold; `not_applicable` outside its domain.
    pub fn existence_verdict(&self, theorem: TheoremId) -> BoundVerdict {
        let r = self.record();
        let m = r.m;
        if m == 0 {
            return BoundVerdict::not_applicable(theorem);
        }
        let l2 = self.lambda() * self.lambda();
        let band = square_band(self);
        let mf = m as f64;
        let (hypothesis, exception) = match theorem {
            // Strict hypothesis. Complete bipartite graphs sit at λ² = m
            // exactly, so they are excluded structurally.
            TheoremId::Nosal if self.flags().is_complete_bipartite_plus_isolated => {
                (Hypothesis::Failed, false)
            }
            TheoremId::Nosal => (Hypothesis::at_least(l2, mf, band), false),
            TheoremId::Nikiforov => (
                Hypothesis::at_least(l2, mf, band),
                self.flags().is_complete_bipartite_plus_isolated,
            ),
            TheoremId::NonBipartite => {
                if r.is_bipartite {
                    return BoundVerdict::not_applicable(theorem);
                }
                (
                    Hypothesis::at_least(l2, mf - 1.0, band),
                    self.flags().is_c5_plus_isolated,
                )
            }
            TheoremId::Sk2Threshold => {
                if r.is_bipartite || m < 3 || m % 2 == 0 {
                    return BoundVerdict::not_applicable(theorem);
                }
                let threshold = sk2_spectral_radius((m - 1) / 2);
                (
                    Hypothesis::at_least(l2, threshold * threshold, band),
                    self.flags().is_sk2_plus_isolated,
                )
            }
            other => panic!("{other} is not a triangle-existence threshold"),
        };
        BoundVerdict::judge(
            theorem,
            hypothesis,
            1.0,
            r.t.min(1) as f64,
            exception,
            self.tol(),
        )
    }

    /// The applicable thresholds among Nosal, Nikiforov, the `√(m−1)` bound
    /// (non-bipartite only) and the `SK_{2,k}` bound (non-bipartite, odd `m ≥ 3`).
    pub fn triangle_existence_suite(&self) -> Vec<BoundVerdict> {
        let r = self.record();
        if r.m == 0 {
            return Vec::new();
        }
        TheoremId::EXISTENCE
            .into_iter()
            .filter(|id| match id {
                TheoremId::NonBipartite => !r.is_bipartite,
                TheoremId::Sk2Threshold => !r.is_bipartite && r.m >= 3 && r.m % 2 == 1,
                _ => true,
            })
            .map(|id| self.existence_verdict(id))
            .collect()
    }

    /// Rademacher and Lovász–Simonovits, integer arithmetic only.
    pub fn edge_baselines(&self) -> Vec<BoundVerdict> {
        vec![
            self.edge_verdict(TheoremId::Rademacher),
            self.edge_verdict(TheoremId::LovaszSimonovits),
        ]
    }

    fn edge_verdict(&self, theorem: TheoremId) -> BoundVerdict {
        let r = self.record();
        let n = r.n;
        if n < 2 {
            return BoundVerdict::not_applicable(theorem);
        }
        let k = r.m as i64 - bipartite_turan_edges(n) as i64;
        let half = (n / 2) as i64;
        let (applies, bound) = match theorem {
            TheoremId::Rademacher => (k >= 1, half),
            TheoremId::LovaszSimonovits => (k >= 1 && 2 * k < n as i64, k * half),
            other => panic!("{other} is not an edge baseline"),
        };
        BoundVerdict::judge(
            theorem,
            Hypothesis::exact(applies),
            bound as f64,
            r.t as f64,
            false,
            0.0,
        )
    }

    /// Bollobás–Nikiforov conjecture for `K_{r+1}`-free graphs.
    pub fn bn_conjecture(&self, r: usize) -> Result<BoundVerdict, BoundError> {
        let rec = self.record();
        if r < 2 || rec.n < r + 1 {
            return Err(BoundError::ConjectureDomain { r, n: rec.n });
        }
        let s = self.spectrum();
        let actual = s.lambda(1).powi(2) + s.lambda(2).powi(2);
        let bound = 2.0 * rec.m as f64 * (1.0 - 1.0 / r as f64);
        Ok(BoundVerdict::judge_upper(
            TheoremId::BnConjecture(r as u8),
            Hypothesis::exact(rec.omega <= r),
            bound,
            actual,
            self.conjecture_tol(),
        ))
    }

    /// Elphick–Linz–Wocjan conjecture.
    pub fn elw_conjecture(&self) -> Result<BoundVerdict, BoundError> {
        let rec = self.record();
        if rec.m == 0 {
            return Err(BoundError::NoEdges(TheoremId::ElwConjecture));
        }
        let ell = rec.n_plus.min(rec.omega);
        let actual: f64 = self.spectrum().values()[..ell].iter().map(|l| l * l).sum();
        let omega = rec.omega as f64;
        let bound = 2.0 * rec.m as f64 * (omega - 1.0) / omega;
        Ok(BoundVerdict::judge_upper(
            TheoremId::ElwConjecture,
            Hypothesis::Satisfied,
            bound,
            actual,
            self.conjecture_tol(),
        ))
    }

    /// Both conjectures compare squared eigenvalues against a multiple of
    /// `m`, so their tolerance scales like the `Σλ² = 2m` identity.
    fn conjecture_tol(&self) -> f64 {
        self.tol() * (2.0 * self.record().m as f64).max(1.0)
    }

    /// Any verdict by id. Statements outside their domain come back as
    /// `hypothesis_not_met`.
    pub fn verdict(&self, theorem: TheoremId) -> BoundVerdict {
        match theorem {
            TheoremId::TriangleIdentity => self.triangle_identity_verdict(),
            TheoremId::BnSize => self.bn_size_bound(),
            TheoremId::BnOrder => self.bn_order_bound(),
            TheoremId::CountingSize => self.counting_size_theorem(),
            TheoremId::CountingOrder => self.counting_order_theorem(),
            TheoremId::Nosal
            | TheoremId::Nikiforov
            | TheoremId::NonBipartite
            | TheoremId::Sk2Threshold => self.existence_verdict(theorem),
            TheoremId::Rademacher | TheoremId::LovaszSimonovits => self.edge_verdict(theorem),
            TheoremId::BnConjecture(r) => self
                .bn_conjecture(r as usize)
                .unwrap_or_else(|_| BoundVerdict::not_applicable(theorem)),
            TheoremId::ElwConjecture => self
                .elw_conjecture()
                .unwrap_or_else(|_| BoundVerdict::not_applicable(theorem)),
        }
    }
}

macro_rules! graph_entry_points {
    ($($(#[$doc:meta])* $name:ident -> $ret:ty;)*) => {
        $(
            $(#[$doc])*
            pub fn $name(g: &Graph) -> Result<$ret, BoundError> {
                Ok(Analysis::new(g).map_err(BoundError::from)?.$name())
            }
        )*
    };
}

graph_entry_points! {
    /// See [`Analysis::triangle_identity`].
    triangle_identity -> TriangleReconstruction;
    /// See [`Analysis::bn_size_bound`].
    bn_size_bound -> BoundVerdict;
    /// See [`Analysis::bn_order_bound`].
    bn_order_bound -> BoundVerdict;
    /// See [`Analysis::counting_size_theorem`].
    counting_size_theorem -> BoundVerdict;
    /// See [`Analysis::counting_order_theorem`].
    counting_order_theorem -> BoundVerdict;
    /// See [`Analysis::triangle_existence_suite`].
    triangle_existence_suite -> Vec<BoundVerdict>;
    /// See [`Analysis::edge_baselines`].
    edge_baselines -> Vec<BoundVerdict>;
}

pub fn bn_conjecture(g: &Graph, r: usize) -> Result<BoundVerdict, BoundError> {
    Analysis::new(g)?.bn_conjecture(r)
}

pub fn elw_conjecture(g: &Graph) -> Result<BoundVerdict, BoundError> {
    Analysis::new(g)?.elw_conjecture()
}
