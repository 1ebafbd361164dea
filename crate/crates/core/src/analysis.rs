//! Per-graph bundle of every quantity the bounds consume.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{clique_number, Graph, GraphError};
use crate::patterns::{recognize, StructuralFlags};
use crate::spectra::{self, Jacobi, Spectrum, SpectrumError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisRecord {
    pub n: usize,
    pub m: usize,
    pub t: u64,
    pub spectrum: Spectrum,
    pub omega: usize,
    pub n_plus: usize,
    pub is_bipartite: bool,
    pub is_complete_bipartite: bool,
    pub is_connected: bool,
    pub min_degree: usize,
}

/// A graph together with its [`AnalysisRecord`] and [`StructuralFlags`].
#[derive(Debug, Clone)]
pub struct Analysis {
    graph: Graph,
    record: AnalysisRecord,
    flags: StructuralFlags,
}

impl Analysis {
    pub fn new(g: &Graph) -> Result<Self, AnalysisError> {
        Self::with_solver(&mut Jacobi::new(), g)
    }

    /// Computes everything, then refuses spectra that break the trace
    /// identities or disagree with power iteration on λ₁.
    pub fn with_solver(solver: &mut Jacobi, g: &Graph) -> Result<Self, AnalysisError> {
        let spectrum = spectra::eigenvalues_with(solver, g)?;
        let m = g.size();
        let t = g.triangle_count();
        spectrum.verify_identities(m, t)?;
        spectra::cross_check_radius(g, spectrum.spectral_radius())?;
        let flags = recognize(g);
        let record = AnalysisRecord {
            n: g.order(),
            m,
            t,
            omega: clique_number(g)?,
            n_plus: spectrum.positive_count(),
            is_bipartite: g.is_bipartite(),
            is_complete_bipartite: flags.is_complete_bipartite_plus_isolated
                && g.non_isolated() == g.vertex_mask()
                && m > 0,
            is_connected: g.is_connected()?,
            min_degree: g.degree_stats()?.min,
            spectrum,
        };
        Ok(Self {
            graph: g.clone(),
            record,
            flags,
        })
    }

    /// Same analysis with every comparison tolerance replaced by `tol`.
    pub fn with_tol(&self, tol: f64) -> Self {
        let mut out = self.clone();
        out.record.spectrum = out.record.spectrum.with_tol(tol);
        out.record.n_plus = out.record.spectrum.positive_count();
        out
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn record(&self) -> &AnalysisRecord {
        &self.record
    }

    pub fn flags(&self) -> &StructuralFlags {
        &self.flags
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.record.spectrum
    }

    pub fn tol(&self) -> f64 {
        self.record.spectrum.tol()
    }

    /// λ₁
    pub fn lambda(&self) -> f64 {
        self.record.spectrum.spectral_radius()
    }
}
