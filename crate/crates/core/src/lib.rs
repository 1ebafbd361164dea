//! Triangles versus adjacency eigenvalues on small graphs.
//!
//! Graphs up to 64 vertices, a dense Jacobi eigensolver, generators for the
//! extremal families, exact recognisers for the exception graphs, verdicts
//! for the spectral triangle bounds and a deterministic sweep harness.
//!
//! ```
//! use trispec::{Analysis, FamilySpec, Outcome};
//!
//! let g = FamilySpec::KPlus { a: 3, b: 4 }.generate().unwrap();
//! let a = Analysis::new(&g).unwrap();
//! assert_eq!(a.record().t, 3);
//! assert_eq!(a.bn_size_bound().outcome, Outcome::Holds);
//! ```
//!
//! The guide in `book/` walks through each module.

pub mod analysis;
pub mod bounds;
pub mod families;
pub mod graph;
pub mod patterns;
pub mod spectra;
pub mod sweep;

pub use analysis::{Analysis, AnalysisError, AnalysisRecord};
pub use bounds::{BoundError, BoundVerdict, Hypothesis, Outcome, TheoremId};
pub use families::FamilySpec;
pub use graph::{parse_graph6, to_graph6, Graph, GraphError};
pub use spectra::{eigenvalues, Spectrum, SpectrumError};
pub use sweep::{run_sweep, scan_conjectures, Source, SweepConfig, SweepReport};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/spectra.md")]
    mod spectra {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/sweeps.md")]
    mod sweeps {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
