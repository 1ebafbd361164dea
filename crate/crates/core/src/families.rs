//! Generators for the named graph families.
//!
//! Labelling is deterministic so generated graphs have stable graph6 strings.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::spectra::{self, SpectrumError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: &'static str, reason: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One member of a named family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// Complete `k`-partite graph on `n` vertices with balanced parts.
    Turan { n: usize, k: usize },
    CompleteBipartite { a: usize, b: usize },
    /// `K_{a,b}` plus one edge inside the part of size `b`.
    KPlus { a: usize, b: usize },
    /// `K⁺_{n/2+1, n/2−1}`: the extra edge sits in the part of size `n/2 + 1`.
    KPlusBalanced { n: usize },
    /// `K_{2,k}` with one edge subdivided.
    Sk2 { k: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// The five small graphs excluded as induced subgraphs in the
    /// counting-size argument: 2K2, the gem, K4, a pendant-loaded diamond, C5.
    Forbidden { i: usize },
}

fn invalid(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters {
        family,
        reason: reason.into(),
    }
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Turan { .. } => "turan",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::KPlus { .. } => "kplus",
            FamilySpec::KPlusBalanced { .. } => "kplus_balanced",
            FamilySpec::Sk2 { .. } => "sk2",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Forbidden { .. } => "forbidden",
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let name = self.name();
        match *self {
            FamilySpec::Turan { n, k } if k == 0 || n < k => Err(invalid(name, "need 1 <= k <= n")),
            FamilySpec::CompleteBipartite { a, b } if a == 0 || b == 0 => {
                Err(invalid(name, "need a, b >= 1"))
            }
            FamilySpec::KPlus { a, b } if a == 0 || b < 2 => {
                Err(invalid(name, "need a >= 1 and b >= 2"))
            }
            FamilySpec::KPlusBalanced { n } if n < 4 || n % 2 == 1 => {
                Err(invalid(name, "need even n >= 4"))
            }
            FamilySpec::Sk2 { k } if k == 0 => Err(invalid(name, "need k >= 1")),
            FamilySpec::Cycle { n } if n < 3 => Err(invalid(name, "need n >= 3")),
            FamilySpec::Complete { n } if n == 0 => Err(invalid(name, "need n >= 1")),
            FamilySpec::Forbidden { i } if !(1..=5).contains(&i) => {
                Err(invalid(name, "index must be in 1..=5"))
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match *self {
            FamilySpec::Turan { n, k } => turan(n, k)?,
            FamilySpec::CompleteBipartite { a, b } => complete_bipartite(a, b)?,
            FamilySpec::KPlus { a, b } => k_plus(a, b)?,
            FamilySpec::KPlusBalanced { n } => k_plus(n / 2 - 1, n / 2 + 1)?,
            FamilySpec::Sk2 { k } => sk2(k)?,
            FamilySpec::Cycle { n } => Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))?,
            FamilySpec::Complete { n } => complete(n)?,
            FamilySpec::Forbidden { i } => forbidden(i),
        };
        Ok(g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Turan { n, k } => write!(f, "turan(n={n},k={k})"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, "complete_bipartite(a={a},b={b})"),
            FamilySpec::KPlus { a, b } => write!(f, "kplus(a={a},b={b})"),
            FamilySpec::KPlusBalanced { n } => write!(f, "kplus_balanced(n={n})"),
            FamilySpec::Sk2 { k } => write!(f, "sk2(k={k})"),
            FamilySpec::Cycle { n } => write!(f, "cycle(n={n})"),
            FamilySpec::Complete { n } => write!(f, "complete(n={n})"),
            FamilySpec::Forbidden { i } => write!(f, "forbidden(i={i})"),
        }
    }
}

/// Family names accepted by [`FamilySpec::from_name`].
pub const FAMILY_NAMES: [&str; 8] = [
    "turan",
    "complete_bipartite",
    "kplus",
    "kplus_balanced",
    "sk2",
    "cycle",
    "complete",
    "forbidden",
];

/// Parameters looked up by name, for front ends that collect them as flags.
pub trait FamilyParams {
    fn get(&self, key: &str) -> Option<usize>;
}

impl<F: Fn(&str) -> Option<usize>> FamilyParams for F {
    fn get(&self, key: &str) -> Option<usize> {
        self(key)
    }
}

impl FamilySpec {
    /// Builds a spec from a family name and named integer parameters.
    pub fn from_name(name: &str, params: &impl FamilyParams) -> Result<Self, FamilyError> {
        let need = |family: &'static str, key: &'static str| {
            params
                .get(key)
                .ok_or_else(|| invalid(family, format!("missing parameter {key}")))
        };
        let spec = match name {
            "turan" => FamilySpec::Turan {
                n: need("turan", "n")?,
                k: need("turan", "k")?,
            },
            "complete_bipartite" | "kab" => FamilySpec::CompleteBipartite {
                a: need("complete_bipartite", "a")?,
                b: need("complete_bipartite", "b")?,
            },
            "kplus" => FamilySpec::KPlus {
                a: need("kplus", "a")?,
                b: need("kplus", "b")?,
            },
            "kplus_balanced" => FamilySpec::KPlusBalanced {
                n: need("kplus_balanced", "n")?,
            },
            "sk2" => FamilySpec::Sk2 {
                k: need("sk2", "k")?,
            },
            "cycle" => FamilySpec::Cycle {
                n: need("cycle", "n")?,
            },
            "complete" => FamilySpec::Complete {
                n: need("complete", "n")?,
            },
            "forbidden" => FamilySpec::Forbidden {
                i: need("forbidden", "i")?,
            },
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses `name(key=value,...)`, the same shape `Display` writes.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, args) = match s.split_once('(') {
            Some((name, rest)) => {
                let args = rest
                    .strip_suffix(')')
                    .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))?;
                (name.trim(), args)
            }
            None => (s, ""),
        };
        let mut pairs = Vec::new();
        for part in args.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| FamilyError::UnknownFamily(s.to_string()))?;
            pairs.push((k.trim().to_string(), v));
        }
        let lookup = |key: &str| pairs.iter().find(|(k, _)| k == key).map(|&(_, v)| v);
        FamilySpec::from_name(name, &lookup)
    }
}

/// Sizes of the Turán parts: the first `n mod k` parts get `⌈n/k⌉` vertices.
pub fn turan_part_sizes(n: usize, k: usize) -> Vec<usize> {
    (0..k).map(|i| n / k + usize::from(i < n % k)).collect()
}

fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GraphError> {
    let n = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let part = &part;
    Graph::from_edge_list(
        n,
        (0..n).flat_map(move |u| {
            (u + 1..n)
                .filter(move |&v| part[u] != part[v])
                .map(move |v| (u, v))
        }),
    )
}

fn turan(n: usize, k: usize) -> Result<Graph, GraphError> {
    complete_multipartite(&turan_part_sizes(n, k))
}

fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    complete_multipartite(&[a, b])
}

fn complete(n: usize) -> Result<Graph, GraphError> {
    complete_multipartite(&vec![1; n])
}

/// Parts `0..a` and `a..a+b`; the extra edge joins `a` and `a + 1`.
fn k_plus(a: usize, b: usize) -> Result<Graph, GraphError> {
    let base = complete_bipartite(a, b)?;
    let edges = base.edges().chain(std::iter::once((a, a + 1)));
    Graph::from_edge_list(a + b, edges)
}

/// `x = 0`, `y = 1`, `z₁..z_k = 2..=k+1`, subdivision vertex `w = k+2`
/// splitting the edge `x z₁`.
fn sk2(k: usize) -> Result<Graph, GraphError> {
    let (x, y, w) = (0, 1, k + 2);
    let mut edges = vec![(x, w), (w, 2)];
    for z in 2..k + 2 {
        edges.push((y, z));
        if z != 2 {
            edges.push((x, z));
        }
    }
    Graph::from_edge_list(k + 3, edges)
}

fn forbidden(i: usize) -> Graph {
    let edges: Vec<(usize, usize)> = match i {
        1 => vec![(0, 1), (2, 3)],
        // P4 0-1-2-3 with apex 4.
        2 => vec![(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
        3 => (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect(),
        // Diamond on 0..4 (1 and 2 have degree 3), pendants 4..8 on vertex 2.
        4 => vec![
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (2, 7),
        ],
        5 => (0..5).map(|v| (v, (v + 1) % 5)).collect(),
        _ => unreachable!("validated"),
    };
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::from_edge_list(n, edges).expect("fixture is valid")
}

/// `e(T_{n,k})`, counted on the generated graph.
pub fn turan_edge_count(n: usize, k: usize) -> Result<usize, FamilyError> {
    Ok(FamilySpec::Turan { n, k }.generate()?.size())
}

/// `(λ₂, λ_{|Gᵢ|−1})` of the `i`-th forbidden fixture.
pub fn forbidden_fixture_eigenvalues(i: usize) -> Result<(f64, f64), FixtureError> {
    let g = FamilySpec::Forbidden { i }.generate()?;
    let s = spectra::eigenvalues(&g)?;
    Ok((s.lambda(2), s.lambda(g.order() - 1)))
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FixtureError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn kplus_3_5() {
        let g = FamilySpec::KPlus { a: 3, b: 5 }.generate().unwrap();
        assert_eq!(g.size(), 16);
        assert_eq!(g.triangle_count(), 3);
        assert!(g.has_edge(3, 4));
    }

    #[test]
    fn turan_6_2_is_k33() {
        let g = FamilySpec::Turan { n: 6, k: 2 }.generate().unwrap();
        assert_eq!(g.size(), 9);
        assert_eq!(g, FamilySpec::CompleteBipartite { a: 3, b: 3 }.generate().unwrap());
        assert_eq!(turan_part_sizes(7, 3), vec![3, 2, 2]);
    }

    #[test]
    fn turan_edge_counts() {
        assert_eq!(turan_edge_count(5, 2).unwrap(), 6);
        assert_eq!(turan_edge_count(6, 3).unwrap(), 12);
        for n in 1..=12 {
            assert_eq!(turan_edge_count(n, n).unwrap(), n * (n - 1) / 2);
            if n >= 2 {
                assert_eq!(turan_edge_count(n, 2).unwrap(), n * n / 4);
            }
        }
        assert!(turan_edge_count(3, 4).is_err());
        assert!(turan_edge_count(3, 0).is_err());
    }

    #[test]
    fn sk2_shape() {
        // SK_{2,1} is P4 (bipartite); from k = 2 on the subdivided edge closes a 5-cycle.
        let p4 = FamilySpec::Sk2 { k: 1 }.generate().unwrap();
        assert_eq!((p4.order(), p4.size()), (4, 3));
        assert!(p4.is_bipartite());
        let c5 = FamilySpec::Sk2 { k: 2 }.generate().unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2) && c5.is_connected().unwrap());
        for k in 1..=40 {
            let g = FamilySpec::Sk2 { k }.generate().unwrap();
            assert_eq!(g.order(), k + 3);
            assert_eq!(g.size(), 2 * k + 1);
            assert_eq!(g.triangle_count(), 0);
            assert_eq!(g.is_bipartite(), k == 1);
        }
    }

    #[test]
    fn balanced_kplus() {
        let g = FamilySpec::KPlusBalanced { n: 8 }.generate().unwrap();
        assert_eq!(g.size(), 5 * 3 + 1);
        assert_eq!(g.triangle_count(), 3);
    }

    #[test]
    fn forbidden_shapes() {
        let sizes: Vec<_> = (1..=5)
            .map(|i| {
                let g = FamilySpec::Forbidden { i }.generate().unwrap();
                (g.order(), g.size())
            })
            .collect();
        assert_eq!(sizes, vec![(4, 2), (5, 7), (4, 6), (8, 9), (5, 5)]);
    }

    #[test]
    fn table_values() {
        let cases = [
            (1, 1.0, -1.0),
            (2, 0.6180, -1.4728),
            (4, 0.7660, -1.3807),
            (5, 0.6180, -1.6180),
        ];
        for (i, l2, lm) in cases {
            let (a, b) = forbidden_fixture_eigenvalues(i).unwrap();
            assert_abs_diff_eq!(a, l2, epsilon = 1e-3);
            assert_abs_diff_eq!(b, lm, epsilon = 1e-3);
        }
        let (a, b) = forbidden_fixture_eigenvalues(3).unwrap();
        assert_abs_diff_eq!(a, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(b, -1.0, epsilon = 1e-12);
    }

    #[test]
    fn invalid_parameters() {
        for spec in [
            FamilySpec::Turan { n: 2, k: 3 },
            FamilySpec::KPlus { a: 1, b: 1 },
            FamilySpec::KPlus { a: 0, b: 4 },
            FamilySpec::KPlusBalanced { n: 7 },
            FamilySpec::KPlusBalanced { n: 2 },
            FamilySpec::Sk2 { k: 0 },
            FamilySpec::Forbidden { i: 6 },
            FamilySpec::Cycle { n: 2 },
        ] {
            assert!(matches!(
                spec.generate(),
                Err(FamilyError::InvalidParameters { .. })
            ));
        }
        assert!(matches!(
            FamilySpec::Complete { n: 65 }.generate(),
            Err(FamilyError::Graph(GraphError::TooManyVertices(65)))
        ));
    }

    #[test]
    fn parse_spec_strings() {
        let spec: FamilySpec = "kplus(a=3,b=5)".parse().unwrap();
        assert_eq!(spec, FamilySpec::KPlus { a: 3, b: 5 });
        assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        assert_eq!(
            "forbidden(i=4)".parse::<FamilySpec>().unwrap(),
            FamilySpec::Forbidden { i: 4 }
        );
        assert!(matches!(
            "wheel(n=5)".parse::<FamilySpec>(),
            Err(FamilyError::UnknownFamily(_))
        ));
        assert!(matches!(
            "turan(n=5)".parse::<FamilySpec>(),
            Err(FamilyError::InvalidParameters { .. })
        ));
    }
}
