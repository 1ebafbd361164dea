use trispec::families::{turan_edge_count, turan_part_sizes};
use trispec::graph::clique_number;
use trispec::patterns::{contains_induced, forbidden_scan, recognize};
use trispec::{eigenvalues, Analysis, FamilySpec, Graph};

fn gen(spec: FamilySpec) -> Graph {
    spec.generate().unwrap()
}

#[test]
fn kplus_invariants() {
    for a in 1..=8 {
        for b in 2..=20 {
            let g = gen(FamilySpec::KPlus { a, b });
            assert_eq!(g.order(), a + b);
            assert_eq!(g.size(), a * b + 1);
            assert_eq!(g.triangle_count(), a as u64);
            assert_eq!(clique_number(&g).unwrap(), 3);
        }
    }
}

#[test]
fn turan_invariants() {
    for n in 1..=30 {
        for k in 1..=n.min(8) {
            let g = gen(FamilySpec::Turan { n, k });
            let sizes = turan_part_sizes(n, k);
            assert_eq!(sizes.iter().sum::<usize>(), n);
            assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
            // Sum over pairs of parts.
            let expected = (n * n - sizes.iter().map(|s| s * s).sum::<usize>()) / 2;
            assert_eq!(turan_edge_count(n, k).unwrap(), expected);
            assert_eq!(g.size(), expected);
            assert_eq!(clique_number(&g).unwrap(), k);
        }
    }
}

#[test]
fn complete_bipartite_spectrum() {
    for (a, b) in [(1, 1), (2, 5), (3, 4), (6, 6)] {
        let s = eigenvalues(&gen(FamilySpec::CompleteBipartite { a, b })).unwrap();
        let r = ((a * b) as f64).sqrt();
        assert!((s.lambda(1) - r).abs() < 1e-9 && (s.smallest() + r).abs() < 1e-9);
        assert!(s.values()[1..a + b - 1].iter().all(|x| x.abs() < 1e-9));
    }
}

#[test]
fn sk2_structure() {
    for k in 1..=20 {
        let g = gen(FamilySpec::Sk2 { k });
        assert_eq!((g.order(), g.size(), g.triangle_count()), (k + 3, 2 * k + 1, 0));
        assert_eq!(g.is_bipartite(), k == 1);
        assert!(recognize(&g).is_sk2_plus_isolated);
    }
}

#[test]
fn family_strings_round_trip() {
    for spec in [
        FamilySpec::Turan { n: 10, k: 3 },
        FamilySpec::KPlus { a: 3, b: 5 },
        FamilySpec::KPlusBalanced { n: 12 },
        FamilySpec::Sk2 { k: 4 },
        FamilySpec::Forbidden { i: 2 },
    ] {
        assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
    }
    assert!("kplus(a=0,b=5)".parse::<FamilySpec>().is_err());
    assert!("petersen".parse::<FamilySpec>().is_err());
}

#[test]
fn exceptions_are_isomorphism_invariant() {
    let g = gen(FamilySpec::Sk2 { k: 5 }).with_isolated(2).unwrap();
    let n = g.order();
    let perm: Vec<usize> = (0..n).map(|v| (v * 3 + 4) % n).collect();
    let h = g.permuted(&perm).unwrap();
    assert_eq!(recognize(&g), recognize(&h));
    assert!(recognize(&h).is_sk2_plus_isolated);
}

#[test]
fn forbidden_graphs_are_absent_from_bipartite_hosts_except_2k2() {
    let g = gen(FamilySpec::CompleteBipartite { a: 2, b: 2 }).with_isolated(0).unwrap();
    assert!(forbidden_scan(&g).is_empty());
    // Two disjoint edges of a perfect matching.
    let m = Graph::from_edge_list(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
    assert_eq!(forbidden_scan(&m), vec![1]);
}

#[test]
fn induced_search_on_larger_hosts() {
    let c5 = gen(FamilySpec::Cycle { n: 5 });
    let petersen_like = gen(FamilySpec::Cycle { n: 40 });
    assert!(contains_induced(&petersen_like, &c5).unwrap().is_none());
    let c5_in_c5 = contains_induced(&c5, &c5).unwrap().unwrap();
    assert_eq!(c5.induced_subgraph(&c5_in_c5).unwrap(), c5);
}

#[test]
fn analysis_of_named_graphs() {
    let a = Analysis::new(&gen(FamilySpec::KPlusBalanced { n: 10 })).unwrap();
    let r = a.record();
    assert_eq!((r.t, r.omega), (4, 3));
    assert!(a.lambda() > 5.0);
}
