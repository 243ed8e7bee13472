//! Cross-module invariants: canonicalization, soundness of every stored
//! verdict, and determinism.

use cdg_core::graph::{Diameter, Graph};
use cdg_core::verdict::Verdict;
use cdg_core::{enumerate_graphs, fixtures, kb, Classifier};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

fn random_graph(rng: &mut SmallRng) -> Graph {
    let n: u8 = rng.random_range(1..=6);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.random_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("generated edges are valid")
}

fn random_perm(rng: &mut SmallRng, n: usize) -> Vec<u8> {
    let mut p: Vec<u8> = (0..n as u8).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        p.swap(i, j);
    }
    p
}

#[test]
fn canonical_form_is_permutation_invariant() {
    let mut rng = SmallRng::seed_from_u64(7);
    for _ in 0..200 {
        let g = random_graph(&mut rng);
        let key = g.canonical_form();
        for _ in 0..200 {
            let perm = random_perm(&mut rng, g.vertex_count() as usize);
            assert_eq!(
                g.relabel(&perm).canonical_form(),
                key,
                "graph {g:?} perm {perm:?}"
            );
        }
    }
}

#[test]
fn complement_is_an_involution() {
    let mut rng = SmallRng::seed_from_u64(8);
    for _ in 0..500 {
        let g = random_graph(&mut rng);
        assert_eq!(g.complement().complement(), g);
    }
}

#[test]
fn infinite_diameter_means_disconnected() {
    for n in 1..=5u8 {
        for g in enumerate_graphs(n, false).unwrap().iter() {
            let comps = g.connected_components().len();
            assert_eq!(g.diameter() == Diameter::Infinite, comps > 1, "{g:?}");
        }
    }
}

#[test]
fn six_vertex_unknowns_are_exactly_the_open_catalog() {
    let seed = kb::seed();
    let mut cls = Classifier::new(&seed);
    let report = cls.classify_all(6).unwrap();
    let unknown_keys: Vec<_> = report
        .per_graph
        .iter()
        .filter(|(_, r)| r.verdict == Verdict::Unknown)
        .map(|(k, _)| *k)
        .collect();
    let mut open_keys: Vec<_> = (1..=9)
        .map(|i| fixtures::fig7(i).canonical_form())
        .collect();
    open_keys.sort();
    open_keys.dedup();
    assert_eq!(
        open_keys.len(),
        9,
        "the nine open graphs are pairwise non-isomorphic"
    );
    assert_eq!(unknown_keys, open_keys);
}

#[test]
fn twelve_joins_six_eliminations_nine_open_partition_the_survivors() {
    let mut keys = std::collections::BTreeSet::new();
    for i in 1..=12 {
        keys.insert(fixtures::fig4(i).canonical_form());
    }
    for i in 1..=6 {
        keys.insert(fixtures::fig5(i).canonical_form());
    }
    for i in 1..=9 {
        keys.insert(fixtures::fig7(i).canonical_form());
    }
    assert_eq!(keys.len(), 27, "catalog graphs are pairwise non-isomorphic");
    // All 27 pass the triple condition, are connected, and have diameter
    // at most two.
    for key in &keys {
        let g = key.to_graph();
        assert!(g.is_connected());
        assert!(cdg_core::rules::satisfies_palfy(&g).is_ok());
        assert!(matches!(g.diameter(), Diameter::Finite(d) if d <= 2));
    }
}

#[test]
fn every_stored_verdict_re_verifies() {
    let seed = kb::seed();
    let mut cls = Classifier::new(&seed);
    let report = cls.classify_all(6).unwrap();
    for (key, record) in &report.per_graph {
        kb::verify_entry(key, record).unwrap_or_else(|e| panic!("{e}"));
    }
}

#[test]
fn classification_depends_only_on_the_isomorphism_class() {
    let seed = kb::seed();
    let mut cls = Classifier::new(&seed);
    let mut rng = SmallRng::seed_from_u64(9);
    for _ in 0..50 {
        let g = random_graph(&mut rng);
        let perm = random_perm(&mut rng, g.vertex_count() as usize);
        let h = g.relabel(&perm);
        assert_eq!(cls.classify(&g).verdict, cls.classify(&h).verdict);
    }
}

#[test]
fn core_types_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Graph>();
    assert_send_sync::<cdg_core::CanonicalKey>();
    assert_send_sync::<cdg_core::VertexSet>();
    assert_send_sync::<cdg_core::KnowledgeBase>();
    assert_send_sync::<cdg_core::VerdictRecord>();
    assert_send_sync::<cdg_core::ClassificationReport>();
}

#[test]
fn five_vertex_run_is_consistent() {
    let seed = kb::seed();
    let mut cls = Classifier::new(&seed);
    let report = cls.classify_all(5).unwrap();
    assert_eq!(report.total(), 34);
    assert_eq!(report.pipeline.connected, 21);
    // The two-triangles graph and the six-edge excluded graph are seeded;
    // their verdicts must surface unchanged.
    let shared = fixtures::two_triangles_shared_vertex().canonical_form();
    let excluded = fixtures::five_vertex_excluded().canonical_form();
    let find = |k| {
        report
            .per_graph
            .iter()
            .find(|(key, _)| *key == k)
            .map(|(_, r)| r.verdict)
            .expect("present")
    };
    assert_eq!(find(shared), Verdict::Occurs);
    assert_eq!(find(excluded), Verdict::DoesNotOccur);
    for (key, record) in &report.per_graph {
        kb::verify_entry(key, record).unwrap_or_else(|e| panic!("{e}"));
    }
}
