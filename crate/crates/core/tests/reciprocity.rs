use chromatic_reciprocity::family::{all_labeled_graphs, random_graphs, small_family, DEFAULT_SEED};
use chromatic_reciprocity::graph::SearchOrder;
use chromatic_reciprocity::orientations::enumerate_acyclic;
use chromatic_reciprocity::reciprocity::{
    check_bipolar, check_by_name, check_theorem1, check_theorem44, check_theorem45, check_theorem45_relabeled,
    CheckParams, CHECK_NAMES,
};
use chromatic_reciprocity::{Error, Graph, VertexSet};
use num_bigint::BigInt;

/// Orientations of `G[set]`: (all acyclic, those whose unique source is the minimum).
fn block_counts(g: &Graph, set: VertexSet) -> (u64, u64) {
    let (sub, _) = g.induced_subgraph(set).unwrap();
    let mut acyclic = 0;
    let mut rooted = 0;
    for o in enumerate_acyclic(&sub).unwrap() {
        acyclic += 1;
        if !set.is_empty() && o.sources(&sub) == VertexSet::singleton(1) {
            rooted += 1;
        }
    }
    (acyclic, rooted)
}

/// Tuples counted by assigning every vertex a block index.
fn tuples_by_assignment(g: &Graph, rooted: usize, free: usize) -> BigInt {
    let n = g.vertex_count();
    let k = rooted + free;
    if k == 0 {
        return BigInt::from((n == 0) as u32);
    }
    let mut total = BigInt::from(0);
    let mut f = vec![0usize; n];
    loop {
        let mut product = BigInt::from(1);
        for b in 0..k {
            let set = VertexSet::from_vertices((1..=n).filter(|&v| f[v - 1] == b));
            let (acyclic, single) = block_counts(g, set);
            product *= if b < rooted { single } else { acyclic };
        }
        total += product;
        let mut pos = 0;
        loop {
            if pos == n {
                return total;
            }
            f[pos] += 1;
            if f[pos] < k {
                break;
            }
            f[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn tuple_counts_against_assignment_oracle() {
    let mut graphs: Vec<Graph> = (1..=4).flat_map(all_labeled_graphs).collect();
    graphs.extend(random_graphs(5, 12, DEFAULT_SEED));
    for g in graphs {
        for i in 0..=3 {
            for j in 0..=3 - i {
                let report = check_theorem1(&g, i, j).unwrap();
                assert!(report.passed(), "{g:?}: {report}");
                assert_eq!(report.count, tuples_by_assignment(&g, i, j), "{g:?} i={i} j={j}");
            }
        }
    }
}

#[test]
fn pinned_tuples_without_pins_are_plain_tuples() {
    for g in small_family(DEFAULT_SEED).into_iter().filter(|g| g.vertex_count() <= 5) {
        for i in 0..=2 {
            for j in 0..=2 - i {
                let a = check_theorem44(&g, 0, i, j).unwrap();
                let b = check_theorem1(&g, i, j).unwrap();
                assert_eq!(a.count, b.count);
            }
        }
    }
}

#[test]
fn unique_sink_counts_up_to_three_pinned_vertices() {
    for g in small_family(DEFAULT_SEED).into_iter().filter(Graph::is_connected) {
        for d in 1..=3.min(g.vertex_count()) {
            if !g.is_clique(VertexSet::full(d)) {
                continue;
            }
            for i in 0..=3 {
                let a = check_theorem45_relabeled(&g, d, i, SearchOrder::SmallestFirst).unwrap();
                let b = check_theorem45_relabeled(&g, d, i, SearchOrder::LargestFirst).unwrap();
                assert!(a.passed() && b.passed(), "{g:?}: {a} {b}");
                assert_eq!(a.count, b.count);
            }
        }
    }
}

#[test]
fn unique_sink_preconditions() {
    let two_edges = Graph::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
    assert!(matches!(check_theorem45(&two_edges, 1, 0), Err(Error::Disconnected)));
    let path = Graph::path(4).unwrap();
    assert!(matches!(check_theorem45(&path, 3, 0), Err(Error::NotAClique(3))));
    let bad = Graph::from_edge_list(3, &[(1, 3), (2, 3)]).unwrap();
    assert!(matches!(check_theorem45(&bad, 1, 0), Err(Error::BadLabeling(2))));
    assert!(check_theorem45(&path, 0, 0).is_err());
}

#[test]
fn bipolar_count_does_not_depend_on_the_edge() {
    for g in small_family(DEFAULT_SEED).into_iter().filter(Graph::is_connected) {
        let counts: Vec<BigInt> = g
            .edges()
            .iter()
            .flat_map(|&(u, v)| [(u, v), (v, u)])
            .map(|(u, v)| {
                let report = check_bipolar(&g, u, v).unwrap();
                assert!(report.passed(), "{g:?}: {report}");
                report.count
            })
            .collect();
        assert!(counts.windows(2).all(|w| w[0] == w[1]), "{g:?}");
    }
}

#[test]
fn dispatch_by_name() {
    let g = Graph::cycle(4).unwrap();
    let params = CheckParams {
        i: 1,
        j: 1,
        d: 1,
        k: 1,
        u: 1,
        v: 2,
    };
    for name in CHECK_NAMES {
        let report = check_by_name(&g, name, params).unwrap();
        assert!(report.passed(), "{name}: {report}");
    }
    assert!(check_by_name(&g, "nonsense", params).is_err());
}
