use chromatic_reciprocity::family::{all_labeled_graphs, random_graphs, small_family, DEFAULT_SEED};
use chromatic_reciprocity::orientations::{
    acyclic_count_table, assemble_from_blocks, enumerate_acyclic, source_components, unique_source_min_table,
    Orientation,
};
use chromatic_reciprocity::{Graph, VertexSet};

fn graphs_up_to_seven() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=4).flat_map(all_labeled_graphs).collect();
    graphs.extend(random_graphs(5, 20, DEFAULT_SEED));
    graphs.extend(random_graphs(6, 15, DEFAULT_SEED));
    graphs.extend(random_graphs(7, 10, DEFAULT_SEED));
    graphs
}

fn arc_directed(graph: &Graph, o: Orientation, from: usize, to: usize) -> bool {
    o.arcs(graph).contains(&(from, to))
}

#[test]
fn source_components_satisfy_the_four_conditions() {
    for g in graphs_up_to_seven() {
        for o in enumerate_acyclic(&g).unwrap() {
            let parts = source_components(&g, o).unwrap();
            let parts = parts.parts();

            let mut union = VertexSet::EMPTY;
            for &s in parts {
                assert!(!s.intersects(union), "{g:?}: overlapping parts");
                union = union | s;
            }
            assert_eq!(union, g.vertices());

            for &s in parts {
                let (_, restricted, labels) = o.restrict(&g, s).unwrap();
                let (sub, _) = g.induced_subgraph(s).unwrap();
                assert!(restricted.is_acyclic(&sub));
                let sources: Vec<usize> = restricted.sources(&sub).iter().map(|v| labels[v - 1]).collect();
                assert_eq!(sources, vec![s.min().unwrap()], "{g:?}: part {s}");
            }

            for (k, &sk) in parts.iter().enumerate() {
                for &sl in &parts[k + 1..] {
                    for &(u, v) in g.edges() {
                        if sk.contains(u) && sl.contains(v) {
                            assert!(arc_directed(&g, o, v, u));
                        } else if sk.contains(v) && sl.contains(u) {
                            assert!(arc_directed(&g, o, u, v));
                        }
                    }
                }
            }

            let minima: Vec<usize> = parts.iter().map(|&s| s.min().unwrap()).collect();
            assert!(minima.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn blocks_determine_the_orientation() {
    for g in small_family(DEFAULT_SEED) {
        for o in enumerate_acyclic(&g).unwrap() {
            let decomposition = source_components(&g, o).unwrap();
            let blocks: Vec<(VertexSet, Orientation)> = decomposition
                .parts()
                .iter()
                .map(|&s| (s, o.restrict(&g, s).unwrap().1))
                .collect();
            let rebuilt = assemble_from_blocks(&g, &blocks).unwrap();
            assert_eq!(rebuilt, o);
            assert_eq!(source_components(&g, rebuilt).unwrap(), decomposition);
        }
    }
}

#[test]
fn acyclic_table_matches_enumeration() {
    for g in graphs_up_to_seven() {
        let a = acyclic_count_table(&g).unwrap();
        for set in g.vertices().subsets() {
            let (sub, _) = g.induced_subgraph(set).unwrap();
            let direct = enumerate_acyclic(&sub).unwrap().count() as i128;
            assert_eq!(a.get(set), direct, "{g:?} on {set}");
        }
    }
}

#[test]
fn unique_source_count_does_not_depend_on_the_vertex() {
    for g in small_family(DEFAULT_SEED) {
        let b = unique_source_min_table(&g).unwrap();
        for set in g.vertices().subsets().filter(|s| !s.is_empty()) {
            let (sub, _) = g.induced_subgraph(set).unwrap();
            let orientations: Vec<Orientation> = enumerate_acyclic(&sub).unwrap().collect();
            for v in sub.vertices().iter() {
                let single = orientations
                    .iter()
                    .filter(|o| o.sources(&sub) == VertexSet::singleton(v))
                    .count() as i128;
                assert_eq!(single, b.get(set), "{g:?} on {set}, vertex {v}");
            }
        }
    }
}
