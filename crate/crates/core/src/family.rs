//! Deterministic families of small test graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Default seed of [`small_family`].
pub const DEFAULT_SEED: u64 = 0x5eed_c4;

/// Every labeled graph on `n` vertices, in order of edge bitmask.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(e, _)| mask >> e & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_edge_list(n, &edges).expect("valid edge list")
        })
        .collect()
}

/// `count` random graphs on `n` vertices; each graph draws its own edge
/// density from {0.3, 0.5, 0.7}.
pub fn random_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32);
    let densities = [0.3, 0.5, 0.7];
    (0..count)
        .map(|_| {
            let p = densities[rng.gen_range(0..densities.len())];
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &edges).expect("valid edge list")
        })
        .collect()
}

/// All labeled graphs on 1 to 4 vertices, 60 random graphs on 5 vertices,
/// 75 on 6, and a few named graphs: 216 graphs in all.
pub fn small_family(seed: u64) -> Vec<Graph> {
    let mut family: Vec<Graph> = (1..=4).flat_map(all_labeled_graphs).collect();
    family.extend(random_graphs(5, 60, seed));
    family.extend(random_graphs(6, 75, seed));
    let k33 = Graph::from_edge_list(
        6,
        &[(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)],
    )
    .expect("valid edge list");
    for g in [
        Graph::cycle(5),
        Graph::complete(5),
        Graph::cycle(6),
        Graph::complete(6),
        Graph::path(6),
        Ok(k33),
    ] {
        family.push(g.expect("valid graph"));
    }
    family
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(all_labeled_graphs(3).len(), 8);
        assert_eq!(all_labeled_graphs(4).len(), 64);
        let family = small_family(DEFAULT_SEED);
        assert_eq!(family.len(), 216);
        assert!(family.iter().all(|g| g.vertex_count() <= 6));
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_graphs(6, 5, 7), random_graphs(6, 5, 7));
        assert_ne!(random_graphs(6, 5, 7), random_graphs(6, 5, 8));
    }
}
