//! Seeded instance generators and named fixtures.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! the caller's 64-bit seed, so every generated instance is reproducible
//! from its parameters alone.

use crate::coloring::{Color, ListAssignment};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Generator seed; the same seed always yields the same instance.
pub type Seed = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("invalid size {n} for {kind}")]
    InvalidSize { kind: &'static str, n: usize },
    #[error("n*d must be even (n={n}, d={d})")]
    OddStubCount { n: usize, d: usize },
    #[error("degree d={d} must be smaller than n={n}")]
    DegreeTooLarge { d: usize, n: usize },
    #[error("no simple matching found after {0} resampling attempts")]
    ResamplingFailed(usize),
    #[error("degree cap {dmax} cannot connect {n} vertices")]
    InfeasibleCap { dmax: usize, n: usize },
    #[error("palette {palette} smaller than list size {size}")]
    PaletteTooSmall { size: usize, palette: usize },
}

/// The named fixture graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedKind {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Petersen,
    Prism,
}

/// Builds a fixture with its canonical labeling: cycles use edges
/// `(i, i+1 mod n)`, the Petersen graph is the outer 5-cycle `0..5`, spokes
/// `i — i+5`, and the inner 5-cycle `(5, 7, 9, 6, 8)`, and the prism is the
/// triangles `0-1-2` and `3-4-5` joined by rungs `i — i+3`.
pub fn gen_named(kind: NamedKind) -> Result<Graph, InstanceError> {
    match kind {
        NamedKind::Cycle(n) => {
            if n < 3 {
                return Err(InstanceError::InvalidSize { kind: "cycle", n });
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(Graph::build(n, &edges).expect("canonical cycle"))
        }
        NamedKind::Path(n) => {
            if n < 1 {
                return Err(InstanceError::InvalidSize { kind: "path", n });
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Ok(Graph::build(n, &edges).expect("canonical path"))
        }
        NamedKind::Complete(n) => {
            if n < 1 {
                return Err(InstanceError::InvalidSize { kind: "complete", n });
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Ok(Graph::build(n, &edges).expect("canonical complete"))
        }
        NamedKind::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5)); // outer cycle
                edges.push((i, i + 5)); // spokes
                edges.push((i + 5, (i + 2) % 5 + 5)); // inner 5-cycle (5,7,9,6,8)
            }
            Ok(Graph::build(10, &edges).expect("canonical petersen"))
        }
        NamedKind::Prism => {
            let edges = [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ];
            Ok(Graph::build(6, &edges).expect("canonical prism"))
        }
    }
}

const MAX_MATCHING_ATTEMPTS: usize = 1000;

/// Random simple d-regular graph via the configuration model: d stubs per
/// vertex, a uniformly shuffled perfect matching of the stubs, and a full
/// resample whenever the matching produces a self-loop or parallel edge.
/// Connectivity is not guaranteed. Fails after 1000 rejected matchings.
pub fn gen_random_regular(n: usize, d: usize, seed: Seed) -> Result<Graph, InstanceError> {
    if d >= n {
        return Err(InstanceError::DegreeTooLarge { d, n });
    }
    if !(n * d).is_multiple_of(2) {
        return Err(InstanceError::OddStubCount { n, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..MAX_MATCHING_ATTEMPTS {
        stubs.shuffle(&mut rng);
        let mut adj = vec![Vec::new(); n];
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u].contains(&v) {
                continue 'attempt;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let edges: Vec<(usize, usize)> = adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| u < v)
            .collect();
        return Ok(Graph::build(n, &edges).expect("matching is simple"));
    }
    Err(InstanceError::ResamplingFailed(MAX_MATCHING_ATTEMPTS))
}

/// Random connected graph with maximum degree at most `dmax`: a random
/// spanning tree built by attaching each vertex to a uniformly chosen
/// earlier vertex that still has spare degree, followed by `2n` random
/// extra-edge attempts that respect the cap.
pub fn gen_random_connected(n: usize, dmax: usize, seed: Seed) -> Result<Graph, InstanceError> {
    if n == 0 {
        return Err(InstanceError::InvalidSize { kind: "connected", n });
    }
    if dmax == 0 || (dmax == 1 && n > 2) {
        return Err(InstanceError::InfeasibleCap { dmax, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    // vertices with degree < dmax among 0..i
    let mut open: Vec<usize> = Vec::with_capacity(n);
    open.push(0);
    for v in 1..n {
        let slot = rng.gen_range(0..open.len());
        let u = open[slot];
        edges.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
        if degree[u] == dmax {
            open.swap_remove(slot);
        }
        if degree[v] < dmax {
            open.push(v);
        }
    }
    if n >= 2 {
        let mut present: std::collections::HashSet<(usize, usize)> =
            edges.iter().copied().collect();
        for _ in 0..2 * n {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let (a, b) = (u.min(v), u.max(v));
            if a == b || degree[a] >= dmax || degree[b] >= dmax || present.contains(&(a, b)) {
                continue;
            }
            present.insert((a, b));
            edges.push((a, b));
            degree[a] += 1;
            degree[b] += 1;
        }
    }
    Ok(Graph::build(n, &edges).expect("generator respects simplicity"))
}

/// Uniform random `size`-subset of `{1, ..., palette}` for every vertex.
/// `palette == size` forces identical lists on all vertices.
pub fn gen_lists(
    g: &Graph,
    size: usize,
    palette: usize,
    seed: Seed,
) -> Result<ListAssignment, InstanceError> {
    if size == 0 || palette < size {
        return Err(InstanceError::PaletteTooSmall { size, palette });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lists = (0..g.vertex_count())
        .map(|_| random_subset(&mut rng, size, palette))
        .collect();
    Ok(ListAssignment::new(lists).expect("size >= 1"))
}

/// Draws a `size`-subset of `{1..=palette}` by rejection; sorted ascending.
pub(crate) fn random_subset(rng: &mut ChaCha8Rng, size: usize, palette: usize) -> Vec<Color> {
    debug_assert!(size <= palette);
    let mut picked = Vec::with_capacity(size);
    while picked.len() < size {
        let c = rng.gen_range(1..=palette as Color);
        if !picked.contains(&c) {
            picked.push(c);
        }
    }
    picked.sort_unstable();
    picked
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_three_is_triangle() {
        let g = gen_named(NamedKind::Cycle(3)).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_complete(&crate::graph::VertexSet::full(3)));
    }

    #[test]
    fn cycle_too_small_rejected() {
        assert!(gen_named(NamedKind::Cycle(2)).is_err());
    }

    /// Shortest cycle through edge-by-edge BFS.
    fn girth(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut best = usize::MAX;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in g.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn petersen_canonical_facts() {
        let g = gen_named(NamedKind::Petersen).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(girth(&g), 5);
        assert_eq!(g.connected_components().len(), 1);
    }

    #[test]
    fn prism_canonical_facts() {
        let g = gen_named(NamedKind::Prism).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
        assert!((0..6).all(|v| g.degree(v) == 3));
        assert_eq!(girth(&g), 3);
    }

    #[test]
    fn complete_four_facts() {
        let g = gen_named(NamedKind::Complete(4)).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!((0..4).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn regular_on_four_vertices_is_k4() {
        let k4 = gen_named(NamedKind::Complete(4)).unwrap();
        for seed in 0..20 {
            assert_eq!(gen_random_regular(4, 3, seed).unwrap(), k4);
        }
    }

    #[test]
    fn regular_parity_error() {
        assert_eq!(
            gen_random_regular(5, 3, 0),
            Err(InstanceError::OddStubCount { n: 5, d: 3 })
        );
    }

    #[test]
    fn regular_degree_bound_error() {
        assert_eq!(
            gen_random_regular(4, 4, 0),
            Err(InstanceError::DegreeTooLarge { d: 4, n: 4 })
        );
    }

    #[test]
    fn regular_output_is_regular_and_reproducible() {
        for seed in [0u64, 1, 42, 9999] {
            let g = gen_random_regular(10, 3, seed).unwrap();
            assert!((0..10).all(|v| g.degree(v) == 3));
            assert_eq!(g, gen_random_regular(10, 3, seed).unwrap());
        }
    }

    #[test]
    fn connected_two_vertices_cap_one() {
        let g = gen_random_connected(2, 1, 3).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn connected_infeasible_cap() {
        assert_eq!(
            gen_random_connected(3, 1, 0),
            Err(InstanceError::InfeasibleCap { dmax: 1, n: 3 })
        );
    }

    #[test]
    fn connected_single_vertex() {
        let g = gen_random_connected(1, 4, 0).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn connected_respects_cap_and_connectivity() {
        for seed in 0..30 {
            let n = 5 + (seed as usize % 20);
            let dmax = 2 + (seed as usize % 5);
            let g = gen_random_connected(n, dmax, seed).unwrap();
            assert_eq!(g.connected_components().len(), 1, "seed {seed}");
            assert!((0..n).all(|v| g.degree(v) <= dmax), "seed {seed}");
            assert_eq!(g, gen_random_connected(n, dmax, seed).unwrap());
        }
    }

    #[test]
    fn lists_forced_identical_when_palette_equals_size() {
        let g = gen_named(NamedKind::Cycle(5)).unwrap();
        let lists = gen_lists(&g, 3, 3, 7).unwrap();
        for v in 0..5 {
            assert_eq!(lists.list(v), &[1, 2, 3]);
        }
    }

    #[test]
    fn lists_have_requested_size_and_range() {
        let g = gen_named(NamedKind::Cycle(6)).unwrap();
        let lists = gen_lists(&g, 3, 6, 1).unwrap();
        for v in 0..6 {
            assert_eq!(lists.list(v).len(), 3);
            assert!(lists.list(v).iter().all(|&c| (1..=6).contains(&c)));
        }
        assert_eq!(lists, gen_lists(&g, 3, 6, 1).unwrap());
    }

    #[test]
    fn lists_palette_too_small() {
        let g = gen_named(NamedKind::Path(2)).unwrap();
        assert!(gen_lists(&g, 3, 2, 0).is_err());
    }
}
