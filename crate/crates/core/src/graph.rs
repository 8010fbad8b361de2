//! Immutable simple undirected graphs with the structural queries the
//! coloring routines need: components, degrees, completeness tests and
//! induced subgraphs with explicit id maps.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop edge ({0}, {0}) is not allowed")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) out of range for a graph on {n} vertices")]
    OutOfRange { u: usize, v: usize, n: usize },
}

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted ascending and free of duplicates and
/// self-loops; the structure is immutable after construction, so every
/// neighbor iteration downstream is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range ids are
    /// rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Maximum degree over all vertices; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Connected components, ordered by smallest member; each component's
    /// vertices are sorted ascending.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        let mut queue = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut members = Vec::new();
            seen[start] = true;
            queue.push(start);
            while let Some(v) = queue.pop() {
                members.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(VertexSet { ids: members });
        }
        components
    }

    /// True iff every pair of vertices in `s` is adjacent.
    pub fn is_complete(&self, s: &VertexSet) -> bool {
        let ids = s.ids();
        ids.iter().enumerate().all(|(i, &u)| {
            ids[i + 1..].iter().all(|&v| self.has_edge(u, v))
        })
    }

    /// Subgraph induced by `s`, on fresh ids `0..s.len()` assigned in the
    /// sorted order of `s`, plus the map between the two id spaces.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, SubMap) {
        let map = SubMap {
            orig: s.ids().to_vec(),
        };
        let mut adj = vec![Vec::new(); s.len()];
        for (sub_v, &orig_v) in map.orig.iter().enumerate() {
            for &orig_w in &self.adj[orig_v] {
                if let Some(sub_w) = map.to_sub(orig_w) {
                    adj[sub_v].push(sub_w);
                }
            }
        }
        // neighbor lists inherit sortedness: sub ids are monotone in orig ids
        (Graph { n: s.len(), adj }, map)
    }
}

/// Sorted set of vertex ids, used for components, cycles and peeled cores.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    ids: Vec<usize>,
}

impl VertexSet {
    /// Sorts and deduplicates the given ids.
    pub fn new(mut ids: Vec<usize>) -> VertexSet {
        ids.sort_unstable();
        ids.dedup();
        VertexSet { ids }
    }

    /// The full vertex set `0..n`.
    pub fn full(n: usize) -> VertexSet {
        VertexSet {
            ids: (0..n).collect(),
        }
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.ids.binary_search(&v).is_ok()
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.ids.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Id map for an induced subgraph: sub id `i` corresponds to the `i`-th
/// smallest original id.
#[derive(Debug, Clone)]
pub struct SubMap {
    orig: Vec<usize>,
}

impl SubMap {
    pub fn to_orig(&self, sub: usize) -> usize {
        self.orig[sub]
    }

    pub fn to_sub(&self, orig: usize) -> Option<usize> {
        self.orig.binary_search(&orig).ok()
    }

    /// Original ids in sub-id order.
    pub fn orig_ids(&self) -> &[usize] {
        &self.orig
    }

    pub fn len(&self) -> usize {
        self.orig.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orig.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_path_graph() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(2), 1);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::build(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(Graph::build(1, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            Graph::build(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { u: 0, v: 2, n: 2 })
        );
    }

    #[test]
    fn components_of_connected_path() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps, vec![VertexSet::new(vec![0, 1, 2])]);
    }

    #[test]
    fn components_of_two_edges() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(
            comps,
            vec![VertexSet::new(vec![0, 1]), VertexSet::new(vec![2, 3])]
        );
    }

    #[test]
    fn components_of_single_vertex() {
        let g = Graph::build(1, &[]).unwrap();
        assert_eq!(g.connected_components(), vec![VertexSet::new(vec![0])]);
    }

    fn complete_graph(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    fn cycle_graph(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(complete_graph(4).max_degree(), 3);
        assert_eq!(cycle_graph(5).max_degree(), 2);
        let star = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.max_degree(), 3);
        assert_eq!(Graph::build(2, &[]).unwrap().max_degree(), 0);
    }

    #[test]
    fn is_complete_examples() {
        let k4 = complete_graph(4);
        assert!(k4.is_complete(&VertexSet::full(4)));
        let c4 = cycle_graph(4);
        assert!(!c4.is_complete(&VertexSet::full(4)));
        assert!(c4.is_complete(&VertexSet::new(vec![2])));
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle_graph(5);
        let (sub, map) = c5.induced_subgraph(&VertexSet::new(vec![1, 2, 3, 4]));
        // C_5 minus vertex 0 is the path 1-2-3-4
        assert_eq!(sub.edge_count(), 3);
        assert_eq!(sub.degree(0), 1);
        assert_eq!(map.to_orig(0), 1);
        assert_eq!(map.to_sub(0), None);

        let (copy, idmap) = c5.induced_subgraph(&VertexSet::full(5));
        assert_eq!(copy, c5);
        assert_eq!(idmap.orig_ids(), &[0, 1, 2, 3, 4]);

        let k4 = complete_graph(4);
        let (edge, _) = k4.induced_subgraph(&VertexSet::new(vec![0, 1]));
        assert_eq!(edge.edge_count(), 1);
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        for (n, edges) in [
            (6, vec![(0, 1), (2, 3), (3, 4), (4, 2), (0, 5)]),
            (4, vec![(0, 1), (0, 2), (0, 3), (1, 2)]),
            (1, vec![]),
        ] {
            let g = Graph::build(n, &edges).unwrap();
            let degsum: usize = (0..n).map(|v| g.degree(v)).sum();
            assert_eq!(degsum, 2 * g.edge_count());
        }
    }

    #[test]
    fn is_complete_matches_bruteforce_on_small_graphs() {
        // every subset of a few fixed graphs on <= 8 vertices
        let graphs = [complete_graph(5), cycle_graph(6), complete_graph(8)];
        for g in &graphs {
            let n = g.vertex_count();
            for mask in 1u32..(1 << n) {
                let ids: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let s = VertexSet::new(ids.clone());
                let brute = ids
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| ids[i + 1..].iter().all(|&v| g.has_edge(u, v)));
                assert_eq!(g.is_complete(&s), brute);
            }
        }
    }
}
