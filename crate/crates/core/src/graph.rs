//! Simple undirected graphs and the plain-text edge-list format.
//!
//! The edge-list format has one `u v` pair per line with 0-based vertex ids.
//! Blank lines and lines starting with `#` are ignored.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("line {line}: expected two vertex ids, got {text:?}")]
    MalformedLine { line: usize, text: String },
}

/// Undirected simple graph. Edge order is preserved from construction and
/// defines edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Marker for unreachable vertices in distance vectors.
pub const UNREACHABLE: usize = usize::MAX;

impl Graph {
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(GraphError::VertexOutOfRange(a, b, vertex_count));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
            list.push((a, b));
        }
        Ok(Self { adjacency, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Id of the edge joining `a` and `b`, in either orientation.
    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    }

    /// BFS distances from `source`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || !self.bfs_distances(0).contains(&UNREACHABLE)
    }

    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut vertex_count = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = || GraphError::MalformedLine { line: i + 1, text: raw.to_string() };
            let mut parts = line.split_whitespace();
            let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(malformed());
            };
            let a: usize = a.parse().map_err(|_| malformed())?;
            let b: usize = b.parse().map_err(|_| malformed())?;
            vertex_count = vertex_count.max(a + 1).max(b + 1);
            edges.push((a, b));
        }
        Self::from_edges(vertex_count, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in &self.edges {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    /// Random connected graph: a uniformly random labelled spanning tree
    /// (decoded from a random Prüfer sequence) plus `extra_edges` distinct
    /// random chords. Chords beyond the complete graph are silently capped.
    pub fn random_connected<R: Rng + ?Sized>(vertex_count: usize, extra_edges: usize, rng: &mut R) -> Self {
        let n = vertex_count;
        let mut edges = Vec::new();
        if n == 2 {
            edges.push((0, 1));
        } else if n > 2 {
            let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            edges = prufer_decode(n, &prufer);
        }
        let mut present: HashSet<(usize, usize)> =
            edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let mut absent: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|e| !present.contains(e))
            .collect();
        absent.shuffle(rng);
        for e in absent.into_iter().take(extra_edges) {
            present.insert(e);
            edges.push(e);
        }
        Self::from_edges(n, edges).expect("generated edges are simple")
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::from_edges(2, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(1, 0)));
        assert_eq!(Graph::from_edges(2, [(0, 2)]), Err(GraphError::VertexOutOfRange(0, 2, 2)));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "0 1\n1 2\n2 3\n3 0\n");
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_skips_comments_and_rejects_garbage() {
        let g = Graph::parse_edge_list("# path\n0 1\n\n 1 2 \n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.vertex_count(), 3);
        assert!(matches!(
            Graph::parse_edge_list("0 1\n1 x\n"),
            Err(GraphError::MalformedLine { line: 2, .. })
        ));
        assert!(Graph::parse_edge_list("0 1 2\n").is_err());
    }

    #[test]
    fn bfs_and_connectivity() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.bfs_distances(0), vec![0, 1, 2, UNREACHABLE]);
        assert!(!g.is_connected());
        assert_eq!(g.edge_id(2, 1), Some(1));
        assert_eq!(g.edge_id(0, 2), None);
    }

    #[test]
    fn random_graphs_are_connected_with_requested_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..25 {
            let g = Graph::random_connected(n, 5, &mut rng);
            assert!(g.is_connected(), "n={n}");
            let max_extra = n * (n - 1) / 2 - n.saturating_sub(1);
            assert_eq!(g.edge_count(), n.saturating_sub(1) + 5.min(max_extra));
        }
    }
}
