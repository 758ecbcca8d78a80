//! Definition-level distance polynomials on arbitrary connected graphs.
//!
//! Everything here is computed by breadth-first search from every source and a
//! plain histogram of pairwise distances. It is slow on purpose and serves as
//! the ground truth for the recurrences and closed forms.

use thiserror::Error;

use crate::graph::{Graph, UNREACHABLE};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("edge {0}-{1} is not in the graph")]
    UnknownEdge(usize, usize),
}

/// Line graph: node `i` stands for edge `i` of the source graph.
#[derive(Debug, Clone)]
pub struct LineGraph {
    graph: Graph,
    source_edges: Vec<(usize, usize)>,
}

impl LineGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn source_edge(&self, node: usize) -> (usize, usize) {
        self.source_edges[node]
    }

    pub fn node_count(&self) -> usize {
        self.source_edges.len()
    }
}

/// `counts[k]` is the number of unordered pairs at distance `k`; `counts[0]`
/// counts each element once with itself.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DistanceHistogram {
    pub counts: Vec<u64>,
}

impl DistanceHistogram {
    fn record(&mut self, d: usize) {
        if self.counts.len() <= d {
            self.counts.resize(d + 1, 0);
        }
        self.counts[d] += 1;
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn into_polynomial(self) -> Polynomial {
        Polynomial::new(self.counts)
    }
}

pub fn line_graph(g: &Graph) -> Result<LineGraph, OracleError> {
    if g.edge_count() == 0 {
        return Err(OracleError::NoEdges);
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (id, &(a, b)) in g.edges().iter().enumerate() {
        incident[a].push(id);
        incident[b].push(id);
    }
    let mut edges = Vec::new();
    for star in &incident {
        for (i, &e) in star.iter().enumerate() {
            for &f in &star[i + 1..] {
                edges.push((e, f));
            }
        }
    }
    let graph = Graph::from_edges(g.edge_count(), edges).expect("simple source graph gives a simple line graph");
    Ok(LineGraph { graph, source_edges: g.edges().to_vec() })
}

fn require_connected(g: &Graph) -> Result<(), OracleError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(OracleError::Disconnected)
    }
}

/// All-pairs vertex distances, one BFS per source.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| g.bfs_distances(v)).collect()
}

/// Histogram of vertex distances over unordered pairs, self-pairs included.
pub fn vertex_distance_histogram(g: &Graph) -> Result<DistanceHistogram, OracleError> {
    require_connected(g)?;
    let mut hist = DistanceHistogram::default();
    for source in 0..g.vertex_count() {
        let dist = g.bfs_distances(source);
        for &d in &dist[source..] {
            hist.record(d);
        }
    }
    Ok(hist)
}

/// Hosoya polynomial `H(G, x)`.
pub fn vertex_hosoya_bruteforce(g: &Graph) -> Result<Polynomial, OracleError> {
    Ok(vertex_distance_histogram(g)?.into_polynomial())
}

/// Edge-Hosoya polynomial `H_e(G, x)`: the Hosoya polynomial of the line graph.
pub fn edge_hosoya_bruteforce(g: &Graph) -> Result<Polynomial, OracleError> {
    require_connected(g)?;
    let lg = line_graph(g)?;
    vertex_hosoya_bruteforce(lg.graph())
}

/// Edge pair distance by minimum endpoint distance, `d̂(ab, xy)`.
fn endpoint_distance(dist: &[Vec<usize>], (a, b): (usize, usize), (x, y): (usize, usize)) -> usize {
    dist[a][x].min(dist[a][y]).min(dist[b][x]).min(dist[b][y])
}

/// The variant edge-Hosoya polynomial built from minimum endpoint distances,
/// each edge paired once with itself at distance 0.
pub fn hat_edge_hosoya_bruteforce(g: &Graph) -> Result<Polynomial, OracleError> {
    if g.edge_count() == 0 {
        return Err(OracleError::NoEdges);
    }
    require_connected(g)?;
    let dist = distance_matrix(g);
    let edges = g.edges();
    let mut hist = DistanceHistogram::default();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i..] {
            hist.record(endpoint_distance(&dist, e, f));
        }
    }
    Ok(hist.into_polynomial())
}

/// `H_e(G, v, x)`: edges counted by their distance `min(d(v,a), d(v,b))` from `v`.
pub fn rooted_vertex_poly(g: &Graph, v: usize) -> Result<Polynomial, OracleError> {
    if v >= g.vertex_count() {
        return Err(OracleError::UnknownVertex(v));
    }
    require_connected(g)?;
    let dist = g.bfs_distances(v);
    let mut hist = DistanceHistogram::default();
    for &(a, b) in g.edges() {
        hist.record(dist[a].min(dist[b]));
    }
    Ok(hist.into_polynomial())
}

/// `H_e(G, e, x)`: edges counted by line-graph distance from `e = ab`.
pub fn rooted_edge_poly(g: &Graph, (a, b): (usize, usize)) -> Result<Polynomial, OracleError> {
    let id = g.edge_id(a, b).ok_or(OracleError::UnknownEdge(a, b))?;
    require_connected(g)?;
    let lg = line_graph(g)?;
    let mut hist = DistanceHistogram::default();
    for d in lg.graph().bfs_distances(id) {
        hist.record(d);
    }
    Ok(hist.into_polynomial())
}

/// Sums of `d(e, f)` and `d(e, f)^2` over ordered pairs of edges, straight
/// from line-graph BFS without going through a histogram.
pub fn ordered_edge_distance_sums(g: &Graph) -> Result<(u128, u128), OracleError> {
    require_connected(g)?;
    let lg = line_graph(g)?;
    let mut sum = 0u128;
    let mut sum_sq = 0u128;
    for e in 0..lg.node_count() {
        for d in lg.graph().bfs_distances(e) {
            let d = d as u128;
            sum += d;
            sum_sq += d * d;
        }
    }
    Ok((sum, sum_sq))
}

/// `W_e = ½ ΣΣ d(e, f)` over ordered pairs.
pub fn edge_wiener_direct(g: &Graph) -> Result<u128, OracleError> {
    let (sum, _) = ordered_edge_distance_sums(g)?;
    Ok(sum / 2)
}

/// `WW_e = ¼ ΣΣ d(e, f) + ¼ ΣΣ d(e, f)^2` over ordered pairs.
pub fn edge_hyper_wiener_direct(g: &Graph) -> Result<u128, OracleError> {
    let (sum, sum_sq) = ordered_edge_distance_sums(g)?;
    Ok((sum + sum_sq) / 4)
}

/// First pair of distinct edges violating `d(e, f) = d̂(e, f) + 1`, if any.
pub fn edge_distance_identity_witness(g: &Graph) -> Result<Option<(usize, usize)>, OracleError> {
    require_connected(g)?;
    let lg = line_graph(g)?;
    let dist = distance_matrix(g);
    let edges = g.edges();
    for (i, &e) in edges.iter().enumerate() {
        let line_dist = lg.graph().bfs_distances(i);
        for (j, &f) in edges.iter().enumerate().skip(i + 1) {
            if line_dist[j] == UNREACHABLE || line_dist[j] != endpoint_distance(&dist, e, f) + 1 {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}
