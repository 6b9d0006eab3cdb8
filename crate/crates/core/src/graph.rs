//! Immutable graph representation and unweighted shortest-path machinery.
//!
//! [`Graph`] stores a simple connected undirected graph with dense 0-based
//! vertex ids. All distance work is breadth-first search: [`bfs_distances`]
//! for a single source, [`all_pairs_distances`] for the full
//! [`DistanceMatrix`], and [`eccentricity_profile`] for per-vertex
//! eccentricities together with radius, diameter, and center.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

const UNREACHED: u32 = u32::MAX;

/// A simple connected undirected graph with vertex ids `0..n`.
///
/// Construction normalizes every edge to `(min, max)` order and sorts the
/// edge list lexicographically, so two graphs built from the same edge set
/// in any order compare and hash identically. Self-loops, duplicate edges,
/// vertex ids outside `0..n`, and disconnected inputs are rejected with
/// distinct diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and builds a graph from `order` vertices and an edge list.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= order {
                return Err(Error::VertexOutOfRange { vertex: u, order });
            }
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(pair) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                u: pair[0].0,
                v: pair[0].1,
            });
        }

        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for neighbors in &mut adjacency {
            neighbors.sort_unstable();
        }

        let graph = Graph {
            order,
            edges: normalized,
            adjacency,
        };
        let from_zero = graph.bfs_from(0);
        if let Some(vertex) = from_zero.iter().position(|&d| d == UNREACHED) {
            return Err(Error::Disconnected { vertex });
        }
        Ok(graph)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The normalized edge list: each pair `(u, v)` has `u < v`, and the
    /// list is sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor ids of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Whether the vertex set splits into two sides with all edges crossing.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![2u8; self.order];
        side[0] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(0usize);
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if side[w] == 2 {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
        true
    }

    fn bfs_from(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.order];
        dist[source] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let next = dist[v] + 1;
            for &w in self.neighbors(v) {
                if dist[w] == UNREACHED {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Hop distances from `source` to every vertex.
///
/// Entry `source` is 0 and all entries are finite: connectivity is a
/// construction invariant of [`Graph`].
pub fn bfs_distances(graph: &Graph, source: usize) -> Result<Vec<u32>> {
    if source >= graph.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: source,
            order: graph.vertex_count(),
        });
    }
    Ok(graph.bfs_from(source))
}

/// All-pairs hop distances, row-major.
///
/// Symmetric with zero diagonal; `get(x, y) == 1` exactly when `{x, y}` is
/// an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    /// Assembles a matrix from row-major BFS output.
    ///
    /// Row `v` of `data` must equal `bfs_distances(g, v)` for the graph the
    /// matrix will be used with; only the shape is checked here. This exists
    /// so callers can compute the rows themselves (e.g. in parallel).
    pub fn from_rows(order: usize, data: Vec<u32>) -> DistanceMatrix {
        assert_eq!(data.len(), order * order, "distance matrix shape mismatch");
        DistanceMatrix { order, data }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.data[x * self.order + y]
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.data[x * self.order..(x + 1) * self.order]
    }
}

/// Runs one BFS per vertex and collects the rows into a [`DistanceMatrix`].
pub fn all_pairs_distances(graph: &Graph) -> DistanceMatrix {
    let n = graph.vertex_count();
    let mut data = Vec::with_capacity(n * n);
    for source in 0..n {
        data.extend_from_slice(&graph.bfs_from(source));
    }
    DistanceMatrix::from_rows(n, data)
}

/// Per-vertex eccentricities with the derived radius, diameter, and center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityProfile {
    /// `eccentricity[v]` is the greatest distance from `v` to any vertex.
    pub eccentricity: Vec<u32>,
    /// Minimum eccentricity.
    pub radius: u32,
    /// Maximum eccentricity.
    pub diameter: u32,
    /// Vertices whose eccentricity equals the radius; never empty.
    pub center: Vec<usize>,
}

/// Folds a distance matrix into an [`EccentricityProfile`].
pub fn eccentricity_profile(distances: &DistanceMatrix) -> EccentricityProfile {
    let n = distances.order();
    let eccentricity: Vec<u32> = (0..n)
        .map(|v| distances.row(v).iter().copied().max().unwrap_or(0))
        .collect();
    let radius = eccentricity.iter().copied().min().unwrap_or(0);
    let diameter = eccentricity.iter().copied().max().unwrap_or(0);
    let center = (0..n).filter(|&v| eccentricity[v] == radius).collect();
    EccentricityProfile {
        eccentricity,
        radius,
        diameter,
        center,
    }
}

/// Distance from an edge `f = {x, y}` to a vertex `u`: the smaller of the
/// two endpoint distances.
pub fn edge_vertex_distance(distances: &DistanceMatrix, f: (usize, usize), u: usize) -> u32 {
    distances.get(f.0, u).min(distances.get(f.1, u))
}
