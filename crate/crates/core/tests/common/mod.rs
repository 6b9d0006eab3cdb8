//! Independent oracle used by the property tests.
//!
//! Deliberately shares no code with the library: distances come from
//! Floyd-Warshall instead of BFS, and the five indices are evaluated as
//! literal double loops over the set definitions. Agreement between this
//! module and the library is evidence for both.

#![allow(dead_code)]
// Index loops are the point here: the oracle mirrors the set definitions.
#![allow(clippy::needless_range_loop)]

pub const INF: u64 = u64::MAX / 4;

/// All-pairs distances by Floyd-Warshall over the raw edge list.
pub fn naive_distances(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u64>> {
    let mut dist = vec![vec![INF; n]; n];
    for (v, row) in dist.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in edges {
        dist[u][v] = 1;
        dist[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = dist[i][k] + dist[k][j];
                if through < dist[i][j] {
                    dist[i][j] = through;
                }
            }
        }
    }
    dist
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaiveIndices {
    pub szeged: u64,
    pub edge_szeged: u64,
    pub pi_edge: u64,
    pub pi_vertex: u64,
    pub eccentric_connectivity: u64,
}

/// The five indices straight from their set definitions.
pub fn naive_indices(n: usize, edges: &[(usize, usize)]) -> NaiveIndices {
    let dist = naive_distances(n, edges);
    let edge_dist = |f: (usize, usize), u: usize| dist[f.0][u].min(dist[f.1][u]);

    let mut szeged = 0u64;
    let mut edge_szeged = 0u64;
    let mut pi_edge = 0u64;
    let mut pi_vertex = 0u64;
    for &(u, v) in edges {
        let mut n_u = 0u64;
        let mut n_v = 0u64;
        for x in 0..n {
            if dist[x][u] < dist[x][v] {
                n_u += 1;
            } else if dist[x][v] < dist[x][u] {
                n_v += 1;
            }
        }
        let mut m_u = 0u64;
        let mut m_v = 0u64;
        for &f in edges {
            let to_u = edge_dist(f, u);
            let to_v = edge_dist(f, v);
            if to_u < to_v {
                m_u += 1;
            } else if to_v < to_u {
                m_v += 1;
            }
        }
        szeged += n_u * n_v;
        edge_szeged += m_u * m_v;
        pi_edge += m_u + m_v;
        pi_vertex += n_u + n_v;
    }

    let mut eccentric_connectivity = 0u64;
    for u in 0..n {
        let degree = edges.iter().filter(|&&(a, b)| a == u || b == u).count() as u64;
        let eccentricity = (0..n).map(|x| dist[u][x]).max().unwrap_or(0);
        eccentric_connectivity += degree * eccentricity;
    }

    NaiveIndices {
        szeged,
        edge_szeged,
        pi_edge,
        pi_vertex,
        eccentric_connectivity,
    }
}
