//! Row-parallel all-pairs BFS.
//!
//! Distance rows are independent, so they can be computed by a scoped
//! thread pool without changing the result. `SPLICE_INDICES_THREADS` caps
//! the worker count; unset or unparsable values fall back to the available
//! parallelism.

use splice_indices::graph::{all_pairs_distances, bfs_distances, DistanceMatrix};
use splice_indices::Graph;

pub const THREADS_ENV: &str = "SPLICE_INDICES_THREADS";

/// Worker cap from the environment, defaulting to the machine parallelism.
pub fn thread_cap() -> usize {
    let default = || {
        std::thread::available_parallelism()
            .map(usize::from)
            .unwrap_or(1)
    };
    match std::env::var(THREADS_ENV) {
        Ok(value) => value
            .trim()
            .parse()
            .ok()
            .filter(|&t| t >= 1)
            .unwrap_or_else(default),
        Err(_) => default(),
    }
}

/// All-pairs distances using up to `threads` workers. Output is identical
/// to the sequential computation; small graphs skip the thread machinery.
pub fn all_pairs(graph: &Graph, threads: usize) -> DistanceMatrix {
    let n = graph.vertex_count();
    if threads <= 1 || n < 128 {
        return all_pairs_distances(graph);
    }
    let workers = threads.min(n);
    let rows_per_worker = n.div_ceil(workers);
    let mut data = vec![0u32; n * n];
    std::thread::scope(|scope| {
        for (chunk_index, chunk) in data.chunks_mut(rows_per_worker * n).enumerate() {
            let base = chunk_index * rows_per_worker;
            scope.spawn(move || {
                for (offset, row) in chunk.chunks_mut(n).enumerate() {
                    let distances =
                        bfs_distances(graph, base + offset).expect("source within range");
                    row.copy_from_slice(&distances);
                }
            });
        }
    });
    DistanceMatrix::from_rows(n, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use splice_indices::verify::{random_connected_graph, SplitMix64};

    #[test]
    fn parallel_rows_match_sequential() {
        let mut rng = SplitMix64::new(3);
        let graph = random_connected_graph(300, 0.02, &mut rng).unwrap();
        let sequential = all_pairs_distances(&graph);
        for threads in [2, 3, 8] {
            assert_eq!(all_pairs(&graph, threads), sequential);
        }
    }
}
