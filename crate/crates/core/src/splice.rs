//! Splice construction and per-component decomposition parameters.
//!
//! The splice of two graphs glues them at one chosen vertex of each: the two
//! glue vertices are identified into a single shared vertex, so the result
//! has `|V1| + |V2| - 1` vertices and `|E1| + |E2|` edges. [`splice`] builds
//! the composite under a deterministic labeling; [`splice_params`] extracts
//! everything the closed-form index decompositions need from one component
//! alone, without ever touching the composite.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{
    all_pairs_distances, eccentricity_profile, DistanceMatrix, EccentricityProfile, Graph,
};
use crate::indices::{edge_cut_profile, EdgeCutCounts};

/// Selects between the two readings of the decomposition coefficients.
///
/// `Printed` evaluates the closed forms exactly as they circulate in the
/// literature. Those coefficients count the glue vertex once per component,
/// i.e. twice in total, and therefore over-count on the vertex-based
/// indices. `Corrected` uses the coefficients validated against the direct
/// brute-force oracle. The two variants agree on the edge-based transfers,
/// which need no correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Printed,
    Corrected,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::Corrected, Variant::Printed];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Printed => "printed",
            Variant::Corrected => "corrected",
        }
    }
}

/// The two components of a splice and the glue vertex chosen in each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpliceSpec {
    g1: Graph,
    g2: Graph,
    u1: usize,
    u2: usize,
}

impl SpliceSpec {
    pub fn new(g1: Graph, g2: Graph, u1: usize, u2: usize) -> Result<SpliceSpec> {
        if u1 >= g1.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: u1,
                order: g1.vertex_count(),
            });
        }
        if u2 >= g2.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: u2,
                order: g2.vertex_count(),
            });
        }
        Ok(SpliceSpec { g1, g2, u1, u2 })
    }

    pub fn g1(&self) -> &Graph {
        &self.g1
    }

    pub fn g2(&self) -> &Graph {
        &self.g2
    }

    pub fn u1(&self) -> usize {
        self.u1
    }

    pub fn u2(&self) -> usize {
        self.u2
    }

    /// The same splice described from the other side.
    pub fn swapped(&self) -> SpliceSpec {
        SpliceSpec {
            g1: self.g2.clone(),
            g2: self.g1.clone(),
            u1: self.u2,
            u2: self.u1,
        }
    }

    /// Vertex count of the composite: `|V1| + |V2| - 1`.
    pub fn composite_order(&self) -> usize {
        self.g1.vertex_count() + self.g2.vertex_count() - 1
    }

    /// Edge count of the composite: `|E1| + |E2|`.
    pub fn composite_size(&self) -> usize {
        self.g1.edge_count() + self.g2.edge_count()
    }
}

/// Injections of the two component vertex sets into the composite.
///
/// Component 1 keeps its ids unchanged, so the glue vertex is `u1`.
/// Component 2 vertices other than `u2` take ids `|V1|..` in increasing
/// original order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexMap {
    order1: usize,
    u2: usize,
    glue: usize,
}

impl VertexMap {
    /// Image of the identified vertex.
    pub fn glue(&self) -> usize {
        self.glue
    }

    /// Image of a component-1 vertex (the identity map).
    pub fn map1(&self, v: usize) -> usize {
        v
    }

    /// Image of a component-2 vertex.
    pub fn map2(&self, v: usize) -> usize {
        if v == self.u2 {
            self.glue
        } else if v < self.u2 {
            self.order1 + v
        } else {
            self.order1 + v - 1
        }
    }
}

/// Builds the composite graph by identifying the two glue vertices.
pub fn splice(spec: &SpliceSpec) -> (Graph, VertexMap) {
    let map = VertexMap {
        order1: spec.g1.vertex_count(),
        u2: spec.u2,
        glue: spec.u1,
    };
    let mut edges = Vec::with_capacity(spec.composite_size());
    edges.extend_from_slice(spec.g1.edges());
    edges.extend(
        spec.g2
            .edges()
            .iter()
            .map(|&(x, y)| (map.map2(x), map.map2(y))),
    );
    let graph = Graph::new(spec.composite_order(), &edges)
        .expect("splice of valid components is simple and connected");
    (graph, map)
}

/// One edge of a component, rooted at that component's glue vertex.
///
/// `near` is the endpoint strictly closer to the root, or `None` when both
/// endpoints are equidistant from it. The far-side counts are the
/// decomposition weights: they are zero exactly on equidistant edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootedEdgeCounts {
    pub edge: (usize, usize),
    pub counts: EdgeCutCounts,
    pub near: Option<usize>,
}

impl RootedEdgeCounts {
    pub fn is_equidistant(&self) -> bool {
        self.near.is_none()
    }

    /// Component vertices on the side of the endpoint farther from the root.
    pub fn far_vertex_count(&self) -> u64 {
        match self.near {
            None => 0,
            Some(near) if near == self.edge.0 => self.counts.n_v,
            Some(_) => self.counts.n_u,
        }
    }

    /// Component edges on the side of the endpoint farther from the root.
    pub fn far_edge_count(&self) -> u64 {
        match self.near {
            None => 0,
            Some(near) if near == self.edge.0 => self.counts.m_v,
            Some(_) => self.counts.m_u,
        }
    }
}

/// Everything the decomposition formulas need from one component: edge
/// classification against the root, per-edge cut counts, distances to the
/// root, the eccentricity profile, and degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpliceHalf {
    root: usize,
    dist_to_root: Vec<u32>,
    profile: EccentricityProfile,
    degrees: Vec<u64>,
    edges: Vec<RootedEdgeCounts>,
    non_equidistant: u64,
    far_vertex_sum: u64,
    far_edge_sum: u64,
}

impl SpliceHalf {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.dist_to_root.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dist_to_root(&self, v: usize) -> u32 {
        self.dist_to_root[v]
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.degrees[v]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.profile.eccentricity[v]
    }

    pub fn root_eccentricity(&self) -> u32 {
        self.profile.eccentricity[self.root]
    }

    pub fn eccentricity_profile(&self) -> &EccentricityProfile {
        &self.profile
    }

    pub fn edges(&self) -> &[RootedEdgeCounts] {
        &self.edges
    }

    /// Number of edges not equidistant from the root (`t` in the
    /// decomposition formulas).
    pub fn non_equidistant_count(&self) -> u64 {
        self.non_equidistant
    }

    /// Sum of the far-side vertex counts over all edges.
    pub fn far_vertex_sum(&self) -> u64 {
        self.far_vertex_sum
    }

    /// Sum of the far-side edge counts over all edges.
    pub fn far_edge_sum(&self) -> u64 {
        self.far_edge_sum
    }

    pub fn cut_counts(&self) -> impl Iterator<Item = &EdgeCutCounts> {
        self.edges.iter().map(|e| &e.counts)
    }
}

/// Classifies every edge of `graph` against the root and computes the
/// decomposition parameters for this component.
pub fn splice_params(graph: &Graph, root: usize) -> Result<SpliceHalf> {
    if root >= graph.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            order: graph.vertex_count(),
        });
    }
    let distances = all_pairs_distances(graph);
    splice_params_with(graph, root, &distances)
}

/// As [`splice_params`], reusing a distance matrix already computed for
/// `graph`.
pub fn splice_params_with(
    graph: &Graph,
    root: usize,
    distances: &DistanceMatrix,
) -> Result<SpliceHalf> {
    if root >= graph.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            order: graph.vertex_count(),
        });
    }
    let profile = eccentricity_profile(distances);
    let dist_to_root: Vec<u32> = (0..graph.vertex_count())
        .map(|v| distances.get(v, root))
        .collect();
    let degrees: Vec<u64> = (0..graph.vertex_count())
        .map(|v| graph.degree(v) as u64)
        .collect();

    let mut edges = Vec::with_capacity(graph.edge_count());
    let mut non_equidistant = 0u64;
    let mut far_vertex_sum = 0u64;
    let mut far_edge_sum = 0u64;
    for counts in edge_cut_profile(graph, distances) {
        let (x, y) = counts.edge;
        let near = match dist_to_root[x].cmp(&dist_to_root[y]) {
            core::cmp::Ordering::Less => Some(x),
            core::cmp::Ordering::Greater => Some(y),
            core::cmp::Ordering::Equal => None,
        };
        let rooted = RootedEdgeCounts {
            edge: counts.edge,
            counts,
            near,
        };
        if !rooted.is_equidistant() {
            non_equidistant += 1;
        }
        far_vertex_sum += rooted.far_vertex_count();
        far_edge_sum += rooted.far_edge_count();
        edges.push(rooted);
    }

    Ok(SpliceHalf {
        root,
        dist_to_root,
        profile,
        degrees,
        edges,
        non_equidistant,
        far_vertex_sum,
        far_edge_sum,
    })
}

/// Transfers the component-local cut counts of one half into composite-level
/// counts, given the other component's sizes.
///
/// For an edge not equidistant from the root, the near endpoint picks up the
/// other component's vertices (all of `|Vj|` under [`Variant::Printed`],
/// `|Vj| - 1` under [`Variant::Corrected`] since the glue vertex is already
/// counted inside the component) and all `|Ej|` of its edges (both
/// variants). For an equidistant edge the four directional counts are
/// unchanged and the other component lands in the equidistant remainders.
pub fn transfer_counts(
    half: &SpliceHalf,
    other_vertex_count: usize,
    other_edge_count: usize,
    variant: Variant,
) -> Vec<EdgeCutCounts> {
    let other_vertices = other_vertex_count as u64;
    let other_edges = other_edge_count as u64;
    let vertex_gain = match variant {
        Variant::Printed => other_vertices,
        Variant::Corrected => other_vertices - 1,
    };
    half.edges()
        .iter()
        .map(|rooted| {
            let mut counts = rooted.counts;
            match rooted.near {
                Some(near) => {
                    if near == counts.edge.0 {
                        counts.n_u += vertex_gain;
                        counts.m_u += other_edges;
                    } else {
                        counts.n_v += vertex_gain;
                        counts.m_v += other_edges;
                    }
                }
                None => {
                    // Everything beyond the glue vertex stays equidistant.
                    counts.eq_vertices += other_vertices - 1;
                    counts.eq_edges += other_edges;
                }
            }
            counts
        })
        .collect()
}

/// Per-vertex eccentricities of the composite, computed from the two halves
/// alone.
///
/// A component-1 vertex sees the farthest vertex either inside its own
/// component or through the glue vertex into the other component, so its
/// composite eccentricity is
/// `max(dist_to_root(x) + root_eccentricity(other), eccentricity(x))`.
/// The result is indexed by the deterministic composite labeling; both
/// component formulas give `max` of the two root eccentricities at the glue
/// vertex.
pub fn splice_eccentricity(half1: &SpliceHalf, half2: &SpliceHalf) -> Vec<u32> {
    let n1 = half1.vertex_count();
    let n2 = half2.vertex_count();
    let mut ecc = Vec::with_capacity(n1 + n2 - 1);
    for x in 0..n1 {
        ecc.push((half1.dist_to_root(x) + half2.root_eccentricity()).max(half1.eccentricity(x)));
    }
    for y in (0..n2).filter(|&y| y != half2.root()) {
        ecc.push((half2.dist_to_root(y) + half1.root_eccentricity()).max(half2.eccentricity(y)));
    }
    ecc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bfs_distances;
    use crate::indices::edge_cut_counts;
    use alloc::vec;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn k1() -> Graph {
        graph(1, &[])
    }

    fn k2() -> Graph {
        graph(2, &[(0, 1)])
    }

    fn p3() -> Graph {
        graph(3, &[(0, 1), (1, 2)])
    }

    fn c3() -> Graph {
        graph(3, &[(0, 1), (0, 2), (1, 2)])
    }

    #[test]
    fn rejects_out_of_range_glue() {
        assert_eq!(
            SpliceSpec::new(k2(), k2(), 2, 0),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
        assert_eq!(
            SpliceSpec::new(k2(), k2(), 0, 5),
            Err(Error::VertexOutOfRange {
                vertex: 5,
                order: 2
            })
        );
    }

    #[test]
    fn splicing_two_k2_gives_the_path_on_three_vertices() {
        let spec = SpliceSpec::new(k2(), k2(), 1, 0).unwrap();
        let (s, map) = splice(&spec);
        assert_eq!(s, p3());
        assert_eq!(map.glue(), 1);
        assert_eq!(map.map1(0), 0);
        assert_eq!(map.map2(0), 1);
        assert_eq!(map.map2(1), 2);
    }

    #[test]
    fn splicing_with_a_single_vertex_changes_nothing() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        for u in 0..4 {
            let spec = SpliceSpec::new(g.clone(), k1(), u, 0).unwrap();
            let (s, _) = splice(&spec);
            assert_eq!(all_pairs_distances(&s), all_pairs_distances(&g));
        }
    }

    #[test]
    fn splicing_c3_with_k2_gives_the_paw() {
        let spec = SpliceSpec::new(c3(), k2(), 0, 0).unwrap();
        let (s, map) = splice(&spec);
        assert_eq!(s.vertex_count(), 4);
        assert_eq!(s.edge_count(), 4);
        assert_eq!(s, graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]));
        assert_eq!(map.map2(1), 3);
    }

    #[test]
    fn composite_sizes_and_glue_degree() {
        let spec = SpliceSpec::new(c3(), p3(), 1, 2).unwrap();
        let (s, map) = splice(&spec);
        assert_eq!(s.vertex_count(), spec.composite_order());
        assert_eq!(s.edge_count(), spec.composite_size());
        assert_eq!(
            s.degree(map.glue()),
            spec.g1().degree(spec.u1()) + spec.g2().degree(spec.u2())
        );
    }

    #[test]
    fn params_on_k2() {
        let half = splice_params(&k2(), 1).unwrap();
        assert_eq!(half.non_equidistant_count(), 1);
        assert_eq!(half.edges()[0].near, Some(1));
        assert_eq!(half.edges()[0].far_vertex_count(), 1);
        assert_eq!(half.edges()[0].far_edge_count(), 0);
        assert_eq!(half.far_vertex_sum(), 1);
        assert_eq!(half.far_edge_sum(), 0);
    }

    #[test]
    fn params_on_c3() {
        let half = splice_params(&c3(), 0).unwrap();
        assert_eq!(half.non_equidistant_count(), 2);
        for rooted in half.edges() {
            if rooted.edge == (1, 2) {
                assert!(rooted.is_equidistant());
                assert_eq!(rooted.far_vertex_count(), 0);
                assert_eq!(rooted.far_edge_count(), 0);
            } else {
                assert_eq!(rooted.near, Some(0));
                assert_eq!(rooted.far_vertex_count(), 1);
                assert_eq!(rooted.far_edge_count(), 1);
            }
        }
    }

    #[test]
    fn params_on_p3_rooted_at_a_leaf() {
        let half = splice_params(&p3(), 2).unwrap();
        assert_eq!(half.non_equidistant_count(), 2);
        let far: Vec<u64> = half.edges().iter().map(|e| e.far_vertex_count()).collect();
        assert_eq!(far, vec![1, 2]);
        assert_eq!(
            splice_params(&p3(), 3),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
    }

    #[test]
    fn transfer_on_k2_pair_reproduces_the_composite_counts_only_when_corrected() {
        let spec = SpliceSpec::new(k2(), k2(), 1, 0).unwrap();
        let half = splice_params(spec.g1(), spec.u1()).unwrap();

        let corrected = transfer_counts(&half, 2, 1, Variant::Corrected);
        let (s, _) = splice(&spec);
        let d = all_pairs_distances(&s);
        let direct = edge_cut_counts(&s, &d, (0, 1)).unwrap();
        assert_eq!(corrected[0], direct);
        assert_eq!(corrected[0].n_v, 2);

        let printed = transfer_counts(&half, 2, 1, Variant::Printed);
        assert_eq!(printed[0].n_v, 3);
        assert_ne!(printed[0], direct);
    }

    #[test]
    fn transfer_leaves_equidistant_edges_unchanged() {
        let half = splice_params(&c3(), 0).unwrap();
        for variant in Variant::BOTH {
            let transferred = transfer_counts(&half, 5, 7, variant);
            for (rooted, after) in half.edges().iter().zip(&transferred) {
                if rooted.is_equidistant() {
                    let before = rooted.counts;
                    assert_eq!(
                        (after.n_u, after.n_v, after.m_u, after.m_v),
                        (before.n_u, before.n_v, before.m_u, before.m_v)
                    );
                    assert_eq!(after.eq_vertices, before.eq_vertices + 4);
                    assert_eq!(after.eq_edges, before.eq_edges + 7);
                }
            }
        }
    }

    #[test]
    fn composite_eccentricity_from_halves() {
        // Glue vertex of two K2s: max of the two root eccentricities.
        let spec = SpliceSpec::new(k2(), k2(), 1, 0).unwrap();
        let h1 = splice_params(spec.g1(), 1).unwrap();
        let h2 = splice_params(spec.g2(), 0).unwrap();
        let ecc = splice_eccentricity(&h1, &h2);
        assert_eq!(ecc, vec![2, 1, 2]);
        assert_eq!(ecc[1], h1.root_eccentricity().max(h2.root_eccentricity()));

        // Leaf of P3 spliced with K2: the far leaf reaches depth 3 (P4).
        let spec = SpliceSpec::new(p3(), k2(), 0, 0).unwrap();
        let h1 = splice_params(spec.g1(), 0).unwrap();
        let h2 = splice_params(spec.g2(), 0).unwrap();
        let ecc = splice_eccentricity(&h1, &h2);
        let (s, _) = splice(&spec);
        let direct = eccentricity_profile(&all_pairs_distances(&s));
        assert_eq!(ecc, direct.eccentricity);
        assert_eq!(ecc[2], 3);

        // Splicing K1 onto any vertex leaves every eccentricity unchanged.
        let g = c3();
        for u in 0..3 {
            let h1 = splice_params(&g, u).unwrap();
            let h2 = splice_params(&k1(), 0).unwrap();
            let ecc = splice_eccentricity(&h1, &h2);
            let own = eccentricity_profile(&all_pairs_distances(&g));
            assert_eq!(ecc, own.eccentricity);
        }
    }

    #[test]
    fn dist_to_root_matches_bfs() {
        let g = c3();
        let half = splice_params(&g, 2).unwrap();
        let bfs = bfs_distances(&g, 2).unwrap();
        for (v, &expected) in bfs.iter().enumerate() {
            assert_eq!(half.dist_to_root(v), expected);
        }
    }
}
