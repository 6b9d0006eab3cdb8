//! Brute-force oracle harness.
//!
//! Generates graphs (seeded random and exhaustive-up-to-isomorphism),
//! assembles splices, and compares the closed-form index values against
//! direct computation on the composite. A campaign over the exhaustive
//! family is the gate that validates the corrected coefficients; the same
//! machinery reproduces the over-counting of the printed coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::formulas::{splice_values, FormulaInputs};
use crate::graph::{all_pairs_distances, Graph};
use crate::indices::{IndexKind, IndexValues, Method};
use crate::splice::{SpliceSpec, Variant};

/// Identifier of the pseudo-random generator, echoed in campaign reports so
/// a report pins down the exact trial sequence.
pub const RNG_ALGORITHM: &str = "splitmix64";

/// SplitMix64 generator (Steele, Lea, Flood's 64-bit finalizer mix).
///
/// Small, seedable, and stable across platforms; the whole harness draws
/// from a single instance so one seed determines every generated case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Unbiased draw from `0..bound` by rejection sampling. `bound` must be
    /// nonzero.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        let remainder = bound.wrapping_neg() % bound;
        if remainder == 0 {
            return self.next_u64() % bound;
        }
        let accept_below = 0u64.wrapping_sub(remainder);
        loop {
            let draw = self.next_u64();
            if draw < accept_below {
                return draw % bound;
            }
        }
    }

    /// Uniform draw from `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// A random connected simple graph on `n` vertices.
///
/// A uniform random spanning tree (Aldous-Broder walk on the complete
/// graph) guarantees connectivity; every non-tree pair is then added
/// independently with probability `density`. Density 0 yields a uniform
/// random tree, density 1 the complete graph. Fully determined by the
/// generator state.
pub fn random_connected_graph(n: usize, density: f64, rng: &mut SplitMix64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n > 1 {
        let mut visited = vec![false; n];
        let mut current = rng.next_below(n as u64) as usize;
        visited[current] = true;
        let mut visited_count = 1;
        while visited_count < n {
            let offset = rng.next_below(n as u64 - 1) as usize;
            let next = if offset >= current {
                offset + 1
            } else {
                offset
            };
            if !visited[next] {
                visited[next] = true;
                visited_count += 1;
                edges.push((current.min(next), current.max(next)));
            }
            current = next;
        }
    }
    if density > 0.0 {
        let tree: alloc::collections::BTreeSet<(usize, usize)> = edges.iter().copied().collect();
        for u in 0..n {
            for v in u + 1..n {
                if !tree.contains(&(u, v)) && rng.next_f64() < density {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::new(n, &edges)
}

/// Hard cap for [`enumerate_small_graphs`]; beyond 7 vertices the labeled
/// search space and the permutation checks blow up.
pub const ENUMERATION_LIMIT: usize = 7;

// Compact representation used during enumeration: adjacency rows as bit
// masks over at most ENUMERATION_LIMIT vertices.
type AdjMask = [u8; ENUMERATION_LIMIT];

fn mask_is_connected(n: usize, adj: &AdjMask) -> bool {
    let full = (1u8 << n) - 1;
    let mut seen: u8 = 1;
    let mut frontier: u8 = 1;
    while frontier != 0 {
        let mut next: u8 = 0;
        let mut bits = frontier;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen == full
}

fn mask_distance_rows(n: usize, adj: &AdjMask) -> [[u8; ENUMERATION_LIMIT]; ENUMERATION_LIMIT] {
    let mut rows = [[0u8; ENUMERATION_LIMIT]; ENUMERATION_LIMIT];
    for source in 0..n {
        let mut dist = [u8::MAX; ENUMERATION_LIMIT];
        dist[source] = 0;
        let mut frontier: u8 = 1 << source;
        let mut seen: u8 = frontier;
        let mut level = 0u8;
        while frontier != 0 {
            level += 1;
            let mut next: u8 = 0;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                dist[v] = level;
            }
        }
        rows[source] = dist;
    }
    rows
}

// Per-vertex invariant: the vertex's sorted distance row. Two vertices can
// only correspond under an isomorphism if their keys agree.
fn vertex_keys(
    n: usize,
    rows: &[[u8; ENUMERATION_LIMIT]; ENUMERATION_LIMIT],
) -> [[u8; ENUMERATION_LIMIT]; ENUMERATION_LIMIT] {
    let mut keys = *rows;
    for key in keys.iter_mut().take(n) {
        key[..n].sort_unstable();
    }
    keys
}

// Graph invariant: vertex count, edge count, and the sorted multiset of
// vertex keys. Isomorphic graphs always collide; collisions are settled by
// the permutation search below.
fn signature(
    n: usize,
    edge_count: usize,
    keys: &[[u8; ENUMERATION_LIMIT]; ENUMERATION_LIMIT],
) -> Vec<u8> {
    let mut sorted: Vec<[u8; ENUMERATION_LIMIT]> = keys[..n].to_vec();
    sorted.sort_unstable();
    let mut sig = Vec::with_capacity(2 + n * n);
    sig.push(n as u8);
    sig.push(edge_count as u8);
    for key in sorted {
        sig.extend_from_slice(&key[..n]);
    }
    sig
}

struct MaskRep {
    adj: AdjMask,
    keys: [[u8; ENUMERATION_LIMIT]; ENUMERATION_LIMIT],
}

// Backtracking search for a key-respecting, adjacency-preserving bijection.
fn masks_isomorphic(n: usize, a: &MaskRep, b: &MaskRep) -> bool {
    fn extend(
        n: usize,
        a: &MaskRep,
        b: &MaskRep,
        assignment: &mut [usize],
        used: &mut u8,
        depth: usize,
    ) -> bool {
        if depth == n {
            return true;
        }
        for w in 0..n {
            if *used & (1 << w) != 0 || a.keys[depth] != b.keys[w] {
                continue;
            }
            let consistent = (0..depth).all(|d| {
                let adjacent_a = a.adj[depth] & (1 << d) != 0;
                let adjacent_b = b.adj[w] & (1 << assignment[d]) != 0;
                adjacent_a == adjacent_b
            });
            if consistent {
                assignment[depth] = w;
                *used |= 1 << w;
                if extend(n, a, b, assignment, used, depth + 1) {
                    return true;
                }
                *used &= !(1 << w);
            }
        }
        false
    }
    let mut assignment = [0usize; ENUMERATION_LIMIT];
    let mut used: u8 = 0;
    extend(n, a, b, &mut assignment, &mut used, 0)
}

/// All connected simple graphs with at most `max_n` vertices, one
/// representative per isomorphism class, in a deterministic order.
///
/// Deduplication is a distance-based invariant signature with a brute-force
/// permutation check on collisions, which is exact (never drops or
/// duplicates a class) at these sizes.
pub fn enumerate_small_graphs(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit {
            requested: max_n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut result = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut buckets: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
        let mut reps: Vec<MaskRep> = Vec::new();
        for mask in 0u64..(1u64 << pairs.len()) {
            let mut adj: AdjMask = [0; ENUMERATION_LIMIT];
            for (bit, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            if !mask_is_connected(n, &adj) {
                continue;
            }
            let rows = mask_distance_rows(n, &adj);
            let keys = vertex_keys(n, &rows);
            let edge_count = mask.count_ones() as usize;
            let sig = signature(n, edge_count, &keys);
            let candidate = MaskRep { adj, keys };
            let bucket = buckets.entry(sig).or_default();
            if bucket
                .iter()
                .any(|&r| masks_isomorphic(n, &candidate, &reps[r]))
            {
                continue;
            }
            bucket.push(reps.len());
            reps.push(candidate);
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &pair)| pair)
                .collect();
            result.push(Graph::new(n, &edges).expect("enumerated graph is connected and simple"));
        }
    }
    Ok(result)
}

/// Whether two graphs are isomorphic, by invariant screening plus a pruned
/// permutation search. Intended for small graphs; the search is exponential
/// in the worst case.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let key_of = |g: &Graph| -> Vec<Vec<u32>> {
        let d = all_pairs_distances(g);
        (0..n)
            .map(|v| {
                let mut row = d.row(v).to_vec();
                row.sort_unstable();
                row
            })
            .collect()
    };
    let keys_a = key_of(a);
    let keys_b = key_of(b);
    let mut sorted_a = keys_a.clone();
    let mut sorted_b = keys_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return false;
    }

    fn extend(
        a: &Graph,
        b: &Graph,
        keys_a: &[Vec<u32>],
        keys_b: &[Vec<u32>],
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let depth = assignment.len();
        if depth == a.vertex_count() {
            return true;
        }
        for w in 0..b.vertex_count() {
            if used[w] || keys_a[depth] != keys_b[w] {
                continue;
            }
            let consistent =
                (0..depth).all(|d| a.has_edge(depth, d) == b.has_edge(w, assignment[d]));
            if consistent {
                assignment.push(w);
                used[w] = true;
                if extend(a, b, keys_a, keys_b, assignment, used) {
                    return true;
                }
                assignment.pop();
                used[w] = false;
            }
        }
        false
    }
    extend(
        a,
        b,
        &keys_a,
        &keys_b,
        &mut Vec::with_capacity(n),
        &mut vec![false; n],
    )
}

/// Direct and closed-form values for one splice, per requested variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub direct: IndexValues,
    pub formula: Vec<(Variant, IndexValues)>,
}

impl VerifyOutcome {
    pub fn formula_values(&self, variant: Variant) -> Option<&IndexValues> {
        self.formula
            .iter()
            .find(|(v, _)| *v == variant)
            .map(|(_, values)| values)
    }

    /// Whether the formula value equals the direct value for one cell.
    pub fn matches(&self, variant: Variant, kind: IndexKind) -> Option<bool> {
        self.formula_values(variant)
            .map(|values| values.get(kind) == self.direct.get(kind))
    }
}

/// Computes the direct report and each requested formula variant for one
/// splice.
pub fn verify_one(spec: &SpliceSpec, variants: &[Variant]) -> Result<VerifyOutcome> {
    let direct = crate::formulas::splice_index_report(spec, Method::Direct)?.values;
    let inputs = FormulaInputs::compute(spec)?;
    let formula = variants
        .iter()
        .map(|&variant| Ok((variant, splice_values(&inputs, variant)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyOutcome { direct, formula })
}

/// Campaign parameters. The seed fully determines the randomized phase.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    /// Randomized trials to run after the exhaustive phase.
    pub trials: u64,
    /// Component size bounds for randomized trials (inclusive).
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Edge-density bounds in `[0, 1]`; each component draws its density
    /// uniformly from this range.
    pub min_density: f64,
    pub max_density: f64,
    pub seed: u64,
    /// Formula variants to compare against the direct oracle.
    pub variants: Vec<Variant>,
    /// Exhaustive phase: all splices of connected graphs with at most this
    /// many vertices, every glue choice. Zero skips the phase.
    pub exhaustive_limit: usize,
}

impl CampaignConfig {
    fn validate(&self) -> Result<()> {
        if self.variants.is_empty() {
            return Err(Error::InvalidCampaign {
                reason: "no variants requested",
            });
        }
        if self.exhaustive_limit > ENUMERATION_LIMIT {
            return Err(Error::EnumerationLimit {
                requested: self.exhaustive_limit,
                limit: ENUMERATION_LIMIT,
            });
        }
        if self.trials > 0 {
            if self.min_vertices == 0 {
                return Err(Error::InvalidCampaign {
                    reason: "component size bound must be >= 1",
                });
            }
            if self.min_vertices > self.max_vertices {
                return Err(Error::InvalidCampaign {
                    reason: "empty component size range",
                });
            }
            if !(0.0 <= self.min_density
                && self.min_density <= self.max_density
                && self.max_density <= 1.0)
            {
                return Err(Error::InvalidCampaign {
                    reason: "density range must be within [0, 1]",
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Exhaustive,
    Randomized,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Exhaustive => "exhaustive",
            Phase::Randomized => "randomized",
        }
    }
}

/// The first mismatching case of a cell, kept for replay.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub phase: Phase,
    pub case_index: u64,
    pub spec: SpliceSpec,
}

/// Accumulated comparison results for one index under one variant.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignCell {
    pub index: IndexKind,
    pub variant: Variant,
    pub matches: u64,
    pub mismatches: u64,
    /// Largest absolute difference between formula and direct values.
    pub max_discrepancy: u64,
    /// Mismatches where the formula value fell below the direct value.
    /// Expected to stay zero: the printed coefficients only over-count.
    pub formula_below_direct: u64,
    pub first_witness: Option<Witness>,
}

/// Deterministic campaign outcome; equal configs produce equal reports.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub rng_algorithm: &'static str,
    pub exhaustive_cases: u64,
    pub random_cases: u64,
    pub cells: Vec<CampaignCell>,
}

impl CampaignReport {
    pub fn total_cases(&self) -> u64 {
        self.exhaustive_cases + self.random_cases
    }

    pub fn cell(&self, kind: IndexKind, variant: Variant) -> Option<&CampaignCell> {
        self.cells
            .iter()
            .find(|c| c.index == kind && c.variant == variant)
    }

    /// Total mismatches across the five indices for one variant.
    pub fn mismatches(&self, variant: Variant) -> u64 {
        self.cells
            .iter()
            .filter(|c| c.variant == variant)
            .map(|c| c.mismatches)
            .sum()
    }
}

fn record_case(
    cells: &mut [CampaignCell],
    outcome: &VerifyOutcome,
    phase: Phase,
    case_index: u64,
    spec: &SpliceSpec,
) {
    for cell in cells.iter_mut() {
        let Some(values) = outcome.formula_values(cell.variant) else {
            continue;
        };
        let formula = values.get(cell.index);
        let direct = outcome.direct.get(cell.index);
        if formula == direct {
            cell.matches += 1;
        } else {
            cell.mismatches += 1;
            cell.max_discrepancy = cell.max_discrepancy.max(formula.abs_diff(direct));
            if formula < direct {
                cell.formula_below_direct += 1;
            }
            if cell.first_witness.is_none() {
                cell.first_witness = Some(Witness {
                    phase,
                    case_index,
                    spec: spec.clone(),
                });
            }
        }
    }
}

/// Runs the exhaustive phase (all unordered pairs from
/// [`enumerate_small_graphs`], all glue choices) followed by the seeded
/// randomized phase. Generated cases are never skipped; any failure inside
/// a case is a bug and propagates as an error.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    config.validate()?;
    let mut cells: Vec<CampaignCell> = IndexKind::ALL
        .iter()
        .flat_map(|&index| {
            config.variants.iter().map(move |&variant| CampaignCell {
                index,
                variant,
                matches: 0,
                mismatches: 0,
                max_discrepancy: 0,
                formula_below_direct: 0,
                first_witness: None,
            })
        })
        .collect();

    let mut exhaustive_cases = 0u64;
    let graphs = enumerate_small_graphs(config.exhaustive_limit)?;
    for i in 0..graphs.len() {
        for j in i..graphs.len() {
            for u1 in 0..graphs[i].vertex_count() {
                for u2 in 0..graphs[j].vertex_count() {
                    let spec = SpliceSpec::new(graphs[i].clone(), graphs[j].clone(), u1, u2)?;
                    let outcome = verify_one(&spec, &config.variants)?;
                    record_case(
                        &mut cells,
                        &outcome,
                        Phase::Exhaustive,
                        exhaustive_cases,
                        &spec,
                    );
                    exhaustive_cases += 1;
                }
            }
        }
    }

    let mut random_cases = 0u64;
    let mut rng = SplitMix64::new(config.seed);
    let size_span = (config.max_vertices - config.min_vertices) as u64 + 1;
    for _ in 0..config.trials {
        let n1 = config.min_vertices + rng.next_below(size_span) as usize;
        let n2 = config.min_vertices + rng.next_below(size_span) as usize;
        let density1 =
            config.min_density + rng.next_f64() * (config.max_density - config.min_density);
        let density2 =
            config.min_density + rng.next_f64() * (config.max_density - config.min_density);
        let g1 = random_connected_graph(n1, density1, &mut rng)?;
        let g2 = random_connected_graph(n2, density2, &mut rng)?;
        let u1 = rng.next_below(n1 as u64) as usize;
        let u2 = rng.next_below(n2 as u64) as usize;
        let spec = SpliceSpec::new(g1, g2, u1, u2)?;
        let outcome = verify_one(&spec, &config.variants)?;
        record_case(&mut cells, &outcome, Phase::Randomized, random_cases, &spec);
        random_cases += 1;
    }

    Ok(CampaignReport {
        config: config.clone(),
        rng_algorithm: RNG_ALGORITHM,
        exhaustive_cases,
        random_cases,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_is_deterministic_and_bounded() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut rng = SplitMix64::new(7);
        for _ in 0..1000 {
            assert!(rng.next_below(13) < 13);
            let f = rng.next_f64();
            assert!((0.0..1.0).contains(&f));
        }
    }

    #[test]
    fn random_graph_extremes() {
        let mut rng = SplitMix64::new(1);
        let k1 = random_connected_graph(1, 0.5, &mut rng).unwrap();
        assert_eq!(k1.vertex_count(), 1);

        let tree = random_connected_graph(5, 0.0, &mut rng).unwrap();
        assert_eq!(tree.edge_count(), 4);

        let complete = random_connected_graph(5, 1.0, &mut rng).unwrap();
        assert_eq!(complete.edge_count(), 10);

        assert_eq!(
            random_connected_graph(0, 0.0, &mut rng),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn random_graphs_are_always_valid() {
        let mut rng = SplitMix64::new(99);
        for trial in 0..50 {
            let n = 1 + (trial % 20);
            let density = (trial % 11) as f64 / 10.0;
            let g = random_connected_graph(n, density, &mut rng).unwrap();
            assert_eq!(g.vertex_count(), n);
            assert!(g.edge_count() >= n - 1);
        }
    }

    #[test]
    fn enumeration_counts_match_the_known_sequence() {
        assert_eq!(enumerate_small_graphs(2).unwrap().len(), 2);
        let up_to_3 = enumerate_small_graphs(3).unwrap();
        assert_eq!(up_to_3.len(), 4);

        let up_to_4 = enumerate_small_graphs(4).unwrap();
        let on_4 = up_to_4.iter().filter(|g| g.vertex_count() == 4).count();
        assert_eq!(on_4, 6);
        assert_eq!(up_to_4.len(), 10);

        assert_eq!(
            enumerate_small_graphs(8),
            Err(Error::EnumerationLimit {
                requested: 8,
                limit: 7
            })
        );
    }

    #[test]
    fn enumeration_is_deterministic() {
        assert_eq!(
            enumerate_small_graphs(4).unwrap(),
            enumerate_small_graphs(4).unwrap()
        );
    }

    #[test]
    fn isomorphism_checks() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p4_relabeled = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(are_isomorphic(&p4, &p4_relabeled));
        assert!(!are_isomorphic(&p4, &star));
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        let two_triangles_joined =
            Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles_joined));
    }

    #[test]
    fn verify_one_on_the_smallest_splice() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let spec = SpliceSpec::new(k2.clone(), k2, 1, 0).unwrap();
        let outcome = verify_one(&spec, &Variant::BOTH).unwrap();
        for kind in IndexKind::ALL {
            assert_eq!(outcome.matches(Variant::Corrected, kind), Some(true));
        }
        assert_eq!(
            outcome.matches(Variant::Printed, IndexKind::Szeged),
            Some(false)
        );
        assert_eq!(
            outcome.matches(Variant::Printed, IndexKind::EdgeSzeged),
            Some(true)
        );
        assert_eq!(
            outcome.matches(Variant::Printed, IndexKind::PiEdge),
            Some(true)
        );
        assert_eq!(
            outcome.matches(Variant::Printed, IndexKind::PiVertex),
            Some(false)
        );
        assert_eq!(
            outcome.matches(Variant::Printed, IndexKind::EccentricConnectivity),
            Some(false)
        );
    }

    #[test]
    fn identity_splice_printed_mismatch_pattern() {
        // Splicing K1 onto G: the edge-based printed forms still match, the
        // vertex-based ones over-count whenever there is anything to count.
        let k1 = Graph::new(1, &[]).unwrap();
        for g in enumerate_small_graphs(4).unwrap() {
            for u in 0..g.vertex_count() {
                let t = crate::splice::splice_params(&g, u)
                    .unwrap()
                    .non_equidistant_count();
                let glue_weight = g.degree(u) as u64;
                let spec = SpliceSpec::new(g.clone(), k1.clone(), u, 0).unwrap();
                let outcome = verify_one(&spec, &Variant::BOTH).unwrap();
                for kind in IndexKind::ALL {
                    assert_eq!(outcome.matches(Variant::Corrected, kind), Some(true));
                }
                assert_eq!(
                    outcome.matches(Variant::Printed, IndexKind::EdgeSzeged),
                    Some(true)
                );
                assert_eq!(
                    outcome.matches(Variant::Printed, IndexKind::PiEdge),
                    Some(true)
                );
                if t > 0 {
                    assert_eq!(
                        outcome.matches(Variant::Printed, IndexKind::Szeged),
                        Some(false)
                    );
                }
                if glue_weight > 0 {
                    assert_eq!(
                        outcome.matches(Variant::Printed, IndexKind::EccentricConnectivity),
                        Some(false)
                    );
                }
                assert_eq!(
                    outcome.matches(Variant::Printed, IndexKind::PiVertex),
                    Some(false)
                );
            }
        }
    }

    #[test]
    fn campaign_exhaustive_corrected_has_no_mismatches() {
        let config = CampaignConfig {
            trials: 0,
            min_vertices: 1,
            max_vertices: 1,
            min_density: 0.0,
            max_density: 0.0,
            seed: 0,
            variants: vec![Variant::Corrected],
            exhaustive_limit: 4,
        };
        let report = run_campaign(&config).unwrap();
        assert!(report.exhaustive_cases > 0);
        assert_eq!(report.mismatches(Variant::Corrected), 0);
        for cell in &report.cells {
            assert_eq!(cell.matches + cell.mismatches, report.total_cases());
        }
    }

    #[test]
    fn campaign_exhaustive_printed_reproduces_the_overcount() {
        let config = CampaignConfig {
            trials: 0,
            min_vertices: 1,
            max_vertices: 1,
            min_density: 0.0,
            max_density: 0.0,
            seed: 0,
            variants: vec![Variant::Printed],
            exhaustive_limit: 3,
        };
        let report = run_campaign(&config).unwrap();
        let mismatching = [
            IndexKind::Szeged,
            IndexKind::PiVertex,
            IndexKind::EccentricConnectivity,
        ];
        for kind in mismatching {
            let cell = report.cell(kind, Variant::Printed).unwrap();
            assert!(cell.mismatches > 0, "{} should mismatch", kind.as_str());
            assert_eq!(
                cell.formula_below_direct,
                0,
                "{} printed under-count",
                kind.as_str()
            );
            assert!(cell.first_witness.is_some());
        }
        for kind in [IndexKind::EdgeSzeged, IndexKind::PiEdge] {
            let cell = report.cell(kind, Variant::Printed).unwrap();
            assert_eq!(
                cell.mismatches,
                0,
                "{} printed form is exact",
                kind.as_str()
            );
        }
    }

    #[test]
    fn campaign_reports_are_reproducible() {
        let config = CampaignConfig {
            trials: 8,
            min_vertices: 2,
            max_vertices: 9,
            min_density: 0.1,
            max_density: 0.5,
            seed: 42,
            variants: Variant::BOTH.to_vec(),
            exhaustive_limit: 2,
        };
        let first = run_campaign(&config).unwrap();
        let second = run_campaign(&config).unwrap();
        assert_eq!(first, second);
        assert_eq!(first.random_cases, 8);
        assert_eq!(first.rng_algorithm, "splitmix64");

        let different_seed = CampaignConfig { seed: 43, ..config };
        let third = run_campaign(&different_seed).unwrap();
        assert_ne!(first.config, third.config);
    }

    #[test]
    fn campaign_validation() {
        let base = CampaignConfig {
            trials: 1,
            min_vertices: 2,
            max_vertices: 5,
            min_density: 0.0,
            max_density: 0.5,
            seed: 0,
            variants: vec![Variant::Corrected],
            exhaustive_limit: 0,
        };
        assert!(run_campaign(&base).is_ok());
        assert_eq!(
            run_campaign(&CampaignConfig {
                variants: vec![],
                ..base.clone()
            }),
            Err(Error::InvalidCampaign {
                reason: "no variants requested"
            })
        );
        assert_eq!(
            run_campaign(&CampaignConfig {
                min_vertices: 0,
                ..base.clone()
            }),
            Err(Error::InvalidCampaign {
                reason: "component size bound must be >= 1"
            })
        );
        assert_eq!(
            run_campaign(&CampaignConfig {
                min_vertices: 6,
                ..base.clone()
            }),
            Err(Error::InvalidCampaign {
                reason: "empty component size range"
            })
        );
        assert_eq!(
            run_campaign(&CampaignConfig {
                max_density: 1.5,
                ..base.clone()
            }),
            Err(Error::InvalidCampaign {
                reason: "density range must be within [0, 1]"
            })
        );
        assert_eq!(
            run_campaign(&CampaignConfig {
                exhaustive_limit: 9,
                ..base
            }),
            Err(Error::EnumerationLimit {
                requested: 9,
                limit: 7
            })
        );
    }
}
