//! Machine-readable reports with byte-stable output: struct field order is
//! the JSON key order, values are integers, and nothing time-dependent is
//! ever serialized.

use serde::Serialize;
use splice_indices::indices::{Counters, IndexKind, IndexValues};
use splice_indices::splice::Variant;
use splice_indices::verify::{CampaignCell, CampaignReport, Phase, Witness};
use splice_indices::Graph;

/// Schema version of the JSON reports, independent of the crate version.
pub const REPORT_VERSION: &str = "1.0.0";

#[derive(Serialize)]
pub struct JsonReport {
    pub graph: GraphJson,
    pub indices: IndicesJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counters: Option<CountersJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonJson>,
    pub version: &'static str,
}

#[derive(Serialize)]
pub struct GraphJson {
    pub n: u64,
    pub m: u64,
}

#[derive(Serialize)]
pub struct IndicesJson {
    pub szeged: u64,
    pub edge_szeged: u64,
    pub pi_edge: u64,
    pub pi_vertex: u64,
    pub eccentric_connectivity: u64,
}

impl From<IndexValues> for IndicesJson {
    fn from(values: IndexValues) -> IndicesJson {
        IndicesJson {
            szeged: values.szeged,
            edge_szeged: values.edge_szeged,
            pi_edge: values.pi_edge,
            pi_vertex: values.pi_vertex,
            eccentric_connectivity: values.eccentric_connectivity,
        }
    }
}

#[derive(Serialize)]
pub struct CountersJson {
    pub bfs_calls: u64,
}

impl From<Counters> for CountersJson {
    fn from(counters: Counters) -> CountersJson {
        CountersJson {
            bfs_calls: counters.bfs_runs,
        }
    }
}

#[derive(Serialize)]
pub struct ComparisonJson {
    pub szeged: ComparisonCell,
    pub edge_szeged: ComparisonCell,
    pub pi_edge: ComparisonCell,
    pub pi_vertex: ComparisonCell,
    pub eccentric_connectivity: ComparisonCell,
}

#[derive(Serialize)]
pub struct ComparisonCell {
    pub direct: u64,
    pub formula: u64,
    pub variant: &'static str,
    #[serde(rename = "match")]
    pub agrees: bool,
}

impl ComparisonJson {
    pub fn new(direct: IndexValues, formula: IndexValues, variant: Variant) -> ComparisonJson {
        let cell = |kind: IndexKind| ComparisonCell {
            direct: direct.get(kind),
            formula: formula.get(kind),
            variant: variant.as_str(),
            agrees: direct.get(kind) == formula.get(kind),
        };
        ComparisonJson {
            szeged: cell(IndexKind::Szeged),
            edge_szeged: cell(IndexKind::EdgeSzeged),
            pi_edge: cell(IndexKind::PiEdge),
            pi_vertex: cell(IndexKind::PiVertex),
            eccentric_connectivity: cell(IndexKind::EccentricConnectivity),
        }
    }
}

impl JsonReport {
    pub fn new(n: usize, m: usize, values: IndexValues) -> JsonReport {
        JsonReport {
            graph: GraphJson {
                n: n as u64,
                m: m as u64,
            },
            indices: values.into(),
            method: None,
            counters: None,
            comparison: None,
            version: REPORT_VERSION,
        }
    }

    pub fn render(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialization");
        out.push('\n');
        out
    }
}

#[derive(Serialize)]
pub struct CampaignJson {
    pub config: CampaignConfigJson,
    pub rng_algorithm: &'static str,
    pub exhaustive_cases: u64,
    pub random_cases: u64,
    pub cells: Vec<CampaignCellJson>,
    pub version: &'static str,
}

#[derive(Serialize)]
pub struct CampaignConfigJson {
    pub trials: u64,
    pub min_vertices: u64,
    pub max_vertices: u64,
    pub min_density: f64,
    pub max_density: f64,
    pub seed: u64,
    pub variants: Vec<&'static str>,
    pub exhaustive_limit: u64,
}

#[derive(Serialize)]
pub struct CampaignCellJson {
    pub index: &'static str,
    pub variant: &'static str,
    pub cases: u64,
    pub matches: u64,
    pub mismatches: u64,
    pub max_discrepancy: u64,
    pub formula_below_direct: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_witness: Option<WitnessJson>,
}

/// A serialized splice case: enough to replay it with the `splice`
/// subcommand (two edge lists plus the glue vertices).
#[derive(Serialize)]
pub struct WitnessJson {
    pub phase: &'static str,
    pub case_index: u64,
    pub g1: WitnessGraphJson,
    pub u1: u64,
    pub g2: WitnessGraphJson,
    pub u2: u64,
}

#[derive(Serialize)]
pub struct WitnessGraphJson {
    pub n: u64,
    pub edges: Vec<(u64, u64)>,
}

fn witness_graph(graph: &Graph) -> WitnessGraphJson {
    WitnessGraphJson {
        n: graph.vertex_count() as u64,
        edges: graph
            .edges()
            .iter()
            .map(|&(u, v)| (u as u64, v as u64))
            .collect(),
    }
}

impl From<&Witness> for WitnessJson {
    fn from(witness: &Witness) -> WitnessJson {
        WitnessJson {
            phase: match witness.phase {
                Phase::Exhaustive => "exhaustive",
                Phase::Randomized => "randomized",
            },
            case_index: witness.case_index,
            g1: witness_graph(witness.spec.g1()),
            u1: witness.spec.u1() as u64,
            g2: witness_graph(witness.spec.g2()),
            u2: witness.spec.u2() as u64,
        }
    }
}

fn cell_json(cell: &CampaignCell, total_cases: u64) -> CampaignCellJson {
    CampaignCellJson {
        index: cell.index.as_str(),
        variant: cell.variant.as_str(),
        cases: total_cases,
        matches: cell.matches,
        mismatches: cell.mismatches,
        max_discrepancy: cell.max_discrepancy,
        formula_below_direct: cell.formula_below_direct,
        first_witness: cell.first_witness.as_ref().map(WitnessJson::from),
    }
}

impl CampaignJson {
    pub fn new(report: &CampaignReport) -> CampaignJson {
        CampaignJson {
            config: CampaignConfigJson {
                trials: report.config.trials,
                min_vertices: report.config.min_vertices as u64,
                max_vertices: report.config.max_vertices as u64,
                min_density: report.config.min_density,
                max_density: report.config.max_density,
                seed: report.config.seed,
                variants: report.config.variants.iter().map(|v| v.as_str()).collect(),
                exhaustive_limit: report.config.exhaustive_limit as u64,
            },
            rng_algorithm: report.rng_algorithm,
            exhaustive_cases: report.exhaustive_cases,
            random_cases: report.random_cases,
            cells: report
                .cells
                .iter()
                .map(|c| cell_json(c, report.total_cases()))
                .collect(),
            version: REPORT_VERSION,
        }
    }

    pub fn render(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialization");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_order_is_fixed_and_integers_only() {
        let values = IndexValues {
            szeged: 4,
            edge_szeged: 0,
            pi_edge: 2,
            pi_vertex: 6,
            eccentric_connectivity: 6,
        };
        let mut report = JsonReport::new(3, 2, values);
        report.method = Some("direct");
        report.counters = Some(CountersJson { bfs_calls: 3 });
        let text = report.render();
        let graph_pos = text.find("\"graph\"").unwrap();
        let indices_pos = text.find("\"indices\"").unwrap();
        let method_pos = text.find("\"method\"").unwrap();
        let counters_pos = text.find("\"counters\"").unwrap();
        let version_pos = text.find("\"version\"").unwrap();
        assert!(graph_pos < indices_pos);
        assert!(indices_pos < method_pos);
        assert!(method_pos < counters_pos);
        assert!(counters_pos < version_pos);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        for kind in IndexKind::ALL {
            assert!(
                parsed["indices"][kind.as_str()].is_u64(),
                "index values must serialize as integers: {text}"
            );
        }
    }

    #[test]
    fn optional_blocks_are_omitted_when_absent() {
        let report = JsonReport::new(2, 1, IndexValues::default());
        let text = report.render();
        assert!(!text.contains("\"method\""));
        assert!(!text.contains("\"counters\""));
        assert!(!text.contains("\"comparison\""));
    }
}
