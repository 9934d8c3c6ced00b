//! Full pipeline from a squeeze spec to a machine-readable index report.

use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::closed_forms::linear_formulas;
use crate::cut_index::{edge_wiener_cut, TreeBreakdown};
use crate::cuts::{crossing_pairs, theta_classes};
use crate::hyper::{all_pair_counts, combine, edge_hyper_wiener_with, PairCounts};
use crate::oracle::{self, GenericGraph};
use crate::phenylene::build_phenylene;
use crate::squeeze::{validate_squeeze, SqueezeSpec};
use crate::{pairs, Result};

pub const SCHEMA: &str = "phenylene-index-report/v1";
pub const DEFAULT_ORACLE_EDGE_BOUND: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComputeOptions {
    pub with_oracle: bool,
    pub oracle_edge_bound: usize,
    pub collect_pairs: bool,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions {
            with_oracle: false,
            oracle_edge_bound: DEFAULT_ORACLE_EDGE_BOUND,
            collect_pairs: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Cut,
    Oracle,
    Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDescriptor {
    pub spec_sha256: String,
    pub hexagons: usize,
    pub vertices: usize,
    pub edges: usize,
    pub theta_class_count: usize,
    /// Sizes in class-id order.
    pub theta_class_sizes: Vec<usize>,
    pub crossing_pairs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Indices {
    pub w_v: Option<u64>,
    pub w_e_hat: u64,
    pub w_e: u64,
    pub w_ve: Option<u64>,
    pub ww: Option<u64>,
    pub wwe_star: u64,
    pub ww_e: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Methods {
    pub w_v: Option<Method>,
    pub w_e_hat: Method,
    pub w_e: Method,
    pub w_ve: Option<Method>,
    pub ww: Option<Method>,
    pub wwe_star: Method,
    pub ww_e: Method,
}

/// Brute-force values for cross-checking the cut method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleValues {
    pub w_e_hat: u64,
    pub w_e: u64,
    pub ww_e: u64,
    pub wwe_star: u64,
    pub agrees: bool,
}

/// Closed-form values, present for linear chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaValues {
    pub w_e_hat: u64,
    pub w_e: u64,
    pub wwe_star: u64,
    pub ww_e: u64,
    pub agrees: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Timings {
    pub squeeze: u64,
    pub phenylene: u64,
    pub cuts: u64,
    pub edge_wiener: u64,
    pub hyper: u64,
    pub oracle: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub schema: &'static str,
    pub input: InputDescriptor,
    pub indices: Indices,
    pub methods: Methods,
    pub per_tree: [TreeBreakdown; 4],
    pub oracle: Option<OracleValues>,
    pub formula: Option<FormulaValues>,
    /// Microseconds per phase; not part of the deterministic output.
    pub timings_us: Timings,
}

impl IndexReport {
    /// `We = Ŵe + C(|E|, 2)` and `WWe = 2We + WWe* − C(|E|, 2)`.
    pub fn identities_hold(&self) -> bool {
        let Ok(p) = pairs(self.input.edges as u64) else {
            return false;
        };
        let i = &self.indices;
        i.w_e_hat.checked_add(p) == Some(i.w_e)
            && combine(self.input.edges as u64, i.w_e, i.wwe_star).ok() == Some(i.ww_e)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn spec_digest(spec: &SqueezeSpec) -> String {
    Sha256::digest(spec.to_string().as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn micros(start: Instant) -> u64 {
    start.elapsed().as_micros() as u64
}

/// Runs the pipeline: squeeze, phenylene, Θ-classes, quotient trees, pair
/// counts, and optionally the brute-force oracles. Pair counts are returned
/// when `collect_pairs` is set.
pub fn compute_report(
    spec: &SqueezeSpec,
    options: &ComputeOptions,
) -> Result<(IndexReport, Option<Vec<PairCounts>>)> {
    let mut timings = Timings::default();

    let start = Instant::now();
    let squeeze = validate_squeeze(spec)?;
    timings.squeeze = micros(start);

    let start = Instant::now();
    let g = build_phenylene(squeeze);
    timings.phenylene = micros(start);

    let start = Instant::now();
    let classes = theta_classes(&g);
    timings.cuts = micros(start);

    let start = Instant::now();
    let edge_wiener = edge_wiener_cut(&g)?;
    timings.edge_wiener = micros(start);

    let start = Instant::now();
    let hyper = edge_hyper_wiener_with(&g, &classes, &edge_wiener)?;
    timings.hyper = micros(start);

    let pair_counts = options.collect_pairs.then(|| all_pair_counts(&g, &classes));

    let mut indices = Indices {
        w_v: None,
        w_e_hat: edge_wiener.w_e_hat,
        w_e: edge_wiener.w_e,
        w_ve: None,
        ww: None,
        wwe_star: hyper.wwe_star,
        ww_e: hyper.ww_e,
    };
    let mut methods = Methods {
        w_v: None,
        w_e_hat: Method::Cut,
        w_e: Method::Cut,
        w_ve: None,
        ww: None,
        wwe_star: Method::Cut,
        ww_e: Method::Cut,
    };

    let mut oracle_values = None;
    if options.with_oracle && g.edge_count() <= options.oracle_edge_bound {
        let start = Instant::now();
        let generic = GenericGraph::from(&g);
        indices.w_v = Some(oracle::wiener_v_oracle(&generic));
        indices.w_ve = Some(oracle::vertex_edge_wiener_oracle(&generic));
        indices.ww = Some(oracle::hyper_wiener_oracle(&generic));
        methods.w_v = Some(Method::Oracle);
        methods.w_ve = Some(Method::Oracle);
        methods.ww = Some(Method::Oracle);
        let w_e_hat = oracle::edge_wiener_hat_oracle(&generic);
        let w_e = oracle::edge_wiener_oracle(&generic);
        let ww_e = oracle::edge_hyper_wiener_oracle(&generic);
        let p = pairs(g.edge_count() as u64)?;
        // WWe* = WWe − 2We + C(|E|, 2); always non-negative for real graphs
        let wwe_star = (ww_e + p).checked_sub(2 * w_e).unwrap_or(u64::MAX);
        oracle_values = Some(OracleValues {
            w_e_hat,
            w_e,
            ww_e,
            wwe_star,
            agrees: (w_e_hat, w_e, ww_e, wwe_star)
                == (indices.w_e_hat, indices.w_e, indices.ww_e, indices.wwe_star),
        });
        timings.oracle = Some(micros(start));
    }

    let formula = if spec.is_linear_chain() {
        let f = linear_formulas(spec.hexagon_count() as u64)?;
        Some(FormulaValues {
            w_e_hat: f.w_e_hat,
            w_e: f.w_e,
            wwe_star: f.wwe_star,
            ww_e: f.ww_e,
            agrees: (f.w_e_hat, f.w_e, f.wwe_star, f.ww_e)
                == (indices.w_e_hat, indices.w_e, indices.wwe_star, indices.ww_e),
        })
    } else {
        None
    };

    let report = IndexReport {
        schema: SCHEMA,
        input: InputDescriptor {
            spec_sha256: spec_digest(spec),
            hexagons: g.hexagon_count(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            theta_class_count: classes.len(),
            theta_class_sizes: classes.iter().map(|c| c.len()).collect(),
            crossing_pairs: crossing_pairs(&g, &classes).len(),
        },
        indices,
        methods,
        per_tree: edge_wiener.per_tree,
        oracle: oracle_values,
        formula,
        timings_us: timings,
    };
    assert!(
        report.identities_hold(),
        "index identities violated for spec {}",
        report.input.spec_sha256
    );
    Ok((report, pair_counts))
}
