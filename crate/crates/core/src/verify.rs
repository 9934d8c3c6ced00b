//! Cross-checks of the cut method against the brute-force oracles, and
//! the timing harness behind `bench`.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cut_index::edge_wiener_cut;
use crate::cuts::theta_classes;
use crate::hyper::edge_hyper_wiener;
use crate::oracle::{self, GenericGraph};
use crate::phenylene::{build_phenylene, Phenylene};
use crate::squeeze::{generate_linear_spec, random_spec, validate_squeeze, SqueezeSpec};
use crate::Result;

/// The three indices the cut method produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CutValues {
    pub w_e_hat: u64,
    pub w_e: u64,
    pub ww_e: u64,
}

pub fn cut_values(g: &Phenylene) -> Result<CutValues> {
    let edge_wiener = edge_wiener_cut(g)?;
    let hyper = edge_hyper_wiener(g)?;
    Ok(CutValues {
        w_e_hat: edge_wiener.w_e_hat,
        w_e: edge_wiener.w_e,
        ww_e: hyper.ww_e,
    })
}

pub fn oracle_values(g: &GenericGraph) -> CutValues {
    CutValues {
        w_e_hat: oracle::edge_wiener_hat_oracle(g),
        w_e: oracle::edge_wiener_oracle(g),
        ww_e: oracle::edge_hyper_wiener_oracle(g),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub spec: SqueezeSpec,
    pub reason: String,
}

/// Checks one spec: cut values equal oracle values, Θ-classes from face
/// tracing equal the closure of the distance relation, and the graph is a
/// partial cube.
pub fn check_instance(
    spec: &SqueezeSpec,
    compute: &dyn Fn(&Phenylene) -> Result<CutValues>,
) -> std::result::Result<(), String> {
    let squeeze = validate_squeeze(spec).map_err(|e| format!("validation failed: {e}"))?;
    let g = build_phenylene(squeeze);
    let generic = GenericGraph::from(&g);

    let cut = compute(&g).map_err(|e| format!("cut method failed: {e}"))?;
    let brute = oracle_values(&generic);
    if cut != brute {
        return Err(format!("cut method {cut:?} != oracle {brute:?}"));
    }

    let traced: Vec<Vec<usize>> = theta_classes(&g).into_iter().map(|c| c.edges).collect();
    let closure = oracle::theta_star_classes(&generic);
    if traced != closure {
        return Err(format!(
            "face-traced classes {traced:?} != distance-based classes {closure:?}"
        ));
    }

    match oracle::is_partial_cube_check(&generic) {
        oracle::PartialCubeCheck::PartialCube { .. } => Ok(()),
        other => Err(format!("not a partial cube: {other:?}")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
    pub random_count: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 6,
            seed: 0,
            random_count: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub max_n: usize,
    pub seed: u64,
    pub linear_checked: usize,
    pub random_checked: usize,
    #[serde(skip)]
    pub failure: Option<Mismatch>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Linear chains `1..=max_n`, then `random_count` seeded random specs with
/// `2..=max_n` hexagons. Stops at the first mismatch.
pub fn verify(config: &VerifyConfig) -> VerifySummary {
    verify_with(config, &cut_values)
}

pub fn verify_with(
    config: &VerifyConfig,
    compute: &dyn Fn(&Phenylene) -> Result<CutValues>,
) -> VerifySummary {
    let mut summary = VerifySummary {
        max_n: config.max_n,
        seed: config.seed,
        linear_checked: 0,
        random_checked: 0,
        failure: None,
    };
    let fail = |spec: SqueezeSpec, reason| Some(Mismatch { spec, reason });

    for n in 1..=config.max_n {
        let spec = generate_linear_spec(n);
        if let Err(reason) = check_instance(&spec, compute) {
            summary.failure = fail(spec, reason);
            return summary;
        }
        summary.linear_checked += 1;
    }

    if config.max_n >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for _ in 0..config.random_count {
            let n = rng.gen_range(2..=config.max_n);
            let spec = random_spec(n, &mut rng);
            if let Err(reason) = check_instance(&spec, compute) {
                summary.failure = fail(spec, reason);
                return summary;
            }
            summary.random_checked += 1;
        }
    }
    summary
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub edges: usize,
    pub cut: Duration,
    pub hyper: Option<Duration>,
    pub oracle: Option<Duration>,
}

impl BenchRow {
    pub const CSV_HEADER: &'static str = "n,edges,cut_us,hyper_us,oracle_us";

    pub fn csv_line(&self) -> String {
        let us = |d: Option<Duration>| {
            d.map_or_else(
                || "-".to_owned(),
                |d| format!("{:.1}", d.as_secs_f64() * 1e6),
            )
        };
        format!(
            "{},{},{},{},{}",
            self.n,
            self.edges,
            us(Some(self.cut)),
            us(self.hyper),
            us(self.oracle)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchConfig {
    pub oracle_edge_bound: usize,
    pub hyper_edge_bound: usize,
    pub repetitions: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            oracle_edge_bound: 200,
            hyper_edge_bound: 20_000,
            repetitions: 3,
        }
    }
}

/// Fastest of `repetitions` runs.
pub fn fastest<T>(repetitions: usize, mut run: impl FnMut() -> T) -> Duration {
    (0..repetitions.max(1))
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(run());
            start.elapsed()
        })
        .min()
        .expect("at least one repetition")
}

/// Times the edge-Wiener cut method on `PH_n`, and the hyper-Wiener pair
/// method and line-graph oracle when the graph is within their bounds.
pub fn bench_linear(n: usize, config: &BenchConfig) -> Result<BenchRow> {
    let g = build_phenylene(validate_squeeze(&generate_linear_spec(n))?);
    edge_wiener_cut(&g)?;
    let cut = fastest(config.repetitions, || edge_wiener_cut(&g));
    let hyper = (g.edge_count() <= config.hyper_edge_bound)
        .then(|| fastest(config.repetitions, || edge_hyper_wiener(&g)));
    let oracle = (g.edge_count() <= config.oracle_edge_bound).then(|| {
        let generic = GenericGraph::from(&g);
        fastest(config.repetitions, || oracle::edge_wiener_oracle(&generic))
    });
    Ok(BenchRow {
        n,
        edges: g.edge_count(),
        cut,
        hyper,
        oracle,
    })
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let covariance: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let variance: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    covariance / variance
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_exact_powers() {
        let cubic: Vec<(f64, f64)> = (1..6).map(|k| (k as f64, (k as f64).powi(3))).collect();
        assert!((log_log_slope(&cubic) - 3.0).abs() < 1e-9);
    }

    #[test]
    fn benzene_only() {
        let summary = verify(&VerifyConfig {
            max_n: 1,
            seed: 0,
            random_count: 10,
        });
        assert!(summary.passed());
        assert_eq!((summary.linear_checked, summary.random_checked), (1, 0));
    }

    #[test]
    fn csv_placeholders() {
        let row = BenchRow {
            n: 1,
            edges: 6,
            cut: Duration::from_micros(3),
            hyper: None,
            oracle: Some(Duration::from_micros(10)),
        };
        assert_eq!(row.csv_line(), "1,6,3.0,-,10.0");
    }
}
