//! Edge-Wiener and edge-hyper-Wiener indices of phenylenes.
//!
//! A phenylene is built from a catacondensed benzenoid system (its hexagonal
//! squeeze) by inserting a square between every pair of adjacent hexagons.
//! This crate embeds squeezes on the hexagonal lattice, builds the phenylene
//! graph, and computes its distance-based indices in two independent ways:
//!
//! * the cut method: four weighted quotient trees give the edge-Wiener index
//!   in linear time ([`cut_index`]), and pair counts over Θ-classes give the
//!   edge-hyper-Wiener index ([`hyper`]);
//! * brute force over explicit distance matrices and line graphs
//!   ([`oracle`]), used as ground truth.
//!
//! ```
//! use phenylene_wiener::{cut_index, hyper, phenylene, squeeze};
//!
//! let spec = squeeze::generate_linear_spec(3);
//! let graph = phenylene::build_phenylene(squeeze::validate_squeeze(&spec).unwrap());
//! let edge_wiener = cut_index::edge_wiener_cut(&graph).unwrap();
//! assert_eq!(edge_wiener.w_e, 807);
//! assert_eq!(hyper::edge_hyper_wiener(&graph).unwrap().ww_e, 2228);
//! ```

pub mod closed_forms;
pub mod cut_index;
pub mod cuts;
mod error;
pub mod hyper;
pub mod oracle;
pub mod phenylene;
pub mod report;
pub mod squeeze;
pub mod tree_wiener;
mod union_find;
pub mod verify;

pub use error::{Error, Result};

/// `k * (k - 1) / 2`, checked.
pub(crate) fn pairs(k: u64) -> Result<u64> {
    k.checked_mul(k.saturating_sub(1))
        .map(|v| v / 2)
        .ok_or(Error::Overflow("binomial coefficient"))
}
