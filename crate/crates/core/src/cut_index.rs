//! Edge-Wiener index of a phenylene from its four quotient trees.
//!
//! The endpoint distance between two edges splits as a sum of distances in
//! the four quotient trees, so `Ŵe(G)` is the sum over the trees of
//! `Ŵe(T, w') + W(T, w) + Wve(T, w, w')`, and `We(G) = Ŵe(G) + C(|E|, 2)`.

use serde::Serialize;

use crate::phenylene::Phenylene;
use crate::squeeze::DirectionClass;
use crate::tree_wiener::{
    compact_edges, quotient_weights, tree_wiener_e_hat, tree_wiener_v, tree_wiener_ve,
};
use crate::{pairs, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeBreakdown {
    pub part: u8,
    pub w_e_hat: u64,
    pub w_v: u64,
    pub w_ve: u64,
}

impl TreeBreakdown {
    pub fn total(&self) -> Result<u64> {
        self.w_e_hat
            .checked_add(self.w_v)
            .and_then(|s| s.checked_add(self.w_ve))
            .ok_or(Error::Overflow("quotient tree contribution"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeWienerResult {
    pub edge_count: u64,
    pub w_e_hat: u64,
    pub w_e: u64,
    /// Indexed by direction class 1..=4.
    pub per_tree: [TreeBreakdown; 4],
}

impl EdgeWienerResult {
    /// Checks `We = Ŵe + C(|E|, 2)` and that `Ŵe` is the sum of the twelve
    /// tree terms.
    pub fn identities_hold(&self) -> bool {
        let hat = self.per_tree.iter().try_fold(0u64, |acc, t| {
            t.total().ok().and_then(|v| acc.checked_add(v))
        });
        hat == Some(self.w_e_hat)
            && pairs(self.edge_count)
                .ok()
                .and_then(|p| self.w_e_hat.checked_add(p))
                == Some(self.w_e)
    }
}

pub fn edge_wiener_cut(g: &Phenylene) -> Result<EdgeWienerResult> {
    let mut per_tree = [TreeBreakdown {
        part: 0,
        w_e_hat: 0,
        w_v: 0,
        w_ve: 0,
    }; 4];
    let mut w_e_hat = 0u64;
    let edges = compact_edges(g);
    for part in DirectionClass::ALL {
        let tree = quotient_weights(g.vertex_count(), &edges, part)?;
        let breakdown = TreeBreakdown {
            part: part.get(),
            w_e_hat: tree_wiener_e_hat(&tree)?,
            w_v: tree_wiener_v(&tree)?,
            w_ve: tree_wiener_ve(&tree)?,
        };
        w_e_hat = w_e_hat
            .checked_add(breakdown.total()?)
            .ok_or(Error::Overflow("edge-Wiener index"))?;
        per_tree[part.index()] = breakdown;
    }
    let edge_count = g.edge_count() as u64;
    let w_e = w_e_hat
        .checked_add(pairs(edge_count)?)
        .ok_or(Error::Overflow("edge-Wiener index"))?;
    let result = EdgeWienerResult {
        edge_count,
        w_e_hat,
        w_e,
        per_tree,
    };
    assert!(
        result.identities_hold(),
        "edge-Wiener identities violated: {result:?}"
    );
    Ok(result)
}
