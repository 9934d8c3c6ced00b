//! Edge-hyper-Wiener index from pair counts over Θ-classes.
//!
//! For classes `i ≠ j`, `m^{kl}` counts edges on side `k` of class `i` and
//! side `l` of class `j` (edges of either class are counted nowhere). Then
//!
//! `WWe(G) = 2·We(G) + Σ_{i<j} (m^{11}·m^{00} + m^{10}·m^{01}) − C(|E|, 2)`.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::cut_index::{edge_wiener_cut, EdgeWienerResult};
use crate::cuts::{theta_classes, EdgeSide, ThetaClass};
use crate::phenylene::Phenylene;
use crate::{pairs, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairCounts {
    pub i: usize,
    pub j: usize,
    pub m00: u64,
    pub m01: u64,
    pub m10: u64,
    pub m11: u64,
}

impl PairCounts {
    pub fn total(&self) -> u64 {
        self.m00 + self.m01 + self.m10 + self.m11
    }

    /// Counts after exchanging the side labels of class `i`.
    pub fn swap_first(&self) -> PairCounts {
        PairCounts {
            m00: self.m10,
            m01: self.m11,
            m10: self.m00,
            m11: self.m01,
            ..*self
        }
    }

    /// Counts after exchanging the side labels of class `j`.
    pub fn swap_second(&self) -> PairCounts {
        PairCounts {
            m00: self.m01,
            m01: self.m00,
            m10: self.m11,
            m11: self.m10,
            ..*self
        }
    }
}

/// Edge-by-edge count for one pair of classes.
pub fn pair_counts(g: &Phenylene, classes: &[ThetaClass], i: usize, j: usize) -> PairCounts {
    assert_ne!(i, j, "pair counts need two distinct classes");
    let (a, b) = (&classes[i], &classes[j]);
    let mut m = [[0u64; 2]; 2];
    for edge in 0..g.edge_count() {
        if let (EdgeSide::Side(x), EdgeSide::Side(y)) =
            (a.side_of_edge(g, edge), b.side_of_edge(g, edge))
        {
            m[x as usize][y as usize] += 1;
        }
    }
    PairCounts {
        i,
        j,
        m00: m[0][0],
        m01: m[0][1],
        m10: m[1][0],
        m11: m[1][1],
    }
}

/// `m^{11}·m^{00} + m^{10}·m^{01}`.
pub fn pair_contribution(pc: &PairCounts) -> u64 {
    pc.m11 * pc.m00 + pc.m10 * pc.m01
}

/// Per-class edge bitsets: non-cut edges on side 0, and on side 1.
struct SideBits {
    zero: Vec<u64>,
    one: Vec<u64>,
}

fn side_bits(g: &Phenylene, class: &ThetaClass) -> SideBits {
    let words = g.edge_count().div_ceil(64);
    let mut bits = SideBits {
        zero: vec![0; words],
        one: vec![0; words],
    };
    for edge in 0..g.edge_count() {
        let target = match class.side_of_edge(g, edge) {
            EdgeSide::Cut => continue,
            EdgeSide::Side(0) => &mut bits.zero,
            EdgeSide::Side(_) => &mut bits.one,
        };
        target[edge / 64] |= 1 << (edge % 64);
    }
    bits
}

fn counts_from_bits(a: &SideBits, b: &SideBits, i: usize, j: usize) -> PairCounts {
    let mut m = [0u32; 4];
    for w in 0..a.zero.len() {
        m[0] += (a.zero[w] & b.zero[w]).count_ones();
        m[1] += (a.zero[w] & b.one[w]).count_ones();
        m[2] += (a.one[w] & b.zero[w]).count_ones();
        m[3] += (a.one[w] & b.one[w]).count_ones();
    }
    PairCounts {
        i,
        j,
        m00: m[0] as u64,
        m01: m[1] as u64,
        m10: m[2] as u64,
        m11: m[3] as u64,
    }
}

/// Counts for every unordered pair `i < j`, in lexicographic order.
pub fn all_pair_counts(g: &Phenylene, classes: &[ThetaClass]) -> Vec<PairCounts> {
    let bits: Vec<SideBits> = classes.par_iter().map(|c| side_bits(g, c)).collect();
    (0..classes.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let bits = &bits;
            (i + 1..classes.len()).map(move |j| counts_from_bits(&bits[i], &bits[j], i, j))
        })
        .collect()
}

/// `Σ_{i<j} (m^{11}·m^{00} + m^{10}·m^{01})`, using side bitsets and a
/// parallel reduction. Matches the per-pair edge loop exactly.
pub fn wwe_star(g: &Phenylene, classes: &[ThetaClass]) -> Result<u64> {
    let bits: Vec<SideBits> = classes.par_iter().map(|c| side_bits(g, c)).collect();
    let total: u128 = (0..classes.len())
        .into_par_iter()
        .map(|i| {
            (i + 1..classes.len())
                .map(|j| pair_contribution(&counts_from_bits(&bits[i], &bits[j], i, j)) as u128)
                .sum::<u128>()
        })
        .sum();
    u64::try_from(total).map_err(|_| Error::Overflow("pair-count sum"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HyperWienerResult {
    pub w_e: u64,
    pub wwe_star: u64,
    pub ww_e: u64,
}

/// `2·We + WWe* − C(|E|, 2)` from already computed parts.
pub fn combine(edge_count: u64, w_e: u64, wwe_star: u64) -> Result<u64> {
    let overflow = || Error::Overflow("edge-hyper-Wiener index");
    w_e.checked_mul(2)
        .and_then(|v| v.checked_add(wwe_star))
        .and_then(|v| v.checked_sub(pairs(edge_count).ok()?))
        .ok_or_else(overflow)
}

pub fn edge_hyper_wiener_with(
    g: &Phenylene,
    classes: &[ThetaClass],
    edge_wiener: &EdgeWienerResult,
) -> Result<HyperWienerResult> {
    let star = wwe_star(g, classes)?;
    Ok(HyperWienerResult {
        w_e: edge_wiener.w_e,
        wwe_star: star,
        ww_e: combine(g.edge_count() as u64, edge_wiener.w_e, star)?,
    })
}

pub fn edge_hyper_wiener(g: &Phenylene) -> Result<HyperWienerResult> {
    let classes = theta_classes(g);
    edge_hyper_wiener_with(g, &classes, &edge_wiener_cut(g)?)
}

/// CSV lines `i,j,m00,m01,m10,m11,f` for every pair.
pub fn pair_csv(counts: &[PairCounts]) -> String {
    let mut out = String::with_capacity(counts.len() * 24);
    for pc in counts {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            pc.i,
            pc.j,
            pc.m00,
            pc.m01,
            pc.m10,
            pc.m11,
            pair_contribution(pc)
        )
        .expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phenylene::build_phenylene;
    use crate::squeeze::{generate_linear_spec, validate_squeeze};

    fn linear(n: usize) -> Phenylene {
        build_phenylene(validate_squeeze(&generate_linear_spec(n)).unwrap())
    }

    fn counts(m00: u64, m01: u64, m10: u64, m11: u64) -> PairCounts {
        PairCounts {
            i: 0,
            j: 1,
            m00,
            m01,
            m10,
            m11,
        }
    }

    #[test]
    fn contributions() {
        assert_eq!(pair_contribution(&counts(3, 4, 4, 3)), 25);
        assert_eq!(pair_contribution(&counts(1, 0, 0, 17)), 17);
        assert_eq!(pair_contribution(&counts(0, 0, 0, 0)), 0);
    }

    #[test]
    fn benzene_pairs_contribute_one_each() {
        // removing two opposite pairs of C6 leaves two edges, one in each
        // of two opposite quadrants
        let g = linear(1);
        let classes = theta_classes(&g);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let pc = pair_counts(&g, &classes, i, j);
            assert_eq!(pc.total(), 2);
            assert_eq!(pair_contribution(&pc), 1);
        }
        assert_eq!(wwe_star(&g, &classes).unwrap(), 3);
        assert_eq!(edge_hyper_wiener(&g).unwrap().ww_e, 42);
    }

    #[test]
    fn two_hexagons() {
        let r = edge_hyper_wiener(&linear(2)).unwrap();
        assert_eq!(r.wwe_star, 106);
        assert_eq!(r.ww_e, 479);
        assert_eq!(2 * 232 + 106 - 91, 479);
    }

    #[test]
    fn bitsets_match_edge_loop() {
        let g = linear(5);
        let classes = theta_classes(&g);
        let fast = all_pair_counts(&g, &classes);
        let mut k = 0;
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                assert_eq!(fast[k], pair_counts(&g, &classes, i, j));
                k += 1;
            }
        }
        let summed: u64 = fast.iter().map(pair_contribution).sum();
        assert_eq!(summed, wwe_star(&g, &classes).unwrap());
    }

    #[test]
    fn counts_skip_both_classes() {
        let g = linear(4);
        let classes = theta_classes(&g);
        for i in 0..classes.len() {
            for j in 0..classes.len() {
                if i != j {
                    let pc = pair_counts(&g, &classes, i, j);
                    let expected = g.edge_count() - classes[i].len() - classes[j].len();
                    assert_eq!(pc.total() as usize, expected);
                }
            }
        }
    }

    #[test]
    fn swapping_sides_keeps_contribution() {
        let g = linear(3);
        let classes = theta_classes(&g);
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                let pc = pair_counts(&g, &classes, i, j);
                let mut swapped = classes.clone();
                swapped[i] = classes[i].swapped();
                assert_eq!(pair_counts(&g, &swapped, i, j), pc.swap_first());
                let f = pair_contribution(&pc);
                assert_eq!(pair_contribution(&pc.swap_first()), f);
                assert_eq!(pair_contribution(&pc.swap_second()), f);
                assert_eq!(pair_contribution(&pc.swap_first().swap_second()), f);
            }
        }
    }

    #[test]
    fn csv_lines() {
        let g = linear(1);
        let classes = theta_classes(&g);
        // classes {0,3} and {2,5}: edge 1-2 lies on sides (1,0), edge 4-5 on (0,1)
        assert_eq!(
            pair_csv(&all_pair_counts(&g, &classes)),
            "0,1,1,0,0,1,1\n0,2,0,1,1,0,1\n1,2,1,0,0,1,1\n"
        );
    }
}
