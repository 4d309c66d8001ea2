//! Closed-form composition series for the product of the two Speh
//! multisegments of a frame, in both classifications, together with
//! socle/cosocle data, subrepresentation lattices, and the conjectural
//! extension to products of two arbitrary Speh-shaped multisegments.
//!
//! Factor index convention: index 0 is the plain union r_0; the other
//! indices run over the frame's valid range. Factor lists are always
//! ordered socle-first. Lattice chains list, from the socle upward, the
//! index set of each member of the (linear) lattice of subrepresentations;
//! the last entry is the whole module.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involution::mw_dual;
use crate::line::{HalfExp, Line};
use crate::multisegment::{speh, Multisegment};
use crate::segment::Segment;
use crate::speh::SpehPairParams;

/// Sign of the twist parameter ±k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("unknown sign {other:?}, expected + or -"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Which classification the factor multisegments are read in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReportBasis {
    #[serde(rename = "Z")]
    Zelevinsky,
    #[serde(rename = "L")]
    Langlands,
}

/// One composition factor: its index in the r_j family and the parameter
/// multisegment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub j: u32,
    pub ms: Multisegment,
}

/// The full composition-series description of one module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionReport {
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub sign: Sign,
    pub basis: ReportBasis,
    pub length: usize,
    /// Socle-first.
    pub factors: Vec<Factor>,
    pub socle: Multisegment,
    pub cosocle: Multisegment,
    /// Index sets of the subrepresentation chain, socle upward; `[[0]]`
    /// for irreducible modules.
    pub lattice: Vec<Vec<u32>>,
}

/// One member of the subrepresentation chain, with its factor content.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeNode {
    pub indices: Vec<u32>,
    pub factors: Vec<Multisegment>,
}

/// All factor indices of the module for parameters (n, d, k): 0 together
/// with the frame's valid range.
fn factor_indices(p: &SpehPairParams) -> Vec<u32> {
    let mut indices = vec![0u32];
    if let Some((lo, hi)) = p.valid_j_range() {
        indices.extend(lo..=hi);
    }
    indices
}

/// Composition series in the standard (Zelevinsky-side) classification.
pub fn compose_zelevinsky(n: u32, d: u32, k: u32, sign: Sign, line: &Line) -> CompositionReport {
    let p = SpehPairParams::new(n, d, k, line);
    let mut indices = factor_indices(&p);
    // Socle-first: the plus module has socle at the top index, the minus
    // module at index 0.
    match sign {
        Sign::Plus => indices.reverse(),
        Sign::Minus => {}
    }
    let factors: Vec<Factor> = indices
        .iter()
        .map(|&j| Factor { j, ms: p.r_multisegment(j).expect("index from the valid range") })
        .collect();
    let lattice = match lattice_chain(n, d, k, sign, line) {
        Ok(nodes) => nodes.into_iter().map(|node| node.indices).collect(),
        Err(_) => vec![vec![0]],
    };
    CompositionReport {
        n,
        d,
        k,
        sign,
        basis: ReportBasis::Zelevinsky,
        length: factors.len(),
        socle: factors.first().expect("at least r_0").ms.clone(),
        cosocle: factors.last().expect("at least r_0").ms.clone(),
        factors,
        lattice,
    }
}

/// Composition series of the same parameters read through the other
/// classification. The factor multisegments are again the r_j of the
/// (n, d) frame; the module structure is transported from the (d, n)
/// standard-basis module through the involution, and the two routes to
/// the factor set are compared at runtime.
pub fn compose_langlands(n: u32, d: u32, k: u32, sign: Sign, line: &Line) -> Result<CompositionReport> {
    let p = SpehPairParams::new(n, d, k, line);
    let mut indices = factor_indices(&p);
    // The plus module's socle is index 0 here; minus swaps.
    match sign {
        Sign::Plus => {}
        Sign::Minus => indices.reverse(),
    }
    let factors: Vec<Factor> = indices
        .iter()
        .map(|&j| Factor { j, ms: p.r_multisegment(j).expect("index from the valid range") })
        .collect();

    // Independent route: the module equals the transposed-parameter
    // standard-basis module, so its factors are the involution images of
    // that module's factors.
    let transposed = compose_zelevinsky(d, n, k, sign, line);
    if transposed.length != factors.len() {
        return Err(Error::InternalInconsistency(format!(
            "lengths disagree: {} via (d,n) vs {} direct at (n,d,k)=({n},{d},{k})",
            transposed.length,
            factors.len()
        )));
    }
    let by_ms: BTreeMap<&Multisegment, u32> = factors.iter().map(|f| (&f.ms, f.j)).collect();
    let mut index_map: BTreeMap<u32, u32> = BTreeMap::new();
    for tf in &transposed.factors {
        let dual = mw_dual(&tf.ms);
        match by_ms.get(&dual) {
            Some(&j) => {
                index_map.insert(tf.j, j);
            }
            None => {
                return Err(Error::InternalInconsistency(format!(
                    "involution image {dual} of factor {} is not an r_j of (n,d,k)=({n},{d},{k})",
                    tf.ms
                )));
            }
        }
    }

    let lattice: Vec<Vec<u32>> = transposed
        .lattice
        .iter()
        .map(|set| {
            let mut mapped: Vec<u32> = set.iter().map(|i| index_map[i]).collect();
            mapped.sort_unstable();
            mapped
        })
        .collect();
    let socle_index = indices[0];
    let starts_at_socle = lattice
        .first()
        .is_some_and(|set| set.len() == 1 && set[0] == socle_index);
    if !starts_at_socle {
        return Err(Error::InternalInconsistency(format!(
            "transported lattice does not start at the socle index {socle_index}"
        )));
    }

    Ok(CompositionReport {
        n,
        d,
        k,
        sign,
        basis: ReportBasis::Langlands,
        length: factors.len(),
        socle: factors.first().expect("at least r_0").ms.clone(),
        cosocle: factors.last().expect("at least r_0").ms.clone(),
        factors,
        lattice,
    })
}

/// Socle and cosocle from the closed two-sided description, without
/// computing the whole series: one end is the plain union a_− + a_+, the
/// other is the involution image of the transposed frame's plain union.
/// Defined in the reducible regime 1 ≤ k ≤ n+d−1.
pub fn socle_cosocle(
    n: u32,
    d: u32,
    k: u32,
    sign: Sign,
    line: &Line,
) -> Result<(Multisegment, Multisegment)> {
    if k < 1 || k as i64 > n as i64 + d as i64 - 1 {
        return Err(Error::OutOfRange(format!(
            "socle/cosocle split needs 1 <= k <= n+d-1, got (n,d,k) = ({n},{d},{k})"
        )));
    }
    let plain = SpehPairParams::new(n, d, k, line).base();
    let transposed_dual = mw_dual(&SpehPairParams::new(d, n, k, line).base());
    Ok(match sign {
        Sign::Minus => (plain, transposed_dual),
        Sign::Plus => (transposed_dual, plain),
    })
}

/// The linear lattice of subrepresentations, socle upward, for the
/// standard-basis module. Defined in the reducible regime.
pub fn lattice_chain(n: u32, d: u32, k: u32, sign: Sign, line: &Line) -> Result<Vec<LatticeNode>> {
    let (ni, di, ki) = (n as i64, d as i64, k as i64);
    if ki < 1 || ki > ni + di - 1 {
        return Err(Error::OutOfRange(format!(
            "subrepresentation chain needs 1 <= k <= n+d-1, got (n,d,k) = ({n},{d},{k})"
        )));
    }
    let p = SpehPairParams::new(n, d, k, line);
    let (lo, hi) = p.valid_j_range().expect("reducible regime has indices");
    let chain_sets: Vec<Vec<u32>> = match sign {
        // Proper subrepresentations carry the suffix ranges {i..hi}; the
        // whole module adds index 0.
        Sign::Plus => {
            let mut sets: Vec<Vec<u32>> = (lo..=hi).rev().map(|i| (i..=hi).collect()).collect();
            let mut full = vec![0u32];
            full.extend(lo..=hi);
            sets.push(full);
            sets
        }
        // Mirror module: complements of the plus chain, socle upward.
        Sign::Minus => {
            let mut sets = vec![vec![0u32]];
            for i in lo..=hi {
                let mut set = vec![0u32];
                set.extend(lo..=i);
                sets.push(set);
            }
            sets
        }
    };
    Ok(chain_sets
        .into_iter()
        .map(|indices| LatticeNode {
            factors: indices
                .iter()
                .map(|&j| p.r_multisegment(j).expect("index from the valid range"))
                .collect(),
            indices,
        })
        .collect())
}

/// Detected parameters of a Speh-shaped multisegment: `count` equal-width
/// segments whose beginnings step by exactly 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpehShape {
    pub count: u32,
    pub width: u32,
    pub center: HalfExp,
}

/// Recognize a Speh-shaped multisegment or explain why it is not one.
pub fn speh_shape(a: &Multisegment) -> Result<SpehShape> {
    let segs = a.segments();
    let Some(first) = segs.first() else {
        return Err(Error::NotSpeh("the empty multisegment".to_string()));
    };
    let width = first.card();
    for s in segs {
        if s.card() != width {
            return Err(Error::NotSpeh(format!(
                "segment widths differ in {a}: {} vs {}",
                width,
                s.card()
            )));
        }
    }
    for pair in segs.windows(2) {
        if pair[1].begin() - pair[0].begin() != HalfExp::int(1) {
            return Err(Error::NotSpeh(format!(
                "beginnings of {} and {} do not step by 1 in {a}",
                pair[0], pair[1]
            )));
        }
    }
    let last_end = segs.last().expect("non-empty").end();
    let center = HalfExp::half((first.begin().twice() + last_end.twice()) / 2);
    Ok(SpehShape { count: segs.len() as u32, width: width as u32, center })
}

/// Which reading of the conjecture's extra membership condition to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideCondition {
    /// The stated inequality j ≤ n−2, waived (per the source's footnote)
    /// when one input is a twist of the other.
    Verbatim,
    /// Only the linking requirement.
    None,
}

/// Conjectural factor list for the product of two Speh-shaped
/// multisegments. This is an expectation, not a theorem; callers must
/// surface the `conjectural` flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjecturalJh {
    pub conjectural: bool,
    pub side_condition: SideCondition,
    pub factors: Vec<Factor>,
}

/// Predicted composition factors of the product of two Speh-shaped
/// multisegments: the plain union, and for each admissible j the block
/// replacement of (Δ_{n−j+1..n}, Γ_{1..j}) by unions and intersections.
/// Inputs are renumbered so the Γ row starts no lower than the Δ row.
pub fn conjecture_jh(
    pi1: &Multisegment,
    pi2: &Multisegment,
    side: SideCondition,
) -> Result<ConjecturalJh> {
    let shape1 = speh_shape(pi1)?;
    let shape2 = speh_shape(pi2)?;
    let (delta_ms, gamma_ms, dshape, gshape) =
        if pi2.segments()[0].begin() < pi1.segments()[0].begin() {
            (pi2, pi1, shape2, shape1)
        } else {
            (pi1, pi2, shape1, shape2)
        };
    let delta = delta_ms.segments();
    let gamma = gamma_ms.segments();
    let n = delta.len();
    let m = gamma.len();
    let base = delta_ms.msum(gamma_ms)?;
    let line = base.line().clone();

    let twist_of_each_other = dshape.count == gshape.count && dshape.width == gshape.width;
    let mut factors = vec![Factor { j: 0, ms: base }];
    let last_delta = delta.last().expect("validated non-empty");
    for j in 1..=n.min(m) {
        if !last_delta.precedes_on_line(&gamma[j - 1]) {
            continue;
        }
        let side_ok = match side {
            SideCondition::None => true,
            SideCondition::Verbatim => twist_of_each_other || j + 2 <= n,
        };
        if !side_ok {
            continue;
        }
        let mut segments: Vec<Segment> = Vec::with_capacity(n + m);
        segments.extend_from_slice(&delta[..n - j]);
        for i in 0..j {
            let d_seg = &delta[n - j + i];
            let g_seg = &gamma[i];
            let union = d_seg.union_on_line(g_seg).ok_or_else(|| {
                Error::InternalInconsistency(format!(
                    "union of {d_seg} and {g_seg} is not a segment"
                ))
            })?;
            segments.push(union);
            segments.extend(d_seg.intersection_on_line(g_seg));
        }
        segments.extend_from_slice(&gamma[j..]);
        factors.push(Factor { j: j as u32, ms: Multisegment::new(line.clone(), segments)? });
    }
    Ok(ConjecturalJh { conjectural: true, side_condition: side, factors })
}

/// The plain-union parameters of the frame, as used by the closed
/// socle/cosocle description: the two Speh rows at twists ∓k/2.
pub fn frame_rows(n: u32, d: u32, k: u32, line: &Line) -> (Multisegment, Multisegment) {
    let half_k = HalfExp::half(k as i64);
    (speh(n, d, -half_k, line), speh(n, d, half_k, line))
}
