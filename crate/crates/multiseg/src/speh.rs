//! The two-parameter frame behind the composition-series results: a pair
//! of Speh multisegments at opposite half-integral twists, the derived
//! segment rows Δ_i and Γ_i, the corner constants, and the interpolating
//! multisegments r_j.
//!
//! For parameters (n, d, k) the left row starts at
//! A_− = −(d−1)/2 − (n−1)/2 − k/2 and the right row is the same picture
//! shifted by k/2 − (−k/2) = k. Writing Δ_i = [A_− + (i−1), B_− + (i−1)]
//! and Γ_i = [A_+ + (i−1), B_+ + (i−1)] for i = 1..n:
//!
//! - r_0 is the disjoint union (Δ_1, …, Δ_n, Γ_1, …, Γ_n);
//! - for j with max(n−k+1, 1) ≤ j ≤ min(n−k+d, n) — exactly when Δ_n
//!   precedes Γ_j — r_j replaces each pair (Δ_{n−j+i}, Γ_i), i = 1..j, by
//!   its union and (when non-empty) intersection.
//!
//! Everything is centered around exponent 0; global twists are applied by
//! callers.

use crate::error::{Error, Result};
use crate::line::{HalfExp, Line};
use crate::multisegment::Multisegment;
use crate::segment::Segment;

/// The eight corner exponents of the frame: begin/end of the first and
/// last segment of each row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrameConstants {
    /// Begin of Δ_1.
    pub a_minus: HalfExp,
    /// End of Δ_1.
    pub b_minus: HalfExp,
    /// Begin of Δ_n.
    pub c_minus: HalfExp,
    /// End of Δ_n.
    pub d_minus: HalfExp,
    /// Begin of Γ_1.
    pub a_plus: HalfExp,
    /// End of Γ_1.
    pub b_plus: HalfExp,
    /// Begin of Γ_n.
    pub c_plus: HalfExp,
    /// End of Γ_n.
    pub d_plus: HalfExp,
}

/// Parameters (n, d, k) with the two derived segment rows.
#[derive(Clone, Debug)]
pub struct SpehPairParams {
    n: u32,
    d: u32,
    k: u32,
    line: Line,
    delta: Vec<Segment>,
    gamma: Vec<Segment>,
}

impl SpehPairParams {
    /// Build the frame. Requires n, d ≥ 1.
    pub fn new(n: u32, d: u32, k: u32, line: &Line) -> Self {
        assert!(n >= 1 && d >= 1, "frame parameters require n, d >= 1");
        let a_minus = -HalfExp::half((d as i64 - 1) + (n as i64 - 1) + k as i64);
        let b_minus = a_minus + (d as i64 - 1);
        let a_plus = a_minus + k as i64;
        let b_plus = b_minus + k as i64;
        let row = |a: HalfExp, b: HalfExp| -> Vec<Segment> {
            (0..n as i64)
                .map(|i| Segment::new(line.clone(), a + i, b + i).expect("d >= 1"))
                .collect()
        };
        SpehPairParams {
            n,
            d,
            k,
            line: line.clone(),
            delta: row(a_minus, b_minus),
            gamma: row(a_plus, b_plus),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    /// The row Δ_1, …, Δ_n (1-based callers index with care).
    pub fn delta(&self) -> &[Segment] {
        &self.delta
    }

    /// The row Γ_1, …, Γ_n.
    pub fn gamma(&self) -> &[Segment] {
        &self.gamma
    }

    /// The left Speh multisegment a_− (the Δ row).
    pub fn left_factor(&self) -> Multisegment {
        Multisegment::new(self.line.clone(), self.delta.clone()).expect("one line")
    }

    /// The right Speh multisegment a_+ (the Γ row).
    pub fn right_factor(&self) -> Multisegment {
        Multisegment::new(self.line.clone(), self.gamma.clone()).expect("one line")
    }

    /// a_− + a_+ as one multisegment (this is r_0).
    pub fn base(&self) -> Multisegment {
        self.left_factor().msum(&self.right_factor()).expect("one line")
    }

    /// The corner exponents.
    pub fn constants(&self) -> FrameConstants {
        let first = |row: &[Segment]| (row[0].begin(), row[0].end());
        let last = |row: &[Segment]| {
            let s = row.last().expect("n >= 1");
            (s.begin(), s.end())
        };
        let (a_minus, b_minus) = first(&self.delta);
        let (c_minus, d_minus) = last(&self.delta);
        let (a_plus, b_plus) = first(&self.gamma);
        let (c_plus, d_plus) = last(&self.gamma);
        FrameConstants { a_minus, b_minus, c_minus, d_minus, a_plus, b_plus, c_plus, d_plus }
    }

    /// Number of exponents where the two rows overlap, n+d−1−k. Defined in
    /// the reducible regime 1 ≤ k ≤ n+d−1 only.
    pub fn shared_exponent_count(&self) -> Result<u32> {
        let (n, d, k) = (self.n as i64, self.d as i64, self.k as i64);
        if !(1..=n + d - 1).contains(&k) {
            return Err(Error::OutOfRange(format!(
                "shared exponent count needs 1 <= k <= n+d-1, got (n,d,k) = ({n},{d},{k})"
            )));
        }
        let count = n + d - 1 - k;
        // The same number as an exponent difference across the rows:
        // D_− − A_+ + 1.
        let c = self.constants();
        debug_assert_eq!(
            c.d_minus.integer_distance(c.a_plus),
            Some(count - 1),
            "corner arithmetic disagrees with the closed count"
        );
        Ok(count as u32)
    }

    /// The indices j ≥ 1 for which r_j is defined, as an inclusive range:
    /// max(n−k+1, 1) ≤ j ≤ min(n−k+d, n). None when no such j exists
    /// (k = 0 or k ≥ n+d).
    pub fn valid_j_range(&self) -> Option<(u32, u32)> {
        let (n, d, k) = (self.n as i64, self.d as i64, self.k as i64);
        if k == 0 || k >= n + d {
            return None;
        }
        let lo = (n - k + 1).max(1);
        let hi = (n - k + d).min(n);
        if lo > hi {
            return None;
        }
        Some((lo as u32, hi as u32))
    }

    /// The multisegment r_j. Index 0 is the plain union of the rows; a
    /// positive index must lie in [`valid_j_range`].
    pub fn r_multisegment(&self, j: u32) -> Result<Multisegment> {
        if j == 0 {
            return Ok(self.base());
        }
        let in_range = self
            .valid_j_range()
            .is_some_and(|(lo, hi)| (lo..=hi).contains(&j));
        if !in_range {
            return Err(Error::InvalidIndex {
                j,
                reason: match self.valid_j_range() {
                    Some((lo, hi)) => format!("defined for j = 0 and {lo} <= j <= {hi}"),
                    None => "defined for j = 0 only".to_string(),
                },
            });
        }
        // Independent route to the same condition: the last Δ must precede
        // the j-th Γ for the pairing to make sense.
        let last_delta = self.delta.last().expect("n >= 1");
        let gamma_j = &self.gamma[(j - 1) as usize];
        if !last_delta.precedes_on_line(gamma_j) {
            return Err(Error::InternalInconsistency(format!(
                "index {j} is in range but {last_delta} does not precede {gamma_j}"
            )));
        }

        let n = self.n as usize;
        let j = j as usize;
        let mut segments: Vec<Segment> = Vec::with_capacity(2 * n);
        segments.extend_from_slice(&self.delta[..n - j]);
        for i in 0..j {
            let d_seg = &self.delta[n - j + i];
            let g_seg = &self.gamma[i];
            let union = d_seg.union_on_line(g_seg).ok_or_else(|| {
                Error::InternalInconsistency(format!(
                    "union of {d_seg} and {g_seg} is not a segment"
                ))
            })?;
            segments.push(union);
            segments.extend(d_seg.intersection_on_line(g_seg));
        }
        segments.extend_from_slice(&self.gamma[j..]);
        Multisegment::new(self.line.clone(), segments)
    }
}
