//! Multisegments: finite multisets of segments on one line.
//!
//! Provides:
//! - [`Multisegment`] with a canonical sorted form (multiset semantics);
//! - multiset sum, twists, Hermitian dual / contragredient;
//! - the Speh multisegment builder [`speh`];
//! - cuspidal supports, beginnings and ends ([`CuspSupport`]);
//! - elementary coarsening moves, the generated partial order [`leq`], and
//!   its breadth-first downward closure [`down_closure`].
//!
//! The coarsening move replaces a linked pair (Δ_i, Δ_j) by
//! (Δ_i ∪ Δ_j, Δ_i ∩ Δ_j), dropping an empty intersection; the order it
//! generates controls which parameters can appear in a product's
//! decomposition, which is what the closure is used for downstream.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::line::{require_same_line, CuspidalPoint, HalfExp, Line};
use crate::segment::Segment;

/// Default node cap for [`down_closure`] and the order BFS.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// A finite multiset of segments on one cuspidal line, kept in canonical
/// sorted order (by (begin, end), duplicates adjacent).
///
/// The empty multisegment still carries a line label so it can serialize,
/// but it compares, hashes and sorts as THE empty multisegment regardless of
/// label: it is the identity for [`Multisegment::msum`] on any line.
#[derive(Clone)]
pub struct Multisegment {
    line: Line,
    segments: Vec<Segment>,
}

impl Multisegment {
    /// The empty multisegment on `line`.
    pub fn empty(line: Line) -> Multisegment {
        Multisegment { line, segments: Vec::new() }
    }

    /// Canonicalizing constructor; every segment must live on `line`.
    pub fn new(line: Line, mut segments: Vec<Segment>) -> Result<Multisegment> {
        for s in &segments {
            require_same_line(&line, s.line())?;
        }
        segments.sort_unstable();
        Ok(Multisegment { line, segments })
    }

    /// Build from a non-empty list of segments, taking the line from the
    /// first one.
    pub fn from_segments(segments: Vec<Segment>) -> Result<Multisegment> {
        let line = segments
            .first()
            .ok_or_else(|| Error::Parse("from_segments needs at least one segment".into()))?
            .line()
            .clone();
        Multisegment::new(line, segments)
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    /// Segments in canonical order.
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Number of segments (the quantity written c(b) for factor candidates).
    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Multiset sum. The empty multisegment is a two-sided identity even
    /// across line labels; otherwise the lines must agree.
    pub fn msum(&self, other: &Multisegment) -> Result<Multisegment> {
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        require_same_line(&self.line, &other.line)?;
        let mut segments = self.segments.clone();
        segments.extend(other.segments.iter().cloned());
        Multisegment::new(self.line.clone(), segments)
    }

    /// Apply Δ ↦ Δ⁻ to every segment, dropping emptied singletons.
    pub fn minus_ends(&self) -> Multisegment {
        let segments = self.segments.iter().filter_map(Segment::minus_end).collect();
        Multisegment { line: self.line.clone(), segments }
    }

    /// Apply Δ ↦ ⁻Δ to every segment, dropping emptied singletons.
    pub fn minus_begins(&self) -> Multisegment {
        let mut segments: Vec<Segment> =
            self.segments.iter().filter_map(Segment::minus_begin).collect();
        segments.sort_unstable();
        Multisegment { line: self.line.clone(), segments }
    }

    /// Multiset of all points of all segments.
    pub fn supp(&self) -> CuspSupport {
        let exps = self.segments.iter().flat_map(Segment::exponents).collect();
        CuspSupport::new(self.line.clone(), exps)
    }

    /// Multiset of beginning exponents.
    pub fn beginnings(&self) -> CuspSupport {
        CuspSupport::new(self.line.clone(), self.segments.iter().map(Segment::begin).collect())
    }

    /// Multiset of end exponents.
    pub fn ends(&self) -> CuspSupport {
        CuspSupport::new(self.line.clone(), self.segments.iter().map(Segment::end).collect())
    }

    /// All multisegments obtained by one coarsening move: replace a linked
    /// pair by (union, intersection), dropping an empty intersection.
    /// Deduplicated, canonically ordered.
    pub fn elementary_reductions(&self) -> Vec<Multisegment> {
        let mut out = BTreeSet::new();
        for i in 0..self.segments.len() {
            for j in (i + 1)..self.segments.len() {
                let (si, sj) = (&self.segments[i], &self.segments[j]);
                if !si.linked_on_line(sj) {
                    continue;
                }
                let mut segments = Vec::with_capacity(self.segments.len());
                segments.extend(
                    self.segments
                        .iter()
                        .enumerate()
                        .filter(|(pos, _)| *pos != i && *pos != j)
                        .map(|(_, s)| s.clone()),
                );
                segments.push(si.union_on_line(sj).expect("linked pairs have a union"));
                segments.extend(si.intersection_on_line(sj));
                segments.sort_unstable();
                out.insert(Multisegment { line: self.line.clone(), segments });
            }
        }
        out.into_iter().collect()
    }

    /// Hermitian dual on a centered line: every segment [b, e] ↦ [−e, −b].
    pub fn hermitian_dual(&self) -> Multisegment {
        let mut segments: Vec<Segment> =
            self.segments.iter().map(Segment::hermitian_dual).collect();
        segments.sort_unstable();
        Multisegment { line: self.line.clone(), segments }
    }

    /// Contragredient. On a centered line with a unitarizable label this is
    /// the same exponent negation as [`Multisegment::hermitian_dual`]; kept
    /// as its own entry point because the two notions differ off-center.
    pub fn contragredient(&self) -> Multisegment {
        self.hermitian_dual()
    }

    /// ν^z: twist every segment by z.
    pub fn twist(&self, z: HalfExp) -> Multisegment {
        let segments = self.segments.iter().map(|s| s.twist(z)).collect();
        Multisegment { line: self.line.clone(), segments }
    }

}

impl PartialEq for Multisegment {
    fn eq(&self, other: &Multisegment) -> bool {
        if self.is_empty() && other.is_empty() {
            return true;
        }
        self.line == other.line && self.segments == other.segments
    }
}

impl Eq for Multisegment {}

impl PartialOrd for Multisegment {
    fn partial_cmp(&self, other: &Multisegment) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multisegment {
    fn cmp(&self, other: &Multisegment) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self.is_empty(), other.is_empty()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => (&self.line, &self.segments).cmp(&(&other.line, &other.segments)),
        }
    }
}

impl Hash for Multisegment {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_usize(self.segments.len());
        if !self.segments.is_empty() {
            self.line.hash(state);
            for s in &self.segments {
                (s.begin().twice(), s.end().twice()).hash(state);
            }
        }
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}@{}", self.line)
    }
}

/// The Speh multisegment a(n,d) twisted to `center`: n segments of
/// cardinality d, the i-th (i = 1..n) being
/// [center − (d−1)/2 − (n−1)/2 + (i−1), center + (d−1)/2 − (n−1)/2 + (i−1)].
///
/// It is a ladder and each segment precedes the next.
pub fn speh(n: u32, d: u32, center: HalfExp, line: &Line) -> Multisegment {
    assert!(n >= 1 && d >= 1, "speh(n, d) needs n, d >= 1");
    let first_begin = center - HalfExp::half(i64::from(d) - 1) - HalfExp::half(i64::from(n) - 1);
    let segments = (0..i64::from(n))
        .map(|i| {
            let b = first_begin + i;
            Segment::new(line.clone(), b, b + (i64::from(d) - 1))
                .expect("Speh segments have integral non-negative length")
        })
        .collect();
    Multisegment { line: line.clone(), segments }
}

/// b ≤ a in the order generated by coarsening moves (true includes b = a).
///
/// Breadth-first search from `a` with memoized canonical forms and an early
/// exit; the support fast path rejects almost everything cheap.
pub fn leq(b: &Multisegment, a: &Multisegment) -> bool {
    if b == a {
        return true;
    }
    if b.supp() != a.supp() || b.len() > a.len() {
        return false;
    }
    let mut seen: HashSet<Multisegment> = HashSet::new();
    let mut queue: VecDeque<Multisegment> = VecDeque::new();
    seen.insert(a.clone());
    queue.push_back(a.clone());
    while let Some(cur) = queue.pop_front() {
        for next in cur.elementary_reductions() {
            if next == *b {
                return true;
            }
            // Moves never increase the segment count, so anything already
            // shorter than b can be pruned.
            if next.len() < b.len() || seen.contains(&next) {
                continue;
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    false
}

/// All b ≤ a, computed by BFS over canonical forms; includes `a` itself.
/// Fails with `ClosureTooLarge` when more than `cap` distinct multisegments
/// are visited.
pub fn down_closure(a: &Multisegment, cap: usize) -> Result<BTreeSet<Multisegment>> {
    let mut seen: BTreeSet<Multisegment> = BTreeSet::new();
    let mut queue: VecDeque<Multisegment> = VecDeque::new();
    seen.insert(a.clone());
    queue.push_back(a.clone());
    while let Some(cur) = queue.pop_front() {
        for next in cur.elementary_reductions() {
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::ClosureTooLarge { cap });
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(seen)
}

/// A multiset of points on one cuspidal line (kept as sorted exponents).
/// Same empty-value semantics as [`Multisegment`].
#[derive(Clone)]
pub struct CuspSupport {
    line: Line,
    exps: Vec<HalfExp>,
}

impl CuspSupport {
    pub fn new(line: Line, mut exps: Vec<HalfExp>) -> CuspSupport {
        exps.sort_unstable();
        CuspSupport { line, exps }
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    /// Exponents in increasing order, with multiplicity.
    pub fn exponents(&self) -> &[HalfExp] {
        &self.exps
    }

    pub fn card(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = CuspidalPoint> + '_ {
        self.exps.iter().map(|&e| CuspidalPoint::new(self.line.clone(), e))
    }

    /// Multiset sum; the empty support is an identity across lines.
    pub fn merge(&self, other: &CuspSupport) -> Result<CuspSupport> {
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        require_same_line(&self.line, &other.line)?;
        let mut exps = self.exps.clone();
        exps.extend(other.exps.iter().copied());
        Ok(CuspSupport::new(self.line.clone(), exps))
    }

    /// Pointwise exponent negation (Hermitian dual on a centered line).
    pub fn hermitian_dual(&self) -> CuspSupport {
        CuspSupport::new(self.line.clone(), self.exps.iter().map(|&e| -e).collect())
    }
}

impl PartialEq for CuspSupport {
    fn eq(&self, other: &CuspSupport) -> bool {
        if self.is_empty() && other.is_empty() {
            return true;
        }
        self.line == other.line && self.exps == other.exps
    }
}

impl Eq for CuspSupport {}

impl fmt::Display for CuspSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for CuspSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}@{}", self.line)
    }
}

#[derive(Serialize, Deserialize)]
struct EndpointsJson {
    b: HalfExp,
    e: HalfExp,
}

#[derive(Serialize, Deserialize)]
struct MultisegmentJson {
    line: Line,
    segments: Vec<EndpointsJson>,
}

impl Serialize for Multisegment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MultisegmentJson {
            line: self.line.clone(),
            segments: self
                .segments
                .iter()
                .map(|s| EndpointsJson { b: s.begin(), e: s.end() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multisegment {
    /// Accepts segments in any order; re-canonicalizes and validates.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MultisegmentJson::deserialize(deserializer)?;
        let segments = raw
            .segments
            .into_iter()
            .map(|p| Segment::new(raw.line.clone(), p.b, p.e))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Multisegment::new(raw.line, segments).map_err(serde::de::Error::custom)
    }
}
