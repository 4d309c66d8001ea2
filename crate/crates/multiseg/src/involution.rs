//! The Zelevinsky involution a ↦ a^t, computed by the Mœglin–Waldspurger
//! algorithm.
//!
//! One round of the right-hand algorithm: let x be the maximal end exponent
//! occurring in a. Choose a segment ending at x of minimal cardinality, then
//! repeatedly — among the segments ending at x−1, x−2, … — choose one linked
//! with the previously chosen segment, again of minimal cardinality, as long
//! as possible. If k segments were chosen, emit Γ = [x−k+1, x], shorten every
//! chosen segment by its end (dropping emptied ones), and recurse on the
//! rest. The emitted Γ's assemble the dual multisegment.
//!
//! The left-hand version is realized as conjugation by the exponent flip:
//! negate, run the right-hand algorithm, negate back. Both versions compute
//! the same involution; the test suite enforces the agreement rather than
//! assuming it.

use serde::Serialize;

use crate::line::HalfExp;
use crate::multisegment::Multisegment;
use crate::segment::Segment;

/// One round of the algorithm: the emitted segment and the shortened
/// multisegment the next round starts from.
#[derive(Clone, Debug, Serialize)]
pub struct MwRound {
    /// The segment Γ emitted by this round.
    pub emitted: Segment,
    /// The working multisegment after shortening the chosen segments.
    pub state: Multisegment,
}

/// A full run: input, per-round steps, and the assembled dual.
#[derive(Clone, Debug, Serialize)]
pub struct MwTrace {
    pub input: Multisegment,
    pub rounds: Vec<MwRound>,
    pub result: Multisegment,
}

/// The dual multisegment a^t (right-hand algorithm).
pub fn mw_dual(a: &Multisegment) -> Multisegment {
    mw_dual_with_trace(a).result
}

/// As [`mw_dual`], keeping the per-round trace. The recursion is driven
/// iteratively so the intermediate states are available for inspection.
pub fn mw_dual_with_trace(a: &Multisegment) -> MwTrace {
    let mut work: Vec<Segment> = a.segments().to_vec();
    let mut rounds: Vec<MwRound> = Vec::new();
    let mut emitted: Vec<Segment> = Vec::new();

    while !work.is_empty() {
        // Start of a round: the maximal end exponent and the shortest
        // segment ending there. On one line "minimal cardinality among a
        // fixed end" determines the segment, so picking the first such
        // index just consumes one unit of its multiplicity.
        let x = work.iter().map(Segment::end).max().expect("non-empty");
        let mut chosen: Vec<usize> = Vec::new();
        let first = best_index(&work, &chosen, x, |_| true).expect("some segment ends at x");
        chosen.push(first);

        // Walk down through consecutive ends while a linked segment exists.
        let mut cur_end = x - 1;
        loop {
            let prev = work[*chosen.last().expect("non-empty")].clone();
            let next = best_index(&work, &chosen, cur_end, |s| s.linked_on_line(&prev));
            match next {
                Some(idx) => {
                    chosen.push(idx);
                    cur_end = cur_end - 1;
                }
                None => break,
            }
        }

        let gamma_begin = x - (chosen.len() as i64 - 1);
        let gamma = Segment::new(a.line().clone(), gamma_begin, x)
            .expect("consecutive ends make a segment");
        emitted.push(gamma.clone());

        // Shorten every chosen segment by its end; drop emptied singletons.
        let mut next_work: Vec<Segment> = Vec::with_capacity(work.len());
        for (idx, seg) in work.iter().enumerate() {
            if chosen.contains(&idx) {
                next_work.extend(seg.minus_end());
            } else {
                next_work.push(seg.clone());
            }
        }
        next_work.sort_unstable();
        work = next_work;

        let state = Multisegment::new(a.line().clone(), work.clone())
            .expect("same line throughout");
        rounds.push(MwRound { emitted: gamma, state });
    }

    let result =
        Multisegment::new(a.line().clone(), emitted).expect("emitted segments share the line");
    MwTrace { input: a.clone(), rounds, result }
}

/// Among the not-yet-chosen segments ending exactly at `end` and passing
/// `admissible`, the index of one of minimal cardinality.
fn best_index(
    work: &[Segment],
    chosen: &[usize],
    end: HalfExp,
    admissible: impl Fn(&Segment) -> bool,
) -> Option<usize> {
    work.iter()
        .enumerate()
        .filter(|(idx, s)| !chosen.contains(idx) && s.end() == end && admissible(s))
        .min_by_key(|(_, s)| s.card())
        .map(|(idx, _)| idx)
}

/// The dual multisegment computed by the left-hand algorithm: conjugate the
/// right-hand run by exponent negation.
pub fn mw_dual_left(a: &Multisegment) -> Multisegment {
    mw_dual_left_with_trace(a).result
}

/// Trace of the left-hand run, reported in the original coordinates (every
/// emitted segment and state is conjugated back).
pub fn mw_dual_left_with_trace(a: &Multisegment) -> MwTrace {
    let conjugated = mw_dual_with_trace(&a.hermitian_dual());
    MwTrace {
        input: a.clone(),
        rounds: conjugated
            .rounds
            .into_iter()
            .map(|r| MwRound { emitted: r.emitted.hermitian_dual(), state: r.state.hermitian_dual() })
            .collect(),
        result: conjugated.result.hermitian_dual(),
    }
}
