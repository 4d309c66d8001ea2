//! Independent small-rank re-derivation of the composition factors of a
//! frame's product, used to cross-examine the closed-form series. Nothing
//! here touches the interpolation formulas r_j or the theorems' index
//! ranges; the ingredients are only:
//!
//! - segment theory and the reduction ordering (candidates live in the
//!   downward closure of the plain union);
//! - the end-multiset and symmetry constraints satisfied by any factor;
//! - the highest-derivative recursion in the width d: a full-cardinality
//!   candidate is a factor exactly when shortening every end lands in the
//!   (twisted) factor set of the width-(d−1) problem, with the match
//!   injective and exhaustive;
//! - the involution: transport of the width-1 problem, and the closed
//!   below-full-cardinality factor built by dualizing the transposed
//!   plain union.
//!
//! Every admitted factor carries a certificate naming the step that
//! admitted it.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Mutex;

use serde::Serialize;

use crate::composition::compose_zelevinsky;
use crate::error::{Error, Result};
use crate::involution::mw_dual;
use crate::line::{HalfExp, Line};
use crate::multisegment::{CuspSupport, Multisegment, DEFAULT_CLOSURE_CAP};
use crate::segment::Segment;
use crate::speh::SpehPairParams;

/// Tunable limits for the oracle's candidate search.
#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    /// Hard cap on the number of nodes explored in one downward closure.
    pub max_closure_nodes: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { max_closure_nodes: DEFAULT_CLOSURE_CAP }
    }
}

/// Which step admitted a factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "origin", rename_all = "snake_case")]
pub enum FactorOrigin {
    /// Parameters outside the reducible band: the plain union is the only
    /// factor.
    BaseIrreducible,
    /// Two single segments: the classical product rule.
    SegmentProduct,
    /// Involution image of the factor set of the transposed parameters.
    InvolutionTransport { n: u32, d: u32, k: u32 },
    /// Full-cardinality candidate whose end-shortening matched a factor
    /// of the width-(d−1) problem.
    DerivativeMatch { matched: Multisegment },
    /// The closed dual construction for the one below-full-cardinality
    /// factor.
    ShortFactor,
}

/// One admitted factor with its provenance inside the oracle run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorCertificate {
    pub ms: Multisegment,
    #[serde(flatten)]
    pub origin: FactorOrigin,
}

/// The oracle's answer for one parameter triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub factors: BTreeSet<Multisegment>,
    pub certificates: Vec<FactorCertificate>,
}

/// Memo cache shared by recursive calls and by sweep workers.
#[derive(Default)]
pub struct OracleCache {
    map: Mutex<HashMap<(u32, u32, u32), OracleResult>>,
}

impl OracleCache {
    pub fn new() -> Self {
        Self::default()
    }
}

/// Factors of the product of two single segments: the pair itself, plus —
/// when the segments are linked — their union and (if non-empty)
/// intersection.
pub fn segment_product(s1: &Segment, s2: &Segment) -> Result<BTreeSet<Multisegment>> {
    let pair = Multisegment::new(s1.line().clone(), vec![s1.clone(), s2.clone()])?;
    let mut out = BTreeSet::new();
    if s1.linked(s2)? {
        let mut merged = vec![s1.union_on_line(s2).expect("linked segments have a union")];
        merged.extend(s1.intersection_on_line(s2));
        out.insert(Multisegment::new(s1.line().clone(), merged)?);
    }
    out.insert(pair);
    Ok(out)
}

/// The forced multiset of segment ends of any factor of the frame's
/// product with `cb` segments: all ends of the Γ row plus the ends of the
/// first cb−n segments of the Δ row. Defined for n ≤ cb ≤ 2n.
pub fn end_multiset_constraint(p: &SpehPairParams, cb: usize) -> Result<CuspSupport> {
    let n = p.n() as usize;
    if cb < n || cb > 2 * n {
        return Err(Error::OutOfRange(format!(
            "factor cardinality must lie in [{n}, {}], got {cb}",
            2 * n
        )));
    }
    let mut ends: Vec<HalfExp> = p.gamma().iter().map(Segment::end).collect();
    ends.extend(p.delta()[..cb - n].iter().map(Segment::end));
    Ok(CuspSupport::new(p.line().clone(), ends))
}

/// Whether the multiset of ends of `b`, reflected through exponent
/// negation, equals the multiset of beginnings of `b`. Factors of a
/// centered frame product must satisfy this.
pub fn symmetry_constraint(b: &Multisegment) -> bool {
    b.ends().hermitian_dual() == b.beginnings()
}

/// The closed construction of the unique below-full-cardinality factor,
/// defined exactly for d ≤ k ≤ n+d−1: dualize the transposed plain union.
pub fn short_factor(p: &SpehPairParams) -> Option<Multisegment> {
    let (n, d, k) = (p.n() as i64, p.d() as i64, p.k() as i64);
    if !(d <= k && k <= n + d - 1) {
        return None;
    }
    let dual_sum = mw_dual(&p.left_factor())
        .msum(&mw_dual(&p.right_factor()))
        .expect("one line");
    Some(mw_dual(&dual_sum))
}

/// Downward closure of `a` under elementary reductions, pruned below
/// `min_len` segments (reductions never increase the segment count, so
/// nothing below the floor can lead back above it).
fn bounded_closure(a: &Multisegment, min_len: usize, cap: usize) -> Result<BTreeSet<Multisegment>> {
    let mut seen: BTreeSet<Multisegment> = BTreeSet::new();
    let mut queue: VecDeque<Multisegment> = VecDeque::new();
    seen.insert(a.clone());
    queue.push_back(a.clone());
    while let Some(x) = queue.pop_front() {
        for y in x.elementary_reductions() {
            if y.len() < min_len {
                continue;
            }
            if seen.contains(&y) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::ClosureTooLarge { cap });
            }
            seen.insert(y.clone());
            queue.push_back(y);
        }
    }
    Ok(seen)
}

/// The oracle: factor set of the frame product for (n, d, k), derived
/// without the interpolation formulas. See the module text for the steps.
pub fn oracle_composition(
    n: u32,
    d: u32,
    k: u32,
    line: &Line,
    opts: &OracleOptions,
    cache: &OracleCache,
) -> Result<OracleResult> {
    if let Some(hit) = cache.map.lock().expect("cache lock").get(&(n, d, k)) {
        return Ok(hit.clone());
    }
    let result = compute_oracle(n, d, k, line, opts, cache)?;
    cache
        .map
        .lock()
        .expect("cache lock")
        .insert((n, d, k), result.clone());
    Ok(result)
}

fn compute_oracle(
    n: u32,
    d: u32,
    k: u32,
    line: &Line,
    opts: &OracleOptions,
    cache: &OracleCache,
) -> Result<OracleResult> {
    let p = SpehPairParams::new(n, d, k, line);
    let base = p.base();

    // Outside the reducible band the product is a single factor.
    if k == 0 || k >= n + d {
        return Ok(assemble(n, d, k, vec![(base, FactorOrigin::BaseIrreducible)]));
    }

    // Two single segments: classical rule.
    if n == 1 && d == 1 {
        let factors = segment_product(&p.delta()[0], &p.gamma()[0])?;
        return Ok(assemble(
            n,
            d,
            k,
            factors.into_iter().map(|ms| (ms, FactorOrigin::SegmentProduct)).collect(),
        ));
    }

    // Width 1, several segments: transport the transposed problem through
    // the involution. The recursion terminates because the transposed
    // width n strictly decreases at each later step.
    if d == 1 {
        let transposed = oracle_composition(1, n, k, line, opts, cache)?;
        let factors: Vec<(Multisegment, FactorOrigin)> = transposed
            .factors
            .iter()
            .map(|f| (mw_dual(f), FactorOrigin::InvolutionTransport { n: 1, d: n, k }))
            .collect();
        return Ok(assemble(n, d, k, factors));
    }

    // Width ≥ 2: recurse in the width, then reconstruct the
    // full-cardinality factors from their highest derivatives.
    let narrower = oracle_composition(n, d - 1, k, line, opts, cache)?;
    let target: BTreeSet<Multisegment> = narrower
        .factors
        .iter()
        .map(|f| f.twist(-HalfExp::half(1)))
        .collect();

    let full = 2 * n as usize;
    let closure = bounded_closure(&base, n as usize, opts.max_closure_nodes)?;
    let mut admitted: Vec<(Multisegment, FactorOrigin)> = Vec::new();
    let mut matched_set: BTreeSet<Multisegment> = BTreeSet::new();
    for b in &closure {
        if b.len() != full || !candidate_passes(&p, b)? {
            continue;
        }
        let shortened = b.minus_ends();
        if !target.contains(&shortened) {
            continue;
        }
        if !matched_set.insert(shortened.clone()) {
            return Err(Error::InternalInconsistency(format!(
                "two full-cardinality candidates shorten to {shortened} at (n,d,k)=({n},{d},{k})"
            )));
        }
        admitted.push((b.clone(), FactorOrigin::DerivativeMatch { matched: shortened }));
    }
    if matched_set.len() != target.len() {
        return Err(Error::InternalInconsistency(format!(
            "reconstructed {} of {} narrower factors at (n,d,k)=({n},{d},{k})",
            matched_set.len(),
            target.len()
        )));
    }
    if let Some(short) = short_factor(&p) {
        admitted.push((short, FactorOrigin::ShortFactor));
    }
    Ok(assemble(n, d, k, admitted))
}

/// Cardinality-range, end-multiset, and symmetry filters of any factor
/// candidate.
fn candidate_passes(p: &SpehPairParams, b: &Multisegment) -> Result<bool> {
    let cb = b.len();
    if cb < p.n() as usize || cb > 2 * p.n() as usize {
        return Ok(false);
    }
    Ok(b.ends() == end_multiset_constraint(p, cb)? && symmetry_constraint(b))
}

fn assemble(n: u32, d: u32, k: u32, admitted: Vec<(Multisegment, FactorOrigin)>) -> OracleResult {
    let mut factors = BTreeSet::new();
    let mut certificates = Vec::with_capacity(admitted.len());
    for (ms, origin) in admitted {
        factors.insert(ms.clone());
        certificates.push(FactorCertificate { ms, origin });
    }
    certificates.sort_by(|a, b| a.ms.cmp(&b.ms));
    OracleResult { n, d, k, factors, certificates }
}

/// Outcome of one sweep cell: did the oracle and the closed-form series
/// produce the same factor set?
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellOutcome {
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub agree: bool,
    pub oracle_count: usize,
    pub theorem_count: usize,
    /// Factors the closed form has and the oracle lacks.
    pub missing: Vec<Multisegment>,
    /// Factors the oracle produced beyond the closed form.
    pub extra: Vec<Multisegment>,
}

/// Compare the oracle with the closed-form series on one triple.
pub fn check_cell(
    n: u32,
    d: u32,
    k: u32,
    line: &Line,
    opts: &OracleOptions,
    cache: &OracleCache,
) -> Result<CellOutcome> {
    let oracle = oracle_composition(n, d, k, line, opts, cache)?;
    let report = compose_zelevinsky(n, d, k, crate::composition::Sign::Plus, line);
    let theorem: BTreeSet<Multisegment> = report.factors.iter().map(|f| f.ms.clone()).collect();
    let missing: Vec<Multisegment> = theorem.difference(&oracle.factors).cloned().collect();
    let extra: Vec<Multisegment> = oracle.factors.difference(&theorem).cloned().collect();
    Ok(CellOutcome {
        n,
        d,
        k,
        agree: missing.is_empty() && extra.is_empty(),
        oracle_count: oracle.factors.len(),
        theorem_count: theorem.len(),
        missing,
        extra,
    })
}

/// Run [`check_cell`] over 1 ≤ n ≤ nmax, 1 ≤ d ≤ dmax and
/// 0 ≤ k ≤ kmax (default n+d+1 per cell), optionally on several threads.
/// The outcome list is sorted by (n, d, k) and does not depend on `jobs`.
pub fn agreement_sweep(
    nmax: u32,
    dmax: u32,
    kmax: Option<u32>,
    jobs: usize,
    line: &Line,
    opts: &OracleOptions,
) -> Result<Vec<CellOutcome>> {
    let mut cells: Vec<(u32, u32, u32)> = Vec::new();
    for n in 1..=nmax {
        for d in 1..=dmax {
            let cap = kmax.unwrap_or(n + d + 1);
            for k in 0..=cap {
                cells.push((n, d, k));
            }
        }
    }
    let cache = OracleCache::new();
    let jobs = jobs.max(1).min(cells.len().max(1));
    let mut outcomes: Vec<Result<CellOutcome>> = Vec::with_capacity(cells.len());
    if jobs == 1 {
        for &(n, d, k) in &cells {
            outcomes.push(check_cell(n, d, k, line, opts, &cache));
        }
    } else {
        let slots: Mutex<Vec<Option<Result<CellOutcome>>>> =
            Mutex::new((0..cells.len()).map(|_| None).collect());
        std::thread::scope(|scope| {
            for worker in 0..jobs {
                let cells = &cells;
                let cache = &cache;
                let slots = &slots;
                scope.spawn(move || {
                    for (idx, &(n, d, k)) in cells.iter().enumerate() {
                        if idx % jobs != worker {
                            continue;
                        }
                        let outcome = check_cell(n, d, k, line, opts, cache);
                        slots.lock().expect("slot lock")[idx] = Some(outcome);
                    }
                });
            }
        });
        outcomes.extend(
            slots
                .into_inner()
                .expect("slot lock")
                .into_iter()
                .map(|slot| slot.expect("every cell visited")),
        );
    }
    let mut done = Vec::with_capacity(outcomes.len());
    for outcome in outcomes {
        done.push(outcome?);
    }
    done.sort_by_key(|c| (c.n, c.d, c.k));
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Sign;
    use crate::test_util::{hms, ms};

    fn line() -> Line {
        Line::default()
    }

    fn run(n: u32, d: u32, k: u32) -> OracleResult {
        oracle_composition(n, d, k, &line(), &OracleOptions::default(), &OracleCache::new())
            .unwrap()
    }

    #[test]
    fn products_of_single_segments() {
        let a = segment_product(
            &Segment::new(line(), HalfExp::half(-1), HalfExp::half(-1)).unwrap(),
            &Segment::new(line(), HalfExp::half(1), HalfExp::half(1)).unwrap(),
        )
        .unwrap();
        assert_eq!(
            a,
            BTreeSet::from([hms(&[(-1, 1)]), hms(&[(-1, -1), (1, 1)])])
        );

        let b = segment_product(
            &Segment::new(line(), HalfExp::ZERO, HalfExp::int(1)).unwrap(),
            &Segment::new(line(), HalfExp::ZERO, HalfExp::int(1)).unwrap(),
        )
        .unwrap();
        assert_eq!(b, BTreeSet::from([ms(&[(0, 1), (0, 1)])]));

        let c = segment_product(
            &Segment::new(line(), HalfExp::int(-1), HalfExp::ZERO).unwrap(),
            &Segment::new(line(), HalfExp::ZERO, HalfExp::int(1)).unwrap(),
        )
        .unwrap();
        assert_eq!(
            c,
            BTreeSet::from([ms(&[(-1, 0), (0, 1)]), ms(&[(-1, 1), (0, 0)])])
        );
    }

    #[test]
    fn end_constraints() {
        let p = SpehPairParams::new(1, 1, 1, &line());
        let two = end_multiset_constraint(&p, 2).unwrap();
        assert_eq!(two.exponents(), &[HalfExp::half(-1), HalfExp::half(1)]);
        let one = end_multiset_constraint(&p, 1).unwrap();
        assert_eq!(one.exponents(), &[HalfExp::half(1)]);
        assert!(matches!(end_multiset_constraint(&p, 0), Err(Error::OutOfRange(_))));
        assert!(matches!(end_multiset_constraint(&p, 3), Err(Error::OutOfRange(_))));

        // (2,2,2): Γ ends {1, 2} always; the third slot takes the end of Δ1.
        let p = SpehPairParams::new(2, 2, 2, &line());
        let three = end_multiset_constraint(&p, 3).unwrap();
        assert_eq!(
            three.exponents(),
            &[HalfExp::int(-1), HalfExp::int(1), HalfExp::int(2)]
        );
    }

    #[test]
    fn symmetry_filter() {
        assert!(symmetry_constraint(&hms(&[(-1, 1)])));
        assert!(symmetry_constraint(&hms(&[(-1, -1), (1, 1)])));
        assert!(!symmetry_constraint(&ms(&[(0, 1)])));
    }

    #[test]
    fn short_factors() {
        let got = short_factor(&SpehPairParams::new(1, 1, 1, &line()));
        assert_eq!(got, Some(hms(&[(-1, 1)])));
        assert_eq!(short_factor(&SpehPairParams::new(2, 2, 1, &line())), None);
        assert_eq!(
            short_factor(&SpehPairParams::new(2, 1, 1, &line())),
            Some(ms(&[(-1, 0), (0, 1)]))
        );
        // Outside the reducible band there is no such factor either.
        assert_eq!(short_factor(&SpehPairParams::new(2, 2, 4, &line())), None);
    }

    #[test]
    fn short_factor_matches_explicit_union_block() {
        // Independent route: the below-full-cardinality factor written
        // directly as (Δ_1,…,Δ_{n−l}, Δ_{n−l+i} ∪ Γ_i for i=1..l,
        // Γ_{l+1},…,Γ_n), where l is the largest index with Δ_n ∪ Γ_l a
        // segment.
        for n in 1..=4u32 {
            for d in 1..=4u32 {
                for k in d..=(n + d - 1) {
                    let p = SpehPairParams::new(n, d, k, &line());
                    let last_delta = p.delta().last().unwrap();
                    let l = (1..=n as usize)
                        .filter(|&i| last_delta.union_on_line(&p.gamma()[i - 1]).is_some())
                        .max()
                        .expect("k <= n+d-1 admits at least one union");
                    let n = n as usize;
                    let mut segs: Vec<Segment> = p.delta()[..n - l].to_vec();
                    for i in 0..l {
                        segs.push(
                            p.delta()[n - l + i]
                                .union_on_line(&p.gamma()[i])
                                .expect("within the union range"),
                        );
                    }
                    segs.extend_from_slice(&p.gamma()[l..]);
                    let explicit = Multisegment::new(line(), segs).unwrap();
                    assert_eq!(
                        short_factor(&p),
                        Some(explicit),
                        "(n,d,k)=({},{d},{k})",
                        p.n()
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_base_cases() {
        let r = run(1, 1, 1);
        assert_eq!(
            r.factors,
            BTreeSet::from([hms(&[(-1, 1)]), hms(&[(-1, -1), (1, 1)])])
        );

        for (n, d) in [(1, 1), (2, 2), (3, 2)] {
            let r = run(n, d, 0);
            assert_eq!(r.factors.len(), 1);
            assert_eq!(r.certificates[0].origin, FactorOrigin::BaseIrreducible);
            let r = run(n, d, n + d);
            assert_eq!(r.factors.len(), 1);
        }
    }

    #[test]
    fn oracle_narrow_frames() {
        // (1,2,1): both factors reconstructed from the width-1 problem.
        let r = run(1, 2, 1);
        assert_eq!(
            r.factors,
            BTreeSet::from([ms(&[(-1, 0), (0, 1)]), ms(&[(-1, 1), (0, 0)])])
        );
        assert!(r
            .certificates
            .iter()
            .all(|c| matches!(c.origin, FactorOrigin::DerivativeMatch { .. })));

        // (1,2,2): one reconstruction plus the short factor.
        let r = run(1, 2, 2);
        assert_eq!(
            r.factors,
            BTreeSet::from([hms(&[(-3, 3)]), hms(&[(-3, -1), (1, 3)])])
        );
        assert!(r
            .certificates
            .iter()
            .any(|c| matches!(c.origin, FactorOrigin::ShortFactor)));
    }

    #[test]
    fn oracle_transports_width_one() {
        let r = run(2, 1, 1);
        assert_eq!(
            r.factors,
            BTreeSet::from([
                ms(&[(-1, 0), (0, 1)]),
                ms(&[(-1, -1), (0, 0), (0, 0), (1, 1)]),
            ])
        );
        assert!(r
            .certificates
            .iter()
            .all(|c| c.origin == FactorOrigin::InvolutionTransport { n: 1, d: 2, k: 1 }));
    }

    #[test]
    fn oracle_square_frame() {
        let r = run(2, 2, 2);
        assert_eq!(r.factors.len(), 3);
        assert!(r.factors.contains(&ms(&[(-2, 1), (-1, 2)])));
        assert!(r.factors.contains(&ms(&[(-2, -1), (-1, 1), (0, 0), (1, 2)])));
        assert!(r.factors.contains(&ms(&[(-2, -1), (-1, 0), (0, 1), (1, 2)])));
    }

    #[test]
    fn oracle_agrees_with_series_on_small_grid() {
        let cache = OracleCache::new();
        for n in 1..=3u32 {
            for d in 1..=3u32 {
                for k in 0..=(n + d + 1) {
                    let cell =
                        check_cell(n, d, k, &line(), &OracleOptions::default(), &cache).unwrap();
                    assert!(
                        cell.agree,
                        "(n,d,k)=({n},{d},{k}): missing {:?}, extra {:?}",
                        cell.missing, cell.extra
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_factors_sit_below_the_plain_union() {
        let cache = OracleCache::new();
        for (n, d, k) in [(2, 2, 1), (2, 2, 2), (1, 3, 2), (3, 2, 3)] {
            let r =
                oracle_composition(n, d, k, &line(), &OracleOptions::default(), &cache).unwrap();
            let base = SpehPairParams::new(n, d, k, &line()).base();
            for f in &r.factors {
                assert!(crate::multisegment::leq(f, &base), "{f} above the union");
                assert_eq!(f.supp(), base.supp());
            }
        }
    }

    #[test]
    fn below_full_cardinality_factor_is_unique() {
        // Width-1 disjoint-beginnings frames: among all candidates passing
        // the end and symmetry filters with fewer than 2n segments, exactly
        // one exists, and it is the closed short factor. This pins the
        // uniqueness that the width-1 fallback would rely on.
        for n in 2..=4u32 {
            let k = n;
            let p = SpehPairParams::new(n, 1, k, &line());
            let closure =
                bounded_closure(&p.base(), n as usize, DEFAULT_CLOSURE_CAP).unwrap();
            let short: Vec<Multisegment> = closure
                .into_iter()
                .filter(|b| b.len() < 2 * n as usize && candidate_passes(&p, b).unwrap())
                .collect();
            assert_eq!(short.len(), 1, "n={n}");
            assert_eq!(Some(short[0].clone()), short_factor(&p));
        }
    }

    #[test]
    fn tight_closure_cap_reports_overflow() {
        let opts = OracleOptions { max_closure_nodes: 2 };
        let err = oracle_composition(2, 2, 2, &line(), &opts, &OracleCache::new()).unwrap_err();
        assert!(matches!(err, Error::ClosureTooLarge { cap: 2 }));
    }

    #[test]
    fn sweep_is_deterministic_across_job_counts() {
        let opts = OracleOptions::default();
        let one = agreement_sweep(2, 2, None, 1, &line(), &opts).unwrap();
        let four = agreement_sweep(2, 2, None, 4, &line(), &opts).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.len(), 20);
        assert!(one.iter().all(|c| c.agree));
    }

    #[test]
    fn certificates_serialize_with_tags() {
        let r = run(1, 2, 2);
        let v = serde_json::to_value(&r).unwrap();
        let origins: Vec<&str> = v["certificates"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["origin"].as_str().unwrap())
            .collect();
        assert!(origins.contains(&"short_factor"));
        assert!(origins.contains(&"derivative_match"));
        assert_eq!(v["factors"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn cross_checks_against_langlands_route() {
        // The oracle set equals the involution image of the transposed
        // frame's series — one more independent route.
        let cache = OracleCache::new();
        for (n, d, k) in [(2, 2, 2), (2, 3, 2), (3, 2, 4), (2, 2, 1)] {
            let r =
                oracle_composition(n, d, k, &line(), &OracleOptions::default(), &cache).unwrap();
            let transported: BTreeSet<Multisegment> =
                compose_zelevinsky(d, n, k, Sign::Plus, &line())
                    .factors
                    .iter()
                    .map(|f| mw_dual(&f.ms))
                    .collect();
            assert_eq!(r.factors, transported, "(n,d,k)=({n},{d},{k})");
        }
    }
}
