//! Exact multisegment calculus for products of two Speh representations of
//! p-adic GL(n).
//!
//! The crate computes, entirely in exact integer arithmetic:
//! - segments and multisegments on a cuspidal line, with the coarsening
//!   partial order and its breadth-first closure;
//! - the Zelevinsky involution via the Moeglin–Waldspurger algorithm (both
//!   one-sided versions);
//! - derivative operators on the Grothendieck-ring level (ladder formula,
//!   highest derivatives);
//! - the closed-form composition series, socle/cosocle, and subrepresentation
//!   lattice chains of a product of two twisted Speh representations, in both
//!   the Zelevinsky and Langlands parametrizations;
//! - an independent small-rank oracle that re-derives those composition
//!   series from first principles (segment products, order closure, end/
//!   symmetry constraints, highest-derivative reconstruction) and a sweep
//!   driver comparing the two.
//!
//! The binary `multiseg` exposes all of this as a JSON CLI.

pub mod composition;
pub mod error;
pub mod involution;
pub mod line;
pub mod multisegment;
pub mod oracle;
pub mod render;
pub mod ring;
pub mod segment;
pub mod speh;

pub use composition::{
    compose_langlands, compose_zelevinsky, conjecture_jh, frame_rows, lattice_chain,
    socle_cosocle, speh_shape, CompositionReport, ConjecturalJh, Factor, LatticeNode,
    ReportBasis, SideCondition, Sign, SpehShape,
};
pub use error::{Error, Result};
pub use involution::{mw_dual, mw_dual_left, mw_dual_left_with_trace, mw_dual_with_trace, MwRound, MwTrace};
pub use line::{CuspidalPoint, HalfExp, Line};
pub use multisegment::{down_closure, leq, speh, CuspSupport, Multisegment, DEFAULT_CLOSURE_CAP};
pub use oracle::{
    agreement_sweep, check_cell, end_multiset_constraint, oracle_composition, segment_product,
    short_factor, symmetry_constraint, CellOutcome, FactorCertificate, FactorOrigin, OracleCache,
    OracleOptions, OracleResult,
};
pub use render::{render_multisegment, render_pair};
pub use ring::{
    derivative_ladder, derivative_ladder_dual, derivative_zeta, highest_derivative,
    highest_derivative_product, is_ladder, zeta_mul, Basis, RingElement,
};
pub use segment::Segment;
pub use speh::{FrameConstants, SpehPairParams};
