//! Formal integer combinations of multisegments, tagged by basis, together
//! with the derivative operator on them.
//!
//! Two bases are carried:
//!
//! - the standard basis (`Basis::Z`), indexed by multisegments;
//! - the product basis (`Basis::Zeta`), where the element indexed by a is
//!   the product of the elements indexed by its single segments.
//!
//! Multiplication is implemented only where it is combinatorially exact:
//! in the product basis (key-wise sum of multisegments, bilinearly
//! extended), and through the closed derivative formulas below. A general
//! change of basis is intentionally out of scope.
//!
//! The derivative of a standard-basis generator is expanded only for
//! ladders (no segment contained in another). A ladder splits into maximal
//! runs of consecutively preceding segments; runs on different exponent
//! cosets or separated by a gap never interact, so the derivative is the
//! product of the per-run expansions. For one run Δ1 → … → Δm the expansion
//! has m+1 summands, the i-th shortening the ends of the first i segments
//! (dropping emptied ones); the mirrored operator shortens beginnings from
//! the last segment backwards.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::line::Line;
use crate::multisegment::Multisegment;
use crate::segment::Segment;

/// Which family of generators indexes the terms of a [`RingElement`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "zeta")]
    Zeta,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Z => "Z",
            Basis::Zeta => "zeta",
        })
    }
}

/// An integer combination of basis elements indexed by multisegments.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    basis: Basis,
    terms: BTreeMap<Multisegment, i64>,
}

impl RingElement {
    /// The zero element of the given basis.
    pub fn zero(basis: Basis) -> Self {
        RingElement { basis, terms: BTreeMap::new() }
    }

    /// A single generator with coefficient 1 in the standard basis.
    pub fn z(ms: Multisegment) -> Self {
        Self::term(Basis::Z, ms, 1)
    }

    /// A single generator with coefficient 1 in the product basis.
    pub fn zeta(ms: Multisegment) -> Self {
        Self::term(Basis::Zeta, ms, 1)
    }

    /// A single term with an arbitrary coefficient.
    pub fn term(basis: Basis, ms: Multisegment, coef: i64) -> Self {
        let mut e = Self::zero(basis);
        e.insert(ms, coef);
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Terms in the canonical multisegment order.
    pub fn terms(&self) -> impl Iterator<Item = (&Multisegment, i64)> {
        self.terms.iter().map(|(ms, &c)| (ms, c))
    }

    pub fn coefficient(&self, ms: &Multisegment) -> i64 {
        self.terms.get(ms).copied().unwrap_or(0)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient is non-negative.
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    fn insert(&mut self, ms: Multisegment, coef: i64) {
        if coef == 0 {
            return;
        }
        let entry = self.terms.entry(ms).or_insert(0);
        *entry += coef;
        if *entry == 0 {
            let key = self
                .terms
                .iter()
                .find(|(_, &c)| c == 0)
                .map(|(k, _)| k.clone())
                .expect("just zeroed");
            self.terms.remove(&key);
        }
    }

    /// The line shared by all non-empty term keys, if any term has one.
    fn common_line(&self) -> Option<Line> {
        self.terms.keys().find(|ms| !ms.is_empty()).map(|ms| ms.line().clone())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch);
        }
        if let (Some(l), Some(r)) = (self.common_line(), other.common_line()) {
            if l != r {
                return Err(Error::LineMismatch { left: l, right: r });
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (ms, &c) in &other.terms {
            out.insert(ms.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (ms, &c) in &other.terms {
            out.insert(ms.clone(), -c);
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, factor: i64) -> Self {
        let mut out = Self::zero(self.basis);
        for (ms, &c) in &self.terms {
            out.insert(ms.clone(), c * factor);
        }
        out
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (ms, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if *c < 0 {
                    f.write_str("-")?;
                }
            } else if *c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}{}", self.basis, ms)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coef: i64,
    ms: Multisegment,
}

#[derive(Serialize, Deserialize)]
struct RingElementJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let json = RingElementJson {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(ms, &coef)| TermJson { coef, ms: ms.clone() })
                .collect(),
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = RingElementJson::deserialize(deserializer)?;
        let mut e = RingElement::zero(json.basis);
        for term in json.terms {
            if let (Some(l), false) = (e.common_line(), term.ms.is_empty()) {
                if l != *term.ms.line() {
                    return Err(D::Error::custom(format!(
                        "terms mix lines {l} and {}",
                        term.ms.line()
                    )));
                }
            }
            e.insert(term.ms, term.coef);
        }
        Ok(e)
    }
}

/// Product of two product-basis elements: bilinear extension of the
/// key-wise multiset sum.
pub fn zeta_mul(e1: &RingElement, e2: &RingElement) -> Result<RingElement> {
    if e1.basis != Basis::Zeta || e2.basis != Basis::Zeta {
        return Err(Error::BasisMismatch);
    }
    let mut out = RingElement::zero(Basis::Zeta);
    for (a, ca) in e1.terms() {
        for (b, cb) in e2.terms() {
            out.insert(a.msum(b)?, ca * cb);
        }
    }
    Ok(out)
}

/// True when no segment of `a` is contained in another (equal segments
/// count as mutual containment). Equivalently: in the canonical order the
/// beginnings and ends on each exponent coset strictly increase.
pub fn is_ladder(a: &Multisegment) -> bool {
    let segs = a.segments();
    for (i, s) in segs.iter().enumerate() {
        for (j, t) in segs.iter().enumerate() {
            if i != j && s.contains_on_line(t) {
                return false;
            }
        }
    }
    true
}

/// The maximal runs of consecutively preceding segments of a ladder, per
/// exponent coset. Segments in different runs are never linked.
fn ladder_chains(a: &Multisegment) -> Vec<Vec<Segment>> {
    let mut chains: Vec<Vec<Segment>> = Vec::new();
    for parity in [0i64, 1] {
        let mut current: Vec<Segment> = Vec::new();
        for s in a
            .segments()
            .iter()
            .filter(|s| s.begin().twice().rem_euclid(2) == parity)
        {
            if let Some(last) = current.last() {
                if !last.precedes_on_line(s) {
                    chains.push(std::mem::take(&mut current));
                }
            }
            current.push(s.clone());
        }
        if !current.is_empty() {
            chains.push(current);
        }
    }
    chains
}

/// Cross product of partial term lists with the expansions of one chain.
fn expand_over_chains(
    a: &Multisegment,
    chain_terms: impl Fn(&[Segment]) -> Vec<Vec<Segment>>,
) -> Result<RingElement> {
    if !is_ladder(a) {
        return Err(Error::NotALadder(a.to_string()));
    }
    let mut partial: Vec<Vec<Segment>> = vec![Vec::new()];
    for chain in ladder_chains(a) {
        let options = chain_terms(&chain);
        let mut next = Vec::with_capacity(partial.len() * options.len());
        for p in &partial {
            for opt in &options {
                let mut q = p.clone();
                q.extend(opt.iter().cloned());
                next.push(q);
            }
        }
        partial = next;
    }
    let mut out = RingElement::zero(Basis::Z);
    for segs in partial {
        out.insert(Multisegment::new(a.line().clone(), segs)?, 1);
    }
    Ok(out)
}

/// Derivative of a standard-basis ladder generator. For each maximal run
/// Δ1 → … → Δm the i-th of m+1 summands shortens the ends of Δ1,…,Δi;
/// runs multiply out.
pub fn derivative_ladder(a: &Multisegment) -> Result<RingElement> {
    expand_over_chains(a, |chain| {
        (0..=chain.len())
            .map(|i| {
                chain
                    .iter()
                    .enumerate()
                    .filter_map(|(idx, s)| if idx < i { s.minus_end() } else { Some(s.clone()) })
                    .collect()
            })
            .collect()
    })
}

/// Mirrored derivative: per run the i-th summand shortens the beginnings
/// of the last i segments.
pub fn derivative_ladder_dual(a: &Multisegment) -> Result<RingElement> {
    expand_over_chains(a, |chain| {
        (0..=chain.len())
            .map(|i| {
                chain
                    .iter()
                    .enumerate()
                    .filter_map(|(idx, s)| {
                        if idx >= chain.len() - i {
                            s.minus_begin()
                        } else {
                            Some(s.clone())
                        }
                    })
                    .collect()
            })
            .collect()
    })
}

/// The index of the highest derivative of a standard-basis generator:
/// every segment end shortened.
pub fn highest_derivative(a: &Multisegment) -> Multisegment {
    a.minus_ends()
}

/// Highest derivative of a product of standard-basis generators, kept as a
/// product expression: the factor-wise list of [`highest_derivative`]s.
pub fn highest_derivative_product(factors: &[Multisegment]) -> Vec<Multisegment> {
    factors.iter().map(highest_derivative).collect()
}

/// Derivative of a product-basis element, via multiplicativity over single
/// segments: the generator of Δ maps to itself plus the generator of Δ
/// with its end shortened (the empty product for singletons).
pub fn derivative_zeta(e: &RingElement) -> Result<RingElement> {
    if e.basis() != Basis::Zeta {
        return Err(Error::BasisMismatch);
    }
    let mut out = RingElement::zero(Basis::Zeta);
    for (ms, c) in e.terms() {
        let mut partial: Vec<(Vec<Segment>, i64)> = vec![(Vec::new(), c)];
        for s in ms.segments() {
            let mut next = Vec::with_capacity(partial.len() * 2);
            for (segs, coef) in &partial {
                let mut kept = segs.clone();
                kept.push(s.clone());
                next.push((kept, *coef));
                let mut shortened = segs.clone();
                shortened.extend(s.minus_end());
                next.push((shortened, *coef));
            }
            partial = next;
        }
        for (segs, coef) in partial {
            out.insert(Multisegment::new(ms.line().clone(), segs)?, coef);
        }
    }
    Ok(out)
}
