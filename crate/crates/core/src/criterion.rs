//! The generalized rewritable criterion.
//!
//! A scaled member t * f is *rewritable* if some other member g (or a known
//! syzygy signature) has a signature dividing t * sig(f) and ranks strictly
//! below f in a configurable strict partial order on members. A critical
//! pair is discarded when its two scaled signatures coincide (no regular
//! cancellation is possible) or when either side is rewritable.
//!
//! Two production orders are provided: insertion-based (F5-style, newer
//! elements rank lower and syzygies lowest) and ratio-based (GVW-style,
//! comparing signature/leading-term ratios within one generator index).
//! `InsertionInverted` deliberately violates admissibility and exists to
//! exercise the runtime monitor.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use alloc::format;

use crate::engine::CriticalPair;
use crate::field::Field;
use crate::labeled::{Basis, LabeledPoly};
use crate::monomial::{Monomial, TermOrder};
use crate::sig::Signature;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RewriteOrderKind {
    /// Syzygy members below nonzero members; within a class the later
    /// insertion ranks lower.
    F5,
    /// Within one signature index, the smaller scaled leading power product
    /// ranks lower; ties toward the later insertion. Members with different
    /// signature indices are incomparable.
    Gvw,
    /// Known-inadmissible order for testing the monitor: syzygies still
    /// rank lowest, but among the rest the EARLIER insertion ranks lower,
    /// so a freshly reduced element almost never ranks below its source.
    InsertionInverted,
}

impl RewriteOrderKind {
    pub fn name(&self) -> &'static str {
        match self {
            RewriteOrderKind::F5 => "f5",
            RewriteOrderKind::Gvw => "gvw",
            RewriteOrderKind::InsertionInverted => "inverted",
        }
    }

    pub fn parse(s: &str) -> Option<RewriteOrderKind> {
        match s {
            "f5" => Some(RewriteOrderKind::F5),
            "gvw" => Some(RewriteOrderKind::Gvw),
            "inverted" => Some(RewriteOrderKind::InsertionInverted),
            _ => None,
        }
    }
}

/// A strict partial order on labeled basis members.
#[derive(Clone, Debug)]
pub struct RewriteOrder {
    kind: RewriteOrderKind,
    base: TermOrder,
}

impl RewriteOrder {
    pub fn new(kind: RewriteOrderKind, base: TermOrder) -> Self {
        RewriteOrder { kind, base }
    }

    pub fn kind(&self) -> RewriteOrderKind {
        self.kind
    }
}

/// Outcome of comparing two members under a rewrite order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RewriteCmp {
    Less,
    Greater,
    Incomparable,
}

/// Compare `a` against `b`. The order is strict: an element is never
/// comparable to itself.
pub fn rewrite_compare<K: Field>(
    a: &LabeledPoly<K>,
    b: &LabeledPoly<K>,
    _basis: &Basis<K>,
    ord: &RewriteOrder,
) -> RewriteCmp {
    if a.id() == b.id() {
        return RewriteCmp::Incomparable;
    }
    match ord.kind {
        RewriteOrderKind::F5 => match (a.is_syzygy(), b.is_syzygy()) {
            (true, false) => RewriteCmp::Less,
            (false, true) => RewriteCmp::Greater,
            _ => {
                if a.id() > b.id() {
                    RewriteCmp::Less
                } else {
                    RewriteCmp::Greater
                }
            }
        },
        RewriteOrderKind::InsertionInverted => match (a.is_syzygy(), b.is_syzygy()) {
            (true, false) => RewriteCmp::Less,
            (false, true) => RewriteCmp::Greater,
            _ => {
                if a.id() < b.id() {
                    RewriteCmp::Less
                } else {
                    RewriteCmp::Greater
                }
            }
        },
        RewriteOrderKind::Gvw => {
            if a.sig().index() != b.sig().index() {
                return RewriteCmp::Incomparable;
            }
            let l = a.sig().mono().lcm(b.sig().mono());
            let ta = l.checked_div(a.sig().mono()).expect("lcm is divisible");
            let tb = l.checked_div(b.sig().mono()).expect("lcm is divisible");
            // Scale both to the common signature l * e_i and compare the
            // leading power products; a zero polynomial ranks below any
            // nonzero one.
            let cmp = match (a.poly().lpp(), b.poly().lpp()) {
                (None, None) => Ordering::Equal,
                (None, Some(_)) => Ordering::Less,
                (Some(_), None) => Ordering::Greater,
                (Some(la), Some(lb)) => ord.base.compare_products(la, &ta, lb, &tb),
            };
            match cmp {
                Ordering::Less => RewriteCmp::Less,
                Ordering::Greater => RewriteCmp::Greater,
                Ordering::Equal => {
                    if a.id() > b.id() {
                        RewriteCmp::Less
                    } else {
                        RewriteCmp::Greater
                    }
                }
            }
        }
    }
}

/// What witnessed a rewritability hit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewriteWitness {
    /// An entry of the pruned syzygy signature set divides the target.
    /// Syzygy signatures rank below every member under all orders here.
    SyzygySig(Signature),
    /// A member (by id) with dividing signature ranking strictly below.
    Member(usize),
}

/// Is t * f rewritable by the basis? Scans the syzygy signature set first,
/// then members in descending id, and returns the first witness found.
pub fn gen_rewritable<K: Field>(
    t: &Monomial,
    f: &LabeledPoly<K>,
    basis: &Basis<K>,
    ord: &RewriteOrder,
) -> Option<RewriteWitness> {
    let target = f.sig().mul(t);
    for s in basis.syzygy_sigs() {
        if s.divides(&target) {
            return Some(RewriteWitness::SyzygySig(s.clone()));
        }
    }
    for g in basis.members().iter().rev() {
        if g.id() == f.id() {
            continue;
        }
        if g.sig().divides(&target) && rewrite_compare(g, f, basis, ord) == RewriteCmp::Less {
            return Some(RewriteWitness::Member(g.id()));
        }
    }
    None
}

/// Counters over the disjoint per-pair outcomes. `seen` equals the sum of
/// the other five once a run completes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RejectionStats {
    pub seen: u64,
    pub not_regular: u64,
    pub rewritable_left: u64,
    pub rewritable_right: u64,
    pub reduced: u64,
    pub reduced_to_zero: u64,
}

impl RejectionStats {
    pub fn rejected(&self) -> u64 {
        self.not_regular + self.rewritable_left + self.rewritable_right
    }

    pub fn reduced_pairs(&self) -> u64 {
        self.reduced + self.reduced_to_zero
    }

    pub fn is_consistent(&self) -> bool {
        self.seen == self.rejected() + self.reduced_pairs()
    }
}

/// Why a pair was discarded without reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairRejection {
    /// The scaled signatures of the two sides coincide, so the S-polynomial
    /// cannot have a regular representation at this signature.
    NotRegular,
    RewritableLeft(RewriteWitness),
    RewritableRight(RewriteWitness),
}

/// Classify a popped pair and update the counters. Returns the rejection,
/// if any; `None` means the pair must be reduced.
pub fn evaluate_pair<K: Field>(
    p: &CriticalPair,
    basis: &Basis<K>,
    ord: &RewriteOrder,
    stats: &mut RejectionStats,
) -> Option<PairRejection> {
    stats.seen += 1;
    if p.sig_left == p.sig_right {
        stats.not_regular += 1;
        return Some(PairRejection::NotRegular);
    }
    if let Some(w) = gen_rewritable(&p.t_left, basis.member(p.left), basis, ord) {
        stats.rewritable_left += 1;
        return Some(PairRejection::RewritableLeft(w));
    }
    if let Some(w) = gen_rewritable(&p.t_right, basis.member(p.right), basis, ord) {
        stats.rewritable_right += 1;
        return Some(PairRejection::RewritableRight(w));
    }
    None
}

/// Spec-level convenience: true iff the pair is discarded.
pub fn pair_rejected<K: Field>(
    p: &CriticalPair,
    basis: &Basis<K>,
    ord: &RewriteOrder,
    stats: &mut RejectionStats,
) -> bool {
    evaluate_pair(p, basis, ord, stats).is_some()
}

/// Violation raised by the admissibility monitor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityError {
    pub new_id: usize,
    pub source_id: usize,
    pub detail: String,
}

impl fmt::Display for AdmissibilityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rewrite order not admissible: new member {} does not rank below source {} ({})",
            self.new_id, self.source_id, self.detail
        )
    }
}

/// Runtime admissibility monitor: a freshly reduced element must rank
/// strictly below the member it was scaled from. Incomparable counts as a
/// vacuous pass (the GVW order separates generator indices by design).
pub fn assert_admissible<K: Field>(
    new: &LabeledPoly<K>,
    source: &LabeledPoly<K>,
    basis: &Basis<K>,
    ord: &RewriteOrder,
) -> Result<(), AdmissibilityError> {
    match rewrite_compare(new, source, basis, ord) {
        RewriteCmp::Less | RewriteCmp::Incomparable => Ok(()),
        RewriteCmp::Greater => Err(AdmissibilityError {
            new_id: new.id(),
            source_id: source.id(),
            detail: format!(
                "new sig {} vs source sig {} under {}",
                new.sig(),
                source.sig(),
                ord.kind.name()
            ),
        }),
    }
}
