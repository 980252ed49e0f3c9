//! Signature-based Groebner basis engine with a pluggable rewrite criterion.
//!
//! The engine computes Groebner bases of polynomial ideals over a prime
//! field or the rationals by tracking, for every basis element, the leading
//! module monomial (signature) of one representation in terms of the input
//! generators. Critical pairs whose signature is already covered by a known
//! syzygy signature or by a "smaller" basis element under a configurable
//! strict partial order are discarded without reduction.
//!
//! Module map:
//!
//! * [`field`], [`monomial`], [`poly`]: coefficient fields, power products,
//!   term orders and sparse polynomial arithmetic.
//! * [`sig`]: module monomials and module orders (position-over-term and
//!   Schreyer-type).
//! * [`labeled`]: basis elements labeled with signatures, plus the pruned
//!   set of known syzygy signatures.
//! * [`criterion`]: the rewrite partial orders (F5-style and GVW-style),
//!   the generalized rewritability test, pair rejection and the runtime
//!   admissibility monitor.
//! * [`engine`]: critical pairs, selection strategies and the main loop.
//! * [`verify`]: independent oracles (Buchberger, Groebner test, reduced
//!   basis, labeled-basis sampling) and standalone F5/GVW criterion
//!   predicates for cross-checking.
//!
//! The crate is `no_std` (requires `alloc`); everything that touches the
//! file system or the clock lives in the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod criterion;
pub mod engine;
pub mod field;
pub mod labeled;
pub mod monomial;
pub mod poly;
pub mod sig;
pub mod verify;

pub use criterion::{RejectionStats, RewriteCmp, RewriteOrder, RewriteOrderKind};
pub use engine::{agc_run, AgcReport, CriticalPair, EngineConfig, PairQueue, RunStatus, Strategy};
pub use field::{Field, PrimeField, Rationals};
pub use labeled::{Basis, LabeledPoly};
pub use monomial::{Monomial, OrderKind, TermOrder};
pub use poly::{PolyRing, Polynomial};
pub use sig::{ModuleOrder, ModuleOrderKind, Signature};
pub use verify::{buchberger, is_groebner, reduce_basis, VerificationReport};
