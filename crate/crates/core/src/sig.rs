//! Module monomials (signatures) and module orders.
//!
//! A signature x^a * e_i records the leading module monomial of one
//! representation of a basis element in terms of the input generators.
//! Only the leading module monomial is stored, never the full module
//! vector, so the engine's per-element overhead is one monomial and an
//! index.

use core::cmp::Ordering;
use core::fmt;

use alloc::vec::Vec;

use crate::monomial::{Monomial, TermOrder};

/// x^a * e_i with a 1-based generator index, or the zero sentinel
/// (index 0), which compares below every proper signature.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    index: u32,
    mono: Monomial,
}

impl Signature {
    pub fn new(index: u32, mono: Monomial) -> Self {
        assert!(index >= 1, "signature indices are 1-based");
        Signature { index, mono }
    }

    /// The sentinel for the zero module element.
    pub fn zero(nvars: usize) -> Self {
        Signature {
            index: 0,
            mono: Monomial::one(nvars),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn mono(&self) -> &Monomial {
        &self.mono
    }

    /// Componentwise divisibility: same index and dividing monomial.
    /// Sentinels never divide and are never divided.
    pub fn divides(&self, other: &Signature) -> bool {
        if self.is_zero() || other.is_zero() {
            return false;
        }
        self.index == other.index && self.mono.divides(&other.mono)
    }

    /// t * self. The signature must not be the sentinel.
    pub fn mul(&self, t: &Monomial) -> Signature {
        debug_assert!(!self.is_zero(), "cannot scale the zero signature");
        Signature {
            index: self.index,
            mono: self
                .mono
                .checked_mul(t)
                .expect("monomial exponent overflow"),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.mono.is_one() {
            write!(f, "e{}", self.index)
        } else {
            write!(f, "{}*e{}", self.mono, self.index)
        }
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleOrderKind {
    /// Position over term: a lower generator index dominates; ties fall
    /// back to the base term order on the monomial parts.
    Pot,
    /// Schreyer-type: compare x^a * lpp(f_i) against x^b * lpp(f_j) under
    /// the base order; on ties the lower index wins.
    Schreyer,
}

impl ModuleOrderKind {
    pub fn name(&self) -> &'static str {
        match self {
            ModuleOrderKind::Pot => "pot",
            ModuleOrderKind::Schreyer => "schreyer",
        }
    }

    pub fn parse(s: &str) -> Option<ModuleOrderKind> {
        match s {
            "pot" => Some(ModuleOrderKind::Pot),
            "schreyer" => Some(ModuleOrderKind::Schreyer),
            _ => None,
        }
    }
}

/// A total order on signatures, compatible with the base term order:
/// s < t implies u*s < u*t for every monomial u.
#[derive(Clone, Debug)]
pub struct ModuleOrder {
    kind: ModuleOrderKind,
    base: TermOrder,
    /// Leading power products of the input generators, indexed by
    /// generator position. Only consulted by the Schreyer order.
    input_lpps: Vec<Monomial>,
}

impl ModuleOrder {
    pub fn pot(base: TermOrder) -> Self {
        ModuleOrder {
            kind: ModuleOrderKind::Pot,
            base,
            input_lpps: Vec::new(),
        }
    }

    pub fn schreyer(base: TermOrder, input_lpps: Vec<Monomial>) -> Self {
        ModuleOrder {
            kind: ModuleOrderKind::Schreyer,
            base,
            input_lpps,
        }
    }

    pub fn kind(&self) -> ModuleOrderKind {
        self.kind
    }

    pub fn base(&self) -> &TermOrder {
        &self.base
    }

    /// Strict total order on signatures. The zero sentinel is the minimum.
    /// Equal only for structurally identical signatures.
    pub fn compare(&self, a: &Signature, b: &Signature) -> Ordering {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            (false, false) => {}
        }
        match self.kind {
            ModuleOrderKind::Pot => match a.index.cmp(&b.index) {
                // Lower index means larger signature.
                Ordering::Less => Ordering::Greater,
                Ordering::Greater => Ordering::Less,
                Ordering::Equal => self.base.compare(&a.mono, &b.mono),
            },
            ModuleOrderKind::Schreyer => {
                let la = &self.input_lpps[(a.index - 1) as usize];
                let lb = &self.input_lpps[(b.index - 1) as usize];
                match self.base.compare_products(&a.mono, la, &b.mono, lb) {
                    Ordering::Equal => match a.index.cmp(&b.index) {
                        Ordering::Less => Ordering::Greater,
                        Ordering::Greater => Ordering::Less,
                        Ordering::Equal => Ordering::Equal,
                    },
                    o => o,
                }
            }
        }
    }
}
