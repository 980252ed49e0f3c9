//! Basis elements labeled with signatures.
//!
//! A labeled element stores a polynomial f together with the leading module
//! monomial (signature) of one representation f = sum u_i * f_i; the full
//! vector u is never kept. Elements with f = 0 are genuine members: they
//! witness syzygies and participate in the rewrite orders.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::field::Field;
use crate::poly::Polynomial;
use crate::sig::{ModuleOrder, Signature};

/// Input validation failures for basis construction and pair creation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputError {
    /// No generators were supplied.
    Empty,
    /// Generator at this 0-based position is the zero polynomial.
    ZeroGenerator(usize),
    /// A 1-based input index outside 1..=m was supplied.
    IndexOutOfRange(u32),
    /// A critical pair was requested for a zero member (by id).
    ZeroPairOperand(usize),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Empty => write!(f, "empty generator list"),
            InputError::ZeroGenerator(i) => write!(f, "generator {i} is zero"),
            InputError::IndexOutOfRange(i) => write!(f, "input index {i} out of range"),
            InputError::ZeroPairOperand(id) => {
                write!(f, "critical pair requested for zero member {id}")
            }
        }
    }
}

/// A polynomial with its signature and insertion ordinal.
#[derive(Clone, Debug)]
pub struct LabeledPoly<K: Field> {
    id: usize,
    poly: Polynomial<K>,
    sig: Signature,
}

impl<K: Field> LabeledPoly<K> {
    /// Insertion ordinal; equals the element's position in the basis.
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn poly(&self) -> &Polynomial<K> {
        &self.poly
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    /// True for recorded zero reductions. Zero members carry the signature
    /// of a syzygy.
    pub fn is_syzygy(&self) -> bool {
        self.poly.is_zero()
    }
}

/// The labeled basis under construction plus the set of known syzygy
/// signatures, kept pruned under divisibility (no entry divides another).
#[derive(Clone, Debug)]
pub struct Basis<K: Field> {
    members: Vec<LabeledPoly<K>>,
    syzygy_sigs: Vec<Signature>,
    input_count: usize,
}

impl<K: Field> Basis<K> {
    /// Seed the basis with the inputs f_i labeled e_i and the signatures of
    /// all principal syzygies f_j e_i - f_i e_j (i < j).
    pub fn init(inputs: &[Polynomial<K>], mord: &ModuleOrder) -> Result<Basis<K>, InputError> {
        if inputs.is_empty() {
            return Err(InputError::Empty);
        }
        for (i, f) in inputs.iter().enumerate() {
            if f.is_zero() {
                return Err(InputError::ZeroGenerator(i));
            }
        }
        let nvars = mord.base().nvars;
        let members: Vec<LabeledPoly<K>> = inputs
            .iter()
            .enumerate()
            .map(|(i, f)| LabeledPoly {
                id: i,
                poly: f.clone(),
                sig: Signature::new(i as u32 + 1, crate::monomial::Monomial::one(nvars)),
            })
            .collect();
        let mut basis = Basis {
            members,
            syzygy_sigs: Vec::new(),
            input_count: inputs.len(),
        };
        for j in 1..=inputs.len() as u32 {
            for i in 1..j {
                let h = basis.members[(j - 1) as usize].clone();
                let sig = basis
                    .syzygy_signature(&h, i, mord)
                    .expect("index in range")
                    .expect("distinct positions never tie");
                basis.insert_syzygy_sig(sig);
            }
        }
        Ok(basis)
    }

    pub fn members(&self) -> &[LabeledPoly<K>] {
        &self.members
    }

    pub fn member(&self, id: usize) -> &LabeledPoly<K> {
        &self.members[id]
    }

    /// Number of input generators m; members 0..m are the inputs.
    pub fn input_count(&self) -> usize {
        self.input_count
    }

    pub fn input(&self, index_1based: u32) -> Result<&LabeledPoly<K>, InputError> {
        if index_1based == 0 || index_1based as usize > self.input_count {
            return Err(InputError::IndexOutOfRange(index_1based));
        }
        Ok(&self.members[(index_1based - 1) as usize])
    }

    pub fn syzygy_sigs(&self) -> &[Signature] {
        &self.syzygy_sigs
    }

    pub fn next_id(&self) -> usize {
        self.members.len()
    }

    pub fn nonzero_count(&self) -> usize {
        self.members.iter().filter(|m| !m.is_syzygy()).count()
    }

    /// Append a member. The caller is responsible for monic normalization
    /// and admissibility checking; ids are assigned densely.
    pub fn push_member(&mut self, poly: Polynomial<K>, sig: Signature) -> usize {
        debug_assert!(!sig.is_zero());
        let id = self.members.len();
        self.members.push(LabeledPoly { id, poly, sig });
        id
    }

    /// Signature of the principal syzygy h * e_i - f_i * w for a nonzero
    /// member h with signature w. The two candidate leading module
    /// monomials are lpp(h) * e_i and lpp(f_i) * w; if they coincide the
    /// leading terms may cancel and no signature is claimed (None).
    pub fn syzygy_signature(
        &self,
        h: &LabeledPoly<K>,
        input_index: u32,
        mord: &ModuleOrder,
    ) -> Result<Option<Signature>, InputError> {
        let f_i = self.input(input_index)?;
        debug_assert!(!h.poly.is_zero(), "principal syzygy of a zero member");
        let a = Signature::new(input_index, h.poly.lpp().expect("nonzero").clone());
        let b = h.sig.mul(f_i.poly.lpp().expect("inputs are nonzero"));
        Ok(match mord.compare(&a, &b) {
            Ordering::Greater => Some(a),
            Ordering::Less => Some(b),
            Ordering::Equal => None,
        })
    }

    /// Insert into the syzygy signature set, keeping it an antichain:
    /// dominated entries are dropped, dominating entries suppress the
    /// insert. Returns true if the signature was added.
    pub fn insert_syzygy_sig(&mut self, sig: Signature) -> bool {
        debug_assert!(!sig.is_zero());
        if self.syzygy_sigs.iter().any(|s| s.divides(&sig)) {
            return false;
        }
        self.syzygy_sigs.retain(|s| !sig.divides(s));
        self.syzygy_sigs.push(sig);
        true
    }

    /// Record that an S-polynomial with this signature reduced to zero:
    /// the signature joins the syzygy set and a zero member is appended so
    /// the rewrite orders can see the event.
    pub fn record_zero_reduction(&mut self, sig: Signature) {
        debug_assert!(!sig.is_zero());
        self.insert_syzygy_sig(sig.clone());
        let id = self.members.len();
        self.members.push(LabeledPoly {
            id,
            poly: Polynomial::zero(),
            sig,
        });
    }
}
