//! Sparse multivariate polynomials over a [`Field`].
//!
//! Terms are kept strictly descending under the ring's term order with no
//! zero coefficients, so structural equality is semantic equality and the
//! leading term is `terms[0]`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::Field;
use crate::monomial::{Monomial, TermOrder};

#[derive(Clone, Debug)]
pub struct Polynomial<K: Field> {
    terms: Vec<(Monomial, K::Elem)>,
}

// Not derived: the derive would demand `K: PartialEq` although only the
// coefficients are compared.
impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<K: Field> Eq for Polynomial<K> where K::Elem: Eq {}

impl<K: Field> Polynomial<K> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, K::Elem)] {
        &self.terms
    }

    /// Leading power product; None for the zero polynomial, which compares
    /// below every monomial wherever an order is consulted.
    pub fn lpp(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lc(&self) -> Option<&K::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }
}

/// A polynomial ring: coefficient field plus term order. All polynomial
/// arithmetic goes through the ring so that coefficients and comparisons
/// stay consistent.
#[derive(Clone, Debug)]
pub struct PolyRing<K: Field> {
    field: K,
    order: TermOrder,
    unit: Monomial,
}

impl<K: Field> PolyRing<K> {
    pub fn new(field: K, order: TermOrder) -> Self {
        let unit = Monomial::one(order.nvars);
        PolyRing { field, order, unit }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars
    }

    pub fn zero(&self) -> Polynomial<K> {
        Polynomial::zero()
    }

    pub fn constant(&self, c: K::Elem) -> Polynomial<K> {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: alloc::vec![(self.unit.clone(), c)],
            }
        }
    }

    /// Build a polynomial from arbitrary (monomial, coefficient) pairs:
    /// sorts descending, merges duplicates, drops zeros.
    pub fn from_terms(&self, terms: Vec<(Monomial, K::Elem)>) -> Polynomial<K> {
        let mut terms = terms;
        for (m, _) in &terms {
            assert_eq!(m.nvars(), self.order.nvars, "monomial from wrong ring");
        }
        terms.sort_by(|a, b| self.order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, K::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = self.field.add(lc, &c);
                    if self.field.is_zero(lc) {
                        out.pop();
                    }
                }
                _ => {
                    if !self.field.is_zero(&c) {
                        out.push((m, c));
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial<K>, g: &Polynomial<K>) -> Polynomial<K> {
        let neg_one = self.field.neg(&self.field.one());
        self.axpy(f, &neg_one, &self.unit, g)
    }

    pub fn sub(&self, f: &Polynomial<K>, g: &Polynomial<K>) -> Polynomial<K> {
        self.axpy(f, &self.field.one(), &self.unit, g)
    }

    /// c * t * f for a nonzero scalar c.
    pub fn term_mul(&self, c: &K::Elem, t: &Monomial, f: &Polynomial<K>) -> Polynomial<K> {
        debug_assert!(!self.field.is_zero(c));
        let terms = f
            .terms
            .iter()
            .map(|(m, a)| {
                (
                    m.checked_mul(t).expect("monomial exponent overflow"),
                    self.field.mul(c, a),
                )
            })
            .collect();
        // Term orders are multiplicative, so the order of terms is preserved.
        Polynomial { terms }
    }

    /// f - c * t * h, merged in a single pass.
    ///
    /// This is the one-step reduction primitive: with t = lpp(f)/lpp(h) and
    /// c = lc(f)/lc(h) it cancels the leading term of f against h.
    pub fn axpy(
        &self,
        f: &Polynomial<K>,
        c: &K::Elem,
        t: &Monomial,
        h: &Polynomial<K>,
    ) -> Polynomial<K> {
        let mut out: Vec<(Monomial, K::Elem)> = Vec::with_capacity(f.len() + h.len());
        let (mut i, mut j) = (0usize, 0usize);
        while i < f.terms.len() && j < h.terms.len() {
            let (fm, fc) = &f.terms[i];
            let (hm, hc) = &h.terms[j];
            match self.order.compare_scaled(fm, hm, t) {
                Ordering::Greater => {
                    out.push((fm.clone(), fc.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let prod = hm.checked_mul(t).expect("monomial exponent overflow");
                    out.push((prod, self.field.neg(&self.field.mul(c, hc))));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = self.field.sub(fc, &self.field.mul(c, hc));
                    if !self.field.is_zero(&v) {
                        out.push((fm.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for (fm, fc) in &f.terms[i..] {
            out.push((fm.clone(), fc.clone()));
        }
        for (hm, hc) in &h.terms[j..] {
            let prod = hm.checked_mul(t).expect("monomial exponent overflow");
            out.push((prod, self.field.neg(&self.field.mul(c, hc))));
        }
        Polynomial { terms: out }
    }

    pub fn make_monic(&self, f: &Polynomial<K>) -> Polynomial<K> {
        match f.lc() {
            None => Polynomial::zero(),
            Some(lc) if self.field.is_one(lc) => f.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc);
                let terms = f
                    .terms
                    .iter()
                    .map(|(m, a)| (m.clone(), self.field.mul(&inv, a)))
                    .collect();
                Polynomial { terms }
            }
        }
    }

    /// Full normal form of f modulo the nonzero elements of `basis`: every
    /// term of the result is divisible by no basis leading power product.
    /// Deterministic: the first listed reducer wins at each step.
    pub fn normal_form(&self, f: &Polynomial<K>, basis: &[Polynomial<K>]) -> Polynomial<K> {
        let mut done: Vec<(Monomial, K::Elem)> = Vec::new();
        let mut work = f.clone();
        'outer: while let Some((lm, lc)) = work.terms.first().cloned() {
            for g in basis {
                let Some(gl) = g.lpp() else { continue };
                if gl.divides(&lm) {
                    let t = lm.checked_div(gl).expect("divisibility checked");
                    let c = self.field.div(&lc, g.lc().expect("nonzero"));
                    work = self.axpy(&work, &c, &t, g);
                    continue 'outer;
                }
            }
            // Head irreducible: retire it. Remaining terms are all smaller,
            // so `done` stays descending.
            done.push((lm, lc));
            work.terms.remove(0);
        }
        Polynomial { terms: done }
    }

    /// True iff f top-reduces to zero modulo `basis`. Cheaper than
    /// `normal_form` when only membership of the leading-term ideal chain
    /// matters: the walk aborts at the first irreducible nonzero head.
    /// The verdict does not depend on which divisor is chosen at each step,
    /// so the first listed one is taken.
    pub fn top_reduces_to_zero(&self, f: &Polynomial<K>, basis: &[Polynomial<K>]) -> bool {
        let mut acc = ReductionAccumulator::new(self, f);
        loop {
            let Some((lm, lc)) = acc.pop_lead() else {
                return true;
            };
            let found = basis
                .iter()
                .find(|g| g.lpp().is_some_and(|gl| gl.divides(&lm)));
            let Some(g) = found else {
                return false;
            };
            let gl = g.lpp().expect("found reducers are nonzero");
            let t = lm.checked_div(gl).expect("divisibility checked");
            // Subtracting (lc / lc(g)) * t * g cancels the popped head
            // exactly, so only g's tail enters the accumulator, negated.
            let c = self
                .field
                .neg(&self.field.div(&lc, g.lc().expect("nonzero")));
            acc.add_scaled(&c, &t, &g.terms[1..]);
        }
    }
}

/// Working tail for long top-reduction chains, held as a ladder of sorted
/// runs whose capacities double from class to class. Adding an r-term
/// reducer multiple costs O(r) plus amortized merge work — runs collide and
/// combine like carries in binary addition — instead of the O(tail) rebuild
/// that a minus-assign on one flat vector needs per step. On dense
/// certifications that is the difference between minutes and seconds.
///
/// Each run keeps its terms ascending and strictly sorted, so the leading
/// term of the whole sum sits at the tail of one of the runs and popping it
/// is O(number of runs).
struct ReductionAccumulator<'a, K: Field> {
    ring: &'a PolyRing<K>,
    runs: Vec<Vec<(Monomial, K::Elem)>>,
}

impl<'a, K: Field> ReductionAccumulator<'a, K> {
    /// Largest run length admitted to the first size class.
    const BASE: usize = 8;

    fn new(ring: &'a PolyRing<K>, f: &Polynomial<K>) -> Self {
        let mut acc = ReductionAccumulator {
            ring,
            runs: Vec::new(),
        };
        if !f.is_zero() {
            acc.push_run(f.terms.iter().rev().cloned().collect());
        }
        acc
    }

    fn size_class(len: usize) -> usize {
        let mut class = 0;
        let mut cap = Self::BASE;
        while len > cap {
            class += 1;
            cap <<= 1;
        }
        class
    }

    /// Add `c * t * terms` to the sum; `terms` descending, as stored in a
    /// polynomial.
    fn add_scaled(&mut self, c: &K::Elem, t: &Monomial, terms: &[(Monomial, K::Elem)]) {
        if terms.is_empty() || self.ring.field.is_zero(c) {
            return;
        }
        let run: Vec<(Monomial, K::Elem)> = terms
            .iter()
            .rev()
            .map(|(m, a)| {
                (
                    m.checked_mul(t).expect("monomial exponent overflow"),
                    self.ring.field.mul(c, a),
                )
            })
            .collect();
        self.push_run(run);
    }

    fn push_run(&mut self, mut run: Vec<(Monomial, K::Elem)>) {
        while !run.is_empty() {
            let class = Self::size_class(run.len());
            if self.runs.len() <= class {
                self.runs.resize_with(class + 1, Vec::new);
            }
            if self.runs[class].is_empty() {
                self.runs[class] = run;
                return;
            }
            let resident = core::mem::take(&mut self.runs[class]);
            run = self.merge_ascending(resident, run);
            // Cancellation may shrink the merge back into this class; it may
            // even shrink below it, which is fine — the class bound is an
            // upper bound. Otherwise the merge carries into the next class
            // on the following pass.
            if !run.is_empty() && Self::size_class(run.len()) <= class {
                self.runs[class] = run;
                return;
            }
        }
    }

    /// Merge two ascending strictly-sorted runs, summing coefficients of
    /// equal monomials and dropping the sums that cancel.
    fn merge_ascending(
        &self,
        a: Vec<(Monomial, K::Elem)>,
        b: Vec<(Monomial, K::Elem)>,
    ) -> Vec<(Monomial, K::Elem)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ai = a.into_iter().peekable();
        let mut bi = b.into_iter().peekable();
        loop {
            match (ai.peek(), bi.peek()) {
                (Some((am, _)), Some((bm, _))) => match self.ring.order.compare(am, bm) {
                    Ordering::Less => out.push(ai.next().expect("peeked")),
                    Ordering::Greater => out.push(bi.next().expect("peeked")),
                    Ordering::Equal => {
                        let (m, ac) = ai.next().expect("peeked");
                        let (_, bc) = bi.next().expect("peeked");
                        let s = self.ring.field.add(&ac, &bc);
                        if !self.ring.field.is_zero(&s) {
                            out.push((m, s));
                        }
                    }
                },
                (Some(_), None) => out.push(ai.next().expect("peeked")),
                (None, Some(_)) => out.push(bi.next().expect("peeked")),
                (None, None) => break,
            }
        }
        out
    }

    /// Pop the leading (largest) term of the accumulated sum, combining
    /// equal heads across runs. Heads whose coefficients cancel are skipped;
    /// None means the sum is zero.
    fn pop_lead(&mut self) -> Option<(Monomial, K::Elem)> {
        loop {
            let mut best: Option<usize> = None;
            for i in 0..self.runs.len() {
                if self.runs[i].is_empty() {
                    continue;
                }
                best = match best {
                    None => Some(i),
                    Some(b) => {
                        let m = &self.runs[i].last().expect("nonempty").0;
                        let bm = &self.runs[b].last().expect("nonempty").0;
                        if self.ring.order.compare(m, bm) == Ordering::Greater {
                            Some(i)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let b = best?;
            let (m, mut c) = self.runs[b].pop().expect("nonempty");
            for i in 0..self.runs.len() {
                if i == b {
                    continue;
                }
                // Runs are strictly sorted, so each holds `m` at most once,
                // necessarily at its tail given that `m` is maximal.
                if self.runs[i].last().is_some_and(|(m2, _)| *m2 == m) {
                    let (_, c2) = self.runs[i].pop().expect("nonempty");
                    c = self.ring.field.add(&c, &c2);
                }
            }
            if !self.ring.field.is_zero(&c) {
                return Some((m, c));
            }
        }
    }
}


#[cfg(test)]
mod tests {
    use super::testutil::{poly, ring_q3};
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::monomial::OrderKind;

    #[test]
    fn from_terms_canonicalizes() {
        let ring = ring_q3();
        // duplicate monomials merge, zero results vanish: x and -x cancel
        let f = poly(&ring, &[(1, &[1, 0, 0]), (2, &[0, 1, 0]), (-1, &[1, 0, 0])]);
        assert_eq!(f, poly(&ring, &[(2, &[0, 1, 0])]));
        // unsorted input comes out descending
        let g = poly(&ring, &[(1, &[0, 1, 0]), (1, &[2, 0, 0]), (1, &[1, 0, 0])]);
        assert_eq!(g.lpp().unwrap().exps(), &[2, 0, 0]);
        let h = poly(&ring, &[(1, &[1, 1, 0]), (-1, &[1, 1, 0])]);
        assert!(h.is_zero());
    }

    #[test]
    fn axpy_cancels_leading_term() {
        // f = xyz - y^2, h = xy - z, c = 1, t = z gives -y^2 + z^2.
        let ring = ring_q3();
        let f = poly(&ring, &[(1, &[1, 1, 1]), (-1, &[0, 2, 0])]);
        let h = poly(&ring, &[(1, &[1, 1, 0]), (-1, &[0, 0, 1])]);
        let t = Monomial::from_exps(&[0, 0, 1]);
        let r = ring.axpy(&f, &ring.field().one(), &t, &h);
        let expect = poly(&ring, &[(-1, &[0, 2, 0]), (1, &[0, 0, 2])]);
        assert_eq!(r, expect);
    }

    #[test]
    fn axpy_identities() {
        let ring = ring_q3();
        let f = poly(&ring, &[(3, &[2, 0, 0]), (1, &[0, 1, 0]), (5, &[0, 0, 0])]);
        let zero = ring.zero();
        let one_m = Monomial::one(3);
        // f - 1*1*0 = f and 0 - c*t*f has every sign flipped
        assert_eq!(ring.axpy(&f, &ring.field().one(), &one_m, &zero), f);
        let neg = ring.axpy(&zero, &ring.field().one(), &one_m, &f);
        assert_eq!(ring.add(&f, &neg), zero);
    }

    #[test]
    fn add_sub_roundtrip_gf() {
        let field = PrimeField::new(101).unwrap();
        let ring = PolyRing::new(field, TermOrder::new(OrderKind::GrevLex, 2));
        let f = poly(&ring, &[(7, &[1, 0]), (100, &[0, 1])]);
        let g = poly(&ring, &[(94, &[1, 0]), (3, &[1, 1])]);
        let s = ring.add(&f, &g);
        assert_eq!(ring.sub(&s, &g), f);
        // 7 + 94 = 101 = 0: the x term vanished in the sum
        assert!(s.terms().iter().all(|(m, _)| m.exps() != [1, 0]));
    }

    #[test]
    fn monic_normalization() {
        let ring = ring_q3();
        let f = poly(&ring, &[(4, &[1, 0, 0]), (2, &[0, 0, 0])]);
        let m = ring.make_monic(&f);
        assert!(ring.field().is_one(m.lc().unwrap()));
        assert_eq!(m.len(), 2);
        // scaling back by the old leading coefficient recovers f
        let four = ring.field().from_i128(4);
        assert_eq!(ring.term_mul(&four, &Monomial::one(3), &m), f);
        assert!(ring.make_monic(&ring.zero()).is_zero());
    }

    #[test]
    fn normal_form_of_ideal_member_vanishes() {
        // x^2 - y^2 = -(x*(yz - x) - y*(xz - y)) lies in the example ideal.
        let ring = ring_q3();
        let gens = super::testutil::cyclic_roots_ideal(&ring);
        let gb = crate::verify::buchberger(&ring, &gens);
        let f = poly(&ring, &[(1, &[2, 0, 0]), (-1, &[0, 2, 0])]);
        assert!(ring.normal_form(&f, &gb).is_zero());
        assert!(ring.top_reduces_to_zero(&f, &gb));
    }

    #[test]
    fn normal_form_is_idempotent_and_irreducible() {
        let ring = ring_q3();
        let gens = super::testutil::cyclic_roots_ideal(&ring);
        let f = poly(
            &ring,
            &[
                (1, &[3, 1, 0]),
                (2, &[1, 1, 1]),
                (-1, &[0, 0, 2]),
                (5, &[0, 0, 0]),
            ],
        );
        let nf = ring.normal_form(&f, &gens);
        assert_eq!(ring.normal_form(&nf, &gens), nf);
        for (m, _) in nf.terms() {
            for g in &gens {
                assert!(!g.lpp().unwrap().divides(m));
            }
        }
        // residue differs from f by an ideal member
        let diff = ring.sub(&f, &nf);
        let gb = crate::verify::buchberger(&ring, &gens);
        assert!(ring.normal_form(&diff, &gb).is_zero());
    }

    #[test]
    fn zero_poly_lpp_is_none() {
        let ring = PolyRing::<Rationals>::new(Rationals, TermOrder::new(OrderKind::Lex, 2));
        assert_eq!(ring.zero().lpp(), None);
        assert_eq!(ring.zero().lc(), None);
    }

    #[test]
    fn accumulator_drains_to_the_exact_sum() {
        // Seed the accumulator with f, fold in a pile of scaled multiples
        // (sized to force run carries and coefficient collisions), and check
        // that the drained term stream equals the same sum computed with
        // plain polynomial arithmetic.
        let field = PrimeField::new(101).unwrap();
        let ring = PolyRing::new(field, TermOrder::new(OrderKind::GrevLex, 3));
        let f = poly(&ring, &[(3, &[2, 1, 0]), (7, &[1, 1, 1]), (1, &[0, 0, 1])]);
        let g = poly(
            &ring,
            &[
                (5, &[2, 0, 0]),
                (9, &[1, 1, 0]),
                (4, &[0, 1, 1]),
                (2, &[0, 0, 0]),
            ],
        );
        let h = poly(
            &ring,
            &[(11, &[0, 2, 0]), (100, &[0, 0, 2]), (6, &[1, 0, 0])],
        );
        // (coefficient, scaling monomial, which polynomial) triples; the
        // repeats with negated coefficients cancel whole runs.
        let plan: [(i128, [u16; 3], u8); 7] = [
            (2, [1, 0, 0], 0),
            (3, [0, 1, 0], 1),
            (99, [1, 0, 0], 0), // 99 = -2: cancels the first multiple
            (1, [0, 0, 2], 1),
            (7, [1, 1, 0], 0),
            (50, [0, 1, 0], 1),
            (13, [2, 0, 0], 0),
        ];
        let pick = |which: u8| if which == 0 { &g } else { &h };
        let mut acc = ReductionAccumulator::new(&ring, &f);
        let mut reference = f.clone();
        for (c, t, which) in &plan {
            let c = ring.field().from_i128(*c);
            let t = Monomial::from_exps(t);
            acc.add_scaled(&c, &t, pick(*which).terms());
            // axpy computes f - c*t*h, so negate to add.
            reference = ring.axpy(&reference, &ring.field().neg(&c), &t, pick(*which));
        }
        let mut drained: Vec<(Monomial, <PrimeField as Field>::Elem)> = Vec::new();
        while let Some(term) = acc.pop_lead() {
            drained.push(term);
        }
        assert_eq!(drained, reference.terms().to_vec());

        // Total cancellation drains to nothing.
        let mut acc = ReductionAccumulator::new(&ring, &f);
        let neg_one = ring.field().neg(&ring.field().one());
        acc.add_scaled(&neg_one, &Monomial::one(3), f.terms());
        assert_eq!(acc.pop_lead(), None);
    }
}
