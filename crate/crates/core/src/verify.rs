//! Independent verification oracles.
//!
//! Everything here is deliberately written without signatures or criteria
//! (or, for the standalone criterion predicates, straight from their
//! textbook one-line definitions) so the engine can be checked against
//! code that shares none of its machinery: a criteria-free Buchberger
//! closure, a Groebner test over all classic S-polynomials, reduced-basis
//! canonicalization, and a randomized check of the labeled-basis covering
//! property.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::field::Field;
use crate::labeled::{Basis, LabeledPoly};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::sig::{ModuleOrder, ModuleOrderKind, Signature};

/// Classic S-polynomial of two nonzero polynomials, both scaled monic.
fn classic_spoly<K: Field>(
    ring: &PolyRing<K>,
    f: &Polynomial<K>,
    g: &Polynomial<K>,
) -> Polynomial<K> {
    let lf = f.lpp().expect("nonzero");
    let lg = g.lpp().expect("nonzero");
    let lcm = lf.lcm(lg);
    let tf = lcm.checked_div(lf).expect("lcm divisible");
    let tg = lcm.checked_div(lg).expect("lcm divisible");
    let cf = ring.field().inv(f.lc().expect("nonzero"));
    let cg = ring.field().inv(g.lc().expect("nonzero"));
    let a = ring.term_mul(&cf, &tf, f);
    ring.axpy(&a, &cg, &tg, g)
}

/// Buchberger's algorithm with no pair criteria at all: every S-polynomial
/// is formed and fully reduced. Slow on purpose; it is the ground-truth
/// oracle for small systems.
pub fn buchberger<K: Field>(ring: &PolyRing<K>, gens: &[Polynomial<K>]) -> Vec<Polynomial<K>> {
    let mut basis: Vec<Polynomial<K>> = gens
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| ring.make_monic(f))
        .collect();
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            queue.push((i, j));
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let (i, j) = queue[head];
        head += 1;
        let s = classic_spoly(ring, &basis[i], &basis[j]);
        let r = ring.normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = ring.make_monic(&r);
        basis.push(r);
        let new = basis.len() - 1;
        for i in 0..new {
            queue.push((i, new));
        }
    }
    basis
}

/// Groebner test: every classic S-polynomial of the nonzero elements must
/// top-reduce to zero over the set itself.
pub fn is_groebner<K: Field>(ring: &PolyRing<K>, polys: &[Polynomial<K>]) -> bool {
    let nonzero: Vec<&Polynomial<K>> = polys.iter().filter(|f| !f.is_zero()).collect();
    for j in 1..nonzero.len() {
        for i in 0..j {
            let s = classic_spoly(ring, nonzero[i], nonzero[j]);
            if !ring.top_reduces_to_zero(&s, polys) {
                return false;
            }
        }
    }
    true
}

/// Canonical reduced basis: monic, no leading term divides another, every
/// element fully reduced against the rest, sorted by descending leading
/// power product. For a fixed ideal and order the result is unique, which
/// makes it the comparison form for cross-checking runs.
pub fn reduce_basis<K: Field>(ring: &PolyRing<K>, polys: &[Polynomial<K>]) -> Vec<Polynomial<K>> {
    let mut work: Vec<Polynomial<K>> = Vec::new();
    for f in polys.iter().filter(|f| !f.is_zero()) {
        work.push(ring.make_monic(f));
    }
    // Minimalize: keep an element only if no other kept or pending element
    // has a leading term properly dividing it; among equal leading terms
    // the first survives.
    let mut minimal: Vec<Polynomial<K>> = Vec::new();
    'outer: for (i, f) in work.iter().enumerate() {
        let lf = f.lpp().expect("zeros filtered");
        for (j, g) in work.iter().enumerate() {
            if i == j {
                continue;
            }
            let lg = g.lpp().expect("zeros filtered");
            if lg.divides(lf) && (lg != lf || j < i) {
                continue 'outer;
            }
        }
        minimal.push(f.clone());
    }
    let mut work = minimal;
    // Interreduce to fixpoint. Leading terms cannot vanish (minimality),
    // so only trailing terms change and the loop terminates.
    loop {
        let mut changed = false;
        for i in 0..work.len() {
            let rest: Vec<Polynomial<K>> = work
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let nf = ring.make_monic(&ring.normal_form(&work[i], &rest));
            debug_assert!(!nf.is_zero(), "minimal element reduced to zero");
            if nf != work[i] {
                work[i] = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    work.sort_by(|a, b| {
        ring.order()
            .compare(b.lpp().expect("nonzero"), a.lpp().expect("nonzero"))
    });
    work
}

/// Outcome of a sampling run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub attempted: usize,
    pub passed: usize,
    /// Samples whose combination collapsed to the zero polynomial.
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Is the leading term reducible by some nonzero member whose scaled
/// signature stays within the bound? This is the covering property a
/// signature Groebner basis must grant every labeled ideal element.
fn sig_reducible<K: Field>(
    basis: &Basis<K>,
    lead: &Monomial,
    bound: &Signature,
    mord: &ModuleOrder,
) -> bool {
    for g in basis.members() {
        let Some(lg) = g.poly().lpp() else { continue };
        if !lg.divides(lead) {
            continue;
        }
        let t = lead.checked_div(lg).expect("divisibility checked");
        if mord.compare(&g.sig().mul(&t), bound) != Ordering::Greater {
            return true;
        }
    }
    false
}

fn rand_range(rng: &mut ChaCha8Rng, n: u32) -> u32 {
    rng.next_u32() % n
}

fn rand_monomial(rng: &mut ChaCha8Rng, nvars: usize) -> Monomial {
    let deg = rand_range(rng, 5);
    let mut exps = alloc::vec![0u16; nvars];
    for _ in 0..deg {
        exps[rand_range(rng, nvars as u32) as usize] += 1;
    }
    Monomial::from_exps(&exps)
}

/// Sample random labeled combinations of the inputs and check each against
/// the covering property. Combinations use up to three distinct input
/// positions so the module element's leading term never cancels and its
/// signature is known exactly.
pub fn check_labeled_gb<K: Field>(
    ring: &PolyRing<K>,
    basis: &Basis<K>,
    mord: &ModuleOrder,
    samples: usize,
    seed: u64,
) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = basis.input_count() as u32;
    let mut report = VerificationReport {
        attempted: samples,
        passed: 0,
        skipped: 0,
        failures: Vec::new(),
    };
    for n in 0..samples {
        let k = 1 + rand_range(&mut rng, m.min(3));
        let mut indices: Vec<u32> = Vec::with_capacity(k as usize);
        while (indices.len() as u32) < k {
            let i = 1 + rand_range(&mut rng, m);
            if !indices.contains(&i) {
                indices.push(i);
            }
        }
        let mut f = ring.zero();
        let mut bound: Option<Signature> = None;
        for &i in &indices {
            let t = rand_monomial(&mut rng, ring.nvars());
            let c = ring.field().sample_nonzero(&mut rng);
            let gen = basis.input(i).expect("index sampled in range");
            f = ring.add(&f, &ring.term_mul(&c, &t, gen.poly()));
            let s = Signature::new(i, t);
            bound = Some(match bound {
                None => s,
                Some(b) => {
                    if mord.compare(&s, &b) == Ordering::Greater {
                        s
                    } else {
                        b
                    }
                }
            });
        }
        let bound = bound.expect("at least one index");
        let Some(lead) = f.lpp() else {
            report.skipped += 1;
            continue;
        };
        if sig_reducible(basis, lead, &bound, mord) {
            report.passed += 1;
        } else {
            report.failures.push(format!(
                "sample {n}: leading term {lead} under signature bound {bound} \
                 has no reducer within the bound"
            ));
        }
    }
    report
}

/// Failures of the standalone criterion predicates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifyError {
    /// The index-based syzygy criterion is only meaningful under the
    /// position-over-term order.
    RequiresPot,
}

impl core::fmt::Display for VerifyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            VerifyError::RequiresPot => {
                write!(f, "criterion requires the position-over-term module order")
            }
        }
    }
}

/// Classic index-based syzygy criterion: t * f is rejectable when some
/// nonzero member generated at a later input position has a leading term
/// dividing t * mono(sig(f)).
pub fn f5_syzygy_reject<K: Field>(
    basis: &Basis<K>,
    t: &Monomial,
    f: &LabeledPoly<K>,
    mord: &ModuleOrder,
) -> Result<bool, VerifyError> {
    if mord.kind() != ModuleOrderKind::Pot {
        return Err(VerifyError::RequiresPot);
    }
    let target = f.sig().mul(t);
    Ok(basis.members().iter().any(|g| {
        !g.is_syzygy()
            && g.sig().index() > target.index()
            && g.poly().lpp().is_some_and(|l| l.divides(target.mono()))
    }))
}

/// Classic rewritten criterion: t * f is rejectable when a member added
/// later carries a signature dividing t * sig(f).
pub fn f5_rewritten_reject<K: Field>(basis: &Basis<K>, t: &Monomial, f: &LabeledPoly<K>) -> bool {
    let target = f.sig().mul(t);
    basis
        .members()
        .iter()
        .any(|g| g.id() > f.id() && g.sig().divides(&target))
}

/// First-criterion rejection: t * f is rejectable when a known syzygy
/// signature (recorded zero reductions included) divides t * sig(f).
pub fn gvw_first_reject<K: Field>(basis: &Basis<K>, t: &Monomial, f: &LabeledPoly<K>) -> bool {
    let target = f.sig().mul(t);
    basis.syzygy_sigs().iter().any(|s| s.divides(&target))
        || basis
            .members()
            .iter()
            .any(|g| g.is_syzygy() && g.sig().divides(&target))
}
