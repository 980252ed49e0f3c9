//! Critical pairs, selection strategies and the main loop.
//!
//! The loop keeps a queue of critical pairs, discards pairs that fail the
//! regularity test or are rewritable, and reduces the survivors with the
//! signature-constrained top-reduction (reducers must carry a strictly
//! smaller scaled signature, so the reduced element keeps its signature).
//! Nonzero results join the basis together with the signatures of their
//! principal syzygies against every input; zero results are recorded as
//! syzygy signatures. Pair and degree caps bound runaway inputs and are
//! reported rather than silently truncated.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::criterion::{
    assert_admissible, evaluate_pair, PairRejection, RejectionStats, RewriteOrder, RewriteOrderKind,
};
use crate::field::Field;
use crate::labeled::{Basis, InputError, LabeledPoly};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::sig::{ModuleOrder, ModuleOrderKind, Signature};

/// A critical pair, stored by member ids with the leading data needed to
/// rank and reject it without touching the polynomials. `sig_left` is the
/// larger scaled signature and serves as the signature of the pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub left: usize,
    pub right: usize,
    pub t_left: Monomial,
    pub t_right: Monomial,
    pub lcm: Monomial,
    pub sig_left: Signature,
    pub sig_right: Signature,
}

/// Build the pair of two nonzero members, oriented so the left side
/// carries the larger scaled signature (ties fall to the smaller id).
pub fn make_critical_pair<K: Field>(
    a: &LabeledPoly<K>,
    b: &LabeledPoly<K>,
    mord: &ModuleOrder,
) -> Result<CriticalPair, InputError> {
    let la = a.poly().lpp().ok_or(InputError::ZeroPairOperand(a.id()))?;
    let lb = b.poly().lpp().ok_or(InputError::ZeroPairOperand(b.id()))?;
    let lcm = la.lcm(lb);
    let ta = lcm.checked_div(la).expect("lcm divisible by lpp");
    let tb = lcm.checked_div(lb).expect("lcm divisible by lpp");
    let sa = a.sig().mul(&ta);
    let sb = b.sig().mul(&tb);
    let a_left = match mord.compare(&sa, &sb) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.id() < b.id(),
    };
    Ok(if a_left {
        CriticalPair {
            left: a.id(),
            right: b.id(),
            t_left: ta,
            t_right: tb,
            lcm,
            sig_left: sa,
            sig_right: sb,
        }
    } else {
        CriticalPair {
            left: b.id(),
            right: a.id(),
            t_left: tb,
            t_right: ta,
            lcm,
            sig_left: sb,
            sig_right: sa,
        }
    })
}

/// Which pair the queue hands out next.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    /// Smallest pair signature first (ties: smaller left id, right id).
    MinSignature,
    /// Smallest lcm degree first (ties: as MinSignature).
    MinDegree,
    /// Insertion order.
    Fifo,
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::MinSignature => "sig",
            Strategy::MinDegree => "degree",
            Strategy::Fifo => "fifo",
        }
    }

    pub fn parse(s: &str) -> Option<Strategy> {
        match s {
            "sig" => Some(Strategy::MinSignature),
            "degree" => Some(Strategy::MinDegree),
            "fifo" => Some(Strategy::Fifo),
            _ => None,
        }
    }
}

/// Pending critical pairs. Selection is a linear scan; queue sizes at the
/// intended problem scale stay in the tens of thousands.
#[derive(Clone, Debug, Default)]
pub struct PairQueue {
    pairs: VecDeque<CriticalPair>,
}

impl PairQueue {
    pub fn new() -> Self {
        PairQueue {
            pairs: VecDeque::new(),
        }
    }

    pub fn push(&mut self, pair: CriticalPair) {
        self.pairs.push_back(pair);
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// True if `a` is served strictly before `b` under the strategy.
    fn precedes(
        a: &CriticalPair,
        b: &CriticalPair,
        strategy: Strategy,
        mord: &ModuleOrder,
    ) -> bool {
        let by_sig =
            |a: &CriticalPair, b: &CriticalPair| match mord.compare(&a.sig_left, &b.sig_left) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => (a.left, a.right) < (b.left, b.right),
            };
        match strategy {
            Strategy::Fifo => false,
            Strategy::MinSignature => by_sig(a, b),
            Strategy::MinDegree => match a.lcm.degree().cmp(&b.lcm.degree()) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => by_sig(a, b),
            },
        }
    }

    pub fn pop(&mut self, strategy: Strategy, mord: &ModuleOrder) -> Option<CriticalPair> {
        if self.pairs.is_empty() {
            return None;
        }
        if strategy == Strategy::Fifo {
            return self.pairs.pop_front();
        }
        let mut best = 0usize;
        for i in 1..self.pairs.len() {
            if Self::precedes(&self.pairs[i], &self.pairs[best], strategy, mord) {
                best = i;
            }
        }
        self.pairs.remove(best)
    }
}

/// Engine parameters. Defaults match the intended production setup:
/// Schreyer module order, ratio-based rewrite order, signature strategy.
#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub module_order: ModuleOrderKind,
    pub rewrite_order: RewriteOrderKind,
    pub strategy: Strategy,
    /// Stop after this many pairs have been popped.
    pub max_pairs: u64,
    /// Stop when a popped pair's lcm exceeds this total degree.
    pub max_degree: u32,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            module_order: ModuleOrderKind::Schreyer,
            rewrite_order: RewriteOrderKind::Gvw,
            strategy: Strategy::MinSignature,
            max_pairs: 1_000_000,
            max_degree: 64,
        }
    }
}

/// How a run ended.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RunStatus {
    /// Queue exhausted: the nonzero members form a signature Groebner basis.
    Complete,
    /// Pair cap hit; the basis is partial.
    CappedPairs,
    /// Degree cap hit; the basis is partial.
    CappedDegree,
}

impl RunStatus {
    pub fn name(&self) -> &'static str {
        match self {
            RunStatus::Complete => "complete",
            RunStatus::CappedPairs => "capped_pairs",
            RunStatus::CappedDegree => "capped_degree",
        }
    }
}

/// Everything a run produces.
#[derive(Clone, Debug)]
pub struct AgcReport<K: Field> {
    pub basis: Basis<K>,
    pub stats: RejectionStats,
    /// Total pairs ever enqueued (popped or not).
    pub all_pairs: u64,
    pub status: RunStatus,
}

/// Hard failures. Cap hits are not errors; they are reported in the status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    Input(InputError),
    /// The admissibility monitor caught the rewrite order ranking a fresh
    /// element above its source; results under such an order are unsound.
    Admissibility {
        /// 1-based ordinal of the offending nonzero insertion.
        insertion: usize,
        new_id: usize,
        source_id: usize,
        detail: String,
    },
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::Input(e) => write!(f, "invalid input: {e}"),
            EngineError::Admissibility {
                insertion,
                new_id,
                source_id,
                detail,
            } => write!(
                f,
                "inadmissible rewrite order at insertion {insertion}: member {new_id} \
                 does not rank below its source {source_id} ({detail})"
            ),
        }
    }
}

impl From<InputError> for EngineError {
    fn from(e: InputError) -> Self {
        EngineError::Input(e)
    }
}

/// The S-polynomial of a pair and its signature (the pair's signature).
/// Leading terms cancel by construction.
pub fn spoly<K: Field>(
    ring: &PolyRing<K>,
    basis: &Basis<K>,
    pair: &CriticalPair,
) -> (Polynomial<K>, Signature) {
    let f = basis.member(pair.left);
    let g = basis.member(pair.right);
    let scaled = ring.term_mul(&ring.field().one(), &pair.t_left, f.poly());
    let c = ring.field().div(
        f.poly().lc().expect("pair members are nonzero"),
        g.poly().lc().expect("pair members are nonzero"),
    );
    let s = ring.axpy(&scaled, &c, &pair.t_right, g.poly());
    debug_assert!(s.lpp() != Some(&pair.lcm));
    (s, pair.sig_left.clone())
}

/// Top-reduce `f` using only reducers whose scaled signature is strictly
/// below `sig`, so the signature of the result is still `sig`. Among the
/// eligible reducers the one with the smallest scaled signature wins, then
/// the smallest id.
pub fn one_side_reduce<K: Field>(
    ring: &PolyRing<K>,
    basis: &Basis<K>,
    mut f: Polynomial<K>,
    sig: &Signature,
    mord: &ModuleOrder,
) -> Polynomial<K> {
    loop {
        let Some(lead) = f.lpp() else { return f };
        let mut best: Option<(Signature, usize, Monomial)> = None;
        for h in basis.members() {
            let Some(hl) = h.poly().lpp() else { continue };
            if !hl.divides(lead) {
                continue;
            }
            let t = lead.checked_div(hl).expect("divisibility checked");
            let scaled = h.sig().mul(&t);
            if mord.compare(&scaled, sig) != Ordering::Less {
                continue;
            }
            let better = match &best {
                None => true,
                Some((bs, bid, _)) => match mord.compare(&scaled, bs) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => h.id() < *bid,
                },
            };
            if better {
                best = Some((scaled, h.id(), t));
            }
        }
        let Some((_, id, t)) = best else { return f };
        let h = basis.member(id);
        let c = ring.field().div(
            f.lc().expect("nonzero here"),
            h.poly().lc().expect("reducers are nonzero"),
        );
        let old = f.lpp().expect("nonzero here").clone();
        f = ring.axpy(&f, &c, &t, h.poly());
        debug_assert!(f
            .lpp()
            .is_none_or(|l| ring.order().compare(l, &old) == Ordering::Less));
    }
}

/// What the loop decided about one popped pair, in pop order. Observers
/// see the basis exactly as the decision saw it: rejection and reduction
/// both read the basis before anything is inserted for this pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairDecision {
    RejectedNotRegular,
    RejectedRewritableLeft,
    RejectedRewritableRight,
    Reduced { to_zero: bool },
}

/// Module order for a generator list, resolving the Schreyer order against
/// the input leading power products. Inputs must be nonzero.
pub fn build_module_order<K: Field>(
    ring: &PolyRing<K>,
    inputs: &[Polynomial<K>],
    kind: ModuleOrderKind,
) -> Result<ModuleOrder, InputError> {
    match kind {
        ModuleOrderKind::Pot => Ok(ModuleOrder::pot(*ring.order())),
        ModuleOrderKind::Schreyer => {
            let mut lpps = Vec::with_capacity(inputs.len());
            for (i, f) in inputs.iter().enumerate() {
                match f.lpp() {
                    Some(l) => lpps.push(l.clone()),
                    None => return Err(InputError::ZeroGenerator(i)),
                }
            }
            Ok(ModuleOrder::schreyer(*ring.order(), lpps))
        }
    }
}

/// Run the engine over the given generators.
pub fn agc_run<K: Field>(
    ring: &PolyRing<K>,
    inputs: &[Polynomial<K>],
    config: &EngineConfig,
) -> Result<AgcReport<K>, EngineError> {
    agc_run_observed(ring, inputs, config, &mut |_, _, _| {})
}

/// As [`agc_run`], invoking `observer` with the pre-insertion basis and
/// the decision for every popped pair. Used by the verification layer to
/// replay each decision against independent predicates.
pub fn agc_run_observed<K: Field>(
    ring: &PolyRing<K>,
    inputs: &[Polynomial<K>],
    config: &EngineConfig,
    observer: &mut dyn FnMut(&Basis<K>, &CriticalPair, &PairDecision),
) -> Result<AgcReport<K>, EngineError> {
    let mord = build_module_order(ring, inputs, config.module_order)?;
    let rord = RewriteOrder::new(config.rewrite_order, *ring.order());
    let mut basis = Basis::init(inputs, &mord)?;
    let mut queue = PairQueue::new();
    let mut all_pairs: u64 = 0;
    for j in 1..basis.input_count() {
        for i in 0..j {
            let pair = make_critical_pair(basis.member(i), basis.member(j), &mord)?;
            queue.push(pair);
            all_pairs += 1;
        }
    }
    let mut stats = RejectionStats::default();
    let mut pops: u64 = 0;
    let mut insertions: usize = 0;
    let status = loop {
        if queue.is_empty() {
            break RunStatus::Complete;
        }
        if pops >= config.max_pairs {
            break RunStatus::CappedPairs;
        }
        let pair = queue.pop(config.strategy, &mord).expect("queue not empty");
        pops += 1;
        if pair.lcm.degree() > config.max_degree {
            break RunStatus::CappedDegree;
        }
        if let Some(rej) = evaluate_pair(&pair, &basis, &rord, &mut stats) {
            let decision = match rej {
                PairRejection::NotRegular => PairDecision::RejectedNotRegular,
                PairRejection::RewritableLeft(_) => PairDecision::RejectedRewritableLeft,
                PairRejection::RewritableRight(_) => PairDecision::RejectedRewritableRight,
            };
            observer(&basis, &pair, &decision);
            continue;
        }
        let (s, sig) = spoly(ring, &basis, &pair);
        let reduced = one_side_reduce(ring, &basis, s, &sig, &mord);
        if reduced.is_zero() {
            stats.reduced_to_zero += 1;
            observer(&basis, &pair, &PairDecision::Reduced { to_zero: true });
            basis.record_zero_reduction(sig);
            continue;
        }
        stats.reduced += 1;
        observer(&basis, &pair, &PairDecision::Reduced { to_zero: false });
        insertions += 1;
        let monic = ring.make_monic(&reduced);
        let new_id = basis.push_member(monic, sig);
        if let Err(e) =
            assert_admissible(basis.member(new_id), basis.member(pair.left), &basis, &rord)
        {
            return Err(EngineError::Admissibility {
                insertion: insertions,
                new_id: e.new_id,
                source_id: e.source_id,
                detail: e.detail,
            });
        }
        for i in 1..=basis.input_count() as u32 {
            if let Some(sig) = basis.syzygy_signature(basis.member(new_id), i, &mord)? {
                basis.insert_syzygy_sig(sig);
            }
        }
        for other in 0..new_id {
            if basis.member(other).is_syzygy() {
                continue;
            }
            let pair = make_critical_pair(basis.member(other), basis.member(new_id), &mord)?;
            queue.push(pair);
            all_pairs += 1;
        }
    };
    Ok(AgcReport {
        basis,
        stats,
        all_pairs,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::OrderKind;
    use crate::monomial::TermOrder;
    use crate::poly::testutil::{cyclic_roots_ideal, poly, ring_q3};
    use alloc::vec;

    fn pot3() -> ModuleOrder {
        ModuleOrder::pot(TermOrder::new(OrderKind::GrevLex, 3))
    }

    #[test]
    fn pair_orientation_puts_larger_signature_left() {
        let ring = ring_q3();
        let gens = cyclic_roots_ideal(&ring);
        let mord = pot3();
        let basis = Basis::init(&gens, &mord).unwrap();
        // lcm(yz, xz) = xyz; sides scale to x*e_1 and y*e_2; POT ranks
        // index 1 higher, so the first generator sits on the left.
        let p = make_critical_pair(basis.member(0), basis.member(1), &mord).unwrap();
        assert_eq!(p.left, 0);
        assert_eq!(p.right, 1);
        assert_eq!(p.lcm, Monomial::from_exps(&[1, 1, 1]));
        assert_eq!(p.t_left, Monomial::from_exps(&[1, 0, 0]));
        assert_eq!(p.t_right, Monomial::from_exps(&[0, 1, 0]));
        assert_eq!(
            p.sig_left,
            Signature::new(1, Monomial::from_exps(&[1, 0, 0]))
        );
        assert_eq!(
            p.sig_right,
            Signature::new(2, Monomial::from_exps(&[0, 1, 0]))
        );
        // Orientation is symmetric in the arguments.
        let q = make_critical_pair(basis.member(1), basis.member(0), &mord).unwrap();
        assert_eq!(q, p);
    }

    #[test]
    fn pair_with_zero_member_is_an_error() {
        let ring = ring_q3();
        let gens = cyclic_roots_ideal(&ring);
        let mord = pot3();
        let mut basis = Basis::init(&gens, &mord).unwrap();
        basis.record_zero_reduction(Signature::new(1, Monomial::from_exps(&[2, 0, 0])));
        let z = basis.members().len() - 1;
        assert_eq!(
            make_critical_pair(basis.member(0), basis.member(z), &mord).err(),
            Some(InputError::ZeroPairOperand(z))
        );
    }

    #[test]
    fn spoly_matches_hand_computation() {
        let ring = ring_q3();
        let gens = cyclic_roots_ideal(&ring);
        let mord = pot3();
        let basis = Basis::init(&gens, &mord).unwrap();
        let p = make_critical_pair(basis.member(0), basis.member(1), &mord).unwrap();
        let (s, sig) = spoly(&ring, &basis, &p);
        // x*(yz - x) - y*(xz - y) = -x^2 + y^2
        assert_eq!(s, poly(&ring, &[(-1, &[2, 0, 0]), (1, &[0, 2, 0])]));
        assert_eq!(sig, Signature::new(1, Monomial::from_exps(&[1, 0, 0])));
    }

    #[test]
    fn one_side_reduction_respects_the_signature_bound() {
        let ring = ring_q3();
        let gens = cyclic_roots_ideal(&ring);
        let mord = pot3();
        let basis = Basis::init(&gens, &mord).unwrap();
        // f = y * f_2 = xyz - y^2 with signature y*e_2. The only reducer
        // whose scaled signature sits below y*e_2 is f_3 (z*e_3); f_1
        // would need x*e_1, which ranks above, and f_2 itself is excluded
        // because its scaled signature equals the bound.
        let f = ring.term_mul(
            &ring.field().one(),
            &Monomial::from_exps(&[0, 1, 0]),
            basis.member(1).poly(),
        );
        let sig = Signature::new(2, Monomial::from_exps(&[0, 1, 0]));
        let out = one_side_reduce(&ring, &basis, f, &sig, &mord);
        assert_eq!(out, poly(&ring, &[(-1, &[0, 2, 0]), (1, &[0, 0, 2])]));
    }

    #[test]
    fn queue_strategies_order_pops_differently() {
        let mord = pot3();
        let mk = |left: usize, right: usize, lcm: &[u16], sl: (u32, &[u16]), sr: (u32, &[u16])| {
            CriticalPair {
                left,
                right,
                t_left: Monomial::one(3),
                t_right: Monomial::one(3),
                lcm: Monomial::from_exps(lcm),
                sig_left: Signature::new(sl.0, Monomial::from_exps(sl.1)),
                sig_right: Signature::new(sr.0, Monomial::from_exps(sr.1)),
            }
        };
        let a = mk(0, 1, &[1, 0, 0], (1, &[1, 0, 0]), (2, &[0, 0, 0]));
        let b = mk(1, 2, &[0, 1, 1], (2, &[0, 0, 0]), (3, &[0, 0, 0]));
        let c = mk(0, 2, &[1, 1, 0], (1, &[0, 1, 0]), (3, &[0, 0, 0]));
        let fill = |q: &mut PairQueue| {
            q.push(c.clone());
            q.push(a.clone());
            q.push(b.clone());
        };
        let drain = |strategy: Strategy| {
            let mut q = PairQueue::new();
            fill(&mut q);
            let mut out = Vec::new();
            while let Some(p) = q.pop(strategy, &mord) {
                out.push((p.left, p.right));
            }
            out
        };
        assert_eq!(drain(Strategy::Fifo), vec![(0, 2), (0, 1), (1, 2)]);
        // POT ranks index-2 signatures below index-1: b pops first, then
        // the two index-1 pairs by base order y < x.
        assert_eq!(drain(Strategy::MinSignature), vec![(1, 2), (0, 2), (0, 1)]);
        assert_eq!(drain(Strategy::MinDegree), vec![(0, 1), (1, 2), (0, 2)]);
    }

    #[test]
    fn run_on_cyclic_roots_completes_and_is_groebner() {
        let ring = ring_q3();
        let gens = cyclic_roots_ideal(&ring);
        let config = EngineConfig {
            module_order: ModuleOrderKind::Pot,
            rewrite_order: RewriteOrderKind::F5,
            strategy: Strategy::MinSignature,
            ..EngineConfig::default()
        };
        let report = agc_run(&ring, &gens, &config).unwrap();
        assert_eq!(report.status, RunStatus::Complete);
        assert!(report.stats.is_consistent());
        assert!(report.all_pairs >= report.stats.seen);
        let polys: Vec<_> = report
            .basis
            .members()
            .iter()
            .filter(|m| !m.is_syzygy())
            .map(|m| m.poly().clone())
            .collect();
        assert!(crate::verify::is_groebner(&ring, &polys));
        for g in &gens {
            assert!(ring.normal_form(g, &polys).is_zero());
        }
    }

    #[test]
    fn rewrite_orders_agree_on_the_reduced_basis() {
        let ring = ring_q3();
        let gens = cyclic_roots_ideal(&ring);
        let mut reduced = Vec::new();
        for rewrite in [RewriteOrderKind::F5, RewriteOrderKind::Gvw] {
            for strategy in [Strategy::MinSignature, Strategy::MinDegree, Strategy::Fifo] {
                let config = EngineConfig {
                    module_order: ModuleOrderKind::Schreyer,
                    rewrite_order: rewrite,
                    strategy,
                    ..EngineConfig::default()
                };
                let report = agc_run(&ring, &gens, &config).unwrap();
                assert_eq!(report.status, RunStatus::Complete);
                let polys: Vec<_> = report
                    .basis
                    .members()
                    .iter()
                    .filter(|m| !m.is_syzygy())
                    .map(|m| m.poly().clone())
                    .collect();
                reduced.push(crate::verify::reduce_basis(&ring, &polys));
            }
        }
        for r in &reduced[1..] {
            assert_eq!(r, &reduced[0]);
        }
    }

    #[test]
    fn inverted_rewrite_order_trips_the_monitor_quickly() {
        let ring = ring_q3();
        let gens = cyclic_roots_ideal(&ring);
        let config = EngineConfig {
            module_order: ModuleOrderKind::Pot,
            rewrite_order: RewriteOrderKind::InsertionInverted,
            strategy: Strategy::MinSignature,
            ..EngineConfig::default()
        };
        match agc_run(&ring, &gens, &config) {
            Err(EngineError::Admissibility { insertion, .. }) => assert!(insertion <= 20),
            other => panic!("expected admissibility failure, got {other:?}"),
        }
    }

    #[test]
    fn caps_stop_the_run_with_partial_output() {
        let ring = ring_q3();
        let gens = cyclic_roots_ideal(&ring);
        let capped_pairs = EngineConfig {
            module_order: ModuleOrderKind::Pot,
            rewrite_order: RewriteOrderKind::F5,
            max_pairs: 1,
            ..EngineConfig::default()
        };
        let report = agc_run(&ring, &gens, &capped_pairs).unwrap();
        assert_eq!(report.status, RunStatus::CappedPairs);
        let capped_degree = EngineConfig {
            module_order: ModuleOrderKind::Pot,
            rewrite_order: RewriteOrderKind::F5,
            max_degree: 2,
            ..EngineConfig::default()
        };
        let report = agc_run(&ring, &gens, &capped_degree).unwrap();
        assert_eq!(report.status, RunStatus::CappedDegree);
    }
}
