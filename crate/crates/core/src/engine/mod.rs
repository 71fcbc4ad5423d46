//! Static and dynamic Buchberger drivers.
//!
//! The dynamic driver refines the term ordering as the basis grows: after
//! each nonzero reduction it filters the candidate leading terms of the
//! new polynomial through the boundary-vector and divisibility criteria,
//! ranks the survivors by the tentative Hilbert function, and walks them
//! in rank order, committing the first candidate whose linear program is
//! feasible and whose ordering can be made to preserve every previously
//! recorded leading term. When the filters leave no alternative, the
//! refiner stays off and the current ordering is kept unchanged.

mod pairs;

pub use pairs::{basis_pair, gebauer_moller_update, select_pair, CriticalPair, PairKind, Strategy};

use std::cmp::Ordering;

use crate::cones::{
    compute_boundary_vectors, constraints_among, feasible_weight, BoundaryVectorSet, Constraint,
    ConstraintSystem, RejectRegistry,
};
use crate::hilbert::{compare_candidates, hilbert_data, CandidateCmp, MonomialIdeal};
use crate::order::TermOrdering;
use crate::poly::{reduce, reduce_tracked, s_polynomial, Polynomial, SugarKind, TrackedPolynomial};
use crate::term::Term;

/// Operation counters, reported per run.
#[derive(Clone, Default, Debug, PartialEq, Eq)]
pub struct Stats {
    /// Candidate terms eliminated by the boundary-vector filter.
    pub rejected_by_corners: u64,
    /// Candidate constraint batches skipped via the rejects registry.
    pub rejected_by_disjoint_cones: u64,
    /// Candidate batches whose extended program was feasible.
    pub lps_solved: u64,
    /// Candidate batches whose extended program was infeasible.
    pub lps_failed: u64,
    /// Size of the live constraint system at the end of the run.
    pub constraint_count: u64,
    pub spolys_processed: u64,
    pub zero_reductions: u64,
    /// Candidate batches that reached the feasibility stage; equals
    /// lps_solved + lps_failed + rejected_by_disjoint_cones.
    pub candidate_batches: u64,
}

#[derive(Clone, Debug)]
pub struct StrategyConfig {
    pub strategy: Strategy,
    pub weighted_sugar: bool,
    pub use_boundary_vectors: bool,
    pub use_disjoint_cones: bool,
    /// Tie-breaking among Hilbert-equal candidates; 0 keeps the documented
    /// deterministic order.
    pub seed: u64,
    /// Full normal forms (every term reduced) versus top reduction only.
    pub full_reduction: bool,
}

impl Default for StrategyConfig {
    fn default() -> Self {
        StrategyConfig {
            strategy: Strategy::Normal,
            weighted_sugar: false,
            use_boundary_vectors: true,
            use_disjoint_cones: true,
            seed: 0,
            full_reduction: true,
        }
    }
}

/// Result of a completed run. `basis` is the reduced (interreduced, monic)
/// basis; `working_basis` and `recorded_lts` expose the raw state for the
/// lead-stability checks.
#[derive(Clone, Debug)]
pub struct RunResult {
    pub basis: Vec<Polynomial>,
    pub order: TermOrdering,
    pub stats: Stats,
    pub working_basis: Vec<Polynomial>,
    pub recorded_lts: Vec<Term>,
}

pub struct GBState {
    dynamic: bool,
    inputs: Vec<TrackedPolynomial>,
    pub basis: Vec<TrackedPolynomial>,
    pub recorded_lts: Vec<Term>,
    pub order: TermOrdering,
    pub lp: ConstraintSystem,
    pub psi: BoundaryVectorSet,
    pub rejects: RejectRegistry,
    pairs: Vec<CriticalPair>,
    pub stats: Stats,
    cfg: StrategyConfig,
    base_ideal: MonomialIdeal,
    next_age: u64,
    rng: u64,
}

fn xorshift(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

impl GBState {
    fn new(inputs: Vec<Polynomial>, order: TermOrdering, cfg: StrategyConfig, dynamic: bool) -> Self {
        assert!(!inputs.is_empty(), "empty input system");
        let nvars = inputs[0].nvars();
        for f in &inputs {
            assert!(!f.is_zero(), "zero polynomial among the inputs");
            assert_eq!(f.nvars(), nvars, "inputs from different rings");
        }
        let kind = if cfg.weighted_sugar {
            match order.weight() {
                Some(w) => SugarKind::Weighted(w.to_vec()),
                None => SugarKind::Standard,
            }
        } else {
            SugarKind::Standard
        };
        let tracked: Vec<TrackedPolynomial> = inputs
            .into_iter()
            .map(|p| TrackedPolynomial::input(p, &kind))
            .collect();
        let pairs: Vec<CriticalPair> = tracked
            .iter()
            .enumerate()
            .map(|(i, f)| CriticalPair {
                kind: PairKind::Input(i),
                lcm: f.poly.leading_term(&order).expect("nonzero").0.clone(),
                sugar: f.sugar,
                age: i as u64,
            })
            .collect();
        let next_age = pairs.len() as u64;
        GBState {
            dynamic,
            inputs: tracked,
            basis: Vec::new(),
            recorded_lts: Vec::new(),
            order,
            lp: ConstraintSystem::new(nvars),
            psi: BoundaryVectorSet::standard_basis(nvars),
            rejects: RejectRegistry::new(),
            pairs,
            stats: Stats::default(),
            cfg,
            base_ideal: MonomialIdeal::new(nvars, Vec::new()),
            next_age,
            rng: 0x9e3779b97f4a7c15,
        }
    }

    fn sugar_kind(&self) -> SugarKind {
        if self.cfg.weighted_sugar {
            match self.order.weight() {
                Some(w) => SugarKind::Weighted(w.to_vec()),
                None => SugarKind::Standard,
            }
        } else {
            SugarKind::Standard
        }
    }

    fn push_basis(&mut self, r: TrackedPolynomial, lead: Term) {
        let actual = r.poly.leading_term(&self.order).expect("nonzero").0;
        assert_eq!(
            actual, &lead,
            "recorded leading term must match the committed ordering"
        );
        self.base_ideal = self.base_ideal.adjoin(&lead);
        self.recorded_lts.push(lead);
        self.basis.push(r);
    }

    /// Candidate leading terms of `r`: the support filtered by boundary
    /// vectors (when enabled) and the divisibility criterion, ranked by
    /// the tentative Hilbert function.
    pub fn possible_lts(&mut self, r: &Polynomial) -> Vec<Term> {
        assert!(!r.is_zero(), "zero polynomial has no leading term");
        let t = r.leading_term(&self.order).expect("nonzero").0.clone();
        let supp: Vec<Term> = r.support().cloned().collect();
        let kept: Vec<Term> = if self.cfg.use_boundary_vectors {
            let others: Vec<Term> = supp.iter().filter(|u| **u != t).cloned().collect();
            let kept =
                crate::cones::filter_by_boundary_vectors(&self.psi, &t, &others);
            self.stats.rejected_by_corners += (supp.len() - kept.len()) as u64;
            kept
        } else {
            supp
        };
        // Divisibility criterion: a term that properly divides another
        // surviving term can never lead.
        let mut filtered: Vec<Term> = kept
            .iter()
            .filter(|u| !kept.iter().any(|v| u.properly_divides(v)))
            .cloned()
            .collect();
        filtered.sort_by(|a, b| self.order.compare(b, a));
        self.rank_candidates(filtered)
    }

    fn rank_candidates(&mut self, cands: Vec<Term>) -> Vec<Term> {
        if cands.len() <= 1 {
            return cands;
        }
        let data: Vec<_> = cands
            .iter()
            .map(|c| hilbert_data(&self.base_ideal.adjoin(c)))
            .collect();
        let mut idx: Vec<usize> = (0..cands.len()).collect();
        idx.sort_by(|&a, &b| match compare_candidates(&data[a], &data[b]) {
            CandidateCmp::ABetter => Ordering::Less,
            CandidateCmp::BBetter => Ordering::Greater,
            // Hilbert-equal candidates: prefer the lighter term under the
            // current weights (the refinement that moves the ordering the
            // least is attempted first), anchoring exact weight ties to a
            // fixed grevlex frame.
            CandidateCmp::Tie => cands[a]
                .total_degree()
                .cmp(&cands[b].total_degree())
                .then_with(|| match self.order.weight() {
                    Some(w) => cands[a].weighted_degree(w).cmp(&cands[b].weighted_degree(w)),
                    None => std::cmp::Ordering::Equal,
                })
                .then_with(|| TermOrdering::grevlex().compare(&cands[b], &cands[a])),
        });
        if self.cfg.seed != 0 {
            let mut start = 0;
            while start < idx.len() {
                let mut end = start + 1;
                while end < idx.len()
                    && compare_candidates(&data[idx[start]], &data[idx[end]])
                        == CandidateCmp::Tie
                {
                    end += 1;
                }
                for i in ((start + 1)..end).rev() {
                    let j = start + (xorshift(&mut self.rng) as usize) % (i - start + 1);
                    idx.swap(i, j);
                }
                start = end;
            }
        }
        idx.into_iter().map(|i| cands[i].clone()).collect()
    }

    /// Refines the ordering for the freshly reduced polynomial `r` and
    /// appends it to the basis. Every admitted candidate's constraint
    /// batch is settled by LP; the best-ranked feasible candidate that
    /// survives lead monitoring is committed. When nothing survives, the
    /// current lead is kept and the ordering is left untouched, which is
    /// always consistent.
    pub fn choose_an_ordering(&mut self, r: TrackedPolynomial) {
        let t_cur = r.poly.leading_term(&self.order).expect("nonzero").0.clone();
        let ranked = self.possible_lts(&r.poly);

        // Refiner off: when the filters leave no alternative to the
        // current lead there is nothing to decide, and no constraints are
        // added. Should a later refinement flip this lead, monitoring
        // restores it by adding the missing constraint then.
        if ranked.len() == 1 {
            debug_assert_eq!(ranked[0], t_cur);
            self.push_basis(r, t_cur);
            return;
        }

        for cand in &ranked {
            // Constraints only against the surviving rivals: filtered-out
            // terms cost nothing here, and monitoring repairs the rare
            // lead flip their absence can allow later.
            let batch = constraints_among(cand, &ranked);
            // A batch already inside the program can neither move the
            // ordering nor fail; committing the current lead outright
            // costs nothing.
            if *cand == t_cur && batch.iter().all(|c| self.lp.contains(c)) {
                self.push_basis(r, t_cur);
                return;
            }
            self.stats.candidate_batches += 1;
            if self.cfg.use_disjoint_cones && self.rejects.is_rejected(&batch, &self.lp) {
                self.stats.rejected_by_disjoint_cones += 1;
                continue;
            }
            let extended = self.lp.extended(&batch);
            let Some(tau) = feasible_weight(&extended) else {
                self.stats.lps_failed += 1;
                self.rejects.register(&batch);
                continue;
            };
            self.stats.lps_solved += 1;
            let mut items: Vec<(&Polynomial, &Term)> = self
                .basis
                .iter()
                .map(|g| &g.poly)
                .zip(self.recorded_lts.iter())
                .collect();
            items.push((&r.poly, cand));
            match monitor_lts(&items, tau, extended) {
                MonitorOutcome::Accepted { weight, system } => {
                    self.order = TermOrdering::weighted(weight.clone());
                    self.lp = system;
                    self.stats.constraint_count = self.lp.len() as u64;
                    if self.cfg.use_boundary_vectors {
                        let tau: Vec<f64> = weight.iter().map(|&w| w as f64).collect();
                        self.psi = compute_boundary_vectors(&self.lp, &tau);
                    }
                    debug_assert!(self.lp.verify_strict(&weight));
                    let lead = cand.clone();
                    self.push_basis(r, lead);
                    return;
                }
                MonitorOutcome::Rejected { added } => {
                    let mut failed = batch;
                    failed.extend(added);
                    self.rejects.register(&failed);
                }
            }
        }

        self.push_basis(r, t_cur);
    }

    fn step(&mut self) -> bool {
        if self.pairs.is_empty() {
            return false;
        }
        let kind = self.sugar_kind();
        let idx = select_pair(&self.pairs, self.cfg.strategy, &self.order, &kind);
        let pair = self.pairs.swap_remove(idx);
        let sp = match pair.kind {
            PairKind::Input(i) => self.inputs[i].clone(),
            PairKind::Basis(i, j) => TrackedPolynomial {
                poly: s_polynomial(&self.order, &self.basis[i].poly, &self.basis[j].poly),
                sugar: pair.sugar,
            },
        };
        self.stats.spolys_processed += 1;
        let reduced = reduce_tracked(&self.order, &sp, &self.basis, &kind, self.cfg.full_reduction);
        if reduced.poly.is_zero() {
            self.stats.zero_reductions += 1;
            return true;
        }
        let prim = TrackedPolynomial {
            poly: reduced.poly.primitive_part(&self.order),
            sugar: reduced.sugar,
        };
        let new_idx = self.basis.len();
        if self.dynamic {
            self.choose_an_ordering(prim);
        } else {
            let lead = prim
                .poly
                .leading_term(&self.order)
                .expect("nonzero")
                .0
                .clone();
            self.push_basis(prim, lead);
        }
        let kind = self.sugar_kind();
        gebauer_moller_update(
            &mut self.pairs,
            &self.basis,
            &self.recorded_lts,
            new_idx,
            &kind,
            &mut self.next_age,
        );
        true
    }

    fn finish(mut self) -> RunResult {
        self.stats.constraint_count = self.lp.len() as u64;
        let working_basis: Vec<Polynomial> =
            self.basis.iter().map(|g| g.poly.clone()).collect();
        let basis = interreduce(&working_basis, &self.order);
        RunResult {
            basis,
            order: self.order,
            stats: self.stats,
            working_basis,
            recorded_lts: self.recorded_lts,
        }
    }
}

/// Outcome of lead monitoring: either a verified integer ordering under
/// which every recorded lead is preserved, or the constraints that made
/// preservation impossible.
#[derive(Clone, Debug)]
pub enum MonitorOutcome {
    Accepted {
        weight: Vec<i64>,
        system: ConstraintSystem,
    },
    Rejected {
        added: Vec<Constraint>,
    },
}

/// Ensures required leading terms stay invariant under a candidate
/// ordering. `items` pairs each polynomial with the lead it must keep:
/// the working basis with its recorded leads, plus the newest polynomial
/// with the candidate lead under consideration. While some item changes
/// lead, the separating constraint is appended and the program re-solved;
/// the result is a compromise ordering whenever one exists.
pub fn monitor_lts(
    items: &[(&Polynomial, &Term)],
    tau: Vec<i64>,
    system: ConstraintSystem,
) -> MonitorOutcome {
    let mut system = system;
    let mut weight = tau;
    let mut added: Vec<Constraint> = Vec::new();
    loop {
        let order = TermOrdering::weighted(weight.clone());
        let mut progressed = false;
        for (g, rec) in items {
            let lead = g.leading_term(&order).expect("nonzero").0;
            if lead == *rec {
                continue;
            }
            let diff: Vec<i64> = rec
                .exponents()
                .iter()
                .zip(lead.exponents())
                .map(|(&a, &b)| a as i64 - b as i64)
                .collect();
            let c = Constraint::canonical(diff).expect("distinct leads differ");
            if system.insert(c.clone()) {
                added.push(c);
                progressed = true;
            }
        }
        if !progressed {
            return MonitorOutcome::Accepted { weight, system };
        }
        match feasible_weight(&system) {
            Some(w) => weight = w,
            None => return MonitorOutcome::Rejected { added },
        }
    }
}

/// Dynamic Buchberger: computes a basis and an ordering together, starting
/// from the uniform weight vector with grevlex tie-break.
pub fn dynamic_run(inputs: &[Polynomial], cfg: &StrategyConfig) -> RunResult {
    let nvars = inputs.first().map(|p| p.nvars()).unwrap_or(0);
    let order = TermOrdering::weighted(vec![1; nvars.max(1)]);
    let mut state = GBState::new(inputs.to_vec(), order, cfg.clone(), true);
    while state.step() {}
    state.finish()
}

/// Classical Buchberger under a fixed ordering, with the same pair
/// handling and pruning.
pub fn static_run(inputs: &[Polynomial], order: &TermOrdering, cfg: &StrategyConfig) -> RunResult {
    let mut state = GBState::new(inputs.to_vec(), order.clone(), cfg.clone(), false);
    while state.step() {}
    state.finish()
}

/// Brute-force Gröbner check: every S-polynomial of two basis elements
/// must reduce to zero modulo the basis.
pub fn is_groebner_oracle(basis: &[Polynomial], order: &TermOrdering) -> bool {
    let nonzero: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    for i in 0..nonzero.len() {
        for j in (i + 1)..nonzero.len() {
            let sp = s_polynomial(order, nonzero[i], nonzero[j]);
            let owned: Vec<Polynomial> = nonzero.iter().map(|g| (*g).clone()).collect();
            if !reduce(order, &sp, &owned).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Reduced basis: minimal leads, fully reduced tails, monic, sorted by
/// ascending leading term.
pub fn interreduce(basis: &[Polynomial], order: &TermOrdering) -> Vec<Polynomial> {
    let mut polys: Vec<Polynomial> = basis.iter().filter(|p| !p.is_zero()).cloned().collect();
    polys.sort_by(|a, b| {
        let ta = a.leading_term(order).expect("nonzero").0;
        let tb = b.leading_term(order).expect("nonzero").0;
        order.compare(ta, tb)
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in polys {
        let t = p.leading_term(order).expect("nonzero").0;
        if !minimal
            .iter()
            .any(|q| q.leading_term(order).expect("nonzero").0.divides(t))
        {
            minimal.push(p);
        }
    }
    let mut out: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let r = reduce(order, &minimal[i], &others);
        assert!(!r.is_zero(), "minimal element reduced to zero");
        out.push(r.monic(order));
    }
    out.sort_by(|a, b| {
        let ta = a.leading_term(order).expect("nonzero").0;
        let tb = b.leading_term(order).expect("nonzero").0;
        order.compare(ta, tb)
    });
    out
}

/// Number of distinct terms across a basis.
pub fn distinct_term_count(basis: &[Polynomial]) -> usize {
    let mut seen = std::collections::BTreeSet::new();
    for p in basis {
        for t in p.support() {
            seen.insert(t.clone());
        }
    }
    seen.len()
}
