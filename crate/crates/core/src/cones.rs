//! Constraint systems over term-order cones.
//!
//! A cone is described by integer constraint vectors c, each meaning
//! c . y > 0, together with the implicit positivity y_k > 0. Solving goes
//! through the perturbed program where every strict inequality becomes
//! ">= epsilon": the perturbed program is feasible exactly when the strict
//! system is, and its solutions sit strictly inside the cone, which is
//! what the floating-point comparisons downstream need.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::Polynomial;
use crate::simplex::{solve_lp, LpOutcome, LpProblem, Rel, Sense};
use crate::term::Term;

/// A single linear constraint c with meaning c . y > 0, kept in canonical
/// form: entries divided by the gcd of their absolute values.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Constraint {
    coeffs: Vec<i64>,
}

impl Constraint {
    /// Canonicalizes a raw coefficient vector. `None` for the zero vector.
    pub fn canonical(coeffs: Vec<i64>) -> Option<Constraint> {
        let mut g: i64 = 0;
        for &c in &coeffs {
            g = g.gcd(&c);
        }
        if g == 0 {
            return None;
        }
        Some(Constraint {
            coeffs: coeffs.iter().map(|&c| c / g).collect(),
        })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Constraints with no negative entry are implied by positivity.
    pub fn is_positivity_implied(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Exact evaluation of c . w.
    pub fn dot(&self, w: &[i64]) -> i128 {
        self.coeffs
            .iter()
            .zip(w)
            .map(|(&c, &x)| c as i128 * x as i128)
            .sum()
    }
}

/// Ordered, deduplicated set of canonical constraints plus the perturbation
/// epsilon used when solving.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    n: usize,
    epsilon: f64,
    items: Vec<Constraint>,
    seen: BTreeSet<Vec<i64>>,
}

impl ConstraintSystem {
    pub fn new(n: usize) -> Self {
        ConstraintSystem::with_epsilon(n, 1.0)
    }

    /// `epsilon = 0.0` turns every solve into one over the closure of the
    /// cone; used to reproduce cross-section geometry exactly in tests.
    pub fn with_epsilon(n: usize, epsilon: f64) -> Self {
        assert!(epsilon >= 0.0);
        ConstraintSystem {
            n,
            epsilon,
            items: Vec::new(),
            seen: BTreeSet::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Constraint> {
        self.items.iter()
    }

    pub fn contains(&self, c: &Constraint) -> bool {
        self.seen.contains(&c.coeffs)
    }

    /// Inserts a canonical constraint; returns false if already present.
    pub fn insert(&mut self, c: Constraint) -> bool {
        assert_eq!(c.dim(), self.n, "constraint dimension mismatch");
        if self.seen.insert(c.coeffs.clone()) {
            self.items.push(c);
            true
        } else {
            false
        }
    }

    pub fn extended(&self, batch: &[Constraint]) -> ConstraintSystem {
        let mut sys = self.clone();
        for c in batch {
            sys.insert(c.clone());
        }
        sys
    }

    /// Exact check that integer weights satisfy every constraint strictly
    /// and are strictly positive.
    pub fn verify_strict(&self, w: &[i64]) -> bool {
        w.len() == self.n
            && w.iter().all(|&x| x >= 1)
            && self.items.iter().all(|c| c.dot(w) >= 1)
    }
}

/// The constraint set forcing `t` to beat every other term of `r`:
/// { y . (t - u) > 0 : u in supp(r) \ {t} }, canonicalized, deduplicated,
/// with positivity-implied rows (the u | t cases) dropped.
pub fn constraints_for(t: &Term, r: &Polynomial) -> Vec<Constraint> {
    assert!(
        r.coefficient(t).is_some(),
        "candidate term is not in the support"
    );
    let supp: Vec<Term> = r.support().cloned().collect();
    constraints_among(t, &supp)
}

/// Same constraint set but against an explicit list of rival terms; the
/// engine passes the filter survivors here so the program only grows by
/// constraints that decide an actual choice.
pub fn constraints_among(t: &Term, rivals: &[Term]) -> Vec<Constraint> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for u in rivals {
        if u == t {
            continue;
        }
        let diff: Vec<i64> = t
            .exponents()
            .iter()
            .zip(u.exponents())
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect();
        let c = Constraint::canonical(diff).expect("distinct terms give a nonzero difference");
        if c.is_positivity_implied() {
            continue;
        }
        if seen.insert(c.coeffs.clone()) {
            out.push(c);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub enum SimplexOutcome {
    Feasible { point: Vec<f64>, objective: f64 },
    Infeasible,
    Unbounded,
}

/// Solves over { c . y >= eps } + { y_k >= eps } + an optional equality,
/// by substituting z = y - eps and running the two-phase simplex.
pub fn solve(
    sys: &ConstraintSystem,
    objective: &[f64],
    sense: Sense,
    extra_equality: Option<(&[f64], f64)>,
) -> SimplexOutcome {
    let n = sys.dim();
    assert_eq!(objective.len(), n);
    let eps = sys.epsilon();
    let mut rows: Vec<(Vec<f64>, Rel, f64)> = Vec::with_capacity(sys.len() + 1);
    for c in sys.iter() {
        let coeffs: Vec<f64> = c.coeffs().iter().map(|&x| x as f64).collect();
        let sum: f64 = coeffs.iter().sum();
        rows.push((coeffs, Rel::Ge, eps * (1.0 - sum)));
    }
    if let Some((v, rhs)) = extra_equality {
        assert_eq!(v.len(), n);
        let sum: f64 = v.iter().sum();
        rows.push((v.to_vec(), Rel::Eq, rhs - eps * sum));
    }
    let problem = LpProblem {
        nvars: n,
        rows,
        objective: objective.to_vec(),
        sense,
    };
    match solve_lp(&problem) {
        LpOutcome::Infeasible { .. } => SimplexOutcome::Infeasible,
        LpOutcome::Unbounded => SimplexOutcome::Unbounded,
        LpOutcome::Optimal { point, .. } => {
            let y: Vec<f64> = point.iter().map(|z| z + eps).collect();
            let objective = objective.iter().zip(&y).map(|(c, x)| c * x).sum();
            SimplexOutcome::Feasible {
                point: y,
                objective,
            }
        }
    }
}

/// Floating solve of the perturbed program, minimizing the coordinate sum,
/// keeping the phase-1 gap on infeasibility.
fn mlp_float(sys: &ConstraintSystem) -> LpOutcome<f64> {
    let n = sys.dim();
    let eps = sys.epsilon();
    let rows: Vec<(Vec<f64>, Rel, f64)> = sys
        .iter()
        .map(|c| {
            let coeffs: Vec<f64> = c.coeffs().iter().map(|&x| x as f64).collect();
            let sum: f64 = coeffs.iter().sum();
            (coeffs, Rel::Ge, eps * (1.0 - sum))
        })
        .collect();
    solve_lp(&LpProblem {
        nvars: n,
        rows,
        objective: vec![1.0; n],
        sense: Sense::Minimize,
    })
}

/// Exact-rational solve of the perturbed program with eps = 1, minimizing
/// the coordinate sum. Returns a strictly positive rational point.
fn solve_exact_mlp(sys: &ConstraintSystem) -> Option<Vec<BigRational>> {
    let n = sys.dim();
    let one = BigRational::one();
    let rows: Vec<(Vec<BigRational>, Rel, BigRational)> = sys
        .iter()
        .map(|c| {
            let coeffs: Vec<BigRational> = c
                .coeffs()
                .iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect();
            let sum = coeffs.iter().fold(BigRational::zero(), |a, b| a + b.clone());
            (coeffs, Rel::Ge, one.clone() - sum)
        })
        .collect();
    let problem = LpProblem {
        nvars: n,
        rows,
        objective: vec![one.clone(); n],
        sense: Sense::Minimize,
    };
    match solve_lp(&problem) {
        LpOutcome::Optimal { point, .. } => {
            Some(point.into_iter().map(|z| z + one.clone()).collect())
        }
        LpOutcome::Infeasible { .. } => None,
        LpOutcome::Unbounded => unreachable!("sum of positive coordinates is bounded below"),
    }
}

fn integer_candidate(point: &[f64], scale: f64) -> Option<Vec<i64>> {
    let mut w: Vec<i64> = Vec::with_capacity(point.len());
    for &x in point {
        let v = (x * scale).round();
        if !v.is_finite() || v.abs() > 9e17 {
            return None;
        }
        w.push((v as i64).max(1));
    }
    let mut g: i64 = 0;
    for &x in &w {
        g = g.gcd(&x);
    }
    if g > 1 {
        for x in w.iter_mut() {
            *x /= g;
        }
    }
    Some(w)
}

fn rational_to_weights(point: &[BigRational]) -> Vec<i64> {
    let mut denom_lcm = BigInt::one();
    for x in point {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = point
        .iter()
        .map(|x| x.numer() * (&denom_lcm / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    ints
        .iter()
        .map(|x| (x / &g).to_i64().expect("weight fits in i64"))
        .collect()
}

/// Phase-1 gaps above this are taken as unambiguous infeasibility; at or
/// below it the exact rational simplex gets the final word. Constraint
/// data is integer and epsilon is 1, so genuine feasibility drives the
/// phase-1 optimum to exactly zero.
const INFEASIBILITY_GAP_TOL: f64 = 1e-6;

/// Decides feasibility of the strict system and produces an integer weight
/// vector when feasible. The floating solve is only a guide: any returned
/// vector has been verified against every constraint in exact integer
/// arithmetic, and a floating "infeasible" without a clear phase-1 gap is
/// confirmed by the exact rational simplex before being believed.
pub fn feasible_weight(sys: &ConstraintSystem) -> Option<Vec<i64>> {
    match mlp_float(sys) {
        LpOutcome::Optimal { point, .. } => {
            let point: Vec<f64> = point.iter().map(|z| z + sys.epsilon()).collect();
            for k in [3u32, 6, 12] {
                if let Some(w) = integer_candidate(&point, 10f64.powi(k as i32)) {
                    if sys.verify_strict(&w) {
                        return Some(w);
                    }
                }
            }
        }
        LpOutcome::Infeasible { gap } if gap > INFEASIBILITY_GAP_TOL => return None,
        _ => {}
    }
    // Exact fallback: authoritative in both directions.
    let exact = solve_exact_mlp(sys)?;
    let w = rational_to_weights(&exact);
    assert!(
        sys.verify_strict(&w),
        "exact solution must verify strictly"
    );
    Some(w)
}

/// At most 2n vectors approximating the boundary vectors of a cone: the
/// extreme points maximizing and minimizing each coordinate on the
/// cross-section with the hyperplane sum(y) = d.
#[derive(Clone, Debug)]
pub struct BoundaryVectorSet {
    vectors: Vec<Vec<f64>>,
    level_d: f64,
}

impl BoundaryVectorSet {
    pub fn from_vectors(vectors: Vec<Vec<f64>>, level_d: f64) -> Self {
        BoundaryVectorSet { vectors, level_d }
    }

    /// The initial approximation: the standard basis vectors.
    pub fn standard_basis(n: usize) -> Self {
        let mut vectors = Vec::with_capacity(n);
        for k in 0..n {
            let mut v = vec![0.0; n];
            v[k] = 1.0;
            vectors.push(v);
        }
        BoundaryVectorSet {
            vectors,
            level_d: 1.0,
        }
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn level(&self) -> f64 {
        self.level_d
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

const DEDUP_TOL: f64 = 1e-7;

/// Cross-section extreme points at level d = 1 + sum(tau), per the
/// standard construction from a solution tau of the program.
pub fn compute_boundary_vectors(sys: &ConstraintSystem, tau: &[f64]) -> BoundaryVectorSet {
    let d = 1.0 + tau.iter().sum::<f64>();
    compute_boundary_vectors_at(sys, d)
}

/// Same with an explicit hyperplane level (useful for tests).
///
/// The cross-section is solved under a perturbation that is tiny relative
/// to the hyperplane level: the returned points must sit just inside the
/// cone (so that downstream sign tests cannot be fooled by exact zeros)
/// while staying essentially at the extreme points. The feasibility
/// epsilon of `sys` is far too coarse for that role and is capped here.
pub fn compute_boundary_vectors_at(sys: &ConstraintSystem, d: f64) -> BoundaryVectorSet {
    let sys = &ConstraintSystem {
        epsilon: sys.epsilon.min(d * 1e-7),
        ..sys.clone()
    };
    let n = sys.dim();
    let ones = vec![1.0; n];
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(2 * n);
    for k in 0..n {
        let mut objective = vec![0.0; n];
        objective[k] = 1.0;
        for sense in [Sense::Maximize, Sense::Minimize] {
            match solve(sys, &objective, sense, Some((&ones, d))) {
                SimplexOutcome::Feasible { point, .. } => {
                    let dup = vectors.iter().any(|v| {
                        v.iter()
                            .zip(&point)
                            .all(|(a, b)| (a - b).abs() <= DEDUP_TOL)
                    });
                    if !dup {
                        vectors.push(point);
                    }
                }
                other => panic!(
                    "cross-section solve failed on a feasible cone: {:?}",
                    other
                ),
            }
        }
    }
    BoundaryVectorSet {
        vectors,
        level_d: d,
    }
}

/// Keeps t plus every u some boundary vector weighs above t. Terms weighed
/// below t by all of psi cannot lead within the cone and are dropped.
pub fn filter_by_boundary_vectors(
    psi: &BoundaryVectorSet,
    t: &Term,
    candidates: &[Term],
) -> Vec<Term> {
    let mut out = vec![t.clone()];
    for u in candidates {
        if u == t {
            continue;
        }
        let keep = psi.vectors().iter().any(|v| {
            let dot: f64 = v
                .iter()
                .zip(u.exponents().iter().zip(t.exponents()))
                .map(|(psi_k, (&ue, &te))| psi_k * (ue as f64 - te as f64))
                .sum();
            dot > 0.0
        });
        if keep {
            out.push(u.clone());
        }
    }
    out
}

/// Constraint sets already known to be inconsistent with the current
/// program lineage. Bounded FIFO; membership is by set inclusion.
#[derive(Clone, Debug)]
pub struct RejectRegistry {
    stored: VecDeque<BTreeSet<Vec<i64>>>,
    cap: usize,
}

pub const REJECTS_CAP: usize = 1024;

impl RejectRegistry {
    pub fn new() -> Self {
        RejectRegistry {
            stored: VecDeque::new(),
            cap: REJECTS_CAP,
        }
    }

    pub fn len(&self) -> usize {
        self.stored.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stored.is_empty()
    }

    /// Records a constraint set whose union with the (then consistent)
    /// base program was infeasible. Empty sets are rejected: an empty
    /// extension cannot make a consistent program infeasible.
    pub fn register(&mut self, failed: &[Constraint]) -> bool {
        if failed.is_empty() {
            return false;
        }
        let set: BTreeSet<Vec<i64>> = failed.iter().map(|c| c.coeffs.clone()).collect();
        if self.stored.contains(&set) {
            return true;
        }
        if self.stored.len() == self.cap {
            self.stored.pop_front();
        }
        self.stored.push_back(set);
        true
    }

    /// True when some stored set is contained in base + candidate; the
    /// stored set was infeasible against an earlier (smaller) base, so the
    /// extended program is infeasible too.
    pub fn is_rejected(&self, candidate: &[Constraint], base: &ConstraintSystem) -> bool {
        if self.stored.is_empty() {
            return false;
        }
        let cand: BTreeSet<&[i64]> = candidate.iter().map(|c| c.coeffs()).collect();
        self.stored.iter().any(|set| {
            set.iter()
                .all(|c| cand.contains(c.as_slice()) || base.seen.contains(c))
        })
    }
}

impl Default for RejectRegistry {
    fn default() -> Self {
        RejectRegistry::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn c(v: &[i64]) -> Constraint {
        Constraint::canonical(v.to_vec()).unwrap()
    }

    #[test]
    fn canonical_divides_by_gcd() {
        assert_eq!(c(&[0, 2, 0, -2]).coeffs(), &[0, 1, 0, -1]);
        assert_eq!(c(&[3, -6, 9]).coeffs(), &[1, -2, 3]);
        assert_eq!(c(&[0, 1, 0, -1]).coeffs(), &[0, 1, 0, -1]);
        assert!(Constraint::canonical(vec![0, 0]).is_none());
    }

    #[test]
    fn constraints_for_collapses_multiples() {
        // r = x2^2 - 2 x2 x4 - x4^2, t = x2^2: the two raw rows are
        // y2 - y4 and 2y2 - 2y4; one canonical constraint survives.
        let r = Polynomial::from_int_terms(
            4,
            vec![
                (1, vec![0, 2, 0, 0]),
                (-2, vec![0, 1, 0, 1]),
                (-1, vec![0, 0, 0, 2]),
            ],
        );
        let t = Term::new(vec![0, 2, 0, 0]);
        let got = constraints_for(&t, &r);
        assert_eq!(got, vec![c(&[0, 1, 0, -1])]);
    }

    #[test]
    fn constraints_for_drops_positivity_implied() {
        // x1x2x3x4 - 1 with t the full product: (1,1,1,1) is implied by
        // positivity, so nothing remains.
        let r = Polynomial::from_int_terms(
            4,
            vec![(1, vec![1, 1, 1, 1]), (-1, vec![0, 0, 0, 0])],
        );
        let t = Term::new(vec![1, 1, 1, 1]);
        assert!(constraints_for(&t, &r).is_empty());

        let m = Polynomial::from_int_terms(2, vec![(5, vec![1, 2])]);
        assert!(constraints_for(&Term::new(vec![1, 2]), &m).is_empty());
    }

    #[test]
    #[should_panic(expected = "not in the support")]
    fn constraints_for_requires_support_membership() {
        let r = Polynomial::from_int_terms(2, vec![(1, vec![1, 0])]);
        constraints_for(&Term::new(vec![0, 1]), &r);
    }

    #[test]
    fn solve_example_cone() {
        let mut sys = ConstraintSystem::new(3);
        sys.insert(c(&[2, -1, 0]));
        sys.insert(c(&[-1, 4, 0]));
        sys.insert(c(&[1, 1, -3]));
        sys.insert(c(&[0, -1, 1]));
        match solve(&sys, &[1.0, 1.0, 1.0], Sense::Minimize, None) {
            SimplexOutcome::Feasible { point, .. } => {
                for cc in sys.iter() {
                    let v: f64 = cc
                        .coeffs()
                        .iter()
                        .zip(&point)
                        .map(|(&a, &y)| a as f64 * y)
                        .sum();
                    assert!(v >= 1.0 - 1e-6, "constraint value {} below epsilon", v);
                }
                assert!(point.iter().all(|&y| y >= 1.0 - 1e-6));
            }
            other => panic!("expected feasible, got {:?}", other),
        }
    }

    #[test]
    fn solve_infeasible_pair() {
        let mut sys = ConstraintSystem::new(2);
        sys.insert(c(&[1, -1]));
        sys.insert(c(&[-1, 1]));
        assert_eq!(
            solve(&sys, &[1.0, 1.0], Sense::Minimize, None),
            SimplexOutcome::Infeasible
        );
    }

    #[test]
    fn solve_one_dimensional() {
        let sys = ConstraintSystem::new(1);
        match solve(&sys, &[1.0], Sense::Minimize, None) {
            SimplexOutcome::Feasible { point, .. } => {
                assert!((point[0] - 1.0).abs() < 1e-9);
            }
            other => panic!("expected feasible, got {:?}", other),
        }
    }

    #[test]
    fn feasible_weight_cyclic4_first_choice() {
        // Choosing x1 as the lead of x1+x2+x3+x4.
        let mut sys = ConstraintSystem::new(4);
        sys.insert(c(&[1, -1, 0, 0]));
        sys.insert(c(&[1, 0, -1, 0]));
        sys.insert(c(&[1, 0, 0, -1]));
        let w = feasible_weight(&sys).expect("feasible");
        assert!(w[0] > w[1] && w[0] > w[2] && w[0] > w[3]);
        assert!(w.iter().all(|&x| x >= 1));
        // The textbook choice passes the exact verifier.
        assert!(sys.verify_strict(&[2, 1, 1, 1]));
    }

    #[test]
    fn feasible_weight_trivial_and_infeasible() {
        let empty = ConstraintSystem::new(3);
        assert_eq!(feasible_weight(&empty), Some(vec![1, 1, 1]));

        let mut sys = ConstraintSystem::new(2);
        sys.insert(c(&[1, -1]));
        sys.insert(c(&[-1, 1]));
        assert_eq!(feasible_weight(&sys), None);
    }

    #[test]
    fn boundary_vectors_of_example_cone() {
        // Cross-section at d = 30 of the closure of the example cone.
        let mut sys = ConstraintSystem::with_epsilon(3, 0.0);
        sys.insert(c(&[2, -1, 0]));
        sys.insert(c(&[-1, 4, 0]));
        sys.insert(c(&[1, 1, -3]));
        sys.insert(c(&[0, -1, 1]));
        let psi = compute_boundary_vectors_at(&sys, 30.0);
        let expected = [
            [15.0, 7.5, 7.5],
            [20.0, 5.0, 5.0],
            [18.0, 4.5, 7.5],
        ];
        assert_eq!(psi.len(), 3);
        for e in &expected {
            assert!(
                psi.vectors().iter().any(|v| v
                    .iter()
                    .zip(e)
                    .all(|(a, b)| (a - b).abs() <= 1e-6)),
                "missing boundary vector {:?} in {:?}",
                e,
                psi.vectors()
            );
        }
    }

    #[test]
    fn boundary_vectors_one_var() {
        let sys = ConstraintSystem::new(1);
        let psi = compute_boundary_vectors_at(&sys, 5.0);
        assert_eq!(psi.len(), 1);
        assert!((psi.vectors()[0][0] - 5.0).abs() < 1e-9);
    }

    #[test]
    fn boundary_vectors_positivity_only() {
        let sys = ConstraintSystem::with_epsilon(2, 0.0);
        let psi = compute_boundary_vectors_at(&sys, 2.0);
        assert_eq!(psi.len(), 2);
        for v in psi.vectors() {
            assert!((v[0] + v[1] - 2.0).abs() < 1e-9);
            assert!(v.iter().all(|&x| x >= -1e-9));
        }
    }

    #[test]
    fn filter_keeps_candidates_some_vector_favors() {
        // omega = (2,1), r = x^2 + x + y, t = y: both x^2 and x stay.
        let psi = BoundaryVectorSet {
            vectors: vec![vec![2.0, 1.0]],
            level_d: 3.0,
        };
        let t = Term::new(vec![0, 1]);
        let u1 = Term::new(vec![2, 0]);
        let u2 = Term::new(vec![1, 0]);
        let kept = filter_by_boundary_vectors(&psi, &t, &[u1.clone(), u2.clone()]);
        assert_eq!(kept, vec![t.clone(), u1, u2]);
    }

    #[test]
    fn filter_trivial_cases() {
        let psi = BoundaryVectorSet {
            vectors: vec![vec![1.0, 1.0]],
            level_d: 2.0,
        };
        let t = Term::new(vec![2, 2]);
        // every candidate weighed strictly below t
        let kept = filter_by_boundary_vectors(&psi, &t, &[Term::new(vec![1, 1])]);
        assert_eq!(kept, vec![t.clone()]);
        assert_eq!(filter_by_boundary_vectors(&psi, &t, &[]), vec![t]);
    }

    #[test]
    fn reject_registry_inclusion() {
        let mut reg = RejectRegistry::new();
        assert!(!reg.register(&[]));
        assert!(reg.register(&[c(&[1, -1])]));
        assert!(reg.register(&[c(&[1, -1])]));
        assert_eq!(reg.len(), 1);

        let base = ConstraintSystem::new(2);
        // stored {c1} subset of candidate {c1, c2}
        assert!(reg.is_rejected(&[c(&[1, -1]), c(&[-1, 1])], &base));
        // candidate {c2} without c1 anywhere
        assert!(!reg.is_rejected(&[c(&[-1, 1])], &base));
        // stored constraint supplied by the base instead
        let mut base2 = ConstraintSystem::new(2);
        base2.insert(c(&[1, -1]));
        assert!(reg.is_rejected(&[c(&[-1, 1])], &base2));

        let empty = RejectRegistry::new();
        assert!(!empty.is_rejected(&[c(&[1, -1])], &base));
    }
}
