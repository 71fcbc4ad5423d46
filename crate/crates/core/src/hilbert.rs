//! Hilbert series of monomial ideals and the comparator the engine uses to
//! rank candidate leading terms.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::term::Term;

/// A monomial ideal held by its minimal generating set: no generator
/// divides another.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Term>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Term>) -> Self {
        let mut gens = gens;
        gens.sort_by_key(|t| (t.total_degree(), t.exponents().to_vec()));
        gens.dedup();
        let mut minimal: Vec<Term> = Vec::with_capacity(gens.len());
        for g in gens {
            assert_eq!(g.nvars(), nvars, "generator dimension mismatch");
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            nvars,
            gens: minimal,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Term] {
        &self.gens
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.gens.iter().any(|g| g.divides(t))
    }

    /// Minimal generators of the ideal plus one extra term.
    pub fn adjoin(&self, t: &Term) -> MonomialIdeal {
        if self.contains(t) {
            return self.clone();
        }
        let mut gens: Vec<Term> = self
            .gens
            .iter()
            .filter(|g| !t.divides(g))
            .cloned()
            .collect();
        gens.push(t.clone());
        gens.sort_by_key(|u| (u.total_degree(), u.exponents().to_vec()));
        MonomialIdeal {
            nvars: self.nvars,
            gens,
        }
    }
}

/// Dense integer polynomial in one variable t; coeffs[i] is the
/// coefficient of t^i. No trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    /// 1 - t^d
    fn one_minus_power(d: u32) -> Self {
        if d == 0 {
            return IntPoly::zero();
        }
        let mut coeffs = vec![0i64; d as usize + 1];
        coeffs[0] = 1;
        coeffs[d as usize] = -1;
        IntPoly { coeffs }
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPoly { coeffs }.trim()
    }

    fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly { coeffs }.trim()
    }

    /// t^d * self
    fn shift(&self, d: u32) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![0i64; d as usize];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Exact division by (1 - t); panics if it does not divide.
    fn div_one_minus_t(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        // (1 - t) * q = self with q_i = self_0 + ... + self_i
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut acc = 0i64;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i == self.coeffs.len() - 1 {
                assert_eq!(acc + c, 0, "(1 - t) does not divide");
                break;
            }
            acc += c;
            q.push(acc);
        }
        IntPoly { coeffs: q }.trim()
    }
}

/// Numerator N(t) of the Hilbert series of R/I over (1-t)^n, computed by
/// pivot recursion: split on a variable occurring in the most generators,
/// with N(I) = N(I + (p)) + t^deg(p) * N(I : p).
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> IntPoly {
    numerator_rec(ideal.gens(), ideal.nvars())
}

fn numerator_rec(gens: &[Term], nvars: usize) -> IntPoly {
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.len() == 1 {
        return IntPoly::one_minus_power(gens[0].total_degree());
    }
    let pure = gens
        .iter()
        .all(|g| g.exponents().iter().filter(|&&e| e > 0).count() <= 1);
    if pure {
        let mut acc = IntPoly::one();
        for g in gens {
            acc = acc.mul(&IntPoly::one_minus_power(g.total_degree()));
        }
        return acc;
    }
    // Pivot: the variable hitting the most generators, restricted to
    // variables of non-pure-power generators so both branches shrink.
    let mut counts = vec![0usize; nvars];
    let mut eligible = vec![false; nvars];
    for g in gens {
        let mixed = g.exponents().iter().filter(|&&e| e > 0).count() > 1;
        for (j, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[j] += 1;
                if mixed {
                    eligible[j] = true;
                }
            }
        }
    }
    let pivot_var = (0..nvars)
        .filter(|&j| eligible[j])
        .max_by_key(|&j| counts[j])
        .expect("a non-pure-power generator exists past the base case");

    // I + (x_j): generators outside x_j, plus x_j itself.
    let mut plus: Vec<Term> = gens
        .iter()
        .filter(|g| g.exponent(pivot_var) == 0)
        .cloned()
        .collect();
    plus.push(Term::var_pow(nvars, pivot_var, 1));

    // I : x_j, re-minimalized.
    let quotient: Vec<Term> = gens
        .iter()
        .map(|g| {
            let mut exps = g.exponents().to_vec();
            exps[pivot_var] = exps[pivot_var].saturating_sub(1);
            Term::new(exps)
        })
        .collect();
    let quotient = MonomialIdeal::new(nvars, quotient);

    numerator_rec(&plus_minimal(plus, nvars), nvars)
        .add(&numerator_rec(quotient.gens(), nvars).shift(1))
}

fn plus_minimal(gens: Vec<Term>, nvars: usize) -> Vec<Term> {
    MonomialIdeal::new(nvars, gens).gens.clone()
}

/// Hilbert series data in the form the candidate comparator needs: the
/// reduced numerator Q(t) with Q(1) != 0 over (1-t)^m, and the Hilbert
/// polynomial derived from it. `hp_degree` is -1 when R/I is eventually
/// zero in each degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertData {
    nvars: usize,
    numerator: IntPoly,
    reduced: IntPoly,
    /// Remaining power of (1-t) under the reduced numerator.
    power: usize,
    hp_degree: i64,
    /// Coefficients of the Hilbert polynomial in d, ascending.
    hp_coeffs: Vec<BigRational>,
}

impl HilbertData {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn hp_degree(&self) -> i64 {
        self.hp_degree
    }

    pub fn hp_coeffs(&self) -> &[BigRational] {
        &self.hp_coeffs
    }

    pub fn hp_leading_coeff(&self) -> Option<&BigRational> {
        self.hp_coeffs.last()
    }

    /// dim (R/I)_d, exactly.
    pub fn series_coefficient(&self, d: usize) -> i128 {
        if self.power == 0 {
            return self.reduced.coeff(d) as i128;
        }
        // coefficient of t^d in Q(t) / (1-t)^m
        let m = self.power;
        let mut acc: i128 = 0;
        for (i, &q) in self.reduced.coeffs().iter().enumerate() {
            if i > d || q == 0 {
                continue;
            }
            acc += q as i128 * binom((d - i + m - 1) as u64, (m - 1) as u64);
        }
        acc
    }

    /// Degree beyond which the series provably follows the Hilbert
    /// polynomial.
    pub fn regularity_bound(&self) -> usize {
        self.reduced.degree() + 1
    }
}

fn binom(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

pub fn hilbert_data(ideal: &MonomialIdeal) -> HilbertData {
    let numerator = hilbert_numerator(ideal);
    let n = ideal.nvars();
    let mut reduced = numerator.clone();
    let mut cancels = 0usize;
    while !reduced.is_zero() && cancels < n && reduced.eval_at_one() == 0 {
        reduced = reduced.div_one_minus_t();
        cancels += 1;
    }
    let power = n - cancels;
    if reduced.is_zero() || power == 0 {
        return HilbertData {
            nvars: n,
            numerator,
            reduced,
            power,
            hp_degree: -1,
            hp_coeffs: Vec::new(),
        };
    }
    // HP(d) = sum_i q_i * C(d - i + m - 1, m - 1), expanded in d.
    let m = power;
    let mut hp = vec![BigRational::zero(); m];
    for (i, &q) in reduced.coeffs().iter().enumerate() {
        if q == 0 {
            continue;
        }
        // product over k = 1..m-1 of (d + (k - i)) / (m-1)!
        let mut factor = vec![BigRational::from_integer(q.into())];
        for k in 1..m {
            let constant = BigRational::from_integer((k as i64 - i as i64).into());
            let mut next = vec![BigRational::zero(); factor.len() + 1];
            for (j, a) in factor.iter().enumerate() {
                next[j] += a * &constant;
                next[j + 1] += a;
            }
            factor = next;
        }
        for (j, a) in factor.iter().enumerate() {
            hp[j] += a;
        }
    }
    let mut fact = BigRational::one();
    for k in 1..m {
        fact *= BigRational::from_integer((k as i64).into());
    }
    for a in hp.iter_mut() {
        *a /= fact.clone();
    }
    while hp.last().map(|a| a.is_zero()).unwrap_or(false) {
        hp.pop();
    }
    let hp_degree = hp.len() as i64 - 1;
    debug_assert_eq!(hp_degree, (m - 1) as i64, "leading binomial term cannot vanish");
    HilbertData {
        nvars: n,
        numerator,
        reduced,
        power,
        hp_degree,
        hp_coeffs: hp,
    }
}

/// Which of two candidate leading-term ideals promises the smaller residue
/// ring in the long run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CandidateCmp {
    ABetter,
    BBetter,
    Tie,
}

/// Lexicographic comparison: lower Hilbert-polynomial degree, then smaller
/// leading coefficient, then smaller series coefficients degree by degree.
/// Tie exactly when the series are identical.
pub fn compare_candidates(a: &HilbertData, b: &HilbertData) -> CandidateCmp {
    assert_eq!(a.nvars, b.nvars, "candidates from different rings");
    if a.numerator == b.numerator {
        return CandidateCmp::Tie;
    }
    match a.hp_degree.cmp(&b.hp_degree) {
        std::cmp::Ordering::Less => return CandidateCmp::ABetter,
        std::cmp::Ordering::Greater => return CandidateCmp::BBetter,
        std::cmp::Ordering::Equal => {}
    }
    if a.hp_degree >= 0 {
        let la = a.hp_leading_coeff().expect("nonnegative degree");
        let lb = b.hp_leading_coeff().expect("nonnegative degree");
        if la < lb {
            return CandidateCmp::ABetter;
        }
        if lb < la {
            return CandidateCmp::BBetter;
        }
    }
    let bound = a
        .numerator
        .degree()
        .max(b.numerator.degree())
        .max(a.regularity_bound())
        .max(b.regularity_bound());
    for d in 0..=bound {
        let ca = a.series_coefficient(d);
        let cb = b.series_coefficient(d);
        if ca < cb {
            return CandidateCmp::ABetter;
        }
        if cb < ca {
            return CandidateCmp::BBetter;
        }
    }
    // Equal prefixes this deep force equal numerators, handled above.
    CandidateCmp::Tie
}

/// Brute-force count of the degree-d standard monomials (terms outside I);
/// the independent oracle for the series computation.
pub fn standard_monomial_count(ideal: &MonomialIdeal, d: u32) -> u64 {
    let n = ideal.nvars();
    if n == 0 {
        return if d == 0 && !ideal.contains(&Term::one(0)) { 1 } else { 0 };
    }
    let mut count = 0u64;
    let mut exps = vec![0u32; n];
    // Enumerate compositions of d into n parts.
    fn rec(ideal: &MonomialIdeal, exps: &mut Vec<u32>, pos: usize, rem: u32, count: &mut u64) {
        if pos == exps.len() - 1 {
            exps[pos] = rem;
            if !ideal.contains(&Term::new(exps.clone())) {
                *count += 1;
            }
            return;
        }
        for e in 0..=rem {
            exps[pos] = e;
            rec(ideal, exps, pos + 1, rem - e, count);
        }
    }
    rec(ideal, &mut exps, 0, d, &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(nvars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(nvars, gens.iter().map(|g| Term::new(g.to_vec())).collect())
    }

    #[test]
    fn minimal_generators() {
        let i = ideal(2, &[&[2, 0], &[2, 1], &[1, 1]]);
        assert_eq!(i.gens().len(), 2); // x^2*y redundant
        assert!(i.contains(&Term::new(vec![3, 4])));
        assert!(!i.contains(&Term::new(vec![0, 5])));
    }

    #[test]
    fn numerator_basics() {
        // <x^2, xy> in 2 vars: 1 - 2t^2 + t^3
        let n = hilbert_numerator(&ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(n.coeffs(), &[1, 0, -2, 1]);

        assert_eq!(hilbert_numerator(&ideal(3, &[])).coeffs(), &[1]);
        assert_eq!(hilbert_numerator(&ideal(1, &[&[1]])).coeffs(), &[1, -1]);
    }

    #[test]
    fn data_x2_xy() {
        // R/<x^2, xy>: standard monomials 1, x, y, y^2, ... -> HP = 1.
        let d = hilbert_data(&ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(d.hp_degree(), 0);
        assert_eq!(
            d.hp_coeffs(),
            &[BigRational::from_integer(1.into())]
        );
        let expect = [1i128, 2, 1, 1, 1, 1];
        for (deg, &e) in expect.iter().enumerate() {
            assert_eq!(d.series_coefficient(deg), e);
        }
    }

    #[test]
    fn data_finite_dimensional() {
        // <x^2, xy, y^3>: standard monomials {1, x, y, y^2}.
        let d = hilbert_data(&ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]));
        assert_eq!(d.hp_degree(), -1);
        assert_eq!(d.series_coefficient(0), 1);
        assert_eq!(d.series_coefficient(1), 2);
        assert_eq!(d.series_coefficient(2), 1);
        assert_eq!(d.series_coefficient(3), 0);
        assert_eq!(d.series_coefficient(9), 0);
    }

    #[test]
    fn data_full_ring() {
        for n in 1..=4 {
            let d = hilbert_data(&MonomialIdeal::new(n, vec![]));
            assert_eq!(d.hp_degree(), n as i64 - 1);
        }
    }

    #[test]
    fn comparator_prefers_smaller_residue() {
        let a = hilbert_data(&ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]));
        let b = hilbert_data(&ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(compare_candidates(&a, &b), CandidateCmp::ABetter);
        assert_eq!(compare_candidates(&b, &a), CandidateCmp::BBetter);
        assert_eq!(compare_candidates(&b, &b), CandidateCmp::Tie);

        // <x,y> vs <x> in 2 vars: hp degrees -1 vs 0.
        let full = hilbert_data(&ideal(2, &[&[1, 0], &[0, 1]]));
        let half = hilbert_data(&ideal(2, &[&[1, 0]]));
        assert_eq!(compare_candidates(&full, &half), CandidateCmp::ABetter);
    }

    #[test]
    fn standard_monomials_brute_force() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(standard_monomial_count(&i, 2), 1); // y^2 only
        assert_eq!(standard_monomial_count(&MonomialIdeal::new(2, vec![]), 2), 3);
        let j = ideal(1, &[&[1]]);
        assert_eq!(standard_monomial_count(&j, 0), 1);
        for d in 1..5 {
            assert_eq!(standard_monomial_count(&j, d), 0);
        }
    }

    #[test]
    fn series_matches_brute_force_small() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 0, 3], &[1, 0, 1]]);
        let d = hilbert_data(&i);
        for deg in 0..=8u32 {
            assert_eq!(
                d.series_coefficient(deg as usize),
                standard_monomial_count(&i, deg) as i128,
                "degree {}",
                deg
            );
        }
    }
}
