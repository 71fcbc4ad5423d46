//! Multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::order::TermOrdering;
use crate::term::Term;

pub type Coeff = BigRational;

/// Sparse polynomial: map from terms to nonzero rational coefficients.
/// The zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Term, Coeff>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// Builds from (coefficient, term) pairs, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Coeff, Term)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (c, t) in terms {
            p.add_monomial(&c, &t);
        }
        p
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Vec<u32>)>,
    {
        Polynomial::from_terms(
            nvars,
            terms
                .into_iter()
                .map(|(c, e)| (Coeff::from_integer(BigInt::from(c)), Term::new(e))),
        )
    }

    pub fn monomial(nvars: usize, c: Coeff, t: Term) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_monomial(&c, &t);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, t: &Term) -> Option<&Coeff> {
        self.terms.get(t)
    }

    pub fn iter(&self) -> std::collections::btree_map::Iter<'_, Term, Coeff> {
        self.terms.iter()
    }

    pub fn support(&self) -> std::collections::btree_map::Keys<'_, Term, Coeff> {
        self.terms.keys()
    }

    /// Maximal total degree over the support; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|t| t.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn max_weighted_degree(&self, weight: &[i64]) -> i64 {
        self.terms
            .keys()
            .map(|t| t.weighted_degree(weight))
            .max()
            .unwrap_or(0)
    }

    pub fn add_monomial(&mut self, c: &Coeff, t: &Term) {
        if c.is_zero() {
            return;
        }
        assert_eq!(t.nvars(), self.nvars, "term dimension mismatch");
        match self.terms.get_mut(t) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(t);
                }
            }
            None => {
                self.terms.insert(t.clone(), c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for (t, c) in &other.terms {
            self.add_monomial(c, t);
        }
    }

    pub fn sub_assign(&mut self, other: &Polynomial) {
        for (t, c) in &other.terms {
            self.add_monomial(&-c.clone(), t);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        r.sub_assign(other);
        r
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, k)| (t.clone(), k * c))
                .collect(),
        }
    }

    /// self * c*t for a single monomial.
    pub fn mul_monomial(&self, c: &Coeff, t: &Term) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(u, k)| (u.mul(t), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut r = Polynomial::zero(self.nvars);
        for (t, c) in &other.terms {
            r.add_assign(&self.mul_monomial(c, t));
        }
        r
    }

    /// Largest term of the support under `o`, with its coefficient.
    /// `None` for the zero polynomial.
    pub fn leading_term(&self, o: &TermOrdering) -> Option<(&Term, &Coeff)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| o.compare(a, b))
    }

    /// Adds one homogenizing variable and pads every monomial up to the
    /// maximal total degree.
    pub fn homogenize(&self) -> Polynomial {
        let deg = self.total_degree();
        Polynomial {
            nvars: self.nvars + 1,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.extended(deg - t.total_degree()), c.clone()))
                .collect(),
        }
    }

    /// Clears denominators and divides by the integer content. The sign is
    /// chosen so the coefficient of the leading term under `o` is positive.
    pub fn primitive_part(&self, o: &TermOrdering) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        for c in self.terms.values() {
            let int = c.numer() * (&denom_lcm / c.denom());
            content = content.gcd(&int);
        }
        let factor = Coeff::new(denom_lcm, content);
        let mut r = self.scale(&factor);
        let (_, lc) = r.leading_term(o).expect("nonzero");
        if lc.is_negative() {
            r = r.neg();
        }
        r
    }

    /// Divides by the leading coefficient under `o`.
    pub fn monic(&self, o: &TermOrdering) -> Polynomial {
        match self.leading_term(o) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a.is_one() && !t.is_one() {
                write!(f, "{}", t)?;
            } else if t.is_one() {
                write!(f, "{}", a)?;
            } else {
                write!(f, "{}*{}", a, t)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How sugar degrees are measured.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SugarKind {
    /// Standard total degree.
    Standard,
    /// Degree under a weight vector.
    Weighted(Vec<i64>),
}

impl SugarKind {
    pub fn term_degree(&self, t: &Term) -> i64 {
        match self {
            SugarKind::Standard => t.total_degree() as i64,
            SugarKind::Weighted(w) => t.weighted_degree(w),
        }
    }

    pub fn poly_degree(&self, p: &Polynomial) -> i64 {
        match self {
            SugarKind::Standard => p.total_degree() as i64,
            SugarKind::Weighted(w) => p.max_weighted_degree(w),
        }
    }
}

/// A polynomial together with its sugar degree (the degree its
/// homogenization would have carried through the computation).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TrackedPolynomial {
    pub poly: Polynomial,
    pub sugar: i64,
}

impl TrackedPolynomial {
    /// Sugar of an input polynomial is its degree.
    pub fn input(poly: Polynomial, kind: &SugarKind) -> Self {
        let sugar = kind.poly_degree(&poly);
        TrackedPolynomial { poly, sugar }
    }
}

/// The S-polynomial spoly(f, g); spoly(p, 0) = p by the extended
/// definition. Leading terms of the two summands cancel by construction.
pub fn s_polynomial(o: &TermOrdering, f: &Polynomial, g: &Polynomial) -> Polynomial {
    assert!(
        !(f.is_zero() && g.is_zero()),
        "s_polynomial of two zero polynomials"
    );
    if g.is_zero() {
        return f.clone();
    }
    if f.is_zero() {
        return g.clone();
    }
    let (tf, cf) = f.leading_term(o).expect("nonzero");
    let (tg, cg) = g.leading_term(o).expect("nonzero");
    let lcm = tf.lcm(tg);
    let uf = lcm.checked_div(tf).expect("lcm divisible by lt(f)");
    let ug = lcm.checked_div(tg).expect("lcm divisible by lt(g)");
    let left = f.mul_monomial(cg, &uf);
    let right = g.mul_monomial(cf, &ug);
    left.sub(&right)
}

/// One full normal form pass: no leading term of `basis` divides any term
/// of the result. With `full = false` only the leading term is reduced.
///
/// The working polynomial is kept fraction-free: an integer polynomial
/// together with one rational scale factor. Each reduction step multiplies
/// through by the reducer's (integer) leading coefficient instead of
/// dividing, and the integer content is stripped as it accumulates. The
/// returned remainder is the exact rational normal form.
fn reduce_impl(
    o: &TermOrdering,
    p: &Polynomial,
    basis: &[&Polynomial],
    full: bool,
    mut on_step: impl FnMut(usize, &Term),
) -> Polynomial {
    let nvars = p.nvars();

    // Reducers as primitive integer polynomials; scaling a reducer only
    // rescales the quotient, never the remainder.
    struct Reducer {
        lead: Term,
        lead_coeff: BigInt,
        tail: Vec<(Term, BigInt)>,
    }
    let reducers: Vec<Reducer> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let prim = g.primitive_part(o);
            let (lt, lc) = prim.leading_term(o).expect("nonzero");
            let lead = lt.clone();
            let lead_coeff = lc.numer().clone();
            let tail = prim
                .iter()
                .filter(|(t, _)| **t != lead)
                .map(|(t, c)| (t.clone(), c.numer().clone()))
                .collect();
            Reducer {
                lead,
                lead_coeff,
                tail,
            }
        })
        .collect();

    // work = scale * sum of integer monomials
    let mut denom_lcm = BigInt::one();
    for c in p.terms.values() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut work: BTreeMap<Term, BigInt> = p
        .terms
        .iter()
        .map(|(t, c)| (t.clone(), c.numer() * (&denom_lcm / c.denom())))
        .collect();
    let mut scale = Coeff::new(BigInt::one(), denom_lcm);

    let mut remainder = Polynomial::zero(nvars);
    let mut steps = 0usize;
    'outer: while !work.is_empty() {
        let (t, c) = {
            let (t, c) = work
                .iter()
                .max_by(|(a, _), (b, _)| o.compare(a, b))
                .expect("nonempty");
            (t.clone(), c.clone())
        };
        for (gi, g) in reducers.iter().enumerate() {
            let Some(q) = t.checked_div(&g.lead) else {
                continue;
            };
            // work := lc(g) * work - c * q * g
            work.remove(&t);
            if !g.lead_coeff.is_one() {
                for v in work.values_mut() {
                    *v *= &g.lead_coeff;
                }
                scale /= Coeff::from_integer(g.lead_coeff.clone());
            }
            for (u, a) in &g.tail {
                let tu = u.mul(&q);
                let delta = a * &c;
                match work.get_mut(&tu) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            work.remove(&tu);
                        }
                    }
                    None => {
                        work.insert(tu, -delta);
                    }
                }
            }
            // Strip the accumulated content now and then; waiting for
            // some growth keeps the gcd pass off the fast path.
            steps += 1;
            if steps % 8 == 0 || g.lead_coeff.bits() > 64 {
                let mut content = BigInt::zero();
                for v in work.values() {
                    content = content.gcd(v);
                    if content.is_one() {
                        break;
                    }
                }
                if !content.is_zero() && !content.is_one() {
                    for v in work.values_mut() {
                        *v /= &content;
                    }
                    scale *= Coeff::from_integer(content);
                }
            }
            on_step(gi, &q);
            continue 'outer;
        }
        // No reducer: move the leading monomial to the remainder.
        remainder.add_monomial(&(&scale * Coeff::from_integer(c.clone())), &t);
        work.remove(&t);
        if !full {
            for (u, v) in &work {
                remainder.add_monomial(&(&scale * Coeff::from_integer(v.clone())), u);
            }
            return remainder;
        }
    }
    remainder
}

/// Remainder of `p` modulo `basis` (full reduction: every term of the
/// result is irreducible).
pub fn reduce(o: &TermOrdering, p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let refs: Vec<&Polynomial> = basis.iter().collect();
    reduce_impl(o, p, &refs, true, |_, _| {})
}

/// Top reduction only: stops as soon as the leading term is irreducible.
pub fn reduce_top(o: &TermOrdering, p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let refs: Vec<&Polynomial> = basis.iter().collect();
    reduce_impl(o, p, &refs, false, |_, _| {})
}

/// Full reduction with sugar bookkeeping: sugar(p - a*t*g) =
/// max(sugar(p), deg(t) + sugar(g)).
pub fn reduce_tracked(
    o: &TermOrdering,
    p: &TrackedPolynomial,
    basis: &[TrackedPolynomial],
    kind: &SugarKind,
    full: bool,
) -> TrackedPolynomial {
    let refs: Vec<&Polynomial> = basis.iter().map(|g| &g.poly).collect();
    let mut sugar = p.sugar;
    let poly = reduce_impl(o, &p.poly, &refs, full, |gi, q| {
        sugar = sugar.max(kind.term_degree(q) + basis[gi].sugar);
    });
    TrackedPolynomial { poly, sugar }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(nvars: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(nvars, terms.iter().map(|(c, e)| (*c, e.to_vec())))
    }

    #[test]
    fn leading_term_weighted() {
        // f1 = x1+x2+x3+x4 under weight (2,1,1,1): lead x1.
        let f1 = p(
            4,
            &[
                (1, &[1, 0, 0, 0]),
                (1, &[0, 1, 0, 0]),
                (1, &[0, 0, 1, 0]),
                (1, &[0, 0, 0, 1]),
            ],
        );
        let o = TermOrdering::weighted(vec![2, 1, 1, 1]);
        let (t, c) = f1.leading_term(&o).unwrap();
        assert_eq!(t, &Term::new(vec![1, 0, 0, 0]));
        assert_eq!(c, &Coeff::from_integer(1.into()));
    }

    #[test]
    fn leading_term_lex() {
        // x^2 + y^2 - 4 with x > y: lead x^2.
        let f = p(2, &[(1, &[2, 0]), (1, &[0, 2]), (-4, &[0, 0])]);
        let o = TermOrdering::lex();
        assert_eq!(f.leading_term(&o).unwrap().0, &Term::new(vec![2, 0]));
    }

    #[test]
    fn leading_term_constant() {
        let f = p(3, &[(5, &[0, 0, 0])]);
        let o = TermOrdering::grevlex();
        let (t, c) = f.leading_term(&o).unwrap();
        assert!(t.is_one());
        assert_eq!(c, &Coeff::from_integer(5.into()));
        assert!(Polynomial::zero(3).leading_term(&o).is_none());
    }

    #[test]
    fn spoly_circle_hyperbola() {
        // spoly(x^2+y^2-4, xy-1) under x > y is y^3 + x - 4y.
        let f = p(2, &[(1, &[2, 0]), (1, &[0, 2]), (-4, &[0, 0])]);
        let g = p(2, &[(1, &[1, 1]), (-1, &[0, 0])]);
        let o = TermOrdering::lex();
        let s = s_polynomial(&o, &f, &g);
        let expected = p(2, &[(1, &[0, 3]), (1, &[1, 0]), (-4, &[0, 1])]);
        assert_eq!(s, expected);
    }

    #[test]
    fn spoly_with_zero_is_identity() {
        let f = p(2, &[(3, &[1, 1]), (1, &[0, 1])]);
        let o = TermOrdering::grevlex();
        assert_eq!(s_polynomial(&o, &f, &Polynomial::zero(2)), f);
        assert_eq!(s_polynomial(&o, &Polynomial::zero(2), &f), f);
    }

    #[test]
    fn spoly_self_cancels() {
        let f = p(2, &[(2, &[1, 1]), (1, &[0, 1])]);
        let o = TermOrdering::grevlex();
        assert!(s_polynomial(&o, &f, &f).is_zero());
    }

    #[test]
    #[should_panic(expected = "two zero polynomials")]
    fn spoly_both_zero_panics() {
        let o = TermOrdering::grevlex();
        s_polynomial(&o, &Polynomial::zero(2), &Polynomial::zero(2));
    }

    #[test]
    fn reduce_cyclic4_second_generator() {
        // f2 mod {f1} with sigma = (2,1,1,1): remainder is
        // -(x2^2 + 2*x2*x4 + x4^2); support {x2^2, x2*x4, x4^2}.
        let f1 = p(
            4,
            &[
                (1, &[1, 0, 0, 0]),
                (1, &[0, 1, 0, 0]),
                (1, &[0, 0, 1, 0]),
                (1, &[0, 0, 0, 1]),
            ],
        );
        let f2 = p(
            4,
            &[
                (1, &[1, 1, 0, 0]),
                (1, &[0, 1, 1, 0]),
                (1, &[0, 0, 1, 1]),
                (1, &[1, 0, 0, 1]),
            ],
        );
        let o = TermOrdering::weighted(vec![2, 1, 1, 1]);
        let r = reduce(&o, &f2, &[f1]);
        let expected = p(4, &[(-1, &[0, 2, 0, 0]), (-2, &[0, 1, 0, 1]), (-1, &[0, 0, 0, 2])]);
        assert_eq!(r, expected);
    }

    #[test]
    fn reduce_trivial_cases() {
        let o = TermOrdering::grevlex();
        let g = p(2, &[(1, &[1, 1]), (-1, &[0, 0])]);
        assert!(reduce(&o, &Polynomial::zero(2), &[g.clone()]).is_zero());
        assert!(reduce(&o, &g, &[g.clone()]).is_zero());
    }

    #[test]
    fn homogenize_pads_to_top_degree() {
        // x^2 + x + y -> x^2 + x*h + y*h
        let f = p(2, &[(1, &[2, 0]), (1, &[1, 0]), (1, &[0, 1])]);
        let h = f.homogenize();
        let expected = p(3, &[(1, &[2, 0, 0]), (1, &[1, 0, 1]), (1, &[0, 1, 1])]);
        assert_eq!(h, expected);

        // x1*x2*x3*x4 - 1 -> x1*x2*x3*x4 - h^4
        let g = p(4, &[(1, &[1, 1, 1, 1]), (-1, &[0, 0, 0, 0])]);
        let hg = g.homogenize();
        let expected =
            p(5, &[(1, &[1, 1, 1, 1, 0]), (-1, &[0, 0, 0, 0, 4])]);
        assert_eq!(hg, expected);

        // already homogeneous: new variable appears with exponent 0 only
        let q = p(2, &[(1, &[2, 0]), (3, &[1, 1])]);
        let hq = q.homogenize();
        assert!(hq.support().all(|t| t.exponent(2) == 0));
        assert_eq!(hq.nvars(), 3);
    }

    #[test]
    fn primitive_part_scales_out_content() {
        let o = TermOrdering::grevlex();
        let f = Polynomial::from_terms(
            2,
            vec![
                (Coeff::new((-4).into(), 6.into()), Term::new(vec![1, 0])),
                (Coeff::new((-2).into(), 3.into()), Term::new(vec![0, 0])),
            ],
        );
        let g = f.primitive_part(&o);
        let expected = p(2, &[(1, &[1, 0]), (1, &[0, 0])]);
        assert_eq!(g, expected);
    }

    #[test]
    fn sugar_of_tracked_reduction() {
        // reduce x^2*y by {x*y - x}: one step with quotient x, then the
        // remainder x^2 reduces no further; sugar = max(3, 1 + 2) = 3.
        let o = TermOrdering::grevlex();
        let g = TrackedPolynomial::input(
            p(2, &[(1, &[1, 1]), (-1, &[1, 0])]),
            &SugarKind::Standard,
        );
        let f = TrackedPolynomial::input(p(2, &[(1, &[2, 1])]), &SugarKind::Standard);
        let r = reduce_tracked(&o, &f, &[g], &SugarKind::Standard, true);
        assert_eq!(r.poly, p(2, &[(1, &[2, 0])]));
        assert_eq!(r.sugar, 3);
    }
}
