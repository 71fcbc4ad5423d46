//! Deterministic xorshift generator for reproducible test instances.

use dyngb::{Coeff, MonomialIdeal, Polynomial, Term};

#[derive(Clone, Debug)]
pub struct XorShift {
    state: u64,
}

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift {
            state: seed.wrapping_mul(0x9e3779b97f4a7c15) | 1,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }

    /// Uniform in [0, bound).
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        self.next_u64() % bound
    }

    /// Uniform in [lo, hi] inclusive.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn term(&mut self, nvars: usize, max_exp: u32) -> Term {
        Term::new(
            (0..nvars)
                .map(|_| self.below(max_exp as u64 + 1) as u32)
                .collect(),
        )
    }

    /// Random nonzero polynomial with small integer coefficients.
    pub fn polynomial(
        &mut self,
        nvars: usize,
        max_terms: usize,
        max_deg: u32,
        max_coeff: i64,
    ) -> Polynomial {
        loop {
            let nterms = 1 + self.below(max_terms as u64) as usize;
            let mut p = Polynomial::zero(nvars);
            for _ in 0..nterms {
                let mut c = 0;
                while c == 0 {
                    c = self.range_i64(-max_coeff, max_coeff);
                }
                // Sample exponents until the degree bound holds.
                let t = loop {
                    let t = self.term(nvars, max_deg);
                    if t.total_degree() <= max_deg {
                        break t;
                    }
                };
                p.add_monomial(&Coeff::from_integer(c.into()), &t);
            }
            if !p.is_zero() {
                return p;
            }
        }
    }

    pub fn monomial_ideal(
        &mut self,
        nvars: usize,
        max_gens: usize,
        max_exp: u32,
    ) -> MonomialIdeal {
        let k = 1 + self.below(max_gens as u64) as usize;
        let gens = (0..k)
            .map(|_| {
                // Avoid the unit generator.
                loop {
                    let t = self.term(nvars, max_exp);
                    if !t.is_one() {
                        break t;
                    }
                }
            })
            .collect();
        MonomialIdeal::new(nvars, gens)
    }

    /// Random constraint rows with entries in [-bound, bound], zero rows
    /// discarded.
    pub fn constraint_rows(
        &mut self,
        nvars: usize,
        max_rows: usize,
        bound: i64,
    ) -> Vec<Vec<i64>> {
        let k = 1 + self.below(max_rows as u64) as usize;
        (0..k)
            .map(|_| loop {
                let row: Vec<i64> = (0..nvars)
                    .map(|_| self.range_i64(-bound, bound))
                    .collect();
                if row.iter().any(|&x| x != 0) {
                    break row;
                }
            })
            .collect()
    }
}
