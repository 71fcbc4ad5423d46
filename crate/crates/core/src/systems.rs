//! Benchmark polynomial systems.

use std::fmt;

use crate::poly::{Coeff, Polynomial};
use crate::term::Term;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SystemError {
    CyclicTooSmall(usize),
    KatsuraTooSmall(usize),
}

impl fmt::Display for SystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemError::CyclicTooSmall(n) => {
                write!(f, "cyclic-{} is not defined; need n >= 2", n)
            }
            SystemError::KatsuraTooSmall(n) => {
                write!(f, "katsura-{} is not defined; need n >= 1", n)
            }
        }
    }
}

impl std::error::Error for SystemError {}

/// Cyclic-n: p_k = sum_i prod_{j<k} x_{(i+j) mod n} for k = 1..n-1, plus
/// x_1 * ... * x_n - 1.
pub fn generate_cyclic(n: usize) -> Result<Vec<Polynomial>, SystemError> {
    if n < 2 {
        return Err(SystemError::CyclicTooSmall(n));
    }
    let mut out = Vec::with_capacity(n);
    for k in 1..n {
        let mut p = Polynomial::zero(n);
        for i in 0..n {
            let mut exps = vec![0u32; n];
            for j in 0..k {
                exps[(i + j) % n] += 1;
            }
            p.add_monomial(&Coeff::from_integer(1.into()), &Term::new(exps));
        }
        out.push(p);
    }
    let mut last = Polynomial::zero(n);
    last.add_monomial(&Coeff::from_integer(1.into()), &Term::new(vec![1; n]));
    last.add_monomial(&Coeff::from_integer((-1).into()), &Term::one(n));
    out.push(last);
    Ok(out)
}

/// Katsura-n in n+1 variables x_0..x_n with the symmetry x_{-i} = x_i and
/// x_i = 0 for |i| > n: the quadratic equations
/// sum_{i=-n}^{n} x_i x_{m-i} - x_m for m = 0..n-1, plus the linear
/// equation sum_{i=-n}^{n} x_i - 1.
pub fn generate_katsura(n: usize) -> Result<Vec<Polynomial>, SystemError> {
    if n < 1 {
        return Err(SystemError::KatsuraTooSmall(n));
    }
    let nvars = n + 1;
    let idx = |i: i64| -> Option<usize> {
        let a = i.unsigned_abs() as usize;
        if a <= n {
            Some(a)
        } else {
            None
        }
    };
    let mut out = Vec::with_capacity(nvars);
    for m in 0..n {
        let mut p = Polynomial::zero(nvars);
        for i in -(n as i64)..=(n as i64) {
            let (Some(a), Some(b)) = (idx(i), idx(m as i64 - i)) else {
                continue;
            };
            let mut exps = vec![0u32; nvars];
            exps[a] += 1;
            exps[b] += 1;
            p.add_monomial(&Coeff::from_integer(1.into()), &Term::new(exps));
        }
        let mut linear = vec![0u32; nvars];
        linear[m] = 1;
        p.add_monomial(&Coeff::from_integer((-1).into()), &Term::new(linear));
        out.push(p);
    }
    let mut last = Polynomial::zero(nvars);
    for i in -(n as i64)..=(n as i64) {
        let a = idx(i).expect("|i| <= n");
        let mut exps = vec![0u32; nvars];
        exps[a] = 1;
        last.add_monomial(&Coeff::from_integer(1.into()), &Term::new(exps));
    }
    last.add_monomial(&Coeff::from_integer((-1).into()), &Term::one(nvars));
    out.push(last);
    Ok(out)
}
