//! Dense two-phase simplex.
//!
//! One generic implementation serves two scalar types: `f64` for the
//! everyday solves and `BigRational` as the exact fallback when a rounded
//! floating-point solution fails integer verification. Bland's rule is
//! used throughout, so the method cannot cycle.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Scalar the tableau works over.
pub trait LpScalar:
    Clone
    + PartialOrd
    + Zero
    + One
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
    + std::ops::Neg<Output = Self>
{
    /// Magnitudes at or below this count as zero.
    fn tol() -> Self;
    fn from_int(v: i64) -> Self;

    fn is_pos(&self) -> bool {
        *self > Self::tol()
    }
    fn is_neg(&self) -> bool {
        *self < -Self::tol()
    }
}

impl LpScalar for f64 {
    fn tol() -> Self {
        1e-9
    }
    fn from_int(v: i64) -> Self {
        v as f64
    }
}

impl LpScalar for BigRational {
    fn tol() -> Self {
        BigRational::zero()
    }
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rel {
    Ge,
    Eq,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// min / max  objective . x  subject to  rows, x >= 0.
pub struct LpProblem<S> {
    pub nvars: usize,
    /// (coefficients, relation, rhs)
    pub rows: Vec<(Vec<S>, Rel, S)>,
    pub objective: Vec<S>,
    pub sense: Sense,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<S> {
    Optimal { point: Vec<S>, objective: S },
    /// `gap` is the phase-1 optimum: how far the artificial variables are
    /// from vanishing. A large gap is unambiguous infeasibility.
    Infeasible { gap: S },
    Unbounded,
}

struct Tableau<S> {
    rows: Vec<Vec<S>>, // m x (ncols + 1), last column is the rhs
    cost: Vec<S>,      // reduced costs, length ncols + 1
    basis: Vec<usize>,
    ncols: usize,
}

impl<S: LpScalar> Tableau<S> {
    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x = x.clone() / piv.clone();
        }
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let factor = self.rows[r][col].clone();
            if factor.is_pos() || factor.is_neg() {
                for c in 0..=self.ncols {
                    let delta = factor.clone() * self.rows[row][c].clone();
                    self.rows[r][c] = self.rows[r][c].clone() - delta;
                }
            }
        }
        let factor = self.cost[col].clone();
        if factor.is_pos() || factor.is_neg() {
            for c in 0..=self.ncols {
                let delta = factor.clone() * self.rows[row][c].clone();
                self.cost[c] = self.cost[c].clone() - delta;
            }
        }
        self.basis[row] = col;
    }

    /// Runs the simplex iterations on the current cost row (minimization).
    /// Columns with `allowed[c] == false` never enter the basis.
    /// Returns false when the problem is unbounded.
    fn iterate(&mut self, allowed: &[bool]) -> bool {
        loop {
            // Bland: entering column = smallest index with negative reduced cost.
            let Some(col) = (0..self.ncols)
                .find(|&c| allowed[c] && self.cost[c].is_neg())
            else {
                return true;
            };
            // Ratio test; Bland tie-break on smallest basic variable.
            let mut best: Option<(usize, S)> = None;
            for r in 0..self.rows.len() {
                let a = self.rows[r][col].clone();
                if !a.is_pos() {
                    continue;
                }
                let ratio = self.rows[r][self.ncols].clone() / a;
                best = match best {
                    None => Some((r, ratio)),
                    Some((br, bratio)) => {
                        if ratio < bratio
                            || (!(ratio > bratio) && self.basis[r] < self.basis[br])
                        {
                            Some((r, ratio))
                        } else {
                            Some((br, bratio))
                        }
                    }
                };
            }
            match best {
                None => return false,
                Some((row, _)) => self.pivot(row, col),
            }
        }
    }

    /// Prices out the basic columns so the cost row is expressed over the
    /// nonbasic variables.
    fn price_out(&mut self, costs: &[S]) {
        self.cost = costs.to_vec();
        self.cost.push(S::zero());
        for r in 0..self.rows.len() {
            let cb = costs[self.basis[r]].clone();
            if cb.is_pos() || cb.is_neg() {
                for c in 0..=self.ncols {
                    let delta = cb.clone() * self.rows[r][c].clone();
                    self.cost[c] = self.cost[c].clone() - delta;
                }
            }
        }
    }
}

pub fn solve_lp<S: LpScalar>(problem: &LpProblem<S>) -> LpOutcome<S> {
    let n = problem.nvars;
    let m = problem.rows.len();
    let n_surplus = problem
        .rows
        .iter()
        .filter(|(_, rel, _)| *rel == Rel::Ge)
        .count();

    // Structural columns: original vars, then surplus vars, then one
    // artificial per row that needs it.
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(m);
    let mut rhs: Vec<S> = Vec::with_capacity(m);
    let mut basis: Vec<Option<usize>> = vec![None; m];
    let mut surplus_idx = 0usize;

    for (i, (coeffs, rel, b)) in problem.rows.iter().enumerate() {
        assert_eq!(coeffs.len(), n, "row dimension mismatch");
        let mut row = vec![S::zero(); n + n_surplus];
        let mut b = b.clone();
        let mut coeffs = coeffs.clone();
        match rel {
            Rel::Ge => {
                // a.x - s = b. When b <= 0, negate so the surplus column
                // can start basic.
                let negate = !b.is_pos();
                if negate {
                    for c in coeffs.iter_mut() {
                        *c = -c.clone();
                    }
                    b = -b;
                }
                row[..n].clone_from_slice(&coeffs);
                row[n + surplus_idx] = if negate { S::one() } else { -S::one() };
                if negate {
                    basis[i] = Some(n + surplus_idx);
                }
                surplus_idx += 1;
            }
            Rel::Eq => {
                let negate = b.is_neg();
                if negate {
                    for c in coeffs.iter_mut() {
                        *c = -c.clone();
                    }
                    b = -b;
                }
                row[..n].clone_from_slice(&coeffs);
            }
        }
        rows.push(row);
        rhs.push(b);
    }

    // Artificial columns for rows without a starting basic variable.
    let needs_artificial: Vec<usize> = (0..m).filter(|&i| basis[i].is_none()).collect();
    let n_art = needs_artificial.len();
    let ncols = n + n_surplus + n_art;
    for (k, &i) in needs_artificial.iter().enumerate() {
        basis[i] = Some(n + n_surplus + k);
    }
    let mut tab = Tableau {
        rows: rows
            .into_iter()
            .zip(rhs)
            .enumerate()
            .map(|(i, (mut row, b))| {
                row.resize(ncols, S::zero());
                if let Some(bv) = basis[i] {
                    if bv >= n + n_surplus {
                        row[bv] = S::one();
                    }
                }
                row.push(b);
                row
            })
            .collect(),
        cost: Vec::new(),
        basis: basis.into_iter().map(|b| b.unwrap()).collect(),
        ncols,
    };

    let all_allowed = vec![true; ncols];

    // Phase 1: minimize the sum of artificials.
    if n_art > 0 {
        let mut phase1 = vec![S::zero(); ncols];
        for c in n + n_surplus..ncols {
            phase1[c] = S::one();
        }
        tab.price_out(&phase1);
        if !tab.iterate(&all_allowed) {
            // The phase-1 objective is bounded below by zero.
            unreachable!("phase 1 cannot be unbounded");
        }
        let obj = -tab.cost[ncols].clone();
        if obj.is_pos() {
            return LpOutcome::Infeasible { gap: obj };
        }
        // Drive basic artificials out; drop redundant rows.
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= n + n_surplus {
                if let Some(col) = (0..n + n_surplus)
                    .find(|&c| tab.rows[r][c].is_pos() || tab.rows[r][c].is_neg())
                {
                    tab.pivot(r, col);
                    r += 1;
                } else {
                    tab.rows.remove(r);
                    tab.basis.remove(r);
                }
            } else {
                r += 1;
            }
        }
    }

    // Phase 2 on the real objective; artificial columns are banned.
    let mut costs: Vec<S> = vec![S::zero(); ncols];
    for (c, v) in problem.objective.iter().enumerate() {
        costs[c] = match problem.sense {
            Sense::Minimize => v.clone(),
            Sense::Maximize => -v.clone(),
        };
    }
    tab.price_out(&costs);
    let mut allowed = all_allowed;
    for a in allowed.iter_mut().skip(n + n_surplus) {
        *a = false;
    }
    if !tab.iterate(&allowed) {
        return LpOutcome::Unbounded;
    }

    let mut point = vec![S::zero(); n];
    for (r, &bv) in tab.basis.iter().enumerate() {
        if bv < n {
            point[bv] = tab.rows[r][tab.ncols].clone();
        }
    }
    let objective = problem
        .objective
        .iter()
        .zip(&point)
        .fold(S::zero(), |acc, (c, x)| acc + c.clone() * x.clone());
    LpOutcome::Optimal { point, objective }
}
