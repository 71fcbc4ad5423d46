//! Fourier-Motzkin elimination for systems of strict homogeneous linear
//! inequalities, in exact integer arithmetic.

/// Decides whether { row . y > 0 for every row } has a real solution.
/// Rows are integer coefficient vectors; callers wanting positivity must
/// include the unit rows themselves.
pub fn strict_feasible(rows: &[Vec<i64>], n: usize) -> bool {
    let mut sys: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n);
            r.iter().map(|&x| x as i128).collect()
        })
        .collect();
    canonicalize(&mut sys);
    for var in (0..n).rev() {
        sys = eliminate(&sys, var);
        // A row that is all zeros means 0 > 0: infeasible.
        if sys.iter().any(|r| r.iter().all(|&x| x == 0)) {
            return false;
        }
    }
    // All variables eliminated; any remaining row would have been all
    // zeros and caught above.
    true
}

fn eliminate(sys: &[Vec<i128>], var: usize) -> Vec<Vec<i128>> {
    let mut lower: Vec<&Vec<i128>> = Vec::new(); // coefficient > 0
    let mut upper: Vec<&Vec<i128>> = Vec::new(); // coefficient < 0
    let mut free: Vec<Vec<i128>> = Vec::new();
    for r in sys {
        if r[var] > 0 {
            lower.push(r);
        } else if r[var] < 0 {
            upper.push(r);
        } else {
            free.push(r.clone());
        }
    }
    // y_var can always be chosen large enough for the "lower" rows and
    // small enough for the "upper" rows; only the combinations constrain
    // the rest. a . y > 0 with a_var > 0 and b . y > 0 with b_var < 0
    // combine to (a_var * b - b_var * a)_var-free > 0... with strict
    // inequalities the positive combination stays strict.
    let mut out = free;
    for a in &lower {
        for b in &upper {
            let row: Vec<i128> = (0..a.len())
                .map(|k| a[var] * b[k] - b[var] * a[k])
                .collect();
            debug_assert_eq!(row[var], 0);
            out.push(row);
        }
    }
    canonicalize(&mut out);
    out
}

fn canonicalize(sys: &mut Vec<Vec<i128>>) {
    for r in sys.iter_mut() {
        let mut g: i128 = 0;
        for &x in r.iter() {
            g = gcd(g, x.abs());
        }
        if g > 1 {
            for x in r.iter_mut() {
                *x /= g;
            }
        }
    }
    sys.sort();
    sys.dedup();
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
