//! Exact vertex enumeration for small cone cross-sections.

use num_rational::BigRational;
use num_traits::Zero;

/// All extreme points of { y : row . y >= 0 for all rows, y >= 0,
/// sum(y) = d }, by trying every (n-1)-subset of the closed constraints as
/// the active set and keeping the solutions that satisfy everything.
/// Exponential; intended for tiny test instances only.
pub fn enumerate_cross_section_vertices(
    rows: &[Vec<i64>],
    n: usize,
    d: i64,
) -> Vec<Vec<BigRational>> {
    let q = |x: i64| BigRational::from_integer(x.into());
    // Closed inequalities: the given rows plus positivity.
    let mut ineqs: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n);
            r.iter().map(|&x| q(x)).collect()
        })
        .collect();
    for k in 0..n {
        let mut row = vec![BigRational::zero(); n];
        row[k] = q(1);
        ineqs.push(row);
    }

    let mut vertices: Vec<Vec<BigRational>> = Vec::new();
    let mut active = vec![0usize; n.saturating_sub(1)];
    enumerate_subsets(ineqs.len(), n.saturating_sub(1), &mut active, 0, 0, &mut |chosen| {
        let mut matrix: Vec<Vec<BigRational>> = Vec::with_capacity(n);
        for &i in chosen {
            let mut row = ineqs[i].clone();
            row.push(BigRational::zero());
            matrix.push(row);
        }
        let mut sum_row = vec![q(1); n];
        sum_row.push(q(d));
        matrix.push(sum_row);
        if let Some(point) = solve_square(matrix, n) {
            let ok = ineqs.iter().all(|r| {
                r.iter()
                    .zip(&point)
                    .fold(BigRational::zero(), |acc, (a, x)| acc + a * x)
                    >= BigRational::zero()
            });
            if ok && !vertices.contains(&point) {
                vertices.push(point);
            }
        }
    });
    vertices
}

fn enumerate_subsets(
    total: usize,
    k: usize,
    buf: &mut Vec<usize>,
    pos: usize,
    start: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if pos == k {
        f(buf);
        return;
    }
    for i in start..total {
        buf[pos] = i;
        enumerate_subsets(total, k, buf, pos + 1, i + 1, f);
    }
}

/// Gaussian elimination on an n x (n+1) augmented matrix; `None` when the
/// active set is singular.
fn solve_square(mut m: Vec<Vec<BigRational>>, n: usize) -> Option<Vec<BigRational>> {
    for col in 0..n {
        let pivot = (col..m.len()).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= p.clone();
        }
        for r in 0..m.len() {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..=n {
                    let delta = f.clone() * m[col][c].clone();
                    m[r][c] -= delta;
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}
