//! Critical pair bookkeeping: creation, Gebauer-Möller pruning, and the
//! selection strategies.

use std::cmp::Ordering;

use crate::order::TermOrdering;
use crate::poly::{SugarKind, TrackedPolynomial};
use crate::term::Term;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairKind {
    /// An (f, 0) pair seeding one input polynomial.
    Input(usize),
    /// A proper S-pair of two basis elements.
    Basis(usize, usize),
}

#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub kind: PairKind,
    /// lcm of the two leading terms; for input pairs, the input's lead at
    /// creation time (selection key only).
    pub lcm: Term,
    pub sugar: i64,
    pub age: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Sugar,
    Normal,
    MinDeg,
}

pub fn basis_pair(
    i: usize,
    j: usize,
    basis: &[TrackedPolynomial],
    lts: &[Term],
    kind: &SugarKind,
    age: u64,
) -> CriticalPair {
    let lcm = lts[i].lcm(&lts[j]);
    let qi = lcm.checked_div(&lts[i]).expect("lcm divisible");
    let qj = lcm.checked_div(&lts[j]).expect("lcm divisible");
    let sugar = (kind.term_degree(&qi) + basis[i].sugar)
        .max(kind.term_degree(&qj) + basis[j].sugar);
    CriticalPair {
        kind: PairKind::Basis(i, j),
        lcm,
        sugar,
        age,
    }
}

/// Gebauer-Möller update after `new` was appended to the basis: creates
/// the pairs (i, new), discards those whose lcm is a proper multiple of a
/// sibling's lcm, keeps one pair per lcm (preferring a coprime
/// representative, which the product criterion then removes), and prunes
/// old pairs made redundant by the new lead.
pub fn gebauer_moller_update(
    pairs: &mut Vec<CriticalPair>,
    basis: &[TrackedPolynomial],
    lts: &[Term],
    new: usize,
    kind: &SugarKind,
    next_age: &mut u64,
) {
    let t_new = &lts[new];

    // Prune old pairs: lt(new) divides the lcm and both mixed lcms differ.
    pairs.retain(|p| match p.kind {
        PairKind::Input(_) => true,
        PairKind::Basis(i, j) => {
            !(t_new.divides(&p.lcm)
                && lts[i].lcm(t_new) != p.lcm
                && lts[j].lcm(t_new) != p.lcm)
        }
    });

    let lcms: Vec<Term> = (0..new).map(|i| lts[i].lcm(t_new)).collect();

    // Chain criterion among the new pairs.
    let mut alive: Vec<bool> = vec![true; new];
    for i in 0..new {
        if !alive[i] {
            continue;
        }
        for j in 0..new {
            if i == j || !alive[j] {
                continue;
            }
            if lcms[j].properly_divides(&lcms[i]) {
                alive[i] = false;
                break;
            }
        }
    }

    // One pair per lcm; prefer a coprime representative so the product
    // criterion can drop the whole class.
    let mut survivors: Vec<usize> = Vec::new();
    for i in 0..new {
        if !alive[i] {
            continue;
        }
        match survivors.iter().position(|&s| lcms[s] == lcms[i]) {
            None => survivors.push(i),
            Some(pos) => {
                let s = survivors[pos];
                if !lts[s].is_coprime_with(t_new) && lts[i].is_coprime_with(t_new) {
                    survivors[pos] = i;
                }
            }
        }
    }

    for i in survivors {
        if lts[i].is_coprime_with(t_new) {
            continue; // product criterion
        }
        let age = *next_age;
        *next_age += 1;
        pairs.push(basis_pair(i, new, basis, lts, kind, age));
    }
}

/// Index of the pair the strategy selects. Sugar: minimal sugar, ties by
/// lcm degree, then lcm under the current order, then age. Normal: minimal
/// lcm under the current order. MinDeg: minimal lcm degree.
pub fn select_pair(
    pairs: &[CriticalPair],
    strategy: Strategy,
    order: &TermOrdering,
    kind: &SugarKind,
) -> usize {
    assert!(!pairs.is_empty(), "selection from an empty pair queue");
    let better = |a: &CriticalPair, b: &CriticalPair| -> Ordering {
        match strategy {
            Strategy::Sugar => a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| kind.term_degree(&a.lcm).cmp(&kind.term_degree(&b.lcm)))
                .then_with(|| order.compare(&a.lcm, &b.lcm))
                .then_with(|| a.age.cmp(&b.age)),
            Strategy::Normal => order
                .compare(&a.lcm, &b.lcm)
                .then_with(|| a.age.cmp(&b.age)),
            Strategy::MinDeg => kind
                .term_degree(&a.lcm)
                .cmp(&kind.term_degree(&b.lcm))
                .then_with(|| order.compare(&a.lcm, &b.lcm))
                .then_with(|| a.age.cmp(&b.age)),
        }
    };
    let mut best = 0;
    for i in 1..pairs.len() {
        if better(&pairs[i], &pairs[best]) == Ordering::Less {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn tracked(nvars: usize, terms: &[(i64, &[u32])]) -> TrackedPolynomial {
        TrackedPolynomial::input(
            Polynomial::from_int_terms(nvars, terms.iter().map(|(c, e)| (*c, e.to_vec()))),
            &SugarKind::Standard,
        )
    }

    #[test]
    fn product_criterion_drops_coprime() {
        // lt(g1) = x^2, lt(g2) = y^3: coprime, no pair survives.
        let basis = vec![
            tracked(2, &[(1, &[2, 0]), (1, &[0, 1])]),
            tracked(2, &[(1, &[0, 3]), (1, &[1, 0])]),
        ];
        let lts = vec![Term::new(vec![2, 0]), Term::new(vec![0, 3])];
        let mut pairs = Vec::new();
        let mut age = 0;
        gebauer_moller_update(&mut pairs, &basis, &lts, 1, &SugarKind::Standard, &mut age);
        assert!(pairs.is_empty());
    }

    #[test]
    fn one_pair_retained() {
        let basis = vec![
            tracked(2, &[(1, &[2, 1]), (1, &[0, 1])]),
            tracked(2, &[(1, &[1, 2]), (1, &[1, 0])]),
        ];
        let lts = vec![Term::new(vec![2, 1]), Term::new(vec![1, 2])];
        let mut pairs = Vec::new();
        let mut age = 0;
        gebauer_moller_update(&mut pairs, &basis, &lts, 1, &SugarKind::Standard, &mut age);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].lcm, Term::new(vec![2, 2]));
    }

    #[test]
    fn sugar_selection_prefers_low_sugar() {
        let t = |e: &[u32]| Term::new(e.to_vec());
        let order = TermOrdering::grevlex();
        let pairs = vec![
            CriticalPair {
                kind: PairKind::Basis(0, 1),
                lcm: t(&[2, 1]),
                sugar: 3,
                age: 0,
            },
            CriticalPair {
                kind: PairKind::Basis(0, 2),
                lcm: t(&[1, 1]),
                sugar: 2,
                age: 1,
            },
        ];
        assert_eq!(
            select_pair(&pairs, Strategy::Sugar, &order, &SugarKind::Standard),
            1
        );

        // Equal sugar: smaller lcm degree wins.
        let pairs = vec![
            CriticalPair {
                kind: PairKind::Basis(0, 1),
                lcm: t(&[2, 2]),
                sugar: 4,
                age: 0,
            },
            CriticalPair {
                kind: PairKind::Basis(0, 2),
                lcm: t(&[2, 1]),
                sugar: 4,
                age: 1,
            },
        ];
        assert_eq!(
            select_pair(&pairs, Strategy::Sugar, &order, &SugarKind::Standard),
            1
        );
    }

    #[test]
    fn normal_selection_minimal_lcm() {
        let t = |e: &[u32]| Term::new(e.to_vec());
        let order = TermOrdering::grevlex();
        let pairs = vec![
            CriticalPair {
                kind: PairKind::Basis(0, 1),
                lcm: t(&[2, 1]),
                sugar: 0,
                age: 0,
            },
            CriticalPair {
                kind: PairKind::Basis(0, 2),
                lcm: t(&[1, 1]),
                sugar: 0,
                age: 1,
            },
        ];
        assert_eq!(
            select_pair(&pairs, Strategy::Normal, &order, &SugarKind::Standard),
            1
        );
    }
}
