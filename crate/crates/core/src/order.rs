//! Admissible term orderings.
//!
//! Every ordering used here is of the "weight row first" shape: terms are
//! compared by an optional strictly positive integer weight vector, ties
//! falling through to a tie-break (grevlex, lex, or further matrix rows).
//! Pure lex and grevlex are the degenerate cases with no weight row. The
//! dynamic engine only ever produces weighted orderings whose weight vector
//! comes from a linear program, so the weights are strictly positive there.

use std::cmp::Ordering;

use crate::term::Term;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TieBreak {
    Grevlex,
    Lex,
    /// Additional matrix rows applied lexicographically.
    Matrix(Vec<Vec<i64>>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TermOrdering {
    /// Empty when the ordering has no weight row (pure lex/grevlex/matrix).
    weight: Vec<i64>,
    tiebreak: TieBreak,
}

impl TermOrdering {
    /// Graded reverse lexicographic with x1 > x2 > ... > xn.
    pub fn grevlex() -> Self {
        TermOrdering {
            weight: Vec::new(),
            tiebreak: TieBreak::Grevlex,
        }
    }

    /// Pure lexicographic with x1 > x2 > ... > xn.
    pub fn lex() -> Self {
        TermOrdering {
            weight: Vec::new(),
            tiebreak: TieBreak::Lex,
        }
    }

    /// Weight vector compared first, grevlex tie-break.
    pub fn weighted(weight: Vec<i64>) -> Self {
        assert!(
            weight.iter().all(|&w| w > 0),
            "ordering weights must be strictly positive"
        );
        TermOrdering {
            weight,
            tiebreak: TieBreak::Grevlex,
        }
    }

    pub fn weighted_with(weight: Vec<i64>, tiebreak: TieBreak) -> Self {
        assert!(
            weight.iter().all(|&w| w > 0),
            "ordering weights must be strictly positive"
        );
        TermOrdering { weight, tiebreak }
    }

    /// Full matrix ordering: rows applied lexicographically.
    pub fn matrix(rows: Vec<Vec<i64>>) -> Self {
        assert!(!rows.is_empty(), "matrix ordering needs at least one row");
        TermOrdering {
            weight: Vec::new(),
            tiebreak: TieBreak::Matrix(rows),
        }
    }

    /// The weight row, if any.
    pub fn weight(&self) -> Option<&[i64]> {
        if self.weight.is_empty() {
            None
        } else {
            Some(&self.weight)
        }
    }

    pub fn tiebreak(&self) -> &TieBreak {
        &self.tiebreak
    }

    /// Total order on terms: weight row first, then the tie-break.
    pub fn compare(&self, u: &Term, v: &Term) -> Ordering {
        assert_eq!(
            u.nvars(),
            v.nvars(),
            "cannot compare terms of different dimension"
        );
        if !self.weight.is_empty() {
            assert_eq!(
                self.weight.len(),
                u.nvars(),
                "ordering dimension does not match terms"
            );
            let wu = u.weighted_degree(&self.weight);
            let wv = v.weighted_degree(&self.weight);
            match wu.cmp(&wv) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        match &self.tiebreak {
            TieBreak::Grevlex => grevlex_cmp(u, v),
            TieBreak::Lex => lex_cmp(u, v),
            TieBreak::Matrix(rows) => {
                for row in rows {
                    assert_eq!(row.len(), u.nvars(), "matrix row dimension mismatch");
                    match u.weighted_degree(row).cmp(&v.weighted_degree(row)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max_term<'a, I>(&self, terms: I) -> Option<&'a Term>
    where
        I: IntoIterator<Item = &'a Term>,
    {
        terms
            .into_iter()
            .max_by(|a, b| self.compare(a, b))
    }

    /// Short textual form for reports.
    pub fn describe(&self) -> String {
        let tb = match &self.tiebreak {
            TieBreak::Grevlex => "grevlex".to_string(),
            TieBreak::Lex => "lex".to_string(),
            TieBreak::Matrix(rows) => format!(
                "matrix[{}]",
                rows.iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect::<Vec<_>>()
                    .join(";")
            ),
        };
        if self.weight.is_empty() {
            tb
        } else {
            format!(
                "({}) {}",
                self.weight
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                tb
            )
        }
    }
}

fn lex_cmp(u: &Term, v: &Term) -> Ordering {
    for (a, b) in u.exponents().iter().zip(v.exponents()) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(u: &Term, v: &Term) -> Ordering {
    match u.total_degree().cmp(&v.total_degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: the term with the smaller exponent on the last
    // differing variable is the larger one.
    for (a, b) in u.exponents().iter().zip(v.exponents()).rev() {
        match a.cmp(b) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(exps: &[u32]) -> Term {
        Term::new(exps.to_vec())
    }

    #[test]
    fn weighted_grevlex_breaks_ties() {
        // x1*x2 vs x3*x4 at equal weight: grevlex prefers x1*x2.
        let o = TermOrdering::weighted(vec![1, 1, 1, 1]);
        assert_eq!(
            o.compare(&t(&[1, 1, 0, 0]), &t(&[0, 0, 1, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn matrix_order_from_rows() {
        // x2 vs x3 under the 4x4 matrix (1,3,2,4),(1,1,1,0),(1,1,0,0),(1,0,0,0):
        // first row gives 3 vs 2, so x2 wins.
        let o = TermOrdering::matrix(vec![
            vec![1, 3, 2, 4],
            vec![1, 1, 1, 0],
            vec![1, 1, 0, 0],
            vec![1, 0, 0, 0],
        ]);
        assert_eq!(
            o.compare(&t(&[0, 1, 0, 0]), &t(&[0, 0, 1, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn reflexive_equal() {
        let o = TermOrdering::grevlex();
        let u = t(&[2, 0, 1]);
        assert_eq!(o.compare(&u, &u), Ordering::Equal);
    }

    #[test]
    fn lex_dominates_degree() {
        let o = TermOrdering::lex();
        // x1 > x2^5 under lex.
        assert_eq!(o.compare(&t(&[1, 0]), &t(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn grevlex_classic() {
        let o = TermOrdering::grevlex();
        // degree first
        assert_eq!(o.compare(&t(&[0, 2]), &t(&[1, 0])), Ordering::Greater);
        // x1 > x2 at equal degree
        assert_eq!(o.compare(&t(&[1, 0]), &t(&[0, 1])), Ordering::Greater);
        // x1*x3 vs x2^2: last differing exponent is x3's; x2^2 has 0 there
        assert_eq!(o.compare(&t(&[1, 0, 1]), &t(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    #[should_panic(expected = "different dimension")]
    fn dimension_mismatch_panics() {
        let o = TermOrdering::grevlex();
        o.compare(&t(&[1, 0]), &t(&[1, 0, 0]));
    }
}
