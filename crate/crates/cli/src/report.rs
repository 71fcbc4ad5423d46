//! Per-run reports in TSV and JSON.

use dyngb::{Stats, TermOrdering, TieBreak};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct StatsReport {
    pub rejected_by_corners: u64,
    pub rejected_by_disjoint_cones: u64,
    pub lps_solved: u64,
    pub lps_failed: u64,
    pub constraint_count: u64,
    pub spolys_processed: u64,
    pub zero_reductions: u64,
    pub candidate_batches: u64,
}

impl From<&Stats> for StatsReport {
    fn from(s: &Stats) -> Self {
        StatsReport {
            rejected_by_corners: s.rejected_by_corners,
            rejected_by_disjoint_cones: s.rejected_by_disjoint_cones,
            lps_solved: s.lps_solved,
            lps_failed: s.lps_failed,
            constraint_count: s.constraint_count,
            spolys_processed: s.spolys_processed,
            zero_reductions: s.zero_reductions,
            candidate_batches: s.candidate_batches,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct OrderReport {
    /// Weight row, empty for pure lex/grevlex/matrix orders.
    pub weight: Vec<i64>,
    pub tiebreak: String,
}

impl From<&TermOrdering> for OrderReport {
    fn from(o: &TermOrdering) -> Self {
        let tiebreak = match o.tiebreak() {
            TieBreak::Grevlex => "grevlex".to_string(),
            TieBreak::Lex => "lex".to_string(),
            TieBreak::Matrix(rows) => format!(
                "matrix:{}",
                rows.iter()
                    .map(|r| r
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(","))
                    .collect::<Vec<_>>()
                    .join(";")
            ),
        };
        OrderReport {
            weight: o.weight().map(|w| w.to_vec()).unwrap_or_default(),
            tiebreak,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RunReport {
    pub system_name: String,
    pub mode: String,
    pub stats: StatsReport,
    pub basis_size_pols: usize,
    pub basis_size_terms: usize,
    pub final_order: OrderReport,
    /// `None` when verification was not requested.
    pub verified: Option<bool>,
}

pub const TSV_HEADER: &str = "system\tmode\trejected_corners\trejected_disjoint\tlps_solved\tlps_failed\tconstraints_final\tpols\tterms\tverified";

impl RunReport {
    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.system_name,
            self.mode,
            self.stats.rejected_by_corners,
            self.stats.rejected_by_disjoint_cones,
            self.stats.lps_solved,
            self.stats.lps_failed,
            self.stats.constraint_count,
            self.basis_size_pols,
            self.basis_size_terms,
            match self.verified {
                Some(true) => "true",
                Some(false) => "false",
                None => "-",
            }
        )
    }

    pub fn json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
