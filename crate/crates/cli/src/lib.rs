//! Command-line front end: system files, benchmark generators, and
//! Table-style run reports.

pub mod report;
pub mod run;
pub mod syntax;

pub use report::{OrderReport, RunReport, StatsReport, TSV_HEADER};
pub use run::{parse_order, render_basis, resolve_system, run_all, run_one, InputError, RunSpec};
pub use syntax::{parse_system, render_polynomial, render_system, ParseError, SystemFile};
