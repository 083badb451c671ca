//! Row insertion of σ[r,m] rc-graphs into arbitrary rc-graphs, its inverse,
//! and the admissible expansion it realises bijectively.

mod expansion;
mod insert;
mod inverse;
mod ledger;
mod state;

pub use expansion::{admissible_expansion, check_admissible, Term};
pub use insert::{algorithm2, insert, Insertion};
pub use inverse::{inverse, inverse_for, Extraction};
pub use ledger::{ledger_insert_case1, ledger_insert_case2, AbSequence, Pair};
pub use state::{format_trace, RunOptions, TraceEvent};
