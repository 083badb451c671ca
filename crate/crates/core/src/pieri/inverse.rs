use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::rcgraph::{Composition, RcGraph};

use super::expansion::admissible_expansion;
use super::ledger::AbSequence;
use super::state::{Run, RunOptions, TraceEvent};

/// Result of undoing an insertion.
#[derive(Debug, Clone)]
pub struct Extraction {
    /// An rc-graph of `w`.
    pub graph: RcGraph,
    /// Row counts of the extracted σ[r,m] graph.
    pub composition: Composition,
    pub trace: Vec<TraceEvent>,
    pub checks: usize,
}

/// Inverse of [`insert`](super::insert): splits an rc-graph of
/// `w' = w · ∏ t_{a_i b_i}` into an rc-graph of `w` and a composition.
///
/// Rows are scanned from the top, east to west. A crossing whose south strand
/// is some `b_i` and whose west strand is `a_i` (or a `b_j` with
/// `a_j = a_i`) is removed together with `(a_i, b_i)`. The nearest bump to
/// its east that matches a re-add configuration then receives a crossing;
/// when there is none, the removal counts towards `k_row`.
pub fn inverse(
    graph: &RcGraph,
    w: &Permutation,
    r: usize,
    ledger: &AbSequence,
    options: RunOptions,
) -> Result<Extraction> {
    if r == 0 {
        return Err(Error::Composition("level must be positive".into()));
    }
    graph.ensure_reduced()?;
    ledger.validate(r)?;
    let expected = ledger.apply_to(w);
    if graph.permutation() != expected {
        return Err(Error::Ledger(format!(
            "graph carries {} but w·∏t = {expected}",
            graph.permutation()
        )));
    }
    let mut run = Run::new(graph, ledger.clone(), r, w.clone(), options);
    let mut counts = vec![0usize; r];
    let mut row = 0;
    while !run.ledger.is_empty() {
        row += 1;
        if row > run.max_row() {
            return Err(Error::Violated(format!(
                "ledger {} not exhausted after the last row",
                run.ledger
            )));
        }
        run.log(TraceEvent::Row(row));
        let mut next = run.row_columns(row).last().copied();
        while let Some(j) = next {
            if run.ledger.is_empty() {
                break;
            }
            let grid = run.grid();
            if let Some(index) = run.removal_target(&grid, (row, j)) {
                run.remove((row, j), index)?;
                let grid = run.grid();
                let bound = run.column_bound(&grid, row);
                let readd = (j + 1..=bound).find_map(|jj| {
                    run.inverse_addition(&grid, (row, jj))
                        .map(|a| ((row, jj), a))
                });
                match readd {
                    Some((cell, addition)) => run.add(cell, addition)?,
                    None if row <= r => counts[row - 1] += 1,
                    None => {
                        return Err(Error::Violated(format!(
                            "extracted a crossing from row {row} below level {r}"
                        )))
                    }
                }
            }
            next = run.row_columns(row).into_iter().rfind(|&c| c < j);
        }
    }
    let out = RcGraph::from_set(run.graph, run.window);
    if run.options.verify {
        out.ensure_reduced()
            .map_err(|e| Error::Violated(format!("inverse output: {e}")))?;
    }
    Ok(Extraction {
        graph: out,
        composition: Composition::new(counts)?,
        trace: run.trace,
        checks: run.checks,
    })
}

/// [`inverse`] with the ledger recovered from `admissible_expansion(w, r, m)`.
pub fn inverse_for(
    graph: &RcGraph,
    w: &Permutation,
    r: usize,
    m: usize,
    options: RunOptions,
) -> Result<Extraction> {
    let target = graph.permutation();
    let expansion = admissible_expansion(w, r, m)?;
    let term = expansion
        .iter()
        .find(|t| t.permutation == target)
        .ok_or_else(|| Error::Ledger(format!("{target} does not occur in the expansion of {w}")))?;
    inverse(graph, w, r, &term.ledger, options)
}
