use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::rcgraph::{Composition, RcGraph};

use super::ledger::AbSequence;
use super::state::{Run, RunOptions, TraceEvent};

/// Result of inserting a σ[r,m] graph into an rc-graph of `w`.
#[derive(Debug, Clone)]
pub struct Insertion {
    /// An rc-graph of `w' = w · t_{a_1 b_1} ... t_{a_m b_m}`.
    pub graph: RcGraph,
    pub ledger: AbSequence,
    pub trace: Vec<TraceEvent>,
    /// Number of verification assertions evaluated.
    pub checks: usize,
}

impl Insertion {
    pub fn permutation(&self) -> Permutation {
        self.graph.permutation()
    }
}

/// Row insertion of the σ[r,m] graph with row counts `comp` into the
/// rc-graph `graph`.
///
/// Rows are handled from the lowest row that receives crossings up to row 1.
/// Every row but the first is first rectified, then receives its `k_s` new
/// crossings, each at the rightmost admissible bump.
pub fn insert(
    graph: &RcGraph,
    r: usize,
    comp: &Composition,
    options: RunOptions,
) -> Result<Insertion> {
    graph.ensure_reduced()?;
    if comp.r() != r {
        return Err(Error::Composition(format!(
            "expected {r} parts for level {r}, got {}",
            comp.r()
        )));
    }
    let w = graph.permutation();
    let mut run = Run::new(graph, AbSequence::new(), r, w, options);

    if let Some(first) = (1..=r).rev().find(|&s| comp.part(s) > 0) {
        for row in (1..=first).rev() {
            run.log(TraceEvent::Row(row));
            if row < first {
                rectify(&mut run, row)?;
                run.check_strand_order(row)?;
                check_reconstruction(&mut run, row)?;
            }
            for _ in 0..comp.part(row) {
                insert_one(&mut run, row)?;
            }
            check_reconstruction(&mut run, row)?;
        }
    }

    let out = RcGraph::from_set(run.graph, run.window);
    if run.options.verify {
        out.ensure_reduced()
            .map_err(|e| Error::Violated(format!("insertion output: {e}")))?;
    }
    Ok(Insertion {
        graph: out,
        ledger: run.ledger,
        trace: run.trace,
        checks: run.checks,
    })
}

fn insert_one(run: &mut Run, row: usize) -> Result<()> {
    let grid = run.grid();
    let bound = run.column_bound(&grid, row);
    let (cell, addition) = (1..=bound)
        .rev()
        .find_map(|j| run.forward_addition(&grid, (row, j)).map(|a| ((row, j), a)))
        .ok_or(Error::Infeasible { row })?;
    run.add(cell, addition)
}

/// Scans `row` west to east; each crossing of a ledger strand `b_i` with its
/// partner `a_i` (or with another `b` of the same run) is removed and the
/// crossing re-added at the nearest insertion configuration to its west.
fn rectify(run: &mut Run, row: usize) -> Result<()> {
    let mut from = 1;
    loop {
        let grid = run.grid();
        let target = run
            .row_columns(row)
            .into_iter()
            .filter(|&j| j >= from)
            .find_map(|j| run.rectify_target(&grid, (row, j)).map(|i| (j, i)));
        let Some((j, index)) = target else {
            return Ok(());
        };
        run.remove((row, j), index)?;
        let grid = run.grid();
        let (cell, addition) = (1..j)
            .rev()
            .find_map(|jj| {
                run.forward_addition(&grid, (row, jj))
                    .map(|a| ((row, jj), a))
            })
            .ok_or_else(|| {
                Error::Violated(format!(
                    "no insertion configuration west of ({row},{j}) after rectifying"
                ))
            })?;
        run.add(cell, addition)?;
        from = j + 1;
    }
}

/// Runs the reconstruction pass on a copy of the current state when
/// verifying, and checks that it yields an rc-graph of the original `w`.
fn check_reconstruction(run: &mut Run, row: usize) -> Result<()> {
    if !run.options.verify {
        return Ok(());
    }
    run.checks += 1;
    let snapshot = RcGraph::from_set(run.graph.clone(), run.window);
    let recovered = algorithm2(&snapshot, &run.ledger, row, &run.w, RunOptions::verified())?;
    if recovered.permutation() != run.w || !recovered.is_reduced() {
        return Err(Error::Violated(format!(
            "reconstruction from row {row} gave {recovered}, not an rc-graph of {}",
            run.w
        )));
    }
    Ok(())
}

/// Removes the ledger from a mid-insertion graph.
///
/// Starting at `start_row` and moving down, each row is scanned east to
/// west; a crossing whose south strand is some `b_i` and whose west strand is
/// `a_i` (or a `b_j` with `a_j = a_i`) is deleted along with `(a_i, b_i)`.
/// `w` is the permutation the caller started from; the result must be an
/// rc-graph of it once the ledger is exhausted.
pub fn algorithm2(
    graph: &RcGraph,
    ledger: &AbSequence,
    start_row: usize,
    w: &Permutation,
    options: RunOptions,
) -> Result<RcGraph> {
    let r = ledger.pairs().iter().map(|p| p.a).max().unwrap_or(0);
    let mut run = Run::new(graph, ledger.clone(), r, w.clone(), options);
    // entry state must already satisfy the ledger identity
    run.check_ledger_identity()?;
    let last_row = run.max_row();
    for row in start_row.max(1)..=last_row {
        if run.ledger.is_empty() {
            break;
        }
        run.log(TraceEvent::Row(row));
        let columns = run.row_columns(row);
        for &j in columns.iter().rev() {
            let grid = run.grid();
            if let Some(index) = run.removal_target(&grid, (row, j)) {
                run.remove((row, j), index)?;
            }
        }
    }
    if !run.ledger.is_empty() {
        return Err(Error::Violated(format!(
            "reconstruction left pairs {} in the ledger",
            run.ledger
        )));
    }
    Ok(RcGraph::from_set(run.graph, run.window))
}
