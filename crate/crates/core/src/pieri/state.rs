//! Mutable working state shared by the forward insertion, the
//! reconstruction pass and the inverse algorithm.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::rcgraph::{Cell, RcGraph, StrandGrid};

use super::ledger::{AbSequence, Pair};

/// Flags for a single run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Assert the ledger/permutation identity after every mutation, the
    /// strand-order property at every rectified row, and that the
    /// reconstruction pass recovers an rc-graph of `w` from every mid-run
    /// state.
    pub verify: bool,
    /// Record a [`TraceEvent`] log.
    pub trace: bool,
}

impl RunOptions {
    pub fn verified() -> Self {
        Self {
            verify: true,
            trace: false,
        }
    }

    pub fn traced() -> Self {
        Self {
            verify: false,
            trace: true,
        }
    }
}

/// One line of the insertion trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Row(usize),
    Add { cell: Cell, pair: Pair, case: u8 },
    Del { cell: Cell, pair: Pair },
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Row(l) => write!(f, "ROW {l}"),
            TraceEvent::Add { cell, pair, case } => {
                write!(f, "ADD ({},{}) pair={pair} case={case}", cell.0, cell.1)
            }
            TraceEvent::Del { cell, pair } => write!(f, "DEL ({},{}) pair={pair}", cell.0, cell.1),
        }
    }
}

/// Renders a trace as newline-terminated lines.
pub fn format_trace(events: &[TraceEvent]) -> String {
    events.iter().map(|e| format!("{e}\n")).collect()
}

/// How a bump may receive a new crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Addition {
    /// New pair `(s, t)`, placed at the end of the run of `a = s`.
    Fresh { s: usize, t: usize },
    /// New pair `(a_i, t)` placed immediately before the pair at `index`.
    Beside { index: usize, t: usize },
}

impl Addition {
    pub(crate) fn case(self) -> u8 {
        match self {
            Addition::Fresh { .. } => 1,
            Addition::Beside { .. } => 2,
        }
    }
}

pub(crate) struct Run {
    pub graph: BTreeSet<Cell>,
    pub ledger: AbSequence,
    pub r: usize,
    pub w: Permutation,
    pub window: usize,
    pub options: RunOptions,
    pub trace: Vec<TraceEvent>,
    pub checks: usize,
}

impl Run {
    pub fn new(
        graph: &RcGraph,
        ledger: AbSequence,
        r: usize,
        w: Permutation,
        options: RunOptions,
    ) -> Self {
        Self {
            graph: graph.crossings().clone(),
            window: graph.window(),
            ledger,
            r,
            w,
            options,
            trace: Vec::new(),
            checks: 0,
        }
    }

    pub fn grid(&self) -> StrandGrid {
        StrandGrid::new(&self.graph, self.window)
    }

    pub fn log(&mut self, event: TraceEvent) {
        if self.options.trace {
            self.trace.push(event);
        }
    }

    pub fn is_crossing(&self, cell: Cell) -> bool {
        self.graph.contains(&cell)
    }

    /// Rightmost column worth examining in `row`: beyond it both entrants
    /// exceed every ledger strand and the level.
    pub fn column_bound(&self, grid: &StrandGrid, row: usize) -> usize {
        let max_b = self.ledger.pairs().iter().map(|p| p.b).max().unwrap_or(0);
        let strands = grid.size().max(self.r).max(max_b) + 2;
        strands.saturating_sub(row) + 1
    }

    /// Columns of the crossings currently in `row`.
    pub fn row_columns(&self, row: usize) -> Vec<usize> {
        self.graph
            .range((row, 0)..(row + 1, 0))
            .map(|&(_, j)| j)
            .collect()
    }

    pub fn max_row(&self) -> usize {
        self.graph.iter().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Insertion configuration at a bump: west `s <= r`, south `t > r`
    /// (case 1), or west some `b_i`, south `t > r` (case 2); `t` must not
    /// already be a `b`.
    pub fn forward_addition(&self, grid: &StrandGrid, cell: Cell) -> Option<Addition> {
        if self.is_crossing(cell) {
            return None;
        }
        let (west, south) = grid.labels(cell);
        if south <= self.r || self.ledger.has_b(south) {
            return None;
        }
        if west <= self.r {
            Some(Addition::Fresh { s: west, t: south })
        } else {
            self.ledger
                .position_of_b(west)
                .map(|index| Addition::Beside { index, t: south })
        }
    }

    /// Inverse re-add configuration at a bump: south `s <= r`, west `t > r`
    /// (case 1), or south some `b_i`, west `t > r` (case 2); `t` must not
    /// already be a `b`.
    pub fn inverse_addition(&self, grid: &StrandGrid, cell: Cell) -> Option<Addition> {
        if self.is_crossing(cell) {
            return None;
        }
        let (west, south) = grid.labels(cell);
        if west <= self.r || self.ledger.has_b(west) {
            return None;
        }
        if south <= self.r {
            Some(Addition::Fresh { s: south, t: west })
        } else {
            self.ledger
                .position_of_b(south)
                .map(|index| Addition::Beside { index, t: west })
        }
    }

    /// Rectification configuration at a crossing: west `b_i` with south
    /// `a_i`, or south `b_j` where `a_j = a_i`. Returns `i`.
    pub fn rectify_target(&self, grid: &StrandGrid, cell: Cell) -> Option<usize> {
        if !self.is_crossing(cell) {
            return None;
        }
        let (west, south) = grid.labels(cell);
        let i = self.ledger.position_of_b(west)?;
        let a = self.ledger.get(i).a;
        let matches = south == a
            || self
                .ledger
                .position_of_b(south)
                .is_some_and(|j| self.ledger.get(j).a == a);
        matches.then_some(i)
    }

    /// Removal configuration of the reconstruction pass and of the inverse:
    /// south `b_i` with west `a_i`, or west `b_j` where `a_j = a_i`.
    /// Returns `i`.
    pub fn removal_target(&self, grid: &StrandGrid, cell: Cell) -> Option<usize> {
        if !self.is_crossing(cell) {
            return None;
        }
        let (west, south) = grid.labels(cell);
        let i = self.ledger.position_of_b(south)?;
        let a = self.ledger.get(i).a;
        let matches = west == a
            || self
                .ledger
                .position_of_b(west)
                .is_some_and(|j| self.ledger.get(j).a == a);
        matches.then_some(i)
    }

    /// Adds a crossing at `cell` and its pair: case 1 at the end of its run
    /// of `a`, case 2 immediately before the partner pair.
    pub fn add(&mut self, cell: Cell, addition: Addition) -> Result<()> {
        let index = match addition {
            Addition::Fresh { s, t } => self.ledger.insert_case1(s, t)?,
            Addition::Beside { index, t } => self.ledger.insert_case2(index, t)?,
        };
        self.graph.insert(cell);
        self.window = self.window.max(cell.0 + cell.1);
        let pair = self.ledger.get(index);
        self.log(TraceEvent::Add {
            cell,
            pair,
            case: addition.case(),
        });
        self.check_ledger_identity()
    }

    pub fn remove(&mut self, cell: Cell, index: usize) -> Result<Pair> {
        let pair = self.ledger.remove(index);
        self.graph.remove(&cell);
        self.log(TraceEvent::Del { cell, pair });
        self.check_ledger_identity()?;
        Ok(pair)
    }

    /// The strands carry `w · t_{a_1 b_1} ... t_{a_l b_l}` at every moment.
    pub fn check_ledger_identity(&mut self) -> Result<()> {
        if !self.options.verify {
            return Ok(());
        }
        self.checks += 1;
        let carried = self.grid().permutation();
        let expected = self.ledger.apply_to(&self.w);
        if carried != expected {
            return Err(Error::Violated(format!(
                "strands carry {carried} but the ledger {} predicts {expected}",
                self.ledger
            )));
        }
        self.ledger.validate(self.r)
    }

    /// Along the top of `row`, the `b` strands of each run of equal `a`
    /// appear west to east in ledger order, all west of strand `a`.
    pub fn check_strand_order(&mut self, row: usize) -> Result<()> {
        if !self.options.verify {
            return Ok(());
        }
        self.checks += 1;
        let grid = self.grid();
        let column = |strand: usize| {
            grid.north_exit_column(row, strand)
                .ok_or_else(|| Error::Violated(format!("strand {strand} does not cross row {row}")))
        };
        let pairs = self.ledger.pairs();
        let mut start = 0;
        while start < pairs.len() {
            let a = pairs[start].a;
            let end = start + pairs[start..].iter().take_while(|p| p.a == a).count();
            let a_col = column(a)?;
            let mut previous = 0;
            for p in &pairs[start..end] {
                let c = column(p.b)?;
                if c <= previous || c >= a_col {
                    return Err(Error::Violated(format!(
                        "row {row}: strand order of run a={a} in {} breaks at {p}",
                        self.ledger
                    )));
                }
                previous = c;
            }
            start = end;
        }
        Ok(())
    }
}
