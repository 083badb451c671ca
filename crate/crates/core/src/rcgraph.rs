//! RC-graphs (pipe dreams) as finite sets of crossing cells.
//!
//! Strands enter the grid at the west end of each row and travel north and
//! east. A crossing cell passes the west entrant east and the south entrant
//! north; every other cell is a bump that turns the west entrant north and
//! the south entrant east. Strands are named by the row they start in, and
//! the strand starting in row `i` leaves through the top of column `w(i)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::{Permutation, Word};
use crate::polynomial::{weak_compositions, Monomial, MultiPoly};

/// A grid position `(row, column)`, both 1-indexed.
pub type Cell = (usize, usize);

/// Entrant labels for every cell of a square window, traced once.
#[derive(Debug, Clone)]
pub struct StrandGrid {
    size: usize,
    max_diagonal: usize,
    west: Vec<usize>,
    south: Vec<usize>,
    crossings: BTreeSet<Cell>,
}

impl StrandGrid {
    /// Traces `crossings` over a window of at least `min_size` rows and
    /// columns (grown so that the trace is exact everywhere).
    pub fn new(crossings: &BTreeSet<Cell>, min_size: usize) -> Self {
        let max_diagonal = crossings.iter().map(|&(i, j)| i + j - 1).max().unwrap_or(0);
        let max_row = crossings.iter().map(|&(i, _)| i).max().unwrap_or(0);
        let size = min_size.max(max_diagonal + 2).max(max_row).max(1);
        let mut grid = Self {
            size,
            max_diagonal,
            west: vec![0; size * size],
            south: vec![0; size * size],
            crossings: crossings.clone(),
        };
        for i in (1..=size).rev() {
            for j in 1..=size {
                let west = if j == 1 {
                    i
                } else {
                    grid.exit_east((i, j - 1))
                };
                let south = if i == size {
                    size + j
                } else {
                    grid.exit_north((i + 1, j))
                };
                let k = grid.index((i, j));
                grid.west[k] = west;
                grid.south[k] = south;
            }
        }
        grid
    }

    fn index(&self, (i, j): Cell) -> usize {
        (i - 1) * self.size + (j - 1)
    }

    fn in_window(&self, (i, j): Cell) -> bool {
        i >= 1 && j >= 1 && i <= self.size && j <= self.size
    }

    /// `(west entrant, south entrant)` of a cell.
    pub fn labels(&self, cell: Cell) -> (usize, usize) {
        if self.in_window(cell) {
            let k = self.index(cell);
            (self.west[k], self.south[k])
        } else {
            // Beyond the window every strand runs along its own antidiagonal.
            let d = cell.0 + cell.1 - 1;
            debug_assert!(d >= self.max_diagonal + 2);
            (d, d + 1)
        }
    }

    pub fn exit_east(&self, cell: Cell) -> usize {
        let (w, s) = self.labels(cell);
        if self.crossings.contains(&cell) {
            w
        } else {
            s
        }
    }

    pub fn exit_north(&self, cell: Cell) -> usize {
        let (w, s) = self.labels(cell);
        if self.crossings.contains(&cell) {
            s
        } else {
            w
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The permutation carried by the strands.
    pub fn permutation(&self) -> Permutation {
        let mut window = vec![0; self.size];
        for j in 1..=self.size {
            let strand = self.exit_north((1, j));
            window[strand - 1] = j;
        }
        Permutation::from_one_line(window).expect("strand tracing yields a bijection")
    }

    /// Column at which `strand` leaves row `row` through its top edge, if the
    /// strand is present in that row.
    pub fn north_exit_column(&self, row: usize, strand: usize) -> Option<usize> {
        if strand < row {
            return None;
        }
        (1..=self.size)
            .find(|&j| self.exit_north((row, j)) == strand)
            .or_else(|| {
                // Strands beyond the traced window leave row `row` on their
                // antidiagonal.
                (strand + 1 > self.size + row).then(|| strand + 1 - row)
            })
    }
}

/// A finite set of crossings together with an ambient window `N` such that
/// `i + j <= N` for every crossing `(i, j)`.
///
/// The window is presentation only; equality and ordering compare crossings.
/// A graph is an rc-graph when it is [reduced](Self::is_reduced).
#[derive(Debug, Clone)]
pub struct RcGraph {
    window: usize,
    crossings: BTreeSet<Cell>,
}

impl PartialEq for RcGraph {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
    }
}

impl Eq for RcGraph {}

impl std::hash::Hash for RcGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.crossings.hash(state);
    }
}

impl Ord for RcGraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.crossings.iter().cmp(other.crossings.iter())
    }
}

impl PartialOrd for RcGraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn required_window(crossings: &BTreeSet<Cell>) -> usize {
    crossings.iter().map(|&(i, j)| i + j).max().unwrap_or(1)
}

impl RcGraph {
    /// A graph with the smallest window that holds its crossings.
    pub fn new(crossings: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let crossings: BTreeSet<Cell> = crossings.into_iter().collect();
        if let Some(&(i, j)) = crossings.iter().find(|&&(i, j)| i == 0 || j == 0) {
            return Err(Error::GraphParse(format!(
                "crossing ({i},{j}) is not 1-indexed"
            )));
        }
        let window = required_window(&crossings);
        Ok(Self { window, crossings })
    }

    pub fn with_window(crossings: impl IntoIterator<Item = Cell>, window: usize) -> Result<Self> {
        let g = Self::new(crossings)?;
        g.rewindow(window)
    }

    /// The same graph in a window of size `window`.
    pub fn rewindow(mut self, window: usize) -> Result<Self> {
        if let Some(&(i, j)) = self.crossings.iter().find(|&&(i, j)| i + j > window) {
            return Err(Error::GraphParse(format!(
                "crossing ({i},{j}) does not fit in window {window}"
            )));
        }
        self.window = window.max(1);
        Ok(self)
    }

    pub(crate) fn from_set(crossings: BTreeSet<Cell>, min_window: usize) -> Self {
        let window = required_window(&crossings).max(min_window).max(1);
        Self { window, crossings }
    }

    pub fn empty(window: usize) -> Self {
        Self {
            window: window.max(1),
            crossings: BTreeSet::new(),
        }
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn crossings(&self) -> &BTreeSet<Cell> {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.crossings.contains(&cell)
    }

    pub fn grid(&self) -> StrandGrid {
        StrandGrid::new(&self.crossings, self.window)
    }

    /// Permutation by strand tracing.
    pub fn permutation(&self) -> Permutation {
        self.grid().permutation()
    }

    /// Word and compatible sequence read row by row from the top, right to
    /// left within a row: `a = i + j - 1`, `α = i`.
    pub fn word_and_sequence(&self) -> (Word, Vec<usize>) {
        let mut cells: Vec<Cell> = self.crossings.iter().copied().collect();
        cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let word = cells.iter().map(|&(i, j)| i + j - 1).collect();
        let alpha = cells.iter().map(|&(i, _)| i).collect();
        (Word(word), alpha)
    }

    /// `x^D`: one factor `x_i` per crossing in row `i`.
    pub fn monomial(&self) -> MultiPoly {
        MultiPoly::monomial(Monomial::new(
            self.row_counts().into_iter().map(|c| c as u32).collect(),
        ))
    }

    /// Number of crossings in each row, indexed from row 1.
    pub fn row_counts(&self) -> Vec<usize> {
        let rows = self.crossings.iter().map(|&(i, _)| i).max().unwrap_or(0);
        let mut counts = vec![0; rows];
        for &(i, _) in &self.crossings {
            counts[i - 1] += 1;
        }
        counts
    }

    /// Whether the crossing count equals the length of the traced permutation.
    pub fn is_reduced(&self) -> bool {
        self.len() == self.permutation().length()
    }

    pub fn ensure_reduced(&self) -> Result<()> {
        let length = self.permutation().length();
        if self.len() == length {
            Ok(())
        } else {
            Err(Error::NotReduced {
                crossings: self.len(),
                length,
            })
        }
    }

    /// Unordered strand pairs meeting at each crossing, keyed by pair.
    pub fn crossing_pairs(&self) -> BTreeMap<(usize, usize), Vec<Cell>> {
        let grid = self.grid();
        let mut pairs: BTreeMap<(usize, usize), Vec<Cell>> = BTreeMap::new();
        for &cell in &self.crossings {
            let (w, s) = grid.labels(cell);
            pairs.entry((w.min(s), w.max(s))).or_default().push(cell);
        }
        pairs
    }

    /// Ladder moves available on a reduced graph.
    ///
    /// A crossing at `(i, j)` with `(i, j+1)` empty moves to
    /// `(i-k-1, j+1)` when rows `i-1, ..., i-k` hold crossings in both
    /// columns `j` and `j+1` and row `i-k-1` holds neither.
    pub fn ladder_moves(&self) -> Result<Vec<(LadderMove, RcGraph)>> {
        self.ensure_reduced()?;
        let mut out = Vec::new();
        for &(i, j) in &self.crossings {
            if self.contains((i, j + 1)) {
                continue;
            }
            let mut top = i - 1;
            while top >= 1 && self.contains((top, j)) && self.contains((top, j + 1)) {
                top -= 1;
            }
            if top == 0 || self.contains((top, j)) || self.contains((top, j + 1)) {
                continue;
            }
            let mv = LadderMove {
                from: (i, j),
                to: (top, j + 1),
                size: i - top - 1,
            };
            out.push((mv, self.apply_move(mv)));
        }
        Ok(out)
    }

    /// The inverse ladder moves: a crossing at `(i, j+1)` with `(i, j)`
    /// empty drops to `(i+k+1, j)` across `k` full rows.
    pub fn inverse_ladder_moves(&self) -> Vec<(LadderMove, RcGraph)> {
        let mut out = Vec::new();
        for &(i, jj) in &self.crossings {
            if jj < 2 || self.contains((i, jj - 1)) {
                continue;
            }
            let j = jj - 1;
            let mut bottom = i + 1;
            while self.contains((bottom, j)) && self.contains((bottom, j + 1)) {
                bottom += 1;
            }
            if self.contains((bottom, j)) || self.contains((bottom, j + 1)) {
                continue;
            }
            let mv = LadderMove {
                from: (i, jj),
                to: (bottom, j),
                size: bottom - i - 1,
            };
            out.push((mv, self.apply_move(mv)));
        }
        out
    }

    fn apply_move(&self, mv: LadderMove) -> RcGraph {
        let mut crossings = self.crossings.clone();
        crossings.remove(&mv.from);
        crossings.insert(mv.to);
        RcGraph::from_set(crossings, self.window)
    }

    /// Canonical JSON: `{"window":N,"crossings":[[i,j],...]}`.
    pub fn serialize(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("plain data serializes")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::GraphParse(e.to_string()))?;
        let mut seen = BTreeSet::new();
        for (k, &[i, j]) in raw.crossings.iter().enumerate() {
            if i == 0 || j == 0 {
                return Err(Error::GraphParse(format!(
                    "crossing #{k} ({i},{j}) is not 1-indexed"
                )));
            }
            if i + j > raw.window {
                return Err(Error::GraphParse(format!(
                    "crossing #{k} ({i},{j}) lies outside window {}",
                    raw.window
                )));
            }
            if !seen.insert((i, j)) {
                return Err(Error::GraphParse(format!(
                    "crossing #{k} ({i},{j}) is repeated"
                )));
            }
        }
        Ok(Self {
            window: raw.window.max(1),
            crossings: seen,
        })
    }

    /// ASCII picture: a header of column digits, then one line per row with
    /// `+` for a crossing and `.` otherwise.
    pub fn render(&self) -> String {
        let n = self.window;
        let gutter = n.to_string().len();
        let mut out = format!("{:gutter$} ", "");
        out.extend((1..=n).map(|j| char::from_digit((j % 10) as u32, 10).unwrap()));
        out.push('\n');
        for i in 1..=n {
            out.push_str(&format!("{i:>gutter$} "));
            out.extend((1..=n).map(|j| if self.contains((i, j)) { '+' } else { '.' }));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for RcGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.crossings
                .iter()
                .map(|(i, j)| format!("({i},{j})"))
                .join(",")
        )
    }
}

impl FromStr for RcGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    window: usize,
    crossings: Vec<[usize; 2]>,
}

impl From<&RcGraph> for GraphJson {
    fn from(g: &RcGraph) -> Self {
        Self {
            window: g.window,
            crossings: g.crossings.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

/// One ladder move: the crossing at `from` is relocated to `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LadderMove {
    pub from: Cell,
    pub to: Cell,
    pub size: usize,
}

/// `(west entrant, south entrant)` of cell `(i, j)` in `graph`.
pub fn strand_labels(graph: &RcGraph, i: usize, j: usize) -> (usize, usize) {
    StrandGrid::new(graph.crossings(), i + j).labels((i, j))
}

/// The bottom rc-graph: row `i` holds the left-justified cells
/// `(i,1), ..., (i,c_i)` where `c` is the Lehmer code.
pub fn bottom(w: &Permutation) -> RcGraph {
    let code = w.lehmer_code();
    let crossings = code
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| (1..=c).map(move |j| (i + 1, j)))
        .collect();
    RcGraph::from_set(crossings, w.support())
}

/// `RC(w)` as the closure of the bottom graph under ladder moves, sorted.
pub fn enumerate_rc(w: &Permutation) -> Vec<RcGraph> {
    let start = bottom(w);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(g) = queue.pop_front() {
        for (_, next) in g.ladder_moves().expect("ladder moves preserve reducedness") {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// `RC(w)` built from every reduced word and each of its compatible
/// sequences, sorted. Independent of ladder moves.
pub fn enumerate_rc_by_words(w: &Permutation) -> Vec<RcGraph> {
    let mut out = BTreeSet::new();
    for word in w.reduced_words() {
        for alpha in compatible_sequences(word.letters()) {
            let crossings = word
                .letters()
                .iter()
                .zip(&alpha)
                .map(|(&a, &row)| (row, a - row + 1))
                .collect();
            out.insert(RcGraph::from_set(crossings, w.support()));
        }
    }
    out.into_iter().collect()
}

/// Sequences `α` with `α` weakly increasing, `α_k <= a_k`, and
/// `α_k < α_{k+1}` whenever `a_k < a_{k+1}`.
pub fn compatible_sequences(word: &[usize]) -> Vec<Vec<usize>> {
    fn go(word: &[usize], alpha: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = alpha.len();
        if k == word.len() {
            out.push(alpha.clone());
            return;
        }
        let low = match k {
            0 => 1,
            _ => alpha[k - 1] + usize::from(word[k - 1] < word[k]),
        };
        for v in low..=word[k] {
            alpha.push(v);
            go(word, alpha, out);
            alpha.pop();
        }
    }
    let mut out = Vec::new();
    go(word, &mut Vec::new(), &mut out);
    out
}

/// A weak composition `(k_1, ..., k_r)`; `k_s` crossings go into row `s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Composition("need at least one part".into()));
        }
        Ok(Self { parts })
    }

    pub fn zero(r: usize) -> Self {
        Self {
            parts: vec![0; r.max(1)],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn r(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts.
    pub fn m(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `k_s` for row `s` (zero past the last part).
    pub fn part(&self, s: usize) -> usize {
        self.parts.get(s - 1).copied().unwrap_or(0)
    }

    pub fn monomial(&self) -> MultiPoly {
        MultiPoly::from_exponents(self.parts.iter().map(|&k| k as u32).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| {
                    Error::Composition(format!("`{}` is not a natural number", t.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All weak compositions of `m` into `r` parts, first part descending.
pub fn compositions(m: usize, r: usize) -> Vec<Composition> {
    weak_compositions(m, r)
        .into_iter()
        .map(|parts| Composition { parts })
        .collect()
}

/// The member of `RC(σ[r,m])` whose row counts are `comp`.
pub fn sigma_graph(r: usize, comp: &Composition) -> Result<RcGraph> {
    if comp.r() != r {
        return Err(Error::Composition(format!(
            "expected {r} parts, got {}",
            comp.r()
        )));
    }
    let mut matches = enumerate_rc(&Permutation::sigma(r, comp.m()))
        .into_iter()
        .filter(|g| (1..=g.row_counts().len().max(r)).all(|s| row_count(g, s) == comp.part(s)));
    let g = matches.next().ok_or_else(|| {
        Error::Composition(format!(
            "no rc-graph of σ[{r},{}] has rows {comp}",
            comp.m()
        ))
    })?;
    if matches.next().is_some() {
        return Err(Error::Violated(format!(
            "several rc-graphs of σ[{r},{}] have rows {comp}",
            comp.m()
        )));
    }
    Ok(g)
}

fn row_count(g: &RcGraph, s: usize) -> usize {
    g.row_counts().get(s - 1).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn g(cells: &[Cell]) -> RcGraph {
        RcGraph::new(cells.iter().copied()).unwrap()
    }

    fn sample_bottom() -> RcGraph {
        g(&[(1, 1), (1, 2), (2, 1), (4, 1)])
    }

    #[test]
    fn tracing() {
        assert!(g(&[]).permutation().is_identity());
        assert_eq!(sample_bottom().permutation(), p("3,2,1,5,4"));
        assert_eq!(g(&[(2, 1)]).permutation(), p("1,3,2"));
    }

    #[test]
    fn word_extraction() {
        let (word, alpha) = sample_bottom().word_and_sequence();
        assert_eq!(word, Word(vec![2, 1, 2, 4]));
        assert_eq!(alpha, vec![1, 1, 2, 4]);
        assert_eq!(g(&[]).word_and_sequence(), (Word(vec![]), vec![]));
        let (word, alpha) = g(&[(1, 2), (1, 1), (2, 1)]).word_and_sequence();
        assert_eq!(word, Word(vec![2, 1, 2]));
        assert_eq!(alpha, vec![1, 1, 2]);
        assert_eq!(word.to_permutation(), p("3,2,1"));
    }

    #[test]
    fn monomials() {
        assert_eq!(g(&[]).monomial(), MultiPoly::one());
        assert_eq!(sample_bottom().monomial(), "x1^2*x2*x4".parse().unwrap());
        assert_eq!(g(&[(2, 1)]).monomial(), MultiPoly::var(2));
    }

    #[test]
    fn bottom_graphs() {
        assert!(bottom(&Permutation::identity(4)).is_empty());
        assert_eq!(bottom(&p("3,2,1,5,4")), sample_bottom());
        assert_eq!(bottom(&p("3,2,1,5,4")).window(), 5);
        assert_eq!(bottom(&p("1,3,2")), g(&[(2, 1)]));
    }

    #[test]
    fn labels() {
        let d = g(&[(1, 1)]);
        assert_eq!(strand_labels(&d, 2, 1), (2, 3));
        assert_eq!(strand_labels(&d, 1, 2), (1, 3));
        let empty = g(&[]);
        for i in 1..=5 {
            assert_eq!(strand_labels(&empty, i, 1), (i, i + 1));
            for j in 1..=5 {
                assert_eq!(strand_labels(&empty, i, j), (i + j - 1, i + j));
            }
        }
    }

    #[test]
    fn ladder() {
        assert!(g(&[]).ladder_moves().unwrap().is_empty());
        let moves = g(&[(2, 1)]).ladder_moves().unwrap();
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].0.size, 0);
        assert_eq!(moves[0].1, g(&[(1, 2)]));
        // strands 2 and 3 cross twice
        let doubled = g(&[(1, 2), (2, 1)]);
        assert!(doubled.permutation().is_identity());
        assert!(matches!(
            doubled.ladder_moves(),
            Err(Error::NotReduced {
                crossings: 2,
                length: 0
            })
        ));
    }

    #[test]
    fn ladder_move_of_size_one() {
        // rows 2 holds both columns, so the crossing at (3,1) climbs to (1,2)
        let d = g(&[(2, 1), (2, 2), (3, 1)]);
        assert!(d.is_reduced());
        let moves = d.ladder_moves().unwrap();
        let climb = moves.iter().find(|(m, _)| m.from == (3, 1)).unwrap();
        assert_eq!(climb.0.size, 1);
        assert_eq!(climb.0.to, (1, 2));
        assert_eq!(climb.1.permutation(), d.permutation());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_rc(&Permutation::identity(3)), vec![g(&[])]);
        assert_eq!(enumerate_rc(&p("1,3,2")), vec![g(&[(1, 2)]), g(&[(2, 1)])]);
        assert_eq!(
            enumerate_rc(&p("3,2,1")),
            vec![g(&[(1, 1), (1, 2), (2, 1)])]
        );
        assert_eq!(enumerate_rc_by_words(&p("1,3,2")).len(), 2);
        assert_eq!(
            enumerate_rc_by_words(&Permutation::identity(2)),
            vec![g(&[])]
        );
    }

    #[test]
    fn sigma_graphs() {
        assert_eq!(
            sigma_graph(1, &Composition::new(vec![3]).unwrap()).unwrap(),
            g(&[(1, 1), (1, 2), (1, 3)])
        );
        let comps = compositions(2, 2);
        assert_eq!(
            comps.iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>(),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        for c in &comps {
            let d = sigma_graph(2, c).unwrap();
            assert_eq!(d.monomial(), c.monomial());
            assert_eq!(d.permutation(), Permutation::sigma(2, 2));
        }
        assert!(sigma_graph(3, &comps[0]).is_err());
    }

    #[test]
    fn serialization() {
        assert_eq!(
            RcGraph::empty(3).serialize(),
            r#"{"window":3,"crossings":[]}"#
        );
        assert_eq!(
            sample_bottom().rewindow(5).unwrap().serialize(),
            r#"{"window":5,"crossings":[[1,1],[1,2],[2,1],[4,1]]}"#
        );
        assert!(RcGraph::parse(r#"{"window":2,"crossings":[[2,1]]}"#).is_err());
        assert!(RcGraph::parse(r#"{"window":4,"crossings":[[1,1],[1,1]]}"#).is_err());
        assert!(RcGraph::parse(r#"{"window":4,"crossings":[[0,1]]}"#).is_err());
        assert!(RcGraph::parse(r#"{"window":4,"crossings":[[1,1]"#).is_err());
        assert!(RcGraph::parse(r#"{"window":4}"#).is_err());
    }

    #[test]
    fn rendering() {
        let text = sample_bottom().rewindow(5).unwrap().render();
        assert_eq!(
            text,
            "  12345\n1 ++...\n2 +....\n3 .....\n4 +....\n5 .....\n"
        );
    }

    #[test]
    fn exhaustive_s4() {
        for w in Permutation::all(4) {
            let rc = enumerate_rc(&w);
            assert_eq!(rc, enumerate_rc_by_words(&w), "w = {w}");
            for d in &rc {
                assert_eq!(d.permutation(), w);
                assert!(d.is_reduced());
                assert!(d.crossing_pairs().values().all(|cells| cells.len() == 1));
                let (word, alpha) = d.word_and_sequence();
                assert_eq!(word.to_permutation(), w);
                assert!(compatible_sequences(word.letters()).contains(&alpha));
                assert_eq!(RcGraph::parse(&d.serialize()).unwrap(), *d);
                for (mv, next) in d.ladder_moves().unwrap() {
                    assert_eq!(next.permutation(), w);
                    let back = next.inverse_ladder_moves();
                    assert!(back
                        .iter()
                        .any(|(inv, prev)| inv.from == mv.to && prev == d));
                }
            }
        }
    }
}
