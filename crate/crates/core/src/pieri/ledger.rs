use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A transposition pair `(a, b)` with `a <= r < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    pub a: usize,
    pub b: usize,
}

impl Pair {
    pub fn new(a: usize, b: usize) -> Self {
        Self { a, b }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// The ordered ledger `(a_1,b_1), ..., (a_l,b_l)` kept by the insertion
/// algorithms: `a` values weakly increase and `b` values are distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AbSequence {
    pairs: Vec<Pair>,
}

impl AbSequence {
    pub fn new() -> Self {
        Self::default()
    }

    /// Checks the ordering and distinctness invariants (but not the level).
    pub fn from_pairs(pairs: Vec<Pair>) -> Result<Self> {
        let seq = Self { pairs };
        seq.check_shape()?;
        Ok(seq)
    }

    fn check_shape(&self) -> Result<()> {
        if let Some((p, q)) = self.pairs.iter().tuple_windows().find(|(p, q)| p.a > q.a) {
            return Err(Error::Ledger(format!(
                "{p} precedes {q}: a-values must weakly increase"
            )));
        }
        if let Some(b) = self.pairs.iter().map(|p| p.b).duplicates().next() {
            return Err(Error::Ledger(format!("b = {b} appears twice")));
        }
        if let Some(p) = self.pairs.iter().find(|p| p.a == 0 || p.a == p.b) {
            return Err(Error::Ledger(format!(
                "{p} is not a transposition of positive integers"
            )));
        }
        Ok(())
    }

    /// Checks every invariant for level `r`: `a <= r < b` on top of the
    /// ordering and distinctness constraints.
    pub fn validate(&self, r: usize) -> Result<()> {
        self.check_shape()?;
        if let Some(p) = self.pairs.iter().find(|p| p.a > r || p.b <= r) {
            return Err(Error::Ledger(format!("{p} violates a <= {r} < b")));
        }
        Ok(())
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn get(&self, i: usize) -> Pair {
        self.pairs[i]
    }

    /// Index of the pair whose `b` is `strand`.
    pub fn position_of_b(&self, strand: usize) -> Option<usize> {
        self.pairs.iter().position(|p| p.b == strand)
    }

    pub fn has_b(&self, strand: usize) -> bool {
        self.position_of_b(strand).is_some()
    }

    fn ensure_fresh(&self, t: usize) -> Result<()> {
        if self.has_b(t) {
            Err(Error::Ledger(format!("b = {t} is already in the ledger")))
        } else {
            Ok(())
        }
    }

    /// Slot after every pair with `a <= s`: the end of the run of `s`, or
    /// where `s` keeps the `a` values sorted.
    fn run_end(&self, s: usize) -> usize {
        self.pairs.iter().take_while(|p| p.a <= s).count()
    }

    /// Adds `(s, t)` at the end of the run of pairs with `a = s`. Returns the
    /// index it landed at.
    pub fn insert_case1(&mut self, s: usize, t: usize) -> Result<usize> {
        self.ensure_fresh(t)?;
        let at = self.run_end(s);
        self.pairs.insert(at, Pair::new(s, t));
        Ok(at)
    }

    /// Adds `(a_i, t)` immediately before the pair at index `i`.
    pub fn insert_case2(&mut self, i: usize, t: usize) -> Result<usize> {
        self.ensure_fresh(t)?;
        let a = self.index_checked(i)?.a;
        self.pairs.insert(i, Pair::new(a, t));
        Ok(i)
    }

    fn index_checked(&self, i: usize) -> Result<Pair> {
        self.pairs
            .get(i)
            .copied()
            .ok_or_else(|| Error::Ledger(format!("no pair at index {i}")))
    }

    pub fn remove(&mut self, i: usize) -> Pair {
        self.pairs.remove(i)
    }

    /// `w · t_{a_1 b_1} · ... · t_{a_l b_l}`.
    pub fn apply_to(&self, w: &Permutation) -> Permutation {
        self.pairs.iter().fold(w.clone(), |acc, p| {
            acc.right_transpose(p.a, p.b)
                .expect("ledger pairs are proper transpositions")
        })
    }
}

/// `[(a,b),...]`; the empty ledger is `[]`.
impl fmt::Display for AbSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.pairs.iter().join(","))
    }
}

/// Accepts any text whose integers, read in order, form the pairs, e.g.
/// `[(2,3),(2,4)]` or `2,3;2,4`.
impl FromStr for AbSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let numbers = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Ledger(format!("bad number `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if numbers.len() % 2 != 0 {
            return Err(Error::Ledger("odd number of entries".into()));
        }
        Self::from_pairs(numbers.chunks(2).map(|c| Pair::new(c[0], c[1])).collect())
    }
}

/// Functional form of [`AbSequence::insert_case1`].
pub fn ledger_insert_case1(seq: &AbSequence, s: usize, t: usize) -> Result<AbSequence> {
    let mut out = seq.clone();
    out.insert_case1(s, t)?;
    Ok(out)
}

/// Functional form of [`AbSequence::insert_case2`]; `i` is 0-based.
pub fn ledger_insert_case2(seq: &AbSequence, i: usize, t: usize) -> Result<AbSequence> {
    let mut out = seq.clone();
    out.insert_case2(i, t)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(pairs: &[(usize, usize)]) -> AbSequence {
        AbSequence::from_pairs(pairs.iter().map(|&(a, b)| Pair::new(a, b)).collect()).unwrap()
    }

    #[test]
    fn case1_placement() {
        assert_eq!(
            ledger_insert_case1(&seq(&[]), 1, 2).unwrap(),
            seq(&[(1, 2)])
        );
        assert_eq!(
            ledger_insert_case1(&seq(&[(1, 2)]), 1, 3).unwrap(),
            seq(&[(1, 2), (1, 3)])
        );
        assert_eq!(
            ledger_insert_case1(&seq(&[(2, 5)]), 1, 4).unwrap(),
            seq(&[(1, 4), (2, 5)])
        );
        assert_eq!(
            ledger_insert_case1(&seq(&[(1, 4), (2, 5), (2, 6), (3, 7)]), 2, 8).unwrap(),
            seq(&[(1, 4), (2, 5), (2, 6), (2, 8), (3, 7)])
        );
        assert!(ledger_insert_case1(&seq(&[(1, 2)]), 1, 2).is_err());
    }

    #[test]
    fn case2_placement() {
        let out = ledger_insert_case2(&seq(&[(2, 4)]), 0, 5).unwrap();
        assert_eq!(out, seq(&[(2, 5), (2, 4)]));
        assert!(out.validate(2).is_ok());
        assert!(ledger_insert_case2(&seq(&[(2, 4)]), 0, 4).is_err());
        assert!(ledger_insert_case2(&seq(&[(2, 4)]), 3, 5).is_err());
    }

    #[test]
    fn validation() {
        assert!(AbSequence::from_pairs(vec![Pair::new(2, 4), Pair::new(1, 5)]).is_err());
        assert!(AbSequence::from_pairs(vec![Pair::new(1, 4), Pair::new(2, 4)]).is_err());
        assert!(seq(&[(1, 3)]).validate(2).is_ok());
        assert!(seq(&[(1, 2)]).validate(2).is_err());
        assert!(seq(&[(3, 4)]).validate(2).is_err());
    }

    #[test]
    fn text_forms() {
        let s = seq(&[(2, 3), (2, 4)]);
        assert_eq!(s.to_string(), "[(2,3),(2,4)]");
        assert_eq!(s.to_string().parse::<AbSequence>().unwrap(), s);
        assert_eq!("2,3;2,4".parse::<AbSequence>().unwrap(), s);
        assert_eq!("[]".parse::<AbSequence>().unwrap(), AbSequence::new());
        assert!("2,3,2".parse::<AbSequence>().is_err());
    }

    #[test]
    fn product() {
        let w = Permutation::identity(2);
        assert_eq!(
            seq(&[(2, 3), (2, 4)]).apply_to(&w),
            "1,4,2,3".parse().unwrap()
        );
    }
}
