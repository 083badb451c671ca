//! Permutations of the positive integers that fix all but finitely many
//! points, stored as a window of one-line notation.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A permutation `w` written as `[w_1, ..., w_n]`, with `w_i = i` for `i > n`.
///
/// The window length carries no meaning: equality, ordering and hashing look
/// only at the window with trailing fixed points removed.
#[derive(Debug, Clone)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn from_one_line(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for (pos, &v) in values.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::MalformedPermutation(format!(
                    "entry {v} at position {} is outside 1..={n}",
                    pos + 1
                )));
            }
            if seen[v] {
                return Err(Error::MalformedPermutation(format!(
                    "entry {v} repeated at position {}",
                    pos + 1
                )));
            }
            seen[v] = true;
        }
        Ok(Self { window: values })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n).collect(),
        }
    }

    /// The simple transposition `s_i = t_{i,i+1}`.
    pub fn simple(i: usize) -> Self {
        Self::transposition(i, i + 1).expect("s_i swaps two distinct points")
    }

    pub fn transposition(a: usize, b: usize) -> Result<Self> {
        Self::identity(a.max(b)).right_transpose(a, b)
    }

    /// The longest element `w_0 = [n, ..., 1]` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Self {
            window: (1..=n).rev().collect(),
        }
    }

    /// `σ[r,m] = [1, ..., r-1, r+m, r, r+1, ..., r+m-1]`, whose Schubert
    /// polynomial is `h_m(x_1, ..., x_r)`.
    pub fn sigma(r: usize, m: usize) -> Self {
        assert!(r >= 1, "sigma needs r >= 1");
        let mut window: Vec<usize> = (1..r).collect();
        window.push(r + m);
        window.extend(r..r + m);
        Self { window }
    }

    /// All elements of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        (1..=n)
            .permutations(n)
            .map(|window| Self { window })
            .collect()
    }

    /// The image `w(i)`; points beyond the window are fixed.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.window.len() {
            self.window[i - 1]
        } else {
            i
        }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.window
    }

    /// The window with trailing fixed points removed.
    pub fn trimmed(&self) -> &[usize] {
        let mut n = self.window.len();
        while n > 0 && self.window[n - 1] == n {
            n -= 1;
        }
        &self.window[..n]
    }

    /// Smallest `n` with `w ∈ S_n`.
    pub fn support(&self) -> usize {
        self.trimmed().len()
    }

    pub fn is_identity(&self) -> bool {
        self.support() == 0
    }

    /// The same permutation with its window padded by fixed points to at
    /// least `n` letters.
    pub fn extended(&self, n: usize) -> Self {
        let mut window = self.window.clone();
        window.extend(window.len() + 1..=n);
        Self { window }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = self.trimmed();
        let mut inversions = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inversions += 1;
                }
            }
        }
        inversions
    }

    /// `c_i = #{j > i : w_j < w_i}`, over the current window.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.window;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .collect()
    }

    /// `(self · other)(i) = self(other(i))`.
    pub fn multiply(&self, other: &Self) -> Self {
        let n = self.window.len().max(other.window.len());
        Self {
            window: (1..=n).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            window[v - 1] = i + 1;
        }
        Self { window }
    }

    /// `w · t_{ab}`: exchange the values in positions `a` and `b`, growing
    /// the window first if needed.
    pub fn right_transpose(&self, a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateTransposition(a));
        }
        if a == 0 || b == 0 {
            return Err(Error::MalformedPermutation(
                "positions are 1-indexed".to_string(),
            ));
        }
        let mut out = self.extended(a.max(b));
        out.window.swap(a - 1, b - 1);
        Ok(out)
    }

    /// Right descents: positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        let w = self.trimmed();
        (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
    }

    /// Every reduced word of `w`, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Word> {
        let mut words = Vec::new();
        let mut suffix = Vec::new();
        collect_reduced_words(self.clone(), &mut suffix, &mut words);
        words.sort();
        words
    }

    /// One reduced word, obtained by repeatedly stripping the smallest right
    /// descent.
    pub fn a_reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut letters = Vec::new();
        while let Some(&d) = w.descents().first() {
            letters.push(d);
            w = w.multiply(&Self::simple(d));
        }
        letters.reverse();
        Word(letters)
    }
}

fn collect_reduced_words(w: Permutation, suffix: &mut Vec<usize>, out: &mut Vec<Word>) {
    let descents = w.descents();
    if descents.is_empty() {
        out.push(Word(suffix.iter().rev().copied().collect()));
        return;
    }
    for d in descents {
        suffix.push(d);
        collect_reduced_words(w.multiply(&Permutation::simple(d)), suffix, out);
        suffix.pop();
    }
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Comma-separated one-line notation, e.g. `3,2,1,5,4`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.window.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::identity(0));
        }
        let values = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| {
                    Error::MalformedPermutation(format!(
                        "`{}` is not a positive integer",
                        tok.trim()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_line(values)
    }
}

/// A word `a_1 ... a_p` standing for `s_{a_1} ... s_{a_p}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_permutation(&self) -> Permutation {
        self.0.iter().fold(Permutation::identity(0), |acc, &a| {
            acc.multiply(&Permutation::simple(a))
        })
    }

    pub fn is_reduced(&self) -> bool {
        self.to_permutation().length() == self.len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn construction_and_errors() {
        assert!(p("1,2,3").is_identity());
        assert!(Permutation::from_one_line(vec![3, 2, 1, 5, 4]).is_ok());
        assert!(Permutation::from_one_line(vec![1, 1, 2]).is_err());
        assert!(Permutation::from_one_line(vec![1, 4]).is_err());
        assert!("1,x".parse::<Permutation>().is_err());
    }

    #[test]
    fn equality_ignores_trailing_fixed_points() {
        assert_eq!(p("2,1"), p("2,1,3,4,5"));
        assert_ne!(p("2,1"), p("1,2,4,3"));
        assert_eq!(p("1,2,3"), Permutation::identity(0));
    }

    #[test]
    fn length_and_code() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(p("3,2,1").length(), 3);
        assert_eq!(p("3,2,1,5,4").length(), 4);
        assert_eq!(p("3,2,1,5,4").lehmer_code(), vec![2, 1, 0, 1, 0]);
        assert_eq!(p("2,1,3").lehmer_code(), vec![1, 0, 0]);
        assert_eq!(Permutation::identity(3).lehmer_code(), vec![0, 0, 0]);
    }

    #[test]
    fn products() {
        let s = Permutation::simple;
        assert_eq!(p("3,1,2").multiply(&Permutation::identity(5)), p("3,1,2"));
        assert_eq!(s(2).multiply(&s(1)).multiply(&s(2)), p("3,2,1"));
        assert_eq!(
            s(2).multiply(&s(1)).multiply(&s(2)).multiply(&s(4)),
            p("3,2,1,5,4")
        );
    }

    #[test]
    fn transpositions() {
        let id = Permutation::identity(3);
        assert_eq!(id.right_transpose(2, 3).unwrap(), p("1,3,2"));
        assert_eq!(p("2,1,3").right_transpose(2, 3).unwrap(), p("2,3,1"));
        assert_eq!(p("1,3,2,4").right_transpose(2, 4).unwrap(), p("1,4,2,3"));
        assert_eq!(p("2,1").right_transpose(1, 4).unwrap(), p("4,1,3,2"));
        assert!(id.right_transpose(2, 2).is_err());
    }

    #[test]
    fn special_elements() {
        assert_eq!(Permutation::sigma(1, 2), p("3,1,2"));
        assert_eq!(Permutation::sigma(2, 2), p("1,4,2,3"));
        for r in 1..=4 {
            for m in 1..=4 {
                let s = Permutation::sigma(r, m);
                assert_eq!(s.one_line().len(), r + m);
                assert_eq!(s.length(), m);
            }
        }
        assert_eq!(Permutation::longest(3), p("3,2,1"));
        assert_eq!(p("2,3,1").inverse(), p("3,1,2"));
    }

    #[test]
    fn words() {
        assert_eq!(Word::default().to_permutation(), Permutation::identity(0));
        assert!(Word::default().is_reduced());
        let w = Word(vec![2, 1, 2, 4]);
        assert_eq!(w.to_permutation(), p("3,2,1,5,4"));
        assert!(w.is_reduced());
        let w = Word(vec![1, 1]);
        assert!(w.to_permutation().is_identity());
        assert!(!w.is_reduced());
    }

    #[test]
    fn reduced_word_sets() {
        assert_eq!(Permutation::identity(3).reduced_words(), vec![Word(vec![])]);
        assert_eq!(
            p("3,2,1").reduced_words(),
            vec![Word(vec![1, 2, 1]), Word(vec![2, 1, 2])]
        );
        for w in Permutation::all(4) {
            let words = w.reduced_words();
            assert!(!words.is_empty());
            assert!(words.contains(&w.a_reduced_word()));
            for word in words {
                assert!(word.is_reduced());
                assert_eq!(word.to_permutation(), w);
            }
        }
        // S_4's longest element has 16 reduced words.
        assert_eq!(Permutation::longest(4).reduced_words().len(), 16);
    }

    #[test]
    fn monk_step_increases_length_by_one() {
        for w in Permutation::all(4) {
            for a in 1..=4 {
                for b in a + 1..=4 {
                    let wt = w.right_transpose(a, b).unwrap();
                    assert_ne!(wt.length(), w.length());
                    let (wa, wb) = (w.apply(a), w.apply(b));
                    let covers =
                        wa < wb && (a + 1..b).all(|c| !(wa < w.apply(c) && w.apply(c) < wb));
                    if covers {
                        assert_eq!(wt.length(), w.length() + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn code_sums_to_length_on_s5() {
        for w in Permutation::all(5) {
            assert_eq!(w.lehmer_code().iter().sum::<usize>(), w.length());
            assert_eq!(w.inverse().inverse(), w);
        }
    }

    #[test]
    fn length_is_subadditive() {
        let s4 = Permutation::all(4);
        for u in &s4 {
            for v in &s4 {
                assert!(u.multiply(v).length() <= u.length() + v.length());
            }
        }
    }

    #[test]
    fn multiply_is_associative() {
        let s4 = Permutation::all(4);
        for (i, u) in s4.iter().enumerate() {
            let v = &s4[(i * 7 + 3) % 24];
            let w = &s4[(i * 5 + 11) % 24];
            assert_eq!(u.multiply(v).multiply(w), u.multiply(&v.multiply(w)));
        }
    }
}
