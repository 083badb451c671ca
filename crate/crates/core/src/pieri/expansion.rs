use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

use super::ledger::{AbSequence, Pair};

/// One term `P_{w'}` of the expansion of `P_w · h_m(x_1, ..., x_r)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Term {
    pub permutation: Permutation,
    pub ledger: AbSequence,
}

/// Checks that `ledger` (with `m = ledger.len()`) factors `w'` admissibly
/// over `w` at level `r`:
///
/// 1. the `b_i` are distinct and exceed `r`;
/// 2. `a_1 <= ... <= a_m <= r`;
/// 3. `w' = w t_{a_1 b_1} ... t_{a_m b_m}`, and each partial product
///    `w t_{a_1 b_1} ... t_{a_i b_i}` has length `l(w) + i` (so in
///    particular `l(w') = l(w) + m`);
/// 4. `w'(b_i) < w'(b_j) < w'(a_i)` whenever `i < j` and `a_i = a_j`.
///
/// Returns the first violated condition as text.
pub fn check_admissible(
    w: &Permutation,
    w_prime: &Permutation,
    r: usize,
    ledger: &AbSequence,
) -> std::result::Result<(), String> {
    let pairs = ledger.pairs();
    if !pairs.iter().map(|p| p.b).all_unique() || pairs.iter().any(|p| p.b <= r) {
        return Err(format!("b values of {ledger} are not distinct and > {r}"));
    }
    if pairs.iter().any(|p| p.a == 0 || p.a > r)
        || pairs.iter().tuple_windows().any(|(p, q)| p.a > q.a)
    {
        return Err(format!(
            "a values of {ledger} are not weakly increasing and <= {r}"
        ));
    }
    let mut step = w.clone();
    for (i, p) in pairs.iter().enumerate() {
        let next = step.right_transpose(p.a, p.b).expect("a < b");
        if next.length() != step.length() + 1 {
            return Err(format!(
                "l({next}) = {} after {p}, expected l(w) + {} = {}",
                next.length(),
                i + 1,
                w.length() + i + 1
            ));
        }
        step = next;
    }
    if step != *w_prime {
        return Err(format!("w·∏t = {step}, not {w_prime}"));
    }
    for (i, p) in pairs.iter().enumerate() {
        for q in &pairs[i + 1..] {
            if p.a == q.a {
                let (vbi, vbj, vai) = (w_prime.apply(p.b), w_prime.apply(q.b), w_prime.apply(p.a));
                if !(vbi < vbj && vbj < vai) {
                    return Err(format!(
                        "w'({}) < w'({}) < w'({}) fails for {p} before {q}",
                        p.b, q.b, p.a
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Every `w'` in Pieri's expansion of `P_w · h_m(x_1, ..., x_r)`, each with
/// its ledger, sorted by `w'`.
///
/// Searches all weakly increasing `a` sequences in `1..=r` and all
/// injective `b` sequences in `r+1..=N`, `N = max(support(w), r) + m`.
/// Fails with [`Error::Ambiguous`] if a `w'` admits two ledgers.
pub fn admissible_expansion(w: &Permutation, r: usize, m: usize) -> Result<Vec<Term>> {
    if r == 0 {
        return Err(Error::Composition("level must be positive".into()));
    }
    let top = w.support().max(r) + m;
    let mut found: BTreeMap<Permutation, AbSequence> = BTreeMap::new();
    for a_values in (1..=r).combinations_with_replacement(m) {
        for b_values in (r + 1..=top).permutations(m) {
            let ledger = AbSequence::from_pairs(
                a_values
                    .iter()
                    .zip(&b_values)
                    .map(|(&a, &b)| Pair::new(a, b))
                    .collect(),
            )?;
            let w_prime = ledger.apply_to(w);
            if check_admissible(w, &w_prime, r, &ledger).is_err() {
                continue;
            }
            if let Some(previous) = found.get(&w_prime) {
                return Err(Error::Ambiguous {
                    perm: w_prime.to_string(),
                    first: previous.to_string(),
                    second: ledger.to_string(),
                });
            }
            found.insert(w_prime, ledger);
        }
    }
    Ok(found
        .into_iter()
        .map(|(permutation, ledger)| Term {
            permutation,
            ledger,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn monk_example() {
        let terms = admissible_expansion(&p("2,1,3"), 2, 1).unwrap();
        let got: Vec<_> = terms
            .iter()
            .map(|t| (t.permutation.to_string(), t.ledger.to_string()))
            .collect();
        assert_eq!(
            got,
            vec![
                ("2,3,1".to_string(), "[(2,3)]".to_string()),
                ("3,1,2".to_string(), "[(1,3)]".to_string())
            ]
        );
    }

    #[test]
    fn identity_gives_sigma() {
        let terms = admissible_expansion(&Permutation::identity(0), 2, 2).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].permutation, p("1,4,2,3"));
        assert_eq!(terms[0].ledger, "[(2,3),(2,4)]".parse().unwrap());
        // same w' reached through (2,4),(2,3) breaks the interleaving condition
        let swapped: AbSequence = "[(2,4),(2,3)]".parse().unwrap();
        let w_prime = swapped.apply_to(&Permutation::identity(0));
        assert_eq!(w_prime, p("1,3,4,2"));
        assert!(check_admissible(&Permutation::identity(0), &w_prime, 2, &swapped).is_err());
    }

    #[test]
    fn total_length_alone_is_not_enough() {
        // lengths go 2 -> 1 -> 4: right total, but not a chain of covers
        let w = p("3,1,2");
        let ledger: AbSequence = "[(1,3),(2,4)]".parse().unwrap();
        let w_prime = ledger.apply_to(&w);
        assert_eq!(w_prime.length(), w.length() + 2);
        assert!(check_admissible(&w, &w_prime, 2, &ledger).is_err());
        let terms = admissible_expansion(&w, 2, 2).unwrap();
        assert!(terms.iter().all(|t| t.permutation != w_prime));
    }

    #[test]
    fn empty_product() {
        let terms = admissible_expansion(&p("2,1,3"), 2, 0).unwrap();
        assert_eq!(
            terms,
            vec![Term {
                permutation: p("2,1"),
                ledger: AbSequence::new()
            }]
        );
    }
}
