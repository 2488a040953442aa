use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::semigroup::FiniteSemigroup;

const UNSET: usize = usize::MAX;

/// Isomorphism-class representatives of every semigroup of order
/// `1..=max_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub max_order: usize,
    pub fold_opposites: bool,
    /// `counts[k]` classes of order `k + 1`.
    pub counts: Vec<usize>,
    /// Labeled associative tables of order `k + 1`.
    pub labeled: Vec<usize>,
    pub semigroups: Vec<FiniteSemigroup>,
}

impl Census {
    pub fn count(&self, order: usize) -> Option<usize> {
        order
            .checked_sub(1)
            .and_then(|k| self.counts.get(k))
            .copied()
    }
}

pub fn census(max_order: usize, limits: &Limits) -> Result<Census> {
    census_with(max_order, limits, false)
}

pub fn census_with(max_order: usize, limits: &Limits, fold_opposites: bool) -> Result<Census> {
    if max_order > limits.census_max_order {
        return Err(Error::CensusLimitExceeded {
            order: max_order,
            limit: limits.census_max_order,
        });
    }
    let mut counts = Vec::new();
    let mut labeled = Vec::new();
    let mut semigroups = Vec::new();
    for n in 1..=max_order {
        let tables = enumerate_tables(n);
        labeled.push(tables.len());
        let classes: BTreeSet<Vec<usize>> = tables
            .into_par_iter()
            .map(|flat| {
                let s =
                    FiniteSemigroup::from_flat(n, flat).expect("enumerated tables are associative");
                let own = canonical_form(&s);
                if fold_opposites {
                    own.min(canonical_form(&s.opposite()))
                } else {
                    own
                }
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        counts.push(classes.len());
        for (k, flat) in classes.into_iter().enumerate() {
            semigroups
                .push(FiniteSemigroup::from_flat(n, flat)?.with_name(format!("census-{n}-{k}")));
        }
    }
    Ok(Census {
        max_order,
        fold_opposites,
        counts,
        labeled,
        semigroups,
    })
}

/// Least relabeled flat table over all `n!` relabelings. Candidates are
/// compared cell by cell in row-major order, abandoning each as soon as it
/// exceeds the best so far.
pub fn canonical_form(s: &FiniteSemigroup) -> Vec<usize> {
    let n = s.order();
    let flat = s.flat();
    let mut best: Option<Vec<usize>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut inv = vec![0; n];
    let mut candidate = vec![0; n * n];
    loop {
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        // Relabeled table: entry (i, j) = perm[flat[inv[i]][inv[j]]].
        let mut less = best.is_none();
        let mut abandoned = false;
        for i in 0..n {
            for j in 0..n {
                let v = perm[flat[inv[i] * n + inv[j]]];
                candidate[i * n + j] = v;
                if !less {
                    let b = best.as_ref().unwrap()[i * n + j];
                    if v > b {
                        abandoned = true;
                        break;
                    }
                    less = v < b;
                }
            }
            if abandoned {
                break;
            }
        }
        if !abandoned && less {
            best = Some(candidate.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every associative table on `0..n`, filled in row-major order and pruned
/// whenever a fully defined triple already fails associativity.
pub fn enumerate_tables(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    (0..n)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut table = vec![UNSET; n * n];
            table[0] = first;
            let mut out = Vec::new();
            if consistent(&table, n, 0) {
                fill(&mut table, n, 1, &mut out);
            }
            out
        })
        .collect()
}

fn fill(table: &mut [usize], n: usize, cell: usize, out: &mut Vec<Vec<usize>>) {
    if cell == n * n {
        out.push(table.to_vec());
        return;
    }
    for v in 0..n {
        table[cell] = v;
        if consistent(table, n, cell) {
            fill(table, n, cell + 1, out);
        }
    }
    table[cell] = UNSET;
}

/// Checks the triples whose evaluation touches the cell just written.
fn consistent(t: &[usize], n: usize, cell: usize) -> bool {
    let (a, b) = (cell / n, cell % n);
    let get = |x: usize, y: usize| t[x * n + y];
    let check = |x: usize, y: usize, z: usize| -> bool {
        let xy = get(x, y);
        let yz = get(y, z);
        if xy == UNSET || yz == UNSET {
            return true;
        }
        let l = get(xy, z);
        let r = get(x, yz);
        l == UNSET || r == UNSET || l == r
    };
    for u in 0..n {
        for w in 0..n {
            // (a,b) as x*y, as y*z, as (xy)*z, or as x*(yz).
            if !check(a, b, u) || !check(u, a, b) {
                return false;
            }
            if get(u, w) == a && !check(u, w, b) {
                return false;
            }
            if get(u, w) == b && !check(a, u, w) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn small_counts() {
        let c = census(3, &Limits::default()).unwrap();
        assert_eq!(c.counts, vec![1, 5, 24]);
        assert_eq!(c.labeled, vec![1, 8, 113]);
        assert_eq!(c.semigroups.len(), 30);
        let folded = census_with(3, &Limits::default(), true).unwrap();
        assert_eq!(folded.counts, vec![1, 4, 18]);
    }

    #[test]
    fn census_limit() {
        assert!(matches!(
            census(5, &Limits::default()),
            Err(Error::CensusLimitExceeded { order: 5, limit: 4 })
        ));
    }

    #[test]
    fn canonical_form_is_invariant() {
        let s = paper_band();
        let c = canonical_form(&s);
        for perm in [[1, 0, 2, 3], [3, 2, 1, 0], [2, 0, 3, 1]] {
            assert_eq!(canonical_form(&s.relabel(&perm)), c);
        }
        assert_ne!(canonical_form(&s), canonical_form(&s.opposite()));
        assert_eq!(canonical_form(&l2()), canonical_form(&left_zero(2)));
    }

    #[test]
    fn permutations() {
        let mut p = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 6);
    }
}
