//! The census against a scan of every table, deduplicated by testing all
//! relabelings pairwise.

use semikit::corpus::{census, census_with, enumerate_tables};
use semikit::{FiniteSemigroup, Limits};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn all_associative(n: usize) -> Vec<Vec<usize>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .filter_map(|mut code| {
            let t: Vec<usize> = (0..cells)
                .map(|_| {
                    let v = code % n;
                    code /= n;
                    v
                })
                .collect();
            let assoc = (0..n).all(|a| {
                (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]]))
            });
            assoc.then_some(t)
        })
        .collect()
}

fn isomorphic(n: usize, a: &[usize], b: &[usize], perms: &[Vec<usize>]) -> bool {
    perms
        .iter()
        .any(|p| (0..n).all(|x| (0..n).all(|y| p[a[x * n + y]] == b[p[x] * n + p[y]])))
}

fn classes(n: usize, anti: bool) -> (usize, usize) {
    let perms = permutations(n);
    let tables = all_associative(n);
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for t in &tables {
        let op: Vec<usize> = (0..n * n).map(|k| t[(k % n) * n + k / n]).collect();
        let known = reps
            .iter()
            .any(|r| isomorphic(n, t, r, &perms) || (anti && isomorphic(n, &op, r, &perms)));
        if !known {
            reps.push(t.clone());
        }
    }
    (tables.len(), reps.len())
}

#[test]
fn census_matches_brute_force() {
    let c = census(3, &Limits::default()).unwrap();
    let folded = census_with(3, &Limits::default(), true).unwrap();
    for n in 1..=3 {
        let (labeled, count) = classes(n, false);
        assert_eq!(c.labeled[n - 1], labeled, "labeled tables of order {n}");
        assert_eq!(c.count(n), Some(count), "classes of order {n}");
        assert_eq!(
            folded.count(n),
            Some(classes(n, true).1),
            "folded classes of order {n}"
        );
        let mut enumerated = enumerate_tables(n);
        enumerated.sort();
        let mut brute = all_associative(n);
        brute.sort();
        assert_eq!(enumerated, brute);
    }
    assert_eq!(c.counts, vec![1, 5, 24]);
}

#[test]
fn census_representatives_are_pairwise_non_isomorphic() {
    let c = census(4, &Limits::default()).unwrap();
    assert_eq!(c.counts, vec![1, 5, 24, 188]);
    assert_eq!(c.labeled[3], 3492);
    let order4: Vec<&FiniteSemigroup> = c.semigroups.iter().filter(|s| s.order() == 4).collect();
    for (i, a) in order4.iter().enumerate() {
        for b in &order4[i + 1..] {
            assert!(
                a.find_isomorphism(b).is_none(),
                "{:?} ≅ {:?}",
                a.name(),
                b.name()
            );
        }
    }
}
