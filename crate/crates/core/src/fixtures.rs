//! Named standard semigroups.
//!
//! Transformations compose right-to-left: `(f*g)(p) = f(g(p))`.

use crate::semigroup::FiniteSemigroup;

fn build(n: usize, name: String, f: impl Fn(usize, usize) -> usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, f)
        .expect("standard table is associative")
        .with_name(name)
}

/// Cyclic group `Z_k`, product is addition mod `k`.
pub fn cyclic(k: usize) -> FiniteSemigroup {
    build(k, format!("Z{k}"), |a, b| (a + b) % k)
}

/// `a*b = a`.
pub fn left_zero(k: usize) -> FiniteSemigroup {
    build(k, format!("L{k}"), |a, _| a)
}

/// `a*b = b`.
pub fn right_zero(k: usize) -> FiniteSemigroup {
    build(k, format!("R{k}"), |_, b| b)
}

/// Rectangular band `I x Λ` with `(i,λ)(j,μ) = (i,μ)`; `(i,λ)` sits at
/// index `i*|Λ| + λ`.
pub fn rect_band(rows: usize, cols: usize) -> FiniteSemigroup {
    build(rows * cols, format!("RB{rows}{cols}"), |a, b| {
        (a / cols) * cols + b % cols
    })
}

/// Permutations of `{0,1,2}` in lexicographic order under composition.
pub fn sym3() -> FiniteSemigroup {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    build(6, "S3".into(), |a, b| {
        let (f, g) = (perms[a], perms[b]);
        index([f[g[0]], f[g[1]], f[g[2]]])
    })
}

/// Full transformation monoid on two points: identity, swap, constant 0,
/// constant 1.
pub fn t2() -> FiniteSemigroup {
    let maps: [[usize; 2]; 4] = [[0, 1], [1, 0], [0, 0], [1, 1]];
    build(4, "T2".into(), |a, b| {
        let (f, g) = (maps[a], maps[b]);
        let h = [f[g[0]], f[g[1]]];
        maps.iter().position(|m| *m == h).unwrap()
    })
}

/// `{0,1} x {x,y}` with `(a,b)*(c,d) = (ac,b)`; `(a,b)` sits at index
/// `2a + b`.
pub fn paper_band() -> FiniteSemigroup {
    build(4, "PB".into(), |p, q| {
        let (a, b) = (p / 2, p % 2);
        let c = q / 2;
        2 * (a * c) + b
    })
}

pub fn trivial() -> FiniteSemigroup {
    cyclic(1).with_name("trivial")
}

pub fn z3() -> FiniteSemigroup {
    cyclic(3)
}

pub fn l2() -> FiniteSemigroup {
    left_zero(2)
}

pub fn rb22() -> FiniteSemigroup {
    rect_band(2, 2)
}

/// Klein four-group `Z2 x Z2`.
pub fn klein() -> FiniteSemigroup {
    cyclic(2)
        .direct_product(&cyclic(2))
        .expect("order 4")
        .with_name("Z2xZ2")
}
