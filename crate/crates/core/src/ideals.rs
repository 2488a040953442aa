//! Kernels, minimal one-sided ideals, the idempotent order, Rees quotients
//! and the swelling property of translates.

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::greens::{one_sided_partition, Method, Relation};
use crate::morphism::SemigroupMorphism;
use crate::semigroup::FiniteSemigroup;
use crate::subset::{Role, SubsetHandle};

/// Orders up to which the literal intersection of all principal ideals
/// is cross-checked against the kernel.
pub const KERNEL_INTERSECTION_LIMIT: usize = 64;
/// Orders up to which minimality is decided by exhaustive sub-ideal
/// search in [`MinimalityMethod::Auto`].
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 64;
/// Largest candidate ideal whose subsets are scanned exhaustively.
pub const EXHAUSTIVE_SUBSET_LIMIT: usize = 20;
/// Default order cap for [`enumerate_ideals`].
pub const IDEAL_ENUMERATION_LIMIT: usize = 6;

/// The natural partial order `e <= f ⟺ ef = fe = e` on `E(S)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentPoset {
    pub elements: Vec<usize>,
    /// `leq[i][j]` compares `elements[i]` with `elements[j]`.
    pub leq: Vec<Vec<bool>>,
    pub primitives: Vec<usize>,
}

impl IdempotentPoset {
    pub fn leq(&self, e: usize, f: usize) -> Option<bool> {
        let i = self.elements.binary_search(&e).ok()?;
        let j = self.elements.binary_search(&f).ok()?;
        Some(self.leq[i][j])
    }

    /// Reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let k = self.elements.len();
        let r = &self.leq;
        (0..k).all(|i| r[i][i])
            && (0..k).all(|i| (0..k).all(|j| i == j || !(r[i][j] && r[j][i])))
            && (0..k).all(|i| (0..k).all(|j| (0..k).all(|l| !(r[i][j] && r[j][l]) || r[i][l])))
    }
}

pub fn idempotent_poset(s: &FiniteSemigroup) -> IdempotentPoset {
    let elements = s.idempotents().members().to_vec();
    let leq: Vec<Vec<bool>> = elements
        .iter()
        .map(|&e| {
            elements
                .iter()
                .map(|&f| s.mul(e, f) == e && s.mul(f, e) == e)
                .collect()
        })
        .collect();
    let primitives = elements
        .iter()
        .enumerate()
        .filter(|&(i, _)| (0..elements.len()).all(|j| !leq[j][i] || j == i))
        .map(|(_, &e)| e)
        .collect();
    IdempotentPoset {
        elements,
        leq,
        primitives,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalityMethod {
    /// Scan every proper nonempty subset for a smaller ideal.
    Exhaustive,
    /// `A` is a minimal left ideal iff it is one and `Sx = A` for all
    /// `x ∈ A` (right ideals symmetric).
    Criterion,
    /// Exhaustive for small inputs, the criterion otherwise.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

fn is_one_sided_ideal(s: &FiniteSemigroup, set: &ElementSet, side: Side) -> bool {
    match side {
        Side::Left => s.is_left_ideal(set),
        Side::Right => s.is_right_ideal(set),
    }
}

fn exhaustive_minimal(s: &FiniteSemigroup, set: &ElementSet, side: Side) -> Result<bool> {
    if !is_one_sided_ideal(s, set, side) {
        return Ok(false);
    }
    let members = set.to_vec();
    let k = members.len();
    if k > EXHAUSTIVE_SUBSET_LIMIT {
        return Err(Error::SearchCapExceeded {
            order: k,
            cap: EXHAUSTIVE_SUBSET_LIMIT,
        });
    }
    // multiples[i]: local bitmask of S·m_i (or m_i·S); B is an ideal iff
    // it contains the mask of each of its members.
    let local = |x: usize| members.binary_search(&x).expect("ideal is closed");
    let multiples: Vec<u32> = members
        .iter()
        .map(|&m| {
            let it: Box<dyn Iterator<Item = usize>> = match side {
                Side::Left => Box::new(s.column(m)),
                Side::Right => Box::new(s.row(m)),
            };
            it.fold(0u32, |acc, p| acc | 1 << local(p))
        })
        .collect();
    let full: u32 = (1 << k) - 1;
    for b in 1..full {
        let closed = (0..k)
            .filter(|i| b & (1 << i) != 0)
            .all(|i| multiples[i] & !b == 0);
        if closed {
            return Ok(false);
        }
    }
    Ok(true)
}

fn criterion_minimal(s: &FiniteSemigroup, set: &ElementSet, side: Side) -> bool {
    is_one_sided_ideal(s, set, side)
        && set.iter().all(|x| {
            let generated = match side {
                Side::Left => s.left_multiples(x),
                Side::Right => s.right_multiples(x),
            };
            generated == *set
        })
}

fn minimal_one_sided(
    s: &FiniteSemigroup,
    set: &ElementSet,
    side: Side,
    method: MinimalityMethod,
) -> Result<bool> {
    match method {
        MinimalityMethod::Exhaustive => exhaustive_minimal(s, set, side),
        MinimalityMethod::Criterion => Ok(criterion_minimal(s, set, side)),
        MinimalityMethod::Auto => {
            if s.order() <= EXHAUSTIVE_ORDER_LIMIT && set.len() <= EXHAUSTIVE_SUBSET_LIMIT {
                exhaustive_minimal(s, set, side)
            } else {
                Ok(criterion_minimal(s, set, side))
            }
        }
    }
}

pub fn is_minimal_left_ideal(
    s: &FiniteSemigroup,
    set: &ElementSet,
    method: MinimalityMethod,
) -> Result<bool> {
    minimal_one_sided(s, set, Side::Left, method)
}

pub fn is_minimal_right_ideal(
    s: &FiniteSemigroup,
    set: &ElementSet,
    method: MinimalityMethod,
) -> Result<bool> {
    minimal_one_sided(s, set, Side::Right, method)
}

/// A two-sided ideal is minimal iff each of its elements generates it.
pub fn is_minimal_ideal(s: &FiniteSemigroup, set: &ElementSet) -> bool {
    s.is_ideal(set) && set.iter().all(|x| s.principal_two_sided(x) == *set)
}

/// `K(S)`: the principal ideal of `s_0 s_1 ... s_{n-1}`, which lies in
/// every principal ideal and so generates their intersection.
pub fn kernel_set(s: &FiniteSemigroup) -> ElementSet {
    let z = s.elements().skip(1).fold(0, |acc, x| s.mul(acc, x));
    s.principal_two_sided(z)
}

/// `⋂_s S¹sS¹`, computed literally.
pub fn kernel_by_intersection(s: &FiniteSemigroup) -> ElementSet {
    let mut acc = ElementSet::full(s.order());
    for x in s.elements() {
        acc.intersect_with(&s.principal_two_sided(x));
    }
    acc
}

/// The four statements about an idempotent `e`: `Se` is a minimal left
/// ideal, `eSe` is a group, `eS` is a minimal right ideal, `K = SeS`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalIdealVerdict {
    pub idempotent: usize,
    pub left_minimal: bool,
    pub corner_is_group: bool,
    pub right_minimal: bool,
    pub kernel_is_ses: bool,
    pub left_ideal: Vec<usize>,
    pub right_ideal: Vec<usize>,
    pub corner: Vec<usize>,
}

impl MinimalIdealVerdict {
    pub fn flags(&self) -> [bool; 4] {
        [
            self.left_minimal,
            self.corner_is_group,
            self.right_minimal,
            self.kernel_is_ses,
        ]
    }

    pub fn agree(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&b| b == f[0])
    }

    /// The shared value when all four agree.
    pub fn common(&self) -> Option<bool> {
        self.agree().then_some(self.left_minimal)
    }
}

pub fn minimal_ideal_equivalences(s: &FiniteSemigroup, e: usize) -> Result<MinimalIdealVerdict> {
    s.check_element(e)?;
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let kernel = kernel_set(s);
    verdict_with_kernel(s, e, &kernel, MinimalityMethod::Auto)
}

pub fn minimal_ideal_equivalences_with(
    s: &FiniteSemigroup,
    e: usize,
    method: MinimalityMethod,
) -> Result<MinimalIdealVerdict> {
    s.check_element(e)?;
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    verdict_with_kernel(s, e, &kernel_set(s), method)
}

fn verdict_with_kernel(
    s: &FiniteSemigroup,
    e: usize,
    kernel: &ElementSet,
    method: MinimalityMethod,
) -> Result<MinimalIdealVerdict> {
    let left = s.left_multiples(e);
    let right = s.right_multiples(e);
    let corner = s.left_translate(e, &left);
    let corner_members = corner.to_vec();
    let corner_is_group = s
        .induced(&corner_members)
        .map(|(g, _)| g.is_group())
        .unwrap_or(false);
    let mut ses = ElementSet::new(s.order());
    for x in left.iter() {
        for p in s.row(x) {
            ses.insert(p);
        }
    }
    Ok(MinimalIdealVerdict {
        idempotent: e,
        left_minimal: is_minimal_left_ideal(s, &left, method)?,
        corner_is_group,
        right_minimal: is_minimal_right_ideal(s, &right, method)?,
        kernel_is_ses: ses == *kernel,
        left_ideal: left.to_vec(),
        right_ideal: right.to_vec(),
        corner: corner_members,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub kernel: SubsetHandle,
    /// `E(K)`.
    pub idempotents: Vec<usize>,
    pub verdicts: Vec<MinimalIdealVerdict>,
    pub min_left: Vec<SubsetHandle>,
    pub min_right: Vec<SubsetHandle>,
    /// Failed internal checks; empty on every finite semigroup.
    pub violations: Vec<String>,
}

fn partitions(parts: &[SubsetHandle], whole: &ElementSet) -> bool {
    let mut seen = ElementSet::new(whole.capacity());
    for p in parts {
        for &x in p.members() {
            if !seen.insert(x) {
                return false;
            }
        }
    }
    seen == *whole
}

pub fn kernel(s: &FiniteSemigroup) -> KernelReport {
    let n = s.order();
    let k = kernel_set(s);
    let mut violations = Vec::new();
    if n <= KERNEL_INTERSECTION_LIMIT && kernel_by_intersection(s) != k {
        violations.push("kernel differs from the intersection of principal ideals".into());
    }
    if k.is_empty() || !s.is_ideal(&k) {
        violations.push("kernel is not an ideal".into());
    }
    let minimal = if n <= KERNEL_INTERSECTION_LIMIT {
        is_minimal_ideal(s, &k)
    } else {
        let j = one_sided_partition(s, Relation::J, Method::Reachability);
        let first = k.iter().next().map(|x| j[x]);
        k.iter().all(|x| Some(j[x]) == first)
    };
    if !minimal {
        violations.push("kernel is not minimal".into());
    }
    let idempotents: Vec<usize> = k.iter().filter(|&x| s.is_idempotent(x)).collect();
    if idempotents.is_empty() {
        violations.push("kernel has no idempotent".into());
    }
    let mut verdicts = Vec::with_capacity(idempotents.len());
    let mut min_left: Vec<SubsetHandle> = Vec::new();
    let mut min_right: Vec<SubsetHandle> = Vec::new();
    for &e in &idempotents {
        let v = verdict_with_kernel(s, e, &k, MinimalityMethod::Auto).expect("idempotent in range");
        if v.flags() != [true; 4] {
            violations.push(format!("four-way verdict at {e} is {:?}", v.flags()));
        }
        let l = SubsetHandle::trusted(n, v.left_ideal.clone(), Role::LeftIdeal);
        if !min_left.contains(&l) {
            min_left.push(l);
        }
        let r = SubsetHandle::trusted(n, v.right_ideal.clone(), Role::RightIdeal);
        if !min_right.contains(&r) {
            min_right.push(r);
        }
        verdicts.push(v);
    }
    min_left.sort_by(|a, b| a.members().cmp(b.members()));
    min_right.sort_by(|a, b| a.members().cmp(b.members()));
    if !partitions(&min_left, &k) || !partitions(&min_right, &k) {
        violations.push("minimal one-sided ideals do not partition the kernel".into());
    }
    KernelReport {
        kernel: SubsetHandle::trusted(n, k.to_vec(), Role::Kernel),
        idempotents,
        verdicts,
        min_left,
        min_right,
        violations,
    }
}

/// `S/I`: the zero sits at index 0 and the elements of `S \ I` follow in
/// ascending order. Returns the quotient and the projection.
pub fn rees_quotient(
    s: &FiniteSemigroup,
    ideal: &SubsetHandle,
) -> Result<(FiniteSemigroup, SemigroupMorphism)> {
    let set = ideal.to_set();
    if ideal.parent_order() != s.order() || !s.is_ideal(&set) {
        return Err(Error::NotAnIdeal);
    }
    let survivors: Vec<usize> = s.elements().filter(|&x| !set.contains(x)).collect();
    let mut projection = vec![0; s.order()];
    for (i, &x) in survivors.iter().enumerate() {
        projection[x] = i + 1;
    }
    let m = survivors.len() + 1;
    let quotient = FiniteSemigroup::from_fn(m, |a, b| {
        if a == 0 || b == 0 {
            0
        } else {
            projection[s.mul(survivors[a - 1], survivors[b - 1])]
        }
    })?;
    let quotient = match s.name() {
        Some(name) => quotient.with_name(format!("{name}/I")),
        None => quotient,
    };
    let pi = SemigroupMorphism::new(s, &quotient, projection)?;
    if !pi.is_homomorphism() {
        return Err(Error::InvariantViolation(
            "Rees projection is not a homomorphism".into(),
        ));
    }
    Ok((quotient, pi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwellingVerdict {
    /// `A ⊆ tA`.
    pub hypothesis: bool,
    /// `A = tA`, evaluated only when the hypothesis holds.
    pub equality: Option<bool>,
}

impl SwellingVerdict {
    pub fn holds(&self) -> bool {
        self.equality != Some(false)
    }
}

pub fn swelling_check(s: &FiniteSemigroup, a: &SubsetHandle, t: usize) -> Result<SwellingVerdict> {
    if !a.contains(t) {
        return Err(Error::ElementNotInSubset(t));
    }
    Ok(swelling_on_set(s, &a.to_set(), t))
}

pub(crate) fn swelling_on_set(s: &FiniteSemigroup, a: &ElementSet, t: usize) -> SwellingVerdict {
    let ta = s.left_translate(t, a);
    let hypothesis = a.is_subset(&ta);
    SwellingVerdict {
        hypothesis,
        equality: hypothesis.then(|| ta == *a),
    }
}

/// Every two-sided ideal, by scanning all subsets.
pub fn enumerate_ideals(s: &FiniteSemigroup, cap: usize) -> Result<Vec<ElementSet>> {
    let n = s.order();
    if n > cap {
        return Err(Error::SearchCapExceeded { order: n, cap });
    }
    Ok((1u64..1 << n)
        .map(|mask| ElementSet::from_elements(n, (0..n).filter(|i| mask & (1 << i) != 0)))
        .filter(|set| s.is_ideal(set))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn members(v: &[SubsetHandle]) -> Vec<Vec<usize>> {
        v.iter().map(|h| h.members().to_vec()).collect()
    }

    #[test]
    fn kernel_examples() {
        let r = kernel(&z3());
        assert_eq!(r.kernel.members(), &[0, 1, 2]);
        assert!(r.violations.is_empty());

        let r = kernel(&paper_band());
        assert_eq!(r.kernel.members(), &[0, 1]);
        assert_eq!(members(&r.min_left), vec![vec![0, 1]]);
        assert_eq!(members(&r.min_right), vec![vec![0], vec![1]]);
        assert_eq!(r.idempotents, vec![0, 1]);
        assert!(r.violations.is_empty());

        let r = kernel(&t2());
        assert_eq!(r.kernel.members(), &[2, 3]);
        assert_eq!(members(&r.min_left), vec![vec![2, 3]]);
        assert_eq!(members(&r.min_right), vec![vec![2], vec![3]]);
    }

    #[test]
    fn four_way_examples() {
        let v = minimal_ideal_equivalences(&t2(), 2).unwrap();
        assert_eq!(v.flags(), [true; 4]);
        assert_eq!(v.corner, vec![2]);
        let v = minimal_ideal_equivalences(&t2(), 0).unwrap();
        assert_eq!(v.flags(), [false; 4]);
        assert_eq!(v.common(), Some(false));
        let v = minimal_ideal_equivalences(&z3(), 0).unwrap();
        assert_eq!(v.common(), Some(true));
        assert_eq!(
            minimal_ideal_equivalences(&t2(), 1),
            Err(Error::NotIdempotent(1))
        );
    }

    #[test]
    fn poset_examples() {
        let p = idempotent_poset(&paper_band());
        assert!(p.is_partial_order());
        assert_eq!(p.leq(0, 2), Some(true));
        assert_eq!(p.leq(1, 3), Some(true));
        assert_eq!(p.leq(0, 3), Some(false));
        assert_eq!(p.leq(2, 0), Some(false));
        assert_eq!(p.primitives, vec![0, 1]);

        let p = idempotent_poset(&z3());
        assert_eq!(p.primitives, vec![0]);

        let p = idempotent_poset(&rb22());
        assert_eq!(p.primitives, vec![0, 1, 2, 3]);
        for e in 0..4 {
            for f in 0..4 {
                assert_eq!(p.leq(e, f), Some(e == f));
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let pb = paper_band();
        let k = SubsetHandle::new(&pb, [0, 1], Role::TwoSidedIdeal).unwrap();
        let (q, pi) = rees_quotient(&pb, &k).unwrap();
        assert_eq!(q.rows(), vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 2, 2]]);
        assert_eq!(pi.map(), &[0, 0, 1, 2]);
        assert!(pi.is_homomorphism());

        let all = SubsetHandle::new(&pb, 0..4, Role::TwoSidedIdeal).unwrap();
        let (q, _) = rees_quotient(&pb, &all).unwrap();
        assert_eq!(q.order(), 1);

        let t = t2();
        let k = SubsetHandle::new(&t, [2, 3], Role::TwoSidedIdeal).unwrap();
        let (q, _) = rees_quotient(&t, &k).unwrap();
        assert_eq!(q.order(), 3);
        let (units, _) = q.induced(&[1, 2]).unwrap();
        assert!(units.is_group());

        let not_ideal = SubsetHandle::new(&t, [0], Role::Generic).unwrap();
        assert_eq!(
            rees_quotient(&t, &not_ideal).unwrap_err(),
            Error::NotAnIdeal
        );
    }

    #[test]
    fn swelling_examples() {
        let z = z3();
        let a = SubsetHandle::new(&z, 0..3, Role::Generic).unwrap();
        let v = swelling_check(&z, &a, 1).unwrap();
        assert_eq!((v.hypothesis, v.equality), (true, Some(true)));

        let t = t2();
        let a = SubsetHandle::new(&t, [2, 3], Role::Generic).unwrap();
        let v = swelling_check(&t, &a, 2).unwrap();
        assert_eq!((v.hypothesis, v.equality), (false, None));
        assert_eq!(swelling_check(&t, &a, 0), Err(Error::ElementNotInSubset(0)));
    }

    #[test]
    fn minimality_methods_agree_on_fixtures() {
        for s in [z3(), t2(), paper_band(), rb22(), l2(), sym3()] {
            for x in s.elements() {
                for set in [s.principal_left(x), s.left_multiples(x)] {
                    assert_eq!(
                        is_minimal_left_ideal(&s, &set, MinimalityMethod::Exhaustive).unwrap(),
                        is_minimal_left_ideal(&s, &set, MinimalityMethod::Criterion).unwrap()
                    );
                }
                for set in [s.principal_right(x), s.right_multiples(x)] {
                    assert_eq!(
                        is_minimal_right_ideal(&s, &set, MinimalityMethod::Exhaustive).unwrap(),
                        is_minimal_right_ideal(&s, &set, MinimalityMethod::Criterion).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn kernel_below_every_ideal() {
        for s in [t2(), paper_band(), rb22(), l2()] {
            let k = kernel_set(&s);
            for ideal in enumerate_ideals(&s, IDEAL_ENUMERATION_LIMIT).unwrap() {
                assert!(k.is_subset(&ideal));
            }
        }
        assert!(enumerate_ideals(&sym3().direct_product(&l2()).unwrap(), 6).is_err());
    }
}
