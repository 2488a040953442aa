//! Completely simple semigroups and Rees matrix semigroups.
//!
//! A Rees matrix semigroup `M(I, G, Λ, P)` is `I x G x Λ` with
//! `(i,g,λ)(j,h,μ) = (i, g·p(λ,j)·h, μ)`. Every finite completely simple
//! semigroup is isomorphic to one: fix an idempotent `e`, take
//! `I = Se ∩ E(S)`, `Λ = eS ∩ E(S)`, `G = eSe` and `p(λ,i) = λi`; then
//! `(i,g,λ) -> igλ` is an isomorphism.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::greens::{greens_structure, one_sided_partition, Method, Relation};
use crate::ideals::idempotent_poset;
use crate::morphism::SemigroupMorphism;
use crate::semigroup::FiniteSemigroup;
use crate::subset::{Role, SubsetHandle};

/// No proper two-sided ideal: a single J-class.
pub fn is_simple(s: &FiniteSemigroup) -> bool {
    one_sided_partition(s, Relation::J, Method::Auto)
        .iter()
        .all(|&c| c == 0)
}

/// Simple with a primitive idempotent.
pub fn is_completely_simple(s: &FiniteSemigroup) -> bool {
    is_simple(s) && !idempotent_poset(s).primitives.is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesMatrixSemigroup {
    i_size: usize,
    lambda_size: usize,
    group: FiniteSemigroup,
    /// `sandwich[λ][i] = p(λ,i)`, a group element index.
    sandwich: Vec<Vec<usize>>,
    realized: FiniteSemigroup,
}

/// Builds `M(I, G, Λ, P)` and its Cayley table.
pub fn rees_construct(
    i_size: usize,
    lambda_size: usize,
    group: FiniteSemigroup,
    sandwich: Vec<Vec<usize>>,
) -> Result<ReesMatrixSemigroup> {
    if i_size == 0 || lambda_size == 0 {
        return Err(Error::EmptyTable);
    }
    if !group.is_group() {
        return Err(Error::NotAGroup);
    }
    if sandwich.len() != lambda_size {
        return Err(Error::BadShape {
            expected: lambda_size,
            found: sandwich.len(),
        });
    }
    let g = group.order();
    for (row, entries) in sandwich.iter().enumerate() {
        if entries.len() != i_size {
            return Err(Error::BadShape {
                expected: i_size,
                found: entries.len(),
            });
        }
        if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= g) {
            return Err(Error::BadSandwichEntry { row, col, value });
        }
    }
    let n = i_size * g * lambda_size;
    let coords = |x: usize| {
        (
            x / (g * lambda_size),
            (x / lambda_size) % g,
            x % lambda_size,
        )
    };
    let realized = FiniteSemigroup::from_fn(n, |a, b| {
        let (i, x, lambda) = coords(a);
        let (j, y, mu) = coords(b);
        let middle = group.mul(group.mul(x, sandwich[lambda][j]), y);
        (i * g + middle) * lambda_size + mu
    })?;
    if !is_completely_simple(&realized) {
        return Err(Error::InvariantViolation(
            "Rees matrix semigroup is not completely simple".into(),
        ));
    }
    Ok(ReesMatrixSemigroup {
        i_size,
        lambda_size,
        group,
        sandwich,
        realized,
    })
}

impl ReesMatrixSemigroup {
    pub fn i_size(&self) -> usize {
        self.i_size
    }

    pub fn lambda_size(&self) -> usize {
        self.lambda_size
    }

    pub fn group(&self) -> &FiniteSemigroup {
        &self.group
    }

    pub fn sandwich(&self) -> &[Vec<usize>] {
        &self.sandwich
    }

    pub fn realized(&self) -> &FiniteSemigroup {
        &self.realized
    }

    /// Index of `(i, g, λ)` in the realized table.
    pub fn index(&self, i: usize, g: usize, lambda: usize) -> usize {
        (i * self.group.order() + g) * self.lambda_size + lambda
    }

    pub fn coords(&self, x: usize) -> (usize, usize, usize) {
        let g = self.group.order();
        (
            x / (g * self.lambda_size),
            (x / self.lambda_size) % g,
            x % self.lambda_size,
        )
    }

    /// An isomorphic copy whose sandwich matrix has the identity in row 0
    /// and column 0: `p'(λ,i) = u_λ p(λ,i) v_i` with
    /// `u_λ = p(λ,0)⁻¹` and `v_i = (u_0 p(0,i))⁻¹`.
    pub fn normalized(&self) -> Result<ReesMatrixSemigroup> {
        let inv = self.group.inverses().ok_or(Error::NotAGroup)?;
        let mul = |a, b| self.group.mul(a, b);
        let u: Vec<usize> = (0..self.lambda_size)
            .map(|l| inv[self.sandwich[l][0]])
            .collect();
        let v: Vec<usize> = (0..self.i_size)
            .map(|i| inv[mul(u[0], self.sandwich[0][i])])
            .collect();
        let sandwich = (0..self.lambda_size)
            .map(|l| {
                (0..self.i_size)
                    .map(|i| mul(mul(u[l], self.sandwich[l][i]), v[i]))
                    .collect()
            })
            .collect();
        rees_construct(self.i_size, self.lambda_size, self.group.clone(), sandwich)
    }
}

/// Agreement of the closed-form inverse `s -> (s(ses)⁻¹, ses, (ese)⁻¹s)`
/// with the computed inverse of `phi`, with inverses taken in `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ClosedFormDiagnostic {
    pub agree: usize,
    pub disagree: usize,
    /// Elements where some coordinate is not in `I`, `G` or `Λ`.
    pub undefined: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesDecomposition {
    pub base_idempotent: usize,
    /// Elements of `S` forming `I`, `G` and `Λ`, ascending.
    pub i_elements: Vec<usize>,
    pub group_elements: Vec<usize>,
    pub lambda_elements: Vec<usize>,
    pub rms: ReesMatrixSemigroup,
    /// `rms.realized -> S`.
    pub phi: SemigroupMorphism,
    /// `S -> rms.realized`.
    pub psi: SemigroupMorphism,
    pub closed_form: ClosedFormDiagnostic,
}

pub fn rees_decompose(s: &FiniteSemigroup, base: Option<usize>) -> Result<ReesDecomposition> {
    if !is_completely_simple(s) {
        return Err(Error::NotCompletelySimple);
    }
    let e = match base {
        Some(e) => {
            s.check_element(e)?;
            if !s.is_idempotent(e) {
                return Err(Error::NotIdempotent(e));
            }
            e
        }
        None => s.idempotents().members()[0],
    };
    decompose_at(s, e)
}

fn decompose_at(s: &FiniteSemigroup, e: usize) -> Result<ReesDecomposition> {
    let violation = |m: String| Error::InvariantViolation(m);
    let i_elements: Vec<usize> = s
        .left_multiples(e)
        .iter()
        .filter(|&x| s.is_idempotent(x))
        .collect();
    let lambda_elements: Vec<usize> = s
        .right_multiples(e)
        .iter()
        .filter(|&x| s.is_idempotent(x))
        .collect();
    let group_elements = s.left_translate(e, &s.left_multiples(e)).to_vec();
    let (group, _) = s.induced(&group_elements)?;
    if !group.is_group() {
        return Err(violation(format!("eSe is not a group at e = {e}")));
    }
    let group_index = |x: usize| group_elements.binary_search(&x).ok();
    let sandwich = lambda_elements
        .iter()
        .map(|&l| {
            i_elements
                .iter()
                .map(|&i| {
                    group_index(s.mul(l, i))
                        .ok_or_else(|| violation(format!("p({l},{i}) is outside G")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let rms = rees_construct(i_elements.len(), lambda_elements.len(), group, sandwich)?;
    let phi_map = (0..rms.realized().order())
        .map(|x| {
            let (i, g, l) = rms.coords(x);
            s.mul(s.mul(i_elements[i], group_elements[g]), lambda_elements[l])
        })
        .collect();
    let phi = SemigroupMorphism::new(rms.realized(), s, phi_map)?;
    if !phi.is_isomorphism() {
        return Err(violation(format!("phi is not an isomorphism at e = {e}")));
    }
    let psi = phi
        .inverse(rms.realized(), s)
        .expect("bijection has an inverse");

    let inverses = rms.group().inverses().expect("checked group");
    let mut closed_form = ClosedFormDiagnostic::default();
    for x in s.elements() {
        let ses = s.mul(s.mul(x, e), x);
        let ese = s.mul(s.mul(e, x), e);
        let coords = group_index(ses)
            .zip(group_index(ese))
            .and_then(|(g_ses, g_ese)| {
                let first = s.mul(x, group_elements[inverses[g_ses]]);
                let third = s.mul(group_elements[inverses[g_ese]], x);
                Some((
                    i_elements.binary_search(&first).ok()?,
                    g_ses,
                    lambda_elements.binary_search(&third).ok()?,
                ))
            });
        match coords {
            None => closed_form.undefined += 1,
            Some((i, g, l)) if rms.index(i, g, l) == psi.apply(x) => closed_form.agree += 1,
            Some(_) => closed_form.disagree += 1,
        }
    }

    Ok(ReesDecomposition {
        base_idempotent: e,
        i_elements,
        group_elements,
        lambda_elements,
        rms,
        phi,
        psi,
        closed_form,
    })
}

impl ReesDecomposition {
    /// `phi∘psi` and `psi∘phi` are identities and `phi` is an isomorphism.
    pub fn round_trip_holds(&self) -> bool {
        let n = self.phi.source_order();
        self.phi.is_isomorphism()
            && self.psi.is_isomorphism()
            && (0..n).all(|x| self.psi.apply(self.phi.apply(x)) == x)
            && (0..self.psi.source_order()).all(|x| self.phi.apply(self.psi.apply(x)) == x)
    }

    /// The isomorphism `self.realized -> other.realized` through `S`.
    pub fn isomorphism_to(
        &self,
        other: &ReesDecomposition,
        s: &FiniteSemigroup,
    ) -> Result<SemigroupMorphism> {
        other
            .psi
            .after(&self.phi, self.rms.realized(), other.rms.realized())
            .and_then(|m| {
                if m.is_isomorphism() {
                    Ok(m)
                } else {
                    Err(Error::InvariantViolation(format!(
                        "decompositions of {} at {} and {} are not isomorphic",
                        s.name().unwrap_or("semigroup"),
                        self.base_idempotent,
                        other.base_idempotent
                    )))
                }
            })
    }

    /// Sandwich entry `p(λ,i)` as an element of `S`, looked up by elements.
    pub fn sandwich_element(&self, lambda: usize, i: usize) -> Option<usize> {
        let l = self.lambda_elements.binary_search(&lambda).ok()?;
        let i = self.i_elements.binary_search(&i).ok()?;
        Some(self.group_elements[self.rms.sandwich()[l][i]])
    }
}

/// The `(J, W, Γ)` data of a subsemigroup `T` of a completely simple `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsemigroupDecomposition {
    pub j: SubsetHandle,
    pub w: SubsetHandle,
    pub gamma: SubsetHandle,
    /// `T` as its own semigroup, decomposed at the same idempotent.
    pub decomposition: ReesDecomposition,
    /// Map from `T`'s local indices to elements of `S`.
    pub members: Vec<usize>,
}

pub fn subsemigroup_decompose(
    s: &FiniteSemigroup,
    t: &SubsetHandle,
) -> Result<SubsemigroupDecomposition> {
    if !is_completely_simple(s) {
        return Err(Error::NotCompletelySimple);
    }
    let (sub, members) = s.induced(t.members())?;
    if !is_completely_simple(&sub) {
        return Err(Error::InvariantViolation(format!(
            "subsemigroup {members:?} is not completely simple"
        )));
    }
    let local_e = sub.idempotents().members()[0];
    let e = members[local_e];
    let whole = decompose_at(s, e)?;
    let part = decompose_at(&sub, local_e)?;
    let lift = |v: &[usize]| v.iter().map(|&x| members[x]).collect::<Vec<_>>();
    let j = lift(&part.i_elements);
    let gamma = lift(&part.lambda_elements);
    let w = lift(&part.group_elements);

    let violation = |m: &str| Err(Error::InvariantViolation(format!("{m} for {members:?}")));
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    if !subset(&j, &whole.i_elements) {
        return violation("J ⊄ I");
    }
    if !subset(&gamma, &whole.lambda_elements) {
        return violation("Γ ⊄ Λ");
    }
    if !subset(&w, &whole.group_elements) {
        return violation("W ⊄ G");
    }
    let gs = greens_structure(s);
    let t_cap_he: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&x| gs.related(Relation::H, x, e))
        .collect();
    if t_cap_he != w {
        return violation("T ∩ H_e differs from the H-class of e in T");
    }
    for &l in &gamma {
        for &i in &j {
            if part_sandwich(&part, &members, l, i) != whole.sandwich_element(l, i) {
                return violation("sandwich matrix is not the restriction");
            }
        }
    }
    let n = s.order();
    Ok(SubsemigroupDecomposition {
        j: SubsetHandle::trusted(n, j, Role::Generic),
        w: SubsetHandle::trusted(n, w, Role::Subsemigroup),
        gamma: SubsetHandle::trusted(n, gamma, Role::Generic),
        decomposition: part,
        members,
    })
}

fn part_sandwich(
    part: &ReesDecomposition,
    members: &[usize],
    lambda: usize,
    i: usize,
) -> Option<usize> {
    let local = |x: usize| members.binary_search(&x).ok();
    part.sandwich_element(local(lambda)?, local(i)?)
        .map(|x| members[x])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandPredicates {
    pub is_band: bool,
    pub is_rectangular_band: bool,
    pub is_rectangular_group: bool,
}

/// Band: `E(S) = S`. Rectangular band: band with `aba = a`. Rectangular
/// group: completely simple with a sandwich matrix that is constant once
/// normalized.
pub fn band_predicates(s: &FiniteSemigroup) -> BandPredicates {
    let is_band = s.elements().all(|x| s.is_idempotent(x));
    let is_rectangular_band = is_band
        && s.elements()
            .all(|a| s.elements().all(|b| s.mul(s.mul(a, b), a) == a));
    let is_rectangular_group = rees_decompose(s, None)
        .and_then(|d| d.rms.normalized())
        .map(|rms| {
            let first = rms.sandwich()[0][0];
            rms.sandwich().iter().flatten().all(|&p| p == first)
        })
        .unwrap_or(false);
    BandPredicates {
        is_band,
        is_rectangular_band,
        is_rectangular_group,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HFiniteness {
    pub h_class_count: usize,
    pub i_size: usize,
    pub lambda_size: usize,
    pub h_class_size: usize,
}

/// H-class count of a completely simple semigroup, which must equal
/// `|I|·|Λ|`. Finite semigroups are always H-finite.
pub fn h_finiteness(s: &FiniteSemigroup) -> Result<HFiniteness> {
    let d = rees_decompose(s, None)?;
    let g = greens_structure(s);
    let h_class_count = g.class_count(Relation::H);
    let (i_size, lambda_size) = (d.rms.i_size(), d.rms.lambda_size());
    if h_class_count != i_size * lambda_size {
        return Err(Error::InvariantViolation(format!(
            "{h_class_count} H-classes but |I|·|Λ| = {}",
            i_size * lambda_size
        )));
    }
    Ok(HFiniteness {
        h_class_count,
        i_size,
        lambda_size,
        h_class_size: d.rms.group().order(),
    })
}

/// `closure(T ∪ {x})` for a closed `T`.
fn extend_closure(s: &FiniteSemigroup, closed: &ElementSet, x: usize) -> ElementSet {
    let mut set = closed.clone();
    let mut members = closed.to_vec();
    let mut queue = vec![x];
    set.insert(x);
    while let Some(y) = queue.pop() {
        members.push(y);
        for &z in &members {
            for p in [s.mul(y, z), s.mul(z, y)] {
                if set.insert(p) {
                    queue.push(p);
                }
            }
        }
    }
    set
}

/// Every nonempty product-closed subset, ordered by size then members.
///
/// Grows subsemigroups one generator at a time from the monogenic ones;
/// each level's frontier is expanded in parallel.
pub fn enumerate_subsemigroups(s: &FiniteSemigroup, cap: usize) -> Result<Vec<SubsetHandle>> {
    let n = s.order();
    if n > cap {
        return Err(Error::SearchCapExceeded { order: n, cap });
    }
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut frontier: Vec<ElementSet> = Vec::new();
    for x in s.elements() {
        let c = s.closure_set(&[x]);
        if seen.insert(c.clone()) {
            frontier.push(c);
        }
    }
    while !frontier.is_empty() {
        let next: Vec<ElementSet> = frontier
            .par_iter()
            .flat_map_iter(|t| {
                s.elements()
                    .filter(|&x| !t.contains(x))
                    .map(|x| extend_closure(s, t, x))
                    .collect::<Vec<_>>()
            })
            .collect();
        frontier = next
            .into_iter()
            .filter(|c| seen.insert(c.clone()))
            .collect();
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().map(|c| c.to_vec()).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out
        .into_iter()
        .map(|m| SubsetHandle::trusted(n, m, Role::Subsemigroup))
        .collect())
}

/// A finite subsemigroup of a group contains the identity and is closed
/// under inverses.
pub fn subsemigroup_of_group_check(g: &FiniteSemigroup, t: &SubsetHandle) -> Result<bool> {
    if let Some((a, b, product)) = g.closure_violation(t.members()) {
        return Err(Error::NotASubsemigroup { a, b, product });
    }
    let identity = g.identity().ok_or(Error::NotAGroup)?;
    let inverses = g.inverses().ok_or(Error::NotAGroup)?;
    Ok(t.contains(identity) && t.members().iter().all(|&x| t.contains(inverses[x])))
}

/// Subgroups of a finite group (its subsemigroups).
pub fn subgroups(g: &FiniteSemigroup, cap: usize) -> Result<Vec<SubsetHandle>> {
    if !g.is_group() {
        return Err(Error::NotAGroup);
    }
    enumerate_subsemigroups(g, cap)
}

/// Subsemigroup count of a completely simple semigroup against
/// `Σ_{W ≤ G} 2^|I| 2^|Λ|`, with every subsemigroup classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingBound {
    pub subsemigroups: usize,
    pub subgroups: usize,
    pub i_size: usize,
    pub lambda_size: usize,
    pub bound: u128,
}

impl CountingBound {
    pub fn holds(&self) -> bool {
        (self.subsemigroups as u128) <= self.bound
    }
}

pub fn counting_bound(s: &FiniteSemigroup, cap: usize) -> Result<CountingBound> {
    let d = rees_decompose(s, None)?;
    let subs = enumerate_subsemigroups(s, cap)?;
    for t in &subs {
        subsemigroup_decompose(s, t)?;
    }
    let subgroups = subgroups(d.rms.group(), cap)?.len();
    let (i_size, lambda_size) = (d.rms.i_size(), d.rms.lambda_size());
    let bound = subgroups as u128 * (1u128 << i_size) * (1u128 << lambda_size);
    Ok(CountingBound {
        subsemigroups: subs.len(),
        subgroups,
        i_size,
        lambda_size,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn z3_rb22() -> FiniteSemigroup {
        z3().direct_product(&rb22()).unwrap()
    }

    #[test]
    fn simplicity() {
        assert!(is_simple(&z3()) && is_completely_simple(&z3()));
        assert!(is_simple(&rb22()) && is_completely_simple(&rb22()));
        assert!(!is_simple(&t2()) && !is_completely_simple(&t2()));
        assert!(is_completely_simple(&z3_rb22()));
    }

    #[test]
    fn construct_examples() {
        let g = rees_construct(1, 1, z3(), vec![vec![0]]).unwrap();
        assert!(g.realized().find_isomorphism(&z3()).is_some());
        let b = rees_construct(2, 2, trivial(), vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert!(b.realized().find_isomorphism(&rb22()).is_some());
        let m = rees_construct(2, 1, cyclic(2), vec![vec![0, 1]]).unwrap();
        assert_eq!(m.realized().order(), 4);
        assert!(is_completely_simple(m.realized()));
    }

    #[test]
    fn construct_errors() {
        assert_eq!(
            rees_construct(1, 1, t2(), vec![vec![0]]).unwrap_err(),
            Error::NotAGroup
        );
        assert_eq!(
            rees_construct(2, 1, z3(), vec![vec![0, 3]]).unwrap_err(),
            Error::BadSandwichEntry {
                row: 0,
                col: 1,
                value: 3
            }
        );
        assert!(matches!(
            rees_construct(2, 2, z3(), vec![vec![0, 0]]),
            Err(Error::BadShape { .. })
        ));
    }

    #[test]
    fn realized_product_rule() {
        let m = rees_construct(2, 2, cyclic(3), vec![vec![0, 1], vec![2, 0]]).unwrap();
        let r = m.realized();
        let g = m.group();
        for a in r.elements() {
            for b in r.elements() {
                let (i, x, l) = m.coords(a);
                let (j, y, mu) = m.coords(b);
                let expect = m.index(i, g.mul(g.mul(x, m.sandwich()[l][j]), y), mu);
                assert_eq!(r.mul(a, b), expect);
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let d = rees_decompose(&z3(), Some(0)).unwrap();
        assert_eq!((d.rms.i_size(), d.rms.lambda_size()), (1, 1));
        assert!(d.rms.group().is_group() && d.rms.group().order() == 3);
        assert_eq!(d.rms.sandwich(), &[vec![0]]);
        assert!(d.round_trip_holds());

        for e in 0..4 {
            let d = rees_decompose(&rb22(), Some(e)).unwrap();
            assert_eq!((d.rms.i_size(), d.rms.lambda_size()), (2, 2));
            assert_eq!(d.rms.group().order(), 1);
            assert!(d.round_trip_holds());
        }

        let t = t2();
        let (k, _) = t.induced(&[2, 3]).unwrap();
        let d = rees_decompose(&k, None).unwrap();
        assert_eq!(
            (d.rms.i_size(), d.rms.lambda_size(), d.rms.group().order()),
            (2, 1, 1)
        );
    }

    #[test]
    fn decompose_errors() {
        assert_eq!(
            rees_decompose(&t2(), None).unwrap_err(),
            Error::NotCompletelySimple
        );
        let m = rees_construct(2, 1, cyclic(2), vec![vec![0, 1]]).unwrap();
        let non_idem = m
            .realized()
            .elements()
            .find(|&x| !m.realized().is_idempotent(x))
            .unwrap();
        assert_eq!(
            rees_decompose(m.realized(), Some(non_idem)).unwrap_err(),
            Error::NotIdempotent(non_idem)
        );
    }

    #[test]
    fn closed_form_in_group_case() {
        // With e the identity, the printed first coordinate is s(s²)⁻¹ = s⁻¹,
        // which lies in I = {e} only for s = e.
        let d = rees_decompose(&z3(), Some(0)).unwrap();
        assert_eq!(
            d.closed_form.agree + d.closed_form.disagree + d.closed_form.undefined,
            3
        );
        assert_eq!(d.closed_form.agree, 1);
    }

    #[test]
    fn base_point_independence() {
        let s = z3_rb22();
        let ds: Vec<_> = s
            .idempotents()
            .members()
            .iter()
            .map(|&e| rees_decompose(&s, Some(e)).unwrap())
            .collect();
        for a in &ds {
            for b in &ds {
                assert!(a.isomorphism_to(b, &s).unwrap().is_isomorphism());
            }
        }
    }

    #[test]
    fn subsemigroup_examples() {
        let s = rb22();
        let whole = SubsetHandle::new(&s, 0..4, Role::Subsemigroup).unwrap();
        let d = subsemigroup_decompose(&s, &whole).unwrap();
        let full = rees_decompose(&s, Some(d.decomposition.base_idempotent)).unwrap();
        assert_eq!(d.j.members(), &full.i_elements[..]);
        assert_eq!(d.gamma.members(), &full.lambda_elements[..]);
        assert_eq!(d.w.members(), &full.group_elements[..]);

        assert!(matches!(
            subsemigroup_decompose(&s, &SubsetHandle::new(&s, [0, 3], Role::Generic).unwrap()),
            Err(Error::NotASubsemigroup { .. })
        ));
        let column = SubsetHandle::new(&s, [0, 2], Role::Subsemigroup).unwrap();
        let d = subsemigroup_decompose(&s, &column).unwrap();
        assert_eq!(d.j.len(), 2);
        assert_eq!(d.gamma.len(), 1);
        assert_eq!(d.w.len(), 1);

        let p = z3_rb22();
        // {0} x RB22 sits at indices 0..4
        let t = SubsetHandle::new(&p, 0..4, Role::Subsemigroup).unwrap();
        let d = subsemigroup_decompose(&p, &t).unwrap();
        assert_eq!((d.j.len(), d.w.len(), d.gamma.len()), (2, 1, 2));

        assert_eq!(
            subsemigroup_decompose(
                &t2(),
                &SubsetHandle::new(&t2(), [2], Role::Generic).unwrap()
            )
            .unwrap_err(),
            Error::NotCompletelySimple
        );
    }

    #[test]
    fn band_examples() {
        let b = band_predicates(&rb22());
        assert_eq!(
            (b.is_band, b.is_rectangular_band, b.is_rectangular_group),
            (true, true, true)
        );
        let b = band_predicates(&paper_band());
        assert_eq!(
            (b.is_band, b.is_rectangular_band, b.is_rectangular_group),
            (true, false, false)
        );
        let b = band_predicates(&z3());
        assert_eq!(
            (b.is_band, b.is_rectangular_band, b.is_rectangular_group),
            (false, false, true)
        );
        assert!(band_predicates(&z3_rb22()).is_rectangular_group);
        // already normalized and not constant
        let m = rees_construct(2, 2, cyclic(2), vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert!(!band_predicates(m.realized()).is_rectangular_group);
    }

    #[test]
    fn normalization_keeps_isomorphism_type() {
        let m = rees_construct(2, 2, cyclic(3), vec![vec![1, 2], vec![2, 2]]).unwrap();
        let n = m.normalized().unwrap();
        assert!(n.sandwich()[0].iter().all(|&p| p == 0));
        assert!(n.sandwich().iter().all(|r| r[0] == 0));
        assert!(m.realized().find_isomorphism(n.realized()).is_some());
    }

    #[test]
    fn h_finiteness_examples() {
        let h = h_finiteness(&z3()).unwrap();
        assert_eq!((h.h_class_count, h.i_size, h.lambda_size), (1, 1, 1));
        let h = h_finiteness(&rb22()).unwrap();
        assert_eq!((h.h_class_count, h.i_size, h.lambda_size), (4, 2, 2));
        let h = h_finiteness(&z3_rb22()).unwrap();
        assert_eq!(
            (h.h_class_count, h.i_size, h.lambda_size, h.h_class_size),
            (4, 2, 2, 3)
        );
        assert_eq!(h_finiteness(&t2()).unwrap_err(), Error::NotCompletelySimple);
    }

    fn brute_force_subsemigroups(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
        let n = s.order();
        let mut out: Vec<Vec<usize>> = (1u32..1 << n)
            .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect::<Vec<_>>())
            .filter(|v| s.closure_violation(v).is_none())
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn subsemigroup_enumeration() {
        let got = |s: &FiniteSemigroup| -> Vec<Vec<usize>> {
            enumerate_subsemigroups(s, 16)
                .unwrap()
                .iter()
                .map(|h| h.members().to_vec())
                .collect()
        };
        assert_eq!(got(&z3()), vec![vec![0], vec![0, 1, 2]]);
        assert_eq!(got(&l2()), vec![vec![0], vec![1], vec![0, 1]]);
        assert_eq!(got(&rb22()).len(), 9);
        for s in [rb22(), t2(), paper_band(), sym3(), klein()] {
            assert_eq!(got(&s), brute_force_subsemigroups(&s));
        }
        assert!(matches!(
            enumerate_subsemigroups(&z3_rb22(), 10),
            Err(Error::SearchCapExceeded { order: 12, cap: 10 })
        ));
    }

    #[test]
    fn subsemigroups_of_groups() {
        let z = z3();
        assert!(subsemigroup_of_group_check(
            &z,
            &SubsetHandle::new(&z, [0], Role::Subsemigroup).unwrap()
        )
        .unwrap());
        let z6 = cyclic(6);
        let t = z6.closure(&[2]).unwrap();
        assert_eq!(t.members(), &[0, 2, 4]);
        assert!(subsemigroup_of_group_check(&z6, &t).unwrap());
        let s3 = sym3();
        for t in enumerate_subsemigroups(&s3, 16).unwrap() {
            assert!(subsemigroup_of_group_check(&s3, &t).unwrap());
        }
        assert_eq!(subgroups(&s3, 16).unwrap().len(), 6);
        assert!(matches!(
            subsemigroup_of_group_check(&z6, &SubsetHandle::new(&z6, [1], Role::Generic).unwrap()),
            Err(Error::NotASubsemigroup { .. })
        ));
    }

    #[test]
    fn counting_bound_on_products() {
        let c = counting_bound(&z3_rb22(), 16).unwrap();
        assert!(c.holds());
        assert_eq!((c.subgroups, c.i_size, c.lambda_size), (2, 2, 2));
        assert_eq!(c.bound, 32);
    }
}
