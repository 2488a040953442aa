//! Cayley-table semigroups and element-level predicates.
//!
//! Elements are the dense indices `0..n`; the product `a*b` is the table
//! entry at row `a`, column `b`. A [`FiniteSemigroup`] is only obtainable
//! through a validating constructor, so every value of the type is
//! associative and in range.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::morphism::SemigroupMorphism;
use crate::subset::{Role, SubsetHandle};

/// Largest order checked with the direct triple loop; above this Light's
/// test runs against a computed generating set.
pub const DIRECT_ASSOCIATIVITY_LIMIT: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<u32>,
    name: Option<String>,
}

/// Which cancellation law a witness breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// `a != b` with `c*a == c*b` (left) or `a*c == b*c` (right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CancellationWitness {
    pub side: Side,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cancellativity {
    pub left: bool,
    pub right: bool,
    pub witness: Option<CancellationWitness>,
}

/// The monogenic subsemigroup `<s>` with its index and period:
/// `s^(index+period) = s^index`, both minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monogenic {
    pub subset: SubsetHandle,
    pub index: usize,
    pub period: usize,
    pub idempotent: usize,
}

impl FiniteSemigroup {
    /// Builds a semigroup from an `n x n` table of rows.
    pub fn from_table(n: usize, rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_table_with_limits(n, rows, &Limits::default())
    }

    pub fn from_table_with_limits(n: usize, rows: &[Vec<usize>], limits: &Limits) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::BadShape {
                expected: n,
                found: rows.len(),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::BadShape {
                    expected: n,
                    found: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat_with_limits(n, flat, limits)
    }

    /// Builds a semigroup from a row-major flattened table.
    pub fn from_flat(n: usize, flat: Vec<usize>) -> Result<Self> {
        Self::from_flat_with_limits(n, flat, &Limits::default())
    }

    pub fn from_flat_with_limits(n: usize, flat: Vec<usize>, limits: &Limits) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if n > limits.max_order {
            return Err(Error::OrderTooLarge {
                order: n,
                max: limits.max_order,
            });
        }
        if flat.len() != n * n {
            return Err(Error::BadShape {
                expected: n * n,
                found: flat.len(),
            });
        }
        if let Some(pos) = flat.iter().position(|&v| v >= n) {
            return Err(Error::OutOfRange {
                row: pos / n,
                col: pos % n,
                value: flat[pos],
                order: n,
            });
        }
        let s = FiniteSemigroup {
            order: n,
            table: flat.into_iter().map(|v| v as u32).collect(),
            name: None,
        };
        let witness = if n <= DIRECT_ASSOCIATIVITY_LIMIT {
            s.direct_associativity_witness()
        } else {
            s.light_associativity_witness()
        };
        match witness {
            Some((a, b, c)) => Err(Error::NotAssociative { a, b, c }),
            None => Ok(s),
        }
    }

    /// Builds a semigroup from a product function.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let flat = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_flat(n, flat)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&v| v as usize)
    }

    pub fn column(&self, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).map(move |a| self.mul(a, b))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).collect()).collect()
    }

    pub fn flat(&self) -> Vec<usize> {
        self.table.iter().map(|&v| v as usize).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x,
                order: self.order,
            })
        }
    }

    /// Hex SHA-256 of the order and table (labels excluded).
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.order as u64).to_le_bytes());
        for &v in &self.table {
            h.update(v.to_le_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    fn direct_associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Light's test: the elements `g` with `(xg)y = x(gy)` for all `x, y`
    /// are closed under the product, so checking a generating set of the
    /// magma suffices.
    fn light_associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for g in self.magma_generating_set() {
            for x in 0..n {
                let xg = self.mul(x, g);
                for y in 0..n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Some((x, g, y));
                    }
                }
            }
        }
        None
    }

    /// Greedy generating set under the (not yet known associative) product.
    pub(crate) fn magma_generating_set(&self) -> Vec<usize> {
        let n = self.order;
        let mut inside = vec![false; n];
        let mut members = Vec::with_capacity(n);
        let mut gens = Vec::new();
        let mut queue = VecDeque::new();
        for candidate in 0..n {
            if inside[candidate] {
                continue;
            }
            gens.push(candidate);
            inside[candidate] = true;
            queue.push_back(candidate);
            while let Some(y) = queue.pop_front() {
                members.push(y);
                for &z in &members {
                    for p in [self.mul(y, z), self.mul(z, y)] {
                        if !inside[p] {
                            inside[p] = true;
                            queue.push_back(p);
                        }
                    }
                }
            }
        }
        gens
    }

    /// `S¹`: returns `S` unchanged when it already has an identity,
    /// otherwise adjoins a new identity at index `n`. The morphism is the
    /// inclusion `S -> S¹`.
    pub fn adjoin_identity(&self) -> (FiniteSemigroup, SemigroupMorphism) {
        if self.identity().is_some() {
            return (self.clone(), SemigroupMorphism::identity(self));
        }
        let n = self.order;
        let m = n + 1;
        let mut flat = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                flat.push(match (a == n, b == n) {
                    (true, _) => b,
                    (false, true) => a,
                    (false, false) => self.mul(a, b),
                } as u32);
            }
        }
        let monoid = FiniteSemigroup {
            order: m,
            table: flat,
            name: self.name.as_ref().map(|s| format!("{s}^1")),
        };
        let inclusion = SemigroupMorphism::new(self, &monoid, (0..n).collect())
            .expect("inclusion map is in range");
        (monoid, inclusion)
    }

    /// Componentwise product; `(a,b)` sits at index `a*|B| + b`.
    pub fn direct_product(&self, other: &FiniteSemigroup) -> Result<FiniteSemigroup> {
        self.direct_product_with_limits(other, &Limits::default())
    }

    pub fn direct_product_with_limits(
        &self,
        other: &FiniteSemigroup,
        limits: &Limits,
    ) -> Result<FiniteSemigroup> {
        let (n, m) = (self.order, other.order);
        let order = n
            .checked_mul(m)
            .filter(|&o| o <= limits.max_order)
            .ok_or(Error::Overflow {
                left: n,
                right: m,
                max: limits.max_order,
            })?;
        let mut flat = Vec::with_capacity(order * order);
        for x in 0..order {
            let (a, b) = (x / m, x % m);
            for y in 0..order {
                let (c, d) = (y / m, y % m);
                flat.push((self.mul(a, c) * m + other.mul(b, d)) as u32);
            }
        }
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}x{b}")),
            _ => None,
        };
        Ok(FiniteSemigroup {
            order,
            table: flat,
            name,
        })
    }

    /// The opposite semigroup, `a *op b = b * a`.
    pub fn opposite(&self) -> FiniteSemigroup {
        let n = self.order;
        let flat = (0..n * n)
            .map(|k| self.table[(k % n) * n + k / n])
            .collect();
        FiniteSemigroup {
            order: n,
            table: flat,
            name: self.name.as_ref().map(|s| format!("{s}^op")),
        }
    }

    /// The table under the relabeling `x -> perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSemigroup {
        let n = self.order;
        let mut flat = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u32;
            }
        }
        FiniteSemigroup {
            order: n,
            table: flat,
            name: self.name.clone(),
        }
    }

    /// The subsemigroup generated by `gens`, by worklist closure.
    pub fn closure(&self, gens: &[usize]) -> Result<SubsetHandle> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for &g in gens {
            self.check_element(g)?;
        }
        let set = self.closure_set(gens);
        let mut distinct = gens.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let role = if distinct.len() == 1 {
            Role::Monogenic
        } else {
            Role::Subsemigroup
        };
        Ok(SubsetHandle::trusted(self.order, set.to_vec(), role))
    }

    pub(crate) fn closure_set(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::new(self.order);
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &g in gens {
            if set.insert(g) {
                queue.push_back(g);
            }
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        // Every product of generators is reached by right-multiplying by a
        // generator, so the right Cayley graph suffices.
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let p = self.mul(x, g);
                if set.insert(p) {
                    queue.push_back(p);
                }
            }
        }
        set
    }

    #[inline]
    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// `E(S)`. Nonempty for every finite semigroup.
    pub fn idempotents(&self) -> SubsetHandle {
        let members = self.elements().filter(|&e| self.is_idempotent(e)).collect();
        SubsetHandle::trusted(self.order, members, Role::Idempotents)
    }

    /// Scans pairs `a < b`, then `c` ascending; the first failure of
    /// either law is reported (left before right for the same triple).
    pub fn cancellativity(&self) -> Cancellativity {
        let n = self.order;
        let mut left = true;
        let mut right = true;
        let mut witness = None;
        for a in 0..n {
            for b in a + 1..n {
                for c in 0..n {
                    if left && self.mul(c, a) == self.mul(c, b) {
                        left = false;
                        witness.get_or_insert(CancellationWitness {
                            side: Side::Left,
                            a,
                            b,
                            c,
                        });
                    }
                    if right && self.mul(a, c) == self.mul(b, c) {
                        right = false;
                        witness.get_or_insert(CancellationWitness {
                            side: Side::Right,
                            a,
                            b,
                            c,
                        });
                    }
                    if !left && !right {
                        return Cancellativity {
                            left,
                            right,
                            witness,
                        };
                    }
                }
            }
        }
        Cancellativity {
            left,
            right,
            witness,
        }
    }

    /// The two-sided identity, if any (it is unique).
    pub fn identity(&self) -> Option<usize> {
        self.elements().find(|&e| {
            self.elements()
                .all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
        })
    }

    pub fn is_monoid(&self) -> Option<usize> {
        self.identity()
    }

    pub fn is_group(&self) -> bool {
        self.inverses().is_some()
    }

    /// Two-sided inverses with respect to the identity, when `S` is a group.
    pub fn inverses(&self) -> Option<Vec<usize>> {
        let e = self.identity()?;
        self.elements()
            .map(|x| {
                self.elements()
                    .find(|&y| self.mul(x, y) == e && self.mul(y, x) == e)
            })
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `Z(S)`; may be empty.
    pub fn center(&self) -> SubsetHandle {
        let members = self
            .elements()
            .filter(|&x| self.elements().all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect();
        SubsetHandle::trusted(self.order, members, Role::Center)
    }

    /// `C(a)`; contains `<a>`.
    pub fn centralizer(&self, a: usize) -> Result<SubsetHandle> {
        self.check_element(a)?;
        let members = self
            .elements()
            .filter(|&x| self.mul(x, a) == self.mul(a, x))
            .collect();
        Ok(SubsetHandle::trusted(
            self.order,
            members,
            Role::Centralizer,
        ))
    }

    /// `<s> = {s, s², ...}` with index, period and its unique idempotent.
    pub fn monogenic(&self, s: usize) -> Result<Monogenic> {
        self.check_element(s)?;
        let mut seen = vec![usize::MAX; self.order];
        let mut powers = Vec::new();
        let mut x = s;
        while seen[x] == usize::MAX {
            seen[x] = powers.len() + 1;
            powers.push(x);
            x = self.mul(x, s);
        }
        // s^(k+1) == s^index where k = powers.len()
        let index = seen[x];
        let period = powers.len() + 1 - index;
        let cycle = &powers[index - 1..];
        let idempotent = *cycle
            .iter()
            .find(|&&y| self.is_idempotent(y))
            .expect("the cycle of a monogenic semigroup is a group");
        Ok(Monogenic {
            subset: SubsetHandle::trusted(self.order, powers, Role::Monogenic),
            index,
            period,
            idempotent,
        })
    }

    /// First pair `(a, b)` of members whose product leaves the subset.
    pub fn closure_violation(&self, members: &[usize]) -> Option<(usize, usize, usize)> {
        let set = ElementSet::from_elements(self.order, members.iter().copied());
        for &a in members {
            for &b in members {
                let p = self.mul(a, b);
                if !set.contains(p) {
                    return Some((a, b, p));
                }
            }
        }
        None
    }

    /// `S·A ⊆ A`.
    pub fn is_left_ideal(&self, set: &ElementSet) -> bool {
        !set.is_empty() && set.iter().all(|a| self.column(a).all(|p| set.contains(p)))
    }

    /// `A·S ⊆ A`.
    pub fn is_right_ideal(&self, set: &ElementSet) -> bool {
        !set.is_empty() && set.iter().all(|a| self.row(a).all(|p| set.contains(p)))
    }

    pub fn is_ideal(&self, set: &ElementSet) -> bool {
        self.is_left_ideal(set) && self.is_right_ideal(set)
    }

    /// `S¹s`.
    pub fn principal_left(&self, s: usize) -> ElementSet {
        let mut set = ElementSet::from_elements(self.order, self.column(s));
        set.insert(s);
        set
    }

    /// `sS¹`.
    pub fn principal_right(&self, s: usize) -> ElementSet {
        let mut set = ElementSet::from_elements(self.order, self.row(s));
        set.insert(s);
        set
    }

    /// `S¹sS¹`.
    pub fn principal_two_sided(&self, s: usize) -> ElementSet {
        let left = self.principal_left(s);
        let mut set = left.clone();
        for t in left.iter() {
            for p in self.row(t) {
                set.insert(p);
            }
        }
        set
    }

    /// `S·x` (no identity adjoined).
    pub fn left_multiples(&self, x: usize) -> ElementSet {
        ElementSet::from_elements(self.order, self.column(x))
    }

    /// `x·S`.
    pub fn right_multiples(&self, x: usize) -> ElementSet {
        ElementSet::from_elements(self.order, self.row(x))
    }

    /// `t·A`.
    pub fn left_translate(&self, t: usize, set: &ElementSet) -> ElementSet {
        ElementSet::from_elements(self.order, set.iter().map(|a| self.mul(t, a)))
    }

    /// The induced semigroup on a product-closed subset, with members
    /// re-indexed in ascending order. Returns the table and the map from
    /// new index to parent element.
    pub fn induced(&self, members: &[usize]) -> Result<(FiniteSemigroup, Vec<usize>)> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for &m in &members {
            self.check_element(m)?;
        }
        let mut local = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            local[m] = i;
        }
        let k = members.len();
        let mut flat = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                let p = self.mul(a, b);
                if local[p] == usize::MAX {
                    return Err(Error::NotASubsemigroup { a, b, product: p });
                }
                flat.push(local[p] as u32);
            }
        }
        let sub = FiniteSemigroup {
            order: k,
            table: flat,
            name: None,
        };
        Ok((sub, members))
    }

    /// An isomorphism `self -> other`, if one exists.
    ///
    /// A homomorphism is fixed by the images of a generating set, so the
    /// search ranges over generator images and extends along the right
    /// Cayley graph.
    pub fn find_isomorphism(&self, other: &FiniteSemigroup) -> Option<SemigroupMorphism> {
        if self.order != other.order {
            return None;
        }
        let n = self.order;
        let gens = self.semigroup_generating_set();
        let profile = |s: &FiniteSemigroup, x: usize| {
            let m = s.monogenic(x).expect("in range");
            (m.index, m.period, s.is_idempotent(x))
        };
        let src_profile: Vec<_> = (0..n).map(|x| profile(self, x)).collect();
        let dst_profile: Vec<_> = (0..n).map(|x| profile(other, x)).collect();
        let mut sorted_src = src_profile.clone();
        let mut sorted_dst = dst_profile.clone();
        sorted_src.sort_unstable();
        sorted_dst.sort_unstable();
        if sorted_src != sorted_dst {
            return None;
        }
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                (0..n)
                    .filter(|&y| dst_profile[y] == src_profile[g])
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; gens.len()];
        self.search_generator_images(other, &gens, &candidates, &mut choice, 0)
    }

    fn search_generator_images(
        &self,
        other: &FiniteSemigroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        choice: &mut Vec<usize>,
        depth: usize,
    ) -> Option<SemigroupMorphism> {
        if depth == gens.len() {
            let map = self.extend_from_generators(other, gens, choice)?;
            if map.contains(&usize::MAX) {
                return None;
            }
            return SemigroupMorphism::new(self, other, map)
                .ok()
                .filter(|m| m.is_isomorphism());
        }
        for &y in &candidates[depth] {
            choice[depth] = y;
            // The images chosen so far must already give a well-defined,
            // injective map on the subsemigroup the prefix generates.
            if self
                .extend_from_generators(other, &gens[..=depth], &choice[..=depth])
                .is_none()
            {
                continue;
            }
            if let Some(m) =
                self.search_generator_images(other, gens, candidates, choice, depth + 1)
            {
                return Some(m);
            }
        }
        None
    }

    /// The map on `<gens>` forced by sending `gens[i]` to `images[i]`;
    /// `None` when it is not well defined or not injective. Elements
    /// outside `<gens>` stay `usize::MAX`.
    fn extend_from_generators(
        &self,
        other: &FiniteSemigroup,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        let n = self.order;
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut queue = VecDeque::new();
        for (&g, &y) in gens.iter().zip(images) {
            if map[g] == usize::MAX {
                if used[y] {
                    return None;
                }
                map[g] = y;
                used[y] = true;
                queue.push_back(g);
            } else if map[g] != y {
                return None;
            }
        }
        while let Some(x) = queue.pop_front() {
            for (&g, &y) in gens.iter().zip(images) {
                let p = self.mul(x, g);
                let q = other.mul(map[x], y);
                if map[p] == usize::MAX {
                    if used[q] {
                        return None;
                    }
                    map[p] = q;
                    used[q] = true;
                    queue.push_back(p);
                } else if map[p] != q {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// Greedy generating set of the (associative) semigroup.
    pub fn semigroup_generating_set(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut covered = ElementSet::new(self.order);
        // Elements outside S·S must be generators; try them first.
        let mut products = ElementSet::new(self.order);
        for a in self.elements() {
            for p in self.row(a) {
                products.insert(p);
            }
        }
        let order: Vec<usize> = self
            .elements()
            .filter(|&x| !products.contains(x))
            .chain(self.elements().filter(|&x| products.contains(x)))
            .collect();
        for x in order {
            if !covered.contains(x) {
                gens.push(x);
                covered = self.closure_set(&gens);
            }
        }
        gens
    }
}
