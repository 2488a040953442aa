use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// An element map between two finite semigroups with cached verification
/// flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupMorphism {
    source_order: usize,
    target_order: usize,
    map: Vec<usize>,
    is_homomorphism: bool,
    is_injective: bool,
    is_surjective: bool,
}

impl SemigroupMorphism {
    pub fn new(
        source: &FiniteSemigroup,
        target: &FiniteSemigroup,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::BadShape {
                expected: source.order(),
                found: map.len(),
            });
        }
        let m = target.order();
        if let Some(&bad) = map.iter().find(|&&y| y >= m) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order: m,
            });
        }
        let n = source.order();
        let is_homomorphism =
            (0..n).all(|a| (0..n).all(|b| map[source.mul(a, b)] == target.mul(map[a], map[b])));
        let mut hit = vec![false; m];
        let mut is_injective = true;
        for &y in &map {
            if hit[y] {
                is_injective = false;
            }
            hit[y] = true;
        }
        let is_surjective = hit.iter().all(|&h| h);
        Ok(SemigroupMorphism {
            source_order: n,
            target_order: m,
            map,
            is_homomorphism,
            is_injective,
            is_surjective,
        })
    }

    pub fn identity(s: &FiniteSemigroup) -> Self {
        let n = s.order();
        SemigroupMorphism {
            source_order: n,
            target_order: n,
            map: (0..n).collect(),
            is_homomorphism: true,
            is_injective: true,
            is_surjective: true,
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn is_homomorphism(&self) -> bool {
        self.is_homomorphism
    }

    pub fn is_injective(&self) -> bool {
        self.is_injective
    }

    pub fn is_surjective(&self) -> bool {
        self.is_surjective
    }

    pub fn is_bijection(&self) -> bool {
        self.is_injective && self.is_surjective
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_homomorphism && self.is_bijection()
    }

    /// The map `x -> self(first(x))`, re-verified against the given
    /// semigroups.
    pub fn after(
        &self,
        first: &SemigroupMorphism,
        source: &FiniteSemigroup,
        target: &FiniteSemigroup,
    ) -> Result<SemigroupMorphism> {
        if first.target_order != self.source_order {
            return Err(Error::BadShape {
                expected: self.source_order,
                found: first.target_order,
            });
        }
        let map = first.map.iter().map(|&x| self.map[x]).collect();
        SemigroupMorphism::new(source, target, map)
    }

    /// The inverse map of a bijection (as a morphism `target -> source`).
    pub fn inverse(
        &self,
        source: &FiniteSemigroup,
        target: &FiniteSemigroup,
    ) -> Option<SemigroupMorphism> {
        if !self.is_bijection() {
            return None;
        }
        let mut inv = vec![0; self.target_order];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        SemigroupMorphism::new(target, source, inv).ok()
    }
}
