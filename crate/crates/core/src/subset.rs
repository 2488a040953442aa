use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// What a [`SubsetHandle`] is claimed to be; selects the closure check run
/// at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    Subsemigroup,
    LeftIdeal,
    RightIdeal,
    TwoSidedIdeal,
    Idempotents,
    Kernel,
    HClass,
    Center,
    Centralizer,
    Monogenic,
    Generic,
}

/// A sorted, duplicate-free subset of a semigroup's elements tagged with
/// its role.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubsetHandle {
    parent_order: usize,
    members: Vec<usize>,
    role: Role,
}

impl SubsetHandle {
    /// Validates range, emptiness and the role-specific closure property.
    pub fn new(
        s: &FiniteSemigroup,
        members: impl IntoIterator<Item = usize>,
        role: Role,
    ) -> Result<Self> {
        let n = s.order();
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&x| x >= n) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order: n,
            });
        }
        if members.is_empty() && role != Role::Center {
            return Err(Error::InvariantViolation(format!(
                "empty subset with role {role:?}"
            )));
        }
        let handle = SubsetHandle {
            parent_order: n,
            members,
            role,
        };
        handle.check_role(s)?;
        Ok(handle)
    }

    /// Builds a handle without running the closure check. Used internally
    /// where the construction guarantees the property.
    pub(crate) fn trusted(parent_order: usize, mut members: Vec<usize>, role: Role) -> Self {
        members.sort_unstable();
        members.dedup();
        SubsetHandle {
            parent_order,
            members,
            role,
        }
    }

    fn check_role(&self, s: &FiniteSemigroup) -> Result<()> {
        let set = self.to_set();
        let not_ideal = || Error::NotAnIdeal;
        match self.role {
            Role::Subsemigroup | Role::Monogenic | Role::Center | Role::Centralizer => {
                if let Some((a, b, product)) = s.closure_violation(&self.members) {
                    return Err(Error::NotASubsemigroup { a, b, product });
                }
            }
            Role::LeftIdeal => {
                if !s.is_left_ideal(&set) {
                    return Err(not_ideal());
                }
            }
            Role::RightIdeal => {
                if !s.is_right_ideal(&set) {
                    return Err(not_ideal());
                }
            }
            Role::TwoSidedIdeal | Role::Kernel => {
                if !s.is_ideal(&set) {
                    return Err(not_ideal());
                }
            }
            Role::Idempotents => {
                if let Some(&x) = self.members.iter().find(|&&x| !s.is_idempotent(x)) {
                    return Err(Error::NotIdempotent(x));
                }
            }
            Role::HClass | Role::Generic => {}
        }
        Ok(())
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn to_set(&self) -> ElementSet {
        ElementSet::from_elements(self.parent_order, self.members.iter().copied())
    }

    pub fn with_role(mut self, role: Role) -> Self {
        self.role = role;
        self
    }
}
