use crate::ring::Field;

/// A vanishing constraint `w_d = 0` known to hold for every bundle on some
/// family of Stiefel manifolds.
#[derive(Clone, Copy)]
pub struct ObstructionRule {
    pub id: &'static str,
    pub statement: &'static str,
    vanishing: fn(Field, u32, u32) -> Option<u32>,
}

impl ObstructionRule {
    pub const fn new(
        id: &'static str,
        statement: &'static str,
        vanishing: fn(Field, u32, u32) -> Option<u32>,
    ) -> Self {
        ObstructionRule {
            id,
            statement,
            vanishing,
        }
    }

    /// The bottom cell of `V_k(R^n)` is `S^{n-k}`, and restriction to it is
    /// an isomorphism on `H^{n-k}`. A bundle over `S^m` with `w_m != 0`
    /// exists only for `m` in {1, 2, 4, 8}, so otherwise `w_{n-k} = 0`.
    pub const MILNOR: ObstructionRule = ObstructionRule::new(
        "milnor-sphere",
        "w_{n-k} = 0 on V_k(R^n) unless n-k is 1, 2, 4 or 8 (restriction to the bottom sphere; imported theorem, not derived)",
        milnor_vanishing,
    );

    /// Degree forced to vanish on `V_k(F^n)`, if the rule applies.
    pub fn vanishing_degree(&self, field: Field, n: u32, k: u32) -> Option<u32> {
        (self.vanishing)(field, n, k)
    }
}

impl core::fmt::Debug for ObstructionRule {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ObstructionRule").field("id", &self.id).finish()
    }
}

fn milnor_vanishing(field: Field, n: u32, k: u32) -> Option<u32> {
    let m = n.checked_sub(k)?;
    (field == Field::Real && m > 0 && !matches!(m, 1 | 2 | 4 | 8)).then_some(m)
}

/// A rule that fired during an enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AppliedRule {
    pub id: alloc::string::String,
    pub degree: u32,
    /// Candidate classes discarded because they were nonzero in `degree`.
    pub pruned: u64,
}
