//! Rank inequalities for pairs of finitely generated subgroups.
//!
//! The product inequality compares `rr(H1 ∩ H2) * rr(H1 ∨ H2)` against
//! `rr(H1) * rr(H2)`; the generalized form replaces the intersection term
//! by the sum over double cosets and enlarges the join by the coset
//! representatives. Both fail on the counterexample pair. The Hanna
//! Neumann bounds, classical and strengthened, are checked separately.

use crate::error::Result;
use crate::pullback::{double_cosets, intersect};
use crate::subgroup::Subgroup;
use crate::word::Word;

/// The product inequality `rr(meet) * rr(join) <= rr(H1) * rr(H2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    pub r1: u64,
    pub r2: u64,
    pub r_meet: u64,
    pub r_join: u64,
    /// `r_meet * r_join`.
    pub lhs: u64,
    /// `r1 * r2`.
    pub rhs: u64,
    pub holds: bool,
}

pub fn im_inequality(h1: &Subgroup, h2: &Subgroup) -> Result<InequalityReport> {
    let r1 = h1.reduced_rank();
    let r2 = h2.reduced_rank();
    let r_meet = intersect(h1, h2)?.reduced_rank();
    let r_join = h1.join(h2)?.reduced_rank();
    let (lhs, rhs) = (r_meet * r_join, r1 * r2);
    Ok(InequalityReport {
        r1,
        r2,
        r_meet,
        r_join,
        lhs,
        rhs,
        holds: lhs <= rhs,
    })
}

/// The generalized product inequality: the double-coset rank total
/// against the join extended by the coset representatives.
#[derive(Debug, Clone)]
pub struct GeneralizedReport {
    pub r1: u64,
    pub r2: u64,
    /// Sum of `rr(H1 ∩ s H2 s^-1)` over double cosets.
    pub total: u64,
    /// Reduced rank of the extended join.
    pub join_reduced_rank: u64,
    /// `total * join_reduced_rank`.
    pub lhs: u64,
    /// `r1 * r2`.
    pub rhs: u64,
    pub holds: bool,
    /// Representatives of the contributing cosets, identity first when
    /// present.
    pub representatives: Vec<Word>,
    pub h1_index_in_join: Option<u64>,
    pub h2_index_in_join: Option<u64>,
    /// The extended join `<H1, H2, s_1, ..., s_t>`.
    pub join: Subgroup,
}

pub fn generalized_im_inequality(h1: &Subgroup, h2: &Subgroup) -> Result<GeneralizedReport> {
    let r1 = h1.reduced_rank();
    let r2 = h2.reduced_rank();
    let cosets = double_cosets(h1, h2)?;
    let representatives: Vec<Word> = cosets
        .components
        .iter()
        .map(|c| c.representative.clone())
        .collect();
    let mut join = h1.join(h2)?;
    let loops: Vec<Word> = representatives
        .iter()
        .filter(|w| !w.is_empty())
        .cloned()
        .collect();
    if !loops.is_empty() {
        let reps = Subgroup::from_generators(h1.alphabet().clone(), &loops);
        join = join.join(&reps)?;
    }
    let join_reduced_rank = join.reduced_rank();
    let h1_index_in_join = h1.index_in(&join)?;
    let h2_index_in_join = h2.index_in(&join)?;
    let (lhs, rhs) = (cosets.total * join_reduced_rank, r1 * r2);
    Ok(GeneralizedReport {
        r1,
        r2,
        total: cosets.total,
        join_reduced_rank,
        lhs,
        rhs,
        holds: lhs <= rhs,
        representatives,
        h1_index_in_join,
        h2_index_in_join,
        join,
    })
}

/// The classical bound `rr(H1 ∩ H2) <= 2 rr(H1) rr(H2)` and the
/// strengthened bound `sum over cosets <= rr(H1) rr(H2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HannaNeumannReport {
    pub r1: u64,
    pub r2: u64,
    pub r_meet: u64,
    /// Double-coset rank total.
    pub total: u64,
    /// `2 * r1 * r2`.
    pub classical_bound: u64,
    /// `r1 * r2`.
    pub strengthened_bound: u64,
    pub classical_holds: bool,
    pub strengthened_holds: bool,
}

pub fn hanna_neumann_check(h1: &Subgroup, h2: &Subgroup) -> Result<HannaNeumannReport> {
    let r1 = h1.reduced_rank();
    let r2 = h2.reduced_rank();
    let r_meet = intersect(h1, h2)?.reduced_rank();
    let total = double_cosets(h1, h2)?.total;
    let classical_bound = 2 * r1 * r2;
    let strengthened_bound = r1 * r2;
    Ok(HannaNeumannReport {
        r1,
        r2,
        r_meet,
        total,
        classical_bound,
        strengthened_bound,
        classical_holds: r_meet <= classical_bound,
        strengthened_holds: total <= strengthened_bound,
    })
}
