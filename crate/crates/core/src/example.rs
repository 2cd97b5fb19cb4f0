//! A family of pairs whose extended-join reduced rank is arbitrarily
//! large while the double-coset rank total stays on a fixed linear
//! schedule.
//!
//! Fix two finite quotients of the rank-2 free group with coprime orders,
//! with kernels `H0` and `H1`. Lift both kernels to a free group enlarged
//! by `k - 1` fresh letters, and join the lifted `H0` with its conjugates
//! by each fresh letter to form `H2`. Coprimality makes `H0 H1` the whole
//! rank-2 free group, so every copy of `H0` inside `H2` meets `H1` in a
//! subgroup of reduced rank `rbar(H0) * rbar(H1)`, and the double cosets
//! with nontrivial intersection are represented by the identity and the
//! inverses of the fresh letters: the rank total is exactly
//! `k * rbar(H0) * rbar(H1)`.
//!
//! Since `rbar(H2) = k * rbar(H0) + k - 1` (reduced rank gains one per
//! free factor beyond the first), the total equals `rbar(H1) * rbar(H2)`
//! only at `k = 1`. The join extended by the coset representatives is the
//! whole enlarged free group, of reduced rank `k`, so the generalized
//! product inequality fails for every `k >= 2` and by an arbitrarily
//! large margin.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::inequality::generalized_im_inequality;
use crate::subgroup::{kernel_of_finite_quotient, Permutation, Subgroup};
use crate::word::Word;

/// A finite quotient of the free group on `a, b`, given by the images of
/// the two letters in a permutation group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpec {
    a: Permutation,
    b: Permutation,
}

impl QuotientSpec {
    pub fn new(a: Permutation, b: Permutation) -> Result<QuotientSpec> {
        if a.degree() != b.degree() {
            return Err(Error::InvalidParams(format!(
                "image degrees differ: {} vs {}",
                a.degree(),
                b.degree()
            )));
        }
        Ok(QuotientSpec { a, b })
    }

    /// Both letters map to the standard `p`-cycle: the quotient is the
    /// cyclic group of order `p` via the total exponent sum.
    pub fn cyclic(p: usize) -> QuotientSpec {
        QuotientSpec {
            a: Permutation::cycle(p),
            b: Permutation::cycle(p),
        }
    }

    fn images(&self) -> [Permutation; 2] {
        [self.a.clone(), self.b.clone()]
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The free group on `a, b` plus `k - 1` fresh letters `c, d, ...`.
fn example_alphabet(k: u64) -> Result<Alphabet> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be positive".into()));
    }
    if k > 25 {
        return Err(Error::InvalidParams(
            "only 24 fresh single-letter names are available, so k <= 25".into(),
        ));
    }
    let mut names = vec!["a".to_string(), "b".to_string()];
    for j in 0..k - 1 {
        names.push(((b'c' + j as u8) as char).to_string());
    }
    Alphabet::new(names)
}

/// Builds the triple `(H0, H1, H2)` over the enlarged alphabet: `H0` and
/// `H1` are the quotient kernels lifted from `a, b` (same graphs, larger
/// alphabet, so both have infinite index there), and `H2` joins the
/// lifted `H0` with its conjugates by each of the `k - 1` fresh letters.
/// The two quotient orders must be coprime.
pub fn build_example(
    k: u64,
    q0: &QuotientSpec,
    q1: &QuotientSpec,
) -> Result<(Subgroup, Subgroup, Subgroup)> {
    let big = example_alphabet(k)?;
    let base = Alphabet::from_chars("ab").expect("two-letter alphabet");
    let k0 = kernel_of_finite_quotient(&base, &q0.images())?;
    let k1 = kernel_of_finite_quotient(&base, &q1.images())?;
    let o0 = k0.finite_index().expect("kernels have finite index");
    let o1 = k1.finite_index().expect("kernels have finite index");
    if gcd(o0, o1) != 1 {
        return Err(Error::NotCoprime(o0, o1));
    }

    let h0 = k0.extend_alphabet(&big)?;
    let h1 = k1.extend_alphabet(&big)?;
    let mut h2 = h0.clone();
    for j in 0..k - 1 {
        let c = big.letter(2 + j as usize).expect("fresh letter");
        let conjugator = Word::from_letters(vec![c.positive()]);
        h2 = h2.join(&h0.conjugate(&conjugator))?;
    }
    Ok((h0, h1, h2))
}

/// What [`verify_example`] checked.
#[derive(Debug, Clone)]
pub struct ExampleReport {
    pub k: u64,
    /// Reduced rank of the lifted building-block kernel `H0`.
    pub r0: u64,
    pub r1: u64,
    pub r2: u64,
    /// Double-coset rank total; equals `k * r0 * r1`.
    pub total: u64,
    /// One double coset per copy of `H0` inside `H2`; equals `k`.
    pub coset_count: usize,
    /// Whether `total` equals `r1 * r2` (true only at `k = 1`).
    pub tight: bool,
    /// Reduced rank of the extended join; equals `k`.
    pub join_reduced_rank: u64,
    /// Index of the extended join in the enlarged free group; `Some(1)`.
    pub join_index: Option<u64>,
    /// `total * join_reduced_rank`.
    pub lhs: u64,
    /// `r1 * r2`.
    pub rhs: u64,
    /// Whether the generalized product inequality survived (only at
    /// `k = 1`).
    pub generalized_holds: bool,
}

fn expect_eq(name: &str, want: u64, got: u64) -> Result<()> {
    if want == got {
        Ok(())
    } else {
        Err(Error::Verification(format!(
            "{name}: expected {want}, got {got}"
        )))
    }
}

/// Builds the pair for the standard quotients of orders 2 and 3 and
/// checks the whole story: `r0 = 2`, `r1 = 3`, `r2 = 3k - 1`, exactly `k`
/// double cosets carrying rank total `6k`, and the extended join is the
/// full enlarged free group of reduced rank `k`, so the generalized
/// inequality survives only at `k = 1`.
pub fn verify_example(k: u64) -> Result<ExampleReport> {
    let (h0, h1, h2) = build_example(k, &QuotientSpec::cyclic(2), &QuotientSpec::cyclic(3))?;
    let r0 = h0.reduced_rank();
    let r1 = h1.reduced_rank();
    let r2 = h2.reduced_rank();
    expect_eq("reduced rank of the building-block kernel", 2, r0)?;
    expect_eq("reduced rank of the lifted kernel", 3, r1)?;
    expect_eq("reduced rank of the conjugate join", k * r0 + k - 1, r2)?;

    let gen = generalized_im_inequality(&h1, &h2)?;
    expect_eq("double-coset count", k, gen.representatives.len() as u64)?;
    expect_eq("double-coset rank total", k * r0 * r1, gen.total)?;
    expect_eq(
        "reduced rank of the extended join",
        k,
        gen.join_reduced_rank,
    )?;
    match gen.join.finite_index() {
        Some(1) => {}
        other => {
            return Err(Error::Verification(format!(
                "extended join should be everything, got index {other:?}"
            )))
        }
    }
    if gen.holds != (k == 1) {
        return Err(Error::Verification(format!(
            "generalized inequality at k = {k}: expected holds = {}, got {}",
            k == 1,
            gen.holds
        )));
    }

    Ok(ExampleReport {
        k,
        r0,
        r1,
        r2,
        total: gen.total,
        coset_count: gen.representatives.len(),
        tight: gen.total == r1 * r2,
        join_reduced_rank: gen.join_reduced_rank,
        join_index: gen.join.finite_index(),
        lhs: gen.lhs,
        rhs: gen.rhs,
        generalized_holds: gen.holds,
    })
}
