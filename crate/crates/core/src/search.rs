//! Constructive certificates: the Weyl-group negativity search, the gl(n)
//! family of negative examples, and the rank-one translation/linkage oracle.
//!
//! The negativity search scans the full Weyl group in breadth-first order for
//! an element `w` such that `μ = w·λ - λ` is dominant integral (so the simple
//! module of highest weight μ is finite-dimensional) while μ lies outside the
//! root lattice. Such a pair certifies that the non-singular simple Whittaker
//! module of parameter λ is Kostant negative; absence of a witness decides
//! nothing.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rootdata::{build_root_datum, AlgebraSpec, CharacterSupport, RootDatum, Weight};
use crate::weyl::{dot_apply, enumerate_group, WeylElement};
use crate::{rat, Rat};

/// Default scan bound for [`sl2_blocks_oracle`]. The linkage equation
/// `λ + m = s·λ` has at most one solution, so any bound at least `-(2λ+2)`
/// suffices; 64 covers every half-integer down to -33.
pub const SL2_DEFAULT_SEARCH_BOUND: u64 = 64;

/// A certified negativity witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativityWitness {
    /// The group element, in the breadth-first enumeration order.
    pub element: WeylElement,
    /// `dot_apply(element, λ) - λ`, exactly.
    pub mu: Weight,
    /// μ passed the dominant-integral check.
    pub dominant_integral: bool,
    /// μ passed the outside-the-root-lattice check.
    pub outside_root_lattice: bool,
}

fn witness_at(d: &RootDatum, lambda: &Weight, w: WeylElement) -> Result<Option<NegativityWitness>> {
    let mu = &dot_apply(d, &w, lambda)? - lambda;
    let dominant_integral = d.is_dominant_integral(&mu)?;
    if !dominant_integral {
        return Ok(None);
    }
    let outside = !d.in_root_lattice(&mu)?;
    if !outside {
        return Ok(None);
    }
    Ok(Some(NegativityWitness {
        element: w,
        mu,
        dominant_integral,
        outside_root_lattice: outside,
    }))
}

/// First witness in enumeration order, or `None`. Requires a non-singular
/// support and an anti-dominant λ; the two precondition failures are reported
/// distinctly.
pub fn find_negativity_witness(
    d: &RootDatum,
    lambda: &Weight,
    support: &CharacterSupport,
    bound: u64,
) -> Result<Option<NegativityWitness>> {
    if !support.is_nonsingular(d) {
        return Err(Error::SingularSupport);
    }
    if !d.is_antidominant(lambda, support)? {
        return Err(Error::NotAntidominant);
    }
    for w in enumerate_group(d, support, bound)? {
        if let Some(witness) = witness_at(d, lambda, w)? {
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// All witnesses over the full group, in enumeration order.
pub fn all_negativity_witnesses(
    d: &RootDatum,
    lambda: &Weight,
    support: &CharacterSupport,
    bound: u64,
) -> Result<Vec<NegativityWitness>> {
    if !support.is_nonsingular(d) {
        return Err(Error::SingularSupport);
    }
    if !d.is_antidominant(lambda, support)? {
        return Err(Error::NotAntidominant);
    }
    let mut out = Vec::new();
    for w in enumerate_group(d, support, bound)? {
        if let Some(witness) = witness_at(d, lambda, w)? {
            out.push(witness);
        }
    }
    Ok(out)
}

/// The anti-dominant weight over gl(n) with `λ + ρ = Σ (k-1)/n ε_k`, so that
/// `⟨λ+ρ, α∨⟩ = -1/n` on every simple root. Its non-singular simple Whittaker
/// module is Kostant negative, witnessed by the n-cycle.
pub fn negative_family_lambda(n: u32) -> Result<Weight> {
    if n < 2 {
        return Err(Error::FamilyTooSmall { n });
    }
    let d = build_root_datum(&AlgebraSpec::gl(n))?;
    let shifted = Weight::new(
        (0..n as usize).map(|k| Rat::new(BigInt::from(k), BigInt::from(n))).collect(),
    );
    Ok(&shifted - d.rho_even())
}

/// Composition-factor coordinates of the tensor product of the n-th
/// finite-dimensional simple with a non-integral simple highest weight
/// module: the progression `λ+n, λ+n-2, …, λ-n`.
pub fn sl2_tensor_factors(lambda: &Rat, n: u64) -> Result<Vec<Rat>> {
    if lambda.is_integer() {
        return Err(Error::IntegralCoordinate);
    }
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut value = lambda + rat(n as i64);
    for _ in 0..=n {
        out.push(value.clone());
        value -= rat(2);
    }
    Ok(out)
}

/// Outcome of the rank-one translation scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sl2BlockVerdict {
    /// Translation by `m` lands on `s·λ`, in a different block of the same
    /// central character: the module is Kostant negative.
    Negative { m: u64 },
    /// No translation within the bound links λ to its reflection.
    Positive,
}

/// Translation/linkage oracle for rank one, independent of the closed-form
/// classification: scans `m = 1..=search_bound` for `λ + m = s·λ = -λ - 2`
/// with `m` odd (an even shift stays in the coset `λ + ZΦ`, so the translated
/// simple cannot leave the block). Non-integral coordinates are
/// anti-dominant automatically (`λ + 1 ∉ Z`); integral ones belong to a
/// different branch of the theory and are rejected.
pub fn sl2_blocks_oracle(lambda: &Rat, search_bound: u64) -> Result<Sl2BlockVerdict> {
    if lambda.is_integer() {
        return Err(Error::IntegralCoordinate);
    }
    let reflected = -lambda - rat(2);
    for m in 1..=search_bound {
        if m % 2 == 0 {
            continue;
        }
        if lambda + rat(m as i64) == reflected {
            return Ok(Sl2BlockVerdict::Negative { m });
        }
    }
    Ok(Sl2BlockVerdict::Positive)
}
