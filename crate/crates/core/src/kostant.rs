//! The verdict engine: typicality tests and the decision procedures for
//! Kostant's problem on standard and simple Whittaker modules.
//!
//! Verdicts carry the identifier of the classification result they rest on.
//! `Positive`/`Negative` are returned only when a result applies verbatim to
//! the inputs; otherwise the problem is reduced to a named highest-weight or
//! even-part problem, or reported `Unknown`.
//!
//! All decision functions expect λ already W_ζ-anti-dominant (callers
//! canonicalise through [`crate::weyl::antidominant_representative`] first)
//! and fail with [`Error::NotAntidominant`] otherwise.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{build_root_datum, AlgebraSpec, CharacterSupport, RootDatum, Weight};
use crate::search::{find_negativity_witness, NegativityWitness};
use crate::{rat, Rat};

/// Kind of module a [`ProblemRef`] points at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    StandardWhittaker,
    SimpleWhittaker,
    Verma,
    SimpleHighestWeight,
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ModuleKind::StandardWhittaker => "standard Whittaker module",
            ModuleKind::SimpleWhittaker => "simple Whittaker module",
            ModuleKind::Verma => "Verma module",
            ModuleKind::SimpleHighestWeight => "simple highest-weight module",
        };
        f.write_str(s)
    }
}

/// Parameters of the problem a verdict reduces to. The module itself is
/// never constructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemRef {
    pub module_kind: ModuleKind,
    pub over: AlgebraSpec,
    pub lambda: Weight,
    pub zeta: CharacterSupport,
}

/// Identifier of the classification result backing a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Citation {
    /// Standard Whittaker positivity under integrality on the support.
    TheoremA1,
    /// Simple Whittaker positivity equivalent to the highest-weight case,
    /// under integrality on the support.
    TheoremA2,
    /// Verma modules are Kostant positive.
    JosephVerma,
    /// Integral weight, non-singular character: positive.
    Corollary2_6,
    /// The complete rank-one classification.
    Corollary2_13,
    /// Negativity from a finite-dimensional witness outside the root lattice.
    Corollary2_16,
    /// Super simple Whittaker positivity equivalent to the super
    /// highest-weight case, under integrality on the support.
    Theorem3_1_2,
    /// gl(m|n), osp(2|2n): standard positivity equals even-part positivity
    /// plus typicality.
    Theorem3_5,
    /// Super Verma modules: positive iff typical.
    Corollary3_6,
    /// Integral super standard modules: positive iff typical.
    Corollary3_7,
    /// pe(n) standard modules under integrality: positive iff typical.
    Theorem3_12,
    /// Typical integral case: super simple, super highest-weight and
    /// even-part highest-weight answers coincide.
    Corollary3_14,
}

impl Citation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Citation::TheoremA1 => "Theorem A(1)",
            Citation::TheoremA2 => "Theorem A(2)",
            Citation::JosephVerma => "[Jo, Corollary 6.4]",
            Citation::Corollary2_6 => "Corollary 2.6",
            Citation::Corollary2_13 => "Corollary 2.13",
            Citation::Corollary2_16 => "Corollary 2.16",
            Citation::Theorem3_1_2 => "Theorem 3.1(2)",
            Citation::Theorem3_5 => "Theorem 3.5",
            Citation::Corollary3_6 => "Corollary 3.6",
            Citation::Corollary3_7 => "Corollary 3.7",
            Citation::Theorem3_12 => "Theorem 3.12",
            Citation::Corollary3_14 => "Corollary 3.14",
        }
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Decision status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Positive,
    Negative,
    ReducesTo(ProblemRef),
    Unknown,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Positive => "positive",
            Status::Negative => "negative",
            Status::ReducesTo(_) => "reduces_to",
            Status::Unknown => "unknown",
        }
    }
}

/// A cited decision. `citations` is non-empty unless the status is
/// [`Status::Unknown`]; the first entry is the primary result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub citations: Vec<Citation>,
    pub notes: String,
    /// Present when negativity was certified by the Weyl-group search.
    pub witness: Option<NegativityWitness>,
}

impl Verdict {
    fn new(status: Status, citation: Citation) -> Self {
        Verdict { status, citations: alloc::vec![citation], notes: String::new(), witness: None }
    }

    fn unknown(note: &str) -> Self {
        Verdict {
            status: Status::Unknown,
            citations: Vec::new(),
            notes: note.to_string(),
            witness: None,
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(note);
        self
    }

    fn with_extra_citations(mut self, extra: &[Citation]) -> Self {
        for c in extra {
            if !self.citations.contains(c) {
                self.citations.push(*c);
            }
        }
        self
    }

    pub fn primary_citation(&self) -> Option<Citation> {
        self.citations.first().copied()
    }
}

/// Typicality of a weight for a super algebra.
///
/// * gl(m|n), osp(2|2n): `(λ+ρ_super, α) ≠ 0` for every positive odd root α.
/// * pe(n): `(λ+ρ_even, α) ≠ 1` for every even root α, both signs.
pub fn is_typical(d: &RootDatum, lambda: &Weight) -> Result<bool> {
    d.check_dimension(lambda)?;
    match d.spec() {
        AlgebraSpec::SuperGl { .. } | AlgebraSpec::SuperOsp2 { .. } => {
            let shifted = lambda + d.rho_super().expect("rho_super exists for gl/osp");
            for alpha in d.positive_odd_roots() {
                if d.bilinear_form(&shifted, alpha)?.is_zero() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        AlgebraSpec::SuperPe { .. } => {
            let shifted = lambda + d.rho_even();
            let one = rat(1);
            for alpha in d.positive_even_roots() {
                if d.bilinear_form(&shifted, alpha)? == one
                    || d.bilinear_form(&shifted, &-alpha)? == one
                {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Err(Error::ExpectedSuper),
    }
}

/// Weak typicality for pe(n): `(λ+ρ_even, α) ≠ 1` on positive even roots
/// only.
pub fn is_weakly_typical(d: &RootDatum, lambda: &Weight) -> Result<bool> {
    if !matches!(d.spec(), AlgebraSpec::SuperPe { .. }) {
        return Err(Error::ExpectedSuperPe);
    }
    d.check_dimension(lambda)?;
    let shifted = lambda + d.rho_even();
    let one = rat(1);
    for alpha in d.positive_even_roots() {
        if d.bilinear_form(&shifted, alpha)? == one {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The rank-one coordinate `⟨λ, α∨⟩` when the datum has a single simple even
/// root.
fn rank_one_coordinate(d: &RootDatum, lambda: &Weight) -> Result<Option<Rat>> {
    if d.rank() == 1 {
        Ok(Some(d.simple_pairing(lambda, 0)?))
    } else {
        Ok(None)
    }
}

/// Solves `λ = -(k+2)/2` for a positive odd integer k; `Some(k)` is the
/// rank-one negativity certificate.
fn rank_one_negative_k(coordinate: &Rat) -> Option<BigInt> {
    let k = rat(-2) * coordinate - rat(2);
    if !k.is_integer() {
        return None;
    }
    let k = k.to_integer();
    if k.is_positive() && &k % 2 != BigInt::from(0) {
        Some(k)
    } else {
        None
    }
}

fn check_preconditions(
    d: &RootDatum,
    lambda: &Weight,
    zeta: &CharacterSupport,
    want_reductive: bool,
) -> Result<()> {
    if want_reductive && !d.spec().is_reductive() {
        return Err(Error::ExpectedReductive);
    }
    if !want_reductive && !d.spec().is_super() {
        return Err(Error::ExpectedSuper);
    }
    d.check_dimension(lambda)?;
    if !d.is_antidominant(lambda, zeta)? {
        return Err(Error::NotAntidominant);
    }
    Ok(())
}

/// Decision for the standard Whittaker module of a reductive algebra.
pub fn decide_standard_lie(
    d: &RootDatum,
    lambda: &Weight,
    zeta: &CharacterSupport,
) -> Result<Verdict> {
    check_preconditions(d, lambda, zeta, true)?;
    if zeta.is_zero() {
        return Ok(Verdict::new(Status::Positive, Citation::JosephVerma)
            .with_note("zero character: the module is the Verma module"));
    }
    if d.is_integral_on(lambda, zeta)? {
        return Ok(Verdict::new(Status::Positive, Citation::TheoremA1));
    }
    if d.rank() == 1 {
        // Non-singular rank one: the standard module is already simple.
        let coord = rank_one_coordinate(d, lambda)?.expect("rank one");
        let verdict = match rank_one_negative_k(&coord) {
            Some(k) => Verdict::new(Status::Negative, Citation::Corollary2_13)
                .with_note(&alloc::format!("⟨λ, α∨⟩ = -(k+2)/2 with k = {k}")),
            None => Verdict::new(Status::Positive, Citation::Corollary2_13),
        };
        return Ok(verdict.with_note("non-singular rank one: standard equals simple"));
    }
    Ok(Verdict::unknown(
        "non-integral pairings on the support are not covered by the classification",
    ))
}

/// Decision for the simple Whittaker module of a reductive algebra.
///
/// `weyl_bound` caps the group enumeration behind the negativity search; it
/// is only consulted for non-singular characters outside the integral case.
pub fn decide_simple_lie(
    d: &RootDatum,
    lambda: &Weight,
    zeta: &CharacterSupport,
    weyl_bound: u64,
) -> Result<Verdict> {
    check_preconditions(d, lambda, zeta, true)?;
    if zeta.is_zero() {
        if d.rank() == 1 {
            return Ok(Verdict::new(Status::Positive, Citation::Corollary2_13)
                .with_note("simple highest-weight modules in rank one are Kostant positive"));
        }
        let target = ProblemRef {
            module_kind: ModuleKind::SimpleHighestWeight,
            over: d.spec().clone(),
            lambda: lambda.clone(),
            zeta: CharacterSupport::zero(),
        };
        return Ok(Verdict::new(Status::ReducesTo(target), Citation::TheoremA2)
            .with_note("zero character: the module is the simple highest-weight module"));
    }
    if zeta.is_nonsingular(d) && d.is_integral(lambda)? {
        return Ok(Verdict::new(Status::Positive, Citation::Corollary2_6));
    }
    if d.rank() == 1 {
        let coord = rank_one_coordinate(d, lambda)?.expect("rank one");
        return Ok(match rank_one_negative_k(&coord) {
            Some(k) => Verdict::new(Status::Negative, Citation::Corollary2_13)
                .with_note(&alloc::format!("⟨λ, α∨⟩ = -(k+2)/2 with k = {k}")),
            None => Verdict::new(Status::Positive, Citation::Corollary2_13),
        });
    }
    if d.is_integral_on(lambda, zeta)? {
        let target = ProblemRef {
            module_kind: ModuleKind::SimpleHighestWeight,
            over: d.spec().clone(),
            lambda: lambda.clone(),
            zeta: CharacterSupport::zero(),
        };
        return Ok(Verdict::new(Status::ReducesTo(target), Citation::TheoremA2));
    }
    if zeta.is_nonsingular(d) {
        if let Some(witness) = find_negativity_witness(d, lambda, zeta, weyl_bound)? {
            let note = alloc::format!(
                "witness w = {} with finite-dimensional highest weight μ = {} outside the root lattice",
                witness.element,
                witness.mu
            );
            let mut verdict =
                Verdict::new(Status::Negative, Citation::Corollary2_16).with_note(&note);
            verdict.witness = Some(witness);
            return Ok(verdict);
        }
    }
    Ok(Verdict::unknown("no applicable criterion; the witness search found nothing"))
}

/// Citation for the typicality dichotomy of super standard modules, by the
/// strength of the hypothesis satisfied.
fn super_standard_citation(
    d_even: &RootDatum,
    lambda: &Weight,
    zeta: &CharacterSupport,
) -> Result<Citation> {
    if zeta.is_zero() {
        Ok(Citation::Corollary3_6)
    } else if d_even.is_integral(lambda)? {
        Ok(Citation::Corollary3_7)
    } else {
        Ok(Citation::Theorem3_5)
    }
}

/// Decision for the standard Whittaker module of a super algebra.
pub fn decide_standard_super(
    d: &RootDatum,
    lambda: &Weight,
    zeta: &CharacterSupport,
) -> Result<Verdict> {
    check_preconditions(d, lambda, zeta, false)?;
    match d.spec() {
        AlgebraSpec::SuperGl { .. } | AlgebraSpec::SuperOsp2 { .. } => {
            let d_even = build_root_datum(&d.spec().even_part())?;
            let typical = is_typical(d, lambda)?;
            let citation = super_standard_citation(&d_even, lambda, zeta)?;
            if !typical {
                // Typicality is necessary unconditionally, whatever the
                // even-part verdict.
                return Ok(Verdict::new(Status::Negative, citation).with_note("λ is atypical"));
            }
            let even = decide_standard_lie(&d_even, lambda, zeta)?;
            Ok(match even.status {
                Status::Positive => Verdict::new(Status::Positive, citation)
                    .with_extra_citations(&even.citations)
                    .with_note("λ is typical and the even-part standard module is positive"),
                Status::Negative => Verdict::new(Status::Negative, Citation::Theorem3_5)
                    .with_extra_citations(&even.citations)
                    .with_note("the even-part standard module is negative"),
                Status::ReducesTo(_) | Status::Unknown => {
                    let target = ProblemRef {
                        module_kind: ModuleKind::StandardWhittaker,
                        over: d.spec().even_part(),
                        lambda: lambda.clone(),
                        zeta: zeta.clone(),
                    };
                    Verdict::new(Status::ReducesTo(target), Citation::Theorem3_5)
                        .with_note("λ is typical: equivalent to the even-part problem")
                }
            })
        }
        AlgebraSpec::SuperPe { .. } => {
            if !d.is_integral_on(lambda, zeta)? {
                return Ok(Verdict::unknown(
                    "pe(n) standard modules are classified under integral pairings on the support",
                ));
            }
            Ok(if is_typical(d, lambda)? {
                Verdict::new(Status::Positive, Citation::Theorem3_12)
            } else {
                Verdict::new(Status::Negative, Citation::Theorem3_12).with_note("λ is atypical")
            })
        }
        _ => Err(Error::ExpectedSuper),
    }
}

/// Decision for the simple Whittaker module of a super algebra. Outside the
/// integral-on-support case nothing is claimed.
pub fn decide_simple_super(
    d: &RootDatum,
    lambda: &Weight,
    zeta: &CharacterSupport,
) -> Result<Verdict> {
    check_preconditions(d, lambda, zeta, false)?;
    if !d.is_integral_on(lambda, zeta)? {
        return Ok(Verdict::unknown(
            "super simple modules are classified under integral pairings on the support",
        ));
    }
    if is_typical(d, lambda)? {
        let d_even = build_root_datum(&d.spec().even_part())?;
        // The zero-character branch never enumerates, so any bound works.
        let even =
            decide_simple_lie(&d_even, lambda, &CharacterSupport::zero(), crate::weyl::DEFAULT_WEYL_BOUND)?;
        return Ok(match even.status {
            Status::Positive => Verdict::new(Status::Positive, Citation::Corollary3_14)
                .with_extra_citations(&even.citations)
                .with_note("typical: the answer matches the even-part highest-weight module"),
            Status::Negative => Verdict::new(Status::Negative, Citation::Corollary3_14)
                .with_extra_citations(&even.citations),
            Status::ReducesTo(_) | Status::Unknown => {
                let target = ProblemRef {
                    module_kind: ModuleKind::SimpleHighestWeight,
                    over: d.spec().even_part(),
                    lambda: lambda.clone(),
                    zeta: CharacterSupport::zero(),
                };
                Verdict::new(Status::ReducesTo(target), Citation::Corollary3_14)
                    .with_note("typical: the answer matches the even-part highest-weight module")
            }
        });
    }
    let target = ProblemRef {
        module_kind: ModuleKind::SimpleHighestWeight,
        over: d.spec().clone(),
        lambda: lambda.clone(),
        zeta: CharacterSupport::zero(),
    };
    let mut verdict = Verdict::new(Status::ReducesTo(target), Citation::Theorem3_1_2)
        .with_note("atypical: equivalent to the super highest-weight problem");
    if zeta.is_zero() {
        verdict = verdict.with_note("the module is itself a highest-weight module");
    }
    Ok(verdict)
}
