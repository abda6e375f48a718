//! Algebra descriptors, root systems, bilinear forms and weight predicates.
//!
//! A [`RootDatum`] fixes the distinguished positive system of one of the
//! supported algebras together with the invariant bilinear form on the dual
//! Cartan, realised as a per-coordinate signature. Weights are exact rational
//! coordinate vectors in the standard (ε, δ) basis:
//!
//! * products of gl blocks — all coordinates ε, signature `+1`;
//! * sp(2n) — coordinates δ₁..δₙ with `(δᵢ, δⱼ) = -δᵢⱼ`, optionally preceded
//!   by a central ε line with `(ε, ε) = 1`;
//! * gl(m|n) — (ε₁..εₘ, δ₁..δₙ) with signature `(+1ᵐ, -1ⁿ)`;
//! * osp(2|2n) — (ε, δ₁..δₙ);
//! * pe(n) — (ε₁..εₙ), signature `+1`.
//!
//! All types are immutable after construction and safe to share across
//! threads.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rat;

/// Weight: an exact rational coordinate vector in the (ε, δ) basis.
///
/// The derived `Ord` is lexicographic on coordinates; it is the order used to
/// pick canonical orbit representatives.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Weight { coords: vec![Rat::zero(); dim] }
    }

    /// Weight with integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| crate::rat(c)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn scaled(&self, k: &Rat) -> Weight {
        Weight { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    fn assert_same_dim(&self, other: &Weight) {
        assert_eq!(
            self.coords.len(),
            other.coords.len(),
            "weight dimensions differ: {} vs {}",
            self.coords.len(),
            other.coords.len()
        );
    }
}

impl Index<usize> for Weight {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.coords[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, other: &Weight) -> Weight {
        self.assert_same_dim(other);
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, other: &Weight) -> Weight {
        self.assert_same_dim(other);
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

/// Descriptor of a supported algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraSpec {
    /// Product of general linear blocks gl(m₁) ⊕ … ⊕ gl(mᵣ).
    ReductiveTypeA { blocks: Vec<u32> },
    /// sp(2n), optionally with a one-dimensional central ε line prepended.
    ReductiveTypeC { n: u32, central_line: bool },
    /// The general linear Lie superalgebra gl(m|n).
    SuperGl { m: u32, n: u32 },
    /// The orthosymplectic Lie superalgebra osp(2|2n).
    SuperOsp2 { n: u32 },
    /// The periplectic Lie superalgebra pe(n).
    SuperPe { n: u32 },
}

impl AlgebraSpec {
    /// gl(m) as a one-block type A product.
    pub fn gl(m: u32) -> Self {
        AlgebraSpec::ReductiveTypeA { blocks: vec![m] }
    }

    /// Total coordinate dimension of the dual Cartan.
    pub fn dimension(&self) -> usize {
        match self {
            AlgebraSpec::ReductiveTypeA { blocks } => {
                blocks.iter().map(|&m| m as usize).sum()
            }
            AlgebraSpec::ReductiveTypeC { n, central_line } => {
                *n as usize + usize::from(*central_line)
            }
            AlgebraSpec::SuperGl { m, n } => (*m + *n) as usize,
            AlgebraSpec::SuperOsp2 { n } => *n as usize + 1,
            AlgebraSpec::SuperPe { n } => *n as usize,
        }
    }

    pub fn is_super(&self) -> bool {
        matches!(
            self,
            AlgebraSpec::SuperGl { .. } | AlgebraSpec::SuperOsp2 { .. } | AlgebraSpec::SuperPe { .. }
        )
    }

    pub fn is_reductive(&self) -> bool {
        !self.is_super()
    }

    /// The even subalgebra: gl(m)⊕gl(n) for gl(m|n), C⊕sp(2n) for osp(2|2n),
    /// gl(n) for pe(n). Reductive specs are their own even part.
    pub fn even_part(&self) -> AlgebraSpec {
        match self {
            AlgebraSpec::SuperGl { m, n } => AlgebraSpec::ReductiveTypeA { blocks: vec![*m, *n] },
            AlgebraSpec::SuperOsp2 { n } => AlgebraSpec::ReductiveTypeC { n: *n, central_line: true },
            AlgebraSpec::SuperPe { n } => AlgebraSpec::ReductiveTypeA { blocks: vec![*n] },
            reductive => reductive.clone(),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self {
            AlgebraSpec::ReductiveTypeA { blocks } => {
                !blocks.is_empty() && blocks.iter().all(|&m| m > 0)
            }
            AlgebraSpec::ReductiveTypeC { n, .. } => *n > 0,
            AlgebraSpec::SuperGl { m, n } => *m > 0 && *n > 0,
            AlgebraSpec::SuperOsp2 { n } => *n > 0,
            AlgebraSpec::SuperPe { n } => *n > 0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ZeroBlockSize)
        }
    }
}

/// Coordinate block of a datum; controls Weyl-group shape and the root
/// lattice test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordBlock {
    /// Indices `[start, start+len)` carrying a gl(len) factor; the Weyl group
    /// permutes these coordinates without signs.
    TypeA { start: usize, len: usize },
    /// Indices `[start, start+len)` carrying sp(2·len) in the δ basis; the
    /// Weyl group acts by signed permutations.
    TypeC { start: usize, len: usize },
    /// A single central coordinate fixed by the Weyl group.
    Central { index: usize },
}

impl CoordBlock {
    pub fn contains(&self, i: usize) -> bool {
        match *self {
            CoordBlock::TypeA { start, len } | CoordBlock::TypeC { start, len } => {
                i >= start && i < start + len
            }
            CoordBlock::Central { index } => i == index,
        }
    }

    pub fn allows_sign_flip(&self) -> bool {
        matches!(self, CoordBlock::TypeC { .. })
    }
}

/// The subset Π_ζ of the simple even roots on which a character of the
/// positive nilradical is non-zero. Indices are positions in
/// [`RootDatum::simple_even_roots`], kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterSupport {
    indices: Vec<usize>,
}

impl CharacterSupport {
    /// The zero character: empty support.
    pub fn zero() -> Self {
        CharacterSupport { indices: Vec::new() }
    }

    /// The non-singular characters: full support.
    pub fn nonsingular(d: &RootDatum) -> Self {
        CharacterSupport { indices: (0..d.rank()).collect() }
    }

    pub fn new(d: &RootDatum, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = Vec::new();
        for i in indices {
            if i >= d.rank() {
                return Err(Error::BadRootIndex { index: i, count: d.rank() });
            }
            v.push(i);
        }
        v.sort_unstable();
        v.dedup();
        Ok(CharacterSupport { indices: v })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_zero(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_nonsingular(&self, d: &RootDatum) -> bool {
        self.indices.len() == d.rank()
    }
}

/// Root datum: the positive systems, form signature and ρ vectors of an
/// algebra, with the expansion of every positive even root over the simple
/// ones precomputed.
#[derive(Clone, Debug)]
pub struct RootDatum {
    spec: AlgebraSpec,
    blocks: Vec<CoordBlock>,
    simple_even_roots: Vec<Weight>,
    positive_even_roots: Vec<Weight>,
    positive_odd_roots: Vec<Weight>,
    negative_odd_roots: Vec<Weight>,
    form_signature: Vec<i8>,
    rho_even: Weight,
    rho_super: Option<Weight>,
    simple_expansions: Vec<Vec<BigInt>>,
}

fn diff(dim: usize, a: usize, b: usize) -> Weight {
    let mut c = vec![Rat::zero(); dim];
    c[a] = Rat::one();
    c[b] = -Rat::one();
    Weight::new(c)
}

fn sum2(dim: usize, a: usize, b: usize) -> Weight {
    let mut c = vec![Rat::zero(); dim];
    c[a] += Rat::one();
    c[b] += Rat::one();
    Weight::new(c)
}

/// Builds the root datum with the distinguished positive system of the spec.
///
/// Root orderings are deterministic: type A blocks list `εₐ-εᵦ` by `(a, b)`,
/// type C blocks list `δᵢ-δⱼ`, then `δᵢ+δⱼ`, then `2δₚ`; odd roots are listed
/// lexicographically in the same spirit.
pub fn build_root_datum(spec: &AlgebraSpec) -> Result<RootDatum> {
    spec.validate()?;
    let dim = spec.dimension();

    let mut blocks = Vec::new();
    let mut simple = Vec::new();
    let mut positive = Vec::new();
    let mut positive_odd = Vec::new();
    let mut negative_odd = Vec::new();
    let mut signature = vec![1i8; dim];

    let push_type_a = |start: usize, len: usize, simple: &mut Vec<Weight>, positive: &mut Vec<Weight>, blocks: &mut Vec<CoordBlock>| {
        blocks.push(CoordBlock::TypeA { start, len });
        for a in start..start + len - 1 {
            simple.push(diff(dim, a, a + 1));
        }
        for a in start..start + len {
            for b in a + 1..start + len {
                positive.push(diff(dim, a, b));
            }
        }
    };
    let push_type_c = |start: usize, len: usize, simple: &mut Vec<Weight>, positive: &mut Vec<Weight>, blocks: &mut Vec<CoordBlock>, signature: &mut [i8]| {
        blocks.push(CoordBlock::TypeC { start, len });
        for s in &mut signature[start..start + len] {
            *s = -1;
        }
        for i in start..start + len - 1 {
            simple.push(diff(dim, i, i + 1));
        }
        simple.push(sum2(dim, start + len - 1, start + len - 1));
        for i in start..start + len {
            for j in i + 1..start + len {
                positive.push(diff(dim, i, j));
            }
        }
        for i in start..start + len {
            for j in i + 1..start + len {
                positive.push(sum2(dim, i, j));
            }
        }
        for p in start..start + len {
            positive.push(sum2(dim, p, p));
        }
    };

    match spec {
        AlgebraSpec::ReductiveTypeA { blocks: sizes } => {
            let mut start = 0usize;
            for &m in sizes {
                push_type_a(start, m as usize, &mut simple, &mut positive, &mut blocks);
                start += m as usize;
            }
        }
        AlgebraSpec::ReductiveTypeC { n, central_line } => {
            let start = usize::from(*central_line);
            if *central_line {
                blocks.push(CoordBlock::Central { index: 0 });
            }
            push_type_c(start, *n as usize, &mut simple, &mut positive, &mut blocks, &mut signature);
        }
        AlgebraSpec::SuperGl { m, n } => {
            let (m, n) = (*m as usize, *n as usize);
            push_type_a(0, m, &mut simple, &mut positive, &mut blocks);
            push_type_a(m, n, &mut simple, &mut positive, &mut blocks);
            for s in &mut signature[m..m + n] {
                *s = -1;
            }
            for a in 0..m {
                for b in m..m + n {
                    positive_odd.push(diff(dim, a, b));
                }
            }
            negative_odd = positive_odd.iter().map(|r| -r).collect();
        }
        AlgebraSpec::SuperOsp2 { n } => {
            blocks.push(CoordBlock::Central { index: 0 });
            push_type_c(1, *n as usize, &mut simple, &mut positive, &mut blocks, &mut signature);
            for p in 1..=*n as usize {
                positive_odd.push(sum2(dim, 0, p));
                positive_odd.push(diff(dim, 0, p));
            }
            negative_odd = positive_odd.iter().map(|r| -r).collect();
        }
        AlgebraSpec::SuperPe { n } => {
            let n = *n as usize;
            push_type_a(0, n, &mut simple, &mut positive, &mut blocks);
            // Φ₁⁺ = {εᵢ+εⱼ, i ≤ j} and Φ₁⁻ = {-εᵢ-εⱼ, i < j}; the two sets
            // are not negatives of each other.
            for i in 0..n {
                for j in i..n {
                    positive_odd.push(sum2(dim, i, j));
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    negative_odd.push(-&sum2(dim, i, j));
                }
            }
        }
    }

    let half = crate::frac(1, 2);
    let mut rho_even = Weight::zero(dim);
    for r in &positive {
        rho_even = &rho_even + r;
    }
    rho_even = rho_even.scaled(&half);

    let rho_super = match spec {
        AlgebraSpec::SuperGl { .. } | AlgebraSpec::SuperOsp2 { .. } => {
            let mut rho_odd = Weight::zero(dim);
            for r in &positive_odd {
                rho_odd = &rho_odd + r;
            }
            Some(&rho_even - &rho_odd.scaled(&half))
        }
        _ => None,
    };

    let simple_expansions = positive
        .iter()
        .map(|r| {
            solve_integer_combination(&simple, r)
                .expect("positive even roots expand integrally over the simple roots")
        })
        .collect();

    Ok(RootDatum {
        spec: spec.clone(),
        blocks,
        simple_even_roots: simple,
        positive_even_roots: positive,
        positive_odd_roots: positive_odd,
        negative_odd_roots: negative_odd,
        form_signature: signature,
        rho_even,
        rho_super,
        simple_expansions,
    })
}

/// Solves `target = Σ cᵢ · basis[i]` exactly; returns the coefficients when a
/// solution exists and all of them are integers.
fn solve_integer_combination(basis: &[Weight], target: &Weight) -> Option<Vec<BigInt>> {
    let dim = target.dim();
    let cols = basis.len();
    // Augmented matrix [basis | target], one row per coordinate.
    let mut m: Vec<Vec<Rat>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();

    let mut pivot_rows: Vec<Option<usize>> = vec![None; cols];
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..dim).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for x in &mut m[row] {
            *x = &*x / &inv;
        }
        for r in 0..dim {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let sub = &m[row][c] * &factor;
                    m[r][c] -= sub;
                }
            }
        }
        pivot_rows[col] = Some(row);
        row += 1;
        if row == dim {
            break;
        }
    }
    // Rows below the pivots must have vanished for the system to be solvable.
    if (row..dim).any(|r| !m[r][cols].is_zero()) {
        return None;
    }
    let mut coeffs = Vec::with_capacity(cols);
    for pivot in &pivot_rows {
        let c = match pivot {
            Some(r) => m[*r][cols].clone(),
            None => Rat::zero(),
        };
        if !c.is_integer() {
            return None;
        }
        coeffs.push(c.to_integer());
    }
    Some(coeffs)
}

impl RootDatum {
    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn dimension(&self) -> usize {
        self.form_signature.len()
    }

    /// Number of simple even roots.
    pub fn rank(&self) -> usize {
        self.simple_even_roots.len()
    }

    pub fn simple_even_roots(&self) -> &[Weight] {
        &self.simple_even_roots
    }

    pub fn positive_even_roots(&self) -> &[Weight] {
        &self.positive_even_roots
    }

    pub fn positive_odd_roots(&self) -> &[Weight] {
        &self.positive_odd_roots
    }

    pub fn negative_odd_roots(&self) -> &[Weight] {
        &self.negative_odd_roots
    }

    pub fn form_signature(&self) -> &[i8] {
        &self.form_signature
    }

    /// Half sum of the positive even roots, exactly.
    pub fn rho_even(&self) -> &Weight {
        &self.rho_even
    }

    /// ρ_even minus half the sum of the positive odd roots; defined for
    /// gl(m|n) and osp(2|2n).
    pub fn rho_super(&self) -> Option<&Weight> {
        self.rho_super.as_ref()
    }

    pub fn blocks(&self) -> &[CoordBlock] {
        &self.blocks
    }

    pub fn check_dimension(&self, w: &Weight) -> Result<()> {
        if w.dim() == self.dimension() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dimension(), found: w.dim() })
        }
    }

    /// The invariant symmetric bilinear form: `Σᵢ signᵢ · μᵢ · νᵢ`.
    pub fn bilinear_form(&self, mu: &Weight, nu: &Weight) -> Result<Rat> {
        self.check_dimension(mu)?;
        self.check_dimension(nu)?;
        let mut acc = Rat::zero();
        for (i, s) in self.form_signature.iter().enumerate() {
            let term = &mu[i] * &nu[i];
            if *s < 0 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        Ok(acc)
    }

    /// `⟨λ, α∨⟩ = 2(λ, α)/(α, α)` for an even root α of the datum.
    pub fn coroot_pairing(&self, lambda: &Weight, alpha: &Weight) -> Result<Rat> {
        self.check_dimension(lambda)?;
        self.check_dimension(alpha)?;
        let is_even_root = self
            .positive_even_roots
            .iter()
            .any(|r| r == alpha || &-r == alpha);
        if !is_even_root {
            return Err(Error::NotAnEvenRoot);
        }
        let num = self.bilinear_form(lambda, alpha)?;
        let den = self.bilinear_form(alpha, alpha)?;
        // (α, α) ≠ 0 for every even root, by construction.
        Ok(crate::rat(2) * num / den)
    }

    /// `⟨λ, αᵢ∨⟩` for the i-th simple even root.
    pub fn simple_pairing(&self, lambda: &Weight, index: usize) -> Result<Rat> {
        let alpha = self
            .simple_even_roots
            .get(index)
            .ok_or(Error::BadRootIndex { index, count: self.rank() })?;
        self.coroot_pairing(lambda, alpha)
    }

    /// True iff `⟨λ, α∨⟩ ∈ Z` for every simple root indexed by the support.
    pub fn is_integral_on(&self, lambda: &Weight, support: &CharacterSupport) -> Result<bool> {
        for &i in support.indices() {
            if !self.simple_pairing(lambda, i)?.is_integer() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff λ is integral on the full simple system.
    pub fn is_integral(&self, lambda: &Weight) -> Result<bool> {
        self.check_dimension(lambda)?;
        for i in 0..self.rank() {
            if !self.simple_pairing(lambda, i)?.is_integer() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The positive even roots lying in the Z-span of the supported simple
    /// roots: the positive system of the Levi subalgebra l_ζ.
    pub fn levi_positive_roots(&self, support: &CharacterSupport) -> Vec<Weight> {
        self.levi_positive_indices(support)
            .map(|i| self.positive_even_roots[i].clone())
            .collect()
    }

    fn levi_positive_indices<'a>(
        &'a self,
        support: &'a CharacterSupport,
    ) -> impl Iterator<Item = usize> + 'a {
        self.simple_expansions.iter().enumerate().filter_map(move |(i, exp)| {
            let inside = exp
                .iter()
                .enumerate()
                .all(|(j, c)| c.is_zero() || support.contains(j));
            inside.then_some(i)
        })
    }

    /// W_ζ-anti-dominance: `⟨λ+ρ, α∨⟩ ∉ Z_{>0}` for every positive root α of
    /// the Levi of the support. Full anti-dominance is the full support.
    pub fn is_antidominant(&self, lambda: &Weight, support: &CharacterSupport) -> Result<bool> {
        self.check_dimension(lambda)?;
        let shifted = lambda + &self.rho_even;
        for i in self.levi_positive_indices(support) {
            let p = self.coroot_pairing(&shifted, &self.positive_even_roots[i])?;
            if p.is_integer() && p.is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff `⟨μ, α∨⟩ ∈ Z_{≥0}` for every simple even root: μ is the
    /// highest weight of a finite-dimensional module of the even part.
    pub fn is_dominant_integral(&self, mu: &Weight) -> Result<bool> {
        self.check_dimension(mu)?;
        for i in 0..self.rank() {
            let p = self.simple_pairing(mu, i)?;
            if !p.is_integer() || p.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership in the Z-span of the even roots, block by block: a type A
    /// block needs integer coordinates summing to zero, a type C block needs
    /// integer coordinates with even sum, a central coordinate must vanish.
    pub fn in_root_lattice(&self, mu: &Weight) -> Result<bool> {
        self.check_dimension(mu)?;
        for block in &self.blocks {
            match *block {
                CoordBlock::TypeA { start, len } => {
                    let mut total = Rat::zero();
                    for i in start..start + len {
                        if !mu[i].is_integer() {
                            return Ok(false);
                        }
                        total += &mu[i];
                    }
                    if !total.is_zero() {
                        return Ok(false);
                    }
                }
                CoordBlock::TypeC { start, len } => {
                    let mut total = BigInt::zero();
                    for i in start..start + len {
                        if !mu[i].is_integer() {
                            return Ok(false);
                        }
                        total += mu[i].to_integer();
                    }
                    if total % 2 != BigInt::zero() {
                        return Ok(false);
                    }
                }
                CoordBlock::Central { index } => {
                    if !mu[index].is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, rat};

    fn gl(n: u32) -> RootDatum {
        build_root_datum(&AlgebraSpec::gl(n)).unwrap()
    }

    #[test]
    fn rejects_zero_sizes() {
        assert_eq!(
            build_root_datum(&AlgebraSpec::ReductiveTypeA { blocks: vec![2, 0] }).unwrap_err(),
            Error::ZeroBlockSize
        );
        assert_eq!(
            build_root_datum(&AlgebraSpec::SuperGl { m: 0, n: 1 }).unwrap_err(),
            Error::ZeroBlockSize
        );
    }

    #[test]
    fn gl2_simple_system_and_rho() {
        let d = gl(2);
        assert_eq!(d.simple_even_roots(), &[Weight::from_ints(&[1, -1])]);
        assert_eq!(d.rho_even(), &Weight::new(vec![frac(1, 2), frac(-1, 2)]));
    }

    #[test]
    fn pe2_odd_roots() {
        let d = build_root_datum(&AlgebraSpec::SuperPe { n: 2 }).unwrap();
        assert_eq!(
            d.positive_odd_roots(),
            &[
                Weight::from_ints(&[2, 0]),
                Weight::from_ints(&[1, 1]),
                Weight::from_ints(&[0, 2]),
            ]
        );
        assert_eq!(d.negative_odd_roots(), &[Weight::from_ints(&[-1, -1])]);
    }

    #[test]
    fn pe_odd_root_count_gap_is_n() {
        for n in 1..=5u32 {
            let d = build_root_datum(&AlgebraSpec::SuperPe { n }).unwrap();
            assert_eq!(
                d.positive_odd_roots().len() - d.negative_odd_roots().len(),
                n as usize
            );
        }
    }

    #[test]
    fn gl11_rho_super() {
        let d = build_root_datum(&AlgebraSpec::SuperGl { m: 1, n: 1 }).unwrap();
        // ρ_even = 0 and the half sum of odd roots is (ε₁-δ₁)/2.
        assert!(d.rho_even().is_zero());
        assert_eq!(d.rho_super().unwrap(), &Weight::new(vec![frac(-1, 2), frac(1, 2)]));
    }

    #[test]
    fn rho_even_recomputed_by_direct_summation() {
        let specs = [
            AlgebraSpec::gl(4),
            AlgebraSpec::ReductiveTypeA { blocks: vec![2, 3] },
            AlgebraSpec::ReductiveTypeC { n: 3, central_line: false },
            AlgebraSpec::SuperGl { m: 2, n: 2 },
            AlgebraSpec::SuperOsp2 { n: 2 },
            AlgebraSpec::SuperPe { n: 3 },
        ];
        for spec in &specs {
            let d = build_root_datum(spec).unwrap();
            let mut sum = Weight::zero(d.dimension());
            for r in d.positive_even_roots() {
                sum = &sum + r;
            }
            assert_eq!(&sum, &d.rho_even().scaled(&rat(2)), "spec {spec:?}");
        }
    }

    #[test]
    fn bilinear_form_examples() {
        let d = build_root_datum(&AlgebraSpec::SuperGl { m: 1, n: 1 }).unwrap();
        let odd = Weight::from_ints(&[1, -1]);
        assert_eq!(d.bilinear_form(&odd, &odd).unwrap(), rat(0));

        let zero = Weight::zero(2);
        assert_eq!(d.bilinear_form(&zero, &odd).unwrap(), rat(0));

        let osp = build_root_datum(&AlgebraSpec::SuperOsp2 { n: 1 }).unwrap();
        let a = Weight::from_ints(&[1, 1]);
        let b = Weight::from_ints(&[1, -1]);
        assert_eq!(osp.bilinear_form(&a, &b).unwrap(), rat(2));

        assert_eq!(
            osp.bilinear_form(&a, &Weight::zero(3)).unwrap_err(),
            Error::DimensionMismatch { expected: 2, found: 3 }
        );
    }

    #[test]
    fn coroot_pairing_examples() {
        let d = gl(3);
        let lam_rho = Weight::new(vec![rat(0), frac(1, 3), frac(2, 3)]);
        let alpha = Weight::from_ints(&[1, -1, 0]);
        assert_eq!(d.coroot_pairing(&lam_rho, &alpha).unwrap(), frac(-1, 3));

        let sp4 = build_root_datum(&AlgebraSpec::ReductiveTypeC { n: 2, central_line: false }).unwrap();
        let delta1 = Weight::from_ints(&[1, 0]);
        let long = Weight::from_ints(&[2, 0]);
        assert_eq!(sp4.coroot_pairing(&delta1, &long).unwrap(), rat(1));
    }

    #[test]
    fn rho_pairing_is_one_on_every_simple_root() {
        let specs = [
            AlgebraSpec::gl(5),
            AlgebraSpec::ReductiveTypeA { blocks: vec![2, 1, 3] },
            AlgebraSpec::ReductiveTypeC { n: 3, central_line: true },
            AlgebraSpec::SuperGl { m: 2, n: 3 },
            AlgebraSpec::SuperOsp2 { n: 3 },
            AlgebraSpec::SuperPe { n: 4 },
        ];
        for spec in &specs {
            let d = build_root_datum(spec).unwrap();
            for i in 0..d.rank() {
                assert_eq!(d.simple_pairing(d.rho_even(), i).unwrap(), rat(1), "spec {spec:?}, root {i}");
            }
        }
    }

    #[test]
    fn coroot_pairing_rejects_non_roots() {
        let d = build_root_datum(&AlgebraSpec::SuperGl { m: 1, n: 1 }).unwrap();
        // The isotropic odd root is not an even root.
        let odd = Weight::from_ints(&[1, -1]);
        assert_eq!(d.coroot_pairing(&odd, &odd).unwrap_err(), Error::NotAnEvenRoot);
    }

    #[test]
    fn integrality_on_supports() {
        let d = gl(2);
        let zero = CharacterSupport::zero();
        let full = CharacterSupport::nonsingular(&d);
        let lam = Weight::new(vec![frac(-3, 4), frac(3, 4)]); // ⟨λ, α∨⟩ = -3/2
        assert!(d.is_integral_on(&lam, &zero).unwrap());
        assert!(!d.is_integral_on(&lam, &full).unwrap());

        let d3 = gl(3);
        let lam3 = Weight::from_ints(&[0, -1, -2]);
        assert!(d3.is_integral_on(&lam3, &CharacterSupport::nonsingular(&d3)).unwrap());
    }

    #[test]
    fn levi_positive_roots_by_support() {
        let d = gl(3);
        assert!(d.levi_positive_roots(&CharacterSupport::zero()).is_empty());
        assert_eq!(d.levi_positive_roots(&CharacterSupport::nonsingular(&d)).len(), 3);
        let s = CharacterSupport::new(&d, [0]).unwrap();
        assert_eq!(d.levi_positive_roots(&s), vec![Weight::from_ints(&[1, -1, 0])]);
    }

    #[test]
    fn antidominance_examples() {
        let d3 = gl(3);
        let full3 = CharacterSupport::nonsingular(&d3);
        // λ+ρ = (0, 1/3, 2/3): every simple pairing is -1/3.
        let lam = &Weight::new(vec![rat(0), frac(1, 3), frac(2, 3)]) - d3.rho_even();
        assert!(d3.is_antidominant(&lam, &full3).unwrap());

        let minus_rho = -d3.rho_even();
        assert!(d3.is_antidominant(&minus_rho, &full3).unwrap());

        let d2 = gl(2);
        let full2 = CharacterSupport::nonsingular(&d2);
        assert!(!d2.is_antidominant(&Weight::zero(2), &full2).unwrap());
        assert!(d2.is_antidominant(&Weight::zero(2), &CharacterSupport::zero()).unwrap());
    }

    #[test]
    fn dominant_integral_examples() {
        let d3 = gl(3);
        assert!(d3.is_dominant_integral(&Weight::zero(3)).unwrap());
        let mu = Weight::new(vec![frac(2, 3), frac(-1, 3), frac(-1, 3)]);
        assert!(d3.is_dominant_integral(&mu).unwrap());
        let d2 = gl(2);
        assert!(!d2.is_dominant_integral(&Weight::from_ints(&[0, 1])).unwrap());
    }

    #[test]
    fn root_lattice_examples() {
        let d3 = gl(3);
        for r in d3.positive_even_roots() {
            assert!(d3.in_root_lattice(r).unwrap());
        }
        // (n-1)/n ε₁ - 1/n Σ_{k≥2} ε_k has non-integer coordinates.
        let mu = Weight::new(vec![frac(2, 3), frac(-1, 3), frac(-1, 3)]);
        assert!(!d3.in_root_lattice(&mu).unwrap());

        let d2 = gl(2);
        assert!(d2.in_root_lattice(&Weight::from_ints(&[1, -1])).unwrap());
        // Integer coordinates with non-zero block sum.
        assert!(!d2.in_root_lattice(&Weight::from_ints(&[1, 0])).unwrap());

        let sp4 = build_root_datum(&AlgebraSpec::ReductiveTypeC { n: 2, central_line: false }).unwrap();
        assert!(sp4.in_root_lattice(&Weight::from_ints(&[1, 1])).unwrap());
        assert!(!sp4.in_root_lattice(&Weight::from_ints(&[1, 0])).unwrap());

        let osp = build_root_datum(&AlgebraSpec::SuperOsp2 { n: 2 }).unwrap();
        assert!(!osp.in_root_lattice(&Weight::from_ints(&[1, 1, 1])).unwrap());
        assert!(osp.in_root_lattice(&Weight::from_ints(&[0, 1, 1])).unwrap());
    }

    #[test]
    fn even_part_specs() {
        assert_eq!(
            AlgebraSpec::SuperGl { m: 2, n: 1 }.even_part(),
            AlgebraSpec::ReductiveTypeA { blocks: vec![2, 1] }
        );
        assert_eq!(
            AlgebraSpec::SuperOsp2 { n: 2 }.even_part(),
            AlgebraSpec::ReductiveTypeC { n: 2, central_line: true }
        );
        assert_eq!(AlgebraSpec::SuperPe { n: 3 }.even_part(), AlgebraSpec::gl(3));
    }

    #[test]
    fn character_support_bounds() {
        let d = gl(3);
        assert!(CharacterSupport::new(&d, [0, 1]).is_ok());
        assert_eq!(
            CharacterSupport::new(&d, [2]).unwrap_err(),
            Error::BadRootIndex { index: 2, count: 2 }
        );
        assert!(CharacterSupport::zero().is_zero());
        assert!(CharacterSupport::nonsingular(&d).is_nonsingular(&d));
    }
}
