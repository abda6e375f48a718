//! Weyl group elements as signed permutations, the dot-action, parabolic
//! subgroups and canonical orbit representatives.
//!
//! An element acts on basis vectors by `w(eᵢ) = signs[i] · e_{perm[i]}`.
//! Signs stay `+1` on type A coordinates and on central lines; `-1` occurs
//! only on type C (δ) coordinates. Group enumeration is a breadth-first
//! closure over the generating simple reflections, so the element order is
//! deterministic: by word length, then by the discovery order of the parent,
//! then by generator index.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{CharacterSupport, RootDatum, Weight};
use crate::Rat;

/// Default refusal bound for group enumeration: 10!.
pub const DEFAULT_WEYL_BOUND: u64 = 3_628_800;

/// A signed permutation of the weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement { perm: (0..dim).collect(), signs: alloc::vec![1; dim] }
    }

    pub fn dimension(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p == i) && self.signs.iter().all(|&s| s == 1)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.dimension(), other.dimension(), "element dimensions differ");
        let mut perm = Vec::with_capacity(self.perm.len());
        let mut signs = Vec::with_capacity(self.perm.len());
        for i in 0..self.perm.len() {
            perm.push(self.perm[other.perm[i]]);
            signs.push(other.signs[i] * self.signs[other.perm[i]]);
        }
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.perm.len();
        let mut perm = alloc::vec![0usize; n];
        let mut signs = alloc::vec![1i8; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement { perm, signs }
    }

    /// The standard linear action on a weight.
    pub fn apply(&self, lambda: &Weight) -> Result<Weight> {
        if lambda.dim() != self.dimension() {
            return Err(Error::DimensionMismatch { expected: self.dimension(), found: lambda.dim() });
        }
        let mut coords = alloc::vec![Rat::zero(); lambda.dim()];
        for i in 0..self.perm.len() {
            let c = lambda[i].clone();
            coords[self.perm[i]] = if self.signs[i] < 0 { -c } else { c };
        }
        Ok(Weight::new(coords))
    }
}

/// One-line cycle/sign notation: cycles are 1-based, `σ{..}` lists the
/// coordinates whose sign is flipped, `e` is the identity.
impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.perm.len();
        let mut wrote = false;
        let mut seen = alloc::vec![false; n];
        for start in 0..n {
            if seen[start] || self.perm[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.perm[i];
            }
            write!(f, ")")?;
            wrote = true;
        }
        let flips: Vec<usize> = (0..n).filter(|&i| self.signs[i] < 0).collect();
        if !flips.is_empty() {
            if wrote {
                write!(f, "·")?;
            }
            write!(f, "σ{{")?;
            for (k, i) in flips.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", i + 1)?;
            }
            write!(f, "}}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

/// The simple reflection `s_α: μ ↦ μ - ⟨μ, α∨⟩α` for the indexed simple even
/// root, realised as a signed permutation by evaluating it on basis vectors.
pub fn simple_reflection(d: &RootDatum, index: usize) -> Result<WeylElement> {
    let alpha = d
        .simple_even_roots()
        .get(index)
        .ok_or(Error::BadRootIndex { index, count: d.rank() })?;
    let dim = d.dimension();
    let mut perm = alloc::vec![0usize; dim];
    let mut signs = alloc::vec![1i8; dim];
    for i in 0..dim {
        let mut coords = alloc::vec![Rat::zero(); dim];
        coords[i] = Rat::one();
        let basis = Weight::new(coords);
        let pairing = d.coroot_pairing(&basis, alpha)?;
        let image = &basis - &alpha.scaled(&pairing);
        // The image of a basis vector under s_α is ±e_j for our root shapes.
        let mut found = None;
        for (j, c) in image.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() || (!c.is_one() && !(-c).is_one()) {
                return Err(Error::NotAnEvenRoot);
            }
            found = Some((j, if c.is_negative() { -1i8 } else { 1i8 }));
        }
        let (j, s) = found.ok_or(Error::NotAnEvenRoot)?;
        perm[i] = j;
        signs[i] = s;
    }
    Ok(WeylElement { perm, signs })
}

/// The dot-action `w·λ = w(λ+ρ) - ρ` with ρ the half sum of the positive
/// even roots.
pub fn dot_apply(d: &RootDatum, w: &WeylElement, lambda: &Weight) -> Result<Weight> {
    d.check_dimension(lambda)?;
    let shifted = lambda + d.rho_even();
    Ok(&w.apply(&shifted)? - d.rho_even())
}

/// Order of the parabolic subgroup generated by the supported simple
/// reflections, from the component structure of the support: a chain of k
/// equal-length roots gives (k+1)!, a component containing a long root gives
/// 2ᵏ·k!.
pub fn parabolic_order(d: &RootDatum, support: &CharacterSupport) -> Result<u128> {
    let idx = support.indices();
    let k = idx.len();
    let mut adjacency = alloc::vec![Vec::new(); k];
    for a in 0..k {
        for b in a + 1..k {
            let form = d.bilinear_form(
                &d.simple_even_roots()[idx[a]],
                &d.simple_even_roots()[idx[b]],
            )?;
            if !form.is_zero() {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
    }
    let mut order: u128 = 1;
    let mut seen = alloc::vec![false; k];
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = alloc::vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let has_long = comp.iter().any(|&a| {
            let alpha = &d.simple_even_roots()[idx[a]];
            let norm = d.bilinear_form(alpha, alpha).expect("dimension checked");
            norm == crate::rat(4) || norm == crate::rat(-4)
        });
        let size = comp.len() as u128;
        let factorial = |m: u128| (1..=m).product::<u128>();
        order *= if has_long { (1u128 << size) * factorial(size) } else { factorial(size + 1) };
    }
    Ok(order)
}

/// Breadth-first enumeration of the parabolic subgroup generated by the
/// supported simple reflections. Yields each element exactly once, identity
/// first, in a deterministic order.
#[derive(Debug)]
pub struct WeylGroupIter {
    queue: VecDeque<WeylElement>,
    seen: BTreeSet<WeylElement>,
    generators: Vec<WeylElement>,
}

impl Iterator for WeylGroupIter {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        let w = self.queue.pop_front()?;
        for g in &self.generators {
            let child = w.compose(g);
            if self.seen.insert(child.clone()) {
                self.queue.push_back(child);
            }
        }
        Some(w)
    }
}

/// Iterator over the parabolic subgroup W_S. Refuses upfront when the group
/// order exceeds `bound`, reporting the required order.
pub fn enumerate_group(
    d: &RootDatum,
    support: &CharacterSupport,
    bound: u64,
) -> Result<WeylGroupIter> {
    let required = parabolic_order(d, support)?;
    if required > u128::from(bound) {
        return Err(Error::EnumerationBound { required, bound });
    }
    let generators = support
        .indices()
        .iter()
        .map(|&i| simple_reflection(d, i))
        .collect::<Result<Vec<_>>>()?;
    let identity = WeylElement::identity(d.dimension());
    let mut seen = BTreeSet::new();
    seen.insert(identity.clone());
    let mut queue = VecDeque::new();
    queue.push_back(identity);
    Ok(WeylGroupIter { queue, seen, generators })
}

/// Canonical representative of a dot-orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitResult {
    /// The W_S-anti-dominant representative; among several anti-dominant
    /// orbit elements (possible for non-integral orbits), the
    /// lexicographically smallest coordinate vector.
    pub representative: Weight,
    /// The first enumerated element with `dot_apply(witness, input) =
    /// representative`.
    pub witness: WeylElement,
    /// Number of distinct elements of the dot-orbit.
    pub orbit_size: u64,
}

/// Finds the canonical W_S-anti-dominant representative of the dot-orbit of
/// λ, together with a witness element and the orbit size.
pub fn antidominant_representative(
    d: &RootDatum,
    lambda: &Weight,
    support: &CharacterSupport,
    bound: u64,
) -> Result<OrbitResult> {
    d.check_dimension(lambda)?;
    let mut images = BTreeSet::new();
    let mut best: Option<(Weight, WeylElement)> = None;
    for w in enumerate_group(d, support, bound)? {
        let image = dot_apply(d, &w, lambda)?;
        if d.is_antidominant(&image, support)? {
            let better = match &best {
                Some((cur, _)) => image < *cur,
                None => true,
            };
            if better {
                best = Some((image.clone(), w));
            }
        }
        images.insert(image);
    }
    let (representative, witness) =
        best.expect("every finite dot-orbit contains an anti-dominant element");
    Ok(OrbitResult { representative, witness, orbit_size: images.len() as u64 })
}

/// True iff μ lies in the dot-orbit W_S · λ.
pub fn same_dot_orbit(
    d: &RootDatum,
    lambda: &Weight,
    mu: &Weight,
    support: &CharacterSupport,
    bound: u64,
) -> Result<bool> {
    d.check_dimension(lambda)?;
    d.check_dimension(mu)?;
    for w in enumerate_group(d, support, bound)? {
        if &dot_apply(d, &w, lambda)? == mu {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, AlgebraSpec};
    use crate::{frac, rat};

    fn gl(n: u32) -> RootDatum {
        build_root_datum(&AlgebraSpec::gl(n)).unwrap()
    }

    fn sp(n: u32) -> RootDatum {
        build_root_datum(&AlgebraSpec::ReductiveTypeC { n, central_line: false }).unwrap()
    }

    #[test]
    fn gl2_reflection_is_a_transposition() {
        let d = gl(2);
        let s = simple_reflection(&d, 0).unwrap();
        assert_eq!(s.perm(), &[1, 0]);
        assert_eq!(s.signs(), &[1, 1]);
    }

    #[test]
    fn sp2_long_reflection_is_a_sign_flip() {
        let d = sp(1);
        let s = simple_reflection(&d, 0).unwrap();
        assert_eq!(s.perm(), &[0]);
        assert_eq!(s.signs(), &[-1]);
    }

    #[test]
    fn braid_relation_in_gl3() {
        let d = gl(3);
        let s1 = simple_reflection(&d, 0).unwrap();
        let s2 = simple_reflection(&d, 1).unwrap();
        let lhs = s1.compose(&s2).compose(&s1);
        let rhs = s2.compose(&s1).compose(&s2);
        assert_eq!(lhs, rhs);
        // s₁s₂s₁ swaps the outer coordinates.
        assert_eq!(lhs.perm(), &[2, 1, 0]);
    }

    #[test]
    fn apply_and_inverse_roundtrip() {
        let d = sp(2);
        let s1 = simple_reflection(&d, 0).unwrap();
        let s2 = simple_reflection(&d, 1).unwrap();
        let w = s1.compose(&s2).compose(&s1);
        let lam = Weight::new(vec![frac(3, 7), rat(-2)]);
        let moved = w.apply(&lam).unwrap();
        assert_eq!(w.inverse().apply(&moved).unwrap(), lam);
        assert!(w.compose(&w.inverse()).is_identity());
    }

    #[test]
    fn cyclic_element_action() {
        let d = gl(3);
        // w = s₁ ∘ s₂ sends ε₁ → ε₂ → ε₃ → ε₁.
        let w = simple_reflection(&d, 0).unwrap().compose(&simple_reflection(&d, 1).unwrap());
        for i in 0..3 {
            let mut coords = vec![rat(0); 3];
            coords[i] = rat(1);
            let image = w.apply(&Weight::new(coords)).unwrap();
            let mut expect = vec![rat(0); 3];
            expect[(i + 1) % 3] = rat(1);
            assert_eq!(image, Weight::new(expect));
        }
    }

    #[test]
    fn dot_action_examples() {
        let d = gl(2);
        let id = WeylElement::identity(2);
        let lam = Weight::new(vec![frac(1, 5), rat(3)]);
        assert_eq!(dot_apply(&d, &id, &lam).unwrap(), lam);

        // s·0 = -α in gl(2).
        let s = simple_reflection(&d, 0).unwrap();
        assert_eq!(dot_apply(&d, &s, &Weight::zero(2)).unwrap(), Weight::from_ints(&[-1, 1]));

        // In the ⟨·, α∨⟩ coordinate: s·λ = -λ-2.
        let lam = Weight::new(vec![frac(-3, 8), frac(3, 8)]); // ⟨λ, α∨⟩ = -3/4
        let moved = dot_apply(&d, &s, &lam).unwrap();
        let coord = d.simple_pairing(&moved, 0).unwrap();
        assert_eq!(coord, frac(3, 4) - rat(2));
    }

    #[test]
    fn group_sizes() {
        let d3 = gl(3);
        let full = CharacterSupport::nonsingular(&d3);
        assert_eq!(enumerate_group(&d3, &full, DEFAULT_WEYL_BOUND).unwrap().count(), 6);
        assert_eq!(
            enumerate_group(&d3, &CharacterSupport::zero(), DEFAULT_WEYL_BOUND).unwrap().count(),
            1
        );

        let c2 = sp(2);
        let full = CharacterSupport::nonsingular(&c2);
        assert_eq!(enumerate_group(&c2, &full, DEFAULT_WEYL_BOUND).unwrap().count(), 8);
        assert_eq!(parabolic_order(&c2, &full).unwrap(), 8);
    }

    #[test]
    fn enumeration_bound_is_refused_with_required_order() {
        let d = gl(4);
        let full = CharacterSupport::nonsingular(&d);
        let err = enumerate_group(&d, &full, 23).unwrap_err();
        assert_eq!(err, Error::EnumerationBound { required: 24, bound: 23 });
    }

    #[test]
    fn antidominant_representative_examples() {
        let d = gl(2);
        let full = CharacterSupport::nonsingular(&d);

        let res = antidominant_representative(&d, &Weight::zero(2), &full, DEFAULT_WEYL_BOUND).unwrap();
        assert_eq!(res.representative, Weight::from_ints(&[-1, 1]));
        assert_eq!(res.orbit_size, 2);
        assert_eq!(dot_apply(&d, &res.witness, &Weight::zero(2)).unwrap(), res.representative);

        // Already anti-dominant integral weights stay put with witness e.
        let lam = Weight::from_ints(&[-3, 1]);
        let res = antidominant_representative(&d, &lam, &full, DEFAULT_WEYL_BOUND).unwrap();
        assert_eq!(res.representative, lam);
        assert!(res.witness.is_identity());

        // Empty support: the orbit is a single point.
        let res =
            antidominant_representative(&d, &Weight::zero(2), &CharacterSupport::zero(), DEFAULT_WEYL_BOUND)
                .unwrap();
        assert_eq!(res.representative, Weight::zero(2));
        assert_eq!(res.orbit_size, 1);
    }

    #[test]
    fn same_dot_orbit_examples() {
        let d = gl(2);
        let full = CharacterSupport::nonsingular(&d);
        let zero = Weight::zero(2);
        assert!(same_dot_orbit(&d, &zero, &zero, &full, DEFAULT_WEYL_BOUND).unwrap());
        let s = simple_reflection(&d, 0).unwrap();
        let image = dot_apply(&d, &s, &zero).unwrap();
        assert!(same_dot_orbit(&d, &zero, &image, &full, DEFAULT_WEYL_BOUND).unwrap());
        assert!(!same_dot_orbit(&d, &zero, &Weight::from_ints(&[1, -1]), &full, DEFAULT_WEYL_BOUND).unwrap());
    }

    #[test]
    fn display_notation() {
        let d = gl(3);
        let w = simple_reflection(&d, 0).unwrap().compose(&simple_reflection(&d, 1).unwrap());
        assert_eq!(alloc::format!("{w}"), "(1 2 3)");
        assert_eq!(alloc::format!("{}", WeylElement::identity(3)), "e");

        let c = sp(2);
        let flip = simple_reflection(&c, 1).unwrap();
        assert_eq!(alloc::format!("{flip}"), "σ{2}");
    }
}
