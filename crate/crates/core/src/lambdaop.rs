//! The extended binary operation on maximal linked families and the
//! construction of the superextension semigroup λ(G).
//!
//! For upfamilies 𝒜, ℬ over a semigroup S the product is generated by the
//! sets ⋃_{a∈A} a·B_a with A ∈ 𝒜 and each B_a ∈ ℬ. Unwinding the up-closure
//! gives the membership form used here:
//!
//! ```text
//!   C ∈ 𝒜∗ℬ  ⟺  { s ∈ S : C/s ∈ ℬ } ∈ 𝒜,    where C/s = { x : s·x ∈ C }.
//! ```
//!
//! [`MulContext::product`] implements the membership form with precomputed
//! quotient masks; [`product_oracle`] implements the generator form
//! literally (enumerating selector functions over minimal sets) and exists
//! to cross-check the fast route. Both validate that the result is again
//! maximal linked rather than assuming it.
//!
//! The operation only needs associativity, so the machinery accepts any
//! Cayley table; [`build_lambda`] specializes to groups of order ≤ 5 and
//! produces the full λ(G) with its Cayley table and the principal embedding
//! of G.

use crate::error::{Error, Result};
use crate::groups::{klein4, make_cyclic, FiniteGroup};
use crate::lambdaenum::enumerate_lambda;
use crate::setfam::{Family, GroundSet, MaxLinkedFamily, SubsetMask};
use rayon::prelude::*;
use std::collections::HashMap;

/// Largest group order for which λ(G) is materialized (81² table for C₅).
pub const MAX_LAMBDA_GROUND: usize = 5;

/// Precomputed left-quotient masks for one multiplication table:
/// `quot[s · 2ⁿ + C] = { x : s·x ∈ C }`.
pub struct MulContext {
    n: usize,
    quot: Vec<u32>,
}

impl MulContext {
    pub fn from_table(n: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let size = 1usize << n;
        let mut quot = vec![0u32; n * size];
        for s in 0..n {
            for c in 0..size {
                let mut mask = 0u32;
                for x in 0..n {
                    if c >> mul(s, x) & 1 == 1 {
                        mask |= 1 << x;
                    }
                }
                quot[s * size + c] = mask;
            }
        }
        MulContext { n, quot }
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        Self::from_table(g.order(), |a, b| g.mul(a, b))
    }

    /// The product 𝒜∗ℬ in membership form, validated maximal linked.
    pub fn product(&self, a: &MaxLinkedFamily, b: &MaxLinkedFamily) -> Result<MaxLinkedFamily> {
        if a.n() != self.n || b.n() != self.n {
            return Err(Error::GroundMismatch {
                left: a.n(),
                right: b.n(),
            });
        }
        let size = 1usize << self.n;
        let ground = GroundSet::new(self.n)?;
        let mut fam = Family::empty(&ground);
        for c in 1..size {
            let mut witnesses = 0u32;
            for s in 0..self.n {
                if b.contains(SubsetMask(self.quot[s * size + c])) {
                    witnesses |= 1 << s;
                }
            }
            if a.contains(SubsetMask(witnesses)) {
                fam.insert(SubsetMask(c as u32))?;
            }
        }
        MaxLinkedFamily::try_from_family(fam)
    }
}

/// One-off product over a group (builds the quotient tables each call; use
/// [`MulContext`] for bulk work).
pub fn product(
    g: &FiniteGroup,
    a: &MaxLinkedFamily,
    b: &MaxLinkedFamily,
) -> Result<MaxLinkedFamily> {
    MulContext::from_group(g).product(a, b)
}

/// The product computed from the generator form, literally: for every
/// minimal A ∈ 𝒜 and every selector {B_a}_{a∈A} over minimal sets of ℬ,
/// accumulate ⋃_{a∈A} a·B_a, up-close, and complete (the completion step is
/// vacuous when the up-closure is already maximal, which the theory
/// guarantees; a non-trivial or ambiguous completion reports
/// [`Error::NotMaximal`]).
pub fn product_oracle(
    g: &FiniteGroup,
    a: &MaxLinkedFamily,
    b: &MaxLinkedFamily,
) -> Result<MaxLinkedFamily> {
    let n = g.order();
    if n > MAX_LAMBDA_GROUND {
        return Err(Error::GroundTooLarge {
            n,
            max: MAX_LAMBDA_GROUND,
        });
    }
    if a.n() != n || b.n() != n {
        return Err(Error::GroundMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let size = 1usize << n;
    // Left translates s·B for every s and minimal B of ℬ.
    let min_b = b.minimal_sets();
    let mut translate = vec![0u32; n * min_b.len()];
    for s in 0..n {
        for (bi, bm) in min_b.iter().enumerate() {
            let mut mask = 0u32;
            for x in bm.elements() {
                mask |= 1 << g.mul(s, x);
            }
            translate[s * min_b.len() + bi] = mask;
        }
    }
    let mut generated = vec![false; size];
    for am in a.minimal_sets() {
        let elems: Vec<usize> = am.elements().collect();
        let mut selector = vec![0usize; elems.len()];
        loop {
            let mut union = 0u32;
            for (i, &s) in elems.iter().enumerate() {
                union |= translate[s * min_b.len() + selector[i]];
            }
            generated[union as usize] = true;
            // odometer over selector functions
            let mut pos = 0;
            while pos < selector.len() {
                selector[pos] += 1;
                if selector[pos] < min_b.len() {
                    break;
                }
                selector[pos] = 0;
                pos += 1;
            }
            if pos == selector.len() {
                break;
            }
        }
    }
    // Up-closure of the generated sets.
    let mut member = vec![false; size];
    for m in 1..size {
        if generated[m] {
            member[m] = true;
            continue;
        }
        for i in 0..n {
            if m >> i & 1 == 1 && member[m & !(1 << i)] {
                member[m] = true;
                break;
            }
        }
    }
    // Completion: add the forced side of any undecided complement pair.
    let full = size - 1;
    loop {
        let mut changed = false;
        for m in 1..size {
            let c = full ^ m;
            if member[m] || member[c] {
                continue;
            }
            let can_add =
                |cand: usize| (1..size).all(|other| !member[other] || cand & other != 0);
            match (can_add(m), can_add(c)) {
                (true, false) | (false, true) => {
                    let side = if can_add(m) { m } else { c };
                    for sup in side..size {
                        if sup & side == side {
                            member[sup] = true;
                        }
                    }
                    changed = true;
                }
                _ => return Err(Error::NotMaximal),
            }
        }
        if !changed {
            break;
        }
    }
    let ground = GroundSet::new(n)?;
    let mut fam = Family::empty(&ground);
    for m in 1..size {
        if member[m] {
            fam.insert(SubsetMask(m as u32))?;
        }
    }
    MaxLinkedFamily::try_from_family(fam)
}

/// The image family λf(𝓜) = ⟨f(M) : M ∈ 𝓜⟩ under a total map f: X → Y.
pub fn lambda_map(
    f: &[usize],
    target: &GroundSet,
    m: &MaxLinkedFamily,
) -> Result<MaxLinkedFamily> {
    if f.len() != m.n() {
        return Err(Error::GroundMismatch {
            left: f.len(),
            right: m.n(),
        });
    }
    if let Some(&bad) = f.iter().find(|&&y| y >= target.n()) {
        return Err(Error::MaskOutOfRange {
            mask: 1 << bad,
            n: target.n(),
        });
    }
    let mut gens: Vec<SubsetMask> = m
        .minimal_sets()
        .iter()
        .map(|mm| {
            let mut mask = 0u32;
            for x in mm.elements() {
                mask |= 1 << f[x];
            }
            SubsetMask(mask)
        })
        .collect();
    gens.sort_unstable();
    gens.dedup();
    let fam = Family::up_closure(&gens, target)?;
    MaxLinkedFamily::try_from_family(fam)
}

/// Image of a λ(C₅) element under the affine map x ↦ ax + b (mod 5);
/// the element written aℒ+b.
pub fn affine_image(a: usize, b: usize, m: &MaxLinkedFamily) -> Result<MaxLinkedFamily> {
    if m.n() != 5 {
        return Err(Error::GroundMismatch {
            left: m.n(),
            right: 5,
        });
    }
    if !(1..=4).contains(&a) {
        return Err(Error::NotAUnit(a));
    }
    let b = b % 5;
    let f: Vec<usize> = (0..5).map(|x| (a * x + b) % 5).collect();
    lambda_map(&f, &GroundSet::new(5)?, m)
}

/// The superextension semigroup of a finite group: every maximal linked
/// family over the group's elements, the full Cayley table of the extended
/// operation, and the embedding of G as principal ultrafilters.
pub struct LambdaSemigroup {
    group: FiniteGroup,
    ground: GroundSet,
    elements: Vec<MaxLinkedFamily>,
    table: Vec<usize>,
    principal: Vec<usize>,
    labels: Vec<Option<String>>,
}

impl LambdaSemigroup {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[MaxLinkedFamily] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &MaxLinkedFamily {
        &self.elements[i]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.elements.len() + j]
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    /// λ-index of the principal ultrafilter at group element `x`.
    pub fn principal_index(&self, x: usize) -> usize {
        self.principal[x]
    }

    /// Group element whose principal ultrafilter sits at λ-index `i`, if any.
    pub fn principal_point(&self, i: usize) -> Option<usize> {
        self.principal.iter().position(|&p| p == i)
    }

    pub fn index_of(&self, fam: &MaxLinkedFamily) -> Option<usize> {
        self.elements.binary_search(fam).ok()
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels[i].as_deref()
    }

    /// Display label: the assigned name, else the generator list.
    pub fn display(&self, i: usize) -> String {
        match &self.labels[i] {
            Some(l) => l.clone(),
            None => self.elements[i].display(&self.ground),
        }
    }

    pub fn set_label(&mut self, i: usize, label: impl Into<String>) {
        self.labels[i] = Some(label.into());
    }

    /// True iff every group element commutes with every λ element.
    pub fn group_is_central(&self) -> bool {
        (0..self.group.order()).all(|g| {
            let p = self.principal[g];
            (0..self.size()).all(|i| self.mul(p, i) == self.mul(i, p))
        })
    }
}

/// Build λ(G) for a group of order ≤ 5: enumerate the maximal linked
/// families, compute the full product table (row-parallel), and verify
/// associativity and the principal embedding.
pub fn build_lambda(group: FiniteGroup) -> Result<LambdaSemigroup> {
    let n = group.order();
    if n > MAX_LAMBDA_GROUND {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_LAMBDA_GROUND,
        });
    }
    let ground = GroundSet::new(n)?;
    let elements = enumerate_lambda(&ground)?;
    let size = elements.len();
    let index: HashMap<&[u64], usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.words(), i))
        .collect();
    let ctx = MulContext::from_group(&group);

    let rows: Vec<Vec<usize>> = (0..size)
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::with_capacity(size);
            for j in 0..size {
                let prod = ctx
                    .product(&elements[i], &elements[j])
                    .expect("product of maximal linked families is maximal linked");
                row.push(index[prod.words()]);
            }
            row
        })
        .collect();
    let mut table = Vec::with_capacity(size * size);
    for row in rows {
        table.extend(row);
    }

    // Exhaustive associativity check of the finished table.
    for i in 0..size {
        for j in 0..size {
            let ij = table[i * size + j];
            for k in 0..size {
                if table[ij * size + k] != table[i * size + table[j * size + k]] {
                    return Err(Error::NotAssociative { i, j, k });
                }
            }
        }
    }

    let mut principal = Vec::with_capacity(n);
    for x in 0..n {
        let p = MaxLinkedFamily::principal(x, &ground)?;
        principal.push(index[p.words()]);
    }
    // The embedding must be a homomorphism and send the identity to a
    // two-sided identity of λ(G).
    for x in 0..n {
        for y in 0..n {
            if table[principal[x] * size + principal[y]] != principal[group.mul(x, y)] {
                return Err(Error::InvalidTable(
                    "principal embedding is not a homomorphism".into(),
                ));
            }
        }
    }
    let e = principal[group.identity()];
    for i in 0..size {
        if table[e * size + i] != i || table[i * size + e] != i {
            return Err(Error::InvalidTable(
                "principal identity is not an identity of lambda(G)".into(),
            ));
        }
    }

    let mut lambda = LambdaSemigroup {
        group,
        ground,
        elements,
        table,
        principal,
        labels: vec![None; size],
    };
    names::assign_standard_labels(&mut lambda)?;
    Ok(lambda)
}

/// Named elements of λ(C₃), λ(C₄), λ(C₂×C₂) and λ(C₅), defined by their
/// printed generator lists and resolved to indices at build time.
pub mod names {
    use super::*;

    fn masks(sets: &[&[usize]]) -> Vec<SubsetMask> {
        sets.iter().map(|s| SubsetMask::from_elements(s)).collect()
    }

    /// △ on a 3-element ground {x,y,z}: ⟨{x,y},{x,z},{y,z}⟩.
    pub fn triangle3(ground: &GroundSet) -> Result<MaxLinkedFamily> {
        MaxLinkedFamily::from_base(&masks(&[&[0, 1], &[0, 2], &[1, 2]]), ground)
    }

    /// △ on C₄ = {1,i,−1,−i} ↦ {0,1,2,3}: ⟨{1,i},{1,−i},{i,−i}⟩.
    pub fn triangle_c4(ground: &GroundSet) -> Result<MaxLinkedFamily> {
        MaxLinkedFamily::from_base(&masks(&[&[0, 1], &[0, 3], &[1, 3]]), ground)
    }

    /// □ on C₄: ⟨{1,i},{1,−i},{1,−1},{i,−i,−1}⟩.
    pub fn square_c4(ground: &GroundSet) -> Result<MaxLinkedFamily> {
        MaxLinkedFamily::from_base(&masks(&[&[0, 1], &[0, 3], &[0, 2], &[1, 2, 3]]), ground)
    }

    /// △ on C₂×C₂ (elements 00,01,10,11): ⟨{e,x},{e,y},{x,y}⟩.
    pub fn triangle_klein(ground: &GroundSet) -> Result<MaxLinkedFamily> {
        MaxLinkedFamily::from_base(&masks(&[&[0, 1], &[0, 2], &[1, 2]]), ground)
    }

    /// □ on C₂×C₂: ⟨{e,x},{e,y},{e,xy},{x,y,xy}⟩.
    pub fn square_klein(ground: &GroundSet) -> Result<MaxLinkedFamily> {
        MaxLinkedFamily::from_base(&masks(&[&[0, 1], &[0, 2], &[0, 3], &[1, 2, 3]]), ground)
    }

    /// Base elements of λ(C₅) by their printed generator lists: the
    /// idempotent generators U, Z, Λ4, Λ and the four families Δ, Λ3, Θ, Γ
    /// whose affine images fill out the rest.
    pub fn c5_generators() -> Vec<(&'static str, Vec<SubsetMask>)> {
        let z: Vec<SubsetMask> = (0u32..32)
            .filter(|m| m.count_ones() == 3)
            .map(SubsetMask)
            .collect();
        vec![
            ("U", masks(&[&[0]])),
            ("Z", z),
            (
                "Λ4",
                masks(&[&[0, 1], &[0, 2], &[0, 3], &[0, 4], &[1, 2, 3, 4]]),
            ),
            (
                "Λ",
                masks(&[&[0, 2], &[0, 3], &[1, 2, 3], &[0, 1, 4], &[2, 3, 4]]),
            ),
            ("Δ", masks(&[&[0, 2], &[0, 3], &[2, 3]])),
            ("Λ3", masks(&[&[0, 2], &[0, 3], &[0, 4], &[2, 3, 4]])),
            (
                "Θ",
                masks(&[
                    &[1, 4],
                    &[0, 1, 2],
                    &[0, 1, 3],
                    &[1, 2, 3],
                    &[0, 2, 4],
                    &[0, 3, 4],
                    &[2, 3, 4],
                ]),
            ),
            (
                "Γ",
                masks(&[&[0, 2], &[0, 4], &[0, 1, 3], &[1, 2, 4], &[2, 3, 4]]),
            ),
        ]
    }

    /// The printed generator list of the idempotent 2Λ = ⟨04,01,124,023,143⟩.
    pub fn two_lambda_printed(ground: &GroundSet) -> Result<MaxLinkedFamily> {
        MaxLinkedFamily::from_base(
            &masks(&[&[0, 4], &[0, 1], &[1, 2, 4], &[0, 2, 3], &[1, 4, 3]]),
            ground,
        )
    }

    /// The 17 named elements of λ(C₅) in display row order: 𝒰 first, then
    /// the fifteen printed table rows, then the zero 𝒵 last.
    pub const T17_ORDER: [&str; 17] = [
        "U", "Λ4", "Λ", "Δ", "Λ3", "-Λ3", "2Λ", "2Δ", "2Λ3", "-2Λ3", "Θ", "2Θ", "Γ", "-Γ",
        "2Γ", "-2Γ", "Z",
    ];

    fn scaled_name(a: usize, base: &str) -> String {
        match a {
            1 => base.to_string(),
            2 => format!("2{base}"),
            3 => format!("-2{base}"),
            4 => format!("-{base}"),
            _ => unreachable!(),
        }
    }

    /// Offset suffix in the signed convention: +1, +2, −2 (for 3), −1 (for 4).
    pub fn offset_suffix(b: usize) -> &'static str {
        match b % 5 {
            0 => "",
            1 => "+1",
            2 => "+2",
            3 => "-2",
            4 => "-1",
            _ => unreachable!(),
        }
    }

    /// All 17 named elements of λ(C₅) as (name, family), covering every
    /// distinct affine scaling of the base generators.
    pub fn c5_named() -> Result<Vec<(String, MaxLinkedFamily)>> {
        let ground = GroundSet::new(5)?;
        let mut named: Vec<(String, MaxLinkedFamily)> = Vec::new();
        for (name, gens) in c5_generators() {
            let base = MaxLinkedFamily::from_base(&gens, &ground)?;
            match name {
                "U" | "Z" => named.push((name.to_string(), base)),
                _ => {
                    for a in [1usize, 2, 3, 4] {
                        let img = affine_image(a, 0, &base)?;
                        let label = scaled_name(a, name);
                        if !named.iter().any(|(_, f)| *f == img) {
                            named.push((label, img));
                        }
                    }
                }
            }
        }
        Ok(named)
    }

    /// Resolve the canonical names and label every element (named representatives
    /// bare, translations as `name±b`).
    pub(super) fn assign_standard_labels(lambda: &mut LambdaSemigroup) -> Result<()> {
        let group = lambda.group().clone();
        if group == make_cyclic(1) {
            lambda.set_label(lambda.principal_index(0), "0");
        } else if group == make_cyclic(2) {
            for x in 0..2 {
                lambda.set_label(lambda.principal_index(x), x.to_string());
            }
        } else if group == make_cyclic(3) {
            label_ground(lambda, &["1", "z", "-z"])?;
            let tri = triangle3(lambda.ground())?;
            label_with_translations(lambda, "△", &tri)?;
        } else if group == make_cyclic(4) {
            label_ground(lambda, &["1", "i", "-1", "-i"])?;
            let tri = triangle_c4(lambda.ground())?;
            let sq = square_c4(lambda.ground())?;
            label_with_translations(lambda, "△", &tri)?;
            label_with_translations(lambda, "□", &sq)?;
        } else if group == klein4() {
            label_ground(lambda, &["00", "01", "10", "11"])?;
            let tri = triangle_klein(lambda.ground())?;
            let sq = square_klein(lambda.ground())?;
            label_with_translations(lambda, "△", &tri)?;
            label_with_translations(lambda, "□", &sq)?;
        } else if group == make_cyclic(5) {
            for x in 0..5 {
                lambda.set_label(lambda.principal_index(x), x.to_string());
            }
            for (name, fam) in c5_named()? {
                let idx = lambda
                    .index_of(&fam)
                    .ok_or_else(|| Error::NameResolutionFailure(name.clone()))?;
                if name != "U" {
                    lambda.set_label(idx, name.clone());
                }
                // Translations ℒ+b = principal(b) ∗ ℒ.
                if name != "U" && name != "Z" {
                    for b in 1..5usize {
                        let t = lambda.mul(lambda.principal_index(b), idx);
                        lambda.set_label(t, format!("{name}{}", offset_suffix(b)));
                    }
                }
            }
        }
        Ok(())
    }

    fn label_ground(lambda: &mut LambdaSemigroup, labels: &[&str]) -> Result<()> {
        let n = lambda.group().order();
        lambda.ground =
            GroundSet::with_labels(n, labels.iter().map(|s| s.to_string()).collect())?;
        for (x, &label) in labels.iter().enumerate() {
            lambda.set_label(lambda.principal_index(x), label);
        }
        Ok(())
    }

    /// Label ℒ and every translate g·ℒ as `g<name>` (bare for the identity).
    fn label_with_translations(
        lambda: &mut LambdaSemigroup,
        name: &str,
        fam: &MaxLinkedFamily,
    ) -> Result<()> {
        let idx = lambda
            .index_of(fam)
            .ok_or_else(|| Error::NameResolutionFailure(name.to_string()))?;
        let group = lambda.group().clone();
        lambda.set_label(idx, name);
        for g in 0..group.order() {
            if g == group.identity() {
                continue;
            }
            let t = lambda.mul(lambda.principal_index(g), idx);
            // A fixed point (e.g. a zero) keeps its bare name.
            if t != idx {
                let glabel = lambda.ground.label(g);
                lambda.set_label(t, format!("{glabel}{name}"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambda_c(n: usize) -> LambdaSemigroup {
        build_lambda(make_cyclic(n)).unwrap()
    }

    #[test]
    fn lambda_sizes() {
        assert_eq!(lambda_c(1).size(), 1);
        assert_eq!(lambda_c(2).size(), 2);
        assert_eq!(lambda_c(3).size(), 4);
        assert_eq!(lambda_c(4).size(), 12);
        assert_eq!(build_lambda(klein4()).unwrap().size(), 12);
    }

    #[test]
    fn lambda_of_tiny_groups_is_the_group() {
        // For |G| ≤ 2 every maximal linked family is principal, so λ(G)
        // is just G under the principal identification.
        for n in [1usize, 2] {
            let lam = lambda_c(n);
            assert_eq!(lam.size(), n);
            let g = lam.group();
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(
                        lam.mul(lam.principal_index(x), lam.principal_index(y)),
                        lam.principal_index(g.mul(x, y))
                    );
                }
            }
            assert!((0..lam.size()).all(|i| lam.element(i).principal_point().is_some()));
        }
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(
            build_lambda(make_cyclic(6)),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn principal_embedding_is_homomorphism() {
        for lam in [lambda_c(3), lambda_c(4), build_lambda(klein4()).unwrap()] {
            let g = lam.group();
            for x in 0..g.order() {
                for y in 0..g.order() {
                    assert_eq!(
                        lam.mul(lam.principal_index(x), lam.principal_index(y)),
                        lam.principal_index(g.mul(x, y))
                    );
                }
            }
        }
    }

    #[test]
    fn triangle_is_zero_in_lambda_c3() {
        let lam = lambda_c(3);
        let tri = names::triangle3(lam.ground()).unwrap();
        let t = lam.index_of(&tri).unwrap();
        for i in 0..lam.size() {
            assert_eq!(lam.mul(t, i), t);
            assert_eq!(lam.mul(i, t), t);
        }
    }

    #[test]
    fn c4_triangle_square_relations() {
        let lam = lambda_c(4);
        let tri = lam
            .index_of(&names::triangle_c4(lam.ground()).unwrap())
            .unwrap();
        let sq = lam
            .index_of(&names::square_c4(lam.ground()).unwrap())
            .unwrap();
        assert_eq!(lam.mul(tri, tri), sq);
        assert_eq!(lam.mul(sq, sq), sq);
        assert_eq!(lam.mul(tri, sq), tri);
        assert_eq!(lam.mul(sq, tri), tri);
    }

    #[test]
    fn group_central_for_abelian_groups() {
        for lam in [lambda_c(4), build_lambda(klein4()).unwrap()] {
            assert!(lam.group_is_central());
        }
    }

    #[test]
    fn oracle_agrees_on_all_pairs_c3() {
        let lam = lambda_c(3);
        let ctx = MulContext::from_group(lam.group());
        for a in lam.elements() {
            for b in lam.elements() {
                let fast = ctx.product(a, b).unwrap();
                let slow = product_oracle(lam.group(), a, b).unwrap();
                assert_eq!(fast, slow);
            }
        }
    }

    #[test]
    fn oracle_agrees_on_all_pairs_c4() {
        let lam = lambda_c(4);
        let ctx = MulContext::from_group(lam.group());
        for a in lam.elements() {
            for b in lam.elements() {
                assert_eq!(
                    ctx.product(a, b).unwrap(),
                    product_oracle(lam.group(), a, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn product_over_a_non_group_semigroup() {
        // The operation needs only associativity: over the 4-element
        // semigroup with an absorbing zero and a 3-cycle, principal
        // families multiply like the underlying elements.
        let mut table = vec![0usize; 16];
        for i in 1..4 {
            for j in 1..4 {
                table[i * 4 + j] = (i + j - 2) % 3 + 1;
            }
        }
        let mul = |a: usize, b: usize| table[a * 4 + b];
        let ctx = MulContext::from_table(4, mul);
        let ground = GroundSet::new(4).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                let px = MaxLinkedFamily::principal(x, &ground).unwrap();
                let py = MaxLinkedFamily::principal(y, &ground).unwrap();
                let prod = ctx.product(&px, &py).unwrap();
                assert_eq!(prod.principal_point(), Some(mul(x, y)));
            }
        }
    }

    #[test]
    fn product_rejects_ground_mismatch() {
        let g3 = GroundSet::new(3).unwrap();
        let g4 = GroundSet::new(4).unwrap();
        let a = MaxLinkedFamily::principal(0, &g3).unwrap();
        let b = MaxLinkedFamily::principal(0, &g4).unwrap();
        assert!(matches!(
            product(&make_cyclic(3), &a, &b),
            Err(Error::GroundMismatch { .. })
        ));
    }

    #[test]
    fn lambda_map_identity_and_functoriality() {
        let lam = lambda_c(4);
        let g = lam.ground().clone();
        let id: Vec<usize> = (0..4).collect();
        for m in lam.elements() {
            assert_eq!(&lambda_map(&id, &g, m).unwrap(), m);
        }
        // λ(f∘h) = λf ∘ λh for a couple of maps on 4 points.
        let f = vec![1usize, 2, 3, 0];
        let h = vec![2usize, 2, 1, 0];
        let fh: Vec<usize> = (0..4).map(|x| f[h[x]]).collect();
        for m in lam.elements() {
            let lhs = lambda_map(&fh, &g, m).unwrap();
            let rhs = lambda_map(&f, &g, &lambda_map(&h, &g, m).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn affine_images_on_c5() {
        let ground = GroundSet::new(5).unwrap();
        let gens = names::c5_generators();
        let delta = MaxLinkedFamily::from_base(&gens[4].1, &ground).unwrap();
        assert_eq!(gens[4].0, "Δ");

        // 1·Δ+0 is Δ itself; 2·Δ is a different element.
        assert_eq!(affine_image(1, 0, &delta).unwrap(), delta);
        assert_ne!(affine_image(2, 0, &delta).unwrap(), delta);
        assert!(matches!(
            affine_image(0, 1, &delta),
            Err(Error::NotAUnit(0))
        ));

        // Λ = −Λ and Θ = −Θ; aΛ₄ = Λ₄ for every unit a.
        let lam = MaxLinkedFamily::from_base(&gens[3].1, &ground).unwrap();
        assert_eq!(affine_image(4, 0, &lam).unwrap(), lam);
        let theta = MaxLinkedFamily::from_base(&gens[6].1, &ground).unwrap();
        assert_eq!(affine_image(4, 0, &theta).unwrap(), theta);
        let lam4 = MaxLinkedFamily::from_base(&gens[2].1, &ground).unwrap();
        for a in 1..=4 {
            assert_eq!(affine_image(a, 0, &lam4).unwrap(), lam4);
        }

        // The printed generator list of 2Λ matches 2·Λ.
        let two_lam = names::two_lambda_printed(&ground).unwrap();
        assert_eq!(affine_image(2, 0, &lam).unwrap(), two_lam);

        // Z is invariant under every affine bijection.
        let z = MaxLinkedFamily::from_base(&gens[1].1, &ground).unwrap();
        for a in 1..=4 {
            for b in 0..5 {
                assert_eq!(affine_image(a, b, &z).unwrap(), z);
            }
        }
    }

    #[test]
    fn c5_names_resolve_to_17_distinct_elements() {
        let named = names::c5_named().unwrap();
        assert_eq!(named.len(), 17);
        let names_found: Vec<&str> = named.iter().map(|(n, _)| n.as_str()).collect();
        for want in names::T17_ORDER {
            assert!(names_found.contains(&want), "missing {want}");
        }
    }

    #[test]
    fn labels_assigned_for_c4() {
        let lam = lambda_c(4);
        let labels: Vec<String> = (0..lam.size()).map(|i| lam.display(i)).collect();
        for want in ["1", "i", "-1", "-i", "△", "i△", "-1△", "-i△", "□", "i□"] {
            assert!(labels.iter().any(|l| l == want), "missing label {want}");
        }
    }

    #[test]
    fn translation_equivariance_on_c5() {
        let lam = lambda_c(5);
        let g = lam.group();
        // (ℒ+a) ∗ (𝓜+b) = (ℒ∗𝓜)+a+b, with ℒ+a = principal(a)∗ℒ.
        let seed = [0usize, 7, 23, 45, 80, 33];
        for &i in &seed {
            for &j in &seed {
                for a in 0..5 {
                    for b in 0..5 {
                        let ia = lam.mul(lam.principal_index(a), i);
                        let jb = lam.mul(lam.principal_index(b), j);
                        let lhs = lam.mul(ia, jb);
                        let rhs =
                            lam.mul(lam.principal_index(g.mul(a, b)), lam.mul(i, j));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
