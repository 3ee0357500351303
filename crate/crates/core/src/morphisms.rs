//! Automorphism and isomorphism search for finite semigroups.
//!
//! Two search strategies coexist:
//!
//! - *Seeded*: every automorphism of λ(G) restricts to an automorphism of G
//!   (isomorphisms of superextensions carry the group onto the group, since
//!   λ(G)∖G is the unique maximal ideal), so the search starts from each
//!   φ ∈ Aut(G) with the principal elements pre-assigned and backtracks only
//!   over the rest. Complete for λ(G) up to the 81-element λ(C₅).
//! - *Generic*: unseeded backtracking over all elements with
//!   idempotent-to-idempotent and order-profile pruning. Capped at 16
//!   elements; serves as an independent oracle for the seeded route.
//!
//! Both propagate partial products eagerly: assigning x ↦ u forces
//! (x∗y) ↦ (u∗v) for every already-assigned y ↦ v, so a completed assignment
//! is a homomorphism by construction (and is re-verified anyway).

use crate::error::{Error, Result};
use crate::groups::{self, FiniteGroup, GroupMap};
use crate::lambdaop::{lambda_map, names, LambdaSemigroup};
use crate::structure::{idempotent_poset, SemigroupTable};
use std::collections::HashMap;

/// Size cap for the generic (unseeded) search.
pub const MAX_GENERIC_SIZE: usize = 16;
/// Size cap for the seeded search over λ(G).
pub const MAX_SEEDED_SIZE: usize = 100;

/// A full automorphism group of a semigroup: the carrier permutations in
/// sorted order, their composition table, and the identified abstract group.
#[derive(Debug, Clone)]
pub struct AutGroup {
    perms: Vec<Vec<usize>>,
    group: FiniteGroup,
    name: String,
}

impl AutGroup {
    /// Close the permutation list into a group: sorts, builds the
    /// composition table (apply right factor first), and identifies the
    /// abstract group.
    fn from_perms(mut perms: Vec<Vec<usize>>) -> Result<Self> {
        perms.sort();
        perms.dedup();
        if perms.is_empty() {
            return Err(Error::InvalidTable("empty automorphism set".into()));
        }
        let index: HashMap<&[usize], usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        let k = perms.len();
        let mut table = vec![0usize; k * k];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let comp = compose(p, q);
                let idx = *index
                    .get(comp.as_slice())
                    .ok_or_else(|| Error::InvalidTable("automorphisms not closed".into()))?;
                table[i * k + j] = idx;
            }
        }
        let group = FiniteGroup::from_flat_table(k, table)?;
        let name = groups::identify(&group);
        Ok(AutGroup { perms, group, name })
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    /// The abstract group the carrier forms under composition.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Catalog name of the abstract group, or "unknown".
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn contains(&self, perm: &[usize]) -> bool {
        self.perms.iter().any(|p| p == perm)
    }
}

/// (ψ ∘ τ)(x) = ψ(τ(x)).
pub fn compose(psi: &[usize], tau: &[usize]) -> Vec<usize> {
    tau.iter().map(|&y| psi[y]).collect()
}

pub fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (x, &y) in perm.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

/// Isomorphism-invariant element fingerprint used to prune candidates:
/// idempotency, number of square roots, and the (tail, period) shape of the
/// power sequence x, x², x³, …
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Profile {
    idempotent: bool,
    sqrt_count: usize,
    power_shape: (usize, usize),
}

fn profiles(n: usize, table: &[usize]) -> Vec<Profile> {
    let mul = |a: usize, b: usize| table[a * n + b];
    let mut sqrt_count = vec![0usize; n];
    for x in 0..n {
        sqrt_count[mul(x, x)] += 1;
    }
    (0..n)
        .map(|x| {
            // Walk powers until a repeat; record (tail length, cycle length).
            let mut seen: Vec<usize> = vec![x];
            let mut cur = x;
            let shape = loop {
                cur = mul(cur, x);
                if let Some(pos) = seen.iter().position(|&y| y == cur) {
                    break (pos, seen.len() - pos);
                }
                seen.push(cur);
            };
            Profile {
                idempotent: mul(x, x) == x,
                sqrt_count: sqrt_count[x],
                power_shape: shape,
            }
        })
        .collect()
}

/// Backtracking extension of partial element maps between two tables of the
/// same size, with eager product propagation.
struct Extender<'a> {
    n: usize,
    src: &'a [usize],
    dst: &'a [usize],
    src_profile: Vec<Profile>,
    dst_profile: Vec<Profile>,
    order: Vec<usize>,
}

impl<'a> Extender<'a> {
    fn new(n: usize, src: &'a [usize], dst: &'a [usize], order: Vec<usize>) -> Self {
        Extender {
            n,
            src,
            dst,
            src_profile: profiles(n, src),
            dst_profile: profiles(n, dst),
            order,
        }
    }

    /// Assign x ↦ u and propagate all forced product images. False on any
    /// clash (value mismatch or injectivity violation).
    fn propagate(&self, images: &mut [Option<usize>], used: &mut [bool], x0: usize, u0: usize) -> bool {
        let mut queue = vec![(x0, u0)];
        while let Some((x, u)) = queue.pop() {
            if let Some(v) = images[x] {
                if v != u {
                    return false;
                }
                continue;
            }
            if used[u] {
                return false;
            }
            images[x] = Some(u);
            used[u] = true;
            for (y, img) in images.iter().enumerate() {
                if let Some(v) = *img {
                    queue.push((self.src[x * self.n + y], self.dst[u * self.n + v]));
                    queue.push((self.src[y * self.n + x], self.dst[v * self.n + u]));
                }
            }
        }
        true
    }

    fn is_homomorphism(&self, perm: &[usize]) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                perm[self.src[x * self.n + y]] == self.dst[perm[x] * self.n + perm[y]]
            })
        })
    }

    fn search(
        &self,
        images: &[Option<usize>],
        used: &[bool],
        out: &mut Vec<Vec<usize>>,
        stop_at_first: bool,
    ) {
        if stop_at_first && !out.is_empty() {
            return;
        }
        let next = self.order.iter().copied().find(|&x| images[x].is_none());
        let x = match next {
            None => {
                let perm: Vec<usize> = images.iter().map(|i| i.unwrap()).collect();
                if self.is_homomorphism(&perm) {
                    out.push(perm);
                }
                return;
            }
            Some(x) => x,
        };
        for u in 0..self.n {
            if used[u] || self.src_profile[x] != self.dst_profile[u] {
                continue;
            }
            let mut im2 = images.to_vec();
            let mut us2 = used.to_vec();
            if self.propagate(&mut im2, &mut us2, x, u) {
                self.search(&im2, &us2, out, stop_at_first);
            }
        }
    }
}

/// Assignment order for λ(G): idempotents by ascending semilattice height,
/// then the rest by ascending orbit size, then index.
fn lambda_assignment_order(lambda: &LambdaSemigroup) -> Vec<usize> {
    let table = SemigroupTable::from_lambda(lambda);
    let idem: Vec<usize> = crate::structure::idempotents(&table);
    let heights: HashMap<usize, usize> = match idempotent_poset(&table) {
        Ok(poset) => idem.iter().map(|&e| (e, poset.height(e))).collect(),
        Err(_) => idem.iter().map(|&e| (e, 0)).collect(),
    };
    let orbits = crate::structure::translation_orbits(lambda);
    let mut orbit_size = vec![0usize; lambda.size()];
    for orbit in &orbits {
        for &i in orbit {
            orbit_size[i] = orbit.len();
        }
    }
    let mut order: Vec<usize> = (0..lambda.size()).collect();
    order.sort_by_key(|&i| {
        let idem_rank = heights.get(&i).map(|&h| (0usize, h)).unwrap_or((1, 0));
        (idem_rank, orbit_size[i], i)
    });
    order
}

/// The permutation λφ of λ(G) induced by a group automorphism φ, verified to
/// be a semigroup automorphism of the λ table.
pub fn lambda_of_map(lambda: &LambdaSemigroup, phi: &GroupMap) -> Result<Vec<usize>> {
    if phi.images.len() != lambda.group().order()
        || !phi.is_bijective()
        || !phi.is_homomorphism(lambda.group(), lambda.group())
    {
        return Err(Error::NotAnAutomorphism);
    }
    let ground = lambda.ground().clone();
    let mut perm = Vec::with_capacity(lambda.size());
    for i in 0..lambda.size() {
        let image = lambda_map(&phi.images, &ground, lambda.element(i))?;
        let idx = lambda.index_of(&image).ok_or(Error::NotAnAutomorphism)?;
        perm.push(idx);
    }
    // λφ of an automorphism is guaranteed to be one; verify anyway.
    let n = lambda.size();
    let table = lambda.flat_table();
    let ok = (0..n)
        .all(|x| (0..n).all(|y| perm[table[x * n + y]] == table[perm[x] * n + perm[y]]));
    let mut seen = vec![false; n];
    let bijective = perm.iter().all(|&p| !std::mem::replace(&mut seen[p], true));
    if !ok || !bijective {
        return Err(Error::NotAnAutomorphism);
    }
    Ok(perm)
}

/// All automorphisms of λ(G), found by extending every φ ∈ Aut(G) from the
/// principal elements outward.
pub fn automorphisms_seeded(lambda: &LambdaSemigroup) -> Result<AutGroup> {
    let n = lambda.size();
    if n > MAX_SEEDED_SIZE {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_SEEDED_SIZE,
        });
    }
    let group = lambda.group();
    let auts_g = groups::automorphisms(group)?;
    let order = lambda_assignment_order(lambda);
    let table = lambda.flat_table();
    let extender = Extender::new(n, table, table, order);
    let mut all = Vec::new();
    for phi in &auts_g {
        let mut images: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        let mut consistent = true;
        for x in 0..group.order() {
            let src = lambda.principal_index(x);
            let dst = lambda.principal_index(phi.apply(x));
            if !extender.propagate(&mut images, &mut used, src, dst) {
                consistent = false;
                break;
            }
        }
        if consistent {
            extender.search(&images, &used, &mut all, false);
        }
    }
    AutGroup::from_perms(all)
}

/// All automorphisms of an arbitrary small semigroup table by unseeded
/// backtracking. Independent of the seeded strategy.
pub fn automorphisms_generic(s: &SemigroupTable) -> Result<AutGroup> {
    let n = s.size();
    if n > MAX_GENERIC_SIZE {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_GENERIC_SIZE,
        });
    }
    let table = s.flat_table();
    // Idempotents first, then everything else.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (table[i * n + i] != i, i));
    let extender = Extender::new(n, table, table, order);
    let mut all = Vec::new();
    extender.search(&vec![None; n], &vec![false; n], &mut all, false);
    AutGroup::from_perms(all)
}

/// A witness isomorphism between two arbitrary semigroup tables (unseeded,
/// sizes ≤ 16), or None.
pub fn semigroup_isomorphic(s: &SemigroupTable, t: &SemigroupTable) -> Result<Option<Vec<usize>>> {
    let n = s.size();
    if n.max(t.size()) > MAX_GENERIC_SIZE {
        return Err(Error::OrderTooLarge {
            n: n.max(t.size()),
            max: MAX_GENERIC_SIZE,
        });
    }
    if n != t.size() {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    let src = s.flat_table();
    order.sort_by_key(|&i| (src[i * n + i] != i, i));
    let extender = Extender::new(n, src, t.flat_table(), order);
    let mut found = Vec::new();
    extender.search(&vec![None; n], &vec![false; n], &mut found, true);
    Ok(found.into_iter().next())
}

/// A witness isomorphism λ(G) → λ(H) by the seeded strategy: every
/// isomorphism of superextensions extends an isomorphism of the groups, so
/// trying all group isomorphisms is exhaustive.
pub fn lambda_isomorphic(
    ls: &LambdaSemigroup,
    lt: &LambdaSemigroup,
) -> Result<Option<Vec<usize>>> {
    let n = ls.size();
    if n.max(lt.size()) > MAX_SEEDED_SIZE {
        return Err(Error::OrderTooLarge {
            n: n.max(lt.size()),
            max: MAX_SEEDED_SIZE,
        });
    }
    if n != lt.size() {
        return Ok(None);
    }
    let isos = groups::all_isomorphisms(ls.group(), lt.group())?;
    let order = lambda_assignment_order(ls);
    let extender = Extender::new(n, ls.flat_table(), lt.flat_table(), order);
    for phi in &isos {
        let mut images: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        let mut consistent = true;
        for x in 0..ls.group().order() {
            let src = ls.principal_index(x);
            let dst = lt.principal_index(phi.apply(x));
            if !extender.propagate(&mut images, &mut used, src, dst) {
                consistent = false;
                break;
            }
        }
        if !consistent {
            continue;
        }
        let mut found = Vec::new();
        extender.search(&images, &used, &mut found, true);
        if let Some(perm) = found.into_iter().next() {
            return Ok(Some(perm));
        }
    }
    Ok(None)
}

/// The automorphism ψ_{a,f} of λ(C₂×C₂): x ↦ f(x), x□ ↦ f(x)□,
/// x△ ↦ f(x)·a·△.
pub fn holomorph_automorphism(
    lambda: &LambdaSemigroup,
    a: usize,
    f: &GroupMap,
) -> Result<Vec<usize>> {
    let group = lambda.group().clone();
    if group != groups::klein4() {
        return Err(Error::NameResolutionFailure(
            "psi_{a,f} is defined on lambda(C2xC2)".into(),
        ));
    }
    if a >= group.order() || !f.is_homomorphism(&group, &group) || !f.is_bijective() {
        return Err(Error::NotAnAutomorphism);
    }
    let tri = lambda
        .index_of(&names::triangle_klein(lambda.ground())?)
        .ok_or_else(|| Error::NameResolutionFailure("△".into()))?;
    let sq = lambda
        .index_of(&names::square_klein(lambda.ground())?)
        .ok_or_else(|| Error::NameResolutionFailure("□".into()))?;
    let mut perm = vec![0usize; lambda.size()];
    for x in 0..group.order() {
        let px = lambda.principal_index(x);
        let pfx = lambda.principal_index(f.apply(x));
        perm[px] = pfx;
        perm[lambda.mul(px, sq)] = lambda.mul(pfx, sq);
        let fa = lambda.principal_index(group.mul(f.apply(x), a));
        perm[lambda.mul(px, tri)] = lambda.mul(fa, tri);
    }
    // Verify the construction yields an automorphism.
    let n = lambda.size();
    let table = lambda.flat_table();
    let hom = (0..n)
        .all(|x| (0..n).all(|y| perm[table[x * n + y]] == table[perm[x] * n + perm[y]]));
    let mut seen = vec![false; n];
    let bij = perm.iter().all(|&p| !std::mem::replace(&mut seen[p], true));
    if !hom || !bij {
        return Err(Error::NotAnAutomorphism);
    }
    Ok(perm)
}

/// Restriction of Aut(λ(G)) to the principal copy of G.
#[derive(Debug, Clone)]
pub struct RestrictionReport {
    /// |Aut(G)|.
    pub aut_group_order: usize,
    /// |Aut(λ(G))|.
    pub aut_lambda_order: usize,
    /// Automorphisms of λ(G) restricting to the identity on G.
    pub kernel_size: usize,
    /// Whether every φ ∈ Aut(G) arises as a restriction.
    pub surjective: bool,
    /// Whether the lifted copy {λφ : φ ∈ Aut(G)} is normal in Aut(λ(G)).
    pub lifted_normal: bool,
}

/// Restrict every ψ ∈ Aut(λ(G)) to G, verify the restriction map is onto
/// Aut(G), and report the kernel size and normality of the lifted copy.
pub fn restriction_epimorphism(
    lambda: &LambdaSemigroup,
    auts: &AutGroup,
) -> Result<RestrictionReport> {
    let group = lambda.group();
    let m = group.order();
    let auts_g = groups::automorphisms(group)?;
    let mut restrictions = Vec::with_capacity(auts.len());
    for psi in auts.perms() {
        let mut images = vec![0usize; m];
        for x in 0..m {
            let img = psi[lambda.principal_index(x)];
            // ψ carries the principal copy of G onto itself.
            let point = lambda
                .principal_point(img)
                .ok_or(Error::NotAnAutomorphism)?;
            images[x] = point;
        }
        let phi = GroupMap { images };
        if !phi.is_homomorphism(group, group) || !phi.is_bijective() {
            return Err(Error::NotAnAutomorphism);
        }
        restrictions.push(phi);
    }
    let kernel_size = restrictions
        .iter()
        .filter(|phi| **phi == GroupMap::identity(m))
        .count();
    let surjective = auts_g.iter().all(|phi| restrictions.contains(phi));
    let lifted: Vec<Vec<usize>> = auts_g
        .iter()
        .map(|phi| lambda_of_map(lambda, phi))
        .collect::<Result<_>>()?;
    let lifted_normal = auts.perms().iter().all(|psi| {
        let psi_inv = invert(psi);
        lifted.iter().all(|tau| {
            let conj = compose(&compose(psi, tau), &psi_inv);
            lifted.contains(&conj)
        })
    });
    Ok(RestrictionReport {
        aut_group_order: auts_g.len(),
        aut_lambda_order: auts.len(),
        kernel_size,
        surjective,
        lifted_normal,
    })
}
