//! Structural analysis of a finite semigroup given by its Cayley table:
//! idempotents and their semilattice order, zeros, ideals, orbits under the
//! embedded group, orbit semigroups, transversal semigroups, and square-root
//! sets.

use crate::error::{Error, Result};
use crate::lambdaop::{names, LambdaSemigroup};
use serde_json::json;

/// An associative multiplication table with optional element labels.
/// Associativity is checked exhaustively up to size 100 and sampled above.
#[derive(Debug, Clone)]
pub struct SemigroupTable {
    size: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl SemigroupTable {
    pub fn new(size: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        if size == 0 || table.len() != size * size {
            return Err(Error::InvalidTable(format!(
                "expected {size}x{size} entries, got {}",
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&e| e >= size) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        if let Some(ls) = &labels {
            if ls.len() != size {
                return Err(Error::InvalidLabels(format!(
                    "expected {size} labels, got {}",
                    ls.len()
                )));
            }
        }
        let mul = |a: usize, b: usize| table[a * size + b];
        if size <= 100 {
            for i in 0..size {
                for j in 0..size {
                    let ij = mul(i, j);
                    for k in 0..size {
                        if mul(ij, k) != mul(i, mul(j, k)) {
                            return Err(Error::NotAssociative { i, j, k });
                        }
                    }
                }
            }
        } else {
            let mut state = 0x243f_6a88_85a3_08d3u64;
            for _ in 0..100_000 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let i = (state >> 33) as usize % size;
                let j = (state >> 13) as usize % size;
                let k = (state >> 3) as usize % size;
                if mul(mul(i, j), k) != mul(i, mul(j, k)) {
                    return Err(Error::NotAssociative { i, j, k });
                }
            }
        }
        Ok(SemigroupTable { size, table, labels })
    }

    pub fn from_lambda(lambda: &LambdaSemigroup) -> Self {
        let labels: Vec<String> = (0..lambda.size()).map(|i| lambda.display(i)).collect();
        SemigroupTable {
            size: lambda.size(),
            table: lambda.flat_table().to_vec(),
            labels: Some(labels),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    }
}

/// All idempotents (x∗x = x), ascending.
pub fn idempotents(s: &SemigroupTable) -> Vec<usize> {
    (0..s.size()).filter(|&i| s.mul(i, i) == i).collect()
}

/// The unique z with x∗z = z∗x = z for all x, if present.
pub fn zero_element(s: &SemigroupTable) -> Option<usize> {
    (0..s.size()).find(|&z| (0..s.size()).all(|x| s.mul(x, z) == z && s.mul(z, x) == z))
}

/// The natural partial order e ≤ f iff e∗f = e on a commuting idempotent set.
#[derive(Debug, Clone)]
pub struct IdempotentPoset {
    elements: Vec<usize>,
    leq: Vec<bool>,
}

impl IdempotentPoset {
    /// The idempotents, ascending by element index.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    fn pos(&self, e: usize) -> Option<usize> {
        self.elements.iter().position(|&x| x == e)
    }

    /// e ≤ f in the semilattice order (by semigroup element index).
    pub fn leq(&self, e: usize, f: usize) -> bool {
        match (self.pos(e), self.pos(f)) {
            (Some(i), Some(j)) => self.leq[i * self.elements.len() + j],
            _ => false,
        }
    }

    /// Covering pairs (e, f): e < f with nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let k = self.elements.len();
        let mut edges = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i == j || !self.leq[i * k + j] {
                    continue;
                }
                let covered = (0..k).any(|m| {
                    m != i && m != j && self.leq[i * k + m] && self.leq[m * k + j]
                });
                if !covered {
                    edges.push((self.elements[i], self.elements[j]));
                }
            }
        }
        edges
    }

    /// Height of `e`: length of the longest chain strictly below it.
    pub fn height(&self, e: usize) -> usize {
        match self.pos(e) {
            None => 0,
            Some(i) => {
                let k = self.elements.len();
                (0..k)
                    .filter(|&j| j != i && self.leq[j * k + i])
                    .map(|j| self.height(self.elements[j]) + 1)
                    .max()
                    .unwrap_or(0)
            }
        }
    }
}

/// Build the idempotent poset; the idempotents must pairwise commute.
pub fn idempotent_poset(s: &SemigroupTable) -> Result<IdempotentPoset> {
    let elements = idempotents(s);
    for (a, &e) in elements.iter().enumerate() {
        for &f in elements.iter().skip(a + 1) {
            if s.mul(e, f) != s.mul(f, e) {
                return Err(Error::NotASemilattice { e, f });
            }
        }
    }
    let k = elements.len();
    let mut leq = vec![false; k * k];
    for (i, &e) in elements.iter().enumerate() {
        for (j, &f) in elements.iter().enumerate() {
            leq[i * k + j] = s.mul(e, f) == e;
        }
    }
    Ok(IdempotentPoset { elements, leq })
}

/// Non-empty subset closed under outer multiplication on both sides.
pub fn is_ideal(s: &SemigroupTable, subset: &[usize]) -> bool {
    if subset.is_empty() {
        return false;
    }
    let mut member = vec![false; s.size()];
    for &x in subset {
        member[x] = true;
    }
    subset.iter().all(|&x| {
        (0..s.size()).all(|y| member[s.mul(x, y)] && member[s.mul(y, x)])
    })
}

/// Principal two-sided ideal generated by `x`.
fn principal_ideal(s: &SemigroupTable, x: usize) -> Vec<bool> {
    let mut member = vec![false; s.size()];
    member[x] = true;
    let mut frontier = vec![x];
    while let Some(y) = frontier.pop() {
        for z in 0..s.size() {
            for p in [s.mul(y, z), s.mul(z, y)] {
                if !member[p] {
                    member[p] = true;
                    frontier.push(p);
                }
            }
        }
    }
    member
}

/// The unique maximal proper ideal, when one exists: the union of all proper
/// principal ideals, provided that union is itself proper. (Every proper
/// ideal is contained in that union, so a proper union is the unique
/// maximal ideal.)
pub fn maximal_ideal(s: &SemigroupTable) -> Option<Vec<usize>> {
    let mut member = vec![false; s.size()];
    for x in 0..s.size() {
        let ideal = principal_ideal(s, x);
        if ideal.iter().filter(|&&b| b).count() < s.size() {
            for (i, &b) in ideal.iter().enumerate() {
                if b {
                    member[i] = true;
                }
            }
        }
    }
    let result: Vec<usize> = (0..s.size()).filter(|&i| member[i]).collect();
    if result.is_empty() || result.len() == s.size() {
        None
    } else {
        debug_assert!(is_ideal(s, &result));
        Some(result)
    }
}

/// Partition of λ(G) into orbits {g∗ℒ : g ∈ G} of the left G-action,
/// ordered by least member, each orbit sorted.
pub fn translation_orbits(lambda: &LambdaSemigroup) -> Vec<Vec<usize>> {
    let g = lambda.group();
    let mut seen = vec![false; lambda.size()];
    let mut orbits = Vec::new();
    for i in 0..lambda.size() {
        if seen[i] {
            continue;
        }
        let mut orbit: Vec<usize> = (0..g.order())
            .map(|x| lambda.mul(lambda.principal_index(x), i))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &j in &orbit {
            seen[j] = true;
        }
        orbits.push(orbit);
    }
    orbits
}

/// The orbit semigroup λ(G)/G with its projection data.
pub struct OrbitSemigroup {
    /// Quotient multiplication table on orbits.
    pub table: SemigroupTable,
    /// Orbit id of each λ element.
    pub orbit_of: Vec<usize>,
    /// Chosen representative λ element per orbit (named element if the
    /// orbit has one, else the least index).
    pub representatives: Vec<usize>,
}

/// Canonical representative names: the named elements of each λ(G).
fn canonical_names(lambda: &LambdaSemigroup) -> Vec<String> {
    let idn = lambda.display(lambda.principal_index(lambda.group().identity()));
    let mut base = vec![idn, "△".to_string(), "□".to_string()];
    for name in names::T17_ORDER {
        base.push(name.to_string());
    }
    base
}

/// Quotient of λ(G) by the central copy of G; errors if G is not central.
pub fn orbit_semigroup(lambda: &LambdaSemigroup) -> Result<OrbitSemigroup> {
    if !lambda.group_is_central() {
        return Err(Error::NotCentral);
    }
    let orbits = translation_orbits(lambda);
    let mut orbit_of = vec![0usize; lambda.size()];
    for (oid, orbit) in orbits.iter().enumerate() {
        for &i in orbit {
            orbit_of[i] = oid;
        }
    }
    let canon = canonical_names(lambda);
    let representatives: Vec<usize> = orbits
        .iter()
        .map(|orbit| {
            orbit
                .iter()
                .copied()
                .find(|&i| {
                    lambda
                        .label(i)
                        .map(|l| {
                            canon.iter().any(|c| c == l)
                                || (lambda.group().order() == 5 && l == "0")
                        })
                        .unwrap_or(false)
                })
                .unwrap_or(orbit[0])
        })
        .collect();
    let k = orbits.len();
    let mut table = vec![0usize; k * k];
    for a in 0..k {
        for b in 0..k {
            table[a * k + b] = orbit_of[lambda.mul(representatives[a], representatives[b])];
        }
    }
    // Well-definedness: the projection must be a homomorphism.
    for i in 0..lambda.size() {
        for j in 0..lambda.size() {
            if orbit_of[lambda.mul(i, j)] != table[orbit_of[i] * k + orbit_of[j]] {
                return Err(Error::NotCentral);
            }
        }
    }
    let labels: Vec<String> = representatives
        .iter()
        .map(|&r| format!("[{}]", lambda.display(r)))
        .collect();
    Ok(OrbitSemigroup {
        table: SemigroupTable::new(k, table, Some(labels))?,
        orbit_of,
        representatives,
    })
}

/// True iff `t` is a subsemigroup meeting every orbit exactly once, so that
/// the orbit projection restricts to an isomorphism on it.
pub fn verify_transversal(lambda: &LambdaSemigroup, t: &[usize]) -> bool {
    let quotient = match orbit_semigroup(lambda) {
        Ok(q) => q,
        Err(_) => return false,
    };
    let k = quotient.table.size();
    if t.len() != k {
        return false;
    }
    let mut hit = vec![false; k];
    for &x in t {
        if x >= lambda.size() || hit[quotient.orbit_of[x]] {
            return false;
        }
        hit[quotient.orbit_of[x]] = true;
    }
    // Closure; the projection is then automatically a bijective homomorphism.
    t.iter().all(|&x| {
        t.iter().all(|&y| t.contains(&lambda.mul(x, y)))
    })
}

/// Exhaustive search for a transversal semigroup, bounded to quotients of
/// at most 3 orbits (one candidate per orbit, all combinations tried).
pub fn find_transversal_semigroup(lambda: &LambdaSemigroup) -> Result<Option<Vec<usize>>> {
    let quotient = orbit_semigroup(lambda)?;
    let orbits = translation_orbits(lambda);
    if quotient.table.size() > 3 {
        return Err(Error::OrderTooLarge {
            n: quotient.table.size(),
            max: 3,
        });
    }
    let mut choice = vec![0usize; orbits.len()];
    loop {
        let candidate: Vec<usize> = orbits
            .iter()
            .zip(&choice)
            .map(|(orbit, &c)| orbit[c])
            .collect();
        if verify_transversal(lambda, &candidate) {
            return Ok(Some(candidate));
        }
        let mut pos = 0;
        while pos < choice.len() {
            choice[pos] += 1;
            if choice[pos] < orbits[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
        if pos == choice.len() {
            return Ok(None);
        }
    }
}

/// {x : x∗x ∈ targets}.
pub fn sqrt_set(s: &SemigroupTable, targets: &[usize]) -> Vec<usize> {
    (0..s.size())
        .filter(|&x| targets.contains(&s.mul(x, x)))
        .collect()
}

/// The 17 named elements of λ(C₅) with their full product table rendered in
/// `name±b` notation.
pub struct T17 {
    /// λ indices in display row order.
    pub indices: Vec<usize>,
    /// Display names, same order.
    pub names: Vec<String>,
    /// 17×17 product entries as λ indices.
    pub cell_indices: Vec<Vec<usize>>,
    /// 17×17 product entries rendered as named-representative ± offset.
    pub cells: Vec<Vec<String>>,
}

impl T17 {
    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Rendered entry for row/column names.
    pub fn entry(&self, row: &str, col: &str) -> Option<&str> {
        let r = self.position(row)?;
        let c = self.position(col)?;
        Some(self.cells[r][c].as_str())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push('*');
        for name in &self.names {
            out.push(',');
            out.push_str(&csv_quote(name));
        }
        out.push('\n');
        for (r, name) in self.names.iter().enumerate() {
            out.push_str(&csv_quote(name));
            for c in 0..self.names.len() {
                out.push(',');
                out.push_str(&csv_quote(&self.cells[r][c]));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "names": self.names,
            "indices": self.indices,
            "cells": self.cells,
            "cell_indices": self.cell_indices,
        })
    }
}

/// Quote a CSV cell when it contains a delimiter, quote, or newline.
pub fn csv_quote(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Resolve the 17 named elements of λ(C₅) and render their products.
pub fn build_t17(lambda: &LambdaSemigroup) -> Result<T17> {
    if lambda.group().order() != 5 {
        return Err(Error::NameResolutionFailure(
            "T17 is defined on lambda(C5)".into(),
        ));
    }
    let mut indices = Vec::with_capacity(17);
    for name in names::T17_ORDER {
        let idx = if name == "U" {
            lambda.principal_index(0)
        } else {
            (0..lambda.size())
                .find(|&i| lambda.label(i) == Some(name))
                .ok_or_else(|| Error::NameResolutionFailure(name.to_string()))?
        };
        indices.push(idx);
    }
    let render = |p: usize| -> Result<String> {
        for (k, &rep) in indices.iter().enumerate() {
            for b in 0..5usize {
                if lambda.mul(lambda.principal_index(b), rep) == p {
                    return Ok(format!(
                        "{}{}",
                        names::T17_ORDER[k],
                        names::offset_suffix(b)
                    ));
                }
            }
        }
        Err(Error::NameResolutionFailure(format!(
            "element {p} is not a translate of a named element"
        )))
    };
    let mut cells = Vec::with_capacity(17);
    let mut cell_indices = Vec::with_capacity(17);
    for &i in &indices {
        let mut row = Vec::with_capacity(17);
        let mut row_idx = Vec::with_capacity(17);
        for &j in &indices {
            let p = lambda.mul(i, j);
            row_idx.push(p);
            row.push(render(p)?);
        }
        cells.push(row);
        cell_indices.push(row_idx);
    }
    Ok(T17 {
        indices,
        names: names::T17_ORDER.iter().map(|s| s.to_string()).collect(),
        cell_indices,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{klein4, make_cyclic};
    use crate::lambdaop::build_lambda;

    fn lambda_c(n: usize) -> LambdaSemigroup {
        build_lambda(make_cyclic(n)).unwrap()
    }

    fn find_label(lambda: &LambdaSemigroup, label: &str) -> usize {
        (0..lambda.size())
            .find(|&i| lambda.label(i) == Some(label))
            .unwrap_or_else(|| panic!("no element labelled {label}"))
    }

    #[test]
    fn idempotents_of_groups_and_lambdas() {
        let c5 = SemigroupTable::from_lambda(&lambda_c(5));
        assert_eq!(idempotents(&c5).len(), 5);

        let lam4 = lambda_c(4);
        let s4 = SemigroupTable::from_lambda(&lam4);
        let idem = idempotents(&s4);
        assert_eq!(idem.len(), 2);
        assert!(idem.contains(&lam4.principal_index(0)));
        assert!(idem.contains(&find_label(&lam4, "□")));

        // A group's only idempotent is its identity.
        let g = make_cyclic(6);
        let tbl = SemigroupTable::new(6, g.flat_table().to_vec(), None).unwrap();
        assert_eq!(idempotents(&tbl), vec![g.identity()]);
    }

    #[test]
    fn zeros() {
        let lam3 = lambda_c(3);
        let s3 = SemigroupTable::from_lambda(&lam3);
        assert_eq!(zero_element(&s3), Some(find_label(&lam3, "△")));

        let lam5 = lambda_c(5);
        let s5 = SemigroupTable::from_lambda(&lam5);
        assert_eq!(zero_element(&s5), Some(find_label(&lam5, "Z")));

        let s4 = SemigroupTable::from_lambda(&lambda_c(4));
        assert_eq!(zero_element(&s4), None);
    }

    #[test]
    fn poset_on_lambda_c4() {
        let lam = lambda_c(4);
        let s = SemigroupTable::from_lambda(&lam);
        let poset = idempotent_poset(&s).unwrap();
        let one = lam.principal_index(0);
        let sq = find_label(&lam, "□");
        assert!(poset.leq(sq, one));
        assert!(!poset.leq(one, sq));
        assert_eq!(poset.hasse_edges(), vec![(sq, one)]);
    }

    #[test]
    fn poset_rejects_noncommuting_idempotents() {
        // Left-zero semigroup: xy = x. Both elements idempotent, and
        // e∗f = e ≠ f = f∗e.
        let s = SemigroupTable::new(2, vec![0, 0, 1, 1], None).unwrap();
        assert!(matches!(
            idempotent_poset(&s),
            Err(Error::NotASemilattice { .. })
        ));
    }

    #[test]
    fn single_idempotent_poset() {
        let g = make_cyclic(3);
        let s = SemigroupTable::new(3, g.flat_table().to_vec(), None).unwrap();
        let poset = idempotent_poset(&s).unwrap();
        assert_eq!(poset.elements(), &[0]);
        assert!(poset.hasse_edges().is_empty());
        assert_eq!(poset.height(0), 0);
    }

    #[test]
    fn maximal_ideals() {
        // λ(C4): the 8 non-principal elements.
        let lam = lambda_c(4);
        let s = SemigroupTable::from_lambda(&lam);
        let ideal = maximal_ideal(&s).unwrap();
        assert_eq!(ideal.len(), 8);
        let principals: Vec<usize> = (0..4).map(|x| lam.principal_index(x)).collect();
        assert!(ideal.iter().all(|i| !principals.contains(i)));
        assert!(is_ideal(&s, &ideal));

        // A group has no proper ideal.
        let g = make_cyclic(4);
        let tbl = SemigroupTable::new(4, g.flat_table().to_vec(), None).unwrap();
        assert_eq!(maximal_ideal(&tbl), None);
    }

    #[test]
    fn orbits_of_lambda_c4() {
        let lam = lambda_c(4);
        let orbits = translation_orbits(&lam);
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.len() == 4));
    }

    #[test]
    fn orbit_semigroup_of_lambda_c4() {
        let lam = lambda_c(4);
        let q = orbit_semigroup(&lam).unwrap();
        assert_eq!(q.table.size(), 3);
        // Quotient labels name the canonical representatives.
        let labels: Vec<String> = (0..3).map(|i| q.table.label(i)).collect();
        for want in ["[1]", "[△]", "[□]"] {
            assert!(labels.iter().any(|l| l == want), "missing {want}");
        }
        // Trivial case.
        let lam1 = lambda_c(1);
        assert_eq!(orbit_semigroup(&lam1).unwrap().table.size(), 1);
    }

    #[test]
    fn transversal_check_on_lambda_c4() {
        let lam = lambda_c(4);
        let one = lam.principal_index(0);
        let tri = find_label(&lam, "△");
        let sq = find_label(&lam, "□");
        assert!(verify_transversal(&lam, &[one, tri, sq]));

        // Replacing □ by i□ breaks closure.
        let isq = find_label(&lam, "i□");
        assert!(!verify_transversal(&lam, &[one, tri, isq]));
        // Wrong cardinality.
        assert!(!verify_transversal(&lam, &[one, tri]));
    }

    #[test]
    fn transversal_on_lambda_klein() {
        let lam = build_lambda(klein4()).unwrap();
        let e = lam.principal_index(0);
        let tri = find_label(&lam, "△");
        let sq = find_label(&lam, "□");
        assert!(verify_transversal(&lam, &[e, tri, sq]));
    }

    #[test]
    fn transversal_search_small_quotients() {
        // λ(C3): quotient of two orbits; the only transversal is {1, △}.
        let lam3 = lambda_c(3);
        let found = find_transversal_semigroup(&lam3).unwrap().unwrap();
        assert!(verify_transversal(&lam3, &found));
        assert!(found.contains(&lam3.principal_index(0)));
        assert!(found.contains(&find_label(&lam3, "△")));

        // λ(C4) and λ(C2×C2): three orbits, {identity, △, □} works.
        for lam in [lambda_c(4), build_lambda(klein4()).unwrap()] {
            let found = find_transversal_semigroup(&lam).unwrap().unwrap();
            assert!(verify_transversal(&lam, &found));
        }

        let lam1 = lambda_c(1);
        assert_eq!(find_transversal_semigroup(&lam1).unwrap(), Some(vec![0]));

        // λ(C5) has 17 orbits: beyond the bounded search.
        let lam5 = lambda_c(5);
        assert!(matches!(
            find_transversal_semigroup(&lam5),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn sqrt_sets_in_groups() {
        let g = make_cyclic(4);
        let s = SemigroupTable::new(4, g.flat_table().to_vec(), None).unwrap();
        // Elements of order ≤ 2: 0 and 2.
        assert_eq!(sqrt_set(&s, &[g.identity()]), vec![0, 2]);
    }

    #[test]
    fn t17_requires_c5() {
        let lam = lambda_c(4);
        assert!(matches!(
            build_t17(&lam),
            Err(Error::NameResolutionFailure(_))
        ));
    }

    #[test]
    fn t17_table_spot_checks() {
        let lam = lambda_c(5);
        let t = build_t17(&lam).unwrap();
        assert_eq!(t.entry("Δ", "Λ4"), Some("Δ"));
        assert_eq!(t.entry("Γ", "Λ"), Some("Θ+1"));
        assert_eq!(t.entry("Δ", "2Λ"), Some("2Θ"));
        assert_eq!(t.entry("Λ4", "Λ"), Some("Λ"));
        assert_eq!(t.entry("Θ", "2Θ"), Some("Z"));
        assert_eq!(t.entry("U", "Γ"), Some("Γ"));
        assert_eq!(t.entry("Z", "Λ4"), Some("Z"));

        let csv = t.to_csv();
        assert!(csv.starts_with("*,U,Λ4,Λ,Δ"));
        assert_eq!(csv.lines().count(), 18);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_quote("plain"), "plain");
        assert_eq!(csv_quote("a,b"), "\"a,b\"");
        assert_eq!(csv_quote("q\"q"), "\"q\"\"q\"");
    }
}
