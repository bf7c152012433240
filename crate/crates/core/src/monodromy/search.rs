//! Backtracking search for gluing instructions with prescribed cycle types.
//!
//! The search walks conjugacy classes `C_1 x ... x C_(k-1)` depth first; the
//! last permutation is forced to the inverse of the prefix product and only
//! its cycle type is checked. Visited candidates are pruned by removing the
//! whole conjugation orbit under the centralizer of the prefix: replacing
//! `sigma_i` by `z sigma_i z^-1` for `z` commuting with the prefix yields a
//! simultaneously-conjugate solution set, so one representative per orbit
//! suffices.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use super::{
    check_rh, conjugacy_class, cycle_type, rh_sides, GluingInstructions, Permutation,
    RamificationType,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SearchParams {
    /// Stop after this many solutions (the tree is explored in a fixed
    /// lexicographic order, so the prefix found is deterministic).
    pub max_solutions: usize,
    /// Wall-clock budget; on expiry the partial result is flagged.
    pub time_budget: Duration,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            max_solutions: usize::MAX,
            time_budget: Duration::from_secs(300),
        }
    }
}

impl SearchParams {
    pub fn first_solution() -> Self {
        SearchParams {
            max_solutions: 1,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub solutions: Vec<GluingInstructions>,
    /// True when the pruned tree was fully explored: an empty solution list
    /// then proves no cover of this type exists. False when the search
    /// stopped early (budget or max_solutions), so absence is inconclusive.
    pub exhausted: bool,
    /// Nodes visited, for diagnostics.
    pub nodes: u64,
}

/// Size of the unpruned candidate space `|C_1| * ... * |C_(k-1)|`.
pub fn naive_search_space_size(rho: &RamificationType) -> u128 {
    let d = rho.degree();
    (0..rho.branch_count().saturating_sub(1))
        .map(|i| class_size(d, rho.structure(i)))
        .product()
}

fn class_size(d: usize, class_type: &[usize]) -> u128 {
    let mut counts: HashMap<usize, u128> = HashMap::new();
    for &l in class_type {
        *counts.entry(l).or_insert(0) += 1;
    }
    let fact = |n: u128| (1..=n).product::<u128>();
    let mut denom = 1u128;
    for (&l, &m) in &counts {
        denom *= (l as u128).pow(m as u32) * fact(m);
    }
    fact(d as u128) / denom
}

struct Ctx {
    degree: usize,
    k: usize,
    rho: RamificationType,
    /// Conjugacy classes for slots 0..k-1, each lexicographically sorted.
    classes: Vec<Vec<Permutation>>,
    /// One-line-notation index into each class, for orbit marking.
    class_index: Vec<HashMap<Vec<usize>, usize>>,
    /// suffix_moved[i]: max points the product of slots i..k can move.
    suffix_moved: Vec<usize>,
    /// suffix_merge[i]: max orbit merges the free slots i..k-2 can perform.
    suffix_merge: Vec<usize>,
    deadline: Instant,
    max_solutions: usize,
    solutions: Vec<GluingInstructions>,
    nodes: u64,
    expired: bool,
}

/// Searches for all gluing instructions of type `rho`, up to simultaneous
/// conjugation. Requires `rho` to pass the Riemann-Hurwitz gate.
pub fn find_gluing_instructions(rho: &RamificationType, params: &SearchParams) -> Result<SearchOutcome> {
    if !check_rh(rho) {
        let (lhs, rhs) = rh_sides(rho);
        return Err(Error::RhInfeasible { lhs, rhs });
    }
    let d = rho.degree();
    let k = rho.branch_count();
    let classes: Vec<Vec<Permutation>> = (0..k.saturating_sub(1))
        .map(|i| conjugacy_class(d, rho.structure(i)))
        .collect();
    let class_index: Vec<HashMap<Vec<usize>, usize>> = classes
        .iter()
        .map(|c| {
            c.iter()
                .enumerate()
                .map(|(i, p)| (p.images().to_vec(), i))
                .collect()
        })
        .collect();
    let moved: Vec<usize> = (0..k)
        .map(|i| d - rho.structure(i).iter().filter(|&&r| r == 1).count())
        .collect();
    let merge: Vec<usize> = (0..k).map(|i| d - rho.structure(i).len()).collect();
    let mut suffix_moved = vec![0usize; k + 1];
    for i in (0..k).rev() {
        suffix_moved[i] = suffix_moved[i + 1] + moved[i];
    }
    // Only free slots (up to k-2) contribute to transitivity merges; the last
    // permutation lies in the group generated by the prefix.
    let mut suffix_merge = vec![0usize; k + 1];
    for i in (0..k.saturating_sub(1)).rev() {
        suffix_merge[i] = suffix_merge[i + 1] + merge[i];
    }

    let mut ctx = Ctx {
        degree: d,
        k,
        rho: rho.clone(),
        classes,
        class_index,
        suffix_moved,
        suffix_merge,
        deadline: Instant::now() + params.time_budget,
        max_solutions: params.max_solutions,
        solutions: Vec::new(),
        nodes: 0,
        expired: false,
    };

    if k == 1 {
        // A single branch point: sigma_1 must be the identity, which never
        // passes RH for d >= 1; unreachable behind the gate.
        return Ok(SearchOutcome {
            solutions: Vec::new(),
            exhausted: true,
            nodes: 0,
        });
    }

    // Any first representative works: conjugating sigma_1 over the full
    // symmetric group reaches the whole class.
    let sigma1 = ctx.classes[0][0].clone();
    let centr1 = super::centralizer(&sigma1);
    let product = sigma1.clone();
    let mut orbits = DisjointSets::new(d);
    for (x, &y) in sigma1.images().iter().enumerate() {
        orbits.union(x, y);
    }
    let mut prefix = vec![sigma1];
    descend(&mut ctx, &mut prefix, &product, &centr1, &orbits);

    let truncated = ctx.solutions.len() >= ctx.max_solutions;
    Ok(SearchOutcome {
        exhausted: !ctx.expired && !truncated,
        solutions: ctx.solutions,
        nodes: ctx.nodes,
    })
}

fn descend(
    ctx: &mut Ctx,
    prefix: &mut Vec<Permutation>,
    product: &Permutation,
    prefix_centralizer: &[Permutation],
    orbits: &DisjointSets,
) {
    if ctx.solutions.len() >= ctx.max_solutions || ctx.expired {
        return;
    }
    ctx.nodes += 1;
    if ctx.nodes % 4096 == 0 && Instant::now() > ctx.deadline {
        ctx.expired = true;
        return;
    }
    let i = prefix.len();
    if i == ctx.k - 1 {
        // The last slot is determined by the product-one condition.
        let last = product.inverse();
        if cycle_type(&last) != ctx.rho.structure(ctx.k - 1) {
            return;
        }
        if orbits.components() != 1 {
            return;
        }
        let mut sigmas = prefix.clone();
        sigmas.push(last);
        ctx.solutions
            .push(GluingInstructions::new(sigmas).expect("degrees match"));
        return;
    }
    // Feasibility prunes on the partial product and the orbit count.
    if product.support_size() > ctx.suffix_moved[i] {
        return;
    }
    if orbits.components() - 1 > ctx.suffix_merge[i] {
        return;
    }
    let class_len = ctx.classes[i].len();
    let mut pruned = vec![false; class_len];
    for idx in 0..class_len {
        if pruned[idx] {
            continue;
        }
        if ctx.solutions.len() >= ctx.max_solutions || ctx.expired {
            return;
        }
        let cand = ctx.classes[i][idx].clone();
        // Remove the whole conjugation orbit of the candidate under the
        // prefix centralizer: those lead to simultaneously-conjugate tuples.
        for z in prefix_centralizer {
            let conj = cand.conjugate_by(z);
            if let Some(&j) = ctx.class_index[i].get(conj.images()) {
                pruned[j] = true;
            }
        }
        let new_product = product.then(&cand);
        let mut new_orbits = orbits.clone();
        for (x, &y) in cand.images().iter().enumerate() {
            new_orbits.union(x, y);
        }
        let new_centralizer: Vec<Permutation> = prefix_centralizer
            .iter()
            .filter(|z| z.commutes_with(&cand))
            .cloned()
            .collect();
        prefix.push(cand);
        descend(ctx, prefix, &new_product, &new_centralizer, &new_orbits);
        prefix.pop();
    }
}

#[derive(Clone)]
struct DisjointSets {
    parent: Vec<usize>,
    components: usize,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }

    fn components(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::{canonical_form, check_gluing_conditions, uniform_ramification};

    #[test]
    fn all_solutions_valid() {
        for (k, r, d) in [(4, 2, 2), (3, 3, 3), (4, 3, 4), (6, 2, 3)] {
            let (rho, ok) = uniform_ramification(k, r, d).unwrap();
            assert!(ok);
            let outcome = find_gluing_instructions(&rho, &SearchParams::default()).unwrap();
            assert!(outcome.exhausted);
            assert!(!outcome.solutions.is_empty(), "no solution for k={k} r={r} d={d}");
            for sol in &outcome.solutions {
                assert!(check_gluing_conditions(sol, &rho).unwrap().ok());
            }
        }
    }

    #[test]
    fn transposition_cover_has_unique_class() {
        // [[2]]^4 at d=2: S_2 has a single transposition, so all candidate
        // tuples are {(1 2)}^4 and exactly one class survives.
        let (rho, _) = uniform_ramification(4, 2, 2).unwrap();
        let outcome = find_gluing_instructions(&rho, &SearchParams::default()).unwrap();
        let mut canon: Vec<_> = outcome.solutions.iter().map(canonical_form).collect();
        canon.sort();
        canon.dedup();
        assert_eq!(canon.len(), 1);
        let expected = GluingInstructions::parse("(1 2)\n(1 2)\n(1 2)\n(1 2)\n", Some(2)).unwrap();
        assert_eq!(canon[0], canonical_form(&expected));
    }

    #[test]
    fn rh_infeasible_is_an_error() {
        let rho = RamificationType::new(vec![vec![2]; 2], 2).unwrap();
        match find_gluing_instructions(&rho, &SearchParams::default()) {
            Err(Error::RhInfeasible { lhs: 2, rhs: 4 }) => {}
            other => panic!("expected RH error, got {:?}", other.map(|o| o.solutions.len())),
        }
    }

    #[test]
    fn worked_example_found_up_to_conjugation() {
        let (rho, _) = uniform_ramification(5, 3, 5).unwrap();
        let outcome = find_gluing_instructions(&rho, &SearchParams::default()).unwrap();
        assert!(outcome.exhausted);
        let published = GluingInstructions::parse(
            "(3 4 5)\n(2 3 5)\n(1 5 2)\n(1 2 5)\n(2 4 3)\n",
            Some(5),
        )
        .unwrap();
        let target = canonical_form(&published);
        assert!(
            outcome
                .solutions
                .iter()
                .any(|s| canonical_form(s) == target),
            "published tuple not in the {} solutions",
            outcome.solutions.len()
        );
    }
}
