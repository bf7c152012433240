//! Permutation machinery for branched covers: ramification types, the
//! Riemann-Hurwitz feasibility gate, gluing-instruction validity checks, the
//! pruned backtracking search over conjugacy classes, and a built-in table of
//! known gluing instructions for small `(k, d)`.

mod search;
mod table;

pub use search::{find_gluing_instructions, naive_search_space_size, SearchOutcome, SearchParams};
pub use table::builtin_gluing_table;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..d}`, stored 0-based in one-line notation:
/// `images[i]` is the image of symbol `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its one-line image list (0-based).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || seen[x] {
                return Err(Error::InvalidPermutation {
                    detail: format!("images {:?} are not a bijection of 0..{}", images, d),
                });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for w in 0..cycle.len() {
                let a = cycle[w];
                let b = cycle[(w + 1) % cycle.len()];
                if a == 0 || a > degree || b == 0 || b > degree {
                    return Err(Error::InvalidPermutation {
                        detail: format!("cycle symbol out of range 1..{}", degree),
                    });
                }
                if touched[a - 1] {
                    return Err(Error::InvalidPermutation {
                        detail: format!("symbol {} appears in two cycles", a),
                    });
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Composition in application order: `(a.then(b))(x) = b(a(x))`.
    ///
    /// Product-one tuples multiply in this order: sigma_1 acts first.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    /// Conjugate `g^-1 * self * g` in application order, i.e. the permutation
    /// sending `g(x)` to `g(self(x))`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for x in 0..self.images.len() {
            images[g.images[x]] = g.images[self.images[x]];
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        for x in 0..self.images.len() {
            if other.images[self.images[x]] != self.images[other.images[x]] {
                return false;
            }
        }
        true
    }

    /// Cycles in canonical order: each cycle starts at its smallest symbol,
    /// cycles sorted by their smallest symbol. Symbols are 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.images.len();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Number of points moved by the permutation.
    pub fn support_size(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &x)| *i != x).count()
    }

    /// Parses cycle notation, e.g. `(1)(2)(3 4 5)` or `(1,2,3)`. Symbols are
    /// 1-based. Fixed points may be omitted; `degree` supplies the full
    /// symbol range (pass `None` to use the largest symbol mentioned).
    pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Permutation> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut max_symbol = 0usize;
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(Error::InvalidPermutation {
                detail: "empty permutation text".into(),
            });
        }
        while !rest.is_empty() {
            let Some(open) = rest.find('(') else {
                return Err(Error::InvalidPermutation {
                    detail: format!("expected '(' in {:?}", text),
                });
            };
            let Some(close_rel) = rest[open..].find(')') else {
                return Err(Error::InvalidPermutation {
                    detail: format!("unclosed cycle in {:?}", text),
                });
            };
            let body = &rest[open + 1..open + close_rel];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let sym: usize = tok.parse().map_err(|_| Error::InvalidPermutation {
                    detail: format!("bad symbol {:?} in {:?}", tok, text),
                })?;
                if sym == 0 {
                    return Err(Error::InvalidPermutation {
                        detail: "cycle symbols are 1-based".into(),
                    });
                }
                max_symbol = max_symbol.max(sym);
                cycle.push(sym);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[open + close_rel + 1..].trim_start();
        }
        let d = match degree {
            Some(d) => {
                if max_symbol > d {
                    return Err(Error::InvalidPermutation {
                        detail: format!("symbol {} exceeds degree {}", max_symbol, d),
                    });
                }
                d
            }
            None => max_symbol,
        };
        Permutation::from_cycles(d, &cycles)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based symbols; fixed points are always printed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (i, s) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", s + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Multiset of cycle lengths (fixed points included), sorted ascending.
pub fn cycle_type(p: &Permutation) -> Vec<usize> {
    let mut lens: Vec<usize> = p.cycles().iter().map(|c| c.len()).collect();
    lens.sort_unstable();
    lens
}

/// A ramification type: one multiset of ramification indices per branch
/// point, each summing to the cover degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RamificationType {
    structures: Vec<Vec<usize>>,
    degree: usize,
}

impl RamificationType {
    pub fn new(structures: Vec<Vec<usize>>, degree: usize) -> Result<Self> {
        if structures.is_empty() || degree == 0 {
            return Err(Error::InvalidRamification {
                detail: "need k >= 1 branch points and degree >= 1".into(),
            });
        }
        let mut sorted = structures;
        for s in &mut sorted {
            if s.iter().any(|&r| r == 0) {
                return Err(Error::InvalidRamification {
                    detail: "ramification indices must be positive".into(),
                });
            }
            let sum: usize = s.iter().sum();
            if sum != degree {
                return Err(Error::InvalidRamification {
                    detail: format!("structure {:?} sums to {}, expected degree {}", s, sum, degree),
                });
            }
            s.sort_unstable();
        }
        Ok(RamificationType {
            structures: sorted,
            degree,
        })
    }

    pub fn branch_count(&self) -> usize {
        self.structures.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Sorted multiset of ramification indices over branch point `i`.
    pub fn structure(&self, i: usize) -> &[usize] {
        &self.structures[i]
    }

    pub fn structures(&self) -> &[Vec<usize>] {
        &self.structures
    }

    /// Parses the nested-list notation `[[1,1,3],[1,1,3],...]`.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidRamification {
                detail: format!("expected [[..],[..]], got {:?}", text),
            })?;
        let mut structures = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let open = rest.find('[').ok_or_else(|| Error::InvalidRamification {
                detail: format!("expected '[' in {:?}", text),
            })?;
            let close = rest[open..].find(']').ok_or_else(|| Error::InvalidRamification {
                detail: format!("unclosed '[' in {:?}", text),
            })? + open;
            let body = &rest[open + 1..close];
            let mut s = Vec::new();
            for tok in body.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                s.push(tok.parse::<usize>().map_err(|_| Error::InvalidRamification {
                    detail: format!("bad index {:?}", tok),
                })?);
            }
            structures.push(s);
            rest = rest[close + 1..].trim_start_matches(|c: char| c == ',' || c.is_whitespace());
        }
        let d = degree.unwrap_or_else(|| structures.first().map(|s| s.iter().sum()).unwrap_or(0));
        RamificationType::new(structures, d)
    }
}

impl fmt::Display for RamificationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.structures.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, r) in s.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", r)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for RamificationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (d={})", self, self.degree)
    }
}

/// Riemann-Hurwitz gate for a torus covering a sphere:
/// `sum_i sum_j (r_ij - 1) = 2d`.
pub fn check_rh(rho: &RamificationType) -> bool {
    let lhs: usize = rho
        .structures
        .iter()
        .map(|s| s.iter().map(|&r| r - 1).sum::<usize>())
        .sum();
    lhs == 2 * rho.degree
}

/// The two sides of the Riemann-Hurwitz equation, for diagnostics.
pub fn rh_sides(rho: &RamificationType) -> (usize, usize) {
    let lhs: usize = rho
        .structures
        .iter()
        .map(|s| s.iter().map(|&r| r - 1).sum::<usize>())
        .sum();
    (lhs, 2 * rho.degree)
}

/// Builds the uniform type `[[1^(d-r), r]]^k` and reports whether the
/// reduced feasibility equation `k(r-1) = 2d` holds.
pub fn uniform_ramification(k: usize, r: usize, d: usize) -> Result<(RamificationType, bool)> {
    if r > d {
        return Err(Error::InvalidRamification {
            detail: format!("multiplicity r={} exceeds degree d={}", r, d),
        });
    }
    let mut s = vec![1usize; d - r];
    s.push(r);
    let rho = RamificationType::new(vec![s; k], d)?;
    Ok((rho, k * (r.saturating_sub(1)) == 2 * d))
}

/// A tuple of gluing permutations, one per branch point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GluingInstructions {
    sigmas: Vec<Permutation>,
}

impl GluingInstructions {
    /// Wraps a raw tuple without validity checks; use
    /// [`check_gluing_conditions`] to verify it against a type.
    pub fn new(sigmas: Vec<Permutation>) -> Result<Self> {
        if sigmas.is_empty() {
            return Err(Error::InvalidPermutation {
                detail: "empty gluing tuple".into(),
            });
        }
        let d = sigmas[0].degree();
        if sigmas.iter().any(|s| s.degree() != d) {
            return Err(Error::DegreeMismatch {
                degrees: sigmas.iter().map(|s| s.degree()).collect(),
            });
        }
        Ok(GluingInstructions { sigmas })
    }

    pub fn degree(&self) -> usize {
        self.sigmas[0].degree()
    }

    pub fn branch_count(&self) -> usize {
        self.sigmas.len()
    }

    pub fn sigma(&self, i: usize) -> &Permutation {
        &self.sigmas[i]
    }

    pub fn sigmas(&self) -> &[Permutation] {
        &self.sigmas
    }

    /// Serializes as one permutation per line in cycle notation; fixed
    /// points are always printed, so the text determines the degree.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sigmas {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the line format of [`to_text`](Self::to_text). Fixed points may
    /// be omitted on input when `degree` is given.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let d = match degree {
            Some(d) => d,
            None => {
                let mut max_sym = 0usize;
                for l in &lines {
                    let p = Permutation::parse_cycles(l, None)?;
                    max_sym = max_sym.max(p.degree());
                }
                max_sym
            }
        };
        let sigmas = lines
            .iter()
            .map(|l| Permutation::parse_cycles(l, Some(d)))
            .collect::<Result<Vec<_>>>()?;
        GluingInstructions::new(sigmas)
    }

    /// Product in application order, `sigma_1 * sigma_2 * ... * sigma_k`.
    pub fn product(&self) -> Permutation {
        let mut p = Permutation::identity(self.degree());
        for s in &self.sigmas {
            p = p.then(s);
        }
        p
    }

    /// Conjugates every member by `g` simultaneously.
    pub fn conjugate_by(&self, g: &Permutation) -> GluingInstructions {
        GluingInstructions {
            sigmas: self.sigmas.iter().map(|s| s.conjugate_by(g)).collect(),
        }
    }
}

impl fmt::Debug for GluingInstructions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.sigmas.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", s)?;
        }
        write!(f, "}}")
    }
}

/// Whether the group generated by the permutations acts transitively on the
/// symbols. Union-find over the cycle edges of all generators.
pub fn is_transitive(perms: &[Permutation]) -> bool {
    if perms.is_empty() {
        return false;
    }
    let d = perms[0].degree();
    if d == 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = d;
    for p in perms {
        for x in 0..d {
            let a = find(&mut parent, x);
            let b = find(&mut parent, p.apply(x));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    components == 1
}

/// Per-condition verdicts for a candidate gluing tuple against a
/// ramification type (the three conditions that characterize valid covers).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingCheck {
    /// Cycle type of sigma_i equals the i-th ramification structure.
    pub cycle_types_ok: bool,
    /// Index of the first mismatching structure, when cycle types fail.
    pub first_mismatch: Option<usize>,
    /// Ordered product sigma_1 * ... * sigma_k is the identity.
    pub product_one: bool,
    /// The generated group is transitive.
    pub transitive: bool,
}

impl GluingCheck {
    pub fn ok(&self) -> bool {
        self.cycle_types_ok && self.product_one && self.transitive
    }
}

impl fmt::Display for GluingCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cycle types: {}, product one: {}, transitive: {}",
            if self.cycle_types_ok { "ok" } else { "FAIL" },
            if self.product_one { "ok" } else { "FAIL" },
            if self.transitive { "ok" } else { "FAIL" },
        )
    }
}

/// Checks the three validity conditions for gluing instructions. This does
/// not include the Riemann-Hurwitz gate: a tuple may pass all three while
/// `rho` fails RH, in which case the glued surface is not a torus.
pub fn check_gluing_conditions(sigma: &GluingInstructions, rho: &RamificationType) -> Result<GluingCheck> {
    if sigma.degree() != rho.degree() {
        return Err(Error::DegreeMismatch {
            degrees: vec![sigma.degree(), rho.degree()],
        });
    }
    let mut cycle_types_ok = sigma.branch_count() == rho.branch_count();
    let mut first_mismatch = if cycle_types_ok { None } else { Some(0) };
    if cycle_types_ok {
        for i in 0..sigma.branch_count() {
            if cycle_type(sigma.sigma(i)) != rho.structure(i) {
                cycle_types_ok = false;
                first_mismatch = Some(i);
                break;
            }
        }
    }
    Ok(GluingCheck {
        cycle_types_ok,
        first_mismatch,
        product_one: sigma.product().is_identity(),
        transitive: is_transitive(sigma.sigmas()),
    })
}

/// All permutations of `S_d` with the given cycle type, sorted
/// lexicographically by one-line notation.
pub fn conjugacy_class(degree: usize, class_type: &[usize]) -> Vec<Permutation> {
    let total: usize = class_type.iter().sum();
    assert_eq!(total, degree, "cycle type must partition the degree");
    // Count available cycle lengths.
    let mut length_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &l in class_type {
        *length_counts.entry(l).or_insert(0) += 1;
    }
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut out = Vec::new();
    build_class(&mut images, &mut used, &mut length_counts, degree, &mut out);
    out.sort_unstable();
    out
}

// Recursive construction: the smallest unused symbol starts a cycle of each
// still-available length; the rest of its cycle is any ordered arrangement of
// unused symbols. Enumerates each member of the class exactly once.
fn build_class(
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    length_counts: &mut BTreeMap<usize, usize>,
    remaining: usize,
    out: &mut Vec<Permutation>,
) {
    if remaining == 0 {
        out.push(Permutation {
            images: images.clone(),
        });
        return;
    }
    let start = used.iter().position(|&u| !u).unwrap();
    used[start] = true;
    let lengths: Vec<usize> = length_counts
        .iter()
        .filter(|&(_, &c)| c > 0)
        .map(|(&l, _)| l)
        .collect();
    for len in lengths {
        *length_counts.get_mut(&len).unwrap() -= 1;
        let mut cycle = vec![start];
        extend_cycle(images, used, length_counts, remaining, len, &mut cycle, out);
        *length_counts.get_mut(&len).unwrap() += 1;
    }
    used[start] = false;
}

fn extend_cycle(
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    length_counts: &mut BTreeMap<usize, usize>,
    remaining: usize,
    target_len: usize,
    cycle: &mut Vec<usize>,
    out: &mut Vec<Permutation>,
) {
    if cycle.len() == target_len {
        // Close the cycle and recurse for the rest of the symbols.
        for w in 0..cycle.len() {
            images[cycle[w]] = cycle[(w + 1) % cycle.len()];
        }
        build_class(images, used, length_counts, remaining - target_len, out);
        for &c in cycle.iter() {
            images[c] = c;
        }
        return;
    }
    for next in 0..used.len() {
        if used[next] || next == cycle[0] {
            continue;
        }
        used[next] = true;
        cycle.push(next);
        extend_cycle(images, used, length_counts, remaining, target_len, cycle, out);
        cycle.pop();
        used[next] = false;
    }
}

/// The centralizer of `p` in `S_d`, built directly from the cycle structure:
/// elements permute equal-length cycles and rotate within each cycle.
pub fn centralizer(p: &Permutation) -> Vec<Permutation> {
    let d = p.degree();
    let cycles = p.cycles();
    let mut by_len: BTreeMap<usize, Vec<&Vec<usize>>> = BTreeMap::new();
    for c in &cycles {
        by_len.entry(c.len()).or_default().push(c);
    }
    let mut out: Vec<Permutation> = vec![Permutation::identity(d)];
    for (len, group) in &by_len {
        let assignments = permutations_of(group.len());
        let mut next = Vec::new();
        for base in &out {
            for assign in &assignments {
                // Rotation offsets for each mapped cycle.
                let mut offsets = vec![0usize; group.len()];
                loop {
                    let mut images = base.images.clone();
                    for (ci, cycle) in group.iter().enumerate() {
                        let target = group[assign[ci]];
                        for (w, &sym) in cycle.iter().enumerate() {
                            images[sym] = target[(w + offsets[ci]) % len];
                        }
                    }
                    next.push(Permutation { images });
                    // Odometer over rotation offsets.
                    let mut carry = 0;
                    loop {
                        if carry == group.len() {
                            break;
                        }
                        offsets[carry] += 1;
                        if offsets[carry] < *len {
                            break;
                        }
                        offsets[carry] = 0;
                        carry += 1;
                    }
                    if carry == group.len() {
                        break;
                    }
                }
            }
        }
        out = next;
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Centralizer of a set: elements of `centralizer(first)` commuting with the
/// rest.
pub fn joint_centralizer(perms: &[Permutation]) -> Vec<Permutation> {
    assert!(!perms.is_empty());
    centralizer(&perms[0])
        .into_iter()
        .filter(|z| perms[1..].iter().all(|p| z.commutes_with(p)))
        .collect()
}

fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permutations(&mut cur, n, &mut out);
    out
}

fn heap_permutations(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(cur, k - 1, out);
        if k % 2 == 0 {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

/// Lexicographically smallest tuple over the simultaneous-conjugation orbit.
/// Cost grows as d!, intended for small degrees in tests and dedup.
pub fn canonical_form(tuple: &GluingInstructions) -> GluingInstructions {
    let d = tuple.degree();
    let mut best: Option<GluingInstructions> = None;
    let mut images: Vec<usize> = (0..d).collect();
    let mut all = Vec::new();
    heap_permutations(&mut images, d, &mut all);
    for imgs in all {
        let g = Permutation { images: imgs };
        let cand = tuple.conjugate_by(&g);
        match &best {
            Some(b) if cand.sigmas >= b.sigmas => {}
            _ => best = Some(cand),
        }
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str, d: usize) -> Permutation {
        Permutation::parse_cycles(text, Some(d)).unwrap()
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(cycle_type(&Permutation::identity(5)), vec![1, 1, 1, 1, 1]);
        assert_eq!(cycle_type(&perm("(1)(2)(3 4 5)", 5)), vec![1, 1, 3]);
        assert_eq!(cycle_type(&perm("(1 2)(3 4)", 4)), vec![2, 2]);
    }

    #[test]
    fn rh_examples() {
        let rho = RamificationType::new(vec![vec![2]; 4], 2).unwrap();
        assert!(check_rh(&rho));
        let rho = RamificationType::new(vec![vec![2]; 2], 2).unwrap();
        assert!(!check_rh(&rho));
        assert_eq!(rh_sides(&rho), (2, 4));
        let rho = RamificationType::new(vec![vec![1, 1, 3]; 5], 5).unwrap();
        assert!(check_rh(&rho));
    }

    #[test]
    fn uniform_types() {
        let (rho, ok) = uniform_ramification(6, 2, 3).unwrap();
        assert!(ok);
        assert_eq!(rho.structures(), &[vec![1, 2]; 6][..]);
        let (rho, ok) = uniform_ramification(5, 5, 10).unwrap();
        assert!(ok);
        assert_eq!(rho.structure(0), &[1, 1, 1, 1, 1, 5]);
        let (rho, ok) = uniform_ramification(4, 3, 4).unwrap();
        assert!(ok);
        assert_eq!(rho.structure(0), &[1, 3]);
        assert!(uniform_ramification(3, 4, 3).is_err());
    }

    #[test]
    fn product_convention_matches_worked_example() {
        // The k=5, d=5 example tuple: product in application order is the
        // identity, each member has cycle type [1,1,3], and the group is
        // transitive.
        let tuple = GluingInstructions::parse(
            "(1)(2)(3 4 5)\n(1)(4)(2 3 5)\n(3)(4)(1 5 2)\n(3)(4)(1 2 5)\n(1)(5)(2 4 3)\n",
            Some(5),
        )
        .unwrap();
        let rho = RamificationType::new(vec![vec![1, 1, 3]; 5], 5).unwrap();
        let check = check_gluing_conditions(&tuple, &rho).unwrap();
        assert!(check.ok(), "{}", check);
    }

    #[test]
    fn gluing_check_flags_rh_separately() {
        // {(1 2), (1 2)} passes (i)-(iii) but the type fails RH.
        let tuple = GluingInstructions::parse("(1 2)\n(1 2)\n", Some(2)).unwrap();
        let rho = RamificationType::new(vec![vec![2]; 2], 2).unwrap();
        let check = check_gluing_conditions(&tuple, &rho).unwrap();
        assert!(check.ok());
        assert!(!check_rh(&rho));
    }

    #[test]
    fn parse_display_roundtrip() {
        let p = perm("(1 2)(3 4 5)", 6);
        assert_eq!(p.to_string(), "(1 2)(3 4 5)(6)");
        let q = Permutation::parse_cycles(&p.to_string(), None).unwrap();
        assert_eq!(p, q);
        // Comma-separated input as in published tables.
        let r = Permutation::parse_cycles("(1,2)(3,4,5)", Some(6)).unwrap();
        assert_eq!(p, r);
    }

    #[test]
    fn conjugacy_class_sizes() {
        // |C| = d! / prod(l^m_l * m_l!)
        assert_eq!(conjugacy_class(3, &[3]).len(), 2);
        assert_eq!(conjugacy_class(4, &[1, 3]).len(), 8);
        assert_eq!(conjugacy_class(4, &[2, 2]).len(), 3);
        assert_eq!(conjugacy_class(5, &[1, 1, 3]).len(), 20);
        for p in conjugacy_class(5, &[1, 1, 3]) {
            assert_eq!(cycle_type(&p), vec![1, 1, 3]);
        }
    }

    #[test]
    fn centralizer_sizes_and_membership() {
        let p = perm("(1 2 3)", 5);
        let z = centralizer(&p);
        // 3 * 1! * 1^2 * 2! = 6
        assert_eq!(z.len(), 6);
        for g in &z {
            assert!(g.commutes_with(&p));
        }
        // Brute force agreement on S_4.
        let q = perm("(1 2)(3 4)", 4);
        let z = centralizer(&q);
        let mut brute = Vec::new();
        let mut images: Vec<usize> = (0..4).collect();
        let mut all = Vec::new();
        super::heap_permutations(&mut images, 4, &mut all);
        for imgs in all {
            let g = Permutation::from_images(imgs).unwrap();
            if g.commutes_with(&q) {
                brute.push(g);
            }
        }
        brute.sort_unstable();
        assert_eq!(z, brute);
    }

    #[test]
    fn transitivity() {
        assert!(is_transitive(&[perm("(1 2 3)", 3)]));
        assert!(!is_transitive(&[perm("(1 2)", 4), perm("(3 4)", 4)]));
        assert!(is_transitive(&[perm("(1 2)", 4), perm("(2 3)", 4), perm("(3 4)", 4)]));
    }

    #[test]
    fn canonical_form_identifies_conjugate_tuples() {
        let t1 = GluingInstructions::parse("(1 2 3)\n(1 2 3)\n(1 2 3)\n", Some(3)).unwrap();
        let g = perm("(1 3)", 3);
        let t2 = t1.conjugate_by(&g);
        assert_ne!(t1, t2);
        assert_eq!(canonical_form(&t1), canonical_form(&t2));
    }
}
