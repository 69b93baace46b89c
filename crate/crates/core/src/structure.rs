//! Frobenius and 2-Frobenius detection, the prime-power codegree predicate,
//! and isomorphism testing for small groups.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::classes::ConjugacyData;
use crate::codegree::CodegreeRecord;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::normal::NormalSubgroups;

/// Largest order [`is_isomorphic`] accepts.
pub const ISOMORPHISM_BOUND: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusWitness {
    pub kernel: Subgroup,
    pub complement: Subgroup,
}

/// Normal chain `1 < k < l < G` with `l` Frobenius with kernel `k` and
/// `G/k` Frobenius with kernel `l/k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFrobeniusWitness {
    pub k: Subgroup,
    pub l: Subgroup,
}

/// `C_G(x) <= n` for every nonidentity `x` in `n`, with `g` ranging over
/// `ambient`.
fn centralizers_inside(g: &FiniteGroup, n: &Subgroup, ambient: &[usize]) -> bool {
    n.members().iter().skip(1).all(|&x| {
        ambient
            .iter()
            .all(|&y| n.contains(y) || g.mul(x, y) != g.mul(y, x))
    })
}

/// Subgroup of the given order meeting `n` trivially, built from elements
/// whose order divides `order`.
fn find_complement(g: &FiniteGroup, n: &Subgroup, order: usize) -> Option<Subgroup> {
    let candidates: Vec<usize> = (1..g.order())
        .filter(|&x| !n.contains(x) && order % g.element_order(x) == 0)
        .collect();
    fn search(
        g: &FiniteGroup,
        n: &Subgroup,
        order: usize,
        candidates: &[usize],
        gens: &mut Vec<usize>,
        current: &Subgroup,
    ) -> Option<Subgroup> {
        if current.order() == order {
            return Some(current.clone());
        }
        // Generators are taken in increasing index order.
        let start = gens.last().map_or(0, |&last| candidates.partition_point(|&c| c <= last));
        for &x in &candidates[start..] {
            if current.contains(x) {
                continue;
            }
            gens.push(x);
            let next = g.subgroup_generated(gens);
            if order % next.order() == 0 && next.intersection(n).is_trivial() {
                if let Some(found) = search(g, n, order, candidates, gens, &next) {
                    return Some(found);
                }
            }
            gens.pop();
        }
        None
    }
    search(g, n, order, &candidates, &mut Vec::new(), &g.trivial_subgroup())
}

/// Frobenius kernel by the centralizer criterion, with a complement found
/// by search. The smallest qualifying kernel is reported.
pub fn frobenius_witness(g: &FiniteGroup, normals: &NormalSubgroups) -> Option<FrobeniusWitness> {
    // A kernel element would be centralized by all of G.
    if g.is_abelian() {
        return None;
    }
    let everything: Vec<usize> = (0..g.order()).collect();
    for n in normals.proper_nontrivial() {
        let index = g.order() / n.order();
        if arith::gcd(n.order() as u64, index as u64) != 1 {
            continue;
        }
        if !centralizers_inside(g, n, &everything) {
            continue;
        }
        if let Some(complement) = find_complement(g, n, index) {
            return Some(FrobeniusWitness {
                kernel: n.clone(),
                complement,
            });
        }
    }
    None
}

pub fn two_frobenius_witness(g: &FiniteGroup, normals: &NormalSubgroups) -> Option<TwoFrobeniusWitness> {
    // The middle term l would be an abelian Frobenius group.
    if g.is_abelian() {
        return None;
    }
    let proper: Vec<&Subgroup> = normals.proper_nontrivial().collect();
    for (i, k) in proper.iter().enumerate() {
        for l in &proper[i + 1..] {
            if l.order() == k.order() || l.order() % k.order() != 0 {
                continue;
            }
            let lower = l.order() / k.order();
            let upper = g.order() / l.order();
            if arith::gcd(k.order() as u64, lower as u64) != 1
                || arith::gcd(lower as u64, upper as u64) != 1
                || !k.is_subset_of(l)
            {
                continue;
            }
            if !centralizers_inside(g, k, l.members()) {
                continue;
            }
            // In G/k: commuting with x modulo k forces membership in l.
            let top_ok = l.members().iter().filter(|&&x| !k.contains(x)).all(|&x| {
                (0..g.order()).all(|y| l.contains(y) || !k.contains(g.commutator(x, y)))
            });
            if top_ok {
                return Some(TwoFrobeniusWitness {
                    k: (*k).clone(),
                    l: (*l).clone(),
                });
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimePowerPredicate {
    /// Every nonprincipal codegree is a prime power.
    pub all_prime_powers: bool,
    /// `G` is a p-group, or Frobenius with exactly two prime divisors.
    pub rhs: bool,
    pub agree: bool,
}

pub fn prime_power_codegree_predicate(
    g: &FiniteGroup,
    frobenius: Option<&FrobeniusWitness>,
    records: &[CodegreeRecord],
) -> PrimePowerPredicate {
    let all_prime_powers = records.iter().filter(|r| r.row != 0).all(CodegreeRecord::is_prime_power);
    let n = g.order() as u64;
    let rhs = arith::prime_power_base(n).is_some()
        || (frobenius.is_some() && arith::prime_divisors(n).len() == 2);
    PrimePowerPredicate {
        all_prime_powers,
        rhs,
        agree: all_prime_powers == rhs,
    }
}

/// Invariants preserved by isomorphisms: the order and the sorted multiset
/// of `(class size, element order)` over all elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub profile: Vec<(usize, usize, usize)>,
}

impl Fingerprint {
    pub fn new(g: &FiniteGroup, cd: &ConjugacyData) -> Self {
        let mut counts: Vec<(usize, usize, usize)> = Vec::new();
        for c in 0..cd.len() {
            let key = (cd.size(c), g.element_order(cd.rep(c)));
            match counts.iter_mut().find(|e| (e.0, e.1) == key) {
                Some(e) => e.2 += cd.size(c),
                None => counts.push((key.0, key.1, cd.size(c))),
            }
        }
        counts.sort_unstable();
        Fingerprint {
            order: g.order(),
            profile: counts,
        }
    }
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    let (cg, ch) = (ConjugacyData::new(g), ConjugacyData::new(h));
    is_isomorphic_with(g, &cg, h, &ch)
}

/// Backtracking search for an isomorphism: a small generating set of `g`
/// is mapped to elements of `h` with matching order and class size, and
/// each partial assignment is checked along a spanning tree.
pub fn is_isomorphic_with(
    g: &FiniteGroup,
    cg: &ConjugacyData,
    h: &FiniteGroup,
    ch: &ConjugacyData,
) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    if g.order() > ISOMORPHISM_BOUND {
        return Err(Error::BacktrackBoundExceeded {
            order: g.order(),
            bound: ISOMORPHISM_BOUND,
        });
    }
    if Fingerprint::new(g, cg) != Fingerprint::new(h, ch) {
        return Ok(false);
    }
    let gens = g.small_generating_set();
    let trees: Vec<_> = (0..=gens.len()).map(|i| g.spanning_tree(&gens[..i])).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let key = (g.element_order(s), cg.size(cg.class_of(s)));
            (0..h.order())
                .filter(|&y| (h.element_order(y), ch.size(ch.class_of(y))) == key)
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    let mut map = vec![usize::MAX; g.order()];
    Ok(extend_isomorphism(g, h, &gens, &trees, &candidates, &mut images, &mut map))
}

fn extend_isomorphism(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    trees: &[Vec<crate::group::TreeNode>],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    map: &mut [usize],
) -> bool {
    let level = images.len();
    if level == gens.len() {
        return true;
    }
    let tree = &trees[level + 1];
    let mut used = vec![false; h.order()];
    'candidates: for &y in &candidates[level] {
        images.push(y);
        used.iter_mut().for_each(|u| *u = false);
        map[0] = 0;
        used[0] = true;
        for node in tree.iter().skip(1) {
            let image = h.mul(map[node.parent], images[node.generator]);
            if used[image] {
                images.pop();
                continue 'candidates;
            }
            used[image] = true;
            map[node.element] = image;
        }
        for node in tree {
            let x = node.element;
            for (j, &s) in gens[..=level].iter().enumerate() {
                if map[g.mul(x, s)] != h.mul(map[x], images[j]) {
                    images.pop();
                    continue 'candidates;
                }
            }
        }
        if extend_isomorphism(g, h, gens, trees, candidates, images, map) {
            return true;
        }
        images.pop();
    }
    false
}
