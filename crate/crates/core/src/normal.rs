//! Normal subgroups, commutator series and the structural predicates.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::classes::ConjugacyData;
use crate::group::{FiniteGroup, Subgroup};

/// All normal subgroups, sorted by `(order, members)`. The first entry is
/// the trivial subgroup and the last is the whole group.
#[derive(Clone, Debug)]
pub struct NormalSubgroups {
    pub all: Vec<Subgroup>,
    /// Indices into `all` of the maximal proper normal subgroups.
    pub maximal: Vec<usize>,
}

impl NormalSubgroups {
    pub fn proper_nontrivial(&self) -> impl Iterator<Item = &Subgroup> {
        let n = self.all.len();
        self.all.iter().enumerate().filter(move |&(i, _)| i != 0 && i + 1 != n).map(|(_, s)| s)
    }
}

/// Normal subgroups are the class unions closed under multiplication; they
/// are reached as joins of the normal closures of single classes.
pub fn normal_subgroups(g: &FiniteGroup, cd: &ConjugacyData) -> NormalSubgroups {
    let trivial = g.trivial_subgroup();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(trivial.members().to_vec());
    let mut found = vec![trivial];
    let mut i = 0;
    while i < found.len() {
        let base = found[i].clone();
        for c in 1..cd.len() {
            if base.contains(cd.rep(c)) {
                continue;
            }
            let mut mask = vec![false; g.order()];
            for &x in base.members() {
                mask[x] = true;
            }
            let joined = g.close_under(mask, cd.class(c));
            if seen.insert(joined.members().to_vec()) {
                found.push(joined);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    let top = found.len() - 1;
    let maximal = (0..top)
        .filter(|&i| {
            (0..top).all(|j| j == i || found[j].order() <= found[i].order() || !found[i].is_subset_of(&found[j]))
        })
        .collect();
    NormalSubgroups {
        all: found,
        maximal,
    }
}

/// Smallest subgroup containing `seeds` and closed under conjugation by
/// `conj_by`.
fn conjugation_closure(g: &FiniteGroup, seeds: Vec<usize>, conj_by: &[usize]) -> Subgroup {
    let mut gens = seeds;
    loop {
        let h = g.subgroup_generated(&gens);
        let mut extra = Vec::new();
        for &x in h.members() {
            for &c in conj_by {
                let y = g.conj(x, c);
                if !h.contains(y) && !extra.contains(&y) {
                    extra.push(y);
                }
            }
        }
        if extra.is_empty() {
            return h;
        }
        gens.extend(extra);
    }
}

/// `[a, b]` for `a` normalized by `<b_gens>`, closed under conjugation by
/// `ambient_gens`.
fn commutator_subgroup(
    g: &FiniteGroup,
    a: &Subgroup,
    b_gens: &[usize],
    ambient_gens: &[usize],
) -> Subgroup {
    let mut seeds: Vec<usize> = Vec::new();
    let mut mark = vec![false; g.order()];
    for &x in a.members() {
        for &s in b_gens {
            let c = g.commutator(x, s);
            if c != 0 && !mark[c] {
                mark[c] = true;
                seeds.push(c);
            }
        }
    }
    conjugation_closure(g, seeds, ambient_gens)
}

pub fn derived_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let gens = g.subgroup_generators(h);
    commutator_subgroup(g, h, &gens, &gens)
}

/// Derived series `G > G' > G'' > ...` down to its stable term.
pub fn derived_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![g.whole()];
    loop {
        let next = derived_subgroup(g, series.last().unwrap());
        if next.order() == series.last().unwrap().order() {
            return series;
        }
        series.push(next);
    }
}

/// Lower central series `G = g1 > [g1, G] > ...` down to its stable term.
pub fn lower_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let gens = g.generators().to_vec();
    let mut series = vec![g.whole()];
    loop {
        let next = commutator_subgroup(g, series.last().unwrap(), &gens, &gens);
        if next.order() == series.last().unwrap().order() {
            return series;
        }
        series.push(next);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub is_abelian: bool,
    /// Exactly two normal subgroups; false for the trivial group.
    pub is_simple: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    /// The prime `p` when `|G|` is a positive power of `p`. The trivial group
    /// reports `None`.
    pub p_group: Option<u64>,
}

pub fn structural_predicates(g: &FiniteGroup, normals: &NormalSubgroups) -> StructuralPredicates {
    let is_abelian = g.is_abelian();
    StructuralPredicates {
        is_abelian,
        is_simple: g.order() > 1 && normals.all.len() == 2,
        is_nilpotent: is_abelian || lower_central_series(g).last().unwrap().is_trivial(),
        is_solvable: is_abelian || derived_series(g).last().unwrap().is_trivial(),
        p_group: arith::prime_power_base(g.order() as u64),
    }
}

/// Nilpotency of a subgroup, computed inside its own group structure.
pub fn subgroup_is_nilpotent(g: &FiniteGroup, h: &Subgroup) -> bool {
    let e = g.subgroup_as_group(h);
    e.group.is_abelian() || lower_central_series(&e.group).last().unwrap().is_trivial()
}

pub fn subgroup_is_abelian(g: &FiniteGroup, h: &Subgroup) -> bool {
    let gens = g.subgroup_generators(h);
    gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}
