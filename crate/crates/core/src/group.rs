//! Fully enumerated finite groups with a stored Cayley table.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Axiom, Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// A finite group whose elements are the indices `0..order`, with `0` the
/// identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    orders: Vec<u32>,
    exponent: usize,
}

impl core::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("exponent", &self.exponent)
            .field("generators", &self.generators)
            .finish()
    }
}

/// A subgroup given by its member set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Subgroup {
    pub(crate) fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subgroup { members, mask }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Sorted member indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mask = self
            .mask
            .iter()
            .zip(&other.mask)
            .map(|(&a, &b)| a && b)
            .collect();
        Subgroup::from_mask(mask)
    }
}

/// A group together with an injective homomorphism into a parent group.
#[derive(Clone, Debug)]
pub struct EmbeddedGroup {
    pub group: FiniteGroup,
    /// `embedding[i]` is the parent element corresponding to element `i`.
    pub embedding: Vec<usize>,
}

/// A quotient group together with the projection from the parent.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[g]` is the coset of parent element `g`.
    pub projection: Vec<usize>,
}

/// One node of a breadth-first spanning tree over a generating set:
/// `element = parent * gens[generator]`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct TreeNode {
    pub element: usize,
    pub parent: usize,
    pub generator: usize,
}

struct Closure<T> {
    elements: Vec<T>,
    /// `right[i * k + j]` is the index of `elements[i] * gens[j]`.
    right: Vec<u32>,
    /// Discovery edge of each non-identity element.
    tree: Vec<(u32, u32)>,
    gen_index: Vec<usize>,
}

/// Breadth-first closure from the identity under right multiplication by the
/// generators, in input order.
fn closure<T: Ord + Clone>(
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
    cap: usize,
) -> Result<Closure<T>> {
    let k = gens.len();
    let mut index: BTreeMap<T, u32> = BTreeMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut right = Vec::new();
    let mut tree = vec![(u32::MAX, u32::MAX)];
    let mut i = 0;
    while i < elements.len() {
        for (j, g) in gens.iter().enumerate() {
            let y = mul(&elements[i], g);
            let idx = match index.get(&y) {
                Some(&idx) => idx,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    let idx = elements.len() as u32;
                    index.insert(y.clone(), idx);
                    elements.push(y);
                    tree.push((i as u32, j as u32));
                    idx
                }
            };
            right.push(idx);
        }
        i += 1;
    }
    debug_assert_eq!(right.len(), elements.len() * k);
    let gen_index = gens.iter().map(|g| index[g] as usize).collect();
    Ok(Closure {
        elements,
        right,
        tree,
        gen_index,
    })
}

impl FiniteGroup {
    fn from_closure<T>(c: &Closure<T>) -> FiniteGroup {
        let n = c.elements.len();
        let k = c.gen_index.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            let row = a * n;
            table[row] = a as u32;
            for b in 1..n {
                let (parent, g) = c.tree[b];
                let left = table[row + parent as usize] as usize;
                table[row + b] = c.right[left * k + g as usize];
            }
        }
        let mut generators = Vec::new();
        for &g in &c.gen_index {
            if g != 0 && !generators.contains(&g) {
                generators.push(g);
            }
        }
        FiniteGroup::assemble(n, table, generators)
    }

    fn assemble(n: usize, table: Vec<u32>, generators: Vec<usize>) -> FiniteGroup {
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            inv[a] = row.iter().position(|&x| x == 0).expect("group rows contain the identity") as u32;
        }
        let mut orders = vec![1u32; n];
        let mut exponent = 1u64;
        for (a, slot) in orders.iter_mut().enumerate() {
            let mut x = a;
            let mut k = 1u32;
            while x != 0 {
                x = table[x * n + a] as usize;
                k += 1;
            }
            *slot = k;
            exponent = arith::lcm(exponent, k as u64);
        }
        FiniteGroup {
            order: n,
            table,
            inv,
            generators,
            orders,
            exponent: exponent as usize,
        }
    }

    /// Closure of permutation generators, indexed breadth-first.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<FiniteGroup> {
        Self::from_generators_with_cap(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_with_cap(
        degree: usize,
        gens: &[Permutation],
        cap: usize,
    ) -> Result<FiniteGroup> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let c = closure(Permutation::identity(degree), gens, |a, b| a.then(b), cap)?;
        Ok(Self::from_closure(&c))
    }

    /// Validates a Cayley table and wraps it. If the identity is not at
    /// index 0 it is swapped there.
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<FiniteGroup> {
        let n = rows.len();
        let not_a_group = |axiom, detail| Err(Error::NotAGroup { axiom, detail });
        if n == 0 {
            return not_a_group(Axiom::Shape, "empty table".into());
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return not_a_group(Axiom::Shape, format!("row {i} has {} entries, expected {n}", row.len()));
            }
            if let Some(j) = row.iter().position(|&x| x >= n) {
                return not_a_group(Axiom::Range, format!("entry ({i}, {j}) = {} is out of range", row[j]));
            }
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if core::mem::replace(&mut row_seen[rows[i][j]], true) {
                    return not_a_group(Axiom::Latin, format!("row {i} repeats {}", rows[i][j]));
                }
                if core::mem::replace(&mut col_seen[rows[j][i]], true) {
                    return not_a_group(Axiom::Latin, format!("column {i} repeats {}", rows[j][i]));
                }
            }
        }
        let mul = |a: usize, b: usize| rows[a][b];
        // Light's test: associativity against a generating set suffices.
        let gens = quasigroup_generators(n, mul);
        for &c in &gens {
            for a in 0..n {
                for b in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return not_a_group(
                            Axiom::Associativity,
                            format!("({a} * {b}) * {c} != {a} * ({b} * {c})"),
                        );
                    }
                }
            }
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x)) else {
            return not_a_group(Axiom::Identity, "no two-sided identity".into());
        };
        for x in 0..n {
            if !(0..n).any(|y| mul(x, y) == e && mul(y, x) == e) {
                return not_a_group(Axiom::Inverses, format!("{x} has no inverse"));
            }
        }
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = relabel(mul(relabel(a), relabel(b))) as u32;
            }
        }
        let generators = quasigroup_generators(n, |a, b| table[a * n + b] as usize)
            .into_iter()
            .filter(|&g| g != 0)
            .collect();
        Ok(FiniteGroup::assemble(n, table, generators))
    }

    /// The trivial group.
    pub fn trivial() -> FiniteGroup {
        FiniteGroup::assemble(1, vec![0], Vec::new())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let k = k % self.element_order(a);
        let mut x = 0;
        for _ in 0..k {
            x = self.mul(x, a);
        }
        x
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_mask(vec![true; self.order])
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        Subgroup::from_mask(mask)
    }

    /// Closure of `start` under right multiplication by `gens`.
    pub(crate) fn close_under(&self, mut mask: Vec<bool>, gens: &[usize]) -> Subgroup {
        let mut queue: Vec<usize> = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_mask(mask)
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        self.close_under(mask, gens)
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Subgroup {
        let mut current: Vec<usize> = gens.to_vec();
        loop {
            let h = self.subgroup_generated(&current);
            let mut grew = false;
            for &x in &current.clone() {
                for &g in &self.generators {
                    let y = self.conj(x, g);
                    if !h.contains(y) {
                        current.push(y);
                        grew = true;
                    }
                }
            }
            if !grew {
                return h;
            }
        }
    }

    /// Checks closure and identity membership of an arbitrary element set.
    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        let mut mask = vec![false; self.order];
        for &x in members {
            mask[x] = true;
        }
        mask[0] && members.iter().all(|&a| members.iter().all(|&b| mask[self.mul(a, b)]))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        h.members()
            .iter()
            .all(|&x| self.generators.iter().all(|&g| h.contains(self.conj(x, g))))
    }

    pub fn centralizer(&self, g: usize) -> Subgroup {
        let mask = (0..self.order)
            .map(|x| self.mul(x, g) == self.mul(g, x))
            .collect();
        Subgroup::from_mask(mask)
    }

    /// A greedy generating set of `h`: members in index order that are not
    /// yet in the subgroup generated so far.
    pub fn subgroup_generators(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for &x in h.members() {
            if current.order() == h.order() {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    /// The subgroup `h` as a group in its own right.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> EmbeddedGroup {
        let gens = self.subgroup_generators(h);
        let c = closure(0usize, &gens, |&a, &b| self.mul(a, b), usize::MAX)
            .expect("uncapped closure");
        EmbeddedGroup {
            group: FiniteGroup::from_closure(&c),
            embedding: c.elements,
        }
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        self.direct_product_with_cap(other, DEFAULT_ORDER_CAP)
    }

    /// Componentwise product, generated by `(g, 1)` then `(1, h)`.
    pub fn direct_product_with_cap(&self, other: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
        if self.order.saturating_mul(other.order) > cap {
            return Err(Error::OrderCapExceeded { cap });
        }
        let gens: Vec<(usize, usize)> = self
            .generators
            .iter()
            .map(|&g| (g, 0))
            .chain(other.generators.iter().map(|&h| (0, h)))
            .collect();
        let c = closure(
            (0usize, 0usize),
            &gens,
            |&(a, b), &(x, y)| (self.mul(a, x), other.mul(b, y)),
            cap,
        )?;
        Ok(Self::from_closure(&c))
    }

    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut label = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if label[x] == usize::MAX {
                for &m in n.members() {
                    label[self.mul(x, m)] = reps.len();
                }
                reps.push(x);
            }
        }
        let gens: Vec<usize> = self.generators.iter().map(|&g| label[g]).collect();
        let c = closure(
            0usize,
            &gens,
            |&a, &b| label[self.mul(reps[a], reps[b])],
            usize::MAX,
        )
        .expect("uncapped closure");
        let mut relabel = vec![0usize; reps.len()];
        for (new, &old) in c.elements.iter().enumerate() {
            relabel[old] = new;
        }
        Ok(Quotient {
            group: Self::from_closure(&c),
            projection: label.iter().map(|&l| relabel[l]).collect(),
        })
    }

    /// Breadth-first spanning tree of the subgroup generated by `gens`.
    pub(crate) fn spanning_tree(&self, gens: &[usize]) -> Vec<TreeNode> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut nodes = vec![TreeNode {
            element: 0,
            parent: usize::MAX,
            generator: usize::MAX,
        }];
        let mut i = 0;
        while i < nodes.len() {
            let x = nodes[i].element;
            for (j, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    nodes.push(TreeNode {
                        element: y,
                        parent: x,
                        generator: j,
                    });
                }
            }
            i += 1;
        }
        nodes
    }

    /// Generating set with elements of large order first, each one enlarging
    /// the subgroup generated so far.
    pub(crate) fn small_generating_set(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = (1..self.order).collect();
        candidates.sort_by_key(|&x| (core::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for x in candidates {
            if current.order() == self.order {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.subgroup_generated(&gens);
            }
        }
        gens
    }
}

/// Greedy generating set of a finite quasigroup under products alone.
fn quasigroup_generators(n: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut mask = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    for x in 0..n {
        if mask[x] {
            continue;
        }
        gens.push(x);
        mask[x] = true;
        members.push(x);
        // Re-close: products of all pairs until stable.
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let mut j = 0;
            while j <= i {
                let b = members[j];
                for y in [mul(a, b), mul(b, a)] {
                    if !mask[y] {
                        mask[y] = true;
                        members.push(y);
                    }
                }
                j += 1;
            }
            i += 1;
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::from_generators(3, &[perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])]).unwrap()
    }

    #[test]
    fn symmetric_three() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn trivial_from_no_generators() {
        let g = FiniteGroup::from_generators(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
    }

    #[test]
    fn order_cap_is_enforced() {
        let gens = [perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[0, 1]])];
        let err = FiniteGroup::from_generators_with_cap(5, &gens, 100).unwrap_err();
        assert_eq!(err, Error::OrderCapExceeded { cap: 100 });
    }

    #[test]
    fn degree_mismatch_rejected() {
        let err = FiniteGroup::from_generators(4, &[perm(3, &[&[0, 1]])]).unwrap_err();
        assert!(matches!(err, Error::InvalidPermutation(_)));
    }

    #[test]
    fn frobenius_twenty_one_by_closure() {
        // x -> x + 1 and x -> 2x on Z/7.
        let shift = Permutation::from_images((0..7).map(|x| (x + 1) % 7).collect()).unwrap();
        let square = Permutation::from_images((0..7).map(|x| (2 * x) % 7).collect()).unwrap();
        let g = FiniteGroup::from_generators(7, &[shift, square]).unwrap();
        assert_eq!(g.order(), 21);
    }

    #[test]
    fn table_axioms() {
        assert_eq!(FiniteGroup::from_cayley_table(&[vec![0]]).unwrap().order(), 1);
        let c2 = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(c2.element_order(1), 2);

        // x * y = -x - y (mod 3): a latin square that is not associative.
        let bad: Vec<Vec<usize>> = (0..3)
            .map(|x| (0..3).map(|y| (6 - x - y) % 3).collect())
            .collect();
        match FiniteGroup::from_cayley_table(&bad) {
            Err(Error::NotAGroup { axiom, .. }) => assert_eq!(axiom, Axiom::Associativity),
            other => panic!("unexpected {other:?}"),
        }
        let not_latin = [vec![0, 1], vec![0, 1]];
        assert!(matches!(
            FiniteGroup::from_cayley_table(&not_latin),
            Err(Error::NotAGroup { axiom: Axiom::Latin, .. })
        ));
        let ragged = [vec![0, 1], vec![1]];
        assert!(matches!(
            FiniteGroup::from_cayley_table(&ragged),
            Err(Error::NotAGroup { axiom: Axiom::Shape, .. })
        ));
    }

    #[test]
    fn table_identity_relabelled_to_zero() {
        // C2 with the identity stored at index 1.
        let g = FiniteGroup::from_cayley_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn centralizers() {
        let g = s3();
        let transposition = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(g.centralizer(transposition).order(), 2);
        assert_eq!(g.centralizer(0).order(), 6);
    }

    #[test]
    fn products_and_quotients() {
        let g = s3();
        let c2 = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        let p = g.direct_product(&c2).unwrap();
        assert_eq!(p.order(), 12);
        let t = FiniteGroup::trivial().direct_product(&g).unwrap();
        assert_eq!(t, g);

        let a3 = g.subgroup_generated(&[(0..6).find(|&x| g.element_order(x) == 3).unwrap()]);
        let q = g.quotient(&a3).unwrap();
        assert_eq!(q.group.order(), 2);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(
                    q.projection[g.mul(a, b)],
                    q.group.mul(q.projection[a], q.projection[b])
                );
            }
        }
        let t = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(g.quotient(&g.subgroup_generated(&[t])).unwrap_err(), Error::NotNormal);
        assert_eq!(g.quotient(&g.trivial_subgroup()).unwrap().group, g);
    }

    #[test]
    fn embedded_subgroup_is_homomorphic() {
        let g = s3();
        let h = g.subgroup_generated(&[(0..6).find(|&x| g.element_order(x) == 3).unwrap()]);
        let e = g.subgroup_as_group(&h);
        assert_eq!(e.group.order(), 3);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(e.embedding[e.group.mul(a, b)], g.mul(e.embedding[a], e.embedding[b]));
            }
        }
    }
}
