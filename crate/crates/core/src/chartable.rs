//! Exact character tables.
//!
//! Nonabelian groups go through the Dixon–Schneider method: the class
//! matrices are diagonalized simultaneously over `F_p` for a prime
//! `p = 1 mod exp(G)` with `p > 2 sqrt|G|`, the modular central characters
//! give the degrees, and each value is lifted to `Q(z_e)` by recovering the
//! eigenvalue multiplicities of `rho(g)` from the values on the powers of
//! `g`. Abelian groups skip the linear algebra and enumerate their
//! homomorphisms into `Z/e` directly.
//!
//! Every table is checked before it is returned: full orthogonality for the
//! Dixon–Schneider route, and for the abelian route that the rows are
//! `|G|` distinct homomorphisms (which is equivalent).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::arith;
use crate::classes::ConjugacyData;
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{EmbeddedGroup, FiniteGroup, Quotient, Subgroup};
use crate::modp::{Field, Matrix};

/// The Dixon prime is searched among the first 10000 primes.
pub const PRIME_SEARCH_BOUND: u64 = 104_729;

/// Class-algebra structure constants `a[i][j][k]`: the number of pairs
/// `(x, y)` with `x` in class `i`, `y` in class `j` and `x y = rep(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassConstants {
    r: usize,
    data: Vec<u32>,
}

impl ClassConstants {
    pub fn new(g: &FiniteGroup, cd: &ConjugacyData) -> Self {
        let r = cd.len();
        let mut data = vec![0u32; r * r * r];
        for k in 0..r {
            let z = cd.rep(k);
            for x in 0..g.order() {
                let y = g.mul(g.inv(x), z);
                let (i, j) = (cd.class_of(x), cd.class_of(y));
                data[(i * r + j) * r + k] += 1;
            }
        }
        ClassConstants { r, data }
    }

    pub fn len(&self) -> usize {
        self.r
    }

    pub fn is_empty(&self) -> bool {
        self.r == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.data[(i * self.r + j) * self.r + k]
    }
}

/// `sum count * z_e^exponent`, not canonicalized.
type RootSum = Vec<(u32, i128)>;

/// Least prime `p = 1 (mod exponent)` with `p^2 > 4 order`.
pub fn dixon_prime(order: usize, exponent: usize) -> Result<u64> {
    let e = exponent as u64;
    let mut p = e + 1;
    while p <= PRIME_SEARCH_BOUND {
        if p * p > 4 * order as u64 && arith::is_prime(p) {
            return Ok(p);
        }
        p += e;
    }
    Err(Error::NoSuitablePrime { order, exponent })
}

/// Irreducible characters of a group. Rows are characters (row 0 is the
/// principal character, the rest sorted by degree and then by canonical
/// values); columns are conjugacy classes in [`ConjugacyData`] order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    order: usize,
    conductor: u32,
    class_sizes: Vec<usize>,
    class_element_orders: Vec<usize>,
    inverse_class: Vec<usize>,
    degrees: Vec<u64>,
    /// Distinct values, sorted by canonical terms.
    pool: Vec<Cyclotomic>,
    /// Each pool value as a short sum of roots `(exponent mod e, count)`.
    roots: Vec<RootSum>,
    cells: Vec<u32>,
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of irreducible characters (= number of classes).
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// The `e` of `Q(z_e)` all values are stored over: the group exponent.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self, row: usize) -> u64 {
        self.degrees[row]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn class_element_orders(&self) -> &[usize] {
        &self.class_element_orders
    }

    pub fn centralizer_orders(&self) -> Vec<usize> {
        self.class_sizes.iter().map(|&s| self.order / s).collect()
    }

    #[inline]
    pub fn value(&self, row: usize, col: usize) -> &Cyclotomic {
        &self.pool[self.cell(row, col)]
    }

    #[inline]
    pub(crate) fn cell(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.len() + col] as usize
    }

    pub fn row(&self, row: usize) -> impl Iterator<Item = &Cyclotomic> + '_ {
        (0..self.len()).map(move |c| self.value(row, c))
    }

    /// Distinct values occurring in the table.
    pub fn distinct_values(&self) -> &[Cyclotomic] {
        &self.pool
    }

    /// Classes on which the character takes its degree.
    pub fn kernel_classes(&self, row: usize) -> Vec<usize> {
        let at_one = self.cell(row, 0);
        (0..self.len()).filter(|&c| self.cell(row, c) == at_one).collect()
    }

    pub fn kernel_order(&self, row: usize) -> usize {
        self.kernel_classes(row).iter().map(|&c| self.class_sizes[c]).sum()
    }

    /// `ker chi = {g : chi(g) = chi(1)}`.
    pub fn kernel(&self, row: usize, cd: &ConjugacyData) -> Subgroup {
        let mut mask = vec![false; self.order];
        for c in self.kernel_classes(row) {
            for &x in cd.class(c) {
                mask[x] = true;
            }
        }
        Subgroup::from_mask(mask)
    }

    /// Checks row orthogonality, column orthogonality, the degree sum of
    /// squares, degree divisibility and the principal row, all exactly.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let r = self.len();
        let n = self.order as u64;
        let fail = |msg: alloc::string::String| Err(Error::InternalInconsistency(msg));
        if self.degrees.iter().map(|d| d * d).sum::<u64>() != n {
            return fail(format!("sum of squared degrees differs from {n}"));
        }
        for (row, &d) in self.degrees.iter().enumerate() {
            if n % d != 0 {
                return fail(format!("degree {d} does not divide {n}"));
            }
            if self.value(row, 0).as_integer() != Some(d as i128) {
                return fail(format!("row {row} does not start with its degree"));
            }
        }
        if (0..r).any(|c| self.value(0, c).as_integer() != Some(1)) {
            return fail("row 0 is not the principal character".into());
        }
        let e = self.conductor as usize;
        let sum = |pairs: &mut dyn Iterator<Item = (usize, usize, i128)>| {
            let mut acc = vec![0i128; e];
            for (i, j, w) in pairs {
                convolve_conj(&mut acc, &self.roots[i], &self.roots[j], w);
            }
            Cyclotomic::from_dense_integers(self.conductor, acc)
        };
        for a in 0..r {
            for b in a..r {
                let total = sum(&mut (0..r).map(|c| (self.cell(a, c), self.cell(b, c), self.class_sizes[c] as i128)));
                let expected = if a == b { n as i128 } else { 0 };
                if total.as_integer() != Some(expected) {
                    return fail(format!("rows {a} and {b} are not orthogonal"));
                }
            }
        }
        for c in 0..r {
            for d in c..r {
                let total = sum(&mut (0..r).map(|row| (self.cell(row, c), self.cell(row, d), 1)));
                let expected = if c == d { (self.order / self.class_sizes[c]) as i128 } else { 0 };
                if total.as_integer() != Some(expected) {
                    return fail(format!("columns {c} and {d} are not orthogonal"));
                }
            }
        }
        Ok(())
    }

    fn assemble(
        g: &FiniteGroup,
        cd: &ConjugacyData,
        rows: Vec<(u64, Vec<(Cyclotomic, RootSum)>)>,
    ) -> CharacterTable {
        let mut index: BTreeMap<Vec<(u32, Rational)>, u32> = BTreeMap::new();
        let mut pool = Vec::new();
        let rows = rows
            .into_iter()
            .map(|(d, values)| {
                let cells = values
                    .into_iter()
                    .map(|v| {
                        *index.entry(v.0.terms().to_vec()).or_insert_with(|| {
                            pool.push(v);
                            pool.len() as u32 - 1
                        })
                    })
                    .collect();
                (d, cells)
            })
            .collect();
        Self::assemble_indexed(g, cd, pool, rows)
    }

    /// `pool` must hold distinct values, each with a root sum equal to it;
    /// rows index into it.
    fn assemble_indexed(
        g: &FiniteGroup,
        cd: &ConjugacyData,
        pool: Vec<(Cyclotomic, RootSum)>,
        rows: Vec<(u64, Vec<u32>)>,
    ) -> CharacterTable {
        let e = g.exponent() as u32;
        let mut order: Vec<u32> = (0..pool.len() as u32).collect();
        order.sort_by(|&a, &b| pool[a as usize].0.terms().cmp(pool[b as usize].0.terms()));
        let mut rank = vec![0u32; pool.len()];
        for (k, &old) in order.iter().enumerate() {
            rank[old as usize] = k as u32;
        }
        let mut slots: Vec<Option<(Cyclotomic, RootSum)>> = pool.into_iter().map(Some).collect();
        let (pool, roots): (Vec<Cyclotomic>, Vec<RootSum>) =
            order.iter().map(|&old| slots[old as usize].take().unwrap()).unzip();
        debug_assert!(pool.iter().zip(&roots).all(|(v, rs)| {
            let mut dense = vec![0i128; e as usize];
            rs.iter().for_each(|&(x, c)| dense[x as usize] += c);
            v.conductor() == e && Cyclotomic::from_dense_integers(e, dense) == *v
        }));
        let mut indexed: Vec<(u64, Vec<u32>)> = rows
            .into_iter()
            .map(|(d, values)| (d, values.into_iter().map(|v| rank[v as usize]).collect()))
            .collect();
        let one = pool
            .binary_search_by(|v| v.terms().cmp(Cyclotomic::one(e).terms()))
            .expect("one is a value of the principal character") as u32;
        let principal = indexed
            .iter()
            .position(|(_, v)| v.iter().all(|&x| x == one))
            .expect("the principal character is always found");
        let first = indexed.remove(principal);
        indexed.sort();
        indexed.insert(0, first);
        let r = cd.len();
        let mut cells = Vec::with_capacity(r * r);
        let mut degrees = Vec::with_capacity(r);
        for (d, v) in indexed {
            degrees.push(d);
            cells.extend(v);
        }
        CharacterTable {
            order: g.order(),
            conductor: e,
            class_sizes: cd.sizes(),
            class_element_orders: (0..r).map(|c| g.element_order(cd.rep(c))).collect(),
            inverse_class: (0..r).map(|c| cd.inverse(c)).collect(),
            degrees,
            pool,
            roots,
            cells,
        }
    }

    /// Whether the value on class `c` of `row` equals the complex conjugate
    /// read off the inverse class (a cheap structural sanity check).
    pub fn conjugation_consistent(&self) -> bool {
        (0..self.len()).all(|row| {
            (0..self.len()).all(|c| self.value(row, c).conj() == *self.value(row, self.inverse_class[c]))
        })
    }
}

/// Computes the character table of `g`.
pub fn character_table(g: &FiniteGroup, cd: &ConjugacyData) -> Result<CharacterTable> {
    if g.is_abelian() {
        return abelian_table(g, cd);
    }
    let constants = ClassConstants::new(g, cd);
    let p = dixon_prime(g.order(), g.exponent())?;
    dixon_schneider(g, cd, &constants, p)
}

/// `acc += w * a * conj(b)` over dense exponents mod `acc.len()`.
fn convolve_conj(acc: &mut [i128], a: &[(u32, i128)], b: &[(u32, i128)], w: i128) {
    let e = acc.len();
    for &(x, cx) in a {
        for &(y, cy) in b {
            acc[(x as usize + e - y as usize) % e] += w * cx * cy;
        }
    }
}

fn inconsistent<T>(msg: alloc::string::String) -> Result<T> {
    Err(Error::InternalInconsistency(msg))
}

fn dixon_schneider(
    g: &FiniteGroup,
    cd: &ConjugacyData,
    constants: &ClassConstants,
    p: u64,
) -> Result<CharacterTable> {
    let f = Field { p };
    let r = cd.len();
    let n = g.order() as u64;
    let e = g.exponent() as u64;

    // Common eigenvectors w of the transposed class matrices,
    // w T_i = omega_i w with T_i[k][j] = a[i][j][k], are the central
    // characters omega(K_j) = |K_j| chi(g_j) / chi(1) reduced mod p.
    let mut spaces: Vec<Matrix> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let t: Matrix = (0..r)
            .map(|k| (0..r).map(|j| constants.get(i, j, k) as u64 % p).collect())
            .collect();
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let mut pivots = Vec::new();
            let mut basis = basis;
            pivots.extend(f.rref(&mut basis));
            let images: Matrix = basis.iter().map(|b| f.vec_mul(b, &t)).collect();
            let restricted: Matrix = images
                .iter()
                .map(|img| pivots.iter().map(|&pc| img[pc]).collect())
                .collect();
            let d = restricted.len();
            let mut split_dim = 0;
            for lambda in f.roots(&f.charpoly(&restricted)) {
                let mut shifted = restricted.clone();
                for (s, row) in shifted.iter_mut().enumerate() {
                    row[s] = f.sub(row[s], lambda);
                }
                let null = f.left_nullspace(&shifted);
                let mut sub: Matrix = null
                    .iter()
                    .map(|u| {
                        let mut v = vec![0u64; r];
                        for (coef, b) in u.iter().zip(&basis) {
                            if *coef != 0 {
                                for (x, &y) in v.iter_mut().zip(b) {
                                    *x = f.add(*x, f.mul(*coef, y));
                                }
                            }
                        }
                        v
                    })
                    .collect();
                f.rref(&mut sub);
                split_dim += sub.len();
                next.push(sub);
            }
            if split_dim != d {
                return inconsistent(format!("class matrix {i} is not diagonalizable mod {p}"));
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return inconsistent(format!("eigenspaces did not split into {r} lines mod {p}"));
    }

    let z = arith::pow_mod(arith::primitive_root(p), (p - 1) / e, p);
    let z_pow: Vec<u64> = (0..e).map(|k| arith::pow_mod(z, k, p)).collect();
    let sizes = cd.sizes();
    let size_inv: Vec<u64> = sizes.iter().map(|&s| f.inv(s as u64 % p)).collect();

    let mut rows = Vec::with_capacity(r);
    for space in spaces {
        let w = &space[0];
        if w[0] != 1 {
            return inconsistent("central character does not take 1 on the identity".into());
        }
        // chi(1)^2 = |G| / sum_k omega_k omega_k* / |K_k|
        let s = (0..r).fold(0, |acc, k| {
            f.add(acc, f.mul(f.mul(w[k], w[cd.inverse(k)]), size_inv[k]))
        });
        if s == 0 {
            return inconsistent("degenerate central character".into());
        }
        let target = f.mul(n % p, f.inv(s));
        let Some(degree) = (1..=arith::isqrt(n)).find(|&d| f.mul(d, d) == target) else {
            return inconsistent("no integer degree matches the central character".into());
        };
        let modular: Vec<u64> = (0..r)
            .map(|k| f.mul(f.mul(w[k], degree % p), size_inv[k]))
            .collect();
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let o = g.element_order(cd.rep(k)) as u64;
            let step = e / o;
            let o_inv = f.inv(o % p);
            let mut counts = vec![0i128; e as usize];
            let mut total = 0u64;
            for j in 0..o {
                let mut m = 0u64;
                for l in 0..o {
                    let chi = modular[cd.power(k, l as usize)];
                    let idx = (e - (step * j * l) % e) % e;
                    m = f.add(m, f.mul(chi, z_pow[idx as usize]));
                }
                m = f.mul(m, o_inv);
                if m > degree {
                    return inconsistent(format!("eigenvalue multiplicity {m} exceeds degree {degree}"));
                }
                total += m;
                counts[(j * step) as usize] += m as i128;
            }
            if total != degree {
                return inconsistent("eigenvalue multiplicities do not sum to the degree".into());
            }
            let roots = counts.iter().enumerate().filter(|(_, &c)| c != 0).map(|(x, &c)| (x as u32, c)).collect();
            values.push((Cyclotomic::from_counts(e as u32, &counts), roots));
        }
        rows.push((degree, values));
    }
    let table = CharacterTable::assemble(g, cd, rows);
    table.verify_orthogonality()?;
    Ok(table)
}

fn abelian_table(g: &FiniteGroup, cd: &ConjugacyData) -> Result<CharacterTable> {
    let n = g.order();
    let e = g.exponent();
    let gens = g.small_generating_set();
    let trees: Vec<_> = (0..=gens.len()).map(|i| g.spanning_tree(&gens[..i])).collect();

    // Depth-first over images of the generators in Z/e, keeping only
    // assignments that extend to homomorphisms of <gens[..=level]>.
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    let mut values = vec![0u32; n];
    extend_characters(g, &gens, &trees, e, &mut images, &mut values, &mut found);

    if found.len() != n {
        return inconsistent(format!("found {} linear characters, expected {n}", found.len()));
    }
    let mut rows_by_class: Vec<Vec<u32>> = found
        .iter()
        .map(|vals| (0..cd.len()).map(|c| vals[cd.rep(c)]).collect())
        .collect();
    rows_by_class.sort_unstable();
    if rows_by_class.windows(2).any(|w| w[0] == w[1]) {
        return inconsistent("two linear characters coincide".into());
    }
    // Distinct exponents give distinct roots, so the exponent is the pool index.
    let roots = (0..e).map(|k| (Cyclotomic::root_of_unity(e as u32, k as i64), vec![(k as u32, 1)])).collect();
    let rows = rows_by_class.into_iter().map(|exps| (1, exps)).collect();
    Ok(CharacterTable::assemble_indexed(g, cd, roots, rows))
}

fn extend_characters(
    g: &FiniteGroup,
    gens: &[usize],
    trees: &[Vec<crate::group::TreeNode>],
    e: usize,
    images: &mut Vec<u32>,
    values: &mut [u32],
    found: &mut Vec<Vec<u32>>,
) {
    let level = images.len();
    if level == gens.len() {
        found.push(values.to_vec());
        return;
    }
    let o = g.element_order(gens[level]);
    let step = e / o;
    let tree = &trees[level + 1];
    let mut in_sub = vec![false; g.order()];
    for node in tree {
        in_sub[node.element] = true;
    }
    'candidates: for t in 0..o {
        images.push((t * step) as u32);
        for node in tree.iter().skip(1) {
            values[node.element] = ((values[node.parent] + images[node.generator]) as usize % e) as u32;
        }
        for node in tree {
            let x = node.element;
            for (j, &s) in gens[..=level].iter().enumerate() {
                let y = g.mul(x, s);
                debug_assert!(in_sub[y]);
                if values[y] as usize != (values[x] + images[j]) as usize % e {
                    images.pop();
                    continue 'candidates;
                }
            }
        }
        extend_characters(g, gens, trees, e, images, values, found);
        images.pop();
    }
}

/// For each character of the quotient `G/N`, the row of `G`'s table equal
/// to its inflation `psi(gN)`, or `None` when some inflation is missing.
pub fn inflation_rows(
    table_g: &CharacterTable,
    cd_g: &ConjugacyData,
    quotient: &Quotient,
    cd_q: &ConjugacyData,
    table_q: &CharacterTable,
) -> Option<Vec<usize>> {
    let e = table_g.conductor();
    let lookup: Vec<Option<u32>> = table_q
        .pool
        .iter()
        .map(|v| {
            let v = v.embed(e);
            table_g.pool.binary_search_by(|p| p.cmp_terms(&v)).ok().map(|i| i as u32)
        })
        .collect();
    let r = table_g.len();
    let fusion: Vec<usize> = (0..r)
        .map(|c| cd_q.class_of(quotient.projection[cd_g.rep(c)]))
        .collect();
    let mut rows: BTreeMap<&[u32], usize> = BTreeMap::new();
    for row in 0..r {
        rows.insert(&table_g.cells[row * r..(row + 1) * r], row);
    }
    (0..table_q.len())
        .map(|psi| {
            let key: Option<Vec<u32>> = fusion.iter().map(|&c| lookup[table_q.cell(psi, c)]).collect();
            rows.get(key?.as_slice()).copied()
        })
        .collect()
}

/// Restriction of characters of `G` to a subgroup `N`.
pub struct Restriction<'a> {
    table_g: &'a CharacterTable,
    table_n: &'a CharacterTable,
    /// G-class of each N-class.
    fusion: Vec<usize>,
    n_sizes: Vec<usize>,
    linear_rows: Option<BTreeMap<Vec<u32>, usize>>,
}

impl<'a> Restriction<'a> {
    pub fn new(
        table_g: &'a CharacterTable,
        cd_g: &ConjugacyData,
        sub: &EmbeddedGroup,
        cd_n: &ConjugacyData,
        table_n: &'a CharacterTable,
    ) -> Self {
        let fusion = (0..cd_n.len())
            .map(|c| cd_g.class_of(sub.embedding[cd_n.rep(c)]))
            .collect();
        Restriction {
            table_g,
            table_n,
            fusion,
            n_sizes: cd_n.sizes(),
            linear_rows: None,
        }
    }

    /// Irreducible constituents of `chi|_N` with multiplicities, ascending by
    /// row of the subgroup table.
    pub fn constituents(&mut self, chi: usize) -> Result<Vec<(usize, u64)>> {
        let out = if self.table_g.degree(chi) == 1 {
            self.linear_constituent(chi).into_iter().map(|psi| (psi, 1)).collect()
        } else {
            self.inner_products(chi)?
        };
        let total: u64 = out.iter().map(|&(psi, m)| m * self.table_n.degree(psi)).sum();
        if total != self.table_g.degree(chi) {
            return inconsistent(format!(
                "constituents of character {chi} have total degree {total}"
            ));
        }
        Ok(out)
    }

    fn linear_constituent(&mut self, chi: usize) -> Option<usize> {
        let (tg, tn) = (self.table_g, self.table_n);
        let rows = self.linear_rows.get_or_insert_with(|| {
            // Express N's values as indices into G's value pool.
            let e = tg.conductor();
            let lookup: Vec<Option<u32>> = tn
                .pool
                .iter()
                .map(|v| {
                    let v = v.embed(e);
                    tg.pool
                        .binary_search_by(|p| p.cmp_terms(&v))
                        .ok()
                        .map(|i| i as u32)
                })
                .collect();
            let mut map = BTreeMap::new();
            for psi in 0..tn.len() {
                if tn.degree(psi) != 1 {
                    continue;
                }
                let key: Option<Vec<u32>> = (0..tn.len()).map(|c| lookup[tn.cell(psi, c)]).collect();
                if let Some(key) = key {
                    map.insert(key, psi);
                }
            }
            map
        });
        let key: Vec<u32> = self.fusion.iter().map(|&c| tg.cells[chi * tg.len() + c]).collect();
        rows.get(&key).copied()
    }

    fn inner_products(&self, chi: usize) -> Result<Vec<(usize, u64)>> {
        let (tg, tn) = (self.table_g, self.table_n);
        let e = tg.conductor() as usize;
        let order_n: usize = self.n_sizes.iter().sum();
        let scale = (e / tn.conductor() as usize) as u32;
        let mut out = Vec::new();
        for psi in 0..tn.len() {
            let mut acc = vec![0i128; e];
            for (c, &gc) in self.fusion.iter().enumerate() {
                let embedded: RootSum = tn.roots[tn.cell(psi, c)].iter().map(|&(x, k)| (x * scale, k)).collect();
                convolve_conj(&mut acc, &tg.roots[tg.cell(chi, gc)], &embedded, self.n_sizes[c] as i128);
            }
            let ip = Cyclotomic::from_dense_integers(e as u32, acc);
            let Some(total) = ip.as_integer() else {
                return Err(Error::NonIntegerMultiplicity);
            };
            if total < 0 || total % order_n as i128 != 0 {
                return Err(Error::NonIntegerMultiplicity);
            }
            let m = (total / order_n as i128) as u64;
            if m > 0 {
                out.push((psi, m));
            }
        }
        Ok(out)
    }
}

impl PartialEq for CharacterTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.conductor == other.conductor
            && self.degrees == other.degrees
            && self.cells == other.cells
            && self.pool.len() == other.pool.len()
            && self
                .pool
                .iter()
                .zip(&other.pool)
                .all(|(a, b)| a.cmp_terms(b) == Ordering::Equal)
    }
}

impl Eq for CharacterTable {}
