//! Built-in group corpus: named constructions, every group of order at most
//! 15, and family instances up to a requested order.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::classes::ConjugacyData;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::structure::{is_isomorphic_with, Fingerprint};

/// How to construct a catalog group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(usize),
    /// Direct product of cyclic groups of the given orders.
    Abelian(Vec<usize>),
    /// Dihedral group of the given order.
    Dihedral(usize),
    /// Dicyclic group of the given order (a multiple of 4).
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    /// `Z/p` extended by the multiplier `r` of order `q` modulo `p`.
    Frobenius { p: u64, q: u64, r: u64 },
    /// Extraspecial group of order `p^3`; `plus` selects exponent `p`
    /// (for `p = 2`, the dihedral group).
    Extraspecial { p: u64, plus: bool },
    Product(Box<Recipe>, Box<Recipe>),
    /// A group file; only the std companion can load it.
    File(String),
}

/// Family rank used to choose which name survives isomorphism dedup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Cyclic,
    Abelian,
    Symmetric,
    Alternating,
    Dihedral,
    Dicyclic,
    Frobenius,
    Extraspecial,
    Product,
    File,
}

impl Recipe {
    pub fn family(&self) -> Family {
        match self {
            Recipe::Cyclic(_) => Family::Cyclic,
            Recipe::Abelian(_) => Family::Abelian,
            Recipe::Symmetric(_) => Family::Symmetric,
            Recipe::Alternating(_) => Family::Alternating,
            Recipe::Dihedral(_) => Family::Dihedral,
            Recipe::Dicyclic(_) => Family::Dicyclic,
            Recipe::Frobenius { .. } => Family::Frobenius,
            Recipe::Extraspecial { .. } => Family::Extraspecial,
            Recipe::Product(..) => Family::Product,
            Recipe::File(_) => Family::File,
        }
    }

    /// Canonical name, e.g. `C6`, `C4xC2`, `D10`, `Q8`, `F(7,3)`, `S3xC5`.
    pub fn name(&self) -> String {
        match self {
            Recipe::Cyclic(n) => format!("C{n}"),
            Recipe::Abelian(factors) => join_factors(factors.iter().map(|n| format!("C{n}"))),
            Recipe::Dihedral(n) => format!("D{n}"),
            Recipe::Dicyclic(8) => "Q8".to_string(),
            Recipe::Dicyclic(n) => format!("Dic{n}"),
            Recipe::Symmetric(n) => format!("S{n}"),
            Recipe::Alternating(n) => format!("A{n}"),
            Recipe::Frobenius { p, q, .. } => format!("F({p},{q})"),
            Recipe::Extraspecial { p, plus } => format!("E{}{}", p * p * p, if *plus { '+' } else { '-' }),
            Recipe::Product(a, b) => format!("{}x{}", a.name(), b.name()),
            Recipe::File(path) => path.clone(),
        }
    }

    /// Order of the constructed group, when the recipe is valid.
    pub fn order(&self) -> Option<usize> {
        Some(match self {
            Recipe::Cyclic(n) | Recipe::Dihedral(n) | Recipe::Dicyclic(n) => *n,
            Recipe::Abelian(factors) => factors.iter().product(),
            Recipe::Symmetric(n) => (1..=*n).product(),
            Recipe::Alternating(n) => ((1..=*n).product::<usize>() / 2).max(1),
            Recipe::Frobenius { p, q, .. } => (p * q) as usize,
            Recipe::Extraspecial { p, .. } => (p * p * p) as usize,
            Recipe::Product(a, b) => a.order()? * b.order()?,
            Recipe::File(_) => return None,
        })
    }
}

fn join_factors(parts: impl Iterator<Item = String>) -> String {
    parts.collect::<Vec<_>>().join("x")
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "cyclic {n}"),
            Recipe::Abelian(factors) => {
                write!(f, "abelian")?;
                factors.iter().try_for_each(|n| write!(f, " {n}"))
            }
            Recipe::Dihedral(n) => write!(f, "dihedral {n}"),
            Recipe::Dicyclic(n) => write!(f, "dicyclic {n}"),
            Recipe::Symmetric(n) => write!(f, "symmetric {n}"),
            Recipe::Alternating(n) => write!(f, "alternating {n}"),
            Recipe::Frobenius { p, q, r } => write!(f, "frobenius {p} {q} {r}"),
            Recipe::Extraspecial { p, plus } => {
                write!(f, "extraspecial {p} {}", if *plus { "plus" } else { "minus" })
            }
            Recipe::Product(a, b) => write!(f, "product {} {}", a.name(), b.name()),
            Recipe::File(path) => write!(f, "file {path}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub recipe: Recipe,
}

impl CatalogEntry {
    pub fn new(recipe: Recipe) -> Self {
        CatalogEntry {
            name: recipe.name(),
            recipe,
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        build(&self.recipe)
    }
}

fn invalid<T>(msg: String) -> Result<T> {
    Err(Error::InvalidRecipe(msg))
}

fn perm_group(degree: usize, gens: &[Vec<Vec<usize>>]) -> Result<FiniteGroup> {
    let gens = gens
        .iter()
        .map(|cycles| Permutation::from_cycles(degree, cycles))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_generators(degree.max(1), &gens)
}

fn table_group(n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
    FiniteGroup::from_cayley_table(&rows)
}

/// Least multiplier of order `q` modulo the prime `p`.
pub fn least_frobenius_multiplier(p: u64, q: u64) -> Option<u64> {
    (2..p).find(|&r| arith::multiplicative_order(r, p) == Some(q))
}

pub fn build(recipe: &Recipe) -> Result<FiniteGroup> {
    match *recipe {
        Recipe::Cyclic(n) => {
            if n == 0 {
                return invalid("cyclic order must be positive".into());
            }
            build(&Recipe::Abelian(vec![n]))
        }
        Recipe::Abelian(ref factors) => {
            if factors.is_empty() || factors.contains(&0) {
                return invalid("abelian factors must be positive".into());
            }
            let mut start = 0;
            let mut gens = Vec::new();
            for &n in factors {
                if n > 1 {
                    gens.push(vec![(start..start + n).collect::<Vec<_>>()]);
                }
                start += n;
            }
            perm_group(start, &gens)
        }
        Recipe::Dihedral(order) => {
            if order < 2 || order % 2 != 0 {
                return invalid(format!("dihedral order {order} is not a positive even number"));
            }
            let n = order / 2;
            match n {
                1 => build(&Recipe::Cyclic(2)),
                2 => build(&Recipe::Abelian(vec![2, 2])),
                _ => {
                    let rotation = vec![(0..n).collect::<Vec<_>>()];
                    let reflection: Vec<Vec<usize>> =
                        (1..n).filter(|&i| i < n - i).map(|i| vec![i, n - i]).collect();
                    perm_group(n, &[rotation, reflection])
                }
            }
        }
        Recipe::Dicyclic(order) => {
            if order < 8 || order % 4 != 0 {
                return invalid(format!("dicyclic order {order} is not a multiple of 4 above 4"));
            }
            // a^i x^j stored as j * 2m + i, with x a x^-1 = a^-1 and x^2 = a^m.
            let m = order / 4;
            let cyc = 2 * m;
            table_group(order, |u, v| {
                let (i, j) = (u % cyc, u / cyc);
                let (k, l) = (v % cyc, v / cyc);
                match (j, l) {
                    (0, _) => l * cyc + (i + k) % cyc,
                    (_, 0) => cyc + (i + cyc - k) % cyc,
                    _ => (i + cyc - k + m) % cyc,
                }
            })
        }
        Recipe::Symmetric(n) => {
            if n == 0 {
                return invalid("symmetric degree must be positive".into());
            }
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(vec![(0..n).collect::<Vec<_>>()]);
                gens.push(vec![vec![0, 1]]);
            }
            perm_group(n, &gens)
        }
        Recipe::Alternating(n) => {
            if n == 0 {
                return invalid("alternating degree must be positive".into());
            }
            let gens: Vec<Vec<Vec<usize>>> = (2..n).map(|i| vec![vec![0, 1, i]]).collect();
            perm_group(n, &gens)
        }
        Recipe::Frobenius { p, q, r } => {
            if !arith::is_prime(p) {
                return invalid(format!("{p} is not prime"));
            }
            if q < 2 || (p - 1) % q != 0 {
                return invalid(format!("{q} does not divide {} or is 1", p - 1));
            }
            match arith::multiplicative_order(r, p) {
                Some(o) if o == q => {}
                Some(o) => return invalid(format!("{r} has multiplicative order {o} modulo {p}, not {q}")),
                None => return invalid(format!("{r} is not a unit modulo {p}")),
            }
            let p = p as usize;
            let translate = vec![(0..p).collect::<Vec<_>>()];
            let images: Vec<u32> = (0..p).map(|x| ((x as u64 * r) % p as u64) as u32).collect();
            let scale = Permutation::from_images(images)?.cycles();
            perm_group(p, &[translate, scale])
        }
        Recipe::Extraspecial { p, plus } => {
            if !arith::is_prime(p) {
                return invalid(format!("{p} is not prime"));
            }
            let p = p as usize;
            if p == 2 {
                return build(&if plus { Recipe::Dihedral(8) } else { Recipe::Dicyclic(8) });
            }
            if plus {
                // Heisenberg group: (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')
                table_group(p * p * p, |u, v| {
                    let (a, b, c) = (u % p, u / p % p, u / (p * p));
                    let (x, y, z) = (v % p, v / p % p, v / (p * p));
                    (a + x) % p + (b + y) % p * p + (c + z + a * y) % p * p * p
                })
            } else {
                // x^i y^j with y x y^-1 = x^(1 + p), x of order p^2
                let m = p * p;
                let twist: Vec<usize> = (0..p).map(|j| arith::pow_mod(1 + p as u64, j as u64, m as u64) as usize).collect();
                table_group(m * p, |u, v| {
                    let (i, j) = (u % m, u / m);
                    let (k, l) = (v % m, v / m);
                    (i + k * twist[j]) % m + (j + l) % p * m
                })
            }
        }
        Recipe::Product(ref a, ref b) => build(a)?.direct_product(&build(b)?),
        Recipe::File(ref path) => invalid(format!("group file {path} must be loaded by the caller")),
    }
}

/// Recipe for a canonical catalog name, e.g. `S4`, `D10`, `F(7,3)`,
/// `C4xC2`, `S3xC5`, `E27-`.
pub fn parse_name(name: &str) -> Result<Recipe> {
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() > 1 {
        let recipes = parts.iter().map(|p| parse_atom(p)).collect::<Result<Vec<_>>>()?;
        if recipes.iter().all(|r| matches!(r, Recipe::Cyclic(_))) {
            let factors = recipes
                .iter()
                .map(|r| match r {
                    Recipe::Cyclic(n) => *n,
                    _ => unreachable!(),
                })
                .collect();
            return Ok(Recipe::Abelian(factors));
        }
        let mut iter = recipes.into_iter();
        let first = iter.next().unwrap();
        return Ok(iter.fold(first, |acc, r| Recipe::Product(Box::new(acc), Box::new(r))));
    }
    parse_atom(name)
}

fn parse_atom(name: &str) -> Result<Recipe> {
    let number = |s: &str| -> Result<usize> {
        s.parse::<usize>()
            .map_err(|_| Error::InvalidRecipe(format!("unknown group name {name:?}")))
    };
    if name == "Q8" {
        return Ok(Recipe::Dicyclic(8));
    }
    if let Some(rest) = name.strip_prefix("F(").and_then(|s| s.strip_suffix(')')) {
        let (p, q) = rest
            .split_once(',')
            .ok_or_else(|| Error::InvalidRecipe(format!("malformed Frobenius name {name:?}")))?;
        let (p, q) = (number(p.trim())? as u64, number(q.trim())? as u64);
        let r = least_frobenius_multiplier(p, q)
            .ok_or_else(|| Error::InvalidRecipe(format!("no multiplier of order {q} modulo {p}")))?;
        return Ok(Recipe::Frobenius { p, q, r });
    }
    if let Some(rest) = name.strip_prefix("Dic") {
        return Ok(Recipe::Dicyclic(number(rest)?));
    }
    if let Some(rest) = name.strip_prefix('E') {
        let (digits, plus) = match rest.as_bytes().last() {
            Some(b'+') => (&rest[..rest.len() - 1], true),
            Some(b'-') => (&rest[..rest.len() - 1], false),
            _ => return invalid(format!("unknown group name {name:?}")),
        };
        let order = number(digits)? as u64;
        let p = (2..=order).find(|&p| p * p * p == order);
        return match p {
            Some(p) => Ok(Recipe::Extraspecial { p, plus }),
            None => invalid(format!("{order} is not a cube")),
        };
    }
    let (head, tail) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
    match head {
        "C" => Ok(Recipe::Cyclic(number(tail)?)),
        "D" => Ok(Recipe::Dihedral(number(tail)?)),
        "S" => Ok(Recipe::Symmetric(number(tail)?)),
        "A" => Ok(Recipe::Alternating(number(tail)?)),
        _ => invalid(format!("unknown group name {name:?}")),
    }
}

/// The 28 groups of order at most 15, one per isomorphism class.
pub fn all_groups_up_to_15() -> Vec<CatalogEntry> {
    use Recipe::*;
    let recipes = [
        Cyclic(1),
        Cyclic(2),
        Cyclic(3),
        Cyclic(4),
        Abelian(vec![2, 2]),
        Cyclic(5),
        Cyclic(6),
        Symmetric(3),
        Cyclic(7),
        Cyclic(8),
        Abelian(vec![4, 2]),
        Abelian(vec![2, 2, 2]),
        Dihedral(8),
        Dicyclic(8),
        Cyclic(9),
        Abelian(vec![3, 3]),
        Cyclic(10),
        Dihedral(10),
        Cyclic(11),
        Cyclic(12),
        Abelian(vec![6, 2]),
        Dihedral(12),
        Alternating(4),
        Dicyclic(12),
        Cyclic(13),
        Cyclic(14),
        Dihedral(14),
        Cyclic(15),
    ];
    recipes.into_iter().map(CatalogEntry::new).collect()
}

/// Invariant-factor decompositions `n1 >= n2 >= ...`, `n_(i+1) | n_i`, of
/// the abelian groups of order `n`.
pub fn abelian_invariant_factors(n: usize) -> Vec<Vec<usize>> {
    fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (1..=k.min(max)).rev() {
            for mut rest in partitions(k - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut lists: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, k) in arith::factorize(n as u64) {
        let mut next = Vec::new();
        for list in &lists {
            for part in partitions(k, k) {
                let len = list.len().max(part.len());
                let combined: Vec<usize> = (0..len)
                    .map(|i| {
                        list.get(i).copied().unwrap_or(1) * (p as usize).pow(part.get(i).copied().unwrap_or(0))
                    })
                    .collect();
                next.push(combined);
            }
        }
        lists = next;
    }
    if n == 1 {
        return vec![vec![1]];
    }
    lists.sort_unstable();
    lists
}

/// Family instances of order at most `max_order`, deduplicated by
/// isomorphism within each order.
pub fn extended_corpus(max_order: usize) -> Result<Vec<CatalogEntry>> {
    use Recipe::*;
    let mut candidates: Vec<Recipe> = Vec::new();
    for n in 1..=max_order {
        candidates.push(Cyclic(n));
        candidates.extend(
            abelian_invariant_factors(n)
                .into_iter()
                .filter(|f| f.len() > 1)
                .map(Abelian),
        );
    }
    candidates.extend((1..=5).map(Symmetric));
    candidates.extend((1..=6).map(Alternating));
    candidates.extend((2..=max_order / 2).map(|n| Dihedral(2 * n)));
    candidates.extend((2..=max_order / 4).map(|n| Dicyclic(4 * n)));
    for p in (3..=max_order as u64).filter(|&p| arith::is_prime(p)) {
        for q in arith::divisors(p - 1).into_iter().filter(|&q| q > 1) {
            if let Some(r) = least_frobenius_multiplier(p, q) {
                candidates.push(Frobenius { p, q, r });
            }
        }
    }
    for p in [2u64, 3, 5, 7] {
        candidates.push(Extraspecial { p, plus: true });
        candidates.push(Extraspecial { p, plus: false });
    }
    candidates.retain(|r| r.order().is_some_and(|o| o <= max_order));

    // Products draw on the deduplicated families, so each factor carries
    // its preferred name.
    let base = dedup_by_isomorphism(candidates.into_iter().map(CatalogEntry::new).collect())?;
    let mut factors = Vec::new();
    for entry in base.iter().filter(|e| e.recipe.order().unwrap() > 1) {
        factors.push((entry.recipe.clone(), entry.build()?.is_abelian()));
    }
    let mut products = Vec::new();
    for (a, a_abelian) in &factors {
        for (b, _) in &factors {
            let (m, n) = (a.order().unwrap(), b.order().unwrap());
            if !a_abelian && m * n <= max_order && arith::gcd(m as u64, n as u64) == 1 {
                products.push(CatalogEntry::new(Product(Box::new(a.clone()), Box::new(b.clone()))));
            }
        }
    }
    let mut all = base;
    all.extend(products);
    dedup_by_isomorphism(all)
}

/// Keeps the first member of each isomorphism class after ordering by
/// `(order, family, position)`, then sorts by `(order, family, name)`.
pub fn dedup_by_isomorphism(entries: Vec<CatalogEntry>) -> Result<Vec<CatalogEntry>> {
    let mut built: Vec<(CatalogEntry, FiniteGroup)> = entries
        .into_iter()
        .map(|e| e.build().map(|g| (e, g)))
        .collect::<Result<_>>()?;
    // Stable: ties keep input position.
    built.sort_by_key(|(e, g)| (g.order(), e.recipe.family()));
    let mut kept: Vec<(CatalogEntry, FiniteGroup, ConjugacyData, Fingerprint)> = Vec::new();
    for (entry, g) in built {
        if kept.iter().any(|k| k.0.name == entry.name) {
            continue;
        }
        let cd = ConjugacyData::new(&g);
        let fp = Fingerprint::new(&g, &cd);
        let mut duplicate = false;
        for (_, h, ch, fh) in kept.iter().rev() {
            if h.order() != g.order() {
                break;
            }
            if *fh == fp && is_isomorphic_with(&g, &cd, h, ch)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            kept.push((entry, g, cd, fp));
        }
    }
    Ok(kept.into_iter().map(|k| k.0).collect())
}

/// The exhaustive list through order 15 merged with the family corpus up to
/// `max_order`, one entry per isomorphism class.
pub fn verification_corpus(max_order: usize) -> Result<Vec<CatalogEntry>> {
    let mut entries: Vec<CatalogEntry> = all_groups_up_to_15()
        .into_iter()
        .filter(|e| e.recipe.order().is_some_and(|o| o <= max_order))
        .collect();
    entries.extend(extended_corpus(max_order)?);
    dedup_by_isomorphism(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::is_isomorphic;

    fn names(entries: &[CatalogEntry]) -> Vec<&str> {
        entries.iter().map(|e| e.name.as_str()).collect()
    }

    #[test]
    fn recipes_build_with_advertised_order() {
        for name in ["C1", "C6", "C4xC2", "D10", "Q8", "Dic12", "F(7,3)", "S4", "A5", "E27+", "E27-", "S3xC5", "D8"] {
            let recipe = parse_name(name).unwrap();
            assert_eq!(recipe.name(), name);
            let g = build(&recipe).unwrap();
            assert_eq!(Some(g.order()), recipe.order(), "{name}");
        }
    }

    #[test]
    fn frobenius_recipe_validation() {
        let g = build(&Recipe::Frobenius { p: 7, q: 3, r: 2 }).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        let err = build(&Recipe::Frobenius { p: 7, q: 3, r: 3 }).unwrap_err();
        assert!(matches!(err, Error::InvalidRecipe(ref m) if m.contains("order 6")));
        assert!(build(&Recipe::Frobenius { p: 8, q: 7, r: 3 }).is_err());
        assert!(build(&Recipe::Frobenius { p: 7, q: 4, r: 2 }).is_err());
    }

    #[test]
    fn extraspecial_exponents() {
        assert_eq!(build(&Recipe::Extraspecial { p: 3, plus: true }).unwrap().exponent(), 3);
        assert_eq!(build(&Recipe::Extraspecial { p: 3, plus: false }).unwrap().exponent(), 9);
        assert!(!build(&Recipe::Extraspecial { p: 5, plus: false }).unwrap().is_abelian());
    }

    #[test]
    fn build_is_deterministic() {
        for e in all_groups_up_to_15() {
            assert_eq!(e.build().unwrap(), e.build().unwrap());
        }
    }

    #[test]
    fn small_groups_list() {
        let all = all_groups_up_to_15();
        assert_eq!(all.len(), 28);
        let mut counts = [0usize; 16];
        let groups: Vec<FiniteGroup> = all.iter().map(|e| e.build().unwrap()).collect();
        for g in &groups {
            counts[g.order()] += 1;
        }
        assert_eq!(&counts[1..], [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1]);
        for i in 0..groups.len() {
            for j in i + 1..groups.len() {
                assert!(!is_isomorphic(&groups[i], &groups[j]).unwrap(), "{} ~ {}", all[i].name, all[j].name);
            }
        }
        let order8: Vec<&str> = all.iter().zip(&groups).filter(|(_, g)| g.order() == 8).map(|(e, _)| e.name.as_str()).collect();
        assert_eq!(order8, ["C8", "C4xC2", "C2xC2xC2", "D8", "Q8"]);
        let order12: Vec<&str> = all.iter().zip(&groups).filter(|(_, g)| g.order() == 12).map(|(e, _)| e.name.as_str()).collect();
        assert!(order12.contains(&"A4") && order12.contains(&"D12"));
    }

    #[test]
    fn invariant_factors() {
        assert_eq!(abelian_invariant_factors(8), [vec![2, 2, 2], vec![4, 2], vec![8]]);
        assert_eq!(abelian_invariant_factors(12), [vec![6, 2], vec![12]]);
        assert_eq!(abelian_invariant_factors(1), [vec![1]]);
        assert_eq!(abelian_invariant_factors(64).len(), 11);
    }

    #[test]
    fn extended_corpus_small() {
        let six = extended_corpus(6).unwrap();
        assert_eq!(names(&six), ["C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3"]);
        let big = extended_corpus(21).unwrap();
        assert!(names(&big).contains(&"C21") && names(&big).contains(&"F(7,3)"));
        assert!(names(&big).contains(&"D10") && !names(&big).contains(&"F(5,2)"));
    }

    #[test]
    fn corpus_at_sixty_contains_a5() {
        let corpus = extended_corpus(60).unwrap();
        assert!(names(&corpus).contains(&"A5"));
    }

    #[test]
    fn verification_corpus_merges_small_list() {
        let corpus = verification_corpus(15).unwrap();
        assert_eq!(corpus.len(), 28);
    }
}
