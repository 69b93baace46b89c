//! Character codegrees `|G : ker chi| / chi(1)` and the two graphs built on
//! them: the character graph on nonprincipal characters, joined when their
//! codegrees share a prime, and the prime graph joining `p` and `q` when
//! `pq` divides some nonprincipal codegree.

use alloc::vec::Vec;

use crate::arith;
use crate::chartable::CharacterTable;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphAnalytics};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodegreeRecord {
    pub row: usize,
    pub codegree: u64,
    pub factorization: Vec<(u64, u32)>,
}

impl CodegreeRecord {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factorization.iter().map(|&(p, _)| p)
    }

    pub fn is_prime_power(&self) -> bool {
        self.factorization.len() == 1
    }

    fn shares_prime(&self, other: &CodegreeRecord) -> bool {
        let (a, b) = (&self.factorization, &other.factorization);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

/// One record per row of the table, principal character included.
pub fn codegrees(table: &CharacterTable) -> Result<Vec<CodegreeRecord>> {
    (0..table.len())
        .map(|row| {
            let index = (table.order() / table.kernel_order(row)) as u64;
            let degree = table.degree(row);
            if index % degree != 0 {
                return Err(Error::NonIntegralCodegree { row });
            }
            let codegree = index / degree;
            Ok(CodegreeRecord {
                row,
                codegree,
                factorization: arith::factorize(codegree),
            })
        })
        .collect()
}

/// Sorted nonprincipal codegrees.
pub fn nonprincipal_multiset(records: &[CodegreeRecord]) -> Vec<u64> {
    let mut out: Vec<u64> = records.iter().filter(|r| r.row != 0).map(|r| r.codegree).collect();
    out.sort_unstable();
    out
}

/// Graph on the nonprincipal characters; vertex `i` is `rows[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodegreeGraph {
    pub rows: Vec<usize>,
    pub codegrees: Vec<u64>,
    pub graph: Graph,
}

/// Graph on the primes dividing nonprincipal codegrees, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCodegreeGraph {
    pub primes: Vec<u64>,
    pub graph: Graph,
}

pub fn build_gamma(records: &[CodegreeRecord]) -> CodegreeGraph {
    let vertices: Vec<&CodegreeRecord> = records.iter().filter(|r| r.row != 0).collect();
    let mut edges = Vec::new();
    for (i, a) in vertices.iter().enumerate() {
        for (j, b) in vertices.iter().enumerate().skip(i + 1) {
            if a.shares_prime(b) {
                edges.push((i, j));
            }
        }
    }
    CodegreeGraph {
        rows: vertices.iter().map(|r| r.row).collect(),
        codegrees: vertices.iter().map(|r| r.codegree).collect(),
        graph: Graph::new(vertices.len(), edges),
    }
}

pub fn build_delta(records: &[CodegreeRecord]) -> PrimeCodegreeGraph {
    let nonprincipal = || records.iter().filter(|r| r.row != 0);
    let mut primes: Vec<u64> = nonprincipal().flat_map(|r| r.primes()).collect();
    primes.sort_unstable();
    primes.dedup();
    let index = |p: u64| primes.binary_search(&p).unwrap();
    let mut edges = Vec::new();
    for r in nonprincipal() {
        let ps: Vec<u64> = r.primes().collect();
        for (i, &p) in ps.iter().enumerate() {
            for &q in &ps[i + 1..] {
                edges.push((index(p), index(q)));
            }
        }
    }
    let graph = Graph::new(primes.len(), edges);
    PrimeCodegreeGraph { primes, graph }
}

impl CodegreeGraph {
    pub fn analytics(&self) -> GraphAnalytics {
        self.graph.analytics()
    }
}

impl PrimeCodegreeGraph {
    pub fn analytics(&self) -> GraphAnalytics {
        self.graph.analytics()
    }
}

pub fn component_count_agreement(gamma: &CodegreeGraph, delta: &PrimeCodegreeGraph) -> bool {
    gamma.analytics().component_count == delta.analytics().component_count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartable::character_table;
    use crate::classes::ConjugacyData;
    use crate::group::FiniteGroup;
    use crate::perm::Permutation;

    fn group(degree: usize, gens: &[&[&[usize]]]) -> FiniteGroup {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|cs| {
                let cs: Vec<Vec<usize>> = cs.iter().map(|c| c.to_vec()).collect();
                Permutation::from_cycles(degree, &cs).unwrap()
            })
            .collect();
        FiniteGroup::from_generators(degree, &gens).unwrap()
    }

    fn records(g: &FiniteGroup) -> Vec<CodegreeRecord> {
        let cd = ConjugacyData::new(g);
        codegrees(&character_table(g, &cd).unwrap()).unwrap()
    }

    fn records_from_values(values: &[u64]) -> Vec<CodegreeRecord> {
        values
            .iter()
            .enumerate()
            .map(|(row, &c)| CodegreeRecord { row, codegree: c, factorization: arith::factorize(c) })
            .collect()
    }

    #[test]
    fn small_group_codegrees() {
        let s3 = group(3, &[&[&[0, 1, 2]], &[&[0, 1]]]);
        assert_eq!(nonprincipal_multiset(&records(&s3)), [2, 3]);
        let d10 = group(5, &[&[&[0, 1, 2, 3, 4]], &[&[1, 4], &[2, 3]]]);
        assert_eq!(nonprincipal_multiset(&records(&d10)), [2, 5, 5]);
        let a4 = group(4, &[&[&[0, 1, 2]], &[&[1, 2, 3]]]);
        assert_eq!(nonprincipal_multiset(&records(&a4)), [3, 3, 4]);
        let f21 = group(7, &[&[&[0, 1, 2, 3, 4, 5, 6]], &[&[1, 2, 4], &[3, 6, 5]]]);
        assert_eq!(f21.order(), 21);
        assert_eq!(nonprincipal_multiset(&records(&f21)), [3, 3, 7, 7]);
        let q8 = group(8, &[&[&[0, 1, 2, 3], &[4, 5, 6, 7]], &[&[0, 4, 2, 6], &[1, 7, 3, 5]]]);
        assert_eq!(nonprincipal_multiset(&records(&q8)), [2, 2, 2, 4]);
        for g in [&s3, &d10, &a4, &f21, &q8] {
            let r = records(g);
            assert_eq!(r[0].codegree, 1);
            assert!(r[1..].iter().all(|x| x.codegree > 1));
        }
    }

    #[test]
    fn gamma_examples() {
        let s3 = build_gamma(&records_from_values(&[1, 2, 3]));
        assert_eq!(s3.graph.edge_count(), 0);
        assert_eq!(s3.analytics().component_count, 2);

        let a4 = build_gamma(&records_from_values(&[1, 3, 3, 4]));
        assert_eq!(a4.graph.edges(), [(0, 1)]);
        assert!(!a4.analytics().has_triangle());

        let s4 = build_gamma(&records_from_values(&[1, 2, 3, 8, 8]));
        let a = s4.analytics();
        assert_eq!(a.component_count, 2);
        assert_eq!(a.triangle, Some([0, 2, 3]));

        let a5 = build_gamma(&records_from_values(&[1, 20, 20, 15, 12]));
        let a = a5.analytics();
        assert!(a.is_complete && a.has_triangle());
        assert_eq!(a.diameter(), Some(1));
    }

    #[test]
    fn delta_examples() {
        let s3 = build_delta(&records_from_values(&[1, 2, 3]));
        assert_eq!(s3.primes, [2, 3]);
        assert_eq!(s3.graph.edge_count(), 0);
        let q8 = build_delta(&records_from_values(&[1, 2, 2, 2, 4]));
        assert_eq!(q8.primes, [2]);
        let c6 = build_delta(&records_from_values(&[1, 2, 3, 3, 6, 6]));
        assert_eq!(c6.primes, [2, 3]);
        assert_eq!(c6.graph.edges(), [(0, 1)]);
    }

    #[test]
    fn component_counts_agree() {
        for values in [&[1u64, 2, 3][..], &[1, 2, 2, 2, 4], &[1, 3, 3, 4], &[1, 2, 3, 8, 8], &[1, 20, 20, 15, 12]] {
            let r = records_from_values(values);
            assert!(component_count_agreement(&build_gamma(&r), &build_delta(&r)));
        }
    }

    #[test]
    fn gamma_depends_only_on_multiset() {
        let a = build_gamma(&records_from_values(&[1, 6, 10, 15, 7, 14]));
        let b = build_gamma(&records_from_values(&[1, 14, 15, 7, 6, 10]));
        assert_eq!(a.graph.edge_count(), b.graph.edge_count());
    }
}
