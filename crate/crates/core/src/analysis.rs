//! The full per-group pipeline: classes, normal subgroups, character table,
//! codegrees, both graphs and the Frobenius structure.

use alloc::string::String;
use alloc::vec::Vec;

use crate::chartable::{character_table, CharacterTable};
use crate::classes::ConjugacyData;
use crate::codegree::{build_delta, build_gamma, codegrees, nonprincipal_multiset, CodegreeGraph, CodegreeRecord, PrimeCodegreeGraph};
use crate::error::Result;
use crate::graph::GraphAnalytics;
use crate::group::FiniteGroup;
use crate::normal::{normal_subgroups, structural_predicates, NormalSubgroups, StructuralPredicates};
use crate::structure::{
    frobenius_witness, prime_power_codegree_predicate, two_frobenius_witness, FrobeniusWitness,
    PrimePowerPredicate, TwoFrobeniusWitness,
};

#[derive(Clone, Debug)]
pub struct GroupAnalysis {
    pub name: String,
    pub group: FiniteGroup,
    pub classes: ConjugacyData,
    pub normals: NormalSubgroups,
    pub predicates: StructuralPredicates,
    pub table: CharacterTable,
    pub codegrees: Vec<CodegreeRecord>,
    pub gamma: CodegreeGraph,
    pub delta: PrimeCodegreeGraph,
    pub gamma_stats: GraphAnalytics,
    pub delta_stats: GraphAnalytics,
    pub frobenius: Option<FrobeniusWitness>,
    pub two_frobenius: Option<TwoFrobeniusWitness>,
    pub prime_power: PrimePowerPredicate,
}

impl GroupAnalysis {
    pub fn new(name: impl Into<String>, group: FiniteGroup) -> Result<Self> {
        let classes = ConjugacyData::new(&group);
        let normals = normal_subgroups(&group, &classes);
        let predicates = structural_predicates(&group, &normals);
        let table = character_table(&group, &classes)?;
        let records = codegrees(&table)?;
        let gamma = build_gamma(&records);
        let delta = build_delta(&records);
        let frobenius = frobenius_witness(&group, &normals);
        let two_frobenius = two_frobenius_witness(&group, &normals);
        let prime_power = prime_power_codegree_predicate(&group, frobenius.as_ref(), &records);
        Ok(GroupAnalysis {
            name: name.into(),
            gamma_stats: gamma.analytics(),
            delta_stats: delta.analytics(),
            group,
            classes,
            normals,
            predicates,
            table,
            codegrees: records,
            gamma,
            delta,
            frobenius,
            two_frobenius,
            prime_power,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Sorted codegrees of the nonprincipal characters.
    pub fn nonprincipal_codegrees(&self) -> Vec<u64> {
        nonprincipal_multiset(&self.codegrees)
    }

    /// Sorted codegrees of all characters.
    pub fn codegree_multiset(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.codegrees.iter().map(|r| r.codegree).collect();
        out.sort_unstable();
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        !self.gamma_stats.has_triangle()
    }
}
