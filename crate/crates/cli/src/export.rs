//! JSON and DOT exports. Field order follows struct declaration order, so
//! every export is deterministic.

use std::fmt::Write as _;

use codegree_core::analysis::GroupAnalysis;
use codegree_core::catalog::CatalogEntry;
use codegree_core::graph::Graph;
use serde::Serialize;

#[derive(Serialize)]
pub struct TableExport {
    pub group: String,
    pub order: usize,
    pub conductor: u32,
    pub classes: Vec<ClassExport>,
    pub characters: Vec<CharacterExport>,
}

#[derive(Serialize)]
pub struct ClassExport {
    pub size: usize,
    pub element_order: usize,
}

#[derive(Serialize)]
pub struct CharacterExport {
    pub degree: u64,
    pub codegree: u64,
    /// One coefficient vector per class: entry `k` is the coefficient of
    /// `z^k` over the conductor, as an exact decimal or fraction string.
    pub values: Vec<Vec<String>>,
}

pub fn table_export(a: &GroupAnalysis) -> TableExport {
    let t = &a.table;
    let e = t.conductor() as usize;
    TableExport {
        group: a.name.clone(),
        order: t.order(),
        conductor: t.conductor(),
        classes: t
            .class_sizes()
            .iter()
            .zip(t.class_element_orders())
            .map(|(&size, &element_order)| ClassExport { size, element_order })
            .collect(),
        characters: (0..t.len())
            .map(|row| CharacterExport {
                degree: t.degree(row),
                codegree: a.codegrees[row].codegree,
                values: t
                    .row(row)
                    .map(|v| {
                        let mut dense = vec!["0".to_string(); e];
                        for (k, c) in v.terms() {
                            dense[*k as usize] = c.to_string();
                        }
                        dense
                    })
                    .collect(),
            })
            .collect(),
    }
}

pub fn table_json(a: &GroupAnalysis) -> String {
    let mut out = serde_json::to_string_pretty(&table_export(a)).expect("plain data serializes");
    out.push('\n');
    out
}

/// Which codegree graph to draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Gamma,
    Delta,
}

/// Undirected DOT; vertices in row or prime order, edges sorted.
pub fn dot(a: &GroupAnalysis, kind: GraphKind) -> String {
    let (id, labels, graph): (&str, Vec<u64>, &Graph) = match kind {
        GraphKind::Gamma => ("gamma", a.gamma.codegrees.clone(), &a.gamma.graph),
        GraphKind::Delta => ("delta", a.delta.primes.clone(), &a.delta.graph),
    };
    let mut out = String::new();
    writeln!(out, "graph {id} {{").unwrap();
    writeln!(out, "  label={:?};", a.name).unwrap();
    for (v, label) in labels.iter().enumerate() {
        writeln!(out, "  v{v} [label=\"{label}\"];").unwrap();
    }
    for (u, v) in graph.edges() {
        writeln!(out, "  v{u} -- v{v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
pub struct ManifestEntry {
    pub name: String,
    pub order: Option<usize>,
    pub recipe: String,
}

pub fn manifest(entries: &[CatalogEntry]) -> Vec<ManifestEntry> {
    entries
        .iter()
        .map(|e| ManifestEntry { name: e.name.clone(), order: e.recipe.order(), recipe: e.recipe.to_string() })
        .collect()
}

pub fn manifest_json(entries: &[CatalogEntry]) -> String {
    let mut out = serde_json::to_string_pretty(&manifest(entries)).expect("plain data serializes");
    out.push('\n');
    out
}
