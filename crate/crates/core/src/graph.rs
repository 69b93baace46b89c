//! Exact invariants of small undirected simple graphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// Undirected simple graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertices];
        for (u, v) in edges {
            assert!(u != v, "self-loop at {u}");
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// First triangle in lexicographic order, found by intersecting the
    /// neighbourhoods of each edge's endpoints.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (u, v) in self.edges() {
            let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    core::cmp::Ordering::Less => i += 1,
                    core::cmp::Ordering::Greater => j += 1,
                    core::cmp::Ordering::Equal => {
                        if a[i] > v {
                            return Some([u, v, a[i]]);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        None
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().all(|list| list.len() + 1 == n)
    }

    pub fn analytics(&self) -> GraphAnalytics {
        let n = self.vertex_count();
        let mut membership = vec![usize::MAX; n];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if membership[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let dist = self.distances(start);
            let members: Vec<usize> = (0..n).filter(|&v| dist[v].is_some()).collect();
            for &v in &members {
                membership[v] = id;
            }
            components.push(members);
        }
        let diameters = components
            .iter()
            .map(|members| {
                members
                    .iter()
                    .map(|&v| self.distances(v).into_iter().flatten().max().unwrap_or(0))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        GraphAnalytics {
            component_count: components.len(),
            membership,
            components,
            diameters,
            triangle: self.find_triangle(),
            is_complete: self.is_complete(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphAnalytics {
    pub component_count: usize,
    /// Component id of each vertex; ids follow the least vertex of each
    /// component.
    pub membership: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    /// Eccentricity maximum within each component; 0 for a single vertex.
    pub diameters: Vec<usize>,
    pub triangle: Option<[usize; 3]>,
    pub is_complete: bool,
}

impl GraphAnalytics {
    pub fn has_triangle(&self) -> bool {
        self.triangle.is_some()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count <= 1
    }

    /// Diameter when connected.
    pub fn diameter(&self) -> Option<usize> {
        match self.diameters.as_slice() {
            [d] => Some(*d),
            [] => Some(0),
            _ => None,
        }
    }
}
