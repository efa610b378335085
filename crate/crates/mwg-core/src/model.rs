//! Witness Gabriel semantics: drawings, induced graphs, and recognition of
//! complete multipartite targets.
//!
//! A drawing induces a graph against a witness point set: two vertices are
//! adjacent exactly when their closed Gabriel disk contains no witness. A
//! mutual instance is an ordered pair of drawings, each inducing against the
//! other's vertex positions.

use crate::geometry::{
    find_separating_line, gabriel_contains, GeometryError, Point, SeparatingLine,
};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("partition sizes must be positive and non-empty")]
    EmptySpec,
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("coincident vertex positions at {0}")]
    CoincidentVertices(Point),
    #[error("witness coincides with vertex position at {0}")]
    WitnessOnVertex(Point),
    #[error("coincident positions across the two drawings at {0}")]
    CrossDrawingCollision(Point),
    #[error("intended partition is inconsistent with the intended spec")]
    InconsistentPartition,
    #[error("stored separator does not strictly separate the drawings")]
    InvalidSeparator,
    #[error("vertex count {got} does not match spec size {want}")]
    WrongVertexCount { got: usize, want: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A complete multipartite graph, given by its partition-set sizes. The
/// sizes are kept sorted in descending order as the canonical form; two
/// vertices are adjacent exactly when they belong to different sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub struct GraphSpec {
    partition_sizes: Vec<u32>,
}

impl GraphSpec {
    pub fn new(sizes: &[u32]) -> Result<Self, ModelError> {
        if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
            return Err(ModelError::EmptySpec);
        }
        let mut partition_sizes = sizes.to_vec();
        partition_sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(GraphSpec { partition_sizes })
    }

    /// `K_{a,b}` helper.
    pub fn bipartite(a: u32, b: u32) -> Self {
        GraphSpec::new(&[a, b]).expect("positive sizes")
    }

    /// A single independent set of `n` vertices (one partition class).
    pub fn independent(n: u32) -> Result<Self, ModelError> {
        GraphSpec::new(&[n])
    }

    /// The star `K_{1,leaves}`.
    pub fn star(leaves: u32) -> Self {
        GraphSpec::bipartite(leaves.max(1), 1)
    }

    pub fn sizes(&self) -> &[u32] {
        &self.partition_sizes
    }

    pub fn class_count(&self) -> usize {
        self.partition_sizes.len()
    }

    pub fn n(&self) -> u32 {
        self.partition_sizes.iter().sum()
    }

    pub fn is_bipartite(&self) -> bool {
        self.class_count() == 2
    }
}

impl std::fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K")?;
        for (i, s) in self.partition_sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A labeled straight-line point set, optionally annotated with the graph it
/// is intended to realize.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    vertices: Vec<(String, Point)>,
    pub intended_spec: Option<GraphSpec>,
    pub intended_partition: Option<BTreeMap<String, usize>>,
}

impl Drawing {
    pub fn new(vertices: Vec<(String, Point)>) -> Result<Self, ModelError> {
        let mut labels = BTreeSet::new();
        for (label, _) in &vertices {
            if !labels.insert(label.clone()) {
                return Err(ModelError::DuplicateLabel(label.clone()));
            }
        }
        for i in 0..vertices.len() {
            for j in (i + 1)..vertices.len() {
                if vertices[i].1 == vertices[j].1 {
                    return Err(ModelError::CoincidentVertices(vertices[i].1.clone()));
                }
            }
        }
        Ok(Drawing {
            vertices,
            intended_spec: None,
            intended_partition: None,
        })
    }

    pub fn with_intended(
        mut self,
        spec: GraphSpec,
        partition: Option<BTreeMap<String, usize>>,
    ) -> Result<Self, ModelError> {
        if let Some(part) = &partition {
            let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
            for (label, _) in &self.vertices {
                let Some(&class) = part.get(label) else {
                    return Err(ModelError::InconsistentPartition);
                };
                *counts.entry(class).or_insert(0) += 1;
            }
            if part.len() != self.vertices.len() {
                return Err(ModelError::InconsistentPartition);
            }
            let mut sizes: Vec<u32> = counts.values().copied().collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            if sizes != spec.sizes() {
                return Err(ModelError::InconsistentPartition);
            }
        }
        self.intended_spec = Some(spec);
        self.intended_partition = partition;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[(String, Point)] {
        &self.vertices
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices.iter().map(|(l, _)| l.clone()).collect()
    }

    pub fn positions(&self) -> Vec<Point> {
        self.vertices.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn position_of(&self, label: &str) -> Option<&Point> {
        self.vertices
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, p)| p)
    }
}

/// An ordered pair of drawings, each serving as the other's witness set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MwgInstance {
    pub gamma0: Drawing,
    pub gamma1: Drawing,
    pub separator: Option<SeparatingLine>,
}

impl MwgInstance {
    pub fn new(
        gamma0: Drawing,
        gamma1: Drawing,
        separator: Option<SeparatingLine>,
    ) -> Result<Self, ModelError> {
        for (_, p) in gamma0.vertices() {
            if gamma1.vertices().iter().any(|(_, q)| q == p) {
                return Err(ModelError::CrossDrawingCollision(p.clone()));
            }
        }
        if let Some(line) = &separator {
            if !line.strictly_separates(&gamma0.positions(), &gamma1.positions()) {
                return Err(ModelError::InvalidSeparator);
            }
        }
        Ok(MwgInstance {
            gamma0,
            gamma1,
            separator,
        })
    }

    pub fn side(&self, i: usize) -> &Drawing {
        match i {
            0 => &self.gamma0,
            1 => &self.gamma1,
            _ => panic!("side index must be 0 or 1"),
        }
    }

    /// All positions of both drawings.
    pub fn all_positions(&self) -> Vec<Point> {
        let mut v = self.gamma0.positions();
        v.extend(self.gamma1.positions());
        v
    }

    /// The stored separator when valid, otherwise a freshly computed one.
    pub fn effective_separator(&self) -> Option<SeparatingLine> {
        if let Some(line) = &self.separator {
            return Some(line.clone());
        }
        find_separating_line(&self.gamma0.positions(), &self.gamma1.positions())
            .ok()
            .flatten()
    }
}

/// A graph on string labels, as induced from coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedGraph {
    pub labels: Vec<String>,
    pub edges: BTreeSet<(String, String)>,
}

impl InducedGraph {
    fn edge_key(a: &str, b: &str) -> (String, String) {
        if a <= b {
            (a.to_string(), b.to_string())
        } else {
            (b.to_string(), a.to_string())
        }
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.edges.contains(&Self::edge_key(a, b))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn degree(&self, label: &str) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| a == label || b == label)
            .count()
    }

    pub fn neighbors(&self, label: &str) -> Vec<String> {
        self.labels
            .iter()
            .filter(|l| *l != label && self.has_edge(label, l))
            .cloned()
            .collect()
    }
}

/// Graph diameter; `None` encodes infinity (disconnected or empty reach).
pub fn diameter(g: &InducedGraph) -> Option<u32> {
    let n = g.n();
    if n <= 1 {
        return Some(0);
    }
    let index: BTreeMap<&str, usize> = g
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut adj = vec![Vec::new(); n];
    for (a, b) in &g.edges {
        let (i, j) = (index[a.as_str()], index[b.as_str()]);
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut best = 0u32;
    for start in 0..n {
        let mut dist = vec![u32::MAX; n];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        let far = *dist.iter().max().unwrap();
        if far == u32::MAX {
            return None;
        }
        best = best.max(far);
    }
    Some(best)
}

/// Induce the witness Gabriel graph of `drawing` against witness points `witnesses`.
///
/// An edge `{u, v}` is present exactly when no witness lies in the closed
/// disk having `u` and `v` antipodal. A witness coinciding with a vertex
/// position is an input error, not a silent block.
pub fn induce_wg(drawing: &Drawing, witnesses: &[Point]) -> Result<InducedGraph, ModelError> {
    for (_, p) in drawing.vertices() {
        if witnesses.contains(p) {
            return Err(ModelError::WitnessOnVertex(p.clone()));
        }
    }
    let vs = drawing.vertices();
    let mut edges = BTreeSet::new();
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            let (ref la, ref pa) = vs[i];
            let (ref lb, ref pb) = vs[j];
            let mut blocked = false;
            for w in witnesses {
                if gabriel_contains(w, pa, pb)? {
                    blocked = true;
                    break;
                }
            }
            if !blocked {
                edges.insert(InducedGraph::edge_key(la, lb));
            }
        }
    }
    Ok(InducedGraph {
        labels: drawing.labels(),
        edges,
    })
}

/// Induce both sides of a mutual instance.
pub fn induce_mwg(inst: &MwgInstance) -> Result<(InducedGraph, InducedGraph), ModelError> {
    let g0 = induce_wg(&inst.gamma0, &inst.gamma1.positions())?;
    let g1 = induce_wg(&inst.gamma1, &inst.gamma0.positions())?;
    Ok((g0, g1))
}

/// Try to exhibit `g` as exactly the complete multipartite graph of `spec`.
///
/// Complete multipartite graphs are precisely the graphs whose complement's
/// connected components are cliques (the partition classes). Returns the
/// label-to-class assignment when `g` matches, `None` otherwise.
pub fn matches_spec(g: &InducedGraph, spec: &GraphSpec) -> Option<BTreeMap<String, usize>> {
    if g.n() != spec.n() as usize {
        return None;
    }
    let n = g.n();
    let labels = &g.labels;

    // Union-find over complement adjacency.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if !g.has_edge(&labels[i], &labels[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut components: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        components.entry(root).or_default().push(i);
    }
    // Each component must be a clique in the complement, i.e. an independent
    // set of g.
    for comp in components.values() {
        for (a, bi) in comp.iter().enumerate() {
            for bj in &comp[a + 1..] {
                if g.has_edge(&labels[*bi], &labels[*bj]) {
                    return None;
                }
            }
        }
    }
    let mut comp_list: Vec<Vec<usize>> = components.into_values().collect();
    comp_list.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let sizes: Vec<u32> = comp_list.iter().map(|c| c.len() as u32).collect();
    if sizes != spec.sizes() {
        return None;
    }
    let mut assignment = BTreeMap::new();
    for (class, comp) in comp_list.iter().enumerate() {
        for &i in comp {
            assignment.insert(labels[i].clone(), class);
        }
    }
    Some(assignment)
}

/// Check that an explicit partition assignment realizes `spec` on `g`:
/// adjacency must hold exactly between distinct classes.
pub fn partition_realizes(
    g: &InducedGraph,
    spec: &GraphSpec,
    partition: &BTreeMap<String, usize>,
) -> bool {
    if g.n() != spec.n() as usize || partition.len() != g.n() {
        return false;
    }
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    for label in &g.labels {
        let Some(&class) = partition.get(label) else {
            return false;
        };
        *counts.entry(class).or_insert(0) += 1;
    }
    let mut sizes: Vec<u32> = counts.values().copied().collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if sizes != spec.sizes() {
        return false;
    }
    for i in 0..g.n() {
        for j in (i + 1)..g.n() {
            let (a, b) = (&g.labels[i], &g.labels[j]);
            let cross_class = partition[a] != partition[b];
            if g.has_edge(a, b) != cross_class {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ratio;

    fn drawing(pts: &[(&str, i64, i64)]) -> Drawing {
        Drawing::new(
            pts.iter()
                .map(|&(l, x, y)| (l.to_string(), Point::ints(x, y)))
                .collect(),
        )
        .unwrap()
    }

    fn graph(labels: &[&str], edges: &[(&str, &str)]) -> InducedGraph {
        InducedGraph {
            labels: labels.iter().map(|s| s.to_string()).collect(),
            edges: edges
                .iter()
                .map(|&(a, b)| InducedGraph::edge_key(a, b))
                .collect(),
        }
    }

    #[test]
    fn empty_witness_set_blocks_nothing() {
        let d = drawing(&[("a", 0, 0), ("b", 2, 0)]);
        let g = induce_wg(&d, &[]).unwrap();
        assert_eq!(g.edges.len(), 1);
        assert!(g.has_edge("a", "b"));
    }

    #[test]
    fn interior_witness_blocks() {
        let d = drawing(&[("a", 0, 0), ("b", 2, 0)]);
        let w = vec![Point::new(ratio(1, 1), ratio(1, 2))];
        let g = induce_wg(&d, &w).unwrap();
        assert!(g.edges.is_empty());
    }

    #[test]
    fn boundary_witness_blocks() {
        // (1,1) lies exactly on the circle with diameter (0,0)-(2,0): the
        // disk is closed, so the edge is blocked.
        let d = drawing(&[("a", 0, 0), ("b", 2, 0)]);
        let g = induce_wg(&d, &[Point::ints(1, 1)]).unwrap();
        assert!(g.edges.is_empty());
    }

    #[test]
    fn witness_on_vertex_is_an_error() {
        let d = drawing(&[("a", 0, 0), ("b", 2, 0)]);
        assert!(matches!(
            induce_wg(&d, &[Point::ints(0, 0)]),
            Err(ModelError::WitnessOnVertex(_))
        ));
    }

    #[test]
    fn single_witness_mutual_instance() {
        let g0 = drawing(&[("a", 0, 5), ("b", 2, 5)]);
        let g1 = drawing(&[("w", 50, -50)]);
        let inst = MwgInstance::new(g0, g1, None).unwrap();
        let (i0, i1) = induce_mwg(&inst).unwrap();
        assert!(i0.has_edge("a", "b"));
        assert!(i1.edges.is_empty());
    }

    #[test]
    fn four_cycle_matches_k22() {
        let g = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]);
        let assignment = matches_spec(&g, &GraphSpec::bipartite(2, 2)).unwrap();
        assert_eq!(assignment["a"], assignment["c"]);
        assert_eq!(assignment["b"], assignment["d"]);
        assert_ne!(assignment["a"], assignment["b"]);
    }

    #[test]
    fn star_matches_k13() {
        let g = graph(&["c", "x", "y", "z"], &[("c", "x"), ("c", "y"), ("c", "z")]);
        assert!(matches_spec(&g, &GraphSpec::bipartite(3, 1)).is_some());
        assert!(matches_spec(&g, &GraphSpec::bipartite(2, 2)).is_none());
    }

    #[test]
    fn triangle_is_not_k21() {
        let g = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        assert!(matches_spec(&g, &GraphSpec::bipartite(2, 1)).is_none());
        // A triangle is K_{1,1,1}.
        assert!(matches_spec(&g, &GraphSpec::new(&[1, 1, 1]).unwrap()).is_some());
    }

    #[test]
    fn diameters() {
        let complete = graph(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")],
        );
        assert_eq!(diameter(&complete), Some(1));
        let cycle = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]);
        assert_eq!(diameter(&cycle), Some(2));
        let isolated = graph(&["a", "b"], &[]);
        assert_eq!(diameter(&isolated), None);
    }

    #[test]
    fn spec_canonical_form() {
        let s = GraphSpec::new(&[1, 5]).unwrap();
        assert_eq!(s.sizes(), &[5, 1]);
        assert_eq!(s.n(), 6);
        assert_eq!(s.to_string(), "K5,1");
    }
}
