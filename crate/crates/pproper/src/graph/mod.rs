//! Undirected simple graphs on non-negative integer vertex ids.
//!
//! Iteration is always in increasing id order so every algorithm built on
//! top of [`Graph`] is reproducible.

mod structure;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub use structure::{
    find_long_pending_path, find_thread, rooted_forest, shortest_induced_cycle, tree_structure,
    two_core, RootedForest, Thread, TreeStructure,
};

pub type Vertex = usize;

/// An unordered vertex pair, stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(&self) -> Vertex {
        self.0
    }

    pub fn v(&self) -> Vertex {
        self.1
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint different from `x`. Panics if `x` is not an endpoint.
    pub fn other(&self, x: Vertex) -> Vertex {
        if self.0 == x {
            self.1
        } else if self.1 == x {
            self.0
        } else {
            panic!("vertex {x} is not an endpoint of {self}")
        }
    }

    /// Key used by the JSON formats, e.g. `"3-7"`.
    pub fn key(&self) -> String {
        format!("{}-{}", self.0, self.1)
    }

    pub fn parse_key(s: &str) -> Option<Edge> {
        let (a, b) = s.trim().split_once('-')?;
        let a: Vertex = a.trim().parse().ok()?;
        let b: Vertex = b.trim().parse().ok()?;
        if a >= b {
            return None;
        }
        Some(Edge(a, b))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    pub fn new() -> Graph {
        Graph::default()
    }

    pub fn from_edges<I>(edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new();
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    pub fn add_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        if self.has_edge(a, b) {
            return Err(GraphError::DuplicateEdge(Edge::new(a, b)));
        }
        self.adj.entry(a).or_default().insert(b);
        self.adj.entry(b).or_default().insert(a);
        Ok(())
    }

    pub fn remove_edge(&mut self, e: Edge) {
        if let Some(n) = self.adj.get_mut(&e.0) {
            n.remove(&e.1);
        }
        if let Some(n) = self.adj.get_mut(&e.1) {
            n.remove(&e.0);
        }
    }

    pub fn remove_vertex(&mut self, v: Vertex) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for w in nbrs {
                if let Some(n) = self.adj.get_mut(&w) {
                    n.remove(&v);
                }
            }
        }
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adj.get(&a).is_some_and(|n| n.contains(&b))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// All edges in increasing order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (&u, nbrs) in &self.adj {
            for &v in nbrs.range(u + 1..) {
                out.push(Edge(u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|n| n.iter().copied())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, |n| n.len())
    }

    /// Edges at `v`, ordered by the other endpoint.
    pub fn incident(&self, v: Vertex) -> Vec<Edge> {
        self.neighbors(v).map(|w| Edge::new(v, w)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(|n| n.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(|n| n.len()).min().unwrap_or(0)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if seen.insert(y) {
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn induced<'a, I>(&self, keep: I) -> Graph
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let keep: BTreeSet<Vertex> = keep.into_iter().copied().collect();
        let mut g = Graph::new();
        for &v in &keep {
            let nbrs = self.adj.get(&v).map_or_else(BTreeSet::new, |n| {
                n.iter().copied().filter(|w| keep.contains(w)).collect()
            });
            g.adj.insert(v, nbrs);
        }
        g
    }

    pub fn without_vertices(&self, drop: &[Vertex]) -> Graph {
        let mut g = self.clone();
        for &v in drop {
            g.remove_vertex(v);
        }
        g
    }

    pub fn without_edges(&self, drop: &[Edge]) -> Graph {
        let mut g = self.clone();
        for &e in drop {
            g.remove_edge(e);
        }
        g
    }

    /// True iff no component is a single edge.
    pub fn is_nice(&self) -> bool {
        self.edges()
            .iter()
            .all(|e| self.degree(e.0) > 1 || self.degree(e.1) > 1)
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.is_connected() && self.is_forest()
    }

    /// Vertices of a path graph in order, starting from the end with the
    /// smaller id. `None` unless the graph is a path with at least one edge.
    pub fn path_order(&self) -> Option<Vec<Vertex>> {
        if self.edge_count() == 0 || !self.is_tree() || self.max_degree() > 2 {
            return None;
        }
        let start = self.vertices().find(|&v| self.degree(v) == 1)?;
        Some(self.walk(start, None))
    }

    /// Vertices of a cycle graph in order, starting at the smallest id and
    /// continuing towards its smaller neighbour.
    pub fn cycle_order(&self) -> Option<Vec<Vertex>> {
        if self.vertex_count() < 3 || !self.is_connected() {
            return None;
        }
        if self.adj.values().any(|n| n.len() != 2) {
            return None;
        }
        let start = self.vertices().next()?;
        let first = self.neighbors(start).next()?;
        Some(self.walk(start, Some(first)))
    }

    fn walk(&self, start: Vertex, first: Option<Vertex>) -> Vec<Vertex> {
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = match first.or_else(|| self.neighbors(start).next()) {
            Some(c) => c,
            None => return order,
        };
        while cur != start {
            order.push(cur);
            let next = self.neighbors(cur).find(|&w| w != prev);
            match next {
                Some(n) => {
                    prev = cur;
                    cur = n;
                }
                None => break,
            }
        }
        order
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        structure::girth(self)
    }

    /// Two-colour classes, or `None` when some cycle is odd. In each
    /// component the class containing its smallest vertex goes into the
    /// first set.
    pub fn bipartition(&self) -> Option<(BTreeSet<Vertex>, BTreeSet<Vertex>)> {
        structure::bipartition(self)
    }
}

/// Parses the edge-list text format: one `u v` pair per line, `#` starts a
/// comment, blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(GraphError::Parse {
                line: line_no,
                msg: format!("expected two vertex ids, found {:?}", line),
            });
        }
        let mut ids = [0usize; 2];
        for (slot, p) in ids.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(|_| GraphError::Parse {
                line: line_no,
                msg: format!("{p:?} is not a non-negative integer"),
            })?;
        }
        g.add_edge(ids[0], ids[1]).map_err(|e| GraphError::Parse {
            line: line_no,
            msg: e.to_string(),
        })?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.0, e.1));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_path_and_triangle() {
        let p = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.path_order(), Some(vec![0, 1, 2]));
        let t = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(t.cycle_order(), Some(vec![0, 1, 2]));
        assert_eq!(t.girth(), Some(3));
    }

    #[test]
    fn parse_rejects_duplicate_and_junk() {
        match parse_edge_list("0 1\n0 1") {
            Err(GraphError::Parse { line: 2, msg }) => assert!(msg.contains("duplicate")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_edge_list("# c\n0 1\n\n2 x"),
            Err(GraphError::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 3"),
            Err(GraphError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn comments_and_round_trip() {
        let g = parse_edge_list("# triangle\n2 0\n0 1 # first\n1 2\n").unwrap();
        let again = parse_edge_list(&to_edge_list(&g)).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn nice_graphs() {
        let k2 = Graph::from_edges([(0, 1)]).unwrap();
        assert!(!k2.is_nice());
        let p2 = Graph::from_edges([(0, 1), (1, 2)]).unwrap();
        assert!(p2.is_nice());
        let mixed = Graph::from_edges([(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(!mixed.is_nice());
    }

    #[test]
    fn components_sorted() {
        let g = Graph::from_edges([(5, 6), (0, 9), (9, 1)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 9], vec![5, 6]]);
    }
}
