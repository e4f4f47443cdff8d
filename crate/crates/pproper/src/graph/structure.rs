use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{Graph, GraphError, Vertex};

/// A path `u, interior..., w` whose interior vertices all have degree 2
/// and whose ends have degree at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thread {
    pub u: Vertex,
    pub interior: Vec<Vertex>,
    pub w: Vertex,
}

impl Thread {
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = vec![self.u];
        out.extend(&self.interior);
        out.push(self.w);
        out
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        let distinct: BTreeSet<_> = vs.iter().collect();
        distinct.len() == vs.len()
            && g.degree(self.u) >= 2
            && g.degree(self.w) >= 2
            && self.interior.iter().all(|&x| g.degree(x) == 2)
            && vs.windows(2).all(|p| g.has_edge(p[0], p[1]))
    }
}

pub(super) fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in g.vertices() {
        let mut dist: BTreeMap<Vertex, usize> = BTreeMap::from([(s, 0)]);
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[&x];
            if best.is_some_and(|b| 2 * dx + 1 >= b) {
                break;
            }
            for y in g.neighbors(x) {
                match dist.get(&y) {
                    None => {
                        dist.insert(y, dx + 1);
                        parent.insert(y, x);
                        queue.push_back(y);
                    }
                    Some(&dy) if parent.get(&x) != Some(&y) => {
                        let len = dx + dy + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    best
}

pub(super) fn bipartition(g: &Graph) -> Option<(BTreeSet<Vertex>, BTreeSet<Vertex>)> {
    let mut side: BTreeMap<Vertex, bool> = BTreeMap::new();
    for s in g.vertices() {
        if side.contains_key(&s) {
            continue;
        }
        side.insert(s, false);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let sx = side[&x];
            for y in g.neighbors(x) {
                match side.get(&y) {
                    None => {
                        side.insert(y, !sx);
                        queue.push_back(y);
                    }
                    Some(&sy) if sy == sx => return None,
                    _ => {}
                }
            }
        }
    }
    let a = side.iter().filter(|(_, &s)| !s).map(|(&v, _)| v).collect();
    let b = side.iter().filter(|(_, &s)| s).map(|(&v, _)| v).collect();
    Some((a, b))
}

/// Some `len`-thread, chosen with the smallest possible interior vertex
/// and then the lexicographically smallest interior.
pub fn find_thread(g: &Graph, len: usize) -> Option<Thread> {
    if len == 0 {
        return None;
    }
    let mut best: Option<((Vertex, Vec<Vertex>), Thread)> = None;
    let mut consider = |t: Thread| {
        if !t.is_valid_in(g) {
            return;
        }
        let mut t = t;
        if t.interior.first() > t.interior.last() {
            t.interior.reverse();
            std::mem::swap(&mut t.u, &mut t.w);
        }
        let key = (*t.interior.iter().min().unwrap(), t.interior.clone());
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, t));
        }
    };
    let mut seen = BTreeSet::new();
    for s in g.vertices() {
        if g.degree(s) != 2 || seen.contains(&s) {
            continue;
        }
        let (chain, ends) = degree_two_chain(g, s);
        seen.extend(chain.iter().copied());
        match ends {
            None => {
                let n = chain.len();
                if n < len + 2 {
                    continue;
                }
                for i in 0..n {
                    let interior: Vec<Vertex> = (0..len).map(|j| chain[(i + j) % n]).collect();
                    consider(Thread {
                        u: chain[(i + n - 1) % n],
                        interior,
                        w: chain[(i + len) % n],
                    });
                }
            }
            Some((e0, e1)) => {
                let mut ext = vec![e0];
                ext.extend(&chain);
                ext.push(e1);
                for i in 1..ext.len().saturating_sub(len) {
                    consider(Thread {
                        u: ext[i - 1],
                        interior: ext[i..i + len].to_vec(),
                        w: ext[i + len],
                    });
                }
            }
        }
    }
    best.map(|(_, t)| t)
}

/// The maximal run of degree-2 vertices through `s`, with its two outside
/// neighbours, or no ends when the run closes into a cycle.
fn degree_two_chain(g: &Graph, s: Vertex) -> (Vec<Vertex>, Option<(Vertex, Vertex)>) {
    let nbrs: Vec<Vertex> = g.neighbors(s).collect();
    let mut halves = Vec::new();
    for &first in &nbrs {
        let mut run = Vec::new();
        let mut prev = s;
        let mut cur = first;
        loop {
            if cur == s {
                // closed cycle of degree-2 vertices
                let mut cyc = vec![s];
                cyc.extend(run);
                return (cyc, None);
            }
            if g.degree(cur) != 2 {
                halves.push((run, cur));
                break;
            }
            run.push(cur);
            let next = g.neighbors(cur).find(|&x| x != prev).unwrap();
            prev = cur;
            cur = next;
        }
    }
    let (left, e0) = halves.remove(0);
    let (right, e1) = halves.remove(0);
    let mut chain: Vec<Vertex> = left.into_iter().rev().collect();
    chain.push(s);
    chain.extend(right);
    (chain, Some((e0, e1)))
}

/// A path `u v w x` with `d(u) = 1`, `d(v) = d(w) = 2` and `d(x) >= 2`,
/// scanning leaves in increasing order.
pub fn find_long_pending_path(g: &Graph) -> Option<[Vertex; 4]> {
    for u in g.vertices() {
        if g.degree(u) != 1 {
            continue;
        }
        let v = g.neighbors(u).next()?;
        if g.degree(v) != 2 {
            continue;
        }
        let w = g.neighbors(v).find(|&x| x != u)?;
        if g.degree(w) != 2 {
            continue;
        }
        let x = g.neighbors(w).find(|&y| y != v)?;
        if g.degree(x) >= 2 {
            return Some([u, v, w, x]);
        }
    }
    None
}

#[derive(Clone, Debug, Default)]
pub struct RootedForest {
    pub parent: BTreeMap<Vertex, Option<Vertex>>,
    pub depth: BTreeMap<Vertex, usize>,
    pub children: BTreeMap<Vertex, Vec<Vertex>>,
}

/// Breadth-first orientation away from `roots`. The search never steps
/// from one root into another, so with the vertices of a 2-core as roots
/// this yields the pending trees hanging from it.
pub fn rooted_forest(g: &Graph, roots: &BTreeSet<Vertex>) -> RootedForest {
    let mut f = RootedForest::default();
    let mut queue = VecDeque::new();
    for &r in roots {
        f.parent.insert(r, None);
        f.depth.insert(r, 0);
        queue.push_back(r);
    }
    while let Some(x) = queue.pop_front() {
        let dx = f.depth[&x];
        for y in g.neighbors(x) {
            if roots.contains(&y) || f.parent.contains_key(&y) {
                continue;
            }
            f.parent.insert(y, Some(x));
            f.depth.insert(y, dx + 1);
            f.children.entry(x).or_default().push(y);
            queue.push_back(y);
        }
    }
    f
}

#[derive(Clone, Debug)]
pub struct TreeStructure {
    pub root: Vertex,
    pub forest: RootedForest,
    /// Branching vertex farthest from the root, smallest id on ties.
    pub deepest_branching: Option<Vertex>,
    /// Descending paths below the deepest branching vertex, each listed
    /// from the son of that vertex down to a leaf.
    pub pending_paths: Vec<Vec<Vertex>>,
    pub long_pending_path: Option<[Vertex; 4]>,
}

pub fn tree_structure(t: &Graph, root: Vertex) -> Result<TreeStructure, GraphError> {
    if !t.has_vertex(root) {
        return Err(GraphError::UnknownVertex(root));
    }
    if !t.is_tree() {
        return Err(GraphError::NotATree(format!(
            "{} vertices, {} edges, {} components",
            t.vertex_count(),
            t.edge_count(),
            t.components().len()
        )));
    }
    let forest = rooted_forest(t, &BTreeSet::from([root]));
    let deepest_branching = t
        .vertices()
        .filter(|&v| t.degree(v) >= 3)
        .max_by_key(|&v| (forest.depth[&v], std::cmp::Reverse(v)));
    let mut pending_paths = Vec::new();
    if let Some(u) = deepest_branching {
        for &c in forest.children.get(&u).map(Vec::as_slice).unwrap_or(&[]) {
            let mut path = vec![c];
            let mut cur = c;
            while let Some(kids) = forest.children.get(&cur) {
                cur = kids[0];
                path.push(cur);
            }
            pending_paths.push(path);
        }
    }
    Ok(TreeStructure {
        root,
        deepest_branching,
        pending_paths,
        long_pending_path: find_long_pending_path(t),
        forest,
    })
}

/// Vertices surviving repeated deletion of vertices of degree at most 1.
pub fn two_core(g: &Graph) -> BTreeSet<Vertex> {
    let mut deg: BTreeMap<Vertex, usize> = g.vertices().map(|v| (v, g.degree(v))).collect();
    let mut alive: BTreeSet<Vertex> = g.vertices().collect();
    let mut stack: Vec<Vertex> = g.vertices().filter(|&v| deg[&v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive.remove(&v) {
            continue;
        }
        for w in g.neighbors(v) {
            if alive.contains(&w) {
                let d = deg.get_mut(&w).unwrap();
                *d -= 1;
                if *d == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// A shortest cycle, checked to be chordless, given by its
/// lexicographically smallest vertex sequence (smallest vertex first, then
/// its smaller cycle neighbour).
pub fn shortest_induced_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let len = girth(g)?;
    for s in g.vertices() {
        let mut path = vec![s];
        if let Some(c) = cycle_from(g, s, len, &mut path) {
            return Some(c);
        }
    }
    None
}

fn cycle_from(g: &Graph, s: Vertex, len: usize, path: &mut Vec<Vertex>) -> Option<Vec<Vertex>> {
    let last = *path.last().unwrap();
    if path.len() == len {
        if g.has_edge(last, s) && path[1] < path[len - 1] && is_chordless(g, path) {
            return Some(path.clone());
        }
        return None;
    }
    for y in g.neighbors(last) {
        if y <= s || path.contains(&y) {
            continue;
        }
        path.push(y);
        if let Some(c) = cycle_from(g, s, len, path) {
            return Some(c);
        }
        path.pop();
    }
    None
}

fn is_chordless(g: &Graph, cycle: &[Vertex]) -> bool {
    let n = cycle.len();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if g.has_edge(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}
