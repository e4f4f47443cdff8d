//! Named graphs, random instance generators and isomorphism-free
//! enumeration of small connected graphs.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Edge, Graph, Vertex};
use crate::label::{Label, ListAssignment};

/// Path with `n` edges on vertices `0..=n`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges((0..n).map(|i| (i, i + 1))).expect("path edges are simple")
}

/// Cycle with `n >= 3` edges on vertices `0..n`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges((0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple")
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge(a, b).unwrap();
        }
    }
    g
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new();
    for x in 0..a {
        for y in a..a + b {
            g.add_edge(x, y).unwrap();
        }
    }
    g
}

/// Centre 0 with leaves `1..=q`.
pub fn star(q: usize) -> Graph {
    Graph::from_edges((1..=q).map(|i| (0, i))).unwrap()
}

/// Outer 5-cycle on `0..5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut g = Graph::new();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
    }
    g
}

/// Two `n`-cycles `0..n` and `n..2n` joined by the spokes `i, i + n`.
pub fn prism(n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).unwrap();
        g.add_edge(n + i, n + (i + 1) % n).unwrap();
        g.add_edge(i, n + i).unwrap();
    }
    g
}

/// Disjoint union; vertices of `b` are shifted past those of `a`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.vertices().max().map_or(0, |m| m + 1);
    let mut g = a.clone();
    for v in b.vertices() {
        g.add_vertex(v + shift);
    }
    for e in b.edges() {
        g.add_edge(e.u() + shift, e.v() + shift).unwrap();
    }
    g
}

/// Uniform labelled tree with `m >= 1` edges, via a Prüfer sequence.
pub fn random_tree<R: Rng>(m: usize, rng: &mut R) -> Graph {
    assert!(m >= 1);
    let n = m + 1;
    if n == 2 {
        return path(1);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut g = Graph::new();
    for &s in &seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        g.add_edge(leaf, s).unwrap();
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

/// Random nice graph with between 2 and `max_edges` edges; not
/// necessarily connected.
pub fn random_nice_graph<R: Rng>(max_edges: usize, rng: &mut R) -> Graph {
    assert!(max_edges >= 2);
    loop {
        let n = rng.gen_range(3..=max_edges.min(8) + 1);
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                pairs.push((a, b));
            }
        }
        pairs.shuffle(rng);
        let m = rng.gen_range(2..=max_edges.min(pairs.len()));
        let g = Graph::from_edges(pairs.into_iter().take(m)).unwrap();
        if g.is_nice() {
            return g;
        }
    }
}

/// Random connected graph on `n >= 3` vertices with maximum degree at
/// most 3: a random spanning tree of bounded degree plus random chords.
pub fn random_connected_subcubic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 3);
    let mut g = Graph::new();
    g.add_vertex(0);
    for v in 1..n {
        let open: Vec<Vertex> = (0..v).filter(|&u| g.degree(u) < 3).collect();
        let u = *open.choose(rng).unwrap();
        g.add_edge(u, v).unwrap();
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let open: Vec<Vertex> = g.vertices().filter(|&u| g.degree(u) < 3).collect();
        if open.len() < 2 {
            break;
        }
        let a = *open.choose(rng).unwrap();
        let b = *open.choose(rng).unwrap();
        if a != b && !g.has_edge(a, b) {
            g.add_edge(a, b).unwrap();
        }
    }
    g
}

fn add_path(g: &mut Graph, a: Vertex, b: Vertex, len: usize, next: &mut Vertex) {
    let mut prev = a;
    for _ in 0..len - 1 {
        let x = *next;
        *next += 1;
        g.add_edge(prev, x).unwrap();
        prev = x;
    }
    g.add_edge(prev, b).unwrap();
}

/// Two vertices joined by three internally disjoint paths of the given
/// lengths (each at least 2).
pub fn theta(lengths: [usize; 3]) -> Graph {
    let mut g = Graph::new();
    let mut next = 2;
    for len in lengths {
        add_path(&mut g, 0, 1, len, &mut next);
    }
    g
}

/// Planar graph of girth at least 16 in one of three families (theta,
/// cactus chain, subdivided K_4), optionally with pending trees attached.
pub fn random_planar_girth16<R: Rng>(rng: &mut R) -> Graph {
    let mut g = match rng.gen_range(0..3) {
        0 => theta([
            rng.gen_range(8..=12),
            rng.gen_range(8..=12),
            rng.gen_range(8..=12),
        ]),
        1 => {
            let mut g = Graph::new();
            let mut next = 1;
            let mut anchor = 0;
            for _ in 0..rng.gen_range(1..=3) {
                let len = rng.gen_range(16..=20);
                let start = anchor;
                let mut prev = start;
                let mut ring = Vec::new();
                for _ in 0..len - 1 {
                    let x = next;
                    next += 1;
                    g.add_edge(prev, x).unwrap();
                    ring.push(x);
                    prev = x;
                }
                g.add_edge(prev, start).unwrap();
                let hook = *ring.choose(rng).unwrap();
                if rng.gen_bool(0.5) {
                    anchor = hook;
                } else {
                    let bridge = rng.gen_range(1..=3);
                    let mut p = hook;
                    for _ in 0..bridge {
                        let x = next;
                        next += 1;
                        g.add_edge(p, x).unwrap();
                        p = x;
                    }
                    anchor = p;
                }
            }
            g
        }
        _ => {
            let s = rng.gen_range(6..=7);
            let mut g = Graph::new();
            let mut next = 4;
            for a in 0..4 {
                for b in a + 1..4 {
                    add_path(&mut g, a, b, s, &mut next);
                }
            }
            g
        }
    };
    if rng.gen_bool(0.75) {
        attach_pending_trees(&mut g, rng.gen_range(1..=4), 6, rng);
    }
    g
}

/// Hangs `count` random trees of at most `max_edges` edges on random
/// existing vertices.
pub fn attach_pending_trees<R: Rng>(g: &mut Graph, count: usize, max_edges: usize, rng: &mut R) {
    for _ in 0..count {
        let hosts: Vec<Vertex> = g.vertices().collect();
        let host = *hosts.choose(rng).unwrap();
        let m = rng.gen_range(1..=max_edges);
        let t = random_tree(m, rng);
        let shift = g.vertices().max().unwrap() + 1;
        let root = rng.gen_range(0..=m);
        for e in t.edges() {
            let map = |x: Vertex| if x == root { host } else { x + shift };
            g.add_edge(map(e.u()), map(e.v())).unwrap();
        }
    }
}

/// A random zero-free rational with small numerator and denominator.
pub fn random_rational<R: Rng>(rng: &mut R) -> Label {
    loop {
        let n: i64 = rng.gen_range(-7..=7);
        if n == 0 {
            continue;
        }
        let d: i64 = rng.gen_range(1..=4);
        return Label::ratio(n, d);
    }
}

/// `k` distinct random zero-free rationals per edge.
pub fn random_rational_lists<R: Rng>(g: &Graph, k: usize, rng: &mut R) -> ListAssignment {
    let mut la = ListAssignment::new();
    for e in g.edges() {
        let mut set = BTreeSet::new();
        while set.len() < k {
            set.insert(random_rational(rng));
        }
        la.insert(e, set);
    }
    la
}

/// A random `k`-subset of `universe` per edge.
pub fn random_lists_from<R: Rng>(
    g: &Graph,
    universe: &[Label],
    k: usize,
    rng: &mut R,
) -> ListAssignment {
    assert!(k <= universe.len());
    let mut la = ListAssignment::new();
    for e in g.edges() {
        la.insert(e, universe.choose_multiple(rng, k).cloned());
    }
    la
}

/// Random lists with sizes drawn from `1..=max_k` and values from a small
/// integer pool (zero excluded unless `allow_zero`).
pub fn random_small_lists<R: Rng>(
    g: &Graph,
    max_k: usize,
    allow_zero: bool,
    rng: &mut R,
) -> ListAssignment {
    let pool: Vec<Label> = (-3..=3)
        .filter(|&x| allow_zero || x != 0)
        .map(Label::int)
        .collect();
    let mut la = ListAssignment::new();
    for e in g.edges() {
        let k = rng.gen_range(1..=max_k);
        la.insert(e, pool.choose_multiple(rng, k).cloned());
    }
    la
}

/// Connected graphs with at most `max_vertices` vertices and `max_edges`
/// edges, one per isomorphism class, on vertex sets `0..n`. The
/// single-vertex graph is included.
pub fn connected_graphs(max_vertices: usize, max_edges: usize) -> Vec<Graph> {
    let mut all = Vec::new();
    let mut level: BTreeMap<u64, Vec<u8>> = BTreeMap::new();
    level.insert(0, vec![0]);
    all.push(Graph::from_edges([]).map(|mut g| {
        g.add_vertex(0);
        g
    })
    .unwrap());
    for n in 2..=max_vertices {
        let mut next: BTreeMap<u64, Vec<u8>> = BTreeMap::new();
        for adj in level.values() {
            let m: u32 = adj.iter().map(|r| r.count_ones()).sum::<u32>() / 2;
            for subset in 1u32..(1 << (n - 1)) {
                if (m + subset.count_ones()) as usize > max_edges {
                    continue;
                }
                let mut grown = adj.clone();
                for (i, row) in grown.iter_mut().enumerate() {
                    if subset >> i & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                grown.push(subset as u8);
                let code = canonical_code(&grown);
                next.entry(code).or_insert(grown);
            }
        }
        for adj in next.values() {
            all.push(bits_to_graph(adj));
        }
        level = next;
    }
    all
}

fn bits_to_graph(adj: &[u8]) -> Graph {
    let mut g = Graph::new();
    for v in 0..adj.len() {
        g.add_vertex(v);
    }
    for a in 0..adj.len() {
        for b in a + 1..adj.len() {
            if adj[a] >> b & 1 == 1 {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

/// Canonical code of a graph on at most 8 vertices: colour refinement
/// fixes an invariant ordering of cells, then the minimum upper-triangle
/// code over all cell-respecting orderings is taken.
fn canonical_code(adj: &[u8]) -> u64 {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> =
                    (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let rank: BTreeMap<&(usize, Vec<usize>), usize> =
            distinct.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let refined: Vec<usize> = sigs.iter().map(|s| rank[s]).collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        colour = refined;
        if distinct.len() == before {
            break;
        }
    }
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(colour[v]).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    permute_cells(adj, &cells, 0, &mut order, &mut best);
    best
}

fn permute_cells(adj: &[u8], cells: &[Vec<usize>], ci: usize, order: &mut Vec<usize>, best: &mut u64) {
    if ci == cells.len() {
        let n = order.len();
        let mut code = 0u64;
        for a in 0..n {
            for b in a + 1..n {
                code = code << 1 | u64::from(adj[order[a]] >> order[b] & 1);
            }
        }
        *best = (*best).min(code);
        return;
    }
    let mut cell = cells[ci].clone();
    heap_permutations(&mut cell, &mut |perm| {
        let base = order.len();
        order.extend_from_slice(perm);
        permute_cells(adj, cells, ci + 1, order, best);
        order.truncate(base);
    });
}

fn heap_permutations(items: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, items: &mut [usize], f: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            rec(k - 1, items, f);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let k = items.len();
    rec(k, items, f);
}

/// The edge list of `g` with endpoints relabelled by `map`.
pub fn relabel(g: &Graph, map: &BTreeMap<Vertex, Vertex>) -> Graph {
    let mut h = Graph::new();
    for v in g.vertices() {
        h.add_vertex(map[&v]);
    }
    for e in g.edges() {
        h.add_edge(map[&e.u()], map[&e.v()]).unwrap();
    }
    h
}

pub fn edge_set(g: &Graph) -> BTreeSet<Edge> {
    g.edges().into_iter().collect()
}
