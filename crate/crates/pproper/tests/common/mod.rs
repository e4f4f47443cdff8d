//! Oracles shared by the integration tests. Nothing here calls into the
//! library's search or colouring code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};
use pproper::{Edge, Graph, Label, Labelling, ListAssignment, Mode, Rational, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;

/// Vertex colours of a complete labelling, computed from scratch.
pub fn flat_colours(g: &Graph, edges: &[Edge], labels: &[&Label], mode: Mode) -> BTreeMap<Vertex, Rational> {
    let mut c: BTreeMap<Vertex, Rational> = g
        .vertices()
        .map(|v| {
            let init = match mode {
                Mode::Product => Rational::one(),
                Mode::Sum => Rational::zero(),
            };
            (v, init)
        })
        .collect();
    for (e, l) in edges.iter().zip(labels) {
        for x in [e.u(), e.v()] {
            let slot = c.get_mut(&x).unwrap();
            match mode {
                Mode::Product => *slot *= l.value(),
                Mode::Sum => *slot += l.value(),
            }
        }
    }
    c
}

/// Number of proper labellings by walking the full cartesian product of
/// the lists.
pub fn flat_count(g: &Graph, la: &ListAssignment, mode: Mode) -> u64 {
    let edges = g.edges();
    if edges.is_empty() {
        return 1;
    }
    let lists: Vec<&[Label]> = edges.iter().map(|&e| la.get(e).unwrap()).collect();
    lists
        .iter()
        .map(|l| l.iter())
        .multi_cartesian_product()
        .filter(|labels| {
            let c = flat_colours(g, &edges, labels, mode);
            edges.iter().all(|e| c[&e.u()] != c[&e.v()])
        })
        .count() as u64
}

/// Every complete labelling drawn from the lists.
pub fn all_labellings(g: &Graph, la: &ListAssignment) -> Vec<Labelling> {
    let edges = g.edges();
    let lists: Vec<&[Label]> = edges.iter().map(|&e| la.get(e).unwrap()).collect();
    lists
        .iter()
        .map(|l| l.iter())
        .multi_cartesian_product()
        .map(|labels| {
            let mut lab = Labelling::new();
            for (e, l) in edges.iter().zip(labels) {
                lab.set(*e, l.clone());
            }
            lab
        })
        .collect()
}

/// A random simple graph on `n` vertices with `m` edges (may be
/// disconnected or contain `K_2` components).
pub fn random_graph<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    for &(a, b) in pairs.choose_multiple(rng, m.min(pairs.len())) {
        g.add_edge(a, b).unwrap();
    }
    g
}
