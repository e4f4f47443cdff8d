//! Bounded search that extends a labelling over a few free edges.

use std::collections::BTreeMap;

use super::{invariant, pp, ConstructError};
use crate::graph::{Edge, Graph, Vertex};
use crate::label::{Label, Labelling, Rational};

pub(crate) const LOCAL_BUDGET: u64 = 1 << 24;

/// Labels `free` (in the given order) from the candidate lists so that no
/// vertex touched by a free edge conflicts with a neighbour. Every other
/// edge of `g` must be labelled in `lab`, and conflicts away from the free
/// edges are assumed absent.
pub(crate) fn extend_locally(
    g: &Graph,
    lab: &mut Labelling,
    free: &[(Edge, Vec<Label>)],
    what: &str,
) -> Result<(), ConstructError> {
    let mut touched: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (i, (e, _)) in free.iter().enumerate() {
        touched.insert(e.u(), i);
        touched.insert(e.v(), i);
    }
    for (e, _) in free {
        lab.remove(*e);
    }
    let fixed: BTreeMap<Vertex, Rational> = g.vertices().map(|v| (v, pp(g, lab, v))).collect();
    let s = Search {
        g,
        free,
        touched: &touched,
        fixed: &fixed,
    };
    let mut chosen: Vec<&Label> = Vec::with_capacity(free.len());
    let mut nodes = 0u64;
    match s.dfs(&mut chosen, &mut nodes) {
        Some(out) => {
            for ((e, _), x) in free.iter().zip(out) {
                lab.set(*e, x);
            }
            Ok(())
        }
        None if nodes >= LOCAL_BUDGET => {
            invariant(format!("{what}: search budget of {LOCAL_BUDGET} nodes exhausted"))
        }
        None => invariant(format!("{what}: no extension over {} edges", free.len())),
    }
}

struct Search<'a> {
    g: &'a Graph,
    free: &'a [(Edge, Vec<Label>)],
    /// Touched vertex to the position of its last free edge.
    touched: &'a BTreeMap<Vertex, usize>,
    /// Products over the non-free edges.
    fixed: &'a BTreeMap<Vertex, Rational>,
}

impl<'a> Search<'a> {
    fn product(&self, v: Vertex, chosen: &[&Label]) -> Rational {
        let mut p = self.fixed[&v].clone();
        for ((e, _), x) in self.free.iter().zip(chosen) {
            if e.contains(v) {
                p *= x.value();
            }
        }
        p
    }

    /// Final product of `v` if known after `chosen.len()` free edges.
    fn known(&self, v: Vertex, chosen: &[&Label]) -> Option<Rational> {
        match self.touched.get(&v) {
            None => Some(self.fixed[&v].clone()),
            Some(&last) if last < chosen.len() => Some(self.product(v, chosen)),
            Some(_) => None,
        }
    }

    fn consistent(&self, chosen: &[&Label]) -> bool {
        let i = chosen.len() - 1;
        let e = self.free[i].0;
        for v in [e.u(), e.v()] {
            if self.touched[&v] != i {
                continue;
            }
            let pv = self.product(v, chosen);
            for w in self.g.neighbors(v) {
                if self.known(w, chosen).is_some_and(|pw| pw == pv) {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(&self, chosen: &mut Vec<&'a Label>, nodes: &mut u64) -> Option<Vec<Label>> {
        if chosen.len() == self.free.len() {
            return Some(chosen.iter().map(|&x| x.clone()).collect());
        }
        for x in &self.free[chosen.len()].1 {
            *nodes += 1;
            if *nodes >= LOCAL_BUDGET {
                return None;
            }
            chosen.push(x);
            if self.consistent(chosen) {
                if let Some(out) = self.dfs(chosen, nodes) {
                    return Some(out);
                }
            }
            chosen.pop();
            if *nodes >= LOCAL_BUDGET {
                return None;
            }
        }
        None
    }
}
