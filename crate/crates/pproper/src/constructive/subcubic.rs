use num_traits::One;

use super::local::extend_locally;
use super::paths::{cycle_core, path_core};
use super::{
    effective_lists, finish, invariant, label_of, list, per_component, pick, pp, precondition,
    require_nice, ConstructError,
};
use crate::graph::{shortest_induced_cycle, Edge, Graph, Vertex};
use crate::label::{Labelling, ListAssignment, Mode};
use crate::solver::solve;

/// Labels a nice graph of maximum degree at most 3 from any zero-free
/// 4-lists.
pub fn label_subcubic(g: &Graph, la: &ListAssignment) -> Result<Labelling, ConstructError> {
    if g.max_degree() > 3 {
        return precondition(format!("maximum degree {} exceeds 3", g.max_degree()));
    }
    require_nice(g)?;
    let lists = effective_lists(g, la, 4)?;
    let lab = subcubic_rec(g, &lists)?;
    finish(g, la, lab)
}

fn subcubic_rec(g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
    per_component(g, lists, connected)
}

fn is_paw(g: &Graph) -> bool {
    let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    d.sort();
    g.edge_count() == 4 && d == [1, 2, 2, 3]
}

fn connected(g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
    let m = g.edge_count();
    if m == 1 {
        return invariant("reduction produced a K_2 component");
    }
    if m == 3 && g.path_order().is_some() {
        return path_core(g, lists);
    }
    if m == 3 && g.cycle_order().is_some() {
        return cycle_core(g, lists);
    }
    if is_paw(g) {
        return match solve(g, &lists.restrict(g), Mode::Product)?.labelling() {
            Some(l) => Ok(l.clone()),
            None => invariant("triangle with a pendant edge has no proper labelling"),
        };
    }
    match g.min_degree() {
        1 => leaf_step(g, lists),
        2 => degree_two_step(g, lists),
        _ => cycle_step(g, lists),
    }
}

fn leaf_step(g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
    let leaves: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    let nb = |u: Vertex| g.neighbors(u).next().unwrap();
    let u = leaves
        .iter()
        .copied()
        .find(|&u| g.degree(nb(u)) == 2)
        .unwrap_or(leaves[0]);
    let v = nb(u);
    let mut lab = subcubic_rec(&g.without_vertices(&[u, v]), lists)?;
    let uv = Edge::new(u, v);
    if g.degree(v) == 2 {
        let w = g.neighbors(v).find(|&x| x != u).unwrap();
        let pw = pp(g, &lab, w);
        let others: Vec<_> = g.neighbors(w).filter(|&z| z != v).map(|z| pp(g, &lab, z)).collect();
        let vw = Edge::new(v, w);
        let y = pick(lists, vw, "leaf step vw", |y| {
            !y.is_one() && !others.contains(&(&pw * y))
        })?;
        lab.set(vw, y.clone());
        let pw = pp(g, &lab, w);
        let x = pick(lists, uv, "leaf step uv", |x| x * y.value() != pw)?;
        lab.set(uv, x);
        return Ok(lab);
    }
    let mut free = Vec::new();
    for w in g.neighbors(v).filter(|&x| x != u) {
        let e = Edge::new(v, w);
        free.push((e, list(lists, e)?.to_vec()));
    }
    free.push((uv, list(lists, uv)?.to_vec()));
    extend_locally(g, &mut lab, &free, "leaf with a degree-3 neighbour")?;
    Ok(lab)
}

fn degree_two_step(g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
    let u = g.vertices().find(|&v| g.degree(v) == 2).unwrap();
    let mut lab = subcubic_rec(&g.without_vertices(&[u]), lists)?;
    let mut free = Vec::new();
    for v in g.neighbors(u) {
        let e = Edge::new(u, v);
        free.push((e, list(lists, e)?.to_vec()));
    }
    extend_locally(g, &mut lab, &free, "degree-2 vertex")?;
    Ok(lab)
}

/// Cubic case: remove the edges of a smallest induced cycle, label the
/// rest, then relabel the cycle and its spokes together.
fn cycle_step(g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
    let Some(c) = shortest_induced_cycle(g) else {
        return invariant("cubic component without a cycle");
    };
    let n = c.len();
    let cycle_edges: Vec<Edge> = (0..n).map(|i| Edge::new(c[i], c[(i + 1) % n])).collect();
    let mut lab = subcubic_rec(&g.without_edges(&cycle_edges), lists)?;
    let mut free = Vec::new();
    for i in 0..n {
        for s in g.neighbors(c[i]).filter(|x| !c.contains(x)) {
            let e = Edge::new(c[i], s);
            label_of(&lab, e)?;
            free.push((e, list(lists, e)?.to_vec()));
        }
        let e = cycle_edges[i];
        free.push((e, list(lists, e)?.to_vec()));
    }
    extend_locally(g, &mut lab, &free, "cycle extension")?;
    Ok(lab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::label::Label;

    fn ints(v: &[i64]) -> Vec<Label> {
        v.iter().map(|&x| Label::int(x)).collect()
    }

    #[test]
    fn named_graphs() {
        for g in [
            generators::complete(4),
            generators::complete_bipartite(3, 3),
            generators::petersen(),
            generators::prism(3),
            generators::path(3),
        ] {
            let la = ListAssignment::uniform(&g, &ints(&[1, 2, 3, 4]));
            label_subcubic(&g, &la).unwrap();
        }
    }

    #[test]
    fn paw_and_signs() {
        let g = Graph::from_edges([(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let la = ListAssignment::uniform(&g, &ints(&[-2, -1, 1, 2]));
        label_subcubic(&g, &la).unwrap();
        let g = generators::petersen();
        label_subcubic(&g, &ListAssignment::uniform(&g, &ints(&[-2, -1, 1, 2]))).unwrap();
    }

    #[test]
    fn rejects_degree_four() {
        let g = generators::star(4);
        let la = ListAssignment::uniform(&g, &ints(&[1, 2, 3, 4]));
        assert!(label_subcubic(&g, &la).is_err());
    }
}
