use std::collections::BTreeSet;

use num_traits::One;

use super::paths::cycle_core;
use super::reduce::{branch, descending_paths, pending_path};
use super::star::{extend_subdivided_star, SubdividedStar};
use super::tree::tree_rec;
use super::{
    effective_lists, finish, invariant, label_of, list, per_component, pick, pp, precondition,
    require_nice, ConstructError,
};
use crate::graph::{find_long_pending_path, find_thread, rooted_forest, two_core, Edge, Graph, Vertex};
use crate::label::{Labelling, ListAssignment};

/// Labels a nice planar graph of girth at least 16 from any zero-free
/// 4-lists. Planarity is not checked; callers vouch for it. Should the
/// promise be broken, the reduction fails loudly when a structure it
/// relies on is missing.
pub fn label_planar_girth16(g: &Graph, la: &ListAssignment) -> Result<Labelling, ConstructError> {
    require_nice(g)?;
    if let Some(girth) = g.girth() {
        if girth < 16 {
            return precondition(format!("girth {girth} is below 16"));
        }
    }
    let lists = effective_lists(g, la, 4)?;
    let lab = planar_rec(g, &lists)?;
    finish(g, la, lab)
}

fn planar_rec(g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
    per_component(g, lists, connected)
}

fn connected(g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
    if g.is_tree() {
        return tree_rec(g, lists);
    }
    if g.cycle_order().is_some() {
        return cycle_core(g, lists);
    }
    if g.min_degree() >= 2 {
        let Some(t) = find_thread(g, 3) else {
            return invariant("no 3-thread; is the graph really planar with girth >= 16?");
        };
        let [v1, v2, v3] = [t.interior[0], t.interior[1], t.interior[2]];
        return plain_thread(g, lists, t.u, [v1, v2, v3], t.w);
    }
    if let Some(p) = find_long_pending_path(g) {
        return pending_path(g, lists, p, &planar_rec);
    }
    let core = two_core(g);
    let forest = rooted_forest(g, &core);
    let deepest = g
        .vertices()
        .filter(|v| !core.contains(v) && g.degree(*v) >= 3)
        .max_by_key(|v| (forest.depth[v], std::cmp::Reverse(*v)));
    if let Some(u) = deepest {
        let parent = forest.parent[&u].unwrap();
        let (legs, leaves) = descending_paths(g, &forest, u)?;
        return branch(g, lists, u, vec![parent], legs, leaves, &planar_rec);
    }
    let reduced = g.induced(&core);
    let Some(t) = find_thread(&reduced, 3) else {
        return invariant("core has no 3-thread; is the graph really planar with girth >= 16?");
    };
    let (u, w) = (t.u, t.w);
    let vs = [t.interior[0], t.interior[1], t.interior[2]];
    let mut trees = Vec::with_capacity(3);
    for &v in &vs {
        trees.push(descending_paths(g, &forest, v)?);
    }
    let trivial = |i: usize| trees[i].0.is_empty() && trees[i].1.is_empty();
    let single = |i: usize| trees[i].0.is_empty() && trees[i].1.len() == 1;
    if (0..3).all(trivial) {
        return plain_thread(g, lists, u, vs, w);
    }
    if (0..3).all(single) {
        return single_edges(g, lists, vs, trees[1].1[0]);
    }
    general_thread(g, lists, u, vs, w, trees)
}

/// `u v1 v2 v3 w` is a 3-thread of `g`: drop `v2`, then label `v1v2` and
/// `v2v3`.
fn plain_thread(
    g: &Graph,
    lists: &ListAssignment,
    u: Vertex,
    [v1, v2, v3]: [Vertex; 3],
    w: Vertex,
) -> Result<Labelling, ConstructError> {
    let mut lab = planar_rec(&g.without_vertices(&[v2]), lists)?;
    let a = label_of(&lab, Edge::new(u, v1))?;
    let b = label_of(&lab, Edge::new(v3, w))?;
    let (pu, pw) = (pp(g, &lab, u), pp(g, &lab, w));
    let x = pick(lists, Edge::new(v1, v2), "thread v1v2", |x| *x != b && &a * x != pu)?;
    let y = pick(lists, Edge::new(v2, v3), "thread v2v3", |y| *y != a && &b * y != pw)?;
    lab.set(Edge::new(v1, v2), x);
    lab.set(Edge::new(v2, v3), y);
    Ok(lab)
}

/// Every `T_{v_i}` is a single edge; `l2` is the leaf at `v2`.
fn single_edges(
    g: &Graph,
    lists: &ListAssignment,
    [v1, v2, v3]: [Vertex; 3],
    l2: Vertex,
) -> Result<Labelling, ConstructError> {
    let mut lab = planar_rec(&g.without_vertices(&[v2]), lists)?;
    let clear_of = |lab: &Labelling, v: Vertex, skip: Vertex| -> Vec<_> {
        g.neighbors(v).filter(|&z| z != skip).map(|z| pp(g, lab, z)).collect()
    };
    let k1 = pp(g, &lab, v1);
    let n1 = clear_of(&lab, v1, v2);
    let x = pick(lists, Edge::new(v1, v2), "v1v2", |x| !n1.contains(&(&k1 * x)))?;
    lab.set(Edge::new(v1, v2), x.clone());
    let k3 = pp(g, &lab, v3);
    let n3 = clear_of(&lab, v3, v2);
    let y = pick(lists, Edge::new(v2, v3), "v2v3", |y| {
        !n3.contains(&(&k3 * y)) && !(x.value() * y).is_one()
    })?;
    lab.set(Edge::new(v2, v3), y);
    let k2 = pp(g, &lab, v2);
    let n2 = clear_of(&lab, v2, l2);
    let z = pick(lists, Edge::new(v2, l2), "v2v2'", |z| !n2.contains(&(&k2 * z)))?;
    lab.set(Edge::new(v2, l2), z);
    Ok(lab)
}

type Pending = (Vec<(Vertex, Vertex)>, Vec<Vertex>);

fn general_thread(
    g: &Graph,
    lists: &ListAssignment,
    u: Vertex,
    vs: [Vertex; 3],
    w: Vertex,
    trees: Vec<Pending>,
) -> Result<Labelling, ConstructError> {
    let [v1, v2, v3] = vs;
    let mut drop: BTreeSet<Vertex> = BTreeSet::from([v2]);
    for (legs, leaves) in &trees {
        for &(b, b2) in legs {
            drop.insert(b);
            drop.insert(b2);
        }
        drop.extend(leaves);
    }
    let drop: Vec<Vertex> = drop.into_iter().collect();
    let mut lab = planar_rec(&g.without_vertices(&drop), lists)?;
    let k1 = pp(g, &lab, v1);
    let k3 = pp(g, &lab, v3);
    let (pu, pw) = (pp(g, &lab, u), pp(g, &lab, w));
    let single: Vec<bool> = trees.iter().map(|(l, s)| l.is_empty() && s.len() == 1).collect();
    let e12 = Edge::new(v1, v2);
    let e23 = Edge::new(v2, v3);
    let mut found = None;
    'outer: for x in list(lists, e12)? {
        for y in list(lists, e23)? {
            let p1 = &k1 * x.value();
            let p2 = x.value() * y.value();
            let p3 = &k3 * y.value();
            let ok = p2 != p1
                && p2 != p3
                && p1 != pu
                && p3 != pw
                && [&p1, &p2, &p3].iter().zip(&single).all(|(p, &s)| !s || !p.is_one());
            if ok {
                found = Some((x.clone(), y.clone()));
                break 'outer;
            }
        }
    }
    let Some((x, y)) = found else {
        return invariant("no labels for the thread edges meet the four conditions");
    };
    lab.set(e12, x);
    lab.set(e23, y);
    let anchors = [[u, v2], [v1, v3], [v2, w]];
    for ((&v, (legs, leaves)), around) in vs.iter().zip(trees).zip(anchors) {
        if legs.is_empty() && leaves.is_empty() {
            continue;
        }
        let star = SubdividedStar {
            center: v,
            anchors: around.to_vec(),
            legs,
            leaves,
        };
        extend_subdivided_star(g, lists, &mut lab, &star)?;
    }
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
    fn cycles_and_theta() {
        for g in [generators::cycle(16), generators::cycle(21), generators::theta([8, 8, 9])] {
            let la = ListAssignment::uniform(&g, &ints(&[1, 2, 3, 4]));
            label_planar_girth16(&g, &la).unwrap();
        }
    }

    fn decorated_cycle(n: usize, leaves: usize, legs: usize) -> Graph {
        let mut g = generators::cycle(n);
        let mut next = n;
        for v in 0..n {
            for _ in 0..leaves {
                g.add_edge(v, next).unwrap();
                next += 1;
            }
            for _ in 0..legs {
                g.add_edge(v, next).unwrap();
                g.add_edge(next, next + 1).unwrap();
                next += 2;
            }
        }
        g
    }

    #[test]
    fn pending_structures_on_a_cycle() {
        let lists = [ints(&[1, 2, 3, 4]), ints(&[-2, -1, 1, 2]), ints(&[-3, -1, 1, 3])];
        for (leaves, legs) in [(1, 0), (0, 1), (2, 0), (3, 0), (4, 1), (1, 2)] {
            let g = decorated_cycle(16, leaves, legs);
            for l in &lists {
                let la = ListAssignment::uniform(&g, l);
                label_planar_girth16(&g, &la).unwrap();
            }
        }
    }

    #[test]
    fn short_girth_rejected() {
        let g = generators::cycle(15);
        let la = ListAssignment::uniform(&g, &ints(&[1, 2, 3, 4]));
        assert!(matches!(
            label_planar_girth16(&g, &la),
            Err(ConstructError::Precondition(_))
        ));
    }
}
