//! Reductions shared by the tree and planar procedures.

use num_traits::One;

use super::star::{extend_subdivided_star, SubdividedStar};
use super::{invariant, label_of, pick, pp, ConstructError, Recurse};
use crate::graph::{Edge, Graph, RootedForest, Vertex};
use crate::label::{Labelling, ListAssignment};

/// Removes the pending path `u v w x` (`u` a leaf, `v`, `w` of degree 2),
/// labels the rest, then labels `vw` (not 1, `w` avoids `x`) and `uv`
/// (`v` avoids `w`).
pub(crate) fn pending_path(
    g: &Graph,
    lists: &ListAssignment,
    [u, v, w, x]: [Vertex; 4],
    rec: Recurse,
) -> Result<Labelling, ConstructError> {
    let mut lab = rec(&g.without_vertices(&[u, v]), lists)?;
    let wx = label_of(&lab, Edge::new(w, x))?;
    let px = pp(g, &lab, x);
    let y = pick(lists, Edge::new(v, w), "pending path vw", |y| {
        !y.is_one() && &wx * y != px
    })?;
    lab.set(Edge::new(v, w), y);
    let z = pick(lists, Edge::new(u, v), "pending path uv", |z| *z != wx)?;
    lab.set(Edge::new(u, v), z);
    Ok(lab)
}

/// Splits the descendants of `u` into legs `(b, b')` and leaves. Each
/// descending path must have length 1 or 2.
pub(crate) fn descending_paths(
    g: &Graph,
    forest: &RootedForest,
    u: Vertex,
) -> Result<(Vec<(Vertex, Vertex)>, Vec<Vertex>), ConstructError> {
    let mut legs = Vec::new();
    let mut leaves = Vec::new();
    for &c in forest.children.get(&u).map(Vec::as_slice).unwrap_or(&[]) {
        match g.degree(c) {
            1 => leaves.push(c),
            2 => {
                let b2 = g.neighbors(c).find(|&y| y != u).unwrap();
                if g.degree(b2) != 1 {
                    return invariant(format!("pending path below {u} through {c} is too long"));
                }
                legs.push((c, b2));
            }
            _ => return invariant(format!("descendant {c} of {u} branches")),
        }
    }
    Ok((legs, leaves))
}

/// Removes the legs and leaves hanging at `u`, labels the rest, then
/// extends around `u`, which must avoid `anchors`.
pub(crate) fn branch(
    g: &Graph,
    lists: &ListAssignment,
    center: Vertex,
    anchors: Vec<Vertex>,
    legs: Vec<(Vertex, Vertex)>,
    leaves: Vec<Vertex>,
    rec: Recurse,
) -> Result<Labelling, ConstructError> {
    let mut drop: Vec<Vertex> = leaves.clone();
    for &(b, b2) in &legs {
        drop.push(b);
        drop.push(b2);
    }
    let mut lab = rec(&g.without_vertices(&drop), lists)?;
    let star = SubdividedStar {
        center,
        anchors,
        legs,
        leaves,
    };
    extend_subdivided_star(g, lists, &mut lab, &star)?;
    Ok(lab)
}
