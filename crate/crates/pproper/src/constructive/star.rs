use num_traits::One;

use super::{invariant, label_of, pick, pp, precondition, ConstructError};
use crate::graph::{Edge, Graph, Vertex};
use crate::label::{Label, Labelling, ListAssignment, Rational};

const STAR_BUDGET: u64 = 1 << 22;

/// A labelled edge `center-vertex` whose far end has the fixed (possibly
/// virtual) product `product` that the centre must avoid.
#[derive(Clone, Debug)]
pub struct Anchor {
    pub vertex: Vertex,
    pub label: Label,
    pub product: Rational,
}

/// A star whose anchor edges are labelled and whose leaf edges are not.
/// `extra` is the product of any other fixed labels at the centre.
#[derive(Clone, Debug)]
pub struct StarExtensionProblem {
    pub center: Vertex,
    pub anchors: Vec<Anchor>,
    pub extra: Rational,
    pub leaves: Vec<(Vertex, Vec<Label>)>,
}

impl StarExtensionProblem {
    fn base(&self) -> Rational {
        self.anchors
            .iter()
            .fold(self.extra.clone(), |acc, a| acc * a.label.value())
    }
}

/// Labels for the leaf edges, in order, such that the centre's product
/// differs from every anchor product and from every leaf's product.
///
/// With at most one anchor, 3-lists and at least two leaves always
/// suffice; with two anchors, 4-lists. The search runs over the full lists
/// (the last leaf is solved directly), so it finds a solution whenever one
/// exists; hitting the node budget is reported as an invariant violation.
pub fn extend_star(p: &StarExtensionProblem) -> Result<Vec<Label>, ConstructError> {
    let q = p.leaves.len();
    if p.anchors.len() > 2 {
        return precondition("at most two anchors");
    }
    if q < 2 {
        return precondition("need at least two leaves");
    }
    let need = p.anchors.len().max(1) + 2;
    for (w, l) in &p.leaves {
        if l.iter().any(Label::is_zero) {
            return precondition(format!("list of leaf {w} contains 0"));
        }
        let mut l = l.clone();
        l.sort();
        l.dedup();
        if l.len() < need {
            return precondition(format!("leaf {w} has {} labels, need {need}", l.len()));
        }
    }
    let forbidden: Vec<&Rational> = p.anchors.iter().map(|a| &a.product).collect();
    let mut chosen: Vec<&Label> = Vec::with_capacity(q);
    let mut nodes = 0u64;
    match star_dfs(p, &forbidden, p.base(), &mut chosen, &mut nodes) {
        Some(out) => Ok(out),
        None if nodes >= STAR_BUDGET => invariant(format!(
            "star search at {} exhausted its budget of {STAR_BUDGET} nodes",
            p.center
        )),
        None => invariant(format!("no star extension at {} exists", p.center)),
    }
}

fn star_dfs<'a>(
    p: &'a StarExtensionProblem,
    forbidden: &[&Rational],
    partial: Rational,
    chosen: &mut Vec<&'a Label>,
    nodes: &mut u64,
) -> Option<Vec<Label>> {
    let i = chosen.len();
    let q = p.leaves.len();
    for x in &p.leaves[i].1 {
        *nodes += 1;
        if *nodes >= STAR_BUDGET {
            return None;
        }
        let next = &partial * x.value();
        if i + 1 == q {
            let ok = !forbidden.contains(&&next)
                && &next != x.value()
                && chosen.iter().all(|c| c.value() != &next);
            if ok {
                let mut out: Vec<Label> = chosen.iter().map(|&c| c.clone()).collect();
                out.push(x.clone());
                return Some(out);
            }
        } else {
            chosen.push(x);
            let found = star_dfs(p, forbidden, next, chosen, nodes);
            chosen.pop();
            if found.is_some() || *nodes >= STAR_BUDGET {
                return found;
            }
        }
    }
    None
}

/// A centre with labelled edges to its anchors, pending paths of length 2
/// (`legs`, as `(b, b')`) and pending edges to `leaves`, none of which are
/// labelled yet.
pub(crate) struct SubdividedStar {
    pub center: Vertex,
    pub anchors: Vec<Vertex>,
    pub legs: Vec<(Vertex, Vertex)>,
    pub leaves: Vec<Vertex>,
}

/// Labels all edges of `s` so that no vertex of the star is in conflict and
/// the centre avoids the current products of its anchors.
pub(crate) fn extend_subdivided_star(
    g: &Graph,
    lists: &ListAssignment,
    lab: &mut Labelling,
    s: &SubdividedStar,
) -> Result<(), ConstructError> {
    let c = s.center;
    let forbidden: Vec<Rational> = s.anchors.iter().map(|&a| pp(g, lab, a)).collect();
    let p = s.legs.len();
    let q = s.leaves.len();
    let leg = |i: usize| Edge::new(c, s.legs[i].0);
    let not_one = |x: &Rational| !x.is_one();
    // every leg edge but possibly the last avoids 1
    for i in 0..p.saturating_sub(1) {
        lab.set(leg(i), pick(lists, leg(i), "leg label != 1", not_one)?);
    }
    match q {
        0 => {
            if p > 0 {
                let k = pp(g, lab, c);
                let x = pick(lists, leg(p - 1), "last leg", |x| {
                    !x.is_one() && !forbidden.contains(&(&k * x))
                })?;
                lab.set(leg(p - 1), x);
            }
        }
        1 => {
            if p > 0 {
                let k = pp(g, lab, c);
                let x = pick(lists, leg(p - 1), "last leg, partial != 1", |x| {
                    !x.is_one() && !(&k * x).is_one()
                })?;
                lab.set(leg(p - 1), x);
            }
            let k = pp(g, lab, c);
            if k.is_one() {
                return invariant(format!("partial product of {c} is 1 before its single leaf"));
            }
            let e = Edge::new(c, s.leaves[0]);
            let x = pick(lists, e, "single leaf", |x| !forbidden.contains(&(&k * x)))?;
            lab.set(e, x);
        }
        2 => {
            if p > 0 {
                lab.set(leg(p - 1), pick(lists, leg(p - 1), "leg label != 1", not_one)?);
            }
            let k = pp(g, lab, c);
            let e1 = Edge::new(c, s.leaves[0]);
            let x1 = pick(lists, e1, "first leaf", |x| !(&k * x).is_one())?;
            lab.set(e1, x1.clone());
            let k = pp(g, lab, c);
            let e2 = Edge::new(c, s.leaves[1]);
            let x2 = pick(lists, e2, "second leaf", |x| {
                let prod = &k * x;
                !forbidden.contains(&prod) && &prod != x1.value()
            })?;
            lab.set(e2, x2);
        }
        _ => {
            if p > 0 {
                lab.set(leg(p - 1), pick(lists, leg(p - 1), "leg label != 1", not_one)?);
            }
            let mut anchors = Vec::new();
            for (&a, prod) in s.anchors.iter().zip(&forbidden) {
                anchors.push(Anchor {
                    vertex: a,
                    label: Label::new(label_of(lab, Edge::new(c, a))?),
                    product: prod.clone(),
                });
            }
            let anchor_part = anchors
                .iter()
                .fold(Rational::one(), |acc, a| acc * a.label.value());
            let problem = StarExtensionProblem {
                center: c,
                extra: pp(g, lab, c) / anchor_part,
                anchors,
                leaves: s
                    .leaves
                    .iter()
                    .map(|&w| {
                        super::list(lists, Edge::new(c, w)).map(|l| (w, l.to_vec()))
                    })
                    .collect::<Result<_, _>>()?,
            };
            for (&w, x) in s.leaves.iter().zip(extend_star(&problem)?) {
                lab.set(Edge::new(c, w), x);
            }
        }
    }
    let pc = pp(g, lab, c);
    for &(b, b2) in &s.legs {
        let kb = pp(g, lab, b);
        let e = Edge::new(b, b2);
        let z = pick(lists, e, "leg tip", |z| &kb * z != pc)?;
        lab.set(e, z);
    }
    Ok(())
}
