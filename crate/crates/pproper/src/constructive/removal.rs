use super::{effective_lists, finish, invariant, list, pp, precondition, ConstructError};
use crate::graph::{Edge, Graph, Vertex};
use crate::label::{check_proper, Label, Labelling, ListAssignment, Mode, Rational};

/// Extends a proper labelling `sub` of `g - u` to `g`, where the
/// neighbourhood of `u` is stable and lists have at least
/// `Δ(g - u) + 3` nonzero labels.
///
/// Each `uv_i` has at least three safe values (keeping `v_i` clear of its
/// other neighbours); two of them with distinct absolute values suffice,
/// and the `2^d` sign-free combinations contain one that keeps `u` clear
/// of every `v_i`.
pub fn label_removal_extend(
    g: &Graph,
    u: Vertex,
    la: &ListAssignment,
    sub: &Labelling,
) -> Result<Labelling, ConstructError> {
    if !g.has_vertex(u) {
        return precondition(format!("vertex {u} is not in the graph"));
    }
    let nbrs: Vec<Vertex> = g.neighbors(u).collect();
    let d = nbrs.len();
    if d < 2 {
        return precondition(format!("vertex {u} has degree {d}, need at least 2"));
    }
    if d > 24 {
        return precondition(format!("degree {d} is too large for the 2^d search"));
    }
    for (i, &a) in nbrs.iter().enumerate() {
        if let Some(&b) = nbrs[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
            return precondition(format!("neighbours {a} and {b} of {u} are adjacent"));
        }
    }
    let rest = g.without_vertices(&[u]);
    let lists = effective_lists(g, la, rest.max_degree() + 3)?;
    sub.check_total(&rest)?;
    sub.check_membership(la)?;
    if !check_proper(&rest, sub, Mode::Product).is_empty() {
        return precondition("the given labelling of g - u is not proper");
    }
    let mut lab: Labelling = sub.iter().filter(|(e, _)| !e.contains(u)).map(|(e, l)| (e, l.clone())).collect();

    let mut pairs: Vec<[Label; 2]> = Vec::with_capacity(d);
    let mut base: Vec<Rational> = Vec::with_capacity(d);
    for &v in &nbrs {
        let pv = pp(&rest, &lab, v);
        let others: Vec<Rational> = rest.neighbors(v).map(|w| pp(&rest, &lab, w)).collect();
        let safe: Vec<&Label> = list(&lists, Edge::new(u, v))?
            .iter()
            .filter(|x| !others.contains(&(&pv * x.value())))
            .collect();
        let Some(&a) = safe.first() else {
            return invariant(format!("no safe label on {u}-{v}"));
        };
        let Some(&b) = safe.iter().find(|b| b.abs() != a.abs()) else {
            return invariant(format!("safe labels on {u}-{v} share one absolute value"));
        };
        pairs.push([a.clone(), b.clone()]);
        base.push(pv);
    }
    for mask in 0u32..(1 << d) {
        let pick: Vec<&Label> = (0..d).map(|i| &pairs[i][((mask >> i) & 1) as usize]).collect();
        let pu = pick.iter().fold(Rational::from_integer(1.into()), |acc, x| acc * x.value());
        if (0..d).all(|i| &base[i] * pick[i].value() != pu) {
            for (&v, x) in nbrs.iter().zip(pick) {
                lab.set(Edge::new(u, v), x.clone());
            }
            return finish(g, la, lab);
        }
    }
    invariant(format!("all {} combinations at {u} conflict", 1u64 << d))
}
