use super::{effective_lists, finish, invariant, list, precondition, ConstructError};
use crate::graph::{Edge, Graph};
use crate::label::{Label, Labelling, ListAssignment};

/// Labels a path. Needs 2-lists when the length `n` is even or 3, and
/// 3-lists otherwise.
pub fn label_path(g: &Graph, la: &ListAssignment) -> Result<Labelling, ConstructError> {
    let Some(order) = g.path_order() else {
        return precondition("graph is not a path");
    };
    let n = order.len() - 1;
    if n < 2 {
        return precondition("a single edge has no proper labelling");
    }
    let need = if n % 2 == 0 || n == 3 { 2 } else { 3 };
    let lists = effective_lists(g, la, need)?;
    let lab = path_core(g, &lists)?;
    finish(g, la, lab)
}

/// Labels a cycle. Needs 2-lists when `n` is a multiple of 4 and 3-lists
/// otherwise.
pub fn label_cycle(g: &Graph, la: &ListAssignment) -> Result<Labelling, ConstructError> {
    let Some(order) = g.cycle_order() else {
        return precondition("graph is not a cycle");
    };
    let need = if order.len() % 4 == 0 { 2 } else { 3 };
    let lists = effective_lists(g, la, need)?;
    let lab = cycle_core(g, &lists)?;
    finish(g, la, lab)
}

/// Picks labels for `chain` in order, each different from its predecessor
/// in the chain; the first and optionally the last must also avoid 1.
fn chain(
    lists: &ListAssignment,
    chain: &[Edge],
    first_not_one: bool,
    last_not_one: bool,
    out: &mut Labelling,
) -> Result<(), ConstructError> {
    let mut prev: Option<Label> = None;
    for (i, &e) in chain.iter().enumerate() {
        let avoid_one = (i == 0 && first_not_one) || (i + 1 == chain.len() && last_not_one);
        let found = list(lists, e)?
            .iter()
            .find(|l| !(avoid_one && l.is_one()) && prev.as_ref() != Some(*l));
        match found {
            Some(l) => {
                out.set(e, l.clone());
                prev = Some(l.clone());
            }
            None => return invariant(format!("path greedy stuck at {e}")),
        }
    }
    Ok(())
}

/// Path greedy on already zero-free lists. With `e_i` the `i`-th edge
/// from the smaller end, the labelling is proper iff `e_2` and `e_{n-1}`
/// avoid 1 and `e_{i-1} != e_{i+1}` throughout.
pub(crate) fn path_core(g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
    let Some(order) = g.path_order() else {
        return precondition("graph is not a path");
    };
    let n = order.len() - 1;
    if n < 2 {
        return precondition("a single edge has no proper labelling");
    }
    let e = |i: usize| Edge::new(order[i - 1], order[i]);
    let mut lab = Labelling::new();
    if n % 2 == 0 {
        let odd: Vec<Edge> = (1..n).step_by(2).rev().map(e).collect();
        chain(lists, &odd, true, false, &mut lab)?;
        let even: Vec<Edge> = (2..=n).step_by(2).map(e).collect();
        chain(lists, &even, true, false, &mut lab)?;
    } else {
        let even: Vec<Edge> = (2..n).step_by(2).map(e).collect();
        chain(lists, &even, true, true, &mut lab)?;
        let odd: Vec<Edge> = (1..=n).step_by(2).map(e).collect();
        chain(lists, &odd, false, false, &mut lab)?;
    }
    Ok(lab)
}

/// Cycle labelling on zero-free lists. Edges at distance two must differ,
/// so this list-colours the one (odd `n`) or two (even `n`) cycles formed
/// by that relation.
pub(crate) fn cycle_core(g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
    let Some(order) = g.cycle_order() else {
        return precondition("graph is not a cycle");
    };
    let n = order.len();
    let edges: Vec<Edge> = (0..n).map(|i| Edge::new(order[i], order[(i + 1) % n])).collect();
    let classes: Vec<Vec<Edge>> = if n % 2 == 1 {
        vec![(0..n).map(|j| edges[(2 * j) % n]).collect()]
    } else {
        vec![
            (0..n).step_by(2).map(|i| edges[i]).collect(),
            (1..n).step_by(2).map(|i| edges[i]).collect(),
        ]
    };
    let mut lab = Labelling::new();
    for class in classes {
        let ls: Vec<&[Label]> = class
            .iter()
            .map(|&e| list(lists, e))
            .collect::<Result<_, _>>()?;
        let Some(colours) = colour_cycle(&ls) else {
            return invariant(format!("conflict cycle {class:?} not colourable from its lists"));
        };
        for (e, c) in class.into_iter().zip(colours) {
            lab.set(e, c);
        }
    }
    Ok(lab)
}

/// List colouring of the cycle `c_0 .. c_{L-1}` (for `L = 2`, just two
/// distinct values). Works for 3-lists, and for 2-lists on even cycles.
pub(crate) fn colour_cycle(lists: &[&[Label]]) -> Option<Vec<Label>> {
    let len = lists.len();
    if len < 2 {
        return None;
    }
    if len == 2 {
        for a in lists[0] {
            if let Some(b) = lists[1].iter().find(|b| *b != a) {
                return Some(vec![a.clone(), b.clone()]);
            }
        }
        return None;
    }
    // a colour of c_i missing from L(c_{i-1}) lets c_{i-1} go last
    let start = (0..len).find_map(|i| {
        let prev = lists[(i + len - 1) % len];
        lists[i].iter().find(|x| !prev.contains(x)).map(|x| (i, x.clone()))
    });
    let mut out: Vec<Option<Label>> = vec![None; len];
    match start {
        Some((i, x)) => {
            out[i] = Some(x);
            for step in 1..len {
                let j = (i + step) % len;
                let prev = out[(j + len - 1) % len].clone();
                out[j] = Some(lists[j].iter().find(|y| Some(*y) != prev.as_ref())?.clone());
            }
        }
        None => {
            let size = lists[0].len();
            if size >= 3 {
                for j in 0..len {
                    let prev = if j == 0 { None } else { out[j - 1].clone() };
                    let first = if j + 1 == len { out[0].clone() } else { None };
                    out[j] = Some(
                        lists[j]
                            .iter()
                            .find(|y| Some(*y) != prev.as_ref() && Some(*y) != first.as_ref())?
                            .clone(),
                    );
                }
            } else if size == 2 && len % 2 == 0 {
                for (j, slot) in out.iter_mut().enumerate() {
                    *slot = Some(lists[j][j % 2].clone());
                }
            } else {
                return None;
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::label::{check_proper, Mode};

    fn ints(v: &[i64]) -> Vec<Label> {
        v.iter().map(|&x| Label::int(x)).collect()
    }

    #[test]
    fn p2_example() {
        let g = generators::path(2);
        let mut la = ListAssignment::new();
        la.insert(Edge::new(0, 1), ints(&[1, 2]));
        la.insert(Edge::new(1, 2), ints(&[1, 3]));
        let lab = label_path(&g, &la).unwrap();
        assert_eq!(lab.get(Edge::new(0, 1)), Some(&Label::int(2)));
        assert_eq!(lab.get(Edge::new(1, 2)), Some(&Label::int(3)));
    }

    #[test]
    fn path_list_size_preconditions() {
        let g = generators::path(5);
        let la = ListAssignment::uniform(&g, &ints(&[1, 2]));
        assert!(matches!(label_path(&g, &la), Err(ConstructError::Precondition(_))));
        let la = ListAssignment::uniform(&g, &ints(&[1, 2, 3]));
        assert!(label_path(&g, &la).is_ok());
        let g = generators::path(1);
        let la = ListAssignment::uniform(&g, &ints(&[1, 2, 3]));
        assert!(label_path(&g, &la).is_err());
    }

    #[test]
    fn zero_does_not_count() {
        let g = generators::path(4);
        let la = ListAssignment::uniform(&g, &ints(&[0, 2]));
        assert!(matches!(label_path(&g, &la), Err(ConstructError::Precondition(_))));
    }

    #[test]
    fn cycles() {
        let g = generators::cycle(8);
        let lab = label_cycle(&g, &ListAssignment::uniform(&g, &ints(&[1, 2]))).unwrap();
        assert!(check_proper(&g, &lab, Mode::Product).is_empty());
        let g = generators::cycle(5);
        assert!(label_cycle(&g, &ListAssignment::uniform(&g, &ints(&[1, 2, 3]))).is_ok());
        assert!(label_cycle(&g, &ListAssignment::uniform(&g, &ints(&[1, 2]))).is_err());
        let g = generators::cycle(4);
        let mut la = ListAssignment::new();
        for (e, l) in g.edges().into_iter().zip([[1, 2], [1, 2], [3, 4], [3, 4]]) {
            la.insert(e, ints(&l));
        }
        assert!(label_cycle(&g, &la).is_ok());
    }

    #[test]
    fn colour_cycle_cases() {
        let a = ints(&[1, 2]);
        let b = ints(&[1, 3]);
        assert!(colour_cycle(&[&a, &a, &a]).is_none());
        assert!(colour_cycle(&[&a, &a, &a, &a]).is_some());
        let c = colour_cycle(&[&a, &a, &b]).unwrap();
        assert!(c[0] != c[1] && c[1] != c[2] && c[2] != c[0]);
    }
}
