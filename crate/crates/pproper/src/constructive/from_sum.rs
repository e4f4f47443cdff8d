use super::{finish, list, precondition, require_nice, ConstructError};
use crate::graph::Graph;
use crate::label::{check_proper, strip_zero, Labelling, ListAssignment, Mode};
use crate::solver::{solve_with, SolverConfig};

/// Solves the multiplicative problem on lists of positive rationals.
///
/// Taking logarithms turns it into the additive problem, so any sum
/// labeller for `k`-lists has a multiplicative counterpart; implementors
/// work on the positive values directly.
pub trait AbsoluteValueLabeller {
    fn label(&self, g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError>;
}

impl<F> AbsoluteValueLabeller for F
where
    F: Fn(&Graph, &ListAssignment) -> Result<Labelling, ConstructError>,
{
    fn label(&self, g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
        self(g, lists)
    }
}

/// The exhaustive solver in product mode.
#[derive(Clone, Debug, Default)]
pub struct ExactAbsoluteLabeller {
    pub config: SolverConfig,
}

impl AbsoluteValueLabeller for ExactAbsoluteLabeller {
    fn label(&self, g: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
        match solve_with(g, lists, Mode::Product, &self.config)?.labelling() {
            Some(l) => Ok(l.clone()),
            None => Err(ConstructError::Inner(
                "no proper labelling of the absolute-value instance".into(),
            )),
        }
    }
}

/// Labels `g` from lists with at least `2k - 1` nonzero labels, given a
/// labeller that handles `k` positive values per edge.
///
/// Each list keeps `k` labels with pairwise distinct absolute values. A
/// proper labelling on the absolute values lifts back to the signed
/// labels, since `|π(v)|` already separates adjacent vertices.
pub fn product_from_sum(
    g: &Graph,
    la: &ListAssignment,
    k: usize,
    inner: &dyn AbsoluteValueLabeller,
) -> Result<Labelling, ConstructError> {
    if k == 0 {
        return precondition("k must be positive");
    }
    require_nice(g)?;
    la.covers(g)?;
    let lists = strip_zero(&la.restrict(g));
    let mut chosen = ListAssignment::new();
    let mut abs_lists = ListAssignment::new();
    for (e, l) in lists.iter() {
        if l.len() < 2 * k - 1 {
            return precondition(format!(
                "edge {e} has {} nonzero labels, need {}",
                l.len(),
                2 * k - 1
            ));
        }
        let mut pick = Vec::with_capacity(k);
        for x in l {
            if pick.len() < k && !pick.iter().any(|p: &crate::label::Label| p.abs() == x.abs()) {
                pick.push(x.clone());
            }
        }
        abs_lists.insert(e, pick.iter().map(|x| x.abs()));
        chosen.insert(e, pick);
    }
    let abs_lab = inner.label(g, &abs_lists).map_err(|e| match e {
        ConstructError::Inner(m) => ConstructError::Inner(m),
        other => ConstructError::Inner(other.to_string()),
    })?;
    abs_lab.check_total(g)?;
    abs_lab.check_membership(&abs_lists)?;
    if !check_proper(g, &abs_lab, Mode::Product).is_empty() {
        return Err(ConstructError::Inner(
            "inner labeller returned a labelling with conflicts".into(),
        ));
    }
    let mut lab = Labelling::new();
    for (e, a) in abs_lab.iter() {
        let signed = list(&chosen, e)?.iter().find(|x| &x.abs() == a).unwrap();
        lab.set(e, signed.clone());
    }
    finish(g, la, lab)
}
