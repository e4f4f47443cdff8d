//! Labellers that succeed for every list assignment of a guaranteed size.
//!
//! Each public entry point strips `0` from the lists, checks its
//! preconditions, runs the reduction and then verifies the result with the
//! checker before returning it. A verification failure is reported as
//! [`ConstructError::Invariant`], never silently.

mod from_sum;
mod local;
mod paths;
mod planar;
mod reduce;
mod removal;
mod star;
mod subcubic;
mod tree;

use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};
use crate::label::{
    strip_zero, vertex_product, verify, Label, LabelError, Labelling, ListAssignment, Mode,
    Rational,
};
use crate::solver::SolverError;

pub use from_sum::{product_from_sum, AbsoluteValueLabeller, ExactAbsoluteLabeller};
pub use paths::{label_cycle, label_path};
pub use planar::label_planar_girth16;
pub use removal::label_removal_extend;
pub use star::{extend_star, Anchor, StarExtensionProblem};
pub use subcubic::label_subcubic;
pub use tree::label_tree;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invariant violated (bug or broken promise): {0}")]
    Invariant(String),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("inner labeller failed: {0}")]
    Inner(String),
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T, ConstructError> {
    Err(ConstructError::Precondition(msg.into()))
}

pub(crate) fn invariant<T>(msg: impl Into<String>) -> Result<T, ConstructError> {
    Err(ConstructError::Invariant(msg.into()))
}

/// Zero-free lists restricted to `g`, each of size at least `need`.
pub(crate) fn effective_lists(
    g: &Graph,
    la: &ListAssignment,
    need: usize,
) -> Result<ListAssignment, ConstructError> {
    la.covers(g)?;
    let lists = strip_zero(&la.restrict(g));
    for (e, l) in lists.iter() {
        if l.len() < need {
            return precondition(format!(
                "edge {e} has {} nonzero labels, need {need}",
                l.len()
            ));
        }
    }
    Ok(lists)
}

pub(crate) fn require_nice(g: &Graph) -> Result<(), ConstructError> {
    if g.is_nice() {
        Ok(())
    } else {
        precondition("graph has a K_2 component")
    }
}

/// Checker gate applied to every public result.
pub(crate) fn finish(
    g: &Graph,
    la: &ListAssignment,
    lab: Labelling,
) -> Result<Labelling, ConstructError> {
    let bad = verify(g, la, &lab, Mode::Product)?;
    if !bad.is_empty() {
        return invariant(format!("output has conflicts on {bad:?}"));
    }
    Ok(lab)
}

pub(crate) fn list<'a>(lists: &'a ListAssignment, e: Edge) -> Result<&'a [Label], ConstructError> {
    lists
        .get(e)
        .ok_or(ConstructError::Label(LabelError::MissingList(e)))
}

/// Smallest label of `e`'s list passing `ok`.
pub(crate) fn pick(
    lists: &ListAssignment,
    e: Edge,
    what: &str,
    ok: impl Fn(&Rational) -> bool,
) -> Result<Label, ConstructError> {
    match list(lists, e)?.iter().find(|l| ok(l.value())) {
        Some(l) => Ok(l.clone()),
        None => invariant(format!("no admissible label on {e} ({what})")),
    }
}

/// Partial product at `v` over the labelled edges of `g`.
pub(crate) fn pp(g: &Graph, lab: &Labelling, v: Vertex) -> Rational {
    vertex_product(g, lab, v)
}

pub(crate) fn label_of(lab: &Labelling, e: Edge) -> Result<Rational, ConstructError> {
    match lab.get(e) {
        Some(l) => Ok(l.value().clone()),
        None => invariant(format!("edge {e} expected to be labelled")),
    }
}

/// Recursion step signature shared by the tree and planar procedures.
pub(crate) type Recurse<'a> = &'a dyn Fn(&Graph, &ListAssignment) -> Result<Labelling, ConstructError>;

/// Labels every component of `g` with `one`, skipping edgeless ones.
pub(crate) fn per_component(
    g: &Graph,
    lists: &ListAssignment,
    one: impl Fn(&Graph, &ListAssignment) -> Result<Labelling, ConstructError>,
) -> Result<Labelling, ConstructError> {
    let comps = g.components();
    let mut out = Labelling::new();
    for c in comps {
        let h = g.induced(&c);
        if h.edge_count() > 0 {
            out.extend(&one(&h, lists)?);
        }
    }
    Ok(out)
}
