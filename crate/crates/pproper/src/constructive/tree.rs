use super::paths::path_core;
use super::reduce::{branch, descending_paths, pending_path};
use super::{effective_lists, finish, invariant, precondition, ConstructError};
use crate::graph::{find_long_pending_path, tree_structure, Graph};
use crate::label::{Labelling, ListAssignment};

/// Labels a nice tree from any zero-free 3-lists.
pub fn label_tree(t: &Graph, la: &ListAssignment) -> Result<Labelling, ConstructError> {
    if !t.is_tree() {
        return precondition("graph is not a tree");
    }
    if t.edge_count() == 1 {
        return precondition("a single edge has no proper labelling");
    }
    let lists = effective_lists(t, la, 3)?;
    let lab = tree_rec(t, &lists)?;
    finish(t, la, lab)
}

pub(crate) fn tree_rec(t: &Graph, lists: &ListAssignment) -> Result<Labelling, ConstructError> {
    if t.edge_count() == 0 {
        return Ok(Labelling::new());
    }
    if t.max_degree() <= 2 {
        return path_core(t, lists);
    }
    if let Some(p) = find_long_pending_path(t) {
        return pending_path(t, lists, p, &tree_rec);
    }
    let root = t.vertices().find(|&v| t.degree(v) >= 3).unwrap();
    let ts = tree_structure(t, root).map_err(|e| super::ConstructError::Precondition(e.to_string()))?;
    let Some(u) = ts.deepest_branching else {
        return invariant("tree with a degree-3 vertex has no branching vertex");
    };
    let parent = ts.forest.parent[&u];
    let (legs, leaves) = descending_paths(t, &ts.forest, u)?;
    branch(t, lists, u, parent.into_iter().collect(), legs, leaves, &tree_rec)
}
