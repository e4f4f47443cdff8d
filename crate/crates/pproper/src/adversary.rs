//! Infeasible list assignments. Every witness is checked with the exact
//! solver before it is returned.

use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::label::{Label, Labelling, ListAssignment, Mode};
use crate::solver::{solve, SolveStatus, SolverError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdversaryWitness {
    pub graph: Graph,
    pub lists: ListAssignment,
    /// The inequality the instance proves, e.g. `ch_P*(C_5) > 2`.
    pub claim: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessOutcome {
    Witness(AdversaryWitness),
    /// The lists admit this proper labelling.
    NotAWitness(Labelling),
}

impl WitnessOutcome {
    pub fn witness(&self) -> Option<&AdversaryWitness> {
        match self {
            WitnessOutcome::Witness(w) => Some(w),
            WitnessOutcome::NotAWitness(_) => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum AdversaryError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("construction is not infeasible after all: {0}")]
    NotInfeasible(String),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, AdversaryError> {
    Err(AdversaryError::InvalidParameter(msg.into()))
}

fn check(g: Graph, lists: ListAssignment, claim: String) -> Result<WitnessOutcome, AdversaryError> {
    Ok(match solve(&g, &lists, Mode::Product)?.status {
        SolveStatus::None => WitnessOutcome::Witness(AdversaryWitness {
            graph: g,
            lists,
            claim,
        }),
        SolveStatus::Found(l) => WitnessOutcome::NotAWitness(l),
    })
}

fn must_hold(outcome: WitnessOutcome, what: &str) -> Result<AdversaryWitness, AdversaryError> {
    match outcome {
        WitnessOutcome::Witness(w) => Ok(w),
        WitnessOutcome::NotAWitness(l) => Err(AdversaryError::NotInfeasible(format!(
            "{what} has the proper labelling {:?}",
            l.iter().map(|(e, x)| format!("{e}={x}")).collect::<Vec<_>>()
        ))),
    }
}

/// Every list `{1}`: all products are 1.
pub fn all_ones(g: &Graph) -> Result<AdversaryWitness, AdversaryError> {
    if g.edge_count() == 0 {
        return invalid("graph has no edges");
    }
    let lists = ListAssignment::uniform(g, &[Label::int(1)]);
    must_hold(check(g.clone(), lists, "ch_P*(G) > 1".into())?, "all-ones lists")
}

/// Whether lists `{-1, 1}` everywhere are infeasible: some component is
/// non-bipartite or has two parts of odd size.
pub fn plus_minus_one_predicate(g: &Graph) -> bool {
    g.components().iter().any(|c| {
        let h = g.induced(c);
        match h.bipartition() {
            None => true,
            Some((a, b)) => h.edge_count() > 0 && a.len() % 2 == 1 && b.len() % 2 == 1,
        }
    })
}

/// Every list `{-1, 1}`. Products are then signs, so a proper labelling
/// needs a sign per side of a bipartition, which parity rules out when
/// both sides are odd.
pub fn plus_minus_one(g: &Graph) -> Result<WitnessOutcome, AdversaryError> {
    let lists = ListAssignment::uniform(g, &[Label::int(-1), Label::int(1)]);
    check(g.clone(), lists, "ch_P*(G) > 2".into())
}

/// The 8-vertex tree with edges `1-2, 2-5, 3-4, 4-5, 5-6, 6-7, 7-8` and
/// 2-lists: the pendant edges force `2-5` and `4-5` to `a` and `6-7` to
/// `a^2`, after which 5 and 6 share a product.
pub fn bad_tree8(a: &Label) -> Result<AdversaryWitness, AdversaryError> {
    if a.is_zero() || a.abs().is_one() {
        return invalid(format!("a = {a} must avoid 0, 1 and -1"));
    }
    let g = bad_tree8_graph();
    let a2 = Label::new(a.value() * a.value());
    let one = Label::int(1);
    let mut lists = ListAssignment::uniform(&g, &[a.clone(), a2.clone()]);
    lists.insert(Edge::new(6, 7), [one.clone(), a2]);
    lists.insert(Edge::new(2, 5), [one.clone(), a.clone()]);
    lists.insert(Edge::new(4, 5), [one, a.clone()]);
    must_hold(check(g, lists, "ch_P*(T_8) > 2".into())?, "bad_tree8")
}

pub fn bad_tree8_graph() -> Graph {
    Graph::from_edges([(1, 2), (2, 5), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]).unwrap()
}

/// 2-lists on `P_n`, `n = 3 mod 4`, `n >= 7`. Every edge `e_i` with `i`
/// even must avoid the label of `e_{i-2}`, and `e_2`, `e_{n-1}` must avoid
/// the label 1. With `{1, a}` at `e_2` and `{a, b}` further along the even edges,
/// the chain is forced to `a, b, a, b, ...`, ending on `b` just before
/// `e_{n-1}`, whose list is `{1, b}`.
pub fn bad_path(n: usize, a: &Label, b: &Label) -> Result<AdversaryWitness, AdversaryError> {
    if n < 7 || n % 4 != 3 {
        return invalid(format!("n = {n}: need n >= 7 with n = 3 mod 4"));
    }
    if a.is_zero() || a.abs().is_one() {
        return invalid(format!("a = {a} must avoid 0, 1 and -1"));
    }
    if b.is_zero() || b.is_one() || b == a {
        return invalid(format!("b = {b} must avoid 0, 1 and a"));
    }
    let g = crate::generators::path(n);
    let e = |i: usize| Edge::new(i - 1, i);
    let one = Label::int(1);
    let mut lists = ListAssignment::uniform(&g, &[a.clone(), b.clone()]);
    lists.insert(e(2), [one.clone(), a.clone()]);
    // the even chain e_2, e_4, ..., e_{n-1} has odd length here, so the
    // label forced onto e_{n-3} is b
    let chain_len = (n - 1) / 2;
    let last = if chain_len % 2 == 1 { b.clone() } else { a.clone() };
    lists.insert(e(n - 1), [one, last]);
    must_hold(check(g, lists, format!("ch_P*(P_{n}) > 2"))?, "bad_path")
}

/// All lists `{a, b}` on `C_n`. Edges at distance two must differ, which
/// 2-colours one or two cycles from identical lists; that fails exactly
/// when one of them is odd, i.e. `n` is not a multiple of 4.
pub fn bad_odd_cycle(n: usize, a: &Label, b: &Label) -> Result<WitnessOutcome, AdversaryError> {
    if n < 3 {
        return invalid(format!("n = {n}: a cycle needs at least 3 edges"));
    }
    if a == b || a.is_zero() || b.is_zero() {
        return invalid("a and b must be distinct and nonzero");
    }
    let g = crate::generators::cycle(n);
    let lists = ListAssignment::uniform(&g, &[a.clone(), b.clone()]);
    check(g, lists, format!("ch_P*(C_{n}) > 2"))
}
