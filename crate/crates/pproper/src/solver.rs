//! Exhaustive backtracking over list choices.
//!
//! Edges are taken by decreasing endpoint degree sum (then lexicographically).
//! A branch is cut as soon as a vertex whose edges are all labelled gets the
//! same colour as a neighbour whose edges are all labelled, so `None` is a
//! proof of infeasibility.

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};
use crate::label::{check_proper, Label, LabelError, Labelling, ListAssignment, Mode, Rational};

pub const DEFAULT_NODE_CAP: u64 = 1 << 24;
pub const DEFAULT_COUNT_CAP: u64 = 1 << 24;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Search nodes allowed before the solver refuses to answer.
    pub node_cap: u64,
    /// Bound on the product of list sizes for `count_proper`, and on the
    /// number of outer assignments for `worst_list_verdict`.
    pub enumeration_cap: u64,
    /// Split the search over rayon's pool. Results are identical to the
    /// single-threaded run.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_cap: DEFAULT_NODE_CAP,
            enumeration_cap: DEFAULT_COUNT_CAP,
            parallel: false,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error("search exceeded the node cap of {0}")]
    NodeCap(u64),
    #[error("enumeration of {needed} cases exceeds the cap of {cap}")]
    EnumerationCap { needed: String, cap: u64 },
    #[error("k = {k} exceeds the universe size {size}")]
    UniverseTooSmall { k: usize, size: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Found(Labelling),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub nodes_explored: u64,
}

impl SolveOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self.status, SolveStatus::Found(_))
    }

    pub fn labelling(&self) -> Option<&Labelling> {
        match &self.status {
            SolveStatus::Found(l) => Some(l),
            SolveStatus::None => None,
        }
    }
}

/// Search state shared by `solve` and `count_proper`.
struct Problem {
    mode: Mode,
    edges: Vec<Edge>,
    cands: Vec<Vec<Label>>,
    /// Dense vertex index to incident ordered-edge positions.
    incident: Vec<Vec<usize>>,
    nbrs: Vec<Vec<usize>>,
    /// Position after which a vertex has all its edges labelled.
    done_at: Vec<usize>,
    /// Vertices completed at each position.
    completes: Vec<Vec<usize>>,
}

impl Problem {
    fn new(g: &Graph, la: &ListAssignment, mode: Mode) -> Result<Problem, SolverError> {
        la.covers(g)?;
        let verts: Vec<Vertex> = g.vertices().collect();
        let index = |v: Vertex| verts.binary_search(&v).unwrap();
        let mut edges = g.edges();
        edges.sort_by_key(|e| (std::cmp::Reverse(g.degree(e.u()) + g.degree(e.v())), *e));
        let cands = edges
            .iter()
            .map(|e| la.get(*e).unwrap().to_vec())
            .collect();
        let ends: Vec<(usize, usize)> = edges.iter().map(|e| (index(e.u()), index(e.v()))).collect();
        let mut incident = vec![Vec::new(); verts.len()];
        for (i, &(a, b)) in ends.iter().enumerate() {
            incident[a].push(i);
            incident[b].push(i);
        }
        let nbrs = verts
            .iter()
            .map(|&v| g.neighbors(v).map(index).collect())
            .collect();
        let done_at: Vec<usize> = incident
            .iter()
            .map(|inc| inc.iter().copied().max().unwrap_or(usize::MAX))
            .collect();
        let mut completes = vec![Vec::new(); edges.len()];
        for (v, &d) in done_at.iter().enumerate() {
            if d != usize::MAX {
                completes[d].push(v);
            }
        }
        Ok(Problem {
            mode,
            edges,
            cands,
            incident,
            nbrs,
            done_at,
            completes,
        })
    }

    fn colour(&self, v: usize, chosen: &[usize]) -> Rational {
        let mut acc = match self.mode {
            Mode::Sum => Rational::zero(),
            Mode::Product => Rational::one(),
        };
        for &i in &self.incident[v] {
            let x = self.cands[i][chosen[i]].value();
            match self.mode {
                Mode::Sum => acc += x,
                Mode::Product => acc *= x,
            }
        }
        acc
    }

    /// After fixing position `pos`, do the vertices completed there clash
    /// with completed neighbours?
    fn consistent(&self, pos: usize, chosen: &[usize], col: &mut [Option<Rational>]) -> bool {
        for &v in &self.completes[pos] {
            col[v] = Some(self.colour(v, chosen));
        }
        for &v in &self.completes[pos] {
            for &w in &self.nbrs[v] {
                if self.done_at[w] <= pos && col[v] == col[w] {
                    return false;
                }
            }
        }
        true
    }

    fn labelling(&self, chosen: &[usize]) -> Labelling {
        self.edges
            .iter()
            .zip(chosen)
            .enumerate()
            .map(|(i, (e, &c))| (*e, self.cands[i][c].clone()))
            .collect()
    }

    /// Depth-first search from `pos`; returns the first full assignment.
    fn search(
        &self,
        pos: usize,
        chosen: &mut Vec<usize>,
        col: &mut Vec<Option<Rational>>,
        nodes: &AtomicU64,
        cap: u64,
    ) -> Result<bool, SolverError> {
        if pos == self.edges.len() {
            return Ok(true);
        }
        for c in 0..self.cands[pos].len() {
            if nodes.fetch_add(1, AtomicOrdering::Relaxed) >= cap {
                return Err(SolverError::NodeCap(cap));
            }
            chosen.push(c);
            if self.consistent(pos, chosen, col) && self.search(pos + 1, chosen, col, nodes, cap)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    fn count(&self, pos: usize, chosen: &mut Vec<usize>, col: &mut Vec<Option<Rational>>) -> u64 {
        if pos == self.edges.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..self.cands[pos].len() {
            chosen.push(c);
            if self.consistent(pos, chosen, col) {
                total += self.count(pos + 1, chosen, col);
            }
            chosen.pop();
        }
        total
    }

    fn fresh_colours(&self) -> Vec<Option<Rational>> {
        vec![None; self.incident.len()]
    }
}

pub fn solve(g: &Graph, la: &ListAssignment, mode: Mode) -> Result<SolveOutcome, SolverError> {
    solve_with(g, la, mode, &SolverConfig::default())
}

pub fn solve_with(
    g: &Graph,
    la: &ListAssignment,
    mode: Mode,
    cfg: &SolverConfig,
) -> Result<SolveOutcome, SolverError> {
    let p = Problem::new(g, la, mode)?;
    let nodes = AtomicU64::new(0);
    let found = if p.edges.is_empty() {
        Some(Vec::new())
    } else if cfg.parallel && p.cands[0].len() > 1 {
        // one task per choice on the first edge; the lowest successful
        // choice is the one the sequential search would return
        let results: Vec<Result<Option<Vec<usize>>, SolverError>> = (0..p.cands[0].len())
            .into_par_iter()
            .map(|c| {
                nodes.fetch_add(1, AtomicOrdering::Relaxed);
                let mut chosen = vec![c];
                let mut col = p.fresh_colours();
                if !p.consistent(0, &chosen, &mut col) {
                    return Ok(None);
                }
                Ok(p
                    .search(1, &mut chosen, &mut col, &nodes, cfg.node_cap)?
                    .then_some(chosen))
            })
            .collect();
        let mut first = None;
        for r in results {
            match r {
                Ok(Some(ch)) => {
                    first = Some(ch);
                    break;
                }
                Ok(None) => {}
                Err(e) => return Err(e),
            }
        }
        first
    } else {
        let mut chosen = Vec::with_capacity(p.edges.len());
        let mut col = p.fresh_colours();
        p.search(0, &mut chosen, &mut col, &nodes, cfg.node_cap)?
            .then_some(chosen)
    };
    let status = match found {
        Some(chosen) => {
            let lab = p.labelling(&chosen);
            assert!(
                check_proper(g, &lab, mode).is_empty() && lab.check_membership(la).is_ok(),
                "solver produced an invalid labelling"
            );
            SolveStatus::Found(lab)
        }
        None => SolveStatus::None,
    };
    Ok(SolveOutcome {
        status,
        nodes_explored: nodes.load(AtomicOrdering::Relaxed),
    })
}

/// Exact number of proper labellings drawn from the lists.
pub fn count_proper(g: &Graph, la: &ListAssignment, mode: Mode) -> Result<u64, SolverError> {
    count_proper_with(g, la, mode, &SolverConfig::default())
}

pub fn count_proper_with(
    g: &Graph,
    la: &ListAssignment,
    mode: Mode,
    cfg: &SolverConfig,
) -> Result<u64, SolverError> {
    let p = Problem::new(g, la, mode)?;
    let mut space = BigUint::one();
    for c in &p.cands {
        space *= c.len();
    }
    if space > BigUint::from(cfg.enumeration_cap) {
        return Err(SolverError::EnumerationCap {
            needed: space.to_string(),
            cap: cfg.enumeration_cap,
        });
    }
    if p.edges.is_empty() {
        return Ok(1);
    }
    if cfg.parallel {
        Ok((0..p.cands[0].len())
            .into_par_iter()
            .map(|c| {
                let mut chosen = vec![c];
                let mut col = p.fresh_colours();
                if p.consistent(0, &chosen, &mut col) {
                    p.count(1, &mut chosen, &mut col)
                } else {
                    0
                }
            })
            .sum())
    } else {
        let mut chosen = Vec::new();
        let mut col = p.fresh_colours();
        Ok(p.count(0, &mut chosen, &mut col))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WorstCase {
    /// Every k-list assignment from the universe admits a proper labelling.
    Feasible { assignments: u64 },
    /// A k-list assignment with no proper labelling.
    Witness(ListAssignment),
}

/// Decides whether every assignment of `k`-subsets of `universe` to the
/// edges of `g` admits a proper labelling.
pub fn worst_list_verdict(
    g: &Graph,
    universe: &[Label],
    k: usize,
    mode: Mode,
    cfg: &SolverConfig,
) -> Result<WorstCase, SolverError> {
    let universe: Vec<Label> = universe.iter().cloned().sorted().dedup().collect();
    if k == 0 || k > universe.len() {
        return Err(SolverError::UniverseTooSmall {
            k,
            size: universe.len(),
        });
    }
    let subsets: Vec<Vec<Label>> = universe.iter().cloned().combinations(k).collect();
    let edges = g.edges();
    let total = BigUint::from(subsets.len()).pow(edges.len() as u32);
    if total > BigUint::from(cfg.enumeration_cap) {
        return Err(SolverError::EnumerationCap {
            needed: total.to_string(),
            cap: cfg.enumeration_cap,
        });
    }
    let total: u64 = total.try_into().expect("bounded by the cap");
    let base = subsets.len() as u64;
    let inner = SolverConfig {
        parallel: false,
        ..cfg.clone()
    };
    let assignment = |mut idx: u64| {
        let mut la = ListAssignment::new();
        for e in edges.iter().rev() {
            la.insert(*e, subsets[(idx % base) as usize].iter().cloned());
            idx /= base;
        }
        la
    };
    let probe = |idx: u64| -> Result<Option<ListAssignment>, SolverError> {
        let la = assignment(idx);
        let out = solve_with(g, &la, mode, &inner)?;
        Ok((!out.is_found()).then_some(la))
    };
    let first_bad = if cfg.parallel {
        (0..total)
            .into_par_iter()
            .map(probe)
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            })
    } else {
        (0..total).map(probe).find_map(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
    };
    match first_bad {
        None => Ok(WorstCase::Feasible { assignments: total }),
        Some(Err(e)) => Err(e),
        Some(Ok(Some(la))) => {
            let recheck = solve_with(g, &la, mode, &inner)?;
            assert!(!recheck.is_found(), "witness failed its re-check");
            Ok(WorstCase::Witness(la))
        }
        Some(Ok(None)) => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn ints(xs: &[i64]) -> Vec<Label> {
        xs.iter().map(|&x| Label::int(x)).collect()
    }

    #[test]
    fn triangle_pm1_is_none() {
        let g = generators::cycle(3);
        let la = ListAssignment::uniform(&g, &ints(&[-1, 1]));
        assert_eq!(solve(&g, &la, Mode::Product).unwrap().status, SolveStatus::None);
    }

    #[test]
    fn c4_pm1_found_and_counted() {
        let g = generators::cycle(4);
        let la = ListAssignment::uniform(&g, &ints(&[-1, 1]));
        let out = solve(&g, &la, Mode::Product).unwrap();
        assert!(out.is_found());
        assert_eq!(count_proper(&g, &la, Mode::Product).unwrap(), 4);
    }

    #[test]
    fn k2_is_none_and_empty_graph_found() {
        let g = generators::path(1);
        let la = ListAssignment::uniform(&g, &ints(&[1, 2, 3, 4]));
        assert!(!solve(&g, &la, Mode::Product).unwrap().is_found());
        let empty = Graph::new();
        let out = solve(&empty, &ListAssignment::new(), Mode::Product).unwrap();
        assert_eq!(out.status, SolveStatus::Found(Labelling::new()));
    }

    #[test]
    fn small_counts() {
        let g = generators::path(2);
        let mut la = ListAssignment::new();
        la.insert(Edge::new(0, 1), ints(&[2]));
        la.insert(Edge::new(1, 2), ints(&[3]));
        assert_eq!(count_proper(&g, &la, Mode::Product).unwrap(), 1);
        let ones = ListAssignment::uniform(&g, &ints(&[1]));
        assert_eq!(count_proper(&g, &ones, Mode::Product).unwrap(), 0);
    }

    #[test]
    fn worst_case_examples() {
        let cfg = SolverConfig::default();
        let c3 = generators::cycle(3);
        match worst_list_verdict(&c3, &ints(&[-1, 1, 2]), 2, Mode::Product, &cfg).unwrap() {
            WorstCase::Witness(la) => {
                assert_eq!(la, ListAssignment::uniform(&c3, &ints(&[-1, 1])));
            }
            other => panic!("expected witness, got {other:?}"),
        }
        let p2 = generators::path(2);
        assert_eq!(
            worst_list_verdict(&p2, &ints(&[1, 2, 3]), 2, Mode::Product, &cfg).unwrap(),
            WorstCase::Feasible { assignments: 9 }
        );
        let star = generators::star(3);
        assert_eq!(
            worst_list_verdict(&star, &ints(&[1, 2, 3]), 3, Mode::Product, &cfg).unwrap(),
            WorstCase::Feasible { assignments: 1 }
        );
    }

    #[test]
    fn caps_refuse() {
        let g = generators::cycle(8);
        let la = ListAssignment::uniform(&g, &ints(&[1, 2, 3, 4, 5, 6, 7, 8, 9]));
        let cfg = SolverConfig {
            enumeration_cap: 1000,
            ..SolverConfig::default()
        };
        assert!(matches!(
            count_proper_with(&g, &la, Mode::Product, &cfg),
            Err(SolverError::EnumerationCap { .. })
        ));
        let tiny = SolverConfig {
            node_cap: 3,
            ..SolverConfig::default()
        };
        let k4 = generators::complete(4);
        let pm = ListAssignment::uniform(&k4, &ints(&[-1, 1]));
        assert_eq!(
            solve_with(&k4, &pm, Mode::Product, &tiny),
            Err(SolverError::NodeCap(3))
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let par = SolverConfig {
            parallel: true,
            ..SolverConfig::default()
        };
        for g in [generators::cycle(5), generators::petersen(), generators::complete(4)] {
            let la = ListAssignment::uniform(&g, &ints(&[-2, 1, 3]));
            let a = solve(&g, &la, Mode::Product).unwrap().status;
            let b = solve_with(&g, &la, Mode::Product, &par).unwrap().status;
            assert_eq!(a, b);
        }
        let g = generators::cycle(6);
        let la = ListAssignment::uniform(&g, &ints(&[-1, 1, 2]));
        assert_eq!(
            count_proper(&g, &la, Mode::Product).unwrap(),
            count_proper_with(&g, &la, Mode::Product, &par).unwrap()
        );
    }

    #[test]
    fn sum_mode() {
        // P_2 with {1},{2} gives sums 1, 3, 2; K_2 never works
        let g = generators::path(2);
        let mut la = ListAssignment::new();
        la.insert(Edge::new(0, 1), ints(&[1]));
        la.insert(Edge::new(1, 2), ints(&[2]));
        assert!(solve(&g, &la, Mode::Sum).unwrap().is_found());
        let k2 = generators::path(1);
        let same = ListAssignment::uniform(&k2, &ints(&[1, 2, 3]));
        assert!(!solve(&k2, &same, Mode::Sum).unwrap().is_found());
    }
}
