//! Exact rational labels, list assignments, labellings and the two
//! properness checkers.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};

pub type Rational = BigRational;

/// An exact rational edge label.
///
/// Ordering is lexicographic on (numerator, denominator) of the reduced
/// form, which is the tie-break every constructive routine uses.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Label(Rational);

impl Label {
    pub fn new(value: Rational) -> Label {
        Label(value)
    }

    pub fn int(n: i64) -> Label {
        Label(Rational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Label {
        Label(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_value(self) -> Rational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn abs(&self) -> Label {
        Label(self.0.abs())
    }

    pub fn neg(&self) -> Label {
        Label(-self.0.clone())
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .numer()
            .cmp(other.0.numer())
            .then_with(|| self.0.denom().cmp(other.0.denom()))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Rational> for Label {
    fn from(r: Rational) -> Label {
        Label(r)
    }
}

impl From<i64> for Label {
    fn from(n: i64) -> Label {
        Label::int(n)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse {0:?} as a rational")]
pub struct ParseLabelError(pub String);

impl FromStr for Label {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Label, ParseLabelError> {
        let t = s.trim().replace('\u{2212}', "-");
        let err = || ParseLabelError(s.to_string());
        let value = match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Rational::new(n, d)
            }
            None => Rational::from_integer(t.parse().map_err(|_| err())?),
        };
        Ok(Label(value))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Sum,
    Product,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Sum => "sum",
            Mode::Product => "product",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Mode, String> {
        match s.to_ascii_lowercase().as_str() {
            "sum" | "s" => Ok(Mode::Sum),
            "product" | "prod" | "p" => Ok(Mode::Product),
            other => Err(format!("unknown mode {other:?} (expected sum or product)")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelError {
    #[error("edge {0} has no list")]
    MissingList(Edge),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(Edge),
    #[error("edge {0} is not labelled")]
    Unlabelled(Edge),
    #[error("label {label} on edge {edge} is not in its list")]
    NotInList { edge: Edge, label: Label },
    #[error("edge {edge} has a list of size {found}, expected {expected}")]
    WrongSize {
        edge: Edge,
        found: usize,
        expected: usize,
    },
}

/// Per-edge finite label sets. Lists are kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ListAssignment {
    lists: BTreeMap<Edge, Vec<Label>>,
}

impl ListAssignment {
    pub fn new() -> ListAssignment {
        ListAssignment::default()
    }

    pub fn insert<I: IntoIterator<Item = Label>>(&mut self, e: Edge, labels: I) {
        let set: BTreeSet<Label> = labels.into_iter().collect();
        self.lists.insert(e, set.into_iter().collect());
    }

    /// Same list on every edge of `g`.
    pub fn uniform(g: &Graph, labels: &[Label]) -> ListAssignment {
        let mut la = ListAssignment::new();
        for e in g.edges() {
            la.insert(e, labels.iter().cloned());
        }
        la
    }

    pub fn get(&self, e: Edge) -> Option<&[Label]> {
        self.lists.get(&e).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, &[Label])> {
        self.lists.iter().map(|(e, l)| (*e, l.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// The common list size, if all lists have the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        let mut sizes = self.lists.values().map(Vec::len);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    pub fn min_size(&self) -> usize {
        self.lists.values().map(Vec::len).min().unwrap_or(0)
    }

    pub fn contains_zero(&self) -> bool {
        self.lists.values().flatten().any(Label::is_zero)
    }

    /// Every edge of `g` has a list.
    pub fn covers(&self, g: &Graph) -> Result<(), LabelError> {
        for e in g.edges() {
            if !self.lists.contains_key(&e) {
                return Err(LabelError::MissingList(e));
            }
        }
        Ok(())
    }

    /// Lists of exactly the edges of `g`.
    pub fn restrict(&self, g: &Graph) -> ListAssignment {
        let lists = g
            .edges()
            .into_iter()
            .filter_map(|e| self.lists.get(&e).map(|l| (e, l.clone())))
            .collect();
        ListAssignment { lists }
    }
}

/// Removes 0 from every list. The result is uniform of size k - 1 exactly
/// when every list of size k contained 0.
pub fn strip_zero(la: &ListAssignment) -> ListAssignment {
    let lists = la
        .lists
        .iter()
        .map(|(e, l)| (*e, l.iter().filter(|x| !x.is_zero()).cloned().collect()))
        .collect();
    ListAssignment { lists }
}

/// A map from edges to labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labelling {
    labels: BTreeMap<Edge, Label>,
}

impl Labelling {
    pub fn new() -> Labelling {
        Labelling::default()
    }

    pub fn set(&mut self, e: Edge, l: Label) {
        self.labels.insert(e, l);
    }

    pub fn get(&self, e: Edge) -> Option<&Label> {
        self.labels.get(&e)
    }

    pub fn remove(&mut self, e: Edge) -> Option<Label> {
        self.labels.remove(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, &Label)> {
        self.labels.iter().map(|(e, l)| (*e, l))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn extend(&mut self, other: &Labelling) {
        for (e, l) in other.iter() {
            self.labels.insert(e, l.clone());
        }
    }

    /// Every edge of `g` labelled, and nothing else.
    pub fn check_total(&self, g: &Graph) -> Result<(), LabelError> {
        for e in g.edges() {
            if !self.labels.contains_key(&e) {
                return Err(LabelError::Unlabelled(e));
            }
        }
        for e in self.labels.keys() {
            if !g.has_edge(e.u(), e.v()) {
                return Err(LabelError::UnknownEdge(*e));
            }
        }
        Ok(())
    }

    pub fn check_membership(&self, la: &ListAssignment) -> Result<(), LabelError> {
        for (e, l) in &self.labels {
            let list = la.get(*e).ok_or(LabelError::MissingList(*e))?;
            if !list.contains(l) {
                return Err(LabelError::NotInList {
                    edge: *e,
                    label: l.clone(),
                });
            }
        }
        Ok(())
    }
}

impl FromIterator<(Edge, Label)> for Labelling {
    fn from_iter<I: IntoIterator<Item = (Edge, Label)>>(iter: I) -> Labelling {
        Labelling {
            labels: iter.into_iter().collect(),
        }
    }
}

/// Product of the labels at `v`; 1 when no incident edge is labelled.
/// Unlabelled incident edges are skipped, which gives partial products.
pub fn vertex_product(g: &Graph, lab: &Labelling, v: Vertex) -> Rational {
    let mut p = Rational::one();
    for e in g.incident(v) {
        if let Some(l) = lab.get(e) {
            p *= l.value();
        }
    }
    p
}

/// Sum of the labels at `v`; 0 when no incident edge is labelled.
pub fn vertex_sum(g: &Graph, lab: &Labelling, v: Vertex) -> Rational {
    let mut s = Rational::zero();
    for e in g.incident(v) {
        if let Some(l) = lab.get(e) {
            s += l.value();
        }
    }
    s
}

pub fn vertex_colour(g: &Graph, lab: &Labelling, v: Vertex, mode: Mode) -> Rational {
    match mode {
        Mode::Sum => vertex_sum(g, lab, v),
        Mode::Product => vertex_product(g, lab, v),
    }
}

pub fn colours(g: &Graph, lab: &Labelling, mode: Mode) -> BTreeMap<Vertex, Rational> {
    g.vertices()
        .map(|v| (v, vertex_colour(g, lab, v, mode)))
        .collect()
}

/// Edges whose endpoints get equal colours. Empty means proper.
pub fn check_proper(g: &Graph, lab: &Labelling, mode: Mode) -> Vec<Edge> {
    let c = colours(g, lab, mode);
    g.edges()
        .into_iter()
        .filter(|e| c[&e.u()] == c[&e.v()])
        .collect()
}

/// Totality, list membership and properness in one call.
pub fn verify(
    g: &Graph,
    la: &ListAssignment,
    lab: &Labelling,
    mode: Mode,
) -> Result<Vec<Edge>, LabelError> {
    lab.check_total(g)?;
    lab.check_membership(la)?;
    Ok(check_proper(g, lab, mode))
}
