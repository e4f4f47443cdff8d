//! Polynomial certificates.
//!
//! For an orientation of `G` with edges `e_1..e_m` (in increasing order),
//!
//! * `Q = prod over arcs uv of (sum_{e at u} x_e - sum_{e at v} x_e)`
//! * `P = prod over arcs uv of (prod_{e at u} x_e - prod_{e at v} x_e)`
//!
//! A nonzero coefficient on a monomial `x^t` of maximum total degree means,
//! by the Combinatorial Nullstellensatz, that lists of sizes `t_i + 1` always
//! contain a point where the polynomial does not vanish, i.e. a proper
//! labelling.

mod permanent;
mod poly;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use permanent::permanent;
pub use poly::SparsePolynomial;

use crate::graph::{Edge, Graph, Vertex};
use crate::label::Mode;

pub const DEFAULT_MAX_EDGES: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CnError {
    #[error("graph has {edges} edges, above the expansion limit of {limit}")]
    TooLarge { edges: usize, limit: usize },
    #[error("orientation does not match the graph: {0}")]
    BadOrientation(String),
}

/// One arc per edge, indexed like `Graph::edges`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<(Vertex, Vertex)>,
}

impl Orientation {
    /// Every edge directed from its smaller to its larger endpoint.
    pub fn ascending(g: &Graph) -> Orientation {
        Orientation {
            arcs: g.edges().iter().map(|e| (e.u(), e.v())).collect(),
        }
    }

    pub fn from_arcs(g: &Graph, arcs: Vec<(Vertex, Vertex)>) -> Result<Orientation, CnError> {
        let edges = g.edges();
        if arcs.len() != edges.len() {
            return Err(CnError::BadOrientation(format!(
                "{} arcs for {} edges",
                arcs.len(),
                edges.len()
            )));
        }
        for (e, &(a, b)) in edges.iter().zip(&arcs) {
            if Edge::new(a, b) != *e {
                return Err(CnError::BadOrientation(format!("arc {a}->{b} is not edge {e}")));
            }
        }
        Ok(Orientation { arcs })
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    /// Same orientation with arc `i` reversed.
    pub fn flipped(&self, i: usize) -> Orientation {
        let mut arcs = self.arcs.clone();
        arcs[i] = (arcs[i].1, arcs[i].0);
        Orientation { arcs }
    }
}

fn guard(g: &Graph, limit: usize) -> Result<Vec<Edge>, CnError> {
    let edges = g.edges();
    if edges.len() > limit {
        return Err(CnError::TooLarge {
            edges: edges.len(),
            limit,
        });
    }
    Ok(edges)
}

fn incident_indices(edges: &[Edge], v: Vertex) -> Vec<usize> {
    (0..edges.len()).filter(|&i| edges[i].contains(v)).collect()
}

/// Coefficient matrix of the linear factors of `Q`: row per arc, column per
/// edge. Entry `(a, j)` is `+1` when `e_j` touches only the tail of arc `a`,
/// `-1` when it touches only the head, and `0` otherwise (in particular for
/// the arc's own edge, which cancels). Its permanent is the coefficient of
/// `x_1 x_2 ... x_m` in `Q`.
pub fn sum_matrix(g: &Graph, o: &Orientation) -> Vec<Vec<BigInt>> {
    let edges = g.edges();
    o.arcs
        .iter()
        .map(|&(u, v)| {
            edges
                .iter()
                .map(|e| {
                    BigInt::from(i32::from(e.contains(u)) - i32::from(e.contains(v)))
                })
                .collect()
        })
        .collect()
}

pub fn build_sum_poly(g: &Graph, o: &Orientation) -> Result<SparsePolynomial, CnError> {
    build_sum_poly_limited(g, o, DEFAULT_MAX_EDGES)
}

pub fn build_sum_poly_limited(
    g: &Graph,
    o: &Orientation,
    limit: usize,
) -> Result<SparsePolynomial, CnError> {
    let edges = guard(g, limit)?;
    let m = edges.len();
    let mut q = SparsePolynomial::one(m);
    for row in sum_matrix(g, o) {
        let mut factor = SparsePolynomial::zero(m);
        for (j, c) in row.into_iter().enumerate() {
            let mut t = vec![0; m];
            t[j] = 1;
            factor.add_term(t, c);
        }
        q = q.mul(&factor);
        if q.is_zero() {
            break;
        }
    }
    Ok(q)
}

pub fn build_product_poly(g: &Graph, o: &Orientation) -> Result<SparsePolynomial, CnError> {
    build_product_poly_limited(g, o, DEFAULT_MAX_EDGES)
}

pub fn build_product_poly_limited(
    g: &Graph,
    o: &Orientation,
    limit: usize,
) -> Result<SparsePolynomial, CnError> {
    let edges = guard(g, limit)?;
    let m = edges.len();
    let star = |v: Vertex| {
        let mut t = vec![0; m];
        for i in incident_indices(&edges, v) {
            t[i] = 1;
        }
        t
    };
    let mut p = SparsePolynomial::one(m);
    for &(u, v) in &o.arcs {
        let factor = SparsePolynomial::from_terms(
            m,
            [(star(u), BigInt::one()), (star(v), -BigInt::one())],
        );
        p = p.mul(&factor);
        if p.is_zero() {
            break;
        }
    }
    Ok(p)
}

pub fn coefficient(p: &SparsePolynomial, t: &[u32]) -> BigInt {
    p.coefficient(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub mode: Mode,
    pub exponents: Vec<u32>,
    pub coefficient: BigInt,
    /// `1 + max t_i`: lists of this size (zero allowed) always admit a
    /// proper labelling.
    pub bound: u32,
    /// The monomial has the maximum total degree of the polynomial.
    pub max_degree: bool,
}

impl Certificate {
    /// Bound on the zero-free parameter. Every monomial of `P` is divisible
    /// by `x_1 ... x_m`, so for products zero-free lists of size `max t_i`
    /// already suffice.
    pub fn zero_free_bound(&self) -> u32 {
        match self.mode {
            Mode::Sum => self.bound,
            Mode::Product => self.bound.saturating_sub(1),
        }
    }
}

/// Lexicographically smallest maximum-degree monomial with nonzero
/// coefficient whose exponents are all below `k`.
pub fn certify(g: &Graph, mode: Mode, k: u32) -> Result<Option<Certificate>, CnError> {
    certify_limited(g, mode, k, DEFAULT_MAX_EDGES)
}

pub fn certify_limited(
    g: &Graph,
    mode: Mode,
    k: u32,
    limit: usize,
) -> Result<Option<Certificate>, CnError> {
    let o = Orientation::ascending(g);
    let poly = match mode {
        Mode::Sum => build_sum_poly_limited(g, &o, limit)?,
        Mode::Product => build_product_poly_limited(g, &o, limit)?,
    };
    Ok(certificate_from(&poly, mode, k))
}

pub fn certificate_from(poly: &SparsePolynomial, mode: Mode, k: u32) -> Option<Certificate> {
    let deg = poly.total_degree()?;
    poly.terms()
        .find(|(t, c)| {
            t.iter().sum::<u32>() == deg && t.iter().all(|&e| e < k) && !c.is_zero()
        })
        .map(|(t, c)| Certificate {
            mode,
            exponents: t.to_vec(),
            coefficient: c.clone(),
            bound: 1 + t.iter().copied().max().unwrap_or(0),
            max_degree: true,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn p2_polynomials() {
        let g = generators::path(2);
        let o = Orientation::ascending(&g);
        let q = build_sum_poly(&g, &o).unwrap();
        assert_eq!(q, SparsePolynomial::monomial(vec![1, 1], BigInt::from(-1)));
        let p = build_product_poly(&g, &o).unwrap();
        let expected = SparsePolynomial::from_terms(
            2,
            [
                (vec![2, 1], BigInt::from(1)),
                (vec![1, 1], BigInt::from(-1)),
                (vec![2, 2], BigInt::from(-1)),
                (vec![1, 2], BigInt::from(1)),
            ],
        );
        assert_eq!(p, expected);
        assert_eq!(coefficient(&p, &[2, 2]), BigInt::from(-1));
        assert_eq!(coefficient(&q, &[1, 1]), BigInt::from(-1));
        assert_eq!(coefficient(&q, &[3, 3]), BigInt::zero());
        let flipped = build_sum_poly(&g, &o.flipped(0)).unwrap();
        assert_eq!(coefficient(&flipped, &[1, 1]), BigInt::from(1));
    }

    #[test]
    fn k2_polynomials_vanish() {
        let g = generators::path(1);
        let o = Orientation::ascending(&g);
        assert!(build_sum_poly(&g, &o).unwrap().is_zero());
        assert!(build_product_poly(&g, &o).unwrap().is_zero());
        assert_eq!(certify(&g, Mode::Product, 10).unwrap(), None);
    }

    #[test]
    fn triangle_permanent_and_exponents() {
        let g = generators::cycle(3);
        let o = Orientation::ascending(&g);
        let q = build_sum_poly(&g, &o).unwrap();
        assert_eq!(q.coefficient(&[1, 1, 1]), permanent(&sum_matrix(&g, &o)));
        let p = build_product_poly(&g, &o).unwrap();
        assert!(p.max_exponent() <= 3);
    }

    #[test]
    fn p2_certificates() {
        let g = generators::path(2);
        let c = certify(&g, Mode::Product, 3).unwrap().unwrap();
        assert_eq!(c.exponents, vec![2, 2]);
        assert_eq!(c.coefficient, BigInt::from(-1));
        assert_eq!(c.bound, 3);
        assert_eq!(c.zero_free_bound(), 2);
        let s = certify(&g, Mode::Sum, 2).unwrap().unwrap();
        assert_eq!(s.exponents, vec![1, 1]);
        assert_eq!(certify(&g, Mode::Sum, 1).unwrap(), None);
        assert_eq!(certify(&g, Mode::Product, 2).unwrap(), None);
    }

    #[test]
    fn guard_refuses_large_graphs() {
        let g = generators::path(17);
        assert!(matches!(
            certify(&g, Mode::Product, 4),
            Err(CnError::TooLarge { edges: 17, .. })
        ));
    }
}
