mod common;

use std::collections::BTreeSet;

use num_traits::Zero;
use pproper::adversary::{plus_minus_one, plus_minus_one_predicate};
use pproper::cn::{build_product_poly, build_sum_poly, certificate_from, permanent, sum_matrix, Orientation};
use pproper::constructive::{label_cycle, label_path};
use pproper::generators;
use pproper::io;
use pproper::label::verify;
use pproper::solver::{count_proper, solve};
use pproper::{check_proper, strip_zero, Edge, Graph, Label, Labelling, ListAssignment, Mode};
use proptest::prelude::*;

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Product), Just(Mode::Sum)]
}

/// Edge lists on vertices `0..7`, deduplicated, at most 8 edges.
fn small_graph() -> impl Strategy<Value = Graph> {
    prop::collection::vec((0usize..7, 0usize..7), 1..=10).prop_filter_map("no edges", |pairs| {
        let set: BTreeSet<Edge> = pairs
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| Edge::new(a, b))
            .take(8)
            .collect();
        (!set.is_empty()).then(|| Graph::from_edges(set.iter().map(|e| (e.u(), e.v()))).unwrap())
    })
}

fn label() -> impl Strategy<Value = Label> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Label::ratio(n, d))
}

fn lists_for(g: &Graph, max_k: usize) -> impl Strategy<Value = ListAssignment> {
    let edges = g.edges();
    prop::collection::vec(prop::collection::btree_set(label(), 1..=max_k), edges.len()).prop_map(
        move |sets| {
            let mut la = ListAssignment::new();
            for (e, s) in edges.iter().zip(sets) {
                la.insert(*e, s);
            }
            la
        },
    )
}

fn instance(max_k: usize) -> impl Strategy<Value = (Graph, ListAssignment)> {
    small_graph().prop_flat_map(move |g| {
        let lists = lists_for(&g, max_k);
        (Just(g), lists)
    })
}

fn labelling_from(g: &Graph, vals: &[Label]) -> Labelling {
    let mut lab = Labelling::new();
    for (e, l) in g.edges().into_iter().zip(vals) {
        lab.set(e, l.clone());
    }
    lab
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_agrees_with_flat_enumeration((g, la) in instance(3), mode in mode()) {
        let flat = common::flat_count(&g, &la, mode);
        let s = solve(&g, &la, mode).unwrap();
        prop_assert_eq!(s.is_found(), flat > 0);
        if let Some(lab) = s.labelling() {
            prop_assert!(verify(&g, &la, lab, mode).unwrap().is_empty());
        }
        prop_assert_eq!(count_proper(&g, &la, mode).unwrap(), flat);
    }

    #[test]
    fn zero_never_helps((g, la) in instance(3)) {
        let stripped = strip_zero(&la);
        prop_assert!(!stripped.contains_zero());
        let with = common::flat_count(&g, &la, Mode::Product);
        let without = if stripped.iter().any(|(_, l)| l.is_empty()) {
            0
        } else {
            common::flat_count(&g, &stripped, Mode::Product)
        };
        prop_assert_eq!(with, without);
    }

    #[test]
    fn permanent_is_the_multilinear_coefficient(g in small_graph(), flips in prop::collection::vec(any::<bool>(), 8)) {
        let mut o = Orientation::ascending(&g);
        for (i, f) in flips.iter().enumerate().take(g.edge_count()) {
            if *f {
                o = o.flipped(i);
            }
        }
        let q = build_sum_poly(&g, &o).unwrap();
        let m = g.edge_count();
        prop_assert_eq!(q.coefficient(&vec![1; m]), permanent(&sum_matrix(&g, &o)));
        for (t, _) in q.terms() {
            prop_assert_eq!(t.iter().sum::<u32>() as usize, m);
        }
    }

    #[test]
    fn product_polynomial_shape(g in small_graph(), flip in 0usize..8) {
        let m = g.edge_count();
        let o = Orientation::ascending(&g).flipped(flip % m);
        let p = build_product_poly(&g, &o).unwrap();
        let delta = g.max_degree() as u32;
        prop_assert!(p.max_exponent() < 2 * delta);
        for (t, _) in p.terms() {
            prop_assert!(t.iter().all(|&e| e >= 1));
        }
        // reversing one arc negates one factor
        let q = build_product_poly(&g, &Orientation::ascending(&g)).unwrap();
        prop_assert_eq!(p, q.neg());
        if g.is_nice() {
            let c = certificate_from(&q, Mode::Product, 2 * delta);
            prop_assert!(c.is_some());
            let c = c.unwrap();
            prop_assert!(!c.coefficient.is_zero());
            prop_assert_eq!(c.zero_free_bound(), c.bound - 1);
        }
    }

    #[test]
    fn plus_minus_one_matches_predicate(g in small_graph()) {
        let w = plus_minus_one(&g).unwrap();
        prop_assert_eq!(w.witness().is_some(), plus_minus_one_predicate(&g));
    }

    #[test]
    fn io_round_trips((g, la) in instance(4), pick in prop::collection::vec(any::<prop::sample::Index>(), 8)) {
        prop_assert_eq!(io::parse_lists(&io::lists_to_value(&la).to_string()).unwrap(), la.clone());
        let vals: Vec<Label> = g
            .edges()
            .iter()
            .zip(&pick)
            .map(|(e, i)| i.get(la.get(*e).unwrap()).clone())
            .collect();
        let lab = labelling_from(&g, &vals);
        prop_assert_eq!(io::parse_labelling(&io::labelling_to_value(&lab).to_string()).unwrap(), lab);
        prop_assert_eq!(io::graph_from_value(&io::graph_to_value(&g)).unwrap(), g.clone());
        prop_assert_eq!(pproper::parse_edge_list(&pproper::graph::to_edge_list(&g)).unwrap(), g.clone());
        if let Some(c) = certificate_from(&build_product_poly(&g, &Orientation::ascending(&g)).unwrap(), Mode::Product, 64) {
            prop_assert_eq!(io::certificate_from_value(&io::certificate_to_value(&c)).unwrap(), c);
        }
    }

    /// On a cycle, the two ends of an edge conflict exactly when the edges
    /// at distance two around it carry equal labels.
    #[test]
    fn cycle_distance_two_rule(n in 3usize..=12, raw in prop::collection::vec(label(), 12)) {
        let raw: Vec<Label> = raw.into_iter().map(|l| if l.is_zero() { Label::int(5) } else { l }).collect();
        let g = generators::cycle(n);
        let order = g.cycle_order().unwrap();
        let ring: Vec<Edge> = (0..n).map(|i| Edge::new(order[i], order[(i + 1) % n])).collect();
        let mut lab = Labelling::new();
        for (e, l) in ring.iter().zip(&raw) {
            lab.set(*e, l.clone());
        }
        let conflicts: BTreeSet<Edge> = check_proper(&g, &lab, Mode::Product).into_iter().collect();
        let rule: BTreeSet<Edge> = (0..n)
            .filter(|&i| raw[(i + n - 1) % n] == raw[(i + 1) % n])
            .map(|i| ring[i])
            .collect();
        prop_assert_eq!(conflicts, rule);
    }

    #[test]
    fn path_and_cycle_labellers_verify(n in 2usize..=16, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = generators::path(n);
        let k = if n % 2 == 0 || n == 3 { 2 } else { 3 };
        let la = generators::random_rational_lists(&g, k, &mut rng);
        prop_assert!(verify(&g, &la, &label_path(&g, &la).unwrap(), Mode::Product).unwrap().is_empty());
        if n >= 3 {
            let g = generators::cycle(n);
            let k = if n % 4 == 0 { 2 } else { 3 };
            let la = generators::random_rational_lists(&g, k, &mut rng);
            prop_assert!(verify(&g, &la, &label_cycle(&g, &la).unwrap(), Mode::Product).unwrap().is_empty());
        }
    }
}

#[test]
fn flat_oracle_frozen_counts() {
    // colours (l1, l1*l2, l2): 1 on the first edge always clashes at the
    // middle vertex, leaving (2, 2) and (2, 3)
    let g = generators::path(2);
    let mut la = ListAssignment::new();
    la.insert(Edge::new(0, 1), [Label::int(1), Label::int(2)]);
    la.insert(Edge::new(1, 2), [Label::int(2), Label::int(3)]);
    assert_eq!(common::flat_count(&g, &la, Mode::Product), 2);
    assert_eq!(count_proper(&g, &la, Mode::Product).unwrap(), 2);
}
