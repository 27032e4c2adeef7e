use indexbound_core::bounds::{
    bound_edge_addition, bound_pendant_edge, bound_vertex_connection, h_fn, h_inv, k_fn, k_inv, l1,
    l2, l2_inv,
};
use indexbound_core::path::{check_comparison, check_differential_inequality, sample_path};
use indexbound_core::spectral::{PERRON_TOL, full_spectrum, lambda_derivative, perron};
use indexbound_core::{Graph, Perturbation};
use proptest::prelude::*;

/// Connected graph on `n` vertices: a random spanning tree plus random chords.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        (parents, proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)).prop_map(
            move |(parents, chords)| {
                let mut edges: Vec<(usize, usize)> =
                    parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if chords[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edge_list(n, edges).unwrap()
            },
        )
    })
}

/// Real roots of `x³ + a x² + b x + c` by the trigonometric/Cardano method.
fn cubic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    let disc = q * q / 4.0 + p * p * p / 27.0;
    if disc > 0.0 {
        let s = disc.sqrt();
        vec![(-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt() + shift]
    } else {
        let r = 2.0 * (-p / 3.0).sqrt();
        let phi = (3.0 * q / (p * r)).clamp(-1.0, 1.0).acos() / 3.0;
        (0..3)
            .map(|k| r * (phi - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() + shift)
            .collect()
    }
}

#[test]
fn inverse_round_trips_on_grid() {
    for gi in 1..=20 {
        let g = gi as f64;
        for k in 0..=200 {
            let y = -50.0 + k as f64 * 0.5;
            assert!((h_fn(h_inv(y, g).unwrap(), g).unwrap() - y).abs() <= 1e-10, "h y={y} g={g}");
            assert!((k_fn(k_inv(y, g).unwrap(), g).unwrap() - y).abs() <= 1e-10, "k y={y} d={g}");
            let nu = l2_inv(y, g).unwrap();
            assert!((l2(nu, g).unwrap() - y).abs() <= 1e-10, "l2 y={y} d={g}");
        }
    }
}

#[test]
fn cubic_root_uniqueness_against_trigonometric_oracle() {
    for d in 1..=10 {
        let d = d as f64;
        for k in 0..=60 {
            let lambda = 1.0 + k as f64 * 0.25;
            let y = l1(lambda, d).unwrap();
            let roots = cubic_roots(-y, -(d + 1.0), y);
            let threshold = (d + 1.0).sqrt();
            let admissible: Vec<f64> =
                roots.iter().copied().filter(|&r| r >= threshold - 1e-12).collect();
            let above_one: Vec<f64> = roots.iter().copied().filter(|&r| r > 1.0).collect();
            assert_eq!(above_one.len(), 1, "λ={lambda} d={d} roots={roots:?}");
            if lambda >= d.sqrt() {
                assert_eq!(admissible.len(), 1, "λ={lambda} d={d} roots={roots:?}");
            }
            let nu = l2_inv(y, d).unwrap();
            assert!((nu - above_one[0]).abs() <= 1e-9 * nu.max(1.0), "λ={lambda} d={d}");
        }
    }
}

#[test]
fn recognizer_round_trip_over_regular_families() {
    for n in 1..=8 {
        let mut family: Vec<Graph> = (0..n).filter_map(|d| Graph::circulant_regular(n, d)).collect();
        family.push(Graph::complete(n));
        family.push(Graph::empty(n));
        for g in family {
            assert!(g.is_regular().is_some());
            let cone = Graph::empty(1).join(&g);
            assert_eq!(cone.degree(0).unwrap(), n);
            assert!(cone.is_cone_over_regular(0).unwrap());
            let double = Graph::empty(2).join(&g);
            assert!(double.is_double_cone_over_regular(0, 1).unwrap());
        }
    }
    let p4 = Graph::path(4);
    assert!(!Graph::empty(1).join(&p4).is_cone_over_regular(0).unwrap());
}

#[test]
fn strict_growth_and_endpoints_on_small_paths() {
    let cases = [
        (Graph::cycle(5), Perturbation::PendantEdge { u: 1 }),
        (Graph::path(4), Perturbation::EdgeAddition { u: 0, v: 3 }),
        (
            Graph::empty(1).disjoint_union(&Graph::path(3)),
            Perturbation::VertexConnection { apex: 0, targets: vec![1, 3] },
        ),
    ];
    for (g, p) in cases {
        let path = sample_path(&g, &p, 32).unwrap();
        assert!(path.is_strictly_increasing());
        let li = full_spectrum(&p.initial_matrix(&g).unwrap()).unwrap()[0];
        let lf = full_spectrum(&p.apply(&g).unwrap().adjacency()).unwrap()[0];
        assert!((path.lambda_i() - li).abs() <= 1e-10);
        assert!((path.lambda_f() - lf).abs() <= 1e-10);
        let ineq = check_differential_inequality(&path, &path.input).unwrap();
        assert!(ineq.min_slack >= 1e-7, "{ineq:?}");
        let cmp = check_comparison(&path).unwrap();
        assert!(cmp.dominated && cmp.strict);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bounds_increase_in_lambda(lambda in 0.5f64..50.0, step in 0.01f64..5.0, a in 1usize..20, b in 1usize..20) {
        prop_assert!(bound_vertex_connection(lambda + step, a).unwrap() > bound_vertex_connection(lambda, a).unwrap());
        prop_assert!(bound_edge_addition(lambda + step, a, b).unwrap() > bound_edge_addition(lambda, a, b).unwrap());
        prop_assert!(bound_pendant_edge(lambda + step, a).unwrap() > bound_pendant_edge(lambda, a).unwrap());
    }

    #[test]
    fn bounds_increase_in_parameters(lambda in 0.5f64..50.0, a in 1usize..20, b in 1usize..20) {
        prop_assert!(bound_vertex_connection(lambda, a + 1).unwrap() > bound_vertex_connection(lambda, a).unwrap());
        prop_assert!(bound_edge_addition(lambda, a + 1, b).unwrap() > bound_edge_addition(lambda, a, b).unwrap());
        prop_assert!(bound_pendant_edge(lambda, a + 1).unwrap() > bound_pendant_edge(lambda, a).unwrap());
    }

    #[test]
    fn edge_bound_symmetric(lambda in 0.1f64..50.0, a in 0usize..20, b in 0usize..20) {
        prop_assert_eq!(bound_edge_addition(lambda, a, b).unwrap(), bound_edge_addition(lambda, b, a).unwrap());
    }

    #[test]
    fn perron_matches_jacobi(g in connected_graph(12)) {
        let a = g.adjacency();
        let pair = perron(&a, PERRON_TOL).unwrap();
        let spectrum = full_spectrum(&a).unwrap();
        prop_assert!((pair.lambda - spectrum[0]).abs() <= 1e-9);
        prop_assert!(pair.min_entry() > 0.0);
        prop_assert!(spectrum.iter().sum::<f64>().abs() <= 1e-9);
    }

    #[test]
    fn perturbation_matrix_is_adjacency_difference(g in connected_graph(9), pick in any::<(usize, usize)>()) {
        let n = g.order();
        let u = pick.0 % n;
        let candidates: Vec<Perturbation> = (0..n)
            .filter(|&v| v != u && !g.has_edge(u, v))
            .map(|v| Perturbation::EdgeAddition { u, v })
            .chain(std::iter::once(Perturbation::PendantEdge { u }))
            .collect();
        let p = &candidates[pick.1 % candidates.len()];
        let gf = p.apply(&g).unwrap();
        prop_assert_eq!(gf.edge_count(), g.edge_count() + p.added_edges());
        let diff = p.initial_matrix(&g).unwrap().add_scaled(&p.matrix(&g).unwrap(), 1.0);
        prop_assert_eq!(diff, gf.adjacency());
    }

    #[test]
    fn derivative_identity_on_random_hosts(g in connected_graph(10), u in any::<usize>()) {
        let p = Perturbation::PendantEdge { u: u % g.order() };
        let path = sample_path(&g, &p, 21).unwrap();
        prop_assert!(path.max_derivative_mismatch() <= 1e-6);
        let pm = p.matrix(&g).unwrap();
        for s in &path.samples[1..] {
            prop_assert_eq!(s.derivative_rhs.unwrap(), lambda_derivative(&pm, &s.x).unwrap());
        }
    }
}
