//! Instance corpora: every small graph up to isomorphism, and seeded random
//! connected graphs.

use std::collections::HashSet;

use indexbound_core::{Graph, Perturbation, PerturbationKind};
use rand::Rng;
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

/// Largest order handled by [`graphs_up_to_iso`].
pub const EXHAUSTIVE_MAX: usize = 8;

/// Edge probabilities cycled over random trials.
pub const EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.8];

/// A host graph with a perturbation valid for it.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub graph: Graph,
    pub perturbation: Perturbation,
}

/// Stable vertex colouring by iterated neighbourhood refinement, starting
/// from degrees. Colours are ranks of sorted signatures, hence invariant
/// under relabelling.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colour: Vec<usize> = g.degrees();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).map(|w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> =
            signatures.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = colour.iter().collect::<HashSet<_>>().len();
        colour = next;
        if distinct.len() == before {
            return colour;
        }
    }
}

fn code(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = (c << 1) | g.has_edge(order[i], order[j]) as u64;
        }
    }
    c
}

fn permute_classes(g: &Graph, classes: &mut [Vec<usize>], k: usize, best: &mut u64) {
    if k == classes.len() {
        let order: Vec<usize> = classes.iter().flatten().copied().collect();
        *best = (*best).max(code(g, &order));
        return;
    }
    // Heap's algorithm over class k
    let len = classes[k].len();
    let mut c = vec![0usize; len];
    permute_classes(g, classes, k + 1, best);
    let mut i = 0;
    while i < len {
        if c[i] < i {
            if i % 2 == 0 {
                classes[k].swap(0, i);
            } else {
                classes[k].swap(c[i], i);
            }
            permute_classes(g, classes, k + 1, best);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Canonical code: the largest upper-triangle bit string over orderings
/// that list colour classes in colour order.
pub fn canonical_code(g: &Graph) -> u64 {
    let colour = refine(g);
    let classes_count = colour.iter().max().map_or(0, |m| m + 1);
    let mut classes = vec![Vec::new(); classes_count];
    for (v, &c) in colour.iter().enumerate() {
        classes[c].push(v);
    }
    let mut best = 0;
    permute_classes(g, &mut classes, 0, &mut best);
    best
}

/// All graphs of order `n` up to isomorphism (`n ≤ EXHAUSTIVE_MAX`), built by
/// adding a vertex with every neighbourhood to the graphs of order `n − 1`.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= EXHAUSTIVE_MAX, "exhaustive enumeration is limited to order {EXHAUSTIVE_MAX}");
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for h in &level {
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges: Vec<(usize, usize)> = h.edges().collect();
                edges.extend((0..k - 1).filter(|i| mask >> i & 1 == 1).map(|i| (i, k - 1)));
                let g = Graph::from_edge_list(k, edges).unwrap();
                if seen.insert(canonical_code(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n).into_iter().filter(Graph::is_connected).collect()
}

/// Every instance of `kind` whose relevant graph has order at most `n_max`:
///
/// * vertex: each connected final graph of order ≥ 2 with each choice of
///   the joined vertex `u`, the host being the final graph minus `u`'s edges;
/// * edge: each connected host with each nonadjacent pair;
/// * pendant: each connected host of order ≥ 2 with each vertex.
pub fn exhaustive_instances(kind: PerturbationKind, n_max: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for g in connected_graphs_up_to_iso(n) {
            match kind {
                PerturbationKind::VertexConnection => {
                    for u in 0..n {
                        let targets: Vec<usize> = g.neighbors(u).collect();
                        let host = Graph::from_edge_list(
                            n,
                            g.edges().filter(|&(i, j)| i != u && j != u),
                        )
                        .unwrap();
                        out.push(Instance {
                            graph: host,
                            perturbation: Perturbation::VertexConnection { apex: u, targets },
                        });
                    }
                }
                PerturbationKind::EdgeAddition => {
                    for u in 0..n {
                        for v in u + 1..n {
                            if !g.has_edge(u, v) {
                                out.push(Instance {
                                    graph: g.clone(),
                                    perturbation: Perturbation::EdgeAddition { u, v },
                                });
                            }
                        }
                    }
                }
                PerturbationKind::PendantEdge => {
                    for u in 0..n {
                        out.push(Instance {
                            graph: g.clone(),
                            perturbation: Perturbation::PendantEdge { u },
                        });
                    }
                }
            }
        }
    }
    out
}

/// Generator for one random trial, independent of every other trial.
pub fn trial_rng(seed: u64, kind: PerturbationKind, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = PerturbationKind::ALL.iter().position(|&x| x == kind).unwrap() as u64;
    rng.set_stream((k << 32) | trial);
    rng
}

/// Erdős–Rényi `G(n, p)` conditioned on connectivity by rejection.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edge_list(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Random instance for trial `trial`: final order uniform in `3..=n_max`,
/// edge probability `EDGE_PROBABILITIES[trial % 3]`.
///
/// * vertex: host `K1 ∪ G` with `G` random connected, apex 0 joined to a
///   random nonempty subset of `G`;
/// * edge: random connected non-complete host, random nonadjacent pair;
/// * pendant: random connected host, random vertex.
pub fn random_instance(seed: u64, kind: PerturbationKind, trial: u64, n_max: usize) -> Instance {
    assert!(n_max >= 3, "random instances need n_max >= 3");
    let mut rng = trial_rng(seed, kind, trial);
    let p = EDGE_PROBABILITIES[(trial % 3) as usize];
    match kind {
        PerturbationKind::VertexConnection => {
            let n = rng.random_range(3..=n_max);
            let g = random_connected_graph(&mut rng, n - 1, p);
            let graph = Graph::empty(1).disjoint_union(&g);
            let mut vertices: Vec<usize> = (1..n).collect();
            vertices.shuffle(&mut rng);
            let g_count = rng.random_range(1..n);
            let mut targets = vertices[..g_count].to_vec();
            targets.sort_unstable();
            Instance { graph, perturbation: Perturbation::VertexConnection { apex: 0, targets } }
        }
        PerturbationKind::EdgeAddition => loop {
            let n = rng.random_range(3..=n_max);
            let graph = random_connected_graph(&mut rng, n, p);
            let missing: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !graph.has_edge(u, v))
                .collect();
            if let Some(&(u, v)) = missing.get(rng.random_range(0..missing.len().max(1))) {
                return Instance { graph, perturbation: Perturbation::EdgeAddition { u, v } };
            }
        },
        PerturbationKind::PendantEdge => {
            let n = rng.random_range(2..n_max);
            let graph = random_connected_graph(&mut rng, n, p);
            let u = rng.random_range(0..n);
            Instance { graph, perturbation: Perturbation::PendantEdge { u } }
        }
    }
}
