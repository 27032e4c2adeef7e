//! Simple undirected graphs, the three local perturbations, and the
//! structural recognizers for the extremal (equality) configurations.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::SymMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { vertex: usize },
    VertexOutOfRange { vertex: usize, order: usize },
    EqualVertices { vertex: usize },
    NotIsolated { vertex: usize },
    EdgeExists { u: usize, v: usize },
    NoTargets,
    DuplicateTarget { vertex: usize },
    TargetIsApex { vertex: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Self::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for a graph on {order} vertices")
            }
            Self::EqualVertices { vertex } => write!(f, "vertex {vertex} given twice"),
            Self::NotIsolated { vertex } => write!(f, "vertex {vertex} is not isolated"),
            Self::EdgeExists { u, v } => write!(f, "edge {u}-{v} already present"),
            Self::NoTargets => f.write_str("vertex connection needs at least one target"),
            Self::DuplicateTarget { vertex } => write!(f, "target {vertex} listed twice"),
            Self::TargetIsApex { vertex } => {
                write!(f, "vertex {vertex} cannot be connected to itself")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Simple undirected graph on vertices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Self {
        Self { adj: vec![BTreeSet::new(); order] }
    }

    /// Builds a graph from vertex pairs. Repeated pairs (in either
    /// orientation) collapse to one edge; self-loops are rejected.
    pub fn from_edge_list<I>(order: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(order);
        for (i, j) in pairs {
            g.check_vertex(i)?;
            g.check_vertex(j)?;
            if i == j {
                return Err(GraphError::SelfLoop { vertex: i });
            }
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Self {
        let pairs = (0..order).flat_map(|i| (i + 1..order).map(move |j| (i, j)));
        Self::from_edge_list(order, pairs).expect("complete graph pairs are valid")
    }

    pub fn path(order: usize) -> Self {
        Self::from_edge_list(order, (1..order).map(|i| (i - 1, i))).expect("path pairs are valid")
    }

    /// Cycle on `order` vertices. For `order < 3` this degenerates to a path.
    pub fn cycle(order: usize) -> Self {
        let mut g = Self::path(order);
        if order >= 3 {
            g.adj[0].insert(order - 1);
            g.adj[order - 1].insert(0);
        }
        g
    }

    /// A `degree`-regular circulant on `order` vertices, or `None` when no
    /// regular graph with these parameters exists (`degree >= order`, or
    /// `order * degree` odd).
    pub fn circulant_regular(order: usize, degree: usize) -> Option<Self> {
        if degree >= order.max(1) || (order * degree) % 2 == 1 {
            return None;
        }
        let mut g = Self::empty(order);
        for i in 0..order {
            for s in 1..=degree / 2 {
                let j = (i + s) % order;
                g.adj[i].insert(j);
                g.adj[j].insert(i);
            }
            if degree % 2 == 1 {
                let j = (i + order / 2) % order;
                g.adj[i].insert(j);
                g.adj[j].insert(i);
            }
        }
        Some(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| nb.range(i + 1..).map(move |&j| (i, j)))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|nb| nb.contains(&v))
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The common degree when every vertex has the same degree.
    pub fn is_regular(&self) -> Option<usize> {
        let mut degrees = self.adj.iter().map(BTreeSet::len);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nb| nb.iter().map(|&j| j + shift).collect::<BTreeSet<_>>()),
        );
        Graph { adj }
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        let shift = self.order();
        for i in 0..shift {
            for j in shift..g.order() {
                g.adj[i].insert(j);
                g.adj[j].insert(i);
            }
        }
        g
    }

    /// Subgraph induced by removing `removed`, vertices relabeled in order.
    pub fn remove_vertices(&self, removed: &[usize]) -> Graph {
        let keep: Vec<usize> = (0..self.order()).filter(|v| !removed.contains(v)).collect();
        let mut index = vec![usize::MAX; self.order()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    /// Dense adjacency matrix.
    pub fn adjacency(&self) -> SymMatrix {
        self.padded_adjacency(self.order())
    }

    /// Adjacency matrix zero-padded to `dim >= order` rows and columns.
    pub fn padded_adjacency(&self, dim: usize) -> SymMatrix {
        assert!(dim >= self.order(), "padding must not shrink the matrix");
        let mut m = SymMatrix::zeros(dim);
        for (i, j) in self.edges() {
            m.set(i, j, 1.0);
        }
        m
    }

    /// True iff `apex` is adjacent to all other vertices and the graph
    /// left after deleting it is regular, i.e. the graph is `{apex} + G`
    /// with `G` regular.
    pub fn is_cone_over_regular(&self, apex: usize) -> Result<bool, GraphError> {
        self.check_vertex(apex)?;
        if self.adj[apex].len() != self.order() - 1 {
            return Ok(false);
        }
        let rest = self.remove_vertices(&[apex]);
        Ok(rest.order() == 0 || rest.is_regular().is_some())
    }

    /// True iff `u` and `v` are nonadjacent, both adjacent to every other
    /// vertex, and the rest is regular: the graph is `({u} ∪ {v}) + G`.
    pub fn is_double_cone_over_regular(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::EqualVertices { vertex: u });
        }
        let n = self.order();
        if self.has_edge(u, v) || self.adj[u].len() != n - 2 || self.adj[v].len() != n - 2 {
            return Ok(false);
        }
        let rest = self.remove_vertices(&[u, v]);
        Ok(rest.order() == 0 || rest.is_regular().is_some())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PerturbationKind {
    VertexConnection,
    EdgeAddition,
    PendantEdge,
}

impl PerturbationKind {
    pub const ALL: [PerturbationKind; 3] =
        [Self::VertexConnection, Self::EdgeAddition, Self::PendantEdge];

    pub fn name(self) -> &'static str {
        match self {
            Self::VertexConnection => "vertex",
            Self::EdgeAddition => "edge",
            Self::PendantEdge => "pendant",
        }
    }
}

impl fmt::Display for PerturbationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A local modification turning an initial graph into a final one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Perturbation {
    /// Join the isolated vertex `apex` to each of `targets`.
    VertexConnection { apex: usize, targets: Vec<usize> },
    /// Add the missing edge `u`-`v`.
    EdgeAddition { u: usize, v: usize },
    /// Attach a new vertex (index `order`) to `u`.
    PendantEdge { u: usize },
}

impl Perturbation {
    pub fn kind(&self) -> PerturbationKind {
        match self {
            Self::VertexConnection { .. } => PerturbationKind::VertexConnection,
            Self::EdgeAddition { .. } => PerturbationKind::EdgeAddition,
            Self::PendantEdge { .. } => PerturbationKind::PendantEdge,
        }
    }

    /// Number of edges the perturbation adds.
    pub fn added_edges(&self) -> usize {
        match self {
            Self::VertexConnection { targets, .. } => targets.len(),
            _ => 1,
        }
    }

    /// Order of the final graph.
    pub fn final_order(&self, g: &Graph) -> usize {
        match self {
            Self::PendantEdge { .. } => g.order() + 1,
            _ => g.order(),
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        match self {
            Self::VertexConnection { apex, targets } => {
                g.check_vertex(*apex)?;
                if !g.adj[*apex].is_empty() {
                    return Err(GraphError::NotIsolated { vertex: *apex });
                }
                if targets.is_empty() {
                    return Err(GraphError::NoTargets);
                }
                let mut seen = BTreeSet::new();
                for &t in targets {
                    g.check_vertex(t)?;
                    if t == *apex {
                        return Err(GraphError::TargetIsApex { vertex: t });
                    }
                    if !seen.insert(t) {
                        return Err(GraphError::DuplicateTarget { vertex: t });
                    }
                }
                Ok(())
            }
            Self::EdgeAddition { u, v } => {
                g.check_vertex(*u)?;
                g.check_vertex(*v)?;
                if u == v {
                    return Err(GraphError::EqualVertices { vertex: *u });
                }
                if g.has_edge(*u, *v) {
                    return Err(GraphError::EdgeExists { u: *u, v: *v });
                }
                Ok(())
            }
            Self::PendantEdge { u } => g.check_vertex(*u),
        }
    }

    /// Pairs that the perturbation adds, in the final graph's labeling.
    pub fn new_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        match self {
            Self::VertexConnection { apex, targets } => {
                targets.iter().map(|&t| (*apex, t)).collect()
            }
            Self::EdgeAddition { u, v } => vec![(*u, *v)],
            Self::PendantEdge { u } => vec![(*u, g.order())],
        }
    }

    /// The final graph.
    pub fn apply(&self, g: &Graph) -> Result<Graph, GraphError> {
        self.validate(g)?;
        let mut out = g.clone();
        if let Self::PendantEdge { .. } = self {
            out.adj.push(BTreeSet::new());
        }
        for (i, j) in self.new_edges(g) {
            out.adj[i].insert(j);
            out.adj[j].insert(i);
        }
        Ok(out)
    }

    /// `A_F - A_I`, sized like `A_F` (the initial adjacency is zero-padded
    /// for a pendant edge).
    pub fn matrix(&self, g: &Graph) -> Result<SymMatrix, GraphError> {
        self.validate(g)?;
        let mut p = SymMatrix::zeros(self.final_order(g));
        for (i, j) in self.new_edges(g) {
            p.set(i, j, 1.0);
        }
        Ok(p)
    }

    /// Adjacency of the initial graph padded to the final order.
    pub fn initial_matrix(&self, g: &Graph) -> Result<SymMatrix, GraphError> {
        self.validate(g)?;
        Ok(g.padded_adjacency(self.final_order(g)))
    }

    /// Whether the pair (initial graph, perturbation) is one of the
    /// extremal configurations for which the matching bound is attained.
    pub fn is_extremal(&self, g: &Graph) -> Result<bool, GraphError> {
        match self {
            Self::VertexConnection { apex, .. } => self.apply(g)?.is_cone_over_regular(*apex),
            Self::EdgeAddition { u, v } => {
                self.validate(g)?;
                g.is_double_cone_over_regular(*u, *v)
            }
            Self::PendantEdge { u } => g.is_cone_over_regular(*u),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::path(3)
    }

    #[test]
    fn edge_list_construction() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g, p3());
        assert_eq!(Graph::from_edge_list(1, []).unwrap().order(), 1);
        assert_eq!(
            Graph::from_edge_list(3, [(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        let dup = Graph::from_edge_list(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn degrees_and_regularity() {
        assert_eq!(p3().degree(1), Ok(2));
        assert_eq!(Graph::empty(1).degree(0), Ok(0));
        assert!(p3().degree(3).is_err());
        let c4 = Graph::cycle(4);
        assert!((0..4).all(|v| c4.degree(v) == Ok(2)));
        assert_eq!(c4.is_regular(), Some(2));
        assert_eq!(p3().is_regular(), None);
        assert_eq!(Graph::empty(5).is_regular(), Some(0));
    }

    #[test]
    fn connectivity() {
        assert!(p3().is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::cycle(4).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn unions_and_joins() {
        let k1 = Graph::empty(1);
        let c4 = Graph::cycle(4);
        assert_eq!(k1.disjoint_union(&c4).degrees(), vec![0, 2, 2, 2, 2]);
        assert_eq!(k1.disjoint_union(&k1), Graph::empty(2));
        let pp = p3().disjoint_union(&p3());
        assert_eq!((pp.order(), pp.edge_count()), (6, 4));

        let cone = k1.join(&c4);
        assert_eq!(cone.degree(0), Ok(4));
        assert_eq!(k1.join(&k1), Graph::complete(2));
        // u - w - v with w last
        let p = Graph::empty(2).join(&k1);
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        assert_eq!(p.degrees(), vec![1, 1, 2]);
    }

    #[test]
    fn circulants() {
        for n in 1..=9 {
            for d in 0..n {
                match Graph::circulant_regular(n, d) {
                    Some(g) => {
                        assert_eq!(g.is_regular(), Some(d), "n={n} d={d}");
                        assert_eq!(g.order(), n);
                    }
                    None => assert!(n * d % 2 == 1),
                }
            }
            assert!(Graph::circulant_regular(n, n).is_none());
        }
    }

    #[test]
    fn applying_perturbations() {
        let host = Graph::empty(1).disjoint_union(&Graph::empty(3));
        let star = Perturbation::VertexConnection { apex: 0, targets: vec![1, 2, 3] }
            .apply(&host)
            .unwrap();
        assert_eq!(star, Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap());

        let c3 = Perturbation::EdgeAddition { u: 0, v: 2 }.apply(&p3()).unwrap();
        assert_eq!(c3, Graph::cycle(3));

        let grown = Perturbation::PendantEdge { u: 0 }.apply(&Graph::complete(2)).unwrap();
        assert_eq!(grown, Graph::from_edge_list(3, [(1, 0), (0, 2)]).unwrap());
        assert!(grown.degree(0) == Ok(2));
    }

    #[test]
    fn invalid_perturbations() {
        let g = p3();
        let bad = [
            (
                Perturbation::VertexConnection { apex: 1, targets: vec![0] },
                GraphError::NotIsolated { vertex: 1 },
            ),
            (Perturbation::EdgeAddition { u: 0, v: 1 }, GraphError::EdgeExists { u: 0, v: 1 }),
            (Perturbation::EdgeAddition { u: 2, v: 2 }, GraphError::EqualVertices { vertex: 2 }),
            (
                Perturbation::PendantEdge { u: 3 },
                GraphError::VertexOutOfRange { vertex: 3, order: 3 },
            ),
        ];
        for (p, err) in bad {
            assert_eq!(p.apply(&g), Err(err.clone()));
            assert_eq!(p.matrix(&g).unwrap_err(), err);
        }
        let iso = Graph::empty(3);
        assert_eq!(
            Perturbation::VertexConnection { apex: 0, targets: vec![] }.validate(&iso),
            Err(GraphError::NoTargets)
        );
        assert_eq!(
            Perturbation::VertexConnection { apex: 0, targets: vec![1, 1] }.validate(&iso),
            Err(GraphError::DuplicateTarget { vertex: 1 })
        );
        assert_eq!(
            Perturbation::VertexConnection { apex: 0, targets: vec![0] }.validate(&iso),
            Err(GraphError::TargetIsApex { vertex: 0 })
        );
    }

    #[test]
    fn perturbation_matrices() {
        let p = Perturbation::EdgeAddition { u: 0, v: 1 }.matrix(&Graph::empty(3)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if (i, j) == (0, 1) || (i, j) == (1, 0) { 1.0 } else { 0.0 };
                assert_eq!(p.get(i, j), expect);
            }
        }

        let host = Graph::empty(1).disjoint_union(&Graph::path(4));
        let p = Perturbation::VertexConnection { apex: 0, targets: vec![2, 4] }
            .matrix(&host)
            .unwrap();
        assert_eq!(p.row(0), &[0.0, 0.0, 1.0, 0.0, 1.0]);
        assert_eq!(p.row(1), &[0.0; 5]);

        let p = Perturbation::PendantEdge { u: 1 }.matrix(&p3()).unwrap();
        assert_eq!(p.dim(), 4);
        let ones: Vec<_> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| p.get(i, j) != 0.0)
            .collect();
        assert_eq!(ones, vec![(1, 3), (3, 1)]);
    }

    #[test]
    fn cone_recognizer() {
        let star = Graph::empty(1).join(&Graph::empty(3));
        assert_eq!(star.is_cone_over_regular(0), Ok(true));
        assert_eq!(Graph::empty(1).join(&Graph::cycle(4)).is_cone_over_regular(0), Ok(true));
        assert_eq!(p3().is_cone_over_regular(0), Ok(false));
        assert_eq!(p3().is_cone_over_regular(1), Ok(true));
        assert_eq!(Graph::empty(1).is_cone_over_regular(0), Ok(true));
        assert!(p3().is_cone_over_regular(5).is_err());
    }

    #[test]
    fn double_cone_recognizer() {
        assert_eq!(p3().is_double_cone_over_regular(0, 2), Ok(true));
        assert_eq!(Graph::cycle(4).is_double_cone_over_regular(0, 2), Ok(true));
        assert_eq!(Graph::cycle(4).is_double_cone_over_regular(0, 1), Ok(false));
        assert_eq!(Graph::path(4).is_double_cone_over_regular(0, 3), Ok(false));
        assert_eq!(
            p3().is_double_cone_over_regular(1, 1),
            Err(GraphError::EqualVertices { vertex: 1 })
        );
    }

    #[test]
    fn extremal_configurations() {
        let host = Graph::empty(1).disjoint_union(&Graph::cycle(4));
        let all = Perturbation::VertexConnection { apex: 0, targets: vec![1, 2, 3, 4] };
        assert_eq!(all.is_extremal(&host), Ok(true));
        let one = Perturbation::VertexConnection { apex: 0, targets: vec![1] };
        assert_eq!(one.is_extremal(&host), Ok(false));
        assert_eq!(Perturbation::EdgeAddition { u: 0, v: 2 }.is_extremal(&p3()), Ok(true));
        assert_eq!(
            Perturbation::EdgeAddition { u: 0, v: 3 }.is_extremal(&Graph::path(4)),
            Ok(false)
        );
        assert_eq!(Perturbation::PendantEdge { u: 0 }.is_extremal(&Graph::complete(2)), Ok(true));
        assert_eq!(Perturbation::PendantEdge { u: 0 }.is_extremal(&p3()), Ok(false));
    }
}
