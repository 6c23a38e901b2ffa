//! Small simple graphs on at most 64 vertices with bitset adjacency, plus the
//! structural predicates used throughout the crate: degree-four subgraphs,
//! clusters, the "smaller" ordering, vertex identification.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> VertexSet {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    pub const fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest vertex in the set.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph on vertices `0..n`, `n <= 64`.
///
/// Graphs are values: every operation that changes structure returns a new
/// graph. Adjacency is symmetric and loop-free by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: alloc::vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows. Rows must be symmetric and
    /// loop-free; bits at or above `adj.len()` are rejected.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mask = VertexSet::full(n).0;
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let v = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::Loop(u));
            }
            for v in VertexSet(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::MissingEdge(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if !s.is_subset(self.vertices()) {
            let v = (s - self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v]).with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !VertexSet::full(u + 1).0).iter().map(move |v| (u, v))
        })
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s.0).count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    /// Vertices of `r` with a neighbor outside `r`.
    pub fn boundary(&self, r: VertexSet) -> VertexSet {
        let outside = self.vertices() - r;
        r.iter().filter(|&v| !self.neighbors(v).is_disjoint(outside)).collect()
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    /// `G[r]` together with the map from new vertex index to original vertex.
    pub fn induced_subgraph(&self, r: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if r.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_set(r)?;
        let map = r.to_vec();
        Ok((self.induced_unchecked(&map), map))
    }

    pub(crate) fn induced_unchecked(&self, map: &[usize]) -> Graph {
        let mut adj = alloc::vec![0u64; map.len()];
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph { n: map.len(), adj }
    }

    /// Deletes the vertices of `s`; returns the map from new index to original.
    pub fn remove_vertices(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map = (self.vertices() - s).to_vec();
        (self.induced_unchecked(&map), map)
    }

    /// Merges the independent set `s` into a single vertex placed at the
    /// position of its lowest member. Returns the map from original vertex to
    /// new vertex.
    pub fn identify_vertices(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let keep = s.first().ok_or(Error::EmptyVertexSet)?;
        self.check_set(s)?;
        for u in s {
            if let Some(v) = (self.neighbors(u) & s).first() {
                return Err(Error::IdentifyingAdjacent(u.min(v), u.max(v)));
            }
        }
        let mut map = alloc::vec![0usize; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if s.contains(v) && v != keep {
                continue;
            }
            map[v] = next;
            next += 1;
        }
        for v in s {
            map[v] = map[keep];
        }
        let mut g = Graph { n: next, adj: alloc::vec![0; next] };
        for (u, v) in self.edges() {
            let (a, b) = (map[u], map[v]);
            debug_assert_ne!(a, b);
            g.link(a, b);
        }
        Ok((g, map))
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// lowest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next | self.neighbors(v);
                }
                next = next & (within - comp);
                comp = comp | next;
                frontier = next;
            }
            left = left - comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// True if no set of at most two vertices disconnects the graph and the
    /// graph has more than three vertices.
    pub fn is_3_connected(&self) -> bool {
        if self.n < 4 || !self.is_connected() {
            return false;
        }
        let all = self.vertices();
        for x in 0..self.n {
            for y in x..self.n {
                let rest = all.without(x).without(y);
                if self.components_within(rest).len() > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Vertex sets inducing a supergraph of `K5 - e`, i.e. five vertices
    /// with at most one non-adjacent pair.
    pub fn k5_minus_e_sets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let n = self.n;
        let mut stack: Vec<(VertexSet, usize, usize)> = alloc::vec![(VertexSet::EMPTY, 0, 0)];
        while let Some((set, next, missing)) = stack.pop() {
            if set.len() == 5 {
                out.push(set);
                continue;
            }
            for v in (next..n).rev() {
                let miss = (set - self.neighbors(v)).len();
                if missing + miss <= 1 {
                    stack.push((set.with(v), v + 1, missing + miss));
                }
            }
        }
        out.sort();
        out
    }

    /// Components of `D4(G)`, the subgraph induced by degree-four vertices.
    pub fn d4_components(&self) -> D4Components {
        let deg4: VertexSet = (0..self.n).filter(|&v| self.degree(v) == 4).collect();
        let components = self.components_within(deg4);
        let singles = components.iter().filter(|c| c.len() == 1).count();
        let pairs = components.iter().filter(|c| c.len() == 2).count();
        D4Components { components, singles, pairs }
    }

    /// Partition of the degree-four vertices into clusters: maximal sets with
    /// equal closed neighborhoods. Ordered by lowest member.
    pub fn clusters(&self) -> Vec<Cluster> {
        let mut out: Vec<Cluster> = Vec::new();
        for v in 0..self.n {
            if self.degree(v) != 4 {
                continue;
            }
            let closed = self.closed_neighborhood(v);
            match out.iter_mut().find(|c| c.closed_neighborhood == closed) {
                Some(c) => c.vertices.insert(v),
                None => out.push(Cluster { vertices: VertexSet::singleton(v), closed_neighborhood: closed }),
            }
        }
        out
    }

    /// Cluster sizes sorted in decreasing order.
    pub fn cluster_profile(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.clusters().iter().map(|c| c.vertices.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// `G` with every vertex of `self` adjacent to every vertex of `other`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::new(n)?;
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(self.n + u, self.n + v);
        }
        for u in 0..self.n {
            for v in 0..other.n {
                g.link(u, self.n + v);
            }
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::new(n)?;
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(self.n + u, self.n + v);
        }
        Ok(g)
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: alloc::vec![0; self.n] };
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        g
    }
}

/// Components of `D4(G)` together with the counts of size-one (`singles`) and
/// size-two (`pairs`) components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D4Components {
    pub components: Vec<VertexSet>,
    pub singles: usize,
    pub pairs: usize,
}

impl D4Components {
    pub fn largest(&self) -> usize {
        self.components.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    /// The component containing `v`, if `v` has degree four.
    pub fn component_of(&self, v: usize) -> Option<VertexSet> {
        self.components.iter().copied().find(|c| c.contains(v))
    }
}

/// A maximal set of degree-four vertices sharing one closed neighborhood.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub vertices: VertexSet,
    pub closed_neighborhood: VertexSet,
}

/// Outcome of [`compare_smaller`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smaller {
    HSmaller,
    GSmaller,
    EqualRank,
}

/// Decides which of `g` and `h` is smaller: fewer vertices first, then more
/// edges, then the cluster-size sequence (sorted decreasing) that precedes
/// lexicographically.
///
/// Sequences of different length are compared after padding the shorter
/// one with zeros. Since every cluster has size at least one this agrees
/// with the usual prefix-first lexicographic order.
pub fn compare_smaller(g: &Graph, h: &Graph) -> Smaller {
    let ord = g
        .n
        .cmp(&h.n)
        .then_with(|| h.edge_count().cmp(&g.edge_count()))
        .then_with(|| compare_padded(&g.cluster_profile(), &h.cluster_profile()));
    match ord {
        Ordering::Greater => Smaller::HSmaller,
        Ordering::Less => Smaller::GSmaller,
        Ordering::Equal => Smaller::EqualRank,
    }
}

fn compare_padded(a: &[usize], b: &[usize]) -> Ordering {
    let len = a.len().max(b.len());
    for i in 0..len {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn induced_subgraph_of_k5() {
        let k5 = families::complete(5);
        let (k4, map) = k5.induced_subgraph(VertexSet::from_iter([0, 2, 3, 4])).unwrap();
        assert_eq!(k4, families::complete(4));
        assert_eq!(map, [0, 2, 3, 4]);
        let (same, _) = k5.induced_subgraph(k5.vertices()).unwrap();
        assert_eq!(same, k5);
        assert_eq!(k5.induced_subgraph(VertexSet::EMPTY).unwrap_err(), Error::EmptyVertexSet);
    }

    #[test]
    fn induced_cycle_of_join() {
        let g = families::c5_join_k2();
        let (c, _) = g.induced_subgraph(VertexSet::full(5)).unwrap();
        assert_eq!(c.edge_count(), 5);
        assert_eq!(c, families::cycle(5));
    }

    #[test]
    fn identify_opposite_vertices_of_c4() {
        let (p, map) = families::cycle(4).identify_vertices(VertexSet::from_iter([0, 2])).unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.edge_count(), 2);
        assert_eq!(map[0], map[2]);
        assert_eq!(p.degree(map[0]), 2);
    }

    #[test]
    fn identify_ends_of_removed_k5_edge() {
        let g = families::complete(5).without_edge(1, 3).unwrap();
        let (k4, _) = g.identify_vertices(VertexSet::from_iter([1, 3])).unwrap();
        assert_eq!(k4, families::complete(4));
    }

    #[test]
    fn identify_adjacent_is_an_error() {
        let err = families::complete(5).identify_vertices(VertexSet::from_iter([0, 1])).unwrap_err();
        assert_eq!(err, Error::IdentifyingAdjacent(0, 1));
    }

    #[test]
    fn d4_examples() {
        let k5 = families::complete(5).d4_components();
        assert_eq!(k5.components, [VertexSet::full(5)]);
        let j = families::c5_join_k2().d4_components();
        assert_eq!(j.components, [VertexSet::full(5)]);
        assert_eq!((j.singles, j.pairs), (0, 0));
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap().d4_components();
        assert_eq!(star.components, [VertexSet::singleton(0)]);
        assert_eq!(star.singles, 1);
    }

    #[test]
    fn cluster_examples() {
        let k5 = families::complete(5).clusters();
        assert_eq!(k5.len(), 1);
        assert_eq!(k5[0].vertices, VertexSet::full(5));
        let c5 = families::cycle(5);
        assert!(c5.clusters().is_empty(), "C5 has no degree-four vertices");
        let w = families::c5_join_k2();
        // Cycle vertices have distinct closed neighborhoods.
        assert_eq!(w.clusters().len(), 5);
        assert!(w.clusters().iter().all(|c| c.vertices.len() == 1));
    }

    #[test]
    fn smaller_examples() {
        let k5 = families::complete(5);
        let k4 = families::complete(4);
        assert_eq!(compare_smaller(&k5, &k4), Smaller::HSmaller);
        assert_eq!(compare_smaller(&k4, &k5), Smaller::GSmaller);
        let c5 = families::cycle(5);
        let w4 = families::wheel(4);
        assert_eq!(w4.edge_count(), 8);
        assert_eq!(compare_smaller(&c5, &w4), Smaller::HSmaller);
        assert_eq!(compare_smaller(&k5, &k5), Smaller::EqualRank);
    }

    #[test]
    fn padded_comparison_matches_prefix_order() {
        assert_eq!(compare_padded(&[3], &[3, 1]), Ordering::Less);
        assert_eq!(compare_padded(&[2, 2], &[3]), Ordering::Less);
        assert_eq!(compare_padded(&[], &[]), Ordering::Equal);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]).unwrap_err(), Error::Loop(0));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap_err(), Error::DuplicateEdge(0, 1));
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(Graph::new(65).unwrap_err(), Error::TooManyVertices(65));
    }

    #[test]
    fn boundary_and_components() {
        let g = families::cycle(6);
        let r = VertexSet::from_iter([0, 1, 2]);
        assert_eq!(g.boundary(r), VertexSet::from_iter([0, 2]));
        assert_eq!(g.components_within(VertexSet::from_iter([0, 1, 3, 4])).len(), 2);
        assert!(!g.is_3_connected());
        assert!(families::complete(5).is_3_connected());
    }
}
