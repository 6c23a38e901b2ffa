//! Exact colorability, 5-criticality and the coloring-defined notions built
//! on them: identifiable pairs, collapsible sets, critical complements.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_COLORS: usize = 8;
const NONE: u8 = u8::MAX;

/// A vertex coloring with colors `0..k`. Reported externally as `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u8>,
}

impl Coloring {
    pub fn new(colors: Vec<u8>) -> Coloring {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Vertices receiving color `c`.
    pub fn class(&self, c: u8) -> VertexSet {
        self.colors.iter().enumerate().filter(|&(_, &x)| x == c).map(|(v, _)| v).collect()
    }

    /// Checks length, range `0..k` and properness against `g`.
    pub fn check(&self, g: &Graph, k: usize) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::ColoringLength { expected: g.n(), got: self.colors.len() });
        }
        if self.colors.iter().any(|&c| c as usize >= k) {
            return Err(Error::OutOfRange("color"));
        }
        match g.edges().find(|&(u, v)| self.colors[u] == self.colors[v]) {
            Some((u, v)) => Err(Error::ImproperColoring(u, v)),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Renames colors in order of first appearance by vertex index.
    pub fn normalized(&self) -> Coloring {
        let mut rename = [NONE; 256];
        let mut next = 0u8;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if rename[c as usize] == NONE {
                    rename[c as usize] = next;
                    next += 1;
                }
                rename[c as usize]
            })
            .collect();
        Coloring { colors }
    }
}

/// A proper `k`-coloring of `g`, if one exists.
///
/// Backtracking per connected component. A greedy clique is precolored
/// `0, 1, ..`; afterwards the vertex with the most distinct neighbor colors
/// is branched on (ties: more uncolored neighbors, then lowest index), and a
/// fresh color is only ever the lowest unused one. Deterministic.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    assert!(k <= MAX_COLORS, "at most {MAX_COLORS} colors supported");
    let n = g.n();
    if k == 0 {
        return if n == 0 { Some(Coloring { colors: Vec::new() }) } else { None };
    }
    let mut solver = Solver { adj: g.adjacency(), k, classes: [0; MAX_COLORS], colors: alloc::vec![NONE; n] };
    for comp in g.components() {
        if !solver.component(comp) {
            return None;
        }
    }
    let coloring = Coloring { colors: solver.colors };
    debug_assert!(coloring.is_proper(g));
    Some(coloring)
}

pub fn is_4_colorable(g: &Graph) -> bool {
    is_k_colorable(g, 4).is_some()
}

struct Solver<'a> {
    adj: &'a [u64],
    k: usize,
    classes: [u64; MAX_COLORS],
    colors: Vec<u8>,
}

impl Solver<'_> {
    fn component(&mut self, comp: VertexSet) -> bool {
        let clique = self.greedy_clique(comp);
        if clique.len() > self.k {
            return false;
        }
        for (c, &v) in clique.iter().enumerate() {
            self.assign(v, c as u8);
        }
        let rest = clique.iter().fold(comp, |s, &v| s.without(v));
        self.search(rest, clique.len())
    }

    fn greedy_clique(&self, comp: VertexSet) -> Vec<usize> {
        let deg = |v: usize, within: VertexSet| (self.adj[v] & within.bits()).count_ones();
        let Some(start) = comp.iter().max_by_key(|&v| (deg(v, comp), core::cmp::Reverse(v))) else {
            return Vec::new();
        };
        let mut clique = alloc::vec![start];
        let mut cand = VertexSet(self.adj[start]) & comp;
        while let Some(u) = cand.iter().max_by_key(|&u| (deg(u, cand), core::cmp::Reverse(u))) {
            clique.push(u);
            cand = cand & VertexSet(self.adj[u]);
        }
        clique
    }

    fn assign(&mut self, v: usize, c: u8) {
        self.colors[v] = c;
        self.classes[c as usize] |= 1 << v;
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.classes[c as usize] &= !(1 << v);
        self.colors[v] = NONE;
    }

    fn forbidden(&self, v: usize) -> u32 {
        let mut mask = 0u32;
        for c in 0..self.k {
            if self.classes[c] & self.adj[v] != 0 {
                mask |= 1 << c;
            }
        }
        mask
    }

    fn search(&mut self, uncolored: VertexSet, used: usize) -> bool {
        let mut pick = None;
        let mut best = (0u32, 0u32);
        for v in uncolored {
            let key = (self.forbidden(v).count_ones(), (self.adj[v] & uncolored.bits()).count_ones());
            if pick.is_none() || key > best {
                best = key;
                pick = Some(v);
            }
        }
        let Some(v) = pick else { return true };
        let forbidden = self.forbidden(v);
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            self.assign(v, c as u8);
            if self.search(uncolored.without(v), used.max(c + 1)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

/// Up to `limit` proper `k`-colorings of `g`, one per partition into color
/// classes (colors normalized by first appearance), in lexicographic order.
pub fn enumerate_colorings(g: &Graph, k: usize, limit: usize) -> Vec<Coloring> {
    fn go(g: &Graph, k: usize, limit: usize, v: usize, used: u8, colors: &mut Vec<u8>, out: &mut Vec<Coloring>) {
        if out.len() >= limit {
            return;
        }
        if v == g.n() {
            out.push(Coloring { colors: colors.clone() });
            return;
        }
        let top = (used as usize + 1).min(k) as u8;
        for c in 0..top {
            if g.neighbors(v).iter().filter(|&u| u < v).any(|u| colors[u] == c) {
                continue;
            }
            colors.push(c);
            go(g, k, limit, v + 1, used.max(c + 1), colors, out);
            colors.pop();
        }
    }
    let mut out = Vec::new();
    go(g, k, limit, 0, 0, &mut Vec::with_capacity(g.n()), &mut out);
    out
}

/// Whether `g` is 5-critical: not 4-colorable while every proper subgraph is.
///
/// Checked through edge deletions only. When `g` has no isolated vertex,
/// every proper subgraph misses some edge and so lies inside some `g - e`;
/// hence "g - e is 4-colorable for every edge e" is equivalent to
/// criticality. Isolated vertices are rejected up front.
pub fn is_5_critical(g: &Graph) -> bool {
    if g.n() == 0 || g.min_degree() == Some(0) {
        return false;
    }
    if is_4_colorable(g) {
        return false;
    }
    g.edges().all(|(u, v)| is_4_colorable(&g.without_edge(u, v).expect("edge exists")))
}

/// A 5-critical subgraph of a non-4-colorable `g`, with the map from its
/// vertices to vertices of `g`.
///
/// Edges are tried for deletion once each in descending lexicographic order;
/// an edge is dropped if the graph stays non-4-colorable. One pass suffices:
/// an edge kept at its turn stays necessary as the graph only shrinks.
/// Isolated vertices are then removed.
pub fn extract_5_critical(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    if is_4_colorable(g) {
        return Err(Error::ColorableInput);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut h = g.clone();
    for &(u, v) in edges.iter().rev() {
        let candidate = h.without_edge(u, v).expect("edge still present");
        if !is_4_colorable(&candidate) {
            h = candidate;
        }
    }
    let isolated: VertexSet = (0..h.n()).filter(|&v| h.degree(v) == 0).collect();
    Ok(h.remove_vertices(isolated))
}

/// Nonadjacent pairs `u < v` of `r` such that `G[r] + uv` is not
/// 4-colorable. `r` must be a proper subset of `V(G)`.
pub fn identifiable_pairs(g: &Graph, r: VertexSet) -> Result<Vec<(usize, usize)>> {
    if r.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if r == g.vertices() {
        return Err(Error::NotProperSubset);
    }
    let (sub, map) = g.induced_subgraph(r)?;
    let mut out = Vec::new();
    for a in 0..sub.n() {
        for b in a + 1..sub.n() {
            if sub.has_edge(a, b) {
                continue;
            }
            let plus = sub.with_edge(a, b).expect("nonadjacent pair");
            if !is_4_colorable(&plus) {
                out.push((map[a], map[b]));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollapseWitness {
    /// A proper 4-coloring of `G[R]` (indexed by the ascending members of
    /// `R`) giving boundary vertices `pair` different colors.
    Split { coloring: Coloring, pair: (usize, usize) },
    /// Every boundary pair was checked and is forced to one color.
    Confirmed { pairs_checked: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseReport {
    pub collapsible: bool,
    pub boundary: VertexSet,
    pub witness: CollapseWitness,
    /// `G[R] + uv` is 5-critical for every boundary pair. Informational only.
    pub tight: bool,
}

/// Decides whether every 4-coloring of `G[R]` colors the boundary of `R`
/// with one color.
///
/// Equivalent pairwise form: for every pair `u, v` of boundary vertices,
/// `G[R] + uv` is not 4-colorable (a coloring of `G[R]` separating `u` and
/// `v` is exactly a coloring of `G[R] + uv`). Adjacent boundary vertices
/// always separate. A single boundary vertex is collapsible vacuously.
pub fn is_collapsible(g: &Graph, r: VertexSet) -> Result<CollapseReport> {
    check_proper_5(g, r)?;
    let (sub, map) = g.induced_subgraph(r)?;
    let base = is_k_colorable(&sub, 4).ok_or(Error::NotFourColorable)?;
    let boundary = g.boundary(r);
    if boundary.is_empty() {
        return Err(Error::EmptyBoundary);
    }
    let local: Vec<usize> = boundary.iter().map(|v| map.iter().position(|&m| m == v).expect("in R")).collect();
    let mut checked = 0;
    let mut tight = true;
    for i in 0..local.len() {
        for j in i + 1..local.len() {
            let (a, b) = (local[i], local[j]);
            let pair = (map[a], map[b]);
            if sub.has_edge(a, b) {
                let witness = CollapseWitness::Split { coloring: base, pair };
                return Ok(CollapseReport { collapsible: false, boundary, witness, tight: false });
            }
            let plus = sub.with_edge(a, b).expect("nonadjacent");
            if let Some(coloring) = is_k_colorable(&plus, 4) {
                let witness = CollapseWitness::Split { coloring, pair };
                return Ok(CollapseReport { collapsible: false, boundary, witness, tight: false });
            }
            tight &= is_5_critical(&plus);
            checked += 1;
        }
    }
    Ok(CollapseReport { collapsible: true, boundary, witness: CollapseWitness::Confirmed { pairs_checked: checked }, tight })
}

pub(crate) fn check_proper_5(g: &Graph, r: VertexSet) -> Result<()> {
    if !r.is_subset(g.vertices()) {
        let v = (r - g.vertices()).first().unwrap_or(0);
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if r == g.vertices() {
        return Err(Error::NotProperSubset);
    }
    if r.len() < 5 {
        return Err(Error::SetTooSmall { size: r.len(), min: 5 });
    }
    Ok(())
}

/// The graph obtained from `G` by identifying the boundary of a collapsible
/// `R` into one special vertex and deleting the rest of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalComplement {
    pub graph: Graph,
    pub special: usize,
    /// Original vertex to vertex of `graph`; `None` for deleted vertices.
    pub map: Vec<Option<usize>>,
}

pub fn critical_complement(g: &Graph, r: VertexSet) -> Result<CriticalComplement> {
    let report = is_collapsible(g, r)?;
    if !report.collapsible {
        return Err(Error::NotCollapsible);
    }
    let interior = r - report.boundary;
    let (h, kept) = g.remove_vertices(interior);
    let local: VertexSet = kept.iter().enumerate().filter(|&(_, &v)| report.boundary.contains(v)).map(|(i, _)| i).collect();
    let (w, merge) = h.identify_vertices(local)?;
    let mut map = alloc::vec![None; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        map[v] = Some(merge[i]);
    }
    let special = merge[local.first().expect("boundary nonempty")];
    Ok(CriticalComplement { graph: w, special, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn brute_colorable(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let mut colors = alloc::vec![0usize; n];
        loop {
            if g.edges().all(|(u, v)| colors[u] != colors[v]) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn k5_needs_five_colors() {
        assert!(is_k_colorable(&families::complete(5), 4).is_none());
        let g = families::complete(5).without_edge(0, 1).unwrap();
        let c = is_k_colorable(&g, 4).unwrap();
        assert!(c.is_proper(&g));
        assert_eq!(c.color(0), c.color(1));
    }

    #[test]
    fn groetzsch_needs_four_colors() {
        let g = families::groetzsch();
        assert!(is_k_colorable(&g, 3).is_none());
        assert!(!brute_colorable(&g, 3));
        assert!(is_k_colorable(&g, 4).unwrap().is_proper(&g));
    }

    #[test]
    fn edge_cases_for_k() {
        let g = Graph::new(3).unwrap();
        assert!(is_k_colorable(&g, 1).is_some());
        assert!(is_k_colorable(&Graph::new(0).unwrap(), 0).is_some());
        assert!(is_k_colorable(&g, 0).is_none());
        assert!(is_k_colorable(&families::cycle(5), 2).is_none());
        assert!(is_k_colorable(&families::cycle(6), 2).is_some());
    }

    #[test]
    fn criticality_examples() {
        assert!(is_5_critical(&families::complete(5)));
        let k5_plus = families::complete(5).disjoint_union(&families::complete(1)).unwrap();
        assert!(!is_5_critical(&k5_plus));
        assert!(is_5_critical(&families::c5_join_k2()));
        assert!(is_5_critical(&families::k1_join_groetzsch()));
        assert!(!is_5_critical(&families::complete(6)));
        assert!(!is_5_critical(&families::groetzsch()));
    }

    #[test]
    fn extraction_examples() {
        let (k, _) = extract_5_critical(&families::complete(5)).unwrap();
        assert_eq!(k, families::complete(5));
        let pendant = Graph::from_edges(6, families::complete(5).edges().chain([(4, 5)])).unwrap();
        let (k, map) = extract_5_critical(&pendant).unwrap();
        assert_eq!(k, families::complete(5));
        assert_eq!(map, [0, 1, 2, 3, 4]);
        let (k, map) = extract_5_critical(&families::complete(6)).unwrap();
        assert!(is_5_critical(&k));
        assert_eq!(k.n(), 5);
        for (u, v) in k.edges() {
            assert!(families::complete(6).has_edge(map[u], map[v]));
        }
        assert_eq!(extract_5_critical(&families::cycle(5)).unwrap_err(), Error::ColorableInput);
    }

    #[test]
    fn identifiable_pair_examples() {
        let g = families::c5_join_k2();
        // C5 plus one apex, 6 vertices.
        let r = VertexSet::full(6);
        assert!(identifiable_pairs(&g, r).unwrap().is_empty());
        // Clique R: no candidate pairs.
        let k = families::complete(5).disjoint_union(&families::complete(1)).unwrap();
        assert!(identifiable_pairs(&k, VertexSet::full(5)).unwrap().is_empty());
        assert_eq!(identifiable_pairs(&g, g.vertices()).unwrap_err(), Error::NotProperSubset);
    }

    #[test]
    fn enumerate_colorings_of_path() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        // Partitions of P3 into independent classes: {0,2}{1} and {0}{1}{2}.
        assert_eq!(enumerate_colorings(&p3, 4, 100).len(), 2);
        assert_eq!(enumerate_colorings(&families::complete(5), 4, 100).len(), 0);
        assert_eq!(enumerate_colorings(&families::complete(4), 4, 100).len(), 1);
    }

    #[test]
    fn adjacent_boundary_is_not_collapsible() {
        // K4 on {0,1,2,3} plus 4 adjacent to 0 and 1, 5 adjacent to 0 and 1.
        let g = Graph::from_edges(6, families::complete(4).edges().chain([(4, 0), (4, 1), (5, 0), (5, 1), (4, 2)])).unwrap();
        let r = VertexSet::from_iter([0, 1, 2, 3, 4]);
        let rep = is_collapsible(&g, r).unwrap();
        assert_eq!(rep.boundary, VertexSet::from_iter([0, 1]));
        assert!(!rep.collapsible);
        match rep.witness {
            CollapseWitness::Split { coloring, pair } => {
                assert_eq!(pair, (0, 1));
                assert_ne!(coloring.color(0), coloring.color(1));
            }
            CollapseWitness::Confirmed { .. } => panic!("expected split witness"),
        }
    }

    #[test]
    fn collapsible_preconditions() {
        let g = families::c5_join_k2();
        assert_eq!(is_collapsible(&g, VertexSet::full(4)).unwrap_err(), Error::SetTooSmall { size: 4, min: 5 });
        assert_eq!(is_collapsible(&g, g.vertices()).unwrap_err(), Error::NotProperSubset);
        let two = families::complete(5).disjoint_union(&families::cycle(5)).unwrap();
        assert_eq!(is_collapsible(&two, VertexSet::full(5)).unwrap_err(), Error::NotFourColorable);
        assert_eq!(is_collapsible(&two, VertexSet::from_iter(5..10)).unwrap_err(), Error::EmptyBoundary);
    }

    #[test]
    fn pendant_examples() {
        // C5 ∨ K2 with a pendant vertex 7 on cycle vertex 0.
        let g = Graph::from_edges(8, families::c5_join_k2().edges().chain([(0, 7)])).unwrap();
        // G[R] = C5 ∨ K2 is itself not 4-colorable.
        assert_eq!(is_collapsible(&g, VertexSet::full(7)).unwrap_err(), Error::NotFourColorable);
        // C5 plus one apex: every member sees the other apex, so the boundary
        // contains adjacent pairs and splits.
        let rep = is_collapsible(&g, VertexSet::full(6)).unwrap();
        assert_eq!(rep.boundary, VertexSet::full(6));
        assert!(!rep.collapsible);
    }

    #[test]
    fn single_boundary_vertex_is_vacuously_collapsible() {
        let q = Graph::from_edges(7, families::complete(4).edges().chain([(3, 4), (4, 5), (5, 6)])).unwrap();
        let rep = is_collapsible(&q, VertexSet::full(6)).unwrap();
        assert_eq!(rep.boundary, VertexSet::singleton(5));
        assert!(rep.collapsible);
        assert_eq!(rep.witness, CollapseWitness::Confirmed { pairs_checked: 0 });
    }
}
