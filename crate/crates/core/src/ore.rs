//! Ore compositions and 5-Ore graphs.
//!
//! An Ore composition of `G1` (the edge side) and `G2` (the vertex side)
//! deletes an edge `xy` of `G1`, splits a vertex `z` of `G2` into `z1`, `z2`
//! whose neighborhoods partition `N(z)` into two nonempty parts, and
//! identifies `x` with `z1` and `y` with `z2`. The 5-Ore graphs are `K5`
//! and everything reachable from copies of `K5` by Ore compositions.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::canon::{canonical_form, canonical_key, is_isomorphic, isomorphism, CanonKey};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::{Graph, VertexSet};
use crate::packing::small_cliques;

/// A binary tree describing how a 5-Ore graph is built.
///
/// Vertex and edge indices in a `Compose` node refer to the materialized
/// labeling of the corresponding child (see [`OreRecipe::materialize`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OreRecipe {
    Leaf,
    Compose(Box<Composition>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    pub edge_side: OreRecipe,
    /// The replaced edge `(x, y)` of the edge side.
    pub edge: (usize, usize),
    pub vertex_side: OreRecipe,
    /// The split vertex `z` of the vertex side.
    pub split_vertex: usize,
    /// Neighbors of `z` that end up adjacent to `x`.
    pub x_part: VertexSet,
    /// Neighbors of `z` that end up adjacent to `y`.
    pub y_part: VertexSet,
}

/// A materialized recipe: the graph, plus for each vertex the index of the
/// leaf (counted left to right) it came from. The shared vertices `x`, `y`
/// of a composition are attributed to the edge side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Materialized {
    pub graph: Graph,
    pub leaf_of: Vec<usize>,
}

impl OreRecipe {
    pub fn compose(edge_side: OreRecipe, edge: (usize, usize), vertex_side: OreRecipe, split_vertex: usize, x_part: VertexSet, y_part: VertexSet) -> OreRecipe {
        OreRecipe::Compose(Box::new(Composition { edge_side, edge, vertex_side, split_vertex, x_part, y_part }))
    }

    pub fn leaves(&self) -> usize {
        match self {
            OreRecipe::Leaf => 1,
            OreRecipe::Compose(c) => c.edge_side.leaves() + c.vertex_side.leaves(),
        }
    }

    /// `4L + 1` for `L` leaves.
    pub fn vertex_count(&self) -> usize {
        4 * self.leaves() + 1
    }

    /// `9L + 1` for `L` leaves.
    pub fn edge_count(&self) -> usize {
        9 * self.leaves() + 1
    }

    /// Builds the graph. Edge-side vertices keep their indices; the
    /// vertex-side vertices other than `z` follow in increasing order.
    pub fn materialize(&self) -> Result<Materialized> {
        match self {
            OreRecipe::Leaf => Ok(Materialized { graph: families::complete(5), leaf_of: alloc::vec![0; 5] }),
            OreRecipe::Compose(c) => {
                let m1 = c.edge_side.materialize()?;
                let m2 = c.vertex_side.materialize()?;
                let (graph, map2) = compose_graphs(&m1.graph, c.edge, &m2.graph, c.split_vertex, c.x_part, c.y_part)?;
                let offset = c.edge_side.leaves();
                let mut leaf_of = m1.leaf_of;
                leaf_of.resize(graph.n(), 0);
                for (v, &leaf) in m2.leaf_of.iter().enumerate() {
                    if v != c.split_vertex {
                        leaf_of[map2[v]] = leaf + offset;
                    }
                }
                Ok(Materialized { graph, leaf_of })
            }
        }
    }
}

/// Materializes a recipe; see [`OreRecipe::materialize`].
pub fn ore_compose(recipe: &OreRecipe) -> Result<Materialized> {
    recipe.materialize()
}

/// The Ore composition of two graphs. Returns the composed graph and, for
/// each vertex of `g2`, its image (`z` maps to `x`).
pub fn compose_graphs(g1: &Graph, (x, y): (usize, usize), g2: &Graph, z: usize, x_part: VertexSet, y_part: VertexSet) -> Result<(Graph, Vec<usize>)> {
    if !g1.has_edge(x, y) {
        return Err(Error::MissingEdge(x, y));
    }
    if z >= g2.n() {
        return Err(Error::VertexOutOfRange { vertex: z, n: g2.n() });
    }
    if x_part.is_empty() || y_part.is_empty() {
        return Err(Error::EmptySplitSide);
    }
    if !x_part.is_disjoint(y_part) || (x_part | y_part) != g2.neighbors(z) {
        return Err(Error::InvalidSplit);
    }
    let n1 = g1.n();
    let mut map2 = alloc::vec![0usize; g2.n()];
    let mut next = n1;
    for (v, slot) in map2.iter_mut().enumerate() {
        if v == z {
            *slot = x;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = g1.edges().filter(|&e| e != (x.min(y), x.max(y))).collect();
    for (u, v) in g2.edges() {
        if u != z && v != z {
            edges.push((map2[u], map2[v]));
        }
    }
    edges.extend(x_part.iter().map(|u| (x, map2[u])));
    edges.extend(y_part.iter().map(|u| (y, map2[u])));
    Ok((Graph::from_edges(next, edges)?, map2))
}

/// `9n - 4m`.
fn p_ky_of(n: usize, m: usize) -> i64 {
    9 * n as i64 - 4 * m as i64
}

impl fmt::Display for OreRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OreRecipe::Leaf => f.write_str("(k5)"),
            OreRecipe::Compose(c) => {
                write!(f, "(compose {} e={}-{} {} z={} split=", c.edge_side, c.edge.0, c.edge.1, c.vertex_side, c.split_vertex)?;
                write_list(f, c.x_part)?;
                f.write_str("|")?;
                write_list(f, c.y_part)?;
                f.write_str(")")
            }
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, s: VertexSet) -> fmt::Result {
    for (i, v) in s.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Error from parsing the recipe text form, with the byte offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecipeParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for RecipeParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "recipe parse error at byte {}: {}", self.offset, self.message)
    }
}

impl core::error::Error for RecipeParseError {}

impl FromStr for OreRecipe {
    type Err = RecipeParseError;

    fn from_str(s: &str) -> core::result::Result<OreRecipe, RecipeParseError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let r = p.recipe()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(r)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> RecipeParseError {
        RecipeParseError { offset: self.pos, message: String::from(message) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, lit: &str) -> core::result::Result<(), RecipeParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(self.error(&alloc::format!("expected `{lit}`")))
        }
    }

    fn number(&mut self) -> core::result::Result<usize, RecipeParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match text.parse::<usize>() {
            Ok(v) if v < 64 => Ok(v),
            Ok(_) => Err(RecipeParseError { offset: start, message: String::from("vertex index out of range") }),
            Err(_) => Err(RecipeParseError { offset: start, message: String::from("expected a vertex index") }),
        }
    }

    fn list(&mut self) -> core::result::Result<VertexSet, RecipeParseError> {
        let mut s = VertexSet::EMPTY;
        loop {
            s.insert(self.number()?);
            if self.src.get(self.pos) == Some(&b',') {
                self.pos += 1;
            } else {
                return Ok(s);
            }
        }
    }

    fn recipe(&mut self) -> core::result::Result<OreRecipe, RecipeParseError> {
        self.expect("(")?;
        self.skip_ws();
        if self.src[self.pos..].starts_with(b"k5") {
            self.pos += 2;
            self.expect(")")?;
            return Ok(OreRecipe::Leaf);
        }
        self.expect("compose")?;
        let edge_side = self.recipe()?;
        self.expect("e=")?;
        let x = self.number()?;
        self.expect("-")?;
        let y = self.number()?;
        let vertex_side = self.recipe()?;
        self.expect("z=")?;
        let z = self.number()?;
        self.expect("split=")?;
        let x_part = self.list()?;
        self.expect("|")?;
        let y_part = self.list()?;
        self.expect(")")?;
        Ok(OreRecipe::compose(edge_side, (x, y), vertex_side, z, x_part, y_part))
    }
}

/// One isomorphism class of 5-Ore graphs with a witnessing recipe; `graph`
/// is exactly the materialized recipe.
#[derive(Clone, Debug)]
pub struct OreClass {
    pub graph: Graph,
    pub recipe: OreRecipe,
    pub key: CanonKey,
}

/// Orbit representatives (lowest member) of vertices under the group
/// generated by `gens`.
fn vertex_orbit_reps(n: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            uf.union(v, w);
        }
    }
    (0..n).filter(|&v| uf.find(v) == v).collect()
}

fn edge_orbit_reps(g: &Graph, gens: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut uf = UnionFind::new(edges.len());
    for p in gens {
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (a, b) = (p[u], p[v]);
            uf.union(i, index[&(a.min(b), a.max(b))]);
        }
    }
    (0..edges.len()).filter(|&i| uf.find(i) == i).map(|i| edges[i]).collect()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

/// All isomorphism classes of 5-Ore graphs on at most `max_n` vertices,
/// ordered by vertex count and then by discovery.
///
/// Every 5-Ore graph on `4L + 1` vertices is a composition of classes with
/// `L1 + L2 = L` leaves, so each level is generated from the earlier ones:
/// edge-orbit representatives of the edge side, vertex-orbit
/// representatives of the vertex side, and every ordered split of the
/// split vertex's neighborhood. Results are deduplicated by canonical key.
pub fn enumerate_5_ore(max_n: usize) -> Vec<OreClass> {
    let mut levels: Vec<Vec<OreClass>> = Vec::new();
    if max_n >= 5 {
        let k5 = families::complete(5);
        levels.push(alloc::vec![OreClass { key: canonical_key(&k5), graph: k5, recipe: OreRecipe::Leaf }]);
    }
    let mut leaves = 2;
    while 4 * leaves < max_n.min(crate::graph::MAX_VERTICES) {
        let mut seen: BTreeMap<CanonKey, ()> = BTreeMap::new();
        let mut level = Vec::new();
        for l1 in 1..leaves {
            let l2 = leaves - l1;
            for c1 in &levels[l1 - 1] {
                let f1 = canonical_form(&c1.graph);
                let edges = edge_orbit_reps(&c1.graph, &f1.automorphisms);
                for c2 in &levels[l2 - 1] {
                    let f2 = canonical_form(&c2.graph);
                    for z in vertex_orbit_reps(c2.graph.n(), &f2.automorphisms) {
                        let nz = c2.graph.neighbors(z).to_vec();
                        for &(x, y) in &edges {
                            for mask in 1u64..(1 << nz.len()) - 1 {
                                let x_part: VertexSet = nz.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
                                let y_part = c2.graph.neighbors(z) - x_part;
                                let (graph, _) = compose_graphs(&c1.graph, (x, y), &c2.graph, z, x_part, y_part).expect("valid composition");
                                let key = canonical_key(&graph);
                                if seen.insert(key.clone(), ()).is_none() {
                                    let recipe = OreRecipe::compose(c1.recipe.clone(), (x, y), c2.recipe.clone(), z, x_part, y_part);
                                    level.push(OreClass { graph, recipe, key });
                                }
                            }
                        }
                    }
                }
            }
        }
        levels.push(level);
        leaves += 1;
    }
    levels.into_iter().flatten().collect()
}

/// Recognizes 5-Ore graphs, memoizing results by canonical key.
///
/// A graph with `9n - 4m != 5` is rejected at once; `K5` is a leaf.
/// Otherwise every nonadjacent pair `{x, y}` separating the graph is tried
/// with every assignment of the components of `G - {x, y}` to an edge side
/// `A` and a vertex side `B`: the candidates are `G[A + x + y] + xy` and
/// `G[B + x + y]` with `x`, `y` identified, which is only a valid split if
/// both `x` and `y` have neighbors in `B` and no common neighbor there.
#[derive(Clone, Debug, Default)]
pub struct OreRecognizer {
    memo: BTreeMap<CanonKey, Option<(OreRecipe, Graph)>>,
}

impl OreRecognizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized isomorphism classes.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// A recipe whose materialization is isomorphic to `g`, if `g` is 5-Ore.
    pub fn recognize(&mut self, g: &Graph) -> Option<OreRecipe> {
        self.find(g).map(|(r, _)| r)
    }

    pub fn is_5_ore(&mut self, g: &Graph) -> bool {
        self.find(g).is_some()
    }

    fn find(&mut self, g: &Graph) -> Option<(OreRecipe, Graph)> {
        if p_ky_of(g.n(), g.edge_count()) != 5 {
            return None;
        }
        if g.n() == 5 {
            return Some((OreRecipe::Leaf, families::complete(5)));
        }
        let key = canonical_key(g);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let found = self.search(g);
        self.memo.insert(key, found.clone());
        found
    }

    fn search(&mut self, g: &Graph) -> Option<(OreRecipe, Graph)> {
        let all = g.vertices();
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                if g.has_edge(x, y) {
                    continue;
                }
                let rest = all.without(x).without(y);
                let comps = g.components_within(rest);
                if comps.len() < 2 {
                    continue;
                }
                for mask in 1u64..(1 << comps.len()) - 1 {
                    let a: VertexSet = comps.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).fold(VertexSet::EMPTY, |s, (_, &c)| s | c);
                    let b = rest - a;
                    if let Some(found) = self.try_split(g, x, y, a, b) {
                        return Some(found);
                    }
                }
            }
        }
        None
    }

    fn try_split(&mut self, g: &Graph, x: usize, y: usize, a: VertexSet, b: VertexSet) -> Option<(OreRecipe, Graph)> {
        let (nx, ny) = (g.neighbors(x) & b, g.neighbors(y) & b);
        if nx.is_empty() || ny.is_empty() || !nx.is_disjoint(ny) {
            return None;
        }
        let side1 = a.with(x).with(y);
        if p_ky_of(side1.len(), g.edges_within(side1) + 1) != 5 {
            return None;
        }
        let (sub1, map1) = g.induced_subgraph(side1).ok()?;
        let pos1 = |v: usize| map1.iter().position(|&m| m == v).expect("member");
        let g1 = sub1.with_edge(pos1(x), pos1(y)).ok()?;
        let side2 = b.with(x).with(y);
        let (sub2, map2) = g.induced_subgraph(side2).ok()?;
        let pos2 = |v: usize| map2.iter().position(|&m| m == v).expect("member");
        let (g2, merge) = sub2.identify_vertices(VertexSet::from_iter([pos2(x), pos2(y)])).ok()?;

        let (r1, m1) = self.find(&g1)?;
        let (r2, m2) = self.find(&g2)?;
        let iso1 = isomorphism(&g1, &m1).expect("memoized class is isomorphic");
        let iso2 = isomorphism(&g2, &m2).expect("memoized class is isomorphic");
        let to_m2 = |v: usize| iso2[merge[pos2(v)]];
        let recipe = OreRecipe::compose(r1, (iso1[pos1(x)], iso1[pos1(y)]), r2, to_m2(x), nx.iter().map(to_m2).collect(), ny.iter().map(to_m2).collect());
        let graph = recipe.materialize().expect("recipe built from valid parts").graph;
        debug_assert!(is_isomorphic(&graph, g));
        Some((recipe, graph))
    }

    /// Proper subsets `R` whose boundary is exactly a nonadjacent pair
    /// `{u, v}` and for which `G[R] + uv` is 5-Ore. Sorted.
    pub fn ore_collapsible_subsets(&mut self, g: &Graph) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let all = g.vertices();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if g.has_edge(u, v) {
                    continue;
                }
                let rest = all.without(u).without(v);
                let comps = g.components_within(rest);
                for mask in 1u64..(1 << comps.len()) - 1 {
                    let inner = comps.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).fold(VertexSet::EMPTY, |s, (_, &c)| s | c);
                    let r = inner.with(u).with(v);
                    if g.boundary(r) != VertexSet::from_iter([u, v]) {
                        continue;
                    }
                    let (sub, map) = g.induced_subgraph(r).expect("nonempty");
                    let pos = |w: usize| map.iter().position(|&m| m == w).expect("member");
                    let plus = sub.with_edge(pos(u), pos(v)).expect("nonadjacent");
                    if self.is_5_ore(&plus) {
                        out.push(r);
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// A frame of `h` with special vertex `w`, if one exists.
    ///
    /// The corners are `w` and its three neighbors. `w` has no other
    /// neighbors, so its three frame edges are plain. Among the other
    /// corners an adjacent pair can only be a plain edge and a nonadjacent
    /// pair must carry a bar; each bar's interior is exactly one component
    /// of `H` minus the corners, attached to that pair alone. A bar is the
    /// interior plus the pair with the pair identified, and must be 5-Ore.
    /// The frame is accepted only if composing `K4` with the bars rebuilds
    /// a graph isomorphic to `h`.
    pub fn find_frame(&mut self, h: &Graph, w: usize) -> Option<Frame> {
        if w >= h.n() || h.degree(w) != 3 {
            return None;
        }
        let corners = h.closed_neighborhood(w);
        let mut order = alloc::vec![w];
        order.extend(h.neighbors(w).iter());
        let comps = h.components_within(h.vertices() - corners);
        let mut edges = Vec::new();
        let mut used = 0usize;
        for i in 0..4 {
            for j in i + 1..4 {
                let (a, b) = (order[i], order[j]);
                let attached: Vec<VertexSet> = comps.iter().copied().filter(|&c| {
                    let touch = corners & c.iter().fold(VertexSet::EMPTY, |s, v| s | h.neighbors(v));
                    touch == VertexSet::from_iter([a, b])
                }).collect();
                if h.has_edge(a, b) {
                    if !attached.is_empty() {
                        return None;
                    }
                    edges.push(FrameEdge { ends: (a, b), bar: None });
                    continue;
                }
                if attached.len() != 1 {
                    return None;
                }
                let interior = attached[0];
                used += 1;
                let bar = self.bar(h, a, b, interior)?;
                edges.push(FrameEdge { ends: (a, b), bar: Some(bar) });
            }
        }
        if used != comps.len() {
            return None;
        }
        let frame = Frame { special: w, corners: [order[0], order[1], order[2], order[3]], edges };
        let rebuilt = frame.rebuild().ok()?;
        is_isomorphic(&rebuilt, h).then_some(frame)
    }

    fn bar(&mut self, h: &Graph, a: usize, b: usize, interior: VertexSet) -> Option<Bar> {
        let (na, nb) = (h.neighbors(a) & interior, h.neighbors(b) & interior);
        if na.is_empty() || nb.is_empty() || !na.is_disjoint(nb) {
            return None;
        }
        let (sub, map) = h.induced_subgraph(interior.with(a).with(b)).ok()?;
        let pos = |v: usize| map.iter().position(|&m| m == v).expect("member");
        let (graph, merge) = sub.identify_vertices(VertexSet::from_iter([pos(a), pos(b)])).ok()?;
        let recipe = self.recognize(&graph)?;
        let to_bar = |v: usize| merge[pos(v)];
        Some(Bar { interior, split_vertex: to_bar(a), a_part: na.iter().map(to_bar).collect(), b_part: nb.iter().map(to_bar).collect(), graph, recipe })
    }
}

/// Recognizes `g` with a fresh recognizer.
pub fn is_5_ore(g: &Graph) -> Option<OreRecipe> {
    OreRecognizer::new().recognize(g)
}

pub fn ore_collapsible_subsets(g: &Graph) -> Vec<VertexSet> {
    OreRecognizer::new().ore_collapsible_subsets(g)
}

pub fn find_frame(h: &Graph, w: usize) -> Option<Frame> {
    OreRecognizer::new().find_frame(h, w)
}

/// Diamonds (induced `K5 - e` whose three vertices off the missing edge
/// have degree four in `G`) and emeralds (`K4` with all four vertices of
/// degree four in `G`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GemReport {
    pub diamonds: Vec<VertexSet>,
    pub emeralds: Vec<VertexSet>,
    pub ungemmed: bool,
}

impl GemReport {
    /// True if some diamond or emerald avoids `s`.
    pub fn has_gem_disjoint_from(&self, s: VertexSet) -> bool {
        self.diamonds.iter().chain(&self.emeralds).any(|gem| gem.is_disjoint(s))
    }
}

pub fn gems(g: &Graph) -> GemReport {
    let diamonds: Vec<VertexSet> = g
        .k5_minus_e_sets()
        .into_iter()
        .filter(|&s| g.edges_within(s) == 9)
        .filter(|&s| s.iter().filter(|&v| (s - g.neighbors(v)).len() == 1).all(|v| g.degree(v) == 4))
        .collect();
    let emeralds: Vec<VertexSet> = small_cliques(g).into_iter().filter(|s| s.len() == 4 && s.iter().all(|v| g.degree(v) == 4)).collect();
    let ungemmed = diamonds.is_empty() && emeralds.is_empty();
    GemReport { diamonds, emeralds, ungemmed }
}

/// A 5-Ore graph minus one vertex of a cluster of size at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostOre {
    pub graph: Graph,
    /// The other members of the deleted vertex's cluster, in `graph`'s labels.
    pub specials: VertexSet,
    /// New vertex index to original vertex.
    pub map: Vec<usize>,
}

pub fn almost_5_ore_from(g: &Graph, v: usize) -> Result<AlmostOre> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let cluster = g.clusters().into_iter().find(|c| c.vertices.contains(v)).ok_or(Error::NotInCluster(v))?;
    if cluster.vertices.len() < 2 {
        return Err(Error::NotInCluster(v));
    }
    let (graph, map) = g.remove_vertices(VertexSet::singleton(v));
    let specials = map.iter().enumerate().filter(|&(_, &o)| o != v && cluster.vertices.contains(o)).map(|(i, _)| i).collect();
    Ok(AlmostOre { graph, specials, map })
}

/// A 5-Ore graph composed onto a frame edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bar {
    /// Vertices of the almost 5-Ore graph strictly inside the bar.
    pub interior: VertexSet,
    /// The bar: interior plus the two corners, corners identified.
    pub graph: Graph,
    /// The identified corner pair inside `graph`.
    pub split_vertex: usize,
    /// Neighbors of `split_vertex` in `graph` adjacent to the first corner.
    pub a_part: VertexSet,
    /// Neighbors of `split_vertex` in `graph` adjacent to the second corner.
    pub b_part: VertexSet,
    pub recipe: OreRecipe,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameEdge {
    pub ends: (usize, usize),
    /// `None` for a plain edge.
    pub bar: Option<Bar>,
}

/// A `K4` on a special vertex and its neighbors from which the almost
/// 5-Ore graph is rebuilt by composing bars along frame edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub special: usize,
    /// The special vertex first, then its neighbors in increasing order.
    pub corners: [usize; 4],
    /// The six corner pairs.
    pub edges: Vec<FrameEdge>,
}

impl Frame {
    pub fn bar_count(&self) -> usize {
        self.edges.iter().filter(|e| e.bar.is_some()).count()
    }

    /// Composes `K4` with every bar in turn, independently of the host
    /// graph's labels. Corner `i` of the result is `corners[i]`.
    pub fn rebuild(&self) -> Result<Graph> {
        let mut g = families::complete(4);
        let local = |v: usize| self.corners.iter().position(|&c| c == v).expect("corner");
        for e in &self.edges {
            if let Some(bar) = &e.bar {
                let (g_next, _) = compose_graphs(&g, (local(e.ends.0), local(e.ends.1)), &bar.graph, bar.split_vertex, bar.a_part, bar.b_part)?;
                g = g_next;
            }
        }
        Ok(g)
    }
}
