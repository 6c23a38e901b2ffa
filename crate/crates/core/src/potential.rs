//! Potentials, φ-identification and critical extensions.
//!
//! `p_KY(G) = 9n - 4m` and `p(G) = (9 + ε)n - 4m - δT(G)` with `ε = 1/21`
//! and `δ = 8/21`, so `p(G) = (190n - 84m - 8T(G)) / 21` exactly.

use alloc::vec::Vec;

use crate::coloring::{check_proper_5, critical_complement, enumerate_colorings, extract_5_critical, is_4_colorable, is_5_critical, is_collapsible, Coloring};
use crate::error::{Error, Result};
use crate::frac::{Rat21, Rat84};
use crate::graph::{Graph, VertexSet};
use crate::ore::{gems, GemReport, OreRecognizer};
use crate::packing::t_number;

pub const EPSILON: Rat21 = Rat21::from_numerator(1);
pub const DELTA: Rat21 = Rat21::from_numerator(8);
pub const P: Rat21 = Rat21::from_numerator(48);
pub const Q: Rat21 = Rat21::from_numerator(8);
/// `p(K5) = 5 + 5ε - 2δ`.
pub const K5_POTENTIAL: Rat21 = Rat21::from_numerator(94);
/// Drop in `p_KY` guaranteed by a critical extension with core size 1..=4.
pub const KY_CORE_DROP: [i64; 4] = [9, 14, 15, 12];

pub fn p_ky(g: &Graph) -> i64 {
    9 * g.n() as i64 - 4 * g.edge_count() as i64
}

/// `p_KY(G[R])`.
pub fn p_ky_set(g: &Graph, r: VertexSet) -> i64 {
    9 * r.len() as i64 - 4 * g.edges_within(r) as i64
}

/// `(9 + ε)n - 4m - δt`.
pub fn potential_from(n: usize, m: usize, t: u32) -> Rat21 {
    Rat21::from_numerator(190 * n as i64 - 84 * m as i64 - 8 * t as i64)
}

pub fn potential(g: &Graph) -> Rat21 {
    potential_from(g.n(), g.edge_count(), t_number(g).0)
}

/// `p_G(R) = p(G[R])`; zero for empty `R`.
pub fn potential_set(g: &Graph, r: VertexSet) -> Rat21 {
    match g.induced_subgraph(r) {
        Ok((sub, _)) => potential(&sub),
        Err(_) => Rat21::ZERO,
    }
}

/// `f(x) = 9x - 4·C(x, 2) + xε` for a core of size `x`.
pub fn f_core(x: usize) -> Result<Rat21> {
    if !(1..=4).contains(&x) {
        return Err(Error::OutOfRange("core size"));
    }
    let x = x as i64;
    Ok(Rat21::from_integer(9 * x - 2 * x * (x - 1)) + EPSILON * x)
}

/// The φ-identification `G_φ(R)`.
///
/// Vertices outside `R` come first in increasing order, then `x_1..x_4`.
/// All four class vertices are created even when a class is empty; such
/// vertices have only the three clique edges and are listed in
/// `empty_classes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiIdentification {
    pub graph: Graph,
    /// Vertex of `graph` to original vertex, for the vertices outside `R`.
    pub outside: Vec<usize>,
    /// Positions of `x_1..x_4` in `graph`.
    pub class_vertices: [usize; 4],
    /// Colors (0-based) with no vertex in `R`.
    pub empty_classes: Vec<u8>,
}

/// `phi` colors the members of `R` in increasing order with colors `0..4`.
pub fn phi_identify(g: &Graph, r: VertexSet, phi: &Coloring) -> Result<PhiIdentification> {
    check_proper_5(g, r)?;
    let members = r.to_vec();
    if phi.len() != members.len() {
        return Err(Error::ColoringLength { expected: members.len(), got: phi.len() });
    }
    let (sub, _) = g.induced_subgraph(r)?;
    phi.check(&sub, 4).map_err(|e| match e {
        Error::ImproperColoring(a, b) => Error::ImproperColoring(members[a], members[b]),
        other => other,
    })?;
    let outside = (g.vertices() - r).to_vec();
    let base = outside.len();
    let mut new_of = alloc::vec![0usize; g.n()];
    for (i, &v) in outside.iter().enumerate() {
        new_of[v] = i;
    }
    for (i, &v) in members.iter().enumerate() {
        new_of[v] = base + phi.color(i) as usize;
    }
    let n = base + 4;
    let mut adj = alloc::vec![0u64; n];
    for (u, v) in g.edges() {
        let (a, b) = (new_of[u], new_of[v]);
        if a != b {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    for i in base..n {
        for j in base..n {
            if i != j {
                adj[i] |= 1 << j;
            }
        }
    }
    let graph = Graph::from_adjacency(adj)?;
    let empty_classes = (0..4u8).filter(|&c| phi.class(c).is_empty()).collect();
    Ok(PhiIdentification { graph, outside, class_vertices: [base, base + 1, base + 2, base + 3], empty_classes })
}

/// A critical extension of `R` with a recorded extender.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionRecord {
    pub r: VertexSet,
    pub phi: Coloring,
    pub identification: PhiIdentification,
    /// The extender: a 5-critical subgraph of the identification.
    pub w: Graph,
    /// Vertex of `w` to vertex of the identification.
    pub w_map: Vec<usize>,
    /// Core vertices, in `w`'s labels.
    pub core: VertexSet,
    /// `R' = (V(W) - V(X)) ∪ R` in the original labels.
    pub r_prime: VertexSet,
    pub complete: bool,
    pub spanning: bool,
}

impl ExtensionRecord {
    pub fn core_size(&self) -> usize {
        self.core.len()
    }

    pub fn total(&self) -> bool {
        self.complete && self.spanning
    }

    /// Original vertices of `W - X`.
    pub fn outside_core(&self) -> VertexSet {
        (0..self.w.n()).filter(|&u| !self.core.contains(u)).map(|u| self.identification.outside[self.w_map[u]]).collect()
    }
}

/// Builds `G_φ(R)`, confirms it is not 4-colorable, and extracts the
/// extender with the deterministic edge order of
/// [`extract_5_critical`]. The extension is incomplete if some vertex of
/// `W - X` has more neighbors in `R` than core neighbors in `W`, if
/// `G[V(W) - V(X)]` has an edge missing from `W`, or if the core does not
/// induce a clique in `W`.
pub fn critical_extension(g: &Graph, r: VertexSet, phi: &Coloring) -> Result<ExtensionRecord> {
    let identification = phi_identify(g, r, phi)?;
    if is_4_colorable(&identification.graph) {
        return Err(Error::IdentifiedColorable);
    }
    let (w, w_map) = extract_5_critical(&identification.graph)?;
    let base = identification.outside.len();
    let core: VertexSet = (0..w.n()).filter(|&u| w_map[u] >= base).collect();
    if core.is_empty() {
        return Err(Error::NotFiveCritical);
    }
    let rest: Vec<usize> = (0..w.n()).filter(|&u| !core.contains(u)).collect();
    let orig = |u: usize| identification.outside[w_map[u]];
    let rest_orig: VertexSet = rest.iter().map(|&u| orig(u)).collect();
    let r_prime = r | rest_orig;

    let mut complete = w.is_clique(core);
    for &u in &rest {
        if (g.neighbors(orig(u)) & r).len() > (w.neighbors(u) & core).len() {
            complete = false;
        }
    }
    for (i, &a) in rest.iter().enumerate() {
        for &b in &rest[i + 1..] {
            if g.has_edge(orig(a), orig(b)) && !w.has_edge(a, b) {
                complete = false;
            }
        }
    }
    let spanning = r_prime == g.vertices();
    Ok(ExtensionRecord { r, phi: phi.clone(), identification, w, w_map, core, r_prime, complete, spanning })
}

/// One inequality `lhs <= rhs`, with `slack = rhs - lhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InequalityCheck {
    pub name: &'static str,
    pub slack: Rat21,
}

impl InequalityCheck {
    pub fn holds(&self) -> bool {
        !self.slack.is_negative()
    }
}

/// Checks for one extension record:
///
/// - `ky`: `p_KY(R') <= p_KY(R) + p_KY(W) - c`, `c = 9, 14, 15, 12` for
///   core sizes 1..4;
/// - `main`: `p_G(R') <= p_G(R) + p(W) - f(|X|) + δ(T(W) - T(W - X))`;
/// - `furthermore`: `p_G(R') <= p_G(R) + p(W) - 9 - ε + δ`.
pub fn verify_extension_inequalities(g: &Graph, rec: &ExtensionRecord) -> Result<[InequalityCheck; 3]> {
    let x = rec.core_size();
    let ky_lhs = p_ky_set(g, rec.r_prime);
    let ky_rhs = p_ky_set(g, rec.r) + p_ky(&rec.w) - KY_CORE_DROP.get(x.wrapping_sub(1)).copied().ok_or(Error::OutOfRange("core size"))?;
    let lhs = potential_set(g, rec.r_prime);
    let p_r = potential_set(g, rec.r);
    let t_w = t_number(&rec.w).0 as i64;
    let (w_minus_x, _) = rec.w.remove_vertices(rec.core);
    let t_w_minus_x = t_number(&w_minus_x).0 as i64;
    let p_w = potential_from(rec.w.n(), rec.w.edge_count(), t_w as u32);
    let main_rhs = p_r + p_w - f_core(x)? + DELTA * (t_w - t_w_minus_x);
    let further_rhs = p_r + p_w - Rat21::from_integer(9) - EPSILON + DELTA;
    Ok([
        InequalityCheck { name: "ky", slack: Rat21::from_integer(ky_rhs - ky_lhs) },
        InequalityCheck { name: "main", slack: main_rhs - lhs },
        InequalityCheck { name: "furthermore", slack: further_rhs - lhs },
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremCase {
    K5,
    Ore,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MainTheoremReport {
    pub case: TheoremCase,
    pub potential: Rat21,
    pub t: u32,
    /// The case bound: `94/21` (equality) for `K5`, `(91 - n)/21` for other
    /// 5-Ore graphs, `5 - P = 57/21` otherwise.
    pub bound: Rat21,
    pub holds: bool,
    /// For triangle-free input, `84m - (190n - 105)` over 84, i.e. the
    /// slack of `m >= (9/4 + 1/84)n - 5/4`.
    pub triangle_free_slack: Option<Rat84>,
}

impl MainTheoremReport {
    pub fn slack(&self) -> Rat21 {
        self.bound - self.potential
    }
}

/// The three-case potential bound for a 5-critical graph, plus the
/// triangle-free edge bound when it applies.
pub fn verify_main_theorem(g: &Graph, recognizer: &mut OreRecognizer) -> Result<MainTheoremReport> {
    if !is_5_critical(g) {
        return Err(Error::NotFiveCritical);
    }
    let (n, m) = (g.n() as i64, g.edge_count() as i64);
    let t = t_number(g).0;
    let p = potential_from(g.n(), g.edge_count(), t);
    let (case, bound) = if n == 5 && m == 10 {
        (TheoremCase::K5, K5_POTENTIAL)
    } else if recognizer.is_5_ore(g) {
        (TheoremCase::Ore, Rat21::from_numerator(91 - n))
    } else {
        (TheoremCase::Other, Rat21::from_integer(5) - P)
    };
    let holds = if case == TheoremCase::K5 { p == bound } else { p <= bound };
    let triangle_free_slack = g.is_triangle_free().then(|| Rat84::from_numerator(84 * m - 190 * n + 105));
    Ok(MainTheoremReport { case, potential: p, t, bound, holds, triangle_free_slack })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ore5Report {
    pub p_ky: i64,
    pub is_5_ore: bool,
    /// `p_KY <= 5`.
    pub bounded: bool,
    /// `p_KY >= 3` exactly when the graph is 5-Ore.
    pub consistent: bool,
    pub subsets_checked: usize,
    /// Subsets with `p_KY(R) < 12` that are not collapsible or have
    /// `p_KY(R) != 9`.
    pub violations: Vec<VertexSet>,
}

impl Ore5Report {
    pub fn passed(&self) -> bool {
        self.bounded && self.consistent && self.violations.is_empty()
    }
}

/// `p_KY(G) <= 5`, `p_KY(G) >= 3 ⇔ 5-Ore`, and for 5-Ore `G` every
/// supplied subset `R` (proper, `|R| >= 5`; others are skipped) with
/// `p_KY(R) < 12` is collapsible with `p_KY(R) = 9`.
pub fn verify_ore5_bounds<I>(g: &Graph, recognizer: &mut OreRecognizer, subsets: I) -> Result<Ore5Report>
where
    I: IntoIterator<Item = VertexSet>,
{
    if !is_5_critical(g) {
        return Err(Error::NotFiveCritical);
    }
    let p = p_ky(g);
    let ore = recognizer.is_5_ore(g);
    let mut report = Ore5Report { p_ky: p, is_5_ore: ore, bounded: p <= 5, consistent: (p >= 3) == ore, subsets_checked: 0, violations: Vec::new() };
    if !ore {
        return Ok(report);
    }
    for r in subsets {
        if r.len() < 5 || r == g.vertices() || !r.is_subset(g.vertices()) {
            continue;
        }
        report.subsets_checked += 1;
        let pr = p_ky_set(g, r);
        if pr >= 12 {
            continue;
        }
        if pr != 9 || !is_collapsible(g, r)?.collapsible {
            report.violations.push(r);
        }
    }
    Ok(report)
}

/// Result of extending a set along every 4-coloring of `G[R]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseExtensionCheck {
    pub collapsible: bool,
    pub extensions_checked: usize,
    /// Every examined extension is complete, spanning, with core size 1.
    pub all_total_core_one: bool,
    /// The first extension that is not total with core size 1.
    pub failing: Option<ExtensionRecord>,
}

impl CollapseExtensionCheck {
    /// Collapsible exactly when every extension is total with core size 1.
    pub fn agrees(&self) -> bool {
        self.collapsible == self.all_total_core_one
    }
}

/// Extends `R` along every 4-coloring of `G[R]` up to renaming colors (at
/// most `limit` of them) and compares with collapsibility. A coloring that
/// splits the boundary always gives a failing extension, whichever
/// extender is chosen, so one extender per coloring decides both
/// directions.
pub fn collapse_extension_check(g: &Graph, r: VertexSet, limit: usize) -> Result<CollapseExtensionCheck> {
    let report = is_collapsible(g, r)?;
    let (sub, _) = g.induced_subgraph(r)?;
    let mut out = CollapseExtensionCheck { collapsible: report.collapsible, extensions_checked: 0, all_total_core_one: true, failing: None };
    for phi in enumerate_colorings(&sub, 4, limit) {
        let rec = critical_extension(g, r, &phi)?;
        out.extensions_checked += 1;
        if !(rec.total() && rec.core_size() == 1) {
            out.all_total_core_one = false;
            out.failing = Some(rec);
            break;
        }
    }
    Ok(out)
}

/// For collapsible `R` with critical complement `W`, the slack of
/// `p_G(R) >= p(G) - p(W) + 9 + ε - δ`.
pub fn collapsible_potential_slack(g: &Graph, r: VertexSet) -> Result<Rat21> {
    let cc = critical_complement(g, r)?;
    let rhs = potential(g) - potential(&cc.graph) + Rat21::from_integer(9) + EPSILON - DELTA;
    Ok(potential_set(g, r) - rhs)
}

/// Structural predicates, evaluated and reported without assertion. On
/// real graphs they are observations; only a hypothetical minimum
/// counterexample is claimed to satisfy all of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAudit {
    /// `(w, u, v)`: `u, v` is an identifiable pair in `V(G) - w`.
    pub identifiable_pair: Option<(usize, usize, usize)>,
    pub max_cluster: usize,
    pub d4_sizes: Vec<usize>,
    pub contains_k5_minus_e: bool,
    pub gems: GemReport,
    pub three_connected: bool,
    /// Largest number of degree-4 neighbors lying on an edge of `D4(G)`,
    /// over vertices of degree 5.
    pub max_d4_edge_neighbors_of_degree_5: usize,
    pub is_5_ore: bool,
}

impl StructureAudit {
    /// `(predicate, holds)` rows, each phrased as the conclusion a minimum
    /// counterexample would satisfy.
    pub fn rows(&self) -> [(&'static str, bool); 7] {
        [
            ("no-identifiable-pair", self.identifiable_pair.is_none()),
            ("clusters-at-most-1", self.max_cluster <= 1),
            ("d4-components-at-most-2", self.d4_sizes.iter().all(|&s| s <= 2)),
            ("no-k5-minus-e", !self.contains_k5_minus_e),
            ("ungemmed", self.gems.ungemmed),
            ("3-connected", self.three_connected),
            ("degree-5-sees-at-most-1-d4-edge", self.max_d4_edge_neighbors_of_degree_5 <= 1),
        ]
    }
}

/// An identifiable pair in a proper subset exists iff one exists in some
/// `V(G) - w`, since adding vertices to `R` keeps `G[R] + uv` non
/// 4-colorable.
pub fn structure_lemma_audit(g: &Graph, recognizer: &mut OreRecognizer) -> Result<StructureAudit> {
    if !is_5_critical(g) {
        return Err(Error::NotFiveCritical);
    }
    let mut identifiable_pair = None;
    'outer: for w in 0..g.n() {
        let r = g.vertices().without(w);
        if let Some(&(u, v)) = crate::coloring::identifiable_pairs(g, r)?.first() {
            identifiable_pair = Some((w, u, v));
            break 'outer;
        }
    }
    let d4 = g.d4_components();
    let mut d4_sizes: Vec<usize> = d4.components.iter().map(|c| c.len()).collect();
    d4_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let on_d4_edge = |u: usize| d4.component_of(u).is_some_and(|c| c.len() >= 2);
    let max_d4 = (0..g.n()).filter(|&v| g.degree(v) == 5).map(|v| g.neighbors(v).iter().filter(|&u| on_d4_edge(u)).count()).max().unwrap_or(0);
    Ok(StructureAudit {
        identifiable_pair,
        max_cluster: g.clusters().iter().map(|c| c.vertices.len()).max().unwrap_or(0),
        d4_sizes,
        contains_k5_minus_e: !g.k5_minus_e_sets().is_empty(),
        gems: gems(g),
        three_connected: g.is_3_connected(),
        max_d4_edge_neighbors_of_degree_5: max_d4,
        is_5_ore: recognizer.is_5_ore(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_k_colorable;
    use crate::families;
    use crate::ore::OreRecipe;

    fn double_k5() -> Graph {
        OreRecipe::compose(OreRecipe::Leaf, (0, 1), OreRecipe::Leaf, 0, VertexSet::singleton(1), VertexSet::from_iter([2, 3, 4])).materialize().unwrap().graph
    }

    #[test]
    fn potentials() {
        assert_eq!(p_ky(&families::complete(5)), 5);
        assert_eq!(p_ky(&families::c5_join_k2()), -1);
        assert_eq!(potential(&families::complete(5)), K5_POTENTIAL);
        assert_eq!(potential(&families::c5_join_k2()), Rat21::from_numerator(-30));
        let g = families::groetzsch();
        assert_eq!(potential(&g), Rat21::from_integer(9 * 11 - 80) + EPSILON * 11);
    }

    #[test]
    fn core_constants() {
        let f: Vec<i64> = (1..=4).map(|x| f_core(x).unwrap().numerator()).collect();
        assert_eq!(f, [190, 296, 318, 256]);
        assert!(f_core(0).is_err());
        assert!(f_core(5).is_err());
    }

    #[test]
    fn identification_of_edge_side() {
        let g = double_k5();
        let r = VertexSet::full(5);
        let (sub, _) = g.induced_subgraph(r).unwrap();
        let phi = is_k_colorable(&sub, 4).unwrap();
        assert_eq!(phi.color(0), phi.color(1));
        let id = phi_identify(&g, r, &phi).unwrap();
        assert_eq!(id.graph.n(), 9 - 5 + 4);
        assert!(id.empty_classes.is_empty());
        assert!(id.graph.edge_count() >= g.edge_count() - g.edges_within(r) + 6);

        let rec = critical_extension(&g, r, &phi).unwrap();
        assert_eq!(rec.w, families::complete(5));
        assert_eq!(rec.core_size(), 1);
        assert!(rec.complete && rec.spanning);
        for c in verify_extension_inequalities(&g, &rec).unwrap() {
            assert!(c.holds(), "{c:?}");
        }
    }

    #[test]
    fn identification_preconditions() {
        let g = double_k5();
        let r = VertexSet::full(5);
        let bad = Coloring::new(alloc::vec![0, 0, 1, 2, 3]);
        assert!(matches!(phi_identify(&g, r, &Coloring::new(alloc::vec![0, 1, 1, 2, 3])), Err(Error::ImproperColoring(_, _))));
        assert!(phi_identify(&g, r, &bad).is_ok());
        assert!(matches!(phi_identify(&g, VertexSet::full(4), &Coloring::new(alloc::vec![0, 1, 2, 3])), Err(Error::SetTooSmall { .. })));
        assert!(matches!(phi_identify(&g, g.vertices(), &bad), Err(Error::NotProperSubset)));
    }

    #[test]
    fn empty_class_is_materialized() {
        let g = double_k5();
        let r = VertexSet::from_iter([0, 2, 5, 6, 7]);
        let (sub, _) = g.induced_subgraph(r).unwrap();
        let phi = is_k_colorable(&sub, 3).unwrap().normalized();
        let id = phi_identify(&g, r, &phi).unwrap();
        assert_eq!(id.empty_classes, [3]);
        assert_eq!(id.graph.degree(id.class_vertices[3]), 3);
    }

    #[test]
    fn main_theorem_cases() {
        let mut rec = OreRecognizer::new();
        let k5 = verify_main_theorem(&families::complete(5), &mut rec).unwrap();
        assert_eq!((k5.case, k5.potential, k5.holds), (TheoremCase::K5, K5_POTENTIAL, true));
        let d = verify_main_theorem(&double_k5(), &mut rec).unwrap();
        assert_eq!(d.case, TheoremCase::Ore);
        assert_eq!(d.bound, Rat21::from_integer(5) + EPSILON * 9 - DELTA * 4);
        assert!(d.holds);
        let c = verify_main_theorem(&families::c5_join_k2(), &mut rec).unwrap();
        assert_eq!((c.case, c.holds), (TheoremCase::Other, true));
        assert!(verify_main_theorem(&families::complete(6), &mut rec).is_err());
    }

    #[test]
    fn ore5_bounds_on_double_k5() {
        let g = double_k5();
        let mut rec = OreRecognizer::new();
        let all = (0u64..1 << g.n()).map(VertexSet);
        let report = verify_ore5_bounds(&g, &mut rec, all).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(p_ky_set(&g, VertexSet::full(5)), 9);
        let c = verify_ore5_bounds(&families::c5_join_k2(), &mut rec, []).unwrap();
        assert!(c.passed() && !c.is_5_ore);
    }

    #[test]
    fn collapsible_sets_extend_totally() {
        let g = double_k5();
        let check = collapse_extension_check(&g, VertexSet::full(5), 100).unwrap();
        assert!(check.collapsible && check.all_total_core_one);
        assert_eq!(check.extensions_checked, 1);
        assert!(!collapsible_potential_slack(&g, VertexSet::full(5)).unwrap().is_negative());

        let r = VertexSet::from_iter([0, 2, 3, 4, 5, 6]);
        let check = collapse_extension_check(&g, r, 1000).unwrap();
        assert!(check.agrees(), "{check:?}");
    }

    #[test]
    fn structure_audit_examples() {
        let mut rec = OreRecognizer::new();
        let k5 = structure_lemma_audit(&families::complete(5), &mut rec).unwrap();
        assert_eq!(k5.max_cluster, 5);
        assert!(!k5.gems.ungemmed && k5.is_5_ore);
        let c = structure_lemma_audit(&families::c5_join_k2(), &mut rec).unwrap();
        assert_eq!(c.d4_sizes, [5]);
        assert!(!c.is_5_ore);
    }
}
