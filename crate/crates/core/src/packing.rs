//! `T(G)`: the maximum weight of a vertex-disjoint family of triangles
//! (weight 1) and `K4`s (weight 2), and `mic(G)`: the maximum degree sum of
//! an independent set.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A vertex-disjoint family of triangles and `K4`s.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Packing {
    pub pieces: Vec<VertexSet>,
    pub weight: u32,
}

impl Packing {
    pub fn piece_weight(piece: VertexSet) -> u32 {
        match piece.len() {
            3 => 1,
            4 => 2,
            _ => 0,
        }
    }

    /// Pieces are 3- or 4-cliques of `g`, pairwise disjoint, and the weight
    /// matches.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &p in &self.pieces {
            if !(p.len() == 3 || p.len() == 4) || !p.is_subset(g.vertices()) || !g.is_clique(p) || !p.is_disjoint(seen) {
                return false;
            }
            seen = seen | p;
        }
        self.weight == self.pieces.iter().map(|&p| Packing::piece_weight(p)).sum::<u32>()
    }
}

/// All triangles and `K4`s of `g`, ordered lexicographically by their sorted
/// vertex lists.
pub fn small_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        let na = g.neighbors(a) - VertexSet::full(a + 1);
        for b in na {
            let nab = na & (g.neighbors(b) - VertexSet::full(b + 1));
            for c in nab {
                let tri = VertexSet::from_iter([a, b, c]);
                out.push(tri);
                for d in nab & (g.neighbors(c) - VertexSet::full(c + 1)) {
                    out.push(tri.with(d));
                }
            }
        }
    }
    out
}

/// Exact `T(G)` with a witnessing packing.
///
/// Branch and bound on the lowest vertex still coverable by an available
/// piece: each piece containing it, in lexicographic order, then skipping
/// it. With `f` coverable vertices left, the remaining weight is at most
/// `2⌊f/4⌋ + [f mod 4 = 3]` since a `K4` earns 1/2 per vertex and a
/// triangle 1/3. The first optimum found is returned.
pub fn t_number(g: &Graph) -> (u32, Packing) {
    let pieces = small_cliques(g);
    let mut by_min: Vec<Vec<usize>> = alloc::vec![Vec::new(); g.n()];
    for (i, p) in pieces.iter().enumerate() {
        by_min[p.first().expect("nonempty")].push(i);
    }
    let mut search = PackSearch { pieces: &pieces, by_min: &by_min, best: -1, best_pieces: Vec::new(), chosen: Vec::new() };
    search.go(g.vertices(), 0);
    let best_pieces: Vec<VertexSet> = search.best_pieces.iter().map(|&i| pieces[i]).collect();
    let weight = search.best as u32;
    let packing = Packing { pieces: best_pieces, weight };
    debug_assert!(packing.is_valid_for(g));
    (weight, packing)
}

struct PackSearch<'a> {
    pieces: &'a [VertexSet],
    by_min: &'a [Vec<usize>],
    best: i64,
    best_pieces: Vec<usize>,
    chosen: Vec<usize>,
}

fn weight_bound(free: usize) -> i64 {
    (2 * (free / 4) + usize::from(free % 4 == 3)) as i64
}

impl PackSearch<'_> {
    fn go(&mut self, avail: VertexSet, weight: i64) {
        let live = self.pieces.iter().filter(|p| p.is_subset(avail)).fold(VertexSet::EMPTY, |acc, &p| acc | p);
        let Some(v) = live.first() else {
            if weight > self.best {
                self.best = weight;
                self.best_pieces = self.chosen.clone();
            }
            return;
        };
        if weight + weight_bound(live.len()) <= self.best {
            return;
        }
        for &i in &self.by_min[v] {
            let p = self.pieces[i];
            if p.is_subset(avail) {
                self.chosen.push(i);
                self.go(avail - p, weight + Packing::piece_weight(p) as i64);
                self.chosen.pop();
            }
        }
        self.go(avail.without(v), weight);
    }
}

pub const ORACLE_MAX_VERTICES: usize = 14;

/// Exhaustive `T(G)` for `n <= 14`: include/exclude recursion over the list
/// of all 3- and 4-subsets that are cliques, with no pruning beyond
/// disjointness.
pub fn t_number_oracle(g: &Graph) -> Result<u32> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::OutOfRange("vertex count for the exhaustive packing oracle"));
    }
    let mut pieces = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let s = VertexSet(mask);
        if (s.len() == 3 || s.len() == 4) && g.is_clique(s) {
            pieces.push(s);
        }
    }
    fn go(pieces: &[VertexSet], used: VertexSet) -> u32 {
        let Some((&p, rest)) = pieces.split_first() else { return 0 };
        let skip = go(rest, used);
        if p.is_disjoint(used) {
            skip.max(Packing::piece_weight(p) + go(rest, used | p))
        } else {
            skip
        }
    }
    Ok(go(&pieces, VertexSet::EMPTY))
}

/// An independent set and its degree sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MicWitness {
    pub independent_set: VertexSet,
    pub value: u32,
}

/// Exact `mic(G)`: maximum of `Σ d(v)` over independent sets.
///
/// Branch and bound on the heaviest candidate; the bound partitions the
/// candidates greedily into cliques and sums the heaviest degree of each.
/// Practical up to roughly 40 vertices.
pub fn mic(g: &Graph) -> (u32, MicWitness) {
    let weights: Vec<u32> = (0..g.n()).map(|v| g.degree(v) as u32).collect();
    let mut s = MicSearch { g, weights: &weights, best: 0, best_set: VertexSet::EMPTY };
    s.go(g.vertices(), 0, VertexSet::EMPTY);
    let witness = MicWitness { independent_set: s.best_set, value: s.best };
    debug_assert!(g.is_independent(s.best_set));
    (s.best, witness)
}

struct MicSearch<'a> {
    g: &'a Graph,
    weights: &'a [u32],
    best: u32,
    best_set: VertexSet,
}

impl MicSearch<'_> {
    fn clique_cover_bound(&self, cand: VertexSet) -> u32 {
        let mut left = cand;
        let mut bound = 0;
        while let Some(v) = left.first() {
            let mut clique_max = self.weights[v];
            let mut pool = left & self.g.neighbors(v);
            left.remove(v);
            while let Some(u) = pool.first() {
                clique_max = clique_max.max(self.weights[u]);
                left.remove(u);
                pool = pool.without(u) & self.g.neighbors(u);
            }
            bound += clique_max;
        }
        bound
    }

    fn go(&mut self, cand: VertexSet, value: u32, chosen: VertexSet) {
        if value > self.best || (value == self.best && self.best_set.is_empty() && !chosen.is_empty()) {
            self.best = value;
            self.best_set = chosen;
        }
        if cand.is_empty() || value + self.clique_cover_bound(cand) <= self.best {
            return;
        }
        let v = cand.iter().max_by_key(|&v| (self.weights[v], core::cmp::Reverse(v))).expect("nonempty");
        self.go(cand - self.g.closed_neighborhood(v), value + self.weights[v], chosen.with(v));
        self.go(cand.without(v), value, chosen);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn t_examples() {
        assert_eq!(t_number(&families::complete(5)).0, 2);
        let k5e = families::complete(5).without_edge(0, 1).unwrap();
        assert_eq!(t_number(&k5e).0, 2);
        assert_eq!(t_number(&families::complete(4)).0, 2);
        assert_eq!(t_number(&families::cycle(5)).0, 0);
        let two_k4 = families::complete(4).disjoint_union(&families::complete(4)).unwrap();
        assert_eq!(t_number(&two_k4).0, 4);
        assert_eq!(t_number(&families::c5_join_k2()).0, 2);
        assert_eq!(t_number(&Graph::new(0).unwrap()).0, 0);
    }

    #[test]
    fn k7_matches_oracle() {
        let k7 = families::complete(7);
        assert_eq!(t_number_oracle(&k7).unwrap(), 3);
        let (t, p) = t_number(&k7);
        assert_eq!(t, 3);
        assert!(p.is_valid_for(&k7));
    }

    #[test]
    fn oracle_limits() {
        assert_eq!(t_number_oracle(&Graph::new(6).unwrap()).unwrap(), 0);
        assert_eq!(t_number_oracle(&families::complete(4)).unwrap(), 2);
        assert!(t_number_oracle(&Graph::new(15).unwrap()).is_err());
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let (_, p) = t_number(&families::complete(5));
        assert_eq!(p.pieces, [VertexSet::from_iter([0, 1, 2, 3])]);
    }

    fn brute_mic(g: &Graph) -> u32 {
        (0u64..1 << g.n())
            .map(VertexSet)
            .filter(|&s| g.is_independent(s))
            .map(|s| s.iter().map(|v| g.degree(v) as u32).sum())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn mic_examples() {
        assert_eq!(mic(&families::complete(5)).0, 4);
        let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert_eq!(mic(&k33).0, 9);
        let g = families::groetzsch();
        let (value, w) = mic(&g);
        assert_eq!(value, brute_mic(&g));
        assert!(g.is_independent(w.independent_set));
        assert_eq!(w.value, w.independent_set.iter().map(|v| g.degree(v) as u32).sum::<u32>());
    }
}
