//! Exact canonical labeling for graphs on at most 64 vertices.
//!
//! Color refinement to an equitable ordered partition, then a depth-first
//! search over individualizations of the first non-singleton cell. Leaves are
//! compared by their relabeled adjacency rows; the largest wins. Automorphisms
//! discovered at equal leaves prune sibling subtrees (orbits of the pointwise
//! stabilizer of the current prefix) and trigger a backjump to the common
//! ancestor with the best leaf.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};

/// Canonical byte string of an isomorphism class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey(Vec<u8>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("CanonKey(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub key: CanonKey,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// Automorphisms found during the search, as vertex maps. They generate
    /// a subgroup of the automorphism group; not necessarily all of it.
    pub automorphisms: Vec<Vec<usize>>,
}

impl CanonicalForm {
    /// The graph relabeled into canonical order.
    pub fn canonical_graph(&self, g: &Graph) -> Graph {
        g.permuted(&self.labeling)
    }
}

pub fn canonical_key(g: &Graph) -> CanonKey {
    canonical_form(g).key
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let mut cells = if n == 0 { Vec::new() } else { alloc::vec![VertexSet::full(n).bits()] };
    refine(g, &mut cells);
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    let mut prefix = Vec::new();
    search.descend(cells, &mut prefix);
    let best = search.best.expect("search tree has at least one leaf");
    let mut key = Vec::with_capacity(1 + 8 * n);
    key.push(n as u8);
    for row in &best.certificate {
        key.extend_from_slice(&row.to_le_bytes());
    }
    CanonicalForm { key: CanonKey(key), labeling: best.labeling, automorphisms: search.automorphisms }
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let cg = canonical_form(g);
    let ch = canonical_form(h);
    if cg.key != ch.key {
        return None;
    }
    let mut inv_h = alloc::vec![0; h.n()];
    for (v, &p) in ch.labeling.iter().enumerate() {
        inv_h[p] = v;
    }
    Some(cg.labeling.iter().map(|&p| inv_h[p]).collect())
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}

struct Leaf {
    certificate: Vec<u64>,
    labeling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Explores the subtree under `prefix`. Returns `Some(depth)` when an
    /// automorphism allows unwinding to the ancestor at `depth`.
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        let depth = prefix.len();
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let mut explored: Vec<usize> = Vec::new();
        for v in VertexSet(cells[target]) {
            if !explored.is_empty() && self.same_orbit(prefix, v, &explored) {
                continue;
            }
            let mut child = cells.clone();
            let rest = child[target] & !(1u64 << v);
            child[target] = 1u64 << v;
            child.insert(target + 1, rest);
            refine(self.g, &mut child);
            prefix.push(v);
            let jump = self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Option<usize> {
        let n = self.g.n();
        let mut labeling = alloc::vec![0usize; n];
        for (pos, &c) in cells.iter().enumerate() {
            labeling[c.trailing_zeros() as usize] = pos;
        }
        let mut certificate = alloc::vec![0u64; n];
        for v in 0..n {
            let mut row = 0u64;
            for u in self.g.neighbors(v) {
                row |= 1u64 << labeling[u];
            }
            certificate[labeling[v]] = row;
        }
        match &self.best {
            Some(best) if certificate < best.certificate => None,
            Some(best) if certificate == best.certificate => {
                let mut inv = alloc::vec![0usize; n];
                for (v, &p) in labeling.iter().enumerate() {
                    inv[p] = v;
                }
                let gamma: Vec<usize> = best.labeling.iter().map(|&p| inv[p]).collect();
                let common = best.path.iter().zip(prefix).take_while(|(a, b)| a == b).count();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(gamma);
                }
                Some(common)
            }
            _ => {
                self.best = Some(Leaf { certificate, labeling, path: prefix.to_vec() });
                None
            }
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (a, &b) in gamma.iter().enumerate() {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra] = rb;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

/// Refines an ordered partition until it is equitable. Every cell is split
/// by the number of neighbors in each splitter cell, sub-cells ordered by
/// increasing count. Depends only on the partition and the graph, never on
/// vertex names, so it commutes with isomorphisms.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let adj = g.adjacency();
    let mut scratch: Vec<(u32, usize)> = Vec::new();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell.count_ones() == 1 {
                    i += 1;
                    continue;
                }
                scratch.clear();
                scratch.extend(VertexSet(cell).iter().map(|v| ((adj[v] & splitter).count_ones(), v)));
                let lo = scratch.iter().map(|p| p.0).min().unwrap_or(0);
                if scratch.iter().all(|p| p.0 == lo) {
                    i += 1;
                    continue;
                }
                scratch.sort_unstable();
                let mut parts: Vec<u64> = Vec::new();
                let mut current = scratch[0].0;
                let mut acc = 0u64;
                for &(count, v) in scratch.iter() {
                    if count != current {
                        parts.push(acc);
                        acc = 0;
                        current = count;
                    }
                    acc |= 1u64 << v;
                }
                parts.push(acc);
                let added = parts.len();
                cells.splice(i..=i, parts);
                i += added;
                changed = true;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn relabelings_of_k5_agree() {
        let k5 = families::complete(5);
        let shuffled = k5.permuted(&[3, 1, 4, 0, 2]);
        assert_eq!(canonical_key(&k5), canonical_key(&shuffled));
    }

    #[test]
    fn k5_and_c5_differ() {
        assert_ne!(canonical_key(&families::complete(5)), canonical_key(&families::cycle(5)));
    }

    #[test]
    fn isomorphism_maps_edges() {
        let g = families::groetzsch();
        let perm = [10, 3, 7, 0, 1, 9, 2, 8, 4, 6, 5];
        let h = g.permuted(&perm);
        let iso = isomorphism(&g, &h).unwrap();
        for (u, v) in g.edges() {
            assert!(h.has_edge(iso[u], iso[v]));
        }
    }

    #[test]
    fn edgeless_and_complete_large() {
        let e = Graph::new(64).unwrap();
        let f = canonical_form(&e);
        assert_eq!(f.key.as_bytes()[0], 64);
        let k = families::complete(40);
        assert_eq!(canonical_key(&k), canonical_key(&k.permuted(&(0..40).rev().collect::<Vec<_>>())));
    }

    #[test]
    fn automorphisms_are_automorphisms() {
        let g = families::mycielski_groetzsch();
        let f = canonical_form(&g);
        for gamma in &f.automorphisms {
            for (u, v) in g.edges() {
                assert!(g.has_edge(gamma[u], gamma[v]));
            }
        }
    }
}
