#![allow(dead_code)]

use orelab_core::{Graph, VertexSet};
use proptest::prelude::*;

/// Random simple graphs on `1..=max_n` vertices with edge probability drawn
/// per graph.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph_between(1, max_n)
}

pub fn graph_between(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, 0u32..=100).prop_flat_map(|(n, density)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(0u32..100, pairs).prop_map(move |rolls| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if rolls[k] < density {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Backtracking isomorphism test matching vertices in index order.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: VertexSet) -> bool {
        let v = map.len();
        if v == g.n() {
            return true;
        }
        for w in 0..h.n() {
            if used.contains(w) || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map.push(w);
                if extend(g, h, map, used.with(w)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    g.n() == h.n() && g.edge_count() == h.edge_count() && extend(g, h, &mut Vec::new(), VertexSet::EMPTY)
}

/// Calls `f` on every assignment of `k` colors to `n` vertices until it
/// returns true.
pub fn any_assignment(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut colors = vec![0usize; n];
    loop {
        if f(&colors) {
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

pub fn brute_colorable(g: &Graph, k: usize) -> bool {
    if g.n() == 0 {
        return true;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    any_assignment(g.n(), k, |c| edges.iter().all(|&(u, v)| c[u] != c[v]))
}
