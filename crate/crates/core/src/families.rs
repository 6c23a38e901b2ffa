//! Named graphs used as fixtures and corpus witnesses.

use crate::graph::Graph;

/// `K_n`. Panics if `n > 64`.
pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("n <= 64")
}

/// `C_n` on `0..n` in cyclic order. Panics unless `3 <= n <= 64`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("n <= 64")
}

/// `W_k`: a hub (vertex `k`) joined to the cycle `C_k` on `0..k`.
pub fn wheel(k: usize) -> Graph {
    cycle(k).join(&complete(1)).expect("k < 64")
}

/// Mycielskian: vertices `v_i = i`, shadows `u_i = n + i`, apex `2n`.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = alloc::vec::Vec::new();
    for (a, b) in g.edges() {
        edges.push((a, b));
        edges.push((n + a, b));
        edges.push((a, n + b));
    }
    for i in 0..n {
        edges.push((n + i, 2 * n));
    }
    Graph::from_edges(2 * n + 1, edges).expect("mycielskian fits in 64 vertices")
}

/// The Grötzsch graph: triangle-free, 4-chromatic, 11 vertices, 20 edges.
pub fn groetzsch() -> Graph {
    mycielskian(&cycle(5))
}

/// Mycielskian of the Grötzsch graph: triangle-free and 5-critical on 23
/// vertices and 71 edges.
pub fn mycielski_groetzsch() -> Graph {
    mycielskian(&groetzsch())
}

/// `C5 ∨ K2`: the cycle on `0..5` and two adjacent apexes `5, 6`.
pub fn c5_join_k2() -> Graph {
    cycle(5).join(&complete(2)).expect("7 vertices")
}

/// `K1 ∨ Grötzsch` with the apex as vertex 0.
pub fn k1_join_groetzsch() -> Graph {
    complete(1).join(&groetzsch()).expect("12 vertices")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!((complete(5).n(), complete(5).edge_count()), (5, 10));
        assert_eq!((c5_join_k2().n(), c5_join_k2().edge_count()), (7, 16));
        assert_eq!((groetzsch().n(), groetzsch().edge_count()), (11, 20));
        assert_eq!((k1_join_groetzsch().n(), k1_join_groetzsch().edge_count()), (12, 31));
        let m = mycielski_groetzsch();
        assert_eq!((m.n(), m.edge_count()), (23, 71));
        assert!(groetzsch().is_triangle_free());
        assert!(m.is_triangle_free());
    }
}
