//! Seeded random critical extensions.

use orelab_core::coloring::{is_k_colorable, Coloring};
use orelab_core::potential::{critical_extension, ExtensionRecord};
use orelab_core::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly sized random proper subset with at least five vertices, or
/// `None` when `g` has at most five vertices.
pub fn random_subset<R: Rng>(g: &Graph, rng: &mut R) -> Option<VertexSet> {
    let n = g.n();
    if n <= 5 {
        return None;
    }
    let size = rng.gen_range(5..n);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    Some(verts[..size].iter().copied().collect())
}

/// A 4-coloring of `G[R]` found by the solver on a randomly relabeled copy,
/// indexed by the ascending members of `R`.
pub fn random_coloring<R: Rng>(g: &Graph, r: VertexSet, rng: &mut R) -> Option<Coloring> {
    let (sub, _) = g.induced_subgraph(r).ok()?;
    let mut perm: Vec<usize> = (0..sub.n()).collect();
    perm.shuffle(rng);
    let colored = is_k_colorable(&sub.permuted(&perm), 4)?;
    let mut names = [0u8, 1, 2, 3];
    names.shuffle(rng);
    Some(Coloring::new(perm.iter().map(|&p| names[colored.color(p) as usize]).collect()))
}

/// One extension of `g` (which must be 5-critical) along a random subset
/// and a random coloring of it. Passing `r` fixes the subset.
pub fn random_extension<R: Rng>(g: &Graph, r: Option<VertexSet>, rng: &mut R) -> orelab_core::Result<ExtensionRecord> {
    let r = match r {
        Some(r) => r,
        None => random_subset(g, rng).ok_or(orelab_core::Error::SetTooSmall { size: g.n(), min: 6 })?,
    };
    if !r.is_subset(g.vertices()) || r == g.vertices() {
        return Err(orelab_core::Error::NotProperSubset);
    }
    if r.len() < 5 {
        return Err(orelab_core::Error::SetTooSmall { size: r.len(), min: 5 });
    }
    let phi = random_coloring(g, r, rng).ok_or(orelab_core::Error::NotFourColorable)?;
    critical_extension(g, r, &phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use orelab_core::families;

    #[test]
    fn deterministic_per_seed() {
        let g = families::c5_join_k2();
        let a = random_extension(&g, None, &mut rng(42)).unwrap();
        let b = random_extension(&g, None, &mut rng(42)).unwrap();
        assert_eq!(a, b);
        assert!(a.core_size() >= 1);
        assert!(random_extension(&families::complete(5), None, &mut rng(1)).is_err());
        assert_eq!(random_extension(&g, Some(g.vertices()), &mut rng(1)), Err(orelab_core::Error::NotProperSubset));
    }

    #[test]
    fn colorings_are_proper() {
        let g = families::k1_join_groetzsch();
        let mut rng = rng(7);
        for _ in 0..20 {
            let r = random_subset(&g, &mut rng).unwrap();
            let phi = random_coloring(&g, r, &mut rng).unwrap();
            let (sub, _) = g.induced_subgraph(r).unwrap();
            assert!(phi.check(&sub, 4).is_ok());
        }
    }
}
