//! The ordinary quiver of the category `F wr FI_n`.
//!
//! Vertices are the multi-Young diagrams with `l` components and at most `n`
//! boxes. There is an arrow from `Lambda` to `Delta` exactly when `Delta` is
//! obtained from `Lambda` by adding one box to the first component; arrows
//! are directed from the smaller diagram to the larger one.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::partition::{multipartitions_of, MultiPartition, Partition};
use crate::wreath::wreath_lr_expand;
use crate::{Error, Result};

/// A directed multigraph on multipartition vertices. For `F wr FI_n` there is
/// at most one arrow per ordered vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    n: u32,
    l: usize,
    vertices: Vec<MultiPartition>,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Vertices sorted by total weight, then canonical multipartition order.
    pub fn vertices(&self) -> &[MultiPartition] {
        &self.vertices
    }

    /// Arrows as (source index, target index) pairs into [`Self::vertices`].
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// The key `(lambda_2, ..., lambda_l)` determining the connected
    /// component of a vertex.
    pub fn component_key(mp: &MultiPartition) -> &[Partition] {
        &mp.components()[1..]
    }

    /// Number of weakly connected components of the underlying undirected
    /// graph.
    pub fn connected_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &(a, b) in &self.arrows {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra != rb {
                parent[ra] = rb;
            }
        }
        (0..self.vertices.len())
            .filter(|&v| find(&mut parent, v) == v)
            .count()
    }
}

/// Is there an arrow from `lambda` to `delta`? True iff `delta` has one more
/// box, gained in the first component, and all other components agree.
pub fn arrow_exists(lambda: &MultiPartition, delta: &MultiPartition) -> Result<bool> {
    lambda.check_same_len(delta)?;
    if delta.weight() != lambda.weight() + 1 {
        return Ok(false);
    }
    if lambda.components()[1..] != delta.components()[1..] {
        return Ok(false);
    }
    Ok(lambda.component(0).y_plus().contains(delta.component(0)))
}

/// Build the quiver of `F wr FI_n` for a group with `l` irreducibles.
pub fn build_quiver(n: u32, l: usize) -> Quiver {
    assert!(l >= 1, "component count must be positive");
    let mut vertices = Vec::new();
    for k in 0..=n {
        vertices.extend(multipartitions_of(k, l));
    }
    let mut arrows = Vec::new();
    // Vertices are grouped by weight, so all arrow targets of a weight-k
    // vertex sit in the k+1 block.
    for (src, lambda) in vertices.iter().enumerate() {
        for (offset, delta) in vertices[src + 1..].iter().enumerate() {
            if delta.weight() == lambda.weight() + 1
                && arrow_exists(lambda, delta).expect("equal component counts")
            {
                arrows.push((src, src + 1 + offset));
            }
        }
    }
    Quiver {
        n,
        l,
        vertices,
        arrows,
    }
}

/// The arrow targets of `Lambda`, computed from the branching rule instead of
/// the box condition: the support of the wreath Littlewood-Richardson
/// expansion of `Phi_Lambda` against the trivial representation of `F`,
/// which corresponds to the multipartition `([1], {}, ..., {})`.
pub fn arrows_via_branching(
    lambda: &MultiPartition,
    dims: &[u32],
) -> Result<BTreeSet<MultiPartition>> {
    if dims.len() != lambda.len() || dims.first() != Some(&1) {
        return Err(Error::InvalidDims);
    }
    let trivial = MultiPartition::single_box(lambda.len(), 0);
    let expansion = wreath_lr_expand(lambda, &trivial)?;
    Ok(expansion.support().cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mp(components: &[&[u32]]) -> MultiPartition {
        MultiPartition::new(components.iter().map(|c| p(c)).collect::<Vec<_>>())
    }

    #[test]
    fn arrow_rule_examples() {
        assert!(arrow_exists(&mp(&[&[1], &[], &[]]), &mp(&[&[2], &[], &[]])).unwrap());
        assert!(arrow_exists(&mp(&[&[], &[1], &[]]), &mp(&[&[1], &[1], &[]])).unwrap());
        assert!(!arrow_exists(&mp(&[&[], &[], &[]]), &mp(&[&[], &[1], &[]])).unwrap());
        assert!(!arrow_exists(&mp(&[&[2], &[], &[]]), &mp(&[&[1], &[], &[]])).unwrap());
        assert!(arrow_exists(&mp(&[&[1]]), &mp(&[&[1], &[]])).is_err());
    }

    #[test]
    fn s3_fi2_figure() {
        let q = build_quiver(2, 3);
        assert_eq!(q.vertices().len(), 13);
        assert_eq!(q.arrows().len(), 5);
        assert_eq!(q.connected_components(), 8);
    }

    #[test]
    fn trivial_quiver() {
        let q = build_quiver(0, 4);
        assert_eq!(q.vertices(), &[MultiPartition::empty(4)]);
        assert!(q.arrows().is_empty());
        assert_eq!(q.connected_components(), 1);
    }

    #[test]
    fn quiver_of_fi2() {
        let q = build_quiver(2, 1);
        assert_eq!(
            q.vertices(),
            &[mp(&[&[]]), mp(&[&[1]]), mp(&[&[2]]), mp(&[&[1, 1]])]
        );
        let arrows: BTreeSet<_> = q
            .arrows()
            .iter()
            .map(|&(a, b)| (q.vertices()[a].clone(), q.vertices()[b].clone()))
            .collect();
        let expected: BTreeSet<_> = [
            (mp(&[&[]]), mp(&[&[1]])),
            (mp(&[&[1]]), mp(&[&[2]])),
            (mp(&[&[1]]), mp(&[&[1, 1]])),
        ]
        .into_iter()
        .collect();
        assert_eq!(arrows, expected);
        assert_eq!(q.connected_components(), 1);
    }

    #[test]
    fn branching_route_examples() {
        let got = arrows_via_branching(&mp(&[&[1], &[], &[]]), &[1, 2, 1]).unwrap();
        let expected: BTreeSet<_> = [mp(&[&[2], &[], &[]]), mp(&[&[1, 1], &[], &[]])]
            .into_iter()
            .collect();
        assert_eq!(got, expected);

        let got = arrows_via_branching(&MultiPartition::empty(2), &[1, 1]).unwrap();
        let expected: BTreeSet<_> = [mp(&[&[1], &[]])].into_iter().collect();
        assert_eq!(got, expected);

        let got = arrows_via_branching(&mp(&[&[], &[1]]), &[1, 1]).unwrap();
        let expected: BTreeSet<_> = [mp(&[&[1], &[1]])].into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn branching_route_matches_box_rule() {
        for l in 1..=3usize {
            let dims: Vec<u32> = core::iter::once(1)
                .chain((1..l as u32).map(|_| 1))
                .collect();
            for n in 0..=4u32 {
                for lambda in multipartitions_of(n, l) {
                    let via_branch = arrows_via_branching(&lambda, &dims).unwrap();
                    for k in 0..=(n + 1) {
                        for delta in multipartitions_of(k, l) {
                            let direct = arrow_exists(&lambda, &delta).unwrap();
                            assert_eq!(direct, via_branch.contains(&delta));
                        }
                    }
                }
            }
        }
    }
}
