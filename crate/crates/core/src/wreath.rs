//! Littlewood-Richardson and one-step branching rules for `F wr S_n`.
//!
//! The rules depend on the group `F` only through the number `l` of its
//! irreducible representations and their dimensions, so everything here is
//! parameterized by an explicit `dims` slice (index 0 is the trivial
//! representation and must have dimension 1).

use alloc::collections::btree_map;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::MultiPartition;
use crate::tableaux::{lr_coefficient, lr_expand};
use crate::{Error, Result};

/// A label for an irreducible of `F`: its (1-based) index and dimension.
/// Index 1 is reserved for the trivial representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IrrLabel {
    index: usize,
    dim: u32,
}

impl IrrLabel {
    pub fn new(index: usize, dim: u32) -> Result<Self> {
        if index == 0 || dim == 0 || (index == 1 && dim != 1) {
            return Err(Error::InvalidDims);
        }
        Ok(IrrLabel { index, dim })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }
}

/// A non-negative integer combination of multipartitions, all sharing one
/// component count. Absent keys mean multiplicity 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    terms: BTreeMap<MultiPartition, u64>,
}

impl Decomposition {
    pub fn new() -> Self {
        Decomposition::default()
    }

    pub fn add(&mut self, mp: MultiPartition, mult: u64) {
        if mult > 0 {
            *self.terms.entry(mp).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, mp: &MultiPartition) -> u64 {
        self.terms.get(mp).copied().unwrap_or(0)
    }

    /// Terms in canonical multipartition order.
    pub fn iter(&self) -> btree_map::Iter<'_, MultiPartition, u64> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &MultiPartition> {
        self.terms.keys()
    }
}

impl FromIterator<(MultiPartition, u64)> for Decomposition {
    fn from_iter<T: IntoIterator<Item = (MultiPartition, u64)>>(iter: T) -> Self {
        let mut d = Decomposition::new();
        for (mp, m) in iter {
            d.add(mp, m);
        }
        d
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (mp, mult)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{mult} x {mp}")?;
        }
        Ok(())
    }
}

fn check_dims(dims: &[u32], l: usize) -> Result<()> {
    if dims.len() != l || dims.first() != Some(&1) || dims.contains(&0) {
        return Err(Error::InvalidDims);
    }
    Ok(())
}

/// The wreath-product Littlewood-Richardson coefficient
/// `C^Gamma_{Lambda,Delta}`: the product of the componentwise classical
/// coefficients.
pub fn wreath_lr_coefficient(
    lambda: &MultiPartition,
    delta: &MultiPartition,
    gamma: &MultiPartition,
) -> Result<u64> {
    lambda.check_same_len(delta)?;
    lambda.check_same_len(gamma)?;
    let mut product = 1u64;
    for i in 0..lambda.len() {
        product *= lr_coefficient(lambda.component(i), delta.component(i), gamma.component(i));
        if product == 0 {
            break;
        }
    }
    Ok(product)
}

/// Decomposition of the induction of `Phi_Lambda (x) Phi_Delta` from
/// `F wr S_k x F wr S_r` to `F wr S_{k+r}`.
///
/// The support consists exactly of the `Gamma` whose componentwise classical
/// expansions are all non-trivial; only the composition
/// `shape(Lambda) + shape(Delta)` occurs.
pub fn wreath_lr_expand(lambda: &MultiPartition, delta: &MultiPartition) -> Result<Decomposition> {
    lambda.check_same_len(delta)?;
    let per_component: Vec<_> = (0..lambda.len())
        .map(|i| lr_expand(lambda.component(i), delta.component(i)))
        .collect();
    let mut out = Decomposition::new();
    let mut stack = Vec::with_capacity(lambda.len());
    cartesian(&per_component, &mut stack, 1, &mut out);
    Ok(out)
}

fn cartesian(
    per_component: &[BTreeMap<crate::Partition, u64>],
    chosen: &mut Vec<crate::Partition>,
    mult: u64,
    out: &mut Decomposition,
) {
    if chosen.len() == per_component.len() {
        out.add(MultiPartition::new(chosen.clone()), mult);
        return;
    }
    let i = chosen.len();
    for (gamma, &c) in &per_component[i] {
        chosen.push(gamma.clone());
        cartesian(per_component, chosen, mult * c, out);
        chosen.pop();
    }
}

/// The classical branching rule for `F wr S_n <= F wr S_{n+1}`:
/// the decomposition of the induced representation of `Phi_Lambda`.
///
/// For every component `i` and every way of adding one box to that
/// component, the resulting multipartition occurs with multiplicity
/// `dims[i]`.
pub fn induce_one_step(lambda: &MultiPartition, dims: &[u32]) -> Result<Decomposition> {
    check_dims(dims, lambda.len())?;
    let mut out = Decomposition::new();
    for (i, &dim) in dims.iter().enumerate() {
        for gamma in lambda.component(i).y_plus() {
            out.add(lambda.with_component(i, gamma), dim as u64);
        }
    }
    Ok(out)
}

/// The mirror rule for restriction along `F wr S_{n-1} <= F wr S_n`, using
/// box removals. Errors on weight 0.
pub fn restrict_one_step(lambda: &MultiPartition, dims: &[u32]) -> Result<Decomposition> {
    check_dims(dims, lambda.len())?;
    if lambda.weight() == 0 {
        return Err(Error::EmptyRestriction);
    }
    let mut out = Decomposition::new();
    for (i, &dim) in dims.iter().enumerate() {
        for gamma in lambda.component(i).y_minus() {
            out.add(lambda.with_component(i, gamma), dim as u64);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mp(components: &[&[u32]]) -> MultiPartition {
        MultiPartition::new(components.iter().map(|c| p(c)).collect::<Vec<_>>())
    }

    #[test]
    fn coefficient_examples() {
        // Reduces to the classical c^{[4,3,1]}_{[2,1],[3,2]} = 2.
        assert_eq!(
            wreath_lr_coefficient(
                &mp(&[&[2, 1], &[]]),
                &mp(&[&[3, 2], &[]]),
                &mp(&[&[4, 3, 1], &[]])
            )
            .unwrap(),
            2
        );
        let lam = mp(&[&[3, 1], &[2], &[1]]);
        assert_eq!(
            wreath_lr_coefficient(&lam, &MultiPartition::empty(3), &lam).unwrap(),
            1
        );
        assert_eq!(
            wreath_lr_coefficient(&mp(&[&[1], &[1]]), &mp(&[&[1], &[]]), &mp(&[&[2], &[1]]))
                .unwrap(),
            1
        );
        assert!(wreath_lr_coefficient(&mp(&[&[1]]), &mp(&[&[1], &[]]), &mp(&[&[2]])).is_err());
    }

    #[test]
    fn expand_examples() {
        let got = wreath_lr_expand(&mp(&[&[1], &[]]), &mp(&[&[1], &[]])).unwrap();
        let expected: Decomposition = [(mp(&[&[2], &[]]), 1), (mp(&[&[1, 1], &[]]), 1)]
            .into_iter()
            .collect();
        assert_eq!(got, expected);

        let got = wreath_lr_expand(&mp(&[&[], &[1]]), &mp(&[&[1], &[]])).unwrap();
        let expected: Decomposition = [(mp(&[&[1], &[1]]), 1)].into_iter().collect();
        assert_eq!(got, expected);

        // l = 1 reduces to the classical expansion.
        let got = wreath_lr_expand(&mp(&[&[2, 1]]), &mp(&[&[1]])).unwrap();
        for (gamma, mult) in lr_expand(&p(&[2, 1]), &p(&[1])) {
            assert_eq!(got.multiplicity(&MultiPartition::new(vec![gamma])), mult);
        }
        assert_eq!(got.len(), 3);
    }

    #[test]
    fn induce_paper_example() {
        // Ind from S3 wr S8 to S3 wr S9 of Phi_([2],[2,1],[1,1,1]),
        // dims of Irr S3 = (1, 2, 1).
        let got = induce_one_step(&mp(&[&[2], &[2, 1], &[1, 1, 1]]), &[1, 2, 1]).unwrap();
        let expected: Decomposition = [
            (mp(&[&[2, 1], &[2, 1], &[1, 1, 1]]), 1),
            (mp(&[&[3], &[2, 1], &[1, 1, 1]]), 1),
            (mp(&[&[2], &[3, 1], &[1, 1, 1]]), 2),
            (mp(&[&[2], &[2, 2], &[1, 1, 1]]), 2),
            (mp(&[&[2], &[2, 1, 1], &[1, 1, 1]]), 2),
            (mp(&[&[2], &[2, 1], &[2, 1, 1]]), 1),
            (mp(&[&[2], &[2, 1], &[1, 1, 1, 1]]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn induce_from_empty_gives_regular_rep_of_f() {
        let dims = [1, 2, 3];
        let got = induce_one_step(&MultiPartition::empty(3), &dims).unwrap();
        assert_eq!(got.len(), 3);
        for (i, &dim) in dims.iter().enumerate() {
            assert_eq!(
                got.multiplicity(&MultiPartition::single_box(3, i)),
                dim as u64
            );
        }
    }

    #[test]
    fn induce_l1_is_classical_branching() {
        let got = induce_one_step(&mp(&[&[2, 1]]), &[1]).unwrap();
        let expected: Decomposition = [
            (mp(&[&[3, 1]]), 1),
            (mp(&[&[2, 2]]), 1),
            (mp(&[&[2, 1, 1]]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn restrict_examples() {
        let got = restrict_one_step(&mp(&[&[2, 1]]), &[1]).unwrap();
        let expected: Decomposition = [(mp(&[&[2]]), 1), (mp(&[&[1, 1]]), 1)]
            .into_iter()
            .collect();
        assert_eq!(got, expected);

        let got = restrict_one_step(&mp(&[&[1], &[]]), &[1, 5]).unwrap();
        let expected: Decomposition = [(MultiPartition::empty(2), 1)].into_iter().collect();
        assert_eq!(got, expected);

        let got = restrict_one_step(&mp(&[&[1], &[1]]), &[1, 2]).unwrap();
        let expected: Decomposition = [(mp(&[&[], &[1]]), 1), (mp(&[&[1], &[]]), 2)]
            .into_iter()
            .collect();
        assert_eq!(got, expected);

        assert!(restrict_one_step(&MultiPartition::empty(2), &[1, 2]).is_err());
    }

    #[test]
    fn bad_dims_rejected() {
        assert!(induce_one_step(&mp(&[&[1], &[]]), &[1]).is_err());
        assert!(induce_one_step(&mp(&[&[1], &[]]), &[2, 1]).is_err());
        assert!(IrrLabel::new(1, 2).is_err());
        assert!(IrrLabel::new(2, 3).is_ok());
    }
}
