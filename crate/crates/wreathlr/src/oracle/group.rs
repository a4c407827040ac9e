//! Finite groups given by explicit multiplication tables.

use std::sync::Arc;

use super::{OracleError, Result};

/// A finite group: elements are indices `0..order`, multiplication is a full
/// table. The group laws are checked at construction.
#[derive(Debug)]
pub struct GroupData {
    order: usize,
    /// Flat row-major table: `mul[a * order + b]` is the product `a * b`.
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl GroupData {
    /// Build a group from its multiplication table, verifying closure,
    /// associativity, identity and inverses.
    pub fn from_table(order: usize, mul: Vec<usize>) -> Result<Arc<Self>> {
        if order == 0 || mul.len() != order * order {
            return Err(OracleError::InvalidGroup("table has wrong size"));
        }
        if mul.iter().any(|&x| x >= order) {
            return Err(OracleError::InvalidGroup("entry out of range"));
        }
        let at = |a: usize, b: usize| mul[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(OracleError::InvalidGroup("no identity element"))?;
        let mut inv = vec![usize::MAX; order];
        for (a, slot) in inv.iter_mut().enumerate() {
            *slot = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(OracleError::InvalidGroup("missing inverse"))?;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(OracleError::InvalidGroup("not associative"));
                    }
                }
            }
        }
        Ok(Arc::new(GroupData {
            order,
            mul,
            identity,
            inv,
        }))
    }

    /// Like [`Self::from_table`] but skips the cubic associativity check.
    /// Used for products and wreath products of already-validated groups.
    pub(crate) fn from_table_unchecked(order: usize, mul: Vec<usize>) -> Result<Arc<Self>> {
        debug_assert_eq!(mul.len(), order * order);
        let at = |a: usize, b: usize| mul[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(OracleError::InvalidGroup("no identity element"))?;
        let mut inv = vec![usize::MAX; order];
        for (a, slot) in inv.iter_mut().enumerate() {
            *slot = (0..order)
                .find(|&b| at(a, b) == identity)
                .ok_or(OracleError::InvalidGroup("missing inverse"))?;
        }
        Ok(Arc::new(GroupData {
            order,
            mul,
            identity,
            inv,
        }))
    }

    /// The group with one element.
    pub fn trivial() -> Arc<Self> {
        GroupData::from_table(1, vec![0]).expect("trivial group is a group")
    }

    /// The cyclic group of order `k`, generator at index 1.
    pub fn cyclic(k: usize) -> Arc<Self> {
        assert!(k >= 1);
        let mut mul = vec![0; k * k];
        for a in 0..k {
            for b in 0..k {
                mul[a * k + b] = (a + b) % k;
            }
        }
        GroupData::from_table(k, mul).expect("cyclic table is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// Verify that `map` (indexed by elements of `h`) is an injective
    /// homomorphism from `h` into `self`.
    pub fn check_embedding(&self, h: &GroupData, map: &[usize]) -> Result<()> {
        if map.len() != h.order() || map.iter().any(|&x| x >= self.order) {
            return Err(OracleError::NotAnEmbedding);
        }
        let mut seen = vec![false; self.order];
        for &x in map {
            if seen[x] {
                return Err(OracleError::NotAnEmbedding);
            }
            seen[x] = true;
        }
        for a in h.elements() {
            for b in h.elements() {
                if self.mul(map[a], map[b]) != map[h.mul(a, b)] {
                    return Err(OracleError::NotAnEmbedding);
                }
            }
        }
        Ok(())
    }
}

/// A direct product of finitely many groups, with mixed-radix element
/// indexing (the last factor varies fastest).
#[derive(Debug, Clone)]
pub struct ProductGroup {
    group: Arc<GroupData>,
    factors: Vec<Arc<GroupData>>,
}

impl ProductGroup {
    pub fn new(factors: Vec<Arc<GroupData>>) -> Result<Self> {
        assert!(!factors.is_empty());
        let order: usize = factors.iter().map(|f| f.order()).product();
        let mut mul = vec![0usize; order * order];
        let mut a_parts = vec![0usize; factors.len()];
        let mut b_parts = vec![0usize; factors.len()];
        for a in 0..order {
            Self::decode_into(&factors, a, &mut a_parts);
            for b in 0..order {
                Self::decode_into(&factors, b, &mut b_parts);
                let product: Vec<usize> = factors
                    .iter()
                    .zip(a_parts.iter().zip(&b_parts))
                    .map(|(f, (&x, &y))| f.mul(x, y))
                    .collect();
                mul[a * order + b] = Self::encode_in(&factors, &product);
            }
        }
        let group = GroupData::from_table_unchecked(order, mul)?;
        Ok(ProductGroup { group, factors })
    }

    pub fn group(&self) -> &Arc<GroupData> {
        &self.group
    }

    pub fn factors(&self) -> &[Arc<GroupData>] {
        &self.factors
    }

    fn decode_into(factors: &[Arc<GroupData>], mut idx: usize, out: &mut [usize]) {
        for (i, f) in factors.iter().enumerate().rev() {
            out[i] = idx % f.order();
            idx /= f.order();
        }
    }

    fn encode_in(factors: &[Arc<GroupData>], parts: &[usize]) -> usize {
        let mut idx = 0;
        for (f, &p) in factors.iter().zip(parts) {
            idx = idx * f.order() + p;
        }
        idx
    }

    /// Factor indices of the product element `idx`.
    pub fn decode(&self, idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        Self::decode_into(&self.factors, idx, &mut out);
        out
    }

    /// Product element index from factor indices.
    pub fn encode(&self, parts: &[usize]) -> usize {
        Self::encode_in(&self.factors, parts)
    }
}
