//! The wreath product `F wr S_n` as an explicit group.
//!
//! An element is a pair `(f, pi)` of a function `f: {0..n} -> F` and a
//! permutation `pi` of `{0..n}`. The product is
//! `(f, pi) * (f', pi') = (x -> f(x) * f'(pi^-1 x), pi pi')`.

use std::collections::HashMap;
use std::sync::Arc;

use super::group::{GroupData, ProductGroup};
use super::{OracleError, Result};

/// `F wr S_n` with element indexing `idx = f_idx * n! + perm_idx`, where
/// `f_idx` reads the tuple `f` in base `|F|` (position 0 most significant)
/// and permutations are ranked in lexicographic order.
#[derive(Debug)]
pub struct WreathGroup {
    group: Arc<GroupData>,
    base: Arc<GroupData>,
    n: usize,
    perms: Vec<Vec<usize>>,
    perm_index: HashMap<Vec<usize>, usize>,
}

/// All permutations of `{0..n}` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_lex(&mut items, 0, &mut out);
    out
}

fn heap_lex(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        let picked = items.remove(i);
        items.insert(k, picked);
        heap_lex(items, k + 1, out);
        let picked = items.remove(k);
        items.insert(i, picked);
    }
}

impl WreathGroup {
    pub fn new(base: Arc<GroupData>, n: usize, budget: usize) -> Result<Self> {
        let n_fact: usize = (1..=n).product::<usize>().max(1);
        let order = base
            .order()
            .checked_pow(n as u32)
            .and_then(|p| p.checked_mul(n_fact))
            .ok_or(OracleError::BudgetExceeded {
                order: usize::MAX,
                budget,
            })?;
        if order > budget {
            return Err(OracleError::BudgetExceeded { order, budget });
        }
        let perms = permutations(n);
        let perm_index: HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();

        let mut shell = WreathGroup {
            group: GroupData::trivial(), // placeholder until the table is built
            base,
            n,
            perms,
            perm_index,
        };
        let mut mul = vec![0usize; order * order];
        let mut fa = vec![0usize; n];
        let mut fb = vec![0usize; n];
        let mut fc = vec![0usize; n];
        for a in 0..order {
            let pa = shell.decode_into(a, &mut fa);
            for b in 0..order {
                let pb = shell.decode_into(b, &mut fb);
                let perm_a = &shell.perms[pa];
                let perm_b = &shell.perms[pb];
                // inverse of perm_a applied pointwise: f''(x) = fa(x) * fb(pa^-1 x)
                for x in 0..n {
                    fc[perm_a[x]] = shell.base.mul(fa[perm_a[x]], fb[x]);
                }
                let composed: Vec<usize> = (0..n).map(|x| perm_a[perm_b[x]]).collect();
                let pc = shell.perm_index[&composed];
                mul[a * order + b] = shell.encode_parts(&fc, pc);
            }
        }
        shell.group = GroupData::from_table_unchecked(order, mul)?;
        Ok(shell)
    }

    pub fn group(&self) -> &Arc<GroupData> {
        &self.group
    }

    pub fn base(&self) -> &Arc<GroupData> {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    fn n_fact(&self) -> usize {
        self.perms.len()
    }

    fn decode_into(&self, idx: usize, f: &mut [usize]) -> usize {
        let perm = idx % self.n_fact();
        let mut fi = idx / self.n_fact();
        for x in (0..self.n).rev() {
            f[x] = fi % self.base.order();
            fi /= self.base.order();
        }
        perm
    }

    fn encode_parts(&self, f: &[usize], perm_idx: usize) -> usize {
        let mut fi = 0;
        for &v in f {
            fi = fi * self.base.order() + v;
        }
        fi * self.n_fact() + perm_idx
    }

    /// Decode an element index into its `F`-tuple and permutation.
    pub fn element(&self, idx: usize) -> (Vec<usize>, &[usize]) {
        let mut f = vec![0; self.n];
        let p = self.decode_into(idx, &mut f);
        (f, &self.perms[p])
    }

    /// Element index of `(f, perm)`.
    pub fn index_of(&self, f: &[usize], perm: &[usize]) -> usize {
        self.encode_parts(f, self.perm_index[perm])
    }

    /// Embedding `F wr S_n <= F wr S_m` (`m >= n`): pad `f` with the
    /// identity of `F` and let the permutation fix the extra points.
    pub fn embed_into(&self, big: &WreathGroup) -> Result<Vec<usize>> {
        assert!(big.n >= self.n);
        let e = self.base.identity();
        let map = (0..self.order())
            .map(|idx| {
                let (f, perm) = self.element(idx);
                let mut bf = vec![e; big.n];
                bf[..self.n].copy_from_slice(&f);
                let mut bperm: Vec<usize> = (0..big.n).collect();
                bperm[..self.n].copy_from_slice(perm);
                big.index_of(&bf, &bperm)
            })
            .collect::<Vec<_>>();
        big.group.check_embedding(&self.group, &map)?;
        Ok(map)
    }

    /// Embedding of a product `F wr S_{n_1} x ... x F wr S_{n_k}` into
    /// `F wr S_n` (`n = sum n_i`) placing factor `i` on the block of
    /// positions after the first `n_1 + ... + n_{i-1}`.
    pub fn embed_block_product(
        factors: &[&WreathGroup],
        product: &ProductGroup,
        big: &WreathGroup,
    ) -> Result<Vec<usize>> {
        let total: usize = factors.iter().map(|w| w.n).sum();
        assert_eq!(total, big.n);
        assert_eq!(product.factors().len(), factors.len());
        let map = (0..product.group().order())
            .map(|idx| {
                let parts = product.decode(idx);
                let mut bf = vec![big.base.identity(); big.n];
                let mut bperm: Vec<usize> = (0..big.n).collect();
                let mut offset = 0;
                for (w, &part) in factors.iter().zip(&parts) {
                    let (f, perm) = w.element(part);
                    for x in 0..w.n {
                        bf[offset + x] = f[x];
                        bperm[offset + x] = offset + perm[x];
                    }
                    offset += w.n;
                }
                big.index_of(&bf, &bperm)
            })
            .collect::<Vec<_>>();
        big.group.check_embedding(product.group(), &map)?;
        Ok(map)
    }
}

/// The symmetric group `S_n` as the wreath product of the trivial group,
/// giving access to the permutation of every element index.
pub fn symmetric_group(n: usize, budget: usize) -> Result<WreathGroup> {
    WreathGroup::new(GroupData::trivial(), n, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_BUDGET;

    #[test]
    fn orders() {
        let c2 = GroupData::cyclic(2);
        assert_eq!(
            WreathGroup::new(c2.clone(), 2, DEFAULT_BUDGET)
                .unwrap()
                .order(),
            8
        );
        assert_eq!(
            WreathGroup::new(c2.clone(), 3, DEFAULT_BUDGET)
                .unwrap()
                .order(),
            48
        );
        let c6 = GroupData::cyclic(6);
        assert_eq!(WreathGroup::new(c6, 2, DEFAULT_BUDGET).unwrap().order(), 72);
    }

    #[test]
    fn budget_is_enforced() {
        let c6 = GroupData::cyclic(6);
        assert!(matches!(
            WreathGroup::new(c6, 4, DEFAULT_BUDGET),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn multiplication_law_matches_definition() {
        // Check the displayed law on all pairs of C2 wr S3.
        let c2 = GroupData::cyclic(2);
        let w = WreathGroup::new(c2.clone(), 3, DEFAULT_BUDGET).unwrap();
        for a in 0..w.order() {
            let (fa, pa) = w.element(a);
            let pa = pa.to_vec();
            for b in 0..w.order() {
                let (fb, pb) = w.element(b);
                let product = w.group().mul(a, b);
                let (fp, pp) = w.element(product);
                let inv_a: Vec<usize> = {
                    let mut inv = vec![0; 3];
                    for x in 0..3 {
                        inv[pa[x]] = x;
                    }
                    inv
                };
                for x in 0..3 {
                    assert_eq!(fp[x], c2.mul(fa[x], fb[inv_a[x]]));
                }
                for x in 0..3 {
                    assert_eq!(pp[x], pa[pb[x]]);
                }
            }
        }
    }

    #[test]
    fn symmetric_group_is_valid() {
        let s3 = symmetric_group(3, DEFAULT_BUDGET).unwrap();
        assert_eq!(s3.order(), 6);
        // identity is index of (identity tuple, identity perm)
        let (f, p) = s3.element(s3.group().identity());
        assert!(f.iter().all(|&x| x == 0));
        assert_eq!(p, &[0, 1, 2]);
    }

    #[test]
    fn standard_embedding() {
        let c2 = GroupData::cyclic(2);
        let w2 = WreathGroup::new(c2.clone(), 2, DEFAULT_BUDGET).unwrap();
        let w3 = WreathGroup::new(c2, 3, DEFAULT_BUDGET).unwrap();
        let map = w2.embed_into(&w3).unwrap();
        assert_eq!(map.len(), 8);
    }

    #[test]
    fn block_product_embedding() {
        let c2 = GroupData::cyclic(2);
        let w1 = WreathGroup::new(c2.clone(), 1, DEFAULT_BUDGET).unwrap();
        let w2 = WreathGroup::new(c2.clone(), 2, DEFAULT_BUDGET).unwrap();
        let w3 = WreathGroup::new(c2, 3, DEFAULT_BUDGET).unwrap();
        let prod = ProductGroup::new(vec![w2.group().clone(), w1.group().clone()]).unwrap();
        let map = WreathGroup::embed_block_product(&[&w2, &w1], &prod, &w3).unwrap();
        assert_eq!(map.len(), 16);
    }
}
