//! Matrix representations, characters and induction, all by explicit
//! construction.

use std::sync::Arc;

use ndarray::Array2;
use num_complex::Complex64;

use super::group::{GroupData, ProductGroup};
use super::wreath::WreathGroup;
use super::{OracleError, Result, MATRIX_TOL, TOL};

/// A homomorphism from a finite group into complex matrices, stored as one
/// matrix per group element.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    group: Arc<GroupData>,
    degree: usize,
    mats: Vec<Array2<Complex64>>,
}

/// Kronecker product, row-major block layout.
fn kron(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Array2<Complex64> {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = Array2::zeros((ar * br, ac * bc));
    for i in 0..ar {
        for j in 0..ac {
            let scale = a[(i, j)];
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = scale * b[(k, l)];
                }
            }
        }
    }
    out
}

impl MatrixRep {
    pub fn new(group: Arc<GroupData>, mats: Vec<Array2<Complex64>>) -> Self {
        assert_eq!(mats.len(), group.order());
        let degree = mats[0].nrows();
        assert!(mats.iter().all(|m| m.dim() == (degree, degree)));
        MatrixRep {
            group,
            degree,
            mats,
        }
    }

    pub fn trivial(group: Arc<GroupData>) -> Self {
        let mats = (0..group.order()).map(|_| Array2::eye(1)).collect();
        MatrixRep::new(group, mats)
    }

    pub fn group(&self) -> &Arc<GroupData> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, g: usize) -> &Array2<Complex64> {
        &self.mats[g]
    }

    /// Check `image(ab) = image(a) image(b)` on every pair, and that the
    /// identity maps to the identity matrix. Quadratic in the group order.
    pub fn verify_homomorphism(&self) -> Result<()> {
        let id = self.image(self.group.identity());
        let eye: Array2<Complex64> = Array2::eye(self.degree);
        if !close(id, &eye) {
            return Err(OracleError::InvalidGroup("identity image is not I"));
        }
        for a in self.group.elements() {
            for b in self.group.elements() {
                let expected = self.image(a).dot(self.image(b));
                if !close(&expected, self.image(self.group.mul(a, b))) {
                    return Err(OracleError::InvalidGroup("homomorphism law fails"));
                }
            }
        }
        Ok(())
    }

    /// The character: per-element traces.
    pub fn character(&self) -> ClassFunction {
        let values = self.mats.iter().map(|m| m.diag().sum()).collect();
        ClassFunction {
            group: self.group.clone(),
            values,
        }
    }

    /// Inner tensor product of two representations of the same group.
    pub fn tensor_inner(&self, other: &MatrixRep) -> Result<MatrixRep> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(OracleError::GroupMismatch);
        }
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| kron(a, b))
            .collect();
        Ok(MatrixRep::new(self.group.clone(), mats))
    }
}

fn close(a: &Array2<Complex64>, b: &Array2<Complex64>) -> bool {
    a.iter()
        .zip(b.iter())
        .all(|(x, y)| (x - y).norm() <= MATRIX_TOL)
}

/// Outer tensor product of one representation per factor of a product group.
pub fn outer_rep(product: &ProductGroup, reps: &[&MatrixRep]) -> Result<MatrixRep> {
    if reps.len() != product.factors().len() {
        return Err(OracleError::GroupMismatch);
    }
    for (rep, factor) in reps.iter().zip(product.factors()) {
        if !Arc::ptr_eq(rep.group(), factor) {
            return Err(OracleError::GroupMismatch);
        }
    }
    let order = product.group().order();
    let mats = (0..order)
        .map(|idx| {
            let parts = product.decode(idx);
            let mut m = Array2::eye(1);
            for (rep, &part) in reps.iter().zip(&parts) {
                m = kron(&m, rep.image(part));
            }
            m
        })
        .collect();
    Ok(MatrixRep::new(product.group().clone(), mats))
}

/// Pull a representation of `S_n` back along the projection
/// `F wr S_n -> S_n`: the image of `(f, pi)` is the image of `pi`.
pub fn inflate(rep: &MatrixRep, sym: &WreathGroup, w: &WreathGroup) -> Result<MatrixRep> {
    if !Arc::ptr_eq(rep.group(), sym.group()) || sym.n() != w.n() {
        return Err(OracleError::GroupMismatch);
    }
    let zeros = vec![sym.base().identity(); sym.n()];
    let mats = (0..w.order())
        .map(|idx| {
            let (_, perm) = w.element(idx);
            rep.image(sym.index_of(&zeros, perm)).clone()
        })
        .collect();
    Ok(MatrixRep::new(w.group().clone(), mats))
}

/// The extension of the `n`-th outer tensor power of an irreducible of `F`
/// to `F wr S_n`: `(f, pi)` permutes the tensor slots by `pi` and acts by
/// the image of `f(x)` in slot `x`.
pub fn extend(f_irrep: &MatrixRep, w: &WreathGroup) -> Result<MatrixRep> {
    if !Arc::ptr_eq(f_irrep.group(), w.base()) {
        return Err(OracleError::GroupMismatch);
    }
    let n = w.n();
    let d = f_irrep.degree();
    let degree = d.pow(n as u32);
    let decode = |mut idx: usize| {
        let mut out = vec![0usize; n];
        for x in (0..n).rev() {
            out[x] = idx % d;
            idx /= d;
        }
        out
    };
    let mats = (0..w.order())
        .map(|idx| {
            let (f, perm) = w.element(idx);
            let mut inv = vec![0usize; n];
            for x in 0..n {
                inv[perm[x]] = x;
            }
            let mut m = Array2::zeros((degree, degree));
            for row in 0..degree {
                let a = decode(row);
                for col in 0..degree {
                    let b = decode(col);
                    let mut entry = Complex64::new(1.0, 0.0);
                    for x in 0..n {
                        entry *= f_irrep.image(f[x])[(a[x], b[inv[x]])];
                        if entry.norm_sqr() == 0.0 {
                            break;
                        }
                    }
                    m[(row, col)] = entry;
                }
            }
            m
        })
        .collect();
    Ok(MatrixRep::new(w.group().clone(), mats))
}

/// Left cosets of an embedded subgroup, with representatives chosen as the
/// least element index in each coset.
pub struct Cosets {
    pub reps: Vec<usize>,
    /// Coset index of every group element.
    pub coset_of: Vec<usize>,
    /// The `h` with `g = reps[coset_of[g]] * embed(h)`.
    pub h_of: Vec<usize>,
}

impl Cosets {
    pub fn left(g: &GroupData, h: &GroupData, embedding: &[usize]) -> Result<Self> {
        g.check_embedding(h, embedding)?;
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut h_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for s in g.elements() {
            if coset_of[s] != usize::MAX {
                continue;
            }
            let i = reps.len();
            reps.push(s);
            for hh in h.elements() {
                let t = g.mul(s, embedding[hh]);
                coset_of[t] = i;
                h_of[t] = hh;
            }
        }
        Ok(Cosets {
            reps,
            coset_of,
            h_of,
        })
    }
}

/// Induce a representation of an embedded subgroup up to `g`, materializing
/// the block-permutation matrices.
pub fn induce(rep: &MatrixRep, g: &Arc<GroupData>, embedding: &[usize]) -> Result<MatrixRep> {
    let cosets = Cosets::left(g, rep.group(), embedding)?;
    let l = cosets.reps.len();
    let d = rep.degree();
    let mats = g
        .elements()
        .map(|elem| {
            let mut m = Array2::zeros((l * d, l * d));
            for (i, &s) in cosets.reps.iter().enumerate() {
                let t = g.mul(elem, s);
                let j = cosets.coset_of[t];
                let h = cosets.h_of[t];
                let block = rep.image(h);
                for r in 0..d {
                    for c in 0..d {
                        m[(j * d + r, i * d + c)] = block[(r, c)];
                    }
                }
            }
            m
        })
        .collect();
    Ok(MatrixRep::new(g.clone(), mats))
}

/// Character of the induced representation, computed from diagonal blocks
/// only (no matrices are materialized).
pub fn induced_character(
    rep_char: &ClassFunction,
    g: &Arc<GroupData>,
    h: &GroupData,
    embedding: &[usize],
) -> Result<ClassFunction> {
    let cosets = Cosets::left(g, h, embedding)?;
    let values = g
        .elements()
        .map(|elem| {
            let mut total = Complex64::new(0.0, 0.0);
            for (i, &s) in cosets.reps.iter().enumerate() {
                let t = g.mul(elem, s);
                if cosets.coset_of[t] == i {
                    total += rep_char.values[cosets.h_of[t]];
                }
            }
            total
        })
        .collect();
    Ok(ClassFunction {
        group: g.clone(),
        values,
    })
}

/// A complex-valued function on group elements; characters are the main
/// instance.
#[derive(Debug, Clone)]
pub struct ClassFunction {
    group: Arc<GroupData>,
    values: Vec<Complex64>,
}

impl ClassFunction {
    pub fn new(group: Arc<GroupData>, values: Vec<Complex64>) -> Self {
        assert_eq!(values.len(), group.order());
        ClassFunction { group, values }
    }

    pub fn group(&self) -> &Arc<GroupData> {
        &self.group
    }

    pub fn value(&self, g: usize) -> Complex64 {
        self.values[g]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Is the function constant on conjugacy classes?
    pub fn is_class_function(&self, tol: f64) -> bool {
        self.group.elements().all(|g| {
            self.group.elements().all(|x| {
                let conj = self.group.mul(self.group.mul(x, g), self.group.inv(x));
                (self.values[g] - self.values[conj]).norm() <= tol
            })
        })
    }

    /// `<self, other> = 1/|G| sum_g self(g) conj(other(g))`.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Complex64> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(OracleError::GroupMismatch);
        }
        let sum: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum();
        Ok(sum / self.group.order() as f64)
    }

    /// Multiplicity of the irreducible with character `irr` in `self`,
    /// rounded to the nearest non-negative integer; errors when the inner
    /// product is not integral within `TOL`.
    pub fn multiplicity_of(&self, irr: &ClassFunction) -> Result<u64> {
        let value = self.inner_product(irr)?;
        let rounded = value.re.round();
        if (value.re - rounded).abs() > TOL || value.im.abs() > TOL || rounded < 0.0 {
            return Err(OracleError::NonIntegralMultiplicity {
                value: value.re,
                tol: TOL,
            });
        }
        Ok(rounded as u64)
    }

    /// Restriction along an embedding: values at the embedded elements.
    pub fn restrict(&self, h: &Arc<GroupData>, embedding: &[usize]) -> Result<ClassFunction> {
        self.group.check_embedding(h, embedding)?;
        Ok(ClassFunction {
            group: h.clone(),
            values: embedding.iter().map(|&g| self.values[g]).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_BUDGET;

    fn sign_of(c2: Arc<GroupData>) -> MatrixRep {
        let one = Array2::from_elem((1, 1), Complex64::new(1.0, 0.0));
        let neg = Array2::from_elem((1, 1), Complex64::new(-1.0, 0.0));
        MatrixRep::new(c2, vec![one, neg])
    }

    #[test]
    fn trivial_rep_is_homomorphism() {
        let g = GroupData::cyclic(6);
        MatrixRep::trivial(g).verify_homomorphism().unwrap();
    }

    #[test]
    fn induce_trivial_from_trivial_subgroup_is_regular() {
        let g = GroupData::cyclic(4);
        let e = GroupData::trivial();
        let triv = MatrixRep::trivial(e.clone());
        let ind = induce(&triv, &g, &[0]).unwrap();
        ind.verify_homomorphism().unwrap();
        let chi = ind.character();
        assert!((chi.value(0).re - 4.0).abs() < TOL);
        for x in 1..4 {
            assert!(chi.value(x).norm() < TOL);
        }
    }

    #[test]
    fn induced_character_matches_materialized_induction() {
        let c2 = GroupData::cyclic(2);
        let c6 = GroupData::cyclic(6);
        let embedding = vec![0, 3];
        let sign = sign_of(c2.clone());
        let ind = induce(&sign, &c6, &embedding).unwrap();
        ind.verify_homomorphism().unwrap();
        let direct = ind.character();
        let traced = induced_character(&sign.character(), &c6, &c2, &embedding).unwrap();
        for g in 0..6 {
            assert!((direct.value(g) - traced.value(g)).norm() < TOL);
        }
    }

    #[test]
    fn extend_sign_of_c2_squared() {
        // F = C2, sign character, n = 2: character at ((a,b), id) = (-1)^(a+b).
        let c2 = GroupData::cyclic(2);
        let w = WreathGroup::new(c2.clone(), 2, DEFAULT_BUDGET).unwrap();
        let ext = extend(&sign_of(c2), &w).unwrap();
        ext.verify_homomorphism().unwrap();
        let chi = ext.character();
        let id_perm = [0usize, 1];
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let idx = w.index_of(&[a, b], &id_perm);
            let expected = if (a + b) % 2 == 0 { 1.0 } else { -1.0 };
            assert!((chi.value(idx).re - expected).abs() < TOL);
        }
    }

    #[test]
    fn inner_product_of_trivial_with_itself_is_one() {
        let g = GroupData::cyclic(5);
        let chi = MatrixRep::trivial(g).character();
        let ip = chi.inner_product(&chi).unwrap();
        assert!((ip.re - 1.0).abs() < TOL && ip.im.abs() < TOL);
        assert_eq!(chi.multiplicity_of(&chi).unwrap(), 1);
    }
}
