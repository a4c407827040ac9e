//! Irreducible representations of small symmetric groups, built from
//! polytabloids inside the permutation module on tabloids.
//!
//! For a permutation `pi` the matrix in the standard-polytabloid basis is
//! recovered by expressing `pi . e_t = e_{pi t}` in that basis, solving a
//! small least-squares system. Entries come out integral; only the character
//! is contractually relevant.

use ndarray::Array2;
use num_complex::Complex64;

use wreathlr_core::Partition;

use super::rep::MatrixRep;
use super::wreath::WreathGroup;
use super::{OracleError, Result};

type Tableau = Vec<Vec<usize>>;

/// All standard Young tableaux of shape `lambda`, entries `0..n` increasing
/// along rows and down columns.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let rows: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let n: usize = rows.iter().sum();
    let mut filled: Vec<Vec<usize>> = rows.iter().map(|&w| Vec::with_capacity(w)).collect();
    let mut out = Vec::new();
    fill_standard(&rows, n, 0, &mut filled, &mut out);
    out
}

fn fill_standard(
    rows: &[usize],
    n: usize,
    next: usize,
    filled: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if next == n {
        out.push(filled.clone());
        return;
    }
    for i in 0..rows.len() {
        let col = filled[i].len();
        if col == rows[i] {
            continue;
        }
        // The cell above (same column, previous row) must already be filled.
        if i > 0 && filled[i - 1].len() <= col {
            continue;
        }
        filled[i].push(next);
        fill_standard(rows, n, next + 1, filled, out);
        filled[i].pop();
    }
}

/// A tabloid in canonical form: rows sorted increasingly.
fn canonical_tabloid(t: &Tableau) -> Tableau {
    let mut rows = t.clone();
    for row in &mut rows {
        row.sort_unstable();
    }
    rows
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                let next = p.len();
                (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, next);
                    q
                })
            })
            .collect();
    }
    out
}

fn sign(perm: &[usize]) -> f64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

struct TabloidSpace {
    tabloids: Vec<Tableau>,
    index: std::collections::HashMap<Tableau, usize>,
}

impl TabloidSpace {
    fn new(lambda: &Partition, n: usize) -> Self {
        let rows: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
        let mut set = std::collections::BTreeSet::new();
        for perm in all_permutations(n) {
            let mut t: Tableau = Vec::with_capacity(rows.len());
            let mut pos = 0;
            for &w in &rows {
                t.push(perm[pos..pos + w].to_vec());
                pos += w;
            }
            set.insert(canonical_tabloid(&t));
        }
        let tabloids: Vec<Tableau> = set.into_iter().collect();
        let index = tabloids
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        TabloidSpace { tabloids, index }
    }

    /// The polytabloid of `t`: the signed sum over the column group of `t`
    /// of the resulting tabloids, as a vector over the tabloid basis.
    fn polytabloid(&self, t: &Tableau) -> Vec<f64> {
        let mut v = vec![0.0; self.tabloids.len()];
        let heights: Vec<usize> = {
            let width = t.first().map_or(0, |r| r.len());
            (0..width)
                .map(|c| t.iter().filter(|row| row.len() > c).count())
                .collect()
        };
        let column_perms: Vec<Vec<Vec<usize>>> =
            heights.iter().map(|&h| all_permutations(h)).collect();
        let mut choice = vec![0usize; heights.len()];
        loop {
            let mut image = t.clone();
            let mut s = 1.0;
            for (c, &pick) in choice.iter().enumerate() {
                let perm = &column_perms[c][pick];
                s *= sign(perm);
                for (i, &target) in perm.iter().enumerate() {
                    image[target][c] = t[i][c];
                }
            }
            v[self.index[&canonical_tabloid(&image)]] += s;
            // Next choice in mixed radix.
            let mut c = 0;
            loop {
                if c == choice.len() {
                    return v;
                }
                choice[c] += 1;
                if choice[c] < column_perms[c].len() {
                    break;
                }
                choice[c] = 0;
                c += 1;
            }
        }
    }
}

/// Invert a small matrix by Gauss-Jordan elimination.
fn invert(mut m: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let n = m.len();
    let mut inv: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .expect("non-empty");
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col];
        assert!(p.abs() > 1e-9, "polytabloid basis is singular");
        for j in 0..n {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for row in 0..n {
            if row == col {
                continue;
            }
            let factor = m[row][col];
            if factor == 0.0 {
                continue;
            }
            for j in 0..n {
                m[row][j] -= factor * m[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    inv
}

/// The Specht representation of `S_n` (given as `sym`, the wreath product of
/// the trivial group) for a partition of weight at most 5.
pub fn specht_rep(lambda: &Partition, sym: &WreathGroup) -> Result<MatrixRep> {
    let n = lambda.weight();
    if n > 5 {
        return Err(OracleError::SpechtTooLarge(n));
    }
    assert_eq!(sym.n(), n as usize, "symmetric group degree must match");
    let n = n as usize;
    let standard = standard_tableaux(lambda);
    let f = standard.len().max(1);
    if lambda.is_empty() {
        return Ok(MatrixRep::trivial(sym.group().clone()));
    }
    let space = TabloidSpace::new(lambda, n);
    let dim = space.tabloids.len();
    // Basis matrix: columns are the standard polytabloids.
    let basis: Vec<Vec<f64>> = standard.iter().map(|t| space.polytabloid(t)).collect();
    // Solve through the Gram matrix: x = (B^T B)^-1 B^T v.
    let mut gram = vec![vec![0.0; f]; f];
    for i in 0..f {
        for j in 0..f {
            gram[i][j] = (0..dim).map(|k| basis[i][k] * basis[j][k]).sum();
        }
    }
    let gram_inv = invert(gram);

    let solve = |v: &[f64]| -> Vec<f64> {
        let bt_v: Vec<f64> = (0..f)
            .map(|i| (0..dim).map(|k| basis[i][k] * v[k]).sum())
            .collect();
        (0..f)
            .map(|i| (0..f).map(|j| gram_inv[i][j] * bt_v[j]).sum())
            .collect()
    };

    let mats = (0..sym.order())
        .map(|idx| {
            let (_, perm) = sym.element(idx);
            let mut m = Array2::zeros((f, f));
            for (col, t) in standard.iter().enumerate() {
                let relabeled: Tableau = t
                    .iter()
                    .map(|row| row.iter().map(|&x| perm[x]).collect())
                    .collect();
                let v = space.polytabloid(&relabeled);
                for (row, &coeff) in solve(&v).iter().enumerate() {
                    m[(row, col)] = Complex64::new(coeff, 0.0);
                }
            }
            m
        })
        .collect();
    Ok(MatrixRep::new(sym.group().clone(), mats))
}
