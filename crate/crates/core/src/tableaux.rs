//! Skew tableaux and the classical Littlewood-Richardson rule.
//!
//! The coefficient `c^gamma_{lambda,delta}` is computed by direct enumeration
//! of the semistandard skew tableaux of shape `gamma/lambda` with content
//! `delta` whose row word is a lattice permutation. Boxes are filled in
//! row-word order (top to bottom, right to left within a row) so that both
//! the semistandardness and the lattice condition can prune partial fillings.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::{partitions_of, Composition, Partition};
use crate::{Error, Result};

/// A skew diagram `outer/inner` with `inner` contained in `outer`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes of the skew diagram.
    pub fn boxes(&self) -> u32 {
        self.outer.weight() - self.inner.weight()
    }
}

/// A filling of a skew shape: row `i` carries the entries of the boxes in
/// columns `inner[i]..outer[i]`, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    /// Build a tableau, checking that every row has exactly as many entries
    /// as the skew shape has boxes in that row.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.outer.rows() {
            return Err(Error::ShapeMismatch);
        }
        for (i, row) in rows.iter().enumerate() {
            let expected = shape.outer.row(i) - shape.inner.row(i);
            if row.len() != expected as usize {
                return Err(Error::ShapeMismatch);
            }
        }
        Ok(SkewTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry in row `i`, absolute column `j`, when that box belongs to the
    /// skew diagram.
    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        let offset = self.shape.inner.row(i) as usize;
        if j < offset {
            return None;
        }
        self.rows.get(i)?.get(j - offset).copied()
    }

    /// The content: entry `i` counts the boxes filled with `i+1`.
    pub fn content(&self) -> Composition {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0u32; max as usize];
        for &v in self.rows.iter().flatten() {
            counts[v as usize - 1] += 1;
        }
        Composition::new(counts)
    }

    /// The row word: entries read right to left within each row, rows top to
    /// bottom.
    pub fn row_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    /// Rows weakly increase left to right and columns strictly increase top
    /// to bottom, comparisons respecting the skew offsets.
    pub fn is_semistandard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            for (k, &v) in row.iter().enumerate() {
                let j = self.shape.inner.row(i) as usize + k;
                if i > 0 {
                    if let Some(above) = self.entry(i - 1, j) {
                        if above >= v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for SkewTableau {
    /// Rows joined by " / ", inner-shape boxes rendered as ".".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            let mut first = true;
            for _ in 0..self.shape.inner.row(i) {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, ".")?;
                first = false;
            }
            for &v in row {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Is every prefix of `word` balanced, i.e. does it contain at least as many
/// occurrences of `i` as of `i+1` for every `i >= 1`?
pub fn is_lattice_word(word: &[u32]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0u32; max as usize + 1];
    for &v in word {
        if v == 0 {
            return false;
        }
        counts[v as usize - 1] += 1;
        if v > 1 && counts[v as usize - 1] > counts[v as usize - 2] {
            return false;
        }
    }
    true
}

struct LrSearch {
    outer: Vec<u32>,
    inner: Vec<u32>,
    target: Vec<u32>,
    counts: Vec<u32>,
    grid: Vec<Vec<u32>>,
    found: Vec<SkewTableau>,
    shape: SkewShape,
}

impl LrSearch {
    /// Backtrack over the boxes in row-word order. `row`/`col` identify the
    /// next box to fill; `col` runs downwards within a row.
    fn fill(&mut self, row: usize, col: usize) {
        if row == self.outer.len() {
            let rows = self
                .grid
                .iter()
                .enumerate()
                .map(|(i, g)| g[self.inner.get(i).copied().unwrap_or(0) as usize..].to_vec())
                .collect();
            let t = SkewTableau {
                shape: self.shape.clone(),
                rows,
            };
            self.found.push(t);
            return;
        }
        let lo = *self.inner.get(row).unwrap_or(&0);
        if (col as u32) < lo || self.outer[row] == lo {
            // Row exhausted (or empty): move on.
            return self.next_row(row);
        }
        let j = col;
        for v in 1..=self.target.len() as u32 {
            let vi = v as usize - 1;
            if self.counts[vi] == self.target[vi] {
                continue;
            }
            // Lattice condition, prefix-closed in row-word order.
            if v > 1 && self.counts[vi] + 1 > self.counts[vi - 1] {
                continue;
            }
            // Column strict against the box above, if it is a skew box.
            if row > 0
                && (j as u32) < self.outer[row - 1]
                && (j as u32) >= *self.inner.get(row - 1).unwrap_or(&0)
                && self.grid[row - 1][j] >= v
            {
                continue;
            }
            // Row weakly increasing against the already-filled right neighbor.
            if (j as u32) + 1 < self.outer[row] && v > self.grid[row][j + 1] {
                continue;
            }
            self.grid[row][j] = v;
            self.counts[vi] += 1;
            if j as u32 == lo {
                self.next_row(row);
            } else {
                self.fill(row, j - 1);
            }
            self.counts[vi] -= 1;
        }
    }

    fn next_row(&mut self, row: usize) {
        let next = row + 1;
        let start = self.outer.get(next).map(|&w| w.saturating_sub(1) as usize);
        match start {
            Some(c) => self.fill(next, c),
            None => self.fill(self.outer.len(), 0),
        }
    }
}

/// All semistandard skew tableaux of shape `gamma/lambda` with content
/// `delta` whose row word is a lattice permutation.
///
/// Errors if `lambda` is not contained in `gamma` or the box counts do not
/// match.
pub fn enumerate_lr_tableaux(
    gamma: &Partition,
    lambda: &Partition,
    delta: &Partition,
) -> Result<Vec<SkewTableau>> {
    if !gamma.contains(lambda) || gamma.weight() != lambda.weight() + delta.weight() {
        return Err(Error::ShapeMismatch);
    }
    let shape = SkewShape::new(gamma.clone(), lambda.clone())?;
    let grid = gamma
        .parts()
        .iter()
        .map(|&w| vec![0u32; w as usize])
        .collect();
    let mut search = LrSearch {
        outer: gamma.parts().to_vec(),
        inner: lambda.parts().to_vec(),
        counts: vec![0; delta.rows()],
        target: delta.parts().to_vec(),
        grid,
        found: Vec::new(),
        shape,
    };
    if search.outer.is_empty() {
        search.found.push(SkewTableau {
            shape: search.shape.clone(),
            rows: Vec::new(),
        });
    } else {
        let c = search.outer[0].saturating_sub(1) as usize;
        search.fill(0, c);
    }
    Ok(search.found)
}

/// The Littlewood-Richardson coefficient `c^gamma_{lambda,delta}`.
///
/// Returns 0 whenever the shapes are incompatible (weight mismatch or
/// `lambda` not contained in `gamma`).
pub fn lr_coefficient(lambda: &Partition, delta: &Partition, gamma: &Partition) -> u64 {
    match enumerate_lr_tableaux(gamma, lambda, delta) {
        Ok(tableaux) => tableaux.len() as u64,
        Err(_) => 0,
    }
}

/// The decomposition of the induction of `S^lambda (x) S^delta` from
/// `S_k x S_r` to `S_{k+r}`: all `gamma` with positive coefficient.
pub fn lr_expand(lambda: &Partition, delta: &Partition) -> BTreeMap<Partition, u64> {
    let n = lambda.weight() + delta.weight();
    let mut out = BTreeMap::new();
    for gamma in partitions_of(n) {
        let c = lr_coefficient(lambda, delta, &gamma);
        if c > 0 {
            out.insert(gamma, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn paper_tableau() -> SkewTableau {
        let shape = SkewShape::new(p(&[4, 3, 1]), p(&[2, 1])).unwrap();
        SkewTableau::new(shape, vec![vec![1, 1], vec![2, 3], vec![2]]).unwrap()
    }

    #[test]
    fn row_word_examples() {
        assert_eq!(paper_tableau().row_word(), vec![1, 1, 3, 2, 2]);
        let empty = SkewTableau::new(
            SkewShape::new(Partition::empty(), Partition::empty()).unwrap(),
            vec![],
        )
        .unwrap();
        assert_eq!(empty.row_word(), Vec::<u32>::new());
        let single = SkewTableau::new(
            SkewShape::new(p(&[3]), Partition::empty()).unwrap(),
            vec![vec![1, 2, 2]],
        )
        .unwrap();
        assert_eq!(single.row_word(), vec![2, 2, 1]);
    }

    #[test]
    fn lattice_word_examples() {
        assert!(!is_lattice_word(&[1, 1, 3, 2, 2]));
        assert!(is_lattice_word(&[]));
        assert!(is_lattice_word(&[1, 1, 2, 2]));
    }

    #[test]
    fn semistandard_examples() {
        assert!(paper_tableau().is_semistandard());
        let single = SkewTableau::new(
            SkewShape::new(p(&[1]), Partition::empty()).unwrap(),
            vec![vec![7]],
        )
        .unwrap();
        assert!(single.is_semistandard());
        let bad = SkewTableau::new(
            SkewShape::new(p(&[2]), Partition::empty()).unwrap(),
            vec![vec![2, 1]],
        )
        .unwrap();
        assert!(!bad.is_semistandard());
    }

    #[test]
    fn enumerate_paper_example() {
        let tableaux = enumerate_lr_tableaux(&p(&[4, 3, 1]), &p(&[2, 1]), &p(&[3, 2])).unwrap();
        assert_eq!(tableaux.len(), 2);
        let rows: Vec<_> = tableaux.iter().map(|t| t.rows().to_vec()).collect();
        assert!(rows.contains(&vec![vec![1, 1], vec![2, 2], vec![1]]));
        assert!(rows.contains(&vec![vec![1, 1], vec![1, 2], vec![2]]));
        for t in &tableaux {
            assert!(t.is_semistandard());
            assert!(is_lattice_word(&t.row_word()));
            assert_eq!(t.content(), Composition::new(vec![3, 2]));
        }
    }

    #[test]
    fn enumerate_trivial_and_derived() {
        let same = enumerate_lr_tableaux(&p(&[3, 1]), &p(&[3, 1]), &Partition::empty()).unwrap();
        assert_eq!(same.len(), 1);
        assert!(same[0].rows().iter().all(|r| r.is_empty()));
        let one = enumerate_lr_tableaux(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])).unwrap();
        assert_eq!(one.len(), 1);
        assert!(enumerate_lr_tableaux(&p(&[1]), &p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[3, 2]), &p(&[4, 3, 1])), 2);
        assert_eq!(
            lr_coefficient(&p(&[3, 2]), &Partition::empty(), &p(&[3, 2])),
            1
        );
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        // Shape preconditions failing means coefficient 0, not an error.
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1, 1, 1])), 0);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2])), 0);
    }

    #[test]
    fn expand_examples() {
        let got = lr_expand(&p(&[2, 1]), &p(&[1]));
        let expected: BTreeMap<_, _> = [(p(&[3, 1]), 1), (p(&[2, 2]), 1), (p(&[2, 1, 1]), 1)]
            .into_iter()
            .collect();
        assert_eq!(got, expected);

        let got = lr_expand(&Partition::empty(), &p(&[3, 2]));
        assert_eq!(got, [(p(&[3, 2]), 1)].into_iter().collect());

        let got = lr_expand(&p(&[1]), &p(&[1, 1]));
        let expected: BTreeMap<_, _> = [(p(&[2, 1]), 1), (p(&[1, 1, 1]), 1)].into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn display_uses_dots_for_inner_boxes() {
        use alloc::string::ToString;
        assert_eq!(paper_tableau().to_string(), ". . 1 1 / . 2 3 / 2");
    }
}
