//! Builtin groups and the verification engine tying the explicit
//! representation theory to the combinatorial rules.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;
use std::sync::Arc;

use ndarray::Array2;
use num_complex::Complex64;

use wreathlr_core::{
    arrow_exists, arrows_via_branching, induce_one_step, multipartitions_of, restrict_one_step,
    wreath_lr_expand, Decomposition, MultiPartition, Partition,
};

use super::group::{GroupData, ProductGroup};
use super::rep::{extend, induce, induced_character, inflate, outer_rep, ClassFunction, MatrixRep};
use super::specht::specht_rep;
use super::wreath::WreathGroup;
use super::{OracleError, Result, DEFAULT_BUDGET, TOL};

/// The groups shipped with the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinGroup {
    C2,
    C3,
    C4,
    C5,
    C6,
    S3,
}

impl FromStr for BuiltinGroup {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C2" => Ok(BuiltinGroup::C2),
            "C3" => Ok(BuiltinGroup::C3),
            "C4" => Ok(BuiltinGroup::C4),
            "C5" => Ok(BuiltinGroup::C5),
            "C6" => Ok(BuiltinGroup::C6),
            "S3" => Ok(BuiltinGroup::S3),
            other => Err(OracleError::UnknownGroup(other.to_string())),
        }
    }
}

impl fmt::Display for BuiltinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            BuiltinGroup::C2 => "C2",
            BuiltinGroup::C3 => "C3",
            BuiltinGroup::C4 => "C4",
            BuiltinGroup::C5 => "C5",
            BuiltinGroup::C6 => "C6",
            BuiltinGroup::S3 => "S3",
        };
        write!(f, "{name}")
    }
}

/// A builtin group together with a complete list of its irreducible matrix
/// representations, trivial first.
pub fn builtin_group(name: BuiltinGroup) -> Result<(Arc<GroupData>, Vec<MatrixRep>)> {
    match name {
        BuiltinGroup::C2 => cyclic_with_irreps(2),
        BuiltinGroup::C3 => cyclic_with_irreps(3),
        BuiltinGroup::C4 => cyclic_with_irreps(4),
        BuiltinGroup::C5 => cyclic_with_irreps(5),
        BuiltinGroup::C6 => cyclic_with_irreps(6),
        BuiltinGroup::S3 => {
            let sym = WreathGroup::new(GroupData::trivial(), 3, DEFAULT_BUDGET)?;
            let shapes = [
                Partition::new(vec![3]),       // trivial
                Partition::new(vec![2, 1]),    // standard
                Partition::new(vec![1, 1, 1]), // sign
            ];
            let irreps = shapes
                .into_iter()
                .map(|shape| specht_rep(&shape.expect("valid shape"), &sym))
                .collect::<Result<Vec<_>>>()?;
            Ok((sym.group().clone(), irreps))
        }
    }
}

/// The cyclic group of order `k` with its `k` characters: the `j`-th sends
/// the generator to `exp(2 pi i j / k)`.
fn cyclic_with_irreps(k: usize) -> Result<(Arc<GroupData>, Vec<MatrixRep>)> {
    let group = GroupData::cyclic(k);
    let irreps = (0..k)
        .map(|j| {
            let mats = (0..k)
                .map(|a| {
                    let angle = 2.0 * std::f64::consts::PI * (j * a % k) as f64 / k as f64;
                    Array2::from_elem((1, 1), Complex64::from_polar(1.0, angle))
                })
                .collect();
            MatrixRep::new(group.clone(), mats)
        })
        .collect();
    Ok((group, irreps))
}

/// Outcome of one verification run: the two sides being compared and a
/// pass/fail flag.
#[derive(Debug, Clone)]
pub struct Report {
    pub description: String,
    pub passed: bool,
    pub details: Vec<String>,
}

impl Report {
    fn compare(description: String, oracle: &Decomposition, formula: &Decomposition) -> Self {
        let passed = oracle == formula;
        let mut details = vec![
            format!("oracle:  {}", one_line(oracle)),
            format!("formula: {}", one_line(formula)),
        ];
        if !passed {
            details.push("MISMATCH".to_string());
        }
        Report {
            description,
            passed,
            details,
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}] {}",
            if self.passed { "pass" } else { "FAIL" },
            self.description
        )?;
        for line in &self.details {
            writeln!(f, "    {line}")?;
        }
        Ok(())
    }
}

fn one_line(d: &Decomposition) -> String {
    if d.is_empty() {
        return "0".to_string();
    }
    d.iter()
        .map(|(mp, mult)| format!("{mult}x{mp}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// The brute-force engine for one base group `F`. Wreath products and the
/// characters of their irreducibles `Phi_Lambda` are cached.
pub struct WreathOracle {
    base: Arc<GroupData>,
    irreps: Vec<MatrixRep>,
    dims: Vec<u32>,
    budget: usize,
    wreaths: HashMap<usize, Rc<WreathGroup>>,
    syms: HashMap<usize, Rc<WreathGroup>>,
    phi_chars: HashMap<MultiPartition, ClassFunction>,
}

impl WreathOracle {
    /// Build an oracle from a group and a complete irredundant list of its
    /// irreducibles, trivial representation first.
    pub fn new(base: Arc<GroupData>, irreps: Vec<MatrixRep>, budget: usize) -> Result<Self> {
        if irreps.is_empty() {
            return Err(OracleError::InvalidGroup("no irreducibles supplied"));
        }
        let mut dim_sq = 0usize;
        for rep in &irreps {
            if !Arc::ptr_eq(rep.group(), &base) {
                return Err(OracleError::GroupMismatch);
            }
            rep.verify_homomorphism()?;
            dim_sq += rep.degree() * rep.degree();
        }
        if dim_sq != base.order() {
            return Err(OracleError::InvalidGroup("irreducibles are not complete"));
        }
        let trivial_first = irreps[0]
            .character()
            .values()
            .iter()
            .all(|v| (v - Complex64::new(1.0, 0.0)).norm() <= TOL);
        if !trivial_first {
            return Err(OracleError::InvalidGroup(
                "first irreducible is not trivial",
            ));
        }
        let dims = irreps.iter().map(|r| r.degree() as u32).collect();
        Ok(WreathOracle {
            base,
            irreps,
            dims,
            budget,
            wreaths: HashMap::new(),
            syms: HashMap::new(),
            phi_chars: HashMap::new(),
        })
    }

    pub fn from_builtin(name: BuiltinGroup, budget: usize) -> Result<Self> {
        let (group, irreps) = builtin_group(name)?;
        WreathOracle::new(group, irreps, budget)
    }

    /// Dimensions of the irreducibles of `F`, trivial first.
    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    /// Number of irreducibles of `F`.
    pub fn l(&self) -> usize {
        self.irreps.len()
    }

    pub fn base(&self) -> &Arc<GroupData> {
        &self.base
    }

    /// The cached wreath product `F wr S_n`.
    pub fn wreath(&mut self, n: usize) -> Result<Rc<WreathGroup>> {
        if let Some(w) = self.wreaths.get(&n) {
            return Ok(w.clone());
        }
        let w = Rc::new(WreathGroup::new(self.base.clone(), n, self.budget)?);
        self.wreaths.insert(n, w.clone());
        Ok(w)
    }

    fn sym(&mut self, n: usize) -> Result<Rc<WreathGroup>> {
        if let Some(s) = self.syms.get(&n) {
            return Ok(s.clone());
        }
        let s = Rc::new(WreathGroup::new(GroupData::trivial(), n, self.budget)?);
        self.syms.insert(n, s.clone());
        Ok(s)
    }

    /// One factor `extend(U_i) (x) inflate(S^lambda_i)` over `F wr S_{n_i}`
    /// for every component of non-zero weight.
    fn phi_factors(
        &mut self,
        lambda: &MultiPartition,
    ) -> Result<(Vec<Rc<WreathGroup>>, Vec<MatrixRep>)> {
        if lambda.len() != self.l() {
            return Err(OracleError::Core(
                wreathlr_core::Error::ComponentCountMismatch {
                    expected: self.l(),
                    got: lambda.len(),
                },
            ));
        }
        let mut factor_groups = Vec::new();
        let mut factor_reps = Vec::new();
        for (i, part) in lambda.components().iter().enumerate() {
            let ni = part.weight() as usize;
            if ni == 0 {
                continue;
            }
            let wi = self.wreath(ni)?;
            let si = self.sym(ni)?;
            let ext = extend(&self.irreps[i], &wi)?;
            let inf = inflate(&specht_rep(part, &si)?, &si, &wi)?;
            factor_reps.push(ext.tensor_inner(&inf)?);
            factor_groups.push(wi);
        }
        Ok((factor_groups, factor_reps))
    }

    /// Build the irreducible `Phi_Lambda` of `F wr S_n` as explicit
    /// matrices: induce the outer product of the per-type blocks
    /// `extend(U_i) (x) inflate(S^lambda_i)` from the Young subgroup.
    pub fn phi_rep(&mut self, lambda: &MultiPartition) -> Result<MatrixRep> {
        let n = lambda.weight() as usize;
        let big = self.wreath(n)?;
        let (factor_groups, mut factor_reps) = self.phi_factors(lambda)?;
        match factor_groups.len() {
            0 => Ok(MatrixRep::trivial(big.group().clone())),
            1 if factor_groups[0].n() == n => Ok(factor_reps.pop().expect("one factor")),
            _ => {
                let product =
                    ProductGroup::new(factor_groups.iter().map(|w| w.group().clone()).collect())?;
                let rep_refs: Vec<&MatrixRep> = factor_reps.iter().collect();
                let outer = outer_rep(&product, &rep_refs)?;
                let factor_refs: Vec<&WreathGroup> =
                    factor_groups.iter().map(|w| w.as_ref()).collect();
                let embedding = WreathGroup::embed_block_product(&factor_refs, &product, &big)?;
                induce(&outer, big.group(), &embedding)
            }
        }
    }

    /// Cached character of `Phi_Lambda`, computed through induced characters
    /// only: the full matrices of the induced representation are never
    /// materialized, which keeps larger ambient groups affordable.
    pub fn phi_char(&mut self, lambda: &MultiPartition) -> Result<ClassFunction> {
        if let Some(c) = self.phi_chars.get(lambda) {
            return Ok(c.clone());
        }
        let n = lambda.weight() as usize;
        let big = self.wreath(n)?;
        let (factor_groups, factor_reps) = self.phi_factors(lambda)?;
        let c = match factor_groups.len() {
            0 => MatrixRep::trivial(big.group().clone()).character(),
            1 if factor_groups[0].n() == n => factor_reps[0].character(),
            _ => {
                let product =
                    ProductGroup::new(factor_groups.iter().map(|w| w.group().clone()).collect())?;
                let factor_chars: Vec<ClassFunction> =
                    factor_reps.iter().map(|r| r.character()).collect();
                let values = (0..product.group().order())
                    .map(|idx| {
                        product
                            .decode(idx)
                            .iter()
                            .zip(&factor_chars)
                            .map(|(&part, ch)| ch.value(part))
                            .product()
                    })
                    .collect();
                let outer = ClassFunction::new(product.group().clone(), values);
                let factor_refs: Vec<&WreathGroup> =
                    factor_groups.iter().map(|w| w.as_ref()).collect();
                let embedding = WreathGroup::embed_block_product(&factor_refs, &product, &big)?;
                induced_character(&outer, big.group(), product.group(), &embedding)?
            }
        };
        self.phi_chars.insert(lambda.clone(), c.clone());
        Ok(c)
    }

    /// Decompose a character of `F wr S_n` against the full set of
    /// `Phi_Gamma`, returning integer multiplicities.
    pub fn decompose(&mut self, ch: &ClassFunction, n: u32) -> Result<Decomposition> {
        let mut out = Decomposition::new();
        for gamma in multipartitions_of(n, self.l()) {
            let phi = self.phi_char(&gamma)?;
            let mult = ch.multiplicity_of(&phi)?;
            out.add(gamma, mult);
        }
        Ok(out)
    }

    /// Orthonormality and completeness of `{Phi_Lambda}` over `F wr S_n`.
    pub fn verify_orthonormality(&mut self, n: u32) -> Result<Report> {
        let w = self.wreath(n as usize)?;
        let lambdas = multipartitions_of(n, self.l());
        let chars: Vec<(MultiPartition, ClassFunction)> = lambdas
            .into_iter()
            .map(|mp| Ok((mp.clone(), self.phi_char(&mp)?)))
            .collect::<Result<_>>()?;
        let mut passed = true;
        let mut details = Vec::new();
        let mut dim_sq = 0.0;
        for (mp, c) in &chars {
            if !c.is_class_function(TOL) {
                passed = false;
                details.push(format!("{mp}: character is not a class function"));
            }
            let d = c.value(w.group().identity()).re;
            dim_sq += d * d;
        }
        for (i, (mp_a, a)) in chars.iter().enumerate() {
            for (mp_b, b) in chars.iter().skip(i) {
                let ip = a.inner_product(b)?;
                let expected = if mp_a == mp_b { 1.0 } else { 0.0 };
                if (ip.re - expected).abs() > TOL || ip.im.abs() > TOL {
                    passed = false;
                    details.push(format!("<{mp_a}, {mp_b}> = {ip} (expected {expected})"));
                }
            }
        }
        let order = w.order() as f64;
        if (dim_sq - order).abs() > TOL {
            passed = false;
            details.push(format!("sum of squared degrees {dim_sq} != |G| = {order}"));
        }
        details.push(format!(
            "{} irreducibles over a group of order {}, sum of squared degrees {}",
            chars.len(),
            w.order(),
            dim_sq
        ));
        Ok(Report {
            description: format!("orthonormality and completeness at n = {n}"),
            passed,
            details,
        })
    }

    /// Compare the matrix-level decomposition of
    /// `Ind(Phi_Lambda boxtimes Phi_Delta)` from `F wr S_k x F wr S_r`
    /// with the combinatorial wreath Littlewood-Richardson expansion.
    pub fn verify_wreath_lr(
        &mut self,
        lambda: &MultiPartition,
        delta: &MultiPartition,
    ) -> Result<Report> {
        let k = lambda.weight() as usize;
        let r = delta.weight() as usize;
        let wk = self.wreath(k)?;
        let wr = self.wreath(r)?;
        let big = self.wreath(k + r)?;
        let product = ProductGroup::new(vec![wk.group().clone(), wr.group().clone()])?;
        let rep_l = self.phi_rep(lambda)?;
        let rep_r = self.phi_rep(delta)?;
        let outer = outer_rep(&product, &[&rep_l, &rep_r])?;
        let embedding = WreathGroup::embed_block_product(&[&wk, &wr], &product, &big)?;
        let induced = induce(&outer, big.group(), &embedding)?;
        let oracle = self.decompose(&induced.character(), (k + r) as u32)?;
        let formula = wreath_lr_expand(lambda, delta)?;
        Ok(Report::compare(
            format!("wreath LR: Ind(Phi_{lambda} boxtimes Phi_{delta})"),
            &oracle,
            &formula,
        ))
    }

    /// Compare the oracle decomposition of `Ind` from `F wr S_n` to
    /// `F wr S_{n+1}` of `Phi_Lambda` with the one-step branching rule.
    pub fn verify_induce_one_step(&mut self, lambda: &MultiPartition) -> Result<Report> {
        let n = lambda.weight() as usize;
        let w = self.wreath(n)?;
        let big = self.wreath(n + 1)?;
        let embedding = w.embed_into(&big)?;
        let chi = self.phi_char(lambda)?;
        let induced = induced_character(&chi, big.group(), w.group(), &embedding)?;
        let oracle = self.decompose(&induced, (n + 1) as u32)?;
        let formula = induce_one_step(lambda, &self.dims.clone())?;
        Ok(Report::compare(
            format!("branching up: Ind Phi_{lambda}"),
            &oracle,
            &formula,
        ))
    }

    /// Compare the oracle decomposition of the restriction of `Phi_Lambda`
    /// to `F wr S_{n-1}` with the one-step restriction rule.
    pub fn verify_restrict_one_step(&mut self, lambda: &MultiPartition) -> Result<Report> {
        let n = lambda.weight() as usize;
        assert!(n >= 1, "cannot restrict below weight 0");
        let small = self.wreath(n - 1)?;
        let w = self.wreath(n)?;
        let embedding = small.embed_into(&w)?;
        let chi = self.phi_char(lambda)?;
        let restricted = chi.restrict(small.group(), &embedding)?;
        let oracle = self.decompose(&restricted, (n - 1) as u32)?;
        let formula = restrict_one_step(lambda, &self.dims.clone())?;
        Ok(Report::compare(
            format!("branching down: Res Phi_{lambda}"),
            &oracle,
            &formula,
        ))
    }

    /// Check that the oracle multiplicities of
    /// `Ind(Phi_Lambda boxtimes trivial)` from `(F wr S_k) x F` are all 0
    /// or 1 and that their support matches both arrow computations of the
    /// quiver.
    pub fn verify_quiver_arrows(&mut self, lambda: &MultiPartition) -> Result<Report> {
        let k = lambda.weight() as usize;
        let wk = self.wreath(k)?;
        let w1 = self.wreath(1)?;
        let big = self.wreath(k + 1)?;
        let product = ProductGroup::new(vec![wk.group().clone(), w1.group().clone()])?;
        let rep_l = self.phi_rep(lambda)?;
        let trivial = MatrixRep::trivial(w1.group().clone());
        let outer = outer_rep(&product, &[&rep_l, &trivial])?;
        let embedding = WreathGroup::embed_block_product(&[&wk, &w1], &product, &big)?;
        let induced = induce(&outer, big.group(), &embedding)?;
        let oracle = self.decompose(&induced.character(), (k + 1) as u32)?;

        let mut passed = true;
        let mut details = vec![format!("oracle: {}", one_line(&oracle))];
        if oracle.iter().any(|(_, &m)| m > 1) {
            passed = false;
            details.push("multiplicity above 1 found".to_string());
        }
        let branching = arrows_via_branching(lambda, &self.dims)?;
        let oracle_support: std::collections::BTreeSet<MultiPartition> =
            oracle.support().cloned().collect();
        if oracle_support != branching {
            passed = false;
            details.push("support differs from the branching-rule arrows".to_string());
        }
        for delta in multipartitions_of(lambda.weight() + 1, self.l()) {
            let direct = arrow_exists(lambda, &delta)?;
            if direct != oracle_support.contains(&delta) {
                passed = false;
                details.push(format!("arrow mismatch at {delta}"));
            }
        }
        Ok(Report {
            description: format!("quiver arrows out of {lambda}"),
            passed,
            details,
        })
    }
}
