//! Generalized Hamming weights, weight hierarchies and gap numbers.
//!
//! The subcode of `C` supported inside a coordinate set `S` has dimension
//! `|S| − rank(H_S)`, so `d_i` is the least `|S|` for which that quantity
//! reaches `i`. The hierarchy of `C⊥` comes from the same sweep with `G` in
//! place of `H`.

use crate::algebra::{Elem, Matrix};
use crate::code::{LinearCode, SubcodeWitness};
use crate::error::{check_range, Error, Result};
use crate::subsets::{mask_to_set, min_support_sweep, Combinations, Limits};

#[derive(Clone, Debug)]
pub struct HierarchyOptions {
    pub limits: Limits,
    /// Materialize a witness subcode for every index.
    pub witnesses: bool,
    /// Skip subtrees that cannot improve any unresolved value.
    pub prune: bool,
}

impl Default for HierarchyOptions {
    fn default() -> Self {
        HierarchyOptions {
            limits: Limits::default(),
            witnesses: false,
            prune: true,
        }
    }
}

impl From<Limits> for HierarchyOptions {
    fn from(limits: Limits) -> Self {
        HierarchyOptions {
            limits,
            ..HierarchyOptions::default()
        }
    }
}

/// `d_1 < … < d_dim` of a code of length `n`, with the complementary gaps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightHierarchy {
    pub n: usize,
    pub dimension: usize,
    pub values: Vec<usize>,
    pub gaps: Vec<usize>,
    pub witnesses: Option<Vec<SubcodeWitness>>,
}

impl WeightHierarchy {
    pub fn new(n: usize, values: Vec<usize>) -> Self {
        let gaps = complement(n, &values);
        WeightHierarchy {
            n,
            dimension: values.len(),
            values,
            gaps,
            witnesses: None,
        }
    }

    /// `d_i`, 1-based.
    pub fn d(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// `g_i`, 1-based.
    pub fn g(&self, i: usize) -> usize {
        self.gaps[i - 1]
    }

    /// Strictly increasing, and values plus gaps partition `1..=n`.
    pub fn is_well_formed(&self) -> bool {
        let increasing = self.values.windows(2).all(|w| w[0] < w[1]);
        let in_range = self.values.iter().all(|&v| (1..=self.n).contains(&v));
        let mut all: Vec<usize> = self.values.iter().chain(&self.gaps).copied().collect();
        all.sort_unstable();
        increasing && in_range && all == (1..=self.n).collect::<Vec<_>>()
    }
}

/// Sorted complement of `values` in `1..=n`.
pub fn complement(n: usize, values: &[usize]) -> Vec<usize> {
    (1..=n).filter(|v| !values.contains(v)).collect()
}

fn witness_from_mask(check: &Matrix, n: usize, mask: u64, dim: usize) -> Result<SubcodeWitness> {
    let set = mask_to_set(mask);
    let local = check.select_columns(&set)?.nullspace();
    let basis = (0..dim.min(local.rows()))
        .map(|r| {
            let mut v = vec![0 as Elem; n];
            for (j, &c) in set.iter().enumerate() {
                v[c] = local.get(r, j);
            }
            v
        })
        .collect();
    Ok(SubcodeWitness::from_basis(basis))
}

fn hierarchy_from_check(
    check: &Matrix,
    dimension: usize,
    opts: &HierarchyOptions,
) -> Result<WeightHierarchy> {
    let n = check.cols();
    let sweep = min_support_sweep(check, dimension, &opts.limits, opts.prune)?;
    let mut h = WeightHierarchy::new(n, sweep.values);
    if opts.witnesses {
        let w = sweep
            .witnesses
            .iter()
            .enumerate()
            .map(|(i, &mask)| witness_from_mask(check, n, mask, i + 1))
            .collect::<Result<Vec<_>>>()?;
        h.witnesses = Some(w);
    }
    Ok(h)
}

/// `d_i` together with an `i`-dimensional subcode whose support has that size.
pub fn ghw(code: &LinearCode, i: usize, limits: &Limits) -> Result<(usize, SubcodeWitness)> {
    check_range("i", i, 1, code.k())?;
    let sweep = min_support_sweep(code.parity_check(), i, limits, true)?;
    let witness = witness_from_mask(code.parity_check(), code.n(), sweep.witnesses[i - 1], i)?;
    Ok((sweep.values[i - 1], witness))
}

/// Full weight hierarchy `d_1..d_k` of `code`.
pub fn weight_hierarchy(code: &LinearCode, opts: &HierarchyOptions) -> Result<WeightHierarchy> {
    hierarchy_from_check(code.parity_check(), code.k(), opts)
}

/// Weight hierarchy `d_1^⊥..d_{n−k}^⊥` of the dual code, computed from `G`.
pub fn dual_weight_hierarchy(
    code: &LinearCode,
    opts: &HierarchyOptions,
) -> Result<WeightHierarchy> {
    hierarchy_from_check(code.generator(), code.n() - code.k(), opts)
}

/// Gap numbers `g_1..g_{n−k}` of `code`.
pub fn gap_numbers(code: &LinearCode, limits: &Limits) -> Result<Vec<usize>> {
    Ok(weight_hierarchy(code, &limits.clone().into())?.gaps)
}

/// Outcome of the two duality identities between a hierarchy and its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    /// `{d_i} = [n] \ {n + 1 − d_j^⊥}`.
    pub set_identity: bool,
    /// `d_i = n + 1 − g^⊥_{k−i+1}` for every i.
    pub gap_identity: bool,
    /// Indices `i` where the gap identity fails.
    pub violations: Vec<usize>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.set_identity && self.gap_identity
    }
}

pub fn wei_duality(primal: &WeightHierarchy, dual: &WeightHierarchy) -> DualityReport {
    let n = primal.n;
    let k = primal.dimension;
    let reflected: Vec<usize> = dual
        .values
        .iter()
        .filter(|&&d| d <= n)
        .map(|&d| n + 1 - d)
        .collect();
    let expected = complement(n, &reflected);
    let set_identity = dual.n == n && expected == primal.values;
    let violations: Vec<usize> = (1..=k)
        .filter(|&i| dual.gaps.len() != k || primal.values[i - 1] + dual.gaps[k - i] != n + 1)
        .collect();
    DualityReport {
        set_identity,
        gap_identity: violations.is_empty(),
        violations,
    }
}

/// Computes both hierarchies of `code` and checks the duality identities.
pub fn check_wei_duality(code: &LinearCode, limits: &Limits) -> Result<DualityReport> {
    let opts: HierarchyOptions = limits.clone().into();
    let primal = weight_hierarchy(code, &opts)?;
    let dual = dual_weight_hierarchy(code, &opts)?;
    Ok(wei_duality(&primal, &dual))
}

/// The largest dual gap number `g_k^⊥` obtained two ways from the dual hierarchy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GkDual {
    /// `max{k + i : d_i^⊥ < k + i}`, or `k` when no index qualifies.
    pub max_form: usize,
    /// `min{k + i : d_i^⊥ = k + i} − 1`, or `n` when no index qualifies.
    pub min_form: usize,
}

impl GkDual {
    pub fn agree(&self) -> bool {
        self.max_form == self.min_form
    }

    pub fn value(&self) -> usize {
        self.max_form
    }

    /// `n + 1 − g_k^⊥`.
    pub fn distance(&self, n: usize) -> usize {
        n + 1 - self.max_form
    }
}

/// Evaluates both characterizations of `g_k^⊥` for an `[n, k]` code.
pub fn gk_dual(n: usize, k: usize, dual: &[usize]) -> GkDual {
    let max_form = (1..=dual.len())
        .filter(|&i| dual[i - 1] < k + i)
        .map(|i| k + i)
        .max()
        .unwrap_or(k);
    let min_form = (1..=dual.len())
        .find(|&i| dual[i - 1] == k + i)
        .map_or(n, |i| k + i - 1);
    GkDual { max_form, min_form }
}

/// `d_i` by enumerating every `i`-dimensional subcode directly.
///
/// Each subspace is visited once through its unique reduced echelon basis in
/// message coordinates; its support is the union of the supports of the
/// corresponding codewords.
pub fn ghw_oracle(code: &LinearCode, i: usize, limits: &Limits) -> Result<usize> {
    check_range("i", i, 1, code.k())?;
    let size = code.size();
    if size > limits.max_oracle {
        return Err(Error::LimitExceeded {
            what: "q^k",
            value: size,
            limit: limits.max_oracle,
        });
    }
    let f = code.field();
    let (k, n, q) = (code.k(), code.n(), code.q());
    let g = code.generator();
    let mut best = usize::MAX;
    for pivots in Combinations::new(k, i) {
        // free slots: (row, message column) right of the row's pivot, not a pivot column
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                let pivots = &pivots;
                (p + 1..k)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut coeffs = vec![vec![0 as Elem; k]; i];
            for (r, &p) in pivots.iter().enumerate() {
                coeffs[r][p] = 1;
            }
            for (&(r, c), &d) in free.iter().zip(&digits) {
                coeffs[r][c] = d as Elem;
            }
            let mut covered = vec![false; n];
            for row in &coeffs {
                for (col, cov) in covered.iter_mut().enumerate() {
                    if *cov {
                        continue;
                    }
                    let v = row
                        .iter()
                        .enumerate()
                        .fold(0, |acc, (t, &a)| f.add(acc, f.mul(a, g.get(t, col))));
                    *cov = v != 0;
                }
            }
            best = best.min(covered.iter().filter(|&&c| c).count());
            // advance the base-q counter over the free slots
            let mut pos = 0;
            while pos < digits.len() {
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
    }
    Ok(best)
}
