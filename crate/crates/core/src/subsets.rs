//! Subset enumeration over coordinate sets with incremental column rank.
//!
//! For a check matrix `M` (rows = constraints, columns = coordinates) the
//! nullity `|S| - rank(M_S)` is the dimension of the space of vectors in
//! `ker M` supported inside `S`. The depth-first sweep below keeps an echelon
//! basis of the chosen columns as a stack, so each step costs one reduction.

use std::time::{Duration, Instant};

use crate::algebra::{Elem, Field, Matrix};
use crate::error::{Error, Result};

/// Enumeration limits shared by the exhaustive analyses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest code length accepted by subset sweeps.
    pub max_n: usize,
    /// Largest `q^k` accepted by codeword enumeration.
    pub max_oracle: u64,
    /// Wall-time budget for a single sweep.
    pub time_budget: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 24,
            max_oracle: 1_000_000,
            time_budget: None,
        }
    }
}

/// Hard ceiling imposed by the `u64` subset masks.
pub(crate) const MASK_BITS: usize = 63;

impl Limits {
    pub(crate) fn check_n(&self, n: usize) -> Result<()> {
        let limit = self.max_n.min(MASK_BITS);
        if n > limit {
            return Err(Error::LimitExceeded {
                what: "n",
                value: n as u64,
                limit: limit as u64,
            });
        }
        Ok(())
    }
}

struct Clock {
    start: Instant,
    budget: Option<Duration>,
    ticks: u32,
}

impl Clock {
    fn new(budget: Option<Duration>) -> Self {
        Clock {
            start: Instant::now(),
            budget,
            ticks: 0,
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 0xfff == 0 {
            if let Some(b) = self.budget {
                if self.start.elapsed() > b {
                    return Err(Error::Timeout);
                }
            }
        }
        Ok(())
    }
}

/// Echelon basis that supports push/pop in insertion order.
pub(crate) struct EchelonStack<'f> {
    field: &'f Field,
    rows: Vec<(usize, Vec<Elem>)>,
}

impl<'f> EchelonStack<'f> {
    pub(crate) fn new(field: &'f Field) -> Self {
        EchelonStack {
            field,
            rows: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; pushes it and returns `true` if independent.
    pub(crate) fn insert(&mut self, v: &[Elem]) -> bool {
        let f = self.field;
        let mut w = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = w[*pivot];
            if c != 0 {
                for (wi, &ri) in w.iter_mut().zip(row) {
                    if ri != 0 {
                        *wi = f.sub(*wi, f.mul(c, ri));
                    }
                }
            }
        }
        match w.iter().position(|&x| x != 0) {
            Some(p) => {
                let inv = f.inv(w[p]).expect("nonzero pivot");
                for x in w.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                self.rows.push((p, w));
                true
            }
            None => false,
        }
    }

    pub(crate) fn pop(&mut self) {
        self.rows.pop();
    }
}

pub(crate) fn columns(m: &Matrix) -> Vec<Vec<Elem>> {
    (0..m.cols()).map(|c| m.column(c)).collect()
}

/// Result of a minimum-support sweep.
pub(crate) struct Sweep {
    /// `values[i - 1]` is the least `|S|` with nullity `≥ i`.
    pub values: Vec<usize>,
    /// First subset (depth-first lexicographic order) attaining each value.
    pub witnesses: Vec<u64>,
}

struct SweepState<'a, 'f> {
    cols: &'a [Vec<Elem>],
    basis: EchelonStack<'f>,
    best: Vec<usize>,
    witness: Vec<u64>,
    prune: bool,
    clock: Clock,
}

impl SweepState<'_, '_> {
    fn record(&mut self, size: usize, nullity: usize, mask: u64) {
        for i in 0..nullity.min(self.best.len()) {
            if size < self.best[i] {
                self.best[i] = size;
                self.witness[i] = mask;
            }
        }
    }

    /// Some extension of a set with `size` and `nullity`, using at most
    /// `remaining` more coordinates, could still lower an unresolved value.
    fn promising(&self, size: usize, nullity: usize, remaining: usize) -> bool {
        (nullity + 1..=self.best.len()).any(|i| {
            let need = i - nullity;
            need <= remaining && size + need < self.best[i - 1]
        })
    }

    fn visit(&mut self, start: usize, size: usize, mask: u64) -> Result<()> {
        let n = self.cols.len();
        for x in start..n {
            self.clock.tick()?;
            let independent = self.basis.insert(&self.cols[x]);
            let new_size = size + 1;
            let nullity = new_size - self.basis.rank();
            let new_mask = mask | (1u64 << x);
            self.record(new_size, nullity, new_mask);
            if !self.prune || self.promising(new_size, nullity, n - x - 1) {
                self.visit(x + 1, new_size, new_mask)?;
            }
            if independent {
                self.basis.pop();
            }
        }
        Ok(())
    }
}

/// Least subset sizes reaching nullity `1..=targets` with respect to `check`.
///
/// `targets` must not exceed the nullity of the full column set.
pub(crate) fn min_support_sweep(
    check: &Matrix,
    targets: usize,
    limits: &Limits,
    prune: bool,
) -> Result<Sweep> {
    let n = check.cols();
    limits.check_n(n)?;
    let cols = columns(check);
    let mut state = SweepState {
        cols: &cols,
        basis: EchelonStack::new(check.field()),
        best: vec![usize::MAX; targets],
        witness: vec![0; targets],
        prune,
        clock: Clock::new(limits.time_budget),
    };
    if targets > 0 {
        state.visit(0, 0, 0)?;
    }
    debug_assert!(state.best.iter().all(|&b| b != usize::MAX));
    Ok(Sweep {
        values: state.best,
        witnesses: state.witness,
    })
}

pub(crate) fn mask_to_set(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).collect()
}

/// Lexicographic iterator over `size`-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, size: usize) -> Self {
        Combinations {
            n,
            current: (size <= n).then(|| (0..size).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}
