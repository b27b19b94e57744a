//! Per-coordinate locality and greedy covering by low-weight dual codewords.

use crate::algebra::{support, Elem, Matrix};
use crate::code::LinearCode;
use crate::error::{check_range, Error, Result};
use crate::subsets::{Combinations, EchelonStack, Limits};

/// A dual codeword of minimum weight among those covering `coordinate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairWord {
    pub coordinate: usize,
    /// Scaled so that the entry at `coordinate` is 1.
    pub word: Vec<Elem>,
}

impl RepairWord {
    pub fn weight(&self) -> usize {
        crate::algebra::weight(&self.word)
    }

    /// Locality of the covered coordinate: weight minus one.
    pub fn locality(&self) -> usize {
        self.weight() - 1
    }

    pub fn support(&self) -> Vec<usize> {
        support(&self.word)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalityProfile {
    pub per_coordinate: Vec<usize>,
    pub r: usize,
    pub covering_rows: Vec<Vec<Elem>>,
}

fn guard(code: &LinearCode, limits: &Limits) -> Result<()> {
    limits.check_n(code.n())?;
    if code.k() == code.n() {
        return Err(Error::NoRedundancy);
    }
    Ok(())
}

/// Minimum-weight dual codeword covering coordinate `j` (0-based), choosing
/// the lexicographically smallest support among ties.
pub fn repair_word(code: &LinearCode, j: usize, limits: &Limits) -> Result<RepairWord> {
    guard(code, limits)?;
    let n = code.n();
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, len: n });
    }
    let g = code.generator();
    let f = code.field();
    let target = g.column(j);
    let cols: Vec<Vec<Elem>> = (0..n).map(|c| g.column(c)).collect();
    let others: Vec<usize> = (0..n).filter(|&c| c != j).collect();
    for w in 1..=n {
        // inserting j into lex-ordered (w − 1)-subsets of the others keeps lex order
        for rest in Combinations::new(n - 1, w - 1) {
            let mut set: Vec<usize> = rest.iter().map(|&t| others[t]).collect();
            let at = set.partition_point(|&c| c < j);
            set.insert(at, j);
            // a dual word covering j lives inside `set` iff column j is in the
            // span of the other columns of `set`
            let mut basis = EchelonStack::new(f);
            for &c in set.iter().filter(|&&c| c != j) {
                basis.insert(&cols[c]);
            }
            if basis.insert(&target) {
                continue;
            }
            let local = g.select_columns(&set)?.nullspace();
            let pos = set.iter().position(|&c| c == j).expect("j in set");
            let row = (0..local.rows())
                .find(|&r| local.get(r, pos) != 0)
                .expect("dependency through j");
            let scale = f.inv(local.get(row, pos))?;
            let mut word = vec![0; n];
            for (t, &c) in set.iter().enumerate() {
                word[c] = f.mul(local.get(row, t), scale);
            }
            return Ok(RepairWord {
                coordinate: j,
                word,
            });
        }
    }
    Err(Error::UncoveredCoordinate(j))
}

/// `min{wt(h) − 1 : h ∈ C⊥, h_j ≠ 0}` for 0-based coordinate `j`.
pub fn coordinate_locality(code: &LinearCode, j: usize, limits: &Limits) -> Result<usize> {
    Ok(repair_word(code, j, limits)?.locality())
}

/// Greedy cover: repeatedly take the minimum-weight dual word through the
/// smallest uncovered coordinate. Fails if some chosen word is heavier than `r + 1`.
pub fn covering_rows(code: &LinearCode, r: usize, limits: &Limits) -> Result<Vec<RepairWord>> {
    guard(code, limits)?;
    let n = code.n();
    let mut covered = vec![false; n];
    let mut rows = Vec::new();
    while let Some(j) = covered.iter().position(|&c| !c) {
        let h = repair_word(code, j, limits)?;
        if h.locality() > r {
            return Err(Error::LocalityExceeded {
                coordinate: j,
                needed: h.locality(),
                r,
            });
        }
        for c in h.support() {
            covered[c] = true;
        }
        rows.push(h);
    }
    Ok(rows)
}

/// Per-coordinate localities, their maximum `r`, and the greedy cover for `r`.
pub fn locality(code: &LinearCode, limits: &Limits) -> Result<LocalityProfile> {
    guard(code, limits)?;
    let words = (0..code.n())
        .map(|j| repair_word(code, j, limits))
        .collect::<Result<Vec<_>>>()?;
    let per_coordinate: Vec<usize> = words.iter().map(RepairWord::locality).collect();
    let r = per_coordinate.iter().copied().max().unwrap_or(0);
    // the greedy cover reuses the per-coordinate repair words
    let mut covered = vec![false; code.n()];
    let mut covering = Vec::new();
    while let Some(j) = covered.iter().position(|&c| !c) {
        for c in words[j].support() {
            covered[c] = true;
        }
        covering.push(words[j].word.clone());
    }
    Ok(LocalityProfile {
        per_coordinate,
        r,
        covering_rows: covering,
    })
}

/// Every coordinate has locality at most `r`.
pub fn is_lrc(code: &LinearCode, r: usize, limits: &Limits) -> Result<bool> {
    if code.k() == code.n() {
        return Ok(false);
    }
    for j in 0..code.n() {
        match repair_word(code, j, limits) {
            Ok(h) if h.locality() <= r => {}
            Ok(_) | Err(Error::UncoveredCoordinate(_)) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// Structural checks on a cover: coverage, weights, independence, and the count bounds.
pub fn cover_is_valid(code: &LinearCode, rows: &[Vec<Elem>], r: usize) -> Result<bool> {
    check_range("r", r, 1, code.k())?;
    let n = code.n();
    let k = code.k();
    let mut covered = vec![false; n];
    for row in rows {
        if !code
            .generator()
            .mul(&Matrix::from_elems(code.field(), std::slice::from_ref(row), n)?.transpose())?
            .is_zero()
        {
            return Ok(false);
        }
        if crate::algebra::weight(row) > r + 1 {
            return Ok(false);
        }
        for c in support(row) {
            covered[c] = true;
        }
    }
    let independent = Matrix::from_elems(code.field(), rows, n)?.rank() == rows.len();
    let count_ok = k.div_ceil(r) <= rows.len() && rows.len() <= n - k;
    Ok(covered.iter().all(|&c| c) && independent && count_ok)
}
