//! Linear codes given by a generator matrix.

use std::sync::Arc;

use crate::algebra::{support, Elem, Field, Matrix};
use crate::error::{Error, Result};
use crate::subsets::{min_support_sweep, Limits};

/// An `[n, k]` linear code over GF(q).
///
/// The generator is kept in reduced row echelon form with exactly `k` rows and
/// the parity-check matrix is its nullspace basis.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Field>,
    generator: Matrix,
    parity_check: Matrix,
    zero_coordinates: Vec<usize>,
}

/// A subcode given by a basis, with its support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcodeWitness {
    pub basis: Vec<Vec<Elem>>,
    pub dimension: usize,
    pub support: Vec<usize>,
}

impl SubcodeWitness {
    pub(crate) fn from_basis(basis: Vec<Vec<Elem>>) -> Self {
        let n = basis.first().map_or(0, Vec::len);
        let support = (0..n)
            .filter(|&c| basis.iter().any(|row| row[c] != 0))
            .collect();
        SubcodeWitness {
            dimension: basis.len(),
            basis,
            support,
        }
    }
}

impl LinearCode {
    /// Validates `generator` and derives the parity-check matrix.
    ///
    /// Redundant rows are dropped; `k` is the rank of `generator`. A zero column
    /// is rejected.
    pub fn from_generator(field: &Arc<Field>, generator: &Matrix) -> Result<LinearCode> {
        let code = LinearCode::build(field, generator)?;
        if let Some(&c) = code.zero_coordinates.first() {
            return Err(Error::ZeroColumn(c));
        }
        Ok(code)
    }

    /// Convenience constructor from raw integer rows.
    pub fn from_rows<R: AsRef<[u32]>>(field: &Arc<Field>, rows: &[R]) -> Result<LinearCode> {
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        LinearCode::from_generator(field, &Matrix::from_rows(field, rows, n)?)
    }

    fn build(field: &Arc<Field>, generator: &Matrix) -> Result<LinearCode> {
        if **generator.field() != **field {
            return Err(Error::FieldMismatch);
        }
        if generator.cols() == 0 {
            return Err(Error::InvalidParameters("code length must be ≥ 1".into()));
        }
        let g = generator.row_space_basis();
        if g.rows() == 0 {
            return Err(Error::ZeroDimension);
        }
        let zero_coordinates = (0..g.cols())
            .filter(|&c| (0..g.rows()).all(|r| g.get(r, c) == 0))
            .collect();
        let parity_check = g.nullspace();
        Ok(LinearCode {
            field: Arc::clone(field),
            generator: g,
            parity_check,
            zero_coordinates,
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.parity_check
    }

    /// Coordinates where every codeword vanishes. Always empty for codes built
    /// by [`LinearCode::from_generator`]; may be nonempty for a computed dual.
    pub fn zero_coordinates(&self) -> &[usize] {
        &self.zero_coordinates
    }

    /// The `[n, n − k]` dual code generated by the parity-check matrix.
    ///
    /// Zero coordinates are permitted here and reported by
    /// [`LinearCode::zero_coordinates`].
    pub fn dual(&self) -> Result<LinearCode> {
        if self.k() == self.n() {
            return Err(Error::ZeroDimension);
        }
        LinearCode::build(&self.field, &self.parity_check)
    }

    /// Both codes have the same codeword set.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        *self.field == *other.field
            && self.n() == other.n()
            && self.k() == other.k()
            && self
                .generator
                .row_space_contains(&other.generator)
                .unwrap_or(false)
    }

    /// `true` when `v` is a codeword.
    pub fn contains(&self, v: &[Elem]) -> bool {
        if v.len() != self.n() {
            return false;
        }
        let f = &self.field;
        (0..self.parity_check.rows()).all(|r| {
            self.parity_check
                .row(r)
                .iter()
                .zip(v)
                .fold(0, |acc, (&h, &x)| f.add(acc, f.mul(h, x)))
                == 0
        })
    }

    /// Codeword `message · G`.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.k() {
            return Err(Error::DimensionMismatch(format!(
                "message of length {} for k = {}",
                message.len(),
                self.k()
            )));
        }
        let f = &self.field;
        let mut out = vec![0; self.n()];
        for (r, &m) in message.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(m, self.generator.get(r, c)));
            }
        }
        Ok(out)
    }

    /// Number of codewords, `q^k`, saturating.
    pub fn size(&self) -> u64 {
        (self.q() as u64).saturating_pow(self.k() as u32)
    }

    /// Every codeword, message order (base-q counter, first symbol fastest).
    pub fn codewords(&self, limits: &Limits) -> Result<Vec<Vec<Elem>>> {
        let count = self.size();
        if count > limits.max_oracle {
            return Err(Error::LimitExceeded {
                what: "q^k",
                value: count,
                limit: limits.max_oracle,
            });
        }
        let q = self.q() as u64;
        (0..count)
            .map(|mut idx| {
                let msg: Vec<Elem> = (0..self.k())
                    .map(|_| {
                        let d = (idx % q) as Elem;
                        idx /= q;
                        d
                    })
                    .collect();
                self.encode(&msg)
            })
            .collect()
    }

    /// Minimum Hamming distance via the subset-rank characterization.
    pub fn min_distance(&self, limits: &Limits) -> Result<usize> {
        let sweep = min_support_sweep(&self.parity_check, 1, limits, true)?;
        Ok(sweep.values[0])
    }

    /// A codeword of minimum weight.
    pub fn min_weight_codeword(&self, limits: &Limits) -> Result<Vec<Elem>> {
        let sweep = min_support_sweep(&self.parity_check, 1, limits, true)?;
        let set = crate::subsets::mask_to_set(sweep.witnesses[0]);
        let local = self.parity_check.select_columns(&set)?.nullspace();
        let mut word = vec![0; self.n()];
        for (j, &c) in set.iter().enumerate() {
            word[c] = local.get(0, j);
        }
        debug_assert_eq!(support(&word), set);
        Ok(word)
    }
}
