//! Fixture codes: Tamo–Barg optimal LRCs, Reed–Solomon codes and seeded random codes.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Elem, Field, Matrix};
use crate::code::LinearCode;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionKind {
    TamoBarg,
    ReedSolomon,
    Random,
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionKind::TamoBarg => "tamo-barg",
            ConstructionKind::ReedSolomon => "reed-solomon",
            ConstructionKind::Random => "random",
        })
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tamo-barg" | "tamo_barg" => Ok(ConstructionKind::TamoBarg),
            "reed-solomon" | "reed_solomon" | "rs" => Ok(ConstructionKind::ReedSolomon),
            "random" => Ok(ConstructionKind::Random),
            other => Err(Error::InvalidParameters(format!(
                "unknown construction '{other}'"
            ))),
        }
    }
}

/// Parameters of a fixture; `r` is used only by Tamo–Barg, `seed` only by random codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub r: Option<usize>,
    pub seed: Option<u64>,
}

/// A constructed code together with the evaluation points it used, if any.
#[derive(Clone, Debug)]
pub struct Construction {
    pub spec: ConstructionSpec,
    pub evaluation_points: Vec<Elem>,
    pub code: LinearCode,
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Construction> {
        let (code, evaluation_points) = match self.kind {
            ConstructionKind::TamoBarg => {
                let r = self
                    .r
                    .ok_or_else(|| Error::InvalidParameters("tamo-barg needs r".into()))?;
                tamo_barg_with_points(self.q, self.n, self.k, r)?
            }
            ConstructionKind::ReedSolomon => reed_solomon_with_points(self.q, self.n, self.k)?,
            ConstructionKind::Random => (
                random_code(self.q, self.n, self.k, self.seed.unwrap_or(0))?,
                Vec::new(),
            ),
        };
        Ok(Construction {
            spec: self.clone(),
            evaluation_points,
            code,
        })
    }
}

fn field(q: u32) -> Result<Arc<Field>> {
    Ok(Arc::new(Field::with_order(q, None)?))
}

fn evaluation_code(f: &Arc<Field>, points: &[Elem], exponents: &[u64]) -> Result<LinearCode> {
    let rows: Vec<Vec<Elem>> = exponents
        .iter()
        .map(|&e| points.iter().map(|&x| f.pow(x, e)).collect())
        .collect();
    LinearCode::from_generator(f, &Matrix::from_elems(f, &rows, points.len())?)
}

/// Exponents `i + (r + 1)j` of the encoding monomials: `k` of them, with
/// `j < ⌊k/r⌋` for every `i < r` plus `j = ⌊k/r⌋` for `i < k mod r`.
fn tamo_barg_exponents(k: usize, r: usize) -> Vec<u64> {
    let (full, extra) = (k / r, k % r);
    let mut out = Vec::with_capacity(k);
    for j in 0..=full {
        for i in 0..r {
            if j < full || i < extra {
                out.push((i + (r + 1) * j) as u64);
            }
        }
    }
    out
}

fn tamo_barg_with_points(q: u32, n: usize, k: usize, r: usize) -> Result<(LinearCode, Vec<Elem>)> {
    let f = field(q)?;
    let bad = |why: String| Err(Error::InvalidParameters(why));
    if r == 0 || k == 0 || k > n {
        return bad(format!(
            "need 1 ≤ r and 1 ≤ k ≤ n, got n = {n}, k = {k}, r = {r}"
        ));
    }
    if !n.is_multiple_of(r + 1) {
        return bad(format!("r + 1 = {} must divide n = {n}", r + 1));
    }
    if !(q as usize - 1).is_multiple_of(n) {
        return bad(format!("n = {n} must divide q − 1 = {}", q - 1));
    }
    if k * (r + 1) > n * r {
        return bad(format!(
            "need k ≤ nr/(r + 1), got n = {n}, k = {k}, r = {r}"
        ));
    }
    // order-n subgroup of F_q^*, a union of cosets of the order-(r + 1) subgroup
    let g = f.pow(f.primitive_element(), ((q as usize - 1) / n) as u64);
    let mut points: Vec<Elem> = (0..n as u64).map(|e| f.pow(g, e)).collect();
    points.sort_unstable();
    let code = evaluation_code(&f, &points, &tamo_barg_exponents(k, r))?;
    Ok((code, points))
}

/// Tamo–Barg code with good polynomial `x^{r+1}` over the order-`n` subgroup of GF(q)*.
///
/// Requires `(r + 1) | n`, `n | q − 1` and `k ≤ nr/(r + 1)`. Each coset of the
/// order-`(r + 1)` subgroup is a repair group.
pub fn tamo_barg(q: u32, n: usize, k: usize, r: usize) -> Result<LinearCode> {
    Ok(tamo_barg_with_points(q, n, k, r)?.0)
}

fn reed_solomon_with_points(q: u32, n: usize, k: usize) -> Result<(LinearCode, Vec<Elem>)> {
    let f = field(q)?;
    if n > q as usize {
        return Err(Error::InvalidParameters(format!(
            "need n ≤ q, got n = {n}, q = {q}"
        )));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 ≤ k ≤ n, got n = {n}, k = {k}"
        )));
    }
    let points: Vec<Elem> = (0..n as u32).map(|x| x as Elem).collect();
    let exponents: Vec<u64> = (0..k as u64).collect();
    Ok((evaluation_code(&f, &points, &exponents)?, points))
}

/// `[n, k]` Reed–Solomon code evaluated at the first `n` field elements.
pub fn reed_solomon(q: u32, n: usize, k: usize) -> Result<LinearCode> {
    Ok(reed_solomon_with_points(q, n, k)?.0)
}

/// Uniform sample from `[0, q)` by rejection on `next_u32`.
fn sample(rng: &mut ChaCha8Rng, q: u32) -> Elem {
    let zone = u32::MAX - u32::MAX % q;
    loop {
        let v = rng.next_u32();
        if v < zone {
            return (v % q) as Elem;
        }
    }
}

/// Seeded random `[n, k]` code over GF(q).
///
/// ChaCha8 seeded with `seed_from_u64(seed)`; entries are drawn row-major,
/// zero columns are redrawn in place and rank-deficient matrices are redrawn whole.
pub fn random_code(q: u32, n: usize, k: usize, seed: u64) -> Result<LinearCode> {
    let f = field(q)?;
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 ≤ k ≤ n, got n = {n}, k = {k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut rows: Vec<Vec<Elem>> = (0..k)
            .map(|_| (0..n).map(|_| sample(&mut rng, q)).collect())
            .collect();
        for c in 0..n {
            while rows.iter().all(|row| row[c] == 0) {
                for row in rows.iter_mut() {
                    row[c] = sample(&mut rng, q);
                }
            }
        }
        let g = Matrix::from_elems(&f, &rows, n)?;
        if g.rank() == k {
            return LinearCode::from_generator(&f, &g);
        }
    }
}
