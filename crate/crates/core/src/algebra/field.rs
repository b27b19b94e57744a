//! Arithmetic in GF(p^m) for q = p^m ≤ 2^16.
//!
//! Elements are integer indices in `[0, q)`. For extension fields the index
//! is the base-p encoding of the coefficient vector of the residue polynomial,
//! lowest degree first, so `0` is the additive and `1` the multiplicative
//! identity in every field. Prime fields use direct modular arithmetic;
//! extension fields multiply through exp/log tables over a primitive element.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Raw element index. Only meaningful together with the [`Field`] it came from.
pub type Elem = u16;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Full addition tables are kept for extension fields up to this order.
const ADD_TABLE_MAX: u32 = 256;

#[derive(Clone)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, coefficients low to high (length m + 1). Empty for prime fields.
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
    add_table: Option<Vec<Elem>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.q)
        } else {
            write!(f, "GF({}^{})", self.p, self.m)
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, m)` with `q = p^m`, `p` prime.
pub fn prime_power(q: u32) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, m))
}

impl Field {
    /// Builds GF(p^m). With `m > 1` and no modulus, the smallest monic
    /// irreducible polynomial in base-p integer order is used.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidParameters(
                "extension degree must be ≥ 1".into(),
            ));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(Error::FieldTooLarge((p as u64).saturating_pow(m))),
        };
        if let Some(c) = modulus {
            let bad = c.len() != m as usize + 1 || c[m as usize] != 1 || c.iter().any(|&x| x >= p);
            if bad {
                return Err(Error::BadModulus { expected: m, p });
            }
        }
        if m == 1 {
            return Ok(Field {
                p,
                m,
                q,
                modulus: Vec::new(),
                exp: Vec::new(),
                log: Vec::new(),
                add_table: None,
            });
        }
        let modulus = match modulus {
            Some(c) => {
                if !poly::is_irreducible(c, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                c.to_vec()
            }
            None => poly::smallest_irreducible(p, m),
        };
        let mut field = Field {
            p,
            m,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        field.build_tables();
        Ok(field)
    }

    /// GF(p) for prime `p`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// Field of order `q`, factoring `q` as a prime power.
    pub fn with_order(q: u32, modulus: Option<&[u32]>) -> Result<Field> {
        let (p, m) = prime_power(q)?;
        Field::new(p, m, modulus)
    }

    fn build_tables(&mut self) {
        let (p, m, q) = (self.p, self.m as usize, self.q);
        let order = q - 1;
        let to_digits = |mut v: u32| {
            let mut d = vec![0u32; m];
            for slot in d.iter_mut() {
                *slot = v % p;
                v /= p;
            }
            d
        };
        let from_digits = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        // First element (in index order) whose powers reach every nonzero element.
        let mut exp = Vec::with_capacity(order as usize);
        for g in 2..q {
            exp.clear();
            let gd = to_digits(g % q);
            let mut cur = to_digits(1);
            loop {
                exp.push(from_digits(&cur) as Elem);
                cur = poly::mul_mod(&cur, &gd, &self.modulus, p);
                if from_digits(&cur) == 1 {
                    break;
                }
            }
            if exp.len() as u32 == order {
                break;
            }
        }
        let mut log = vec![0u32; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        self.exp = exp;
        self.log = log;
        if q <= ADD_TABLE_MAX {
            let mut table = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = self.add_digits(a, b) as Elem;
                }
            }
            self.add_table = Some(table);
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the modulus, low to high; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        if self.m == 1 {
            None
        } else {
            Some(&self.modulus)
        }
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    /// Validates an integer as an element index.
    pub fn elem(&self, value: u32) -> Result<Elem> {
        if value >= self.q {
            return Err(Error::ElementOutOfRange { value, q: self.q });
        }
        Ok(value as Elem)
    }

    /// Iterator over all elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|v| v as Elem)
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (p, mut a, mut b) = (self.p, a, b);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.m {
            out += ((a % p + b % p) % p) * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.m == 1 {
            return ((a as u32 + b as u32) % self.p) as Elem;
        }
        match &self.add_table {
            Some(t) => t[a as usize * self.q as usize + b as usize],
            None => self.add_digits(a as u32, b as u32) as Elem,
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return ((self.p - a as u32) % self.p) as Elem;
        }
        let (p, mut a) = (self.p, a as u32);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.m {
            out += ((p - a % p) % p) * place;
            place *= p;
            a /= p;
        }
        out as Elem
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.m == 1 {
            return ((a as u32 * b as u32) % self.p) as Elem;
        }
        let order = self.q - 1;
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(if s >= order { s - order } else { s }) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        if self.m == 1 {
            return Ok(mod_inverse(a as i64, self.p as i64) as Elem);
        }
        let order = self.q - 1;
        let l = self.log[a as usize];
        Ok(self.exp[((order - l) % order) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `pow(0, 0) = 1`.
    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc: Elem = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        if self.m > 1 {
            return self.exp[1];
        }
        let order = (self.q - 1) as u64;
        let factors = prime_factors(order);
        (1..self.q as Elem)
            .find(|&g| factors.iter().all(|&f| self.pow(g, order / f) != 1))
            .unwrap_or(1)
    }

    /// Wraps an index as a checked element bound to this field.
    pub fn element(self: &Arc<Self>, value: u32) -> Result<FieldElement> {
        Ok(FieldElement {
            field: Arc::clone(self),
            value: self.elem(value)?,
        })
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Inverse of `a` modulo prime `p` by the extended Euclidean algorithm.
fn mod_inverse(a: i64, p: i64) -> i64 {
    let (mut r0, mut r1) = (p, a.rem_euclid(p));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (t0, t1) = (t1, t0 - quot * t1);
    }
    t0.rem_euclid(p)
}

/// Field element carrying its field; arithmetic checks that operands agree.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Arc<Field>,
    value: Elem,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.field == *other.field
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: Elem) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.div(self.value, other.value)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(self.value, e))
    }
}

/// Dense polynomials over GF(p), coefficients low to high.
mod poly {
    fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        super::mod_inverse(a as i64, p as i64) as u32
    }

    /// Remainder of `a` divided by nonzero `b`.
    pub(super) fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p);
        while r.len() > db && !(r.len() == 1 && r[0] == 0) {
            let dr = r.len() - 1;
            let c = (r[dr] * lead_inv) % p;
            if c != 0 {
                for (i, &bi) in b.iter().enumerate() {
                    let idx = dr - db + i;
                    r[idx] = (r[idx] + p - (c * bi) % p) % p;
                }
            }
            r.pop();
            r = trim(r);
            if r.is_empty() {
                r.push(0);
            }
        }
        r
    }

    /// `a·b mod modulus` where `a`, `b` have `m` digits and `modulus` is monic of degree m.
    pub(super) fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
        let m = modulus.len() - 1;
        let mut prod = vec![0u32; 2 * m];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % p;
            }
        }
        let mut r = rem(&prod, modulus, p);
        r.resize(m, 0);
        r
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub(super) fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for code in 0..count {
                let mut g = vec![0u32; d + 1];
                let mut c = code;
                for slot in g.iter_mut().take(d) {
                    *slot = (c % p as u64) as u32;
                    c /= p as u64;
                }
                g[d] = 1;
                let r = rem(f, &g, p);
                if r.iter().all(|&x| x == 0) {
                    return false;
                }
            }
        }
        true
    }

    pub(super) fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
        let count = (p as u64).pow(m);
        for code in 0..count {
            let mut f = vec![0u32; m as usize + 1];
            let mut c = code;
            for slot in f.iter_mut().take(m as usize) {
                *slot = (c % p as u64) as u32;
                c /= p as u64;
            }
            f[m as usize] = 1;
            if f[0] != 0 && is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over GF(p)")
    }
}
