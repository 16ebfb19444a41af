//! Exact arithmetic in GF(p^m) with a chosen primitive element and a fully
//! materialized discrete-log table.
//!
//! Elements are encoded as integers `0..q` by base-`p` packing of the
//! polynomial coefficient vector, constant term least significant. The
//! reducing polynomial is the least monic irreducible of degree `m`,
//! comparing coefficient lists low-degree-first, so construction is
//! deterministic: identical inputs yield identical tables.

use serde::{Deserialize, Serialize};

use crate::error::FieldError;

/// Sentinel stored in the dlog table at index 0 (zero has no logarithm).
const DLOG_NONE: u32 = u32::MAX;

/// Largest order for which tables are materialized.
const MAX_ORDER: u64 = 1 << 32;

/// GF(p^m) arithmetic context.
///
/// Immutable once constructed; all operations are pure and cheap enough to
/// call from any number of threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    /// Monic reducing polynomial, constant term first, length `m + 1`.
    modulus: Vec<u32>,
    eps: u32,
    eps_rank: u32,
    primitive_count: u32,
    /// `exp_table[i]` = ε^i for `0 <= i <= q-2`.
    exp_table: Vec<u32>,
    /// `dlog_table[x]` = i with ε^i = x; `DLOG_NONE` at index 0.
    dlog_table: Vec<u32>,
}

/// Primitive 3rd root of unity ξ = ε^{2t} in a field of order q = 6t+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubeRoot {
    /// ξ, satisfying ξ³ = 1, ξ ≠ 1 and 1 + ξ + ξ² = 0.
    pub xi: u32,
    /// t = (q-1)/6.
    pub t: u32,
}

/// Serializable field description; enough to rebuild the field bit-for-bit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
    pub eps: u32,
}

impl FiniteField {
    /// Builds GF(p^m) with the first primitive element in element order.
    pub fn new(p: u32, m: u32) -> Result<Self, FieldError> {
        Self::with_primitive_rank(p, m, 0)
    }

    /// Builds GF(p^m) using the `eps_rank`-th primitive element, counting
    /// from 0 in ascending element encoding.
    pub fn with_primitive_rank(p: u32, m: u32, eps_rank: u32) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q_big = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(FieldError::OrderTooLarge { p: p as u64, m })?;
        if q_big > MAX_ORDER {
            return Err(FieldError::OrderTooLarge { p: p as u64, m });
        }
        // Element encodings are u32; order 2^32 itself would not fit.
        let q = u32::try_from(q_big).map_err(|_| FieldError::OrderTooLarge { p: p as u64, m })?;

        let modulus = least_irreducible(p, m)?;
        let ctx = PolyCtx {
            p,
            m: m as usize,
            modulus: &modulus,
        };

        // Multiplicative orders: x is primitive iff x^((q-1)/l) != 1 for
        // every prime l dividing q-1.
        let order_checks: Vec<u64> = prime_factors((q - 1) as u64)
            .into_iter()
            .map(|l| ((q - 1) as u64) / l)
            .collect();
        let mut primitives = Vec::new();
        for x in 1..q {
            if order_checks.iter().all(|&e| ctx.pow(x, e) != 1) {
                primitives.push(x);
            }
        }
        let primitive_count = primitives.len() as u32;
        let eps =
            *primitives
                .get(eps_rank as usize)
                .ok_or(FieldError::PrimitiveRankOutOfRange {
                    rank: eps_rank,
                    count: primitive_count,
                    q,
                })?;

        let mut exp_table = Vec::with_capacity((q - 1) as usize);
        let mut dlog_table = vec![DLOG_NONE; q as usize];
        let mut acc = 1u32;
        for i in 0..q - 1 {
            exp_table.push(acc);
            debug_assert_eq!(dlog_table[acc as usize], DLOG_NONE);
            dlog_table[acc as usize] = i;
            acc = ctx.mul(acc, eps);
        }
        debug_assert_eq!(acc, 1, "primitive element order must be q-1");

        Ok(Self {
            p,
            m,
            q,
            modulus,
            eps,
            eps_rank,
            primitive_count,
            exp_table,
            dlog_table,
        })
    }

    /// Rebuilds a field from its descriptor, recovering the primitive rank.
    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self, FieldError> {
        let mut rank = 0;
        loop {
            let f = Self::with_primitive_rank(d.p, d.m, rank)?;
            if f.modulus != d.modulus {
                // The descriptor came from a different modulus convention.
                return Err(FieldError::NotAnElement {
                    value: d.eps,
                    q: f.q,
                });
            }
            if f.eps == d.eps {
                return Ok(f);
            }
            rank += 1;
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field order q = p^m.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Reducing polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The chosen primitive element ε.
    pub fn eps(&self) -> u32 {
        self.eps
    }

    /// Rank of ε among primitive elements in ascending encoding.
    pub fn eps_rank(&self) -> u32 {
        self.eps_rank
    }

    /// Number of primitive elements, φ(q-1).
    pub fn primitive_count(&self) -> u32 {
        self.primitive_count
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            m: self.m,
            modulus: self.modulus.clone(),
            eps: self.eps,
        }
    }

    fn check(&self, x: u32) -> Result<(), FieldError> {
        if x < self.q {
            Ok(())
        } else {
            Err(FieldError::NotAnElement {
                value: x,
                q: self.q,
            })
        }
    }

    fn ctx(&self) -> PolyCtx<'_> {
        PolyCtx {
            p: self.p,
            m: self.m as usize,
            modulus: &self.modulus,
        }
    }

    pub fn add(&self, x: u32, y: u32) -> Result<u32, FieldError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add_raw(x, y))
    }

    pub fn sub(&self, x: u32, y: u32) -> Result<u32, FieldError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add_raw(x, self.neg_raw(y)))
    }

    pub fn neg(&self, x: u32) -> Result<u32, FieldError> {
        self.check(x)?;
        Ok(self.neg_raw(x))
    }

    pub fn mul(&self, x: u32, y: u32) -> Result<u32, FieldError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_raw(x, y))
    }

    /// Multiplicative inverse; `inv(0)` is an error.
    pub fn inv(&self, x: u32) -> Result<u32, FieldError> {
        self.check(x)?;
        if x == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let i = self.dlog_table[x as usize];
        let e = ((self.q - 1) - i) % (self.q - 1);
        Ok(self.exp_table[e as usize])
    }

    /// ε^i, with i reduced mod q-1 (negative exponents allowed).
    pub fn exp(&self, i: i64) -> u32 {
        let period = (self.q - 1) as i64;
        self.exp_table[i.rem_euclid(period) as usize]
    }

    /// Discrete logarithm base ε; `dlog(0)` is an error.
    pub fn dlog(&self, x: u32) -> Result<u32, FieldError> {
        self.check(x)?;
        if x == 0 {
            return Err(FieldError::ZeroDlog);
        }
        Ok(self.dlog_table[x as usize])
    }

    /// x^e by repeated squaring.
    pub fn pow(&self, x: u32, e: u64) -> Result<u32, FieldError> {
        self.check(x)?;
        Ok(self.ctx().pow(x, e))
    }

    /// The primitive 3rd root of unity ξ = ε^{2t}; requires q ≡ 1 (mod 6).
    pub fn cube_root(&self) -> Result<CubeRoot, FieldError> {
        if self.q % 6 != 1 {
            return Err(FieldError::NotSixTPlusOne { q: self.q });
        }
        let t = (self.q - 1) / 6;
        let xi = self.exp(2 * t as i64);
        debug_assert_ne!(xi, 1);
        debug_assert_eq!(self.mul_raw(xi, self.mul_raw(xi, xi)), 1);
        debug_assert_eq!(self.add_raw(1, self.add_raw(xi, self.mul_raw(xi, xi))), 0);
        Ok(CubeRoot { xi, t })
    }

    // Unchecked internals; operands must already be valid encodings.

    pub(crate) fn add_raw(&self, x: u32, y: u32) -> u32 {
        if self.m == 1 {
            return ((x as u64 + y as u64) % self.p as u64) as u32;
        }
        let mut out = 0u32;
        let mut place = 1u64;
        let (mut a, mut b) = (x, y);
        for _ in 0..self.m {
            let d = (a % self.p + b % self.p) % self.p;
            out += (d as u64 * place) as u32;
            place *= self.p as u64;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub(crate) fn neg_raw(&self, x: u32) -> u32 {
        if self.m == 1 {
            return if x == 0 { 0 } else { self.p - x };
        }
        let mut out = 0u32;
        let mut place = 1u64;
        let mut a = x;
        for _ in 0..self.m {
            let d = a % self.p;
            let nd = if d == 0 { 0 } else { self.p - d };
            out += (nd as u64 * place) as u32;
            place *= self.p as u64;
            a /= self.p;
        }
        out
    }

    pub(crate) fn mul_raw(&self, x: u32, y: u32) -> u32 {
        self.ctx().mul(x, y)
    }
}

/// Polynomial arithmetic over GF(p) modulo a fixed monic polynomial, on
/// base-p packed encodings. Used during construction, before the tables
/// exist.
struct PolyCtx<'a> {
    p: u32,
    m: usize,
    modulus: &'a [u32],
}

impl PolyCtx<'_> {
    fn mul(&self, x: u32, y: u32) -> u32 {
        if self.m == 1 {
            return ((x as u64 * y as u64) % self.p as u64) as u32;
        }
        let p = self.p as u64;
        let a = unpack(x, self.p, self.m);
        let b = unpack(y, self.p, self.m);
        // Schoolbook product, degree <= 2m-2.
        let mut prod = vec![0u64; 2 * self.m - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p;
            }
        }
        // Reduce by the monic modulus from the top down.
        for d in (self.m..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (k, &mk) in self.modulus.iter().enumerate().take(self.m) {
                let idx = d - self.m + k;
                prod[idx] = (prod[idx] + c * (p - mk as u64)) % p;
            }
        }
        pack(&prod[..self.m], self.p)
    }

    fn pow(&self, x: u32, mut e: u64) -> u32 {
        let mut base = x;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn unpack(x: u32, p: u32, m: usize) -> Vec<u32> {
    let mut digits = vec![0u32; m];
    let mut v = x;
    for d in digits.iter_mut() {
        *d = v % p;
        v /= p;
    }
    digits
}

fn pack(digits: &[u64], p: u32) -> u32 {
    let mut out = 0u64;
    for &d in digits.iter().rev() {
        out = out * p as u64 + d;
    }
    out as u32
}

/// The least monic irreducible polynomial of degree m over GF(p),
/// comparing coefficient lists low-degree-first. Returned constant-first
/// with the leading 1 included.
fn least_irreducible(p: u32, m: u32) -> Result<Vec<u32>, FieldError> {
    if m == 1 {
        // x itself; arithmetic degenerates to residues mod p.
        return Ok(vec![0, 1]);
    }
    let m = m as usize;
    let mut coeffs = vec![0u32; m];
    loop {
        if is_irreducible(&coeffs, p) {
            let mut out = coeffs.clone();
            out.push(1);
            return Ok(out);
        }
        // Low-degree-first lexicographic increment: bump the last
        // coefficient, carrying toward the constant term.
        let mut k = m;
        loop {
            if k == 0 {
                return Err(FieldError::NoIrreducible {
                    p: p as u64,
                    m: m as u32,
                });
            }
            k -= 1;
            coeffs[k] += 1;
            if coeffs[k] < p {
                break;
            }
            coeffs[k] = 0;
        }
    }
}

/// Trial division by every monic polynomial of degree 1..=m/2.
fn is_irreducible(low_coeffs: &[u32], p: u32) -> bool {
    let m = low_coeffs.len();
    if low_coeffs[0] == 0 {
        return false; // divisible by x
    }
    let mut f: Vec<u32> = low_coeffs.to_vec();
    f.push(1);
    for d in 1..=m / 2 {
        let count = (p as u64).pow(d as u32);
        for enc in 0..count {
            let mut g = unpack64(enc, p, d);
            g.push(1);
            if poly_rem_is_zero(&f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn unpack64(x: u64, p: u32, m: usize) -> Vec<u32> {
    let mut digits = vec![0u32; m];
    let mut v = x;
    for d in digits.iter_mut() {
        *d = (v % p as u64) as u32;
        v /= p as u64;
    }
    digits
}

/// True iff monic g divides f over GF(p). Coefficients constant-first.
fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let p64 = p as u64;
    let dg = g.len() - 1;
    let mut rem: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    for d in (dg..rem.len()).rev() {
        let c = rem[d];
        if c == 0 {
            continue;
        }
        rem[d] = 0;
        for k in 0..dg {
            rem[d - dg + k] = (rem[d - dg + k] + c * (p64 - g[k] as u64)) % p64;
        }
    }
    rem.iter().all(|&c| c == 0)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of n, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power q into (p, m); errors if q is not a prime power.
pub fn prime_power_split(q: u64) -> Result<(u32, u32), FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower { q });
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return Err(FieldError::NotPrimePower { q });
    }
    let p = factors[0];
    let mut m = 0u32;
    let mut acc = 1u64;
    while acc < q {
        acc *= p;
        m += 1;
    }
    if acc != q {
        return Err(FieldError::NotPrimePower { q });
    }
    Ok((p as u32, m))
}
