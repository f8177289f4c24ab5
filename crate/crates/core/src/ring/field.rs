//! Arithmetic in GF(p^n) on canonical element indices.
//!
//! An element with coefficient vector `[c0, c1, ..., c_{n-1}]` over F_p (the
//! residue class of `c0 + c1 u + ... ` modulo the defining polynomial) has
//! index `c0 + c1 p + c2 p^2 + ...`. Extension fields multiply through
//! discrete log tables built once at construction.

use crate::error::{Error, Result};

/// Largest extension field we build log tables for.
const MAX_EXTENSION_ORDER: u64 = 1 << 22;

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `m` over F_p.
/// Both are coefficient vectors, constant term first.
fn rem_monic(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &mc) in m[..dm].iter().enumerate() {
                let t = &mut r[shift + i];
                *t = (*t + p - (lead * mc) % p) % p;
            }
        }
    }
    r
}

/// Exhaustive irreducibility test: no monic divisor of degree `1..=n/2`.
pub(crate) fn is_irreducible(m: &[u64], p: u64) -> bool {
    let n = m.len() - 1;
    for d in 1..=n / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut divisor = digits(low, p, d);
            divisor.push(1);
            if rem_monic(m, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `n`, comparing coefficient vectors
/// lexicographically with the constant term first.
pub(crate) fn smallest_irreducible(p: u64, n: u32) -> Vec<u64> {
    // Enumerating `low` with digit 0 varying fastest would order by the
    // reversed vector, so walk the lexicographic order explicitly.
    let n = n as usize;
    let mut low = vec![0u64; n];
    loop {
        let mut cand = low.clone();
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
        // increment, last coordinate fastest
        let mut i = n;
        loop {
            i -= 1;
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            assert!(i > 0, "an irreducible of every degree exists");
        }
    }
}

pub(crate) fn digits(mut x: u64, p: u64, n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(x % p);
        x /= p;
    }
    out
}

pub(crate) fn from_digits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

#[derive(Debug)]
pub(crate) struct Field {
    pub(crate) p: u64,
    pub(crate) n: u32,
    pub(crate) q: u64,
    pub(crate) modulus: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Field {
    pub(crate) fn new(p: u64, n: u32, modulus: Option<&[u64]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if n == 0 {
            return Err(Error::InvalidModulus(
                modulus.map(<[u64]>::to_vec).unwrap_or_default(),
            ));
        }
        let q = p
            .checked_pow(n)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or_else(|| Error::RingTooLarge(format!("GF({p}^{n})")))?;
        if n > 1 && q > MAX_EXTENSION_ORDER {
            return Err(Error::RingTooLarge(format!("GF({p}^{n})")));
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != n as usize + 1 || m[n as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(m.to_vec()));
                }
                if !is_irreducible(m, p) {
                    return Err(Error::ReducibleModulus(m.to_vec()));
                }
                m.to_vec()
            }
            None => smallest_irreducible(p, n),
        };
        let mut field = Field {
            p,
            n,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        if n > 1 {
            field.build_log_tables();
        }
        Ok(field)
    }

    fn slow_mul(&self, a: u64, b: u64) -> u64 {
        let n = self.n as usize;
        let (da, db) = (digits(a, self.p, n), digits(b, self.p, n));
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut r = rem_monic(&prod, &self.modulus, self.p);
        r.resize(n, 0);
        from_digits(&r, self.p)
    }

    fn build_log_tables(&mut self) {
        let order = (self.q - 1) as usize;
        let mut exp = vec![0u32; order];
        for g in 2..self.q {
            let mut x = 1u64;
            let mut ok = true;
            for (i, slot) in exp.iter_mut().enumerate() {
                if x == 1 && i > 0 {
                    ok = false;
                    break;
                }
                *slot = x as u32;
                x = self.slow_mul(x, g);
            }
            if ok && x == 1 {
                let mut log = vec![0u32; self.q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("multiplicative group of a finite field is cyclic");
    }

    pub(crate) fn add(&self, a: u64, b: u64) -> u64 {
        if self.n == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0u64, 1u64);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub(crate) fn neg(&self, a: u64) -> u64 {
        if self.n == 1 {
            return (self.p - a) % self.p;
        }
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let (mut out, mut place) = (0u64, 1u64);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        if self.n == 1 {
            return a * b % self.p;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.q as usize - 1;
        let e = (self.log[a as usize] as usize + self.log[b as usize] as usize) % order;
        self.exp[e] as u64
    }

    /// Inverse of a nonzero element.
    pub(crate) fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        if self.n == 1 {
            return self.pow(a, self.p - 2);
        }
        let order = self.q as usize - 1;
        let l = self.log[a as usize] as usize;
        self.exp[(order - l) % order] as u64
    }

    pub(crate) fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `m * 1` for an integer `m`.
    pub(crate) fn embed_int(&self, m: i64) -> u64 {
        m.rem_euclid(self.p as i64) as u64
    }
}
