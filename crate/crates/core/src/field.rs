//! Finite fields GF(p^m) for small prime powers.
//!
//! Elements are encoded as integers in `0..q`: the base-p digits of the code
//! are the coefficients of the residue polynomial, least degree first, so `0`
//! is the zero element and `1` is the multiplicative identity. Comparing codes
//! compares coefficient vectors.
//!
//! Arithmetic is reduced modulo a monic irreducible polynomial of degree `m`.
//! When no modulus is supplied, the default is the irreducible polynomial
//! whose lower-coefficient encoding is smallest, which pins the element
//! numbering once and for all:
//!
//! | field  | modulus       |
//! |--------|---------------|
//! | GF(4)  | x^2 + x + 1   |
//! | GF(8)  | x^3 + x + 1   |
//! | GF(9)  | x^2 + 1       |
//! | GF(16) | x^4 + x + 1   |
//! | GF(32) | x^5 + x^2 + 1 |
//!
//! Irreducibility is established at construction by trial division against
//! every monic polynomial of lower degree. All operations go through q-by-q
//! lookup tables built once; `q` is limited to 256 so codes fit in a byte.

use crate::error::{Error, Result};

pub const MAX_FIELD_ORDER: u32 = 256;

#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, coefficients by ascending degree (length m + 1).
    modulus: Vec<u32>,
    add_t: Vec<u8>,
    mul_t: Vec<u8>,
    neg_t: Vec<u8>,
    inv_t: Vec<u8>,
}

impl FiniteField {
    /// Field of order `p^m` with the default modulus.
    pub fn new(p: u32, m: u32) -> Result<FiniteField> {
        let modulus = default_modulus(p, m)?;
        FiniteField::with_modulus(p, m, modulus)
    }

    /// Field of order `p^m` with an explicit monic modulus (ascending
    /// coefficients, length `m + 1`). The modulus must be irreducible.
    pub fn with_modulus(p: u32, m: u32, modulus: Vec<u32>) -> Result<FiniteField> {
        if !is_prime(p) {
            return Err(Error::InvalidSpec(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidSpec("field degree must be positive".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| {
                Error::InvalidSpec(format!("field order p^m = {p}^{m} exceeds {MAX_FIELD_ORDER}"))
            })?;
        if modulus.len() != m as usize + 1 || modulus[m as usize] % p != 1 {
            return Err(Error::InvalidSpec(
                "modulus must be monic of degree m".into(),
            ));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidSpec("modulus coefficient out of range".into()));
        }
        if m > 1 && !is_irreducible(&modulus, p) {
            return Err(Error::InvalidSpec(format!(
                "modulus {} is reducible over GF({p})",
                poly_string(&modulus)
            )));
        }

        let mut f = FiniteField {
            p,
            m,
            q,
            modulus,
            add_t: vec![0; (q * q) as usize],
            mul_t: vec![0; (q * q) as usize],
            neg_t: vec![0; q as usize],
            inv_t: vec![0; q as usize],
        };
        f.build_tables();
        Ok(f)
    }

    fn build_tables(&mut self) {
        let q = self.q;
        for a in 0..q {
            for b in 0..q {
                let sum = self.encode(&add_coeffs(&self.decode(a), &self.decode(b), self.p));
                self.add_t[(a * q + b) as usize] = sum as u8;
                let prod = poly_rem(
                    &poly_mul(&self.decode(a), &self.decode(b), self.p),
                    &self.modulus,
                    self.p,
                );
                self.mul_t[(a * q + b) as usize] = self.encode(&prod) as u8;
            }
        }
        for a in 0..q {
            let neg: Vec<u32> = self.decode(a).iter().map(|&c| (self.p - c) % self.p).collect();
            self.neg_t[a as usize] = self.encode(&neg) as u8;
        }
        // inverses by exhaustive search; q is tiny and this runs once
        for a in 1..q {
            for b in 1..q {
                if self.mul_t[(a * q + b) as usize] == 1 {
                    self.inv_t[a as usize] = b as u8;
                    break;
                }
            }
        }
    }

    fn decode(&self, code: u32) -> Vec<u32> {
        let mut c = code;
        let mut out = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            out.push(c % self.p);
            c /= self.p;
        }
        out
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        let mut code = 0u32;
        for &c in coeffs.iter().rev() {
            code = code * self.p + c;
        }
        code
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

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        poly_string(&self.modulus)
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add_t[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg_t[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul_t[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg_t[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is undefined and returns 0.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv_t[a as usize]
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime power factorization `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut m = 0;
            while rest % p == 0 {
                rest /= p;
                m += 1;
            }
            return if rest == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

// Polynomials over GF(p), coefficients by ascending degree.

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn add_coeffs(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect()
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let (a, b) = (trim(a.to_vec()), trim(b.to_vec()));
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ca * cb) % p;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo `b` (`b` non-zero).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let lead_inv = mod_inverse(b[b.len() - 1], p);
    let mut r = trim(a.to_vec());
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = (r[r.len() - 1] * lead_inv) % p;
        for (i, &cb) in b.iter().enumerate() {
            let sub = (cb * factor) % p;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = trim(r);
    }
    r
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // p is a small prime; Fermat by repeated multiplication is fine here
    let mut x = 1u64;
    for _ in 0..p - 2 {
        x = x * a as u64 % p as u64;
    }
    x as u32
}

/// Trial division against every monic polynomial of degree `1..deg(f)`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..deg {
        // candidates encoded by their d lower coefficients
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push((c % p as u64) as u32);
                c /= p as u64;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Least irreducible monic polynomial of degree `m` over GF(p), ordered by
/// the base-p encoding of the lower coefficients.
fn default_modulus(p: u32, m: u32) -> Result<Vec<u32>> {
    if !is_prime(p) {
        return Err(Error::InvalidSpec(format!("{p} is not prime")));
    }
    if m == 0 {
        return Err(Error::InvalidSpec("field degree must be positive".into()));
    }
    if m == 1 {
        return Ok(vec![0, 1]);
    }
    let count = (p as u64).checked_pow(m).ok_or_else(|| {
        Error::InvalidSpec(format!("field order p^m = {p}^{m} is too large"))
    })?;
    for code in 0..count {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut c = code;
        for _ in 0..m {
            f.push((c % p as u64) as u32);
            c /= p as u64;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return Ok(f);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

fn poly_string(f: &[u32]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &c) in f.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli_match_documented_table() {
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus_string(), "x^2 + x + 1");
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus_string(), "x^3 + x + 1");
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus_string(), "x^2 + 1");
        assert_eq!(FiniteField::new(2, 4).unwrap().modulus_string(), "x^4 + x + 1");
        assert_eq!(FiniteField::new(2, 5).unwrap().modulus_string(), "x^5 + x^2 + 1");
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(matches!(
            FiniteField::with_modulus(2, 2, vec![1, 0, 1]),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn rejects_non_prime_characteristic() {
        assert!(FiniteField::new(4, 1).is_err());
        assert!(FiniteField::new(1, 1).is_err());
    }

    #[test]
    fn prime_power_factorization() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    /// Exhaustive field axioms on the whole element set.
    fn assert_field_axioms(f: &FiniteField) {
        let q = f.order() as u8 as u32;
        for a in 0..q as u8 {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1, "inverse of {a}");
            }
            for b in 0..q as u8 {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q as u8 {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c)),
                        "distributivity at ({a},{b},{c})"
                    );
                }
            }
        }
    }

    #[test]
    fn field_axioms_hold_exhaustively() {
        for &(p, m) in &[(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)] {
            let f = FiniteField::new(p, m).unwrap();
            assert_field_axioms(&f);
        }
    }

    #[test]
    fn gf4_multiplication_spot_checks() {
        // in GF(4) with modulus x^2 + x + 1: x * x = x + 1, i.e. 2 * 2 = 3
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.add(2, 3), 1);
    }
}
