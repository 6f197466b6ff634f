//! Finite fields `GF(p^k)` in a polynomial basis.
//!
//! Elements are stored as integer codes `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_i` is the coefficient of `x^i`. Moduli are fixed so results are
//! reproducible: `GF(8)` uses `x^3 + x + 1` and `GF(9)` uses `x^2 + 1`; other
//! extension fields use the smallest irreducible modulus by code.

use crate::arith::{is_prime, prime_power_base};
use crate::error::{Error, Result};

/// An element of a [`GaloisField`], as its integer code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisField {
    p: u32,
    k: u32,
    /// Monic modulus coefficients, constant term first, length `k + 1`.
    modulus: Vec<u32>,
}

impl GaloisField {
    /// `GF(p^k)` with an explicit modulus, checked for irreducibility.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidParameter(format!("characteristic {p} is not prime")));
        }
        let k = modulus.len().saturating_sub(1) as u32;
        if k == 0 || modulus[k as usize] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidParameter("modulus must be monic with reduced coefficients".into()));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::InvalidParameter(format!("{modulus:?} is reducible over GF({p})")));
        }
        Ok(GaloisField { p, k, modulus })
    }

    /// `GF(q)` for a prime power `q`.
    pub fn new(q: u32) -> Result<Self> {
        let p = prime_power_base(q as u64)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))? as u32;
        let k = (q as f64).log(p as f64).round() as u32;
        match (p, k) {
            (_, 1) => GaloisField::with_modulus(p, vec![0, 1]),
            (2, 3) => GaloisField::with_modulus(2, vec![1, 1, 0, 1]),
            (3, 2) => GaloisField::with_modulus(3, vec![1, 0, 1]),
            _ => GaloisField::smallest(p, k),
        }
    }

    /// `GF(p^k)` using the irreducible modulus with the smallest code.
    pub fn smallest(p: u32, k: u32) -> Result<Self> {
        let q = p.pow(k);
        for low in 0..q {
            let mut modulus = digits(low, p, k);
            modulus.push(1);
            if is_irreducible(p, &modulus) {
                return GaloisField::with_modulus(p, modulus);
            }
        }
        Err(Error::InvalidParameter(format!("no irreducible of degree {k} over GF({p})")))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.p.pow(self.k)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size()).map(FieldElement)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Coefficients of `x^0 .. x^{k-1}`.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        digits(a.0, self.p, self.k)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> FieldElement {
        FieldElement(
            coeffs
                .iter()
                .rev()
                .fold(0, |acc, &c| acc * self.p + c % self.p),
        )
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (x, y) = (self.coefficients(a), self.coefficients(b));
        let sum: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.from_coefficients(&sum)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let x: Vec<u32> = self
            .coefficients(a)
            .iter()
            .map(|&u| (self.p - u) % self.p)
            .collect();
        self.from_coefficients(&x)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (x, y) = (self.coefficients(a), self.coefficients(b));
        let k = self.k as usize;
        let mut prod = vec![0u32; 2 * k];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        // reduce with x^k = -(m_0 + ... + m_{k-1} x^{k-1})
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let sub = c * self.modulus[i] % self.p;
                prod[d - k + i] = (prod[d - k + i] + self.p - sub) % self.p;
            }
        }
        self.from_coefficients(&prod[..k])
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut result = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// `a^(q-2)`; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a != self.zero()).then(|| self.pow(a, self.size() as u64 - 2))
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        if a == self.zero() {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != self.one() {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Smallest-code element of multiplicative order `order`.
    pub fn element_of_order(&self, order: u64) -> Option<FieldElement> {
        self.elements()
            .find(|&a| self.multiplicative_order(a) == Some(order))
    }

    /// Smallest-code generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        self.element_of_order(self.size() as u64 - 1)
            .expect("the multiplicative group of a finite field is cyclic")
    }
}

fn digits(mut n: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = n % p;
            n /= p;
            d
        })
        .collect()
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d as u32);
            g.push(1);
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` by the monic `g`.
fn poly_rem(p: u32, f: &[u32], g: &[u32]) -> Vec<u32> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    for d in (dg..r.len()).rev() {
        let c = r[d];
        if c == 0 {
            continue;
        }
        for i in 0..=dg {
            r[d - dg + i] = (r[d - dg + i] + p - c * g[i] % p) % p;
        }
    }
    r.truncate(dg);
    r
}
