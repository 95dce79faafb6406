//! Arithmetic in the finite field GF(p^e).
//!
//! Elements are stored as their index: the coefficient vector of the residue
//! polynomial (constant term first) read as a base-`p` integer with the
//! constant term least significant. The same index names the vertex of every
//! Cayley map built over the field.

use thiserror::Error;

/// Largest supported field order. Discrete logarithms are tabulated.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field exponent must be at least 1")]
    ZeroExponent,
    #[error("field order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
    #[error("element index {index} is out of range for GF({order})")]
    OutOfRange { index: u64, order: u32 },
}

/// An element of a [`Field`], identified by its index in `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// GF(p^e) with a canonical modulus and tabulated discrete logarithms.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct Field {
    p: u32,
    e: u32,
    n: u32,
    modulus: Vec<u32>,
    /// `exp[k]` is the index of `g^k` for the smallest primitive element `g`.
    exp: Vec<u32>,
    /// Inverse of `exp`; `log[0]` is unused.
    log: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for Field {}

/// Builds GF(p^e) with the canonical modulus: the monic irreducible
/// polynomial of degree `e` whose base-`p` reading is smallest.
pub fn make_field(p: u64, e: u32) -> Result<Field, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if e == 0 {
        return Err(FieldError::ZeroExponent);
    }
    let n = p
        .checked_pow(e)
        .filter(|&n| n <= MAX_ORDER)
        .ok_or(FieldError::TooLarge(p.saturating_pow(e)))?;
    let p = p as u32;
    let modulus = canonical_modulus(p, e);
    let mut field = Field {
        p,
        e,
        n: n as u32,
        modulus,
        exp: Vec::new(),
        log: Vec::new(),
    };
    field.build_log_tables();
    Ok(field)
}

impl Field {
    /// Builds the field of order `n`, which must be a prime power.
    pub fn of_order(n: u64) -> Result<Field, FieldError> {
        let (p, e) = prime_power(n).ok_or(FieldError::NotPrimePower(n))?;
        make_field(p, e)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    /// Monic modulus, constant term first, length `e + 1`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, index: u64) -> Result<FieldElement, FieldError> {
        if index < self.n as u64 {
            Ok(FieldElement(index as u32))
        } else {
            Err(FieldError::OutOfRange {
                index,
                order: self.n,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.n).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.n).map(FieldElement)
    }

    /// Coefficient vector of `a`, constant term first.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.e as usize);
        let mut x = a.0;
        for _ in 0..self.e {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    /// Element with the given coefficients (constant term first). Missing
    /// high coefficients are zero; coefficients are reduced mod `p`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.e as usize {
            return Err(FieldError::OutOfRange {
                index: u64::MAX,
                order: self.n,
            });
        }
        let idx = coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.p + c % self.p);
        Ok(FieldElement(idx))
    }

    /// The class of `x` (the generator of the polynomial basis). In a prime
    /// field this is `0`, matching the modulus `x - 0`.
    pub fn x(&self) -> FieldElement {
        if self.e == 1 {
            FieldElement::ZERO
        } else {
            FieldElement(self.p)
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.e == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.e {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let mut x = a.0;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.e {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Product via the logarithm tables.
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let k = (self.log[a.0 as usize] + self.log[b.0 as usize]) % (self.n - 1);
        FieldElement(self.exp[k as usize])
    }

    /// Product by polynomial multiplication modulo the modulus. Independent
    /// of the logarithm tables.
    pub fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let prod = poly_mulmod(&self.coeffs(a), &self.coeffs(b), &self.modulus, self.p);
        self.from_coeffs(&prod)
            .expect("reduced product has degree < e")
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let k = (self.n - 1 - self.log[a.0 as usize]) % (self.n - 1);
        Ok(FieldElement(self.exp[k as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k`, with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let m = (self.n - 1) as u64;
        let e = (self.log[a.0 as usize] as u64 * (k % m)) % m;
        FieldElement(self.exp[e as usize])
    }

    /// `a^k` for a possibly negative exponent.
    pub fn pow_signed(&self, a: FieldElement, k: i64) -> Result<FieldElement, FieldError> {
        if k >= 0 {
            Ok(self.pow(a, k as u64))
        } else {
            Ok(self.pow(self.inv(a)?, k.unsigned_abs()))
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u32, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroElement);
        }
        let m = self.n - 1;
        Ok(m / gcd(m as u64, self.log[a.0 as usize] as u64) as u32)
    }

    pub fn is_primitive(&self, a: FieldElement) -> Result<bool, FieldError> {
        Ok(self.multiplicative_order(a)? == self.n - 1)
    }

    /// All primitive elements, in increasing index order.
    pub fn primitive_elements(&self) -> Vec<FieldElement> {
        self.nonzero_elements()
            .filter(|&a| self.is_primitive(a).unwrap_or(false))
            .collect()
    }

    /// The Frobenius image `a^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as u64)
    }

    /// Partitions `elems` into orbits under iterated Frobenius. Orbits are
    /// listed in order of first appearance and each orbit starts at the
    /// element that appears first in `elems`.
    pub fn galois_orbits(&self, elems: &[FieldElement]) -> Vec<Vec<FieldElement>> {
        let mut seen = vec![false; self.n as usize];
        let mut orbits = Vec::new();
        for &a in elems {
            if seen[a.0 as usize] {
                continue;
            }
            let mut orbit = vec![a];
            seen[a.0 as usize] = true;
            let mut b = self.frobenius(a);
            while b != a {
                seen[b.0 as usize] = true;
                orbit.push(b);
                b = self.frobenius(b);
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Discrete logarithm of `a` to the base of the smallest primitive
    /// element.
    pub fn log(&self, a: FieldElement) -> Result<u32, FieldError> {
        if a.is_zero() {
            Err(FieldError::ZeroElement)
        } else {
            Ok(self.log[a.0 as usize])
        }
    }

    /// Whether `a` is a nonzero square.
    pub fn is_square(&self, a: FieldElement) -> bool {
        !a.is_zero() && (self.p == 2 || self.log[a.0 as usize].is_multiple_of(2))
    }

    /// Human-readable modulus, e.g. `x^2 + x + 1`.
    pub fn modulus_string(&self) -> String {
        poly_to_string(&self.modulus)
    }

    /// Human-readable polynomial form of an element.
    pub fn element_string(&self, a: FieldElement) -> String {
        if self.e == 1 {
            return a.0.to_string();
        }
        let s = poly_to_string(&self.coeffs(a));
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }

    fn build_log_tables(&mut self) {
        let n = self.n as usize;
        let m = n - 1;
        // Smallest element whose powers by polynomial multiplication cover F*.
        for g in 1..self.n {
            let g = FieldElement(g);
            let mut exp = Vec::with_capacity(m);
            let mut x = FieldElement::ONE;
            let mut ok = true;
            for k in 0..m {
                if k > 0 && x == FieldElement::ONE {
                    ok = false;
                    break;
                }
                exp.push(x.0);
                x = self.mul_poly(x, g);
            }
            if ok && x == FieldElement::ONE {
                let mut log = vec![0u32; n];
                for (k, &v) in exp.iter().enumerate() {
                    log[v as usize] = k as u32;
                }
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }
}

fn poly_to_string(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    terms.join(" + ")
}

/// Remainder of `a * b` modulo the monic polynomial `modulus` over Z_p.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let deg = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    poly_rem_monic(&mut prod, modulus, p);
    prod.truncate(deg);
    prod.resize(deg, 0);
    prod.into_iter().map(|c| c as u32).collect()
}

/// Reduces `a` in place modulo a monic divisor.
fn poly_rem_monic(a: &mut [u64], divisor: &[u32], p: u32) {
    let p = p as u64;
    let d = divisor.len() - 1;
    for top in (d..a.len()).rev() {
        let c = a[top] % p;
        if c == 0 {
            continue;
        }
        for (k, &m) in divisor.iter().enumerate() {
            let idx = top - d + k;
            a[idx] = (a[idx] + (p - c) * m as u64) % p;
        }
    }
}

/// Brute-force irreducibility: no monic divisor of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut x = low;
            for _ in 0..d {
                divisor.push((x % p as u64) as u32);
                x /= p as u64;
            }
            divisor.push(1);
            let mut rem: Vec<u64> = poly.iter().map(|&c| c as u64).collect();
            poly_rem_monic(&mut rem, &divisor, p);
            if rem[..d].iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn canonical_modulus(p: u32, e: u32) -> Vec<u32> {
    let count = (p as u64).pow(e);
    for low in 0..count {
        let mut poly = Vec::with_capacity(e as usize + 1);
        let mut x = low;
        for _ in 0..e {
            poly.push((x % p as u64) as u32);
            x /= p as u64;
        }
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, e)` with `n = p^e`, or `None` if `n` is not a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}
