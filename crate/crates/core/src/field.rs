//! Arithmetic in the Galois field GF(p^n).
//!
//! Elements are polynomials over GF(p) reduced modulo a fixed monic
//! irreducible polynomial. Each element is packed into a `u32` whose base-`p`
//! digits are the polynomial coefficients, constant term in the least
//! significant digit. Exponent/logarithm tables against the chosen generator
//! are built once from polynomial multiplication and used for fast products.
//!
//! Fields are interned: [`make_field`] returns a `&'static FieldSpec` that is
//! shared by every element of the field, so elements are `Copy` and mixing
//! elements of different fields is detectable.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Handle to an interned field.
pub type Field = &'static FieldSpec;

pub struct FieldSpec {
    p: u32,
    n: u32,
    q: u32,
    /// `n + 1` coefficients, constant term first; the last one is 1.
    modulus: Vec<u32>,
    generator: u32,
    /// `exp[k]` is the packed form of `generator^k`, `0 <= k < q - 1`.
    exp: Vec<u32>,
    /// Inverse of `exp`; `log[0]` is unused.
    log: Vec<u32>,
}

/// Builds (or fetches) GF(p^n) with the lexicographically smallest monic
/// irreducible modulus and the smallest primitive element as generator.
pub fn make_field(p: u64, n: u32) -> Result<Field> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let too_large = Error::OrderTooLarge { p, n, max: MAX_ORDER };
    let q = p.checked_pow(n).ok_or(too_large.clone())?;
    if q > MAX_ORDER {
        return Err(too_large);
    }

    static REGISTRY: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    let registry = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    let mut fields = registry.lock().unwrap_or_else(|e| e.into_inner());
    let field = fields
        .entry((p as u32, n))
        .or_insert_with(|| Box::leak(Box::new(FieldSpec::build(p as u32, n, q as u32))));
    Ok(*field)
}

/// Builds GF(q) after factoring `q` as a prime power.
pub fn field_of_order(q: u64) -> Result<Field> {
    let (p, n) = prime_power_decomposition(q)?;
    make_field(p, n)
}

/// Splits `q` into `(p, n)` with `q = p^n`.
pub fn prime_power_decomposition(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, n))
}

pub fn is_prime(m: u64) -> bool {
    m >= 2 && smallest_prime_factor(m) == m
}

fn smallest_prime_factor(m: u64) -> u64 {
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    m
}

/// All coefficient tuples of length `len` over `0..p`, ordered
/// lexicographically with the first (constant) coefficient most significant.
pub(crate) fn coefficient_tuples(p: u32, len: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(len);
    (0..count).map(move |m| {
        let mut coeffs = vec![0; len as usize];
        let mut rest = m;
        for slot in coeffs.iter_mut().rev() {
            *slot = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs
    })
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let t = (lead as u64 * bc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let degree = poly.len() as u32 - 1;
    for d in 1..=degree / 2 {
        for mut lower in coefficient_tuples(p, d) {
            lower.push(1);
            if poly_rem(poly, &lower, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    fn build(p: u32, n: u32, q: u32) -> FieldSpec {
        let modulus = coefficient_tuples(p, n)
            .map(|mut c| {
                c.push(1);
                c
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial exists in every degree");

        let mut spec = FieldSpec {
            p,
            n,
            q,
            modulus,
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };

        let one = spec.pack(&{
            let mut c = vec![0; n as usize];
            c[0] = 1;
            c
        });
        let generator = coefficient_tuples(p, n)
            .map(|c| spec.pack(&c))
            .filter(|&g| g != 0)
            .find(|&g| spec.poly_order(g, one) == q - 1)
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut power = one;
        for k in 0..q - 1 {
            exp.push(power);
            log[power as usize] = k;
            power = spec.poly_mul_packed(power, generator);
        }
        spec.generator = generator;
        spec.exp = exp;
        spec.log = log;
        spec
    }

    fn poly_order(&self, g: u32, one: u32) -> u32 {
        let mut power = g;
        let mut k = 1;
        while power != one {
            power = self.poly_mul_packed(power, g);
            k += 1;
        }
        k
    }

    fn unpack(&self, repr: u32) -> Vec<u32> {
        let mut rest = repr;
        (0..self.n)
            .map(|_| {
                let c = rest % self.p;
                rest /= self.p;
                c
            })
            .collect()
    }

    fn pack(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Schoolbook product followed by reduction modulo the field polynomial.
    fn poly_mul_packed(&self, a: u32, b: u32) -> u32 {
        let (a, b) = (self.unpack(a), self.unpack(b));
        let p = self.p as u64;
        let mut prod = vec![0u32; 2 * self.n as usize - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        let mut reduced = poly_rem(&prod, &self.modulus, self.p);
        reduced.resize(self.n as usize, 0);
        self.pack(&reduced)
    }

    fn add_packed(&self, a: u32, b: u32) -> u32 {
        if self.n == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (a, b) = (self.unpack(a), self.unpack(b));
        let sum: Vec<u32> = a.iter().zip(&b).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    fn neg_packed(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let coeffs: Vec<u32> = self
            .unpack(a)
            .iter()
            .map(|&c| (self.p - c) % self.p)
            .collect();
        self.pack(&coeffs)
    }

    fn mul_packed(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[k as usize]
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The modulus rendered as a polynomial in `x`, e.g. `x^2 + x + 1`.
    pub fn modulus_string(&self) -> String {
        let terms: Vec<String> = self
            .modulus
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let monomial = match i {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                };
                match (c, i) {
                    (_, 0) => c.to_string(),
                    (1, _) => monomial,
                    _ => format!("{c}{monomial}"),
                }
            })
            .collect();
        terms.join(" + ")
    }

    pub fn zero(&'static self) -> FieldElement {
        FieldElement { field: self, repr: 0 }
    }

    pub fn one(&'static self) -> FieldElement {
        FieldElement { field: self, repr: self.exp[0] }
    }

    /// The distinguished primitive element `a`.
    pub fn generator(&'static self) -> FieldElement {
        FieldElement { field: self, repr: self.generator }
    }

    /// `a^k` for any integer `k` (the generator is invertible).
    pub fn generator_power(&'static self, k: i64) -> FieldElement {
        let idx = k.rem_euclid(self.q as i64 - 1) as usize;
        FieldElement { field: self, repr: self.exp[idx] }
    }

    pub fn from_coeffs(&'static self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.n as usize {
            return Err(Error::DimensionMismatch {
                expected: self.n as usize,
                found: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::ParseElement(format!("coefficient {c} not below {}", self.p)));
        }
        Ok(FieldElement { field: self, repr: self.pack(coeffs) })
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&'static self, value: i64) -> FieldElement {
        let residue = value.rem_euclid(self.p as i64) as u32;
        FieldElement { field: self, repr: residue }
    }

    /// Product computed by explicit polynomial multiplication and reduction,
    /// bypassing the logarithm tables.
    pub fn poly_mul(&'static self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(&a)?;
        self.check(&b)?;
        Ok(FieldElement { field: self, repr: self.poly_mul_packed(a.repr, b.repr) })
    }

    /// Zero first, then `a^0, a^1, ..., a^(q-2)`.
    pub fn elements(&'static self) -> Vec<FieldElement> {
        std::iter::once(0)
            .chain(self.exp.iter().copied())
            .map(|repr| FieldElement { field: self, repr })
            .collect()
    }

    pub fn nonzero_elements(&'static self) -> Vec<FieldElement> {
        self.elements().split_off(1)
    }

    /// All elements ordered lexicographically by coefficients, constant term
    /// most significant.
    pub fn elements_by_coeffs(&'static self) -> Vec<FieldElement> {
        coefficient_tuples(self.p, self.n)
            .map(|c| FieldElement { field: self, repr: self.pack(&c) })
            .collect()
    }

    /// Parses the rendering produced by `Display`: a decimal residue for prime
    /// fields, `0` or `a^k` otherwise.
    pub fn parse_element(&'static self, text: &str) -> Result<FieldElement> {
        let text = text.trim();
        let bad = || Error::ParseElement(text.to_string());
        if self.n == 1 {
            let value: u32 = text.parse().map_err(|_| bad())?;
            if value >= self.p {
                return Err(bad());
            }
            return Ok(FieldElement { field: self, repr: value });
        }
        if text == "0" {
            return Ok(self.zero());
        }
        let k: i64 = text
            .strip_prefix("a^")
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        Ok(self.generator_power(k))
    }

    fn check(&'static self, a: &FieldElement) -> Result<()> {
        if std::ptr::eq(self, a.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.q, right: a.field.q })
        }
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.n)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n
    }
}

impl Eq for FieldSpec {}

/// Element of GF(q).
#[derive(Clone, Copy)]
pub struct FieldElement {
    field: Field,
    repr: u32,
}

impl FieldElement {
    pub fn field(&self) -> Field {
        self.field
    }

    /// Polynomial coefficients over GF(p), constant term first.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.unpack(self.repr)
    }

    pub fn is_zero(&self) -> bool {
        self.repr == 0
    }

    pub fn is_one(&self) -> bool {
        self.repr == self.field.exp[0]
    }

    /// The product-preserving map to the reals: 0 for zero, 1 otherwise.
    pub fn abs_value(&self) -> u32 {
        u32::from(!self.is_zero())
    }

    /// Discrete logarithm to the generator, `None` for zero.
    pub fn log(&self) -> Option<u32> {
        (!self.is_zero()).then(|| self.field.log[self.repr as usize])
    }

    pub fn same_field(&self, other: &FieldElement) -> Result<()> {
        self.field.check(other)
    }

    pub fn checked_add(self, rhs: FieldElement) -> Result<FieldElement> {
        self.same_field(&rhs)?;
        Ok(self.with(self.field.add_packed(self.repr, rhs.repr)))
    }

    pub fn checked_sub(self, rhs: FieldElement) -> Result<FieldElement> {
        self.checked_add(-rhs)
    }

    pub fn checked_mul(self, rhs: FieldElement) -> Result<FieldElement> {
        self.same_field(&rhs)?;
        Ok(self.with(self.field.mul_packed(self.repr, rhs.repr)))
    }

    pub fn checked_div(self, rhs: FieldElement) -> Result<FieldElement> {
        self.same_field(&rhs)?;
        self.checked_mul(rhs.inv()?)
    }

    pub fn inv(self) -> Result<FieldElement> {
        match self.log() {
            None => Err(Error::DivisionByZero(self.field.q)),
            Some(k) => Ok(self.field.generator_power(-(k as i64))),
        }
    }

    /// `self^k`; negative exponents go through the inverse, and `0^0 = 1`.
    pub fn pow(self, k: i64) -> Result<FieldElement> {
        match self.log() {
            None if k > 0 => Ok(self),
            None if k == 0 => Ok(self.field.one()),
            None => Err(Error::DivisionByZero(self.field.q)),
            Some(l) => {
                let order = self.field.q as i64 - 1;
                let e = ((l as i64) * k.rem_euclid(order)).rem_euclid(order);
                Ok(self.field.generator_power(e))
            }
        }
    }

    fn with(self, repr: u32) -> FieldElement {
        FieldElement { field: self.field, repr }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) && self.repr == other.repr
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.q.hash(state);
        self.repr.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.p, self.field.n)
            .cmp(&(other.field.p, other.field.n))
            .then(self.repr.cmp(&other.repr))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.n == 1 {
            write!(f, "{}", self.repr)
        } else {
            match self.log() {
                None => write!(f, "0"),
                Some(k) => write!(f, "a^{k}"),
            }
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self, self.field.q)
    }
}

// Operators panic on mixed-field operands and division by zero; the
// `checked_*` methods report those as errors instead.
impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("field addition")
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("field subtraction")
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("field multiplication")
    }
}

impl Div for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        self.checked_div(rhs).expect("field division")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.field.neg_packed(self.repr))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, n: u32) -> Field {
        make_field(p, n).unwrap()
    }

    #[test]
    fn gf2_basics() {
        let f = gf(2, 1);
        assert_eq!(f.generator(), f.one());
        assert_eq!(f.one() + f.one(), f.zero());
        let rendered: Vec<String> = f.elements().iter().map(|e| e.to_string()).collect();
        assert_eq!(rendered, ["0", "1"]);
    }

    #[test]
    fn gf3_generator_and_order() {
        let f = gf(3, 1);
        assert_eq!(f.generator().to_string(), "2");
        assert_eq!(f.from_int(2) * f.from_int(2), f.one());
        let rendered: Vec<String> = f.elements().iter().map(|e| e.to_string()).collect();
        assert_eq!(rendered, ["0", "1", "2"]);
    }

    #[test]
    fn gf4_modulus_and_square_of_x() {
        let f = gf(2, 2);
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.modulus_string(), "x^2 + x + 1");
        let x = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.generator(), x);
        assert_eq!((x * x).coeffs(), vec![1, 1]);
    }

    #[test]
    fn extension_moduli_are_lex_smallest() {
        // x^3 + x^2 + 1 precedes x^3 + x + 1 when the constant term is compared first.
        assert_eq!(gf(2, 3).modulus(), &[1, 0, 1, 1]);
        assert_eq!(gf(3, 2).modulus(), &[1, 0, 1]);
        assert_eq!(gf(3, 2).generator().coeffs(), vec![1, 1]);
        assert_eq!(gf(5, 1).modulus(), &[0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(make_field(1, 1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(make_field(2, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(make_field(2, 17), Err(Error::OrderTooLarge { .. })));
        assert!(matches!(make_field(3, 64), Err(Error::OrderTooLarge { .. })));
        assert_eq!(field_of_order(6).unwrap_err(), Error::NotPrimePower(6));
        assert_eq!(field_of_order(1).unwrap_err(), Error::NotPrimePower(1));
        assert_eq!(prime_power_decomposition(9).unwrap(), (3, 2));
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        let f = gf(5, 1);
        assert_eq!(f.zero().inv().unwrap_err(), Error::DivisionByZero(5));
        assert!(f.zero().pow(-1).is_err());
        assert_eq!(f.zero().pow(0).unwrap(), f.one());
        assert_eq!(f.from_int(2).pow(-1).unwrap(), f.from_int(3));
    }

    #[test]
    fn mixed_fields_are_reported() {
        let (a, b) = (gf(3, 1).one(), gf(5, 1).one());
        assert_eq!(
            a.checked_add(b).unwrap_err(),
            Error::FieldMismatch { left: 3, right: 5 }
        );
        assert!(a.checked_mul(b).is_err());
    }

    #[test]
    fn interning_returns_the_same_field() {
        assert!(std::ptr::eq(gf(7, 1), field_of_order(7).unwrap()));
    }

    #[test]
    fn parse_round_trips_rendering() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = field_of_order(q).unwrap();
            for e in f.elements() {
                assert_eq!(f.parse_element(&e.to_string()).unwrap(), e);
            }
        }
        let f = gf(3, 1);
        assert!(f.parse_element("3").is_err());
        assert!(gf(2, 2).parse_element("x").is_err());
    }

    #[test]
    fn abs_value_of_gf9() {
        let f = gf(3, 2);
        assert_eq!(f.zero().abs_value(), 0);
        assert!(f.nonzero_elements().iter().all(|e| e.abs_value() == 1));
    }
}
