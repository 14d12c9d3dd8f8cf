//! Finite fields `GF(p^n)` given by a monic irreducible modulus over `GF(p)`.
//!
//! Elements are coefficient vectors of length `n`, low degree first. The
//! canonical total order compares coefficient vectors lexicographically,
//! `c0` first, residues ordered `0 < 1 < ... < p-1`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly;
use crate::scalar::Scalar;

/// Largest extension degree for which a modulus is searched automatically.
pub const MAX_SEARCH_DEGREE: usize = 8;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

struct FqInner {
    p: u64,
    n: usize,
    modulus: Vec<u64>,
    generator: OnceLock<Vec<u64>>,
}

/// Handle to a finite field `GF(p^n)`.
#[derive(Clone)]
pub struct FqSpec(Arc<FqInner>);

impl PartialEq for FqSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}
impl Eq for FqSpec {}

impl fmt::Debug for FqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
        write!(f, "GF({}^{}; modulus=[{}])", self.0.p, self.0.n, m.join(","))
    }
}

impl FqSpec {
    fn raw(p: u64, n: usize, modulus: Vec<u64>) -> Self {
        FqSpec(Arc::new(FqInner { p, n, modulus, generator: OnceLock::new() }))
    }

    /// The prime field `GF(p)` with modulus `x`.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::raw(p, 1, vec![0, 1]))
    }

    /// Builds `GF(p^n)`. Without a modulus the lexicographically least monic
    /// irreducible of degree `n` is used (coefficient vectors compared low
    /// degree first).
    pub fn new(p: u64, n: usize, modulus: Option<Vec<u64>>) -> Result<Self> {
        let prime = Self::prime(p)?;
        if n == 0 {
            return Err(Error::DegreeMismatch);
        }
        match modulus {
            Some(m) => {
                let m: Vec<u64> = m.into_iter().map(|c| c % p).collect();
                let m = strip(m);
                if m.len() != n + 1 {
                    return Err(Error::DegreeMismatch);
                }
                if m[n] != 1 {
                    return Err(Error::InvalidArgument("modulus must be monic".into()));
                }
                let as_poly: Vec<FqElem> = m.iter().map(|&c| prime.from_u64(c)).collect();
                if !poly::is_irreducible_over(&as_poly, p) {
                    return Err(Error::ReducibleModulus);
                }
                Ok(Self::raw(p, n, m))
            }
            None => {
                if n == 1 {
                    return Ok(prime);
                }
                if n > MAX_SEARCH_DEGREE {
                    return Err(Error::TooLarge(format!(
                        "modulus search limited to degree {MAX_SEARCH_DEGREE}"
                    )));
                }
                let mut fam = prime.tuples(n);
                let found = fam.find_map(|low| {
                    let mut f = low;
                    f.push(prime.one());
                    poly::is_irreducible_over(&f, p).then_some(f)
                });
                let f = found.expect("irreducible polynomials exist in every degree");
                Ok(Self::raw(p, n, f.iter().map(|c| c.coeffs[0]).collect()))
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn n(&self) -> usize {
        self.0.n
    }
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }
    /// Field order `q = p^n`.
    pub fn order(&self) -> u64 {
        self.0.p.pow(self.0.n as u32)
    }

    pub fn zero(&self) -> FqElem {
        FqElem { spec: self.clone(), coeffs: vec![0; self.0.n] }
    }
    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }
    pub fn from_u64(&self, c: u64) -> FqElem {
        let mut coeffs = vec![0; self.0.n];
        coeffs[0] = c % self.0.p;
        FqElem { spec: self.clone(), coeffs }
    }
    pub fn from_i64(&self, c: i64) -> FqElem {
        self.from_u64(c.rem_euclid(self.0.p as i64) as u64)
    }
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FqElem> {
        if coeffs.len() > self.0.n {
            return Err(Error::ContextMismatch(format!(
                "expected at most {} coefficients, got {}",
                self.0.n,
                coeffs.len()
            )));
        }
        let mut c = vec![0; self.0.n];
        for (d, s) in c.iter_mut().zip(coeffs) {
            *d = s % self.0.p;
        }
        Ok(FqElem { spec: self.clone(), coeffs: c })
    }
    /// The generator `x` of the field over `GF(p)`.
    pub fn gen_x(&self) -> FqElem {
        if self.0.n == 1 {
            // x reduces to -modulus[0]
            return self.from_u64((self.0.p - self.0.modulus[0]) % self.0.p);
        }
        let mut c = vec![0; self.0.n];
        c[1] = 1;
        FqElem { spec: self.clone(), coeffs: c }
    }

    /// The `idx`-th element in canonical order.
    pub fn element(&self, mut idx: u64) -> FqElem {
        let mut c = vec![0; self.0.n];
        for k in (0..self.0.n).rev() {
            c[k] = idx % self.0.p;
            idx /= self.0.p;
        }
        FqElem { spec: self.clone(), coeffs: c }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    /// All `len`-tuples of field elements, lexicographic in canonical order.
    pub fn tuples(&self, len: usize) -> impl Iterator<Item = Vec<FqElem>> + '_ {
        let q = self.order();
        let total = q.pow(len as u32);
        (0..total).map(move |mut idx| {
            let mut v = vec![self.zero(); len];
            for k in (0..len).rev() {
                v[k] = self.element(idx % q);
                idx /= q;
            }
            v
        })
    }

    /// The least element (canonical order) generating the multiplicative group.
    pub fn generator(&self) -> FqElem {
        let c = self.0.generator.get_or_init(|| {
            let q = self.order();
            let factors = poly::distinct_prime_factors(q - 1);
            self.elements()
                .skip(1)
                .find(|x| factors.iter().all(|r| !x.pow_u(( q - 1) / r).is_one()))
                .expect("multiplicative group is cyclic")
                .coeffs
        });
        FqElem { spec: self.clone(), coeffs: c.clone() }
    }

    /// Discrete logarithm to the base [`FqSpec::generator`], by exhaustive search.
    pub fn dlog(&self, x: &FqElem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        let g = self.generator();
        let mut acc = self.one();
        for k in 0..self.order() - 1 {
            if acc == *x {
                return Ok(k);
            }
            acc = acc.mul(&g);
        }
        unreachable!("generator spans the multiplicative group")
    }

    /// Least element of multiplicative order exactly `m`.
    pub fn least_of_order(&self, m: u64) -> Option<FqElem> {
        let q = self.order();
        if (q - 1) % m != 0 {
            return None;
        }
        let factors = poly::distinct_prime_factors(m);
        self.elements().skip(1).find(|x| {
            x.pow_u(m).is_one() && factors.iter().all(|r| !x.pow_u(m / r).is_one())
        })
    }
}

fn strip(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Element of a finite field.
#[derive(Clone)]
pub struct FqElem {
    spec: FqSpec,
    coeffs: Vec<u64>,
}

impl PartialEq for FqElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.spec == other.spec
    }
}
impl Eq for FqElem {}

impl Hash for FqElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", c.join(","))
    }
}

/// Result of [`FqElem::power_class`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerClass {
    pub is_nth_power: bool,
    pub class_index: u64,
}

impl FqElem {
    pub fn spec(&self) -> &FqSpec {
        &self.spec
    }
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Position of this element in the canonical order.
    pub fn index(&self) -> u64 {
        self.coeffs.iter().fold(0, |acc, &c| acc * self.spec.p() + c)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(Scalar::add(self, rhs))
    }
    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(Scalar::sub(self, rhs))
    }
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(Scalar::mul(self, rhs))
    }

    pub fn pow_u(&self, e: u64) -> Self {
        Scalar::pow(self, e)
    }

    /// Absolute trace to the prime field.
    pub fn trace(&self) -> u64 {
        let p = self.spec.p();
        let mut acc = self.clone();
        let mut x = self.clone();
        for _ in 1..self.spec.n() {
            x = x.pow_u(p);
            acc = Scalar::add(&acc, &x);
        }
        acc.coeffs[0]
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let q = self.spec.order();
        let mut ord = q - 1;
        for r in poly::distinct_prime_factors(q - 1) {
            while ord % r == 0 && self.pow_u(ord / r).is_one() {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Class of `self` in `F^x / (F^x)^n`, indexed by the discrete log to the
    /// fixed generator modulo `gcd(n, q-1)`.
    pub fn power_class(&self, n: u64) -> Result<PowerClass> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        let q = self.spec.order();
        let g = gcd_u64(n, q - 1);
        let is_nth_power = self.pow_u((q - 1) / g).is_one();
        let class_index = self.spec.dlog(self)? % g;
        debug_assert_eq!(is_nth_power, class_index == 0);
        Ok(PowerClass { is_nth_power, class_index })
    }
}

/// Least element (canonical order) that is not an `n`-th power.
pub fn nonresidue(spec: &FqSpec, n: u64) -> Result<FqElem> {
    let q = spec.order();
    if n <= 1 || (q - 1) % n != 0 {
        return Err(Error::AllElementsArePowers(n));
    }
    Ok(spec
        .elements()
        .skip(1)
        .find(|x| !x.pow_u((q - 1) / n).is_one())
        .expect("n divides q-1, so non-powers exist"))
}

impl Scalar for FqElem {
    fn zero_like(&self) -> Self {
        self.spec.zero()
    }
    fn one_like(&self) -> Self {
        self.spec.one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        self.spec.from_i64(n)
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert!(self.spec == rhs.spec);
        let p = self.spec.p();
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| (a + b) % p).collect();
        FqElem { spec: self.spec.clone(), coeffs }
    }
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert!(self.spec == rhs.spec);
        let p = self.spec.p();
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| (a + p - b) % p).collect();
        FqElem { spec: self.spec.clone(), coeffs }
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert!(self.spec == rhs.spec);
        let p = self.spec.p() as u128;
        let n = self.spec.n();
        if n == 1 {
            let c = (self.coeffs[0] as u128 * rhs.coeffs[0] as u128 % p) as u64;
            return FqElem { spec: self.spec.clone(), coeffs: vec![c] };
        }
        let mut prod = vec![0u128; 2 * n - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a as u128 * b as u128) % p;
            }
        }
        let m = self.spec.modulus();
        for k in (n..2 * n - 1).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let sub = lead * m[i] as u128 % p;
                prod[k - n + i] = (prod[k - n + i] + p - sub) % p;
            }
        }
        let coeffs = prod[..n].iter().map(|&c| c as u64).collect();
        FqElem { spec: self.spec.clone(), coeffs }
    }
    fn neg(&self) -> Self {
        let p = self.spec.p();
        let coeffs = self.coeffs.iter().map(|&c| (p - c) % p).collect();
        FqElem { spec: self.spec.clone(), coeffs }
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow_u(self.spec.order() - 2))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
    fn same(&self, rhs: &Self) -> bool {
        self == rhs
    }
    fn canonical_cmp(&self, rhs: &Self) -> Ordering {
        self.coeffs.cmp(&rhs.coeffs)
    }
    fn pivot_weight(&self) -> Option<i64> {
        (!self.is_zero()).then_some(0)
    }
    fn characteristic(&self) -> u64 {
        self.spec.p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_default_modulus() {
        let f3 = FqSpec::new(3, 1, None).unwrap();
        assert_eq!(f3.modulus(), &[0, 1]);
        assert_eq!(f3.order(), 3);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FqSpec::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FqSpec::new(2, 2, Some(vec![1, 0, 1])).unwrap_err(), Error::ReducibleModulus);
        assert_eq!(FqSpec::new(3, 3, Some(vec![1, 0, 1])).unwrap_err(), Error::DegreeMismatch);
        assert!(FqSpec::new(3, 2, Some(vec![1, 0, 1])).is_ok());
    }

    #[test]
    fn default_moduli_are_irreducible_and_least() {
        let f4 = FqSpec::new(2, 2, None).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let f8 = FqSpec::new(2, 3, None).unwrap();
        assert_eq!(f8.modulus(), &[1, 0, 1, 1]);
        let f9 = FqSpec::new(3, 2, None).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn arithmetic_examples() {
        let f9 = FqSpec::new(3, 2, Some(vec![1, 0, 1])).unwrap();
        let i = f9.gen_x();
        assert_eq!(i.mul(&i), f9.from_u64(2));
        let f5 = FqSpec::prime(5).unwrap();
        assert_eq!(f5.from_u64(2).inv().unwrap(), f5.from_u64(3));
        assert_eq!(f5.zero().inv().unwrap_err(), Error::DivisionByZero);
        let f7 = FqSpec::prime(7).unwrap();
        assert_eq!(f5.one().checked_add(&f7.one()).unwrap_err(), Error::SpecMismatch);
    }

    #[test]
    fn power_classes() {
        let f5 = FqSpec::prime(5).unwrap();
        assert!(!f5.from_u64(2).power_class(2).unwrap().is_nth_power);
        assert!(f5.from_u64(4).power_class(2).unwrap().is_nth_power);
        let one = f5.one().power_class(3).unwrap();
        assert_eq!(one, PowerClass { is_nth_power: true, class_index: 0 });
        assert_eq!(f5.zero().power_class(2).unwrap_err(), Error::ZeroInput);
    }

    #[test]
    fn nonresidues() {
        let f5 = FqSpec::prime(5).unwrap();
        assert_eq!(nonresidue(&f5, 2).unwrap(), f5.from_u64(2));
        let f7 = FqSpec::prime(7).unwrap();
        assert_eq!(nonresidue(&f7, 3).unwrap(), f7.from_u64(2));
        let f3 = FqSpec::prime(3).unwrap();
        assert_eq!(nonresidue(&f3, 2).unwrap(), f3.from_u64(2));
        assert_eq!(nonresidue(&f5, 3).unwrap_err(), Error::AllElementsArePowers(3));
    }

    #[test]
    fn generator_spans() {
        for (p, n) in [(2, 4), (3, 2), (5, 1), (7, 1), (3, 3)] {
            let f = FqSpec::new(p, n, None).unwrap();
            let g = f.generator();
            assert_eq!(g.mult_order().unwrap(), f.order() - 1);
        }
    }
}
