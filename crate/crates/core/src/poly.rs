//! Dense univariate polynomials over a [`Scalar`] field, low degree first.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn trim<S: Scalar>(mut a: Vec<S>) -> Vec<S> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn degree<S: Scalar>(a: &[S]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

pub fn add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = o.add(s);
    }
    out
}

pub fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let neg: Vec<S> = b.iter().map(|c| c.neg()).collect();
    add(a, &neg)
}

pub fn mul<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let zero = a[0].zero_like();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// Remainder modulo a monic polynomial given with its leading 1.
pub fn rem_monic<S: Scalar>(a: &[S], modulus: &[S]) -> Vec<S> {
    let d = modulus.len() - 1;
    let mut r = a.to_vec();
    while r.len() > d {
        let lead = r.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - d;
        for k in 0..d {
            r[shift + k] = r[shift + k].sub(&lead.mul(&modulus[k]));
        }
    }
    r
}

pub fn divrem<S: Scalar>(a: &[S], b: &[S]) -> Result<(Vec<S>, Vec<S>)> {
    let b = trim(b.to_vec());
    let db = degree(&b).ok_or(Error::DivisionByZero)?;
    let lead_inv = b[db].inv()?;
    let mut r = trim(a.to_vec());
    let zero = b[0].zero_like();
    if r.len() <= db {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![zero; r.len() - db];
    while let Some(dr) = degree(&r).filter(|&dr| dr >= db) {
        let c = r[dr].mul(&lead_inv);
        let shift = dr - db;
        for k in 0..=db {
            r[shift + k] = r[shift + k].sub(&c.mul(&b[k]));
        }
        q[shift] = c;
        r = trim(r);
    }
    Ok((q, r))
}

pub fn make_monic<S: Scalar>(a: Vec<S>) -> Result<Vec<S>> {
    let a = trim(a);
    let lead = a.last().ok_or(Error::DivisionByZero)?.inv()?;
    Ok(a.iter().map(|c| c.mul(&lead)).collect())
}

pub fn gcd<S: Scalar>(a: &[S], b: &[S]) -> Result<Vec<S>> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y)?;
        x = y;
        y = r;
    }
    if x.is_empty() {
        Ok(x)
    } else {
        make_monic(x)
    }
}

pub fn mulmod<S: Scalar>(a: &[S], b: &[S], modulus: &[S]) -> Vec<S> {
    rem_monic(&mul(a, b), modulus)
}

pub fn powmod<S: Scalar>(base: &[S], mut e: u64, modulus: &[S]) -> Vec<S> {
    let one = modulus[0].one_like();
    let mut acc = vec![one];
    let mut b = rem_monic(base, modulus);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, modulus);
        }
        b = mulmod(&b, &b, modulus);
        e >>= 1;
    }
    acc
}

pub fn eval<S: Scalar>(a: &[S], x: &S) -> S {
    let mut acc = x.zero_like();
    for c in a.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

pub fn derivative<S: Scalar>(a: &[S]) -> Vec<S> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.mul(&c.from_i64_like(i as i64)))
        .collect()
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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

pub(crate) fn distinct_prime_factors(n: u64) -> Vec<u64> {
    prime_factors(n)
}

/// Rabin's irreducibility test for a monic polynomial over a field of order `q`.
pub fn is_irreducible_over<S: Scalar>(f: &[S], q: u64) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let zero = f[0].zero_like();
    let one = f[0].one_like();
    let x = vec![zero, one];
    // x^(q^k) mod f
    let frob_pow = |k: usize| {
        let mut y = x.clone();
        for _ in 0..k {
            y = powmod(&y, q, f);
        }
        y
    };
    let full = frob_pow(d);
    if !trim(sub(&full, &x)).is_empty() {
        return false;
    }
    for r in prime_factors(d as u64) {
        let y = frob_pow(d / r as usize);
        let g = gcd(&sub(&y, &x), f).unwrap_or_default();
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}
