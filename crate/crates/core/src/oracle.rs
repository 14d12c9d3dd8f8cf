//! Brute-force checks over small finite fields, written against a separate
//! table-driven model of `F_(q^m)` so that they do not share arithmetic with
//! the rest of the crate.
//!
//! `K` is `F_p[y]/(g)` with `g` found by trial division; elements are indices
//! `sum c_i p^i`. `F` is the fixed field of `x -> x^q` and `sigma` is that map.
//! Algebra elements are `m`-vectors over `K`, multiplied by
//! `(x t^s)(y t^r) = x sigma^(js)(y) t^(s+r)`, with `t^m = a`.

use serde::Serialize;

use crate::base::BaseElem;
use crate::classify;
use crate::error::{Error, Result};
use crate::extension::{CyclicExtension, ExtElem};
use crate::ffield::{is_prime, FqSpec};

/// Guard on the number of algebra elements any single sweep touches.
pub const ORACLE_LIMIT: u64 = 1 << 20;
/// Guard on `|K|` (addition and multiplication are full tables).
pub const FIELD_LIMIT: u64 = 1 << 10;

fn split_prime_power(q: u64) -> Result<(u64, usize)> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
    }
    let p = (2..=q).find(|d| q % d == 0).expect("q >= 2");
    let (mut r, mut n) = (q, 0);
    while r % p == 0 {
        r /= p;
        n += 1;
    }
    if r != 1 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
    }
    Ok((p, n))
}

fn poly_rem(a: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = r.pop().expect("nonempty");
        if c == 0 {
            continue;
        }
        let off = r.len() - dg;
        for (i, gi) in g[..dg].iter().enumerate() {
            r[off + i] = (r[off + i] + (p - c) * gi) % p;
        }
    }
    r
}

fn monic_polys(p: u64, deg: usize) -> impl Iterator<Item = Vec<u64>> {
    (0..p.pow(deg as u32)).map(move |mut k| {
        let mut v: Vec<u64> = (0..deg)
            .map(|_| {
                let c = k % p;
                k /= p;
                c
            })
            .collect();
        v.push(1);
        v
    })
}

fn irreducible(p: u64, d: usize) -> Vec<u64> {
    monic_polys(p, d)
        .find(|g| (1..=d / 2).all(|e| monic_polys(p, e).all(|h| poly_rem(g, &h, p).iter().any(|&c| c != 0))))
        .expect("irreducible polynomials exist in every degree")
}

/// `F_(q^m)` over `F_q` as lookup tables.
#[derive(Clone, Debug)]
pub struct OracleField {
    p: u64,
    n: usize,
    m: usize,
    size: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    /// `sig[e][x] = x^(q^e)`.
    sig: Vec<Vec<u32>>,
}

impl OracleField {
    pub fn new(q: u64, m: usize) -> Result<Self> {
        let (p, n) = split_prime_power(q)?;
        if m < 2 {
            return Err(Error::InvalidArgument("extension degree must be at least 2".into()));
        }
        let d = n * m;
        let size = p.checked_pow(d as u32).filter(|&s| s <= FIELD_LIMIT);
        let Some(size) = size else {
            return Err(Error::TooLarge(format!("|K| = {q}^{m} exceeds {FIELD_LIMIT}")));
        };
        let g = irreducible(p, d);
        let digits = |x: u64| -> Vec<u64> {
            let mut x = x;
            (0..d)
                .map(|_| {
                    let c = x % p;
                    x /= p;
                    c
                })
                .collect()
        };
        let index = |v: &[u64]| -> u32 { v.iter().rev().fold(0, |acc, &c| acc * p + c) as u32 };
        let s = size as usize;
        let mut add = vec![0; s * s];
        let mut mul = vec![0; s * s];
        let mut neg = vec![0; s];
        for x in 0..size {
            let dx = digits(x);
            neg[x as usize] = index(&dx.iter().map(|c| (p - c) % p).collect::<Vec<_>>());
            for y in 0..size {
                let dy = digits(y);
                let sum: Vec<u64> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x as usize * s + y as usize] = index(&sum);
                let mut prod = vec![0; 2 * d - 1];
                for (i, a) in dx.iter().enumerate() {
                    for (j, b) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                let mut r = poly_rem(&prod, &g, p);
                r.resize(d, 0);
                mul[x as usize * s + y as usize] = index(&r);
            }
        }
        let mut f = OracleField { p, n, m, size: size as u32, add, mul, neg, sig: Vec::new() };
        let frob: Vec<u32> = (0..f.size).map(|x| f.pow(x, q)).collect();
        let mut sig = vec![(0..f.size).collect::<Vec<u32>>()];
        for e in 1..m {
            let prev = &sig[e - 1];
            sig.push(prev.iter().map(|&x| frob[x as usize]).collect());
        }
        f.sig = sig;
        Ok(f)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn q(&self) -> u64 {
        self.p.pow(self.n as u32)
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn size(&self) -> u32 {
        self.size
    }
    /// Degree of `K` over the prime field.
    pub fn prime_degree(&self) -> usize {
        self.n * self.m
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        self.add[(x * self.size + y) as usize]
    }
    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg[y as usize])
    }
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.mul[(x * self.size + y) as usize]
    }
    pub fn pow(&self, x: u32, mut e: u64) -> u32 {
        let (mut b, mut acc) = (x, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
    /// `sigma^e(x)`, `sigma(x) = x^q`.
    pub fn sigma(&self, e: usize, x: u32) -> u32 {
        self.sig[e % self.m][x as usize]
    }
    pub fn in_base(&self, x: u32) -> bool {
        self.sigma(1, x) == x
    }
    /// Elements of `K \ F`, in index order.
    pub fn proper_elements(&self) -> Vec<u32> {
        (0..self.size).filter(|&x| !self.in_base(x)).collect()
    }
    /// `[F(x) : F]`.
    pub fn subfield_degree(&self, x: u32) -> usize {
        (1..=self.m).find(|&e| self.sigma(e, x) == x).expect("sigma^m = id")
    }
    fn digits(&self, mut x: u32) -> Vec<u32> {
        let p = self.p as u32;
        (0..self.prime_degree())
            .map(|_| {
                let c = x % p;
                x /= p;
                c
            })
            .collect()
    }
    fn from_digits(&self, v: &[u32]) -> u32 {
        let p = self.p as u32;
        v.iter().rev().fold(0, |acc, &c| acc * p + c)
    }
}

/// `(K/F, sigma^j, a)` over an [`OracleField`].
#[derive(Clone, Copy, Debug)]
pub struct OracleAlgebra<'f> {
    pub field: &'f OracleField,
    pub j: usize,
    pub a: u32,
}

impl<'f> OracleAlgebra<'f> {
    pub fn new(field: &'f OracleField, j: usize, a: u32) -> Self {
        OracleAlgebra { field, j, a }
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let m = f.m;
        let mut out = vec![0; m];
        for (s, &xs) in x.iter().enumerate() {
            if xs == 0 {
                continue;
            }
            for (r, &yr) in y.iter().enumerate() {
                if yr == 0 {
                    continue;
                }
                let mut c = f.mul(xs, f.sigma(self.j * s, yr));
                let mut e = s + r;
                if e >= m {
                    c = f.mul(c, self.a);
                    e -= m;
                }
                out[e] = f.add(out[e], c);
            }
        }
        out
    }

    /// Number of elements, `|K|^m`.
    pub fn size(&self) -> u64 {
        (self.field.size as u64).pow(self.field.m as u32)
    }

    pub fn element(&self, mut idx: u64) -> Vec<u32> {
        let s = self.field.size as u64;
        (0..self.field.m)
            .map(|_| {
                let c = (idx % s) as u32;
                idx /= s;
                c
            })
            .collect()
    }

    /// Coordinates over the prime field.
    fn coords(&self, x: &[u32]) -> Vec<u32> {
        x.iter().flat_map(|&c| self.field.digits(c)).collect()
    }
    fn from_coords(&self, v: &[u32]) -> Vec<u32> {
        v.chunks(self.field.prime_degree()).map(|ch| self.field.from_digits(ch)).collect()
    }
    /// Prime-field basis: `y^r t^s` at position `s d + r`.
    fn basis(&self) -> Vec<Vec<u32>> {
        let dim = self.field.m * self.field.prime_degree();
        (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                self.from_coords(&v)
            })
            .collect()
    }
}

fn rank_mod_p(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let inv = |x: u32| -> u32 { (1..p).find(|y| (x * y) % p == 1).expect("nonzero mod p") };
    let mut r = 0;
    for c in 0..ncols {
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, i);
        let k = inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = (*v * k) % p;
        }
        let piv = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (v, w) in row.iter_mut().zip(&piv) {
                    *v = (*v + (p - f) * w) % p;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

fn guard(n: u64, what: &str) -> Result<()> {
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge(format!("{what}: {n} candidates exceed {ORACLE_LIMIT}")));
    }
    Ok(())
}

/// No zero divisors: every nonzero `x` has injective left multiplication.
pub fn brute_is_division(alg: &OracleAlgebra) -> Result<bool> {
    guard(alg.size(), "division sweep")?;
    let basis = alg.basis();
    let dim = basis.len();
    let p = alg.field.p as u32;
    for idx in 1..alg.size() {
        let x = alg.element(idx);
        let cols: Vec<Vec<u32>> = basis.iter().map(|b| alg.coords(&alg.mul(&x, b))).collect();
        if rank_mod_p(cols, p) < dim {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An isomorphism `A -> B`: `k t^s -> sigma^tau(k) phi(t)^s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub tau: usize,
    pub phi_t: Vec<u32>,
}

impl Witness {
    /// Images of the prime-field basis of `A`.
    fn basis_images(&self, a: &OracleAlgebra, b: &OracleAlgebra) -> Vec<Vec<u32>> {
        let f = a.field;
        let m = f.m;
        let mut t_pows = vec![unit(m, 0)];
        for s in 1..m {
            let next = b.mul(&self.phi_t, &t_pows[s - 1]);
            t_pows.push(next);
        }
        a.basis()
            .iter()
            .map(|e| {
                let s = e.iter().position(|&c| c != 0).expect("basis vectors are nonzero");
                let mut k = vec![0; m];
                k[0] = f.sigma(self.tau, e[s]);
                b.mul(&k, &t_pows[s])
            })
            .collect()
    }

    /// `phi(x)`.
    pub fn apply(&self, a: &OracleAlgebra, b: &OracleAlgebra, x: &[u32]) -> Vec<u32> {
        let images = self.basis_images(a, b);
        let f = a.field;
        let mut out = vec![0; f.m];
        for (c, img) in a.coords(x).iter().zip(&images) {
            for _ in 0..*c {
                for (o, v) in out.iter_mut().zip(img) {
                    *o = f.add(*o, *v);
                }
            }
        }
        out
    }
}

fn unit(m: usize, s: usize) -> Vec<u32> {
    let mut v = vec![0; m];
    v[s] = 1;
    v
}

/// Search for an isomorphism `A -> B`: `phi` restricted to `K` ranges over
/// the Galois group and `phi(t)` over all of `B`.
pub fn brute_isomorphic(a: &OracleAlgebra, b: &OracleAlgebra) -> Result<Option<Witness>> {
    let f = a.field;
    if !std::ptr::eq(f, b.field) {
        return Err(Error::AlgebraMismatch);
    }
    let m = f.m;
    guard(b.size() * m as u64, "isomorphism search")?;
    let basis = a.basis();
    let dim = basis.len();
    let products: Vec<Vec<Vec<u32>>> =
        basis.iter().map(|x| basis.iter().map(|y| a.coords(&a.mul(x, y))).collect()).collect();
    for tau in 0..m {
        let mut target = vec![0; m];
        target[0] = f.sigma(tau, a.a);
        for idx in 0..b.size() {
            let phi_t = b.element(idx);
            // t * t^(m-1) = a
            let mut pw = phi_t.clone();
            for _ in 2..m {
                pw = b.mul(&phi_t, &pw);
            }
            if b.mul(&phi_t, &pw) != target {
                continue;
            }
            let w = Witness { tau, phi_t };
            let images = w.basis_images(a, b);
            let lin = |c: &[u32]| -> Vec<u32> {
                let mut out = vec![0; m];
                for (k, img) in c.iter().zip(&images) {
                    for _ in 0..*k {
                        for (o, v) in out.iter_mut().zip(img) {
                            *o = f.add(*o, *v);
                        }
                    }
                }
                out
            };
            let ok = (0..dim).all(|u| (0..dim).all(|v| lin(&products[u][v]) == b.mul(&images[u], &images[v])));
            if ok && rank_mod_p(images.iter().map(|x| b.coords(x)).collect(), f.p as u32) == dim {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Dimensions over `F` of the left, middle and right nuclei and the center.
pub fn brute_nuclei_dims(alg: &OracleAlgebra) -> [usize; 4] {
    let basis = alg.basis();
    let dim = basis.len();
    let p = alg.field.p as u32;
    let n = alg.field.n;
    let assoc = |x: &[u32], y: &[u32], z: &[u32]| -> Vec<u32> {
        let l = alg.mul(&alg.mul(x, y), z);
        let r = alg.mul(x, &alg.mul(y, z));
        let d: Vec<u32> = l.iter().zip(&r).map(|(a, b)| alg.field.sub(*a, *b)).collect();
        alg.coords(&d)
    };
    // column w: conditions on the basis vector w in the given slot
    let nullity = |slots: &[usize], center: bool| -> usize {
        let cols: Vec<Vec<u32>> = (0..dim)
            .map(|w| {
                let mut col = Vec::new();
                for &slot in slots {
                    for u in 0..dim {
                        for v in 0..dim {
                            col.extend(match slot {
                                0 => assoc(&basis[w], &basis[u], &basis[v]),
                                1 => assoc(&basis[u], &basis[w], &basis[v]),
                                _ => assoc(&basis[u], &basis[v], &basis[w]),
                            });
                        }
                    }
                }
                if center {
                    for u in 0..dim {
                        let l = alg.mul(&basis[w], &basis[u]);
                        let r = alg.mul(&basis[u], &basis[w]);
                        let d: Vec<u32> = l.iter().zip(&r).map(|(a, b)| alg.field.sub(*a, *b)).collect();
                        col.extend(alg.coords(&d));
                    }
                }
                col
            })
            .collect();
        dim - rank_mod_p(cols, p)
    };
    [nullity(&[0], false) / n, nullity(&[1], false) / n, nullity(&[2], false) / n, nullity(&[0, 1, 2], true) / n]
}

fn eval(f: &OracleField, coeffs: &[u32], x: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// The oracle field together with the embedding of the crate's own
/// presentation `F_q[x]/(f)` into it.
pub struct Bridge {
    pub field: OracleField,
    pub ext: CyclicExtension,
    z0: u32,
    x0: u32,
}

impl Bridge {
    pub fn new(q: u64, m: usize) -> Result<Self> {
        let field = OracleField::new(q, m)?;
        let (p, n) = split_prime_power(q)?;
        let spec = FqSpec::new(p, n, None)?;
        let ext = CyclicExtension::finite(&spec, m)?;
        let h: Vec<u32> = spec.modulus().iter().map(|&c| c as u32).collect();
        let z0 = (0..field.size).find(|&z| eval(&field, &h, z) == 0).expect("F_q embeds in K");
        let mut bridge = Bridge { field, ext, z0, x0: 0 };
        let fx: Vec<u32> = bridge.ext.modulus().iter().map(|c| bridge.map_base(c)).collect();
        bridge.x0 = (0..bridge.field.size).find(|&x| eval(&bridge.field, &fx, x) == 0).expect("K has a root of f");
        Ok(bridge)
    }

    fn map_base(&self, c: &BaseElem) -> u32 {
        let f = &self.field;
        let c = c.as_fq().expect("finite base");
        c.coeffs().iter().rev().fold(0, |acc, &d| f.add(f.mul(acc, self.z0), d as u32))
    }

    /// Image of a crate element in the oracle field.
    pub fn map(&self, x: &ExtElem) -> u32 {
        let f = &self.field;
        x.coeffs().iter().rev().fold(0, |acc, c| f.add(f.mul(acc, self.x0), self.map_base(c)))
    }

    /// Proper elements of the crate's `K`, enumerated in coordinate order.
    pub fn proper_elements(&self) -> Vec<ExtElem> {
        let BaseElem::Fq(one) = self.ext.base().one() else { unreachable!("finite base") };
        one.spec()
            .tuples(self.ext.degree())
            .map(|t| self.ext.elem(t.into_iter().map(BaseElem::Fq).collect()).expect("length m"))
            .filter(|a| !a.in_base())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub q: u64,
    pub m: usize,
    pub proper: usize,
    pub classes_brute: usize,
    pub classes_criterion: usize,
    pub agreement: bool,
    /// Class label per proper element, brute-force partition.
    pub labels_brute: Vec<usize>,
    pub labels_criterion: Vec<usize>,
}

fn partition<T>(items: &[T], mut same: impl FnMut(&T, &T) -> Result<bool>) -> Result<Vec<usize>> {
    let mut reps: Vec<usize> = Vec::new();
    let mut labels = Vec::with_capacity(items.len());
    for (i, x) in items.iter().enumerate() {
        let mut found = None;
        for (c, &r) in reps.iter().enumerate() {
            if same(&items[r], x)? {
                found = Some(c);
                break;
            }
        }
        labels.push(found.unwrap_or_else(|| {
            reps.push(i);
            reps.len() - 1
        }));
    }
    Ok(labels)
}

/// Partition `K \ F` for `(K/F, sigma, a)` twice: by isomorphism search and
/// by the norm criterion.
pub fn brute_classes(q: u64, m: usize) -> Result<ClassReport> {
    let bridge = Bridge::new(q, m)?;
    let elems = bridge.proper_elements();
    let mapped: Vec<u32> = elems.iter().map(|x| bridge.map(x)).collect();
    let f = &bridge.field;
    let labels_brute = partition(&mapped, |&a, &b| {
        Ok(brute_isomorphic(&OracleAlgebra::new(f, 1, a), &OracleAlgebra::new(f, 1, b))?.is_some())
    })?;
    let labels_criterion = partition(&elems, |a, b| classify::equivalent(&bridge.ext, a, b))?;
    let count = |l: &[usize]| l.iter().max().map_or(0, |x| x + 1);
    Ok(ClassReport {
        q,
        m,
        proper: elems.len(),
        classes_brute: count(&labels_brute),
        classes_criterion: count(&labels_criterion),
        agreement: labels_brute == labels_criterion,
        labels_brute,
        labels_criterion,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub q: u64,
    pub m: usize,
    pub checked: usize,
    pub passed: bool,
    pub counterexamples: Vec<String>,
}

pub const THEOREMS: [&str; 5] = ["sigma_distinct", "classify_iso", "steele", "nuclei", "petit_division"];

/// Run one of the exhaustive checks named in [`THEOREMS`].
pub fn verify_theorem(name: &str, q: u64, m: usize) -> Result<TheoremReport> {
    if !THEOREMS.contains(&name) {
        return Err(Error::UnknownTheorem(name.into()));
    }
    let field = OracleField::new(q, m)?;
    let f = &field;
    let proper = f.proper_elements();
    let mut checked = 0;
    let mut bad = Vec::new();
    match name {
        "sigma_distinct" => {
            for j in (2..m).filter(|&j| crate::ffield::gcd_u64(j as u64, m as u64) == 1) {
                for &a1 in &proper {
                    for &a2 in &proper {
                        checked += 1;
                        let (x, y) = (OracleAlgebra::new(f, 1, a1), OracleAlgebra::new(f, j, a2));
                        if let Some(w) = brute_isomorphic(&x, &y)? {
                            bad.push(format!("sigma,{a1} ~ sigma^{j},{a2} via {w:?}"));
                        }
                    }
                }
            }
        }
        "classify_iso" => {
            let r = brute_classes(q, m)?;
            checked = r.proper;
            for (i, (x, y)) in r.labels_brute.iter().zip(&r.labels_criterion).enumerate() {
                if x != y {
                    bad.push(format!("element {i}: brute class {x}, criterion class {y}"));
                }
            }
        }
        "steele" => {
            for &a in proper.iter().filter(|&&a| f.subfield_degree(a) == m) {
                checked += 1;
                if !brute_is_division(&OracleAlgebra::new(f, 1, a))? {
                    bad.push(format!("a = {a} generates K but has zero divisors"));
                }
            }
        }
        "nuclei" => {
            for &a in &proper {
                checked += 1;
                let h = (0..m).filter(|&k| f.sigma(k, a) == a).count();
                let got = brute_nuclei_dims(&OracleAlgebra::new(f, 1, a));
                let want = [m, m, m * h, 1];
                if got != want {
                    bad.push(format!("a = {a}: dims {got:?}, expected {want:?}"));
                }
            }
        }
        _ => {
            let ok = m == 2 || m == 3 || (is_prime(m as u64) && (q - 1) % m as u64 == 0);
            if !ok {
                return Err(Error::UnsupportedCase(format!("m = {m} over F_{q} is outside the prime-degree statement")));
            }
            for &a in &proper {
                checked += 1;
                if !brute_is_division(&OracleAlgebra::new(f, 1, a))? {
                    bad.push(format!("a = {a} has zero divisors"));
                }
            }
        }
    }
    Ok(TheoremReport { theorem: name.into(), q, m, checked, passed: bad.is_empty(), counterexamples: bad })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f9_division_examples() {
        let f = OracleField::new(3, 2).unwrap();
        // i with i^2 = -1
        let i = (0..9).find(|&x| f.mul(x, x) == f.neg[1]).unwrap();
        assert!(brute_is_division(&OracleAlgebra::new(&f, 1, i)).unwrap());
        assert!(!brute_is_division(&OracleAlgebra::new(&f, 1, 1)).unwrap());
        let mi = f.neg[i as usize];
        let w = brute_isomorphic(&OracleAlgebra::new(&f, 1, i), &OracleAlgebra::new(&f, 1, mi)).unwrap();
        assert!(w.is_some());
    }

    #[test]
    fn f4_semifield() {
        let f = OracleField::new(2, 2).unwrap();
        let w = f.proper_elements()[0];
        assert!(brute_is_division(&OracleAlgebra::new(&f, 1, w)).unwrap());
    }

    #[test]
    fn classes_f9() {
        let r = brute_classes(3, 2).unwrap();
        assert!(r.agreement);
        assert_eq!(r.classes_brute, 2);
        assert_eq!(r.proper, 6);
    }

    #[test]
    fn unknown_theorem() {
        assert_eq!(verify_theorem("nope", 2, 2), Err(Error::UnknownTheorem("nope".into())));
        assert!(matches!(OracleField::new(2, 11), Err(Error::TooLarge(_))));
    }
}
