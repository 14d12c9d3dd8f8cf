//! The algebra `(K/F, sigma^j, a) = K + Kt + ... + Kt^(m-1)` with
//! `(k t^s)(k' t^s') = k sigma^(js)(k') t^(s+s')`, reduced by `t^m = a`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::base::{BaseElem, BaseField};
use crate::error::{Error, Result};
use crate::extension::{CyclicExtension, ExtElem};
use crate::ffield::{gcd_u64, is_prime};
use crate::linalg;
use crate::scalar::Scalar;

/// Largest projective search space for the exhaustive division test.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

struct AlgInner {
    ext: CyclicExtension,
    j: usize,
    a: ExtElem,
    /// `table[b][c]` = coordinates of `e_b e_c` over `F`, `e_(s m + i) = x^i t^s`.
    table: OnceLock<Vec<Vec<Vec<BaseElem>>>>,
}

#[derive(Clone)]
pub struct CyclicAlgebra(Arc<AlgInner>);

impl fmt::Debug for CyclicAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclicAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} , sigma^{}, {})", self.0.ext, self.0.j, self.0.a)
    }
}

impl PartialEq for CyclicAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ext == other.0.ext && self.0.j == other.0.j && self.0.a.same(&other.0.a))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NucleusKind {
    Left,
    Middle,
    Right,
    Nucleus,
    Center,
}

impl std::str::FromStr for NucleusKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "left" => NucleusKind::Left,
            "middle" => NucleusKind::Middle,
            "right" => NucleusKind::Right,
            "nucleus" => NucleusKind::Nucleus,
            "center" => NucleusKind::Center,
            _ => return Err(Error::InvalidArgument(format!("unknown nucleus `{s}`"))),
        })
    }
}

/// Right nucleus `(K/E, sigma^(js), a)` with `E` the fixed field of the
/// stabilizer of `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RightNucleusStructure {
    /// `[E : F]`.
    pub fixed_field_degree: usize,
    /// The nucleus is generated by `K` and `t^s`.
    pub s: usize,
    /// `B` twists by `sigma^sigma_power` (a generator of `Gal(K/E)`).
    pub sigma_power: usize,
    /// `[K : E]`.
    pub degree_over_e: usize,
    pub dim_over_f: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DivisionMethod {
    Exhaustive,
    PrimeDegree,
    GeneratesK,
    AssociativeNorm,
    Unknown,
}

impl fmt::Display for DivisionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DivisionMethod::Exhaustive => "exhaustive",
            DivisionMethod::PrimeDegree => "prime-degree",
            DivisionMethod::GeneratesK => "a-generates-K",
            DivisionMethod::AssociativeNorm => "associative-norm",
            DivisionMethod::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisionResult {
    pub result: Option<bool>,
    pub method: DivisionMethod,
    pub note: String,
}

impl CyclicAlgebra {
    pub fn new(ext: &CyclicExtension, j: usize, a: ExtElem) -> Result<Self> {
        let m = ext.degree();
        if a.ext() != ext {
            return Err(Error::AlgebraMismatch);
        }
        if j == 0 || gcd_u64(j as u64, m as u64) != 1 {
            return Err(Error::InvalidArgument(format!("generator power {j} is not a unit mod {m}")));
        }
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(CyclicAlgebra(Arc::new(AlgInner { ext: ext.clone(), j: j % m, a, table: OnceLock::new() })))
    }

    pub fn ext(&self) -> &CyclicExtension {
        &self.0.ext
    }
    pub fn generator_power(&self) -> usize {
        self.0.j
    }
    pub fn a(&self) -> &ExtElem {
        &self.0.a
    }
    pub fn degree(&self) -> usize {
        self.0.ext.degree()
    }
    /// `a` outside `F`: the algebra is not associative.
    pub fn is_proper(&self) -> bool {
        !self.0.a.in_base()
    }
    fn base(&self) -> &BaseField {
        self.0.ext.base()
    }

    pub fn elem(&self, coeffs: Vec<ExtElem>) -> Result<AlgElem> {
        if coeffs.len() != self.degree() {
            return Err(Error::ContextMismatch(format!("expected {} components, got {}", self.degree(), coeffs.len())));
        }
        if coeffs.iter().any(|c| c.ext() != &self.0.ext) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgElem { alg: self.clone(), coeffs })
    }
    pub fn zero(&self) -> AlgElem {
        AlgElem { alg: self.clone(), coeffs: vec![self.0.ext.zero(); self.degree()] }
    }
    pub fn one(&self) -> AlgElem {
        self.from_k(self.0.ext.one(), 0)
    }
    /// `k t^s`.
    pub fn from_k(&self, k: ExtElem, s: usize) -> AlgElem {
        let mut v = self.zero();
        v.coeffs[s] = k;
        v
    }
    pub fn t(&self) -> AlgElem {
        self.from_k(self.0.ext.one(), 1 % self.degree())
    }
    /// `e_(s m + i) = x^i t^s`.
    pub fn basis(&self, idx: usize) -> AlgElem {
        let m = self.degree();
        self.from_k(self.0.ext.basis(idx % m), idx / m)
    }

    fn check(&self, x: &AlgElem) -> Result<()> {
        if &x.alg == self {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn mul(&self, x: &AlgElem, y: &AlgElem) -> Result<AlgElem> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    fn mul_unchecked(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let m = self.degree();
        let j = self.0.j as i64;
        let mut out = self.zero();
        for (s, k) in x.coeffs.iter().enumerate() {
            if k.is_zero() {
                continue;
            }
            for (s2, k2) in y.coeffs.iter().enumerate() {
                if k2.is_zero() {
                    continue;
                }
                let mut prod = k.mul(&k2.sigma(j * s as i64));
                let mut e = s + s2;
                if e >= m {
                    prod = prod.mul(&self.0.a);
                    e -= m;
                }
                out.coeffs[e] = out.coeffs[e].add(&prod);
            }
        }
        out
    }

    pub fn associator(&self, x: &AlgElem, y: &AlgElem, z: &AlgElem) -> Result<AlgElem> {
        let xy_z = self.mul(&self.mul(x, y)?, z)?;
        let x_yz = self.mul(x, &self.mul(y, z)?)?;
        Ok(xy_z.sub(&x_yz))
    }

    /// Coordinates over `F` in the basis `e_(s m + i)`.
    pub fn coords(&self, x: &AlgElem) -> Vec<BaseElem> {
        x.coeffs.iter().flat_map(|k| k.coeffs().to_vec()).collect()
    }

    pub fn from_coords(&self, c: &[BaseElem]) -> AlgElem {
        let m = self.degree();
        let coeffs = c
            .chunks(m)
            .map(|ch| self.0.ext.elem(ch.to_vec()).expect("coordinates of the right length"))
            .collect();
        AlgElem { alg: self.clone(), coeffs }
    }

    /// Structure constants over `F`.
    pub fn table(&self) -> &Vec<Vec<Vec<BaseElem>>> {
        self.0.table.get_or_init(|| {
            let n = self.degree() * self.degree();
            let basis: Vec<AlgElem> = (0..n).map(|i| self.basis(i)).collect();
            basis
                .iter()
                .map(|b| basis.iter().map(|c| self.coords(&self.mul_unchecked(b, c))).collect())
                .collect()
        })
    }

    /// Product of coordinate vectors through the structure constants.
    fn mul_coords(&self, x: &[BaseElem], y: &[BaseElem]) -> Vec<BaseElem> {
        let t = self.table();
        let zero = self.base().zero();
        let mut out = vec![zero; x.len()];
        for (b, xb) in x.iter().enumerate() {
            if xb.is_zero() {
                continue;
            }
            for (c, yc) in y.iter().enumerate() {
                if yc.is_zero() {
                    continue;
                }
                let f = xb.mul(yc);
                for (o, v) in out.iter_mut().zip(&t[b][c]) {
                    if !v.is_zero() {
                        *o = o.add(&f.mul(v));
                    }
                }
            }
        }
        out
    }

    fn unit_vec(&self, i: usize) -> Vec<BaseElem> {
        let n = self.degree() * self.degree();
        let mut v = vec![self.base().zero(); n];
        v[i] = self.base().one();
        v
    }

    /// `F`-basis of a nucleus or the center, by solving the linear
    /// conditions on the structure basis.
    pub fn nucleus(&self, which: NucleusKind) -> Result<Vec<AlgElem>> {
        let n = self.degree() * self.degree();
        let e: Vec<Vec<BaseElem>> = (0..n).map(|i| self.unit_vec(i)).collect();
        let assoc = |x: &[BaseElem], y: &[BaseElem], z: &[BaseElem]| -> Vec<BaseElem> {
            let l = self.mul_coords(&self.mul_coords(x, y), z);
            let r = self.mul_coords(x, &self.mul_coords(y, z));
            l.iter().zip(&r).map(|(a, b)| a.sub(b)).collect()
        };
        // for each unknown basis vector b, the list of condition vectors
        let slots: Vec<usize> = match which {
            NucleusKind::Left => vec![0],
            NucleusKind::Middle => vec![1],
            NucleusKind::Right => vec![2],
            NucleusKind::Nucleus | NucleusKind::Center => vec![0, 1, 2],
        };
        let mut columns: Vec<Vec<BaseElem>> = vec![Vec::new(); n];
        for (b, col) in columns.iter_mut().enumerate() {
            for &slot in &slots {
                for i in 0..n {
                    for j in 0..n {
                        let v = match slot {
                            0 => assoc(&e[b], &e[i], &e[j]),
                            1 => assoc(&e[i], &e[b], &e[j]),
                            _ => assoc(&e[i], &e[j], &e[b]),
                        };
                        col.extend(v);
                    }
                }
            }
            if which == NucleusKind::Center {
                for i in 0..n {
                    let l = self.mul_coords(&e[b], &e[i]);
                    let r = self.mul_coords(&e[i], &e[b]);
                    col.extend(l.iter().zip(&r).map(|(a, c)| a.sub(c)));
                }
            }
        }
        let nrows = columns[0].len();
        let rows: Vec<Vec<BaseElem>> = (0..nrows)
            .map(|r| columns.iter().map(|c| c[r].clone()).collect())
            .filter(|row: &Vec<BaseElem>| row.iter().any(|x| !x.is_zero()))
            .collect();
        let zero = self.base().zero();
        let ns = if rows.is_empty() {
            e.clone()
        } else {
            linalg::nullspace(&rows, n, &zero)
        };
        Ok(ns.iter().map(|v| self.from_coords(v)).collect())
    }

    pub fn right_nucleus_structure(&self) -> RightNucleusStructure {
        let m = self.degree();
        let ext = &self.0.ext;
        let h = (0..m).filter(|&k| ext.sigma_apply(k as i64, &self.0.a).same(&self.0.a)).count();
        let s = m / h;
        RightNucleusStructure {
            fixed_field_degree: s,
            s,
            sigma_power: (self.0.j * s) % m,
            degree_over_e: h,
            dim_over_f: m * h,
        }
    }

    /// Matrix of `y -> x y` over `F` (rows indexed by output coordinate).
    pub fn left_mult_matrix(&self, x: &AlgElem) -> Vec<Vec<BaseElem>> {
        let n = self.degree() * self.degree();
        let xc = self.coords(x);
        let cols: Vec<Vec<BaseElem>> = (0..n).map(|c| self.mul_coords(&xc, &self.unit_vec(c))).collect();
        (0..n).map(|r| cols.iter().map(|col| col[r].clone()).collect()).collect()
    }

    /// Exhaustive zero-divisor test over a finite base. Since `K` lies in the
    /// left nucleus, `L_(kx) = L_k L_x`, so only `x` whose first nonzero
    /// component is 1 are tested.
    pub fn exhaustive_is_division(&self) -> Result<bool> {
        let BaseField::Finite(fq) = self.base() else {
            return Err(Error::UnsupportedCase("exhaustive test needs a finite base".into()));
        };
        let m = self.degree();
        let q = fq.order();
        let km = q.pow(m as u32);
        let count: u64 = (0..m).map(|s| km.saturating_pow((m - 1 - s) as u32)).sum();
        if count > EXHAUSTIVE_LIMIT {
            return Err(Error::TooLarge(format!("{count} left multiplications")));
        }
        let n = m * m;
        let k_elems: Vec<ExtElem> = fq
            .tuples(m)
            .map(|t| self.0.ext.elem(t.into_iter().map(BaseElem::Fq).collect()).expect("length m"))
            .collect();
        for lead in 0..m {
            let tail = m - 1 - lead;
            let total = (k_elems.len() as u64).pow(tail as u32);
            for mut idx in 0..total {
                let mut x = self.zero();
                x.coeffs[lead] = self.0.ext.one();
                for s in (lead + 1)..m {
                    x.coeffs[s] = k_elems[(idx % km) as usize].clone();
                    idx /= km;
                }
                if linalg::rank(&self.left_mult_matrix(&x), n) < n {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_division(&self) -> DivisionResult {
        let m = self.degree();
        let base = self.base();
        let a = &self.0.a;
        let done = |result: bool, method, note: &str| DivisionResult { result: Some(result), method, note: note.into() };
        if base.is_finite() {
            match self.exhaustive_is_division() {
                Ok(r) => return done(r, DivisionMethod::Exhaustive, "every nonzero left multiplication checked"),
                Err(Error::TooLarge(_)) => {}
                Err(e) => return DivisionResult { result: None, method: DivisionMethod::Unknown, note: e.to_string() },
            }
        }
        if let Some(c) = a.to_base() {
            return match self.associative_division(&c) {
                Ok(r) => done(r, DivisionMethod::AssociativeNorm, "a in F: division iff a has order m modulo norms"),
                Err(e) => DivisionResult { result: None, method: DivisionMethod::Unknown, note: e.to_string() },
            };
        }
        let roots = (base.q() - 1) % m as u64 == 0 && base.characteristic() != m as u64;
        if is_prime(m as u64) && (m <= 3 || roots) {
            return done(true, DivisionMethod::PrimeDegree, "m prime and a outside F");
        }
        let ext = &self.0.ext;
        if ext.subfield_degree(a) == m {
            return done(true, DivisionMethod::GeneratesK, "a lies in no proper subfield");
        }
        let note = if m == 4 {
            "a lies in the quadratic subfield E: division iff a is not a norm from K to E, \
             which needs norm groups over E"
        } else {
            "no applicable criterion"
        };
        DivisionResult { result: None, method: DivisionMethod::Unknown, note: note.into() }
    }

    /// `a in F^x`: division iff `a^i` is not a norm for `0 < i < m`.
    fn associative_division(&self, c: &BaseElem) -> Result<bool> {
        let ext = &self.0.ext;
        for i in 1..self.degree() {
            if ext.is_norm(&c.pow(i as u64))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Basis products `e_b e_c` as coordinate strings.
    pub fn multiplication_table(&self) -> Vec<Vec<String>> {
        let n = self.degree() * self.degree();
        (0..n)
            .map(|b| (0..n).map(|c| self.from_coords(&self.table()[b][c]).to_string()).collect())
            .collect()
    }
}

/// Element `sum k_s t^s`.
#[derive(Clone)]
pub struct AlgElem {
    alg: CyclicAlgebra,
    coeffs: Vec<ExtElem>,
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", c.join("; "))
    }
}

impl AlgElem {
    pub fn coeffs(&self) -> &[ExtElem] {
        &self.coeffs
    }
    pub fn add(&self, rhs: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect();
        AlgElem { alg: self.alg.clone(), coeffs }
    }
    pub fn sub(&self, rhs: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub(b)).collect();
        AlgElem { alg: self.alg.clone(), coeffs }
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    pub fn same(&self, rhs: &Self) -> bool {
        self.coeffs.iter().zip(&rhs.coeffs).all(|(a, b)| a.same(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FqSpec;

    fn f9_alg(a_coeffs: [u64; 2]) -> CyclicAlgebra {
        let f3 = FqSpec::prime(3).unwrap();
        let k = CyclicExtension::finite(&f3, 2).unwrap();
        let a = k.elem(a_coeffs.iter().map(|&c| BaseElem::Fq(f3.from_u64(c))).collect()).unwrap();
        CyclicAlgebra::new(&k, 1, a).unwrap()
    }

    #[test]
    fn eq1_examples() {
        let alg = f9_alg([0, 1]);
        let k = alg.ext().clone();
        let i = k.basis(1);
        let it = alg.from_k(i.clone(), 1);
        let sq = alg.mul(&it, &it).unwrap();
        assert!(sq.same(&alg.from_k(i.clone(), 0)));
        let t = alg.t();
        let ta = alg.mul(&t, &alg.from_k(i.clone(), 0)).unwrap();
        assert!(ta.same(&alg.from_k(i.sigma(1), 1)));
        let x = alg.basis(3);
        assert!(alg.mul(&alg.one(), &x).unwrap().same(&x));
    }

    #[test]
    fn power_associativity_fails() {
        let alg = f9_alg([0, 1]);
        let t = alg.t();
        let assoc = alg.associator(&t, &t, &t).unwrap();
        let a = alg.a().clone();
        let want = alg.from_k(a.sub(&a.sigma(1)), 1);
        assert!(assoc.same(&want) && !assoc.is_zero());
    }

    #[test]
    fn nuclei_dimensions() {
        let alg = f9_alg([0, 1]);
        let dims: Vec<usize> = [NucleusKind::Left, NucleusKind::Middle, NucleusKind::Right, NucleusKind::Center]
            .iter()
            .map(|&w| alg.nucleus(w).unwrap().len())
            .collect();
        assert_eq!(dims, vec![2, 2, 2, 1]);
    }

    #[test]
    fn division_examples() {
        let r = f9_alg([0, 1]).is_division();
        assert_eq!(r.result, Some(true));
        assert_eq!(r.method, DivisionMethod::Exhaustive);
        assert_eq!(f9_alg([1, 0]).is_division().result, Some(false));
    }
}
