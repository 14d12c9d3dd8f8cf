//! Cyclic Galois extensions `K/F` with a fixed generator `sigma`.
//!
//! `K = F[x]/(f)` with power basis `1, x, ..., x^(m-1)`. The Galois action
//! is stored as the matrices of `sigma^k` on that basis.

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::base::{BaseElem, BaseField};
use crate::error::{Error, Result};
use crate::ffield::{self, gcd_u64, FqElem, FqSpec};
use crate::linalg;
use crate::localfield::{LocalElem, LocalFieldSpec};
use crate::poly;
use crate::scalar::{cmp_slices, Scalar};

#[derive(Clone, Debug)]
pub enum ExtKind {
    /// `F_q[x]/(f)` over a finite field, `sigma` the `q`-power map.
    FiniteExt,
    /// `F(sqrt c)`, `sigma(sqrt c) = -sqrt c`.
    QuadraticRoot { c: BaseElem },
    /// `F(beta)`, `beta^m = b`, `sigma(beta) = zeta * beta`.
    Kummer { b: BaseElem, zeta: BaseElem },
    /// `F(alpha)`, `alpha^2 + alpha = c`, `sigma(alpha) = alpha + 1`.
    ArtinSchreier { c: BaseElem },
    /// Unramified extension of a local field; `sigma` lifts Frobenius.
    /// When `m | q-1` it is presented as `x^m - b` with `sigma(x) = zeta x`.
    Unramified { kummer: Option<(BaseElem, BaseElem)> },
    /// `E(sqrt(eps_E * pi))` over `E = F(sqrt eps)`, `eps_E = u0 + u1 sqrt eps`.
    QuarticMixed { eps: BaseElem, u0: BaseElem, u1: BaseElem },
}

impl ExtKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExtKind::FiniteExt => "finite",
            ExtKind::QuadraticRoot { .. } => "sqrt",
            ExtKind::Kummer { .. } => "kummer",
            ExtKind::ArtinSchreier { .. } => "as",
            ExtKind::Unramified { .. } => "unram",
            ExtKind::QuarticMixed { .. } => "quartic-mixed",
        }
    }
}

/// How membership in the norm group is decided.
#[derive(Clone, Debug)]
enum NormRule {
    All,
    ValuationDivisible(u64),
    /// Totally tamely ramified, `N(beta) = nb` of valuation `k` prime to `m`.
    Tame { m: u64, nb: BaseElem, k: i64 },
    /// Quadratic extension of `Q_2` by `sqrt c`, `c` given by its square class.
    Q2 { c: i64 },
    ArtinSchreier { c: LocalElem },
    /// `K_0`: norms are `<n pi^2>` times square units, `n` a nonsquare residue.
    Mixed4 { n: FqElem },
    Unsupported(String),
}

struct ExtInner {
    base: BaseField,
    m: usize,
    kind: ExtKind,
    modulus: Vec<BaseElem>,
    /// `sigma[k][j]` = coordinates of `sigma^k(x^j)`.
    sigma: Vec<Vec<Vec<BaseElem>>>,
    rule: NormRule,
    key: String,
}

#[derive(Clone)]
pub struct CyclicExtension(Arc<ExtInner>);

impl PartialEq for CyclicExtension {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base
                && self.0.m == other.0.m
                && self.0.key == other.0.key
                && self.0.modulus.len() == other.0.modulus.len()
                && self.0.modulus.iter().zip(&other.0.modulus).all(|(a, b)| a.same(b))
                && self.0.sigma[1].iter().flatten().zip(other.0.sigma[1].iter().flatten()).all(|(a, b)| a.same(b)))
    }
}

impl fmt::Debug for CyclicExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclicExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0.m;
        match &self.0.kind {
            ExtKind::FiniteExt => write!(f, "{}[x]/({})", self.0.base, self.render_modulus()),
            ExtKind::QuadraticRoot { c } => write!(f, "{}(sqrt({c}))", self.0.base),
            ExtKind::Kummer { b, .. } => write!(f, "{}(({b})^(1/{m}))", self.0.base),
            ExtKind::ArtinSchreier { c } => write!(f, "{}(alpha), alpha^2+alpha = {c}", self.0.base),
            ExtKind::Unramified { .. } => write!(f, "unramified degree {m} over {}", self.0.base),
            ExtKind::QuarticMixed { .. } => write!(f, "{}(sqrt(eps_E*pi)) over {}(sqrt(eps))", self.0.base, self.0.base),
        }
    }
}

fn poly_x(base: &BaseField) -> Vec<BaseElem> {
    vec![base.zero(), base.one()]
}

/// Matrix columns applied to a coordinate vector.
fn apply(cols: &[Vec<BaseElem>], v: &[BaseElem]) -> Vec<BaseElem> {
    let zero = cols[0][0].zero_like();
    let mut out = vec![zero; cols.len()];
    for (vj, col) in v.iter().zip(cols) {
        if vj.is_zero() && !matches!(vj, BaseElem::Local(l) if !l.is_exact_zero()) {
            continue;
        }
        for (o, c) in out.iter_mut().zip(col) {
            *o = o.add(&vj.mul(c));
        }
    }
    out
}

fn pad(mut v: Vec<BaseElem>, m: usize, zero: &BaseElem) -> Vec<BaseElem> {
    v.resize(m, zero.clone());
    v
}

/// Least monic irreducible of degree `m` over `F_q`, coefficient vectors in
/// canonical order, low degree first.
pub fn least_irreducible(spec: &FqSpec, m: usize) -> Result<Vec<FqElem>> {
    if spec.order().checked_pow(m as u32).is_none_or(|n| n > 1 << 24) {
        return Err(Error::TooLarge(format!("irreducible search of degree {m} over GF({})", spec.order())));
    }
    let q = spec.order();
    Ok(spec
        .tuples(m)
        .map(|mut f| {
            f.push(spec.one());
            f
        })
        .find(|f| poly::is_irreducible_over(f, q))
        .expect("irreducible polynomials exist in every degree"))
}

/// Order of the class of `b` in `F^x / (F^x)^m`, assuming `m | q-1`.
fn class_order(b: &BaseElem, m: u64) -> Result<u64> {
    let d = b.leading_digit()?;
    let ci = d.power_class(m)?.class_index;
    let unit_order = m / gcd_u64(ci, m);
    let v = b.valuation().ok_or(Error::ZeroInput)?.rem_euclid(m as i64) as u64;
    let val_order = m / gcd_u64(v, m);
    Ok(unit_order / gcd_u64(unit_order, val_order) * val_order)
}

fn is_square_class_one(c: &BaseElem) -> Result<bool> {
    match c {
        BaseElem::Fq(x) => Ok(x.power_class(2)?.is_nth_power),
        BaseElem::Local(x) if x.spec().p() == 2 => Ok(x.q2_square_class()? == 1),
        BaseElem::Local(x) => Ok(x.square_class()? == crate::localfield::SquareClass::One),
    }
}

/// Artin-Schreier data of `c` over `F_{2^f}((t))`: the reduced polar part
/// (odd exponents only) and the trace of the reduced constant term.
fn as_reduce(c: &LocalElem) -> Result<(Vec<(i64, FqElem)>, u64)> {
    let res = c.spec().residue().clone();
    let v = c.valuation_bound();
    if v > 0 {
        return Ok((Vec::new(), 0));
    }
    let abs = c.abs_precision().unwrap_or(i64::MAX);
    if abs < 1 {
        return Err(Error::InsufficientPrecision("constant term of c must be known".into()));
    }
    let digits = c.digits();
    let mut coef: Vec<FqElem> = (v..=0).map(|i| digits.get((i - v) as usize).cloned().unwrap_or_else(|| res.zero())).collect();
    // coef[i - v] is the coefficient of t^i
    let half = res.order() / 2;
    for i in v..0 {
        let a = coef[(i - v) as usize].clone();
        if i % 2 == 0 && !a.is_zero() {
            coef[(i - v) as usize] = res.zero();
            let j = i / 2;
            let idx = (j - v) as usize;
            coef[idx] = coef[idx].add(&a.pow_u(half));
        }
    }
    let polar = (v..0)
        .filter(|i| !coef[(i - v) as usize].is_zero())
        .map(|i| (i, coef[(i - v) as usize].clone()))
        .collect();
    let trace = coef[(-v) as usize].trace();
    Ok((polar, trace))
}

/// The Artin-Schreier symbol `Tr Res(c dx/x)`; zero iff `x` is a norm from
/// `F(alpha)`, `alpha^2 + alpha = c`.
fn as_symbol(c: &LocalElem, x: &LocalElem) -> Result<u64> {
    let v = x.valuation().ok_or(Error::ZeroInput)?;
    let res = c.spec().residue().clone();
    let vc = c.valuation_bound().min(0);
    let need = (-vc) as usize;
    let u = x.unit_part()?.digits();
    if u.len() <= need {
        return Err(Error::NormTestInconclusive(format!(
            "{} digits of the unit part needed, {} known",
            need + 1,
            u.len()
        )));
    }
    if c.abs_precision().is_some_and(|a| a < 1) {
        return Err(Error::NormTestInconclusive("constant term of c unknown".into()));
    }
    let cdig = c.digits();
    let cv = c.valuation_bound();
    let coeff = |i: i64| -> FqElem {
        if c.is_zero() || i < cv {
            res.zero()
        } else {
            cdig.get((i - cv) as usize).cloned().unwrap_or_else(|| res.zero())
        }
    };
    // w = u'/u to `need` terms
    let n = need.max(1);
    let du: Vec<FqElem> = (0..n).map(|i| u.get(i + 1).map(|d| d.mul(&res.from_u64((i + 1) as u64))).unwrap_or_else(|| res.zero())).collect();
    let u0inv = u[0].inv()?;
    let mut w: Vec<FqElem> = Vec::with_capacity(n);
    for k in 0..n {
        let mut s = du[k].clone();
        for i in 1..=k {
            s = s.sub(&u[i].mul(&w[k - i]));
        }
        w.push(s.mul(&u0inv));
    }
    let mut r = coeff(0).mul(&res.from_i64(v));
    for j in 0..need {
        r = r.add(&coeff(-1 - j as i64).mul(&w[j]));
    }
    Ok(r.trace())
}

impl CyclicExtension {
    fn build(base: BaseField, m: usize, kind: ExtKind, modulus: Vec<BaseElem>, sigma_x: Vec<BaseElem>) -> Result<Self> {
        let zero = base.zero();
        let one_col = |j: usize| {
            let mut v = vec![zero.clone(); m];
            v[j] = base.one();
            v
        };
        let identity: Vec<Vec<BaseElem>> = (0..m).map(one_col).collect();
        let mut s1 = vec![one_col(0)];
        let mut pw = vec![base.one()];
        for _ in 1..m {
            pw = poly::mulmod(&pw, &sigma_x, &modulus);
            s1.push(pad(pw.clone(), m, &zero));
        }
        let mut sigma = vec![identity];
        for k in 1..m {
            let prev: &Vec<Vec<BaseElem>> = &sigma[k - 1];
            let next: Vec<Vec<BaseElem>> = prev.iter().map(|col| apply(&s1, col)).collect();
            sigma.push(next);
        }
        let mut inner = ExtInner { base, m, kind, modulus, sigma, rule: NormRule::All, key: String::new() };
        let (rule, key) = Self::norm_rule(&inner)?;
        inner.rule = rule;
        inner.key = key;
        Ok(CyclicExtension(Arc::new(inner)))
    }

    fn norm_rule(e: &ExtInner) -> Result<(NormRule, String)> {
        let m = e.m as u64;
        let BaseField::Local(spec) = &e.base else {
            return Ok((NormRule::All, format!("GF({}^{})", e.base.q(), m)));
        };
        Ok(match &e.kind {
            ExtKind::FiniteExt => unreachable!("finite extensions have finite base"),
            ExtKind::Unramified { .. } => (NormRule::ValuationDivisible(m), format!("unram:{m}")),
            ExtKind::QuarticMixed { eps, u0, u1 } => {
                let n = u0.mul(u0).sub(&eps.mul(u1).mul(u1));
                (NormRule::Mixed4 { n: n.leading_digit()? }, "mixed:4".into())
            }
            ExtKind::ArtinSchreier { c } => {
                let c = c.as_local().expect("local").clone();
                let (polar, trace) = as_reduce(&c)?;
                if polar.is_empty() {
                    (NormRule::ValuationDivisible(2), "unram:2".into())
                } else {
                    let p: Vec<String> = polar.iter().map(|(i, a)| format!("{a}t^{i}")).collect();
                    (NormRule::ArtinSchreier { c }, format!("as:{}+{trace}", p.join("+")))
                }
            }
            ExtKind::QuadraticRoot { c } if spec.p() == 2 => {
                let cls = c.as_local().expect("local").q2_square_class()?;
                (NormRule::Q2 { c: cls }, format!("sqrt:{cls}"))
            }
            ExtKind::QuadraticRoot { c: b } | ExtKind::Kummer { b, .. } => {
                let k = b.valuation().ok_or(Error::ZeroInput)?;
                if k.rem_euclid(m as i64) == 0 {
                    (NormRule::ValuationDivisible(m), format!("unram:{m}"))
                } else if gcd_u64(k.rem_euclid(m as i64) as u64, m) == 1 {
                    let sign = if m % 2 == 0 { -1 } else { 1 };
                    let nb = b.mul(&e.base.from_i64(sign));
                    let kinv = (1..m).find(|e| (e * k.rem_euclid(m as i64) as u64) % m == 1).expect("k is invertible mod m");
                    let lead = b.leading_digit()?.pow_u(kinv);
                    let ci = lead.power_class(m)?.class_index;
                    (NormRule::Tame { m, nb, k }, format!("kummer:{m}:{ci}"))
                } else {
                    let why = format!("partially ramified Kummer extension with v(b) = {k}");
                    (NormRule::Unsupported(why.clone()), format!("kummer:{m}:{b}"))
                }
            }
        })
    }

    /// `F_q[x]/(f)` with `f` the least irreducible of degree `m`.
    pub fn finite(base: &FqSpec, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument("extension degree must be at least 2".into()));
        }
        let bf = BaseField::Finite(base.clone());
        let f: Vec<BaseElem> = least_irreducible(base, m)?.into_iter().map(BaseElem::Fq).collect();
        let sigma_x = poly::powmod(&poly_x(&bf), base.order(), &f);
        Self::build(bf, m, ExtKind::FiniteExt, f, sigma_x)
    }

    /// `F(sqrt c)`.
    pub fn quadratic(base: &BaseField, c: BaseElem) -> Result<Self> {
        if !base.owns(&c) {
            return Err(Error::SpecMismatch);
        }
        if c.is_zero() {
            return Err(Error::NotAFieldExtension("c = 0".into()));
        }
        if base.p() == 2 && !base.is_q2() {
            return Err(Error::NotAFieldExtension(
                "x^2 - c is inseparable in characteristic 2; use an Artin-Schreier extension".into(),
            ));
        }
        if is_square_class_one(&c)? {
            return Err(Error::NotAFieldExtension(format!("{c} is a square")));
        }
        let f = vec![c.neg(), base.zero(), base.one()];
        let sigma_x = vec![base.zero(), base.from_i64(-1)];
        Self::build(base.clone(), 2, ExtKind::QuadraticRoot { c }, f, sigma_x)
    }

    /// The canonical primitive `m`-th root of unity: Teichmuller lift of the
    /// least residue of order `m`.
    pub fn canonical_zeta(base: &BaseField, m: u64) -> Result<BaseElem> {
        if m % base.p() == 0 {
            return Err(Error::WildCase(format!("m = {m} divisible by the residue characteristic")));
        }
        let d = base.residue().least_of_order(m).ok_or(Error::MissingRootsOfUnity)?;
        base.teichmuller(&d)
    }

    /// `F(b^(1/m))` with the canonical `zeta`.
    pub fn kummer(base: &BaseField, m: usize, b: BaseElem) -> Result<Self> {
        if m == 2 {
            return Self::quadratic(base, b);
        }
        let zeta = Self::canonical_zeta(base, m as u64)?;
        Self::kummer_with_zeta(base, m, b, zeta)
    }

    pub fn kummer_with_zeta(base: &BaseField, m: usize, b: BaseElem, zeta: BaseElem) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument("extension degree must be at least 2".into()));
        }
        if !base.owns(&b) || !base.owns(&zeta) {
            return Err(Error::SpecMismatch);
        }
        if m as u64 % base.p() == 0 {
            return Err(Error::WildCase(format!("m = {m} divisible by the residue characteristic")));
        }
        if (base.q() - 1) % m as u64 != 0 {
            return Err(Error::MissingRootsOfUnity);
        }
        if b.is_zero() {
            return Err(Error::NotAFieldExtension("b = 0".into()));
        }
        let zd = zeta.leading_digit()?;
        if zeta.valuation() != Some(0) || zd.mult_order()? != m as u64 || !zeta.pow(m as u64).sub(&base.one()).is_zero() {
            return Err(Error::InvalidArgument(format!("{zeta} is not a primitive {m}-th root of unity")));
        }
        if class_order(&b, m as u64)? != m as u64 {
            return Err(Error::NotAFieldExtension(format!("x^{m} - {b} is reducible")));
        }
        let mut f = vec![base.zero(); m + 1];
        f[0] = b.neg();
        f[m] = base.one();
        let sigma_x = vec![base.zero(), zeta.clone()];
        let kind = if m == 2 { ExtKind::QuadraticRoot { c: b } } else { ExtKind::Kummer { b, zeta } };
        Self::build(base.clone(), m, kind, f, sigma_x)
    }

    /// Artin-Schreier extension `x^2 + x = c` in characteristic 2.
    pub fn artin_schreier(base: &BaseField, c: BaseElem) -> Result<Self> {
        if base.characteristic() != 2 {
            return Err(Error::NotAFieldExtension("Artin-Schreier extensions need characteristic 2".into()));
        }
        if !base.owns(&c) {
            return Err(Error::SpecMismatch);
        }
        match &c {
            BaseElem::Fq(x) => {
                if x.trace() == 0 {
                    return Err(Error::NotAFieldExtension(format!("{c} lies in z^2 + z")));
                }
            }
            BaseElem::Local(x) => {
                let (polar, trace) = as_reduce(x)?;
                if polar.is_empty() && trace == 0 {
                    return Err(Error::NotAFieldExtension(format!("{c} lies in z^2 + z")));
                }
            }
        }
        let f = vec![c.clone(), base.one(), base.one()];
        let sigma_x = vec![base.one(), base.one()];
        Self::build(base.clone(), 2, ExtKind::ArtinSchreier { c }, f, sigma_x)
    }

    /// The unramified extension of degree `m` (or the degree-`m` extension of
    /// a finite field).
    pub fn unramified(base: &BaseField, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument("extension degree must be at least 2".into()));
        }
        let spec = match base {
            BaseField::Finite(s) => return Self::finite(s, m),
            BaseField::Local(s) => s.clone(),
        };
        let q = spec.q();
        let res = spec.residue();
        if (q - 1) % m as u64 == 0 {
            let u0 = res
                .elements()
                .skip(1)
                .find(|u| class_order(&BaseElem::Fq(u.clone()), m as u64).is_ok_and(|o| o == m as u64))
                .expect("m | q-1, so a class of order m exists");
            let b = base.lift(&u0);
            let zeta = base.teichmuller(&u0.pow_u((q - 1) / m as u64))?;
            let mut f = vec![base.zero(); m + 1];
            f[0] = b.neg();
            f[m] = base.one();
            let sigma_x = vec![base.zero(), zeta.clone()];
            return Self::build(base.clone(), m, ExtKind::Unramified { kummer: Some((b, zeta)) }, f, sigma_x);
        }
        let fbar = least_irreducible(res, m)?;
        let f: Vec<BaseElem> = fbar.iter().map(|d| base.lift(d)).collect();
        let frob = poly::powmod(&poly_x(base), q, &f);
        let sigma_x = if spec.is_padic() { Self::newton_frobenius(&spec, &f, frob)? } else { frob };
        Self::build(base.clone(), m, ExtKind::Unramified { kummer: None }, f, sigma_x)
    }

    /// Root of `f` congruent to `start`, by Newton iteration in `F[x]/(f)`.
    fn newton_frobenius(spec: &LocalFieldSpec, f: &[BaseElem], start: Vec<BaseElem>) -> Result<Vec<BaseElem>> {
        let m = f.len() - 1;
        let zero = BaseElem::Local(spec.zero());
        let df = poly::derivative(f);
        let mut y = pad(start, m, &zero);
        for _ in 0..64 {
            let fy = pad(Self::compose(f, &y, f), m, &zero);
            if fy.iter().all(|c| c.is_zero()) {
                break;
            }
            let dfy = pad(Self::compose(&df, &y, f), m, &zero);
            // solve dfy * z = fy
            let mult: Vec<Vec<BaseElem>> = (0..m)
                .map(|j| {
                    let mut xj = vec![zero.clone(); j + 1];
                    xj[j] = zero.one_like();
                    pad(poly::mulmod(&dfy, &xj, f), m, &zero)
                })
                .collect();
            let rows: Vec<Vec<BaseElem>> = (0..m).map(|i| (0..m).map(|j| mult[j][i].clone()).collect()).collect();
            let z = linalg::solve(&rows, &fy).ok_or(Error::PrecisionExhausted)?;
            y = y.iter().zip(&z).map(|(a, b)| a.sub(b)).collect();
        }
        Ok(y)
    }

    /// `g(y) mod f` for polynomials with coefficients in `F`.
    fn compose(g: &[BaseElem], y: &[BaseElem], f: &[BaseElem]) -> Vec<BaseElem> {
        let mut acc: Vec<BaseElem> = Vec::new();
        for c in g.iter().rev() {
            acc = poly::add(&poly::mulmod(&acc, y, f), std::slice::from_ref(c));
        }
        acc
    }

    /// `K_0 = E(sqrt(eps_E * pi))` over `E = F(sqrt eps)`, with `eps_E` the
    /// least `u0 + u1 sqrt eps` (`u1 != 0`, residues lifted as integers) whose
    /// norm is a nonsquare.
    pub fn quartic_mixed(base: &BaseField) -> Result<Self> {
        let spec = base.local().ok_or_else(|| Error::UnsupportedCase("needs a local base field".into()))?.clone();
        let eps = BaseElem::Local(spec.epsilon()?);
        let res = spec.residue();
        let (u0, u1) = res
            .tuples(2)
            .filter(|t| !t[1].is_zero())
            .map(|t| (base.lift(&t[0]), base.lift(&t[1])))
            .find(|(a, b)| {
                let n = a.mul(a).sub(&eps.mul(b).mul(b));
                n.valuation() == Some(0) && !is_square_class_one(&n).unwrap_or(true)
            })
            .expect("nonsquare units exist in the unramified quadratic extension");
        let pi = BaseElem::Local(spec.uniformizer());
        let n = u0.mul(&u0).sub(&eps.mul(&u1).mul(&u1));
        let f = vec![
            n.mul(&pi).mul(&pi),
            base.zero(),
            base.from_i64(-2).mul(&u0).mul(&pi),
            base.zero(),
            base.one(),
        ];
        let y = match n.div(&eps)?.as_local().expect("local").nth_root(2)? {
            Some(r) => BaseElem::Local(r),
            None => unreachable!("N(eps_E)/eps is a square"),
        };
        // x^{-1} = (x^3 - 2 u0 pi x) / (-n pi^2)
        let inv_den = n.mul(&pi).mul(&pi).neg().inv()?;
        let xinv = vec![
            base.zero(),
            base.from_i64(-2).mul(&u0).mul(&pi).mul(&inv_den),
            base.zero(),
            inv_den.clone(),
        ];
        let num = vec![u0.mul(&pi).neg(), base.zero(), base.one()];
        let scale = y.div(&u1)?;
        let sigma_x: Vec<BaseElem> = poly::mulmod(&num, &xinv, &f).iter().map(|c| c.mul(&scale)).collect();
        Self::build(base.clone(), 4, ExtKind::QuarticMixed { eps, u0, u1 }, f, sigma_x)
    }

    pub fn base(&self) -> &BaseField {
        &self.0.base
    }
    pub fn degree(&self) -> usize {
        self.0.m
    }
    pub fn kind(&self) -> &ExtKind {
        &self.0.kind
    }
    pub fn modulus(&self) -> &[BaseElem] {
        &self.0.modulus
    }
    /// Descriptor identifying the field `K` up to `F`-isomorphism.
    pub fn field_key(&self) -> &str {
        &self.0.key
    }
    pub fn same_field(&self, other: &Self) -> bool {
        self.0.base == other.0.base && self.0.m == other.0.m && self.0.key == other.0.key
    }

    /// `(b, zeta)` when `K = F(beta)`, `beta^m = b`, `sigma(beta) = zeta beta`.
    pub fn kummer_data(&self) -> Option<(BaseElem, BaseElem)> {
        match &self.0.kind {
            ExtKind::QuadraticRoot { c } => Some((c.clone(), self.0.base.from_i64(-1))),
            ExtKind::Kummer { b, zeta } => Some((b.clone(), zeta.clone())),
            ExtKind::Unramified { kummer } => kummer.clone(),
            _ => None,
        }
    }

    /// `c` when the basis is `1, sqrt c`.
    pub fn quadratic_c(&self) -> Option<BaseElem> {
        match self.kummer_data() {
            Some((b, _)) if self.0.m == 2 => Some(b),
            _ => None,
        }
    }

    pub fn is_unramified(&self) -> bool {
        matches!(self.0.rule, NormRule::ValuationDivisible(_) | NormRule::Q2 { c: -3 })
    }

    pub fn elem(&self, coeffs: Vec<BaseElem>) -> Result<ExtElem> {
        if coeffs.len() != self.0.m {
            return Err(Error::ContextMismatch(format!("expected {} coordinates, got {}", self.0.m, coeffs.len())));
        }
        if coeffs.iter().any(|c| !self.0.base.owns(c)) {
            return Err(Error::SpecMismatch);
        }
        Ok(ExtElem { ext: self.clone(), coeffs })
    }

    pub fn from_base(&self, c: BaseElem) -> ExtElem {
        let mut v = vec![self.0.base.zero(); self.0.m];
        v[0] = c;
        ExtElem { ext: self.clone(), coeffs: v }
    }
    pub fn zero(&self) -> ExtElem {
        self.from_base(self.0.base.zero())
    }
    pub fn one(&self) -> ExtElem {
        self.from_base(self.0.base.one())
    }
    /// The basis element `x^j`.
    pub fn basis(&self, j: usize) -> ExtElem {
        let mut v = vec![self.0.base.zero(); self.0.m];
        v[j] = self.0.base.one();
        ExtElem { ext: self.clone(), coeffs: v }
    }

    pub fn sigma_apply(&self, k: i64, x: &ExtElem) -> ExtElem {
        let k = k.rem_euclid(self.0.m as i64) as usize;
        if k == 0 {
            return x.clone();
        }
        ExtElem { ext: self.clone(), coeffs: apply(&self.0.sigma[k], &x.coeffs) }
    }

    pub fn norm(&self, x: &ExtElem) -> Result<BaseElem> {
        let mut acc = x.clone();
        for k in 1..self.0.m {
            acc = acc.mul(&self.sigma_apply(k as i64, x));
        }
        acc.to_base().ok_or(Error::PrecisionExhausted)
    }

    /// Whether `x` lies in `N_{K/F}(K^x)`.
    pub fn is_norm(&self, x: &BaseElem) -> Result<bool> {
        if !self.0.base.owns(x) {
            return Err(Error::SpecMismatch);
        }
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        let v = x.valuation().expect("nonzero");
        match &self.0.rule {
            NormRule::All => Ok(true),
            NormRule::ValuationDivisible(m) => Ok(v.rem_euclid(*m as i64) == 0),
            NormRule::Tame { m, nb, k } => {
                let mi = *m as i64;
                let e = (0..mi).find(|e| (e * k - v).rem_euclid(mi) == 0).expect("k invertible mod m");
                let lead = x.leading_digit()?.mul(&nb.leading_digit()?.pow_u(e as u64).inv()?);
                Ok(lead.power_class(*m)?.is_nth_power)
            }
            NormRule::Q2 { c } => {
                let xc = x.as_local().expect("local").q2_square_class()?;
                Ok(hilbert_q2(xc, *c) == 1)
            }
            NormRule::ArtinSchreier { c } => Ok(as_symbol(c, x.as_local().expect("local"))? == 0),
            NormRule::Mixed4 { n } => {
                if v.rem_euclid(2) != 0 {
                    return Ok(false);
                }
                let lead = x.leading_digit()?.mul(&n.pow_u(v.rem_euclid(4) as u64 / 2).inv()?);
                Ok(lead.power_class(2)?.is_nth_power)
            }
            NormRule::Unsupported(why) => Err(Error::UnsupportedCase(why.clone())),
        }
    }

    /// Representatives of `F^x / N_{K/F}(K^x)`.
    pub fn norm_class_reps(&self) -> Result<Vec<BaseElem>> {
        let base = &self.0.base;
        let m = self.0.m as u64;
        let pi_pows = |n: u64| -> Vec<BaseElem> {
            let spec = base.local().expect("local");
            (0..n as i64).map(|i| BaseElem::Local(spec.uniformizer_pow(i))).collect()
        };
        let powers = |g: &BaseElem, n: u64| -> Vec<BaseElem> { (0..n).map(|i| g.pow(i)).collect() };
        match &self.0.rule {
            NormRule::All => Ok(vec![base.one()]),
            NormRule::ValuationDivisible(n) => Ok(pi_pows(*n)),
            NormRule::Mixed4 { .. } => Ok(pi_pows(4)),
            NormRule::Tame { m: 2, .. } => {
                if base.q() % 4 == 3 {
                    Ok(vec![base.one(), base.from_i64(-1)])
                } else {
                    Ok(vec![base.one(), BaseElem::Local(base.local().expect("local").epsilon()?)])
                }
            }
            NormRule::Tame { m, .. } => {
                let q = base.q();
                if is_prime_u64(*m) && (q - 1) % (m * m) != 0 {
                    let (_, zeta) = self.kummer_data().expect("tame rule comes from a Kummer presentation");
                    Ok(powers(&zeta, *m))
                } else {
                    let rho = base.teichmuller(&base.residue().generator())?;
                    Ok(powers(&rho, *m))
                }
            }
            NormRule::Q2 { c } => {
                let other = match c {
                    -3 => 2,
                    -6 | 2 => 3,
                    _ => -1,
                };
                Ok(vec![base.one(), base.from_i64(other)])
            }
            NormRule::ArtinSchreier { .. } => Ok(vec![base.one(), self.as_gamma()?]),
            NormRule::Unsupported(why) => {
                let _ = m;
                Err(Error::UnsupportedCase(why.clone()))
            }
        }
    }

    /// A non-norm for a ramified Artin-Schreier extension, by search over
    /// `t` and `1 + d t^k`.
    pub fn as_gamma(&self) -> Result<BaseElem> {
        let NormRule::ArtinSchreier { c } = &self.0.rule else {
            return Err(Error::UnsupportedCase("not a ramified Artin-Schreier extension".into()));
        };
        let spec = c.spec();
        let need = (-c.valuation_bound()).max(1) as usize + 2;
        let prec = spec.default_precision().max(need);
        let one = spec.from_i64_prec(1, prec);
        let t = spec.uniformizer().with_digits(prec);
        if as_symbol(c, &t)? == 1 {
            return Ok(BaseElem::Local(t));
        }
        for k in 1..=need as i64 {
            for d in spec.residue().elements().skip(1) {
                let cand = one.add(&spec.lift_prec(&d, prec).mul(&t.powi(k)?));
                if as_symbol(c, &cand)? == 1 {
                    return Ok(BaseElem::Local(cand));
                }
            }
        }
        Err(Error::NormTestInconclusive("no non-norm found among the search candidates".into()))
    }

    /// Degree of `F(a)/F`.
    pub fn subfield_degree(&self, a: &ExtElem) -> usize {
        let stab = (0..self.0.m).filter(|&k| self.sigma_apply(k as i64, a).same(a)).count();
        self.0.m / stab
    }

    /// Machine-readable descriptor.
    pub fn descriptor(&self) -> Value {
        let params = match &self.0.kind {
            ExtKind::FiniteExt => json!({ "modulus": self.render_modulus() }),
            ExtKind::QuadraticRoot { c } => json!({ "c": c.to_string() }),
            ExtKind::Kummer { b, zeta } => json!({ "b": b.to_string(), "zeta": zeta.to_string() }),
            ExtKind::ArtinSchreier { c } => json!({ "c": c.to_string() }),
            ExtKind::Unramified { kummer } => match kummer {
                Some((b, zeta)) => json!({ "b": b.to_string(), "zeta": zeta.to_string() }),
                None => json!({ "modulus": self.render_modulus() }),
            },
            ExtKind::QuarticMixed { eps, u0, u1 } => {
                json!({ "eps": eps.to_string(), "eps_E": [u0.to_string(), u1.to_string()] })
            }
        };
        json!({
            "base": self.0.base.to_string(),
            "m": self.0.m,
            "kind": self.0.kind.name(),
            "parameters": params,
            "field_key": self.0.key,
        })
    }

    fn render_modulus(&self) -> String {
        let terms: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
        format!("[{}]", terms.join(", "))
    }
}

fn is_prime_u64(n: u64) -> bool {
    ffield::is_prime(n)
}

/// Hilbert symbol `(a, b)_2` of square classes in `{±1, ±2, ±3, ±6}`.
pub fn hilbert_q2(a: i64, b: i64) -> i64 {
    let split = |x: i64| -> (i64, i64) {
        if x.abs() % 2 == 0 {
            (1, x / 2)
        } else {
            (0, x)
        }
    };
    let (alpha, u) = split(a);
    let (beta, w) = split(b);
    let eps = |u: i64| ((u - 1) / 2).rem_euclid(2);
    let omega = |u: i64| ((u * u - 1) / 8).rem_euclid(2);
    let e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All cyclic extensions of degree `m` in the supported cases.
pub fn enumerate_extensions(base: &BaseField, m: usize) -> Result<Vec<CyclicExtension>> {
    let spec = match base {
        BaseField::Finite(s) => return Ok(vec![CyclicExtension::finite(s, m)?]),
        BaseField::Local(s) => s.clone(),
    };
    let p = spec.p();
    let q = spec.q();
    let pi = BaseElem::Local(spec.uniformizer());
    match m {
        2 if base.is_q2() => [-3, -6, 2, -1, -2, 3, 6]
            .iter()
            .map(|&c| CyclicExtension::quadratic(base, base.from_i64(c)))
            .collect(),
        2 if p == 2 => Err(Error::UnsupportedCase(
            "characteristic-2 Laurent fields have infinitely many quadratic extensions; sample with t^(-2k-1)".into(),
        )),
        2 => {
            let eps = BaseElem::Local(spec.epsilon()?);
            [eps.clone(), pi.clone(), eps.mul(&pi)]
                .into_iter()
                .map(|c| CyclicExtension::quadratic(base, c))
                .collect()
        }
        4 if p != 2 => {
            let mut out = vec![CyclicExtension::unramified(base, 4)?, CyclicExtension::quartic_mixed(base)?];
            if q % 4 == 1 {
                let eps = BaseElem::Local(spec.epsilon()?);
                for i in 1..=4 {
                    out.push(CyclicExtension::kummer(base, 4, eps.pow(i).mul(&pi))?);
                }
            }
            Ok(out)
        }
        _ if ffield::is_prime(m as u64) && m as u64 != p && (q - 1) % m as u64 == 0 => {
            let mut out = vec![CyclicExtension::unramified(base, m)?];
            let res = spec.residue();
            let mut seen = Vec::new();
            for u in res.elements().skip(1) {
                let ci = u.power_class(m as u64)?.class_index;
                if !seen.contains(&ci) {
                    seen.push(ci);
                    out.push(CyclicExtension::kummer(base, m, base.lift(&u).mul(&pi))?);
                }
            }
            Ok(out)
        }
        _ => Err(Error::UnsupportedCase(format!("enumeration of degree-{m} extensions of {base}"))),
    }
}

/// The ramified Artin-Schreier extension `x^2 + x = t^(-2k-1)`.
pub fn artin_schreier_sample(base: &BaseField, k: u64) -> Result<CyclicExtension> {
    let spec = base.local().filter(|s| !s.is_padic() && s.p() == 2).ok_or_else(|| {
        Error::UnsupportedCase("sampling needs a characteristic-2 Laurent field".into())
    })?;
    let c = spec.uniformizer_pow(-(2 * k as i64) - 1);
    CyclicExtension::artin_schreier(base, BaseElem::Local(c))
}

/// Element of a cyclic extension, coordinates over the power basis.
#[derive(Clone)]
pub struct ExtElem {
    ext: CyclicExtension,
    coeffs: Vec<BaseElem>,
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", c.join(", "))
    }
}

impl ExtElem {
    pub fn ext(&self) -> &CyclicExtension {
        &self.ext
    }
    pub fn coeffs(&self) -> &[BaseElem] {
        &self.coeffs
    }
    pub fn add(&self, rhs: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect();
        ExtElem { ext: self.ext.clone(), coeffs }
    }
    pub fn sub(&self, rhs: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub(b)).collect();
        ExtElem { ext: self.ext.clone(), coeffs }
    }
    pub fn neg(&self) -> Self {
        ExtElem { ext: self.ext.clone(), coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
    pub fn scale(&self, c: &BaseElem) -> Self {
        ExtElem { ext: self.ext.clone(), coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }
    pub fn mul(&self, rhs: &Self) -> Self {
        let m = self.ext.0.m;
        let prod = poly::mulmod(&self.coeffs, &rhs.coeffs, &self.ext.0.modulus);
        let zero = self.ext.0.base.zero();
        ExtElem { ext: self.ext.clone(), coeffs: pad(prod, m, &zero) }
    }
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.ext.one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }
    pub fn inv(&self) -> Result<Self> {
        if self.coeffs.iter().all(|c| c.is_zero()) {
            let exact = self.coeffs.iter().all(|c| !matches!(c, BaseElem::Local(l) if !l.is_exact_zero()));
            return Err(if exact { Error::DivisionByZero } else { Error::PrecisionExhausted });
        }
        let mut adj = self.ext.one();
        for k in 1..self.ext.0.m {
            adj = adj.mul(&self.ext.sigma_apply(k as i64, self));
        }
        let n = self.mul(&adj).to_base().ok_or(Error::PrecisionExhausted)?;
        Ok(adj.scale(&n.inv()?))
    }
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }
    pub fn sigma(&self, k: i64) -> Self {
        self.ext.sigma_apply(k, self)
    }
    pub fn norm(&self) -> Result<BaseElem> {
        self.ext.norm(self)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    /// The base-field value when all non-constant coordinates vanish.
    pub fn to_base(&self) -> Option<BaseElem> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }
    pub fn in_base(&self) -> bool {
        self.to_base().is_some()
    }
    pub fn same(&self, rhs: &Self) -> bool {
        self.coeffs.iter().zip(&rhs.coeffs).all(|(a, b)| a.same(b))
    }
    pub fn canonical_cmp(&self, rhs: &Self) -> std::cmp::Ordering {
        cmp_slices(&self.coeffs, &rhs.coeffs)
    }
}
