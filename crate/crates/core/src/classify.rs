//! Isomorphism classes of proper cyclic algebras `(K/F, sigma^j, a)`.
//!
//! Two proper algebras over the same `K` are isomorphic iff
//! `a in tau(b) N(K^x)` for some `tau` in the Galois group. Canonical forms
//! are computed by one orbit engine: for every `tau`, scale `tau(a)` so that
//! a chosen leading coordinate becomes its norm-class representative, then
//! keep the least candidate. The leading coordinate is the first nonzero one
//! (Kummer and finite presentations) or the `x` coordinate (Artin-Schreier
//! and the alternative quaternion parametrization).

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};

use crate::base::{BaseElem, BaseField};
use crate::error::{Error, Result};
use crate::extension::{CyclicExtension, ExtElem, ExtKind};
use crate::ffield::is_prime;
use crate::localfield::LocalElem;
use crate::nacalg::CyclicAlgebra;
use crate::scalar::Scalar;

/// Largest number of candidates a finite exhaustive enumeration will touch.
pub const ENUMERATION_LIMIT: u64 = 1 << 20;

/// Indices of the nonzero Kummer coordinates of `a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionIndex(Vec<usize>);

impl PartitionIndex {
    pub fn indices(&self) -> &[usize] {
        &self.0
    }
    pub fn leading(&self) -> usize {
        self.0[0]
    }
}

impl fmt::Display for PartitionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", s.join(", "))
    }
}

/// Which quaternion parametrization to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuaternionMode {
    /// `r sqrt c` and `r + s sqrt c`.
    Theorem,
    /// `t + r sqrt c`, the `sqrt c` coordinate carries the class.
    Alternative,
}

/// Truncation of an infinite family of representatives: valuations
/// `vmin..=vmax`, unit parts known to `digits` digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub vmin: i64,
    pub vmax: i64,
    pub digits: usize,
}

impl Default for Window {
    fn default() -> Self {
        Window { vmin: 0, vmax: 0, digits: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalParam {
    pub ext: CyclicExtension,
    pub generator_power: usize,
    pub a: ExtElem,
    pub case_tag: String,
    pub pattern: String,
    /// Least relative precision among the coordinates (local bases only).
    pub precision: Option<usize>,
}

impl CanonicalParam {
    pub fn to_json(&self) -> Value {
        json!({
            "field": self.ext.descriptor(),
            "m": self.ext.degree(),
            "generator_power": self.generator_power,
            "a": self.a.to_string(),
            "case_tag": self.case_tag,
            "pattern": self.pattern,
            "precision": self.precision,
        })
    }
}

impl fmt::Display for CanonicalParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  [{}: {}]", self.a, self.case_tag, self.pattern)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Lead {
    FirstNonzero,
    Fixed(usize),
}

fn check_proper(ext: &CyclicExtension, a: &ExtElem) -> Result<()> {
    if a.ext() != ext {
        return Err(Error::AlgebraMismatch);
    }
    if a.in_base() {
        return Err(Error::NotProper);
    }
    Ok(())
}

/// Norm-class representatives, `[1]` when every element is a norm.
fn class_reps(ext: &CyclicExtension) -> Result<Vec<BaseElem>> {
    if ext.base().is_finite() {
        return Ok(vec![ext.base().one()]);
    }
    ext.norm_class_reps()
}

/// Position in `reps` of the class of `v`.
fn class_index(ext: &CyclicExtension, reps: &[BaseElem], v: &BaseElem) -> Result<usize> {
    if reps.len() == 1 {
        return Ok(0);
    }
    for (i, r) in reps.iter().enumerate() {
        if ext.is_norm(&v.div(r)?)? {
            return Ok(i);
        }
    }
    Err(Error::InsufficientPrecision(format!("no norm class found for {v}")))
}

/// The representative of `F^x / N` containing `v`.
pub fn norm_class_rep(ext: &CyclicExtension, v: &BaseElem) -> Result<BaseElem> {
    let reps = class_reps(ext)?;
    Ok(reps[class_index(ext, &reps, v)?].clone())
}

fn orbit_canonical(ext: &CyclicExtension, a: &ExtElem, lead: Lead) -> Result<ExtElem> {
    let reps = class_reps(ext)?;
    let mut best: Option<(usize, ExtElem)> = None;
    for s in 0..ext.degree() {
        let x = a.sigma(s as i64);
        let l = match lead {
            Lead::Fixed(l) => l,
            Lead::FirstNonzero => x.coeffs().iter().position(|c| !c.is_zero()).ok_or(Error::NotProper)?,
        };
        let v = &x.coeffs()[l];
        if v.is_zero() {
            return Err(Error::NotProper);
        }
        let idx = class_index(ext, &reps, v)?;
        let cand = x.scale(&reps[idx].div(v)?);
        let better = match &best {
            None => true,
            Some((bi, b)) => idx < *bi || (idx == *bi && cand.canonical_cmp(b) == Ordering::Less),
        };
        if better {
            best = Some((idx, cand));
        }
    }
    Ok(best.expect("degree is at least 2").1)
}

fn min_precision(a: &ExtElem) -> Option<usize> {
    a.coeffs().iter().filter(|c| !c.is_zero()).filter_map(|c| c.as_local().map(LocalElem::precision)).min()
}

/// `a in F` reading of each Kummer coordinate.
pub fn partition_index(ext: &CyclicExtension, a: &ExtElem) -> Result<PartitionIndex> {
    if ext.kummer_data().is_none() {
        return Err(Error::UnsupportedCase("partition index needs a Kummer basis".into()));
    }
    check_proper(ext, a)?;
    Ok(PartitionIndex(a.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect()))
}

/// Whether `(K/F, sigma^j, a)` and `(K/F, sigma^j, b)` are isomorphic.
/// The answer does not depend on `j`.
pub fn equivalent(ext: &CyclicExtension, a: &ExtElem, b: &ExtElem) -> Result<bool> {
    check_proper(ext, a)?;
    check_proper(ext, b)?;
    if let Some((_, zeta)) = ext.kummer_data() {
        let ia = partition_index(ext, a)?;
        if ia != partition_index(ext, b)? {
            return Ok(false);
        }
        // sigma^i acts diagonally: sigma^i(beta^k) = zeta^(ik) beta^k.
        let m = ext.degree();
        let zp: Vec<BaseElem> = (0..m as u64).map(|e| zeta.pow(e)).collect();
        let (ac, bc) = (a.coeffs(), b.coeffs());
        let lead = ia.leading();
        for i in 0..m {
            let twisted: Vec<BaseElem> = ia.indices().iter().map(|&k| bc[k].mul(&zp[(i * k) % m])).collect();
            // proportionality first, so the inversion is only paid on a match
            let proportional =
                ia.indices().iter().zip(&twisted).all(|(&k, t)| ac[k].mul(&twisted[0]).same(&ac[lead].mul(t)));
            if !proportional {
                continue;
            }
            let lambda = ac[lead].div(&twisted[0])?;
            if ext.is_norm(&lambda)? {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    for i in 0..ext.degree() {
        let q = a.div(&b.sigma(i as i64))?;
        if let Some(lambda) = q.to_base() {
            if !lambda.is_zero() && ext.is_norm(&lambda)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Isomorphism test for proper algebras over the same base.
pub fn isomorphic(a1: &CyclicAlgebra, a2: &CyclicAlgebra) -> Result<bool> {
    let (e1, e2) = (a1.ext(), a2.ext());
    if e1.base() != e2.base() {
        return Err(Error::SpecMismatch);
    }
    if !a1.is_proper() || !a2.is_proper() {
        return Err(Error::NotProper);
    }
    if !e1.same_field(e2) {
        return Ok(false);
    }
    if e1 != e2 {
        return Err(Error::UnsupportedCase("same field given by two different presentations".into()));
    }
    if a1.generator_power() != a2.generator_power() {
        return Ok(false);
    }
    equivalent(e1, a1.a(), a2.a())
}

/// Human-readable name of a case tag.
pub fn case_description(tag: &str) -> &'static str {
    match tag {
        "finite-orbit" => "finite base field, Galois orbit representatives",
        "T4.4-1" => "odd residue characteristic, unramified quadratic",
        "T4.4-2a" => "odd residue characteristic, ramified quadratic, q = 1 mod 4",
        "T4.4-2b" => "odd residue characteristic, ramified quadratic, q = 3 mod 4",
        "T4.5-a" => "Q_2, unramified quadratic",
        "T4.5-b" => "Q_2, ramified quadratic with -1 a norm",
        "T4.5-c" => "Q_2, ramified quadratic with -1 not a norm",
        "C4.3" => "quaternion, alternative parametrization",
        "T4.6" => "characteristic 2, Artin-Schreier quadratic",
        "T5.8-a" => "cubic, zeta a norm",
        "T5.8-ba" => "cubic, ramified, zeta not a norm, q != 1 mod 9",
        "T5.8-bb" => "cubic, ramified, q = 1 mod 9",
        "T5.6-zeta-in-N" => "prime degree, zeta a norm",
        "T5.6-zeta-not-in-N" => "prime degree, zeta not a norm",
        _ => "unknown case",
    }
}

fn zeta_is_norm(ext: &CyclicExtension) -> Result<bool> {
    let (_, zeta) = ext.kummer_data().ok_or_else(|| Error::UnsupportedCase("not a Kummer presentation".into()))?;
    ext.is_norm(&zeta)
}

fn case_tag(ext: &CyclicExtension, mode: QuaternionMode) -> Result<String> {
    let base = ext.base();
    let m = ext.degree();
    if base.is_finite() {
        return Ok("finite-orbit".into());
    }
    if let ExtKind::ArtinSchreier { .. } = ext.kind() {
        return Ok("T4.6".into());
    }
    if m == 2 {
        if mode == QuaternionMode::Alternative {
            return Ok("C4.3".into());
        }
        let c = ext.quadratic_c().expect("quadratic presentation");
        if base.is_q2() {
            let cls = c.as_local().expect("local").q2_square_class()?;
            return Ok(match cls {
                -3 => "T4.5-a",
                2 | -6 => "T4.5-b",
                _ => "T4.5-c",
            }
            .into());
        }
        return Ok(if ext.is_unramified() {
            "T4.4-1"
        } else if base.q() % 4 == 1 {
            "T4.4-2a"
        } else {
            "T4.4-2b"
        }
        .into());
    }
    let in_n = zeta_is_norm(ext)?;
    if m == 3 {
        return Ok(if ext.is_unramified() {
            "T5.8-a"
        } else if base.q() % 9 != 1 {
            "T5.8-ba"
        } else {
            "T5.8-bb"
        }
        .into());
    }
    Ok(if in_n { "T5.6-zeta-in-N" } else { "T5.6-zeta-not-in-N" }.into())
}

fn pattern(ext: &CyclicExtension, a: &ExtElem, mode: QuaternionMode) -> String {
    let m = ext.degree();
    if ext.base().is_finite() {
        return "orbit".into();
    }
    if let ExtKind::ArtinSchreier { .. } = ext.kind() {
        let r = if a.coeffs()[1].same(&ext.base().one()) { "" } else { "gamma*" };
        return match (a.coeffs()[0].is_zero(), r.is_empty()) {
            (true, _) => format!("{r}alpha"),
            (false, true) => "s+alpha".into(),
            (false, false) => "gamma*(s+alpha)".into(),
        };
    }
    let name = |i: usize| match (m, i) {
        (2, _) => "sqrt(c)".to_string(),
        (_, 1) => "b".to_string(),
        _ => format!("b^{i}"),
    };
    if mode == QuaternionMode::Alternative {
        return if a.coeffs()[0].is_zero() { "r*sqrt(c)".into() } else { "t+r*sqrt(c)".into() };
    }
    let idx: Vec<usize> = (0..m).filter(|&i| !a.coeffs()[i].is_zero()).collect();
    let lead_one = m > 2 && idx[0] > 0 && a.coeffs()[idx[0]].same(&ext.base().one()) && !zeta_is_norm(ext).unwrap_or(true);
    let mut terms = Vec::new();
    let tail = idx.len() - 1;
    for (k, &i) in idx.iter().enumerate() {
        let coef = if k == 0 {
            if lead_one { String::new() } else { "r".into() }
        } else if tail == 1 {
            "s".into()
        } else {
            format!("s{k}")
        };
        terms.push(match (i, coef.is_empty()) {
            (0, _) => coef,
            (_, true) => name(i),
            (_, false) => format!("{coef}*{}", name(i)),
        });
    }
    terms.join("+")
}

fn finish(ext: &CyclicExtension, j: usize, a: ExtElem, mode: QuaternionMode) -> Result<CanonicalParam> {
    Ok(CanonicalParam {
        case_tag: case_tag(ext, mode)?,
        pattern: pattern(ext, &a, mode),
        precision: min_precision(&a),
        ext: ext.clone(),
        generator_power: j,
        a,
    })
}

fn require_local_quadratic(ext: &CyclicExtension) -> Result<()> {
    if ext.degree() != 2 || ext.quadratic_c().is_none() {
        return Err(Error::UnsupportedCase("expected a quadratic extension F(sqrt c)".into()));
    }
    if ext.base().characteristic() == 2 {
        return Err(Error::UnsupportedCase("characteristic 2 uses the Artin-Schreier form".into()));
    }
    Ok(())
}

/// Canonical `a` for `F(sqrt c)`, characteristic not 2.
pub fn quaternion_canonical(ext: &CyclicExtension, a: &ExtElem, mode: QuaternionMode) -> Result<CanonicalParam> {
    require_local_quadratic(ext)?;
    check_proper(ext, a)?;
    let lead = match mode {
        QuaternionMode::Theorem => Lead::FirstNonzero,
        QuaternionMode::Alternative => Lead::Fixed(1),
    };
    finish(ext, 1, orbit_canonical(ext, a, lead)?, mode)
}

/// Canonical `a = s + alpha` or `gamma (s + alpha)` for an Artin-Schreier
/// extension. A supplied `gamma` must be a non-norm; it replaces the
/// searched representative.
pub fn char2_canonical(ext: &CyclicExtension, gamma: Option<&BaseElem>, a: &ExtElem) -> Result<CanonicalParam> {
    if !matches!(ext.kind(), ExtKind::ArtinSchreier { .. }) {
        return Err(Error::UnsupportedCase("expected an Artin-Schreier extension".into()));
    }
    check_proper(ext, a)?;
    let r = match gamma {
        None => norm_class_rep(ext, &a.coeffs()[1])?,
        Some(g) => {
            if ext.is_norm(g)? {
                return Err(Error::InvalidArgument(format!("{g} is a norm")));
            }
            if ext.is_norm(&a.coeffs()[1])? {
                ext.base().one()
            } else {
                g.clone()
            }
        }
    };
    // a ~ r (s + alpha) with s = a0 / a1, and s ~ s + 1 via sigma.
    let s = a.coeffs()[0].div(&a.coeffs()[1])?;
    let s1 = s.add(&ext.base().one());
    let s = if constant_digit(&s1)?.canonical_cmp(&constant_digit(&s)?) == Ordering::Less { s1 } else { s };
    finish(ext, 1, ext.elem(vec![s.mul(&r), r])?, QuaternionMode::Theorem)
}

/// Coefficient of `t^0`.
fn constant_digit(x: &BaseElem) -> Result<crate::ffield::FqElem> {
    let x = x.as_local().expect("Artin-Schreier extensions have local bases");
    let zero = x.spec().residue().zero();
    let Some(v) = x.valuation() else {
        return match x.abs_precision() {
            Some(k) if k <= 0 => Err(Error::InsufficientPrecision(format!("constant term of {x} is unknown"))),
            _ => Ok(zero),
        };
    };
    if v > 0 {
        return Ok(zero);
    }
    x.digits().get((-v) as usize).cloned().ok_or_else(|| Error::InsufficientPrecision(format!("constant term of {x} is unknown")))
}

fn require_prime_kummer(ext: &CyclicExtension) -> Result<()> {
    let m = ext.degree() as u64;
    if m < 3 || !is_prime(m) {
        return Err(Error::UnsupportedCase(format!("degree {m} is not an odd prime")));
    }
    if ext.kummer_data().is_none() {
        return Err(Error::UnsupportedCase("expected a Kummer presentation x^m - b".into()));
    }
    if ext.base().is_finite() {
        return Err(Error::UnsupportedCase("finite bases use the orbit canonical form".into()));
    }
    Ok(())
}

/// Canonical `a` for a Kummer extension of odd prime degree.
pub fn prime_canonical(ext: &CyclicExtension, j: usize, a: &ExtElem) -> Result<CanonicalParam> {
    require_prime_kummer(ext)?;
    check_proper(ext, a)?;
    finish(ext, j, orbit_canonical(ext, a, Lead::FirstNonzero)?, QuaternionMode::Theorem)
}

/// Canonical form of `(K/F, sigma^j, a)` in whichever case applies.
pub fn canonical(ext: &CyclicExtension, j: usize, a: &ExtElem) -> Result<CanonicalParam> {
    check_proper(ext, a)?;
    if ext.base().is_finite() {
        return finish(ext, j, orbit_canonical(ext, a, Lead::FirstNonzero)?, QuaternionMode::Theorem);
    }
    match ext.kind() {
        ExtKind::ArtinSchreier { .. } => char2_canonical(ext, None, a),
        _ if ext.degree() == 2 && ext.quadratic_c().is_some() => quaternion_canonical(ext, a, QuaternionMode::Theorem),
        _ => prime_canonical(ext, j, a),
    }
}

pub fn canonicalize(alg: &CyclicAlgebra) -> Result<CanonicalParam> {
    canonical(alg.ext(), alg.generator_power(), alg.a())
}

/// Window elements `pi^v w`, `vmin <= v <= vmax`, `w` a root of unity of
/// order dividing `q - 1`, each known to `digits` digits.
pub fn window_elements(base: &BaseField, w: &Window) -> Result<Vec<BaseElem>> {
    let spec = base.local().ok_or_else(|| Error::UnsupportedCase("windows apply to local fields".into()))?;
    if w.digits == 0 || w.digits > spec.max_digits() {
        return Err(Error::InvalidArgument(format!("window digits must lie in 1..={}", spec.max_digits())));
    }
    if w.vmin > w.vmax {
        return Ok(Vec::new());
    }
    let q = spec.q();
    let total = (q - 1).checked_mul((w.vmax - w.vmin + 1) as u64);
    if !total.is_some_and(|n| n <= ENUMERATION_LIMIT) {
        return Err(Error::TooLarge(format!("window holds more than {ENUMERATION_LIMIT} elements")));
    }
    let units: Vec<LocalElem> =
        spec.residue().elements().skip(1).map(|d| spec.teichmuller(&d, w.digits)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for v in w.vmin..=w.vmax {
        for u in &units {
            out.push(BaseElem::Local(u.shift(v)));
        }
    }
    Ok(out)
}

fn dedup_sorted(mut v: Vec<CanonicalParam>) -> Vec<CanonicalParam> {
    v.sort_by(|x, y| x.a.canonical_cmp(&y.a));
    v.dedup_by(|x, y| x.a.same(&y.a));
    v
}

/// Cartesian power `set^k`.
fn tuples(set: &[BaseElem], k: usize) -> Vec<Vec<BaseElem>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                set.iter().map(move |x| {
                    let mut t = t.clone();
                    t.push(x.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// Kummer-basis candidates `c beta^i0 + sum s_j beta^ij` over all
/// partition indices, `c` a class representative, `s_j` in `set`.
fn kummer_candidates(ext: &CyclicExtension, set: &[BaseElem]) -> Result<Vec<ExtElem>> {
    let m = ext.degree();
    let base = ext.base();
    let reps = class_reps(ext)?;
    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        if mask == 1 {
            continue;
        }
        let idx: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        for c in &reps {
            for tail in tuples(set, idx.len() - 1) {
                let mut coeffs = vec![base.zero(); m];
                coeffs[idx[0]] = c.clone();
                for (&i, s) in idx[1..].iter().zip(tail) {
                    coeffs[i] = s;
                }
                out.push(ext.elem(coeffs)?);
            }
        }
    }
    Ok(out)
}

/// Representatives of the quaternion classes with `s` restricted to the window.
pub fn quaternion_enumerate(ext: &CyclicExtension, w: &Window, mode: QuaternionMode) -> Result<Vec<CanonicalParam>> {
    require_local_quadratic(ext)?;
    let set = window_elements(ext.base(), w)?;
    let mut out = Vec::new();
    for a in kummer_candidates(ext, &set)? {
        out.push(quaternion_canonical(ext, &a, mode)?);
    }
    Ok(dedup_sorted(out))
}

/// Representatives for a Kummer extension of odd prime degree.
pub fn prime_enumerate(ext: &CyclicExtension, j: usize, w: &Window) -> Result<Vec<CanonicalParam>> {
    require_prime_kummer(ext)?;
    let set = window_elements(ext.base(), w)?;
    let mut out = Vec::new();
    for a in kummer_candidates(ext, &set)? {
        out.push(prime_canonical(ext, j, &a)?);
    }
    Ok(dedup_sorted(out))
}

/// Representatives `s + alpha`, `gamma (s + alpha)` with `s` in the window or zero.
pub fn char2_enumerate(ext: &CyclicExtension, w: &Window) -> Result<Vec<CanonicalParam>> {
    let mut set = vec![ext.base().zero()];
    set.extend(window_elements(ext.base(), w)?);
    let mut out = Vec::new();
    for r in class_reps(ext)? {
        for s in &set {
            out.push(char2_canonical(ext, None, &ext.elem(vec![s.clone(), r.clone()])?)?);
        }
    }
    Ok(dedup_sorted(out))
}

/// Every class over a finite base, by canonicalizing all of `K \ F`.
pub fn finite_enumerate(ext: &CyclicExtension, j: usize) -> Result<Vec<CanonicalParam>> {
    let BaseField::Finite(spec) = ext.base() else {
        return Err(Error::UnsupportedCase("exhaustive enumeration needs a finite base".into()));
    };
    let m = ext.degree();
    let size = spec.order().checked_pow(m as u32);
    if !size.is_some_and(|n| n <= ENUMERATION_LIMIT) {
        return Err(Error::TooLarge(format!("|K| = {}^{m}", spec.order())));
    }
    let mut out = Vec::new();
    for t in spec.tuples(m) {
        let a = ext.elem(t.into_iter().map(BaseElem::Fq).collect())?;
        if !a.in_base() {
            out.push(finish(ext, j, orbit_canonical(ext, &a, Lead::FirstNonzero)?, QuaternionMode::Theorem)?);
        }
    }
    Ok(dedup_sorted(out))
}

/// Class representatives for `(K/F, sigma^j, -)`, windowed when infinite.
pub fn enumerate(ext: &CyclicExtension, j: usize, w: &Window) -> Result<Vec<CanonicalParam>> {
    if ext.base().is_finite() {
        return finite_enumerate(ext, j);
    }
    match ext.kind() {
        ExtKind::ArtinSchreier { .. } => char2_enumerate(ext, w),
        _ if ext.degree() == 2 && ext.quadratic_c().is_some() => quaternion_enumerate(ext, w, QuaternionMode::Theorem),
        _ => prime_enumerate(ext, j, w),
    }
}

/// One type of degree-four algebra over a local field.
#[derive(Clone, Debug)]
pub struct Degree4Type {
    pub label: String,
    pub extension: CyclicExtension,
    /// The quadratic subfield `E = Fix(sigma^2)`.
    pub intermediate: CyclicExtension,
    pub generator_power: usize,
    /// The subalgebra generated by `K` and `t^2`.
    pub b_descriptor: String,
}

impl Degree4Type {
    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "extension": self.extension.descriptor(),
            "intermediate": self.intermediate.descriptor(),
            "generator_power": self.generator_power,
            "B": self.b_descriptor,
        })
    }
}

/// Degree-four types over a local field of odd residual characteristic:
/// every cyclic quartic `K` paired with both generators `sigma`, `sigma^3`.
pub fn degree4_types(base: &BaseField) -> Result<Vec<Degree4Type>> {
    let spec = base.local().ok_or_else(|| Error::UnsupportedCase("degree-four types need a local field".into()))?;
    if spec.p() == 2 {
        return Err(Error::UnsupportedCase("residual characteristic 2".into()));
    }
    let eps = BaseElem::Local(spec.epsilon()?);
    let pi = BaseElem::Local(spec.uniformizer());
    let l2 = CyclicExtension::quadratic(base, eps.clone())?;
    let mut fields = vec![
        ("L4".to_string(), CyclicExtension::unramified(base, 4)?, l2.clone()),
        ("K0".to_string(), CyclicExtension::quartic_mixed(base)?, l2),
    ];
    if spec.q() % 4 == 1 {
        let e_even = CyclicExtension::quadratic(base, pi.clone())?;
        let e_odd = CyclicExtension::quadratic(base, eps.mul(&pi))?;
        for i in 1..=4u64 {
            let k = CyclicExtension::kummer(base, 4, eps.pow(i).mul(&pi))?;
            let e = if i % 2 == 0 { e_even.clone() } else { e_odd.clone() };
            fields.push((format!("K{i}"), k, e));
        }
    }
    let mut out = Vec::new();
    for (label, k, e) in fields {
        for j in [1, 3] {
            out.push(Degree4Type {
                b_descriptor: format!("({label}/E, sigma^{}, a), E = {}", (2 * j) % 4, e),
                label: label.clone(),
                extension: k.clone(),
                intermediate: e.clone(),
                generator_power: j,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localfield::LocalFieldSpec;

    fn qp(p: u64) -> BaseField {
        BaseField::Local(LocalFieldSpec::padic(p, 12).unwrap())
    }

    fn elem(ext: &CyclicExtension, c: &[i64]) -> ExtElem {
        let f = ext.base();
        ext.elem(c.iter().map(|&x| f.from_i64(x)).collect()).unwrap()
    }

    #[test]
    fn quaternion_examples() {
        let f = qp(5);
        let k = CyclicExtension::quadratic(&f, f.from_i64(2)).unwrap();
        let c = quaternion_canonical(&k, &elem(&k, &[0, 3]), QuaternionMode::Theorem).unwrap();
        assert!(c.a.same(&elem(&k, &[0, 1])));
        assert_eq!(c.case_tag, "T4.4-1");
        assert_eq!(c.pattern, "r*sqrt(c)");
        let c = quaternion_canonical(&k, &elem(&k, &[0, 10]), QuaternionMode::Theorem).unwrap();
        assert!(c.a.same(&elem(&k, &[0, 5])));
        assert!(!equivalent(&k, &elem(&k, &[0, 1]), &elem(&k, &[0, 5])).unwrap());

        let f2 = qp(2);
        let k2 = CyclicExtension::quadratic(&f2, f2.from_i64(-1)).unwrap();
        let c = quaternion_canonical(&k2, &elem(&k2, &[0, 2]), QuaternionMode::Theorem).unwrap();
        assert!(c.a.same(&elem(&k2, &[0, 1])));
        assert_eq!(c.case_tag, "T4.5-c");
    }

    #[test]
    fn quaternion_family_reduces_sign() {
        let f = qp(3);
        let k = CyclicExtension::quadratic(&f, f.from_i64(3)).unwrap();
        let a = elem(&k, &[1, 2]);
        let b = elem(&k, &[1, -2]);
        let ca = quaternion_canonical(&k, &a, QuaternionMode::Theorem).unwrap();
        let cb = quaternion_canonical(&k, &b, QuaternionMode::Theorem).unwrap();
        assert!(ca.a.same(&cb.a));
        assert!(equivalent(&k, &a, &b).unwrap());
        // -1 is not a norm here, so 1 + s sqrt 3 and -1 + s sqrt 3 stay apart.
        let c = elem(&k, &[-1, 2]);
        assert!(!equivalent(&k, &a, &c).unwrap());
        assert_eq!(ca.case_tag, "T4.4-2b");
    }

    #[test]
    fn alternative_mode_is_sound() {
        let f = qp(3);
        let k = CyclicExtension::quadratic(&f, f.from_i64(3)).unwrap();
        for a in [elem(&k, &[1, 2]), elem(&k, &[2, 5]), elem(&k, &[-4, 3]), elem(&k, &[0, 7])] {
            let c = quaternion_canonical(&k, &a, QuaternionMode::Alternative).unwrap();
            assert!(equivalent(&k, &a, &c.a).unwrap(), "{a} vs {}", c.a);
            let cc = quaternion_canonical(&k, &c.a, QuaternionMode::Alternative).unwrap();
            assert!(cc.a.same(&c.a));
        }
    }

    #[test]
    fn partition_examples() {
        let f = qp(7);
        let k = CyclicExtension::kummer(&f, 3, f.from_i64(7)).unwrap();
        assert_eq!(partition_index(&k, &elem(&k, &[0, 1, 1])).unwrap().indices(), &[1, 2]);
        assert_eq!(partition_index(&k, &elem(&k, &[1, 1, 0])).unwrap().indices(), &[0, 1]);
        assert_eq!(partition_index(&k, &elem(&k, &[3, 0, 0])), Err(Error::NotProper));
    }

    #[test]
    fn ramified_cubic_leading_one() {
        let f = qp(7);
        let k = CyclicExtension::kummer(&f, 3, f.from_i64(7)).unwrap();
        let a = elem(&k, &[0, 5, 3]);
        let c = prime_canonical(&k, 1, &a).unwrap();
        assert!(c.a.coeffs()[1].same(&f.one()));
        assert!(equivalent(&k, &a, &c.a).unwrap());
        assert_eq!(c.case_tag, "T5.8-ba");
        assert_eq!(c.pattern, "b+s*b^2");
        let b2 = elem(&k, &[0, 0, 1]);
        assert!(prime_canonical(&k, 1, &b2).unwrap().a.same(&b2));
    }

    #[test]
    fn unramified_cubic_keeps_pi() {
        let f = qp(7);
        let k = CyclicExtension::unramified(&f, 3).unwrap();
        let a = elem(&k, &[7, 1, 0]);
        let c = prime_canonical(&k, 1, &a).unwrap();
        assert!(c.a.coeffs()[0].same(&f.from_i64(7)));
        assert!(equivalent(&k, &a, &c.a).unwrap());
        assert_eq!(c.case_tag, "T5.8-a");
    }

    #[test]
    fn cubic_enumeration_counts() {
        let f = qp(7);
        let w = Window::default();
        let t = 6usize;
        let unram = CyclicExtension::unramified(&f, 3).unwrap();
        assert_eq!(prime_enumerate(&unram, 1, &w).unwrap().len(), 3 * (2 + t + t * t / 3));
        let ram = CyclicExtension::kummer(&f, 3, f.from_i64(7)).unwrap();
        assert_eq!(prime_enumerate(&ram, 1, &w).unwrap().len(), 2 * t + t * t + 2 + t);
        let empty = Window { vmin: 1, vmax: 0, digits: 1 };
        assert_eq!(prime_enumerate(&unram, 1, &empty).unwrap().len(), 6);
        assert_eq!(prime_enumerate(&ram, 1, &empty).unwrap().len(), 2);
    }

    #[test]
    fn quaternion_enumeration_counts() {
        let w = Window::default();
        let f = qp(5);
        let k = CyclicExtension::quadratic(&f, f.from_i64(2)).unwrap();
        assert_eq!(quaternion_enumerate(&k, &w, QuaternionMode::Theorem).unwrap().len(), 2 + 2 * 2);
        let f3 = qp(3);
        let k3 = CyclicExtension::quadratic(&f3, f3.from_i64(3)).unwrap();
        assert_eq!(quaternion_enumerate(&k3, &w, QuaternionMode::Theorem).unwrap().len(), 1 + 2);
    }

    #[test]
    fn char2_examples() {
        let base = BaseField::Local(LocalFieldSpec::laurent(crate::ffield::FqSpec::prime(2).unwrap(), 12).unwrap());
        let k = crate::extension::artin_schreier_sample(&base, 1).unwrap();
        let alpha = k.basis(1);
        assert!(char2_canonical(&k, None, &alpha).unwrap().a.same(&alpha));
        let a = alpha.add(&k.one());
        assert!(char2_canonical(&k, None, &a).unwrap().a.same(&alpha));
        let t = BaseElem::Local(base.local().unwrap().uniformizer());
        let a = k.from_base(t).add(&alpha);
        let c = char2_canonical(&k, None, &a).unwrap();
        assert!(c.a.same(&a));
        assert_eq!(c.case_tag, "T4.6");
    }

    #[test]
    fn finite_classes() {
        let f3 = crate::ffield::FqSpec::prime(3).unwrap();
        let k = CyclicExtension::finite(&f3, 2).unwrap();
        assert_eq!(finite_enumerate(&k, 1).unwrap().len(), 2);
        let x = k.basis(1);
        assert!(equivalent(&k, &x, &x.scale(&k.base().from_i64(2))).unwrap());
    }

    #[test]
    fn degree4_type_counts() {
        assert_eq!(degree4_types(&qp(3)).unwrap().len(), 4);
        let t5 = degree4_types(&qp(5)).unwrap();
        assert_eq!(t5.len(), 12);
        assert!(t5[0].intermediate.quadratic_c().unwrap().same(&qp(5).from_i64(2)));
    }
}
