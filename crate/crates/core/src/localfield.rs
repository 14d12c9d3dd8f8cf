//! Truncated arithmetic in `Q_p` and `F_q((t))`.
//!
//! A nonzero element is `pi^v * u` with `u` a unit known to `N` digits.
//! p-adic units are stored as an integer modulo `p^N`, Laurent units as a
//! vector of residue-field digits. Zero is either exact or known only
//! modulo `pi^k`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffield::{self, FqElem, FqSpec};
use crate::poly;
use crate::scalar::Scalar;

/// Bit budget for `p^N` in the integer representation of p-adic units.
const INT_BITS: u32 = 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalKind {
    Padic(u64),
    Laurent,
}

struct LocalInner {
    kind: LocalKind,
    residue: FqSpec,
    default_precision: usize,
}

/// Handle to `Q_p` or `F_q((t))`.
#[derive(Clone)]
pub struct LocalFieldSpec(Arc<LocalInner>);

impl PartialEq for LocalFieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.kind == other.0.kind && self.0.residue == other.0.residue)
    }
}
impl Eq for LocalFieldSpec {}

impl fmt::Debug for LocalFieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LocalFieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.kind {
            LocalKind::Padic(p) => write!(f, "Qp:{p}"),
            LocalKind::Laurent => write!(f, "Laurent:{}", self.q()),
        }
    }
}

/// Largest digit count the integer representation supports for prime `p`.
pub fn max_padic_digits(p: u64) -> usize {
    let mut n = 0;
    let mut acc: u64 = 1;
    while let Some(next) = acc.checked_mul(p) {
        if next >= 1 << INT_BITS {
            break;
        }
        acc = next;
        n += 1;
    }
    n
}

impl LocalFieldSpec {
    pub fn padic(p: u64, default_precision: usize) -> Result<Self> {
        let residue = FqSpec::prime(p)?;
        if default_precision < 3 {
            return Err(Error::InvalidArgument("precision must be at least 3".into()));
        }
        if default_precision > max_padic_digits(p) {
            return Err(Error::InvalidArgument(format!(
                "precision {default_precision} exceeds the supported {} digits for p = {p}",
                max_padic_digits(p)
            )));
        }
        Ok(LocalFieldSpec(Arc::new(LocalInner {
            kind: LocalKind::Padic(p),
            residue,
            default_precision,
        })))
    }

    pub fn laurent(residue: FqSpec, default_precision: usize) -> Result<Self> {
        if default_precision < 3 {
            return Err(Error::InvalidArgument("precision must be at least 3".into()));
        }
        Ok(LocalFieldSpec(Arc::new(LocalInner { kind: LocalKind::Laurent, residue, default_precision })))
    }

    pub fn kind(&self) -> &LocalKind {
        &self.0.kind
    }
    pub fn is_padic(&self) -> bool {
        matches!(self.0.kind, LocalKind::Padic(_))
    }
    pub fn residue(&self) -> &FqSpec {
        &self.0.residue
    }
    /// Residue characteristic.
    pub fn p(&self) -> u64 {
        self.0.residue.p()
    }
    /// Residue field order.
    pub fn q(&self) -> u64 {
        self.0.residue.order()
    }
    pub fn default_precision(&self) -> usize {
        self.0.default_precision
    }
    /// Same field with another default precision.
    pub fn with_precision(&self, prec: usize) -> Result<Self> {
        match self.0.kind {
            LocalKind::Padic(p) => Self::padic(p, prec),
            LocalKind::Laurent => Self::laurent(self.0.residue.clone(), prec),
        }
    }
    /// Upper bound on relative precision of any element.
    pub fn max_digits(&self) -> usize {
        match self.0.kind {
            LocalKind::Padic(p) => max_padic_digits(p),
            LocalKind::Laurent => usize::MAX / 4,
        }
    }

    pub fn zero(&self) -> LocalElem {
        LocalElem { spec: self.clone(), repr: Repr::Zero(None) }
    }
    /// Zero known modulo `pi^abs`.
    pub fn inexact_zero(&self, abs: i64) -> LocalElem {
        LocalElem { spec: self.clone(), repr: Repr::Zero(Some(abs)) }
    }
    pub fn one(&self) -> LocalElem {
        self.from_i64(1)
    }
    pub fn uniformizer(&self) -> LocalElem {
        let n = self.default_precision();
        self.make(1, self.unit_one(n))
    }
    /// `pi^v` at default precision.
    pub fn uniformizer_pow(&self, v: i64) -> LocalElem {
        self.make(v, self.unit_one(self.default_precision()))
    }

    fn unit_one(&self, n: usize) -> Unit {
        match self.0.kind {
            LocalKind::Padic(_) => Unit::Int { value: 1, n: n as u32 },
            LocalKind::Laurent => {
                let mut d = vec![self.0.residue.zero(); n];
                d[0] = self.0.residue.one();
                Unit::Ser(d)
            }
        }
    }

    fn make(&self, val: i64, unit: Unit) -> LocalElem {
        LocalElem { spec: self.clone(), repr: Repr::Nz { val, unit } }
    }

    /// An integer at the default precision.
    pub fn from_i64(&self, c: i64) -> LocalElem {
        self.from_i64_prec(c, self.default_precision())
    }

    pub fn from_i64_prec(&self, c: i64, n: usize) -> LocalElem {
        if c == 0 {
            return self.zero();
        }
        match self.0.kind {
            LocalKind::Padic(p) => {
                let n = n.min(self.max_digits());
                let mut v = 0;
                let mut a = c as i128;
                while a % p as i128 == 0 {
                    a /= p as i128;
                    v += 1;
                }
                let m = pow_u128(p, n);
                let value = a.rem_euclid(m as i128) as u64;
                self.make(v, Unit::Int { value, n: n as u32 })
            }
            LocalKind::Laurent => {
                let d = self.0.residue.from_i64(c);
                if d.is_zero() {
                    return self.zero();
                }
                self.constant(&d, n)
            }
        }
    }

    /// A residue-field element lifted to a unit. p-adic residues lift to the
    /// least nonnegative integer, Laurent residues to constants.
    pub fn lift(&self, d: &FqElem) -> LocalElem {
        self.lift_prec(d, self.default_precision())
    }

    pub fn lift_prec(&self, d: &FqElem, n: usize) -> LocalElem {
        match self.0.kind {
            LocalKind::Padic(_) => self.from_i64_prec(d.coeffs()[0] as i64, n),
            LocalKind::Laurent => {
                if d.is_zero() {
                    self.zero()
                } else {
                    self.constant(d, n)
                }
            }
        }
    }

    fn constant(&self, d: &FqElem, n: usize) -> LocalElem {
        let mut digits = vec![self.0.residue.zero(); n];
        digits[0] = d.clone();
        self.make(0, Unit::Ser(digits))
    }

    /// Element `pi^val * sum digits[i] pi^i` known to `digits.len()` digits.
    /// Leading zero digits are absorbed into the valuation.
    pub fn from_digits(&self, val: i64, digits: &[FqElem]) -> Result<LocalElem> {
        if digits.is_empty() {
            return Err(Error::InvalidArgument("at least one digit required".into()));
        }
        if digits.iter().any(|d| d.spec() != &self.0.residue) {
            return Err(Error::SpecMismatch);
        }
        if digits.len() > self.max_digits() {
            return Err(Error::InvalidArgument("too many digits".into()));
        }
        let unit = match self.0.kind {
            LocalKind::Padic(p) => {
                let value = digits.iter().rev().fold(0u64, |acc, d| acc * p + d.coeffs()[0]);
                Unit::Int { value, n: digits.len() as u32 }
            }
            LocalKind::Laurent => Unit::Ser(digits.to_vec()),
        };
        Ok(normalize(self, val, unit))
    }

    /// Teichmuller lift of a nonzero residue, known to `n` digits.
    pub fn teichmuller(&self, d: &FqElem, n: usize) -> Result<LocalElem> {
        if d.is_zero() {
            return Err(Error::ZeroInput);
        }
        if d.spec() != &self.0.residue {
            return Err(Error::SpecMismatch);
        }
        match self.0.kind {
            LocalKind::Laurent => Ok(self.constant(d, n)),
            LocalKind::Padic(_) => {
                let q = self.q() as usize;
                let mut f = vec![self.zero(); q - 1];
                f[0] = self.from_i64(-1);
                f.push(self.one());
                hensel_lift(&f, &self.lift(d), n)
            }
        }
    }

    /// The fixed nonsquare unit: least quadratic nonresidue of the residue
    /// field, lifted as an integer (p-adic) or constant (Laurent).
    pub fn epsilon(&self) -> Result<LocalElem> {
        if self.p() == 2 {
            return Err(Error::ResidualCharTwo);
        }
        Ok(self.lift(&ffield::nonresidue(&self.0.residue, 2)?))
    }
}

fn pow_u128(p: u64, n: usize) -> u64 {
    (p as u128).pow(n as u32) as u64
}

#[derive(Clone, Debug)]
enum Unit {
    Int { value: u64, n: u32 },
    Ser(Vec<FqElem>),
}

impl Unit {
    fn len(&self) -> usize {
        match self {
            Unit::Int { n, .. } => *n as usize,
            Unit::Ser(d) => d.len(),
        }
    }
}

#[derive(Clone, Debug)]
enum Repr {
    /// Exact zero (`None`) or zero modulo `pi^k`.
    Zero(Option<i64>),
    Nz { val: i64, unit: Unit },
}

/// Element of a local field with explicit precision.
#[derive(Clone)]
pub struct LocalElem {
    spec: LocalFieldSpec,
    repr: Repr,
}

/// Strip leading zero digits of `unit`, moving them into the valuation.
fn normalize(spec: &LocalFieldSpec, val: i64, unit: Unit) -> LocalElem {
    match unit {
        Unit::Int { mut value, mut n } => {
            let p = spec.p();
            if value == 0 {
                return spec.inexact_zero(val + n as i64);
            }
            let mut v = val;
            while value % p == 0 {
                value /= p;
                n -= 1;
                v += 1;
            }
            spec.make(v, Unit::Int { value, n })
        }
        Unit::Ser(d) => match d.iter().position(|c| !c.is_zero()) {
            None => spec.inexact_zero(val + d.len() as i64),
            Some(k) => spec.make(val + k as i64, Unit::Ser(d[k..].to_vec())),
        },
    }
}

/// Unit digits shifted up by `shift` places, truncated to `n` digits.
fn shifted(spec: &LocalFieldSpec, unit: &Unit, shift: usize, n: usize) -> Unit {
    match unit {
        Unit::Int { value, .. } => {
            let p = spec.p();
            if shift >= n {
                return Unit::Int { value: 0, n: n as u32 };
            }
            let keep = value % pow_u128(p, n - shift);
            Unit::Int { value: keep * pow_u128(p, shift), n: n as u32 }
        }
        Unit::Ser(d) => {
            let zero = spec.residue().zero();
            let mut out = vec![zero; n];
            for (i, c) in d.iter().enumerate() {
                if i + shift < n {
                    out[i + shift] = c.clone();
                }
            }
            Unit::Ser(out)
        }
    }
}

fn series_mul(a: &[FqElem], b: &[FqElem], n: usize) -> Vec<FqElem> {
    let zero = a[0].zero_like();
    let mut out = vec![zero; n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(m as i128) as u64
}

/// `(teich, one_unit, valuation)` with `x = teich * one_unit * pi^valuation`.
#[derive(Debug, Clone)]
pub struct UnitDecomposition {
    pub teich: LocalElem,
    pub one_unit: LocalElem,
    pub valuation: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SquareClass {
    One,
    Eps,
    Pi,
    EpsPi,
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquareClass::One => "1",
            SquareClass::Eps => "eps",
            SquareClass::Pi => "pi",
            SquareClass::EpsPi => "eps*pi",
        })
    }
}

/// Result of [`LocalElem::mth_unit_class`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MthClass {
    /// Class of the leading digit in the residue field modulo `m`-th powers.
    pub class_index: u64,
    /// `v(x) mod m`.
    pub valuation_residue: u64,
    pub is_mth_power: bool,
}

impl LocalElem {
    pub fn spec(&self) -> &LocalFieldSpec {
        &self.spec
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero(None))
    }

    /// Valuation of a nonzero element.
    pub fn valuation(&self) -> Option<i64> {
        match &self.repr {
            Repr::Nz { val, .. } => Some(*val),
            Repr::Zero(_) => None,
        }
    }

    /// Lower bound on the valuation (`i64::MAX` for exact zero).
    pub fn valuation_bound(&self) -> i64 {
        match &self.repr {
            Repr::Nz { val, .. } => *val,
            Repr::Zero(Some(k)) => *k,
            Repr::Zero(None) => i64::MAX,
        }
    }

    /// Number of known digits (0 for zero).
    pub fn precision(&self) -> usize {
        match &self.repr {
            Repr::Nz { unit, .. } => unit.len(),
            Repr::Zero(_) => 0,
        }
    }

    /// The element is known modulo `pi^abs_precision` (`None` if exact zero).
    pub fn abs_precision(&self) -> Option<i64> {
        match &self.repr {
            Repr::Nz { val, unit } => Some(val + unit.len() as i64),
            Repr::Zero(k) => *k,
        }
    }

    /// Known digits of the unit part, leading digit first.
    pub fn digits(&self) -> Vec<FqElem> {
        match &self.repr {
            Repr::Zero(_) => Vec::new(),
            Repr::Nz { unit: Unit::Ser(d), .. } => d.clone(),
            Repr::Nz { unit: Unit::Int { value, n }, .. } => {
                let res = self.spec.residue();
                let p = self.spec.p();
                let mut v = *value;
                (0..*n)
                    .map(|_| {
                        let d = res.from_u64(v % p);
                        v /= p;
                        d
                    })
                    .collect()
            }
        }
    }

    /// Leading digit of a nonzero element.
    pub fn leading_digit(&self) -> Result<FqElem> {
        self.digits().into_iter().next().ok_or(Error::ZeroInput)
    }

    /// Unit part as an integer modulo `p^N` (p-adic only).
    pub fn unit_int(&self) -> Option<(u64, usize)> {
        match &self.repr {
            Repr::Nz { unit: Unit::Int { value, n }, .. } => Some((*value, *n as usize)),
            _ => None,
        }
    }

    /// `self * pi^-v(self)`.
    pub fn unit_part(&self) -> Result<LocalElem> {
        match &self.repr {
            Repr::Nz { unit, .. } => Ok(self.spec.make(0, unit.clone())),
            Repr::Zero(_) => Err(Error::ZeroInput),
        }
    }

    /// Multiply by `pi^k`.
    pub fn shift(&self, k: i64) -> LocalElem {
        match &self.repr {
            Repr::Nz { val, unit } => self.spec.make(val + k, unit.clone()),
            Repr::Zero(Some(a)) => self.spec.inexact_zero(a + k),
            Repr::Zero(None) => self.clone(),
        }
    }

    /// Truncate (or zero-pad) to `n` relative digits. Padding treats the
    /// unknown digits as zero and is only meaningful for exact inputs.
    pub fn with_digits(&self, n: usize) -> LocalElem {
        let n = n.clamp(1, self.spec.max_digits());
        match &self.repr {
            Repr::Nz { val, unit } => {
                let u = shifted(&self.spec, unit, 0, n.min(unit.len()));
                let u = match (u, n > unit.len()) {
                    (Unit::Int { value, .. }, true) => Unit::Int { value, n: n as u32 },
                    (Unit::Ser(mut d), true) => {
                        d.resize(n, self.spec.residue().zero());
                        Unit::Ser(d)
                    }
                    (u, false) => u,
                };
                self.spec.make(*val, u)
            }
            Repr::Zero(_) => self.clone(),
        }
    }

    /// Truncate or pad so that the element is known modulo `pi^abs`.
    pub fn with_abs_precision(&self, abs: i64) -> LocalElem {
        match &self.repr {
            Repr::Nz { val, .. } => {
                if abs <= *val {
                    self.spec.inexact_zero(abs)
                } else {
                    self.with_digits((abs - val) as usize)
                }
            }
            Repr::Zero(Some(_)) => self.spec.inexact_zero(abs),
            Repr::Zero(None) => self.clone(),
        }
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
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Scalar::div(self, rhs)
    }

    /// Integer power, negative exponents allowed.
    pub fn powi(&self, e: i64) -> Result<LocalElem> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(Scalar::pow(&base, e.unsigned_abs()))
    }

    pub fn decompose(&self) -> Result<UnitDecomposition> {
        let valuation = self.valuation().ok_or(Error::ZeroInput)?;
        let n = self.precision();
        let teich = self.spec.teichmuller(&self.leading_digit()?, n)?;
        let one_unit = self.unit_part()?.div(&teich)?;
        Ok(UnitDecomposition { teich, one_unit, valuation })
    }

    /// Square class for odd residue characteristic.
    pub fn square_class(&self) -> Result<SquareClass> {
        if self.spec.p() == 2 {
            return Err(Error::ResidualCharTwo);
        }
        let v = self.valuation().ok_or(Error::ZeroInput)?;
        let square = self.leading_digit()?.power_class(2)?.is_nth_power;
        Ok(match (v.rem_euclid(2) == 1, square) {
            (false, true) => SquareClass::One,
            (false, false) => SquareClass::Eps,
            (true, true) => SquareClass::Pi,
            (true, false) => SquareClass::EpsPi,
        })
    }

    /// Square class in `Q_2`, one of `1, -1, 2, -2, 3, -3, 6, -6`.
    pub fn q2_square_class(&self) -> Result<i64> {
        if self.spec.kind() != &LocalKind::Padic(2) {
            return Err(Error::UnsupportedCase("square classes mod 8 are for Q_2 only".into()));
        }
        let v = self.valuation().ok_or(Error::ZeroInput)?;
        let (u, n) = self.unit_int().expect("p-adic unit");
        if n < 3 {
            return Err(Error::InsufficientPrecision("unit part must be known mod 8".into()));
        }
        let unit_class = match u % 8 {
            1 => 1,
            3 => 3,
            5 => -3,
            7 => -1,
            _ => unreachable!("unit is odd"),
        };
        Ok(if v.rem_euclid(2) == 1 { 2 * unit_class } else { unit_class })
    }

    /// Class modulo `m`-th powers for `m` prime to the residue characteristic.
    pub fn mth_unit_class(&self, m: u64) -> Result<MthClass> {
        if m % self.spec.p() == 0 {
            return Err(Error::WildCase(format!("m = {m} is divisible by the residue characteristic")));
        }
        let v = self.valuation().ok_or(Error::ZeroInput)?;
        let pc = self.leading_digit()?.power_class(m)?;
        let valuation_residue = v.rem_euclid(m as i64) as u64;
        Ok(MthClass {
            class_index: pc.class_index,
            valuation_residue,
            is_mth_power: pc.is_nth_power && valuation_residue == 0,
        })
    }

    /// An `m`-th root, `m` prime to the residue characteristic (or `m = 2`
    /// over `Q_2`), when one exists.
    pub fn nth_root(&self, m: u64) -> Result<Option<LocalElem>> {
        let v = self.valuation().ok_or(Error::ZeroInput)?;
        if v.rem_euclid(m as i64) != 0 {
            return Ok(None);
        }
        let u = self.unit_part()?;
        let n = u.precision();
        let p = self.spec.p();
        let mut f = vec![self.spec.zero(); m as usize];
        f[0] = u.neg();
        f.push(self.spec.one());
        let start = if m % p != 0 {
            let d = u.leading_digit()?;
            match self.spec.residue().elements().find(|r| r.pow_u(m) == d) {
                Some(r) => self.spec.lift(&r),
                None => return Ok(None),
            }
        } else if m == 2 && self.spec.kind() == &LocalKind::Padic(2) {
            let (val, digs) = self.unit_int().expect("p-adic");
            if digs < 3 {
                return Err(Error::InsufficientPrecision("unit part must be known mod 8".into()));
            }
            if val % 8 != 1 {
                return Ok(None);
            }
            self.spec.one()
        } else {
            return Err(Error::WildCase(format!("{m}-th roots in residue characteristic {p}")));
        };
        let root = match hensel_lift(&f, &start, n) {
            Ok(r) => r,
            Err(Error::InsufficientInputPrecision) if m % p == 0 => {
                return Err(Error::InsufficientPrecision("too few digits to extract a root".into()))
            }
            Err(e) => return Err(e),
        };
        let keep = if m % p == 0 { n.saturating_sub(1).max(1) } else { n };
        Ok(Some(root.with_digits(keep).shift(v / m as i64)))
    }

    /// Canonical literal.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// Newton lifting of an approximate root of `f` to a root modulo `pi^target`.
///
/// Coefficients of `f` and the starting value are treated as exact.
pub fn hensel_lift(f: &[LocalElem], a: &LocalElem, target: usize) -> Result<LocalElem> {
    let spec = a.spec().clone();
    if f.iter().any(|c| c.spec != spec) {
        return Err(Error::SpecMismatch);
    }
    if target == 0 {
        return Err(Error::InvalidArgument("target precision must be positive".into()));
    }
    if a.valuation().is_some_and(|v| v < 0) || f.iter().any(|c| c.valuation().is_some_and(|v| v < 0)) {
        return Err(Error::InvalidArgument("polynomial and approximation must be integral".into()));
    }
    let df = poly::derivative(f);
    let fa = poly::eval(f, a);
    let dfa = poly::eval(&df, a);
    let delta = match dfa.valuation() {
        Some(d) => d,
        None => return Err(Error::HenselHypothesisFails),
    };
    match &fa.repr {
        Repr::Nz { val, .. } if *val <= 2 * delta => return Err(Error::HenselHypothesisFails),
        Repr::Zero(Some(k)) if *k <= 2 * delta => return Err(Error::InsufficientInputPrecision),
        _ => {}
    }
    let work = target as i64 + 2 * delta + 2;
    if work > spec.max_digits() as i64 {
        return Err(Error::InsufficientPrecision(format!("working precision {work} exceeds supported digits")));
    }
    let pad = |x: &LocalElem| x.with_abs_precision(work);
    let fw: Vec<LocalElem> = f.iter().map(pad).collect();
    let dfw: Vec<LocalElem> = df.iter().map(pad).collect();
    let mut x = pad(a);
    for _ in 0..128 {
        let fx = poly::eval(&fw, &x);
        if fx.valuation_bound() >= work - delta {
            break;
        }
        let corr = fx.div(&poly::eval(&dfw, &x)).map_err(|_| Error::HenselHypothesisFails)?;
        x = pad(&x.sub(&corr));
    }
    let fx = poly::eval(&fw, &x);
    if fx.valuation_bound() < target as i64 {
        return Err(Error::InsufficientInputPrecision);
    }
    Ok(x.with_abs_precision(target as i64))
}

impl fmt::Debug for LocalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LocalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sym, digit_str): (String, Box<dyn Fn(&FqElem) -> String>) = match self.spec.kind() {
            LocalKind::Padic(p) => (p.to_string(), Box::new(|d: &FqElem| d.coeffs()[0].to_string())),
            LocalKind::Laurent => {
                let prime = self.spec.residue().n() == 1;
                (
                    "t".to_string(),
                    Box::new(move |d: &FqElem| if prime { d.coeffs()[0].to_string() } else { d.to_string() }),
                )
            }
        };
        match &self.repr {
            Repr::Zero(None) => write!(f, "0"),
            Repr::Zero(Some(k)) => write!(f, "O({sym}^{k})"),
            Repr::Nz { val, unit } => {
                let mut terms = Vec::new();
                for (i, d) in self.digits().iter().enumerate() {
                    if d.is_zero() {
                        continue;
                    }
                    terms.push(match i {
                        0 => digit_str(d),
                        1 => format!("{}*{sym}", digit_str(d)),
                        _ => format!("{}*{sym}^{i}", digit_str(d)),
                    });
                }
                terms.push(format!("O({sym}^{})", unit.len()));
                write!(f, "{sym}^{val}*({})", terms.join(" + "))
            }
        }
    }
}

impl Scalar for LocalElem {
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
        let spec = &self.spec;
        match (&self.repr, &rhs.repr) {
            (Repr::Zero(None), _) => rhs.clone(),
            (_, Repr::Zero(None)) => self.clone(),
            (Repr::Zero(Some(k)), Repr::Zero(Some(l))) => spec.inexact_zero(*k.min(l)),
            (Repr::Zero(Some(k)), Repr::Nz { .. }) => rhs.with_abs_precision(*k),
            (Repr::Nz { .. }, Repr::Zero(Some(k))) => self.with_abs_precision(*k),
            (Repr::Nz { val: vx, unit: ux }, Repr::Nz { val: vy, unit: uy }) => {
                let cap = (vx + ux.len() as i64).min(vy + uy.len() as i64);
                let vmin = *vx.min(vy);
                let n = (cap - vmin) as usize;
                let a = shifted(spec, ux, (vx - vmin) as usize, n);
                let b = shifted(spec, uy, (vy - vmin) as usize, n);
                let sum = match (a, b) {
                    (Unit::Int { value: x, .. }, Unit::Int { value: y, .. }) => {
                        let m = pow_u128(spec.p(), n);
                        Unit::Int { value: ((x as u128 + y as u128) % m as u128) as u64, n: n as u32 }
                    }
                    (Unit::Ser(x), Unit::Ser(y)) => Unit::Ser(x.iter().zip(&y).map(|(c, d)| c.add(d)).collect()),
                    _ => unreachable!("units of one field share a representation"),
                };
                normalize(spec, vmin, sum)
            }
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        debug_assert!(self.spec == rhs.spec);
        let spec = &self.spec;
        match (&self.repr, &rhs.repr) {
            (Repr::Zero(None), _) | (_, Repr::Zero(None)) => spec.zero(),
            (Repr::Zero(Some(k)), Repr::Zero(Some(l))) => spec.inexact_zero(k + l),
            (Repr::Zero(Some(k)), Repr::Nz { val, .. }) | (Repr::Nz { val, .. }, Repr::Zero(Some(k))) => {
                spec.inexact_zero(k + val)
            }
            (Repr::Nz { val: vx, unit: ux }, Repr::Nz { val: vy, unit: uy }) => {
                let n = ux.len().min(uy.len());
                let unit = match (ux, uy) {
                    (Unit::Int { value: x, .. }, Unit::Int { value: y, .. }) => {
                        let m = pow_u128(spec.p(), n) as u128;
                        Unit::Int { value: ((*x as u128 % m) * (*y as u128 % m) % m) as u64, n: n as u32 }
                    }
                    (Unit::Ser(x), Unit::Ser(y)) => Unit::Ser(series_mul(x, y, n)),
                    _ => unreachable!("units of one field share a representation"),
                };
                spec.make(vx + vy, unit)
            }
        }
    }

    fn neg(&self) -> Self {
        match &self.repr {
            Repr::Zero(_) => self.clone(),
            Repr::Nz { val, unit } => {
                let unit = match unit {
                    Unit::Int { value, n } => {
                        let m = pow_u128(self.spec.p(), *n as usize);
                        Unit::Int { value: (m - value) % m, n: *n }
                    }
                    Unit::Ser(d) => Unit::Ser(d.iter().map(|c| c.neg()).collect()),
                };
                self.spec.make(*val, unit)
            }
        }
    }

    fn inv(&self) -> Result<Self> {
        match &self.repr {
            Repr::Zero(None) => Err(Error::DivisionByZero),
            Repr::Zero(Some(_)) => Err(Error::PrecisionExhausted),
            Repr::Nz { val, unit } => {
                let unit = match unit {
                    Unit::Int { value, n } => {
                        let m = pow_u128(self.spec.p(), *n as usize);
                        Unit::Int { value: inv_mod(*value, m), n: *n }
                    }
                    Unit::Ser(d) => {
                        let n = d.len();
                        let c0 = d[0].inv()?;
                        let mut out: Vec<FqElem> = Vec::with_capacity(n);
                        out.push(c0.clone());
                        for k in 1..n {
                            let mut s = d[0].zero_like();
                            for i in 1..=k {
                                s = s.add(&d[i].mul(&out[k - i]));
                            }
                            out.push(s.mul(&c0).neg());
                        }
                        Unit::Ser(out)
                    }
                };
                Ok(self.spec.make(-val, unit))
            }
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero(_))
    }

    fn canonical_cmp(&self, rhs: &Self) -> Ordering {
        match (&self.repr, &rhs.repr) {
            (Repr::Zero(_), Repr::Zero(_)) => Ordering::Equal,
            (Repr::Zero(_), _) => Ordering::Less,
            (_, Repr::Zero(_)) => Ordering::Greater,
            (Repr::Nz { val: vx, .. }, Repr::Nz { val: vy, .. }) => vx.cmp(vy).then_with(|| {
                let (a, b) = (self.digits(), rhs.digits());
                let k = a.len().min(b.len());
                crate::scalar::cmp_slices(&a[..k], &b[..k])
            }),
        }
    }

    fn pivot_weight(&self) -> Option<i64> {
        self.valuation()
    }

    fn characteristic(&self) -> u64 {
        match self.spec.kind() {
            LocalKind::Padic(_) => 0,
            LocalKind::Laurent => self.spec.p(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64) -> LocalFieldSpec {
        LocalFieldSpec::padic(p, 12).unwrap()
    }

    fn int_digits(x: &LocalElem) -> Vec<u64> {
        x.digits().iter().map(|d| d.coeffs()[0]).collect()
    }

    #[test]
    fn addition_caps_precision() {
        let f = q(3);
        let a = f.from_i64_prec(2, 5);
        let b = f.from_i64_prec(1, 2);
        let s = a.add(&b);
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.abs_precision(), Some(2));
        assert_eq!(int_digits(&s), vec![1]);
    }

    #[test]
    fn inverse_of_four() {
        let f = q(3);
        let x = f.from_i64_prec(4, 3).inv().unwrap();
        assert_eq!(int_digits(&x), vec![1, 2, 0]);
    }

    #[test]
    fn vanishing_sum_is_inexact_zero() {
        let f = q(5);
        let z = f.from_i64(3).sub(&f.from_i64(3));
        assert!(z.is_zero() && !z.is_exact_zero());
        assert_eq!(z.inv().unwrap_err(), Error::PrecisionExhausted);
        assert_eq!(f.zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn teichmuller_of_two_mod_25() {
        let f = q(5);
        let d = f.residue().from_u64(2);
        let t = f.teichmuller(&d, 2).unwrap();
        assert_eq!(t.unit_int(), Some((7, 2)));
        let t10 = f.teichmuller(&d, 10).unwrap();
        assert!(t10.pow(4).sub(&f.one()).valuation_bound() >= 10);
    }

    #[test]
    fn hensel_examples() {
        let f = q(3);
        let poly = [f.from_i64(-7), f.zero(), f.one()];
        let b = hensel_lift(&poly, &f.one(), 3).unwrap();
        assert_eq!(b.unit_int(), Some((13, 3)));
        let poly = [f.from_i64(-1), f.zero(), f.one()];
        assert!(hensel_lift(&poly, &f.one(), 5).unwrap().same(&f.one()));
        let poly = [f.from_i64(-3), f.zero(), f.one()];
        assert_eq!(hensel_lift(&poly, &f.zero(), 3).unwrap_err(), Error::HenselHypothesisFails);
    }

    #[test]
    fn laurent_teichmuller_is_constant() {
        let f3 = FqSpec::prime(3).unwrap();
        let l = LocalFieldSpec::laurent(f3.clone(), 6).unwrap();
        let t = l.teichmuller(&f3.from_u64(2), 6).unwrap();
        assert_eq!(t.to_string(), "t^0*(2 + O(t^6))");
    }

    #[test]
    fn decompositions() {
        let f = q(5);
        let d = f.from_i64(10).decompose().unwrap();
        assert_eq!(d.valuation, 1);
        assert_eq!(d.teich.leading_digit().unwrap().coeffs(), &[2]);
        let rebuilt = d.teich.mul(&d.one_unit).shift(1);
        assert!(rebuilt.same(&f.from_i64(10)));
        let d = f.from_i64(5).decompose().unwrap();
        assert!(d.teich.same(&f.one()) && d.one_unit.same(&f.one()));
    }

    #[test]
    fn square_classes() {
        let f = q(3);
        assert_eq!(f.from_i64(7).square_class().unwrap(), SquareClass::One);
        assert_eq!(f.from_i64(3).square_class().unwrap(), SquareClass::Pi);
        assert_eq!(f.from_i64(6).square_class().unwrap(), SquareClass::EpsPi);
        let f2 = q(2);
        assert_eq!(f2.from_i64(2).square_class().unwrap_err(), Error::ResidualCharTwo);
        assert_eq!(f2.from_i64(17).q2_square_class().unwrap(), 1);
        assert_eq!(f2.from_i64(7).q2_square_class().unwrap(), -1);
        assert_eq!(f2.from_i64(2).q2_square_class().unwrap(), 2);
        assert!(matches!(
            f2.from_i64_prec(3, 2).q2_square_class(),
            Err(Error::InsufficientPrecision(_))
        ));
    }

    #[test]
    fn cube_classes() {
        let f = q(7);
        let c = f.from_i64(2).mth_unit_class(3).unwrap();
        assert!(!c.is_mth_power && c.valuation_residue == 0);
        assert!(f.from_i64(6).mth_unit_class(3).unwrap().is_mth_power);
        assert!(f.one().mth_unit_class(3).unwrap().is_mth_power);
        assert!(matches!(f.one().mth_unit_class(7), Err(Error::WildCase(_))));
    }

    #[test]
    fn roots() {
        let f = q(5);
        let r = f.from_i64(-1).nth_root(2).unwrap().unwrap();
        assert!(r.mul(&r).same(&f.from_i64(-1)));
        assert!(f.from_i64(2).nth_root(2).unwrap().is_none());
        let f2 = q(2);
        let r = f2.from_i64(17).nth_root(2).unwrap().unwrap();
        assert!(r.mul(&r).same(&f2.from_i64(17)));
    }

    #[test]
    fn render_forms() {
        let f = q(5);
        let x = f.from_digits(1, &[f.residue().from_u64(2), f.residue().from_u64(1)]).unwrap();
        assert_eq!(x.to_string(), "5^1*(2 + 1*5 + O(5^2))");
        assert_eq!(f.zero().to_string(), "0");
    }
}
