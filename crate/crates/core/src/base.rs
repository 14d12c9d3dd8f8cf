//! A base field that is either finite or local, and its elements.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{FqElem, FqSpec};
use crate::localfield::{LocalElem, LocalFieldSpec, LocalKind};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BaseField {
    Finite(FqSpec),
    Local(LocalFieldSpec),
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Finite(s) => write!(f, "GF:{}", s.order()),
            BaseField::Local(s) => write!(f, "{s}"),
        }
    }
}

impl BaseField {
    pub fn zero(&self) -> BaseElem {
        match self {
            BaseField::Finite(s) => BaseElem::Fq(s.zero()),
            BaseField::Local(s) => BaseElem::Local(s.zero()),
        }
    }
    pub fn one(&self) -> BaseElem {
        self.from_i64(1)
    }
    pub fn from_i64(&self, c: i64) -> BaseElem {
        match self {
            BaseField::Finite(s) => BaseElem::Fq(s.from_i64(c)),
            BaseField::Local(s) => BaseElem::Local(s.from_i64(c)),
        }
    }
    /// The residue field (the field itself when finite).
    pub fn residue(&self) -> &FqSpec {
        match self {
            BaseField::Finite(s) => s,
            BaseField::Local(s) => s.residue(),
        }
    }
    /// Residue field order.
    pub fn q(&self) -> u64 {
        self.residue().order()
    }
    pub fn p(&self) -> u64 {
        self.residue().p()
    }
    pub fn characteristic(&self) -> u64 {
        match self {
            BaseField::Local(s) if s.is_padic() => 0,
            _ => self.p(),
        }
    }
    pub fn is_finite(&self) -> bool {
        matches!(self, BaseField::Finite(_))
    }
    pub fn local(&self) -> Option<&LocalFieldSpec> {
        match self {
            BaseField::Local(s) => Some(s),
            BaseField::Finite(_) => None,
        }
    }
    pub fn is_q2(&self) -> bool {
        self.local().is_some_and(|s| s.kind() == &LocalKind::Padic(2))
    }
    /// Lift of a residue: itself for finite fields, integer or constant lift otherwise.
    pub fn lift(&self, d: &FqElem) -> BaseElem {
        match self {
            BaseField::Finite(_) => BaseElem::Fq(d.clone()),
            BaseField::Local(s) => BaseElem::Local(s.lift(d)),
        }
    }
    /// Teichmuller lift (identity for finite fields).
    pub fn teichmuller(&self, d: &FqElem) -> Result<BaseElem> {
        match self {
            BaseField::Finite(_) => {
                if d.is_zero() {
                    Err(Error::ZeroInput)
                } else {
                    Ok(BaseElem::Fq(d.clone()))
                }
            }
            BaseField::Local(s) => Ok(BaseElem::Local(s.teichmuller(d, s.default_precision())?)),
        }
    }
    pub fn wrap_local(&self, x: LocalElem) -> BaseElem {
        BaseElem::Local(x)
    }
    /// Check that an element belongs to this field.
    pub fn owns(&self, x: &BaseElem) -> bool {
        match (self, x) {
            (BaseField::Finite(s), BaseElem::Fq(e)) => e.spec() == s,
            (BaseField::Local(s), BaseElem::Local(e)) => e.spec() == s,
            _ => false,
        }
    }
}

#[derive(Clone)]
pub enum BaseElem {
    Fq(FqElem),
    Local(LocalElem),
}

impl fmt::Debug for BaseElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BaseElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseElem::Fq(x) => write!(f, "{x}"),
            BaseElem::Local(x) => write!(f, "{x}"),
        }
    }
}

impl BaseElem {
    pub fn as_fq(&self) -> Option<&FqElem> {
        match self {
            BaseElem::Fq(x) => Some(x),
            BaseElem::Local(_) => None,
        }
    }
    pub fn as_local(&self) -> Option<&LocalElem> {
        match self {
            BaseElem::Local(x) => Some(x),
            BaseElem::Fq(_) => None,
        }
    }
    pub fn field(&self) -> BaseField {
        match self {
            BaseElem::Fq(x) => BaseField::Finite(x.spec().clone()),
            BaseElem::Local(x) => BaseField::Local(x.spec().clone()),
        }
    }
    /// Valuation (0 for nonzero finite-field elements).
    pub fn valuation(&self) -> Option<i64> {
        match self {
            BaseElem::Fq(x) => (!x.is_zero()).then_some(0),
            BaseElem::Local(x) => x.valuation(),
        }
    }
    /// Leading residue digit of a nonzero element.
    pub fn leading_digit(&self) -> Result<FqElem> {
        match self {
            BaseElem::Fq(x) if x.is_zero() => Err(Error::ZeroInput),
            BaseElem::Fq(x) => Ok(x.clone()),
            BaseElem::Local(x) => x.leading_digit(),
        }
    }
    pub fn powi(&self, e: i64) -> Result<BaseElem> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow(e.unsigned_abs()))
    }
}

macro_rules! both {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (BaseElem::Fq($x), BaseElem::Fq($y)) => BaseElem::Fq($body),
            (BaseElem::Local($x), BaseElem::Local($y)) => BaseElem::Local($body),
            _ => panic!("mixed base fields"),
        }
    };
}

impl Scalar for BaseElem {
    fn zero_like(&self) -> Self {
        match self {
            BaseElem::Fq(x) => BaseElem::Fq(x.zero_like()),
            BaseElem::Local(x) => BaseElem::Local(x.zero_like()),
        }
    }
    fn one_like(&self) -> Self {
        self.from_i64_like(1)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        match self {
            BaseElem::Fq(x) => BaseElem::Fq(x.from_i64_like(n)),
            BaseElem::Local(x) => BaseElem::Local(x.from_i64_like(n)),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        both!(self, rhs, |x, y| x.add(y))
    }
    fn sub(&self, rhs: &Self) -> Self {
        both!(self, rhs, |x, y| x.sub(y))
    }
    fn mul(&self, rhs: &Self) -> Self {
        both!(self, rhs, |x, y| x.mul(y))
    }
    fn neg(&self) -> Self {
        match self {
            BaseElem::Fq(x) => BaseElem::Fq(x.neg()),
            BaseElem::Local(x) => BaseElem::Local(x.neg()),
        }
    }
    fn inv(&self) -> Result<Self> {
        Ok(match self {
            BaseElem::Fq(x) => BaseElem::Fq(x.inv()?),
            BaseElem::Local(x) => BaseElem::Local(x.inv()?),
        })
    }
    fn is_zero(&self) -> bool {
        match self {
            BaseElem::Fq(x) => x.is_zero(),
            BaseElem::Local(x) => x.is_zero(),
        }
    }
    fn canonical_cmp(&self, rhs: &Self) -> Ordering {
        match (self, rhs) {
            (BaseElem::Fq(x), BaseElem::Fq(y)) => x.canonical_cmp(y),
            (BaseElem::Local(x), BaseElem::Local(y)) => x.canonical_cmp(y),
            _ => panic!("mixed base fields"),
        }
    }
    fn pivot_weight(&self) -> Option<i64> {
        match self {
            BaseElem::Fq(x) => x.pivot_weight(),
            BaseElem::Local(x) => x.pivot_weight(),
        }
    }
    fn characteristic(&self) -> u64 {
        match self {
            BaseElem::Fq(x) => x.characteristic(),
            BaseElem::Local(x) => x.characteristic(),
        }
    }
}
