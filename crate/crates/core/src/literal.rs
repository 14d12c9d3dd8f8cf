//! Text forms of fields, extensions and elements.
//!
//! Descriptors: `GF:<q>` (or `GF(p^n; modulus=[...])`), `Qp:<p>`,
//! `Laurent:<q>`; extensions `unram:<m>`, `sqrt:<c>`, `kummer:<b>`, `as:<c>`.
//!
//! Base-field elements are arithmetic expressions over integers with
//! `+ - * / ^` and parentheses. Finite fields additionally accept coefficient
//! lists `[c0,c1,...]`. In `Qp:<p>` a list `[d0,d1,...]` is the integer
//! `d0 + d1 p + ...`, and `O(p^k)` is an error term absolute precision `k`.
//! In `Laurent:<q>` the symbol `t` is the uniformizer, lists are residue
//! constants and `O(t^k)` is the error term. Without an error term, integer
//! literals carry the field's default precision. Extension elements are
//! `(e0, e1, ...)` over the distinguished basis, algebra elements
//! `[x0; x1; ...]` with `x_s` the coefficient of `t^s`. Everything the
//! library prints parses back to the same value.

use crate::base::{BaseElem, BaseField};
use crate::error::{Error, Result};
use crate::extension::{CyclicExtension, ExtElem};
use crate::ffield::{is_prime, FqSpec};
use crate::localfield::{LocalFieldSpec, LocalKind};
use crate::nacalg::{AlgElem, CyclicAlgebra};
use crate::scalar::Scalar;

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

/// Split `q = p^n`, rejecting anything that is not a prime power.
pub fn prime_power(q: u64) -> Result<(u64, usize)> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let (mut r, mut n) = (q, 0);
    while r % p == 0 {
        r /= p;
        n += 1;
    }
    if r != 1 {
        return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
    }
    Ok((p, n))
}

fn parse_u64(s: &str, at: usize) -> Result<u64> {
    s.trim().parse().map_err(|_| syntax(at, format!("expected a positive integer, found `{}`", s.trim())))
}

/// Parse a base-field descriptor. `precision` is the default digit count for
/// local fields.
pub fn parse_field(desc: &str, precision: usize) -> Result<BaseField> {
    let desc = desc.trim();
    if let Some(rest) = desc.strip_prefix("GF(") {
        return parse_fq_spec(rest, desc.len() - rest.len()).map(BaseField::Finite);
    }
    let (head, tail) = desc.split_once(':').ok_or_else(|| syntax(0, "expected `<kind>:<order>`"))?;
    let at = head.len() + 1;
    let n = parse_u64(tail, at)?;
    match head {
        "GF" => {
            let (p, k) = prime_power(n)?;
            Ok(BaseField::Finite(FqSpec::new(p, k, None)?))
        }
        "Qp" => {
            if !is_prime(n) {
                return Err(Error::NotPrime(n));
            }
            Ok(BaseField::Local(LocalFieldSpec::padic(n, precision)?))
        }
        "Laurent" => {
            let (p, k) = prime_power(n)?;
            Ok(BaseField::Local(LocalFieldSpec::laurent(FqSpec::new(p, k, None)?, precision)?))
        }
        _ => Err(syntax(0, format!("unknown field kind `{head}` (expected GF, Qp or Laurent)"))),
    }
}

// `p^n; modulus=[c0,...])`
fn parse_fq_spec(s: &str, offset: usize) -> Result<FqSpec> {
    let body = s.strip_suffix(')').ok_or_else(|| syntax(offset + s.len(), "expected `)`"))?;
    let (order, modulus) = match body.split_once(';') {
        Some((o, m)) => (o, Some(m)),
        None => (body, None),
    };
    let (p, n) = order.split_once('^').ok_or_else(|| syntax(offset, "expected `p^n`"))?;
    let p = parse_u64(p, offset)?;
    let n = parse_u64(n, offset)? as usize;
    let modulus = match modulus {
        None => None,
        Some(m) => {
            let at = offset + order.len() + 1;
            let list = m
                .trim()
                .strip_prefix("modulus=")
                .ok_or_else(|| syntax(at, "expected `modulus=[...]`"))?
                .trim();
            let inner = list
                .strip_prefix('[')
                .and_then(|l| l.strip_suffix(']'))
                .ok_or_else(|| syntax(at, "expected a coefficient list"))?;
            Some(inner.split(',').map(|c| parse_u64(c, at)).collect::<Result<Vec<_>>>()?)
        }
    };
    FqSpec::new(p, n, modulus)
}

/// Parse an extension descriptor over `base`. `m` supplies the degree of a
/// Kummer extension (default 2).
pub fn parse_extension(base: &BaseField, desc: &str, m: Option<usize>) -> Result<CyclicExtension> {
    let desc = desc.trim();
    let (kind, arg) = desc.split_once(':').ok_or_else(|| syntax(0, "expected `<kind>:<parameter>`"))?;
    let at = kind.len() + 1;
    let shifted = |e: Error| match e {
        Error::Syntax { pos, msg } => Error::Syntax { pos: pos + at, msg },
        e => e,
    };
    match kind {
        "unram" => {
            let deg = parse_u64(arg, at)? as usize;
            if let Some(m) = m {
                if m != deg {
                    return Err(Error::ContextMismatch(format!("degree {m} given for unram:{deg}")));
                }
            }
            match base {
                BaseField::Finite(s) => CyclicExtension::finite(s, deg),
                BaseField::Local(_) => CyclicExtension::unramified(base, deg),
            }
        }
        "sqrt" => {
            if m.is_some_and(|m| m != 2) {
                return Err(Error::ContextMismatch("sqrt:<c> has degree 2".into()));
            }
            let c = parse_base_elem(base, arg).map_err(shifted)?;
            CyclicExtension::quadratic(base, c)
        }
        "kummer" => {
            let b = parse_base_elem(base, arg).map_err(shifted)?;
            CyclicExtension::kummer(base, m.unwrap_or(2), b)
        }
        "as" => {
            if m.is_some_and(|m| m != 2) {
                return Err(Error::ContextMismatch("as:<c> has degree 2".into()));
            }
            let c = parse_base_elem(base, arg).map_err(shifted)?;
            CyclicExtension::artin_schreier(base, c)
        }
        _ => Err(syntax(0, format!("unknown extension kind `{kind}` (expected unram, sqrt, kummer or as)"))),
    }
}

/// Parse a base-field element.
pub fn parse_base_elem(field: &BaseField, s: &str) -> Result<BaseElem> {
    let mut p = Parser::new(s);
    let x = p.expr(field)?;
    p.finish()?;
    Ok(x)
}

/// Parse an extension element: a tuple, or a base-field element.
pub fn parse_ext_elem(ext: &CyclicExtension, s: &str) -> Result<ExtElem> {
    let mut p = Parser::new(s);
    let x = p.ext_elem(ext)?;
    p.finish()?;
    Ok(x)
}

/// Parse an algebra element: `[x0; ...; x_{m-1}]`, or an extension element
/// (placed at `t^0`).
pub fn parse_alg_elem(alg: &CyclicAlgebra, s: &str) -> Result<AlgElem> {
    let mut p = Parser::new(s);
    let start = p.pos;
    p.ws();
    if p.eat('[') {
        let first = p.ext_elem(alg.ext());
        p.ws();
        if let Ok(first) = first {
            if p.peek() == Some(';') {
                let mut coeffs = vec![first];
                while p.eat(';') {
                    coeffs.push(p.ext_elem(alg.ext())?);
                    p.ws();
                }
                p.expect(']')?;
                p.finish()?;
                if coeffs.len() != alg.degree() {
                    return Err(Error::ContextMismatch(format!(
                        "algebra element has {} coefficients, expected {}",
                        coeffs.len(),
                        alg.degree()
                    )));
                }
                return alg.elem(coeffs);
            }
        }
        p.pos = start;
    }
    let k = p.ext_elem(alg.ext())?;
    p.finish()?;
    Ok(alg.from_k(k, 0))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => syntax(self.pos, format!("expected {wanted}, found `{c}`")),
            None => syntax(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let digits_at = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_at {
            self.pos = start;
            return Err(self.unexpected("an integer"));
        }
        self.src[start..self.pos].parse().map_err(|_| syntax(start, "integer out of range"))
    }

    fn list(&mut self) -> Result<Vec<i64>> {
        self.expect('[')?;
        let mut out = vec![self.integer()?];
        while self.eat(',') {
            out.push(self.integer()?);
        }
        self.expect(']')?;
        Ok(out)
    }

    fn ext_elem(&mut self, ext: &CyclicExtension) -> Result<ExtElem> {
        self.ws();
        let start = self.pos;
        if self.eat('(') {
            if let Ok(first) = self.expr(ext.base()) {
                if self.eat(',') {
                    let mut coeffs = vec![first];
                    coeffs.push(self.expr(ext.base())?);
                    while self.eat(',') {
                        coeffs.push(self.expr(ext.base())?);
                    }
                    self.expect(')')?;
                    if coeffs.len() != ext.degree() {
                        return Err(Error::ContextMismatch(format!(
                            "extension element has {} coordinates, expected {}",
                            coeffs.len(),
                            ext.degree()
                        )));
                    }
                    return ext.elem(coeffs);
                }
            }
            self.pos = start;
        }
        Ok(ext.from_base(self.expr(ext.base())?))
    }

    fn expr(&mut self, f: &BaseField) -> Result<BaseElem> {
        let mut acc = self.term(f)?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term(f)?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term(f)?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, f: &BaseField) -> Result<BaseElem> {
        let mut acc = self.unary(f)?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary(f)?);
            } else if self.eat('/') {
                let at = self.pos;
                let d = self.unary(f)?;
                acc = acc.div(&d).map_err(|e| match e {
                    Error::DivisionByZero | Error::ZeroInput | Error::PrecisionExhausted => {
                        syntax(at, "division by zero")
                    }
                    e => e,
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self, f: &BaseField) -> Result<BaseElem> {
        if self.eat('-') {
            return Ok(self.unary(f)?.neg());
        }
        let base = self.atom(f)?;
        if self.eat('^') {
            let at = self.pos;
            let e = self.integer()?;
            return base.powi(e).map_err(|_| syntax(at, "negative power of zero"));
        }
        Ok(base)
    }

    fn atom(&mut self, f: &BaseField) -> Result<BaseElem> {
        self.ws();
        let at = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let x = self.expr(f)?;
                self.expect(')')?;
                Ok(x)
            }
            Some('[') => {
                let list = self.list()?;
                self.list_value(f, &list, at)
            }
            Some('O') => {
                self.pos += 1;
                self.big_o(f, at)
            }
            Some('t') => {
                self.pos += 1;
                match f.local().map(|s| s.kind()) {
                    Some(LocalKind::Laurent) => Ok(f.wrap_local(f.local().unwrap().uniformizer())),
                    _ => Err(syntax(at, "the symbol `t` needs a Laurent series field")),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(f.from_i64(n))
            }
            _ => Err(self.unexpected("a number, `t`, `O(...)`, a list or `(`")),
        }
    }

    fn list_value(&self, f: &BaseField, list: &[i64], at: usize) -> Result<BaseElem> {
        let residue = f.residue();
        let coeffs: Vec<u64> = list.iter().map(|&c| c.rem_euclid(residue.p() as i64) as u64).collect();
        match f {
            BaseField::Finite(s) => Ok(BaseElem::Fq(s.from_coeffs(&coeffs).map_err(|_| {
                syntax(at, format!("a list in {f} has at most {} coefficients", s.n()))
            })?)),
            BaseField::Local(s) => match s.kind() {
                LocalKind::Laurent => {
                    let d = residue
                        .from_coeffs(&coeffs)
                        .map_err(|_| syntax(at, format!("a residue in {f} has at most {} coefficients", residue.n())))?;
                    Ok(f.lift(&d))
                }
                LocalKind::Padic(p) => {
                    if list.iter().any(|&d| d < 0 || d as u64 >= *p) {
                        return Err(syntax(at, format!("digits must lie in 0..{p}")));
                    }
                    let mut acc = f.zero();
                    let pb = f.from_i64(*p as i64);
                    for &d in list.iter().rev() {
                        acc = acc.mul(&pb).add(&f.from_i64(d));
                    }
                    Ok(acc)
                }
            },
        }
    }

    // after `O`: `(sym^k)`
    fn big_o(&mut self, f: &BaseField, at: usize) -> Result<BaseElem> {
        let spec = f.local().ok_or_else(|| syntax(at, "`O(...)` needs a local field"))?;
        self.expect('(')?;
        self.ws();
        let sym_at = self.pos;
        match spec.kind() {
            LocalKind::Laurent => {
                if !self.eat('t') {
                    return Err(self.unexpected("`t`"));
                }
            }
            LocalKind::Padic(p) => {
                let n = self.integer()?;
                if n != *p as i64 {
                    return Err(syntax(sym_at, format!("error term must be a power of {p}")));
                }
            }
        }
        let k = if self.eat('^') { self.integer()? } else { 1 };
        self.expect(')')?;
        Ok(f.wrap_local(spec.inexact_zero(k)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q5() -> BaseField {
        parse_field("Qp:5", 12).unwrap()
    }

    #[test]
    fn local_literal_round_trip() {
        let f = q5();
        let s = "5^1*(2 + 1*5 + O(5^3))";
        let x = parse_base_elem(&f, s).unwrap();
        let l = x.as_local().unwrap();
        assert_eq!(l.valuation(), Some(1));
        assert_eq!(l.precision(), 3);
        assert_eq!(x.to_string(), s);
        assert_eq!(parse_base_elem(&f, &x.to_string()).unwrap().to_string(), s);
    }

    #[test]
    fn precision_capped_by_error_term() {
        let f = parse_field("Qp:3", 12).unwrap();
        let x = parse_base_elem(&f, "(2 + O(3^5)) + (1 + O(3^2))").unwrap();
        assert_eq!(x.to_string(), "3^1*(1 + O(3^1))");
    }

    #[test]
    fn default_precision_without_error_term() {
        let x = parse_base_elem(&q5(), "-1/2").unwrap();
        assert_eq!(x.as_local().unwrap().precision(), 12);
        assert!(x.mul(&q5().from_i64(-2)).same(&q5().one()));
    }

    #[test]
    fn digit_lists_and_powers() {
        let f = q5();
        assert!(parse_base_elem(&f, "[2,1]").unwrap().same(&f.from_i64(7)));
        let x = parse_base_elem(&f, "5^-2").unwrap();
        assert_eq!(x.valuation(), Some(-2));
        assert!(matches!(parse_base_elem(&f, "[7]"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn finite_field_literals() {
        let f = parse_field("GF:9", 12).unwrap();
        let x = parse_base_elem(&f, "[1,2]").unwrap();
        assert_eq!(x.to_string(), "[1,2]");
        assert!(parse_base_elem(&f, "4").unwrap().same(&f.one()));
        assert!(matches!(parse_base_elem(&f, "O(3^2)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn laurent_literals() {
        let f = parse_field("Laurent:4", 12).unwrap();
        let x = parse_base_elem(&f, "[0,1]*t^-1 + 1").unwrap();
        assert_eq!(x.valuation(), Some(-1));
        let back = parse_base_elem(&f, &x.to_string()).unwrap();
        assert_eq!(back.to_string(), x.to_string());
    }

    #[test]
    fn extension_and_algebra_elements() {
        let f = q5();
        let k = parse_extension(&f, "sqrt:2", None).unwrap();
        let r = parse_ext_elem(&k, "(0, [1])").unwrap();
        assert!(r.same(&k.basis(1)));
        let y = parse_ext_elem(&k, "(1 + 5)").unwrap();
        assert!(y.same(&k.from_base(f.from_i64(6))));
        let alg = CyclicAlgebra::new(&k, 1, k.basis(1)).unwrap();
        let z = parse_alg_elem(&alg, "[(1, 2); (0, 1)]").unwrap();
        assert_eq!(parse_alg_elem(&alg, &z.to_string()).unwrap().to_string(), z.to_string());
        assert!(matches!(parse_ext_elem(&k, "(1, 2, 3)"), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_base_elem(&q5(), "1 + * 2") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse_base_elem(&q5(), "12)") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_field("Qp:6", 12), Err(Error::NotPrime(6))));
        assert!(matches!(parse_field("Zp:5", 12), Err(Error::Syntax { .. })));
    }

    #[test]
    fn descriptors() {
        assert_eq!(parse_field("GF:8", 12).unwrap().to_string(), "GF:8");
        let f = parse_field("GF(2^3; modulus=[1,0,1,1])", 12).unwrap();
        assert_eq!(f.q(), 8);
        let q7 = parse_field("Qp:7", 12).unwrap();
        assert_eq!(parse_extension(&q7, "kummer:7", Some(3)).unwrap().degree(), 3);
        assert_eq!(parse_extension(&q7, "unram:3", None).unwrap().degree(), 3);
        let l2 = parse_field("Laurent:2", 12).unwrap();
        assert_eq!(parse_extension(&l2, "as:t^-3", None).unwrap().degree(), 2);
    }
}
