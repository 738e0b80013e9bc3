//! Integer Laurent polynomials in a fixed set of variables.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Q;

/// `Σ c_e x^e` with `e ∈ Z^n`; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(vec![0; nvars], c.into())
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPoly::constant(nvars, 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        LaurentPoly::monomial(e, BigInt::one())
    }

    pub fn monomial(exps: Vec<i32>, c: BigInt) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `Some(i)` when this is exactly the variable `x_i`.
    pub fn as_variable(&self) -> Option<usize> {
        let (e, c) = self.terms.iter().next()?;
        if self.terms.len() != 1 || !c.is_one() {
            return None;
        }
        let mut nz = e.iter().enumerate().filter(|(_, &x)| x != 0);
        match (nz.next(), nz.next()) {
            (Some((i, 1)), None) => Some(i),
            _ => None,
        }
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    fn insert(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        (0..k).fold(LaurentPoly::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Integer power of a monomial, negative exponents allowed.
    pub fn monomial_pow(&self, k: i32) -> Option<LaurentPoly> {
        if k >= 0 {
            return Some(self.pow(k as u32));
        }
        let (e, c) = self.terms.iter().next()?;
        if !self.is_monomial() || !(c.is_one() || (-c).is_one()) {
            return None;
        }
        let c = if k % 2 == 0 { BigInt::one() } else { c.clone() };
        Some(LaurentPoly::monomial(e.iter().map(|x| x * k).collect(), c))
    }

    fn shift(&self, by: &[i32]) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    fn min_exponents(&self) -> Vec<i32> {
        (0..self.nvars)
            .map(|i| self.terms.keys().map(|e| e[i]).min().unwrap_or(0))
            .collect()
    }

    /// Exact quotient in `Z[x^{±1}]`, or [`Error::InexactDivision`].
    pub fn div_exact(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        let inexact = || Error::InexactDivision(format!("{} / {}", self.format_default(), other.format_default()));
        if other.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let ma = self.min_exponents();
        let mb = other.min_exponents();
        let neg = |m: &[i32]| m.iter().map(|x| -x).collect::<Vec<_>>();
        let mut rem = self.shift(&neg(&ma));
        let b = other.shift(&neg(&mb));
        let (lb, lc) = b.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).expect("nonzero");
        let mut quot = LaurentPoly::zero(self.nvars);
        // lex long division; B is not divisible by any variable, so an exact
        // Laurent quotient is a polynomial and the remainder must vanish
        while let Some((le, lcoef)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let diff: Vec<i32> = le.iter().zip(&lb).map(|(a, b)| a - b).collect();
            if diff.iter().any(|&x| x < 0) {
                return Err(inexact());
            }
            let (qc, r) = lcoef.div_rem(&lc);
            if !r.is_zero() {
                return Err(inexact());
            }
            let t = LaurentPoly::monomial(diff, qc);
            rem = rem.sub(&t.mul(&b));
            quot = quot.add(&t);
        }
        let back: Vec<i32> = ma.iter().zip(&mb).map(|(a, b)| a - b).collect();
        Ok(quot.shift(&back))
    }

    /// Substitutes values for the variables.
    pub fn eval(&self, values: &[Q]) -> Result<Q> {
        let mut total = Q::zero();
        for (e, c) in &self.terms {
            let mut t = Q::from_integer(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if values[i].is_zero() && k < 0 {
                    return Err(Error::ZeroDivision(i));
                }
                let p = num_traits::pow(values[i].clone(), k.unsigned_abs() as usize);
                if k > 0 {
                    t *= p;
                } else {
                    t /= p;
                }
            }
            total += t;
        }
        Ok(total)
    }

    fn format_default(&self) -> String {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        self.format(&names)
    }

    /// `numerator/denominator` with the denominator a monomial, e.g.
    /// `(x3*x8 + x10*x12)/x7`.
    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let den: Vec<i32> = self.min_exponents().iter().map(|&m| (-m).max(0)).collect();
        let num = self.shift(&den);
        let mut terms: Vec<String> = Vec::new();
        for (e, c) in num.terms.iter().rev() {
            let mono = format_monomial(e, names);
            let s = match (mono.is_empty(), c.abs().is_one()) {
                (true, _) => c.abs().to_string(),
                (false, true) => mono,
                (false, false) => format!("{}*{mono}", c.abs()),
            };
            terms.push(if c.is_negative() { format!("-{s}") } else { s });
        }
        let mut out = String::new();
        for (k, t) in terms.iter().enumerate() {
            if k == 0 {
                out.push_str(t);
            } else if let Some(rest) = t.strip_prefix('-') {
                let _ = write!(out, " - {rest}");
            } else {
                let _ = write!(out, " + {t}");
            }
        }
        let den_s = format_monomial(&den, names);
        if den_s.is_empty() {
            return out;
        }
        let num_s = if terms.len() > 1 { format!("({out})") } else { out };
        if den_s.contains('*') {
            format!("{num_s}/({den_s})")
        } else {
            format!("{num_s}/{den_s}")
        }
    }

    /// Parses the output of [`LaurentPoly::format`] and, more generally,
    /// expressions in `+ - * / ^` and parentheses. Division must be exact.
    pub fn parse(s: &str, names: &[String]) -> Result<LaurentPoly> {
        let mut p = Parser { tokens: tokenize(s)?, pos: 0, names, src: s };
        let out = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(p.error());
        }
        Ok(out)
    }
}

fn format_monomial(e: &[i32], names: &[String]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{k}", names[i]) })
        .collect::<Vec<_>>()
        .join("*")
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token::Int(text.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    names: &'a [String],
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self) -> Error {
        Error::Parse(format!("cannot parse Laurent polynomial {:?}", self.src))
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let f = self.factor()?;
            acc = if op == '*' { acc.mul(&f) } else { acc.div_exact(&f)? };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let negative = self.peek_op() == Some('-');
            if negative {
                self.pos += 1;
            }
            let Some(Token::Int(k)) = self.tokens.get(self.pos).cloned() else {
                return Err(self.error());
            };
            self.pos += 1;
            let k: i32 = k.try_into().map_err(|_| self.error())?;
            let k = if negative { -k } else { k };
            return base.monomial_pow(k).ok_or_else(|| self.error());
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        let n = self.names.len();
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Int(k)) => {
                self.pos += 1;
                Ok(LaurentPoly::constant(n, k))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .names
                    .iter()
                    .position(|x| *x == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                Ok(LaurentPoly::var(n, i))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.error());
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.error()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use proptest::prelude::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn exchange_binomial_round_trip() {
        let nm = names(4);
        let x = |i| LaurentPoly::var(4, i);
        let p = x(0).mul(&x(1)).add(&x(2).mul(&x(3))).div_exact(&x(1)).unwrap();
        assert_eq!(p.format(&nm), "(x1*x2 + x3*x4)/x2");
        assert_eq!(LaurentPoly::parse("(x1*x2 + x3*x4)/x2", &nm).unwrap(), p);
        assert_eq!(LaurentPoly::parse("x1 + x3*x4*x2^-1", &nm).unwrap(), p);
    }

    #[test]
    fn inexact_division_is_reported() {
        let x = |i| LaurentPoly::var(2, i);
        let num = x(0).add(&LaurentPoly::one(2));
        assert!(matches!(num.div_exact(&x(0).add(&x(1))), Err(Error::InexactDivision(_))));
        assert!(matches!(num.div_exact(&LaurentPoly::constant(2, 2)), Err(Error::InexactDivision(_))));
    }

    #[test]
    fn evaluation() {
        let nm = names(2);
        let p = LaurentPoly::parse("(x1^2 + 1)/x2", &nm).unwrap();
        assert_eq!(p.eval(&[q(3), q(5)]).unwrap(), q(2));
        assert_eq!(p.eval(&[q(3), q(0)]), Err(Error::ZeroDivision(1)));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-2i32..3, 3), -3i64..4), 1..5).prop_map(|ts| {
            ts.into_iter().fold(LaurentPoly::zero(3), |acc, (e, c)| acc.add(&LaurentPoly::monomial(e, c.into())))
        })
    }

    proptest! {
        #[test]
        fn product_divides_back(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn format_parse_round_trip(a in arb_poly()) {
            let nm = names(3);
            prop_assert_eq!(LaurentPoly::parse(&a.format(&nm), &nm).unwrap(), a);
        }
    }
}
