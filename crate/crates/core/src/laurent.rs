//! Multivariate Laurent polynomials with exact coefficients.
//!
//! Values are kept in canonical form: a map from exponent vectors to nonzero
//! coefficients. The text form lists terms in descending lexicographic order of
//! exponent vectors, e.g. `x1*x3 + x2*x4 + x4` or `2*x1^-1 - 3`.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Num;

use crate::error::{Error, Result};

/// Exponents of `x_1..x_n` in one monomial, possibly negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }

    /// Entry-wise `self >= other`.
    fn dominates(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

/// Coefficient ring requirements.
pub trait Coefficient: Num + Clone + Ord + Hash + Debug + Display + Neg<Output = Self> + Send + Sync {}

impl<T> Coefficient for T where T: Num + Clone + Ord + Hash + Debug + Display + Neg<Output = T> + Send + Sync {}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent<C> {
    nvars: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coefficient> Laurent<C> {
    /// Panics if `nvars` is zero.
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars > 0, "a Laurent polynomial needs at least one variable");
        Laurent {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(nvars, i), C::one())
    }

    pub fn monomial(exps: ExponentVector, c: C) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Sums up the given terms; exponent vectors must all have length `nvars`.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (ExponentVector, C)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Dimension(format!(
                    "exponent vector of length {} in a {nvars}-variable polynomial",
                    e.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExponentVector, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension(format!(
                "{} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negated())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Self {
        Laurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by the monomial `x^e` (exact and invertible).
    pub fn mul_monomial(&self, e: &ExponentVector) -> Self {
        assert_eq!(e.len(), self.nvars);
        Laurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.add(e), c.clone())).collect(),
        }
    }

    /// `Some((e, c))` when the polynomial is the single term `c * x^e`.
    pub fn as_monomial(&self) -> Option<(&ExponentVector, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Per-variable minimum exponent over all terms (zeros for the zero polynomial).
    pub fn min_exponents(&self) -> ExponentVector {
        let mut mins = vec![0i64; self.nvars];
        let mut first = true;
        for e in self.terms.keys() {
            for (m, &x) in mins.iter_mut().zip(e.entries()) {
                *m = if first { x } else { (*m).min(x) };
            }
            first = false;
        }
        ExponentVector(mins)
    }

    /// True if no term has a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.0.iter().all(|&x| x >= 0))
    }

    /// Splits `self = numerator / x^d` with `d >= 0` minimal and the numerator a polynomial.
    pub fn as_fraction(&self) -> (Self, ExponentVector) {
        let den = ExponentVector(self.min_exponents().0.iter().map(|&m| (-m).max(0)).collect());
        (self.mul_monomial(&den), den)
    }
}

impl<C: Coefficient + Integer> Laurent<C> {
    /// Exact division in the Laurent polynomial ring; errors on a nonzero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::NonExactDivision("division by zero".into()));
        }
        // Move both into the polynomial ring; the divisor keeps no monomial factor.
        let (num, num_shift) = self.as_fraction();
        let g_shift = divisor.min_exponents();
        let g = divisor.mul_monomial(&g_shift.neg());
        let (lead_g, lead_gc) = g.terms.iter().next_back().expect("nonzero");

        let mut rem = num;
        let mut quot = Self::zero(self.nvars);
        while let Some((lead_r, lead_rc)) = rem.terms.iter().next_back() {
            if !lead_r.dominates(lead_g) || !lead_rc.is_multiple_of(lead_gc) {
                return Err(Error::NonExactDivision(format!(
                    "{} does not divide {}",
                    divisor, self
                )));
            }
            let t = Self::monomial(lead_r.sub(lead_g), lead_rc.clone() / lead_gc.clone());
            rem = &rem - &(&t * &g);
            quot.add_term(
                t.terms.keys().next().unwrap().clone(),
                t.terms.values().next().unwrap().clone(),
            );
        }
        // self = num * x^-num_shift, divisor = g * x^g_shift
        Ok(quot.mul_monomial(&num_shift.add(&g_shift).neg()))
    }
}

impl<C: Coefficient> Add for &Laurent<C> {
    type Output = Laurent<C>;
    /// Panics on a variable-count mismatch; see [`Laurent::checked_add`].
    fn add(self, rhs: Self) -> Laurent<C> {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl<C: Coefficient> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl<C: Coefficient> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        self.negated()
    }
}

// ---------------------------------------------------------------------------
// Text form

/// Default variable names `x1..xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn render_monomial(e: &ExponentVector, names: &[String]) -> String {
    e.entries()
        .iter()
        .zip(names)
        .filter(|(&x, _)| x != 0)
        .map(|(&x, name)| {
            if x == 1 {
                name.clone()
            } else {
                format!("{name}^{x}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn render_terms<'a, C: Coefficient + Display + 'a>(
    terms: impl Iterator<Item = (&'a ExponentVector, &'a C)>,
    names: &[String],
) -> String {
    let mut out = String::new();
    for (i, (e, c)) in terms.enumerate() {
        let negative = *c < C::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = render_monomial(e, names);
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<C: Coefficient + Display> Laurent<C> {
    /// Canonical rendering with the given variable names.
    pub fn render_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        render_terms(self.terms.iter().rev(), names)
    }

    /// Terms ordered by descending exponent vectors compared from the last variable backwards.
    pub fn render_reverse_lex(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.entries().iter().rev().cmp(a.entries().iter().rev()));
        render_terms(terms.into_iter(), names)
    }

    /// `(numerator) / (monomial)` form, or just the numerator when the denominator is 1.
    pub fn render_fraction(&self, names: &[String]) -> String {
        let (num, den) = self.as_fraction();
        if den.is_zero() {
            return num.render_reverse_lex(names);
        }
        format!(
            "({}) / ({})",
            num.render_reverse_lex(names),
            render_monomial(&den, names)
        )
    }
}

impl<C: Coefficient + Display> Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&default_names(self.nvars)))
    }
}

impl<C: Coefficient + Display> Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

struct Parser<'s> {
    src: &'s [u8],
    pos: usize,
}

impl<'s> Parser<'s> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: 1,
            msg: format!("{msg} at column {}", self.pos + 1),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'s str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn ident(&mut self) -> Option<&'s str> {
        let start = self.pos;
        if !self.peek().is_some_and(|b| b.is_ascii_alphabetic() || b == b'_') {
            return None;
        }
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_')
        {
            self.pos += 1;
        }
        Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }
}

impl<C: Coefficient + FromStr> Laurent<C> {
    /// Parses the canonical syntax; also accepts extra spaces, a leading `-`,
    /// and parenthesized integer coefficients such as `(-3)*x1`.
    pub fn parse_with(text: &str, names: &[String]) -> Result<Self> {
        let nvars = names.len();
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let mut out = Self::zero(nvars);
        p.skip_ws();
        let mut negative = false;
        if p.eat(b'-') {
            negative = true;
        } else {
            p.eat(b'+');
        }
        loop {
            p.skip_ws();
            let (e, c) = Self::parse_term(&mut p, names)?;
            out.add_term(e, if negative { -c } else { c });
            p.skip_ws();
            match p.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(p.err("expected `+` or `-`")),
            }
            p.pos += 1;
        }
        Ok(out)
    }

    fn parse_term(p: &mut Parser<'_>, names: &[String]) -> Result<(ExponentVector, C)> {
        let mut e = ExponentVector::zero(names.len());
        let mut c = C::one();
        loop {
            p.skip_ws();
            if p.eat(b'(') {
                p.skip_ws();
                let neg = if p.eat(b'-') {
                    true
                } else {
                    p.eat(b'+');
                    false
                };
                p.skip_ws();
                let d = p.digits().ok_or_else(|| p.err("expected integer"))?;
                let v: C = d.parse().map_err(|_| p.err("bad integer"))?;
                c = c * if neg { -v } else { v };
                p.skip_ws();
                if !p.eat(b')') {
                    return Err(p.err("expected `)`"));
                }
            } else if let Some(d) = p.digits() {
                let v: C = d.parse().map_err(|_| p.err("bad integer"))?;
                c = c * v;
            } else if let Some(name) = p.ident() {
                let i = names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| p.err(&format!("unknown variable `{name}`")))?;
                let mut k = 1i64;
                p.skip_ws();
                if p.eat(b'^') {
                    p.skip_ws();
                    let neg = p.eat(b'-');
                    let d = p.digits().ok_or_else(|| p.err("expected exponent"))?;
                    k = d.parse().map_err(|_| p.err("bad exponent"))?;
                    if neg {
                        k = -k;
                    }
                }
                e.0[i] += k;
            } else {
                return Err(p.err("expected a factor"));
            }
            p.skip_ws();
            if !p.eat(b'*') {
                break;
            }
        }
        Ok((e, c))
    }
}

impl<C: Coefficient + FromStr> FromStr for Laurent<C> {
    type Err = Error;

    /// Parses using default names, inferring the variable count from the largest `x<i>` present.
    fn from_str(s: &str) -> Result<Self> {
        let mut n = 1;
        let bytes = s.as_bytes();
        for (i, b) in bytes.iter().enumerate() {
            if *b == b'x' {
                let digits: String = s[i + 1..].chars().take_while(|c| c.is_ascii_digit()).collect();
                if let Ok(k) = digits.parse::<usize>() {
                    n = n.max(k);
                }
            }
        }
        Self::parse_with(s, &default_names(n))
    }
}
