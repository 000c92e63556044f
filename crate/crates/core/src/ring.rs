//! Exact arithmetic in the localized ring `Q[t, t^-1, (t-1)^-1]`.
//!
//! Every element is kept as a reduced fraction `num / (t^tpow (t-1)^upow)`
//! with `num` a dense rational polynomial. Reduction only ever has to
//! cancel the two primes `t` and `t - 1`, so canonical forms are unique
//! and equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::scan::Cursor;

/// Exact rational scalar.
pub type Rational = BigRational;

/// `n / d` as a rational; panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Parses `p` or `p/q` (optionally signed).
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let mut cur = Cursor::new(s);
    let negative = cur.eat('-');
    let r = scan_rational(&mut cur)?.ok_or_else(|| cur.error(["rational number"]))?;
    cur.finish()?;
    Ok(if negative { -r } else { r })
}

/// An unsigned rational literal: `p` or `p/q` with a digit after the slash.
/// A slash followed by anything else is left in the input.
pub(crate) fn scan_rational(cur: &mut Cursor<'_>) -> Result<Option<Rational>, ParseError> {
    let Some(numer) = cur.uint() else {
        return Ok(None);
    };
    if cur.peek() == Some('/') && cur.peek_second().is_some_and(|c| c.is_ascii_digit()) {
        cur.eat('/');
        let at = cur.pos();
        let denom = cur.uint().expect("digit checked by lookahead");
        if denom.is_zero() {
            return Err(ParseError::new(at, ["positive denominator"]));
        }
        return Ok(Some(Rational::new(numer, denom)));
    }
    Ok(Some(Rational::from_integer(numer)))
}

/// Dense univariate polynomial over Q; `coeffs[i]` multiplies `t^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c t^n`
    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Poly::from_coeffs(coeffs)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    /// `(t - 1)^n`, expanded with binomial coefficients.
    pub fn t_minus_1_pow(n: u32) -> Self {
        let coeffs = (0..=n)
            .map(|k| {
                let c = Rational::from_integer(binomial(n, k));
                if (n - k) % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    fn value_at_one(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `t^n`.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Removes every factor of `t`, returning the count.
    fn strip_t(&mut self) -> u32 {
        let m = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if m > 0 && !self.is_zero() {
            self.coeffs.drain(..m);
        }
        m as u32
    }

    /// Synthetic division by `t - 1`; returns `(quotient, remainder)`.
    pub fn div_t_minus_1(&self) -> (Poly, Rational) {
        if self.is_zero() {
            return (Poly::zero(), Rational::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut q = vec![Rational::zero(); d];
        let mut carry = Rational::zero();
        for i in (1..=d).rev() {
            carry += &self.coeffs[i];
            q[i - 1] = carry.clone();
        }
        let rem = carry + &self.coeffs[0];
        (Poly::from_coeffs(q), rem)
    }

    /// Removes every factor of `t - 1`, returning the count.
    fn strip_t_minus_1(&mut self) -> u32 {
        let mut n = 0;
        while !self.is_zero() && self.value_at_one().is_zero() {
            let (q, _) = self.div_t_minus_1();
            *self = q;
            n += 1;
        }
        n
    }

    /// Coordinates `c_i` with `self = sum c_i * center^i`.
    pub fn shift_coords(&self, center: ShiftCenter) -> Vec<Rational> {
        match center {
            ShiftCenter::NegT => self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
            ShiftCenter::TMinus1 => {
                // Taylor shift p(s + 1), Horner style.
                let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
                for c in self.coeffs.iter().rev() {
                    // out <- out * (s + 1) + c
                    out.push(Rational::zero());
                    for i in (1..out.len()).rev() {
                        let prev = out[i - 1].clone();
                        out[i] += prev;
                    }
                    out[0] += c;
                }
                out
            }
        }
    }

    /// Inverse of [`Poly::shift_coords`].
    pub fn from_shift_coords(coords: &[Rational], center: ShiftCenter) -> Self {
        let base = center.as_poly();
        coords
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &base) + &Poly::constant(c.clone()))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Expansion point for [`Poly::shift_coords`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftCenter {
    /// powers of `t - 1`
    TMinus1,
    /// powers of `-t`
    NegT,
}

impl ShiftCenter {
    pub fn as_poly(self) -> Poly {
        match self {
            ShiftCenter::TMinus1 => Poly::from_ints(&[-1, 1]),
            ShiftCenter::NegT => Poly::from_ints(&[0, -1]),
        }
    }
}

/// The three ring automorphisms used by the symmetry group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingAut {
    /// `t -> 1 - 1/t` (order 3)
    Phi,
    /// `t -> 1/(1 - t)`, the square of `Phi`
    Phi2,
    /// `t -> 1 - t` (order 2)
    TauA,
}

/// Subsets of the ring used to carve out the Onsager subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subring {
    /// `Q[t]`
    Poly,
    /// `t Q[t]`
    TPoly,
    /// `(t-1) Q[t]`
    Tm1Poly,
}

/// Canonical element `num / (t^tpow (t-1)^upow)`.
///
/// Invariants: `tpow > 0` implies `num(0) != 0`, `upow > 0` implies
/// `num(1) != 0`, and zero is `(0, 0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "RingElemJson", try_from = "RingElemJson")]
pub struct RingElem {
    num: Poly,
    tpow: u32,
    upow: u32,
}

impl RingElem {
    /// Canonical form of `num / (t^tpow (t-1)^upow)`.
    pub fn make(num: Poly, tpow: u32, upow: u32) -> Self {
        RingElem::from_laurent(num, -i64::from(tpow), -i64::from(upow))
    }

    /// Canonical form of `num * t^texp * (t-1)^uexp` for signed exponents.
    fn from_laurent(mut num: Poly, texp: i64, uexp: i64) -> Self {
        if num.is_zero() {
            return RingElem::zero();
        }
        let texp = texp + i64::from(num.strip_t());
        let uexp = uexp + i64::from(num.strip_t_minus_1());
        if texp > 0 {
            num = num.shift_up(texp as usize);
        }
        if uexp > 0 {
            num = &num * &Poly::t_minus_1_pow(uexp as u32);
        }
        RingElem {
            num,
            tpow: (-texp).max(0) as u32,
            upow: (-uexp).max(0) as u32,
        }
    }

    pub fn zero() -> Self {
        RingElem {
            num: Poly::zero(),
            tpow: 0,
            upow: 0,
        }
    }

    pub fn one() -> Self {
        RingElem::from_poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        RingElem::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        RingElem::constant(int(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        RingElem {
            num: p,
            tpow: 0,
            upow: 0,
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        RingElem::from_poly(Poly::from_ints(coeffs))
    }

    /// `t`
    pub fn t() -> Self {
        RingElem::from_poly(Poly::t())
    }

    /// `t - 1`
    pub fn t_minus_1() -> Self {
        RingElem::from_ints(&[-1, 1])
    }

    /// `t^n` for any integer `n`.
    pub fn t_pow(n: i64) -> Self {
        RingElem::from_laurent(Poly::one(), n, 0)
    }

    /// `(t - 1)^n` for any integer `n`.
    pub fn t_minus_1_pow(n: i64) -> Self {
        RingElem::from_laurent(Poly::one(), 0, n)
    }

    /// `(-t)^n`, `n >= 0`.
    pub fn neg_t_pow(n: u32) -> Self {
        let sign = if n % 2 == 1 { -1 } else { 1 };
        RingElem::from_poly(Poly::monomial(int(sign), n as usize))
    }

    /// `t' = (t - 1)/t`
    pub fn t_prime() -> Self {
        RingElem::make(Poly::from_ints(&[-1, 1]), 1, 0)
    }

    /// `t'' = 1/(1 - t)`
    pub fn t_double_prime() -> Self {
        RingElem::make(Poly::from_ints(&[-1]), 0, 1)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn tpow(&self) -> u32 {
        self.tpow
    }

    pub fn upow(&self) -> u32 {
        self.upow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == RingElem::one()
    }

    /// The polynomial, when the element has no denominator.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.tpow == 0 && self.upow == 0).then_some(&self.num)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RingElem {
            num: self.num.scale(c),
            tpow: if c.is_zero() { 0 } else { self.tpow },
            upow: if c.is_zero() { 0 } else { self.upow },
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(RingElem::one(), |acc, _| &acc * self)
    }

    /// Inverse, for units `c t^m (t-1)^n`; `None` otherwise.
    pub fn inverse(&self) -> Option<Self> {
        let mut rest = self.num.clone();
        let m = rest.strip_t();
        let n = rest.strip_t_minus_1();
        if rest.degree() != Some(0) {
            return None;
        }
        let c = rest.coeff(0);
        Some(RingElem::from_laurent(
            Poly::constant(c.recip()),
            i64::from(self.tpow) - i64::from(m),
            i64::from(self.upow) - i64::from(n),
        ))
    }

    /// Applies the substitution homomorphism for `which`.
    pub fn apply_aut(&self, which: RingAut) -> Self {
        if self.is_zero() {
            return RingElem::zero();
        }
        let image_t = match which {
            RingAut::Phi => RingElem::t_prime(),
            RingAut::Phi2 => RingElem::t_double_prime(),
            RingAut::TauA => RingElem::from_ints(&[1, -1]),
        };
        let image_tm1 = &image_t - &RingElem::one();
        let numer = self
            .num
            .coeffs()
            .iter()
            .rev()
            .fold(RingElem::zero(), |acc, c| &(&acc * &image_t) + &RingElem::constant(c.clone()));
        let inv_t = image_t.inverse().expect("image of t is a unit");
        let inv_tm1 = image_tm1.inverse().expect("image of t-1 is a unit");
        &(&numer * &inv_t.pow(self.tpow)) * &inv_tm1.pow(self.upow)
    }

    pub fn in_subring(&self, which: Subring) -> bool {
        let Some(p) = self.as_poly() else {
            return false;
        };
        match which {
            Subring::Poly => true,
            Subring::TPoly => p.coeff(0).is_zero(),
            Subring::Tm1Poly => p.value_at_one().is_zero(),
        }
    }

    /// Exact quotient by `t`, when the result is a polynomial.
    pub fn div_t(&self) -> Self {
        RingElem::from_laurent(self.num.clone(), -i64::from(self.tpow) - 1, -i64::from(self.upow))
    }

    /// Exact quotient by `t - 1`.
    pub fn div_t_minus_1(&self) -> Self {
        RingElem::from_laurent(self.num.clone(), -i64::from(self.tpow), -i64::from(self.upow) - 1)
    }
}

impl Default for RingElem {
    fn default() -> Self {
        RingElem::zero()
    }
}

impl From<Poly> for RingElem {
    fn from(p: Poly) -> Self {
        RingElem::from_poly(p)
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    // Sums go through a common denominator.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: &RingElem) -> RingElem {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let tp = self.tpow.max(rhs.tpow);
        let up = self.upow.max(rhs.upow);
        let lift = |e: &RingElem| {
            let p = e.num.shift_up((tp - e.tpow) as usize);
            &p * &Poly::t_minus_1_pow(up - e.upow)
        };
        RingElem::make(&lift(self) + &lift(rhs), tp, up)
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self + &(-rhs)
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        if self.is_zero() || rhs.is_zero() {
            return RingElem::zero();
        }
        RingElem::make(&self.num * &rhs.num, self.tpow + rhs.tpow, self.upow + rhs.upow)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            num: -&self.num,
            tpow: self.tpow,
            upow: self.upow,
        }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(RingElem, Add, add);
forward_owned_binop!(RingElem, Sub, sub);
forward_owned_binop!(RingElem, Mul, mul);
forward_owned_binop!(Poly, Add, add);
forward_owned_binop!(Poly, Sub, sub);
forward_owned_binop!(Poly, Mul, mul);

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

/// Writes a single `c t^k` term; `c` is printed without its sign when
/// `unsigned` is set.
fn write_term(f: &mut impl fmt::Write, c: &Rational, k: usize, unsigned: bool) -> fmt::Result {
    let c = if unsigned { c.abs() } else { c.clone() };
    if k == 0 {
        return write!(f, "{c}");
    }
    if c.is_one() {
    } else if (-&c).is_one() {
        write!(f, "-")?;
    } else if c.is_integer() {
        write!(f, "{c}")?;
    } else {
        write!(f, "{c} ")?;
    }
    if k == 1 {
        write!(f, "t")
    } else {
        write!(f, "t^{k}")
    }
}

fn write_poly_terms(f: &mut impl fmt::Write, p: &Poly) -> fmt::Result {
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if first {
            write_term(f, c, k, false)?;
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
            write_term(f, c, k, true)?;
        } else {
            write!(f, " + ")?;
            write_term(f, c, k, true)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly_terms(f, self)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.num.coeffs().iter().filter(|c| !c.is_zero()).count();
        let has_denominator = self.tpow > 0 || self.upow > 0;
        if has_denominator && terms > 1 {
            write!(f, "(")?;
            write_poly_terms(f, &self.num)?;
            write!(f, ")")?;
        } else {
            write_poly_terms(f, &self.num)?;
        }
        match self.tpow {
            0 => {}
            1 => write!(f, " / t")?,
            a => write!(f, " / t^{a}")?,
        }
        match self.upow {
            0 => {}
            1 => write!(f, " / (t-1)")?,
            b => write!(f, " / (t-1)^{b}")?,
        }
        Ok(())
    }
}

impl RingElem {
    /// Number of printed numerator terms; used to decide on parentheses.
    pub(crate) fn is_single_term(&self) -> bool {
        self.tpow == 0
            && self.upow == 0
            && self.num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// Sign of a single-term polynomial element.
    pub(crate) fn leading_is_negative(&self) -> bool {
        self.num
            .coeffs()
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .is_some_and(Signed::is_negative)
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<Self, ParseError> {
        let num = if cur.eat('(') {
            let p = parse_terms(cur)?;
            cur.expect(')')?;
            p
        } else {
            parse_terms(cur)?
        };
        let mut tpow = 0;
        let mut upow = 0;
        while cur.peek() == Some('/') {
            cur.eat('/');
            if cur.eat('t') {
                tpow += parse_exponent(cur)?;
            } else if cur.eat('(') {
                for c in ['t', '-', '1', ')'] {
                    cur.expect(c)?;
                }
                upow += parse_exponent(cur)?;
            } else {
                return Err(cur.error(["'t'", "'(t-1)'"]));
            }
        }
        Ok(RingElem::make(num, tpow, upow))
    }
}

/// A single unsigned term `c`, `t^n` or `c t^n`.
pub(crate) fn parse_monomial(cur: &mut Cursor<'_>) -> Result<RingElem, ParseError> {
    let coeff = scan_rational(cur)?;
    let power = if cur.eat('t') { Some(parse_exponent(cur)? as usize) } else { None };
    if coeff.is_none() && power.is_none() {
        return Err(cur.error(["rational", "'t'", "'('"]));
    }
    let m = Poly::monomial(coeff.unwrap_or_else(Rational::one), power.unwrap_or(0));
    Ok(RingElem::from_poly(m))
}

fn parse_exponent(cur: &mut Cursor<'_>) -> Result<u32, ParseError> {
    if cur.eat('^') {
        cur.small_uint()
    } else {
        Ok(1)
    }
}

fn parse_terms(cur: &mut Cursor<'_>) -> Result<Poly, ParseError> {
    let mut acc = Poly::zero();
    let mut negative = cur.eat('-');
    if !negative {
        cur.eat('+');
    }
    loop {
        let coeff = scan_rational(cur)?;
        let power = if cur.eat('t') {
            Some(parse_exponent(cur)? as usize)
        } else {
            None
        };
        let term = match (coeff, power) {
            (None, None) => return Err(cur.error(["rational", "'t'"])),
            (c, p) => Poly::monomial(c.unwrap_or_else(Rational::one), p.unwrap_or(0)),
        };
        acc = if negative { &acc - &term } else { &acc + &term };
        if cur.eat('+') {
            negative = false;
        } else if cur.peek() == Some('-') {
            cur.eat('-');
            negative = true;
        } else {
            return Ok(acc);
        }
    }
}

impl FromStr for RingElem {
    type Err = ParseError;

    /// Parses the rendering produced by `Display`, e.g. `(1 + t) / t^2 / (t-1)`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        let e = RingElem::parse_from(&mut cur)?;
        cur.finish()?;
        Ok(e)
    }
}

/// Wire form: `{"num": ["c0", "c1", ...], "tpow": a, "upow": b}`.
#[derive(Serialize, Deserialize)]
struct RingElemJson {
    num: Vec<String>,
    tpow: u32,
    upow: u32,
}

impl From<RingElem> for RingElemJson {
    fn from(e: RingElem) -> Self {
        RingElemJson {
            num: e.num.coeffs().iter().map(ToString::to_string).collect(),
            tpow: e.tpow,
            upow: e.upow,
        }
    }
}

impl TryFrom<RingElemJson> for RingElem {
    type Error = ParseError;
    fn try_from(j: RingElemJson) -> Result<Self, ParseError> {
        let coeffs = j
            .num
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RingElem::make(Poly::from_coeffs(coeffs), j.tpow, j.upow))
    }
}
