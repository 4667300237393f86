//! Sparse bivariate polynomials in `x` and `y` over a coefficient field.
//!
//! Terms are kept in a `BTreeMap` keyed by `(deg_x, deg_y)` with zero
//! coefficients removed, so two equal polynomials always have identical term
//! maps and structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::Rational;

/// Exponent pair `(deg_x, deg_y)`.
pub type Exponents = (u32, u32);

#[derive(Debug, Clone, PartialEq)]
pub struct BiPoly<T> {
    terms: BTreeMap<Exponents, T>,
}

impl<T: Field> BiPoly<T> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(T::from_int(c))
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, T::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, T::one())
    }

    /// `c * x^dx * y^dy`.
    pub fn monomial(dx: u32, dy: u32, c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dx, dy), c);
        }
        BiPoly { terms }
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms<I: IntoIterator<Item = (Exponents, T)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> T {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_else(T::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: x-degree descending, then y-degree descending.
    pub fn terms(&self) -> Vec<(Exponents, &T)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c)).collect()
    }

    /// Degree in `x`; the zero polynomial has degree `None`.
    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0 + e.1).max()
    }

    /// True if no monomial mentions `y`.
    pub fn is_y_free(&self) -> bool {
        self.terms.keys().all(|e| e.1 == 0)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, x0: &T, y0: &T) -> T {
        let max_x = self.deg_x().unwrap_or(0) as usize;
        let max_y = self.deg_y().unwrap_or(0) as usize;
        let xs = powers(x0, max_x);
        let ys = powers(y0, max_y);
        self.terms.iter().fold(T::zero(), |acc, ((i, j), c)| {
            acc + c.clone() * xs[*i as usize].clone() * ys[*j as usize].clone()
        })
    }

    /// Evaluates at integer arguments.
    pub fn evaluate_int(&self, x0: i64, y0: i64) -> T {
        self.evaluate(&T::from_int(x0), &T::from_int(y0))
    }

    /// `p(-x, -y)`.
    pub fn substitute_negate(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i, j), if (i + j) % 2 == 1 { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    /// `p(x + sx, y + sy)`.
    pub fn substitute_shift(&self, sx: i64, sy: i64) -> Self {
        if sx == 0 && sy == 0 {
            return self.clone();
        }
        let xs = shifted_powers::<T>(sx, self.deg_x().unwrap_or(0));
        let ys = shifted_powers::<T>(sy, self.deg_y().unwrap_or(0));
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            // (x+sx)^i (y+sy)^j has no mixed cross terms, so products of the
            // two expansions are plain monomial pairings.
            for (a, ca) in &xs[i as usize] {
                for (b, cb) in &ys[j as usize] {
                    out.add_term((*a, *b), c.clone() * ca.clone() * cb.clone());
                }
            }
        }
        out
    }

    /// `p(x, y + s)`.
    pub fn substitute_shift_y(&self, s: i64) -> Self {
        self.substitute_shift(0, s)
    }

    /// `p(x, x)`.
    pub fn diagonal(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((i + j, 0), c.clone())))
    }

    /// `p(x, y0)`, a polynomial in `x` alone.
    pub fn restrict_y(&self, y0: &T) -> Self {
        let ys = powers(y0, self.deg_y().unwrap_or(0) as usize);
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&(i, j), c)| ((i, 0), c.clone() * ys[j as usize].clone())),
        )
    }

    /// Multiplies by `(-1)^n`.
    pub fn sign_power(&self, n: usize) -> Self {
        if n.is_multiple_of(2) {
            self.clone()
        } else {
            -self
        }
    }

    /// Generalized binomial coefficient `arg (arg-1) ... (arg-m+1) / m!` for an
    /// affine `arg`.
    pub fn binom_poly(arg: &Self, m: u32) -> Result<Self> {
        match arg.total_degree() {
            Some(d) if d > 1 => return Err(Error::NonAffineArgument(d)),
            _ => {}
        }
        let mut acc = Self::one();
        let mut factorial = T::one();
        for t in 0..m {
            acc = &acc * &(arg - &Self::from_int(t as i64));
            factorial = factorial * T::from_int(t as i64 + 1);
        }
        Ok(acc.scale(&(T::one() / factorial)))
    }

    /// Affine polynomial `a*x + b*y + c` with integer coefficients.
    pub fn affine(a: i64, b: i64, c: i64) -> Self {
        Self::from_terms([
            ((1, 0), T::from_int(a)),
            ((0, 1), T::from_int(b)),
            ((0, 0), T::from_int(c)),
        ])
    }
}

fn powers<T: Field>(v: &T, max: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(T::one());
    for i in 0..max {
        let next = out[i].clone() * v.clone();
        out.push(next);
    }
    out
}

/// For each `e` in `0..=max`, the nonzero terms `(r, coeff)` of `(v + s)^e`.
fn shifted_powers<T: Field>(s: i64, max: u32) -> Vec<Vec<(u32, T)>> {
    let s = T::from_int(s);
    let spow = powers(&s, max as usize);
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut row: Vec<T> = vec![T::one()];
    for e in 0..=max {
        if e > 0 {
            // Pascal row update.
            let mut next = vec![T::one(); e as usize + 1];
            for r in 1..e as usize {
                next[r] = row[r - 1].clone() + row[r].clone();
            }
            row = next;
        }
        let expansion = (0..=e)
            .map(|r| (r, row[r as usize].clone() * spow[(e - r) as usize].clone()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        out.push(expansion);
    }
    out
}

impl<T: Field> Default for BiPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Field> Add for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn add(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<T: Field> Sub for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn sub(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<T: Field> Mul for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn mul(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term((i + k, j + l), a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: Field> Neg for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn neg(self) -> BiPoly<T> {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Field> $tr for BiPoly<T> {
            type Output = BiPoly<T>;
            fn $m(self, rhs: BiPoly<T>) -> BiPoly<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Field> $tr<&BiPoly<T>> for BiPoly<T> {
            type Output = BiPoly<T>;
            fn $m(self, rhs: &BiPoly<T>) -> BiPoly<T> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Field> Neg for BiPoly<T> {
    type Output = BiPoly<T>;
    fn neg(self) -> BiPoly<T> {
        -&self
    }
}

impl<T: Field> std::iter::Sum for BiPoly<T> {
    fn sum<I: Iterator<Item = BiPoly<T>>>(iter: I) -> Self {
        iter.fold(BiPoly::zero(), |acc, p| acc + p)
    }
}

impl<T: Field + fmt::Display> fmt::Display for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, ((i, j), c)) in self.terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || (i == 0 && j == 0) {
                factors.push(magnitude.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("y".into()),
                _ => factors.push(format!("y^{j}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// One term of the polynomial JSON form. Numerals are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub dx: u32,
    pub dy: u32,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

impl BiPoly<Rational> {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms()
                .into_iter()
                .map(|((dx, dy), c)| TermJson {
                    dx,
                    dy,
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self> {
        let mut p = Self::zero();
        for t in &json.terms {
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| Error::MalformedPoly(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| Error::MalformedPoly(format!("bad denominator {:?}", t.den)))?;
            if den.is_zero() {
                return Err(Error::MalformedPoly("zero denominator".into()));
            }
            p.add_term((t.dx, t.dy), Rational::new(num, den));
        }
        Ok(p)
    }
}
