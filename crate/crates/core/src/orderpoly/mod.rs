//! Bivariate order polynomials.
//!
//! A map `phi: P -> [x]` is *weakly* order preserving if `a < b` implies
//! `phi(a) <= phi(b)` and every celeste element satisfies `phi(c) >= y`; it is
//! *strictly* order preserving if `a < b` implies `phi(a) < phi(b)` and every
//! celeste element satisfies `phi(c) > y`. Counting either kind gives a
//! polynomial in `x` and `y`.
//!
//! The closed forms are layered:
//!
//! * [`chain_strict`] / [`chain_weak`] count maps on a chain whose lowest
//!   celeste element sits at position `k + 1`.
//! * [`type_strict`] / [`type_weak`] count maps on a linear extension that are
//!   weak at ascents and strict at descents of its label word. Shifting the
//!   values by the running ascent count (strict) or descent count (weak) turns
//!   these into chain counts, so they are chain polynomials with shifted
//!   arguments.
//! * [`omega_strict`] / [`omega_weak`] sum the type polynomials over all
//!   linear extensions, labeled reverse-naturally (strict) or naturally (weak).
//!
//! Counts agree with the polynomials for `0 <= y <= x` (strict) and
//! `1 <= y <= x + 1` (weak).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{count_ascents, count_descents, BicoloredPoset, Labeling, Word};
use crate::ratpoly::BiPoly;
use crate::scalar::Field;

pub mod check;
pub mod oracle;

pub use check::{check_oracle_poset, check_reciprocity_poset, check_word_reciprocity, WordReciprocityReading};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strict,
    Weak,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::Weak => "weak",
        })
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "strict" => Ok(Mode::Strict),
            "weak" => Ok(Mode::Weak),
            other => Err(format!("unknown mode {other:?} (expected strict or weak)")),
        }
    }
}

/// Strictly order preserving maps on an `n`-chain with `k` elements below the
/// lowest celeste one (`k = n`: no celeste element).
///
/// `sum_{i=0}^{k} C(y, i) C(x - y, n - i)`
pub fn chain_strict<T: Field>(n: usize, k: usize) -> Result<BiPoly<T>> {
    if k > n {
        return Err(Error::ChainParameter { n, k });
    }
    Ok(chain_strict_unchecked(n, k))
}

/// Weakly order preserving maps on an `n`-chain with `k` elements below the
/// lowest celeste one.
///
/// `sum_{i=0}^{k} C(y - 2 + i, i) C(x - y + n - i, n - i)`
pub fn chain_weak<T: Field>(n: usize, k: usize) -> Result<BiPoly<T>> {
    if k > n {
        return Err(Error::ChainParameter { n, k });
    }
    Ok(chain_weak_unchecked(n, k))
}

fn binom<T: Field>(arg: BiPoly<T>, m: usize) -> BiPoly<T> {
    BiPoly::binom_poly(&arg, m as u32).expect("affine argument")
}

fn chain_strict_unchecked<T: Field>(n: usize, k: usize) -> BiPoly<T> {
    (0..=k)
        .map(|i| binom(BiPoly::y(), i) * binom(BiPoly::affine(1, -1, 0), n - i))
        .sum()
}

fn chain_weak_unchecked<T: Field>(n: usize, k: usize) -> BiPoly<T> {
    (0..=k)
        .map(|i| binom(BiPoly::affine(0, 1, i as i64 - 2), i) * binom(BiPoly::affine(1, -1, (n - i) as i64), n - i))
        .sum()
}

/// Word statistics that determine a type polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct TypeKey {
    n: usize,
    k: usize,
    shift_x: i64,
    shift_y: i64,
}

impl TypeKey {
    fn of(word: &Word, mode: Mode) -> Self {
        let (total, prefix) = match mode {
            Mode::Strict => (
                count_ascents(word.letters()) as i64,
                count_ascents(word.celeste_prefix()) as i64,
            ),
            Mode::Weak => (
                -(count_descents(word.letters()) as i64),
                -(count_descents(word.celeste_prefix()) as i64),
            ),
        };
        TypeKey {
            n: word.len(),
            k: word.k(),
            shift_x: total,
            shift_y: prefix,
        }
    }

    fn polynomial<T: Field>(&self, mode: Mode) -> BiPoly<T> {
        let chain = match mode {
            Mode::Strict => chain_strict_unchecked(self.n, self.k),
            Mode::Weak => chain_weak_unchecked(self.n, self.k),
        };
        chain.substitute_shift(self.shift_x, self.shift_y)
    }
}

/// Maps on the linear extension behind `word` that are weak at ascents,
/// strict at descents, and put the lowest celeste element above `y`.
///
/// Equals `chain_strict(n, k)` evaluated at `(x + asc(w), y + asc(w'))` where
/// `w'` is the prefix of `w` through the celeste position.
pub fn type_strict<T: Field>(word: &Word) -> BiPoly<T> {
    TypeKey::of(word, Mode::Strict).polynomial(Mode::Strict)
}

/// Like [`type_strict`] with threshold `>= y`; equals `chain_weak(n, k)` at
/// `(x - des(w), y - des(w'))`.
pub fn type_weak<T: Field>(word: &Word) -> BiPoly<T> {
    TypeKey::of(word, Mode::Weak).polynomial(Mode::Weak)
}

pub fn type_poly<T: Field>(word: &Word, mode: Mode) -> BiPoly<T> {
    TypeKey::of(word, mode).polynomial(mode)
}

/// The labeling used by default in each mode: reverse natural for strict,
/// natural for weak.
pub fn default_labeling(poset: &BicoloredPoset, mode: Mode) -> Labeling {
    match mode {
        Mode::Strict => poset.reverse_natural_labeling(),
        Mode::Weak => poset.natural_labeling(),
    }
}

/// Label words of all linear extensions, one per extension.
pub fn decompose(poset: &BicoloredPoset, mode: Mode, labeling: &Labeling) -> Result<Vec<Word>> {
    let ok = match mode {
        Mode::Strict => labeling.is_reverse_natural(poset),
        Mode::Weak => labeling.is_natural(poset),
    };
    if !ok {
        let want = match mode {
            Mode::Strict => "reverse natural",
            Mode::Weak => "natural",
        };
        return Err(Error::InvalidLabeling(format!(
            "{:?} is not {want} for this poset",
            labeling.labels()
        )));
    }
    Ok(poset
        .linear_extensions()
        .iter()
        .map(|ext| poset.word_of(ext, labeling))
        .collect())
}

/// Order polynomial of `poset` computed as a sum of type polynomials under
/// the given labeling.
pub fn omega_with<T: Field>(poset: &BicoloredPoset, mode: Mode, labeling: &Labeling) -> Result<BiPoly<T>> {
    let words = decompose(poset, mode, labeling)?;
    // Many extensions share statistics; sum each distinct polynomial once.
    let mut groups: BTreeMap<TypeKey, i64> = BTreeMap::new();
    for w in &words {
        *groups.entry(TypeKey::of(w, mode)).or_default() += 1;
    }
    Ok(groups
        .iter()
        .map(|(key, &count)| key.polynomial::<T>(mode).scale(&T::from_int(count)))
        .sum())
}

pub fn omega<T: Field>(poset: &BicoloredPoset, mode: Mode) -> BiPoly<T> {
    omega_with(poset, mode, &default_labeling(poset, mode)).expect("default labeling has the right kind")
}

/// Number of strictly order preserving `(x, y)`-maps.
pub fn omega_strict<T: Field>(poset: &BicoloredPoset) -> BiPoly<T> {
    omega(poset, Mode::Strict)
}

/// Number of weakly order preserving `(x, y)`-maps.
pub fn omega_weak<T: Field>(poset: &BicoloredPoset) -> BiPoly<T> {
    omega(poset, Mode::Weak)
}
