//! Brute-force counters and polynomial interpolation.
//!
//! These never touch linear extensions or closed forms: they enumerate maps
//! `P -> [x]` directly and filter by the defining conditions. The enumeration
//! assigns elements one at a time and abandons a partial map as soon as it
//! violates a relation, which visits every valid map exactly once.

use std::collections::HashMap;

use crate::error::Result;
use crate::orderpoly::Mode;
use crate::poset::{BicoloredPoset, Word};
use crate::ratpoly::BiPoly;
use crate::scalar::{Budget, Field};

/// Histogram of valid maps keyed by the smallest value taken on a celeste
/// element. Slot `x0 + 1` collects maps on posets without celeste elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CelesteProfile {
    hist: Vec<u64>,
}

impl CelesteProfile {
    fn new(x0: u64) -> Self {
        CelesteProfile {
            hist: vec![0; x0 as usize + 2],
        }
    }

    /// Maps whose celeste values all exceed `y0`.
    pub fn above(&self, y0: u64) -> u64 {
        let start = (y0 as usize + 1).min(self.hist.len());
        self.hist[start..].iter().sum()
    }

    /// Maps whose celeste values are all at least `y0`.
    pub fn at_least(&self, y0: u64) -> u64 {
        let start = (y0 as usize).min(self.hist.len());
        self.hist[start..].iter().sum()
    }

    pub fn total(&self) -> u64 {
        self.hist.iter().sum()
    }

    pub fn count(&self, mode: Mode, y0: u64) -> u64 {
        match mode {
            Mode::Strict => self.above(y0),
            Mode::Weak => self.at_least(y0),
        }
    }
}

struct Enumerator<'a> {
    x0: u64,
    strict: bool,
    /// For element `i`: earlier elements (index < i) below it.
    lower: Vec<Vec<usize>>,
    /// For element `i`: earlier elements above it.
    upper: Vec<Vec<usize>>,
    celeste: Vec<bool>,
    values: Vec<u64>,
    profile: &'a mut CelesteProfile,
}

impl Enumerator<'_> {
    fn run(&mut self, i: usize, min_celeste: u64) {
        let n = self.values.len();
        if i == n {
            self.profile.hist[min_celeste as usize] += 1;
            return;
        }
        let mut lo = 1;
        let mut hi = self.x0;
        for &a in &self.lower[i] {
            lo = lo.max(self.values[a] + self.strict as u64);
        }
        for &a in &self.upper[i] {
            hi = hi.min(self.values[a].saturating_sub(self.strict as u64));
        }
        for v in lo..=hi {
            self.values[i] = v;
            let m = if self.celeste[i] {
                min_celeste.min(v)
            } else {
                min_celeste
            };
            self.run(i + 1, m);
        }
    }
}

/// Enumerates all order preserving maps `P -> [x0]` of the given kind and
/// records the smallest celeste value of each.
pub fn celeste_profile(poset: &BicoloredPoset, mode: Mode, x0: u64, budget: Budget) -> Result<CelesteProfile> {
    let n = poset.len();
    budget.admit_power(x0, n)?;
    let mut profile = CelesteProfile::new(x0);
    let lower = (0..n).map(|i| (0..i).filter(|&a| poset.lt(a, i)).collect()).collect();
    let upper = (0..n).map(|i| (0..i).filter(|&a| poset.lt(i, a)).collect()).collect();
    let mut e = Enumerator {
        x0,
        strict: mode == Mode::Strict,
        lower,
        upper,
        celeste: (0..n).map(|a| poset.is_celeste(a)).collect(),
        values: vec![0; n],
        profile: &mut profile,
    };
    e.run(0, x0 + 1);
    Ok(profile)
}

pub fn brute_count(poset: &BicoloredPoset, mode: Mode, x0: u64, y0: u64, budget: Budget) -> Result<u64> {
    Ok(celeste_profile(poset, mode, x0, budget)?.count(mode, y0))
}

/// Strictly order preserving maps `P -> [x0]` with every celeste value `> y0`.
pub fn brute_count_strict(poset: &BicoloredPoset, x0: u64, y0: u64, budget: Budget) -> Result<u64> {
    brute_count(poset, Mode::Strict, x0, y0, budget)
}

/// Weakly order preserving maps `P -> [x0]` with every celeste value `>= y0`.
pub fn brute_count_weak(poset: &BicoloredPoset, x0: u64, y0: u64, budget: Budget) -> Result<u64> {
    brute_count(poset, Mode::Weak, x0, y0, budget)
}

/// Classical (uncolored) order polynomial value: celeste constraints ignored.
pub fn brute_count_plain(poset: &BicoloredPoset, mode: Mode, x0: u64, budget: Budget) -> Result<u64> {
    Ok(celeste_profile(poset, mode, x0, budget)?.total())
}

/// Memoizing counter: one enumeration per `x0` answers every `y0`.
pub struct PosetCounter<'a> {
    poset: &'a BicoloredPoset,
    mode: Mode,
    budget: Budget,
    cache: HashMap<u64, CelesteProfile>,
}

impl<'a> PosetCounter<'a> {
    pub fn new(poset: &'a BicoloredPoset, mode: Mode, budget: Budget) -> Self {
        PosetCounter {
            poset,
            mode,
            budget,
            cache: HashMap::new(),
        }
    }

    pub fn count(&mut self, x0: u64, y0: u64) -> Result<u64> {
        if !self.cache.contains_key(&x0) {
            let profile = celeste_profile(self.poset, self.mode, x0, self.budget)?;
            self.cache.insert(x0, profile);
        }
        Ok(self.cache[&x0].count(self.mode, y0))
    }
}

/// Maps on the positions of `word` that are weak at ascents, strict at
/// descents, with the celeste position `> y0` (strict) or `>= y0` (weak).
pub fn brute_count_type(word: &Word, mode: Mode, x0: u64, y0: u64, budget: Budget) -> Result<u64> {
    let n = word.len();
    budget.admit_power(x0, n)?;
    let letters = word.letters();
    let threshold = match (word.celeste_pos(), mode) {
        (None, _) => None,
        (Some(p), Mode::Strict) => Some((p - 1, y0 + 1)),
        (Some(p), Mode::Weak) => Some((p - 1, y0)),
    };
    fn go(i: usize, prev: u64, letters: &[usize], x0: u64, threshold: Option<(usize, u64)>) -> u64 {
        if i == letters.len() {
            return 1;
        }
        let mut lo = if i == 0 {
            1
        } else if letters[i - 1] > letters[i] {
            prev + 1
        } else {
            prev
        };
        if let Some((pos, min)) = threshold {
            if pos == i {
                lo = lo.max(min);
            }
        }
        (lo..=x0).map(|v| go(i + 1, v, letters, x0, threshold)).sum()
    }
    Ok(go(0, 0, letters, x0, threshold))
}

/// Sample sets for interpolation of a polynomial of bidegree at most
/// `(n, n)`: `y` ranges over `0..=n` (strict) or `1..=n+1` (weak) and `x` over
/// `n + 1` consecutive values starting at `n + 2 + max(y)`, so `x > y`
/// everywhere on the grid.
pub fn interpolation_grid(n: usize, mode: Mode) -> (Vec<u64>, Vec<u64>) {
    let n64 = n as u64;
    let ys: Vec<u64> = match mode {
        Mode::Strict => (0..=n64).collect(),
        Mode::Weak => (1..=n64 + 1).collect(),
    };
    let x_start = n64 + 2 + ys.last().copied().unwrap_or(0);
    let xs = (x_start..=x_start + n64).collect();
    (xs, ys)
}

/// The unique polynomial of bidegree at most `(n, n)` agreeing with `counter`
/// on [`interpolation_grid`].
pub fn interpolate_poly<T, F>(n: usize, mode: Mode, mut counter: F) -> Result<BiPoly<T>>
where
    T: Field,
    F: FnMut(u64, u64) -> Result<u64>,
{
    let (xs, ys) = interpolation_grid(n, mode);
    let mut values = Vec::with_capacity(ys.len());
    for &y0 in &ys {
        let row = xs
            .iter()
            .map(|&x0| counter(x0, y0).map(T::from_count))
            .collect::<Result<Vec<_>>>()?;
        values.push(row);
    }
    let xs: Vec<T> = xs.into_iter().map(T::from_count).collect();
    let ys: Vec<T> = ys.into_iter().map(T::from_count).collect();
    Ok(interpolate_grid(&xs, &ys, &values))
}

/// Interpolates the order polynomial of `poset` from brute-force counts.
pub fn interpolate_order_poly<T: Field>(poset: &BicoloredPoset, mode: Mode, budget: Budget) -> Result<BiPoly<T>> {
    let mut counter = PosetCounter::new(poset, mode, budget);
    interpolate_poly(poset.len(), mode, |x0, y0| counter.count(x0, y0))
}

/// Coefficients (constant first) of the polynomial through `(xs[i], vs[i])`.
pub fn interpolate_1d<T: Field>(xs: &[T], vs: &[T]) -> Vec<T> {
    let m = xs.len();
    assert_eq!(m, vs.len(), "one value per node");
    // Newton divided differences, in place.
    let mut dd = vs.to_vec();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (dd[i].clone() - dd[i - 1].clone()) / (xs[i].clone() - xs[i - level].clone());
        }
    }
    // Expand the Newton form by Horner's rule.
    let mut coeffs: Vec<T> = vec![T::zero(); m.max(1)];
    for i in (0..m).rev() {
        // coeffs <- coeffs * (t - xs[i]) + dd[i]
        let mut next = vec![T::zero(); m.max(1)];
        for d in 0..m {
            if d + 1 < m {
                next[d + 1] = next[d + 1].clone() + coeffs[d].clone();
            }
            next[d] = next[d].clone() - coeffs[d].clone() * xs[i].clone();
        }
        next[0] = next[0].clone() + dd[i].clone();
        coeffs = next;
    }
    coeffs
}

/// Tensor-product interpolation: `values[j][i]` is the value at `(xs[i], ys[j])`.
pub fn interpolate_grid<T: Field>(xs: &[T], ys: &[T], values: &[Vec<T>]) -> BiPoly<T> {
    if xs.is_empty() || ys.is_empty() {
        return BiPoly::zero();
    }
    let per_y: Vec<Vec<T>> = values.iter().map(|row| interpolate_1d(xs, row)).collect();
    let mut terms = Vec::new();
    for dx in 0..xs.len() {
        let column: Vec<T> = per_y.iter().map(|c| c[dx].clone()).collect();
        for (dy, c) in interpolate_1d(ys, &column).into_iter().enumerate() {
            terms.push(((dx as u32, dy as u32), c));
        }
    }
    BiPoly::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::{fixtures, Poly, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn chain_counts() {
        let chain = fixtures::chain_celeste_top();
        assert_eq!(brute_count_strict(&chain, 3, 1, Budget::DEFAULT).unwrap(), 3);
        assert_eq!(brute_count_weak(&chain, 3, 2, Budget::DEFAULT).unwrap(), 5);
    }

    #[test]
    fn impossible_threshold() {
        let single = BicoloredPoset::antichain(1, &[0]).unwrap();
        assert_eq!(brute_count_strict(&single, 3, 3, Budget::DEFAULT).unwrap(), 0);
        assert_eq!(brute_count_weak(&single, 3, 3, Budget::DEFAULT).unwrap(), 1);
    }

    #[test]
    fn pentagon_regression() {
        // Frozen values, cross-checked against a plain itertools.product count.
        let p = fixtures::pentagon();
        assert_eq!(brute_count_strict(&p, 4, 1, Budget::DEFAULT).unwrap(), 2);
        assert_eq!(brute_count_strict(&p, 6, 1, Budget::DEFAULT).unwrap(), 48);
        assert_eq!(brute_count_weak(&p, 4, 1, Budget::DEFAULT).unwrap(), 98);
    }

    #[test]
    fn budget_enforced() {
        let p = BicoloredPoset::antichain(8, &[]).unwrap();
        assert!(matches!(
            brute_count_strict(&p, 10, 0, Budget(1000)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn type_counts() {
        let w12 = Word::from_digits("12", Some(2)).unwrap();
        assert_eq!(brute_count_type(&w12, Mode::Strict, 3, 1, Budget::DEFAULT).unwrap(), 5);
        let w21 = Word::from_digits("21", Some(2)).unwrap();
        assert_eq!(brute_count_type(&w21, Mode::Weak, 3, 2, Budget::DEFAULT).unwrap(), 3);
        assert_eq!(brute_count_type(&w21, Mode::Weak, 3, 1, Budget::DEFAULT).unwrap(), 3);
    }

    #[test]
    fn interpolation_examples() {
        let chain = fixtures::chain_celeste_top();
        let p: Poly = interpolate_order_poly(&chain, Mode::Strict, Budget::DEFAULT).unwrap();
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(
            p,
            (Poly::x().pow(2) - Poly::x() - Poly::y().pow(2) + Poly::y()).scale(&half)
        );

        let empty = BicoloredPoset::antichain(0, &[]).unwrap();
        assert_eq!(
            interpolate_order_poly::<Rational>(&empty, Mode::Strict, Budget::DEFAULT).unwrap(),
            Poly::one()
        );

        let single = BicoloredPoset::antichain(1, &[0]).unwrap();
        let w: Poly = interpolate_order_poly(&single, Mode::Weak, Budget::DEFAULT).unwrap();
        assert_eq!(w, Poly::x() - Poly::y() + Poly::one());
    }

    #[test]
    fn one_dimensional_interpolation() {
        // 2t^2 - 3t + 1 through t = 0, 1, 5
        let xs = [q(0), q(1), q(5)];
        let vs: Vec<_> = xs.iter().map(|t| q(2) * t * t - q(3) * t + q(1)).collect();
        assert_eq!(interpolate_1d(&xs, &vs), vec![q(1), q(-3), q(2)]);
    }

    #[test]
    fn grid_layout() {
        assert_eq!(interpolation_grid(2, Mode::Strict), (vec![6, 7, 8], vec![0, 1, 2]));
        assert_eq!(interpolation_grid(2, Mode::Weak), (vec![7, 8, 9], vec![1, 2, 3]));
    }
}
