//! Bicolored posets, labelings, linear extensions and label words.
//!
//! Elements are the indices `0..n`. Labels are `1..=n`. Relations are stored
//! as predecessor bitmasks, which caps posets at 64 elements; every
//! enumeration here is exponential long before that.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the element count of a [`BicoloredPoset`].
pub const MAX_ELEMENTS: usize = 64;

/// A finite strict partial order whose elements are split into celeste and
/// silver classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BicoloredPoset {
    n: usize,
    /// `below[b]` has bit `a` set iff `a < b`.
    below: Vec<u64>,
    celeste: Vec<bool>,
}

impl BicoloredPoset {
    /// Builds a poset from any generating relation; the transitive closure is
    /// computed and checked for cycles.
    pub fn new(n: usize, pairs: &[(usize, usize)], celeste: &[usize]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(n));
        }
        let mut below = vec![0u64; n];
        for &(a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::OutOfRange { index: v, size: n });
                }
            }
            if a == b {
                return Err(Error::Cycle(a));
            }
            if below[b] & (1 << a) != 0 {
                return Err(Error::DuplicatePair(a, b));
            }
            below[b] |= 1 << a;
        }
        // Warshall over bitmasks.
        for k in 0..n {
            for b in 0..n {
                if below[b] & (1 << k) != 0 {
                    below[b] |= below[k];
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| below[a] & (1 << a) != 0) {
            return Err(Error::Cycle(a));
        }
        let mut flags = vec![false; n];
        for &c in celeste {
            if c >= n {
                return Err(Error::OutOfRange { index: c, size: n });
            }
            flags[c] = true;
        }
        Ok(BicoloredPoset {
            n,
            below,
            celeste: flags,
        })
    }

    pub fn chain(n: usize, celeste: &[usize]) -> Result<Self> {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &pairs, celeste)
    }

    pub fn antichain(n: usize, celeste: &[usize]) -> Result<Self> {
        Self::new(n, &[], celeste)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `a < b` in the poset.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.below[b] & (1 << a) != 0
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    /// Bitmask of the strict predecessors of `b`.
    pub fn below_mask(&self, b: usize) -> u64 {
        self.below[b]
    }

    pub fn is_celeste(&self, a: usize) -> bool {
        self.celeste[a]
    }

    pub fn celeste(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.celeste[a]).collect()
    }

    /// Same order, different celeste set.
    pub fn with_celeste(&self, celeste: &[usize]) -> Result<Self> {
        let mut flags = vec![false; self.n];
        for &c in celeste {
            if c >= self.n {
                return Err(Error::OutOfRange { index: c, size: self.n });
            }
            flags[c] = true;
        }
        Ok(BicoloredPoset {
            celeste: flags,
            ..self.clone()
        })
    }

    /// All pairs `(a, b)` with `a < b`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Cover relations of the Hasse diagram, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| !(0..self.n).any(|m| self.lt(a, m) && self.lt(m, b)))
            .collect()
    }

    /// The order-reversed poset with the same celeste set.
    pub fn dual(&self) -> Self {
        let mut below = vec![0u64; self.n];
        for (a, b) in self.relations() {
            below[a] |= 1 << b;
        }
        BicoloredPoset {
            n: self.n,
            below,
            celeste: self.celeste.clone(),
        }
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            n: self.n,
            covers: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
            celeste: self.celeste(),
        }
    }

    pub fn from_json(json: &PosetJson) -> Result<Self> {
        let pairs: Vec<_> = json.covers.iter().map(|p| (p[0], p[1])).collect();
        Self::new(json.n, &pairs, &json.celeste)
    }

    /// All linear extensions, lexicographic by element index.
    pub fn linear_extensions(&self) -> Vec<LinearExtension> {
        let mut out = Vec::new();
        let mut order = Vec::with_capacity(self.n);
        self.extend_from(0, &mut order, &mut out);
        out
    }

    fn extend_from(&self, placed: u64, order: &mut Vec<usize>, out: &mut Vec<LinearExtension>) {
        if order.len() == self.n {
            out.push(LinearExtension { order: order.clone() });
            return;
        }
        for a in 0..self.n {
            if placed & (1 << a) == 0 && self.below[a] & !placed == 0 {
                order.push(a);
                self.extend_from(placed | (1 << a), order, out);
                order.pop();
            }
        }
    }

    /// Smallest-index-first topological order.
    fn first_extension(&self) -> Vec<usize> {
        let mut placed = 0u64;
        let mut order = Vec::with_capacity(self.n);
        while order.len() < self.n {
            let a = (0..self.n)
                .find(|&a| placed & (1 << a) == 0 && self.below[a] & !placed == 0)
                .expect("acyclic relation always has a minimal element");
            placed |= 1 << a;
            order.push(a);
        }
        order
    }

    /// Labels elements in smallest-index-first topological order.
    pub fn natural_labeling(&self) -> Labeling {
        Labeling::from_order(&self.first_extension())
    }

    /// Labels elements in smallest-index-first topological order of the dual.
    pub fn reverse_natural_labeling(&self) -> Labeling {
        Labeling::from_order(&self.dual().first_extension())
    }

    /// Every natural labeling; they correspond one-to-one with linear extensions.
    pub fn natural_labelings(&self) -> Vec<Labeling> {
        self.linear_extensions()
            .iter()
            .map(|l| Labeling::from_order(&l.order))
            .collect()
    }

    pub fn reverse_natural_labelings(&self) -> Vec<Labeling> {
        self.dual().natural_labelings()
    }

    /// The label word of `ext` under `lab`, with the position of the first
    /// celeste element.
    pub fn word_of(&self, ext: &LinearExtension, lab: &Labeling) -> Word {
        let letters = ext.order.iter().map(|&a| lab.label(a)).collect();
        let celeste_pos = ext.order.iter().position(|&a| self.celeste[a]).map(|p| p + 1);
        Word { letters, celeste_pos }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    #[serde(default)]
    pub covers: Vec<[usize; 2]>,
    #[serde(default)]
    pub celeste: Vec<usize>,
}

/// A total order on all elements, listed bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension {
    pub order: Vec<usize>,
}

impl LinearExtension {
    pub fn refines(&self, poset: &BicoloredPoset) -> bool {
        if self.order.len() != poset.len() {
            return false;
        }
        let mut seen = 0u64;
        for &a in &self.order {
            if a >= poset.len() || seen & (1 << a) != 0 || poset.below_mask(a) & !seen != 0 {
                return false;
            }
            seen |= 1 << a;
        }
        true
    }
}

/// A bijection from elements to `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for &l in &labels {
            if l == 0 || l > n || seen[l] {
                return Err(Error::InvalidLabeling(format!(
                    "{labels:?} is not a bijection onto 1..={n}"
                )));
            }
            seen[l] = true;
        }
        Ok(Labeling { labels })
    }

    pub fn identity(n: usize) -> Self {
        Labeling {
            labels: (1..=n).collect(),
        }
    }

    /// Element `order[p]` gets label `p + 1`.
    fn from_order(order: &[usize]) -> Self {
        let mut labels = vec![0; order.len()];
        for (p, &a) in order.iter().enumerate() {
            labels[a] = p + 1;
        }
        Labeling { labels }
    }

    pub fn label(&self, a: usize) -> usize {
        self.labels[a]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn is_natural(&self, poset: &BicoloredPoset) -> bool {
        self.labels.len() == poset.len() && poset.relations().iter().all(|&(a, b)| self.labels[a] < self.labels[b])
    }

    pub fn is_reverse_natural(&self, poset: &BicoloredPoset) -> bool {
        self.labels.len() == poset.len() && poset.relations().iter().all(|&(a, b)| self.labels[a] > self.labels[b])
    }
}

/// Labels of a linear extension read bottom to top, together with the 1-based
/// position of its lowest celeste element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
    celeste_pos: Option<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>, celeste_pos: Option<usize>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &l in &letters {
            if l == 0 || l > n || seen[l] {
                return Err(Error::MalformedWord(format!(
                    "{letters:?} is not a permutation of 1..={n}"
                )));
            }
            seen[l] = true;
        }
        if let Some(p) = celeste_pos {
            if p == 0 || p > n {
                return Err(Error::MalformedWord(format!("celeste position {p} outside 1..={n}")));
            }
        }
        Ok(Word { letters, celeste_pos })
    }

    /// Parses a digit string such as `"14235"` (only for words of length < 10).
    pub fn from_digits(digits: &str, celeste_pos: Option<usize>) -> Result<Self> {
        let letters = digits
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::MalformedWord(digits.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters, celeste_pos)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn celeste_pos(&self) -> Option<usize> {
        self.celeste_pos
    }

    /// Number of elements below the lowest celeste one; `n` when there is none.
    pub fn k(&self) -> usize {
        self.celeste_pos.map_or(self.len(), |p| p - 1)
    }

    /// 1-based ascent and descent positions.
    pub fn asc_des(&self) -> (Vec<usize>, Vec<usize>) {
        let mut asc = Vec::new();
        let mut des = Vec::new();
        for (j, w) in self.letters.windows(2).enumerate() {
            if w[0] < w[1] {
                asc.push(j + 1);
            } else {
                des.push(j + 1);
            }
        }
        (asc, des)
    }

    pub fn asc(&self) -> usize {
        count_ascents(&self.letters)
    }

    pub fn des(&self) -> usize {
        count_descents(&self.letters)
    }

    /// Letters through the celeste position (the whole word if there is none).
    pub fn celeste_prefix(&self) -> &[usize] {
        &self.letters[..self.celeste_pos.unwrap_or(self.len())]
    }

    /// Letters in reverse order; the celeste position is mirrored to `n + 1 - p`.
    pub fn reverse(&self) -> Word {
        let n = self.len();
        Word {
            letters: self.letters.iter().rev().copied().collect(),
            celeste_pos: self.celeste_pos.map(|p| n + 1 - p),
        }
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sep = if self.letters.iter().any(|&l| l > 9) { " " } else { "" };
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&s.join(sep))
    }
}

pub fn count_ascents(letters: &[usize]) -> usize {
    letters.windows(2).filter(|w| w[0] < w[1]).count()
}

pub fn count_descents(letters: &[usize]) -> usize {
    letters.windows(2).filter(|w| w[0] > w[1]).count()
}
