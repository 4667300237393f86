#![allow(dead_code)]

use biorder::{BicoloredPoset, Poly, Rational, Word};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn b(arg: Poly, m: u32) -> Poly {
    Poly::binom_poly(&arg, m).unwrap()
}

pub fn c(v: i64) -> Poly {
    Poly::from_int(v)
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Every word of length `1..=max_len` with every celeste position (including none).
pub fn all_words(max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        for perm in permutations(n) {
            for pos in std::iter::once(None).chain((1..=n).map(Some)) {
                out.push(Word::new(perm.clone(), pos).unwrap());
            }
        }
    }
    out
}

/// Chain on `n` elements whose lowest celeste element has `k` elements below
/// it (`k == n`: no celeste element).
pub fn chain_with_k(n: usize, k: usize) -> BicoloredPoset {
    let celeste: Vec<usize> = if k < n { vec![k] } else { vec![] };
    BicoloredPoset::chain(n, &celeste).unwrap()
}
