//! Exhaustive catalogs of small labeled posets and graphs.

use crate::graph::Graph;
use crate::poset::BicoloredPoset;

/// Every strict partial order on `0..n` (labeled), with no celeste elements.
///
/// Counts for `n = 0..=4` are 1, 1, 3, 19, 219.
pub fn posets(n: usize) -> Vec<BicoloredPoset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    assert!(pairs.len() < 32, "catalog only supports tiny posets");
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let rel: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        let antisymmetric = rel.iter().all(|&(a, b)| !rel.contains(&(b, a)));
        if !antisymmetric {
            continue;
        }
        let transitive = rel.iter().all(|&(a, b)| {
            rel.iter()
                .filter(|&&(c, _)| c == b)
                .all(|&(_, d)| rel.contains(&(a, d)))
        });
        if transitive {
            out.push(BicoloredPoset::new(n, &rel, &[]).expect("transitive antisymmetric relation"));
        }
    }
    out
}

/// Every subset of `0..n`, as sorted index lists.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u64..(1 << n))
        .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect()
}

/// Every labeled poset on at most `max_n` elements, with every celeste subset.
pub fn bicolored_posets(max_n: usize) -> Vec<BicoloredPoset> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for p in posets(n) {
            for c in subsets(n) {
                out.push(p.with_celeste(&c).expect("subset in range"));
            }
        }
    }
    out
}

/// Every labeled simple graph on `0..n`.
pub fn graphs(n: usize) -> Vec<Graph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..(1 << slots.len()))
        .map(|m| {
            let edges: Vec<_> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| m & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).expect("simple graph")
        })
        .collect()
}

/// Every labeled graph on at most `max_n` vertices.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    (0..=max_n).flat_map(graphs).collect()
}
