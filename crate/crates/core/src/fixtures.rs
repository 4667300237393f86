//! Named posets and graphs used by the tests, the acceptance suite and the
//! shipped JSON fixtures.

use crate::graph::Graph;
use crate::poset::BicoloredPoset;

/// Two-element chain `0 < 1` with the top element celeste.
pub fn chain_celeste_top() -> BicoloredPoset {
    BicoloredPoset::new(2, &[(0, 1)], &[1]).expect("valid fixture")
}

/// Five elements `a..e = 0..4` with covers `a<b<c<e`, `a<d<e` and `c` celeste.
///
/// Its linear extensions read `12345`, `12435`, `14235` under the identity
/// labeling.
pub fn pentagon() -> BicoloredPoset {
    BicoloredPoset::new(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], &[2]).expect("valid fixture")
}

/// Zigzag `0 < 1 > 2 < 3 > ...` on `n` elements.
pub fn fence(n: usize, celeste: &[usize]) -> BicoloredPoset {
    let pairs: Vec<_> = (1..n)
        .map(|i| if i % 2 == 1 { (i - 1, i) } else { (i, i - 1) })
        .collect();
    BicoloredPoset::new(n, &pairs, celeste).expect("valid fixture")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("valid fixture")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("valid fixture")
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((0, n - 1));
    }
    Graph::new(n, &edges).expect("valid fixture")
}

pub fn edgeless(n: usize) -> Graph {
    Graph::new(n, &[]).expect("valid fixture")
}

/// Named posets with up to six elements.
pub fn named_posets() -> Vec<(String, BicoloredPoset)> {
    let mut out = vec![
        ("chain2-celeste-top".to_string(), chain_celeste_top()),
        ("pentagon".to_string(), pentagon()),
    ];
    for n in 1..=6 {
        out.push((
            format!("chain{n}-celeste-mid"),
            BicoloredPoset::chain(n, &[n / 2]).expect("valid fixture"),
        ));
        out.push((format!("fence{n}-celeste-ends"), fence(n, &[0, n - 1])));
    }
    for n in 1..=5 {
        out.push((
            format!("antichain{n}-celeste-first"),
            BicoloredPoset::antichain(n, &[0]).expect("valid fixture"),
        ));
    }
    out
}

/// Named graphs shipped as fixtures.
pub fn named_graphs() -> Vec<(String, Graph)> {
    vec![
        ("k2".into(), complete(2)),
        ("k3".into(), complete(3)),
        ("k4".into(), complete(4)),
        ("p3".into(), path(3)),
        ("c4".into(), cycle(4)),
        ("edgeless1".into(), edgeless(1)),
        ("edgeless3".into(), edgeless(3)),
    ]
}
