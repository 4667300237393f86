//! Simple graphs, flats and acyclic orientations.
//!
//! A flat is stored as a partition of the vertex set into blocks that each
//! induce a connected subgraph. Contracting every block yields the quotient
//! graph; parallel edges are merged and loops cannot occur.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{BicoloredPoset, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted, each stored as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(n));
        }
        let mut adj = vec![0u64; n];
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange { index: w, size: n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if adj[u] & (1 << v) != 0 {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        Ok(Graph { n, edges: norm, adj })
    }

    /// Like [`Graph::new`] but merges repeated edges instead of rejecting them.
    fn simple(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut norm: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        norm.sort_unstable();
        norm.dedup();
        Graph::new(n, &norm).expect("deduplicated loop-free edges")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        let edges: Vec<_> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::new(json.n, &edges)
    }

    /// Whether the vertices in `mask` induce a connected subgraph.
    pub fn induces_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & mask & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == mask
    }

    pub fn without_edge(&self, index: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &e)| e);
        Graph::simple(self.n, edges)
    }

    /// Contracts edge `index`, merging its larger endpoint into the smaller and
    /// shifting higher vertex indices down.
    pub fn contract_edge(&self, index: usize) -> Graph {
        let (keep, gone) = self.edges[index];
        let relabel = |w: usize| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (relabel(u), relabel(v)))
            .filter(|(u, v)| u != v);
        Graph::simple(self.n - 1, edges.collect::<Vec<_>>())
    }

    /// One flat per partition of the vertices into connected blocks,
    /// enumerated by restricted growth strings.
    pub fn flats(&self) -> Vec<Flat> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; self.n];
        self.partitions_from(0, 0, &mut rgs, &mut out);
        out
    }

    fn partitions_from(&self, i: usize, blocks: usize, rgs: &mut [usize], out: &mut Vec<Flat>) {
        if i == self.n {
            let mut masks = vec![0u64; blocks];
            for (v, &b) in rgs.iter().enumerate() {
                masks[b] |= 1 << v;
            }
            if masks.iter().all(|&m| self.induces_connected(m)) {
                out.push(Flat::from_assignment(self, rgs, blocks));
            }
            return;
        }
        for b in 0..=blocks {
            rgs[i] = b;
            self.partitions_from(i + 1, blocks.max(b + 1), rgs, out);
        }
    }

    /// All acyclic orientations. Edge `j` is tried as `u -> v` before `v -> u`,
    /// so the output is lexicographic in the direction vector.
    pub fn acyclic_orientations(&self) -> Vec<AcyclicOrientation> {
        let mut out = Vec::new();
        let mut succ = vec![0u64; self.n];
        let mut arcs = Vec::with_capacity(self.edges.len());
        self.orient_from(0, &mut succ, &mut arcs, &mut out);
        out
    }

    fn orient_from(
        &self,
        j: usize,
        succ: &mut [u64],
        arcs: &mut Vec<(usize, usize)>,
        out: &mut Vec<AcyclicOrientation>,
    ) {
        if j == self.edges.len() {
            out.push(AcyclicOrientation { arcs: arcs.clone() });
            return;
        }
        let (u, v) = self.edges[j];
        for (a, b) in [(u, v), (v, u)] {
            if !reaches(succ, b, a) {
                succ[a] |= 1 << b;
                arcs.push((a, b));
                self.orient_from(j + 1, succ, arcs, out);
                arcs.pop();
                succ[a] &= !(1 << b);
            }
        }
    }
}

fn reaches(succ: &[u64], from: usize, to: usize) -> bool {
    let mut seen = 1u64 << from;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        if v == to {
            return true;
        }
        let fresh = succ[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    false
}

/// A contraction of a graph, given by its connected blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    /// Blocks ordered by their smallest vertex; vertices sorted within.
    pub blocks: Vec<Vec<usize>>,
    /// Graph on the blocks.
    pub quotient: Graph,
    /// Quotient vertices whose block has at least two vertices.
    pub contracted: Vec<usize>,
}

impl Flat {
    fn from_assignment(g: &Graph, block_of: &[usize], count: usize) -> Self {
        let mut blocks = vec![Vec::new(); count];
        for (v, &b) in block_of.iter().enumerate() {
            blocks[b].push(v);
        }
        let quotient = Graph::simple(
            count,
            g.edges
                .iter()
                .map(|&(u, v)| (block_of[u], block_of[v]))
                .filter(|(a, b)| a != b)
                .collect::<Vec<_>>(),
        );
        let contracted = (0..count).filter(|&b| blocks[b].len() >= 2).collect();
        Flat {
            blocks,
            quotient,
            contracted,
        }
    }

    /// The flat in which nothing is contracted.
    pub fn trivial(g: &Graph) -> Self {
        let ids: Vec<usize> = (0..g.n).collect();
        Flat::from_assignment(g, &ids, g.n)
    }

    pub fn is_trivial(&self) -> bool {
        self.contracted.is_empty()
    }

    /// Number of vertices of the contracted graph.
    pub fn vertex_count(&self) -> usize {
        self.blocks.len()
    }
}

/// A direction for every edge of a graph, with no directed cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AcyclicOrientation {
    arcs: Vec<(usize, usize)>,
}

impl AcyclicOrientation {
    /// Validates that `arcs` orients each edge of `graph` exactly once without
    /// creating a directed cycle.
    pub fn new(graph: &Graph, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut undirected: Vec<_> = arcs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        undirected.sort_unstable();
        if undirected != graph.edges {
            return Err(Error::InvalidOrientation("arcs do not match the edge set".into()));
        }
        let mut succ = vec![0u64; graph.n];
        for &(a, b) in &arcs {
            if reaches(&succ, b, a) {
                return Err(Error::InvalidOrientation(format!(
                    "arc {a} -> {b} closes a directed cycle"
                )));
            }
            succ[a] |= 1 << b;
        }
        Ok(AcyclicOrientation { arcs })
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }
}

/// Reachability order of `orientation` on the quotient of `flat`, with the
/// contracted vertices celeste.
pub fn orientation_to_poset(flat: &Flat, orientation: &AcyclicOrientation) -> Result<BicoloredPoset> {
    BicoloredPoset::new(flat.vertex_count(), orientation.arcs(), &flat.contracted)
}
