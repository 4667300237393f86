//! Bivariate chromatic polynomials.
//!
//! `chi_G(x, y)` counts colorings `c: V -> [x]` in which every edge `vw` has
//! `c(v) != c(w)` or `c(v) = c(w) > y`. Grouping colorings by the flat obtained
//! from contracting monochromatic edges, and orienting the remaining edges
//! upward in color, writes `chi_G` as a sum of strict order polynomials.

use std::collections::HashMap;

use num_traits::One;
use serde_json::json;

use crate::check::{compare_polys, CheckReport};
use crate::error::Result;
use crate::graph::{orientation_to_poset, AcyclicOrientation, Flat, Graph};
use crate::orderpoly::oracle::interpolate_poly;
use crate::orderpoly::{omega_strict, omega_weak, Mode};
use crate::ratpoly::BiPoly;
use crate::scalar::{Budget, Field};
use crate::{Poly, Rational};

/// Colorings keyed by the smallest color appearing on a monochromatic edge;
/// slot `x0 + 1` holds proper colorings.
#[derive(Debug, Clone)]
pub struct ColoringProfile {
    hist: Vec<u64>,
}

impl ColoringProfile {
    /// Colorings valid for threshold `y0`.
    pub fn count(&self, y0: u64) -> u64 {
        let start = (y0 as usize + 1).min(self.hist.len());
        self.hist[start..].iter().sum()
    }
}

/// Enumerates all `x0^n` colorings once.
pub fn coloring_profile(g: &Graph, x0: u64, budget: Budget) -> Result<ColoringProfile> {
    let n = g.vertex_count();
    budget.admit_power(x0, n)?;
    let mut hist = vec![0u64; x0 as usize + 2];
    // Earlier neighbours of each vertex.
    let back: Vec<Vec<usize>> = (0..n).map(|v| (0..v).filter(|&u| g.adjacent(u, v)).collect()).collect();
    let mut colors = vec![0u64; n];
    fn go(i: usize, worst: u64, back: &[Vec<usize>], colors: &mut [u64], x0: u64, hist: &mut [u64]) {
        if i == colors.len() {
            hist[worst as usize] += 1;
            return;
        }
        for c in 1..=x0 {
            colors[i] = c;
            let w = if back[i].iter().any(|&u| colors[u] == c) {
                worst.min(c)
            } else {
                worst
            };
            go(i + 1, w, back, colors, x0, hist);
        }
    }
    go(0, x0 + 1, &back, &mut colors, x0, &mut hist);
    Ok(ColoringProfile { hist })
}

/// Colorings `V -> [x0]` where every monochromatic edge has color `> y0`.
pub fn chi_brute(g: &Graph, x0: u64, y0: u64, budget: Budget) -> Result<u64> {
    Ok(coloring_profile(g, x0, budget)?.count(y0))
}

/// Memoizing [`chi_brute`]: one enumeration per `x0`.
pub struct GraphCounter<'a> {
    graph: &'a Graph,
    budget: Budget,
    cache: HashMap<u64, ColoringProfile>,
}

impl<'a> GraphCounter<'a> {
    pub fn new(graph: &'a Graph, budget: Budget) -> Self {
        GraphCounter {
            graph,
            budget,
            cache: HashMap::new(),
        }
    }

    pub fn count(&mut self, x0: u64, y0: u64) -> Result<u64> {
        if !self.cache.contains_key(&x0) {
            let p = coloring_profile(self.graph, x0, self.budget)?;
            self.cache.insert(x0, p);
        }
        Ok(self.cache[&x0].count(y0))
    }
}

/// Every (flat, acyclic orientation of its quotient) pair.
pub fn flat_orientations(g: &Graph) -> Vec<(Flat, AcyclicOrientation)> {
    g.flats()
        .into_iter()
        .flat_map(|f| {
            let orientations = f.quotient.acyclic_orientations();
            orientations.into_iter().map(move |o| (f.clone(), o))
        })
        .collect()
}

/// Bivariate chromatic polynomial via the flat/orientation decomposition.
pub fn chi_poly<T: Field>(g: &Graph) -> BiPoly<T> {
    flat_orientations(g)
        .iter()
        .map(|(f, o)| omega_strict::<T>(&orientation_to_poset(f, o).expect("acyclic orientation of the quotient")))
        .sum()
}

/// Classical chromatic polynomial in `x`, by deletion–contraction.
pub fn chi_classical<T: Field>(g: &Graph) -> BiPoly<T> {
    if g.edges().is_empty() {
        return BiPoly::x().pow(g.vertex_count() as u32);
    }
    chi_classical::<T>(&g.without_edge(0)) - chi_classical::<T>(&g.contract_edge(0))
}

/// Colorings of the quotient of `flat` that weakly increase along every arc
/// of `orientation` and give contracted vertices colors `> y0`.
pub fn m_count(flat: &Flat, orientation: &AcyclicOrientation, x0: u64, y0: u64, budget: Budget) -> Result<u64> {
    let k = flat.vertex_count();
    budget.admit_power(x0, k)?;
    let mut floor = vec![1u64; k];
    for &b in &flat.contracted {
        floor[b] = y0 + 1;
    }
    let arcs = orientation.arcs();
    let mut colors = vec![0u64; k];
    fn go(i: usize, floor: &[u64], arcs: &[(usize, usize)], colors: &mut [u64], x0: u64) -> u64 {
        if i == colors.len() {
            return arcs.iter().all(|&(a, b)| colors[a] <= colors[b]) as u64;
        }
        let mut total = 0;
        for c in floor[i]..=x0 {
            colors[i] = c;
            // Prune on arcs between already-colored vertices.
            if arcs.iter().all(|&(a, b)| a > i || b > i || colors[a] <= colors[b]) {
                total += go(i + 1, floor, arcs, colors, x0);
            }
        }
        total
    }
    Ok(go(0, &floor, arcs, &mut colors, x0))
}

/// `chi_G(-x0, -y0)` against the signed sum of compatible pairs over flats.
pub fn check_reciprocity_graph(g: &Graph, x0: u64, y0: u64, budget: Budget) -> Result<CheckReport> {
    let lhs = chi_poly::<Rational>(g).evaluate_int(-(x0 as i64), -(y0 as i64));
    let mut rhs: i128 = 0;
    for (flat, o) in flat_orientations(g) {
        let m = m_count(&flat, &o, x0, y0, budget)? as i128;
        rhs += if flat.vertex_count() % 2 == 0 { m } else { -m };
    }
    let rhs_q = Rational::from_integer(rhs.into());
    let name = "graph-reciprocity";
    Ok(if lhs == rhs_q {
        CheckReport::pass(name)
    } else {
        CheckReport::fail(
            name,
            json!({
                "input": g.to_json(),
                "point": { "x": x0, "y": y0 },
                "lhs_value": lhs.to_string(),
                "rhs_value": rhs.to_string(),
            }),
        )
    })
}

/// Polynomial form of graph reciprocity: `chi_G(-x, -y)` against
/// `sum_F (-1)^|V(H)| sum_sigma Omega_sigma(x, y + 1)`.
pub fn check_reciprocity_graph_poly(g: &Graph) -> CheckReport {
    let lhs = chi_poly::<Rational>(g).substitute_negate();
    let rhs: Poly = flat_orientations(g)
        .iter()
        .map(|(f, o)| {
            let p = orientation_to_poset(f, o).expect("acyclic orientation of the quotient");
            omega_weak::<Rational>(&p)
                .substitute_shift_y(1)
                .sign_power(f.vertex_count())
        })
        .sum();
    compare_polys("graph-reciprocity-poly", json!(g.to_json()), &lhs, &rhs)
}

/// Decomposition result against interpolated brute-force colorings.
pub fn check_oracle_graph(g: &Graph, budget: Budget) -> Result<CheckReport> {
    let mut counter = GraphCounter::new(g, budget);
    let oracle: Poly = interpolate_poly(g.vertex_count(), Mode::Strict, |x0, y0| counter.count(x0, y0))?;
    Ok(compare_polys(
        "graph-oracle",
        json!(g.to_json()),
        &chi_poly::<Rational>(g),
        &oracle,
    ))
}

/// Numeric reciprocity on every `1 <= y0 <= x0 <= max_x`.
pub fn check_reciprocity_graph_range(g: &Graph, max_x: u64, budget: Budget) -> Result<CheckReport> {
    let mut reports = Vec::new();
    for x0 in 1..=max_x {
        for y0 in 1..=x0 {
            reports.push(check_reciprocity_graph(g, x0, y0, budget)?);
        }
    }
    Ok(CheckReport::all("graph-reciprocity", reports))
}

/// Degree `n` in `x` with leading coefficient one.
pub fn is_monic_in_x(p: &Poly, n: usize) -> bool {
    p.deg_x() == Some(n as u32) && p.coeff(n as u32, 0).is_one()
}
