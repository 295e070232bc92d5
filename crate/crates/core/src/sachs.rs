//! Basic figures and the loop-extended Sachs coefficient formula.
//!
//! A basic figure is a vertex-disjoint union of components, each a single
//! edge, a cycle of length at least three, or a loop. With `k` components and
//! `c` cycles it contributes `(-1)^k 2^c x^(p - |V|)` to the characteristic
//! polynomial of a `p`-vertex graph.
//!
//! Enumeration is exponential. [`enumerate_basic_figures`] lists figures one
//! by one; [`charpoly_sachs`] sums the same weights grouped by covered vertex
//! set, which stays fast up to about 20 vertices. [`ENUMERATION_ORDER_CAP`] is
//! the order above which front ends should refuse unless forced.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{Pseudograph, VertexSet};
use crate::poly::IntPolynomial;

/// Largest order that enumeration-backed commands accept without forcing.
pub const ENUMERATION_ORDER_CAP: usize = 24;

/// Largest order handled by the vertex-subset summation in [`charpoly_sachs`];
/// bigger graphs fall back to listing figures.
const SUBSET_SUM_MAX_ORDER: usize = 20;

/// A simple cycle in canonical form: starts at its least vertex, and the
/// second vertex is smaller than the last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Canonicalizes a cyclic vertex sequence. Returns `None` for fewer than
    /// three vertices or repeated vertices.
    pub fn new(vertices: &[usize]) -> Option<Cycle> {
        let n = vertices.len();
        let distinct: VertexSet = vertices.iter().copied().collect();
        if n < 3 || distinct.len() != n {
            return None;
        }
        let start = (0..n).min_by_key(|&i| vertices[i])?;
        let forward: Vec<usize> = (0..n).map(|i| vertices[(start + i) % n]).collect();
        let backward: Vec<usize> = (0..n).map(|i| vertices[(start + n - i) % n]).collect();
        Some(Cycle(forward.min(backward)))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }
}

/// All simple cycles of length >= 3, each once, sorted.
pub fn enumerate_cycles(g: &Pseudograph) -> Vec<Cycle> {
    let n = g.order();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend_cycles(g, start, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
        path.pop();
    }
    out.sort();
    out
}

fn extend_cycles(
    g: &Pseudograph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().expect("path is never empty");
    for &w in g.neighbors(last) {
        if w == start {
            // each cycle is seen in both directions; keep the one with path[1] < last
            if path.len() >= 3 && path[1] < last {
                out.push(Cycle(path.clone()));
            }
        } else if w > start && !on_path[w] {
            path.push(w);
            on_path[w] = true;
            extend_cycles(g, start, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// A vertex-disjoint collection of edge, cycle and loop components.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BasicFigure {
    pub edge_components: Vec<(usize, usize)>,
    pub cycle_components: Vec<Cycle>,
    pub loop_components: Vec<usize>,
}

/// Component counts of a basic figure, cycle lengths sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FigureShape {
    pub edges: usize,
    pub loops: usize,
    pub cycle_lengths: Vec<usize>,
}

impl BasicFigure {
    /// Number of covered vertices, |V(B)|.
    pub fn order(&self) -> usize {
        2 * self.edge_components.len()
            + self.cycle_components.iter().map(Cycle::len).sum::<usize>()
            + self.loop_components.len()
    }

    /// k(B)
    pub fn component_count(&self) -> usize {
        self.edge_components.len() + self.cycle_components.len() + self.loop_components.len()
    }

    /// c(B)
    pub fn cycle_count(&self) -> usize {
        self.cycle_components.len()
    }

    pub fn vertices(&self) -> VertexSet {
        let mut vs: VertexSet = self.loop_components.iter().copied().collect();
        for &(u, v) in &self.edge_components {
            vs.insert(u);
            vs.insert(v);
        }
        for c in &self.cycle_components {
            for &v in c.vertices() {
                vs.insert(v);
            }
        }
        vs
    }

    /// `(-1)^k(B) 2^c(B)`
    pub fn weight(&self) -> BigInt {
        let w = BigInt::from(1u8) << self.cycle_count();
        if self.component_count() % 2 == 1 {
            -w
        } else {
            w
        }
    }

    pub fn shape(&self) -> FigureShape {
        let mut cycle_lengths: Vec<usize> = self.cycle_components.iter().map(Cycle::len).collect();
        cycle_lengths.sort_unstable();
        FigureShape {
            edges: self.edge_components.len(),
            loops: self.loop_components.len(),
            cycle_lengths,
        }
    }

    /// Checks the structural invariants against `g`.
    pub fn is_valid_in(&self, g: &Pseudograph) -> bool {
        let edges_ok = self.edge_components.iter().all(|&(u, v)| g.has_edge(u, v));
        let loops_ok = self.loop_components.iter().all(|&v| g.has_loop(v));
        let cycles_ok = self.cycle_components.iter().all(|c| {
            let vs = c.vertices();
            vs.len() >= 3 && (0..vs.len()).all(|i| g.has_edge(vs[i], vs[(i + 1) % vs.len()]))
        });
        edges_ok && loops_ok && cycles_ok && self.vertices().len() == self.order()
    }
}

struct FigureWalker<'a, F> {
    g: &'a Pseudograph,
    cycles_by_min: Vec<Vec<Cycle>>,
    max_order: usize,
    covered: Vec<bool>,
    current: BasicFigure,
    size: usize,
    visit: F,
}

impl<F: FnMut(&BasicFigure)> FigureWalker<'_, F> {
    // Decide every vertex in increasing order; a component is attached to its
    // least vertex, so each figure is produced exactly once.
    fn walk(&mut self, from: usize) {
        let n = self.g.order();
        let Some(v) = (from..n).find(|&v| !self.covered[v]) else {
            (self.visit)(&self.current);
            return;
        };
        self.walk(v + 1);
        if self.size == self.max_order {
            return;
        }
        self.covered[v] = true;
        if self.g.has_loop(v) {
            self.current.loop_components.push(v);
            self.size += 1;
            self.walk(v + 1);
            self.size -= 1;
            self.current.loop_components.pop();
        }
        if self.size + 2 <= self.max_order {
            for &u in self.g.neighbors(v) {
                if u < v || self.covered[u] {
                    continue;
                }
                self.covered[u] = true;
                self.current.edge_components.push((v, u));
                self.size += 2;
                self.walk(v + 1);
                self.size -= 2;
                self.current.edge_components.pop();
                self.covered[u] = false;
            }
        }
        for idx in 0..self.cycles_by_min[v].len() {
            let len = self.cycles_by_min[v][idx].len();
            if self.size + len > self.max_order {
                continue;
            }
            let cycle = self.cycles_by_min[v][idx].clone();
            if cycle.vertices()[1..].iter().any(|&u| self.covered[u]) {
                continue;
            }
            for &u in &cycle.vertices()[1..] {
                self.covered[u] = true;
            }
            self.current.cycle_components.push(cycle);
            self.size += len;
            self.walk(v + 1);
            self.size -= len;
            let cycle = self.current.cycle_components.pop().expect("just pushed");
            for &u in &cycle.vertices()[1..] {
                self.covered[u] = false;
            }
        }
        self.covered[v] = false;
    }
}

/// Calls `visit` once for every basic figure with at most `max_order`
/// vertices (all of them for `None`), starting with the empty figure.
pub fn for_each_basic_figure<F: FnMut(&BasicFigure)>(
    g: &Pseudograph,
    max_order: Option<usize>,
    visit: F,
) {
    let mut cycles_by_min = vec![Vec::new(); g.order()];
    for c in enumerate_cycles(g) {
        cycles_by_min[c.vertices()[0]].push(c);
    }
    let mut walker = FigureWalker {
        g,
        cycles_by_min,
        max_order: max_order.unwrap_or(g.order()),
        covered: vec![false; g.order()],
        current: BasicFigure::default(),
        size: 0,
        visit,
    };
    walker.walk(0);
}

/// Every basic figure with at most `max_order` vertices, in a deterministic order.
pub fn enumerate_basic_figures(g: &Pseudograph, max_order: Option<usize>) -> Vec<BasicFigure> {
    let mut out = Vec::new();
    for_each_basic_figure(g, max_order, |b| out.push(b.clone()));
    out
}

/// Figure counts per order and shape.
pub fn figure_census(
    g: &Pseudograph,
    max_order: Option<usize>,
) -> BTreeMap<usize, BTreeMap<FigureShape, usize>> {
    let mut census: BTreeMap<usize, BTreeMap<FigureShape, usize>> = BTreeMap::new();
    for_each_basic_figure(g, max_order, |b| {
        *census
            .entry(b.order())
            .or_default()
            .entry(b.shape())
            .or_default() += 1;
    });
    census
}

/// Characteristic polynomial from the loop-extended Sachs formula.
pub fn charpoly_sachs(g: &Pseudograph) -> IntPolynomial {
    if g.order() <= SUBSET_SUM_MAX_ORDER {
        charpoly_by_vertex_subsets(g)
    } else {
        charpoly_sachs_enumerated(g)
    }
}

/// The Sachs sum taken figure by figure.
pub fn charpoly_sachs_enumerated(g: &Pseudograph) -> IntPolynomial {
    let p = g.order();
    let mut by_order = vec![BigInt::zero(); p + 1];
    for_each_basic_figure(g, None, |b| by_order[b.order()] += b.weight());
    IntPolynomial::new(by_order.into_iter().rev().collect())
}

/// Coefficient of `x^(p - i)`, summing only figures with exactly `i` vertices.
pub fn sachs_coefficient(g: &Pseudograph, i: usize) -> Result<BigInt> {
    if i > g.order() {
        return Err(Error::IndexOutOfRange {
            index: i,
            order: g.order(),
        });
    }
    let mut total = BigInt::zero();
    for_each_basic_figure(g, Some(i), |b| {
        if b.order() == i {
            total += b.weight();
        }
    });
    Ok(total)
}

// weight[S] = Σ over figures covering exactly S of (-1)^k 2^c. Splitting off the
// component through the least vertex v of S:
//   weight[S] = -[loop v] weight[S-v] - Σ_{u ∈ N(v)∩S} weight[S-v-u]
//               - 2 Σ_{T ⊆ S, min T = v, |T| >= 3} ham(T) weight[S-T]
// with ham(T) the number of Hamiltonian cycles of G[T].
fn charpoly_by_vertex_subsets(g: &Pseudograph) -> IntPolynomial {
    let n = g.order();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let ham = hamiltonian_cycle_counts(n, &adj);
    let full = 1usize << n;
    let mut weight = vec![0i128; full];
    weight[0] = 1;
    let mut by_order = vec![0i128; n + 1];
    by_order[0] = 1;
    for s in 1..full {
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        let mut w = 0i128;
        if g.has_loop(v) {
            w -= weight[rest];
        }
        let mut nb = adj[v] as usize & rest;
        while nb != 0 {
            let u = nb.trailing_zeros();
            w -= weight[rest & !(1 << u)];
            nb &= nb - 1;
        }
        // nonempty submasks r of rest with at least two bits close a cycle through v
        let mut r = rest;
        while r != 0 {
            if r & (r - 1) != 0 {
                let h = ham[r | 1 << v];
                if h != 0 {
                    w -= 2 * h as i128 * weight[rest & !r];
                }
            }
            r = (r - 1) & rest;
        }
        weight[s] = w;
        by_order[s.count_ones() as usize] += w;
    }
    IntPolynomial::new(by_order.into_iter().rev().map(BigInt::from).collect())
}

// ham[T] for every vertex mask T; zero when |T| < 3.
fn hamiltonian_cycle_counts(n: usize, adj: &[u32]) -> Vec<u64> {
    let mut ham = vec![0u64; 1 << n];
    for s in 0..n {
        let k = n - s - 1;
        if k < 2 {
            continue;
        }
        // bit i of a submask stands for vertex s + 1 + i
        let high = |i: usize| s + 1 + i;
        let width = 1usize << k;
        let mut paths = vec![0u64; width * k];
        for i in 0..k {
            if adj[s] >> high(i) & 1 == 1 {
                paths[(1 << i) * k + i] = 1;
            }
        }
        for sub in 1..width {
            let mut closing = 0u64;
            let mut ends = sub;
            while ends != 0 {
                let e = ends.trailing_zeros() as usize;
                ends &= ends - 1;
                let count = paths[sub * k + e];
                if count == 0 {
                    continue;
                }
                let ve = high(e);
                if adj[ve] >> s & 1 == 1 {
                    closing += count;
                }
                let mut next = (adj[ve] >> (s + 1)) as usize & (width - 1) & !sub;
                while next != 0 {
                    let j = next.trailing_zeros() as usize;
                    next &= next - 1;
                    paths[(sub | 1 << j) * k + j] += count;
                }
            }
            if sub.count_ones() >= 2 {
                ham[(sub << (s + 1)) | 1 << s] = closing / 2;
            }
        }
    }
    ham
}

/// `C(a, b)`, zero whenever `b < 0`, `a < 0` or `b > a`.
pub(crate) fn binomial_or_zero(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        BigInt::zero()
    } else {
        binomial(BigInt::from(a), BigInt::from(b))
    }
}

fn signed(value: BigInt, exponent: usize) -> BigInt {
    if exponent % 2 == 1 {
        -value
    } else {
        value
    }
}

/// Total weight of the figures made of exactly `k` loops in a graph with `m`
/// loops: `(-1)^k C(m, k)`.
pub fn contribution_all_loops(m: usize, k: usize) -> BigInt {
    signed(binomial_or_zero(m as i64, k as i64), k)
}

/// Total weight of the order-`k` figures made of `k - 2` loops and one edge.
pub fn contribution_loops_plus_edge(g: &Pseudograph, k: usize) -> Result<BigInt> {
    if k < 3 {
        return Err(Error::InvalidArgument {
            what: "loops-plus-edge order k",
            requirement: "k >= 3",
            value: k,
        });
    }
    let loops = g.loop_set();
    let m = loops.len() as i64;
    let k = k as i64;
    let q = BigInt::from(g.edge_count());
    let loop_edges = BigInt::from(
        g.edges()
            .filter(|&(u, v)| g.has_loop(u) && g.has_loop(v))
            .count(),
    );
    let loop_degree_sum = BigInt::from(loops.iter().map(|v| g.degree(v)).sum::<usize>());
    let bracket = binomial_or_zero(m, k - 2) * q + binomial_or_zero(m - 2, k - 4) * loop_edges
        - binomial_or_zero(m - 1, k - 3) * loop_degree_sum;
    Ok(signed(bracket, (k - 1) as usize))
}

/// Signed count `(-1)^(k-n+1) N` of the order-`k` figures made of `k - n`
/// loops and one `n`-cycle. Each such figure has weight `2 (-1)^(k-n+1)`, so
/// their share of the coefficient of `x^(p-k)` is twice this value.
pub fn contribution_loops_plus_cycle(g: &Pseudograph, k: usize, n: usize) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::InvalidArgument {
            what: "cycle length n",
            requirement: "n >= 3",
            value: n,
        });
    }
    if k < n {
        return Err(Error::InvalidArgument {
            what: "figure order k",
            requirement: "k >= cycle length",
            value: k,
        });
    }
    let loops = g.loop_set().to_vec();
    let cycles: Vec<Cycle> = enumerate_cycles(g)
        .into_iter()
        .filter(|c| c.len() == n)
        .collect();
    let mut count = 0usize;
    for_each_k_subset(&loops, k - n, &mut |subset| {
        count += cycles
            .iter()
            .filter(|c| subset.iter().all(|&v| !c.contains(v)))
            .count();
    });
    Ok(signed(BigInt::from(count), k - n + 1))
}

fn for_each_k_subset(items: &[usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if chosen.len() == k {
            visit(chosen);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - chosen.len() {
                break;
            }
            chosen.push(items[i]);
            go(items, k, i + 1, chosen, visit);
            chosen.pop();
        }
    }
    go(items, k, 0, &mut Vec::with_capacity(k), visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::charpoly_of_graph;

    fn looped_path() -> Pseudograph {
        Pseudograph::new(3, &[(0, 1), (0, 2)], &[1, 2]).unwrap()
    }

    // two triangles sharing the edge 1-2, loop on the degree-2 vertex 0
    fn diamond_with_loop() -> Pseudograph {
        Pseudograph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], &[0]).unwrap()
    }

    // brute force: all vertex sequences starting at their minimum, both directions collapsed
    fn brute_force_cycle_count(g: &Pseudograph) -> usize {
        fn perms(pool: &[usize], k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for &v in pool {
                if !cur.contains(&v) {
                    cur.push(v);
                    perms(pool, k, cur, out);
                    cur.pop();
                }
            }
        }
        let all: Vec<usize> = (0..g.order()).collect();
        let mut seen = std::collections::HashSet::new();
        for k in 3..=g.order() {
            let mut out = Vec::new();
            perms(&all, k, &mut Vec::new(), &mut out);
            for seq in out {
                if (0..k).all(|i| g.has_edge(seq[i], seq[(i + 1) % k])) {
                    seen.insert(Cycle::new(&seq).unwrap());
                }
            }
        }
        seen.len()
    }

    #[test]
    fn cycle_canonical_form() {
        assert_eq!(Cycle::new(&[2, 0, 1]).unwrap().vertices(), &[0, 1, 2]);
        assert_eq!(Cycle::new(&[3, 2, 1, 0]).unwrap().vertices(), &[0, 1, 2, 3]);
        assert!(Cycle::new(&[0, 1]).is_none());
        assert!(Cycle::new(&[0, 1, 0]).is_none());
    }

    #[test]
    fn cycle_enumeration() {
        assert!(enumerate_cycles(&Pseudograph::path(3)).is_empty());
        let k4 = enumerate_cycles(&Pseudograph::complete(4));
        assert_eq!(k4.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(k4.iter().filter(|c| c.len() == 4).count(), 3);
        assert_eq!(k4.len(), brute_force_cycle_count(&Pseudograph::complete(4)));
        assert_eq!(enumerate_cycles(&Pseudograph::cycle(5)).len(), 1);
        for n in 3..=6 {
            let g = Pseudograph::complete(n);
            assert_eq!(enumerate_cycles(&g).len(), brute_force_cycle_count(&g));
        }
    }

    #[test]
    fn figures_of_small_graphs() {
        let figs = enumerate_basic_figures(&Pseudograph::empty(3), None);
        assert_eq!(figs, vec![BasicFigure::default()]);
        let g = diamond_with_loop();
        let counts: Vec<usize> = (1..=4)
            .map(|k| {
                enumerate_basic_figures(&g, None)
                    .iter()
                    .filter(|b| b.order() == k)
                    .count()
            })
            .collect();
        assert_eq!(counts, [1, 5, 5, 4]);
        assert!(enumerate_basic_figures(&g, None)
            .iter()
            .all(|b| b.is_valid_in(&g)));
        assert!(enumerate_basic_figures(&g, Some(2))
            .iter()
            .all(|b| b.order() <= 2));
    }

    #[test]
    fn sachs_examples() {
        assert_eq!(
            charpoly_sachs(&looped_path()),
            IntPolynomial::from_i64s(&[2, -1, -2, 1])
        );
        assert_eq!(
            charpoly_sachs(&Pseudograph::path(3)),
            IntPolynomial::from_i64s(&[0, -2, 0, 1])
        );
        let lone = Pseudograph::new(1, &[], &[0]).unwrap();
        assert_eq!(charpoly_sachs(&lone), IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(charpoly_sachs(&Pseudograph::empty(0)), IntPolynomial::one());
    }

    #[test]
    fn subset_sum_matches_enumeration_and_oracle() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let g = Pseudograph::random(8, 0.6, 0.3, &mut rng);
            let by_subsets = charpoly_by_vertex_subsets(&g);
            assert_eq!(by_subsets, charpoly_sachs_enumerated(&g));
            assert_eq!(by_subsets, charpoly_of_graph(&g));
        }
        let k7 = Pseudograph::complete(7);
        assert_eq!(charpoly_by_vertex_subsets(&k7), charpoly_of_graph(&k7));
    }

    #[test]
    fn single_coefficients() {
        let g = looped_path();
        let phi = charpoly_sachs(&g);
        for i in 0..=3 {
            assert_eq!(sachs_coefficient(&g, i).unwrap(), phi.coefficient_of(3 - i));
        }
        assert!(sachs_coefficient(&g, 4).is_err());
    }

    #[test]
    fn all_loop_contributions() {
        assert_eq!(contribution_all_loops(2, 1), BigInt::from(-2));
        assert_eq!(contribution_all_loops(3, 2), BigInt::from(3));
        assert_eq!(contribution_all_loops(1, 2), BigInt::zero());
    }

    #[test]
    fn loop_edge_contributions() {
        let g = looped_path();
        // m q - Σ_{v looped} |N(v)| = 2*2 - (1 + 1)
        assert_eq!(
            contribution_loops_plus_edge(&g, 3).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            contribution_loops_plus_edge(&Pseudograph::complete(4), 5).unwrap(),
            BigInt::zero()
        );
        assert!(contribution_loops_plus_edge(&g, 2).is_err());
    }

    #[test]
    fn loop_cycle_contributions() {
        assert_eq!(
            contribution_loops_plus_cycle(&diamond_with_loop(), 4, 3).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            contribution_loops_plus_cycle(&Pseudograph::cycle(6), 6, 3).unwrap(),
            BigInt::zero()
        );
        assert!(contribution_loops_plus_cycle(&looped_path(), 3, 2).is_err());
    }

    #[test]
    fn k_subsets() {
        let mut seen = Vec::new();
        for_each_k_subset(&[1, 4, 7], 2, &mut |s| seen.push(s.to_vec()));
        assert_eq!(seen, vec![vec![1, 4], vec![1, 7], vec![4, 7]]);
        let mut empty = 0;
        for_each_k_subset(&[1, 2], 0, &mut |_| empty += 1);
        assert_eq!(empty, 1);
    }
}
