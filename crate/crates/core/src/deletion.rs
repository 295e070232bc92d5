//! Characteristic polynomials through loop and vertex deletions.
//!
//! Every identity here reduces `φ(G)` to characteristic polynomials of smaller
//! or loop-free graphs. Those inner polynomials come from a [`CharpolyEngine`],
//! which memoizes them and computes leaves with the method chosen by
//! [`LeafMethod`].

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{Pseudograph, VertexSet};
use crate::oracle;
use crate::poly::IntPolynomial;
use crate::sachs::{self, binomial_or_zero, for_each_basic_figure, Cycle};

/// How an engine evaluates the characteristic polynomial of a leaf graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LeafMethod {
    /// Loop-extended Sachs sum.
    #[default]
    Sachs,
    /// Faddeev–LeVerrier on the adjacency matrix.
    Oracle,
    /// Single-vertex deletion applied recursively down to the empty graph.
    /// Exponential; only for small graphs.
    Recursive,
}

/// Memoizing evaluator of `φ` for the subgraphs produced by the recursions.
///
/// Entries are keyed on the relabeled subgraph itself, so identical
/// subgraphs reached through different deletion orders share one entry.
/// The cache is behind a mutex and can be shared across threads.
#[derive(Debug, Default)]
pub struct CharpolyEngine {
    leaf: LeafMethod,
    cache: Mutex<HashMap<Pseudograph, IntPolynomial>>,
}

impl CharpolyEngine {
    pub fn new(leaf: LeafMethod) -> Self {
        CharpolyEngine {
            leaf,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn leaf(&self) -> LeafMethod {
        self.leaf
    }

    /// `φ(g)`; the empty graph gives 1.
    pub fn phi(&self, g: &Pseudograph) -> IntPolynomial {
        if g.order() == 0 {
            return IntPolynomial::one();
        }
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(g) {
            return hit.clone();
        }
        let value = match self.leaf {
            LeafMethod::Sachs => sachs::charpoly_sachs(g),
            LeafMethod::Oracle => oracle::charpoly_of_graph(g),
            LeafMethod::Recursive => single_vertex_expansion(g, 0, self),
        };
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(g.clone(), value.clone());
        value
    }

    /// `φ(g - xs)`, with `xs` in the labels of `g`.
    pub fn phi_without(&self, g: &Pseudograph, xs: &VertexSet) -> IntPolynomial {
        let h = g
            .without_vertices(xs)
            .expect("deleted vertices belong to the graph");
        self.phi(&h)
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.lock().expect("cache poisoned").len()
    }
}

fn check_vertex(g: &Pseudograph, v: usize) -> Result<()> {
    if v < g.order() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        })
    }
}

fn check_index(g: &Pseudograph, i: usize) -> Result<()> {
    if i <= g.order() {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: i,
            order: g.order(),
        })
    }
}

fn sign(exponent: usize) -> BigInt {
    if exponent.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// `φ(G) = Σ_{X ⊆ L} (-1)^|X| φ(G' - X)` over the full loop set `L`, where `G'`
/// is `G` without loops.
pub fn charpoly_loop_expansion(g: &Pseudograph) -> IntPolynomial {
    charpoly_loop_expansion_with(g, &g.loop_set(), &CharpolyEngine::default())
        .expect("the loop set carries loops")
}

/// Loop expansion over a chosen subset of the loops; the remaining loops stay
/// in every subgraph.
pub fn charpoly_loop_expansion_with(
    g: &Pseudograph,
    loops: &VertexSet,
    engine: &CharpolyEngine,
) -> Result<IntPolynomial> {
    let stripped = g.delete_loops(loops)?;
    let mut total = IntPolynomial::zero();
    for xs in loops.subsets() {
        let term = engine.phi_without(&stripped, &xs);
        if xs.len() % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    Ok(total)
}

/// `φ(G) = φ(G - l) - φ(G - v)` for the loop `l` at `v`, repeated on the
/// least remaining loop until the graphs are loop-free.
pub fn charpoly_single_loop_removal(g: &Pseudograph, v: usize) -> Result<IntPolynomial> {
    charpoly_single_loop_removal_with(g, v, &CharpolyEngine::default())
}

pub fn charpoly_single_loop_removal_with(
    g: &Pseudograph,
    v: usize,
    engine: &CharpolyEngine,
) -> Result<IntPolynomial> {
    check_vertex(g, v)?;
    if !g.has_loop(v) {
        return Err(Error::NoLoop(v));
    }
    Ok(peel_loop(g, v, engine))
}

fn peel_loop(g: &Pseudograph, v: usize, engine: &CharpolyEngine) -> IntPolynomial {
    let without_loop = g.delete_loops(&[v].into()).expect("v carries a loop");
    let without_vertex = g.without_vertices(&[v].into()).expect("v is a vertex");
    peel_all(&without_loop, engine) - peel_all(&without_vertex, engine)
}

fn peel_all(g: &Pseudograph, engine: &CharpolyEngine) -> IntPolynomial {
    match g.loop_set().iter().next() {
        Some(v) => peel_loop(g, v, engine),
        None => engine.phi(g),
    }
}

/// Coefficient `a_i` of `x^(p-i)` as `Σ_{X ⊆ L, |X| <= i} (-1)^|X| a_{i-|X|}(G' - X)`.
///
/// Each `a_j` is summed from order-`j` basic figures only; the full
/// polynomial is never formed.
pub fn coefficient_via_subsets(g: &Pseudograph, i: usize) -> Result<BigInt> {
    check_index(g, i)?;
    let stripped = g.without_loops();
    let mut total = BigInt::zero();
    for xs in g.loop_set().subsets().filter(|xs| xs.len() <= i) {
        let h = stripped.without_vertices(&xs)?;
        total += sign(xs.len()) * sachs::sachs_coefficient(&h, i - xs.len())?;
    }
    Ok(total)
}

/// `φ(G) = Σ_{B' ∈ B(G')} (-1)^k(B') 2^c(B') x^(p - |V(B') ∪ L|) (x - 1)^|L - V(B')|`.
pub fn charpoly_basic_figure_form(g: &Pseudograph) -> IntPolynomial {
    let p = g.order();
    let loops = g.loop_set();
    // (x exponent, (x-1) exponent) -> summed weight
    let mut grouped: HashMap<(usize, usize), BigInt> = HashMap::new();
    for_each_basic_figure(&g.without_loops(), None, |b| {
        let vs = b.vertices();
        let free_loops = loops.difference(&vs).len();
        let union = vs.len() + free_loops;
        *grouped.entry((p - union, free_loops)).or_default() += b.weight();
    });
    let mut keys: Vec<_> = grouped.keys().copied().collect();
    keys.sort_unstable();
    keys.into_iter()
        .map(|(xe, le)| {
            (IntPolynomial::pow_x_minus_one(le).shift_mul_x_pow(xe)).scale(&grouped[&(xe, le)])
        })
        .sum()
}

/// Coefficient `a_i` of `x^(p-i)` from the figures of `G'` alone:
/// `Σ (-1)^(k - |V| + i) 2^c C(|L - V|, |V ∪ L| - i)` over figures with
/// `|V| <= i <= |V ∪ L|`.
pub fn coefficient_basic_figure_form(g: &Pseudograph, i: usize) -> Result<BigInt> {
    check_index(g, i)?;
    let loops = g.loop_set();
    let mut total = BigInt::zero();
    for_each_basic_figure(&g.without_loops(), Some(i), |b| {
        let vs = b.vertices();
        let free = loops.difference(&vs).len();
        let union = vs.len() + free;
        if vs.len() <= i && i <= union {
            let magnitude = (BigInt::from(1) << b.cycle_count())
                * binomial_or_zero(free as i64, (union - i) as i64);
            total += sign(b.component_count() + i - vs.len()) * magnitude;
        }
    });
    Ok(total)
}

/// `det A(G)` as `Σ (-1)^(k - |V|) 2^c` over figures of `G'` covering every
/// loop-free vertex.
pub fn determinant_adjacency(g: &Pseudograph) -> BigInt {
    let loops = g.loop_set();
    let mut total = BigInt::zero();
    for_each_basic_figure(&g.without_loops(), None, |b| {
        let vs = b.vertices();
        if (0..g.order()).all(|v| loops.contains(v) || vs.contains(v)) {
            total += sign(b.component_count() + vs.len()) * (BigInt::from(1) << b.cycle_count());
        }
    });
    total
}

/// Cycles through `v` that avoid every vertex of `avoid`, in sorted order.
pub fn cycles_through_avoiding(g: &Pseudograph, v: usize, avoid: &VertexSet) -> Result<Vec<Cycle>> {
    check_vertex(g, v)?;
    if avoid.contains(v) {
        return Err(Error::VertexAvoided(v));
    }
    Ok(sachs::enumerate_cycles(g)
        .into_iter()
        .filter(|c| c.contains(v) && c.vertices().iter().all(|&u| !avoid.contains(u)))
        .collect())
}

/// Expands `φ(G)` along the ordered vertices `vs = [v_1, ..., v_k]`:
///
/// `φ(G) = x^k φ(G - X_k) - Σ_i x^i [ Σ_{u ∈ N[v_{i+1}] - X_i} φ(G - X_{i+1} - u)
///          + 2 Σ_{C ∈ C(v_{i+1})^{X_i}} φ(G - X_i - V(C)) ]`
///
/// where `X_i` holds the first `i` vertices. `N[v]` contributes `v` itself
/// only when `v` carries a loop, and that term is `φ(G - X_{i+1})`.
pub fn charpoly_vertex_deletion(g: &Pseudograph, vs: &[usize]) -> Result<IntPolynomial> {
    charpoly_vertex_deletion_with(g, vs, &CharpolyEngine::default())
}

pub fn charpoly_vertex_deletion_with(
    g: &Pseudograph,
    vs: &[usize],
    engine: &CharpolyEngine,
) -> Result<IntPolynomial> {
    let mut seen = VertexSet::new();
    for &v in vs {
        check_vertex(g, v)?;
        if !seen.insert(v) {
            return Err(Error::DuplicateVertex(v));
        }
    }
    let cycles = sachs::enumerate_cycles(g);
    let mut removed = VertexSet::new();
    let mut total = IntPolynomial::zero();
    for (i, &v) in vs.iter().enumerate() {
        let mut next = removed.clone();
        next.insert(v);
        let mut bracket = IntPolynomial::zero();
        for &u in g.neighbors(v) {
            if !removed.contains(u) {
                let mut gone = next.clone();
                gone.insert(u);
                bracket += &engine.phi_without(g, &gone);
            }
        }
        if g.has_loop(v) {
            bracket += &engine.phi_without(g, &next);
        }
        for c in cycles.iter().filter(|c| c.contains(v)) {
            if c.vertices().iter().any(|&u| removed.contains(u)) {
                continue;
            }
            let gone = removed.union(&c.vertex_set());
            let term = engine.phi_without(g, &gone);
            bracket += &term;
            bracket += &term;
        }
        total -= &bracket.shift_mul_x_pow(i);
        removed = next;
    }
    total += &engine.phi_without(g, &removed).shift_mul_x_pow(vs.len());
    Ok(total)
}

/// `φ(G) = x φ(G - v) - Σ_{u ∈ N[v]} φ(G - v - u) - 2 Σ_{C ∋ v} φ(G - V(C))`.
pub fn charpoly_single_vertex(g: &Pseudograph, v: usize) -> Result<IntPolynomial> {
    charpoly_vertex_deletion(g, &[v])
}

fn single_vertex_expansion(g: &Pseudograph, v: usize, engine: &CharpolyEngine) -> IntPolynomial {
    charpoly_vertex_deletion_with(g, &[v], engine).expect("vertex 0 of a non-empty graph")
}

/// `φ(G') = φ(G) + Σ_{i=1..k} φ(G - {l_1, ..., l_{i-1}} - v_i)` where `G'` is
/// `G` without the loops at `vs = [v_1, ..., v_k]`.
pub fn charpoly_loops_removed(g: &Pseudograph, vs: &[usize]) -> Result<IntPolynomial> {
    charpoly_loops_removed_with(g, vs, &CharpolyEngine::default())
}

pub fn charpoly_loops_removed_with(
    g: &Pseudograph,
    vs: &[usize],
    engine: &CharpolyEngine,
) -> Result<IntPolynomial> {
    let mut seen = VertexSet::new();
    for &v in vs {
        check_vertex(g, v)?;
        if !g.has_loop(v) {
            return Err(Error::NoLoop(v));
        }
        if !seen.insert(v) {
            return Err(Error::DuplicateVertex(v));
        }
    }
    let mut total = engine.phi(g);
    let mut peeled = VertexSet::new();
    for &v in vs {
        let partial = g.delete_loops(&peeled)?;
        total += &engine.phi_without(&partial, &[v].into());
        peeled.insert(v);
    }
    Ok(total)
}
