//! Finite graphs that may carry loops but never multiple edges.
//!
//! Vertices are `0..order`. Simple edges and loops are stored separately:
//! a loop never appears in the edge set and is never counted by
//! [`Pseudograph::edge_count`]. Graphs are frozen values; every operation
//! returns a new graph.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

/// An ordered set of vertex labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets, in binary-counter order over the sorted members.
    pub fn subsets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        let members = self.to_vec();
        assert!(
            members.len() < 64,
            "subset enumeration limited to 63 members"
        );
        (0u64..1 << members.len()).map(move |mask| {
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl From<&[usize]> for VertexSet {
    fn from(vs: &[usize]) -> Self {
        vs.iter().copied().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Old-label to new-label map produced by vertex deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap(Vec<Option<usize>>);

impl LabelMap {
    /// New label of `old`, or `None` if it was deleted or out of range.
    pub fn get(&self, old: usize) -> Option<usize> {
        self.0.get(old).copied().flatten()
    }

    /// Image of the surviving members of `vs`.
    pub fn image(&self, vs: &VertexSet) -> VertexSet {
        vs.iter().filter_map(|v| self.get(v)).collect()
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.0
    }
}

/// A graph on vertices `0..order` with simple edges and loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pseudograph {
    order: usize,
    // pairs stored as (min, max)
    edges: BTreeSet<(usize, usize)>,
    loops: BTreeSet<usize>,
    neighbors: Vec<Vec<usize>>,
}

/// Single-owner builder for [`Pseudograph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
    loops: BTreeSet<usize>,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Self {
        GraphBuilder {
            order,
            edges: BTreeSet::new(),
            loops: BTreeSet::new(),
        }
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfEdge(u));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        Ok(self)
    }

    pub fn add_loop(&mut self, v: usize) -> Result<&mut Self> {
        self.check(v)?;
        if !self.loops.insert(v) {
            return Err(Error::DuplicateLoop(v));
        }
        Ok(self)
    }

    pub fn build(&self) -> Pseudograph {
        Pseudograph::from_parts(self.order, self.edges.clone(), self.loops.clone())
    }
}

impl Pseudograph {
    fn from_parts(order: usize, edges: BTreeSet<(usize, usize)>, loops: BTreeSet<usize>) -> Self {
        let mut neighbors = vec![Vec::new(); order];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for n in &mut neighbors {
            n.sort_unstable();
        }
        Pseudograph {
            order,
            edges,
            loops,
            neighbors,
        }
    }

    /// Graph from edge and loop lists; rejects duplicates and self-edges.
    pub fn new(order: usize, edges: &[(usize, usize)], loops: &[usize]) -> Result<Self> {
        let mut b = GraphBuilder::new(order);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        for &v in loops {
            b.add_loop(v)?;
        }
        Ok(b.build())
    }

    /// `order` isolated vertices.
    pub fn empty(order: usize) -> Self {
        Self::from_parts(order, BTreeSet::new(), BTreeSet::new())
    }

    pub fn path(order: usize) -> Self {
        let edges = (1..order).map(|i| (i - 1, i)).collect();
        Self::from_parts(order, edges, BTreeSet::new())
    }

    /// Cycle on `order >= 3` vertices. Smaller orders give a path.
    pub fn cycle(order: usize) -> Self {
        let mut edges: BTreeSet<_> = (1..order).map(|i| (i - 1, i)).collect();
        if order >= 3 {
            edges.insert((0, order - 1));
        }
        Self::from_parts(order, edges, BTreeSet::new())
    }

    pub fn complete(order: usize) -> Self {
        let edges = (0..order)
            .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
            .collect();
        Self::from_parts(order, edges, BTreeSet::new())
    }

    /// Random graph: each pair joined with probability `edge_density`,
    /// each vertex looped with probability `loop_density`.
    pub fn random<R: Rng + ?Sized>(
        order: usize,
        edge_density: f64,
        loop_density: f64,
        rng: &mut R,
    ) -> Self {
        let mut edges = BTreeSet::new();
        for u in 0..order {
            for v in u + 1..order {
                if rng.gen_bool(edge_density) {
                    edges.insert((u, v));
                }
            }
        }
        let loops = (0..order).filter(|_| rng.gen_bool(loop_density)).collect();
        Self::from_parts(order, edges, loops)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of simple edges; loops are not counted.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_count(&self) -> usize {
        self.loops.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn loop_set(&self) -> VertexSet {
        self.loops.iter().copied().collect()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(&v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn is_simple(&self) -> bool {
        self.loops.is_empty()
    }

    /// Sorted neighbors of `v` through simple edges. Panics if out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    fn check_set(&self, vs: &VertexSet) -> Result<()> {
        vs.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// Open neighborhood N(v). A loop at `v` does not put `v` in it.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.neighbors[v].iter().copied().collect())
    }

    /// Induced subgraph on `keep`, relabeled to `0..keep.len()` in increasing order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Pseudograph> {
        self.check_set(keep)?;
        let mut map = vec![None; self.order];
        for (new, old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        Ok(self.relabeled(keep.len(), &map))
    }

    fn relabeled(&self, order: usize, map: &[Option<usize>]) -> Pseudograph {
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let loops = self.loops.iter().filter_map(|&v| map[v]).collect();
        Self::from_parts(order, edges, loops)
    }

    /// Removes `xs` and relabels survivors contiguously, preserving order.
    pub fn delete_vertices(&self, xs: &VertexSet) -> Result<(Pseudograph, LabelMap)> {
        self.check_set(xs)?;
        let mut map = vec![None; self.order];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !xs.contains(v) {
                *slot = Some(next);
                next += 1;
            }
        }
        Ok((self.relabeled(next, &map), LabelMap(map)))
    }

    /// [`delete_vertices`](Self::delete_vertices) without the label map.
    pub fn without_vertices(&self, xs: &VertexSet) -> Result<Pseudograph> {
        self.delete_vertices(xs).map(|(g, _)| g)
    }

    /// Removes the loops at `vs`; every listed vertex must carry one.
    pub fn delete_loops(&self, vs: &VertexSet) -> Result<Pseudograph> {
        self.check_set(vs)?;
        if let Some(v) = vs.iter().find(|&v| !self.has_loop(v)) {
            return Err(Error::NoLoop(v));
        }
        let loops = self
            .loops
            .iter()
            .copied()
            .filter(|&v| !vs.contains(v))
            .collect();
        Ok(Self::from_parts(self.order, self.edges.clone(), loops))
    }

    /// The same graph with every loop removed.
    pub fn without_loops(&self) -> Pseudograph {
        Self::from_parts(self.order, self.edges.clone(), BTreeSet::new())
    }

    /// Relabels vertex `v` to `perm[v]`. `perm` must be a permutation of `0..order`.
    pub fn permuted(&self, perm: &[usize]) -> Pseudograph {
        assert_eq!(perm.len(), self.order);
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        let loops = self.loops.iter().map(|&v| perm[v]).collect();
        Self::from_parts(self.order, edges, loops)
    }

    /// Renders the line-oriented text format accepted by `FromStr`.
    pub fn to_text(&self) -> String {
        let mut out = format!("p {}\n", self.order);
        for (u, v) in self.edges() {
            out.push_str(&format!("e {u} {v}\n"));
        }
        for v in self.loops.iter() {
            out.push_str(&format!("l {v}\n"));
        }
        out
    }
}

impl fmt::Display for Pseudograph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Pseudograph(order={}, edges={}, loops={})",
            self.order,
            self.edges.len(),
            self.loop_set()
        )
    }
}

/// Parses the text format:
///
/// ```text
/// # comment
/// p 3
/// e 0 1
/// e 0 2
/// l 1
/// ```
///
/// `p` must be the first non-comment line. Duplicate `e` or `l` lines are errors.
impl FromStr for Pseudograph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut builder: Option<GraphBuilder> = None;
        for (idx, raw) in s.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line, message };
            let mut tokens = content.split_whitespace();
            let tag = tokens.next().unwrap_or_default();
            let args: Vec<usize> = tokens
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| err(format!("expected a non-negative integer, got `{t}`")))
                })
                .collect::<Result<_>>()?;
            let want = |n: usize| -> Result<()> {
                if args.len() == n {
                    Ok(())
                } else {
                    Err(err(format!(
                        "`{tag}` takes {n} argument(s), got {}",
                        args.len()
                    )))
                }
            };
            match (tag, builder.as_mut()) {
                ("p", None) => {
                    want(1)?;
                    builder = Some(GraphBuilder::new(args[0]));
                }
                ("p", Some(_)) => return Err(err("repeated `p` line".into())),
                (_, None) => return Err(err("first line must be `p <order>`".into())),
                ("e", Some(b)) => {
                    want(2)?;
                    b.add_edge(args[0], args[1])
                        .map_err(|e| err(e.to_string()))?;
                }
                ("l", Some(b)) => {
                    want(1)?;
                    b.add_loop(args[0]).map_err(|e| err(e.to_string()))?;
                }
                (other, Some(_)) => return Err(err(format!("unknown record `{other}`"))),
            }
        }
        builder.map(|b| b.build()).ok_or(Error::Parse {
            line: s.lines().count().max(1),
            message: "missing `p <order>` line".into(),
        })
    }
}
