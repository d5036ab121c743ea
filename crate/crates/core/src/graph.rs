//! Simple undirected graphs on vertices `1..=n` with bit-set adjacency.
//!
//! Every structure here is immutable once built. Vertex sets are single
//! machine words, which caps graphs at [`MAX_VERTICES`] vertices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 63;

/// A subset of `{1, …, 63}` stored as a bit set; vertex `v` is bit `v - 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices
            .into_iter()
            .fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 64 && self.0 >> (v - 1) & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        self | VertexSet::singleton(v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        self - VertexSet::singleton(v)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest vertex of the set.
    pub fn min(self) -> Result<usize> {
        if self.0 == 0 {
            Err(Error::EmptySet)
        } else {
            Ok(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize + 1;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    /// All subsets of `self`, in increasing bit order, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(VertexSet(cur))
        })
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Multiplicity of each vertex type in a heap or multicoloring.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        ExponentVector(vec![1; n])
    }

    /// Indicator vector of `set` on `n` coordinates.
    pub fn indicator(n: usize, set: VertexSet) -> Self {
        ExponentVector((1..=n).map(|v| u32::from(set.contains(v))).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Total degree `|m|`.
    pub fn total(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// `m! = m_1! ⋯ m_n!`.
    pub fn factorial(&self) -> BigInt {
        self.0
            .iter()
            .flat_map(|&e| 1..=e)
            .fold(BigInt::one(), |acc, k| acc * k)
    }

    /// Support `{i : m_i ≥ 1}`.
    pub fn support(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i + 1),
        )
    }

    /// True when every coordinate is 0 or 1.
    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

/// Simple undirected graph on `1..=n`.
///
/// Edges are kept in canonical order: pairs `(u, v)` with `u < v`, sorted
/// lexicographically. Orientations index their direction bits by this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Graph without edges on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Graph::from_edge_list(n, &[])
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=n).map(|u| (u, u % n + 1)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Builds a simple graph; repeated pairs (in either order) collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                count: n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u - 1] = adj[u - 1].with(v);
            adj[v - 1] = adj[v - 1].with(u);
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// `adj` must be symmetric and loop-free.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Self {
        let edges = adj
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| {
                let u = i + 1;
                nb.iter().filter(move |&v| v > u).map(move |v| (u, v))
            })
            .collect();
        Graph {
            n: adj.len(),
            adj,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Canonical edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    /// Position of `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    fn check_subset(&self, set: VertexSet) -> Result<()> {
        if set.is_subset(self.vertices()) {
            Ok(())
        } else {
            let vertex = (set - self.vertices()).min()?;
            Err(Error::VertexOutOfRange { vertex, n: self.n })
        }
    }

    /// Subgraph induced by `set`, relabeled `1..=|set|` in increasing order.
    ///
    /// The returned map sends new label `k` to `labels[k - 1]` in `self`.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(set)?;
        let labels: Vec<usize> = set.iter().collect();
        let mut position = vec![0usize; self.n + 1];
        for (k, &v) in labels.iter().enumerate() {
            position[v] = k + 1;
        }
        let adj = labels
            .iter()
            .map(|&v| VertexSet::from_vertices((self.adj[v - 1] & set).iter().map(|w| position[w])))
            .collect();
        Ok((Graph::from_adjacency_unchecked(adj), labels))
    }

    /// Blow-up graph `G^m`: `m_i` pairwise adjacent copies of each vertex `i`,
    /// copies of adjacent vertices pairwise adjacent.
    ///
    /// Copy `k` (1-based) of vertex `i` gets label `m_1 + ⋯ + m_{i-1} + k`.
    pub fn blowup(&self, m: &ExponentVector) -> Result<Graph> {
        if m.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "exponent vector has length {}, graph has {} vertices",
                m.len(),
                self.n
            )));
        }
        let total = m.total();
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                count: total,
                max: MAX_VERTICES,
            });
        }
        let offsets = blowup_offsets(m);
        let block = |i: usize| {
            VertexSet::from_vertices(offsets[i - 1] + 1..=offsets[i - 1] + m[i - 1] as usize)
        };
        let mut adj = vec![VertexSet::EMPTY; total];
        for i in 1..=self.n {
            let mut reach = block(i);
            for j in self.adj[i - 1].iter() {
                reach = reach | block(j);
            }
            for v in block(i).iter() {
                adj[v - 1] = reach.without(v);
            }
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.is_subset(self.vertices())
            && set.iter().all(|v| set.without(v).is_subset(self.adj[v - 1]))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v - 1].intersects(set))
    }

    /// All independent sets (including the empty set) in increasing bit order.
    pub fn independent_sets(&self) -> Vec<VertexSet> {
        // extend each independent set by vertices larger than its maximum
        let mut found = vec![VertexSet::EMPTY];
        let mut frontier = vec![(VertexSet::EMPTY, self.vertices())];
        while let Some((set, allowed)) = frontier.pop() {
            for v in allowed.iter() {
                let next = set.with(v);
                found.push(next);
                let rest = (allowed - self.adj[v - 1]) - VertexSet::full(v);
                frontier.push((next, rest));
            }
        }
        found.sort_unstable();
        found
    }

    /// Vertices reachable from `v` inside `within`.
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut todo = seen;
        while let Ok(u) = todo.min() {
            todo = todo.without(u);
            let fresh = (self.adj[u - 1] & within) - seen;
            seen = seen | fresh;
            todo = todo | fresh;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(1, self.vertices()) == self.vertices()
    }

    /// Applies `perm`, where `perm[v - 1]` is the new label of vertex `v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = VertexSet::EMPTY;
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length".into()));
        }
        for &p in perm {
            if p == 0 || p > self.n || seen.contains(p) {
                return Err(Error::InvalidArgument(format!("not a permutation: {perm:?}")));
            }
            seen = seen.with(p);
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u - 1], perm[v - 1]))
            .collect();
        Graph::from_edge_list(self.n, &edges)
    }

    /// True if every vertex `k > 1` has a neighbour with a smaller label.
    pub fn is_ascending(&self) -> bool {
        self.first_non_ascending().is_none()
    }

    pub(crate) fn first_non_ascending(&self) -> Option<usize> {
        (2..=self.n).find(|&k| !self.adj[k - 1].intersects(VertexSet::full(k - 1)))
    }

    /// Relabeling with every vertex `k > 1` adjacent to a smaller label.
    ///
    /// Labels `1..=prefix` are kept when they form a clique; the remaining
    /// labels are handed out by a smallest-label-first search from the
    /// vertices already labeled.
    pub fn ascending_relabel(&self, prefix: usize) -> Result<(Graph, Vec<usize>)> {
        self.ascending_relabel_by(prefix, SearchOrder::SmallestFirst)
    }

    /// Like [`Graph::ascending_relabel`] with a choice of search order.
    pub fn ascending_relabel_by(
        &self,
        prefix: usize,
        order: SearchOrder,
    ) -> Result<(Graph, Vec<usize>)> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.n == 0 {
            return Ok((self.clone(), Vec::new()));
        }
        let prefix = prefix.max(1).min(self.n);
        if !self.is_clique(VertexSet::full(prefix)) {
            return Err(Error::NotAClique(prefix));
        }
        let mut perm = vec![0usize; self.n];
        let mut labeled = VertexSet::full(prefix);
        for v in 1..=prefix {
            perm[v - 1] = v;
        }
        let mut next = prefix + 1;
        while next <= self.n {
            let boundary = labeled
                .iter()
                .fold(VertexSet::EMPTY, |acc, u| acc | self.adj[u - 1])
                - labeled;
            let v = match order {
                SearchOrder::SmallestFirst => boundary.min()?,
                SearchOrder::LargestFirst => boundary.iter().last().ok_or(Error::Disconnected)?,
            };
            perm[v - 1] = next;
            labeled = labeled.with(v);
            next += 1;
        }
        Ok((self.relabel(&perm)?, perm))
    }

    /// Text format: first line `n`, then one `u v` pair per line; blank lines
    /// and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (first, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let n: usize = header.parse().map_err(|_| Error::Parse {
            line: first,
            message: format!("expected vertex count, found {header:?}"),
        })?;
        let mut edges = Vec::new();
        for (line, text) in lines {
            let fields: Vec<&str> = text.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    message: format!("expected vertex, found {s:?}"),
                })
            };
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, found {text:?}"),
                });
            }
            edges.push((parse(fields[0])?, parse(fields[1])?));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Inverse of [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Tie-breaking rule for [`Graph::ascending_relabel_by`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOrder {
    SmallestFirst,
    LargestFirst,
}

impl FromStr for Graph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Graph> {
        Graph::parse(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Label offset of each vertex type in the blow-up graph.
pub(crate) fn blowup_offsets(m: &ExponentVector) -> Vec<usize> {
    let mut acc = 0;
    m.as_slice()
        .iter()
        .map(|&e| {
            let start = acc;
            acc += e as usize;
            start
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edge_list(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let g = c4();
        assert_eq!(g.edges(), &[(1, 2), (1, 4), (2, 3), (3, 4)]);
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        let k3 = Graph::from_edge_list(3, &[(1, 2), (2, 1), (2, 3), (1, 3)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edge_list(3, &[(2, 2)]), Err(Error::LoopEdge(2)));
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert!(matches!(
            Graph::from_edge_list(64, &[]),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn vertex_set_min_of_empty_is_error() {
        assert_eq!(VertexSet::EMPTY.min(), Err(Error::EmptySet));
        assert_eq!(VertexSet::from_vertices([5, 3, 9]).min(), Ok(3));
        assert_eq!(VertexSet::full(63).len(), 63);
        assert_eq!(VertexSet::full(63).min(), Ok(1));
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = VertexSet::from_vertices([2, 4, 5]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(subs[0], VertexSet::EMPTY);
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn induced_subgraph_of_c4() {
        let g = c4();
        let (p, labels) = g.induced_subgraph(VertexSet::from_vertices([1, 2, 3])).unwrap();
        assert_eq!(p.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(labels, vec![1, 2, 3]);
        let (e, labels) = g.induced_subgraph(VertexSet::EMPTY).unwrap();
        assert_eq!((e.vertex_count(), labels.len()), (0, 0));
        let (same, labels) = g.induced_subgraph(g.vertices()).unwrap();
        assert_eq!(same, g);
        assert_eq!(labels, vec![1, 2, 3, 4]);
        let (q, labels) = g.induced_subgraph(VertexSet::from_vertices([2, 3, 4])).unwrap();
        assert_eq!(labels, vec![2, 3, 4]);
        assert_eq!(q.edges(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn blowup_of_c4() {
        let g = c4();
        let b = g.blowup(&ExponentVector::new(vec![3, 2, 0, 1])).unwrap();
        assert_eq!(b.vertex_count(), 6);
        assert_eq!(b.edge_count(), 13);
        assert_eq!(g.blowup(&ExponentVector::ones(4)).unwrap(), g);
        let k1 = Graph::empty(1).unwrap();
        let k5 = k1.blowup(&ExponentVector::new(vec![5])).unwrap();
        assert_eq!(k5, Graph::complete(5).unwrap());
    }

    #[test]
    fn clique_checks() {
        let g = c4();
        assert!(g.is_clique(VertexSet::from_vertices([1, 2])));
        assert!(!g.is_clique(VertexSet::from_vertices([1, 3])));
        assert!(g.is_clique(VertexSet::EMPTY));
    }

    #[test]
    fn independent_sets_listing() {
        let g = c4();
        let sets = g.independent_sets();
        let expected: Vec<VertexSet> = [
            vec![],
            vec![1],
            vec![2],
            vec![3],
            vec![4],
            vec![1, 3],
            vec![2, 4],
        ]
        .into_iter()
        .map(VertexSet::from_vertices)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
        assert_eq!(sets, expected);
        assert_eq!(Graph::complete(3).unwrap().independent_sets().len(), 4);
        assert_eq!(Graph::empty(3).unwrap().independent_sets().len(), 8);
    }

    #[test]
    fn ascending_relabel_cases() {
        let g = c4();
        let (h, perm) = g.ascending_relabel(1).unwrap();
        assert_eq!(perm, vec![1, 2, 3, 4]);
        assert_eq!(h, g);
        // path 2-1-3
        let p = Graph::from_edge_list(3, &[(2, 1), (1, 3)]).unwrap();
        assert_eq!(p.ascending_relabel(1).unwrap().1, vec![1, 2, 3]);
        let two = Graph::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(two.ascending_relabel(1), Err(Error::Disconnected));
        // path 1-3-2-4 stays valid only after relabeling
        let q = Graph::from_edge_list(4, &[(1, 4), (4, 2), (2, 3)]).unwrap();
        assert!(!q.is_ascending());
        let (r, _) = q.ascending_relabel(1).unwrap();
        assert!(r.is_ascending());
        let (s, _) = q.ascending_relabel_by(1, SearchOrder::LargestFirst).unwrap();
        assert!(s.is_ascending());
    }

    #[test]
    fn parse_text_format() {
        let g: Graph = "# C4\n4\n1 2\n2 3\n\n3 4\n# closing edge\n4 1\n".parse().unwrap();
        assert_eq!(g, c4());
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(matches!(Graph::parse("3\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse(""), Err(Error::Parse { .. })));
        assert_eq!(Graph::parse("2\n1 1\n"), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn exponent_vector_helpers() {
        let m = ExponentVector::new(vec![3, 2, 0, 1]);
        assert_eq!(m.total(), 6);
        assert_eq!(m.factorial(), BigInt::from(12));
        assert_eq!(m.support(), VertexSet::from_vertices([1, 2, 4]));
        assert!(!m.is_squarefree());
    }
}
