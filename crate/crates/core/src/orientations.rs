//! Acyclic orientations: enumeration, sources and sinks, source-component
//! decompositions, and the per-subset count tables.
//!
//! The enumerator is the trusted oracle. The tables `a[V]` (acyclic
//! orientations of `G[V]`) and `b[V]` (those with unique source `min V`) are
//! the fast path and are cross-checked against it in the tests.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::Partition;
use crate::subset::{self, SubsetTable};

/// Edge limit for full enumeration of acyclic orientations.
pub const MAX_ENUMERATION_EDGES: usize = 26;

/// Direction bits over the canonical edge order of a host graph.
///
/// Bit `e` clear means edge `(u, v)` with `u < v` is the arc `u → v`; set
/// means `v → u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orientation {
    dirs: u64,
    edges: u8,
}

impl Orientation {
    pub fn from_bits(graph: &Graph, dirs: u64) -> Result<Self> {
        let edges = graph.edge_count();
        if edges > 64 {
            return Err(Error::TooManyEdges {
                count: edges,
                max: 64,
            });
        }
        if edges < 64 && dirs >> edges != 0 {
            return Err(Error::InvalidArgument("direction bits beyond edge count".into()));
        }
        Ok(Orientation {
            dirs,
            edges: edges as u8,
        })
    }

    /// Orientation with the given arcs; every edge must appear exactly once.
    pub fn from_arcs(graph: &Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut dirs = 0u64;
        let mut seen = 0u64;
        for &(a, b) in arcs {
            let e = graph.edge_index(a, b).ok_or(Error::NotAdjacent(a, b))?;
            if seen >> e & 1 == 1 {
                return Err(Error::InvalidArgument(format!("edge {{{a},{b}}} oriented twice")));
            }
            seen |= 1 << e;
            if a > b {
                dirs |= 1 << e;
            }
        }
        if seen.count_ones() as usize != graph.edge_count() {
            return Err(Error::InvalidArgument("some edges are not oriented".into()));
        }
        Orientation::from_bits(graph, dirs)
    }

    pub fn bits(self) -> u64 {
        self.dirs
    }

    pub fn edge_count(self) -> usize {
        self.edges as usize
    }

    fn reversed(self, e: usize) -> bool {
        self.dirs >> e & 1 == 1
    }

    /// Arcs `(tail, head)` in canonical edge order.
    pub fn arcs(self, graph: &Graph) -> Vec<(usize, usize)> {
        graph
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| if self.reversed(e) { (v, u) } else { (u, v) })
            .collect()
    }

    /// `out[v - 1]` is the set of heads of arcs leaving `v`.
    pub fn out_neighbors(self, graph: &Graph) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; graph.vertex_count()];
        for (a, b) in self.arcs(graph) {
            out[a - 1] = out[a - 1].with(b);
        }
        out
    }

    pub fn in_neighbors(self, graph: &Graph) -> Vec<VertexSet> {
        let mut inn = vec![VertexSet::EMPTY; graph.vertex_count()];
        for (a, b) in self.arcs(graph) {
            inn[b - 1] = inn[b - 1].with(a);
        }
        inn
    }

    /// Kahn-style check on bit sets.
    pub fn is_acyclic(self, graph: &Graph) -> bool {
        let inn = self.in_neighbors(graph);
        let mut remaining = graph.vertices();
        loop {
            if remaining.is_empty() {
                return true;
            }
            let ready: VertexSet = VertexSet::from_vertices(
                remaining.iter().filter(|&v| !inn[v - 1].intersects(remaining)),
            );
            if ready.is_empty() {
                return false;
            }
            remaining = remaining - ready;
        }
    }

    /// Vertices without ingoing arcs.
    pub fn sources(self, graph: &Graph) -> VertexSet {
        let inn = self.in_neighbors(graph);
        VertexSet::from_vertices(graph.vertices().iter().filter(|&v| inn[v - 1].is_empty()))
    }

    /// Vertices without outgoing arcs.
    pub fn sinks(self, graph: &Graph) -> VertexSet {
        let out = self.out_neighbors(graph);
        VertexSet::from_vertices(graph.vertices().iter().filter(|&v| out[v - 1].is_empty()))
    }

    /// Restriction to the induced subgraph on `set`, as an orientation of the
    /// relabeled subgraph (see [`Graph::induced_subgraph`]).
    pub fn restrict(self, graph: &Graph, set: VertexSet) -> Result<(Graph, Orientation, Vec<usize>)> {
        let (sub, labels) = graph.induced_subgraph(set)?;
        let out = self.out_neighbors(graph);
        let mut dirs = 0u64;
        for (e, &(a, b)) in sub.edges().iter().enumerate() {
            if !out[labels[a - 1] - 1].contains(labels[b - 1]) {
                dirs |= 1 << e;
            }
        }
        let orientation = Orientation::from_bits(&sub, dirs)?;
        Ok((sub, orientation, labels))
    }
}

/// Vertices reachable from `start` along arcs (including `start`).
pub fn reachable(out: &[VertexSet], start: usize) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut todo = seen;
    while let Ok(u) = todo.min() {
        todo = todo.without(u);
        let fresh = out[u - 1] - seen;
        seen = seen | fresh;
        todo = todo | fresh;
    }
    seen
}

/// Depth-first enumerator of acyclic orientations with cycle pruning.
///
/// Edges are decided in canonical order, forward direction first, so the
/// stream is sorted lexicographically with edge 0 most significant.
pub struct AcyclicOrientations<'g> {
    graph: &'g Graph,
    forced: Vec<Option<bool>>,
    out: Vec<u64>,
    dirs: u64,
    tried: Vec<u8>,
    applied: Vec<Option<(usize, usize)>>,
    depth: usize,
    finished: bool,
}

impl<'g> AcyclicOrientations<'g> {
    fn new(graph: &'g Graph, forced: Vec<Option<bool>>) -> Self {
        let m = graph.edge_count();
        AcyclicOrientations {
            graph,
            forced,
            out: vec![0; graph.vertex_count()],
            dirs: 0,
            tried: vec![0; m],
            applied: vec![None; m],
            depth: 0,
            finished: false,
        }
    }

    /// `b` reaches `a` in the partial orientation.
    fn reaches(&self, b: usize, a: usize) -> bool {
        let target = 1u64 << (a - 1);
        let mut seen = 1u64 << (b - 1);
        let mut todo = seen;
        while todo != 0 {
            let u = todo.trailing_zeros() as usize;
            todo &= todo - 1;
            let fresh = self.out[u] & !seen;
            if fresh & target != 0 {
                return true;
            }
            seen |= fresh;
            todo |= fresh;
        }
        seen & target != 0
    }
}

impl Iterator for AcyclicOrientations<'_> {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        let m = self.graph.edge_count();
        loop {
            if self.finished {
                return None;
            }
            if self.depth == m {
                let found = Orientation {
                    dirs: self.dirs,
                    edges: m as u8,
                };
                if m == 0 {
                    self.finished = true;
                } else {
                    self.depth -= 1;
                }
                return Some(found);
            }
            let e = self.depth;
            if let Some((a, b)) = self.applied[e].take() {
                self.out[a - 1] &= !(1u64 << (b - 1));
                self.dirs &= !(1u64 << e);
            }
            if self.tried[e] == 2 {
                self.tried[e] = 0;
                if e == 0 {
                    self.finished = true;
                } else {
                    self.depth -= 1;
                }
                continue;
            }
            let reversed = self.tried[e] == 1;
            self.tried[e] += 1;
            if self.forced[e].is_some_and(|f| f != reversed) {
                continue;
            }
            let (u, v) = self.graph.edges()[e];
            let (a, b) = if reversed { (v, u) } else { (u, v) };
            if self.reaches(b, a) {
                continue;
            }
            self.out[a - 1] |= 1u64 << (b - 1);
            if reversed {
                self.dirs |= 1u64 << e;
            }
            self.applied[e] = Some((a, b));
            self.depth += 1;
        }
    }
}

/// Every acyclic orientation of `graph`, each exactly once, in a fixed order.
pub fn enumerate_acyclic(graph: &Graph) -> Result<AcyclicOrientations<'_>> {
    if graph.edge_count() > MAX_ENUMERATION_EDGES {
        return Err(Error::TooManyEdges {
            count: graph.edge_count(),
            max: MAX_ENUMERATION_EDGES,
        });
    }
    Ok(AcyclicOrientations::new(graph, vec![None; graph.edge_count()]))
}

/// Acyclic orientations in which the listed arcs are fixed.
///
/// Used for heaps, whose intra-type chains are forced. Cost is proportional
/// to the output, so no edge cap beyond the 64-bit direction word applies.
pub fn enumerate_acyclic_extending<'g>(
    graph: &'g Graph,
    forced_arcs: &[(usize, usize)],
) -> Result<AcyclicOrientations<'g>> {
    if graph.edge_count() > 64 {
        return Err(Error::TooManyEdges {
            count: graph.edge_count(),
            max: 64,
        });
    }
    let mut forced = vec![None; graph.edge_count()];
    for &(a, b) in forced_arcs {
        let e = graph.edge_index(a, b).ok_or(Error::NotAdjacent(a, b))?;
        forced[e] = Some(a > b);
    }
    Ok(AcyclicOrientations::new(graph, forced))
}

/// Reference enumerator: filters all `2^|E|` direction words.
pub fn enumerate_acyclic_brute_force(graph: &Graph) -> Result<Vec<Orientation>> {
    let m = graph.edge_count();
    if m > MAX_ENUMERATION_EDGES {
        return Err(Error::TooManyEdges {
            count: m,
            max: MAX_ENUMERATION_EDGES,
        });
    }
    Ok((0..1u64 << m)
        .map(|dirs| Orientation {
            dirs,
            edges: m as u8,
        })
        .filter(|o| o.is_acyclic(graph))
        .collect())
}

pub fn sources(graph: &Graph, orientation: Orientation) -> VertexSet {
    orientation.sources(graph)
}

pub fn sinks(graph: &Graph, orientation: Orientation) -> VertexSet {
    orientation.sinks(graph)
}

/// Ordered source-components `S_1, …, S_k` of an acyclic orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SourceDecomposition {
    parts: Vec<VertexSet>,
}

impl SourceDecomposition {
    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Index of the component containing `v`.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|s| s.contains(v))
    }

    pub fn lambda(&self) -> Partition {
        lambda_partition(self)
    }
}

/// `S_k` is what remains of the reachability set of the smallest vertex not
/// yet covered by `S_1, …, S_{k-1}`.
pub fn source_components(graph: &Graph, orientation: Orientation) -> Result<SourceDecomposition> {
    if !orientation.is_acyclic(graph) {
        return Err(Error::CyclicOrientation);
    }
    let out = orientation.out_neighbors(graph);
    let mut remaining = graph.vertices();
    let mut parts = Vec::new();
    while let Ok(m) = remaining.min() {
        let part = reachable(&out, m) & remaining;
        parts.push(part);
        remaining = remaining - part;
    }
    Ok(SourceDecomposition { parts })
}

/// `λ` of the orientation restricted to `G[set]`, from the out-neighbour
/// sets of the full orientation (which must be acyclic).
pub(crate) fn lambda_within(out: &[VertexSet], set: VertexSet) -> Partition {
    let inside: Vec<VertexSet> = out.iter().map(|&o| o & set).collect();
    let mut remaining = set;
    let mut sizes = Vec::new();
    while let Ok(m) = remaining.min() {
        let part = reachable(&inside, m) & remaining;
        sizes.push(part.len() as u32);
        remaining = remaining - part;
    }
    Partition::new(sizes)
}

/// Component sizes sorted weakly decreasing.
pub fn lambda_partition(decomposition: &SourceDecomposition) -> Partition {
    Partition::new(decomposition.parts.iter().map(|s| s.len() as u32).collect())
}

/// Rebuilds an orientation from blocks `(S_k, γ_k)`: inside `S_k` it follows
/// `γ_k` (an orientation of the relabeled `G[S_k]`), and every edge between
/// `S_k` and `S_ℓ` with `k < ℓ` points into `S_k`.
pub fn assemble_from_blocks(graph: &Graph, blocks: &[(VertexSet, Orientation)]) -> Result<Orientation> {
    let mut block_of = vec![usize::MAX; graph.vertex_count() + 1];
    for (k, (set, _)) in blocks.iter().enumerate() {
        for v in set.iter() {
            if v > graph.vertex_count() || block_of[v] != usize::MAX {
                return Err(Error::InvalidArgument("blocks must partition the vertex set".into()));
            }
            block_of[v] = k;
        }
    }
    if block_of[1..].iter().any(|&k| k == usize::MAX) {
        return Err(Error::InvalidArgument("blocks must cover the vertex set".into()));
    }
    let mut inner = Vec::with_capacity(blocks.len());
    for (set, orientation) in blocks {
        let (sub, labels) = graph.induced_subgraph(*set)?;
        if orientation.edge_count() != sub.edge_count() {
            return Err(Error::InvalidArgument("block orientation has wrong edge count".into()));
        }
        let out = orientation.out_neighbors(&sub);
        let mut position = vec![0usize; graph.vertex_count() + 1];
        for (k, &v) in labels.iter().enumerate() {
            position[v] = k + 1;
        }
        inner.push((out, position));
    }
    let mut arcs = Vec::with_capacity(graph.edge_count());
    for &(u, v) in graph.edges() {
        let (ku, kv) = (block_of[u], block_of[v]);
        let arc = if ku == kv {
            let (out, position) = &inner[ku];
            if out[position[u] - 1].contains(position[v]) {
                (u, v)
            } else {
                (v, u)
            }
        } else if ku < kv {
            (v, u)
        } else {
            (u, v)
        };
        arcs.push(arc);
    }
    Orientation::from_arcs(graph, &arcs)
}

/// `a[V]`: number of acyclic orientations of `G[V]`, for every `V`.
///
/// Solves `Σ_{U ⊆ V independent} (-1)^{|U|} a[V∖U] = [V = ∅]` by inverting
/// the signed independent-set indicator under subset convolution.
pub fn acyclic_count_table(graph: &Graph) -> Result<SubsetTable> {
    acyclic_count_table_with(graph, &Budget::default())
}

pub fn acyclic_count_table_with(graph: &Graph, budget: &Budget) -> Result<SubsetTable> {
    let n = graph.vertex_count();
    check_table_size(n, budget)?;
    let signed = signed_independent_indicator(graph, graph.vertices());
    let values = subset::invert(&signed, n)?;
    Ok(SubsetTable::from_values(n, values))
}

/// `b[V]`: acyclic orientations of `G[V]` whose unique source is `min V`;
/// `b[∅] = 0`.
///
/// For `k = min V` this is `Σ (-1)^{|U|} a[V∖U]` over independent
/// `U ⊆ V∖{k}`, computed for all `V` with a given minimum at once by one
/// subset convolution on the vertices `k..=n`.
pub fn unique_source_min_table(graph: &Graph) -> Result<SubsetTable> {
    unique_source_min_table_with(graph, &Budget::default())
}

pub fn unique_source_min_table_with(graph: &Graph, budget: &Budget) -> Result<SubsetTable> {
    let a = acyclic_count_table_with(graph, budget)?;
    unique_source_min_from(graph, &a)
}

pub(crate) fn unique_source_min_from(graph: &Graph, a: &SubsetTable) -> Result<SubsetTable> {
    let n = graph.vertex_count();
    let mut b = vec![0i128; 1 << n];
    for k in 1..=n {
        // universe {k..n} mapped to bits 0..width
        let width = n - k + 1;
        let shift = k - 1;
        let universe = VertexSet::full(n) - VertexSet::full(k - 1);
        let f = signed_independent_indicator(graph, universe.without(k));
        let f: Vec<i128> = (0..1usize << width).map(|x| f[x << shift]).collect();
        let g: Vec<i128> = (0..1usize << width)
            .map(|x| a.get(VertexSet::from_bits((x as u64) << shift)))
            .collect();
        let h = subset::convolve(&f, &g, width)?;
        for (x, value) in h.into_iter().enumerate() {
            if x & 1 == 1 {
                b[x << shift] = value;
            }
        }
    }
    Ok(SubsetTable::from_values(n, b))
}

/// Table of `(-1)^{|U|}` on independent `U ⊆ allowed`, zero elsewhere.
fn signed_independent_indicator(graph: &Graph, allowed: VertexSet) -> Vec<i128> {
    let n = graph.vertex_count();
    let mut f = vec![0i128; 1 << n];
    for set in graph.independent_sets() {
        if set.is_subset(allowed) {
            f[set.bits() as usize] = if set.len() % 2 == 0 { 1 } else { -1 };
        }
    }
    f
}

fn check_table_size(n: usize, budget: &Budget) -> Result<()> {
    if n > budget.max_table_vertices {
        return Err(Error::TooManyVertices {
            count: n,
            max: budget.max_table_vertices,
        });
    }
    subset::check_ranked_budget(n, budget)
}

/// Number of `(u, v)`-bipolar orientations: unique source `u`, unique sink `v`.
pub fn count_bipolar(graph: &Graph, u: usize, v: usize) -> Result<u64> {
    if !graph.has_edge(u, v) {
        return Err(Error::NotAdjacent(u, v));
    }
    let (source, sink) = (VertexSet::singleton(u), VertexSet::singleton(v));
    let mut count = 0;
    for o in enumerate_acyclic(graph)? {
        if o.sources(graph) == source && o.sinks(graph) == sink {
            count += 1;
        }
    }
    Ok(count)
}

/// True iff `colors[u-1] <= colors[w-1]` along every arc `u → w`.
pub fn is_descent_free(graph: &Graph, orientation: Orientation, colors: &[i64]) -> bool {
    orientation
        .arcs(graph)
        .into_iter()
        .all(|(a, b)| colors[a - 1] <= colors[b - 1])
}

/// Vertices in a topological order of an acyclic orientation, smallest
/// available label first.
pub fn topological_order(graph: &Graph, orientation: Orientation) -> Result<Vec<usize>> {
    let inn = orientation.in_neighbors(graph);
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(graph.vertex_count());
    while order.len() < graph.vertex_count() {
        let next = (graph.vertices() - placed)
            .iter()
            .find(|&v| inn[v - 1].is_subset(placed))
            .ok_or(Error::CyclicOrientation)?;
        placed = placed.with(next);
        order.push(next);
    }
    Ok(order)
}

/// Calls `visit` with every coloring `f` (indexed by `v - 1`) with values in
/// `palette` that has no descent along the arcs of `orientation`.
///
/// `palette` must be strictly increasing.
pub fn for_each_descent_free(
    graph: &Graph,
    orientation: Orientation,
    palette: &[i64],
    mut visit: impl FnMut(&[i64]),
) -> Result<()> {
    let order = topological_order(graph, orientation)?;
    let inn = orientation.in_neighbors(graph);
    let mut level = vec![0usize; graph.vertex_count()];
    let mut colors = vec![0i64; graph.vertex_count()];
    fn go(
        depth: usize,
        order: &[usize],
        inn: &[VertexSet],
        palette: &[i64],
        level: &mut [usize],
        colors: &mut [i64],
        visit: &mut dyn FnMut(&[i64]),
    ) {
        if depth == order.len() {
            visit(colors);
            return;
        }
        let v = order[depth];
        let floor = inn[v - 1].iter().map(|u| level[u - 1]).max().unwrap_or(0);
        for k in floor..palette.len() {
            level[v - 1] = k;
            colors[v - 1] = palette[k];
            go(depth + 1, order, inn, palette, level, colors, visit);
        }
    }
    if graph.vertex_count() > 0 && palette.is_empty() {
        return Ok(());
    }
    go(0, &order, &inn, palette, &mut level, &mut colors, &mut visit);
    Ok(())
}

/// Number of colorings with values in `1..=colors` and no descent.
pub fn count_descent_free(graph: &Graph, orientation: Orientation, colors: usize) -> Result<u64> {
    let palette: Vec<i64> = (1..=colors as i64).collect();
    let mut count = 0u64;
    for_each_descent_free(graph, orientation, &palette, |_| count += 1)?;
    Ok(count)
}
