//! Both sides of the reciprocity identities for chromatic polynomials.
//!
//! Each `check_*` function computes a combinatorial count (through subset
//! convolution of the orientation tables, or direct enumeration) and the
//! corresponding evaluation of a polynomial, and reports whether they agree.
//! On graphs with at most [`NAIVE_MAX_VERTICES`] vertices the convolution
//! count is also compared with an enumerator that materializes every tuple.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::chromatic::{self, bivariate_polynomial, chi_hat_d, chromatic_polynomial};
use crate::error::{Error, Result};
use crate::graph::{Graph, SearchOrder, VertexSet};
use crate::orientations::{
    self, count_descent_free, enumerate_acyclic, source_components, Orientation,
};
use crate::report::CheckOutcome;
use crate::subset::convolve_naive;

/// Largest graph for the subset-convolution counts of the tuple identities.
pub const MAX_DP_VERTICES: usize = 14;
/// Largest graph for the generalized identity with pinned vertices.
pub const MAX_PINNED_VERTICES: usize = 12;
/// Largest graph on which tuples are also enumerated one by one.
pub const NAIVE_MAX_VERTICES: usize = 5;
/// Edge cap for identities counted over all acyclic orientations.
pub const MAX_ORIENTATION_EDGES: usize = 20;
/// Edge cap for the colored-orientation corollary.
pub const MAX_COROLLARY_EDGES: usize = 16;
/// Color cap for direct enumeration of (orientation, coloring) pairs.
pub const MAX_DIRECT_COLORS: usize = 5;

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub identity: String,
    pub params: BTreeMap<String, i64>,
    pub count: BigInt,
    pub poly_side: BigInt,
    /// `count == poly_side`.
    pub equal: bool,
    /// Count broken down by the size of the first block.
    pub strata: BTreeMap<usize, BigInt>,
    /// Further comparisons made along the way (second counting routes and
    /// equivalent formulations).
    pub cross_checks: Vec<CheckOutcome>,
}

impl ReciprocityReport {
    fn new(identity: &str, params: &[(&str, i64)], count: BigInt, poly_side: BigInt) -> Self {
        ReciprocityReport {
            identity: identity.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            equal: count == poly_side,
            count,
            poly_side,
            strata: BTreeMap::new(),
            cross_checks: Vec::new(),
        }
    }

    /// Main comparison and every cross-check agree.
    pub fn passed(&self) -> bool {
        self.equal && self.cross_checks.iter().all(|c| c.equal)
    }
}

impl Serialize for ReciprocityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            identity: &'a str,
            params: &'a BTreeMap<String, i64>,
            count: String,
            poly_side: String,
            equal: bool,
            strata: BTreeMap<String, String>,
            #[serde(skip_serializing_if = "<[CheckOutcome]>::is_empty")]
            cross_checks: &'a [CheckOutcome],
        }
        Wire {
            identity: &self.identity,
            params: &self.params,
            count: self.count.to_string(),
            poly_side: self.poly_side.to_string(),
            equal: self.equal,
            strata: self
                .strata
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            cross_checks: &self.cross_checks,
        }
        .serialize(serializer)
    }
}

impl fmt::Display for ReciprocityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "{} ({})", self.identity, params.join(", "))?;
        if !self.strata.is_empty() {
            writeln!(f, "  {:<8} {:>12}", "|V_1|", "count")?;
            for (size, value) in &self.strata {
                writeln!(f, "  {size:<8} {value:>12}")?;
            }
        }
        writeln!(f, "  {:<16} {}", "count", self.count)?;
        writeln!(f, "  {:<16} {}", "polynomial side", self.poly_side)?;
        writeln!(f, "  {:<16} {}", "equal", self.equal)?;
        for check in &self.cross_checks {
            write!(f, "  check: {} {}", check.name, if check.equal { "ok" } else { "FAIL" })?;
            if let Some(d) = &check.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// What a block `(V_k, γ_k)` of a tuple must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockRule {
    /// `V_k` non-empty, `γ_k` acyclic with unique source `min V_k`.
    Rooted,
    /// `γ_k` any acyclic orientation; `V_k` may be empty.
    Acyclic,
    /// Bare set, no orientation; may be empty.
    Free,
}

/// A block rule, optionally requiring a given vertex to lie in the block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub rule: BlockRule,
    pub pinned: Option<usize>,
}

impl Block {
    pub fn new(rule: BlockRule) -> Self {
        Block { rule, pinned: None }
    }

    pub fn pinned(rule: BlockRule, vertex: usize) -> Self {
        Block {
            rule,
            pinned: Some(vertex),
        }
    }
}

fn sign(exponent_parity: i64) -> BigInt {
    if exponent_parity.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Per-subset tables for each block, as big integers.
fn block_tables(graph: &Graph, blocks: &[Block]) -> Result<Vec<Vec<BigInt>>> {
    let n = graph.vertex_count();
    let a = orientations::acyclic_count_table(graph)?;
    let b = orientations::unique_source_min_from(graph, &a)?;
    Ok(blocks
        .iter()
        .map(|block| {
            (0..1usize << n)
                .map(|bits| {
                    let set = VertexSet::from_bits(bits as u64);
                    if block.pinned.is_some_and(|v| !set.contains(v)) {
                        return BigInt::zero();
                    }
                    match block.rule {
                        BlockRule::Rooted => BigInt::from(b.get(set)),
                        BlockRule::Acyclic => BigInt::from(a.get(set)),
                        BlockRule::Free => BigInt::one(),
                    }
                })
                .collect()
        })
        .collect())
}

/// `h[V]` = number of tuples of blocks covering exactly `V`.
fn chain(tables: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); 1 << n];
    acc[0] = BigInt::one();
    for table in tables.iter().rev() {
        acc = convolve_naive(table, &acc, n);
    }
    acc
}

/// Tuples `((V_1, γ_1), …)` with disjoint blocks covering the vertex set,
/// counted by subset convolution, with the breakdown by `|V_1|`.
pub fn tuple_count(graph: &Graph, blocks: &[Block]) -> Result<(BigInt, BTreeMap<usize, BigInt>)> {
    let n = graph.vertex_count();
    let tables = block_tables(graph, blocks)?;
    let full = (1usize << n) - 1;
    if tables.is_empty() {
        let count = if n == 0 { BigInt::one() } else { BigInt::zero() };
        return Ok((count, BTreeMap::new()));
    }
    let rest = chain(&tables[1..], n);
    let mut strata = BTreeMap::new();
    let mut total = BigInt::zero();
    for (bits, first) in tables[0].iter().enumerate() {
        if first.is_zero() || rest[full ^ bits].is_zero() {
            continue;
        }
        let term = first * &rest[full ^ bits];
        *strata.entry(bits.count_ones() as usize).or_insert_with(BigInt::zero) += &term;
        total += term;
    }
    Ok((total, strata))
}

/// Same count as [`tuple_count`], by assigning each vertex to a block and
/// listing the admissible orientations of every block explicitly.
pub fn naive_tuple_count(graph: &Graph, blocks: &[Block]) -> Result<BigInt> {
    let n = graph.vertex_count();
    if n > NAIVE_MAX_VERTICES {
        return Err(Error::TooManyVertices {
            count: n,
            max: NAIVE_MAX_VERTICES,
        });
    }
    let k = blocks.len();
    if k == 0 {
        return Ok(if n == 0 { BigInt::one() } else { BigInt::zero() });
    }
    let mut cache: HashMap<(VertexSet, BlockRule), Vec<Orientation>> = HashMap::new();
    let mut total = BigInt::zero();
    let assignments = (k as u64).pow(n as u32);
    for code in 0..assignments {
        let mut sets = vec![VertexSet::EMPTY; k];
        let mut c = code;
        for v in 1..=n {
            sets[(c % k as u64) as usize] = sets[(c % k as u64) as usize].with(v);
            c /= k as u64;
        }
        let mut product = BigInt::one();
        for (block, &set) in blocks.iter().zip(&sets) {
            if block.pinned.is_some_and(|v| !set.contains(v)) {
                product = BigInt::zero();
                break;
            }
            if block.rule == BlockRule::Free {
                continue;
            }
            let listed = match cache.get(&(set, block.rule)) {
                Some(list) => list,
                None => {
                    let list = admissible_orientations(graph, set, block.rule)?;
                    cache.entry((set, block.rule)).or_insert(list)
                }
            };
            product *= listed.len();
            if product.is_zero() {
                break;
            }
        }
        total += product;
    }
    Ok(total)
}

fn admissible_orientations(graph: &Graph, set: VertexSet, rule: BlockRule) -> Result<Vec<Orientation>> {
    let (sub, _) = graph.induced_subgraph(set)?;
    let all = enumerate_acyclic(&sub)?;
    Ok(match rule {
        BlockRule::Rooted if set.is_empty() => Vec::new(),
        BlockRule::Rooted => all.filter(|o| o.sources(&sub) == VertexSet::singleton(1)).collect(),
        BlockRule::Acyclic | BlockRule::Free => all.collect(),
    })
}

fn check_vertex_cap(graph: &Graph, max: usize) -> Result<()> {
    if graph.vertex_count() > max {
        return Err(Error::TooManyVertices {
            count: graph.vertex_count(),
            max,
        });
    }
    Ok(())
}

fn check_edge_cap(graph: &Graph, max: usize) -> Result<()> {
    if graph.edge_count() > max {
        return Err(Error::TooManyEdges {
            count: graph.edge_count(),
            max,
        });
    }
    Ok(())
}

fn check_color_cap(colors: usize) -> Result<()> {
    if colors > MAX_DIRECT_COLORS {
        return Err(Error::ResourceBudgetExceeded {
            what: "colors for direct pair enumeration",
            limit: MAX_DIRECT_COLORS,
        });
    }
    Ok(())
}

fn naive_cross_check(graph: &Graph, blocks: &[Block], count: &BigInt) -> Result<Option<CheckOutcome>> {
    if graph.vertex_count() > NAIVE_MAX_VERTICES {
        return Ok(None);
    }
    let naive = naive_tuple_count(graph, blocks)?;
    Ok(Some(CheckOutcome::compare("explicit tuple enumeration", &naive, count)))
}

fn theorem1_blocks(i: usize, j: usize) -> Vec<Block> {
    let mut blocks = vec![Block::new(BlockRule::Rooted); i];
    blocks.extend(vec![Block::new(BlockRule::Acyclic); j]);
    blocks
}

/// `(-1)^{n-i} χ^{(i)}(-j)` against tuples `((V_1,γ_1), …, (V_{i+j},γ_{i+j}))`
/// with the first `i` blocks rooted at their minimum and the last `j` blocks
/// arbitrary acyclic.
pub fn check_theorem1(graph: &Graph, i: usize, j: usize) -> Result<ReciprocityReport> {
    check_vertex_cap(graph, MAX_DP_VERTICES)?;
    let n = graph.vertex_count() as i64;
    let blocks = theorem1_blocks(i, j);
    let (count, strata) = tuple_count(graph, &blocks)?;
    let chi = chromatic_polynomial(graph)?;
    let poly = sign(n - i as i64) * chi.derivative(i).evaluate(&BigInt::from(-(j as i64)));
    let mut report = ReciprocityReport::new("theorem1", &[("i", i as i64), ("j", j as i64)], count, poly);
    report.strata = strata;
    if let Some(check) = naive_cross_check(graph, &blocks, &report.count)? {
        report.cross_checks.push(check);
    }
    Ok(report)
}

/// `(-1)^n χ(-j)` against pairs `(γ, f)` with `γ` acyclic and `f` a
/// `j`-coloring without descent along `γ`.
pub fn check_stanley(graph: &Graph, j: usize) -> Result<ReciprocityReport> {
    check_edge_cap(graph, MAX_ORIENTATION_EDGES)?;
    check_color_cap(j)?;
    let n = graph.vertex_count() as i64;
    let mut count = BigInt::zero();
    for o in enumerate_acyclic(graph)? {
        count += count_descent_free(graph, o, j)?;
    }
    let chi = chromatic_polynomial(graph)?;
    let poly = sign(n) * chi.evaluate(&BigInt::from(-(j as i64)));
    let mut report = ReciprocityReport::new("stanley", &[("j", j as i64)], count, poly);
    if graph.vertex_count() <= MAX_DP_VERTICES {
        let (tuples, _) = tuple_count(graph, &theorem1_blocks(0, j))?;
        report
            .cross_checks
            .push(CheckOutcome::compare("equals theorem1 count with i=0", &tuples, &report.count));
    }
    Ok(report)
}

/// `(-1)^{n-i} [q^i] χ` against acyclic orientations with exactly `i`
/// source-components.
pub fn check_greene_zaslavsky(graph: &Graph, i: usize) -> Result<ReciprocityReport> {
    check_edge_cap(graph, MAX_ORIENTATION_EDGES)?;
    let n = graph.vertex_count() as i64;
    let mut count = BigInt::zero();
    for o in enumerate_acyclic(graph)? {
        if source_components(graph, o)?.len() == i {
            count += 1;
        }
    }
    let chi = chromatic_polynomial(graph)?;
    let poly = sign(n - i as i64) * chi.coeff(i);
    let mut report = ReciprocityReport::new("greene-zaslavsky", &[("i", i as i64)], count, poly);
    if graph.vertex_count() <= MAX_DP_VERTICES {
        let (tuples, _) = tuple_count(graph, &theorem1_blocks(i, 0))?;
        let factorial: BigInt = (1..=i).map(BigInt::from).product();
        report.cross_checks.push(CheckOutcome::compare(
            "i! times count equals theorem1 count with j=0",
            &tuples,
            &(factorial * &report.count),
        ));
    }
    Ok(report)
}

/// `(-1)^{n-i} [q^i] χ(q-j)` against pairs `(γ, f)` with `f` a
/// `(j+1)`-coloring without descent such that `γ` restricted to the vertices
/// of color 1 has exactly `i` source-components.
pub fn check_corollary43(graph: &Graph, i: usize, j: usize) -> Result<ReciprocityReport> {
    check_edge_cap(graph, MAX_COROLLARY_EDGES)?;
    check_color_cap(j + 1)?;
    let n = graph.vertex_count() as i64;
    let palette: Vec<i64> = (1..=j as i64 + 1).collect();
    let mut count = BigInt::zero();
    let mut components: HashMap<(Orientation, VertexSet), usize> = HashMap::new();
    for o in enumerate_acyclic(graph)? {
        let mut failure = None;
        orientations::for_each_descent_free(graph, o, &palette, |f| {
            if failure.is_some() {
                return;
            }
            let ones = VertexSet::from_vertices((1..=f.len()).filter(|&v| f[v - 1] == 1));
            let k = match components.get(&(o, ones)) {
                Some(&k) => k,
                None => match o
                    .restrict(graph, ones)
                    .and_then(|(sub, r, _)| source_components(&sub, r))
                {
                    Ok(dec) => *components.entry((o, ones)).or_insert(dec.len()),
                    Err(e) => {
                        failure = Some(e);
                        return;
                    }
                },
            };
            if k == i {
                count += 1;
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
    }
    let shifted = chromatic_polynomial(graph)?.shift(&BigInt::from(-(j as i64)));
    let poly = sign(n - i as i64) * shifted.coeff(i);
    Ok(ReciprocityReport::new("corollary43", &[("i", i as i64), ("j", j as i64)], count, poly))
}

fn check_clique_prefix(graph: &Graph, d: usize) -> Result<()> {
    if d > graph.vertex_count() || !graph.is_clique(VertexSet::full(d)) {
        return Err(Error::NotAClique(d));
    }
    Ok(())
}

/// `(-1)^{n-d-i} χ̂_d^{(i)}(-j)` against tuples of `d+i+j` blocks where block
/// `k ≤ d` contains vertex `k`, the first `d+i` blocks are rooted at their
/// minimum and the last `j` are arbitrary acyclic.
pub fn check_theorem44(graph: &Graph, d: usize, i: usize, j: usize) -> Result<ReciprocityReport> {
    check_clique_prefix(graph, d)?;
    check_vertex_cap(graph, MAX_PINNED_VERTICES)?;
    let n = graph.vertex_count() as i64;
    let mut blocks: Vec<Block> = (1..=d).map(|k| Block::pinned(BlockRule::Rooted, k)).collect();
    blocks.extend(theorem1_blocks(i, j));
    let (count, strata) = tuple_count(graph, &blocks)?;
    let hat = chi_hat_d(graph, d)?;
    let poly = sign(n - d as i64 - i as i64) * hat.derivative(i).evaluate(&BigInt::from(-(j as i64)));
    let mut report = ReciprocityReport::new(
        "theorem44",
        &[("d", d as i64), ("i", i as i64), ("j", j as i64)],
        count,
        poly,
    );
    report.strata = strata;
    if let Some(check) = naive_cross_check(graph, &blocks, &report.count)? {
        report.cross_checks.push(check);
    }
    Ok(report)
}

/// Acyclic orientations with exactly `d+i` source-components, vertices
/// `1..=d` in distinct source-components and vertex 1 the unique sink.
fn count_theorem45(graph: &Graph, d: usize, i: usize) -> Result<BigInt> {
    let mut count = BigInt::zero();
    let sink = VertexSet::singleton(1);
    for o in enumerate_acyclic(graph)? {
        if o.sinks(graph) != sink {
            continue;
        }
        let dec = source_components(graph, o)?;
        if dec.len() != d + i {
            continue;
        }
        let mut owners: Vec<usize> = (1..=d).filter_map(|v| dec.component_of(v)).collect();
        owners.sort_unstable();
        owners.dedup();
        if owners.len() == d {
            count += 1;
        }
    }
    Ok(count)
}

/// `(-1)^{n-d-i} [q^i] χ̂_d(q+1)` against acyclic orientations with `d+i`
/// source-components separating `1..=d` and with 1 as unique sink.
///
/// The graph must be connected and labeled so that every vertex `k > 1` has a
/// smaller neighbour. The count is repeated on a second such labeling (a
/// largest-first search keeping `1..=d`) as a cross-check.
pub fn check_theorem45(graph: &Graph, d: usize, i: usize) -> Result<ReciprocityReport> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be positive".into()));
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    check_clique_prefix(graph, d)?;
    if let Some(k) = graph.first_non_ascending() {
        return Err(Error::BadLabeling(k));
    }
    check_edge_cap(graph, MAX_ORIENTATION_EDGES)?;
    let n = graph.vertex_count() as i64;
    let count = count_theorem45(graph, d, i)?;
    let shifted = chi_hat_d(graph, d)?.shift(&BigInt::one());
    let poly = sign(n - d as i64 - i as i64) * shifted.coeff(i);
    let mut report = ReciprocityReport::new("theorem45", &[("d", d as i64), ("i", i as i64)], count, poly);
    let (other, _) = graph.ascending_relabel_by(d, SearchOrder::LargestFirst)?;
    let again = count_theorem45(&other, d, i)?;
    report
        .cross_checks
        .push(CheckOutcome::compare("same count after relabeling", &again, &report.count));
    Ok(report)
}

/// Relabels `graph` by a search from the clique `1..=d` and then runs
/// [`check_theorem45`].
pub fn check_theorem45_relabeled(
    graph: &Graph,
    d: usize,
    i: usize,
    order: SearchOrder,
) -> Result<ReciprocityReport> {
    let (relabeled, _) = graph.ascending_relabel_by(d, order)?;
    check_theorem45(&relabeled, d, i)
}

/// `(-1)^n χ_G(-j, -k)` against tuples
/// `((V_1,γ_1), …, (V_j,γ_j), V_{j+1}, …, V_{j+k})` covering the vertex set.
pub fn check_bivariate_reciprocity(graph: &Graph, j: usize, k: usize) -> Result<ReciprocityReport> {
    check_vertex_cap(graph, MAX_PINNED_VERTICES)?;
    let n = graph.vertex_count() as i64;
    let mut blocks = vec![Block::new(BlockRule::Acyclic); j];
    blocks.extend(vec![Block::new(BlockRule::Free); k]);
    let (count, strata) = tuple_count(graph, &blocks)?;
    let bivariate = bivariate_polynomial(graph)?;
    let poly = sign(n) * bivariate.evaluate(&BigInt::from(-(j as i64)), &BigInt::from(-(k as i64)));
    let mut report = ReciprocityReport::new("bivariate", &[("j", j as i64), ("k", k as i64)], count, poly);
    report.strata = strata;
    if let Some(check) = naive_cross_check(graph, &blocks, &report.count)? {
        report.cross_checks.push(check);
    }
    Ok(report)
}

/// Crapo's count: `(u, v)`-bipolar orientations against
/// `(-1)^n [q^1] χ̂_1(q+1)`.
pub fn check_bipolar(graph: &Graph, u: usize, v: usize) -> Result<ReciprocityReport> {
    let count = BigInt::from(orientations::count_bipolar(graph, u, v)?);
    let hat = chromatic::divide_falling_factorial(&chromatic_polynomial(graph)?, 1)?;
    let poly = sign(graph.vertex_count() as i64) * hat.shift(&BigInt::one()).coeff(1);
    Ok(ReciprocityReport::new("bipolar", &[("u", u as i64), ("v", v as i64)], count, poly))
}

/// Identity names accepted by [`check_by_name`].
pub const CHECK_NAMES: &[&str] = &[
    "theorem1",
    "stanley",
    "greene-zaslavsky",
    "corollary43",
    "theorem44",
    "theorem45",
    "bivariate",
    "bipolar",
];

/// Integer parameters shared by the named checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub i: usize,
    pub j: usize,
    pub d: usize,
    pub k: usize,
    pub u: usize,
    pub v: usize,
}

/// Dispatches one of [`CHECK_NAMES`]. For `bivariate`, `k` is the number of
/// free blocks; for `bipolar`, `u` and `v` are the poles.
pub fn check_by_name(graph: &Graph, name: &str, p: CheckParams) -> Result<ReciprocityReport> {
    match name {
        "theorem1" => check_theorem1(graph, p.i, p.j),
        "stanley" => check_stanley(graph, p.j),
        "greene-zaslavsky" | "gz" => check_greene_zaslavsky(graph, p.i),
        "corollary43" => check_corollary43(graph, p.i, p.j),
        "theorem44" => check_theorem44(graph, p.d, p.i, p.j),
        "theorem45" => check_theorem45(graph, p.d, p.i),
        "bivariate" => check_bivariate_reciprocity(graph, p.j, p.k),
        "bipolar" => check_bipolar(graph, p.u, p.v),
        other => Err(Error::InvalidArgument(format!(
            "unknown check {other:?}; expected one of {}",
            CHECK_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::cycle(4).unwrap()
    }

    fn big(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn rooted_and_acyclic_tuples_of_c4() {
        let r = check_theorem1(&c4(), 1, 1).unwrap();
        assert_eq!(r.count, big(31));
        assert!(r.passed(), "{r}");
        let strata: Vec<_> = r.strata.iter().map(|(k, v)| (*k, v.clone())).collect();
        assert_eq!(strata, vec![(1, big(16)), (2, big(8)), (3, big(4)), (4, big(3))]);
        let r = check_theorem1(&c4(), 0, 1).unwrap();
        assert_eq!((r.count.clone(), r.passed()), (big(14), true));
        let r = check_theorem1(&c4(), 0, 0).unwrap();
        assert_eq!((r.count.clone(), r.poly_side.clone()), (big(0), big(0)));
    }

    #[test]
    fn json_shape() {
        let r = check_theorem1(&c4(), 1, 1).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["count"], "31");
        assert_eq!(v["poly_side"], "31");
        assert_eq!(v["equal"], true);
        assert_eq!(v["strata"]["2"], "8");
        assert_eq!(v["params"]["i"], 1);
    }

    #[test]
    fn descent_free_pairs_of_c4() {
        assert_eq!(check_stanley(&c4(), 1).unwrap().count, big(14));
        let r = check_stanley(&c4(), 2).unwrap();
        assert_eq!((r.count.clone(), r.passed()), (big(78), true));
        for j in 0..4 {
            assert_eq!(check_stanley(&Graph::empty(1).unwrap(), j).unwrap().count, big(j as i64));
        }
        assert!(check_stanley(&c4(), 6).is_err());
    }

    #[test]
    fn source_component_counts_of_c4() {
        let expected = [(1, 3), (2, 6), (3, 4), (4, 1), (5, 0)];
        for (i, c) in expected {
            let r = check_greene_zaslavsky(&c4(), i).unwrap();
            assert_eq!(r.count, big(c));
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn colored_components_of_c4() {
        let g = c4();
        for i in 0..=4 {
            let r = check_corollary43(&g, i, 0).unwrap();
            assert_eq!(r.count, check_greene_zaslavsky(&g, i).unwrap().count);
        }
        // i = 0: color 1 unused, so the rest is a j-coloring of the Stanley kind
        assert_eq!(check_corollary43(&g, 0, 2).unwrap().count, check_stanley(&g, 2).unwrap().count);
        let r = check_corollary43(&g, 1, 1).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn pinned_tuples_of_c4() {
        let r = check_theorem44(&c4(), 2, 1, 0).unwrap();
        assert_eq!(r.count, big(3));
        assert!(r.passed(), "{r}");
        let r0 = check_theorem44(&c4(), 0, 1, 1).unwrap();
        assert_eq!(r0.count, check_theorem1(&c4(), 1, 1).unwrap().count);
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(check_theorem44(&k3, 3, 0, 0).unwrap().count, big(1));
        assert_eq!(check_theorem44(&c4(), 3, 0, 0), Err(Error::NotAClique(3)));
    }

    #[test]
    fn unique_sink_orientations_of_c4() {
        let r = check_theorem45(&c4(), 1, 1).unwrap();
        assert_eq!((r.count.clone(), r.passed()), (big(1), true));
        let k2 = Graph::path(2).unwrap();
        let r = check_theorem45(&k2, 1, 0).unwrap();
        assert_eq!((r.count.clone(), r.poly_side.clone()), (big(0), big(0)));
        assert_eq!(check_theorem45(&k2, 1, 1).unwrap().count, big(1));
        let r = check_theorem45(&c4(), 2, 1).unwrap();
        assert_eq!((r.count.clone(), r.passed()), (big(1), true));
        let bad = Graph::from_edge_list(3, &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(check_theorem45(&bad, 1, 0), Err(Error::BadLabeling(2)));
        let split = Graph::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(check_theorem45(&split, 1, 0), Err(Error::Disconnected));
        let relabeled = check_theorem45_relabeled(&bad, 1, 1, SearchOrder::SmallestFirst).unwrap();
        assert!(relabeled.passed());
    }

    #[test]
    fn bivariate_examples() {
        let g = c4();
        for j in 0..3 {
            let r = check_bivariate_reciprocity(&g, j, 0).unwrap();
            assert_eq!(r.count, check_theorem1(&g, 0, j).unwrap().count);
        }
        for k in 0..4 {
            let r = check_bivariate_reciprocity(&Graph::empty(1).unwrap(), 0, k).unwrap();
            assert_eq!(r.count, big(k as i64));
            assert!(r.passed());
        }
        assert!(check_bivariate_reciprocity(&g, 1, 1).unwrap().passed());
    }

    #[test]
    fn bipolar_example() {
        let r = check_bipolar(&c4(), 2, 1).unwrap();
        assert_eq!((r.count.clone(), r.passed()), (big(1), true));
    }

    #[test]
    fn naive_matches_dp_on_pinned_blocks() {
        let g = Graph::from_edge_list(5, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5)]).unwrap();
        let blocks = vec![
            Block::pinned(BlockRule::Rooted, 1),
            Block::pinned(BlockRule::Rooted, 2),
            Block::new(BlockRule::Acyclic),
            Block::new(BlockRule::Free),
        ];
        let (dp, _) = tuple_count(&g, &blocks).unwrap();
        assert_eq!(dp, naive_tuple_count(&g, &blocks).unwrap());
    }

    #[test]
    fn dispatch_by_name() {
        let p = CheckParams {
            i: 1,
            j: 1,
            ..CheckParams::default()
        };
        assert_eq!(check_by_name(&c4(), "theorem1", p).unwrap().count, big(31));
        assert!(check_by_name(&c4(), "nope", p).is_err());
    }
}
