//! Chromatic polynomials and their relatives: the clique quotient `χ̂_d`, the
//! bivariate polynomial `χ_G(q, r)` and multicoloring polynomials.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{ExponentVector, Graph, VertexSet};
use crate::poly::{IntPolynomial, RatPolynomial};
use crate::subset;

/// Chromatic polynomial by memoized deletion–contraction.
pub fn chromatic_polynomial(graph: &Graph) -> Result<IntPolynomial> {
    chromatic_polynomial_with(graph, &Budget::default())
}

pub fn chromatic_polynomial_with(graph: &Graph, budget: &Budget) -> Result<IntPolynomial> {
    let n = graph.vertex_count();
    if n > budget.max_contraction_vertices {
        return Err(Error::ResourceBudgetExceeded {
            what: "deletion-contraction vertices",
            limit: budget.max_contraction_vertices,
        });
    }
    let adj: Vec<u64> = (1..=n).map(|v| graph.neighbors(v).bits()).collect();
    let mut solver = Contraction {
        memo: HashMap::new(),
        limit: budget.max_memo_entries,
    };
    solver.solve(adj)
}

struct Contraction {
    memo: HashMap<Vec<u64>, IntPolynomial>,
    limit: usize,
}

impl Contraction {
    fn solve(&mut self, adj: Vec<u64>) -> Result<IntPolynomial> {
        let n = adj.len();
        let degrees: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
        let edges: u32 = degrees.iter().sum::<u32>() / 2;
        if edges == 0 {
            return Ok(IntPolynomial::monomial(BigInt::one(), n));
        }
        if edges as usize == n * (n - 1) / 2 {
            return Ok(IntPolynomial::falling_factorial(n));
        }
        let key = memo_key(&adj);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        // highest degree, ties to the smallest index; its first neighbor
        let v = (0..n).max_by_key(|&i| (degrees[i], std::cmp::Reverse(i))).unwrap();
        let w = adj[v].trailing_zeros() as usize;

        let mut deleted = adj.clone();
        deleted[v] &= !(1 << w);
        deleted[w] &= !(1 << v);
        let contracted = contract(&deleted, v, w);

        let result = &self.solve(deleted)? - &self.solve(contracted)?;
        if self.memo.len() >= self.limit {
            return Err(Error::ResourceBudgetExceeded {
                what: "deletion-contraction memo entries",
                limit: self.limit,
            });
        }
        self.memo.insert(key, result.clone());
        Ok(result)
    }
}

/// Merges `w` into `v` (no edge between them) and removes `w`.
fn contract(adj: &[u64], v: usize, w: usize) -> Vec<u64> {
    let mut merged = adj.to_vec();
    merged[v] |= merged[w];
    for u in 0..adj.len() {
        if merged[w] >> u & 1 == 1 {
            merged[u] |= 1 << v;
        }
    }
    merged.remove(w);
    let low = (1u64 << w) - 1;
    merged
        .into_iter()
        .map(|a| (a & low) | ((a >> 1) & !low))
        .collect()
}

/// Lower-triangular adjacency bits prefixed by the vertex count.
fn memo_key(adj: &[u64]) -> Vec<u64> {
    let mut key = vec![adj.len() as u64];
    let mut word = 0u64;
    let mut used = 0;
    for (i, &a) in adj.iter().enumerate() {
        let mut row = a & ((1u64 << i) - 1);
        let mut width = i;
        while width > 0 {
            let take = width.min(64 - used);
            let chunk = if take == 64 { row } else { row & ((1u64 << take) - 1) };
            word |= chunk << used;
            used += take;
            row = if take == 64 { 0 } else { row >> take };
            width -= take;
            if used == 64 {
                key.push(word);
                word = 0;
                used = 0;
            }
        }
    }
    key.push(word);
    key
}

/// Independence polynomials `f_X(t) = Σ_{Y ⊆ X independent} t^{|Y|}` of all
/// vertex sets `X`, grouped with signed multiplicities `Σ (-1)^{n-|X|}`.
fn inclusion_exclusion_classes(graph: &Graph, budget: &Budget) -> Result<BTreeMap<Vec<u64>, i64>> {
    let n = graph.vertex_count();
    if n > budget.max_table_vertices {
        return Err(Error::TooManyVertices {
            count: n,
            max: budget.max_table_vertices,
        });
    }
    subset::check_ranked_budget(n, budget)?;
    let size = 1usize << n;
    let mut layers = vec![vec![0u64; size]; n + 1];
    for set in graph.independent_sets() {
        layers[set.len()][set.bits() as usize] = 1;
    }
    for layer in &mut layers {
        for bit in 0..n {
            for x in 0..size {
                if x >> bit & 1 == 1 {
                    layer[x] += layer[x ^ (1 << bit)];
                }
            }
        }
    }
    let mut classes = BTreeMap::new();
    for x in 0..size {
        let key: Vec<u64> = layers.iter().map(|layer| layer[x]).collect();
        let sign = if (n - x.count_ones() as usize) % 2 == 0 { 1 } else { -1 };
        *classes.entry(key).or_insert(0) += sign;
    }
    classes.retain(|_, c| *c != 0);
    Ok(classes)
}

/// Truncated powers `f^0, f^1, …, f^{n}` modulo `t^{n+1}`.
fn truncated_powers(f: &[u64], n: usize) -> Vec<Vec<BigInt>> {
    let f: Vec<BigInt> = f.iter().map(|&c| BigInt::from(c)).collect();
    let mut powers = Vec::with_capacity(n + 1);
    let mut current = vec![BigInt::zero(); n + 1];
    current[0] = BigInt::one();
    for _ in 0..=n {
        let mut next = vec![BigInt::zero(); n + 1];
        for (i, a) in current.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in f.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    next[i + j] += a * b;
                }
            }
        }
        powers.push(std::mem::replace(&mut current, next));
    }
    powers
}

/// Chromatic polynomial by inclusion–exclusion over ordered `q`-tuples of
/// disjoint independent sets covering the vertex set:
/// `χ_G(q) = Σ_X (-1)^{n-|X|} [t^n] f_X(t)^q`. Evaluated at `q = 0..=n` and
/// interpolated.
pub fn chromatic_polynomial_dp(graph: &Graph) -> Result<IntPolynomial> {
    chromatic_polynomial_dp_with(graph, &Budget::default())
}

pub fn chromatic_polynomial_dp_with(graph: &Graph, budget: &Budget) -> Result<IntPolynomial> {
    let n = graph.vertex_count();
    let mut values = vec![BigInt::zero(); n + 1];
    for (f, c) in inclusion_exclusion_classes(graph, budget)? {
        for (q, power) in truncated_powers(&f, n).into_iter().enumerate() {
            values[q] += BigInt::from(c) * &power[n];
        }
    }
    IntPolynomial::interpolate(&values)
}

/// Proper colorings with `q` colors, by backtracking.
pub fn count_proper_colorings(graph: &Graph, q: usize) -> BigInt {
    fn go(graph: &Graph, v: usize, colors: &mut [usize], q: usize) -> BigInt {
        if v > graph.vertex_count() {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for c in 1..=q {
            if graph.neighbors(v).iter().all(|u| u > v || colors[u - 1] != c) {
                colors[v - 1] = c;
                total += go(graph, v + 1, colors, q);
            }
        }
        colors[v - 1] = 0;
        total
    }
    go(graph, 1, &mut vec![0; graph.vertex_count()], q)
}

/// `χ_G(q) / (q(q-1)⋯(q-d+1))`, a polynomial when `1..=d` is a clique.
pub fn chi_hat_d(graph: &Graph, d: usize) -> Result<IntPolynomial> {
    if d > graph.vertex_count() || !graph.is_clique(VertexSet::full(d)) {
        return Err(Error::NotAClique(d));
    }
    let chi = chromatic_polynomial(graph)?;
    divide_falling_factorial(&chi, d)
}

pub(crate) fn divide_falling_factorial(chi: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    let mut quotient = chi.clone();
    for r in 0..d {
        let (next, remainder) = quotient.div_linear(&BigInt::from(r));
        if !remainder.is_zero() {
            return Err(Error::InternalInvariantViolation(format!(
                "chromatic polynomial not divisible by q - {r}"
            )));
        }
        quotient = next;
    }
    Ok(quotient)
}

/// Polynomial in `q` and `r`, stored as `(i, j) ↦ [q^i r^j]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivariatePolynomial {
    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), BigInt)>) -> Self {
        let mut out = BivariatePolynomial::default();
        for (key, c) in terms {
            out.add_term(key, c);
        }
        out
    }

    fn add_term(&mut self, key: (usize, usize), c: BigInt) {
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn evaluate(&self, q: &BigInt, r: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * Pow::pow(q, i as u32) * Pow::pow(r, j as u32))
            .sum()
    }

    /// The polynomial in `q` obtained at `r = 0`.
    pub fn at_r_zero(&self) -> IntPolynomial {
        let degree = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                coeffs[i] = c.clone();
            }
        }
        IntPolynomial::new(coeffs)
    }
}

/// List of `{"i": …, "j": …, "c": "…"}` objects.
impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            i: usize,
            j: usize,
            c: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&(i, j), c) in &self.terms {
            seq.serialize_element(&Term { i, j, c: c.to_string() })?;
        }
        seq.end()
    }
}

/// `C(n, 0), …, C(n, len)`.
fn binomial_row(n: u64, len: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(len + 1);
    let mut current = BigInt::one();
    for k in 0..=len as u64 {
        row.push(current.clone());
        current = if k < n { current * (n - k) / (k + 1) } else { BigInt::zero() };
    }
    row
}

/// Maximum vertex count for the bivariate polynomial.
pub const MAX_BIVARIATE_VERTICES: usize = 16;

/// `χ_G(q, r)`: colorings with `q + r` colors where only the first `q` must
/// be proper.
///
/// Evaluated on the grid `0..=n` × `0..=n` through
/// `Σ_X (-1)^{n-|X|} [t^n] f_X(t)^q (1+t)^{|X| r}` and interpolated one
/// variable at a time.
pub fn bivariate_polynomial(graph: &Graph) -> Result<BivariatePolynomial> {
    let n = graph.vertex_count();
    if n > MAX_BIVARIATE_VERTICES {
        return Err(Error::TooManyVertices {
            count: n,
            max: MAX_BIVARIATE_VERTICES,
        });
    }
    let mut grid = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for (f, c) in inclusion_exclusion_classes(graph, &Budget::default())? {
        // the free colors contribute (1+t)^{|X| r}
        let size = f.get(1).copied().unwrap_or(0);
        let free: Vec<Vec<BigInt>> = (0..=n as u64).map(|r| binomial_row(size * r, n)).collect();
        for (q, power) in truncated_powers(&f, n).into_iter().enumerate() {
            for (r, row) in free.iter().enumerate() {
                let value: BigInt = (0..=n).map(|k| &power[k] * &row[n - k]).sum();
                grid[q][r] += BigInt::from(c) * value;
            }
        }
    }
    let mut terms = Vec::new();
    let rows = grid
        .iter()
        .map(|values| IntPolynomial::interpolate(values))
        .collect::<Result<Vec<_>>>()?;
    for j in 0..=n {
        let column: Vec<BigInt> = rows.iter().map(|row| row.coeff(j)).collect();
        let in_q = IntPolynomial::interpolate(&column)?;
        for (i, c) in in_q.coeffs().iter().enumerate() {
            terms.push(((i, j), c.clone()));
        }
    }
    Ok(BivariatePolynomial::from_terms(terms))
}

/// `χ_G(q, r) = Σ_W χ_{G[W]}(q) r^{n-|W|}`, one chromatic polynomial per
/// vertex subset.
pub fn bivariate_by_subsets(graph: &Graph) -> Result<BivariatePolynomial> {
    let n = graph.vertex_count();
    if n > MAX_BIVARIATE_VERTICES {
        return Err(Error::TooManyVertices {
            count: n,
            max: MAX_BIVARIATE_VERTICES,
        });
    }
    let mut terms = Vec::new();
    for w in graph.vertices().subsets() {
        let (sub, _) = graph.induced_subgraph(w)?;
        let chi = chromatic_polynomial(&sub)?;
        for (i, c) in chi.coeffs().iter().enumerate() {
            terms.push(((i, n - w.len()), c.clone()));
        }
    }
    Ok(BivariatePolynomial::from_terms(terms))
}

/// Colorings with colors `1..=q+r` in which adjacent vertices never share a
/// color from `1..=q`.
pub fn count_bivariate_colorings(graph: &Graph, q: usize, r: usize) -> BigInt {
    fn go(graph: &Graph, v: usize, colors: &mut [usize], q: usize, r: usize) -> BigInt {
        if v > graph.vertex_count() {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for c in 1..=q + r {
            let clash = c <= q && graph.neighbors(v).iter().any(|u| u < v && colors[u - 1] == c);
            if !clash {
                colors[v - 1] = c;
                total += go(graph, v + 1, colors, q, r);
            }
        }
        total
    }
    go(graph, 1, &mut vec![0; graph.vertex_count()], q, r)
}

/// Largest `|m|` accepted by [`multicolor_polynomial`].
pub const MAX_MULTICOLOR_TOTAL: usize = 22;

/// `χ_{G,m}(q) = χ_{G^m}(q) / m!`: multicolorings of type `m`, where vertex
/// `i` receives a set of `m_i` colors and adjacent vertices get disjoint sets.
pub fn multicolor_polynomial(graph: &Graph, m: &ExponentVector) -> Result<RatPolynomial> {
    if m.total() > MAX_MULTICOLOR_TOTAL {
        return Err(Error::TooManyVertices {
            count: m.total(),
            max: MAX_MULTICOLOR_TOTAL,
        });
    }
    let blown = graph.blowup(m)?;
    let chi = chromatic_polynomial(&blown)?;
    let factorial = BigRational::from_integer(m.factorial());
    let result = chi.to_rational().scale(&(BigRational::one() / factorial));
    for q in 0..=m.total() as i64 + 1 {
        if !result.evaluate(&BigRational::from_integer(q.into())).is_integer() {
            return Err(Error::InternalInvariantViolation(format!(
                "multicoloring polynomial not integral at {q}"
            )));
        }
    }
    Ok(result)
}

/// Multicolorings of type `m` with colors `1..=q`, by backtracking over color
/// sets.
pub fn count_multicolorings(graph: &Graph, m: &ExponentVector, q: usize) -> Result<BigInt> {
    if q > 63 {
        return Err(Error::InvalidArgument("at most 63 colors".into()));
    }
    if m.len() != graph.vertex_count() {
        return Err(Error::InvalidArgument("exponent vector length".into()));
    }
    let palettes: Vec<Vec<u64>> = (0..graph.vertex_count())
        .map(|i| {
            (0..1u64 << q)
                .filter(|s| s.count_ones() == m[i])
                .collect()
        })
        .collect();
    fn go(graph: &Graph, v: usize, chosen: &mut [u64], palettes: &[Vec<u64>]) -> BigInt {
        if v > graph.vertex_count() {
            return BigInt::one();
        }
        let blocked = graph
            .neighbors(v)
            .iter()
            .filter(|&u| u < v)
            .fold(0u64, |acc, u| acc | chosen[u - 1]);
        let mut total = BigInt::zero();
        for &set in &palettes[v - 1] {
            if set & blocked == 0 {
                chosen[v - 1] = set;
                total += go(graph, v + 1, chosen, palettes);
            }
        }
        total
    }
    Ok(go(graph, 1, &mut vec![0; graph.vertex_count()], &palettes))
}
