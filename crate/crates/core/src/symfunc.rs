//! Chromatic symmetric functions in the power-sum basis, the involution ω,
//! specializations to finite alphabets, and the colored-orientation identities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::chromatic::chromatic_polynomial;
use crate::error::{Error, Result};
use crate::graph::{ExponentVector, Graph, VertexSet};
use crate::orientations::{enumerate_acyclic, for_each_descent_free, lambda_within, source_components, Orientation};
use crate::partition::Partition;
use crate::poly::IntPolynomial;
use crate::report::{CheckOutcome, VerificationReport};

/// Edge cap for the edge-subset expansion.
pub const MAX_CSF_EDGES: usize = 20;
/// Vertex cap for the connected-block expansion.
pub const MAX_CSF_VERTICES: usize = 12;
/// Caps for expanding into a single finite alphabet.
pub const MAX_FINITE_VARIABLES: usize = 8;
pub const MAX_FINITE_DEGREE: usize = 8;
/// Cap on the number of `(orientation, coloring)` pairs a verifier may visit.
pub const MAX_PAIRS: u64 = 5_000_000;
/// Cap on the size of each alphabet in the multi-alphabet identities.
pub const MAX_ALPHABET: usize = 3;
/// Cap on `|m|` for multicolored symmetric functions.
pub const MAX_MULTICOLOR_PIECES: usize = 8;

/// Homogeneous symmetric function of degree `n` in the power-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPoly {
    degree: usize,
    terms: BTreeMap<Partition, BigRational>,
}

impl PPoly {
    pub fn zero(degree: usize) -> Self {
        PPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `p_λ`.
    pub fn power_sum(lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigRational::one());
        PPoly { degree, terms }
    }

    /// Fails with `InvalidArgument` unless every partition has size `degree`.
    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Result<Self> {
        let mut p = PPoly::zero(degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::InvalidArgument(format!(
                    "partition {lambda} does not have size {degree}"
                )));
            }
            p.add_term(lambda, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> PPoly {
        let mut out = PPoly::zero(self.degree);
        for (lambda, v) in &self.terms {
            out.add_term(lambda.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &PPoly) -> Result<PPoly> {
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::InvalidArgument("degrees differ".into()));
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = PPoly {
            degree,
            terms: self.terms.clone(),
        };
        for (lambda, v) in &other.terms {
            out.add_term(lambda.clone(), v.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (lambda, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "p{lambda}")?;
        }
        Ok(())
    }
}

impl Serialize for PPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a [u32],
            num: String,
            den: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (lambda, c) in &self.terms {
            seq.serialize_element(&Term {
                partition: lambda.parts(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })?;
        }
        seq.end()
    }
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Union-find over at most 64 vertices, copied at every branch.
#[derive(Clone, Copy)]
struct Forest {
    parent: [u8; 64],
    size: [u8; 64],
}

impl Forest {
    fn new(n: usize) -> Self {
        let mut parent = [0u8; 64];
        for (x, slot) in parent.iter_mut().enumerate().take(n) {
            *slot = x as u8;
        }
        Forest { parent, size: [1; 64] }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }
}

/// `X_G = Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}` where `λ(S)` lists the component
/// sizes of the spanning subgraph `(V, S)`.
///
/// Subsets are walked edge by edge. When an edge joins two vertices that are
/// already connected, adding it or not gives the same `λ` with opposite
/// signs for every choice of the later edges, so that branch is dropped.
pub fn csf_powersum(graph: &Graph) -> Result<PPoly> {
    let m = graph.edge_count();
    if m > MAX_CSF_EDGES {
        return Err(Error::TooManyEdges {
            count: m,
            max: MAX_CSF_EDGES,
        });
    }
    let n = graph.vertex_count();
    fn walk(
        e: usize,
        forest: Forest,
        sign: i64,
        n: usize,
        edges: &[(usize, usize)],
        out: &mut FxHashMap<Vec<u8>, i64>,
    ) {
        if e == edges.len() {
            let mut sizes: Vec<u8> = (0..n)
                .filter(|&x| forest.parent[x] as usize == x)
                .map(|x| forest.size[x])
                .collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            *out.entry(sizes).or_insert(0) += sign;
            return;
        }
        let (u, v) = edges[e];
        let (a, b) = (forest.find(u - 1), forest.find(v - 1));
        if a == b {
            return;
        }
        walk(e + 1, forest, sign, n, edges, out);
        let mut joined = forest;
        let (small, large) = if forest.size[a] < forest.size[b] { (a, b) } else { (b, a) };
        joined.parent[small] = large as u8;
        joined.size[large] += forest.size[small];
        walk(e + 1, joined, -sign, n, edges, out);
    }
    let mut tally = FxHashMap::default();
    walk(0, Forest::new(n), 1, n, graph.edges(), &mut tally);
    PPoly::from_terms(
        n,
        tally
            .into_iter()
            .map(|(k, v)| (Partition::new(k.into_iter().map(u32::from).collect()), int(v))),
    )
}

/// Same function as [`csf_powersum`], grouping edge subsets by the vertex
/// sets of their connected components: `c(U)` is the signed number of
/// connected spanning edge sets of `G[U]`, and `X_G` sums `Π c(B) p_{|B|}`
/// over set partitions of the vertex set.
pub fn csf_powersum_by_blocks(graph: &Graph) -> Result<PPoly> {
    let n = graph.vertex_count();
    if n > MAX_CSF_VERTICES {
        return Err(Error::TooManyVertices {
            count: n,
            max: MAX_CSF_VERTICES,
        });
    }
    let size = 1usize << n;
    // Σ_{S ⊆ E(U)} (-1)^{|S|} is 1 on independent sets and 0 otherwise
    let g: Vec<i128> = (0..size)
        .map(|bits| i128::from(graph.is_independent(VertexSet::from_bits(bits as u64))))
        .collect();
    let mut c = vec![0i128; size];
    for u in 1..size {
        let low = u & u.wrapping_neg();
        let rest = u ^ low;
        let mut total = g[u];
        // proper subsets W of U containing the lowest vertex
        let mut sub = rest;
        loop {
            let w = sub | low;
            if w != u {
                total -= c[w] * g[u ^ w];
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        c[u] = total;
    }
    let mut table: Vec<HashMap<Vec<u32>, i128>> = vec![HashMap::new(); size];
    table[0].insert(Vec::new(), 1);
    for u in 1..size {
        let low = u & u.wrapping_neg();
        let rest = u ^ low;
        let mut acc: HashMap<Vec<u32>, i128> = HashMap::new();
        let mut sub = rest;
        loop {
            let w = sub | low;
            if c[w] != 0 {
                let part = w.count_ones();
                for (parts, v) in &table[u ^ w] {
                    let mut key = parts.clone();
                    let pos = key.partition_point(|&p| p >= part);
                    key.insert(pos, part);
                    let term = c[w].checked_mul(*v).ok_or(Error::ResourceBudgetExceeded {
                        what: "i128 range in block expansion",
                        limit: MAX_CSF_VERTICES,
                    })?;
                    *acc.entry(key).or_insert(0) += term;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        acc.retain(|_, v| *v != 0);
        table[u] = acc;
    }
    let top = std::mem::take(&mut table[size - 1]);
    PPoly::from_terms(
        n,
        top.into_iter()
            .map(|(k, v)| (Partition::new(k), BigRational::from_integer(BigInt::from(v)))),
    )
}

/// `ω(p_λ) = (-1)^{|λ| - ℓ(λ)} p_λ`, extended linearly.
pub fn omega(x: &PPoly) -> PPoly {
    let mut out = PPoly::zero(x.degree);
    for (lambda, c) in &x.terms {
        let c = if (lambda.size() - lambda.length()) % 2 == 0 {
            c.clone()
        } else {
            -c
        };
        out.add_term(lambda.clone(), c);
    }
    out
}

/// Substitutes `p_k ↦ q` for every `k`, so `p_λ ↦ q^{ℓ(λ)}`.
pub fn specialize_p_to_q(x: &PPoly) -> Result<IntPolynomial> {
    let mut coeffs = vec![BigRational::zero(); x.degree + 1];
    for (lambda, c) in &x.terms {
        coeffs[lambda.length()] += c;
    }
    let ints = coeffs
        .into_iter()
        .map(|c| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::NonIntegerResult) })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::new(ints))
}

/// Tally of `λ(γ)` over the acyclic orientations `γ`, as a symmetric function.
pub fn orientation_tally(graph: &Graph) -> Result<PPoly> {
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    for o in enumerate_acyclic(graph)? {
        *counts.entry(source_components(graph, o)?.lambda()).or_insert(0) += 1;
    }
    PPoly::from_terms(graph.vertex_count(), counts.into_iter().map(|(k, v)| (k, int(v))))
}

/// Polynomial with integer coefficients in one or more finite alphabets.
///
/// Variables are laid out alphabet after alphabet; an exponent vector has
/// one entry per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoly {
    alphabets: Vec<(String, usize)>,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl FinitePoly {
    pub fn zero(alphabets: &[(&str, usize)]) -> Self {
        FinitePoly {
            alphabets: alphabets.iter().map(|&(a, k)| (a.to_string(), k)).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabets: &[(&str, usize)]) -> Self {
        let mut p = FinitePoly::zero(alphabets);
        let width = p.variable_count();
        p.terms.insert(ExponentVector::zeros(width), BigInt::one());
        p
    }

    fn empty_like(&self) -> Self {
        FinitePoly {
            alphabets: self.alphabets.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn alphabets(&self) -> &[(String, usize)] {
        &self.alphabets
    }

    pub fn variable_count(&self) -> usize {
        self.alphabets.iter().map(|(_, k)| k).sum()
    }

    fn offset(&self, alphabet: usize) -> usize {
        self.alphabets[..alphabet].iter().map(|(_, k)| k).sum()
    }

    /// `p_k` of alphabet number `alphabet`.
    pub fn power_sum(alphabets: &[(&str, usize)], alphabet: usize, k: u32) -> Self {
        let mut p = FinitePoly::zero(alphabets);
        let width = p.variable_count();
        let offset = p.offset(alphabet);
        for i in 0..p.alphabets[alphabet].1 {
            let mut e = vec![0; width];
            e[offset + i] = k;
            p.terms.insert(ExponentVector::new(e), BigInt::one());
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, BigInt> {
        &self.terms
    }

    /// Coefficient of the monomial with the given exponents (one per variable).
    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&ExponentVector::new(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &FinitePoly) -> FinitePoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> FinitePoly {
        let mut out = self.empty_like();
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &FinitePoly) -> FinitePoly {
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Vec<u32> = a.as_slice().iter().zip(b.as_slice()).map(|(s, t)| s + t).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += x * y;
            }
        }
        let mut out = self.empty_like();
        for (e, c) in acc {
            out.add_term(ExponentVector::new(e), c);
        }
        out
    }

    /// Value with every variable set to 1.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn variable_name(&self, index: usize) -> String {
        let mut index = index;
        for (name, k) in &self.alphabets {
            if index < *k {
                return format!("{name}{}", index + 1);
            }
            index -= k;
        }
        unreachable!("variable index out of range")
    }
}

impl fmt::Display for FinitePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            for (i, &x) in e.as_slice().iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(self.variable_name(i)),
                    _ => factors.push(format!("{}^{x}", self.variable_name(i))),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for FinitePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Alphabet<'a> {
            name: &'a str,
            size: usize,
        }
        #[derive(Serialize)]
        struct Term<'a> {
            exponents: &'a [u32],
            coeff: String,
        }
        #[derive(Serialize)]
        struct Wire<'a> {
            alphabets: Vec<Alphabet<'a>>,
            terms: Vec<Term<'a>>,
        }
        Wire {
            alphabets: self
                .alphabets
                .iter()
                .map(|(name, size)| Alphabet { name, size: *size })
                .collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| Term {
                    exponents: e.as_slice(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

/// Replaces each `p_k` of `x` by `image(k)` and expands. The result must
/// have integer coefficients.
pub fn substitute(
    x: &PPoly,
    alphabets: &[(&str, usize)],
    image: impl Fn(u32) -> FinitePoly,
) -> Result<FinitePoly> {
    let mut powers: HashMap<u32, FinitePoly> = HashMap::new();
    let mut acc: BTreeMap<ExponentVector, BigRational> = BTreeMap::new();
    for (lambda, c) in &x.terms {
        let mut product = FinitePoly::one(alphabets);
        for &k in lambda.parts() {
            let pk = powers.entry(k).or_insert_with(|| image(k));
            product = product.mul(pk);
        }
        for (e, v) in product.terms {
            *acc.entry(e).or_insert_with(BigRational::zero) += c * BigRational::from_integer(v);
        }
    }
    let mut out = FinitePoly::zero(alphabets);
    for (e, c) in acc {
        if !c.is_integer() {
            return Err(Error::NonIntegerResult);
        }
        out.add_term(e, c.to_integer());
    }
    Ok(out)
}

/// `x` in the variables `z1, …, zN`.
pub fn expand_finite(x: &PPoly, variables: usize) -> Result<FinitePoly> {
    if variables > MAX_FINITE_VARIABLES {
        return Err(Error::ResourceBudgetExceeded {
            what: "alphabet size",
            limit: MAX_FINITE_VARIABLES,
        });
    }
    if x.degree > MAX_FINITE_DEGREE {
        return Err(Error::ResourceBudgetExceeded {
            what: "degree of expanded symmetric function",
            limit: MAX_FINITE_DEGREE,
        });
    }
    let alphabets = [("z", variables)];
    substitute(x, &alphabets, |k| FinitePoly::power_sum(&alphabets, 0, k))
}

/// `Σ_f Π_v z_{f(v)}` over proper colorings `f` with colors `1..=N`.
pub fn csf_from_colorings(graph: &Graph, variables: usize) -> Result<FinitePoly> {
    let n = graph.vertex_count();
    if variables > 5 || n > MAX_FINITE_DEGREE {
        return Err(Error::ResourceBudgetExceeded {
            what: "colorings to enumerate (N <= 5, n <= 8)",
            limit: 5,
        });
    }
    let alphabets = [("z", variables)];
    let mut out = FinitePoly::zero(&alphabets);
    if variables == 0 {
        if n == 0 {
            out = FinitePoly::one(&alphabets);
        }
        return Ok(out);
    }
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut f = vec![0usize; n];
    'outer: loop {
        if graph.edges().iter().all(|&(u, v)| f[u - 1] != f[v - 1]) {
            let mut e = vec![0u32; variables];
            for &c in &f {
                e[c] += 1;
            }
            *counts.entry(e).or_insert(0) += 1;
        }
        for slot in f.iter_mut() {
            *slot += 1;
            if *slot < variables {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    for (e, c) in counts {
        out.add_term(ExponentVector::new(e), BigInt::from(c));
    }
    Ok(out)
}

/// Which alphabet each kind of color is recorded in, for the
/// `(orientation, coloring)` enumerations.
#[derive(Clone, Copy, Debug)]
struct PairLayout {
    /// Negative colors `-1..=-k` give `y_1..y_k` of this alphabet; their
    /// classes must be independent.
    negative: Option<(usize, usize)>,
    /// Color 0, weighted by `p_{λ(γ_0)}` in this alphabet.
    zero: Option<usize>,
    /// Positive colors `1..=k` give the variables of this alphabet.
    positive: Option<(usize, usize)>,
}

/// `(-1)^n χ(-k)`: the number of pairs `(γ, f)` with `f` descent-free into
/// `k` colors, an upper bound for every enumeration below.
fn pair_count_bound(graph: &Graph, colors: usize) -> Result<BigInt> {
    let chi = chromatic_polynomial(graph)?;
    let v = chi.evaluate(&BigInt::from(-(colors as i64)));
    Ok(if graph.vertex_count() % 2 == 0 { v } else { -v })
}

fn pair_polynomial(graph: &Graph, alphabets: &[(&str, usize)], layout: PairLayout) -> Result<FinitePoly> {
    let mut palette = Vec::new();
    if let Some((_, k)) = layout.negative {
        palette.extend((1..=k as i64).rev().map(|c| -c));
    }
    if layout.zero.is_some() {
        palette.push(0);
    }
    if let Some((_, k)) = layout.positive {
        palette.extend(1..=k as i64);
    }
    if pair_count_bound(graph, palette.len())? > BigInt::from(MAX_PAIRS) {
        return Err(Error::ResourceBudgetExceeded {
            what: "orientation-coloring pairs",
            limit: MAX_PAIRS as usize,
        });
    }
    let template = FinitePoly::zero(alphabets);
    let width = template.variable_count();
    let neg_offset = layout.negative.map(|(a, _)| template.offset(a));
    let pos_offset = layout.positive.map(|(a, _)| template.offset(a));
    let n = graph.vertex_count();

    // one byte per variable: width <= 3 * MAX_ALPHABET and counts <= n < 256
    let shift = |var: usize| 8 * var as u32;
    type Tally = FxHashMap<(Partition, u128), u64>;
    let visit_orientation = |mut acc: Tally, o: Orientation| -> Result<Tally> {
        let arcs = o.out_neighbors(graph);
        let mut lambdas: FxHashMap<VertexSet, Partition> = FxHashMap::default();
        for_each_descent_free(graph, o, &palette, |f| {
            let mut e = 0u128;
            let mut zero = VertexSet::EMPTY;
            let mut negative_classes = [VertexSet::EMPTY; MAX_ALPHABET];
            for v in 1..=n {
                let c = f[v - 1];
                if c < 0 {
                    let k = (-c) as usize - 1;
                    e += 1 << shift(neg_offset.unwrap_or(0) + k);
                    negative_classes[k] = negative_classes[k].with(v);
                } else if c == 0 {
                    zero = zero.with(v);
                } else {
                    e += 1 << shift(pos_offset.unwrap_or(0) + c as usize - 1);
                }
            }
            if negative_classes.iter().all(|&s| graph.is_independent(s)) {
                let lambda = lambdas.entry(zero).or_insert_with(|| lambda_within(&arcs, zero));
                match acc.get_mut(&(lambda.clone(), e)) {
                    Some(count) => *count += 1,
                    None => {
                        acc.insert((lambda.clone(), e), 1);
                    }
                }
            }
        })?;
        Ok(acc)
    };

    let orientations: Vec<Orientation> = enumerate_acyclic(graph)?.collect();
    let merged = orientations
        .into_par_iter()
        .try_fold(FxHashMap::default, visit_orientation)
        .try_reduce(FxHashMap::default, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            Ok(a)
        })?;

    let mut by_lambda: BTreeMap<Partition, Vec<(Vec<u32>, u64)>> = BTreeMap::new();
    for ((lambda, packed), c) in merged {
        let e = (0..width).map(|var| (packed >> shift(var) & 0xff) as u32).collect();
        by_lambda.entry(lambda).or_default().push((e, c));
    }
    let mut out = template;
    for (lambda, monomials) in by_lambda {
        let mut weight = FinitePoly::one(alphabets);
        if let Some(a) = layout.zero {
            for &k in lambda.parts() {
                weight = weight.mul(&FinitePoly::power_sum(alphabets, a, k));
            }
        }
        let mut block = FinitePoly::zero(alphabets);
        for (e, c) in monomials {
            block.add_term(ExponentVector::new(e), BigInt::from(c));
        }
        out = out.add(&block.mul(&weight));
    }
    Ok(out)
}

fn check_alphabets(sizes: &[usize]) -> Result<()> {
    if sizes.iter().any(|&k| k > MAX_ALPHABET) {
        return Err(Error::ResourceBudgetExceeded {
            what: "alphabet size",
            limit: MAX_ALPHABET,
        });
    }
    Ok(())
}

/// A symmetric function of degree `n` is determined by its restriction to
/// `n` variables per alphabet; anything smaller is a partial check.
fn truncation_note(n: usize, alphabets: &[(&str, usize)]) -> String {
    let sizes: Vec<String> = alphabets.iter().map(|(a, k)| format!("{a}: {k} variables")).collect();
    let scope = if alphabets.iter().all(|&(_, k)| k >= n) {
        "determines the identity in degree"
    } else {
        "partial check in degree"
    };
    format!("{}; {scope} {n}", sizes.join(", "))
}

/// ω(X_G) in `N` variables against descent-free pairs `(γ, f)` with `f`
/// valued in `1..=N`.
pub fn verify_prop51(graph: &Graph, variables: usize) -> Result<VerificationReport> {
    check_alphabets(&[variables])?;
    let alphabets = [("z", variables)];
    let dual = omega(&csf_powersum(graph)?);
    let lhs = substitute(&dual, &alphabets, |k| FinitePoly::power_sum(&alphabets, 0, k))?;
    let rhs = pair_polynomial(
        graph,
        &alphabets,
        PairLayout {
            negative: None,
            zero: None,
            positive: Some((0, variables)),
        },
    )?;
    let mut report = VerificationReport::new("prop51", &[("N", variables as i64)])
        .with_truncation(truncation_note(graph.vertex_count(), &alphabets));
    report.push(CheckOutcome::compare("omega(X_G) = descent-free pairs", &lhs, &rhs));
    Ok(report)
}

/// ω(X_G) against the tally of `p_{λ(γ)}` over acyclic orientations.
pub fn verify_prop52(graph: &Graph) -> Result<VerificationReport> {
    let dual = omega(&csf_powersum(graph)?);
    let tally = orientation_tally(graph)?;
    let mut report = VerificationReport::new("prop52", &[]);
    report.push(CheckOutcome::compare("omega(X_G) = sum of p_lambda(gamma)", &dual, &tally));
    Ok(report)
}

/// ω(X_G)(y + z) against pairs `(γ, f)` with `f` valued in `0..=Nz`,
/// weighted by `p_{λ(γ_0)}(y)` and the `z`-monomial of the positive colors.
pub fn verify_thm53(graph: &Graph, ny: usize, nz: usize) -> Result<VerificationReport> {
    check_alphabets(&[ny, nz])?;
    let alphabets = [("y", ny), ("z", nz)];
    let dual = omega(&csf_powersum(graph)?);
    let lhs = substitute(&dual, &alphabets, |k| {
        FinitePoly::power_sum(&alphabets, 0, k).add(&FinitePoly::power_sum(&alphabets, 1, k))
    })?;
    let rhs = pair_polynomial(
        graph,
        &alphabets,
        PairLayout {
            negative: None,
            zero: Some(0),
            positive: Some((1, nz)),
        },
    )?;
    let mut report = VerificationReport::new("thm53", &[("Ny", ny as i64), ("Nz", nz as i64)])
        .with_truncation(truncation_note(graph.vertex_count(), &alphabets));
    report.push(CheckOutcome::compare("omega(X_G)(y+z) = weighted pairs", &lhs, &rhs));
    Ok(report)
}

fn dual_image(alphabets: &[(&str, usize)], alphabet: usize, k: u32) -> FinitePoly {
    // -(-1)^k p_k
    let p = FinitePoly::power_sum(alphabets, alphabet, k);
    if k % 2 == 0 {
        p.scale(&BigInt::from(-1))
    } else {
        p
    }
}

/// `X_G(y - z)` (each `p_k ↦ p_k(y) - (-1)^k p_k(z)`) against pairs with
/// colors in `-Ny..=-1` and `1..=Nz`, negative color classes independent.
pub fn verify_superfication(graph: &Graph, ny: usize, nz: usize) -> Result<VerificationReport> {
    check_alphabets(&[ny, nz])?;
    let alphabets = [("y", ny), ("z", nz)];
    let x = csf_powersum(graph)?;
    let lhs = substitute(&x, &alphabets, |k| {
        FinitePoly::power_sum(&alphabets, 0, k).add(&dual_image(&alphabets, 1, k))
    })?;
    let rhs = pair_polynomial(
        graph,
        &alphabets,
        PairLayout {
            negative: Some((0, ny)),
            zero: None,
            positive: Some((1, nz)),
        },
    )?;
    let mut report = VerificationReport::new("superfication", &[("Ny", ny as i64), ("Nz", nz as i64)])
        .with_truncation(truncation_note(graph.vertex_count(), &alphabets));
    report.push(CheckOutcome::compare("X_G(y-z) = signed-color pairs", &lhs, &rhs));
    Ok(report)
}

/// `X_G(y - (z + z'))` against pairs with colors in `ℤ`, negative classes
/// independent, weighted by `p_{λ(γ_0)}(z')` and the monomials of the
/// negative (`y`) and positive (`z`) colors.
pub fn verify_combined(graph: &Graph, ny: usize, nz: usize, nz2: usize) -> Result<VerificationReport> {
    check_alphabets(&[ny, nz, nz2])?;
    let alphabets = [("y", ny), ("z", nz), ("z'", nz2)];
    let x = csf_powersum(graph)?;
    let lhs = substitute(&x, &alphabets, |k| {
        FinitePoly::power_sum(&alphabets, 0, k)
            .add(&dual_image(&alphabets, 1, k))
            .add(&dual_image(&alphabets, 2, k))
    })?;
    let rhs = pair_polynomial(
        graph,
        &alphabets,
        PairLayout {
            negative: Some((0, ny)),
            zero: Some(2),
            positive: Some((1, nz)),
        },
    )?;
    let mut report = VerificationReport::new(
        "combined",
        &[("Ny", ny as i64), ("Nz", nz as i64), ("Nz2", nz2 as i64)],
    )
    .with_truncation(truncation_note(graph.vertex_count(), &alphabets));
    report.push(CheckOutcome::compare("X_G(y-(z+z')) = weighted pairs", &lhs, &rhs));
    Ok(report)
}

/// `X_{G^m} / m!`, the generating function of multicolorings of type `m`.
pub fn multicolor_csf(graph: &Graph, m: &ExponentVector) -> Result<PPoly> {
    if m.total() > MAX_MULTICOLOR_PIECES {
        return Err(Error::ResourceBudgetExceeded {
            what: "pieces in multicoloring type",
            limit: MAX_MULTICOLOR_PIECES,
        });
    }
    let blown = graph.blowup(m)?;
    let x = csf_powersum_by_blocks(&blown)?;
    Ok(x.scale(&BigRational::new(BigInt::one(), m.factorial())))
}

/// `Σ Π_c z_c^{(uses of c)}` over multicolorings of type `m` with colors
/// `1..=N`: vertex `i` gets an `m_i`-subset, adjacent subsets disjoint.
pub fn multicolorings_from_enumeration(graph: &Graph, m: &ExponentVector, variables: usize) -> Result<FinitePoly> {
    let n = graph.vertex_count();
    if m.len() != n {
        return Err(Error::InvalidArgument(format!("type has {} entries, graph has {n} vertices", m.len())));
    }
    if variables > 5 || m.total() > MAX_MULTICOLOR_PIECES {
        return Err(Error::ResourceBudgetExceeded {
            what: "multicolorings to enumerate (N <= 5)",
            limit: 5,
        });
    }
    let choices: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            (0u32..1 << variables)
                .filter(|s| s.count_ones() == m[i])
                .collect()
        })
        .collect();
    let alphabets = [("z", variables)];
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut picked = vec![0u32; n];
    fn go(
        v: usize,
        graph: &Graph,
        choices: &[Vec<u32>],
        picked: &mut [u32],
        variables: usize,
        counts: &mut HashMap<Vec<u32>, u64>,
    ) {
        if v == choices.len() {
            let mut e = vec![0u32; variables];
            for s in picked.iter() {
                for (c, slot) in e.iter_mut().enumerate() {
                    *slot += s >> c & 1;
                }
            }
            *counts.entry(e).or_insert(0) += 1;
            return;
        }
        for &s in &choices[v] {
            if graph.neighbors(v + 1).iter().filter(|&u| u <= v).all(|u| picked[u - 1] & s == 0) {
                picked[v] = s;
                go(v + 1, graph, choices, picked, variables, counts);
            }
        }
    }
    go(0, graph, &choices, &mut picked, variables, &mut counts);
    let mut out = FinitePoly::zero(&alphabets);
    for (e, c) in counts {
        out.add_term(ExponentVector::new(e), BigInt::from(c));
    }
    Ok(out)
}

/// [`multicolor_csf`] expanded in `N` variables against direct enumeration.
pub fn verify_multicolor(graph: &Graph, m: &ExponentVector, variables: usize) -> Result<VerificationReport> {
    let x = multicolor_csf(graph, m)?;
    let lhs = expand_finite(&x, variables)?;
    let rhs = multicolorings_from_enumeration(graph, m, variables)?;
    let mut report = VerificationReport::new("multicolor", &[("N", variables as i64)])
        .with_truncation(truncation_note(m.total(), &[("z", variables)]));
    report.push(CheckOutcome::compare("X_{G^m}/m! = multicolorings", &lhs, &rhs));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::cycle(4).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn coeffs(x: &PPoly) -> Vec<(Partition, i64)> {
        let order = [p(&[1, 1, 1, 1]), p(&[2, 1, 1]), p(&[3, 1]), p(&[2, 2]), p(&[4])];
        order
            .iter()
            .map(|l| {
                let c = x.coeff(l);
                assert!(c.is_integer());
                (l.clone(), i64::try_from(c.to_integer()).unwrap())
            })
            .collect()
    }

    #[test]
    fn cycle_expansion() {
        let x = csf_powersum(&c4()).unwrap();
        let got: Vec<i64> = coeffs(&x).into_iter().map(|(_, c)| c).collect();
        assert_eq!(got, vec![1, -4, 4, 2, -3]);
        assert_eq!(x.len(), 5);
        let w: Vec<i64> = coeffs(&omega(&x)).into_iter().map(|(_, c)| c).collect();
        assert_eq!(w, vec![1, 4, 4, 2, 3]);
        assert_eq!(csf_powersum_by_blocks(&c4()).unwrap(), x);
    }

    #[test]
    fn trivial_expansions() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(csf_powersum(&k1).unwrap(), PPoly::power_sum(p(&[1])));
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(csf_powersum(&e2).unwrap(), PPoly::power_sum(p(&[1, 1])));
        let omega_p2 = omega(&PPoly::power_sum(p(&[2])));
        assert_eq!(omega_p2.coeff(&p(&[2])), int(-1));
    }

    #[test]
    fn specialization() {
        let x = csf_powersum(&c4()).unwrap();
        let chi = specialize_p_to_q(&x).unwrap();
        assert_eq!(chi, chromatic_polynomial(&c4()).unwrap());
        assert_eq!(specialize_p_to_q(&PPoly::power_sum(p(&[4]))).unwrap(), IntPolynomial::monomial(BigInt::one(), 1));
        let dual = specialize_p_to_q(&omega(&x)).unwrap();
        for j in 0..6i64 {
            assert_eq!(dual.evaluate(&BigInt::from(j)), chi.evaluate(&BigInt::from(-j)));
        }
        let half = PPoly::power_sum(p(&[1])).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(specialize_p_to_q(&half), Err(Error::NonIntegerResult));
    }

    #[test]
    fn finite_expansion_coefficients() {
        let x = csf_powersum(&c4()).unwrap();
        assert_eq!(expand_finite(&x, 4).unwrap().coefficient(&[1, 1, 1, 1]), BigInt::from(24));
        assert_eq!(expand_finite(&x, 4).unwrap().coefficient(&[2, 1, 1, 0]), BigInt::from(4));
        let two = expand_finite(&x, 2).unwrap();
        assert_eq!(two.coefficient(&[2, 2]), BigInt::from(2));
        assert_eq!(two.len(), 1);
        assert_eq!(two, csf_from_colorings(&c4(), 2).unwrap());
        let binom = |j: i64, k: i64| -> i64 { (0..k).map(|t| j - t).product::<i64>() / (1..=k).product::<i64>() };
        for j in 0..=6usize {
            let value = expand_finite(&x, j).unwrap().sum_of_coefficients();
            let j = j as i64;
            assert_eq!(value, BigInt::from(24 * binom(j, 4) + 12 * binom(j, 3) + 2 * binom(j, 2)));
        }
    }

    #[test]
    fn colorings_trivial_cases() {
        let k1 = Graph::empty(1).unwrap();
        let z = csf_from_colorings(&k1, 3).unwrap();
        assert_eq!(z, FinitePoly::power_sum(&[("z", 3)], 0, 1));
        assert!(csf_from_colorings(&Graph::complete(3).unwrap(), 2).unwrap().is_zero());
    }

    #[test]
    fn orientation_tallies() {
        let tally = orientation_tally(&c4()).unwrap();
        let got: Vec<i64> = coeffs(&tally).into_iter().map(|(_, c)| c).collect();
        assert_eq!(got, vec![1, 4, 4, 2, 3]);
        let k2 = orientation_tally(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(k2.coeff(&p(&[2])), int(1));
        assert_eq!(k2.coeff(&p(&[1, 1])), int(1));
    }

    #[test]
    fn identity_verifiers() {
        let g = c4();
        let r = verify_prop51(&g, 1).unwrap();
        assert!(r.passed(), "{r}");
        assert!(verify_prop51(&g, 2).unwrap().passed());
        assert!(verify_prop52(&g).unwrap().passed());
        for (ny, nz) in [(1, 1), (0, 2), (2, 0)] {
            assert!(verify_thm53(&g, ny, nz).unwrap().passed());
            assert!(verify_superfication(&g, ny, nz).unwrap().passed());
        }
        assert!(verify_combined(&g, 1, 1, 1).unwrap().passed());
        let k3 = Graph::complete(3).unwrap();
        assert!(verify_combined(&k3, 2, 2, 2).unwrap().passed());
    }

    #[test]
    fn descent_free_constant_coloring() {
        let alphabets = [("z", 1)];
        let dual = omega(&csf_powersum(&c4()).unwrap());
        let lhs = substitute(&dual, &alphabets, |k| FinitePoly::power_sum(&alphabets, 0, k)).unwrap();
        assert_eq!(lhs.coefficient(&[4]), BigInt::from(14));
    }

    #[test]
    fn combined_degenerations() {
        // with y empty the combined identity is the one for ω(X_G)(z'+z)
        let g = Graph::path(3).unwrap();
        let combined = verify_combined(&g, 0, 1, 1).unwrap();
        assert!(combined.passed());
        let superfication = verify_superfication(&g, 1, 1).unwrap();
        assert!(superfication.passed());
        assert!(verify_combined(&g, 1, 1, 0).unwrap().passed());
        assert!(verify_combined(&g, 4, 0, 0).is_err());
    }

    #[test]
    fn superfication_without_positive_colors() {
        let g = c4();
        let alphabets = [("y", 2), ("z", 0)];
        let x = csf_powersum(&g).unwrap();
        let lhs = substitute(&x, &alphabets, |k| FinitePoly::power_sum(&alphabets, 0, k)).unwrap();
        assert_eq!(lhs.terms().keys().map(|e| e.as_slice().to_vec()).collect::<Vec<_>>(), vec![vec![2, 2]]);
    }

    #[test]
    fn multicolor_examples() {
        let k1 = Graph::empty(1).unwrap();
        let x = multicolor_csf(&k1, &ExponentVector::new(vec![2])).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(x.coeff(&p(&[1, 1])), half);
        assert_eq!(x.coeff(&p(&[2])), -half);
        let ones = multicolor_csf(&c4(), &ExponentVector::ones(4)).unwrap();
        assert_eq!(ones, csf_powersum(&c4()).unwrap());
        let m = ExponentVector::new(vec![1, 1, 1, 0]);
        assert!(verify_multicolor(&c4(), &m, 3).unwrap().passed());
        let m = ExponentVector::new(vec![2, 1, 1, 1]);
        assert!(verify_multicolor(&c4(), &m, 3).unwrap().passed());
    }

    #[test]
    fn json_shape() {
        let x = csf_powersum(&Graph::complete(2).unwrap()).unwrap();
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v[0]["partition"], serde_json::json!([1, 1]));
        assert_eq!(v[0]["num"], "1");
        assert_eq!(v[1]["num"], "-1");
        assert_eq!(v[1]["den"], "1");
        assert_eq!(x.to_string(), "p(1,1) - p(2)");
    }
}
