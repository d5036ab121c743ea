//! Truncated generating series of heaps of pieces, and direct heap counts.
//!
//! A heap of type `m` is an acyclic orientation of the blow-up `G^m` in which
//! the copies of each vertex form a chain oriented from lower to higher copy.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{blowup_offsets, ExponentVector, Graph, VertexSet};
use crate::orientations::{self, enumerate_acyclic_extending};
use crate::report::{CheckOutcome, VerificationReport};

/// Power series in `n` commuting variables with exact rational coefficients,
/// truncated at total degree `D`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    n: usize,
    degree: usize,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl TruncatedSeries {
    pub fn zero(n: usize, degree: usize) -> Self {
        TruncatedSeries {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, degree: usize) -> Self {
        TruncatedSeries::constant(n, degree, BigRational::one())
    }

    pub fn constant(n: usize, degree: usize, c: BigRational) -> Self {
        TruncatedSeries::from_terms(n, degree, [(ExponentVector::zeros(n), c)]).expect("valid constant")
    }

    /// Terms above the degree bound are dropped; repeated keys add up.
    pub fn from_terms(
        n: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (ExponentVector, BigRational)>,
    ) -> Result<Self> {
        let mut series = TruncatedSeries::zero(n, degree);
        for (m, c) in terms {
            if m.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "exponent vector of length {} in a series in {n} variables",
                    m.len()
                )));
            }
            if m.total() <= degree {
                series.add_term(m, c);
            }
        }
        Ok(series)
    }

    fn add_term(&mut self, m: ExponentVector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn degree_bound(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &ExponentVector) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of the squarefree monomial `x^V`.
    pub fn coefficient_of_set(&self, set: VertexSet) -> BigRational {
        self.coefficient(&ExponentVector::indicator(self.n, set))
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&ExponentVector::zeros(self.n))
    }

    pub fn truncate(&self, degree: usize) -> Self {
        let degree = degree.min(self.degree);
        TruncatedSeries {
            n: self.n,
            degree,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total() <= degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "series in {} and {} variables",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Sum, truncated at the smaller degree bound.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let degree = self.degree.min(other.degree);
        let mut out = self.truncate(degree);
        for (m, c) in &other.terms {
            if m.total() <= degree {
                out.add_term(m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return TruncatedSeries::zero(self.n, self.degree);
        }
        TruncatedSeries {
            n: self.n,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Product, truncated at the smaller degree bound.
    ///
    /// Works on integer numerators over one common denominator per factor.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let degree = self.degree.min(other.degree);
        let (left, left_den) = self.integral_terms(degree);
        let (right, right_den) = other.integral_terms(degree);
        if let Some(product) = self.mul_packed(degree, &left, &right, &left_den * &right_den) {
            return product;
        }
        let mut buckets: Vec<Vec<(&ExponentVector, &BigInt)>> = vec![Vec::new(); degree + 1];
        for (m, d, c) in &right {
            buckets[*d].push((m, c));
        }
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
        let mut key = vec![0u32; self.n];
        for (a, da, ca) in &left {
            for bucket in &buckets[..=degree - da] {
                for &(b, cb) in bucket {
                    for (k, slot) in key.iter_mut().enumerate() {
                        *slot = a[k] + b[k];
                    }
                    let product = ca * cb;
                    match acc.get_mut(key.as_slice()) {
                        Some(x) => *x += product,
                        None => {
                            acc.insert(key.clone(), product);
                        }
                    }
                }
            }
        }
        let den = left_den * right_den;
        TruncatedSeries::from_terms(
            self.n,
            degree,
            acc.into_iter()
                .map(|(k, c)| (ExponentVector::new(k), BigRational::new(c, den.clone()))),
        )
    }

    /// Same product with monomials packed into a `u128` and numerators in
    /// `i128`, when both fit without overflow.
    fn mul_packed(
        &self,
        degree: usize,
        left: &[(&ExponentVector, usize, BigInt)],
        right: &[(&ExponentVector, usize, BigInt)],
        den: BigInt,
    ) -> Option<Result<Self>> {
        let bits = (usize::BITS - degree.leading_zeros()).max(1) as usize;
        if self.n * bits > 128 {
            return None;
        }
        let small = |terms: &[(&ExponentVector, usize, BigInt)]| -> Option<Vec<(u128, usize, i128)>> {
            terms
                .iter()
                .map(|(m, d, c)| {
                    let packed = m.as_slice().iter().enumerate().fold(0u128, |acc, (k, &e)| acc | (e as u128) << (k * bits));
                    i64::try_from(c).ok().map(|c| (packed, *d, c as i128))
                })
                .collect()
        };
        let left = small(left)?;
        let right = small(right)?;
        // |sum| <= (#pairs) * 2^126 / 2^62 stays far inside i128 for fewer than 2^60 pairs
        let mut buckets: Vec<Vec<(u128, i128)>> = vec![Vec::new(); degree + 1];
        for &(m, d, c) in &right {
            buckets[d].push((m, c));
        }
        let mut acc: FxHashMap<u128, i128> = FxHashMap::default();
        for &(a, da, ca) in &left {
            for bucket in &buckets[..=degree - da] {
                for &(b, cb) in bucket {
                    *acc.entry(a + b).or_insert(0) += ca * cb;
                }
            }
        }
        let mask = (1u128 << bits) - 1;
        let n = self.n;
        Some(TruncatedSeries::from_terms(
            n,
            degree,
            acc.into_iter().filter(|&(_, c)| c != 0).map(|(k, c)| {
                let e = (0..n).map(|i| ((k >> (i * bits)) & mask) as u32).collect();
                (ExponentVector::new(e), BigRational::new(BigInt::from(c), den.clone()))
            }),
        ))
    }

    /// Terms of degree at most `degree` as `(monomial, degree, numerator)`
    /// over the least common denominator, which is returned alongside.
    fn integral_terms(&self, degree: usize) -> (Vec<(&ExponentVector, usize, BigInt)>, BigInt) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m, m.total(), c.numer() * (&den / c.denom())))
            .filter(|(_, d, _)| *d <= degree)
            .collect();
        (terms, den)
    }

    /// `F(-x)`: each coefficient multiplied by `(-1)^{|m|}`.
    pub fn neg_vars(&self) -> Self {
        TruncatedSeries {
            n: self.n,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), if m.total() % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// `Σ_{k=0}^{D} c_k U^k` evaluated by Horner's rule; `U` has no constant term.
    fn compose(&self, u: &Self, coeffs: impl Fn(usize) -> BigRational) -> Result<Self> {
        self.check_compatible(u)?;
        let coeffs: Vec<BigRational> = (0..=self.degree).map(coeffs).collect();
        if let Some(result) = self.compose_packed(u, &coeffs) {
            return Ok(result);
        }
        let mut acc = TruncatedSeries::zero(self.n, self.degree);
        for k in (0..=self.degree).rev() {
            acc = acc.mul(u)?.add(&TruncatedSeries::constant(self.n, self.degree, coeffs[k].clone()))?;
        }
        Ok(acc)
    }

    /// Horner's rule with packed monomials and `i128` numerators over a
    /// running common denominator; `None` on overflow.
    fn compose_packed(&self, u: &Self, coeffs: &[BigRational]) -> Option<Self> {
        let degree = self.degree.min(u.degree);
        let bits = (usize::BITS - degree.leading_zeros()).max(1) as usize;
        if self.n * bits > 128 {
            return None;
        }
        let pack = |m: &ExponentVector| {
            m.as_slice()
                .iter()
                .enumerate()
                .fold(0u128, |acc, (k, &e)| acc | (e as u128) << (k * bits))
        };
        let (u_terms, u_den) = u.integral_terms(degree);
        let u_den = i128::try_from(&u_den).ok()?;
        let mut buckets: Vec<Vec<(u128, i128)>> = vec![Vec::new(); degree + 1];
        for (m, d, c) in &u_terms {
            buckets[*d].push((pack(m), i128::try_from(c).ok()?));
        }
        let constants: Vec<(i128, i128)> = coeffs
            .iter()
            .map(|c| Some((i128::try_from(c.numer()).ok()?, i128::try_from(c.denom()).ok()?)))
            .collect::<Option<_>>()?;
        // acc = Σ num[m] x^m / den, keyed by packed monomial, with its degree
        let mut acc: FxHashMap<u128, (usize, i128)> = FxHashMap::default();
        let mut den: i128 = 1;
        for k in (0..=degree).rev() {
            let mut next: FxHashMap<u128, (usize, i128)> = FxHashMap::default();
            for (&a, &(da, ca)) in &acc {
                for (db, bucket) in buckets[..=degree - da].iter().enumerate() {
                    for &(b, cb) in bucket {
                        let entry = next.entry(a + b).or_insert((da + db, 0));
                        entry.1 = entry.1.checked_add(ca.checked_mul(cb)?)?;
                    }
                }
            }
            den = den.checked_mul(u_den)?;
            let (p, q) = constants[k];
            let g = gcd_i128(den, q);
            let scale_acc = q / g;
            let scale_const = den / g;
            den = den.checked_mul(scale_acc)?;
            for value in next.values_mut() {
                value.1 = value.1.checked_mul(scale_acc)?;
            }
            let constant = next.entry(0).or_insert((0, 0));
            constant.1 = constant.1.checked_add(p.checked_mul(scale_const)?)?;
            next.retain(|_, v| v.1 != 0);
            let common = next.values().fold(den, |g, v| gcd_i128(g, v.1));
            if common > 1 {
                den /= common;
                for value in next.values_mut() {
                    value.1 /= common;
                }
            }
            acc = next;
        }
        let mask = (1u128 << bits) - 1;
        let n = self.n;
        let den = BigInt::from(den);
        TruncatedSeries::from_terms(
            n,
            self.degree,
            acc.into_iter().map(|(k, (_, c))| {
                let e = (0..n).map(|i| ((k >> (i * bits)) & mask) as u32).collect();
                (ExponentVector::new(e), BigRational::new(BigInt::from(c), den.clone()))
            }),
        )
        .ok()
    }

    /// `1/A = (1/c) Σ_k (1 - A/c)^k` for constant term `c ≠ 0`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::InvalidArgument("reciprocal of a series with zero constant term".into()));
        }
        let inv = c.recip();
        let u = TruncatedSeries::one(self.n, self.degree).sub(&self.scale(&inv))?;
        Ok(self.compose(&u, |_| BigRational::one())?.scale(&inv))
    }

    /// `ln A = -Σ_{k≥1} (1 - A)^k / k` for constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::InvalidArgument("logarithm needs constant term 1".into()));
        }
        let u = TruncatedSeries::one(self.n, self.degree).sub(self)?;
        self.compose(&u, |k| {
            if k == 0 {
                BigRational::zero()
            } else {
                -BigRational::new(BigInt::one(), BigInt::from(k))
            }
        })
    }

    /// `exp P = Σ_k P^k / k!` for constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::InvalidArgument("exponential needs constant term 0".into()));
        }
        let mut factorial = BigInt::one();
        let inverse_factorials: Vec<BigRational> = (0..=self.degree)
            .map(|k| {
                if k > 0 {
                    factorial *= k;
                }
                BigRational::new(BigInt::one(), factorial.clone())
            })
            .collect();
        self.compose(self, |k| inverse_factorials[k].clone())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries(n={}, D={}, {self})", self.n, self.degree)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O(deg {})", self.degree + 1);
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| a.0.total().cmp(&b.0.total()).then_with(|| b.0.cmp(a.0)));
        for (idx, (m, c)) in ordered.into_iter().enumerate() {
            let monomial: Vec<String> = m
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            match (monomial.is_empty(), magnitude.is_one()) {
                (true, _) => write!(f, "{magnitude}")?,
                (false, true) => write!(f, "{}", monomial.join("*"))?,
                (false, false) => write!(f, "{magnitude}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

/// List of `{"exponents": […], "num": "…", "den": "…"}` objects.
impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exponents: &'a [u32],
            num: String,
            den: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&Term {
                exponents: m.as_slice(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })?;
        }
        seq.end()
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i128
}

/// All exponent vectors of length `n` and total degree at most `degree`, in
/// increasing total degree.
pub fn exponent_vectors(n: usize, degree: usize) -> Vec<ExponentVector> {
    fn fill(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if pos == current.len() {
            if left == 0 {
                out.push(ExponentVector::new(current.clone()));
            }
            return;
        }
        for e in (0..=left).rev() {
            current[pos] = e;
            fill(pos + 1, left - e, current, out);
        }
        current[pos] = 0;
    }
    let mut out = Vec::new();
    for d in 0..=degree as u32 {
        fill(0, d, &mut vec![0; n], &mut out);
        if n == 0 {
            break;
        }
    }
    out
}

/// Independent sets inside `allowed`, as a series.
fn independent_series(graph: &Graph, degree: usize, keep: impl Fn(VertexSet) -> bool) -> TruncatedSeries {
    let n = graph.vertex_count();
    TruncatedSeries::from_terms(
        n,
        degree,
        graph
            .independent_sets()
            .into_iter()
            .filter(|&s| keep(s))
            .map(|s| (ExponentVector::indicator(n, s), BigRational::one())),
    )
    .expect("indicator vectors have the right length")
}

/// `T(x)`: trivial heaps, i.e. independent sets.
pub fn trivial_series(graph: &Graph, degree: usize) -> TruncatedSeries {
    independent_series(graph, degree, |_| true)
}

/// `T_{S̄}(x)`: trivial heaps with every piece of type outside `S`.
pub fn trivial_series_avoiding(graph: &Graph, s: VertexSet, degree: usize) -> TruncatedSeries {
    independent_series(graph, degree, |set| !set.intersects(s))
}

/// `T_k(x)`: trivial heaps containing a piece of type `k`.
pub fn trivial_series_containing(graph: &Graph, k: usize, degree: usize) -> TruncatedSeries {
    independent_series(graph, degree, |set| set.contains(k))
}

/// `H(x) = 1 / T(-x)`.
pub fn heap_series(graph: &Graph, degree: usize) -> TruncatedSeries {
    trivial_series(graph, degree)
        .neg_vars()
        .reciprocal()
        .expect("trivial series has constant term 1")
}

/// `P(x) = -ln T(-x)`.
pub fn pyramid_series(graph: &Graph, degree: usize) -> TruncatedSeries {
    trivial_series(graph, degree)
        .neg_vars()
        .log()
        .expect("trivial series has constant term 1")
        .scale(&-BigRational::one())
}

/// `H_S(x) = T_{S̄}(-x) / T(-x)`: heaps whose minimal pieces all have type in `S`.
pub fn restricted_heap_series(graph: &Graph, s: VertexSet, degree: usize) -> Result<TruncatedSeries> {
    if !s.is_subset(graph.vertices()) {
        return Err(Error::VertexOutOfRange {
            vertex: s.iter().last().unwrap_or(0),
            n: graph.vertex_count(),
        });
    }
    trivial_series_avoiding(graph, s, degree)
        .neg_vars()
        .mul(&heap_series(graph, degree))
}

/// Largest `|m|` for direct heap enumeration.
pub const MAX_DIRECT_PIECES: usize = 10;

/// Heaps of one type, tallied by the set of types of their minimal pieces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeapCensus {
    pub total: u64,
    /// Heaps with exactly one minimal piece.
    pub pyramids: u64,
    pub by_minimal_types: BTreeMap<VertexSet, u64>,
}

impl HeapCensus {
    /// Heaps all of whose minimal pieces have type in `s`.
    pub fn restricted(&self, s: VertexSet) -> u64 {
        self.by_minimal_types
            .iter()
            .filter(|(types, _)| types.is_subset(s))
            .map(|(_, &c)| c)
            .sum()
    }
}

/// Enumerates every heap of type `m` directly from the definition.
pub fn heap_census(graph: &Graph, m: &ExponentVector) -> Result<HeapCensus> {
    if m.total() > MAX_DIRECT_PIECES {
        return Err(Error::TooManyVertices {
            count: m.total(),
            max: MAX_DIRECT_PIECES,
        });
    }
    let blown = graph.blowup(m)?;
    let offsets = blowup_offsets(m);
    let mut type_of = vec![0usize; m.total() + 1];
    let mut chains = Vec::new();
    for i in 1..=graph.vertex_count() {
        let first = offsets[i - 1] + 1;
        let last = offsets[i - 1] + m[i - 1] as usize;
        for a in first..=last {
            type_of[a] = i;
            for b in a + 1..=last {
                chains.push((a, b));
            }
        }
    }
    let mut census = HeapCensus::default();
    for heap in enumerate_acyclic_extending(&blown, &chains)? {
        let minimal = heap.sources(&blown);
        census.total += 1;
        if minimal.len() == 1 {
            census.pyramids += 1;
        }
        let types = VertexSet::from_vertices(minimal.iter().map(|v| type_of[v]));
        *census.by_minimal_types.entry(types).or_insert(0) += 1;
    }
    Ok(census)
}

pub fn direct_heap_count(graph: &Graph, m: &ExponentVector) -> Result<u64> {
    Ok(heap_census(graph, m)?.total)
}

pub fn direct_pyramid_count(graph: &Graph, m: &ExponentVector) -> Result<u64> {
    Ok(heap_census(graph, m)?.pyramids)
}

pub fn direct_restricted_count(graph: &Graph, s: VertexSet, m: &ExponentVector) -> Result<u64> {
    Ok(heap_census(graph, m)?.restricted(s))
}

/// Default total degree up to which the verifier compares series against
/// direct heap enumeration.
pub const DEFAULT_DIRECT_DEGREE: usize = 4;

/// Largest vertex count for which every `S ⊆ [n]` is checked; above it only
/// `∅`, `[n]` and the singletons are.
pub const ALL_SUBSETS_MAX_VERTICES: usize = 5;

/// Checks `H·T(-x) = 1`, `exp P = H` and `H_S·T(-x) = T_{S̄}(-x)` up to total
/// degree `degree`, the squarefree coefficients of `H` and `P` against the
/// acyclic-orientation tables, and all coefficients up to
/// [`DEFAULT_DIRECT_DEGREE`] against direct heap enumeration.
pub fn verify_heap_identities(graph: &Graph, degree: usize) -> Result<VerificationReport> {
    verify_heap_identities_with(graph, degree, DEFAULT_DIRECT_DEGREE.min(degree))
}

pub fn verify_heap_identities_with(
    graph: &Graph,
    degree: usize,
    direct_degree: usize,
) -> Result<VerificationReport> {
    let n = graph.vertex_count();
    let mut report = VerificationReport::new(
        "heap-identities",
        &[("D", degree as i64), ("direct_degree", direct_degree as i64)],
    );
    let t_neg = trivial_series(graph, degree).neg_vars();
    let h = heap_series(graph, degree);
    let p = pyramid_series(graph, degree);
    let one = TruncatedSeries::one(n, degree);

    report.push(CheckOutcome::compare("H·T(-x) = 1", &h.mul(&t_neg)?, &one));
    report.push(CheckOutcome::compare("exp(P) = H", &p.exp()?, &h));
    report.push(CheckOutcome::compare("ln(H) = P", &h.log()?, &p));

    let subsets: Vec<VertexSet> = if n <= ALL_SUBSETS_MAX_VERTICES {
        graph.vertices().subsets().collect()
    } else {
        let mut v = vec![VertexSet::EMPTY, graph.vertices()];
        v.extend(graph.vertices().iter().map(VertexSet::singleton));
        v
    };
    let mut restricted = Vec::with_capacity(subsets.len());
    let mut failed_subsets = Vec::new();
    for &s in &subsets {
        let expected = trivial_series_avoiding(graph, s, degree).neg_vars();
        let hs = expected.mul(&h)?;
        if hs.mul(&t_neg)? != expected {
            failed_subsets.push(s.to_string());
        }
        restricted.push((s, hs));
    }
    report.push(if failed_subsets.is_empty() {
        CheckOutcome::pass(format!("H_S·T(-x) = T_S̄(-x) for {} sets S", subsets.len()))
    } else {
        CheckOutcome::fail("H_S·T(-x) = T_S̄(-x)", format!("fails for S in {}", failed_subsets.join(" ")))
    });
    report.push(CheckOutcome::compare(
        "H_[n] = H",
        &restricted_heap_series(graph, graph.vertices(), degree)?,
        &h,
    ));

    if n <= crate::budget::Budget::default().max_table_vertices {
        let a = orientations::acyclic_count_table(graph)?;
        let b = orientations::unique_source_min_table(graph)?;
        let mut bad = None;
        for set in graph.vertices().subsets().filter(|s| s.len() <= degree) {
            let ha = h.coefficient_of_set(set);
            let pb = p.coefficient_of_set(set);
            if ha != BigRational::from_integer(a.get(set).into())
                || pb != BigRational::from_integer(b.get(set).into())
            {
                bad = Some(format!("at x^{set}: H={ha}, a={}, P={pb}, b={}", a.get(set), b.get(set)));
                break;
            }
        }
        report.push(match bad {
            None => CheckOutcome::pass("squarefree [x^V]H = a[V], [x^V]P = b[V]"),
            Some(d) => CheckOutcome::fail("squarefree [x^V]H = a[V], [x^V]P = b[V]", d),
        });
    }

    let mut bad = None;
    'monomials: for m in exponent_vectors(n, direct_degree.min(MAX_DIRECT_PIECES)) {
        let census = heap_census(graph, &m)?;
        let total = m.total();
        let pyramid_weight = if total == 0 {
            BigRational::zero()
        } else {
            BigRational::new(BigInt::from(census.pyramids), BigInt::from(total))
        };
        if h.coefficient(&m) != BigRational::from_integer(census.total.into()) {
            bad = Some(format!("[x^{m:?}]H = {}, direct {}", h.coefficient(&m), census.total));
            break;
        }
        if p.coefficient(&m) != pyramid_weight {
            bad = Some(format!("[x^{m:?}]P = {}, direct {pyramid_weight}", p.coefficient(&m)));
            break;
        }
        for (s, hs) in &restricted {
            let direct = census.restricted(*s);
            if hs.coefficient(&m) != BigRational::from_integer(direct.into()) {
                bad = Some(format!("[x^{m:?}]H_{s} = {}, direct {direct}", hs.coefficient(&m)));
                break 'monomials;
            }
        }
    }
    report.push(match bad {
        None => CheckOutcome::pass("coefficients match direct heap enumeration"),
        Some(d) => CheckOutcome::fail("coefficients match direct heap enumeration", d),
    });
    Ok(report)
}
