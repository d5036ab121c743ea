//! Tables indexed by subsets of `{1..n}` and the ranked zeta/Möbius machinery
//! behind fast subset convolution.
//!
//! A table entry for the set `V` lives at index `V.bits()`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Integer-valued function on the subsets of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubsetTable {
    n: usize,
    values: Vec<i128>,
}

impl SubsetTable {
    pub(crate) fn from_values(n: usize, values: Vec<i128>) -> Self {
        debug_assert_eq!(values.len(), 1 << n);
        SubsetTable { n, values }
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn get(&self, set: VertexSet) -> i128 {
        self.values[set.bits() as usize]
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }

    /// `(set, value)` pairs in increasing bit order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, i128)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(bits, &v)| (VertexSet::from_bits(bits as u64), v))
    }

    pub fn to_big(&self) -> Vec<BigInt> {
        self.values.iter().map(|&v| BigInt::from(v)).collect()
    }
}

fn overflow() -> Error {
    Error::ResourceBudgetExceeded {
        what: "128-bit table arithmetic",
        limit: 127,
    }
}

/// Cells needed by a ranked transform on `n` bits.
pub(crate) fn ranked_cells(n: usize) -> usize {
    (n + 1).saturating_mul(1usize.checked_shl(n as u32).unwrap_or(usize::MAX))
}

pub(crate) fn check_ranked_budget(n: usize, budget: &Budget) -> Result<()> {
    if n > budget.max_table_vertices || ranked_cells(n) > budget.max_table_cells {
        return Err(Error::ResourceBudgetExceeded {
            what: "subset table cells",
            limit: budget.max_table_cells.min(ranked_cells(budget.max_table_vertices)),
        });
    }
    Ok(())
}

/// Zeta transform in place: `f[X] ← Σ_{Y ⊆ X} f[Y]`.
fn zeta(f: &mut [i128], n: usize) -> Result<()> {
    for bit in 0..n {
        let b = 1usize << bit;
        for x in 0..f.len() {
            if x & b != 0 {
                f[x] = f[x].checked_add(f[x ^ b]).ok_or_else(overflow)?;
            }
        }
    }
    Ok(())
}

/// Inverse of [`zeta`].
fn mobius(f: &mut [i128], n: usize) -> Result<()> {
    for bit in 0..n {
        let b = 1usize << bit;
        for x in 0..f.len() {
            if x & b != 0 {
                f[x] = f[x].checked_sub(f[x ^ b]).ok_or_else(overflow)?;
            }
        }
    }
    Ok(())
}

/// Ranked zeta transform: `layers[k][X] = Σ_{Y ⊆ X, |Y| = k} f[Y]`.
fn ranked_zeta(f: &[i128], n: usize) -> Result<Vec<Vec<i128>>> {
    let mut layers = vec![vec![0i128; f.len()]; n + 1];
    for (x, &v) in f.iter().enumerate() {
        layers[x.count_ones() as usize][x] = v;
    }
    for layer in &mut layers {
        zeta(layer, n)?;
    }
    Ok(layers)
}

/// Reads back a function from ranked layers: `f[X] = (μ layers[|X|])[X]`.
fn ranked_mobius(mut layers: Vec<Vec<i128>>, n: usize) -> Result<Vec<i128>> {
    let size = 1usize << n;
    let mut out = vec![0i128; size];
    for (k, layer) in layers.iter_mut().enumerate() {
        mobius(layer, n)?;
        for (x, slot) in out.iter_mut().enumerate() {
            if x.count_ones() as usize == k {
                *slot = layer[x];
            }
        }
    }
    Ok(out)
}

/// Subset convolution `h[V] = Σ_{U ⊆ V} f[U] g[V∖U]` in `O(2^n n^2)`.
pub(crate) fn convolve(f: &[i128], g: &[i128], n: usize) -> Result<Vec<i128>> {
    let fz = ranked_zeta(f, n)?;
    let gz = ranked_zeta(g, n)?;
    let mut hz = vec![vec![0i128; f.len()]; n + 1];
    for x in 0..f.len() {
        for r in 0..=n {
            let mut acc = 0i128;
            for j in 0..=r {
                let term = fz[j][x].checked_mul(gz[r - j][x]).ok_or_else(overflow)?;
                acc = acc.checked_add(term).ok_or_else(overflow)?;
            }
            hz[r][x] = acc;
        }
    }
    ranked_mobius(hz, n)
}

/// Inverse under subset convolution of `f` with `f[∅] = 1`: the unique `h`
/// with `Σ_{U ⊆ V} f[U] h[V∖U] = [V = ∅]`.
pub(crate) fn invert(f: &[i128], n: usize) -> Result<Vec<i128>> {
    if f[0] != 1 {
        return Err(Error::InvalidArgument("inverse needs f[∅] = 1".into()));
    }
    let mut layers = ranked_zeta(f, n)?;
    let mut point = vec![0i128; n + 1];
    for x in 0..f.len() {
        // pointwise power-series inverse in the rank variable
        for k in 0..=n {
            if k == 0 {
                point[0] = 1;
                continue;
            }
            let mut acc = 0i128;
            for j in 1..=k {
                let term = layers[j][x].checked_mul(point[k - j]).ok_or_else(overflow)?;
                acc = acc.checked_sub(term).ok_or_else(overflow)?;
            }
            point[k] = acc;
        }
        for k in 0..=n {
            layers[k][x] = point[k];
        }
    }
    ranked_mobius(layers, n)
}

/// Straightforward `O(3^n)` subset convolution over big integers.
pub fn convolve_naive(f: &[BigInt], g: &[BigInt], n: usize) -> Vec<BigInt> {
    let size = 1usize << n;
    let mut h = vec![BigInt::zero(); size];
    for (v, slot) in h.iter_mut().enumerate() {
        let mut u = v;
        loop {
            if !f[u].is_zero() && !g[v ^ u].is_zero() {
                *slot += &f[u] * &g[v ^ u];
            }
            if u == 0 {
                break;
            }
            u = (u - 1) & v;
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_i128(f: &[i128], g: &[i128], n: usize) -> Vec<i128> {
        let fb: Vec<BigInt> = f.iter().map(|&x| BigInt::from(x)).collect();
        let gb: Vec<BigInt> = g.iter().map(|&x| BigInt::from(x)).collect();
        convolve_naive(&fb, &gb, n)
            .into_iter()
            .map(|x| i128::try_from(x).unwrap())
            .collect()
    }

    proptest! {
        #[test]
        fn ranked_convolution_matches_naive(
            n in 0usize..6,
            seed in proptest::collection::vec(-50i128..50, 64),
            seed2 in proptest::collection::vec(-50i128..50, 64),
        ) {
            let size = 1 << n;
            let f = &seed[..size];
            let g = &seed2[..size];
            prop_assert_eq!(convolve(f, g, n).unwrap(), naive_i128(f, g, n));
        }

        #[test]
        fn inverse_is_inverse(n in 0usize..6, seed in proptest::collection::vec(-9i128..9, 64)) {
            let size = 1 << n;
            let mut f = seed[..size].to_vec();
            f[0] = 1;
            let h = invert(&f, n).unwrap();
            let mut unit = vec![0i128; size];
            unit[0] = 1;
            prop_assert_eq!(naive_i128(&f, &h, n), unit);
        }
    }
}
