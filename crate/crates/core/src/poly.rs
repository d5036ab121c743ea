//! Dense univariate polynomials over exact coefficient rings.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient rings usable in [`Poly`].
pub trait Coeff:
    Clone + PartialEq + Num + Neg<Output = Self> + FromPrimitive + fmt::Display
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Num + Neg<Output = T> + FromPrimitive + fmt::Display
{
}

/// Polynomial in one variable, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Integer polynomial; houses chromatic polynomials and their quotients.
pub type IntPolynomial = Poly<BigInt>;
/// Rational polynomial; only multicoloring polynomials need it.
pub type RatPolynomial = Poly<BigRational>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c·q^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `q - r`.
    pub fn linear_root(r: T) -> Self {
        Poly::new(vec![-r, T::one()])
    }

    /// Falling factorial `q(q-1)⋯(q-d+1)`.
    pub fn falling_factorial(d: usize) -> Self {
        (0..d).fold(Poly::constant(T::one()), |acc, r| {
            &acc * &Poly::linear_root(T::from_usize(r).expect("small integer"))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `[q^k]P`.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `i`-th formal derivative.
    pub fn derivative(&self, i: usize) -> Self {
        if i >= self.coeffs.len() {
            return Poly::zero();
        }
        let coeffs = (i..self.coeffs.len())
            .map(|k| {
                let falling: usize = (k - i + 1..=k).product();
                self.coeffs[k].clone() * T::from_usize(falling).expect("falling factorial overflow")
            })
            .collect();
        Poly::new(coeffs)
    }

    /// `P(q + shift)`.
    pub fn shift(&self, shift: &T) -> Self {
        // Horner with the linear polynomial q + shift
        let lin = Poly::new(vec![shift.clone(), T::one()]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * &lin) + &Poly::constant(c.clone())
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Synthetic division by `q - r`; returns quotient and remainder.
    pub fn div_linear(&self, r: &T) -> (Self, T) {
        if self.coeffs.is_empty() {
            return (Poly::zero(), T::zero());
        }
        let mut quotient = vec![T::zero(); self.coeffs.len() - 1];
        let mut carry = T::zero();
        for k in (0..self.coeffs.len()).rev() {
            let value = self.coeffs[k].clone() + carry * r.clone();
            if k == 0 {
                return (Poly::new(quotient), value);
            }
            quotient[k - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl IntPolynomial {
    /// Exact rational polynomial with the same coefficients.
    pub fn to_rational(&self) -> RatPolynomial {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Coefficients alternate in sign starting from a positive leading term.
    pub fn has_alternating_signs(&self) -> bool {
        let Some(deg) = self.degree() else {
            return true;
        };
        self.coeffs.iter().enumerate().all(|(k, c)| {
            c.is_zero() || (c.is_positive() == ((deg - k) % 2 == 0))
        })
    }

    /// Interpolates the polynomial of degree ≤ `values.len() - 1` taking
    /// `values[q]` at `q = 0, 1, …`; fails unless the coefficients are integral.
    pub fn interpolate(values: &[BigInt]) -> Result<Self> {
        // Newton forward differences, then falling-factorial to monomial basis.
        let mut diffs = values.to_vec();
        let mut newton = Vec::with_capacity(values.len());
        for _ in 0..values.len() {
            newton.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        let mut result = RatPolynomial::zero();
        for (k, delta) in newton.into_iter().enumerate() {
            let factorial: BigInt = (1..=k).map(BigInt::from).product();
            let c = BigRational::new(delta, factorial);
            result = &result + &RatPolynomial::falling_factorial(k).scale(&c);
        }
        result.to_integer()
    }
}

impl RatPolynomial {
    /// Integer polynomial if every coefficient is integral.
    pub fn to_integer(&self) -> Result<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegerResult)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let unit = magnitude == "1";
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// `{"coeffs": ["c0", "c1", …], "var": "q"}` with decimal-string coefficients.
impl<T: Coeff> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        let mut st = serializer.serialize_struct("Poly", 2)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.serialize_field("var", "q")?;
        st.end()
    }
}
