//! Hilbert series, functions and polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coefficients::Field;
use crate::groebner::{buchberger_complete, standard_monomials, GroebnerBasis, MonomialIdeal};
use crate::polyring::{ModuleOrder, Monomial, Ring};
use crate::resolution::{BettiTable, GradedMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("not a curve: the Hilbert polynomial {}, expected degree 1", describe_degree(.0))]
    NotACurve(Option<usize>),
}

fn describe_degree(d: &Option<usize>) -> String {
    match d {
        Some(d) => format!("has degree {d}"),
        None => "is zero".to_string(),
    }
}

/// A Laurent polynomial `Σ c_k t^k` with integer coefficients, the numerator
/// of a Hilbert series over `(1 - t)^n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertNumerator {
    /// Exponent of `coeffs[0]`.
    low: i32,
    coeffs: Vec<i64>,
}

impl HilbertNumerator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i32, c: i64) -> Self {
        Self::new(exp, vec![c])
    }

    pub fn new(low: i32, coeffs: Vec<i64>) -> Self {
        let mut n = Self { low, coeffs };
        n.normalize();
        n
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc.add(&Self::monomial(e, c)))
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| **c == 0).count();
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coefficient(&self, exp: i32) -> i64 {
        let k = exp - self.low;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(exponent, coefficient)` pairs, increasing.
    pub fn terms(&self) -> Vec<(i32, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, &c)| (self.low + k as i32, c))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let coeffs = (low..=high)
            .map(|e| self.coefficient(e) + other.coefficient(e))
            .collect();
        Self::new(low, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::new(self.low + k, self.coeffs.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.low + other.low, coeffs)
    }

    /// `self · (1 - t)^k`.
    pub fn times_one_minus_t(&self, k: usize) -> Self {
        let factor = Self::new(0, vec![1, -1]);
        (0..k).fold(self.clone(), |acc, _| acc.mul(&factor))
    }

    /// `self / (1 - t)` when the division is exact.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // q_k = sum of c_j for j <= k; exact iff the total sum vanishes
        let mut acc = 0i64;
        let mut q = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            acc += c;
            q.push(acc);
        }
        (q.pop() == Some(0)).then(|| Self::new(self.low, q))
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Derivative evaluated at `t = 1`.
    pub fn derivative_at_one(&self) -> i64 {
        self.terms().iter().map(|&(e, c)| e as i64 * c).sum()
    }

    /// Splits `self = Q · (1 - t)^m` with `Q(1) != 0`; returns `(Q, m)`.
    pub fn reduce(&self) -> (Self, usize) {
        let mut q = self.clone();
        let mut m = 0;
        while !q.is_zero() {
            match q.div_one_minus_t() {
                Some(next) if q.at_one() == 0 => {
                    q = next;
                    m += 1;
                }
                _ => break,
            }
        }
        (q, m)
    }

    /// Coefficient of `t^d` in `self / (1 - t)^n`.
    pub fn series_coefficient(&self, nvars: usize, d: i32) -> i64 {
        self.terms()
            .iter()
            .filter(|&&(e, _)| e <= d)
            .map(|&(e, c)| {
                c * binomial((d - e) as i64 + nvars as i64 - 1, nvars as i64 - 1)
            })
            .sum()
    }

    /// First coefficients of the series `self / (1 - t)^n`, from degree
    /// `from` to `to` inclusive.
    pub fn expand(&self, nvars: usize, from: i32, to: i32) -> Vec<i64> {
        (from..=to).map(|d| self.series_coefficient(nvars, d)).collect()
    }
}

/// `C(a, b)` for `b >= 0`, zero when `a < b` and `a >= 0`; for
/// `nvars = 0` only `C(k - 1, -1)` arises, which is `[k == 0]`.
fn binomial(a: i64, b: i64) -> i64 {
    if b < 0 {
        return i64::from(a == -1);
    }
    if a < b || a < 0 {
        return 0;
    }
    let b = b.min(a - b);
    let mut r: i128 = 1;
    for k in 0..b {
        r = r * (a - k) as i128 / (k + 1) as i128;
    }
    r as i64
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().into_iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{e}")?,
                _ => write!(f, "{a}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Numerator of the Hilbert series of `S / I` over `(1 - t)^n`.
///
/// Base case: generators with pairwise disjoint supports give
/// `Π (1 - t^{deg m})`. Otherwise split on the variable `x` dividing the
/// most generators: `N(I) = N(I + <x>) + t · N(I : x)`.
pub fn hilbert_series_monomial(ideal: &MonomialIdeal) -> HilbertNumerator {
    if ideal.is_unit() {
        return HilbertNumerator::zero();
    }
    let gens = ideal.gens();
    let mut used = 0u64;
    let mut disjoint = true;
    for g in gens {
        let mask = g.support_mask();
        if mask & used != 0 || g.nvars() > 64 {
            disjoint = false;
            break;
        }
        used |= mask;
    }
    if disjoint {
        return gens.iter().fold(HilbertNumerator::one(), |acc, g| {
            acc.mul(&HilbertNumerator::new(0, vec![1]).sub(&HilbertNumerator::monomial(
                g.degree() as i32,
                1,
            )))
        });
    }
    let n = ideal.nvars();
    let mut counts = vec![0usize; n];
    for g in gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let pivot = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).expect("nvars > 0");
    let x = Monomial::variable(n, pivot);
    let plus = hilbert_series_monomial(&ideal.with(x.clone()));
    let colon = hilbert_series_monomial(&ideal.quotient(&x));
    plus.add(&colon.shift(1))
}

/// Numerator of `⊕ S(-twist_p) / L_p` for monomial submodules `L_p`.
pub fn hilbert_series_module(ideals: &[MonomialIdeal], twists: &[i32]) -> HilbertNumerator {
    ideals
        .iter()
        .zip(twists)
        .fold(HilbertNumerator::zero(), |acc, (l, &t)| {
            acc.add(&hilbert_series_monomial(l).shift(t))
        })
}

/// Numerator of the cokernel of a Groebner basis in a graded free module;
/// by Macaulay's theorem it only depends on the leading terms.
pub fn hilbert_series_gb<F: Field>(
    gb: &GroebnerBasis<F>,
    nvars: usize,
    twists: &[i32],
) -> HilbertNumerator {
    let mut ideals = gb.leading_ideals(nvars);
    ideals.resize_with(twists.len(), || MonomialIdeal::zero(nvars));
    hilbert_series_module(&ideals, twists)
}

/// Numerator of the cokernel of a homogeneous presentation, read off the
/// leading terms of a Groebner basis of its columns.
pub fn cokernel_numerator<F: Field>(ring: &Ring<F>, presentation: &GradedMatrix<F>) -> HilbertNumerator {
    let order = ModuleOrder::TermOverPosition(ring.order());
    let twists = presentation.row_twists();
    let columns: Vec<_> = presentation
        .columns(&order)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    let (gb, _) = buchberger_complete(ring.field(), &order, &columns, twists);
    hilbert_series_gb(&gb, ring.nvars(), twists)
}

/// `Σ_i (-1)^i Σ_j β_{ij} t^j`.
pub fn numerator_from_resolution(b: &BettiTable) -> HilbertNumerator {
    HilbertNumerator::from_terms(
        b.iter()
            .map(|(i, j, r)| (j, if i % 2 == 0 { r as i64 } else { -(r as i64) })),
    )
}

/// `dim_k (S/I)_d` by counting standard monomials.
pub fn hilbert_function(ideal: &MonomialIdeal, d: u32) -> u64 {
    standard_monomials(ideal, d).len() as u64
}

/// The Hilbert polynomial, with rational coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomialData {
    pub coefficients: Vec<BigRational>,
    /// Krull dimension of the module.
    pub dimension: usize,
    /// Leading coefficient times `(dimension - 1)!`.
    pub degree: i64,
    /// The Hilbert function agrees with the polynomial from this degree on.
    pub agrees_from: i32,
}

impl HilbertPolynomialData {
    pub fn from_numerator(num: &HilbertNumerator, nvars: usize) -> Self {
        let (q, m) = num.reduce();
        let dim = nvars.saturating_sub(m);
        // HP(t) = Σ_k q_k C(t - k + dim - 1, dim - 1)
        let mut coefficients = vec![BigRational::zero()];
        if dim > 0 {
            for (k, c) in q.terms() {
                let basis = binomial_polynomial(k as i64, dim - 1);
                add_scaled(&mut coefficients, &basis, &BigRational::from_integer(c.into()));
            }
        }
        while coefficients.len() > 1 && coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        let agrees_from = if num.is_zero() {
            0
        } else {
            (num.high() - nvars as i32 + 1).max(0)
        };
        Self {
            coefficients,
            dimension: dim,
            degree: if num.is_zero() { 0 } else { q.at_one() },
            agrees_from,
        }
    }

    /// Degree of the polynomial, `None` for the zero polynomial.
    pub fn poly_degree(&self) -> Option<usize> {
        if self.coefficients.iter().all(Zero::is_zero) {
            None
        } else {
            Some(self.coefficients.len() - 1)
        }
    }

    pub fn evaluate(&self, n: i64) -> BigRational {
        let x = BigRational::from_integer(n.into());
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// `(d, g)` from `HP(t) = d t + 1 - g`.
    pub fn degree_genus(&self) -> Result<(i64, i64), HilbertError> {
        if self.poly_degree() != Some(1) {
            return Err(HilbertError::NotACurve(self.poly_degree()));
        }
        let d = self.coefficients[1].to_integer();
        let c = self.coefficients[0].to_integer();
        Ok((
            d.to_i64().expect("small degree"),
            (BigInt::one() - c).to_i64().expect("small genus"),
        ))
    }
}

impl fmt::Display for HilbertPolynomialData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() && !(k == 0 && first) {
                continue;
            }
            let a = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let coef = if a.is_one() && k > 0 { String::new() } else { a.to_string() };
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{coef}t")?,
                _ => write!(f, "{coef}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Coefficients of `C(t - k + e, e)` as a polynomial in `t`.
fn binomial_polynomial(k: i64, e: usize) -> Vec<BigRational> {
    let mut p = vec![BigRational::one()];
    for i in 1..=e as i64 {
        // multiply by (t - k + i) / i
        let shift = BigRational::from_integer((i - k).into());
        let inv = BigRational::new(BigInt::one(), i.into());
        let mut next = vec![BigRational::zero(); p.len() + 1];
        for (j, c) in p.iter().enumerate() {
            next[j + 1] += c * &inv;
            next[j] += c * &shift * &inv;
        }
        p = next;
    }
    p
}

fn add_scaled(acc: &mut Vec<BigRational>, p: &[BigRational], c: &BigRational) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigRational::zero());
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b * c;
    }
}

/// Degree and arithmetic genus of a curve in `P^{n-1}` from the numerator of
/// `S / I_C`: with `Q = N / (1 - t)^{n-2}`, `d = Q(1)` and
/// `g = 1 - d + Q'(1)`.
pub fn degree_genus(num: &HilbertNumerator, nvars: usize) -> Result<(i64, i64), HilbertError> {
    let (q, m) = num.reduce();
    let dim = nvars.saturating_sub(m);
    if num.is_zero() || dim != 2 {
        let hp = HilbertPolynomialData::from_numerator(num, nvars);
        return Err(HilbertError::NotACurve(hp.poly_degree()));
    }
    let d = q.at_one();
    Ok((d, 1 - d + q.derivative_at_one()))
}

/// Degree and genus from a Groebner basis of the ideal.
pub fn degree_genus_of_ideal<F: Field>(
    gb: &GroebnerBasis<F>,
    nvars: usize,
) -> Result<(i64, i64), HilbertError> {
    degree_genus(&hilbert_series_gb(gb, nvars, &[0]), nvars)
}

/// Krull dimension of `S / I`: the largest set of variables `U` such that no
/// generator is a monomial in `U` alone.
pub fn krull_dimension(ideal: &MonomialIdeal) -> usize {
    let n = ideal.nvars();
    assert!(n < 64, "too many variables for subset search");
    if ideal.is_unit() {
        return 0;
    }
    let masks: Vec<u64> = ideal.gens().iter().map(Monomial::support_mask).collect();
    for size in (0..=n).rev() {
        let found = subsets_of_size(n, size).any(|u| masks.iter().all(|m| m & !u != 0));
        if found {
            return size;
        }
    }
    0
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..(1u64 << n)).filter(move |s| s.count_ones() as usize == k)
}

/// `max (j - i)` over the table, beyond which Hilbert function and
/// polynomial agree.
pub fn regularity_bound(b: &BettiTable) -> i32 {
    b.regularity().unwrap_or(0)
}
