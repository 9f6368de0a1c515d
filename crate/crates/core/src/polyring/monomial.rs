use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Exponent storage; rings with up to 8 variables never touch the heap.
pub type Exponents = SmallVec<[u16; 8]>;

/// A monomial `x^a` in a fixed number of variables, with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Self {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    /// The monomial `x_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Bit `i` is set when `x_i` occurs (variables beyond 63 share bit 63).
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i.min(63)))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    /// `self` with the exponent of `x_i` set to zero.
    pub fn without_variable(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.degree -= m.exps[i] as u32;
        m.exps[i] = 0;
        m
    }

    /// `self / x_i`, saturating at exponent zero.
    pub fn lower_variable(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        if m.exps[i] > 0 {
            m.exps[i] -= 1;
            m.degree -= 1;
        }
        m
    }

    /// Largest index of a variable occurring in `self`.
    pub fn last_variable(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// All monomials of total degree `d` in `nvars` variables, in decreasing
    /// lex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u16; nvars];
        fill_degree(&mut exps, 0, d, &mut out);
        out
    }

    /// Formats with the given variable names; `1` for the unit monomial.
    pub fn format(&self, vars: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars[i].clone()),
                _ => parts.push(format!("{}^{}", vars[i], e)),
            }
        }
        parts.join("*")
    }
}

fn fill_degree(exps: &mut [u16], i: usize, left: u32, out: &mut Vec<Monomial>) {
    if exps.is_empty() {
        if left == 0 {
            out.push(Monomial::from_exponents(exps));
        }
        return;
    }
    if i == exps.len() - 1 {
        exps[i] = left as u16;
        out.push(Monomial::from_exponents(exps));
        exps[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e as u16;
        fill_degree(exps, i + 1, left - e, out);
    }
    exps[i] = 0;
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", self.exps.as_slice())
    }
}

/// A global monomial order. Variable 0 is the largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    DegLex,
    DegRevLex,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown monomial order `{0}` (expected lex, deglex or degrevlex)")]
pub struct UnknownOrder(pub String);

impl FromStr for MonomialOrder {
    type Err = UnknownOrder;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lex" | "plex" => Ok(Self::Lex),
            "deglex" | "grlex" => Ok(Self::DegLex),
            "degrevlex" | "grevlex" | "drl" => Ok(Self::DegRevLex),
            _ => Err(UnknownOrder(s.to_string())),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Lex => "lex",
            Self::DegLex => "deglex",
            Self::DegRevLex => "degrevlex",
        })
    }
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare_exps(a.degree, b.degree, a.exps.len(), |i| {
            (a.exps[i] as u32, b.exps[i] as u32)
        })
    }

    /// Compares `a·s` with `b·t` without forming the products.
    pub fn compare_products(
        &self,
        a: &Monomial,
        s: &Monomial,
        b: &Monomial,
        t: &Monomial,
    ) -> Ordering {
        self.compare_exps(a.degree + s.degree, b.degree + t.degree, a.exps.len(), |i| {
            (
                a.exps[i] as u32 + s.exps[i] as u32,
                b.exps[i] as u32 + t.exps[i] as u32,
            )
        })
    }

    #[inline]
    fn compare_exps(
        &self,
        deg_a: u32,
        deg_b: u32,
        n: usize,
        exp: impl Fn(usize) -> (u32, u32),
    ) -> Ordering {
        match self {
            Self::Lex => (0..n)
                .map(&exp)
                .map(|(x, y)| x.cmp(&y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
            Self::DegLex => deg_a.cmp(&deg_b).then_with(|| {
                (0..n)
                    .map(&exp)
                    .map(|(x, y)| x.cmp(&y))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
            Self::DegRevLex => deg_a.cmp(&deg_b).then_with(|| {
                (0..n)
                    .rev()
                    .map(&exp)
                    .map(|(x, y)| y.cmp(&x))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }
}
