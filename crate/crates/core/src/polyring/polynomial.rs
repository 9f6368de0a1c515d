use std::cmp::Ordering;
use std::collections::HashSet;

use rand::RngCore;
use thiserror::Error;

use super::monomial::{Monomial, MonomialOrder};
use crate::coefficients::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("a polynomial ring needs at least one variable")]
    NoVariables,
    #[error("variable name `{0}` is invalid or repeated")]
    BadVariable(String),
}

/// A term `c·x^a` with nonzero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Term<F: Field> {
    pub coeff: F::Elem,
    pub mon: Monomial,
}

/// A polynomial: terms sorted strictly decreasing under the ring's order,
/// without zero coefficients. The empty list is the zero polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F: Field> {
    terms: Vec<Term<F>>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// Wraps terms that are already normalized for some order. Callers are
    /// responsible for the ordering invariant.
    pub(crate) fn from_sorted_terms(terms: Vec<Term<F>>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The leading term, or `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mon)
    }

    /// Largest total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mon.degree()).max()
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.mon.degree();
        self.terms.iter().all(|t| t.mon.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Coefficient of `mon` (zero when absent).
    pub fn coefficient(&self, field: &F, mon: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|t| &t.mon == mon)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| field.zero())
    }
}

/// A polynomial ring `k[x_0..x_{n-1}]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq)]
pub struct Ring<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, vars: &[&str], order: MonomialOrder) -> Result<Self, RingError> {
        Self::with_names(field, vars.iter().map(|s| s.to_string()).collect(), order)
    }

    pub fn with_names(
        field: F,
        vars: Vec<String>,
        order: MonomialOrder,
    ) -> Result<Self, RingError> {
        if vars.is_empty() {
            return Err(RingError::NoVariables);
        }
        let mut seen = HashSet::new();
        for v in &vars {
            let mut chars = v.chars();
            let ok = chars
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || !seen.insert(v.clone()) {
                return Err(RingError::BadVariable(v.clone()));
            }
        }
        Ok(Self { field, vars, order })
    }

    /// The same ring with a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Self {
            field: self.field.clone(),
            vars: self.vars.clone(),
            order,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        self.monomial(c, Monomial::one(self.nvars()))
    }

    /// The variable `x_i`.
    pub fn var(&self, i: usize) -> Polynomial<F> {
        self.monomial(self.field.one(), Monomial::variable(self.nvars(), i))
    }

    pub fn monomial(&self, coeff: F::Elem, mon: Monomial) -> Polynomial<F> {
        if self.field.is_zero(&coeff) {
            return Polynomial::zero();
        }
        Polynomial::from_sorted_terms(vec![Term { coeff, mon }])
    }

    /// Builds a normalized polynomial from arbitrary terms: sorts, merges
    /// equal monomials and drops zero coefficients.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (F::Elem, Monomial)>) -> Polynomial<F> {
        let mut terms: Vec<Term<F>> = terms
            .into_iter()
            .map(|(coeff, mon)| Term { coeff, mon })
            .collect();
        terms.sort_by(|a, b| self.order.compare(&b.mon, &a.mon));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mon == t.mon => {
                    last.coeff = self.field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !self.field.is_zero(&t.coeff));
        Polynomial::from_sorted_terms(out)
    }

    /// Re-sorts a polynomial that was built under another order.
    pub fn normalize(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let mut terms = p.terms.clone();
        terms.sort_by(|a, b| self.order.compare(&b.mon, &a.mon));
        Polynomial::from_sorted_terms(terms)
    }

    /// `a + c·b`.
    pub fn add_scaled(&self, a: &Polynomial<F>, c: &F::Elem, b: &Polynomial<F>) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (s, t) = (&a.terms[i], &b.terms[j]);
            match self.order.compare(&s.mon, &t.mon) {
                Ordering::Greater => {
                    out.push(s.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: self.field.mul(c, &t.coeff),
                        mon: t.mon.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = self.field.add(&s.coeff, &self.field.mul(c, &t.coeff));
                    if !self.field.is_zero(&coeff) {
                        out.push(Term {
                            coeff,
                            mon: s.mon.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(b.terms[j..].iter().map(|t| Term {
            coeff: self.field.mul(c, &t.coeff),
            mon: t.mon.clone(),
        }));
        Polynomial::from_sorted_terms(out)
    }

    pub fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.add_scaled(a, &self.field.one(), b)
    }

    pub fn sub(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.add_scaled(a, &self.field.neg(&self.field.one()), b)
    }

    pub fn neg(&self, a: &Polynomial<F>) -> Polynomial<F> {
        self.scale(a, &self.field.neg(&self.field.one()))
    }

    pub fn scale(&self, a: &Polynomial<F>, c: &F::Elem) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial::from_sorted_terms(
            a.terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(c, &t.coeff),
                    mon: t.mon.clone(),
                })
                .collect(),
        )
    }

    /// `c·x^m·a`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, a: &Polynomial<F>, c: &F::Elem, m: &Monomial) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial::from_sorted_terms(
            a.terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(c, &t.coeff),
                    mon: t.mon.mul(m),
                })
                .collect(),
        )
    }

    pub fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc = Polynomial::zero();
        for t in &small.terms {
            let part = self.mul_term(large, &t.coeff, &t.mon);
            acc = self.add(&acc, &part);
        }
        acc
    }

    pub fn pow(&self, a: &Polynomial<F>, e: u32) -> Polynomial<F> {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, a: &Polynomial<F>, i: usize) -> Polynomial<F> {
        self.from_terms(a.terms.iter().filter(|t| t.mon.exponent(i) > 0).map(|t| {
            (
                self.field
                    .mul(&t.coeff, &self.field.from_i64(t.mon.exponent(i) as i64)),
                t.mon.lower_variable(i),
            )
        }))
    }

    /// Divides every coefficient by the leading coefficient.
    pub fn make_monic(&self, a: &Polynomial<F>) -> Polynomial<F> {
        match a.leading_term() {
            None => Polynomial::zero(),
            Some(t) => {
                let inv = self.field.inv(&t.coeff).expect("leading coefficient is nonzero");
                self.scale(a, &inv)
            }
        }
    }

    /// A random homogeneous form of degree `d` with every coefficient drawn
    /// from the field's sampler.
    pub fn random_form(&self, d: u32, rng: &mut dyn RngCore) -> Polynomial<F> {
        let terms: Vec<_> = Monomial::all_of_degree(self.nvars(), d)
            .into_iter()
            .map(|m| (self.field.random(rng), m))
            .collect();
        self.from_terms(terms)
    }

    /// The polynomial `sum c_m m` with coefficients listed against `basis`.
    pub fn from_coefficients(&self, basis: &[Monomial], coeffs: &[F::Elem]) -> Polynomial<F> {
        self.from_terms(basis.iter().cloned().zip(coeffs.iter().cloned()).map(|(m, c)| (c, m)))
    }

    /// Coefficients of `p` against `basis` (monomials outside it are ignored).
    pub fn coefficients_in(&self, p: &Polynomial<F>, basis: &[Monomial]) -> Vec<F::Elem> {
        basis.iter().map(|m| p.coefficient(&self.field, m)).collect()
    }

    pub fn format(&self, p: &Polynomial<F>) -> String {
        format_terms(
            &self.field,
            p.terms.iter().map(|t| (&t.coeff, t.mon.format(&self.vars))),
        )
    }
}

/// Shared term printer: `-x^2 + 3*y - 1/2`.
pub(crate) fn format_terms<'a, F: Field>(
    field: &F,
    terms: impl Iterator<Item = (&'a F::Elem, String)>,
) -> String {
    let mut out = String::new();
    for (k, (coeff, mon)) in terms.enumerate() {
        let text = field.format(coeff);
        let (negative, magnitude) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mon == "1" {
            out.push_str(&magnitude);
        } else if magnitude == "1" {
            out.push_str(&mon);
        } else {
            out.push_str(&magnitude);
            out.push('*');
            out.push_str(&mon);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn wxyz() -> Ring<Rationals> {
        Ring::new(Rationals, &["w", "x", "y", "z"], MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = Ring::new(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let p = r.mul(&r.add(&r.var(0), &r.var(1)), &r.sub(&r.var(0), &r.var(1)));
        assert_eq!(r.format(&p), "x^2 - y^2");
        assert_eq!(r.mul(&p, &r.one()), p);
    }

    #[test]
    fn product_of_two_quadrics() {
        let r = wxyz();
        let f = r.parse_polynomial("w^2 - x*z").unwrap();
        let g = r.parse_polynomial("y^2 - w*z").unwrap();
        let expected = r.parse_polynomial("w^2*y^2 - w^3*z - x*y^2*z + w*x*z^2").unwrap();
        assert_eq!(r.mul(&f, &g), expected);
    }

    #[test]
    fn leading_terms() {
        let r = wxyz();
        let f = r.parse_polynomial("w^2 - x*z").unwrap();
        let lead = f.leading_term().unwrap();
        assert_eq!(r.format(&r.monomial(lead.coeff.clone(), lead.mon.clone())), "w^2");
        assert!(r.zero().leading_term().is_none());
    }

    #[test]
    fn derivative_of_cubic() {
        let r = wxyz();
        let f = r.parse_polynomial("w^3 + 2*w*x*y - z").unwrap();
        assert_eq!(r.format(&r.derivative(&f, 0)), "3*w^2 + 2*x*y");
        assert_eq!(r.format(&r.derivative(&f, 3)), "-1");
    }

    #[test]
    fn rejects_bad_variable_names() {
        assert!(Ring::new(Rationals, &[], MonomialOrder::Lex).is_err());
        assert!(Ring::new(Rationals, &["x", "x"], MonomialOrder::Lex).is_err());
        assert!(Ring::new(Rationals, &["1x"], MonomialOrder::Lex).is_err());
    }

    fn small_poly(nvars: usize) -> impl Strategy<Value = Vec<(i64, Vec<u16>)>> {
        proptest::collection::vec(
            (-5i64..=5, proptest::collection::vec(0u16..3, nvars)),
            0..6,
        )
    }

    proptest! {
        #[test]
        fn leading_term_is_multiplicative(a in small_poly(3), b in small_poly(3), o in 0usize..3) {
            let order = [MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex][o];
            let f = PrimeField::new(101).unwrap();
            let r = Ring::new(f, &["x", "y", "z"], order).unwrap();
            let p = r.from_terms(a.iter().map(|(c, e)| (f.from_i64(*c), Monomial::from_exponents(e))));
            let q = r.from_terms(b.iter().map(|(c, e)| (f.from_i64(*c), Monomial::from_exponents(e))));
            let pq = r.mul(&p, &q);
            match (p.leading_term(), q.leading_term()) {
                (Some(s), Some(t)) => {
                    let l = pq.leading_term().unwrap();
                    prop_assert_eq!(&l.mon, &s.mon.mul(&t.mon));
                    prop_assert_eq!(l.coeff, s.coeff * t.coeff);
                }
                _ => prop_assert!(pq.is_zero()),
            }
        }

        #[test]
        fn text_round_trip(a in small_poly(4), den in 1i64..4) {
            let r = wxyz();
            let p = r.from_terms(a.iter().map(|(c, e)| {
                (crate::coefficients::rational_normalize(*c, den).unwrap(), Monomial::from_exponents(e))
            }));
            let text = r.format(&p);
            let back = r.parse_polynomial(&text).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(r.format(&back), text);
        }
    }
}
