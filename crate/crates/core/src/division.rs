//! Division with remainder by an ordered list of vectors.
//!
//! The leading term of the working vector is divided by the first divisor
//! whose leading monomial divides it; if none does it moves to the remainder.
//! This produces the unique decomposition `g = sum g_i f_i + h` in which no
//! term of `g_i L(f_i)` is divisible by `L(f_j)` for `j < i` and no term of `h`
//! is divisible by any `L(f_i)`.

use std::cmp::Ordering;

use thiserror::Error;

use crate::coefficients::Field;
use crate::polyring::{
    ModuleElement, ModuleMonomial, ModuleOrder, Monomial, Polynomial, Ring, Term,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisionError {
    #[error("divisor {0} is zero")]
    ZeroDivisor(usize),
    #[error("vectors live in free modules of ranks {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("the basis has not been verified to be a Groebner basis")]
    Unverified,
}

/// Quotients and remainder of a vector division.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisionResult<F: Field> {
    pub quotients: Vec<Polynomial<F>>,
    pub remainder: ModuleElement<F>,
}

/// Quotients and remainder of a polynomial division.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyDivisionResult<F: Field> {
    pub quotients: Vec<Polynomial<F>>,
    pub remainder: Polynomial<F>,
}

/// Precomputed leading data of an ordered divisor list.
pub(crate) struct Divisors<'a, F: Field> {
    elems: Vec<&'a ModuleElement<F>>,
    leads: Vec<ModuleMonomial>,
    masks: Vec<u64>,
    inv_lead: Vec<F::Elem>,
}

impl<'a, F: Field> Divisors<'a, F> {
    pub(crate) fn new(field: &F, elems: Vec<&'a ModuleElement<F>>) -> Result<Self, DivisionError> {
        let mut leads = Vec::with_capacity(elems.len());
        let mut masks = Vec::with_capacity(elems.len());
        let mut inv_lead = Vec::with_capacity(elems.len());
        for (k, e) in elems.iter().enumerate() {
            let (c, m) = e.leading_term().ok_or(DivisionError::ZeroDivisor(k))?;
            masks.push(m.mon.support_mask());
            leads.push(m.clone());
            inv_lead.push(field.inv(c).expect("nonzero leading coefficient"));
        }
        Ok(Self {
            elems,
            leads,
            masks,
            inv_lead,
        })
    }

    /// Index of the first divisor whose leading monomial divides `m`.
    pub(crate) fn find(&self, m: &ModuleMonomial) -> Option<usize> {
        let mask = m.mon.support_mask();
        (0..self.leads.len()).find(|&k| {
            self.masks[k] & !mask == 0 && self.leads[k].divides(m)
        })
    }

    /// Divides `g`; quotient terms are collected only when `track` is set.
    pub(crate) fn divide(
        &self,
        field: &F,
        order: &ModuleOrder,
        g: &ModuleElement<F>,
        track: bool,
    ) -> (Vec<Vec<Term<F>>>, ModuleElement<F>) {
        let mut quotients: Vec<Vec<Term<F>>> = if track {
            vec![Vec::new(); self.elems.len()]
        } else {
            Vec::new()
        };
        let mut work: Vec<(F::Elem, ModuleMonomial)> = g.terms().to_vec();
        let mut start = 0;
        let mut remainder = Vec::new();
        while start < work.len() {
            let (c, m) = &work[start];
            match self.find(m) {
                None => {
                    remainder.push(work[start].clone());
                    start += 1;
                }
                Some(k) => {
                    let q = field.mul(c, &self.inv_lead[k]);
                    let mono = m.mon.checked_div(&self.leads[k].mon).expect("lead divides");
                    let tail = &self.elems[k].terms()[1..];
                    work = subtract_multiple(field, order, &work[start + 1..], &q, &mono, tail);
                    start = 0;
                    if track {
                        quotients[k].push(Term { coeff: q, mon: mono });
                    }
                }
            }
        }
        (quotients, ModuleElement::from_sorted_terms(remainder, g.rank()))
    }
}

/// `a - q·x^m·b` for sorted term slices.
fn subtract_multiple<F: Field>(
    field: &F,
    order: &ModuleOrder,
    a: &[(F::Elem, ModuleMonomial)],
    q: &F::Elem,
    m: &Monomial,
    b: &[(F::Elem, ModuleMonomial)],
) -> Vec<(F::Elem, ModuleMonomial)> {
    let neg_q = field.neg(q);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    for (bc, bm) in b {
        let pm = bm.mul(m);
        let pc = field.mul(&neg_q, bc);
        loop {
            match a.get(i) {
                Some((ac, am)) => match order.compare(am, &pm) {
                    Ordering::Greater => {
                        out.push((ac.clone(), am.clone()));
                        i += 1;
                    }
                    Ordering::Equal => {
                        let s = field.add(ac, &pc);
                        if !field.is_zero(&s) {
                            out.push((s, pm));
                        }
                        i += 1;
                        break;
                    }
                    Ordering::Less => {
                        out.push((pc, pm));
                        break;
                    }
                },
                None => {
                    out.push((pc, pm));
                    break;
                }
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out
}

fn check_ranks<F: Field>(
    g: &ModuleElement<F>,
    divisors: &[ModuleElement<F>],
) -> Result<(), DivisionError> {
    for (k, f) in divisors.iter().enumerate() {
        if f.rank() != g.rank() {
            return Err(DivisionError::RankMismatch(g.rank(), f.rank()));
        }
        if f.is_zero() {
            return Err(DivisionError::ZeroDivisor(k));
        }
    }
    Ok(())
}

/// Divides the vector `g` by `divisors` (in the given sequence) under `order`.
pub fn divide_vector<F: Field>(
    ring: &Ring<F>,
    order: &ModuleOrder,
    g: &ModuleElement<F>,
    divisors: &[ModuleElement<F>],
) -> Result<DivisionResult<F>, DivisionError> {
    check_ranks(g, divisors)?;
    let d = Divisors::new(ring.field(), divisors.iter().collect())?;
    let (quotients, remainder) = d.divide(ring.field(), order, g, true);
    Ok(DivisionResult {
        quotients: quotients
            .into_iter()
            .map(Polynomial::from_sorted_terms)
            .map(|p| ring.normalize(&p))
            .collect(),
        remainder,
    })
}

/// Divides the polynomial `g` by `divisors` under the ring's order.
pub fn divide<F: Field>(
    ring: &Ring<F>,
    g: &Polynomial<F>,
    divisors: &[Polynomial<F>],
) -> Result<PolyDivisionResult<F>, DivisionError> {
    let order = ModuleOrder::TermOverPosition(ring.order());
    let lift = |p: &Polynomial<F>| ModuleElement::from_components(&order, std::slice::from_ref(p));
    let divs: Vec<_> = divisors.iter().map(lift).collect();
    let res = divide_vector(ring, &order, &lift(g), &divs)?;
    Ok(PolyDivisionResult {
        quotients: res.quotients,
        remainder: res.remainder.component(ring, 0),
    })
}

/// Checks the defining conditions of a division result: the re-expansion
/// identity, the staircase condition on quotient terms, and irreducibility
/// of the remainder.
pub fn satisfies_division_conditions<F: Field>(
    ring: &Ring<F>,
    order: &ModuleOrder,
    g: &ModuleElement<F>,
    divisors: &[ModuleElement<F>],
    result: &DivisionResult<F>,
) -> bool {
    let fm = crate::polyring::FreeModule::new(ring.field().clone(), order.clone(), g.rank());
    let expanded = fm.combine(&result.quotients, divisors);
    let Ok(total) = fm.add(&expanded, &result.remainder) else {
        return false;
    };
    if total != *g {
        return false;
    }
    let leads: Vec<&ModuleMonomial> = divisors
        .iter()
        .map(|f| f.leading_monomial().expect("nonzero divisor"))
        .collect();
    for (i, q) in result.quotients.iter().enumerate() {
        for t in q.terms() {
            let m = leads[i].mul(&t.mon);
            if leads[..i].iter().any(|l| l.divides(&m)) {
                return false;
            }
        }
    }
    result
        .remainder
        .terms()
        .iter()
        .all(|(_, m)| !leads.iter().any(|l| l.divides(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{PrimeField, Rationals};
    use crate::polyring::MonomialOrder;
    use proptest::prelude::*;

    #[test]
    fn hand_example_lex() {
        let r = Ring::new(Rationals, &["x", "y", "z"], MonomialOrder::Lex).unwrap();
        let p = |s: &str| r.parse_polynomial(s).unwrap();
        let res = divide(&r, &p("x^2*y"), &[p("x^2 - z"), p("y - 1")]).unwrap();
        assert_eq!(res.quotients, vec![p("y"), p("z")]);
        assert_eq!(res.remainder, p("z"));
    }

    #[test]
    fn self_division() {
        let r = Ring::new(Rationals, &["w", "x", "y", "z"], MonomialOrder::DegRevLex).unwrap();
        let f = r.parse_polynomial("w^2 - x*z").unwrap();
        let res = divide(&r, &f, std::slice::from_ref(&f)).unwrap();
        assert_eq!(res.quotients, vec![r.one()]);
        assert!(res.remainder.is_zero());
    }

    #[test]
    fn zero_divisor_is_an_error() {
        let r = Ring::new(Rationals, &["x"], MonomialOrder::Lex).unwrap();
        assert_eq!(
            divide(&r, &r.var(0), &[r.var(0), r.zero()]),
            Err(DivisionError::ZeroDivisor(1))
        );
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let r = Ring::new(Rationals, &["x"], MonomialOrder::Lex).unwrap();
        let o = ModuleOrder::TermOverPosition(MonomialOrder::Lex);
        let a = ModuleElement::from_components(&o, &[r.var(0)]);
        let b = ModuleElement::from_components(&o, &[r.var(0), r.zero()]);
        assert_eq!(
            divide_vector(&r, &o, &a, &[b]),
            Err(DivisionError::RankMismatch(1, 2))
        );
    }

    fn poly_strategy() -> impl Strategy<Value = Vec<(i64, Vec<u16>)>> {
        proptest::collection::vec((-3i64..=3, proptest::collection::vec(0u16..3, 3)), 1..5)
    }

    proptest! {
        #[test]
        fn division_conditions_hold_for_vectors(
            g in proptest::collection::vec(poly_strategy(), 2),
            fs in proptest::collection::vec(proptest::collection::vec(poly_strategy(), 2), 1..4),
            o in 0usize..3,
        ) {
            let order = [MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex][o];
            let f = PrimeField::new(31).unwrap();
            let ring = Ring::new(f, &["x", "y", "z"], order).unwrap();
            let mo = ModuleOrder::TermOverPosition(order);
            let mk = |comps: &Vec<Vec<(i64, Vec<u16>)>>| {
                let polys: Vec<_> = comps
                    .iter()
                    .map(|c| ring.from_terms(c.iter().map(|(k, e)| (f.from_i64(*k), Monomial::from_exponents(e)))))
                    .collect();
                ModuleElement::from_components(&mo, &polys)
            };
            let g = mk(&g);
            let divisors: Vec<_> = fs.iter().map(mk).filter(|d| !d.is_zero()).collect();
            prop_assume!(!divisors.is_empty());
            let res = divide_vector(&ring, &mo, &g, &divisors).unwrap();
            prop_assert!(satisfies_division_conditions(&ring, &mo, &g, &divisors, &res));
        }
    }
}
