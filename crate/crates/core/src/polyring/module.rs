//! Free modules `S^r`, their monomials `x^a e_i`, and module orders.
//!
//! Positions are 0-based in code and printed 1-based.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{format_terms, Polynomial, Ring, Term};
use crate::coefficients::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("module elements live in free modules of ranks {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("position {position} is outside a free module of rank {rank}")]
    PositionOutOfRange { position: usize, rank: usize },
    #[error("cannot build an induced order from an empty list of leading terms")]
    EmptyBasis,
}

/// A module monomial `x^a e_pos`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleMonomial {
    pub mon: Monomial,
    pub pos: usize,
}

impl ModuleMonomial {
    pub fn new(mon: Monomial, pos: usize) -> Self {
        Self { mon, pos }
    }

    /// Same position and the monomial part divides.
    pub fn divides(&self, other: &ModuleMonomial) -> bool {
        self.pos == other.pos && self.mon.divides(&other.mon)
    }

    pub fn mul(&self, m: &Monomial) -> ModuleMonomial {
        ModuleMonomial {
            mon: self.mon.mul(m),
            pos: self.pos,
        }
    }

    pub fn format(&self, vars: &[String]) -> String {
        if self.mon.is_one() {
            format!("e{}", self.pos + 1)
        } else {
            format!("{}*e{}", self.mon.format(vars), self.pos + 1)
        }
    }
}

/// How positions interact with the monomial order at the bottom of a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PositionRule {
    /// Compare monomials first; on a tie the lower position is larger.
    TermOverPosition,
    /// Compare positions first (lower is larger), then monomials.
    PositionOverTerm,
}

/// The data of an induced order on a free module `F_k` mapping to `F_{k-1}`
/// by vectors with leading terms `L(f_1)..L(f_r)`.
///
/// Every basis vector `e_i` is stored with its image all the way down the
/// chain: `shift[i]` is the monomial and `chain[i][0]` the bottom position of
/// the iterated leading term, and `chain[i][t]` the position reached at level
/// `t`. Comparing `x^a e_i` with `x^b e_j` first compares `x^a shift_i e_{c_i}`
/// with `x^b shift_j e_{c_j}` in the bottom order; ties are broken at the
/// lowest level where the positions differ, larger position winning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerFrame {
    rule: PositionRule,
    base: MonomialOrder,
    shifts: Vec<Monomial>,
    chains: Vec<Vec<usize>>,
}

impl SchreyerFrame {
    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn base(&self) -> MonomialOrder {
        self.base
    }

    pub fn shift(&self, i: usize) -> &Monomial {
        &self.shifts[i]
    }

    pub fn chain(&self, i: usize) -> &[usize] {
        &self.chains[i]
    }

    fn compare(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        let (ca, cb) = (&self.chains[a.pos], &self.chains[b.pos]);
        let bottom = compare_bottom(
            self.rule,
            self.base,
            (&a.mon, &self.shifts[a.pos], ca[0]),
            (&b.mon, &self.shifts[b.pos], cb[0]),
        );
        if bottom.is_ne() {
            return bottom;
        }
        for t in 1..ca.len() {
            if ca[t] != cb[t] {
                return ca[t].cmp(&cb[t]);
            }
        }
        a.pos.cmp(&b.pos)
    }
}

fn compare_bottom(
    rule: PositionRule,
    base: MonomialOrder,
    (a, s, i): (&Monomial, &Monomial, usize),
    (b, t, j): (&Monomial, &Monomial, usize),
) -> Ordering {
    match rule {
        PositionRule::TermOverPosition => base
            .compare_products(a, s, b, t)
            .then_with(|| j.cmp(&i)),
        PositionRule::PositionOverTerm => j
            .cmp(&i)
            .then_with(|| base.compare_products(a, s, b, t)),
    }
}

/// A module order. All variants restrict to the same monomial order on each
/// component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    TermOverPosition(MonomialOrder),
    PositionOverTerm(MonomialOrder),
    Schreyer(Arc<SchreyerFrame>),
}

impl ModuleOrder {
    pub fn base(&self) -> MonomialOrder {
        match self {
            Self::TermOverPosition(o) | Self::PositionOverTerm(o) => *o,
            Self::Schreyer(f) => f.base,
        }
    }

    pub fn compare(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        match self {
            Self::TermOverPosition(o) => o.compare(&a.mon, &b.mon).then_with(|| b.pos.cmp(&a.pos)),
            Self::PositionOverTerm(o) => b.pos.cmp(&a.pos).then_with(|| o.compare(&a.mon, &b.mon)),
            Self::Schreyer(frame) => frame.compare(a, b),
        }
    }

    /// [`compare`](Self::compare) with explicit ambient ranks.
    pub fn checked_compare(
        &self,
        a: (&ModuleMonomial, usize),
        b: (&ModuleMonomial, usize),
    ) -> Result<Ordering, ModuleError> {
        if a.1 != b.1 {
            return Err(ModuleError::RankMismatch(a.1, b.1));
        }
        for m in [a.0, b.0] {
            if m.pos >= a.1 {
                return Err(ModuleError::PositionOutOfRange {
                    position: m.pos,
                    rank: a.1,
                });
            }
        }
        Ok(self.compare(a.0, b.0))
    }

    /// The order induced on the free module whose basis maps to vectors with
    /// the given leading terms (taken under `self`).
    pub fn schreyer(&self, prev_leads: &[ModuleMonomial]) -> Result<ModuleOrder, ModuleError> {
        if prev_leads.is_empty() {
            return Err(ModuleError::EmptyBasis);
        }
        let frame = match self {
            Self::TermOverPosition(o) | Self::PositionOverTerm(o) => SchreyerFrame {
                rule: if matches!(self, Self::TermOverPosition(_)) {
                    PositionRule::TermOverPosition
                } else {
                    PositionRule::PositionOverTerm
                },
                base: *o,
                shifts: prev_leads.iter().map(|l| l.mon.clone()).collect(),
                chains: prev_leads.iter().map(|l| vec![l.pos]).collect(),
            },
            Self::Schreyer(prev) => SchreyerFrame {
                rule: prev.rule,
                base: prev.base,
                shifts: prev_leads
                    .iter()
                    .map(|l| l.mon.mul(&prev.shifts[l.pos]))
                    .collect(),
                chains: prev_leads
                    .iter()
                    .map(|l| {
                        let mut c = prev.chains[l.pos].clone();
                        c.push(l.pos);
                        c
                    })
                    .collect(),
            },
        };
        Ok(ModuleOrder::Schreyer(Arc::new(frame)))
    }
}

/// A vector in `S^rank`: terms sorted strictly decreasing under a module
/// order, with nonzero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleElement<F: Field> {
    terms: Vec<(F::Elem, ModuleMonomial)>,
    rank: usize,
}

impl<F: Field> ModuleElement<F> {
    pub fn zero(rank: usize) -> Self {
        Self {
            terms: Vec::new(),
            rank,
        }
    }

    pub(crate) fn from_sorted_terms(terms: Vec<(F::Elem, ModuleMonomial)>, rank: usize) -> Self {
        debug_assert!(terms.iter().all(|(_, m)| m.pos < rank));
        Self { terms, rank }
    }

    /// Sorts and merges arbitrary terms under `order`.
    pub fn from_terms(
        field: &F,
        order: &ModuleOrder,
        rank: usize,
        terms: impl IntoIterator<Item = (F::Elem, ModuleMonomial)>,
    ) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut out: Vec<(F::Elem, ModuleMonomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(&last.0, &c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !field.is_zero(c));
        Self::from_sorted_terms(out, rank)
    }

    /// The vector with the given polynomial components.
    pub fn from_components(order: &ModuleOrder, comps: &[Polynomial<F>]) -> Self {
        let mut terms: Vec<_> = comps
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                p.terms()
                    .iter()
                    .map(move |t| (t.coeff.clone(), ModuleMonomial::new(t.mon.clone(), pos)))
            })
            .collect();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        Self::from_sorted_terms(terms, comps.len())
    }

    pub fn components(&self, ring: &Ring<F>) -> Vec<Polynomial<F>> {
        let mut parts: Vec<Vec<(F::Elem, Monomial)>> = vec![Vec::new(); self.rank];
        for (c, m) in &self.terms {
            parts[m.pos].push((c.clone(), m.mon.clone()));
        }
        parts.into_iter().map(|t| ring.from_terms(t)).collect()
    }

    pub fn component(&self, ring: &Ring<F>, pos: usize) -> Polynomial<F> {
        ring.from_terms(
            self.terms
                .iter()
                .filter(|(_, m)| m.pos == pos)
                .map(|(c, m)| (c.clone(), m.mon.clone())),
        )
    }

    pub fn terms(&self) -> &[(F::Elem, ModuleMonomial)] {
        &self.terms
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn leading_term(&self) -> Option<&(F::Elem, ModuleMonomial)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&ModuleMonomial> {
        self.terms.first().map(|t| &t.1)
    }

    /// Re-sorts under a different module order.
    pub fn reorder(&self, order: &ModuleOrder) -> Self {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        Self::from_sorted_terms(terms, self.rank)
    }

    /// Degree of the vector when every basis vector `e_i` has degree
    /// `twists[i]` and all terms agree.
    pub fn homogeneous_degree(&self, twists: &[i32]) -> Option<i32> {
        let deg = |(_, m): &(F::Elem, ModuleMonomial)| m.mon.degree() as i32 + twists[m.pos];
        let d = deg(self.terms.first()?);
        self.terms.iter().all(|t| deg(t) == d).then_some(d)
    }

    pub fn format(&self, ring: &Ring<F>) -> String {
        format_terms(
            ring.field(),
            self.terms.iter().map(|(c, m)| (c, m.format(ring.vars()))),
        )
    }
}

/// Arithmetic on module elements under a fixed order.
#[derive(Clone, Debug)]
pub struct FreeModule<F: Field> {
    pub field: F,
    pub order: ModuleOrder,
    pub rank: usize,
}

impl<F: Field> FreeModule<F> {
    pub fn new(field: F, order: ModuleOrder, rank: usize) -> Self {
        Self { field, order, rank }
    }

    pub fn zero(&self) -> ModuleElement<F> {
        ModuleElement::zero(self.rank)
    }

    /// The basis vector `e_i`.
    pub fn basis(&self, nvars: usize, i: usize) -> ModuleElement<F> {
        ModuleElement::from_sorted_terms(
            vec![(self.field.one(), ModuleMonomial::new(Monomial::one(nvars), i))],
            self.rank,
        )
    }

    fn check(&self, a: &ModuleElement<F>) -> Result<(), ModuleError> {
        if a.rank != self.rank {
            return Err(ModuleError::RankMismatch(a.rank, self.rank));
        }
        Ok(())
    }

    /// `a + c·x^m·b`.
    pub fn add_scaled(
        &self,
        a: &ModuleElement<F>,
        c: &F::Elem,
        m: &Monomial,
        b: &ModuleElement<F>,
    ) -> Result<ModuleElement<F>, ModuleError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_scaled_unchecked(a, c, m, b))
    }

    pub(crate) fn add_scaled_unchecked(
        &self,
        a: &ModuleElement<F>,
        c: &F::Elem,
        m: &Monomial,
        b: &ModuleElement<F>,
    ) -> ModuleElement<F> {
        let f = &self.field;
        if f.is_zero(c) {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<(F::Elem, ModuleMonomial)> = None;
        while i < a.terms.len() || j < b.terms.len() || pending.is_some() {
            if pending.is_none() && j < b.terms.len() {
                let (bc, bm) = &b.terms[j];
                pending = Some((f.mul(c, bc), bm.mul(m)));
                j += 1;
            }
            match (&pending, a.terms.get(i)) {
                (Some((pc, pm)), Some((ac, am))) => match self.order.compare(am, pm) {
                    Ordering::Greater => {
                        out.push((ac.clone(), am.clone()));
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(pending.take().unwrap());
                    }
                    Ordering::Equal => {
                        let s = f.add(ac, pc);
                        if !f.is_zero(&s) {
                            out.push((s, am.clone()));
                        }
                        pending = None;
                        i += 1;
                    }
                },
                (Some(_), None) => out.push(pending.take().unwrap()),
                (None, Some((ac, am))) => {
                    out.push((ac.clone(), am.clone()));
                    i += 1;
                }
                (None, None) => break,
            }
        }
        ModuleElement::from_sorted_terms(out, self.rank)
    }

    pub fn add(
        &self,
        a: &ModuleElement<F>,
        b: &ModuleElement<F>,
    ) -> Result<ModuleElement<F>, ModuleError> {
        self.check(a)?;
        self.check(b)?;
        let Some(first) = a.terms.first().or(b.terms.first()) else {
            return Ok(self.zero());
        };
        let one = Monomial::one(first.1.mon.nvars());
        Ok(self.add_scaled_unchecked(a, &self.field.one(), &one, b))
    }

    pub fn sub(
        &self,
        a: &ModuleElement<F>,
        b: &ModuleElement<F>,
    ) -> Result<ModuleElement<F>, ModuleError> {
        self.check(a)?;
        self.check(b)?;
        let Some(first) = a.terms.first().or(b.terms.first()) else {
            return Ok(self.zero());
        };
        let one = Monomial::one(first.1.mon.nvars());
        Ok(self.add_scaled_unchecked(a, &self.field.neg(&self.field.one()), &one, b))
    }

    pub fn scale_term(&self, a: &ModuleElement<F>, c: &F::Elem, m: &Monomial) -> ModuleElement<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        ModuleElement::from_sorted_terms(
            a.terms
                .iter()
                .map(|(ac, am)| (self.field.mul(c, ac), am.mul(m)))
                .collect(),
            self.rank,
        )
    }

    /// `p·a` for a polynomial `p`.
    pub fn scale_poly(&self, a: &ModuleElement<F>, p: &Polynomial<F>) -> ModuleElement<F> {
        let mut acc = self.zero();
        for Term { coeff, mon } in p.terms() {
            acc = self.add_scaled_unchecked(&acc, coeff, mon, a);
        }
        acc
    }

    /// `sum_k p_k·v_k`.
    pub fn combine(&self, coeffs: &[Polynomial<F>], vectors: &[ModuleElement<F>]) -> ModuleElement<F> {
        let mut acc = self.zero();
        for (p, v) in coeffs.iter().zip(vectors) {
            for Term { coeff, mon } in p.terms() {
                acc = self.add_scaled_unchecked(&acc, coeff, mon, v);
            }
        }
        acc
    }

    pub fn make_monic(&self, a: &ModuleElement<F>) -> ModuleElement<F> {
        match a.leading_term() {
            None => a.clone(),
            Some((c, m)) => {
                let inv = self.field.inv(c).expect("leading coefficient is nonzero");
                self.scale_term(a, &inv, &Monomial::one(m.mon.nvars()))
            }
        }
    }
}

/// A graded free module `⊕ S(-d_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedFreeModule {
    twists: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        Self { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    /// The twist multiset as sorted `(degree, multiplicity)` pairs.
    pub fn summands(&self) -> Vec<(i32, usize)> {
        let mut sorted = self.twists.clone();
        sorted.sort_unstable();
        let mut out: Vec<(i32, usize)> = Vec::new();
        for d in sorted {
            match out.last_mut() {
                Some((e, k)) if *e == d => *k += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}

impl fmt::Display for GradedFreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twists.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .summands()
            .into_iter()
            .map(|(d, k)| {
                let base = if d == 0 {
                    "S".to_string()
                } else {
                    format!("S({})", -d)
                };
                if k == 1 {
                    base
                } else {
                    format!("{base}^{k}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Rationals;
    use proptest::prelude::*;

    fn mm(e: &[u16], pos: usize) -> ModuleMonomial {
        ModuleMonomial::new(Monomial::from_exponents(e), pos)
    }

    #[test]
    fn induced_order_compares_images() {
        // leads x e1, y e1 with x > y: e1 > e2
        let top = ModuleOrder::TermOverPosition(MonomialOrder::Lex);
        let ind = top.schreyer(&[mm(&[1, 0], 0), mm(&[0, 1], 0)]).unwrap();
        assert_eq!(ind.compare(&mm(&[0, 0], 0), &mm(&[0, 0], 1)), Ordering::Greater);
        // equal images: larger position wins
        let ind = top.schreyer(&[mm(&[1, 0], 0), mm(&[1, 0], 0)]).unwrap();
        assert_eq!(ind.compare(&mm(&[0, 0], 1), &mm(&[0, 0], 0)), Ordering::Greater);
        assert_eq!(top.schreyer(&[]), Err(ModuleError::EmptyBasis));
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let top = ModuleOrder::TermOverPosition(MonomialOrder::Lex);
        let a = mm(&[1], 0);
        assert_eq!(
            top.checked_compare((&a, 2), (&a, 3)),
            Err(ModuleError::RankMismatch(2, 3))
        );
        assert_eq!(top.checked_compare((&a, 2), (&a, 2)), Ok(Ordering::Equal));
    }

    #[test]
    fn term_over_position_prefers_lower_position() {
        let top = ModuleOrder::TermOverPosition(MonomialOrder::DegRevLex);
        assert!(top.compare(&mm(&[1, 0], 0), &mm(&[1, 0], 1)).is_gt());
        assert!(top.compare(&mm(&[1, 0], 1), &mm(&[0, 1], 0)).is_gt());
        let pot = ModuleOrder::PositionOverTerm(MonomialOrder::DegRevLex);
        assert!(pot.compare(&mm(&[0, 1], 0), &mm(&[2, 0], 1)).is_gt());
    }

    #[test]
    fn vector_arithmetic() {
        let ring = Ring::new(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let order = ModuleOrder::TermOverPosition(MonomialOrder::DegRevLex);
        let fm = FreeModule::new(Rationals, order.clone(), 2);
        let p = ring.parse_polynomial("x + y").unwrap();
        let q = ring.parse_polynomial("x - y").unwrap();
        let v = ModuleElement::from_components(&order, &[p.clone(), q.clone()]);
        let w = fm.scale_poly(&v, &q);
        let comps = w.components(&ring);
        assert_eq!(comps[0], ring.mul(&p, &q));
        assert_eq!(comps[1], ring.mul(&q, &q));
        assert!(fm.sub(&v, &v).unwrap().is_zero());
        assert_eq!(v.format(&ring), "x*e1 + x*e2 + y*e1 - y*e2");
        assert_eq!(v.homogeneous_degree(&[0, 0]), Some(1));
        assert_eq!(v.homogeneous_degree(&[0, 1]), None);
    }

    #[test]
    fn graded_module_display() {
        let m = GradedFreeModule::new(vec![5, 4, 4, 0]);
        assert_eq!(m.to_string(), "S + S(-4)^2 + S(-5)");
    }

    fn module_monomial(rank: usize) -> impl Strategy<Value = ModuleMonomial> {
        (proptest::collection::vec(0u16..3, 3), 0..rank)
            .prop_map(|(e, p)| ModuleMonomial::new(Monomial::from_exponents(&e), p))
    }

    fn lead_list() -> impl Strategy<Value = Vec<ModuleMonomial>> {
        proptest::collection::vec(module_monomial(2), 1..5)
    }

    proptest! {
        #[test]
        fn induced_orders_are_module_orders(
            leads in lead_list(),
            leads2 in proptest::collection::vec((proptest::collection::vec(0u16..3, 3), 0usize..16), 1..5),
            a in proptest::collection::vec(0u16..3, 3),
            b in proptest::collection::vec(0u16..3, 3),
            c in proptest::collection::vec(0u16..3, 3),
            i in 0usize..16, j in 0usize..16, k in 0usize..16,
        ) {
            let top = ModuleOrder::TermOverPosition(MonomialOrder::DegRevLex);
            let first = top.schreyer(&leads).unwrap();
            // a second level on top of the first
            let second_leads: Vec<_> = leads2
                .iter()
                .map(|(e, p)| ModuleMonomial::new(Monomial::from_exponents(e), p % leads.len()))
                .collect();
            let second = first.schreyer(&second_leads).unwrap();
            for (order, rank) in [(&first, leads.len()), (&second, second_leads.len())] {
                let x = ModuleMonomial::new(Monomial::from_exponents(&a), i % rank);
                let y = ModuleMonomial::new(Monomial::from_exponents(&b), j % rank);
                let z = ModuleMonomial::new(Monomial::from_exponents(&c), k % rank);
                let m = Monomial::from_exponents(&c);
                prop_assert_eq!(order.compare(&x, &y), order.compare(&x.mul(&m), &y.mul(&m)));
                prop_assert_eq!(order.compare(&x, &y), order.compare(&y, &x).reverse());
                prop_assert_eq!(order.compare(&x, &y).is_eq(), x == y);
                if !m.is_one() {
                    prop_assert!(order.compare(&x.mul(&m), &x).is_gt());
                }
                if order.compare(&x, &y).is_gt() && order.compare(&y, &z).is_gt() {
                    prop_assert!(order.compare(&x, &z).is_gt());
                }
            }
        }

        #[test]
        fn induced_order_refines_image_order(
            leads in lead_list(),
            a in proptest::collection::vec(0u16..3, 3),
            b in proptest::collection::vec(0u16..3, 3),
            i in 0usize..8, j in 0usize..8,
        ) {
            let top = ModuleOrder::TermOverPosition(MonomialOrder::DegLex);
            let ind = top.schreyer(&leads).unwrap();
            let (i, j) = (i % leads.len(), j % leads.len());
            let x = ModuleMonomial::new(Monomial::from_exponents(&a), i);
            let y = ModuleMonomial::new(Monomial::from_exponents(&b), j);
            let (ix, iy) = (leads[i].mul(&x.mon), leads[j].mul(&y.mon));
            match top.compare(&ix, &iy) {
                Ordering::Equal => prop_assert_eq!(ind.compare(&x, &y), i.cmp(&j)),
                o => prop_assert_eq!(ind.compare(&x, &y), o),
            }
        }
    }
}
