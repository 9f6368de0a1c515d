//! Groebner bases through colon ideals of leading terms.
//!
//! For a sequence `f_1..f_r` let `M_i = <L(f_j) : j < i, same position> : L(f_i)`.
//! The sequence is a Groebner basis exactly when every `x^a f_i`, with `x^a`
//! a minimal generator of `M_i`, divides to remainder zero. Completion
//! appends nonzero remainders and keeps testing until none are left.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::coefficients::Field;
use crate::division::{DivisionError, Divisors};
use crate::polyring::{
    FreeModule, ModuleElement, ModuleMonomial, ModuleOrder, Monomial, Polynomial, Ring,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("cannot take the quotient by the zero polynomial")]
    ZeroDivisorInput,
    #[error("saturation did not stabilize within {0} iterations")]
    NonTermination(usize),
    #[error(transparent)]
    Division(#[from] DivisionError),
}

/// A monomial ideal kept as its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`; redundant generators are dropped and
    /// the rest sorted by degree, then lexicographically.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| b.exponents().cmp(a.exponents()))
        });
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        Self { nvars, gens }
    }

    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self : m`.
    pub fn quotient(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.gens.iter().map(|g| g.lcm(m).checked_div(m).expect("lcm divisible")),
        )
    }

    /// `self + <m>`.
    pub fn with(&self, m: Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().cloned().chain([m]))
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }
}

/// Minimal generators of `M_i` for the sequence of leading monomials.
pub fn colon_generators(leads: &[ModuleMonomial], i: usize) -> Vec<Monomial> {
    let li = &leads[i];
    MonomialIdeal::new(
        li.mon.nvars(),
        leads[..i]
            .iter()
            .filter(|l| l.pos == li.pos)
            .map(|l| l.mon.lcm(&li.mon).checked_div(&li.mon).expect("lcm divisible")),
    )
    .gens
}

/// All degree-`d` monomials outside `ideal`, in decreasing lex order.
pub fn standard_monomials(ideal: &MonomialIdeal, d: u32) -> Vec<Monomial> {
    Monomial::all_of_degree(ideal.nvars, d)
        .into_iter()
        .filter(|m| !ideal.contains(m))
        .collect()
}

/// A sequence of vectors together with the order they are taken under.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    elements: Vec<ModuleElement<F>>,
    order: ModuleOrder,
    rank: usize,
    verified: bool,
}

/// Outcome of running the criterion on a sequence.
#[derive(Clone, Debug)]
pub struct CriterionReport<F: Field> {
    pub is_groebner: bool,
    /// Number of divisions performed (one per minimal generator of each M_i).
    pub tests: usize,
    /// `(i, x^a, remainder)` for every test with nonzero remainder.
    pub nonzero: Vec<(usize, Monomial, ModuleElement<F>)>,
    /// Minimal generators of M_1, M_2, ...
    pub colon_table: Vec<Vec<Monomial>>,
}

/// Counters from a completion run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CompletionStats {
    pub tests: usize,
    pub appended: usize,
}

impl<F: Field> GroebnerBasis<F> {
    /// Wraps a sequence without checking anything.
    pub fn unverified(elements: Vec<ModuleElement<F>>, order: ModuleOrder, rank: usize) -> Self {
        Self {
            elements,
            order,
            rank,
            verified: false,
        }
    }

    /// Wraps a sequence that is known to be a Groebner basis.
    pub(crate) fn trusted(elements: Vec<ModuleElement<F>>, order: ModuleOrder, rank: usize) -> Self {
        Self {
            elements,
            order,
            rank,
            verified: true,
        }
    }

    pub fn elements(&self) -> &[ModuleElement<F>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<ModuleElement<F>> {
        self.elements
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn leading_monomials(&self) -> Vec<ModuleMonomial> {
        self.elements
            .iter()
            .map(|e| e.leading_monomial().expect("nonzero element").clone())
            .collect()
    }

    /// The leading module as one monomial ideal per position.
    pub fn leading_ideals(&self, nvars: usize) -> Vec<MonomialIdeal> {
        (0..self.rank)
            .map(|p| {
                MonomialIdeal::new(
                    nvars,
                    self.leading_monomials()
                        .into_iter()
                        .filter(|l| l.pos == p)
                        .map(|l| l.mon),
                )
            })
            .collect()
    }

    /// Minimal generators of every `M_i` for the current sequence.
    pub fn colon_table(&self) -> Vec<Vec<Monomial>> {
        let leads = self.leading_monomials();
        (0..leads.len()).map(|i| colon_generators(&leads, i)).collect()
    }

    /// Elements of a rank-one basis as polynomials.
    pub fn polynomials(&self, ring: &Ring<F>) -> Vec<Polynomial<F>> {
        self.elements.iter().map(|e| e.component(ring, 0)).collect()
    }

    /// Drops elements whose leading monomial is divisible by that of another
    /// element and makes the rest monic.
    pub fn minimalize(&self, field: &F) -> Self {
        let leads = self.leading_monomials();
        let fm = FreeModule::new(field.clone(), self.order.clone(), self.rank);
        let keep: Vec<ModuleElement<F>> = (0..leads.len())
            .filter(|&i| {
                !leads.iter().enumerate().any(|(j, l)| {
                    j != i && l.divides(&leads[i]) && (l != &leads[i] || j < i)
                })
            })
            .map(|i| fm.make_monic(&self.elements[i]))
            .collect();
        Self {
            elements: keep,
            order: self.order.clone(),
            rank: self.rank,
            verified: self.verified,
        }
    }

    /// The reduced basis: minimal, monic, and no term of any element is
    /// divisible by the leading monomial of another.
    pub fn reduced(&self, ring: &Ring<F>) -> Self {
        let min = self.minimalize(ring.field());
        let mut out = Vec::with_capacity(min.len());
        for (i, e) in min.elements.iter().enumerate() {
            let others: Vec<&ModuleElement<F>> = min
                .elements
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, o)| o)
                .collect();
            let (c, lead) = e.leading_term().expect("nonzero").clone();
            let tail = ModuleElement::from_sorted_terms(e.terms()[1..].to_vec(), e.rank());
            let tail_nf = if others.is_empty() {
                tail
            } else {
                let d = Divisors::new(ring.field(), others).expect("nonzero elements");
                d.divide(ring.field(), &self.order, &tail, false).1
            };
            let mut terms = vec![(c, lead)];
            terms.extend(tail_nf.terms().iter().cloned());
            out.push(ModuleElement::from_sorted_terms(terms, e.rank()));
        }
        let mut basis = Self {
            elements: out,
            order: self.order.clone(),
            rank: self.rank,
            verified: self.verified,
        };
        basis.sort_by_leads();
        basis
    }

    /// Sorts the elements by decreasing leading monomial.
    pub fn sort_by_leads(&mut self) {
        let order = self.order.clone();
        self.elements.sort_by(|a, b| {
            order.compare(
                b.leading_monomial().expect("nonzero"),
                a.leading_monomial().expect("nonzero"),
            )
        });
    }

    /// The remainder of `g` modulo a verified basis.
    pub fn normal_form(&self, field: &F, g: &ModuleElement<F>) -> Result<ModuleElement<F>, DivisionError> {
        if !self.verified {
            return Err(DivisionError::Unverified);
        }
        if g.rank() != self.rank {
            return Err(DivisionError::RankMismatch(g.rank(), self.rank));
        }
        if self.elements.is_empty() {
            return Ok(g.clone());
        }
        let d = Divisors::new(field, self.elements.iter().collect())?;
        Ok(d.divide(field, &self.order, g, false).1)
    }

    /// Whether `g` lies in the submodule generated by a verified basis.
    pub fn contains(&self, field: &F, g: &ModuleElement<F>) -> Result<bool, DivisionError> {
        Ok(self.normal_form(field, g)?.is_zero())
    }
}

fn lift<F: Field>(order: &ModuleOrder, p: &Polynomial<F>) -> ModuleElement<F> {
    ModuleElement::from_components(order, std::slice::from_ref(p))
}

impl<F: Field> GroebnerBasis<F> {
    /// Normal form of a polynomial modulo a rank-one basis.
    pub fn normal_form_poly(
        &self,
        ring: &Ring<F>,
        g: &Polynomial<F>,
    ) -> Result<Polynomial<F>, DivisionError> {
        Ok(self
            .normal_form(ring.field(), &lift(&self.order, g))?
            .component(ring, 0))
    }

    pub fn contains_poly(&self, ring: &Ring<F>, g: &Polynomial<F>) -> Result<bool, DivisionError> {
        Ok(self.normal_form_poly(ring, g)?.is_zero())
    }
}

/// Runs the criterion on `gens` in their given sequence.
pub fn is_groebner<F: Field>(
    field: &F,
    order: &ModuleOrder,
    gens: &[ModuleElement<F>],
) -> Result<CriterionReport<F>, DivisionError> {
    let d = Divisors::new(field, gens.iter().collect())?;
    let leads: Vec<ModuleMonomial> = gens
        .iter()
        .map(|g| g.leading_monomial().expect("checked nonzero").clone())
        .collect();
    let fm = FreeModule::new(field.clone(), order.clone(), gens.first().map_or(0, |g| g.rank()));
    let mut report = CriterionReport {
        is_groebner: true,
        tests: 0,
        nonzero: Vec::new(),
        colon_table: Vec::new(),
    };
    for (i, g) in gens.iter().enumerate() {
        let colon = colon_generators(&leads, i);
        for a in &colon {
            report.tests += 1;
            let shifted = fm.scale_term(g, &field.one(), a);
            let (_, h) = d.divide(field, order, &shifted, false);
            if !h.is_zero() {
                report.is_groebner = false;
                report.nonzero.push((i, a.clone(), h));
            }
        }
        report.colon_table.push(colon);
    }
    Ok(report)
}

/// Polynomial convenience wrapper for [`is_groebner`] under the ring order.
pub fn is_groebner_poly<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F>],
) -> Result<CriterionReport<F>, DivisionError> {
    let order = ModuleOrder::TermOverPosition(ring.order());
    let lifted: Vec<_> = gens.iter().map(|g| lift(&order, g)).collect();
    is_groebner(ring.field(), &order, &lifted)
}

/// Completes `gens` to a Groebner basis under `order`.
///
/// Tests `(i, x^a)` are processed in increasing degree, where basis vector
/// `e_k` has degree `twists[k]`. A nonzero remainder is made monic and
/// appended; it contributes its own tests. Appending never changes an
/// earlier `M_i`, and once `h` is appended the test that produced it divides
/// to zero, so a single pass over the growing sequence suffices.
pub fn buchberger_complete<F: Field>(
    field: &F,
    order: &ModuleOrder,
    gens: &[ModuleElement<F>],
    twists: &[i32],
) -> (GroebnerBasis<F>, CompletionStats) {
    let rank = gens.first().map_or(twists.len(), |g| g.rank());
    let fm = FreeModule::new(field.clone(), order.clone(), rank);
    let mut elements: Vec<ModuleElement<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| fm.make_monic(g))
        .collect();
    let mut stats = CompletionStats::default();
    let degree_of = |m: &ModuleMonomial| -> i64 {
        m.mon.degree() as i64 + twists.get(m.pos).copied().unwrap_or(0) as i64
    };

    let mut leads: Vec<ModuleMonomial> = elements
        .iter()
        .map(|e| e.leading_monomial().expect("nonzero").clone())
        .collect();
    let mut queue: BinaryHeap<Reverse<(i64, usize, usize)>> = BinaryHeap::new();
    let mut pending: Vec<Monomial> = Vec::new();
    let enqueue = |i: usize,
                       leads: &[ModuleMonomial],
                       queue: &mut BinaryHeap<Reverse<(i64, usize, usize)>>,
                       pending: &mut Vec<Monomial>| {
        for a in colon_generators(leads, i) {
            let deg = degree_of(&leads[i].mul(&a));
            queue.push(Reverse((deg, i, pending.len())));
            pending.push(a);
        }
    };
    for i in 0..elements.len() {
        enqueue(i, &leads, &mut queue, &mut pending);
    }

    while let Some(Reverse((_, i, slot))) = queue.pop() {
        stats.tests += 1;
        let shifted = fm.scale_term(&elements[i], &field.one(), &pending[slot]);
        let h = {
            let d = Divisors::new(field, elements.iter().collect()).expect("nonzero elements");
            d.divide(field, order, &shifted, false).1
        };
        if !h.is_zero() {
            let h = fm.make_monic(&h);
            leads.push(h.leading_monomial().expect("nonzero").clone());
            elements.push(h);
            stats.appended += 1;
            let new = elements.len() - 1;
            enqueue(new, &leads, &mut queue, &mut pending);
        }
    }
    (GroebnerBasis::trusted(elements, order.clone(), rank), stats)
}

/// Groebner basis of a polynomial ideal under the ring order, minimalized.
pub fn groebner_basis<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> GroebnerBasis<F> {
    let order = ModuleOrder::TermOverPosition(ring.order());
    let lifted: Vec<_> = gens.iter().map(|g| lift(&order, g)).collect();
    let (gb, _) = buchberger_complete(ring.field(), &order, &lifted, &[0]);
    let mut gb = gb.minimalize(ring.field());
    if gb.rank == 0 {
        gb.rank = 1;
    }
    gb.reduced(ring)
}

fn homogeneous_twist<F: Field>(p: &Polynomial<F>) -> i32 {
    p.homogeneous_degree().unwrap_or(0) as i32
}

/// Generators of `I : f` where `I` is generated by `ideal`.
pub fn ideal_quotient<F: Field>(
    ring: &Ring<F>,
    ideal: &[Polynomial<F>],
    f: &Polynomial<F>,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::ZeroDivisorInput);
    }
    // In S^2 under position-over-term, elements of the submodule generated
    // by (f, 1) and (g, 0) with first component zero are (0, h) with h f in I.
    let order = ModuleOrder::PositionOverTerm(ring.order());
    let mut gens = vec![ModuleElement::from_components(&order, &[f.clone(), ring.one()])];
    gens.extend(
        ideal
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| ModuleElement::from_components(&order, &[g.clone(), ring.zero()])),
    );
    let twists = [0, homogeneous_twist(f)];
    let (gb, _) = buchberger_complete(ring.field(), &order, &gens, &twists);
    let quotient: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|e| e.leading_monomial().is_some_and(|m| m.pos == 1))
        .map(|e| e.component(ring, 1))
        .collect();
    Ok(groebner_basis(ring, &quotient))
}

/// Generators of `I ∩ J`.
pub fn intersect<F: Field>(
    ring: &Ring<F>,
    i_gens: &[Polynomial<F>],
    j_gens: &[Polynomial<F>],
) -> GroebnerBasis<F> {
    // (h, h) for h in J and (g, 0) for g in I: first component zero forces
    // h = -g, so the second components span I ∩ J.
    let order = ModuleOrder::PositionOverTerm(ring.order());
    let mut gens: Vec<_> = j_gens
        .iter()
        .filter(|h| !h.is_zero())
        .map(|h| ModuleElement::from_components(&order, &[h.clone(), h.clone()]))
        .collect();
    gens.extend(
        i_gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| ModuleElement::from_components(&order, &[g.clone(), ring.zero()])),
    );
    let (gb, _) = buchberger_complete(ring.field(), &order, &gens, &[0, 0]);
    let meet: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|e| e.leading_monomial().is_some_and(|m| m.pos == 1))
        .map(|e| e.component(ring, 1))
        .collect();
    groebner_basis(ring, &meet)
}

/// What to saturate against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Saturator {
    /// The ideal generated by all variables.
    Irrelevant,
    /// A single variable `x_i`.
    Variable(usize),
}

/// Default iteration bound for saturation: twice the largest generator
/// degree plus four.
pub fn default_saturation_cap<F: Field>(gens: &[Polynomial<F>]) -> usize {
    2 * gens.iter().filter_map(|g| g.total_degree()).max().unwrap_or(0) as usize + 4
}

/// Whether every element of `gens` lies in the ideal of the verified basis.
pub fn ideal_contains<F: Field>(
    ring: &Ring<F>,
    gb: &GroebnerBasis<F>,
    gens: &[Polynomial<F>],
) -> Result<bool, DivisionError> {
    for g in gens {
        if !gb.contains_poly(ring, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I : J^∞`, by repeated quotients until the ideal stops growing. Returns
/// the saturated basis and the number of quotient steps that enlarged it.
pub fn saturate<F: Field>(
    ring: &Ring<F>,
    ideal: &[Polynomial<F>],
    by: &Saturator,
    cap: usize,
) -> Result<(GroebnerBasis<F>, usize), GroebnerError> {
    let mut current = groebner_basis(ring, ideal);
    for step in 0..=cap {
        let gens = current.polynomials(ring);
        let next = match by {
            Saturator::Variable(i) => ideal_quotient(ring, &gens, &ring.var(*i))?,
            Saturator::Irrelevant => {
                let mut acc = ideal_quotient(ring, &gens, &ring.var(0))?;
                for i in 1..ring.nvars() {
                    let q = ideal_quotient(ring, &gens, &ring.var(i))?;
                    acc = intersect(ring, &acc.polynomials(ring), &q.polynomials(ring));
                }
                acc
            }
        };
        // I ⊆ I : J always holds, so equality means the reverse containment.
        if ideal_contains(ring, &current, &next.polynomials(ring))? {
            return Ok((current, step));
        }
        current = next;
    }
    Err(GroebnerError::NonTermination(cap))
}
