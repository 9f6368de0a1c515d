use std::collections::BTreeSet;

use proptest::prelude::*;
use schreyer_core::groebner::MonomialIdeal;
use schreyer_core::resolution::{resolve_ideal, BettiTable};
use schreyer_core::{Field, Monomial, MonomialOrder, PrimeField, Ring};

/// Smallest strongly stable ideal containing the given exponent vectors:
/// closed under replacing `x_j` by `x_i` for `i < j`.
fn borel_closure(n: usize, seeds: &[Vec<u16>]) -> MonomialIdeal {
    let mut set: BTreeSet<Vec<u16>> = seeds.iter().filter(|e| e.iter().any(|&v| v > 0)).cloned().collect();
    let mut frontier: Vec<Vec<u16>> = set.iter().cloned().collect();
    while let Some(e) = frontier.pop() {
        for j in 0..n {
            if e[j] == 0 {
                continue;
            }
            for i in 0..j {
                let mut f = e.clone();
                f[j] -= 1;
                f[i] += 1;
                if set.insert(f.clone()) {
                    frontier.push(f);
                }
            }
        }
    }
    MonomialIdeal::new(n, set.iter().map(|e| Monomial::from_exponents(e)))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Betti numbers of `S/I` from the combinatorial count: a minimal generator
/// `m` whose largest variable has (1-based) index `q` contributes
/// `C(q - 1, i)` summands `S(-deg m - i)` in homological degree `i + 1`.
fn eliahou_kervaire(ideal: &MonomialIdeal) -> BettiTable {
    let mut t = BettiTable::default();
    t.add(0, 0, 1);
    for m in ideal.gens() {
        let q = m.last_variable().expect("nonconstant") + 1;
        for i in 0..q {
            t.add(i + 1, m.degree() as i32 + i as i32, binomial(q - 1, i));
        }
    }
    t
}

fn check(n: usize, seeds: &[Vec<u16>]) -> Result<(), TestCaseError> {
    let ideal = borel_closure(n, seeds);
    prop_assume!(!ideal.is_zero() && !ideal.is_unit());
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let field = PrimeField::new(32003).unwrap();
    let ring = Ring::new(field, &refs, MonomialOrder::DegRevLex).unwrap();
    let gens: Vec<_> = ideal
        .gens()
        .iter()
        .map(|m| ring.monomial(field.one(), m.clone()))
        .collect();
    let raw = resolve_ideal(&ring, &gens, false).unwrap();
    prop_assert!(raw.is_minimal(), "raw resolution not minimal for {:?}", ideal.gens());
    prop_assert_eq!(raw.betti_table(), eliahou_kervaire(&ideal));
    Ok(())
}

#[test]
fn small_borel_ideals() {
    // (x0, x1)^2 and (x0^2, x0 x1, x0 x2, x1^2)
    check(2, &[vec![0, 2]]).unwrap();
    check(3, &[vec![1, 0, 1], vec![0, 2, 0]]).unwrap();
    let irrelevant = borel_closure(4, &[vec![0, 0, 0, 1]]);
    assert_eq!(irrelevant.gens().len(), 4);
    let koszul = eliahou_kervaire(&irrelevant);
    assert_eq!(koszul.row_string(0), "1 4 6 4 1");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn schreyer_matches_eliahou_kervaire(
        n in 2usize..5,
        seeds in proptest::collection::vec(proptest::collection::vec(0u16..3, 4), 1..3),
    ) {
        let seeds: Vec<Vec<u16>> = seeds.into_iter().map(|s| s[..n].to_vec()).collect();
        check(n, &seeds)?;
    }
}
