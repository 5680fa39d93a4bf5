mod common;

use baermult::arith::binomial;
use baermult::hall::Word;
use baermult::{BigEngine, Engine};
use common::magnus;
use num_bigint::BigInt;
use proptest::prelude::*;

fn word_strategy(alphabet: u32, max_len: usize) -> impl Strategy<Value = Vec<(u32, i64)>> {
    prop::collection::vec((1..=alphabet, prop_oneof![Just(1i64), Just(-1i64)]), 0..=max_len)
}

fn element_strategy(len: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..len, -3i64..=3), 0..5)
}

fn evaluate_word(engine: &Engine, word: &[(u32, i64)]) -> baermult::Element {
    word.iter().fold(engine.identity(), |acc, &(g, s)| {
        let x = engine.power(&engine.generator(g).unwrap(), s).unwrap();
        engine.multiply(&acc, &x).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associativity(a in element_strategy(14), b in element_strategy(14), c in element_strategy(14)) {
        let e = Engine::new(3, 3).unwrap();
        let (a, b, c) = (e.element(a), e.element(b), e.element(c));
        let left = e.multiply(&e.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = e.multiply(&a, &e.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_law(a in element_strategy(8)) {
        let e = Engine::new(2, 4).unwrap();
        let a = e.element(a);
        prop_assert!(e.multiply(&a, &e.inverse(&a).unwrap()).unwrap().is_identity());
        prop_assert!(e.multiply(&e.inverse(&a).unwrap(), &a).unwrap().is_identity());
    }

    #[test]
    fn commutator_antisymmetry(a in element_strategy(8), b in element_strategy(8)) {
        let e = Engine::new(2, 4).unwrap();
        let (a, b) = (e.element(a), e.element(b));
        let ab = e.commutator(&a, &b).unwrap();
        let ba_inv = e.inverse(&e.commutator(&b, &a).unwrap()).unwrap();
        prop_assert_eq!(ab, ba_inv);
    }

    #[test]
    fn truncation_coherence(words in prop::collection::vec(word_strategy(2, 6), 2)) {
        for cap in 2..=5u32 {
            let hi = Engine::new(2, cap).unwrap();
            let lo = Engine::new(2, cap - 1).unwrap();
            let hi_val = hi.multiply(&evaluate_word(&hi, &words[0]), &evaluate_word(&hi, &words[1])).unwrap();
            let lo_val = lo.multiply(&evaluate_word(&lo, &words[0]), &evaluate_word(&lo, &words[1])).unwrap();
            prop_assert_eq!(lo.project(&hi_val).unwrap(), lo_val);
        }
    }

    #[test]
    fn agrees_with_magnus_oracle(word in word_strategy(3, 8)) {
        let e = Engine::new(3, 3).unwrap();
        let nf = evaluate_word(&e, &word);
        prop_assert_eq!(magnus::of_element(&nf), magnus::of_word(3, &word));
    }

    #[test]
    fn big_and_small_exponents_agree(word in word_strategy(2, 8)) {
        let small = Engine::new(2, 4).unwrap();
        let big = BigEngine::new(2, 4).unwrap();
        let s = evaluate_word(&small, &word);
        let b = word.iter().fold(big.identity(), |acc, &(g, k)| {
            big.multiply(&acc, &big.power(&big.generator(g).unwrap(), k).unwrap()).unwrap()
        });
        let b: Vec<(usize, i64)> = b.exponents().iter().map(|(&k, v)| (k, i64::try_from(v.clone()).unwrap())).collect();
        prop_assert_eq!(s.exponents().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(), b);
    }
}

#[test]
fn power_of_generator_against_oracle() {
    // [x1^r, x2] = [x2,x1]^-r [[x2,x1],x1]^-C(r,2) in class 3
    let e = Engine::new(2, 3).unwrap();
    let c21 = e.basis().position(&"[x2,x1]".parse().unwrap()).unwrap();
    let c211 = e.basis().position(&"[[x2,x1],x1]".parse().unwrap()).unwrap();
    let c212 = e.basis().position(&"[[x2,x1],x2]".parse().unwrap()).unwrap();
    for r in 2..=6i64 {
        let xr = e.power(&e.generator(1).unwrap(), r).unwrap();
        let c = e.commutator(&xr, &e.generator(2).unwrap()).unwrap();
        assert_eq!(c.exponent(c21), -r);
        assert_eq!(c.exponent(c211), -binomial(r, 2));
        assert_eq!(c.exponent(c212), 0);
        let oracle = magnus::Series::generator(3, 1).pow(r).commutator(&magnus::Series::generator(3, 2));
        assert_eq!(magnus::of_element(&c), oracle, "r = {r}");
    }
}

#[test]
fn outer_commutator_words_against_oracle() {
    let e = Engine::new(2, 4).unwrap();
    let w = Word::left_normed([Word::gen(1).pow(3), Word::gen(2), Word::comm(Word::gen(2), Word::gen(1))]).unwrap();
    let v = e.evaluate(&w).unwrap();
    let s = |i| magnus::Series::generator(4, i);
    let oracle = s(1).pow(3).commutator(&s(2)).commutator(&s(2).commutator(&s(1)));
    assert_eq!(magnus::of_element(&v), oracle);
}

#[test]
fn table_entries_match_oracle() {
    let e = Engine::new(3, 4).unwrap();
    let basis = e.basis();
    let mut checked = 0;
    for j in 0..basis.len() {
        for i in 0..j {
            if let Some(entry) = e.table().commutator(j, i) {
                let element = e.element(entry.iter().map(|(&k, &x)| (k, x)));
                let oracle = magnus::of_commutator(4, basis.get(j)).commutator(&magnus::of_commutator(4, basis.get(i)));
                assert_eq!(magnus::of_element(&element), oracle, "[{}, {}]", basis.get(j), basis.get(i));
                checked += 1;
            }
        }
    }
    // pairs with weight sum <= 4 on 3 letters: 1+1, 1+2, 1+3, 2+2
    assert_eq!(checked, 3 + 3 * 3 + 3 * 8 + 3);
}

#[test]
fn big_exponents_do_not_overflow() {
    let e = BigEngine::new(2, 3).unwrap();
    let x = e.multiply(&e.generator(1).unwrap(), &e.generator(2).unwrap()).unwrap();
    let p = e.power(&x, 1 << 40).unwrap();
    let k = e.basis().position(&"[[x2,x1],x1]".parse().unwrap()).unwrap();
    // (x1 x2)^N has weight-3 exponents of size about N^3 / 6, beyond i64
    assert!(p.exponent(k).magnitude() > BigInt::from(i64::MAX).magnitude());
}
