use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use supersym::divisor::{AmbientRing, BaseMorphism, Superdivisor};
use supersym::random::{self, Shape};
use supersym::representability::{classify, roundtrip_check};
use supersym::symmetric::{Permutation, TensorPowerContext};
use supersym::{Parity, SuperPolynomial, VariableContext};

fn ctx() -> VariableContext {
    "even x y; odd a b c".parse().unwrap()
}

fn homogeneous(rng: &mut ChaCha8Rng, ctx: &VariableContext) -> (SuperPolynomial, Parity) {
    let parity = if rng.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
    (random::polynomial(rng, ctx, parity, Shape::default()), parity)
}

fn mixed(rng: &mut ChaCha8Rng, ctx: &VariableContext) -> SuperPolynomial {
    random::polynomial(rng, ctx, Parity::Even, Shape::default())
        + random::polynomial(rng, ctx, Parity::Odd, Shape::default())
}

fn permutation(rng: &mut ChaCha8Rng, g: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=g).collect();
    for i in (1..g).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images(&images).unwrap()
}

fn divisor(rng: &mut ChaCha8Rng, ring: &AmbientRing, max_g: usize) -> Superdivisor {
    let g = rng.gen_range(0..=max_g);
    random::divisor(rng, ring, g, Shape::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn supercommutativity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = ctx();
        let (p, pp) = homogeneous(&mut rng, &c);
        let (q, qp) = homogeneous(&mut rng, &c);
        let swapped = &q * &p;
        let expected = if pp == Parity::Odd && qp == Parity::Odd { -swapped } else { swapped };
        prop_assert_eq!(&p * &q, expected);
    }

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = ctx();
        let (p, q, r) = (mixed(&mut rng, &c), mixed(&mut rng, &c), mixed(&mut rng, &c));
        prop_assert_eq!((&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &p * &q + &p * &r);
        prop_assert_eq!(&p * &SuperPolynomial::one(&c), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn substitution_is_a_morphism(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = ctx();
        let target: VariableContext = "even u; odd e f".parse().unwrap();
        let phi = random::morphism(&mut rng, &c, &target, Shape::default()).unwrap();
        let (p, q) = (mixed(&mut rng, &c), mixed(&mut rng, &c));
        prop_assert_eq!(phi.apply(&(&p * &q)).unwrap(), phi.apply(&p).unwrap() * phi.apply(&q).unwrap());
        prop_assert_eq!(phi.apply(&(&p + &q)).unwrap(), phi.apply(&p).unwrap() + phi.apply(&q).unwrap());
        let assignment = phi.assignment();
        prop_assert_eq!(p.substitute_into(&assignment, &target).unwrap(), phi.apply(&p).unwrap());
    }

    #[test]
    fn leibniz_rule(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = ctx();
        let (p, q) = (mixed(&mut rng, &c), mixed(&mut rng, &c));
        let d = |f: &SuperPolynomial| f.derivative("x").unwrap();
        prop_assert_eq!(d(&(&p * &q)), d(&p) * &q + &p * &d(&q));
    }

    #[test]
    fn action_is_a_left_action(seed in any::<u64>(), g in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base: VariableContext = "even z; odd t eta".parse().unwrap();
        let tp = TensorPowerContext::new(&base, g).unwrap();
        let p = mixed(&mut rng, tp.context());
        let q = mixed(&mut rng, tp.context());
        let (s, t) = (permutation(&mut rng, g), permutation(&mut rng, g));
        let st = s.compose(&t).unwrap();
        prop_assert_eq!(tp.act(&st, &p).unwrap(), tp.act(&s, &tp.act(&t, &p).unwrap()).unwrap());
        prop_assert_eq!(tp.act(&Permutation::identity(g), &p).unwrap(), p.clone());
        prop_assert_eq!(tp.act(&s, &(&p * &q)).unwrap(), tp.act(&s, &p).unwrap() * tp.act(&s, &q).unwrap());
    }

    #[test]
    fn reynolds_projects_onto_invariants(seed in any::<u64>(), g in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base: VariableContext = "even z; odd t".parse().unwrap();
        let tp = TensorPowerContext::new(&base, g).unwrap();
        let p = mixed(&mut rng, tp.context());
        let r = tp.reynolds(&p).unwrap();
        prop_assert!(tp.is_invariant(&r).unwrap());
        prop_assert_eq!(tp.reynolds(&r).unwrap(), r);
    }

    #[test]
    fn sum_is_additive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = AmbientRing::with_defaults(&random::base_context(2, 2)).unwrap();
        let (d1, d2) = (divisor(&mut rng, &ring, 3), divisor(&mut rng, &ring, 3));
        let s = d1.sum(&d2).unwrap();
        prop_assert_eq!(s.degree(), d1.degree() + d2.degree());
        prop_assert_eq!(
            s.reduce().defining_polynomial(),
            d1.reduce().defining_polynomial() * d2.reduce().defining_polynomial()
        );
        prop_assert_eq!(&s, &d2.sum(&d1).unwrap());
        prop_assert_eq!(d1.sum(&Superdivisor::trivial(ring.clone())).unwrap(), d1);
    }

    #[test]
    fn pullback_commutes_with_reduce_and_sum(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random::base_context(2, 2);
        let ring = AmbientRing::with_defaults(&base).unwrap();
        let target: VariableContext = "even u v; odd e".parse().unwrap();
        let phi = random::morphism(&mut rng, &base, &target, Shape::default()).unwrap();
        let (d1, d2) = (divisor(&mut rng, &ring, 2), divisor(&mut rng, &ring, 2));
        let reduced_then_pulled: Vec<_> = d1.reduce().coefficients().iter().map(|a| phi.apply(a).unwrap()).collect();
        let pulled = d1.pullback(&phi).unwrap().reduce();
        prop_assert_eq!(pulled.coefficients(), reduced_then_pulled.as_slice());
        prop_assert_eq!(
            d1.sum(&d2).unwrap().pullback(&phi).unwrap(),
            d1.pullback(&phi).unwrap().sum(&d2.pullback(&phi).unwrap()).unwrap()
        );
    }

    #[test]
    fn pullback_composes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random::base_context(2, 2);
        let b: VariableContext = "even u v; odd e f".parse().unwrap();
        let c: VariableContext = "even w; odd h".parse().unwrap();
        let ring = AmbientRing::with_defaults(&a).unwrap();
        let d = divisor(&mut rng, &ring, 3);
        let phi = random::morphism(&mut rng, &a, &b, Shape::default()).unwrap();
        let psi = random::morphism(&mut rng, &b, &c, Shape::default()).unwrap();
        prop_assert_eq!(
            d.pullback(&phi.then(&psi).unwrap()).unwrap(),
            d.pullback(&phi).unwrap().pullback(&psi).unwrap()
        );
        prop_assert_eq!(d.pullback(&BaseMorphism::identity(&a)).unwrap(), d);
    }

    #[test]
    fn normal_form_is_linear_and_idempotent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random::base_context(2, 2);
        let ring = AmbientRing::with_defaults(&base).unwrap();
        let d = divisor(&mut rng, &ring, 4);
        let q = d.quotient();
        let wide = Shape { max_degree: 6, ..Shape::default() };
        let p = random::polynomial(&mut rng, ring.context(), Parity::Even, wide);
        let r = random::polynomial(&mut rng, ring.context(), Parity::Odd, wide);
        let b = random::polynomial(&mut rng, &base, Parity::Even, Shape::default());
        let nf_p = q.normal_form(&p).unwrap();
        let nf_r = q.normal_form(&r).unwrap();
        let back = q.reconstruct(&nf_p).unwrap();
        prop_assert_eq!(q.normal_form(&back).unwrap(), nf_p.clone());
        // even scalars act coordinatewise
        let combo = q.normal_form(&(ring.lift(&b).unwrap() * &p + &r)).unwrap();
        for (k, x) in combo.coordinates().enumerate() {
            let expect = &b * nf_p.coordinates().nth(k).unwrap() + nf_r.coordinates().nth(k).unwrap().clone();
            prop_assert_eq!(x, &expect);
        }
        // p - normal form lies in the ideal
        let diff = &p - &back;
        prop_assert!(q.normal_form(&diff).unwrap().is_zero());
        prop_assert_eq!(q.rank().unwrap(), (d.degree(), d.degree()));
    }

    #[test]
    fn char_poly_recovers_divisor(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random::base_context(rng.gen_range(0..=3), rng.gen_range(0..=3));
        let ring = AmbientRing::with_defaults(&base).unwrap();
        let d = divisor(&mut rng, &ring, 4);
        prop_assert_eq!(d.quotient().char_poly(&ring.z()).unwrap(), d.defining_polynomial());
    }

    #[test]
    fn classification_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random::base_context(3, 3);
        let ring = AmbientRing::with_defaults(&base).unwrap();
        let g = rng.gen_range(1..=3);
        let d = random::divisor(&mut rng, &ring, g, Shape::default()).unwrap();
        prop_assert!(roundtrip_check(&d).unwrap());
        let phi = classify(&d).unwrap();
        let images: BTreeMap<_, _> = phi.assignment();
        for (i, (a, b)) in d.coefficients().iter().enumerate() {
            prop_assert_eq!(&images[&format!("s{}", i + 1)], a);
            prop_assert_eq!(&images[&format!("sig{}", i + 1)], b);
        }
    }
}
