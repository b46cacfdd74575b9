//! Seeded random instances for property checks and the CLI.

use rand::Rng;

use crate::divisor::{AmbientRing, BaseMorphism, Superdivisor};
use crate::error::Result;
use crate::superalgebra::{Parity, Rational, SuperMonomial, SuperPolynomial, VariableContext};

/// Shape of generated polynomials.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub max_degree: u32,
    pub max_terms: usize,
    /// Numerators in `-bound..=bound`, denominators in `1..=bound`.
    pub bound: i64,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            max_degree: 2,
            max_terms: 3,
            bound: 3,
        }
    }
}

fn coefficient<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let n = rng.gen_range(-bound..=bound);
        if n != 0 {
            let d = rng.gen_range(1..=bound.max(1));
            return Rational::new(n.into(), d.into());
        }
    }
}

/// A homogeneous-parity element; zero when the parity is impossible in `ctx`.
pub fn polynomial<R: Rng>(rng: &mut R, ctx: &VariableContext, parity: Parity, shape: Shape) -> SuperPolynomial {
    let n = ctx.num_odd();
    if parity == Parity::Odd && n == 0 {
        return SuperPolynomial::zero(ctx);
    }
    let count = rng.gen_range(0..=shape.max_terms);
    let terms = (0..count).map(|_| {
        let mut exps = vec![0u32; ctx.num_even()];
        let mut budget = rng.gen_range(0..=shape.max_degree);
        while budget > 0 && !exps.is_empty() {
            let i = rng.gen_range(0..exps.len());
            exps[i] += 1;
            budget -= 1;
        }
        let mut odd = 0u64;
        for j in 0..n {
            if rng.gen_bool(0.4) {
                odd |= 1 << j;
            }
        }
        if Parity::from_count(odd.count_ones() as usize) != parity {
            odd ^= 1 << rng.gen_range(0..n.max(1));
        }
        (SuperMonomial::new(exps, odd), coefficient(rng, shape.bound))
    });
    SuperPolynomial::from_terms(ctx, terms.collect::<Vec<_>>())
}

/// Base context `even x1..xm; odd y1..yn`.
pub fn base_context(num_even: usize, num_odd: usize) -> VariableContext {
    let even: Vec<String> = (1..=num_even).map(|i| format!("x{i}")).collect();
    let odd: Vec<String> = (1..=num_odd).map(|i| format!("y{i}")).collect();
    VariableContext::new(&even, &odd).expect("distinct names")
}

pub fn divisor<R: Rng>(rng: &mut R, ring: &AmbientRing, g: usize, shape: Shape) -> Result<Superdivisor> {
    let base = ring.base();
    let coeffs = (0..g)
        .map(|_| {
            (
                polynomial(rng, base, Parity::Even, shape),
                polynomial(rng, base, Parity::Odd, shape),
            )
        })
        .collect();
    Superdivisor::with_ring(ring.clone(), coeffs)
}

pub fn morphism<R: Rng>(
    rng: &mut R,
    source: &VariableContext,
    target: &VariableContext,
    shape: Shape,
) -> Result<BaseMorphism> {
    let assignment = source
        .vars()
        .map(|v| {
            (
                source.name(v).to_string(),
                polynomial(rng, target, v.parity(), shape),
            )
        })
        .collect();
    BaseMorphism::new(source, target, &assignment)
}
