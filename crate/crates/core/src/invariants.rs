//! Even and odd symmetric functions and the comparison between the algebra they
//! generate and the full algebra of invariants of `A^{⊗g}`.
//!
//! For one odd generator per factor (`n = 1`) the map from the exterior algebra
//! on the odd symmetric functions `ς_h` over `k[s_1..s_g]` onto the invariants is
//! an isomorphism; for `n >= 2` it is not surjective. Both statements are checked
//! here on finite-dimensional truncations by exact rank computations.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rank, solve, MonomialIndex, Span};
use crate::superalgebra::{Rational, SuperMonomial, SuperPolynomial, VariableContext};
use crate::symmetric::TensorPowerContext;

/// Name of the even coordinate in the standard base patch.
pub const EVEN_NAME: &str = "z";
/// Names of the odd coordinates in the standard base patch, in order.
pub const ODD_NAMES: [&str; 4] = ["t", "eta", "xi", "chi"];

/// Base context `even z; odd t [eta …]` with `n` odd generators.
pub fn standard_base(n: usize) -> Result<VariableContext> {
    if n > ODD_NAMES.len() {
        return Err(Error::Unsupported(format!(
            "at most {} odd generators per factor",
            ODD_NAMES.len()
        )));
    }
    VariableContext::new(&[EVEN_NAME], &ODD_NAMES[..n])
}

pub fn standard_tensor_power(g: usize, n: usize) -> Result<TensorPowerContext> {
    TensorPowerContext::new(&standard_base(n)?, g)
}

/// `e_h(xs)` by the usual recurrence.
fn elementary_of(ctx: &VariableContext, xs: &[SuperPolynomial], h: usize) -> SuperPolynomial {
    let mut e = vec![SuperPolynomial::zero(ctx); h + 1];
    e[0] = SuperPolynomial::one(ctx);
    for x in xs {
        for k in (1..=h).rev() {
            e[k] = &e[k] + &(x * &e[k - 1]);
        }
    }
    e.swap_remove(h)
}

fn check_range(tp: &TensorPowerContext, h: usize) -> Result<()> {
    if h == 0 || h > tp.g() {
        Err(Error::IndexOutOfRange {
            index: h,
            max: tp.g(),
        })
    } else {
        Ok(())
    }
}

fn even_copies(tp: &TensorPowerContext, base_var: usize) -> Vec<SuperPolynomial> {
    let ctx = tp.context();
    (0..tp.g())
        .map(|i| SuperPolynomial::generator(ctx, crate::superalgebra::Var::Even(base_var * tp.g() + i)))
        .collect()
}

fn odd_copies(tp: &TensorPowerContext, base_var: usize) -> Vec<SuperPolynomial> {
    let ctx = tp.context();
    (0..tp.g())
        .map(|i| SuperPolynomial::generator(ctx, crate::superalgebra::Var::Odd(base_var * tp.g() + i)))
        .collect()
}

/// `e_h(z_1, …, z_g)` on the copies of the first even base generator.
pub fn elementary_symmetric_in(tp: &TensorPowerContext, h: usize) -> Result<SuperPolynomial> {
    check_range(tp, h)?;
    if tp.base().num_even() == 0 {
        return Err(Error::Invalid("base context has no even generator".into()));
    }
    Ok(elementary_of(tp.context(), &even_copies(tp, 0), h))
}

/// `ς_h = Σ_i θ_i · e_{h-1}(z_1, …, ẑ_i, …, z_g)` for the odd base generator `odd_var`.
pub fn odd_symmetric_in(
    tp: &TensorPowerContext,
    h: usize,
    odd_var: usize,
) -> Result<SuperPolynomial> {
    check_range(tp, h)?;
    if tp.base().num_even() == 0 || odd_var >= tp.base().num_odd() {
        return Err(Error::Invalid(
            "base context needs an even generator and the requested odd generator".into(),
        ));
    }
    let zs = even_copies(tp, 0);
    let thetas = odd_copies(tp, odd_var);
    let mut acc = SuperPolynomial::zero(tp.context());
    for (i, theta) in thetas.iter().enumerate() {
        let others: Vec<SuperPolynomial> = zs
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, z)| z.clone())
            .collect();
        acc = &acc + &(theta * &elementary_of(tp.context(), &others, h - 1));
    }
    Ok(acc)
}

/// `s_h` in the standard `n = 1` tensor power.
pub fn elementary_symmetric(g: usize, h: usize) -> Result<SuperPolynomial> {
    elementary_symmetric_in(&standard_tensor_power(g, 1)?, h)
}

/// `ς_h` in the standard `n = 1` tensor power.
pub fn odd_symmetric(g: usize, h: usize) -> Result<SuperPolynomial> {
    odd_symmetric_in(&standard_tensor_power(g, 1)?, h, 0)
}

/// The generators `s_1..s_g` and `ς_1..ς_g` of the invariants for `n = 1`.
#[derive(Debug, Clone)]
pub struct SymmetricGenerators {
    tp: TensorPowerContext,
    s: Vec<SuperPolynomial>,
    sigma: Vec<SuperPolynomial>,
}

impl SymmetricGenerators {
    /// Over the standard base `even z; odd t`.
    pub fn new(g: usize) -> Result<Self> {
        Self::over(&standard_tensor_power(g, 1)?)
    }

    /// Over any tensor power whose base has exactly one even and one odd generator.
    pub fn over(tp: &TensorPowerContext) -> Result<Self> {
        if tp.base().num_even() != 1 || tp.base().num_odd() != 1 {
            return Err(Error::Invalid(
                "symmetric generators need a (1,1) base context".into(),
            ));
        }
        let g = tp.g();
        Ok(SymmetricGenerators {
            tp: tp.clone(),
            s: (1..=g)
                .map(|h| elementary_symmetric_in(tp, h))
                .collect::<Result<_>>()?,
            sigma: (1..=g)
                .map(|h| odd_symmetric_in(tp, h, 0))
                .collect::<Result<_>>()?,
        })
    }

    pub fn g(&self) -> usize {
        self.tp.g()
    }

    pub fn tensor_power(&self) -> &TensorPowerContext {
        &self.tp
    }

    /// `s_h`, one-based.
    pub fn s(&self, h: usize) -> &SuperPolynomial {
        &self.s[h - 1]
    }

    /// `ς_h`, one-based.
    pub fn sigma(&self, h: usize) -> &SuperPolynomial {
        &self.sigma[h - 1]
    }

    pub fn even(&self) -> &[SuperPolynomial] {
        &self.s
    }

    pub fn odd(&self) -> &[SuperPolynomial] {
        &self.sigma
    }

    fn as_generators(&self) -> Vec<Generator> {
        let g = self.g();
        let even = self.s.iter().enumerate().map(|(k, p)| Generator {
            value: p.clone(),
            odd: false,
            degree: vec![k as u32 + 1, 0],
        });
        let odd = self.sigma.iter().enumerate().map(|(k, p)| Generator {
            value: p.clone(),
            odd: true,
            degree: vec![k as u32, 1],
        });
        let out: Vec<Generator> = even.chain(odd).collect();
        debug_assert_eq!(out.len(), 2 * g);
        out
    }

    /// Evaluates `s^α · ς_{i1} ⋯ ς_{ik}`.
    pub fn eval_monomial(&self, m: &GeneratorMonomial) -> SuperPolynomial {
        let mut acc = SuperPolynomial::one(self.tp.context());
        for (k, &a) in m.even.iter().enumerate() {
            if a > 0 {
                acc = &acc * &self.s[k].pow(a);
            }
        }
        for &i in &m.odd {
            acc = &acc * &self.sigma[i - 1];
        }
        acc
    }
}

/// `s_1^{α_1} ⋯ s_g^{α_g} · ς_{i1} ⋯ ς_{ik}` with `i1 < ⋯ < ik` (one-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorMonomial {
    pub even: Vec<u32>,
    pub odd: Vec<usize>,
}

impl GeneratorMonomial {
    /// Degree in the even coordinates of the image.
    pub fn even_degree(&self) -> u32 {
        let s: u32 = self
            .even
            .iter()
            .enumerate()
            .map(|(k, &a)| a * (k as u32 + 1))
            .sum();
        s + self.odd.iter().map(|&i| i as u32 - 1).sum::<u32>()
    }

    pub fn odd_degree(&self) -> u32 {
        self.odd.len() as u32
    }
}

impl fmt::Display for GeneratorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if first {
                first = false;
                Ok(())
            } else {
                f.write_str("*")
            }
        };
        for (k, &a) in self.even.iter().enumerate() {
            match a {
                0 => {}
                1 => {
                    sep(f)?;
                    write!(f, "s{}", k + 1)?
                }
                _ => {
                    sep(f)?;
                    write!(f, "s{}^{}", k + 1, a)?
                }
            }
        }
        for &i in &self.odd {
            sep(f)?;
            write!(f, "sig{i}")?;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial in `s_h`, `ς_h` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantExpression {
    pub terms: Vec<(Rational, GeneratorMonomial)>,
}

impl InvariantExpression {
    pub fn eval(&self, gens: &SymmetricGenerators) -> SuperPolynomial {
        self.terms
            .iter()
            .fold(SuperPolynomial::zero(gens.tp.context()), |acc, (c, m)| {
                &acc + &gens.eval_monomial(m).scale(c)
            })
    }
}

impl fmt::Display for InvariantExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let one = GeneratorMonomial {
                even: vec![0; m.even.len()],
                odd: vec![],
            };
            if *m == one {
                write!(f, "{}", c.abs())?;
            } else {
                write!(f, "{}*{}", c.abs(), m)?;
            }
        }
        Ok(())
    }
}

/// Outcome of [`express_invariant`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expressed {
    Expression(InvariantExpression),
    NotInImage,
}

/// A generator of a subalgebra together with its multidegree.
#[derive(Debug, Clone)]
pub(crate) struct Generator {
    pub value: SuperPolynomial,
    pub odd: bool,
    pub degree: Vec<u32>,
}

/// A product of generators: exponent per generator (0/1 for odd ones), value and multidegree.
#[derive(Debug, Clone)]
pub(crate) struct Product {
    pub exponents: Vec<u32>,
    pub value: SuperPolynomial,
    pub degree: Vec<u32>,
}

/// All products of generators whose multidegree satisfies `fits`. `fits` must be
/// downward closed and every generator must have a nonzero multidegree.
/// Odd generators appear at most once, multiplied in ascending generator order.
pub(crate) fn generator_products(
    ctx: &VariableContext,
    gens: &[Generator],
    fits: &dyn Fn(&[u32]) -> bool,
) -> Vec<Product> {
    fn go(
        gens: &[Generator],
        k: usize,
        fits: &dyn Fn(&[u32]) -> bool,
        cur: &mut Product,
        out: &mut Vec<Product>,
    ) {
        if k == gens.len() {
            out.push(cur.clone());
            return;
        }
        let saved = cur.clone();
        let max = if gens[k].odd { 1 } else { u32::MAX };
        let mut e = 0;
        loop {
            go(gens, k + 1, fits, cur, out);
            e += 1;
            if e > max {
                break;
            }
            let degree: Vec<u32> = cur
                .degree
                .iter()
                .zip(&gens[k].degree)
                .map(|(a, b)| a + b)
                .collect();
            if !fits(&degree) || gens[k].degree.iter().all(|&x| x == 0) {
                break;
            }
            cur.degree = degree;
            cur.exponents[k] = e;
            cur.value = &cur.value * &gens[k].value;
        }
        *cur = saved;
    }
    let dims = gens.first().map_or(0, |g| g.degree.len());
    let mut cur = Product {
        exponents: vec![0; gens.len()],
        value: SuperPolynomial::one(ctx),
        degree: vec![0; dims],
    };
    let mut out = Vec::new();
    if fits(&cur.degree) {
        go(gens, 0, fits, &mut cur, &mut out);
    }
    out
}

fn to_generator_monomial(g: usize, exponents: &[u32]) -> GeneratorMonomial {
    GeneratorMonomial {
        even: exponents[..g].to_vec(),
        odd: (0..g)
            .filter(|&i| exponents[g + i] == 1)
            .map(|i| i + 1)
            .collect(),
    }
}

/// Writes an invariant as a polynomial in `s_h`, `ς_h`.
///
/// Only generator products whose degrees do not exceed those of `p` are tried.
pub fn express_invariant(gens: &SymmetricGenerators, p: &SuperPolynomial) -> Result<Expressed> {
    if !gens.tp.is_invariant(p)? {
        return Err(Error::NotInvariant);
    }
    let (d, w) = (p.even_degree(), p.odd_degree());
    let products = generator_products(gens.tp.context(), &gens.as_generators(), &|deg| {
        deg[0] <= d && deg[1] <= w
    });
    let index = MonomialIndex::covering(products.iter().map(|x| &x.value).chain([p]));
    let columns: Vec<Vec<Rational>> = products
        .iter()
        .map(|x| index.coordinates(&x.value).expect("covered"))
        .collect();
    let target = index.coordinates(p).expect("covered");
    let Some(x) = solve(&columns, &target) else {
        return Ok(Expressed::NotInImage);
    };
    let mut terms: Vec<(Rational, GeneratorMonomial)> = products
        .iter()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .map(|(prod, c)| (c, to_generator_monomial(gens.g(), &prod.exponents)))
        .collect();
    terms.sort_by(|(_, a), (_, b)| {
        (b.even_degree() + b.odd_degree())
            .cmp(&(a.even_degree() + a.odd_degree()))
            .then_with(|| b.even.cmp(&a.even))
            .then_with(|| a.odd.cmp(&b.odd))
    });
    Ok(Expressed::Expression(InvariantExpression { terms }))
}

/// Truncation-wise comparison of the generated subalgebra with the invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationReport {
    pub g: usize,
    pub d: u32,
    pub w: u32,
    /// Dimension of the invariants of even degree `<= d`, odd degree `<= w`.
    pub dim_invariants: usize,
    /// Dimension of the span of generator products in the same truncation.
    pub dim_image: usize,
    /// Number of generator products `s^α ς_S` in the truncation.
    pub generator_monomials: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl GenerationReport {
    pub fn holds(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Checks, for `n = 1`, that the products `s^α ς_S` in the truncation are
/// linearly independent and span every invariant of the truncation.
pub fn verify_lemma1(g: usize, d: u32, w: u32) -> Result<GenerationReport> {
    let gens = SymmetricGenerators::new(g)?;
    let tp = &gens.tp;
    let invariants = tp.invariant_basis(d, w);
    let products = generator_products(tp.context(), &gens.as_generators(), &|deg| {
        deg[0] <= d && deg[1] <= w
    });
    let index = MonomialIndex::new(tp.monomials(d, w));
    let mut image = Span::new(index.len());
    let mut all_invariant = true;
    for prod in &products {
        all_invariant &= tp.is_invariant(&prod.value)?;
        image.insert(&index.coordinates(&prod.value).expect("truncation is closed"));
    }
    let covers = invariants
        .iter()
        .all(|b| image.contains(&index.coordinates(b).expect("in truncation")));
    Ok(GenerationReport {
        g,
        d,
        w,
        dim_invariants: invariants.len(),
        dim_image: image.dim(),
        generator_monomials: products.len(),
        injective: image.dim() == products.len(),
        surjective: all_invariant && covers && image.dim() == invariants.len(),
    })
}

/// An invariant outside the subalgebra generated by the even and odd symmetric
/// functions, with the dimension count that certifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub witness: SuperPolynomial,
    /// (even degree, degree in each odd base generator).
    pub multidegree: Vec<u32>,
    pub dim_invariants: usize,
    pub dim_image: usize,
    /// The linear system "witness = combination of generator products" has no solution.
    pub infeasible: bool,
}

fn multidegree(m: &SuperMonomial, g: usize, n: usize) -> Vec<u32> {
    let mut deg = vec![0; n + 1];
    deg[0] = m.even_degree();
    for k in m.odd_indices() {
        deg[1 + k / g] += 1;
    }
    deg
}

/// Searches the multidegrees with even degree `<= d` and total odd degree `<= w`
/// of the `n`-odd-generator tensor power for an invariant outside the generated
/// subalgebra.
pub fn find_generation_gap(g: usize, n: usize, d: u32, w: u32) -> Result<Counterexample> {
    let tp = standard_tensor_power(g, n)?;
    let ctx = tp.context();
    let mut gens = Vec::new();
    for h in 1..=g {
        let mut degree = vec![0; n + 1];
        degree[0] = h as u32;
        gens.push(Generator {
            value: elementary_symmetric_in(&tp, h)?,
            odd: false,
            degree,
        });
    }
    for j in 0..n {
        for h in 1..=g {
            let mut degree = vec![0; n + 1];
            degree[0] = h as u32 - 1;
            degree[1 + j] = 1;
            gens.push(Generator {
                value: odd_symmetric_in(&tp, h, j)?,
                odd: true,
                degree,
            });
        }
    }
    let products = generator_products(ctx, &gens, &|deg| {
        deg[0] <= d && deg[1..].iter().sum::<u32>() <= w
    });
    let monos = tp.monomials(d, w);

    // odd multidegrees ordered by total, then lexicographically
    let mut odd_degrees: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n {
        odd_degrees = odd_degrees
            .into_iter()
            .flat_map(|v| {
                (0..=g as u32).map(move |k| {
                    let mut v = v.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    odd_degrees.retain(|v| v.iter().sum::<u32>() <= w);
    odd_degrees.sort_by_key(|v| (v.iter().sum::<u32>(), v.clone()));

    for odd in &odd_degrees {
        for e in 0..=d {
            let mut target = vec![e];
            target.extend(odd);
            let block: Vec<&SuperMonomial> = monos
                .iter()
                .filter(|m| multidegree(m, g, n) == target)
                .collect();
            if block.is_empty() {
                continue;
            }
            let index = MonomialIndex::new(block.iter().map(|m| (*m).clone()));
            let mut image = Span::new(index.len());
            let mut columns = Vec::new();
            for prod in products.iter().filter(|p| p.degree == target) {
                let v = index.coordinates(&prod.value).expect("homogeneous");
                image.insert(&v);
                columns.push(v);
            }
            let mut invariants = Span::new(index.len());
            let mut witness = None;
            for m in &block {
                let mono = SuperPolynomial::from_terms(ctx, [((*m).clone(), Rational::one())]);
                let sym = tp.orbit_sum(&mono);
                if sym.is_zero() {
                    continue;
                }
                let v = index.coordinates(&sym).expect("homogeneous");
                invariants.insert(&v);
                if witness.is_none() && !image.contains(&v) {
                    witness = Some(sym);
                }
            }
            if let Some(sym) = witness {
                let (_, lead) = sym.terms().next_back().expect("nonzero");
                let sym = sym.scale(&(Rational::one() / lead));
                let target_vec = index.coordinates(&sym).expect("homogeneous");
                return Ok(Counterexample {
                    infeasible: solve(&columns, &target_vec).is_none(),
                    witness: sym,
                    multidegree: target,
                    dim_invariants: invariants.dim(),
                    dim_image: rank(&columns),
                });
            }
        }
    }
    Err(Error::NotFound(d))
}

/// Invariant of the `n = 2` tensor power (odd generators `t`, `eta`) that is not a
/// polynomial in `s_h`, `ς_h(t)`, `ς_h(eta)`; searched up to even degree `d` and odd
/// degree 2.
pub fn counterexample_n2(g: usize, d: u32) -> Result<Counterexample> {
    if g < 2 {
        return Err(Error::Invalid("the n = 2 failure needs g >= 2".into()));
    }
    find_generation_gap(g, 2, d, 2)
}
