//! Relative positive superdivisors in normal form over a free base.
//!
//! A divisor of degree `g` over a base algebra `B` is cut out by
//! `f = z^g - (a1 + t*b1)*z^(g-1) + ... + (-1)^g*(ag + t*bg)` in `B[z, t]`,
//! where `z` is the even and `t` the odd coordinate of the patch.

mod json;
mod morphism;
mod quotient;

use std::fmt;

use crate::error::{Error, Result};
use crate::superalgebra::{Parity, Rational, SuperMonomial, SuperPolynomial, VariableContext};

pub use json::{BaseJson, CoeffJson, DivisorJson, MapJson};
pub use morphism::BaseMorphism;
pub use quotient::{NormalForm, QuotientPresentation};

pub const DEFAULT_COORDINATE: &str = "z";
pub const DEFAULT_ODD_COORDINATE: &str = "t";

/// The ring `B[z, t]` in which divisors live.
///
/// Its context lists `z` before the even base generators and `t` before the odd
/// ones, so `t * b` is already in canonical order for every base monomial `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientRing {
    base: VariableContext,
    ctx: VariableContext,
}

impl AmbientRing {
    pub fn new(base: &VariableContext, z: &str, theta: &str) -> Result<Self> {
        let mut even = vec![z.to_string()];
        even.extend(base.even_vars().iter().cloned());
        let mut odd = vec![theta.to_string()];
        odd.extend(base.odd_vars().iter().cloned());
        Ok(AmbientRing {
            base: base.clone(),
            ctx: VariableContext::new(&even, &odd)?,
        })
    }

    pub fn with_defaults(base: &VariableContext) -> Result<Self> {
        Self::new(base, DEFAULT_COORDINATE, DEFAULT_ODD_COORDINATE)
    }

    pub fn base(&self) -> &VariableContext {
        &self.base
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn coordinate(&self) -> &str {
        &self.ctx.even_vars()[0]
    }

    pub fn odd_coordinate(&self) -> &str {
        &self.ctx.odd_vars()[0]
    }

    pub fn z(&self) -> SuperPolynomial {
        SuperPolynomial::generator(&self.ctx, crate::superalgebra::Var::Even(0))
    }

    pub fn theta(&self) -> SuperPolynomial {
        SuperPolynomial::generator(&self.ctx, crate::superalgebra::Var::Odd(0))
    }

    /// Same coordinates over another base.
    pub fn rebase(&self, base: &VariableContext) -> Result<Self> {
        Self::new(base, self.coordinate(), self.odd_coordinate())
    }

    pub fn lift(&self, b: &SuperPolynomial) -> Result<SuperPolynomial> {
        if !b.context().same(&self.base) {
            return Err(Error::ContextMismatch);
        }
        Ok(SuperPolynomial::from_terms(
            &self.ctx,
            b.terms().map(|(m, c)| {
                let mut exps = Vec::with_capacity(m.exponents().len() + 1);
                exps.push(0);
                exps.extend_from_slice(m.exponents());
                (SuperMonomial::new(exps, m.odd_mask() << 1), c.clone())
            }),
        ))
    }

    /// Writes `p = sum_k z^k * (c_k + t*d_k)` and returns `[(c_0, d_0), (c_1, d_1), ...]`.
    /// Empty for `p = 0`.
    pub fn split(&self, p: &SuperPolynomial) -> Result<Vec<(SuperPolynomial, SuperPolynomial)>> {
        if !p.context().same(&self.ctx) {
            return Err(Error::ContextMismatch);
        }
        let len = p.terms().map(|(m, _)| m.exponent(0) as usize + 1).max().unwrap_or(0);
        let mut parts: Vec<(Vec<(SuperMonomial, Rational)>, Vec<(SuperMonomial, Rational)>)> =
            vec![(Vec::new(), Vec::new()); len];
        for (m, c) in p.terms() {
            let k = m.exponent(0) as usize;
            let bm = SuperMonomial::new(m.exponents()[1..].to_vec(), m.odd_mask() >> 1);
            if m.odd_mask() & 1 == 1 {
                parts[k].1.push((bm, c.clone()));
            } else {
                parts[k].0.push((bm, c.clone()));
            }
        }
        Ok(parts
            .into_iter()
            .map(|(c, d)| {
                (
                    SuperPolynomial::from_terms(&self.base, c),
                    SuperPolynomial::from_terms(&self.base, d),
                )
            })
            .collect())
    }

    /// `sum_k z^k * (c_k + t*d_k)`.
    pub fn join(&self, parts: &[(SuperPolynomial, SuperPolynomial)]) -> Result<SuperPolynomial> {
        let mut out = SuperPolynomial::zero(&self.ctx);
        let z = self.z();
        let theta = self.theta();
        for (k, (c, d)) in parts.iter().enumerate() {
            let coeff = self.lift(c)? + &theta * &self.lift(d)?;
            out = out + coeff * z.pow(k as u32);
        }
        Ok(out)
    }
}

/// An ordinary relative divisor `z^g - a1*z^(g-1) + ... + (-1)^g*ag`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryDivisor {
    ring: AmbientRing,
    coeffs: Vec<SuperPolynomial>,
}

impl OrdinaryDivisor {
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn ring(&self) -> &AmbientRing {
        &self.ring
    }

    pub fn coefficients(&self) -> &[SuperPolynomial] {
        &self.coeffs
    }

    pub fn defining_polynomial(&self) -> SuperPolynomial {
        let zero = SuperPolynomial::zero(&self.ring.base);
        let parts: Vec<_> = self.coeffs.iter().map(|a| (a.clone(), zero.clone())).collect();
        assemble(&self.ring, &parts)
    }
}

impl fmt::Display for OrdinaryDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.defining_polynomial())
    }
}

/// A degree-`g` superdivisor, stored through its coefficient pairs `(a_i, b_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superdivisor {
    ring: AmbientRing,
    coeffs: Vec<(SuperPolynomial, SuperPolynomial)>,
}

fn assemble(ring: &AmbientRing, coeffs: &[(SuperPolynomial, SuperPolynomial)]) -> SuperPolynomial {
    let g = coeffs.len();
    let z = ring.z();
    let theta = ring.theta();
    let mut f = z.pow(g as u32);
    for (i, (a, b)) in coeffs.iter().enumerate() {
        let i = i + 1;
        let c = ring.lift(a).expect("base checked") + &theta * &ring.lift(b).expect("base checked");
        let term = c * z.pow((g - i) as u32);
        f = if i % 2 == 0 { f + term } else { f - term };
    }
    f
}

impl Superdivisor {
    /// Divisor over `base` with the default coordinates `z`, `t`.
    pub fn new(
        base: &VariableContext,
        coeffs: Vec<(SuperPolynomial, SuperPolynomial)>,
    ) -> Result<Self> {
        Self::with_ring(AmbientRing::with_defaults(base)?, coeffs)
    }

    pub fn with_ring(
        ring: AmbientRing,
        coeffs: Vec<(SuperPolynomial, SuperPolynomial)>,
    ) -> Result<Self> {
        for (i, (a, b)) in coeffs.iter().enumerate() {
            if !a.context().same(&ring.base) || !b.context().same(&ring.base) {
                return Err(Error::ContextMismatch);
            }
            if !a.has_parity(Parity::Even) {
                return Err(Error::Parity(format!("a{} must be even, got {a}", i + 1)));
            }
            if !b.has_parity(Parity::Odd) {
                return Err(Error::Parity(format!("b{} must be odd, got {b}", i + 1)));
            }
        }
        Ok(Superdivisor { ring, coeffs })
    }

    /// Checks that `g` matches the number of coefficient pairs.
    pub fn make_divisor(
        g: usize,
        base: &VariableContext,
        coeffs: Vec<(SuperPolynomial, SuperPolynomial)>,
    ) -> Result<Self> {
        if coeffs.len() != g {
            return Err(Error::CoefficientCount {
                expected: g,
                found: coeffs.len(),
            });
        }
        Self::new(base, coeffs)
    }

    /// The degree-0 divisor `f = 1`.
    pub fn trivial(ring: AmbientRing) -> Self {
        Superdivisor {
            ring,
            coeffs: Vec::new(),
        }
    }

    /// Parses `[(a1, b1), ...]` in the base context.
    pub fn parse(ring: AmbientRing, coeffs: &[(&str, &str)]) -> Result<Self> {
        let base = ring.base.clone();
        let parsed = coeffs
            .iter()
            .map(|(a, b)| Ok((SuperPolynomial::parse(&base, a)?, SuperPolynomial::parse(&base, b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::with_ring(ring, parsed)
    }

    /// Recovers the coefficient pairs from a monic polynomial in normal form.
    pub fn from_defining_polynomial(ring: AmbientRing, f: &SuperPolynomial) -> Result<Self> {
        let not_normal = || Error::NotNormalForm(ring.coordinate().to_string());
        let parts = ring.split(f)?;
        let Some(((lead, lead_odd), lower)) = parts.split_last() else {
            return Err(not_normal());
        };
        if *lead != SuperPolynomial::one(&ring.base) || !lead_odd.is_zero() {
            return Err(not_normal());
        }
        let g = lower.len();
        let mut coeffs = Vec::with_capacity(g);
        for i in 1..=g {
            let (c, d) = &lower[g - i];
            let (a, b) = if i % 2 == 0 { (c.clone(), d.clone()) } else { (-c, -d) };
            if !a.has_parity(Parity::Even) || !b.has_parity(Parity::Odd) {
                return Err(not_normal());
            }
            coeffs.push((a, b));
        }
        Ok(Superdivisor { ring, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn ring(&self) -> &AmbientRing {
        &self.ring
    }

    pub fn base(&self) -> &VariableContext {
        &self.ring.base
    }

    pub fn coefficients(&self) -> &[(SuperPolynomial, SuperPolynomial)] {
        &self.coeffs
    }

    /// `a_i + t*b_i` in the ambient ring, `i` one-based.
    pub fn coefficient(&self, i: usize) -> Result<SuperPolynomial> {
        let g = self.degree();
        if i == 0 || i > g {
            return Err(Error::IndexOutOfRange { index: i, max: g });
        }
        let (a, b) = &self.coeffs[i - 1];
        Ok(self.ring.lift(a)? + self.ring.theta() * self.ring.lift(b)?)
    }

    pub fn defining_polynomial(&self) -> SuperPolynomial {
        assemble(&self.ring, &self.coeffs)
    }

    /// Sets `t = 0`.
    pub fn reduce(&self) -> OrdinaryDivisor {
        OrdinaryDivisor {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|(a, _)| a.clone()).collect(),
        }
    }

    /// Divisor of the product of the defining polynomials.
    pub fn sum(&self, other: &Superdivisor) -> Result<Superdivisor> {
        if self.ring != other.ring {
            return Err(Error::BaseMismatch);
        }
        let f = self.defining_polynomial() * other.defining_polynomial();
        Self::from_defining_polynomial(self.ring.clone(), &f)
    }

    /// Applies `phi` to every coefficient; the coordinates keep their names.
    pub fn pullback(&self, phi: &BaseMorphism) -> Result<Superdivisor> {
        if !phi.source().same(&self.ring.base) {
            return Err(Error::BaseMismatch);
        }
        let ring = self.ring.rebase(phi.target())?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|(a, b)| Ok((phi.apply(a)?, phi.apply(b)?)))
            .collect::<Result<_>>()?;
        Self::with_ring(ring, coeffs)
    }

    pub fn quotient(&self) -> QuotientPresentation {
        QuotientPresentation::new(self.clone())
    }

    pub fn to_json(&self) -> DivisorJson {
        DivisorJson::from_divisor(self)
    }

    pub fn from_json(j: &DivisorJson) -> Result<Self> {
        j.to_divisor()
    }
}

impl fmt::Display for Superdivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.defining_polynomial())
    }
}
