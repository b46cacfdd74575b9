use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::context::{Parity, Var, VariableContext};
use super::monomial::SuperMonomial;
use super::Rational;
use crate::error::{Error, Result};

/// Element of the free supercommutative algebra over Q generated by a context.
///
/// Terms are kept in a sorted map with no zero coefficients, so two equal elements
/// always have identical representations.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    ctx: VariableContext,
    terms: BTreeMap<SuperMonomial, Rational>,
}

fn add_term(terms: &mut BTreeMap<SuperMonomial, Rational>, m: SuperMonomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl SuperPolynomial {
    pub fn zero(ctx: &VariableContext) -> Self {
        SuperPolynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &VariableContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &VariableContext, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        add_term(&mut p.terms, SuperMonomial::one(ctx.num_even()), c);
        p
    }

    pub fn integer(ctx: &VariableContext, n: i64) -> Self {
        Self::constant(ctx, Rational::from_integer(n.into()))
    }

    pub fn var(ctx: &VariableContext, name: &str) -> Result<Self> {
        Ok(Self::generator(ctx, ctx.var(name)?))
    }

    pub fn generator(ctx: &VariableContext, var: Var) -> Self {
        let mut exps = vec![0; ctx.num_even()];
        let mut odd = 0;
        match var {
            Var::Even(i) => exps[i] = 1,
            Var::Odd(i) => odd = 1u64 << i,
        }
        let mut p = Self::zero(ctx);
        p.terms.insert(SuperMonomial::new(exps, odd), Rational::one());
        p
    }

    /// Builds an element from (monomial, coefficient) pairs, summing repeats.
    pub fn from_terms<I>(ctx: &VariableContext, terms: I) -> Self
    where
        I: IntoIterator<Item = (SuperMonomial, Rational)>,
    {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            debug_assert_eq!(m.exponents().len(), ctx.num_even());
            add_term(&mut p.terms, m, c);
        }
        p
    }

    pub fn parse(ctx: &VariableContext, text: &str) -> Result<Self> {
        super::parse::parse_polynomial(ctx, text)
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&SuperMonomial::one(self.ctx.num_even()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(SuperMonomial::is_one)
    }

    /// Every term is even. True for zero.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| !m.is_odd())
    }

    /// Every term is odd. True for zero.
    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(SuperMonomial::is_odd)
    }

    /// `None` for a mixed-parity element; zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        if self.is_even() {
            Some(Parity::Even)
        } else if self.is_odd() {
            Some(Parity::Odd)
        } else {
            None
        }
    }

    pub fn has_parity(&self, parity: Parity) -> bool {
        match parity {
            Parity::Even => self.is_even(),
            Parity::Odd => self.is_odd(),
        }
    }

    /// Largest total even degree of a term (0 for zero).
    pub fn even_degree(&self) -> u32 {
        self.terms.keys().map(SuperMonomial::even_degree).max().unwrap_or(0)
    }

    /// Largest number of odd factors in a term (0 for zero).
    pub fn odd_degree(&self) -> u32 {
        self.terms.keys().map(SuperMonomial::odd_degree).max().unwrap_or(0)
    }

    /// Largest exponent of a single even generator.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.ctx.same(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(SuperPolynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), -c.clone());
        }
        Ok(SuperPolynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    /// Supercommutative product: odd generators anticommute and square to zero.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, negative)) = m1.mul(m2) {
                    let c = c1 * c2;
                    add_term(&mut terms, m, if negative { -c } else { c });
                }
            }
        }
        Ok(SuperPolynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        SuperPolynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative in an even generator; odd factors are constants.
    pub fn derivative(&self, name: &str) -> Result<Self> {
        let i = match self.ctx.var(name)? {
            Var::Even(i) => i,
            Var::Odd(_) => return Err(Error::NotEven(name.to_string())),
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            add_term(
                &mut terms,
                SuperMonomial::new(exps, m.odd_mask()),
                c * Rational::from_integer(e.into()),
            );
        }
        Ok(SuperPolynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    /// Image under the algebra morphism sending each assigned name to its value.
    ///
    /// Unassigned names go to the generator of the same name and parity in the
    /// target context, which is the common context of the values (or this
    /// polynomial's own context when the assignment is empty).
    pub fn substitute(&self, assignment: &BTreeMap<String, SuperPolynomial>) -> Result<Self> {
        let mut values = assignment.values();
        let target = match values.next() {
            Some(v) => v.ctx.clone(),
            None => self.ctx.clone(),
        };
        self.substitute_into(assignment, &target)
    }

    pub fn substitute_into(
        &self,
        assignment: &BTreeMap<String, SuperPolynomial>,
        target: &VariableContext,
    ) -> Result<Self> {
        for name in assignment.keys() {
            self.ctx.var(name)?;
        }
        let images: Vec<SuperPolynomial> = self
            .ctx
            .vars()
            .map(|var| {
                let name = self.ctx.name(var);
                resolve_image(name, var.parity(), assignment.get(name), target)
            })
            .collect::<Result<_>>()?;
        let (even_images, odd_images) = images.split_at(self.ctx.num_even());
        Ok(self.substitute_images(even_images, odd_images, target))
    }

    /// Substitution with images already resolved and validated, indexed by context position.
    pub(crate) fn substitute_images(
        &self,
        even_images: &[SuperPolynomial],
        odd_images: &[SuperPolynomial],
        target: &VariableContext,
    ) -> Self {
        let mut powers: HashMap<(usize, u32), SuperPolynomial> = HashMap::new();
        let mut result = Self::zero(target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| even_images[i].pow(e));
                term = &term * p;
            }
            for j in m.odd_indices() {
                term = &term * &odd_images[j];
            }
            for (tm, tc) in term.terms {
                add_term(&mut result.terms, tm, tc);
            }
        }
        result
    }

    /// Re-express in a context containing every generator this element uses.
    pub fn embed_into(&self, target: &VariableContext) -> Result<Self> {
        self.substitute_into(&BTreeMap::new(), target)
    }

    /// Names of generators that actually occur.
    pub fn support(&self) -> Vec<&str> {
        let mut even = vec![false; self.ctx.num_even()];
        let mut odd = 0u64;
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                even[i] |= e > 0;
            }
            odd |= m.odd_mask();
        }
        let mut names: Vec<&str> = even
            .iter()
            .enumerate()
            .filter(|(_, &used)| used)
            .map(|(i, _)| self.ctx.name(Var::Even(i)))
            .collect();
        names.extend(
            (0..self.ctx.num_odd())
                .filter(|j| odd >> j & 1 == 1)
                .map(|j| self.ctx.name(Var::Odd(j))),
        );
        names
    }
}

pub(crate) fn resolve_image(
    name: &str,
    parity: Parity,
    assigned: Option<&SuperPolynomial>,
    target: &VariableContext,
) -> Result<SuperPolynomial> {
    match assigned {
        Some(v) => {
            if !v.ctx.same(target) {
                return Err(Error::ContextMismatch);
            }
            if !v.has_parity(parity) {
                return Err(Error::Parity(format!(
                    "{parity} generator `{name}` assigned a value that is not {parity}"
                )));
            }
            Ok(v.clone())
        }
        None => match target.lookup(name) {
            Some(var) if var.parity() == parity => Ok(SuperPolynomial::generator(target, var)),
            Some(_) => Err(Error::Parity(format!(
                "`{name}` has a different parity in the target context"
            ))),
            None => Err(Error::Invalid(format!(
                "`{name}` is unassigned and absent from the target context"
            ))),
        },
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ctx: &VariableContext, m: &SuperMonomial) -> fmt::Result {
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => write!(f, "*{}", ctx.name(Var::Even(i)))?,
            _ => write!(f, "*{}^{}", ctx.name(Var::Even(i)), e)?,
        }
    }
    for j in m.odd_indices() {
        write!(f, "*{}", ctx.name(Var::Odd(j)))?;
    }
    Ok(())
}

/// Leading term first, every coefficient explicit: `-1*t1*t2`, `1*z1 + 1*z2`, `3/2*z^2 - 1`.
impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            write!(f, "{}", c.abs())?;
            write_monomial(f, &self.ctx, m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.ctx, self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics if the operands live in different contexts; use the `checked_*`
        /// method for a fallible version.
        impl<'a> $trait<&'a SuperPolynomial> for &'a SuperPolynomial {
            type Output = SuperPolynomial;
            fn $method(self, rhs: &'a SuperPolynomial) -> SuperPolynomial {
                self.$checked(rhs).expect("context mismatch")
            }
        }

        impl $trait<SuperPolynomial> for SuperPolynomial {
            type Output = SuperPolynomial;
            fn $method(self, rhs: SuperPolynomial) -> SuperPolynomial {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $trait<&'a SuperPolynomial> for SuperPolynomial {
            type Output = SuperPolynomial;
            fn $method(self, rhs: &'a SuperPolynomial) -> SuperPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        SuperPolynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(h: &str) -> VariableContext {
        h.parse().unwrap()
    }

    fn p(c: &VariableContext, s: &str) -> SuperPolynomial {
        SuperPolynomial::parse(c, s).unwrap()
    }

    #[test]
    fn add_examples() {
        let c = ctx("even z z1 z2; odd t1 t2");
        assert!((p(&c, "z") + p(&c, "-z")).is_zero());
        let sum = p(&c, "t1") + p(&c, "t2");
        assert_eq!(sum.num_terms(), 2);
        assert_eq!(sum.to_string(), "1*t2 + 1*t1");
        assert_eq!(
            p(&c, "z1 + t1*t2") + p(&c, "z2 - t1*t2"),
            p(&c, "z1 + z2")
        );
    }

    #[test]
    fn add_context_mismatch() {
        let a = ctx("even z");
        let b = ctx("even w");
        assert_eq!(
            p(&a, "z").checked_add(&p(&b, "w")).unwrap_err(),
            Error::ContextMismatch
        );
        assert_eq!(
            p(&a, "z").checked_mul(&p(&b, "w")).unwrap_err(),
            Error::ContextMismatch
        );
    }

    #[test]
    fn mul_examples() {
        let c = ctx("even z; odd t1 t2 tc1 tc2");
        assert!((p(&c, "t1") * p(&c, "t1")).is_zero());
        assert_eq!(p(&c, "t2") * p(&c, "t1"), p(&c, "-t1*t2"));
        // cross term t1*tc1*t1*tc2 vanishes
        assert_eq!(
            p(&c, "z - t1*tc1") * p(&c, "z - t1*tc2"),
            p(&c, "z^2 - z*t1*tc1 - z*t1*tc2")
        );
    }

    #[test]
    fn substitute_examples() {
        let c = ctx("even z; odd t1 t2");
        let mut a = BTreeMap::new();
        a.insert("z".to_string(), p(&c, "z + t1*t2"));
        assert_eq!(
            p(&c, "z^2").substitute(&a).unwrap(),
            p(&c, "z^2 + 2*z*t1*t2")
        );

        let mut a = BTreeMap::new();
        a.insert("t1".to_string(), p(&c, "t2"));
        assert!(p(&c, "t1*t2").substitute(&a).unwrap().is_zero());

        let q = p(&c, "3*z^2*t1 - 1/2*t1*t2 + 7");
        assert_eq!(q.substitute(&BTreeMap::new()).unwrap(), q);
    }

    #[test]
    fn substitute_errors() {
        let c = ctx("even z; odd t1 t2");
        let mut a = BTreeMap::new();
        a.insert("z".to_string(), p(&c, "t1"));
        assert!(matches!(p(&c, "z").substitute(&a), Err(Error::Parity(_))));

        let mut a = BTreeMap::new();
        a.insert("t1".to_string(), p(&c, "z"));
        assert!(matches!(p(&c, "t1").substitute(&a), Err(Error::Parity(_))));

        // target lacks t2, which is left unassigned
        let target = ctx("even w; odd s");
        let mut a = BTreeMap::new();
        a.insert("z".to_string(), p(&target, "w"));
        a.insert("t1".to_string(), p(&target, "s"));
        assert!(matches!(p(&c, "t2").substitute(&a), Err(Error::Invalid(_))));

        let mut a = BTreeMap::new();
        a.insert("nope".to_string(), p(&c, "z"));
        assert!(matches!(
            p(&c, "z").substitute(&a),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn substitute_into_other_context() {
        let src = ctx("even a; odd b");
        let dst = ctx("even t; odd beta");
        let mut m = BTreeMap::new();
        m.insert("a".to_string(), p(&dst, "t^2"));
        m.insert("b".to_string(), p(&dst, "beta"));
        assert_eq!(
            p(&src, "a + a*b").substitute(&m).unwrap(),
            p(&dst, "t^2 + t^2*beta")
        );
    }

    #[test]
    fn derivative_examples() {
        let c = ctx("even z; odd t1 t2");
        assert_eq!(p(&c, "z^3").derivative("z").unwrap(), p(&c, "3*z^2"));
        assert_eq!(p(&c, "t1*z^2").derivative("z").unwrap(), p(&c, "2*t1*z"));
        assert!(p(&c, "t1*t2").derivative("z").unwrap().is_zero());
        assert_eq!(
            p(&c, "z").derivative("t1").unwrap_err(),
            Error::NotEven("t1".into())
        );
        assert!(matches!(
            p(&c, "z").derivative("w"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn display_format() {
        let c = ctx("even z; odd t1 t2");
        assert_eq!(p(&c, "t1*t2").scale(&Rational::from_integer((-1).into())).to_string(), "-1*t1*t2");
        assert_eq!(p(&c, "3/2*z^2 - 1").to_string(), "3/2*z^2 - 1");
        assert_eq!(SuperPolynomial::zero(&c).to_string(), "0");
        let q = p(&c, "-2/3*z*t2 + 5 + t1*t2*z^4");
        assert_eq!(p(&c, &q.to_string()), q);
    }

    #[test]
    fn parity_queries() {
        let c = ctx("even z; odd t1 t2");
        assert_eq!(p(&c, "z + t1*t2").parity(), Some(Parity::Even));
        assert_eq!(p(&c, "t1 + z*t2").parity(), Some(Parity::Odd));
        assert_eq!(p(&c, "z + t1").parity(), None);
        assert!(SuperPolynomial::zero(&c).is_odd());
        assert_eq!(p(&c, "z^2*t1 + t1*t2").support(), vec!["z", "t1", "t2"]);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let c = ctx("even z; odd t1 t2");
        let x = p(&c, "z + t1*t2 + 2");
        assert_eq!(x.pow(3), &(&x * &x) * &x);
        assert_eq!(x.pow(0), SuperPolynomial::one(&c));
    }
}
