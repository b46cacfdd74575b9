//! Tensor powers `A^{⊗g}` realized as one supercommutative ring and the signed
//! action of the symmetric group on them.
//!
//! The tensor power of a context with generators `v` has generators `v1 … vg`
//! (all copies of the first base generator, then the second, and so on). A
//! decomposable tensor `f1 ⊗ ⋯ ⊗ fg` is identified with the ordered product
//! `embed(1, f1) · ⋯ · embed(g, fg)`. Permutations act by renaming copy indices;
//! the Koszul sign then falls out of the canonical reordering of odd factors.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{MonomialIndex, Span};
use crate::superalgebra::{
    sort_odd_sequence, Rational, SuperMonomial, SuperPolynomial, VariableContext,
};

/// A bijection of `{1, …, g}`, stored zero-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(g: usize) -> Self {
        Permutation {
            images: (0..g).collect(),
        }
    }

    /// From one-based images `[σ(1), …, σ(g)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let g = images.len();
        let mut seen = vec![false; g];
        let mut zero_based = Vec::with_capacity(g);
        for &i in images {
            if i == 0 || i > g || seen[i - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={g}"
                )));
            }
            seen[i - 1] = true;
            zero_based.push(i - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// The transposition `(i j)` in `S_g`, one-based.
    pub fn transposition(g: usize, i: usize, j: usize) -> Result<Self> {
        for k in [i, j] {
            if k == 0 || k > g {
                return Err(Error::IndexOutOfRange { index: k, max: g });
            }
        }
        let mut p = Self::identity(g);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// Parses cycle notation such as `(1 2)(3)` or `(1,3,2)`.
    ///
    /// The size is the largest point mentioned, or `g` when given (which must be
    /// at least that large).
    pub fn parse_cycles(text: &str, g: Option<usize>) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidPermutation(format!("`{text}`: {msg}"));
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| bad("expected `(`"))?;
            let close = inner.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let cycle = inner[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad("expected a positive integer")))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = inner[close + 1..].trim_start();
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let size = match g {
            Some(g) if g < max => return Err(bad("mentions a point larger than g")),
            Some(g) => g,
            None => max,
        };
        if size == 0 {
            return Err(bad("empty permutation with unknown size"));
        }
        let mut images: Vec<usize> = (0..size).collect();
        let mut seen = vec![false; size];
        for cycle in &cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 {
                    return Err(bad("points are numbered from 1"));
                }
                if std::mem::replace(&mut seen[a - 1], true) {
                    return Err(bad("cycles are not disjoint"));
                }
                images[a - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)`, one-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub(crate) fn image0(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `σ ∘ τ`, i.e. `i ↦ σ(τ(i))`.
    pub fn compose(&self, tau: &Permutation) -> Result<Self> {
        if self.size() != tau.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                got: tau.size(),
            });
        }
        Ok(Permutation {
            images: tau.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.size()];
        for (i, &s) in self.images.iter().enumerate() {
            inv[s] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// All of `S_g` in lexicographic order of image lists.
    pub fn all(g: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..g).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..g).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..g).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// Generators `(i i+1)` of `S_g`.
    pub fn adjacent_transpositions(g: usize) -> Vec<Permutation> {
        (1..g)
            .map(|i| Self::transposition(g, i, i + 1).expect("in range"))
            .collect()
    }
}

/// Cycle notation without fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.size()];
        let mut any = false;
        for start in 0..self.size() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}/{}", self.size())
    }
}

/// Derived name of the `i`-th copy (one-based) of a base generator.
pub fn copy_name(base: &str, i: usize) -> String {
    format!("{base}{i}")
}

/// The ring `A^{⊗g}` for a base context `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorPowerContext {
    base: VariableContext,
    g: usize,
    ctx: VariableContext,
}

impl TensorPowerContext {
    pub fn new(base: &VariableContext, g: usize) -> Result<Self> {
        if g == 0 {
            return Err(Error::Invalid("tensor power needs g >= 1".into()));
        }
        let copies = |names: &[String]| -> Vec<String> {
            names
                .iter()
                .flat_map(|n| (1..=g).map(move |i| copy_name(n, i)))
                .collect()
        };
        let ctx = VariableContext::new(&copies(base.even_vars()), &copies(base.odd_vars()))?;
        Ok(TensorPowerContext {
            base: base.clone(),
            g,
            ctx,
        })
    }

    pub fn base(&self) -> &VariableContext {
        &self.base
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    fn check(&self, p: &SuperPolynomial) -> Result<()> {
        if p.context().same(&self.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn check_perm(&self, sigma: &Permutation) -> Result<()> {
        if sigma.size() == self.g {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected: self.g,
                got: sigma.size(),
            })
        }
    }

    /// Puts a base element into the `i`-th tensor factor (one-based).
    pub fn embed(&self, i: usize, p: &SuperPolynomial) -> Result<SuperPolynomial> {
        if i == 0 || i > self.g {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.g,
            });
        }
        if !p.context().same(&self.base) {
            return Err(Error::ContextMismatch);
        }
        let g = self.g;
        let slot = i - 1;
        Ok(SuperPolynomial::from_terms(
            &self.ctx,
            p.terms().map(|(m, c)| {
                let mut exps = vec![0; self.ctx.num_even()];
                for (b, &e) in m.exponents().iter().enumerate() {
                    exps[b * g + slot] = e;
                }
                // ascending base order stays ascending after spreading
                let odd = m.odd_indices().fold(0u64, |acc, b| acc | 1 << (b * g + slot));
                (SuperMonomial::new(exps, odd), c.clone())
            }),
        ))
    }

    fn rename(&self, sigma: &Permutation, m: &SuperMonomial) -> (SuperMonomial, bool) {
        let g = self.g;
        let moved = |k: usize| (k / g) * g + sigma.image0(k % g);
        let mut exps = vec![0; m.exponents().len()];
        for (k, &e) in m.exponents().iter().enumerate() {
            exps[moved(k)] = e;
        }
        let seq: Vec<usize> = m.odd_indices().map(moved).collect();
        let (odd, negative) = sort_odd_sequence(&seq).expect("renaming is injective");
        (SuperMonomial::new(exps, odd), negative)
    }

    /// Renames `v_i → v_{σ(i)}` and renormalizes.
    pub fn act(&self, sigma: &Permutation, p: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.check_perm(sigma)?;
        self.check(p)?;
        Ok(SuperPolynomial::from_terms(
            &self.ctx,
            p.terms().map(|(m, c)| {
                let (m2, negative) = self.rename(sigma, m);
                (m2, if negative { -c.clone() } else { c.clone() })
            }),
        ))
    }

    /// Pullback `σ*` on a decomposable tensor of homogeneous factors:
    /// `σ*(f1 ⊗ ⋯ ⊗ fg) = ε · f_{σ(1)} ⊗ ⋯ ⊗ f_{σ(g)}` with
    /// `ε = Π_{i<j, σ(i)>σ(j)} (-1)^{|f_σ(i)|·|f_σ(j)|}`.
    ///
    /// This is computed straight from the factors, independently of [`Self::act`];
    /// the two agree through `σ* = act(σ⁻¹, ·)`.
    pub fn koszul_pullback(
        &self,
        sigma: &Permutation,
        factors: &[SuperPolynomial],
    ) -> Result<SuperPolynomial> {
        self.check_perm(sigma)?;
        if factors.len() != self.g {
            return Err(Error::SizeMismatch {
                expected: self.g,
                got: factors.len(),
            });
        }
        let mut odd = Vec::with_capacity(self.g);
        for f in factors {
            if !f.context().same(&self.base) {
                return Err(Error::ContextMismatch);
            }
            match f.parity() {
                Some(p) => odd.push(p == crate::Parity::Odd && !f.is_zero()),
                None => {
                    return Err(Error::Parity(
                        "tensor factors must be homogeneous".into(),
                    ))
                }
            }
        }
        let g = self.g;
        let mut negative = false;
        for i in 0..g {
            for j in i + 1..g {
                let (a, b) = (sigma.image0(i), sigma.image0(j));
                if a > b && odd[a] && odd[b] {
                    negative = !negative;
                }
            }
        }
        let mut out = SuperPolynomial::one(&self.ctx);
        for slot in 0..g {
            out = &out * &self.embed(slot + 1, &factors[sigma.image0(slot)])?;
        }
        Ok(if negative { -out } else { out })
    }

    /// Invariance under the adjacent transpositions, which generate `S_g`.
    pub fn is_invariant(&self, p: &SuperPolynomial) -> Result<bool> {
        self.check(p)?;
        for tau in Permutation::adjacent_transpositions(self.g) {
            if &self.act(&tau, p)? != p {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Average over the group: `(1/g!) Σ_σ act(σ, p)`.
    pub fn reynolds(&self, p: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.check(p)?;
        let perms = Permutation::all(self.g);
        let order = Rational::from_integer(perms.len().into());
        let mut acc = SuperPolynomial::zero(&self.ctx);
        for sigma in &perms {
            acc = &acc + &self.act(sigma, p)?;
        }
        Ok(acc.scale(&(Rational::one() / order)))
    }

    /// All monomials with total even degree `<= d` and at most `w` odd factors.
    pub fn monomials(&self, d: u32, w: u32) -> Vec<SuperMonomial> {
        monomials_up_to(&self.ctx, d, w)
    }

    /// Basis of the invariants with even degree `<= d` and odd degree `<= w`.
    ///
    /// Monomials are symmetrized and the results brought to reduced echelon form
    /// with graded-lex pivots; each basis element has leading coefficient 1.
    /// Returned in ascending order of leading monomial.
    pub fn invariant_basis(&self, d: u32, w: u32) -> Vec<SuperPolynomial> {
        let monos = self.monomials(d, w);
        let index = MonomialIndex::new(monos.iter().cloned());
        let mut span = Span::new(index.len());
        for m in &monos {
            let one = SuperPolynomial::from_terms(&self.ctx, [(m.clone(), Rational::one())]);
            let sym = self.orbit_sum(&one);
            if sym.is_zero() {
                continue;
            }
            let v = index.coordinates(&sym).expect("action preserves degrees");
            span.insert(&v);
        }
        let mut basis: Vec<SuperPolynomial> = span
            .rows()
            .map(|r| index.polynomial(&self.ctx, r))
            .collect();
        basis.reverse();
        basis
    }

    /// `Σ_σ act(σ, p)` without the normalizing factor.
    pub(crate) fn orbit_sum(&self, p: &SuperPolynomial) -> SuperPolynomial {
        let mut acc = SuperPolynomial::zero(&self.ctx);
        for sigma in Permutation::all(self.g) {
            acc = &acc + &self.act(&sigma, p).expect("checked context");
        }
        acc
    }
}

pub(crate) fn monomials_up_to(ctx: &VariableContext, d: u32, w: u32) -> Vec<SuperMonomial> {
    fn exps(n: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=budget {
            prefix.push(e);
            exps(n, budget - e, prefix, out);
            prefix.pop();
        }
    }
    fn subsets(n: usize, start: usize, left: u32, mask: u64, out: &mut Vec<u64>) {
        out.push(mask);
        if left == 0 {
            return;
        }
        for j in start..n {
            subsets(n, j + 1, left - 1, mask | 1 << j, out);
        }
    }
    let mut even = Vec::new();
    exps(ctx.num_even(), d, &mut Vec::new(), &mut even);
    let mut odd = Vec::new();
    subsets(ctx.num_odd(), 0, w, 0, &mut odd);
    let mut out: Vec<SuperMonomial> = even
        .iter()
        .flat_map(|e| odd.iter().map(move |&o| SuperMonomial::new(e.clone(), o)))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(header: &str, g: usize) -> TensorPowerContext {
        TensorPowerContext::new(&header.parse().unwrap(), g).unwrap()
    }

    fn p(t: &TensorPowerContext, s: &str) -> SuperPolynomial {
        SuperPolynomial::parse(t.context(), s).unwrap()
    }

    #[test]
    fn derived_context_ordering() {
        let t = tp("even z; odd t eta", 3);
        assert_eq!(t.context().even_vars(), ["z1", "z2", "z3"]);
        assert_eq!(t.context().odd_vars(), ["t1", "t2", "t3", "eta1", "eta2", "eta3"]);
    }

    #[test]
    fn permutation_parsing() {
        let s = Permutation::parse_cycles("(1 2)(3)", None).unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!((s.image(1), s.image(2), s.image(3)), (2, 1, 3));
        let c = Permutation::parse_cycles("(1,3,2)", Some(4)).unwrap();
        assert_eq!((c.image(1), c.image(3), c.image(2), c.image(4)), (3, 2, 1, 4));
        assert_eq!(c.to_string(), "(1 3 2)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(Permutation::parse_cycles("()", Some(2)).unwrap(), Permutation::identity(2));
        assert!(Permutation::parse_cycles("(1 2)(2 3)", None).is_err());
        assert!(Permutation::parse_cycles("(1 5)", Some(3)).is_err());
        assert!(Permutation::parse_cycles("(0 1)", None).is_err());
        assert!(Permutation::parse_cycles("1 2", None).is_err());
        assert!(Permutation::parse_cycles("()", None).is_err());
        assert!(Permutation::from_images(&[1, 1]).is_err());
    }

    #[test]
    fn symmetric_group_enumeration() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        let distinct: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 24);
        assert!(all[0].is_identity());
    }

    #[test]
    fn composition_convention() {
        let s = Permutation::from_images(&[2, 3, 1]).unwrap();
        let t = Permutation::from_images(&[2, 1, 3]).unwrap();
        let st = s.compose(&t).unwrap();
        // (σ∘τ)(1) = σ(τ(1)) = σ(2) = 3
        assert_eq!(st.image(1), 3);
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
    }

    #[test]
    fn embed_examples() {
        let t = tp("even z; odd t", 2);
        let base = t.base().clone();
        let z = SuperPolynomial::parse(&base, "z").unwrap();
        let th = SuperPolynomial::parse(&base, "t").unwrap();
        assert_eq!(t.embed(2, &z).unwrap(), p(&t, "z2"));
        assert_eq!(t.embed(1, &th).unwrap(), p(&t, "t1"));
        assert_eq!(t.embed(1, &(&z * &th)).unwrap(), p(&t, "z1*t1"));
        assert_eq!(
            t.embed(3, &z).unwrap_err(),
            Error::IndexOutOfRange { index: 3, max: 2 }
        );
        assert_eq!(t.embed(0, &z).unwrap_err(), Error::IndexOutOfRange { index: 0, max: 2 });
    }

    #[test]
    fn act_examples() {
        let t = tp("even z; odd t", 2);
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        assert_eq!(t.act(&swap, &p(&t, "t1*t2")).unwrap(), p(&t, "-t1*t2"));
        assert_eq!(t.act(&swap, &p(&t, "z1")).unwrap(), p(&t, "z2"));
        let x = p(&t, "3*z1^2*t2 - z2*t1*t2 + 1/2");
        assert_eq!(t.act(&Permutation::identity(2), &x).unwrap(), x);
        assert_eq!(
            t.act(&Permutation::identity(3), &x).unwrap_err(),
            Error::SizeMismatch { expected: 2, got: 3 }
        );
    }

    #[test]
    fn invariance_examples() {
        let t = tp("even z; odd t", 2);
        assert!(t.is_invariant(&p(&t, "z1 + z2")).unwrap());
        assert!(!t.is_invariant(&p(&t, "t1*t2")).unwrap());
        assert!(t.is_invariant(&p(&t, "t1*t2*z1 - t1*t2*z2")).unwrap());
    }

    #[test]
    fn reynolds_examples() {
        let t = tp("even z; odd t", 2);
        assert_eq!(t.reynolds(&p(&t, "z1")).unwrap(), p(&t, "1/2*z1 + 1/2*z2"));
        assert!(t.reynolds(&p(&t, "t1*t2")).unwrap().is_zero());
        let s1 = p(&t, "z1 + z2");
        assert_eq!(t.reynolds(&s1).unwrap(), s1);
    }

    #[test]
    fn invariant_basis_examples() {
        let t = tp("even z; odd t", 2);
        assert_eq!(t.invariant_basis(1, 0), vec![p(&t, "1"), p(&t, "z1 + z2")]);
        assert_eq!(t.invariant_basis(0, 1), vec![p(&t, "1"), p(&t, "t1 + t2")]);
        let b = t.invariant_basis(1, 2);
        assert!(b.contains(&p(&t, "z1*t1*t2 - z2*t1*t2")));
        assert!(!b.contains(&p(&t, "t1*t2")));
        assert!(b.iter().all(|x| t.is_invariant(x).unwrap()));
    }

    #[test]
    fn monomial_enumeration_counts() {
        let t = tp("even z; odd t", 3);
        // C(3+2, 2) even monomials times 1 + 3 odd subsets
        assert_eq!(t.monomials(2, 1).len(), 10 * 4);
    }
}
