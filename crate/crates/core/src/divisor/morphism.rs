use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::superalgebra::{resolve_image, SuperPolynomial, VariableContext};

/// A parity-preserving algebra morphism between free supercommutative algebras,
/// given by the images of the source generators.
///
/// Read geometrically it is a morphism of affine bases in the opposite direction;
/// pulling a divisor back along it applies the morphism to the coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseMorphism {
    source: VariableContext,
    target: VariableContext,
    // indexed like `source.vars()`: even generators, then odd ones
    images: Vec<SuperPolynomial>,
}

impl BaseMorphism {
    /// Unassigned source generators map to the generator of the same name in `target`.
    pub fn new(
        source: &VariableContext,
        target: &VariableContext,
        assignment: &BTreeMap<String, SuperPolynomial>,
    ) -> Result<Self> {
        for name in assignment.keys() {
            source.var(name)?;
        }
        let images = source
            .vars()
            .map(|var| {
                let name = source.name(var);
                resolve_image(name, var.parity(), assignment.get(name), target)
            })
            .collect::<Result<_>>()?;
        Ok(BaseMorphism {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// Assignment given as text in the target context.
    pub fn parse(
        source: &VariableContext,
        target: &VariableContext,
        assignment: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let parsed = assignment
            .iter()
            .map(|(k, v)| Ok((k.clone(), SuperPolynomial::parse(target, v)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Self::new(source, target, &parsed)
    }

    pub fn identity(ctx: &VariableContext) -> Self {
        Self::new(ctx, ctx, &BTreeMap::new()).expect("identity is parity-preserving")
    }

    pub fn source(&self) -> &VariableContext {
        &self.source
    }

    pub fn target(&self) -> &VariableContext {
        &self.target
    }

    pub fn image(&self, name: &str) -> Option<&SuperPolynomial> {
        let var = self.source.lookup(name)?;
        let k = match var {
            crate::superalgebra::Var::Even(i) => i,
            crate::superalgebra::Var::Odd(j) => self.source.num_even() + j,
        };
        Some(&self.images[k])
    }

    /// Images keyed by source generator name.
    pub fn assignment(&self) -> BTreeMap<String, SuperPolynomial> {
        self.source
            .vars()
            .map(|v| self.source.name(v).to_string())
            .zip(self.images.iter().cloned())
            .collect()
    }

    pub fn apply(&self, p: &SuperPolynomial) -> Result<SuperPolynomial> {
        if !p.context().same(&self.source) {
            return Err(Error::ContextMismatch);
        }
        let (even, odd) = self.images.split_at(self.source.num_even());
        Ok(p.substitute_images(even, odd, &self.target))
    }

    /// `self` followed by `next`: the morphism `x ↦ next(self(x))`.
    ///
    /// With this convention `pullback(D, a.then(b)) = pullback(pullback(D, a), b)`.
    pub fn then(&self, next: &BaseMorphism) -> Result<BaseMorphism> {
        if !self.target.same(&next.source) {
            return Err(Error::ContextMismatch);
        }
        Ok(BaseMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            images: self
                .images
                .iter()
                .map(|p| next.apply(p))
                .collect::<Result<_>>()?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source.same(&self.target) && *self == Self::identity(&self.source)
    }
}
