//! Universal superdivisors, the classifying morphism, and the SUSY layer.
//!
//! Everything lives on one affine patch with coordinates `(z, t)` and trivialized
//! line bundles. On the product of two patches the first factor carries `z1, t1`
//! and the second `z2` with either its own odd coordinate `t2` or the conjugate
//! generator `tc`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::divisor::{AmbientRing, BaseMorphism, Superdivisor};
use crate::error::{Error, Result};
use crate::invariants::{elementary_symmetric_in, odd_symmetric_in};
use crate::superalgebra::{Rational, SuperPolynomial, VariableContext};
use crate::symmetric::{copy_name, TensorPowerContext};

pub const UNIVERSAL_EVEN: &str = "s";
pub const UNIVERSAL_ODD: &str = "sig";

/// Coordinate names of a supercurve patch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupercurvePatch {
    coordinate: String,
    odd_generator: String,
    conjugate_generator: String,
}

impl SupercurvePatch {
    pub fn new(coordinate: &str, odd_generator: &str, conjugate_generator: &str) -> Result<Self> {
        VariableContext::new(&[coordinate], &[odd_generator, conjugate_generator])?;
        Ok(SupercurvePatch {
            coordinate: coordinate.into(),
            odd_generator: odd_generator.into(),
            conjugate_generator: conjugate_generator.into(),
        })
    }

    /// The conjugate generator is named after the odd one: `t` gets `tc`.
    pub fn with_coordinates(coordinate: &str, odd_generator: &str) -> Result<Self> {
        Self::new(coordinate, odd_generator, &format!("{odd_generator}c"))
    }

    /// `z`, `t`, `tc`.
    pub fn standard() -> Self {
        Self::with_coordinates("z", "t").expect("valid names")
    }

    pub fn coordinate(&self) -> &str {
        &self.coordinate
    }

    pub fn odd_generator(&self) -> &str {
        &self.odd_generator
    }

    pub fn conjugate_generator(&self) -> &str {
        &self.conjugate_generator
    }

    /// The trivializing section `dz` of the canonical bundle.
    pub fn canonical_generator(&self) -> String {
        format!("d{}", self.coordinate)
    }

    /// Names on the `i`-th factor of a product: `z_i`, `t_i`, `tc_i`.
    pub fn factor(&self, i: usize) -> Self {
        SupercurvePatch {
            coordinate: copy_name(&self.coordinate, i),
            odd_generator: copy_name(&self.odd_generator, i),
            conjugate_generator: copy_name(&self.conjugate_generator, i),
        }
    }

    fn ring_over(&self, base: &VariableContext) -> Result<AmbientRing> {
        AmbientRing::new(base, &self.coordinate, &self.odd_generator)
    }
}

/// The patch of the conjugate supercurve: odd and conjugate generators swap
/// roles, so conjugating twice gives back the original patch.
pub fn conjugate_patch(p: &SupercurvePatch) -> SupercurvePatch {
    SupercurvePatch {
        coordinate: p.coordinate.clone(),
        odd_generator: p.conjugate_generator.clone(),
        conjugate_generator: p.odd_generator.clone(),
    }
}

/// `z1 - z2 - t1*tc` over the base `even z2; odd tc`.
pub fn universal_divisor_1(p: &SupercurvePatch) -> Result<Superdivisor> {
    let second = p.factor(2);
    let base = VariableContext::new(&[second.coordinate()], &[p.conjugate_generator()])?;
    let ring = p.factor(1).ring_over(&base)?;
    let z2 = SuperPolynomial::var(&base, second.coordinate())?;
    let tc = SuperPolynomial::var(&base, p.conjugate_generator())?;
    Superdivisor::with_ring(ring, vec![(z2, tc)])
}

/// Rewrites a polynomial in `z1` modulo the universal degree-1 divisor,
/// i.e. substitutes `z1 = z2 + t1*tc`. The result lives in the ambient ring of
/// [`universal_divisor_1`].
pub fn reduce_mod_universal(p: &SupercurvePatch, a: &SuperPolynomial) -> Result<SuperPolynomial> {
    let z1 = p.factor(1).coordinate;
    if let Some(other) = a.support().into_iter().find(|n| *n != z1) {
        return Err(Error::Invalid(format!(
            "expected a polynomial in `{z1}` only, found `{other}`"
        )));
    }
    let d = universal_divisor_1(p)?;
    let ring = d.ring();
    let ctx = ring.context();
    let zero = SuperPolynomial::zero(ctx);
    let image = SuperPolynomial::parse(
        ctx,
        &format!("{} + {}*{}", p.factor(2).coordinate, p.factor(1).odd_generator, p.conjugate_generator),
    )?;
    let assignment: BTreeMap<String, SuperPolynomial> = a
        .context()
        .vars()
        .map(|v| {
            let name = a.context().name(v).to_string();
            let value = if name == z1 { image.clone() } else { zero.clone() };
            (name, value)
        })
        .collect();
    a.substitute_into(&assignment, ctx)
}

/// `even s1..sg; odd sig1..sigg`.
pub fn universal_base(g: usize) -> VariableContext {
    let even: Vec<String> = (1..=g).map(|i| copy_name(UNIVERSAL_EVEN, i)).collect();
    let odd: Vec<String> = (1..=g).map(|i| copy_name(UNIVERSAL_ODD, i)).collect();
    VariableContext::new(&even, &odd).expect("distinct names")
}

fn universal_over(g: usize, ring: AmbientRing) -> Result<Superdivisor> {
    let base = ring.base().clone();
    let coeffs = (1..=g)
        .map(|i| {
            Ok((
                SuperPolynomial::var(&base, &copy_name(UNIVERSAL_EVEN, i))?,
                SuperPolynomial::var(&base, &copy_name(UNIVERSAL_ODD, i))?,
            ))
        })
        .collect::<Result<_>>()?;
    Superdivisor::with_ring(ring, coeffs)
}

/// `z^g - (s1 + t*sig1)*z^(g-1) + ... + (-1)^g*(sg + t*sigg)`.
pub fn universal_divisor(g: usize, p: &SupercurvePatch) -> Result<Superdivisor> {
    if g == 0 {
        return Err(Error::Invalid("the universal divisor needs g >= 1".into()));
    }
    universal_over(g, p.ring_over(&universal_base(g))?)
}

/// The universal divisor whose coordinates carry the names used by `ring`.
fn universal_like(g: usize, ring: &AmbientRing) -> Result<Superdivisor> {
    universal_over(g, ring.rebase(&universal_base(g))?)
}

/// The morphism `s_i -> a_i`, `sig_i -> b_i`, with the coefficients read off the
/// characteristic polynomial of multiplication by `z` on the quotient.
pub fn classify(d: &Superdivisor) -> Result<BaseMorphism> {
    let ring = d.ring();
    let cp = d.quotient().char_poly(&ring.z())?;
    let recovered = Superdivisor::from_defining_polynomial(ring.clone(), &cp)?;
    let mut assignment = BTreeMap::new();
    for (i, (a, b)) in recovered.coefficients().iter().enumerate() {
        assignment.insert(copy_name(UNIVERSAL_EVEN, i + 1), a.clone());
        assignment.insert(copy_name(UNIVERSAL_ODD, i + 1), b.clone());
    }
    BaseMorphism::new(&universal_base(d.degree()), d.base(), &assignment)
}

/// Outcome of an exact comparison, with both sides rendered for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub holds: bool,
    pub expected: String,
    pub actual: String,
}

impl Check {
    fn compare<T: PartialEq + std::fmt::Display>(expected: &T, actual: &T) -> Self {
        Check {
            holds: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

/// Pulls the universal divisor back along `classify(d)` and compares with `d`.
pub fn roundtrip_divisor(d: &Superdivisor) -> Result<Check> {
    let phi = classify(d)?;
    let back = universal_like(d.degree(), d.ring())?.pullback(&phi)?;
    Ok(Check::compare(d, &back))
}

/// Classifies the pullback of the universal divisor along `phi` and compares
/// generator images with `phi`. The source of `phi` must be a universal base.
pub fn roundtrip_morphism(phi: &BaseMorphism, p: &SupercurvePatch) -> Result<Check> {
    let g = phi.source().num_even();
    if *phi.source() != universal_base(g) {
        return Err(Error::Invalid(
            "morphism source is not `even s1..sg; odd sig1..sigg`".into(),
        ));
    }
    let d = universal_over(g, p.ring_over(&universal_base(g))?)?.pullback(phi)?;
    let back = classify(&d)?;
    for (name, image) in phi.assignment() {
        let got = back.image(&name).expect("same source");
        if *got != image {
            return Ok(Check {
                holds: false,
                expected: format!("{name} -> {image}"),
                actual: format!("{name} -> {got}"),
            });
        }
    }
    Ok(Check {
        holds: true,
        expected: format!("{}", MorphismText(phi)),
        actual: format!("{}", MorphismText(&back)),
    })
}

/// Both directions of the correspondence between divisors and classifying morphisms.
pub fn roundtrip_check(d: &Superdivisor) -> Result<bool> {
    let patch = SupercurvePatch::with_coordinates(d.ring().coordinate(), d.ring().odd_coordinate())?;
    Ok(roundtrip_divisor(d)?.holds && roundtrip_morphism(&classify(d)?, &patch)?.holds)
}

/// `{s1 -> a1, sig1 -> b1, ...}`
pub struct MorphismText<'a>(pub &'a BaseMorphism);

impl std::fmt::Display for MorphismText<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let src = self.0.source();
        write!(f, "{{")?;
        for (k, v) in src.vars().enumerate() {
            let name = src.name(v);
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{name} -> {}", self.0.image(name).expect("source generator"))?;
        }
        write!(f, "}}")
    }
}

/// `z1 - z2 - t1*t2` over the base `even z2; odd t2`.
pub fn superdiagonal(p: &SupercurvePatch) -> Result<Superdivisor> {
    let second = p.factor(2);
    let base = VariableContext::new(&[second.coordinate()], &[second.odd_generator()])?;
    let ring = p.factor(1).ring_over(&base)?;
    let z2 = SuperPolynomial::var(&base, second.coordinate())?;
    let t2 = SuperPolynomial::var(&base, second.odd_generator())?;
    Superdivisor::with_ring(ring, vec![(z2, t2)])
}

/// A spin structure on a patch: `t (x) t -> u*dz` for a nonzero scalar `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinStructure {
    patch: SupercurvePatch,
    unit: Rational,
}

impl SpinStructure {
    pub fn new(patch: SupercurvePatch, unit: Rational) -> Result<Self> {
        if unit.is_zero() {
            return Err(Error::ZeroUnit);
        }
        Ok(SpinStructure { patch, unit })
    }

    pub fn patch(&self) -> &SupercurvePatch {
        &self.patch
    }

    pub fn unit(&self) -> &Rational {
        &self.unit
    }

    /// `tc -> u*t` from `even z; odd tc` to `even z; odd t` with the given names.
    fn iso_between(&self, z: &str, theta: &str, conj: &str) -> Result<SpinIso> {
        let conj_ctx = VariableContext::new(&[z], &[conj])?;
        let ctx = VariableContext::new(&[z], &[theta])?;
        let theta_p = SuperPolynomial::var(&ctx, theta)?;
        let conj_p = SuperPolynomial::var(&conj_ctx, conj)?;
        let forward = BaseMorphism::new(
            &conj_ctx,
            &ctx,
            &BTreeMap::from([(conj.to_string(), theta_p.scale(&self.unit))]),
        )?;
        let inverse = BaseMorphism::new(
            &ctx,
            &conj_ctx,
            &BTreeMap::from([(theta.to_string(), conj_p.scale(&(Rational::one() / &self.unit)))]),
        )?;
        Ok(SpinIso { forward, inverse })
    }
}

/// The patch isomorphism with the conjugate supercurve induced by a spin structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinIso {
    /// `z -> z`, `tc -> u*t`.
    pub forward: BaseMorphism,
    /// `z -> z`, `t -> (1/u)*tc`.
    pub inverse: BaseMorphism,
}

pub fn spin_iso(s: &SpinStructure) -> Result<SpinIso> {
    let p = &s.patch;
    s.iso_between(p.coordinate(), p.odd_generator(), p.conjugate_generator())
}

#[derive(Debug, Clone)]
pub struct SpinPullbackReport {
    pub unit: Rational,
    /// Universal degree-1 divisor pulled back along `tc -> u*t2`.
    pub pulled_back: Superdivisor,
    pub superdiagonal: Superdivisor,
    /// The superdiagonal after the odd-coordinate rescaling `t2 -> u*t2`.
    pub rescaled: Superdivisor,
    pub rescaling: String,
    /// Equality with the superdiagonal itself.
    pub literal: bool,
    /// Equality with the rescaled superdiagonal.
    pub holds: bool,
}

/// Pulls the universal degree-1 divisor back along the spin isomorphism on the
/// second factor and compares it with the superdiagonal.
pub fn verify_theorem5(s: &SpinStructure) -> Result<SpinPullbackReport> {
    let p = s.patch();
    let second = p.factor(2);
    let iso = s.iso_between(second.coordinate(), second.odd_generator(), p.conjugate_generator())?;
    let pulled_back = universal_divisor_1(p)?.pullback(&iso.forward)?;
    let diag = superdiagonal(p)?;
    let t2 = second.odd_generator();
    let base = diag.base().clone();
    let rescale = BaseMorphism::new(
        &base,
        &base,
        &BTreeMap::from([(t2.to_string(), SuperPolynomial::var(&base, t2)?.scale(&s.unit))]),
    )?;
    let rescaled = diag.pullback(&rescale)?;
    Ok(SpinPullbackReport {
        unit: s.unit.clone(),
        literal: pulled_back == diag,
        holds: pulled_back == rescaled,
        rescaling: format!("{t2} -> {}*{t2}", s.unit),
        pulled_back,
        superdiagonal: diag,
        rescaled,
    })
}

#[derive(Debug, Clone)]
pub struct PointsProductReport {
    pub g: usize,
    /// `prod_i (z - z_i - t*tc_i)`, expanded.
    pub product: SuperPolynomial,
    /// The universal divisor pulled back along `s_i -> e_i`, `sig_i -> ς_i`.
    pub universal: SuperPolynomial,
    pub equal: bool,
    /// Every coefficient is invariant under permuting the pairs `(z_i, tc_i)`.
    pub coefficients_invariant: bool,
}

impl PointsProductReport {
    pub fn holds(&self) -> bool {
        self.equal && self.coefficients_invariant
    }
}

fn points_product(ring: &AmbientRing, tp: &TensorPowerContext, scale: &Rational) -> Result<SuperPolynomial> {
    let ctx = tp.context();
    let mut product = SuperPolynomial::one(ring.context());
    for i in 0..tp.g() {
        let zi = SuperPolynomial::generator(ctx, crate::superalgebra::Var::Even(i));
        let ti = SuperPolynomial::generator(ctx, crate::superalgebra::Var::Odd(i)).scale(scale);
        let point = ring.z() - ring.lift(&zi)? - ring.theta() * ring.lift(&ti)?;
        product = product * point;
    }
    Ok(product)
}

fn symmetric_classifier(tp: &TensorPowerContext, scale: &Rational) -> Result<BaseMorphism> {
    let g = tp.g();
    let mut assignment = BTreeMap::new();
    for h in 1..=g {
        assignment.insert(copy_name(UNIVERSAL_EVEN, h), elementary_symmetric_in(tp, h)?);
        assignment.insert(
            copy_name(UNIVERSAL_ODD, h),
            odd_symmetric_in(tp, h, 0)?.scale(scale),
        );
    }
    BaseMorphism::new(&universal_base(g), tp.context(), &assignment)
}

/// Expands `prod_i (z - z_i - t*tc_i)` over the `g`-th tensor power of
/// `even z; odd tc` and compares it with the universal divisor evaluated at the
/// even and odd symmetric functions.
pub fn verify_points_product(g: usize, p: &SupercurvePatch) -> Result<PointsProductReport> {
    let factor = VariableContext::new(&[p.coordinate()], &[p.conjugate_generator()])?;
    let tp = TensorPowerContext::new(&factor, g)?;
    let ring = p.ring_over(tp.context())?;
    let one = Rational::one();
    let product = points_product(&ring, &tp, &one)?;
    let universal = universal_divisor(g, p)?.pullback(&symmetric_classifier(&tp, &one)?)?;
    let mut coefficients_invariant = true;
    for (a, b) in universal.coefficients() {
        coefficients_invariant &= tp.is_invariant(a)? && tp.is_invariant(b)?;
    }
    let universal = universal.defining_polynomial();
    Ok(PointsProductReport {
        g,
        equal: product == universal,
        product,
        universal,
        coefficients_invariant,
    })
}

#[derive(Debug, Clone)]
pub struct SpinCorrespondenceReport {
    pub g: usize,
    pub unit: Rational,
    /// `prod_i (z - z_i - u*t*t_i)` equals the transported universal divisor.
    pub transported: Check,
    /// Classifying the product recovers `s_i -> e_i`, `sig_i -> u*ς_i`.
    pub classified: Check,
}

impl SpinCorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.transported.holds && self.classified.holds
    }
}

/// The degree-`g` correspondence on a patch with a spin structure, where the
/// conjugate generators of the points are replaced by `u*t_i`.
pub fn verify_spin_correspondence(s: &SpinStructure, g: usize) -> Result<SpinCorrespondenceReport> {
    let p = s.patch();
    let factor = VariableContext::new(&[p.coordinate()], &[p.odd_generator()])?;
    let tp = TensorPowerContext::new(&factor, g)?;
    let ring = p.ring_over(tp.context())?;
    let product = points_product(&ring, &tp, &s.unit)?;
    let phi = symmetric_classifier(&tp, &s.unit)?;
    let transported = universal_divisor(g, p)?.pullback(&phi)?;
    let transported_check = Check::compare(&product, &transported.defining_polynomial());
    let d = Superdivisor::from_defining_polynomial(ring, &product)?;
    let back = classify(&d)?;
    Ok(SpinCorrespondenceReport {
        g,
        unit: s.unit.clone(),
        transported: transported_check,
        classified: Check {
            holds: back == phi,
            expected: MorphismText(&phi).to_string(),
            actual: MorphismText(&back).to_string(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::q;

    #[test]
    fn patches() {
        let p = SupercurvePatch::standard();
        let c = conjugate_patch(&p);
        assert_eq!(c.odd_generator(), "tc");
        assert_eq!(c.coordinate(), "z");
        assert_eq!(conjugate_patch(&c), p);
        let other = SupercurvePatch::with_coordinates("w", "u").unwrap();
        assert_ne!(other.conjugate_generator(), p.conjugate_generator());
        assert_eq!(p.canonical_generator(), "dz");
        assert!(SupercurvePatch::new("z", "t", "t").is_err());
    }

    #[test]
    fn universal_degree_one() {
        let p = SupercurvePatch::standard();
        let d = universal_divisor_1(&p).unwrap();
        assert_eq!(d.to_string(), "1*z1 - 1*z2 - 1*t1*tc");
        assert_eq!(d.reduce().to_string(), "1*z1 - 1*z2");
        let base = d.base().clone();
        let target: VariableContext = "even c".parse().unwrap();
        let phi = BaseMorphism::new(
            &base,
            &target,
            &BTreeMap::from([
                ("z2".to_string(), SuperPolynomial::var(&target, "c").unwrap()),
                ("tc".to_string(), SuperPolynomial::zero(&target)),
            ]),
        )
        .unwrap();
        assert_eq!(d.pullback(&phi).unwrap().to_string(), "1*z1 - 1*c");
    }

    #[test]
    fn reduce_mod_universal_examples() {
        let p = SupercurvePatch::standard();
        let ctx: VariableContext = "even z1".parse().unwrap();
        let r = |s: &str| reduce_mod_universal(&p, &SuperPolynomial::parse(&ctx, s).unwrap()).unwrap();
        let amb = universal_divisor_1(&p).unwrap().ring().context().clone();
        assert_eq!(r("z1^2"), SuperPolynomial::parse(&amb, "z2^2 + 2*t1*tc*z2").unwrap());
        assert_eq!(r("5"), SuperPolynomial::integer(&amb, 5));
        assert_eq!(r("z1"), SuperPolynomial::parse(&amb, "z2 + t1*tc").unwrap());
    }

    #[test]
    fn universal_degree_g() {
        let p = SupercurvePatch::standard();
        assert_eq!(
            universal_divisor(1, &p).unwrap().to_string(),
            "1*z - 1*s1 - 1*t*sig1"
        );
        let u2 = universal_divisor(2, &p).unwrap();
        let expect =
            SuperPolynomial::parse(u2.ring().context(), "z^2 - s1*z - t*sig1*z + s2 + t*sig2").unwrap();
        assert_eq!(u2.defining_polynomial(), expect);
        assert!(classify(&u2).unwrap().is_identity());
    }

    #[test]
    fn classify_degree_one() {
        let base: VariableContext = "even a; odd b".parse().unwrap();
        let d = Superdivisor::parse(AmbientRing::with_defaults(&base).unwrap(), &[("a", "b")]).unwrap();
        let phi = classify(&d).unwrap();
        assert_eq!(phi.image("s1").unwrap().to_string(), "1*a");
        assert_eq!(phi.image("sig1").unwrap().to_string(), "1*b");
        assert!(roundtrip_check(&d).unwrap());
    }

    #[test]
    fn classify_rational_degree_two() {
        let base: VariableContext = "even a; odd b c".parse().unwrap();
        let d = Superdivisor::parse(
            AmbientRing::with_defaults(&base).unwrap(),
            &[("1/2", "b"), ("a^2 - 3", "2*c")],
        )
        .unwrap();
        let phi = classify(&d).unwrap();
        assert_eq!(phi.image("s1").unwrap().to_string(), "1/2");
        assert_eq!(phi.image("s2").unwrap().to_string(), "1*a^2 - 3");
        assert_eq!(phi.image("sig1").unwrap().to_string(), "1*b");
        assert_eq!(phi.image("sig2").unwrap().to_string(), "2*c");
        assert!(roundtrip_check(&d).unwrap());
    }

    #[test]
    fn superdiagonal_and_spin() {
        let p = SupercurvePatch::standard();
        let diag = superdiagonal(&p).unwrap();
        assert_eq!(diag.to_string(), "1*z1 - 1*z2 - 1*t1*t2");
        assert_eq!(diag.reduce().to_string(), "1*z1 - 1*z2");
        assert_eq!(diag.degree(), 1);

        assert_eq!(SpinStructure::new(p.clone(), q(0)).unwrap_err(), Error::ZeroUnit);
        let s1 = SpinStructure::new(p.clone(), q(1)).unwrap();
        let iso = spin_iso(&s1).unwrap();
        assert_eq!(iso.forward.image("tc").unwrap().to_string(), "1*t");
        let s2 = SpinStructure::new(p.clone(), q(2)).unwrap();
        let iso = spin_iso(&s2).unwrap();
        assert_eq!(iso.forward.image("tc").unwrap().to_string(), "2*t");
        assert_eq!(iso.inverse.image("t").unwrap().to_string(), "1/2*tc");
        assert!(iso.forward.then(&iso.inverse).unwrap().is_identity());
        assert!(iso.inverse.then(&iso.forward).unwrap().is_identity());

        let r1 = verify_theorem5(&s1).unwrap();
        assert!(r1.literal && r1.holds);
        let r2 = verify_theorem5(&s2).unwrap();
        assert!(!r2.literal && r2.holds);
        assert_eq!(r2.rescaling, "t2 -> 2*t2");
        assert_eq!(r2.pulled_back.to_string(), "1*z1 - 1*z2 - 2*t1*t2");
    }

    #[test]
    fn points_product_and_degree_one() {
        let p = SupercurvePatch::standard();
        for g in 1..=3 {
            assert!(verify_points_product(g, &p).unwrap().holds(), "g = {g}");
        }
        // degree 1 universal divisor on the first factor, evaluated at (z2, tc)
        let first = SupercurvePatch::new("z1", "t1", "tc").unwrap();
        let u = universal_divisor(1, &first).unwrap();
        let target = universal_divisor_1(&p).unwrap().base().clone();
        let phi = BaseMorphism::new(
            u.base(),
            &target,
            &BTreeMap::from([
                ("s1".to_string(), SuperPolynomial::var(&target, "z2").unwrap()),
                ("sig1".to_string(), SuperPolynomial::var(&target, "tc").unwrap()),
            ]),
        )
        .unwrap();
        assert_eq!(u.pullback(&phi).unwrap(), universal_divisor_1(&p).unwrap());
    }

    #[test]
    fn spin_correspondence() {
        let p = SupercurvePatch::standard();
        for u in [1, 3, -2] {
            let s = SpinStructure::new(p.clone(), q(u)).unwrap();
            for g in 1..=3 {
                assert!(verify_spin_correspondence(&s, g).unwrap().holds());
            }
        }
    }
}
